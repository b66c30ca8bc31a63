use crate::scalar::{sign, Scalar};

/// A point in the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Point::new(self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Point::new(self.x.clone() + o.x.clone(), self.y.clone() + o.y.clone())
    }

    pub fn scale(&self, t: &T) -> Self {
        Point::new(self.x.clone() * t.clone(), self.y.clone() * t.clone())
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        ]
    }
}

/// `a.x * b.y - a.y * b.x`.
pub fn cross<T: Scalar>(a: &Point<T>, b: &Point<T>) -> T {
    a.x.clone() * b.y.clone() - a.y.clone() * b.x.clone()
}

pub fn dot<T: Scalar>(a: &Point<T>, b: &Point<T>) -> T {
    a.x.clone() * b.x.clone() + a.y.clone() * b.y.clone()
}

/// Turn direction of the triangle `p q r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    /// -1, 0 or +1.
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// Sign of the signed area of triangle `p q r`.
pub fn orient<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Orientation {
    match sign(&cross(&q.sub(p), &r.sub(p))) {
        1 => Orientation::CounterClockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

/// Compares two nonzero direction vectors by angle, counterclockwise from
/// the positive x axis.
pub fn angle_cmp<T: Scalar>(a: &Point<T>, b: &Point<T>) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let half = |d: &Point<T>| {
        let z = T::zero();
        if d.y > z || (d.y == z && d.x > z) {
            0
        } else {
            1
        }
    };
    match half(a).cmp(&half(b)) {
        Ordering::Equal => match sign(&cross(a, b)) {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        },
        o => o,
    }
}
