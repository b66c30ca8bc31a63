use super::point::{cross, dot, orient, Orientation, Point};
use crate::scalar::Scalar;

/// A closed straight segment between two distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment<T> {
    pub a: Point<T>,
    pub b: Point<T>,
}

impl<T: Scalar> Segment<T> {
    pub fn new(a: Point<T>, b: Point<T>) -> Self {
        Segment { a, b }
    }

    /// Position of `p` (assumed on the segment's line) along the segment,
    /// monotone in the distance from `a`.
    pub fn key(&self, p: &Point<T>) -> T {
        dot(&p.sub(&self.a), &self.b.sub(&self.a))
    }

    /// Whether `p` lies on the closed segment.
    pub fn contains(&self, p: &Point<T>) -> bool {
        if orient(&self.a, &self.b, p) != Orientation::Collinear {
            return false;
        }
        let k = self.key(p);
        k >= T::zero() && k <= self.key(&self.b)
    }

    fn bbox_disjoint(&self, o: &Self) -> bool {
        let (lx, hx) = minmax(&self.a.x, &self.b.x);
        let (ly, hy) = minmax(&self.a.y, &self.b.y);
        let (olx, ohx) = minmax(&o.a.x, &o.b.x);
        let (oly, ohy) = minmax(&o.a.y, &o.b.y);
        hx < olx || ohx < lx || hy < oly || ohy < ly
    }
}

fn minmax<'a, T: PartialOrd>(a: &'a T, b: &'a T) -> (&'a T, &'a T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Classification of how two segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Intersection<T> {
    NoIntersection,
    /// A single point interior to both segments.
    ProperCrossing(Point<T>),
    /// The segments meet only in a point that is an endpoint of both.
    SharedEndpoint(Point<T>),
    /// Collinear overlap, or an endpoint of one touching the other's interior.
    Degenerate,
}

/// Exact intersection classification of two segments.
pub fn segment_intersection<T: Scalar>(s: &Segment<T>, t: &Segment<T>) -> Intersection<T> {
    if s.bbox_disjoint(t) {
        return Intersection::NoIntersection;
    }
    let o1 = orient(&s.a, &s.b, &t.a).sign();
    let o2 = orient(&s.a, &s.b, &t.b).sign();
    let o3 = orient(&t.a, &t.b, &s.a).sign();
    let o4 = orient(&t.a, &t.b, &s.b).sign();
    if o1 == 0 && o2 == 0 {
        return collinear(s, t);
    }
    if o1 * o2 > 0 || o3 * o4 > 0 {
        return Intersection::NoIntersection;
    }
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        let d = s.b.sub(&s.a);
        let e = t.b.sub(&t.a);
        let num = cross(&t.a.sub(&s.a), &e);
        let den = cross(&d, &e);
        let p = s.a.add(&d.scale(&(num / den)));
        return Intersection::ProperCrossing(p);
    }
    // Exactly one touching point, which is an endpoint of at least one segment.
    let p = if o1 == 0 {
        t.a.clone()
    } else if o2 == 0 {
        t.b.clone()
    } else if o3 == 0 {
        s.a.clone()
    } else {
        s.b.clone()
    };
    let end_s = p == s.a || p == s.b;
    let end_t = p == t.a || p == t.b;
    if end_s && end_t {
        Intersection::SharedEndpoint(p)
    } else {
        Intersection::Degenerate
    }
}

fn collinear<T: Scalar>(s: &Segment<T>, t: &Segment<T>) -> Intersection<T> {
    // Project onto s's direction; s spans [0, ks].
    let ks = s.key(&s.b);
    let (k1, k2) = (s.key(&t.a), s.key(&t.b));
    let (lo, hi) = if k1 <= k2 { (k1, k2) } else { (k2, k1) };
    let zero = T::zero();
    if hi < zero || lo > ks {
        return Intersection::NoIntersection;
    }
    if hi == zero {
        return Intersection::SharedEndpoint(s.a.clone());
    }
    if lo == ks {
        return Intersection::SharedEndpoint(s.b.clone());
    }
    Intersection::Degenerate
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment<Rational> {
        Segment::new(Point::new(int(a.0), int(a.1)), Point::new(int(b.0), int(b.1)))
    }

    #[test]
    fn symmetric_x_crosses_at_center() {
        let r = segment_intersection(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0)));
        assert_eq!(r, Intersection::ProperCrossing(Point::new(int(1), int(1))));
    }

    #[test]
    fn disjoint_collinear() {
        let r = segment_intersection(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 0)));
        assert_eq!(r, Intersection::NoIntersection);
    }

    #[test]
    fn endpoint_on_interior_is_degenerate() {
        let r = segment_intersection(&seg((0, 0), (2, 0)), &seg((1, 0), (1, 1)));
        assert_eq!(r, Intersection::Degenerate);
    }

    #[test]
    fn touching_collinear_ends_share_endpoint() {
        let r = segment_intersection(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0)));
        assert_eq!(r, Intersection::SharedEndpoint(Point::new(int(1), int(0))));
        let r = segment_intersection(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0)));
        assert_eq!(r, Intersection::Degenerate);
    }

    #[test]
    fn corner_contact_is_shared_endpoint() {
        let r = segment_intersection(&seg((0, 0), (1, 1)), &seg((1, 1), (2, 0)));
        assert_eq!(r, Intersection::SharedEndpoint(Point::new(int(1), int(1))));
    }

    #[test]
    fn works_with_floats() {
        let s = Segment::new(Point::new(0.0f64, 0.0), Point::new(2.0, 2.0));
        let t = Segment::new(Point::new(0.0f64, 2.0), Point::new(2.0, 0.0));
        assert_eq!(
            segment_intersection(&s, &t),
            Intersection::ProperCrossing(Point::new(1.0, 1.0))
        );
    }
}
