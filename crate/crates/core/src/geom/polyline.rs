use super::point::Point;
use super::segment::{segment_intersection, Intersection, Segment};
use super::GeomError;
use crate::scalar::Scalar;

/// A simple open arc or simple closed curve made of straight pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyline<T> {
    points: Vec<Point<T>>,
    closed: bool,
}

impl<T: Scalar> Polyline<T> {
    /// Validates point count, distinct consecutive points and the absence of
    /// self-intersections.
    pub fn new(points: Vec<Point<T>>, closed: bool) -> Result<Self, GeomError> {
        let need = if closed { 3 } else { 2 };
        if points.len() < need {
            return Err(GeomError::InvalidPolyline(format!(
                "{} points given, at least {need} required",
                points.len()
            )));
        }
        let pl = Polyline { points, closed };
        let segs = pl.segments();
        for (i, s) in segs.iter().enumerate() {
            if s.a == s.b {
                return Err(GeomError::InvalidPolyline(format!(
                    "repeated consecutive point at index {i}"
                )));
            }
        }
        let n = segs.len();
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (closed && i == 0 && j == n - 1);
                let r = segment_intersection(&segs[i], &segs[j]);
                let ok = match r {
                    Intersection::NoIntersection => !adjacent,
                    Intersection::SharedEndpoint(_) => adjacent,
                    _ => false,
                };
                if !ok {
                    return Err(GeomError::InvalidPolyline(format!(
                        "segments {i} and {j} intersect"
                    )));
                }
            }
        }
        Ok(pl)
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Segments in order; closed curves include the closing segment.
    pub fn segments(&self) -> Vec<Segment<T>> {
        let n = self.points.len();
        let m = if self.closed { n } else { n - 1 };
        (0..m)
            .map(|i| Segment::new(self.points[i].clone(), self.points[(i + 1) % n].clone()))
            .collect()
    }

    /// Translated copy.
    pub fn translate(&self, d: &Point<T>) -> Self {
        Polyline {
            points: self.points.iter().map(|p| p.add(d)).collect(),
            closed: self.closed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn pts(v: &[(i64, i64)]) -> Vec<Point<Rational>> {
        v.iter().map(|&(x, y)| Point::new(int(x), int(y))).collect()
    }

    #[test]
    fn accepts_simple_shapes() {
        assert!(Polyline::new(pts(&[(0, 0), (1, 0)]), false).is_ok());
        assert!(Polyline::new(pts(&[(0, 0), (1, 0), (0, 1)]), true).is_ok());
        assert!(Polyline::new(pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]), true).is_ok());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Polyline::new(pts(&[(0, 0)]), false).is_err());
        assert!(Polyline::new(pts(&[(0, 0), (1, 0)]), true).is_err());
        assert!(Polyline::new(pts(&[(0, 0), (0, 0), (1, 0)]), false).is_err());
        // bow tie
        assert!(Polyline::new(pts(&[(0, 0), (2, 2), (2, 0), (0, 2)]), true).is_err());
        // folds back on itself
        assert!(Polyline::new(pts(&[(0, 0), (2, 0), (1, 0)]), false).is_err());
        // open curve returning to its start
        assert!(Polyline::new(pts(&[(0, 0), (2, 0), (2, 2), (0, 0)]), false).is_err());
    }
}
