use crate::geom::{Curve, Point, Polyline};
use crate::{Rational, RationalPoint};

pub(crate) fn r(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

pub(crate) fn pt(x: i64, y: i64) -> RationalPoint {
    Point::new(r(x), r(y))
}

pub(crate) fn curve(id: &str, pts: &[(i64, i64)]) -> Curve<Rational> {
    curve_r(id, pts.iter().map(|&(x, y)| pt(x, y)).collect())
}

/// Builds an open curve; consecutive duplicates and collinear interior
/// points are dropped so that callers can write paths loosely.
pub(crate) fn curve_r(id: &str, pts: Vec<RationalPoint>) -> Curve<Rational> {
    let mut clean: Vec<RationalPoint> = Vec::with_capacity(pts.len());
    for p in pts {
        if clean.last() == Some(&p) {
            continue;
        }
        if clean.len() >= 2 {
            let a = &clean[clean.len() - 2];
            let b = &clean[clean.len() - 1];
            let collinear = crate::geom::cross(&b.sub(a), &p.sub(b)) == r(0)
                && crate::geom::dot(&b.sub(a), &p.sub(b)) > r(0);
            if collinear {
                clean.pop();
            }
        }
        clean.push(p);
    }
    Curve {
        id: id.to_string(),
        polyline: Polyline::new(clean, false)
            .unwrap_or_else(|e| panic!("layout produced an invalid polyline for {id}: {e}")),
    }
}
