use super::point::Point;
use super::polyline::Polyline;
use super::GeomError;
use crate::scalar::Scalar;
use std::collections::HashSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve<T> {
    pub id: String,
    pub polyline: Polyline<T>,
}

/// Curves plus isolated points: the geometric form of a drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSet<T> {
    curves: Vec<Curve<T>>,
    isolated: Vec<(String, Point<T>)>,
}

impl<T: Scalar> CurveSet<T> {
    /// Checks id uniqueness. Placement of isolated points is checked during
    /// planarization, where the segments are at hand.
    pub fn new(curves: Vec<Curve<T>>, isolated: Vec<(String, Point<T>)>) -> Result<Self, GeomError> {
        let mut seen = HashSet::new();
        for id in curves.iter().map(|c| &c.id).chain(isolated.iter().map(|p| &p.0)) {
            if !seen.insert(id.clone()) {
                return Err(GeomError::DuplicateId(id.clone()));
            }
        }
        Ok(CurveSet { curves, isolated })
    }

    pub fn curves(&self) -> &[Curve<T>] {
        &self.curves
    }

    pub fn isolated(&self) -> &[(String, Point<T>)] {
        &self.isolated
    }

    pub fn curve(&self, id: &str) -> Option<&Curve<T>> {
        self.curves.iter().find(|c| c.id == id)
    }

    pub fn translate(&self, d: &Point<T>) -> Self {
        CurveSet {
            curves: self
                .curves
                .iter()
                .map(|c| Curve {
                    id: c.id.clone(),
                    polyline: c.polyline.translate(d),
                })
                .collect(),
            isolated: self.isolated.iter().map(|(i, p)| (i.clone(), p.add(d))).collect(),
        }
    }

    /// Copy without the named curves.
    pub fn without(&self, ids: &[&str]) -> Self {
        CurveSet {
            curves: self
                .curves
                .iter()
                .filter(|c| !ids.contains(&c.id.as_str()))
                .cloned()
                .collect(),
            isolated: self.isolated.clone(),
        }
    }
}
