use super::{Arrangement, PseudocircleError};
use crate::drawing::FaceId;
use serde::Serialize;

/// Partition of the circles by the number of times σ crosses them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CircleClassification {
    pub c0: Vec<usize>,
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
}

impl CircleClassification {
    /// 0, 1 or 2 for circle `i`.
    pub fn class_of(&self, i: usize) -> u8 {
        if self.c1.contains(&i) {
            1
        } else if self.c2.contains(&i) {
            2
        } else {
            0
        }
    }

    /// Circles that can still cut off cells, in scan order.
    fn scan(&self, order: ScanOrder) -> Vec<usize> {
        let mut s: Vec<usize> = self.c0.iter().chain(&self.c1).copied().collect();
        s.sort_unstable();
        if order == ScanOrder::Descending {
            s.reverse();
        }
        s
    }
}

/// Sorts circles into C0, C1 and C2.
pub fn classify(a: &Arrangement) -> Result<CircleClassification, PseudocircleError> {
    let mut cls = CircleClassification::default();
    for (i, &k) in a.sigma_crossings().iter().enumerate() {
        match k {
            0 => cls.c0.push(i),
            1 => cls.c1.push(i),
            2 => cls.c2.push(i),
            _ => return Err(PseudocircleError::TooManyCrossings(a.circle_id(i).to_string(), k)),
        }
        if a.inside(a.v_face(), i) != (k == 1) {
            return Err(PseudocircleError::InconsistentSides(a.circle_id(i).to_string()));
        }
    }
    Ok(cls)
}

/// Faces an extension provably cannot enter. σ itself always belongs to
/// the region; it is modelled by never letting adjacency use σ's edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub faces: Vec<bool>,
    /// Number of growth steps taken so far.
    pub iteration: usize,
}

impl Region {
    pub fn contains(&self, f: FaceId) -> bool {
        self.faces[f]
    }

    pub fn len(&self) -> usize {
        self.faces.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Face ids in the region, ascending.
    pub fn face_ids(&self) -> Vec<FaceId> {
        (0..self.faces.len()).filter(|&f| self.faces[f]).collect()
    }
}

/// Result of [`initial_region`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitialRegion {
    Region(Region),
    Infeasible,
}

/// Result of one [`grow`] call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowStep {
    /// The region after cutting off the unreachable cells of one circle.
    Grown { region: Region, circle: usize },
    Fixpoint,
    /// `v` (or `u`) was enclosed while growing along `circle`.
    Infeasible { circle: usize },
}

/// Circle order for [`grow`]. The decision does not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScanOrder {
    #[default]
    Ascending,
    Descending,
}

/// Connected components of the faces outside `r`, adjacent through edges
/// that are neither on σ nor rejected by `blocked`. Faces in `r` get
/// `usize::MAX`.
pub(crate) fn components(
    a: &Arrangement,
    r: &[bool],
    blocked: impl Fn(usize) -> bool,
) -> Vec<usize> {
    let adj = a.crossable();
    let nf = r.len();
    let mut comp = vec![usize::MAX; nf];
    let mut next = 0;
    for s in 0..nf {
        if r[s] || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            for &(_, c, g) in &adj[f] {
                if !r[g] && comp[g] == usize::MAX && !blocked(c) {
                    comp[g] = next;
                    stack.push(g);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Adds every face outside `r` not in `u`'s component. Returns `false`
/// when `v`'s face is swallowed.
fn fill_holes(a: &Arrangement, r: &mut [bool]) -> bool {
    let comp = components(a, r, |_| false);
    let cu = comp[a.u_face()];
    for f in 0..r.len() {
        if !r[f] && comp[f] != cu {
            r[f] = true;
        }
    }
    !r[a.v_face()]
}

/// Interiors of the twice-crossed circles, plus every pocket they cut off
/// from `u` together with σ.
pub fn initial_region(a: &Arrangement, cls: &CircleClassification) -> InitialRegion {
    let nf = a.num_faces();
    let mut r: Vec<bool> = (0..nf).map(|f| cls.c2.iter().any(|&c| a.inside(f, c))).collect();
    if fill_holes(a, &mut r) {
        InitialRegion::Region(Region { faces: r, iteration: 0 })
    } else {
        InitialRegion::Infeasible
    }
}

/// One growth step: the first circle (in `order`) whose arrangement with
/// the region boundary has unreachable cells donates those cells.
pub fn grow(
    a: &Arrangement,
    cls: &CircleClassification,
    r: &Region,
    order: ScanOrder,
) -> GrowStep {
    for phi in cls.scan(order) {
        let comp = components(a, &r.faces, |c| c == phi);
        let mut reachable = vec![false; comp.len() + 1];
        let mut mark = |f: FaceId| {
            if comp[f] != usize::MAX {
                reachable[comp[f]] = true;
            }
        };
        mark(a.u_face());
        mark(a.v_face());
        if cls.c0.contains(&phi) {
            (0..comp.len()).filter(|&f| a.inside(f, phi)).for_each(&mut mark);
        }
        let mut next = r.faces.clone();
        let mut changed = false;
        for f in 0..comp.len() {
            if !next[f] && !reachable[comp[f]] {
                next[f] = true;
                changed = true;
            }
        }
        if !changed {
            continue;
        }
        if next[a.u_face()] || !fill_holes(a, &mut next) {
            return GrowStep::Infeasible { circle: phi };
        }
        return GrowStep::Grown {
            region: Region {
                faces: next,
                iteration: r.iteration + 1,
            },
            circle: phi,
        };
    }
    GrowStep::Fixpoint
}

/// Checks the region invariants: the complement is connected, contains the
/// faces at `u` and `v`, and meets the inside of every C0 circle in at most
/// one component.
pub fn check_region(
    a: &Arrangement,
    cls: &CircleClassification,
    r: &Region,
) -> Result<(), String> {
    if r.contains(a.u_face()) || r.contains(a.v_face()) {
        return Err("u or v lost its complement face".into());
    }
    let comp = components(a, &r.faces, |_| false);
    let cu = comp[a.u_face()];
    if comp.iter().any(|&c| c != usize::MAX && c != cu) {
        return Err("complement is disconnected".into());
    }
    for &phi in &cls.c0 {
        let inner: Vec<bool> = (0..r.faces.len())
            .map(|f| r.faces[f] || !a.inside(f, phi))
            .collect();
        let comp = components(a, &inner, |_| false);
        let mut ids: Vec<usize> = comp.into_iter().filter(|&c| c != usize::MAX).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() > 1 {
            return Err(format!(
                "inside of {} splits into {} pieces",
                a.circle_id(phi),
                ids.len()
            ));
        }
    }
    Ok(())
}
