use super::region::{check_region, classify, grow, initial_region, GrowStep, InitialRegion, Region, ScanOrder};
use super::{Arrangement, CircleClassification, PseudocircleError};
use crate::drawing::{EdgeId, FaceId, HalfEdgeId};
use serde::{Deserialize, Serialize};

/// Which side of σ the extension leaves `u` on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CertCrossing {
    pub circle: String,
    pub edge: EdgeId,
}

/// A route for σ′ from `u` to `v`: the faces it passes and the circle
/// edges it crosses between consecutive faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionCertificate {
    /// `None` for routes found by [`oracle_extend`].
    pub side: Option<Side>,
    pub crossings: Vec<CertCrossing>,
    pub faces: Vec<FaceId>,
}

/// Why [`extend`] said no.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "stage", rename_all = "lowercase")]
pub enum Obstruction {
    /// The twice-crossed circles and σ already enclose `v`.
    Initial,
    /// `v` was enclosed at growth step `iteration` while cutting along `circle`.
    Growth { iteration: usize, circle: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendOutcome {
    Yes(ExtensionCertificate),
    No(Obstruction),
}

impl ExtendOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, ExtendOutcome::Yes(_))
    }
}

/// Full record of one decision run.
#[derive(Clone, Debug)]
pub struct ExtendTrace {
    pub classification: CircleClassification,
    pub outcome: ExtendOutcome,
    /// Every region computed, starting with the initial one.
    pub regions: Vec<Region>,
    /// Number of successful growth steps.
    pub iterations: usize,
}

/// Decides whether σ extends to a pseudocircle.
pub fn extend(a: &Arrangement) -> Result<ExtendOutcome, PseudocircleError> {
    Ok(extend_traced(a, ScanOrder::Ascending)?.outcome)
}

/// [`extend`] with the circle scan order exposed and all regions recorded.
/// The region invariants are checked after every step.
pub fn extend_traced(a: &Arrangement, order: ScanOrder) -> Result<ExtendTrace, PseudocircleError> {
    let cls = classify(a)?;
    let mut trace = ExtendTrace {
        classification: cls.clone(),
        outcome: ExtendOutcome::No(Obstruction::Initial),
        regions: Vec::new(),
        iterations: 0,
    };
    let InitialRegion::Region(mut r) = initial_region(a, &cls) else {
        return Ok(trace);
    };
    loop {
        check_region(a, &cls, &r).map_err(PseudocircleError::InternalInvariantViolation)?;
        trace.regions.push(r.clone());
        match grow(a, &cls, &r, order) {
            GrowStep::Grown { region, .. } => {
                trace.iterations += 1;
                if trace.iterations > a.num_faces() {
                    return Err(PseudocircleError::InternalInvariantViolation(
                        "more growth steps than faces".into(),
                    ));
                }
                r = region;
            }
            GrowStep::Infeasible { circle } => {
                trace.outcome = ExtendOutcome::No(Obstruction::Growth {
                    iteration: trace.iterations + 1,
                    circle,
                });
                return Ok(trace);
            }
            GrowStep::Fixpoint => break,
        }
    }
    let mut best: Option<ExtensionCertificate> = None;
    for cert in boundary_routes(a, &r)? {
        if !verify_certificate(a, &cls, &cert) {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => (&cert.crossings, cert.side) < (&b.crossings, b.side),
        };
        if better {
            best = Some(cert);
        }
    }
    match best {
        Some(c) => {
            trace.outcome = ExtendOutcome::Yes(c);
            Ok(trace)
        }
        None => Err(PseudocircleError::InternalInvariantViolation(
            "neither boundary route verifies".into(),
        )),
    }
}

/// The two routes that hug the region boundary from `u` to `v`.
///
/// The walk keeps the complement on its right and the region (or σ) on its
/// left. Leaving `u` along σ it reaches `v` on σ's right side, turns around
/// `v`, and comes back to `u` on the left side.
fn boundary_routes(a: &Arrangement, r: &Region) -> Result<Vec<ExtensionCertificate>, PseudocircleError> {
    let m = a.planarization();
    let he = m.half_edges();
    let wall = |h: HalfEdgeId| {
        let e = m.edge_of(h);
        a.is_sigma_edge(e) || r.contains(m.face_of(he[h].twin))
    };
    let start = m.outgoing(a.u())[0];
    let mut parts: Vec<(Vec<CertCrossing>, Vec<FaceId>)> = vec![(vec![], vec![m.face_of(start)])];
    let mut h = start;
    let limit = 4 * he.len() + 4;
    for _ in 0..limit {
        if he[h].head == a.v() && a.is_sigma_edge(m.edge_of(h)) {
            let f = m.face_of(he[h].twin);
            parts.push((vec![], vec![f]));
        }
        let mut g = m.face_next(h);
        while !wall(g) {
            let e = m.edge_of(g);
            let circle = a.edge_circle(e).expect("σ edges are walls");
            let part = parts.last_mut().expect("nonempty");
            part.0.push(CertCrossing {
                circle: a.circle_id(circle).to_string(),
                edge: e,
            });
            part.1.push(m.face_of(he[g].twin));
            g = m.face_next(he[g].twin);
        }
        h = g;
        if h == start {
            break;
        }
    }
    if h != start || parts.len() != 2 {
        return Err(PseudocircleError::InternalInvariantViolation(
            "region boundary does not pass through u and v".into(),
        ));
    }
    let (mut lc, mut lf) = parts.pop().expect("two parts");
    let (rc, rf) = parts.pop().expect("two parts");
    lc.reverse();
    lf.reverse();
    Ok(vec![
        ExtensionCertificate {
            side: Some(Side::Right),
            crossings: rc,
            faces: rf,
        },
        ExtensionCertificate {
            side: Some(Side::Left),
            crossings: lc,
            faces: lf,
        },
    ])
}

fn counts_ok(cls: &CircleClassification, counts: &[usize]) -> bool {
    counts.iter().enumerate().all(|(i, &k)| match cls.class_of(i) {
        0 => k == 0 || k == 2,
        1 => k == 1,
        _ => k == 0,
    })
}

/// Checks a certificate against the arrangement: consecutive faces share
/// the crossed circle edge, the route runs from `u`'s face to `v`'s face,
/// never crosses σ, and crosses C2 circles never, C1 circles once, and C0
/// circles zero or two times.
pub fn verify_certificate(a: &Arrangement, cls: &CircleClassification, c: &ExtensionCertificate) -> bool {
    let m = a.planarization();
    if c.faces.len() != c.crossings.len() + 1 {
        return false;
    }
    if c.faces[0] != a.u_face() || c.faces[c.faces.len() - 1] != a.v_face() {
        return false;
    }
    if c.faces.iter().any(|&f| f >= a.num_faces()) {
        return false;
    }
    let mut counts = vec![0usize; a.num_circles()];
    for (i, x) in c.crossings.iter().enumerate() {
        if x.edge >= m.num_edges() {
            return false;
        }
        let Some(circle) = a.edge_circle(x.edge) else {
            return false;
        };
        if a.circle_id(circle) != x.circle {
            return false;
        }
        let (f, g) = m.edge_faces(x.edge);
        let (p, q) = (c.faces[i], c.faces[i + 1]);
        if !((f, g) == (p, q) || (f, g) == (q, p)) || f == g {
            return false;
        }
        counts[circle] += 1;
    }
    counts_ok(cls, &counts)
}

/// Exhaustive search over face-simple routes from `u`'s face to `v`'s face
/// with per-circle crossing budgets. Sound: every route returned verifies.
/// Not complete, since a valid extension may need to revisit a face.
pub fn oracle_extend(a: &Arrangement, budget: u64) -> Result<Option<ExtensionCertificate>, PseudocircleError> {
    let cls = classify(a)?;
    let cap: Vec<usize> = (0..a.num_circles())
        .map(|i| match cls.class_of(i) {
            0 => 2,
            1 => 1,
            _ => 0,
        })
        .collect();
    let mut o = Oracle {
        a,
        cls: &cls,
        cap,
        counts: vec![0; a.num_circles()],
        visited: vec![false; a.num_faces()],
        faces: vec![a.u_face()],
        crossings: vec![],
        nodes: 0,
        budget,
    };
    o.visited[a.u_face()] = true;
    if o.dfs(a.u_face())? {
        Ok(Some(ExtensionCertificate {
            side: None,
            crossings: o
                .crossings
                .iter()
                .map(|&(e, c)| CertCrossing {
                    circle: a.circle_id(c).to_string(),
                    edge: e,
                })
                .collect(),
            faces: o.faces,
        }))
    } else {
        Ok(None)
    }
}

struct Oracle<'a> {
    a: &'a Arrangement,
    cls: &'a CircleClassification,
    cap: Vec<usize>,
    counts: Vec<usize>,
    visited: Vec<bool>,
    faces: Vec<FaceId>,
    crossings: Vec<(EdgeId, usize)>,
    nodes: u64,
    budget: u64,
}

impl Oracle<'_> {
    fn dfs(&mut self, f: FaceId) -> Result<bool, PseudocircleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(PseudocircleError::Timeout(self.budget));
        }
        if f == self.a.v_face() && counts_ok(self.cls, &self.counts) {
            return Ok(true);
        }
        for &(e, c, g) in &self.a.crossable()[f] {
            if self.visited[g] || self.counts[c] >= self.cap[c] {
                continue;
            }
            self.visited[g] = true;
            self.counts[c] += 1;
            self.faces.push(g);
            self.crossings.push((e, c));
            if self.dfs(g)? {
                return Ok(true);
            }
            self.crossings.pop();
            self.faces.pop();
            self.counts[c] -= 1;
            self.visited[g] = false;
        }
        Ok(false)
    }
}
