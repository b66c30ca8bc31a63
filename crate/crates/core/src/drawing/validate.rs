use super::map::{Color, ColorId, ColorKind, HalfEdge, Planarization, Vertex, VertexId, VertexKind};
use super::DrawingError;
use serde::Serialize;
use std::collections::BTreeMap;

/// A violated simple-drawing axiom.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two edges share two or more points.
    PairCrossingBound { a: String, b: String },
    /// Two edges with a common endpoint also cross.
    AdjacentCrossing { a: String, b: String },
    /// An edge crosses itself.
    SelfCrossing { color: String },
    /// The four half-edges at a crossing do not alternate between two colors.
    NonAlternating { vertex: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn malformed(msg: impl Into<String>) -> DrawingError {
    DrawingError::MalformedMap(msg.into())
}

/// Checks index ranges, the twin involution and the rotation permutation on
/// raw map parts.
pub fn check_structure(
    vertices: &[Vertex],
    half_edges: &[HalfEdge],
    colors: &[Color],
) -> Result<(), DrawingError> {
    let nh = half_edges.len();
    let nv = vertices.len();
    for (h, he) in half_edges.iter().enumerate() {
        if he.twin >= nh || he.next_at_vertex >= nh || he.head >= nv || he.color >= colors.len() {
            return Err(malformed(format!("half-edge {h} has an index out of range")));
        }
        if he.twin == h || half_edges[he.twin].twin != h {
            return Err(malformed(format!("twin of half-edge {h} is not an involution")));
        }
        if half_edges[he.twin].color != he.color {
            return Err(malformed(format!("half-edge {h} and its twin differ in color")));
        }
    }
    let tail = |h: usize| half_edges[half_edges[h].twin].head;
    let mut hit = vec![false; nh];
    for (h, he) in half_edges.iter().enumerate() {
        let n = he.next_at_vertex;
        if hit[n] {
            return Err(malformed("rotation successor is not a permutation"));
        }
        hit[n] = true;
        if tail(n) != tail(h) {
            return Err(malformed(format!("rotation successor of {h} leaves another vertex")));
        }
    }
    // One rotation orbit per vertex.
    let mut degree = vec![0usize; nv];
    for h in 0..nh {
        degree[tail(h)] += 1;
    }
    let mut seen = vec![false; nh];
    let mut orbits = vec![0usize; nv];
    for h in 0..nh {
        if seen[h] {
            continue;
        }
        orbits[tail(h)] += 1;
        let mut g = h;
        while !seen[g] {
            seen[g] = true;
            g = half_edges[g].next_at_vertex;
        }
    }
    for v in 0..nv {
        if orbits[v] > 1 {
            return Err(malformed(format!("vertex {v} has a split rotation")));
        }
        let want = match vertices[v].kind {
            VertexKind::Crossing => Some(4),
            VertexKind::Anchor => Some(2),
            VertexKind::Original => None,
        };
        if let Some(d) = want {
            if degree[v] != d {
                return Err(malformed(format!("vertex {v} has degree {}", degree[v])));
            }
        }
    }
    for (c, col) in colors.iter().enumerate() {
        if let ColorKind::Open(a, b) = col.kind {
            if a >= nv || b >= nv || a == b {
                return Err(malformed(format!("color {c} has bad endpoints")));
            }
            if vertices[a].kind != VertexKind::Original || vertices[b].kind != VertexKind::Original {
                return Err(malformed(format!("color {c} ends at a non-original vertex")));
            }
        }
    }
    Ok(())
}

/// Checks that every color is traced by a single walk of the right shape.
pub(crate) fn check_color_walks(p: &Planarization) -> Result<(), DrawingError> {
    let mut count = vec![0usize; p.colors().len()];
    for he in p.half_edges() {
        count[he.color] += 1;
    }
    for (c, col) in p.colors().iter().enumerate() {
        let walk = p.color_walk(c);
        if count[c] == 0 || walk.len() * 2 != count[c] {
            return Err(malformed(format!("color {:?} is not a single walk", col.name)));
        }
        let last = *walk.last().unwrap();
        match col.kind {
            ColorKind::Open(a, b) => {
                if p.tail(walk[0]) != a || p.half_edges()[last].head != b {
                    return Err(malformed(format!("color {:?} does not join its endpoints", col.name)));
                }
                for &h in &walk[..walk.len() - 1] {
                    if p.vertices()[p.half_edges()[h].head].kind != VertexKind::Crossing {
                        return Err(malformed(format!("color {:?} bends at a non-crossing", col.name)));
                    }
                }
            }
            ColorKind::Closed => {
                if p.half_edges()[last].head != p.tail(walk[0]) {
                    return Err(malformed(format!("color {:?} does not close up", col.name)));
                }
                for &h in &walk {
                    if p.vertices()[p.half_edges()[h].head].kind == VertexKind::Original {
                        return Err(malformed(format!("closed color {:?} meets an original vertex", col.name)));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Lists every violated simple-drawing axiom.
pub fn validate_simple(p: &Planarization) -> Result<ValidationReport, DrawingError> {
    check_structure(p.vertices(), p.half_edges(), p.colors())?;
    check_color_walks(p)?;
    let name = |c: ColorId| p.colors()[c].name.clone();
    let mut violations = Vec::new();
    let mut crossings: BTreeMap<(ColorId, ColorId), usize> = BTreeMap::new();
    for v in 0..p.vertices().len() {
        if p.vertices()[v].kind != VertexKind::Crossing {
            continue;
        }
        let cs: Vec<ColorId> = p.outgoing(v).iter().map(|&h| p.half_edges()[h].color).collect();
        if cs.iter().all(|&c| c == cs[0]) {
            violations.push(Violation::SelfCrossing { color: name(cs[0]) });
        } else if cs[0] != cs[2] || cs[1] != cs[3] {
            violations.push(Violation::NonAlternating {
                vertex: p.vertices()[v].name.clone(),
            });
        } else {
            let key = (cs[0].min(cs[1]), cs[0].max(cs[1]));
            *crossings.entry(key).or_default() += 1;
        }
    }
    let open: Vec<(ColorId, VertexId, VertexId)> = p
        .colors()
        .iter()
        .enumerate()
        .filter_map(|(c, col)| match col.kind {
            ColorKind::Open(a, b) => Some((c, a, b)),
            ColorKind::Closed => None,
        })
        .collect();
    for (i, &(c, a, b)) in open.iter().enumerate() {
        for &(d, x, y) in &open[i + 1..] {
            let common = [a, b].iter().filter(|&&w| w == x || w == y).count();
            let cr = crossings.get(&(c.min(d), c.max(d))).copied().unwrap_or(0);
            if cr + common > 1 {
                if cr >= 1 && common >= 1 {
                    violations.push(Violation::AdjacentCrossing { a: name(c), b: name(d) });
                } else {
                    violations.push(Violation::PairCrossingBound { a: name(c), b: name(d) });
                }
            }
        }
    }
    violations.sort();
    Ok(ValidationReport { violations })
}
