use super::map::{ColorId, EdgeId, FaceId, Planarization, VertexId, VertexKind};
use super::DrawingError;
use serde::{Deserialize, Serialize};

/// Dual arc across one planarization edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualArc {
    /// Equal to the planarization edge id.
    pub id: EdgeId,
    pub faces: (FaceId, FaceId),
    pub color: ColorId,
}

/// Colored dual of a planarization with the colors at `u` and `v` removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredDual {
    pub num_faces: usize,
    pub num_colors: usize,
    /// Kept arcs, ascending by id.
    pub arcs: Vec<DualArc>,
    pub u_faces: Vec<FaceId>,
    pub v_faces: Vec<FaceId>,
    /// Per face: (color, arc id, other face), ascending; loops omitted.
    adjacency: Vec<Vec<(ColorId, EdgeId, FaceId)>>,
    arc_index: Vec<Option<usize>>,
}

impl ColoredDual {
    pub fn neighbors(&self, f: FaceId) -> &[(ColorId, EdgeId, FaceId)] {
        &self.adjacency[f]
    }

    pub fn arc(&self, id: EdgeId) -> Option<&DualArc> {
        self.arc_index.get(id).copied().flatten().map(|i| &self.arcs[i])
    }
}

/// Builds the colored dual for inserting `uv`.
pub fn colored_dual(p: &Planarization, u: VertexId, v: VertexId) -> Result<ColoredDual, DrawingError> {
    for w in [u, v] {
        match p.vertices().get(w) {
            Some(x) if x.kind == VertexKind::Original => {}
            _ => return Err(DrawingError::UnknownVertex(w.to_string())),
        }
    }
    let mut removed = vec![false; p.colors().len()];
    for c in p.colors_at(u).into_iter().chain(p.colors_at(v)) {
        removed[c] = true;
    }
    let nf = p.faces().len();
    let mut arcs = Vec::new();
    let mut arc_index = vec![None; p.num_edges()];
    let mut adjacency = vec![Vec::new(); nf];
    for e in 0..p.num_edges() {
        let color = p.edge_color(e);
        if removed[color] {
            continue;
        }
        let faces = p.edge_faces(e);
        arc_index[e] = Some(arcs.len());
        arcs.push(DualArc { id: e, faces, color });
        if faces.0 != faces.1 {
            adjacency[faces.0].push((color, e, faces.1));
            adjacency[faces.1].push((color, e, faces.0));
        }
    }
    for a in adjacency.iter_mut() {
        a.sort();
    }
    Ok(ColoredDual {
        num_faces: nf,
        num_colors: p.colors().len(),
        arcs,
        u_faces: p.incident_faces(u),
        v_faces: p.incident_faces(v),
        adjacency,
        arc_index,
    })
}

/// One crossing of the inserted edge: the dual arc used and its color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub arc: EdgeId,
    pub color: ColorId,
}

/// A heterochromatic, face-simple dual path from a u-face to a v-face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub start_face: FaceId,
    pub steps: Vec<Step>,
    pub end_face: FaceId,
}

impl Witness {
    /// Faces visited, starting with `start_face`.
    pub fn faces(&self, d: &ColoredDual) -> Option<Vec<FaceId>> {
        let mut cur = self.start_face;
        let mut out = vec![cur];
        for s in &self.steps {
            let a = d.arc(s.arc)?;
            cur = if a.faces.0 == cur {
                a.faces.1
            } else if a.faces.1 == cur {
                a.faces.0
            } else {
                return None;
            };
            out.push(cur);
        }
        Some(out)
    }
}

/// Whether `w` is a valid insertion witness in `d`.
pub fn verify_witness(d: &ColoredDual, w: &Witness) -> bool {
    if !d.u_faces.contains(&w.start_face) || !d.v_faces.contains(&w.end_face) {
        return false;
    }
    let mut used = vec![false; d.num_colors];
    for s in &w.steps {
        match d.arc(s.arc) {
            Some(a) if a.color == s.color && s.color < used.len() && !used[s.color] => {
                used[s.color] = true;
            }
            _ => return false,
        }
    }
    let Some(faces) = w.faces(d) else {
        return false;
    };
    let mut sorted = faces.clone();
    sorted.sort();
    sorted.dedup();
    sorted.len() == faces.len() && faces.last() == Some(&w.end_face)
}
