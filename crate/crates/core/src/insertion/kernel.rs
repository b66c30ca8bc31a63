use crate::drawing::{
    Color, ColorKind, FaceKeys, Geometry, HalfEdge, Planarization, Vertex, VertexId, VertexKind,
};
use serde::Serialize;

/// Size of a (kernelized) instance in terms of the drawn graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KernelSize {
    /// Original (non-crossing) vertices.
    pub vertices: usize,
    /// Colors, i.e. edges of the drawn graph.
    pub edges: usize,
    /// Crossings.
    pub crossings: usize,
}

impl KernelSize {
    pub fn of(p: &Planarization) -> Self {
        KernelSize {
            vertices: p
                .vertices()
                .iter()
                .filter(|v| v.kind == VertexKind::Original)
                .count(),
            edges: p.colors().len(),
            crossings: p.crossing_count(),
        }
    }
}

/// A kernelized drawing with the new ids of `u` and `v`.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub map: Planarization,
    pub u: VertexId,
    pub v: VertexId,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let n = parent[y];
        parent[y] = r;
        y = n;
    }
    r
}

/// Removes every uncrossed edge and every isolated vertex other than `u`
/// and `v`.
///
/// Faces separated only by removed edges are merged; the result keeps the
/// relative order of the surviving vertices, half-edges and colors.
pub fn kernelize(p: &Planarization, u: VertexId, v: VertexId) -> Kernel {
    let nh = p.half_edges().len();
    let nv = p.vertices().len();
    let nc = p.colors().len();
    let mut crossed = vec![false; nc];
    for (w, vert) in p.vertices().iter().enumerate() {
        if vert.kind == VertexKind::Crossing {
            for h in p.outgoing(w) {
                crossed[p.half_edges()[h].color] = true;
            }
        }
    }
    let mut he: Vec<HalfEdge> = p.half_edges().to_vec();
    let mut alive_h = vec![true; nh];
    let mut parent: Vec<usize> = (0..p.faces().len()).collect();
    let mut iso_face: Vec<Option<usize>> = (0..nv)
        .map(|w| {
            if p.degree(w) == 0 {
                p.incident_faces(w).first().copied()
            } else {
                None
            }
        })
        .collect();
    let mut degree: Vec<usize> = (0..nv).map(|w| p.degree(w)).collect();

    for h in 0..nh {
        if !alive_h[h] || crossed[he[h].color] || h > he[h].twin {
            continue;
        }
        let t = he[h].twin;
        let (fh, ft) = (p.face_of(h), p.face_of(t));
        let a = find(&mut parent, fh);
        let b = find(&mut parent, ft);
        parent[a.max(b)] = a.min(b);
        for g in [h, t] {
            let tail = he[he[g].twin].head;
            // Predecessor of g in the rotation at its tail.
            let mut prev = g;
            while he[prev].next_at_vertex != g {
                prev = he[prev].next_at_vertex;
            }
            if prev != g {
                he[prev].next_at_vertex = he[g].next_at_vertex;
            }
            degree[tail] -= 1;
            if degree[tail] == 0 {
                iso_face[tail] = Some(fh);
            }
        }
        alive_h[h] = false;
        alive_h[t] = false;
    }
    let alive_c: Vec<bool> = (0..nc).map(|c| crossed[c]).collect();
    let alive_v: Vec<bool> = (0..nv)
        .map(|w| w == u || w == v || degree[w] > 0)
        .collect();
    let vmap = renumber(&alive_v);
    let hmap = renumber(&alive_h);
    let cmap = renumber(&alive_c);

    let mut vertices: Vec<Vertex> = Vec::new();
    let mut iso_keys = Vec::new();
    for w in 0..nv {
        if alive_v[w] {
            vertices.push(p.vertices()[w].clone());
            iso_keys.push(if degree[w] == 0 {
                iso_face[w].map(|f| find(&mut parent, f))
            } else {
                None
            });
        }
    }
    let mut half_edges = Vec::new();
    let mut keys = Vec::new();
    for h in 0..nh {
        if alive_h[h] {
            let x = he[h];
            half_edges.push(HalfEdge {
                twin: hmap[x.twin],
                next_at_vertex: hmap[x.next_at_vertex],
                head: vmap[x.head],
                color: cmap[x.color],
            });
            keys.push(find(&mut parent, p.face_of(h)));
        }
    }
    let colors: Vec<Color> = (0..nc)
        .filter(|&c| alive_c[c])
        .map(|c| {
            let col = &p.colors()[c];
            Color {
                name: col.name.clone(),
                kind: match col.kind {
                    ColorKind::Open(a, b) => ColorKind::Open(vmap[a], vmap[b]),
                    ColorKind::Closed => ColorKind::Closed,
                },
            }
        })
        .collect();
    let outer = find(&mut parent, p.outer_face());
    let geometry = p.geometry().map(|g| Geometry {
        vertices: (0..nv).filter(|&w| alive_v[w]).map(|w| g.vertices[w]).collect(),
        edges: (0..p.num_edges())
            .filter(|&e| alive_h[p.edge_half_edge(e)])
            .map(|e| g.edges[e].clone())
            .collect(),
    });
    let map = Planarization::assemble(
        vertices,
        half_edges,
        colors,
        FaceKeys {
            half_edge: keys,
            isolated: iso_keys,
            outer,
        },
        geometry,
    );
    Kernel {
        map,
        u: vmap[u],
        v: vmap[v],
    }
}

fn renumber(alive: &[bool]) -> Vec<usize> {
    let mut next = 0;
    alive
        .iter()
        .map(|&a| {
            let id = next;
            if a {
                next += 1;
            }
            id
        })
        .collect()
}
