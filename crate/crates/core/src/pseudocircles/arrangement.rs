use super::PseudocircleError;
use crate::drawing::json::JsonPoint;
use crate::drawing::{ColorId, EdgeId, FaceId, Planarization, VertexId, VertexKind};
use crate::geom::{build_planarization, Curve, CurveSet, Polyline, Simplicity};
use crate::{Rational, RationalPoint};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Curve id used for σ inside the planarization.
pub const SIGMA_ID: &str = "sigma";

/// The pseudosegment σ from `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPath {
    pub polyline: Polyline<Rational>,
}

impl SigmaPath {
    /// σ through `u`, the given bends, and `v`.
    pub fn new(
        u: RationalPoint,
        bends: Vec<RationalPoint>,
        v: RationalPoint,
    ) -> Result<Self, PseudocircleError> {
        let mut pts = vec![u];
        pts.extend(bends);
        pts.push(v);
        Ok(SigmaPath {
            polyline: Polyline::new(pts, false)?,
        })
    }

    pub fn u_point(&self) -> &RationalPoint {
        &self.polyline.points()[0]
    }

    pub fn v_point(&self) -> &RationalPoint {
        self.polyline.points().last().expect("at least two points")
    }
}

/// Circles plus σ, planarized, with side information for every face.
///
/// Sides are measured relative to the face containing `u`: a face is inside
/// a circle when it lies on the side of the circle away from `u`. On the
/// sphere this is the same as taking `u`'s face as the unbounded one.
#[derive(Clone, Debug)]
pub struct Arrangement {
    ids: Vec<String>,
    circles: Vec<Polyline<Rational>>,
    sigma: SigmaPath,
    map: Planarization,
    circle_color: Vec<ColorId>,
    color_circle: Vec<Option<usize>>,
    sigma_color: ColorId,
    u: VertexId,
    v: VertexId,
    u_face: FaceId,
    v_face: FaceId,
    inside: Vec<Vec<bool>>,
    sigma_crossings: Vec<usize>,
    adj: Vec<Vec<(EdgeId, usize, FaceId)>>,
}

impl Arrangement {
    /// Builds and validates the arrangement.
    ///
    /// Circles must be closed and pairwise cross 0 or 2 times; σ must be open.
    /// σ may cross a circle any number of times here; [`super::classify`]
    /// rejects more than two.
    pub fn new(
        circles: Vec<(String, Polyline<Rational>)>,
        sigma: SigmaPath,
    ) -> Result<Self, PseudocircleError> {
        for (id, pl) in &circles {
            if !pl.is_closed() {
                return Err(PseudocircleError::NotClosed(id.clone()));
            }
        }
        let mut curves: Vec<Curve<Rational>> = circles
            .iter()
            .map(|(id, pl)| Curve {
                id: id.clone(),
                polyline: pl.clone(),
            })
            .collect();
        curves.push(Curve {
            id: SIGMA_ID.to_string(),
            polyline: sigma.polyline.clone(),
        });
        let cs = CurveSet::new(curves, vec![])?;
        let map = build_planarization(&cs, Simplicity::Unrestricted)?;
        let n = circles.len();
        let color_of = |name: &str| map.color_by_name(name).expect("curve present");
        let circle_color: Vec<ColorId> = circles.iter().map(|(id, _)| color_of(id)).collect();
        let sigma_color = color_of(SIGMA_ID);
        let mut color_circle = vec![None; map.colors().len()];
        for (i, &c) in circle_color.iter().enumerate() {
            color_circle[c] = Some(i);
        }

        let mut pair = vec![vec![0usize; n + 1]; n + 1];
        for (w, vert) in map.vertices().iter().enumerate() {
            if vert.kind != VertexKind::Crossing {
                continue;
            }
            let cs = map.colors_through(w);
            let idx = |c: ColorId| color_circle[c].unwrap_or(n);
            let (a, b) = (idx(cs[0]), idx(cs[1]));
            pair[a][b] += 1;
            pair[b][a] += 1;
        }
        for i in 0..n {
            for j in i + 1..n {
                if pair[i][j] != 0 && pair[i][j] != 2 {
                    return Err(PseudocircleError::PairCrossings(
                        circles[i].0.clone(),
                        circles[j].0.clone(),
                        pair[i][j],
                    ));
                }
            }
        }
        let sigma_crossings = (0..n).map(|i| pair[i][n]).collect();

        let u = map.vertex_by_name(&format!("{SIGMA_ID}.s")).expect("sigma start");
        let v = map.vertex_by_name(&format!("{SIGMA_ID}.t")).expect("sigma end");
        let u_face = map.face_of(map.outgoing(u)[0]);
        let v_face = map.face_of(map.outgoing(v)[0]);

        let mut a = Arrangement {
            ids: circles.iter().map(|(id, _)| id.clone()).collect(),
            circles: circles.into_iter().map(|(_, pl)| pl).collect(),
            sigma,
            map,
            circle_color,
            color_circle,
            sigma_color,
            u,
            v,
            u_face,
            v_face,
            inside: vec![],
            sigma_crossings,
            adj: vec![],
        };
        a.inside = a.side_flags()?;
        a.adj = a.build_adjacency();
        Ok(a)
    }

    /// Breadth-first side assignment from `u`'s face, checked on every edge.
    fn side_flags(&self) -> Result<Vec<Vec<bool>>, PseudocircleError> {
        let m = &self.map;
        let nf = m.faces().len();
        let mut flags: Vec<Option<Vec<bool>>> = vec![None; nf];
        flags[self.u_face] = Some(vec![false; self.ids.len()]);
        let mut queue = VecDeque::from([self.u_face]);
        while let Some(f) = queue.pop_front() {
            let here = flags[f].clone().expect("queued faces are labelled");
            for &h in &m.faces()[f].half_edges {
                let g = m.face_of(m.half_edges()[h].twin);
                let mut there = here.clone();
                if let Some(c) = self.color_circle[m.half_edges()[h].color] {
                    there[c] = !there[c];
                }
                match &flags[g] {
                    None => {
                        flags[g] = Some(there);
                        queue.push_back(g);
                    }
                    Some(existing) if *existing != there => {
                        let name = self.color_name(m.half_edges()[h].color);
                        return Err(PseudocircleError::InconsistentSides(name));
                    }
                    Some(_) => {}
                }
            }
        }
        flags
            .into_iter()
            .map(|f| f.ok_or_else(|| PseudocircleError::InconsistentSides("unreachable face".into())))
            .collect()
    }

    fn color_name(&self, c: ColorId) -> String {
        self.map.colors()[c].name.clone()
    }

    pub fn num_circles(&self) -> usize {
        self.ids.len()
    }

    pub fn circle_id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn circle_ids(&self) -> &[String] {
        &self.ids
    }

    pub fn circle(&self, i: usize) -> &Polyline<Rational> {
        &self.circles[i]
    }

    pub fn sigma(&self) -> &SigmaPath {
        &self.sigma
    }

    pub fn planarization(&self) -> &Planarization {
        &self.map
    }

    pub fn num_faces(&self) -> usize {
        self.map.faces().len()
    }

    /// Circle owning edge `e`, or `None` for σ.
    pub fn edge_circle(&self, e: EdgeId) -> Option<usize> {
        self.color_circle[self.map.edge_color(e)]
    }

    pub fn is_sigma_edge(&self, e: EdgeId) -> bool {
        self.map.edge_color(e) == self.sigma_color
    }

    pub fn circle_color(&self, i: usize) -> ColorId {
        self.circle_color[i]
    }

    pub fn sigma_color(&self) -> ColorId {
        self.sigma_color
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    /// The face around σ's start.
    pub fn u_face(&self) -> FaceId {
        self.u_face
    }

    /// The face around σ's end.
    pub fn v_face(&self) -> FaceId {
        self.v_face
    }

    /// Whether face `f` lies inside circle `i`.
    pub fn inside(&self, f: FaceId, i: usize) -> bool {
        self.inside[f][i]
    }

    /// Number of times σ crosses each circle.
    pub fn sigma_crossings(&self) -> &[usize] {
        &self.sigma_crossings
    }

    /// Circle edges around each face as `(edge, circle, other face)`,
    /// ascending by edge. σ's edges are left out.
    pub(crate) fn crossable(&self) -> &[Vec<(EdgeId, usize, FaceId)>] {
        &self.adj
    }

    fn build_adjacency(&self) -> Vec<Vec<(EdgeId, usize, FaceId)>> {
        let m = &self.map;
        let mut adj = vec![Vec::new(); m.faces().len()];
        for e in 0..m.num_edges() {
            let Some(c) = self.edge_circle(e) else { continue };
            let (f, g) = m.edge_faces(e);
            adj[f].push((e, c, g));
            adj[g].push((e, c, f));
        }
        adj
    }

    pub fn to_json(&self) -> ArrangementJson {
        let pts = self.sigma.polyline.points();
        ArrangementJson {
            circles: self
                .ids
                .iter()
                .zip(&self.circles)
                .map(|(id, pl)| JsonCircle {
                    id: id.clone(),
                    points: pl.points().iter().cloned().map(JsonPoint).collect(),
                })
                .collect(),
            sigma: JsonSigma {
                u_point: JsonPoint(pts[0].clone()),
                v_point: JsonPoint(pts[pts.len() - 1].clone()),
                points: pts[1..pts.len() - 1].iter().cloned().map(JsonPoint).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonCircle {
    pub id: String,
    pub points: Vec<JsonPoint>,
}

/// σ in JSON. `points` lists the bends between `u_point` and `v_point`; a
/// list that already starts at `u_point` and ends at `v_point` is accepted
/// as the full polyline.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonSigma {
    pub u_point: JsonPoint,
    pub v_point: JsonPoint,
    #[serde(default)]
    pub points: Vec<JsonPoint>,
}

/// Arrangement file format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrangementJson {
    #[serde(default)]
    pub circles: Vec<JsonCircle>,
    pub sigma: JsonSigma,
}

impl ArrangementJson {
    pub fn to_arrangement(&self) -> Result<Arrangement, PseudocircleError> {
        let circles = self
            .circles
            .iter()
            .map(|c| {
                let pts = c.points.iter().map(|p| p.0.clone()).collect();
                Ok((c.id.clone(), Polyline::new(pts, true)?))
            })
            .collect::<Result<Vec<_>, PseudocircleError>>()?;
        let u = self.sigma.u_point.0.clone();
        let v = self.sigma.v_point.0.clone();
        let mut bends: Vec<RationalPoint> = self.sigma.points.iter().map(|p| p.0.clone()).collect();
        if bends.len() >= 2 && bends[0] == u && bends[bends.len() - 1] == v {
            bends = bends[1..bends.len() - 1].to_vec();
        }
        Arrangement::new(circles, SigmaPath::new(u, bends, v)?)
    }
}
