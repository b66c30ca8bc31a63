//! JSON encodings of drawings: combinatorial maps and rational curve sets.

use super::map::{
    Color, ColorKind, FaceKeys, HalfEdge, Planarization, Vertex, VertexKind,
};
use super::validate::{check_color_walks, check_structure};
use super::DrawingError;
use crate::geom::{Curve, CurveSet, Point, Polyline};
use crate::scalar::Rational;
use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

/// A rational point written as `[x, y]` (integers) or `[xn, xd, yn, yd]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonPoint(pub Point<Rational>);

fn int_value(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

fn big_value(b: &BigInt) -> Value {
    match i64::try_from(b) {
        Ok(i) => Value::from(i),
        Err(_) => Value::String(b.to_string()),
    }
}

impl Serialize for JsonPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let Point { x, y } = &self.0;
        let v: Vec<Value> = if x.is_integer() && y.is_integer() {
            vec![big_value(x.numer()), big_value(y.numer())]
        } else {
            vec![
                big_value(x.numer()),
                big_value(x.denom()),
                big_value(y.numer()),
                big_value(y.denom()),
            ]
        };
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<Value> = Vec::deserialize(d)?;
        let ints: Option<Vec<BigInt>> = v.iter().map(int_value).collect();
        let ints = ints.ok_or_else(|| D::Error::custom("coordinates must be integers"))?;
        let zero = BigInt::from(0);
        match ints.as_slice() {
            [x, y] => Ok(JsonPoint(Point::new(
                Rational::from_integer(x.clone()),
                Rational::from_integer(y.clone()),
            ))),
            [xn, xd, yn, yd] if *xd != zero && *yd != zero => Ok(JsonPoint(Point::new(
                Rational::new(xn.clone(), xd.clone()),
                Rational::new(yn.clone(), yd.clone()),
            ))),
            _ => Err(D::Error::custom("a point is [x, y] or [xn, xd, yn, yd] with nonzero denominators")),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonCurve {
    pub id: String,
    #[serde(default)]
    pub closed: bool,
    pub points: Vec<JsonPoint>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonIsolated {
    pub id: String,
    pub point: JsonPoint,
}

/// Geometric drawing file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeometricJson {
    pub curves: Vec<JsonCurve>,
    #[serde(default)]
    pub isolated: Vec<JsonIsolated>,
}

impl GeometricJson {
    pub fn from_curve_set(cs: &CurveSet<Rational>) -> Self {
        GeometricJson {
            curves: cs
                .curves()
                .iter()
                .map(|c| JsonCurve {
                    id: c.id.clone(),
                    closed: c.polyline.is_closed(),
                    points: c.polyline.points().iter().cloned().map(JsonPoint).collect(),
                })
                .collect(),
            isolated: cs
                .isolated()
                .iter()
                .map(|(id, p)| JsonIsolated {
                    id: id.clone(),
                    point: JsonPoint(p.clone()),
                })
                .collect(),
        }
    }

    pub fn to_curve_set(&self) -> Result<CurveSet<Rational>, DrawingError> {
        let mut curves = Vec::new();
        for c in &self.curves {
            let pts = c.points.iter().map(|p| p.0.clone()).collect();
            let polyline = Polyline::new(pts, c.closed)
                .map_err(|e| DrawingError::Geometry(format!("curve {:?}: {e}", c.id)))?;
            curves.push(Curve {
                id: c.id.clone(),
                polyline,
            });
        }
        let iso = self.isolated.iter().map(|i| (i.id.clone(), i.point.0.clone())).collect();
        CurveSet::new(curves, iso).map_err(|e| DrawingError::Geometry(e.to_string()))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonVertex {
    pub id: usize,
    pub kind: VertexKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonHalfEdge {
    pub id: usize,
    pub twin: usize,
    pub next_at_vertex: usize,
    pub head: usize,
    pub color: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonColor {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoints: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub closed: bool,
}

/// Combinatorial drawing file. `outer_face_hint` names a half-edge whose
/// right side is the outer face.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CombinatorialJson {
    pub vertices: Vec<JsonVertex>,
    pub half_edges: Vec<JsonHalfEdge>,
    pub colors: Vec<JsonColor>,
    #[serde(default)]
    pub outer_face_hint: Option<usize>,
}

impl CombinatorialJson {
    pub fn from_planarization(p: &Planarization) -> Self {
        let outer = &p.faces()[p.outer_face()];
        CombinatorialJson {
            vertices: p
                .vertices()
                .iter()
                .enumerate()
                .map(|(id, v)| JsonVertex {
                    id,
                    kind: v.kind,
                    name: Some(v.name.clone()),
                })
                .collect(),
            half_edges: p
                .half_edges()
                .iter()
                .enumerate()
                .map(|(id, h)| JsonHalfEdge {
                    id,
                    twin: h.twin,
                    next_at_vertex: h.next_at_vertex,
                    head: h.head,
                    color: p.colors()[h.color].name.clone(),
                })
                .collect(),
            colors: p
                .colors()
                .iter()
                .map(|c| match c.kind {
                    ColorKind::Open(a, b) => JsonColor {
                        id: c.name.clone(),
                        endpoints: Some([a, b]),
                        closed: false,
                    },
                    ColorKind::Closed => JsonColor {
                        id: c.name.clone(),
                        endpoints: None,
                        closed: true,
                    },
                })
                .collect(),
            outer_face_hint: outer.half_edges.first().copied(),
        }
    }

    /// Rebuilds a connected map. Ids must be dense and listed in order.
    pub fn to_planarization(&self) -> Result<Planarization, DrawingError> {
        let bad = |m: String| DrawingError::MalformedMap(m);
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if v.id != i {
                return Err(bad(format!("vertex ids must be 0..n in order (found {})", v.id)));
            }
            vertices.push(Vertex {
                kind: v.kind,
                name: v.name.clone().unwrap_or_else(|| i.to_string()),
            });
        }
        let mut colors = Vec::new();
        for c in &self.colors {
            let kind = match (c.endpoints, c.closed) {
                (Some([a, b]), false) => ColorKind::Open(a, b),
                (None, true) => ColorKind::Closed,
                _ => return Err(bad(format!("color {:?} needs either endpoints or closed", c.id))),
            };
            if colors.iter().any(|x: &Color| x.name == c.id) {
                return Err(bad(format!("duplicate color {:?}", c.id)));
            }
            colors.push(Color {
                name: c.id.clone(),
                kind,
            });
        }
        let mut half_edges = Vec::new();
        for (i, h) in self.half_edges.iter().enumerate() {
            if h.id != i {
                return Err(bad(format!("half-edge ids must be 0..n in order (found {})", h.id)));
            }
            let color = colors
                .iter()
                .position(|c| c.name == h.color)
                .ok_or_else(|| bad(format!("unknown color {:?}", h.color)))?;
            half_edges.push(HalfEdge {
                twin: h.twin,
                next_at_vertex: h.next_at_vertex,
                head: h.head,
                color,
            });
        }
        check_structure(&vertices, &half_edges, &colors)?;
        let nh = half_edges.len();
        let nv = vertices.len();
        // Connectivity.
        let mut adj = vec![Vec::new(); nv];
        for h in &half_edges {
            adj[half_edges[h.twin].head].push(h.head);
        }
        let mut seen = vec![false; nv];
        let mut stack = vec![];
        if nv > 0 {
            seen[0] = true;
            stack.push(0);
        }
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(DrawingError::Disconnected);
        }
        let mut cycle = vec![usize::MAX; nh];
        let mut nc = 0;
        for h in 0..nh {
            if cycle[h] != usize::MAX {
                continue;
            }
            let mut g = h;
            while cycle[g] == usize::MAX {
                cycle[g] = nc;
                g = half_edges[half_edges[g].twin].next_at_vertex;
            }
            nc += 1;
        }
        let outer = match (self.outer_face_hint, nh) {
            (_, 0) => 0,
            (Some(h), _) if h < nh => cycle[h],
            _ => return Err(bad("outer_face_hint must name a half-edge".into())),
        };
        let edges = nh / 2;
        if nv + nc != edges + 2 && nh > 0 {
            return Err(bad(format!("Euler check fails: V={nv} E={edges} F={nc}")));
        }
        let isolated = (0..nv).map(|_| (nh == 0).then_some(0)).collect();
        let p = Planarization::assemble(
            vertices,
            half_edges,
            colors,
            FaceKeys {
                half_edge: cycle,
                isolated,
                outer,
            },
            None,
        );
        check_color_walks(&p)?;
        Ok(p)
    }
}
