use super::geometry::{curve, pt};
use crate::drawing::{EdgeId, FaceId, Planarization};
use crate::geom::{build_planarization, Curve, CurveSet, Simplicity};
use crate::{Rational, RationalPoint};
use serde::Serialize;
use std::collections::{BTreeMap, VecDeque};

/// The eight cells of the snail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SnailCell {
    X,
    Y,
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
}

impl SnailCell {
    pub const ALL: [SnailCell; 8] = [
        SnailCell::X,
        SnailCell::Y,
        SnailCell::A1,
        SnailCell::A2,
        SnailCell::A3,
        SnailCell::B1,
        SnailCell::B2,
        SnailCell::B3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SnailCell::X => "X",
            SnailCell::Y => "Y",
            SnailCell::A1 => "A1",
            SnailCell::A2 => "A2",
            SnailCell::A3 => "A3",
            SnailCell::B1 => "B1",
            SnailCell::B2 => "B2",
            SnailCell::B3 => "B3",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        SnailCell::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Names of the six snail arcs.
pub const SNAIL_ARCS: [&str; 6] = ["a1", "a2", "a3", "b1", "b2", "b3"];

/// Size of the snail's B2 cell.
///
/// The eastern wall b1 runs at `x = width` and the southern wall (part of
/// a2) at `y = -depth`; everything else is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SnailFrame {
    pub width: i64,
    pub depth: i64,
}

impl Default for SnailFrame {
    fn default() -> Self {
        SnailFrame {
            width: 120,
            depth: 40,
        }
    }
}

impl SnailFrame {
    /// The six arcs.
    ///
    /// Every crossing is a poke: one of the two arcs ends shortly after it.
    /// That makes each arc border a single cell along its interior, which
    /// is what forces any X–Y path to repeat a color.
    pub fn curves(&self) -> Vec<Curve<Rational>> {
        let (w, h) = (self.width, self.depth);
        vec![
            curve("a1", &[(40, -10), (40, 100), (0, 100)]),
            curve("a2", &[(w + 10, -h), (20, -h), (20, 120), (80, 120), (80, 76)]),
            curve("a3", &[(30, 80), (100, 80), (100, 70), (50, 70), (50, 56)]),
            curve(
                "b1",
                &[(90, 75), (w + 40, 75), (w + 40, -h - 20), (w, -h - 20), (w, 40), (50, 40)],
            ),
            curve("b2", &[(-20, 0), (w + 20, 0)]),
            curve("b3", &[(60, -10), (60, 60), (30, 60)]),
        ]
    }

    /// A point well inside `cell`, away from the snail arcs and from
    /// anything the reduction draws (which stays at integer coordinates
    /// or at heights of at least 1 above b2).
    pub fn label_point(&self, cell: SnailCell) -> RationalPoint {
        let half = Rational::new(1.into(), 2.into());
        let at = |x: i64, y: Rational| RationalPoint::new(Rational::from_integer(x.into()), y);
        match cell {
            SnailCell::X => pt(60, 100),
            SnailCell::A3 => pt(44, 74),
            SnailCell::A2 => at(10, half),
            SnailCell::A1 => at(30, half),
            SnailCell::B3 => at(50, half),
            SnailCell::Y => at(80, half),
            SnailCell::B2 => at(50, -half),
            SnailCell::B1 => at(self.width + 10, half),
        }
    }
}

/// The snail drawing together with its cell labels.
#[derive(Clone, Debug)]
pub struct SnailTemplate {
    pub frame: SnailFrame,
    pub curves: CurveSet<Rational>,
    pub planarization: Planarization,
    /// Face of each cell in `planarization`.
    pub cells: BTreeMap<SnailCell, FaceId>,
    /// Edges of b2 between its crossings with a2 and b3.
    pub b2_star: Vec<EdgeId>,
}

impl SnailTemplate {
    pub fn label_point(&self, cell: SnailCell) -> RationalPoint {
        self.frame.label_point(cell)
    }

    /// The snail with isolated vertices `u` and `v` placed in two cells.
    pub fn with_endpoints(&self, u: SnailCell, v: SnailCell) -> CurveSet<Rational> {
        CurveSet::new(
            self.curves.curves().to_vec(),
            vec![
                ("u".to_string(), self.label_point(u)),
                ("v".to_string(), self.label_point(v)),
            ],
        )
        .expect("fixed ids")
    }
}

/// Builds the snail with the default frame.
pub fn build_snail() -> SnailTemplate {
    build_snail_in(SnailFrame::default())
}

pub(crate) fn build_snail_in(frame: SnailFrame) -> SnailTemplate {
    let curves = CurveSet::new(frame.curves(), vec![]).expect("fixed ids");
    let planarization = build_planarization(&curves, Simplicity::Simple).expect("snail is simple");
    let cells = SnailCell::ALL
        .iter()
        .map(|&c| {
            let q = frame.label_point(c).to_f64();
            (c, planarization.locate(q).expect("geometry present"))
        })
        .collect();
    let b2_star = b2_star_edges(&planarization);
    SnailTemplate {
        frame,
        curves,
        planarization,
        cells,
        b2_star,
    }
}

/// Edges of b2 strictly between its crossings with a2 and b3, in any
/// planarization containing the snail.
pub fn b2_star_edges(p: &Planarization) -> Vec<EdgeId> {
    let Some(b2) = p.color_by_name("b2") else {
        return vec![];
    };
    let walk = p.color_walk(b2);
    let mut res = Vec::new();
    let mut inside = false;
    for &h in &walk {
        let tail = p.tail(h);
        let other = p
            .colors_through(tail)
            .into_iter()
            .find(|&c| c != b2)
            .map(|c| p.colors()[c].name.clone());
        match other.as_deref() {
            Some("a2") => inside = true,
            Some("b3") => inside = false,
            _ => {}
        }
        if inside {
            res.push(p.edge_of(h));
        }
    }
    res
}

/// Assigns every face of `p` to the snail cell containing it.
///
/// Faces holding the label points are seeded, then labels spread across
/// every edge that is not part of a snail arc.
pub fn tag_cells(p: &Planarization, frame: &SnailFrame) -> Vec<Option<SnailCell>> {
    let mut tag: Vec<Option<SnailCell>> = vec![None; p.faces().len()];
    let snail: Vec<bool> = p
        .colors()
        .iter()
        .map(|c| SNAIL_ARCS.contains(&c.name.as_str()))
        .collect();
    let mut queue = VecDeque::new();
    for c in SnailCell::ALL {
        if let Some(f) = p.locate(frame.label_point(c).to_f64()) {
            tag[f] = Some(c);
            queue.push_back(f);
        }
    }
    while let Some(f) = queue.pop_front() {
        for &h in &p.faces()[f].half_edges {
            if snail[p.half_edges()[h].color] {
                continue;
            }
            let g = p.face_of(p.half_edges()[h].twin);
            if tag[g].is_none() {
                tag[g] = tag[f];
                queue.push_back(g);
            }
        }
    }
    tag
}
