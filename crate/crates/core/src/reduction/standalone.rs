//! Single gadgets inside a closed rectangular frame, for checking each
//! gadget's crossing property in isolation.
//!
//! `u` sits above the gadget and `v` below it, both inside the frame. The
//! frame is one closed curve, so a witness that left it would have to
//! cross it twice; in effect its sides play the role of the walls λ and μ.

use super::geometry::{curve, pt};
use crate::geom::{Curve, CurveSet, Polyline};
use crate::Rational;

/// A standalone gadget and the names of its arcs.
#[derive(Clone, Debug)]
pub struct Standalone {
    pub drawing: CurveSet<Rational>,
    /// Variable gadget: arcs ending on the left side. Clause gadget: γa, γb, γc.
    pub first: Vec<String>,
    /// Variable gadget: arcs ending on the right side. Clause gadget: dg.
    pub second: Vec<String>,
}

fn frame(w: i64, h: i64) -> Curve<Rational> {
    Curve {
        id: "frame".into(),
        polyline: Polyline::new(vec![pt(0, 0), pt(w, 0), pt(w, h), pt(0, h)], true)
            .expect("rectangle"),
    }
}

/// Variable gadget with `np` arcs in P (ending on the left side) and `nn`
/// in N (ending on the right side). Every P arc crosses every N arc.
pub fn variable_gadget(np: usize, nn: usize) -> Standalone {
    let (np, nn) = (np as i64, nn as i64);
    let y0 = 2;
    let c = nn + 3;
    let w = c + np + 3;
    let h = y0 + 2 * np.max(nn) + 4;
    let mut curves = vec![frame(w, h)];
    let mut p_names = Vec::new();
    let mut n_names = Vec::new();
    for j in 0..np {
        let name = format!("p{}", j + 1);
        let (x, y) = (c + j, y0 + 2 * j + 1);
        curves.push(curve(&name, &[(x, y0), (x, y), (-1, y)]));
        p_names.push(name);
    }
    for i in 0..nn {
        let name = format!("n{}", i + 1);
        let (x, y) = (c - 1 - i, y0 + 2 * i + 2);
        curves.push(curve(&name, &[(x, y0), (x, y), (w + 1, y)]));
        n_names.push(name);
    }
    let drawing = CurveSet::new(
        curves,
        vec![("u".into(), pt(1, h - 1)), ("v".into(), pt(1, 1))],
    )
    .expect("fixed ids");
    Standalone {
        drawing,
        first: p_names,
        second: n_names,
    }
}

/// Clause gadget: γa and γb leave the left side, γc the right side, and dg
/// crosses γa, γc, γb in that order.
pub fn clause_gadget() -> Standalone {
    let curves = vec![
        frame(20, 20),
        curve("gamma_a", &[(-2, 12), (12, 12)]),
        curve("gamma_b", &[(-2, 4), (12, 4)]),
        curve("gamma_c", &[(22, 8), (8, 8)]),
        curve("dg", &[(10, 14), (10, 2)]),
    ];
    let drawing = CurveSet::new(
        curves,
        vec![("u".into(), pt(16, 18)), ("v".into(), pt(16, 1))],
    )
    .expect("fixed ids");
    Standalone {
        drawing,
        first: vec!["gamma_a".into(), "gamma_b".into(), "gamma_c".into()],
        second: vec!["dg".into()],
    }
}
