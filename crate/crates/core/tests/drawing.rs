use insdraw::drawing::json::{CombinatorialJson, GeometricJson};
use insdraw::drawing::{
    colored_dual, faces, validate_simple, verify_witness, Planarization, Step, Violation, Witness,
};
use insdraw::geom::{build_planarization, Curve, CurveSet, Polyline, Simplicity};
use insdraw::reduction::{build_snail, SnailCell};
use insdraw::{int, RationalCurveSet, RationalPoint};

fn p(x: i64, y: i64) -> RationalPoint {
    RationalPoint::new(int(x), int(y))
}

fn curve(id: &str, pts: &[(i64, i64)], closed: bool) -> Curve<insdraw::Rational> {
    Curve {
        id: id.into(),
        polyline: Polyline::new(pts.iter().map(|&(x, y)| p(x, y)).collect(), closed).unwrap(),
    }
}

fn with_uv(curves: Vec<Curve<insdraw::Rational>>, u: (i64, i64), v: (i64, i64)) -> RationalCurveSet {
    CurveSet::new(curves, vec![("u".into(), p(u.0, u.1)), ("v".into(), p(v.0, v.1))]).unwrap()
}

fn simple(cs: &RationalCurveSet) -> Planarization {
    build_planarization(cs, Simplicity::Simple).unwrap()
}

fn x_drawing() -> RationalCurveSet {
    CurveSet::new(
        vec![curve("a", &[(0, 0), (2, 2)], false), curve("b", &[(0, 2), (2, 0)], false)],
        vec![],
    )
    .unwrap()
}

fn uv(p: &Planarization) -> (usize, usize) {
    (p.vertex_by_name("u").unwrap(), p.vertex_by_name("v").unwrap())
}

#[test]
fn x_crossing_is_simple() {
    let m = simple(&x_drawing());
    assert!(validate_simple(&m).unwrap().is_ok());
}

#[test]
fn double_crossing_is_reported_once() {
    let cs = CurveSet::new(
        vec![
            curve("a", &[(0, 0), (4, 0)], false),
            curve("b", &[(1, -1), (2, 1), (3, -1)], false),
        ],
        vec![],
    )
    .unwrap();
    let m = build_planarization(&cs, Simplicity::Unrestricted).unwrap();
    let r = validate_simple(&m).unwrap();
    assert_eq!(
        r.violations,
        vec![Violation::PairCrossingBound { a: "a".into(), b: "b".into() }]
    );
}

#[test]
fn snail_is_simple_with_eight_faces() {
    let s = build_snail();
    assert!(validate_simple(&s.planarization).unwrap().is_ok());
    assert_eq!(faces(&s.planarization).len(), 8);
}

#[test]
fn square_and_x_have_two_faces() {
    let sq = CurveSet::new(vec![curve("s", &[(0, 0), (1, 0), (1, 1), (0, 1)], true)], vec![]).unwrap();
    assert_eq!(faces(&simple(&sq)).len(), 2);
    // Two straight segments crossing once enclose nothing: one face.
    let x = simple(&x_drawing());
    assert_eq!(faces(&x).len(), 1);
}

#[test]
fn every_half_edge_in_one_face_cycle() {
    let m = simple(&x_drawing());
    let mut seen = vec![0; m.half_edges().len()];
    for cyc in m.face_cycles() {
        for h in cyc {
            seen[h] += 1;
        }
    }
    assert!(seen.iter().all(|&c| c == 1));
}

#[test]
fn matching_dual_keeps_every_arc() {
    let cs = with_uv(
        vec![curve("a", &[(0, 0), (2, 2)], false), curve("b", &[(0, 2), (2, 0)], false)],
        (5, 5),
        (-3, 1),
    );
    let m = simple(&cs);
    let (u, v) = uv(&m);
    let d = colored_dual(&m, u, v).unwrap();
    assert_eq!(d.arcs.len(), m.num_edges());
    assert_eq!(d.num_faces, faces(&m).len());
}

#[test]
fn star_at_u_loses_all_arcs() {
    let cs = CurveSet::new(
        vec![
            curve("a", &[(0, 0), (3, 0)], false),
            curve("b", &[(0, 0), (0, 3)], false),
            curve("c", &[(0, 0), (-3, -1)], false),
        ],
        vec![("v".into(), p(5, 5))],
    )
    .unwrap();
    let m = simple(&cs);
    let u = m.vertex_by_name("a.s").unwrap();
    assert_eq!(m.degree(u), 3);
    let v = m.vertex_by_name("v").unwrap();
    let d = colored_dual(&m, u, v).unwrap();
    assert!(d.arcs.is_empty());
    assert_eq!(d.num_faces, faces(&m).len());
}

#[test]
fn snail_prime_dual_counts() {
    let s = build_snail();
    let m = simple(&s.with_endpoints(SnailCell::X, SnailCell::B2));
    let (u, v) = uv(&m);
    let d = colored_dual(&m, u, v).unwrap();
    assert_eq!(d.num_faces, 8);
    assert_eq!(d.arcs.len(), m.num_edges());
}

#[test]
fn verify_witness_examples() {
    let cs = with_uv(vec![curve("a", &[(0, 0), (2, 2)], false)], (5, 5), (-3, 1));
    let m = simple(&cs);
    let (u, v) = uv(&m);
    let d = colored_dual(&m, u, v).unwrap();
    let f = m.outer_face();
    let empty = Witness { start_face: f, steps: vec![], end_face: f };
    assert!(verify_witness(&d, &empty));

    // A square inside a square; v sits in the ring between them.
    let cs = with_uv(
        vec![
            curve("o", &[(0, 0), (10, 0), (10, 10), (0, 10)], true),
            curve("i", &[(3, 3), (7, 3), (7, 7), (3, 7)], true),
        ],
        (5, 5),
        (1, 1),
    );
    let m = simple(&cs);
    let (u, v) = uv(&m);
    let d = colored_dual(&m, u, v).unwrap();
    let fu = d.u_faces[0];
    let fv = d.v_faces[0];
    let inner = d.neighbors(fu)[0];
    let good = Witness {
        start_face: fu,
        steps: vec![Step { arc: inner.1, color: inner.0 }],
        end_face: fv,
    };
    assert!(verify_witness(&d, &good));
    let outer = *d.neighbors(fv).iter().find(|x| x.2 != fu).unwrap();
    let repeat = Witness {
        start_face: fu,
        steps: vec![
            Step { arc: inner.1, color: inner.0 },
            Step { arc: outer.1, color: outer.0 },
            Step { arc: outer.1, color: outer.0 },
        ],
        end_face: fv,
    };
    assert!(!verify_witness(&d, &repeat));
}

#[test]
fn combinatorial_json_round_trip() {
    let m = build_snail().planarization;
    let j = CombinatorialJson::from_planarization(&m);
    let text = serde_json::to_string(&j).unwrap();
    let back: CombinatorialJson = serde_json::from_str(&text).unwrap();
    let m2 = back.to_planarization().unwrap();
    assert_eq!(m2.half_edges(), m.half_edges());
    assert_eq!(m2.faces().len(), m.faces().len());
    assert_eq!(m2.outer_face(), m.outer_face());
    assert_eq!(serde_json::to_string(&CombinatorialJson::from_planarization(&m2)).unwrap(), text);
}

#[test]
fn combinatorial_json_rejects_disconnected_maps() {
    let m = simple(&build_snail().with_endpoints(SnailCell::X, SnailCell::B2));
    assert!(CombinatorialJson::from_planarization(&m).to_planarization().is_err());
}

#[test]
fn geometric_json_accepts_fractions() {
    let text = r#"{"curves": [{"id": "a", "closed": false, "points": [[0, 0], [1, 2, 3, 1]]}],
                   "isolated": [{"id": "u", "point": [5, 5]}]}"#;
    let g: GeometricJson = serde_json::from_str(text).unwrap();
    let cs = g.to_curve_set().unwrap();
    let q = &cs.curves()[0].polyline.points()[1];
    assert_eq!(q, &RationalPoint::new(insdraw::rat(1, 2), int(3)));
    let again = serde_json::to_string(&GeometricJson::from_curve_set(&cs)).unwrap();
    let g2: GeometricJson = serde_json::from_str(&again).unwrap();
    assert_eq!(g2.to_curve_set().unwrap().curves()[0].polyline.points(), cs.curves()[0].polyline.points());
}
