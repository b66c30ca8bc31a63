use insdraw::drawing::{colored_dual, verify_witness, Planarization, VertexKind};
use insdraw::geom::{build_planarization, Curve, CurveSet, Polyline, Simplicity};
use insdraw::insertion::{
    enumerate_witnesses, insertable, kernelize, memo_search, KernelSize, Answer, InsertionError, NogoodSearch,
    PathSearch, SearchedMap, Strategy, DEFAULT_BUDGET,
};
use insdraw::reduction::{build_snail, SnailCell};
use insdraw::{int, Rational, RationalCurveSet, RationalPoint};

fn p(x: i64, y: i64) -> RationalPoint {
    RationalPoint::new(int(x), int(y))
}

fn seg(id: &str, a: (i64, i64), b: (i64, i64)) -> Curve<Rational> {
    Curve {
        id: id.into(),
        polyline: Polyline::new(vec![p(a.0, a.1), p(b.0, b.1)], false).unwrap(),
    }
}

fn ring(id: &str, pts: &[(i64, i64)]) -> Curve<Rational> {
    Curve {
        id: id.into(),
        polyline: Polyline::new(pts.iter().map(|&(x, y)| p(x, y)).collect(), true).unwrap(),
    }
}

fn planarize(cs: &RationalCurveSet) -> Planarization {
    build_planarization(cs, Simplicity::Simple).unwrap()
}

fn uv(m: &Planarization) -> (usize, usize) {
    (m.vertex_by_name("u").unwrap(), m.vertex_by_name("v").unwrap())
}

fn decide(m: &Planarization, s: Strategy) -> bool {
    let (u, v) = uv(m);
    insertable(m, u, v, s, DEFAULT_BUDGET).unwrap().is_yes()
}

/// Three segments crossing pairwise, like a triangle with extended sides.
fn triangle_matching() -> Vec<Curve<Rational>> {
    vec![
        seg("a", (0, 0), (10, 1)),
        seg("b", (1, -2), (6, 8)),
        seg("c", (9, -2), (3, 8)),
    ]
}

#[test]
fn shared_face_gives_empty_witness() {
    let cs = CurveSet::new(triangle_matching(), vec![("u".into(), p(-5, 0)), ("v".into(), p(20, 5))]).unwrap();
    let m = planarize(&cs);
    for s in [Strategy::Oracle, Strategy::Fpt] {
        let (u, v) = uv(&m);
        let d = insertable(&m, u, v, s, DEFAULT_BUDGET).unwrap();
        match d.answer {
            Answer::Yes(w) => assert!(w.steps.is_empty()),
            Answer::No => panic!("expected yes"),
        }
    }
}

#[test]
fn triangle_interior_needs_one_crossing() {
    let cs = CurveSet::new(triangle_matching(), vec![("u".into(), p(-5, 0)), ("v".into(), p(5, 2))]).unwrap();
    let m = planarize(&cs);
    let (u, v) = uv(&m);
    let d = insertable(&m, u, v, Strategy::Oracle, DEFAULT_BUDGET).unwrap();
    let Answer::Yes(w) = &d.answer else { panic!("expected yes") };
    assert_eq!(w.steps.len(), 1);
    assert!(verify_witness(&colored_dual(&m, u, v).unwrap(), w));
}

#[test]
fn matching_kernel_is_unchanged() {
    let cs = CurveSet::new(triangle_matching(), vec![("u".into(), p(-5, 0)), ("v".into(), p(5, 2))]).unwrap();
    let m = planarize(&cs);
    let (u, v) = uv(&m);
    let k = kernelize(&m, u, v);
    assert_eq!(k.map.vertices().len(), m.vertices().len());
    assert_eq!(k.map.colors().len(), 3);
    assert_eq!(k.map.half_edges(), m.half_edges());
}

#[test]
fn kernel_drops_uncrossed_edge_and_isolated_vertex() {
    let cs = CurveSet::new(
        vec![seg("a", (0, 0), (2, 2)), seg("b", (0, 2), (2, 0)), seg("far", (50, 50), (60, 50))],
        vec![("u".into(), p(-3, 1)), ("v".into(), p(5, 1)), ("w".into(), p(30, 30))],
    )
    .unwrap();
    let m = planarize(&cs);
    let (u, v) = uv(&m);
    let k = kernelize(&m, u, v);
    assert_eq!(k.map.vertices().len(), 7);
    let names: Vec<&str> = k.map.vertices().iter().map(|x| x.name.as_str()).collect();
    assert!(!names.contains(&"w") && !names.contains(&"far.s"));
    assert_eq!(k.map.colors().len(), 2);
    assert_eq!(k.map.vertices()[k.u].name, "u");
    assert_eq!(k.map.vertices()[k.v].name, "v");
}

#[test]
fn kernel_size_bound_on_snail() {
    let m = planarize(&build_snail().with_endpoints(SnailCell::X, SnailCell::Y));
    let (u, v) = uv(&m);
    let k = kernelize(&m, u, v);
    let c = m.crossing_count();
    let size = KernelSize::of(&k.map);
    assert!(size.vertices <= 4 * c + 2);
    assert!(size.edges <= 2 * c);
}

#[test]
fn snail_x_to_y_is_no() {
    let m = planarize(&build_snail().with_endpoints(SnailCell::X, SnailCell::Y));
    assert!(!decide(&m, Strategy::Oracle));
    assert!(!decide(&m, Strategy::Fpt));
}

#[test]
fn snail_x_to_b2_always_crosses_b2_star() {
    let s = build_snail();
    let m = planarize(&s.with_endpoints(SnailCell::X, SnailCell::B2));
    let (u, v) = uv(&m);
    let b2 = m.color_by_name("b2").unwrap();
    let star = insdraw::reduction::b2_star_edges(&m);
    let ws = enumerate_witnesses(&m, u, v, usize::MAX, DEFAULT_BUDGET).unwrap();
    assert!(!ws.is_empty());
    for w in &ws {
        assert!(w.steps.iter().any(|st| st.color == b2 && star.contains(&st.arc)));
    }
    let d = insertable(&m, u, v, Strategy::Oracle, DEFAULT_BUDGET).unwrap();
    let Answer::Yes(w) = d.answer else { panic!("expected yes") };
    assert!(ws.contains(&w));
}

#[test]
fn fpt_witness_lives_on_kernel() {
    let m = planarize(&build_snail().with_endpoints(SnailCell::X, SnailCell::B2));
    let (u, v) = uv(&m);
    let d = insertable(&m, u, v, Strategy::Fpt, DEFAULT_BUDGET).unwrap();
    assert_eq!(d.witness_on, SearchedMap::Kernel);
    let k = kernelize(&m, u, v);
    let Answer::Yes(w) = d.answer else { panic!("expected yes") };
    assert!(verify_witness(&colored_dual(&k.map, k.u, k.v).unwrap(), &w));
}

#[test]
fn empty_drawing_has_one_empty_witness() {
    let cs = CurveSet::new(vec![], vec![("u".into(), p(0, 0)), ("v".into(), p(1, 0))]).unwrap();
    let m = planarize(&cs);
    let (u, v) = uv(&m);
    let ws = enumerate_witnesses(&m, u, v, 10, DEFAULT_BUDGET).unwrap();
    assert_eq!(ws.len(), 1);
    assert!(ws[0].steps.is_empty());
}

#[test]
fn nested_rings_have_one_witness() {
    let cs = CurveSet::new(
        vec![
            ring("o", &[(0, 0), (20, 0), (20, 20), (0, 20)]),
            ring("i", &[(5, 5), (15, 5), (15, 15), (5, 15)]),
        ],
        vec![("u".into(), p(10, 10)), ("v".into(), p(30, 30))],
    )
    .unwrap();
    let m = planarize(&cs);
    let (u, v) = uv(&m);
    let ws = enumerate_witnesses(&m, u, v, 10, DEFAULT_BUDGET).unwrap();
    assert_eq!(ws.len(), 1);
    assert_eq!(ws[0].steps.len(), 2);
}

#[test]
fn search_engines_agree_on_snail_cells() {
    let s = build_snail();
    for a in SnailCell::ALL {
        for b in SnailCell::ALL.into_iter().filter(|&b| b != a) {
            let m = planarize(&s.with_endpoints(a, b));
            let (u, v) = uv(&m);
            let d = colored_dual(&m, u, v).unwrap();
            let ng = NogoodSearch::new(&d, DEFAULT_BUDGET).first().unwrap();
            let ps = PathSearch::new(&d, DEFAULT_BUDGET).first().unwrap();
            let (memo, _) = memo_search(&d, DEFAULT_BUDGET).unwrap();
            assert_eq!(ng.is_some(), ps.is_some(), "{a:?} {b:?}");
            assert_eq!(ng.is_some(), memo.is_some(), "{a:?} {b:?}");
            for w in [ng, ps, memo].into_iter().flatten() {
                assert!(verify_witness(&d, &w));
            }
        }
    }
}

#[test]
fn timeout_is_reported() {
    let m = planarize(&build_snail().with_endpoints(SnailCell::X, SnailCell::Y));
    let (u, v) = uv(&m);
    assert_eq!(
        insertable(&m, u, v, Strategy::Oracle, 1).unwrap_err(),
        InsertionError::Timeout(1)
    );
}

#[test]
fn non_original_endpoint_is_rejected() {
    let cs = CurveSet::new(triangle_matching(), vec![("u".into(), p(-5, 0))]).unwrap();
    let m = planarize(&cs);
    let u = m.vertex_by_name("u").unwrap();
    let x = m.vertices().iter().position(|w| w.kind == VertexKind::Crossing).unwrap();
    assert!(matches!(
        insertable(&m, u, x, Strategy::Oracle, DEFAULT_BUDGET),
        Err(InsertionError::Drawing(_))
    ));
}
