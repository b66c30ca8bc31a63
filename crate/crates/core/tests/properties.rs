use insdraw::drawing::json::GeometricJson;
use insdraw::drawing::{validate_simple, Planarization};
use insdraw::gen::{self, ArrangementParams, DrawingParams};
use insdraw::geom::{build_planarization, Simplicity};
use insdraw::insertion::{insertable, kernelize, KernelSize, Strategy, DEFAULT_BUDGET};
use insdraw::pseudocircles::{
    classify, extend_traced, oracle_extend, verify_certificate, ExtendOutcome, ScanOrder,
    DEFAULT_ORACLE_BUDGET,
};
use insdraw::{int, RationalCurveSet, RationalPoint};
use proptest::prelude::*;

fn drawing(seed: u64) -> RationalCurveSet {
    gen::random_drawing(&mut gen::rng(seed), &DrawingParams::default())
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_drawings_are_simple(seed in any::<u64>()) {
        let m = planarize(&drawing(seed));
        prop_assert!(validate_simple(&m).unwrap().is_ok());
    }

    #[test]
    fn twin_and_face_laws(seed in any::<u64>()) {
        let m = planarize(&drawing(seed));
        let he = m.half_edges();
        for h in 0..he.len() {
            prop_assert_eq!(he[he[h].twin].twin, h);
            prop_assert_ne!(he[h].twin, h);
            prop_assert_eq!(m.tail(he[h].twin), he[h].head);
            prop_assert_eq!(m.face_of(m.face_next(h)), m.face_of(h));
        }
        for v in 0..m.vertices().len() {
            for h in m.outgoing(v) {
                prop_assert_eq!(m.tail(h), v);
            }
        }
    }

    #[test]
    fn euler_formula(seed in any::<u64>()) {
        let m = planarize(&drawing(seed));
        let v = m.vertices().len() as i64;
        let e = m.num_edges() as i64;
        let f = m.faces().len() as i64;
        let c = m.components().len() as i64;
        prop_assert_eq!(v - e + f, 1 + c);
    }

    #[test]
    fn translation_keeps_combinatorics(seed in any::<u64>(), dx in -50i64..50, dy in -50i64..50) {
        let cs = drawing(seed);
        let moved = cs.translate(&RationalPoint::new(int(dx), int(dy)));
        let (a, b) = (planarize(&cs), planarize(&moved));
        prop_assert_eq!(a.half_edges(), b.half_edges());
        prop_assert_eq!(a.faces().len(), b.faces().len());
        prop_assert_eq!(a.outer_face(), b.outer_face());
        prop_assert_eq!(decide(&a, Strategy::Oracle), decide(&b, Strategy::Oracle));
    }

    #[test]
    fn geometric_json_round_trip(seed in any::<u64>()) {
        let cs = drawing(seed);
        let text = serde_json::to_string(&GeometricJson::from_curve_set(&cs)).unwrap();
        let back: GeometricJson = serde_json::from_str(&text).unwrap();
        let cs2 = back.to_curve_set().unwrap();
        prop_assert_eq!(&cs2, &cs);
    }

    #[test]
    fn kernel_bounds_and_invariance(seed in any::<u64>()) {
        let m = planarize(&drawing(seed));
        let (u, v) = uv(&m);
        let k = kernelize(&m, u, v);
        let c = m.crossing_count();
        let size = KernelSize::of(&k.map);
        prop_assert!(size.vertices <= 4 * c + 2);
        prop_assert!(size.edges <= 2 * c);
        prop_assert_eq!(size.crossings, c);
        let on_kernel = insertable(&k.map, k.u, k.v, Strategy::Oracle, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(on_kernel.is_yes(), decide(&m, Strategy::Oracle));
    }

    #[test]
    fn strategies_agree(seed in any::<u64>()) {
        let m = planarize(&drawing(seed));
        prop_assert_eq!(decide(&m, Strategy::Oracle), decide(&m, Strategy::Fpt));
    }

    #[test]
    fn deleting_an_edge_keeps_yes(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let cs = drawing(seed);
        prop_assume!(decide(&planarize(&cs), Strategy::Oracle));
        let id = cs.curves()[pick.index(cs.curves().len())].id.clone();
        let smaller = cs.without(&[id.as_str()]);
        prop_assert!(decide(&planarize(&smaller), Strategy::Oracle));
    }

    #[test]
    fn extension_is_consistent(seed in any::<u64>()) {
        let a = gen::random_arrangement(&mut gen::rng(seed), &ArrangementParams::default());
        let cls = classify(&a).unwrap();
        let asc = extend_traced(&a, ScanOrder::Ascending).unwrap();
        let desc = extend_traced(&a, ScanOrder::Descending).unwrap();
        prop_assert_eq!(asc.outcome.is_yes(), desc.outcome.is_yes());
        prop_assert!(asc.iterations <= a.num_faces());
        for t in [&asc, &desc] {
            if let ExtendOutcome::Yes(c) = &t.outcome {
                prop_assert!(verify_certificate(&a, &cls, c));
            }
        }
        if let Some(c) = oracle_extend(&a, DEFAULT_ORACLE_BUDGET).unwrap() {
            prop_assert!(verify_certificate(&a, &cls, &c));
            prop_assert!(asc.outcome.is_yes());
        }
    }
}
