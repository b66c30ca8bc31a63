use insdraw::pseudocircles::instances::{interlocked_pair, single_crossing_trap};
use insdraw::pseudocircles::*;
use insdraw::{int, Rational, RationalPoint};
use insdraw::geom::Polyline;

fn p(x: i64, y: i64) -> RationalPoint {
    RationalPoint::new(int(x), int(y))
}

fn rect(x0: i64, y0: i64, x1: i64, y1: i64) -> Polyline<Rational> {
    Polyline::new(vec![p(x0, y0), p(x1, y0), p(x1, y1), p(x0, y1)], true).unwrap()
}

fn arrangement(circles: Vec<(&str, Polyline<Rational>)>, sigma: &[(i64, i64)]) -> Arrangement {
    let pts: Vec<_> = sigma.iter().map(|&(x, y)| p(x, y)).collect();
    let n = pts.len();
    let s = SigmaPath::new(pts[0].clone(), pts[1..n - 1].to_vec(), pts[n - 1].clone()).unwrap();
    Arrangement::new(circles.into_iter().map(|(i, c)| (i.to_string(), c)).collect(), s).unwrap()
}

fn empty() -> Arrangement {
    arrangement(vec![], &[(0, 0), (3, 1)])
}

#[test]
fn empty_arrangement() {
    let a = empty();
    let cls = classify(&a).unwrap();
    assert!(cls.c0.is_empty() && cls.c1.is_empty() && cls.c2.is_empty());
    let InitialRegion::Region(r) = initial_region(&a, &cls) else { panic!() };
    assert!(r.is_empty());
    assert_eq!(grow(&a, &cls, &r, ScanOrder::Ascending), GrowStep::Fixpoint);
    let ExtendOutcome::Yes(c) = extend(&a).unwrap() else { panic!() };
    assert!(c.crossings.is_empty());
    assert!(verify_certificate(&a, &cls, &c));
    let o = oracle_extend(&a, DEFAULT_ORACLE_BUDGET).unwrap().unwrap();
    assert!(o.crossings.is_empty());
}

#[test]
fn circle_crossed_twice_is_c2_and_its_disk_is_r0() {
    let a = arrangement(vec![("c", rect(2, -2, 5, 2))], &[(0, 0), (8, 0)]);
    let cls = classify(&a).unwrap();
    assert_eq!(cls.c2, vec![0]);
    let InitialRegion::Region(r) = initial_region(&a, &cls) else { panic!() };
    let inside: Vec<_> = (0..a.num_faces()).filter(|&f| a.inside(f, 0)).collect();
    assert_eq!(r.face_ids(), inside);
    let ExtendOutcome::Yes(c) = extend(&a).unwrap() else { panic!() };
    assert!(c.crossings.is_empty());
}

#[test]
fn single_c1_circle_around_v() {
    let a = arrangement(vec![("c", rect(4, -3, 10, 3))], &[(0, 0), (7, 0)]);
    let cls = classify(&a).unwrap();
    assert_eq!(cls.c1, vec![0]);
    let InitialRegion::Region(r) = initial_region(&a, &cls) else { panic!() };
    assert!(r.is_empty());
    assert_eq!(grow(&a, &cls, &r, ScanOrder::Ascending), GrowStep::Fixpoint);
    let ExtendOutcome::Yes(c) = extend(&a).unwrap() else { panic!() };
    assert_eq!(c.crossings.len(), 1);
    assert_eq!(c.crossings[0].circle, "c");
    assert!(c.side.is_some());
    let o = oracle_extend(&a, DEFAULT_ORACLE_BUDGET).unwrap().unwrap();
    assert_eq!(o.crossings.len(), 1);
    assert!(verify_certificate(&a, &cls, &o));
}

#[test]
fn certificate_through_c2_circle_is_rejected() {
    // `e` is crossed once (around v), `c` twice; the two overlap.
    let a = arrangement(
        vec![("c", rect(6, -2, 9, 2)), ("e", rect(8, -3, 12, 3))],
        &[(0, 0), (10, 0)],
    );
    let cls = classify(&a).unwrap();
    assert_eq!((cls.c1.clone(), cls.c2.clone()), (vec![1], vec![0]));
    let ExtendOutcome::Yes(good) = extend(&a).unwrap() else { panic!() };
    assert!(verify_certificate(&a, &cls, &good));

    // Outer face, into c above σ, into c ∩ e, out of c next to v.
    let pl = a.planarization();
    let walk: Vec<_> = [[0.0, 5.0], [7.0, 1.0], [8.5, 1.0], [11.0, 1.0]]
        .iter()
        .map(|&q| pl.locate(q).unwrap())
        .collect();
    assert_eq!(walk[0], a.u_face());
    assert_eq!(walk[3], a.v_face());
    let crossings = walk
        .windows(2)
        .map(|w| {
            let e = (0..pl.num_edges())
                .find(|&e| {
                    let (f, g) = pl.edge_faces(e);
                    !a.is_sigma_edge(e) && ((f, g) == (w[0], w[1]) || (g, f) == (w[0], w[1]))
                })
                .unwrap();
            CertCrossing { circle: a.circle_id(a.edge_circle(e).unwrap()).into(), edge: e }
        })
        .collect::<Vec<_>>();
    let names: Vec<&str> = crossings.iter().map(|c| c.circle.as_str()).collect();
    assert_eq!(names, ["c", "e", "c"]);
    let bad = ExtensionCertificate { side: None, crossings, faces: walk };
    assert!(!verify_certificate(&a, &cls, &bad));
}

#[test]
fn sigma_crossing_a_circle_four_times_is_rejected() {
    let a = arrangement(
        vec![("c", rect(2, -2, 5, 2))],
        &[(0, 0), (8, 0), (8, 1), (3, 1), (3, 5)],
    );
    assert!(matches!(classify(&a), Err(PseudocircleError::TooManyCrossings(_, 4))));
    assert!(extend(&a).is_err());
}

#[test]
fn circles_crossing_four_times_are_rejected() {
    let plus = |id: &str| (id.to_string(), rect(0, 3, 10, 6));
    let tall = ("t".to_string(), rect(3, 0, 6, 10));
    let s = SigmaPath::new(p(-5, -5), vec![], p(-4, -5)).unwrap();
    assert!(matches!(
        Arrangement::new(vec![plus("w"), tall], s),
        Err(PseudocircleError::PairCrossings(_, _, 4))
    ));
}

#[test]
fn interlocked_pair_is_no_at_start() {
    let a = interlocked_pair();
    let cls = classify(&a).unwrap();
    assert_eq!(cls.c2, vec![0, 1]);
    assert_eq!(initial_region(&a, &cls), InitialRegion::Infeasible);
    assert_eq!(extend(&a).unwrap(), ExtendOutcome::No(Obstruction::Initial));
    assert_eq!(oracle_extend(&a, DEFAULT_ORACLE_BUDGET).unwrap(), None);
}

#[test]
fn single_crossing_trap_is_no_after_growth() {
    let a = single_crossing_trap();
    let cls = classify(&a).unwrap();
    assert_eq!(cls.c1, vec![0]);
    assert_eq!(cls.c2, vec![1, 2]);
    let InitialRegion::Region(r) = initial_region(&a, &cls) else { panic!("v enclosed too early") };
    assert!(matches!(grow(&a, &cls, &r, ScanOrder::Ascending), GrowStep::Infeasible { circle: 0 }));
    assert_eq!(
        extend(&a).unwrap(),
        ExtendOutcome::No(Obstruction::Growth { iteration: 1, circle: 0 })
    );
    assert_eq!(oracle_extend(&a, DEFAULT_ORACLE_BUDGET).unwrap(), None);
}

#[test]
fn arrangement_json_round_trip() {
    for a in [interlocked_pair(), single_crossing_trap(), empty()] {
        let text = serde_json::to_string(&a.to_json()).unwrap();
        let back: ArrangementJson = serde_json::from_str(&text).unwrap();
        let b = back.to_arrangement().unwrap();
        assert_eq!(serde_json::to_string(&b.to_json()).unwrap(), text);
        assert_eq!(extend(&a).unwrap(), extend(&b).unwrap());
    }
}

#[test]
fn oracle_budget_is_enforced() {
    let a = single_crossing_trap();
    assert_eq!(oracle_extend(&a, 1), Err(PseudocircleError::Timeout(1)));
}
