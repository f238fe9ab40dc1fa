use cover_pebbling::solver::{
    check_product_equality, connected_graphs, sweep_goodness, SweepOptions, Verdict,
};
use cover_pebbling::*;

fn coverable(g: &Graph, d: &str) -> bool {
    decide_coverable(g, &d.parse().unwrap(), Budget::default())
        .unwrap()
        .coverable
}

#[test]
fn small_decisions() {
    let p2 = Graph::path(2).unwrap();
    assert!(coverable(&p2, "3,0"));
    assert!(!coverable(&p2, "2,0"));
    assert!(coverable(&p2, "1,1"));

    let c4 = Graph::cycle(4).unwrap();
    assert!(coverable(&c4, "9,0,0,0"));
    assert!(!coverable(&c4, "8,0,0,0"));
    assert!(coverable(&c4, "0,4,0,3"));
}

#[test]
fn coverable_answers_carry_a_replayable_trace() {
    let k4 = Graph::complete(4).unwrap();
    let r = decide_coverable(&k4, &"7,0,0,0".parse().unwrap(), Budget::default()).unwrap();
    let trace = r.trace.unwrap();
    assert!(replay(&k4, &trace).unwrap().is_q_covered(1));
}

#[test]
fn exact_matches_formulas() {
    let graphs = [
        Graph::path(5).unwrap(),
        Graph::cycle(6).unwrap(),
        Graph::complete(5).unwrap(),
        Graph::star(5).unwrap(),
        Graph::tree(&[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap(),
    ];
    for g in &graphs {
        let exact = gamma_exact(g, Budget::default()).unwrap();
        assert_eq!(exact.gamma, gamma_formula(g).unwrap().value, "{g}");
        assert!(exact.good);
        assert!(
            !decide_coverable(g, &exact.witness, Budget::default())
                .unwrap()
                .coverable
        );
        assert_eq!(exact.witness.total() + 1, exact.gamma);
    }
}

#[test]
fn budget_exhaustion_is_an_error() {
    let tight = Budget {
        max_states: 3,
        ..Budget::default()
    };
    let c5 = Graph::cycle(5).unwrap();
    assert!(matches!(gamma_exact(&c5, tight), Err(Error::ResourceLimit(_))));

    let low_total = Budget {
        max_total: 10,
        ..Budget::default()
    };
    assert!(matches!(
        gamma_exact(&c5, low_total),
        Err(Error::ResourceLimit(_))
    ));
}

#[test]
fn square_product_equality() {
    let p2 = Graph::path(2).unwrap();
    let eq = check_product_equality(&p2, &p2, Budget::default()).unwrap();
    assert_eq!((eq.gamma_g, eq.gamma_h, eq.gamma_product), (3, 3, 9));
    assert!(eq.equal && eq.product_good && eq.paired_sigma_factorizes);
}

#[test]
fn sweep_over_four_vertices() {
    let report = sweep_goodness(4, SweepOptions::default(), Budget::default()).unwrap();
    assert_eq!(report.graphs_on(4).count(), 38);
    assert_eq!(report.counterexamples().count(), 0);
    assert!(report.entries.iter().all(|e| e.verdict == Verdict::Good));

    let deduped = SweepOptions {
        dedup: true,
        ..SweepOptions::default()
    };
    let report = sweep_goodness(3, deduped, Budget::default()).unwrap();
    assert_eq!(report.graphs_on(3).count(), 2);
    assert_eq!(connected_graphs(4, true).unwrap().len(), 6);
}

#[test]
fn sweep_tsv_is_stable() {
    let a = sweep_goodness(3, SweepOptions::default(), Budget::default())
        .unwrap()
        .to_tsv();
    let b = sweep_goodness(3, SweepOptions::default(), Budget::default())
        .unwrap()
        .to_tsv();
    assert_eq!(a, b);
    assert!(a.lines().count() > 1);
}
