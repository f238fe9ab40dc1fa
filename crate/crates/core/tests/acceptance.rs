//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Counts are exact integers throughout; the only tolerances are wall-clock
//! ceilings, pinned below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cover_pebbling::distribution::{decay_potential, growth_potential};
use cover_pebbling::formulas::{gamma_complete, gamma_cycle, gamma_path};
use cover_pebbling::fuzz::{random_cycle_case, random_distribution, random_path_case};
use cover_pebbling::solver::{
    check_product_equality, connected_graphs, sweep_goodness, SearchOptions, Searcher, SweepOptions,
};
use cover_pebbling::strategy::extract_pairs;
use cover_pebbling::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const FORMULA_LIMIT: Duration = Duration::from_secs(1);
const BRUTE_FORCE_LIMIT: Duration = Duration::from_secs(120);
const PRODUCT_LIMIT: Duration = Duration::from_secs(30 * 60);
const SWEEP_LIMIT: Duration = Duration::from_secs(10 * 60);

const STRATEGY_CASES: usize = 1000;
const PRODUCT_CASES: usize = 200;
const SOLVER_AGREEMENT_CASES: usize = 500;
const SEED: u64 = 0x5eed;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> std::result::Result<Duration, String> {
    let t = start.elapsed();
    ensure(t <= limit, format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn err(e: Error) -> String {
    e.to_string()
}

fn brute_force_graphs() -> Vec<Graph> {
    vec![
        Graph::path(2).unwrap(),
        Graph::path(3).unwrap(),
        Graph::path(4).unwrap(),
        Graph::cycle(3).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::cycle(5).unwrap(),
        Graph::complete(3).unwrap(),
        Graph::complete(4).unwrap(),
        Graph::star(4).unwrap(),
    ]
}

fn formulas() -> Outcome {
    let start = Instant::now();
    for n in 1..=10 {
        ensure(gamma_path(n).map_err(err)? == (1 << n) - 1, format!("γ(P_{n})"))?;
        ensure(
            gamma_complete(n).map_err(err)? == 2 * n as u64 - 1,
            format!("γ(K_{n})"),
        )?;
    }
    for (n, want) in (3..=8).zip([5, 9, 13, 21, 29, 45]) {
        let got = gamma_cycle(n).map_err(err)?;
        ensure(got == want, format!("γ(C_{n}) = {got}, want {want}"))?;
    }
    let t = within(start, FORMULA_LIMIT)?;
    Ok(format!("paths, cycles and complete graphs in {t:.2?}"))
}

fn brute_force() -> Outcome {
    let start = Instant::now();
    for g in brute_force_graphs() {
        let exact = gamma_exact(&g, Budget::default()).map_err(err)?;
        let formula = gamma_formula(&g).map_err(err)?.value;
        ensure(
            exact.gamma == formula,
            format!("{g}: exact {} vs formula {formula}", exact.gamma),
        )?;
        ensure(exact.good, format!("{g} reported not good"))?;
    }
    let t = within(start, BRUTE_FORCE_LIMIT)?;
    Ok(format!("9 graphs agree and are good in {t:.2?}"))
}

fn products() -> Outcome {
    let start = Instant::now();
    let p2 = Graph::path(2).unwrap();
    let cases = [
        (p2.clone(), p2.clone(), 9),
        (p2.clone(), Graph::path(3).unwrap(), 21),
        (p2.clone(), Graph::complete(3).unwrap(), 15),
    ];
    for (g, h, want) in cases {
        let eq = check_product_equality(&g, &h, Budget::default()).map_err(err)?;
        ensure(
            eq.gamma_product == want && eq.equal && eq.product_good,
            format!(
                "{g}□{h}: γ = {}, factors {}·{}, good {}",
                eq.gamma_product, eq.gamma_g, eq.gamma_h, eq.product_good
            ),
        )?;
    }
    let t = within(start, PRODUCT_LIMIT)?;
    Ok(format!("γ(P_2□P_2)=9, γ(P_2□P_3)=21, γ(P_2□K_3)=15 in {t:.2?}"))
}

fn sweep() -> Outcome {
    let start = Instant::now();
    let report = sweep_goodness(4, SweepOptions::default(), Budget::default()).map_err(err)?;
    let bad = report.counterexamples().count();
    let unknown = report.unknown().count();
    ensure(
        bad == 0 && unknown == 0,
        format!("{bad} counterexamples, {unknown} unknown"),
    )?;
    let t = within(start, SWEEP_LIMIT)?;
    Ok(format!(
        "{} labeled connected graphs on ≤ 4 vertices, all good, in {t:.2?}",
        report.entries.len()
    ))
}

fn constructive() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    for i in 0..STRATEGY_CASES {
        let c = random_path_case(&mut rng, 6, 8).map_err(err)?;
        let h = Graph::path(c.vertices).unwrap();
        let out = q_cover_path(&h, &c.distribution, c.q).map_err(|e| format!("path case {i}: {e}"))?;
        let end = replay(&h, &out.trace).map_err(err)?;
        ensure(
            end.is_q_covered(c.q),
            format!("path case {i} not {}-covered", c.q),
        )?;

        let c = random_cycle_case(&mut rng, 7, 8).map_err(err)?;
        let h = Graph::cycle(c.vertices).unwrap();
        let out = q_cover_cycle(&h, &c.distribution, c.q).map_err(|e| format!("cycle case {i}: {e}"))?;
        let end = replay(&h, &out.trace).map_err(err)?;
        ensure(
            end.is_q_covered(c.q),
            format!("cycle case {i} not {}-covered", c.q),
        )?;
    }
    Ok(format!(
        "{STRATEGY_CASES} path and {STRATEGY_CASES} cycle inputs at exact budgets"
    ))
}

fn lift_pipeline() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let p1 = Graph::path(1).unwrap();
    let p2 = Graph::path(2).unwrap();
    let cases = [
        (p2.clone(), p2.clone()),
        (p2.clone(), Graph::path(3).unwrap()),
        (Graph::complete(3).unwrap(), p2.clone()),
        (p1, Graph::cycle(5).unwrap()),
    ];
    for (g, h) in &cases {
        let product = Graph::cartesian_product(g, h).map_err(err)?;
        let total = gamma_formula(g).map_err(err)?.value * gamma_formula(h).map_err(err)?.value;
        for i in 0..PRODUCT_CASES {
            let d = random_distribution(&mut rng, product.vertex_count(), total);
            let out = cover_product(&d, g, h).map_err(|e| format!("{g}□{h} case {i} ({d}): {e}"))?;
            let end = replay(&product, &out.trace).map_err(err)?;
            ensure(end.is_q_covered(1), format!("{g}□{h} case {i} left uncovered"))?;
        }
    }
    Ok(format!(
        "{PRODUCT_CASES} exact-budget distributions on each of 4 products"
    ))
}

fn witnesses() -> Outcome {
    for g in brute_force_graphs() {
        let f = gamma_formula(&g).map_err(err)?;
        let key = f.key_vertex.ok_or(format!("{g} has no key vertex"))?;
        let d = Distribution::simple(g.vertex_count(), key, f.value as u32 - 1);
        let r = decide_coverable(&g, &d, Budget::default()).map_err(err)?;
        ensure(!r.coverable, format!("{g}: {d} is coverable"))?;
    }
    Ok("γ − 1 pebbles on the key vertex never cover".into())
}

fn random_state(rng: &mut StdRng, graphs: &[Graph], max_pebbles: u32) -> (Graph, Vec<u32>) {
    let g = graphs[rng.random_range(0..graphs.len())].clone();
    let counts = (0..g.vertex_count())
        .map(|_| rng.random_range(0..=max_pebbles))
        .collect();
    (g, counts)
}

fn properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let graphs: Vec<Graph> = (1..=5)
        .flat_map(|n| connected_graphs(n, false).unwrap())
        .collect();

    // conservation along random legal walks, with colors
    for _ in 0..500 {
        let (g, counts) = random_state(&mut rng, &graphs, 8);
        let colors = rng.random_range(1..=3);
        let mut start = ColoredDistribution::new(g.vertex_count(), colors);
        for (v, &c) in counts.iter().enumerate() {
            for _ in 0..c {
                start.add(v, rng.random_range(0..colors), 1);
            }
        }
        let mut trace = Trace::new(start.clone());
        let mut state = start.clone();
        for _ in 0..30 {
            let legal: Vec<PebblingMove> = (0..g.vertex_count())
                .flat_map(|u| g.neighbors(u).iter().map(move |&w| (u, w)))
                .flat_map(|(u, w)| (0..colors).map(move |c| PebblingMove::new(u, w, c)))
                .filter(|m| state.get(m.from, m.color) >= 2)
                .collect();
            if legal.is_empty() {
                break;
            }
            let m = legal[rng.random_range(0..legal.len())];
            state = apply_move(&g, &state, m).map_err(err)?;
            trace.moves.push(m);
        }
        let end = replay(&g, &trace).map_err(err)?;
        ensure(
            end.total() + trace.len() as u64 == start.total(),
            "pebble count not conserved",
        )?;
        for c in 0..colors {
            let used = trace.moves.iter().filter(|m| m.color == c).count() as u64;
            ensure(
                end.color_total(c) + used == start.color_total(c),
                "color count not conserved",
            )?;
        }
    }

    // potentials under every legal move
    for _ in 0..500 {
        let (g, counts) = random_state(&mut rng, &graphs, 6);
        for u in (0..g.vertex_count()).filter(|&u| counts[u] >= 2) {
            for &w in g.neighbors(u) {
                let mut after = counts.clone();
                after[u] -= 2;
                after[w] += 1;
                for r in 0..g.vertex_count() {
                    ensure(
                        decay_potential(&g, &after, r) <= decay_potential(&g, &counts, r)
                            && growth_potential(&g, &after, r) <= growth_potential(&g, &counts, r),
                        format!("potential increased on {g} moving {u}→{w}"),
                    )?;
                }
            }
        }
    }

    // pruned search agrees with plain exhaustive search
    let mut coverable = 0;
    for i in 0..SOLVER_AGREEMENT_CASES {
        let g = &graphs[rng.random_range(0..graphs.len())];
        let total = rng.random_range(0..=12);
        let d = random_distribution(&mut rng, g.vertex_count(), total);
        let fast = Searcher::new(g, Budget::default()).decide(&d).map_err(err)?;
        let slow = Searcher::with_options(g, Budget::default(), SearchOptions::exhaustive())
            .decide(&d)
            .map_err(err)?;
        ensure(
            fast.coverable == slow.coverable,
            format!("instance {i}: {g} {d} disagrees"),
        )?;
        coverable += usize::from(fast.coverable);
    }

    // extract_pairs releases ⌊E/2⌋ pairs whenever E + t' ≤ M
    let mut checked = 0u64;
    for colors in 1..=4usize {
        let mut counts = vec![0u32; colors];
        loop {
            let total: u64 = counts.iter().map(|&c| u64::from(c)).sum();
            if total <= 12 {
                let present = counts.iter().filter(|&&c| c > 0).count() as u64;
                for e in 0..=total.saturating_sub(present) {
                    let pairs = extract_pairs(&counts, e).map_err(err)?;
                    let released: u64 = pairs.iter().map(|&(_, k)| u64::from(k)).sum();
                    ensure(
                        released >= e / 2,
                        format!("{counts:?}, E = {e}: {released} pairs"),
                    )?;
                    ensure(
                        pairs.iter().all(|&(c, k)| 2 * k <= counts[c]),
                        "pair overdraws a color",
                    )?;
                    checked += 1;
                }
            }
            let Some(i) = counts.iter().position(|&c| c < 12) else {
                break;
            };
            counts[i] += 1;
            counts[..i].iter_mut().for_each(|c| *c = 0);
        }
    }
    Ok(format!(
        "conservation, potentials, {SOLVER_AGREEMENT_CASES} solver agreements ({coverable} coverable), {checked} pair extractions"
    ))
}

fn hypercube() -> Outcome {
    let p2 = Graph::path(2).unwrap();
    let q2 = Graph::cartesian_product(&p2, &p2).map_err(err)?;
    let exact = gamma_exact(&q2, Budget::default()).map_err(err)?;
    ensure(exact.gamma == 9, format!("γ(Q_2) = {}", exact.gamma))?;

    let q3 = Graph::cartesian_product(&q2, &p2).map_err(err)?;
    let f = gamma_formula(&q3).map_err(err)?;
    ensure(f.value == 27, format!("formula γ(Q_3) = {}", f.value))?;
    let key = f.key_vertex.ok_or("Q_3 has no key vertex")?;
    let d = Distribution::simple(8, key, 26);
    let r = decide_coverable(&q3, &d, Budget::default()).map_err(err)?;
    ensure(!r.coverable, "26 pebbles on a corner of Q_3 cover it")?;
    Ok("γ(Q_2) = 9 exactly; γ(Q_3) = 27 by formula with a 26-pebble witness".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("formula reproduction", formulas),
        ("brute-force agreement", brute_force),
        ("product equality", products),
        ("goodness sweep", sweep),
        ("constructive path and cycle covers", constructive),
        ("lift pipeline", lift_pipeline),
        ("lower-bound witnesses", witnesses),
        ("property suites", properties),
        ("hypercube", hypercube),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
