//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero if any fails.

use std::time::{Duration, Instant};

use gerbe::analysis::sheaf_group;
use gerbe::autgroup::{compose, enumerate_group, enumerate_group_naive, realize_isometry};
use gerbe::exactpoly::{char_poly, real_roots_with_multiplicity, IntPolynomial};
use gerbe::graph::{epsilon_matrix, graph_automorphisms, Graph};
use gerbe::linalg::Matrix;
use gerbe::quadspace::{build_s, gram_factorize, gram_matrix, rank, Representation};
use gerbe::sheaf::{check_class_linking, line_classes};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANK_TOL: f64 = 1e-9;
const GRAM_TOL: f64 = 1e-9;
const ORTHO_TOL: f64 = 1e-8;
const COLINEAR_TOL: f64 = 1e-8;
const MAX_N: usize = 10;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {:?}, limit {:?}", elapsed, limit)
    })
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn pointed_hexagon() -> Graph {
    Graph::cycle(5).with_isolated(1)
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |mask| Graph::from_mask(n, mask))
}

fn exact_chi() -> Outcome {
    let start = Instant::now();
    let x_plus_1 = poly(&[1, 1]);
    let x_minus_1 = poly(&[-1, 1]);
    let quad = poly(&[-1, 0, 5]);
    let cases = [
        (
            "triangle",
            Graph::complete(3),
            &(&poly(&[1, -2]) * &x_plus_1.pow(2)),
        ),
        (
            "square",
            Graph::cycle(4),
            &-&(&poly(&[1, 3]) * &x_minus_1.pow(3)),
        ),
        ("pentagon", Graph::cycle(5), &quad.pow(2)),
        ("pointed hexagon", pointed_hexagon(), &-&quad.pow(3)),
    ];
    for (name, g, expected) in cases {
        let chi = char_poly(&epsilon_matrix(&g));
        ensure(&chi == expected, || {
            format!("{}: got {}, expected {}", name, chi, expected)
        })?;
    }
    within(Duration::from_secs(1), start.elapsed())?;
    Ok("4 polynomials equal as integer polynomials".into())
}

fn rank_law() -> Outcome {
    let s5 = 5f64.sqrt() / 5.0;
    let cases: [(&str, Graph, Vec<(f64, usize)>); 4] = [
        ("triangle", Graph::complete(3), vec![(-1.0, 1), (0.5, 2)]),
        ("square", Graph::cycle(4), vec![(-1.0 / 3.0, 3), (1.0, 1)]),
        ("pentagon", Graph::cycle(5), vec![(-s5, 3), (s5, 3)]),
        (
            "pointed hexagon",
            pointed_hexagon(),
            vec![(-s5, 3), (s5, 3)],
        ),
    ];
    let mut checked = 0;
    for (name, g, expected) in cases {
        let e = epsilon_matrix(&g);
        let roots =
            real_roots_with_multiplicity(&char_poly(&e), 1e-12).map_err(|e| e.to_string())?;
        ensure(roots.len() == expected.len(), || {
            format!("{}: {} roots", name, roots.len())
        })?;
        for (r, (at, want)) in roots.iter().zip(&expected) {
            ensure((r.approx() - at).abs() < 1e-12, || {
                format!("{}: root {} != {}", name, r.approx(), at)
            })?;
            let rk = rank(&build_s(&e, 1.0, r.approx()), RANK_TOL);
            let law = g.n() - r.multiplicity as usize;
            ensure(rk == *want && law == *want, || {
                format!(
                    "{} at {}: rank {}, n - mu {}, expected {}",
                    name, at, rk, law, want
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{} roots, rank = n - mu", checked))
}

fn group_orders() -> Outcome {
    let timed = |f: &dyn Fn() -> usize| {
        let t = Instant::now();
        (f(), t.elapsed())
    };
    let limit = Duration::from_secs(5);
    let checks: [(&str, usize, (usize, Duration)); 4] = [
        (
            "G(square)",
            48,
            timed(&|| {
                enumerate_group(&epsilon_matrix(&Graph::cycle(4)), MAX_N)
                    .unwrap()
                    .order()
            }),
        ),
        (
            "G(pointed hexagon)",
            120,
            timed(&|| {
                enumerate_group(&epsilon_matrix(&pointed_hexagon()), MAX_N)
                    .unwrap()
                    .order()
            }),
        ),
        (
            "H(square)",
            8,
            timed(&|| graph_automorphisms(&Graph::cycle(4), MAX_N).unwrap().len()),
        ),
        (
            "H(5-cycle)",
            10,
            timed(&|| graph_automorphisms(&Graph::cycle(5), MAX_N).unwrap().len()),
        ),
    ];
    for (name, want, (got, t)) in &checks {
        ensure(got == want, || format!("{}: {} != {}", name, got, want))?;
        within(limit, *t)?;
    }
    Ok("48, 120, 8, 10".into())
}

fn two_transitive() -> Outcome {
    let c = 5f64.sqrt() / 5.0;
    let a = gerbe::analysis::analyze_sheaf(&pointed_hexagon(), 1.0, c, &gerbe::Config::default())
        .map_err(|e| e.to_string())?;
    ensure(a.line_count() == 6, || format!("{} lines", a.line_count()))?;
    ensure(
        a.orbits.pair_orbits == 1 && a.orbits.is_2_transitive,
        || format!("{} orbits on ordered pairs", a.orbits.pair_orbits),
    )?;
    Ok("6 lines, 1 orbit on ordered pairs".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0;
    for n in 1..=5 {
        for g in all_graphs(n) {
            let e = epsilon_matrix(&g);
            let naive = enumerate_group_naive(&e, MAX_N).map_err(|e| e.to_string())?;
            // the pruned search needs three vertices to pin down the signs
            let fast = if n >= 3 {
                enumerate_group(&e, MAX_N)
            } else {
                sheaf_group(&e, MAX_N)
            }
            .map_err(|e| e.to_string())?;
            ensure(fast == naive, || format!("mismatch on {:?}", g.edges()))?;
            graphs += 1;
        }
    }
    within(Duration::from_secs(60), start.elapsed())?;
    Ok(format!(
        "{} labeled graphs, n <= 5, element-for-element",
        graphs
    ))
}

fn gram_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a6d);
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let mask = rng.gen_range(0..1u64 << (n * (n - 1) / 2));
        let c: f64 = rng.gen_range(-1.0..=1.0);
        let s = build_s(&epsilon_matrix(&Graph::from_mask(n, mask)), 1.0, c);
        let (space, vectors) = gram_factorize(&s, RANK_TOL);
        let r = gram_matrix(&space, &vectors).max_abs_diff(&s);
        worst = worst.max(r);
    }
    ensure(worst < GRAM_TOL, || format!("max residual {:.3e}", worst))?;
    Ok(format!("500 samples, max residual {:.2e}", worst))
}

fn morphism_faithfulness() -> Outcome {
    let g = Graph::cycle(4);
    let u = Representation::realize(&g, 1.0, -1.0 / 3.0, RANK_TOL);
    let group = enumerate_group(&epsilon_matrix(&g), MAX_N).map_err(|e| e.to_string())?;
    ensure(group.order() == 48, || format!("order {}", group.order()))?;
    let mats: Vec<Matrix> = group
        .elements()
        .iter()
        .map(|a| realize_isometry(a, &u, ORTHO_TOL))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let id = Matrix::identity(u.dim());
    for (a, f) in group.elements().iter().zip(&mats) {
        let d = (&f.transpose() * f).max_abs_diff(&id);
        ensure(d < ORTHO_TOL, || format!("{} not orthogonal: {:.2e}", a, d))?;
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            ensure(mats[i].max_abs_diff(&mats[j]) > 1e-6, || {
                format!(
                    "{} and {} realize the same matrix",
                    group.elements()[i],
                    group.elements()[j]
                )
            })?;
        }
    }
    for (i, a) in group.elements().iter().enumerate() {
        for (j, b) in group.elements().iter().enumerate() {
            let ab = compose(a, b).map_err(|e| e.to_string())?;
            let k = group
                .position(&ab)
                .ok_or_else(|| format!("{} * {} = {} not in G", a, b, ab))?;
            let d = (&mats[i] * &mats[j]).max_abs_diff(&mats[k]);
            ensure(d < ORTHO_TOL, || {
                format!("f({}) f({}) != f({}): {:.2e}", a, b, ab, d)
            })?;
        }
    }
    Ok("48 distinct orthogonal matrices, 2304 products match compose".into())
}

fn class_linking_sweep() -> Outcome {
    let start = Instant::now();
    let mut count = 0usize;
    for n in 1..=7 {
        for g in all_graphs(n) {
            for c in [1i8, -1] {
                let u = Representation::realize(&g, 1.0, f64::from(c), RANK_TOL);
                let p = line_classes(&u, COLINEAR_TOL)
                    .map_err(|e| format!("{:?}: {}", g.edges(), e))?;
                let report = check_class_linking(&g, &p, c);
                ensure(report.passed(), || {
                    format!("{:?} at c = {}: {:?}", g.edges(), c, report.failures)
                })?;
                count += 1;
            }
        }
    }
    within(Duration::from_secs(300), start.elapsed())?;
    Ok(format!("{} (graph, c) pairs, n <= 7", count))
}

fn pentagon_order() -> Outcome {
    let e = epsilon_matrix(&Graph::cycle(5));
    let fast = enumerate_group(&e, MAX_N).map_err(|e| e.to_string())?;
    let naive = enumerate_group_naive(&e, MAX_N).map_err(|e| e.to_string())?;
    ensure(fast.order() == naive.order(), || {
        format!("{} != {}", fast.order(), naive.order())
    })?;
    Ok(format!(
        "|G| = {} = brute force; |G/{{+-id}}| = {} (D5 has order 10)",
        fast.order(),
        fast.order_mod_center()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("exact characteristic polynomials", exact_chi),
        ("rank law at every root", rank_law),
        ("group and automorphism orders", group_orders),
        ("pointed hexagon is 2-transitive", two_transitive),
        ("pruned enumeration equals brute force", oracle_equivalence),
        ("Gram round-trip", gram_round_trip),
        ("morphism and faithfulness", morphism_faithfulness),
        ("class linking sweep", class_linking_sweep),
        ("pentagon group order", pentagon_order),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {} ({:.2}s): {}", k + 1, name, t, detail),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {} ({:.2}s): {}", k + 1, name, t, why)
            }
        }
    }
    println!(
        "{}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
