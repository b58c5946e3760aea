//! One line per acceptance criterion. Every comparison is exact: integer
//! dimensions and integer polynomial coefficients, tolerance zero.
//!
//! Run with `cargo test -p toric-weights --test acceptance -- --nocapture`.

mod common;

use std::time::Instant;

use common::*;
use toric_weights::catalogue::{builtin_example, Example, NAMES};
use toric_weights::deligne::{e1_table, euler_consistency};
use toric_weights::ip::{additivity_check, affine_ih_betti, ip_cld, ip_equivariant_series};
use toric_weights::koszul::{build_koszul, e2_table, weight_table};
use toric_weights::poly::{QPolynomial, QSeries};
use toric_weights::pp::{mayer_vietoris_check, pp_basis};
use toric_weights::Fan;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const RANDOM_SEED: u64 = 0x5eed_0001;
const SERIES_CUTOFF: usize = 12;
const PP_DEGREE_LIMIT: usize = 8;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn poly(c: &[i64]) -> QPolynomial {
    QPolynomial::new(c.to_vec())
}

fn entries(f: &Fan) -> Vec<((usize, usize), usize)> {
    weight_table(f).unwrap().entries().iter().map(|(&k, &v)| (k, v)).collect()
}

/// Every named catalogue fan, parametric entries instantiated.
fn catalogue_fans() -> Vec<(String, Fan)> {
    let mut out = Vec::new();
    for name in NAMES {
        let concrete = name.replace("(n)", "(3)").replace("(a)", "(2)");
        let fan = builtin_example(&concrete).unwrap().into_fan();
        out.push((concrete, fan));
    }
    for extra in ["torus(1)", "torus(2)", "affine-space(4)", "hirzebruch(0)"] {
        out.push((extra.to_string(), fan(extra)));
    }
    out
}

fn corpus() -> Vec<(String, Fan)> {
    let mut out = catalogue_fans();
    let mut r = rng(RANDOM_SEED);
    for i in 0..110 {
        out.push((format!("random-{i}"), random_fan(&mut r)));
    }
    for i in 0..15 {
        out.push((format!("random-complete-{i}"), random_complete(&mut r)));
    }
    out
}

fn criterion_1() -> Outcome {
    let got = entries(&fan("example-prz"));
    check(
        got == vec![((0, 0), 1), ((2, 1), 2), ((3, 2), 1)],
        format!("weight table {got:?}"),
    )
}

fn criterion_2() -> Outcome {
    let f = fan("example-prz");
    let dims: Vec<usize> = (0..=4).map(|k| pp_basis(&f, k).unwrap().dim()).collect();
    // rows b = 0, 1, 2 over columns 2a = 0, 2, ..., 8, as (dim, twist)
    let printed: [[(usize, usize); 5]; 3] = [
        [(1, 0), (4, 1), (6, 2), (8, 3), (10, 4)],
        [(2, 1), (8, 2), (12, 3), (16, 4), (20, 5)],
        [(1, 2), (4, 3), (6, 4), (8, 5), (10, 6)],
    ];
    let cells = e2_table(&f, 4).unwrap();
    let mut matched = 0;
    for (b, row) in printed.iter().enumerate() {
        for (a, &expected) in row.iter().enumerate() {
            if cells
                .iter()
                .any(|c| c.row == b && c.column == 2 * a && (c.dim, c.twist) == expected)
            {
                matched += 1;
            }
        }
    }
    check(
        dims == vec![1, 4, 6, 8, 10] && matched == 15 && cells.len() == 15,
        format!("equivariant dims {dims:?}, E2 cells matched {matched}/15"),
    )
}

fn criterion_3() -> Outcome {
    let pair = match builtin_example("example-prz-completion").unwrap() {
        Example::Completion(p) => p,
        Example::Fan(_) => return Err("not a completion".into()),
    };
    let t = e1_table(&pair).unwrap();
    let nonzero: Vec<(i64, usize, usize, usize)> = t
        .entries()
        .iter()
        .filter(|e| e.dim > 0)
        .map(|e| (e.column, e.row, e.dim, e.row / 2))
        .collect();
    let expected = vec![(-1, 2, 2, 1), (-1, 4, 2, 2), (0, 0, 1, 0), (0, 2, 4, 1), (0, 4, 1, 2)];
    let mut sorted = nonzero.clone();
    sorted.sort();
    let euler = euler_consistency(&t, &weight_table(pair.open()).unwrap()).unwrap();
    let sides: Vec<(i64, i64)> = euler.iter().map(|w| (w.deligne, w.koszul)).collect();
    check(
        sorted == expected && t.columns() == 3 && sides == vec![(1, 1), (2, 2), (-1, -1)],
        format!("E1 (column, row, dim, label) {sorted:?}; euler per weight {sides:?}"),
    )
}

fn criterion_4() -> Outcome {
    let t = weight_table(&fan("c2-minus-origin")).unwrap();
    let weights: Vec<(usize, usize)> = t.entries().keys().map(|&(k, l)| (k, 2 * l)).collect();
    check(
        t.betti() == vec![1, 0, 0, 1, 0] && weights == vec![(0, 0), (3, 4)],
        format!("betti {:?}, (degree, weight) {weights:?}", t.betti()),
    )
}

fn criterion_5(corpus: &[(String, Fan)]) -> Outcome {
    let mut random = 0;
    let mut pp_checked = 0;
    for (name, f) in corpus {
        if name.starts_with("random-") && f.rank() <= 3 {
            random += 1;
        }
        let ip = ip_cld(f).unwrap();
        let series = ip_equivariant_series(f, SERIES_CUTOFF).unwrap();
        let back = series.mul_polynomial(&QPolynomial::one_minus_q_pow(f.rank()));
        if back != QSeries::from_polynomial(&ip, SERIES_CUTOFF) {
            return Err(format!("{name}: series (1-q)^n = {back} but ip = {ip}"));
        }
        if f.is_simplicial() {
            for l in 0..=PP_DEGREE_LIMIT {
                let d = pp_basis(f, l).unwrap().dim() as i64;
                if series.coefficient(l) != Some(d) {
                    return Err(format!("{name}: dim PP^{l} = {d}, series {series}"));
                }
            }
            pp_checked += 1;
        }
    }
    check(
        random >= 100,
        format!("{} fans ({random} random), cutoff {SERIES_CUTOFF}; PP dims l <= {PP_DEGREE_LIMIT} on {pp_checked} simplicial fans", corpus.len()),
    )
}

fn criterion_6(corpus: &[(String, Fan)]) -> Outcome {
    let (mut tables, mut complete) = (0, 0);
    for (name, f) in corpus.iter().filter(|(_, f)| f.is_simplicial()) {
        let t = weight_table(f).unwrap();
        let odd_vanish = t.betti().iter().skip(1).step_by(2).all(|&b| b == 0);
        if odd_vanish != t.is_pure() {
            return Err(format!("{name}: odd vanishing {odd_vanish}, diagonal {}", t.is_pure()));
        }
        if f.is_complete() {
            let diagonal: Vec<i64> = (0..=f.rank()).map(|i| t.get(2 * i, i) as i64).collect();
            if !t.is_pure() || diagonal != h_vector_oracle(f) {
                return Err(format!("{name}: diagonal {diagonal:?}, h {:?}", h_vector_oracle(f)));
            }
            complete += 1;
        }
        tables += 1;
    }
    check(true, format!("{tables} weight tables, {complete} complete fans matched h-vectors"))
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut expect = |name: &str, p: QPolynomial| {
        let got = ip_cld(&fan(name)).unwrap();
        if got != p {
            failures.push(format!("{name}: {got}"));
        }
    };
    for n in 1..=4 {
        expect(&format!("affine-space({n})"), poly(&[1]));
    }
    expect("p1", poly(&[1, 1]));
    expect("p1xp1", poly(&[1, 2, 1]));
    expect("cone-over-square", poly(&[1, 1]));
    expect("cone-over-hexagon", poly(&[1, 3]));
    let hex = fan("cone-over-hexagon");
    let top = hex.cone(hex.cones().len() - 1).clone();
    let b = affine_ih_betti(&hex, &top).unwrap();
    if b != vec![1, 0, 3] {
        failures.push(format!("hexagon cone betti {b:?}"));
    }
    check(failures.is_empty(), if failures.is_empty() { "all oracles exact".into() } else { failures.join("; ") })
}

fn criterion_8() -> Outcome {
    let mut r = rng(RANDOM_SEED ^ 8);
    for i in 0..200 {
        let f = random_simplicial(&mut r);
        let n = f.rank();
        let t = weight_table(&f).unwrap();
        for &(k, l) in t.entries().keys() {
            if l < k.div_ceil(2) || l > k || k > 2 * n {
                return Err(format!("sample {i}: nonzero H^{k}(C_[{l}])"));
            }
        }
        if build_koszul(&f, 2 * n + 1).unwrap().cohomology().iter().any(|&(_, d)| d > 0) {
            return Err(format!("sample {i}: C_[2n+1] has cohomology"));
        }
    }
    for i in 0..50 {
        let (a, b) = random_pair(&mut r, true);
        for k in 0..=6 {
            let mv = mayer_vietoris_check(&a, &b, k).unwrap();
            if !mv.is_exact() {
                return Err(format!("decomposition {i}, degree {k}: {mv:?}"));
            }
        }
    }
    for i in 0..50 {
        let (a, b) = random_pair(&mut r, false);
        let report = additivity_check(&a, &b, SERIES_CUTOFF).unwrap();
        if !report.holds() {
            return Err(format!("pair {i}: {} vs {}", report.union, report.sum));
        }
    }
    Ok("200 vanishing samples, 50 Mayer-Vietoris decompositions (k <= 6), 50 additivity pairs".into())
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for (name, f) in catalogue_fans().iter().filter(|(_, f)| f.is_simplicial()) {
        let chi = weight_table(f).unwrap().weight_euler_polynomial();
        let ip = ip_cld(f).unwrap();
        if chi != ip {
            return Err(format!("{name}: weight table gives {chi}, recursion {ip}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} simplicial catalogue fans"))
}

#[test]
fn acceptance() {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("example-prz weight table", Box::new(criterion_1)),
        ("example-prz E2 data", Box::new(criterion_2)),
        ("example-prz Deligne E1 table", Box::new(criterion_3)),
        ("C^2 minus origin", Box::new(criterion_4)),
        ("multiplicativity", Box::new(|| criterion_5(&corpus))),
        ("purity biconditional", Box::new(|| criterion_6(&corpus))),
        ("recursion oracles", Box::new(criterion_7)),
        ("property fuzz", Box::new(criterion_8)),
        ("Euler cross-module identity", Box::new(criterion_9)),
    ];
    let mut failed = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {}: {tag} {title} [tolerance 0] ({detail}) {secs:.2}s", i + 1);
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
