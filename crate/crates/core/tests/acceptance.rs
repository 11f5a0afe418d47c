//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
//!
//! Runs as a custom harness so the report is always visible:
//! `cargo test --test acceptance`.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use amalgam_bases::decide::{
    is_prime_power_order_necessary, witness_is_valid, BruteForceDecider, Detail,
};
use amalgam_bases::group::abelian_groups_of_order;
use amalgam_bases::{
    all_subgroups, amalgamability_condition, is_base_structural, parse_group, pushout,
    quotient_invariants, smith_normal_form, verify_square, FinAbGroup, IntMatrix, PointedGroup,
    DEFAULT_BOUND,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::{grp, naive_closure, random_span, subset_closure_subgroups};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

struct Sweep {
    cells: usize,
    disagreements: Vec<String>,
    bad_witnesses: Vec<String>,
    prime_power_violations: Vec<String>,
    elapsed: Duration,
}

/// Both deciders on every class of order `2..=max` and every nonzero point.
fn sweep(max: u64) -> Sweep {
    let start = Instant::now();
    let groups: Vec<FinAbGroup> = (2..=max).flat_map(abelian_groups_of_order).collect();
    let per_group: Vec<_> = groups
        .par_iter()
        .map(|g| {
            let brute = BruteForceDecider::new(g, DEFAULT_BOUND).unwrap();
            let mut out = (0usize, Vec::new(), Vec::new(), Vec::new());
            for x in g.elements().skip(1) {
                let pg = PointedGroup::new(g.clone(), x.clone()).unwrap();
                let b = brute.decide(&x).unwrap();
                let s = is_base_structural(&pg);
                out.0 += 1;
                if b.is_base != s.is_base {
                    out.1.push(format!(
                        "{pg}: brute {} structural {}",
                        b.is_base, s.is_base
                    ));
                }
                if let Detail::Violation { h, k } = &b.detail {
                    if !witness_is_valid(&pg, h, k) {
                        out.2.push(format!("{pg}: H={h} K={k}"));
                    }
                }
                if (b.is_base || s.is_base) && !is_prime_power_order_necessary(&pg) {
                    out.3.push(pg.to_string());
                }
            }
            out
        })
        .collect();
    let mut s = Sweep {
        cells: 0,
        disagreements: vec![],
        bad_witnesses: vec![],
        prime_power_violations: vec![],
        elapsed: Duration::ZERO,
    };
    for (n, d, w, c) in per_group {
        s.cells += n;
        s.disagreements.extend(d);
        s.bad_witnesses.extend(w);
        s.prime_power_violations.extend(c);
    }
    s.elapsed = start.elapsed();
    s
}

fn criterion_1(small: &Sweep) -> Outcome {
    ensure!(
        small.disagreements.is_empty(),
        "order<=36 disagreements: {:?}",
        small.disagreements
    );
    ensure!(
        small.bad_witnesses.is_empty(),
        "invalid witnesses: {:?}",
        small.bad_witnesses
    );
    ensure!(
        small.elapsed < Duration::from_secs(60),
        "order<=36 took {:?}",
        small.elapsed
    );
    let big = sweep(64);
    ensure!(
        big.disagreements.is_empty(),
        "order<=64 disagreements: {:?}",
        big.disagreements
    );
    ensure!(
        big.elapsed < Duration::from_secs(600),
        "order<=64 took {:?}",
        big.elapsed
    );
    Ok(format!(
        "order<=36: {} cells in {:.2?}; order<=64: {} cells in {:.2?}; 0 disagreements",
        small.cells, small.elapsed, big.cells, big.elapsed
    ))
}

fn criterion_2() -> Outcome {
    let mut bases = 0;
    for p in [2u64, 3, 5] {
        for n in 1..=3 {
            let g = grp(&[p.pow(n)]);
            let brute = BruteForceDecider::new(&g, DEFAULT_BOUND).unwrap();
            for x in g.elements().skip(1) {
                let pg = PointedGroup::new(g.clone(), x.clone()).unwrap();
                ensure!(
                    brute.decide(&x).unwrap().is_base,
                    "{pg} not a base (bruteforce)"
                );
                ensure!(
                    is_base_structural(&pg).is_base,
                    "{pg} not a base (structural)"
                );
                bases += 1;
            }
        }
    }
    let mut refuted = 0;
    for p in [2u64, 3] {
        for n in [2usize, 3] {
            let g = grp(&vec![p; n]);
            let brute = BruteForceDecider::new(&g, DEFAULT_BOUND).unwrap();
            for x in g.elements().skip(1) {
                let pg = PointedGroup::new(g.clone(), x.clone()).unwrap();
                let v = brute.decide(&x).unwrap();
                ensure!(
                    !v.is_base && !is_base_structural(&pg).is_base,
                    "{pg} reported as base"
                );
                let Detail::Violation { h, k } = &v.detail else {
                    return Err(format!("{pg}: no witness"));
                };
                ensure!(
                    witness_is_valid(&pg, h, k),
                    "{pg}: invalid witness H={h} K={k}"
                );
                refuted += 1;
            }
        }
    }
    Ok(format!("{bases} cyclic p-group points are bases; {refuted} elementary abelian points refuted with valid witnesses"))
}

fn criterion_3(small: &Sweep) -> Outcome {
    ensure!(
        small.prime_power_violations.is_empty(),
        "bases without prime-power order: {:?}",
        small.prime_power_violations
    );
    let z6 = common::pointed(&[6], &[1]);
    ensure!(
        !is_prime_power_order_necessary(&z6),
        "(Z/6,1) passes the necessary condition"
    );
    let brute = amalgam_bases::is_base_bruteforce(&z6, DEFAULT_BOUND).unwrap();
    ensure!(
        !brute.is_base && !is_base_structural(&z6).is_base,
        "(Z/6,1) reported as base"
    );
    Ok(format!(
        "{} cells, every base has prime-power order; (Z/6,1) is not a base",
        small.cells
    ))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut amalgamable, mut disagreements) = (0, 0);
    for _ in 0..1000 {
        let span = random_span(&mut rng, 16);
        let cond = amalgamability_condition(&span, DEFAULT_BOUND).map_err(|e| e.to_string())?;
        let r = pushout(&span, DEFAULT_BOUND).map_err(|e| e.to_string())?;
        if cond.holds() != !r.d.is_zero() || r.amalgamable != !r.d.is_zero() {
            disagreements += 1;
            continue;
        }
        if cond.holds() {
            amalgamable += 1;
            ensure!(
                verify_square(&span, &r),
                "square fails for {}",
                span.to_json()
            );
        }
    }
    ensure!(disagreements == 0, "{disagreements} disagreements");
    Ok(format!(
        "1000 spans, {amalgamable} amalgamable, 0 disagreements, all squares verified"
    ))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x511f);
    for i in 0..500 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let a = IntMatrix::from_vec(r, c, (0..r * c).map(|_| rng.gen_range(-9..=9)).collect());
        let s = smith_normal_form(&a).map_err(|e| format!("matrix {i}: {e}"))?;
        ensure!(
            s.u.mul(&a).unwrap().mul(&s.v).unwrap() == s.d,
            "matrix {i}: UAV != D"
        );
        ensure!(
            s.u.determinant().unwrap().abs() == 1,
            "matrix {i}: |det U| != 1"
        );
        ensure!(
            s.v.determinant().unwrap().abs() == 1,
            "matrix {i}: |det V| != 1"
        );
        let d = s.diagonal();
        let nz = d.iter().take_while(|&&x| x != 0).count();
        let chain = d[nz..].iter().all(|&x| x == 0)
            && d[..nz].iter().all(|&x| x > 0)
            && d[..nz].windows(2).all(|w| w[1] % w[0] == 0);
        ensure!(
            s.d.is_diagonal() && chain,
            "matrix {i}: divisibility chain broken: {d:?}"
        );
    }
    let mut quotients = 0;
    while quotients < 500 {
        let rank = rng.gen_range(1..=4);
        let moduli: Vec<u64> = (0..rank).map(|_| rng.gen_range(2..=12)).collect();
        let total: u64 = moduli.iter().product();
        if total > 256 {
            continue;
        }
        let gens: Vec<Vec<u64>> = (0..rng.gen_range(0..=3))
            .map(|_| moduli.iter().map(|&m| rng.gen_range(0..m)).collect())
            .collect();
        let q = quotient_invariants(&moduli, &gens).map_err(|e| e.to_string())?;
        let sub = naive_closure(&moduli, &gens).len() as u64;
        ensure!(
            q.order() * sub == total,
            "{moduli:?} / {gens:?}: quotient {} vs closure {sub}",
            q.order()
        );
        quotients += 1;
    }
    Ok("500 matrices exact with unimodular U, V and divisibility chain; 500 quotients match closure".into())
}

fn criterion_6() -> Outcome {
    let mut cases: Vec<(Vec<u64>, usize)> =
        vec![(vec![2, 2], 5), (vec![12], 6), (vec![2, 2, 2], 16)];
    for p in [2u64, 3] {
        for n in 1..=4u32 {
            cases.push((vec![p.pow(n)], n as usize + 1));
        }
    }
    for (m, want) in &cases {
        let ours = all_subgroups(&grp(m), DEFAULT_BOUND).unwrap().len();
        let oracle = subset_closure_subgroups(m).len();
        ensure!(
            ours == *want && oracle == *want,
            "{m:?}: enumerated {ours}, oracle {oracle}, expected {want}"
        );
    }
    Ok(format!(
        "{} groups, enumeration and subset-closure oracle agree",
        cases.len()
    ))
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_amalgam-bases"))
        .args(args)
        .env_remove("AMALGAM_BASES_BOUND")
        .output()
        .expect("spawn binary");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(s: &str) -> Result<serde_json::Value, String> {
    serde_json::from_str(s.trim()).map_err(|e| format!("bad JSON {s:?}: {e}"))
}

fn random_literal(rng: &mut ChaCha8Rng) -> String {
    let rank = rng.gen_range(1..=4);
    let parts: Vec<String> = (0..rank)
        .map(|_| {
            let z = if rng.gen_bool(0.5) { "Z" } else { "z" };
            let pad = if rng.gen_bool(0.3) { " " } else { "" };
            format!("{z}{pad}/{pad}{}", rng.gen_range(2..=30))
        })
        .collect();
    let seps = [" x ", "x", "X", " × ", "  x"];
    let mut s = parts[0].clone();
    for p in &parts[1..] {
        s.push_str(seps[rng.gen_range(0..seps.len())]);
        s.push_str(p);
    }
    s
}

fn criterion_7() -> Outcome {
    let (code, out, err) = cli(&["check-base", "Z/2xZ/2", "(1,1)"]);
    ensure!(code == 0, "Z/2xZ/2 (1,1): exit {code}, stderr {err}");
    let v = json(&out)?;
    ensure!(
        v["is_base"] == false && v["witness"].is_object(),
        "Z/2xZ/2 (1,1): {out}"
    );

    let (code, out, err) = cli(&["check-base", "Z/8", "1"]);
    ensure!(code == 0, "Z/8 1: exit {code}, stderr {err}");
    let v = json(&out)?;
    ensure!(
        v["is_base"] == true && v["p"] == 2 && v["n"] == 3,
        "Z/8 1: {out}"
    );

    let (code, _, err) = cli(&["check-base", "Z/4", "0"]);
    ensure!(code == 2, "Z/4 0: exit {code}");
    ensure!(err.contains("g must be nonzero"), "Z/4 0: stderr {err:?}");

    let mut rng = ChaCha8Rng::seed_from_u64(0x717);
    for _ in 0..50 {
        let lit = random_literal(&mut rng);
        let g = parse_group(&lit).map_err(|e| format!("{lit:?}: {e}"))?;
        let printed = g.to_string();
        let again = parse_group(&printed).map_err(|e| format!("{printed:?}: {e}"))?;
        ensure!(
            again == g && again.to_string() == printed,
            "{lit:?} -> {printed:?} -> {again}"
        );
    }
    Ok("3 check-base examples match; 50 literals round-trip".into())
}

fn main() {
    // `cargo test -- --list` and filters are irrelevant for a single report
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let small = sweep(36);
    let results: Vec<(&str, Outcome)> = vec![
        ("1 oracle equivalence", criterion_1(&small)),
        ("2 examples", criterion_2()),
        ("3 necessary condition", criterion_3(&small)),
        ("4 amalgam equivalence", criterion_4()),
        ("5 smith normal form", criterion_5()),
        ("6 subgroup counts", criterion_6()),
        ("7 cli contract", criterion_7()),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(msg) => println!("PASS criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
