//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p klr-core --test acceptance`.

use std::process::ExitCode;

use klr_core::blocks::{classify, decompose, dynkin_flip, flip_k, nonzero_blocks, roots_of_height};
use klr_core::fock::{crystal, is_kleshchev};
use klr_core::partitions::standard_tableaux;
use klr_core::qdim::{graded_dim_block, is_nonzero_block};
use klr_core::tables::{self, Check};
use klr_core::{CartanDatum, Charge, Partition, Sign, Weight, WeylWord};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(count: usize, failures: Vec<String>) -> Self {
        let pass = failures.is_empty();
        let detail = if pass {
            format!("{count} checks")
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            format!("{} of {count} checks failed: {}", failures.len(), shown.join("; "))
        };
        Outcome { pass, detail }
    }

    fn from_checks(checks: Vec<Check>) -> Self {
        let count = checks.len();
        let failures = checks
            .into_iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{} expected {} got {}", c.name, c.expected, c.actual))
            .collect();
        Self::from_failures(count, failures)
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Outcome {
            pass: false,
            detail: format!("error: {e}"),
        }
    }
}

fn from_result(r: klr_core::Result<Outcome>) -> Outcome {
    r.unwrap_or_else(Outcome::error)
}

fn tame_table() -> Outcome {
    from_result(tables::tame_table().map(Outcome::from_checks))
}

fn factorial_sums() -> Outcome {
    from_result((|| {
        let mut count = 0;
        let mut failures = Vec::new();
        for (ell, k) in [(2usize, 0i64), (2, 1), (3, 1), (4, 2)] {
            let charge = Charge::new(k, ell)?;
            let mut fact = BigInt::from(1);
            for n in 0..=8usize {
                if n > 0 {
                    fact *= n;
                }
                let mut total = BigInt::from(0);
                for beta in nonzero_blocks(&charge, n) {
                    total += graded_dim_block(&charge, &beta)?.eval_at_one();
                }
                count += 1;
                if total != fact {
                    failures.push(format!("l={ell} k={k} n={n}: {total} != {fact}"));
                }
            }
        }
        Ok(Outcome::from_failures(count, failures))
    })())
}

fn xik2_pattern() -> Outcome {
    from_result(tables::xik2().map(Outcome::from_checks))
}

fn dimension_displays() -> Outcome {
    from_result((|| {
        let mut checks = tables::onedelta()?;
        checks.extend(tables::xik4()?);
        checks.extend(tables::twodelta()?);
        Ok(Outcome::from_checks(checks))
    })())
}

fn defect_consistency() -> Outcome {
    from_result((|| {
        let mut count = 0;
        let mut failures = Vec::new();
        for ell in 2..=4usize {
            let datum = CartanDatum::new(ell)?;
            for k in 0..=ell {
                let charge = Charge::new(k as i64, ell)?;
                for n in 0..=10 {
                    for beta in roots_of_height(&datum, n) {
                        let dec = decompose(&datum, k, &beta)?;
                        let nonzero = is_nonzero_block(&charge, &beta)?;
                        count += 1;
                        if dec.is_some() != nonzero {
                            failures.push(format!("l={ell} k={k} {beta}: decompose/nonzero disagree"));
                            continue;
                        }
                        let Some(dec) = dec else { continue };
                        let defect = datum.defect(k, &beta);
                        let formula = 2 * dec.m - (dec.i / 2) as i64;
                        if defect != formula || defect < 0 {
                            failures.push(format!("l={ell} k={k} {beta}: defect {defect}, 2m-i/2 = {formula}"));
                        }
                    }
                }
            }
        }
        Ok(Outcome::from_failures(count, failures))
    })())
}

fn kleshchev_oracle() -> Outcome {
    from_result((|| {
        let mut count = 0;
        let mut failures = Vec::new();
        for ell in 2..=4usize {
            for kappa in 0..=2i64 {
                let charge = Charge::new(kappa, ell)?;
                let graph = crystal(&charge, 9);
                for n in 0..=9 {
                    for lambda in Partition::all_of(n) {
                        count += 1;
                        if is_kleshchev(&charge, &lambda) != graph.contains(&lambda) {
                            failures.push(format!("l={ell} kappa={kappa} {lambda}"));
                        }
                    }
                }
            }
        }
        Ok(Outcome::from_failures(count, failures))
    })())
}

fn hook_length(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let fact: u128 = (1..=lambda.size() as u128).product();
    let hooks: u128 = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &row)| {
            let conj = &conj;
            (0..row).map(move |c| (row - c) + (conj.parts()[c] - r) - 1)
        })
        .map(|h| h as u128)
        .product();
    fact / hooks
}

fn tableau_counts() -> Outcome {
    let mut count = 0;
    let mut failures = Vec::new();
    for n in 0..=10 {
        for lambda in Partition::all_of(n) {
            count += 1;
            let enumerated = standard_tableaux(&lambda).count() as u128;
            let formula = hook_length(&lambda);
            if enumerated != formula {
                failures.push(format!("{lambda}: {enumerated} != {formula}"));
            }
        }
    }
    Outcome::from_failures(count, failures)
}

fn classification_invariance() -> Outcome {
    from_result((|| {
        let mut rng = StdRng::seed_from_u64(0x5eed_c1a5);
        let mut count = 0;
        let mut failures = Vec::new();
        for ell in 2..=4usize {
            let datum = CartanDatum::new(ell)?;
            for k in 0..=ell {
                let charge = Charge::new(k as i64, ell)?;
                for n in 0..=8 {
                    for beta in nonzero_blocks(&charge, n) {
                        let base = classify(&datum, k, &beta)?;
                        for _ in 0..50 {
                            let len = rng.gen_range(1..=12);
                            let word = WeylWord::new((0..len).map(|_| rng.gen_range(0..=ell)).collect());
                            let twisted = datum.act(&word, &Weight::new(k, beta.clone())).beta;
                            count += 1;
                            if !twisted.is_nonnegative() {
                                failures.push(format!("l={ell} k={k} {beta}: twist left Q+"));
                                continue;
                            }
                            let got = classify(&datum, k, &twisted)?;
                            if got != base {
                                failures.push(format!("l={ell} k={k} {beta} twisted to {twisted}: {got:?} != {base:?}"));
                            }
                        }
                        count += 1;
                        let flipped = classify(&datum, flip_k(&datum, k), &dynkin_flip(&datum, &beta))?;
                        if flipped != base {
                            failures.push(format!("l={ell} k={k} {beta}: flip gives {flipped:?} != {base:?}"));
                        }
                    }
                }
            }
        }
        Ok(Outcome::from_failures(count, failures))
    })())
}

fn maximal_weight_witnesses() -> Outcome {
    from_result((|| {
        let mut count = 0;
        let mut failures = Vec::new();
        for ell in 2..=6usize {
            let datum = CartanDatum::new(ell)?;
            for k in 0..=ell {
                let charge = Charge::new(k as i64, ell)?;
                for i in (0..=ell).step_by(2) {
                    for sign in [Sign::Plus, Sign::Minus] {
                        let Ok(xi) = datum.xi(k, sign, i) else { continue };
                        let lambda = match sign {
                            Sign::Plus => Partition::new(vec![i; k + i / 2])?,
                            Sign::Minus => Partition::new(vec![ell - k + i / 2; i])?,
                        };
                        let expected = &((i / 2) as i64 * &datum.delta()) - &xi;
                        count += 1;
                        if charge.content(&lambda) != expected {
                            failures.push(format!("l={ell} k={k} {sign}{i}: {lambda}"));
                        }
                    }
                }
            }
        }
        Ok(Outcome::from_failures(count, failures))
    })())
}

fn weyl_identities() -> Outcome {
    from_result((|| {
        let mut count = 0;
        let mut failures = Vec::new();
        for ell in 2..=8usize {
            let datum = CartanDatum::new(ell)?;
            let delta = datum.delta();
            // Λ_k + ξ − nδ, stored as (k, nδ − ξ)
            let weight = |k: usize, sign: Sign, i: usize, n: i64| -> klr_core::Result<Weight> {
                Ok(Weight::new(k, &(n * &delta) - &datum.xi(k, sign, i)?))
            };
            // adding α_j to the weight
            let plus_alpha = |w: &Weight, j: usize| Weight::new(w.k, &w.beta - &datum.simple_root(j));
            let mut check = |name: String, word: Vec<usize>, from: Weight, to: Weight, node: usize| {
                count += 1;
                let image = datum.act(&WeylWord::new(word), &from);
                if image != to {
                    failures.push(format!("{name}: image {} != {}", image.beta, to.beta));
                }
                if datum.pairing(node, &to) != 2 {
                    failures.push(format!("{name}: pairing at {node} is {}", datum.pairing(node, &to)));
                }
            };
            for k in 0..=ell {
                for i in (0..=ell).step_by(2) {
                    for n in 0..=3i64 {
                        let tag = |s: &str| format!("l={ell} k={k} i={i} n={n} {s}");
                        if k + i <= ell {
                            let from = weight(k, Sign::Plus, i, n)?;
                            if k + i + 2 <= ell {
                                let word: Vec<usize> = (1..=k + i).rev().chain([0]).chain(1..=k + i).collect();
                                let to = plus_alpha(&weight(k, Sign::Plus, i + 2, n + 1)?, k + i + 1);
                                check(tag("+(i+2)"), word, from.clone(), to, k + i + 1);
                            }
                            if k + i < ell {
                                let word: Vec<usize> = (1..ell).rev().chain([0]).chain(1..=k + i).collect();
                                let to = plus_alpha(&weight(k, Sign::Plus, i, n + 1)?, ell);
                                check(tag("+i, alpha_l"), word, from.clone(), to, ell);
                            } else {
                                let word: Vec<usize> = (1..=ell).collect();
                                let to = plus_alpha(&weight(k, Sign::Plus, i, n + 1)?, 0);
                                check(tag("+i, alpha_0"), word, from, to, 0);
                            }
                        }
                        if i <= k {
                            let from = weight(k, Sign::Minus, i, n)?;
                            if k >= i + 2 {
                                let word: Vec<usize> = (k - i..ell).chain([ell]).chain((k - i..ell).rev()).collect();
                                let to = plus_alpha(&weight(k, Sign::Minus, i + 2, n + 1)?, k - i - 1);
                                check(tag("-(i+2)"), word, from.clone(), to, k - i - 1);
                            }
                            if k - i >= 1 {
                                let word: Vec<usize> = (1..ell).chain([ell]).chain((k - i..ell).rev()).collect();
                                let to = plus_alpha(&weight(k, Sign::Minus, i, n + 1)?, 0);
                                check(tag("-i, alpha_0"), word, from, to, 0);
                            } else {
                                let word: Vec<usize> = (0..ell).rev().collect();
                                let to = plus_alpha(&weight(k, Sign::Minus, i, n + 1)?, ell);
                                check(tag("-i, alpha_l"), word, from, to, ell);
                            }
                        }
                    }
                }
            }
        }
        Ok(Outcome::from_failures(count, failures))
    })())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("tame 4x4 graded dimension table", tame_table),
        ("level-n block dimensions sum to n!", factorial_sums),
        ("defect-one 1+q^2 / q / 0 pattern", xik2_pattern),
        ("onedelta, xik4 and twodelta dimension displays", dimension_displays),
        ("defect equals 2m - i/2 and is non-negative", defect_consistency),
        ("recursive Kleshchev test agrees with crystal BFS", kleshchev_oracle),
        ("tableau counts match the hook-length formula", tableau_counts),
        ("classification invariant under Weyl twists and Dynkin flip", classification_invariance),
        ("maximal-weight witness partitions have the right content", maximal_weight_witnesses),
        ("reflection-word identities and pairing-equals-2 checks", weyl_identities),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{status} [{:>2}] {name} ({})", idx + 1, outcome.detail);
        if !outcome.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
