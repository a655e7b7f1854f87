//! Verification suites driving the library's check operations, one
//! pass/fail line per check. Any failure makes the process exit nonzero,
//! except in the `conjecture` suite, which only reports.

use anyhow::{bail, Result};

use rhofield::chebyshev::{self, cheb_q, q_coefficient_closed_form};
use rhofield::dsr::{
    dependent_dsr_count, dpf_verify, positive_zero_poly, reduced_algebra_table,
};
use rhofield::minpoly::{
    absolute_term_suite, discriminant_conjecture_check, minimal_poly_dpr,
    minimal_poly_recursive, s_factorization_check, zero_sign_counts, zero_sign_counts_oracle,
    zeros_power_basis, eval_int_poly_at, FieldElement,
};
use rhofield::modd::{
    modd_lemma_suite, modd_mul, modd_reduce, modd_pow, nontrivial_sqrt_one, primitive_root,
    reduced_odd_by_enumeration, reduced_odd_sequence, wilson_analog_check, ModdContext,
};
use rhofield::numthy::{coprime_sum_identity_check, cosine_product_check, is_prime};

pub struct SuiteOutcome {
    pub lines: Vec<String>,
    pub failed: u64,
    /// Failures in a report-only suite do not affect the exit code.
    pub report_only: bool,
}

fn check(lines: &mut Vec<String>, failed: &mut u64, name: &str, ok: bool) {
    if ok {
        lines.push(format!("PASS {name}"));
    } else {
        lines.push(format!("FAIL {name}"));
        *failed += 1;
    }
}

pub fn run_suite(suite: &str, n_max: u64) -> Result<SuiteOutcome> {
    let mut lines = Vec::new();
    let mut failed = 0u64;
    let mut report_only = false;
    match suite {
        "chebyshev" => {
            let k_max = n_max.clamp(2, 24);
            let report = chebyshev::identity_suite(k_max);
            check(&mut lines, &mut failed, "product-formula", report.product_formula);
            check(
                &mut lines,
                &mut failed,
                "shifted-difference",
                report.shifted_difference,
            );
            check(&mut lines, &mut failed, "index-doubling", report.index_doubling);
            check(
                &mut lines,
                &mut failed,
                "square-difference",
                report.square_difference,
            );
            check(&mut lines, &mut failed, "composition", report.composition);
            let bisect = (0..=k_max).all(|n| {
                let (lhs, rhs) = chebyshev::s_bisection_shift(n);
                lhs == rhs
            });
            check(&mut lines, &mut failed, "bisection-shift", bisect);
            let q_closed = (0..=k_max).all(|k| {
                let q = cheb_q(k);
                (0..=k).all(|m| q.coeff(m as usize) == q_coefficient_closed_form(k, m))
            });
            check(&mut lines, &mut failed, "q-coefficient-closed-form", q_closed);
        }
        "minpoly" => {
            let routes = (1..=n_max)
                .all(|n| minimal_poly_recursive(n).unwrap().poly == minimal_poly_dpr(n).unwrap().poly);
            check(&mut lines, &mut failed, "route-agreement", routes);
            let signs =
                (1..=n_max).all(|n| zero_sign_counts(n) == zero_sign_counts_oracle(n));
            check(&mut lines, &mut failed, "zero-sign-counts", signs);
            let zeros_ok = (1..=n_max.min(60)).all(|n| {
                let c = minimal_poly_recursive(n).unwrap().poly;
                zeros_power_basis(n).rows.into_iter().all(|(_, coords)| {
                    let e = FieldElement::new(
                        n,
                        coords
                            .into_iter()
                            .map(num_rational::BigRational::from_integer)
                            .collect(),
                    );
                    eval_int_poly_at(&c, &e).is_zero()
                })
            });
            check(&mut lines, &mut failed, "zero-table-roots", zeros_ok);
            let abs = absolute_term_suite(n_max.max(2)).iter().all(|c| c.passed());
            check(&mut lines, &mut failed, "absolute-terms", abs);
            let s_fact = (2..=n_max.min(100)).all(s_factorization_check);
            check(&mut lines, &mut failed, "s-factorization", s_fact);
        }
        "dsr" => {
            let mut dpf_ok = true;
            for n in 4..=n_max {
                for m in 2..=n / 2 {
                    for k in m..=n / 2 {
                        dpf_ok &= dpf_verify(n, m, k);
                    }
                }
            }
            check(&mut lines, &mut failed, "dpf-products", dpf_ok);
            let deps = (3..=n_max).all(|n| {
                reduced_algebra_table(n).dependencies.len() as u64 == dependent_dsr_count(n)
            });
            check(&mut lines, &mut failed, "dependency-counts", deps);
            let pz = (3..=n_max.min(24)).all(|n| positive_zero_poly(n).factorization_holds);
            check(&mut lines, &mut failed, "positive-zero-factorization", pz);
        }
        "modd" => {
            let mut mult = true;
            for n in 1..=n_max.min(30) {
                let ctx = ModdContext::new(n);
                let bound = 3 * n as i64;
                for k in -bound..=bound {
                    for l in -bound..=bound {
                        let lhs = modd_reduce(&ctx, k * l);
                        let rhs = modd_reduce(
                            &ctx,
                            modd_reduce(&ctx, k) as i64 * modd_reduce(&ctx, l) as i64,
                        );
                        mult &= lhs == rhs;
                    }
                }
            }
            check(&mut lines, &mut failed, "multiplicativity", mult);
            let mut closure = true;
            let mut fermat = true;
            let mut orders = true;
            for n in 1..=n_max {
                let ctx = ModdContext::new(n);
                for &a in ctx.members() {
                    for &b in ctx.members() {
                        closure &= ctx.members().binary_search(&modd_mul(&ctx, a as i64, b as i64)).is_ok();
                    }
                    fermat &= modd_pow(&ctx, a, ctx.delta()) == 1;
                    orders &= ctx.delta() % rhofield::modd::element_order(&ctx, a) == 0;
                }
            }
            check(&mut lines, &mut failed, "closure", closure);
            check(&mut lines, &mut failed, "fermat-euler", fermat);
            check(&mut lines, &mut failed, "order-divides-delta", orders);
            let lemmas = (1..=n_max.min(40)).all(|n| {
                modd_lemma_suite(&ModdContext::new(n), -(3 * n as i64), 3 * n as i64).all_hold()
            });
            check(&mut lines, &mut failed, "residue-lemmas", lemmas);
            let odd_seq = [3u64, 5, 7, 15, 21, 105]
                .iter()
                .filter(|&&n| n <= n_max.max(7))
                .all(|&n| {
                    (1..=500).all(|k| {
                        reduced_odd_sequence(n, k).unwrap() == reduced_odd_by_enumeration(n, k)
                    })
                });
            check(&mut lines, &mut failed, "reduced-odd-sequence", odd_seq);
            let wilson = (3..=n_max).filter(|&p| is_prime(p)).all(wilson_analog_check);
            check(&mut lines, &mut failed, "wilson-analog", wilson);
            let sqrt_even = (4..=n_max)
                .step_by(2)
                .filter(|&n| {
                    let ctx = ModdContext::new(n);
                    primitive_root(&ctx).is_some()
                })
                .all(|n| nontrivial_sqrt_one(&ModdContext::new(n)) == Some(n - 1));
            check(&mut lines, &mut failed, "even-cyclic-sqrt-one", sqrt_even);
        }
        "conjecture" => {
            report_only = true;
            let mut agrees = 0u64;
            for n in 1..=n_max {
                match discriminant_conjecture_check(n) {
                    Ok(outcome) if outcome.agrees => agrees += 1,
                    Ok(outcome) => {
                        lines.push(format!(
                            "DISAGREE n={}: q={} conjectured={:?}",
                            n, outcome.q_value, outcome.conjecture_value
                        ));
                    }
                    Err(e) => {
                        // a non-integral q would falsify the whole setup
                        failed += 1;
                        report_only = false;
                        lines.push(format!("FAIL {e}"));
                    }
                }
            }
            lines.push(format!("agrees: {agrees}/{n_max}"));
        }
        "appendix" => {
            let coprime = (2..=n_max).all(coprime_sum_identity_check);
            check(&mut lines, &mut failed, "coprime-sum-identity", coprime);
            let cosine = (2..=n_max).all(cosine_product_check);
            check(
                &mut lines,
                &mut failed,
                "cosine-and-sine-products",
                cosine,
            );
        }
        other => bail!(
            "unknown suite '{other}'; known suites: chebyshev, minpoly, dsr, modd, conjecture, appendix"
        ),
    }
    Ok(SuiteOutcome {
        lines,
        failed,
        report_only,
    })
}
