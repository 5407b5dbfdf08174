use std::ops::RangeInclusive;

use serde::Serialize;

use crate::classify::{build_automorphisms, classify};
use crate::code::{Budget, LinearCode};
use crate::constructions::{all_linear_codes, kron_code, q_repeat, HammingParams};
use crate::error::Error;
use crate::gf::FieldSpec;
use crate::json::to_pretty;
use crate::linalg::checked_power;
use crate::regularity::{
    cr_oracle_set, is_completely_regular, is_completely_transitive, repeat_recurrence_check,
    CodeSet, Strategy,
};

use super::args::Suite;
use super::{field_of, Failure, Output, EXIT_FAILURE, EXIT_OK};

#[derive(Serialize)]
struct CaseResult {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct SuiteReport {
    suite: &'static str,
    passed: usize,
    failed: usize,
    cases: Vec<CaseResult>,
}

fn fields(q: &RangeInclusive<usize>) -> Vec<FieldSpec> {
    q.clone()
        .filter_map(|q| field_of(q as u64, None).ok())
        .collect()
}

pub(crate) fn run(suite: &Suite, b: &Budget, json: bool) -> Result<Output, Failure> {
    let (name, cases) = match suite {
        Suite::Oracle { q, n } => ("oracle", oracle(q, n, b)?),
        Suite::Eqn1 { q, na, mb } => ("eqn1", eqn1(q, na, mb, b)?),
        Suite::Recurrence { q, n } => ("recurrence", recurrence(q, n, b)?),
        Suite::Transitive {
            q,
            na,
            mb,
            exhaustive,
        } => ("transitive", transitive(q, na, mb, *exhaustive, b)?),
    };
    if cases.is_empty() {
        return Err(Failure::usage("no cases in the requested ranges"));
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    let report = SuiteReport {
        suite: name,
        passed,
        failed: cases.len() - passed,
        cases,
    };
    let code = if report.failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    let text = if json {
        to_pretty(&report)
    } else {
        let mut s = String::new();
        for c in &report.cases {
            s.push_str(&format!(
                "{} {} {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        s.push_str(&format!(
            "{}: {} passed, {} failed\n",
            name, report.passed, report.failed
        ));
        s
    };
    Ok(Output { text, code })
}

fn oracle(
    q: &RangeInclusive<usize>,
    n: &RangeInclusive<usize>,
    b: &Budget,
) -> Result<Vec<CaseResult>, Failure> {
    let mut out = Vec::new();
    for f in fields(q) {
        for len in n.clone().filter(|&l| l > 0) {
            let codes = all_linear_codes(&f, len)?;
            let mut disagree = Vec::new();
            let mut regular = 0;
            for c in &codes {
                let by_cosets = is_completely_regular(c, b)?.is_regular();
                let by_oracle = cr_oracle_set(&CodeSet::from_code(c, b)?, b)?;
                regular += usize::from(by_cosets);
                if by_cosets != by_oracle {
                    disagree.push(format!("{c:?}"));
                }
            }
            out.push(CaseResult {
                name: format!("q={} n={len}", f.q()),
                pass: disagree.is_empty(),
                detail: if disagree.is_empty() {
                    format!("{} codes agree ({regular} completely regular)", codes.len())
                } else {
                    format!("disagreement on {}", disagree.join("; "))
                },
            });
        }
    }
    Ok(out)
}

fn eqn1(
    q: &RangeInclusive<usize>,
    na: &RangeInclusive<usize>,
    mb: &RangeInclusive<usize>,
    b: &Budget,
) -> Result<Vec<CaseResult>, Failure> {
    let mut out = Vec::new();
    for f in fields(q) {
        for n_a in na.clone().filter(|&a| a >= 2) {
            for m_b in mb.clone().filter(|&m| m >= 2) {
                let code = kron_code(&f, n_a, m_b)?;
                let name = format!("q={} n_a={n_a} m_b={m_b}", f.q());
                out.push(eqn1_case(&code, name, b)?);
            }
        }
    }
    Ok(out)
}

fn eqn1_case(code: &LinearCode, name: String, b: &Budget) -> Result<CaseResult, Error> {
    let q = code.field().q() as u128;
    let reg = is_completely_regular(code, b)?;
    let rho = code.covering_radius(b)?;
    let d = code.min_distance(b)?;
    let Some(n_a) = reg.profile().and_then(|p| p.n_a()) else {
        return Ok(CaseResult {
            name,
            pass: false,
            detail: "not completely regular with rho >= 1".into(),
        });
    };
    let lhs = (q - 1) * code.n() as u128;
    let rhs = checked_power(q as usize, code.redundancy()).map(|p| (p - 1) * n_a as u128);
    let pass = rho == 1 && d == 2 && rhs == Some(lhs);
    Ok(CaseResult {
        name,
        pass,
        detail: format!(
            "n={} k={} d={d} rho={rho} n_a={n_a}: (q-1)n={lhs}, (q^(n-k)-1)n_a={}",
            code.n(),
            code.k(),
            rhs.map_or("overflow".to_string(), |r| r.to_string())
        ),
    })
}

fn recurrence(
    q: &RangeInclusive<usize>,
    n: &RangeInclusive<usize>,
    b: &Budget,
) -> Result<Vec<CaseResult>, Failure> {
    let mut out = Vec::new();
    for f in fields(q) {
        for len in n.clone().filter(|&l| l > 0) {
            let codes = all_linear_codes(&f, len)?;
            let mut failures = Vec::new();
            let mut non_regular = 0;
            for c in &codes {
                let r = q_repeat(c)?;
                let counts_ok = repeat_recurrence_check(c, &r, b)?;
                let rho_ok = c.covering_radius(b)? == r.covering_radius(b)?;
                let cr = is_completely_regular(c, b)?.is_regular();
                let cr_ok = cr == is_completely_regular(&r, b)?.is_regular();
                non_regular += usize::from(!cr);
                if !(counts_ok && rho_ok && cr_ok) {
                    failures.push(format!("{c:?}"));
                }
            }
            out.push(CaseResult {
                name: format!("q={} n={len}", f.q()),
                pass: failures.is_empty(),
                detail: if failures.is_empty() {
                    format!(
                        "{} codes ({non_regular} not completely regular)",
                        codes.len()
                    )
                } else {
                    format!("failed on {}", failures.join("; "))
                },
            });
        }
    }
    Ok(out)
}

fn transitive(
    q: &RangeInclusive<usize>,
    na: &RangeInclusive<usize>,
    mb: &RangeInclusive<usize>,
    exhaustive: bool,
    b: &Budget,
) -> Result<Vec<CaseResult>, Failure> {
    let mut out = Vec::new();
    for f in fields(q) {
        for n_a in na.clone().filter(|&a| a >= 1) {
            for m_b in mb.clone().filter(|&m| m >= 2) {
                HammingParams::new(f.q(), m_b)?;
                let code = kron_code(&f, n_a, m_b)?;
                let cert = classify(&code, b)?;
                let gens = build_automorphisms(&cert)?;
                let name = format!("q={} n_a={n_a} m_b={m_b}", f.q());
                let (pass, mut detail) =
                    match is_completely_transitive(&code, Strategy::Generated(&gens), b) {
                        Ok(t) => (
                            t.completely_transitive,
                            format!("{} generators, {} coset orbits", gens.len(), t.orbits),
                        ),
                        Err(Error::Indeterminate { orbits, .. }) => (
                            false,
                            format!("{} generators, {orbits} coset orbits", gens.len()),
                        ),
                        Err(e) => return Err(e.into()),
                    };
                let mut pass = pass;
                if exhaustive {
                    match is_completely_transitive(&code, Strategy::Exhaustive, b) {
                        Ok(t) => {
                            pass &= t.completely_transitive;
                            detail.push_str(&format!(
                                "; exhaustive: {} automorphisms, {} orbits",
                                t.automorphisms, t.orbits
                            ));
                        }
                        Err(Error::BudgetExceeded { .. }) => {
                            detail.push_str("; exhaustive: over budget")
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                out.push(CaseResult { name, pass, detail });
            }
        }
    }
    Ok(out)
}
