use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::ratios::{beta, beta_sigma};
use super::series::TruncatedSeries;
use super::table::{Provenance, TableSet};
use crate::admissible::Family;
use crate::error::Result;

/// One verified statement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
}

/// A named list of checks.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CheckReport {
    pub title: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            label: label.into(),
            pass,
        });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.pass { "PASS" } else { "FAIL" },
                self.title,
                c.label
            )?;
        }
        Ok(())
    }
}

/// Checks every primed-family recursion whose terms are all present.
///
/// Identities whose left side was itself recursion-filled are skipped, since
/// they hold by construction.
pub fn verify_recursions(t: &TableSet) -> CheckReport {
    let mut report = CheckReport::new("recursions");
    for (primed, base, name, base_name, doubling) in [
        (Family::APrime, Family::A, "A'", "A", true),
        (
            Family::ASigmaPrime,
            Family::ASigma,
            "A'sigma",
            "Asigma",
            false,
        ),
    ] {
        let table = t.get(primed);
        for (j, entry) in table.iter().skip(1) {
            if entry.provenance == Provenance::Recursion {
                continue;
            }
            let prev = table.get(j - 1).expect("contiguous");
            if j % 2 == 0 {
                let rhs = if doubling { prev * 2u32 } else { prev.clone() };
                let form = if doubling { "2*" } else { "" };
                report.push(
                    format!(
                        "{name}_{j} = {form}{name}_{} ({} vs {rhs})",
                        j - 1,
                        entry.value
                    ),
                    entry.value == rhs,
                );
            } else {
                let m = (j - 1) / 2;
                let Some(sub) = t.get(base).get(m) else {
                    continue;
                };
                let rhs = BigInt::from(prev.clone()) * 2 - BigInt::from(sub.clone());
                report.push(
                    format!(
                        "{name}_{j} = 2*{name}_{} - {base_name}_{m} ({} vs {rhs})",
                        j - 1,
                        entry.value
                    ),
                    BigInt::from(entry.value.clone()) == rhs,
                );
            }
        }
    }
    report
}

fn counts(t: &TableSet, family: Family, upto: u32) -> Result<Vec<BigUint>> {
    (1..=upto).map(|k| t.value(family, k).cloned()).collect()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn first_mismatch(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<usize> {
    (0..=a.degree()).find(|&i| a.coeff(i) != b.coeff(i))
}

fn push_series(
    report: &mut CheckReport,
    label: String,
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
) {
    match first_mismatch(lhs, rhs) {
        None => report.push(label, true),
        Some(i) => report.push(
            format!("{label}; z^{i}: {} vs {}", lhs.coeff(i), rhs.coeff(i)),
            false,
        ),
    }
}

/// Expands both sides of the generating-function identities through `z^n`
/// and compares coefficients, independently of the recursion code.
///
/// Non-σ: `(2z−1)f(z) = z(g(z²)−1)` and `2f(z/2) = Σ γ_k z^k`.
/// σ: `(2z²−1)f^σ(z) = z(z+1)(g^σ(z²)−1)` and
/// `(z/(z−1))(g^σ(z²/2)−1) = Σ γ^σ_k z^k = Σ A′^σ_k 2^{−⌊(k−1)/2⌋} z^k`.
pub fn verify_genfunc_coeffs(t: &TableSet, n: u32, sigma: bool) -> Result<CheckReport> {
    let deg = n as usize;
    let (primed, base) = if sigma {
        (Family::ASigmaPrime, Family::ASigma)
    } else {
        (Family::APrime, Family::A)
    };
    let f = TruncatedSeries::from_counts(deg, &counts(t, primed, n)?);
    let g = TruncatedSeries::from_counts(deg, &counts(t, base, n.saturating_sub(1) / 2)?);
    let one = TruncatedSeries::monomial(deg, 0, rat(1));
    let z = TruncatedSeries::monomial(deg, 1, rat(1));
    let mut report = CheckReport::new(if sigma { "genfunc-sigma" } else { "genfunc" });

    let g_sq = &g.substitute(&rat(1), 2) - &one;
    if sigma {
        let lhs = &(&TruncatedSeries::monomial(deg, 2, rat(2)) - &one) * &f;
        let rhs = &(&(&z * &z) + &z) * &g_sq;
        push_series(
            &mut report,
            format!("(2z^2-1)f(z) = z(z+1)(g(z^2)-1) through z^{n}"),
            &lhs,
            &rhs,
        );

        let half = BigRational::new(1.into(), 2.into());
        let z_over =
            TruncatedSeries::from_coeffs(deg, (0..=deg).map(|i| rat(if i == 0 { 0 } else { -1 })));
        let h = &z_over * &(&g.substitute(&half, 2) - &one);
        let mut gammas = Vec::with_capacity(deg + 1);
        let mut scaled = Vec::with_capacity(deg + 1);
        gammas.push(rat(0));
        scaled.push(rat(0));
        for k in 1..=n {
            gammas.push(BigRational::one() - beta_sigma(k, t)?);
            let c = BigInt::from(t.value(primed, k)?.clone());
            scaled.push(BigRational::new(c, BigInt::from(2u32).pow((k - 1) / 2)));
        }
        let gammas = TruncatedSeries::from_coeffs(deg, gammas);
        let scaled = TruncatedSeries::from_coeffs(deg, scaled);
        push_series(
            &mut report,
            format!("h(z) coefficients equal gamma_k for k <= {n}"),
            &h,
            &gammas,
        );
        push_series(
            &mut report,
            format!("gamma_k = A'_k / 2^floor((k-1)/2) for k <= {n}"),
            &scaled,
            &gammas,
        );
    } else {
        let lhs = &(&TruncatedSeries::monomial(deg, 1, rat(2)) - &one) * &f;
        let rhs = &z * &g_sq;
        push_series(
            &mut report,
            format!("(2z-1)f(z) = z(g(z^2)-1) through z^{n}"),
            &lhs,
            &rhs,
        );

        let h = &TruncatedSeries::monomial(deg, 0, rat(2))
            * &f.substitute(&BigRational::new(1.into(), 2.into()), 1);
        let mut gammas = vec![rat(0)];
        for k in 1..=n {
            gammas.push(BigRational::one() - beta(k, t)?);
        }
        let gammas = TruncatedSeries::from_coeffs(deg, gammas);
        push_series(
            &mut report,
            format!("2f(z/2) coefficients equal gamma_k for k <= {n}"),
            &h,
            &gammas,
        );
    }
    Ok(report)
}
