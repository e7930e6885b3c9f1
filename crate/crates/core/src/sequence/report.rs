use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::decimal::{compact_decimal, fixed_decimal, rational_string};
use super::ratios::{beta, beta_sigma, enclose_beta_inf};
use super::table::TableSet;
use super::verify::CheckReport;
use crate::admissible::Family;
use crate::error::Result;

pub const TABLE1_HEADER: &str = "n,Aprime,A,beta,beta_plus_bound,ratio";
pub const TABLE2_HEADER: &str = "n,Asigmaprime,Asigma,beta_sigma,R";

fn count_json(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn ratio_of(n: &BigUint, d: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(n.clone()), BigInt::from(d.clone()))
}

/// `R_n = (A^σ_n)^{−1/n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RValue {
    /// `A^σ_n = 0`.
    Infinite,
    /// `A^σ_n` is a perfect `n`-th power `b^n`, so `R_n = 1/b`.
    Exact(BigRational),
    /// Irrational; `R_n` rounded to thousandths, as an integer count of them.
    Thousandths(u32),
}

/// Rounds exactly without floating point: `R_n > t ⟺ A^σ_n · t^n < 1`.
pub fn r_value(a: &BigUint, n: u32) -> RValue {
    if a.is_zero() {
        return RValue::Infinite;
    }
    let b = a.nth_root(n);
    if b.pow(n) == *a {
        return RValue::Exact(BigRational::new(BigInt::one(), BigInt::from(b)));
    }
    let scale = BigUint::from(2000u32).pow(n);
    let above = |d: u32| a * BigUint::from(2 * d - 1).pow(n) < scale;
    // Largest d in 1..=1000 with R_n above (2d−1)/2000; R_n < 1 here.
    let (mut lo, mut hi) = (0u32, 1000u32);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if above(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    RValue::Thousandths(lo)
}

impl RValue {
    pub fn render(&self) -> String {
        match self {
            RValue::Infinite => "inf".into(),
            RValue::Exact(q) => compact_decimal(q, 3),
            RValue::Thousandths(d) => fixed_decimal(&BigRational::new((*d).into(), 1000.into()), 3),
        }
    }
}

/// One row of the `β_∞` bounds table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Table1Row {
    pub n: u32,
    pub a_prime: BigUint,
    pub a: BigUint,
    pub beta: BigRational,
    pub beta_plus_bound: BigRational,
    /// `A_{n−1}/A_n`, absent at `n = 1`.
    pub ratio: Option<BigRational>,
}

impl Table1Row {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.a_prime,
            self.a,
            fixed_decimal(&self.beta, 6),
            fixed_decimal(&self.beta_plus_bound, 6),
            self.ratio
                .as_ref()
                .map_or("-".into(), |r| fixed_decimal(r, 4)),
        )
    }

    pub fn json(&self) -> Value {
        json!({
            "n": self.n,
            "Aprime": count_json(&self.a_prime),
            "A": count_json(&self.a),
            "beta": rational_string(&self.beta),
            "beta_plus_bound": rational_string(&self.beta_plus_bound),
            "ratio": self.ratio.as_ref().map(rational_string),
        })
    }
}

/// Rows `1..=max_n`; needs `A′_n` and `A_n` through `max_n`.
pub fn table1(t: &TableSet, max_n: u32) -> Result<Vec<Table1Row>> {
    (1..=max_n)
        .map(|n| {
            let bounds = enclose_beta_inf(n, t)?;
            let a = t.value(Family::A, n)?.clone();
            let ratio = if n == 1 {
                None
            } else {
                Some(ratio_of(t.value(Family::A, n - 1)?, &a))
            };
            Ok(Table1Row {
                n,
                a_prime: t.value(Family::APrime, n)?.clone(),
                a,
                beta: bounds.lo().clone(),
                beta_plus_bound: bounds.hi().clone(),
                ratio,
            })
        })
        .collect()
}

/// One row of the `β^σ_∞` table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Table2Row {
    pub n: u32,
    /// `A′^σ_{2n−1}`.
    pub a_sigma_prime: BigUint,
    pub a_sigma: BigUint,
    /// `β^σ_{2n−1}`.
    pub beta_sigma: BigRational,
    pub r: RValue,
}

impl Table2Row {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n,
            self.a_sigma_prime,
            self.a_sigma,
            compact_decimal(&self.beta_sigma, 5),
            self.r.render()
        )
    }

    pub fn json(&self) -> Value {
        json!({
            "n": self.n,
            "Asigmaprime": count_json(&self.a_sigma_prime),
            "Asigma": count_json(&self.a_sigma),
            "beta_sigma": rational_string(&self.beta_sigma),
            "R": self.r.render(),
        })
    }
}

/// Rows `1..=max_n`; needs `A′^σ` through `2·max_n − 1` and `A^σ` through `max_n`.
pub fn table2(t: &TableSet, max_n: u32) -> Result<Vec<Table2Row>> {
    (1..=max_n)
        .map(|n| {
            let a_sigma = t.value(Family::ASigma, n)?.clone();
            Ok(Table2Row {
                n,
                a_sigma_prime: t.value(Family::ASigmaPrime, 2 * n - 1)?.clone(),
                r: r_value(&a_sigma, n),
                a_sigma,
                beta_sigma: beta_sigma(2 * n - 1, t)?,
            })
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrowthRow {
    pub n: u32,
    /// `A_{n−1}/A_n` rounded to 4 places, when both are present.
    pub ratio: Option<String>,
    /// `R_n` rendered, when `A^σ_n` is present.
    pub r: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    /// `2^{⌊(k−1)/2⌋} ≤ A_k ≤ 3^{k−1}`, `A^σ_n ≤ 3^{⌊(n−3)/2⌋}` for `n ≥ 3`,
    /// `0 < A′_k ≤ A_k`, and `A′^σ_k ≤ A^σ_k` for odd `k`.
    pub bounds: CheckReport,
    /// `β_g` strictly increasing over odd `g` while `A_k > 0`.
    pub monotone: CheckReport,
}

pub fn growth_report(t: &TableSet) -> GrowthReport {
    let a = t.get(Family::A);
    let s = t.get(Family::ASigma);
    let rows = (1..=a.len().max(s.len()))
        .map(|n| GrowthRow {
            n,
            ratio: match (n.checked_sub(1).and_then(|m| a.get(m)), a.get(n)) {
                (Some(p), Some(c)) if !c.is_zero() => Some(fixed_decimal(&ratio_of(p, c), 4)),
                _ => None,
            },
            r: s.get(n).map(|v| r_value(v, n).render()),
        })
        .collect();

    let mut bounds = CheckReport::new("bounds");
    for (k, e) in a.iter() {
        let lo = BigUint::from(2u32).pow((k - 1) / 2);
        let hi = BigUint::from(3u32).pow(k - 1);
        bounds.push(
            format!("2^{} <= A_{k} = {} <= 3^{}", (k - 1) / 2, e.value, k - 1),
            lo <= e.value && e.value <= hi,
        );
    }

    for (n, e) in s.iter().filter(|(n, _)| *n >= 3) {
        let hi = BigUint::from(3u32).pow((n - 3) / 2);
        bounds.push(
            format!("Asigma_{n} = {} <= 3^{}", e.value, (n - 3) / 2),
            e.value <= hi,
        );
    }
    let ap = t.get(Family::APrime);
    for (k, e) in ap.iter() {
        if let Some(full) = a.get(k) {
            bounds.push(
                format!("0 < A'_{k} = {} <= A_{k} = {full}", e.value),
                !e.value.is_zero() && e.value <= *full,
            );
        }
    }
    let sp = t.get(Family::ASigmaPrime);
    for (k, e) in sp.iter().filter(|(k, _)| k % 2 == 1) {
        if let Some(full) = s.get(k) {
            bounds.push(
                format!("A'sigma_{k} = {} <= Asigma_{k} = {full}", e.value),
                e.value <= *full,
            );
        }
    }

    let mut monotone = CheckReport::new("monotone");
    for k in 1..=a.len() {
        let (Ok(prev), Ok(next)) = (beta(2 * k - 1, t), beta(2 * k + 1, t)) else {
            break;
        };
        monotone.push(
            format!("beta_{} < beta_{}", 2 * k - 1, 2 * k + 1),
            prev < next,
        );
    }
    GrowthReport {
        rows,
        bounds,
        monotone,
    }
}
