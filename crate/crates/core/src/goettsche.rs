//! Betti numbers of the Hilbert schemes X^[n] from the Göttsche product,
//! expanded as a truncated power series in q (number of points) and z
//! (homological degree).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default cap on the number of stored coefficients.
pub const DEFAULT_COEFF_BUDGET: u64 = 1_000_000;

/// Rational Betti numbers of X^[n] for 0 ≤ n ≤ `n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiSeries {
    pub b_input: [u64; 5],
    pub n_max: usize,
    /// `rows[n][i]` = b_i(X^[n]), for 0 ≤ i ≤ 4n.
    rows: Vec<Vec<BigUint>>,
}

impl BettiSeries {
    pub fn get(&self, n: usize, i: usize) -> BigUint {
        self.rows.get(n).and_then(|row| row.get(i)).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.rows[n].iter().sum()
    }

    /// Alternating sum of row `n`, i.e. χ(X^[n]).
    pub fn euler(&self, n: usize) -> BigInt {
        self.rows[n]
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let c = BigInt::from(c.clone());
                if i % 2 == 0 { c } else { -c }
            })
            .sum()
    }
}

/// Number of coefficients a table up to `n_max` holds: Σ (4n + 1).
pub fn coefficient_count(n_max: usize) -> u64 {
    let n = n_max as u64;
    2 * n * (n + 1) + n + 1
}

/// Coefficients of (1 + x)^b, or of (1 − x)^{−b} when `inverse`, up to x^k_max.
fn binomial_series(b: u64, k_max: usize, inverse: bool) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(k_max + 1);
    let mut c = BigUint::one();
    out.push(c.clone());
    for k in 1..=k_max as u64 {
        let top = if inverse { b + k - 1 } else { b.wrapping_sub(k - 1) };
        if !inverse && k > b {
            c = BigUint::zero();
        } else {
            c = c * top / k;
        }
        out.push(c.clone());
    }
    out
}

/// rows ← rows · Σ_k coeffs[k] z^{a k} q^{m k}, in place.
fn multiply_monomial_series(rows: &mut [Vec<BigUint>], coeffs: &[BigUint], a: usize, m: usize) {
    for n in (0..rows.len()).rev() {
        for k in 1..coeffs.len() {
            if coeffs[k].is_zero() || m * k > n {
                continue;
            }
            let src = n - m * k;
            let shift = a * k;
            let (lower, upper) = rows.split_at_mut(n);
            let target = &mut upper[0];
            for (i, v) in lower[src].iter().enumerate() {
                if !v.is_zero() {
                    target[i + shift] += v * &coeffs[k];
                }
            }
        }
    }
}

pub fn hilb_betti_series(b: [u64; 5], n_max: usize) -> Result<BettiSeries> {
    hilb_betti_series_with_budget(b, n_max, DEFAULT_COEFF_BUDGET)
}

pub fn hilb_betti_series_with_budget(b: [u64; 5], n_max: usize, budget: u64) -> Result<BettiSeries> {
    if b[0] != 1 {
        return Err(Error::NotApplicable {
            op: "hilb_betti_series",
            reason: format!("b0 = {} but the surface must be connected", b[0]),
        });
    }
    if n_max == 0 {
        return Err(Error::NotApplicable { op: "hilb_betti_series", reason: "n_max must be at least 1".into() });
    }
    let needed = coefficient_count(n_max);
    if needed > budget {
        return Err(Error::Budget { what: "Betti series coefficients", needed, budget });
    }

    let mut rows: Vec<Vec<BigUint>> = (0..=n_max).map(|n| vec![BigUint::zero(); 4 * n + 1]).collect();
    rows[0][0] = BigUint::one();
    for m in 1..=n_max {
        let k_max = n_max / m;
        // (z-exponent, exponent b_j, denominator?) for each factor at this m
        let factors = [
            (2 * m - 1, b[1], false),
            (2 * m + 1, b[3], false),
            (2 * m - 2, b[0], true),
            (2 * m, b[2], true),
            (2 * m + 2, b[4], true),
        ];
        for (a, exponent, inverse) in factors {
            if exponent == 0 {
                continue;
            }
            let coeffs = binomial_series(exponent, k_max, inverse);
            multiply_monomial_series(&mut rows, &coeffs, a, m);
        }
    }
    Ok(BettiSeries { b_input: b, n_max, rows })
}

/// Coefficients of ∏_{m≥1} (1 − q^m)^{−χ} up to q^{n_max}.
pub fn euler_series(chi: i64, n_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n_max + 1];
    out[0] = BigInt::one();
    for m in 1..=n_max {
        let k_max = n_max / m;
        let coeffs: Vec<BigInt> = if chi >= 0 {
            binomial_series(chi as u64, k_max, true).into_iter().map(BigInt::from).collect()
        } else {
            binomial_series(chi.unsigned_abs(), k_max, false)
                .into_iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { BigInt::from(c) } else { -BigInt::from(c) })
                .collect()
        };
        for n in (0..=n_max).rev() {
            for k in 1..coeffs.len() {
                if m * k <= n {
                    let add = &out[n - m * k] * &coeffs[k];
                    out[n] += add;
                }
            }
        }
    }
    out
}

/// Total Betti number of X^[2] predicted by ½b₊(b₊+1) + b₊ − 2b₁.
pub fn cx_relation_value(b: [u64; 5]) -> BigInt {
    let total = BigInt::from(b.iter().map(|&v| v as u128).sum::<u128>());
    (&total * (&total + 1u32)) / 2u32 + &total - BigInt::from(b[1]) * 2u32
}

/// Whether the n = 2 row of the series sums to ½b₊(b₊+1) + b₊ − 2b₁.
pub fn check_cx_relation(b: [u64; 5]) -> bool {
    match hilb_betti_series(b, 2) {
        Ok(series) => BigInt::from(series.row_sum(2)) == cx_relation_value(b),
        Err(_) => false,
    }
}
