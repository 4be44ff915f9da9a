//! Closed forms for `K_3(G_n)` and `K_4(G_n)`.
//!
//! Each formula builds its whole numerator as a big integer and divides once;
//! a nonzero remainder is reported as a consistency error, never rounded.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Pow, Zero};
use serde::Serialize;

use crate::charsums::GaussianInt;
use crate::error::{Error, Result};
use crate::numtheory::{two_squares, AdmissibleModulus};
use crate::BigCount;

fn exact_div(numerator: BigInt, denominator: BigInt, what: &str) -> Result<BigCount> {
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::Consistency(format!("{what}: {numerator} / {denominator} leaves remainder {r}")));
    }
    match q.sign() {
        Sign::Minus => Err(Error::Consistency(format!("{what}: negative count {q}"))),
        _ => Ok(q.magnitude().clone()),
    }
}

fn pow(base: u64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// `K_3(G_n) = prod p^(3a-2) (p-1)(p-5) / (3 * 2^(3k+1))`; zero for even `n`.
pub fn k3_formula(m: &AdmissibleModulus) -> Result<BigCount> {
    if !m.is_odd() {
        return Ok(BigUint::zero());
    }
    let numerator: BigInt = m
        .factors()
        .iter()
        .map(|&(p, a)| pow(p, 3 * a - 2) * (p - 1) * (BigInt::from(p) - 5))
        .product();
    let denominator = BigInt::from(3) << (3 * m.k() + 1);
    exact_div(numerator, denominator, &format!("K3 formula at n = {}", m.n()))
}

/// `K_4(G_n) = prod p^(4a-3) (p-1) ((p-9)^2 - 4 a_p^2) / (3 * 8^(2k+1))`,
/// with `p = a_p^2 + b_p^2`, `a_p` even. Zero for even `n`.
pub fn k4_formula(m: &AdmissibleModulus) -> Result<BigCount> {
    if !m.is_odd() {
        return Ok(BigUint::zero());
    }
    let mut numerator = BigInt::from(1);
    for &(p, a) in m.factors() {
        let a2 = BigInt::from(two_squares(p)?.a_squared());
        let bracket = (BigInt::from(p) - 9u32).pow(2u32) - a2 * 4;
        numerator *= pow(p, 4 * a - 3) * (p - 1) * bracket;
    }
    let denominator = BigInt::from(3) * pow(8, 2 * m.k() as u32 + 1);
    exact_div(numerator, denominator, &format!("K4 formula at n = {}", m.n()))
}

/// `K_4(G_{p^a})` from the Jacobi sum `J = J(psi, chi)`:
/// `p^(2a-1)(p-1)[p^(2a-2)((p-9)^2 - 2p) + J^2 + conj(J)^2] / 1536`.
pub fn k4_jacobi_formula(p: u64, alpha: u32, jacobi: GaussianInt) -> Result<BigCount> {
    if alpha == 0 || p % 4 != 1 {
        return Err(Error::invalid(format!("need p = 1 mod 4 and alpha >= 1, got ({p}, {alpha})")));
    }
    let bracket = pow(p, 2 * alpha - 2) * ((BigInt::from(p) - 9u32).pow(2u32) - BigInt::from(2 * p)) + jacobi.square_plus_conjugate_square();
    let numerator = pow(p, 2 * alpha - 1) * (p - 1) * bracket;
    exact_div(numerator, BigInt::from(1536), &format!("Jacobi K4 formula at {p}^{alpha}"))
}

/// True iff some prime factor of `n` is 5, 13 or 17, which is exactly when
/// `G_n` has no 4-cliques.
pub fn k4_zero_predicate(m: &AdmissibleModulus) -> bool {
    m.factors().iter().any(|&(p, _)| matches!(p, 5 | 13 | 17))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CliqueNumberClass {
    Exactly2,
    Exactly3,
    /// Nothing sharper is known in this case.
    AtLeast4,
}

/// Requires odd `n`; for even `n` the clique number is 2 and callers should
/// not ask.
pub fn clique_number_class(m: &AdmissibleModulus) -> CliqueNumberClass {
    let has = |q: u64| m.factors().iter().any(|&(p, _)| p == q);
    if has(5) {
        CliqueNumberClass::Exactly2
    } else if has(13) || has(17) {
        CliqueNumberClass::Exactly3
    } else {
        CliqueNumberClass::AtLeast4
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    K3,
    K4,
    K4Jacobi,
    CliqueNumberClass,
}

/// Per-prime data a formula consumed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeInputs {
    pub p: u64,
    pub alpha: u32,
    pub a_squared: u64,
    pub b_squared: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi: Option<GaussianInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub n: u64,
    pub quantity: Quantity,
    #[serde(skip_serializing_if = "Option::is_none", with = "crate::decimal::opt")]
    pub value: Option<BigCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<CliqueNumberClass>,
    pub inputs_used: Vec<PrimeInputs>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

const EVEN_NOTE: &str = "n is even: G_n is bipartite and has no cliques of order 3 or more";

/// Evaluates one quantity with its inputs recorded.
pub fn evaluate(m: &AdmissibleModulus, quantity: Quantity) -> Result<FormulaResult> {
    let mut inputs = Vec::new();
    for &(p, alpha) in m.factors() {
        let t = two_squares(p)?;
        let jacobi = if quantity == Quantity::K4Jacobi {
            Some(crate::charsums::jacobi_sum_for(p, alpha)?)
        } else {
            None
        };
        inputs.push(PrimeInputs { p, alpha, a_squared: t.a_squared(), b_squared: t.b_squared(), jacobi });
    }
    let note = (!m.is_odd()).then(|| EVEN_NOTE.to_string());
    let (value, class) = match quantity {
        Quantity::K3 => (Some(k3_formula(m)?), None),
        Quantity::K4 => (Some(k4_formula(m)?), None),
        Quantity::K4Jacobi => {
            if m.k() != 1 || !m.is_odd() {
                return Err(Error::invalid(format!("Jacobi K4 formula needs an odd prime power, got {}", m.n())));
            }
            let (p, alpha) = m.factors()[0];
            (Some(k4_jacobi_formula(p, alpha, inputs[0].jacobi.expect("computed above"))?), None)
        }
        Quantity::CliqueNumberClass => {
            if !m.is_odd() {
                return Err(Error::invalid("clique number class is stated for odd n only"));
            }
            (None, Some(clique_number_class(m)))
        }
    };
    Ok(FormulaResult { n: m.n(), quantity, value, class, inputs_used: inputs, note })
}
