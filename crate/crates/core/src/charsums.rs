//! Quadratic and quartic Dirichlet characters mod `p^a` and their Jacobi sum.
//!
//! Character values are kept as exponents of `i` so every sum is an exact
//! Gaussian integer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, primitive_root, two_squares};

/// `x + iy` with exact integer parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct GaussianInt {
    pub x: i64,
    pub y: i64,
}

impl GaussianInt {
    pub const ZERO: Self = Self { x: 0, y: 0 };
    pub const ONE: Self = Self { x: 1, y: 0 };
    pub const I: Self = Self { x: 0, y: 1 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn conj(self) -> Self {
        Self { x: self.x, y: -self.y }
    }

    /// `i^e`.
    pub fn i_pow(e: u8) -> Self {
        match e % 4 {
            0 => Self::ONE,
            1 => Self::I,
            2 => -Self::ONE,
            _ => -Self::I,
        }
    }

    /// `x^2 + y^2`.
    pub fn norm(self) -> i128 {
        let (x, y) = (self.x as i128, self.y as i128);
        x * x + y * y
    }

    /// `J^2 + conj(J)^2 = 2(x^2 - y^2)`.
    pub fn square_plus_conjugate_square(self) -> BigInt {
        let (x, y) = (BigInt::from(self.x), BigInt::from(self.y));
        (&x * &x - &y * &y) * 2
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.x * o.x - self.y * o.y, self.x * o.y + self.y * o.x)
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y < 0 {
            write!(f, "{} - {}i", self.x, -self.y)
        } else {
            write!(f, "{} + {}i", self.x, self.y)
        }
    }
}

const NON_UNIT: u8 = u8::MAX;

/// A Dirichlet character mod `p^a` of order 2 or 4, sending the chosen
/// generator `g` to `i^(4 / order)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    modulus: u64,
    generator: u64,
    order: u8,
    /// Value at `x` is `i^quarter_turns[x]`; `NON_UNIT` means 0.
    quarter_turns: Vec<u8>,
}

impl CharacterTable {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    /// `Some(e)` with value `i^e`, or `None` at non-units.
    pub fn exponent_of_i(&self, x: u64) -> Option<u8> {
        match self.quarter_turns[(x % self.modulus) as usize] {
            NON_UNIT => None,
            e => Some(e),
        }
    }

    pub fn value(&self, x: u64) -> GaussianInt {
        self.exponent_of_i(x).map_or(GaussianInt::ZERO, GaussianInt::i_pow)
    }

    /// The complex-conjugate character.
    pub fn conjugate(&self) -> Self {
        let quarter_turns =
            self.quarter_turns.iter().map(|&e| if e == NON_UNIT { e } else { (4 - e) % 4 }).collect();
        Self { quarter_turns, ..self.clone() }
    }
}

/// Character of the given order with the smallest primitive root as generator.
pub fn build_character(p: u64, alpha: u32, order: u8) -> Result<CharacterTable> {
    let g = primitive_root(p, alpha)?;
    build_character_with_generator(p, alpha, order, g)
}

/// Character sending `generator` to `i` (order 4) or `-1` (order 2). The log
/// table is filled by one sweep over the powers of `generator`.
pub fn build_character_with_generator(p: u64, alpha: u32, order: u8, generator: u64) -> Result<CharacterTable> {
    if order != 2 && order != 4 {
        return Err(Error::invalid(format!("character order must be 2 or 4, got {order}")));
    }
    if p % 4 != 1 || !is_prime(p) || alpha == 0 {
        return Err(Error::invalid(format!("need a prime p = 1 mod 4 and alpha >= 1, got ({p}, {alpha})")));
    }
    let modulus = p.pow(alpha);
    let group_order = modulus / p * (p - 1);
    let step = 4 / order;
    let mut quarter_turns = vec![NON_UNIT; modulus as usize];
    let mut power = 1u64;
    for t in 0..group_order {
        let slot = &mut quarter_turns[power as usize];
        if *slot != NON_UNIT {
            return Err(Error::invalid(format!("{generator} is not a primitive root mod {modulus}")));
        }
        *slot = ((t % u64::from(order)) as u8) * step;
        power = power * generator % modulus;
    }
    if power != 1 {
        return Err(Error::invalid(format!("{generator} is not a primitive root mod {modulus}")));
    }
    Ok(CharacterTable { modulus, generator, order, quarter_turns })
}

/// `J(a, b) = sum over x of a(x) b(1 - x)`.
pub fn jacobi_sum(a: &CharacterTable, b: &CharacterTable) -> Result<GaussianInt> {
    if a.modulus != b.modulus {
        return Err(Error::invalid(format!("character moduli differ: {} vs {}", a.modulus, b.modulus)));
    }
    let m = a.modulus as usize;
    // Tally how many terms land on each power of i.
    let mut tally = [0i64; 4];
    for x in 0..m {
        let ea = a.quarter_turns[x];
        let eb = b.quarter_turns[(m + 1 - x) % m];
        if ea != NON_UNIT && eb != NON_UNIT {
            tally[usize::from((ea + eb) % 4)] += 1;
        }
    }
    Ok(GaussianInt::new(tally[0] - tally[2], tally[1] - tally[3]))
}

/// `J(psi, chi)` mod `p^alpha` with the default characters.
pub fn jacobi_sum_for(p: u64, alpha: u32) -> Result<GaussianInt> {
    let psi = build_character(p, alpha, 4)?;
    let chi = build_character(p, alpha, 2)?;
    jacobi_sum(&psi, &chi)
}

/// Both sides of `2(x^2 - y^2) = 2 p^(2a-2) (p - 2 a_p^2)` for `J = x + iy`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XyRelation {
    pub p: u64,
    pub alpha: u32,
    pub a_squared: u64,
    pub x: i64,
    pub y: i64,
    /// `x^2 - y^2`.
    pub x2_minus_y2: i128,
    /// `p^(2a-2) (p - 2 a_p^2)`.
    pub scaled_p_minus_2a2: i128,
    pub lhs: i128,
    pub rhs: i128,
    /// `x^2 + y^2`.
    pub norm: i128,
    pub ok: bool,
}

pub fn verify_xyreln(p: u64, alpha: u32) -> Result<XyRelation> {
    let a_squared = two_squares(p)?.a_squared();
    let j = jacobi_sum_for(p, alpha)?;
    let (x, y) = (j.x as i128, j.y as i128);
    let x2_minus_y2 = x * x - y * y;
    let scaled = (p as i128).pow(2 * alpha - 2) * (p as i128 - 2 * a_squared as i128);
    let (lhs, rhs) = (2 * x2_minus_y2, 2 * scaled);
    Ok(XyRelation {
        p,
        alpha,
        a_squared,
        x: j.x,
        y: j.y,
        x2_minus_y2,
        scaled_p_minus_2a2: scaled,
        lhs,
        rhs,
        norm: j.norm(),
        ok: lhs == rhs,
    })
}
