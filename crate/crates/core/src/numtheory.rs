//! Integer substrate: factoring, admissibility, CRT, primitive roots, the
//! two-squares decomposition and the sets of unit squares `R_n`.

use num_integer::{Integer, Roots};
use serde::Serialize;

use crate::bitset::ResidueBitset;
use crate::error::{Error, Result};

/// `base^exp mod modulus` with 128-bit intermediates.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    if n < 2 {
        return Err(Error::invalid(format!("cannot factor {n}: need n >= 2")));
    }
    let mut rest = n;
    let mut out = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut p = 3;
    while p * p <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f == [(n, 1)]).unwrap_or(false)
}

/// Euler's totient from a factorization.
pub fn phi_of(factors: &[(u64, u32)]) -> u64 {
    factors.iter().map(|&(p, e)| p.pow(e - 1) * (p - 1)).product()
}

/// A validated modulus `n = 2^s p_1^a_1 ... p_k^a_k`, `s <= 1`, `p_i = 1 (mod 4)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleModulus {
    n: u64,
    s: u32,
    factors: Vec<(u64, u32)>,
    phi: u64,
}

impl AdmissibleModulus {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Exponent of 2 in `n` (0 or 1).
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn is_odd(&self) -> bool {
        self.s == 0
    }

    /// Odd prime factors with exponents, primes ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct odd primes.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    /// The prime powers `p_i^a_i`.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, a)| p.pow(a))
    }

    /// `|R_n| = phi(n) / 2^k`.
    pub fn square_count(&self) -> u64 {
        self.phi >> self.k()
    }

    /// Human-readable factorization such as `13^2 * 17`.
    pub fn factor_string(&self) -> String {
        let mut parts = Vec::new();
        if self.s == 1 {
            parts.push("2".to_string());
        }
        for &(p, a) in &self.factors {
            parts.push(if a == 1 { p.to_string() } else { format!("{p}^{a}") });
        }
        parts.join(" * ")
    }
}

/// Validates `n` as a Paley-type modulus.
///
/// `n = 2` is accepted with `k = 0` so the (edge-only) graph can be built;
/// `n = 1` is rejected.
pub fn check_admissible(n: u64) -> Result<AdmissibleModulus> {
    let not = |reason: String| Error::NotAdmissible { n, reason };
    if n < 2 {
        return Err(not("n must be at least 2".into()));
    }
    if n.is_multiple_of(4) {
        return Err(not("4 divides n".into()));
    }
    let all = factorize(n)?;
    let s = u32::from(n.is_multiple_of(2));
    let factors: Vec<_> = all.into_iter().filter(|&(p, _)| p != 2).collect();
    if let Some(&(p, _)) = factors.iter().find(|&&(p, _)| p % 4 != 1) {
        return Err(not(format!("prime factor {p} is {} mod 4", p % 4)));
    }
    let phi = phi_of(&factors);
    Ok(AdmissibleModulus { n, s, factors, phi })
}

/// Solves `z = r_i (mod m_i)` for pairwise coprime `m_i`, returning `0 <= z < prod m_i`.
pub fn crt_solve(congruences: &[(u64, u64)]) -> Result<u64> {
    if congruences.is_empty() {
        return Err(Error::invalid("empty congruence system"));
    }
    let mut z: i128 = 0;
    let mut m: i128 = 1;
    for &(r, mi) in congruences {
        if mi == 0 {
            return Err(Error::invalid("modulus 0"));
        }
        let mi = mi as i128;
        let eg = m.extended_gcd(&mi);
        if eg.gcd != 1 {
            return Err(Error::invalid(format!("moduli not coprime: gcd({m}, {mi}) = {}", eg.gcd)));
        }
        // z + m * t = r (mod mi)  =>  t = (r - z) * m^-1 (mod mi)
        let t = ((r as i128 - z).rem_euclid(mi) * eg.x.rem_euclid(mi)).rem_euclid(mi);
        z += m * t;
        m = m
            .checked_mul(mi)
            .filter(|&p| p <= u64::MAX as i128)
            .ok_or_else(|| Error::invalid("product of moduli overflows u64"))?;
        z = z.rem_euclid(m);
    }
    Ok(z as u64)
}

/// `p = a^2 + b^2` with `a` even, `b` odd, both nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoSquares {
    pub p: u64,
    pub a: u64,
    pub b: u64,
}

impl TwoSquares {
    pub fn a_squared(&self) -> u64 {
        self.a * self.a
    }

    pub fn b_squared(&self) -> u64 {
        self.b * self.b
    }
}

/// Exhaustive search over odd `b <= sqrt(p)`.
pub fn two_squares(p: u64) -> Result<TwoSquares> {
    if p % 4 != 1 {
        return Err(Error::invalid(format!("{p} is not 1 mod 4")));
    }
    let mut b = 1;
    while b * b <= p {
        let rest = p - b * b;
        let a = rest.sqrt();
        if a * a == rest && a.is_multiple_of(2) {
            return Ok(TwoSquares { p, a, b });
        }
        b += 2;
    }
    Err(Error::invalid(format!("{p} is not a sum of two squares with one even")))
}

/// Smallest generator of `(Z / p^alpha)^*` for an odd prime `p`.
pub fn primitive_root(p: u64, alpha: u32) -> Result<u64> {
    if p.is_multiple_of(2) || !is_prime(p) || alpha == 0 {
        return Err(Error::invalid(format!("primitive_root needs an odd prime and alpha >= 1, got ({p}, {alpha})")));
    }
    let modulus = p.pow(alpha);
    let order = p.pow(alpha - 1) * (p - 1);
    let qs: Vec<u64> = factorize(order)?.into_iter().map(|(q, _)| q).collect();
    (2..modulus)
        .find(|&g| g % p != 0 && qs.iter().all(|&q| mod_pow(g, order / q, modulus) != 1))
        .ok_or_else(|| Error::Consistency(format!("no primitive root mod {modulus}")))
}

/// Nonzero quadratic residues mod a prime `p = 1 (mod 4)`.
pub fn squares_mod_prime(p: u64) -> Result<ResidueBitset> {
    if p % 4 != 1 {
        return Err(Error::invalid(format!("{p} is not 1 mod 4")));
    }
    let n = p as usize;
    Ok(ResidueBitset::from_residues(n, (1..n).map(|a| a * a % n)))
}

/// `R_{p^alpha}`, built by lifting each residue of `R_p` along `r + t p`.
pub fn squares_mod_prime_power(p: u64, alpha: u32) -> Result<ResidueBitset> {
    if alpha == 0 {
        return Err(Error::invalid("alpha must be at least 1"));
    }
    let base = squares_mod_prime(p)?;
    let p = p as usize;
    let modulus = p.pow(alpha);
    let lifts = modulus / p;
    Ok(ResidueBitset::from_residues(
        modulus,
        base.iter().flat_map(|r| (0..lifts).map(move |t| r + t * p)),
    ))
}

/// `R_n`: `x` is a unit square iff `x mod p_i^a_i` is in `R_{p_i^a_i}` for every
/// `i` (and `x` is odd when `2 | n`).
pub fn squares_mod_n(m: &AdmissibleModulus) -> ResidueBitset {
    let n = m.n() as usize;
    let local: Vec<(usize, ResidueBitset)> = m
        .factors()
        .iter()
        .map(|&(p, a)| {
            let q = p.pow(a) as usize;
            (q, squares_mod_prime_power(p, a).expect("admissible primes are 1 mod 4"))
        })
        .collect();
    let need_odd = m.s() == 1;
    ResidueBitset::from_residues(
        n,
        (1..n).filter(|&x| (!need_odd || x % 2 == 1) && local.iter().all(|(q, set)| set.contains(x % q))),
    )
}

/// `{a^2 mod n : gcd(a, n) = 1}` by squaring every unit. Test oracle.
pub fn squares_bruteforce_oracle(n: u64) -> Result<ResidueBitset> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be at least 2, got {n}")));
    }
    let n = n as u128;
    Ok(ResidueBitset::from_residues(
        n as usize,
        (1..n).filter(|a| a.gcd(&n) == 1).map(|a| (a * a % n) as usize),
    ))
}
