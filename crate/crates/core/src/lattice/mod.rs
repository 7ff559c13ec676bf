//! The isogeny count nu(d1, ..., dn), computed three ways:
//!
//! - a sum over subgroups K of the number of symmetric homomorphisms K -> K^
//! - a direct count of maximal isotropic subgroups of (Z/d1 x ... x Z/dn)^2
//! - the closed divisor sum and the prime-power recursion (two factors only)

mod group;
mod subgroup;

pub use group::{smith_diagonal, FiniteAbelianGroup};
pub use subgroup::{enumerate_subgroups_bounded, Subgroup};

use crate::arith::{divisors, gcd_all, is_prime, sigma};
use num::{BigInt, Integer};
use std::collections::HashMap;
use thiserror::Error;

pub const DEFAULT_ENUMERATION_BOUND: u64 = 4096;
pub const DEFAULT_ISOTROPIC_BOUND: u64 = 65536;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("{what}: size {size} exceeds the bound {bound}")]
    BoundExceeded { what: &'static str, size: u64, bound: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub fn enumerate_subgroups(g: &FiniteAbelianGroup) -> Result<Vec<Subgroup>, LatticeError> {
    enumerate_subgroups_bounded(g, DEFAULT_ENUMERATION_BOUND)
}

/// Number of homomorphisms f: K -> K^ with f(x)(y) = f(y)(x), by brute force over the
/// images of the generators. K^ is identified with K so that a in K is the character
/// x -> sum_j a_j x_j / k_j.
pub fn hom_sym_count(k: &FiniteAbelianGroup) -> Result<u64, LatticeError> {
    if k.order() > DEFAULT_ENUMERATION_BOUND {
        return Err(LatticeError::BoundExceeded {
            what: "symmetric homomorphisms",
            size: k.order(),
            bound: DEFAULT_ENUMERATION_BOUND,
        });
    }
    let f: Vec<i64> = k.invariant_factors().iter().map(|&x| x as i64).collect();
    let n = k.exponent() as i64;
    let dual = subgroup::elements(k.invariant_factors());
    // value of character a on generator e_j, in units of 1/n
    let pair = |a: &[i64], j: usize| (a[j] * (n / f[j])).rem_euclid(n);
    fn extend(
        i: usize,
        chosen: &mut Vec<usize>,
        f: &[i64],
        dual: &[Vec<i64>],
        pair: &dyn Fn(&[i64], usize) -> i64,
    ) -> u64 {
        if i == f.len() {
            return 1;
        }
        let mut total = 0;
        for (idx, a) in dual.iter().enumerate() {
            // relation: k_i * a = 0 in K^
            if a.iter().zip(f).any(|(x, m)| (f[i] * x) % m != 0) {
                continue;
            }
            if chosen.iter().enumerate().any(|(j, &b)| pair(a, j) != pair(&dual[b], i)) {
                continue;
            }
            chosen.push(idx);
            total += extend(i + 1, chosen, f, dual, pair);
            chosen.pop();
        }
        total
    }
    Ok(extend(0, &mut Vec::new(), &f, &dual, &pair))
}

/// nu as the sum over subgroups K of #Hom^sym(K, K^).
pub fn nu_subgroup_formula(d: &[u64]) -> Result<u64, LatticeError> {
    check_type(d)?;
    let g = FiniteAbelianGroup::new(d);
    let mut cache: HashMap<FiniteAbelianGroup, u64> = HashMap::new();
    let mut total = 0;
    for s in enumerate_subgroups(&g)? {
        let t = s.isomorphism_type();
        let h = match cache.get(&t) {
            Some(&h) => h,
            None => {
                let h = hom_sym_count(&t)?;
                cache.insert(t, h);
                h
            }
        };
        total += h;
    }
    Ok(total)
}

/// nu as the number of subgroups of order d1...dn of (Z/d1 x ... x Z/dn)^2 on which the
/// commutator pairing <e_k, f_l> = delta_kl / d_k vanishes.
pub fn nu_isotropic(d: &[u64]) -> Result<u64, LatticeError> {
    check_type(d)?;
    let d: Vec<u64> = d.iter().copied().filter(|&x| x > 1).collect();
    let order: u64 = d.iter().product();
    if order * order > DEFAULT_ISOTROPIC_BOUND {
        return Err(LatticeError::BoundExceeded {
            what: "isotropic count",
            size: order * order,
            bound: DEFAULT_ISOTROPIC_BOUND,
        });
    }
    let n = d.len();
    let l = d.iter().fold(1u64, |a, b| a.lcm(b)) as i64;
    let scale: Vec<i64> = d.iter().map(|&x| l / x as i64).collect();
    let pairing = |x: &[i64], y: &[i64]| -> i64 {
        (0..n).map(|i| (x[i] * y[n + i] - x[n + i] * y[i]) * scale[i]).sum::<i64>().rem_euclid(l)
    };
    let moduli: Vec<u64> = d.iter().chain(d.iter()).copied().collect();
    let isotropic = subgroup::closure(&moduli, |s, g| s.generators().iter().all(|h| pairing(h, g) == 0));
    Ok(isotropic.iter().filter(|s| s.order() == order).count() as u64)
}

/// nu(1, d1 d2) sums folded over the gcd: sum_{k | gcd} sum_{l | d1 d2 / k^2} k^3 l.
pub fn nu_closed(d1: u64, d2: u64) -> Result<BigInt, LatticeError> {
    if d1 == 0 || d2 == 0 {
        return Err(LatticeError::Precondition("nu_closed needs d1, d2 > 0".into()));
    }
    Ok(divisors(d1.gcd(&d2))
        .into_iter()
        .map(|k| BigInt::from(k).pow(3) * sigma(1, d1 * d2 / (k * k)))
        .sum())
}

/// nu(p^m, p^n) = sigma(p^(m+n)) + p^3 nu(p^(m-1), p^(n-1)), with nu(1, p^n) = sigma(p^n).
pub fn nu_recursion(p: u64, m: u32, n: u32) -> Result<BigInt, LatticeError> {
    if !is_prime(p) {
        return Err(LatticeError::Precondition(format!("{p} is not prime")));
    }
    if m > n {
        return Err(LatticeError::Precondition(format!("need m <= n, got m = {m}, n = {n}")));
    }
    if m == 0 {
        return Ok(sigma(1, p.pow(n)));
    }
    Ok(sigma(1, p.pow(m + n)) + BigInt::from(p).pow(3) * nu_recursion(p, m - 1, n - 1)?)
}

fn check_type(d: &[u64]) -> Result<(), LatticeError> {
    if d.is_empty() || d.contains(&0) {
        return Err(LatticeError::Precondition("a type needs positive entries".into()));
    }
    Ok(())
}

/// Whether d1 | d2 | ... holds.
pub fn is_divisor_chain(d: &[u64]) -> bool {
    d.windows(2).all(|w| w[1] % w[0] == 0) && gcd_all(d) > 0
}
