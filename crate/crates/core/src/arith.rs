//! Small integer helpers shared by every module.

use num::{BigInt, BigRational, Integer, One, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Positive divisors of `n` in increasing order. Empty for `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Divisor power sum sigma_k(n).
pub fn sigma(k: u32, n: u64) -> BigInt {
    divisors(n).into_iter().map(|m| BigInt::from(m).pow(k)).sum()
}

/// gcd over a list, with 0 as the neutral element.
pub fn gcd_all(xs: &[u64]) -> u64 {
    xs.iter().fold(0u64, |a, &b| a.gcd(&b))
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Renders a rational as "num/den", always with an explicit denominator.
pub fn rat_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rat(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_basics() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert!(divisors(0).is_empty());
        assert_eq!(sigma(1, 6), BigInt::from(12));
        assert_eq!(sigma(1, 8), BigInt::from(15));
        assert_eq!(gcd_all(&[0, 4, 6]), 2);
        assert_eq!(gcd_all(&[0, 0]), 0);
    }

    #[test]
    fn rational_strings() {
        let r = frac(-3, 6);
        assert_eq!(rat_to_string(&r), "-1/2");
        assert_eq!(parse_rat("-1/2"), Some(r));
        assert_eq!(parse_rat("7"), Some(rat(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(binomial(6, 2), BigInt::from(15));
    }
}
