//! Exact rational scalars.
//!
//! Every scalar in the crate is a [`Rat`]: an arbitrary-precision fraction
//! kept in lowest terms with a positive denominator. Arithmetic never rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number. `BigRational` already maintains the invariants we
/// rely on: the stored fraction is fully reduced and the denominator is
/// positive.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics on `q == 0`; use [`parse_rat`] for fallible input.
pub fn ratio(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Parse `"p"` or `"p/q"` with optional sign, exact. Rejects `q = 0`,
/// whitespace and anything else that is not a plain integer fraction.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::BadRational(s.to_string());
    let (ns, ds) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = ns.parse().map_err(|_| bad())?;
    let den: BigInt = ds.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Render as `"p"` or `"p/q"`, the exact inverse of [`parse_rat`].
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True if every entry is zero.
pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_zero(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn vec_add(u: &[Rat], v: &[Rat]) -> Vec<Rat> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(u: &[Rat], v: &[Rat]) -> Vec<Rat> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_neg(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|a| -a).collect()
}

pub fn vec_scale(c: &Rat, v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|a| c * a).collect()
}

/// Standard basis vector `e_i` of `K^n`.
pub fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec_zero(n);
    v[i] = Rat::one();
    v
}

#[allow(unused)]
fn invariants_hold(r: &Rat) -> bool {
    r.denom().is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-7", "1/2", "-3/4", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
    }

    #[test]
    fn parse_reduces_and_normalizes_sign() {
        assert_eq!(parse_rat("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat("1/-2").unwrap(), ratio(-1, 2));
        assert_eq!(format_rat(&parse_rat("-2/-4").unwrap()), "1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["1/0", "", "one", "1.5", "1/2/3", " 1", "1 /2", "+ 1"] {
            assert!(parse_rat(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = ratio(1, 3);
        let b = ratio(1, 6);
        assert_eq!(&a + &b, ratio(1, 2));
        assert_eq!(&a - &a, zero());
        // no rounding at large magnitudes
        let big = parse_rat("1000000000000000000000001/3").unwrap();
        assert_eq!(
            &big * &rat(3),
            parse_rat("1000000000000000000000001").unwrap()
        );
    }
}
