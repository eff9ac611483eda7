//! The integer scalar every exact structure in this crate is generic over.
//!
//! Rationals are `num_rational::Ratio<I>` for an [`Int`] type `I`. The crate
//! root provides aliases for the arbitrary-precision instantiation
//! (`num_bigint::BigInt`) and the machine-word one (`i64`). Floating point
//! types are deliberately absent: denominators are only meaningful for exact
//! scalars.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

/// Signed exact integers usable as the scalar of rationals and denominators.
pub trait Int:
    Integer + Signed + Clone + Hash + Debug + Display + FromStr + ToPrimitive + FromPrimitive + Send + Sync + 'static
{
    fn of_u64(n: u64) -> Self {
        <Self as FromPrimitive>::from_u64(n).expect("u64 fits the scalar type")
    }

    fn of_i64(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("i64 fits the scalar type")
    }
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + ToPrimitive
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Parses `"p/q"` or `"p"` into a reduced rational with positive denominator.
pub fn parse_ratio<I: Int>(s: &str) -> Option<Ratio<I>> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = I::from_str(num).ok()?;
    let den = I::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Ratio::new(num, den))
}

pub fn ratio_int<I: Int>(n: I) -> Ratio<I> {
    Ratio::from_integer(n)
}

/// `⌈r⌉` as an integer.
pub fn ceil<I: Int>(r: &Ratio<I>) -> I {
    r.ceil().to_integer()
}

/// `⌊r⌋` as an integer.
pub fn floor<I: Int>(r: &Ratio<I>) -> I {
    r.floor().to_integer()
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd<I: Int>(a: &I, b: &I) -> (I, I, I) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (I::one(), I::zero());
    let (mut old_t, mut t) = (I::zero(), I::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// The simplest rational (smallest denominator, then smallest absolute
/// numerator) strictly between `a` and `b`, found by descending the
/// Stern–Brocot tree.
pub fn simplest_between<I: Int>(a: &Ratio<I>, b: &Ratio<I>) -> Ratio<I> {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    assert!(lo < hi, "empty open interval");
    // An integer strictly inside wins outright; pick the one closest to zero.
    let first = floor(lo) + I::one();
    let last = ceil(hi) - I::one();
    if first <= last {
        let pick = if first.is_positive() {
            first
        } else if last.is_negative() {
            last
        } else {
            I::zero()
        };
        return ratio_int(pick);
    }
    // Otherwise both ends share the integer part k; recurse on the fractional
    // parts through the continued-fraction form of the Stern–Brocot descent.
    let k = floor(lo);
    let shift = ratio_int(k.clone());
    let lo_f = lo - &shift;
    let hi_f = hi - &shift;
    // lo_f in [0, 1), hi_f in (0, 1] and at least one strictly inside.
    if lo_f.is_zero() {
        // (0, hi_f): the simplest is 1/n with n the least integer > 1/hi_f.
        let n = floor(&hi_f.recip()) + I::one();
        return shift + Ratio::new(I::one(), n);
    }
    // 1/x maps (lo_f, hi_f) onto (1/hi_f, 1/lo_f) reversing order.
    let inner = simplest_between(&hi_f.recip(), &lo_f.recip());
    shift + inner.recip()
}

/// Least common multiple where `0` is the divisibility top: `lcm(a, 0) = 0`.
pub fn lcm0<I: Int>(a: &I, b: &I) -> I {
    if a.is_zero() || b.is_zero() {
        I::zero()
    } else {
        a.lcm(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(s: &str) -> Ratio<i64> {
        parse_ratio(s).unwrap()
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(r("2/4"), Ratio::new(1, 2));
        assert_eq!(r("3/-6"), Ratio::new(-1, 2));
        assert_eq!(r(" 7 "), Ratio::from_integer(7));
        assert!(parse_ratio::<i64>("1/0").is_none());
        assert!(parse_ratio::<i64>("x").is_none());
        let big: Ratio<BigInt> = parse_ratio("123456789012345678901234567890/3").unwrap();
        assert_eq!(big.to_string(), "41152263004115226300411522630");
    }

    #[test]
    fn ext_gcd_bezout() {
        for a in -20i64..20 {
            for b in -20i64..20 {
                let (g, x, y) = ext_gcd(&a, &b);
                assert_eq!(g, a.gcd(&b));
                assert_eq!(a * x + b * y, g);
            }
        }
    }

    #[test]
    fn simplest_between_brute_force() {
        // Compare with a scan by increasing denominator.
        let cands: Vec<Ratio<i64>> = (-6..=6).flat_map(|p| (1..=6).map(move |q| Ratio::new(p, q))).collect();
        for a in &cands {
            for b in &cands {
                if a >= b {
                    continue;
                }
                let got = simplest_between(a, b);
                let expect = (1i64..)
                    .find_map(|q| {
                        let mut ps: Vec<i64> = (-100..=100)
                            .filter(|p| {
                                let v = Ratio::new(*p, q);
                                *a < v && v < *b
                            })
                            .collect();
                        ps.sort_by_key(|p| p.abs());
                        ps.first().map(|p| Ratio::new(*p, q))
                    })
                    .unwrap();
                assert_eq!(got.denom(), expect.denom(), "{a} {b}");
                assert!(*a < got && got < *b);
                assert_eq!(got.numer().abs(), expect.numer().abs(), "{a} {b}");
            }
        }
    }

    #[test]
    fn floor_ceil_negative() {
        assert_eq!(floor(&r("-1/2")), -1);
        assert_eq!(ceil(&r("-1/2")), 0);
        assert_eq!(ceil(&r("4/2")), 2);
    }
}
