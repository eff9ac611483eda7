//! The divisibility lattice on ℕ, with `0` as its top element, and the
//! denominators of rationals and rational vectors.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;

use crate::scalar::{lcm0, Int};
use crate::Error;

/// A natural number viewed in the divisibility order.
///
/// Every number divides `0`, which is therefore the top; `1` is the bottom.
/// The derived `Ord` is the usual numeric order and exists only so values can
/// live in ordered collections.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DivNat<I: Int>(I);

impl<I: Int> DivNat<I> {
    pub fn new(value: I) -> Result<Self, Error> {
        if value.is_negative() {
            return Err(Error::Malformed(format!("negative denominator {value}")));
        }
        Ok(DivNat(value))
    }

    pub fn from_u64(n: u64) -> Self {
        DivNat(I::of_u64(n))
    }

    pub fn top() -> Self {
        DivNat(I::zero())
    }

    pub fn bottom() -> Self {
        DivNat(I::one())
    }

    pub fn value(&self) -> &I {
        &self.0
    }

    pub fn into_value(self) -> I {
        self.0
    }

    pub fn is_top(&self) -> bool {
        self.0.is_zero()
    }

    /// `self` divides `other` in the extended sense.
    pub fn divides(&self, other: &Self) -> bool {
        divides(self, other)
    }

    pub fn join(&self, other: &Self) -> Self {
        DivNat(lcm0(&self.0, &other.0))
    }

    /// gcd, with `meet(a, 0) = a`.
    pub fn meet(&self, other: &Self) -> Self {
        DivNat(self.0.gcd(&other.0))
    }

    /// Positive divisors in increasing order. Panics on the top element,
    /// which has infinitely many.
    pub fn divisors(&self) -> Vec<I> {
        assert!(!self.is_top(), "0 has infinitely many divisors");
        let n = &self.0;
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut d = I::one();
        while d.clone() * d.clone() <= *n {
            if n.is_multiple_of(&d) {
                let q = n.clone() / d.clone();
                if q != d {
                    large.push(q);
                }
                small.push(d.clone());
            }
            d = d + I::one();
        }
        small.extend(large.into_iter().rev());
        small
    }
}

impl<I: Int> fmt::Display for DivNat<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `a | b`: everything divides `0`, and `0` divides only `0`.
pub fn divides<I: Int>(a: &DivNat<I>, b: &DivNat<I>) -> bool {
    if b.0.is_zero() {
        return true;
    }
    if a.0.is_zero() {
        return false;
    }
    b.0.is_multiple_of(&a.0)
}

/// Join of a finite family; `1` for the empty family, `0` as soon as a `0`
/// occurs.
pub fn lcm_div<'a, I: Int>(values: impl IntoIterator<Item = &'a DivNat<I>>) -> DivNat<I> {
    values.into_iter().fold(DivNat::bottom(), |acc, v| acc.join(v))
}

pub fn den_rat<I: Int>(r: &Ratio<I>) -> DivNat<I> {
    // Ratio keeps its denominator positive and the fraction reduced.
    DivNat(r.denom().clone())
}

pub fn den_vec<'a, I: Int>(p: impl IntoIterator<Item = &'a Ratio<I>>) -> DivNat<I> {
    p.into_iter().fold(DivNat::bottom(), |acc, r| acc.join(&den_rat(r)))
}

/// A downward-closed set of naturals: either finite or all of ℕ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DivSet<I: Int> {
    Finite(BTreeSet<I>),
    All,
}

impl<I: Int> DivSet<I> {
    pub fn contains(&self, n: &DivNat<I>) -> bool {
        match self {
            DivSet::All => true,
            DivSet::Finite(s) => s.contains(n.value()),
        }
    }
}

/// `DIV(J)`: every natural dividing some member of `J`.
pub fn div_set<'a, I: Int>(j: impl IntoIterator<Item = &'a DivNat<I>>) -> DivSet<I> {
    let mut out = BTreeSet::new();
    for d in j {
        if d.is_top() {
            return DivSet::All;
        }
        out.extend(d.divisors());
    }
    DivSet::Finite(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type D = DivNat<i64>;

    fn d(n: u64) -> D {
        DivNat::from_u64(n)
    }

    #[test]
    fn divides_examples() {
        assert!(divides(&d(3), &d(6)));
        assert!(divides(&d(5), &d(0)));
        assert!(!divides(&d(0), &d(4)));
        assert!(divides(&d(0), &d(0)));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_div(&[d(2), d(3)]), d(6));
        assert_eq!(lcm_div(&[d(2), d(0)]), d(0));
        assert_eq!(lcm_div::<i64>(&[]), d(1));
    }

    #[test]
    fn den_examples() {
        assert_eq!(den_rat(&Ratio::new(3i64, 4)), d(4));
        assert_eq!(den_rat(&Ratio::from_integer(2i64)), d(1));
        assert_eq!(den_rat(&Ratio::new(-5i64, 6)), d(6));
        assert_eq!(den_vec(&[Ratio::new(1i64, 2), Ratio::new(1, 3)]), d(6));
        assert_eq!(den_vec::<i64>(&[]), d(1));
        assert_eq!(den_vec(&[Ratio::new(1i64, 2), Ratio::new(1, 4)]), d(4));
    }

    #[test]
    fn div_set_examples() {
        let six = div_set(&[d(6)]);
        assert_eq!(six, DivSet::Finite([1, 2, 3, 6].into_iter().collect()));
        assert_eq!(div_set(&[d(0)]), DivSet::All);
        // Brute force: n <= 6 dividing 4 or 6.
        let brute: BTreeSet<i64> = (1..=6).filter(|n| 4 % n == 0 || 6 % n == 0).collect();
        assert_eq!(div_set(&[d(4), d(6)]), DivSet::Finite(brute));
    }

    #[test]
    fn negative_rejected() {
        assert!(DivNat::<i64>::new(-1).is_err());
    }

    #[test]
    fn lcm_matches_naive_up_to_60() {
        for a in 1..=60u64 {
            for b in 1..=60u64 {
                let naive = (1..=a * b).find(|m| m % a == 0 && m % b == 0).unwrap();
                assert_eq!(lcm_div(&[d(a), d(b)]), d(naive));
            }
        }
    }

    proptest! {
        #[test]
        fn divides_is_partial_order(a in 0u64..40, b in 0u64..40, c in 0u64..40) {
            let (a, b, c) = (d(a), d(b), d(c));
            prop_assert!(divides(&a, &a));
            if divides(&a, &b) && divides(&b, &a) {
                prop_assert_eq!(&a, &b);
            }
            if divides(&a, &b) && divides(&b, &c) {
                prop_assert!(divides(&a, &c));
            }
        }

        #[test]
        fn lcm_is_join(a in 0u64..40, b in 0u64..40, c in 0u64..40) {
            let (a, b, c) = (d(a), d(b), d(c));
            let j = a.join(&b);
            prop_assert!(divides(&a, &j) && divides(&b, &j));
            if divides(&a, &c) && divides(&b, &c) {
                prop_assert!(divides(&j, &c));
            }
            prop_assert_eq!(a.join(&b), b.join(&a));
            prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
            prop_assert_eq!(a.join(&a), a.clone());
            prop_assert_eq!(a.join(&d(1)), a.clone());
            prop_assert_eq!(a.join(&d(0)), d(0));
        }

        #[test]
        fn div_set_downward_closed(js in proptest::collection::vec(1u64..50, 0..4), m in 1u64..50) {
            let j: Vec<D> = js.iter().map(|&n| d(n)).collect();
            let s = div_set(&j);
            if s.contains(&d(m)) {
                for k in 1..=m {
                    if m % k == 0 {
                        prop_assert!(s.contains(&d(k)));
                    }
                }
            }
        }

        #[test]
        fn den_vec_concat(p in proptest::collection::vec((-20i64..20, 1i64..20), 0..4),
                          q in proptest::collection::vec((-20i64..20, 1i64..20), 0..4)) {
            let p: Vec<Ratio<i64>> = p.into_iter().map(|(a, b)| Ratio::new(a, b)).collect();
            let q: Vec<Ratio<i64>> = q.into_iter().map(|(a, b)| Ratio::new(a, b)).collect();
            let both: Vec<Ratio<i64>> = p.iter().chain(q.iter()).cloned().collect();
            prop_assert_eq!(den_vec(&both), lcm_div(&[den_vec(&p), den_vec(&q)]));
        }
    }
}
