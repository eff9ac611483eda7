//! Admissible denominators.
//!
//! `ADC(Λ)` is the set of naturals `n` such that some `λ ∈ Λ` has `den λ | n`;
//! it is the set of denominators of points that a denominator-decreasing map
//! can send into `Λ`. Regions here are finite unions of rational points and
//! rational closed intervals, for which `ADC` is a finite union of sets of
//! multiples `M(d)` and cofinite sets, and membership is decidable.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::aspace::{FinASpace, Subset};
use crate::divlat::{den_rat, DivNat};
use crate::scalar::{ceil, floor, Int};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Component<I: Int = BigInt> {
    Point(Ratio<I>),
    /// Closed interval with `lo < hi`.
    Interval(Ratio<I>, Ratio<I>),
}

impl<I: Int> Component<I> {
    /// `[lo, hi]`, collapsing to a point when `lo = hi`.
    pub fn closed(lo: Ratio<I>, hi: Ratio<I>) -> Result<Self> {
        match lo.cmp(&hi) {
            std::cmp::Ordering::Less => Ok(Component::Interval(lo, hi)),
            std::cmp::Ordering::Equal => Ok(Component::Point(lo)),
            std::cmp::Ordering::Greater => Err(Error::Malformed(format!("interval [{lo}, {hi}] has lo > hi"))),
        }
    }

    pub fn contains(&self, r: &Ratio<I>) -> bool {
        match self {
            Component::Point(p) => p == r,
            Component::Interval(lo, hi) => lo <= r && r <= hi,
        }
    }

    fn bounds(&self) -> (&Ratio<I>, &Ratio<I>) {
        match self {
            Component::Point(p) => (p, p),
            Component::Interval(lo, hi) => (lo, hi),
        }
    }
}

/// A finite union of rational points and rational closed intervals.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatRegion<I: Int = BigInt> {
    pub components: Vec<Component<I>>,
}

impl<I: Int> RatRegion<I> {
    pub fn empty() -> Self {
        RatRegion { components: Vec::new() }
    }

    pub fn point(p: Ratio<I>) -> Self {
        RatRegion {
            components: vec![Component::Point(p)],
        }
    }

    /// The closed interval `[lo, hi]` (a point when equal).
    pub fn closed(lo: Ratio<I>, hi: Ratio<I>) -> Result<Self> {
        Ok(RatRegion {
            components: vec![Component::closed(lo, hi)?],
        })
    }

    pub fn union(mut self, other: RatRegion<I>) -> Self {
        self.components.extend(other.components);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, r: &Ratio<I>) -> bool {
        self.components.iter().any(|c| c.contains(r))
    }
}

/// A subset of ℕ closed under multiples, kept in canonical form.
///
/// The denoted set is `{0 if nonempty} ∪ ⋃ M(d) ∪ (ℕ \ F)` where `M(d)` are
/// the positive multiples of the generators `d` and the cofinite part is
/// present only when `excluded` is `Some(F)`. Canonical form: generators are
/// pairwise non-dividing and `≥ 2`, a cofinite part absorbs every generator,
/// and `F` never contains a multiple of a generator. Canonical forms of equal
/// sets coincide, so the derived `PartialEq` is set equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdcSet<I: Int = BigInt> {
    upsets: BTreeSet<I>,
    excluded: Option<BTreeSet<I>>,
    nonempty: bool,
}

impl<I: Int> AdcSet<I> {
    pub fn empty() -> Self {
        AdcSet {
            upsets: BTreeSet::new(),
            excluded: None,
            nonempty: false,
        }
    }

    /// All of ℕ.
    pub fn everything() -> Self {
        Self::cofinite(BTreeSet::new())
    }

    /// `M(d)`: the multiples of `d`, including `0`. `M(0) = {0}`.
    pub fn multiples(d: &DivNat<I>) -> Self {
        let mut s = AdcSet {
            upsets: BTreeSet::new(),
            excluded: None,
            nonempty: true,
        };
        if !d.is_top() {
            s.upsets.insert(d.value().clone());
        }
        s.normalize();
        s
    }

    /// `ℕ \ F` for a finite set `F` of positive naturals.
    pub fn cofinite(excluded: BTreeSet<I>) -> Self {
        let mut s = AdcSet {
            upsets: BTreeSet::new(),
            excluded: Some(excluded),
            nonempty: true,
        };
        s.normalize();
        s
    }

    pub fn union(&self, other: &AdcSet<I>) -> AdcSet<I> {
        let excluded = match (&self.excluded, &other.excluded) {
            (Some(a), Some(b)) => Some(a.intersection(b).cloned().collect()),
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        };
        let mut s = AdcSet {
            upsets: self.upsets.union(&other.upsets).cloned().collect(),
            excluded,
            nonempty: self.nonempty || other.nonempty,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.upsets.contains(&I::one()) {
            self.upsets.clear();
            self.excluded = Some(BTreeSet::new());
        }
        if let Some(f) = &mut self.excluded {
            let gens = &self.upsets;
            f.retain(|n| !gens.iter().any(|d| n.is_multiple_of(d)));
            self.upsets.clear();
            return;
        }
        let gens: Vec<I> = self.upsets.iter().cloned().collect();
        self.upsets = gens
            .iter()
            .filter(|d| !gens.iter().any(|e| e != *d && d.is_multiple_of(e)))
            .cloned()
            .collect();
    }

    pub fn contains(&self, n: &DivNat<I>) -> bool {
        if n.is_top() {
            return self.nonempty;
        }
        let n = n.value();
        if let Some(f) = &self.excluded {
            return !f.contains(n);
        }
        self.upsets.iter().any(|d| n.is_multiple_of(d))
    }

    pub fn contains_zero(&self) -> bool {
        self.nonempty
    }

    pub fn is_empty(&self) -> bool {
        !self.nonempty
    }

    pub fn generators(&self) -> &BTreeSet<I> {
        &self.upsets
    }

    pub fn exclusions(&self) -> Option<&BTreeSet<I>> {
        self.excluded.as_ref()
    }

    /// Membership on `0..=bound` decides equality between this set and any
    /// other set whose own bound is at most `bound`: both sets are periodic
    /// (modulo the lcm of their generators) beyond their largest exclusion.
    pub fn comparison_bound(&self) -> I {
        let max_ex = self
            .excluded
            .as_ref()
            .and_then(|f| f.iter().next_back().cloned())
            .unwrap_or_else(I::zero);
        let lcm = self.upsets.iter().fold(I::one(), |acc, d| acc.lcm(d));
        max_ex + lcm
    }

    /// Equality by sampled membership on `0..=max(bounds)`.
    pub fn agrees_with(&self, other: &AdcSet<I>) -> bool {
        let bound = self.comparison_bound().max(other.comparison_bound());
        self.agrees_on(&bound, |d| other.contains(d))
    }

    /// Compares membership with an arbitrary predicate on `0..=bound`, e.g. the
    /// intersection of several sets together with the largest of their bounds.
    pub fn agrees_on(&self, bound: &I, mut member: impl FnMut(&DivNat<I>) -> bool) -> bool {
        let mut n = I::zero();
        while n <= *bound {
            let d = DivNat::new(n.clone()).expect("non-negative");
            if self.contains(&d) != member(&d) {
                return false;
            }
            n = n + I::one();
        }
        true
    }
}

impl<I: Int> fmt::Display for AdcSet<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.nonempty {
            return write!(f, "∅");
        }
        if let Some(ex) = &self.excluded {
            if ex.is_empty() {
                return write!(f, "ℕ");
            }
            let items: Vec<String> = ex.iter().map(|n| n.to_string()).collect();
            return write!(f, "ℕ \\ {{{}}}", items.join(", "));
        }
        if self.upsets.is_empty() {
            return write!(f, "{{0}}");
        }
        let items: Vec<String> = self.upsets.iter().map(|d| format!("M({d})")).collect();
        write!(f, "{}", items.join(" ∪ "))
    }
}

/// Whether some `p/n ∈ [lo, hi]` exists, i.e. `n ∈ ADC([lo, hi])`, for
/// `n ≥ 1`; `0` is admitted whenever the interval is nonempty.
pub fn interval_admits<I: Int>(lo: &Ratio<I>, hi: &Ratio<I>, n: &DivNat<I>) -> bool {
    if lo > hi {
        return false;
    }
    if n.is_top() {
        return true;
    }
    let n = Ratio::from_integer(n.value().clone());
    ceil(&(lo * &n)) <= floor(&(hi * &n))
}

fn adc_component<I: Int>(c: &Component<I>) -> AdcSet<I> {
    match c {
        Component::Point(p) => AdcSet::multiples(&den_rat(p)),
        Component::Interval(lo, hi) => {
            // Every n >= ⌈1/(hi - lo)⌉ is admitted, so only smaller n can be
            // excluded.
            let k = ceil(&(hi - lo).recip());
            let mut excluded = BTreeSet::new();
            let mut n = I::one();
            while n < k {
                let d = DivNat::new(n.clone()).expect("positive");
                if !interval_admits(lo, hi, &d) {
                    excluded.insert(n.clone());
                }
                n = n + I::one();
            }
            AdcSet::cofinite(excluded)
        }
    }
}

/// `ADC` of a region: the union of the sets of its components.
pub fn adc<I: Int>(region: &RatRegion<I>) -> AdcSet<I> {
    region
        .components
        .iter()
        .fold(AdcSet::empty(), |acc, c| acc.union(&adc_component(c)))
}

pub fn adc_contains<I: Int>(s: &AdcSet<I>, n: &DivNat<I>) -> bool {
    s.contains(n)
}

/// Whether a finite family of intervals is lower directed: every pairwise
/// intersection contains a member of the family.
pub fn is_lower_directed<I: Int>(family: &[Component<I>]) -> bool {
    family.iter().all(|a| {
        family.iter().all(|b| {
            let (alo, ahi) = a.bounds();
            let (blo, bhi) = b.bounds();
            let lo = alo.max(blo);
            let hi = ahi.min(bhi);
            family.iter().any(|c| {
                let (clo, chi) = c.bounds();
                lo <= clo && chi <= hi
            })
        })
    })
}

/// Closes a family of pairwise-meeting intervals under pairwise intersection,
/// which yields a lower-directed family with the same intersection.
pub fn directed_closure<I: Int>(family: &[Component<I>]) -> Result<Vec<Component<I>>> {
    let mut out: Vec<Component<I>> = family.to_vec();
    let mut i = 0;
    while i < out.len() {
        for j in 0..i {
            let (alo, ahi) = out[i].bounds();
            let (blo, bhi) = out[j].bounds();
            let lo = alo.max(blo).clone();
            let hi = ahi.min(bhi).clone();
            if lo > hi {
                return Err(Error::pre(
                    "not-lower-directed",
                    format!("members {} and {} are disjoint", show(&out[i]), show(&out[j])),
                ));
            }
            let meet = Component::closed(lo, hi)?;
            if !out.contains(&meet) {
                out.push(meet);
            }
        }
        i += 1;
    }
    Ok(out)
}

fn show<I: Int>(c: &Component<I>) -> String {
    let (lo, hi) = c.bounds();
    format!("[{lo}, {hi}]")
}

/// `ADC` of the intersection of a family of closed intervals.
///
/// A family whose members pairwise meet is first closed under pairwise
/// intersection; the result is lower directed, so `ADC` of the intersection
/// equals the intersection of the `ADC`s over the closed family. Families
/// with two disjoint members cannot be made directed and are rejected.
pub fn adc_intersect_intervals<I: Int>(family: &[Component<I>]) -> Result<AdcSet<I>> {
    if family.is_empty() {
        return Err(Error::pre("empty-family", "the family of intervals is empty"));
    }
    directed_closure(family)?;
    let lo = family.iter().map(|c| c.bounds().0).max().expect("nonempty").clone();
    let hi = family.iter().map(|c| c.bounds().1).min().expect("nonempty").clone();
    Ok(adc(&RatRegion::closed(lo, hi)?))
}

/// `AC(Λ)_X = ζ⁻¹[ADC(Λ)]`.
pub fn ac<I: Int>(x: &FinASpace<I>, region: &RatRegion<I>) -> Subset {
    let s = adc(region);
    x.points()
        .iter()
        .filter(|(_, z)| s.contains(z))
        .map(|(l, _)| l.clone())
        .collect()
}
