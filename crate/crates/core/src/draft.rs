//! Drafts of a-maps on finite a-spaces and the arithmetic Urysohn lemma.
//!
//! An `[α, β]`-draft records, for each level `r` of a finite set `D`, the
//! would-be preimages `down(r) = f⁻¹[α, r]` and `up(r) = f⁻¹[r, β]` of an a-map
//! `f : X → [α, β]`. Drafts can be refined one level at a time using the
//! arithmetic separation of the space, and every valid draft on a finite
//! space has a denominator-decreasing realisation.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::adc::interval_admits;
use crate::aspace::{separate, FinASpace, Label, SeparationPolicy, Subset};
use crate::divlat::{den_rat, divides, DivNat};
use crate::scalar::{ceil, floor, ratio_int, Int};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Level {
    pub down: Subset,
    pub up: Subset,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Draft<I: Int = BigInt> {
    pub space: FinASpace<I>,
    pub alpha: Ratio<I>,
    pub beta: Ratio<I>,
    pub levels: BTreeMap<Ratio<I>, Level>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    D1,
    D2,
    D3,
    D4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::D1 => "D1",
            Axiom::D2 => "D2",
            Axiom::D3 => "D3",
            Axiom::D4 => "D4",
        };
        f.write_str(s)
    }
}

/// The first failing axiom of a draft with its witnessing levels and point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub axiom: Axiom,
    pub r: String,
    pub s: Option<String>,
    pub point: Label,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at r={}", self.axiom, self.r)?;
        if let Some(s) = &self.s {
            write!(f, ", s={s}")?;
        }
        write!(f, ", point {}", self.point)
    }
}

impl<I: Int> Draft<I> {
    /// The two-level draft `D = {α, β}` with `down(α) = a`, `up(β) = b`.
    pub fn two_level(space: FinASpace<I>, alpha: Ratio<I>, beta: Ratio<I>, a: Subset, b: Subset) -> Self {
        let all = space.all();
        let mut levels = BTreeMap::new();
        levels.insert(
            alpha.clone(),
            Level {
                down: a,
                up: all.clone(),
            },
        );
        levels.insert(beta.clone(), Level { down: all, up: b });
        Draft {
            space,
            alpha,
            beta,
            levels,
        }
    }

    pub fn level(&self, r: &Ratio<I>) -> Option<&Level> {
        self.levels.get(r)
    }

    fn check_structure(&self) -> Result<()> {
        if self.alpha > self.beta {
            return Err(Error::Malformed(format!(
                "draft endpoints out of order: alpha={} > beta={}",
                self.alpha, self.beta
            )));
        }
        for e in [&self.alpha, &self.beta] {
            if !self.levels.contains_key(e) {
                return Err(Error::Malformed(format!("draft is missing endpoint level {e}")));
            }
        }
        for (r, lv) in &self.levels {
            if *r < self.alpha || *r > self.beta {
                return Err(Error::Malformed(format!(
                    "level {r} lies outside [{}, {}]",
                    self.alpha, self.beta
                )));
            }
            self.space.check_subset(&lv.down)?;
            self.space.check_subset(&lv.up)?;
        }
        Ok(())
    }

    /// Checks the axioms D1–D4, reporting the first violation found.
    /// Structural defects come back as [`Error::Malformed`], axiom failures as
    /// [`Error::Draft`].
    pub fn validate(&self) -> Result<()> {
        self.check_structure()?;
        let x = &self.space;
        let viol = |axiom, r: &Ratio<I>, s: Option<&Ratio<I>>, point: &Label| {
            Err(Error::Draft(Violation {
                axiom,
                r: r.to_string(),
                s: s.map(|s| s.to_string()),
                point: point.clone(),
            }))
        };
        let up_alpha = &self.levels[&self.alpha].up;
        if let Some(p) = x.labels().find(|p| !up_alpha.contains(*p)) {
            return viol(Axiom::D1, &self.alpha, None, p);
        }
        let down_beta = &self.levels[&self.beta].down;
        if let Some(p) = x.labels().find(|p| !down_beta.contains(*p)) {
            return viol(Axiom::D1, &self.beta, None, p);
        }
        for (r, lv) in &self.levels {
            if let Some(p) = x.labels().find(|p| !lv.down.contains(*p) && !lv.up.contains(*p)) {
                return viol(Axiom::D2, r, None, p);
            }
        }
        for (r, lr) in &self.levels {
            for (s, ls) in self.levels.range(r.clone()..).skip(1) {
                if let Some(p) = lr.down.intersection(&ls.up).next() {
                    return viol(Axiom::D3, r, Some(s), p);
                }
            }
        }
        for (r, lr) in &self.levels {
            for (s, ls) in self.levels.range(r.clone()..) {
                for p in lr.up.intersection(&ls.down) {
                    if !interval_admits(r, s, x.zeta(p)?) {
                        return viol(Axiom::D4, r, Some(s), p);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Whether `self` refines `coarser`: same frame, a superset of levels,
    /// and identical sets at every old level.
    pub fn refines(&self, coarser: &Draft<I>) -> bool {
        self.space == coarser.space
            && self.alpha == coarser.alpha
            && self.beta == coarser.beta
            && coarser.levels.iter().all(|(r, lv)| self.levels.get(r) == Some(lv))
    }
}

/// Inserts the level `lambda` between its neighbours `a < lambda < b`.
///
/// With `W = up(a) ∩ down(b)` the sets
/// `A = down(a) ∪ (W \ AC[λ, b])` and `B = up(b) ∪ (W \ AC[a, λ])` are
/// disjoint; separating them by `U ⊇ A`, `V ⊇ B` gives
/// `down(λ) = X \ V` and `up(λ) = X \ U`.
pub fn refine_at<I: Int>(d: &Draft<I>, lambda: &Ratio<I>, policy: SeparationPolicy) -> Result<Draft<I>> {
    d.validate()?;
    if d.levels.contains_key(lambda) {
        return Err(Error::pre("level-exists", format!("{lambda} is already a level")));
    }
    if *lambda <= d.alpha || *lambda >= d.beta {
        return Err(Error::pre(
            "level-out-of-range",
            format!("{lambda} is not inside ({}, {})", d.alpha, d.beta),
        ));
    }
    let (a, la) = d
        .levels
        .range(..lambda.clone())
        .next_back()
        .expect("alpha below lambda");
    let (b, lb) = d.levels.range(lambda.clone()..).next().expect("beta above lambda");
    let x = &d.space;
    let middle: Subset = la.up.intersection(&lb.down).cloned().collect();
    let mut set_a = la.down.clone();
    let mut set_b = lb.up.clone();
    for p in &middle {
        let z = x.zeta(p)?;
        if !interval_admits(lambda, b, z) {
            set_a.insert(p.clone());
        }
        if !interval_admits(a, lambda, z) {
            set_b.insert(p.clone());
        }
    }
    let (u, v) = separate(x, &set_a, &set_b, policy)?;
    let mut out = d.clone();
    out.levels.insert(
        lambda.clone(),
        Level {
            down: x.complement(&v),
            up: x.complement(&u),
        },
    );
    Ok(out)
}

/// Folds [`refine_at`] over `lambdas`, skipping values that are already
/// levels.
pub fn refine_sequence<I: Int>(d: &Draft<I>, lambdas: &[Ratio<I>], policy: SeparationPolicy) -> Result<Draft<I>> {
    d.validate()?;
    let mut cur = d.clone();
    for l in lambdas {
        if cur.levels.contains_key(l) {
            continue;
        }
        cur = refine_at(&cur, l, policy)?;
    }
    Ok(cur)
}

/// The first `count` rationals strictly inside `(alpha, beta)` in
/// breadth-first Stern–Brocot order: integers first, then mediants of
/// neighbouring fractions level by level, left to right.
pub fn stern_brocot_sequence<I: Int>(alpha: &Ratio<I>, beta: &Ratio<I>, count: usize) -> Vec<Ratio<I>> {
    let mut out = Vec::new();
    if alpha >= beta || count == 0 {
        return out;
    }
    let inside = |r: &Ratio<I>| alpha < r && r < beta;
    let mut k = floor(alpha);
    let top = ceil(beta);
    let mut queue = VecDeque::new();
    while k < top {
        let lo = (k.clone(), I::one());
        let hi = (k.clone() + I::one(), I::one());
        let r = ratio_int(k.clone());
        if inside(&r) {
            out.push(r);
            if out.len() == count {
                return out;
            }
        }
        queue.push_back((lo, hi));
        k = k + I::one();
    }
    while let Some(((a, b), (c, e))) = queue.pop_front() {
        let m = (a.clone() + c.clone(), b.clone() + e.clone());
        let mr = Ratio::new(m.0.clone(), m.1.clone());
        if inside(&mr) {
            out.push(mr.clone());
            if out.len() == count {
                break;
            }
        }
        let left = Ratio::new(a.clone(), b.clone());
        let right = Ratio::new(c.clone(), e.clone());
        if left < *beta && mr > *alpha {
            queue.push_back(((a, b), m.clone()));
        }
        if mr < *beta && right > *alpha {
            queue.push_back((m, (c, e)));
        }
    }
    out
}

/// A rational-valued function on a finite a-space with values in `[lo, hi]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunction<I: Int = BigInt> {
    pub space: FinASpace<I>,
    pub values: BTreeMap<Label, Ratio<I>>,
    pub lo: Ratio<I>,
    pub hi: Ratio<I>,
}

impl<I: Int> RatFunction<I> {
    pub fn value(&self, x: &str) -> Option<&Ratio<I>> {
        self.values.get(x)
    }

    /// Whether the function is an a-map into `[lo, hi]`: total, in range, and
    /// `den f(x) | ζ(x)` everywhere.
    pub fn is_amap(&self) -> bool {
        self.space.points().iter().all(|(x, z)| match self.values.get(x) {
            Some(v) => self.lo <= *v && *v <= self.hi && divides(&den_rat(v), z),
            None => false,
        })
    }

    /// `f[down r] ⊆ [α, r]` and `f[up r] ⊆ [r, β]` for every level.
    pub fn realises(&self, d: &Draft<I>) -> bool {
        let in_range = self.values.values().all(|v| d.alpha <= *v && *v <= d.beta);
        in_range
            && d.levels.iter().all(|(r, lv)| {
                lv.down.iter().all(|x| self.values.get(x).is_some_and(|v| v <= r))
                    && lv.up.iter().all(|x| self.values.get(x).is_some_and(|v| v >= r))
            })
    }
}

/// The admissible value of `[l, u]` for a point of denominator `z`: smallest
/// denominator first, then smallest value.
pub fn choose_value<I: Int>(l: &Ratio<I>, u: &Ratio<I>, z: &DivNat<I>) -> Option<Ratio<I>> {
    if l > u {
        return None;
    }
    let try_den = |n: I| {
        let nr = ratio_int(n.clone());
        let p = ceil(&(l * &nr));
        (p <= floor(&(u * &nr))).then(|| Ratio::new(p, n))
    };
    if z.is_top() {
        // l itself is admissible, so n never needs to exceed den(l); an
        // interval of positive length also admits every n >= 1/(u - l).
        let mut bound = l.denom().clone();
        if l < u {
            bound = bound.min(ceil(&(u - l).recip()));
        }
        let mut n = I::one();
        while n <= bound {
            if let Some(v) = try_den(n.clone()) {
                return Some(v);
            }
            n = n + I::one();
        }
        return None;
    }
    z.divisors().into_iter().find_map(try_den)
}

/// Realises a valid draft: each `x` goes to the admissible value of
/// `[l(x), u(x)]` where `l(x) = max{r : x ∈ up r}` and
/// `u(x) = min{r : x ∈ down r}`. D4 guarantees such a value exists.
pub fn realize<I: Int>(d: &Draft<I>) -> Result<RatFunction<I>> {
    d.validate()?;
    let mut values = BTreeMap::new();
    for (x, z) in d.space.points() {
        let l = d
            .levels
            .iter()
            .rev()
            .find(|(_, lv)| lv.up.contains(x))
            .map(|(r, _)| r)
            .expect("alpha level contains every point in up");
        let u = d
            .levels
            .iter()
            .find(|(_, lv)| lv.down.contains(x))
            .map(|(r, _)| r)
            .expect("beta level contains every point in down");
        let v = choose_value(l, u, z).expect("valid drafts admit a value at every point");
        values.insert(x.clone(), v);
    }
    Ok(RatFunction {
        space: d.space.clone(),
        values,
        lo: d.alpha.clone(),
        hi: d.beta.clone(),
    })
}

fn first_outside<I: Int>(x: &FinASpace<I>, s: &Subset, lo: &Ratio<I>, hi: &Ratio<I>) -> Result<Option<Label>> {
    for p in s {
        if !interval_admits(lo, hi, x.zeta(p)?) {
            return Ok(Some(p.clone()));
        }
    }
    Ok(None)
}

/// An a-map `f : X → [α, β]` with `f = α` on `a` and `f = β` on `b`.
///
/// Requires `α ≤ β`, disjoint `a` and `b`, and
/// `X ⊆ AC[α, β]`, `a ⊆ AC{α}`, `b ⊆ AC{β}`.
pub fn urysohn<I: Int>(
    x: &FinASpace<I>,
    a: &Subset,
    b: &Subset,
    alpha: &Ratio<I>,
    beta: &Ratio<I>,
) -> Result<RatFunction<I>> {
    x.check_subset(a)?;
    x.check_subset(b)?;
    if alpha > beta {
        return Err(Error::pre("alpha-gt-beta", format!("alpha={alpha} > beta={beta}")));
    }
    if let Some(p) = a.intersection(b).next() {
        return Err(Error::pre("sets-overlap", format!("A and B share point {p}")));
    }
    if let Some(p) = first_outside(x, &x.all(), alpha, beta)? {
        return Err(Error::pre(
            "not-in-ac-interval",
            format!("point {p} is not in AC[{alpha}, {beta}]"),
        ));
    }
    if let Some(p) = first_outside(x, a, alpha, alpha)? {
        return Err(Error::pre(
            "a-not-in-ac-alpha",
            format!("point {p} of A is not in AC{{{alpha}}}"),
        ));
    }
    if let Some(p) = first_outside(x, b, beta, beta)? {
        return Err(Error::pre(
            "b-not-in-ac-beta",
            format!("point {p} of B is not in AC{{{beta}}}"),
        ));
    }
    if alpha == beta {
        return Ok(RatFunction {
            space: x.clone(),
            values: x.labels().map(|p| (p.clone(), alpha.clone())).collect(),
            lo: alpha.clone(),
            hi: beta.clone(),
        });
    }
    let d = Draft::two_level(x.clone(), alpha.clone(), beta.clone(), a.clone(), b.clone());
    realize(&d)
}

/// An a-map `X → [0, 1]` with `f(x) = 0` and `f(y) = 1`.
pub fn separating_map<I: Int>(x: &FinASpace<I>, p: &str, q: &str) -> Result<RatFunction<I>> {
    x.zeta(p)?;
    x.zeta(q)?;
    if p == q {
        return Err(Error::pre("same-point", format!("cannot separate {p} from itself")));
    }
    let a = [p.to_string()].into_iter().collect();
    let b = [q.to_string()].into_iter().collect();
    urysohn(x, &a, &b, &Ratio::zero(), &Ratio::one())
}

/// An a-map `f : X → [0, 1]` with `den f(p) = ζ(p)`, obtained with
/// `λ = 1/ζ(p)`, `α = 0`, `β = λ`, `A = ∅`, `B = {p}`.
pub fn denominator_witness<I: Int>(x: &FinASpace<I>, p: &str) -> Result<RatFunction<I>> {
    let z = x.zeta(p)?;
    if z.is_top() {
        return Err(Error::pre(
            "zeta-zero",
            format!("point {p} has denominator 0; no rational value has denominator 0"),
        ));
    }
    let lambda = Ratio::new(I::one(), z.value().clone());
    let b = [p.to_string()].into_iter().collect();
    urysohn(x, &Subset::new(), &b, &Ratio::zero(), &lambda)
}

/// A finite family of a-maps `X → [0, 1]` that separates points and attains
/// every denominator: one separating map per unordered pair, then one
/// denominator witness per point.
pub fn embed<I: Int>(x: &FinASpace<I>) -> Result<Vec<RatFunction<I>>> {
    if let Some((p, _)) = x.points().iter().find(|(_, z)| z.is_top()) {
        return Err(Error::pre(
            "zeta-zero",
            format!("point {p} has denominator 0 and has no rational witness"),
        ));
    }
    let labels: Vec<&Label> = x.labels().collect();
    let mut out = Vec::new();
    for (i, p) in labels.iter().enumerate() {
        for q in &labels[i + 1..] {
            out.push(separating_map(x, p, q)?);
        }
    }
    for p in &labels {
        out.push(denominator_witness(x, p)?);
    }
    Ok(out)
}

/// The image of each point under the product map induced by `family`.
pub fn embedding_vectors<I: Int>(family: &[RatFunction<I>]) -> BTreeMap<Label, Vec<Ratio<I>>> {
    let mut out: BTreeMap<Label, Vec<Ratio<I>>> = BTreeMap::new();
    for f in family {
        for (x, v) in &f.values {
            out.entry(x.clone()).or_default().push(v.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divlat::den_vec;

    type S = FinASpace<i64>;
    type R = Ratio<i64>;

    fn q(p: i64, d: i64) -> R {
        Ratio::new(p, d)
    }

    fn set(xs: &[&str]) -> Subset {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn frame(z: u64) -> Draft<i64> {
        let x = S::from_pairs([("x", z)]);
        Draft::two_level(x, q(0, 1), q(1, 1), set(&[]), set(&[]))
    }

    #[test]
    fn validate_examples() {
        assert!(frame(2).validate().is_ok());

        let mut d = frame(2);
        d.levels.get_mut(&q(1, 1)).unwrap().up = set(&["x"]);
        d.levels.get_mut(&q(0, 1)).unwrap().down = set(&["x"]);
        let err = d.validate().unwrap_err();
        assert!(matches!(err, Error::Draft(Violation { axiom: Axiom::D3, .. })), "{err}");

        let x = S::from_pairs([("x", 3)]);
        let d = Draft::two_level(x, q(1, 2), q(1, 1), set(&["x"]), set(&[]));
        match d.validate().unwrap_err() {
            Error::Draft(v) => {
                assert_eq!(v.axiom, Axiom::D4);
                assert_eq!(v.to_string(), "D4 violated at r=1/2, s=1/2, point x");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn structural_errors_are_distinct() {
        let mut d = frame(2);
        d.levels.remove(&q(1, 1));
        assert!(matches!(d.validate(), Err(Error::Malformed(_))));
        let mut d = frame(2);
        d.levels.insert(q(3, 2), Level::default());
        assert!(matches!(d.validate(), Err(Error::Malformed(_))));
        let mut d = frame(2);
        d.levels.get_mut(&q(0, 1)).unwrap().down = set(&["nope"]);
        assert!(matches!(d.validate(), Err(Error::Malformed(_))));
    }

    #[test]
    fn d1_d2_violations() {
        let mut d = frame(2);
        d.levels.get_mut(&q(0, 1)).unwrap().up = set(&[]);
        let e = d.validate().unwrap_err();
        assert!(matches!(e, Error::Draft(Violation { axiom: Axiom::D1, .. })));
        let x = S::from_pairs([("x", 2)]);
        let mut d = Draft::two_level(x, q(0, 1), q(1, 1), set(&[]), set(&[]));
        d.levels.insert(q(1, 2), Level::default());
        let e = d.validate().unwrap_err();
        assert!(matches!(e, Error::Draft(Violation { axiom: Axiom::D2, .. })));
    }

    #[test]
    fn refine_examples() {
        let d = frame(2);
        let r = refine_at(&d, &q(1, 2), SeparationPolicy::default()).unwrap();
        assert_eq!(
            r.levels[&q(1, 2)],
            Level {
                down: set(&["x"]),
                up: set(&[])
            }
        );
        assert!(r.is_valid() && r.refines(&d));

        let d = frame(3);
        let r = refine_at(&d, &q(1, 2), SeparationPolicy::default()).unwrap();
        assert_eq!(
            r.levels[&q(1, 2)],
            Level {
                down: set(&["x"]),
                up: set(&[])
            }
        );

        assert!(matches!(
            refine_at(&d, &q(1, 1), SeparationPolicy::default()),
            Err(Error::Precondition {
                code: "level-exists",
                ..
            })
        ));
        assert!(matches!(
            refine_at(&d, &q(2, 1), SeparationPolicy::default()),
            Err(Error::Precondition {
                code: "level-out-of-range",
                ..
            })
        ));
    }

    #[test]
    fn refine_forces_separation_by_denominator() {
        // ζ = 3 on [0, 1] squeezed between levels 1/3 and 2/3 at λ = 1/2:
        // only 1/3 and 2/3 are admissible, so neither side may be empty.
        let x = S::from_pairs([("x", 3), ("y", 2)]);
        let mut d = Draft::two_level(x.clone(), q(0, 1), q(1, 1), set(&[]), set(&[]));
        d.levels.insert(
            q(1, 3),
            Level {
                down: set(&["y"]),
                up: set(&["x"]),
            },
        );
        d.levels.insert(
            q(2, 3),
            Level {
                down: x.all(),
                up: set(&[]),
            },
        );
        assert!(d.is_valid(), "{:?}", d.validate());
        for policy in [SeparationPolicy::LeftoverToU, SeparationPolicy::LeftoverToV] {
            let r = refine_at(&d, &q(1, 2), policy).unwrap();
            assert!(r.is_valid());
            let f = realize(&r).unwrap();
            assert!(f.is_amap() && f.realises(&r) && f.realises(&d));
        }
    }

    #[test]
    fn refine_sequence_examples() {
        let d = frame(2);
        let seq = [q(1, 2), q(1, 4), q(3, 4)];
        let r = refine_sequence(&d, &seq, SeparationPolicy::default()).unwrap();
        assert_eq!(r.levels.len(), 5);
        assert!(r.is_valid() && r.refines(&d));
        assert_eq!(refine_sequence(&d, &[], SeparationPolicy::default()).unwrap(), d);
        assert_eq!(refine_sequence(&d, &[q(1, 1)], SeparationPolicy::default()).unwrap(), d);
    }

    #[test]
    fn stern_brocot_order() {
        let s = stern_brocot_sequence(&q(0, 1), &q(1, 1), 7);
        assert_eq!(s, vec![q(1, 2), q(1, 3), q(2, 3), q(1, 4), q(2, 5), q(3, 5), q(3, 4)]);
        let s = stern_brocot_sequence(&q(-3, 2), &q(1, 2), 4);
        assert_eq!(s, vec![q(-1, 1), q(0, 1), q(-1, 2), q(-4, 3)]);
        assert!(s.iter().all(|r| *r > q(-3, 2) && *r < q(1, 2)));
        assert!(stern_brocot_sequence(&q(1, 1), &q(1, 1), 3).is_empty());
    }

    #[test]
    fn realize_examples() {
        let f = realize(&frame(2)).unwrap();
        assert_eq!(f.values["x"], q(0, 1));
        let f = realize(&frame(0)).unwrap();
        assert_eq!(f.values["x"], q(0, 1));

        let x = S::from_pairs([("x", 3)]);
        let mut d = Draft::two_level(x.clone(), q(0, 1), q(1, 1), set(&[]), set(&[]));
        d.levels.insert(
            q(1, 3),
            Level {
                down: x.all(),
                up: x.all(),
            },
        );
        let f = realize(&d).unwrap();
        assert_eq!(f.values["x"], q(1, 3));
    }

    #[test]
    fn choose_value_rules() {
        let z = |n| DivNat::<i64>::from_u64(n);
        assert_eq!(choose_value(&q(1, 3), &q(1, 2), &z(6)), Some(q(1, 2)));
        assert_eq!(choose_value(&q(1, 3), &q(1, 2), &z(3)), Some(q(1, 3)));
        assert_eq!(choose_value(&q(2, 5), &q(3, 7), &z(2)), None);
        assert_eq!(choose_value(&q(2, 7), &q(2, 7), &z(0)), Some(q(2, 7)));
        assert_eq!(choose_value(&q(1, 5), &q(2, 7), &z(0)), Some(q(1, 4)));
    }

    #[test]
    fn urysohn_examples() {
        let x = S::from_pairs([("a", 2), ("b", 3), ("c", 0)]);
        let e = urysohn(&x, &set(&["a"]), &set(&["b"]), &q(1, 2), &q(1, 3)).unwrap_err();
        assert!(matches!(
            e,
            Error::Precondition {
                code: "alpha-gt-beta",
                ..
            }
        ));

        let x = S::from_pairs([("a", 2), ("b", 0)]);
        let f = urysohn(&x, &set(&["a"]), &set(&["b"]), &q(1, 2), &q(1, 1)).unwrap();
        assert_eq!(f.values["a"], q(1, 2));
        assert_eq!(f.values["b"], q(1, 1));

        let x = S::from_pairs([("a", 3)]);
        let f = urysohn(&x, &set(&[]), &set(&["a"]), &q(0, 1), &q(1, 3)).unwrap();
        assert_eq!(f.values["a"], q(1, 3));

        let x = S::from_pairs([("a", 3), ("b", 2)]);
        let e = urysohn(&x, &set(&["b"]), &set(&["a"]), &q(1, 3), &q(1, 2)).unwrap_err();
        assert!(
            matches!(
                e,
                Error::Precondition {
                    code: "a-not-in-ac-alpha",
                    ..
                }
            ),
            "{e}"
        );
        let e = urysohn(&x, &set(&[]), &set(&[]), &q(1, 4), &q(1, 3)).unwrap_err();
        assert!(
            matches!(
                e,
                Error::Precondition {
                    code: "not-in-ac-interval",
                    ..
                }
            ),
            "{e}"
        );
    }

    #[test]
    fn urysohn_degenerate_interval() {
        let x = S::from_pairs([("a", 2), ("b", 4)]);
        let f = urysohn(&x, &set(&["a"]), &set(&["b"]), &q(1, 2), &q(1, 2)).unwrap();
        assert!(f.values.values().all(|v| *v == q(1, 2)));
    }

    #[test]
    fn corollaries() {
        let x = S::from_pairs([("a", 2), ("b", 3)]);
        let f = separating_map(&x, "a", "b").unwrap();
        assert_eq!((f.values["a"], f.values["b"]), (q(0, 1), q(1, 1)));
        let x0 = S::from_pairs([("a", 0), ("b", 0)]);
        let f = separating_map(&x0, "a", "b").unwrap();
        assert_eq!((f.values["a"], f.values["b"]), (q(0, 1), q(1, 1)));
        assert!(separating_map(&S::from_pairs([("a", 1)]), "a", "a").is_err());

        let x = S::from_pairs([("a", 3), ("b", 2)]);
        assert_eq!(denominator_witness(&x, "a").unwrap().values["a"], q(1, 3));
        let f = denominator_witness(&S::from_pairs([("a", 1)]), "a").unwrap();
        assert_eq!(f.values["a"].denom(), &1);
        let e = denominator_witness(&S::from_pairs([("a", 0)]), "a").unwrap_err();
        assert!(matches!(e, Error::Precondition { code: "zeta-zero", .. }));
    }

    #[test]
    fn embed_examples() {
        let x = S::from_pairs([("a", 2), ("b", 3)]);
        let fam = embed(&x).unwrap();
        assert_eq!(fam.len(), 3);
        let vecs = embedding_vectors(&fam);
        assert_ne!(vecs["a"], vecs["b"]);
        assert_eq!(den_vec(&vecs["a"]), DivNat::from_u64(2));
        assert_eq!(den_vec(&vecs["b"]), DivNat::from_u64(3));
        assert_eq!(embed(&S::from_pairs([("a", 1)])).unwrap().len(), 1);
        assert!(embed(&S::from_pairs([("a", 0)])).is_err());
    }
}
