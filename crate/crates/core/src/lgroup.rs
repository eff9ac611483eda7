//! Finitely generated unital ℓ-groups of rational functions on finite
//! a-spaces.
//!
//! A [`FnGroup`] is given by generators; the unit (constantly 1) is implicit.
//! Elements are [`GroupTerm`]s evaluated pointwise. Because every generator
//! value is rational, the value group at each point is discrete, `(1/d)ℤ`,
//! and `d` is the spectral denominator of that point in `Max G`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::aspace::{FinASpace, Label};
use crate::divlat::DivNat;
use crate::scalar::{ceil, ext_gcd, floor, ratio_int, simplest_between, Int};
use crate::{Error, Result};

/// A function on the carrier, point label to value.
pub type Values<I> = BTreeMap<Label, Ratio<I>>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FnGroup<I: Int = BigInt> {
    pub space: FinASpace<I>,
    pub generators: Vec<Values<I>>,
}

impl<I: Int> FnGroup<I> {
    /// Checks every generator is defined exactly on the carrier.
    pub fn new(space: FinASpace<I>, generators: Vec<Values<I>>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if let Some(x) = space.labels().find(|x| !g.contains_key(*x)) {
                return Err(Error::Malformed(format!("generator g{} has no value at {x}", i + 1)));
            }
            if let Some(x) = g.keys().find(|x| !space.contains(x)) {
                return Err(Error::Malformed(format!(
                    "generator g{} names unknown point {x}",
                    i + 1
                )));
            }
        }
        Ok(FnGroup { space, generators })
    }

    pub fn unit_only(space: FinASpace<I>) -> Self {
        FnGroup {
            space,
            generators: Vec::new(),
        }
    }
}

/// Terms over generator indices (0-based, displayed `g1`, `g2`, …) and
/// integer constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupTerm<I: Int = BigInt> {
    Gen(usize),
    Const(I),
    Add(Box<GroupTerm<I>>, Box<GroupTerm<I>>),
    Sub(Box<GroupTerm<I>>, Box<GroupTerm<I>>),
    Neg(Box<GroupTerm<I>>),
    /// Integer multiple `m·t`, shorthand for a repeated sum.
    Scale(I, Box<GroupTerm<I>>),
    Join(Box<GroupTerm<I>>, Box<GroupTerm<I>>),
    Meet(Box<GroupTerm<I>>, Box<GroupTerm<I>>),
}

impl<I: Int> Add for GroupTerm<I> {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        GroupTerm::Add(Box::new(self), Box::new(other))
    }
}

impl<I: Int> Sub for GroupTerm<I> {
    type Output = Self;

    fn sub(self, other: Self) -> Self {
        GroupTerm::Sub(Box::new(self), Box::new(other))
    }
}

impl<I: Int> Neg for GroupTerm<I> {
    type Output = Self;

    fn neg(self) -> Self {
        GroupTerm::Neg(Box::new(self))
    }
}

impl<I: Int> GroupTerm<I> {
    pub fn gen(i: usize) -> Self {
        GroupTerm::Gen(i)
    }

    pub fn constant(c: I) -> Self {
        GroupTerm::Const(c)
    }

    pub fn scale(self, m: I) -> Self {
        GroupTerm::Scale(m, Box::new(self))
    }

    pub fn join(self, other: Self) -> Self {
        GroupTerm::Join(Box::new(self), Box::new(other))
    }

    pub fn meet(self, other: Self) -> Self {
        GroupTerm::Meet(Box::new(self), Box::new(other))
    }

    /// Largest generator index used, if any.
    pub fn max_gen(&self) -> Option<usize> {
        match self {
            GroupTerm::Gen(i) => Some(*i),
            GroupTerm::Const(_) => None,
            GroupTerm::Neg(t) | GroupTerm::Scale(_, t) => t.max_gen(),
            GroupTerm::Add(a, b) | GroupTerm::Sub(a, b) | GroupTerm::Join(a, b) | GroupTerm::Meet(a, b) => {
                a.max_gen().max(b.max_gen())
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            GroupTerm::Gen(_) | GroupTerm::Const(_) => 0,
            GroupTerm::Neg(t) | GroupTerm::Scale(_, t) => 1 + t.depth(),
            GroupTerm::Add(a, b) | GroupTerm::Sub(a, b) | GroupTerm::Join(a, b) | GroupTerm::Meet(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    fn prec(&self) -> u8 {
        match self {
            GroupTerm::Join(..) | GroupTerm::Meet(..) => 0,
            GroupTerm::Add(..) | GroupTerm::Sub(..) => 1,
            GroupTerm::Neg(_) | GroupTerm::Scale(..) => 2,
            GroupTerm::Const(c) if c.is_negative() => 2,
            GroupTerm::Gen(_) | GroupTerm::Const(_) => 3,
        }
    }
}

fn write_child<I: Int>(f: &mut fmt::Formatter<'_>, t: &GroupTerm<I>, min_prec: u8) -> fmt::Result {
    if t.prec() < min_prec {
        write!(f, "({t})")
    } else {
        write!(f, "{t}")
    }
}

impl<I: Int> fmt::Display for GroupTerm<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTerm::Gen(i) => write!(f, "g{}", i + 1),
            GroupTerm::Const(c) => write!(f, "{c}"),
            GroupTerm::Add(a, b) => {
                write_child(f, a, 1)?;
                f.write_str(" + ")?;
                write_child(f, b, 1)
            }
            GroupTerm::Sub(a, b) => {
                write_child(f, a, 1)?;
                f.write_str(" - ")?;
                write_child(f, b, 2)
            }
            GroupTerm::Neg(t) => {
                f.write_str("-")?;
                write_child(f, t, 3)
            }
            GroupTerm::Scale(m, t) => {
                write!(f, "{m}*")?;
                write_child(f, t, 3)
            }
            GroupTerm::Join(a, b) | GroupTerm::Meet(a, b) => {
                let (op, same) = match self {
                    GroupTerm::Join(..) => (" ∨ ", matches!(**a, GroupTerm::Join(..))),
                    _ => (" ∧ ", matches!(**a, GroupTerm::Meet(..))),
                };
                // Mixed lattice operators are always parenthesised.
                if same || a.prec() > 0 {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
                f.write_str(op)?;
                let rsame = matches!(
                    (self, &**b),
                    (GroupTerm::Join(..), GroupTerm::Join(..)) | (GroupTerm::Meet(..), GroupTerm::Meet(..))
                );
                if rsame || b.prec() > 0 {
                    write!(f, "{b}")
                } else {
                    write!(f, "({b})")
                }
            }
        }
    }
}

fn eval_at<I: Int>(gens: &[Values<I>], t: &GroupTerm<I>, x: &str) -> Ratio<I> {
    match t {
        GroupTerm::Gen(i) => gens[*i][x].clone(),
        GroupTerm::Const(c) => ratio_int(c.clone()),
        GroupTerm::Add(a, b) => eval_at(gens, a, x) + eval_at(gens, b, x),
        GroupTerm::Sub(a, b) => eval_at(gens, a, x) - eval_at(gens, b, x),
        GroupTerm::Neg(a) => -eval_at(gens, a, x),
        GroupTerm::Scale(m, a) => eval_at(gens, a, x) * ratio_int(m.clone()),
        GroupTerm::Join(a, b) => eval_at(gens, a, x).max(eval_at(gens, b, x)),
        GroupTerm::Meet(a, b) => eval_at(gens, a, x).min(eval_at(gens, b, x)),
    }
}

/// Pointwise evaluation of `t` on the carrier of `g`.
pub fn eval_term<I: Int>(g: &FnGroup<I>, t: &GroupTerm<I>) -> Result<Values<I>> {
    if let Some(i) = t.max_gen() {
        if i >= g.generators.len() {
            return Err(Error::pre(
                "generator-out-of-range",
                format!(
                    "term uses g{} but the group has {} generators",
                    i + 1,
                    g.generators.len()
                ),
            ));
        }
    }
    Ok(g.space
        .labels()
        .map(|x| (x.clone(), eval_at(&g.generators, t, x)))
        .collect())
}

/// The unit-induced seminorm, which on functions is the sup norm.
pub fn seminorm<I: Int>(v: &Values<I>) -> Result<Ratio<I>> {
    v.values()
        .map(|r| r.abs())
        .max()
        .ok_or_else(|| Error::pre("empty-carrier", "the norm of a function on no points is undefined"))
}

/// Pointwise `v - w` on the common domain of `v`.
pub fn difference<I: Int>(v: &Values<I>, w: &Values<I>) -> Values<I> {
    v.iter()
        .map(|(x, a)| (x.clone(), a - w.get(x).cloned().unwrap_or_else(Ratio::zero)))
        .collect()
}

/// `d` with `(1/d)ℤ` the subgroup of ℚ generated by `values` and `1`.
pub fn value_group_of<'a, I: Int>(values: impl IntoIterator<Item = &'a Ratio<I>>) -> DivNat<I> {
    let values: Vec<&Ratio<I>> = values.into_iter().collect();
    let q = values.iter().fold(I::one(), |acc, v| acc.lcm(v.denom()));
    let g = values.iter().fold(q.clone(), |acc, v| {
        acc.gcd(&(v.numer().clone() * (q.clone() / v.denom().clone())))
    });
    DivNat::new(q / g).expect("positive")
}

/// The spectral denominator of `x` in `Max G`: `d` with value group `(1/d)ℤ`.
pub fn value_group<I: Int>(g: &FnGroup<I>, x: &str) -> Result<DivNat<I>> {
    g.space.zeta(x)?;
    Ok(value_group_of(g.generators.iter().map(|gen| &gen[x])))
}

/// The first pair of points no generator tells apart.
pub fn inseparable_pair<I: Int>(g: &FnGroup<I>) -> Option<(Label, Label)> {
    let labels: Vec<&Label> = g.space.labels().collect();
    for (i, x) in labels.iter().enumerate() {
        for y in &labels[i + 1..] {
            if g.generators.iter().all(|gen| gen[*x] == gen[*y]) {
                return Some(((*x).clone(), (*y).clone()));
            }
        }
    }
    None
}

pub fn separates<I: Int>(g: &FnGroup<I>) -> bool {
    inseparable_pair(g).is_none()
}

/// `Max G` for a separating group: the carrier with the spectral
/// denominators, and the identity correspondence between carrier points and
/// evaluation homomorphisms.
pub fn max_of_group<I: Int>(g: &FnGroup<I>) -> Result<(FinASpace<I>, BTreeMap<Label, Label>)> {
    if let Some((x, y)) = inseparable_pair(g) {
        return Err(Error::pre(
            "not-separating",
            format!("no generator distinguishes {x} from {y}"),
        ));
    }
    let mut points = BTreeMap::new();
    for x in g.space.labels() {
        points.insert(x.clone(), value_group(g, x)?);
    }
    let corr = g.space.labels().map(|x| (x.clone(), x.clone())).collect();
    Ok((FinASpace::new(points), corr))
}

fn reject_zeta_zero<I: Int>(x: &FinASpace<I>) -> Result<()> {
    if let Some((p, _)) = x.points().iter().find(|(_, z)| z.is_top()) {
        return Err(Error::pre(
            "zeta-zero",
            format!("point {p} has denominator 0; its value group is not finitely generated over ℚ"),
        ));
    }
    Ok(())
}

/// `{δ_x / ζ(x)}`: generators of the rational part of `C(X)`.
pub fn canonical_generators<I: Int>(x: &FinASpace<I>) -> Vec<Values<I>> {
    x.points()
        .iter()
        .map(|(p, z)| {
            x.labels()
                .map(|q| {
                    let v = if q == p {
                        Ratio::new(I::one(), z.value().clone())
                    } else {
                        Ratio::zero()
                    };
                    (q.clone(), v)
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EtaReport<I: Int = BigInt> {
    pub zeta: BTreeMap<Label, DivNat<I>>,
    pub zeta_prime: BTreeMap<Label, DivNat<I>>,
    pub correspondence: BTreeMap<Label, Label>,
    pub bijective: bool,
    pub denominators_preserved: bool,
}

impl<I: Int> EtaReport<I> {
    pub fn is_iso(&self) -> bool {
        self.bijective && self.denominators_preserved
    }
}

/// Checks that `η_X : X → Max C(X)` is an isomorphism of a-spaces.
pub fn eta_check<I: Int>(x: &FinASpace<I>) -> Result<EtaReport<I>> {
    reject_zeta_zero(x)?;
    let g = FnGroup::new(x.clone(), canonical_generators(x))?;
    let (max, corr) = max_of_group(&g)?;
    let image: std::collections::BTreeSet<&Label> = corr.values().collect();
    let bijective = corr.len() == x.len() && image.len() == max.len();
    let denominators_preserved = x.points().iter().all(|(p, z)| max.points().get(&corr[p]) == Some(z));
    Ok(EtaReport {
        zeta: x.points().clone(),
        zeta_prime: max.points().clone(),
        correspondence: corr,
        bijective,
        denominators_preserved,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SwReport<I: Int = BigInt> {
    /// Condition (1): the generators separate points.
    pub separates: bool,
    pub inseparable: Option<(Label, Label)>,
    /// Condition (2): `ζ(x)` equals the spectral denominator everywhere.
    pub denominators_match: bool,
    /// First point where (2) fails, with `ζ(x)` and the spectral denominator.
    pub mismatch: Option<(Label, DivNat<I>, DivNat<I>)>,
}

impl<I: Int> SwReport<I> {
    pub fn holds(&self) -> bool {
        self.separates && self.denominators_match
    }
}

/// The two conditions under which `G` is dense in `C(X)`.
pub fn sw_conditions<I: Int>(g: &FnGroup<I>) -> SwReport<I> {
    let inseparable = inseparable_pair(g);
    let mismatch = g.space.points().iter().find_map(|(x, z)| {
        let d = value_group_of(g.generators.iter().map(|gen| &gen[x]));
        (d != *z).then(|| (x.clone(), z.clone(), d))
    });
    SwReport {
        separates: inseparable.is_none(),
        inseparable,
        denominators_match: mismatch.is_none(),
        mismatch,
    }
}

/// Solves `A c = b` over ℤ, returning some integer solution.
///
/// Column operations with extended gcds bring `A` to column echelon form
/// `H = A U` with `U` unimodular; `H y = b` is then solved by forward
/// substitution and `c = U y`.
fn solve_integer<I: Int>(a: &[Vec<I>], b: &[I]) -> Option<Vec<I>> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut h: Vec<Vec<I>> = a.to_vec();
    let mut u: Vec<Vec<I>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { I::one() } else { I::zero() }).collect())
        .collect();
    // Column operation on both H and U: (c_p, c_j) <- (x c_p + y c_j, s c_p + t c_j).
    let combine = |mat: &mut Vec<Vec<I>>, p: usize, j: usize, x: &I, y: &I, s: &I, t: &I| {
        for row in mat.iter_mut() {
            let (vp, vj) = (row[p].clone(), row[j].clone());
            row[p] = x.clone() * vp.clone() + y.clone() * vj.clone();
            row[j] = s.clone() * vp + t.clone() * vj;
        }
    };
    let mut pivots: Vec<usize> = Vec::new();
    let mut col = 0;
    for r in 0..m {
        if col == n {
            break;
        }
        for j in col + 1..n {
            if h[r][j].is_zero() {
                continue;
            }
            let (pa, pb) = (h[r][col].clone(), h[r][j].clone());
            let (g, x, y) = ext_gcd(&pa, &pb);
            let s = -(pb / g.clone());
            let t = pa / g;
            combine(&mut h, col, j, &x, &y, &s, &t);
            combine(&mut u, col, j, &x, &y, &s, &t);
        }
        if !h[r][col].is_zero() {
            pivots.push(r);
            col += 1;
        }
    }
    let mut y = vec![I::zero(); n];
    let mut next = 0;
    for r in 0..m {
        let partial = (0..next).fold(I::zero(), |acc, j| acc + h[r][j].clone() * y[j].clone());
        let rest = b[r].clone() - partial;
        if next < pivots.len() && pivots[next] == r {
            let (q, rem) = rest.div_rem(&h[r][next]);
            if !rem.is_zero() {
                return None;
            }
            y[next] = q;
            next += 1;
        } else if !rest.is_zero() {
            return None;
        }
    }
    Some(
        (0..n)
            .map(|i| (0..n).fold(I::zero(), |acc, j| acc + u[i][j].clone() * y[j].clone()))
            .collect(),
    )
}

/// `Σ c_i g_i + c_0` as a term, dropping zero coefficients.
fn linear_term<I: Int>(coeffs: &[I], c0: &I) -> GroupTerm<I> {
    let mut parts: Vec<GroupTerm<I>> = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = if c.is_one() {
            GroupTerm::gen(i)
        } else if (-c.clone()).is_one() {
            GroupTerm::gen(i).neg()
        } else {
            GroupTerm::gen(i).scale(c.clone())
        };
        parts.push(t);
    }
    if !c0.is_zero() || parts.is_empty() {
        parts.push(GroupTerm::Const(c0.clone()));
    }
    let mut it = parts.into_iter();
    let first = it.next().expect("nonempty");
    it.fold(first, GroupTerm::add)
}

/// An integer combination of generators and `1` matching `target` at every
/// point of `points`, if one exists.
fn solve_linear<I: Int>(g: &FnGroup<I>, points: &[&Label], target: &Values<I>) -> Option<GroupTerm<I>> {
    let k = g.generators.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in points {
        let l = g
            .generators
            .iter()
            .fold(target[*x].denom().clone(), |acc, gen| acc.lcm(gen[*x].denom()));
        let lr = ratio_int(l);
        let mut row: Vec<I> = g
            .generators
            .iter()
            .map(|gen| (gen[*x].clone() * lr.clone()).to_integer())
            .collect();
        row.push(lr.to_integer());
        rows.push(row);
        rhs.push((target[*x].clone() * lr).to_integer());
    }
    let c = solve_integer(&rows, &rhs)?;
    Some(linear_term(&c[..k], &c[k]))
}

/// `l = m·g + q` with `l(x) ≥ f(x)` and `l(y) ≤ f(y)`, built from a
/// generator `g` that separates `x` and `y`.
fn one_sided<I: Int>(g: &FnGroup<I>, f: &Values<I>, x: &str, y: &str) -> GroupTerm<I> {
    let (i, gen) = g
        .generators
        .iter()
        .enumerate()
        .find(|(_, gen)| gen[x] != gen[y])
        .expect("separating generator");
    let split = simplest_between(&gen[x], &gen[y]);
    let b = split.denom().clone();
    let dx = gen[x].clone() - split.clone();
    let dy = gen[y].clone() - split.clone();
    // m·dx ≥ f(x) and m·dy ≤ f(y), with dx and dy of opposite signs.
    let bx = f[x].clone() / dx.clone();
    let by = f[y].clone() / dy;
    let br = ratio_int(b.clone());
    let m = if dx.is_positive() {
        let lo = bx.max(by);
        if lo <= Ratio::zero() {
            I::zero()
        } else {
            ceil(&(lo / br)) * b
        }
    } else {
        let hi = bx.min(by);
        if hi >= Ratio::zero() {
            I::zero()
        } else {
            floor(&(hi / br)) * b
        }
    };
    let q = (-(ratio_int(m.clone()) * split)).to_integer();
    let mut coeffs = vec![I::zero(); g.generators.len()];
    coeffs[i] = m;
    linear_term(&coeffs, &q)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Approximation<I: Int = BigInt> {
    pub term: GroupTerm<I>,
    pub error: Ratio<I>,
}

/// A term within `eps` of `target` in the sup norm.
///
/// Tries, in order: a generator equal to the target, an integer combination
/// of generators and `1`, and the lattice combination
/// `∨_x ∧_{y≠x} g_xy` of two-point interpolants. The last is exact whenever
/// the preconditions hold, so the error is always `0`.
pub fn sw_approximate<I: Int>(g: &FnGroup<I>, target: &Values<I>, eps: &Ratio<I>) -> Result<Approximation<I>> {
    if !eps.is_positive() {
        return Err(Error::pre("eps-not-positive", format!("eps = {eps}")));
    }
    if g.space.is_empty() {
        return Err(Error::pre("empty-carrier", "cannot approximate on an empty carrier"));
    }
    if let Some(x) = g.space.labels().find(|x| !target.contains_key(*x)) {
        return Err(Error::Malformed(format!("target has no value at {x}")));
    }
    if let Some(x) = target.keys().find(|x| !g.space.contains(x)) {
        return Err(Error::Malformed(format!("target names unknown point {x}")));
    }
    let report = sw_conditions(g);
    if let Some((x, y)) = &report.inseparable {
        return Err(Error::pre(
            "not-separating",
            format!("condition (1) fails: no generator distinguishes {x} from {y}"),
        ));
    }
    if let Some((x, z, d)) = &report.mismatch {
        return Err(Error::pre(
            "denominator-mismatch",
            format!("condition (2) fails at {x}: zeta = {z} but the value group is (1/{d})Z"),
        ));
    }
    for x in g.space.labels() {
        let d = value_group(g, x)?;
        let scaled = target[x].clone() * ratio_int(d.value().clone());
        if !scaled.is_integer() {
            return Err(Error::pre(
                "target-not-in-value-group",
                format!("target {} at {x} is not in (1/{d})Z", target[x]),
            ));
        }
    }
    let finish = |term: GroupTerm<I>| -> Result<Approximation<I>> {
        let got = eval_term(g, &term)?;
        let error = seminorm(&difference(&got, target))?;
        Ok(Approximation { term, error })
    };

    if let Some(i) = g.generators.iter().position(|gen| gen == target) {
        return finish(GroupTerm::gen(i));
    }
    let labels: Vec<&Label> = g.space.labels().collect();
    if let Some(t) = solve_linear(g, &labels, target) {
        return finish(t);
    }

    let exact: BTreeMap<&Label, GroupTerm<I>> = labels
        .iter()
        .map(|x| {
            let t = solve_linear(g, &[*x], target).expect("target lies in the value group at every point");
            (*x, t)
        })
        .collect();
    let mut outer: Option<GroupTerm<I>> = None;
    for x in &labels {
        let h = &exact[x];
        let hv = eval_term(g, h)?;
        let mut inner: Option<GroupTerm<I>> = None;
        for y in labels.iter().filter(|y| *y != x) {
            let k = &exact[y];
            let kv = eval_term(g, k)?;
            let (fx, fy) = (&target[*x], &target[*y]);
            let (kx, hy) = (&kv[*x], &hv[*y]);
            let gxy = if kx >= fx && hy >= fy {
                h.clone().meet(k.clone())
            } else if kx <= fx && hy <= fy {
                h.clone().join(k.clone())
            } else if kx < fx {
                // h(y) > f(y): a one-sided l with l(x) ≥ f(x), l(y) ≤ f(y).
                let l = one_sided(g, target, x, y);
                h.clone().meet(l).join(k.clone())
            } else {
                // k(x) > f(x), h(y) < f(y): l' with l'(y) ≥ f(y), l'(x) ≤ f(x).
                let l = one_sided(g, target, y, x);
                k.clone().meet(l).join(h.clone())
            };
            inner = Some(match inner {
                None => gxy,
                Some(acc) => acc.meet(gxy),
            });
        }
        let fx = inner.unwrap_or_else(|| h.clone());
        outer = Some(match outer {
            None => fx,
            Some(acc) => acc.join(fx),
        });
    }
    finish(outer.expect("nonempty carrier"))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompletenessReport<I: Int = BigInt> {
    pub separates: bool,
    /// Spectral denominators, i.e. the carrier of `Max G`.
    pub spectral: BTreeMap<Label, DivNat<I>>,
    /// The generated group is all of `C(X)` for the given `ζ`.
    pub complete_on_carrier: bool,
    /// `ε_G : G → C(Max G)` is onto, witnessed by exact approximation of
    /// every `δ_x / ζ′(x)`.
    pub eps_iso: bool,
    /// A point and a value of `C(X)` at it the group cannot reach.
    pub unreachable: Option<(Label, Ratio<I>)>,
}

impl<I: Int> CompletenessReport<I> {
    pub fn is_complete(&self) -> bool {
        self.complete_on_carrier
    }
}

fn reaches_basis<I: Int>(g: &FnGroup<I>, zeta: &FinASpace<I>) -> Result<bool> {
    let eps = zeta.points().values().fold(I::one(), |acc, z| acc.lcm(z.value()));
    let eps = Ratio::new(I::one(), eps * (I::one() + I::one()));
    for target in canonical_generators(zeta) {
        let a = sw_approximate(g, &target, &eps)?;
        if !a.error.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether the group generated by `G` equals the rational function
/// group of its carrier, and whether `ε_G` is an isomorphism onto
/// `C(Max G)`.
pub fn completeness_check<I: Int>(g: &FnGroup<I>) -> Result<CompletenessReport<I>> {
    reject_zeta_zero(&g.space)?;
    let report = sw_conditions(g);
    let spectral: BTreeMap<Label, DivNat<I>> = g
        .space
        .labels()
        .map(|x| (x.clone(), value_group_of(g.generators.iter().map(|gen| &gen[x]))))
        .collect();
    let eps_iso = if report.separates {
        let mut on_max = g.clone();
        on_max.space = FinASpace::new(spectral.clone());
        reaches_basis(&on_max, &on_max.space)?
    } else {
        false
    };
    let complete_on_carrier = report.holds() && reaches_basis(g, &g.space)?;
    let unreachable = if let Some((x, z, _)) = &report.mismatch {
        Some((x.clone(), Ratio::new(I::one(), z.value().clone())))
    } else {
        report.inseparable.as_ref().map(|(x, _)| (x.clone(), Ratio::one()))
    };
    Ok(CompletenessReport {
        separates: report.separates,
        spectral,
        complete_on_carrier,
        eps_iso,
        unreachable: if complete_on_carrier { None } else { unreachable },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = Ratio<BigInt>;
    type S = FinASpace<BigInt>;

    fn q(p: i64, d: i64) -> R {
        Ratio::new(BigInt::from(p), BigInt::from(d))
    }

    fn vals(pairs: &[(&str, R)]) -> Values<BigInt> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    fn group(space: &[(&str, u64)], gens: &[&[R]]) -> FnGroup<BigInt> {
        let s = S::from_pairs(space.iter().copied());
        let labels: Vec<Label> = s.labels().cloned().collect();
        let gens = gens
            .iter()
            .map(|g| labels.iter().cloned().zip(g.iter().cloned()).collect())
            .collect();
        FnGroup::new(s, gens).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn eval_examples() {
        let g = group(&[("a", 1), ("b", 1)], &[&[q(-1, 2), q(1, 3)]]);
        let t = GroupTerm::gen(0).join(GroupTerm::Const(big(0)));
        assert_eq!(eval_term(&g, &t).unwrap(), vals(&[("a", q(0, 1)), ("b", q(1, 3))]));
        let t = GroupTerm::Const(big(1));
        assert_eq!(eval_term(&g, &t).unwrap(), vals(&[("a", q(1, 1)), ("b", q(1, 1))]));
        let g = group(&[("a", 1), ("b", 1)], &[&[q(1, 2), q(1, 3)]]);
        let t = GroupTerm::gen(0).add(GroupTerm::gen(0)).sub(GroupTerm::Const(big(1)));
        assert_eq!(eval_term(&g, &t).unwrap(), vals(&[("a", q(0, 1)), ("b", q(-1, 3))]));
        let e = eval_term(&g, &GroupTerm::gen(1)).unwrap_err();
        assert!(matches!(
            e,
            Error::Precondition {
                code: "generator-out-of-range",
                ..
            }
        ));
    }

    #[test]
    fn display() {
        let t = GroupTerm::<BigInt>::gen(0).neg().add(GroupTerm::Const(big(1)));
        assert_eq!(t.to_string(), "-g1 + 1");
        let t = GroupTerm::<BigInt>::gen(0)
            .meet(GroupTerm::gen(1))
            .join(GroupTerm::gen(2).sub(GroupTerm::gen(0).add(GroupTerm::Const(big(2)))));
        assert_eq!(t.to_string(), "(g1 ∧ g2) ∨ g3 - (g1 + 2)");
        let t = GroupTerm::<BigInt>::gen(1).scale(big(-6)).add(GroupTerm::Const(big(3)));
        assert_eq!(t.to_string(), "-6*g2 + 3");
    }

    #[test]
    fn seminorm_examples() {
        assert_eq!(seminorm(&vals(&[("a", q(1, 2)), ("b", q(-2, 3))])).unwrap(), q(2, 3));
        assert_eq!(seminorm(&vals(&[("a", q(0, 1))])).unwrap(), q(0, 1));
        assert_eq!(seminorm(&vals(&[("a", q(3, 1))])).unwrap(), q(3, 1));
        assert!(seminorm::<BigInt>(&Values::new()).is_err());
    }

    #[test]
    fn value_group_examples() {
        let d = |vs: &[R]| value_group_of(vs.iter()).into_value();
        assert_eq!(d(&[q(1, 2)]), big(2));
        assert_eq!(d(&[q(1, 2), q(1, 3)]), big(6));
        assert_eq!(d(&[q(2, 1)]), big(1));
        assert_eq!(d(&[q(2, 3), q(4, 3)]), big(3));
        assert_eq!(d(&[]), big(1));
    }

    #[test]
    fn max_examples() {
        let g = group(&[("a", 5), ("b", 7)], &[&[q(1, 2), q(1, 3)]]);
        let (m, corr) = max_of_group(&g).unwrap();
        assert_eq!(m, S::from_pairs([("a", 2), ("b", 3)]));
        assert_eq!(corr["a"], "a");
        let g = group(&[("a", 1), ("b", 1)], &[&[q(1, 1), q(1, 1)]]);
        assert!(matches!(
            max_of_group(&g),
            Err(Error::Precondition {
                code: "not-separating",
                ..
            })
        ));
        let g = group(&[("a", 3)], &[]);
        assert_eq!(max_of_group(&g).unwrap().0, S::from_pairs([("a", 1)]));
    }

    #[test]
    fn separates_examples() {
        assert!(separates(&group(&[("a", 1), ("b", 1)], &[&[q(1, 2), q(1, 3)]])));
        assert!(!separates(&group(
            &[("a", 1), ("b", 1)],
            &[&[q(1, 1), q(1, 1)], &[q(2, 1), q(2, 1)]]
        )));
        assert!(separates(&group(&[("a", 1)], &[])));
    }

    #[test]
    fn eta_examples() {
        let r = eta_check(&S::from_pairs([("a", 2), ("b", 3)])).unwrap();
        assert!(r.is_iso());
        assert_eq!(r.zeta_prime, r.zeta);
        assert!(eta_check(&S::from_pairs([("a", 1)])).unwrap().is_iso());
        let e = eta_check(&S::from_pairs([("a", 0)])).unwrap_err();
        assert!(matches!(e, Error::Precondition { code: "zeta-zero", .. }));
    }

    #[test]
    fn sw_condition_examples() {
        assert!(sw_conditions(&group(&[("a", 2), ("b", 3)], &[&[q(1, 2), q(1, 3)]])).holds());
        let r = sw_conditions(&group(&[("a", 4), ("b", 3)], &[&[q(1, 2), q(1, 3)]]));
        assert!(!r.holds() && r.separates);
        let (x, z, d) = r.mismatch.unwrap();
        assert_eq!((x.as_str(), z.into_value(), d.into_value()), ("a", big(4), big(2)));
        let r = sw_conditions(&group(&[("a", 1), ("b", 1)], &[&[q(1, 1), q(1, 1)]]));
        assert!(!r.separates);
    }

    #[test]
    fn approximate_worked_example() {
        let g = group(&[("a", 2), ("b", 3)], &[&[q(1, 2), q(1, 3)]]);
        let a = sw_approximate(&g, &vals(&[("a", q(1, 2)), ("b", q(2, 3))]), &q(1, 6)).unwrap();
        assert_eq!(a.term.to_string(), "-g1 + 1");
        assert!(a.error.is_zero());
        let a = sw_approximate(&g, &vals(&[("a", q(1, 2)), ("b", q(1, 3))]), &q(1, 100)).unwrap();
        assert_eq!(a.term, GroupTerm::gen(0));
        let e = sw_approximate(&g, &vals(&[("a", q(1, 4)), ("b", q(0, 1))]), &q(1, 6)).unwrap_err();
        assert!(matches!(
            e,
            Error::Precondition {
                code: "target-not-in-value-group",
                ..
            }
        ));
    }

    #[test]
    fn approximate_needs_lattice() {
        // A single generator on three points: targets off the affine span
        // of (g, 1) need the lattice combination.
        let g = group(&[("a", 1), ("b", 2), ("c", 1)], &[&[q(0, 1), q(1, 2), q(1, 1)]]);
        let target = vals(&[("a", q(0, 1)), ("b", q(1, 2)), ("c", q(0, 1))]);
        let a = sw_approximate(&g, &target, &q(1, 10)).unwrap();
        assert!(a.error.is_zero(), "{} has error {}", a.term, a.error);
        assert_eq!(eval_term(&g, &a.term).unwrap(), target);
    }

    #[test]
    fn integer_solver() {
        let a = vec![vec![big(2), big(4)], vec![big(1), big(3)]];
        let c = solve_integer(&a, &[big(2), big(2)]).unwrap();
        assert_eq!(big(2) * &c[0] + big(4) * &c[1], big(2));
        assert_eq!(&c[0] + big(3) * &c[1], big(2));
        assert!(solve_integer(&[vec![big(2), big(4)]], &[big(3)]).is_none());
        assert!(solve_integer(&[vec![big(1), big(1)], vec![big(1), big(1)]], &[big(1), big(2)]).is_none());
    }

    #[test]
    fn completeness_examples() {
        let g = group(&[("a", 2), ("b", 3)], &[&[q(1, 2), q(1, 3)]]);
        let r = completeness_check(&g).unwrap();
        assert!(r.is_complete() && r.eps_iso);
        let g = group(&[("a", 2)], &[]);
        let r = completeness_check(&g).unwrap();
        assert!(!r.is_complete());
        assert_eq!(r.unreachable, Some(("a".to_string(), q(1, 2))));
        assert!(completeness_check(&group(&[("a", 1)], &[])).unwrap().is_complete());
        assert!(completeness_check(&group(&[("a", 0)], &[])).is_err());
    }
}
