//! Finite discrete a-spaces, a-maps between them, products and the
//! arithmetic separation property.
//!
//! Every subset of a finite discrete space is clopen, so the closed-preimage
//! axiom holds trivially and separation only has to respect the rule that a
//! point left outside both separating sets carries denominator `0`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::divlat::{divides, DivNat};
use crate::scalar::Int;
use crate::{Error, Result};

pub type Label = String;
pub type Subset = BTreeSet<Label>;

/// A finite discrete space whose points carry a denominator `ζ`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FinASpace<I: Int = BigInt> {
    points: BTreeMap<Label, DivNat<I>>,
}

impl<I: Int> FinASpace<I> {
    pub fn new(points: BTreeMap<Label, DivNat<I>>) -> Self {
        FinASpace { points }
    }

    pub fn from_pairs<L: Into<Label>>(pairs: impl IntoIterator<Item = (L, u64)>) -> Self {
        FinASpace {
            points: pairs
                .into_iter()
                .map(|(l, z)| (l.into(), DivNat::from_u64(z)))
                .collect(),
        }
    }

    pub fn points(&self) -> &BTreeMap<Label, DivNat<I>> {
        &self.points
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.points.keys()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &str) -> bool {
        self.points.contains_key(x)
    }

    pub fn zeta(&self, x: &str) -> Result<&DivNat<I>> {
        self.points
            .get(x)
            .ok_or_else(|| Error::Malformed(format!("unknown point {x:?}")))
    }

    pub fn all(&self) -> Subset {
        self.points.keys().cloned().collect()
    }

    /// Checks that every label of `s` is a point of the space.
    pub fn check_subset(&self, s: &Subset) -> Result<()> {
        match s.iter().find(|x| !self.contains(x)) {
            Some(x) => Err(Error::Malformed(format!("unknown point {x:?}"))),
            None => Ok(()),
        }
    }

    pub fn complement(&self, s: &Subset) -> Subset {
        self.points.keys().filter(|x| !s.contains(*x)).cloned().collect()
    }
}

/// A function between finite a-spaces, not yet known to be an a-map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AMapFin<I: Int = BigInt> {
    pub source: FinASpace<I>,
    pub target: FinASpace<I>,
    pub assignment: BTreeMap<Label, Label>,
}

impl<I: Int> AMapFin<I> {
    pub fn identity(space: &FinASpace<I>) -> Self {
        AMapFin {
            source: space.clone(),
            target: space.clone(),
            assignment: space.labels().map(|x| (x.clone(), x.clone())).collect(),
        }
    }

    /// Composition `other ∘ self`.
    pub fn then(&self, other: &AMapFin<I>) -> Result<AMapFin<I>> {
        let mut assignment = BTreeMap::new();
        for (x, y) in &self.assignment {
            let z = other
                .assignment
                .get(y)
                .ok_or_else(|| Error::Malformed(format!("composite undefined at {y:?}")))?;
            assignment.insert(x.clone(), z.clone());
        }
        Ok(AMapFin {
            source: self.source.clone(),
            target: other.target.clone(),
            assignment,
        })
    }
}

/// Whether `f` decreases denominators: `ζ_target(f(x))` divides `ζ_source(x)`
/// at every point. Continuity is automatic on discrete spaces.
pub fn check_amap<I: Int>(f: &AMapFin<I>) -> Result<bool> {
    for (x, zx) in f.source.points() {
        let y = f
            .assignment
            .get(x)
            .ok_or_else(|| Error::Malformed(format!("assignment undefined at {x:?}")))?;
        let zy = f.target.zeta(y)?;
        if !divides(zy, zx) {
            return Ok(false);
        }
    }
    if let Some(x) = f.assignment.keys().find(|x| !f.source.contains(x)) {
        return Err(Error::Malformed(format!("assignment mentions unknown point {x:?}")));
    }
    Ok(true)
}

pub fn pair_label(x: &str, y: &str) -> Label {
    format!("({x},{y})")
}

/// Binary product with the initial-lift denominator `ζ(x, y) = lcm(ζ(x), ζ(y))`.
/// Points are labelled `"(x,y)"`.
pub fn product<I: Int>(x: &FinASpace<I>, y: &FinASpace<I>) -> FinASpace<I> {
    let mut points = BTreeMap::new();
    for (a, za) in x.points() {
        for (b, zb) in y.points() {
            points.insert(pair_label(a, b), za.join(zb));
        }
    }
    FinASpace::new(points)
}

/// The two projections out of `product(x, y)`.
pub fn projections<I: Int>(x: &FinASpace<I>, y: &FinASpace<I>) -> (AMapFin<I>, AMapFin<I>) {
    let prod = product(x, y);
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for a in x.labels() {
        for b in y.labels() {
            left.insert(pair_label(a, b), a.clone());
            right.insert(pair_label(a, b), b.clone());
        }
    }
    (
        AMapFin {
            source: prod.clone(),
            target: x.clone(),
            assignment: left,
        },
        AMapFin {
            source: prod,
            target: y.clone(),
            assignment: right,
        },
    )
}

/// The map `z ↦ (f(z), g(z))` into the product of the targets.
pub fn pairing<I: Int>(f: &AMapFin<I>, g: &AMapFin<I>) -> Result<AMapFin<I>> {
    if f.source != g.source {
        return Err(Error::pre("pairing-source", "maps have different sources"));
    }
    let mut assignment = BTreeMap::new();
    for z in f.source.labels() {
        let (Some(a), Some(b)) = (f.assignment.get(z), g.assignment.get(z)) else {
            return Err(Error::Malformed(format!("assignment undefined at {z:?}")));
        };
        assignment.insert(z.clone(), pair_label(a, b));
    }
    Ok(AMapFin {
        source: f.source.clone(),
        target: product(&f.target, &g.target),
        assignment,
    })
}

/// Separating witness for a pair of distinct points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairWitness {
    pub x: Label,
    pub y: Label,
    pub u: Subset,
    pub v: Subset,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalityReport {
    pub n1: &'static str,
    pub n2: &'static str,
    pub n3: Vec<PairWitness>,
}

/// Emits the a-normality witnesses of a finite discrete space.
///
/// N1 and N2 hold because the space is finite and discrete. For N3′ each
/// ordered pair `x ≠ y` gets `U = {x}` and `V = X \ {x}`, which leave no point
/// outside `U ∪ V`.
pub fn verify_anormal<I: Int>(x: &FinASpace<I>) -> NormalityReport {
    let mut n3 = Vec::new();
    for a in x.labels() {
        for b in x.labels() {
            if a == b {
                continue;
            }
            let u: Subset = [a.clone()].into_iter().collect();
            let v = x.complement(&u);
            n3.push(PairWitness {
                x: a.clone(),
                y: b.clone(),
                u,
                v,
            });
        }
    }
    NormalityReport {
        n1: "finite discrete spaces are compact Hausdorff",
        n2: "every subset of a discrete space is closed",
        n3,
    }
}

/// Where points outside both sets to be separated end up.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SeparationPolicy {
    /// Points with `ζ ≠ 0` join `U`.
    #[default]
    LeftoverToU,
    /// Points with `ζ ≠ 0` join `V`.
    LeftoverToV,
}

/// Separates disjoint `a` and `b` by disjoint `U ⊇ a`, `V ⊇ b` such that every
/// point outside `U ∪ V` has `ζ = 0`. Leftover points with `ζ = 0` stay out of
/// both sets.
pub fn separate<I: Int>(
    x: &FinASpace<I>,
    a: &Subset,
    b: &Subset,
    policy: SeparationPolicy,
) -> Result<(Subset, Subset)> {
    x.check_subset(a)?;
    x.check_subset(b)?;
    if let Some(p) = a.intersection(b).next() {
        return Err(Error::pre(
            "separate-overlap",
            format!("sets to separate share point {p}"),
        ));
    }
    let mut u = a.clone();
    let mut v = b.clone();
    for (p, z) in x.points() {
        if a.contains(p) || b.contains(p) || z.is_top() {
            continue;
        }
        match policy {
            SeparationPolicy::LeftoverToU => u.insert(p.clone()),
            SeparationPolicy::LeftoverToV => v.insert(p.clone()),
        };
    }
    Ok((u, v))
}
