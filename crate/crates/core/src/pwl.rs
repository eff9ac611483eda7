//! Continuous piecewise-affine functions on `[0, 1]` with integer
//! coefficients, the ℓ-group ∇.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::aspace::FinASpace;
use crate::divlat::{den_rat, divides, DivNat};
use crate::lgroup::{value_group_of, FnGroup, Values};
use crate::scalar::{ratio_int, Int};
use crate::{Error, Result};

/// The affine map `x ↦ z1·x + z2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Piece<I: Int = BigInt> {
    pub z1: I,
    pub z2: I,
}

impl<I: Int> Piece<I> {
    pub fn new(z1: I, z2: I) -> Self {
        Piece { z1, z2 }
    }

    pub fn at(&self, x: &Ratio<I>) -> Ratio<I> {
        x * ratio_int(self.z1.clone()) + ratio_int(self.z2.clone())
    }
}

/// Breakpoints `0 = b_0 < … < b_k = 1` and one piece per `[b_i, b_{i+1}]`,
/// kept canonical: adjacent pieces always differ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPwl<I: Int = BigInt> {
    breakpoints: Vec<Ratio<I>>,
    pieces: Vec<Piece<I>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PwlOp {
    Add,
    Sub,
    Join,
    Meet,
}

impl FromStr for PwlOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "add" => Ok(PwlOp::Add),
            "-" | "sub" => Ok(PwlOp::Sub),
            "∨" | "max" | "join" => Ok(PwlOp::Join),
            "∧" | "min" | "meet" => Ok(PwlOp::Meet),
            _ => Err(Error::Malformed(format!("unknown operation {s:?}"))),
        }
    }
}

impl fmt::Display for PwlOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PwlOp::Add => "+",
            PwlOp::Sub => "-",
            PwlOp::Join => "∨",
            PwlOp::Meet => "∧",
        })
    }
}

impl<I: Int> IntPwl<I> {
    /// Validates shape and continuity, then merges equal adjacent pieces.
    pub fn new(breakpoints: Vec<Ratio<I>>, pieces: Vec<Piece<I>>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::Malformed("need at least the breakpoints 0 and 1".into()));
        }
        if !breakpoints[0].is_zero() || !breakpoints[breakpoints.len() - 1].is_one() {
            return Err(Error::Malformed("breakpoints must start at 0 and end at 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Malformed("breakpoints must be strictly increasing".into()));
        }
        if pieces.len() + 1 != breakpoints.len() {
            return Err(Error::Malformed(format!(
                "{} breakpoints need {} pieces, got {}",
                breakpoints.len(),
                breakpoints.len() - 1,
                pieces.len()
            )));
        }
        for (i, b) in breakpoints[1..breakpoints.len() - 1].iter().enumerate() {
            if pieces[i].at(b) != pieces[i + 1].at(b) {
                return Err(Error::Malformed(format!("pieces {} and {} disagree at {b}", i, i + 1)));
            }
        }
        Ok(Self::merged(breakpoints, pieces))
    }

    fn merged(breakpoints: Vec<Ratio<I>>, pieces: Vec<Piece<I>>) -> Self {
        let mut bs = vec![breakpoints[0].clone()];
        let mut ps: Vec<Piece<I>> = Vec::new();
        for (p, b) in pieces.into_iter().zip(breakpoints.into_iter().skip(1)) {
            if ps.last() == Some(&p) {
                *bs.last_mut().expect("nonempty") = b;
            } else {
                ps.push(p);
                bs.push(b);
            }
        }
        IntPwl {
            breakpoints: bs,
            pieces: ps,
        }
    }

    pub fn affine(z1: I, z2: I) -> Self {
        IntPwl {
            breakpoints: vec![Ratio::zero(), Ratio::one()],
            pieces: vec![Piece::new(z1, z2)],
        }
    }

    pub fn identity() -> Self {
        Self::affine(I::one(), I::zero())
    }

    pub fn constant(c: I) -> Self {
        Self::affine(I::zero(), c)
    }

    pub fn breakpoints(&self) -> &[Ratio<I>] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Piece<I>] {
        &self.pieces
    }

    fn piece_at(&self, x: &Ratio<I>) -> &Piece<I> {
        // Pieces are left-closed; the last one also owns 1.
        let i = self.breakpoints[1..].partition_point(|b| b <= x);
        &self.pieces[i.min(self.pieces.len() - 1)]
    }

    pub fn eval(&self, x: &Ratio<I>) -> Result<Ratio<I>> {
        check_unit(x)?;
        Ok(self.piece_at(x).at(x))
    }

    pub fn combine(&self, other: &IntPwl<I>, op: PwlOp) -> IntPwl<I> {
        let cuts: BTreeSet<Ratio<I>> = self
            .breakpoints
            .iter()
            .chain(other.breakpoints.iter())
            .cloned()
            .collect();
        let cuts: Vec<Ratio<I>> = cuts.into_iter().collect();
        let mut bs = vec![cuts[0].clone()];
        let mut ps = Vec::new();
        let two = ratio_int(I::one() + I::one());
        for w in cuts.windows(2) {
            let (lo, hi) = (&w[0], &w[1]);
            let mid = (lo + hi) / two.clone();
            let (f, g) = (self.piece_at(&mid), other.piece_at(&mid));
            let mut ends = vec![lo.clone()];
            if matches!(op, PwlOp::Join | PwlOp::Meet) && f.z1 != g.z1 {
                let cross = Ratio::new(g.z2.clone() - f.z2.clone(), f.z1.clone() - g.z1.clone());
                if *lo < cross && cross < *hi {
                    ends.push(cross);
                }
            }
            ends.push(hi.clone());
            for s in ends.windows(2) {
                let m = (&s[0] + &s[1]) / two.clone();
                let piece = match op {
                    PwlOp::Add => Piece::new(f.z1.clone() + g.z1.clone(), f.z2.clone() + g.z2.clone()),
                    PwlOp::Sub => Piece::new(f.z1.clone() - g.z1.clone(), f.z2.clone() - g.z2.clone()),
                    PwlOp::Join | PwlOp::Meet => {
                        let f_wins = (f.at(&m) >= g.at(&m)) == (op == PwlOp::Join);
                        if f_wins {
                            f.clone()
                        } else {
                            g.clone()
                        }
                    }
                };
                ps.push(piece);
                bs.push(s[1].clone());
            }
        }
        Self::merged(bs, ps)
    }

    /// Sup norm, attained at a breakpoint.
    pub fn norm(&self) -> Ratio<I> {
        self.breakpoints
            .iter()
            .map(|b| self.piece_at(b).at(b).abs())
            .max()
            .expect("nonempty")
    }

    /// `den f(x) | den x` at every sample.
    pub fn is_amap(&self, samples: &[Ratio<I>]) -> bool {
        samples.iter().all(|x| match self.eval(x) {
            Ok(v) => divides(&den_rat(&v), &den_rat(x)),
            Err(_) => false,
        })
    }
}

fn check_unit<I: Int>(x: &Ratio<I>) -> Result<()> {
    if x.is_negative() || *x > Ratio::one() {
        return Err(Error::pre("out-of-range", format!("{x} is not in [0, 1]")));
    }
    Ok(())
}

/// `d` with `(1/d)ℤ` the value group at `x`: of all of ∇ when `fs` is empty
/// (which is `den x`), otherwise of `{f(x) : f ∈ fs} ∪ {1}`.
pub fn value_group<I: Int>(fs: &[IntPwl<I>], x: &Ratio<I>) -> Result<DivNat<I>> {
    if fs.is_empty() {
        check_unit(x)?;
        return Ok(den_rat(x));
    }
    let vals = fs.iter().map(|f| f.eval(x)).collect::<Result<Vec<_>>>()?;
    Ok(value_group_of(vals.iter()))
}

/// Restricts `fs` to `points`, giving a function group on the carrier with
/// `ζ = den`. Points are labelled by their rational value.
pub fn sample<I: Int>(fs: &[IntPwl<I>], points: &[Ratio<I>]) -> Result<FnGroup<I>> {
    let mut zeta = BTreeMap::new();
    for p in points {
        check_unit(p)?;
        if zeta.insert(p.to_string(), den_rat(p)).is_some() {
            return Err(Error::pre("duplicate-point", format!("{p} is sampled twice")));
        }
    }
    let gens: Vec<Values<I>> = fs
        .iter()
        .map(|f| {
            points
                .iter()
                .map(|p| Ok((p.to_string(), f.eval(p)?)))
                .collect::<Result<Values<I>>>()
        })
        .collect::<Result<_>>()?;
    FnGroup::new(FinASpace::new(zeta), gens)
}
