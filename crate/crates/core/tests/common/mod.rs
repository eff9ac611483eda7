//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use adual::aspace::{FinASpace, Label, Subset};
use adual::draft::{Draft, Level};
use adual::scalar::Int;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type R = Ratio<i64>;

/// Seed from `ADUAL_SEED`, or a fixed default.
pub fn seed() -> u64 {
    std::env::var("ADUAL_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_2024)
}

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn q(p: i64, d: i64) -> R {
    Ratio::new(p, d)
}

/// A rational with denominator at most `max_den` in `[lo, hi]`.
pub fn rat_in(rng: &mut impl Rng, lo: i64, hi: i64, max_den: i64) -> R {
    let d = rng.gen_range(1..=max_den);
    let p = rng.gen_range(lo * d..=hi * d);
    Ratio::new(p, d)
}

pub fn labels(n: usize) -> Vec<Label> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

pub fn space(zetas: &[u64]) -> FinASpace<i64> {
    FinASpace::from_pairs(labels(zetas.len()).into_iter().zip(zetas.iter().copied()))
}

pub fn subset(xs: &[&str]) -> Subset {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Every `p/n'` with `n' | n` lying in `[lo, hi]`, found by scanning numerators.
pub fn brute_admits(lo: &R, hi: &R, n: u64) -> bool {
    if lo > hi {
        return false;
    }
    if n == 0 {
        return true;
    }
    let n = n as i64;
    (1..=n).filter(|d| n % d == 0).any(|d| {
        let start = (lo * d).floor().to_integer() - 1;
        let end = (hi * d).ceil().to_integer() + 1;
        (start..=end).any(|p| {
            let r = q(p, d);
            *lo <= r && r <= *hi
        })
    })
}

/// A random admissible value for a point of denominator `z` in `[lo, hi]`,
/// by rejection over denominators dividing `z` (or up to 6 when `z = 0`).
pub fn admissible_value(rng: &mut impl Rng, lo: &R, hi: &R, z: u64) -> Option<R> {
    let dens: Vec<i64> = if z == 0 {
        (1..=6).collect()
    } else {
        (1..=z as i64).filter(|d| z as i64 % d == 0).collect()
    };
    let mut cands = Vec::new();
    for d in dens {
        let start = (lo * d).ceil().to_integer();
        let end = (hi * d).floor().to_integer();
        for p in start..=end {
            let r = q(p, d);
            if !cands.contains(&r) {
                cands.push(r);
            }
        }
    }
    if cands.is_empty() {
        None
    } else {
        Some(cands[rng.gen_range(0..cands.len())])
    }
}

/// The draft of sublevel and superlevel sets of `f` at `levels`.
pub fn draft_of<I: Int>(
    space: FinASpace<I>,
    f: &BTreeMap<Label, Ratio<I>>,
    alpha: Ratio<I>,
    beta: Ratio<I>,
    levels: &[Ratio<I>],
) -> Draft<I> {
    let mut ls = BTreeMap::new();
    for r in levels.iter().chain([&alpha, &beta]) {
        let down = f.iter().filter(|(_, v)| *v <= r).map(|(k, _)| k.clone()).collect();
        let up = f.iter().filter(|(_, v)| *v >= r).map(|(k, _)| k.clone()).collect();
        ls.insert(r.clone(), Level { down, up });
    }
    Draft {
        space,
        alpha,
        beta,
        levels: ls,
    }
}

/// A random valid draft: ≤ 4 points with ζ ≤ 12, endpoints and ≤ 5 levels
/// with denominators ≤ 6, built from the level sets of a random a-map.
pub fn random_draft(rng: &mut impl Rng) -> Draft<i64> {
    loop {
        let a = rat_in(rng, 0, 1, 6);
        let b = rat_in(rng, 0, 1, 6);
        let (alpha, beta) = if a <= b { (a, b) } else { (b, a) };
        let n = rng.gen_range(1..=4);
        let zetas: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=12)).collect();
        let x = space(&zetas);
        let mut f = BTreeMap::new();
        let mut ok = true;
        for (l, z) in labels(n).into_iter().zip(&zetas) {
            match admissible_value(rng, &alpha, &beta, *z) {
                Some(v) => {
                    f.insert(l, v);
                }
                None => ok = false,
            }
        }
        if !ok {
            continue;
        }
        let k = rng.gen_range(0..=3);
        let mut levels = Vec::new();
        for _ in 0..k {
            let r = rat_in(rng, 0, 1, 6);
            if alpha < r && r < beta && !levels.contains(&r) {
                levels.push(r);
            }
        }
        return draft_of(x, &f, alpha, beta, &levels);
    }
}
