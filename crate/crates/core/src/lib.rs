//! Arithmetic duality for finite a-spaces: the divisibility lattice,
//! arithmetic density, drafts and the arithmetic Urysohn lemma,
//! lattice-ordered groups of rational functions, and integer piecewise
//! linear maps.
//!
//! Everything is exact. The core is generic over the integer type `I` backing
//! `Ratio<I>`; the aliases below fix `I` to [`BigInt`] (the default) or `i64`.

pub mod adc;
pub mod aspace;
pub mod divlat;
pub mod draft;
mod error;
pub mod json;
pub mod lgroup;
pub mod pwl;
pub mod scalar;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::Ratio;

pub type Rat = Ratio<BigInt>;
pub type Rat64 = Ratio<i64>;
pub type Den = divlat::DivNat<BigInt>;
pub type Den64 = divlat::DivNat<i64>;
pub type Space = aspace::FinASpace<BigInt>;
pub type Space64 = aspace::FinASpace<i64>;
pub type Region = adc::RatRegion<BigInt>;
pub type Region64 = adc::RatRegion<i64>;
pub type Adc = adc::AdcSet<BigInt>;
pub type Adc64 = adc::AdcSet<i64>;
pub type Draft = draft::Draft<BigInt>;
pub type Draft64 = draft::Draft<i64>;
pub type RatFunction = draft::RatFunction<BigInt>;
pub type RatFunction64 = draft::RatFunction<i64>;
pub type FnGroup = lgroup::FnGroup<BigInt>;
pub type FnGroup64 = lgroup::FnGroup<i64>;
pub type GroupTerm = lgroup::GroupTerm<BigInt>;
pub type GroupTerm64 = lgroup::GroupTerm<i64>;
pub type IntPwl = pwl::IntPwl<BigInt>;
pub type IntPwl64 = pwl::IntPwl<i64>;
pub type Values = lgroup::Values<BigInt>;
