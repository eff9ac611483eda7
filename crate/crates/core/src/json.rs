//! The JSON exchange format.
//!
//! Rationals are strings `"p/q"` (or `"p"` for integers). Objects serialise
//! with sorted keys, so equal values always produce identical bytes.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde_json::{json, Map, Value};

use crate::adc::{AdcSet, Component, RatRegion};
use crate::aspace::{AMapFin, FinASpace, Label, NormalityReport, Subset};
use crate::divlat::DivNat;
use crate::draft::{Draft, Level, RatFunction};
use crate::lgroup::{Approximation, CompletenessReport, EtaReport, FnGroup, GroupTerm, SwReport, Values};
use crate::pwl::{IntPwl, Piece};
use crate::scalar::{parse_ratio, Int};
use crate::{Error, Result};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

pub trait FromJson: Sized {
    fn from_json(v: &Value) -> Result<Self>;
}

/// Parses a JSON document and then the value it encodes.
pub fn parse<T: FromJson>(text: &str) -> Result<T> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Malformed(format!("invalid JSON: {e}")))?;
    T::from_json(&v)
}

/// Compact canonical text.
pub fn to_string<T: ToJson + ?Sized>(t: &T) -> String {
    t.to_json().to_string()
}

fn bad(what: &str, v: &Value) -> Error {
    Error::Malformed(format!("expected {what}, got {v}"))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::Malformed(format!("missing field {key:?} in {v}")))
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(what, v))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(what, v))
}

/// Integers are JSON numbers when they fit `i64`, strings otherwise.
pub fn int_to_json<I: Int>(n: &I) -> Value {
    match n.to_i64() {
        Some(k) => json!(k),
        None => Value::String(n.to_string()),
    }
}

pub fn int_from_json<I: Int>(v: &Value) -> Result<I> {
    let text = match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return Err(bad("an integer", v)),
    };
    I::from_str(&text).map_err(|_| bad("an integer", v))
}

impl<I: Int> ToJson for Ratio<I> {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl<I: Int> FromJson for Ratio<I> {
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_ratio(s).ok_or_else(|| bad("a rational \"p/q\"", v)),
            Value::Number(_) => int_from_json::<I>(v).map(Ratio::from_integer),
            _ => Err(bad("a rational \"p/q\"", v)),
        }
    }
}

impl<I: Int> ToJson for DivNat<I> {
    fn to_json(&self) -> Value {
        int_to_json(self.value())
    }
}

impl<I: Int> FromJson for DivNat<I> {
    fn from_json(v: &Value) -> Result<Self> {
        DivNat::new(int_from_json(v)?)
    }
}

impl ToJson for Subset {
    fn to_json(&self) -> Value {
        Value::Array(self.iter().map(|s| Value::String(s.clone())).collect())
    }
}

impl FromJson for Subset {
    fn from_json(v: &Value) -> Result<Self> {
        array(v, "a list of point labels")?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| bad("a point label", s)))
            .collect()
    }
}

impl<I: Int> ToJson for Values<I> {
    fn to_json(&self) -> Value {
        Value::Object(self.iter().map(|(k, r)| (k.clone(), r.to_json())).collect())
    }
}

impl<I: Int> FromJson for Values<I> {
    fn from_json(v: &Value) -> Result<Self> {
        object(v, "a map from point labels to rationals")?
            .iter()
            .map(|(k, r)| Ok((k.clone(), Ratio::from_json(r)?)))
            .collect()
    }
}

impl<I: Int> ToJson for Component<I> {
    fn to_json(&self) -> Value {
        match self {
            Component::Point(p) => json!({ "point": p.to_json() }),
            Component::Interval(lo, hi) => json!({ "interval": [lo.to_json(), hi.to_json()] }),
        }
    }
}

impl<I: Int> FromJson for Component<I> {
    fn from_json(v: &Value) -> Result<Self> {
        if let Some(p) = v.get("point") {
            return Ok(Component::Point(Ratio::from_json(p)?));
        }
        if let Some(iv) = v.get("interval") {
            let ends = array(iv, "an interval [lo, hi]")?;
            if ends.len() != 2 {
                return Err(bad("an interval [lo, hi]", iv));
            }
            return Component::closed(Ratio::from_json(&ends[0])?, Ratio::from_json(&ends[1])?);
        }
        Err(bad("{\"point\": …} or {\"interval\": […]}", v))
    }
}

impl<I: Int> ToJson for RatRegion<I> {
    fn to_json(&self) -> Value {
        Value::Array(self.components.iter().map(ToJson::to_json).collect())
    }
}

impl<I: Int> FromJson for RatRegion<I> {
    fn from_json(v: &Value) -> Result<Self> {
        let components = array(v, "a list of region components")?
            .iter()
            .map(Component::from_json)
            .collect::<Result<_>>()?;
        Ok(RatRegion { components })
    }
}

impl<I: Int> ToJson for AdcSet<I> {
    fn to_json(&self) -> Value {
        let gens: Vec<Value> = self.generators().iter().map(int_to_json).collect();
        let excluded = match self.exclusions() {
            Some(f) => Value::Array(f.iter().map(int_to_json).collect()),
            None => Value::Null,
        };
        json!({
            "contains_zero": self.contains_zero(),
            "generators": gens,
            "excluded": excluded,
            "display": self.to_string(),
        })
    }
}

impl<I: Int> FromJson for AdcSet<I> {
    fn from_json(v: &Value) -> Result<Self> {
        let nonempty = field(v, "contains_zero")?
            .as_bool()
            .ok_or_else(|| bad("a boolean", v))?;
        if !nonempty {
            return Ok(AdcSet::empty());
        }
        match v.get("excluded") {
            Some(Value::Null) | None => {}
            Some(ex) => {
                let f = array(ex, "a list of excluded naturals")?
                    .iter()
                    .map(int_from_json)
                    .collect::<Result<BTreeSet<I>>>()?;
                return Ok(AdcSet::cofinite(f));
            }
        }
        let mut out = AdcSet::multiples(&DivNat::top());
        for g in array(field(v, "generators")?, "a list of generators")? {
            out = out.union(&AdcSet::multiples(&DivNat::from_json(g)?));
        }
        Ok(out)
    }
}

impl<I: Int> ToJson for FinASpace<I> {
    fn to_json(&self) -> Value {
        let points: Map<String, Value> = self.points().iter().map(|(k, z)| (k.clone(), z.to_json())).collect();
        json!({ "points": points })
    }
}

impl<I: Int> FromJson for FinASpace<I> {
    fn from_json(v: &Value) -> Result<Self> {
        let pts = object(field(v, "points")?, "a map from labels to denominators")?;
        let points = pts
            .iter()
            .map(|(k, z)| Ok((k.clone(), DivNat::from_json(z)?)))
            .collect::<Result<BTreeMap<Label, DivNat<I>>>>()?;
        Ok(FinASpace::new(points))
    }
}

impl<I: Int> ToJson for AMapFin<I> {
    fn to_json(&self) -> Value {
        let assignment: Map<String, Value> = self
            .assignment
            .iter()
            .map(|(x, y)| (x.clone(), Value::String(y.clone())))
            .collect();
        json!({
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "assignment": assignment,
        })
    }
}

impl<I: Int> FromJson for AMapFin<I> {
    fn from_json(v: &Value) -> Result<Self> {
        let assignment = object(field(v, "assignment")?, "a map from source to target labels")?
            .iter()
            .map(|(x, y)| {
                Ok((
                    x.clone(),
                    y.as_str().ok_or_else(|| bad("a target label", y))?.to_string(),
                ))
            })
            .collect::<Result<_>>()?;
        Ok(AMapFin {
            source: FinASpace::from_json(field(v, "source")?)?,
            target: FinASpace::from_json(field(v, "target")?)?,
            assignment,
        })
    }
}

impl<I: Int> ToJson for Draft<I> {
    fn to_json(&self) -> Value {
        let levels: Vec<Value> = self
            .levels
            .iter()
            .map(|(r, lv)| json!({ "r": r.to_json(), "down": lv.down.to_json(), "up": lv.up.to_json() }))
            .collect();
        json!({
            "space": self.space.to_json(),
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "levels": levels,
        })
    }
}

impl<I: Int> FromJson for Draft<I> {
    fn from_json(v: &Value) -> Result<Self> {
        let mut levels = BTreeMap::new();
        for lv in array(field(v, "levels")?, "a list of levels")? {
            let r = Ratio::from_json(field(lv, "r")?)?;
            let level = Level {
                down: Subset::from_json(field(lv, "down")?)?,
                up: Subset::from_json(field(lv, "up")?)?,
            };
            if levels.insert(r.clone(), level).is_some() {
                return Err(Error::Malformed(format!("level {r} appears twice")));
            }
        }
        Ok(Draft {
            space: FinASpace::from_json(field(v, "space")?)?,
            alpha: Ratio::from_json(field(v, "alpha")?)?,
            beta: Ratio::from_json(field(v, "beta")?)?,
            levels,
        })
    }
}

impl<I: Int> ToJson for RatFunction<I> {
    fn to_json(&self) -> Value {
        json!({
            "space": self.space.to_json(),
            "values": self.values.to_json(),
            "lo": self.lo.to_json(),
            "hi": self.hi.to_json(),
        })
    }
}

impl<I: Int> FromJson for RatFunction<I> {
    fn from_json(v: &Value) -> Result<Self> {
        let space = FinASpace::from_json(field(v, "space")?)?;
        let values = Values::from_json(field(v, "values")?)?;
        if values.keys().ne(space.labels()) {
            return Err(Error::Malformed(
                "function values must cover exactly the space's points".into(),
            ));
        }
        Ok(RatFunction {
            space,
            values,
            lo: Ratio::from_json(field(v, "lo")?)?,
            hi: Ratio::from_json(field(v, "hi")?)?,
        })
    }
}

impl<I: Int> ToJson for FnGroup<I> {
    fn to_json(&self) -> Value {
        json!({
            "space": self.space.to_json(),
            "generators": self.generators.iter().map(ToJson::to_json).collect::<Vec<_>>(),
        })
    }
}

impl<I: Int> FromJson for FnGroup<I> {
    fn from_json(v: &Value) -> Result<Self> {
        let space = FinASpace::from_json(field(v, "space")?)?;
        let gens = match v.get("generators") {
            None => Vec::new(),
            Some(g) => array(g, "a list of generators")?
                .iter()
                .map(Values::from_json)
                .collect::<Result<_>>()?,
        };
        FnGroup::new(space, gens)
    }
}

impl<I: Int> ToJson for GroupTerm<I> {
    fn to_json(&self) -> Value {
        match self {
            GroupTerm::Gen(i) => json!({ "gen": i + 1 }),
            GroupTerm::Const(c) => json!({ "const": int_to_json(c) }),
            GroupTerm::Add(a, b) => json!({ "+": [a.to_json(), b.to_json()] }),
            GroupTerm::Sub(a, b) => json!({ "-": [a.to_json(), b.to_json()] }),
            GroupTerm::Neg(a) => json!({ "-": [a.to_json()] }),
            GroupTerm::Scale(m, a) => json!({ "*": [int_to_json(m), a.to_json()] }),
            GroupTerm::Join(a, b) => json!({ "∨": [a.to_json(), b.to_json()] }),
            GroupTerm::Meet(a, b) => json!({ "∧": [a.to_json(), b.to_json()] }),
        }
    }
}

type Binary<I> = fn(Box<GroupTerm<I>>, Box<GroupTerm<I>>) -> GroupTerm<I>;

impl<I: Int> FromJson for GroupTerm<I> {
    fn from_json(v: &Value) -> Result<Self> {
        let obj = object(v, "a term object")?;
        if obj.len() != 1 {
            return Err(bad("a term object with exactly one operator", v));
        }
        let (op, arg) = obj.iter().next().expect("one entry");
        let args = || -> Result<Vec<GroupTerm<I>>> {
            array(arg, "a list of operands")?
                .iter()
                .map(GroupTerm::from_json)
                .collect()
        };
        let two = |ctor: Binary<I>| -> Result<GroupTerm<I>> {
            let mut a = args()?;
            if a.len() != 2 {
                return Err(bad("two operands", arg));
            }
            let b = a.pop().expect("two");
            let a = a.pop().expect("two");
            Ok(ctor(Box::new(a), Box::new(b)))
        };
        match op.as_str() {
            "gen" => {
                let i = arg
                    .as_u64()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| bad("a generator number ≥ 1", arg))?;
                Ok(GroupTerm::Gen(i as usize - 1))
            }
            "const" => Ok(GroupTerm::Const(int_from_json(arg)?)),
            "+" => two(GroupTerm::Add),
            "∨" => two(GroupTerm::Join),
            "∧" => two(GroupTerm::Meet),
            "-" => {
                let mut a = args()?;
                match a.len() {
                    1 => Ok(GroupTerm::Neg(Box::new(a.pop().expect("one")))),
                    2 => two(GroupTerm::Sub),
                    _ => Err(bad("one or two operands", arg)),
                }
            }
            "*" => {
                let a = array(arg, "[multiplier, term]")?;
                if a.len() != 2 {
                    return Err(bad("[multiplier, term]", arg));
                }
                Ok(GroupTerm::Scale(
                    int_from_json(&a[0])?,
                    Box::new(GroupTerm::from_json(&a[1])?),
                ))
            }
            _ => Err(Error::Malformed(format!("unknown term operator {op:?}"))),
        }
    }
}

impl<I: Int> ToJson for IntPwl<I> {
    fn to_json(&self) -> Value {
        json!({
            "breakpoints": self.breakpoints().iter().map(ToJson::to_json).collect::<Vec<_>>(),
            "pieces": self
                .pieces()
                .iter()
                .map(|p| json!({ "z1": int_to_json(&p.z1), "z2": int_to_json(&p.z2) }))
                .collect::<Vec<_>>(),
        })
    }
}

impl<I: Int> FromJson for IntPwl<I> {
    fn from_json(v: &Value) -> Result<Self> {
        let bps = array(field(v, "breakpoints")?, "a list of breakpoints")?
            .iter()
            .map(Ratio::from_json)
            .collect::<Result<_>>()?;
        let pieces = array(field(v, "pieces")?, "a list of pieces")?
            .iter()
            .map(|p| {
                Ok(Piece::new(
                    int_from_json(field(p, "z1")?)?,
                    int_from_json(field(p, "z2")?)?,
                ))
            })
            .collect::<Result<_>>()?;
        IntPwl::new(bps, pieces)
    }
}

impl ToJson for NormalityReport {
    fn to_json(&self) -> Value {
        let n3: Vec<Value> = self
            .n3
            .iter()
            .map(|w| json!({ "x": w.x, "y": w.y, "u": w.u.to_json(), "v": w.v.to_json() }))
            .collect();
        json!({ "n1": self.n1, "n2": self.n2, "n3": n3 })
    }
}

fn den_map<I: Int>(m: &BTreeMap<Label, DivNat<I>>) -> Value {
    Value::Object(m.iter().map(|(k, z)| (k.clone(), z.to_json())).collect())
}

impl<I: Int> ToJson for EtaReport<I> {
    fn to_json(&self) -> Value {
        let corr: Map<String, Value> = self
            .correspondence
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({
            "zeta": den_map(&self.zeta),
            "zeta_prime": den_map(&self.zeta_prime),
            "correspondence": corr,
            "bijective": self.bijective,
            "denominators_preserved": self.denominators_preserved,
            "iso": self.is_iso(),
        })
    }
}

impl<I: Int> ToJson for SwReport<I> {
    fn to_json(&self) -> Value {
        json!({
            "holds": self.holds(),
            "separates": self.separates,
            "inseparable": self.inseparable.as_ref().map(|(x, y)| json!([x, y])),
            "denominators_match": self.denominators_match,
            "mismatch": self.mismatch.as_ref().map(|(x, z, d)| json!({
                "point": x, "zeta": z.to_json(), "value_group": d.to_json()
            })),
        })
    }
}

impl<I: Int> ToJson for Approximation<I> {
    fn to_json(&self) -> Value {
        json!({
            "term": self.term.to_string(),
            "tree": self.term.to_json(),
            "error": self.error.to_json(),
        })
    }
}

impl<I: Int> ToJson for CompletenessReport<I> {
    fn to_json(&self) -> Value {
        json!({
            "complete": self.is_complete(),
            "complete_on_carrier": self.complete_on_carrier,
            "eps_iso": self.eps_iso,
            "separates": self.separates,
            "spectral": den_map(&self.spectral),
            "unreachable": self.unreachable.as_ref().map(|(x, r)| json!({ "point": x, "value": r.to_json() })),
        })
    }
}
