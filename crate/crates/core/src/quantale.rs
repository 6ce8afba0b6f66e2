//! Commutative unital quantales and their built-in instances.
//!
//! A quantale here is a complete lattice with a commutative monoid
//! structure whose tensor preserves suprema in each variable. Only four
//! builtins are supported: the two-element quantale `bool2`, the cost
//! quantale `[0,∞]` with reversed order, Lukasiewicz chains, and a small
//! three-element chain whose unit is strictly below the top (used for
//! negative tests of the `k = ⊤` preconditions).

use crate::error::{Error, Result};
use crate::report::{Counterexample, LawReport};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rational = num_rational::Ratio<i64>;

/// An element of the extended non-negative reals `[0, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cost {
    Finite(Rational),
    Infinite,
}

impl Cost {
    pub fn zero() -> Cost {
        Cost::Finite(Rational::new(0, 1))
    }

    pub fn from_int(n: i64) -> Cost {
        Cost::Finite(Rational::new(n, 1))
    }

    pub fn ratio(num: i64, den: i64) -> Cost {
        Cost::Finite(Rational::new(num, den))
    }

    /// Real-number comparison (∞ greatest).
    pub fn real_leq(self, other: Cost) -> bool {
        match (self, other) {
            (_, Cost::Infinite) => true,
            (Cost::Infinite, _) => false,
            (Cost::Finite(a), Cost::Finite(b)) => a <= b,
        }
    }

    pub fn add(self, other: Cost) -> Cost {
        match (self, other) {
            (Cost::Finite(a), Cost::Finite(b)) => Cost::Finite(a + b),
            _ => Cost::Infinite,
        }
    }

    /// Truncated difference `max(self - other, 0)`, with `∞ - v = ∞` and
    /// `v - ∞ = 0` for finite `v`.
    pub fn truncated_sub(self, other: Cost) -> Cost {
        match (self, other) {
            (_, Cost::Infinite) => Cost::zero(),
            (Cost::Infinite, _) => Cost::Infinite,
            (Cost::Finite(a), Cost::Finite(b)) => {
                if a > b {
                    Cost::Finite(a - b)
                } else {
                    Cost::zero()
                }
            }
        }
    }
}

/// An opaque element of a specific quantale's carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Value {
    /// `bool2` element.
    Bool(bool),
    /// Cost quantale element.
    Cost(Cost),
    /// Chain level index (Lukasiewicz chains and `three_chain`).
    Level(u32),
}

/// Aggregation mode for [`Quantale::aggregate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aggregate {
    Join,
    Meet,
}

/// Law-check mode for [`check_quantale_laws`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { seed: u64, n: usize },
}

/// One of the four built-in quantales.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantale {
    /// `({⊥ < ⊤}, ∧, ⊤)`.
    Bool2,
    /// `(([0,∞], ≥), +, 0)` — joins are real infima, ⊥ = ∞, ⊤ = 0.
    Cost,
    /// Chain `{0, 1/n, …, 1}` with `x ⊗ y = max(0, x + y − 1)`, `k = 1`.
    Lukasiewicz { levels: u32 },
    /// `{⊥ < k < ⊤}` with `⊤ ⊗ ⊤ = ⊤`; the one builtin with `k < ⊤`.
    ThreeChain,
}

/// Builds one of the builtins by name. `params` carries `levels` for
/// `lukasiewicz`.
pub fn make_builtin(name: &str, levels: Option<u32>) -> Result<Quantale> {
    match name {
        "bool2" => Ok(Quantale::Bool2),
        "cost" => Ok(Quantale::Cost),
        "lukasiewicz" => {
            let levels = levels.ok_or_else(|| {
                Error::Precondition("lukasiewicz requires a `levels` parameter".into())
            })?;
            if levels < 2 {
                return Err(Error::BadLevels(levels));
            }
            Ok(Quantale::Lukasiewicz { levels })
        }
        "three_chain" => Ok(Quantale::ThreeChain),
        other => Err(Error::UnknownBuiltin(other.into())),
    }
}

impl Quantale {
    pub fn name(&self) -> String {
        match self {
            Quantale::Bool2 => "bool2".into(),
            Quantale::Cost => "cost".into(),
            Quantale::Lukasiewicz { levels } => format!("lukasiewicz({levels})"),
            Quantale::ThreeChain => "three_chain".into(),
        }
    }

    pub fn contains(&self, v: Value) -> bool {
        match (self, v) {
            (Quantale::Bool2, Value::Bool(_)) => true,
            (Quantale::Cost, Value::Cost(c)) => match c {
                Cost::Infinite => true,
                Cost::Finite(r) => r >= Rational::new(0, 1),
            },
            (Quantale::Lukasiewicz { levels }, Value::Level(i)) => i <= *levels,
            (Quantale::ThreeChain, Value::Level(i)) => i <= 2,
            _ => false,
        }
    }

    pub fn guard(&self, v: Value) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::ForeignValue {
                quantale: self.name(),
                value: format!("{v:?}"),
            })
        }
    }

    pub fn bottom(&self) -> Value {
        match self {
            Quantale::Bool2 => Value::Bool(false),
            Quantale::Cost => Value::Cost(Cost::Infinite),
            Quantale::Lukasiewicz { .. } | Quantale::ThreeChain => Value::Level(0),
        }
    }

    pub fn top(&self) -> Value {
        match self {
            Quantale::Bool2 => Value::Bool(true),
            Quantale::Cost => Value::Cost(Cost::zero()),
            Quantale::Lukasiewicz { levels } => Value::Level(*levels),
            Quantale::ThreeChain => Value::Level(2),
        }
    }

    pub fn unit(&self) -> Value {
        match self {
            Quantale::ThreeChain => Value::Level(1),
            _ => self.top(),
        }
    }

    pub fn unit_is_top(&self) -> bool {
        self.unit() == self.top()
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Quantale::Cost)
    }

    /// Carrier in ascending order, for finite quantales.
    pub fn elements(&self) -> Option<Vec<Value>> {
        match self {
            Quantale::Bool2 => Some(vec![Value::Bool(false), Value::Bool(true)]),
            Quantale::Cost => None,
            Quantale::Lukasiewicz { levels } => {
                Some((0..=*levels).map(Value::Level).collect())
            }
            Quantale::ThreeChain => Some((0..=2).map(Value::Level).collect()),
        }
    }

    /// The quantale order. All builtins are chains.
    pub fn leq(&self, u: Value, v: Value) -> Result<bool> {
        self.guard(u)?;
        self.guard(v)?;
        Ok(match (u, v) {
            (Value::Bool(a), Value::Bool(b)) => !a || b,
            // Order reversed: smaller reals sit higher.
            (Value::Cost(a), Value::Cost(b)) => b.real_leq(a),
            (Value::Level(a), Value::Level(b)) => a <= b,
            _ => unreachable!(),
        })
    }

    pub fn tensor(&self, u: Value, v: Value) -> Result<Value> {
        self.guard(u)?;
        self.guard(v)?;
        Ok(match (self, u, v) {
            (Quantale::Bool2, Value::Bool(a), Value::Bool(b)) => Value::Bool(a && b),
            (Quantale::Cost, Value::Cost(a), Value::Cost(b)) => Value::Cost(a.add(b)),
            (Quantale::Lukasiewicz { levels }, Value::Level(i), Value::Level(j)) => {
                Value::Level((i + j).saturating_sub(*levels))
            }
            (Quantale::ThreeChain, Value::Level(i), Value::Level(j)) => {
                if i == 0 || j == 0 {
                    Value::Level(0)
                } else {
                    Value::Level(i.max(j))
                }
            }
            _ => unreachable!(),
        })
    }

    /// Internal hom: the greatest `z` with `z ⊗ u ≤ v`.
    pub fn residual(&self, u: Value, v: Value) -> Result<Value> {
        self.guard(u)?;
        self.guard(v)?;
        Ok(match (self, u, v) {
            (Quantale::Bool2, Value::Bool(a), Value::Bool(b)) => Value::Bool(!a || b),
            (Quantale::Cost, Value::Cost(a), Value::Cost(b)) => {
                Value::Cost(b.truncated_sub(a))
            }
            (Quantale::Lukasiewicz { levels }, Value::Level(i), Value::Level(j)) => {
                Value::Level((*levels).min(*levels - i + j))
            }
            (Quantale::ThreeChain, Value::Level(i), Value::Level(j)) => match i {
                0 => Value::Level(2),
                1 => Value::Level(j),
                _ => {
                    if j == 2 {
                        Value::Level(2)
                    } else {
                        Value::Level(0)
                    }
                }
            },
            _ => unreachable!(),
        })
    }

    pub fn join2(&self, u: Value, v: Value) -> Result<Value> {
        Ok(if self.leq(u, v)? { v } else { u })
    }

    pub fn meet2(&self, u: Value, v: Value) -> Result<Value> {
        Ok(if self.leq(u, v)? { u } else { v })
    }

    /// Join or meet of a finite collection; empty join is ⊥, empty meet ⊤.
    pub fn aggregate<I>(&self, values: I, mode: Aggregate) -> Result<Value>
    where
        I: IntoIterator<Item = Value>,
    {
        let mut acc = match mode {
            Aggregate::Join => self.bottom(),
            Aggregate::Meet => self.top(),
        };
        for v in values {
            acc = match mode {
                Aggregate::Join => self.join2(acc, v)?,
                Aggregate::Meet => self.meet2(acc, v)?,
            };
        }
        Ok(acc)
    }

    pub fn join<I: IntoIterator<Item = Value>>(&self, values: I) -> Result<Value> {
        self.aggregate(values, Aggregate::Join)
    }

    pub fn meet<I: IntoIterator<Item = Value>>(&self, values: I) -> Result<Value> {
        self.aggregate(values, Aggregate::Meet)
    }

    /// Renders a value as the literal used in JSON files and reports.
    pub fn format_value(&self, v: Value) -> String {
        match (self, v) {
            (Quantale::Bool2, Value::Bool(b)) => b.to_string(),
            (Quantale::Cost, Value::Cost(c)) => format_cost(c),
            (Quantale::Lukasiewicz { levels }, Value::Level(i)) => {
                format!("{}/{}", i, levels)
            }
            (Quantale::ThreeChain, Value::Level(i)) => {
                ["bot", "k", "top"][i as usize].to_string()
            }
            _ => format!("{v:?}"),
        }
    }
}

pub fn format_cost(c: Cost) -> String {
    match c {
        Cost::Infinite => "inf".into(),
        Cost::Finite(r) => {
            if r.is_integer() {
                format!("{}", r.numer())
            } else {
                // Emit a terminating decimal when the denominator allows it.
                let mut den = *r.denom();
                let mut pow10 = 1i64;
                let mut digits = 0u32;
                while den % 2 == 0 {
                    den /= 2;
                    pow10 *= 10;
                    digits += 1;
                }
                let mut fives = 0u32;
                while den % 5 == 0 {
                    den /= 5;
                    fives += 1;
                }
                if den == 1 {
                    let digits = digits.max(fives);
                    let scale = 10i64.pow(digits);
                    let _ = pow10;
                    let scaled = r * Rational::new(scale, 1);
                    let int = scaled.to_integer();
                    let whole = int / scale;
                    let frac = (int % scale).abs();
                    format!("{}.{:0width$}", whole, frac, width = digits as usize)
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Parses a cost literal: a decimal string, fraction `p/q`, or `inf`.
pub fn parse_cost(text: &str) -> Result<Cost> {
    let text = text.trim();
    if text == "inf" || text == "∞" {
        return Ok(Cost::Infinite);
    }
    let bad = || Error::Parse(format!("bad cost literal `{text}`"));
    if let Some((p, q)) = text.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Cost::Finite(Rational::new(p, q)));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let whole: i64 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let scale = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        let frac_num: i64 = frac.parse().map_err(|_| bad())?;
        return Ok(Cost::Finite(
            Rational::new(whole, 1) + Rational::new(frac_num, scale),
        ));
    }
    let n: i64 = text.parse().map_err(|_| bad())?;
    Ok(Cost::Finite(Rational::new(n, 1)))
}

/// Small rational grid used by sampled law checking on the cost quantale.
pub fn cost_sample_grid() -> Vec<Value> {
    vec![
        Value::Cost(Cost::zero()),
        Value::Cost(Cost::ratio(1, 4)),
        Value::Cost(Cost::ratio(1, 2)),
        Value::Cost(Cost::from_int(1)),
        Value::Cost(Cost::from_int(2)),
        Value::Cost(Cost::Infinite),
    ]
}

/// Checks the quantale laws: commutativity, associativity, unit, the
/// sup-preservation of ⊗ (over all finite subsets for finite carriers),
/// the residuation adjunction, and `k > ⊥`.
pub fn check_quantale_laws(q: &Quantale, mode: CheckMode) -> Result<LawReport> {
    let tensor = |u: Value, v: Value| q.tensor(u, v);
    check_quantale_laws_with(q, mode, tensor)
}

/// Same as [`check_quantale_laws`] but with an injectable tensor, so tests
/// can confirm that a corrupted operation is caught.
pub fn check_quantale_laws_with<F>(q: &Quantale, mode: CheckMode, tensor: F) -> Result<LawReport>
where
    F: Fn(Value, Value) -> Result<Value>,
{
    let suite = format!("quantale_laws[{}]", q.name());
    let elems: Vec<Value> = match mode {
        CheckMode::Exhaustive => q.elements().ok_or_else(|| {
            Error::InfiniteQuantale("exhaustive quantale law checking".into())
        })?,
        CheckMode::Sampled { .. } => cost_sample_grid(),
    };

    let mut checked = 0usize;
    let fmt = |v: Value| q.format_value(v);
    let fail = |law: &str, inputs: Vec<(String, String)>, lhs: Value, rhs: Value, checked: usize| {
        LawReport::fail(
            suite.clone(),
            checked,
            Counterexample {
                law: law.into(),
                inputs,
                lhs: fmt(lhs),
                rhs: fmt(rhs),
            },
        )
    };

    if q.leq(q.unit(), q.bottom())? {
        return Ok(fail("k > bottom", vec![], q.unit(), q.bottom(), checked));
    }

    let triples: Vec<(Value, Value, Value)> = match mode {
        CheckMode::Exhaustive => {
            let mut out = Vec::new();
            for &u in &elems {
                for &v in &elems {
                    for &w in &elems {
                        out.push((u, v, w));
                    }
                }
            }
            out
        }
        CheckMode::Sampled { seed, n } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n)
                .map(|_| {
                    let pick = |rng: &mut ChaCha8Rng| elems[rng.gen_range(0..elems.len())];
                    (pick(&mut rng), pick(&mut rng), pick(&mut rng))
                })
                .collect()
        }
    };

    for &(u, v, w) in &triples {
        checked += 1;
        let inputs = |names: &[&str], vals: &[Value]| {
            names
                .iter()
                .zip(vals)
                .map(|(n, &x)| (n.to_string(), fmt(x)))
                .collect::<Vec<_>>()
        };

        let uv = tensor(u, v)?;
        let vu = tensor(v, u)?;
        if uv != vu {
            return Ok(fail("commutativity", inputs(&["u", "v"], &[u, v]), uv, vu, checked));
        }
        let lhs = tensor(u, tensor(v, w)?)?;
        let rhs = tensor(tensor(u, v)?, w)?;
        if lhs != rhs {
            return Ok(fail(
                "associativity",
                inputs(&["u", "v", "w"], &[u, v, w]),
                lhs,
                rhs,
                checked,
            ));
        }
        let ku = tensor(q.unit(), u)?;
        if ku != u {
            return Ok(fail("unit", inputs(&["u"], &[u]), ku, u, checked));
        }
        // Residuation adjunction: z ≤ hom(u,v) ⟺ z ⊗ u ≤ v.
        let hom = q.residual(u, v)?;
        let left = q.leq(w, hom)?;
        let right = q.leq(tensor(w, u)?, v)?;
        if left != right {
            return Ok(fail(
                "residuation adjunction",
                inputs(&["u", "v", "z"], &[u, v, w]),
                hom,
                v,
                checked,
            ));
        }
        // Binary sup-preservation: u ⊗ (v ∨ w) = (u ⊗ v) ∨ (u ⊗ w).
        let lhs = tensor(u, q.join2(v, w)?)?;
        let rhs = q.join2(tensor(u, v)?, tensor(u, w)?)?;
        if lhs != rhs {
            return Ok(fail(
                "tensor distributes over join",
                inputs(&["u", "v", "w"], &[u, v, w]),
                lhs,
                rhs,
                checked,
            ));
        }
        // Empty join: u ⊗ ⊥ = ⊥.
        let lhs = tensor(u, q.bottom())?;
        if lhs != q.bottom() {
            return Ok(fail(
                "tensor absorbs bottom",
                inputs(&["u"], &[u]),
                lhs,
                q.bottom(),
                checked,
            ));
        }
    }

    // Sup-preservation over every finite subset (finite carriers only).
    if matches!(mode, CheckMode::Exhaustive) && elems.len() <= 8 {
        for mask in 0u32..(1 << elems.len()) {
            let subset: Vec<Value> = (0..elems.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| elems[i])
                .collect();
            for &u in &elems {
                checked += 1;
                let lhs = tensor(u, q.join(subset.iter().copied())?)?;
                let mut imgs = Vec::new();
                for &s in &subset {
                    imgs.push(tensor(u, s)?);
                }
                let rhs = q.join(imgs)?;
                if lhs != rhs {
                    let set = subset
                        .iter()
                        .map(|&s| fmt(s))
                        .collect::<Vec<_>>()
                        .join(",");
                    return Ok(fail(
                        "tensor preserves finite joins",
                        vec![("u".into(), fmt(u)), ("S".into(), format!("{{{set}}}"))],
                        lhs,
                        rhs,
                        checked,
                    ));
                }
            }
        }
    }

    Ok(LawReport::pass(suite, checked))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn luk4() -> Quantale {
        make_builtin("lukasiewicz", Some(4)).unwrap()
    }

    #[test]
    fn builtin_units() {
        let b = make_builtin("bool2", None).unwrap();
        assert_eq!(b.unit(), Value::Bool(true));
        assert_eq!(b.unit(), b.top());

        let c = make_builtin("cost", None).unwrap();
        assert_eq!(c.unit(), Value::Cost(Cost::zero()));
        assert_eq!(c.bottom(), Value::Cost(Cost::Infinite));

        let l = luk4();
        assert_eq!(l.elements().unwrap().len(), 5);
        assert_eq!(l.unit(), l.top());

        let t = make_builtin("three_chain", None).unwrap();
        assert!(!t.unit_is_top());
        assert!(t.leq(t.unit(), t.top()).unwrap());
    }

    #[test]
    fn builtin_errors() {
        assert!(matches!(
            make_builtin("nope", None),
            Err(Error::UnknownBuiltin(_))
        ));
        assert!(matches!(
            make_builtin("lukasiewicz", Some(1)),
            Err(Error::BadLevels(1))
        ));
    }

    #[test]
    fn tensor_examples() {
        let c = Quantale::Cost;
        assert_eq!(
            c.tensor(Value::Cost(Cost::from_int(2)), Value::Cost(Cost::from_int(3)))
                .unwrap(),
            Value::Cost(Cost::from_int(5))
        );
        let b = Quantale::Bool2;
        assert_eq!(
            b.tensor(Value::Bool(true), Value::Bool(false)).unwrap(),
            Value::Bool(false)
        );
        // lukasiewicz(4): 0.75 ⊗ 0.5 = 0.25
        let l = luk4();
        assert_eq!(
            l.tensor(Value::Level(3), Value::Level(2)).unwrap(),
            Value::Level(1)
        );
    }

    #[test]
    fn mixed_quantale_rejected() {
        let c = Quantale::Cost;
        assert!(c.tensor(Value::Bool(true), Value::Cost(Cost::zero())).is_err());
        assert!(Quantale::Bool2.leq(Value::Bool(true), Value::Level(1)).is_err());
    }

    #[test]
    fn residual_examples() {
        let b = Quantale::Bool2;
        assert_eq!(
            b.residual(Value::Bool(true), Value::Bool(false)).unwrap(),
            Value::Bool(false)
        );
        // cost: residual(1, 3) = 2 (truncated difference)
        let c = Quantale::Cost;
        assert_eq!(
            c.residual(Value::Cost(Cost::from_int(1)), Value::Cost(Cost::from_int(3)))
                .unwrap(),
            Value::Cost(Cost::from_int(2))
        );
        // lukasiewicz(4): residual(0.75, 0.5) = 0.75, checked against the
        // exhaustive "greatest z with z ⊗ u ≤ v" oracle below.
        let l = luk4();
        assert_eq!(
            l.residual(Value::Level(3), Value::Level(2)).unwrap(),
            Value::Level(3)
        );
    }

    /// Brute-force residual oracle: greatest z with z ⊗ u ≤ v.
    fn residual_oracle(q: &Quantale, u: Value, v: Value) -> Value {
        let mut best = q.bottom();
        for z in q.elements().unwrap() {
            if q.leq(q.tensor(z, u).unwrap(), v).unwrap() && q.leq(best, z).unwrap() {
                best = z;
            }
        }
        best
    }

    #[test]
    fn residual_matches_exhaustive_oracle() {
        for q in [Quantale::Bool2, luk4(), Quantale::ThreeChain] {
            let elems = q.elements().unwrap();
            for &u in &elems {
                for &v in &elems {
                    assert_eq!(
                        q.residual(u, v).unwrap(),
                        residual_oracle(&q, u, v),
                        "{} residual({}, {})",
                        q.name(),
                        q.format_value(u),
                        q.format_value(v)
                    );
                }
            }
        }
    }

    /// Cost residual closed form confirmed by brute force over a rational
    /// grid, via the adjunction.
    #[test]
    fn cost_residual_adjunction_on_grid() {
        let q = Quantale::Cost;
        let grid = cost_sample_grid();
        for &u in &grid {
            for &v in &grid {
                let hom = q.residual(u, v).unwrap();
                for &z in &grid {
                    let left = q.leq(z, hom).unwrap();
                    let right = q.leq(q.tensor(z, u).unwrap(), v).unwrap();
                    assert_eq!(left, right);
                }
                // hom itself is the greatest such z on the grid.
                assert!(q.leq(q.tensor(hom, u).unwrap(), v).unwrap());
            }
        }
    }

    #[test]
    fn aggregate_examples() {
        let b = Quantale::Bool2;
        assert_eq!(
            b.join([Value::Bool(false), Value::Bool(true)]).unwrap(),
            Value::Bool(true)
        );
        // cost join {2, 5} = 2 (real infimum)
        let c = Quantale::Cost;
        assert_eq!(
            c.join([Value::Cost(Cost::from_int(2)), Value::Cost(Cost::from_int(5))])
                .unwrap(),
            Value::Cost(Cost::from_int(2))
        );
        // empty meet is top = 0
        assert_eq!(c.meet([]).unwrap(), Value::Cost(Cost::zero()));
        assert_eq!(c.join([]).unwrap(), Value::Cost(Cost::Infinite));
    }

    #[test]
    fn laws_pass_for_builtins() {
        for q in [
            Quantale::Bool2,
            luk4(),
            Quantale::ThreeChain,
            make_builtin("lukasiewicz", Some(2)).unwrap(),
        ] {
            let r = check_quantale_laws(&q, CheckMode::Exhaustive).unwrap();
            assert!(r.is_pass(), "{r}");
        }
        let r = check_quantale_laws(&Quantale::Cost, CheckMode::Sampled { seed: 7, n: 500 })
            .unwrap();
        assert!(r.is_pass(), "{r}");
    }

    #[test]
    fn corrupted_tensor_is_caught() {
        // Corrupt ⊤ ⊗ ⊤ on lukasiewicz(4) so associativity breaks.
        let q = luk4();
        let r = check_quantale_laws_with(&q, CheckMode::Exhaustive, |u, v| {
            match (u, v) {
                (Value::Level(3), Value::Level(3)) => Ok(Value::Level(4)),
                _ => q.tensor(u, v),
            }
        })
        .unwrap();
        assert!(!r.is_pass());
    }

    #[test]
    fn cost_parse_and_format_roundtrip() {
        for text in ["0", "1.5", "0.25", "inf", "1/3", "2"] {
            let c = parse_cost(text).unwrap();
            let back = parse_cost(&format_cost(c)).unwrap();
            assert_eq!(c, back);
        }
        assert_eq!(format_cost(Cost::ratio(1, 2)), "0.5");
        assert_eq!(format_cost(Cost::ratio(1, 3)), "1/3");
        assert!(parse_cost("abc").is_err());
    }
}
