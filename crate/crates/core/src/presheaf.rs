//! Presheaf categories over finite quantales: enumeration of contravariant
//! functors into the quantale, the Yoneda embedding and mates, left
//! extensions, the presheaf monad multiplication, and the generic lax
//! extension of an endofunctor to modules.

use crate::enriched::{validate_vcategory, VCategory, VFunctorMap, VRelation};
use crate::error::{Error, Result};
use crate::hausdorff::{hausdorff_category, hausdorff_map, HausdorffVariant};
use crate::quantale::{Quantale, Value};
use crate::report::{Counterexample, LawReport};
use crate::vmodule::{adjoint_pair, compose_modules, enumerate_modules, make_vmodule, VModule};

/// Default bound on the number of enumerated candidate value maps.
pub const DEFAULT_PRESHEAF_CAP: u128 = 4096;

/// A single contravariant functor `X^op → V`, i.e. a value map satisfying
/// `a(y,x) ⊗ s(x) ≤ s(y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Presheaf {
    values: Vec<Value>,
}

impl Presheaf {
    pub fn values(&self) -> &[Value] {
        &self.values
    }
}

/// Checks the contravariant functor law for a candidate value map.
pub fn is_presheaf(x: &VCategory, values: &[Value]) -> Result<bool> {
    let q = *x.quantale();
    for i in 0..x.len() {
        for j in 0..x.len() {
            if !q.leq(q.tensor(x.a(j, i), values[i])?, values[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The category X̂ of presheaves on `X`, enumerated lexicographically in
/// carrier order and quantale element order. The structure
/// `c(s,t) = ⋀_x hom(s(x), t(x))` is computed on demand.
#[derive(Debug, Clone)]
pub struct PresheafCategory {
    base: VCategory,
    rows: Vec<Vec<Value>>,
}

pub fn presheaf_category(x: &VCategory, cap: u128) -> Result<PresheafCategory> {
    let q = *x.quantale();
    if !q.is_finite() {
        return Err(Error::InfiniteQuantale(
            "presheaf enumeration".into(),
        ));
    }
    let elements = q
        .elements()
        .ok_or_else(|| Error::InfiniteQuantale("presheaf enumeration".into()))?;
    let candidates = (elements.len() as u128)
        .checked_pow(x.len() as u32)
        .unwrap_or(u128::MAX);
    if candidates > cap {
        return Err(Error::CapExceeded {
            what: "presheaf enumeration".into(),
            needed: candidates,
            cap,
        });
    }
    let mut rows = Vec::new();
    let mut idx = vec![0usize; x.len()];
    loop {
        let values: Vec<Value> = idx.iter().map(|&i| elements[i]).collect();
        if is_presheaf(x, &values)? {
            rows.push(values);
        }
        // odometer with the last coordinate fastest → lexicographic rows
        let mut pos = x.len();
        loop {
            if pos == 0 {
                return Ok(PresheafCategory { base: x.clone(), rows });
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < elements.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

impl PresheafCategory {
    pub fn base(&self) -> &VCategory {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn values(&self, i: usize) -> &[Value] {
        &self.rows[i]
    }

    pub fn value(&self, i: usize, x: usize) -> Value {
        self.rows[i][x]
    }

    pub fn label(&self, i: usize) -> String {
        let q = self.base.quantale();
        let vals: Vec<String> = self.rows[i].iter().map(|&v| q.format_value(v)).collect();
        format!("<{}>", vals.join(","))
    }

    pub fn index_of_values(&self, values: &[Value]) -> Result<usize> {
        self.rows
            .iter()
            .position(|r| r.as_slice() == values)
            .ok_or_else(|| {
                Error::UnknownElement(format!("no presheaf with values {values:?}"))
            })
    }

    /// `c(s,t) = ⋀_x hom(s(x), t(x))`.
    pub fn structure(&self, i: usize, j: usize) -> Result<Value> {
        let q = *self.base.quantale();
        let mut acc = q.top();
        for x in 0..self.base.len() {
            acc = q.meet2(acc, q.residual(self.rows[i][x], self.rows[j][x])?)?;
        }
        Ok(acc)
    }

    /// Materializes the structure matrix (≤ 256 presheaves; validated ≤ 64).
    pub fn to_vcategory(&self) -> Result<VCategory> {
        let m = self.rows.len();
        if m > 256 {
            return Err(Error::CapExceeded {
                what: "presheaf materialization".into(),
                needed: m as u128,
                cap: 256,
            });
        }
        let carrier: Vec<String> = (0..m).map(|i| self.label(i)).collect();
        let rel = VRelation::from_fn(
            *self.base.quantale(),
            carrier.clone(),
            carrier,
            |i, j| self.structure(i, j),
        )?;
        let cat = VCategory::new_unchecked(rel);
        if m <= 64 {
            validate_vcategory(&cat)?;
        }
        Ok(cat)
    }
}

/// The Yoneda embedding `y_X: X → X̂`, `x ↦ a(−, x)`.
pub fn yoneda(x: &VCategory) -> Result<VFunctorMap> {
    let xhat = presheaf_category(x, DEFAULT_PRESHEAF_CAP)?;
    let target = xhat.to_vcategory()?;
    let map = yoneda_indices(x, &xhat)?;
    VFunctorMap::from_indices(x.clone(), target, map)
}

fn yoneda_indices(x: &VCategory, xhat: &PresheafCategory) -> Result<Vec<usize>> {
    (0..x.len())
        .map(|j| {
            let values: Vec<Value> = (0..x.len()).map(|i| x.a(i, j)).collect();
            xhat.index_of_values(&values)
        })
        .collect()
}

/// The Yoneda mate `y_φ: Y → X̂`, `y ↦ φ(−, y)` of a module `φ: X ⇸ Y`.
pub fn yoneda_mate(phi: &VModule) -> Result<VFunctorMap> {
    let xhat = presheaf_category(phi.source(), DEFAULT_PRESHEAF_CAP)?;
    let target = xhat.to_vcategory()?;
    let map = mate_indices(phi, &xhat)?;
    VFunctorMap::from_indices(phi.target().clone(), target, map)
}

fn mate_indices(phi: &VModule, xhat: &PresheafCategory) -> Result<Vec<usize>> {
    (0..phi.target().len())
        .map(|y| {
            let values: Vec<Value> =
                (0..phi.source().len()).map(|i| phi.phi(i, y)).collect();
            xhat.index_of_values(&values)
        })
        .collect()
}

/// Pointwise left extension: `φ̂(s)(x) = ⋁_y φ(x,y) ⊗ s(y)` for a value
/// map `s` on the target of `φ`.
pub fn left_extension_values(phi: &VModule, s: &[Value]) -> Result<Vec<Value>> {
    let q = *phi.quantale();
    (0..phi.source().len())
        .map(|x| {
            let mut acc = q.bottom();
            for y in 0..phi.target().len() {
                acc = q.join2(acc, q.tensor(phi.phi(x, y), s[y])?)?;
            }
            Ok(acc)
        })
        .collect()
}

/// The left extension `φ̂: Ŷ → X̂` as a functor between the materialized
/// presheaf categories.
pub fn left_extension(phi: &VModule) -> Result<VFunctorMap> {
    let xhat = presheaf_category(phi.source(), DEFAULT_PRESHEAF_CAP)?;
    let yhat = presheaf_category(phi.target(), DEFAULT_PRESHEAF_CAP)?;
    let mut map = Vec::with_capacity(yhat.len());
    for s in 0..yhat.len() {
        let values = left_extension_values(phi, yhat.values(s))?;
        map.push(xhat.index_of_values(&values)?);
    }
    VFunctorMap::from_indices(yhat.to_vcategory()?, xhat.to_vcategory()?, map)
}

/// The presheaf-monad multiplication `m_X: X̂̂ → X̂`,
/// `m(τ)(x) = ⋁_t t(x) ⊗ τ(t)`. Requires materializing both levels, so
/// practical only for tiny bases.
pub fn pv_multiplication(x: &VCategory) -> Result<VFunctorMap> {
    let q = *x.quantale();
    let xhat = presheaf_category(x, DEFAULT_PRESHEAF_CAP)?;
    let xhat_cat = xhat.to_vcategory()?;
    let xhathat = presheaf_category(&xhat_cat, DEFAULT_PRESHEAF_CAP)?;
    let mut map = Vec::with_capacity(xhathat.len());
    for tau in 0..xhathat.len() {
        let values: Vec<Value> = (0..x.len())
            .map(|i| {
                let mut acc = q.bottom();
                for t in 0..xhat.len() {
                    acc = q.join2(acc, q.tensor(xhat.value(t, i), xhathat.value(tau, t))?)?;
                }
                Ok(acc)
            })
            .collect::<Result<_>>()?;
        map.push(xhat.index_of_values(&values)?);
    }
    VFunctorMap::from_indices(xhathat.to_vcategory()?, xhat_cat, map)
}

/// A supported endofunctor of the category of V-categories, given by its
/// action on objects and on functors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endofunctor {
    Identity,
    Hausdorff,
    HausdorffSym,
    HausdorffDown,
}

impl Endofunctor {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "identity" => Endofunctor::Identity,
            "H" | "hausdorff" => Endofunctor::Hausdorff,
            "H_sym" | "hausdorff_sym" => Endofunctor::HausdorffSym,
            "H_down" | "hausdorff_down" => Endofunctor::HausdorffDown,
            other => return Err(Error::Parse(format!("unknown endofunctor `{other}`"))),
        })
    }

    pub fn apply(&self, x: &VCategory) -> Result<VCategory> {
        match self {
            Endofunctor::Identity => Ok(x.clone()),
            Endofunctor::Hausdorff => {
                hausdorff_category(x, HausdorffVariant::Plain)?.to_vcategory()
            }
            Endofunctor::HausdorffSym => {
                hausdorff_category(x, HausdorffVariant::Sym)?.to_vcategory()
            }
            Endofunctor::HausdorffDown => {
                hausdorff_category(x, HausdorffVariant::Down)?.to_vcategory()
            }
        }
    }

    pub fn map(&self, f: &VFunctorMap) -> Result<VFunctorMap> {
        match self {
            Endofunctor::Identity => Ok(f.clone()),
            Endofunctor::Hausdorff => hausdorff_map(f, HausdorffVariant::Plain),
            Endofunctor::HausdorffSym => hausdorff_map(f, HausdorffVariant::Sym),
            Endofunctor::HausdorffDown => hausdorff_map(f, HausdorffVariant::Down),
        }
    }
}

/// The generic lax extension of `K` to a module `φ: X ⇸ Y`, defined as the
/// composite `(K y_φ)^* · (K y_X)_*` of the companion and conjoint of the
/// images of the Yoneda embedding and the mate.
///
/// The composite passes through the (often huge) lifted presheaf category,
/// but since a companion followed by a conjoint of maps into one category
/// collapses to the hom between the images (the companion's own image
/// attains the join; transitivity bounds the rest), each entry is computed
/// directly as the lifted hom between `K y_X(A)` and `K y_φ(B)`, evaluated
/// lazily on the presheaf category. An inline test checks the collapse
/// against the explicit composite on small instances.
pub fn extend_functor(k: Endofunctor, phi: &VModule) -> Result<VModule> {
    let q = *phi.quantale();
    let xhat = presheaf_category(phi.source(), DEFAULT_PRESHEAF_CAP)?;
    let y_x = yoneda_indices(phi.source(), &xhat)?;
    let y_phi = mate_indices(phi, &xhat)?;
    // plain Hausdorff value between two presheaf families, lazily evaluated
    let h_between = |from: &[usize], to: &[usize]| -> Result<Value> {
        let mut acc = q.top();
        for &s in from {
            let mut best = q.bottom();
            for &t in to {
                best = q.join2(best, xhat.structure(s, t)?)?;
            }
            acc = q.meet2(acc, best)?;
        }
        Ok(acc)
    };
    let source = k.apply(phi.source())?;
    let target = k.apply(phi.target())?;
    let entry_sets = |base: &VModule, f: fn(&VModule) -> &VCategory, images: &[usize], variant: Option<HausdorffVariant>| -> Result<Vec<Vec<usize>>> {
        match variant {
            None => Ok(images.iter().map(|&i| vec![i]).collect()),
            Some(v) => {
                let lifted = hausdorff_category(f(base), v)?;
                Ok(lifted
                    .masks()
                    .iter()
                    .map(|mask| {
                        (0..f(base).len())
                            .filter(|b| mask >> b & 1 == 1)
                            .map(|b| images[b])
                            .collect()
                    })
                    .collect())
            }
        }
    };
    let variant = match k {
        Endofunctor::Identity => None,
        Endofunctor::Hausdorff => Some(HausdorffVariant::Plain),
        Endofunctor::HausdorffSym => Some(HausdorffVariant::Sym),
        Endofunctor::HausdorffDown => Some(HausdorffVariant::Down),
    };
    let from_sets = entry_sets(phi, VModule::source, &y_x, variant)?;
    let to_sets = entry_sets(phi, VModule::target, &y_phi, variant)?;
    let mut entries = Vec::with_capacity(from_sets.len() * to_sets.len());
    for a in &from_sets {
        for b in &to_sets {
            let v = match k {
                Endofunctor::HausdorffSym => q.meet2(h_between(a, b)?, h_between(b, a)?)?,
                _ => h_between(a, b)?,
            };
            entries.push(v);
        }
    }
    make_vmodule(&source, &target, entries)
}

/// Same value as [`extend_functor`], computed by materializing the lifted
/// presheaf category and composing the companion with the conjoint.
/// Exponentially slower; kept as an independent cross-check.
pub fn extend_functor_by_composite(k: Endofunctor, phi: &VModule) -> Result<VModule> {
    let xhat = presheaf_category(phi.source(), DEFAULT_PRESHEAF_CAP)?;
    let xhat_cat = xhat.to_vcategory()?;
    let y_x = VFunctorMap::from_indices(
        phi.source().clone(),
        xhat_cat.clone(),
        yoneda_indices(phi.source(), &xhat)?,
    )?;
    let y_phi = VFunctorMap::from_indices(
        phi.target().clone(),
        xhat_cat,
        mate_indices(phi, &xhat)?,
    )?;
    let (companion, _) = adjoint_pair(&k.map(&y_x)?)?;
    let (_, conjoint) = adjoint_pair(&k.map(&y_phi)?)?;
    compose_modules(&companion, &conjoint)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresheafSuite {
    Yoneda,
    Kz,
    Adjunction,
}

impl PresheafSuite {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "yoneda" => PresheafSuite::Yoneda,
            "kz" => PresheafSuite::Kz,
            "adjunction" => PresheafSuite::Adjunction,
            other => return Err(Error::Parse(format!("unknown presheaf suite `{other}`"))),
        })
    }
}

pub fn check_presheaf_laws(x: &VCategory, suite: PresheafSuite) -> Result<LawReport> {
    if !x.quantale().is_finite() {
        return Ok(LawReport::skipped(
            "presheaf",
            "needs a finite quantale",
        ));
    }
    match suite {
        PresheafSuite::Yoneda => yoneda_suite(x),
        PresheafSuite::Kz => kz_suite(x),
        PresheafSuite::Adjunction => adjunction_suite(x),
    }
}

fn fmt(q: &Quantale, v: Value) -> String {
    q.format_value(v)
}

/// Yoneda Lemma, full fidelity of the embedding, and for small companions
/// the unit identity `(y_φ)^* · (y_X)_* = φ` and the factorization
/// `y_φ = φ̂ ∘ y_Y`.
fn yoneda_suite(x: &VCategory) -> Result<LawReport> {
    const SUITE: &str = "presheaf_yoneda";
    let q = *x.quantale();
    let xhat = presheaf_category(x, DEFAULT_PRESHEAF_CAP)?;
    let y = yoneda_indices(x, &xhat)?;
    let mut checked = 0usize;

    for i in 0..x.len() {
        for s in 0..xhat.len() {
            checked += 1;
            let lhs = xhat.structure(y[i], s)?;
            let rhs = xhat.value(s, i);
            if lhs != rhs {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "representable hom equals evaluation".into(),
                        inputs: vec![
                            ("x".into(), x.carrier()[i].clone()),
                            ("s".into(), xhat.label(s)),
                        ],
                        lhs: fmt(&q, lhs),
                        rhs: fmt(&q, rhs),
                    },
                ));
            }
        }
        for j in 0..x.len() {
            checked += 1;
            let lhs = xhat.structure(y[i], y[j])?;
            if lhs != x.a(i, j) {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "embedding fully faithful".into(),
                        inputs: vec![
                            ("x".into(), x.carrier()[i].clone()),
                            ("x'".into(), x.carrier()[j].clone()),
                        ],
                        lhs: fmt(&q, lhs),
                        rhs: fmt(&q, x.a(i, j)),
                    },
                ));
            }
        }
    }

    if x.len() <= 2 {
        for size in 0..=2usize {
            for yc in crate::enriched::enumerate_vcategories(&q, size)? {
                for phi in enumerate_modules(x, &yc, 1 << 20)? {
                    checked += 1;
                    // unit identity
                    let y_x = yoneda(x)?;
                    let y_phi = yoneda_mate(&phi)?;
                    let (comp, _) = adjoint_pair(&y_x)?;
                    let (_, conj) = adjoint_pair(&y_phi)?;
                    let recovered = compose_modules(&comp, &conj)?;
                    if recovered.relation().entries() != phi.relation().entries() {
                        return Ok(LawReport::fail(
                            SUITE,
                            checked,
                            Counterexample {
                                law: "mate conjoint after embedding companion recovers the module"
                                    .into(),
                                inputs: vec![("phi".into(), format!("{:?}", phi.relation().entries()))],
                                lhs: format!("{:?}", recovered.relation().entries()),
                                rhs: format!("{:?}", phi.relation().entries()),
                            },
                        ));
                    }
                    // factorization through the left extension
                    checked += 1;
                    for yy in 0..yc.len() {
                        let s: Vec<Value> = (0..yc.len()).map(|i| yc.a(i, yy)).collect();
                        let extended = left_extension_values(&phi, &s)?;
                        let mate: Vec<Value> =
                            (0..x.len()).map(|i| phi.phi(i, yy)).collect();
                        if extended != mate {
                            return Ok(LawReport::fail(
                                SUITE,
                                checked,
                                Counterexample {
                                    law: "mate factors through the left extension".into(),
                                    inputs: vec![("y".into(), yc.carrier()[yy].clone())],
                                    lhs: format!("{extended:?}"),
                                    rhs: format!("{mate:?}"),
                                },
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(LawReport::pass(SUITE, checked))
}

/// The lifted-embedding inequality `⋁_x c(t, y(x)) ⊗ u(x) ≤ c(t, u)`,
/// i.e. the pointwise form of the lax idempotency of the monad.
fn kz_suite(x: &VCategory) -> Result<LawReport> {
    const SUITE: &str = "presheaf_kz";
    let q = *x.quantale();
    let xhat = presheaf_category(x, DEFAULT_PRESHEAF_CAP)?;
    let y = yoneda_indices(x, &xhat)?;
    let mut checked = 0usize;
    for t in 0..xhat.len() {
        for u in 0..xhat.len() {
            checked += 1;
            let mut lhs = q.bottom();
            for i in 0..x.len() {
                lhs = q.join2(
                    lhs,
                    q.tensor(xhat.structure(t, y[i])?, xhat.value(u, i))?,
                )?;
            }
            let rhs = xhat.structure(t, u)?;
            if !q.leq(lhs, rhs)? {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "extension of the embedding conjoint below the second embedding"
                            .into(),
                        inputs: vec![("t".into(), xhat.label(t)), ("u".into(), xhat.label(u))],
                        lhs: fmt(&q, lhs),
                        rhs: fmt(&q, rhs),
                    },
                ));
            }
        }
    }
    Ok(LawReport::pass(SUITE, checked))
}

/// The left extension is a genuine left adjoint: with
/// `r(t)(y) = ⋀_x hom(φ(x,y), t(x))`, the hom-sets satisfy
/// `c_X̂(φ̂(s), t) = c_Ŷ(s, r(t))`. Also the unit law of the
/// multiplication: `m ∘ y_X̂ = id`.
fn adjunction_suite(x: &VCategory) -> Result<LawReport> {
    const SUITE: &str = "presheaf_adjunction";
    let q = *x.quantale();
    if x.len() > 2 {
        return Ok(LawReport::skipped(SUITE, "carrier larger than 2"));
    }
    let xhat = presheaf_category(x, DEFAULT_PRESHEAF_CAP)?;
    let mut checked = 0usize;

    for size in 0..=2usize {
        for yc in crate::enriched::enumerate_vcategories(&q, size)? {
            let yhat = presheaf_category(&yc, DEFAULT_PRESHEAF_CAP)?;
            for phi in enumerate_modules(x, &yc, 1 << 20)? {
                for s in 0..yhat.len() {
                    let ext = left_extension_values(&phi, yhat.values(s))?;
                    let ext_idx = xhat.index_of_values(&ext)?;
                    for t in 0..xhat.len() {
                        checked += 1;
                        let lhs = xhat.structure(ext_idx, t)?;
                        let r: Vec<Value> = (0..yc.len())
                            .map(|yy| {
                                let mut acc = q.top();
                                for xi in 0..x.len() {
                                    acc = q.meet2(
                                        acc,
                                        q.residual(phi.phi(xi, yy), xhat.value(t, xi))?,
                                    )?;
                                }
                                Ok(acc)
                            })
                            .collect::<Result<_>>()?;
                        let rhs = {
                            let mut acc = q.top();
                            for yy in 0..yc.len() {
                                acc = q.meet2(acc, q.residual(yhat.value(s, yy), r[yy])?)?;
                            }
                            acc
                        };
                        if lhs != rhs {
                            return Ok(LawReport::fail(
                                SUITE,
                                checked,
                                Counterexample {
                                    law: "extension hom equals transposed hom".into(),
                                    inputs: vec![
                                        ("s".into(), yhat.label(s)),
                                        ("t".into(), xhat.label(t)),
                                    ],
                                    lhs: fmt(&q, lhs),
                                    rhs: fmt(&q, rhs),
                                },
                            ));
                        }
                    }
                }
            }
        }
    }

    // unit law, checked pointwise without materializing the double level:
    // m(y(u))(x) = ⋁_t t(x) ⊗ c(t,u) = u(x)
    for u in 0..xhat.len() {
        for i in 0..x.len() {
            checked += 1;
            let mut lhs = q.bottom();
            for t in 0..xhat.len() {
                lhs = q.join2(lhs, q.tensor(xhat.value(t, i), xhat.structure(t, u)?)?)?;
            }
            if lhs != xhat.value(u, i) {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "multiplication after unit is the identity".into(),
                        inputs: vec![
                            ("u".into(), xhat.label(u)),
                            ("x".into(), x.carrier()[i].clone()),
                        ],
                        lhs: fmt(&q, lhs),
                        rhs: fmt(&q, xhat.value(u, i)),
                    },
                ));
            }
        }
    }
    Ok(LawReport::pass(SUITE, checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::{check_vfunctor, make_vcategory, VCategory};
    use crate::hausdorff::htilde;
    use crate::quantale::make_builtin;
    use crate::vmodule::{greatest_module, identity_module};

    fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    fn bool2_chain() -> VCategory {
        make_vcategory(
            Quantale::Bool2,
            labels(&["0", "1"]),
            vec![
                Value::Bool(true),
                Value::Bool(true),
                Value::Bool(false),
                Value::Bool(true),
            ],
        )
        .unwrap()
    }

    fn bool2_discrete() -> VCategory {
        make_vcategory(
            Quantale::Bool2,
            labels(&["a", "b"]),
            vec![
                Value::Bool(true),
                Value::Bool(false),
                Value::Bool(false),
                Value::Bool(true),
            ],
        )
        .unwrap()
    }

    #[test]
    fn enumeration_counts() {
        // discrete 2-element base over bool2: all 4 subsets
        assert_eq!(presheaf_category(&bool2_discrete(), 4096).unwrap().len(), 4);
        // 2-chain over bool2: the 3 down-sets
        let chain = presheaf_category(&bool2_chain(), 4096).unwrap();
        assert_eq!(chain.len(), 3);
        // singleton over lukasiewicz(2): one value, no constraint
        let q = make_builtin("lukasiewicz", Some(2)).unwrap();
        let single = make_vcategory(q, labels(&["p"]), vec![q.top()]).unwrap();
        assert_eq!(presheaf_category(&single, 4096).unwrap().len(), 3);
    }

    #[test]
    fn enumeration_is_lexicographic_and_capped() {
        let chain = presheaf_category(&bool2_chain(), 4096).unwrap();
        // bool2 elements in order ⊥,⊤: rows <⊥,⊥> < <⊤,⊥> < <⊤,⊤>
        assert_eq!(chain.values(0), &[Value::Bool(false), Value::Bool(false)]);
        assert_eq!(chain.values(1), &[Value::Bool(true), Value::Bool(false)]);
        assert_eq!(chain.values(2), &[Value::Bool(true), Value::Bool(true)]);
        assert!(matches!(
            presheaf_category(&bool2_chain(), 3),
            Err(Error::CapExceeded { .. })
        ));
        let line = make_vcategory(
            Quantale::Cost,
            labels(&["p"]),
            vec![Value::Cost(crate::quantale::Cost::zero())],
        )
        .unwrap();
        assert!(matches!(
            presheaf_category(&line, 4096),
            Err(Error::InfiniteQuantale(_))
        ));
    }

    #[test]
    fn yoneda_embedding() {
        let chain = bool2_chain();
        let y = yoneda(&chain).unwrap();
        let rep = check_vfunctor(&y).unwrap();
        assert!(rep.report.is_pass());
        assert!(rep.fully_faithful);
        // y(1) = a(−,1) = the full down-set {0,1}
        let xhat = presheaf_category(&chain, 4096).unwrap();
        assert_eq!(
            xhat.values(y.apply(1)),
            &[Value::Bool(true), Value::Bool(true)]
        );
        // discrete: y(x) is the characteristic presheaf of {x}
        let d = bool2_discrete();
        let yd = yoneda(&d).unwrap();
        let dhat = presheaf_category(&d, 4096).unwrap();
        assert_eq!(
            dhat.values(yd.apply(0)),
            &[Value::Bool(true), Value::Bool(false)]
        );
    }

    #[test]
    fn mates() {
        let chain = bool2_chain();
        // mate of the identity module is the embedding itself
        let y = yoneda(&chain).unwrap();
        let mate = yoneda_mate(&identity_module(&chain)).unwrap();
        assert_eq!(y.indices(), mate.indices());
        // mate of the greatest module is constantly the top presheaf
        let top = yoneda_mate(&greatest_module(&chain, &chain).unwrap()).unwrap();
        let xhat = presheaf_category(&chain, 4096).unwrap();
        for yy in 0..chain.len() {
            assert_eq!(
                xhat.values(top.apply(yy)),
                &[Value::Bool(true), Value::Bool(true)]
            );
        }
        // mate of a conjoint f^* is y_X ∘ f
        let d = bool2_discrete();
        let f = VFunctorMap::new(d.clone(), chain.clone(), &labels(&["0", "1"])).unwrap();
        let (_, conj) = adjoint_pair(&f).unwrap();
        let mate = yoneda_mate(&conj).unwrap();
        for i in 0..d.len() {
            assert_eq!(mate.apply(i), y.apply(f.apply(i)));
        }
    }

    #[test]
    fn left_extension_properties() {
        let chain = bool2_chain();
        let one = identity_module(&chain);
        // extension of the identity module fixes representables and
        // down-closes arbitrary value maps
        let ext = left_extension(&one).unwrap();
        let y = yoneda(&chain).unwrap();
        for i in 0..chain.len() {
            assert_eq!(ext.apply(y.apply(i)), y.apply(i));
        }
        assert!(check_vfunctor(&ext).unwrap().report.is_pass());
        let closed =
            left_extension_values(&one, &[Value::Bool(false), Value::Bool(true)]).unwrap();
        assert_eq!(closed, vec![Value::Bool(true), Value::Bool(true)]);
        // idempotent on the already-closed result
        assert_eq!(left_extension_values(&one, &closed).unwrap(), closed);
    }

    #[test]
    fn multiplication_unit_law() {
        let chain = bool2_chain();
        let m = pv_multiplication(&chain).unwrap();
        assert!(check_vfunctor(&m).unwrap().report.is_pass());
        // m ∘ y_X̂ = id on X̂
        let xhat_cat = presheaf_category(&chain, 4096).unwrap().to_vcategory().unwrap();
        let y2 = yoneda(&xhat_cat).unwrap();
        for s in 0..xhat_cat.len() {
            assert_eq!(m.apply(y2.apply(s)), s);
        }
    }

    #[test]
    fn extension_theorem() {
        let q = Quantale::Bool2;
        let chain = bool2_chain();
        let d = bool2_discrete();
        for phi in enumerate_modules(&d, &chain, 1 << 20).unwrap() {
            // identity endofunctor recovers the module
            let id_ext = extend_functor(Endofunctor::Identity, &phi).unwrap();
            assert_eq!(id_ext.relation().entries(), phi.relation().entries());
            // the generic route through presheaves matches the direct
            // meet-join formula for the powerset endofunctor
            let h_ext = extend_functor(Endofunctor::Hausdorff, &phi).unwrap();
            for (a, am) in (0..4u32).enumerate() {
                for (b, bm) in (0..4u32).enumerate() {
                    assert_eq!(h_ext.phi(a, b), htilde(&phi, am, bm).unwrap());
                }
            }
            // the collapsed evaluation agrees with the explicit
            // companion-then-conjoint composite for every endofunctor
            for k in [
                Endofunctor::Identity,
                Endofunctor::Hausdorff,
                Endofunctor::HausdorffSym,
                Endofunctor::HausdorffDown,
            ] {
                let direct = extend_functor(k, &phi).unwrap();
                let composite = extend_functor_by_composite(k, &phi).unwrap();
                assert_eq!(
                    direct.relation().entries(),
                    composite.relation().entries(),
                    "collapse mismatch for {k:?}"
                );
            }
        }
        // lax functoriality: K̃(ψ·φ) ≥ K̃ψ·K̃φ and K̃(1*) ≥ 1*
        let one = identity_module(&chain);
        let h_one = extend_functor(Endofunctor::Hausdorff, &one).unwrap();
        let h_cat = Endofunctor::Hausdorff.apply(&chain).unwrap();
        assert!(identity_module(&h_cat).leq(&h_one).unwrap());
        for phi in enumerate_modules(&d, &chain, 1 << 20).unwrap() {
            for psi in enumerate_modules(&chain, &d, 1 << 20).unwrap() {
                let comp = compose_modules(&phi, &psi).unwrap();
                let lhs = compose_modules(
                    &extend_functor(Endofunctor::Hausdorff, &phi).unwrap(),
                    &extend_functor(Endofunctor::Hausdorff, &psi).unwrap(),
                )
                .unwrap();
                let rhs = extend_functor(Endofunctor::Hausdorff, &comp).unwrap();
                assert!(lhs.leq(&rhs).unwrap());
            }
        }
        let _ = q;
    }

    #[test]
    fn suites_pass() {
        let q3 = make_builtin("lukasiewicz", Some(2)).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        use rand::SeedableRng;
        for q in [Quantale::Bool2, q3, Quantale::ThreeChain] {
            for _ in 0..4 {
                let x = crate::enriched::random_vcategory(&q, 2, &mut rng).unwrap();
                for suite in [
                    PresheafSuite::Yoneda,
                    PresheafSuite::Kz,
                    PresheafSuite::Adjunction,
                ] {
                    let r = check_presheaf_laws(&x, suite).unwrap();
                    assert!(r.is_pass(), "{r}");
                }
            }
        }
    }

    #[test]
    fn broken_structure_yields_counterexample() {
        // a non-reflexive "structure" sneaks past enumeration but breaks
        // the representable-evaluation identity
        let rel = crate::enriched::VRelation::new(
            Quantale::Bool2,
            labels(&["a", "b"]),
            labels(&["a", "b"]),
            vec![
                Value::Bool(true),
                Value::Bool(false),
                Value::Bool(false),
                Value::Bool(false),
            ],
        )
        .unwrap();
        let broken = VCategory::new_unchecked(rel);
        let r = check_presheaf_laws(&broken, PresheafSuite::Yoneda).unwrap();
        assert!(!r.is_pass());
    }

    #[test]
    fn cost_is_skipped() {
        let line = make_vcategory(
            Quantale::Cost,
            labels(&["p"]),
            vec![Value::Cost(crate::quantale::Cost::zero())],
        )
        .unwrap();
        let r = check_presheaf_laws(&line, PresheafSuite::Yoneda).unwrap();
        assert!(matches!(r.status, crate::report::LawStatus::Skipped(_)));
    }
}
