//! Gromov-style distances between V-categories: joins of lifted module
//! values over all modules, module pairs, or symmetric modules, with three
//! interchangeable strategies (exhaustive enumeration, an exact rational
//! optimizer over the cost quantale, and the gluing construction), plus the
//! structural law suites tying them together.

use crate::enriched::{
    classify, combine, enumerate_vcategories, CombineMode, VCategory,
};
use crate::error::{Error, Result};
use crate::hausdorff::{hausdorff_value, htilde, subset_label};
use crate::presheaf::{extend_functor, Endofunctor};
use crate::quantale::{Cost, Quantale, Rational, Value};
use crate::report::{Counterexample, LawReport};
pub use crate::vmodule::enumerate_modules;
use crate::vmodule::{
    check_pair, glue, greatest_module, make_vmodule, VModule,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default cap on enumerated candidate matrices.
pub const DEFAULT_ENUM_CAP: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GromovVariant {
    /// Join over all modules of the lifted value at the full carriers.
    Plain,
    /// Join over compatible module pairs of the meet of both directions.
    SymPair,
    /// Join over symmetric modules (requires symmetric endpoints).
    SymMod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sublifting {
    H,
    HDown,
    HSym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Enumerate,
    Optimize,
    Gluing,
}

#[derive(Debug, Clone)]
pub struct GromovQuery {
    pub x: VCategory,
    pub y: VCategory,
    pub variant: GromovVariant,
    pub sublifting: Sublifting,
    pub strategy: Strategy,
    pub cap: u128,
}

impl GromovQuery {
    pub fn new(x: VCategory, y: VCategory) -> GromovQuery {
        GromovQuery {
            x,
            y,
            variant: GromovVariant::Plain,
            sublifting: Sublifting::H,
            strategy: Strategy::Enumerate,
            cap: DEFAULT_ENUM_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Witness {
    Module(VModule),
    Pair(VModule, VModule),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attainment {
    Exact,
    Gap,
}

#[derive(Debug, Clone)]
pub struct GromovResult {
    pub value: Value,
    pub witness: Witness,
    pub attainment: Attainment,
    pub gap: Option<Value>,
}

fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

/// The transpose `φ°: Y ⇸ X` of a module between symmetric categories
/// (validated, so it errors on non-symmetric endpoints).
pub fn transpose_module(phi: &VModule) -> Result<VModule> {
    let (n, m) = (phi.source().len(), phi.target().len());
    let mut entries = Vec::with_capacity(n * m);
    for j in 0..m {
        for i in 0..n {
            entries.push(phi.phi(i, j));
        }
    }
    make_vmodule(phi.target(), phi.source(), entries)
}

/// A module is symmetric when it forms a compatible pair with its own
/// transpose (the endpoints must be symmetric for the transpose to be a
/// module at all).
pub fn is_symmetric_module(phi: &VModule) -> Result<bool> {
    let back = match transpose_module(phi) {
        Ok(b) => b,
        Err(_) => return Ok(false),
    };
    Ok(check_pair(phi, &back)?.report.is_pass())
}

/// Lifted value of a module at the full carriers under the chosen
/// sublifting. The plain and down-restricted liftings share one formula;
/// the symmetric sublifting goes through the generic presheaf route and is
/// therefore limited to finite quantales.
pub fn ktilde_full(sub: Sublifting, phi: &VModule) -> Result<Value> {
    match sub {
        Sublifting::H | Sublifting::HDown => htilde(
            phi,
            full_mask(phi.source().len()),
            full_mask(phi.target().len()),
        ),
        Sublifting::HSym => {
            let ext = extend_functor(Endofunctor::HausdorffSym, phi)?;
            Ok(ext.phi(ext.source().len() - 1, ext.target().len() - 1))
        }
    }
}

fn require_symmetric(x: &VCategory, y: &VCategory) -> Result<()> {
    if !classify(x)?.symmetric || !classify(y)?.symmetric {
        return Err(Error::Precondition(
            "symmetric-module variant needs symmetric categories".into(),
        ));
    }
    Ok(())
}

/// All compatible module pairs `(φ: X ⇸ Y, φ': Y ⇸ X)`; with
/// `symmetric_only` the endpoints must be symmetric and `φ' = φ°`.
pub fn enumerate_pairs(
    x: &VCategory,
    y: &VCategory,
    symmetric_only: bool,
    cap: u128,
) -> Result<Vec<(VModule, VModule)>> {
    let mut out = Vec::new();
    if symmetric_only {
        require_symmetric(x, y)?;
        for phi in enumerate_modules(x, y, cap)? {
            let back = transpose_module(&phi)?;
            if check_pair(&phi, &back)?.report.is_pass() {
                out.push((phi, back));
            }
        }
    } else {
        let forward = enumerate_modules(x, y, cap)?;
        let backward = enumerate_modules(y, x, cap)?;
        let combos = (forward.len() as u128) * (backward.len() as u128);
        if combos > cap {
            return Err(Error::CapExceeded {
                what: "module pair enumeration".into(),
                needed: combos,
                cap,
            });
        }
        for phi in &forward {
            for back in &backward {
                if check_pair(phi, back)?.report.is_pass() {
                    out.push((phi.clone(), back.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// Computes the requested distance. Finite quantales support all
/// strategies; the cost quantale uses `optimize`.
pub fn gromov(q: &GromovQuery) -> Result<GromovResult> {
    match q.strategy {
        Strategy::Enumerate => enumerate_strategy(q),
        Strategy::Gluing => gluing_strategy(q),
        Strategy::Optimize => optimize_strategy(q),
    }
}

fn enumerate_strategy(q: &GromovQuery) -> Result<GromovResult> {
    let quant = *q.x.quantale();
    match q.variant {
        GromovVariant::Plain => {
            let mut best: Option<(Value, VModule)> = None;
            for phi in enumerate_modules(&q.x, &q.y, q.cap)? {
                let v = ktilde_full(q.sublifting, &phi)?;
                if best.as_ref().map_or(true, |(b, _)| !quant.leq(v, *b).unwrap_or(true)) {
                    best = Some((v, phi));
                }
            }
            let (value, phi) = best.ok_or_else(|| {
                Error::Precondition("no module between the inputs".into())
            })?;
            Ok(GromovResult {
                value,
                witness: Witness::Module(phi),
                attainment: Attainment::Exact,
                gap: None,
            })
        }
        GromovVariant::SymMod => {
            require_symmetric(&q.x, &q.y)?;
            let mut best: Option<(Value, VModule)> = None;
            for phi in enumerate_modules(&q.x, &q.y, q.cap)? {
                if !is_symmetric_module(&phi)? {
                    continue;
                }
                let v = ktilde_full(q.sublifting, &phi)?;
                if best.as_ref().map_or(true, |(b, _)| !quant.leq(v, *b).unwrap_or(true)) {
                    best = Some((v, phi));
                }
            }
            let (value, phi) = best.ok_or_else(|| {
                Error::Precondition("no symmetric module between the inputs".into())
            })?;
            Ok(GromovResult {
                value,
                witness: Witness::Module(phi),
                attainment: Attainment::Exact,
                gap: None,
            })
        }
        GromovVariant::SymPair => {
            let mut best: Option<(Value, VModule, VModule)> = None;
            for (phi, back) in enumerate_pairs(&q.x, &q.y, false, q.cap)? {
                let v = quant.meet2(
                    ktilde_full(q.sublifting, &phi)?,
                    ktilde_full(q.sublifting, &back)?,
                )?;
                if best
                    .as_ref()
                    .map_or(true, |(b, _, _)| !quant.leq(v, *b).unwrap_or(true))
                {
                    best = Some((v, phi, back));
                }
            }
            let (value, phi, back) = best.ok_or_else(|| {
                Error::Precondition("no compatible module pair between the inputs".into())
            })?;
            Ok(GromovResult {
                value,
                witness: Witness::Pair(phi, back),
                attainment: Attainment::Exact,
                gap: None,
            })
        }
    }
}

/// Realizes the join over category structures on the disjoint union: each
/// module (or pair) is glued into an actual category and the lifted value
/// is read off the glued structure. Independent of [`enumerate_strategy`]'s
/// direct formula, hence useful as a cross-check.
///
/// For the symmetrized sublifting the structure on subsets of the glued
/// category is the meet of the two directional Hausdorff values, and the
/// plain variant then ranges over all two-sided gluings (the one-sided
/// reverse-bottom gluing never realizes a nontrivial backward value).
fn gluing_strategy(q: &GromovQuery) -> Result<GromovResult> {
    let quant = *q.x.quantale();
    let nx = q.x.len();
    let ny = q.y.len();
    let xmask = full_mask(nx);
    let ymask = full_mask(ny) << nx;
    let lift = |z: &VCategory, am: u32, bm: u32| -> Result<Value> {
        let v = hausdorff_value(z, am, bm)?;
        if q.sublifting == Sublifting::HSym {
            quant.meet2(v, hausdorff_value(z, bm, am)?)
        } else {
            Ok(v)
        }
    };
    if q.variant == GromovVariant::Plain && q.sublifting == Sublifting::HSym {
        let mut best: Option<(Value, VModule, VModule)> = None;
        for (phi, back) in enumerate_pairs(&q.x, &q.y, false, q.cap)? {
            let z = glue(&phi, Some(&back))?;
            let v = lift(&z, xmask, ymask)?;
            if best
                .as_ref()
                .map_or(true, |(b, _, _)| !quant.leq(v, *b).unwrap_or(true))
            {
                best = Some((v, phi, back));
            }
        }
        let (value, phi, back) = best.ok_or_else(|| {
            Error::Precondition("no compatible module pair between the inputs".into())
        })?;
        return Ok(GromovResult {
            value,
            witness: Witness::Pair(phi, back),
            attainment: Attainment::Exact,
            gap: None,
        });
    }
    match q.variant {
        GromovVariant::Plain => {
            let mut best: Option<(Value, VModule)> = None;
            for phi in enumerate_modules(&q.x, &q.y, q.cap)? {
                let z = glue(&phi, None)?;
                let v = hausdorff_value(&z, xmask, ymask)?;
                if best.as_ref().map_or(true, |(b, _)| !quant.leq(v, *b).unwrap_or(true)) {
                    best = Some((v, phi));
                }
            }
            let (value, phi) = best.ok_or_else(|| {
                Error::Precondition("no module between the inputs".into())
            })?;
            Ok(GromovResult {
                value,
                witness: Witness::Module(phi),
                attainment: Attainment::Exact,
                gap: None,
            })
        }
        GromovVariant::SymMod => {
            require_symmetric(&q.x, &q.y)?;
            let mut best: Option<(Value, VModule)> = None;
            for phi in enumerate_modules(&q.x, &q.y, q.cap)? {
                if !is_symmetric_module(&phi)? {
                    continue;
                }
                let back = transpose_module(&phi)?;
                let z = glue(&phi, Some(&back))?;
                let v = lift(&z, xmask, ymask)?;
                if best.as_ref().map_or(true, |(b, _)| !quant.leq(v, *b).unwrap_or(true)) {
                    best = Some((v, phi));
                }
            }
            let (value, phi) = best.ok_or_else(|| {
                Error::Precondition("no symmetric module between the inputs".into())
            })?;
            Ok(GromovResult {
                value,
                witness: Witness::Module(phi),
                attainment: Attainment::Exact,
                gap: None,
            })
        }
        GromovVariant::SymPair => {
            let mut best: Option<(Value, VModule, VModule)> = None;
            for (phi, back) in enumerate_pairs(&q.x, &q.y, false, q.cap)? {
                let z = glue(&phi, Some(&back))?;
                let v = quant.meet2(lift(&z, xmask, ymask)?, lift(&z, ymask, xmask)?)?;
                if best
                    .as_ref()
                    .map_or(true, |(b, _, _)| !quant.leq(v, *b).unwrap_or(true))
                {
                    best = Some((v, phi, back));
                }
            }
            let (value, phi, back) = best.ok_or_else(|| {
                Error::Precondition("no compatible module pair between the inputs".into())
            })?;
            Ok(GromovResult {
                value,
                witness: Witness::Pair(phi, back),
                attainment: Attainment::Exact,
                gap: None,
            })
        }
    }
}

fn optimize_strategy(q: &GromovQuery) -> Result<GromovResult> {
    if *q.x.quantale() != Quantale::Cost {
        return Err(Error::Precondition(
            "optimize strategy targets the cost quantale".into(),
        ));
    }
    if q.sublifting == Sublifting::HSym {
        return Err(Error::Precondition(
            "optimize strategy needs a sublifting acting by direct image".into(),
        ));
    }
    match q.variant {
        GromovVariant::Plain => {
            // the constant-top module dominates every module pointwise and
            // the lifted value is monotone, so it attains the join
            let top = greatest_module(&q.x, &q.y)?;
            let value = ktilde_full(q.sublifting, &top)?;
            Ok(GromovResult {
                value,
                witness: Witness::Module(top),
                attainment: Attainment::Exact,
                gap: None,
            })
        }
        GromovVariant::SymPair | GromovVariant::SymMod => {
            optimize_cost_pair(&q.x, &q.y, q.variant)
        }
    }
}

/// `G(X,Y) ∧ G(Y,X)` for the chosen base variant.
pub fn symmetrized_distance(
    x: &VCategory,
    y: &VCategory,
    base: GromovVariant,
    sublifting: Sublifting,
    strategy: Strategy,
) -> Result<Value> {
    let quant = *x.quantale();
    let fwd = gromov(&GromovQuery {
        x: x.clone(),
        y: y.clone(),
        variant: base,
        sublifting,
        strategy,
        cap: DEFAULT_ENUM_CAP,
    })?;
    let bwd = gromov(&GromovQuery {
        x: y.clone(),
        y: x.clone(),
        variant: base,
        sublifting,
        strategy,
        cap: DEFAULT_ENUM_CAP,
    })?;
    quant.meet2(fwd.value, bwd.value)
}

fn finite_entry(q: &Quantale, v: Value) -> Result<Rational> {
    match v {
        Value::Cost(Cost::Finite(r)) => Ok(r),
        Value::Cost(Cost::Infinite) => Err(Error::Precondition(
            "optimizer requires finite distances".into(),
        )),
        other => Err(Error::ForeignValue {
            quantale: q.name(),
            value: format!("{other:?}"),
        }),
    }
}

/// Exact optimizer for the symmetric distance variants over the cost
/// quantale. For each assignment pair `(σ: X→Y, τ: Y→X)` the smallest
/// feasible threshold `t` has a closed form: the seed entries `t` at
/// `(x,σx)` / `(τy,y)` propagate through the module laws to the pointwise
/// largest module `c + t` (a min-plus closure), and the pair bounds then
/// force `2t ≥ gap` for each violated inequality. The answer is the
/// minimum over assignment pairs; the witness `c + t` always attains it,
/// so the result is exact.
pub fn optimize_cost_pair(
    x: &VCategory,
    y: &VCategory,
    variant: GromovVariant,
) -> Result<GromovResult> {
    let q = *x.quantale();
    if q != Quantale::Cost {
        return Err(Error::Precondition(
            "optimizer targets the cost quantale".into(),
        ));
    }
    let sym_mod = match variant {
        GromovVariant::SymMod => {
            require_symmetric(x, y)?;
            true
        }
        GromovVariant::SymPair => false,
        GromovVariant::Plain => {
            return Err(Error::Precondition(
                "optimizer variants are sym_pair and sym_mod".into(),
            ))
        }
    };
    let (n, m) = (x.len(), y.len());
    if n > 6 || m > 6 {
        return Err(Error::CapExceeded {
            what: "optimizer carrier".into(),
            needed: n.max(m) as u128,
            cap: 6,
        });
    }

    // degenerate carriers: the lifted value of an empty meet is 0 and of
    // an empty join is ∞, for every module
    if n == 0 || m == 0 {
        let phi = greatest_module(x, y)?;
        let back = greatest_module(y, x)?;
        let fwd = htilde(&phi, full_mask(n), full_mask(m))?;
        let value = if sym_mod {
            fwd
        } else {
            q.meet2(fwd, htilde(&back, full_mask(m), full_mask(n))?)?
        };
        return Ok(GromovResult {
            value,
            witness: if sym_mod {
                Witness::Module(phi)
            } else {
                Witness::Pair(phi, back)
            },
            attainment: Attainment::Exact,
            gap: None,
        });
    }

    let a = |i: usize, j: usize| finite_entry(&q, x.a(i, j));
    let b = |i: usize, j: usize| finite_entry(&q, y.a(i, j));
    // reject infinite inputs up front
    for i in 0..n {
        for j in 0..n {
            a(i, j)?;
        }
    }
    for i in 0..m {
        for j in 0..m {
            b(i, j)?;
        }
    }

    let sigma_count = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    let tau_count = if sym_mod {
        1
    } else {
        (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX)
    };
    let total = sigma_count.saturating_mul(tau_count);
    if total > DEFAULT_ENUM_CAP {
        return Err(Error::CapExceeded {
            what: "assignment pair enumeration".into(),
            needed: total,
            cap: DEFAULT_ENUM_CAP,
        });
    }

    let zero = Rational::new(0, 1);
    let two = Rational::new(2, 1);
    let mut best: Option<(Rational, Vec<Rational>, Vec<Rational>)> = None;

    let mut sigma = vec![0usize; n];
    loop {
        let mut tau = vec![0usize; m];
        loop {
            // min-plus closure of the seed caps
            let mut c_fwd = vec![zero; n * m]; // φ without the +t offset
            for i in 0..n {
                for j in 0..m {
                    let mut v: Option<Rational> = None;
                    for x1 in 0..n {
                        let cand = a(i, x1)? + b(sigma[x1], j)?;
                        v = Some(v.map_or(cand, |w: Rational| w.min(cand)));
                    }
                    c_fwd[i * m + j] = v.unwrap();
                }
            }
            let mut c_bwd = vec![zero; m * n]; // φ' without the +t offset
            for j in 0..m {
                for i in 0..n {
                    c_bwd[j * n + i] = if sym_mod {
                        c_fwd[i * m + j]
                    } else {
                        let mut v: Option<Rational> = None;
                        for y1 in 0..m {
                            let cand = b(j, y1)? + a(tau[y1], i)?;
                            v = Some(v.map_or(cand, |w: Rational| w.min(cand)));
                        }
                        v.unwrap()
                    };
                }
            }
            // smallest t making the pair bounds hold for (c_fwd+t, c_bwd+t)
            let mut t = zero;
            for i in 0..n {
                for i2 in 0..n {
                    for j in 0..m {
                        let gap = (a(i, i2)? - c_fwd[i * m + j] - c_bwd[j * n + i2]) / two;
                        t = t.max(gap);
                    }
                }
            }
            for j in 0..m {
                for j2 in 0..m {
                    for i in 0..n {
                        let gap = (b(j, j2)? - c_bwd[j * n + i] - c_fwd[i * m + j2]) / two;
                        t = t.max(gap);
                    }
                }
            }
            if best.as_ref().map_or(true, |(bt, _, _)| t < *bt) {
                let phi: Vec<Rational> = c_fwd.iter().map(|&c| c + t).collect();
                let back: Vec<Rational> = c_bwd.iter().map(|&c| c + t).collect();
                best = Some((t, phi, back));
            }
            if sym_mod {
                break; // a single forward assignment drives this variant
            }
            // advance τ
            let mut pos = m;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                tau[pos] += 1;
                if tau[pos] < n {
                    break;
                }
                tau[pos] = 0;
            }
            if tau.iter().all(|&t| t == 0) {
                break;
            }
        }
        // advance σ
        let mut pos = n;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            sigma[pos] += 1;
            if sigma[pos] < m {
                break;
            }
            sigma[pos] = 0;
        }
        if sigma.iter().all(|&s| s == 0) {
            break;
        }
    }

    let (t, phi_entries, back_entries) = best.unwrap();
    let to_values = |rs: &[Rational]| -> Vec<Value> {
        rs.iter().map(|&r| Value::Cost(Cost::Finite(r))).collect()
    };
    let phi = make_vmodule(x, y, to_values(&phi_entries))?;
    let back = make_vmodule(y, x, to_values(&back_entries))?;
    debug_assert!(check_pair(&phi, &back)?.report.is_pass());
    Ok(GromovResult {
        value: Value::Cost(Cost::Finite(t)),
        witness: if sym_mod {
            Witness::Module(phi)
        } else {
            Witness::Pair(phi, back)
        },
        attainment: Attainment::Exact,
        gap: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GromovSuite {
    VcatLaws,
    IsoInvariance,
    MonotoneInK,
    Cor84,
    Cor91,
    Chaos,
    Monoid,
    Homomorphism,
}

impl GromovSuite {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "vcat_laws" => GromovSuite::VcatLaws,
            "iso_invariance" => GromovSuite::IsoInvariance,
            "monotone_in_K" => GromovSuite::MonotoneInK,
            "cor84" => GromovSuite::Cor84,
            "cor91" => GromovSuite::Cor91,
            "chaos" => GromovSuite::Chaos,
            "monoid" => GromovSuite::Monoid,
            "homomorphism" => GromovSuite::Homomorphism,
            other => return Err(Error::Parse(format!("unknown gromov suite `{other}`"))),
        })
    }
}

pub fn check_gromov_laws(q: &Quantale, suite: GromovSuite, seed: u64) -> Result<LawReport> {
    match suite {
        GromovSuite::VcatLaws => vcat_laws_suite(q),
        GromovSuite::IsoInvariance => iso_invariance_suite(q),
        GromovSuite::MonotoneInK => monotone_suite(q),
        GromovSuite::Cor84 => cor84_suite(q),
        GromovSuite::Cor91 => cor91_suite(q),
        GromovSuite::Chaos => chaos_suite(q),
        GromovSuite::Monoid => monoid_suite(q, seed),
        GromovSuite::Homomorphism => homomorphism_suite(q, seed),
    }
}

fn small_corpus(q: &Quantale, max_size: usize) -> Result<Vec<VCategory>> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        out.extend(enumerate_vcategories(q, size)?);
    }
    Ok(out)
}

fn gh_value(x: &VCategory, y: &VCategory, sub: Sublifting) -> Result<Value> {
    gromov(&GromovQuery {
        x: x.clone(),
        y: y.clone(),
        variant: GromovVariant::Plain,
        sublifting: sub,
        strategy: Strategy::Enumerate,
        cap: DEFAULT_ENUM_CAP,
    })
    .map(|r| r.value)
}

/// The greatest-module shortcut: the constant-top module attains the join
/// defining the plain distance.
pub fn gh_shortcut(x: &VCategory, y: &VCategory) -> Result<Value> {
    let top = greatest_module(x, y)?;
    htilde(&top, full_mask(x.len()), full_mask(y.len()))
}

fn finite_or_skip(q: &Quantale, suite: &'static str) -> Option<LawReport> {
    if q.is_finite() {
        None
    } else {
        Some(LawReport::skipped(suite, "needs a finite quantale"))
    }
}

/// Reflexivity and the tensor triangle inequality of the plain distance,
/// plus agreement with the greatest-module shortcut.
fn vcat_laws_suite(q: &Quantale) -> Result<LawReport> {
    const SUITE: &str = "gromov_vcat_laws";
    if let Some(r) = finite_or_skip(q, SUITE) {
        return Ok(r);
    }
    let cats = small_corpus(q, 2)?;
    let k = cats.len();
    let mut table = vec![q.bottom(); k * k];
    let mut checked = 0usize;
    for i in 0..k {
        for j in 0..k {
            checked += 1;
            let v = gh_value(&cats[i], &cats[j], Sublifting::H)?;
            let shortcut = gh_shortcut(&cats[i], &cats[j])?;
            if v != shortcut {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "enumerated join equals the greatest-module value".into(),
                        inputs: vec![
                            ("X".into(), format!("#{i}")),
                            ("Y".into(), format!("#{j}")),
                        ],
                        lhs: q.format_value(v),
                        rhs: q.format_value(shortcut),
                    },
                ));
            }
            table[i * k + j] = v;
        }
    }
    for i in 0..k {
        checked += 1;
        if !q.leq(q.unit(), table[i * k + i])? {
            return Ok(LawReport::fail(
                SUITE,
                checked,
                Counterexample {
                    law: "reflexivity".into(),
                    inputs: vec![("X".into(), format!("#{i}"))],
                    lhs: q.format_value(q.unit()),
                    rhs: q.format_value(table[i * k + i]),
                },
            ));
        }
    }
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                checked += 1;
                let lhs = q.tensor(table[i * k + j], table[j * k + l])?;
                if !q.leq(lhs, table[i * k + l])? {
                    return Ok(LawReport::fail(
                        SUITE,
                        checked,
                        Counterexample {
                            law: "triangle inequality".into(),
                            inputs: vec![
                                ("X".into(), format!("#{i}")),
                                ("Y".into(), format!("#{j}")),
                                ("Z".into(), format!("#{l}")),
                            ],
                            lhs: q.format_value(lhs),
                            rhs: q.format_value(table[i * k + l]),
                        },
                    ));
                }
            }
        }
    }
    Ok(LawReport::pass(SUITE, checked))
}

fn relabeled_copy(x: &VCategory, perm: &[usize]) -> Result<VCategory> {
    let carrier: Vec<String> = perm.iter().map(|&i| x.carrier()[i].clone()).collect();
    let mut entries = Vec::with_capacity(x.len() * x.len());
    for &i in perm {
        for &j in perm {
            entries.push(x.a(i, j));
        }
    }
    crate::enriched::make_vcategory(*x.quantale(), carrier, entries)
}

/// The distance only depends on the isomorphism class of each input.
fn iso_invariance_suite(q: &Quantale) -> Result<LawReport> {
    const SUITE: &str = "gromov_iso_invariance";
    if let Some(r) = finite_or_skip(q, SUITE) {
        return Ok(r);
    }
    let cats = small_corpus(q, 2)?;
    let mut checked = 0usize;
    for x in &cats {
        if x.len() < 2 {
            continue;
        }
        let perm: Vec<usize> = (0..x.len()).rev().collect();
        let xr = relabeled_copy(x, &perm)?;
        for y in &cats {
            checked += 1;
            let v = gh_value(x, y, Sublifting::H)?;
            let vr = gh_value(&xr, y, Sublifting::H)?;
            let wr = gh_value(y, &xr, Sublifting::H)?;
            let w = gh_value(y, x, Sublifting::H)?;
            if v != vr || w != wr {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "invariance under relabeling".into(),
                        inputs: vec![("X".into(), format!("{:?}", x.carrier()))],
                        lhs: format!("{} / {}", q.format_value(v), q.format_value(w)),
                        rhs: format!("{} / {}", q.format_value(vr), q.format_value(wr)),
                    },
                ));
            }
        }
    }
    Ok(LawReport::pass(SUITE, checked))
}

/// The distance is monotone in the sublifting: the down-restricted value
/// never exceeds the plain value.
fn monotone_suite(q: &Quantale) -> Result<LawReport> {
    const SUITE: &str = "gromov_monotone_in_K";
    if let Some(r) = finite_or_skip(q, SUITE) {
        return Ok(r);
    }
    let cats = small_corpus(q, 2)?;
    let mut checked = 0usize;
    for x in &cats {
        for y in &cats {
            checked += 1;
            let down = gh_value(x, y, Sublifting::HDown)?;
            let plain = gh_value(x, y, Sublifting::H)?;
            if !q.leq(down, plain)? {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "sublifting monotonicity".into(),
                        inputs: vec![
                            ("X".into(), format!("{:?}", x.carrier())),
                            ("Y".into(), format!("{:?}", y.carrier())),
                        ],
                        lhs: q.format_value(down),
                        rhs: q.format_value(plain),
                    },
                ));
            }
        }
    }
    Ok(LawReport::pass(SUITE, checked))
}

/// The pair-based symmetric distance equals the plain distance taken with
/// the symmetrized sublifting, when the latter is evaluated over gluings
/// (the structure on subsets of a glued category is the meet of the two
/// directional Hausdorff values). The generic presheaf-route extension of
/// the symmetrized lifting is only an upper bound: it can be strictly
/// larger because that lifting is not monotone on hom-orders, so the
/// gluing characterization of the plain distance does not apply to it; see
/// the inline test pinning a two-point counterexample.
fn cor84_suite(q: &Quantale) -> Result<LawReport> {
    const SUITE: &str = "gromov_cor84";
    if let Some(r) = finite_or_skip(q, SUITE) {
        return Ok(r);
    }
    let max = if q.elements().map_or(0, |e| e.len()) <= 2 {
        2
    } else {
        1
    };
    let cats = small_corpus(q, max)?;
    let mut checked = 0usize;
    for x in &cats {
        for y in &cats {
            checked += 1;
            let lhs = gromov(&GromovQuery {
                x: x.clone(),
                y: y.clone(),
                variant: GromovVariant::SymPair,
                sublifting: Sublifting::H,
                strategy: Strategy::Enumerate,
                cap: DEFAULT_ENUM_CAP,
            })?
            .value;
            let rhs = gromov(&GromovQuery {
                x: x.clone(),
                y: y.clone(),
                variant: GromovVariant::Plain,
                sublifting: Sublifting::HSym,
                strategy: Strategy::Gluing,
                cap: DEFAULT_ENUM_CAP,
            })?
            .value;
            if lhs != rhs {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "pair distance equals symmetrized-sublifting distance".into(),
                        inputs: vec![
                            ("X".into(), format!("{:?}", x.carrier())),
                            ("Y".into(), format!("{:?}", y.carrier())),
                        ],
                        lhs: q.format_value(lhs),
                        rhs: q.format_value(rhs),
                    },
                ));
            }
            let generic = gromov(&GromovQuery {
                x: x.clone(),
                y: y.clone(),
                variant: GromovVariant::Plain,
                sublifting: Sublifting::HSym,
                strategy: Strategy::Enumerate,
                cap: DEFAULT_ENUM_CAP,
            })?
            .value;
            if !q.leq(lhs, generic)? {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "presheaf-route extension bounds the pair distance".into(),
                        inputs: vec![
                            ("X".into(), format!("{:?}", x.carrier())),
                            ("Y".into(), format!("{:?}", y.carrier())),
                        ],
                        lhs: q.format_value(lhs),
                        rhs: q.format_value(generic),
                    },
                ));
            }
        }
    }
    Ok(LawReport::pass(SUITE, checked))
}

/// On separated inputs: every one-sided gluing is separated, the gluing
/// strategy agrees with enumeration, and the down-restricted distance
/// agrees with the plain one.
fn cor91_suite(q: &Quantale) -> Result<LawReport> {
    const SUITE: &str = "gromov_cor91";
    if let Some(r) = finite_or_skip(q, SUITE) {
        return Ok(r);
    }
    let cats: Vec<VCategory> = small_corpus(q, 2)?
        .into_iter()
        .filter(|c| classify(c).map(|f| f.separated).unwrap_or(false))
        .collect();
    let mut checked = 0usize;
    for x in &cats {
        for y in &cats {
            for phi in enumerate_modules(x, y, DEFAULT_ENUM_CAP)? {
                checked += 1;
                let z = glue(&phi, None)?;
                if !classify(&z)?.separated {
                    return Ok(LawReport::fail(
                        SUITE,
                        checked,
                        Counterexample {
                            law: "one-sided gluing of separated categories is separated".into(),
                            inputs: vec![("phi".into(), format!("{:?}", phi.relation().entries()))],
                            lhs: "separated".into(),
                            rhs: "not separated".into(),
                        },
                    ));
                }
            }
            checked += 1;
            let plain = gh_value(x, y, Sublifting::H)?;
            let down = gh_value(x, y, Sublifting::HDown)?;
            let glued = gromov(&GromovQuery {
                x: x.clone(),
                y: y.clone(),
                variant: GromovVariant::Plain,
                sublifting: Sublifting::H,
                strategy: Strategy::Gluing,
                cap: DEFAULT_ENUM_CAP,
            })?
            .value;
            if plain != down || plain != glued {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "plain, down-restricted and gluing values agree".into(),
                        inputs: vec![
                            ("X".into(), format!("{:?}", x.carrier())),
                            ("Y".into(), format!("{:?}", y.carrier())),
                        ],
                        lhs: q.format_value(plain),
                        rhs: format!(
                            "{} / {}",
                            q.format_value(down),
                            q.format_value(glued)
                        ),
                    },
                ));
            }
        }
    }
    Ok(LawReport::pass(SUITE, checked))
}

/// The plain distance between nonempty categories is constantly the top
/// element; with an empty side it degenerates to ⊤ or ⊥.
fn chaos_suite(q: &Quantale) -> Result<LawReport> {
    const SUITE: &str = "gromov_chaos";
    if let Some(r) = finite_or_skip(q, SUITE) {
        return Ok(r);
    }
    let cats = small_corpus(q, 2)?;
    let mut checked = 0usize;
    for x in &cats {
        for y in &cats {
            checked += 1;
            let v = gh_value(x, y, Sublifting::H)?;
            let expected = if y.is_empty() && !x.is_empty() {
                q.bottom()
            } else {
                q.top()
            };
            if v != expected {
                return Ok(LawReport::fail(
                    SUITE,
                    checked,
                    Counterexample {
                        law: "plain distance is chaotic".into(),
                        inputs: vec![
                            ("X".into(), format!("{:?}", x.carrier())),
                            ("Y".into(), format!("{:?}", y.carrier())),
                        ],
                        lhs: q.format_value(v),
                        rhs: q.format_value(expected),
                    },
                ));
            }
        }
    }
    let mut rep = LawReport::pass(SUITE, checked);
    rep.note("empty categories excluded from the top-value claim; degenerate values checked");
    Ok(rep)
}

fn sample_categories(
    q: &Quantale,
    count: usize,
    size: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<VCategory>> {
    (0..count)
        .map(|_| crate::enriched::random_vcategory(q, size, rng))
        .collect()
}

/// Monoidality of the distance with respect to the tensor, product and
/// coproduct of categories (the latter two need the unit to be top).
fn monoid_suite(q: &Quantale, seed: u64) -> Result<LawReport> {
    const SUITE: &str = "gromov_monoid";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cats: Vec<VCategory> = if q.is_finite() {
        small_corpus(q, 2)?
    } else {
        let mut v = sample_categories(q, 4, 2, &mut rng)?;
        v.extend(sample_categories(q, 4, 3, &mut rng)?);
        v
    };
    let mut checked = 0usize;
    let modes: Vec<CombineMode> = if q.unit_is_top() {
        vec![CombineMode::Tensor, CombineMode::Product, CombineMode::Coproduct]
    } else {
        vec![CombineMode::Tensor]
    };
    for mode in &modes {
        for x in &cats {
            for x2 in &cats {
                for y in &cats {
                    for y2 in &cats {
                        checked += 1;
                        let lhs = q.tensor(gh_shortcut(x, x2)?, gh_shortcut(y, y2)?)?;
                        let cx = combine(x, y, *mode)?;
                        let cy = combine(x2, y2, *mode)?;
                        let rhs = gh_shortcut(&cx, &cy)?;
                        if !q.leq(lhs, rhs)? {
                            return Ok(LawReport::fail(
                                SUITE,
                                checked,
                                Counterexample {
                                    law: format!("monoidality under {mode:?}"),
                                    inputs: vec![
                                        ("X".into(), format!("{:?}", x.carrier())),
                                        ("Y".into(), format!("{:?}", y.carrier())),
                                    ],
                                    lhs: q.format_value(lhs),
                                    rhs: q.format_value(rhs),
                                },
                            ));
                        }
                    }
                }
            }
        }
    }
    let mut rep = LawReport::pass(SUITE, checked);
    if !q.unit_is_top() {
        rep.note("product/coproduct monoidality skipped: unit below top");
        // log the outcome of a counterexample search for the meet-level
        // inequality the product case would need
        let mut found = None;
        'search: for x in &cats {
            for y in &cats {
                let p = combine(x, y, CombineMode::Product)?;
                let (nx, ny) = (x.len(), y.len());
                for am in 0..(1u32 << nx) {
                    for bm in 0..(1u32 << ny) {
                        for am2 in 0..(1u32 << nx) {
                            for bm2 in 0..(1u32 << ny) {
                                let rect = |a: u32, b: u32| -> u32 {
                                    let mut m = 0;
                                    for i in 0..nx {
                                        for j in 0..ny {
                                            if a >> i & 1 == 1 && b >> j & 1 == 1 {
                                                m |= 1 << (i * ny + j);
                                            }
                                        }
                                    }
                                    m
                                };
                                let lifted = hausdorff_value(
                                    &p,
                                    rect(am, bm),
                                    rect(am2, bm2),
                                )?;
                                let split = q.meet2(
                                    hausdorff_value(x, am, am2)?,
                                    hausdorff_value(y, bm, bm2)?,
                                )?;
                                if !q.leq(split, lifted)? {
                                    found = Some((
                                        subset_label(x.carrier(), am),
                                        subset_label(y.carrier(), bm),
                                    ));
                                    break 'search;
                                }
                            }
                        }
                    }
                }
            }
        }
        match found {
            Some((a, b)) => rep.note(&format!(
                "meet-inequality counterexample found at A = {a}, B = {b}"
            )),
            None => rep.note(
                "meet-inequality counterexample search: none found on this corpus (chain quantale)",
            ),
        }
    }
    Ok(rep)
}

/// The coproduct bijection respects the lifted structures exactly, and the
/// lifting of the empty category is terminal.
fn homomorphism_suite(q: &Quantale, seed: u64) -> Result<LawReport> {
    const SUITE: &str = "gromov_homomorphism";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cats: Vec<VCategory> = if q.is_finite() {
        small_corpus(q, 3)?
            .into_iter()
            .take(20)
            .collect()
    } else {
        let mut v = sample_categories(q, 4, 2, &mut rng)?;
        v.extend(sample_categories(q, 4, 3, &mut rng)?);
        v
    };
    let mut checked = 0usize;
    for x in &cats {
        for y in &cats {
            let z = combine(x, y, CombineMode::Coproduct)?;
            let (nx, ny) = (x.len(), y.len());
            for am in 0..(1u32 << nx) {
                for bm in 0..(1u32 << ny) {
                    for am2 in 0..(1u32 << nx) {
                        for bm2 in 0..(1u32 << ny) {
                            checked += 1;
                            let lifted =
                                hausdorff_value(&z, am | bm << nx, am2 | bm2 << nx)?;
                            let split = q.meet2(
                                hausdorff_value(x, am, am2)?,
                                hausdorff_value(y, bm, bm2)?,
                            )?;
                            if lifted != split {
                                return Ok(LawReport::fail(
                                    SUITE,
                                    checked,
                                    Counterexample {
                                        law: "coproduct lifting splits as a meet".into(),
                                        inputs: vec![
                                            ("A+B".into(), subset_label(z.carrier(), am | bm << nx)),
                                            (
                                                "A'+B'".into(),
                                                subset_label(z.carrier(), am2 | bm2 << nx),
                                            ),
                                        ],
                                        lhs: q.format_value(lifted),
                                        rhs: q.format_value(split),
                                    },
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    // the lifting of the empty category is a single object with top
    // self-distance, and every lifted category maps into it uniquely
    checked += 1;
    let empty = crate::enriched::make_vcategory(*q, vec![], vec![])?;
    let h_empty = crate::hausdorff::hausdorff_category(&empty, crate::hausdorff::HausdorffVariant::Plain)?;
    if h_empty.len() != 1 || h_empty.h(0, 0)? != q.top() {
        return Ok(LawReport::fail(
            SUITE,
            checked,
            Counterexample {
                law: "lifting of the empty category is terminal".into(),
                inputs: vec![],
                lhs: format!("{} objects", h_empty.len()),
                rhs: "1 object with top structure".into(),
            },
        ));
    }
    Ok(LawReport::pass(SUITE, checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::{make_vcategory, VFunctorMap};
    use crate::quantale::make_builtin;
    use crate::vmodule::adjoint_pair;

    fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    fn cost(n: i64) -> Value {
        Value::Cost(Cost::from_int(n))
    }

    fn half() -> Value {
        Value::Cost(Cost::ratio(1, 2))
    }

    fn singleton() -> VCategory {
        make_vcategory(Quantale::Cost, labels(&["p"]), vec![cost(0)]).unwrap()
    }

    fn triangle() -> VCategory {
        make_vcategory(
            Quantale::Cost,
            labels(&["x", "y", "z"]),
            vec![
                cost(0),
                cost(1),
                cost(1),
                cost(1),
                cost(0),
                cost(1),
                cost(1),
                cost(1),
                cost(0),
            ],
        )
        .unwrap()
    }

    fn query(
        x: &VCategory,
        y: &VCategory,
        variant: GromovVariant,
        strategy: Strategy,
    ) -> GromovQuery {
        GromovQuery {
            x: x.clone(),
            y: y.clone(),
            variant,
            sublifting: Sublifting::H,
            strategy,
            cap: DEFAULT_ENUM_CAP,
        }
    }

    #[test]
    fn intro_spaces_distances() {
        let x = singleton();
        let y = triangle();

        // plain distance vanishes with the all-zero witness
        let r = gromov(&query(&x, &y, GromovVariant::Plain, Strategy::Optimize)).unwrap();
        assert_eq!(r.value, cost(0));
        assert_eq!(r.attainment, Attainment::Exact);
        match &r.witness {
            Witness::Module(phi) => {
                assert!(phi.relation().entries().iter().all(|&v| v == cost(0)))
            }
            _ => panic!("expected a module witness"),
        }

        // symmetrization of the plain distance still vanishes
        assert_eq!(
            symmetrized_distance(&x, &y, GromovVariant::Plain, Sublifting::H, Strategy::Optimize)
                .unwrap(),
            cost(0)
        );

        // symmetric-module variant: 0 one way, 1/2 the other
        let fwd = optimize_cost_pair(&x, &y, GromovVariant::SymMod).unwrap();
        assert_eq!(fwd.value, cost(0));
        let bwd = optimize_cost_pair(&y, &x, GromovVariant::SymMod).unwrap();
        assert_eq!(bwd.value, half());
        match &bwd.witness {
            Witness::Module(phi) => {
                assert!(phi.relation().entries().iter().all(|&v| v == half()));
                // re-evaluating the lifted value on the witness reproduces it
                assert_eq!(htilde(phi, 0b111, 0b1).unwrap(), half());
            }
            _ => panic!("expected a module witness"),
        }

        // its symmetrization, and the pair variant, give 1/2
        assert_eq!(
            symmetrized_distance(&x, &y, GromovVariant::SymMod, Sublifting::H, Strategy::Optimize)
                .unwrap(),
            half()
        );
        let pair = optimize_cost_pair(&x, &y, GromovVariant::SymPair).unwrap();
        assert_eq!(pair.value, half());
        match &pair.witness {
            Witness::Pair(phi, back) => {
                let v = Quantale::Cost
                    .meet2(
                        htilde(phi, 0b1, 0b111).unwrap(),
                        htilde(back, 0b111, 0b1).unwrap(),
                    )
                    .unwrap();
                assert_eq!(v, half());
            }
            _ => panic!("expected a pair witness"),
        }
    }

    #[test]
    fn optimizer_degenerate_and_guarded_inputs() {
        // two singletons: everything collapses to zero
        let p = singleton();
        let r = optimize_cost_pair(&p, &p, GromovVariant::SymPair).unwrap();
        assert_eq!(r.value, cost(0));

        // isometric copies: zero with an exact witness
        let y = triangle();
        let r = optimize_cost_pair(&y, &y, GromovVariant::SymMod).unwrap();
        assert_eq!(r.value, cost(0));

        // infinite entries rejected
        let inf = make_vcategory(
            Quantale::Cost,
            labels(&["a", "b"]),
            vec![cost(0), Value::Cost(Cost::Infinite), Value::Cost(Cost::Infinite), cost(0)],
        )
        .unwrap();
        assert!(matches!(
            optimize_cost_pair(&inf, &inf, GromovVariant::SymPair),
            Err(Error::Precondition(_))
        ));

        // oversized carriers rejected
        let d = |i: i64, j: i64| cost((i - j).abs());
        let n = 7usize;
        let entries: Vec<Value> = (0..n as i64)
            .flat_map(|i| (0..n as i64).map(move |j| d(i, j)))
            .collect();
        let big = make_vcategory(
            Quantale::Cost,
            (0..n).map(|i| format!("p{i}")).collect(),
            entries,
        )
        .unwrap();
        assert!(matches!(
            optimize_cost_pair(&big, &big, GromovVariant::SymPair),
            Err(Error::CapExceeded { .. })
        ));

        // empty carriers
        let empty = make_vcategory(Quantale::Cost, vec![], vec![]).unwrap();
        let r = optimize_cost_pair(&empty, &empty, GromovVariant::SymPair).unwrap();
        assert_eq!(r.value, cost(0));
        let r = optimize_cost_pair(&p, &empty, GromovVariant::SymPair).unwrap();
        assert_eq!(r.value, Value::Cost(Cost::Infinite));
    }

    #[test]
    fn enumeration_matches_gluing_and_shortcut() {
        let q = Quantale::Bool2;
        let cats = small_corpus(&q, 2).unwrap();
        for x in &cats {
            for y in &cats {
                for variant in [GromovVariant::Plain, GromovVariant::SymPair] {
                    let e = gromov(&query(x, y, variant, Strategy::Enumerate)).unwrap();
                    let g = gromov(&query(x, y, variant, Strategy::Gluing)).unwrap();
                    assert_eq!(e.value, g.value);
                }
            }
        }
        // shortcut equality over a second quantale
        let q2 = make_builtin("lukasiewicz", Some(2)).unwrap();
        for x in small_corpus(&q2, 2).unwrap() {
            for y in small_corpus(&q2, 1).unwrap() {
                assert_eq!(
                    gh_value(&x, &y, Sublifting::H).unwrap(),
                    gh_shortcut(&x, &y).unwrap()
                );
            }
        }
    }

    #[test]
    fn pair_enumeration_contains_adjoint_pairs() {
        let q = Quantale::Bool2;
        let chain = make_vcategory(
            q,
            labels(&["0", "1"]),
            vec![
                Value::Bool(true),
                Value::Bool(true),
                Value::Bool(false),
                Value::Bool(true),
            ],
        )
        .unwrap();
        let f = VFunctorMap::identity(&chain);
        let (comp, conj) = adjoint_pair(&f).unwrap();
        let pairs = enumerate_pairs(&chain, &chain, false, DEFAULT_ENUM_CAP).unwrap();
        assert!(pairs.iter().any(|(a, b)| {
            a.relation().entries() == comp.relation().entries()
                && b.relation().entries() == conj.relation().entries()
        }));

        // symmetric_only demands symmetric endpoints
        assert!(matches!(
            enumerate_pairs(&chain, &chain, true, DEFAULT_ENUM_CAP),
            Err(Error::Precondition(_))
        ));
        let disc = make_vcategory(
            q,
            labels(&["a"]),
            vec![Value::Bool(true)],
        )
        .unwrap();
        let sym_pairs = enumerate_pairs(&disc, &disc, true, DEFAULT_ENUM_CAP).unwrap();
        assert!(!sym_pairs.is_empty());
    }

    #[test]
    fn law_suites_pass() {
        let q = Quantale::Bool2;
        for suite in [
            GromovSuite::VcatLaws,
            GromovSuite::IsoInvariance,
            GromovSuite::MonotoneInK,
            GromovSuite::Cor84,
            GromovSuite::Cor91,
            GromovSuite::Chaos,
            GromovSuite::Monoid,
        ] {
            let r = check_gromov_laws(&q, suite, 5).unwrap();
            assert!(r.is_pass(), "{r}");
        }
        let r = check_gromov_laws(&Quantale::Cost, GromovSuite::Homomorphism, 5).unwrap();
        assert!(r.is_pass(), "{r}");
        let r = check_gromov_laws(&Quantale::Bool2, GromovSuite::Homomorphism, 5).unwrap();
        assert!(r.is_pass(), "{r}");
    }

    #[test]
    fn three_chain_monoid_suite_skips_with_note() {
        let r = check_gromov_laws(&Quantale::ThreeChain, GromovSuite::Monoid, 5).unwrap();
        assert!(r.is_pass(), "{r}");
        let shown = format!("{r}");
        assert!(shown.contains("skipped"), "{shown}");
        assert!(shown.contains("counterexample search"), "{shown}");
    }

    #[test]
    fn sym_mod_requires_symmetric_inputs() {
        let q = Quantale::Bool2;
        let chain = make_vcategory(
            q,
            labels(&["0", "1"]),
            vec![
                Value::Bool(true),
                Value::Bool(true),
                Value::Bool(false),
                Value::Bool(true),
            ],
        )
        .unwrap();
        assert!(matches!(
            gromov(&query(&chain, &chain, GromovVariant::SymMod, Strategy::Enumerate)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sym_variants_relate_on_symmetric_inputs() {
        // pair-based value never exceeds the symmetric-module value
        let q = Quantale::Bool2;
        let cats: Vec<VCategory> = small_corpus(&q, 2)
            .unwrap()
            .into_iter()
            .filter(|c| classify(c).unwrap().symmetric && !c.is_empty())
            .collect();
        for x in &cats {
            for y in &cats {
                let pair = gromov(&query(x, y, GromovVariant::SymPair, Strategy::Enumerate))
                    .unwrap()
                    .value;
                let smod = gromov(&query(x, y, GromovVariant::SymMod, Strategy::Enumerate))
                    .unwrap()
                    .value;
                assert!(q.leq(pair, smod).unwrap());
            }
        }
    }

    /// The presheaf-route extension of the symmetrized lifting is a genuine
    /// upper bound: on a singleton against a two-point discrete space the
    /// constant-top module maps both points to the same presheaf, giving a
    /// top extension value, while every compatible pair (equivalently every
    /// gluing) is forced to a bottom value by the discrete structure.
    #[test]
    fn symmetrized_sublifting_extension_can_exceed_pair_distance() {
        let q = Quantale::Bool2;
        let point = make_vcategory(q, labels(&["p"]), vec![Value::Bool(true)]).unwrap();
        let discrete = make_vcategory(
            q,
            labels(&["u", "v"]),
            vec![
                Value::Bool(true),
                Value::Bool(false),
                Value::Bool(false),
                Value::Bool(true),
            ],
        )
        .unwrap();
        let base = query(&point, &discrete, GromovVariant::Plain, Strategy::Enumerate);
        let generic = gromov(&GromovQuery {
            sublifting: Sublifting::HSym,
            ..base.clone()
        })
        .unwrap()
        .value;
        let glued = gromov(&GromovQuery {
            sublifting: Sublifting::HSym,
            strategy: Strategy::Gluing,
            ..base.clone()
        })
        .unwrap()
        .value;
        let pair = gromov(&GromovQuery {
            variant: GromovVariant::SymPair,
            ..base
        })
        .unwrap()
        .value;
        assert_eq!(generic, Value::Bool(true));
        assert_eq!(glued, Value::Bool(false));
        assert_eq!(pair, Value::Bool(false));
    }
}
