//! V-modules (bimodules/profunctors between V-categories): validation,
//! composition, companions and conjoints of maps, restriction, gluing of
//! two categories along a (co)module pair, and the tensor/product/coproduct
//! of modules.

use crate::enriched::{
    combine, validate_vcategory, CombineMode, VCategory, VFunctorMap, VRelation,
};
use crate::error::{Error, Result};
use crate::quantale::{Quantale, Value};
use crate::report::{Counterexample, LawReport};

/// A V-relation `φ: X ⇸ Y` compatible with both category structures:
/// `φ · a ≤ φ` and `b · φ ≤ φ` (equivalently, equality holds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VModule {
    source: VCategory,
    target: VCategory,
    phi: VRelation,
}

impl VModule {
    pub fn source(&self) -> &VCategory {
        &self.source
    }

    pub fn target(&self) -> &VCategory {
        &self.target
    }

    pub fn quantale(&self) -> &Quantale {
        self.phi.quantale()
    }

    pub fn phi(&self, x: usize, y: usize) -> Value {
        self.phi.get(x, y)
    }

    pub fn relation(&self) -> &VRelation {
        &self.phi
    }

    /// Pointwise module order.
    pub fn leq(&self, other: &VModule) -> Result<bool> {
        self.phi.leq(&other.phi)
    }
}

/// Validates the two action laws pointwise, with a witnessed rejection.
pub fn make_vmodule(source: &VCategory, target: &VCategory, matrix: Vec<Value>) -> Result<VModule> {
    if source.quantale() != target.quantale() {
        return Err(Error::QuantaleMismatch(
            source.quantale().name(),
            target.quantale().name(),
        ));
    }
    let q = *source.quantale();
    let phi = VRelation::new(
        q,
        source.carrier().to_vec(),
        target.carrier().to_vec(),
        matrix,
    )?;
    // Left action: a(x',x) ⊗ φ(x,y) ≤ φ(x',y).
    for xp in 0..source.len() {
        for x in 0..source.len() {
            for y in 0..target.len() {
                let lhs = q.tensor(source.a(xp, x), phi.get(x, y))?;
                if !q.leq(lhs, phi.get(xp, y))? {
                    return Err(Error::LeftAction {
                        xp: source.carrier()[xp].clone(),
                        x: source.carrier()[x].clone(),
                        y: target.carrier()[y].clone(),
                        lhs: q.format_value(lhs),
                        rhs: q.format_value(phi.get(xp, y)),
                    });
                }
            }
        }
    }
    // Right action: φ(x,y) ⊗ b(y,y') ≤ φ(x,y').
    for x in 0..source.len() {
        for y in 0..target.len() {
            for yp in 0..target.len() {
                let lhs = q.tensor(phi.get(x, y), target.a(y, yp))?;
                if !q.leq(lhs, phi.get(x, yp))? {
                    return Err(Error::RightAction {
                        x: source.carrier()[x].clone(),
                        y: target.carrier()[y].clone(),
                        yp: target.carrier()[yp].clone(),
                        lhs: q.format_value(lhs),
                        rhs: q.format_value(phi.get(x, yp)),
                    });
                }
            }
        }
    }
    Ok(VModule {
        source: source.clone(),
        target: target.clone(),
        phi,
    })
}

/// The identity module `1_X*` is the structure of `X` itself.
pub fn identity_module(x: &VCategory) -> VModule {
    VModule {
        source: x.clone(),
        target: x.clone(),
        phi: x.structure().clone(),
    }
}

/// The greatest module `X ⇸ Y`: constantly `⊤`.
pub fn greatest_module(x: &VCategory, y: &VCategory) -> Result<VModule> {
    let q = *x.quantale();
    if &q != y.quantale() {
        return Err(Error::QuantaleMismatch(q.name(), y.quantale().name()));
    }
    let phi = VRelation::new(
        q,
        x.carrier().to_vec(),
        y.carrier().to_vec(),
        vec![q.top(); x.len() * y.len()],
    )?;
    Ok(VModule {
        source: x.clone(),
        target: y.clone(),
        phi,
    })
}

/// Composite `ψ · φ : X ⇸ Z` of `φ: X ⇸ Y` and `ψ: Y ⇸ Z`, re-validated.
pub fn compose_modules(phi: &VModule, psi: &VModule) -> Result<VModule> {
    if phi.target != psi.source {
        return Err(Error::CarrierMismatch {
            left: format!("[{}]", phi.target.carrier().join(",")),
            right: format!("[{}]", psi.source.carrier().join(",")),
        });
    }
    let q = *phi.quantale();
    let mut entries = Vec::with_capacity(phi.source.len() * psi.target.len());
    for x in 0..phi.source.len() {
        for z in 0..psi.target.len() {
            let mut acc = q.bottom();
            for y in 0..phi.target.len() {
                acc = q.join2(acc, q.tensor(phi.phi(x, y), psi.phi(y, z))?)?;
            }
            entries.push(acc);
        }
    }
    make_vmodule(&phi.source, &psi.target, entries)
}

/// Which of the two adjoint modules induced by a V-functor to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompanionMode {
    /// The companion `f_*(x,y) = b(f(x), y): X ⇸ Y`.
    Lower,
    /// The conjoint `f^*(y,x) = b(y, f(x)): Y ⇸ X`.
    Upper,
}

pub fn companion_conjoint(f: &VFunctorMap, mode: CompanionMode) -> Result<VModule> {
    let x = f.source();
    let y = f.target();
    match mode {
        CompanionMode::Lower => {
            let mut entries = Vec::with_capacity(x.len() * y.len());
            for i in 0..x.len() {
                for j in 0..y.len() {
                    entries.push(y.a(f.apply(i), j));
                }
            }
            make_vmodule(x, y, entries)
        }
        CompanionMode::Upper => {
            let mut entries = Vec::with_capacity(y.len() * x.len());
            for j in 0..y.len() {
                for i in 0..x.len() {
                    entries.push(y.a(j, f.apply(i)));
                }
            }
            make_vmodule(y, x, entries)
        }
    }
}

/// Both modules of the adjoint pair `f_* ⊣ f^*` at once.
pub fn adjoint_pair(f: &VFunctorMap) -> Result<(VModule, VModule)> {
    Ok((
        companion_conjoint(f, CompanionMode::Lower)?,
        companion_conjoint(f, CompanionMode::Upper)?,
    ))
}

/// Restriction `φ(f−, g−) = g^* · φ · f_* : X' ⇸ Y'` along `f: X' → X`
/// and `g: Y' → Y`.
pub fn restrict(phi: &VModule, f: &VFunctorMap, g: &VFunctorMap) -> Result<VModule> {
    if f.target() != &phi.source || g.target() != &phi.target {
        return Err(Error::CarrierMismatch {
            left: format!("[{}]", phi.source.carrier().join(",")),
            right: format!("[{}]", f.target().carrier().join(",")),
        });
    }
    let xs = f.source();
    let ys = g.source();
    let mut entries = Vec::with_capacity(xs.len() * ys.len());
    for i in 0..xs.len() {
        for j in 0..ys.len() {
            entries.push(phi.phi(f.apply(i), g.apply(j)));
        }
    }
    make_vmodule(xs, ys, entries)
}

#[derive(Debug, Clone)]
pub struct PairReport {
    pub report: LawReport,
    /// Whether the pair is symmetric: `φ' = φ°` with both endpoint
    /// categories symmetric.
    pub symmetric: bool,
}

/// Checks `φ' · φ ≤ 1_X*` and `φ · φ' ≤ 1_Y*` for `φ: X ⇸ Y`, `φ': Y ⇸ X`.
pub fn check_pair(phi: &VModule, phi_back: &VModule) -> Result<PairReport> {
    if phi.source != phi_back.target || phi.target != phi_back.source {
        return Err(Error::CarrierMismatch {
            left: format!("[{}]", phi.source.carrier().join(",")),
            right: format!("[{}]", phi_back.target.carrier().join(",")),
        });
    }
    let q = *phi.quantale();
    let x = &phi.source;
    let y = &phi.target;
    let mut checked = 0usize;

    let fail = |a: &str, b: &str, lhs: Value, rhs: Value, checked: usize| {
        LawReport::fail(
            "module_pair",
            checked,
            Counterexample {
                law: "composite below identity module".into(),
                inputs: vec![("from".into(), a.into()), ("to".into(), b.into())],
                lhs: q.format_value(lhs),
                rhs: q.format_value(rhs),
            },
        )
    };

    let mut status: Option<LawReport> = None;
    'xloop: for i in 0..x.len() {
        for ip in 0..x.len() {
            checked += 1;
            let mut acc = q.bottom();
            for j in 0..y.len() {
                acc = q.join2(acc, q.tensor(phi.phi(i, j), phi_back.phi(j, ip))?)?;
            }
            if !q.leq(acc, x.a(i, ip))? {
                status = Some(fail(
                    &x.carrier()[i],
                    &x.carrier()[ip],
                    acc,
                    x.a(i, ip),
                    checked,
                ));
                break 'xloop;
            }
        }
    }
    if status.is_none() {
        'yloop: for j in 0..y.len() {
            for jp in 0..y.len() {
                checked += 1;
                let mut acc = q.bottom();
                for i in 0..x.len() {
                    acc = q.join2(acc, q.tensor(phi_back.phi(j, i), phi.phi(i, jp))?)?;
                }
                if !q.leq(acc, y.a(j, jp))? {
                    status = Some(fail(
                        &y.carrier()[j],
                        &y.carrier()[jp],
                        acc,
                        y.a(j, jp),
                        checked,
                    ));
                    break 'yloop;
                }
            }
        }
    }

    let transpose_equal = (0..x.len())
        .all(|i| (0..y.len()).all(|j| phi.phi(i, j) == phi_back.phi(j, i)));
    let symmetric = transpose_equal
        && crate::enriched::classify(x)?.symmetric
        && crate::enriched::classify(y)?.symmetric;

    Ok(PairReport {
        report: status.unwrap_or_else(|| LawReport::pass("module_pair", checked)),
        symmetric,
    })
}

/// Glues `X` and `Y` along `φ: X ⇸ Y` (and optionally `φ': Y ⇸ X`) into one
/// V-category on the tagged disjoint union: structure `a` and `b` on the
/// blocks, `φ` from left to right, `φ'` (or `⊥`) from right to left.
///
/// For a two-sided gluing the pair condition of [`check_pair`] is required;
/// a violation is reported as a transitivity failure of the glued category.
pub fn glue(phi: &VModule, phi_back: Option<&VModule>) -> Result<VCategory> {
    let x = &phi.source;
    let y = &phi.target;
    let q = *phi.quantale();
    if let Some(back) = phi_back {
        if back.source != *y || back.target != *x {
            return Err(Error::CarrierMismatch {
                left: format!("[{}]", y.carrier().join(",")),
                right: format!("[{}]", back.source.carrier().join(",")),
            });
        }
    }
    let nx = x.len();
    let mut carrier = Vec::with_capacity(nx + y.len());
    carrier.extend(x.carrier().iter().map(|l| format!("L:{l}")));
    carrier.extend(y.carrier().iter().map(|l| format!("R:{l}")));
    let rel = VRelation::from_fn(q, carrier.clone(), carrier.clone(), |p, r| {
        Ok(match (p < nx, r < nx) {
            (true, true) => x.a(p, r),
            (true, false) => phi.phi(p, r - nx),
            (false, true) => match phi_back {
                Some(back) => back.phi(p - nx, r),
                None => q.bottom(),
            },
            (false, false) => y.a(p - nx, r - nx),
        })
    })?;
    let cat = VCategory::new_unchecked(rel);
    validate_vcategory(&cat)?;
    Ok(cat)
}

/// All modules `X ⇸ Y` over a finite quantale, in lexicographic order of
/// their matrices (row-major, ascending quantale order per entry). The
/// constant-⊤ module is always last.
pub fn enumerate_modules(x: &VCategory, y: &VCategory, cap: u128) -> Result<Vec<VModule>> {
    let q = *x.quantale();
    if &q != y.quantale() {
        return Err(Error::QuantaleMismatch(q.name(), y.quantale().name()));
    }
    let elems = q
        .elements()
        .ok_or_else(|| Error::InfiniteQuantale("module enumeration".into()))?;
    let cells = x.len() * y.len();
    let total = (elems.len() as u128)
        .checked_pow(cells as u32)
        .unwrap_or(u128::MAX);
    if total > cap {
        return Err(Error::CapExceeded {
            what: "module enumeration".into(),
            needed: total,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; cells];
    loop {
        let entries: Vec<Value> = idx.iter().map(|&i| elems[i]).collect();
        if module_laws_hold(&q, x, y, &entries)? {
            out.push(VModule {
                source: x.clone(),
                target: y.clone(),
                phi: VRelation::new(
                    q,
                    x.carrier().to_vec(),
                    y.carrier().to_vec(),
                    entries,
                )?,
            });
        }
        // increment the least-significant (last) cell first
        let mut pos = cells;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < elems.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Quiet version of the [`make_vmodule`] law check, for enumeration.
pub(crate) fn module_laws_hold(
    q: &Quantale,
    x: &VCategory,
    y: &VCategory,
    entries: &[Value],
) -> Result<bool> {
    let m = y.len();
    let get = |i: usize, j: usize| entries[i * m + j];
    for xp in 0..x.len() {
        for i in 0..x.len() {
            for j in 0..m {
                if !q.leq(q.tensor(x.a(xp, i), get(i, j))?, get(xp, j))? {
                    return Ok(false);
                }
            }
        }
    }
    for i in 0..x.len() {
        for j in 0..m {
            for jp in 0..m {
                if !q.leq(q.tensor(get(i, j), y.a(j, jp))?, get(i, jp))? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Inverse of two-sided [`glue`]: extracts the off-diagonal blocks of a
/// category structured on the tagged union of `x` and `y`.
pub fn pair_from_gluing(
    glued: &VCategory,
    x: &VCategory,
    y: &VCategory,
) -> Result<(VModule, VModule)> {
    if glued.len() != x.len() + y.len() {
        return Err(Error::CarrierMismatch {
            left: format!("{} elements", glued.len()),
            right: format!("{} + {}", x.len(), y.len()),
        });
    }
    let nx = x.len();
    let mut forward = Vec::with_capacity(nx * y.len());
    for i in 0..nx {
        for j in 0..y.len() {
            forward.push(glued.a(i, nx + j));
        }
    }
    let mut backward = Vec::with_capacity(y.len() * nx);
    for j in 0..y.len() {
        for i in 0..nx {
            backward.push(glued.a(nx + j, i));
        }
    }
    Ok((
        make_vmodule(x, y, forward)?,
        make_vmodule(y, x, backward)?,
    ))
}

/// Tensor, product or coproduct of two modules, between the matching
/// combinations of their endpoints.
pub fn combine_modules(
    phi1: &VModule,
    phi2: &VModule,
    mode: CombineMode,
) -> Result<VModule> {
    let q = *phi1.quantale();
    if &q != phi2.quantale() {
        return Err(Error::QuantaleMismatch(q.name(), phi2.quantale().name()));
    }
    let source = combine(&phi1.source, &phi2.source, mode)?;
    let target = combine(&phi1.target, &phi2.target, mode)?;
    let entries = match mode {
        CombineMode::Tensor | CombineMode::Product => {
            let (m1, m2) = (phi1.target.len(), phi2.target.len());
            let n2 = phi2.source.len();
            let mut out = Vec::with_capacity(source.len() * target.len());
            for p in 0..source.len() {
                let (x1, x2) = (p / n2, p % n2);
                for r in 0..target.len() {
                    let (y1, y2) = (r / m2, r % m2);
                    let _ = m1;
                    out.push(match mode {
                        CombineMode::Tensor => q.tensor(phi1.phi(x1, y1), phi2.phi(x2, y2))?,
                        _ => q.meet2(phi1.phi(x1, y1), phi2.phi(x2, y2))?,
                    });
                }
            }
            out
        }
        CombineMode::Coproduct => {
            let (n1, m1) = (phi1.source.len(), phi1.target.len());
            let mut out = Vec::with_capacity(source.len() * target.len());
            for p in 0..source.len() {
                for r in 0..target.len() {
                    out.push(match (p < n1, r < m1) {
                        (true, true) => phi1.phi(p, r),
                        (false, false) => phi2.phi(p - n1, r - m1),
                        _ => q.bottom(),
                    });
                }
            }
            out
        }
    };
    make_vmodule(&source, &target, entries)
}
