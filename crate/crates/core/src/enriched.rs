//! Finite V-relations, V-categories and V-functors, with the tensor,
//! product and coproduct constructions, opposites, induced orders,
//! symmetrizations and separation flags.

use crate::error::{Error, Result};
use crate::quantale::{Quantale, Value};
use crate::report::{Counterexample, LawReport};
use itertools::Itertools;
use rand::Rng;

/// A V-valued matrix between two finite carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRelation {
    quantale: Quantale,
    source: Vec<String>,
    target: Vec<String>,
    entries: Vec<Value>,
}

impl VRelation {
    pub fn new(
        quantale: Quantale,
        source: Vec<String>,
        target: Vec<String>,
        entries: Vec<Value>,
    ) -> Result<VRelation> {
        if entries.len() != source.len() * target.len() {
            return Err(Error::MatrixShape {
                rows: if target.is_empty() { 0 } else { entries.len() / target.len() },
                cols: target.len(),
                want_rows: source.len(),
                want_cols: target.len(),
            });
        }
        for &v in &entries {
            quantale.guard(v)?;
        }
        Ok(VRelation {
            quantale,
            source,
            target,
            entries,
        })
    }

    pub fn from_fn<F>(
        quantale: Quantale,
        source: Vec<String>,
        target: Vec<String>,
        mut f: F,
    ) -> Result<VRelation>
    where
        F: FnMut(usize, usize) -> Result<Value>,
    {
        let mut entries = Vec::with_capacity(source.len() * target.len());
        for i in 0..source.len() {
            for j in 0..target.len() {
                entries.push(f(i, j)?);
            }
        }
        VRelation::new(quantale, source, target, entries)
    }

    pub fn quantale(&self) -> &Quantale {
        &self.quantale
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    pub fn rows(&self) -> usize {
        self.source.len()
    }

    pub fn cols(&self) -> usize {
        self.target.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Value {
        self.entries[i * self.target.len() + j]
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    /// Pointwise order of relations with equal carriers.
    pub fn leq(&self, other: &VRelation) -> Result<bool> {
        self.same_shape(other)?;
        for (u, v) in self.entries.iter().zip(&other.entries) {
            if !self.quantale.leq(*u, *v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pointwise join.
    pub fn join(&self, other: &VRelation) -> Result<VRelation> {
        self.same_shape(other)?;
        let mut entries = Vec::with_capacity(self.entries.len());
        for (u, v) in self.entries.iter().zip(&other.entries) {
            entries.push(self.quantale.join2(*u, *v)?);
        }
        VRelation::new(
            self.quantale,
            self.source.clone(),
            self.target.clone(),
            entries,
        )
    }

    fn same_shape(&self, other: &VRelation) -> Result<()> {
        if self.quantale != other.quantale {
            return Err(Error::QuantaleMismatch(
                self.quantale.name(),
                other.quantale.name(),
            ));
        }
        if self.source != other.source || self.target != other.target {
            return Err(Error::CarrierMismatch {
                left: format!("{}x{}", self.rows(), self.cols()),
                right: format!("{}x{}", other.rows(), other.cols()),
            });
        }
        Ok(())
    }
}

/// Relational composite: `(s · r)(x,z) = ⋁_y r(x,y) ⊗ s(y,z)` for
/// `r: X ⇸ Y`, `s: Y ⇸ Z`.
pub fn compose_rel(r: &VRelation, s: &VRelation) -> Result<VRelation> {
    if r.quantale != s.quantale {
        return Err(Error::QuantaleMismatch(r.quantale.name(), s.quantale.name()));
    }
    if r.target != s.source {
        return Err(Error::CarrierMismatch {
            left: format!("[{}]", r.target.join(",")),
            right: format!("[{}]", s.source.join(",")),
        });
    }
    let q = r.quantale;
    VRelation::from_fn(q, r.source.clone(), s.target.clone(), |x, z| {
        let mut acc = q.bottom();
        for y in 0..r.cols() {
            acc = q.join2(acc, q.tensor(r.get(x, y), s.get(y, z))?)?;
        }
        Ok(acc)
    })
}

/// The involution `r°(y,x) = r(x,y)`.
pub fn involution(r: &VRelation) -> VRelation {
    VRelation::from_fn(r.quantale, r.target.clone(), r.source.clone(), |y, x| {
        Ok(r.get(x, y))
    })
    .expect("transpose keeps shape")
}

/// V-graph of a mapping: `k` on the graph, `⊥` off it.
pub fn graph<F>(
    quantale: Quantale,
    source: &[String],
    target: &[String],
    f: F,
) -> Result<VRelation>
where
    F: Fn(&str) -> String,
{
    let mut images = Vec::with_capacity(source.len());
    for x in source {
        let y = f(x);
        let j = target
            .iter()
            .position(|t| *t == y)
            .ok_or_else(|| Error::UnknownElement(y.clone()))?;
        images.push(j);
    }
    VRelation::from_fn(quantale, source.to_vec(), target.to_vec(), |i, j| {
        Ok(if images[i] == j {
            quantale.unit()
        } else {
            quantale.bottom()
        })
    })
}

/// A finite carrier with a reflexive and transitive V-valued structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VCategory {
    structure: VRelation,
}

impl VCategory {
    pub(crate) fn new_unchecked(structure: VRelation) -> VCategory {
        VCategory { structure }
    }

    pub fn quantale(&self) -> &Quantale {
        self.structure.quantale()
    }

    pub fn carrier(&self) -> &[String] {
        self.structure.source()
    }

    pub fn len(&self) -> usize {
        self.structure.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn a(&self, i: usize, j: usize) -> Value {
        self.structure.get(i, j)
    }

    pub fn structure(&self) -> &VRelation {
        &self.structure
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.carrier()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.into()))
    }

    /// `a(x, B) = ⋁_{y ∈ B} a(x, y)` for a subset given as a bitmask.
    pub fn hom_into_subset(&self, x: usize, mask: u32) -> Result<Value> {
        let q = *self.quantale();
        let mut acc = q.bottom();
        for y in 0..self.len() {
            if mask >> y & 1 == 1 {
                acc = q.join2(acc, self.a(x, y))?;
            }
        }
        Ok(acc)
    }
}

/// Validates reflexivity and transitivity, returning a witnessed rejection
/// otherwise.
pub fn make_vcategory(
    quantale: Quantale,
    carrier: Vec<String>,
    matrix: Vec<Value>,
) -> Result<VCategory> {
    for (i, l) in carrier.iter().enumerate() {
        if carrier[..i].contains(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    let structure = VRelation::new(quantale, carrier.clone(), carrier.clone(), matrix)?;
    let cat = VCategory { structure };
    validate_vcategory(&cat)?;
    Ok(cat)
}

pub(crate) fn validate_vcategory(cat: &VCategory) -> Result<()> {
    let q = *cat.quantale();
    let n = cat.len();
    for x in 0..n {
        if !q.leq(q.unit(), cat.a(x, x))? {
            return Err(Error::Reflexivity {
                element: cat.carrier()[x].clone(),
                found: q.format_value(cat.a(x, x)),
            });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = q.tensor(cat.a(x, y), cat.a(y, z))?;
                if !q.leq(lhs, cat.a(x, z))? {
                    return Err(Error::Transitivity {
                        x: cat.carrier()[x].clone(),
                        y: cat.carrier()[y].clone(),
                        z: cat.carrier()[z].clone(),
                        lhs: q.format_value(lhs),
                        rhs: q.format_value(cat.a(x, z)),
                    });
                }
            }
        }
    }
    Ok(())
}

/// A map between V-categories, stored as target indices per source element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VFunctorMap {
    source: VCategory,
    target: VCategory,
    map: Vec<usize>,
}

impl VFunctorMap {
    /// Builds the map from images (not yet checked against the functor
    /// law — see [`check_vfunctor`]).
    pub fn new(source: VCategory, target: VCategory, images: &[String]) -> Result<VFunctorMap> {
        if images.len() != source.len() {
            return Err(Error::Precondition(format!(
                "mapping lists {} images for {} elements",
                images.len(),
                source.len()
            )));
        }
        if source.quantale() != target.quantale() {
            return Err(Error::QuantaleMismatch(
                source.quantale().name(),
                target.quantale().name(),
            ));
        }
        let map = images
            .iter()
            .map(|y| target.index(y))
            .collect::<Result<Vec<_>>>()?;
        Ok(VFunctorMap {
            source,
            target,
            map,
        })
    }

    pub fn from_indices(
        source: VCategory,
        target: VCategory,
        map: Vec<usize>,
    ) -> Result<VFunctorMap> {
        if map.len() != source.len() || map.iter().any(|&j| j >= target.len().max(1)) {
            return Err(Error::Precondition("index mapping out of range".into()));
        }
        if !map.is_empty() && target.is_empty() {
            return Err(Error::Precondition("map into empty carrier".into()));
        }
        Ok(VFunctorMap {
            source,
            target,
            map,
        })
    }

    pub fn identity(cat: &VCategory) -> VFunctorMap {
        VFunctorMap {
            source: cat.clone(),
            target: cat.clone(),
            map: (0..cat.len()).collect(),
        }
    }

    pub fn source(&self) -> &VCategory {
        &self.source
    }

    pub fn target(&self) -> &VCategory {
        &self.target
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn indices(&self) -> &[usize] {
        &self.map
    }

    pub fn compose(&self, then: &VFunctorMap) -> Result<VFunctorMap> {
        if self.target != then.source {
            return Err(Error::CarrierMismatch {
                left: format!("[{}]", self.target.carrier().join(",")),
                right: format!("[{}]", then.source.carrier().join(",")),
            });
        }
        Ok(VFunctorMap {
            source: self.source.clone(),
            target: then.target.clone(),
            map: self.map.iter().map(|&i| then.map[i]).collect(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct FunctorReport {
    pub report: LawReport,
    pub fully_faithful: bool,
}

/// Checks `a(x,y) ≤ b(f(x), f(y))` for all pairs; the map is fully
/// faithful when equality holds throughout.
pub fn check_vfunctor(f: &VFunctorMap) -> Result<FunctorReport> {
    let q = *f.source.quantale();
    let mut fully_faithful = true;
    let mut checked = 0usize;
    for x in 0..f.source.len() {
        for y in 0..f.source.len() {
            checked += 1;
            let lhs = f.source.a(x, y);
            let rhs = f.target.a(f.apply(x), f.apply(y));
            if !q.leq(lhs, rhs)? {
                return Ok(FunctorReport {
                    report: LawReport::fail(
                        "vfunctor",
                        checked,
                        Counterexample {
                            law: "a(x,y) ≤ b(f(x),f(y))".into(),
                            inputs: vec![
                                ("x".into(), f.source.carrier()[x].clone()),
                                ("y".into(), f.source.carrier()[y].clone()),
                            ],
                            lhs: q.format_value(lhs),
                            rhs: q.format_value(rhs),
                        },
                    ),
                    fully_faithful: false,
                });
            }
            if lhs != rhs {
                fully_faithful = false;
            }
        }
    }
    Ok(FunctorReport {
        report: LawReport::pass("vfunctor", checked),
        fully_faithful,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Tensor,
    Product,
    Coproduct,
}

/// Tensor, Cartesian product or coproduct of two V-categories over the
/// same quantale. Coproduct carriers are tagged `L:` / `R:` so that labels
/// stay disjoint.
pub fn combine(x: &VCategory, y: &VCategory, mode: CombineMode) -> Result<VCategory> {
    let q = *x.quantale();
    if &q != y.quantale() {
        return Err(Error::QuantaleMismatch(q.name(), y.quantale().name()));
    }
    match mode {
        CombineMode::Tensor | CombineMode::Product => {
            let mut carrier = Vec::with_capacity(x.len() * y.len());
            for xl in x.carrier() {
                for yl in y.carrier() {
                    carrier.push(format!("({xl},{yl})"));
                }
            }
            let m = y.len();
            let rel = VRelation::from_fn(q, carrier.clone(), carrier.clone(), |p, r| {
                let (x1, y1) = (p / m, p % m);
                let (x2, y2) = (r / m, r % m);
                match mode {
                    CombineMode::Tensor => q.tensor(x.a(x1, x2), y.a(y1, y2)),
                    _ => q.meet2(x.a(x1, x2), y.a(y1, y2)),
                }
            })?;
            let cat = VCategory { structure: rel };
            validate_vcategory(&cat)?;
            Ok(cat)
        }
        CombineMode::Coproduct => {
            let mut carrier = Vec::with_capacity(x.len() + y.len());
            carrier.extend(x.carrier().iter().map(|l| format!("L:{l}")));
            carrier.extend(y.carrier().iter().map(|l| format!("R:{l}")));
            let nx = x.len();
            let rel = VRelation::from_fn(q, carrier.clone(), carrier.clone(), |p, r| {
                Ok(match (p < nx, r < nx) {
                    (true, true) => x.a(p, r),
                    (false, false) => y.a(p - nx, r - nx),
                    _ => q.bottom(),
                })
            })?;
            let cat = VCategory { structure: rel };
            validate_vcategory(&cat)?;
            Ok(cat)
        }
    }
}

/// The two full coproduct injections.
pub fn coproduct_injections(
    x: &VCategory,
    y: &VCategory,
) -> Result<(VFunctorMap, VFunctorMap)> {
    let sum = combine(x, y, CombineMode::Coproduct)?;
    let left = VFunctorMap::from_indices(x.clone(), sum.clone(), (0..x.len()).collect())?;
    let right = VFunctorMap::from_indices(
        y.clone(),
        sum,
        (x.len()..x.len() + y.len()).collect(),
    )?;
    Ok((left, right))
}

/// `X^op`: same carrier, transposed structure.
pub fn opposite(x: &VCategory) -> VCategory {
    VCategory {
        structure: involution(x.structure()),
    }
}

/// The induced order `x ≤ y ⟺ k ≤ a(x,y)`.
pub fn induced_order(x: &VCategory) -> Result<Vec<Vec<bool>>> {
    let q = *x.quantale();
    let mut out = vec![vec![false; x.len()]; x.len()];
    for i in 0..x.len() {
        for j in 0..x.len() {
            out[i][j] = q.leq(q.unit(), x.a(i, j))?;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetrizeMode {
    /// Coreflection `a^s(x,y) = a(x,y) ∧ a(y,x)`.
    Meet,
    /// Monoidal symmetrization `a^sym(x,y) = a(x,y) ⊗ a(y,x)`.
    Tensor,
}

pub fn symmetrize(x: &VCategory, mode: SymmetrizeMode) -> Result<VCategory> {
    let q = *x.quantale();
    let rel = VRelation::from_fn(
        q,
        x.carrier().to_vec(),
        x.carrier().to_vec(),
        |i, j| match mode {
            SymmetrizeMode::Meet => q.meet2(x.a(i, j), x.a(j, i)),
            SymmetrizeMode::Tensor => q.tensor(x.a(i, j), x.a(j, i)),
        },
    )?;
    let cat = VCategory { structure: rel };
    validate_vcategory(&cat)?;
    Ok(cat)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CategoryFlags {
    pub symmetric: bool,
    pub separated: bool,
}

pub fn classify(x: &VCategory) -> Result<CategoryFlags> {
    let q = *x.quantale();
    let mut symmetric = true;
    let mut separated = true;
    for i in 0..x.len() {
        for j in 0..x.len() {
            if x.a(i, j) != x.a(j, i) {
                symmetric = false;
            }
            if i != j {
                let both = q.meet2(x.a(i, j), x.a(j, i))?;
                if q.leq(q.unit(), both)? {
                    separated = false;
                }
            }
        }
    }
    Ok(CategoryFlags {
        symmetric,
        separated,
    })
}

/// Exhaustive search for a structure-preserving bijection (carriers ≤ 8).
pub fn find_isomorphism(x: &VCategory, y: &VCategory) -> Result<Option<Vec<usize>>> {
    if x.quantale() != y.quantale() {
        return Err(Error::QuantaleMismatch(
            x.quantale().name(),
            y.quantale().name(),
        ));
    }
    if x.len() != y.len() {
        return Ok(None);
    }
    if x.len() > 8 {
        return Err(Error::CapExceeded {
            what: "isomorphism search".into(),
            needed: x.len() as u128,
            cap: 8,
        });
    }
    for perm in (0..x.len()).permutations(x.len()) {
        let mut ok = true;
        'outer: for i in 0..x.len() {
            for j in 0..x.len() {
                if x.a(i, j) != y.a(perm[i], perm[j]) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            return Ok(Some(perm));
        }
    }
    Ok(None)
}

/// Least fixpoint of `a ↦ a ∨ (a · a)`; used to repair random matrices
/// into transitive structures.
pub fn transitive_closure(rel: &VRelation) -> Result<VRelation> {
    let mut cur = rel.clone();
    loop {
        let next = cur.join(&compose_rel(&cur, &cur)?)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// All V-categories on a fixed carrier of `size` elements over a finite
/// quantale, in lexicographic matrix order. Carrier labels are `y0, y1, …`.
pub fn enumerate_vcategories(quantale: &Quantale, size: usize) -> Result<Vec<VCategory>> {
    let elems = quantale
        .elements()
        .ok_or_else(|| Error::InfiniteQuantale("category enumeration".into()))?;
    let cells = size * size;
    let total = (elems.len() as u128)
        .checked_pow(cells as u32)
        .unwrap_or(u128::MAX);
    if total > 1 << 20 {
        return Err(Error::CapExceeded {
            what: "category enumeration".into(),
            needed: total,
            cap: 1 << 20,
        });
    }
    let carrier: Vec<String> = (0..size).map(|i| format!("y{i}")).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; cells];
    loop {
        let entries: Vec<Value> = idx.iter().map(|&i| elems[i]).collect();
        if let Ok(cat) = make_vcategory(*quantale, carrier.clone(), entries) {
            out.push(cat);
        }
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

/// Seeded random V-category: random entries from a small grid, diagonal
/// lifted above the unit, then transitive closure.
pub fn random_vcategory<R: Rng>(
    quantale: &Quantale,
    size: usize,
    rng: &mut R,
) -> Result<VCategory> {
    let grid = quantale
        .elements()
        .unwrap_or_else(crate::quantale::cost_sample_grid);
    let carrier: Vec<String> = (0..size).map(|i| format!("x{i}")).collect();
    let mut entries = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            if i == j {
                entries.push(if rng.gen_bool(0.8) {
                    quantale.unit()
                } else {
                    quantale.top()
                });
            } else {
                entries.push(grid[rng.gen_range(0..grid.len())]);
            }
        }
    }
    let rel = VRelation::new(*quantale, carrier.clone(), carrier, entries)?;
    let closed = transitive_closure(&rel)?;
    let cat = VCategory { structure: closed };
    validate_vcategory(&cat)?;
    Ok(cat)
}
