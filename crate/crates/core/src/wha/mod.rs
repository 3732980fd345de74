//! The weak Hopf algebra reconstructed from the `U_q(sl2)` category at level `r`.
//!
//! The basis vector `[pq|rs]_j` pairs a dual vertex `V_p ⊗ V_j -> V_q` with a
//! vertex `V_r -> V_s ⊗ V_j`. Structure constants are built once from the
//! recoupling tables and stored as plain data, so an algebra can equally be
//! rebuilt from exported tables.

mod element;
mod forms;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclo::CycloScalar;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::recoupling::{admissible, label_count, labels, Label, RecouplingTables};

pub use element::{add_into, Tensor2, Tensor3, WhaElement};
pub use forms::DerivedForms;

/// Basis vector `[pq|rs]_j`; field order gives the lexicographic basis order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisVector {
    pub j: Label,
    pub p: Label,
    pub q: Label,
    pub r: Label,
    pub s: Label,
}

impl fmt::Debug for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}{}|{}{}]_{}", self.p, self.q, self.r, self.s, self.j)
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Orientation of the crossing used by the universal r-form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossingSign {
    Positive,
    Mirror,
}

/// Where the dimension-weighting morphism sits in the r-form diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RFormReading {
    /// On the closing strand of the trace.
    TraceStrand,
    /// On the inner strand next to the crossing.
    InnerStrand,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Conventions {
    pub crossing: CrossingSign,
    pub reading: RFormReading,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            crossing: CrossingSign::Positive,
            reading: RFormReading::TraceStrand,
        }
    }
}

impl Conventions {
    pub fn all() -> [Conventions; 4] {
        use CrossingSign::*;
        use RFormReading::*;
        [
            Conventions {
                crossing: Positive,
                reading: TraceStrand,
            },
            Conventions {
                crossing: Positive,
                reading: InnerStrand,
            },
            Conventions {
                crossing: Mirror,
                reading: TraceStrand,
            },
            Conventions {
                crossing: Mirror,
                reading: InnerStrand,
            },
        ]
    }
}

/// Structure constants on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTables {
    /// `mu[i][j]` is the product of basis vectors `i` and `j`; absent means zero.
    pub mu: Vec<HashMap<usize, Vec<(usize, CycloScalar)>>>,
    pub delta: Vec<Vec<(usize, usize, CycloScalar)>>,
    pub antipode: Vec<Vec<(usize, CycloScalar)>>,
    pub unit: Vec<(usize, CycloScalar)>,
    pub counit: Vec<CycloScalar>,
}

/// The r-form, its weak inverse and the ribbon form with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTables {
    pub r: BTreeMap<(usize, usize), CycloScalar>,
    pub r_bar: BTreeMap<(usize, usize), CycloScalar>,
    pub nu: Vec<CycloScalar>,
    pub nu_bar: Vec<CycloScalar>,
}

pub struct WhaAlgebra {
    level: u32,
    basis: Vec<BasisVector>,
    index: HashMap<BasisVector, usize>,
    pairs: Vec<Vec<(Label, Label)>>,
    conventions: Conventions,
    tables: StructureTables,
    forms: FormTables,
    derived: OnceLock<DerivedForms>,
}

/// Admissible pairs `(p, q)` with `(p, q, j)` admissible, in lexicographic order.
pub fn channel_pairs(level: u32, j: Label) -> Vec<(Label, Label)> {
    let mut out = Vec::new();
    for p in labels(level) {
        for q in labels(level) {
            if admissible(level, p, q, j) {
                out.push((p, q));
            }
        }
    }
    out
}

/// The basis `[pq|rs]_j` in lexicographic order of `(j, p, q, r, s)`.
pub fn enumerate_basis(level: u32) -> Vec<BasisVector> {
    let mut out = Vec::new();
    for j in labels(level) {
        let pairs = channel_pairs(level, j);
        for &(p, q) in &pairs {
            for &(r, s) in &pairs {
                out.push(BasisVector { j, p, q, r, s });
            }
        }
    }
    out
}

impl WhaAlgebra {
    /// Builds the algebra with the default conventions.
    pub fn new(level: u32) -> Result<Self> {
        Self::with_conventions(level, Conventions::default())
    }

    pub fn with_conventions(level: u32, conventions: Conventions) -> Result<Self> {
        if level < 2 {
            return Err(Error::Precondition(format!(
                "level must be at least 2, got {level}"
            )));
        }
        crate::cyclo::check_level(level)?;
        let basis = enumerate_basis(level);
        let rec = RecouplingTables::for_level(level);
        let mut alg = Self::assemble(level, basis, conventions, empty_tables(), empty_forms());
        alg.tables = alg.build_structure(&rec)?;
        alg.forms = alg.build_forms(&rec)?;
        Ok(alg)
    }

    /// Rebuilds an algebra from stored tables; the basis must be the standard one.
    pub fn from_tables(
        level: u32,
        basis: Vec<BasisVector>,
        conventions: Conventions,
        tables: StructureTables,
        forms: FormTables,
    ) -> Result<Self> {
        if level < 2 {
            return Err(Error::Document(format!(
                "level must be at least 2, got {level}"
            )));
        }
        if basis != enumerate_basis(level) {
            return Err(Error::Document(
                "basis is not the standard ordered basis".into(),
            ));
        }
        let n = basis.len();
        let ok = tables.mu.len() == n
            && tables.delta.len() == n
            && tables.antipode.len() == n
            && tables.counit.len() == n
            && forms.nu.len() == n
            && forms.nu_bar.len() == n;
        if !ok {
            return Err(Error::Document("table sizes do not match the basis".into()));
        }
        Ok(Self::assemble(level, basis, conventions, tables, forms))
    }

    fn assemble(
        level: u32,
        basis: Vec<BasisVector>,
        conventions: Conventions,
        tables: StructureTables,
        forms: FormTables,
    ) -> Self {
        let index = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        let pairs = labels(level).map(|j| channel_pairs(level, j)).collect();
        WhaAlgebra {
            level,
            basis,
            index,
            pairs,
            conventions,
            tables,
            forms,
            derived: OnceLock::new(),
        }
    }

    fn build_structure(&self, rec: &RecouplingTables) -> Result<StructureTables> {
        let n = self.dim();
        let level = self.level;
        let mu: Vec<HashMap<usize, Vec<(usize, CycloScalar)>>> = (0..n)
            .into_par_iter()
            .map(|i| self.product_row(rec, i))
            .collect::<Result<_>>()?;
        let mut delta = Vec::with_capacity(n);
        let mut antipode = Vec::with_capacity(n);
        let mut counit = Vec::with_capacity(n);
        for b in &self.basis {
            let mut d = Vec::new();
            for &(t, u) in &self.pairs[b.j as usize] {
                let left = self.idx(BasisVector {
                    j: b.j,
                    p: b.p,
                    q: b.q,
                    r: t,
                    s: u,
                });
                let right = self.idx(BasisVector {
                    j: b.j,
                    p: u,
                    q: t,
                    r: b.r,
                    s: b.s,
                });
                d.push((left, right, CycloScalar::one(level)));
            }
            delta.push(d);
            let image = self.idx(BasisVector {
                j: b.j,
                p: b.r,
                q: b.s,
                r: b.p,
                s: b.q,
            });
            let num = rec.dim(b.q)? * rec.theta(b.r, b.s, b.j)?;
            let den = rec.dim(b.r)? * rec.theta(b.p, b.q, b.j)?;
            antipode.push(vec![(image, num * den.inv()?)]);
            counit.push(if b.p == b.s && b.q == b.r {
                CycloScalar::one(level)
            } else {
                CycloScalar::zero(level)
            });
        }
        let mut unit = Vec::new();
        for j in labels(level) {
            for l in labels(level) {
                let i = self.idx(BasisVector {
                    j: 0,
                    p: j,
                    q: j,
                    r: l,
                    s: l,
                });
                unit.push((i, CycloScalar::one(level)));
            }
        }
        Ok(StructureTables {
            mu,
            delta,
            antipode,
            unit,
            counit,
        })
    }

    /// Products of basis vector `i` with every basis vector.
    fn product_row(
        &self,
        rec: &RecouplingTables,
        i: usize,
    ) -> Result<HashMap<usize, Vec<(usize, CycloScalar)>>> {
        let x = self.basis[i];
        let (p, q, r, s, j) = (x.p, x.q, x.r, x.s, x.j);
        let mut row = HashMap::new();
        for (k, y) in self.basis.iter().enumerate() {
            if y.p != q || y.s != r {
                continue;
            }
            let (a, b, c, d, l) = (y.p, y.q, y.r, y.s, y.j);
            let mut terms = Vec::new();
            for u in labels(self.level) {
                if !(admissible(self.level, p, b, u)
                    && admissible(self.level, c, s, u)
                    && admissible(self.level, j, l, u))
                {
                    continue;
                }
                let f1 = rec.sixj_or_zero(p, j, u, l, b, a);
                let f2 = rec.sixj_or_zero(c, l, u, j, s, d);
                if f1.is_zero() || f2.is_zero() {
                    continue;
                }
                let num = rec.dim(a)? * rec.theta(p, b, u)? * rec.theta(j, l, u)?;
                let den = rec.dim(u)? * rec.theta(p, a, j)? * rec.theta(a, b, l)?;
                let coeff = f1 * f2 * num * den.inv()?;
                if !coeff.is_zero() {
                    let target = self.idx(BasisVector {
                        j: u,
                        p,
                        q: b,
                        r: c,
                        s,
                    });
                    terms.push((target, coeff));
                }
            }
            if !terms.is_empty() {
                row.insert(k, terms);
            }
        }
        Ok(row)
    }

    fn build_forms(&self, rec: &RecouplingTables) -> Result<FormTables> {
        let level = self.level;
        let conv = self.conventions;
        let mut r_tab = BTreeMap::new();
        let mut rbar_tab = BTreeMap::new();
        let crossing = |l: Label, j: Label, u: Label, inverse: bool| -> Result<CycloScalar> {
            let lam = rec.crossing_coeff(l, j, u)?;
            let mirrored = conv.crossing == CrossingSign::Mirror;
            Ok(if inverse != mirrored { lam.inv()? } else { lam })
        };
        for (i, x) in self.basis.iter().enumerate() {
            let (p, q, r, s, j) = (x.p, x.q, x.r, x.s, x.j);
            for l in labels(level) {
                // r pairs [pq|rs]_j with [q r|s p]_l.
                if let Some(k) = self.index_of(&BasisVector {
                    j: l,
                    p: q,
                    q: r,
                    r: s,
                    s: p,
                }) {
                    let mut acc = CycloScalar::zero(level);
                    for u in labels(level) {
                        if !admissible(level, l, j, u) {
                            continue;
                        }
                        let f1 = rec.sixj_or_zero(r, j, u, l, p, s);
                        let f2 = rec.sixj_or_zero(p, r, q, l, j, u);
                        acc += &(f1 * crossing(l, j, u, false)? * f2);
                    }
                    if conv.reading == RFormReading::InnerStrand {
                        acc = acc * rec.dim(r)? * rec.dim(p)?.inv()?;
                    }
                    add_into(&mut r_tab, (i, k), acc);
                }
                // r̄ pairs [pq|rs]_j with [s p|q r]_l.
                if let Some(k) = self.index_of(&BasisVector {
                    j: l,
                    p: s,
                    q: p,
                    r: q,
                    s: r,
                }) {
                    let (b, c) = (p, q);
                    let mut acc = CycloScalar::zero(level);
                    for u in labels(level) {
                        if !admissible(level, l, j, u) {
                            continue;
                        }
                        let f1 = rec.sixj_or_zero(c, l, u, j, s, r);
                        let f2 = rec.sixj_or_zero(s, c, b, j, l, u);
                        acc += &(f1 * crossing(l, j, u, true)? * f2);
                    }
                    if conv.reading == RFormReading::InnerStrand {
                        acc = acc * rec.dim(p)? * rec.dim(r)?.inv()?;
                    }
                    add_into(&mut rbar_tab, (i, k), acc);
                }
            }
        }
        let mut nu = Vec::with_capacity(self.dim());
        let mut nu_bar = Vec::with_capacity(self.dim());
        for x in &self.basis {
            if x.p == x.s && x.q == x.r {
                let t = rec.twist(x.j)?;
                nu_bar.push(t.inv()?);
                nu.push(t);
            } else {
                nu.push(CycloScalar::zero(level));
                nu_bar.push(CycloScalar::zero(level));
            }
        }
        Ok(FormTables {
            r: r_tab,
            r_bar: rbar_tab,
            nu,
            nu_bar,
        })
    }

    fn idx(&self, b: BasisVector) -> usize {
        self.index[&b]
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `|I| = r - 1`.
    pub fn label_count(&self) -> usize {
        label_count(self.level)
    }

    pub fn conventions(&self) -> Conventions {
        self.conventions
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> BasisVector {
        self.basis[i]
    }

    pub fn index_of(&self, b: &BasisVector) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Admissible `(p, q)` for the block of `V_j`.
    pub fn channel_pairs(&self, j: Label) -> &[(Label, Label)] {
        &self.pairs[j as usize]
    }

    pub fn block_size(&self, j: Label) -> usize {
        self.pairs[j as usize].len()
    }

    pub fn tables(&self) -> &StructureTables {
        &self.tables
    }

    pub fn form_tables(&self) -> &FormTables {
        &self.forms
    }

    pub fn zero(&self) -> WhaElement {
        WhaElement::zero(self.level)
    }

    pub fn element(&self, i: usize) -> WhaElement {
        WhaElement::basis(self.level, i)
    }

    fn scalar_zero(&self) -> CycloScalar {
        CycloScalar::zero(self.level)
    }

    fn check(&self, x: &WhaElement) -> Result<()> {
        if x.level() != self.level {
            Err(Error::LevelMismatch(x.level(), self.level))
        } else {
            Ok(())
        }
    }

    // ---- algebra ----

    pub fn unit(&self) -> WhaElement {
        let mut e = self.zero();
        for (i, c) in &self.tables.unit {
            e.add_term(*i, c.clone());
        }
        e
    }

    pub fn multiply_basis(&self, i: usize, j: usize) -> &[(usize, CycloScalar)] {
        self.tables.mu[i].get(&j).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn multiply(&self, x: &WhaElement, y: &WhaElement) -> Result<WhaElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &WhaElement, y: &WhaElement) -> WhaElement {
        let mut out = self.zero();
        for (i, a) in x.terms() {
            let row = &self.tables.mu[i];
            for (j, b) in y.terms() {
                if let Some(terms) = row.get(&j) {
                    let ab = a * b;
                    for (k, c) in terms {
                        out.add_term(*k, &ab * c);
                    }
                }
            }
        }
        out
    }

    // ---- coalgebra ----

    pub fn counit_basis(&self, i: usize) -> &CycloScalar {
        &self.tables.counit[i]
    }

    pub fn counit(&self, x: &WhaElement) -> CycloScalar {
        let mut acc = self.scalar_zero();
        for (i, c) in x.terms() {
            let e = &self.tables.counit[i];
            if !e.is_zero() {
                acc += &(c * e);
            }
        }
        acc
    }

    pub fn comultiply_basis(&self, i: usize) -> &[(usize, usize, CycloScalar)] {
        &self.tables.delta[i]
    }

    pub fn comultiply(&self, x: &WhaElement) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, c) in x.terms() {
            for (a, b, d) in &self.tables.delta[i] {
                add_into(&mut out, (*a, *b), c * d);
            }
        }
        out
    }

    /// `x' ⊗ x'' ⊗ x'''` for a basis vector.
    pub fn comultiply_twice_basis(&self, i: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for (a, b, c) in &self.tables.delta[i] {
            for (b1, b2, d) in &self.tables.delta[*b] {
                add_into(&mut out, (*a, *b1, *b2), c * d);
            }
        }
        out
    }

    pub fn comultiply_twice(&self, x: &WhaElement) -> Tensor3 {
        let mut out = Tensor3::new();
        for (i, c) in x.terms() {
            for (k, d) in self.comultiply_twice_basis(i) {
                add_into(&mut out, k, c * &d);
            }
        }
        out
    }

    // ---- antipode ----

    pub fn antipode_basis(&self, i: usize) -> &[(usize, CycloScalar)] {
        &self.tables.antipode[i]
    }

    pub fn antipode(&self, x: &WhaElement) -> WhaElement {
        let mut out = self.zero();
        for (i, c) in x.terms() {
            for (k, d) in &self.tables.antipode[i] {
                out.add_term(*k, c * d);
            }
        }
        out
    }

    // ---- counital maps and base algebras ----

    /// `ε_t(x) = ε(1'x) 1''`.
    pub fn counital_target(&self, x: &WhaElement) -> WhaElement {
        let mut out = self.zero();
        for ((a, b), c) in self.comultiply(&self.unit()) {
            let e = self.counit(&self.mul(&self.element(a), x));
            if !e.is_zero() {
                out.add_term(b, c * e);
            }
        }
        out
    }

    /// `ε_s(x) = 1' ε(x 1'')`.
    pub fn counital_source(&self, x: &WhaElement) -> WhaElement {
        let mut out = self.zero();
        for ((a, b), c) in self.comultiply(&self.unit()) {
            let e = self.counit(&self.mul(x, &self.element(b)));
            if !e.is_zero() {
                out.add_term(a, c * e);
            }
        }
        out
    }

    fn image_basis(&self, f: impl Fn(&WhaElement) -> WhaElement + Sync) -> Vec<WhaElement> {
        let cols: Vec<Vec<CycloScalar>> = (0..self.dim())
            .into_par_iter()
            .map(|i| f(&self.element(i)).to_dense(self.dim()))
            .collect();
        let m = Matrix::from_columns(self.level, self.dim(), &cols);
        m.column_space()
            .iter()
            .map(|v| WhaElement::from_dense(self.level, v))
            .collect()
    }

    /// Basis of `H_t = ε_t(H)`.
    pub fn base_algebra_target(&self) -> Vec<WhaElement> {
        self.image_basis(|x| self.counital_target(x))
    }

    /// Basis of `H_s = ε_s(H)`.
    pub fn base_algebra_source(&self) -> Vec<WhaElement> {
        self.image_basis(|x| self.counital_source(x))
    }

    pub fn subspace(&self, elements: &[WhaElement]) -> Subspace {
        let vecs = elements.iter().map(|e| e.to_dense(self.dim())).collect();
        Subspace::new(self.level, self.dim(), vecs)
    }

    /// Basis positions of the `j = 0` block, which is the minimal sub-WHA.
    pub fn minimal_subalgebra(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].j == 0).collect()
    }

    // ---- forms ----

    pub fn r_form_basis(&self, i: usize, j: usize) -> CycloScalar {
        self.forms
            .r
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.scalar_zero())
    }

    pub fn r_bar_basis(&self, i: usize, j: usize) -> CycloScalar {
        self.forms
            .r_bar
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.scalar_zero())
    }

    pub fn r_form(&self, x: &WhaElement, y: &WhaElement) -> CycloScalar {
        self.pair_form(x, y, |i, j| self.r_form_basis(i, j))
    }

    pub fn r_bar(&self, x: &WhaElement, y: &WhaElement) -> CycloScalar {
        self.pair_form(x, y, |i, j| self.r_bar_basis(i, j))
    }

    fn pair_form(
        &self,
        x: &WhaElement,
        y: &WhaElement,
        f: impl Fn(usize, usize) -> CycloScalar,
    ) -> CycloScalar {
        let mut acc = self.scalar_zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let v = f(i, j);
                if !v.is_zero() {
                    acc += &(&(a * b) * &v);
                }
            }
        }
        acc
    }

    pub fn ribbon_basis(&self, i: usize) -> &CycloScalar {
        &self.forms.nu[i]
    }

    pub fn ribbon_bar_basis(&self, i: usize) -> &CycloScalar {
        &self.forms.nu_bar[i]
    }

    pub fn ribbon_form(&self, x: &WhaElement) -> CycloScalar {
        self.linear_form(x, &self.forms.nu)
    }

    pub fn ribbon_bar(&self, x: &WhaElement) -> CycloScalar {
        self.linear_form(x, &self.forms.nu_bar)
    }

    /// Evaluates a form given by its values on the basis.
    pub fn linear_form(&self, x: &WhaElement, values: &[CycloScalar]) -> CycloScalar {
        let mut acc = self.scalar_zero();
        for (i, c) in x.terms() {
            if !values[i].is_zero() {
                acc += &(c * &values[i]);
            }
        }
        acc
    }

    pub fn derived(&self) -> &DerivedForms {
        self.derived.get_or_init(|| DerivedForms::compute(self))
    }
}

fn empty_tables() -> StructureTables {
    StructureTables {
        mu: Vec::new(),
        delta: Vec::new(),
        antipode: Vec::new(),
        unit: Vec::new(),
        counit: Vec::new(),
    }
}

fn empty_forms() -> FormTables {
    FormTables {
        r: BTreeMap::new(),
        r_bar: BTreeMap::new(),
        nu: Vec::new(),
        nu_bar: Vec::new(),
    }
}

/// Shared algebras per `(level, conventions)`, built on first use.
pub fn shared_algebra(level: u32, conventions: Conventions) -> Result<Arc<WhaAlgebra>> {
    use std::sync::Mutex;
    type Cache = Mutex<HashMap<(u32, Conventions), Arc<WhaAlgebra>>>;
    static ALL: OnceLock<Cache> = OnceLock::new();
    let map = ALL.get_or_init(Default::default);
    if let Some(a) = map.lock().unwrap().get(&(level, conventions)) {
        return Ok(a.clone());
    }
    let alg = Arc::new(WhaAlgebra::with_conventions(level, conventions)?);
    Ok(map
        .lock()
        .unwrap()
        .entry((level, conventions))
        .or_insert(alg)
        .clone())
}
