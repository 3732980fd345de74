//! Finite-dimensional right comodules over the reconstructed algebra.
//!
//! A comodule is stored through its coefficient elements: `β(v_a) = Σ_b v_b ⊗ c_ba`.
//! Linear maps between comodules are plain matrices over `Q(A)` whose
//! columns are images of basis vectors. Tensor products of basis vectors are
//! indexed as `a * dim(W) + b`, matching [`Matrix::kron`].

use std::sync::Arc;

use rayon::prelude::*;

use crate::cyclo::CycloScalar;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::recoupling::{fusion_channels, labels, Label};
use crate::wha::{WhaAlgebra, WhaElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    level: u32,
    /// `coeffs[b][a] = c_ba`.
    coeffs: Vec<Vec<WhaElement>>,
}

impl Comodule {
    pub fn new(level: u32, coeffs: Vec<Vec<WhaElement>>) -> Result<Self> {
        let n = coeffs.len();
        if coeffs.iter().any(|row| row.len() != n) {
            return Err(Error::Arity("coefficient matrix must be square".into()));
        }
        Ok(Comodule { level, coeffs })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, b: usize, a: usize) -> &WhaElement {
        &self.coeffs[b][a]
    }

    pub fn coefficients(&self) -> &[Vec<WhaElement>] {
        &self.coeffs
    }

    /// Matrix of `v ↦ v_V f(v_H)` for a linear form given by its basis values.
    pub fn apply_form(&self, f: impl Fn(&WhaElement) -> CycloScalar) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(self.level, n, n, |b, a| f(&self.coeffs[b][a]))
    }
}

/// The image of the idempotent `P_{V,W}` inside the plain tensor product.
#[derive(Clone, Debug)]
pub struct TruncatedTensor {
    pub factors: (Comodule, Comodule),
    pub projector: Matrix,
    /// Columns span the image of `projector`.
    pub embedding: Matrix,
    image: Subspace,
    pub comodule: Comodule,
}

impl TruncatedTensor {
    pub fn dim(&self) -> usize {
        self.embedding.cols()
    }

    /// Coordinates in the image basis; the argument must be a matrix whose
    /// columns lie in the image.
    pub fn retract(&self, m: &Matrix) -> Matrix {
        let cols: Vec<Vec<CycloScalar>> = (0..m.cols())
            .map(|j| {
                self.image
                    .coordinates(&m.column(j))
                    .expect("column lies in the truncated product")
            })
            .collect();
        Matrix::from_columns(m.level(), self.dim(), &cols)
    }

    /// Restricts a map between plain products to the truncated ones.
    pub fn restrict(&self, target: &TruncatedTensor, plain: &Matrix) -> Matrix {
        target.retract(&plain.mul(&self.embedding))
    }
}

/// Comodules of one algebra together with the unit object `H_s`.
pub struct ComoduleCategory {
    alg: Arc<WhaAlgebra>,
    /// Basis of `H_s` as elements of `H`.
    hs_basis: Vec<WhaElement>,
    hs: Subspace,
    unit: Comodule,
    irreducibles: Vec<Comodule>,
}

impl ComoduleCategory {
    pub fn new(alg: Arc<WhaAlgebra>) -> Self {
        let level = alg.level();
        let hs_basis = alg.base_algebra_source();
        let hs = alg.subspace(&hs_basis);
        let irreducibles = labels(level)
            .map(|j| Comodule {
                level,
                coeffs: alg.irreducible_coefficients(j),
            })
            .collect();
        let unit = Self::hs_comodule(&alg, &hs_basis, &hs);
        ComoduleCategory {
            alg,
            hs_basis,
            hs,
            unit,
            irreducibles,
        }
    }

    /// `β(x) = x' ⊗ x''` on `H_s`, with `x'` written in the `H_s` basis.
    fn hs_comodule(alg: &WhaAlgebra, basis: &[WhaElement], hs: &Subspace) -> Comodule {
        let n = alg.dim();
        let k = basis.len();
        let mut coeffs = vec![vec![alg.zero(); k]; k];
        for (a, x) in basis.iter().enumerate() {
            // Column l of Δ(x) is the first-factor vector paired with e_l.
            let mut columns = vec![vec![CycloScalar::zero(alg.level()); n]; n];
            for ((i, l), c) in alg.comultiply(x) {
                columns[l][i] = c;
            }
            for (l, col) in columns.iter().enumerate() {
                if col.iter().all(CycloScalar::is_zero) {
                    continue;
                }
                let coords = hs.coordinates(col).expect("Δ(H_s) ⊆ H_s ⊗ H");
                for (b, c) in coords.into_iter().enumerate() {
                    coeffs[b][a].add_term(l, c);
                }
            }
        }
        Comodule {
            level: alg.level(),
            coeffs,
        }
    }

    pub fn algebra(&self) -> &WhaAlgebra {
        &self.alg
    }

    pub fn level(&self) -> u32 {
        self.alg.level()
    }

    pub fn irreducible(&self, j: Label) -> &Comodule {
        &self.irreducibles[j as usize]
    }

    pub fn unit(&self) -> &Comodule {
        &self.unit
    }

    pub fn unit_basis(&self) -> &[WhaElement] {
        &self.hs_basis
    }

    /// Coordinates of an element of `H_s`.
    pub fn unit_coordinates(&self, x: &WhaElement) -> Option<Vec<CycloScalar>> {
        self.hs.coordinates(&x.to_dense(self.alg.dim()))
    }

    fn hs_coords(&self, x: &WhaElement) -> Vec<CycloScalar> {
        self.unit_coordinates(x).expect("element lies in H_s")
    }

    fn zero_matrix(&self, rows: usize, cols: usize) -> Matrix {
        Matrix::zeros(self.level(), rows, cols)
    }

    fn eps_product(&self, x: &WhaElement, y: &WhaElement) -> CycloScalar {
        self.alg.counit(&self.alg.mul(x, y))
    }

    // ---- comodule axioms ----

    /// `(id ⊗ ε) β = id`.
    pub fn counit_law_holds(&self, v: &Comodule) -> bool {
        let n = v.dim();
        (0..n).all(|b| {
            (0..n).all(|a| {
                let e = self.alg.counit(&v.coeffs[b][a]);
                if a == b {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// `(β ⊗ id) β = (id ⊗ Δ) β`, i.e. `Δ(c_ka) = Σ_b c_kb ⊗ c_ba`.
    pub fn coassociativity_holds(&self, v: &Comodule) -> bool {
        let n = v.dim();
        (0..n).into_par_iter().all(|k| {
            (0..n).all(|a| {
                let lhs = self.alg.comultiply(&v.coeffs[k][a]);
                let mut rhs = crate::wha::Tensor2::new();
                for b in 0..n {
                    for (i, x) in v.coeffs[k][b].terms() {
                        for (j, y) in v.coeffs[b][a].terms() {
                            crate::wha::add_into(&mut rhs, (i, j), x * y);
                        }
                    }
                }
                lhs == rhs
            })
        })
    }

    // ---- tensor products ----

    /// Coefficients of the plain tensor product `V ⊗ W`.
    pub fn plain_tensor(&self, v: &Comodule, w: &Comodule) -> Vec<Vec<WhaElement>> {
        let (n, m) = (v.dim(), w.dim());
        (0..n * m)
            .into_par_iter()
            .map(|out| {
                let (c, d) = (out / m, out % m);
                (0..n * m)
                    .map(|inp| {
                        let (a, b) = (inp / m, inp % m);
                        self.alg.mul(&v.coeffs[c][a], &w.coeffs[d][b])
                    })
                    .collect()
            })
            .collect()
    }

    /// `P_{V,W}(v ⊗ w) = (v_V ⊗ w_W) ε(v_H w_H)`.
    pub fn truncation_idempotent(&self, v: &Comodule, w: &Comodule) -> Matrix {
        let (n, m) = (v.dim(), w.dim());
        let entries: Vec<Vec<CycloScalar>> = (0..n * m)
            .into_par_iter()
            .map(|out| {
                let (c, d) = (out / m, out % m);
                (0..n * m)
                    .map(|inp| {
                        let (a, b) = (inp / m, inp % m);
                        self.eps_product(&v.coeffs[c][a], &w.coeffs[d][b])
                    })
                    .collect()
            })
            .collect();
        Matrix::from_fn(self.level(), n * m, n * m, |i, j| entries[i][j].clone())
    }

    pub fn truncated_tensor(&self, v: &Comodule, w: &Comodule) -> TruncatedTensor {
        let level = self.level();
        let projector = self.truncation_idempotent(v, w);
        let columns = projector.column_space();
        let plain_dim = projector.rows();
        let embedding = Matrix::from_columns(level, plain_dim, &columns);
        let image = Subspace::new(level, plain_dim, columns.clone());
        // Induced coaction: c' = L · C · E with L the image coordinates.
        let plain = self.plain_tensor(v, w);
        let k = columns.len();
        let mut coeffs = vec![vec![self.alg.zero(); k]; k];
        for (a, col) in columns.iter().enumerate() {
            // β(E e_a) = Σ_row e_row ⊗ y_row.
            let ys: Vec<WhaElement> = (0..plain_dim)
                .map(|row| {
                    let mut y = self.alg.zero();
                    for (i, x) in col.iter().enumerate() {
                        if !x.is_zero() {
                            y = y.add(&plain[row][i].scale(x));
                        }
                    }
                    y
                })
                .collect();
            // Expand each basis element of H separately in image coordinates.
            let mut support: Vec<usize> =
                ys.iter().flat_map(|y| y.terms().map(|(i, _)| i)).collect();
            support.sort_unstable();
            support.dedup();
            for h in support {
                let vec: Vec<CycloScalar> = ys.iter().map(|y| y.coefficient(h)).collect();
                let coords = image
                    .coordinates(&vec)
                    .expect("the truncated product is a subcomodule");
                for (b, c) in coords.into_iter().enumerate() {
                    coeffs[b][a].add_term(h, c);
                }
            }
        }
        TruncatedTensor {
            factors: (v.clone(), w.clone()),
            projector,
            embedding,
            image,
            comodule: Comodule { level, coeffs },
        }
    }

    // ---- braiding and twist ----

    /// `σ(v ⊗ w) = (w_W ⊗ v_V) r(w_H ⊗ v_H)` on plain products, `V ⊗ W → W ⊗ V`.
    pub fn braiding_plain(&self, v: &Comodule, w: &Comodule) -> Matrix {
        self.swap_with_form(v, w, |x, y| self.alg.r_form(x, y))
    }

    /// `σ⁻¹(w ⊗ v) = (v_V ⊗ w_W) r̄(w_H ⊗ v_H)`, `W ⊗ V → V ⊗ W`.
    pub fn braiding_inverse_plain(&self, v: &Comodule, w: &Comodule) -> Matrix {
        let (n, m) = (v.dim(), w.dim());
        let entries: Vec<Vec<CycloScalar>> = (0..n * m)
            .into_par_iter()
            .map(|out| {
                let (c, d) = (out / m, out % m);
                (0..m * n)
                    .map(|inp| {
                        let (b, a) = (inp / n, inp % n);
                        self.alg.r_bar(&w.coeffs[d][b], &v.coeffs[c][a])
                    })
                    .collect()
            })
            .collect();
        Matrix::from_fn(self.level(), n * m, m * n, |i, j| entries[i][j].clone())
    }

    fn swap_with_form(
        &self,
        v: &Comodule,
        w: &Comodule,
        form: impl Fn(&WhaElement, &WhaElement) -> CycloScalar + Sync,
    ) -> Matrix {
        let (n, m) = (v.dim(), w.dim());
        let entries: Vec<Vec<CycloScalar>> = (0..m * n)
            .into_par_iter()
            .map(|out| {
                let (d, c) = (out / n, out % n);
                (0..n * m)
                    .map(|inp| {
                        let (a, b) = (inp / m, inp % m);
                        form(&w.coeffs[d][b], &v.coeffs[c][a])
                    })
                    .collect()
            })
            .collect();
        Matrix::from_fn(self.level(), m * n, n * m, |i, j| entries[i][j].clone())
    }

    /// Braiding `V ⊗̂ W → W ⊗̂ V` in image coordinates.
    pub fn braiding_map(&self, vw: &TruncatedTensor, wv: &TruncatedTensor) -> Matrix {
        let (v, w) = (&vw.factors.0, &vw.factors.1);
        vw.restrict(wv, &self.braiding_plain(v, w))
    }

    /// Inverse braiding `W ⊗̂ V → V ⊗̂ W` built from `r̄`.
    pub fn braiding_inverse(&self, vw: &TruncatedTensor, wv: &TruncatedTensor) -> Matrix {
        let (v, w) = (&vw.factors.0, &vw.factors.1);
        wv.restrict(vw, &self.braiding_inverse_plain(v, w))
    }

    /// `ν_V(v) = v_V ν(v_H)`.
    pub fn ribbon_map(&self, v: &Comodule) -> Matrix {
        v.apply_form(|x| self.alg.ribbon_form(x))
    }

    // ---- duality ----

    /// `β(θ) = θ(v_V) ⊗ S(v_H)` on the dual basis.
    pub fn dual_comodule(&self, v: &Comodule) -> Comodule {
        let n = v.dim();
        let coeffs = (0..n)
            .map(|b| (0..n).map(|a| self.alg.antipode(&v.coeffs[a][b])).collect())
            .collect();
        Comodule {
            level: v.level,
            coeffs,
        }
    }

    /// `ev(θ ⊗ v) = θ(v_V) ε_s(v_H)`, from `V* ⊗ V` into `H_s` coordinates.
    pub fn ev_map(&self, v: &Comodule) -> Matrix {
        let n = v.dim();
        let cols: Vec<Vec<CycloScalar>> = (0..n * n)
            .into_par_iter()
            .map(|inp| {
                let (a, b) = (inp / n, inp % n);
                self.hs_coords(&self.alg.counital_source(&v.coeffs[a][b]))
            })
            .collect();
        Matrix::from_columns(self.level(), self.hs_basis.len(), &cols)
    }

    /// `coev(x) = Σ_j (e_j)_V ⊗ e^j ε(x (e_j)_H)`, from `H_s` into `V ⊗ V*`.
    pub fn coev_map(&self, v: &Comodule) -> Matrix {
        let n = v.dim();
        Matrix::from_fn(self.level(), n * n, self.hs_basis.len(), |out, k| {
            let (c, j) = (out / n, out % n);
            self.eps_product(&self.hs_basis[k], &v.coeffs[c][j])
        })
    }

    /// `λ(h ⊗ v) = v_V ε(h v_H)`.
    pub fn left_unitor(&self, v: &Comodule) -> Matrix {
        let (n, k) = (v.dim(), self.hs_basis.len());
        Matrix::from_fn(self.level(), n, k * n, |b, inp| {
            let (h, a) = (inp / n, inp % n);
            self.eps_product(&self.hs_basis[h], &v.coeffs[b][a])
        })
    }

    /// `Δ(1)` as `Σ_l x_l ⊗ e_l` with each `x_l ∈ H_s` in coordinates.
    fn unit_coproduct_split(&self) -> Vec<(usize, Vec<CycloScalar>)> {
        let n = self.alg.dim();
        let mut columns: std::collections::BTreeMap<usize, Vec<CycloScalar>> = Default::default();
        for ((i, l), c) in self.alg.comultiply(&self.alg.unit()) {
            columns
                .entry(l)
                .or_insert_with(|| vec![CycloScalar::zero(self.level()); n])[i] = c;
        }
        columns
            .into_iter()
            .map(|(l, col)| (l, self.hs.coordinates(&col).expect("Δ(1) ∈ H_s ⊗ H_t")))
            .collect()
    }

    /// `λ⁻¹(v) = (1' ⊗ v_V) ε(1'' v_H)`.
    pub fn left_unitor_inverse(&self, v: &Comodule) -> Matrix {
        let (n, k) = (v.dim(), self.hs_basis.len());
        let mut m = self.zero_matrix(k * n, n);
        for (l, first) in self.unit_coproduct_split() {
            let second = self.alg.element(l);
            for a in 0..n {
                for b in 0..n {
                    let e = self.eps_product(&second, &v.coeffs[b][a]);
                    if e.is_zero() {
                        continue;
                    }
                    for (h, x) in first.iter().enumerate() {
                        if !x.is_zero() {
                            m[(h * n + b, a)] += &(x * &e);
                        }
                    }
                }
            }
        }
        m
    }

    /// `ρ(v ⊗ h) = v_V ε(v_H h)`.
    pub fn right_unitor(&self, v: &Comodule) -> Matrix {
        let (n, k) = (v.dim(), self.hs_basis.len());
        Matrix::from_fn(self.level(), n, n * k, |b, inp| {
            let (a, h) = (inp / k, inp % k);
            self.eps_product(&v.coeffs[b][a], &self.hs_basis[h])
        })
    }

    /// `ρ⁻¹(v) = v_V ⊗ ε_s(v_H)`.
    pub fn right_unitor_inverse(&self, v: &Comodule) -> Matrix {
        let (n, k) = (v.dim(), self.hs_basis.len());
        let mut m = self.zero_matrix(n * k, n);
        for a in 0..n {
            for b in 0..n {
                let coords = self.hs_coords(&self.alg.counital_source(&v.coeffs[b][a]));
                for (h, x) in coords.into_iter().enumerate() {
                    m[(b * k + h, a)] = x;
                }
            }
        }
        m
    }

    /// `ρ_V ∘ (id ⊗ ev) ∘ (coev ⊗ id) ∘ λ⁻¹_V`, which must be the identity.
    pub fn triangle_for(&self, v: &Comodule) -> Matrix {
        let n = v.dim();
        let id = Matrix::identity(self.level(), n);
        let step = self.coev_map(v).kron(&id).mul(&self.left_unitor_inverse(v));
        let step = id.kron(&self.ev_map(v)).mul(&step);
        self.right_unitor(v).mul(&step)
    }

    /// `λ_{V*} ∘ (ev ⊗ id) ∘ (id ⊗ coev) ∘ ρ⁻¹_{V*}`, which must be the identity.
    pub fn triangle_for_dual(&self, v: &Comodule) -> Matrix {
        let dual = self.dual_comodule(v);
        let id = Matrix::identity(self.level(), v.dim());
        let step = id
            .kron(&self.coev_map(v))
            .mul(&self.right_unitor_inverse(&dual));
        let step = self.ev_map(v).kron(&id).mul(&step);
        self.left_unitor(&dual).mul(&step)
    }

    // ---- traces ----

    /// `ev ∘ σ_{V,V*} ∘ (ν_V ⊗ id) ∘ (f ⊗ id) ∘ coev` as an endomorphism of `H_s`.
    pub fn trace_endomorphism(&self, f: &Matrix, v: &Comodule) -> Matrix {
        let n = v.dim();
        let id = Matrix::identity(self.level(), n);
        let dual = self.dual_comodule(v);
        let twisted = self.ribbon_map(v).mul(f);
        let step = twisted.kron(&id).mul(&self.coev_map(v));
        let step = self.braiding_plain(v, &dual).mul(&step);
        self.ev_map(v).mul(&step)
    }

    /// The scalar `c` with `tr(f) = c · id`, read off at `η(1)`.
    pub fn comodule_trace(&self, f: &Matrix, v: &Comodule) -> Result<CycloScalar> {
        if f.rows() != v.dim() || f.cols() != v.dim() {
            return Err(Error::Arity(format!(
                "endomorphism is {}x{}, comodule has dimension {}",
                f.rows(),
                f.cols(),
                v.dim()
            )));
        }
        let m = self.trace_endomorphism(f, v);
        let one = self.hs_coords(&self.alg.unit());
        let image = m.apply(&one);
        let k = one
            .iter()
            .position(|x| !x.is_zero())
            .expect("the unit is nonzero");
        let c = &image[k] * &one[k].inv()?;
        let scaled: Vec<CycloScalar> = one.iter().map(|x| x * &c).collect();
        if scaled != image {
            return Err(Error::Precondition(
                "trace endomorphism is not a multiple of the identity at the unit".into(),
            ));
        }
        Ok(c)
    }

    /// Character `Σ_a c_aa`.
    pub fn character(&self, v: &Comodule) -> WhaElement {
        self.alg.character_of(&v.coeffs)
    }

    /// Multiplicities of the irreducibles in `v`, read off the character.
    pub fn multiplicities(&self, v: &Comodule) -> Result<Vec<CycloScalar>> {
        let level = self.level();
        let chi = self.character(v);
        let mut out = Vec::new();
        let mut rest = chi.clone();
        for j in labels(level) {
            let cj = self.alg.dual_character(j);
            // Irreducible characters live on disjoint blocks; use one diagonal term.
            let (i, c) = cj.terms().next().expect("characters are nonzero");
            let m = chi.coefficient(i) * c.inv()?;
            rest = rest.sub(&cj.scale(&m));
            out.push(m);
        }
        if !rest.is_zero() {
            return Err(Error::Precondition(
                "character is not a combination of irreducible characters".into(),
            ));
        }
        Ok(out)
    }

    /// Fusion multiplicities `N_{ij}^k` predicted by admissibility.
    pub fn fusion_rule(&self, i: Label, j: Label) -> Vec<CycloScalar> {
        let level = self.level();
        let channels = fusion_channels(level, i, j);
        labels(level)
            .map(|k| CycloScalar::from_integer(level, channels.contains(&k) as i64))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recoupling::RecouplingTables;
    use crate::wha::shared_algebra;

    fn category(r: u32) -> ComoduleCategory {
        ComoduleCategory::new(shared_algebra(r, Default::default()).unwrap())
    }

    #[test]
    fn comodule_axioms() {
        for r in 2..=4 {
            let cat = category(r);
            assert!(cat.counit_law_holds(cat.unit()));
            assert!(cat.coassociativity_holds(cat.unit()));
            for j in labels(r) {
                let v = cat.irreducible(j);
                assert!(cat.counit_law_holds(v), "r={r} j={j}");
                assert!(cat.coassociativity_holds(v));
                let d = cat.dual_comodule(v);
                assert!(cat.counit_law_holds(&d));
                assert!(cat.coassociativity_holds(&d));
            }
        }
    }

    #[test]
    fn trivial_truncation_at_level_two() {
        let cat = category(2);
        let p = cat.truncation_idempotent(cat.unit(), cat.irreducible(0));
        assert_eq!(p, Matrix::identity(2, 1));
    }

    #[test]
    fn truncated_square_of_the_fundamental_at_level_three() {
        let cat = category(3);
        let v = cat.irreducible(1);
        let t = cat.truncated_tensor(v, v);
        assert_eq!(t.projector.mul(&t.projector), t.projector);
        // 1 ⊗ 1 = 0, and ω(V_0) has dimension 2.
        assert_eq!(t.dim(), cat.irreducible(0).dim());
        assert!(cat.counit_law_holds(&t.comodule));
        assert!(cat.coassociativity_holds(&t.comodule));
        let m = cat.multiplicities(&t.comodule).unwrap();
        assert_eq!(m, cat.fusion_rule(1, 1));
    }

    #[test]
    fn traces_are_quantum_dimensions() {
        for r in 2..=4 {
            let cat = category(r);
            let rec = RecouplingTables::for_level(r);
            let u = cat.unit();
            let one = cat
                .comodule_trace(&Matrix::identity(r, u.dim()), u)
                .unwrap();
            assert!(one.is_one(), "r={r}: {one}");
            for j in labels(r) {
                let v = cat.irreducible(j);
                let t = cat
                    .comodule_trace(&Matrix::identity(r, v.dim()), v)
                    .unwrap();
                assert_eq!(t, rec.dim(j).unwrap(), "r={r} j={j}");
            }
        }
    }

    #[test]
    fn triangle_identities() {
        for r in 2..=4 {
            let cat = category(r);
            for j in labels(r) {
                let v = cat.irreducible(j);
                let id = Matrix::identity(r, v.dim());
                assert_eq!(cat.triangle_for(v), id, "r={r} j={j}");
                assert_eq!(cat.triangle_for_dual(v), id, "r={r} j={j}");
            }
        }
    }

    #[test]
    fn braiding_is_invertible_and_twist_is_scalar() {
        let r = 4;
        let cat = category(r);
        let rec = RecouplingTables::for_level(r);
        for i in labels(r) {
            let v = cat.irreducible(i);
            let t = rec.twist(i).unwrap();
            assert_eq!(cat.ribbon_map(v), Matrix::identity(r, v.dim()).scale(&t));
            for j in labels(r) {
                let w = cat.irreducible(j);
                let vw = cat.truncated_tensor(v, w);
                let wv = cat.truncated_tensor(w, v);
                let s = cat.braiding_map(&vw, &wv);
                let s_inv = cat.braiding_inverse(&vw, &wv);
                assert_eq!(s_inv.mul(&s), Matrix::identity(r, vw.dim()));
                assert_eq!(s.mul(&s_inv), Matrix::identity(r, wv.dim()));
            }
        }
    }
}
