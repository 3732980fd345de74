//! Forms derived from the r-form and the ribbon form: the double braiding
//! `q`, the dual Drinfel'd elements `u, v`, the pivotal form `w`, dual
//! (quantum) characters and the `q̃` matrix.

use rayon::prelude::*;

use super::{BasisVector, WhaAlgebra, WhaElement};
use crate::cyclo::CycloScalar;
use crate::linalg::Matrix;
use crate::recoupling::{labels, Label};

/// Basis values of `u`, `v`, `w` and `w̄`.
#[derive(Clone, Debug)]
pub struct DerivedForms {
    pub u: Vec<CycloScalar>,
    pub v: Vec<CycloScalar>,
    pub w: Vec<CycloScalar>,
    pub w_bar: Vec<CycloScalar>,
}

impl DerivedForms {
    pub(super) fn compute(alg: &WhaAlgebra) -> DerivedForms {
        let n = alg.dim();
        let rows: Vec<(CycloScalar, CycloScalar)> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut u = CycloScalar::zero(alg.level);
                let mut v = CycloScalar::zero(alg.level);
                for (a, b, c) in alg.comultiply_basis(i) {
                    // v(x) = r(S(x') ⊗ x''), u(x) = r(S(x'') ⊗ x').
                    for (k, d) in alg.antipode_basis(*a) {
                        let t = alg.r_form_basis(*k, *b);
                        if !t.is_zero() {
                            v += &(&(c * d) * &t);
                        }
                    }
                    for (k, d) in alg.antipode_basis(*b) {
                        let t = alg.r_form_basis(*k, *a);
                        if !t.is_zero() {
                            u += &(&(c * d) * &t);
                        }
                    }
                }
                (u, v)
            })
            .collect();
        let (u, v): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        let w: Vec<CycloScalar> = (0..n)
            .map(|i| {
                let mut acc = CycloScalar::zero(alg.level);
                for (a, b, c) in alg.comultiply_basis(i) {
                    let t = &v[*a] * alg.ribbon_basis(*b);
                    if !t.is_zero() {
                        acc += &(c * &t);
                    }
                }
                acc
            })
            .collect();
        // w is dual group-like, so its convolution inverse is w ∘ S.
        let w_bar = (0..n)
            .map(|i| {
                let mut acc = CycloScalar::zero(alg.level);
                for (k, d) in alg.antipode_basis(i) {
                    acc += &(d * &w[*k]);
                }
                acc
            })
            .collect();
        DerivedForms { u, v, w, w_bar }
    }
}

impl WhaAlgebra {
    /// `q(x ⊗ y) = r(x' ⊗ y') r(y'' ⊗ x'')` on basis vectors.
    pub fn q_form_basis(&self, i: usize, j: usize) -> CycloScalar {
        let mut acc = CycloScalar::zero(self.level);
        for (a1, a2, c) in self.comultiply_basis(i) {
            for (b1, b2, d) in self.comultiply_basis(j) {
                let r1 = self.r_form_basis(*a1, *b1);
                if r1.is_zero() {
                    continue;
                }
                let r2 = self.r_form_basis(*b2, *a2);
                if !r2.is_zero() {
                    acc += &(&(c * d) * &(r1 * r2));
                }
            }
        }
        acc
    }

    pub fn q_form(&self, x: &WhaElement, y: &WhaElement) -> CycloScalar {
        self.pair_form(x, y, |i, j| self.q_form_basis(i, j))
    }

    pub fn drinfeld_u(&self, x: &WhaElement) -> CycloScalar {
        self.linear_form(x, &self.derived().u)
    }

    pub fn drinfeld_v(&self, x: &WhaElement) -> CycloScalar {
        self.linear_form(x, &self.derived().v)
    }

    /// `w(x) = v(x') ν(x'')`.
    pub fn pivotal_form(&self, x: &WhaElement) -> CycloScalar {
        self.linear_form(x, &self.derived().w)
    }

    pub fn pivotal_bar(&self, x: &WhaElement) -> CycloScalar {
        self.linear_form(x, &self.derived().w_bar)
    }

    /// Coefficient matrix `c[a][b]` of the irreducible comodule for `V_j`,
    /// with `β(e_b) = Σ_a e_a ⊗ c[a][b]`; indices follow [`WhaAlgebra::channel_pairs`].
    pub fn irreducible_coefficients(&self, j: Label) -> Vec<Vec<WhaElement>> {
        let pairs = self.channel_pairs(j);
        pairs
            .iter()
            .map(|&(t, u)| {
                pairs
                    .iter()
                    .map(|&(p, q)| {
                        let i = self.idx(BasisVector {
                            j,
                            p: u,
                            q: t,
                            r: p,
                            s: q,
                        });
                        self.element(i)
                    })
                    .collect()
            })
            .collect()
    }

    /// `χ = Σ_a c_aa` for a comodule with coefficient matrix `coeffs`.
    pub fn character_of(&self, coeffs: &[Vec<WhaElement>]) -> WhaElement {
        let mut out = self.zero();
        for (a, row) in coeffs.iter().enumerate() {
            out = out.add(&row[a]);
        }
        out
    }

    /// `T = Σ_{a,b} c_ab w(c_ba)`.
    pub fn quantum_character_of(&self, coeffs: &[Vec<WhaElement>]) -> WhaElement {
        let mut out = self.zero();
        for (a, row) in coeffs.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                let w = self.pivotal_form(&coeffs[b][a]);
                if !w.is_zero() {
                    out = out.add(&c.scale(&w));
                }
            }
        }
        out
    }

    pub fn dual_character(&self, j: Label) -> WhaElement {
        self.character_of(&self.irreducible_coefficients(j))
    }

    pub fn dual_quantum_character(&self, j: Label) -> WhaElement {
        self.quantum_character_of(&self.irreducible_coefficients(j))
    }

    /// `q̃_ij = q(T_i ⊗ T_j) / ε(1)`.
    pub fn qtilde_matrix(&self) -> Matrix {
        let chars: Vec<WhaElement> = labels(self.level)
            .map(|j| self.dual_quantum_character(j))
            .collect();
        let norm = CycloScalar::from_integer(self.level, self.label_count() as i64)
            .inv()
            .expect("|I| is nonzero");
        let n = chars.len();
        Matrix::from_fn(self.level, n, n, |i, j| {
            self.q_form(&chars[i], &chars[j]) * &norm
        })
    }

    pub fn is_weakly_cofactorizable(&self) -> bool {
        !self.qtilde_matrix().determinant().is_zero()
    }
}
