//! Labeled recoupling data: admissibility, quantum dimensions, theta and
//! tetrahedral nets, quantum 6j-symbols, crossing eigenvalues, twists and
//! Hopf-link values.
//!
//! Closed formulas are memoized per level in [`RecouplingTables`]. The
//! [`oracle`] submodule evaluates the same quantities as Temperley–Lieb nets;
//! the test suite demands exact agreement.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use crate::cyclo::CycloScalar;
use crate::error::{Error, Result};

/// Simple-object index in `0..=r-2`.
pub type Label = u32;

pub fn labels(level: u32) -> std::ops::RangeInclusive<Label> {
    0..=level.saturating_sub(2)
}

pub fn label_count(level: u32) -> usize {
    level.saturating_sub(1) as usize
}

/// Parity, quantum triangle inequality and non-negligibility.
pub fn admissible(level: u32, a: Label, b: Label, c: Label) -> bool {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    (a + b + c) % 2 == 0
        && a + b >= c
        && b + c >= a
        && c + a >= b
        && a + b + c <= 2 * level as i64 - 4
}

/// An admissible triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub a: Label,
    pub b: Label,
    pub c: Label,
}

impl Triple {
    pub fn new(level: u32, a: Label, b: Label, c: Label) -> Result<Self> {
        if admissible(level, a, b, c) {
            Ok(Triple { a, b, c })
        } else {
            Err(Error::Inadmissible(a, b, c))
        }
    }
}

/// Channels `c` with `(a, b, c)` admissible.
pub fn fusion_channels(level: u32, a: Label, b: Label) -> Vec<Label> {
    labels(level)
        .filter(|&c| admissible(level, a, b, c))
        .collect()
}

fn require(level: u32, a: Label, b: Label, c: Label) -> Result<()> {
    if admissible(level, a, b, c) {
        Ok(())
    } else {
        Err(Error::Inadmissible(a, b, c))
    }
}

fn require_label(level: u32, j: Label) -> Result<()> {
    if level >= 2 && j <= level - 2 {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "label {j} outside I at r={level}"
        )))
    }
}

type Key6 = [Label; 6];

/// Memoized closed-form recoupling values at one level.
pub struct RecouplingTables {
    level: u32,
    factorials: Vec<CycloScalar>,
    dims: Vec<CycloScalar>,
    theta: RwLock<HashMap<[Label; 3], CycloScalar>>,
    tet: RwLock<HashMap<Key6, CycloScalar>>,
    sixj: RwLock<HashMap<Key6, CycloScalar>>,
}

impl RecouplingTables {
    /// Shared tables for `level`, created on first use.
    pub fn for_level(level: u32) -> Arc<RecouplingTables> {
        static ALL: OnceLock<Mutex<HashMap<u32, Arc<RecouplingTables>>>> = OnceLock::new();
        let mut map = ALL.get_or_init(Default::default).lock().unwrap();
        map.entry(level)
            .or_insert_with(|| Arc::new(RecouplingTables::new(level)))
            .clone()
    }

    pub fn new(level: u32) -> Self {
        assert!(level >= 2, "level must be at least 2");
        // [n]! up to the largest argument the tetrahedral sum can reach.
        let top = 3 * level as usize;
        let mut factorials = vec![CycloScalar::one(level)];
        for n in 1..=top {
            let next = factorials[n - 1].clone() * CycloScalar::quantum_int(level, n as i64);
            factorials.push(next);
        }
        let dims = labels(level)
            .map(|j| {
                CycloScalar::sign(level, j as i64) * CycloScalar::quantum_int(level, j as i64 + 1)
            })
            .collect();
        RecouplingTables {
            level,
            factorials,
            dims,
            theta: RwLock::default(),
            tet: RwLock::default(),
            sixj: RwLock::default(),
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    fn fact(&self, n: i64) -> &CycloScalar {
        &self.factorials[usize::try_from(n).expect("negative factorial argument")]
    }

    /// `Δ_j = (-1)^j [j+1]`.
    pub fn dim(&self, j: Label) -> Result<CycloScalar> {
        require_label(self.level, j)?;
        Ok(self.dims[j as usize].clone())
    }

    pub fn theta(&self, a: Label, b: Label, c: Label) -> Result<CycloScalar> {
        require(self.level, a, b, c)?;
        if let Some(v) = self.theta.read().unwrap().get(&[a, b, c]) {
            return Ok(v.clone());
        }
        let (a_, b_, c_) = (a as i64, b as i64, c as i64);
        let i = (a_ + b_ - c_) / 2;
        let j = (b_ + c_ - a_) / 2;
        let k = (c_ + a_ - b_) / 2;
        let num = self.fact(i + j + k + 1) * self.fact(i) * self.fact(j) * self.fact(k);
        let den = self.fact(i + j) * self.fact(j + k) * self.fact(k + i);
        let v = CycloScalar::sign(self.level, i + j + k) * num * den.inv()?;
        self.theta.write().unwrap().insert([a, b, c], v.clone());
        Ok(v)
    }

    /// Tetrahedral net with vertex triples `(a,b,j)`, `(c,d,j)`, `(a,d,i)`, `(b,c,i)`.
    pub fn tet(
        &self,
        a: Label,
        b: Label,
        c: Label,
        d: Label,
        i: Label,
        j: Label,
    ) -> Result<CycloScalar> {
        require(self.level, a, b, j)?;
        require(self.level, c, d, j)?;
        require(self.level, a, d, i)?;
        require(self.level, b, c, i)?;
        let key = [a, b, c, d, i, j];
        if let Some(v) = self.tet.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = self.tet_closed_form(a, b, c, d, i, j)?;
        self.tet.write().unwrap().insert(key, v.clone());
        Ok(v)
    }

    fn tet_closed_form(
        &self,
        a: Label,
        b: Label,
        c: Label,
        d: Label,
        i: Label,
        j: Label,
    ) -> Result<CycloScalar> {
        let [a, b, c, d, i, j] = [a, b, c, d, i, j].map(i64::from);
        let tri = [
            (a + d + i) / 2,
            (b + c + i) / 2,
            (a + b + j) / 2,
            (c + d + j) / 2,
        ];
        let quad = [
            (b + d + i + j) / 2,
            (a + c + i + j) / 2,
            (a + b + c + d) / 2,
        ];
        let r = self.level;
        let mut outer = CycloScalar::one(r);
        for &q in &quad {
            for &t in &tri {
                outer *= self.fact(q - t);
            }
        }
        let mut edges = CycloScalar::one(r);
        for e in [a, b, c, d, i, j] {
            edges *= self.fact(e);
        }
        let lo = *tri.iter().max().unwrap();
        let hi = *quad.iter().min().unwrap();
        let mut sum = CycloScalar::zero(r);
        for s in lo..=hi {
            let mut den = CycloScalar::one(r);
            for &t in &tri {
                den *= self.fact(s - t);
            }
            for &q in &quad {
                den *= self.fact(q - s);
            }
            let term = CycloScalar::sign(r, s) * self.fact(s + 1).clone() * den.inv()?;
            sum += &term;
        }
        Ok(outer * edges.inv()? * sum)
    }

    /// `{a b i; c d j} = Δ_i · Tet / (θ(a,d,i) θ(b,c,i))`.
    pub fn sixj(
        &self,
        a: Label,
        b: Label,
        i: Label,
        c: Label,
        d: Label,
        j: Label,
    ) -> Result<CycloScalar> {
        let key = [a, b, i, c, d, j];
        if let Some(v) = self.sixj.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let tet = self.tet(a, b, c, d, i, j)?;
        let den = self.theta(a, d, i)? * self.theta(b, c, i)?;
        let v = self.dim(i)? * tet * den.inv()?;
        self.sixj.write().unwrap().insert(key, v.clone());
        Ok(v)
    }

    /// 6j-symbol, or zero when any defining triple is inadmissible.
    pub fn sixj_or_zero(
        &self,
        a: Label,
        b: Label,
        i: Label,
        c: Label,
        d: Label,
        j: Label,
    ) -> CycloScalar {
        let r = self.level;
        if admissible(r, a, b, j)
            && admissible(r, c, d, j)
            && admissible(r, a, d, i)
            && admissible(r, b, c, i)
        {
            self.sixj(a, b, i, c, d, j).expect("admissible")
        } else {
            CycloScalar::zero(r)
        }
    }

    /// Eigenvalue of the positive crossing of `a` over `b` on the `c` channel.
    pub fn crossing_coeff(&self, a: Label, b: Label, c: Label) -> Result<CycloScalar> {
        require(self.level, a, b, c)?;
        let (a, b, c) = (a as i64, b as i64, c as i64);
        let e = (c * (c + 2) - a * (a + 2) - b * (b + 2)) / 2;
        Ok(CycloScalar::sign(self.level, (a + b - c) / 2) * CycloScalar::a_power(self.level, e))
    }

    /// `t_j = (-1)^j A^{j(j+2)}`.
    pub fn twist(&self, j: Label) -> Result<CycloScalar> {
        require_label(self.level, j)?;
        let j = j as i64;
        Ok(CycloScalar::sign(self.level, j) * CycloScalar::a_power(self.level, j * (j + 2)))
    }

    /// Hopf link with components labeled `i` and `j`, summed over fusion channels.
    pub fn hopf_link(&self, i: Label, j: Label) -> Result<CycloScalar> {
        let tij = (self.twist(i)? * self.twist(j)?).inv()?;
        let mut acc = CycloScalar::zero(self.level);
        for k in fusion_channels(self.level, i, j) {
            acc += &(self.twist(k)? * &tij * self.dim(k)?);
        }
        Ok(acc)
    }

    pub fn hopf_matrix(&self) -> crate::linalg::Matrix {
        let n = label_count(self.level);
        crate::linalg::Matrix::from_fn(self.level, n, n, |i, j| {
            self.hopf_link(i as Label, j as Label)
                .expect("labels in range")
        })
    }
}

/// Temperley–Lieb evaluations of the recoupling nets.
pub mod oracle {
    use super::*;
    use crate::tl::{self, SkeinElement};

    fn u(x: Label) -> usize {
        x as usize
    }

    pub fn dim(level: u32, j: Label) -> Result<CycloScalar> {
        require_label(level, j)?;
        tl::jones_wenzl(level, u(j))?.element().closure()
    }

    /// Two vertices joined along all three edges.
    pub fn theta(level: u32, a: Label, b: Label, c: Label) -> Result<CycloScalar> {
        require(level, a, b, c)?;
        let split = tl::split_vertex(level, u(a), u(b), u(c))?;
        let merge = tl::merge_vertex(level, u(a), u(b), u(c))?;
        split.compose(&merge)?.closure()
    }

    /// Tetrahedral net: split `i` into `b, c`, split those into `a, j` and
    /// `j, d`, cap the two `j` bundles, merge `a, d` back into `i`, close.
    pub fn tet(
        level: u32,
        a: Label,
        b: Label,
        c: Label,
        d: Label,
        i: Label,
        j: Label,
    ) -> Result<CycloScalar> {
        require(level, a, b, j)?;
        require(level, c, d, j)?;
        require(level, a, d, i)?;
        require(level, b, c, i)?;
        let (a, b, c, d, i, j) = (u(a), u(b), u(c), u(d), u(i), u(j));
        let top = tl::split_vertex(level, b, c, i)?;
        let mid = tl::split_vertex(level, a, j, b)?.tensor(&tl::split_vertex(level, j, d, c)?)?;
        let cap = SkeinElement::from_diagram(level, tl::cap_bundle(a + 2 * j + d, a, j));
        let bottom = tl::merge_vertex(level, a, d, i)?;
        top.compose(&mid)?
            .compose(&cap)?
            .compose(&bottom)?
            .closure()
    }

    /// Crossing of bundles `a` over `b`, read off the `c` channel.
    pub fn crossing_coeff(
        level: u32,
        a: Label,
        b: Label,
        c: Label,
        mirror: bool,
    ) -> Result<CycloScalar> {
        require(level, a, b, c)?;
        let (a, b, c) = (u(a), u(b), u(c));
        let net = tl::split_vertex(level, a, b, c)?
            .compose(&tl::bundle_crossing(level, a, b, mirror)?)?
            .compose(&tl::merge_vertex(level, b, a, c)?)?
            .closure()?;
        Ok(net * theta(level, a as Label, b as Label, c as Label)?.inv()?)
    }

    /// Curl on a `j` bundle, read off as the scalar multiple of `p_j`.
    pub fn twist(level: u32, j: Label) -> Result<CycloScalar> {
        require_label(level, j)?;
        let j = u(j);
        let p = tl::jones_wenzl(level, j)?.element().clone();
        let cup = SkeinElement::from_diagram(level, tl::cup_bundle(j, j, j));
        let cross = tl::padded(level, 0, &tl::bundle_crossing(level, j, j, false)?, j)?;
        let cap = SkeinElement::from_diagram(level, tl::cap_bundle(3 * j, j, j));
        let curl = p.compose(&cup)?.compose(&cross)?.compose(&cap)?;
        let ratio = curl.closure()? * p.closure()?.inv()?;
        if curl != p.scale(&ratio) {
            return Err(Error::Precondition(
                "curl is not a multiple of the projector".into(),
            ));
        }
        Ok(ratio)
    }

    /// Closure of the double braid of bundles `i` and `j` through `p_i ⊗ p_j`.
    pub fn hopf_link(level: u32, i: Label, j: Label) -> Result<CycloScalar> {
        require_label(level, i)?;
        require_label(level, j)?;
        let (i, j) = (u(i), u(j));
        let p = tl::jones_wenzl(level, i)?
            .element()
            .tensor(tl::jones_wenzl(level, j)?.element())?;
        p.compose(&tl::bundle_crossing(level, i, j, false)?)?
            .compose(&tl::bundle_crossing(level, j, i, false)?)?
            .closure()
    }

    /// Both sides of the recoupling identity, each closed against the dual
    /// vertices of every admissible channel `i`. The identity holds modulo
    /// negligible morphisms, so it is checked on these closures rather than
    /// as an equality of skein elements.
    pub fn recoupling_closures(
        tables: &RecouplingTables,
        a: Label,
        b: Label,
        c: Label,
        d: Label,
        j: Label,
    ) -> Result<Vec<(Label, CycloScalar, CycloScalar)>> {
        let level = tables.level();
        require(level, a, b, j)?;
        require(level, c, d, j)?;
        // b ⊗ c -> a ⊗ d through the horizontal j edge.
        let lhs = tl::split_vertex(level, u(a), u(j), u(b))?
            .tensor(&SkeinElement::identity(level, u(c)))?
            .compose(
                &SkeinElement::identity(level, u(a)).tensor(&tl::merge_vertex(
                    level,
                    u(j),
                    u(c),
                    u(d),
                )?)?,
            )?;
        let mut rhs = SkeinElement::zero(level, u(b + c), u(a + d));
        let channels: Vec<Label> = labels(level)
            .filter(|&i| admissible(level, a, d, i) && admissible(level, b, c, i))
            .collect();
        for &i in &channels {
            let coeff = tables.sixj(a, b, i, c, d, j)?;
            let term = tl::merge_vertex(level, u(b), u(c), u(i))?.compose(&tl::split_vertex(
                level,
                u(a),
                u(d),
                u(i),
            )?)?;
            rhs = rhs.add(&term.scale(&coeff))?;
        }
        let mut out = Vec::new();
        for &i in &channels {
            let open = tl::split_vertex(level, u(b), u(c), u(i))?;
            let close = tl::merge_vertex(level, u(a), u(d), u(i))?;
            let l = open.compose(&lhs)?.compose(&close)?.closure()?;
            let r = open.compose(&rhs)?.compose(&close)?.closure()?;
            out.push((i, l, r));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(r: u32, n: i64) -> CycloScalar {
        CycloScalar::a_power(r, n)
    }

    #[test]
    fn admissibility_examples() {
        assert!(admissible(3, 1, 1, 0));
        assert!(!admissible(3, 1, 1, 2));
        assert!(admissible(5, 1, 2, 3));
        assert!(!admissible(5, 1, 2, 2));
        assert!(!admissible(5, 0, 1, 3));
    }

    #[test]
    fn dimensions_and_thetas() {
        let t = RecouplingTables::for_level(3);
        assert!(t.dim(0).unwrap().is_one());
        assert_eq!(t.dim(1).unwrap(), CycloScalar::from_integer(3, -1));
        assert_eq!(t.theta(1, 1, 0).unwrap(), CycloScalar::from_integer(3, -1));
        assert!(t.theta(1, 1, 2).is_err());
        let t5 = RecouplingTables::for_level(5);
        let q = CycloScalar::q_power(5, 1);
        assert_eq!(t5.dim(1).unwrap(), -(q.clone() + q.inv().unwrap()));
        for x in labels(5) {
            assert_eq!(t5.theta(x, x, 0).unwrap(), t5.dim(x).unwrap());
        }
    }

    #[test]
    fn crossing_examples() {
        let r = 6;
        let t = RecouplingTables::for_level(r);
        assert!(t.crossing_coeff(2, 0, 2).unwrap().is_one());
        assert_eq!(t.crossing_coeff(1, 1, 0).unwrap(), -a(r, -3));
        assert_eq!(t.crossing_coeff(1, 1, 2).unwrap(), a(r, 1));
        assert!(t.twist(0).unwrap().is_one());
        assert_eq!(t.twist(1).unwrap(), -a(r, 3));
        assert_eq!(RecouplingTables::for_level(3).twist(1).unwrap(), -a(3, 3));
    }

    #[test]
    fn hopf_matrix_at_level_three() {
        let m = RecouplingTables::for_level(3).hopf_matrix();
        let expect = [[1, -1], [-1, -1]];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m[(i, j)], CycloScalar::from_integer(3, expect[i][j]));
            }
        }
    }

    #[test]
    fn oracle_agreement_small() {
        for r in 2..=4u32 {
            let t = RecouplingTables::for_level(r);
            for x in labels(r) {
                assert_eq!(oracle::dim(r, x).unwrap(), t.dim(x).unwrap());
                assert_eq!(oracle::twist(r, x).unwrap(), t.twist(x).unwrap());
                for y in labels(r) {
                    assert_eq!(
                        oracle::hopf_link(r, x, y).unwrap(),
                        t.hopf_link(x, y).unwrap()
                    );
                    for z in fusion_channels(r, x, y) {
                        assert_eq!(
                            oracle::theta(r, x, y, z).unwrap(),
                            t.theta(x, y, z).unwrap()
                        );
                        assert_eq!(
                            oracle::crossing_coeff(r, x, y, z, false).unwrap(),
                            t.crossing_coeff(x, y, z).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tetrahedra_match_nets_at_level_four() {
        let r = 4;
        let t = RecouplingTables::for_level(r);
        let mut checked = 0;
        for [a, b, c, d, i, j] in admissible_tets(r) {
            assert_eq!(
                oracle::tet(r, a, b, c, d, i, j).unwrap(),
                t.tet(a, b, c, d, i, j).unwrap(),
                "{:?}",
                [a, b, c, d, i, j]
            );
            checked += 1;
        }
        assert!(checked > 10);
    }

    #[test]
    fn recoupling_identity_at_level_four() {
        let r = 4;
        let t = RecouplingTables::for_level(r);
        for [a, b, c, d] in [
            [0, 0, 0, 0],
            [1, 1, 1, 1],
            [2, 1, 1, 2],
            [1, 2, 1, 2],
            [2, 2, 2, 2],
        ] {
            for j in labels(r) {
                if admissible(r, a, b, j) && admissible(r, c, d, j) {
                    for (i, lhs, rhs) in oracle::recoupling_closures(&t, a, b, c, d, j).unwrap() {
                        assert_eq!(lhs, rhs, "{a} {b} {c} {d} {j} via {i}");
                    }
                }
            }
        }
    }

    pub(crate) fn admissible_tets(r: u32) -> Vec<[Label; 6]> {
        let mut out = Vec::new();
        for a in labels(r) {
            for b in labels(r) {
                for c in labels(r) {
                    for d in labels(r) {
                        for i in labels(r) {
                            for j in labels(r) {
                                if admissible(r, a, b, j)
                                    && admissible(r, c, d, j)
                                    && admissible(r, a, d, i)
                                    && admissible(r, b, c, i)
                                {
                                    out.push([a, b, c, d, i, j]);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}
