use std::collections::BTreeMap;

use crate::cyclo::CycloScalar;

/// Sparse linear combination of basis vectors, keyed by basis position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WhaElement {
    level: u32,
    terms: BTreeMap<usize, CycloScalar>,
}

impl WhaElement {
    pub fn zero(level: u32) -> Self {
        WhaElement {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(level: u32, index: usize) -> Self {
        let mut e = Self::zero(level);
        e.add_term(index, CycloScalar::one(level));
        e
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &CycloScalar)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coefficient(&self, index: usize) -> CycloScalar {
        self.terms
            .get(&index)
            .cloned()
            .unwrap_or_else(|| CycloScalar::zero(self.level))
    }

    pub fn add_term(&mut self, index: usize, c: CycloScalar) {
        add_into(&mut self.terms, index, c);
    }

    pub fn add(&self, other: &WhaElement) -> WhaElement {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WhaElement) -> WhaElement {
        self.add(&other.scale(&-CycloScalar::one(self.level)))
    }

    pub fn scale(&self, s: &CycloScalar) -> WhaElement {
        let mut out = WhaElement::zero(self.level);
        for (i, c) in self.terms() {
            out.add_term(i, c * s);
        }
        out
    }

    /// Dense coefficient vector of length `dim`.
    pub fn to_dense(&self, dim: usize) -> Vec<CycloScalar> {
        let mut v = vec![CycloScalar::zero(self.level); dim];
        for (i, c) in self.terms() {
            v[i] = c.clone();
        }
        v
    }

    pub fn from_dense(level: u32, v: &[CycloScalar]) -> WhaElement {
        let mut e = WhaElement::zero(level);
        for (i, c) in v.iter().enumerate() {
            e.add_term(i, c.clone());
        }
        e
    }
}

/// Element of `H ⊗ H`.
pub type Tensor2 = BTreeMap<(usize, usize), CycloScalar>;
/// Element of `H ⊗ H ⊗ H`.
pub type Tensor3 = BTreeMap<(usize, usize, usize), CycloScalar>;

/// Adds `c` at `key`, pruning zeros.
pub fn add_into<K: Ord>(map: &mut BTreeMap<K, CycloScalar>, key: K, c: CycloScalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}
