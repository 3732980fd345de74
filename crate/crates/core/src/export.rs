//! Self-contained JSON export of the structure constants and forms.
//!
//! Scalars are lists of decimal-string rationals (coefficient `i` multiplies
//! `A^i`), so a document never contains floating point.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclo::{field_degree, CycloScalar, ScalarRepr};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::wha::{BasisVector, Conventions, FormTables, StructureTables, WhaAlgebra};

pub const FORMAT_VERSION: &str = "1";

/// Which parts of the algebra go into a document.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Section {
    Mu,
    Delta,
    Antipode,
    Forms,
}

impl Section {
    pub fn all() -> BTreeSet<Section> {
        [
            Section::Mu,
            Section::Delta,
            Section::Antipode,
            Section::Forms,
        ]
        .into_iter()
        .collect()
    }

    pub fn parse(name: &str) -> Result<Section> {
        match name.trim() {
            "mu" => Ok(Section::Mu),
            "delta" => Ok(Section::Delta),
            "s" | "antipode" => Ok(Section::Antipode),
            "forms" => Ok(Section::Forms),
            other => Err(Error::Precondition(format!(
                "unknown table {other:?}; expected mu, delta, s or forms"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub cyclotomic_index: u32,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, ScalarRepr)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<ProductEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Vec<(usize, usize, ScalarRepr)>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<(usize, ScalarRepr)>>>,
    pub unit: Vec<(usize, ScalarRepr)>,
    pub counit: Vec<ScalarRepr>,
}

/// A matrix stored by its nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, ScalarRepr)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormsDoc {
    pub r_form: SparseMatrix,
    pub r_bar: SparseMatrix,
    pub q_form: SparseMatrix,
    pub nu: Vec<ScalarRepr>,
    pub nu_bar: Vec<ScalarRepr>,
    pub u: Vec<ScalarRepr>,
    pub v: Vec<ScalarRepr>,
    pub w: Vec<ScalarRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportDocument {
    pub format_version: String,
    pub level: u32,
    pub conventions: Conventions,
    pub field: FieldInfo,
    pub basis: Vec<BasisVector>,
    pub tables: TablesDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forms: Option<FormsDoc>,
    pub smatrix: Vec<Vec<ScalarRepr>>,
}

fn repr_vec(v: &[CycloScalar]) -> Vec<ScalarRepr> {
    v.iter().map(CycloScalar::to_repr).collect()
}

fn sparse_from_map(n: usize, map: &BTreeMap<(usize, usize), CycloScalar>) -> SparseMatrix {
    SparseMatrix {
        rows: n,
        cols: n,
        entries: map
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(&(i, j), c)| (i, j, c.to_repr()))
            .collect(),
    }
}

impl ExportDocument {
    /// Exports `alg`; `sections` selects the optional tables.
    pub fn from_algebra(alg: &WhaAlgebra, sections: &BTreeSet<Section>) -> ExportDocument {
        let level = alg.level();
        let n = alg.dim();
        let t = alg.tables();
        let mu = sections.contains(&Section::Mu).then(|| {
            let mut out = Vec::new();
            for (i, row) in t.mu.iter().enumerate() {
                let mut keys: Vec<usize> = row.keys().copied().collect();
                keys.sort_unstable();
                for j in keys {
                    let terms = row[&j].iter().map(|(k, c)| (*k, c.to_repr())).collect();
                    out.push(ProductEntry { i, j, terms });
                }
            }
            out
        });
        let delta = sections.contains(&Section::Delta).then(|| {
            t.delta
                .iter()
                .map(|d| d.iter().map(|(a, b, c)| (*a, *b, c.to_repr())).collect())
                .collect()
        });
        let antipode = sections.contains(&Section::Antipode).then(|| {
            t.antipode
                .iter()
                .map(|d| d.iter().map(|(a, c)| (*a, c.to_repr())).collect())
                .collect()
        });
        let forms = sections.contains(&Section::Forms).then(|| {
            let f = alg.form_tables();
            let d = alg.derived();
            let q_rows: Vec<Vec<(usize, usize, ScalarRepr)>> = (0..n)
                .into_par_iter()
                .map(|i| {
                    (0..n)
                        .filter_map(|j| {
                            let c = alg.q_form_basis(i, j);
                            (!c.is_zero()).then(|| (i, j, c.to_repr()))
                        })
                        .collect()
                })
                .collect();
            FormsDoc {
                r_form: sparse_from_map(n, &f.r),
                r_bar: sparse_from_map(n, &f.r_bar),
                q_form: SparseMatrix {
                    rows: n,
                    cols: n,
                    entries: q_rows.into_iter().flatten().collect(),
                },
                nu: repr_vec(&f.nu),
                nu_bar: repr_vec(&f.nu_bar),
                u: repr_vec(&d.u),
                v: repr_vec(&d.v),
                w: repr_vec(&d.w),
            }
        });
        let qt = alg.qtilde_matrix();
        let smatrix = (0..qt.rows())
            .map(|i| (0..qt.cols()).map(|j| qt[(i, j)].to_repr()).collect())
            .collect();
        ExportDocument {
            format_version: FORMAT_VERSION.to_string(),
            level,
            conventions: alg.conventions(),
            field: FieldInfo {
                cyclotomic_index: 4 * level,
                degree: field_degree(level),
            },
            basis: alg.basis().to_vec(),
            tables: TablesDoc {
                mu,
                delta,
                antipode,
                unit: t.unit.iter().map(|(i, c)| (*i, c.to_repr())).collect(),
                counit: repr_vec(&t.counit),
            },
            forms,
            smatrix,
        }
    }

    /// Compact JSON followed by a newline; byte-identical for equal documents.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<ExportDocument> {
        let doc: ExportDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Document(format!(
                "unsupported format version {:?}",
                doc.format_version
            )));
        }
        if doc.field.cyclotomic_index != 4 * doc.level {
            return Err(Error::Document("cyclotomic index must be 4r".into()));
        }
        Ok(doc)
    }

    pub fn is_complete(&self) -> bool {
        self.tables.mu.is_some()
            && self.tables.delta.is_some()
            && self.tables.antipode.is_some()
            && self.forms.is_some()
    }

    /// Rebuilds the algebra from the stored tables alone.
    pub fn to_algebra(&self) -> Result<WhaAlgebra> {
        let level = self.level;
        let missing = |what: &str| Error::Document(format!("document has no {what} table"));
        let sc = |r: &ScalarRepr| CycloScalar::from_repr(level, r).map_err(Error::from);
        let n = self.basis.len();
        let mut mu: Vec<HashMap<usize, Vec<(usize, CycloScalar)>>> = vec![HashMap::new(); n];
        for e in self.tables.mu.as_ref().ok_or_else(|| missing("mu"))? {
            if e.i >= n || e.j >= n {
                return Err(Error::Document(format!(
                    "product index ({}, {}) out of range",
                    e.i, e.j
                )));
            }
            let terms = e
                .terms
                .iter()
                .map(|(k, c)| Ok((*k, sc(c)?)))
                .collect::<Result<Vec<_>>>()?;
            mu[e.i].insert(e.j, terms);
        }
        let delta = self
            .tables
            .delta
            .as_ref()
            .ok_or_else(|| missing("delta"))?
            .iter()
            .map(|d| d.iter().map(|(a, b, c)| Ok((*a, *b, sc(c)?))).collect())
            .collect::<Result<Vec<_>>>()?;
        let antipode = self
            .tables
            .antipode
            .as_ref()
            .ok_or_else(|| missing("antipode"))?
            .iter()
            .map(|d| d.iter().map(|(a, c)| Ok((*a, sc(c)?))).collect())
            .collect::<Result<Vec<_>>>()?;
        let unit = self
            .tables
            .unit
            .iter()
            .map(|(i, c)| Ok((*i, sc(c)?)))
            .collect::<Result<Vec<_>>>()?;
        let counit = self
            .tables
            .counit
            .iter()
            .map(sc)
            .collect::<Result<Vec<_>>>()?;
        let forms = self.forms.as_ref().ok_or_else(|| missing("forms"))?;
        let sparse = |m: &SparseMatrix| -> Result<BTreeMap<(usize, usize), CycloScalar>> {
            m.entries
                .iter()
                .map(|(i, j, c)| Ok(((*i, *j), sc(c)?)))
                .collect()
        };
        let form_tables = FormTables {
            r: sparse(&forms.r_form)?,
            r_bar: sparse(&forms.r_bar)?,
            nu: forms.nu.iter().map(sc).collect::<Result<_>>()?,
            nu_bar: forms.nu_bar.iter().map(sc).collect::<Result<_>>()?,
        };
        let tables = StructureTables {
            mu,
            delta,
            antipode,
            unit,
            counit,
        };
        let out_of_range = tables
            .delta
            .iter()
            .flatten()
            .any(|(a, b, _)| *a >= n || *b >= n)
            || tables.antipode.iter().flatten().any(|(a, _)| *a >= n)
            || tables
                .mu
                .iter()
                .flat_map(|m| m.values())
                .flatten()
                .any(|(k, _)| *k >= n)
            || tables.unit.iter().any(|(i, _)| *i >= n)
            || form_tables
                .r
                .keys()
                .chain(form_tables.r_bar.keys())
                .any(|&(i, j)| i >= n || j >= n);
        if out_of_range {
            return Err(Error::Document("basis index out of range".into()));
        }
        WhaAlgebra::from_tables(
            level,
            self.basis.clone(),
            self.conventions,
            tables,
            form_tables,
        )
    }

    /// The stored `q̃` matrix.
    pub fn smatrix(&self) -> Result<Matrix> {
        let k = self.smatrix.len();
        let mut m = Matrix::zeros(self.level, k, k);
        for (i, row) in self.smatrix.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Document("smatrix is not square".into()));
            }
            for (j, c) in row.iter().enumerate() {
                m[(i, j)] = CycloScalar::from_repr(self.level, c)?;
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_lossless() {
        for r in 2..=4 {
            let alg = WhaAlgebra::new(r).unwrap();
            let doc = ExportDocument::from_algebra(&alg, &Section::all());
            let text = doc.to_json();
            let back = ExportDocument::from_json(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_json(), text);
            let rebuilt = back.to_algebra().unwrap();
            assert_eq!(rebuilt.tables(), alg.tables());
            assert_eq!(rebuilt.form_tables(), alg.form_tables());
            assert_eq!(back.smatrix().unwrap(), alg.qtilde_matrix());
        }
    }

    #[test]
    fn partial_documents_do_not_load() {
        let alg = WhaAlgebra::new(3).unwrap();
        let only: BTreeSet<Section> = [Section::Delta].into_iter().collect();
        let doc = ExportDocument::from_algebra(&alg, &only);
        assert!(!doc.is_complete());
        assert!(doc.tables.mu.is_none());
        assert!(matches!(doc.to_algebra(), Err(Error::Document(_))));
        let text = doc.to_json();
        assert!(!text.contains("\"mu\""));
        assert_eq!(ExportDocument::from_json(&text).unwrap(), doc);
    }

    #[test]
    fn rejects_foreign_versions_and_garbage() {
        let alg = WhaAlgebra::new(2).unwrap();
        let mut doc = ExportDocument::from_algebra(&alg, &Section::all());
        doc.format_version = "2".into();
        assert!(ExportDocument::from_json(&doc.to_json()).is_err());
        assert!(ExportDocument::from_json("{\"level\": 3}").is_err());
        assert!(Section::parse("nope").is_err());
    }

    #[test]
    fn no_floating_point_in_documents() {
        let alg = WhaAlgebra::new(3).unwrap();
        let text = ExportDocument::from_algebra(&alg, &Section::all()).to_json();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        fn walk(v: &serde_json::Value) {
            match v {
                serde_json::Value::Number(n) => assert!(n.is_u64(), "{n}"),
                serde_json::Value::Array(a) => a.iter().for_each(walk),
                serde_json::Value::Object(o) => o.values().for_each(walk),
                _ => {}
            }
        }
        walk(&value);
    }
}
