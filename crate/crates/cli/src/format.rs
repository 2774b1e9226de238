//! The on-disk category description format: small, hand-editable JSON.
//!
//! A file is a single JSON object discriminated by `"kind"`:
//!
//! ```json
//! { "kind": "explicit",
//!   "objects": ["a", "b"],
//!   "morphisms": [
//!     { "id": "id_a", "dom": "a", "cod": "a" },
//!     { "id": "id_b", "dom": "b", "cod": "b" },
//!     { "id": "f",    "dom": "a", "cod": "b" }
//!   ],
//!   "identities": { "a": "id_a", "b": "id_b" },
//!   "compositions": [
//!     { "g": "id_a", "f": "id_a", "composite": "id_a" },
//!     { "g": "f",    "f": "id_a", "composite": "f" },
//!     { "g": "id_b", "f": "f",    "composite": "f" },
//!     { "g": "id_b", "f": "id_b", "composite": "id_b" }
//!   ] }
//! ```
//!
//! where `composite` is `g` after `f`, and every composable pair must
//! appear. Generator forms avoid spelling out tables:
//!
//! - `{ "kind": "poset", "leq": [[true, true], [false, true]] }` — a
//!   reflexive, transitive, antisymmetric relation, one morphism per
//!   related pair;
//! - `{ "kind": "monoid", "table": [[0, 1], [1, 0]] }` — a one-object
//!   category whose endomorphisms multiply by `table[g][f] = g . f`
//!   (indices into the element list; a two-sided unit must exist);
//! - `{ "kind": "discrete", "objects": 3 }` — identities only;
//! - `{ "kind": "indiscrete", "objects": 2 }` — exactly one morphism
//!   between every ordered pair of objects;
//! - `{ "kind": "product", "factors": [<file>, <file>, ...] }` — the
//!   product category of the listed factors, built componentwise.

use catzeta::category::{CategoryError, CompositionRule, FiniteCategory, MorphismDef};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    /// Malformed JSON or schema mismatch; the message carries line and
    /// column.
    #[error("cannot parse category file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("category file does not describe a lawful category: {0}")]
    Category(#[from] CategoryError),
    #[error("a product needs at least one factor")]
    EmptyProduct,
}

/// One morphism declaration in an explicit file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

/// One composition-table entry: `composite` is `g` after `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionEntry {
    pub g: String,
    pub f: String,
    pub composite: String,
}

/// A parsed category file, before being turned into a
/// [`FiniteCategory`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CategoryFile {
    Explicit {
        objects: Vec<String>,
        morphisms: Vec<MorphismEntry>,
        identities: BTreeMap<String, String>,
        compositions: Vec<CompositionEntry>,
    },
    Poset {
        leq: Vec<Vec<bool>>,
    },
    Monoid {
        table: Vec<Vec<usize>>,
    },
    Discrete {
        objects: usize,
    },
    Indiscrete {
        objects: usize,
    },
    Product {
        factors: Vec<CategoryFile>,
    },
}

impl CategoryFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Construct and axiom-check the described category.
    pub fn build(&self) -> Result<FiniteCategory, FormatError> {
        match self {
            CategoryFile::Explicit {
                objects,
                morphisms,
                identities,
                compositions,
            } => {
                let defs = morphisms
                    .iter()
                    .map(|m| MorphismDef::new(&m.id, &m.dom, &m.cod))
                    .collect();
                let ids = identities
                    .iter()
                    .map(|(o, m)| (o.clone(), m.clone()))
                    .collect();
                let rules = compositions
                    .iter()
                    .map(|c| CompositionRule::new(&c.g, &c.f, &c.composite))
                    .collect();
                Ok(FiniteCategory::build_explicit(
                    objects.clone(),
                    defs,
                    ids,
                    rules,
                )?)
            }
            CategoryFile::Poset { leq } => Ok(FiniteCategory::from_poset(leq)?),
            CategoryFile::Monoid { table } => Ok(FiniteCategory::from_monoid_table(table)?),
            CategoryFile::Discrete { objects } => {
                let leq: Vec<Vec<bool>> = (0..*objects)
                    .map(|i| (0..*objects).map(|j| i == j).collect())
                    .collect();
                Ok(FiniteCategory::from_poset(&leq)?)
            }
            CategoryFile::Indiscrete { objects } => Ok(indiscrete(*objects)?),
            CategoryFile::Product { factors } => {
                let built: Vec<FiniteCategory> = factors
                    .iter()
                    .map(CategoryFile::build)
                    .collect::<Result<_, _>>()?;
                let mut iter = built.into_iter();
                let first = iter.next().ok_or(FormatError::EmptyProduct)?;
                iter.try_fold(first, |acc, next| Ok(product_pair(&acc, &next)?))
            }
        }
    }

    /// Digest of the canonical serialized form, hex-encoded.
    pub fn digest(&self) -> String {
        digest_bytes(
            serde_json::to_vec(self)
                .expect("category files always serialize")
                .as_slice(),
        )
    }
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("{:x}", hasher.finalize())
}

/// Exactly one morphism between every ordered pair of objects.
fn indiscrete(n: usize) -> Result<FiniteCategory, CategoryError> {
    if n == 0 {
        return Err(CategoryError::Empty);
    }
    let objects: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let name = |i: usize, j: usize| format!("m{i}_{j}");
    let mut morphisms = vec![];
    let mut identities = vec![];
    for i in 0..n {
        for j in 0..n {
            morphisms.push(MorphismDef::new(&name(i, j), &objects[i], &objects[j]));
        }
        identities.push((objects[i].clone(), name(i, i)));
    }
    let mut rules = vec![];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                rules.push(CompositionRule::new(&name(j, k), &name(i, j), &name(i, k)));
            }
        }
    }
    FiniteCategory::build_explicit(objects, morphisms, identities, rules)
}

/// The product of two categories: objects, morphisms, and composition all
/// componentwise.
fn product_pair(x: &FiniteCategory, y: &FiniteCategory) -> Result<FiniteCategory, CategoryError> {
    let pair = |a: &str, b: &str| format!("{a}|{b}");
    let objects: Vec<String> = x
        .objects()
        .iter()
        .flat_map(|a| y.objects().iter().map(move |b| pair(a, b)))
        .collect();

    let mut morphisms = vec![];
    for f in x.morphisms() {
        for g in y.morphisms() {
            morphisms.push(MorphismDef::new(
                &pair(&f.id, &g.id),
                &pair(&x.objects()[f.dom], &y.objects()[g.dom]),
                &pair(&x.objects()[f.cod], &y.objects()[g.cod]),
            ));
        }
    }

    let identities: Vec<(String, String)> = (0..x.num_objects())
        .flat_map(|a| {
            (0..y.num_objects()).map(move |b| {
                let ida = &x.morphisms()[x.identity_of(a)].id;
                let idb = &y.morphisms()[y.identity_of(b)].id;
                (pair(&x.objects()[a], &y.objects()[b]), pair(ida, idb))
            })
        })
        .collect();

    let mut rules = vec![];
    for f1 in 0..x.num_morphisms() {
        for g1 in 0..x.num_morphisms() {
            let Some(c1) = x.compose(g1, f1) else {
                continue;
            };
            for f2 in 0..y.num_morphisms() {
                for g2 in 0..y.num_morphisms() {
                    let Some(c2) = y.compose(g2, f2) else {
                        continue;
                    };
                    let xm = x.morphisms();
                    let ym = y.morphisms();
                    rules.push(CompositionRule::new(
                        &pair(&xm[g1].id, &ym[g2].id),
                        &pair(&xm[f1].id, &ym[f2].id),
                        &pair(&xm[c1].id, &ym[c2].id),
                    ));
                }
            }
        }
    }
    FiniteCategory::build_explicit(objects, morphisms, identities, rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use catzeta::RationalMatrix;

    fn poset_file(leq: &[&[bool]]) -> CategoryFile {
        CategoryFile::Poset {
            leq: leq.iter().map(|r| r.to_vec()).collect(),
        }
    }

    #[test]
    fn explicit_file_round_trips_through_json() {
        let text = r#"{
            "kind": "explicit",
            "objects": ["a", "b"],
            "morphisms": [
                {"id": "id_a", "dom": "a", "cod": "a"},
                {"id": "id_b", "dom": "b", "cod": "b"},
                {"id": "f", "dom": "a", "cod": "b"}
            ],
            "identities": {"a": "id_a", "b": "id_b"},
            "compositions": [
                {"g": "id_a", "f": "id_a", "composite": "id_a"},
                {"g": "f", "f": "id_a", "composite": "f"},
                {"g": "id_b", "f": "f", "composite": "f"},
                {"g": "id_b", "f": "id_b", "composite": "id_b"}
            ]
        }"#;
        let file = CategoryFile::parse(text).unwrap();
        let emitted = serde_json::to_string_pretty(&file).unwrap();
        let reparsed = CategoryFile::parse(&emitted).unwrap();
        assert_eq!(file, reparsed);

        let cat = file.build().unwrap();
        assert_eq!(cat.num_objects(), 2);
        assert_eq!(cat.num_morphisms(), 3);
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = CategoryFile::parse("{\"kind\": \"poset\",\n  \"leq\": [[true,]]}").unwrap_err();
        let message = err.to_string();
        assert!(message.contains("line 2"), "{message}");
    }

    #[test]
    fn unknown_kind_is_rejected() {
        assert!(CategoryFile::parse(r#"{"kind": "groupoid"}"#).is_err());
    }

    #[test]
    fn discrete_generator_builds_identities_only() {
        let cat = CategoryFile::Discrete { objects: 3 }.build().unwrap();
        assert_eq!(cat.num_objects(), 3);
        assert_eq!(cat.num_morphisms(), 3);
    }

    #[test]
    fn empty_discrete_is_refused() {
        assert!(CategoryFile::Discrete { objects: 0 }.build().is_err());
    }

    #[test]
    fn indiscrete_generator_has_all_ones_adjacency() {
        let cat = CategoryFile::Indiscrete { objects: 3 }.build().unwrap();
        assert!(cat.validate().is_valid());
        let a: RationalMatrix = cat.adjacency_matrix();
        assert_eq!(
            a,
            RationalMatrix::from_i64_rows(&[vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]])
        );
    }

    #[test]
    fn product_adjacency_is_the_kronecker_product() {
        let arrow = poset_file(&[&[true, true], &[false, true]]);
        let product = CategoryFile::Product {
            factors: vec![arrow.clone(), arrow],
        };
        let cat = product.build().unwrap();
        assert!(cat.validate().is_valid());
        let a: RationalMatrix = cat.adjacency_matrix();
        // kron([[1,1],[0,1]], [[1,1],[0,1]]) up to object ordering.
        assert_eq!(cat.num_objects(), 4);
        assert_eq!(cat.num_morphisms(), 9);
        let ones: i64 = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .map(|(i, j)| {
                let v = a[(i, j)].clone();
                assert!(v.is_integer());
                i64::try_from(v.to_integer()).unwrap()
            })
            .sum();
        assert_eq!(ones, 9);
    }

    #[test]
    fn product_of_monoids_multiplies_orders() {
        let z2 = CategoryFile::Monoid {
            table: vec![vec![0, 1], vec![1, 0]],
        };
        let cat = CategoryFile::Product {
            factors: vec![z2.clone(), z2],
        }
        .build()
        .unwrap();
        assert_eq!(cat.num_objects(), 1);
        assert_eq!(cat.num_morphisms(), 4);
        assert!(cat.validate().is_valid());
    }

    #[test]
    fn empty_product_is_refused() {
        assert!(matches!(
            CategoryFile::Product { factors: vec![] }.build(),
            Err(FormatError::EmptyProduct)
        ));
    }

    #[test]
    fn digest_is_stable_and_content_sensitive() {
        let a = poset_file(&[&[true]]);
        let b = poset_file(&[&[true, true], &[false, true]]);
        assert_eq!(a.digest(), a.digest());
        assert_ne!(a.digest(), b.digest());
        assert_eq!(a.digest().len(), 64);
    }
}
