//! Deterministic generated corpus: posets, acyclic categories with
//! parallel arrows, group and monoid deloopings, product categories, and
//! one deliberately singular sentinel.

use crate::format::{CategoryFile, CompositionEntry, MorphismEntry};
use catzeta::FiniteCategory;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Class mix and size bounds for [`generate_corpus`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    /// Upper bound on object count for generated posets.
    pub max_objects: usize,
    /// How many random posets.
    pub posets: usize,
    /// How many random acyclic categories (posets with multiplied arrows).
    pub acyclic: usize,
    /// Cyclic group deloopings to include, by order.
    pub cyclic_groups: Vec<usize>,
    /// Include the delooping of the symmetric group on three letters.
    pub symmetric_group: bool,
    /// Include the hand-picked named fixtures (terminal, arrow, chains,
    /// parallel pair, split idempotent, products). The split idempotent
    /// fixtures carry irrational spectra, so they keep the numeric track
    /// exercised.
    pub named_fixtures: bool,
    /// Include the singular sentinel (indiscrete two-object category).
    pub singular_sentinel: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_objects: 8,
            posets: 16,
            acyclic: 10,
            cyclic_groups: vec![2, 3, 4, 5, 6],
            symmetric_group: true,
            named_fixtures: true,
            singular_sentinel: true,
        }
    }
}

/// One generated category, both as a file description and built.
pub struct CorpusEntry {
    pub name: String,
    pub file: CategoryFile,
    pub category: FiniteCategory,
    /// Whether this entry is *supposed* to lack Möbius inversion.
    pub expect_singular: bool,
}

/// Deterministic for a given `(seed, spec)` pair; every entry passes
/// validation by construction.
pub fn generate_corpus(seed: u64, spec: &CorpusSpec) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = vec![];
    let mut push = |name: String, file: CategoryFile, expect_singular: bool| {
        let category = file
            .build()
            .unwrap_or_else(|e| panic!("generated category {name} must be lawful: {e}"));
        entries.push(CorpusEntry {
            name,
            file,
            category,
            expect_singular,
        });
    };

    for i in 0..spec.posets {
        let n = rng.random_range(2..=spec.max_objects.max(2));
        let leq = random_order(&mut rng, n);
        push(
            format!("poset-{:02}", i + 1),
            CategoryFile::Poset { leq },
            false,
        );
    }

    for i in 0..spec.acyclic {
        let n = rng.random_range(2..=spec.max_objects.clamp(2, 5));
        let leq = random_order(&mut rng, n);
        let file = multiply_arrows(&mut rng, &leq);
        push(format!("acyclic-{:02}", i + 1), file, false);
    }

    for &n in &spec.cyclic_groups {
        let table = (0..n)
            .map(|g| (0..n).map(|f| (g + f) % n).collect())
            .collect();
        push(format!("cyclic-{n}"), CategoryFile::Monoid { table }, false);
    }

    if spec.symmetric_group {
        push(
            "s3".into(),
            CategoryFile::Monoid { table: s3_table() },
            false,
        );
    }

    if spec.named_fixtures {
        let arrow = chain_poset(2);
        let split = split_idempotent();
        push("terminal".into(), chain_poset(1), false);
        push("arrow".into(), arrow.clone(), false);
        push("chain-3".into(), chain_poset(3), false);
        push(
            "discrete-3".into(),
            CategoryFile::Discrete { objects: 3 },
            false,
        );
        push("parallel-pair".into(), parallel_pair(), false);
        push("split-idempotent".into(), split.clone(), false);
        push(
            "square-grid".into(),
            CategoryFile::Product {
                factors: vec![arrow.clone(), arrow.clone()],
            },
            false,
        );
        push(
            "arrow-x-split-idempotent".into(),
            CategoryFile::Product {
                factors: vec![arrow, split],
            },
            false,
        );
    }

    if spec.singular_sentinel {
        push(
            "indiscrete-pair".into(),
            CategoryFile::Indiscrete { objects: 2 },
            true,
        );
    }

    entries
}

/// Random partial order on `n` points: upward edges on index order, then
/// reflexive-transitive closure.
fn random_order(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
        for cell in row.iter_mut().skip(i + 1) {
            *cell = rng.random_bool(0.35);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    leq
}

/// Blow a poset up into an acyclic category by giving each related pair a
/// random number of parallel arrows. Composition of non-identity arrows
/// always lands on the first arrow of the span, which is associative
/// because the choice depends only on the endpoints.
fn multiply_arrows(rng: &mut ChaCha8Rng, leq: &[Vec<bool>]) -> CategoryFile {
    let n = leq.len();
    let objects: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut mult = vec![vec![0usize; n]; n];
    let mut morphisms = vec![];
    let mut identities = BTreeMap::new();
    for (i, object) in objects.iter().enumerate() {
        morphisms.push(MorphismEntry {
            id: format!("id{i}"),
            dom: object.clone(),
            cod: object.clone(),
        });
        identities.insert(object.clone(), format!("id{i}"));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] {
                mult[i][j] = rng.random_range(1..=3);
                for k in 0..mult[i][j] {
                    morphisms.push(MorphismEntry {
                        id: format!("f{i}_{j}_{k}"),
                        dom: objects[i].clone(),
                        cod: objects[j].clone(),
                    });
                }
            }
        }
    }

    let mut compositions = vec![];
    let mut rule = |g: String, f: String, c: String| {
        compositions.push(CompositionEntry { g, f, composite: c });
    };
    for i in 0..n {
        rule(format!("id{i}"), format!("id{i}"), format!("id{i}"));
    }
    for i in 0..n {
        for (j, row_j) in mult.iter().enumerate() {
            for k in 0..mult[i][j] {
                let f = format!("f{i}_{j}_{k}");
                rule(f.clone(), format!("id{i}"), f.clone());
                rule(format!("id{j}"), f.clone(), f.clone());
                for (l, &out_count) in row_j.iter().enumerate() {
                    for m in 0..out_count {
                        rule(format!("f{j}_{l}_{m}"), f.clone(), format!("f{i}_{l}_0"));
                    }
                }
            }
        }
    }

    CategoryFile::Explicit {
        objects,
        morphisms,
        identities,
        compositions,
    }
}

/// Linear order with `n` points as a poset file.
fn chain_poset(n: usize) -> CategoryFile {
    CategoryFile::Poset {
        leq: (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect(),
    }
}

/// Multiplication table of the symmetric group on three letters, derived
/// from permutation composition.
fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [0, 2, 1],
        [2, 1, 0],
        [1, 0, 2],
    ];
    let mut table = vec![vec![0; 6]; 6];
    for (gi, g) in perms.iter().enumerate() {
        for (fi, f) in perms.iter().enumerate() {
            let composed = [g[f[0]], g[f[1]], g[f[2]]];
            table[gi][fi] = perms.iter().position(|p| *p == composed).unwrap();
        }
    }
    table
}

fn explicit(
    objects: &[&str],
    morphisms: &[(&str, &str, &str)],
    identities: &[(&str, &str)],
    compositions: &[(&str, &str, &str)],
) -> CategoryFile {
    CategoryFile::Explicit {
        objects: objects.iter().map(|s| s.to_string()).collect(),
        morphisms: morphisms
            .iter()
            .map(|(id, dom, cod)| MorphismEntry {
                id: id.to_string(),
                dom: dom.to_string(),
                cod: cod.to_string(),
            })
            .collect(),
        identities: identities
            .iter()
            .map(|(o, m)| (o.to_string(), m.to_string()))
            .collect(),
        compositions: compositions
            .iter()
            .map(|(g, f, c)| CompositionEntry {
                g: g.to_string(),
                f: f.to_string(),
                composite: c.to_string(),
            })
            .collect(),
    }
}

/// Two parallel arrows `a -> b`; nerve is a circle, Euler characteristic 0.
fn parallel_pair() -> CategoryFile {
    explicit(
        &["a", "b"],
        &[
            ("id_a", "a", "a"),
            ("id_b", "b", "b"),
            ("f", "a", "b"),
            ("g", "a", "b"),
        ],
        &[("a", "id_a"), ("b", "id_b")],
        &[
            ("id_a", "id_a", "id_a"),
            ("f", "id_a", "f"),
            ("g", "id_a", "g"),
            ("id_b", "id_b", "id_b"),
            ("id_b", "f", "f"),
            ("id_b", "g", "g"),
        ],
    )
}

/// Retraction pair `r . s = id` with the split idempotent `e = s . r`; its
/// adjacency matrix has an irrational (golden-ratio) spectrum.
fn split_idempotent() -> CategoryFile {
    explicit(
        &["a", "b"],
        &[
            ("id_a", "a", "a"),
            ("e", "a", "a"),
            ("r", "a", "b"),
            ("id_b", "b", "b"),
            ("s", "b", "a"),
        ],
        &[("a", "id_a"), ("b", "id_b")],
        &[
            ("id_a", "id_a", "id_a"),
            ("e", "id_a", "e"),
            ("r", "id_a", "r"),
            ("id_a", "e", "e"),
            ("e", "e", "e"),
            ("r", "e", "r"),
            ("id_a", "s", "s"),
            ("e", "s", "s"),
            ("r", "s", "id_b"),
            ("id_b", "id_b", "id_b"),
            ("s", "id_b", "s"),
            ("id_b", "r", "r"),
            ("s", "r", "e"),
        ],
    )
}
