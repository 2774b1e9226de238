//! Finite categories with explicit composition tables.
//!
//! A [`FiniteCategory`] stores objects, morphisms with their endpoints, an
//! identity morphism per object, and a total composition table over the
//! composable pairs. Constructors:
//!
//! - [`FiniteCategory::build_explicit`] from raw data (checked against the
//!   category axioms);
//! - [`FiniteCategory::from_poset`] from a reflexive-transitive order
//!   relation;
//! - [`FiniteCategory::from_monoid_table`] from a monoid multiplication
//!   table (a one-object category).
//!
//! The module also exposes the adjacency matrix (morphism counts between
//! object pairs) and two independent composable-chain counters used to
//! cross-check each other.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Errors raised while constructing a category.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    /// Categories here have at least one object.
    #[error("category must have at least one object")]
    Empty,
    /// An object or morphism id occurs twice.
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    /// A reference to an id that was never declared.
    #[error("unknown id `{0}`")]
    UnknownId(String),
    /// An object has no identity morphism assigned.
    #[error("object `{0}` has no identity morphism")]
    MissingIdentity(String),
    /// Two composition rules for the same pair.
    #[error("composite of `{g}` after `{f}` is defined twice")]
    DuplicateComposite { g: String, f: String },
    /// A composable pair without a composition rule.
    #[error("missing composite of `{g}` after `{f}`")]
    MissingComposite { g: String, f: String },
    /// Endpoints do not line up.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    /// The data violates the category axioms.
    #[error("category axioms violated:\n{0}")]
    Axioms(ValidationReport),
    /// The relation given to `from_poset` is not a partial order.
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    /// The monoid table has no two-sided unit.
    #[error("monoid table has no two-sided unit")]
    NoUnit,
    /// The monoid table is not associative.
    #[error("monoid table not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    /// The monoid table is malformed.
    #[error("bad monoid table: {0}")]
    BadTable(String),
}

/// A single violation of the category axioms found by [`FiniteCategory::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The recorded composite of `g` after `f` does not run
    /// `dom(f) -> cod(g)`.
    CompositeEndpoints {
        g: String,
        f: String,
        composite: String,
    },
    /// `id ∘ f != f`.
    LeftIdentity { f: String },
    /// `f ∘ id != f`.
    RightIdentity { f: String },
    /// `h ∘ (g ∘ f) != (h ∘ g) ∘ f`.
    Associativity { h: String, g: String, f: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CompositeEndpoints { g, f, composite } => write!(
                out,
                "composite `{composite}` of `{g}` after `{f}` has wrong endpoints"
            ),
            Violation::LeftIdentity { f } => write!(out, "identity law fails: id ∘ `{f}` != `{f}`"),
            Violation::RightIdentity { f } => {
                write!(out, "identity law fails: `{f}` ∘ id != `{f}`")
            }
            Violation::Associativity { h, g, f } => {
                write!(out, "associativity fails on (`{h}`, `{g}`, `{f}`)")
            }
        }
    }
}

/// Every axiom violation found in a composition table.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(out, "no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            write!(out, "- {v}")?;
        }
        Ok(())
    }
}

/// A morphism: an id plus object indices for its domain and codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub dom: usize,
    pub cod: usize,
}

/// Declaration of a morphism by object ids, used by the builders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismDef {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

impl MorphismDef {
    pub fn new(id: &str, dom: &str, cod: &str) -> Self {
        MorphismDef {
            id: id.into(),
            dom: dom.into(),
            cod: cod.into(),
        }
    }
}

/// One entry of a composition table: `composite = g ∘ f` (first `f`, then `g`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionRule {
    pub g: String,
    pub f: String,
    pub composite: String,
}

impl CompositionRule {
    pub fn new(g: &str, f: &str, composite: &str) -> Self {
        CompositionRule {
            g: g.into(),
            f: f.into(),
            composite: composite.into(),
        }
    }
}

/// A finite category with a total composition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    /// Identity morphism index per object.
    identities: Vec<usize>,
    /// `(g, f) -> g ∘ f` for every composable pair (`cod f = dom g`).
    compose: HashMap<(usize, usize), usize>,
    /// Morphism indices grouped by domain object.
    by_dom: Vec<Vec<usize>>,
}

impl FiniteCategory {
    /// Assemble a category from raw parts, checking only structure: ids
    /// resolve and are unique, every object has an identity with matching
    /// endpoints, rules cover exactly the composable pairs.
    ///
    /// The category *axioms* (identity laws, associativity, composite
    /// endpoints) are not checked here; run [`validate`](Self::validate), or
    /// use [`build_explicit`](Self::build_explicit) which does both.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<MorphismDef>,
        identities: Vec<(String, String)>,
        rules: Vec<CompositionRule>,
    ) -> Result<Self, CategoryError> {
        if objects.is_empty() {
            return Err(CategoryError::Empty);
        }
        let obj_index = unique_index(&objects)?;
        let mor_ids: Vec<String> = morphisms.iter().map(|m| m.id.clone()).collect();
        let mor_index = unique_index(&mor_ids)?;

        let resolve_obj = |id: &str| {
            obj_index
                .get(id)
                .copied()
                .ok_or_else(|| CategoryError::UnknownId(id.into()))
        };
        let resolve_mor = |id: &str| {
            mor_index
                .get(id)
                .copied()
                .ok_or_else(|| CategoryError::UnknownId(id.into()))
        };

        let morphisms: Vec<Morphism> = morphisms
            .iter()
            .map(|m| {
                Ok(Morphism {
                    id: m.id.clone(),
                    dom: resolve_obj(&m.dom)?,
                    cod: resolve_obj(&m.cod)?,
                })
            })
            .collect::<Result<_, CategoryError>>()?;

        let mut identity_of: Vec<Option<usize>> = vec![None; objects.len()];
        for (obj, mor) in &identities {
            let o = resolve_obj(obj)?;
            let m = resolve_mor(mor)?;
            if morphisms[m].dom != o || morphisms[m].cod != o {
                return Err(CategoryError::DomainMismatch(format!(
                    "identity `{mor}` of `{obj}` must be an endomorphism of `{obj}`"
                )));
            }
            if identity_of[o].replace(m).is_some() {
                return Err(CategoryError::DuplicateId(mor.clone()));
            }
        }
        let identities = identity_of
            .into_iter()
            .enumerate()
            .map(|(o, m)| m.ok_or_else(|| CategoryError::MissingIdentity(objects[o].clone())))
            .collect::<Result<Vec<_>, _>>()?;

        let mut compose = HashMap::new();
        for rule in &rules {
            let g = resolve_mor(&rule.g)?;
            let f = resolve_mor(&rule.f)?;
            let c = resolve_mor(&rule.composite)?;
            if morphisms[f].cod != morphisms[g].dom {
                return Err(CategoryError::DomainMismatch(format!(
                    "`{}` after `{}` is not composable",
                    rule.g, rule.f
                )));
            }
            if compose.insert((g, f), c).is_some() {
                return Err(CategoryError::DuplicateComposite {
                    g: rule.g.clone(),
                    f: rule.f.clone(),
                });
            }
        }
        for f in 0..morphisms.len() {
            for g in 0..morphisms.len() {
                if morphisms[f].cod == morphisms[g].dom && !compose.contains_key(&(g, f)) {
                    return Err(CategoryError::MissingComposite {
                        g: morphisms[g].id.clone(),
                        f: morphisms[f].id.clone(),
                    });
                }
            }
        }

        let mut by_dom = vec![vec![]; objects.len()];
        for (i, m) in morphisms.iter().enumerate() {
            by_dom[m.dom].push(i);
        }
        Ok(FiniteCategory {
            objects,
            morphisms,
            identities,
            compose,
            by_dom,
        })
    }

    /// Build a category from explicit data and verify the axioms; errors if
    /// [`validate`](Self::validate) finds any violation.
    pub fn build_explicit(
        objects: Vec<String>,
        morphisms: Vec<MorphismDef>,
        identities: Vec<(String, String)>,
        rules: Vec<CompositionRule>,
    ) -> Result<Self, CategoryError> {
        let cat = FiniteCategory::from_parts(objects, morphisms, identities, rules)?;
        let report = cat.validate();
        if report.is_valid() {
            Ok(cat)
        } else {
            Err(CategoryError::Axioms(report))
        }
    }

    /// Check the category axioms on the composition table and list every
    /// violation: wrong composite endpoints, failed identity laws, and
    /// failed associativity.
    ///
    /// Associativity triples whose inner composite has corrupt endpoints
    /// (already reported separately) are skipped rather than double-counted.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = vec![];
        for (&(g, f), &c) in self.compose.iter() {
            let (gm, fm, cm) = (&self.morphisms[g], &self.morphisms[f], &self.morphisms[c]);
            if cm.dom != fm.dom || cm.cod != gm.cod {
                violations.push(Violation::CompositeEndpoints {
                    g: gm.id.clone(),
                    f: fm.id.clone(),
                    composite: cm.id.clone(),
                });
            }
        }
        for (f, fm) in self.morphisms.iter().enumerate() {
            let left = self.compose.get(&(self.identities[fm.cod], f));
            if left != Some(&f) {
                violations.push(Violation::LeftIdentity { f: fm.id.clone() });
            }
            let right = self.compose.get(&(f, self.identities[fm.dom]));
            if right != Some(&f) {
                violations.push(Violation::RightIdentity { f: fm.id.clone() });
            }
        }
        for f in 0..self.morphisms.len() {
            for &g in &self.by_dom[self.morphisms[f].cod] {
                let gf = self.compose[&(g, f)];
                for &h in &self.by_dom[self.morphisms[g].cod] {
                    let hg = self.compose[&(h, g)];
                    let outer_left = self.compose.get(&(h, gf)).copied();
                    let outer_right = self.compose.get(&(hg, f)).copied();
                    match (outer_left, outer_right) {
                        (Some(l), Some(r)) if l != r => {
                            violations.push(Violation::Associativity {
                                h: self.morphisms[h].id.clone(),
                                g: self.morphisms[g].id.clone(),
                                f: self.morphisms[f].id.clone(),
                            });
                        }
                        // A missing entry means an endpoint violation made
                        // the pair non-composable; that is already reported.
                        _ => {}
                    }
                }
            }
        }
        sort_violations(&mut violations);
        ValidationReport { violations }
    }

    /// The category generated by a finite poset: one morphism `x -> y` for
    /// each pair `x <= y`.
    ///
    /// `leq[i][j]` states `x_i <= x_j`; the relation must be reflexive,
    /// antisymmetric, and transitive.
    pub fn from_poset(leq: &[Vec<bool>]) -> Result<Self, CategoryError> {
        let n = leq.len();
        if n == 0 {
            return Err(CategoryError::Empty);
        }
        if leq.iter().any(|row| row.len() != n) {
            return Err(CategoryError::NotAPartialOrder(
                "relation matrix must be square".into(),
            ));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(CategoryError::NotAPartialOrder(format!(
                    "not reflexive at {i}"
                )));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(CategoryError::NotAPartialOrder(format!(
                        "not antisymmetric at ({i}, {j})"
                    )));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(CategoryError::NotAPartialOrder(format!(
                            "not transitive at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }

        let objects: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let mut morphisms = vec![];
        let mut identities = vec![];
        let mor_id = |i: usize, j: usize| {
            if i == j {
                format!("id_x{i}")
            } else {
                format!("le_{i}_{j}")
            }
        };
        for i in 0..n {
            for j in 0..n {
                if leq[i][j] {
                    morphisms.push(MorphismDef::new(&mor_id(i, j), &objects[i], &objects[j]));
                }
            }
            identities.push((objects[i].clone(), mor_id(i, i)));
        }
        let mut rules = vec![];
        for i in 0..n {
            for (j, row_j) in leq.iter().enumerate() {
                if !leq[i][j] {
                    continue;
                }
                for (k, &j_below_k) in row_j.iter().enumerate() {
                    if j_below_k {
                        rules.push(CompositionRule::new(
                            &mor_id(j, k),
                            &mor_id(i, j),
                            &mor_id(i, k),
                        ));
                    }
                }
            }
        }
        FiniteCategory::build_explicit(objects, morphisms, identities, rules)
    }

    /// The one-object category defined by a monoid multiplication table;
    /// `table[g][f]` is the element `g ∘ f`.
    ///
    /// The table must be square, closed, associative, and have a two-sided
    /// unit.
    pub fn from_monoid_table(table: &[Vec<usize>]) -> Result<Self, CategoryError> {
        let m = table.len();
        if m == 0 {
            return Err(CategoryError::BadTable("table must be nonempty".into()));
        }
        if table.iter().any(|row| row.len() != m) {
            return Err(CategoryError::BadTable("table must be square".into()));
        }
        if table.iter().flatten().any(|&x| x >= m) {
            return Err(CategoryError::BadTable(format!(
                "entries must be indices below {m}"
            )));
        }
        let unit = (0..m)
            .find(|&e| (0..m).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(CategoryError::NoUnit)?;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if table[a][table[b][c]] != table[table[a][b]][c] {
                        return Err(CategoryError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let obj = "star".to_string();
        let el_id = |x: usize| {
            if x == unit {
                "e".to_string()
            } else {
                format!("g{x}")
            }
        };
        let morphisms: Vec<MorphismDef> = (0..m)
            .map(|x| MorphismDef::new(&el_id(x), &obj, &obj))
            .collect();
        let rules: Vec<CompositionRule> = (0..m)
            .flat_map(|g| (0..m).map(move |f| (g, f)))
            .map(|(g, f)| CompositionRule::new(&el_id(g), &el_id(f), &el_id(table[g][f])))
            .collect();
        FiniteCategory::build_explicit(
            vec![obj.clone()],
            morphisms,
            vec![(obj, el_id(unit))],
            rules,
        )
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    /// Index of the identity morphism of object `obj`.
    pub fn identity_of(&self, obj: usize) -> usize {
        self.identities[obj]
    }

    /// `g ∘ f`, or `None` when the pair is not composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    /// The adjacency matrix: entry `(i, j)` counts the morphisms
    /// `x_i -> x_j`.
    pub fn adjacency_matrix<T: Scalar>(&self) -> Matrix<T> {
        let n = self.objects.len();
        let mut a: Matrix<T> = Matrix::zeros(n, n);
        for m in &self.morphisms {
            let t = a[(m.dom, m.cod)].clone() + T::one();
            a[(m.dom, m.cod)] = t;
        }
        a
    }

    /// Count composable chains by dynamic programming over (length, final
    /// morphism). Entry `m` of the result is the number of chains
    /// `x_0 -> x_1 -> ... -> x_m`; entry 0 is the number of objects.
    pub fn enumerate_chains(&self, max_m: u32) -> Vec<BigUint> {
        let mut out = vec![BigUint::from(self.objects.len())];
        if max_m == 0 {
            return out;
        }
        // ending[f] = number of chains of the current length whose last
        // morphism is f.
        let mut ending = vec![BigUint::one(); self.morphisms.len()];
        out.push(ending.iter().sum());
        for _ in 2..=max_m {
            let mut next = vec![BigUint::zero(); self.morphisms.len()];
            for (f, count) in ending.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                for &g in &self.by_dom[self.morphisms[f].cod] {
                    next[g] += count;
                }
            }
            ending = next;
            out.push(ending.iter().sum());
        }
        out
    }

    /// Count composable chains by literal enumeration of every tuple.
    ///
    /// Exponential in `max_m`; intended as an independent cross-check of
    /// [`enumerate_chains`](Self::enumerate_chains) for small lengths
    /// (`max_m <= 3` on the corpus sizes used here).
    pub fn enumerate_chains_literal(&self, max_m: u32) -> Vec<BigUint> {
        let mut out = vec![BigUint::from(self.objects.len())];
        for m in 1..=max_m {
            let mut count = BigUint::zero();
            let mut chain = vec![];
            self.count_chains_rec(m, &mut chain, &mut count);
            out.push(count);
        }
        out
    }

    fn count_chains_rec(&self, remaining: u32, chain: &mut Vec<usize>, count: &mut BigUint) {
        if remaining == 0 {
            *count += BigUint::one();
            return;
        }
        match chain.last() {
            None => {
                for f in 0..self.morphisms.len() {
                    chain.push(f);
                    self.count_chains_rec(remaining - 1, chain, count);
                    chain.pop();
                }
            }
            Some(&last) => {
                let cod = self.morphisms[last].cod;
                // Iterate over a snapshot to appease the borrow checker.
                for i in 0..self.by_dom[cod].len() {
                    let g = self.by_dom[cod][i];
                    chain.push(g);
                    self.count_chains_rec(remaining - 1, chain, count);
                    chain.pop();
                }
            }
        }
    }
}

/// Map ids to indices, rejecting duplicates.
fn unique_index(ids: &[String]) -> Result<HashMap<String, usize>, CategoryError> {
    let mut map = HashMap::new();
    for (i, id) in ids.iter().enumerate() {
        if map.insert(id.clone(), i).is_some() {
            return Err(CategoryError::DuplicateId(id.clone()));
        }
    }
    Ok(map)
}

/// Deterministic ordering for violation lists.
fn sort_violations(violations: &mut [Violation]) {
    violations.sort_by_key(|v| match v {
        Violation::CompositeEndpoints { g, f, .. } => (0, g.clone(), f.clone(), String::new()),
        Violation::LeftIdentity { f } => (1, f.clone(), String::new(), String::new()),
        Violation::RightIdentity { f } => (2, f.clone(), String::new(), String::new()),
        Violation::Associativity { h, g, f } => (3, h.clone(), g.clone(), f.clone()),
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    /// The category with two objects and one non-identity morphism
    /// `f: a -> b`.
    pub(crate) fn arrow_category() -> FiniteCategory {
        FiniteCategory::build_explicit(
            vec!["a".into(), "b".into()],
            vec![
                MorphismDef::new("ida", "a", "a"),
                MorphismDef::new("idb", "b", "b"),
                MorphismDef::new("f", "a", "b"),
            ],
            vec![("a".into(), "ida".into()), ("b".into(), "idb".into())],
            vec![
                CompositionRule::new("ida", "ida", "ida"),
                CompositionRule::new("idb", "idb", "idb"),
                CompositionRule::new("f", "ida", "f"),
                CompositionRule::new("idb", "f", "f"),
            ],
        )
        .unwrap()
    }

    fn counts(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn arrow_category_is_valid() {
        let cat = arrow_category();
        assert!(cat.validate().is_valid());
        assert_eq!(cat.num_objects(), 2);
        assert_eq!(cat.num_morphisms(), 3);
        assert_eq!(cat.compose(2, 0), Some(2)); // f ∘ ida = f
        assert_eq!(cat.compose(0, 2), None); // ida ∘ f not composable
    }

    #[test]
    fn arrow_adjacency_matrix() {
        let a: Matrix<BigRational> = arrow_category().adjacency_matrix();
        assert_eq!(a, Matrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]));
    }

    #[test]
    fn arrow_chain_counts_match_hand_enumeration() {
        let cat = arrow_category();
        // Chains of length m: m+2 of them (hand count: identities chains
        // plus the single slot for f).
        assert_eq!(counts(&cat.enumerate_chains(5)), vec![2, 3, 4, 5, 6, 7]);
        assert_eq!(counts(&cat.enumerate_chains_literal(3)), vec![2, 3, 4, 5]);
    }

    #[test]
    fn missing_composite_is_rejected() {
        let err = FiniteCategory::build_explicit(
            vec!["a".into(), "b".into()],
            vec![
                MorphismDef::new("ida", "a", "a"),
                MorphismDef::new("idb", "b", "b"),
                MorphismDef::new("f", "a", "b"),
            ],
            vec![("a".into(), "ida".into()), ("b".into(), "idb".into())],
            vec![
                CompositionRule::new("ida", "ida", "ida"),
                CompositionRule::new("idb", "idb", "idb"),
                CompositionRule::new("f", "ida", "f"),
                // idb ∘ f is missing
            ],
        )
        .unwrap_err();
        assert_eq!(
            err,
            CategoryError::MissingComposite {
                g: "idb".into(),
                f: "f".into()
            }
        );
    }

    #[test]
    fn bad_composite_is_reported_by_validate() {
        // Same shape as the arrow category but with f ∘ ida := ida, which
        // breaks both the endpoint condition and the identity law.
        let cat = FiniteCategory::from_parts(
            vec!["a".into(), "b".into()],
            vec![
                MorphismDef::new("ida", "a", "a"),
                MorphismDef::new("idb", "b", "b"),
                MorphismDef::new("f", "a", "b"),
            ],
            vec![("a".into(), "ida".into()), ("b".into(), "idb".into())],
            vec![
                CompositionRule::new("ida", "ida", "ida"),
                CompositionRule::new("idb", "idb", "idb"),
                CompositionRule::new("f", "ida", "ida"),
                CompositionRule::new("idb", "f", "f"),
            ],
        )
        .unwrap();
        let report = cat.validate();
        assert!(!report.is_valid());
        assert!(report.violations.contains(&Violation::CompositeEndpoints {
            g: "f".into(),
            f: "ida".into(),
            composite: "ida".into()
        }));
        assert!(report
            .violations
            .contains(&Violation::RightIdentity { f: "f".into() }));
    }

    #[test]
    fn duplicate_and_unknown_ids_are_rejected() {
        let err =
            FiniteCategory::build_explicit(vec!["a".into(), "a".into()], vec![], vec![], vec![])
                .unwrap_err();
        assert_eq!(err, CategoryError::DuplicateId("a".into()));

        let err = FiniteCategory::build_explicit(
            vec!["a".into()],
            vec![MorphismDef::new("ida", "a", "zzz")],
            vec![("a".into(), "ida".into())],
            vec![],
        )
        .unwrap_err();
        assert_eq!(err, CategoryError::UnknownId("zzz".into()));
    }

    #[test]
    fn empty_category_is_rejected() {
        let err = FiniteCategory::build_explicit(vec![], vec![], vec![], vec![]).unwrap_err();
        assert_eq!(err, CategoryError::Empty);
    }

    #[test]
    fn chain_poset_category() {
        // 0 <= 1 <= 2
        let leq = vec![
            vec![true, true, true],
            vec![false, true, true],
            vec![false, false, true],
        ];
        let cat = FiniteCategory::from_poset(&leq).unwrap();
        assert_eq!(cat.num_objects(), 3);
        assert_eq!(cat.num_morphisms(), 6);
        let a: Matrix<BigRational> = cat.adjacency_matrix();
        assert_eq!(
            a,
            Matrix::from_i64_rows(&[vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]])
        );
        // Hand values: sum of entries of A^2 is 10, of A^3 is 15.
        assert_eq!(counts(&cat.enumerate_chains(3)), vec![3, 6, 10, 15]);
        assert_eq!(counts(&cat.enumerate_chains_literal(3)), vec![3, 6, 10, 15]);
    }

    #[test]
    fn non_poset_relations_are_rejected() {
        let cyclic = vec![vec![true, true], vec![true, true]];
        assert!(matches!(
            FiniteCategory::from_poset(&cyclic),
            Err(CategoryError::NotAPartialOrder(_))
        ));
        let irreflexive = vec![vec![false]];
        assert!(matches!(
            FiniteCategory::from_poset(&irreflexive),
            Err(CategoryError::NotAPartialOrder(_))
        ));
        let intransitive = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(matches!(
            FiniteCategory::from_poset(&intransitive),
            Err(CategoryError::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn cyclic_group_delooping() {
        let z2 = FiniteCategory::from_monoid_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.num_objects(), 1);
        assert_eq!(z2.num_morphisms(), 2);
        let a: Matrix<BigRational> = z2.adjacency_matrix();
        assert_eq!(a, Matrix::from_i64_rows(&[vec![2]]));
        assert_eq!(counts(&z2.enumerate_chains(3)), vec![1, 2, 4, 8]);
        assert_eq!(counts(&z2.enumerate_chains_literal(3)), vec![1, 2, 4, 8]);
    }

    #[test]
    fn monoid_table_without_unit_is_rejected() {
        let err = FiniteCategory::from_monoid_table(&[vec![1, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, CategoryError::NoUnit);
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // Unit 0; fails at (2 * 2) * 2 != 2 * (2 * 2).
        let table = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 1]];
        let err = FiniteCategory::from_monoid_table(&table).unwrap_err();
        assert!(matches!(err, CategoryError::NotAssociative { .. }));
    }

    #[test]
    fn monoid_table_with_out_of_range_entry_is_rejected() {
        let err = FiniteCategory::from_monoid_table(&[vec![0, 1], vec![1, 5]]).unwrap_err();
        assert!(matches!(err, CategoryError::BadTable(_)));
    }
}
