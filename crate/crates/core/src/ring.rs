//! Polynomial ring context: an ordered variable table with per-variable weights
//! and the coefficient field.
//!
//! Tables are immutable once built and shared behind `Arc`. Two tables are equal
//! when their names, weights, and field coincide, so structurally identical rings
//! built independently interoperate.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use std::collections::HashMap;
use std::sync::Arc;

/// Shared handle to a variable table.
pub type Ring = Arc<VarTable>;

/// Ordered variable names with positive integer weights and the coefficient field.
///
/// The deformation variable `s` is an ordinary variable here; constructors in
/// `schemes` give it weight 2 so that commuting-pair relations are homogeneous.
#[derive(Debug)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u64>,
    field: FieldSpec,
    index: HashMap<String, usize>,
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.weights == other.weights && self.field == other.field
    }
}
impl Eq for VarTable {}

impl std::hash::Hash for VarTable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
        self.weights.hash(state);
        self.field.hash(state);
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarTable {
    /// Build a table with all weights 1.
    pub fn new(names: Vec<String>, field: FieldSpec) -> Result<Ring> {
        let weights = vec![1; names.len()];
        VarTable::with_weights(names, weights, field)
    }

    /// Build a table with explicit weights (all must be >= 1).
    pub fn with_weights(names: Vec<String>, weights: Vec<u64>, field: FieldSpec) -> Result<Ring> {
        if names.len() != weights.len() {
            return Err(Error::RingMismatch(format!(
                "{} variable names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::RingMismatch("weights must be positive".into()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::RingMismatch(format!("invalid variable name `{n}`")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::RingMismatch(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(VarTable {
            names,
            weights,
            field,
            index,
        }))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Whether every weight is 1 (emission then omits the weights header).
    pub fn unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// A fresh variable name not present in the table: `base`, then `base0`, `base1`, ...
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        for k in 0.. {
            let cand = format!("{base}{k}");
            if self.index_of(&cand).is_none() {
                return cand;
            }
        }
        unreachable!()
    }

    /// New ring with extra variables appended (weight 1 each).
    pub fn extended(&self, extra: &[&str]) -> Result<Ring> {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        for e in extra {
            names.push((*e).to_string());
            weights.push(1);
        }
        VarTable::with_weights(names, weights, self.field)
    }

    /// New ring with the listed variable indices removed. Also returns, for each
    /// old index, the new index (`None` for removed variables).
    pub fn without(&self, drop: &[usize]) -> Result<(Ring, Vec<Option<usize>>)> {
        let mut keep_map = vec![None; self.arity()];
        let mut names = Vec::new();
        let mut weights = Vec::new();
        let mut next = 0usize;
        for i in 0..self.arity() {
            if drop.contains(&i) {
                continue;
            }
            keep_map[i] = Some(next);
            names.push(self.names[i].clone());
            weights.push(self.weights[i]);
            next += 1;
        }
        let ring = VarTable::with_weights(names, weights, self.field)?;
        Ok((ring, keep_map))
    }

    /// Same variables, different field (used to move integer-coefficient ideals
    /// between rat and fp runs).
    pub fn with_field(&self, field: FieldSpec) -> Ring {
        Arc::new(VarTable {
            names: self.names.clone(),
            weights: self.weights.clone(),
            field,
            index: self.index.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(names: &[&str]) -> Ring {
        VarTable::new(
            names.iter().map(|s| s.to_string()).collect(),
            FieldSpec::Rat,
        )
        .unwrap()
    }

    #[test]
    fn builds_and_indexes() {
        let r = table(&["x", "y", "z"]);
        assert_eq!(r.arity(), 3);
        assert_eq!(r.index_of("y"), Some(1));
        assert_eq!(r.index_of("w"), None);
    }

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(VarTable::new(vec!["x".into(), "x".into()], FieldSpec::Rat).is_err());
        assert!(VarTable::new(vec!["1x".into()], FieldSpec::Rat).is_err());
        assert!(VarTable::new(vec!["x y".into()], FieldSpec::Rat).is_err());
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = table(&["t", "t0"]);
        assert_eq!(r.fresh_name("t"), "t1");
        assert_eq!(r.fresh_name("u"), "u");
    }

    #[test]
    fn without_maps_indices() {
        let r = table(&["x", "y", "z"]);
        let (small, map) = r.without(&[1]).unwrap();
        assert_eq!(small.names(), &["x".to_string(), "z".to_string()]);
        assert_eq!(map, vec![Some(0), None, Some(1)]);
    }
}
