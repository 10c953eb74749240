//! Isomorph-free enumeration and the exhaustive `value(n)` search.
//!
//! Up to seven vertices every labelled graph is canonicalised and the keys
//! are deduplicated. From eight vertices on, graphs are grown from the
//! canonical representatives on `n - 1` vertices by adding a vertex with
//! every possible neighbourhood; an extension is kept only if the new vertex
//! is a canonical deletion, i.e. deleting the vertex the canonical labelling
//! puts last gives back the parent's class. Each class then has a single
//! parent, and duplicates among one parent's children are removed locally.
//!
//! Work is split over rayon's current pool. Results never depend on the
//! number of threads.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::canon::{self, canon, delete_vertex, key_bits, rows_from_key};
use crate::graph::Graph;
use crate::solver::{has_trail_with_k, t_value};

pub const MAX_ENUM_ORDER: usize = 9;
pub const MAX_LABELED_ORDER: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("n = {n} is outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("value table must cover n = 2..={0} without gaps")]
    Gap(usize),
    #[error("value table is not non-decreasing at n = {0}")]
    NotMonotone(usize),
    #[error("value table is empty")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Canonicalise all `2^(n(n-1)/2)` labelled graphs.
    Labeled,
    /// Canonical augmentation from the graphs on `n - 1` vertices.
    Augment,
}

impl Strategy {
    pub fn for_order(n: usize) -> Strategy {
        if n <= MAX_LABELED_ORDER {
            Strategy::Labeled
        } else {
            Strategy::Augment
        }
    }
}

fn check_range(n: usize, min: usize, max: usize) -> Result<(), EnumError> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(EnumError::OutOfRange { n, min, max })
    }
}

/// Canonical keys of all graphs on `n` vertices, one per isomorphism class,
/// in ascending order.
pub fn canonical_keys(n: usize) -> Result<Vec<u64>, EnumError> {
    canonical_keys_with(n, Strategy::for_order(n))
}

pub fn canonical_keys_with(n: usize, strategy: Strategy) -> Result<Vec<u64>, EnumError> {
    check_range(n, 1, MAX_ENUM_ORDER)?;
    if n == 1 {
        return Ok(vec![0]);
    }
    let keys = match strategy {
        Strategy::Labeled => {
            check_range(n, 1, MAX_LABELED_ORDER)?;
            labeled(n)
        }
        Strategy::Augment => augment(n, &canonical_keys(n - 1)?),
    };
    Ok(keys)
}

fn labeled(n: usize) -> Vec<u64> {
    let total = 1u64 << key_bits(n);
    let mut keys: Vec<u64> = (0..total)
        .into_par_iter()
        .map(|k| canon(&rows_from_key(n, k), n).key)
        .collect();
    keys.par_sort_unstable();
    keys.dedup();
    keys
}

fn augment(n: usize, parents: &[u64]) -> Vec<u64> {
    let m = n - 1;
    let mut keys: Vec<u64> = parents
        .par_iter()
        .flat_map_iter(|&parent| {
            let base = rows_from_key(m, parent);
            let mut children = Vec::new();
            for nbhd in 0u16..(1 << m) {
                let mut rows = base;
                rows[m] = nbhd;
                for (v, row) in rows.iter_mut().enumerate().take(m) {
                    *row |= (nbhd >> v & 1) << m;
                }
                let label = canon(&rows, n);
                let last = label.lab[m] as usize;
                if last == m || canon(&delete_vertex(&rows, n, last), m).key == parent {
                    children.push(label.key);
                }
            }
            children.sort_unstable();
            children.dedup();
            children
        })
        .collect();
    keys.par_sort_unstable();
    let before = keys.len();
    keys.dedup();
    debug_assert_eq!(before, keys.len(), "a class was generated from two parents");
    keys
}

/// Canonical representatives of all graphs on `n` vertices (`1 <= n <= 9`).
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumError> {
    Ok(canonical_keys(n)?
        .into_iter()
        .map(|k| canon::graph_from_key(n, k))
        .collect())
}

/// Minimum of `t(G)` over all graphs on `n` vertices.
pub fn value(n: usize) -> Result<usize, EnumError> {
    check_range(n, 1, MAX_ENUM_ORDER)?;
    Ok(value_over(n, &canonical_keys(n)?))
}

/// Minimum of `t(G)` over the graphs with the given canonical keys.
///
/// A graph is only solved exactly when neither side has a trail as long as
/// the running minimum; the minimum is shared between workers.
pub fn value_over(n: usize, keys: &[u64]) -> usize {
    let Some(&first) = keys.first() else {
        return usize::MAX;
    };
    let best = AtomicUsize::new(t_value(&canon::graph_from_key(n, first)));
    keys.par_iter().for_each(|&key| {
        let bound = best.load(Ordering::Relaxed);
        let g = canon::graph_from_key(n, key);
        if has_trail_with_k(&g, bound).is_some() || has_trail_with_k(&g.complement(), bound).is_some() {
            return;
        }
        best.fetch_min(t_value(&g), Ordering::Relaxed);
    });
    best.into_inner()
}

/// `value(n)` per `n` and the Ramsey numbers they determine.
///
/// `R(T_k, T_k) = n` exactly when `value(n-1) < k <= value(n)`, with
/// `value(1) = 1`. Values of `k` above `value(max_n)` are unresolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyTable {
    max_n: usize,
    values: BTreeMap<usize, usize>,
    ramsey: BTreeMap<usize, usize>,
}

pub const TABLE_SCHEMA_VERSION: u32 = 1;

impl RamseyTable {
    /// Builds the table from `value(n)` for every `n` in `2..=max_n`.
    pub fn from_values(values: BTreeMap<usize, usize>) -> Result<Self, TableError> {
        let max_n = *values.keys().next_back().ok_or(TableError::Empty)?;
        for n in 2..=max_n {
            if !values.contains_key(&n) {
                return Err(TableError::Gap(max_n));
            }
        }
        if values.keys().any(|&n| n < 2) {
            return Err(TableError::Gap(max_n));
        }
        let mut ramsey = BTreeMap::new();
        let mut prev = 1;
        for (&n, &v) in &values {
            if v < prev {
                return Err(TableError::NotMonotone(n));
            }
            for k in (prev + 1).max(2)..=v {
                ramsey.insert(k, n);
            }
            prev = v;
        }
        Ok(RamseyTable { max_n, values, ramsey })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn values(&self) -> &BTreeMap<usize, usize> {
        &self.values
    }

    pub fn ramsey(&self) -> &BTreeMap<usize, usize> {
        &self.ramsey
    }

    /// `R(T_k, T_k)` if this table resolves it.
    pub fn get(&self, k: usize) -> Option<usize> {
        self.ramsey.get(&k).copied()
    }

    /// Largest `k` the table resolves, i.e. `value(max_n)`.
    pub fn resolved_up_to(&self) -> usize {
        self.values[&self.max_n]
    }
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    schema_version: u32,
    max_n: usize,
    value: BTreeMap<usize, usize>,
    ramsey: BTreeMap<usize, usize>,
}

impl Serialize for RamseyTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TableDoc {
            schema_version: TABLE_SCHEMA_VERSION,
            max_n: self.max_n,
            value: self.values.clone(),
            ramsey: self.ramsey.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RamseyTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let doc = TableDoc::deserialize(deserializer)?;
        if doc.schema_version != TABLE_SCHEMA_VERSION {
            return Err(D::Error::custom(format!("unsupported schema version {}", doc.schema_version)));
        }
        let table = RamseyTable::from_values(doc.value).map_err(D::Error::custom)?;
        if table.max_n != doc.max_n || table.ramsey != doc.ramsey {
            return Err(D::Error::custom("ramsey row does not follow from the value row"));
        }
        Ok(table)
    }
}

/// Computes `value(n)` for `2 <= n <= max_n` and derives the Ramsey row.
pub fn ramsey_table(max_n: usize) -> Result<RamseyTable, EnumError> {
    check_range(max_n, 2, MAX_ENUM_ORDER)?;
    let mut values = BTreeMap::new();
    for n in 2..=max_n {
        values.insert(n, value(n)?);
    }
    Ok(RamseyTable::from_values(values).expect("value(n) is non-decreasing"))
}
