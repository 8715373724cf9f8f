//! Semistandard tableaux with crystal operators given by the signature rule.
//!
//! Letters are read in far-eastern order (columns right to left, each column
//! top to bottom). For `f_i` every letter `i` is marked `+` and every `i+1`
//! is marked `-`; adjacent `+-` pairs cancel until the survivors read
//! `- ... - + ... +`. `f_i` raises the leftmost surviving `+`, `e_i` lowers
//! the rightmost surviving `-`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::crystal::{CrystalGraph, Model};
use crate::error::{Error, Result};
use crate::root_data::{CartanData, Weight};

type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

/// Checks that `parts` is a partition with at most `n` nonzero parts and
/// returns it with trailing zeros removed.
pub fn normalize_partition(parts: &[u32], n: usize) -> Result<Vec<u32>> {
    if parts.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
    }
    let trimmed: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
    if trimmed.len() > n {
        return Err(Error::InvalidPartition(format!("{parts:?} has more than {n} parts")));
    }
    Ok(trimmed)
}

impl Tableau {
    /// Rows must be nonempty and form a semistandard filling with entries in `1..=n`.
    pub fn new(rows: Vec<Vec<u32>>, n: u32) -> Result<Self> {
        let t = Tableau { rows };
        if !t.is_semistandard(n) {
            return Err(Error::InvalidPartition(format!(
                "{:?} is not a semistandard tableau",
                t.rows
            )));
        }
        Ok(t)
    }

    /// Row `k` filled with `k`.
    pub fn superstandard(shape: &[u32]) -> Self {
        Tableau {
            rows: shape
                .iter()
                .enumerate()
                .map(|(k, &len)| vec![k as u32 + 1; len as usize])
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn is_semistandard(&self, n: u32) -> bool {
        let shape_ok =
            self.rows.iter().all(|r| !r.is_empty()) && self.rows.windows(2).all(|p| p[0].len() >= p[1].len());
        let entries_ok = self.rows.iter().flatten().all(|&x| (1..=n).contains(&x));
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|p| p[1].iter().zip(&p[0]).all(|(lo, hi)| hi < lo));
        shape_ok && entries_ok && rows_ok && cols_ok
    }

    /// Multiplicity of each letter `1..=n`.
    pub fn content(&self, n: usize) -> Vec<i64> {
        let mut m = vec![0i64; n];
        for &x in self.rows.iter().flatten() {
            m[x as usize - 1] += 1;
        }
        m
    }

    /// `(m_1 - m_2, ..., m_{n-1} - m_n)`.
    pub fn weight(&self, n: usize) -> Weight {
        let m = self.content(n);
        Weight::new(m.windows(2).map(|p| p[0] - p[1]).collect())
    }

    /// Cells `(row, col)` in far-eastern reading order.
    fn reading_positions(&self) -> Vec<(usize, usize)> {
        let width = self.rows.first().map_or(0, |r| r.len());
        let mut out = Vec::new();
        for col in (0..width).rev() {
            for (r, row) in self.rows.iter().enumerate() {
                if col < row.len() {
                    out.push((r, col));
                }
            }
        }
        out
    }

    /// Surviving `-` cells and surviving `+` cells after cancellation, both
    /// in reading order.
    fn signature(&self, letter: u32) -> (Vec<Cell>, Vec<Cell>) {
        let mut minus = Vec::new();
        let mut plus: Vec<Cell> = Vec::new();
        for (r, c) in self.reading_positions() {
            let x = self.rows[r][c];
            if x == letter {
                plus.push((r, c));
            } else if x == letter + 1 {
                // a `-` cancels the nearest unmatched `+` on its left
                if plus.pop().is_none() {
                    minus.push((r, c));
                }
            }
        }
        (minus, plus)
    }

    /// `f_i` for `i` in `1..n` (letters, not node indices).
    pub fn f(&self, i: u32) -> Option<Tableau> {
        let (_, plus) = self.signature(i);
        let &(r, c) = plus.first()?;
        let mut t = self.clone();
        t.rows[r][c] = i + 1;
        Some(t)
    }

    pub fn e(&self, i: u32) -> Option<Tableau> {
        let (minus, _) = self.signature(i);
        let &(r, c) = minus.last()?;
        let mut t = self.clone();
        t.rows[r][c] = i;
        Some(t)
    }

    pub fn epsilon(&self, i: u32) -> usize {
        self.signature(i).0.len()
    }

    pub fn phi(&self, i: u32) -> usize {
        self.signature(i).1.len()
    }

    /// Canonical id: the JSON row list.
    pub fn id(&self) -> String {
        serde_json::to_string(&self.rows).expect("rows serialize")
    }
}

/// `B(lambda)` for `sl_n` as the crystal of semistandard tableaux of shape
/// `shape` with entries at most `n`.
pub fn build_tableau_crystal(n: usize, shape: &[u32]) -> Result<CrystalGraph> {
    if n < 2 {
        return Err(Error::InvalidPartition("need n >= 2".into()));
    }
    let shape = normalize_partition(shape, n)?;
    let cartan = Arc::new(CartanData::finite_type("A", n - 1)?);

    let start = Tableau::superstandard(&shape);
    let mut index: HashMap<Tableau, usize> = HashMap::new();
    let mut order = vec![start.clone()];
    index.insert(start, 0);
    let mut edges = Vec::new();
    let mut k = 0;
    while k < order.len() {
        let t = order[k].clone();
        for i in 0..n - 1 {
            if let Some(next) = t.f(i as u32 + 1) {
                let dst = *index.entry(next.clone()).or_insert_with(|| {
                    order.push(next);
                    order.len() - 1
                });
                edges.push((k, i, dst));
            }
        }
        k += 1;
    }

    let ids = order.iter().map(Tableau::id).collect();
    let weights = order.iter().map(|t| t.weight(n)).collect();
    let model = Model::Tableau { n, shape };
    CrystalGraph::from_parts(cartan, ids, weights, &edges, Some(model))
}
