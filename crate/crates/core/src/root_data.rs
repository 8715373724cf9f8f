//! Cartan data, weights in the fundamental-weight basis, and dominance order.
//!
//! Nodes of the Dynkin diagram carry user-facing integer labels. Internally
//! every node is addressed by its position in the index set, so a node index
//! `i` reads the coordinate `coords[i]` of a weight directly.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Position of a node inside [`CartanData::index_set`].
pub type Node = usize;

/// A weight `sum_i coords[i] * omega_i` in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

/// A symmetrizable generalized Cartan matrix together with its node labels.
///
/// `matrix[i][j] = <alpha_i^vee, alpha_j>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    index_set: Vec<u32>,
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<Ratio<i64>>,
    positions: HashMap<u32, Node>,
}

impl CartanData {
    pub fn new(index_set: Vec<u32>, matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = index_set.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty index set".into()));
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidCartan(format!("matrix must be {n}x{n}")));
        }
        let mut positions = HashMap::new();
        for (k, &label) in index_set.iter().enumerate() {
            if positions.insert(label, k).is_some() {
                return Err(Error::InvalidCartan(format!("duplicate node label {label}")));
            }
        }
        for i in 0..n {
            if matrix[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry a_{i}{i} is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if matrix[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({i},{j}) is positive"
                    )));
                }
                if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) must vanish together"
                    )));
                }
            }
        }
        let symmetrizer = find_symmetrizer(&matrix)?;
        Ok(CartanData {
            index_set,
            matrix,
            symmetrizer,
            positions,
        })
    }

    /// Cartan matrix of a named finite type with nodes labelled `1..=rank`
    /// (Bourbaki numbering).
    pub fn finite_type(kind: &str, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        let mut m = vec![vec![0i64; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |m: &mut Vec<Vec<i64>>, upto: usize| {
            for i in 0..upto.saturating_sub(1) {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        };
        match kind.to_ascii_uppercase().as_str() {
            "A" => chain(&mut m, rank),
            "B" => {
                if rank < 2 {
                    return Err(Error::InvalidCartan("type B needs rank >= 2".into()));
                }
                chain(&mut m, rank);
                m[rank - 1][rank - 2] = -2;
            }
            "C" => {
                if rank < 2 {
                    return Err(Error::InvalidCartan("type C needs rank >= 2".into()));
                }
                chain(&mut m, rank);
                m[rank - 2][rank - 1] = -2;
            }
            "D" => {
                if rank < 3 {
                    return Err(Error::InvalidCartan("type D needs rank >= 3".into()));
                }
                chain(&mut m, rank - 1);
                m[rank - 3][rank - 1] = -1;
                m[rank - 1][rank - 3] = -1;
            }
            "G" => {
                if rank != 2 {
                    return Err(Error::InvalidCartan("type G has rank 2".into()));
                }
                m[0][1] = -3;
                m[1][0] = -1;
            }
            other => return Err(Error::InvalidCartan(format!("unsupported type {other}"))),
        }
        CartanData::new((1..=rank as u32).collect(), m)
    }

    pub fn rank(&self) -> usize {
        self.index_set.len()
    }

    pub fn index_set(&self) -> &[u32] {
        &self.index_set
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, i: Node, j: Node) -> i64 {
        self.matrix[i][j]
    }

    /// Diagonal entries of a symmetrizer `D` with `DA` symmetric.
    pub fn symmetrizer(&self) -> &[Ratio<i64>] {
        &self.symmetrizer
    }

    pub fn label(&self, i: Node) -> u32 {
        self.index_set[i]
    }

    pub fn node(&self, label: u32) -> Result<Node> {
        self.positions.get(&label).copied().ok_or(Error::UnknownNode(label))
    }

    pub fn nodes(&self) -> std::ops::Range<Node> {
        0..self.rank()
    }

    pub fn labels_of(&self, word: &[Node]) -> Vec<u32> {
        word.iter().map(|&i| self.index_set[i]).collect()
    }

    pub fn nodes_of(&self, labels: &[u32]) -> Result<Vec<Node>> {
        labels.iter().map(|&l| self.node(l)).collect()
    }

    pub fn weight(&self, coords: Vec<i64>) -> Result<Weight> {
        if coords.len() != self.rank() {
            return Err(Error::WeightRank {
                expected: self.rank(),
                found: coords.len(),
            });
        }
        Ok(Weight(coords))
    }

    /// `<alpha_i^vee, lambda>` for a node label.
    pub fn pairing(&self, label: u32, lambda: &Weight) -> Result<i64> {
        let i = self.node(label)?;
        Ok(lambda.0[i])
    }

    /// Simple root `alpha_j`: column `j` of the Cartan matrix.
    pub fn simple_root(&self, j: Node) -> Weight {
        Weight(self.matrix.iter().map(|row| row[j]).collect())
    }

    /// `s_i(mu) = mu - <alpha_i^vee, mu> alpha_i`, in place.
    pub fn reflect_in_place(&self, i: Node, mu: &mut Weight) {
        let c = mu.0[i];
        if c != 0 {
            for (j, row) in self.matrix.iter().enumerate() {
                mu.0[j] -= c * row[i];
            }
        }
    }

    pub fn reflect(&self, i: Node, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        self.reflect_in_place(i, &mut out);
        out
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.is_dominant()
    }

    /// Expresses `diff` as a rational combination of simple roots when the
    /// Cartan matrix is nonsingular; `None` for singular matrices.
    pub fn root_coordinates(&self, diff: &Weight) -> Option<Vec<Ratio<i64>>> {
        match solve(&self.matrix, diff.coords()) {
            Solution::Unique(x) => Some(x),
            _ => None,
        }
    }

    /// `mu <= lambda` in dominance order: `lambda - mu` is a nonnegative
    /// integer combination of simple roots.
    ///
    /// Singular matrices fall back to a bounded search over combinations of
    /// height at most `height_cap`.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight, height_cap: u64) -> Result<bool> {
        let diff = lambda.sub(mu);
        match solve(&self.matrix, diff.coords()) {
            Solution::Inconsistent => Ok(false),
            Solution::Unique(x) => Ok(x.iter().all(|q| q.is_integer() && *q >= Ratio::from_integer(0))),
            Solution::Many => {
                for h in 0..=height_cap {
                    if self.combination_of_height(&diff, h) {
                        return Ok(true);
                    }
                }
                Err(Error::HeightCap(height_cap))
            }
        }
    }

    fn combination_of_height(&self, target: &Weight, height: u64) -> bool {
        let n = self.rank();
        let mut x = vec![0i64; n];
        fn rec(c: &CartanData, k: usize, left: i64, x: &mut Vec<i64>, target: &Weight) -> bool {
            let n = x.len();
            if k == n - 1 {
                x[k] = left;
                let hit = (0..n).all(|i| (0..n).map(|j| c.matrix[i][j] * x[j]).sum::<i64>() == target.0[i]);
                x[k] = 0;
                return hit;
            }
            for v in 0..=left {
                x[k] = v;
                if rec(c, k + 1, left - v, x, target) {
                    x[k] = 0;
                    return true;
                }
            }
            x[k] = 0;
            false
        }
        rec(self, 0, height as i64, &mut x, target)
    }
}

enum Solution {
    Unique(Vec<Ratio<i64>>),
    Many,
    Inconsistent,
}

/// Gaussian elimination over the rationals for `A x = b`.
fn solve(a: &[Vec<i64>], b: &[i64]) -> Solution {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter()
                .map(|&v| Ratio::from_integer(v))
                .chain(std::iter::once(Ratio::from_integer(rhs)))
                .collect()
        })
        .collect();
    let zero = Ratio::from_integer(0);
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        let Some(p) = (pivot_row..n).find(|&r| m[r][col] != zero) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row].iter_mut() {
            *v *= inv;
        }
        for r in 0..n {
            if r != pivot_row && m[r][col] != zero {
                let factor = m[r][col];
                for c in 0..=n {
                    let delta = factor * m[pivot_row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| row[n] != zero) {
        return Solution::Inconsistent;
    }
    if pivots.len() < n {
        return Solution::Many;
    }
    Solution::Unique((0..n).map(|r| m[r][n]).collect())
}

fn find_symmetrizer(a: &[Vec<i64>]) -> Result<Vec<Ratio<i64>>> {
    // d_i a_ij = d_j a_ji, propagated along the Dynkin diagram.
    let n = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = di * Ratio::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap()).collect())
}
