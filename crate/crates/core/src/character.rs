//! Formal characters of subsets as weight multisets.

use std::collections::BTreeMap;

use crate::crystal::CrystalGraph;
use crate::demazure::atomic_decomposition;
use crate::error::{Error, Result};
use crate::root_data::Weight;
use crate::subset::SubsetHandle;
use crate::weyl::{LowerOrderIdeal, WeylElement};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, u64>,
    /// Number of boxes when the source is a type-A tableau crystal.
    boxes: Option<usize>,
}

impl FormalCharacter {
    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, u64)>, boxes: Option<usize>) -> Self {
        let mut c = FormalCharacter {
            terms: BTreeMap::new(),
            boxes,
        };
        for (w, m) in terms {
            c.add_term(w, m);
        }
        c
    }

    fn add_term(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
    }

    /// Terms in lexicographic order of weight coordinates.
    pub fn terms(&self) -> &BTreeMap<Weight, u64> {
        &self.terms
    }

    pub fn boxes(&self) -> Option<usize> {
        self.boxes
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn sum(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, &m) in &other.terms {
            out.add_term(w.clone(), m);
        }
        out.boxes = self.boxes.or(other.boxes);
        out
    }
}

pub fn character(x: &SubsetHandle<'_>) -> FormalCharacter {
    let g = x.graph();
    let boxes = g.model().map(|m| m.boxes());
    FormalCharacter::from_terms(x.iter().map(|b| (g.wt(b).clone(), 1)), boxes)
}

/// Exact multiset equality of the weight terms.
pub fn char_equal(a: &FormalCharacter, b: &FormalCharacter) -> bool {
    a.terms == b.terms
}

/// Renders a type-A character as a polynomial in `x1..xn`, monomials in
/// decreasing lexicographic order of exponent vectors.
pub fn monomial_string(a: &FormalCharacter, n: usize) -> Result<String> {
    let boxes = a.boxes.ok_or(Error::NotTypeA)? as i64;
    let mut monomials: Vec<(Vec<i64>, u64)> = Vec::new();
    for (w, &mult) in &a.terms {
        if w.rank() + 1 != n {
            return Err(Error::NotTypeA);
        }
        // m_k - m_{k+1} = wt_k and sum m_k = boxes
        let weighted: i64 = w.coords().iter().enumerate().map(|(j, c)| (j as i64 + 1) * c).sum();
        let rest = boxes - weighted;
        if rest % n as i64 != 0 || rest < 0 {
            return Err(Error::NotTypeA);
        }
        let mut m = vec![0i64; n];
        m[n - 1] = rest / n as i64;
        for k in (0..n - 1).rev() {
            m[k] = m[k + 1] + w.coords()[k];
        }
        if m.iter().any(|&e| e < 0) {
            return Err(Error::NotTypeA);
        }
        monomials.push((m, mult));
    }
    monomials.sort_by(|a, b| b.0.cmp(&a.0));
    if monomials.is_empty() {
        return Ok("0".into());
    }
    let parts: Vec<String> = monomials
        .iter()
        .map(|(exps, mult)| {
            let mut factors: Vec<String> = Vec::new();
            if *mult != 1 {
                factors.push(mult.to_string());
            }
            for (k, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", k + 1)),
                    _ => factors.push(format!("x{}^{}", k + 1, e)),
                }
            }
            if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("*")
            }
        })
        .collect();
    Ok(parts.join(" + "))
}

/// Characters of the atoms of `B_I(lambda)`, keyed by minimal coset representative.
pub fn atom_character_table(
    g: &CrystalGraph,
    ideal: &LowerOrderIdeal,
) -> Result<BTreeMap<WeylElement, FormalCharacter>> {
    Ok(atomic_decomposition(g, ideal)?
        .into_iter()
        .map(|a| (a.w, character(&a.handle)))
        .collect())
}
