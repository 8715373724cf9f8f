//! Demazure crystals `B_w(lambda) = F_w{b_lambda}`, unions over lower
//! order ideals, and Demazure atoms.
//!
//! Every Weyl element entering this module is first replaced by its minimal
//! coset representative for `lambda`; the requested element is kept for
//! display.

use std::collections::{BTreeSet, HashSet};

use crate::crystal::{CrystalGraph, ElemId};
use crate::error::{Error, Result};
use crate::root_data::Node;
use crate::subset::{Provenance, SubsetHandle};
use crate::weyl::{LowerOrderIdeal, WeylElement};

#[derive(Clone, Debug)]
pub struct DemazureSubset<'g> {
    pub handle: SubsetHandle<'g>,
    /// `floor(w)^lambda`.
    pub w: WeylElement,
    pub requested: WeylElement,
}

#[derive(Clone, Debug)]
pub struct AtomSubset<'g> {
    pub handle: SubsetHandle<'g>,
    /// `floor(w)^lambda`.
    pub w: WeylElement,
}

/// `F_word(start)`: closes under full `f_i`-strings for the letters of `word`
/// from right to left.
pub fn f_closure(g: &CrystalGraph, start: &[ElemId], word: &[Node]) -> BTreeSet<ElemId> {
    let mut set: HashSet<ElemId> = start.iter().copied().collect();
    for &i in word.iter().rev() {
        let mut next = set.clone();
        for &b in &set {
            let mut cur = b;
            while let Some(c) = g.f(i, cur) {
                next.insert(c);
                cur = c;
            }
        }
        set = next;
    }
    set.into_iter().collect()
}

/// Demazure crystal built along an explicit reduced word.
pub fn demazure_by_word(g: &CrystalGraph, word: &[Node]) -> Result<BTreeSet<ElemId>> {
    let hw = g.highest_weight()?;
    Ok(f_closure(g, &[hw], word))
}

pub fn demazure_crystal<'g>(g: &'g CrystalGraph, w: &WeylElement) -> Result<DemazureSubset<'g>> {
    let lambda = g.lambda()?;
    let weyl = g.weyl();
    let rep = weyl.min_coset_rep(w, lambda);
    let members = demazure_by_word(g, rep.word())?;
    let handle = SubsetHandle::new(g, members).with_provenance(Provenance::Demazure(weyl.labels(w)));
    Ok(DemazureSubset {
        handle,
        w: rep,
        requested: w.clone(),
    })
}

/// `B_I(lambda)`: the union of `B_w(lambda)` over the generators of `I`.
pub fn ideal_subset<'g>(g: &'g CrystalGraph, ideal: &LowerOrderIdeal) -> Result<SubsetHandle<'g>> {
    if ideal.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let weyl = g.weyl();
    let lambda = g.lambda()?;
    let hw = g.highest_weight()?;
    let mut members = BTreeSet::new();
    for w in ideal.generators() {
        let rep = weyl.min_coset_rep(w, lambda);
        members.extend(f_closure(g, &[hw], rep.word()));
    }
    let gens = ideal.generators().iter().map(|w| weyl.labels(w)).collect();
    Ok(SubsetHandle::new(g, members).with_provenance(Provenance::Ideal(gens)))
}

/// `B_u(lambda) ⊆ B_w(lambda)`, decided in the Weyl group alone.
pub fn demazure_contains(g: &CrystalGraph, u: &WeylElement, w: &WeylElement) -> Result<bool> {
    let weyl = g.weyl();
    let rep = weyl.min_coset_rep(u, g.lambda()?);
    Ok(weyl.bruhat_leq(&rep, w))
}

/// `A_w(lambda)`: `B_w` minus the Demazure crystals of the Bruhat co-atoms
/// of `floor(w)^lambda`.
pub fn demazure_atom<'g>(g: &'g CrystalGraph, w: &WeylElement) -> Result<AtomSubset<'g>> {
    let weyl = g.weyl();
    let lambda = g.lambda()?;
    let hw = g.highest_weight()?;
    let rep = weyl.min_coset_rep(w, lambda);
    let mut members = f_closure(g, &[hw], rep.word());
    for v in weyl.lower_covers(&rep) {
        let below = f_closure(g, &[hw], weyl.min_coset_rep(&v, lambda).word());
        members.retain(|b| !below.contains(b));
    }
    let handle = SubsetHandle::new(g, members).with_provenance(Provenance::Atom(weyl.labels(&rep)));
    Ok(AtomSubset { handle, w: rep })
}

/// Atoms indexed by the distinct minimal coset representatives of `I`.
pub fn atomic_decomposition<'g>(g: &'g CrystalGraph, ideal: &LowerOrderIdeal) -> Result<Vec<AtomSubset<'g>>> {
    let weyl = g.weyl();
    let lambda = g.lambda()?;
    let reps: BTreeSet<WeylElement> = ideal.elements().iter().map(|v| weyl.min_coset_rep(v, lambda)).collect();
    reps.iter().map(|v| demazure_atom(g, v)).collect()
}

/// `B_I ∩ B_J` computed as `B_{I ∩ J}`, checked against the literal
/// intersection of member sets.
pub fn ideal_intersection<'g>(
    g: &'g CrystalGraph,
    i: &LowerOrderIdeal,
    j: &LowerOrderIdeal,
) -> Result<SubsetHandle<'g>> {
    let weyl = g.weyl();
    let meet = weyl.ideal_intersection(i, j);
    let by_formula = ideal_subset(g, &meet)?;
    let literal = ideal_subset(g, i)?.intersection(&ideal_subset(g, j)?);
    if by_formula.members() != literal.members() {
        return Err(Error::Inconsistent(format!(
            "B_(I∩J) has {} elements but B_I ∩ B_J has {}",
            by_formula.len(),
            literal.len()
        )));
    }
    let gens = |x: &LowerOrderIdeal| x.generators().iter().map(|w| weyl.labels(w)).collect();
    Ok(by_formula.with_provenance(Provenance::Intersection(gens(i), gens(j))))
}
