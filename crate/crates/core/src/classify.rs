//! Local tests for the extremal, ideal and principal conditions on subsets
//! of a highest-weight crystal, and the two Demazure criteria built on them.

use std::collections::{BTreeSet, HashSet};

use crate::character::{char_equal, character};
use crate::crystal::ElemId;
use crate::demazure::{demazure_crystal, ideal_subset};
use crate::error::{Error, Result};
use crate::root_data::Node;
use crate::subset::SubsetHandle;
use crate::weyl::{LowerOrderIdeal, WeylElement};

/// Why a subset fails one of the conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Empty,
    /// An `i`-string meets the subset in something other than nothing, the
    /// whole string, or its head.
    String {
        node: Node,
        string: Vec<ElemId>,
        intersection: Vec<ElemId>,
    },
    /// `y = f*_{path[last]} ... f*_{path[0]} (x)` with `x, y` in the subset, yet
    /// dropping the first step leads to `escaped` outside it.
    Path {
        from: ElemId,
        to: ElemId,
        path: Vec<Node>,
        escaped: ElemId,
    },
    /// Bruhat-maximal representatives of the extremal weights; more than one.
    Maxima(Vec<WeylElement>),
    /// The three local conditions hold, yet the subset is not `B_w` for its
    /// Bruhat-maximal `w`.
    NotDemazure {
        w: WeylElement,
        extra: Vec<ElemId>,
        missing: Vec<ElemId>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<T = ()> {
    pub holds: bool,
    pub value: Option<T>,
    pub witness: Option<Witness>,
}

impl<T> Verdict<T> {
    fn pass(value: Option<T>) -> Self {
        Verdict {
            holds: true,
            value,
            witness: None,
        }
    }

    fn fail(witness: Witness) -> Self {
        Verdict {
            holds: false,
            value: None,
            witness: Some(witness),
        }
    }
}

pub fn is_extremal(x: &SubsetHandle<'_>) -> Verdict {
    if x.is_empty() {
        return Verdict::fail(Witness::Empty);
    }
    let g = x.graph();
    let mut seen: HashSet<(Node, ElemId)> = HashSet::new();
    for b in x.iter() {
        for i in g.cartan().nodes() {
            let head = g.e_star(i, b);
            if !seen.insert((i, head)) {
                continue;
            }
            let string = g.i_string(i, head);
            let inter: Vec<ElemId> = string.iter().copied().filter(|&c| x.contains(c)).collect();
            let ok = inter.len() == string.len() || inter == [head];
            if !ok {
                return Verdict::fail(Witness::String {
                    node: i,
                    string,
                    intersection: inter,
                });
            }
        }
    }
    Verdict::pass(None)
}

/// The ideal condition, checked over every nontrivial starred lowering path
/// between extremal members.
pub fn is_ideal_local(x: &SubsetHandle<'_>) -> Result<Verdict> {
    let ext = is_extremal(x);
    if !ext.holds {
        return Ok(ext);
    }
    let g = x.graph();
    for (from, _) in g.extremal_elements(x.iter())? {
        // Intermediate points of a path ending in an extremal subset lie in it,
        // so the search can stop as soon as it leaves the subset.
        let mut stack: Vec<(Vec<Node>, ElemId)> = vec![(Vec::new(), from)];
        while let Some((path, b)) = stack.pop() {
            for i in g.cartan().nodes() {
                let c = g.f_star(i, b);
                if c == b || !x.contains(c) {
                    continue;
                }
                let mut next = path.clone();
                next.push(i);
                let side = g.path_to_extremal(from, &next[1..]);
                if !x.contains(side) {
                    return Ok(Verdict::fail(Witness::Path {
                        from,
                        to: c,
                        path: next,
                        escaped: side,
                    }));
                }
                stack.push((next, c));
            }
        }
    }
    Ok(Verdict::pass(None))
}

/// Minimal coset representatives of the extremal weights occurring in `x`.
pub fn extremal_reps(x: &SubsetHandle<'_>) -> Result<BTreeSet<WeylElement>> {
    Ok(x.graph()
        .extremal_elements(x.iter())?
        .into_iter()
        .map(|(_, u)| u)
        .collect())
}

/// Down-closure in `W` of the extremal representatives of `x`.
fn generated_ideal(x: &SubsetHandle<'_>) -> Result<LowerOrderIdeal> {
    let reps: Vec<WeylElement> = extremal_reps(x)?.into_iter().collect();
    Ok(x.graph().weyl().lower_ideal(&reps))
}

/// The lower order ideal `I` with `B_I(lambda) = x`.
pub fn recover_ideal(x: &SubsetHandle<'_>) -> Result<LowerOrderIdeal> {
    if !is_ideal_local(x)?.holds {
        return Err(Error::SubsetNotIdeal);
    }
    generated_ideal(x)
}

/// Ideal in the global sense: extremal, its representatives are closed under
/// Bruhat descent (modulo the stabilizer), and the union of their Demazure
/// crystals is exactly `x`.
pub fn is_ideal_global(x: &SubsetHandle<'_>) -> Result<bool> {
    if !is_extremal(x).holds {
        return Ok(false);
    }
    let g = x.graph();
    let weyl = g.weyl();
    let lambda = g.lambda()?;
    let reps = extremal_reps(x)?;
    let ideal = generated_ideal(x)?;
    let projected: BTreeSet<WeylElement> = ideal.elements().iter().map(|v| weyl.min_coset_rep(v, lambda)).collect();
    if projected != reps {
        return Ok(false);
    }
    Ok(ideal_subset(g, &ideal)?.members() == x.members())
}

/// Principal: the extremal representatives have a Bruhat maximum.
pub fn is_principal(x: &SubsetHandle<'_>) -> Result<Verdict<WeylElement>> {
    if !is_extremal(x).holds {
        return Err(Error::SubsetNotExtremal);
    }
    let weyl = x.graph().weyl();
    let reps = extremal_reps(x)?;
    let maxima = weyl.maximal_elements(reps.iter());
    match maxima.as_slice() {
        [top] if reps.iter().all(|v| weyl.bruhat_leq(v, top)) => Ok(Verdict::pass(Some(top.clone()))),
        _ => Ok(Verdict::fail(Witness::Maxima(maxima))),
    }
}

/// Demazure test by the three local conditions, confirmed against `B_w`
/// for the Bruhat-maximal `w`. On success the value is that `w`.
pub fn is_demazure(x: &SubsetHandle<'_>) -> Result<Verdict<WeylElement>> {
    let ext = is_extremal(x);
    if !ext.holds {
        return Ok(Verdict {
            holds: false,
            value: None,
            witness: ext.witness,
        });
    }
    let ideal = is_ideal_local(x)?;
    if !ideal.holds {
        return Ok(Verdict {
            holds: false,
            value: None,
            witness: ideal.witness,
        });
    }
    let principal = is_principal(x)?;
    let Some(w) = principal.value else {
        return Ok(Verdict {
            holds: false,
            value: None,
            witness: principal.witness,
        });
    };
    let d = demazure_crystal(x.graph(), &w)?;
    if d.handle.members() != x.members() {
        return Ok(Verdict::fail(Witness::NotDemazure {
            extra: x.difference(&d.handle).iter().collect(),
            missing: d.handle.difference(x).iter().collect(),
            w,
        }));
    }
    Ok(Verdict::pass(Some(w)))
}

/// Demazure test for a subset whose character is already known to equal
/// that of `B_w(lambda)`: then it is `B_w(lambda)` exactly when it is ideal.
pub fn is_demazure_by_character(x: &SubsetHandle<'_>, w: &WeylElement) -> Result<bool> {
    let d = demazure_crystal(x.graph(), w)?;
    if !char_equal(&character(x), &character(&d.handle)) {
        return Err(Error::CharacterMismatch);
    }
    Ok(is_ideal_local(x)?.holds)
}

/// Every condition at once, with the first failing witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub extremal: bool,
    pub ideal: bool,
    pub principal: bool,
    pub demazure: bool,
    pub w: Option<WeylElement>,
    pub ideal_generators: Option<Vec<WeylElement>>,
    pub witness: Option<Witness>,
}

pub fn classify(x: &SubsetHandle<'_>) -> Result<Classification> {
    let ext = is_extremal(x);
    if !ext.holds {
        return Ok(Classification {
            extremal: false,
            ideal: false,
            principal: false,
            demazure: false,
            w: None,
            ideal_generators: None,
            witness: ext.witness,
        });
    }
    let ideal = is_ideal_local(x)?;
    let principal = is_principal(x)?;
    let ideal_generators = if ideal.holds {
        Some(recover_ideal(x)?.generators().to_vec())
    } else {
        None
    };
    let demazure = is_demazure(x)?;
    let witness = if !ideal.holds {
        ideal.witness
    } else if !principal.holds {
        principal.witness.clone()
    } else {
        demazure.witness.clone()
    };
    Ok(Classification {
        extremal: true,
        ideal: ideal.holds,
        principal: principal.holds,
        demazure: demazure.holds,
        w: demazure.value,
        ideal_generators,
        witness,
    })
}
