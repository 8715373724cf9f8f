//! Finite crystal graphs: validation of the crystal axioms, `i`-strings,
//! starred operators and extremal elements.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Axiom, Error, Result};
use crate::root_data::{CartanData, Node, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// Index of an element inside one [`CrystalGraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub usize);

/// Concrete model a graph was built from, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    /// Semistandard tableaux of `shape` with entries at most `n`.
    Tableau { n: usize, shape: Vec<u32> },
}

impl Model {
    /// Number of boxes, which fixes tableau content from a weight.
    pub fn boxes(&self) -> usize {
        match self {
            Model::Tableau { shape, .. } => shape.iter().map(|&p| p as usize).sum(),
        }
    }
}

/// Cached data for a connected graph with a unique highest-weight element.
#[derive(Clone, Debug)]
pub struct HighestWeight {
    pub element: ElemId,
    pub lambda: Weight,
    /// Extremal elements with the minimal coset representative of their weight.
    pub extremal: BTreeMap<ElemId, WeylElement>,
    pub by_rep: HashMap<WeylElement, ElemId>,
}

#[derive(Clone, Debug)]
pub struct CrystalGraph {
    cartan: Arc<CartanData>,
    ids: Vec<String>,
    lookup: HashMap<String, ElemId>,
    weights: Vec<Weight>,
    f: Vec<Vec<Option<ElemId>>>,
    e: Vec<Vec<Option<ElemId>>>,
    model: Option<Model>,
    highest_weight_ids: Vec<ElemId>,
    hw: std::result::Result<HighestWeight, Error>,
}

impl CrystalGraph {
    /// Assembles a graph from element ids, weights and `f`-edges
    /// `(src, node, dst)`, rejecting anything that violates the axioms.
    pub fn from_parts(
        cartan: Arc<CartanData>,
        ids: Vec<String>,
        weights: Vec<Weight>,
        edges: &[(usize, Node, usize)],
        model: Option<Model>,
    ) -> Result<Self> {
        let n = ids.len();
        let rank = cartan.rank();
        let mut lookup = HashMap::with_capacity(n);
        for (k, id) in ids.iter().enumerate() {
            if lookup.insert(id.clone(), ElemId(k)).is_some() {
                return Err(Error::DuplicateId(id.clone()));
            }
        }
        for w in &weights {
            if w.rank() != rank {
                return Err(Error::WeightRank {
                    expected: rank,
                    found: w.rank(),
                });
            }
        }
        let mut f = vec![vec![None; rank]; n];
        let mut e = vec![vec![None; rank]; n];
        for &(src, i, dst) in edges {
            let violation = |element: usize, detail: &str| Error::AxiomViolation {
                axiom: Axiom::A,
                element: ids[element].clone(),
                node: cartan.label(i),
                detail: detail.to_string(),
            };
            if f[src][i].replace(ElemId(dst)).is_some() {
                return Err(violation(src, "two outgoing f-edges"));
            }
            if e[dst][i].replace(ElemId(src)).is_some() {
                return Err(violation(dst, "two incoming f-edges"));
            }
        }
        let mut g = CrystalGraph {
            cartan,
            ids,
            lookup,
            weights,
            f,
            e,
            model,
            highest_weight_ids: Vec::new(),
            hw: Err(Error::NotHighestWeight("not analysed".into())),
        };
        g.validate()?;
        g.highest_weight_ids = (0..n)
            .map(ElemId)
            .filter(|&b| g.cartan.nodes().all(|i| g.e(i, b).is_none()))
            .collect();
        g.hw = g.analyse_highest_weight();
        Ok(g)
    }

    /// Checks axioms (b), (c) and (d); (a) holds by construction since the
    /// raising maps are built as inverses of the lowering maps.
    pub fn validate(&self) -> Result<()> {
        for b in self.elements() {
            for i in self.cartan.nodes() {
                let fail = |axiom, element: ElemId, detail: String| Error::AxiomViolation {
                    axiom,
                    element: self.ids[element.0].clone(),
                    node: self.cartan.label(i),
                    detail,
                };
                if let Some(c) = self.f(i, b) {
                    if self.e(i, c) != Some(b) {
                        return Err(fail(Axiom::A, b, "e_i(f_i b) != b".into()));
                    }
                    let expected = self.weights[b.0].sub(&self.cartan.simple_root(i));
                    if self.weights[c.0] != expected {
                        return Err(fail(
                            Axiom::B,
                            b,
                            format!("f-edge to {} changes weight by other than -alpha", self.ids[c.0]),
                        ));
                    }
                }
                // Walking an acyclic string terminates within |B| steps.
                let eps = self
                    .walk(i, b, false)
                    .ok_or_else(|| fail(Axiom::C, b, "e-string does not terminate".into()))?;
                let phi = self
                    .walk(i, b, true)
                    .ok_or_else(|| fail(Axiom::C, b, "f-string does not terminate".into()))?;
                let pairing = self.weights[b.0].coords()[i];
                if phi as i64 != pairing + eps as i64 {
                    return Err(fail(
                        Axiom::D,
                        b,
                        format!("phi = {phi} but <alpha^vee, wt> + eps = {}", pairing + eps as i64),
                    ));
                }
            }
        }
        Ok(())
    }

    fn walk(&self, i: Node, b: ElemId, down: bool) -> Option<usize> {
        let mut steps = 0;
        let mut cur = b;
        loop {
            let next = if down { self.f(i, cur) } else { self.e(i, cur) };
            match next {
                None => return Some(steps),
                Some(c) => {
                    steps += 1;
                    if steps > self.len() {
                        return None;
                    }
                    cur = c;
                }
            }
        }
    }

    fn analyse_highest_weight(&self) -> std::result::Result<HighestWeight, Error> {
        let [hw] = self.highest_weight_ids[..] else {
            return Err(Error::NotHighestWeight(format!(
                "{} elements have no raising edge",
                self.highest_weight_ids.len()
            )));
        };
        if !self.is_connected() {
            return Err(Error::NotHighestWeight("graph is disconnected".into()));
        }
        let lambda = self.weights[hw.0].clone();
        if !lambda.is_dominant() {
            return Err(Error::NotHighestWeight(format!("weight {lambda} is not dominant")));
        }
        let weyl = self.weyl();
        let mut extremal = BTreeMap::new();
        let mut by_rep = HashMap::new();
        for b in self.elements() {
            if let Some(rep) = weyl.min_rep_for_weight(&self.weights[b.0], &lambda)? {
                if let Some(other) = by_rep.insert(rep.clone(), b) {
                    return Err(Error::NotHighestWeight(format!(
                        "extremal weight {} carried by both {} and {}",
                        self.weights[b.0], self.ids[other.0], self.ids[b.0]
                    )));
                }
                extremal.insert(b, rep);
            }
        }
        Ok(HighestWeight {
            element: hw,
            lambda,
            extremal,
            by_rep,
        })
    }

    fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([ElemId(0)]);
        seen[0] = true;
        while let Some(b) = queue.pop_front() {
            for i in self.cartan.nodes() {
                for c in [self.f(i, b), self.e(i, b)].into_iter().flatten() {
                    if !seen[c.0] {
                        seen[c.0] = true;
                        queue.push_back(c);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn cartan_arc(&self) -> Arc<CartanData> {
        Arc::clone(&self.cartan)
    }

    pub fn weyl(&self) -> WeylGroup {
        WeylGroup::new(self.cartan_arc())
    }

    pub fn model(&self) -> Option<&Model> {
        self.model.as_ref()
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> + Clone {
        (0..self.ids.len()).map(ElemId)
    }

    pub fn id(&self, b: ElemId) -> &str {
        &self.ids[b.0]
    }

    pub fn find(&self, id: &str) -> Option<ElemId> {
        self.lookup.get(id).copied()
    }

    pub fn wt(&self, b: ElemId) -> &Weight {
        &self.weights[b.0]
    }

    /// `f_i(b)`; `None` is the absent result.
    pub fn f(&self, i: Node, b: ElemId) -> Option<ElemId> {
        self.f[b.0][i]
    }

    pub fn e(&self, i: Node, b: ElemId) -> Option<ElemId> {
        self.e[b.0][i]
    }

    pub fn epsilon(&self, i: Node, b: ElemId) -> usize {
        self.walk(i, b, false).expect("validated")
    }

    pub fn phi(&self, i: Node, b: ElemId) -> usize {
        self.walk(i, b, true).expect("validated")
    }

    /// Head of the `i`-string through `b`.
    pub fn e_star(&self, i: Node, b: ElemId) -> ElemId {
        let mut cur = b;
        while let Some(c) = self.e(i, cur) {
            cur = c;
        }
        cur
    }

    /// Tail of the `i`-string through `b`.
    pub fn f_star(&self, i: Node, b: ElemId) -> ElemId {
        let mut cur = b;
        while let Some(c) = self.f(i, cur) {
            cur = c;
        }
        cur
    }

    /// The `i`-string through `b`, head first.
    pub fn i_string(&self, i: Node, b: ElemId) -> Vec<ElemId> {
        let mut out = vec![self.e_star(i, b)];
        while let Some(c) = self.f(i, *out.last().unwrap()) {
            out.push(c);
        }
        out
    }

    /// Elements with no raising edge.
    pub fn highest_weight_ids(&self) -> &[ElemId] {
        &self.highest_weight_ids
    }

    pub fn highest_weight_data(&self) -> Result<&HighestWeight> {
        self.hw.as_ref().map_err(Clone::clone)
    }

    pub fn highest_weight(&self) -> Result<ElemId> {
        Ok(self.highest_weight_data()?.element)
    }

    pub fn lambda(&self) -> Result<&Weight> {
        Ok(&self.highest_weight_data()?.lambda)
    }

    /// Minimal coset representative `u` with `wt(b) = u lambda`, if `b` is extremal.
    pub fn extremal_rep(&self, b: ElemId) -> Option<&WeylElement> {
        self.hw.as_ref().ok()?.extremal.get(&b)
    }

    /// The unique element of extremal weight `w lambda`.
    pub fn extremal_of(&self, w: &WeylElement) -> Result<ElemId> {
        let hw = self.highest_weight_data()?;
        let rep = self.weyl().min_coset_rep(w, &hw.lambda);
        hw.by_rep.get(&rep).copied().ok_or_else(|| {
            Error::Inconsistent(format!(
                "no element of extremal weight {}",
                self.weyl().apply(&rep, &hw.lambda)
            ))
        })
    }

    /// Extremal elements among `members` (or all elements), each paired with
    /// the minimal coset representative of its weight.
    pub fn extremal_elements<'a>(
        &'a self,
        members: impl IntoIterator<Item = ElemId> + 'a,
    ) -> Result<Vec<(ElemId, WeylElement)>> {
        let hw = self.highest_weight_data()?;
        Ok(members
            .into_iter()
            .filter_map(|b| hw.extremal.get(&b).map(|u| (b, u.clone())))
            .collect())
    }

    /// Applies `f_{word[0]}^*`, then `f_{word[1]}^*`, and so on.
    pub fn path_to_extremal(&self, x: ElemId, word: &[Node]) -> ElemId {
        word.iter().fold(x, |b, &i| self.f_star(i, b))
    }

    /// Every nontrivial starred lowering path from `x`, as
    /// `(letters in application order, endpoint)`.
    pub fn strict_starred_paths(&self, x: ElemId) -> Vec<(Vec<Node>, ElemId)> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), x)];
        while let Some((path, b)) = stack.pop() {
            for i in self.cartan.nodes() {
                let c = self.f_star(i, b);
                if c != b {
                    let mut p = path.clone();
                    p.push(i);
                    out.push((p.clone(), c));
                    stack.push((p, c));
                }
            }
        }
        out.sort();
        out
    }

    /// `f`-edges as `(src, node, dst)` in element order, then node order.
    pub fn edges(&self) -> Vec<(ElemId, Node, ElemId)> {
        let mut out = Vec::new();
        for b in self.elements() {
            for i in self.cartan.nodes() {
                if let Some(c) = self.f(i, b) {
                    out.push((b, i, c));
                }
            }
        }
        out
    }

    /// Elements reachable from `start` by lowering operators.
    pub fn lower_closure(&self, start: impl IntoIterator<Item = ElemId>) -> HashSet<ElemId> {
        let mut seen = HashSet::new();
        let mut stack: Vec<ElemId> = start.into_iter().collect();
        while let Some(b) = stack.pop() {
            if seen.insert(b) {
                for i in self.cartan.nodes() {
                    if let Some(c) = self.f(i, b) {
                        stack.push(c);
                    }
                }
            }
        }
        seen
    }

    /// Follows `f_{path[last]}` first, then earlier letters, as in
    /// `f_2 f_2 f_1 b`. Reports the failing step index (from the right).
    pub fn apply_lowering(&self, b: ElemId, path: &[Node]) -> std::result::Result<ElemId, usize> {
        let mut cur = b;
        for (step, &i) in path.iter().rev().enumerate() {
            cur = self.f(i, cur).ok_or(step)?;
        }
        Ok(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::build_tableau_crystal;

    fn b21() -> CrystalGraph {
        build_tableau_crystal(3, &[2, 1]).unwrap()
    }

    #[test]
    fn starred_operator_examples() {
        let g = b21();
        let hw = g.highest_weight().unwrap();
        for i in 0..2 {
            assert_eq!(g.e_star(i, hw), hw);
        }
        let f1 = g.f(0, hw).unwrap();
        assert_eq!(g.f_star(0, hw), f1);
        let target = g.f(1, g.f(1, f1).unwrap()).unwrap();
        assert_eq!(g.f_star(1, f1), target);
        for b in g.elements() {
            for i in 0..2 {
                assert_eq!(g.f_star(i, g.f_star(i, b)), g.f_star(i, b));
                assert_eq!(g.e_star(i, g.e_star(i, b)), g.e_star(i, b));
            }
        }
    }

    #[test]
    fn strings() {
        let g = build_tableau_crystal(2, &[3]).unwrap();
        let hw = g.highest_weight().unwrap();
        assert_eq!(g.i_string(0, hw).len(), 4);
        let b = b21();
        for x in b.elements() {
            for i in 0..2 {
                let s = b.i_string(i, x);
                assert!(s.contains(&x));
                assert_eq!(b.epsilon(i, s[0]), 0);
                assert_eq!(b.phi(i, *s.last().unwrap()), 0);
                if b.epsilon(i, x) == 0 && b.phi(i, x) == 0 {
                    assert_eq!(s, vec![x]);
                }
            }
        }
    }

    #[test]
    fn extremal_counts() {
        let g = b21();
        assert_eq!(g.extremal_elements(g.elements()).unwrap().len(), 6);
        let v = build_tableau_crystal(3, &[1]).unwrap();
        assert_eq!(v.extremal_elements(v.elements()).unwrap().len(), 3);
        let hw = g.highest_weight().unwrap();
        let only = g.extremal_elements([hw]).unwrap();
        assert_eq!(only.len(), 1);
        assert!(only[0].1.is_identity());
    }

    #[test]
    fn path_examples() {
        let g = b21();
        let weyl = g.weyl();
        let hw = g.highest_weight().unwrap();
        let lam = g.lambda().unwrap().clone();
        let y = g.path_to_extremal(hw, &[0, 1]);
        let s2s1 = weyl.element(&[1, 0]).unwrap();
        assert_eq!(g.wt(y), &weyl.apply(&s2s1, &lam));
        assert_eq!(g.wt(y), &Weight::new(vec![1, -2]));
        assert_eq!(g.path_to_extremal(hw, &[]), hw);
        assert_eq!(g.path_to_extremal(hw, &[0, 1, 0]), g.path_to_extremal(hw, &[1, 0, 1]));
        assert_eq!(g.wt(g.path_to_extremal(hw, &[0, 1, 0])), &Weight::new(vec![-1, -1]));
    }

    #[test]
    fn rejects_violations() {
        let c = Arc::new(CartanData::finite_type("A", 2).unwrap());
        let ids = vec!["a".to_string(), "b".to_string()];
        // f_1 edge that changes weight by -alpha_2
        let w = vec![Weight::new(vec![1, 0]), Weight::new(vec![2, -2])];
        let err = CrystalGraph::from_parts(c.clone(), ids.clone(), w, &[(0, 0, 1)], None).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::B, .. }));
        // phi_1 of "a" is 1 but its pairing is 2
        let w = vec![Weight::new(vec![2, 0]), Weight::new(vec![0, 1])];
        let err = CrystalGraph::from_parts(c.clone(), ids.clone(), w, &[(0, 0, 1)], None).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::D, .. }));
        let w = vec![Weight::new(vec![0, 0]), Weight::new(vec![0, 0])];
        let dup = vec!["a".to_string(), "a".to_string()];
        assert_eq!(
            CrystalGraph::from_parts(c, dup, w, &[], None).unwrap_err(),
            Error::DuplicateId("a".into())
        );
    }

    #[test]
    fn non_highest_weight_graphs_are_flagged() {
        let c = Arc::new(CartanData::finite_type("A", 1).unwrap());
        let ids = vec!["a".to_string(), "b".to_string()];
        let w = vec![Weight::new(vec![0]), Weight::new(vec![0])];
        let g = CrystalGraph::from_parts(c, ids, w, &[], None).unwrap();
        assert_eq!(g.highest_weight_ids().len(), 2);
        assert!(matches!(g.highest_weight(), Err(Error::NotHighestWeight(_))));
    }
}
