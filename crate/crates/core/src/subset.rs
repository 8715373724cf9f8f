use std::collections::BTreeSet;
use std::fmt;

use crate::crystal::{CrystalGraph, ElemId};

/// Where a subset came from; carried along for serialization only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Explicit,
    Selector(String),
    /// Reduced word (node labels) of the requested Weyl element.
    Demazure(Vec<u32>),
    Atom(Vec<u32>),
    /// Generator words of a lower order ideal.
    Ideal(Vec<Vec<u32>>),
    Intersection(Vec<Vec<u32>>, Vec<Vec<u32>>),
}

/// A set of elements of one crystal graph.
#[derive(Clone)]
pub struct SubsetHandle<'g> {
    graph: &'g CrystalGraph,
    members: BTreeSet<ElemId>,
    provenance: Provenance,
}

impl<'g> SubsetHandle<'g> {
    pub fn new(graph: &'g CrystalGraph, members: impl IntoIterator<Item = ElemId>) -> Self {
        let members: BTreeSet<ElemId> = members.into_iter().collect();
        debug_assert!(members.iter().all(|b| b.0 < graph.len()));
        SubsetHandle {
            graph,
            members,
            provenance: Provenance::Explicit,
        }
    }

    pub fn whole(graph: &'g CrystalGraph) -> Self {
        Self::new(graph, graph.elements())
    }

    /// Subset selected by the bits of `mask` in element order.
    pub fn from_mask(graph: &'g CrystalGraph, mask: u64) -> Self {
        Self::new(graph, graph.elements().filter(|b| mask >> b.0 & 1 == 1))
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn graph(&self) -> &'g CrystalGraph {
        self.graph
    }

    pub fn members(&self) -> &BTreeSet<ElemId> {
        &self.members
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn contains(&self, b: ElemId) -> bool {
        self.members.contains(&b)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &SubsetHandle<'_>) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &SubsetHandle<'g>) -> SubsetHandle<'g> {
        SubsetHandle::new(self.graph, self.members.union(&other.members).copied())
    }

    pub fn intersection(&self, other: &SubsetHandle<'g>) -> SubsetHandle<'g> {
        SubsetHandle::new(self.graph, self.members.intersection(&other.members).copied())
    }

    pub fn difference(&self, other: &SubsetHandle<'g>) -> SubsetHandle<'g> {
        SubsetHandle::new(self.graph, self.members.difference(&other.members).copied())
    }

    /// Member ids sorted as strings.
    pub fn sorted_ids(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.iter().map(|b| self.graph.id(b).to_string()).collect();
        ids.sort();
        ids
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().fold(0u64, |m, b| m | 1 << b.0)
    }
}

/// Equality is membership equality inside the same graph.
impl PartialEq for SubsetHandle<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graph, other.graph) && self.members == other.members
    }
}

impl Eq for SubsetHandle<'_> {}

impl fmt::Debug for SubsetHandle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|b| self.graph.id(b))).finish()
    }
}
