//! JSON documents for crystals, subsets, characters and classification
//! reports. All orderings are fixed so that identical inputs serialize to
//! identical bytes.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::character::FormalCharacter;
use crate::classify::{Classification, Witness};
use crate::crystal::{CrystalGraph, Model};
use crate::error::{Error, Result};
use crate::root_data::{CartanData, Weight};
use crate::subset::{Provenance, SubsetHandle};
use crate::weyl::{LowerOrderIdeal, WeylGroup};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CartanDoc {
    Explicit {
        index_set: Vec<u32>,
        matrix: Vec<Vec<i64>>,
    },
    Named {
        #[serde(rename = "type")]
        kind: String,
        rank: usize,
    },
}

impl CartanDoc {
    pub fn to_cartan(&self) -> Result<CartanData> {
        match self {
            CartanDoc::Explicit { index_set, matrix } => CartanData::new(index_set.clone(), matrix.clone()),
            CartanDoc::Named { kind, rank } => CartanData::finite_type(kind, *rank),
        }
    }

    pub fn from_cartan(c: &CartanData) -> Self {
        CartanDoc::Explicit {
            index_set: c.index_set().to_vec(),
            matrix: c.matrix().to_vec(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModelDoc {
    Tableau { n: usize, shape: Vec<u32> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ElementDoc {
    pub id: String,
    pub wt: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct EdgeDoc {
    pub src: String,
    pub i: u32,
    pub dst: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GraphDoc {
    pub cartan: CartanDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelDoc>,
    pub elements: Vec<ElementDoc>,
    pub edges: Vec<EdgeDoc>,
}

impl GraphDoc {
    pub fn from_graph(g: &CrystalGraph) -> Self {
        let c = g.cartan();
        GraphDoc {
            cartan: CartanDoc::from_cartan(c),
            model: g.model().map(|m| match m {
                Model::Tableau { n, shape } => ModelDoc::Tableau {
                    n: *n,
                    shape: shape.clone(),
                },
            }),
            elements: g
                .elements()
                .map(|b| ElementDoc {
                    id: g.id(b).to_string(),
                    wt: g.wt(b).coords().to_vec(),
                })
                .collect(),
            edges: g
                .edges()
                .into_iter()
                .map(|(s, i, d)| EdgeDoc {
                    src: g.id(s).to_string(),
                    i: c.label(i),
                    dst: g.id(d).to_string(),
                })
                .collect(),
        }
    }

    /// Validates every axiom; ids are kept verbatim.
    pub fn to_graph(&self) -> Result<CrystalGraph> {
        let cartan = Arc::new(self.cartan.to_cartan()?);
        let mut ids = Vec::with_capacity(self.elements.len());
        let mut weights = Vec::with_capacity(self.elements.len());
        let mut index = std::collections::HashMap::new();
        for (k, el) in self.elements.iter().enumerate() {
            if index.insert(el.id.as_str(), k).is_some() {
                return Err(Error::DuplicateId(el.id.clone()));
            }
            ids.push(el.id.clone());
            weights.push(cartan.weight(el.wt.clone())?);
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let src = *index
                .get(e.src.as_str())
                .ok_or_else(|| Error::DanglingEdge(e.src.clone()))?;
            let dst = *index
                .get(e.dst.as_str())
                .ok_or_else(|| Error::DanglingEdge(e.dst.clone()))?;
            edges.push((src, cartan.node(e.i)?, dst));
        }
        let model = self.model.as_ref().map(|m| match m {
            ModelDoc::Tableau { n, shape } => Model::Tableau {
                n: *n,
                shape: shape.clone(),
            },
        });
        CrystalGraph::from_parts(cartan, ids, weights, &edges, model)
    }
}

pub fn load_crystal_graph(json: &str) -> Result<CrystalGraph> {
    let doc: GraphDoc = serde_json::from_str(json).map_err(|e| Error::Document(e.to_string()))?;
    doc.to_graph()
}

pub fn crystal_to_json(g: &CrystalGraph) -> String {
    serde_json::to_string_pretty(&GraphDoc::from_graph(g)).expect("graph serializes")
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ProvenanceDoc {
    Explicit,
    Selector { selector: String },
    Demazure { w: Vec<u32> },
    Atom { w: Vec<u32> },
    Ideal { generators: Vec<Vec<u32>> },
    Intersection { left: Vec<Vec<u32>>, right: Vec<Vec<u32>> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SubsetDoc {
    pub members: Vec<String>,
    pub provenance: ProvenanceDoc,
}

impl SubsetDoc {
    pub fn from_subset(x: &SubsetHandle<'_>) -> Self {
        let provenance = match x.provenance().clone() {
            Provenance::Explicit => ProvenanceDoc::Explicit,
            Provenance::Selector(selector) => ProvenanceDoc::Selector { selector },
            Provenance::Demazure(w) => ProvenanceDoc::Demazure { w },
            Provenance::Atom(w) => ProvenanceDoc::Atom { w },
            Provenance::Ideal(generators) => ProvenanceDoc::Ideal { generators },
            Provenance::Intersection(left, right) => ProvenanceDoc::Intersection { left, right },
        };
        SubsetDoc {
            members: x.sorted_ids(),
            provenance,
        }
    }

    pub fn to_subset<'g>(&self, g: &'g CrystalGraph) -> Result<SubsetHandle<'g>> {
        let members = self
            .members
            .iter()
            .map(|id| {
                g.find(id)
                    .ok_or_else(|| Error::Document(format!("unknown element id {id}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let provenance = match self.provenance.clone() {
            ProvenanceDoc::Explicit => Provenance::Explicit,
            ProvenanceDoc::Selector { selector } => Provenance::Selector(selector),
            ProvenanceDoc::Demazure { w } => Provenance::Demazure(w),
            ProvenanceDoc::Atom { w } => Provenance::Atom(w),
            ProvenanceDoc::Ideal { generators } => Provenance::Ideal(generators),
            ProvenanceDoc::Intersection { left, right } => Provenance::Intersection(left, right),
        };
        Ok(SubsetHandle::new(g, members).with_provenance(provenance))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermDoc {
    pub wt: Vec<i64>,
    pub mult: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CharacterDoc {
    pub terms: Vec<TermDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boxes: Option<usize>,
}

impl CharacterDoc {
    pub fn from_character(c: &FormalCharacter) -> Self {
        CharacterDoc {
            terms: c
                .terms()
                .iter()
                .map(|(w, &mult)| TermDoc {
                    wt: w.coords().to_vec(),
                    mult,
                })
                .collect(),
            boxes: c.boxes(),
        }
    }

    pub fn to_character(&self) -> FormalCharacter {
        FormalCharacter::from_terms(
            self.terms.iter().map(|t| (Weight::new(t.wt.clone()), t.mult)),
            self.boxes,
        )
    }
}

/// Ideals serialize as their generator words.
pub fn ideal_to_words(weyl: &WeylGroup, ideal: &LowerOrderIdeal) -> Vec<Vec<u32>> {
    ideal.generators().iter().map(|w| weyl.labels(w)).collect()
}

pub fn ideal_from_words(weyl: &WeylGroup, words: &[Vec<u32>]) -> Result<LowerOrderIdeal> {
    let gens = words
        .iter()
        .map(|w| weyl.element_from_labels(w))
        .collect::<Result<Vec<_>>>()?;
    Ok(weyl.lower_ideal(&gens))
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "condition", rename_all = "lowercase")]
pub enum WitnessDoc {
    Empty,
    Extremal {
        i: u32,
        string: Vec<String>,
        intersection: Vec<String>,
    },
    Ideal {
        from: String,
        to: String,
        path: Vec<u32>,
        dropped_path: Vec<u32>,
        escaped: String,
    },
    Principal {
        maximal: Vec<Vec<u32>>,
    },
    Demazure {
        w: Vec<u32>,
        extra: Vec<String>,
        missing: Vec<String>,
    },
}

impl WitnessDoc {
    pub fn from_witness(g: &CrystalGraph, w: &Witness) -> Self {
        let c = g.cartan();
        let ids = |v: &[crate::crystal::ElemId]| v.iter().map(|&b| g.id(b).to_string()).collect();
        match w {
            Witness::Empty => WitnessDoc::Empty,
            Witness::String {
                node,
                string,
                intersection,
            } => WitnessDoc::Extremal {
                i: c.label(*node),
                string: ids(string),
                intersection: ids(intersection),
            },
            Witness::Path {
                from,
                to,
                path,
                escaped,
            } => WitnessDoc::Ideal {
                from: g.id(*from).to_string(),
                to: g.id(*to).to_string(),
                path: c.labels_of(path),
                dropped_path: c.labels_of(&path[1..]),
                escaped: g.id(*escaped).to_string(),
            },
            Witness::Maxima(ms) => WitnessDoc::Principal {
                maximal: ms.iter().map(|m| g.weyl().labels(m)).collect(),
            },
            Witness::NotDemazure { w, extra, missing } => WitnessDoc::Demazure {
                w: g.weyl().labels(w),
                extra: ids(extra),
                missing: ids(missing),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReportDoc {
    pub extremal: bool,
    pub ideal: bool,
    pub principal: bool,
    pub demazure: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal_generators: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

impl ReportDoc {
    pub fn from_classification(g: &CrystalGraph, c: &Classification) -> Self {
        let weyl = g.weyl();
        ReportDoc {
            extremal: c.extremal,
            ideal: c.ideal,
            principal: c.principal,
            demazure: c.demazure,
            w: c.w.as_ref().map(|w| weyl.labels(w)),
            ideal_generators: c
                .ideal_generators
                .as_ref()
                .map(|gs| gs.iter().map(|w| weyl.labels(w)).collect()),
            witness: c.witness.as_ref().map(|w| WitnessDoc::from_witness(g, w)),
        }
    }
}
