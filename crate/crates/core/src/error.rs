use thiserror::Error;

/// Which crystal axiom a loaded graph violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `e_i(b) = b'` iff `f_i(b') = b`; operators are partial functions.
    A,
    /// `wt(e_i b) = wt(b) + alpha_i`.
    B,
    /// String lengths are finite.
    C,
    /// `phi_i(b) = <alpha_i^vee, wt(b)> + eps_i(b)`.
    D,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::A => "a",
            Axiom::B => "b",
            Axiom::C => "c",
            Axiom::D => "d",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("unknown node label {0}")]
    UnknownNode(u32),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("weight has {found} coordinates, expected {expected}")]
    WeightRank { expected: usize, found: usize },

    #[error("dominance search exceeded height cap {0}")]
    HeightCap(u64),

    #[error("Weyl group enumeration exceeded element cap {0}")]
    ElementCap(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("axiom ({axiom}) violated at element {element} for node {node}: {detail}")]
    AxiomViolation {
        axiom: Axiom,
        element: String,
        node: u32,
        detail: String,
    },

    #[error("duplicate element id {0}")]
    DuplicateId(String),

    #[error("edge refers to unknown element {0}")]
    DanglingEdge(String),

    #[error("not a highest-weight crystal: {0}")]
    NotHighestWeight(String),

    #[error("element {0} is not extremal")]
    NotExtremal(String),

    #[error("subset is empty")]
    EmptySubset,

    #[error("lower order ideal is empty")]
    EmptyIdeal,

    #[error("subset is not extremal")]
    SubsetNotExtremal,

    #[error("subset is not ideal")]
    SubsetNotIdeal,

    #[error("characters differ; the character criterion does not apply")]
    CharacterMismatch,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("character has no type-A tableau content")]
    NotTypeA,

    #[error("subset selector: {0}")]
    Selector(String),

    #[error("malformed document: {0}")]
    Document(String),

    #[error("exhaustive sweep over {elements} elements exceeds cap {cap}")]
    ExhaustiveCap { elements: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
