//! Highest-weight crystals over a symmetrizable Cartan matrix, Demazure
//! crystals and atoms, and local tests deciding whether a subset of a
//! crystal is extremal, ideal, principal or Demazure.

pub mod character;
pub mod classify;
pub mod crystal;
pub mod demazure;
pub mod dot;
pub mod error;
pub mod io;
pub mod root_data;
pub mod select;
pub mod subset;
pub mod tableau;
pub mod verify;
pub mod weyl;

pub use character::FormalCharacter;
pub use classify::{classify, Classification, Verdict, Witness};
pub use crystal::{CrystalGraph, ElemId, Model};
pub use error::{Error, Result};
pub use root_data::{CartanData, Node, Weight};
pub use subset::{Provenance, SubsetHandle};
pub use tableau::build_tableau_crystal;
pub use weyl::{LowerOrderIdeal, WeylElement, WeylGroup};
