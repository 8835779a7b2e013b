//! Combinatorics of partitions, symbols and the level-2 Fock space crystal,
//! used to predict weak Harish-Chandra series of unipotent modules of finite
//! unitary groups.

pub mod crystal;
pub mod error;
pub mod fixtures;
pub mod hc;
pub mod partitions;
pub mod symbols;
pub mod verify;

pub use crystal::{BoxNode, ChargedBipartition, CrystalGraph, ReducedWord, Weight};
pub use error::{Error, Result};
pub use hc::{HcContext, SeriesPrediction};
pub use partitions::{BetaSet, Bipartition, HookSpec, Partition};
pub use symbols::{ChargedAbacus, EPeriod, ElementaryStep, OpKind, Symbol};
