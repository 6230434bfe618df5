pub mod cli;
pub mod corpus;
pub mod enriched;
pub mod error;
pub mod geometry;
pub mod lp;
pub mod polynomial;
pub mod poset;
pub mod rat;
pub mod report;
pub mod sample;
pub mod statistics;
pub mod transfer;
pub mod triangulation;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::PolytopeKind;
pub use polynomial::Polynomial;
pub use poset::{ChainKind, ElemSet, Limits, LinearExtension, PChain, Poset, Region};
pub use rat::{PointFn, Rat};
