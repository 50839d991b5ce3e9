//! Multipole calculus for snarks: Tait colourings, criticality, cluster
//! morphology and the standard snark constructions.

pub mod constructions;
pub mod criticality;
pub mod error;
pub mod multipole;
pub mod structure;
pub mod tait;

pub use error::{Error, Result};
pub use multipole::{Connector, ConnectorRef, Multipole};
