//! Base graphs, catalog multipoles, composition families and snark classes.

pub mod basic;
pub mod blueprint;
pub mod classes;
pub mod families;
pub mod family;
pub mod products;

pub use basic::*;
pub use blueprint::{Blueprint, Built, Class, Premise, ProofTrace};
pub use classes::*;
pub use families::*;
pub use family::{build, build_blueprint, component, verify_family_uncolourable, Family, FamilySpec};
pub use products::*;
