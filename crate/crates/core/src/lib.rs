//! Finite unital rings as explicit operation tables.
//!
//! Rings are built from constructors, from presentations over `Z_{p^k}`, or
//! from RINGTAB files, and then analysed: radicals, ring-theoretic
//! properties, Peirce decompositions, isomorphism tests and exhaustive
//! enumeration of small orders.

pub mod constructors;
pub mod corpus;
pub mod decomposition;
pub mod enumeration;
pub mod error;
pub mod expr;
pub mod presentation;
pub mod properties;
pub mod radicals;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{ElementSet, RingTable};
