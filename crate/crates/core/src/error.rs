use thiserror::Error;

use crate::rings::RingSpec;

/// Errors raised by ring, ideal, semigroup and category operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring mismatch: {left} vs {right}")]
    SpecMismatch { left: RingSpec, right: RingSpec },

    #[error("{op} is not supported for {family}")]
    UnsupportedFamily { op: &'static str, family: RingSpec },

    #[error("invalid ring: {0}")]
    InvalidSpec(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "ill-defined morphism {dom} -> {cod} with image {image}: \
         r = {witness} annihilates the domain generator but not the image"
    )]
    IllDefinedMorphism {
        dom: String,
        cod: String,
        image: String,
        witness: String,
    },

    #[error("cannot compose: codomain {cod} differs from domain {dom}")]
    Composition { cod: String, dom: String },

    #[error("hom-set enumeration needs a finite ring, got {0}")]
    UnsupportedEnumeration(RingSpec),

    #[error("malformed table: {0}")]
    Format(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
