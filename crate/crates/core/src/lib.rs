//! Construction, analysis and classification of linear completely regular
//! codes with covering radius 1 over finite fields of order at most 256.
//!
//! ```
//! use crcodes::{classify::classify, constructions::kron_code, Budget, FieldSpec};
//!
//! let f = FieldSpec::prime(2).unwrap();
//! let code = kron_code(&f, 2, 2).unwrap();
//! let cert = classify(&code, &Budget::default()).unwrap();
//! assert_eq!(cert.case.as_str(), "D2_KRONECKER");
//! assert_eq!((cert.n_a, cert.m_b), (Some(2), Some(2)));
//! ```

pub mod classify;
pub mod cli;
pub mod code;
pub mod constructions;
pub mod error;
pub mod gf;
pub mod json;
pub mod linalg;
pub mod regularity;

pub use code::{Budget, LinearCode};
pub use error::{Error, Result};
pub use gf::{FieldElement, FieldSpec};
pub use linalg::{Matrix, MonomialMap, Vector};
