//! Kauffman bracket skein algebras of the torus, the once-punctured torus and
//! the four-punctured sphere, with tools for testing positivity of bases
//! built from one-variable polynomial sequences.

pub mod curves;
pub mod element;
pub mod error;
pub mod laurent;
pub mod polyseq;
pub mod positivity;
pub mod ptorus;
pub mod report;
pub mod s04;
pub mod torus;
pub mod verify;

pub use curves::{CurveClass, MappingClass};
pub use element::{Label, SkeinElement};
pub use error::{Result, SkeinError};
pub use laurent::LaurentPoly;
pub use polyseq::{Basis, ChebKind, Poly1, PolySeq};
pub use report::{PositivityReport, Product, Witness};
