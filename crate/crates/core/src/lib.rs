//! Finite Brandt groupoids as universal algebras `(G, α, β, μ, ι; G₀)`.
//!
//! A [`FiniteAlgebra`] holds the raw structure tables of an algebra with
//! elements `1..=n` whose first `m` elements are the units. The
//! [`verify`] cascade decides how far it gets towards a groupoid;
//! [`analysis`] derives anchors, fibres and isotropy groups of a verified
//! [`Groupoid`]; [`constructions`] builds standard examples; [`morphisms`]
//! tests isomorphism and computes canonical forms; [`enumerate`] lists all
//! groupoids of a type up to isomorphism; [`io`] reads and writes the
//! structure-table file format.
//!
//! ```
//! use groupoid_core::{classify_structure, constructions, enumerate_groupoids, Level};
//!
//! let f42 = constructions::saltus_f42();
//! assert_eq!(classify_structure(&f42).level, Level::Groupoid);
//! assert_eq!(enumerate_groupoids(4, 2).unwrap().class_count(), 3);
//! ```

pub mod algebra;
pub mod analysis;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod morphisms;
pub mod verify;

pub use algebra::FiniteAlgebra;
pub use analysis::{GroupTable, IsotropyBundle};
pub use enumerate::{
    enumerate_groupoids, enumerate_groupoids_unpruned, labelled_groupoids, match_named,
    ClassificationResult,
};
pub use error::{Error, GroupAxiom, ParseError, Result};
pub use io::{parse_structure_file, to_structure_string, write_structure_file};
pub use morphisms::{are_isomorphic, canonical_form, Bijection, CanonicalKey};
pub use verify::{
    classify_structure, CheckVerdict, Diagnostic, FailureCode, Groupoid, Level, Witness,
};
