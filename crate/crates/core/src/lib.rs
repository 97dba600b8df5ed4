//! Executable group theory for mod-`p` Galois images of elliptic curves.
//!
//! The crate covers the subgroup taxonomy of `GL_2(F_p)` (Cartan, Borel,
//! normalizers, exceptional images), the homothety guarantees available in the
//! irreducible and reducible cases, the uniform bound formulas, and an
//! exhaustive small-prime oracle that checks every group-theoretic claim.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod error;
pub mod fp;
pub mod gl2;
pub mod irreducible;
pub mod oracle;
pub mod reducible;
pub mod subgroups;

pub use error::{Error, Result};
pub use fp::{PrimeModulus, Scalar};
pub use gl2::{Mat2, PglClass, ProjLine};
pub use subgroups::{classify, ClassificationReport, Exceptional, Subgroup};
