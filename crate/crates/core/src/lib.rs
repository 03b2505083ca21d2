//! Exact symbolic computation of Jack, interpolation Jack and binomial-type
//! polynomials over the field Q(d), together with the Sekiguchi operators and
//! the identities relating them.

pub mod binomialtype;
pub mod context;
pub mod error;
pub mod interpolation;
pub mod jack;
pub mod operators;
pub mod partitions;
pub mod polyring;
pub mod scalars;
pub mod suites;
pub mod verdict;

pub use context::{Context, DMode};
pub use error::{Error, Result};
pub use partitions::{Partition, SymPoly};
pub use scalars::{BigRat, DRat};
pub use verdict::VerdictReport;
