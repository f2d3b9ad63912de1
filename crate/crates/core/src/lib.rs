//! Exact computations with cylindric symmetric functions, fusion rings of
//! symmetric tensors and the quantum cohomology of Grassmannians.
//!
//! ```
//! use cylsym::grassmannian::{cyl_schur, GwContext};
//! use cylsym::{Basis, BoxedPartition, Context};
//!
//! let ctx = Context::new(4, 2)?;
//! let gw = GwContext::new(ctx)?;
//! let box22 = BoxedPartition::parse(ctx, "2,2")?;
//! let empty = BoxedPartition::parse(ctx, "-")?;
//! assert_eq!(gw.get(&box22, &box22, &empty), 1.into());
//!
//! let s = cyl_schur(&BoxedPartition::parse(ctx, "2,1")?, 1, &empty);
//! assert!(!s.convert(Basis::S).is_zero());
//! # Ok::<(), cylsym::Error>(())
//! ```

pub mod affine;
pub mod cyclotomic;
pub mod cylindric;
pub mod error;
pub mod fusion;
pub mod grassmannian;
pub mod partitions;
pub mod report;
pub mod scalar;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};
pub use report::Report;
pub use partitions::{AlcoveWeight, BoxedPartition, Context, Partition};
pub use scalar::Scalar;
pub use verify::{run_suite, Suite};
pub use symfun::{Basis, SymFunc, TensorSymFunc};

/// Symmetric functions with exact rational coefficients.
pub type SymFuncQ = SymFunc<num_rational::BigRational>;
/// Cyclotomic numbers with exact rational coefficients.
pub type CycloQ = cyclotomic::CycloNum<num_rational::BigRational>;
