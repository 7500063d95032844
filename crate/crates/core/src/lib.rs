//! Monogenicity of trinomials `x^N + A·x + B` and class numbers of the
//! quadratic fields attached to their discriminants.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: integer utilities (square roots, Kronecker symbols,
//!   primality, budgeted factorization, squarefree tests).
//! * [`trinomial`]: discriminants, irreducibility certificates, the local
//!   JKS index test and the monogenicity verdict.
//! * [`quadfield`]: binary quadratic forms and class numbers of real and
//!   imaginary quadratic fields.
//! * [`families`]: analyzers for the four trinomial families and their
//!   class-number divisibility claims.

pub mod arith;
pub mod families;
pub mod quadfield;
pub mod trinomial;

mod fp_poly;
mod poly;

pub use arith::{FactorBudget, FactoredInt, SquarefreeStatus};
pub use families::{ClaimStatus, Family, FamilyConfig, FamilyRecord, Params};
pub use quadfield::{ClassNumberResult, QuadField, QuadForm};
pub use trinomial::{IrreducibilityVerdict, MonogenicityVerdict, Trinomial};
