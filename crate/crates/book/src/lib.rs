//! The guide in `book/src`, included chapter by chapter so its code
//! samples run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/discriminants.md")]
pub mod discriminants {}

#[doc = include_str!("../../../book/src/monogenicity.md")]
pub mod monogenicity {}

#[doc = include_str!("../../../book/src/class-numbers.md")]
pub mod class_numbers {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
