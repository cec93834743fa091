//! The rackkit guide, compiled so its listings run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/racks.md")]
pub mod racks {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/isomorphism.md")]
pub mod isomorphism {}

#[doc = include_str!("../../../book/src/links.md")]
pub mod links {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
