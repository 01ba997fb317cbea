//! The book, compiled.
//!
//! Each module embeds one chapter of the `book/` guide as its
//! documentation, so every Rust snippet in the book runs as a doctest and
//! `cargo test --doc` keeps prose and library in sync. Rendered output
//! comes from `mdbook build book`; this module is the checked source of
//! truth for the code blocks.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/games.md")]
pub mod games {}

#[doc = include_str!("../../../book/src/forms-and-operators.md")]
pub mod forms_and_operators {}

#[doc = include_str!("../../../book/src/decomposition.md")]
pub mod decomposition {}

#[doc = include_str!("../../../book/src/solutions.md")]
pub mod solutions {}

#[doc = include_str!("../../../book/src/margins.md")]
pub mod margins {}

#[doc = include_str!("../../../book/src/experiments.md")]
pub mod experiments {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
