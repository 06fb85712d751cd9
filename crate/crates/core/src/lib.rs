//! Inquisitive logic toolkit: team semantics, the algebras of teams and of
//! down-sets, translations into a two-sorted language, and a multi-type
//! display calculus with a proof checker, soundness audit and cut reductions.

pub mod syntax;
pub mod teams;
pub mod algebra;
pub mod translate;
pub mod calculus;
pub mod cutelim;
pub mod corpus;
pub mod population;
pub mod selftest;
pub mod suites;
