//! Exact computation of finite multiple zeta values and finite multiple
//! polylogarithms as residues mod p^n, symbolic verification of the
//! binomial-sum polynomial identities behind them, and a registry of
//! closed-form congruences and functional equations swept over prime ranges.

pub mod eval;
pub mod exact;
pub mod index;
pub mod modular;
pub mod poly;
pub mod polyid;
pub mod registry;
pub mod runner;

pub use index::Index;
pub use modular::ResidueValue;
