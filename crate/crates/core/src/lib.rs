//! Decision procedures for intuitionistic propositional logic and S4 based on
//! three-valued non-deterministic matrices and level-valuation refinement.

pub mod corpus;
pub mod decision;
pub mod formula;
pub mod nmatrix;
pub mod oracle;
pub mod refinement;
pub mod render;
pub mod tabulation;
pub mod translation;
