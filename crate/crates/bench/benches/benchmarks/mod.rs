pub mod formulas;
pub mod homology;
pub mod oracles;
