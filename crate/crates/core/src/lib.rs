pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod products;
pub mod solvers;
pub mod theorems;
