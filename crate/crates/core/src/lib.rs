pub mod classifier;
pub mod cost;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod instance;
pub mod io;
pub mod poly;
pub mod reductions;
pub mod solvers;
