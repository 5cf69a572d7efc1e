pub mod algebra;
pub mod certificates;
pub mod cm;
pub mod curve;
pub mod engine;
pub mod jet;
pub mod ode;
