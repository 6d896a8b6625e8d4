pub mod braid;
pub mod invariants;
pub mod poly;
pub mod fixture;
pub mod enumeration;
pub mod catalog;
pub mod analysis;
pub mod cli;
