//! Elo ratings for football confederations, computed from World Cup
//! results, and their conversion into fractional tournament slots.
//!
//! The crate is `no_std` and only needs an allocator.
//!
//! ```
//! use confed_elo::{allocator, domain::{Confederation, RatingState, ScenarioConfig}};
//!
//! let state = RatingState::from_confeds([1576.56, 1734.71, 1574.12, 1590.36, 1806.89]);
//! let result = allocator::allocate(&state, &ScenarioConfig::default()).unwrap();
//! assert!((result.quota(Confederation::Uefa) - 17.82).abs() < 0.02);
//! ```
#![no_std]

extern crate alloc;

pub mod allocator;
pub mod domain;
pub mod engine;
pub mod error;
pub mod filter;
pub mod scenario;

pub use domain::{
    AllocationResult, Confederation, Entity, Match, Outcome, Policy, RatingState, ScenarioConfig, SeedingName,
    SeedingScheme, Stage,
};
pub use error::DataError;
