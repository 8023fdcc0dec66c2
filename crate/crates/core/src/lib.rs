//! Desk-scale laboratory for studying what frozen visual representations
//! buy a navigation policy.
//!
//! The crate simulates a 2D building world observed through 1D raycast
//! strips, encodes observations with a bank of frozen feature transforms,
//! trains small policies with an off-policy PPO variant, selects compact
//! feature sets by solving covering Boolean integer programs, and scores
//! the results with navigation metrics and nonparametric significance
//! tests.
//!
//! Modules:
//! - [`sim`]: procedural buildings, raycast rendering, tasks and rewards.
//! - [`featurebank`]: the dictionary of frozen observation transforms.
//! - [`rl`]: hand-written MLP policy, GAE, clipped-surrogate trainer.
//! - [`env`]: environments bridging `sim`+`featurebank` to `rl`, plus a
//!   toy corridor MDP used for convergence checks.
//! - [`coverset`]: max-coverage feature-set solver.
//! - [`stats`]: SPL, relative reward, rank tests, FDR, reversal reports.

pub mod coverset;
pub mod env;
pub mod featurebank;
pub mod nn;
pub mod par;
pub mod rl;
pub mod rng;
pub mod sim;
pub mod stats;
