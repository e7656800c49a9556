//! Automorphism groups of compact Riemann surfaces and algebraic curves.
//!
//! Finite groups are dense multiplication tables ([`group`]). On top of them:
//! signatures and Riemann–Hurwitz ([`signature`]), generating-vector search
//! and counting ([`search`]), genus classification ([`classify`]),
//! maximality ([`maximality`]), superelliptic curves ([`superelliptic`]) and
//! Weierstrass gap sequences ([`weierstrass`]).

pub mod classify;
pub mod error;
pub mod exec;
pub mod group;
pub mod maximality;
pub mod search;
pub mod signature;
pub mod superelliptic;
pub mod weierstrass;

pub use error::{Error, Result};
pub use exec::Exec;
pub use group::FiniteGroup;
pub use signature::Signature;
