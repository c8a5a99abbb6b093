//! Volumes of convex hulls of a convex body and its translated or reflected
//! copies.
//!
//! The planar part ([`geom2`], [`functionals`], [`radon`]) is exact over the
//! rationals; [`nd`] evaluates the same functionals numerically for polytopes,
//! balls and ellipsoids in dimensions up to six; [`search`] minimizes the
//! planar functionals over convex `m`-gons.

pub mod error;
pub mod functionals;
pub mod geom2;
pub mod nd;
pub mod radon;
pub mod rational;
pub mod search;

pub use error::{Error, Result};
pub use rational::Rational;
