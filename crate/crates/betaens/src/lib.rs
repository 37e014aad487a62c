//! Matrix models and characteristic-polynomial statistics for the circular
//! and Jacobi beta ensembles.
//!
//! The crate builds the CMV and Jacobi matrix models from random Verblunsky
//! coefficients, evaluates the log characteristic-polynomial linear statistic
//! by two independent routes (eigenvalues vs. Szegő recursion), and provides
//! the samplers, quadrature oracles and statistical tests needed to verify
//! the product-law identities and the joint central limit theorem at desk
//! scale.

pub mod distributions;
pub mod ensembles;
pub mod error;
pub mod kahan;
pub mod matrix_models;
pub mod opuc;
pub mod oracle;
pub mod quad;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};
