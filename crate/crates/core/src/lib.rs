//! Exact computations with braid groups, Artin's representation on free
//! groups, and circle-valued cocycle deformations of `F_n ⋊ B_n`.
//!
//! ```
//! use artin_braids::braid::{center_z, BraidWord};
//! use artin_braids::freegroup::FreeWord;
//! use artin_braids::artin::artin_auto;
//!
//! let z = center_z(3).unwrap();
//! let x1 = FreeWord::parse(3, "x1").unwrap();
//! let image = artin_auto(&z).apply(&x1).unwrap();
//! assert_eq!(image.to_string(), "x3^-1*x2^-1*x1*x2*x3");
//! ```

pub mod artin;
pub mod braid;
pub mod cocycle;
pub mod error;
pub mod freegroup;
pub mod phase;
pub mod random;

pub use error::{Error, Result};
pub use phase::Angle;
