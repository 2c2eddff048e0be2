//! Euclidean rhythms: generation, evenness, deepness and classification of
//! cyclic onset patterns.
//!
//! ```
//! use euclidean_rhythms::{bjorklund, deepness::is_erdos_deep};
//!
//! let tresillo = bjorklund(3, 8).unwrap();
//! assert_eq!(tresillo.to_box().as_str(), "x..x..x.");
//! assert!(is_erdos_deep(&tresillo));
//! ```

pub mod applications;
pub mod classify;
pub mod corpus;
pub mod deepness;
pub mod error;
pub mod evenness;
pub mod generators;
pub mod numtheory;
pub mod report;
pub mod rhythm;
pub mod svg;
pub mod verify;

pub use error::{Result, RhythmError};
pub use generators::{bjorklund, euclidean_recursive, euclidean_rhythm, EvenAlgorithm};
pub use rhythm::{BoxPattern, DistanceSeq, NecklaceClass, Rhythm};
