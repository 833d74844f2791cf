//! Mycielskian construction and degree/distance topological indices.
//!
//! ```
//! use mycielski::{generate, mycielskian, indices, FamilySpec};
//!
//! let c5 = generate(&"cycle:5".parse::<FamilySpec>().unwrap()).unwrap();
//! let grotzsch = mycielskian(&c5).unwrap();
//! assert_eq!((grotzsch.mu().n(), grotzsch.mu().m()), (11, 20));
//! assert_eq!(indices::dd_mycielskian_closed(&c5).unwrap(), 650);
//! assert_eq!(indices::degree_distance(grotzsch.mu()).unwrap(), 650);
//! ```

pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod indices;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use generators::{enumerate_connected, erdos_renyi_connected, generate, FamilySpec};
pub use graph::{all_pairs_distances, diameter, DistanceMatrix, Graph};
pub use indices::{IndexReport, RandicBounds};
pub use transform::{mycielskian, MycielskianLayout, Role};
pub use verify::{verify_corpus, ClaimId, VerificationOutcome};
