//! Decision procedures for finite simplicial complexes.
//!
//! Complexes are stored as canonical facet lists over a labelled vertex set
//! of at most 64 vertices, each face being a bit-subset. On top of that the
//! crate provides
//!
//! * f- and h-vectors, purity, and face enumeration ([`SimplicialComplex`]);
//! * links and face deletions;
//! * minimal nonfaces, Alexander duals and linear quotients ([`MonomialSet`]);
//! * shelling verification and depth-first shelling search ([`ShellingOrder`]);
//! * shedding faces, vertex-decomposability and k-decomposability.
//!
//! ```
//! use sdecomp_core::{SearchStrategy, SimplicialComplex, VertexSet};
//!
//! let vs = VertexSet::new(["a", "b", "c", "d", "e", "f", "g"])?;
//! let nonfaces = ["ab", "ac", "bc", "cd", "de", "df", "fg"]
//!     .iter()
//!     .map(|s| vs.face(s.chars().map(String::from)))
//!     .collect::<Result<Vec<_>, _>>()?;
//! let d = SimplicialComplex::from_nonfaces(vs, &nonfaces)?;
//! assert_eq!(d.facets().len(), 8);
//! assert_eq!(d.h_vector()?.0, vec![1, 4, 3, 0]);
//!
//! let order = d.shelling_order(&SearchStrategy::Default)?.expect("shellable");
//! assert!(d.is_shelling_order(&order.facets)?);
//! assert!(d.is_vertex_decomposable()?);
//! # Ok::<(), sdecomp_core::Error>(())
//! ```

mod complex;
mod decomposability;
mod duality;
mod error;
mod face;
mod face_ops;
mod shelling;
pub mod transversal;

pub use complex::{ComplexKind, FVector, HVector, SimplicialComplex};
pub use duality::MonomialSet;
pub use error::{Error, Result};
pub use face::{Face, Subsets, VertexSet, Vertices, MAX_VERTICES};
pub use shelling::{SearchStrategy, ShellingCondition, ShellingOrder};
