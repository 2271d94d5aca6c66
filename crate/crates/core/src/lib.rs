//! Combinatorial model of the compactified moduli space of particles on the
//! Poincaré disk: bubble trees, their flip identifications, the strata and
//! face posets they label, chamber tilings, divisor censuses and the
//! minimal building set.

pub mod canonical;
pub mod census;
pub mod closure;
pub mod enumerate;
pub mod error;
pub mod factor;
pub mod ops;
pub mod polytope;
pub mod poset;
pub mod render;
pub mod tree;
pub mod verify;
pub mod wire;

pub use canonical::{canonicalize, oriented_form};
pub use census::{building_set, divisor_census, BuildingSetElement, Collision, DivisorCensus, DivisorClass};
pub use closure::{chamber_adjacency, chamber_closure_poset, euler_characteristic, face_poset, Adjacency, ChamberClosure};
pub use enumerate::{chambers, enumerate_all, enumerate_strata, f_vector, EnumConfig};
pub use error::{Error, Result};
pub use factor::{factors, ModuliFactor};
pub use ops::{flip, merge_bubble, Stratum};
pub use polytope::{associahedron_poset, catalan, cyclohedron_poset, Bracketing};
pub use poset::{is_graded, is_pure, poset_f_vector, poset_isomorphic, FacePoset};
pub use tree::{BoundaryItem, BubbleKind, BubbleTree, Disk, InteriorItem, Label, NodePath, ParticleId, Step};
