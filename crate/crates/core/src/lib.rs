//! Pointed finite abelian groups and their h-amalgamation bases.
//!
//! A pointed group `(G, g)` is a finite abelian group with a distinguished
//! nonzero element; homomorphisms between pointed groups must preserve the
//! point. `(G, g)` is an *h-amalgamation basis* when every span
//! `(K, k) ← (G, g) → (L, l)` of pointed homomorphisms can be completed to a
//! commuting square into some pointed group.
//!
//! The crate provides:
//!
//! * [`snf`]: exact integer matrices, Smith normal form, quotient structure;
//! * [`group`]: groups `Z/m₁ × … × Z/m_r`, elements, pointed groups,
//!   invariant factors and primary components;
//! * [`subgroups`]: generation, full lattice enumeration, sums, membership;
//! * [`hom`]: homomorphisms by generator images, kernels, images, spans;
//! * [`amalgam`]: the amalgamability criterion and the explicit pushout;
//! * [`decide`]: the bruteforce and structural deciders and the base table;
//! * [`cli`]: literal parsing and the `amalgam-bases` command.
//!
//! Runnable walkthroughs live in `examples/`; see the README for a list.
//!
//! ```
//! use amalgam_bases::{decide, parse_element, parse_group, PointedGroup};
//!
//! let g = parse_group("Z/2 x Z/2").unwrap();
//! let x = parse_element("(1,1)", &g).unwrap();
//! let pg = PointedGroup::new(g, x).unwrap();
//! assert!(!decide::is_base_structural(&pg).is_base);
//! ```

pub mod amalgam;
pub mod cli;
pub mod decide;
pub mod error;
pub mod group;
pub mod hom;
pub mod snf;
pub mod subgroups;

pub use amalgam::{amalgamability_condition, pushout, verify_square, AmalgamResult};
pub use cli::{parse_element, parse_group};
pub use decide::{is_base_bruteforce, is_base_structural, BaseVerdict, Method};
pub use error::{Error, Result};
pub use group::{FinAbGroup, GroupElement, PointedGroup};
pub use hom::{Homomorphism, Span};
pub use snf::{quotient_invariants, smith_normal_form, IntMatrix, SnfResult};
pub use subgroups::{all_subgroups, generate, subgroup_sum, Subgroup, DEFAULT_BOUND};
