//! The ring spanned by irreducible length-one gliders: canonical keys,
//! products, cyclic-semigroup orbits, induction and restriction.

pub mod context;
pub mod key;
pub mod orbit;
pub mod ring;
pub mod serialize;

pub use context::{GliderRing, GroupContext, Inclusion};
pub use key::{canonical_key, random_key, GliderKey};
pub use orbit::{semigroup_orbit, OrbitResult, DEFAULT_MAX_ITER};
pub use ring::RingElement;
