//! Finite groups as Cayley tables and the group-theoretic data built on them.

pub mod catalog;
pub mod group;
pub mod io;
pub mod subgroup;

pub use catalog::catalog;
pub use group::FiniteGroup;
pub use io::{load_group, parse_group_file, write_group_file};
pub use subgroup::{
    abelian_basis, abelianization, maximal_subgroups_between, quotient_group, subgroup_lattice, AbelianBasis,
    QuotientGroup, Subgroup, SubgroupLattice, DEFAULT_SUBGROUP_BOUND,
};
