//! Structure of the glider ring: lattice maps between subgroups and `G^ab`,
//! restriction chains, the idempotents `ε_H`, nilpotency witnesses,
//! obstruction probes and group comparison.

pub mod chain;
pub mod decompose;
pub mod distinguish;
pub mod epsilon;
pub mod lattice_maps;
pub mod probes;
pub mod witness;

pub use chain::{chain_of_idempotent, sub_g, ChainData, ChainLevel, SubGroups};
pub use decompose::{decompose, DecomposeOptions, DecompositionReport, Verdict};
pub use distinguish::{distinguish, DistinguishReport, GroupInvariants};
pub use epsilon::{epsilon_chain, epsilon_subgroup, EpsilonIdempotent};
pub use lattice_maps::{a_iota, generated_in_abelianization, l_of, product_set};
pub use probes::{class2_linearization, obstruction_probe, r_probe, Linearization, ObstructionReport, RProbeReport};
pub use witness::{nilpotency_witness, witness_probe, NilpotencyWitness, WitnessSummary};
