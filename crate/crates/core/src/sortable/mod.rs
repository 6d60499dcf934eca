//! Permutations sorted by at most two flips: the structural test, the
//! coloured-walk bijection and the generating functions around it.

mod gf;
mod walk;

pub use gf::{
    a_table, alternate_excursion_counts, alternate_excursion_gf, alternate_model_counts, altitude_gf, bivariate_gf,
    bridge_gf, diagonal_closed_forms, diagonal_gf, excursion_gf, excursion_gf_via_motzkin, walk_gf_coefficients,
    walk_substitution_holds,
};
pub use walk::{
    all_coloured_walks, bridge_halving_check, coloured_walk_counts, decode_walk, encode_2pss, is_2pss_structural,
    is_k_pss, BridgeHalving, ColouredWalk, Step,
};
