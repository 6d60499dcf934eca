//! Worst cases of the flip: shadows, the bandwidth bound and its sharpness,
//! the image of `T^(n-2)`, and skew-layered permutations of maximal cost.

mod bandwidth;
mod penultimate;
mod shadow;

pub use bandwidth::{coverage_witness, diagram_dots, DiagramDots};
pub use penultimate::{
    conjectured_cost, im_n_minus_2_count, is_im_n_minus_2, preimage_n_minus_2, skew_condition_check,
    skew_conjecture_report, SkewReport, SkewRow, MAX_SKEW_N,
};
pub use shadow::{
    all_words, hasse, path_family, poset_leq, rho_paths, shadow, verify_bandwidth_theorem,
    verify_majorization, verify_shadow_monotonicity, Hasse, PathFamily, ShadowWord, MAX_HASSE_NODES,
    MAX_VERIFY_N,
};
