//! Finite checks of the group-theoretic facts behind the non-linearity
//! results: quasi-unipotent matrices and logarithms, the `S, S', T`
//! relations, nilpotency of `E ⋉ F_p[E]`, the power-sum identity, freeness of
//! cyclic modules, and the digit argument modulo `p^N − 1`.

mod digits;
mod gamma;
mod linalg;
mod pgroup;
mod powersum;
mod quasi;
mod suites;

pub use digits::{digit_lemma_scan, DigitViolation, PAdicExpansion};
pub use gamma::{gamma_relations_check, random_gamma_word, word_auto, GammaLetter};
pub use pgroup::{
    central_series, central_series_brute_force, cyclic_module_is_free, default_bound, pgroup_nilpotency_index,
    CentralSeries, Freeness, PGroup, PGroupElem, BRUTE_FORCE_LIMIT, DEFAULT_WORK_BOUND, WORK_BOUND_ENV,
};
pub use powersum::{
    fp_power_sum, fp_power_sum_violations, power_sum, power_sum_identity, MPoly, PowerSum, DEFAULT_POWER_SUM_BOUND,
};
pub use quasi::{
    cyclotomic, cyclotomic_orders, euler_phi, log_scaling_check, log_scaling_identity, nilpotent_exp,
    quasi_unipotent_order, unipotent_log, MatN,
};
pub use suites::{digits_suite, logscale_suite, pgroup_suite, pingpong_suite, random_mat_word};
