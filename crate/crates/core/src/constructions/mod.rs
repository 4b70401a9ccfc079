//! Explicit matrix families: the `C_k`/`F_k` family with its positivity
//! repair, the `V⁻¹HV` embedding of a nilpotent class, and the `NK₁`
//! example over `ℤ[C4]` with its linearization and the `K`/`L` pair.

mod embed;
mod family;
mod nk1;

pub use embed::{bar_trivial, embed_assemble, grow_corner, scan_alpha, u_times_t_pow, Embedding};
pub use family::{
    cokernel_at_one, cyclic_cokernel, family_ck_fk, repair_family, replay_states, scan_exponents,
    Family, FamilyParams, Repair,
};
pub use nk1::{
    constant_obstruction, higman_linearize, kl_displayed, kl_generic_mismatch, kl_pair,
    kl_pair_with, kl_product, nk1_entries, nk1_example_c4, nk1_normalized_entries, scan_kl, u_band,
    Higman, KLPair, Nk1Example,
};
