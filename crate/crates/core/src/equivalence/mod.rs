//! Positive equivalence of `I − A` forms, strong shift and shift equivalence
//! witnesses, and the nilpotent constructions used to realize `NK₁` classes.

mod absorb;
mod boxes;
mod moves;
mod nilpotent;
mod witnesses;

pub use absorb::{absorb_step, AbsorbRow};
pub use boxes::{
    box_construct, box_construct_in, box_matrix, core, diamond_normalize, essential_box,
    row_measures, Diamond,
};
pub use moves::{
    apply_move, nzc_by_powers, nzc_check, nzc_violation, verify_chain, ChainBuilder, ChainReport,
    ElementaryMove, Mode, MoveChain, Side,
};
pub use nilpotent::{
    amalg_nilpotent, i_minus_shifted, is_nilpotent_gr, nilpotent_inverse, sl_row_ops, vf_reps,
    Amalgamation, VfReps,
};
pub use witnesses::{
    forced_se_lift, sse_step_chain, verify_se, verify_sse, SEWitness, SSEWitness, Semiring,
    WitnessReport,
};
