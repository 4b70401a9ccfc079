//! Integer linear algebra: characteristic polynomials, Smith form,
//! primitivity of nonnegative matrices, nilpotent triangularization and
//! Perron eigendata.

pub mod charpoly;
pub mod perron;
pub mod primitive;
pub mod snf;
pub mod triangularize;

pub use charpoly::{adjugate, berkowitz, charpoly, det, eval_at_matrix, int_det};
pub use perron::{perron_eigendata, PerronData};
pub use primitive::{primitive_by_wielandt, primitive_test_int, Primitivity};
pub use snf::{kernel_basis, smith_normal_form, unimodular_inverse, Cokernel, SnfResult};
pub use triangularize::{is_nilpotent, is_strictly_upper, nilpotent_triangularize};
