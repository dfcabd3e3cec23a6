//! Exact spin-representation engine for homogeneous 3-Sasakian model spaces.
//!
//! The spinor module of `ℝ^{4n−1}` is realized on the exterior algebra of the
//! anti-holomorphic generators `y_1, …, y_{2n−1}` with coefficients in the
//! field ℚ(i,√2). On top of this the crate builds the adapted 3-Sasakian frame,
//! the algebraic Killing equations, the `E_i⁻` subbundles, spinor bilinears and
//! the `sp(n−1)` isotropy computations, all with exact arithmetic.

pub mod bilinear;
pub mod clifford;
pub mod error;
pub mod field;
pub mod frame;
pub mod isotropy;
pub mod killing;
pub mod linalg;
pub mod probe;
pub mod render;
pub mod report;
pub mod spinor;
pub mod suites;
pub mod tensor;

pub use bilinear::{d_eta_bilinear, eta_bilinear, phi_from_deta, recover_sasaki, squaring, BilinearReport};
pub use clifford::{cliff_e, cliff_form, cliff_vec, so_action_on_form, spin_lift, SpinLift};
pub use error::{Error, Result};
pub use field::{rational, Rational, Scalar};
pub use frame::{build_frame, SasakiFrame};
pub use isotropy::{sp_basis, IsotropyAlgebra};
pub use killing::{KillingConfig, SpinorBasis};
pub use linalg::{KernelBasis, RowReducer, SparseVec};
pub use report::{Check, Report};
pub use spinor::{omega_power, psi_k, Monomial, SpinParams, Spinor};
pub use tensor::{Blade, CVector, Endo, Form};
