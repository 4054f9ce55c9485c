//! Finitely generated Γ-modules: presentation matrices, Smith normal form,
//! primary decomposition, conjugation and the Künneth calculus.

mod matrix;
mod module;

pub use matrix::{
    cokernel, image_basis, kernel_basis, smith_decomposition, smith_normal_form, solve_in_basis,
    subquotient, GammaMatrix, SmithDecomposition, SmithForm,
};
pub use module::{
    conjugate, direct_sum, kunneth, order_polynomial, primary_component, tensor, tor,
    FgGammaModule,
};
