//! Exact symbolic algebra of trace polynomials in the formal variables
//! `t_i`, `t_ij`, `t_ijk`.
//!
//! Monomials form a free commutative monoid; no relation among the variables
//! is applied during multiplication. The ideal generated by the `pT`
//! functions is handled through the adapted basis in [`adapted`].

pub mod adapted;
pub mod index;
pub mod parse;
pub mod poly;
pub mod radical;
pub mod sigma;

pub use adapted::{
    bx_multiply_decompose, expand_adapted, ideal_member, ideal_part, to_adapted, x_coefficients,
    x_part, AdaptedPoly, ProductDecomposition,
};
pub use index::{index_product, split_k, DegreeVector, Monomial, Pair, Triple, XIndex};
pub use parse::{format_poly, parse_poly};
pub use poly::{eval_poly, expand_pt2, expand_pt3, TracePolynomial};
pub use radical::{radical_spot_check, RadicalReport};
pub use sigma::{f_coefficients, k_partition, sigma_mu, subset_sums};
