//! Symanzik polynomials U, V of the parametric representation, their Moyal
//! counterparts U*, Re V*, Im V*, and the limits linking them to the Tutte and
//! Bollobás–Riordan polynomials.
//!
//! Schwinger parameters are the variables `a.<edge id>`; the noncommutativity
//! parameter is `theta`. Momenta are exact rational 4-vectors, so V and V* come
//! out as polynomials in α (and θ) with rational coefficients.

mod momentum;
mod moyal;
mod symanzik;
mod theta;

pub use momentum::{ExternalAssignment, Momentum};
pub use moyal::{
    commutative_limit, face_phase, nc_u, nc_u_delcon, nc_u_from_multivariate_br, nc_v_imag, nc_v_real,
    theta_degree,
};
pub use symanzik::{
    parametric_integrand, symanzik_u, symanzik_u_delcon, symanzik_u_via_det, symanzik_v, symanzik_v_side,
    u_from_multivariate_tutte, Integrand,
};
pub use theta::{half_theta_pow, theta, ThetaTracked};
