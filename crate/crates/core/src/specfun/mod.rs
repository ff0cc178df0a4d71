//! Special-function evaluators: Mittag-Leffler, Wright, generalized Wright,
//! four-parameter Wright, Bessel J, and a finite-difference test of complete
//! monotonicity.
//!
//! All evaluators return an [`EvalResult`] carrying the value, an
//! absolute-error estimate, the number of series terms consumed and the code
//! path taken.  Alternating series escalate from f64 to double-double
//! summation when the largest term exceeds the partial sum by more than
//! 1e8; arguments beyond the reach of both precisions yield
//! [`Error::NonConvergence`] with the best estimate in the payload.

mod bessel;
mod cm;
mod mittag_leffler;
pub(crate) mod sum;
mod wright;

pub use bessel::bessel_j;
pub use cm::{cm_difference_test, CmReport, CmRow};
pub use mittag_leffler::{ml_asymptotic, ml_eval, ml_series, MittagLefflerOrder, ML_X_SWITCH};
pub use wright::{
    four_param_wright_eval, gen_wright_eval, wright_eval, FourParamOrder, GenWrightParams,
    WrightOrder,
};

use crate::eval::{Error, Result};

pub(crate) fn require(cond: bool, msg: &str) -> Result<()> {
    if cond { Ok(()) } else { Err(Error::domain(msg)) }
}
