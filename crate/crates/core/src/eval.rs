//! Common result and error types shared by every numerical evaluator.

use std::fmt;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    Asymptotic,
    Quadrature,
    ClosedForm,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Asymptotic => "asymptotic",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A numerical value together with an absolute-error estimate and the
/// code path that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// Upper-bound estimate of the absolute error; always finite unless the
    /// evaluation failed outright.
    pub abs_err: f64,
    pub terms_used: usize,
    pub method: Method,
}

impl EvalResult {
    pub fn new(value: f64, abs_err: f64, terms_used: usize, method: Method) -> Self {
        EvalResult { value, abs_err, terms_used, method }
    }

    /// A value known to machine accuracy (closed-form expressions).
    pub fn closed_form(value: f64) -> Self {
        EvalResult {
            value,
            abs_err: 4.0 * f64::EPSILON * value.abs().max(f64::MIN_POSITIVE),
            terms_used: 0,
            method: Method::ClosedForm,
        }
    }
}

/// Errors raised by the evaluators and the symbol algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the operation's domain.
    Domain(String),
    /// Neither evaluation branch reached the requested tolerance; the best
    /// estimate obtained so far is carried in the payload.
    NonConvergence { best: EvalResult, context: String },
    /// A symbol whose analyticity strip is empty, or whose strips do not
    /// intersect for a convolution.
    EmptyStrip,
    /// Two numerator gamma factors share a pole on the expansion side, so the
    /// residue series would need logarithmic terms.
    DoublePole { location: f64 },
    /// No numerator gamma factor opens the requested expansion side.
    EmptyFamily,
    /// The contour integrand decays too slowly for a truncation bound.
    SlowDecay { rate: f64 },
    /// log-gamma evaluated at a non-positive integer.
    Pole { at: f64 },
    /// The fundamental solution is unbounded at the origin (n >= alpha).
    SingularAtOrigin { n: u32, alpha: f64 },
    /// Subordination kernel and base solution do not form a valid pair.
    IncompatiblePair(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NonConvergence { best, context } => write!(
                f,
                "did not converge ({context}); best estimate {} +/- {}",
                best.value, best.abs_err
            ),
            Error::EmptyStrip => write!(f, "empty analyticity strip"),
            Error::DoublePole { location } => {
                write!(f, "two numerator gamma factors share the pole s = {location}")
            }
            Error::EmptyFamily => write!(f, "no numerator gamma factor opens that side"),
            Error::SlowDecay { rate } => {
                write!(f, "contour integrand decay rate {rate} too slow for a tail bound")
            }
            Error::Pole { at } => write!(f, "log-gamma pole at z = {at}"),
            Error::SingularAtOrigin { n, alpha } => {
                write!(f, "G_(alpha,beta,n) is singular at |x| = 0 for n = {n} >= alpha = {alpha}")
            }
            Error::IncompatiblePair(msg) => write!(f, "incompatible kernel/base pair: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// The best estimate carried by a `NonConvergence` error, if any.
    pub fn best_estimate(&self) -> Option<EvalResult> {
        match self {
            Error::NonConvergence { best, .. } => Some(*best),
            _ => None,
        }
    }
}
