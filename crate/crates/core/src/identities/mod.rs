//! One verification routine per identity.
//!
//! Series identities are compared coefficientwise over exact fields. Every
//! summand indexed by `n` has valuation at least `n` in the series variable,
//! so summing `n ≤ N` is enough for a comparison through order `N`; the
//! builders check this before truncating.

mod an_chain;
mod classical;
mod main1;
mod table;

pub use an_chain::{an_chain_first, an_chain_second, verify_an_chain, AnChain};
pub use classical::{
    bailey_wan_lhs, bailey_wan_rhs, cooper_forms, verify_bailey_wan, verify_cooper_forms, BaileyWan,
};
pub use main1::{
    derivative_cross_check, derivative_sides, main1_lhs, main1_lhs_clausen, main1_rhs, main1_sides, ode_residuals,
    pn_form_lhs, satellite_series, verify_derivative_identity, verify_derivative_with, verify_equivalent_pn_form,
    verify_main1, verify_main1_with, verify_ode_annihilation, verify_ode_with, verify_pn_form_with, verify_satellite,
    verify_satellite_with, OdeOperator,
};
pub use table::{
    eval_at_row, eval_at_row_with, main1_numeric_sides, quartic_roots, verify_quartic_example, verify_table1_exact,
};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::modular::{eisenstein_row_check, w_bridge_check};
use crate::poly::PolyQ;
use crate::report::{IdentityId, VerifyReport};
use crate::scalar::Scalar;
use crate::series::{ratfun_series, Series};
use crate::table1::RowId;

/// Inputs shared by all checks; each check reads the fields it needs.
#[derive(Clone, Debug, PartialEq)]
pub struct RunParams {
    /// Series truncation order `N`.
    pub order: usize,
    /// Decimal working precision `P`.
    pub digits: u32,
    /// `(x, y)` for the two-variable Legendre generating functions.
    pub bailey_point: (Rational, Rational),
}

impl Default for RunParams {
    fn default() -> Self {
        Self { order: 40, digits: 40, bailey_point: (rat(3, 5), rat(4, 5)) }
    }
}

/// The checks run by "verify all", in report order: every identity check,
/// the modular bridge and the Eisenstein check on each parametrised row.
pub fn verify_all_ids() -> Vec<IdentityId> {
    let mut ids: Vec<IdentityId> = IdentityId::PLAIN.iter().copied().filter(|id| *id != IdentityId::PiCheck).collect();
    ids.extend(RowId::PARAMETRISED.iter().map(|&r| IdentityId::WBridge(r)));
    ids.extend(RowId::PARAMETRISED.iter().map(|&r| IdentityId::Eisenstein(r)));
    ids.sort();
    ids
}

/// Preconditions of a check on the shared parameters, tested without
/// computing anything.
pub fn check_params(id: IdentityId, params: &RunParams) -> Result<()> {
    if let Some(row) = id.row() {
        if row.row().tau.is_none() {
            return Err(Error::InvalidParameters(format!("row {row} has no v, w, τ parametrisation")));
        }
    }
    match id {
        IdentityId::CooperForms => require_order(params.order, 7),
        IdentityId::Ode => require_order(params.order, 4),
        IdentityId::Table1Exact => Ok(()),
        IdentityId::Quartic => require_digits(params.digits, 30),
        IdentityId::EvalAtRow(_) => require_digits(params.digits, 20),
        IdentityId::WBridge(_) | IdentityId::Eisenstein(_) | IdentityId::PiCheck => require_digits(params.digits, 10),
        _ => require_order(params.order, 1),
    }
}

/// Run one check by id.
pub fn run(id: IdentityId, params: &RunParams) -> Result<VerifyReport> {
    let n = params.order;
    let p = params.digits;
    match id {
        IdentityId::Main1 => verify_main1(n),
        IdentityId::PnForm => verify_equivalent_pn_form(n),
        IdentityId::Satellite => verify_satellite(n),
        IdentityId::Ode => verify_ode_annihilation(n),
        IdentityId::Derivative => verify_derivative_identity(n),
        IdentityId::Bailey => verify_bailey_wan(BaileyWan::Bailey, &params.bailey_point.0, &params.bailey_point.1, n),
        IdentityId::Wan => verify_bailey_wan(BaileyWan::Wan, &params.bailey_point.0, &params.bailey_point.1, n),
        IdentityId::CooperForms => verify_cooper_forms(n),
        IdentityId::AnChainFirst => verify_an_chain(AnChain::First, n),
        IdentityId::AnChainSecond => verify_an_chain(AnChain::Second, n),
        IdentityId::Table1Exact => verify_table1_exact(),
        IdentityId::Quartic => verify_quartic_example(p),
        IdentityId::WBridge(r) => w_bridge_check(r, p),
        IdentityId::Eisenstein(r) => eisenstein_row_check(r, p),
        IdentityId::EvalAtRow(r) => eval_at_row(r, p),
        IdentityId::PiCheck => Err(Error::InvalidParameters("pi-check needs caller-supplied a, b and w".into())),
    }
}

fn require_order(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameters(format!("order must be at least {min}, got {n}")));
    }
    Ok(())
}

fn require_digits(p: u32, min: u32) -> Result<()> {
    if p < min {
        return Err(Error::InvalidParameters(format!("digits must be at least {min}, got {p}")));
    }
    Ok(())
}

/// Lowest of several optional failure indices.
fn earliest(found: impl IntoIterator<Item = Option<usize>>) -> Option<usize> {
    found.into_iter().flatten().min()
}

/// Fails unless the series has zero constant term, so that its `n`-th
/// power cannot reach below order `n`.
fn ensure_positive_valuation<T: Scalar>(s: &Series<T>) -> Result<()> {
    if s.coeff(0).is_zero_elem() {
        Ok(())
    } else {
        Err(Error::InvalidParameters("series argument must vanish at the origin".into()))
    }
}

fn ratfun(num: &[i64], den: &PolyQ, n: usize) -> Result<Series<Rational>> {
    ratfun_series(&PolyQ::from_ints(num), den, n)
}

/// `Σ_{m ≤ N} c_m·t^m` for integer coefficients and an argument vanishing at 0.
fn sum_with_arg(coeffs: &[BigInt], arg: &Series<Rational>) -> Result<Series<Rational>> {
    ensure_positive_valuation(arg)?;
    let n = arg.order();
    let outer = Series::from_coeffs(coeffs.iter().take(n + 1).cloned().map(Rational::from_integer).collect())?;
    outer.compose(arg)
}
