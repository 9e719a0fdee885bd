//! Verification outcomes and their JSON form.

use std::fmt;
use std::str::FromStr;
use crate::clock::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::FixedReal;
use crate::table1::RowId;

/// Every check the engine can run. The derived order is the report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Main1,
    PnForm,
    Satellite,
    Ode,
    Derivative,
    Bailey,
    Wan,
    CooperForms,
    AnChainFirst,
    AnChainSecond,
    Table1Exact,
    Quartic,
    WBridge(RowId),
    Eisenstein(RowId),
    EvalAtRow(RowId),
    PiCheck,
}

impl IdentityId {
    /// Ids that take no row argument, in report order.
    pub const PLAIN: [IdentityId; 13] = [
        IdentityId::Main1,
        IdentityId::PnForm,
        IdentityId::Satellite,
        IdentityId::Ode,
        IdentityId::Derivative,
        IdentityId::Bailey,
        IdentityId::Wan,
        IdentityId::CooperForms,
        IdentityId::AnChainFirst,
        IdentityId::AnChainSecond,
        IdentityId::Table1Exact,
        IdentityId::Quartic,
        IdentityId::PiCheck,
    ];

    pub fn kind(&self) -> CheckKind {
        match self {
            IdentityId::Table1Exact => CheckKind::Exact,
            IdentityId::Quartic
            | IdentityId::WBridge(_)
            | IdentityId::Eisenstein(_)
            | IdentityId::EvalAtRow(_)
            | IdentityId::PiCheck => CheckKind::Numeric,
            _ => CheckKind::Series,
        }
    }

    pub fn row(&self) -> Option<RowId> {
        match self {
            IdentityId::WBridge(r) | IdentityId::Eisenstein(r) | IdentityId::EvalAtRow(r) => Some(*r),
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdentityId::Main1 => "main1",
            IdentityId::PnForm => "pn-form",
            IdentityId::Satellite => "satellite",
            IdentityId::Ode => "ode",
            IdentityId::Derivative => "derivative",
            IdentityId::Bailey => "bailey",
            IdentityId::Wan => "wan",
            IdentityId::CooperForms => "cooper-forms",
            IdentityId::AnChainFirst => "an-chain-1",
            IdentityId::AnChainSecond => "an-chain-2",
            IdentityId::Table1Exact => "table1",
            IdentityId::Quartic => "quartic",
            IdentityId::WBridge(r) => return write!(f, "w-bridge:{r}"),
            IdentityId::Eisenstein(r) => return write!(f, "eisenstein:{r}"),
            IdentityId::EvalAtRow(r) => return write!(f, "eval:{r}"),
            IdentityId::PiCheck => "pi-check",
        };
        f.write_str(s)
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some((head, row)) = s.split_once(':') {
            let row: RowId = row.parse()?;
            return match head {
                "w-bridge" => Ok(IdentityId::WBridge(row)),
                "eisenstein" => Ok(IdentityId::Eisenstein(row)),
                "eval" => Ok(IdentityId::EvalAtRow(row)),
                _ => Err(Error::Parse(format!("unknown identity id {s:?}"))),
            };
        }
        IdentityId::PLAIN
            .iter()
            .find(|id| id.to_string() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown identity id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Series,
    Exact,
    Numeric,
}

/// The outcome of one check. `pass` holds iff `first_failure` is absent;
/// `residual` is present iff the check is numeric.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(with = "id_string")]
    pub id: IdentityId,
    pub kind: CheckKind,
    pub order_or_digits: u32,
    pub pass: bool,
    pub first_failure: Option<usize>,
    pub residual: Option<String>,
    pub elapsed_s: f64,
}

mod id_string {
    use super::IdentityId;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(id: &IdentityId, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&id.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IdentityId, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

impl VerifyReport {
    pub fn new(id: IdentityId, order_or_digits: u32, first_failure: Option<usize>, residual: Option<String>) -> Self {
        Self {
            id,
            kind: id.kind(),
            order_or_digits,
            pass: first_failure.is_none(),
            first_failure,
            residual,
            elapsed_s: 0.0,
        }
    }

    /// Numeric outcome: passes iff `|residual| < 10^(−tol_exp)`.
    pub fn numeric(id: IdentityId, digits: u32, residual: &FixedReal, tol_exp: i64) -> Self {
        let ok = residual.abs_lt_pow10(-tol_exp);
        Self::new(id, digits, (!ok).then_some(0), Some(residual.abs().to_sci_string(6)))
    }

    /// Stamp the elapsed wall time since `start`, rounded to milliseconds.
    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_s = (start.elapsed().as_secs_f64() * 1000.0).round() / 1000.0;
        self
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.kind {
            CheckKind::Numeric => "digits",
            _ => "order",
        };
        write!(
            f,
            "{:<4} {:<18} {}={:<3} first_failure={:<3} residual={:<12} {:.3}s",
            if self.pass { "PASS" } else { "FAIL" },
            self.id.to_string(),
            label,
            self.order_or_digits,
            self.first_failure.map_or("-".to_string(), |i| i.to_string()),
            self.residual.as_deref().unwrap_or("-"),
            self.elapsed_s
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_through_strings() {
        for id in IdentityId::PLAIN {
            assert_eq!(id.to_string().parse::<IdentityId>().unwrap(), id);
        }
        let e: IdentityId = "eisenstein:VII3".parse().unwrap();
        assert_eq!(e, IdentityId::Eisenstein(RowId::VII3));
        assert!("nonsense".parse::<IdentityId>().is_err());
        assert!("eval:VII9".parse::<IdentityId>().is_err());
    }

    #[test]
    fn pass_flag_tracks_first_failure() {
        let ok = VerifyReport::new(IdentityId::Main1, 40, None, None);
        assert!(ok.pass);
        let bad = VerifyReport::new(IdentityId::Main1, 40, Some(2), None);
        assert!(!bad.pass);
        let r = FixedReal::pow10(-31, 20);
        assert!(VerifyReport::numeric(IdentityId::PiCheck, 40, &r, 30).pass);
        assert!(!VerifyReport::numeric(IdentityId::PiCheck, 40, &r, 32).pass);
    }
}
