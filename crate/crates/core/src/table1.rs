//! Parameter choices for the `(VII)` family of 1/π series, embedded as exact data.
//!
//! Rows VII2 and VII7 carry only `x` and `z`; no `v`, `w` or `τ` is known
//! for them.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::Exact;
use crate::modular::Tau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowId {
    VII1,
    VII2,
    VII3,
    VII4,
    VII5,
    VII6,
    VII7,
}

impl RowId {
    pub const ALL: [RowId; 7] = [RowId::VII1, RowId::VII2, RowId::VII3, RowId::VII4, RowId::VII5, RowId::VII6, RowId::VII7];
    /// Rows with a `v`, `w`, `τ` parametrisation.
    pub const PARAMETRISED: [RowId; 5] = [RowId::VII1, RowId::VII3, RowId::VII4, RowId::VII5, RowId::VII6];

    pub fn row(self) -> &'static Table1Row {
        &rows()[self as usize]
    }
}

impl fmt::Display for RowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for RowId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RowId::ALL
            .iter()
            .find(|r| r.to_string().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown table row {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub id: RowId,
    pub x: Exact,
    pub z: Exact,
    pub v: Option<Exact>,
    pub w: Option<Exact>,
    pub tau: Option<Tau>,
}

/// `(an/ad) + (bn/bd)·√d`; `d = 1` marks a rational entry.
type Surd = (i64, i64, i64, i64, u64);

enum Entry {
    Plain(Surd),
    Cube(Surd),
}

struct RawRow {
    x: (i64, i64),
    z: (i64, i64),
    param: Option<(Surd, Entry, (u64, u64))>,
}

const RAW: [RawRow; 7] = [
    RawRow { x: (-1, 14), z: (14, 225), param: Some(((1, 1, 0, 1, 1), Entry::Plain((1, 125, 0, 1, 1)), (4, 7))) },
    RawRow { x: (9, 20), z: (-5, 196), param: None },
    RawRow {
        x: (-1, 21),
        z: (21, 484),
        param: Some(((1, 1, 1, 4, 14), Entry::Plain((188, 10648, -42, 10648, 14)), (6, 7))),
    },
    RawRow {
        x: (-1, 45),
        z: (45, 2116),
        param: Some(((5, 2, 7, 4, 2), Entry::Cube((8, 46, -3, 46, 2)), (10, 7))),
    },
    RawRow {
        x: (1, 7),
        z: (-7, 36),
        param: Some(((-3, 4, -1, 4, 7), Entry::Plain((-34, 216, 14, 216, 7)), (3, 7))),
    },
    RawRow {
        x: (1, 175),
        z: (-175, 30276),
        param: Some(((-45, 4, -17, 4, 7), Entry::Cube((-13, 174, 7, 174, 7)), (19, 7))),
    },
    RawRow { x: (-576, 3025), z: (3025, 188356), param: None },
];

fn surd((an, ad, bn, bd, d): Surd) -> Exact {
    if d == 1 {
        Exact::ratio(an * bd + bn * ad, ad * bd)
    } else {
        Exact::surd(an, ad, bn, bd, d).expect("table radicands are squarefree")
    }
}

/// All seven rows, in table order.
pub fn rows() -> &'static [Table1Row] {
    static ROWS: OnceLock<Vec<Table1Row>> = OnceLock::new();
    ROWS.get_or_init(|| {
        RAW.iter()
            .zip(RowId::ALL)
            .map(|(raw, id)| {
                let (v, w, tau) = match &raw.param {
                    Some((v, w, (tn, td))) => {
                        let w = match w {
                            Entry::Plain(s) => surd(*s),
                            Entry::Cube(s) => surd(*s).pow(3),
                        };
                        (Some(surd(*v)), Some(w), Some(Tau::new(*tn, *td).expect("positive radicand")))
                    }
                    None => (None, None, None),
                };
                Table1Row { id, x: Exact::ratio(raw.x.0, raw.x.1), z: Exact::ratio(raw.z.0, raw.z.1), v, w, tau }
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parametrisation_present_exactly_for_five_rows() {
        for row in rows() {
            let has = row.v.is_some();
            assert_eq!(has, row.w.is_some());
            assert_eq!(has, row.tau.is_some());
            assert_eq!(has, RowId::PARAMETRISED.contains(&row.id));
        }
    }

    #[test]
    fn transcribed_values() {
        let r1 = RowId::VII1.row();
        assert_eq!(r1.w, Some(Exact::ratio(1, 125)));
        assert_eq!(r1.v, Some(Exact::int(1)));
        let r4 = RowId::VII4.row();
        // ((8−3√2)/46)³ = (944 − 630√2)/97336
        assert_eq!(r4.w, Some(Exact::surd(944, 97336, -630, 97336, 2).unwrap()));
        assert_eq!("vii5".parse::<RowId>().unwrap(), RowId::VII5);
    }
}
