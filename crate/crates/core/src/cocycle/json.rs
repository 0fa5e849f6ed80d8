//! JSON documents for cocycle tables.
//!
//! ```json
//! {"n": 3, "entries": [["s1", "x1", "1/4+th1"], ["s1", "x2", "0"]]}
//! {"n": 3, "entries": [["a(1,2)", "x1", "th1"]],
//!  "omega": [["a(1,2)", "z", "1/3"], ["z", "a(1,2)", "0"]]}
//! ```
//!
//! Braid tables must list every cell `φ(s_i, x_j)`. Pure tables may omit
//! cells, which then read as `0`. Omega rows name braids by `z`, `e`, an
//! `a(i,j)` word or an `s` word.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::braid::{center_z, BraidWord, PureWord};
use crate::error::{Error, Result};
use crate::phase::Angle;

use super::{BraidOneCocycle, OmegaTable, OneCocycle, PureOneCocycle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Braid,
    Pure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<Flavor>,
    pub entries: Vec<(String, String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub omega: Vec<(String, String, String)>,
}

fn parse_x(label: &str, n: usize) -> Result<usize> {
    let k: usize = label
        .trim()
        .strip_prefix('x')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected a generator x<k>, got {label:?}")))?;
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, rank: n });
    }
    Ok(k)
}

fn parse_s(label: &str, n: usize) -> Result<Option<usize>> {
    let Some(d) = label.trim().strip_prefix('s') else {
        return Ok(None);
    };
    let i: usize = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad braid generator {label:?}")))?;
    if i == 0 || i >= n {
        return Err(Error::BraidIndexOutOfRange {
            index: i,
            strands: n,
        });
    }
    Ok(Some(i))
}

fn parse_a(label: &str, n: usize) -> Result<(usize, usize)> {
    let w = PureWord::parse(n, label)?;
    match w.letters() {
        [l] if l.exp == 1 => Ok((l.i, l.j)),
        _ => Err(Error::Parse(format!(
            "expected a single generator a(i,j), got {label:?}"
        ))),
    }
}

fn parse_angle(s: &str) -> Result<Angle> {
    s.parse()
}

/// `z`, `e`, an `a(i,j)` word or an `s` word.
pub fn parse_braid_label(label: &str, n: usize) -> Result<BraidWord> {
    let t = label.trim();
    match t {
        "z" => center_z(n),
        "e" | "" => Ok(BraidWord::identity(n)),
        _ if t.contains("a(") => Ok(PureWord::parse(n, t)?.expand()),
        _ => BraidWord::parse(n, t),
    }
}

impl CocycleFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor.unwrap_or_else(|| {
            if self
                .entries
                .iter()
                .any(|(g, _, _)| g.trim_start().starts_with('a'))
            {
                Flavor::Pure
            } else {
                Flavor::Braid
            }
        })
    }

    pub fn cocycle(&self) -> Result<OneCocycle> {
        let n = self.n;
        if n < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n });
        }
        match self.flavor() {
            Flavor::Braid => {
                let mut table: Vec<Vec<Option<Angle>>> = vec![vec![None; n]; n - 1];
                for (g, x, v) in &self.entries {
                    let i = parse_s(g, n)?
                        .ok_or_else(|| Error::Parse(format!("expected s<i>, got {g:?}")))?;
                    let k = parse_x(x, n)?;
                    if table[i - 1][k - 1].replace(parse_angle(v)?).is_some() {
                        return Err(Error::Shape(format!("duplicate entry ({g}, {x})")));
                    }
                }
                let table = table
                    .into_iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.into_iter()
                            .enumerate()
                            .map(|(k, v)| {
                                v.ok_or_else(|| {
                                    Error::Shape(format!("missing entry (s{}, x{})", i + 1, k + 1))
                                })
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(OneCocycle::Braid(BraidOneCocycle::from_table(n, table)?))
            }
            Flavor::Pure => {
                let mut phi = PureOneCocycle::zero(n)?;
                let mut seen = BTreeMap::new();
                for (g, x, v) in &self.entries {
                    let (i, j) = parse_a(g, n)?;
                    let k = parse_x(x, n)?;
                    if seen.insert((i, j, k), ()).is_some() {
                        return Err(Error::Shape(format!("duplicate entry ({g}, {x})")));
                    }
                    phi = phi.with_entry(i, j, k, parse_angle(v)?);
                }
                Ok(OneCocycle::Pure(phi))
            }
        }
    }

    /// `None` when the document has no `omega` rows.
    pub fn omega(&self) -> Result<Option<OmegaTable>> {
        if self.omega.is_empty() {
            return Ok(None);
        }
        let mut table = OmegaTable::new(self.n);
        for (a, b, v) in &self.omega {
            let (a, b) = (parse_braid_label(a, self.n)?, parse_braid_label(b, self.n)?);
            if !a.is_pure() || !b.is_pure() {
                return Err(Error::NotPure);
            }
            table.insert(a, b, parse_angle(v)?);
        }
        Ok(Some(table))
    }

    pub fn from_cocycle(cocycle: &OneCocycle) -> Self {
        let mut entries = Vec::new();
        let (n, flavor) = match cocycle {
            OneCocycle::Braid(phi) => {
                for (i, row) in phi.table().iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        entries.push((format!("s{}", i + 1), format!("x{}", k + 1), v.to_string()));
                    }
                }
                (phi.strands(), Flavor::Braid)
            }
            OneCocycle::Pure(phi) => {
                for (&(i, j), row) in phi.rows() {
                    for (k, v) in row.iter().enumerate() {
                        entries.push((format!("a({i},{j})"), format!("x{}", k + 1), v.to_string()));
                    }
                }
                (phi.strands(), Flavor::Pure)
            }
        };
        Self {
            n,
            flavor: Some(flavor),
            entries,
            omega: Vec::new(),
        }
    }
}
