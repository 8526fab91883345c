//! Machine-readable run reports. Big integers are decimal strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Results,
    /// `None` when the command makes no comparison.
    pub agree: Option<bool>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Order {
        rows: Vec<OrderRow>,
    },
    Tor(TorResult),
    Spinc {
        rows: Vec<SpincRow>,
    },
    Crosscheck {
        checked: usize,
        failures: Vec<CrossRow>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRow {
    pub group: String,
    pub k: i64,
    pub order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub routes: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorResult {
    pub name: String,
    pub bound: usize,
    pub t_images: Vec<String>,
    pub s_rows: Vec<Vec<String>>,
    pub chain_ranks: Vec<usize>,
    /// One entry per degree `0..bound`, e.g. `"Z/2"`.
    pub homology: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub higher_torsion: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpincRow {
    pub k: i64,
    pub cp2: String,
    pub pnu: String,
    /// `None` for even `k`, where the check does not apply.
    pub boundary: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossRow {
    pub group: String,
    pub k: i64,
    pub values: BTreeMap<String, String>,
    pub agree: bool,
}

impl Report {
    pub fn to_json(&self, compact: bool) -> String {
        let out = if compact {
            serde_json::to_string(self)
        } else {
            serde_json::to_string_pretty(self)
        };
        out.expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// CSV rendering; each row is one level (or one group and level).
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.results {
            Results::Order { rows } => {
                let routes: Vec<String> = rows
                    .first()
                    .and_then(|r| r.routes.as_ref())
                    .map(|m| m.keys().cloned().collect())
                    .unwrap_or_default();
                let mut header = vec!["group".to_string(), "k".into(), "order".into()];
                header.extend(routes.iter().cloned());
                if !routes.is_empty() {
                    header.push("agree".into());
                }
                w.write_record(&header)?;
                for r in rows {
                    let mut rec = vec![r.group.clone(), r.k.to_string(), r.order.clone()];
                    if let Some(m) = &r.routes {
                        rec.extend(
                            routes
                                .iter()
                                .map(|name| m.get(name).cloned().unwrap_or_default()),
                        );
                        rec.push(r.agree.unwrap_or(false).to_string());
                    }
                    w.write_record(&rec)?;
                }
            }
            Results::Tor(t) => {
                w.write_record(["degree", "chain_rank", "homology", "expected"])?;
                for (d, h) in t.homology.iter().enumerate() {
                    let exp = t
                        .expected
                        .as_ref()
                        .and_then(|e| e.get(d))
                        .cloned()
                        .unwrap_or_default();
                    w.write_record([d.to_string(), t.chain_ranks[d].to_string(), h.clone(), exp])?;
                }
            }
            Results::Spinc { rows } => {
                w.write_record(["k", "cp2", "pnu", "boundary"])?;
                for r in rows {
                    let b = r.boundary.clone().unwrap_or_else(|| "skipped".into());
                    w.write_record([r.k.to_string(), r.cp2.clone(), r.pnu.clone(), b])?;
                }
            }
            Results::Crosscheck { failures, .. } => {
                w.write_record(["group", "k", "route", "value", "agree"])?;
                for r in failures {
                    for (route, v) in &r.values {
                        w.write_record([
                            r.group.clone(),
                            r.k.to_string(),
                            route.clone(),
                            v.clone(),
                            r.agree.to_string(),
                        ])?;
                    }
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
