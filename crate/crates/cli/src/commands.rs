use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use ktwist::orders::{
    closed_form_order, cross_check_with, BinomialRule, CrossCheckReport, GroupFamily, GroupSpec,
};
use ktwist::spinc::{boundary_check, char_numbers};
use ktwist::tate::complex::{build_complex, TateSpec, DEFAULT_DEGREE_BOUND};
use ktwist::tate::homology::{homology, HomologyTable};
use ktwist::tate::presets::{preset, PresetName, X3Image};
use ktwist::tate::relation::Assignment;
use ktwist::tate::spec_file::SpecFile;
use ktwist::BigInt;
use rayon::prelude::*;

use crate::args::{Cli, Command, CrosscheckArgs, Fault, OrderArgs, SpincArgs, TorArgs, X3Arg};
use crate::report::{CrossRow, OrderRow, Report, Results, SpincRow, TorResult};

/// A failed run with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<ktwist::Error> for CliError {
    fn from(e: ktwist::Error) -> Self {
        let code = match e {
            ktwist::Error::Internal(_) => 1,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

/// A finished run: its report and the exit code it implies.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

type Inputs = BTreeMap<String, String>;

pub fn run(cli: &Cli, command_echo: String) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let mut inputs = Inputs::new();
    let (results, agree) = match &cli.command {
        Command::Order(a) => order(a, &mut inputs)?,
        Command::Tor(a) => tor(a, &mut inputs)?,
        Command::Spinc(a) => spinc(a, &mut inputs)?,
        Command::Crosscheck(a) => crosscheck(a, &mut inputs)?,
    };
    let elapsed_ms = if cli.no_timing {
        0
    } else {
        started.elapsed().as_millis() as u64
    };
    let exit_code = if agree == Some(false) { 1 } else { 0 };
    Ok(Outcome {
        report: Report {
            command: command_echo,
            inputs,
            results,
            agree,
            elapsed_ms,
        },
        exit_code,
    })
}

fn strings<'a, I: IntoIterator<Item = &'a BigInt>>(xs: I) -> Vec<String> {
    xs.into_iter().map(ToString::to_string).collect()
}

fn route_map(r: &CrossCheckReport) -> BTreeMap<String, String> {
    r.values
        .iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect()
}

fn order(a: &OrderArgs, inputs: &mut Inputs) -> Result<(Results, Option<bool>), CliError> {
    let family: GroupFamily = a.family.parse()?;
    let parameter = a
        .parameter
        .or(family.exceptional_rank())
        .ok_or_else(|| invalid(format!("{family} needs a parameter")))?;
    inputs.insert("family".into(), family.to_string());
    inputs.insert("parameter".into(), parameter.to_string());
    inputs.insert("k".into(), a.k.to_string());
    inputs.insert("all_routes".into(), a.all_routes.to_string());
    let specs =
        a.k.values()
            .map(|k| GroupSpec::new(family, parameter, k))
            .collect::<Result<Vec<_>, _>>()?;
    let rows = specs
        .par_iter()
        .map(|g| {
            let order = closed_form_order(g)?.to_string();
            let (routes, agree) = if a.all_routes {
                let r = cross_check_with(g, BinomialRule::Standard)?;
                (Some(route_map(&r)), Some(r.agree))
            } else {
                (None, None)
            };
            Ok(OrderRow {
                group: g.group_name(),
                k: g.k(),
                order,
                routes,
                agree,
            })
        })
        .collect::<Result<Vec<_>, ktwist::Error>>()?;
    let agree = a
        .all_routes
        .then(|| rows.iter().all(|r| r.agree == Some(true)));
    Ok((Results::Order { rows }, agree))
}

fn render(h: &HomologyTable<BigInt>) -> Vec<String> {
    h.degrees.iter().map(ToString::to_string).collect()
}

fn tor(a: &TorArgs, inputs: &mut Inputs) -> Result<(Results, Option<bool>), CliError> {
    let rule = if a.highest {
        Assignment::Highest
    } else {
        Assignment::Lowest
    };
    inputs.insert("assignment".into(), format!("{rule:?}").to_lowercase());
    let (name, spec, bound, expected): (
        String,
        TateSpec<BigInt>,
        usize,
        Option<HomologyTable<BigInt>>,
    ) = match (&a.preset, &a.spec_file) {
        (_, Some(path)) => {
            inputs.insert("spec_file".into(), path.display().to_string());
            let file = SpecFile::load(path)?;
            let bound = a.bound.unwrap_or(file.bound);
            if let Some(e) = &file.expected {
                if e.len() > bound {
                    return Err(invalid(format!(
                        "spec file lists {} degrees but bound is {bound}",
                        e.len()
                    )));
                }
            }
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            (name, file.spec, bound, file.expected)
        }
        (Some(p), None) => {
            let pname: PresetName = p.parse()?;
            inputs.insert("preset".into(), pname.to_string());
            let images = match (pname, &a.c) {
                (PresetName::Koszul, Some(c)) => {
                    inputs.insert(
                        "c".into(),
                        c.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
                    );
                    Some(c.iter().map(|&x| BigInt::from(x)).collect())
                }
                (PresetName::Koszul, None) => return Err(invalid("koszul needs --c")),
                (_, Some(_)) => return Err(invalid("--c applies only to koszul")),
                (_, None) => None,
            };
            let k = match (pname, a.k) {
                (PresetName::Koszul, _) => 0,
                (_, Some(k)) => {
                    inputs.insert("k".into(), k.to_string());
                    k
                }
                (_, None) => return Err(invalid(format!("{pname} needs --k"))),
            };
            let x3 = match (a.x3, a.x3_value) {
                (_, Some(v)) => X3Image::Value(BigInt::from(v)),
                (Some(X3Arg::Dropped), None) => X3Image::Dropped,
                _ => X3Image::Binomial,
            };
            if pname == PresetName::G2 {
                let shown = match &x3 {
                    X3Image::Binomial => "binomial".to_string(),
                    X3Image::Dropped => "dropped".to_string(),
                    X3Image::Value(v) => v.to_string(),
                };
                inputs.insert("x3".into(), shown);
            }
            let p = preset::<BigInt>(pname, k, images, x3)?;
            let bound = a.bound.unwrap_or(DEFAULT_DEGREE_BOUND);
            let expected = p.expected.as_ref().map(|e| e.table(bound));
            (p.name.clone(), p.spec(rule)?, bound, expected)
        }
        (None, None) => return Err(invalid("give a preset or --spec-file")),
    };
    inputs.insert("bound".into(), bound.to_string());
    if !spec.is_consistent() {
        return Err(invalid("relation rows are not cycles"));
    }
    let cx = build_complex(spec, bound)?;
    let h = homology(&cx);
    let agree = expected
        .as_ref()
        .map(|e| e.degrees.iter().zip(&h.degrees).all(|(x, y)| x == y));
    let higher_torsion = (expected.is_none()).then(|| h.has_higher_torsion());
    let result = TorResult {
        name,
        bound,
        t_images: strings(cx.spec().t_images()),
        s_rows: cx.spec().s_rows().iter().map(strings).collect(),
        chain_ranks: (0..bound).map(|d| cx.rank(d)).collect(),
        homology: render(&h),
        expected: expected.as_ref().map(render),
        higher_torsion,
    };
    Ok((Results::Tor(result), agree))
}

fn spinc(a: &SpincArgs, inputs: &mut Inputs) -> Result<(Results, Option<bool>), CliError> {
    if a.k_range.start < 0 {
        return Err(invalid("spinc needs nonnegative k"));
    }
    inputs.insert("k_range".into(), a.k_range.to_string());
    let rows = a
        .k_range
        .values()
        .map(|k| {
            let (cp2, pnu) = char_numbers::<BigInt>(k)?;
            let boundary = if k % 2 == 1 {
                Some(boundary_check::<BigInt>(k)?.to_string())
            } else {
                None
            };
            Ok(SpincRow {
                k,
                cp2: cp2.to_string(),
                pnu: pnu.to_string(),
                boundary,
            })
        })
        .collect::<Result<Vec<_>, ktwist::Error>>()?;
    let agree = rows.iter().all(|r| {
        let k = BigInt::from(r.k);
        r.cp2 == (&k * &k * 4i64 + &k * 12i64 + 9i64).to_string()
            && r.pnu == (&k * 8i64 + 4i64).to_string()
            && r.boundary.as_deref().is_none_or(|b| b == "0")
    });
    Ok((Results::Spinc { rows }, Some(agree)))
}

/// Groups covered by a cross-check grid of the given rank.
pub fn crosscheck_groups(rank_max: u32) -> Vec<(GroupFamily, u32)> {
    let mut out = Vec::new();
    for n in 1..=rank_max {
        out.push((GroupFamily::SU, n));
        out.push((GroupFamily::Sp, n));
    }
    for m in 2..=rank_max {
        out.push((GroupFamily::SpinOdd, m));
        out.push((GroupFamily::SpinEven, m));
    }
    out.push((GroupFamily::G2, 2));
    out
}

fn crosscheck(
    a: &CrosscheckArgs,
    inputs: &mut Inputs,
) -> Result<(Results, Option<bool>), CliError> {
    inputs.insert("k_max".into(), a.k_max.to_string());
    inputs.insert("rank_max".into(), a.rank_max.to_string());
    let rule = match a.inject_fault {
        Some(Fault::OffByOneBinomial) => {
            inputs.insert("inject_fault".into(), "off-by-one-binomial".into());
            BinomialRule::OffByOne
        }
        None => BinomialRule::Standard,
    };
    let specs = crosscheck_groups(a.rank_max)
        .into_iter()
        .flat_map(|(f, p)| (1..=a.k_max).map(move |k| GroupSpec::new(f, p, k)))
        .collect::<Result<Vec<_>, _>>()?;
    let reports = specs
        .par_iter()
        .map(|g| cross_check_with(g, rule))
        .collect::<Result<Vec<_>, _>>()?;
    let failures: Vec<CrossRow> = reports
        .iter()
        .filter(|r| !r.agree)
        .map(|r| CrossRow {
            group: r.group.group_name(),
            k: r.group.k(),
            values: route_map(r),
            agree: false,
        })
        .collect();
    let agree = failures.is_empty();
    Ok((
        Results::Crosscheck {
            checked: reports.len(),
            failures,
        },
        Some(agree),
    ))
}
