//! Command implementations behind the `klr` binary. Each command returns its
//! rendered output plus an exit status so that it can be tested without
//! spawning a process.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use klr_core::blocks::{classify, decompose};
use klr_core::fock::{crystal, is_kleshchev};
use klr_core::qdim::{graded_dim, kq_table, parse_sequence, LaurentPoly};
use klr_core::tables;
use klr_core::{CartanDatum, Charge, Partition, RootVector, Sign};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Plain,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "json" => Format::Json,
            "csv" => Format::Csv,
            "dot" => Format::Dot,
            "plain" => Format::Plain,
            other => bail!("unknown format {other:?}; expected json, csv, dot or plain"),
        })
    }
}

/// Rendered command output and the process exit status it implies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: 0 }
    }
}

/// Node `k` from either `--k` or `--charge`.
pub fn resolve_k(ell: usize, k: Option<usize>, charge: Option<i64>) -> Result<usize> {
    let datum = CartanDatum::new(ell)?;
    match (k, charge) {
        (Some(_), Some(_)) => bail!("give either --k or --charge, not both"),
        (Some(k), None) => {
            datum.check_node(k)?;
            Ok(k)
        }
        (None, Some(kappa)) => Ok(Charge::new(kappa, ell)?.node()),
        (None, None) => bail!("one of --k or --charge is required"),
    }
}

/// `β` as `ℓ + 1` comma-separated non-negative integers.
pub fn parse_beta(s: &str, ell: usize) -> Result<RootVector> {
    let coeffs: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().with_context(|| format!("bad coefficient {t:?} in --beta")))
        .collect::<Result<_>>()?;
    if coeffs.len() != ell + 1 {
        bail!("--beta needs {} coefficients, got {}", ell + 1, coeffs.len());
    }
    if coeffs.iter().any(|&c| c < 0) {
        bail!("--beta coefficients must be non-negative");
    }
    Ok(RootVector::new(coeffs))
}

pub fn parse_nu(s: &str, ell: usize) -> Result<Vec<usize>> {
    let nu = parse_sequence(s).with_context(|| format!("bad residue sequence {s:?}"))?;
    if let Some(&bad) = nu.iter().find(|&&i| i > ell) {
        bail!("residue {bad} is outside 0..={ell}");
    }
    Ok(nu)
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<usize> = if s.is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad part {t:?}")))
            .collect::<Result<_>>()?
    };
    Ok(Partition::new(parts)?)
}

fn seq_label(nu: &[usize]) -> String {
    if nu.is_empty() {
        "()".to_string()
    } else if nu.iter().all(|&i| i < 10) {
        nu.iter().map(|i| i.to_string()).collect()
    } else {
        nu.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub sign: Sign,
    pub i: usize,
    pub m: i64,
    pub word: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub ell: usize,
    pub k: usize,
    pub beta: Vec<i64>,
    pub nonzero: bool,
    pub defect: i64,
    pub decomposition: Option<DecompositionRecord>,
    pub rep_type: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub num_simples: Option<usize>,
}

pub fn classify_record(ell: usize, k: usize, beta: &RootVector) -> Result<ClassifyRecord> {
    let datum = CartanDatum::new(ell)?;
    let dec = decompose(&datum, k, beta)?;
    let rep = classify(&datum, k, beta)?;
    Ok(ClassifyRecord {
        ell,
        k,
        beta: beta.coeffs().to_vec(),
        nonzero: dec.is_some(),
        defect: datum.defect(k, beta),
        decomposition: dec.map(|d| DecompositionRecord {
            sign: d.sign,
            i: d.i,
            m: d.m,
            word: d.word.letters().to_vec(),
        }),
        rep_type: rep.name().to_string(),
        num_simples: rep.num_simples(),
    })
}

pub fn cmd_classify(ell: usize, k: usize, beta: &RootVector, format: Format) -> Result<Output> {
    let rec = classify_record(ell, k, beta)?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&rec)?,
        Format::Plain => {
            let mut s = rec.rep_type.clone();
            if let Some(n) = rec.num_simples {
                write!(s, " ({n} simples)")?;
            }
            if let Some(d) = &rec.decomposition {
                write!(s, "\nsign={} i={} m={} defect={} word={:?}", d.sign, d.i, d.m, rec.defect, d.word)?;
            }
            s
        }
        other => bail!("classify does not support {other:?} output"),
    };
    Ok(Output::ok(text))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DimsTable {
    pub ell: usize,
    pub k: usize,
    pub beta: Vec<i64>,
    pub sequences: Vec<String>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

/// Every realizable `ν` of content `β` with `K_q(λ, ν)` for each `λ`,
/// computed one partition per task.
fn kq_tables(charge: &Charge, beta: &RootVector) -> Result<Vec<BTreeMap<Vec<usize>, LaurentPoly>>> {
    let parts = charge.partitions_of_content(beta)?;
    Ok(parts.par_iter().map(|lambda| kq_table(charge, lambda)).collect())
}

/// Residue sequences and the square matrix of graded dimensions between them.
pub type Dims = (Vec<Vec<usize>>, Vec<Vec<LaurentPoly>>);

pub fn dims_table(ell: usize, k: usize, beta: &RootVector) -> Result<Dims> {
    let charge = Charge::new(k as i64, ell)?;
    charge.datum().check_root(beta)?;
    let tables = kq_tables(&charge, beta)?;
    let mut seqs: Vec<Vec<usize>> = tables.iter().flat_map(|t| t.keys().cloned()).collect();
    seqs.sort_unstable_by(|a, b| b.cmp(a));
    seqs.dedup();
    let entries = seqs
        .par_iter()
        .map(|a| {
            seqs.iter()
                .map(|b| tables.iter().filter_map(|t| Some(t.get(a)? * t.get(b)?)).sum())
                .collect()
        })
        .collect();
    Ok((seqs, entries))
}

pub fn cmd_dims(
    ell: usize,
    k: usize,
    beta: &RootVector,
    pair: Option<(Vec<usize>, Vec<usize>)>,
    format: Format,
) -> Result<Output> {
    let charge = Charge::new(k as i64, ell)?;
    if let Some((nu, nu2)) = pair {
        let dim = graded_dim(&charge, beta, &nu, &nu2)?;
        let text = match format {
            Format::Json => serde_json::to_string_pretty(&serde_json::json!({
                "ell": ell,
                "k": k,
                "beta": beta.coeffs(),
                "nu": nu,
                "nu2": nu2,
                "dim": dim,
            }))?,
            Format::Plain | Format::Csv => dim.to_string(),
            Format::Dot => bail!("dims does not support dot output"),
        };
        return Ok(Output::ok(text));
    }

    let (seqs, entries) = dims_table(ell, k, beta)?;
    if seqs.is_empty() {
        return Ok(Output {
            text: format!("block R^(Lambda_{k})({beta}) is zero"),
            status: 1,
        });
    }
    let labels: Vec<String> = seqs.iter().map(|s| seq_label(s)).collect();
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&DimsTable {
            ell,
            k,
            beta: beta.coeffs().to_vec(),
            sequences: labels,
            entries,
        })?,
        Format::Csv => {
            let mut s = String::from("nu");
            for l in &labels {
                write!(s, ",{l}")?;
            }
            for (l, row) in labels.iter().zip(&entries) {
                write!(s, "\n{l}")?;
                for x in row {
                    write!(s, ",{x}")?;
                }
            }
            s
        }
        Format::Plain => {
            let cells: Vec<Vec<String>> = entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            let width = cells
                .iter()
                .flatten()
                .chain(labels.iter())
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(1);
            let mut s = format!("{:width$}", "");
            for l in &labels {
                write!(s, "  {l:>width$}")?;
            }
            for (l, row) in labels.iter().zip(&cells) {
                write!(s, "\n{l:>width$}")?;
                for c in row {
                    write!(s, "  {c:>width$}")?;
                }
            }
            s
        }
        Format::Dot => bail!("dims does not support dot output"),
    };
    Ok(Output::ok(text))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CrystalEdgeRecord {
    pub source: usize,
    pub colour: usize,
    pub target: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CrystalRecord {
    pub ell: usize,
    pub charge: i64,
    pub nmax: usize,
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<CrystalEdgeRecord>,
}

pub fn cmd_crystal(ell: usize, charge: i64, nmax: usize, format: Format) -> Result<Output> {
    let ch = Charge::new(charge, ell)?;
    let graph = crystal(&ch, nmax);
    let text = match format {
        Format::Dot => {
            let mut s = String::from("digraph crystal {\n");
            for (idx, v) in graph.vertices().iter().enumerate() {
                writeln!(s, "  v{idx} [label=\"{v}\"];")?;
            }
            for e in graph.edges() {
                writeln!(s, "  v{} -> v{} [label=\"{}\"];", e.source, e.target, e.colour)?;
            }
            s.push('}');
            s
        }
        Format::Json => serde_json::to_string_pretty(&CrystalRecord {
            ell,
            charge,
            nmax,
            vertices: graph.vertices().iter().map(|v| v.parts().to_vec()).collect(),
            edges: graph
                .edges()
                .iter()
                .map(|e| CrystalEdgeRecord {
                    source: e.source,
                    colour: e.colour,
                    target: e.target,
                })
                .collect(),
        })?,
        Format::Plain => {
            let mut s = String::new();
            for n in 0..=nmax {
                let rank: Vec<String> = graph.rank(n).map(|v| v.to_string()).collect();
                writeln!(s, "{n}: {}", rank.join(" "))?;
            }
            s.trim_end().to_string()
        }
        Format::Csv => bail!("crystal does not support csv output"),
    };
    Ok(Output::ok(text))
}

pub fn cmd_kleshchev(ell: usize, charge: i64, lambda: &Partition, format: Format) -> Result<Output> {
    let ch = Charge::new(charge, ell)?;
    let yes = is_kleshchev(&ch, lambda);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "ell": ell,
            "charge": charge,
            "partition": lambda.parts(),
            "kleshchev": yes,
        }))?,
        _ => yes.to_string(),
    };
    Ok(Output::ok(text))
}

pub fn cmd_tables(selector: &str, format: Format) -> Result<Output> {
    let checks = tables::run(selector)?;
    let all_pass = checks.iter().all(|c| c.pass);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&checks)?,
        Format::Plain | Format::Csv => {
            let mut s = String::new();
            for c in &checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                writeln!(s, "{status} {}: expected {} got {}", c.name, c.expected, c.actual)?;
            }
            let failed = checks.iter().filter(|c| !c.pass).count();
            write!(s, "{} checks, {failed} failed", checks.len())?;
            s
        }
        Format::Dot => bail!("tables does not support dot output"),
    };
    Ok(Output {
        text,
        status: if all_pass { 0 } else { 1 },
    })
}
