//! One function per subcommand, each producing a [`Report`].

use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::character::{has_shared_table, install_table, mn_char, shared_table, char_table, CharTable};
use crate::counting::{self, CountTable, ProgressionSpec};
use crate::error::{Error, Result};
use crate::kronecker::{kron_g, tensor_square};
use crate::partition::{Family, Partition};
use crate::saxlcert::{certify, certify_all, verify_conjecture, VerifyMode};
use crate::stats::{caret_vanishing_fraction, random_char_experiment, zero_density_of};

use super::cache::{cache_load, cache_store};
use super::config::{Format, RunConfig};
use super::{Command, CountsCommand, StatsCommand};

/// A rendered-on-demand result: a JSON document and a TSV view of it.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub json: Value,
    pub tsv: Vec<Vec<String>>,
}

impl Report {
    fn new(json: Value, tsv: Vec<Vec<String>>) -> Self {
        Report { json, tsv }
    }

    /// TSV of the top-level fields, nested values written as compact JSON.
    fn fields(json: Value) -> Self {
        let mut rows = vec![vec!["key".to_string(), "value".to_string()]];
        if let Value::Object(map) = &json {
            for (k, v) in map {
                rows.push(vec![k.clone(), cell(v)]);
            }
        }
        Report { json, tsv: rows }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self.tsv.iter().map(|r| r.join("\t") + "\n").collect(),
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

type Outcome = Result<std::result::Result<Report, String>>;

pub(crate) fn run(command: &Command, cfg: &RunConfig) -> Outcome {
    let budget = cfg.budget();
    let report = match command {
        Command::Char { lambda, nu } => {
            let value = mn_char(lambda, nu)?;
            let json = json!({"lambda": lambda, "nu": nu, "value": value.to_string()});
            Report::new(json, vec![
                vec!["lambda".into(), "nu".into(), "value".into()],
                vec![lambda.to_string(), nu.to_string(), value.to_string()],
            ])
        }
        Command::Table { n } => {
            budget.check_scan("character table", *n)?;
            let (table, source) = obtain_table(*n, cfg)?;
            table_report(&table, source)
        }
        Command::Kron { lambda, mu, nu } => {
            budget.check_scan("Kronecker coefficient", lambda.size())?;
            let g = kron_g(lambda, mu, nu)?;
            let json = json!({"lambda": lambda, "mu": mu, "nu": nu, "g": g.to_string()});
            Report::new(json, vec![
                vec!["lambda".into(), "mu".into(), "nu".into(), "g".into()],
                vec![lambda.to_string(), mu.to_string(), nu.to_string(), g.to_string()],
            ])
        }
        Command::Phi { mu } => {
            budget.check_scan("tensor square", mu.size())?;
            let spec = tensor_square(mu)?;
            budget.check_time("tensor square")?;
            let mut mult = Map::new();
            let mut rows = vec![vec!["lambda".to_string(), "multiplicity".to_string()]];
            for (l, g) in spec.multiplicities.iter().filter(|(_, g)| g.bits() > 0) {
                mult.insert(l.to_string(), Value::String(g.to_string()));
                rows.push(vec![l.to_string(), g.to_string()]);
            }
            let json = json!({
                "mu": mu,
                "n": mu.size(),
                "support_size": mult.len(),
                "missing": spec.missing(),
                "multiplicities": mult,
            });
            Report::new(json, rows)
        }
        Command::Certify { lambda, mu, all } => match (lambda, mu, all) {
            (None, None, Some(mu)) => {
                budget.check_scan("certificates", mu.size())?;
                let certs = certify_all(mu)?;
                let mut rows = vec![vec!["lambda".into(), "char_value".into(), "verdict".into()]];
                for c in &certs {
                    rows.push(vec![c.lambda.to_string(), c.char_value.to_string(), cell(&to_json(&c.verdict))]);
                }
                let certified = certs.iter().filter(|c| c.char_value.bits() > 0).count();
                let json = json!({
                    "mu": mu,
                    "hook_class": mu.principal_hooks().as_partition(),
                    "total": certs.len(),
                    "certified": certified,
                    "certificates": to_json(&certs),
                });
                Report::new(json, rows)
            }
            (Some(lambda), Some(mu), None) => Report::fields(to_json(&certify(lambda, mu)?)),
            _ => return Ok(Err("certify takes `λ μ` or `--all μ`".into())),
        },
        Command::Saxl { family, k, exact } => {
            let mode = if *exact { VerifyMode::Exact } else { VerifyMode::CertificatesOnly };
            let rep = verify_conjecture(*family, *k, mode, &budget)?;
            Report::fields(to_json(&rep))
        }
        Command::Counts(c) => match counts(c)? {
            Ok(r) => r,
            Err(usage) => return Ok(Err(usage)),
        },
        Command::Stats(s) => stats(s, cfg)?,
        Command::Families { k } => families(*k)?,
    };
    Ok(Ok(report))
}

/// The shared table, else the disk cache, else a fresh computation that is
/// then written back to the cache.
fn obtain_table(n: usize, cfg: &RunConfig) -> Result<(Arc<CharTable>, &'static str)> {
    if has_shared_table(n) {
        return Ok((shared_table(n), "memory"));
    }
    if let Some(dir) = &cfg.cache_dir {
        match cache_load(dir, n) {
            Ok(Some(t)) => {
                log::info!("cache hit: character table n = {n} from {}", dir.display());
                return Ok((install_table(t), "cache"));
            }
            Ok(None) => log::info!("cache miss: character table n = {n}"),
            Err(e) => log::warn!("{e}; recomputing"),
        }
    }
    let start = Instant::now();
    let table = char_table(n);
    log::info!("computed character table n = {n} in {:.2?}", start.elapsed());
    cfg.budget().check_time("character table")?;
    if let Some(dir) = &cfg.cache_dir {
        match cache_store(dir, &table) {
            Ok(p) => log::info!("stored {}", p.display()),
            Err(e) => log::warn!("could not write cache: {e}"),
        }
    }
    Ok((install_table(table), "computed"))
}

fn table_report(table: &CharTable, source: &str) -> Report {
    let d = table.dim();
    let rows: Vec<Value> = (0..d)
        .map(|r| Value::Array(table.row(r).iter().map(|v| Value::String(v.to_string())).collect()))
        .collect();
    let json = json!({
        "n": table.n(),
        "source": source,
        "order": "lex-decreasing",
        "partitions": table.partitions(),
        "values": rows,
    });
    let mut tsv = vec![vec!["lambda".to_string(), "nu".to_string(), "value".to_string()]];
    for (r, lam) in table.partitions().iter().enumerate() {
        for (c, nu) in table.partitions().iter().enumerate() {
            tsv.push(vec![lam.to_string(), nu.to_string(), table.value_at(r, c).to_string()]);
        }
    }
    Report::new(json, tsv)
}

fn series_report(table: &CountTable) -> Report {
    let mut json = to_json(table.kind());
    let values: Vec<String> = table.values().iter().map(|v| v.to_string()).collect();
    if let Value::Object(map) = &mut json {
        map.insert("limit".into(), json!(values.len().saturating_sub(1)));
        map.insert("values".into(), json!(values));
    }
    let mut tsv = vec![vec!["index".to_string(), "value".to_string()]];
    tsv.extend(values.iter().enumerate().map(|(i, v)| vec![i.to_string(), v.clone()]));
    Report::new(json, tsv)
}

fn counts(c: &CountsCommand) -> Result<std::result::Result<Report, String>> {
    let report = match c {
        CountsCommand::Pi { limit } => series_report(&counting::pi(*limit)),
        CountsCommand::Pik { k, limit } => series_report(&counting::pi_k(*k, *limit)?),
        CountsCommand::Pprime { set, a, m, steps, limit } => match (set, a, m) {
            (Some(set), None, None) => series_report(&counting::pi_prime_r(set, *limit)?),
            (None, Some(a), Some(m)) => {
                let spec = ProgressionSpec::new(*a, *m, *steps)?;
                match (steps, limit) {
                    (Some(_), _) => series_report(&counting::pi_prime_r(&spec.finite_set()?, *limit)?),
                    (None, Some(limit)) => series_report(&counting::pi_prime_inf(spec, *limit)?),
                    (None, None) => return Ok(Err("an infinite progression needs a limit".into())),
                }
            }
            _ => return Ok(Err("pprime takes --set R or --a A --m M".into())),
        },
        CountsCommand::Threshold { set } => {
            let threshold = counting::monotonicity_threshold(set)?;
            let json = json!({"set": set, "sum": set.iter().sum::<usize>(), "threshold": threshold});
            Report::fields(json)
        }
        CountsCommand::Hr { n } => Report::fields(to_json(&counting::hr_estimate(*n)?)),
    };
    Ok(Ok(report))
}

fn stats(s: &StatsCommand, cfg: &RunConfig) -> Result<Report> {
    let budget = cfg.budget();
    Ok(match s {
        StatsCommand::Zeros { n, values } => {
            budget.check_scan("zero density", *n)?;
            let (table, source) = obtain_table(*n, cfg)?;
            let mut json = to_json(&zero_density_of(&table, values));
            if let Value::Object(map) = &mut json {
                map.insert("source".into(), json!(source));
            }
            Report::fields(json)
        }
        StatsCommand::Caret { k } => Report::fields(to_json(&caret_vanishing_fraction(*k, &budget)?)),
        StatsCommand::Random { n, trials, mode } => {
            Report::fields(to_json(&random_char_experiment(*n, *trials, *mode, cfg.seed)?))
        }
    })
}

fn families(k: usize) -> Result<Report> {
    if k == 0 {
        return Err(Error::InvalidArgument("families need k ≥ 1".into()));
    }
    let mut entries = Vec::new();
    let mut tsv = vec![vec!["family".to_string(), "n".into(), "shape".into(), "principal_hooks".into()]];
    for fam in Family::ALL {
        let Ok(shape) = fam.shape(k) else { continue };
        let hooks: Vec<usize> = shape.principal_hooks().hooks().to_vec();
        let hook_partition: Partition = shape.principal_hooks().as_partition();
        tsv.push(vec![fam.to_string(), shape.size().to_string(), shape.to_string(), hook_partition.to_string()]);
        entries.push(json!({
            "family": fam,
            "n": shape.size(),
            "shape": shape,
            "durfee": shape.durfee(),
            "principal_hooks": hooks,
        }));
    }
    Ok(Report::new(json!({"k": k, "families": entries}), tsv))
}
