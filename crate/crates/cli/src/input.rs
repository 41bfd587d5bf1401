//! Fibration and base descriptions read from the command line or JSON files.

use std::collections::BTreeMap;
use std::path::Path;

use hirzebruch::classes::RootForm;
use hirzebruch::fibrations::{Family, FibrationSpec};
use hirzebruch::genseries::BaseSpec;
use hirzebruch::pushforward::BundleSpec;
use hirzebruch::rational::parse_rational;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::{CliError, CliResult};
use crate::records::parse_exps;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub name: String,
    pub bundle: Vec<i64>,
    pub n_roots: Vec<(i64, i64)>,
    #[serde(default)]
    pub f_roots: Option<Vec<(i64, i64)>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseMonomial {
    pub exps: BTreeMap<String, u32>,
    pub value: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseFile {
    pub dim: u32,
    pub monomials: Vec<BaseMonomial>,
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_json<T: DeserializeOwned>(text: &str, path: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Json {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

fn roots(pairs: &[(i64, i64)]) -> Vec<RootForm> {
    pairs.iter().map(|&(a, b)| RootForm::new(a, b)).collect()
}

pub fn spec_from_json(text: &str, path: &str) -> CliResult<FibrationSpec> {
    let file: SpecFile = parse_json(text, path)?;
    let field = |field: &str, msg: String| CliError::Field {
        path: path.to_string(),
        field: field.to_string(),
        msg,
    };
    let bundle = BundleSpec::new(file.bundle).map_err(|e| field("bundle", e.to_string()))?;
    if let Some((i, _)) = file.n_roots.iter().enumerate().find(|(_, r)| r.0 <= 0) {
        return Err(field(
            &format!("n_roots[{i}]"),
            "the H-coefficient must be positive".into(),
        ));
    }
    FibrationSpec::custom(file.name, bundle, roots(&file.n_roots), file.f_roots.as_deref().map(roots))
        .map_err(|e| {
            let msg = e.to_string();
            field(if msg.contains("f_roots") { "f_roots" } else { "n_roots" }, msg)
        })
}

pub fn load_spec(path: &Path) -> CliResult<FibrationSpec> {
    spec_from_json(&read(path)?, &path.display().to_string())
}

/// A catalog family name, or else a path to a spec file.
pub fn resolve_target(target: &str) -> CliResult<FibrationSpec> {
    match Family::parse(target) {
        Ok(f) => Ok(f.spec()),
        Err(e) => {
            let path = Path::new(target);
            if path.is_file() {
                load_spec(path)
            } else {
                Err(e.into())
            }
        }
    }
}

pub fn base_from_json(text: &str, path: &str) -> CliResult<BaseSpec> {
    let file: BaseFile = parse_json(text, path)?;
    let mut entries = Vec::with_capacity(file.monomials.len());
    for (i, m) in file.monomials.iter().enumerate() {
        let field = |name: &str, msg: String| CliError::Field {
            path: path.to_string(),
            field: format!("monomials[{i}].{name}"),
            msg,
        };
        let mono = parse_exps(&m.exps).map_err(|e| field("exps", e))?;
        let value = parse_rational(&m.value)
            .ok_or_else(|| field("value", format!("{:?} is not num/den", m.value)))?;
        entries.push((mono, value));
    }
    BaseSpec::from_table(file.dim, entries).map_err(|e| CliError::Field {
        path: path.to_string(),
        field: "monomials".into(),
        msg: e.to_string(),
    })
}

pub fn load_base(path: &Path) -> CliResult<BaseSpec> {
    base_from_json(&read(path)?, &path.display().to_string())
}

/// `pd:<d>:<n>` is `P^d` with `L = O(n)`.
pub fn parse_base_arg(arg: &str) -> CliResult<BaseSpec> {
    let bad = || CliError::Usage(format!("base {arg:?} is not of the form pd:<d>:<n>"));
    let mut parts = arg.split(':');
    if parts.next() != Some("pd") {
        return Err(bad());
    }
    let d: u32 = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    let n: i64 = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(BaseSpec::projective_space(d, n))
}
