//! Front end for `apolar-core`: the polynomial grammar, the `apolar`
//! subcommands and their JSON reports.

pub mod commands;
pub mod field_spec;
pub mod parse;
pub mod report;
pub mod repro;

use apolar_core::limits;

pub use field_spec::FieldSpec;

/// Exit status for a verification failure.
pub const EXIT_MISMATCH: u8 = 1;
/// Exit status for usage, parse and precondition errors.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}", .error.render(.source_text))]
    Parse { source_text: String, error: parse::ParseError },
    #[error("{0}")]
    Core(#[from] apolar_core::Error),
}

impl CliError {
    /// Every error the CLI reports maps to the usage/precondition status.
    pub fn exit_code(&self) -> u8 {
        EXIT_USAGE
    }
}

/// Parses `APOLAR_BUDGET`: either a single number capping both resources or
/// a comma list of `columns=N` and `steps=M`.
pub fn parse_budget(spec: &str) -> Result<(Option<usize>, Option<usize>), String> {
    let spec = spec.trim();
    if let Ok(n) = spec.parse::<usize>() {
        return Ok((Some(n), Some(n)));
    }
    let mut cols = None;
    let mut steps = None;
    for part in spec.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("malformed budget entry '{part}'"))?;
        let v: usize = v.trim().parse().map_err(|_| format!("budget value '{v}' is not a number"))?;
        match k.trim() {
            "columns" => cols = Some(v),
            "steps" => steps = Some(v),
            other => return Err(format!("unknown budget key '{other}', expected columns or steps")),
        }
    }
    Ok((cols, steps))
}

/// Applies `APOLAR_BUDGET` from the environment, if set.
pub fn apply_budget_from_env() -> Result<(), String> {
    let Ok(spec) = std::env::var("APOLAR_BUDGET") else { return Ok(()) };
    let (cols, steps) = parse_budget(&spec).map_err(|e| format!("APOLAR_BUDGET: {e}"))?;
    if let Some(c) = cols {
        limits::set_max_columns(c);
    }
    if let Some(s) = steps {
        limits::set_max_groebner_steps(s);
    }
    Ok(())
}
