//! Reading digraphs and decompositions from files or stdin.

use std::io::Read;

use earlab_core::ear::{find_le_decomposition, validate_with};
use earlab_core::io::{parse_digraph, DigraphJson};
use earlab_core::{Digraph, EarDecomposition, EarMode, LeOutcome};
use serde_json::Value;

use crate::output::{CliError, Status};

pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::invalid(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{path}: {e}")))
}

/// Unwraps the payload of a previous command's output, if that is what `v` is.
fn unwrap_envelope(v: Value) -> Value {
    match v {
        Value::Object(mut m) if m.contains_key("status") && m.contains_key("payload") => {
            m.remove("payload").unwrap_or(Value::Null)
        }
        other => other,
    }
}

/// A digraph given as an edge list, as `{"n", "arcs"}` JSON, or as the
/// output of another command carrying a `digraph` field. A decomposition
/// travelling alongside it is returned too.
pub fn load_digraph(path: &str) -> Result<(Digraph, Option<EarDecomposition>), CliError> {
    let text = read_source(path)?;
    if !text.trim_start().starts_with('{') {
        return Ok((parse_digraph(&text)?, None));
    }
    let v = unwrap_envelope(serde_json::from_str(&text).map_err(earlab_core::Error::from)?);
    let (graph, decomposition) = match v {
        Value::Object(mut m) if m.contains_key("digraph") => {
            let g = m.remove("digraph").unwrap_or(Value::Null);
            (g, m.remove("decomposition"))
        }
        other => (other, None),
    };
    let json: DigraphJson = serde_json::from_value(graph).map_err(earlab_core::Error::from)?;
    let d = Digraph::try_from(json)?;
    let e = match decomposition {
        Some(Value::Null) | None => None,
        Some(e) => Some(serde_json::from_value(e).map_err(earlab_core::Error::from)?),
    };
    Ok((d, e))
}

pub fn load_decomposition(path: &str) -> Result<EarDecomposition, CliError> {
    let v = unwrap_envelope(
        serde_json::from_str(&read_source(path)?).map_err(earlab_core::Error::from)?,
    );
    let v = match v {
        Value::Object(mut m) if m.contains_key("decomposition") => {
            m.remove("decomposition").unwrap_or(Value::Null)
        }
        other => other,
    };
    Ok(serde_json::from_value(v).map_err(earlab_core::Error::from)?)
}

pub struct DecompositionRequest<'a> {
    pub file: Option<&'a str>,
    pub embedded: Option<EarDecomposition>,
    pub min_len: usize,
    pub mode: EarMode,
    pub budget: u64,
}

/// An explicit `--decomposition` wins, then one carried by the input if it
/// is valid and long enough, then a fresh search.
pub fn resolve_decomposition(
    d: &Digraph,
    req: DecompositionRequest,
) -> Result<EarDecomposition, CliError> {
    if let Some(path) = req.file {
        return load_decomposition(path);
    }
    if let Some(e) = req.embedded {
        let paths_ok = req.mode == EarMode::AllowCycles || !e.has_cycle_ears();
        if e.certifies_le(req.min_len) && paths_ok && validate_with(d, &e, req.mode).is_ok() {
            return Ok(e);
        }
    }
    match find_le_decomposition(d, req.min_len, req.budget, req.mode)? {
        LeOutcome::Found(e) => Ok(e),
        LeOutcome::ProvablyNone => Err(CliError::new(
            Status::InvalidInput,
            format!(
                "no ear decomposition with every ear of length at least {}",
                req.min_len
            ),
        )),
    }
}

/// Comma- or space-separated vertex ids.
pub fn parse_vertices(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::invalid(format!("bad vertex `{t}`")))
        })
        .collect()
}
