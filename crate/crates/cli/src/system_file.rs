//! JSON system files:
//!
//! ```json
//! { "polys": ["x^2 - 3*x + 2", ["-1", "1"]] }
//! ```
//!
//! Each entry is either an expression or ascending rational-literal
//! coefficients.

use std::path::Path;

use bezout_subres::{parse_poly, parse_rat, Poly, PolySystem};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub polys: Vec<PolyEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum PolyEntry {
    Expr(String),
    Coeffs(Vec<String>),
}

impl PolyEntry {
    pub fn to_poly(&self) -> Result<Poly, String> {
        match self {
            PolyEntry::Expr(text) => parse_poly(text).map_err(|e| format!("'{text}': {e}")),
            PolyEntry::Coeffs(items) => items
                .iter()
                .map(|s| parse_rat(s).map_err(|e| format!("'{s}': {e}")))
                .collect::<Result<Vec<_>, _>>()
                .map(Poly::from_coeffs),
        }
    }
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn polys(&self) -> Result<Vec<Poly>, String> {
        self.polys
            .iter()
            .enumerate()
            .map(|(i, entry)| entry.to_poly().map_err(|e| format!("polys[{i}]: {e}")))
            .collect()
    }
}

pub fn load_polys(path: &Path) -> Result<Vec<Poly>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
    SystemFile::parse(&text)
        .and_then(|file| file.polys())
        .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))
}

pub fn inline_polys(exprs: &[String]) -> Result<Vec<Poly>, CliError> {
    exprs
        .iter()
        .map(|text| parse_poly(text).map_err(|e| CliError::Failure(format!("'{text}': {e}"))))
        .collect()
}

pub fn to_system(polys: Vec<Poly>) -> Result<PolySystem, CliError> {
    PolySystem::new(polys).map_err(|e| CliError::Failure(e.to_string()))
}
