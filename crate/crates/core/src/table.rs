//! Knot tables: one braid per line, `name strands letters...`, with `#`
//! starting a comment line.

use std::path::Path;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotEntry {
    pub name: String,
    pub braid: BraidWord,
}

pub fn parse_table(text: &str) -> Result<Vec<KnotEntry>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let name = fields.next().unwrap().to_string();
        let strands = fields
            .next()
            .ok_or_else(|| Error::Parse(format!("line {}: missing strand count", lineno + 1)))?;
        let strands: usize = strands.parse().map_err(|_| {
            Error::Parse(format!("line {}: bad strand count '{strands}'", lineno + 1))
        })?;
        let rest: Vec<&str> = fields.collect();
        let braid = BraidWord::parse(&rest.join(" "), strands).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("line {}: {m}", lineno + 1)),
            other => other,
        })?;
        out.push(KnotEntry { name, braid });
    }
    Ok(out)
}

pub fn load_table(path: &Path) -> Result<Vec<KnotEntry>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_table(&text)
}

pub fn lookup<'a>(table: &'a [KnotEntry], name: &str) -> Result<&'a KnotEntry> {
    table
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownKnot(name.to_string()))
}
