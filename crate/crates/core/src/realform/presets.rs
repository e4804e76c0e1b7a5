//! The shipped table of named real forms and the group-name parser.

use std::sync::OnceLock;

use serde::Deserialize;

use super::{RealFormData, VoganDiagram};
use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, CartanType, RootSystem};

pub const PRESETS_TOML: &str = include_str!("presets.toml");

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    name: String,
    #[serde(rename = "type")]
    cartan_type: String,
    #[serde(default)]
    involution: Option<Vec<usize>>,
    #[serde(default)]
    painted: Vec<usize>,
}

#[derive(Debug, Deserialize)]
struct Table {
    form: Vec<Entry>,
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: String,
    pub diagram: VoganDiagram,
}

fn presets() -> &'static [Preset] {
    static CELL: OnceLock<Vec<Preset>> = OnceLock::new();
    CELL.get_or_init(|| {
        let table: Table = toml::from_str(PRESETS_TOML).expect("preset table parses");
        table
            .form
            .into_iter()
            .map(|e| {
                let ct: CartanType = e.cartan_type.parse().expect("preset Cartan type");
                let inv = match e.involution {
                    Some(v) => v.into_iter().map(|p| p - 1).collect(),
                    None => (0..ct.rank()).collect(),
                };
                let diagram = VoganDiagram::new(ct, inv, e.painted.into_iter().map(|p| p - 1))
                    .unwrap_or_else(|err| panic!("preset {}: {err}", e.name));
                Preset { name: e.name, diagram }
            })
            .collect()
    })
}

pub fn all_presets() -> &'static [Preset] {
    presets()
}

pub fn preset_names() -> Vec<&'static str> {
    presets().iter().map(|p| p.name.as_str()).collect()
}

fn normalize(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase()
}

fn parse_indices(s: &str, what: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(Error::InvalidType(format!("bad {what} index {t:?}"))),
        })
        .collect()
}

/// Resolves a group name to a Vogan diagram. Accepts preset names (case and whitespace
/// insensitive), `compact(B3)`, and `vogan(A3;inv=3,2,1;paint=2)` with 1-based nodes.
pub fn parse_diagram(name: &str) -> Result<(Option<String>, VoganDiagram)> {
    let key = normalize(name);
    if let Some(p) = presets().iter().find(|p| normalize(&p.name) == key) {
        return Ok((Some(p.name.clone()), p.diagram.clone()));
    }
    let inner = |prefix: &str| key.strip_prefix(prefix).and_then(|s| s.strip_suffix(')'));
    if let Some(t) = inner("compact(") {
        let ct: CartanType = t.to_uppercase().parse()?;
        return Ok((None, VoganDiagram::compact(ct)));
    }
    if let Some(body) = inner("vogan(") {
        let mut parts = body.split(';');
        let ct: CartanType = parts.next().unwrap_or_default().to_uppercase().parse()?;
        let mut inv: Vec<usize> = (0..ct.rank()).collect();
        let mut paint = Vec::new();
        for part in parts {
            match part.split_once('=') {
                Some(("inv", v)) => inv = parse_indices(v, "involution")?,
                Some(("paint", v)) => paint = parse_indices(v, "painted")?,
                _ => return Err(Error::InvalidType(format!("unrecognized Vogan diagram field {part:?}"))),
            }
        }
        return Ok((None, VoganDiagram::new(ct, inv, paint)?));
    }
    Err(Error::UnknownPreset(name.to_string()))
}

/// Root system and real form data for a group name (see [`parse_diagram`]).
pub fn parse_group(name: &str) -> Result<(RootSystem, RealFormData)> {
    let (label, vd) = parse_diagram(name)?;
    let rs = build_root_system(vd.cartan_type())?;
    let mut rf = RealFormData::new(&vd, &rs)?;
    rf.name = label;
    Ok((rs, rf))
}
