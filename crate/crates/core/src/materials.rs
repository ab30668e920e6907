//! Material parameters: atomic number, zero-temperature coherence length and
//! critical temperature.
//!
//! File format (`.materials.csv`): UTF-8, one material per line,
//! `name,Z,xi0_nm,Tc_K`. Lines starting with `#` are comments. An optional
//! header line is recognized by a non-numeric second field.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Material {
    pub name: String,
    pub atomic_number: u32,
    /// Coherence length at T = 0 (nm).
    pub xi0: f64,
    /// Critical temperature (K).
    pub tc: f64,
}

impl Material {
    pub fn new(name: &str, atomic_number: u32, xi0: f64, tc: f64) -> Self {
        Self {
            name: name.to_string(),
            atomic_number,
            xi0,
            tc,
        }
    }
}

/// The seven reference materials, ordered by atomic number.
pub fn builtin_materials() -> Vec<Material> {
    vec![
        Material::new("Al", 13, 1600.0, 1.175),
        Material::new("Nb", 41, 38.0, 9.25),
        Material::new("In", 49, 360.0, 3.41),
        Material::new("Sn", 50, 230.0, 3.72),
        Material::new("Ga", 64, 760.0, 1.083),
        Material::new("Ta", 73, 93.0, 4.47),
        Material::new("Pb", 82, 83.0, 7.2),
    ]
}

pub fn load_materials(path: impl AsRef<Path>) -> Result<Vec<Material>> {
    let file = std::fs::File::open(path)?;
    read_materials(file)
}

pub fn parse_materials(text: &str) -> Result<Vec<Material>> {
    read_materials(text.as_bytes())
}

pub fn read_materials<R: Read>(reader: R) -> Result<Vec<Material>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (index, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 4 {
            return Err(Error::Parse {
                line,
                message: format!(
                    "expected 4 fields (name,Z,xi0_nm,Tc_K), found {}",
                    record.len()
                ),
            });
        }
        if index == 0 && record[1].parse::<f64>().is_err() {
            continue;
        }

        let name = record[0].to_string();
        if name.is_empty() {
            return Err(Error::InvalidField {
                line,
                field: "name",
                value: name,
            });
        }
        let atomic_number = match record[1].parse::<u32>() {
            Ok(z) if z >= 1 => z,
            _ => {
                return Err(Error::InvalidField {
                    line,
                    field: "Z",
                    value: record[1].to_string(),
                })
            }
        };
        let xi0 = positive_field(&record[2], "xi0", line)?;
        let tc = positive_field(&record[3], "Tc", line)?;

        if !seen.insert(name.to_lowercase()) {
            return Err(Error::DuplicateName { line, name });
        }
        out.push(Material {
            name,
            atomic_number,
            xi0,
            tc,
        });
    }
    Ok(out)
}

fn positive_field(raw: &str, field: &'static str, line: u64) -> Result<f64> {
    match raw.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(Error::InvalidField {
            line,
            field,
            value: raw.to_string(),
        }),
    }
}

/// Serializes a catalog in the file format, with a header line.
pub fn to_file_format(catalog: &[Material]) -> String {
    let mut out = String::from("name,Z,xi0_nm,Tc_K\n");
    for m in catalog {
        let _ = writeln!(out, "{},{},{},{}", m.name, m.atomic_number, m.xi0, m.tc);
    }
    out
}

/// Case-insensitive lookup by name.
pub fn lookup<'a>(catalog: &'a [Material], name: &str) -> Result<&'a Material> {
    catalog
        .iter()
        .find(|m| m.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::NotFound {
            name: name.to_string(),
            available: catalog.iter().map(|m| m.name.clone()).collect(),
        })
}
