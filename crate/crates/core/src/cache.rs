//! On-disk cache for character tables.
//!
//! Disabled until a directory is configured with [`set_cache_dir`]. Files are
//! JSON documents carrying a version stamp; files with another version, or
//! that fail to parse, are ignored and recomputed. Writes go through a
//! temporary file in the same directory and are renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use serde_json::{json, Value};

use crate::arith::{parse_rational, format_rational, Cyclotomic};
use crate::centralizer::{multipartitions, MultiPartition, WreathTable};
use crate::combinatorics::IntPartition;
use crate::error::{Error, Result};
use crate::sn::CharacterTable;

/// Format version written into every cache file.
pub const CACHE_VERSION: u64 = 1;

/// Environment variable consulted by [`default_cache_dir`].
pub const CACHE_ENV: &str = "REPST_CACHE_DIR";

static CACHE_DIR: RwLock<Option<PathBuf>> = RwLock::new(None);

/// Enables (`Some`) or disables (`None`) the disk cache for this process.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write().unwrap() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.read().unwrap().clone()
}

/// `$REPST_CACHE_DIR`, else `$XDG_CACHE_HOME/repst`, else `$HOME/.cache/repst`,
/// else `./.repst-cache`.
pub fn default_cache_dir() -> PathBuf {
    if let Some(d) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
        return PathBuf::from(d);
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(d).join("repst");
    }
    if let Some(d) = std::env::var_os("HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(d).join(".cache").join("repst");
    }
    PathBuf::from(".repst-cache")
}

/// Removes every cache file in `dir`; returns how many were removed.
pub fn clear(dir: &Path) -> Result<usize> {
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(io_error(dir, e)),
    };
    let mut removed = 0;
    for entry in entries {
        let path = entry.map_err(|e| io_error(dir, e))?.path();
        if path.extension().is_some_and(|x| x == "json") {
            fs::remove_file(&path).map_err(|e| io_error(&path, e))?;
            removed += 1;
        }
    }
    Ok(removed)
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Cache(format!("{}: {e}", path.display()))
}

/// Reads `name` from the configured cache, returning its payload if the
/// file exists, parses, and carries the current version and `kind`.
pub(crate) fn load(name: &str, kind: &str) -> Option<Value> {
    let path = cache_dir()?.join(name);
    let text = fs::read_to_string(path).ok()?;
    let v: Value = serde_json::from_str(&text).ok()?;
    if v.get("version")?.as_u64()? != CACHE_VERSION || v.get("kind")?.as_str()? != kind {
        return None;
    }
    v.get("data").cloned()
}

/// Atomically writes `data` under `name` in the configured cache, if any.
pub(crate) fn store(name: &str, kind: &str, data: Value) -> Result<()> {
    let Some(dir) = cache_dir() else {
        return Ok(());
    };
    fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
    let doc = json!({"version": CACHE_VERSION, "kind": kind, "data": data});
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(|e| io_error(&dir, e))?;
    tmp.write_all(doc.to_string().as_bytes()).map_err(|e| io_error(&dir, e))?;
    let path = dir.join(name);
    tmp.persist(&path).map_err(|e| io_error(&path, e.error))?;
    Ok(())
}

/// Table layout: `{"n": n, "classes": [[…],…], "rows": [{"partition": […], "values": […]}]}`
/// with values listed in class order (reverse lexicographic partitions).
pub(crate) fn load_sn_table(n: u32) -> Result<Option<CharacterTable>> {
    let Some(data) = load(&format!("sn-{n}.json"), "sn-character-table") else {
        return Ok(None);
    };
    let parse = || -> Option<Vec<(IntPartition, Vec<i64>)>> {
        if data.get("n")?.as_u64()? != n as u64 {
            return None;
        }
        data.get("rows")?
            .as_array()?
            .iter()
            .map(|row| {
                let lambda: IntPartition = serde_json::from_value(row.get("partition")?.clone()).ok()?;
                let values: Vec<i64> = serde_json::from_value(row.get("values")?.clone()).ok()?;
                Some((lambda, values))
            })
            .collect()
    };
    Ok(parse().and_then(|rows| CharacterTable::from_rows(n, rows).ok()))
}

pub(crate) fn store_sn_table(table: &CharacterTable) -> Result<()> {
    if cache_dir().is_none() {
        return Ok(());
    }
    let rows: Vec<Value> = table
        .characters()
        .iter()
        .map(|(lambda, chi)| json!({"partition": lambda, "values": chi.value_list()}))
        .collect();
    let data = json!({"n": table.n(), "classes": table.classes(), "rows": rows});
    store(&format!("sn-{}.json", table.n()), "sn-character-table", data)
}

/// Table layout: `{"c": c, "m": m, "classes": […], "irreps": […], "values":
/// [[{"conductor": N, "coeffs": ["p/q", …]}, …], …]}` with rows in irrep order.
pub(crate) fn load_wreath_table(c: u32, m: u32) -> Option<WreathTable> {
    let data = load(&format!("wreath-{c}-{m}.json"), "wreath-character-table")?;
    if data.get("c")?.as_u64()? != c as u64 || data.get("m")?.as_u64()? != m as u64 {
        return None;
    }
    let classes: Vec<MultiPartition> = serde_json::from_value(data.get("classes")?.clone()).ok()?;
    let irreps: Vec<MultiPartition> = serde_json::from_value(data.get("irreps")?.clone()).ok()?;
    // Reject files written with another enumeration order.
    let expected = multipartitions(c, m);
    if classes != expected || irreps != expected {
        return None;
    }
    let values = data
        .get("values")?
        .as_array()?
        .iter()
        .map(|row| {
            row.as_array()?
                .iter()
                .map(|v| {
                    let conductor = v.get("conductor")?.as_u64()? as u32;
                    let coeffs = v
                        .get("coeffs")?
                        .as_array()?
                        .iter()
                        .map(|x| parse_rational(x.as_str()?))
                        .collect::<Option<Vec<_>>>()?;
                    Some(Cyclotomic::from_poly_coeffs(conductor, coeffs))
                })
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    if values.len() != irreps.len() || values.iter().any(|r| r.len() != classes.len()) {
        return None;
    }
    Some(WreathTable::from_parts(c, m, classes, irreps, values))
}

pub(crate) fn store_wreath_table(table: &WreathTable) -> Result<()> {
    if cache_dir().is_none() {
        return Ok(());
    }
    let values: Vec<Vec<Value>> = (0..table.irreps().len())
        .map(|i| {
            table
                .row(i)
                .iter()
                .map(|v| {
                    let coeffs: Vec<String> = v.coeffs().iter().map(format_rational).collect();
                    json!({"conductor": v.conductor(), "coeffs": coeffs})
                })
                .collect()
        })
        .collect();
    let data = json!({
        "c": table.c(),
        "m": table.m(),
        "classes": table.classes(),
        "irreps": table.irreps(),
        "values": values,
    });
    store(&format!("wreath-{}-{}.json", table.c(), table.m()), "wreath-character-table", data)
}
