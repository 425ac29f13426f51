//! Locating the Euclid dependency data.
//!
//! The edge list is read from `$EUCLID_DEPS` if set, else from
//! `data/euclid.deps` at the workspace root. The rest-frame slice table that
//! ships in `data/` is reference data for comparison only.

use std::path::PathBuf;

use crate::corpus::{parse_auto, DependencyCorpus};
use crate::error::{Error, Result};

pub const EUCLID_ENV: &str = "EUCLID_DEPS";

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn euclid_path() -> PathBuf {
    std::env::var_os(EUCLID_ENV).map(PathBuf::from).unwrap_or_else(|| data_dir().join("euclid.deps"))
}

/// `Ok(None)` when no dataset file exists.
pub fn load_euclid() -> Result<Option<DependencyCorpus>> {
    let path = euclid_path();
    match std::fs::read_to_string(&path) {
        Ok(text) => Ok(Some(parse_auto(&text)?)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(Error::Io(format!("{}: {e}", path.display()))),
    }
}

/// The published rest-frame slice table as `(node, layer)` pairs.
pub fn reference_slices() -> Result<Vec<(String, u32)>> {
    let path = data_dir().join("euclid_rest_frame.csv");
    let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    rdr.records()
        .map(|r| {
            let r = r.map_err(|e| Error::Csv(e.to_string()))?;
            let layer = r[1].parse().map_err(|_| Error::Csv(format!("bad layer {:?}", &r[1])))?;
            Ok((r[0].to_string(), layer))
        })
        .collect()
}
