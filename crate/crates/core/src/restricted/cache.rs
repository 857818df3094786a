//! On-disk cache of torus-fixed structure constants.
//!
//! One JSON file per `(type, p, r)`, holding a header that pins the
//! conventions the numbers depend on and the sparse triples `(i, j, k, c)`
//! meaning `b_i * b_j` has coefficient `c` on `b_k`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::torus::TorusFixedAlgebra;
use crate::error::{Error, Result};
use crate::root_system::RootDatum;

pub const FORMAT_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "HYPERALG_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".hyperalg-cache";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheHeader {
    pub format_version: u32,
    pub type_tag: String,
    pub p: u32,
    pub r: u32,
    pub root_order_hash: String,
    pub sign_convention_id: String,
}

impl CacheHeader {
    pub fn for_setting(datum: &RootDatum, p: u32, r: u32) -> Self {
        CacheHeader {
            format_version: FORMAT_VERSION,
            type_tag: datum.type_tag().to_string(),
            p,
            r,
            root_order_hash: datum.root_order_hash(),
            sign_convention_id: datum.sign_convention_id().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CacheFile {
    header: CacheHeader,
    /// Number of basis pairs whose products are recorded.
    pairs: usize,
    triples: Vec<(u32, u32, u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CacheInfo {
    pub path: String,
    pub header: CacheHeader,
    pub pairs: usize,
    pub triples: usize,
    pub complete: bool,
}

/// Flag first, then the environment, then a directory under the working directory.
pub fn resolve_cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    match std::env::var_os(CACHE_DIR_ENV) {
        Some(v) if !v.is_empty() => PathBuf::from(v),
        _ => PathBuf::from(DEFAULT_CACHE_DIR),
    }
}

pub fn cache_path(dir: &Path, datum: &RootDatum, p: u32, r: u32) -> PathBuf {
    dir.join(format!("{}_p{p}_r{r}.json", datum.type_tag()))
}

fn read(path: &Path) -> Result<CacheFile> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn validate(file: &CacheFile, expected: &CacheHeader, path: &Path) -> Result<()> {
    if &file.header != expected {
        return Err(Error::CacheMismatch(format!(
            "{} was written for {:?} but the current setting is {:?}; run `cache invalidate` and rebuild",
            path.display(),
            file.header,
            expected
        )));
    }
    Ok(())
}

/// Loads cached structure constants into `alg`. Returns the number of pairs
/// loaded, or `None` if there is no cache file.
pub fn load(alg: &TorusFixedAlgebra, dir: &Path) -> Result<Option<usize>> {
    let path = cache_path(dir, alg.datum(), alg.p(), alg.r());
    if !path.exists() {
        return Ok(None);
    }
    let file = read(&path)?;
    validate(&file, &CacheHeader::for_setting(alg.datum(), alg.p(), alg.r()), &path)?;
    let n = alg.dim() as u32;
    let mut rows: std::collections::BTreeMap<(u32, u32), Vec<(u32, u32)>> = Default::default();
    for &(i, j, k, c) in &file.triples {
        if i >= n || j >= n || k >= n || c >= alg.p() {
            return Err(Error::CacheMismatch(format!("{} holds an out-of-range entry", path.display())));
        }
        rows.entry((i, j)).or_default().push((k, c));
    }
    // pairs with an empty product are recorded only through the pair count,
    // so a complete file restores them as well
    if file.pairs == (n as usize) * (n as usize) {
        for i in 0..n {
            for j in 0..n {
                rows.entry((i, j)).or_default();
            }
        }
    }
    let loaded = rows.len();
    for ((i, j), mut entry) in rows {
        entry.sort_unstable();
        alg.insert_product(i as usize, j as usize, entry);
    }
    if loaded == alg.dim() * alg.dim() {
        // every pair is present, so this only builds the flat lookup
        alg.fill_table()?;
    }
    Ok(Some(loaded))
}

/// Writes every structure constant computed so far. The file is written to
/// a temporary name first and renamed into place.
pub fn store(alg: &TorusFixedAlgebra, dir: &Path) -> Result<CacheInfo> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, alg.datum(), alg.p(), alg.r());
    let computed = alg.computed_products();
    let mut triples = Vec::new();
    for ((i, j), entry) in &computed {
        for &(k, c) in entry.iter() {
            triples.push((*i, *j, k, c));
        }
    }
    let file = CacheFile {
        header: CacheHeader::for_setting(alg.datum(), alg.p(), alg.r()),
        pairs: computed.len(),
        triples,
    };
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec(&file)?)?;
    fs::rename(&tmp, &path)?;
    Ok(info_of(&path, &file, alg.dim()))
}

/// Fills the whole table (loading any existing cache first) and stores it.
/// Returns the info and whether the file already held the complete table.
pub fn build(alg: &TorusFixedAlgebra, dir: &Path) -> Result<(CacheInfo, bool)> {
    let loaded = load(alg, dir)?;
    let n = alg.dim();
    if loaded == Some(n * n) {
        let path = cache_path(dir, alg.datum(), alg.p(), alg.r());
        let file = read(&path)?;
        return Ok((info_of(&path, &file, n), true));
    }
    alg.fill_table()?;
    Ok((store(alg, dir)?, false))
}

pub fn inspect(dir: &Path, datum: &RootDatum, p: u32, r: u32, dim: usize) -> Result<Option<CacheInfo>> {
    let path = cache_path(dir, datum, p, r);
    if !path.exists() {
        return Ok(None);
    }
    let file = read(&path)?;
    validate(&file, &CacheHeader::for_setting(datum, p, r), &path)?;
    Ok(Some(info_of(&path, &file, dim)))
}

/// Removes the cache file; true if one existed.
pub fn invalidate(dir: &Path, datum: &RootDatum, p: u32, r: u32) -> Result<bool> {
    let path = cache_path(dir, datum, p, r);
    if path.exists() {
        fs::remove_file(&path)?;
        Ok(true)
    } else {
        Ok(false)
    }
}

fn info_of(path: &Path, file: &CacheFile, dim: usize) -> CacheInfo {
    CacheInfo {
        path: path.display().to_string(),
        header: file.header.clone(),
        pairs: file.pairs,
        triples: file.triples.len(),
        complete: file.pairs == dim * dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{root_datum, TypeTag};

    fn scratch_dir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("hyperalg-cache-test-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        dir
    }

    #[test]
    fn round_trip_and_idempotent_build() {
        let dir = scratch_dir("rt");
        let d = root_datum(TypeTag::A1);
        let alg = TorusFixedAlgebra::new(&d, 3, 1).unwrap();
        let (info, hit) = build(&alg, &dir).unwrap();
        assert!(!hit);
        assert!(info.complete);
        let again = TorusFixedAlgebra::new(&d, 3, 1).unwrap();
        let (_, hit) = build(&again, &dir).unwrap();
        assert!(hit);
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                assert_eq!(alg.product(i, j).unwrap(), again.product(i, j).unwrap());
            }
        }
        assert!(invalidate(&dir, &d, 3, 1).unwrap());
        assert!(!invalidate(&dir, &d, 3, 1).unwrap());
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn header_mismatch_is_rejected() {
        let dir = scratch_dir("mm");
        let d = root_datum(TypeTag::A1);
        let alg = TorusFixedAlgebra::new(&d, 2, 1).unwrap();
        build(&alg, &dir).unwrap();
        let path = cache_path(&dir, &d, 2, 1);
        let mut file = read(&path).unwrap();
        file.header.root_order_hash = "0000".into();
        fs::write(&path, serde_json::to_vec(&file).unwrap()).unwrap();
        let fresh = TorusFixedAlgebra::new(&d, 2, 1).unwrap();
        assert!(matches!(load(&fresh, &dir), Err(Error::CacheMismatch(_))));
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn flag_beats_default() {
        assert_eq!(resolve_cache_dir(Some(Path::new("/x"))), PathBuf::from("/x"));
    }
}
