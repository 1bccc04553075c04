//! On-disk cache for the inductively computed local class templates.
//!
//! One JSON document per level under the cache directory, `f_<k>.json`,
//! holding the polynomial plus `{k, nvars, format_version}` metadata.
//! Writes go through a temporary file and an atomic rename, so concurrent
//! readers never see a torn document.

use crate::error::CsmError;
use crate::poly::{MultiPoly, PolyJson};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheDoc {
    k: usize,
    nvars: usize,
    format_version: u32,
    poly: PolyJson,
}

/// Cache of the local class templates `f_k` (each in `2k` variables),
/// memory-backed with an optional directory behind it.
#[derive(Debug, Default)]
pub struct FkCache {
    dir: Option<PathBuf>,
    mem: BTreeMap<usize, MultiPoly>,
}

impl FkCache {
    /// Purely in-memory cache.
    pub fn memory() -> Self {
        FkCache::default()
    }

    /// Cache backed by a directory, created if missing.
    pub fn at_dir(dir: impl Into<PathBuf>) -> Result<Self, CsmError> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)
            .map_err(|e| CsmError::Cache(format!("cannot create {}: {e}", dir.display())))?;
        Ok(FkCache {
            dir: Some(dir),
            mem: BTreeMap::new(),
        })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn file_path(&self, k: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("f_{k}.json")))
    }

    pub fn load(&mut self, k: usize) -> Result<Option<MultiPoly>, CsmError> {
        if let Some(p) = self.mem.get(&k) {
            return Ok(Some(p.clone()));
        }
        let Some(path) = self.file_path(k) else {
            return Ok(None);
        };
        if !path.exists() {
            return Ok(None);
        }
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CsmError::Cache(format!("cannot read {}: {e}", path.display())))?;
        let doc: CacheDoc = serde_json::from_str(&text)
            .map_err(|e| CsmError::Cache(format!("bad cache file {}: {e}", path.display())))?;
        if doc.format_version != FORMAT_VERSION {
            return Ok(None);
        }
        if doc.k != k || doc.nvars != 2 * k || doc.poly.nvars != 2 * k {
            return Err(CsmError::Cache(format!(
                "cache file {} does not describe level {k}",
                path.display()
            )));
        }
        let poly = MultiPoly::from_json(&doc.poly)?;
        self.mem.insert(k, poly.clone());
        Ok(Some(poly))
    }

    pub fn store(&mut self, k: usize, poly: &MultiPoly) -> Result<(), CsmError> {
        if poly.nvars() != 2 * k {
            return Err(CsmError::Cache(format!(
                "level {k} template must live in {} variables",
                2 * k
            )));
        }
        self.mem.insert(k, poly.clone());
        let Some(path) = self.file_path(k) else {
            return Ok(());
        };
        let doc = CacheDoc {
            k,
            nvars: 2 * k,
            format_version: FORMAT_VERSION,
            poly: poly.to_json(),
        };
        let text = serde_json::to_string_pretty(&doc)
            .map_err(|e| CsmError::Cache(format!("serialize: {e}")))?;
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        std::fs::write(&tmp, text)
            .map_err(|e| CsmError::Cache(format!("cannot write {}: {e}", tmp.display())))?;
        std::fs::rename(&tmp, &path)
            .map_err(|e| CsmError::Cache(format!("cannot move into place: {e}")))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn memory_cache_roundtrip() {
        let mut cache = FkCache::memory();
        assert!(cache.load(1).unwrap().is_none());
        let f1 = parse_poly("t2 - t1", 2).unwrap();
        cache.store(1, &f1).unwrap();
        assert_eq!(cache.load(1).unwrap().unwrap(), f1);
    }

    #[test]
    fn disk_cache_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let f1 = parse_poly("t2 - t1", 2).unwrap();
        {
            let mut cache = FkCache::at_dir(dir.path()).unwrap();
            cache.store(1, &f1).unwrap();
        }
        let mut fresh = FkCache::at_dir(dir.path()).unwrap();
        assert_eq!(fresh.load(1).unwrap().unwrap(), f1);
        assert!(dir.path().join("f_1.json").exists());
    }

    #[test]
    fn wrong_arity_rejected() {
        let mut cache = FkCache::memory();
        let bad = parse_poly("t1", 1).unwrap();
        assert!(cache.store(1, &bad).is_err());
    }
}
