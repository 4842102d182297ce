//! Content-addressed store of JSON reports on disk.
//!
//! A key is the SHA-256 of the crate version, operation name, parameter
//! string and graph6 input; the value is the report text, stored verbatim in
//! `<dir>/<key>.json`.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::scan::hex;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(Cache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(input: &str, op: &str, params: &str) -> String {
        let mut h = Sha256::new();
        for part in [env!("CARGO_PKG_VERSION"), op, params, input] {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part.as_bytes());
        }
        hex(&h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)).ok()
    }

    pub fn put(&self, key: &str, value: &str) -> Result<()> {
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, value)?;
        fs::rename(&tmp, self.path(key))?;
        Ok(())
    }

    /// Returns the stored report for the key, computing and storing it first if absent.
    pub fn get_or_compute(
        &self,
        input: &str,
        op: &str,
        params: &str,
        compute: impl FnOnce() -> Result<String>,
    ) -> Result<String> {
        let key = Self::key(input, op, params);
        if let Some(hit) = self.get(&key) {
            return Ok(hit);
        }
        let value = compute()?;
        self.put(&key, &value)?;
        Ok(value)
    }
}
