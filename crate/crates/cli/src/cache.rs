//! On-disk cache of `value(n)`.
//!
//! One JSON file per `n`, stamped with the crate version. Entries written
//! by another version are ignored and overwritten.

use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::report::VERSION;

pub const CACHE_ENV: &str = "RAMSEY_TRAILS_CACHE";

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    version: String,
    n: usize,
    value: usize,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// `$RAMSEY_TRAILS_CACHE`, else `<data dir>/ramsey-trails`.
    pub fn locate() -> Option<Cache> {
        let dir = match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => PathBuf::from(d),
            _ => dirs::data_dir()?.join("ramsey-trails"),
        };
        Some(Cache { dir })
    }

    fn path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("value-{n}.json"))
    }

    pub fn get(&self, n: usize) -> Option<usize> {
        let text = fs::read_to_string(self.path(n)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.version != VERSION || entry.n != n {
            log::debug!("discarding cache entry for n = {n} from version {}", entry.version);
            return None;
        }
        Some(entry.value)
    }

    pub fn put(&self, n: usize, value: usize) {
        let entry = Entry {
            version: VERSION.to_string(),
            n,
            value,
        };
        let result = fs::create_dir_all(&self.dir)
            .and_then(|_| fs::write(self.path(n), serde_json::to_string(&entry).unwrap()));
        if let Err(e) = result {
            log::warn!("could not write cache entry {}: {e}", self.path(n).display());
        }
    }
}
