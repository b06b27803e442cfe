//! JSON-lines cache of census entries, one file per crossing count.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::census::{census_at, CensusEntry};
use crate::error::{Error, Result};
use crate::table::KnotTable;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "WARPLAB_CACHE";

#[derive(Clone, Debug)]
pub struct CensusCache {
    dir: PathBuf,
}

impl CensusCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CensusCache { dir: dir.into() }
    }

    /// The explicit directory if given, else `$WARPLAB_CACHE`, else none.
    pub fn from_flag_or_env(flag: Option<&Path>) -> Option<Self> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
            .map(CensusCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: usize) -> PathBuf {
        self.dir.join(format!("census-{n}.jsonl"))
    }

    /// Entries with `n` crossings, or `None` if absent or unreadable.
    pub fn read(&self, n: usize) -> Option<Vec<CensusEntry>> {
        let text = fs::read_to_string(self.path_for(n)).ok()?;
        let mut out = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let e: CensusEntry = serde_json::from_str(line).ok()?;
            if e.n != n {
                return None;
            }
            out.push(e);
        }
        Some(out)
    }

    pub fn write(&self, n: usize, entries: &[CensusEntry]) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!(".census-{n}.jsonl.tmp"));
        {
            let mut f = fs::File::create(&tmp)?;
            for e in entries {
                let line = serde_json::to_string(e).map_err(|e| Error::Io(e.to_string()))?;
                writeln!(f, "{line}")?;
            }
        }
        fs::rename(tmp, self.path_for(n))?;
        Ok(())
    }

    /// Cached entries for `n`, regenerating and storing them when absent.
    pub fn load_or_build(&self, n: usize, table: &KnotTable) -> Result<Vec<CensusEntry>> {
        if let Some(e) = self.read(n) {
            return Ok(e);
        }
        let entries = census_at(n, table)?;
        self.write(n, &entries)?;
        Ok(entries)
    }
}

/// Census up to `max_n`, through the cache when one is given.
pub fn census_up_to(max_n: usize, table: &KnotTable, cache: Option<&CensusCache>) -> Result<Vec<CensusEntry>> {
    if max_n == 0 || max_n > crate::census::MAX_CENSUS {
        return Err(Error::CensusBound(max_n));
    }
    let mut all = Vec::new();
    for n in 1..=max_n {
        match cache {
            Some(c) => all.extend(c.load_or_build(n, table)?),
            None => all.extend(census_at(n, table)?),
        }
    }
    Ok(all)
}
