//! Content-addressed on-disk store of computed `E_mu`.
//!
//! Entries are named by the SHA-256 of `"n:mu"`. A loaded entry is accepted
//! only if it has the right leading term and satisfies one randomly chosen
//! `Y_i` eigenvalue equation; otherwise it is recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use rand::Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::json::{from_json, to_json, PolyJson};
use crate::macdonald::{e_poly, leading_term_ok, satisfies_eigen_at, EPolyCache};

#[derive(Serialize, Deserialize)]
struct Entry {
    n: usize,
    mu: Vec<i32>,
    poly: PolyJson,
}

/// How [`DiskCache::e_poly`] obtained its result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Miss,
    Repaired,
}

pub struct DiskCache {
    dir: PathBuf,
}

pub fn cache_key(mu: &[i32]) -> String {
    let list: Vec<String> = mu.iter().map(|x| x.to_string()).collect();
    let digest = Sha256::digest(format!("{}:{}", mu.len(), list.join(",")).as_bytes());
    hex::encode(digest)
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
        Ok(DiskCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, mu: &[i32]) -> PathBuf {
        self.dir.join(format!("{}.json", cache_key(mu)))
    }

    /// Reads and validates an entry; `Ok(None)` when absent.
    pub fn load(&self, mu: &[i32]) -> Result<Option<LaurentPoly>> {
        let path = self.path(mu);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Io(format!("{}: {e}", path.display()))),
        };
        let entry: Entry =
            serde_json::from_str(&text).map_err(|e| Error::Argument(format!("malformed cache entry: {e}")))?;
        if entry.n != mu.len() || entry.mu != mu {
            return Err(Error::Argument("cache entry is for a different index".into()));
        }
        let e = from_json(&entry.poly)?;
        if e.n() != mu.len() || !leading_term_ok(mu, &e) {
            return Err(Error::Argument("cache entry has the wrong leading term".into()));
        }
        let i = rand::thread_rng().gen_range(1..=mu.len());
        if !satisfies_eigen_at(mu, &e, [i])? {
            return Err(Error::Argument(format!("cache entry fails the Y_{i} eigenvalue equation")));
        }
        Ok(Some(e))
    }

    pub fn store(&self, mu: &[i32], e: &LaurentPoly) -> Result<()> {
        let entry = Entry { n: mu.len(), mu: mu.to_vec(), poly: to_json(e) };
        let text = serde_json::to_string(&entry).expect("serializable");
        let path = self.path(mu);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text)
            .and_then(|_| fs::rename(&tmp, &path))
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    /// `E_mu` from disk when valid, otherwise computed and stored. A bad
    /// entry produces a warning on stderr.
    pub fn e_poly(&self, mu: &[i32], mem: &EPolyCache) -> Result<(LaurentPoly, CacheOutcome)> {
        let outcome = match self.load(mu) {
            Ok(Some(e)) => return Ok((e, CacheOutcome::Hit)),
            Ok(None) => CacheOutcome::Miss,
            Err(err) => {
                eprintln!("warning: discarding cache entry {}: {err}", self.path(mu).display());
                CacheOutcome::Repaired
            }
        };
        let e = e_poly(mu, mem)?;
        self.store(mu, &e)?;
        Ok((e, outcome))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn store_load_and_repair() {
        let dir = tempfile::tempdir().unwrap();
        let disk = DiskCache::new(dir.path()).unwrap();
        let mem = EPolyCache::new();
        let (e, o) = disk.e_poly(&[0, 1], &mem).unwrap();
        assert_eq!(o, CacheOutcome::Miss);
        assert_eq!(disk.load(&[0, 1]).unwrap(), Some(e.clone()));
        assert_eq!(disk.e_poly(&[0, 1], &mem).unwrap(), (e.clone(), CacheOutcome::Hit));

        fs::write(disk.path(&[0, 1]), "{ not json").unwrap();
        assert_eq!(disk.e_poly(&[0, 1], &mem).unwrap(), (e.clone(), CacheOutcome::Repaired));
        assert_eq!(disk.load(&[0, 1]).unwrap(), Some(e.clone()));

        // A well-formed entry holding x^mu instead of E_mu is rejected.
        disk.store(&[0, 1], &LaurentPoly::x_pow(&[0, 1])).unwrap();
        assert!(disk.load(&[0, 1]).is_err());
        assert_ne!(cache_key(&[0, 1]), cache_key(&[1, 0]));
    }
}
