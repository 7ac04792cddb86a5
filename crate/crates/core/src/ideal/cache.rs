//! On-disk cache for the averaged intertwiners.
//!
//! A file holds a versioned header and the 42×42 matrix row-major, one ExtElt per line.
//! It is keyed by a SHA-256 hash of the generator matrices, the seed matrix and the basis
//! convention, so a change to any of them is a cache miss.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::intertwiner::{Convention, SeedMatrix, Target};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::serial::{cyc_tokens, ext_from_tokens, ext_to_string};
use crate::field::{CycElt, ExtElt};
use crate::linalg::Matrix;

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "hurwitz17-intertwiner";
pub const SIZE: usize = 42;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheHeader {
    pub version: u32,
    pub target: Target,
    pub seed: SeedMatrix,
    pub convention: Convention,
    pub hash: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheFile {
    pub header: CacheHeader,
    pub matrix: Matrix<CycElt>,
}

/// SHA-256 over the images of P and Q, the seed and the convention.
pub fn content_hash(ctx: &Context, target: Target, seed: SeedMatrix, conv: Convention) -> String {
    let mut h = Sha256::new();
    h.update(format!("v{FORMAT_VERSION}\n{target}\n{}\n{}\n", seed.descriptor(), conv.label()));
    for g in [ctx.p, ctx.q] {
        let m = ctx.rep.image(g).to_dense();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                h.update(cyc_tokens(m.get(i, j)).join(" "));
                h.update(b"\n");
            }
        }
    }
    hex::encode(h.finalize())
}

impl CacheFile {
    pub fn to_text(&self) -> String {
        let h = &self.header;
        let mut out = format!(
            "{MAGIC} {}\ntarget {}\nseed {}\nconvention {}\nhash {}\n",
            h.version,
            h.target,
            h.seed.descriptor(),
            h.convention.label(),
            h.hash
        );
        for i in 0..self.matrix.rows() {
            for j in 0..self.matrix.cols() {
                out.push_str(&ext_to_string(&ExtElt::from_cyc(self.matrix.get(i, j).clone())));
                out.push('\n');
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| Error::Cache(format!("truncated file: missing {what}")))
        };
        let version = next("magic")?
            .strip_prefix(MAGIC)
            .and_then(|v| v.strip_prefix(' '))
            .ok_or_else(|| Error::Cache("bad magic line".into()))?
            .parse::<u32>()
            .map_err(|_| Error::Cache("bad format version".into()))?;
        if version != FORMAT_VERSION {
            return Err(Error::Cache(format!("unsupported format version {version}")));
        }
        let field = |line: &str, key: &str| -> Result<String> {
            line.strip_prefix(key)
                .and_then(|v| v.strip_prefix(' '))
                .map(str::to_owned)
                .ok_or_else(|| Error::Cache(format!("expected {key:?} line")))
        };
        let target = Target::parse(&field(next("target")?, "target")?)?;
        let seed = SeedMatrix::parse(&field(next("seed")?, "seed")?)?;
        let convention = Convention::parse(&field(next("convention")?, "convention")?)?;
        let hash = field(next("hash")?, "hash")?;
        if hash.len() != 64 || !hash.bytes().all(|b| b.is_ascii_hexdigit() && !b.is_ascii_uppercase()) {
            return Err(Error::Cache("hash must be 64 lowercase hex digits".into()));
        }
        let mut entries = Vec::with_capacity(SIZE * SIZE);
        for k in 0..SIZE * SIZE {
            let line = next("matrix entry")?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            let x = ext_from_tokens(&toks).map_err(|e| Error::Cache(format!("entry {k}: {e}")))?;
            if !x.in_base_field() {
                return Err(Error::Cache(format!("entry {k} is not in Q(xi)")));
            }
            entries.push(x.a().clone());
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Cache("trailing data after matrix".into()));
        }
        Ok(CacheFile {
            header: CacheHeader {
                version,
                target,
                seed,
                convention,
                hash,
            },
            matrix: Matrix::from_fn(SIZE, SIZE, |i, j| entries[i * SIZE + j].clone()),
        })
    }
}

/// A directory of cache files.
#[derive(Clone, Debug)]
pub struct IntertwinerCache {
    dir: PathBuf,
}

impl IntertwinerCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        IntertwinerCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, target: Target, seed: SeedMatrix, conv: Convention, hash: &str) -> PathBuf {
        let seed = seed.descriptor().replace(['+', ','], "-");
        self.dir
            .join(format!("S-{target}-{}-{seed}-{}.txt", conv.label(), &hash[..16]))
    }

    /// The cached matrix, if a file with a matching header exists. Unreadable or
    /// mismatched files count as misses.
    pub fn load(&self, expected: &CacheHeader) -> Option<Matrix<CycElt>> {
        let path = self.path(expected.target, expected.seed, expected.convention, &expected.hash);
        let text = fs::read_to_string(path).ok()?;
        let file = CacheFile::parse(&text).ok()?;
        (file.header == *expected).then_some(file.matrix)
    }

    pub fn store(&self, file: &CacheFile) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let h = &file.header;
        let path = self.path(h.target, h.seed, h.convention, &h.hash);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, file.to_text())?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CacheFile {
        CacheFile {
            header: CacheHeader {
                version: FORMAT_VERSION,
                target: Target::W11,
                seed: SeedMatrix::IdentityPlusUnit(3),
                convention: Convention::JMajor,
                hash: "0f".repeat(32),
            },
            matrix: Matrix::from_fn(SIZE, SIZE, |i, j| CycElt::zeta(i as i64).scale_int(j as i64 - 7)),
        }
    }

    #[test]
    fn round_trip() {
        let f = sample();
        assert_eq!(CacheFile::parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn rejects_damage() {
        let text = sample().to_text();
        assert!(CacheFile::parse(&text.replace("hurwitz17-intertwiner 1", "hurwitz17-intertwiner 2")).is_err());
        assert!(CacheFile::parse(&text.replace("target W11", "target W9")).is_err());
        let truncated: String = text.lines().take(100).map(|l| format!("{l}\n")).collect();
        assert!(CacheFile::parse(&truncated).is_err());
        assert!(CacheFile::parse(&format!("{text}junk\n")).is_err());
    }

    #[test]
    fn store_and_load() {
        let dir = std::env::temp_dir().join(format!("hz17-cache-test-{}", std::process::id()));
        let cache = IntertwinerCache::new(&dir);
        let f = sample();
        cache.store(&f).unwrap();
        assert_eq!(cache.load(&f.header), Some(f.matrix.clone()));
        let mut other = f.header.clone();
        other.hash = "1f".repeat(32);
        assert_eq!(cache.load(&other), None);
        fs::remove_dir_all(dir).unwrap();
    }
}
