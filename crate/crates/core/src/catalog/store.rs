//! Certificate files and the directory-backed certificate store.
//!
//! A certificate file is six lines:
//!
//! ```text
//! group <name>
//! order <n>
//! gens <i1> <i2> ...
//! word <+-k> ...
//! repeat <m>
//! method <trace>
//! ```
//!
//! Word entries are one-based generator positions, negative for inverses.
//! A store is a directory of such files plus an append-only `index.tsv`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::cayley::{Sym, Word};
use crate::constructions::Certificate;
use crate::group::{Elem, GroupTable};
use crate::oracle::verify_independent;
use crate::trace::Trace;

use super::gensets::GenSetRecord;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct CertParseError {
    pub line: usize,
    pub msg: String,
}

impl Certificate {
    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|g| g.index().to_string()).collect();
        format!(
            "group {}\norder {}\ngens {}\nword {}\nrepeat {}\nmethod {}\n",
            self.group,
            self.order,
            gens.join(" "),
            self.word,
            self.repeat,
            self.method
        )
    }

    pub fn from_text(text: &str) -> Result<Certificate, CertParseError> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        let keys = ["group", "order", "gens", "word", "repeat", "method"];
        if lines.len() != keys.len() {
            return Err(CertParseError { line: lines.len().min(keys.len()) + 1, msg: format!("expected {} lines", keys.len()) });
        }
        let mut vals = Vec::new();
        for (i, (l, k)) in lines.iter().zip(keys).enumerate() {
            let rest = l
                .strip_prefix(k)
                .filter(|r| r.is_empty() || r.starts_with(' '))
                .ok_or_else(|| CertParseError { line: i + 1, msg: format!("expected `{k}`") })?;
            vals.push(rest.trim());
        }
        let err = |line: usize, msg: &str| CertParseError { line, msg: msg.to_string() };
        let num = |line: usize, s: &str| s.parse::<i64>().map_err(|_| err(line, &format!("bad number `{s}`")));
        let group = vals[0].to_string();
        let order = num(2, vals[1])?;
        let gens = vals[2]
            .split_whitespace()
            .map(|s| num(3, s).and_then(|k| usize::try_from(k).map(Elem::new).map_err(|_| err(3, "negative generator"))))
            .collect::<Result<Vec<_>, _>>()?;
        let word = vals[3]
            .split_whitespace()
            .map(|s| {
                let k = num(4, s)?;
                match Sym::from_signed(k) {
                    Some(sym) if (sym.gen as usize) < gens.len() => Ok(sym),
                    _ => Err(err(4, &format!("symbol {k} names no generator"))),
                }
            })
            .collect::<Result<Word, _>>()?;
        let repeat = num(5, vals[4])?;
        let method: Trace = vals[5].parse().map_err(|e: crate::trace::TraceParseError| err(6, &e.to_string()))?;
        if order < 1 || repeat < 1 {
            return Err(err(if order < 1 { 2 } else { 5 }, "must be positive"));
        }
        Ok(Certificate { group, order: order as usize, gens, word, repeat: repeat as usize, method })
    }

    /// Both verifiers: the Cayley-graph walk and the independent one.
    pub fn verify_both(&self, g: &GroupTable) -> bool {
        self.verify(g) && verify_independent(g, &self.gens, &self.word, self.repeat)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum StoreError {
    #[error("store entry {0} failed re-verification")]
    StoreCorrupt(String),
    #[error("store entry {0} already exists")]
    Exists(String),
    #[error("store entry {id}: {source}")]
    Parse { id: String, source: CertParseError },
    #[error("store entry {0}: unknown group")]
    UnknownGroup(String),
    #[error("malformed index line {0}")]
    BadIndex(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A certificate as kept in a store.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoredCertificate {
    pub id: String,
    pub key: GenSetRecord,
    pub certificate: Certificate,
    /// Which verifiers accepted the certificate when it was stored.
    pub stamp: String,
}

/// Stamp written for every stored certificate; fixed so that stores are
/// reproducible byte for byte.
pub const VERIFIED_STAMP: &str = concat!("dual-verified/hamcert-", env!("CARGO_PKG_VERSION"));

const INDEX: &str = "index.tsv";

/// Directory of certificate files with an append-only index.
pub struct CertStore {
    dir: PathBuf,
}

fn entry_id(key: &GenSetRecord) -> String {
    let safe: String =
        key.group.chars().map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '-' }).collect();
    let gens: Vec<String> = key.generators.iter().map(|g| g.index().to_string()).collect();
    format!("{safe}__{}", gens.join("-"))
}

impl CertStore {
    pub fn open(dir: impl AsRef<Path>) -> Result<CertStore, StoreError> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir)?;
        Ok(CertStore { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Writes a certificate that has passed both verifiers against `g`.
    pub fn append(&self, key: &GenSetRecord, cert: &Certificate, g: &GroupTable) -> Result<String, StoreError> {
        let id = entry_id(key);
        if !cert.verify_both(g) {
            return Err(StoreError::StoreCorrupt(id));
        }
        let path = self.dir.join(format!("{id}.cert"));
        if path.exists() {
            return Err(StoreError::Exists(id));
        }
        let tmp = self.dir.join(format!(".{id}.tmp"));
        fs::write(&tmp, cert.to_text())?;
        fs::rename(&tmp, &path)?;
        let gens: Vec<String> = key.generators.iter().map(|g| g.index().to_string()).collect();
        let mut index = fs::OpenOptions::new().create(true).append(true).open(self.dir.join(INDEX))?;
        writeln!(
            index,
            "{id}\t{}\t{}\t{}\t{}\t{VERIFIED_STAMP}",
            key.group,
            gens.join(" "),
            u8::from(key.minimal),
            u8::from(key.connected)
        )?;
        Ok(id)
    }

    /// Every stored certificate, re-verified against the group `resolve`
    /// returns for its name.
    pub fn load(&self, resolve: impl Fn(&str) -> Option<GroupTable>) -> Result<Vec<StoredCertificate>, StoreError> {
        let index = match fs::read_to_string(self.dir.join(INDEX)) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for (i, line) in index.lines().enumerate().filter(|(_, l)| !l.is_empty()) {
            let f: Vec<&str> = line.split('\t').collect();
            let [id, group, gens, minimal, connected, stamp] = f[..] else { return Err(StoreError::BadIndex(i + 1)) };
            let generators = gens
                .split_whitespace()
                .map(|s| s.parse::<usize>().map(Elem::new))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| StoreError::BadIndex(i + 1))?;
            let key = GenSetRecord {
                group: group.to_string(),
                generators,
                minimal: minimal == "1",
                connected: connected == "1",
            };
            let text = fs::read_to_string(self.dir.join(format!("{id}.cert")))?;
            let cert = Certificate::from_text(&text).map_err(|source| StoreError::Parse { id: id.to_string(), source })?;
            let g = resolve(&cert.group).ok_or_else(|| StoreError::UnknownGroup(id.to_string()))?;
            if cert.group != key.group || cert.gens != key.generators || !cert.verify_both(&g) {
                return Err(StoreError::StoreCorrupt(id.to_string()));
            }
            out.push(StoredCertificate { id: id.to_string(), key, certificate: cert, stamp: stamp.to_string() });
        }
        Ok(out)
    }
}
