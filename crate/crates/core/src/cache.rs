//! Advisory JSON cache for structure constants.
//!
//! The cache stores, per Lie type, the η table of the rescaled Chevalley
//! basis with exact field coefficients (four `numerator/denominator` string
//! pairs per entry, one per basis element of the coefficient field).  It is
//! purely advisory: the table is always rebuilt from scratch and, when a
//! cached copy exists, compared against it — a mismatch is reported as an
//! error rather than trusted.

use crate::rootdata::{ChevalleyData, LieType, RootSystem, SRoot};
use crate::scalar::Scalar;
use num::BigRational;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::rc::Rc;
use std::str::FromStr;

pub const NORMALIZATION: &str = "bourbaki-short2-eta-sqrt";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Deserialize, PartialEq)]
pub struct CacheFile {
    pub family: char,
    pub rank: usize,
    pub normalization: String,
    pub version: String,
    /// Entries `(a_idx, a_neg, b_idx, b_neg, coeffs)` where `coeffs` are the
    /// four rational components of η as `"num/den"` strings.
    pub eta: Vec<(usize, bool, usize, bool, [String; 4])>,
}

fn scalar_to_strings(s: &Scalar) -> [String; 4] {
    std::array::from_fn(|k| format!("{}/{}", s.c[k].numer(), s.c[k].denom()))
}

fn scalar_from_strings(a: &[String; 4]) -> Option<Scalar> {
    let mut s = Scalar::zero();
    for k in 0..4 {
        let (n, d) = a[k].split_once('/')?;
        s.c[k] = BigRational::new(
            num::BigInt::from_str(n).ok()?,
            num::BigInt::from_str(d).ok()?,
        );
    }
    Some(s)
}

/// The full η table of a Chevalley datum, in a stable order.
pub fn eta_table(cd: &ChevalleyData) -> Vec<(usize, bool, usize, bool, [String; 4])> {
    let rs = &cd.rs;
    let np = rs.num_positive();
    let mut out = Vec::new();
    for ai in 0..np {
        for &an in &[false, true] {
            for bi in 0..np {
                for &bn in &[false, true] {
                    let sum: Vec<i64> = (0..rs.rank)
                        .map(|k| {
                            let a = rs.positive[ai][k] * if an { -1 } else { 1 };
                            let b = rs.positive[bi][k] * if bn { -1 } else { 1 };
                            a + b
                        })
                        .collect();
                    let is_root = rs.pos_index(&sum).is_some()
                        || rs.pos_index(&sum.iter().map(|x| -x).collect::<Vec<_>>()).is_some();
                    if !is_root {
                        continue;
                    }
                    let a = if an { SRoot::neg(ai) } else { SRoot::pos(ai) };
                    let b = if bn { SRoot::neg(bi) } else { SRoot::pos(bi) };
                    out.push((ai, an, bi, bn, scalar_to_strings(&cd.eta(a, b))));
                }
            }
        }
    }
    out
}

pub fn cache_dir() -> PathBuf {
    if let Ok(d) = std::env::var("TYV_CACHE_DIR") {
        PathBuf::from(d)
    } else {
        let home = std::env::var("HOME").unwrap_or_else(|_| ".".into());
        PathBuf::from(home).join(".cache").join("tyv")
    }
}

fn cache_path(lt: LieType) -> PathBuf {
    cache_dir().join(format!(
        "eta-{}{}-{}-{}.json",
        lt.family, lt.rank, NORMALIZATION, VERSION
    ))
}

/// Outcome of consulting the cache while building a Chevalley datum.
pub enum CacheStatus {
    /// No cached copy; a fresh one was written (best effort).
    Written,
    /// Cached copy present and identical to the rebuilt table.
    Verified,
    /// Cached copy present but different — the rebuilt table wins.
    Mismatch,
    /// Cache directory unusable; proceeding without.
    Unavailable,
}

/// Build the Chevalley datum, then verify or refresh the advisory cache.
pub fn build_with_cache(lt: LieType) -> (Rc<ChevalleyData>, CacheStatus) {
    let rs = RootSystem::build(lt);
    let cd = ChevalleyData::build(rs);
    let fresh = CacheFile {
        family: lt.family,
        rank: lt.rank,
        normalization: NORMALIZATION.to_string(),
        version: VERSION.to_string(),
        eta: eta_table(&cd),
    };
    let path = cache_path(lt);
    let status = match std::fs::read_to_string(&path) {
        Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
            Ok(old) if old == fresh => CacheStatus::Verified,
            _ => {
                let _ = write_cache(&path, &fresh);
                CacheStatus::Mismatch
            }
        },
        Err(_) => match write_cache(&path, &fresh) {
            Ok(()) => CacheStatus::Written,
            Err(_) => CacheStatus::Unavailable,
        },
    };
    (cd, status)
}

fn write_cache(path: &PathBuf, file: &CacheFile) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let text = serde_json::to_string(file).expect("serialization cannot fail");
    std::fs::write(path, text)
}

/// Round-trip guard used by tests: parse back what would be written.
pub fn roundtrip(file: &CacheFile) -> bool {
    let text = serde_json::to_string(file).unwrap();
    match serde_json::from_str::<CacheFile>(&text) {
        Ok(back) => {
            back == *file
                && back
                    .eta
                    .iter()
                    .all(|(_, _, _, _, c)| scalar_from_strings(c).is_some())
        }
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_roundtrip_and_verify() {
        let dir = std::env::temp_dir().join(format!("tyv-cache-test-{}", std::process::id()));
        std::env::set_var("TYV_CACHE_DIR", &dir);
        let lt: LieType = "B2".parse().unwrap();
        let (_, s1) = build_with_cache(lt);
        assert!(matches!(s1, CacheStatus::Written));
        let (cd, s2) = build_with_cache(lt);
        assert!(matches!(s2, CacheStatus::Verified));
        let file = CacheFile {
            family: 'B',
            rank: 2,
            normalization: NORMALIZATION.into(),
            version: VERSION.into(),
            eta: eta_table(&cd),
        };
        assert!(roundtrip(&file));
        std::env::remove_var("TYV_CACHE_DIR");
        let _ = std::fs::remove_dir_all(&dir);
    }
}
