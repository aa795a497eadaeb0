//! On-disk cache of constructed fields, keyed by a content hash of their
//! parameters.

use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::spectral::io::{read_field, write_field};
use crate::spectral::Field;

/// Hex SHA-256 of `tag` and the JSON encoding of `params`.
pub fn cache_key<P: Serialize>(tag: &str, params: &P) -> Result<String> {
    let mut h = Sha256::new();
    h.update(tag.as_bytes());
    h.update([0u8]);
    h.update(serde_json::to_vec(params)?);
    Ok(h.finalize().iter().map(|b| format!("{b:02x}")).collect())
}

pub fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.slfd"))
}

/// Reads the cached field for `params`, or builds and stores it.
pub fn load_or_build<P, F>(dir: &Path, tag: &str, params: &P, build: F) -> Result<Field>
where
    P: Serialize,
    F: FnOnce() -> Result<Field>,
{
    let path = cache_path(dir, &cache_key(tag, params)?);
    if path.exists() {
        return read_field(&path);
    }
    let f = build()?;
    std::fs::create_dir_all(dir).map_err(|e| crate::Error::io(dir, e))?;
    write_field(&path, &f)?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::GridSpec;
    use num_complex::Complex64;

    #[test]
    fn round_trip_and_stable_keys() {
        let dir = std::env::temp_dir().join(format!("slfd-cache-{}", std::process::id()));
        let g = GridSpec::cube(1, 4.0, 8, 2.0, 4).unwrap();
        let a = cache_key("knapp", &g).unwrap();
        assert_eq!(a, cache_key("knapp", &g).unwrap());
        assert_ne!(a, cache_key("tube", &g).unwrap());
        let f = Field::from_fn(&g, |x, t| Complex64::new(x[0], t));
        let built = load_or_build(&dir, "t", &g, || Ok(f.clone())).unwrap();
        let cached = load_or_build(&dir, "t", &g, || unreachable!()).unwrap();
        assert_eq!(built, cached);
        std::fs::remove_dir_all(&dir).ok();
    }
}
