//! Flat binary field format.
//!
//! Layout (little-endian): magic `b"SLFD"`, `u32` version, `u32` spatial
//! dimension `n`; per spatial axis a `u64` count, `f64` extent and `f64` box
//! centre; a `u64` time count, `f64` time extent and `f64` first sample time;
//! a `u8` side tag (0 physical, 1 frequency); then the samples as
//! `(f64 re, f64 im)` pairs in time-slowest row-major order.

use std::fs;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;

use super::field::{Field, Side};
use super::grid::GridSpec;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"SLFD";
const VERSION: u32 = 1;

pub fn encode_field(f: &Field) -> Vec<u8> {
    let g = f.grid();
    let mut out = Vec::with_capacity(32 + 16 * g.sample_count());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(g.dim() as u32).to_le_bytes());
    for (a, (m, l)) in g.counts.iter().zip(&g.extents).enumerate() {
        out.extend_from_slice(&(*m as u64).to_le_bytes());
        out.extend_from_slice(&l.to_le_bytes());
        out.extend_from_slice(&g.center(a).to_le_bytes());
    }
    out.extend_from_slice(&(g.t_count as u64).to_le_bytes());
    out.extend_from_slice(&g.t_extent.to_le_bytes());
    out.extend_from_slice(&g.t_origin.to_le_bytes());
    out.push(match f.side() {
        Side::Physical => 0,
        Side::Frequency => 1,
    });
    for v in f.samples() {
        out.extend_from_slice(&v.re.to_le_bytes());
        out.extend_from_slice(&v.im.to_le_bytes());
    }
    out
}

struct Cursor<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take<const N: usize>(&mut self) -> Result<[u8; N]> {
        let end = self.pos + N;
        let bytes = self.buf.get(self.pos..end).ok_or_else(|| Error::Grid("truncated field file".into()))?;
        self.pos = end;
        Ok(bytes.try_into().expect("length checked"))
    }
    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take()?))
    }
    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take()?))
    }
    fn f64(&mut self) -> Result<f64> {
        Ok(f64::from_le_bytes(self.take()?))
    }
}

pub fn decode_field(bytes: &[u8]) -> Result<Field> {
    let mut c = Cursor { buf: bytes, pos: 0 };
    if &c.take::<4>()? != MAGIC {
        return Err(Error::Grid("not a field file".into()));
    }
    let version = c.u32()?;
    if version != VERSION {
        return Err(Error::Grid(format!("unsupported field format version {version}")));
    }
    let n = c.u32()? as usize;
    if n == 0 || n > 8 {
        return Err(Error::Grid(format!("implausible dimension {n}")));
    }
    let mut counts = Vec::with_capacity(n);
    let mut extents = Vec::with_capacity(n);
    let mut centers = Vec::with_capacity(n);
    for _ in 0..n {
        counts.push(c.u64()? as usize);
        extents.push(c.f64()?);
        centers.push(c.f64()?);
    }
    let t_count = c.u64()? as usize;
    let t_extent = c.f64()?;
    let t_origin = c.f64()?;
    let side = match c.take::<1>()?[0] {
        0 => Side::Physical,
        1 => Side::Frequency,
        s => return Err(Error::Grid(format!("bad side tag {s}"))),
    };
    let grid = GridSpec::new(extents, counts, t_extent, t_count)?.with_t_origin(t_origin).with_x_center(centers)?;
    let expected = grid.sample_count() * 16;
    if bytes.len() - c.pos != expected {
        return Err(Error::Grid(format!("expected {expected} sample bytes, found {}", bytes.len() - c.pos)));
    }
    let data = bytes[c.pos..]
        .chunks_exact(16)
        .map(|b| {
            let re = f64::from_le_bytes(b[..8].try_into().expect("8 bytes"));
            let im = f64::from_le_bytes(b[8..].try_into().expect("8 bytes"));
            Complex64::new(re, im)
        })
        .collect();
    Field::from_samples(&grid, data, side)
}

pub fn write_field(path: &Path, f: &Field) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    w.write_all(&encode_field(f)).and_then(|_| w.flush()).map_err(|e| Error::io(path, e))
}

pub fn read_field(path: &Path) -> Result<Field> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut bytes = Vec::new();
    BufReader::new(file).read_to_end(&mut bytes).map_err(|e| Error::io(path, e))?;
    decode_field(&bytes)
}

/// Path of the JSON sidecar next to a field file (`u.bin` → `u.bin.json`).
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

/// Writes the field and a pretty-printed JSON sidecar with `meta`.
pub fn write_field_with_sidecar<M: Serialize>(path: &Path, f: &Field, meta: &M) -> Result<()> {
    write_field(path, f)?;
    let side = sidecar_path(path);
    let json = serde_json::to_string_pretty(meta)?;
    fs::write(&side, json + "\n").map_err(|e| Error::io(&side, e))
}
