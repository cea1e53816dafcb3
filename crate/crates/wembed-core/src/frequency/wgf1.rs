//! The `WGF1` binary grid-function format.
//!
//! Layout: magic bytes `57 47 46 31` ("WGF1"), `u8` dimension, `u32`
//! samples-per-dimension (little-endian), `f64` period (little-endian),
//! then `N^d` complex samples as interleaved little-endian `f64`
//! `(re, im)` pairs in row-major order. Readers reject wrong magic and
//! inconsistent lengths.

use super::grid::{GridFunction, GridSpec};
use crate::indices::{Dimension, Rational};
use num_complex::Complex64;
use num_rational::Ratio;
use std::io::{self, Read, Write};

pub const MAGIC: [u8; 4] = *b"WGF1";

/// Errors from reading or writing the format.
#[derive(Debug, thiserror::Error)]
pub enum Wgf1Error {
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("bad magic bytes {0:02x?}, expected {1:02x?}", )]
    BadMagic([u8; 4], [u8; 4]),
    #[error("invalid header: {0}")]
    BadHeader(String),
    #[error("payload length mismatch: expected {expected} samples, got {got}")]
    BadLength { expected: usize, got: usize },
}

/// Serialize a grid function.
pub fn write_wgf1(f: &GridFunction, mut w: impl Write) -> Result<(), Wgf1Error> {
    w.write_all(&MAGIC)?;
    w.write_all(&[f.spec.dim().get() as u8])?;
    w.write_all(&(f.spec.samples_per_dim() as u32).to_le_bytes())?;
    w.write_all(&f.spec.period_f64().to_le_bytes())?;
    for z in &f.samples {
        w.write_all(&z.re.to_le_bytes())?;
        w.write_all(&z.im.to_le_bytes())?;
    }
    Ok(())
}

/// Deserialize a grid function, validating magic, header and length.
pub fn read_wgf1(mut r: impl Read) -> Result<GridFunction, Wgf1Error> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if magic != MAGIC {
        return Err(Wgf1Error::BadMagic(magic, MAGIC));
    }
    let mut b1 = [0u8; 1];
    r.read_exact(&mut b1)?;
    let d = b1[0];
    let mut b4 = [0u8; 4];
    r.read_exact(&mut b4)?;
    let n = u32::from_le_bytes(b4) as usize;
    let mut b8 = [0u8; 8];
    r.read_exact(&mut b8)?;
    let period = f64::from_le_bytes(b8);
    if !(period.is_finite() && period > 0.0) {
        return Err(Wgf1Error::BadHeader(format!("period {period}")));
    }
    let dim = Dimension::new(d as u32)
        .map_err(|e| Wgf1Error::BadHeader(e.to_string()))?;
    let period = f64_to_rational(period)
        .ok_or_else(|| Wgf1Error::BadHeader("period too extreme for exact storage".into()))?;
    let spec = GridSpec::new(dim, n, period).map_err(|e| Wgf1Error::BadHeader(e.to_string()))?;
    let expected = spec.len();
    let mut samples = Vec::with_capacity(expected);
    let mut pair = [0u8; 16];
    loop {
        match read_exact_or_eof(&mut r, &mut pair)? {
            0 => break,
            16 => {
                let re = f64::from_le_bytes(pair[0..8].try_into().expect("slice len"));
                let im = f64::from_le_bytes(pair[8..16].try_into().expect("slice len"));
                samples.push(Complex64::new(re, im));
            }
            _ => {
                return Err(Wgf1Error::BadLength { expected, got: samples.len() });
            }
        }
        if samples.len() > expected {
            return Err(Wgf1Error::BadLength { expected, got: samples.len() });
        }
    }
    if samples.len() != expected {
        return Err(Wgf1Error::BadLength { expected, got: samples.len() });
    }
    GridFunction::new(spec, samples).map_err(|e| Wgf1Error::BadHeader(e.to_string()))
}

fn read_exact_or_eof(r: &mut impl Read, buf: &mut [u8]) -> Result<usize, Wgf1Error> {
    let mut filled = 0usize;
    while filled < buf.len() {
        let n = r.read(&mut buf[filled..])?;
        if n == 0 {
            return Ok(filled);
        }
        filled += n;
    }
    Ok(filled)
}

/// Exact dyadic-rational reconstruction of an `f64` (every finite `f64`
/// is a rational with power-of-two denominator). Refuses values whose
/// exact form does not fit in `i64`.
fn f64_to_rational(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let mut num = x;
    let mut denom: i64 = 1;
    while num.fract() != 0.0 {
        if denom > (1 << 40) {
            return None;
        }
        num *= 2.0;
        denom *= 2;
    }
    if num.abs() > 9.0e15 {
        return None;
    }
    Some(Ratio::new(num as i64, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{rat, D1};

    fn sample_function() -> GridFunction {
        let spec = GridSpec::new(D1, 64, rat(2, 1)).unwrap();
        GridFunction::from_fn(&spec, |x| Complex64::new(x[0].cos(), (2.0 * x[0]).sin()))
    }

    #[test]
    fn round_trip_preserves_bits() {
        let f = sample_function();
        let mut buf = Vec::new();
        write_wgf1(&f, &mut buf).unwrap();
        assert_eq!(&buf[0..4], b"WGF1");
        let g = read_wgf1(buf.as_slice()).unwrap();
        assert_eq!(f.spec, g.spec);
        assert_eq!(f.samples, g.samples);
    }

    #[test]
    fn wrong_magic_is_rejected() {
        let f = sample_function();
        let mut buf = Vec::new();
        write_wgf1(&f, &mut buf).unwrap();
        buf[0] = b'X';
        assert!(matches!(read_wgf1(buf.as_slice()), Err(Wgf1Error::BadMagic(..))));
    }

    #[test]
    fn truncated_payload_is_rejected() {
        let f = sample_function();
        let mut buf = Vec::new();
        write_wgf1(&f, &mut buf).unwrap();
        buf.truncate(buf.len() - 8);
        assert!(matches!(read_wgf1(buf.as_slice()), Err(Wgf1Error::BadLength { .. })));
    }

    #[test]
    fn excess_payload_is_rejected() {
        let f = sample_function();
        let mut buf = Vec::new();
        write_wgf1(&f, &mut buf).unwrap();
        buf.extend_from_slice(&[0u8; 16]);
        assert!(matches!(read_wgf1(buf.as_slice()), Err(Wgf1Error::BadLength { .. })));
    }
}
