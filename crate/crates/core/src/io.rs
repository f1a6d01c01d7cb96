//! Binary snapshot formats and CSV emission.
//!
//! `DGF1`: magic, little-endian `u32 N`, then `2N+1` complex pairs for
//! `k = -N..=N`. `EIG1`: magic, `u32 K`, `K` complex pairs for `η_1..η_K`,
//! then one complex pair for `λ`.

use std::io::{Read, Write};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::heun::EigenfunctionSeries;
use crate::linear_ops::ModeVector;
use crate::spectral::RealCircleField;

pub const FIELD_MAGIC: &[u8; 4] = b"DGF1";
pub const SERIES_MAGIC: &[u8; 4] = b"EIG1";

/// Upper bound on stored lengths, to reject corrupt headers before allocating.
const MAX_LEN: u32 = 1 << 26;

fn write_pair<W: Write>(w: &mut W, c: Complex<f64>) -> Result<()> {
    w.write_all(&c.re.to_le_bytes())?;
    w.write_all(&c.im.to_le_bytes())?;
    Ok(())
}

fn read_array<const N: usize, R: Read>(r: &mut R) -> Result<[u8; N]> {
    let mut buf = [0u8; N];
    r.read_exact(&mut buf).map_err(|e| match e.kind() {
        std::io::ErrorKind::UnexpectedEof => Error::Format("truncated snapshot".into()),
        _ => Error::Io(e),
    })?;
    Ok(buf)
}

fn read_pair<R: Read>(r: &mut R) -> Result<Complex<f64>> {
    let re = f64::from_le_bytes(read_array(r)?);
    let im = f64::from_le_bytes(read_array(r)?);
    Ok(Complex::new(re, im))
}

fn read_header<R: Read>(r: &mut R, magic: &[u8; 4]) -> Result<u32> {
    let got: [u8; 4] = read_array(r)?;
    if &got != magic {
        return Err(Error::Format(format!(
            "bad magic {:?}, expected {:?}",
            String::from_utf8_lossy(&got),
            String::from_utf8_lossy(magic)
        )));
    }
    let len = u32::from_le_bytes(read_array(r)?);
    if len > MAX_LEN {
        return Err(Error::Format(format!("declared length {len} is implausible")));
    }
    Ok(len)
}

fn expect_end<R: Read>(r: &mut R) -> Result<()> {
    let mut extra = [0u8; 1];
    match r.read(&mut extra)? {
        0 => Ok(()),
        _ => Err(Error::Format("trailing bytes after snapshot".into())),
    }
}

pub fn write_field<W: Write>(w: &mut W, field: &RealCircleField<f64>) -> Result<()> {
    let n = u32::try_from(field.max_mode()).map_err(|_| Error::Format("mode count overflows u32".into()))?;
    w.write_all(FIELD_MAGIC)?;
    w.write_all(&n.to_le_bytes())?;
    for &c in field.coeffs() {
        write_pair(w, c)?;
    }
    Ok(())
}

pub fn read_field<R: Read>(r: &mut R) -> Result<RealCircleField<f64>> {
    let n = read_header(r, FIELD_MAGIC)? as usize;
    let coeffs = (0..2 * n + 1).map(|_| read_pair(r)).collect::<Result<Vec<_>>>()?;
    expect_end(r)?;
    if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::Format("non-finite coefficient".into()));
    }
    RealCircleField::from_coeffs(coeffs).map_err(|e| Error::Format(e.to_string()))
}

pub fn write_series<W: Write>(w: &mut W, series: &EigenfunctionSeries<f64>) -> Result<()> {
    let k = u32::try_from(series.k_max()).map_err(|_| Error::Format("mode count overflows u32".into()))?;
    w.write_all(SERIES_MAGIC)?;
    w.write_all(&k.to_le_bytes())?;
    for &c in series.coeffs.entries() {
        write_pair(w, c)?;
    }
    write_pair(w, series.lambda)
}

pub fn read_series<R: Read>(r: &mut R) -> Result<EigenfunctionSeries<f64>> {
    let k = read_header(r, SERIES_MAGIC)? as usize;
    let entries = (0..k).map(|_| read_pair(r)).collect::<Result<Vec<_>>>()?;
    let lambda = read_pair(r)?;
    expect_end(r)?;
    Ok(EigenfunctionSeries {
        lambda,
        coeffs: ModeVector::from_entries(entries),
    })
}

/// Writes a header row and data rows, each value with 17 significant digits.
pub fn write_csv<W, I, Row>(w: &mut W, header: &[&str], rows: I) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = Row>,
    Row: AsRef<[f64]>,
{
    writeln!(w, "{}", header.join(","))?;
    for row in rows {
        let row = row.as_ref();
        if row.len() != header.len() {
            return Err(Error::Format(format!(
                "row has {} values for {} columns",
                row.len(),
                header.len()
            )));
        }
        let line: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    Ok(())
}
