//! Binary and textual containers for grid functions and dense symbols.
//!
//! Binary layout, little-endian: magic `MFMG`, version u32, n u32, N u32,
//! L f64, m u32, count u64, then count (re, im) f64 pairs. Grid functions
//! store m = 1; dense symbols store their linearity and the full
//! (N^n)^m payload. The textual form prints shortest round-trip floats,
//! so both containers are lossless.

use std::io::{BufRead, Read, Write};

use num_complex::Complex64;

use crate::error::FourierError;
use crate::grid::{GridFunction, GridSpec};
use crate::symbol::SymbolGrid;

const MAGIC: &[u8; 4] = b"MFMG";
const VERSION: u32 = 1;

fn write_header<W: Write>(
    w: &mut W,
    n: usize,
    points: usize,
    period: f64,
    m: usize,
    count: usize,
) -> Result<(), FourierError> {
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(n as u32).to_le_bytes())?;
    w.write_all(&(points as u32).to_le_bytes())?;
    w.write_all(&period.to_le_bytes())?;
    w.write_all(&(m as u32).to_le_bytes())?;
    w.write_all(&(count as u64).to_le_bytes())?;
    Ok(())
}

fn write_payload<W: Write>(w: &mut W, samples: &[Complex64]) -> Result<(), FourierError> {
    for z in samples {
        w.write_all(&z.re.to_le_bytes())?;
        w.write_all(&z.im.to_le_bytes())?;
    }
    Ok(())
}

struct Header {
    n: usize,
    points: usize,
    period: f64,
    m: usize,
    count: usize,
}

fn read_header<R: Read>(r: &mut R) -> Result<Header, FourierError> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(FourierError::Malformed {
            reason: "bad magic".into(),
        });
    }
    let mut u32buf = [0u8; 4];
    let mut u64buf = [0u8; 8];
    r.read_exact(&mut u32buf)?;
    let version = u32::from_le_bytes(u32buf);
    if version != VERSION {
        return Err(FourierError::Malformed {
            reason: format!("unsupported version {version}"),
        });
    }
    r.read_exact(&mut u32buf)?;
    let n = u32::from_le_bytes(u32buf) as usize;
    r.read_exact(&mut u32buf)?;
    let points = u32::from_le_bytes(u32buf) as usize;
    r.read_exact(&mut u64buf)?;
    let period = f64::from_le_bytes(u64buf);
    r.read_exact(&mut u32buf)?;
    let m = u32::from_le_bytes(u32buf) as usize;
    r.read_exact(&mut u64buf)?;
    let count = u64::from_le_bytes(u64buf) as usize;
    Ok(Header {
        n,
        points,
        period,
        m,
        count,
    })
}

fn read_payload<R: Read>(r: &mut R, count: usize) -> Result<Vec<Complex64>, FourierError> {
    let mut buf = [0u8; 8];
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        r.read_exact(&mut buf)?;
        let re = f64::from_le_bytes(buf);
        r.read_exact(&mut buf)?;
        let im = f64::from_le_bytes(buf);
        samples.push(Complex64::new(re, im));
    }
    Ok(samples)
}

pub fn write_grid_function<W: Write>(w: &mut W, f: &GridFunction) -> Result<(), FourierError> {
    let spec = f.spec();
    write_header(
        w,
        spec.n(),
        spec.points(),
        spec.period(),
        1,
        f.samples().len(),
    )?;
    write_payload(w, f.samples())
}

pub fn read_grid_function<R: Read>(r: &mut R) -> Result<GridFunction, FourierError> {
    let h = read_header(r)?;
    if h.m != 1 {
        return Err(FourierError::Malformed {
            reason: format!("expected a grid function (m = 1), got m = {}", h.m),
        });
    }
    let spec = GridSpec::new(h.n, h.points, h.period)?;
    if h.count != spec.total_points() {
        return Err(FourierError::Malformed {
            reason: format!(
                "count {} does not match lattice size {}",
                h.count,
                spec.total_points()
            ),
        });
    }
    let samples = read_payload(r, h.count)?;
    GridFunction::new(spec, samples)
}

pub fn write_symbol<W: Write>(w: &mut W, sigma: &SymbolGrid) -> Result<(), FourierError> {
    let dense = sigma.densify()?;
    let spec = sigma.spec();
    write_header(
        w,
        spec.n(),
        spec.points(),
        spec.period(),
        sigma.m(),
        dense.len(),
    )?;
    write_payload(w, &dense)
}

pub fn read_symbol<R: Read>(r: &mut R) -> Result<SymbolGrid, FourierError> {
    let h = read_header(r)?;
    let spec = GridSpec::new(h.n, h.points, h.period)?;
    let samples = read_payload(r, h.count)?;
    SymbolGrid::from_dense(spec, h.m, samples)
}

/// Lossless text form for small grids: a header line then one `re im`
/// sample per line, shortest round-trip formatting.
pub fn write_grid_function_text<W: Write>(
    w: &mut W,
    f: &GridFunction,
) -> Result<(), FourierError> {
    let spec = f.spec();
    writeln!(
        w,
        "mfmg-text {} {} {} {:e} 1 {}",
        VERSION,
        spec.n(),
        spec.points(),
        spec.period(),
        f.samples().len()
    )?;
    for z in f.samples() {
        writeln!(w, "{:e} {:e}", z.re, z.im)?;
    }
    Ok(())
}

fn read_text_parts<R: BufRead>(
    r: &mut R,
) -> Result<(GridSpec, usize, Vec<Complex64>), FourierError> {
    let mut header = String::new();
    r.read_line(&mut header)?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 7 || parts[0] != "mfmg-text" {
        return Err(FourierError::Malformed {
            reason: "bad text header".into(),
        });
    }
    let parse = |s: &str| -> Result<f64, FourierError> {
        s.parse().map_err(|_| FourierError::Malformed {
            reason: format!("bad number `{s}`"),
        })
    };
    let n = parse(parts[2])? as usize;
    let points = parse(parts[3])? as usize;
    let period = parse(parts[4])?;
    let m = parse(parts[5])? as usize;
    let count = parse(parts[6])? as usize;
    let spec = GridSpec::new(n, points, period)?;
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        let mut line = String::new();
        r.read_line(&mut line)?;
        let mut it = line.split_whitespace();
        let re = parse(it.next().unwrap_or(""))?;
        let im = parse(it.next().unwrap_or(""))?;
        samples.push(Complex64::new(re, im));
    }
    Ok((spec, m, samples))
}

pub fn read_grid_function_text<R: BufRead>(r: &mut R) -> Result<GridFunction, FourierError> {
    let (spec, m, samples) = read_text_parts(r)?;
    if m != 1 {
        return Err(FourierError::Malformed {
            reason: format!("expected a grid function (m = 1), got m = {m}"),
        });
    }
    GridFunction::new(spec, samples)
}

/// Text form of a dense symbol; same layout with m > 1 allowed.
pub fn write_symbol_text<W: Write>(w: &mut W, sigma: &SymbolGrid) -> Result<(), FourierError> {
    let dense = sigma.densify()?;
    let spec = sigma.spec();
    writeln!(
        w,
        "mfmg-text {} {} {} {:e} {} {}",
        VERSION,
        spec.n(),
        spec.points(),
        spec.period(),
        sigma.m(),
        dense.len()
    )?;
    for z in &dense {
        writeln!(w, "{:e} {:e}", z.re, z.im)?;
    }
    Ok(())
}

pub fn read_symbol_text<R: BufRead>(r: &mut R) -> Result<SymbolGrid, FourierError> {
    let (spec, m, samples) = read_text_parts(r)?;
    SymbolGrid::from_dense(spec, m, samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn binary_roundtrip_is_lossless() {
        let spec = GridSpec::unit(1, 16).unwrap();
        let f = GridFunction::random_bandlimited(spec, 7, 5);
        let mut buf = Vec::new();
        write_grid_function(&mut buf, &f).unwrap();
        let back = read_grid_function(&mut Cursor::new(buf)).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn text_roundtrip_is_lossless() {
        let spec = GridSpec::unit(1, 8).unwrap();
        let f = GridFunction::random_bandlimited(spec, 3, 3);
        let mut buf = Vec::new();
        write_grid_function_text(&mut buf, &f).unwrap();
        let back = read_grid_function_text(&mut Cursor::new(buf)).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn symbol_roundtrip_keeps_samples() {
        let spec = GridSpec::unit(1, 8).unwrap();
        let sigma = SymbolGrid::make_symbol(spec, 2, "random_bandlimited", &[9.0, 3.0]).unwrap();
        let mut buf = Vec::new();
        write_symbol(&mut buf, &sigma).unwrap();
        let back = read_symbol(&mut Cursor::new(buf)).unwrap();
        assert_eq!(sigma.densify().unwrap(), back.densify().unwrap());
        assert_eq!(back.m(), 2);

        let mut text = Vec::new();
        write_symbol_text(&mut text, &sigma).unwrap();
        let back = read_symbol_text(&mut Cursor::new(text)).unwrap();
        assert_eq!(sigma.densify().unwrap(), back.densify().unwrap());
    }

    #[test]
    fn corrupt_magic_is_rejected() {
        let data = b"NOPE".to_vec();
        assert!(matches!(
            read_grid_function(&mut Cursor::new(data)),
            Err(FourierError::Malformed { .. }) | Err(FourierError::Io(_))
        ));
    }
}
