use super::AnyCoo;
use crate::algebra::{BinaryOp, Monoid};
use crate::domain::{Complex64, Scalar, ValueDomain};
use crate::error::{Error, Result};
use crate::sparse::{CooMatrix, MatrixDescriptor, Triple};
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MmField {
    Real,
    Integer,
    Complex,
    Pattern,
}

impl MmField {
    fn name(self) -> &'static str {
        match self {
            MmField::Real => "real",
            MmField::Integer => "integer",
            MmField::Complex => "complex",
            MmField::Pattern => "pattern",
        }
    }

    fn value_tokens(self) -> usize {
        match self {
            MmField::Pattern => 0,
            MmField::Real | MmField::Integer => 1,
            MmField::Complex => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MmSymmetry {
    General,
    Symmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixMarketHeader {
    pub field: MmField,
    pub symmetry: MmSymmetry,
}

impl fmt::Display for MatrixMarketHeader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symmetry = match self.symmetry {
            MmSymmetry::General => "general",
            MmSymmetry::Symmetric => "symmetric",
        };
        write!(f, "%%MatrixMarket matrix coordinate {} {symmetry}", self.field.name())
    }
}

impl FromStr for MatrixMarketHeader {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let words: Vec<String> = line.split_whitespace().map(str::to_ascii_lowercase).collect();
        if words.first().map(String::as_str) != Some("%%matrixmarket") {
            return Err(Error::UnsupportedHeader(format!("not a Matrix Market banner: {line:?}")));
        }
        if words.len() != 5 {
            return Err(Error::UnsupportedHeader(format!("expected 5 banner words, found {}", words.len())));
        }
        if words[1] != "matrix" {
            return Err(Error::UnsupportedHeader(format!("object {:?} (only matrix)", words[1])));
        }
        if words[2] != "coordinate" {
            return Err(Error::UnsupportedHeader(format!("format {:?} (only coordinate)", words[2])));
        }
        let field = match words[3].as_str() {
            "real" => MmField::Real,
            "integer" => MmField::Integer,
            "complex" => MmField::Complex,
            "pattern" => MmField::Pattern,
            other => return Err(Error::UnsupportedHeader(format!("field {other:?}"))),
        };
        let symmetry = match words[4].as_str() {
            "general" => MmSymmetry::General,
            "symmetric" => MmSymmetry::Symmetric,
            other => return Err(Error::UnsupportedHeader(format!("symmetry {other:?}"))),
        };
        Ok(MatrixMarketHeader { field, symmetry })
    }
}

/// Domains that can be read from and written to Matrix Market files.
pub trait MmValue: Scalar {
    /// Whether entries of a file with field `field` can be parsed as `Self`.
    fn accepts(field: MmField) -> bool;

    /// Value given to entries of a pattern file.
    fn pattern_value() -> Self;

    fn parse_tokens(tokens: &[&str]) -> Option<Self>;

    fn zero() -> Self;

    /// Merge of repeated coordinates: addition (wrapping for integers, `∨`
    /// for booleans).
    fn sum(a: Self, b: Self) -> Self;
}

macro_rules! mm_integer {
    ($($t:ty),*) => {$(
        impl MmValue for $t {
            fn accepts(field: MmField) -> bool {
                matches!(field, MmField::Integer | MmField::Pattern)
            }
            fn pattern_value() -> Self {
                1
            }
            fn parse_tokens(tokens: &[&str]) -> Option<Self> {
                tokens[0].parse().ok()
            }
            fn zero() -> Self {
                0
            }
            fn sum(a: Self, b: Self) -> Self {
                a.wrapping_add(b)
            }
        }
    )*};
}

macro_rules! mm_real {
    ($($t:ty),*) => {$(
        impl MmValue for $t {
            fn accepts(field: MmField) -> bool {
                matches!(field, MmField::Real | MmField::Integer | MmField::Pattern)
            }
            fn pattern_value() -> Self {
                1.0
            }
            fn parse_tokens(tokens: &[&str]) -> Option<Self> {
                tokens[0].parse().ok()
            }
            fn zero() -> Self {
                0.0
            }
            fn sum(a: Self, b: Self) -> Self {
                a + b
            }
        }
    )*};
}

mm_integer!(i8, i16, i32, i64, u8, u16, u32, u64);
mm_real!(f32, f64);

impl MmValue for bool {

    fn accepts(field: MmField) -> bool {
        matches!(field, MmField::Integer | MmField::Pattern)
    }

    fn pattern_value() -> Self {
        true
    }

    fn parse_tokens(tokens: &[&str]) -> Option<Self> {
        match tokens[0] {
            "1" => Some(true),
            "0" => Some(false),
            _ => None,
        }
    }

    fn zero() -> Self {
        false
    }

    fn sum(a: Self, b: Self) -> Self {
        a || b
    }
}

impl MmValue for Complex64 {

    fn accepts(field: MmField) -> bool {
        matches!(field, MmField::Complex | MmField::Pattern)
    }

    fn pattern_value() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn parse_tokens(tokens: &[&str]) -> Option<Self> {
        Some(Complex64::new(tokens[0].parse().ok()?, tokens[1].parse().ok()?))
    }

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn sum(a: Self, b: Self) -> Self {
        a + b
    }
}

/// Reads a coordinate Matrix Market file into the domain its field declares.
pub fn read_matrix_market<R: BufRead>(input: R) -> Result<(MatrixMarketHeader, AnyCoo)> {
    let mut lines = Lines::new(input);
    let header = lines.header()?;
    let m = match header.field {
        MmField::Integer | MmField::Pattern => AnyCoo::Int64(read_body(&mut lines, header)?),
        MmField::Real => AnyCoo::Float64(read_body(&mut lines, header)?),
        MmField::Complex => AnyCoo::Complex64(read_body(&mut lines, header)?),
    };
    Ok((header, m))
}

/// Reads a coordinate Matrix Market file directly into `T`, which must be
/// able to represent the file's field.
pub fn read_matrix_market_as<T: MmValue, R: BufRead>(input: R) -> Result<CooMatrix<T>> {
    let mut lines = Lines::new(input);
    let header = lines.header()?;
    if !T::accepts(header.field) {
        return Err(Error::UnsupportedHeader(format!(
            "field {} cannot be read as {}",
            header.field.name(),
            T::DOMAIN
        )));
    }
    read_body(&mut lines, header)
}

/// Writes `m` as a general coordinate file with 1-based indices. Floats are
/// written in their shortest exactly round-tripping decimal form.
pub fn write_matrix_market<T: Scalar, W: Write>(m: &CooMatrix<T>, mut out: W) -> Result<()> {
    if T::DOMAIN == ValueDomain::OpaqueHandle {
        return Err(Error::UnserializableDomain(T::DOMAIN));
    }
    let mut body = String::new();
    for t in m.triples() {
        let text = t.val.to_text().ok_or(Error::UnserializableDomain(T::DOMAIN))?;
        body.push_str(&format!("{} {} {text}\n", t.row + 1, t.col + 1));
    }
    let field = match T::DOMAIN {
        ValueDomain::Complex64 => MmField::Complex,
        d if d.is_float() => MmField::Real,
        _ => MmField::Integer,
    };
    let header = MatrixMarketHeader {
        field,
        symmetry: MmSymmetry::General,
    };
    writeln!(out, "{header}")?;
    writeln!(out, "{} {} {}", m.nrows(), m.ncols(), m.nvals())?;
    out.write_all(body.as_bytes())?;
    out.flush()?;
    Ok(())
}

struct Lines<R> {
    input: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Lines<R> {
    fn new(input: R) -> Self {
        Lines {
            input,
            line: 0,
            buf: String::new(),
        }
    }

    fn raw(&mut self) -> Result<Option<&str>> {
        self.buf.clear();
        if self.input.read_line(&mut self.buf)? == 0 {
            return Ok(None);
        }
        self.line += 1;
        Ok(Some(self.buf.trim()))
    }

    /// Next line that is neither blank nor a `%` comment.
    fn content(&mut self) -> Result<Option<&str>> {
        loop {
            match self.raw()? {
                None => return Ok(None),
                Some(l) if l.is_empty() || l.starts_with('%') => continue,
                Some(_) => return Ok(Some(self.buf.trim())),
            }
        }
    }

    fn header(&mut self) -> Result<MatrixMarketHeader> {
        match self.raw()? {
            Some(l) => l.parse(),
            None => Err(Error::UnsupportedHeader("empty input".into())),
        }
    }

    fn parse_err(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            reason: reason.into(),
        }
    }
}

fn read_body<T: MmValue, R: BufRead>(lines: &mut Lines<R>, header: MatrixMarketHeader) -> Result<CooMatrix<T>> {
    let Some(size) = lines.content()?.map(str::to_string) else {
        return Err(lines.parse_err("missing size line"));
    };
    let dims: Vec<usize> = size
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| lines.parse_err(format!("bad size line {size:?}")))?;
    let [nrows, ncols, nnz] = dims[..] else {
        return Err(lines.parse_err("size line needs rows, columns and entry count"));
    };
    let symmetric = header.symmetry == MmSymmetry::Symmetric;
    if symmetric && nrows != ncols {
        return Err(lines.parse_err("symmetric matrix must be square"));
    }

    let width = 2 + header.field.value_tokens();
    let mut triples: Vec<Triple<T>> = Vec::with_capacity(if symmetric { 2 * nnz } else { nnz });
    for k in 0..nnz {
        let Some(entry) = lines.content()? else {
            return Err(lines.parse_err(format!("expected {nnz} entries, found {k}")));
        };
        let tokens: Vec<&str> = entry.split_whitespace().collect();
        if tokens.len() != width {
            let reason = format!("expected {width} fields, found {}", tokens.len());
            return Err(lines.parse_err(reason));
        }
        let (Ok(row), Ok(col)) = (tokens[0].parse::<i64>(), tokens[1].parse::<i64>()) else {
            let reason = format!("bad index in {entry:?}");
            return Err(lines.parse_err(reason));
        };
        if row < 1 || col < 1 || row as u64 > nrows as u64 || col as u64 > ncols as u64 {
            return Err(Error::IndexOutOfBounds {
                line: lines.line,
                row,
                col,
                nrows,
                ncols,
            });
        }
        let val = if header.field == MmField::Pattern {
            T::pattern_value()
        } else {
            match T::parse_tokens(&tokens[2..]) {
                Some(v) => v,
                None => {
                    let reason = format!("bad {} value in {entry:?}", header.field.name());
                    return Err(lines.parse_err(reason));
                }
            }
        };
        let (row, col) = (row as usize - 1, col as usize - 1);
        if symmetric && row < col {
            return Err(lines.parse_err("symmetric file stores an entry above the diagonal"));
        }
        triples.push(Triple::new(row, col, val));
        if symmetric && row != col {
            triples.push(Triple::new(col, row, val));
        }
    }
    if lines.content()?.is_some() {
        return Err(lines.parse_err(format!("more than the declared {nnz} entries")));
    }
    let plus = Monoid::new(BinaryOp::new("plus", T::sum), T::zero());
    let m = CooMatrix::build_from_triples(nrows, ncols, triples, &plus)?;
    Ok(m.with_descriptor(MatrixDescriptor { symmetric }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn read(text: &str) -> Result<(MatrixMarketHeader, AnyCoo)> {
        read_matrix_market(text.as_bytes())
    }

    #[test]
    fn symmetric_triangle_is_expanded() {
        let text = "%%MatrixMarket matrix coordinate pattern symmetric\n% K3\n3 3 3\n2 1\n3 1\n3 2\n";
        let (header, m) = read(text).unwrap();
        assert_eq!(header.symmetry, MmSymmetry::Symmetric);
        assert_eq!(m.nvals(), 6);
        assert!(m.descriptor().symmetric);
        let AnyCoo::Int64(m) = m else { panic!("pattern reads as int64") };
        assert!(m.to_compressed(crate::Orientation::Csr).is_symmetric().unwrap());
    }

    #[test]
    fn one_based_indices() {
        let (_, m) = read("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n").unwrap();
        assert_eq!(m, AnyCoo::Int64(CooMatrix::from_sorted_triples(2, 2, vec![Triple::new(0, 1, 1)]).unwrap()));
        let err = read("%%MatrixMarket matrix coordinate real general\n2 2 1\n0 1 5.0\n").unwrap_err();
        assert!(matches!(err, Error::IndexOutOfBounds { line: 3, row: 0, .. }));
    }

    #[test]
    fn duplicates_are_summed() {
        let (_, m) = read("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 4\n1 1 -1\n").unwrap();
        let AnyCoo::Int64(m) = m else { panic!() };
        assert_eq!(m.get(0, 0), Some(3));
    }

    #[test]
    fn rejected_headers_and_bodies() {
        for banner in [
            "%%MatrixMarket matrix array real general",
            "%%MatrixMarket matrix coordinate real skew-symmetric",
            "%%MatrixMarket matrix coordinate complex hermitian",
            "%%MatrixMarket vector coordinate real general",
            "3 3 0",
        ] {
            let err = read(&format!("{banner}\n1 1 0\n")).unwrap_err();
            assert!(matches!(err, Error::UnsupportedHeader(_)), "{banner}: {err}");
        }
        let err = read("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = read("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn write_then_read() {
        let m = CooMatrix::build_from_triples(
            2,
            3,
            [(0, 0, 0.1), (1, 2, -1.0e-300), (1, 1, 1.0 / 3.0)],
            &Monoid::plus(),
        )
        .unwrap();
        let mut out = Vec::new();
        write_matrix_market(&m, &mut out).unwrap();
        let (_, back) = read_matrix_market(out.as_slice()).unwrap();
        assert_eq!(back, AnyCoo::Float64(m));

        let empty = CooMatrix::<u8>::empty(4, 0);
        let mut out = Vec::new();
        write_matrix_market(&empty, &mut out).unwrap();
        assert_eq!(read_matrix_market_as::<u8, _>(out.as_slice()).unwrap(), empty);

        let opaque = CooMatrix::<crate::OpaqueHandle>::empty(1, 1);
        assert!(matches!(
            write_matrix_market(&opaque, Vec::new()),
            Err(Error::UnserializableDomain(ValueDomain::OpaqueHandle))
        ));
    }
}
