//! Dense linear algebra over GF(2).
//!
//! Vectors are bit-packed into `u64` words and every row operation is
//! word-parallel. Matrices are lists of equal-length rows; a matrix with zero
//! rows is legal and spans the zero subspace.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    /// The `i`th standard basis vector of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Builds a vector from the low `len` bits of `value`, bit `len-1-i` of
    /// `value` landing at position `i` (so the printed string reads like the
    /// binary literal).
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64);
        Self::from_bools((0..len).map(|i| (value >> (len - 1 - i)) & 1 == 1))
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected character {other:?} in bit string"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_bools)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// In-place `self += other`. Panics on length mismatch; use [`xor_add`]
    /// for the checked form.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in GF(2) addition");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Ordinary GF(2) inner product.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in GF(2) inner product");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Bitwise OR, used for Pauli weights.
    pub fn or(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len);
        BitVector {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
            len: self.len,
        }
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len);
        BitVector {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
            len: self.len,
        }
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn concat(&self, other: &BitVector) -> BitVector {
        BitVector::from_bools(self.iter().chain(other.iter()))
    }

    pub fn slice(&self, start: usize, end: usize) -> BitVector {
        assert!(start <= end && end <= self.len);
        BitVector::from_bools((start..end).map(|i| self.get(i)))
    }

    /// Copy with position `i` removed.
    pub fn without(&self, i: usize) -> BitVector {
        BitVector::from_bools((0..self.len).filter(|&j| j != i).map(|j| self.get(j)))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl serde::Serialize for BitVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Checked componentwise sum mod 2.
pub fn xor_add(u: &BitVector, v: &BitVector) -> Result<BitVector> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    let mut out = u.clone();
    out.xor_assign(v);
    Ok(out)
}

/// A rectangular matrix over GF(2), stored row-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    rows: Vec<BitVector>,
    ncols: usize,
}

impl BinMatrix {
    /// The empty (zero-row) matrix with `ncols` columns.
    pub fn empty(ncols: usize) -> Self {
        Self {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            rows: vec![BitVector::zeros(ncols); nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn from_rows(rows: Vec<BitVector>, ncols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(Self { rows, ncols })
    }

    /// Parses rows of `0`/`1` strings; convenience for tests and literals.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| BitVector::parse(&r.replace(['|', ' '], "")))
            .collect::<Result<Vec<_>>>()?;
        let ncols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(parsed, ncols)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut t = BinMatrix::zeros(self.ncols, self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `self · v^T`, returned as a vector of length `nrows`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.ncols {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: v.len(),
            });
        }
        Ok(BitVector::from_bools(self.rows.iter().map(|r| r.dot(v))))
    }

    /// `v · self`, a combination of rows selected by `v`.
    pub fn combine_rows(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.nrows(),
                found: v.len(),
            });
        }
        let mut out = BitVector::zeros(self.ncols);
        for i in v.ones() {
            out.xor_assign(&self.rows[i]);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &BinMatrix) -> Result<BinMatrix> {
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| other.combine_rows(r))
            .collect::<Result<Vec<_>>>()?;
        BinMatrix::from_rows(rows, other.ncols)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &BinMatrix) -> Result<BinMatrix> {
        if self.ncols != other.ncols {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                found: other.ncols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BinMatrix {
            rows,
            ncols: self.ncols,
        })
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &BinMatrix) -> Result<BinMatrix> {
        if self.nrows() != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.nrows(),
                found: other.nrows(),
            });
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.concat(b)).collect();
        Ok(BinMatrix {
            rows,
            ncols: self.ncols + other.ncols,
        })
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<BinMatrix> {
        if self.nrows() != self.ncols {
            return None;
        }
        let n = self.ncols;
        let aug = self.hstack(&BinMatrix::identity(n)).ok()?;
        let red = rref(&aug);
        if red.pivots.iter().take(n).copied().ne(0..n) || red.rank < n {
            return None;
        }
        let rows = red.rref.rows.iter().take(n).map(|r| r.slice(n, 2 * n)).collect();
        Some(BinMatrix { rows, ncols: n })
    }

    /// Parses the text matrix format: one row per line over `{0,1}`, an
    /// optional `|` inside each row, blank lines and `#` comments skipped.
    /// The separator is discarded here; see [`crate::format`] for the
    /// symplectic reading.
    pub fn parse_text(text: &str) -> Result<BinMatrix> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let compact: String = line.chars().filter(|c| !c.is_whitespace() && *c != '|').collect();
            let row = BitVector::parse(&compact).map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            if let Some(first) = rows.first().map(BitVector::len) {
                if row.len() != first {
                    return Err(Error::Parse(format!(
                        "line {}: row has {} columns, expected {first}",
                        lineno + 1,
                        row.len()
                    )));
                }
            }
            rows.push(row);
        }
        let ncols = rows.first().map_or(0, BitVector::len);
        Ok(BinMatrix { rows, ncols })
    }
}

impl fmt::Display for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMatrix {}x{} [", self.nrows(), self.ncols)?;
        for row in &self.rows {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

/// An elementary row operation recorded during elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    /// `rows[dst] += rows[src]`
    Add {
        src: usize,
        dst: usize,
    },
}

#[derive(Clone, Debug)]
pub struct RrefResult {
    pub rref: BinMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub row_ops: Vec<RowOp>,
}

impl RrefResult {
    /// Replays the recorded row operations on a column vector.
    pub fn apply_ops(&self, t: &mut BitVector) {
        for op in &self.row_ops {
            match *op {
                RowOp::Swap(a, b) => {
                    let (x, y) = (t.get(a), t.get(b));
                    t.set(a, y);
                    t.set(b, x);
                }
                RowOp::Add { src, dst } => {
                    if t.get(src) {
                        t.flip(dst);
                    }
                }
            }
        }
    }
}

/// Reduced row-echelon form with leftmost-pivot, topmost-row selection.
pub fn rref(m: &BinMatrix) -> RrefResult {
    let mut rows = m.rows.clone();
    let mut pivots = Vec::new();
    let mut ops = Vec::new();
    let mut next = 0;
    for col in 0..m.ncols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        if found != next {
            rows.swap(found, next);
            ops.push(RowOp::Swap(found, next));
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.xor_assign(&pivot_row);
                ops.push(RowOp::Add { src: next, dst: r });
            }
        }
        pivots.push(col);
        next += 1;
    }
    RrefResult {
        rank: pivots.len(),
        rref: BinMatrix { rows, ncols: m.ncols },
        pivots,
        row_ops: ops,
    }
}

pub fn rank(m: &BinMatrix) -> usize {
    let mut basis = EchelonBasis::new(m.ncols());
    m.rows().iter().filter(|r| basis.insert(r)).count()
}

pub fn row_space_contains(m: &BinMatrix, v: &BitVector) -> Result<bool> {
    if v.len() != m.ncols() {
        return Err(Error::DimensionMismatch {
            expected: m.ncols(),
            found: v.len(),
        });
    }
    let mut basis = EchelonBasis::new(m.ncols());
    for r in m.rows() {
        basis.insert(r);
    }
    Ok(basis.contains(v))
}

/// Finds some `s` with `m · s^T = t^T`, or `None` when the system is
/// inconsistent.
pub fn solve(m: &BinMatrix, t: &BitVector) -> Result<Option<BitVector>> {
    if t.len() != m.nrows() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: t.len(),
        });
    }
    let red = rref(m);
    let mut rhs = t.clone();
    red.apply_ops(&mut rhs);
    if (red.rank..m.nrows()).any(|r| rhs.get(r)) {
        return Ok(None);
    }
    let mut s = BitVector::zeros(m.ncols());
    for (i, &p) in red.pivots.iter().enumerate() {
        s.set(p, rhs.get(i));
    }
    Ok(Some(s))
}

/// A basis of the right null space `{v : m · v^T = 0}`.
pub fn kernel(m: &BinMatrix) -> BinMatrix {
    let red = rref(m);
    let n = m.ncols();
    let mut is_pivot = vec![false; n];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let rows = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVector::unit(n, f);
            for (i, &p) in red.pivots.iter().enumerate() {
                if red.rref.get(i, f) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();
    BinMatrix { rows, ncols: n }
}

/// Incrementally maintained echelon basis for span membership and
/// independent-row selection.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    /// (pivot column, reduced row), each pivot the lowest set bit of its row
    rows: Vec<(usize, BitVector)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        Self { len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.len);
        let mut r = v.clone();
        for (p, row) in &self.rows {
            if r.get(*p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns `false` if it was already there.
    pub fn insert(&mut self, v: &BitVector) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.first_one() else {
            return false;
        };
        // keep rows fully reduced against the new pivot
        for (_, row) in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        self.rows.push((p, r));
        true
    }
}

/// The original rows of `m` that are independent of the rows before them,
/// in order.
pub fn independent_rows(m: &BinMatrix) -> BinMatrix {
    let mut basis = EchelonBasis::new(m.ncols());
    let rows = m.rows().iter().filter(|r| basis.insert(r)).cloned().collect();
    BinMatrix { rows, ncols: m.ncols() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_examples() {
        let u = BitVector::parse("1010").unwrap();
        let v = BitVector::parse("0110").unwrap();
        assert_eq!(xor_add(&u, &v).unwrap(), BitVector::parse("1100").unwrap());
        assert!(xor_add(&u, &u).unwrap().is_zero());
        assert_eq!(xor_add(&u, &BitVector::zeros(4)).unwrap(), u);
        assert!(xor_add(&u, &BitVector::zeros(5)).is_err());
    }

    #[test]
    fn words_straddle() {
        let mut v = BitVector::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.without(64).weight(), 2);
        assert_eq!(v.first_one(), Some(0));
    }

    #[test]
    fn rref_identity_and_duplicates() {
        let id = BinMatrix::identity(5);
        let r = rref(&id);
        assert_eq!(r.rref, id);
        assert_eq!(r.rank, 5);
        let dup = BinMatrix::from_strs(&["1100", "0110", "1100"]).unwrap();
        assert_eq!(rank(&dup), 2);
        assert_eq!(rank(&BinMatrix::zeros(3, 4)), 0);
        assert_eq!(rank(&BinMatrix::empty(4)), 0);
    }

    #[test]
    fn rref_rows_beyond_rank_are_zero() {
        let m = BinMatrix::from_strs(&["0110", "1011", "1101", "0000"]).unwrap();
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        assert!(r.rref.rows()[2..].iter().all(BitVector::is_zero));
    }

    #[test]
    fn solve_identity_and_zero() {
        let id = BinMatrix::identity(4);
        let t = BitVector::parse("1011").unwrap();
        assert_eq!(solve(&id, &t).unwrap(), Some(t.clone()));
        let m = BinMatrix::from_strs(&["110", "011"]).unwrap();
        let s = solve(&m, &BitVector::zeros(2)).unwrap().unwrap();
        assert!(m.mul_vec(&s).unwrap().is_zero());
    }

    #[test]
    fn solve_inconsistent() {
        let m = BinMatrix::from_strs(&["11", "11"]).unwrap();
        assert_eq!(solve(&m, &BitVector::parse("10").unwrap()).unwrap(), None);
        assert!(solve(&m, &BitVector::parse("101").unwrap()).is_err());
    }

    #[test]
    fn kernel_edge_cases() {
        assert_eq!(kernel(&BinMatrix::identity(4)).nrows(), 0);
        assert_eq!(kernel(&BinMatrix::zeros(2, 3)), BinMatrix::identity(3));
        assert_eq!(kernel(&BinMatrix::empty(3)), BinMatrix::identity(3));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = BinMatrix::from_strs(&["110", "011", "001"]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), BinMatrix::identity(3));
        let singular = BinMatrix::from_strs(&["110", "110", "001"]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn text_format() {
        let text = "# comment\n110|000\n\n101|000  # trailing\n";
        let m = BinMatrix::parse_text(text).unwrap();
        assert_eq!(m.nrows(), 2);
        assert_eq!(m.ncols(), 6);
        assert!(BinMatrix::parse_text("10\n1\n").is_err());
        assert!(BinMatrix::parse_text("1x\n").is_err());
    }

    #[test]
    fn independent_rows_keeps_originals() {
        let m = BinMatrix::from_strs(&["110", "011", "101", "001"]).unwrap();
        let ind = independent_rows(&m);
        assert_eq!(ind.rows(), &[m.row(0).clone(), m.row(1).clone(), m.row(3).clone()]);
    }
}
