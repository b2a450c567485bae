//! The quaternary field `F_4 = {0, 1, ω, ω̄}`, its identification with
//! `(Z_2)^2`, and the lift of classical quaternary codes to symplectic
//! check matrices.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitVector};
use crate::symplectic::SympVector;

/// An element of `F_4`. Internally `a + bω` stored as the two bits `(a, b)`,
/// which makes addition a XOR.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA_BAR: Gf4 = Gf4(3);

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `tr 0 = tr 1 = 0`, `tr ω = tr ω̄ = 1`
    pub fn trace(self) -> bool {
        self.0 >= 2
    }

    /// Swaps `ω` and `ω̄`.
    pub fn conj(self) -> Gf4 {
        match self.0 {
            2 => Gf4::OMEGA_BAR,
            3 => Gf4::OMEGA,
            _ => self,
        }
    }

    fn log(self) -> Option<u8> {
        match self.0 {
            1 => Some(0),
            2 => Some(1),
            3 => Some(2),
            _ => None,
        }
    }

    fn exp(e: u8) -> Gf4 {
        [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR][(e % 3) as usize]
    }

    pub fn inv(self) -> Option<Gf4> {
        self.log().map(|l| Gf4::exp(3 - l))
    }

    /// `γ`: `0 ↦ 00, ω̄ ↦ 01, 1 ↦ 11, ω ↦ 10` as `(z, x)`.
    pub fn gamma(self) -> (bool, bool) {
        match self.0 {
            0 => (false, false),
            1 => (true, true),
            2 => (true, false),
            _ => (false, true),
        }
    }

    pub fn from_gamma(z: bool, x: bool) -> Gf4 {
        match (z, x) {
            (false, false) => Gf4::ZERO,
            (true, true) => Gf4::ONE,
            (true, false) => Gf4::OMEGA,
            (false, true) => Gf4::OMEGA_BAR,
        }
    }

    pub fn from_char(c: char) -> Result<Gf4> {
        match c {
            '0' => Ok(Gf4::ZERO),
            '1' => Ok(Gf4::ONE),
            'w' => Ok(Gf4::OMEGA),
            'W' => Ok(Gf4::OMEGA_BAR),
            other => Err(Error::Parse(format!("unexpected character {other:?} in GF(4) string"))),
        }
    }

    pub fn to_char(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Gf4) -> Gf4 {
        match (self.log(), rhs.log()) {
            (Some(a), Some(b)) => Gf4::exp(a + b),
            _ => Gf4::ZERO,
        }
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

pub fn gf4_add(a: Gf4, b: Gf4) -> Gf4 {
    a + b
}

pub fn gf4_mul(a: Gf4, b: Gf4) -> Gf4 {
    a * b
}

pub fn gf4_trace(a: Gf4) -> bool {
    a.trace()
}

pub fn gf4_conjugate(a: Gf4) -> Gf4 {
    a.conj()
}

pub fn parse_vector(s: &str) -> Result<Vec<Gf4>> {
    s.chars().filter(|c| !c.is_whitespace()).map(Gf4::from_char).collect()
}

pub fn render_vector(a: &[Gf4]) -> String {
    a.iter().map(|x| x.to_char()).collect()
}

pub fn add_vectors(a: &[Gf4], b: &[Gf4]) -> Result<Vec<Gf4>> {
    check_len(a.len(), b.len())?;
    Ok(a.iter().zip(b).map(|(&x, &y)| x + y).collect())
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// The Hermitian inner product `Σ a_i^† b_i`.
pub fn hermitian_product(a: &[Gf4], b: &[Gf4]) -> Result<Gf4> {
    check_len(a.len(), b.len())?;
    Ok(a.iter().zip(b).fold(Gf4::ZERO, |acc, (&x, &y)| acc + x.conj() * y))
}

/// `tr⟨a, b⟩`
pub fn trace_inner_product(a: &[Gf4], b: &[Gf4]) -> Result<bool> {
    Ok(hermitian_product(a, b)?.trace())
}

/// Applies `γ` componentwise, gathering z bits then x bits.
pub fn gamma(a: &[Gf4]) -> SympVector {
    let (z, x): (Vec<bool>, Vec<bool>) = a.iter().map(|e| e.gamma()).unzip();
    SympVector {
        z: BitVector::from_bools(z),
        x: BitVector::from_bools(x),
    }
}

pub fn gamma_inv(u: &SympVector) -> Vec<Gf4> {
    (0..u.n()).map(|i| Gf4::from_gamma(u.z.get(i), u.x.get(i))).collect()
}

/// Number of non-zero symbols.
pub fn wt4(a: &[Gf4]) -> usize {
    a.iter().filter(|x| !x.is_zero()).count()
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Gf4Matrix {
    rows: Vec<Vec<Gf4>>,
    ncols: usize,
}

impl Gf4Matrix {
    pub fn empty(ncols: usize) -> Self {
        Self {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Gf4>>, ncols: usize) -> Result<Self> {
        for r in &rows {
            check_len(ncols, r.len())?;
        }
        Ok(Self { rows, ncols })
    }

    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let rows = rows.iter().map(|s| parse_vector(s)).collect::<Result<Vec<_>>>()?;
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_rows(rows, ncols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Gf4>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Gf4 {
        self.rows[r][c]
    }

    pub fn scale(&self, s: Gf4) -> Gf4Matrix {
        Gf4Matrix {
            rows: self.rows.iter().map(|r| r.iter().map(|&x| s * x).collect()).collect(),
            ncols: self.ncols,
        }
    }

    pub fn conj(&self) -> Gf4Matrix {
        Gf4Matrix {
            rows: self.rows.iter().map(|r| r.iter().map(|x| x.conj()).collect()).collect(),
            ncols: self.ncols,
        }
    }

    pub fn transpose(&self) -> Gf4Matrix {
        let rows = (0..self.ncols)
            .map(|c| self.rows.iter().map(|r| r[c]).collect())
            .collect();
        Gf4Matrix {
            rows,
            ncols: self.rows.len(),
        }
    }

    /// `M·v` with ordinary (bilinear) products.
    pub fn mul_vec(&self, v: &[Gf4]) -> Result<Vec<Gf4>> {
        check_len(self.ncols, v.len())?;
        Ok(self
            .rows
            .iter()
            .map(|r| r.iter().zip(v).fold(Gf4::ZERO, |acc, (&a, &b)| acc + a * b))
            .collect())
    }

    pub fn vstack(&self, other: &Gf4Matrix) -> Result<Gf4Matrix> {
        check_len(self.ncols, other.ncols)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Gf4Matrix {
            rows,
            ncols: self.ncols,
        })
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Gf4Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().unwrap();
            for x in rows[r].iter_mut() {
                *x = inv * *x;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                let f = row[c];
                if i != r && !f.is_zero() {
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = *x + f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        (
            Gf4Matrix {
                rows,
                ncols: self.ncols,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M·v = 0}`, one vector per row.
    pub fn kernel(&self) -> Gf4Matrix {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = vec![Gf4::ZERO; self.ncols];
                v[f] = Gf4::ONE;
                for (i, &p) in pivots.iter().enumerate() {
                    // characteristic 2: -x = x
                    v[p] = red.rows[i][f];
                }
                v
            })
            .collect();
        Gf4Matrix {
            rows,
            ncols: self.ncols,
        }
    }

    /// Parses one row per line over `{0,1,w,W}`, skipping blanks and `#`
    /// comments.
    pub fn parse_text(text: &str) -> Result<Gf4Matrix> {
        let mut rows: Vec<Vec<Gf4>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = parse_vector(line).map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse(format!(
                        "line {}: row has {} columns, expected {}",
                        lineno + 1,
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
        }
        let ncols = rows.first().map_or(0, Vec::len);
        Ok(Gf4Matrix { rows, ncols })
    }
}

impl fmt::Display for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{}", render_vector(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4Matrix {}x{} [", self.nrows(), self.ncols)?;
        for r in &self.rows {
            write!(f, " {}", render_vector(r))?;
        }
        write!(f, " ]")
    }
}

/// A classical `[n, k, d]_4` code given by its parity checks. A word `a` is
/// a codeword iff `⟨H_4, a⟩ = H_4^† a = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternaryCode {
    pub n: usize,
    pub k: usize,
    pub h4: Gf4Matrix,
    /// `n × k`, columns spanning the code
    pub g4: Gf4Matrix,
    pub declared_distance: Option<usize>,
}

impl QuaternaryCode {
    pub fn new(h4: Gf4Matrix, declared_distance: Option<usize>) -> Self {
        let n = h4.ncols();
        let basis = h4.conj().kernel();
        let k = basis.nrows();
        let g4 = if k == 0 {
            Gf4Matrix {
                rows: vec![Vec::new(); n],
                ncols: 0,
            }
        } else {
            basis.transpose()
        };
        QuaternaryCode {
            n,
            k,
            h4,
            g4,
            declared_distance,
        }
    }

    /// `H_4^† a`
    pub fn syndrome(&self, a: &[Gf4]) -> Result<Vec<Gf4>> {
        self.h4.conj().mul_vec(a)
    }

    pub fn is_codeword(&self, a: &[Gf4]) -> Result<bool> {
        Ok(self.syndrome(a)?.iter().all(|s| s.is_zero()))
    }

    /// `G_4 m`
    pub fn encode(&self, message: &[Gf4]) -> Result<Vec<Gf4>> {
        check_len(self.k, message.len())?;
        if self.k == 0 {
            return Ok(vec![Gf4::ZERO; self.n]);
        }
        self.g4.mul_vec(message)
    }

    /// Recovers the message from a codeword.
    pub fn unencode(&self, codeword: &[Gf4]) -> Result<Vec<Gf4>> {
        check_len(self.n, codeword.len())?;
        // solve G_4 m = a through the rref of [G_4 | a]
        let rows = (0..self.n)
            .map(|i| {
                let mut r = self.g4.rows[i].clone();
                r.push(codeword[i]);
                r
            })
            .collect();
        let (red, pivots) = Gf4Matrix {
            rows,
            ncols: self.k + 1,
        }
        .rref();
        if pivots.contains(&self.k) {
            return Err(Error::DecodingFailure("word is not a codeword".into()));
        }
        let mut m = vec![Gf4::ZERO; self.k];
        for (i, &p) in pivots.iter().enumerate() {
            m[p] = red.rows[i][self.k];
        }
        Ok(m)
    }

    /// Every codeword, in lexicographic order of messages.
    pub fn codewords(&self) -> impl Iterator<Item = Vec<Gf4>> + '_ {
        let total = 4usize.pow(self.k as u32);
        (0..total).map(move |idx| {
            let m: Vec<Gf4> = (0..self.k).map(|j| Gf4(((idx >> (2 * j)) & 3) as u8)).collect();
            self.encode(&m).unwrap()
        })
    }

    /// Minimum weight of a non-zero codeword, by enumeration; `None` for the
    /// zero code.
    pub fn brute_force_distance(&self) -> Option<usize> {
        self.codewords().skip(1).map(|c| wt4(&c)).min()
    }

    pub fn distance(&self) -> Option<usize> {
        self.declared_distance.or_else(|| self.brute_force_distance())
    }
}

/// `H = γ([ωH_4; ω̄H_4])`
pub fn lift_parity_check(code: &QuaternaryCode) -> BinMatrix {
    let stacked = code
        .h4
        .scale(Gf4::OMEGA)
        .vstack(&code.h4.scale(Gf4::OMEGA_BAR))
        .expect("same width");
    let rows = stacked.rows().iter().map(|r| gamma(r).to_bits()).collect();
    BinMatrix::from_rows(rows, 2 * code.n).unwrap()
}

/// Coset-leader table for errors of weight up to `t`.
#[derive(Clone, Debug)]
pub struct SyndromeTable {
    pub t: usize,
    table: HashMap<Vec<Gf4>, Vec<Gf4>>,
}

impl SyndromeTable {
    pub fn build(code: &QuaternaryCode, t: usize) -> Result<Self> {
        let mut table = HashMap::new();
        let n = code.n;
        table.insert(vec![Gf4::ZERO; code.h4.nrows()], vec![Gf4::ZERO; n]);
        let mut support: Vec<usize> = Vec::new();
        for w in 1..=t.min(n) {
            for_each_subset(n, w, &mut support, &mut |supp| {
                let mut vals = vec![1u8; w];
                loop {
                    let mut e = vec![Gf4::ZERO; n];
                    for (&p, &v) in supp.iter().zip(&vals) {
                        e[p] = Gf4(v);
                    }
                    let s = code.syndrome(&e).unwrap();
                    table.entry(s).or_insert(e);
                    // odometer over non-zero symbols
                    let mut i = 0;
                    while i < w && vals[i] == 3 {
                        vals[i] = 1;
                        i += 1;
                    }
                    if i == w {
                        break;
                    }
                    vals[i] += 1;
                }
            });
        }
        Ok(SyndromeTable { t, table })
    }

    pub fn lookup(&self, syndrome: &[Gf4]) -> Option<&Vec<Gf4>> {
        self.table.get(syndrome)
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

pub(crate) fn for_each_subset(n: usize, w: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, w: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if buf.len() == w {
            f(buf);
            return;
        }
        for i in start..=n - (w - buf.len()) {
            buf.push(i);
            rec(i + 1, n, w, buf, f);
            buf.pop();
        }
    }
    buf.clear();
    if w <= n {
        rec(0, n, w, buf, f);
    }
}

/// Syndrome decoding up to `⌊(d−1)/2⌋` errors; returns the corrected
/// codeword.
pub fn classical_decode(code: &QuaternaryCode, received: &[Gf4]) -> Result<Vec<Gf4>> {
    let d = code
        .distance()
        .ok_or_else(|| Error::DecodingFailure("code has no distance".into()))?;
    let table = SyndromeTable::build(code, (d.saturating_sub(1)) / 2)?;
    decode_with_table(code, &table, received)
}

pub fn decode_with_table(code: &QuaternaryCode, table: &SyndromeTable, received: &[Gf4]) -> Result<Vec<Gf4>> {
    let s = code.syndrome(received)?;
    let e = table
        .lookup(&s)
        .ok_or_else(|| Error::DecodingFailure(format!("syndrome {} is outside the table", render_vector(&s))))?;
    add_vectors(received, e)
}
