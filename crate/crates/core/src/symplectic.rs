//! The symplectic space `(Z_2)^{2n}`: vectors `(z|x)`, the symplectic form,
//! symplectic duals, and the decomposition of an arbitrary subspace into
//! hyperbolic pairs plus an isotropic remainder.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{self, BinMatrix, BitVector, EchelonBasis};

/// An element `(z|x)` of `(Z_2)^{2n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SympVector {
    pub z: BitVector,
    pub x: BitVector,
}

impl SympVector {
    pub fn new(z: BitVector, x: BitVector) -> Result<Self> {
        if z.len() != x.len() {
            return Err(Error::DimensionMismatch {
                expected: z.len(),
                found: x.len(),
            });
        }
        Ok(Self { z, x })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            z: BitVector::zeros(n),
            x: BitVector::zeros(n),
        }
    }

    /// `g_i = (e_i|0)`
    pub fn g(n: usize, i: usize) -> Self {
        Self {
            z: BitVector::unit(n, i),
            x: BitVector::zeros(n),
        }
    }

    /// `h_i = (0|e_i)`
    pub fn h(n: usize, i: usize) -> Self {
        Self {
            z: BitVector::zeros(n),
            x: BitVector::unit(n, i),
        }
    }

    /// Splits a length-`2n` bit vector into its z and x halves.
    pub fn from_bits(bits: &BitVector) -> Result<Self> {
        if !bits.len().is_multiple_of(2) {
            return Err(Error::OddColumns(bits.len()));
        }
        let n = bits.len() / 2;
        Ok(Self {
            z: bits.slice(0, n),
            x: bits.slice(n, 2 * n),
        })
    }

    /// Parses `"110|000"` (or the same without the bar).
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.split_once('|') {
            Some((z, x)) => Self::new(BitVector::parse(z)?, BitVector::parse(x)?),
            None => Self::from_bits(&BitVector::parse(&compact)?),
        }
    }

    pub fn to_bits(&self) -> BitVector {
        self.z.concat(&self.x)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero() && self.x.is_zero()
    }

    pub fn add(&self, other: &SympVector) -> SympVector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &SympVector) {
        self.z.xor_assign(&other.z);
        self.x.xor_assign(&other.x);
    }

    /// `z·x' + z'·x`, panicking on size mismatch.
    #[inline]
    pub fn product(&self, other: &SympVector) -> bool {
        self.z.dot(&other.x) ^ other.z.dot(&self.x)
    }

    /// Number of qubits acted on non-trivially, `wt(z ∨ x)`.
    pub fn weight(&self) -> usize {
        self.z.or(&self.x).weight()
    }

    /// Copy with qubit `i` removed from both halves.
    pub fn without_qubit(&self, i: usize) -> SympVector {
        SympVector {
            z: self.z.without(i),
            x: self.x.without(i),
        }
    }

    /// Concatenates qubit registers: `(z|x) ⊕ (z'|x') = (z z'|x x')`.
    pub fn direct_sum(&self, other: &SympVector) -> SympVector {
        SympVector {
            z: self.z.concat(&other.z),
            x: self.x.concat(&other.x),
        }
    }
}

impl fmt::Display for SympVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.z, self.x)
    }
}

/// Serializes as `"z|x"`.
impl serde::Serialize for SympVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&format_args!("{}|{}", self.z, self.x))
    }
}

impl fmt::Debug for SympVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Checked symplectic product.
pub fn symp_product(u: &SympVector, v: &SympVector) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch {
            expected: u.n(),
            found: v.n(),
        });
    }
    Ok(u.product(v))
}

pub fn weight(u: &SympVector) -> usize {
    u.weight()
}

fn half(m: &BinMatrix) -> Result<usize> {
    if !m.ncols().is_multiple_of(2) {
        return Err(Error::OddColumns(m.ncols()));
    }
    Ok(m.ncols() / 2)
}

/// Rows of a `2n`-column matrix as symplectic vectors.
pub fn rows_of(m: &BinMatrix) -> Result<Vec<SympVector>> {
    half(m)?;
    m.rows().iter().map(SympVector::from_bits).collect()
}

/// Stacks symplectic vectors as the rows of a `2n`-column matrix.
pub fn matrix_of(vectors: &[SympVector], n: usize) -> BinMatrix {
    let rows = vectors.iter().map(SympVector::to_bits).collect();
    BinMatrix::from_rows(rows, 2 * n).expect("all vectors share n")
}

/// The `2n × 2n` matrix `J = [[0, I], [I, 0]]`.
pub fn j_matrix(n: usize) -> BinMatrix {
    let rows = (0..2 * n).map(|i| BitVector::unit(2 * n, (i + n) % (2 * n))).collect();
    BinMatrix::from_rows(rows, 2 * n).unwrap()
}

/// Swaps the z and x halves of every row, i.e. right-multiplies by `J`.
fn twist(m: &BinMatrix, n: usize) -> BinMatrix {
    let rows = m
        .rows()
        .iter()
        .map(|r| r.slice(n, 2 * n).concat(&r.slice(0, n)))
        .collect();
    BinMatrix::from_rows(rows, 2 * n).unwrap()
}

/// `V^⊥ = {w : w ⊙ u = 0 for all u ∈ V}`, computed as the kernel of `V·J`.
pub fn symplectic_dual(v: &BinMatrix) -> Result<BinMatrix> {
    let n = half(v)?;
    Ok(gf2::kernel(&twist(v, n)))
}

/// Matrix of pairwise symplectic products of the rows of `m`.
pub fn gram_matrix(m: &BinMatrix) -> Result<BinMatrix> {
    let n = half(m)?;
    let t = twist(m, n);
    m.mul(&t.transpose())
}

/// The isotropic part `V ∩ V^⊥`, via the null space of the Gram matrix of a
/// row basis. Returned in reduced row-echelon form.
pub fn iso_part(v: &BinMatrix) -> Result<BinMatrix> {
    half(v)?;
    let basis = gf2::independent_rows(v);
    let gram = gram_matrix(&basis)?;
    let coeffs = gf2::kernel(&gram);
    let rows = coeffs
        .rows()
        .iter()
        .map(|c| basis.combine_rows(c))
        .collect::<Result<Vec<_>>>()?;
    let iso = BinMatrix::from_rows(rows, v.ncols())?;
    let red = gf2::rref(&iso);
    BinMatrix::from_rows(red.rref.rows()[..red.rank].to_vec(), v.ncols())
}

pub fn is_isotropic(v: &BinMatrix) -> Result<bool> {
    Ok(gram_matrix(v)?.is_zero())
}

/// True when no non-zero vector of `V` is orthogonal to all of `V`.
pub fn is_symplectic_subspace(v: &BinMatrix) -> Result<bool> {
    Ok(iso_part(v)?.nrows() == 0)
}

/// A pair with `u ⊙ v = 1` and both vectors self-orthogonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicPair {
    pub u: SympVector,
    pub v: SympVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// both `u` and `v` lie in `V`
    Symplectic,
    /// only `u` lies in `V`
    Isotropic,
    /// neither lies in `V`
    Outside,
}

/// A symplectic basis adapted to a subspace `V`: the first `c` pairs span
/// `symp V`, the next `ell` `u`-vectors span `iso V`, and the remaining
/// pairs complete the basis of the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SympDecomposition {
    pub n: usize,
    pub pairs: Vec<HyperbolicPair>,
    pub c: usize,
    pub ell: usize,
    /// dimension of `V`
    pub m: usize,
}

impl SympDecomposition {
    pub fn kind(&self, i: usize) -> PairKind {
        if i < self.c {
            PairKind::Symplectic
        } else if i < self.c + self.ell {
            PairKind::Isotropic
        } else {
            PairKind::Outside
        }
    }

    /// `{u_1..u_{c+ell}, v_1..v_c}` as matrix rows.
    pub fn subspace_basis(&self) -> BinMatrix {
        let mut vs: Vec<SympVector> = self.pairs[..self.c + self.ell].iter().map(|p| p.u.clone()).collect();
        vs.extend(self.pairs[..self.c].iter().map(|p| p.v.clone()));
        matrix_of(&vs, self.n)
    }

    pub fn symplectic_basis(&self) -> BinMatrix {
        let mut vs: Vec<SympVector> = self.pairs[..self.c].iter().map(|p| p.u.clone()).collect();
        vs.extend(self.pairs[..self.c].iter().map(|p| p.v.clone()));
        matrix_of(&vs, self.n)
    }

    pub fn isotropic_basis(&self) -> BinMatrix {
        let vs: Vec<SympVector> = self.pairs[self.c..self.c + self.ell]
            .iter()
            .map(|p| p.u.clone())
            .collect();
        matrix_of(&vs, self.n)
    }

    /// Checks every structural invariant, including that the pairs adapt
    /// to `v`.
    pub fn validate(&self, v: &BinMatrix) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if self.pairs.len() != self.n {
            return bad(format!("{} pairs for n = {}", self.pairs.len(), self.n));
        }
        if 2 * self.c + self.ell != self.m {
            return bad(format!("2c + ell = {} but m = {}", 2 * self.c + self.ell, self.m));
        }
        validate_symplectic_basis(&self.pairs, self.n)?;
        if v.ncols() != 2 * self.n {
            return bad(format!("subspace has {} columns, expected {}", v.ncols(), 2 * self.n));
        }
        let basis = self.subspace_basis();
        let vrank = gf2::rank(v);
        if vrank != self.m || gf2::rank(&basis) != self.m {
            return bad(format!("dimension mismatch: rank V = {vrank}, m = {}", self.m));
        }
        if gf2::rank(&v.vstack(&basis)?) != self.m {
            return bad("pairs do not span V".into());
        }
        Ok(())
    }
}

/// Verifies `u_i⊙u_j = v_i⊙v_j = 0` and `u_i⊙v_j = δ_ij`.
pub fn validate_symplectic_basis(pairs: &[HyperbolicPair], n: usize) -> Result<()> {
    for (i, a) in pairs.iter().enumerate() {
        if a.u.n() != n || a.v.n() != n {
            return Err(Error::InvalidDecomposition(format!("pair {i} has wrong length")));
        }
        for (j, b) in pairs.iter().enumerate() {
            if a.u.product(&b.u) || a.v.product(&b.v) || a.u.product(&b.v) != (i == j) {
                return Err(Error::InvalidDecomposition(format!(
                    "pairs {i} and {j} violate the symplectic basis relations"
                )));
            }
        }
    }
    Ok(())
}

/// Decomposes `rowspace(v)` into hyperbolic pairs.
///
/// A row basis is taken from the input rows in order (dependent rows are
/// skipped), and extended to a basis of the whole space with standard basis
/// vectors `g_1..g_n, h_1..h_n`, greedily. Each of the `n` rounds then takes
/// the first remaining vector as `u_i`, pairs it with the first later
/// vector it does not commute with, and projects the pair out of the rest.
pub fn symplectic_gram_schmidt(v: &BinMatrix) -> Result<SympDecomposition> {
    let n = half(v)?;
    let dim = 2 * n;
    let mut span = EchelonBasis::new(dim);
    let mut w: Vec<SympVector> = Vec::with_capacity(dim);
    for row in v.rows() {
        if span.insert(row) {
            w.push(SympVector::from_bits(row)?);
        }
    }
    let m = w.len();
    for i in 0..dim {
        let e = BitVector::unit(dim, i);
        if span.insert(&e) {
            w.push(SympVector::from_bits(&e)?);
        }
    }
    debug_assert_eq!(w.len(), dim);

    let mut remaining = m;
    let mut found: Vec<(PairKind, HyperbolicPair)> = Vec::with_capacity(n);
    for _round in 0..n {
        let u = w[0].clone();
        let j = (1..w.len())
            .find(|&j| u.product(&w[j]))
            .expect("a symplectic basis always contains a partner");
        let v = w[j].clone();
        let orth = |x: &SympVector| {
            let mut y = x.clone();
            if v.product(x) {
                y.add_assign(&u);
            }
            if u.product(x) {
                y.add_assign(&v);
            }
            y
        };
        let kind;
        if j < remaining {
            kind = PairKind::Symplectic;
            w.swap(1, j);
            w = w[2..].iter().map(orth).collect();
            remaining -= 2;
        } else {
            kind = if remaining >= 1 {
                PairKind::Isotropic
            } else {
                PairKind::Outside
            };
            let last = w.len() - 1;
            w.swap(j, last);
            w = w[1..last].iter().map(orth).collect();
            remaining = remaining.saturating_sub(1);
        }
        found.push((kind, HyperbolicPair { u, v }));
    }

    let mut pairs = Vec::with_capacity(n);
    let mut counts = [0usize; 3];
    for (slot, kind) in [PairKind::Symplectic, PairKind::Isotropic, PairKind::Outside]
        .into_iter()
        .enumerate()
    {
        for (k, p) in &found {
            if *k == kind {
                pairs.push(p.clone());
                counts[slot] += 1;
            }
        }
    }
    Ok(SympDecomposition {
        n,
        pairs,
        c: counts[0],
        ell: counts[1],
        m,
    })
}

/// The linear map taking `pairs[i].u ↦ g_i` and `pairs[i].v ↦ h_i`, as a
/// matrix acting on column vectors.
pub fn standardizing_symplectomorphism_for(pairs: &[HyperbolicPair], n: usize) -> Result<BinMatrix> {
    if pairs.len() != n {
        return Err(Error::InvalidDecomposition(format!(
            "{} pairs for n = {n}",
            pairs.len()
        )));
    }
    validate_symplectic_basis(pairs, n)?;
    // columns u_1..u_n, v_1..v_n
    let mut cols: Vec<SympVector> = pairs.iter().map(|p| p.u.clone()).collect();
    cols.extend(pairs.iter().map(|p| p.v.clone()));
    let basis_change = matrix_of(&cols, n).transpose();
    basis_change
        .inverse()
        .ok_or_else(|| Error::InvalidDecomposition("pairs are not a basis".into()))
}

pub fn standardizing_symplectomorphism(d: &SympDecomposition) -> Result<BinMatrix> {
    standardizing_symplectomorphism_for(&d.pairs, d.n)
}

/// Applies a `2n × 2n` matrix to a symplectic vector, `M·u^T`.
pub fn apply(m: &BinMatrix, u: &SympVector) -> Result<SympVector> {
    SympVector::from_bits(&m.mul_vec(&u.to_bits())?)
}

/// True iff `m` is square of even side, invertible, and `M J M^T = J`.
pub fn verify_symplectomorphism(m: &BinMatrix) -> bool {
    if m.nrows() != m.ncols() || !m.ncols().is_multiple_of(2) {
        return false;
    }
    let n = m.ncols() / 2;
    let j = j_matrix(n);
    let preserved = m
        .mul(&j)
        .and_then(|mj| mj.mul(&m.transpose()))
        .map(|p| p == j)
        .unwrap_or(false);
    preserved && m.inverse().is_some()
}
