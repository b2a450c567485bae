//! Pauli operators: phase-free classes `[N_u]` and concrete phased
//! representatives `i^p Z^z X^x`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::symplectic::SympVector;

/// `[N_u]`, a Pauli operator up to global phase.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliClass {
    pub vec: SympVector,
}

impl PauliClass {
    pub fn new(vec: SympVector) -> Self {
        Self { vec }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(SympVector::zeros(n))
    }

    pub fn n(&self) -> usize {
        self.vec.n()
    }

    pub fn weight(&self) -> usize {
        self.vec.weight()
    }

    /// The Hermitian representative, the tensor product of the letters
    /// `I, X, Y, Z`.
    pub fn hermitian(&self) -> PhasedPauli {
        let ys = self.vec.z.and(&self.vec.x).weight();
        PhasedPauli {
            vec: self.vec.clone(),
            phase_exp: ((4 - ys % 4) % 4) as u8,
        }
    }

    /// The bare representative `Z^z X^x`.
    pub fn bare(&self) -> PhasedPauli {
        PhasedPauli {
            vec: self.vec.clone(),
            phase_exp: 0,
        }
    }
}

impl fmt::Display for PauliClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            let c = match (self.vec.z.get(i), self.vec.x.get(i)) {
                (false, false) => 'I',
                (false, true) => 'X',
                (true, false) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// `[N_u][N_v] = [N_{u+v}]`
pub fn pauli_mul(a: &PauliClass, b: &PauliClass) -> Result<PauliClass> {
    check_n(a.n(), b.n())?;
    Ok(PauliClass::new(a.vec.add(&b.vec)))
}

pub fn commutes(a: &PauliClass, b: &PauliClass) -> Result<bool> {
    check_n(a.n(), b.n())?;
    Ok(!a.vec.product(&b.vec))
}

fn check_n(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Calls `f` on every error of weight exactly `w` on `n` qubits: supports in
/// lexicographic order, then letters `X`, `Y`, `Z` with the last qubit
/// varying fastest.
pub fn for_each_error_of_weight(n: usize, w: usize, f: &mut impl FnMut(&SympVector)) {
    const LETTERS: [(bool, bool); 3] = [(false, true), (true, true), (true, false)];
    let mut support = Vec::new();
    crate::gf4::for_each_subset(n, w, &mut support, &mut |supp| {
        let mut letters = vec![0usize; w];
        loop {
            let mut u = SympVector::zeros(n);
            for (&q, &l) in supp.iter().zip(&letters) {
                let (z, x) = LETTERS[l];
                u.z.set(q, z);
                u.x.set(q, x);
            }
            f(&u);
            let mut i = w;
            while i > 0 && letters[i - 1] == 2 {
                letters[i - 1] = 0;
                i -= 1;
            }
            if i == 0 {
                break;
            }
            letters[i - 1] += 1;
        }
    });
}

/// Parses a string over `{I, X, Y, Z}`.
pub fn parse_pauli(s: &str) -> Result<PauliClass> {
    let letters: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut z = BitVector::zeros(letters.len());
    let mut x = BitVector::zeros(letters.len());
    for (i, c) in letters.iter().enumerate() {
        let (zi, xi) = match c.to_ascii_uppercase() {
            'I' => (false, false),
            'X' => (false, true),
            'Y' => (true, true),
            'Z' => (true, false),
            other => return Err(Error::Parse(format!("unexpected character {other:?} in Pauli string"))),
        };
        z.set(i, zi);
        x.set(i, xi);
    }
    Ok(PauliClass::new(SympVector { z, x }))
}

/// The operator `i^phase_exp · Z^z X^x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhasedPauli {
    pub vec: SympVector,
    pub phase_exp: u8,
}

impl PhasedPauli {
    pub fn new(vec: SympVector, phase_exp: u8) -> Self {
        Self {
            vec,
            phase_exp: phase_exp % 4,
        }
    }

    pub fn n(&self) -> usize {
        self.vec.n()
    }

    pub fn class(&self) -> PauliClass {
        PauliClass::new(self.vec.clone())
    }

    pub fn phase(&self) -> Complex64 {
        i_pow(self.phase_exp)
    }

    /// Product `self · other`, tracking the phase from reordering `X^x Z^z'`.
    pub fn mul(&self, other: &PhasedPauli) -> Result<PhasedPauli> {
        check_n(self.n(), other.n())?;
        let swap = if self.vec.x.dot(&other.vec.z) { 2 } else { 0 };
        Ok(PhasedPauli::new(
            self.vec.add(&other.vec),
            self.phase_exp + other.phase_exp + swap,
        ))
    }

    /// Squares to `+I` exactly when Hermitian.
    pub fn is_hermitian(&self) -> bool {
        let ys = self.vec.z.and(&self.vec.x).weight() as u8;
        (self.phase_exp + ys).is_multiple_of(2)
    }

    /// The adjoint.
    pub fn dagger(&self) -> PhasedPauli {
        // (Z^z X^x)† = X^x Z^z = (-1)^{z·x} Z^z X^x
        let ys = self.vec.z.and(&self.vec.x).weight() as u8;
        PhasedPauli::new(self.vec.clone(), (4 - self.phase_exp) + 2 * (ys % 2))
    }

    pub fn negate(&self) -> PhasedPauli {
        PhasedPauli::new(self.vec.clone(), self.phase_exp + 2)
    }

    /// Bit masks `(z, x)` over basis indices, qubit 0 in the most
    /// significant position of an `m`-qubit index, the operator acting on
    /// `qubits[i]` for its letter `i`.
    pub fn masks(&self, qubits: &[usize], m: usize) -> (usize, usize) {
        let mut zm = 0usize;
        let mut xm = 0usize;
        for (i, &q) in qubits.iter().enumerate() {
            let bit = 1usize << (m - 1 - q);
            if self.vec.z.get(i) {
                zm |= bit;
            }
            if self.vec.x.get(i) {
                xm |= bit;
            }
        }
        (zm, xm)
    }
}

pub(crate) fn i_pow(p: u8) -> Complex64 {
    match p % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `i^p Z^z X^x |b⟩ = i^p (−1)^{z·(b⊕x)} |b⊕x⟩` on a basis state given as a
/// bit string with qubit 0 first.
pub fn phased_matrix_action(p: &PhasedPauli, basis_index: &BitVector) -> Result<(BitVector, Complex64)> {
    check_n(p.n(), basis_index.len())?;
    let mut out = basis_index.clone();
    out.xor_assign(&p.vec.x);
    let sign = if p.vec.z.dot(&out) { 2 } else { 0 };
    Ok((out, i_pow(p.phase_exp + sign)))
}

/// Same action on packed indices using precomputed masks.
#[inline]
pub(crate) fn act_on_index(zm: usize, xm: usize, phase_exp: u8, b: usize) -> (usize, u8) {
    let out = b ^ xm;
    let sign = if (zm & out).count_ones() % 2 == 1 { 2 } else { 0 };
    (out, (phase_exp + sign) % 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    type Dense = Vec<Vec<Complex64>>;

    fn kron(a: &Dense, b: &Dense) -> Dense {
        let (ra, rb) = (a.len(), b.len());
        let mut out = vec![vec![c(0.0, 0.0); ra * rb]; ra * rb];
        for i in 0..ra {
            for j in 0..ra {
                for k in 0..rb {
                    for l in 0..rb {
                        out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                    }
                }
            }
        }
        out
    }

    fn matmul(a: &Dense, b: &Dense) -> Dense {
        let n = a.len();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect()
    }

    /// Oracle: Kronecker product of 2×2 blocks `Z^{z_i} X^{x_i}` times the phase.
    fn dense(p: &PhasedPauli) -> Dense {
        let i2 = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]];
        let x = vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]];
        let z = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(-1.0, 0.0)]];
        let mut out = vec![vec![p.phase()]];
        for q in 0..p.n() {
            let zq = if p.vec.z.get(q) { z.clone() } else { i2.clone() };
            let xq = if p.vec.x.get(q) { x.clone() } else { i2.clone() };
            out = kron(&out, &matmul(&zq, &xq));
        }
        out
    }

    fn all_vectors(n: usize) -> Vec<SympVector> {
        (0..1u64 << (2 * n))
            .map(|v| SympVector::from_bits(&BitVector::from_u64(v, 2 * n)).unwrap())
            .collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_pauli("XIZ").unwrap().vec, SympVector::parse("001|100").unwrap());
        assert!(parse_pauli("III").unwrap().vec.is_zero());
        assert_eq!(parse_pauli("Y").unwrap().vec, SympVector::parse("1|1").unwrap());
        assert!(parse_pauli("XQ").is_err());
        for s in ["XYZI", "IIII", "YYXZ"] {
            assert_eq!(parse_pauli(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn class_multiplication() {
        let x = parse_pauli("X").unwrap();
        let z = parse_pauli("Z").unwrap();
        assert_eq!(pauli_mul(&x, &z).unwrap().to_string(), "Y");
        assert!(pauli_mul(&x, &x).unwrap().vec.is_zero());
        assert!(pauli_mul(&x, &parse_pauli("XX").unwrap()).is_err());
    }

    #[test]
    fn commutation_examples() {
        let x = parse_pauli("X").unwrap();
        let z = parse_pauli("Z").unwrap();
        assert!(!commutes(&x, &z).unwrap());
        assert!(commutes(&parse_pauli("XI").unwrap(), &parse_pauli("IZ").unwrap()).unwrap());
        assert!(commutes(&parse_pauli("XZY").unwrap(), &parse_pauli("XZY").unwrap()).unwrap());
    }

    #[test]
    fn actions() {
        let zp = parse_pauli("Z").unwrap().bare();
        let (b, a) = phased_matrix_action(&zp, &BitVector::parse("1").unwrap()).unwrap();
        assert_eq!((b.to_string(), a), ("1".to_string(), c(-1.0, 0.0)));
        let xp = parse_pauli("X").unwrap().bare();
        let (b, a) = phased_matrix_action(&xp, &BitVector::parse("0").unwrap()).unwrap();
        assert_eq!((b.to_string(), a), ("1".to_string(), c(1.0, 0.0)));
    }

    #[test]
    fn action_matches_dense_oracle() {
        for n in 1..=3 {
            for u in all_vectors(n) {
                for phase in 0..4 {
                    let p = PhasedPauli::new(u.clone(), phase);
                    let m = dense(&p);
                    for col in 0..1usize << n {
                        let b = BitVector::from_u64(col as u64, n);
                        let (out, amp) = phased_matrix_action(&p, &b).unwrap();
                        let row = (0..n).fold(0, |acc, i| (acc << 1) | out.get(i) as usize);
                        for r in 0..1usize << n {
                            let expect = if r == row { amp } else { c(0.0, 0.0) };
                            assert!((m[r][col] - expect).norm() < 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn product_and_commutation_match_dense() {
        for n in 1..=2 {
            let vs = all_vectors(n);
            for u in &vs {
                for v in &vs {
                    let a = PhasedPauli::new(u.clone(), 1);
                    let b = PhasedPauli::new(v.clone(), 2);
                    let ab = a.mul(&b).unwrap();
                    assert_eq!(dense(&ab), matmul(&dense(&a), &dense(&b)));
                    let sign = if u.product(v) { -1.0 } else { 1.0 };
                    let ba = matmul(&dense(&b), &dense(&a));
                    let scaled: Dense = ba.iter().map(|r| r.iter().map(|x| x * sign).collect()).collect();
                    assert_eq!(matmul(&dense(&a), &dense(&b)), scaled);
                }
            }
        }
    }

    #[test]
    fn hermitian_representatives() {
        for u in all_vectors(2) {
            let h = PauliClass::new(u.clone()).hermitian();
            assert!(h.is_hermitian());
            let sq = h.mul(&h).unwrap();
            assert!(sq.vec.is_zero());
            assert_eq!(sq.phase_exp, 0);
            let d = dense(&h);
            let dd = dense(&h.dagger());
            for i in 0..4 {
                for j in 0..4 {
                    assert!((d[j][i].conj() - dd[i][j]).norm() < 1e-12);
                    assert!((d[i][j] - dd[i][j]).norm() < 1e-12);
                }
            }
        }
        // Y = -i Z X
        assert_eq!(parse_pauli("Y").unwrap().hermitian().phase_exp, 3);
    }
}
