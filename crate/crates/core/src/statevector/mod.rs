//! Dense statevector simulation for codes of a dozen qubits or so.
//!
//! Basis index bit `m − 1 − q` holds qubit `q`, so qubit 0 is the most
//! significant and `|q_0 q_1 … q_{m−1}⟩` reads left to right.

mod clifford;
mod codec;
mod superdense;

use std::fmt;

use num_complex::Complex64;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{act_on_index, PhasedPauli};

pub use clifford::{conjugation_error, satisfies_conjugation, stabilizer_eigenstate, synthesize_clifford, CliffordMap};
pub use codec::{decode, encode, encoder, DecodeOutcome, Encoder};
pub use superdense::{eacec_simulate, superdense_simulate};

/// Simulations refuse to allocate more than this many qubits unless
/// `EAQEC_MAX_QUBITS` says otherwise.
pub const DEFAULT_MAX_QUBITS: usize = 12;

/// Amplitude tolerance for equality checks.
pub const TOLERANCE: f64 = 1e-9;

/// The qubit limit, honouring `EAQEC_MAX_QUBITS`.
pub fn max_qubits() -> usize {
    std::env::var("EAQEC_MAX_QUBITS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_QUBITS)
}

pub fn check_size(needed: usize) -> Result<()> {
    let limit = max_qubits();
    if needed > limit {
        return Err(Error::TooManyQubits { needed, limit });
    }
    Ok(())
}

#[derive(Clone, PartialEq)]
pub struct StateVec {
    amps: Vec<Complex64>,
    m: usize,
}

impl StateVec {
    /// `|index⟩` on `m` qubits.
    pub fn basis(m: usize, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << m];
        amps[index] = Complex64::new(1.0, 0.0);
        StateVec { amps, m }
    }

    /// Wraps raw amplitudes; the length must be a power of two. Not
    /// normalized.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: len.next_power_of_two(),
                found: len,
            });
        }
        Ok(StateVec {
            m: len.trailing_zeros() as usize,
            amps,
        })
    }

    /// The zero-qubit state, the scalar 1.
    pub fn scalar() -> Self {
        Self::basis(0, 0)
    }

    pub fn qubits(&self) -> usize {
        self.m
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Scales to unit norm; a zero vector is left alone.
    pub fn normalize(&mut self) -> f64 {
        let n = self.norm();
        if n > 0.0 {
            for a in &mut self.amps {
                *a /= n;
            }
        }
        n
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &StateVec) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|⟨self|other⟩|²` for normalized states.
    pub fn fidelity(&self, other: &StateVec) -> f64 {
        if self.m != other.m {
            return 0.0;
        }
        self.inner(other).norm_sqr()
    }

    /// `self ⊗ other`, `self` on the leading qubits.
    pub fn tensor(&self, other: &StateVec) -> StateVec {
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        StateVec {
            amps,
            m: self.m + other.m,
        }
    }

    /// Largest amplitude difference after removing the global phase that
    /// best aligns `other` with `self`.
    pub fn distance_up_to_phase(&self, other: &StateVec) -> f64 {
        if self.m != other.m {
            return f64::INFINITY;
        }
        let ov = other.inner(self);
        let phase = if ov.norm() > 0.0 {
            ov / ov.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b * phase).norm())
            .fold(0.0, f64::max)
    }

    pub fn equal_up_to_phase(&self, other: &StateVec, tol: f64) -> bool {
        self.distance_up_to_phase(other) <= tol
    }

    /// `⟨ψ|P|ψ⟩` for `P` on the given qubits.
    pub fn expectation(&self, p: &PhasedPauli, qubits: &[usize]) -> Result<Complex64> {
        let image = apply_pauli(self, p, qubits)?;
        Ok(self.inner(&image))
    }
}

impl fmt::Debug for StateVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateVec[{}](", self.m)?;
        let mut first = true;
        for (i, a) in self.amps.iter().enumerate() {
            if a.norm() > 1e-12 {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({:.4}{:+.4}i)|{:0width$b}⟩", a.re, a.im, i, width = self.m)?;
                first = false;
            }
        }
        write!(f, ")")
    }
}

impl Serialize for StateVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.amps.len()))?;
        for a in &self.amps {
            seq.serialize_element(&[a.re, a.im])?;
        }
        seq.end()
    }
}

fn check_qubits(qubits: &[usize], n: usize, m: usize) -> Result<()> {
    if qubits.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: qubits.len(),
        });
    }
    for (i, &q) in qubits.iter().enumerate() {
        if q >= m {
            return Err(Error::IndexOutOfRange { index: q, len: m });
        }
        if qubits[..i].contains(&q) {
            return Err(Error::Parse(format!("qubit {q} listed twice")));
        }
    }
    Ok(())
}

/// Applies `p` with its letter `i` acting on `qubits[i]`.
pub fn apply_pauli(state: &StateVec, p: &PhasedPauli, qubits: &[usize]) -> Result<StateVec> {
    check_qubits(qubits, p.n(), state.m)?;
    let (zm, xm) = p.masks(qubits, state.m);
    let mut out = vec![Complex64::new(0.0, 0.0); state.amps.len()];
    for (b, &a) in state.amps.iter().enumerate() {
        let (to, ph) = act_on_index(zm, xm, p.phase_exp, b);
        out[to] = a * crate::pauli::i_pow(ph);
    }
    Ok(StateVec { amps: out, m: state.m })
}

/// Applies `p` to all qubits in order.
pub fn apply_pauli_all(state: &StateVec, p: &PhasedPauli) -> Result<StateVec> {
    let qubits: Vec<usize> = (0..state.m).collect();
    apply_pauli(state, p, &qubits)
}

/// `|Φ⟩^{⊗c}` with all of Alice's halves first: qubit `i` is entangled with
/// qubit `c + i`.
pub fn bell_state(c: usize) -> StateVec {
    let m = 2 * c;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << m];
    let scale = (0.5f64).powf(c as f64 / 2.0);
    for a in 0..1usize << c {
        amps[(a << c) | a] = Complex64::new(scale, 0.0);
    }
    StateVec { amps, m }
}

/// Applies an `n`-qubit map to the leading `n` qubits of `state`.
pub fn map_leading(state: &StateVec, n: usize, f: impl Fn(&StateVec) -> Result<StateVec>) -> Result<StateVec> {
    let Some(rest) = state.qubits().checked_sub(n) else {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: state.qubits(),
        });
    };
    if rest == 0 {
        return f(state);
    }
    let stride = 1usize << rest;
    let mut out = vec![Complex64::new(0.0, 0.0); state.amplitudes().len()];
    for t in 0..stride {
        let slice: Vec<Complex64> = (0..1usize << n).map(|a| state.amplitudes()[a * stride + t]).collect();
        let image = f(&StateVec::from_amplitudes(slice)?)?;
        for (a, v) in image.amplitudes().iter().enumerate() {
            out[a * stride + t] = *v;
        }
    }
    StateVec::from_amplitudes(out)
}

/// A square complex matrix on `m` qubits, row-major.
#[derive(Clone, PartialEq)]
pub struct UnitaryMatrix {
    m: usize,
    entries: Vec<Complex64>,
}

impl UnitaryMatrix {
    /// Wraps a square matrix of side `2^m` without checking unitarity.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: dim.next_power_of_two(),
                found: dim,
            });
        }
        for r in &rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
        }
        Ok(UnitaryMatrix {
            m: dim.trailing_zeros() as usize,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// From a real matrix times a common scale factor.
    pub fn from_real(rows: &[Vec<f64>], scale: f64) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x * scale, 0.0)).collect())
                .collect(),
        )
    }

    pub fn identity(m: usize) -> Self {
        let dim = 1 << m;
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        UnitaryMatrix { m, entries }
    }

    pub fn qubits(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries[r * self.dim() + c]
    }

    /// `(U ⊗ I)|ψ⟩`, with `U` on the leading qubits of `state`.
    pub fn apply_leading(&self, state: &StateVec) -> Result<StateVec> {
        if state.m < self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: state.m,
            });
        }
        map_leading(state, self.m, |s| self.apply(s))
    }

    pub fn column(&self, c: usize) -> StateVec {
        StateVec {
            amps: (0..self.dim()).map(|r| self.get(r, c)).collect(),
            m: self.m,
        }
    }

    pub fn dagger(&self) -> UnitaryMatrix {
        let d = self.dim();
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for c in 0..d {
                entries[c * d + r] = self.get(r, c).conj();
            }
        }
        UnitaryMatrix { m: self.m, entries }
    }

    pub fn mul(&self, other: &UnitaryMatrix) -> Result<UnitaryMatrix> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        let d = self.dim();
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..d {
                    entries[r * d + c] += a * other.get(k, c);
                }
            }
        }
        Ok(UnitaryMatrix { m: self.m, entries })
    }

    pub fn apply(&self, state: &StateVec) -> Result<StateVec> {
        if state.m != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: state.m,
            });
        }
        let d = self.dim();
        let amps = (0..d)
            .map(|r| (0..d).map(|c| self.get(r, c) * state.amps[c]).sum())
            .collect();
        Ok(StateVec { amps, m: self.m })
    }

    /// The dense matrix of a phased Pauli on all `m` qubits.
    pub fn from_pauli(p: &PhasedPauli) -> UnitaryMatrix {
        let m = p.n();
        let d = 1usize << m;
        let qubits: Vec<usize> = (0..m).collect();
        let (zm, xm) = p.masks(&qubits, m);
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for b in 0..d {
            let (to, ph) = act_on_index(zm, xm, p.phase_exp, b);
            entries[to * d + b] = crate::pauli::i_pow(ph);
        }
        UnitaryMatrix { m, entries }
    }

    /// Largest entrywise difference after dividing out the global phase
    /// fixed by the first entry of `self` with non-negligible modulus.
    pub fn distance_up_to_phase(&self, other: &UnitaryMatrix) -> f64 {
        if self.m != other.m {
            return f64::INFINITY;
        }
        let Some(idx) = self.entries.iter().position(|a| a.norm() > 1e-6) else {
            return other.entries.iter().map(|b| b.norm()).fold(0.0, f64::max);
        };
        if other.entries[idx].norm() < 1e-12 {
            return f64::INFINITY;
        }
        let phase = self.entries[idx] / other.entries[idx];
        if (phase.norm() - 1.0).abs() > 1e-6 {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b * phase).norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for UnitaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "UnitaryMatrix[{}] [", self.m)?;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                let a = self.get(r, c);
                write!(f, " {:+.3}{:+.3}i", a.re, a.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Serialize for UnitaryMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = self.dim();
        let rows: Vec<Vec<[f64; 2]>> = (0..d)
            .map(|r| (0..d).map(|c| [self.get(r, c).re, self.get(r, c).im]).collect())
            .collect();
        rows.serialize(s)
    }
}

/// `U†U = I` within [`TOLERANCE`] entrywise.
pub fn is_unitary(m: &UnitaryMatrix) -> bool {
    let Ok(p) = m.dagger().mul(m) else {
        return false;
    };
    let d = m.dim();
    (0..d).all(|r| {
        (0..d).all(|c| {
            let expect = if r == c { 1.0 } else { 0.0 };
            (p.get(r, c) - Complex64::new(expect, 0.0)).norm() <= TOLERANCE
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_pauli;

    fn herm(s: &str) -> PhasedPauli {
        parse_pauli(s).unwrap().hermitian()
    }

    #[test]
    fn x_flips_zero() {
        let s = apply_pauli(&StateVec::basis(1, 0), &herm("X"), &[0]).unwrap();
        assert_eq!(s, StateVec::basis(1, 1));
    }

    #[test]
    fn pauli_on_subsystem() {
        // X on qubit 2 of |000⟩ gives |001⟩
        let s = apply_pauli(&StateVec::basis(3, 0), &herm("X"), &[2]).unwrap();
        assert_eq!(s, StateVec::basis(3, 1));
        assert!(apply_pauli(&StateVec::basis(3, 0), &herm("XX"), &[1, 1]).is_err());
        assert!(apply_pauli(&StateVec::basis(3, 0), &herm("X"), &[3]).is_err());
        assert!(apply_pauli(&StateVec::basis(3, 0), &herm("XX"), &[0]).is_err());
    }

    #[test]
    fn bell_states() {
        let phi = bell_state(1);
        let r = 1.0 / 2f64.sqrt();
        assert!((phi.amplitudes()[0].re - r).abs() < 1e-15);
        assert!((phi.amplitudes()[3].re - r).abs() < 1e-15);
        assert_eq!(bell_state(0), StateVec::scalar());
        assert!((apply_pauli_all(&phi, &herm("ZZ")).unwrap().inner(&phi).re - 1.0).abs() < 1e-12);
        let phi2 = bell_state(2);
        for (p, q) in [("ZZ", [0, 2]), ("XX", [0, 2]), ("ZZ", [1, 3]), ("XX", [1, 3])] {
            let e = phi2.expectation(&herm(p), &q).unwrap();
            assert!((e.re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn norm_preserved() {
        let mut s = StateVec::from_amplitudes(vec![
            Complex64::new(0.3, 0.1),
            Complex64::new(-0.2, 0.5),
            Complex64::new(0.0, -0.7),
            Complex64::new(0.4, 0.0),
        ])
        .unwrap();
        s.normalize();
        for p in ["XY", "ZZ", "YI", "IX"] {
            let out = apply_pauli_all(&s, &herm(p)).unwrap();
            assert!((out.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn unitarity() {
        assert!(is_unitary(&UnitaryMatrix::identity(3)));
        let sing = UnitaryMatrix::from_real(&[vec![1.0, 1.0], vec![1.0, 1.0]], 0.5).unwrap();
        assert!(!is_unitary(&sing));
        let h = UnitaryMatrix::from_real(&[vec![1.0, 1.0], vec![1.0, -1.0]], 1.0 / 2f64.sqrt()).unwrap();
        assert!(is_unitary(&h));
    }

    #[test]
    fn phase_insensitive_comparison() {
        let a = StateVec::basis(2, 1);
        let mut b = a.clone();
        b.amplitudes_mut()[1] = Complex64::new(0.0, 1.0);
        assert!(a.equal_up_to_phase(&b, 1e-12));
        assert!(!a.equal_up_to_phase(&StateVec::basis(2, 2), 1e-3));
    }

    #[test]
    fn guard_default() {
        if std::env::var("EAQEC_MAX_QUBITS").is_err() {
            assert!(check_size(12).is_ok());
            assert!(matches!(
                check_size(13),
                Err(Error::TooManyQubits { needed: 13, limit: 12 })
            ));
        }
    }
}
