//! Encoding into and decoding out of an entanglement-assisted code.
//!
//! Register layout on `n + c` qubits: Alice's `k` message qubits, her `ell`
//! ancillas, her `c` ebit halves, then Bob's `c` halves. Ebit `j` joins
//! qubits `k + ell + j` and `n + j`.

use num_complex::Complex64;
use serde::Serialize;

use super::clifford::CliffordMap;
use super::{apply_pauli, bell_state, check_size, map_leading, StateVec, TOLERANCE};
use crate::eaqec::EaqecCode;
use crate::error::{Error, Result};
use crate::gf2::{self, BinMatrix, BitVector};
use crate::pauli::{for_each_error_of_weight, PauliClass, PhasedPauli};
use crate::symplectic::{self, SympVector};

/// `U_enc` for a code: the Clifford taking `Z_j ↦ N_{u_j}`, `X_j ↦ N_{v_j}`
/// on Alice's qubits, applied after appending `|0^ell⟩|Φ⟩^{⊗c}`.
#[derive(Clone, Debug)]
pub struct Encoder {
    pub code: EaqecCode,
    clifford: CliffordMap,
    stabilizers: Vec<PhasedPauli>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecodeOutcome {
    pub message: StateVec,
    pub syndrome: BitVector,
    /// the error Bob undid
    pub correction: SympVector,
    /// `‖⟨0^ell|⟨Φ^c| ψ⟩‖²` after correction and unencoding
    pub register_weight: f64,
}

impl DecodeOutcome {
    pub fn registers_clean(&self) -> bool {
        self.register_weight >= 1.0 - TOLERANCE
    }
}

pub fn encoder(code: &EaqecCode) -> Result<Encoder> {
    Encoder::new(code)
}

impl Encoder {
    pub fn new(code: &EaqecCode) -> Result<Self> {
        check_size(code.n + code.c)?;
        let us: Vec<SympVector> = code.pairs.iter().map(|p| p.u.clone()).collect();
        let vs: Vec<SympVector> = code.pairs.iter().map(|p| p.v.clone()).collect();
        let clifford = CliffordMap::from_pairs(&us, &vs)?;
        let aug = code.augmented_check();
        let stabilizers = symplectic::rows_of(&aug.h_aug)?
            .into_iter()
            .map(|w| PauliClass::new(w).hermitian())
            .collect();
        Ok(Encoder {
            code: code.clone(),
            clifford,
            stabilizers,
        })
    }

    /// The Clifford acting on Alice's `n` qubits.
    pub fn clifford(&self) -> &CliffordMap {
        &self.clifford
    }

    pub fn total_qubits(&self) -> usize {
        self.code.n + self.code.c
    }

    /// Hermitian representatives of the rows of `H_aug`.
    pub fn stabilizers(&self) -> &[PhasedPauli] {
        &self.stabilizers
    }

    /// `U_enc (|φ⟩ ⊗ |0^ell⟩ ⊗ |Φ⟩^{⊗c})`
    pub fn encode(&self, message: &StateVec) -> Result<StateVec> {
        let code = &self.code;
        if message.qubits() != code.k {
            return Err(Error::DimensionMismatch {
                expected: code.k,
                found: message.qubits(),
            });
        }
        let start = message
            .tensor(&StateVec::basis(code.ell, 0))
            .tensor(&bell_state(code.c));
        map_leading(&start, code.n, |s| self.clifford.apply(s))
    }

    /// Syndrome bits from the stabilizer expectations, which are `±1` for a
    /// Pauli-corrupted codeword.
    pub fn measure_syndrome(&self, state: &StateVec) -> Result<BitVector> {
        let qubits: Vec<usize> = (0..self.total_qubits()).collect();
        let mut bits = BitVector::zeros(self.stabilizers.len());
        for (row, s) in self.stabilizers.iter().enumerate() {
            let e = state.expectation(s, &qubits)?.re;
            if e > 0.5 {
                continue;
            } else if e < -0.5 {
                bits.set(row, true);
            } else {
                return Err(Error::NotStabilizerEigenstate { row, expectation: e });
            }
        }
        Ok(bits)
    }

    /// A lightest error with the given reduced syndrome.
    pub fn correction_for(&self, syndrome: &BitVector) -> Result<SympVector> {
        let n = self.code.n;
        if syndrome.is_zero() {
            return Ok(SympVector::zeros(n));
        }
        let max_w = if n <= 6 { n } else { 3 };
        for w in 1..=max_w {
            let mut found = None;
            for_each_error_of_weight(n, w, &mut |u| {
                if found.is_none() && self.code.reduced_syndrome(u).as_ref() == Ok(syndrome) {
                    found = Some(u.clone());
                }
            });
            if let Some(u) = found {
                return Ok(u);
            }
        }
        // H ⊙ u^T = r is linear in u: solve (H J) u^T = r
        let twisted: Vec<BitVector> = self
            .code
            .h
            .rows()
            .iter()
            .map(|r| r.slice(n, 2 * n).concat(&r.slice(0, n)))
            .collect();
        let m = BinMatrix::from_rows(twisted, 2 * n)?;
        let sol = gf2::solve(&m, syndrome)?.ok_or_else(|| Error::DecodingFailure("syndrome is inconsistent".into()))?;
        SympVector::from_bits(&sol)
    }

    /// Measures the syndrome, undoes the inferred error, unencodes, and
    /// projects out the ancilla and ebit registers.
    pub fn decode(&self, state: &StateVec) -> Result<DecodeOutcome> {
        let code = &self.code;
        if state.qubits() != self.total_qubits() {
            return Err(Error::DimensionMismatch {
                expected: self.total_qubits(),
                found: state.qubits(),
            });
        }
        let syndrome = self.measure_syndrome(state)?;
        let correction = self.correction_for(&syndrome)?;
        let alice: Vec<usize> = (0..code.n).collect();
        let fixed = apply_pauli(state, &PauliClass::new(correction.clone()).hermitian(), &alice)?;
        let raw = map_leading(&fixed, code.n, |s| self.clifford.apply_inverse(s))?;

        let tail = code.ell + 2 * code.c;
        let bell = bell_state(code.c);
        let amps = raw.amplitudes();
        let msg: Vec<Complex64> = (0..1usize << code.k)
            .map(|m| {
                let base = m << tail;
                bell.amplitudes()
                    .iter()
                    .enumerate()
                    .map(|(beta, b)| b.conj() * amps[base + beta])
                    .sum()
            })
            .collect();
        let mut message = StateVec::from_amplitudes(msg)?;
        let register_weight = message.norm().powi(2);
        message.normalize();
        Ok(DecodeOutcome {
            message,
            syndrome,
            correction,
            register_weight,
        })
    }

    /// Applies `N_u` to Alice's qubits.
    pub fn corrupt(&self, state: &StateVec, error: &SympVector) -> Result<StateVec> {
        let alice: Vec<usize> = (0..self.code.n).collect();
        apply_pauli(state, &PauliClass::new(error.clone()).hermitian(), &alice)
    }
}

pub fn encode(code: &EaqecCode, message: &StateVec) -> Result<StateVec> {
    Encoder::new(code)?.encode(message)
}

pub fn decode(code: &EaqecCode, state: &StateVec) -> Result<DecodeOutcome> {
    Encoder::new(code)?.decode(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_pauli;

    fn bowen() -> EaqecCode {
        let h = BinMatrix::from_strs(&["110|000", "101|000", "000|110", "000|101"]).unwrap();
        EaqecCode::from_check_matrix(&h).unwrap()
    }

    fn plus_i() -> StateVec {
        let r = 1.0 / 2f64.sqrt();
        StateVec::from_amplitudes(vec![Complex64::new(r, 0.0), Complex64::new(0.0, r)]).unwrap()
    }

    #[test]
    fn codewords_are_stabilized() {
        let enc = Encoder::new(&bowen()).unwrap();
        let qubits: Vec<usize> = (0..5).collect();
        for msg in [StateVec::basis(1, 0), StateVec::basis(1, 1), plus_i()] {
            let cw = enc.encode(&msg).unwrap();
            assert!((cw.norm() - 1.0).abs() < 1e-12);
            for s in enc.stabilizers() {
                let image = apply_pauli(&cw, s, &qubits).unwrap();
                let diff = image
                    .amplitudes()
                    .iter()
                    .zip(cw.amplitudes())
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max);
                assert!(diff < 1e-9);
            }
        }
    }

    #[test]
    fn no_error_round_trip() {
        let enc = Encoder::new(&bowen()).unwrap();
        let cw = enc.encode(&plus_i()).unwrap();
        let out = enc.decode(&cw).unwrap();
        assert!(out.syndrome.is_zero());
        assert!(out.registers_clean());
        assert!(out.message.fidelity(&plus_i()) > 1.0 - 1e-12);
    }

    #[test]
    fn single_qubit_errors_corrected() {
        let code = bowen();
        let enc = Encoder::new(&code).unwrap();
        let cw = enc.encode(&plus_i()).unwrap();
        for q in 0..3 {
            for l in ["X", "Y", "Z"] {
                let mut s = ["I"; 3];
                s[q] = l;
                let e = parse_pauli(&s.concat()).unwrap().vec;
                let out = enc.decode(&enc.corrupt(&cw, &e).unwrap()).unwrap();
                assert_eq!(out.syndrome, code.reduced_syndrome(&e).unwrap());
                assert!(out.message.fidelity(&plus_i()) > 1.0 - 1e-9, "{}", s.concat());
            }
        }
    }

    #[test]
    fn weight_two_logical_miscorrects() {
        let code = bowen();
        let enc = Encoder::new(&code).unwrap();
        // XXX is in C but not in iso: a logical operator
        let e = parse_pauli("XXX").unwrap().vec;
        assert!(code.reduced_syndrome(&e).unwrap().is_zero());
        let msg = StateVec::basis(1, 0);
        let out = enc
            .decode(&enc.corrupt(&enc.encode(&msg).unwrap(), &e).unwrap())
            .unwrap();
        assert!(out.registers_clean());
        assert!(out.message.fidelity(&msg) < 0.5);
    }

    #[test]
    fn non_pauli_corruption_is_rejected() {
        let enc = Encoder::new(&bowen()).unwrap();
        let cw = enc.encode(&StateVec::basis(1, 0)).unwrap();
        let flipped = enc.corrupt(&cw, &parse_pauli("XII").unwrap().vec).unwrap();
        let mixed: Vec<Complex64> = cw
            .amplitudes()
            .iter()
            .zip(flipped.amplitudes())
            .map(|(a, b)| (a + b) / 2f64.sqrt())
            .collect();
        let mut s = StateVec::from_amplitudes(mixed).unwrap();
        s.normalize();
        assert!(matches!(enc.decode(&s), Err(Error::NotStabilizerEigenstate { .. })));
    }

    #[test]
    fn trivial_code_round_trip() {
        let code = EaqecCode::from_check_matrix(&BinMatrix::empty(4)).unwrap();
        let msg = plus_i().tensor(&StateVec::basis(1, 1));
        let out = decode(&code, &encode(&code, &msg).unwrap()).unwrap();
        assert!(out.registers_clean());
        assert!(out.message.fidelity(&msg) > 1.0 - 1e-12);
    }

    #[test]
    fn size_guard() {
        if std::env::var("EAQEC_MAX_QUBITS").is_err() {
            let code = EaqecCode::from_check_matrix(&BinMatrix::empty(26)).unwrap();
            assert!(matches!(Encoder::new(&code), Err(Error::TooManyQubits { .. })));
        }
    }
}
