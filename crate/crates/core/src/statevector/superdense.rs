//! Superdense coding, and classical quaternary codes sent over it.

use super::{apply_pauli, bell_state, check_size, StateVec};
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::gf4::{classical_decode, gamma, gamma_inv, wt4, Gf4, QuaternaryCode};
use crate::pauli::{PauliClass, PhasedPauli};
use crate::symplectic::SympVector;

/// Sends `2c` classical bits `(z|x)` over `c` ebits: Alice applies `N_msg`
/// to her halves, the channel applies `error` to them, and Bob reads each
/// pair in the Bell basis.
pub fn superdense_simulate(message: &BitVector, error: &PauliClass) -> Result<BitVector> {
    if !message.len().is_multiple_of(2) {
        return Err(Error::OddColumns(message.len()));
    }
    let c = message.len() / 2;
    if error.n() != c {
        return Err(Error::DimensionMismatch {
            expected: c,
            found: error.n(),
        });
    }
    check_size(2 * c)?;
    let alice: Vec<usize> = (0..c).collect();
    let sent = apply_pauli(
        &bell_state(c),
        &PauliClass::new(SympVector::from_bits(message)?).hermitian(),
        &alice,
    )?;
    let received = apply_pauli(&sent, &error.hermitian(), &alice)?;
    read_bell_pairs(&received, c)
}

/// `X_iX_{c+i} = −1` flags a `Z` on Alice's half, `Z_iZ_{c+i} = −1` an `X`.
fn read_bell_pairs(state: &StateVec, c: usize) -> Result<BitVector> {
    let xx = PhasedPauli::new(SympVector::parse("00|11")?, 0);
    let zz = PhasedPauli::new(SympVector::parse("11|00")?, 0);
    let mut out = BitVector::zeros(2 * c);
    for i in 0..c {
        let pair = [i, c + i];
        out.set(i, state.expectation(&xx, &pair)?.re < 0.0);
        out.set(c + i, state.expectation(&zz, &pair)?.re < 0.0);
    }
    Ok(out)
}

/// Sends a quaternary message through `code`, one symbol per ebit, with
/// `error[i]` striking symbol `i`; returns the decoded message. Errors
/// heavier than the code corrects are reported as a decoding failure.
pub fn eacec_simulate(code: &QuaternaryCode, message: &[Gf4], error: &[Gf4]) -> Result<Vec<Gf4>> {
    if error.len() != code.n {
        return Err(Error::DimensionMismatch {
            expected: code.n,
            found: error.len(),
        });
    }
    let d = code
        .distance()
        .ok_or_else(|| Error::DecodingFailure("code has no distance".into()))?;
    let t = d.saturating_sub(1) / 2;
    if wt4(error) > t {
        return Err(Error::DecodingFailure(format!(
            "error of weight {} exceeds t = {t}",
            wt4(error)
        )));
    }
    let word = code.encode(message)?;
    let mut received = Vec::with_capacity(code.n);
    for (a, e) in word.iter().zip(error) {
        let bits = superdense_simulate(&gamma(&[*a]).to_bits(), &PauliClass::new(gamma(&[*e])))?;
        received.push(gamma_inv(&SympVector::from_bits(&bits)?)[0]);
    }
    let corrected = classical_decode(code, &received)?;
    code.unencode(&corrected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf4::{parse_vector, Gf4Matrix};
    use crate::pauli::parse_pauli;

    #[test]
    fn single_ebit_all_cases() {
        for m in 0..4u64 {
            let msg = BitVector::from_u64(m, 2);
            for e in ["I", "X", "Y", "Z"] {
                let err = parse_pauli(e).unwrap();
                let mut expect = msg.clone();
                expect.xor_assign(&err.vec.to_bits());
                assert_eq!(superdense_simulate(&msg, &err).unwrap(), expect, "{m} {e}");
            }
        }
    }

    #[test]
    fn two_ebits() {
        let msg = BitVector::parse("1001").unwrap();
        let out = superdense_simulate(&msg, &PauliClass::identity(2)).unwrap();
        assert_eq!(out, msg);
        assert!(superdense_simulate(&msg, &PauliClass::identity(3)).is_err());
        assert!(superdense_simulate(&BitVector::parse("101").unwrap(), &PauliClass::identity(1)).is_err());
    }

    #[test]
    fn hamming_over_ebits() {
        let h4 = Gf4Matrix::from_strs(&["0001111", "0110011", "1010101"]).unwrap();
        let code = QuaternaryCode::new(h4, Some(3));
        let msg = parse_vector("1w0W").unwrap();
        let clean = vec![Gf4::ZERO; 7];
        assert_eq!(eacec_simulate(&code, &msg, &clean).unwrap(), msg);
        for pos in 0..7 {
            for e in [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR] {
                let mut err = clean.clone();
                err[pos] = e;
                assert_eq!(eacec_simulate(&code, &msg, &err).unwrap(), msg);
            }
        }
        let heavy = parse_vector("1100000").unwrap();
        assert!(matches!(
            eacec_simulate(&code, &msg, &heavy),
            Err(Error::DecodingFailure(_))
        ));
    }
}
