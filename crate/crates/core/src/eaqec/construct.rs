//! New codes from old: extension by an overall parity check, puncturing,
//! and combining a catalytic code with a seed stabilizer code.

use super::EaqecCode;
use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitVector};
use crate::symplectic::{self, SympVector};

/// Adds a qubit and the all-`X` and all-`Z` checks; `k − c` drops by one.
pub fn extend(code: &EaqecCode) -> Result<EaqecCode> {
    let n = code.n + 1;
    let mut rows = vec![
        SympVector {
            z: BitVector::zeros(n),
            x: BitVector::from_bools(std::iter::repeat_n(true, n)),
        },
        SympVector {
            z: BitVector::from_bools(std::iter::repeat_n(true, n)),
            x: BitVector::zeros(n),
        },
    ];
    for r in code.h.rows() {
        let u = SympVector::from_bits(r)?;
        rows.push(u.direct_sum(&SympVector::zeros(1)));
    }
    EaqecCode::from_check_matrix(&symplectic::matrix_of(&rows, n))
}

/// Deletes the `Z` and `X` coordinates of qubit `position` from every
/// element of `C` and rebuilds the code from the punctured space.
pub fn puncture(code: &EaqecCode, position: usize) -> Result<EaqecCode> {
    if code.n < 2 {
        return Err(Error::ParameterMismatch(format!(
            "cannot puncture a code on {} qubit(s)",
            code.n
        )));
    }
    if position >= code.n {
        return Err(Error::IndexOutOfRange {
            index: position,
            len: code.n,
        });
    }
    let n = code.n - 1;
    let rows = code
        .codeword_space()
        .rows()
        .iter()
        .map(|r| Ok(SympVector::from_bits(r)?.without_qubit(position)))
        .collect::<Result<Vec<_>>>()?;
    let punctured = symplectic::matrix_of(&rows, n);
    EaqecCode::from_check_matrix(&symplectic::symplectic_dual(&punctured)?)
}

/// Combines an `[[n, k; c]]` code with an `[[n', c; 0]]` seed: the seed's
/// logical operators stand in for Bob's halves of the ebits, and the result
/// is an `[[n + n', k; 0]]` stabilizer code.
pub fn catalytic_combine(cqec: &EaqecCode, seed: &EaqecCode) -> Result<EaqecCode> {
    if seed.c != 0 {
        return Err(Error::ParameterMismatch(format!(
            "seed uses {} ebits, expected 0",
            seed.c
        )));
    }
    if seed.k != cqec.c {
        return Err(Error::ParameterMismatch(format!(
            "seed encodes {} qubits but the code needs {} ebits",
            seed.k, cqec.c
        )));
    }
    let (n, np, c, ell) = (cqec.n, seed.n, cqec.c, cqec.ell);
    // the seed's message pairs: logical Z then logical X per encoded qubit
    let logical_z: Vec<&SympVector> = seed.pairs[..c].iter().map(|p| &p.u).collect();
    let logical_x: Vec<&SympVector> = seed.pairs[..c].iter().map(|p| &p.v).collect();

    let mut rows = Vec::with_capacity(cqec.h.nrows() + seed.h.nrows());
    for (i, r) in cqec.h.rows().iter().enumerate() {
        let u = SympVector::from_bits(r)?;
        let b = if i < ell {
            SympVector::zeros(np)
        } else if i < ell + c {
            logical_z[i - ell].clone()
        } else {
            logical_x[i - ell - c].clone()
        };
        rows.push(u.direct_sum(&b));
    }
    for r in seed.h.rows() {
        rows.push(SympVector::zeros(n).direct_sum(&SympVector::from_bits(r)?));
    }
    let combined: BinMatrix = symplectic::matrix_of(&rows, n + np);
    EaqecCode::from_check_matrix(&combined)
}
