//! The [[3,1,3;2]] code lifted from the [3,1,3] quaternary code, checked
//! against the printed vectors, states and unitaries.

use eaqec::eaqec::{distance, EaqecCode};
use eaqec::gf2::{self, BinMatrix};
use eaqec::gf4::{Gf4Matrix, QuaternaryCode};
use eaqec::pauli::PauliClass;
use eaqec::statevector::{
    is_unitary, satisfies_conjugation, stabilizer_eigenstate, synthesize_clifford, Encoder, StateVec, UnitaryMatrix,
};
use eaqec::symplectic::{self, HyperbolicPair, SympVector};
use num_complex::Complex64;

fn code() -> EaqecCode {
    let q = QuaternaryCode::new(Gf4Matrix::from_strs(&["110", "101"]).unwrap(), Some(3));
    EaqecCode::from_gf4(&q).unwrap()
}

fn sv(s: &str) -> SympVector {
    SympVector::parse(s).unwrap()
}

/// u1, u2, u3, v1, v2, v3 as printed
fn printed_vectors() -> ([SympVector; 3], [SympVector; 3]) {
    (
        [sv("110|000"), sv("000|110"), sv("111|000")],
        [sv("000|101"), sv("101|000"), sv("000|111")],
    )
}

fn printed_upsilon() -> UnitaryMatrix {
    let rows = [
        [1, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 1, 0],
        [0, 0, 0, 0, 0, 1, 0, 1],
        [0, 1, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, -1],
        [0, 1, 0, -1, 0, 0, 0, 0],
        [1, 0, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, -1, 0],
    ];
    let rows: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    UnitaryMatrix::from_real(&rows, 1.0 / 2f64.sqrt()).unwrap()
}

fn printed_bowen_unitary() -> UnitaryMatrix {
    let rows = [
        [1, -1, -1, -1, -1, 1, 1, 1],
        [-1, -1, -1, 1, 1, 1, 1, -1],
        [1, -1, 1, 1, -1, 1, -1, -1],
        [-1, -1, 1, -1, 1, 1, -1, 1],
        [1, -1, -1, -1, 1, -1, -1, -1],
        [1, 1, 1, -1, 1, 1, 1, -1],
        [-1, 1, -1, -1, -1, 1, -1, -1],
        [-1, -1, 1, -1, -1, -1, 1, -1],
    ];
    let rows: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    UnitaryMatrix::from_real(&rows, 1.0 / (2.0 * 2f64.sqrt())).unwrap()
}

/// `(1/√2) Σ sign |index⟩`
fn ket(terms: &[(f64, usize)], m: usize) -> StateVec {
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << m];
    for &(s, i) in terms {
        amps[i] = Complex64::new(s / 2f64.sqrt(), 0.0);
    }
    StateVec::from_amplitudes(amps).unwrap()
}

/// `½ Σ_a U|m a1 a2⟩|a1 a2⟩` for the printed `U`.
fn printed_codeword(u: &UnitaryMatrix, m: usize) -> StateVec {
    let mut amps = vec![Complex64::new(0.0, 0.0); 32];
    for a in 0..4 {
        let col = u.column((m << 2) | a);
        for (r, v) in col.amplitudes().iter().enumerate() {
            amps[(r << 2) | a] += v * 0.5;
        }
    }
    StateVec::from_amplitudes(amps).unwrap()
}

#[test]
fn parameters() {
    let c = code();
    assert_eq!((c.n, c.k, c.c, c.ell), (3, 1, 2, 0));
    assert_eq!(distance(&c, 8).exact(), Some(3));
    let h = BinMatrix::from_strs(&["110|000", "101|000", "000|110", "000|101"]).unwrap();
    let lifted = eaqec::gf4::lift_parity_check(&QuaternaryCode::new(
        Gf4Matrix::from_strs(&["110", "101"]).unwrap(),
        None,
    ));
    assert_eq!(lifted, h);
}

#[test]
fn printed_vectors_form_a_symplectic_basis() {
    let (u, v) = printed_vectors();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(u[i].product(&v[j]), i == j);
            assert!(!u[i].product(&u[j]));
            assert!(!v[i].product(&v[j]));
        }
    }
    let pairs: Vec<HyperbolicPair> = (0..3)
        .map(|i| HyperbolicPair {
            u: u[i].clone(),
            v: v[i].clone(),
        })
        .collect();
    symplectic::validate_symplectic_basis(&pairs, 3).unwrap();

    // the first two pairs span rowspace(H)
    let h = code().h;
    let span = symplectic::matrix_of(&[u[0].clone(), v[0].clone(), u[1].clone(), v[1].clone()], 3);
    assert_eq!(gf2::rank(&span), 4);
    assert_eq!(gf2::rank(&span.vstack(&h).unwrap()), 4);
}

#[test]
fn own_decomposition_matches_print() {
    let c = code();
    let (u, v) = printed_vectors();
    for (p, i) in c.decomp.pairs.iter().zip(0..3) {
        assert_eq!((&p.u, &p.v), (&u[i], &v[i]));
    }
}

#[test]
fn zero_tilde() {
    let (u, _) = printed_vectors();
    let gens: Vec<_> = u.iter().map(|x| PauliClass::new(x.clone()).hermitian()).collect();
    let s = stabilizer_eigenstate(&gens).unwrap();
    let expect = ket(&[(1.0, 0b000), (1.0, 0b110)], 3);
    assert!(s.distance_up_to_phase(&expect) <= 1e-9);
}

#[test]
fn printed_upsilon_columns() {
    let u = printed_upsilon();
    assert!(is_unitary(&u));
    let printed = [
        ket(&[(1.0, 0b000), (1.0, 0b110)], 3),
        ket(&[(1.0, 0b101), (1.0, 0b011)], 3),
        // printed as (|101⟩ − |011⟩)/√2, which is N_{v2}|000~⟩ miscomputed
        ket(&[(1.0, 0b000), (-1.0, 0b110)], 3),
        ket(&[(-1.0, 0b101), (1.0, 0b011)], 3),
        ket(&[(1.0, 0b111), (1.0, 0b001)], 3),
        ket(&[(1.0, 0b010), (1.0, 0b100)], 3),
        ket(&[(-1.0, 0b111), (1.0, 0b001)], 3),
        ket(&[(1.0, 0b010), (-1.0, 0b100)], 3),
    ];
    for (b, k) in printed.iter().enumerate() {
        assert!(u.column(b).distance_up_to_phase(k) < 1e-12, "column {b:03b}");
    }
}

#[test]
fn printed_upsilon_breaks_conjugation() {
    let c = code();
    let encoder_map = c.upsilon.inverse().unwrap();
    let ours = synthesize_clifford(&encoder_map, 3).unwrap();
    assert!(satisfies_conjugation(&ours, &encoder_map));
    assert!(!satisfies_conjugation(&printed_upsilon(), &encoder_map));
}

#[test]
fn printed_codewords_differ_in_one_sign() {
    let c = code();
    let enc = Encoder::new(&c).unwrap();
    let printed = printed_upsilon();
    for m in 0..2 {
        let ours = enc.encode(&StateVec::basis(1, m)).unwrap();
        let theirs = printed_codeword(&printed, m);
        assert!((theirs.norm() - 1.0).abs() < 1e-12);
        // the |011~⟩|11⟩ term enters with the opposite sign
        assert!((ours.inner(&theirs).norm() - 0.5).abs() < 1e-9);
        assert!((ours.fidelity(&theirs) - 0.25).abs() < 1e-9);
    }
    // so the printed |0_L⟩ is not an eigenstate of the X-type stabilizers,
    // whatever signs they are given
    let qubits: Vec<usize> = (0..5).collect();
    let theirs = printed_codeword(&printed, 0);
    let worst = enc
        .stabilizers()
        .iter()
        .map(|s| theirs.expectation(s, &qubits).unwrap().re.abs())
        .fold(1.0, f64::min);
    assert!(worst < 1e-9);
}

#[test]
fn bowen_unitary_keeps_codewords_orthonormal() {
    let ub = printed_bowen_unitary();
    assert!(is_unitary(&ub));
    let enc = Encoder::new(&code()).unwrap();
    let zero = ub.apply_leading(&enc.encode(&StateVec::basis(1, 0)).unwrap()).unwrap();
    let one = ub.apply_leading(&enc.encode(&StateVec::basis(1, 1)).unwrap()).unwrap();
    assert!((zero.norm() - 1.0).abs() < 1e-12);
    assert!((one.norm() - 1.0).abs() < 1e-12);
    assert!(zero.inner(&one).norm() < 1e-12);
}
