//! Stabilizer eigenstates and the Clifford unitary realizing a
//! symplectomorphism.

use num_complex::Complex64;

use super::{apply_pauli_all, check_size, StateVec, UnitaryMatrix, TOLERANCE};
use crate::error::{Error, Result};
use crate::gf2::{self, BinMatrix, BitVector};
use crate::pauli::{PauliClass, PhasedPauli};
use crate::symplectic::{self, SympVector};

/// The normalized simultaneous `+1` eigenstate of commuting, independent,
/// Hermitian generators: `Π (I + N_w)/2` applied to the first standard basis
/// state it does not annihilate.
pub fn stabilizer_eigenstate(gens: &[PhasedPauli]) -> Result<StateVec> {
    let n = match gens.first() {
        Some(g) => g.n(),
        None => return Err(Error::EmptyEigenspace),
    };
    check_generators(gens, n)?;
    check_size(n)?;
    for seed in 0..1usize << n {
        let mut psi = StateVec::basis(n, seed);
        for g in gens {
            let image = apply_pauli_all(&psi, g)?;
            for (a, b) in psi.amplitudes_mut().iter_mut().zip(image.amplitudes()) {
                *a = (*a + b) * 0.5;
            }
        }
        if psi.norm() > 1e-6 {
            psi.normalize();
            return Ok(psi);
        }
    }
    Err(Error::EmptyEigenspace)
}

fn check_generators(gens: &[PhasedPauli], n: usize) -> Result<()> {
    for (i, g) in gens.iter().enumerate() {
        if g.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.n(),
            });
        }
        if !g.is_hermitian() {
            return Err(Error::NonHermitian(i));
        }
        for (j, h) in gens[..i].iter().enumerate() {
            if g.vec.product(&h.vec) {
                return Err(Error::NonCommuting(j, i));
            }
        }
    }
    let rows: Vec<SympVector> = gens.iter().map(|g| g.vec.clone()).collect();
    if gf2::rank(&symplectic::matrix_of(&rows, n)) != gens.len() {
        return Err(Error::DependentGenerators);
    }
    Ok(())
}

/// The unitary `U = Σ_b |b̃⟩⟨b|` with `|0̃⟩` stabilized by the `N_{g̃_i}` and
/// `|b̃⟩ = N_{h̃_1}^{b_1} ⋯ N_{h̃_n}^{b_n} |0̃⟩`, all `N` Hermitian.
///
/// Then `U Z_i U† = N_{g̃_i}` and `U X_i U† = N_{h̃_i}` exactly.
#[derive(Clone, Debug)]
pub struct CliffordMap {
    pub n: usize,
    pub g_tilde: Vec<PhasedPauli>,
    pub h_tilde: Vec<PhasedPauli>,
    zero: StateVec,
}

impl CliffordMap {
    /// From a symplectic basis `(g̃_i, h̃_i)`.
    pub fn from_pairs(g_tilde: &[SympVector], h_tilde: &[SympVector]) -> Result<Self> {
        let n = g_tilde.len();
        if h_tilde.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: h_tilde.len(),
            });
        }
        check_size(n)?;
        let pairs: Vec<symplectic::HyperbolicPair> = g_tilde
            .iter()
            .zip(h_tilde)
            .map(|(u, v)| symplectic::HyperbolicPair {
                u: u.clone(),
                v: v.clone(),
            })
            .collect();
        symplectic::validate_symplectic_basis(&pairs, n).map_err(|_| Error::NotSymplectic)?;
        let herm = |u: &SympVector| PauliClass::new(u.clone()).hermitian();
        let g_tilde: Vec<PhasedPauli> = g_tilde.iter().map(herm).collect();
        let h_tilde: Vec<PhasedPauli> = h_tilde.iter().map(herm).collect();
        let zero = if n == 0 {
            StateVec::scalar()
        } else {
            stabilizer_eigenstate(&g_tilde)?
        };
        Ok(CliffordMap {
            n,
            g_tilde,
            h_tilde,
            zero,
        })
    }

    /// `U` with `[U N_u U†] = [N_{M u}]` for the symplectomorphism `M`.
    pub fn from_symplectomorphism(m: &BinMatrix) -> Result<Self> {
        if !symplectic::verify_symplectomorphism(m) {
            return Err(Error::NotSymplectic);
        }
        let n = m.ncols() / 2;
        let cols = m.transpose();
        let vecs = symplectic::rows_of(&cols)?;
        Self::from_pairs(&vecs[..n], &vecs[n..])
    }

    /// `|0̃⟩`
    pub fn zero_state(&self) -> &StateVec {
        &self.zero
    }

    /// `N_{h̃_1}^{b_1} ⋯ N_{h̃_n}^{b_n}`, qubit 0 the most significant bit
    /// of `b`.
    pub fn shift(&self, b: usize) -> PhasedPauli {
        let mut p = PhasedPauli::new(SympVector::zeros(self.n), 0);
        for i in 0..self.n {
            if b >> (self.n - 1 - i) & 1 == 1 {
                p = p.mul(&self.h_tilde[i]).expect("same size");
            }
        }
        p
    }

    /// `|b̃⟩`
    pub fn column(&self, b: usize) -> StateVec {
        apply_pauli_all(&self.zero, &self.shift(b)).expect("same size")
    }

    /// `U|ψ⟩`
    pub fn apply(&self, state: &StateVec) -> Result<StateVec> {
        self.check(state)?;
        let mut out = vec![Complex64::new(0.0, 0.0); 1 << self.n];
        for (b, &a) in state.amplitudes().iter().enumerate() {
            if a.norm() == 0.0 {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.column(b).amplitudes()) {
                *o += a * c;
            }
        }
        StateVec::from_amplitudes(out)
    }

    /// `U†|ψ⟩`
    pub fn apply_inverse(&self, state: &StateVec) -> Result<StateVec> {
        self.check(state)?;
        let out = (0..1usize << self.n).map(|b| self.column(b).inner(state)).collect();
        StateVec::from_amplitudes(out)
    }

    fn check(&self, state: &StateVec) -> Result<()> {
        if state.qubits() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: state.qubits(),
            });
        }
        Ok(())
    }

    pub fn to_dense(&self) -> UnitaryMatrix {
        let d = 1usize << self.n;
        let cols: Vec<StateVec> = (0..d).map(|b| self.column(b)).collect();
        let rows = (0..d)
            .map(|r| (0..d).map(|c| cols[c].amplitudes()[r]).collect())
            .collect();
        UnitaryMatrix::from_rows(rows).expect("square")
    }
}

/// The dense Clifford unitary for a symplectomorphism on `n` qubits.
pub fn synthesize_clifford(upsilon: &BinMatrix, n: usize) -> Result<UnitaryMatrix> {
    if upsilon.ncols() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            found: upsilon.ncols(),
        });
    }
    Ok(CliffordMap::from_symplectomorphism(upsilon)?.to_dense())
}

/// Checks `U N_u U† ∝ N_{M u}` for every standard basis vector `u`, returning
/// the largest deviation after removing a global phase per generator.
pub fn conjugation_error(u: &UnitaryMatrix, m: &BinMatrix) -> f64 {
    let n = u.qubits();
    let ud = u.dagger();
    let mut worst = 0f64;
    for i in 0..2 * n {
        let e = SympVector::from_bits(&BitVector::unit(2 * n, i)).unwrap();
        let image = symplectic::apply(m, &e).unwrap();
        let lhs = u
            .mul(&UnitaryMatrix::from_pauli(&PhasedPauli::new(e, 0)))
            .and_then(|x| x.mul(&ud))
            .unwrap();
        let rhs = UnitaryMatrix::from_pauli(&PhasedPauli::new(image, 0));
        worst = worst.max(lhs.distance_up_to_phase(&rhs));
    }
    worst
}

/// Whether `U` satisfies the conjugation contract for `M` within tolerance.
pub fn satisfies_conjugation(u: &UnitaryMatrix, m: &BinMatrix) -> bool {
    conjugation_error(u, m) <= TOLERANCE
}
