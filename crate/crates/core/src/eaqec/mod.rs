//! The `[[n, k, d; c]]` code object built from an arbitrary check matrix.

mod bounds;
mod construct;
mod distance;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{self, BinMatrix, BitVector};
use crate::gf4::{lift_parity_check, QuaternaryCode};
use crate::symplectic::{
    self, standardizing_symplectomorphism_for, symplectic_gram_schmidt, HyperbolicPair, SympDecomposition, SympVector,
};

pub use bounds::{
    hamming_check, hashing_rate, shannon_entropy, shannon_quaternary_rate, singleton_check, BoundsReport,
    HammingReport, SingletonReport,
};
pub use construct::{catalytic_combine, extend, puncture};
pub use distance::{
    distance, distance_by_enumeration, distance_by_weight, lightest_logical, Distance, DistanceInfo, DistanceMethod,
};

/// An entanglement-assisted code: `n` physical qubits, `k` logical qubits,
/// `c` ebits, and `ell` stabilizer-like isotropic checks.
///
/// Qubit `j` of the code corresponds to `pairs[j]`. The first `k` pairs lie
/// outside the check space and carry the message, the next `ell` are
/// isotropic, and the last `c` are symplectic and each consume one ebit.
#[derive(Clone, Debug)]
pub struct EaqecCode {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub ell: usize,
    /// Rows `u_{k+1}, …, u_n, v_{k+ell+1}, …, v_n`.
    pub h: BinMatrix,
    pub h_iso: BinMatrix,
    pub decomp: SympDecomposition,
    pub pairs: Vec<HyperbolicPair>,
    pub upsilon: BinMatrix,
}

/// `H_aug = (H, B)` over the `n + c` qubits of Alice and Bob, laid out as
/// `(z_A z_B | x_A x_B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedCheck {
    pub h_aug: BinMatrix,
}

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational {
    pub num: i64,
    pub den: u64,
}

impl Rational {
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = num_integer::gcd(num.unsigned_abs(), den).max(1);
        Rational {
            num: num / g as i64,
            den: den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl EaqecCode {
    /// Builds the code whose check space is `rowspace(h)`.
    pub fn from_check_matrix(h: &BinMatrix) -> Result<EaqecCode> {
        if !h.ncols().is_multiple_of(2) {
            return Err(Error::OddColumns(h.ncols()));
        }
        let n = h.ncols() / 2;
        let decomp = symplectic_gram_schmidt(h)?;
        let (c, ell) = (decomp.c, decomp.ell);
        let k = n - c - ell;
        let pairs: Vec<HyperbolicPair> = decomp.pairs.iter().rev().cloned().collect();

        let mut rows: Vec<SympVector> = pairs[k..].iter().map(|p| p.u.clone()).collect();
        rows.extend(pairs[k + ell..].iter().map(|p| p.v.clone()));
        let h_code = symplectic::matrix_of(&rows, n);
        let iso_rows: Vec<SympVector> = pairs[k..k + ell].iter().map(|p| p.u.clone()).collect();
        let h_iso = symplectic::matrix_of(&iso_rows, n);
        let upsilon = standardizing_symplectomorphism_for(&pairs, n)?;
        Ok(EaqecCode {
            n,
            k,
            c,
            ell,
            h: h_code,
            h_iso,
            decomp,
            pairs,
            upsilon,
        })
    }

    /// The code obtained by lifting a classical quaternary code.
    pub fn from_gf4(code: &QuaternaryCode) -> Result<EaqecCode> {
        Self::from_check_matrix(&lift_parity_check(code))
    }

    /// Logical qubits minus ebits, `n − rank H`; may be negative.
    pub fn k_minus_c(&self) -> i64 {
        self.k as i64 - self.c as i64
    }

    pub fn rank(&self) -> usize {
        2 * self.c + self.ell
    }

    /// `c = 0`: an ordinary stabilizer code.
    pub fn is_dual_containing(&self) -> bool {
        self.c == 0
    }

    pub fn net_rate(&self) -> Rational {
        if self.n == 0 {
            return Rational::new(0, 1);
        }
        Rational::new(self.k_minus_c(), self.n as u64)
    }

    /// Basis of the symplectic code `C = rowspace(H)^⊥`.
    pub fn codeword_space(&self) -> BinMatrix {
        symplectic::symplectic_dual(&self.h).expect("even width")
    }

    /// `r = H ⊙ u^T`, one bit per row of `h`.
    pub fn reduced_syndrome(&self, u: &SympVector) -> Result<BitVector> {
        if u.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: u.n(),
            });
        }
        Ok(BitVector::from_bools(self.h.rows().iter().map(|r| {
            let w = SympVector::from_bits(r).unwrap();
            w.product(u)
        })))
    }

    /// Whether `u − u'` is invisible to the code but acts trivially, i.e. lies
    /// in `iso(C^⊥)`.
    pub fn in_iso(&self, u: &SympVector) -> bool {
        gf2::row_space_contains(&self.h_iso, &u.to_bits()).unwrap_or(false)
    }

    /// Every pair of distinct errors either has different syndromes or
    /// differs by an element of `iso(C^⊥)`.
    pub fn correctable(&self, errors: &[SympVector]) -> Result<bool> {
        Ok(self.first_uncorrectable_pair(errors)?.is_none())
    }

    /// Indices of a pair violating the correctability condition, if any.
    pub fn first_uncorrectable_pair(&self, errors: &[SympVector]) -> Result<Option<(usize, usize)>> {
        let syndromes = errors
            .iter()
            .map(|u| self.reduced_syndrome(u))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..errors.len() {
            for j in i + 1..errors.len() {
                if errors[i] == errors[j] || syndromes[i] != syndromes[j] {
                    continue;
                }
                if !self.in_iso(&errors[i].add(&errors[j])) {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// `(H, B)` with `B` pairing the `j`-th symplectic `u` row with
    /// `Z` on Bob's qubit `j` and the `j`-th `v` row with `X`.
    pub fn augmented_check(&self) -> AugmentedCheck {
        let (n, c) = (self.n, self.c);
        let rows = self
            .h
            .rows()
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let u = SympVector::from_bits(r).unwrap();
                let mut bz = BitVector::zeros(c);
                let mut bx = BitVector::zeros(c);
                if i >= self.ell && i < self.ell + c {
                    bz.set(i - self.ell, true);
                } else if i >= self.ell + c {
                    bx.set(i - self.ell - c, true);
                }
                SympVector {
                    z: u.z.concat(&bz),
                    x: u.x.concat(&bx),
                }
                .to_bits()
            })
            .collect();
        AugmentedCheck {
            h_aug: BinMatrix::from_rows(rows, 2 * (n + c)).unwrap(),
        }
    }

    /// The canonical check matrix `F = Υ(H)`.
    pub fn canonical_check(&self) -> BinMatrix {
        let rows = self.h.rows().iter().map(|r| self.upsilon.mul_vec(r).unwrap()).collect();
        BinMatrix::from_rows(rows, 2 * self.n).unwrap()
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidDecomposition(m.to_string()));
        if self.k + self.c + self.ell != self.n {
            return bad("k + c + ell != n");
        }
        if gf2::rank(&self.h) != self.rank() {
            return bad("rank H != 2c + ell");
        }
        symplectic::validate_symplectic_basis(&self.pairs, self.n)?;
        if !symplectic::verify_symplectomorphism(&self.upsilon) {
            return bad("Υ is not a symplectomorphism");
        }
        let iso = symplectic::iso_part(&self.h)?;
        if gf2::rank(&iso) != self.ell || gf2::rank(&iso.vstack(&self.h_iso)?) != self.ell {
            return bad("h_iso does not span iso(C^⊥)");
        }
        if self.canonical_check() != canonical_f(self.n, self.k, self.ell, self.c) {
            return bad("Υ(H) != F");
        }
        let aug = self.augmented_check();
        if !symplectic::is_isotropic(&aug.h_aug)? {
            return bad("H_aug is not isotropic");
        }
        Ok(())
    }
}

/// `F` with rows `g_{k+1..n}` followed by `h_{k+ell+1..n}`.
pub fn canonical_f(n: usize, k: usize, ell: usize, c: usize) -> BinMatrix {
    let mut rows: Vec<SympVector> = (k..n).map(|i| SympVector::g(n, i)).collect();
    rows.extend((k + ell..n).map(|i| SympVector::h(n, i)));
    debug_assert_eq!(rows.len(), ell + 2 * c);
    symplectic::matrix_of(&rows, n)
}

impl fmt::Display for EaqecCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{};{}]]", self.n, self.k, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf4::Gf4Matrix;
    use crate::pauli::parse_pauli;

    fn bowen() -> EaqecCode {
        let h = BinMatrix::from_strs(&["110|000", "101|000", "000|110", "000|101"]).unwrap();
        EaqecCode::from_check_matrix(&h).unwrap()
    }

    fn steane_h() -> BinMatrix {
        BinMatrix::from_strs(&[
            "0001111|0000000",
            "0110011|0000000",
            "1010101|0000000",
            "0000000|0001111",
            "0000000|0110011",
            "0000000|1010101",
        ])
        .unwrap()
    }

    #[test]
    fn bowen_parameters() {
        let code = bowen();
        assert_eq!((code.n, code.k, code.c, code.ell), (3, 1, 2, 0));
        code.validate().unwrap();
        assert!(!code.is_dual_containing());
        assert_eq!(code.net_rate().to_string(), "-1/3");
        // h = [u2, u1, v2, v1]
        let expect = BinMatrix::from_strs(&["000|110", "110|000", "101|000", "000|101"]).unwrap();
        assert_eq!(code.h, expect);
    }

    #[test]
    fn steane_parameters() {
        let code = EaqecCode::from_check_matrix(&steane_h()).unwrap();
        assert_eq!((code.n, code.k, code.c, code.ell), (7, 1, 0, 6));
        assert!(code.is_dual_containing());
        assert_eq!(code.net_rate().to_string(), "1/7");
        code.validate().unwrap();
    }

    #[test]
    fn empty_check_matrix() {
        let code = EaqecCode::from_check_matrix(&BinMatrix::empty(8)).unwrap();
        assert_eq!((code.n, code.k, code.c, code.ell), (4, 4, 0, 0));
        assert!(code.is_dual_containing());
        assert_eq!(code.net_rate().to_string(), "1");
        code.validate().unwrap();
    }

    #[test]
    fn gf4_construction() {
        let q = QuaternaryCode::new(Gf4Matrix::from_strs(&["110", "101"]).unwrap(), Some(3));
        let code = EaqecCode::from_gf4(&q).unwrap();
        assert_eq!((code.n, code.k, code.c), (3, 1, 2));
        assert_eq!(code.k as i64, 2 * q.k as i64 - q.n as i64 + code.c as i64);
        let identity = QuaternaryCode::new(Gf4Matrix::empty(5), None);
        let code = EaqecCode::from_gf4(&identity).unwrap();
        assert_eq!((code.n, code.k, code.c), (5, 5, 0));
    }

    #[test]
    fn syndromes() {
        let code = bowen();
        assert!(code.reduced_syndrome(&SympVector::zeros(3)).unwrap().is_zero());
        // a v row anticommutes only with its partner u row
        let v_row = SympVector::from_bits(code.h.row(2)).unwrap();
        let s = code.reduced_syndrome(&v_row).unwrap();
        assert_eq!(s.weight(), 1);
        assert!(s.get(0));
        let x1 = parse_pauli("XII").unwrap().vec;
        assert!(!code.reduced_syndrome(&x1).unwrap().is_zero());
        assert!(code.reduced_syndrome(&SympVector::zeros(2)).is_err());
    }

    #[test]
    fn correctability() {
        let code = bowen();
        assert!(code.correctable(&[SympVector::zeros(3)]).unwrap());
        let mut errs = vec![SympVector::zeros(3)];
        for q in 0..3 {
            for l in ["X", "Y", "Z"] {
                let mut s = ["I"; 3];
                s[q] = l;
                errs.push(parse_pauli(&s.concat()).unwrap().vec);
            }
        }
        assert_eq!(errs.len(), 10);
        assert!(code.correctable(&errs).unwrap());
        // two weight-one errors whose sum is a weight-two logical
        let logical = code.codeword_space();
        let mut found = false;
        'outer: for a in &errs[1..] {
            for b in &errs[1..] {
                let s = a.add(b);
                if a != b && gf2::row_space_contains(&logical, &s.to_bits()).unwrap() && !code.in_iso(&s) {
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(!found, "a distance-3 code has no such pair");
        let w2: Vec<SympVector> = ["XXI", "III", "ZIZ", "YZI", "IYX"]
            .iter()
            .map(|s| parse_pauli(s).unwrap().vec)
            .collect();
        let mut with_logical = errs.clone();
        with_logical.extend(w2);
        assert!(!code.correctable(&with_logical).unwrap());
    }

    #[test]
    fn augmented_isotropic() {
        let code = bowen();
        let aug = code.augmented_check();
        assert_eq!((aug.h_aug.nrows(), aug.h_aug.ncols()), (4, 10));
        assert!(symplectic::is_isotropic(&aug.h_aug).unwrap());
        let steane = EaqecCode::from_check_matrix(&steane_h()).unwrap();
        assert_eq!(steane.augmented_check().h_aug, steane.h);
    }

    #[test]
    fn canonical_augmented_matches_block_form() {
        // F itself as input: Υ is the identity up to the pair choice
        let (n, k, ell, c) = (3, 1, 1, 1);
        let f = canonical_f(n, k, ell, c);
        let code = EaqecCode::from_check_matrix(&f).unwrap();
        assert_eq!((code.k, code.ell, code.c), (k, ell, c));
        let aug = code.augmented_check();
        let expect = BinMatrix::from_strs(&["0100|0000", "0011|0000", "0000|0011"]).unwrap();
        assert_eq!(code.canonical_check(), f);
        assert_eq!(gf2::rank(&aug.h_aug.vstack(&expect).unwrap()), 3);
    }

    #[test]
    fn rational_display() {
        assert_eq!(Rational::new(-2, 6).to_string(), "-1/3");
        assert_eq!(Rational::new(0, 5).to_string(), "0");
        assert_eq!(Rational::new(4, 4).to_string(), "1");
    }
}
