//! Singleton and Hamming bounds for entanglement-assisted codes, and the
//! closed-form hashing and quaternary Shannon rates.

use num_bigint::BigUint;
use serde::Serialize;

use super::{EaqecCode, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SingletonReport {
    pub holds: bool,
    pub saturated: bool,
    /// `n − k + c`
    pub lhs: usize,
    /// `2(d − 1)`
    pub rhs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HammingReport {
    pub holds: bool,
    pub saturated: bool,
    /// `Σ_{j ≤ t} 3^j C(n, j)`, as a decimal string
    pub lhs: String,
    /// `2^{n−k+c}`
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub singleton: Option<SingletonReport>,
    pub hamming: Option<HammingReport>,
    pub net_rate: Rational,
}

impl BoundsReport {
    /// Bounds for a code of distance `d`; `degenerate` suppresses the
    /// Hamming bound, which is only a theorem for non-degenerate codes.
    pub fn new(code: &EaqecCode, d: Option<usize>, degenerate: Option<bool>) -> Self {
        BoundsReport {
            singleton: d.map(|d| singleton_check(code, d)),
            hamming: match (d, degenerate) {
                (Some(d), Some(false)) => Some(hamming_check(code, d)),
                _ => None,
            },
            net_rate: code.net_rate(),
        }
    }
}

/// `n − k + c ≥ 2(d − 1)`
pub fn singleton_check(code: &EaqecCode, d: usize) -> SingletonReport {
    let lhs = code.n - code.k + code.c;
    let rhs = 2 * d.saturating_sub(1);
    SingletonReport {
        holds: lhs >= rhs,
        saturated: lhs == rhs,
        lhs,
        rhs,
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `Σ_{j=0}^{⌊(d−1)/2⌋} 3^j C(n, j) ≤ 2^{n−k+c}`
pub fn hamming_check(code: &EaqecCode, d: usize) -> HammingReport {
    let t = d.saturating_sub(1) / 2;
    let lhs: BigUint = (0..=t.min(code.n))
        .map(|j| BigUint::from(3u32).pow(j as u32) * binomial(code.n, j))
        .sum();
    let rhs = BigUint::from(1u32) << (code.n - code.k + code.c);
    HammingReport {
        holds: lhs <= rhs,
        saturated: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn validate(p: &[f64]) -> Result<()> {
    if p.len() != 4 {
        return Err(Error::InvalidDistribution(format!(
            "expected 4 probabilities, got {}",
            p.len()
        )));
    }
    if p.iter().any(|&x| !x.is_finite() || x < 0.0) {
        return Err(Error::InvalidDistribution("probabilities must be non-negative".into()));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidDistribution(format!("probabilities sum to {total}")));
    }
    Ok(())
}

/// Entropy in bits of a Pauli error distribution `(p_I, p_X, p_Y, p_Z)`.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    validate(p)?;
    Ok(p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum())
}

/// `1 − H(p)`
pub fn hashing_rate(p: &[f64]) -> Result<f64> {
    Ok(1.0 - shannon_entropy(p)?)
}

/// `2 − H(p)`
pub fn shannon_quaternary_rate(p: &[f64]) -> Result<f64> {
    Ok(2.0 - shannon_entropy(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BinMatrix;

    fn code(rows: &[&str]) -> EaqecCode {
        EaqecCode::from_check_matrix(&BinMatrix::from_strs(rows).unwrap()).unwrap()
    }

    #[test]
    fn bowen_bounds() {
        let c = code(&["110|000", "101|000", "000|110", "000|101"]);
        let s = singleton_check(&c, 3);
        assert!(s.holds && s.saturated);
        assert_eq!((s.lhs, s.rhs), (4, 4));
        let h = hamming_check(&c, 3);
        assert!(h.holds && !h.saturated);
        assert_eq!((h.lhs.as_str(), h.rhs.as_str()), ("10", "16"));
    }

    #[test]
    fn five_qubit_is_perfect() {
        let c = code(&["01100|10010", "00110|01001", "00011|10100", "10001|01010"]);
        assert_eq!((c.n, c.k, c.c), (5, 1, 0));
        let h = hamming_check(&c, 3);
        assert!(h.holds && h.saturated);
        assert_eq!(h.lhs, "16");
    }

    #[test]
    fn distance_one_always_holds() {
        let c = EaqecCode::from_check_matrix(&BinMatrix::empty(6)).unwrap();
        assert!(singleton_check(&c, 1).holds);
    }

    #[test]
    fn degenerate_suppresses_hamming() {
        let c = code(&["110|000", "101|000", "000|110", "000|101"]);
        assert!(BoundsReport::new(&c, Some(3), Some(true)).hamming.is_none());
        assert!(BoundsReport::new(&c, Some(3), Some(false)).hamming.is_some());
    }

    #[test]
    fn rates() {
        assert_eq!(hashing_rate(&[1.0, 0.0, 0.0, 0.0]).unwrap(), 1.0);
        assert_eq!(shannon_quaternary_rate(&[1.0, 0.0, 0.0, 0.0]).unwrap(), 2.0);
        assert!((hashing_rate(&[0.25; 4]).unwrap() + 1.0).abs() < 1e-15);
        assert!(shannon_quaternary_rate(&[0.25; 4]).unwrap().abs() < 1e-15);
        assert!(hashing_rate(&[0.5, 0.5]).is_err());
        assert!(hashing_rate(&[0.5, 0.6, -0.1, 0.0]).is_err());
        assert!(hashing_rate(&[0.5, 0.5, 0.1, 0.0]).is_err());
    }
}
