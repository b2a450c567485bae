//! Minimum distance: the least weight of a non-zero `u ∈ C` outside
//! `iso(C^⊥)`.

use rayon::prelude::*;
use serde::Serialize;

use super::EaqecCode;
use crate::gf2::{BinMatrix, BitVector, EchelonBasis};
use crate::gf4::for_each_subset;
use crate::symplectic::SympVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Distance {
    Exact(usize),
    /// No qualifying vector of weight at most the cap.
    AboveCap(usize),
    /// `C = {0}`.
    Undefined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMethod {
    /// Gray-code walk over all of `C`
    Enumeration,
    /// Errors of increasing weight, tested against the syndrome
    Weight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceInfo {
    pub distance: Distance,
    /// Some non-zero element of `iso(C^⊥)` is lighter than `d`; `None` when
    /// that could not be decided within the cap.
    pub degenerate: Option<bool>,
    /// `C = iso(C^⊥)`, so no vector qualifies; `d` is then taken as the
    /// minimum weight of `C` itself.
    pub all_logicals_trivial: bool,
    pub cap: usize,
    pub method: DistanceMethod,
}

impl DistanceInfo {
    pub fn exact(&self) -> Option<usize> {
        match self.distance {
            Distance::Exact(d) => Some(d),
            _ => None,
        }
    }
}

/// A basis of `C` split as `[complement of iso; iso]`.
struct SplitBasis {
    outer: Vec<BitVector>,
    iso: Vec<BitVector>,
}

fn split_basis(code: &EaqecCode) -> SplitBasis {
    let c_space = code.codeword_space();
    let mut span = EchelonBasis::new(2 * code.n);
    let iso: Vec<BitVector> = code.h_iso.rows().to_vec();
    for r in &iso {
        span.insert(r);
    }
    let outer = c_space.rows().iter().filter(|r| span.insert(r)).cloned().collect();
    SplitBasis { outer, iso }
}

fn log2_cost_enumeration(code: &EaqecCode) -> f64 {
    (code.n as i64 + code.k_minus_c()) as f64
}

fn log2_cost_weight(n: usize, cap: usize) -> f64 {
    let mut total = 0f64;
    let mut binom = 1f64;
    for w in 0..=cap.min(n) {
        total += binom * 3f64.powi(w as i32);
        binom = binom * (n - w) as f64 / (w + 1) as f64;
    }
    total.log2()
}

/// Picks the cheaper of the two searches.
pub fn distance(code: &EaqecCode, cap: usize) -> DistanceInfo {
    if log2_cost_enumeration(code) <= log2_cost_weight(code.n, cap) {
        distance_by_enumeration(code, cap)
    } else {
        distance_by_weight(code, cap)
    }
}

fn weight_of(bits: &BitVector, n: usize) -> usize {
    SympVector::from_bits(bits).map(|u| u.weight()).unwrap_or(n)
}

/// Walks every element of `C` in Gray-code order, in parallel chunks, and
/// tracks the lightest vector inside and outside `iso(C^⊥)`.
pub fn distance_by_enumeration(code: &EaqecCode, cap: usize) -> DistanceInfo {
    let SplitBasis { outer, iso } = split_basis(code);
    let n = code.n;
    let basis: Vec<BitVector> = outer.iter().chain(iso.iter()).cloned().collect();
    let dim = basis.len();
    assert!(dim < 64, "codeword space of dimension {dim} is beyond enumeration");
    let outer_mask: u64 = (1u64 << outer.len()) - 1;
    let total: u64 = 1u64 << dim;
    let chunk_bits = dim.saturating_sub(6).min(dim);
    let chunk_len = 1u64 << chunk_bits;
    let chunks = total / chunk_len;

    let (min_outer, min_iso) = (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let start = ci * chunk_len;
            let end = start + chunk_len;
            let mut best = (usize::MAX, usize::MAX);
            let g0 = start ^ (start >> 1);
            let mut v = BitVector::zeros(2 * n);
            for (j, b) in basis.iter().enumerate() {
                if g0 >> j & 1 == 1 {
                    v.xor_assign(b);
                }
            }
            for i in start..end {
                if i > start {
                    v.xor_assign(&basis[i.trailing_zeros() as usize]);
                }
                if i == 0 {
                    continue;
                }
                let g = i ^ (i >> 1);
                let w = weight_of(&v, n);
                if g & outer_mask != 0 {
                    best.0 = best.0.min(w);
                } else {
                    best.1 = best.1.min(w);
                }
            }
            best
        })
        .reduce(|| (usize::MAX, usize::MAX), |a, b| (a.0.min(b.0), a.1.min(b.1)));

    let to_opt = |x: usize| (x != usize::MAX).then_some(x);
    finish(
        to_opt(min_outer),
        to_opt(min_iso),
        dim,
        cap,
        DistanceMethod::Enumeration,
        true,
    )
}

fn finish(
    min_outer: Option<usize>,
    min_iso: Option<usize>,
    dim: usize,
    cap: usize,
    method: DistanceMethod,
    complete: bool,
) -> DistanceInfo {
    let mut info = DistanceInfo {
        distance: Distance::Undefined,
        degenerate: None,
        all_logicals_trivial: false,
        cap,
        method,
    };
    if dim == 0 {
        return info;
    }
    let d = match min_outer {
        Some(d) => d,
        None if complete => {
            // every codeword is a stabilizer
            info.all_logicals_trivial = true;
            info.degenerate = Some(false);
            let m = min_iso.expect("C is non-zero");
            info.distance = if m <= cap {
                Distance::Exact(m)
            } else {
                Distance::AboveCap(cap)
            };
            return info;
        }
        None => {
            info.distance = Distance::AboveCap(cap);
            info.degenerate = min_iso.map(|_| true);
            return info;
        }
    };
    if d > cap {
        info.distance = Distance::AboveCap(cap);
        info.degenerate = match min_iso {
            Some(m) if m <= cap => Some(true),
            _ if complete => Some(min_iso.is_some_and(|m| m < d)),
            _ => None,
        };
    } else {
        info.distance = Distance::Exact(d);
        info.degenerate = Some(min_iso.is_some_and(|m| m < d));
    }
    info
}

/// Tries every Pauli error of weight `1, 2, …, cap` and stops at the first
/// weight where some error commutes with all checks without being in
/// `iso(C^⊥)`.
pub fn distance_by_weight(code: &EaqecCode, cap: usize) -> DistanceInfo {
    let n = code.n;
    let dim = (n as i64 + code.k_minus_c()) as usize;
    let checks: Vec<SympVector> = code
        .h
        .rows()
        .iter()
        .map(|r| SympVector::from_bits(r).unwrap())
        .collect();
    let iso_basis = {
        let mut b = EchelonBasis::new(2 * n);
        for r in code.h_iso.rows() {
            b.insert(r);
        }
        b
    };
    let mut min_iso = None;
    let mut min_outer = None;
    let mut support = Vec::new();
    'weights: for w in 1..=cap.min(n) {
        let mut found_outer = false;
        let mut found_iso = false;
        for_each_subset(n, w, &mut support, &mut |supp| {
            if found_outer {
                return;
            }
            let mut letters = vec![1u8; w];
            loop {
                let mut u = SympVector::zeros(n);
                for (&q, &l) in supp.iter().zip(&letters) {
                    // 1 = X, 2 = Z, 3 = Y
                    if l & 1 == 1 {
                        u.x.set(q, true);
                    }
                    if l & 2 == 2 {
                        u.z.set(q, true);
                    }
                }
                if checks.iter().all(|h| !h.product(&u)) {
                    if iso_basis.contains(&u.to_bits()) {
                        found_iso = true;
                    } else {
                        found_outer = true;
                        return;
                    }
                }
                let mut i = 0;
                while i < w && letters[i] == 3 {
                    letters[i] = 1;
                    i += 1;
                }
                if i == w {
                    break;
                }
                letters[i] += 1;
            }
        });
        if found_iso && min_iso.is_none() {
            min_iso = Some(w);
        }
        if found_outer {
            min_outer = Some(w);
            break 'weights;
        }
    }
    let complete = cap >= n;
    let mut info = finish(min_outer, min_iso, dim, cap, DistanceMethod::Weight, complete);
    if min_outer.is_none() && !complete && code.k_minus_c() + n as i64 == code.ell as i64 {
        // C = iso(C^⊥): the walk above only ever finds stabilizers
        info.all_logicals_trivial = true;
        info.degenerate = Some(false);
        info.distance = min_iso.map_or(Distance::AboveCap(cap), Distance::Exact);
    }
    info
}

/// The lightest vectors of `C`, for diagnostics.
pub fn lightest_logical(code: &EaqecCode) -> Option<SympVector> {
    let SplitBasis { outer, iso } = split_basis(code);
    let all: Vec<BitVector> = outer.iter().chain(iso.iter()).cloned().collect();
    let m = BinMatrix::from_rows(all, 2 * code.n).ok()?;
    let dim = m.nrows();
    let outer_mask: u64 = (1u64 << outer.len()) - 1;
    (1..1u64 << dim)
        .filter(|i| i & outer_mask != 0)
        .map(|i| SympVector::from_bits(&m.combine_rows(&BitVector::from_u64(i, dim)).unwrap()).unwrap())
        .min_by_key(|u| (u.weight(), u.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eaqec::EaqecCode;

    fn code(rows: &[&str]) -> EaqecCode {
        EaqecCode::from_check_matrix(&BinMatrix::from_strs(rows).unwrap()).unwrap()
    }

    fn bowen() -> EaqecCode {
        code(&["110|000", "101|000", "000|110", "000|101"])
    }

    fn steane() -> EaqecCode {
        code(&[
            "0001111|0000000",
            "0110011|0000000",
            "1010101|0000000",
            "0000000|0001111",
            "0000000|0110011",
            "0000000|1010101",
        ])
    }

    fn both(c: &EaqecCode, cap: usize) -> (DistanceInfo, DistanceInfo) {
        (distance_by_enumeration(c, cap), distance_by_weight(c, cap))
    }

    #[test]
    fn bowen_distance() {
        let (a, b) = both(&bowen(), 8);
        assert_eq!(a.distance, Distance::Exact(3));
        assert_eq!(b.distance, Distance::Exact(3));
        assert_eq!(a.degenerate, Some(false));
    }

    #[test]
    fn steane_distance() {
        let (a, b) = both(&steane(), 8);
        assert_eq!(a.distance, Distance::Exact(3));
        assert_eq!(b.distance, Distance::Exact(3));
        assert_eq!(a.degenerate, Some(false));
        assert_eq!(b.degenerate, Some(false));
    }

    #[test]
    fn trivial_code_distance() {
        let c = EaqecCode::from_check_matrix(&BinMatrix::empty(6)).unwrap();
        assert_eq!(distance(&c, 8).distance, Distance::Exact(1));
        assert_eq!(distance_by_weight(&c, 8).distance, Distance::Exact(1));
    }

    #[test]
    fn full_rank_code_is_undefined() {
        let c = EaqecCode::from_check_matrix(&BinMatrix::identity(4)).unwrap();
        assert_eq!(distance_by_enumeration(&c, 8).distance, Distance::Undefined);
        assert_eq!(distance_by_weight(&c, 8).distance, Distance::Undefined);
    }

    #[test]
    fn cap_is_respected() {
        let (a, b) = both(&steane(), 2);
        assert_eq!(a.distance, Distance::AboveCap(2));
        assert_eq!(b.distance, Distance::AboveCap(2));
    }

    #[test]
    fn degenerate_shor_like_code() {
        // [[4,2,2;0]] with a weight-one Z stabilizer prepended on a fifth qubit
        let c = code(&["00001|00000", "00000|11110", "11110|00000"]);
        let (a, b) = both(&c, 8);
        assert_eq!(a.distance, b.distance);
        assert_eq!(a.degenerate, Some(true));
        assert_eq!(b.degenerate, Some(true));
    }

    #[test]
    fn lightest_logical_has_distance_weight() {
        let u = lightest_logical(&bowen()).unwrap();
        assert_eq!(u.weight(), 3);
    }
}
