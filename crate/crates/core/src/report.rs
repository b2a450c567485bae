//! Serializable summaries of a code and its decomposition.

use serde::Serialize;

use crate::eaqec::{distance, hamming_check, singleton_check, Distance, EaqecCode, Rational, SingletonReport};
use crate::format::{render_gf4, render_symplectic};
use crate::gf4::QuaternaryCode;
use crate::symplectic::PairKind;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassicalSummary {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub h4: Vec<String>,
}

impl ClassicalSummary {
    pub fn new(q: &QuaternaryCode) -> Self {
        ClassicalSummary {
            n: q.n,
            k: q.k,
            d: q.distance(),
            h4: render_gf4(&q.h4),
        }
    }
}

/// Parameters, distance and bounds of one code.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub ell: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub distance: Distance,
    pub distance_cap: usize,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub all_logicals_trivial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<bool>,
    pub dual_containing: bool,
    pub k_minus_c: i64,
    pub net_rate: Rational,
    /// `null` unless `d` is known exactly
    pub singleton: Option<SingletonReport>,
    /// Hamming bound verdict, only for non-degenerate codes
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamming: Option<bool>,
    pub h: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classical: Option<ClassicalSummary>,
}

impl CodeReport {
    pub fn new(code: &EaqecCode, cap: usize) -> Self {
        let info = distance(code, cap);
        let d = info.exact();
        let hamming = match (d, info.degenerate) {
            (Some(d), Some(false)) => Some(hamming_check(code, d).holds),
            _ => None,
        };
        CodeReport {
            n: code.n,
            k: code.k,
            c: code.c,
            ell: code.ell,
            d,
            distance: info.distance,
            distance_cap: cap,
            all_logicals_trivial: info.all_logicals_trivial,
            degenerate: info.degenerate,
            dual_containing: code.is_dual_containing(),
            k_minus_c: code.k_minus_c(),
            net_rate: code.net_rate(),
            singleton: d.map(|d| singleton_check(code, d)),
            hamming,
            h: render_symplectic(&code.h),
            classical: None,
        }
    }

    pub fn with_classical(mut self, q: &QuaternaryCode) -> Self {
        self.classical = Some(ClassicalSummary::new(q));
        self
    }

    /// `[[n,k,d;c]]`, with `d` replaced by `>cap` or `?` when unknown.
    pub fn label(&self) -> String {
        let d = match self.distance {
            Distance::Exact(d) => d.to_string(),
            Distance::AboveCap(cap) => format!(">{cap}"),
            Distance::Undefined => "?".into(),
        };
        format!("[[{},{},{};{}]]", self.n, self.k, d, self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub kind: PairKind,
    pub u: String,
    pub v: String,
}

/// The hyperbolic-pair decomposition of `rowspace(H)` and the
/// standardizing symplectomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub m: usize,
    pub c: usize,
    pub ell: usize,
    /// symplectic pairs, then isotropic vectors with their partners, then
    /// the completion
    pub pairs: Vec<PairReport>,
    pub upsilon: Vec<String>,
    pub validated: bool,
}

impl DecompositionReport {
    pub fn new(code: &EaqecCode, h: &crate::gf2::BinMatrix) -> Self {
        let d = &code.decomp;
        let pairs = d
            .pairs
            .iter()
            .enumerate()
            .map(|(i, p)| PairReport {
                kind: d.kind(i),
                u: format!("{}|{}", p.u.z, p.u.x),
                v: format!("{}|{}", p.v.z, p.v.x),
            })
            .collect();
        DecompositionReport {
            n: d.n,
            m: d.m,
            c: d.c,
            ell: d.ell,
            pairs,
            upsilon: render_symplectic(&code.upsilon),
            validated: d.validate(h).is_ok(),
        }
    }
}
