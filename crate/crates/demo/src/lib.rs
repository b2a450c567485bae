//! Browser bindings: analyze a check matrix, show its hyperbolic pairs, and
//! push two classical bits per ebit through superdense coding.
//!
//! Each export returns a JSON string; failures come back as
//! `{"error": "..."}` so the page has one code path.

use eaqec::corpus::load_text;
use eaqec::format::InputFormat;
use eaqec::gf2::BitVector;
use eaqec::pauli::{parse_pauli, PauliClass};
use eaqec::report::{CodeReport, DecompositionReport};
use eaqec::statevector::superdense_simulate;
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// The page never asks for more than this, so a keystroke stays cheap.
const DISTANCE_CAP: usize = 6;

fn format_of(name: &str) -> Result<InputFormat, String> {
    match name {
        "gf4" => Ok(InputFormat::Gf4),
        "symplectic" => Ok(InputFormat::Symplectic),
        other => Err(format!("unknown format {other:?}")),
    }
}

fn to_json(r: Result<impl Serialize, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("serializable"),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

#[derive(Serialize)]
struct Analysis {
    label: String,
    #[serde(flatten)]
    report: CodeReport,
}

pub fn analyze_text(text: &str, format: &str) -> Result<impl Serialize, String> {
    let loaded = load_text(text, format_of(format)?, None).map_err(|e| e.to_string())?;
    let mut report = CodeReport::new(&loaded.code, DISTANCE_CAP);
    if let Some(q) = &loaded.classical {
        report = report.with_classical(q);
    }
    Ok(Analysis {
        label: report.label(),
        report,
    })
}

pub fn decompose_text(text: &str, format: &str) -> Result<DecompositionReport, String> {
    let loaded = load_text(text, format_of(format)?, None).map_err(|e| e.to_string())?;
    Ok(DecompositionReport::new(&loaded.code, &loaded.input))
}

#[derive(Serialize)]
struct Superdense {
    sent: String,
    error: String,
    received: String,
    /// bits Bob reads that differ from what Alice sent
    flipped: String,
}

/// `message` holds `2c` bits `z|x` (separator optional), `error` a Pauli
/// string on Alice's `c` halves.
pub fn superdense_text(message: &str, error: &str) -> Result<impl Serialize, String> {
    let bits: Vec<bool> = message
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '|')
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(format!("bad bit {other:?}")),
        })
        .collect::<Result<_, _>>()?;
    let sent = BitVector::from_bools(bits.iter().copied());
    let error = if error.trim().is_empty() {
        "I".repeat(bits.len() / 2)
    } else {
        error.trim().to_string()
    };
    let pauli = parse_pauli(&error).map_err(|e| e.to_string())?;
    let received = superdense_simulate(&sent, &PauliClass::new(pauli.vec.clone())).map_err(|e| e.to_string())?;
    let flipped = BitVector::from_bools((0..sent.len()).map(|i| sent.get(i) != received.get(i)));
    Ok(Superdense {
        sent: sent.to_string(),
        error: PauliClass::new(pauli.vec).to_string(),
        received: received.to_string(),
        flipped: flipped.to_string(),
    })
}

#[wasm_bindgen]
pub fn analyze(text: &str, format: &str) -> String {
    to_json(analyze_text(text, format))
}

#[wasm_bindgen]
pub fn decompose(text: &str, format: &str) -> String {
    to_json(decompose_text(text, format))
}

#[wasm_bindgen]
pub fn superdense(message: &str, error: &str) -> String {
    to_json(superdense_text(message, error))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn analyze_bowen() {
        let v = parse(analyze("110\n101\n", "gf4"));
        assert_eq!(v["label"], "[[3,1,3;2]]");
        assert_eq!(v["distance_cap"], DISTANCE_CAP);
        assert_eq!(v["classical"]["d"], 3);
    }

    #[test]
    fn analyze_errors_are_json() {
        let v = parse(analyze("10|1\n", "symplectic"));
        assert!(v["error"].as_str().unwrap().contains("format"));
        let v = parse(analyze("110", "binary"));
        assert!(v["error"].is_string());
    }

    #[test]
    fn decompose_steane() {
        let text = "0001111|0000000\n0110011|0000000\n1010101|0000000\n\
                    0000000|0001111\n0000000|0110011\n0000000|1010101\n";
        let v = parse(decompose(text, "symplectic"));
        assert_eq!(v["c"], 0);
        assert_eq!(v["ell"], 6);
        assert_eq!(v["validated"], true);
    }

    #[test]
    fn superdense_flips() {
        let v = parse(superdense("10|01", "XI"));
        assert_eq!(v["sent"], "1001");
        // X on Alice's half shows up as a flipped x bit
        assert_eq!(v["flipped"], "0010");
        let v = parse(superdense("11|00", ""));
        assert_eq!(v["received"], "1100");
        assert!(parse(superdense("10|0", "I"))["error"].is_string());
    }
}
