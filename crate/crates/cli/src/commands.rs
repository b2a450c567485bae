use std::fs;
use std::path::Path;

use eaqec::corpus::{self, CorpusEntry, LoadedCode, Meta};
use eaqec::eaqec::{
    catalytic_combine, distance_by_enumeration, distance_by_weight, extend, puncture, Distance, EaqecCode,
};
use eaqec::format::InputFormat;
use eaqec::pauli::{for_each_error_of_weight, parse_pauli, PauliClass};
use eaqec::report::{CodeReport, DecompositionReport};
use eaqec::statevector::{check_size, Encoder, StateVec, UnitaryMatrix};
use eaqec::symplectic::SympVector;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::reference::{reference_distance, ReferenceEntry};
use crate::{CliError, Command, ConstructOp, InputArgs, Output, EXIT_FAILURE, EXIT_PARSE};

#[derive(Debug, Clone, Serialize)]
struct InputInfo {
    path: String,
    format: InputFormat,
    sha256: String,
}

struct Loaded {
    info: InputInfo,
    code: LoadedCode,
}

fn load(path: &Path, args: &InputArgs) -> Result<Loaded, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::new(EXIT_PARSE, format!("{}: not UTF-8 text", path.display())))?;
    let format = if args.gf4 {
        InputFormat::Gf4
    } else if args.symplectic {
        InputFormat::Symplectic
    } else {
        InputFormat::from_path(path)
    };
    let meta = match fs::read_to_string(path.with_extension("meta")) {
        Ok(t) if path.extension().is_some_and(|e| e != "meta") => Some(Meta::parse(&t)?),
        _ => None,
    };
    let code = corpus::load_text(&text, format, meta.as_ref())?;
    Ok(Loaded {
        info: InputInfo {
            path: path.display().to_string(),
            format,
            sha256: hex::encode(Sha256::digest(&bytes)),
        },
        code,
    })
}

fn code_report(loaded: &LoadedCode, cap: usize) -> CodeReport {
    let r = CodeReport::new(&loaded.code, cap);
    match &loaded.classical {
        Some(q) => r.with_classical(q),
        None => r,
    }
}

/// `{"command": .., extra.., <report fields>}`
fn merge(head: Value, report: &impl Serialize) -> Value {
    let mut obj = head.as_object().cloned().unwrap_or_default();
    if let Value::Object(fields) = serde_json::to_value(report).expect("serializable") {
        obj.extend(fields);
    }
    Value::Object(obj)
}

fn describe(r: &CodeReport) -> String {
    let mut s = format!(
        "{}  k-c = {}, net rate {}, {}\n",
        r.label(),
        r.k_minus_c,
        r.net_rate,
        if r.dual_containing {
            "dual-containing"
        } else {
            "entanglement-assisted"
        }
    );
    if let Some(q) = &r.classical {
        let d = q.d.map_or("?".to_string(), |d| d.to_string());
        s += &format!("  from the [{},{},{}] quaternary code\n", q.n, q.k, d);
    }
    if let Some(sg) = &r.singleton {
        s += &format!(
            "  Singleton: n-k+c = {} >= 2(d-1) = {}: {}{}\n",
            sg.lhs,
            sg.rhs,
            if sg.holds { "holds" } else { "VIOLATED" },
            if sg.saturated { ", saturated" } else { "" }
        );
    }
    match r.hamming {
        Some(h) => s += &format!("  Hamming: {}\n", if h { "holds" } else { "VIOLATED" }),
        None => s += "  Hamming: not applicable\n",
    }
    if let Some(deg) = r.degenerate {
        s += &format!("  degenerate: {deg}\n");
    }
    s
}

pub fn run_command(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Analyze {
            path,
            input,
            distance_cap,
        } => analyze(path, input, *distance_cap),
        Command::Decompose { path, input } => decompose(path, input),
        Command::Table { corpus, distance_cap } => table(corpus.as_deref(), *distance_cap),
        Command::Verify {
            path,
            input,
            errors,
            seed,
            dump,
            distance_cap,
        } => verify(path, input, errors, *seed, *dump, *distance_cap),
        Command::Construct { op } => construct(op),
    }
}

fn analyze(path: &Path, input: &InputArgs, cap: usize) -> Result<Output, CliError> {
    let loaded = load(path, input)?;
    let report = code_report(&loaded.code, cap);
    Ok(Output {
        summary: describe(&report),
        json: merge(json!({"command": "analyze", "input": loaded.info}), &report),
        exit_code: 0,
    })
}

fn decompose(path: &Path, input: &InputArgs) -> Result<Output, CliError> {
    let loaded = load(path, input)?;
    let report = DecompositionReport::new(&loaded.code.code, &loaded.code.input);
    if !report.validated {
        return Err(CliError::new(EXIT_FAILURE, "decomposition failed its own invariants"));
    }
    let mut summary = format!(
        "n = {}, m = {}, c = {}, ell = {}\n",
        report.n, report.m, report.c, report.ell
    );
    for (i, p) in report.pairs.iter().enumerate() {
        summary += &format!(
            "  {:<10} u{} = {}  v{} = {}\n",
            format!("{:?}", p.kind),
            i + 1,
            p.u,
            i + 1,
            p.v
        );
    }
    Ok(Output {
        summary,
        json: merge(json!({"command": "decompose", "input": loaded.info}), &report),
        exit_code: 0,
    })
}

#[derive(Debug, Serialize)]
struct TableRow {
    name: String,
    format: InputFormat,
    n: usize,
    k: usize,
    c: usize,
    k_minus_c: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    distance: Distance,
    /// both distance routes agree
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    declared: Option<Meta>,
    #[serde(skip_serializing_if = "Option::is_none")]
    declared_consistent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<ReferenceEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meets_reference: Option<bool>,
}

fn table_row(entry: &CorpusEntry, cap: usize) -> Result<TableRow, CliError> {
    let loaded = entry.load()?;
    let code = &loaded.code;
    let by_enum = distance_by_enumeration(code, cap);
    let by_weight = distance_by_weight(code, cap);
    let d = by_enum.exact();
    let declared_consistent = entry.meta.map(|m| match &loaded.classical {
        Some(q) => m.n == q.n && m.k == q.k && q.brute_force_distance() == Some(m.d),
        None => m.n == code.n && m.k == code.k && d == Some(m.d),
    });
    let reference = reference_distance(code.n, code.k_minus_c());
    Ok(TableRow {
        name: entry.name.clone(),
        format: entry.format,
        n: code.n,
        k: code.k,
        c: code.c,
        k_minus_c: code.k_minus_c(),
        d,
        distance: by_enum.distance,
        verified: by_enum.distance == by_weight.distance,
        declared: entry.meta,
        declared_consistent,
        meets_reference: reference.zip(d).map(|(r, d)| d >= r.d),
        reference,
    })
}

fn table(dir: Option<&Path>, cap: usize) -> Result<Output, CliError> {
    let entries = match dir {
        Some(d) => corpus::read_dir(d).map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", d.display())))?,
        None => corpus::bundled(),
    };
    let rows = entries
        .iter()
        .map(|e| table_row(e, cap))
        .collect::<Result<Vec<_>, _>>()?;
    let mut summary = format!(
        "{:<16} {:>3} {:>4} {:>3} {:>4}  {}\n",
        "code", "n", "k-c", "c", "d", "reference"
    );
    for r in &rows {
        let d = match r.distance {
            Distance::Exact(d) => d.to_string(),
            Distance::AboveCap(c) => format!(">{c}"),
            Distance::Undefined => "?".into(),
        };
        let reference = r.reference.map_or("-".to_string(), |x| {
            format!("{}{}", x.d, if x.improved { "*" } else { "" })
        });
        summary += &format!(
            "{:<16} {:>3} {:>4} {:>3} {:>4}  {}{}\n",
            r.name,
            r.n,
            r.k_minus_c,
            r.c,
            d,
            reference,
            if r.verified { "" } else { "  (routes disagree)" }
        );
    }
    let all_verified = rows.iter().all(|r| r.verified);
    Ok(Output {
        summary,
        json: json!({
            "command": "table",
            "corpus": dir.map_or("bundled".to_string(), |d| d.display().to_string()),
            "distance_cap": cap,
            "all_verified": all_verified,
            "rows": rows,
        }),
        exit_code: if all_verified { 0 } else { EXIT_FAILURE },
    })
}

/// All Pauli errors on `n` qubits of weight exactly `w`, or an explicit list.
fn error_set(errors: &str, n: usize) -> Result<Vec<SympVector>, CliError> {
    if let Some(w) = errors.strip_prefix("weight:") {
        let w: usize = w
            .trim()
            .parse()
            .map_err(|_| CliError::new(EXIT_PARSE, format!("bad error weight {w:?}")))?;
        if w > n {
            return Err(CliError::new(EXIT_PARSE, format!("weight {w} exceeds n = {n}")));
        }
        let mut out = Vec::new();
        for_each_error_of_weight(n, w, &mut |u| out.push(u.clone()));
        return Ok(out);
    }
    let list = errors.strip_prefix("list:").unwrap_or(errors);
    list.split(',')
        .map(|s| {
            let p = parse_pauli(s.trim())?;
            if p.n() != n {
                return Err(CliError::new(
                    EXIT_PARSE,
                    format!("error {s:?} acts on {} qubits, the code has {n}", p.n()),
                ));
            }
            Ok(p.vec)
        })
        .collect()
}

fn random_state(qubits: usize, seed: u64) -> StateVec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let amps = (0..1usize << qubits)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let mut s = StateVec::from_amplitudes(amps).expect("power of two");
    s.normalize();
    s
}

#[derive(Debug, Serialize)]
struct Case {
    error: String,
    weight: usize,
    expected_syndrome: String,
    syndrome: String,
    correction: String,
    fidelity: f64,
    registers_clean: bool,
    pass: bool,
}

fn verify(path: &Path, input: &InputArgs, errors: &str, seed: u64, dump: bool, cap: usize) -> Result<Output, CliError> {
    let loaded = load(path, input)?;
    let code = &loaded.code.code;
    check_size(code.n + code.c)?;
    let errs = error_set(errors, code.n)?;
    let enc = Encoder::new(code)?;
    let message = random_state(code.k, seed);
    let codeword = enc.encode(&message)?;

    let mut cases = Vec::with_capacity(errs.len());
    for e in &errs {
        let expected = code.reduced_syndrome(e)?;
        let out = enc.decode(&enc.corrupt(&codeword, e)?)?;
        let fidelity = out.message.fidelity(&message);
        let pass = out.syndrome == expected && out.registers_clean() && fidelity >= 1.0 - 1e-9;
        cases.push(Case {
            error: PauliClass::new(e.clone()).to_string(),
            weight: e.weight(),
            expected_syndrome: expected.to_string(),
            syndrome: out.syndrome.to_string(),
            correction: PauliClass::new(out.correction.clone()).to_string(),
            fidelity: round(fidelity),
            registers_clean: out.registers_clean(),
            pass,
        });
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    let report = code_report(&loaded.code, cap);
    let mut head = json!({
        "command": "verify",
        "input": loaded.info,
        "errors": errors,
        "seed": seed,
        "tested": cases.len(),
        "passed": passed,
        "all_passed": passed == cases.len(),
        "cases": cases,
    });
    if dump {
        let u: UnitaryMatrix = enc.clifford().to_dense();
        head["dump"] = json!({"message": message, "codeword": codeword, "encoder": u});
    }
    let mut summary = describe(&report);
    summary += &format!("  round trips: {passed}/{} pass ({errors})\n", cases.len());
    for c in cases.iter().filter(|c| !c.pass) {
        summary += &format!("    {} -> fidelity {:.6}\n", c.error, c.fidelity);
    }
    Ok(Output {
        summary,
        json: merge(head, &report),
        exit_code: if passed == cases.len() { 0 } else { EXIT_FAILURE },
    })
}

/// Fidelities to 12 places, so reports stay byte-stable across platforms.
fn round(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

fn construct(op: &ConstructOp) -> Result<Output, CliError> {
    let (name, inputs, result, cap, extra): (&str, Vec<InputInfo>, EaqecCode, usize, Value) = match op {
        ConstructOp::Extend {
            path,
            input,
            distance_cap,
        } => {
            let l = load(path, input)?;
            (
                "extend",
                vec![l.info],
                extend(&l.code.code)?,
                *distance_cap,
                Value::Null,
            )
        }
        ConstructOp::Puncture {
            path,
            position,
            input,
            distance_cap,
        } => {
            let l = load(path, input)?;
            let p = puncture(&l.code.code, *position)?;
            ("puncture", vec![l.info], p, *distance_cap, json!(position))
        }
        ConstructOp::Combine {
            path,
            seed,
            input,
            distance_cap,
        } => {
            let a = load(path, input)?;
            let b = load(seed, &seed_args(seed, input))?;
            let comb = catalytic_combine(&a.code.code, &b.code.code)?;
            ("combine", vec![a.info, b.info], comb, *distance_cap, Value::Null)
        }
    };
    let report = CodeReport::new(&result, cap);
    let mut head = json!({"command": "construct", "operation": name, "inputs": inputs});
    if !extra.is_null() {
        head["position"] = extra;
    }
    Ok(Output {
        summary: format!("{name}: {}", describe(&report)),
        json: merge(head, &report),
        exit_code: 0,
    })
}

/// The seed of `combine` follows the format flags only when its extension
/// is ambiguous.
fn seed_args(seed: &Path, input: &InputArgs) -> InputArgs {
    match seed.extension().and_then(|e| e.to_str()) {
        Some("g4") => InputArgs {
            gf4: true,
            symplectic: false,
        },
        Some("sym") => InputArgs {
            gf4: false,
            symplectic: true,
        },
        _ => *input,
    }
}
