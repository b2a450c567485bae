//! Code corpora: one `.g4` or `.sym` file per code with a `.meta` sidecar
//! declaring `n`, `k` and `d` in TOML.
//!
//! For a `.g4` file the declared parameters are those of the classical
//! `[n, k, d]` code; for a `.sym` file they are the quantum `[[n, k, d]]`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::eaqec::EaqecCode;
use crate::error::{Error, Result};
use crate::format::{parse_gf4, parse_symplectic, InputFormat};
use crate::gf2::BinMatrix;
use crate::gf4::{lift_parity_check, QuaternaryCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
pub struct Meta {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl Meta {
    pub fn parse(text: &str) -> Result<Meta> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("meta: {}", e.message())))
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub format: InputFormat,
    pub text: String,
    pub meta: Option<Meta>,
}

/// A parsed code, with its classical parent when read from GF(4).
#[derive(Clone, Debug)]
pub struct LoadedCode {
    pub code: EaqecCode,
    /// the check matrix as read, or lifted from GF(4)
    pub input: BinMatrix,
    pub classical: Option<QuaternaryCode>,
}

pub fn load_text(text: &str, format: InputFormat, meta: Option<&Meta>) -> Result<LoadedCode> {
    match format {
        InputFormat::Symplectic => {
            let input = parse_symplectic(text)?;
            Ok(LoadedCode {
                code: EaqecCode::from_check_matrix(&input)?,
                input,
                classical: None,
            })
        }
        InputFormat::Gf4 => {
            let q = QuaternaryCode::new(parse_gf4(text)?, meta.map(|m| m.d));
            let input = lift_parity_check(&q);
            Ok(LoadedCode {
                code: EaqecCode::from_check_matrix(&input)?,
                input,
                classical: Some(q),
            })
        }
    }
}

impl CorpusEntry {
    pub fn load(&self) -> Result<LoadedCode> {
        load_text(&self.text, self.format, self.meta.as_ref())
    }
}

/// Every `.g4`/`.sym` file in `dir`, sorted by file name. A missing sidecar
/// leaves `meta` empty.
pub fn read_dir(dir: &Path) -> std::io::Result<Vec<CorpusEntry>> {
    let mut paths: Vec<_> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("g4" | "sym")))
        .collect();
    paths.sort();
    let mut out = Vec::with_capacity(paths.len());
    for path in paths {
        let text = fs::read_to_string(&path)?;
        let meta_path = path.with_extension("meta");
        let meta = match fs::read_to_string(&meta_path) {
            Ok(t) => Some(Meta::parse(&t).map_err(|e| {
                std::io::Error::new(std::io::ErrorKind::InvalidData, format!("{}: {e}", meta_path.display()))
            })?),
            Err(_) => None,
        };
        out.push(CorpusEntry {
            name: path.file_stem().unwrap_or_default().to_string_lossy().into_owned(),
            format: InputFormat::from_path(&path),
            text,
            meta,
        });
    }
    Ok(out)
}

macro_rules! bundled_entry {
    ($name:literal, $ext:literal, $fmt:expr) => {
        (
            $name,
            $fmt,
            include_str!(concat!("../corpus/", $name, ".", $ext)),
            include_str!(concat!("../corpus/", $name, ".meta")),
        )
    };
}

const BUNDLED: &[(&str, InputFormat, &str, &str)] = &[
    bundled_entry!("bowen_3_1_3", "g4", InputFormat::Gf4),
    bundled_entry!("c4_422", "sym", InputFormat::Symplectic),
    bundled_entry!("five_qubit", "sym", InputFormat::Symplectic),
    bundled_entry!("hamming_7_4_3", "g4", InputFormat::Gf4),
    bundled_entry!("parity_3_2_2", "g4", InputFormat::Gf4),
    bundled_entry!("steane", "sym", InputFormat::Symplectic),
];

/// The corpus compiled into the library.
pub fn bundled() -> Vec<CorpusEntry> {
    BUNDLED
        .iter()
        .map(|&(name, format, text, meta)| CorpusEntry {
            name: name.to_string(),
            format,
            text: text.to_string(),
            meta: Some(Meta::parse(meta).expect("bundled meta is valid")),
        })
        .collect()
}

pub fn bundled_entry(name: &str) -> Option<CorpusEntry> {
    bundled().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_parameters() {
        let expect = [
            ("bowen_3_1_3", (3, 1, 2)),
            ("c4_422", (4, 2, 0)),
            ("five_qubit", (5, 1, 0)),
            ("hamming_7_4_3", (7, 1, 0)),
            ("parity_3_2_2", (3, 2, 1)),
            ("steane", (7, 1, 0)),
        ];
        let entries = bundled();
        assert_eq!(entries.len(), expect.len());
        for (e, (name, nkc)) in entries.iter().zip(expect) {
            assert_eq!(e.name, name);
            let c = e.load().unwrap().code;
            assert_eq!((c.n, c.k, c.c), nkc, "{name}");
        }
    }

    #[test]
    fn directory_matches_bundle() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
        let on_disk = read_dir(&dir).unwrap();
        let names: Vec<_> = on_disk.iter().map(|e| e.name.clone()).collect();
        let bundled: Vec<_> = bundled().into_iter().map(|e| e.name).collect();
        assert_eq!(names, bundled);
        assert!(on_disk.iter().all(|e| e.meta.is_some()));
    }

    #[test]
    fn meta_errors() {
        assert!(Meta::parse("n = 3\nk = 1").is_err());
        assert_eq!(Meta::parse("n = 3\nk = 1\nd = 2\n").unwrap(), Meta { n: 3, k: 1, d: 2 });
    }
}
