//! Code-spec files and presets.
//!
//! A spec file is TOML (or an equivalent JSON document):
//!
//! ```toml
//! q = 1
//! A = [["1", "x", "y", "z"]]
//! B = [["1", "xy", "xz", "yz"]]
//! matrices = [[[1]]]
//!
//! [group]
//! kind = "torus"
//! dims = [2, 2, 2]
//! ```
//!
//! Elements are names resolved against the group (`"xy"`, `"-x"`, `"#5"`) or
//! raw indices. A set may instead be a table of multiplicities such as
//! `{ "1" = 1, "x" = 2 }` for qudit codes. Matrix entries are integers, or
//! element lists for F₂[G]-valued matrices over abelian groups. `d` defaults
//! to 2; `d != 2` or `qudit = true` selects the qudit construction.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraMatrix, BinaryMatrix, CodeMatrix, WeightedAlgebraElement, ZdMatrix};
use crate::analysis::AnySpec;
use crate::group::FiniteGroup;
use crate::pauli::{CodeSpec, QuditCodeSpec, SpecError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Name(String),
}

impl fmt::Display for ElementRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementRef::Index(i) => write!(f, "{i}"),
            ElementRef::Name(s) => write!(f, "{s:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetEntry {
    Elements(Vec<ElementRef>),
    Counts(BTreeMap<String, u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntry {
    Scalar(u32),
    Set(Vec<ElementRef>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupBlock {
    Torus { dims: [usize; 3] },
    Cyclic { n: usize },
    CayleyFile { path: String },
    Symmetric { n: usize },
    Dihedral { n: usize },
}

fn default_d() -> u32 {
    2
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub q: usize,
    #[serde(default = "default_d")]
    pub d: u32,
    #[serde(default, skip_serializing_if = "is_false")]
    pub qudit: bool,
    #[serde(rename = "A")]
    pub a: Vec<SetEntry>,
    #[serde(rename = "B")]
    pub b: Vec<SetEntry>,
    pub matrices: Vec<Vec<Vec<MatrixEntry>>>,
    pub group: GroupBlock,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecFileError {
    #[error("{origin}: {message}")]
    Io { origin: String, message: String },
    #[error("{origin}: {message}")]
    Syntax { origin: String, message: String },
    #[error("{origin}:{}: {field}: {message}", line.map(|l| l.to_string()).unwrap_or_else(|| "?".into()))]
    Invalid { origin: String, line: Option<usize>, field: String, message: String },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Toml,
    Json,
}

/// Where a spec came from, for error positions and relative paths.
#[derive(Clone, Debug, Default)]
pub struct Source {
    pub origin: String,
    pub text: Option<String>,
    pub base_dir: PathBuf,
}

impl Source {
    pub fn inline(origin: &str) -> Self {
        Source { origin: origin.to_string(), text: None, base_dir: PathBuf::from(".") }
    }

    /// First line defining top-level key `key`, 1-based.
    fn line_of(&self, key: &str) -> Option<usize> {
        let text = self.text.as_ref()?;
        let quoted = format!("\"{key}\"");
        text.lines()
            .position(|line| {
                let t = line.trim_start();
                let toml_key = t.strip_prefix(key).is_some_and(|rest| rest.trim_start().starts_with('='));
                let toml_table = t.starts_with(&format!("[{key}]"));
                let json_key = t.find(&quoted).is_some_and(|p| t[p + quoted.len()..].trim_start().starts_with(':'));
                toml_key || toml_table || json_key
            })
            .map(|i| i + 1)
    }

    fn invalid(&self, key: &str, field: impl Into<String>, message: impl fmt::Display) -> SpecFileError {
        SpecFileError::Invalid { origin: self.origin.clone(), line: self.line_of(key), field: field.into(), message: message.to_string() }
    }
}

impl SpecFile {
    pub fn parse(text: &str, format: Format, origin: &str) -> Result<Self, SpecFileError> {
        let syntax = |message: String| SpecFileError::Syntax { origin: origin.to_string(), message };
        match format {
            Format::Toml => toml::from_str(text).map_err(|e| syntax(e.to_string().trim_end().to_string())),
            Format::Json => serde_json::from_str(text).map_err(|e| syntax(e.to_string())),
        }
    }

    /// Reads and parses a file; `.json` files, or text starting with `{`, are JSON.
    pub fn load(path: &Path) -> Result<(Self, Source), SpecFileError> {
        let origin = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| SpecFileError::Io { origin: origin.clone(), message: e.to_string() })?;
        let json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
        let file = Self::parse(&text, if json { Format::Json } else { Format::Toml }, &origin)?;
        let base_dir = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
        Ok((file, Source { origin, text: Some(text), base_dir }))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec files serialize")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files serialize")
    }

    pub fn is_qudit(&self) -> bool {
        self.qudit || self.d != 2
    }

    /// Replaces the group size: `L³` for a torus, `n` for a cyclic group.
    pub fn with_size(mut self, size: usize) -> Result<Self, SpecFileError> {
        match &mut self.group {
            GroupBlock::Torus { dims } => *dims = [size; 3],
            GroupBlock::Cyclic { n } => *n = size,
            _ => return Err(SpecFileError::Usage("--size needs a torus or cyclic group".into())),
        }
        Ok(self)
    }

    fn build_group(&self, src: &Source) -> Result<Arc<FiniteGroup>, SpecFileError> {
        let g = match &self.group {
            GroupBlock::Torus { dims } => FiniteGroup::torus(*dims),
            GroupBlock::Cyclic { n } => FiniteGroup::cyclic(*n),
            GroupBlock::Symmetric { n } => FiniteGroup::symmetric(*n),
            GroupBlock::Dihedral { n } => FiniteGroup::dihedral(*n),
            GroupBlock::CayleyFile { path } => FiniteGroup::load_cayley_file(&src.base_dir.join(path)),
        };
        g.map(Arc::new).map_err(|e| src.invalid("group", "group", e))
    }

    /// Validates everything and builds the code.
    pub fn build(&self, src: &Source) -> Result<AnySpec, SpecFileError> {
        let group = self.build_group(src)?;
        let resolve = |key: &str, field: &str, r: &ElementRef| -> Result<usize, SpecFileError> {
            match r {
                ElementRef::Index(i) if *i < group.order() => Ok(*i),
                ElementRef::Index(i) => {
                    Err(src.invalid(key, field, format!("index {i} out of range for a group of order {}", group.order())))
                }
                ElementRef::Name(s) => group.resolve(s).map_err(|e| src.invalid(key, field, e)),
            }
        };
        let d = self.d;
        if d < 2 {
            return Err(src.invalid("d", "d", "d must be at least 2"));
        }
        let q = self.q;
        for (key, sets) in [("A", &self.a), ("B", &self.b)] {
            if sets.len() != q {
                return Err(src.invalid(key, key, format!("{} sets given, expected q = {q}", sets.len())));
            }
        }
        if self.matrices.is_empty() {
            return Err(src.invalid("matrices", "matrices", "at least one matrix is required"));
        }
        for (i, m) in self.matrices.iter().enumerate() {
            if m.len() != q || m.iter().any(|row| row.len() != q) {
                return Err(src.invalid("matrices", format!("matrices[{i}]"), format!("expected a {q}x{q} matrix")));
            }
        }
        // Coefficient vectors for all sets, reduced mod `modulus`.
        let coeffs = |key: &str, sets: &[SetEntry], modulus: u32| -> Result<Vec<Vec<u32>>, SpecFileError> {
            sets.iter()
                .enumerate()
                .map(|(k, entry)| {
                    let field = format!("{key}[{k}]");
                    let mut c = vec![0u32; group.order()];
                    match entry {
                        SetEntry::Elements(list) => {
                            for r in list {
                                let i = resolve(key, &field, r)?;
                                if c[i] != 0 {
                                    return Err(src.invalid(key, &field, format!("element {r} listed twice")));
                                }
                                c[i] = 1;
                            }
                        }
                        SetEntry::Counts(map) => {
                            for (name, &m) in map {
                                let i = resolve(key, &field, &ElementRef::Name(name.clone()))?;
                                c[i] = m % modulus;
                            }
                        }
                    }
                    Ok(c)
                })
                .collect()
        };
        let spec_err = |e: SpecError| {
            let key = match e {
                SpecError::NonCommuting(..) | SpecError::MatrixDim { .. } | SpecError::NoMatrices => "matrices",
                _ => "group",
            };
            src.invalid(key, key, e)
        };

        if self.is_qudit() {
            let wa = coeffs("A", &self.a, d)?;
            let wb = coeffs("B", &self.b, d)?;
            let weighted = |key: &str, cs: Vec<Vec<u32>>| -> Result<Vec<WeightedAlgebraElement>, SpecFileError> {
                cs.into_iter()
                    .map(|c| WeightedAlgebraElement::from_coeffs(group.clone(), d, c).map_err(|e| src.invalid(key, key, e)))
                    .collect()
            };
            let mut mats = Vec::new();
            for (i, m) in self.matrices.iter().enumerate() {
                let field = format!("matrices[{i}]");
                let rows = m
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| match e {
                                MatrixEntry::Scalar(v) if *v < d => Ok(*v),
                                MatrixEntry::Scalar(v) => Err(src.invalid("matrices", &field, format!("entry {v} is not in 0..{d}"))),
                                MatrixEntry::Set(_) => Err(src.invalid("matrices", &field, "qudit matrices take integer entries")),
                            })
                            .collect::<Result<Vec<u32>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                mats.push(ZdMatrix::from_rows(&rows, d).map_err(|e| src.invalid("matrices", &field, e))?);
            }
            let spec = QuditCodeSpec::new(group.clone(), d, weighted("A", wa)?, weighted("B", wb)?, mats).map_err(spec_err)?;
            return Ok(AnySpec::Qudit(spec));
        }

        let sets = |key: &str, cs: Vec<Vec<u32>>| -> Result<Vec<AlgebraElement>, SpecFileError> {
            cs.into_iter()
                .map(|c| {
                    let idx = c.iter().enumerate().filter(|(_, &v)| v == 1).map(|(i, _)| i);
                    AlgebraElement::from_indices(group.clone(), idx).map_err(|e| src.invalid(key, key, e))
                })
                .collect()
        };
        let a = sets("A", coeffs("A", &self.a, 2)?)?;
        let b = sets("B", coeffs("B", &self.b, 2)?)?;
        let mut mats: Vec<CodeMatrix> = Vec::new();
        for (i, m) in self.matrices.iter().enumerate() {
            let field = format!("matrices[{i}]");
            let algebra_valued = m.iter().flatten().any(|e| matches!(e, MatrixEntry::Set(_)));
            if algebra_valued {
                let rows = m
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| match e {
                                MatrixEntry::Scalar(0) => Ok(AlgebraElement::empty(group.clone())),
                                MatrixEntry::Scalar(1) => Ok(AlgebraElement::unit(group.clone())),
                                MatrixEntry::Scalar(v) => Err(src.invalid("matrices", &field, format!("entry {v} is not 0 or 1"))),
                                MatrixEntry::Set(list) => {
                                    let idx = list.iter().map(|r| resolve("matrices", &field, r)).collect::<Result<Vec<_>, _>>()?;
                                    AlgebraElement::from_indices(group.clone(), idx).map_err(|e| src.invalid("matrices", &field, e))
                                }
                            })
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                mats.push(AlgebraMatrix::new(group.clone(), rows).map_err(|e| src.invalid("matrices", &field, e))?.into());
            } else {
                let rows: Vec<Vec<u32>> = m
                    .iter()
                    .map(|row| row.iter().map(|e| if let MatrixEntry::Scalar(v) = e { *v } else { unreachable!() }).collect())
                    .collect();
                mats.push(BinaryMatrix::from_rows(&rows).map_err(|e| src.invalid("matrices", &field, e))?.into());
            }
        }
        Ok(AnySpec::Qubit(CodeSpec::new(group.clone(), a, b, mats).map_err(spec_err)?))
    }

    /// Builds without the matrix commutation check, so broken inputs can
    /// reach the stabilizer-level checks. Qubit specs only.
    pub fn build_unchecked(&self, src: &Source) -> Result<AnySpec, SpecFileError> {
        if self.is_qudit() {
            return self.build(src);
        }
        // Validate each matrix on its own by building with it alone.
        let mut specs = Vec::new();
        for i in 0..self.matrices.len() {
            let single = SpecFile { matrices: vec![self.matrices[i].clone()], ..self.clone() };
            match single.build(src)? {
                AnySpec::Qubit(s) => specs.push(s),
                AnySpec::Qudit(_) => unreachable!(),
            }
        }
        let first = &specs[0];
        let mats = specs.iter().map(|s| s.matrices()[0].clone()).collect();
        CodeSpec::new_unchecked(first.group().clone(), first.a().to_vec(), first.b().to_vec(), mats)
            .map(AnySpec::Qubit)
            .map_err(|e| src.invalid("matrices", "matrices", e))
    }

    /// Serializes a qubit spec with binary matrices.
    pub fn from_code_spec(spec: &CodeSpec, group: GroupBlock) -> Result<Self, SpecFileError> {
        let g = spec.group();
        let name = |i: usize| match g.names() {
            Some(_) => ElementRef::Name(g.name(i)),
            None => ElementRef::Index(i),
        };
        let set = |s: &AlgebraElement| SetEntry::Elements(s.support().map(name).collect());
        let matrices = spec
            .matrices()
            .iter()
            .map(|m| match m {
                CodeMatrix::Binary(b) => Ok(b.rows().into_iter().map(|r| r.into_iter().map(MatrixEntry::Scalar).collect()).collect()),
                CodeMatrix::Algebra(am) => Ok((0..am.dim())
                    .map(|r| (0..am.dim()).map(|c| MatrixEntry::Set(am.get(r, c).support().map(name).collect())).collect())
                    .collect()),
            })
            .collect::<Result<Vec<_>, SpecFileError>>()?;
        Ok(SpecFile {
            q: spec.q(),
            d: 2,
            qudit: false,
            a: spec.a().iter().map(set).collect(),
            b: spec.b().iter().map(set).collect(),
            matrices,
            group,
        })
    }
}

fn names(list: &[&str]) -> SetEntry {
    SetEntry::Elements(list.iter().map(|s| ElementRef::Name(s.to_string())).collect())
}

fn scalar_rows(rows: &[&[u32]]) -> Vec<Vec<MatrixEntry>> {
    rows.iter().map(|r| r.iter().map(|&v| MatrixEntry::Scalar(v)).collect()).collect()
}

/// The spec file of a preset. `size` is `L` for the torus families and `n`
/// for `trivial` (on `Z_n`); `params` is `(n, a, b)` for `lr-gcd`.
pub fn preset(name: &str, size: Option<usize>, params: Option<(usize, usize, usize)>) -> Result<SpecFile, SpecFileError> {
    let l = size.unwrap_or(2);
    match name {
        "haah-a" => Ok(SpecFile {
            q: 1,
            d: 2,
            qudit: false,
            a: vec![names(&["1", "x", "y", "z"])],
            b: vec![names(&["1", "xy", "xz", "yz"])],
            matrices: vec![scalar_rows(&[&[1]])],
            group: GroupBlock::Torus { dims: [l; 3] },
        }),
        "haah-b" => Ok(SpecFile {
            q: 2,
            d: 2,
            qudit: false,
            a: vec![names(&["1", "-y"]), names(&["1", "-x"])],
            b: vec![names(&["1", "-x"]), names(&["1", "-z"])],
            matrices: vec![scalar_rows(&[&[1, 0], &[0, 1]]), scalar_rows(&[&[1, 1], &[1, 0]])],
            group: GroupBlock::Torus { dims: [l; 3] },
        }),
        "lr-gcd" => {
            let (n, a, b) = params.unwrap_or((6, 2, 4));
            if n == 0 {
                return Err(SpecFileError::Usage("lr-gcd needs n >= 1".into()));
            }
            let set = |s: usize| {
                let s = s % n;
                SetEntry::Elements(if s == 0 { vec![ElementRef::Index(0)] } else { vec![ElementRef::Index(0), ElementRef::Index(s)] })
            };
            Ok(SpecFile {
                q: 1,
                d: 2,
                qudit: false,
                a: vec![set(a)],
                b: vec![set(b)],
                matrices: vec![scalar_rows(&[&[1]])],
                group: GroupBlock::Cyclic { n },
            })
        }
        "trivial" => Ok(SpecFile {
            q: 1,
            d: 2,
            qudit: false,
            a: vec![SetEntry::Elements(vec![ElementRef::Index(0)])],
            b: vec![SetEntry::Elements(vec![ElementRef::Index(0)])],
            matrices: vec![scalar_rows(&[&[1]])],
            group: GroupBlock::Cyclic { n: size.unwrap_or(1) },
        }),
        other => Err(SpecFileError::UnknownPreset(other.to_string())),
    }
}

/// Parses `n:a:b`.
pub fn parse_params(text: &str) -> Result<(usize, usize, usize), SpecFileError> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || SpecFileError::Usage(format!("expected n:a:b, got {text:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let p: Vec<usize> = parts.iter().map(|s| s.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    Ok((p[0], p[1], p[2]))
}

/// Loads a spec file from disk and builds it.
pub fn parse_spec(path: &Path) -> Result<AnySpec, SpecFileError> {
    let (file, src) = SpecFile::load(path)?;
    file.build(&src)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn qubit(s: AnySpec) -> CodeSpec {
        match s {
            AnySpec::Qubit(c) => c,
            AnySpec::Qudit(_) => panic!("expected a qubit spec"),
        }
    }

    #[test]
    fn presets_match_builders() {
        let src = Source::inline("preset");
        for l in [2, 3] {
            assert_eq!(qubit(preset("haah-a", Some(l), None).unwrap().build(&src).unwrap()), presets::haah_a(l).unwrap());
            assert_eq!(qubit(preset("haah-b", Some(l), None).unwrap().build(&src).unwrap()), presets::haah_b(l).unwrap());
        }
        for (n, a, b) in [(6, 2, 4), (7, 2, 4), (12, 3, 4), (4, 4, 1)] {
            assert_eq!(qubit(preset("lr-gcd", None, Some((n, a, b))).unwrap().build(&src).unwrap()), presets::lr_gcd(n, a, b).unwrap());
        }
        let t = qubit(preset("trivial", Some(5), None).unwrap().build(&src).unwrap());
        assert_eq!(t, presets::trivial(Arc::new(FiniteGroup::cyclic(5).unwrap())).unwrap());
        assert!(matches!(preset("nope", None, None), Err(SpecFileError::UnknownPreset(_))));
    }

    #[test]
    fn round_trip_toml_and_json() {
        let src = Source::inline("rt");
        for name in ["haah-a", "haah-b", "lr-gcd", "trivial"] {
            let file = preset(name, Some(3), None).unwrap();
            let spec = file.build(&src).unwrap();
            let toml_text = file.to_toml();
            let back = SpecFile::parse(&toml_text, Format::Toml, "rt").unwrap();
            assert_eq!(back, file, "{toml_text}");
            assert_eq!(back.build(&src).unwrap(), spec);
            let json_back = SpecFile::parse(&file.to_json(), Format::Json, "rt").unwrap();
            assert_eq!(json_back, file);
            let again = SpecFile::from_code_spec(&qubit(spec.clone()), file.group.clone()).unwrap();
            assert_eq!(again.build(&src).unwrap(), spec);
        }
    }

    #[test]
    fn positioned_errors() {
        let text = "q = 2\nA = [[\"1\"], [\"1\"]]\nB = [[\"1\"], [\"1\"]]\nmatrices = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]\n\n[group]\nkind = \"cyclic\"\nn = 3\n";
        let src = Source { origin: "bad.toml".into(), text: Some(text.into()), base_dir: ".".into() };
        let err = SpecFile::parse(text, Format::Toml, "bad.toml").unwrap().build(&src).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("matrices 0 and 1 do not commute"), "{msg}");
        assert!(msg.starts_with("bad.toml:4:"), "{msg}");
        let unchecked = SpecFile::parse(text, Format::Toml, "bad.toml").unwrap().build_unchecked(&src).unwrap();
        assert_eq!(qubit(unchecked).matrices().len(), 2);

        let text = "q = 1\nA = [[\"1\", \"w\"]]\nB = [[\"1\"]]\nmatrices = [[[1]]]\n[group]\nkind = \"torus\"\ndims = [2, 2, 2]\n";
        let src = Source { origin: "f".into(), text: Some(text.into()), base_dir: ".".into() };
        let err = SpecFile::parse(text, Format::Toml, "f").unwrap().build(&src).unwrap_err();
        assert!(err.to_string().starts_with("f:2: A[0]:"), "{err}");

        let text = "q = 2\nA = [[\"1\"]]\nB = [[\"1\"], [\"1\"]]\nmatrices = [[[1]]]\n[group]\nkind = \"cyclic\"\nn = 2\n";
        let src = Source { origin: "f".into(), text: Some(text.into()), base_dir: ".".into() };
        let err = SpecFile::parse(text, Format::Toml, "f").unwrap().build(&src).unwrap_err();
        assert!(err.to_string().contains("expected q = 2"), "{err}");

        assert!(matches!(SpecFile::parse("q = ", Format::Toml, "x"), Err(SpecFileError::Syntax { .. })));
    }

    #[test]
    fn qudit_and_algebra_entries() {
        let text = r#"{
  "q": 1,
  "d": 3,
  "A": [{"1": 1, "x": 2}],
  "B": [["1"]],
  "matrices": [[[1]], [[2]]],
  "group": {"kind": "torus", "dims": [3, 1, 1]}
}"#;
        let src = Source { origin: "q.json".into(), text: Some(text.into()), base_dir: ".".into() };
        let spec = SpecFile::parse(text, Format::Json, "q.json").unwrap().build(&src).unwrap();
        match spec {
            AnySpec::Qudit(s) => {
                assert_eq!(s.modulus(), 3);
                assert_eq!(s.a()[0].coeffs(), &[1, 2, 0]);
            }
            _ => panic!(),
        }
        let text = "q = 1\nA = [[0, 1]]\nB = [[0]]\nmatrices = [[[[0, 2]]]]\n[group]\nkind = \"cyclic\"\nn = 4\n";
        let src = Source::inline("alg");
        let spec = qubit(SpecFile::parse(text, Format::Toml, "alg").unwrap().build(&src).unwrap());
        assert!(matches!(spec.matrices()[0], CodeMatrix::Algebra(_)));
    }

    #[test]
    fn size_override() {
        let f = preset("haah-a", None, None).unwrap().with_size(4).unwrap();
        assert_eq!(f.group, GroupBlock::Torus { dims: [4; 3] });
        let s = SpecFile { group: GroupBlock::Symmetric { n: 3 }, ..f };
        assert!(s.with_size(2).is_err());
        assert_eq!(parse_params("12:3:4").unwrap(), (12, 3, 4));
        assert!(parse_params("12:3").is_err());
    }
}
