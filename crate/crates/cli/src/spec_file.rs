//! Group specification files.
//!
//! A spec is a JSON object. Split extensions give the action matrix and,
//! optionally, labeled generators as words in the standard letters
//! `t, e1, …, er` or as explicit `{"vector": [...], "exponent": k}` pairs:
//!
//! ```json
//! {"kind": "split_extension", "matrix": [[2, 1], [1, 1]]}
//! {"kind": "split_extension", "matrix": [[2, 1], [1, 1]],
//!  "generators": {"t": "t", "a": {"vector": [1, 0], "exponent": 0}}}
//! ```
//!
//! Matrix groups list labeled square matrices:
//!
//! ```json
//! {"kind": "matrix_group", "degree": 2, "generators": {"g": [[1, 1], [0, 1]]}}
//! ```
//!
//! Integers may be JSON numbers or decimal strings.

use std::fmt;
use std::marker::PhantomData;

use growthforge::exact::Matrix;
use growthforge::groups::{Generator, GroupElement, GroupKind, GroupSpec, Word};
use growthforge::{BigInt, IntGroupSpec, IntMatrix, Scalar};
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, Deserializer, MapAccess, SeqAccess, Visitor};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::CliError;

/// Largest `|k|` accepted in an explicit `{vector, exponent}` generator.
pub const MAX_EXPONENT: u64 = 4096;

/// Integer entry: a JSON integer or a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Int(BigInt);

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = Int;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
                Ok(Int(BigInt::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
                Ok(Int(BigInt::from(v)))
            }
            fn visit_f64<E: de::Error>(self, _: f64) -> Result<Int, E> {
                Err(E::custom("expected an integer; write large values as decimal strings"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
                BigInt::parse_decimal(v.trim())
                    .map(Int)
                    .ok_or_else(|| E::custom(format!("`{v}` is not a decimal integer")))
            }
        }
        d.deserialize_any(IntVisitor)
    }
}

/// JSON object kept as an ordered list so duplicate keys can be reported.
#[derive(Debug)]
struct Labeled<V>(Vec<(String, V)>);

impl<'de, V: Deserialize<'de>> Deserialize<'de> for Labeled<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct LabeledVisitor<V>(PhantomData<V>);
        impl<'de, V: Deserialize<'de>> Visitor<'de> for LabeledVisitor<V> {
            type Value = Labeled<V>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object of labeled generators")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Labeled<V>, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, V>()? {
                    out.push((k, v));
                }
                Ok(Labeled(out))
            }
        }
        d.deserialize_map(LabeledVisitor(PhantomData))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitPair {
    vector: Vec<Int>,
    exponent: i64,
}

/// A generator entry: a word, an explicit split pair, or a matrix.
#[derive(Debug)]
enum Entry {
    Word(String),
    Pair(SplitPair),
    Matrix(Vec<Vec<Int>>),
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct EntryVisitor;
        impl<'de> Visitor<'de> for EntryVisitor {
            type Value = Entry;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a word, a {vector, exponent} pair or a matrix")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Entry, E> {
                Ok(Entry::Word(v.to_string()))
            }
            fn visit_seq<A: SeqAccess<'de>>(self, seq: A) -> Result<Entry, A::Error> {
                Deserialize::deserialize(de::value::SeqAccessDeserializer::new(seq)).map(Entry::Matrix)
            }
            fn visit_map<A: MapAccess<'de>>(self, map: A) -> Result<Entry, A::Error> {
                Deserialize::deserialize(de::value::MapAccessDeserializer::new(map)).map(Entry::Pair)
            }
        }
        d.deserialize_any(EntryVisitor)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    kind: String,
    #[serde(default)]
    matrix: Option<Vec<Vec<Int>>>,
    #[serde(default)]
    degree: Option<usize>,
    #[serde(default)]
    generators: Option<Labeled<Entry>>,
}

fn parse_error(e: serde_json::Error) -> CliError {
    CliError::Parse { line: e.line(), column: e.column(), message: strip_position(&e.to_string()) }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn to_matrix(rows: Vec<Vec<Int>>) -> Result<IntMatrix, CliError> {
    let rows: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect();
    Matrix::from_rows(rows).map_err(|e| CliError::Validation(e.to_string()))
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Parses and validates a spec document.
pub fn parse_group_spec(text: &str) -> Result<IntGroupSpec, CliError> {
    let f: SpecFile = serde_json::from_str(text).map_err(parse_error)?;
    match f.kind.as_str() {
        "split_extension" => {
            if f.degree.is_some() {
                return Err(invalid("`degree` is only used by matrix_group specs"));
            }
            let matrix = f.matrix.ok_or_else(|| invalid("split_extension needs `matrix`"))?;
            build_split(matrix, f.generators)
        }
        "matrix_group" => {
            if f.matrix.is_some() {
                return Err(invalid("`matrix` is only used by split_extension specs"));
            }
            let degree = f.degree.ok_or_else(|| invalid("matrix_group needs `degree`"))?;
            let gens = f.generators.ok_or_else(|| invalid("matrix_group needs `generators`"))?;
            build_matrix(degree, gens)
        }
        other => Err(invalid(format!("unknown kind `{other}` (expected split_extension or matrix_group)"))),
    }
}

fn build_split(matrix: Vec<Vec<Int>>, gens: Option<Labeled<Entry>>) -> Result<IntGroupSpec, CliError> {
    let action = to_matrix(matrix)?;
    let standard = GroupSpec::split_extension(action.clone()).map_err(CliError::from_group)?;
    let Some(Labeled(gens)) = gens else {
        return Ok(standard);
    };
    let kind = GroupKind::split_extension(action).map_err(CliError::from_group)?;
    let mut out = Vec::with_capacity(gens.len());
    for (label, g) in gens {
        let element = match g {
            Entry::Word(w) => {
                let word = Word::parse(&w).map_err(|e| invalid(format!("generator `{label}`: {e}")))?;
                standard.evaluate_word(&word).map_err(|e| invalid(format!("generator `{label}`: {e}")))?
            }
            Entry::Pair(p) if p.exponent.unsigned_abs() > MAX_EXPONENT => {
                return Err(invalid(format!("generator `{label}`: exponent must lie in [-{MAX_EXPONENT}, {MAX_EXPONENT}]")))
            }
            Entry::Pair(p) => GroupElement::split(p.vector.into_iter().map(|x| x.0).collect(), p.exponent),
            Entry::Matrix(_) => {
                return Err(invalid(format!("generator `{label}`: split extensions take words or {{vector, exponent}}")))
            }
        };
        out.push(Generator { label, element });
    }
    GroupSpec::new(kind, out).map_err(CliError::from_group)
}

fn build_matrix(degree: usize, gens: Labeled<Entry>) -> Result<IntGroupSpec, CliError> {
    let gens = gens
        .0
        .into_iter()
        .map(|(label, g)| match g {
            Entry::Matrix(rows) => Ok((label, to_matrix(rows)?)),
            _ => Err(invalid(format!("generator `{label}`: matrix groups take integer matrices"))),
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    GroupSpec::matrix_group(degree, gens).map_err(CliError::from_group)
}

/// Integer as a JSON number when exactly representable in a double, else a string.
pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if x.abs() < BigInt::from(1u64 << 53) => json!(v),
        _ => json!(x.to_string()),
    }
}

/// Integer always as a decimal string.
pub fn int_string(x: &BigInt) -> Value {
    json!(x.to_string())
}

fn matrix_json(m: &IntMatrix, int: fn(&BigInt) -> Value) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(int).collect())).collect())
}

/// Canonical JSON form of a spec: explicit elements for every generator.
pub fn spec_to_json(spec: &IntGroupSpec) -> Value {
    let mut gens = serde_json::Map::new();
    match spec.kind() {
        GroupKind::SplitExtension { action, .. } => {
            for g in spec.generators() {
                let (Some(v), Some(k)) = (g.element.vector(), g.element.exponent()) else { unreachable!() };
                gens.insert(
                    g.label.clone(),
                    json!({"vector": v.iter().map(int_json).collect::<Vec<_>>(), "exponent": k}),
                );
            }
            json!({"kind": "split_extension", "matrix": matrix_json(action, int_json), "generators": gens})
        }
        GroupKind::MatrixGroup { degree } => {
            for g in spec.generators() {
                let GroupElement::Matrix(m) = &g.element else { unreachable!() };
                gens.insert(g.label.clone(), matrix_json(m, int_json));
            }
            json!({"kind": "matrix_group", "degree": degree, "generators": gens})
        }
    }
}

pub fn serialize_group_spec(spec: &IntGroupSpec) -> String {
    serde_json::to_string_pretty(&spec_to_json(spec)).expect("value serializes") + "\n"
}
