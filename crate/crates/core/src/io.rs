//! JSON documents for algebras and frames.
//!
//! Canonical output puts one table row or one triple per line, so fixtures
//! diff cleanly. Parse errors carry the line and column reported by the JSON
//! reader.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::boolean::Elem;
use crate::conditional::CondAlg;
use crate::error::{Error, Result};
use crate::frame::TFrame;

pub const ALGEBRA_TYPE: &str = "conditional-algebra";
pub const FRAME_TYPE: &str = "t-frame";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    #[serde(rename = "type")]
    kind: String,
    atoms: usize,
    cond: Vec<Vec<Elem>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FrameDoc {
    #[serde(rename = "type")]
    kind: String,
    points: usize,
    triples: Vec<(usize, u64, usize)>,
}

#[derive(Deserialize)]
struct Probe {
    #[serde(rename = "type")]
    kind: String,
}

/// Either kind of document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Algebra(CondAlg),
    Frame(TFrame),
}

fn json<'a, T: Deserialize<'a>>(doc: &'a str) -> Result<T> {
    serde_json::from_str(doc).map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })
}

fn expect_kind(found: &str, want: &str) -> Result<()> {
    if found == want {
        Ok(())
    } else {
        Err(Error::input(format!("expected a document of type \"{want}\", found \"{found}\"")))
    }
}

pub fn parse_algebra(doc: &str) -> Result<CondAlg> {
    let d: AlgebraDoc = json(doc)?;
    expect_kind(&d.kind, ALGEBRA_TYPE)?;
    CondAlg::from_rows(d.atoms, &d.cond)
}

/// Rejects out-of-range indices and repeated triples.
pub fn parse_frame(doc: &str) -> Result<TFrame> {
    let d: FrameDoc = json(doc)?;
    expect_kind(&d.kind, FRAME_TYPE)?;
    let mut seen = BTreeSet::new();
    for t in &d.triples {
        if !seen.insert(*t) {
            return Err(Error::input(format!("duplicate triple [{}, {}, {}]", t.0, t.1, t.2)));
        }
    }
    TFrame::from_triples(d.points, d.triples)
}

/// Dispatches on the `type` field.
pub fn parse_document(doc: &str) -> Result<Document> {
    let p: Probe = json(doc)?;
    match p.kind.as_str() {
        ALGEBRA_TYPE => parse_algebra(doc).map(Document::Algebra),
        FRAME_TYPE => parse_frame(doc).map(Document::Frame),
        other => Err(Error::input(format!("unknown document type \"{other}\""))),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn serialize_algebra(alg: &CondAlg) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{\n  \"type\": \"{ALGEBRA_TYPE}\",\n  \"atoms\": {},\n  \"cond\": [", alg.atoms());
    let rows: Vec<String> = alg.rows().map(|r| format!("    [{}]", join(r.iter()))).collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}

/// Triples are emitted in `(x, Z, y)` order.
pub fn serialize_frame(f: &TFrame) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\n  \"type\": \"{FRAME_TYPE}\",\n  \"points\": {},\n  \"triples\": [", f.points());
    let triples: Vec<String> = f.triples().map(|(x, z, y)| format!("    [{x}, {z}, {y}]")).collect();
    if triples.is_empty() {
        out.push_str("]\n}\n");
    } else {
        let _ = write!(out, "\n{}\n  ]\n}}\n", triples.join(",\n"));
    }
    out
}

pub fn serialize_document(doc: &Document) -> String {
    match doc {
        Document::Algebra(a) => serialize_algebra(a),
        Document::Frame(f) => serialize_frame(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PROJ2: &str = r#"{"type": "conditional-algebra", "atoms": 2,
        "cond": [[0,1,2,3],[0,1,2,3],[0,1,2,3],[0,1,2,3]]}"#;

    #[test]
    fn parses_proj2() {
        assert_eq!(parse_algebra(PROJ2).unwrap(), CondAlg::projection(2).unwrap());
    }

    #[test]
    fn dimension_errors_are_input_errors() {
        let doc = r#"{"type": "conditional-algebra", "atoms": 2, "cond": [[0,1,2,3],[0,1,2,3],[0,1,2,3]]}"#;
        assert!(matches!(parse_algebra(doc), Err(Error::Input(_))));
        let doc = r#"{"type": "conditional-algebra", "atoms": 1, "cond": [[0,2],[0,1]]}"#;
        assert!(matches!(parse_algebra(doc), Err(Error::Input(_))));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let doc = "{\n  \"type\": \"t-frame\",\n  \"points\": 2,\n  \"triples\": [[0, 1 1]]\n}";
        match parse_frame(doc) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 4);
                assert!(column > 0);
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicates_and_wrong_types_are_rejected() {
        let doc = r#"{"type": "t-frame", "points": 2, "triples": [[0,1,1],[0,1,1]]}"#;
        assert!(matches!(parse_frame(doc), Err(Error::Input(_))));
        assert!(matches!(parse_frame(PROJ2), Err(Error::Parse { .. }) | Err(Error::Input(_))));
        let doc = r#"{"type": "t-frame", "points": 2, "triples": [[0,4,1]]}"#;
        assert!(matches!(parse_frame(doc), Err(Error::Input(_))));
        assert!(matches!(parse_document(r#"{"type": "lattice"}"#), Err(Error::Input(_))));
    }

    #[test]
    fn canonical_roundtrips() {
        let a = CondAlg::global_strict(2).unwrap();
        let text = serialize_algebra(&a);
        assert_eq!(parse_algebra(&text).unwrap(), a);
        assert_eq!(serialize_algebra(&parse_algebra(&text).unwrap()), text);
        assert!(text.contains("\n    [3, 3, 3, 3],\n"));

        let f = TFrame::from_triples(2, [(1, 3, 0), (0, 2, 1)]).unwrap();
        let text = serialize_frame(&f);
        assert_eq!(text, "{\n  \"type\": \"t-frame\",\n  \"points\": 2,\n  \"triples\": [\n    [0, 2, 1],\n    [1, 3, 0]\n  ]\n}\n");
        assert_eq!(parse_frame(&text).unwrap(), f);
        let empty = TFrame::empty(1).unwrap();
        assert_eq!(parse_frame(&serialize_frame(&empty)).unwrap(), empty);
        assert_eq!(parse_document(&text).unwrap(), Document::Frame(f));
    }
}
