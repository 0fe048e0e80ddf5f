//! JSON documents for algebras, representations and omni-representations.
//!
//! Rational entries are strings (`"3"`, `"-1/2"`) and basis indices are
//! 1-based. An algebra is referenced either by catalog name or inline:
//!
//! ```json
//! {"dim": 2, "bracket": [[2, 2, 1, "1"]]}
//! {"algebra": "L2", "dimV": 1, "l": [[["0"]], [["-1"]]], "r": [[["0"]], [["1"]]]}
//! {"algebra": "L2", "dimV": 1, "phi": [[["0"]], [["0"]]], "theta": [["0"], ["1"]]}
//! ```

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::LeibnizAlgebra;
use crate::catalog;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::omni::{graph_check, OmniRep};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::rep::Representation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub bracket: Vec<(usize, usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Catalog(String),
    Inline(AlgebraDocument),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDocument {
    pub algebra: AlgebraRef,
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    pub l: Vec<Vec<Vec<String>>>,
    pub r: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmniRepDocument {
    pub algebra: AlgebraRef,
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    pub phi: Vec<Vec<Vec<String>>>,
    pub theta: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph_phi: Option<Vec<Vec<Vec<String>>>>,
}

/// A parsed omni-representation plus the optional graph map `φ: V → gl(V)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OmniRepInput {
    pub rho: OmniRep,
    pub graph_phi: Option<Vec<Matrix>>,
}

/// Any of the three document kinds, detected from its keys.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Algebra(LeibnizAlgebra),
    Rep(Representation),
    OmniRep(OmniRepInput),
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

fn field<'a>(obj: &'a Value, key: &str, loc: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::parse(loc, format!("missing field {key:?}")))
}

fn as_usize(v: &Value, loc: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::parse(loc, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, loc: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::parse(loc, "expected an array"))
}

fn as_rational(v: &Value, loc: &str) -> Result<Rational> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::parse(loc, "expected a rational string like \"p\" or \"p/q\""))?;
    parse_rational(s).ok_or_else(|| Error::parse(loc, format!("invalid rational {s:?}")))
}

fn as_vector(v: &Value, len: usize, loc: &str) -> Result<Vec<Rational>> {
    let items = as_array(v, loc)?;
    if items.len() != len {
        return Err(Error::parse(loc, format!("expected {len} entries, found {}", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| as_rational(x, &format!("{loc}[{i}]")))
        .collect()
}

fn as_matrix(v: &Value, d: usize, loc: &str) -> Result<Matrix> {
    let rows = as_array(v, loc)?;
    if rows.len() != d {
        return Err(Error::parse(loc, format!("expected {d} rows, found {}", rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| as_vector(r, d, &format!("{loc}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if d == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(rows)
}

fn as_matrices(v: &Value, count: usize, d: usize, loc: &str) -> Result<Vec<Matrix>> {
    let items = as_array(v, loc)?;
    if items.len() != count {
        return Err(Error::parse(
            loc,
            format!("expected {count} matrices, found {}", items.len()),
        ));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, m)| as_matrix(m, d, &format!("{loc}[{i}]")))
        .collect()
}

fn algebra_from_value(v: &Value, loc: &str) -> Result<LeibnizAlgebra> {
    let dim = as_usize(field(v, "dim", loc)?, &format!("{loc}.dim"))?;
    let bracket_loc = format!("{loc}.bracket");
    let entries = as_array(field(v, "bracket", loc)?, &bracket_loc)?;
    let mut seen = BTreeSet::new();
    let mut parsed = Vec::with_capacity(entries.len());
    for (e, entry) in entries.iter().enumerate() {
        let eloc = format!("{bracket_loc}[{e}]");
        let parts = as_array(entry, &eloc)?;
        if parts.len() != 4 {
            return Err(Error::parse(&eloc, "expected [i, j, k, \"value\"]"));
        }
        let mut idx = [0usize; 3];
        for (t, slot) in idx.iter_mut().enumerate() {
            let i = as_usize(&parts[t], &format!("{eloc}[{t}]"))?;
            if i == 0 || i > dim {
                return Err(Error::parse(
                    format!("{eloc}[{t}]"),
                    format!("index {i} out of range 1..={dim}"),
                ));
            }
            *slot = i - 1;
        }
        if !seen.insert(idx) {
            return Err(Error::parse(
                &eloc,
                format!(
                    "duplicate entry ({}, {}, {})",
                    idx[0] + 1,
                    idx[1] + 1,
                    idx[2] + 1
                ),
            ));
        }
        let value = as_rational(&parts[3], &format!("{eloc}[3]"))?;
        parsed.push((idx[0], idx[1], idx[2], value));
    }
    LeibnizAlgebra::from_entries(dim, &parsed)
}

fn algebra_ref_from_value(v: &Value, loc: &str) -> Result<LeibnizAlgebra> {
    match v {
        Value::String(name) => catalog::algebra(name)
            .map_err(|_| Error::parse(loc, format!("unknown catalog algebra {name:?}"))),
        Value::Object(_) => algebra_from_value(v, loc),
        _ => Err(Error::parse(loc, "expected a catalog name or an inline algebra")),
    }
}

fn validate_algebra(alg: &LeibnizAlgebra) -> Result<()> {
    alg.check().map_err(Error::NotLeibniz)
}

/// Parses an [`AlgebraDocument`]; checks the Leibniz identity when `validate` is set.
pub fn parse_algebra(text: &str, validate: bool) -> Result<LeibnizAlgebra> {
    let v = parse_json(text)?;
    let alg = algebra_from_value(&v, "$")?;
    if validate {
        validate_algebra(&alg)?;
    }
    Ok(alg)
}

fn rep_from_value(v: &Value) -> Result<Representation> {
    let alg = algebra_ref_from_value(field(v, "algebra", "$")?, "$.algebra")?;
    let d = as_usize(field(v, "dimV", "$")?, "$.dimV")?;
    let n = alg.dim();
    let l = as_matrices(field(v, "l", "$")?, n, d, "$.l")?;
    let r = as_matrices(field(v, "r", "$")?, n, d, "$.r")?;
    Representation::new(alg, d, l, r)
}

pub fn parse_rep(text: &str, validate: bool) -> Result<Representation> {
    let rep = rep_from_value(&parse_json(text)?)?;
    if validate {
        rep.require_valid()?;
    }
    Ok(rep)
}

fn omnirep_from_value(v: &Value) -> Result<OmniRepInput> {
    let alg = algebra_ref_from_value(field(v, "algebra", "$")?, "$.algebra")?;
    let d = as_usize(field(v, "dimV", "$")?, "$.dimV")?;
    let n = alg.dim();
    let phi = as_matrices(field(v, "phi", "$")?, n, d, "$.phi")?;
    let theta_items = as_array(field(v, "theta", "$")?, "$.theta")?;
    if theta_items.len() != n {
        return Err(Error::parse(
            "$.theta",
            format!("expected {n} vectors, found {}", theta_items.len()),
        ));
    }
    let theta = theta_items
        .iter()
        .enumerate()
        .map(|(i, t)| as_vector(t, d, &format!("$.theta[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let graph_phi = match v.get("graph_phi") {
        None | Some(Value::Null) => None,
        Some(g) => Some(as_matrices(g, d, d, "$.graph_phi")?),
    };
    Ok(OmniRepInput {
        rho: OmniRep::new(alg, d, phi, theta)?,
        graph_phi,
    })
}

pub fn parse_omnirep(text: &str, validate: bool) -> Result<OmniRepInput> {
    let input = omnirep_from_value(&parse_json(text)?)?;
    if validate {
        input.rho.require_valid()?;
        if let Some(phi) = &input.graph_phi {
            graph_check(phi)?;
        }
    }
    Ok(input)
}

/// Parses any document kind: `bracket` marks an algebra, `phi` an omni-representation,
/// `l` a representation.
pub fn parse_document(text: &str, validate: bool) -> Result<Document> {
    let v = parse_json(text)?;
    if v.get("bracket").is_some() {
        let alg = algebra_from_value(&v, "$")?;
        if validate {
            validate_algebra(&alg)?;
        }
        Ok(Document::Algebra(alg))
    } else if v.get("phi").is_some() {
        let input = omnirep_from_value(&v)?;
        if validate {
            input.rho.require_valid()?;
            if let Some(phi) = &input.graph_phi {
                graph_check(phi)?;
            }
        }
        Ok(Document::OmniRep(input))
    } else if v.get("l").is_some() {
        let rep = rep_from_value(&v)?;
        if validate {
            rep.require_valid()?;
        }
        Ok(Document::Rep(rep))
    } else {
        Err(Error::parse(
            "$",
            "unrecognized document: expected \"bracket\", \"l\" or \"phi\"",
        ))
    }
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

pub fn algebra_document(alg: &LeibnizAlgebra) -> AlgebraDocument {
    let n = alg.dim();
    let mut bracket = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in alg.basis_bracket_terms(i, j) {
                bracket.push((i + 1, j + 1, k + 1, format_rational(c)));
            }
        }
    }
    AlgebraDocument { dim: n, bracket }
}

pub fn rep_document(rep: &Representation) -> RepDocument {
    RepDocument {
        algebra: AlgebraRef::Inline(algebra_document(rep.algebra())),
        dim_v: rep.dim_v(),
        l: rep.left().iter().map(matrix_strings).collect(),
        r: rep.right().iter().map(matrix_strings).collect(),
    }
}

pub fn omnirep_document(rho: &OmniRep, graph_phi: Option<&[Matrix]>) -> OmniRepDocument {
    OmniRepDocument {
        algebra: AlgebraRef::Inline(algebra_document(rho.algebra())),
        dim_v: rho.dim_v(),
        phi: rho.phi().iter().map(matrix_strings).collect(),
        theta: rho
            .theta()
            .iter()
            .map(|t| t.iter().map(format_rational).collect())
            .collect(),
        graph_phi: graph_phi.map(|g| g.iter().map(matrix_strings).collect()),
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn parses_l2() {
        let alg = parse_algebra(r#"{"dim":2,"bracket":[[2,2,1,"1"]]}"#, true).unwrap();
        assert_eq!(alg, catalog::algebra("L2").unwrap());
    }

    #[test]
    fn parses_abelian_line() {
        let alg = parse_algebra(r#"{"dim":1,"bracket":[]}"#, true).unwrap();
        assert_eq!(alg, LeibnizAlgebra::abelian(1));
    }

    #[test]
    fn index_errors_carry_location() {
        let err = parse_algebra(r#"{"dim":2,"bracket":[[3,1,1,"1"]]}"#, true).unwrap_err();
        match err {
            Error::Parse { location, message } => {
                assert_eq!(location, "$.bracket[0][0]");
                assert!(message.contains("out of range"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_duplicates_and_bad_values() {
        let dup = r#"{"dim":2,"bracket":[[2,2,1,"1"],[2,2,1,"2"]]}"#;
        assert!(matches!(parse_algebra(dup, false), Err(Error::Parse { .. })));
        let bad = r#"{"dim":2,"bracket":[[2,2,1,"one"]]}"#;
        assert!(matches!(parse_algebra(bad, false), Err(Error::Parse { .. })));
        let float = r#"{"dim":2,"bracket":[[2,2,1,1.5]]}"#;
        assert!(matches!(parse_algebra(float, false), Err(Error::Parse { .. })));
        assert!(matches!(parse_algebra("{", false), Err(Error::Parse { .. })));
    }

    #[test]
    fn validation_can_be_skipped() {
        let text = r#"{"dim":2,"bracket":[[1,1,2,"1"],[2,1,1,"1"]]}"#;
        assert!(matches!(parse_algebra(text, true), Err(Error::NotLeibniz(_))));
        assert!(parse_algebra(text, false).is_ok());
    }

    #[test]
    fn rep_by_catalog_name() {
        let text = r#"{"algebra":"L2","dimV":1,"l":[[["0"]],[["-1"]]],"r":[[["0"]],[["1"]]]}"#;
        let rep = parse_rep(text, true).unwrap();
        assert_eq!(rep, catalog::rep("L2_line").unwrap());
    }

    #[test]
    fn rep_shape_errors() {
        let text = r#"{"algebra":"L2","dimV":1,"l":[[["0"]]],"r":[[["0"]],[["1"]]]}"#;
        assert!(matches!(parse_rep(text, true), Err(Error::Parse { .. })));
    }

    #[test]
    fn omnirep_with_graph() {
        let text = r#"{"algebra":"L2","dimV":1,"phi":[[["0"]],[["0"]]],"theta":[["0"],["1"]],"graph_phi":[[["0"]]]}"#;
        let input = parse_omnirep(text, true).unwrap();
        assert_eq!(input.rho.theta()[1], vec![int(1)]);
        assert_eq!(input.graph_phi.unwrap().len(), 1);
    }

    #[test]
    fn document_kind_detection() {
        assert!(matches!(
            parse_document(r#"{"dim":1,"bracket":[]}"#, true).unwrap(),
            Document::Algebra(_)
        ));
        assert!(matches!(parse_document(r#"{"x":1}"#, true), Err(Error::Parse { .. })));
    }

    #[test]
    fn catalog_round_trips() {
        for (_, alg) in catalog::algebras() {
            let text = to_json(&algebra_document(&alg));
            assert_eq!(parse_algebra(&text, true).unwrap(), alg);
        }
        for (_, rep) in catalog::reps() {
            let text = to_json(&rep_document(&rep));
            assert_eq!(parse_rep(&text, true).unwrap(), rep);
        }
    }
}
