//! Named reference algebras and the structure-constant file format.
//!
//! The file format is a JSON document:
//!
//! ```json
//! { "dim": 3, "name": "heisenberg3",
//!   "brackets": [ { "i": 0, "j": 1, "k": 2, "v": "1" } ] }
//! ```
//!
//! Each record sets `c_ij^k = v` for `i < j`; `(j, i)` entries follow from
//! antisymmetry and may not appear. Omitted constants are zero. Parsing is
//! strict: unknown fields are rejected.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::derivations::{derivation_space, is_complete};
use crate::error::{Error, Result};
use crate::exactlin::{frac, int, parse_rat, vector, Mat, Rat, Subspace};
use crate::liealg::{LieAlgebra, LinMap, SymForm};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    name: String,
    brackets: Vec<BracketRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketRecord {
    i: usize,
    j: usize,
    k: usize,
    v: String,
}

fn field_error(index: usize, field: &str, message: impl Into<String>) -> Error {
    Error::Field {
        field: format!("brackets[{index}].{field}"),
        message: message.into(),
    }
}

/// Parses and validates a structure-constant document.
pub fn parse(text: &str) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let dim = file.dim;
    let mut seen = BTreeSet::new();
    let mut brackets = Vec::with_capacity(file.brackets.len());
    for (n, rec) in file.brackets.iter().enumerate() {
        if rec.j >= dim {
            return Err(field_error(
                n,
                "j",
                format!("{} is not below dim {dim}", rec.j),
            ));
        }
        if rec.i >= rec.j {
            return Err(field_error(
                n,
                "i",
                format!("need i < j, got i = {}, j = {}", rec.i, rec.j),
            ));
        }
        if rec.k >= dim {
            return Err(field_error(
                n,
                "k",
                format!("{} is not below dim {dim}", rec.k),
            ));
        }
        let v = parse_rat(&rec.v)
            .ok_or_else(|| field_error(n, "v", format!("`{}` is not a rational", rec.v)))?;
        if !seen.insert((rec.i, rec.j, rec.k)) {
            return Err(field_error(n, "k", "duplicate record"));
        }
        brackets.push((rec.i, rec.j, rec.k, v));
    }
    LieAlgebra::from_brackets(dim, Some(&file.name), &brackets)
}

/// Serializes with records sorted by `(i, j, k)`, zero constants omitted.
pub fn to_text(g: &LieAlgebra) -> String {
    let dim = g.dim();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in 0..dim {
                let v = g.structure_constant(i, j, k);
                if !v.is_zero() {
                    brackets.push(BracketRecord {
                        i,
                        j,
                        k,
                        v: v.to_string(),
                    });
                }
            }
        }
    }
    let file = AlgebraFile {
        dim,
        name: g.name().unwrap_or("unnamed").to_owned(),
        brackets,
    };
    let mut s = serde_json::to_string_pretty(&file).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn load(path: impl AsRef<Path>) -> Result<LieAlgebra> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn save(g: &LieAlgebra, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_text(g))?;
    Ok(())
}

/// Recorded facts about a catalog algebra. Regression locks only: tests
/// recompute every one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExpectedFacts {
    pub dim_center: usize,
    pub dim_derived: usize,
    pub dim_radical: usize,
    pub dim_derivations: usize,
    pub perfect: bool,
    pub complete: bool,
    pub semisimple: bool,
}

impl ExpectedFacts {
    pub fn compute(g: &LieAlgebra) -> Self {
        ExpectedFacts {
            dim_center: g.center().dim(),
            dim_derived: g.derived_algebra().dim(),
            dim_radical: g.radical().dim(),
            dim_derivations: derivation_space(g).dim(),
            perfect: g.is_perfect(),
            complete: is_complete(g),
            semisimple: g.is_semisimple(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub subalgebras: BTreeMap<String, Subspace>,
    pub forms: BTreeMap<String, SymForm>,
    pub maps: BTreeMap<String, LinMap>,
    pub expected: ExpectedFacts,
}

impl CatalogEntry {
    fn new(algebra: LieAlgebra, expected: ExpectedFacts) -> Self {
        CatalogEntry {
            name: algebra.name().unwrap_or_default().to_owned(),
            algebra,
            subalgebras: BTreeMap::new(),
            forms: BTreeMap::new(),
            maps: BTreeMap::new(),
            expected,
        }
    }

    fn sub(mut self, tag: &str, vectors: &[&[i64]]) -> Self {
        let space = Subspace::span(
            self.algebra.dim(),
            vectors.iter().map(|v| vector(v)).collect::<Vec<_>>(),
        );
        self.subalgebras.insert(tag.to_owned(), space);
        self
    }

    fn form(mut self, tag: &str, matrix: Mat) -> Self {
        let f = SymForm::new(self.algebra.clone(), matrix).expect("catalog forms are symmetric");
        self.forms.insert(tag.to_owned(), f);
        self
    }

    fn map(mut self, tag: &str, matrix: Mat) -> Self {
        let m = LinMap::new(self.algebra.clone(), self.algebra.clone(), matrix)
            .expect("catalog maps are square");
        self.maps.insert(tag.to_owned(), m);
        self
    }
}

const NAMES: &[&str] = &[
    "abelian(n)",
    "heisenberg3",
    "aff1",
    "sl2",
    "so3",
    "gl2",
    "upper_triangular(3)",
    "sl2_rad2",
    "sl2_sum_aff1",
    "so3_sum_so3",
];

/// Catalog names; `abelian(n)` stands for every `n >= 1`.
pub fn list() -> Vec<&'static str> {
    NAMES.to_vec()
}

pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_brackets(3, Some("heisenberg3"), &[(0, 1, 2, int(1))]).expect("valid")
}

pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_brackets(2, Some("aff1"), &[(0, 1, 1, int(1))]).expect("valid")
}

/// Basis `H, E, F`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        Some("sl2"),
        &[(0, 1, 1, int(2)), (0, 2, 2, int(-2)), (1, 2, 0, int(1))],
    )
    .expect("valid")
}

/// `[e1,e2] = e3` and cyclic.
pub fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        Some("so3"),
        &[(0, 1, 2, int(1)), (1, 2, 0, int(1)), (2, 0, 1, int(1))],
    )
    .expect("valid")
}

fn unit_matrix(n: usize, r: usize, c: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    m.set(r, c, int(1));
    m
}

/// Basis `E11, E12, E21, E22`.
pub fn gl2() -> LieAlgebra {
    let basis = [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(r, c)| unit_matrix(2, r, c));
    LieAlgebra::from_matrix_basis(&basis, Some("gl2")).expect("valid")
}

/// Basis `E_ij`, `i <= j`, in row-major order.
pub fn upper_triangular(n: usize) -> LieAlgebra {
    let basis: Vec<Mat> = (0..n)
        .flat_map(|r| (r..n).map(move |c| (r, c)))
        .map(|(r, c)| unit_matrix(n, r, c))
        .collect();
    LieAlgebra::from_matrix_basis(&basis, Some(&format!("upper_triangular({n})"))).expect("valid")
}

/// `sl2 ⋉ Q²` on the standard representation, basis `H, E, F, v1, v2`.
pub fn sl2_rad2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        5,
        Some("sl2_rad2"),
        &[
            (0, 1, 1, int(2)),
            (0, 2, 2, int(-2)),
            (1, 2, 0, int(1)),
            (0, 3, 3, int(1)),
            (0, 4, 4, int(-1)),
            (1, 4, 3, int(1)),
            (2, 3, 4, int(1)),
        ],
    )
    .expect("valid")
}

fn facts(dims: [usize; 4], perfect: bool, complete: bool, semisimple: bool) -> ExpectedFacts {
    ExpectedFacts {
        dim_center: dims[0],
        dim_derived: dims[1],
        dim_radical: dims[2],
        dim_derivations: dims[3],
        perfect,
        complete,
        semisimple,
    }
}

fn parse_abelian(name: &str) -> Option<usize> {
    let n: usize = name
        .strip_prefix("abelian(")?
        .strip_suffix(')')?
        .parse()
        .ok()?;
    (n >= 1).then_some(n)
}

pub fn get(name: &str) -> Result<CatalogEntry> {
    if let Some(n) = parse_abelian(name) {
        return Ok(CatalogEntry::new(
            LieAlgebra::abelian(n),
            facts([n, 0, n, n * n], false, false, false),
        ));
    }
    let killing = |g: &LieAlgebra| g.killing_matrix();
    let entry = match name {
        "heisenberg3" => CatalogEntry::new(heisenberg3(), facts([1, 1, 3, 6], false, false, false))
            .sub("x", &[&[1, 0, 0]])
            .sub("xz", &[&[1, 0, 0], &[0, 0, 1]])
            .sub("center", &[&[0, 0, 1]]),
        "aff1" => CatalogEntry::new(aff1(), facts([0, 1, 2, 2], false, true, false))
            .sub("x", &[&[1, 0]])
            .sub("y", &[&[0, 1]]),
        "sl2" => {
            let g = sl2();
            CatalogEntry::new(g.clone(), facts([0, 3, 0, 3], true, true, true))
                .sub("cartan", &[&[1, 0, 0]])
                .sub("u", &[&[0, 1, -1]])
                .sub("borel", &[&[1, 0, 0], &[0, 1, 0]])
                .sub("line_e", &[&[0, 1, 0]])
                .form("killing", killing(&g))
                // identity in the basis (E-F, H, E+F)
                .form(
                    "compact_embedding",
                    Mat::from_diagonal(&[int(1), frac(1, 2), frac(1, 2)]),
                )
                .map(
                    "theta",
                    Mat::from_ints(&[&[-1, 0, 0], &[0, 0, -1], &[0, -1, 0]]),
                )
        }
        "so3" => {
            let g = so3();
            CatalogEntry::new(g.clone(), facts([0, 3, 0, 3], true, true, true))
                .sub("line_e3", &[&[0, 0, 1]])
                .form("neg_killing", -&killing(&g))
                .form("killing", killing(&g))
                .map("theta", Mat::identity(3))
        }
        "gl2" => CatalogEntry::new(gl2(), facts([1, 3, 1, 4], false, false, false))
            .sub("sl2", &[&[1, 0, 0, -1], &[0, 1, 0, 0], &[0, 0, 1, 0]])
            .sub("center", &[&[1, 0, 0, 1]])
            .sub("diagonal", &[&[1, 0, 0, 0], &[0, 0, 0, 1]]),
        "upper_triangular(3)" => CatalogEntry::new(
            upper_triangular(3),
            facts([1, 3, 6, 8], false, false, false),
        )
        .sub(
            "strict",
            &[
                &[0, 1, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 1, 0],
            ],
        )
        .sub("corner", &[&[0, 0, 1, 0, 0, 0]]),
        "sl2_rad2" => CatalogEntry::new(sl2_rad2(), facts([0, 5, 2, 6], true, false, false))
            .sub(
                "levi",
                &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0]],
            )
            .sub("radical", &[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]])
            .sub("v1", &[&[0, 0, 0, 1, 0]]),
        "sl2_sum_aff1" => {
            let g = sl2().direct_sum(&aff1()).0.with_name("sl2_sum_aff1");
            CatalogEntry::new(g, facts([0, 4, 2, 5], false, true, false))
                .sub(
                    "sl2",
                    &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0]],
                )
                .sub("aff1", &[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]])
                .sub("y", &[&[0, 0, 0, 0, 1]])
        }
        "so3_sum_so3" => {
            let g = so3().direct_sum(&so3()).0.with_name("so3_sum_so3");
            let neg = -&killing(&g);
            CatalogEntry::new(g, facts([0, 6, 0, 6], true, true, true))
                .sub(
                    "first",
                    &[
                        &[1, 0, 0, 0, 0, 0],
                        &[0, 1, 0, 0, 0, 0],
                        &[0, 0, 1, 0, 0, 0],
                    ],
                )
                .sub("line", &[&[0, 0, 1, 0, 0, 0]])
                .sub("torus", &[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]])
                .sub("diag_line", &[&[0, 0, 1, 0, 0, 1]])
                .sub(
                    "diagonal",
                    &[
                        &[1, 0, 0, 1, 0, 0],
                        &[0, 1, 0, 0, 1, 0],
                        &[0, 0, 1, 0, 0, 1],
                    ],
                )
                .form("neg_killing", neg)
                .map("theta", Mat::identity(6))
        }
        other => return Err(Error::UnknownName(other.to_owned())),
    };
    Ok(entry)
}

/// Concrete entries used by tests and the `verify` corpus.
pub fn standard_entries() -> Vec<CatalogEntry> {
    let mut names: Vec<String> = (1..=4).map(|n| format!("abelian({n})")).collect();
    names.extend(NAMES.iter().skip(1).map(|s| s.to_string()));
    names
        .iter()
        .map(|n| get(n).expect("catalog names resolve"))
        .collect()
}

/// Parses `1,0,0;0,1/2,1` into vectors of length `dim`.
pub fn parse_basis_spec(spec: &str, dim: usize) -> Result<Vec<Vec<Rat>>> {
    let mut out = Vec::new();
    for (n, chunk) in spec.split(';').enumerate() {
        if chunk.trim().is_empty() {
            continue;
        }
        let v: Option<Vec<Rat>> = chunk.split(',').map(parse_rat).collect();
        let v = v.ok_or_else(|| Error::Field {
            field: format!("sub[{n}]"),
            message: format!("`{chunk}` is not a list of rationals"),
        })?;
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Validation;

    #[test]
    fn heisenberg_from_text() {
        let text = r#"{"dim": 3, "name": "h", "brackets": [{"i":0,"j":1,"k":2,"v":"1"}]}"#;
        let g = parse(text).unwrap();
        assert_eq!(g, heisenberg3());
    }

    #[test]
    fn strict_parsing() {
        let extra = r#"{"dim": 2, "name": "a", "brackets": [], "extra": 1}"#;
        assert!(matches!(parse(extra), Err(Error::Parse { .. })));
        let reversed = r#"{"dim": 2, "name": "a", "brackets": [{"i":1,"j":0,"k":0,"v":"1"}]}"#;
        assert!(
            matches!(parse(reversed), Err(Error::Field { field, .. }) if field == "brackets[0].i")
        );
        let bad_v = r#"{"dim": 2, "name": "a", "brackets": [{"i":0,"j":1,"k":0,"v":"1/0"}]}"#;
        assert!(
            matches!(parse(bad_v), Err(Error::Field { field, .. }) if field == "brackets[0].v")
        );
        let broken = "{\"dim\": 2,\n \"name\": }";
        assert!(matches!(parse(broken), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn jacobi_violations_are_rejected() {
        // [e0,e1] = e2, [e0,e2] = e0: the cyclic sum on (0,1,2) is -e2
        let text = r#"{"dim": 3, "name": "bad", "brackets": [
            {"i":0,"j":1,"k":2,"v":"1"}, {"i":0,"j":2,"k":0,"v":"1"}]}"#;
        assert_eq!(parse(text).unwrap_err(), Error::Jacobi { i: 0, j: 1, k: 2 });
    }

    #[test]
    fn cyclic_triple_with_one_sign_flip_is_a_lie_algebra() {
        // c01^2 = c02^1 = c12^0 = 1 is so(2,1), which satisfies Jacobi
        let text = r#"{"dim": 3, "name": "so21", "brackets": [
            {"i":0,"j":1,"k":2,"v":"1"}, {"i":0,"j":2,"k":1,"v":"1"},
            {"i":1,"j":2,"k":0,"v":"1"}]}"#;
        let g = parse(text).unwrap();
        assert_eq!(g.validate(), Validation::Valid);
        assert!(g.is_semisimple());
    }

    #[test]
    fn unknown_names() {
        assert_eq!(get("e8").unwrap_err(), Error::UnknownName("e8".into()));
        assert!(get("abelian(0)").is_err());
        assert_eq!(get("abelian(4)").unwrap().algebra.dim(), 4);
    }

    #[test]
    fn recorded_facts_match_recomputation() {
        for e in standard_entries() {
            assert_eq!(ExpectedFacts::compute(&e.algebra), e.expected, "{}", e.name);
            for (tag, space) in &e.subalgebras {
                assert!(
                    crate::liealg::Subalgebra::new(e.algebra.clone(), space.clone()).is_ok(),
                    "{}:{tag}",
                    e.name
                );
            }
            for (tag, theta) in &e.maps {
                assert!(theta.is_automorphism(), "{}:{tag}", e.name);
            }
        }
    }

    #[test]
    fn round_trip_catalog() {
        for e in standard_entries() {
            let back = parse(&to_text(&e.algebra)).unwrap();
            assert_eq!(back, e.algebra);
            assert_eq!(back.name(), e.algebra.name());
        }
    }

    #[test]
    fn basis_specs() {
        let v = parse_basis_spec("1,0,0; 0,1/2,1", 3).unwrap();
        assert_eq!(v[1][1], frac(1, 2));
        assert!(parse_basis_spec("1,0", 3).is_err());
        assert!(parse_basis_spec("1,x,0", 3).is_err());
    }
}
