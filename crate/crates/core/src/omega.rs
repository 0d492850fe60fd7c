//! Finite-dimensional algebras given by structure constants.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::linear::LinComb;
use crate::scalar::Scalar;

/// Sparse vector over the basis of an algebra.
pub type BasisVec = LinComb<usize>;

/// A finite-dimensional (not necessarily associative or unital) algebra:
/// `x_i * x_j = sum_k c[i][j][k] x_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSpec {
    name: String,
    labels: Vec<String>,
    table: Vec<BasisVec>,
}

/// Result of an associativity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Associativity {
    Pass,
    /// First basis triple (lexicographic) with `(x_i x_j) x_k != x_i (x_j x_k)`.
    Witness(usize, usize, usize),
}

impl Associativity {
    pub fn passed(&self) -> bool {
        matches!(self, Associativity::Pass)
    }
}

impl AlgebraSpec {
    /// Builds an algebra from a dense `dim x dim` table of products.
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<BasisVec>>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidArgument("algebra dimension must be positive".into()));
        }
        let distinct: BTreeSet<_> = labels.iter().collect();
        if distinct.len() != dim {
            return Err(Error::InvalidArgument("basis labels must be distinct".into()));
        }
        if table.len() != dim || table.iter().any(|row| row.len() != dim) {
            return Err(Error::LengthMismatch {
                expected: dim,
                actual: table.len(),
            });
        }
        let flat: Vec<BasisVec> = table.into_iter().flatten().collect();
        for (idx, v) in flat.iter().enumerate() {
            if let Some(k) = v.keys().find(|&&k| k >= dim) {
                return Err(Error::IndexOutOfRange(format!(
                    "product x{} * x{} has component index {k} >= dim {dim}",
                    idx / dim,
                    idx % dim
                )));
            }
        }
        Ok(Self {
            name: name.into(),
            labels,
            table: flat,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The structure-constant vector of `x_i * x_j`.
    pub fn product(&self, i: usize, j: usize) -> &BasisVec {
        &self.table[i * self.dim() + j]
    }

    /// Bilinear product of two basis vectors.
    pub fn mul_vec(&self, a: &BasisVec, b: &BasisVec) -> BasisVec {
        let mut out = BasisVec::new();
        for (&i, ci) in a {
            for (&j, cj) in b {
                out.add_scaled(self.product(i, j), &(ci * cj));
            }
        }
        out
    }

    pub fn is_null(&self) -> bool {
        self.table.iter().all(|v| v.is_zero())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Checks `(x_i x_j) x_k = x_i (x_j x_k)` on all basis triples.
    pub fn check_associativity(&self) -> Associativity {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    let left = self.mul_vec(ij, &BasisVec::basis(k));
                    let right = self.mul_vec(&BasisVec::basis(i), self.product(j, k));
                    if left != right {
                        return Associativity::Witness(i, j, k);
                    }
                }
            }
        }
        Associativity::Pass
    }

    /// The two-sided unit, if one exists.
    pub fn detect_unit(&self) -> Option<BasisVec> {
        let n = self.dim();
        // unknown e = sum_k e_k x_k; key (side, i, l)
        let mut ech = Echelon::tracked();
        for k in 0..n {
            let mut img = LinComb::new();
            for i in 0..n {
                for (&l, c) in self.product(k, i) {
                    img.add_term((0u8, i, l), c.clone());
                }
                for (&l, c) in self.product(i, k) {
                    img.add_term((1u8, i, l), c.clone());
                }
            }
            ech.insert(img);
        }
        let mut target = LinComb::new();
        for i in 0..n {
            target.add_term((0u8, i, i), Scalar::one());
            target.add_term((1u8, i, i), Scalar::one());
        }
        ech.express(&target)
    }

    /// The same algebra written in the basis `f_a = sum_i p[a][i] x_i`.
    /// `p` must be invertible.
    pub fn change_basis(&self, name: impl Into<String>, p: &[Vec<Scalar>]) -> Result<Self> {
        let n = self.dim();
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: p.len(),
            });
        }
        let rows: Vec<BasisVec> = p.iter().map(|r| r.iter().cloned().enumerate().collect()).collect();
        let mut ech = Echelon::tracked();
        for r in &rows {
            ech.insert(r.clone());
        }
        if ech.rank() != n {
            return Err(Error::InvalidArgument("change of basis is singular".into()));
        }
        // x_k = sum_c q[k][c] f_c
        let q: Vec<BasisVec> = (0..n)
            .map(|k| ech.express(&BasisVec::basis(k)).expect("full rank"))
            .collect();
        let mut table = vec![vec![BasisVec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let prod = self.mul_vec(&rows[a], &rows[b]);
                let mut in_f = BasisVec::new();
                for (&k, c) in &prod {
                    in_f.add_scaled(&q[k], c);
                }
                table[a][b] = in_f;
            }
        }
        let labels = (1..=n).map(|i| format!("f{i}")).collect();
        Self::new(name, labels, table)
    }

    /// Parses a specification document (see [`OmegaFile`]).
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: OmegaFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        file.into_spec()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut spec = Self::from_json_str(&text)?;
        if spec.name.is_empty() {
            spec.name = path.display().to_string();
        }
        Ok(spec)
    }

    pub fn to_file(&self) -> OmegaFile {
        let n = self.dim();
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.product(i, j);
                if v.is_zero() {
                    continue;
                }
                let terms = v
                    .iter()
                    .map(|(&k, c)| {
                        let (num, den) = c.to_i64_pair().expect("structure constant fits in i64");
                        TermEntry { k, num, den }
                    })
                    .collect();
                table.push(TableEntry { i, j, terms });
            }
        }
        OmegaFile {
            name: Some(self.name.clone()),
            dim: n,
            basis: self.labels.clone(),
            table,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }
}

/// On-disk form of an algebra. Omitted table entries are zero products.
/// Indices are 0-based positions in `basis`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OmegaFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub table: Vec<TableEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermEntry {
    pub k: usize,
    pub num: i64,
    #[serde(default = "one_i64")]
    pub den: i64,
}

fn one_i64() -> i64 {
    1
}

impl OmegaFile {
    pub fn into_spec(self) -> Result<AlgebraSpec> {
        let n = self.dim;
        let perr = |location: String, message: String| Error::Parse { location, message };
        if n == 0 {
            return Err(perr("dim".into(), "dimension must be positive".into()));
        }
        if self.basis.len() != n {
            return Err(perr(
                "basis".into(),
                format!("expected {n} labels, found {}", self.basis.len()),
            ));
        }
        let mut table = vec![vec![BasisVec::new(); n]; n];
        for (e, entry) in self.table.iter().enumerate() {
            if entry.i >= n || entry.j >= n {
                return Err(perr(
                    format!("table[{e}]"),
                    format!("index pair ({}, {}) out of range for dim {n}", entry.i, entry.j),
                ));
            }
            for (t, term) in entry.terms.iter().enumerate() {
                if term.k >= n {
                    return Err(perr(
                        format!("table[{e}].terms[{t}].k"),
                        format!("index {} out of range for dim {n}", term.k),
                    ));
                }
                let c = Scalar::new(term.num, term.den)
                    .map_err(|_| perr(format!("table[{e}].terms[{t}].den"), "zero denominator".into()))?;
                table[entry.i][entry.j].add_term(term.k, c);
            }
        }
        AlgebraSpec::new(self.name.unwrap_or_default(), self.basis, table)
            .map_err(|e| perr("basis".into(), e.to_string()))
    }
}

/// The named algebras shipped with the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// `C^{(+)L}` with idempotent basis `u1..uL`.
    DirectSum(usize),
    /// `Mat(k, C)` with matrix units `E11..Ekk`.
    Matrix(usize),
    /// Dimension `n`, all products zero.
    Null(usize),
    /// Two-dimensional non-associative table: `x*x = y`, `x*y = x`.
    NonassocWitness,
}

impl Builtin {
    pub fn build(self) -> Result<AlgebraSpec> {
        let nonpos = || Error::InvalidArgument("builtin parameters must be positive".into());
        let name = self.to_string();
        match self {
            Builtin::DirectSum(l) => {
                if l == 0 {
                    return Err(nonpos());
                }
                let labels = (1..=l).map(|i| format!("u{i}")).collect();
                let mut t = vec![vec![BasisVec::new(); l]; l];
                for (i, row) in t.iter_mut().enumerate() {
                    row[i] = BasisVec::basis(i);
                }
                AlgebraSpec::new(name, labels, t)
            }
            Builtin::Matrix(k) => {
                if k == 0 {
                    return Err(nonpos());
                }
                let n = k * k;
                let mut labels = Vec::with_capacity(n);
                for a in 1..=k {
                    for b in 1..=k {
                        labels.push(format!("E{a}{b}"));
                    }
                }
                let mut t = vec![vec![BasisVec::new(); n]; n];
                for a in 0..k {
                    for b in 0..k {
                        for c in 0..k {
                            // E_ab E_bc = E_ac
                            t[a * k + b][b * k + c] = BasisVec::basis(a * k + c);
                        }
                    }
                }
                AlgebraSpec::new(name, labels, t)
            }
            Builtin::Null(n) => {
                if n == 0 {
                    return Err(nonpos());
                }
                let labels = (1..=n).map(|i| format!("z{i}")).collect();
                AlgebraSpec::new(name, labels, vec![vec![BasisVec::new(); n]; n])
            }
            Builtin::NonassocWitness => {
                let mut t = vec![vec![BasisVec::new(); 2]; 2];
                t[0][0] = BasisVec::basis(1);
                t[0][1] = BasisVec::basis(0);
                AlgebraSpec::new(name, vec!["x".into(), "y".into()], t)
            }
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::DirectSum(l) => write!(f, "direct_sum_C({l})"),
            Builtin::Matrix(k) => write!(f, "matrix({k})"),
            Builtin::Null(n) => write!(f, "null({n})"),
            Builtin::NonassocWitness => write!(f, "nonassoc_witness"),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    /// Accepts `direct_sum_C(L)`, `C`, `matrix(k)`, `Mat(k)`, `null(n)` and
    /// `nonassoc_witness`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            location: format!("builtin `{s}`"),
            message: "expected direct_sum_C(L), C, matrix(k), null(n) or nonassoc_witness".into(),
        };
        if s == "C" {
            return Ok(Builtin::DirectSum(1));
        }
        if s == "nonassoc_witness" {
            return Ok(Builtin::NonassocWitness);
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let arg = rest.strip_suffix(')').ok_or_else(bad)?;
        let p: usize = arg.trim().parse().map_err(|_| bad())?;
        if p == 0 {
            return Err(Error::InvalidArgument("builtin parameters must be positive".into()));
        }
        match head.trim() {
            "direct_sum_C" | "C^" | "direct_sum" => Ok(Builtin::DirectSum(p)),
            "matrix" | "Mat" => Ok(Builtin::Matrix(p)),
            "null" => Ok(Builtin::Null(p)),
            _ => Err(bad()),
        }
    }
}

/// Shorthand for `name.parse::<Builtin>()?.build()` behind an `Arc`.
pub fn builtin(name: &str) -> Result<Arc<AlgebraSpec>> {
    Ok(Arc::new(name.parse::<Builtin>()?.build()?))
}

/// An element of a specific algebra.
#[derive(Clone, Debug)]
pub struct OmegaElement {
    algebra: Arc<AlgebraSpec>,
    coeffs: BasisVec,
}

impl PartialEq for OmegaElement {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.coeffs == other.coeffs
    }
}

fn same_algebra(a: &Arc<AlgebraSpec>, b: &Arc<AlgebraSpec>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl OmegaElement {
    pub fn new(algebra: Arc<AlgebraSpec>, coeffs: BasisVec) -> Result<Self> {
        if let Some(k) = coeffs.keys().find(|&&k| k >= algebra.dim()) {
            return Err(Error::IndexOutOfRange(format!(
                "basis index {k} >= dim {}",
                algebra.dim()
            )));
        }
        Ok(Self { algebra, coeffs })
    }

    pub fn basis(algebra: Arc<AlgebraSpec>, i: usize) -> Result<Self> {
        Self::new(algebra, BasisVec::basis(i))
    }

    pub fn zero(algebra: Arc<AlgebraSpec>) -> Self {
        Self {
            algebra,
            coeffs: BasisVec::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &BasisVec {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::Structural(format!(
                "elements of different algebras `{}` and `{}`",
                self.algebra.name(),
                other.algebra.name()
            )))
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            algebra: self.algebra.clone(),
            coeffs: self.algebra.mul_vec(&self.coeffs, &other.coeffs),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            algebra: self.algebra.clone(),
            coeffs: &self.coeffs + &other.coeffs,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.scaled(c),
        }
    }
}

impl fmt::Display for OmegaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&k, c)| format!("{c}*{}", self.algebra.label(k)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(name: &str) -> Arc<AlgebraSpec> {
        builtin(name).unwrap()
    }

    #[test]
    fn direct_sum_products() {
        let a = alg("direct_sum_C(2)");
        let u1 = OmegaElement::basis(a.clone(), 0).unwrap();
        let u2 = OmegaElement::basis(a.clone(), 1).unwrap();
        assert_eq!(u1.multiply(&u1).unwrap(), u1);
        assert!(u1.multiply(&u2).unwrap().is_zero());
    }

    #[test]
    fn matrix_units() {
        let a = alg("matrix(2)");
        assert_eq!(a.dim(), 4);
        let e11 = OmegaElement::basis(a.clone(), a.index_of("E11").unwrap()).unwrap();
        let e12 = OmegaElement::basis(a.clone(), a.index_of("E12").unwrap()).unwrap();
        assert_eq!(e11.multiply(&e12).unwrap(), e12);
        assert!(e12.multiply(&e11).unwrap().is_zero());
    }

    #[test]
    fn mismatched_algebras() {
        let a = alg("direct_sum_C(2)");
        let b = alg("null(2)");
        let x = OmegaElement::basis(a, 0).unwrap();
        let y = OmegaElement::basis(b, 0).unwrap();
        assert!(matches!(x.multiply(&y), Err(Error::Structural(_))));
    }

    #[test]
    fn associativity_verdicts() {
        assert!(alg("direct_sum_C(3)").check_associativity().passed());
        assert!(alg("matrix(2)").check_associativity().passed());
        assert!(alg("null(3)").check_associativity().passed());
        // (xx)x = yx = 0, x(xx) = xy = x
        assert_eq!(
            alg("nonassoc_witness").check_associativity(),
            Associativity::Witness(0, 0, 0)
        );
    }

    #[test]
    fn units() {
        let u = alg("direct_sum_C(2)").detect_unit().unwrap();
        assert_eq!(u.coeff(&0), Scalar::one());
        assert_eq!(u.coeff(&1), Scalar::one());
        assert!(alg("null(1)").detect_unit().is_none());
        let m = alg("matrix(2)");
        let u = m.detect_unit().unwrap();
        let expect: BasisVec = [
            (m.index_of("E11").unwrap(), Scalar::one()),
            (m.index_of("E22").unwrap(), Scalar::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(u, expect);
    }

    #[test]
    fn builtin_parsing() {
        assert_eq!("C".parse::<Builtin>().unwrap(), Builtin::DirectSum(1));
        assert_eq!("Mat(3)".parse::<Builtin>().unwrap(), Builtin::Matrix(3));
        assert!("null(0)".parse::<Builtin>().is_err());
        assert!("frobnicate(2)".parse::<Builtin>().is_err());
        assert!(Builtin::DirectSum(0).build().is_err());
        let n = alg("null(3)");
        assert_eq!(n.dim(), 3);
        assert!(n.is_null());
    }

    #[test]
    fn json_round_trip_and_errors() {
        let m = alg("matrix(2)");
        let text = m.to_json_string();
        let back = AlgebraSpec::from_json_str(&text).unwrap();
        assert_eq!(back.dim(), 4);
        assert!(back.check_associativity().passed());

        let sparse = r#"{"dim": 2, "basis": ["a", "b"], "table": [{"i":0,"j":0,"terms":[{"k":0,"num":1,"den":1}]}]}"#;
        let s = AlgebraSpec::from_json_str(sparse).unwrap();
        assert!(s.product(1, 1).is_zero());

        let bad = r#"{"dim": 2, "basis": ["a", "b"], "table": [{"i":0,"j":0,"terms":[{"k":5,"num":1,"den":1}]}]}"#;
        match AlgebraSpec::from_json_str(bad) {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "table[0].terms[0].k"),
            other => panic!("unexpected {other:?}"),
        }
        let malformed = "{\"dim\": 2,\n \"basis\": [\"a\", ]}";
        assert!(matches!(
            AlgebraSpec::from_json_str(malformed),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn change_of_basis_preserves_associativity() {
        let a = alg("direct_sum_C(2)");
        let p = vec![
            vec![Scalar::one(), Scalar::from(2)],
            vec![Scalar::zero(), Scalar::one()],
        ];
        let b = a.change_basis("twisted", &p).unwrap();
        assert!(b.check_associativity().passed());
        assert!(b.detect_unit().is_some());
        let singular = vec![vec![Scalar::one(), Scalar::one()], vec![Scalar::one(), Scalar::one()]];
        assert!(a.change_basis("bad", &singular).is_err());
    }
}
