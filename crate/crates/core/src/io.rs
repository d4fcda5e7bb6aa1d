//! JSON interchange. Scalars are exact strings (`"-2/3"`; integers may be bare numbers),
//! matrices are lists of rows, fields are `"Q"` or `"GF(p)"`. Maps into balanced tensor
//! products are given by lifts into the tensor product over the ground field.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{field_extension, Algebra, Polynomial};
use crate::bimodule::Bimodule;
use crate::catalog;
use crate::comodule::{Bicomodule, Comodule};
use crate::coring::{base_change, opposite_coring, sweedler_coring, tensor_coring, Coring, Side};
use crate::entwine::{entwined_coring, Entwining};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Rational, Scalar, Subspace};

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Field::Rationals => s.serialize_str("Q"),
            Field::Prime(p) => s.serialize_str(&format!("GF({p})")),
        }
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_field(&s).map_err(serde::de::Error::custom)
    }
}

pub fn parse_field(s: &str) -> Result<Field> {
    let t = s.trim();
    if t == "Q" {
        return Ok(Field::Rationals);
    }
    let p = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|n| n.trim().parse::<u64>().ok())
        .ok_or_else(|| Error::Parse(format!("field {s:?}: expected \"Q\" or \"GF(p)\"")))?;
    Field::from_characteristic(p)
}

fn default_field() -> Field {
    Field::Rationals
}

/// An exact scalar: a string like `"3"`, `"-2/3"`, or a bare integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(i64),
    Text(String),
}

impl ScalarJson {
    pub fn to_scalar(&self, field: Field) -> Result<Scalar> {
        let r = match self {
            ScalarJson::Int(n) => Rational::from_int(*n),
            ScalarJson::Text(t) => t.trim().parse::<Rational>()?,
        };
        field.coerce(&Scalar::Rat(r))
    }
}

impl From<&Scalar> for ScalarJson {
    fn from(s: &Scalar) -> Self {
        ScalarJson::Text(s.to_string())
    }
}

fn vector(v: &[ScalarJson], field: Field) -> Result<Vec<Scalar>> {
    v.iter().map(|s| s.to_scalar(field)).collect()
}

fn vector_json(v: &[Scalar]) -> Vec<ScalarJson> {
    v.iter().map(ScalarJson::from).collect()
}

/// A matrix as a list of rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatrixJson(pub Vec<Vec<ScalarJson>>);

impl From<&Matrix> for MatrixJson {
    fn from(m: &Matrix) -> Self {
        MatrixJson((0..m.rows()).map(|i| vector_json(m.row(i))).collect())
    }
}

impl MatrixJson {
    /// `cols` is needed only for matrices without rows.
    pub fn to_matrix(&self, field: Field, rows: usize, cols: usize) -> Result<Matrix> {
        if self.0.len() != rows {
            return Err(Error::Dimension(format!("expected {rows} rows, got {}", self.0.len())));
        }
        let data = self
            .0
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != cols {
                    return Err(Error::Dimension(format!("row {i}: expected {cols} entries, got {}", r.len())));
                }
                vector(r, field)
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_vec(rows, cols, data.into_iter().flatten().collect())
    }
}

/// A finite-dimensional algebra, by name or by structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    /// The ground field.
    Ground {
        #[serde(default = "default_field")]
        field: Field,
    },
    /// `M_n(k)`, basis `E_ij` at `i * n + j`.
    Matrix {
        #[serde(default = "default_field")]
        field: Field,
        n: usize,
    },
    /// `k[x]/(x^n)`, basis `x^i`.
    Truncated {
        #[serde(default = "default_field")]
        field: Field,
        n: usize,
    },
    /// `k^n` with orthogonal idempotents.
    Product {
        #[serde(default = "default_field")]
        field: Field,
        n: usize,
    },
    /// The group algebra of the cyclic group of order `n`, basis `t^i`.
    CyclicGroup {
        #[serde(default = "default_field")]
        field: Field,
        n: usize,
    },
    /// `mult[i * dim + j]` holds the coordinates of `e_i e_j`.
    Explicit {
        #[serde(default)]
        name: Option<String>,
        #[serde(default = "default_field")]
        field: Field,
        dim: usize,
        mult: Vec<Vec<ScalarJson>>,
        unit: Vec<ScalarJson>,
    },
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<Algebra> {
        Ok(match self {
            AlgebraSpec::Ground { field } => Algebra::ground(*field),
            AlgebraSpec::Matrix { field, n } => Algebra::matrix_algebra(*field, positive(*n)?),
            AlgebraSpec::Truncated { field, n } => Algebra::truncated_polynomials(*field, positive(*n)?),
            AlgebraSpec::Product { field, n } => Algebra::product_of_fields(*field, positive(*n)?),
            AlgebraSpec::CyclicGroup { field, n } => Algebra::cyclic_group(*field, positive(*n)?),
            AlgebraSpec::Explicit { name, field, dim, mult, unit } => {
                let mult = mult.iter().map(|v| vector(v, *field)).collect::<Result<Vec<_>>>()?;
                Algebra::checked(name.clone().unwrap_or_else(|| "A".into()), *field, *dim, mult, vector(unit, *field)?)?
            }
        })
    }

    pub fn explicit(a: &Algebra) -> Self {
        AlgebraSpec::Explicit {
            name: Some(a.name().to_string()),
            field: a.field(),
            dim: a.dim(),
            mult: a.mult_table().iter().map(|v| vector_json(v)).collect(),
            unit: vector_json(a.unit()),
        }
    }
}

fn positive(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::Dimension("size must be positive".into()));
    }
    Ok(n)
}

/// An `(A, B)`-bimodule: one action matrix per basis element of each algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSpec {
    pub left: AlgebraSpec,
    pub right: AlgebraSpec,
    pub dim: usize,
    pub left_action: Vec<MatrixJson>,
    pub right_action: Vec<MatrixJson>,
}

impl BimoduleSpec {
    pub fn build(&self) -> Result<Bimodule> {
        let (a, b) = (self.left.build()?, self.right.build()?);
        let f = a.field();
        let n = self.dim;
        let actions = |ms: &[MatrixJson]| ms.iter().map(|m| m.to_matrix(f, n, n)).collect::<Result<Vec<_>>>();
        let m = Bimodule::new(a, b, n, actions(&self.left_action)?, actions(&self.right_action)?)?;
        let report = m.check();
        if let Some(v) = report.violations.first() {
            return Err(Error::Invalid(format!("bimodule: {} at {:?}", v.identity, v.indices)));
        }
        Ok(m)
    }

    pub fn explicit(m: &Bimodule) -> Self {
        BimoduleSpec {
            left: AlgebraSpec::explicit(m.left_algebra()),
            right: AlgebraSpec::explicit(m.right_algebra()),
            dim: m.dim(),
            left_action: m.left_action().iter().map(MatrixJson::from).collect(),
            right_action: m.right_action().iter().map(MatrixJson::from).collect(),
        }
    }
}

/// A coring: a catalog entry, a named construction, or explicit structure maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoringSpec {
    Catalog {
        id: String,
    },
    /// `A` with `Δ(a) = 1 ⊗ a`.
    Trivial {
        algebra: AlgebraSpec,
    },
    Comatrix {
        #[serde(default = "default_field")]
        field: Field,
        n: usize,
    },
    GroupLike {
        #[serde(default = "default_field")]
        field: Field,
        n: usize,
    },
    /// The coalgebra dual to a finite-dimensional algebra.
    DualCoalgebra {
        algebra: AlgebraSpec,
    },
    /// `A ⊗_B A` for the subalgebra `B` spanned by the given vectors.
    Sweedler {
        algebra: AlgebraSpec,
        subalgebra: Vec<Vec<ScalarJson>>,
    },
    Tensor {
        left: Box<CoringSpec>,
        right: Box<CoringSpec>,
    },
    Opposite {
        of: Box<CoringSpec>,
    },
    /// Base change along `k → k[x]/(minpoly)`; coefficients in increasing degree.
    BaseChange {
        of: Box<CoringSpec>,
        minpoly: Vec<i64>,
    },
    Entwined {
        entwining: Box<EntwiningSpec>,
    },
    /// `comult` is a lift of `Δ` into `C ⊗_k C` (row `i * dim + j`), `counit` is `dim A x dim`.
    Explicit {
        #[serde(default)]
        name: Option<String>,
        carrier: BimoduleSpec,
        comult: MatrixJson,
        counit: MatrixJson,
    },
}

impl CoringSpec {
    pub fn build(&self) -> Result<Coring> {
        Ok(match self {
            CoringSpec::Catalog { id } => catalog::catalog()
                .into_iter()
                .find(|e| e.id == id)
                .ok_or_else(|| Error::Parse(format!("no catalog coring {id:?}")))?
                .build()?,
            CoringSpec::Trivial { algebra } => Coring::trivial(&algebra.build()?),
            CoringSpec::Comatrix { field, n } => Coring::comatrix(*field, positive(*n)?),
            CoringSpec::GroupLike { field, n } => Coring::group_like(*field, positive(*n)?),
            CoringSpec::DualCoalgebra { algebra } => Coring::dual_coalgebra(&algebra.build()?),
            CoringSpec::Sweedler { algebra, subalgebra } => {
                let a = algebra.build()?;
                let vs = subalgebra.iter().map(|v| vector(v, a.field())).collect::<Result<Vec<_>>>()?;
                if vs.iter().any(|v| v.len() != a.dim()) {
                    return Err(Error::Dimension("subalgebra vectors must have the algebra's dimension".into()));
                }
                sweedler_coring(&a, &Subspace::span(a.dim(), vs.iter().map(Vec::as_slice))?)?
            }
            CoringSpec::Tensor { left, right } => tensor_coring(&left.build()?, &right.build()?)?,
            CoringSpec::Opposite { of } => opposite_coring(&of.build()?)?,
            CoringSpec::BaseChange { of, minpoly } => {
                base_change(&of.build()?, &field_extension(&Polynomial::from_ints(minpoly), false)?)?
            }
            CoringSpec::Entwined { entwining } => entwined_coring(&entwining.build()?)?,
            CoringSpec::Explicit { name, carrier, comult, counit } => {
                let m = carrier.build()?;
                let (f, d, a) = (m.left_algebra().field(), m.dim(), m.left_algebra().dim());
                let lift = comult.to_matrix(f, d * d, d).map_err(|e| context("comult", e))?;
                let counit = counit.to_matrix(f, a, d).map_err(|e| context("counit", e))?;
                Coring::from_lift(name.clone().unwrap_or_else(|| "C".into()), m, &lift, counit)?
            }
        })
    }

    pub fn explicit(c: &Coring) -> Self {
        CoringSpec::Explicit {
            name: Some(c.name().to_string()),
            carrier: BimoduleSpec::explicit(c.carrier()),
            comult: MatrixJson::from(&c.comult_lift()),
            counit: MatrixJson::from(c.counit()),
        }
    }
}

fn context(what: &str, e: Error) -> Error {
    match e {
        Error::Dimension(m) => Error::Dimension(format!("{what}: {m}")),
        Error::Parse(m) => Error::Parse(format!("{what}: {m}")),
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideJson {
    Left,
    Right,
}

impl From<SideJson> for Side {
    fn from(s: SideJson) -> Side {
        match s {
            SideJson::Left => Side::Left,
            SideJson::Right => Side::Right,
        }
    }
}

impl From<Side> for SideJson {
    fn from(s: Side) -> SideJson {
        match s {
            Side::Left => SideJson::Left,
            Side::Right => SideJson::Right,
        }
    }
}

/// A one-sided comodule. `coaction` lifts into `M ⊗_k C` (right) or `C ⊗_k M` (left).
/// Without a carrier and coaction, the regular comodule `C` is meant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleSpec {
    pub coring: CoringSpec,
    pub side: SideJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<BimoduleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<MatrixJson>,
}

fn lifted_coaction(c: &Coring, side: Side, carrier: Bimodule, lift: &MatrixJson, label: &str) -> Result<Comodule> {
    let (dm, dc) = (carrier.dim(), c.dim());
    let field = c.base().field();
    let lift = lift.to_matrix(field, dm * dc, dm).map_err(|e| context(label, e))?;
    let pres = match side {
        Side::Right => crate::bimodule::TensorPresentation::new(&carrier, c.carrier())?,
        Side::Left => crate::bimodule::TensorPresentation::new(c.carrier(), &carrier)?,
    };
    Comodule::new(c, side, carrier, pres.projection_matrix().mul(&lift))
}

impl ComoduleSpec {
    pub fn build(&self) -> Result<Comodule> {
        let c = self.coring.build()?;
        let side: Side = self.side.into();
        match (&self.carrier, &self.coaction) {
            (None, None) => Ok(Comodule::regular(&c, side)),
            (Some(m), Some(lift)) => lifted_coaction(&c, side, m.build()?, lift, "coaction"),
            _ => Err(Error::Parse("carrier and coaction must be given together".into())),
        }
    }

    pub fn explicit(m: &Comodule) -> Self {
        ComoduleSpec {
            coring: CoringSpec::explicit(m.coring()),
            side: m.side().into(),
            carrier: Some(BimoduleSpec::explicit(m.carrier())),
            coaction: Some(MatrixJson::from(&m.presentation().section_matrix().mul(m.coaction()))),
        }
    }
}

/// A bicomodule: a catalog entry, the regular or square bicomodule of a coring, or
/// explicit coactions lifted into `C ⊗_k M` and `M ⊗_k D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BicomoduleSpec {
    Catalog {
        id: String,
    },
    Regular {
        coring: CoringSpec,
    },
    Square {
        coring: CoringSpec,
    },
    Explicit {
        left_coring: CoringSpec,
        right_coring: CoringSpec,
        carrier: BimoduleSpec,
        lambda: MatrixJson,
        rho: MatrixJson,
    },
}

impl BicomoduleSpec {
    pub fn build(&self) -> Result<Bicomodule> {
        match self {
            BicomoduleSpec::Catalog { id } => catalog::bicomodules()?
                .into_iter()
                .find(|(name, _)| name == id)
                .map(|(_, b)| b)
                .ok_or_else(|| Error::Parse(format!("no catalog bicomodule {id:?}"))),
            BicomoduleSpec::Regular { coring } => Ok(Bicomodule::regular(&coring.build()?)),
            BicomoduleSpec::Square { coring } => Bicomodule::square(&coring.build()?),
            BicomoduleSpec::Explicit { left_coring, right_coring, carrier, lambda, rho } => {
                let (c, d, m) = (left_coring.build()?, right_coring.build()?, carrier.build()?);
                let left = lifted_coaction(&c, Side::Left, m.clone(), lambda, "lambda")?;
                let right = lifted_coaction(&d, Side::Right, m.clone(), rho, "rho")?;
                Bicomodule::new(&c, &d, m, left.coaction().clone(), right.coaction().clone())
            }
        }
    }

    pub fn explicit(b: &Bicomodule) -> Self {
        let lift = |m: &Comodule| MatrixJson::from(&m.presentation().section_matrix().mul(m.coaction()));
        BicomoduleSpec::Explicit {
            left_coring: CoringSpec::explicit(b.left_coring()),
            right_coring: CoringSpec::explicit(b.right_coring()),
            carrier: BimoduleSpec::explicit(b.carrier()),
            lambda: lift(b.left()),
            rho: lift(b.right()),
        }
    }
}

/// An entwining structure `(A, C, ψ)` with `C` a coalgebra over the ground field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EntwiningSpec {
    Catalog {
        id: String,
    },
    /// `ψ(c ⊗ a) = a ⊗ c`.
    Flip {
        algebra: AlgebraSpec,
        coalgebra: CoringSpec,
    },
    /// `ψ(g_i ⊗ a) = a ⊗ g_{i + deg a}` over the group-like coalgebra of `Z_n`.
    CyclicGrading {
        algebra: AlgebraSpec,
        degrees: Vec<usize>,
        n: usize,
    },
    /// Column `c * dim A + a` of `psi` is `ψ(c ⊗ a)` in the basis `a' * dim C + c'`.
    Explicit {
        algebra: AlgebraSpec,
        coalgebra: CoringSpec,
        psi: MatrixJson,
    },
}

impl EntwiningSpec {
    pub fn build(&self) -> Result<Entwining> {
        match self {
            EntwiningSpec::Catalog { id } => catalog::entwinings()?
                .into_iter()
                .find(|(name, _)| name == id)
                .map(|(_, e)| e)
                .ok_or_else(|| Error::Parse(format!("no catalog entwining {id:?}"))),
            EntwiningSpec::Flip { algebra, coalgebra } => Ok(Entwining::flip(&algebra.build()?, &coalgebra.build()?)),
            EntwiningSpec::CyclicGrading { algebra, degrees, n } => {
                Entwining::cyclic_grading(&algebra.build()?, degrees, positive(*n)?)
            }
            EntwiningSpec::Explicit { algebra, coalgebra, psi } => {
                let (a, c) = (algebra.build()?, coalgebra.build()?);
                let n = a.dim() * c.dim();
                let psi = psi.to_matrix(a.field(), n, n).map_err(|e| context("psi", e))?;
                Entwining::new(a, c, psi)
            }
        }
    }

    pub fn explicit(e: &Entwining) -> Self {
        EntwiningSpec::Explicit {
            algebra: AlgebraSpec::explicit(&e.algebra),
            coalgebra: CoringSpec::explicit(&e.coalgebra),
            psi: MatrixJson::from(&e.psi),
        }
    }
}

/// Parses `text` as `T`; errors carry the source label and the line/column.
pub fn from_json<T: serde::de::DeserializeOwned>(text: &str, source: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{source}:{}:{}: {e}", e.line(), e.column())))
}

/// Reads and parses a JSON file.
pub fn read_json<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    from_json(&text, &path.display().to_string())
}

/// Canonical pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests;
