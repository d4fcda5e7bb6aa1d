//! The main equivalence, evaluated on finite witness sets: for a coring `C` over a
//! separable algebra in characteristic zero, the following agree:
//! (i) `C` is coseparable; (ii) `C ⊗_k K` is semisimple for field extensions `K`;
//! (iii) `C ⊗_k D` is semisimple for semisimple corings `D`;
//! (iv) `C ⊗_k C°` is semisimple over `A ⊗_k A°`.
//! Independently, (i) is compared with separability of the algebra `C*`.

use serde::Serialize;

use super::{base_change, coseparability, dual_ring, is_semisimple_coring, opposite_coring, tensor_coring, Coring, Side};
use crate::algebra::{field_extension, Algebra, FieldExtension, Polynomial};
use crate::error::Result;
use crate::exactlin::Field;

/// Largest carrier dimension of a derived coring that the harness will evaluate.
pub const DEFAULT_SIZE_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub witness: String,
    /// `None` when skipped because the derived coring exceeds the size limit.
    pub semisimple: Option<bool>,
    pub carrier_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub coring: String,
    /// Characteristic zero and a separable base algebra.
    pub applicable: bool,
    pub note: Option<String>,
    /// (i)
    pub coseparable: bool,
    /// (ii)
    pub base_changes: Vec<Verdict>,
    /// (iii)
    pub tensor_products: Vec<Verdict>,
    /// (iv)
    pub with_opposite: Verdict,
    /// Whether `C*` has a separability idempotent.
    pub right_dual_separable: bool,
    /// All evaluated verdicts (i)–(iv) coincide. Only asserted when applicable.
    pub equivalent: bool,
    /// (i) agrees with separability of `C*`.
    pub cross_check: bool,
}

impl TheoremReport {
    /// True when the report confirms the theorem (or the theorem does not apply).
    pub fn passes(&self) -> bool {
        !self.applicable || (self.equivalent && self.cross_check)
    }

    pub fn skipped(&self) -> usize {
        self.base_changes
            .iter()
            .chain(&self.tensor_products)
            .chain(std::iter::once(&self.with_opposite))
            .filter(|v| v.semisimple.is_none())
            .count()
    }
}

pub fn default_extensions() -> Vec<FieldExtension> {
    [&[1, 0, 1][..], &[-2, 0, 1], &[-2, 0, 0, 1]]
        .iter()
        .map(|c| field_extension(&Polynomial::from_ints(c), false).expect("irreducible"))
        .collect()
}

pub fn default_test_corings(field: Field) -> Vec<Coring> {
    vec![Coring::trivial(&Algebra::ground(field)), Coring::comatrix(field, 2), Coring::group_like(field, 2)]
}

fn verdict(witness: String, carrier_dim: usize, limit: usize, build: impl FnOnce() -> Result<Coring>) -> Result<Verdict> {
    if carrier_dim > limit {
        return Ok(Verdict { witness, semisimple: None, carrier_dim });
    }
    let c = build()?;
    Ok(Verdict { witness, semisimple: Some(is_semisimple_coring(&c)?.semisimple), carrier_dim })
}

pub fn main_theorem_report(
    c: &Coring,
    extensions: &[FieldExtension],
    test_corings: &[Coring],
    size_limit: usize,
) -> Result<TheoremReport> {
    let a = c.base();
    let char_zero = a.field().characteristic() == 0;
    let separable = a.is_separable();
    let applicable = char_zero && separable;
    let note = match (char_zero, separable) {
        (true, true) => None,
        (false, _) => Some("theorem not applicable: positive characteristic".to_string()),
        (true, false) => Some(format!("theorem not applicable: hypothesis fails, {} is not separable", a.name())),
    };
    let coseparable = coseparability(c)?.is_some();
    let d = c.dim();
    let mut base_changes = Vec::new();
    for k in extensions {
        let name = format!("K = Q[x]/({})", k.minpoly);
        base_changes.push(verdict(name, d * k.degree(), size_limit, || base_change(c, k))?);
    }
    let mut tensor_products = Vec::new();
    for t in test_corings {
        tensor_products.push(verdict(t.name().to_string(), d * t.dim(), size_limit, || tensor_coring(c, t))?);
    }
    let with_opposite = verdict("C°".to_string(), d * d, size_limit, || tensor_coring(c, &opposite_coring(c)?))?;
    let right_dual_separable = dual_ring(c, Side::Right)?.algebra.is_separable();
    let evaluated: Vec<bool> = base_changes
        .iter()
        .chain(&tensor_products)
        .chain(std::iter::once(&with_opposite))
        .filter_map(|v| v.semisimple)
        .collect();
    let equivalent = evaluated.iter().all(|&v| v == coseparable);
    Ok(TheoremReport {
        coring: c.name().to_string(),
        applicable,
        note,
        coseparable,
        base_changes,
        tensor_products,
        with_opposite,
        right_dual_separable,
        equivalent,
        cross_check: coseparable == right_dual_separable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn comatrix_satisfies_all_conditions() {
        let r = main_theorem_report(&Coring::comatrix(Q, 2), &default_extensions(), &default_test_corings(Q), DEFAULT_SIZE_LIMIT)
            .unwrap();
        assert!(r.applicable && r.coseparable && r.equivalent && r.cross_check);
        assert_eq!(r.skipped(), 0);
        assert!(r.right_dual_separable);
    }

    #[test]
    fn dual_of_dual_numbers_fails_all_conditions() {
        let c = Coring::dual_coalgebra(&Algebra::truncated_polynomials(Q, 2));
        let r = main_theorem_report(&c, &default_extensions(), &default_test_corings(Q), DEFAULT_SIZE_LIMIT).unwrap();
        assert!(r.applicable && !r.coseparable && r.equivalent && r.passes());
        assert_eq!(r.with_opposite.semisimple, Some(false));
    }

    #[test]
    fn inseparable_base_is_not_applicable() {
        let c = Coring::trivial(&Algebra::truncated_polynomials(Q, 2));
        let r = main_theorem_report(&c, &default_extensions(), &default_test_corings(Q), DEFAULT_SIZE_LIMIT).unwrap();
        assert!(!r.applicable);
        assert!(r.note.as_deref().unwrap().contains("not separable"));
        assert!(r.coseparable);
        assert_eq!(r.with_opposite.semisimple, Some(false));
        assert!(!r.equivalent);
    }

    #[test]
    fn size_limit_skips_large_derived_corings() {
        let r = main_theorem_report(&Coring::comatrix(Q, 2), &default_extensions(), &default_test_corings(Q), 8).unwrap();
        // x³ − 2 (12), comatrix ⊗ comatrix (16) and C ⊗ C° (16)
        assert_eq!(r.skipped(), 3);
        assert!(r.passes());
    }
}
