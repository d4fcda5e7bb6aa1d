use super::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{unit_vec, LinearSystem, Matrix, RowReducer, Scalar};
use crate::linear_maps::add_intertwining_equations;
use crate::report::CheckReport;

/// A finite-dimensional left module: one action matrix per algebra basis element.
/// Right modules are left modules over the opposite algebra with the same matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    algebra: Algebra,
    dim: usize,
    action: Vec<Matrix>,
}

/// Greedy module generators: scans the standard basis and keeps each vector not yet
/// in the submodule generated so far. `action[i]` is the action of the i-th algebra
/// basis element (for right modules, pass the right-action matrices).
pub fn generators(dim: usize, action: &[Matrix]) -> Vec<usize> {
    let mut span = RowReducer::new(dim);
    let mut gens = Vec::new();
    for i in 0..dim {
        let e = unit_vec(dim, i);
        if span.contains(&e) {
            continue;
        }
        gens.push(i);
        for a in action {
            span.insert_dense(&a.col(i));
        }
        if span.rank() == dim {
            break;
        }
    }
    gens
}

impl LeftModule {
    pub fn new(algebra: Algebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() || action.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(Error::Dimension(format!(
                "module of dim {dim} over an algebra of dim {} needs {} square actions",
                algebra.dim(),
                algebra.dim()
            )));
        }
        Ok(LeftModule { algebra, dim, action })
    }

    pub fn regular(algebra: &Algebra) -> Self {
        LeftModule { algebra: algebra.clone(), dim: algebra.dim(), action: algebra.left_regular() }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn act(&self, a: &[Scalar]) -> Matrix {
        Algebra::linear_combination(a, &self.action)
    }

    /// `action(e_i)·action(e_j) = action(e_i e_j)` and `action(1) = id`.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::default();
        if self.act(self.algebra.unit()) != Matrix::identity(self.dim) {
            report.push("module unit", Vec::<usize>::new());
        }
        let d = self.algebra.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.action[i].mul(&self.action[j]);
                if lhs != self.act(self.algebra.basis_product(i, j)) {
                    report.push("module associativity", [i, j]);
                }
            }
        }
        report
    }

    /// Whether the canonical surjection from a free module onto `self` splits
    /// `A`-linearly. The free module has one summand per greedy generator.
    pub fn is_projective(&self) -> bool {
        self.splitting().is_some()
    }

    /// A section `s: M → A^r` of `π: A^r → M`, `(a_j) ↦ Σ a_j·g_j`, together with the
    /// generator indices. `s` has shape `(r·dim A) x dim M`, row index `j * dim A + t`.
    pub fn splitting(&self) -> Option<(Vec<usize>, Matrix)> {
        let gens = generators(self.dim, &self.action);
        let (da, dm, r) = (self.algebra.dim(), self.dim, gens.len());
        let free_dim = r * da;
        let pi = self.surjection(&gens);
        let mut sys = LinearSystem::new(free_dim * dm);
        let reg = self.algebra.left_regular();
        let id_r = Matrix::identity(r);
        for (t, act) in self.action.iter().enumerate() {
            add_intertwining_equations(&mut sys, act, &id_r.kron(&reg[t]));
        }
        // π·s = id
        for i in 0..dm {
            for c in 0..dm {
                let terms: Vec<(usize, Scalar)> = (0..free_dim)
                    .filter(|&k| !pi[(i, k)].is_zero())
                    .map(|k| (k * dm + c, pi[(i, k)].clone()))
                    .collect();
                let rhs = if i == c { Scalar::one() } else { Scalar::zero() };
                sys.add_equation(&terms, &rhs);
            }
        }
        let sol = sys.solve()?;
        Some((gens, Matrix::from_vec(free_dim, dm, sol.particular).expect("shape")))
    }

    /// `π: A^r → M`, column `j * dim A + t` is `e_t · g_j`.
    pub fn surjection(&self, gens: &[usize]) -> Matrix {
        let da = self.algebra.dim();
        let cols: Vec<Vec<Scalar>> =
            gens.iter().flat_map(|&g| (0..da).map(move |t| self.action[t].col(g))).collect();
        Matrix::from_columns(self.dim, &cols)
    }
}
