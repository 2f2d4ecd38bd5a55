//! Dictionary learning (K-SVD) and sparse coding (orthogonal matching pursuit)
//! over vectorized grayscale image patches.

mod io;
mod ksvd;
mod omp;
mod patches;

pub use io::{load_dictionary, load_dictionary_json, save_dictionary, save_dictionary_json};
pub use ksvd::{ksvd_learn, ksvd_update_atom, KsvdConfig, KsvdReport};
pub use omp::omp;
pub use patches::sample_patches;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// A vectorized square grayscale patch, mean-subtracted by convention.
#[derive(Debug, Clone, PartialEq)]
pub struct Patch {
    pub values: DVector<f64>,
    pub side: usize,
}

impl Patch {
    pub fn new(values: DVector<f64>, side: usize) -> Result<Self> {
        if values.len() != side * side {
            return Err(Error::DimensionMismatch {
                expected: side * side,
                got: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("patch values"));
        }
        Ok(Patch { values, side })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }
}

/// A learned basis of unit-norm atoms. Column `i` of `atoms` is atom `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dictionary {
    atoms: DMatrix<f64>,
    patch_side: usize,
}

impl Dictionary {
    /// Wrap an `m x k` atom matrix. Columns must have unit L2 norm.
    pub fn new(atoms: DMatrix<f64>, patch_side: usize) -> Result<Self> {
        if atoms.ncols() == 0 {
            return Err(Error::invalid("dictionary must have at least one atom"));
        }
        if atoms.nrows() != patch_side * patch_side {
            return Err(Error::DimensionMismatch {
                expected: patch_side * patch_side,
                got: atoms.nrows(),
            });
        }
        for j in 0..atoms.ncols() {
            let n = atoms.column(j).norm();
            if !n.is_finite() || (n - 1.0).abs() > 1e-9 {
                return Err(Error::invalid(format!(
                    "atom {j} is not unit-norm (norm = {n})"
                )));
            }
        }
        Ok(Dictionary { atoms, patch_side })
    }

    pub fn atoms(&self) -> &DMatrix<f64> {
        &self.atoms
    }

    pub fn atom(&self, i: usize) -> nalgebra::DVectorView<'_, f64> {
        self.atoms.column(i)
    }

    /// Patch dimension `m` (`patch_side` squared).
    pub fn dim(&self) -> usize {
        self.atoms.nrows()
    }

    /// Number of atoms `k`.
    pub fn len(&self) -> usize {
        self.atoms.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.ncols() == 0
    }

    pub fn patch_side(&self) -> usize {
        self.patch_side
    }
}

/// Sparse coefficient vector stored as `(atom index, coefficient)` pairs.
///
/// At most `sparsity_budget` entries; indices are unique, in range, and no
/// explicit zeros are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseCode {
    entries: Vec<(usize, f64)>,
    sparsity_budget: usize,
}

impl SparseCode {
    pub fn new(entries: Vec<(usize, f64)>, sparsity_budget: usize, num_atoms: usize) -> Result<Self> {
        if entries.len() > sparsity_budget {
            return Err(Error::invalid(format!(
                "{} entries exceed sparsity budget {sparsity_budget}",
                entries.len()
            )));
        }
        let mut seen = vec![false; num_atoms];
        for &(idx, coef) in &entries {
            if idx >= num_atoms {
                return Err(Error::invalid(format!("atom index {idx} out of range")));
            }
            if seen[idx] {
                return Err(Error::invalid(format!("duplicate atom index {idx}")));
            }
            seen[idx] = true;
            if !coef.is_finite() {
                return Err(Error::NonFinite("sparse coefficient"));
            }
            if coef == 0.0 {
                return Err(Error::invalid("explicit zero coefficient"));
            }
        }
        Ok(SparseCode {
            entries,
            sparsity_budget,
        })
    }

    pub fn empty(sparsity_budget: usize) -> Self {
        SparseCode {
            entries: Vec::new(),
            sparsity_budget,
        }
    }

    pub fn entries(&self) -> &[(usize, f64)] {
        &self.entries
    }

    pub fn sparsity_budget(&self) -> usize {
        self.sparsity_budget
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Dense reconstruction `D * alpha`.
    pub fn reconstruct(&self, dict: &Dictionary) -> DVector<f64> {
        let mut out = DVector::zeros(dict.dim());
        for &(idx, coef) in &self.entries {
            out.axpy(coef, &dict.atom(idx), 1.0);
        }
        out
    }
}

/// Flip the sign of a vector so its largest-magnitude component is positive.
/// Returns the applied sign (`1.0` or `-1.0`).
pub(crate) fn canonicalize_sign(v: &mut DVector<f64>) -> f64 {
    let mut best = 0usize;
    let mut best_abs = f64::NEG_INFINITY;
    for (i, &x) in v.iter().enumerate() {
        if x.abs() > best_abs {
            best_abs = x.abs();
            best = i;
        }
    }
    if v[best] < 0.0 {
        v.neg_mut();
        -1.0
    } else {
        1.0
    }
}

/// Mean reconstruction error `(1/n) * sum ||x_i - D a_i||^2`.
pub fn reconstruction_mse(samples: &DMatrix<f64>, dict: &Dictionary, codes: &[SparseCode]) -> f64 {
    assert_eq!(samples.ncols(), codes.len());
    let mut total = 0.0;
    for (i, code) in codes.iter().enumerate() {
        let mut residual = samples.column(i).clone_owned();
        for &(idx, coef) in code.entries() {
            residual.axpy(-coef, &dict.atom(idx), 1.0);
        }
        total += residual.norm_squared();
    }
    total / samples.ncols() as f64
}
