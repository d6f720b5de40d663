use super::{ExactError, Matrix};
use crate::scalar::Scalar;

/// A sublattice of `Z^r`, stored as its row-style Hermite normal form basis.
///
/// Pivots are positive, entries above each pivot lie in `[0, pivot)`, and
/// the basis rows are linearly independent, so two lattices are equal iff
/// their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice<T> {
    ambient_rank: usize,
    basis: Vec<Vec<T>>,
}

/// The saturation of the span of `vectors` in `Z^ambient_rank`.
pub fn hnf_saturate<T: Scalar>(
    vectors: &[Vec<T>],
    ambient_rank: usize,
) -> Result<Lattice<T>, ExactError> {
    Lattice::span(vectors, ambient_rank)?.saturate()
}

impl<T: Scalar> Lattice<T> {
    /// The lattice spanned by `vectors` (not saturated).
    pub fn span(vectors: &[Vec<T>], ambient_rank: usize) -> Result<Self, ExactError> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_rank) {
            return Err(ExactError::DimensionMismatch(format!(
                "vector of length {} in ambient rank {ambient_rank}",
                bad.len()
            )));
        }
        let mut rows = vectors.to_vec();
        let rank = echelon(&mut rows, ambient_rank, None);
        rows.truncate(rank);
        Ok(Self {
            ambient_rank,
            basis: rows,
        })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Membership by back-substitution against the HNF basis.
    pub fn contains(&self, v: &[T]) -> bool {
        if v.len() != self.ambient_rank {
            return false;
        }
        let mut rest = v.to_vec();
        for row in &self.basis {
            let p = row
                .iter()
                .position(|c| !c.is_zero())
                .expect("basis rows are nonzero");
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x = x.clone() - q.clone() * b.clone();
            }
        }
        rest.iter().all(|x| x.is_zero())
    }

    /// Integer vectors orthogonal to every basis vector, as a basis of that
    /// (always saturated) lattice.
    fn orthogonal_complement(&self) -> Vec<Vec<T>> {
        let r = self.ambient_rank;
        let k = self.rank();
        let mut work: Vec<Vec<T>> = (0..r)
            .map(|i| self.basis.iter().map(|b| b[i].clone()).collect())
            .collect();
        let mut transform: Vec<Vec<T>> = Matrix::<T>::identity(r).to_rows();
        let rank = echelon(&mut work, k, Some(&mut transform));
        transform.split_off(rank)
    }

    /// Smallest sublattice containing `self` with torsion-free quotient.
    pub fn saturate(&self) -> Result<Self, ExactError> {
        let r = self.ambient_rank;
        if self.rank() == 0 || self.rank() == r {
            let basis = if self.rank() == 0 {
                Vec::new()
            } else {
                Matrix::<T>::identity(r).to_rows()
            };
            return Ok(Self {
                ambient_rank: r,
                basis,
            });
        }
        let complement = Self {
            ambient_rank: r,
            basis: self.orthogonal_complement(),
        };
        Self::span(&complement.orthogonal_complement(), r)
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate().is_ok_and(|s| &s == self)
    }

    /// Quotient map onto `Z^(r-k)` for a saturated lattice of rank `k`.
    ///
    /// The returned matrix `Q` is `(r-k) x r`, surjective over the integers,
    /// with kernel exactly this lattice. Returns `None` when the lattice is
    /// full rank or not saturated.
    pub fn quotient_map(&self) -> Option<Matrix<T>> {
        if self.rank() == self.ambient_rank || !self.is_saturated() {
            return None;
        }
        Matrix::from_rows(self.orthogonal_complement()).ok()
    }

    /// Matrix `Ā` with `Q·A = Ā·Q`, the action induced by `action` on the
    /// quotient by this (saturated, `action`-invariant) lattice.
    pub fn induced_quotient_action(&self, action: &Matrix<T>) -> Result<Matrix<T>, ExactError> {
        let q = self.quotient_map().ok_or_else(|| {
            ExactError::DimensionMismatch("quotient by a full-rank or unsaturated lattice".into())
        })?;
        let right_inv = right_inverse(&q)?;
        let induced = q.mul(action)?.mul(&right_inv)?;
        // A must preserve the lattice for Ā to be well defined.
        for b in &self.basis {
            let image = action.mul_vec(b)?;
            if !self.contains(&image) {
                return Err(ExactError::DimensionMismatch(
                    "action does not preserve the lattice".into(),
                ));
            }
        }
        Ok(induced)
    }
}

/// Integer right inverse `R` (`Q·R = I`) of a full-row-rank matrix whose
/// rows span a saturated lattice.
fn right_inverse<T: Scalar>(q: &Matrix<T>) -> Result<Matrix<T>, ExactError> {
    let (m, r) = (q.rows(), q.cols());
    let mut work = q.transpose().to_rows();
    let mut transform = Matrix::<T>::identity(r).to_rows();
    let rank = echelon(&mut work, m, Some(&mut transform));
    if rank != m {
        return Err(ExactError::DimensionMismatch(
            "quotient map is not full row rank".into(),
        ));
    }
    // transform · Qᵀ = [H; 0], so Q · transformᵀ = [Hᵀ | 0].
    let u = Matrix::from_rows(transform)?.transpose();
    let h_t = Matrix::from_rows(work[..m].to_vec())?.transpose();
    let h_inv = h_t.inverse()?;
    let u_left = Matrix::from_rows((0..r).map(|i| u.row(i)[..m].to_vec()).collect())?;
    u_left.mul(&h_inv)
}

/// Row-style Hermite reduction on the first `pivot_cols` columns.
///
/// Rows are transformed in place by unimodular row operations (mirrored on
/// `transform` when given). Returns the number of pivot rows; rows past that
/// count are zero on the first `pivot_cols` columns.
fn echelon<T: Scalar>(
    rows: &mut [Vec<T>],
    pivot_cols: usize,
    mut transform: Option<&mut Vec<Vec<T>>>,
) -> usize {
    let mut pr = 0;
    for col in 0..pivot_cols {
        if pr == rows.len() {
            break;
        }
        for i in pr + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let a = rows[pr][col].clone();
            let b = rows[i][col].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (ag, bg) = (a / g.clone(), b / g);
            combine(rows, pr, i, &x, &y, &ag, &bg);
            if let Some(t) = transform.as_deref_mut() {
                combine(t, pr, i, &x, &y, &ag, &bg);
            }
        }
        if rows[pr][col].is_zero() {
            continue;
        }
        if rows[pr][col].is_negative() {
            negate(&mut rows[pr]);
            if let Some(t) = transform.as_deref_mut() {
                negate(&mut t[pr]);
            }
        }
        let p = rows[pr][col].clone();
        for i in 0..pr {
            let q = rows[i][col].div_floor(&p);
            if q.is_zero() {
                continue;
            }
            sub_multiple(rows, i, pr, &q);
            if let Some(t) = transform.as_deref_mut() {
                sub_multiple(t, i, pr, &q);
            }
        }
        pr += 1;
    }
    pr
}

/// `(r_p, r_i) <- (x r_p + y r_i, bg r_p - ag r_i)`, a determinant −1 step.
fn combine<T: Scalar>(m: &mut [Vec<T>], p: usize, i: usize, x: &T, y: &T, ag: &T, bg: &T) {
    for c in 0..m[p].len() {
        let (u, v) = (m[p][c].clone(), m[i][c].clone());
        m[p][c] = x.clone() * u.clone() + y.clone() * v.clone();
        m[i][c] = bg.clone() * u - ag.clone() * v;
    }
}

fn negate<T: Scalar>(row: &mut [T]) {
    for x in row {
        *x = -x.clone();
    }
}

fn sub_multiple<T: Scalar>(m: &mut [Vec<T>], target: usize, source: usize, q: &T) {
    for c in 0..m[target].len() {
        let s = m[source][c].clone();
        m[target][c] = m[target][c].clone() - q.clone() * s;
    }
}
