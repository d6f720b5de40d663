use super::GroupError;
use crate::exact::Matrix;
use crate::scalar::Scalar;

/// A member of one of the two supported group models.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement<T> {
    /// A unimodular integer matrix.
    Matrix(Matrix<T>),
    /// `(w, k)` in `Z^r ⋊_A Z`, standing for `w · t^k`.
    ///
    /// Interoperability note: this is the matrix `[[A^k, w], [0, 1]]`.
    Split { vector: Vec<T>, exponent: i64 },
}

impl<T: Scalar> GroupElement<T> {
    pub fn split(vector: Vec<T>, exponent: i64) -> Self {
        GroupElement::Split { vector, exponent }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            GroupElement::Matrix(_) => "matrix",
            GroupElement::Split { .. } => "split",
        }
    }

    /// The `t`-exponent of a split element.
    pub fn exponent(&self) -> Option<i64> {
        match self {
            GroupElement::Split { exponent, .. } => Some(*exponent),
            GroupElement::Matrix(_) => None,
        }
    }

    /// The lattice part of a split element.
    pub fn vector(&self) -> Option<&[T]> {
        match self {
            GroupElement::Split { vector, .. } => Some(vector),
            GroupElement::Matrix(_) => None,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Matrix(m) => m.is_identity(),
            GroupElement::Split { vector, exponent } => {
                *exponent == 0 && vector.iter().all(|x| x.is_zero())
            }
        }
    }

    /// Injective byte encoding: kind tag, dimensions, then every integer as
    /// a sign byte and a length-prefixed big-endian magnitude.
    pub fn canonical_encoding(&self) -> Vec<u8> {
        let mut out = Vec::new();
        match self {
            GroupElement::Matrix(m) => {
                out.push(0x4d);
                out.extend_from_slice(&(m.rows() as u32).to_be_bytes());
                out.extend_from_slice(&(m.cols() as u32).to_be_bytes());
                for x in m.entries() {
                    encode_scalar(x, &mut out);
                }
            }
            GroupElement::Split { vector, exponent } => {
                out.push(0x53);
                out.extend_from_slice(&(vector.len() as u32).to_be_bytes());
                for x in vector {
                    encode_scalar(x, &mut out);
                }
                encode_scalar(exponent, &mut out);
            }
        }
        out
    }
}

fn encode_scalar<S: Scalar>(x: &S, out: &mut Vec<u8>) {
    let (sign, mag) = x.sign_magnitude_be();
    out.push(sign.tag());
    out.extend_from_slice(&(mag.len() as u32).to_be_bytes());
    out.extend_from_slice(&mag);
}

/// Equality key for deduplication.
pub fn canonical_encode<T: Scalar>(g: &GroupElement<T>) -> Vec<u8> {
    g.canonical_encoding()
}

/// The ambient group model together with the data its multiplication needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind<T> {
    /// `Z^r ⋊_A Z`: `(w₁,k₁)·(w₂,k₂) = (w₁ + A^{k₁} w₂, k₁ + k₂)`.
    SplitExtension { action: Matrix<T>, inverse: Matrix<T> },
    /// Unimodular `degree x degree` matrices under multiplication.
    MatrixGroup { degree: usize },
}

impl<T: Scalar> GroupKind<T> {
    pub fn split_extension(action: Matrix<T>) -> Result<Self, GroupError> {
        let inverse = action.inverse()?;
        Ok(GroupKind::SplitExtension { action, inverse })
    }

    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::SplitExtension { .. } => "split_extension",
            GroupKind::MatrixGroup { .. } => "matrix_group",
        }
    }

    /// Rank of the lattice (split) or matrix degree.
    pub fn dimension(&self) -> usize {
        match self {
            GroupKind::SplitExtension { action, .. } => action.rows(),
            GroupKind::MatrixGroup { degree } => *degree,
        }
    }

    pub fn identity(&self) -> GroupElement<T> {
        match self {
            GroupKind::SplitExtension { action, .. } => {
                GroupElement::split(vec![T::zero(); action.rows()], 0)
            }
            GroupKind::MatrixGroup { degree } => GroupElement::Matrix(Matrix::identity(*degree)),
        }
    }

    /// `A^k v`.
    pub fn act(&self, k: i64, v: &[T]) -> Result<Vec<T>, GroupError> {
        let GroupKind::SplitExtension { action, inverse } = self else {
            return Err(GroupError::KindMismatch("lattice action on a matrix group".into()));
        };
        let m = if k >= 0 { action } else { inverse };
        let mut out = v.to_vec();
        for _ in 0..k.unsigned_abs() {
            out = m.mul_vec(&out)?;
        }
        Ok(out)
    }

    /// Checks that `g` belongs to this model with matching dimensions.
    pub fn check(&self, g: &GroupElement<T>) -> Result<(), GroupError> {
        match (self, g) {
            (GroupKind::SplitExtension { action, .. }, GroupElement::Split { vector, .. }) => {
                if vector.len() != action.rows() {
                    return Err(GroupError::DimensionMismatch(format!(
                        "vector of length {} in a rank {} split extension",
                        vector.len(),
                        action.rows()
                    )));
                }
                Ok(())
            }
            (GroupKind::MatrixGroup { degree }, GroupElement::Matrix(m)) => {
                if m.rows() != *degree || m.cols() != *degree {
                    return Err(GroupError::DimensionMismatch(format!(
                        "{}x{} matrix in a degree {degree} matrix group",
                        m.rows(),
                        m.cols()
                    )));
                }
                Ok(())
            }
            _ => Err(GroupError::KindMismatch(format!(
                "{} element in a {}",
                g.kind_name(),
                self.name()
            ))),
        }
    }

    pub fn compose(&self, g: &GroupElement<T>, h: &GroupElement<T>) -> Result<GroupElement<T>, GroupError> {
        self.check(g)?;
        self.check(h)?;
        match (g, h) {
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => Ok(GroupElement::Matrix(a.mul(b)?)),
            (
                GroupElement::Split { vector: w1, exponent: k1 },
                GroupElement::Split { vector: w2, exponent: k2 },
            ) => {
                let moved = self.act(*k1, w2)?;
                let vector = w1.iter().zip(moved).map(|(a, b)| a.clone() + b).collect();
                Ok(GroupElement::split(vector, k1 + k2))
            }
            _ => unreachable!("checked above"),
        }
    }

    pub fn invert(&self, g: &GroupElement<T>) -> Result<GroupElement<T>, GroupError> {
        self.check(g)?;
        match g {
            GroupElement::Matrix(m) => Ok(GroupElement::Matrix(m.inverse()?)),
            GroupElement::Split { vector, exponent } => {
                // (w, k)^{-1} = (-A^{-k} w, -k)
                let moved = self.act(-exponent, vector)?;
                Ok(GroupElement::split(moved.into_iter().map(|x| -x).collect(), -exponent))
            }
        }
    }

    /// `[g, h] = g h g⁻¹ h⁻¹`.
    pub fn commutator(&self, g: &GroupElement<T>, h: &GroupElement<T>) -> Result<GroupElement<T>, GroupError> {
        let gh = self.compose(g, h)?;
        let g_inv = self.invert(g)?;
        let h_inv = self.invert(h)?;
        self.compose(&self.compose(&gh, &g_inv)?, &h_inv)
    }

    /// Precomputes left multiplication by `s`, for repeated use in enumeration.
    pub fn left_multiplier(&self, s: &GroupElement<T>) -> Result<LeftMultiplier<T>, GroupError> {
        self.check(s)?;
        Ok(match s {
            GroupElement::Matrix(m) => LeftMultiplier::Matrix(m.clone()),
            GroupElement::Split { vector, exponent } => LeftMultiplier::Split {
                vector: vector.clone(),
                exponent: *exponent,
                power: match self {
                    GroupKind::SplitExtension { action, .. } => action.pow(*exponent)?,
                    GroupKind::MatrixGroup { .. } => unreachable!("checked above"),
                },
            },
        })
    }
}

/// Left multiplication `g ↦ s·g` with the needed matrix power cached.
#[derive(Clone, Debug)]
pub enum LeftMultiplier<T> {
    Matrix(Matrix<T>),
    Split { vector: Vec<T>, exponent: i64, power: Matrix<T> },
}

impl<T: Scalar> LeftMultiplier<T> {
    /// `s·g`; `g` must come from the same group.
    pub fn apply(&self, g: &GroupElement<T>) -> GroupElement<T> {
        match (self, g) {
            (LeftMultiplier::Matrix(s), GroupElement::Matrix(m)) => {
                GroupElement::Matrix(s.mul(m).expect("dimensions checked at construction"))
            }
            (LeftMultiplier::Split { vector, exponent, power }, GroupElement::Split { vector: w, exponent: k }) => {
                let moved = power.mul_vec(w).expect("dimensions checked at construction");
                let v = vector.iter().zip(moved).map(|(a, b)| a.clone() + b).collect();
                GroupElement::split(v, exponent + k)
            }
            _ => panic!("left multiplier applied to an element of another group"),
        }
    }
}
