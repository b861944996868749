use serde_json::{json, Value};

use crate::element::GeneratorIndex;
use crate::error::AlgebraError;
use crate::linalg::{self, Matrix};
use crate::scalar::Real;

/// Antisymmetric real form `E` on generators `1..=n`, stored as the strict upper triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingForm<R: Real> {
    n: usize,
    // row-major upper triangle: (1,2),(1,3),...,(1,n),(2,3),...
    upper: Vec<R>,
}

impl<R: Real> PairingForm<R> {
    pub fn zero(n: usize) -> Self {
        PairingForm { n, upper: vec![R::zero(); n * n.saturating_sub(1) / 2] }
    }

    /// `E(f_{2k-1}, f_{2k}) = 1`, all other upper entries zero.
    pub fn standard_symplectic(pairs: usize) -> Self {
        let mut e = Self::zero(2 * pairs);
        for k in 0..pairs as u32 {
            e.set(2 * k + 1, 2 * k + 2, R::one()).expect("in range");
        }
        e
    }

    pub fn from_fn<F: FnMut(GeneratorIndex, GeneratorIndex) -> R>(n: usize, mut f: F) -> Self {
        let mut e = Self::zero(n);
        for i in 1..=n as u32 {
            for j in i + 1..=n as u32 {
                let k = e.slot(i, j);
                e.upper[k] = f(i, j);
            }
        }
        e
    }

    /// Builds from a full matrix, checking antisymmetry against the field tolerance.
    pub fn from_matrix(m: &Matrix<R>) -> Result<Self, AlgebraError> {
        let n = m.len();
        let tol = R::tolerance();
        for i in 0..n {
            if m[i].len() != n {
                return Err(AlgebraError::Parse("pairing matrix is not square".into()));
            }
            if m[i][i].abs() > tol {
                return Err(AlgebraError::DiagonalPairing { i: i as u32 + 1 });
            }
            for j in 0..i {
                if !(m[i][j].clone() + m[j][i].clone()).abs().le(&tol) {
                    return Err(AlgebraError::Parse(format!(
                        "pairing matrix not antisymmetric at ({}, {})",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| m[i as usize - 1][j as usize - 1].clone()))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn slot(&self, i: GeneratorIndex, j: GeneratorIndex) -> usize {
        let (i, j) = (i as usize - 1, j as usize - 1);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    fn check(&self, i: GeneratorIndex) -> Result<(), AlgebraError> {
        if i == 0 || i as usize > self.n {
            Err(AlgebraError::IndexOutOfRange { index: i, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Sets `E(i,j)`; `E(j,i)` follows by antisymmetry.
    pub fn set(&mut self, i: GeneratorIndex, j: GeneratorIndex, v: R) -> Result<(), AlgebraError> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            if v.is_zero() {
                return Ok(());
            }
            return Err(AlgebraError::DiagonalPairing { i });
        }
        if i < j {
            let k = self.slot(i, j);
            self.upper[k] = v;
        } else {
            let k = self.slot(j, i);
            self.upper[k] = -v;
        }
        Ok(())
    }

    /// `E(i,j)`. Labels outside `1..=n` pair to zero.
    pub fn get(&self, i: GeneratorIndex, j: GeneratorIndex) -> R {
        if i == j || i == 0 || j == 0 || i as usize > self.n || j as usize > self.n {
            return R::zero();
        }
        if i < j {
            self.upper[self.slot(i, j)].clone()
        } else {
            -self.upper[self.slot(j, i)].clone()
        }
    }

    /// `E(u, v)` for vectors in the generator span.
    pub fn eval(&self, u: &[R], v: &[R]) -> R {
        let mut acc = R::zero();
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, vb) in v.iter().enumerate() {
                if vb.is_zero() {
                    continue;
                }
                acc = acc + ua.clone() * vb.clone() * self.get(a as u32 + 1, b as u32 + 1);
            }
        }
        acc
    }

    pub fn to_matrix(&self) -> Matrix<R> {
        (1..=self.n as u32)
            .map(|i| (1..=self.n as u32).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.to_matrix(), &R::tolerance())
    }

    /// Finite-dimensional weak non-degeneracy: `E(u, .) = 0` forces `u = 0`.
    pub fn is_weakly_nondegenerate(&self) -> bool {
        self.rank() == self.n
    }

    /// `{"n": n, "E": [[E12, E13, ...], [E23, ...], ...]}`
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (1..self.n as u32)
            .map(|i| {
                Value::Array((i + 1..=self.n as u32).map(|j| self.get(i, j).to_json()).collect())
            })
            .collect();
        json!({ "n": self.n, "E": rows })
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| AlgebraError::Parse("pairing form: missing key `n`".into()))?
            as usize;
        let rows = v
            .get("E")
            .and_then(Value::as_array)
            .ok_or_else(|| AlgebraError::Parse("pairing form: missing key `E`".into()))?;
        if rows.len() != n.saturating_sub(1) {
            return Err(AlgebraError::Parse(format!(
                "pairing form: `E` needs {} rows, found {}",
                n.saturating_sub(1),
                rows.len()
            )));
        }
        let mut e = Self::zero(n);
        for (r, row) in rows.iter().enumerate() {
            let i = r as u32 + 1;
            let row = row
                .as_array()
                .filter(|row| row.len() == n - 1 - r)
                .ok_or_else(|| AlgebraError::Parse(format!("pairing form: `E[{}]` has wrong length", r)))?;
            for (c, x) in row.iter().enumerate() {
                let val = R::from_json(x)
                    .ok_or_else(|| AlgebraError::Parse(format!("pairing form: bad entry `E[{}][{}]`", r, c)))?;
                e.set(i, i + 1 + c as u32, val)?;
            }
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;
    use num_rational::BigRational;

    #[test]
    fn antisymmetric_storage() {
        let mut e = PairingForm::<BigRational>::zero(3);
        e.set(3, 1, rational(2, 3)).unwrap();
        assert_eq!(e.get(1, 3), rational(-2, 3));
        assert_eq!(e.get(3, 1), rational(2, 3));
        assert_eq!(e.get(2, 2), rational(0, 1));
        assert!(e.set(2, 2, rational(1, 1)).is_err());
    }

    #[test]
    fn json_triangle_round_trip() {
        let e = PairingForm::<BigRational>::from_fn(4, |i, j| rational(i as i64, j as i64 + 1));
        let v = e.to_json();
        assert_eq!(v["E"].as_array().unwrap().len(), 3);
        assert_eq!(PairingForm::from_json(&v).unwrap(), e);
    }

    #[test]
    fn rank_flags_degeneracy() {
        assert!(PairingForm::<BigRational>::standard_symplectic(2).is_weakly_nondegenerate());
        assert!(!PairingForm::<BigRational>::zero(2).is_weakly_nondegenerate());
        // odd dimension is always degenerate
        let e = PairingForm::<f64>::from_fn(3, |_, _| 1.0);
        assert_eq!(e.rank(), 2);
    }
}
