use ccr_core::linalg::Matrix;
use ccr_core::scalar::{imag_unit, real, scalar_from_json, scalar_to_json};
use ccr_core::{GeneratorIndex, PairingForm, Real};
use num_complex::Complex;
use serde_json::{json, Value};

use crate::error::QuasifreeError;

/// Two-point function `omega_2(f_i, f_j)` on labels `1..=n`; entries may be missing.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoPointKernel<R: Real> {
    n: usize,
    table: Vec<Option<Complex<R>>>,
}

impl<R: Real> TwoPointKernel<R> {
    pub fn empty(n: usize) -> Self {
        TwoPointKernel { n, table: vec![None; n * n] }
    }

    pub fn from_fn<F: FnMut(GeneratorIndex, GeneratorIndex) -> Complex<R>>(n: usize, mut f: F) -> Self {
        let mut k = Self::empty(n);
        for i in 1..=n as u32 {
            for j in 1..=n as u32 {
                k.set(i, j, f(i, j));
            }
        }
        k
    }

    /// `omega_2 = mu + (i/2) E` from a real symmetric `mu` and the pairing form.
    pub fn from_mu_e(mu: &Matrix<R>, e: &PairingForm<R>) -> Self {
        let half = R::one() / (R::one() + R::one());
        Self::from_fn(e.dim(), |i, j| {
            Complex::new(mu[i as usize - 1][j as usize - 1].clone(), half.clone() * e.get(i, j))
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, i: GeneratorIndex, j: GeneratorIndex, v: Complex<R>) {
        let k = (i as usize - 1) * self.n + (j as usize - 1);
        self.table[k] = Some(v);
    }

    pub fn get(&self, i: GeneratorIndex, j: GeneratorIndex) -> Result<Complex<R>, QuasifreeError> {
        if i == 0 || j == 0 || i as usize > self.n || j as usize > self.n {
            return Err(QuasifreeError::IncompleteKernel { i, j });
        }
        self.table[(i as usize - 1) * self.n + (j as usize - 1)]
            .clone()
            .ok_or(QuasifreeError::IncompleteKernel { i, j })
    }

    /// `E(f_i, f_j) = 2 Im omega_2(f_i, f_j)`; missing entries give zero.
    pub fn pairing_form(&self) -> PairingForm<R> {
        PairingForm::from_fn(self.n, |i, j| match self.get(i, j) {
            Ok(v) => v.im.clone() + v.im,
            Err(_) => R::zero(),
        })
    }

    /// Checks `omega(f,g) - omega(g,f) = i E(f,g)` with `E` real, i.e. a real
    /// symmetric part and an imaginary antisymmetric part, plus a real
    /// non-negative diagonal.
    pub fn check_consistency(&self) -> Result<(), QuasifreeError> {
        let tol = R::tolerance();
        for i in 1..=self.n as u32 {
            if let Ok(d) = self.get(i, i) {
                if d.im.abs() > tol || d.re < -tol.clone() {
                    return Err(QuasifreeError::KernelInconsistency(format!(
                        "diagonal omega({i},{i}) must be real and non-negative"
                    )));
                }
            }
            for j in i + 1..=self.n as u32 {
                let (Ok(a), Ok(b)) = (self.get(i, j), self.get(j, i)) else { continue };
                // a - b must be i * (real), a + b must be real
                let diff = a.clone() - b.clone();
                let sum = a + b;
                if diff.re.abs() > tol || sum.im.abs() > tol {
                    return Err(QuasifreeError::KernelInconsistency(format!(
                        "omega({i},{j}) - omega({j},{i}) is not i times a real number"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Pairs `(i, j)` violating `|E(f,g)|^2 / 4 <= omega(f,f) omega(g,g)`.
    pub fn cauchy_schwarz_violations(&self) -> Vec<(GeneratorIndex, GeneratorIndex)> {
        let e = self.pairing_form();
        let quarter = R::one() / R::from_u8(4).expect("small constant");
        let mut out = Vec::new();
        for i in 1..=self.n as u32 {
            for j in i + 1..=self.n as u32 {
                let (Ok(fi), Ok(fj)) = (self.get(i, i), self.get(j, j)) else { continue };
                let lhs = quarter.clone() * e.get(i, j) * e.get(i, j);
                if lhs > fi.re * fj.re + R::tolerance() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (1..=self.n as u32)
            .map(|i| {
                Value::Array(
                    (1..=self.n as u32)
                        .map(|j| self.get(i, j).map(|v| scalar_to_json(&v)).unwrap_or(Value::Null))
                        .collect(),
                )
            })
            .collect();
        json!({ "n": self.n, "omega": rows })
    }

    pub fn from_json(v: &Value) -> Result<Self, QuasifreeError> {
        let bad = |what: &str| QuasifreeError::KernelInconsistency(format!("kernel json: {what}"));
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing key `n`"))? as usize;
        let rows = v.get("omega").and_then(Value::as_array).ok_or_else(|| bad("missing key `omega`"))?;
        if rows.len() != n {
            return Err(bad("`omega` must have n rows"));
        }
        let mut k = Self::empty(n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_array().filter(|x| x.len() == n).ok_or_else(|| bad("`omega` row length"))?;
            for (c, x) in row.iter().enumerate() {
                if x.is_null() {
                    continue;
                }
                let val = scalar_from_json(x).ok_or_else(|| bad(&format!("entry `omega[{r}][{c}]`")))?;
                k.set(r as u32 + 1, c as u32 + 1, val);
            }
        }
        Ok(k)
    }
}

/// `omega(f,g) - omega(g,f)`, which should equal `i E(f,g)`.
pub fn antisymmetric_defect<R: Real>(
    k: &TwoPointKernel<R>,
    i: GeneratorIndex,
    j: GeneratorIndex,
) -> Result<Complex<R>, QuasifreeError> {
    let e = k.pairing_form();
    Ok(k.get(i, j)? - k.get(j, i)? - imag_unit::<R>() * real(e.get(i, j)))
}
