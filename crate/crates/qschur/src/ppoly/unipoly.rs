use std::collections::BTreeMap;

use super::exponent::QExponent;
use super::{Poly, VarSpace};
use crate::error::{Error, Result};
use crate::gf::Field;

/// A polynomial in one extra variable `t` with [`Poly`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    space: VarSpace,
    coeffs: BTreeMap<QExponent, Poly>,
}

impl std::fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

impl UniPoly {
    pub fn zero(field: &Field, space: VarSpace) -> UniPoly {
        UniPoly { field: field.clone(), space, coeffs: BTreeMap::new() }
    }

    /// The polynomial `t`.
    pub fn t(field: &Field, space: VarSpace) -> UniPoly {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(QExponent::integer(1, field.q()), Poly::one(field, space));
        UniPoly { field: field.clone(), space, coeffs }
    }

    /// Builds `sum c_k t^k` from `(k, c_k)` pairs; zero coefficients are dropped.
    pub fn from_coeffs(
        field: &Field,
        space: VarSpace,
        pairs: impl IntoIterator<Item = (QExponent, Poly)>,
    ) -> Result<UniPoly> {
        let mut out = UniPoly::zero(field, space);
        for (k, c) in pairs {
            out.add_term(k, c)?;
        }
        Ok(out)
    }

    fn add_term(&mut self, k: QExponent, c: Poly) -> Result<()> {
        let sum = match self.coeffs.remove(&k) {
            Some(old) => old.add(&c)?,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(k, sum);
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    /// `(exponent of t, coefficient)` pairs, ascending in the exponent.
    pub fn coeffs(&self) -> impl DoubleEndedIterator<Item = (&QExponent, &Poly)> {
        self.coeffs.iter()
    }

    /// Coefficient of `t^k` (zero when absent).
    pub fn coeff(&self, k: u64) -> Poly {
        self.coeffs
            .get(&QExponent::integer(k, self.field.q()))
            .cloned()
            .unwrap_or_else(|| Poly::zero(&self.field, self.space))
    }

    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly> {
        let mut out = UniPoly::zero(&self.field, self.space);
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &other.coeffs {
                let k = ka.checked_add(*kb).ok_or(Error::ExponentOverflow)?;
                out.add_term(k, ca.mul(cb)?)?;
            }
        }
        Ok(out)
    }

    /// True iff every exponent of `t` is `q^i` for some `i >= 0`.
    pub fn is_q_poly(&self) -> bool {
        let q = self.field.q() as u64;
        self.coeffs.keys().all(|k| match k.as_integer() {
            Some(mut n) if n >= 1 => {
                while n % q == 0 {
                    n /= q;
                }
                n == 1
            }
            _ => false,
        })
    }

    /// Substitutes `v` for `t`. Powers `t^{q^i}` go through Frobenius, which
    /// is exact because coefficients lie in `F_q`.
    pub fn eval(&self, v: &Poly) -> Result<Poly> {
        let q = self.field.q() as u64;
        let mut acc = Poly::zero(&self.field, self.space);
        for (k, c) in &self.coeffs {
            let vk = match frobenius_level(*k, q) {
                Some(level) => v.frobenius(level)?,
                None => {
                    let n = k.as_integer().ok_or_else(|| Error::FractionalExponent(k.to_string()))?;
                    v.pow(n)?
                }
            };
            acc = acc.add(&c.mul(&vk)?)?;
        }
        Ok(acc)
    }
}

/// `Some(i)` when `k = q^i` with `i` any integer.
fn frobenius_level(k: QExponent, q: u64) -> Option<i64> {
    if k.num() == 0 {
        return None;
    }
    let mut n = k.num();
    let mut level = -(k.den_pow() as i64);
    while n.is_multiple_of(q) {
        n /= q;
        level += 1;
    }
    (n == 1).then_some(level)
}

impl std::fmt::Display for UniPoly {
    /// Descending powers of `t`, e.g. `t^4 + (x^2 + x*y)*t^2 + x*t`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().rev() {
            let tpow = if k.is_zero() {
                String::new()
            } else if *k == QExponent::integer(1, self.field.q()) {
                "t".to_string()
            } else if k.is_integer() {
                format!("t^{k}")
            } else {
                format!("t^({k})")
            };
            let part = if tpow.is_empty() {
                c.to_string()
            } else if c.is_one() {
                tpow
            } else if c.num_terms() == 1 {
                format!("{c}*{tpow}")
            } else {
                format!("({c})*{tpow}")
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + "))
    }
}
