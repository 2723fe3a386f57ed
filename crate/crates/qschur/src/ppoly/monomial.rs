//! Monomials with `N[1/q]` exponents and the graded-lex order.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use super::exponent::QExponent;

type Exps = SmallVec<[(u32, QExponent); 4]>;

/// A product of variables raised to nonzero [`QExponent`]s.
///
/// Exponents are stored sparsely, sorted by variable index, and the total
/// degree is cached because the monomial order compares it first.
#[derive(Clone, Debug)]
pub struct Monomial {
    degree: QExponent,
    exps: Exps,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (v, e) in &self.exps {
            v.hash(state);
            e.hash(state);
        }
    }
}

impl Monomial {
    pub fn one(q: u32) -> Monomial {
        Monomial { degree: QExponent::zero(q), exps: SmallVec::new() }
    }

    /// `x_var^exp`; the unit monomial when `exp` is zero.
    pub fn var(var: u32, exp: QExponent) -> Monomial {
        if exp.is_zero() {
            return Monomial::one(exp.q());
        }
        let mut exps = SmallVec::new();
        exps.push((var, exp));
        Monomial { degree: exp, exps }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// repeated variables multiply. `None` on exponent overflow.
    pub fn from_pairs(q: u32, pairs: &[(u32, QExponent)]) -> Option<Monomial> {
        pairs
            .iter()
            .try_fold(Monomial::one(q), |acc, &(v, e)| acc.checked_mul(&Monomial::var(v, e)))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> QExponent {
        self.degree
    }

    /// Nonzero exponents, ascending by variable index.
    pub fn exponents(&self) -> &[(u32, QExponent)] {
        &self.exps
    }

    /// Exponent of `var` (zero when absent).
    pub fn exponent(&self, var: u32) -> QExponent {
        self.exps
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.exps[i].1)
            .unwrap_or_else(|_| QExponent::zero(self.degree.q()))
    }

    pub fn is_integral(&self) -> bool {
        self.exps.iter().all(|(_, e)| e.is_integer())
    }

    /// Largest variable index that occurs, if any.
    pub fn max_var(&self) -> Option<u32> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        if other.exps.is_empty() {
            return Some(self.clone());
        }
        if self.exps.is_empty() {
            return Some(other.clone());
        }
        let mut exps = Exps::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((va, ea.checked_add(eb)?));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Some(Monomial { degree: self.degree.checked_add(other.degree)?, exps })
    }

    /// `self / other` if `other` divides `self` in the exponent monoid.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Exps::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            if j < other.exps.len() && other.exps[j].0 < v {
                return None;
            }
            if j < other.exps.len() && other.exps[j].0 == v {
                let d = e.checked_sub(other.exps[j].1)?;
                if !d.is_zero() {
                    exps.push((v, d));
                }
                j += 1;
            } else {
                exps.push((v, e));
            }
        }
        if j < other.exps.len() {
            return None;
        }
        Some(Monomial { degree: self.degree.checked_sub(other.degree)?, exps })
    }

    /// Every exponent multiplied by `q^k`.
    pub fn checked_scale(&self, k: i64) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&(v, e)| Some((v, e.checked_scale(k)?)))
            .collect::<Option<Exps>>()?;
        Some(Monomial { degree: self.degree.checked_scale(k)?, exps })
    }

    /// Every exponent multiplied by the integer `m`.
    pub fn checked_pow(&self, m: u64) -> Option<Monomial> {
        if m == 0 {
            return Some(Monomial::one(self.degree.q()));
        }
        let exps = self
            .exps
            .iter()
            .map(|&(v, e)| Some((v, e.checked_mul_int(m)?)))
            .collect::<Option<Exps>>()?;
        Some(Monomial { degree: self.degree.checked_mul_int(m)?, exps })
    }

    /// The monomial with `var` removed.
    pub fn without(&self, var: u32) -> Monomial {
        match self.exps.binary_search_by_key(&var, |&(v, _)| v) {
            Ok(i) => {
                let mut exps = self.exps.clone();
                let (_, e) = exps.remove(i);
                Monomial { degree: self.degree.checked_sub(e).expect("degree bookkeeping"), exps }
            }
            Err(_) => self.clone(),
        }
    }
}

impl Ord for Monomial {
    /// Total degree first, then lexicographic on the exponent vector read in
    /// ascending variable order (a larger exponent of a smaller-index
    /// variable wins).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
