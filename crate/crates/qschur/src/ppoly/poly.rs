use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::exponent::QExponent;
use super::monomial::Monomial;
use super::{term_limit, VarSpace};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// A sparse polynomial over `F_q` with exponents in `N[1/q]`.
///
/// Terms are kept strictly descending in the monomial order with no zero
/// coefficients, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    space: VarSpace,
    terms: Vec<(Monomial, FieldElement)>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly({})", self)
    }
}

fn overflow() -> Error {
    Error::ExponentOverflow
}

fn check_limit(n: usize) -> Result<()> {
    let limit = term_limit();
    if n > limit {
        Err(Error::TermLimit { terms: n, limit })
    } else {
        Ok(())
    }
}

impl Poly {
    pub fn zero(field: &Field, space: VarSpace) -> Poly {
        Poly { field: field.clone(), space, terms: Vec::new() }
    }

    pub fn one(field: &Field, space: VarSpace) -> Poly {
        Poly::constant(field, space, field.one())
    }

    pub fn constant(field: &Field, space: VarSpace, c: FieldElement) -> Poly {
        Poly::monomial(field, space, Monomial::one(field.q()), c)
    }

    /// `c * m`.
    pub fn monomial(field: &Field, space: VarSpace, m: Monomial, c: FieldElement) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { field: field.clone(), space, terms }
    }

    /// The ambient variable with index `i`.
    pub fn var(field: &Field, i: u32) -> Poly {
        Poly::var_in(field, VarSpace::Ambient, i)
    }

    /// The `i`-th (zero-based) variable of a universal ring.
    pub fn universal_var(field: &Field, i: u32) -> Poly {
        Poly::var_in(field, VarSpace::Universal, i)
    }

    pub fn var_in(field: &Field, space: VarSpace, i: u32) -> Poly {
        let m = Monomial::var(i, QExponent::integer(1, field.q()));
        Poly::monomial(field, space, m, field.one())
    }

    /// Collects `(monomial, coefficient)` pairs, combining repeats.
    pub fn from_terms(
        field: &Field,
        space: VarSpace,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Result<Poly> {
        let mut acc: FxHashMap<Monomial, FieldElement> = FxHashMap::default();
        for (m, c) in terms {
            let slot = acc.entry(m).or_insert(field.zero());
            *slot = field.add(*slot, c);
        }
        Poly::from_map(field, space, acc)
    }

    fn from_map(field: &Field, space: VarSpace, acc: FxHashMap<Monomial, FieldElement>) -> Result<Poly> {
        let mut terms: Vec<(Monomial, FieldElement)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        check_limit(terms.len())?;
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Ok(Poly { field: field.clone(), space, terms })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == self.field.one()
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.as_slice() {
            [] => Some(self.field.zero()),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, FieldElement)> {
        self.terms.first()
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1)
            .unwrap_or(self.field.zero())
    }

    pub fn has_fractional_exponents(&self) -> bool {
        self.terms.iter().any(|(m, _)| !m.is_integral())
    }

    /// The common total degree of all terms, or `None` if the polynomial is
    /// zero or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<QExponent> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    /// One past the largest variable index that occurs.
    pub fn var_count(&self) -> u32 {
        self.terms.iter().filter_map(|(m, _)| m.max_var()).max().map_or(0, |v| v + 1)
    }

    fn compatible(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::SpecMismatch(format!("fields {} and {}", self.field, other.field)));
        }
        if self.space != other.space {
            return Err(Error::SpecMismatch("ambient and universal variables cannot mix".into()));
        }
        Ok(())
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.field.neg(self.field.one()))
    }

    /// `c * self`.
    pub fn scale(&self, c: FieldElement) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.field, self.space);
        }
        let f = &self.field;
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect();
        Poly { field: f.clone(), space: self.space, terms }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.compatible(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let f = &self.field;
        let sign = |c: FieldElement| if negate { f.neg(c) } else { c };
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    terms.push((ma.clone(), *ca));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    terms.push((mb.clone(), sign(*cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = f.add(*ca, sign(*cb));
                    if !c.is_zero() {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(*c))));
        Poly { field: f.clone(), space: self.space, terms }
    }

    /// `c * m * self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Result<Poly> {
        if c.is_zero() {
            return Ok(Poly::zero(&self.field, self.space));
        }
        let f = &self.field;
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| Ok((t.checked_mul(m).ok_or_else(overflow)?, f.mul(*a, c))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly { field: f.clone(), space: self.space, terms })
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field, self.space));
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, *c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, *c);
        }
        let f = &self.field;
        let (small, big) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc: FxHashMap<Monomial, FieldElement> = FxHashMap::default();
        acc.reserve(big.terms.len().saturating_mul(2));
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.checked_mul(mb).ok_or_else(overflow)?;
                let c = f.mul(*ca, *cb);
                let slot = acc.entry(m).or_insert(f.zero());
                *slot = f.add(*slot, c);
            }
            check_limit(acc.len())?;
        }
        Poly::from_map(f, self.space, acc)
    }

    /// `φ^k`: every exponent multiplied by `q^k`, coefficients untouched
    /// (they lie in `F_q`, which Frobenius fixes). Any `k`, including negative.
    pub fn frobenius(&self, k: i64) -> Result<Poly> {
        if k == 0 {
            return Ok(self.clone());
        }
        // Scaling all exponents by a positive constant preserves the order.
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.checked_scale(k).ok_or_else(overflow)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly { field: self.field.clone(), space: self.space, terms })
    }

    /// `self^m`, with `self^0 = 1`.
    ///
    /// The exponent is split into base-`q` digits `m = sum d_i q^i`, so
    /// `self^m = prod φ^i(self^{d_i})`; each small power is done by binary
    /// powering.
    pub fn pow(&self, m: u64) -> Result<Poly> {
        let one = Poly::one(&self.field, self.space);
        if m == 0 {
            return Ok(one);
        }
        if self.terms.len() == 1 {
            let (mono, c) = &self.terms[0];
            let mono = mono.checked_pow(m).ok_or_else(overflow)?;
            return Ok(Poly::monomial(&self.field, self.space, mono, self.field.pow(*c, m)));
        }
        let q = self.field.q() as u64;
        let mut result = one;
        let mut rest = m;
        let mut level = 0i64;
        while rest > 0 {
            let digit = rest % q;
            if digit > 0 {
                let small = self.binary_pow(digit)?;
                result = result.mul(&small.frobenius(level)?)?;
            }
            rest /= q;
            level += 1;
        }
        Ok(result)
    }

    fn binary_pow(&self, mut m: u64) -> Result<Poly> {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field, self.space);
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The quotient `self / divisor`, which must be exact.
    ///
    /// Repeatedly cancels the leading term of the running remainder against
    /// the leading term of the divisor. Quotient terms come out in descending
    /// order, so no final sort is needed.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        self.compatible(divisor)?;
        let (lead_m, lead_c) = divisor.terms.first().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv(*lead_c).expect("leading coefficient is nonzero");
        let tail = &divisor.terms[1..];
        let mut rem: BTreeMap<Monomial, FieldElement> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.checked_div(lead_m).ok_or(Error::NotDivisible)?;
            let qc = f.mul(c, lead_inv);
            for (tm, tc) in tail {
                let key = qm.checked_mul(tm).ok_or_else(overflow)?;
                let delta = f.neg(f.mul(qc, *tc));
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = f.add(*e.get(), delta);
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta);
                    }
                }
            }
            quotient.push((qm, qc));
            if quotient.len() % 4096 == 0 {
                check_limit(quotient.len().max(rem.len()))?;
            }
        }
        check_limit(quotient.len())?;
        Ok(Poly { field: f.clone(), space: self.space, terms: quotient })
    }

    /// Applies the algebra morphism sending variable `i` to `images[i]`.
    ///
    /// Requires integer exponents. The result lives in the ring of the images
    /// (or in this ring's field and `target` space when `images` is empty).
    pub fn evaluate_morphism(&self, images: &[Poly], target: VarSpace) -> Result<Poly> {
        for img in images {
            if img.field != self.field {
                return Err(Error::SpecMismatch("images must share the source field".into()));
            }
            if img.space != target {
                return Err(Error::SpecMismatch("images must live in the target space".into()));
            }
        }
        for (m, _) in &self.terms {
            if let Some((_, e)) = m.exponents().iter().find(|(_, e)| !e.is_integer()) {
                return Err(Error::FractionalExponent(e.to_string()));
            }
            if let Some(v) = m.max_var() {
                if v as usize >= images.len() {
                    return Err(Error::SpecMismatch(format!(
                        "variable {v} has no image ({} given)",
                        images.len()
                    )));
                }
            }
        }
        if images.iter().all(|img| img.terms.len() == 1) {
            return self.rename(images, target);
        }
        let mut powers: Vec<FxHashMap<u64, Poly>> = vec![FxHashMap::default(); images.len()];
        let terms: Vec<&(Monomial, FieldElement)> = self.terms.iter().collect();
        let top = images.len() as i64 - 1;
        eval_recursive(&self.field, target, &terms, top, images, &mut powers)
    }

    /// Substitution when every image is a single term.
    fn rename(&self, images: &[Poly], target: VarSpace) -> Result<Poly> {
        let f = &self.field;
        let q = f.q();
        let mapped = self.terms.iter().map(|(m, c)| {
            let mut mono = Monomial::one(q);
            let mut coef = *c;
            for &(v, e) in m.exponents() {
                let k = e.as_integer().expect("checked integral");
                let (im, ic) = &images[v as usize].terms[0];
                mono = mono.checked_mul(&im.checked_pow(k).ok_or_else(overflow)?).ok_or_else(overflow)?;
                coef = f.mul(coef, f.pow(*ic, k));
            }
            Ok((mono, coef))
        });
        let collected = mapped.collect::<Result<Vec<_>>>()?;
        Poly::from_terms(f, target, collected)
    }
}

/// Horner-style substitution: split on the highest variable, evaluate each
/// coefficient recursively, and multiply by the cached image power.
fn eval_recursive(
    field: &Field,
    target: VarSpace,
    terms: &[&(Monomial, FieldElement)],
    var: i64,
    images: &[Poly],
    powers: &mut [FxHashMap<u64, Poly>],
) -> Result<Poly> {
    if var < 0 {
        let c = terms.iter().fold(field.zero(), |acc, (_, c)| field.add(acc, *c));
        return Ok(Poly::constant(field, target, c));
    }
    let v = var as u32;
    let mut groups: BTreeMap<u64, Vec<&(Monomial, FieldElement)>> = BTreeMap::new();
    for t in terms {
        let e = t.0.exponent(v).as_integer().expect("checked integral");
        groups.entry(e).or_default().push(*t);
    }
    let mut acc = Poly::zero(field, target);
    for (e, group) in groups {
        let stripped: Vec<(Monomial, FieldElement)> =
            group.iter().map(|(m, c)| (m.without(v), *c)).collect();
        let refs: Vec<&(Monomial, FieldElement)> = stripped.iter().collect();
        let inner = eval_recursive(field, target, &refs, var - 1, images, powers)?;
        if inner.is_zero() {
            continue;
        }
        let pw = match powers[v as usize].get(&e) {
            Some(p) => p.clone(),
            None => {
                let p = images[v as usize].pow(e)?;
                powers[v as usize].insert(e, p.clone());
                p
            }
        };
        acc = acc.add(&inner.mul(&pw)?)?;
    }
    Ok(acc)
}
