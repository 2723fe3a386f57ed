//! Finite-dimensional `F_q`-subspaces of the polynomial algebra.
//!
//! A [`Subspace`] stores its reduced echelon basis: each basis vector has
//! leading coefficient 1, and its leading monomial appears in no other basis
//! vector. That basis is unique, so two subspaces are equal exactly when
//! their bases are equal.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::ppoly::{parse_poly_in, Poly, QExponent, UniPoly, VarSpace};

/// Default ceiling on the number of vectors an enumeration may visit.
pub const DEFAULT_ENUMERATION_CEILING: u64 = 243;

static ENUMERATION_CEILING: AtomicU64 = AtomicU64::new(DEFAULT_ENUMERATION_CEILING);

pub fn enumeration_ceiling() -> u64 {
    ENUMERATION_CEILING.load(Ordering::Relaxed)
}

/// Changes the process-wide ceiling on `q^dim` for enumerations.
pub fn set_enumeration_ceiling(ceiling: u64) {
    ENUMERATION_CEILING.store(ceiling.max(1), Ordering::Relaxed);
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    space: VarSpace,
    basis: Vec<Poly>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace[{}]", self)
    }
}

impl fmt::Display for Subspace {
    /// Basis vectors joined by `"; "`; the zero subspace prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.basis.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// A complete flag `V = V_0 > V_1 > ... > V_n = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub chain: Vec<Subspace>,
}

impl Flag {
    /// Consecutive pairs `(V_{i-1}, V_i)`.
    pub fn steps(&self) -> impl Iterator<Item = (&Subspace, &Subspace)> {
        self.chain.windows(2).map(|w| (&w[0], &w[1]))
    }
}

/// Parses semicolon-separated polynomials; blank input gives no vectors.
pub fn parse_basis(text: &str, field: &Field) -> Result<Vec<Poly>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_poly_in(s, field, VarSpace::Ambient))
        .collect()
}

fn check_count(q: u32, dim: usize) -> Result<u64> {
    let ceiling = enumeration_ceiling();
    let count = (q as u64).checked_pow(dim as u32).unwrap_or(u64::MAX);
    if count > ceiling {
        return Err(Error::EnumerationTooLarge { count, ceiling });
    }
    Ok(count)
}

impl Subspace {
    pub fn zero(field: &Field, space: VarSpace) -> Subspace {
        Subspace { field: field.clone(), space, basis: Vec::new() }
    }

    /// The span of `vectors`, in canonical form.
    pub fn span(field: &Field, space: VarSpace, vectors: &[Poly]) -> Result<Subspace> {
        let mut s = Subspace::zero(field, space);
        for v in vectors {
            if v.field() != field || v.space() != space {
                return Err(Error::SpecMismatch(format!("vector {v} is from another ring")));
            }
            s.insert(v)?;
        }
        Ok(s)
    }

    /// Span of ambient vectors given in the basis text syntax.
    pub fn parse(text: &str, field: &Field) -> Result<Subspace> {
        Subspace::span(field, VarSpace::Ambient, &parse_basis(text, field)?)
    }

    fn insert(&mut self, v: &Poly) -> Result<()> {
        let r = self.reduce(v)?;
        let Some((lead, c)) = r.leading_term().cloned() else {
            return Ok(());
        };
        let r = r.scale(self.field.inv(c).expect("leading coefficient is nonzero"));
        for b in &mut self.basis {
            let k = b.coefficient(&lead);
            if !k.is_zero() {
                *b = b.sub(&r.scale(k))?;
            }
        }
        self.basis.push(r);
        self.basis.sort_by(|a, b| b.terms()[0].0.cmp(&a.terms()[0].0));
        Ok(())
    }

    /// `v` minus its component along the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &Poly) -> Result<Poly> {
        let mut r = v.clone();
        for b in &self.basis {
            let k = r.coefficient(&b.terms()[0].0);
            if !k.is_zero() {
                r = r.sub(&b.scale(k))?;
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &Poly) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `sum_i coeffs[i] * basis[i]`.
    pub fn combination(&self, coeffs: &[FieldElement]) -> Result<Poly> {
        self.basis
            .iter()
            .zip(coeffs)
            .try_fold(Poly::zero(&self.field, self.space), |acc, (b, &c)| acc.add(&b.scale(c)))
    }

    /// All coefficient tuples in lexicographic order (first coordinate most
    /// significant, field elements in their enumeration order).
    fn coefficient_tuples(&self) -> Result<Vec<Vec<FieldElement>>> {
        let q = self.field.q();
        let count = check_count(q, self.dim())?;
        let n = self.dim();
        Ok((0..count)
            .map(|mut code| {
                let mut t = vec![self.field.zero(); n];
                for slot in t.iter_mut().rev() {
                    *slot = self.field.element((code % q as u64) as u32);
                    code /= q as u64;
                }
                t
            })
            .collect())
    }

    /// All `q^dim` vectors, zero first.
    pub fn enumerate_vectors(&self) -> Result<Vec<Poly>> {
        self.coefficient_tuples()?.iter().map(|t| self.combination(t)).collect()
    }

    /// Nonzero vectors whose first nonzero coefficient is 1, i.e. the
    /// direction vectors with leading coefficient 1.
    fn normalized_tuples(&self) -> Result<Vec<Vec<FieldElement>>> {
        let one = self.field.one();
        Ok(self
            .coefficient_tuples()?
            .into_iter()
            .filter(|t| t.iter().find(|c| !c.is_zero()) == Some(&one))
            .collect())
    }

    /// All lines, each given by its direction vector with leading coefficient 1.
    pub fn enumerate_lines(&self) -> Result<Vec<Subspace>> {
        let lines = self
            .normalized_tuples()?
            .iter()
            .map(|t| Ok(Subspace { field: self.field.clone(), space: self.space, basis: vec![self.combination(t)?] }))
            .collect::<Result<Vec<_>>>()?;
        let q = self.field.q() as u64;
        debug_assert_eq!(lines.len() as u64, (q.pow(self.dim() as u32) - 1) / (q - 1));
        Ok(lines)
    }

    /// All subspaces of codimension one, as kernels of the normalized
    /// linear functionals on the coefficient space.
    pub fn enumerate_hyperplanes(&self) -> Result<Vec<Subspace>> {
        self.normalized_tuples()?
            .iter()
            .map(|c| {
                let pivot = c.iter().position(|x| !x.is_zero()).expect("normalized functional is nonzero");
                let gens = (0..self.dim())
                    .filter(|&i| i != pivot)
                    .map(|i| self.basis[i].sub(&self.basis[pivot].scale(c[i])))
                    .collect::<Result<Vec<_>>>()?;
                Subspace::span(&self.field, self.space, &gens)
            })
            .collect()
    }

    /// All complete flags, built by choosing a hyperplane and recursing.
    pub fn enumerate_flags(&self) -> Result<Vec<Flag>> {
        check_count(self.field.q(), self.dim())?;
        if self.dim() == 0 {
            return Ok(vec![Flag { chain: vec![self.clone()] }]);
        }
        let mut out = Vec::new();
        for h in self.enumerate_hyperplanes()? {
            for sub in h.enumerate_flags()? {
                let mut chain = Vec::with_capacity(self.dim() + 1);
                chain.push(self.clone());
                chain.extend(sub.chain);
                out.push(Flag { chain });
            }
        }
        let q = self.field.q() as u64;
        let expected: u64 = (1..=self.dim() as u32).map(|k| (q.pow(k) - 1) / (q - 1)).product();
        debug_assert_eq!(out.len() as u64, expected);
        Ok(out)
    }

    /// The direction vector of a line.
    pub fn line_direction(&self) -> Result<&Poly> {
        match self.basis.as_slice() {
            [v] => Ok(v),
            _ => Err(Error::NotALine(self.dim())),
        }
    }

    /// Product of all nonzero vectors; 1 for the zero subspace.
    pub fn pi_product(&self) -> Result<Poly> {
        let vectors = self.enumerate_vectors()?;
        vectors
            .iter()
            .skip(1)
            .try_fold(Poly::one(&self.field, self.space), |acc, v| acc.mul(v))
    }

    /// `f_U(t) = prod_{u in U} (t + u)`, expanded directly.
    pub fn additive_poly(&self) -> Result<UniPoly> {
        let vectors = self.enumerate_vectors()?;
        let zero = Poly::zero(&self.field, self.space);
        // coeffs[k] is the coefficient of t^k.
        let mut coeffs = vec![zero.clone(), Poly::one(&self.field, self.space)];
        for u in vectors.iter().skip(1) {
            let mut next = vec![zero.clone(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                next[k + 1] = next[k + 1].add(c)?;
                next[k] = next[k].add(&c.mul(u)?)?;
            }
            coeffs = next;
        }
        let q = self.field.q();
        let f = UniPoly::from_coeffs(
            &self.field,
            self.space,
            coeffs.into_iter().enumerate().map(|(k, c)| (QExponent::integer(k as u64, q), c)),
        )?;
        if !f.is_q_poly() {
            return Err(Error::NotQPolynomial);
        }
        Ok(f)
    }

    /// `V⫽U`: the image of `V` under `v ↦ f_U(v)`.
    pub fn internal_quotient(&self, sub: &Subspace) -> Result<Subspace> {
        if self.field != sub.field || self.space != sub.space {
            return Err(Error::SpecMismatch("subspaces of different rings".into()));
        }
        if !sub.is_subspace_of(self)? {
            return Err(Error::NotSubspace(format!("[{sub}] is not contained in [{self}]")));
        }
        let f = sub.additive_poly()?;
        let images = self.basis.iter().map(|b| f.eval(b)).collect::<Result<Vec<_>>>()?;
        let quotient = Subspace::span(&self.field, self.space, &images)?;
        let expected = self.dim() - sub.dim();
        if quotient.dim() != expected {
            return Err(Error::DimensionDrop { expected, actual: quotient.dim() });
        }
        Ok(quotient)
    }

    /// Maps the subspace through a substitution morphism.
    pub fn map_morphism(&self, images: &[Poly], target: VarSpace) -> Result<Subspace> {
        let mapped = self.basis.iter().map(|b| b.evaluate_morphism(images, target)).collect::<Result<Vec<_>>>()?;
        Subspace::span(&self.field, target, &mapped)
    }
}

/// `V⫽U = (V⫽T)⫽(U⫽T)` for `T ⊆ U ⊆ V`.
pub fn quotient_tower_check(t: &Subspace, u: &Subspace, v: &Subspace) -> Result<bool> {
    if !t.is_subspace_of(u)? || !u.is_subspace_of(v)? {
        return Err(Error::NotSubspace("the tower check needs T ⊆ U ⊆ V".into()));
    }
    let direct = v.internal_quotient(u)?;
    let stepwise = v.internal_quotient(t)?.internal_quotient(&u.internal_quotient(t)?)?;
    Ok(direct == stepwise)
}

/// `π(U⫽U') = prod_{u in U \ U'} u` for `U' ⊆ U`.
pub fn coset_product_check(u: &Subspace, u_sub: &Subspace) -> Result<bool> {
    if !u_sub.is_subspace_of(u)? {
        return Err(Error::NotSubspace(format!("[{u_sub}] is not contained in [{u}]")));
    }
    let lhs = u.internal_quotient(u_sub)?.pi_product()?;
    let mut rhs = Poly::one(u.field(), u.space());
    for v in u.enumerate_vectors()? {
        if !u_sub.contains(&v)? {
            rhs = rhs.mul(&v)?;
        }
    }
    Ok(lhs == rhs)
}
