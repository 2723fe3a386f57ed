//! Alternant quotients `S_λ(V)`, the complete and elementary values
//! `H_r(V)`, `E_r(V)`, their skew determinants and the expansions built on
//! top of them.
//!
//! All values are computed through a [`SchurContext`], which memoizes the
//! universal quotients `A_{λ+δ} / A_δ` and the per-subspace `H_r`, `E_r`.
//! The context is cheap to clone and safe to share between threads.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::fmatrix::{window_product, PolyMatrix, TriangularZMatrix};
use crate::gf::Field;
use crate::partitions::{pad_and_add, q_exponent, Partition};
use crate::ppoly::{Monomial, Poly, QExponent, VarSpace};
use crate::subspaces::Subspace;

/// Insert-once memo table: the first value stored for a key wins and is
/// never replaced.
struct Memo<K, V> {
    map: Mutex<HashMap<K, Arc<V>>>,
}

impl<K: std::hash::Hash + Eq, V> Memo<K, V> {
    fn new() -> Self {
        Memo { map: Mutex::new(HashMap::new()) }
    }

    fn get_or_try(&self, key: K, compute: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        if let Some(v) = self.map.lock().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        // Computed outside the lock so independent keys proceed in parallel.
        let value = Arc::new(compute()?);
        let mut map = self.map.lock().expect("memo lock");
        Ok(map.entry(key).or_insert(value).clone())
    }

    fn len(&self) -> usize {
        self.map.lock().expect("memo lock").len()
    }
}

struct Inner {
    field: Field,
    universal: Memo<(Partition, usize), Poly>,
    complete: Memo<(u64, Subspace), Poly>,
    elementary: Memo<(u64, Subspace), Poly>,
}

#[derive(Clone)]
pub struct SchurContext(Arc<Inner>);

impl std::fmt::Debug for SchurContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SchurContext({})", self.0.field)
    }
}

/// One addend of [`SchurContext::coproduct_expand`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoproductAddend {
    pub nu: Partition,
    pub value: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoproductExpansion {
    pub addends: Vec<CoproductAddend>,
    pub total: Poly,
}

fn sign(field: &Field, odd: bool) -> crate::gf::FieldElement {
    if odd {
        field.neg(field.one())
    } else {
        field.one()
    }
}

/// `X_i^{q^e}` in the universal ring.
fn universal_power(field: &Field, var: u32, e: u64) -> Result<Poly> {
    let q = field.q();
    let exp = (q as u64).checked_pow(e as u32).ok_or(Error::ExponentOverflow)?;
    let m = Monomial::var(var, QExponent::integer(exp, q));
    Ok(Poly::monomial(field, VarSpace::Universal, m, field.one()))
}

impl SchurContext {
    pub fn new(field: &Field) -> SchurContext {
        SchurContext(Arc::new(Inner {
            field: field.clone(),
            universal: Memo::new(),
            complete: Memo::new(),
            elementary: Memo::new(),
        }))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    /// Number of memoized values, for diagnostics.
    pub fn cache_sizes(&self) -> (usize, usize, usize) {
        (self.0.universal.len(), self.0.complete.len(), self.0.elementary.len())
    }

    fn check_field(&self, v: &Subspace) -> Result<()> {
        if v.field() != self.field() {
            return Err(Error::SpecMismatch(format!("subspace over {} used with context over {}", v.field(), self.field())));
        }
        Ok(())
    }

    /// `det(X_i^{q^{α_j}})` over `n` universal variables.
    pub fn alternant(&self, alpha: &[u64], n: usize) -> Result<Poly> {
        if alpha.len() != n {
            return Err(Error::ShapeMismatch(format!("composition of length {} for {n} variables", alpha.len())));
        }
        let f = self.field();
        PolyMatrix::from_fn(f, VarSpace::Universal, n, n, |i, j| universal_power(f, i as u32, alpha[j]))?.det()
    }

    /// `A_{λ+δ} / A_δ` in `n` universal variables.
    pub fn universal_schur(&self, lambda: &Partition, n: usize) -> Result<Poly> {
        Ok((*self.universal_schur_arc(lambda, n)?).clone())
    }

    fn universal_schur_arc(&self, lambda: &Partition, n: usize) -> Result<Arc<Poly>> {
        self.0.universal.get_or_try((lambda.clone(), n), || {
            let top = self.alternant(&pad_and_add(lambda, n)?, n)?;
            let bottom = self.alternant(&pad_and_add(&Partition::empty(), n)?, n)?;
            top.exact_div(&bottom)
        })
    }

    /// `S_λ(V)`: the universal quotient evaluated on the canonical basis of `V`.
    pub fn schur_s(&self, lambda: &Partition, v: &Subspace) -> Result<Poly> {
        self.check_field(v)?;
        if lambda.len() > v.dim() {
            return Ok(Poly::zero(self.field(), v.space()));
        }
        self.schur_of_basis(lambda, v.basis(), v.space())
    }

    /// `S_λ` evaluated on an arbitrary list of linearly independent vectors.
    ///
    /// When every vector is a single term the universal quotient is simply
    /// relabelled. Otherwise both alternants are formed from the vectors
    /// themselves and divided in the ambient ring, which is a domain, so the
    /// quotient is the same polynomial the substitution would produce.
    pub fn schur_of_basis(&self, lambda: &Partition, basis: &[Poly], space: VarSpace) -> Result<Poly> {
        if lambda.len() > basis.len() {
            return Ok(Poly::zero(self.field(), space));
        }
        if basis.iter().all(|b| b.num_terms() == 1) {
            return self.schur_by_substitution(lambda, basis, space);
        }
        let n = basis.len();
        let top = self.alternant_of(&pad_and_add(lambda, n)?, basis, space)?;
        let bottom = self.alternant_of(&pad_and_add(&Partition::empty(), n)?, basis, space)?;
        top.exact_div(&bottom)
    }

    /// `S_λ` via the universal quotient followed by the substitution
    /// `X_i ↦ basis[i]`.
    pub fn schur_by_substitution(&self, lambda: &Partition, basis: &[Poly], space: VarSpace) -> Result<Poly> {
        if lambda.len() > basis.len() {
            return Ok(Poly::zero(self.field(), space));
        }
        self.universal_schur_arc(lambda, basis.len())?.evaluate_morphism(basis, space)
    }

    /// `det(b_i^{q^{α_j}})` for the given vectors.
    fn alternant_of(&self, alpha: &[u64], basis: &[Poly], space: VarSpace) -> Result<Poly> {
        let n = basis.len();
        PolyMatrix::from_fn(self.field(), space, n, n, |i, j| basis[i].frobenius(alpha[j] as i64))?.det()
    }

    /// `H_r(V) = S_{(r)}(V)`, zero for negative `r`.
    pub fn h_r(&self, r: i64, v: &Subspace) -> Result<Poly> {
        Ok((*self.h_arc(r, v)?).clone())
    }

    fn h_arc(&self, r: i64, v: &Subspace) -> Result<Arc<Poly>> {
        self.check_field(v)?;
        if r < 0 {
            return Ok(Arc::new(Poly::zero(self.field(), v.space())));
        }
        let r = r as u64;
        self.0.complete.get_or_try((r, v.clone()), || self.schur_s(&Partition::row(r), v))
    }

    /// `E_r(V) = S_{(1^r)}(V)`, zero for negative `r` and for `r > dim V`.
    pub fn e_r(&self, r: i64, v: &Subspace) -> Result<Poly> {
        Ok((*self.e_arc(r, v)?).clone())
    }

    fn e_arc(&self, r: i64, v: &Subspace) -> Result<Arc<Poly>> {
        self.check_field(v)?;
        if r < 0 || r as usize > v.dim() {
            return Ok(Arc::new(Poly::zero(self.field(), v.space())));
        }
        let r = r as u64;
        self.0.elementary.get_or_try((r, v.clone()), || self.schur_s(&Partition::column(r as usize), v))
    }

    /// `φ^k(H_r(V))`, with the shortcuts `H_0 = 1` and `H_{<0} = 0`.
    fn twisted_h(&self, k: i64, r: i64, v: &Subspace) -> Result<Poly> {
        match r {
            r if r < 0 => Ok(Poly::zero(self.field(), v.space())),
            0 => Ok(Poly::one(self.field(), v.space())),
            _ => self.h_arc(r, v)?.frobenius(k),
        }
    }

    fn twisted_e(&self, k: i64, r: i64, v: &Subspace) -> Result<Poly> {
        match r {
            r if r < 0 => Ok(Poly::zero(self.field(), v.space())),
            0 => Ok(Poly::one(self.field(), v.space())),
            _ => self.e_arc(r, v)?.frobenius(k),
        }
    }

    /// `S_{λ/μ}(V) = det(φ^{μ_j-j+1} H_{λ_i-μ_j-i+j}(V))` of the smallest size
    /// `max(ℓ(λ), ℓ(μ))`.
    pub fn skew_s(&self, lambda: &Partition, mu: &Partition, v: &Subspace) -> Result<Poly> {
        self.skew_s_sized(lambda, mu, v, lambda.len().max(mu.len()))
    }

    /// The skew determinant at an explicit size `k ≥ max(ℓ(λ), ℓ(μ))`.
    pub fn skew_s_sized(&self, lambda: &Partition, mu: &Partition, v: &Subspace, k: usize) -> Result<Poly> {
        self.check_field(v)?;
        if k < lambda.len().max(mu.len()) {
            return Err(Error::ShapeMismatch(format!("size {k} is below the lengths of {lambda} and {mu}")));
        }
        PolyMatrix::from_fn(self.field(), v.space(), k, k, |i, j| {
            let (i1, j1) = (i as i64 + 1, j as i64 + 1);
            let mu_j = mu.part(j) as i64;
            let r = lambda.part(i) as i64 - mu_j - i1 + j1;
            self.twisted_h(mu_j - j1 + 1, r, v)
        })?
        .det()
    }

    /// `det(φ^{λ_i-i} E_{λ_i-μ_j-i+j}(U))` of size `max(ℓ(λ), ℓ(μ))`.
    pub fn tilde_s(&self, lambda: &Partition, mu: &Partition, u: &Subspace) -> Result<Poly> {
        self.check_field(u)?;
        let k = lambda.len().max(mu.len());
        PolyMatrix::from_fn(self.field(), u.space(), k, k, |i, j| {
            let (i1, j1) = (i as i64 + 1, j as i64 + 1);
            let lam_i = lambda.part(i) as i64;
            let r = lam_i - mu.part(j) as i64 - i1 + j1;
            self.twisted_e(lam_i - i1, r, u)
        })?
        .det()
    }

    /// The matrix with `(i, j)` entry `φ^{i+1} H_{j-i}(V)`.
    pub fn h_matrix(&self, v: &Subspace) -> TriangularZMatrix {
        let ctx = self.clone();
        let v = v.clone();
        TriangularZMatrix::new(self.field(), v.space(), format!("H({v})"), move |i, j| ctx.twisted_h(i + 1, j - i, &v))
    }

    /// The matrix with `(i, j)` entry `(-1)^{j-i} φ^j E_{j-i}(V)`.
    pub fn e_matrix(&self, v: &Subspace) -> TriangularZMatrix {
        let ctx = self.clone();
        let v = v.clone();
        TriangularZMatrix::new(self.field(), v.space(), format!("E({v})"), move |i, j| {
            let e = ctx.twisted_e(j, j - i, &v)?;
            Ok(e.scale(sign(ctx.field(), (j - i).rem_euclid(2) == 1)))
        })
    }

    /// Checks `H(V) = H(V⫽U) · φ^{dim V - dim U}(H(U))` entrywise on the
    /// window `[-(dim V + 3), dim V + 3]`.
    pub fn quotient_factorization_check(&self, v: &Subspace, u: &Subspace) -> Result<bool> {
        let w = v.dim() as i64 + 3;
        Ok(self.quotient_factorization_mismatch(v, u, w)?.is_none())
    }

    /// The first entry `(i, j, left, right)` in `[-w, w]` where the
    /// factorization of `H(V)` fails, if any.
    pub fn quotient_factorization_mismatch(
        &self,
        v: &Subspace,
        u: &Subspace,
        w: i64,
    ) -> Result<Option<(i64, i64, Poly, Poly)>> {
        let quotient = v.internal_quotient(u)?;
        let d = (v.dim() - u.dim()) as i64;
        let rhs = window_product(&self.h_matrix(&quotient), &self.h_matrix(u).frobenius(d), -w, w)?;
        let lhs = self.h_matrix(v);
        for (r, i) in (-w..=w).enumerate() {
            for (c, j) in (-w..=w).enumerate() {
                let left = lhs.entry(i, j)?;
                if left != *rhs.get(r, c) {
                    return Ok(Some((i, j, left, rhs.get(r, c).clone())));
                }
            }
        }
        Ok(None)
    }

    /// Expands `S_{λ/μ}(V⫽U)` as
    /// `sum_ν (-1)^{|λ|-|ν|} S_{ν/μ}(V) · φ^{dim V - dim U}(S̃_{λ/ν}(U))`
    /// over `μ ⊆ ν ⊆ λ`.
    pub fn coproduct_expand(
        &self,
        lambda: &Partition,
        mu: &Partition,
        v: &Subspace,
        u: &Subspace,
    ) -> Result<CoproductExpansion> {
        self.check_field(v)?;
        if !u.is_subspace_of(v)? {
            return Err(Error::NotSubspace(format!("[{u}] is not contained in [{v}]")));
        }
        let d = (v.dim() - u.dim()) as i64;
        let mut total = Poly::zero(self.field(), v.space());
        let mut addends = Vec::new();
        for nu in mu.interval_to(lambda) {
            let left = self.skew_s(&nu, mu, v)?;
            let value = if left.is_zero() {
                left
            } else {
                let right = self.tilde_s(lambda, &nu, u)?.frobenius(d)?;
                left.mul(&right)?.scale(sign(self.field(), (lambda.size() - nu.size()) % 2 == 1))
            };
            total = total.add(&value)?;
            addends.push(CoproductAddend { nu, value });
        }
        Ok(CoproductExpansion { addends, total })
    }

    /// `sum_ν (-1)^{|λ|-|ν|} ℓ^{q(λ,ν)} S_{ν/μ}(V)` over vertical strips `λ/ν`;
    /// equal to `S_{λ/μ}(V⫽span(ℓ))`.
    pub fn pieri_expand(&self, lambda: &Partition, mu: &Partition, v: &Subspace, line: &Poly) -> Result<Poly> {
        self.check_field(v)?;
        if line.is_zero() {
            return Err(Error::ZeroVector);
        }
        let n = v.dim();
        for p in [lambda, mu] {
            if p.len() >= n {
                return Err(Error::LengthTooLong { len: p.len(), dim: n });
            }
        }
        if !v.contains(line)? {
            return Err(Error::NotSubspace(format!("{line} is not in [{v}]")));
        }
        let q = self.field().q();
        let mut total = Poly::zero(self.field(), v.space());
        for nu in lambda.vertical_strip_subpartitions() {
            let skew = self.skew_s(&nu, mu, v)?;
            if skew.is_zero() {
                continue;
            }
            let power = line.pow(q_exponent(lambda, &nu, n, q)?)?;
            let term = power.mul(&skew)?.scale(sign(self.field(), (lambda.size() - nu.size()) % 2 == 1));
            total = total.add(&term)?;
        }
        Ok(total)
    }

    /// `(-1)^n π(V) · (S_{λ⊖1}(V))^q` for `ℓ(λ) = dim V = n`, all parts positive.
    pub fn fullhouse_reduce(&self, lambda: &Partition, v: &Subspace) -> Result<Poly> {
        self.check_field(v)?;
        let n = v.dim();
        let reduced = lambda.decrement_all(n)?;
        let inner = self.schur_s(&reduced, v)?.frobenius(1)?;
        Ok(v.pi_product()?.mul(&inner)?.scale(sign(self.field(), n % 2 == 1)))
    }

    /// Checks `π(U) · φ(H_{r-1}(U)) = -H_r(U)` for a line `U`.
    pub fn hook_step_check(&self, u: &Subspace, r: u64) -> Result<bool> {
        u.line_direction()?;
        let r = r as i64;
        let lhs = u.pi_product()?.mul(&self.twisted_h(1, r - 1, u)?)?;
        Ok(lhs == self.h_r(r, u)?.neg())
    }
}
