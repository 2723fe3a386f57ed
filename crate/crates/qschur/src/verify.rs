//! Exact verification harness.
//!
//! Each `check_*` function evaluates both sides of one identity for one set
//! of parameters and returns [`CaseReport`]s carrying the two sides as text.
//! [`run_sweep`] runs every selected identity over a parameter grid in
//! parallel and aggregates the results.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fmatrix::{cauchy_binet, scale_sign_det, too_many_zeroes_check, window_product, PolyMatrix, TriangularZMatrix};
use crate::gf::Field;
use crate::partitions::{perm_witness, Partition};
use crate::ppoly::{set_term_limit, Monomial, Poly, QExponent, VarSpace, DEFAULT_TERM_LIMIT};
use crate::schur::SchurContext;
use crate::subspaces::{set_enumeration_ceiling, Flag, Subspace, DEFAULT_ENUMERATION_CEILING};

/// Largest `dim V` a sweep may request.
pub const DIM_CEILING: usize = 5;
/// Largest `|λ|` a sweep may request.
pub const WEIGHT_CEILING: u64 = 8;
/// Randomized trials per lemma.
pub const TRIALS: usize = 50;
/// Passing values longer than this are stored as a digest unless full values
/// are requested.
pub const VERBATIM_LIMIT: usize = 256;
/// Rough bound on the terms of the largest `H_r` a matrix window may touch.
const MATRIX_TERM_BUDGET: f64 = 8192.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    VlRecursion,
    StraightRecursion,
    FlagFormula,
    Pieri,
    Coproduct,
    Matrix,
    Subspace,
    Elementary,
    All,
}

impl Identity {
    pub const EACH: [Identity; 8] = [
        Identity::VlRecursion,
        Identity::StraightRecursion,
        Identity::FlagFormula,
        Identity::Pieri,
        Identity::Coproduct,
        Identity::Matrix,
        Identity::Subspace,
        Identity::Elementary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::VlRecursion => "vl-recursion",
            Identity::StraightRecursion => "straight-recursion",
            Identity::FlagFormula => "flag-formula",
            Identity::Pieri => "pieri",
            Identity::Coproduct => "coproduct",
            Identity::Matrix => "matrix",
            Identity::Subspace => "subspace",
            Identity::Elementary => "elementary",
            Identity::All => "all",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        let s = s.trim();
        Identity::EACH
            .into_iter()
            .chain([Identity::All])
            .find(|i| i.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Identity::EACH.iter().map(|i| i.name()).collect();
                Error::Parse(format!("unknown identity '{s}' (expected one of {}, all)", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub identity: String,
    pub q: u32,
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
    /// The subspace and any further parameters of the case.
    pub basis: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub millis: u64,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Parameters shared by the reports of one case.
#[derive(Debug, Clone)]
struct Case {
    identity: String,
    q: u32,
    n: usize,
    lambda: Partition,
    mu: Partition,
    basis: String,
    started: Instant,
}

impl Case {
    fn new(identity: &str, q: u32, n: usize, basis: impl Into<String>) -> Case {
        Case {
            identity: identity.to_string(),
            q,
            n,
            lambda: Partition::empty(),
            mu: Partition::empty(),
            basis: basis.into(),
            started: Instant::now(),
        }
    }

    fn shapes(mut self, lambda: &Partition, mu: &Partition) -> Case {
        self.lambda = lambda.clone();
        self.mu = mu.clone();
        self
    }

    fn finish(self, pass: bool, lhs: impl fmt::Display, rhs: impl fmt::Display) -> CaseReport {
        CaseReport {
            identity: self.identity,
            q: self.q,
            n: self.n,
            lambda: self.lambda,
            mu: self.mu,
            basis: self.basis,
            status: if pass { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            millis: self.started.elapsed().as_millis() as u64,
        }
    }

    fn equal(self, lhs: &Poly, rhs: &Poly) -> CaseReport {
        self.finish(lhs == rhs, lhs, rhs)
    }

    fn error(self, e: &Error) -> CaseReport {
        self.finish(false, format!("error: {e}"), "")
    }
}

fn span_text(v: &Subspace) -> String {
    format!("span({})", v)
}

fn odd_sign(field: &Field, odd: bool) -> crate::gf::FieldElement {
    if odd {
        field.neg(field.one())
    } else {
        field.one()
    }
}

/// `span(x_1, ..., x_n)` in the ambient ring.
pub fn coordinate_subspace(field: &Field, n: usize) -> Result<Subspace> {
    let vars: Vec<Poly> = (0..n as u32).map(|i| Poly::var(field, i)).collect();
    Subspace::span(field, VarSpace::Ambient, &vars)
}

/// Every subspace of `v` when `dim v ≤ 3` (zero, lines, hyperplanes, `v`);
/// for larger dimensions the middle layers are omitted.
pub fn standard_subspaces(v: &Subspace) -> Result<Vec<Subspace>> {
    let mut out = vec![Subspace::zero(v.field(), v.space())];
    out.extend(v.enumerate_lines()?);
    if v.dim() >= 3 {
        out.extend(v.enumerate_hyperplanes()?);
    }
    if v.dim() >= 1 {
        out.push(v.clone());
    }
    Ok(out)
}

fn length_check(p: &Partition, n: usize) -> Result<()> {
    if p.len() >= n {
        return Err(Error::LengthTooLong { len: p.len(), dim: n });
    }
    Ok(())
}

/// A Pieri-type expansion of `S_{λ/μ}(V⫽span(ℓ))`; the real one is
/// [`SchurContext::pieri_expand`], tests substitute faulty doubles.
pub type PieriFn<'a> = dyn Fn(&SchurContext, &Partition, &Partition, &Subspace, &Poly) -> Result<Poly> + Sync + 'a;

/// `S_{λ/μ}(V) = sum over lines L ⊆ V of S_{λ/μ}(V⫽L)` for `ℓ(λ), ℓ(μ) < dim V`.
///
/// Each line's value is also recomputed through the Pieri expansion; on a
/// disagreement the case fails and both sides show that line's two values.
pub fn check_vl_recursion(ctx: &SchurContext, lambda: &Partition, mu: &Partition, v: &Subspace) -> Result<CaseReport> {
    check_vl_recursion_with(ctx, lambda, mu, v, &|c, l, m, v, line| c.pieri_expand(l, m, v, line))
}

pub fn check_vl_recursion_with(
    ctx: &SchurContext,
    lambda: &Partition,
    mu: &Partition,
    v: &Subspace,
    pieri: &PieriFn,
) -> Result<CaseReport> {
    length_check(lambda, v.dim())?;
    length_check(mu, v.dim())?;
    let case = Case::new("vl-recursion", ctx.field().q(), v.dim(), span_text(v)).shapes(lambda, mu);
    let lhs = ctx.skew_s(lambda, mu, v)?;
    let mut rhs = Poly::zero(v.field(), v.space());
    for line in v.enumerate_lines()? {
        let value = ctx.skew_s(lambda, mu, &v.internal_quotient(&line)?)?;
        let via = pieri(ctx, lambda, mu, v, line.line_direction()?)?;
        if value != via {
            let at = format!("line span({line}): ");
            return Ok(case.finish(false, format!("{at}{value}"), format!("{at}{via}")));
        }
        rhs = rhs.add(&value)?;
    }
    Ok(case.equal(&lhs, &rhs))
}

/// `S_λ(V) = sum over lines L of S_λ(V⫽L)` for `ℓ(λ) < dim V`, evaluated both
/// directly and in the universal ring on `X_1..X_n` followed by the
/// substitution `X_i ↦ (basis of V)_i`. Both routes must agree exactly.
pub fn check_straight_recursion(ctx: &SchurContext, lambda: &Partition, v: &Subspace) -> Result<CaseReport> {
    let n = v.dim();
    length_check(lambda, n)?;
    let case = Case::new("straight-recursion", ctx.field().q(), n, span_text(v)).shapes(lambda, &Partition::empty());
    let line_sum = |w: &Subspace| -> Result<(Poly, Poly)> {
        let lhs = ctx.schur_s(lambda, w)?;
        let mut rhs = Poly::zero(w.field(), w.space());
        for line in w.enumerate_lines()? {
            rhs = rhs.add(&ctx.schur_s(lambda, &w.internal_quotient(&line)?)?)?;
        }
        Ok((lhs, rhs))
    };
    let (lhs, rhs) = line_sum(v)?;
    let field = ctx.field();
    let universal_vars: Vec<Poly> = (0..n as u32).map(|i| Poly::universal_var(field, i)).collect();
    let universal = Subspace::span(field, VarSpace::Universal, &universal_vars)?;
    let (ulhs, urhs) = line_sum(&universal)?;
    let transport = |p: &Poly| p.evaluate_morphism(v.basis(), v.space());
    let (tlhs, trhs) = (transport(&ulhs)?, transport(&urhs)?);
    let routes_agree = ulhs == urhs && tlhs == lhs && trhs == rhs;
    let shown_rhs = if routes_agree { rhs.clone() } else { trhs };
    Ok(case.finish(routes_agree && lhs == rhs, &lhs, &shown_rhs))
}

/// For each complete flag of `v`, the list `V_{i-1}⫽V_i` for `i = 1..n`.
pub fn flag_step_quotients(v: &Subspace) -> Result<Vec<Vec<Subspace>>> {
    v.enumerate_flags()?
        .iter()
        .map(|flag| flag.steps().map(|(a, b)| a.internal_quotient(b)).collect())
        .collect()
}

/// `S_λ(V) = sum over complete flags of prod_i H_{λ_i}(V_{i-1}⫽V_i)`.
pub fn check_flag_formula(ctx: &SchurContext, lambda: &Partition, v: &Subspace) -> Result<CaseReport> {
    check_flag_formula_with(ctx, lambda, v, &flag_step_quotients(v)?)
}

fn check_flag_formula_with(
    ctx: &SchurContext,
    lambda: &Partition,
    v: &Subspace,
    steps: &[Vec<Subspace>],
) -> Result<CaseReport> {
    if lambda.len() > v.dim() {
        return Err(Error::LengthExceeded { len: lambda.len(), n: v.dim() });
    }
    let case = Case::new("flag-formula", ctx.field().q(), v.dim(), span_text(v)).shapes(lambda, &Partition::empty());
    let lhs = ctx.schur_s(lambda, v)?;
    let mut rhs = Poly::zero(v.field(), v.space());
    for quotients in steps {
        let mut term = Poly::one(v.field(), v.space());
        for (i, w) in quotients.iter().enumerate() {
            term = term.mul(&ctx.h_r(lambda.part(i) as i64, w)?)?;
        }
        rhs = rhs.add(&term)?;
    }
    Ok(case.equal(&lhs, &rhs))
}

/// `pieri_expand(λ, μ, V, ℓ) = S_{λ/μ}(V⫽span(ℓ))` for one line.
pub fn check_pieri(
    ctx: &SchurContext,
    lambda: &Partition,
    mu: &Partition,
    v: &Subspace,
    line: &Subspace,
) -> Result<CaseReport> {
    let basis = format!("{} / span({})", span_text(v), line);
    let case = Case::new("pieri", ctx.field().q(), v.dim(), basis).shapes(lambda, mu);
    let rhs = ctx.pieri_expand(lambda, mu, v, line.line_direction()?)?;
    let lhs = ctx.skew_s(lambda, mu, &v.internal_quotient(line)?)?;
    Ok(case.equal(&lhs, &rhs))
}

/// `S_{λ/μ}(V⫽U)` against its coproduct expansion.
pub fn check_coproduct(
    ctx: &SchurContext,
    lambda: &Partition,
    mu: &Partition,
    v: &Subspace,
    u: &Subspace,
) -> Result<CaseReport> {
    let basis = format!("{} / span({})", span_text(v), u);
    let case = Case::new("coproduct", ctx.field().q(), v.dim(), basis).shapes(lambda, mu);
    let rhs = ctx.coproduct_expand(lambda, mu, v, u)?.total;
    let lhs = ctx.skew_s(lambda, mu, &v.internal_quotient(u)?)?;
    Ok(case.equal(&lhs, &rhs))
}

/// Largest window half-width `≤ wanted` whose `H_{2w}(V)` stays within the
/// term budget.
pub fn matrix_window(q: u32, n: usize, wanted: i64) -> i64 {
    if n <= 1 {
        return wanted;
    }
    let mut w = wanted;
    while w > 1 && (q as f64).powi((2 * w) as i32 * (n as i32 - 1)) > MATRIX_TERM_BUDGET {
        w -= 1;
    }
    w
}

/// `H(V) · E(V) = I` on the window `[-w, w]`.
pub fn check_h_e_inverse(ctx: &SchurContext, v: &Subspace, w: i64) -> Result<CaseReport> {
    let case = Case::new("matrix/h-e-inverse", ctx.field().q(), v.dim(), format!("{} window [-{w}, {w}]", span_text(v)));
    let prod = window_product(&ctx.h_matrix(v), &ctx.e_matrix(v), -w, w)?;
    let size = (2 * w + 1) as usize;
    let id = PolyMatrix::identity(v.field(), v.space(), size);
    for r in 0..size {
        for c in 0..size {
            if prod.get(r, c) != id.get(r, c) {
                let at = format!("entry ({}, {}) = ", r as i64 - w, c as i64 - w);
                return Ok(case.finish(false, format!("{at}{}", prod.get(r, c)), format!("{at}{}", id.get(r, c))));
            }
        }
    }
    Ok(case.finish(true, format!("I_{size}"), format!("I_{size}")))
}

/// `H(V) = H(V⫽U) · φ^{dim V - dim U}(H(U))` on `[-w, w]`.
pub fn check_quotient_factorization(ctx: &SchurContext, v: &Subspace, u: &Subspace, w: i64) -> Result<CaseReport> {
    let basis = format!("{} / span({}) window [-{w}, {w}]", span_text(v), u);
    let case = Case::new("matrix/quotient-factorization", ctx.field().q(), v.dim(), basis);
    Ok(match ctx.quotient_factorization_mismatch(v, u, w)? {
        None => case.finish(true, "H(V)", "H(V//U) * phi^d(H(U))"),
        Some((i, j, l, r)) => case.finish(false, format!("({i}, {j}): {l}"), format!("({i}, {j}): {r}")),
    })
}

/// Deterministic seed for a named sub-stream.
fn derive_seed(seed: u64, parts: &[u64]) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    for p in parts {
        h.update(p.to_le_bytes());
    }
    u64::from_le_bytes(h.finalize()[..8].try_into().expect("8 bytes"))
}

/// A random polynomial in `x, y` with at most three terms of degree ≤ 3.
fn random_poly(field: &Field, rng: &mut ChaCha8Rng) -> Poly {
    let q = field.q();
    let terms = (0..rng.gen_range(1..=3)).map(|_| {
        let pairs = [(0, QExponent::integer(rng.gen_range(0..=3), q)), (1, QExponent::integer(rng.gen_range(0..=3), q))];
        let m = Monomial::from_pairs(q, &pairs).expect("integer exponents");
        (m, field.element(rng.gen_range(0..q)))
    });
    Poly::from_terms(field, VarSpace::Ambient, terms.collect::<Vec<_>>()).expect("small polynomial")
}

/// A unitriangular band matrix with pseudo-random entries of width `width`.
fn band_matrix(field: &Field, width: i64, seed: u64) -> TriangularZMatrix {
    let f = field.clone();
    TriangularZMatrix::new(field, VarSpace::Ambient, format!("band{seed}"), move |i, j| {
        if i > j || j - i > width {
            return Ok(Poly::zero(&f, VarSpace::Ambient));
        }
        if i == j {
            return Ok(Poly::one(&f, VarSpace::Ambient));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[i as u64, j as u64]));
        Ok(random_poly(&f, &mut rng))
    })
}

fn random_decreasing(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut pool: Vec<i64> = (lo..=hi).collect();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(pool.remove(rng.gen_range(0..pool.len())));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn random_matrix(field: &Field, u: usize, rng: &mut ChaCha8Rng) -> Result<PolyMatrix> {
    PolyMatrix::from_fn(field, VarSpace::Ambient, u, u, |_, _| Ok(random_poly(field, rng)))
}

fn random_partition(rng: &mut ChaCha8Rng, max_len: usize, max_part: u64) -> Partition {
    let mut parts: Vec<u64> = (0..rng.gen_range(0..=max_len)).map(|_| rng.gen_range(1..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted positive parts")
}

/// Seeded trials of the Cauchy–Binet expansion, the sign-scaling lemma and
/// the too-many-zeroes lemma, plus the identity-matrix case.
pub fn check_matrix_lemmas(field: &Field, seed: u64) -> Result<Vec<CaseReport>> {
    let q = field.q();
    let mut out = Vec::new();

    let id = TriangularZMatrix::identity(field, VarSpace::Ambient);
    let cb = cauchy_binet(&id, &id, &[1, 0], &[1, 0])?;
    let case = Case::new("matrix/cauchy-binet", q, 2, "identity");
    out.push(case.equal(&cb.direct, &cb.expansion_sum()?));

    for t in 0..TRIALS as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[1, t]));
        let u = rng.gen_range(1..=3);
        let width = rng.gen_range(1..=3);
        let a = band_matrix(field, width, derive_seed(seed, &[2, t]));
        let b = band_matrix(field, width, derive_seed(seed, &[3, t]));
        let i = random_decreasing(&mut rng, u, -4, 4);
        let j = random_decreasing(&mut rng, u, -4, 4);
        let case = Case::new("matrix/cauchy-binet", q, u, format!("trial {t} width {width} rows {i:?} cols {j:?}"));
        let cb = cauchy_binet(&a, &b, &i, &j)?;
        out.push(case.equal(&cb.direct, &cb.expansion_sum()?));
    }

    for t in 0..TRIALS as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[4, t]));
        let u = rng.gen_range(1..=3);
        let c = random_matrix(field, u, &mut rng)?;
        let lambda = random_partition(&mut rng, u, 3);
        let nu = random_partition(&mut rng, u, 3);
        let case = Case::new("matrix/scale-sign", q, u, format!("trial {t}")).shapes(&lambda, &nu);
        let lhs = scale_sign_det(&c, &lambda, &nu, u)?;
        let odd = (lambda.size() + nu.size()) % 2 == 1;
        let rhs = c.det()?.scale(odd_sign(field, odd));
        out.push(case.equal(&lhs, &rhs));
    }

    for t in 0..TRIALS as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[5, t]));
        let u = rng.gen_range(2..=4);
        let x_len = rng.gen_range(1..=u);
        let xs: Vec<usize> = random_decreasing(&mut rng, x_len, 0, u as i64 - 1).iter().map(|&k| k as usize).collect();
        let y_len = (u + 1 - x_len).min(u);
        let ys: Vec<usize> = random_decreasing(&mut rng, y_len, 0, u as i64 - 1).iter().map(|&k| k as usize).collect();
        let c = random_matrix(field, u, &mut rng)?;
        let c = PolyMatrix::from_fn(field, VarSpace::Ambient, u, u, |r, s| {
            Ok(if xs.contains(&r) && ys.contains(&s) { Poly::zero(field, VarSpace::Ambient) } else { c.get(r, s).clone() })
        })?;
        let case = Case::new("matrix/too-many-zeroes", q, u, format!("trial {t} rows {xs:?} cols {ys:?}"));
        let vanishes = too_many_zeroes_check(&c, &xs, &ys)?;
        out.push(case.finish(vanishes, c.det()?, "0"));
    }
    Ok(out)
}

/// Per-flag subspace identities: `π(V) = prod π(V_{i-1}⫽V_i)`, the coset
/// product for every step, and the quotient tower for every pair of members.
pub fn check_flag_subspace_identities(v: &Subspace, flag_index: usize, flag: &Flag) -> Result<Vec<CaseReport>> {
    let q = v.field().q();
    let n = v.dim();
    let label = |extra: &str| format!("{} flag {flag_index}{extra}", span_text(v));
    let mut out = Vec::new();

    let case = Case::new("subspace/pi-flag", q, n, label(""));
    let mut rhs = Poly::one(v.field(), v.space());
    for (a, b) in flag.steps() {
        rhs = rhs.mul(&a.internal_quotient(b)?.pi_product()?)?;
    }
    out.push(case.equal(&v.pi_product()?, &rhs));

    for (i, (a, b)) in flag.steps().enumerate() {
        let case = Case::new("subspace/coset-product", q, n, label(&format!(" step {}", i + 1)));
        let lhs = a.internal_quotient(b)?.pi_product()?;
        let mut rhs = Poly::one(v.field(), v.space());
        for w in a.enumerate_vectors()? {
            if !b.contains(&w)? {
                rhs = rhs.mul(&w)?;
            }
        }
        out.push(case.equal(&lhs, &rhs));
    }

    let chain = &flag.chain;
    for a in 0..chain.len() {
        for b in a + 1..chain.len() {
            let (u, t) = (&chain[a], &chain[b]);
            let case = Case::new("subspace/tower", q, n, label(&format!(" U=V_{a} T=V_{b}")));
            let direct = v.internal_quotient(u)?;
            let stepwise = v.internal_quotient(t)?.internal_quotient(&u.internal_quotient(t)?)?;
            out.push(case.finish(direct == stepwise, &direct, &stepwise));
        }
    }
    Ok(out)
}

/// The substitution `ψ: X_i ↦ (basis of V)_i` maps `W⫽U` onto `ψ(W)⫽ψ(U)`
/// for `W` the universal coordinate space and `U` each of its lines.
pub fn check_quotient_functoriality(v: &Subspace) -> Result<Vec<CaseReport>> {
    let field = v.field();
    let n = v.dim();
    let vars: Vec<Poly> = (0..n as u32).map(|i| Poly::universal_var(field, i)).collect();
    let w = Subspace::span(field, VarSpace::Universal, &vars)?;
    let mut out = Vec::new();
    for u in w.enumerate_lines()? {
        let case = Case::new("subspace/quotient-functoriality", field.q(), n, format!("{} U=span({u})", span_text(v)));
        let image_of_quotient = w.internal_quotient(&u)?.map_morphism(v.basis(), v.space())?;
        let quotient_of_images =
            w.map_morphism(v.basis(), v.space())?.internal_quotient(&u.map_morphism(v.basis(), v.space())?)?;
        let pass = image_of_quotient == quotient_of_images && image_of_quotient.dim() == n - 1;
        out.push(case.finish(pass, &image_of_quotient, &quotient_of_images));
    }
    Ok(out)
}

/// `π(U) · φ(H_{r-1}(U)) = -H_r(U)` for every line `U ⊆ V`, `1 ≤ r ≤ max_r`.
pub fn check_hook_steps(ctx: &SchurContext, v: &Subspace, max_r: u64) -> Result<Vec<CaseReport>> {
    let mut out = Vec::new();
    for u in v.enumerate_lines()? {
        for r in 1..=max_r {
            let case = Case::new("subspace/hook-step", ctx.field().q(), v.dim(), format!("span({u}) r={r}"));
            let lhs = u.pi_product()?.mul(&ctx.h_r(r as i64 - 1, &u)?.frobenius(1)?)?;
            out.push(case.equal(&lhs, &ctx.h_r(r as i64, &u)?.neg()));
        }
    }
    Ok(out)
}

/// `S_λ(V) = (-1)^n π(V) (S_{λ⊖1}(V))^q` for `ℓ(λ) = dim V`.
pub fn check_fullhouse(ctx: &SchurContext, lambda: &Partition, v: &Subspace) -> Result<CaseReport> {
    let case = Case::new("subspace/fullhouse", ctx.field().q(), v.dim(), span_text(v)).shapes(lambda, &Partition::empty());
    let rhs = ctx.fullhouse_reduce(lambda, v)?;
    Ok(case.equal(&ctx.schur_s(lambda, v)?, &rhs))
}

/// `sum_{α ∈ F} α^i = 0` for every `i < q - 1`.
pub fn check_zerosum_field(field: &Field) -> Vec<CaseReport> {
    let q = field.q();
    (0..q.saturating_sub(1) as u64)
        .map(|i| {
            let case = Case::new("elementary/zerosum-field", q, 1, format!("i={i}"));
            let s = field.power_sum(i);
            case.finish(s.is_zero(), field.format_element(s), "0")
        })
        .collect()
}

/// `π(span(v)) = -v^{q-1}` for every nonzero `v` in `span(x, y)`.
pub fn check_pi_of_lines(field: &Field) -> Result<Vec<CaseReport>> {
    let v = coordinate_subspace(field, 2)?;
    let mut out = Vec::new();
    for w in v.enumerate_vectors()?.into_iter().skip(1) {
        let case = Case::new("elementary/pi-line", field.q(), 2, format!("v={w}"));
        let line = Subspace::span(field, VarSpace::Ambient, std::slice::from_ref(&w))?;
        out.push(case.equal(&line.pi_product()?, &w.pow(field.q() as u64 - 1)?.neg()));
    }
    Ok(out)
}

/// `sum_{L} b_L = -sum_{w ≠ 0} b_{span(w)}` for random `b_L`, `V = span(x_1..x_n)`.
pub fn check_linesum(field: &Field, n: usize, seed: u64) -> Result<Vec<CaseReport>> {
    let v = coordinate_subspace(field, n)?;
    let lines = v.enumerate_lines()?;
    let mut out = Vec::new();
    for t in 0..5u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[6, n as u64, t]));
        let values: HashMap<Subspace, Poly> = lines.iter().map(|l| (l.clone(), random_poly(field, &mut rng))).collect();
        let case = Case::new("elementary/linesum", field.q(), n, format!("{} trial {t}", span_text(&v)));
        let mut lhs = Poly::zero(field, VarSpace::Ambient);
        for l in &lines {
            lhs = lhs.add(&values[l])?;
        }
        let mut rhs = Poly::zero(field, VarSpace::Ambient);
        for w in v.enumerate_vectors()?.into_iter().skip(1) {
            let line = Subspace::span(field, VarSpace::Ambient, &[w])?;
            rhs = rhs.sub(&values[&line])?;
        }
        out.push(case.equal(&lhs, &rhs));
    }
    Ok(out)
}

/// `sum_{α ∈ F^n} P(α) = 0` for random `P` of total degree `< n(q-1)` in
/// `t_1..t_n` with coefficients in the polynomial ring on two further variables.
pub fn check_cw_lemma(field: &Field, n: usize, seed: u64, trials: usize) -> Result<Vec<CaseReport>> {
    let q = field.q();
    let bound = n as u64 * (q as u64 - 1);
    let mut out = Vec::new();
    let tuples = coordinate_subspace(field, n)?.enumerate_vectors()?;
    let points: Vec<Vec<Poly>> = tuples
        .iter()
        .map(|w| {
            (0..n as u32)
                .map(|i| {
                    let c = w.coefficient(&Monomial::var(i, QExponent::integer(1, q)));
                    Poly::constant(field, VarSpace::Ambient, c)
                })
                .collect()
        })
        .collect();
    for t in 0..trials as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &[7, n as u64, t]));
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=5) {
            let exps: Vec<u64> = loop {
                let e: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=bound)).collect();
                if e.iter().sum::<u64>() < bound {
                    break e;
                }
            };
            let mut pairs: Vec<(u32, QExponent)> =
                exps.iter().enumerate().map(|(i, &e)| (i as u32, QExponent::integer(e, q))).collect();
            pairs.push((n as u32, QExponent::integer(rng.gen_range(0..=2), q)));
            pairs.push((n as u32 + 1, QExponent::integer(rng.gen_range(0..=2), q)));
            terms.push((Monomial::from_pairs(q, &pairs).expect("integer exponents"), field.element(rng.gen_range(1..q))));
        }
        let p = Poly::from_terms(field, VarSpace::Ambient, terms)?;
        let case = Case::new("elementary/coefficient-sum", q, n, format!("P={p}"));
        let mut sum = Poly::zero(field, VarSpace::Ambient);
        for pt in &points {
            let mut images = pt.clone();
            images.push(Poly::var(field, n as u32));
            images.push(Poly::var(field, n as u32 + 1));
            sum = sum.add(&p.evaluate_morphism(&images, VarSpace::Ambient)?)?;
        }
        out.push(case.finish(sum.is_zero(), &sum, "0"));
    }
    Ok(out)
}

/// `sum_{w ∈ V \ 0} w^{(q-1)(q^{a_1} + ... + q^{a_k})} = 0` for all `k < n`,
/// all `a_i ≤ 3`, `V = span(x_1..x_n)`.
pub fn check_zerosum(field: &Field, n: usize) -> Result<Vec<CaseReport>> {
    let q = field.q() as u64;
    let v = coordinate_subspace(field, n)?;
    let vectors = v.enumerate_vectors()?;
    let mut out = Vec::new();
    for k in 1..n {
        for code in 0..4u64.pow(k as u32) {
            let a: Vec<u64> = (0..k).map(|i| (code / 4u64.pow(i as u32)) % 4).collect();
            let exponent = (q - 1) * a.iter().map(|&ai| q.pow(ai as u32)).sum::<u64>();
            let case = Case::new("elementary/zerosum", q as u32, n, format!("{} a={a:?}", span_text(&v)));
            let mut sum = Poly::zero(field, VarSpace::Ambient);
            for w in vectors.iter().skip(1) {
                sum = sum.add(&w.pow(exponent)?)?;
            }
            out.push(case.finish(sum.is_zero(), &sum, "0"));
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// For every admissible `(α, β)` with entries in `0..=n+2` and every
/// permutation `σ ≠ id`, some `α_i - β_{σ(i)} ∉ {0, 1}`.
pub fn check_perm_lemma(n: usize) -> Result<CaseReport> {
    let case = Case::new("elementary/perm", 0, n, format!("entries 0..={}", n + 2));
    let perms = permutations(n);
    let top = n as i64 + 2;
    let mut alphas = Vec::new();
    let mut alpha = Vec::new();
    choose_decreasing(top, n, &mut alpha, &mut alphas);
    let (mut checked, mut missing) = (0u64, None);
    for alpha in &alphas {
        for shift in 0..(1u32 << n) {
            let beta: Vec<i64> = alpha.iter().enumerate().map(|(i, a)| a - ((shift >> i) & 1) as i64).collect();
            if beta.windows(2).any(|w| w[0] <= w[1]) {
                continue;
            }
            for sigma in &perms {
                match perm_witness(alpha, &beta, sigma)? {
                    None if sigma.iter().enumerate().any(|(i, &s)| i != s) => {
                        missing.get_or_insert(format!("alpha={alpha:?} beta={beta:?} sigma={sigma:?}"));
                    }
                    _ => checked += 1,
                }
            }
        }
    }
    Ok(match missing {
        None => case.finish(true, format!("{checked} triples with a witness"), format!("{checked} triples")),
        Some(m) => case.finish(false, format!("no witness for {m}"), "a witness"),
    })
}

fn choose_decreasing(top: i64, k: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    let hi = cur.last().map_or(top, |&l| l - 1);
    for v in (0..=hi).rev() {
        cur.push(v);
        choose_decreasing(top, k, cur, out);
        cur.pop();
    }
}

/// Linesum, coefficient-sum and zerosum checks for one `(q, n)`, plus the
/// field-level power-sum and line-product checks.
pub fn check_elementary_lemmas(field: &Field, n: usize, seed: u64) -> Result<Vec<CaseReport>> {
    let mut out = check_zerosum_field(field);
    out.extend(check_pi_of_lines(field)?);
    out.extend(check_linesum(field, n, seed)?);
    out.extend(check_cw_lemma(field, n, seed, TRIALS)?);
    out.extend(check_zerosum(field, n)?);
    Ok(out)
}

/// A sweep over fields, dimensions, partition weights and identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    /// Field specifications such as `q=2` or `q=2^2`.
    pub fields: Vec<String>,
    pub dim_min: usize,
    pub dim_max: usize,
    /// Largest `|λ|`.
    pub max_weight: u64,
    pub identities: Vec<Identity>,
    pub seed: u64,
    /// Ceiling on `q^dim` for enumerations.
    pub enumeration_ceiling: u64,
    /// Ceiling on the number of terms of any intermediate polynomial.
    pub max_terms: usize,
    /// Keep long passing values verbatim instead of as digests.
    pub full_values: bool,
    /// Record wall time per case; off gives byte-identical reports.
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig {
            fields: vec!["q=2".into(), "q=3".into()],
            dim_min: 1,
            dim_max: 3,
            max_weight: 4,
            identities: vec![Identity::All],
            seed: 0,
            enumeration_ceiling: DEFAULT_ENUMERATION_CEILING,
            max_terms: DEFAULT_TERM_LIMIT,
            full_values: false,
            timing: true,
        }
    }
}

impl SweepConfig {
    /// Parses the fields and checks every bound.
    pub fn validate(&self) -> Result<Vec<Field>> {
        let invalid = |m: String| Err(Error::ConfigInvalid(m));
        if self.dim_min > self.dim_max {
            return invalid(format!("empty dimension range {}..{}", self.dim_min, self.dim_max));
        }
        if self.dim_max > DIM_CEILING {
            return invalid(format!("dimension {} exceeds the ceiling {DIM_CEILING}", self.dim_max));
        }
        if self.max_weight > WEIGHT_CEILING {
            return invalid(format!("weight {} exceeds the ceiling {WEIGHT_CEILING}", self.max_weight));
        }
        if self.max_terms == 0 {
            return invalid("the term ceiling must be positive".into());
        }
        let fields = self.fields.iter().map(|s| s.parse::<Field>()).collect::<Result<Vec<_>>>()?;
        for f in &fields {
            let count = (f.q() as u64).checked_pow(self.dim_max as u32).unwrap_or(u64::MAX);
            if count > self.enumeration_ceiling {
                return invalid(format!(
                    "q^dim = {count} for {f} and dimension {} exceeds the enumeration ceiling {}",
                    self.dim_max, self.enumeration_ceiling
                ));
            }
        }
        Ok(fields)
    }

    fn selected(&self) -> Vec<Identity> {
        let mut ids: Vec<Identity> = if self.identities.contains(&Identity::All) {
            Identity::EACH.to_vec()
        } else {
            self.identities.clone()
        };
        ids.sort();
        ids.dedup();
        ids
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregate {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub cases: Vec<CaseReport>,
    pub aggregate: Aggregate,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.aggregate.failed == 0
    }
}

/// `[N terms, B bytes, sha256 H]` digest of a long value.
pub fn digest(text: &str) -> String {
    let terms = if text == "0" { 0 } else { text.matches(" + ").count() + 1 };
    let hash = Sha256::digest(text.as_bytes());
    let hex: String = hash[..8].iter().map(|b| format!("{b:02x}")).collect();
    format!("[{terms} terms, {} bytes, sha256 {hex}]", text.len())
}

type Job = Box<dyn Fn() -> Result<Vec<CaseReport>> + Send + Sync>;

/// Runs every selected identity over the configured grid.
///
/// Cases run in parallel; the output order depends only on the
/// configuration. Failing cases always keep both sides verbatim.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let fields = cfg.validate()?;
    set_enumeration_ceiling(cfg.enumeration_ceiling);
    set_term_limit(cfg.max_terms);
    let mut jobs: Vec<(Case, Job)> = Vec::new();
    for id in cfg.selected() {
        for field in &fields {
            add_jobs(&mut jobs, id, field, cfg)?;
        }
        if id == Identity::Elementary {
            for n in 0..=6 {
                jobs.push((Case::new("elementary/perm", 0, n, ""), Box::new(move || Ok(vec![check_perm_lemma(n)?]))));
            }
        }
    }
    let cases: Vec<CaseReport> = jobs
        .par_iter()
        .flat_map_iter(|(case, job)| {
            let reports = job().unwrap_or_else(|e| vec![case.clone().error(&e)]);
            reports.into_iter().map(|mut r| {
                if r.passed() && !cfg.full_values {
                    if r.lhs.len() > VERBATIM_LIMIT {
                        r.lhs = digest(&r.lhs);
                    }
                    if r.rhs.len() > VERBATIM_LIMIT {
                        r.rhs = digest(&r.rhs);
                    }
                }
                if !cfg.timing {
                    r.millis = 0;
                }
                r
            })
        })
        .collect();
    let passed = cases.iter().filter(|c| c.passed()).count();
    let aggregate = Aggregate { total: cases.len(), passed, failed: cases.len() - passed, seed: cfg.seed };
    Ok(SweepReport { cases, aggregate })
}

fn add_jobs(jobs: &mut Vec<(Case, Job)>, id: Identity, field: &Field, cfg: &SweepConfig) -> Result<()> {
    let ctx = SchurContext::new(field);
    let q = field.q();
    let w = cfg.max_weight;
    let seed = derive_seed(cfg.seed, &[q as u64]);
    let mut push = |case: Case, job: Job| jobs.push((case, job));

    if id == Identity::Elementary {
        let f = field.clone();
        push(Case::new("elementary/zerosum-field", q, 1, ""), Box::new(move || Ok(check_zerosum_field(&f))));
        let f = field.clone();
        push(Case::new("elementary/pi-line", q, 2, ""), Box::new(move || check_pi_of_lines(&f)));
    }
    if id == Identity::Matrix {
        let f = field.clone();
        push(Case::new("matrix/lemmas", q, 0, ""), Box::new(move || check_matrix_lemmas(&f, seed)));
    }

    for n in cfg.dim_min..=cfg.dim_max {
        let v = coordinate_subspace(field, n)?;
        let shorter = Partition::all_up_to(w, n.saturating_sub(1));
        let fitting = Partition::all_up_to(w, n);
        let label = span_text(&v);
        let base = |name: &str| Case::new(name, q, n, label.clone());
        match id {
            Identity::VlRecursion if n >= 1 => {
                for lam in &shorter {
                    for mu in shorter.iter().filter(|mu| mu.size() <= lam.size()) {
                        let (c, v, l, m) = (ctx.clone(), v.clone(), lam.clone(), mu.clone());
                        push(
                            base("vl-recursion").shapes(lam, mu),
                            Box::new(move || Ok(vec![check_vl_recursion(&c, &l, &m, &v)?])),
                        );
                    }
                }
            }
            Identity::StraightRecursion if n >= 1 => {
                for lam in &shorter {
                    let (c, v, l) = (ctx.clone(), v.clone(), lam.clone());
                    push(
                        base("straight-recursion").shapes(lam, &Partition::empty()),
                        Box::new(move || Ok(vec![check_straight_recursion(&c, &l, &v)?])),
                    );
                }
            }
            Identity::FlagFormula => {
                let steps = std::sync::Arc::new(flag_step_quotients(&v)?);
                for lam in &fitting {
                    let (c, v, l, s) = (ctx.clone(), v.clone(), lam.clone(), steps.clone());
                    push(
                        base("flag-formula").shapes(lam, &Partition::empty()),
                        Box::new(move || Ok(vec![check_flag_formula_with(&c, &l, &v, &s)?])),
                    );
                }
            }
            Identity::Pieri if n >= 1 => {
                for line in v.enumerate_lines()? {
                    for lam in &shorter {
                        for mu in shorter.iter().filter(|mu| mu.size() <= lam.size()) {
                            let (c, v, l, m, line) = (ctx.clone(), v.clone(), lam.clone(), mu.clone(), line.clone());
                            push(
                                base("pieri").shapes(lam, mu),
                                Box::new(move || Ok(vec![check_pieri(&c, &l, &m, &v, &line)?])),
                            );
                        }
                    }
                }
            }
            Identity::Coproduct => {
                for u in standard_subspaces(&v)? {
                    for lam in &fitting {
                        for mu in fitting.iter().filter(|mu| mu.size() <= lam.size()) {
                            let (c, v, l, m, u) = (ctx.clone(), v.clone(), lam.clone(), mu.clone(), u.clone());
                            push(
                                base("coproduct").shapes(lam, mu),
                                Box::new(move || Ok(vec![check_coproduct(&c, &l, &m, &v, &u)?])),
                            );
                        }
                    }
                }
            }
            Identity::Matrix => {
                let he = matrix_window(q, n, 6);
                let (c, vv) = (ctx.clone(), v.clone());
                push(base("matrix/h-e-inverse"), Box::new(move || Ok(vec![check_h_e_inverse(&c, &vv, he)?])));
                let qf = matrix_window(q, n, n as i64 + 3);
                for u in standard_subspaces(&v)? {
                    let (c, v, u) = (ctx.clone(), v.clone(), u.clone());
                    push(
                        base("matrix/quotient-factorization"),
                        Box::new(move || Ok(vec![check_quotient_factorization(&c, &v, &u, qf)?])),
                    );
                }
            }
            Identity::Subspace => {
                for (i, flag) in v.enumerate_flags()?.into_iter().enumerate() {
                    let vv = v.clone();
                    push(base("subspace/flag"), Box::new(move || check_flag_subspace_identities(&vv, i, &flag)));
                }
                let vv = v.clone();
                push(base("subspace/quotient-functoriality"), Box::new(move || check_quotient_functoriality(&vv)));
                let (c, vv) = (ctx.clone(), v.clone());
                push(base("subspace/hook-step"), Box::new(move || check_hook_steps(&c, &vv, 3)));
                for lam in fitting.iter().filter(|l| l.len() == n && n >= 1) {
                    let (c, v, l) = (ctx.clone(), v.clone(), lam.clone());
                    push(
                        base("subspace/fullhouse").shapes(lam, &Partition::empty()),
                        Box::new(move || Ok(vec![check_fullhouse(&c, &l, &v)?])),
                    );
                }
            }
            Identity::Elementary => {
                let f = field.clone();
                let s = derive_seed(seed, &[n as u64]);
                push(
                    base("elementary"),
                    Box::new(move || {
                        let mut out = check_linesum(&f, n, s)?;
                        out.extend(check_cw_lemma(&f, n, s, TRIALS)?);
                        out.extend(check_zerosum(&f, n)?);
                        Ok(out)
                    }),
                );
            }
            _ => {}
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u32) -> Field {
        Field::of_order(q).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::EACH.into_iter().chain([Identity::All]) {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("nonsense".parse::<Identity>().unwrap_err().is_parse());
    }

    #[test]
    fn vl_recursion_examples() {
        let f = field(2);
        let ctx = SchurContext::new(&f);
        let v = coordinate_subspace(&f, 2).unwrap();
        let r = check_vl_recursion(&ctx, &part("1"), &Partition::empty(), &v).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.lhs, "x^2 + x*y + y^2");
        assert!(check_vl_recursion(&ctx, &part("1"), &part("1"), &v).unwrap().passed());
        let r = check_vl_recursion(&ctx, &part("1"), &part("2"), &coordinate_subspace(&f, 3).unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("0", "0"));
        assert!(matches!(
            check_vl_recursion(&ctx, &part("1,1"), &Partition::empty(), &v),
            Err(Error::LengthTooLong { .. })
        ));
    }

    #[test]
    fn straight_and_flag_examples() {
        for q in [2, 3] {
            let f = field(q);
            let ctx = SchurContext::new(&f);
            let v = coordinate_subspace(&f, 2).unwrap();
            for lam in ["", "1"] {
                assert!(check_straight_recursion(&ctx, &part(lam), &v).unwrap().passed());
            }
            for lam in ["", "1", "1,1", "2,1"] {
                assert!(check_flag_formula(&ctx, &part(lam), &v).unwrap().passed(), "q={q} {lam}");
            }
        }
        let f = field(2);
        let ctx = SchurContext::new(&f);
        let zero = Subspace::zero(&f, VarSpace::Ambient);
        assert!(check_flag_formula(&ctx, &Partition::empty(), &zero).unwrap().passed());
    }

    #[test]
    fn elementary_examples() {
        for q in [2, 3, 4, 5] {
            assert!(check_zerosum_field(&field(q)).iter().all(CaseReport::passed));
        }
        let f = field(3);
        let reports = check_pi_of_lines(&f).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(CaseReport::passed));
        let x = reports.iter().find(|r| r.basis == "v=x").unwrap();
        assert_eq!(x.lhs, "2*x^2");
        let f2 = field(2);
        assert!(check_linesum(&f2, 2, 1).unwrap().iter().all(CaseReport::passed));
        let zs = check_zerosum(&f2, 2).unwrap();
        assert_eq!(zs.len(), 4);
        assert!(zs.iter().all(CaseReport::passed));
        assert!(check_cw_lemma(&f, 2, 5, 5).unwrap().iter().all(CaseReport::passed));
    }

    #[test]
    fn perm_lemma_small() {
        for n in 0..=4 {
            assert!(check_perm_lemma(n).unwrap().passed());
        }
    }

    #[test]
    fn matrix_window_budget() {
        assert_eq!(matrix_window(2, 2, 6), 6);
        assert_eq!(matrix_window(3, 1, 6), 6);
        assert!(matrix_window(3, 3, 6) < 6);
    }

    #[test]
    fn sweep_validation() {
        let cfg = SweepConfig { dim_max: 9, ..SweepConfig::default() };
        assert!(matches!(cfg.validate(), Err(Error::ConfigInvalid(_))));
        let cfg = SweepConfig { fields: vec!["q=5".into()], dim_max: 4, ..SweepConfig::default() };
        assert!(matches!(cfg.validate(), Err(Error::ConfigInvalid(_))));
        let cfg = SweepConfig { fields: vec!["q=6".into()], ..SweepConfig::default() };
        assert!(cfg.validate().is_err());
        let empty = run_sweep(&SweepConfig { identities: vec![], ..SweepConfig::default() }).unwrap();
        assert_eq!(empty.aggregate.total, 0);
        assert!(empty.all_passed());
    }

    #[test]
    fn small_sweep_is_deterministic() {
        let cfg = SweepConfig {
            fields: vec!["q=2".into()],
            dim_min: 2,
            dim_max: 2,
            max_weight: 2,
            identities: vec![Identity::VlRecursion, Identity::Pieri, Identity::Subspace],
            timing: false,
            ..SweepConfig::default()
        };
        let a = run_sweep(&cfg).unwrap();
        let b = run_sweep(&cfg).unwrap();
        assert!(a.all_passed(), "{:?}", a.cases.iter().find(|c| !c.passed()));
        assert!(a.aggregate.total > 0);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn sign_error_in_pieri_is_caught() {
        // A double that forgets the sign (-1)^{|λ|-|ν|}.
        let unsigned = |c: &SchurContext, l: &Partition, m: &Partition, v: &Subspace, line: &Poly| -> Result<Poly> {
            let q = c.field().q();
            let mut total = Poly::zero(c.field(), v.space());
            for nu in l.vertical_strip_subpartitions() {
                let e = crate::partitions::q_exponent(l, &nu, v.dim(), q)?;
                total = total.add(&line.pow(e)?.mul(&c.skew_s(&nu, m, v)?)?)?;
            }
            Ok(total)
        };
        let f = field(3);
        let ctx = SchurContext::new(&f);
        let v = coordinate_subspace(&f, 2).unwrap();
        let r = check_vl_recursion_with(&ctx, &part("1"), &Partition::empty(), &v, &unsigned).unwrap();
        assert!(!r.passed());
        assert_ne!(r.lhs, r.rhs);
        assert!(check_vl_recursion(&ctx, &part("1"), &Partition::empty(), &v).unwrap().passed());
    }

    #[test]
    fn digest_is_stable() {
        let d = digest("x + y");
        assert!(d.starts_with("[2 terms, 5 bytes, sha256 "));
        assert_eq!(d, digest("x + y"));
        assert!(digest("0").starts_with("[0 terms"));
    }
}
