//! Determinants over [`Poly`] and upper-triangular matrices indexed by `Z × Z`.

use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::partitions::Partition;
use crate::ppoly::{Poly, VarSpace};

/// A dense rectangular matrix of polynomials from one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
    field: Field,
    space: VarSpace,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl PolyMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(field: &Field, space: VarSpace, rows: usize, cols: usize, entries: Vec<Poly>) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field || e.space() != space) {
            return Err(Error::SpecMismatch(format!("entry {bad} is from another ring")));
        }
        Ok(PolyMatrix { rows, cols, entries, field: field.clone(), space })
    }

    pub fn from_fn(
        field: &Field,
        space: VarSpace,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<Poly>,
    ) -> Result<PolyMatrix> {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c)?);
            }
        }
        PolyMatrix::new(field, space, rows, cols, entries)
    }

    pub fn identity(field: &Field, space: VarSpace, n: usize) -> PolyMatrix {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { Poly::one(field, space) } else { Poly::zero(field, space) })
            .collect();
        PolyMatrix { rows: n, cols: n, entries, field: field.clone(), space }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { rows: self.cols, cols: self.rows, entries, field: self.field.clone(), space: self.space }
    }

    /// Dense matrix product.
    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        PolyMatrix::from_fn(&self.field, self.space, self.rows, other.cols, |r, c| {
            let mut acc = Poly::zero(&self.field, self.space);
            for k in 0..self.cols {
                let (a, b) = (self.get(r, k), other.get(k, c));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b)?)?;
                }
            }
            Ok(acc)
        })
    }

    /// Determinant by cofactor expansion along successive rows, memoizing
    /// the minor for each set of surviving columns. The `0×0` determinant is 1.
    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows > 63 {
            return Err(Error::ShapeMismatch("determinants are limited to 63x63".into()));
        }
        let full: u64 = if self.rows == 0 { 0 } else { (1u64 << self.rows) - 1 };
        let mut memo: FxHashMap<u64, Poly> = FxHashMap::default();
        self.minor_det(0, full, &mut memo)
    }

    fn minor_det(&self, row: usize, cols: u64, memo: &mut FxHashMap<u64, Poly>) -> Result<Poly> {
        if row == self.rows {
            return Ok(Poly::one(&self.field, self.space));
        }
        if let Some(v) = memo.get(&cols) {
            return Ok(v.clone());
        }
        let mut acc = Poly::zero(&self.field, self.space);
        let mut position = 0usize;
        for c in 0..self.cols {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = self.get(row, c);
            if !entry.is_zero() {
                let minor = self.minor_det(row + 1, cols & !(1 << c), memo)?;
                if !minor.is_zero() {
                    let term = entry.mul(&minor)?;
                    acc = if position.is_multiple_of(2) { acc.add(&term)? } else { acc.sub(&term)? };
                }
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        Ok(acc)
    }
}

type EntryFn = dyn Fn(i64, i64) -> Result<Poly> + Send + Sync;

/// A lazily evaluated `Z × Z` matrix that is zero below the diagonal.
///
/// The entry function must be pure; the triangularity contract is audited on
/// every window that [`window_product`] touches.
#[derive(Clone)]
pub struct TriangularZMatrix {
    entry: Arc<EntryFn>,
    tag: String,
    field: Field,
    space: VarSpace,
}

impl fmt::Debug for TriangularZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriangularZMatrix({})", self.tag)
    }
}

impl TriangularZMatrix {
    pub fn new(
        field: &Field,
        space: VarSpace,
        tag: impl Into<String>,
        entry: impl Fn(i64, i64) -> Result<Poly> + Send + Sync + 'static,
    ) -> TriangularZMatrix {
        TriangularZMatrix { entry: Arc::new(entry), tag: tag.into(), field: field.clone(), space }
    }

    /// The identity matrix.
    pub fn identity(field: &Field, space: VarSpace) -> TriangularZMatrix {
        let f = field.clone();
        TriangularZMatrix::new(field, space, "I", move |i, j| {
            Ok(if i == j { Poly::one(&f, space) } else { Poly::zero(&f, space) })
        })
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn entry(&self, i: i64, j: i64) -> Result<Poly> {
        (self.entry)(i, j)
    }

    /// Applies `φ^k` to every entry.
    pub fn frobenius(&self, k: i64) -> TriangularZMatrix {
        let inner = self.clone();
        TriangularZMatrix::new(&self.field, self.space, format!("φ^{k}({})", self.tag), move |i, j| {
            inner.entry(i, j)?.frobenius(k)
        })
    }

    /// Checks `entry(i, j) = 0` for every `i > j` inside `[lo, hi]`.
    pub fn audit_triangular(&self, lo: i64, hi: i64) -> Result<()> {
        for i in lo..=hi {
            for j in lo..i {
                if !self.entry(i, j)?.is_zero() {
                    return Err(Error::HypothesisViolated(format!(
                        "{} has a nonzero entry at ({i}, {j}) below the diagonal",
                        self.tag
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The finite matrix with entries `m(rows[a], cols[b])`.
pub fn sub_minor(m: &TriangularZMatrix, rows: &[i64], cols: &[i64]) -> Result<PolyMatrix> {
    PolyMatrix::from_fn(&m.field, m.space, rows.len(), cols.len(), |a, b| m.entry(rows[a], cols[b]))
}

/// The product `a·b` restricted to `[lo, hi] × [lo, hi]`; row and column `r`
/// of the result stand for index `lo + r`.
pub fn window_product(a: &TriangularZMatrix, b: &TriangularZMatrix, lo: i64, hi: i64) -> Result<PolyMatrix> {
    if lo > hi {
        return Err(Error::WindowInvalid { lo, hi });
    }
    if a.field != b.field || a.space != b.space {
        return Err(Error::SpecMismatch("matrices over different rings".into()));
    }
    a.audit_triangular(lo, hi)?;
    b.audit_triangular(lo, hi)?;
    let n = (hi - lo + 1) as usize;
    let mut a_cache: FxHashMap<(i64, i64), Poly> = FxHashMap::default();
    let mut b_cache: FxHashMap<(i64, i64), Poly> = FxHashMap::default();
    for i in lo..=hi {
        for j in i..=hi {
            a_cache.insert((i, j), a.entry(i, j)?);
            b_cache.insert((i, j), b.entry(i, j)?);
        }
    }
    PolyMatrix::from_fn(&a.field, a.space, n, n, |r, c| {
        let (i, j) = (lo + r as i64, lo + c as i64);
        let mut acc = Poly::zero(&a.field, a.space);
        for k in i..=j {
            let (x, y) = (&a_cache[&(i, k)], &b_cache[&(k, j)]);
            if !x.is_zero() && !y.is_zero() {
                acc = acc.add(&x.mul(y)?)?;
            }
        }
        Ok(acc)
    })
}

/// One addend of the Cauchy–Binet expansion.
#[derive(Debug, Clone)]
pub struct CauchyBinetTerm {
    pub g: Vec<i64>,
    pub left: Poly,
    pub right: Poly,
}

/// Result of [`cauchy_binet`]: the determinant of the product minor computed
/// directly, and the expansion addends.
#[derive(Debug, Clone)]
pub struct CauchyBinet {
    pub direct: Poly,
    pub terms: Vec<CauchyBinetTerm>,
}

impl CauchyBinet {
    /// `sum_g det(left_g) det(right_g)`.
    pub fn expansion_sum(&self) -> Result<Poly> {
        self.terms.iter().try_fold(Poly::zero(self.direct.field(), self.direct.space()), |acc, t| {
            acc.add(&t.left.mul(&t.right)?)
        })
    }
}

/// Expands the minor of `a·b` on rows `i` and columns `j` (both strictly
/// decreasing, equal length `u`) as a sum over strictly decreasing `g` with
/// `i_k <= g_k <= j_k` of `det(a[i; g]) · det(b[g; j])`.
///
/// The direct determinant uses a window one wider than the indices on each side.
pub fn cauchy_binet(a: &TriangularZMatrix, b: &TriangularZMatrix, i: &[i64], j: &[i64]) -> Result<CauchyBinet> {
    for idx in [i, j] {
        if idx.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::IndexNotDecreasing(idx.to_vec()));
        }
    }
    if i.len() != j.len() {
        return Err(Error::ShapeMismatch(format!("{} row indices vs {} column indices", i.len(), j.len())));
    }
    let u = i.len();
    let one = Poly::one(&a.field, a.space);
    if u == 0 {
        return Ok(CauchyBinet {
            direct: one.clone(),
            terms: vec![CauchyBinetTerm { g: Vec::new(), left: one.clone(), right: one }],
        });
    }
    let lo = i.iter().chain(j).min().unwrap() - 1;
    let hi = i.iter().chain(j).max().unwrap() + 1;
    let prod = window_product(a, b, lo, hi)?;
    let direct = PolyMatrix::from_fn(&a.field, a.space, u, u, |r, c| {
        Ok(prod.get((i[r] - lo) as usize, (j[c] - lo) as usize).clone())
    })?
    .det()?;

    let mut terms = Vec::new();
    let mut g = Vec::with_capacity(u);
    enumerate_g(i, j, 0, i64::MAX, &mut g, &mut |g| {
        let left = sub_minor(a, i, g)?.det()?;
        let right = sub_minor(b, g, j)?.det()?;
        terms.push(CauchyBinetTerm { g: g.to_vec(), left, right });
        Ok(())
    })?;
    Ok(CauchyBinet { direct, terms })
}

fn enumerate_g(
    i: &[i64],
    j: &[i64],
    k: usize,
    bound: i64,
    g: &mut Vec<i64>,
    visit: &mut dyn FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if k == i.len() {
        return visit(g);
    }
    let hi = j[k].min(bound - 1);
    for v in (i[k]..=hi).rev() {
        g.push(v);
        enumerate_g(i, j, k + 1, v, g, visit)?;
        g.pop();
    }
    Ok(())
}

/// `det((-1)^{λ_i - ν_j - i + j} c_{i,j})` for a `u × u` matrix `c`.
pub fn scale_sign_det(c: &PolyMatrix, lambda: &Partition, nu: &Partition, u: usize) -> Result<Poly> {
    if c.rows != u || c.cols != u || lambda.len() > u || nu.len() > u {
        return Err(Error::ShapeMismatch(format!(
            "need a {u}x{u} matrix and partitions of length <= {u}, got {}x{}, {lambda}, {nu}",
            c.rows, c.cols
        )));
    }
    let signed = PolyMatrix::from_fn(&c.field, c.space, u, u, |r, s| {
        let e = lambda.part(r) as i64 - nu.part(s) as i64 - r as i64 + s as i64;
        let v = c.get(r, s);
        Ok(if e.rem_euclid(2) == 0 { v.clone() } else { v.neg() })
    })?;
    signed.det()
}

/// Checks the hypothesis of the too-many-zeroes lemma (`c` vanishes on
/// `X × Y` with `|X| + |Y| > u`) and reports whether `det(c) = 0`.
pub fn too_many_zeroes_check(c: &PolyMatrix, xs: &[usize], ys: &[usize]) -> Result<bool> {
    let u = c.rows;
    if c.cols != u {
        return Err(Error::NotSquare { rows: c.rows, cols: c.cols });
    }
    let distinct = |v: &[usize]| {
        let mut s = v.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == v.len() && v.iter().all(|&k| k < u)
    };
    if !distinct(xs) || !distinct(ys) {
        return Err(Error::HypothesisViolated("index sets must be distinct in-range indices".into()));
    }
    if xs.len() + ys.len() <= u {
        return Err(Error::HypothesisViolated(format!(
            "|X| + |Y| = {} does not exceed {u}",
            xs.len() + ys.len()
        )));
    }
    for &x in xs {
        for &y in ys {
            if !c.get(x, y).is_zero() {
                return Err(Error::HypothesisViolated(format!("entry ({x}, {y}) is nonzero")));
            }
        }
    }
    Ok(c.det()?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ppoly::parse_poly;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(q: u32) -> Field {
        Field::of_order(q).unwrap()
    }

    fn mat(q: u32, rows: &[&[&str]]) -> PolyMatrix {
        let field = f(q);
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let entries = rows.iter().flat_map(|row| row.iter().map(|s| parse_poly(s, &field).unwrap())).collect();
        PolyMatrix::new(&field, VarSpace::Ambient, r, c, entries).unwrap()
    }

    /// Leibniz-formula determinant, used as an independent oracle.
    fn leibniz(m: &PolyMatrix) -> Poly {
        let n = m.rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut acc = Poly::zero(m.field(), m.space());
        permute(&mut perm, 0, &mut |p| {
            let inversions = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
            let mut term = Poly::one(m.field(), m.space());
            for (r, &c) in p.iter().enumerate() {
                term = term.mul(m.get(r, c)).unwrap();
            }
            acc = if inversions % 2 == 0 { acc.add(&term).unwrap() } else { acc.sub(&term).unwrap() };
        });
        acc
    }

    fn permute(v: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            visit(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, visit);
            v.swap(k, i);
        }
    }

    fn random_poly(field: &Field, rng: &mut ChaCha8Rng) -> Poly {
        let terms = rng.gen_range(0..4);
        let mut acc = Poly::zero(field, VarSpace::Ambient);
        for _ in 0..terms {
            let c = field.element(rng.gen_range(1..field.q()));
            let x = Poly::var(field, 0).pow(rng.gen_range(0..3)).unwrap();
            let y = Poly::var(field, 1).pow(rng.gen_range(0..3)).unwrap();
            acc = acc.add(&x.mul(&y).unwrap().scale(c)).unwrap();
        }
        acc
    }

    fn random_matrix(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> PolyMatrix {
        PolyMatrix::from_fn(field, VarSpace::Ambient, n, n, |_, _| Ok(random_poly(field, rng))).unwrap()
    }

    /// A seeded unitriangular band matrix with random entries above the diagonal.
    fn band_matrix(field: &Field, width: i64, seed: u64) -> TriangularZMatrix {
        let f2 = field.clone();
        TriangularZMatrix::new(field, VarSpace::Ambient, format!("band{seed}"), move |i, j| {
            if i > j || j - i > width {
                return Ok(Poly::zero(&f2, VarSpace::Ambient));
            }
            if i == j {
                return Ok(Poly::one(&f2, VarSpace::Ambient));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((i as u64) << 20) ^ (j as u64).wrapping_mul(0x9E37));
            Ok(random_poly(&f2, &mut rng))
        })
    }

    #[test]
    fn determinant_examples() {
        let field = f(2);
        let empty = PolyMatrix::new(&field, VarSpace::Ambient, 0, 0, vec![]).unwrap();
        assert!(empty.det().unwrap().is_one());
        assert_eq!(mat(2, &[&["x"]]).det().unwrap().to_string(), "x");
        assert_eq!(mat(2, &[&["x^2", "x"], &["y^2", "y"]]).det().unwrap().to_string(), "x^2*y + x*y^2");
        assert_eq!(mat(2, &[&["x", "y"]]).det(), Err(Error::NotSquare { rows: 1, cols: 2 }));
    }

    #[test]
    fn determinant_matches_leibniz_and_is_alternating() {
        let field = f(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=4 {
            let m = random_matrix(&field, n, &mut rng);
            let d = m.det().unwrap();
            assert_eq!(d, leibniz(&m));
            assert_eq!(m.transpose().det().unwrap(), d);
            if n >= 2 {
                let swapped = PolyMatrix::from_fn(&field, VarSpace::Ambient, n, n, |r, c| {
                    let r2 = match r { 0 => 1, 1 => 0, k => k };
                    Ok(m.get(r2, c).clone())
                })
                .unwrap();
                assert_eq!(swapped.det().unwrap(), d.neg());
                let repeated = PolyMatrix::from_fn(&field, VarSpace::Ambient, n, n, |r, c| {
                    Ok(m.get(if r == 1 { 0 } else { r }, c).clone())
                })
                .unwrap();
                assert!(repeated.det().unwrap().is_zero());
            }
        }
    }

    #[test]
    fn minors_and_windows() {
        let field = f(2);
        let id = TriangularZMatrix::identity(&field, VarSpace::Ambient);
        let m = sub_minor(&id, &[3, 1, -2], &[3, 1, -2]).unwrap();
        assert_eq!(m, PolyMatrix::identity(&field, VarSpace::Ambient, 3));
        let b = band_matrix(&field, 3, 11);
        let single = sub_minor(&b, &[2], &[4]).unwrap();
        assert_eq!(single.get(0, 0), &b.entry(2, 4).unwrap());
        let w = window_product(&id, &b, -3, 3).unwrap();
        for r in 0..7 {
            for c in 0..7 {
                assert_eq!(w.get(r, c), &b.entry(r as i64 - 3, c as i64 - 3).unwrap());
            }
        }
        assert_eq!(window_product(&id, &b, 2, 1).unwrap_err(), Error::WindowInvalid { lo: 2, hi: 1 });
    }

    #[test]
    fn window_product_matches_dense_and_associates() {
        let field = f(3);
        let (a, b, c) = (band_matrix(&field, 6, 1), band_matrix(&field, 6, 2), band_matrix(&field, 6, 3));
        let (lo, hi) = (-3, 3);
        let dense = |m: &TriangularZMatrix| sub_minor(m, &(lo..=hi).collect::<Vec<_>>(), &(lo..=hi).collect::<Vec<_>>()).unwrap();
        let ab = window_product(&a, &b, lo, hi).unwrap();
        assert_eq!(ab, dense(&a).mul(&dense(&b)).unwrap());
        let abc_left = ab.mul(&dense(&c)).unwrap();
        let abc_right = dense(&a).mul(&window_product(&b, &c, lo, hi).unwrap()).unwrap();
        assert_eq!(abc_left, abc_right);
    }

    #[test]
    fn lower_entries_are_rejected() {
        let field = f(2);
        let f2 = field.clone();
        let bad = TriangularZMatrix::new(&field, VarSpace::Ambient, "bad", move |_, _| Ok(Poly::one(&f2, VarSpace::Ambient)));
        let id = TriangularZMatrix::identity(&field, VarSpace::Ambient);
        assert!(matches!(window_product(&bad, &id, 0, 2), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn cauchy_binet_cases() {
        let field = f(2);
        let id = TriangularZMatrix::identity(&field, VarSpace::Ambient);
        let empty = cauchy_binet(&id, &id, &[], &[]).unwrap();
        assert!(empty.direct.is_one());
        assert_eq!(empty.terms.len(), 1);
        let r = cauchy_binet(&id, &id, &[4, 1], &[4, 1]).unwrap();
        assert!(r.direct.is_one());
        let nonzero: Vec<_> = r.terms.iter().filter(|t| !t.left.mul(&t.right).unwrap().is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].g, vec![4, 1]);
        assert!(matches!(cauchy_binet(&id, &id, &[1, 2], &[3, 4]), Err(Error::IndexNotDecreasing(_))));

        let field3 = f(3);
        for seed in 0..5 {
            let a = band_matrix(&field3, 8, 100 + seed);
            let b = band_matrix(&field3, 8, 200 + seed);
            let r = cauchy_binet(&a, &b, &[3, 0], &[5, 2]).unwrap();
            assert_eq!(r.expansion_sum().unwrap(), r.direct);
        }
    }

    #[test]
    fn scale_sign_examples() {
        let field = f(3);
        let p = |s: &str| s.parse::<Partition>().unwrap();
        let c = mat(3, &[&["x"]]);
        assert_eq!(scale_sign_det(&c, &p("1"), &Partition::empty(), 1).unwrap(), parse_poly("-x", &field).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&field, 3, &mut rng);
        let d = m.det().unwrap();
        assert_eq!(scale_sign_det(&m, &p("2,1"), &p("2,1"), 3).unwrap(), d);
        assert_eq!(scale_sign_det(&m, &p("3,2"), &p("1"), 3).unwrap(), d);
        assert_eq!(scale_sign_det(&m, &p("3,3"), &p("1,1"), 3).unwrap(), d);
        assert_eq!(scale_sign_det(&m, &p("3,1"), &p("1"), 3).unwrap(), d.neg());
        assert!(matches!(scale_sign_det(&m, &p("1,1,1,1"), &p("1"), 3), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn too_many_zeroes_cases() {
        let z = mat(2, &[&["0", "0"], &["0", "0"]]);
        assert!(too_many_zeroes_check(&z, &[0, 1], &[0, 1]).unwrap());
        let m = mat(3, &[&["x", "y", "1"], &["x", "0", "0"], &["y", "0", "0"]]);
        assert!(too_many_zeroes_check(&m, &[1, 2], &[1, 2]).unwrap());
        assert_eq!(leibniz(&m), Poly::zero(m.field(), VarSpace::Ambient));
        assert!(matches!(too_many_zeroes_check(&z, &[0], &[1]), Err(Error::HypothesisViolated(_))));
    }
}
