use proptest::prelude::*;

use qschur::fmatrix::{window_product, PolyMatrix, TriangularZMatrix};
use qschur::gf::Field;
use qschur::partitions::Partition;
use qschur::ppoly::{Monomial, Poly, QExponent, VarSpace};
use qschur::schur::SchurContext;
use qschur::subspaces::Subspace;
use qschur::verify::coordinate_subspace;

const ORDERS: [u32; 8] = [2, 3, 4, 5, 7, 8, 9, 25];

fn field(q: u32) -> Field {
    Field::of_order(q).unwrap()
}

/// Terms as (exponent of x, of y, of z, coefficient index).
type RawPoly = Vec<(u8, u8, u8, u32)>;

fn raw_poly(max_exp: u8, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((0..=max_exp, 0..=max_exp, 0..=max_exp, 0u32..64), 1..=max_terms)
}

fn build(f: &Field, raw: &RawPoly) -> Poly {
    let q = f.q();
    let terms: Vec<(Monomial, _)> = raw
        .iter()
        .map(|&(a, b, c, k)| {
            let pairs: Vec<(u32, QExponent)> =
                [a, b, c].iter().enumerate().map(|(i, &e)| (i as u32, QExponent::integer(e as u64, q))).collect();
            (Monomial::from_pairs(q, &pairs).unwrap(), f.element(k % q))
        })
        .collect();
    Poly::from_terms(f, VarSpace::Ambient, terms).unwrap()
}

#[test]
fn field_axioms_exhaustive() {
    for q in ORDERS {
        let f = field(q);
        let p = f.p() as u64;
        let els = f.elements();
        for &a in &els {
            assert_eq!(f.pow(a, q as u64), a, "q={q}");
            for &b in &els {
                assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)), "q={q}");
            }
        }
        assert_eq!(f.wilson_product(), f.neg(f.one()), "q={q}");
        for i in 0..q as u64 - 1 {
            assert!(f.power_sum(i).is_zero(), "q={q} i={i}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_composes_and_is_a_ring_map(
        q in prop::sample::select(vec![2u32, 3]),
        a in raw_poly(3, 4),
        b in raw_poly(3, 4),
        j in -2i64..3,
        k in -2i64..3,
    ) {
        let f = field(q);
        let (a, b) = (build(&f, &a), build(&f, &b));
        prop_assert_eq!(a.frobenius(j)?.frobenius(k)?, a.frobenius(j + k)?);
        prop_assert_eq!(a.mul(&b)?.frobenius(j)?, a.frobenius(j)?.mul(&b.frobenius(j)?)?);
        prop_assert_eq!(a.add(&b)?.frobenius(j)?, a.frobenius(j)?.add(&b.frobenius(j)?)?);
    }

    #[test]
    fn exact_division_and_no_zero_divisors(
        q in prop::sample::select(vec![2u32, 3, 4, 5]),
        a in raw_poly(4, 5),
        b in raw_poly(3, 4),
    ) {
        let f = field(q);
        let (a, b) = (build(&f, &a), build(&f, &b));
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b)?;
        prop_assert_eq!(prod.is_zero(), a.is_zero());
        prop_assert_eq!(prod.exact_div(&b)?, a);
    }

    #[test]
    fn subspace_polynomial_is_additive_and_kills_the_subspace(
        q in prop::sample::select(vec![2u32, 3]),
        gens in prop::collection::vec(raw_poly(2, 3), 1..=2),
        a in raw_poly(2, 3),
        b in raw_poly(2, 3),
        alpha in 0u32..3,
    ) {
        let f = field(q);
        let gens: Vec<Poly> = gens.iter().map(|g| build(&f, g)).collect();
        let u = Subspace::span(&f, VarSpace::Ambient, &gens)?;
        let fu = u.additive_poly()?;
        let (a, b) = (build(&f, &a), build(&f, &b));
        let alpha = f.element(alpha % q);
        prop_assert_eq!(fu.eval(&a.add(&b)?)?, fu.eval(&a)?.add(&fu.eval(&b)?)?);
        prop_assert_eq!(fu.eval(&a.scale(alpha))?, fu.eval(&a)?.scale(alpha));
        for w in u.enumerate_vectors()? {
            prop_assert!(fu.eval(&w)?.is_zero());
        }
    }

    #[test]
    fn span_is_canonical(
        q in prop::sample::select(vec![2u32, 3, 5]),
        gens in prop::collection::vec(raw_poly(2, 3), 1..=3),
        combos in prop::collection::vec(prop::collection::vec(0u32..5, 3), 0..=3),
        rotate in 0usize..6,
    ) {
        let f = field(q);
        let gens: Vec<Poly> = gens.iter().map(|g| build(&f, g)).collect();
        let v = Subspace::span(&f, VarSpace::Ambient, &gens)?;
        let mut shuffled = gens.clone();
        for c in &combos {
            let mut w = Poly::zero(&f, VarSpace::Ambient);
            for (g, k) in gens.iter().zip(c) {
                w = w.add(&g.scale(f.element(k % q)))?;
            }
            shuffled.push(w);
        }
        let len = shuffled.len();
        shuffled.rotate_left(rotate % len);
        shuffled.reverse();
        prop_assert_eq!(Subspace::span(&f, VarSpace::Ambient, &shuffled)?, v);
    }

    #[test]
    fn determinant_is_alternating_and_multilinear(
        q in prop::sample::select(vec![2u32, 3]),
        entries in prop::collection::vec(raw_poly(2, 2), 9),
        c in 1u32..3,
    ) {
        let f = field(q);
        let m = PolyMatrix::from_fn(&f, VarSpace::Ambient, 3, 3, |r, s| Ok(build(&f, &entries[3 * r + s])))?;
        let det = m.det()?;
        let swapped = PolyMatrix::from_fn(&f, VarSpace::Ambient, 3, 3, |r, s| Ok(m.get([1, 0, 2][r], s).clone()))?;
        prop_assert_eq!(swapped.det()?, det.neg());
        let repeated = PolyMatrix::from_fn(&f, VarSpace::Ambient, 3, 3, |r, s| Ok(m.get(r.min(1), s).clone()))?;
        prop_assert!(repeated.det()?.is_zero());
        let c = f.element(c % q);
        let scaled = PolyMatrix::from_fn(&f, VarSpace::Ambient, 3, 3, |r, s| {
            Ok(if r == 2 { m.get(r, s).scale(c) } else { m.get(r, s).clone() })
        })?;
        prop_assert_eq!(scaled.det()?, det.scale(c));
    }

    #[test]
    fn vertical_strips_match_the_diagram_definition(
        lam in prop::collection::vec(0u64..=6, 0..=6),
        mu in prop::collection::vec(0u64..=6, 0..=6),
    ) {
        let sorted = |mut v: Vec<u64>| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v.retain(|&x| x > 0);
            Partition::new(v).unwrap()
        };
        let (lam, mu) = (sorted(lam), sorted(mu));
        // Cells (i, j) with mu_i <= j < lam_i; a vertical strip has at most one per row.
        let diagram = lam.contains(&mu) && (0..lam.len()).all(|i| lam.part(i) - mu.part(i).min(lam.part(i)) <= 1);
        prop_assert_eq!(lam.is_vertical_strip_over(&mu), diagram);
        let brute: Vec<Partition> = Partition::empty()
            .interval_to(&lam)
            .into_iter()
            .filter(|nu| lam.is_vertical_strip_over(nu))
            .collect();
        let mut listed = lam.vertical_strip_subpartitions();
        let mut brute_sorted = brute;
        listed.sort_by_key(|p| p.parts().to_vec());
        brute_sorted.sort_by_key(|p| p.parts().to_vec());
        prop_assert_eq!(listed, brute_sorted);
    }
}

fn band(f: &Field, seed: u64) -> TriangularZMatrix {
    let g = f.clone();
    TriangularZMatrix::new(f, VarSpace::Ambient, format!("band{seed}"), move |i, j| {
        if i > j || j - i > 2 {
            return Ok(Poly::zero(&g, VarSpace::Ambient));
        }
        let h = (i * 31 + j * 17 + seed as i64 * 7).rem_euclid(5) as u64;
        let x = Poly::var(&g, 0).pow(h)?;
        Ok(if i == j { Poly::one(&g, VarSpace::Ambient) } else { x.add(&Poly::var(&g, 1))? })
    })
}

fn product(a: &TriangularZMatrix, b: &TriangularZMatrix) -> TriangularZMatrix {
    let (a, b, g) = (a.clone(), b.clone(), a.field().clone());
    TriangularZMatrix::new(&g.clone(), VarSpace::Ambient, "product", move |i, j| {
        let mut acc = Poly::zero(&g, VarSpace::Ambient);
        for k in i..=j {
            acc = acc.add(&a.entry(i, k)?.mul(&b.entry(k, j)?)?)?;
        }
        Ok(acc)
    })
}

#[test]
fn window_products_associate_and_stay_triangular() {
    for q in [2, 3] {
        let f = field(q);
        let (a, b, c) = (band(&f, 1), band(&f, 2), band(&f, 3));
        let left = window_product(&product(&a, &b), &c, -3, 3).unwrap();
        let right = window_product(&a, &product(&b, &c), -3, 3).unwrap();
        for r in 0..7 {
            for s in 0..7 {
                assert_eq!(left.get(r, s), right.get(r, s), "q={q} ({r}, {s})");
            }
        }
        product(&a, &b).audit_triangular(-3, 3).unwrap();
    }
}

#[test]
fn schur_degree_formula() {
    for q in [2u32, 3] {
        let f = field(q);
        let ctx = SchurContext::new(&f);
        for n in 1..=3usize {
            let v = coordinate_subspace(&f, n).unwrap();
            for lam in Partition::all_up_to(if q == 3 && n == 3 { 2 } else { 3 }, n) {
                let expected: u64 = (0..n)
                    .map(|i| ((q as u64).pow(lam.part(i) as u32) - 1) * (q as u64).pow((n - 1 - i) as u32))
                    .sum();
                let s = ctx.schur_s(&lam, &v).unwrap();
                assert_eq!(s.homogeneous_degree(), Some(QExponent::integer(expected, q)), "q={q} n={n} {lam}");
            }
        }
    }
}

#[test]
fn substitution_commutes_with_schur_values() {
    let f = field(3);
    let ctx = SchurContext::new(&f);
    let universal: Vec<Poly> = (0..2).map(|i| Poly::universal_var(&f, i)).collect();
    let w = Subspace::span(&f, VarSpace::Universal, &universal).unwrap();
    let images = [
        qschur::ppoly::parse_poly("x^2 + y", &f).unwrap(),
        qschur::ppoly::parse_poly("x*y + 2*z^3", &f).unwrap(),
    ];
    for lam in Partition::all_up_to(3, 2) {
        let transported = ctx.schur_s(&lam, &w).unwrap().evaluate_morphism(&images, VarSpace::Ambient).unwrap();
        let direct = ctx.schur_of_basis(&lam, &images, VarSpace::Ambient).unwrap();
        assert_eq!(transported, direct, "{lam}");
    }
}
