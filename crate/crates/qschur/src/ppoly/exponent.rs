//! Exponents in `N[1/q]`: nonnegative rationals whose denominator is a power of `q`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

/// The value `num / q^den_pow`, kept normalized so that `q` does not divide
/// `num` unless `den_pow = 0`.
///
/// The base `q` travels with the value so that comparisons and sums need no
/// external context. Equality and hashing look only at `(num, den_pow)`; all
/// exponents that meet in one computation share the same `q`.
#[derive(Clone, Copy, Debug)]
pub struct QExponent {
    num: u64,
    den_pow: u32,
    q: u32,
}

impl PartialEq for QExponent {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den_pow == other.den_pow
    }
}

impl Eq for QExponent {}

impl Hash for QExponent {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den_pow.hash(state);
    }
}

fn qpow(q: u32, k: u32) -> Option<u128> {
    (q as u128).checked_pow(k)
}

impl QExponent {
    /// Builds and normalizes `num / q^den_pow`.
    pub fn new(num: u64, den_pow: u32, q: u32) -> QExponent {
        debug_assert!(q >= 2);
        let mut e = QExponent { num, den_pow, q };
        e.normalize();
        e
    }

    pub fn integer(n: u64, q: u32) -> QExponent {
        QExponent { num: n, den_pow: 0, q }
    }

    pub fn zero(q: u32) -> QExponent {
        QExponent::integer(0, q)
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.den_pow = 0;
            return;
        }
        let q = self.q as u64;
        while self.den_pow > 0 && self.num.is_multiple_of(q) {
            self.num /= q;
            self.den_pow -= 1;
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den_pow(self) -> u32 {
        self.den_pow
    }

    pub fn q(self) -> u32 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_integer(self) -> bool {
        self.den_pow == 0
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(self) -> Option<u64> {
        self.is_integer().then_some(self.num)
    }

    /// Exact sum; `None` on overflow.
    pub fn checked_add(self, other: QExponent) -> Option<QExponent> {
        if self.den_pow == other.den_pow {
            if self.den_pow == 0 {
                return Some(QExponent { num: self.num.checked_add(other.num)?, ..self });
            }
            return Some(QExponent::new(self.num.checked_add(other.num)?, self.den_pow, self.q));
        }
        let (small, big) = if self.den_pow < other.den_pow { (self, other) } else { (other, self) };
        // The finer denominator dominates, and the sum of a q-indivisible
        // numerator with a multiple of q stays q-indivisible.
        let scale = u64::try_from(qpow(big.q, big.den_pow - small.den_pow)?).ok()?;
        let num = small.num.checked_mul(scale)?.checked_add(big.num)?;
        Some(QExponent { num, den_pow: big.den_pow, q: big.q })
    }

    /// Exact difference `self - other`; `None` if negative or on overflow.
    pub fn checked_sub(self, other: QExponent) -> Option<QExponent> {
        let d = self.den_pow.max(other.den_pow);
        let q = self.q;
        let a = u64::try_from(qpow(q, d - self.den_pow)? * self.num as u128).ok()?;
        let b = u64::try_from(qpow(q, d - other.den_pow)? * other.num as u128).ok()?;
        Some(QExponent::new(a.checked_sub(b)?, d, q))
    }

    /// Multiplication by a nonnegative integer.
    pub fn checked_mul_int(self, m: u64) -> Option<QExponent> {
        if self.den_pow == 0 {
            return Some(QExponent { num: self.num.checked_mul(m)?, ..self });
        }
        Some(QExponent::new(self.num.checked_mul(m)?, self.den_pow, self.q))
    }

    /// Multiplication by `q^k` for any integer `k`.
    pub fn checked_scale(self, k: i64) -> Option<QExponent> {
        if self.num == 0 || k == 0 {
            return Some(self);
        }
        if k < 0 {
            let den_pow = self.den_pow.checked_add(u32::try_from(-k).ok()?)?;
            return Some(QExponent::new(self.num, den_pow, self.q));
        }
        let k = u32::try_from(k).ok()?;
        if k <= self.den_pow {
            Some(QExponent { den_pow: self.den_pow - k, ..self })
        } else {
            let factor = u64::try_from(qpow(self.q, k - self.den_pow)?).ok()?;
            Some(QExponent { num: self.num.checked_mul(factor)?, den_pow: 0, q: self.q })
        }
    }
}

impl Ord for QExponent {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den_pow == other.den_pow {
            return self.num.cmp(&other.num);
        }
        let q = if self.den_pow > other.den_pow { self.q } else { other.q };
        let lhs = self.num as u128 * qpow(q, other.den_pow).expect("exponent denominator overflow");
        let rhs = other.num as u128 * qpow(q, self.den_pow).expect("exponent denominator overflow");
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for QExponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QExponent {
    /// Integers print plainly; proper fractions print as `i/q^j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_pow == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}^{}", self.num, self.q, self.den_pow)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalization() {
        let e = QExponent::new(6, 1, 3);
        assert_eq!((e.num(), e.den_pow()), (2, 0));
        let e = QExponent::new(4, 2, 2);
        assert_eq!((e.num(), e.den_pow()), (1, 0));
        let e = QExponent::new(0, 5, 2);
        assert!(e.is_zero() && e.is_integer());
        let e = QExponent::new(3, 2, 2);
        assert_eq!((e.num(), e.den_pow()), (3, 2));
    }

    #[test]
    fn sums_that_cancel_denominators() {
        let half = QExponent::new(1, 1, 2);
        assert_eq!(half.checked_add(half).unwrap(), QExponent::integer(1, 2));
        let third = QExponent::new(1, 1, 3);
        let two_ninths = QExponent::new(2, 2, 3);
        assert_eq!(third.checked_add(two_ninths).unwrap(), QExponent::new(5, 2, 3));
    }

    #[test]
    fn ordering_is_by_value() {
        let q = 3;
        assert!(QExponent::new(1, 1, q) < QExponent::integer(1, q));
        assert!(QExponent::new(4, 1, q) > QExponent::integer(1, q));
        assert!(QExponent::new(1, 2, q) < QExponent::new(1, 1, q));
        assert_eq!(QExponent::new(1, 1, q).to_string(), "1/3^1");
    }

    fn arb(q: u32) -> impl Strategy<Value = QExponent> {
        (0u64..500, 0u32..4).prop_map(move |(n, d)| QExponent::new(n, d, q))
    }

    proptest! {
        #[test]
        fn scale_round_trip(e in arb(3), k in -4i64..4) {
            let s = e.checked_scale(k).unwrap();
            prop_assert_eq!(s.checked_scale(-k).unwrap(), e);
        }

        #[test]
        fn add_then_sub(a in arb(2), b in arb(2)) {
            let s = a.checked_add(b).unwrap();
            prop_assert_eq!(s.checked_sub(b).unwrap(), a);
            prop_assert!(s >= a);
        }

        #[test]
        fn order_matches_rationals(a in arb(5), b in arb(5)) {
            let va = a.num() as f64 / 5f64.powi(a.den_pow() as i32);
            let vb = b.num() as f64 / 5f64.powi(b.den_pow() as i32);
            if (va - vb).abs() > 1e-9 {
                prop_assert_eq!(a < b, va < vb);
            } else {
                prop_assert_eq!(a, b);
            }
        }
    }
}
