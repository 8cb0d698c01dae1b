//! Exact coefficient field `K = Q(√2, √3)`.
//!
//! Elements are stored on the basis `{1, √2, √3, √6}` with arbitrary-precision
//! rational coordinates.  The field is closed under all square roots of
//! rational numbers of the form `2^a 3^b`, which is exactly what the
//! length-ratio rescalings of a Chevalley basis require: the symmetrizers
//! `d_α` only take values in `{1, 2, 3}`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

pub type Q = BigRational;

/// An element of `Q(√2,√3)`, as `c[0] + c[1]·√2 + c[2]·√3 + c[3]·√6`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub c: [Q; 4],
}

fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(q_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(Q::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: Q) -> Self {
        Scalar {
            c: [q, Q::zero(), Q::zero(), Q::zero()],
        }
    }

    pub fn sqrt2() -> Self {
        let mut s = Scalar::zero();
        s.c[1] = Q::one();
        s
    }

    pub fn sqrt3() -> Self {
        let mut s = Scalar::zero();
        s.c[2] = Q::one();
        s
    }

    pub fn sqrt6() -> Self {
        let mut s = Scalar::zero();
        s.c[3] = Q::one();
        s
    }

    /// `√(p/q)` for positive integers whose prime factors are 2 and 3 only.
    pub fn sqrt_ratio(p: u64, q: u64) -> Self {
        assert!(p > 0 && q > 0, "sqrt_ratio needs positive arguments");
        // √(p/q) = √(pq)/q; factor pq = 2^a · 3^b · m² with squarefree remainder 1.
        let mut n = p
            .checked_mul(q)
            .expect("sqrt_ratio arguments out of range");
        let mut a = 0u32;
        let mut b = 0u32;
        while n % 2 == 0 {
            n /= 2;
            a += 1;
        }
        while n % 3 == 0 {
            n /= 3;
            b += 1;
        }
        assert!(n == 1, "sqrt_ratio supports 2^a·3^b arguments only");
        let integer_part = 2u64.pow(a / 2) * 3u64.pow(b / 2);
        let rad = match (a % 2, b % 2) {
            (0, 0) => Scalar::one(),
            (1, 0) => Scalar::sqrt2(),
            (0, 1) => Scalar::sqrt3(),
            (1, 1) => Scalar::sqrt6(),
            _ => unreachable!(),
        };
        rad * Scalar::from_rational(Q::new(BigInt::from(integer_part), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn as_rational(&self) -> Option<&Q> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Galois conjugate flipping the sign of √2 (and hence of √6).
    fn conj2(&self) -> Self {
        Scalar {
            c: [
                self.c[0].clone(),
                -self.c[1].clone(),
                self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }

    /// Galois conjugate flipping the sign of √3 (and hence of √6).
    fn conj3(&self) -> Self {
        Scalar {
            c: [
                self.c[0].clone(),
                self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in K");
        // Multiply by the three nontrivial Galois conjugates; the full product
        // is the rational field norm.
        let partial = self.conj2() * self.conj3() * self.conj2().conj3();
        let norm = self.clone() * partial.clone();
        let n = norm
            .as_rational()
            .expect("field norm must be rational")
            .clone();
        assert!(!n.is_zero());
        partial.scale_rational(&n.recip())
    }

    fn scale_rational(&self, q: &Q) -> Self {
        Scalar {
            c: [
                &self.c[0] * q,
                &self.c[1] * q,
                &self.c[2] * q,
                &self.c[3] * q,
            ],
        }
    }

    pub fn half() -> Self {
        Scalar::from_ratio(1, 2)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for k in 0..4 {
            self.c[k] += &rhs.c[k];
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for k in 0..4 {
            self.c[k] -= &rhs.c[k];
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            c: [
                -self.c[0].clone(),
                -self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // Basis multiplication table for {1, √2, √3, √6}:
        //   √2·√2 = 2, √3·√3 = 3, √6·√6 = 6,
        //   √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2.
        let a = &self.c;
        let b = &rhs.c;
        // rational × anything needs only four products
        if self.is_rational() {
            return Scalar {
                c: std::array::from_fn(|k| &a[0] * &b[k]),
            };
        }
        if rhs.is_rational() {
            return Scalar {
                c: std::array::from_fn(|k| &a[k] * &b[0]),
            };
        }
        let two = q_int(2);
        let three = q_int(3);
        let six = q_int(6);
        let c0 = &a[0] * &b[0] + &two * (&a[1] * &b[1]) + &three * (&a[2] * &b[2])
            + &six * (&a[3] * &b[3]);
        let c1 = &a[0] * &b[1] + &a[1] * &b[0] + &three * (&a[2] * &b[3]) + &three * (&a[3] * &b[2]);
        let c2 = &a[0] * &b[2] + &a[2] * &b[0] + &two * (&a[1] * &b[3]) + &two * (&a[3] * &b[1]);
        let c3 = &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[2] + &a[2] * &b[1];
        Scalar { c: [c0, c1, c2, c3] }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "√2", "√3", "√6"];
        let mut first = true;
        for (k, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let sign = if q.is_negative() { "-" } else { "+" };
            let abs = q.abs();
            if first {
                if q.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if k == 0 {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", names[k])?;
            } else {
                write!(f, "{}{}", abs, names[k])?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_products() {
        let s2 = Scalar::sqrt2();
        let s3 = Scalar::sqrt3();
        let s6 = Scalar::sqrt6();
        assert_eq!(&s2 * &s2, Scalar::from_int(2));
        assert_eq!(&s3 * &s3, Scalar::from_int(3));
        assert_eq!(&s6 * &s6, Scalar::from_int(6));
        assert_eq!(&s2 * &s3, s6);
        assert_eq!(&s2 * &s6, Scalar::from_int(2) * s3.clone());
        assert_eq!(&s3 * &s6, Scalar::from_int(3) * s2.clone());
    }

    #[test]
    fn inverses() {
        let x = Scalar::from_int(5) + Scalar::sqrt2() * Scalar::from_int(3) - Scalar::sqrt6();
        let inv = x.inv();
        assert_eq!(&x * &inv, Scalar::one());
        // A purely rational element inverts rationally.
        assert_eq!(Scalar::from_ratio(3, 7).inv(), Scalar::from_ratio(7, 3));
    }

    #[test]
    fn sqrt_ratio_values() {
        assert_eq!(Scalar::sqrt_ratio(1, 1), Scalar::one());
        assert_eq!(Scalar::sqrt_ratio(4, 1), Scalar::from_int(2));
        assert_eq!(Scalar::sqrt_ratio(2, 1), Scalar::sqrt2());
        // √(1/2) = √2/2, √(2/3) = √6/3, √(9/2) = 3√2/2.
        assert_eq!(
            Scalar::sqrt_ratio(1, 2),
            Scalar::sqrt2() * Scalar::half()
        );
        assert_eq!(
            Scalar::sqrt_ratio(2, 3),
            Scalar::sqrt6() * Scalar::from_ratio(1, 3)
        );
        assert_eq!(
            Scalar::sqrt_ratio(9, 2),
            Scalar::sqrt2() * Scalar::from_ratio(3, 2)
        );
        let x = Scalar::sqrt_ratio(6, 1);
        assert_eq!(&x * &x, Scalar::from_int(6));
    }

    #[test]
    fn halves_are_exact() {
        let h = Scalar::half();
        assert_eq!(&h + &h, Scalar::one());
    }
}
