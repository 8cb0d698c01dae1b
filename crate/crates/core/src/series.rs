//! Formal power series in `u^{-1}` with coefficients in an arbitrary ring.
//!
//! A series here is a finite window of coefficients of `u^{-r}` for
//! `r = 0..=order`, with everything beyond the window truncated. The ring of
//! coefficients is abstract so that the same machinery serves scalar series
//! (eigenvalue computations) and series with noncommutative algebra
//! coefficients (generating-function identities).

use crate::scalar::Scalar;
use num::BigRational;

/// Minimal ring interface for series coefficients.
pub trait Ring {
    type El: Clone + PartialEq;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    /// Multiply by a scalar from the ground field.
    fn scale(&self, a: &Self::El, c: &Scalar) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.add(a, &self.neg(b))
    }
}

/// The ground field itself as a coefficient ring.
pub struct ScalarRing;

impl Ring for ScalarRing {
    type El = Scalar;
    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a.clone() + b.clone()
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a.clone()
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a.clone() * b.clone()
    }
    fn scale(&self, a: &Scalar, c: &Scalar) -> Scalar {
        a.clone() * c.clone()
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
}

/// Truncated series `Σ_{r=0}^{order} c_r u^{-r}`.
pub struct Series<R: Ring> {
    pub coeffs: Vec<R::El>,
}

impl<R: Ring> Clone for Series<R> {
    fn clone(&self) -> Self {
        Series {
            coeffs: self.coeffs.clone(),
        }
    }
}

impl<R: Ring> Series<R> {
    pub fn zero(ring: &R, order: usize) -> Self {
        Series {
            coeffs: vec![ring.zero(); order + 1],
        }
    }

    pub fn one(ring: &R, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        s.coeffs[0] = ring.one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, ring: &R, r: usize) -> R::El {
        if r < self.coeffs.len() {
            self.coeffs[r].clone()
        } else {
            ring.zero()
        }
    }

    pub fn add(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| ring.sub(a, b))
                .collect(),
        }
    }

    pub fn neg(&self, ring: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| ring.neg(a)).collect(),
        }
    }

    pub fn scale(&self, ring: &R, c: &Scalar) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| ring.scale(a, c)).collect(),
        }
    }

    /// Cauchy product, truncated at the common order. Coefficient order is
    /// preserved (left factors multiply on the left).
    pub fn mul(&self, ring: &R, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(ring, n);
        for r in 0..=n {
            for a in 0..=r {
                let p = ring.mul(&self.coeffs[a], &other.coeffs[r - a]);
                out.coeffs[r] = ring.add(&out.coeffs[r], &p);
            }
        }
        out
    }

    pub fn is_zero(&self, ring: &R) -> bool {
        self.coeffs.iter().all(|c| ring.is_zero(c))
    }

    /// Multiplicative inverse; requires the constant term to be a ground-field
    /// unit `k` times the identity (passed explicitly as `k`).
    pub fn invert(&self, ring: &R, k: &Scalar) -> Self {
        assert!(!k.is_zero(), "constant term must be invertible");
        let kinv = k.inv();
        let n = self.order();
        let mut out = Self::zero(ring, n);
        out.coeffs[0] = ring.scale(&ring.one(), &kinv);
        for r in 1..=n {
            // b_r = -k^{-1} Σ_{m=1}^{r} a_m b_{r-m}
            let mut acc = ring.zero();
            for m in 1..=r {
                acc = ring.add(&acc, &ring.mul(&self.coeffs[m], &out.coeffs[r - m]));
            }
            out.coeffs[r] = ring.scale(&ring.neg(&acc), &kinv);
        }
        out
    }

    /// Substitute `u ↦ −u`, i.e. flip the sign of odd coefficients.
    pub fn negate_arg(&self, ring: &R) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(r, a)| if r % 2 == 1 { ring.neg(a) } else { a.clone() })
                .collect(),
        }
    }

    /// Substitute `u ↦ u + c` using the expansion
    /// `(u+c)^{-r} = Σ_m C(r−1+m, m) (−c)^m u^{−r−m}`.
    pub fn shift_arg(&self, ring: &R, c: &BigRational) -> Self {
        let n = self.order();
        let mut out = Self::zero(ring, n);
        out.coeffs[0] = self.coeffs[0].clone();
        for r in 1..=n {
            let mut binom = BigRational::from_integer(1.into());
            let mut cpow = BigRational::from_integer(1.into());
            let neg_c = -c.clone();
            for m in 0..=(n - r) {
                if m > 0 {
                    // C(r-1+m, m) = C(r-1+m-1, m-1) * (r-1+m) / m
                    binom = binom * BigRational::from_integer(((r - 1 + m) as i64).into())
                        / BigRational::from_integer((m as i64).into());
                    cpow = cpow.clone() * neg_c.clone();
                }
                let coef = Scalar::from_rational(binom.clone() * cpow.clone());
                let term = ring.scale(&self.coeffs[r], &coef);
                out.coeffs[r + m] = ring.add(&out.coeffs[r + m], &term);
            }
        }
        out
    }

    /// Multiply by `u`, dropping the coefficient of `u^{+1}` (which the caller
    /// must know to be zero or irrelevant) and shifting everything down.
    pub fn mul_by_u(&self, ring: &R) -> Self {
        let n = self.order();
        let mut out = Self::zero(ring, n);
        for r in 1..=n {
            out.coeffs[r - 1] = self.coeffs[r].clone();
        }
        out
    }
}

/// Scalar eigenvalue series
/// `λ(u) = Ξ(u+d/2) Ξ⁻(u−d/2) / (Ξ(u−d/2) Ξ⁻(u+d/2))`
/// where `Ξ(u) = Π_k (1 − a_k u^{-1})` for the given inverse roots and
/// `Ξ⁻(u) = (−1)^{deg} Ξ(−u)`. The result lies in `1 + u^{-2} K[[u^{-2}]]`.
pub fn iweight_eigenvalue(roots: &[BigRational], d: &BigRational, order: usize) -> Series<ScalarRing> {
    let ring = ScalarRing;
    let half_d = d / BigRational::from_integer(2.into());
    let xi = |shift: BigRational, minus: bool| -> Series<ScalarRing> {
        // Π_k (1 − a_k (u+shift)^{-1}), optionally with Ξ⁻ normalization.
        let mut prod = Series::one(&ring, order);
        for a in roots {
            // Each factor is 1 − a u^{-1}; the (−1)^deg Ξ(−u) normalization
            // flips that to 1 + a u^{-1}.
            let mut lin = Series::zero(&ring, order);
            lin.coeffs[0] = Scalar::one();
            lin.coeffs[1] = Scalar::from_rational(if minus { a.clone() } else { -a.clone() });
            let lin = lin.shift_arg(&ring, &shift);
            prod = prod.mul(&ring, &lin);
        }
        prod
    };
    // Ξ⁻(u) = (−1)^deg Ξ(−u) = Π_k (1 + a_k u^{-1}).
    let num = xi(half_d.clone(), false).mul(&ring, &xi(-half_d.clone(), true));
    let den = xi(-half_d.clone(), false).mul(&ring, &xi(half_d, true));
    num.mul(&ring, &den.invert(&ring, &Scalar::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn geometric_inverse() {
        let ring = ScalarRing;
        let mut s = Series::one(&ring, 6);
        s.coeffs[1] = Scalar::from_int(-1);
        let inv = s.invert(&ring, &Scalar::one());
        // 1/(1 - u^{-1}) = Σ u^{-r}
        for c in &inv.coeffs {
            assert_eq!(*c, Scalar::one());
        }
    }

    #[test]
    fn shift_arg_on_rational_function() {
        // (u+1)^{-1} computed by shifting u^{-1}.
        let ring = ScalarRing;
        let mut s = Series::zero(&ring, 6);
        s.coeffs[1] = Scalar::one();
        let t = s.shift_arg(&ring, &q(1, 1));
        // (u+1)^{-1} = u^{-1} - u^{-2} + u^{-3} - …
        for r in 1..=6 {
            let expect = if r % 2 == 1 { Scalar::one() } else { Scalar::from_int(-1) };
            assert_eq!(t.coeffs[r], expect, "at order {r}");
        }
    }

    #[test]
    fn eigenvalue_frozen_oracle() {
        // roots = [1/3], d = 1: λ(u) = 1 + (2/3)u^{-2} + (25/54)u^{-4} + …
        let lam = iweight_eigenvalue(&[q(1, 3)], &q(1, 1), 5);
        assert_eq!(lam.coeffs[0], Scalar::one());
        assert!(lam.coeffs[1].is_zero());
        assert_eq!(lam.coeffs[2], Scalar::from_ratio(2, 3));
        assert!(lam.coeffs[3].is_zero());
        assert_eq!(lam.coeffs[4], Scalar::from_rational(q(25, 54)));
    }

    proptest! {
        #[test]
        fn eigenvalue_is_even(
            nums in proptest::collection::vec(-5i64..=5, 1..=3),
            dens in proptest::collection::vec(1i64..=4, 1..=3),
            dn in 0i64..=3,
        ) {
            let k = nums.len().min(dens.len());
            let roots: Vec<BigRational> =
                (0..k).map(|i| q(nums[i], dens[i])).collect();
            let lam = iweight_eigenvalue(&roots, &q(dn, 1), 7);
            prop_assert_eq!(&lam.coeffs[0], &Scalar::one());
            for r in (1..=7).step_by(2) {
                prop_assert!(lam.coeffs[r].is_zero(), "odd coefficient {} nonzero", r);
            }
        }
    }
}
