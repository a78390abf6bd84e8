//! Scalar quaternion arithmetic.
//!
//! A quaternion is written `q = w + x·i + y·j + z·k` with real coefficients
//! and the usual non-commutative multiplication rules
//!
//! ```text
//! i² = j² = k² = ijk = −1,
//! ij = −ji = k,   jk = −kj = i,   ki = −ik = j.
//! ```
//!
//! [`Quaternion`] is a plain `Copy` value type; all arithmetic operators are
//! implemented, with `*` performing the Hamilton product.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// A quaternion `w + x·i + y·j + z·k`.
///
/// `repr(C)` pins the component order, so a slice of quaternions is an
/// interleaved `[w, x, y, z, w, x, …]` buffer of doubles.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
#[repr(C)]
pub struct Quaternion {
    /// Real (scalar) component.
    pub w: f64,
    /// Coefficient of `i`.
    pub x: f64,
    /// Coefficient of `j`.
    pub y: f64,
    /// Coefficient of `k`.
    pub z: f64,
}

impl Quaternion {
    /// Builds a quaternion from its four real components.
    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// The additive identity `0`.
    #[inline]
    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    /// The multiplicative identity `1`.
    #[inline]
    pub const fn one() -> Self {
        Self::new(1.0, 0.0, 0.0, 0.0)
    }

    /// The imaginary unit `i`.
    #[inline]
    pub const fn i() -> Self {
        Self::new(0.0, 1.0, 0.0, 0.0)
    }

    /// The imaginary unit `j`.
    #[inline]
    pub const fn j() -> Self {
        Self::new(0.0, 0.0, 1.0, 0.0)
    }

    /// The imaginary unit `k`.
    #[inline]
    pub const fn k() -> Self {
        Self::new(0.0, 0.0, 0.0, 1.0)
    }

    /// Embeds a real number as the quaternion `r + 0i + 0j + 0k`.
    #[inline]
    pub const fn from_real(r: f64) -> Self {
        Self::new(r, 0.0, 0.0, 0.0)
    }

    /// Real part of the quaternion.
    #[inline]
    pub const fn re(&self) -> f64 {
        self.w
    }

    /// Quaternion conjugate `w − x·i − y·j − z·k`.
    #[inline]
    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Squared modulus `w² + x² + y² + z²`.
    #[inline]
    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Modulus `|q| = sqrt(w² + x² + y² + z²)`.
    #[inline]
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `true` when the real part is exactly zero (a *pure* quaternion).
    #[inline]
    pub fn is_pure(&self) -> bool {
        self.w == 0.0
    }

    /// `true` when all four components are finite.
    #[inline]
    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Multiplies every component by the real scalar `s`.
    #[inline]
    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// Multiplicative inverse `conj(q) / |q|²`.
    ///
    /// Returns `None` for the zero quaternion.
    pub fn inverse(&self) -> Option<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            None
        } else {
            Some(self.conj().scale(1.0 / n2))
        }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    /// Hamilton product. Non-commutative: `i * j == k` but `j * i == -k`.
    #[inline]
    fn mul(self, r: Self) -> Self {
        let (p0, p1, p2, p3) = (self.w, self.x, self.y, self.z);
        let (q0, q1, q2, q3) = (r.w, r.x, r.y, r.z);
        Self::new(
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
        )
    }
}

impl MulAssign for Quaternion {
    #[inline]
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scale(self)
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn div(self, s: f64) -> Self {
        self.scale(1.0 / s)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{:+}i{:+}j{:+}k",
            self.w, self.x, self.y, self.z
        )
    }
}

/// Multiplies the full Hamilton product table operand pair by index, used by
/// tests and documentation examples; `basis(0..4)` yields `1, i, j, k`.
pub fn basis(index: usize) -> Quaternion {
    match index {
        0 => Quaternion::one(),
        1 => Quaternion::i(),
        2 => Quaternion::j(),
        3 => Quaternion::k(),
        _ => panic!("basis index must be 0..4, got {index}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        let scale = a.abs().max(b.abs()).max(1e-300);
        (a - b).abs() <= tol * scale
    }

    fn random_quat(rng: &mut impl Rng) -> Quaternion {
        Quaternion::new(
            rng.random::<f64>() - 0.5,
            rng.random::<f64>() - 0.5,
            rng.random::<f64>() - 0.5,
            rng.random::<f64>() - 0.5,
        )
    }

    /// The sixteen products of the basis elements {1, i, j, k}.
    #[test]
    fn multiplication_table() {
        let one = Quaternion::one();
        let i = Quaternion::i();
        let j = Quaternion::j();
        let k = Quaternion::k();
        let expected: [[Quaternion; 4]; 4] = [
            [one, i, j, k],
            [i, -one, k, -j],
            [j, -k, -one, i],
            [k, j, -i, -one],
        ];
        for (a, row) in expected.iter().enumerate() {
            for (b, entry) in row.iter().enumerate() {
                assert_eq!(basis(a) * basis(b), *entry, "basis({a}) * basis({b})");
            }
        }
    }

    #[test]
    fn product_of_one_plus_i_and_one_plus_j() {
        // (1+i)(1+j) = 1 + j + i + ij = 1 + i + j + k.
        let p = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        let q = Quaternion::new(1.0, 0.0, 1.0, 0.0);
        assert_eq!(p * q, Quaternion::new(1.0, 1.0, 1.0, 1.0));
        // Reversed order flips the sign of the k component.
        assert_eq!(q * p, Quaternion::new(1.0, 1.0, 1.0, -1.0));
    }

    #[test]
    fn identity_and_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let q = random_quat(&mut rng);
            assert_eq!(q * Quaternion::one(), q);
            assert_eq!(Quaternion::one() * q, q);
            assert_eq!(q + Quaternion::zero(), q);
        }
    }

    #[test]
    fn modulus_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let p = random_quat(&mut rng);
            let q = random_quat(&mut rng);
            assert!(
                rel_close((p * q).norm(), p.norm() * q.norm(), 1e-12),
                "|pq| != |p||q| for p={p}, q={q}"
            );
        }
    }

    #[test]
    fn conjugation_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let p = random_quat(&mut rng);
            let q = random_quat(&mut rng);
            assert_eq!(p.conj().conj(), p);
            // (pq)* = q* p*.
            let lhs = (p * q).conj();
            let rhs = q.conj() * p.conj();
            assert!(rel_close(lhs.w, rhs.w, 1e-12));
            assert!(rel_close(lhs.x, rhs.x, 1e-12));
            assert!(rel_close(lhs.y, rhs.y, 1e-12));
            assert!(rel_close(lhs.z, rhs.z, 1e-12));
            // q q* is real and equals |q|².
            let qq = p * p.conj();
            assert!(rel_close(qq.w, p.norm_sqr(), 1e-12));
            assert!(qq.x.abs() <= 1e-15 && qq.y.abs() <= 1e-15 && qq.z.abs() <= 1e-15);
        }
    }

    #[test]
    fn inverse_recovers_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let q = random_quat(&mut rng);
            let inv = q.inverse().expect("nonzero");
            let prod = q * inv;
            assert!(rel_close(prod.w, 1.0, 1e-12));
            assert!(prod.x.abs() < 1e-12 && prod.y.abs() < 1e-12 && prod.z.abs() < 1e-12);
        }
        assert!(Quaternion::zero().inverse().is_none());
    }

    #[test]
    fn purity_flag() {
        assert!(Quaternion::new(0.0, 1.0, 2.0, 3.0).is_pure());
        assert!(!Quaternion::new(0.5, 1.0, 2.0, 3.0).is_pure());
    }
}
