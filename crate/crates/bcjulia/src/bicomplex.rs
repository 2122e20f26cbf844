//! Bicomplex arithmetic: cartesian and idempotent representations, ring
//! operations, norms, multivalued square roots, null-cone and discus geometry.
//!
//! A bicomplex number is `a + b*i1 + c*i2 + d*j` with two commuting imaginary
//! units (`i1^2 = i2^2 = -1`) and the hyperbolic unit `j = i1*i2` (`j^2 = 1`).
//! Internally it is stored as a pair of complex numbers `z1 + z2*i2` with
//! `z1 = a + b*i1` and `z2 = c + d*i1`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;

pub type Complex = Complex64;

/// A bicomplex number `z1 + z2*i2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bicomplex {
    pub z1: Complex,
    pub z2: Complex,
}

/// The two idempotent projections `(P1(w), P2(w))` of a bicomplex number,
/// i.e. the coefficients of `e1 = (1+j)/2` and `e2 = (1-j)/2` in
/// `w = P1(w)*e1 + P2(w)*e2`. Multiplication is componentwise in this view.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdempotentPair {
    pub p1: Complex,
    pub p2: Complex,
}

impl IdempotentPair {
    pub fn new(p1: Complex, p2: Complex) -> Self {
        Self { p1, p2 }
    }
}

// -0.0 -> +0.0, everything else unchanged
fn canon(z: Complex) -> Complex {
    Complex::new(z.re + 0.0, z.im + 0.0)
}

impl Bicomplex {
    pub const fn new(z1: Complex, z2: Complex) -> Self {
        Self { z1, z2 }
    }

    /// Build from the four real components of `a + b*i1 + c*i2 + d*j`.
    pub fn from_components(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self {
            z1: Complex::new(a, b),
            z2: Complex::new(c, d),
        }
    }

    /// The four real components `[a, b, c, d]`.
    pub fn components(&self) -> [f64; 4] {
        [self.z1.re, self.z1.im, self.z2.re, self.z2.im]
    }

    pub fn zero() -> Self {
        Self::from_components(0.0, 0.0, 0.0, 0.0)
    }

    pub fn one() -> Self {
        Self::from_components(1.0, 0.0, 0.0, 0.0)
    }

    pub fn unit_i1() -> Self {
        Self::from_components(0.0, 1.0, 0.0, 0.0)
    }

    pub fn unit_i2() -> Self {
        Self::from_components(0.0, 0.0, 1.0, 0.0)
    }

    pub fn unit_j() -> Self {
        Self::from_components(0.0, 0.0, 0.0, 1.0)
    }

    /// The idempotent `e1 = (1+j)/2`.
    pub fn e1() -> Self {
        Self::from_components(0.5, 0.0, 0.0, 0.5)
    }

    /// The idempotent `e2 = (1-j)/2`.
    pub fn e2() -> Self {
        Self::from_components(0.5, 0.0, 0.0, -0.5)
    }

    /// Embed a complex number (the `1` and `i1` plane).
    pub fn from_complex(z: Complex) -> Self {
        Self::new(z, Complex::new(0.0, 0.0))
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_components(x, 0.0, 0.0, 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.z1.re.is_finite()
            && self.z1.im.is_finite()
            && self.z2.re.is_finite()
            && self.z2.im.is_finite()
    }

    /// Projections `P1(w) = z1 - z2*i1` and `P2(w) = z1 + z2*i1`.
    ///
    /// Signed zeros are canonicalized to `+0.0` so that equal projections
    /// are bitwise equal and the principal square root picks the same side
    /// of the branch cut for both.
    pub fn to_idempotent(&self) -> IdempotentPair {
        let i1 = Complex::new(0.0, 1.0);
        IdempotentPair {
            p1: canon(self.z1 - self.z2 * i1),
            p2: canon(self.z1 + self.z2 * i1),
        }
    }

    /// Inverse of [`to_idempotent`](Self::to_idempotent):
    /// `z1 = (p1 + p2)/2`, `z2 = i1*(p1 - p2)/2`.
    pub fn from_idempotent(p: IdempotentPair) -> Self {
        let i1 = Complex::new(0.0, 1.0);
        Self {
            z1: canon((p.p1 + p.p2) * 0.5),
            z2: canon(i1 * (p.p1 - p.p2) * 0.5),
        }
    }

    /// Real modulus `sqrt(a^2 + b^2 + c^2 + d^2)`.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.z1.norm_sqr() + self.z2.norm_sqr()
    }

    /// `w^n` by repeated squaring in the idempotent view. Errors if the
    /// result overflows to a non-finite value.
    pub fn pow(&self, n: u32) -> Result<Bicomplex, Error> {
        let p = self.to_idempotent();
        let r = Bicomplex::from_idempotent(IdempotentPair {
            p1: p.p1.powu(n),
            p2: p.p2.powu(n),
        });
        if r.is_finite() {
            Ok(r)
        } else {
            Err(Error::NonFinite)
        }
    }

    /// All square roots of `w`, as `sqrt(P1)*e1 +/- ...` combinations.
    ///
    /// Returns 4 values when both projections are nonzero, 2 when exactly one
    /// is zero, and 1 for `w = 0`. Ordered by the branch-index pair
    /// `(s1, s2)` lexicographically, with `s = 0` the principal complex root
    /// and `s = 1` its negation.
    pub fn sqrt_branches(&self) -> Vec<Bicomplex> {
        let p = self.to_idempotent();
        let r1 = p.p1.sqrt();
        let r2 = p.p2.sqrt();
        let zero = Complex::new(0.0, 0.0);
        let s1_range: &[Complex] = if p.p1 == zero { &[zero] } else { &[r1, -r1] };
        let s2_range: &[Complex] = if p.p2 == zero { &[zero] } else { &[r2, -r2] };
        let mut out = Vec::with_capacity(s1_range.len() * s2_range.len());
        for &q1 in s1_range {
            for &q2 in s2_range {
                out.push(Bicomplex::from_idempotent(IdempotentPair { p1: q1, p2: q2 }));
            }
        }
        out
    }

    /// Exact zero-divisor test: true iff a projection is exactly zero.
    pub fn is_null_cone(&self) -> bool {
        let p = self.to_idempotent();
        p.p1 == Complex::new(0.0, 0.0) || p.p2 == Complex::new(0.0, 0.0)
    }

    /// Tolerance variant of [`is_null_cone`](Self::is_null_cone) for
    /// dynamics code; default `tau = 1e-14`.
    pub fn is_null_cone_eps(&self, tau: f64) -> bool {
        let p = self.to_idempotent();
        p.p1.norm() <= tau || p.p2.norm() <= tau
    }
}

impl std::ops::Add for Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.z1 + rhs.z1, self.z2 + rhs.z2)
    }
}

impl std::ops::Sub for Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.z1 - rhs.z1, self.z2 - rhs.z2)
    }
}

impl std::ops::Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        Bicomplex::new(-self.z1, -self.z2)
    }
}

/// Direct expansion of `(z1 + z2*i2)(u1 + u2*i2)` under `i2^2 = -1`.
impl std::ops::Mul for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex::new(
            self.z1 * rhs.z1 - self.z2 * rhs.z2,
            self.z1 * rhs.z2 + self.z2 * rhs.z1,
        )
    }
}

impl std::ops::Mul<f64> for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: f64) -> Bicomplex {
        Bicomplex::new(self.z1 * rhs, self.z2 * rhs)
    }
}

impl std::fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c, d] = self.components();
        write!(f, "{a} {b:+}*i1 {c:+}*i2 {d:+}*j")
    }
}

/// Open ball membership `||w - center|| < r`.
pub fn ball_contains(center: Bicomplex, r: f64, w: Bicomplex) -> Result<bool, Error> {
    if !(r > 0.0) {
        return Err(Error::NonPositiveRadius(r));
    }
    Ok((w - center).norm() < r)
}

/// The open discus `D(center; r1, r2)`: the cartesian product of the open
/// disks of radius `r1` and `r2` around the center's idempotent projections.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Discus {
    pub center: Bicomplex,
    pub r1: f64,
    pub r2: f64,
}

impl Discus {
    pub fn new(center: Bicomplex, r1: f64, r2: f64) -> Result<Self, Error> {
        if !(r1 > 0.0) {
            return Err(Error::NonPositiveRadius(r1));
        }
        if !(r2 > 0.0) {
            return Err(Error::NonPositiveRadius(r2));
        }
        Ok(Self { center, r1, r2 })
    }

    pub fn contains(&self, w: Bicomplex) -> bool {
        let p = w.to_idempotent();
        let a = self.center.to_idempotent();
        (p.p1 - a.p1).norm() < self.r1 && (p.p2 - a.p2).norm() < self.r2
    }
}
