//! Ring contexts for the exact coefficient domains.
//!
//! Arithmetic is routed through small context objects so the same
//! elimination code runs over Z, Q, Z_p, Z_p[x], Q[x], and Q[x]/(p(x)).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

use super::poly::Poly;

pub type Rat = BigRational;

/// A commutative ring with exact, decidable equality.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_i64(&self, n: i64) -> Self::Elem;
}

/// A Euclidean domain: enough structure for column Hermite reduction.
pub trait EuclideanRing: Ring {
    /// Euclidean measure; zero maps to 0, nonzero to a positive value.
    /// The remainder of `divrem` has strictly smaller measure.
    fn norm(&self, a: &Self::Elem) -> BigUint;

    /// a = q*b + r with norm(r) < norm(b). b must be nonzero.
    fn divrem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// A unit u such that u*a is in canonical form (nonnegative over Z,
    /// monic over polynomial rings). a must be nonzero.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;

    /// Exact quotient a/b if b divides a.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return None;
        }
        let (q, r) = self.divrem(a, b);
        if self.is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }

    /// (g, s, t) with g = gcd(a, b) = s*a + t*b, g in canonical form.
    fn gcd_bezout(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.divrem(&r0, &r1);
            let ns = self.sub(&s0, &self.mul(&q, &s1));
            let nt = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, ns);
            t0 = std::mem::replace(&mut t1, nt);
        }
        if self.is_zero(&r0) {
            return (r0, s0, t0);
        }
        let u = self.normalizing_unit(&r0);
        (self.mul(&u, &r0), self.mul(&u, &s0), self.mul(&u, &t0))
    }
}

/// A field, as a Euclidean ring whose divisions are exact.
pub trait Field: EuclideanRing {
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// The integers Z.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
}

impl EuclideanRing for IntRing {
    fn norm(&self, a: &BigInt) -> BigUint {
        a.abs().to_biguint().unwrap()
    }

    fn divrem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        // remainder in [0, |b|)
        let m = b.abs();
        let r = a.mod_floor(&m);
        let q = (a - &r) / b;
        (q, r)
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }

    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    }
}

/// The rationals Q.
#[derive(Clone, Copy, Debug, Default)]
pub struct RatField;

impl Ring for RatField {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }
}

impl EuclideanRing for RatField {
    fn norm(&self, a: &Rat) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            BigUint::one()
        }
    }
    fn divrem(&self, a: &Rat, b: &Rat) -> (Rat, Rat) {
        (a / b, Rat::zero())
    }
    fn is_unit(&self, a: &Rat) -> bool {
        !a.is_zero()
    }
    fn normalizing_unit(&self, a: &Rat) -> Rat {
        a.recip()
    }
}

impl Field for RatField {
    fn inv(&self, a: &Rat) -> Rat {
        a.recip()
    }
}

/// The prime field Z_p with elements stored as reduced residues.
#[derive(Clone, Copy, Debug)]
pub struct FpField {
    pub p: u64,
}

impl FpField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2);
        FpField { p }
    }

    pub fn reduce_int(&self, a: &BigInt) -> u64 {
        let m = a.mod_floor(&BigInt::from(self.p));
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc: u128 = 1;
        let p = self.p as u128;
        let mut bb = b as u128 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * bb % p;
            }
            bb = bb * bb % p;
            e >>= 1;
        }
        b = acc as u64;
        b
    }
}

impl Ring for FpField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - *b % self.p) as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a % self.p == 0
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl EuclideanRing for FpField {
    fn norm(&self, a: &u64) -> BigUint {
        if self.is_zero(a) {
            BigUint::zero()
        } else {
            BigUint::one()
        }
    }
    fn divrem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (self.mul(a, &self.inv(b)), 0)
    }
    fn is_unit(&self, a: &u64) -> bool {
        !self.is_zero(a)
    }
    fn normalizing_unit(&self, a: &u64) -> u64 {
        self.inv(a)
    }
}

impl Field for FpField {
    fn inv(&self, a: &u64) -> u64 {
        assert!(!self.is_zero(a), "inverse of zero in F_p");
        self.pow(*a, self.p - 2)
    }
}

/// Univariate polynomials over a base ring, as a ring themselves.
#[derive(Clone, Copy, Debug, Default)]
pub struct PolyRing<R: Ring> {
    pub base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn from_coeffs(&self, coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        Poly::new(coeffs, |c| self.base.is_zero(c))
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); k];
        v.push(c);
        self.from_coeffs(v)
    }

    pub fn eval(&self, f: &Poly<R::Elem>, at: &R::Elem) -> R::Elem {
        let mut acc = self.base.zero();
        for c in f.coeffs().iter().rev() {
            acc = self.base.add(&self.base.mul(&acc, at), c);
        }
        acc
    }

    pub fn scale(&self, f: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(f.coeffs().iter().map(|a| self.base.mul(a, c)).collect())
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = match (a.coeff_ref(i), b.coeff_ref(i)) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => self.base.zero(),
            };
            out.push(x);
        }
        self.from_coeffs(out)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.from_coeffs(a.coeffs().iter().map(|c| self.base.neg(c)).collect())
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.coeffs().iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs().iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }
}

impl<F: Field> EuclideanRing for PolyRing<F> {
    fn norm(&self, a: &Poly<F::Elem>) -> BigUint {
        match a.degree() {
            None => BigUint::zero(),
            Some(d) => BigUint::from(d as u64 + 1),
        }
    }

    fn divrem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by zero polynomial");
        let lb_inv = self.base.inv(b.lc().unwrap());
        let mut rem: Vec<F::Elem> = a.coeffs().to_vec();
        let da = match a.degree() {
            None => return (Poly::zero(), Poly::zero()),
            Some(d) => d,
        };
        if da < db {
            return (Poly::zero(), a.clone());
        }
        let mut q = vec![self.base.zero(); da - db + 1];
        for k in (db..=da).rev() {
            if self.base.is_zero(&rem[k]) {
                continue;
            }
            let c = self.base.mul(&rem[k], &lb_inv);
            q[k - db] = c.clone();
            for (j, bc) in b.coeffs().iter().enumerate() {
                let t = self.base.mul(&c, bc);
                rem[k - db + j] = self.base.sub(&rem[k - db + j], &t);
            }
        }
        (self.from_coeffs(q), self.from_coeffs(rem))
    }

    fn is_unit(&self, a: &Poly<F::Elem>) -> bool {
        a.degree() == Some(0)
    }

    fn normalizing_unit(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.constant(self.base.inv(a.lc().expect("normalizing unit of zero")))
    }
}

/// The quotient field Q[x]/(p(x)) for an irreducible p(x).
#[derive(Clone, Debug)]
pub struct QuotField {
    pub modulus: Poly<Rat>,
    pub qx: PolyRing<RatField>,
}

impl QuotField {
    pub fn new(modulus: Poly<Rat>) -> Self {
        assert!(modulus.degree().map_or(false, |d| d >= 1));
        QuotField {
            modulus,
            qx: PolyRing::new(RatField),
        }
    }

    pub fn reduce(&self, a: &Poly<Rat>) -> Poly<Rat> {
        self.qx.divrem(a, &self.modulus).1
    }
}

impl Ring for QuotField {
    type Elem = Poly<Rat>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.qx.one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.qx.add(a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.qx.sub(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.qx.neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(&self.qx.mul(a, b))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.qx.from_i64(n)
    }
}

impl EuclideanRing for QuotField {
    fn norm(&self, a: &Self::Elem) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            BigUint::one()
        }
    }
    fn divrem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        (self.mul(a, &self.inv(b)), Poly::zero())
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        !a.is_zero()
    }
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem {
        self.inv(a)
    }
}

impl Field for QuotField {
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        assert!(!a.is_zero(), "inverse of zero residue");
        // extended Euclid in Q[x]: s*a + t*modulus = gcd = 1
        let (g, s, _) = self.qx.gcd_bezout(a, &self.modulus);
        assert!(
            g.degree() == Some(0),
            "modulus is not irreducible or element not invertible"
        );
        let ginv = RatField.inv(g.lc().unwrap());
        self.reduce(&self.qx.scale(&s, &ginv))
    }
}
