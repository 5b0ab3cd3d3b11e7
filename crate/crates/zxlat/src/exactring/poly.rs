//! Dense univariate polynomials, little-endian coefficient order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{EuclideanRing as _, Rat};

/// A dense polynomial; index = degree. The highest-index coefficient is
/// nonzero, or the list is empty for the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: std::fmt::Debug> std::fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<C> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Build from little-endian coefficients, trimming high zeros.
    pub fn new(mut coeffs: Vec<C>, is_zero: impl Fn(&C) -> bool) -> Self {
        while coeffs.last().map_or(false, &is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, None for zero.
    pub fn lc(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn coeff_ref(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }
}

/// Z[x]: the workhorse scalar of the lattice algorithms.
pub type ZPoly = Poly<BigInt>;

impl ZPoly {
    pub fn from_ints<I: Into<BigInt> + Clone>(coeffs: &[I]) -> Self {
        Poly::new(
            coeffs.iter().map(|c| c.clone().into()).collect(),
            |c: &BigInt| c.is_zero(),
        )
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c], |c| c.is_zero())
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// c * x^k
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.push(c);
        Poly { coeffs: v }
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.len().max(rhs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out, |c| c.is_zero())
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.len().max(rhs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(out, |c| c.is_zero())
    }

    pub fn neg_ref(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.len() + rhs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out, |c| c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by x^k.
    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Exact division by x^k; None if x^k does not divide.
    pub fn div_xk(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.coeffs.len() < k || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Largest k with x^k | self; 0 for the zero polynomial.
    pub fn x_valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Constant term.
    pub fn at_zero(&self) -> BigInt {
        self.coeff(0)
    }

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// self / content, with positive leading coefficient; zero stays zero.
    pub fn primitive_part(&self) -> Self {
        let mut g = self.content();
        if g.is_zero() {
            return Poly::zero();
        }
        if self.lc().map_or(false, |c| c.is_negative()) {
            g = -g;
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact quotient self/rhs over Z, if it exists.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let dr = rhs.degree().unwrap();
        let ds = self.degree()?;
        if ds < dr {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dr + 1];
        let lb = rhs.lc().unwrap();
        for k in (dr..=ds).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (c, r) = rem[k].div_rem(lb);
            if !r.is_zero() {
                return None;
            }
            q[k - dr] = c.clone();
            for (j, bc) in rhs.coeffs.iter().enumerate() {
                rem[k - dr + j] -= &c * bc;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(q, |c| c.is_zero()))
    }

    /// Polynomial gcd over Z: primitive over Z, positive leading coefficient.
    pub fn gcd_z(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.primitive_part().scale(&rhs.content().max(BigInt::one()));
        }
        if rhs.is_zero() {
            return self
                .primitive_part()
                .scale(&self.content().max(BigInt::one()));
        }
        let cg = self.content().gcd(&rhs.content());
        // primitive gcd via Q[x] Euclid on the primitive parts
        let qx = super::ring::PolyRing::new(super::ring::RatField);
        let a = zpoly_to_q(&self.primitive_part());
        let b = zpoly_to_q(&rhs.primitive_part());
        let (g, _, _) = qx.gcd_bezout(&a, &b);
        let gp = qpoly_clear_denominators(&g).primitive_part();
        gp.scale(&cg)
    }

    pub fn derivative(&self) -> Self {
        if self.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i as u64))
            .collect();
        Poly::new(out, |c: &BigInt| c.is_zero())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

pub fn zpoly_to_q(f: &ZPoly) -> Poly<Rat> {
    Poly::new(
        f.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect(),
        |c: &Rat| c.is_zero(),
    )
}

/// Multiply through by the lcm of denominators; result has integer coefficients.
pub fn qpoly_clear_denominators(f: &Poly<Rat>) -> ZPoly {
    let mut l = BigInt::one();
    for c in f.coeffs() {
        l = l.lcm(c.denom());
    }
    Poly::new(
        f.coeffs()
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect(),
        |c: &BigInt| c.is_zero(),
    )
}

/// Reduce coefficients into [0, p).
pub fn zpoly_mod_p(f: &ZPoly, fp: &super::ring::FpField) -> Poly<u64> {
    Poly::new(
        f.coeffs().iter().map(|c| fp.reduce_int(c)).collect(),
        |c: &u64| *c == 0,
    )
}

/// Lift coefficients from [0, p) back to Z.
pub fn fppoly_lift(f: &Poly<u64>) -> ZPoly {
    Poly::new(
        f.coeffs().iter().map(|c| BigInt::from(*c)).collect(),
        |c: &BigInt| c.is_zero(),
    )
}

impl std::fmt::Display for ZPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            if k == 1 {
                write!(f, "x")?;
            } else if k > 1 {
                write!(f, "x^{}", k)?;
            }
        }
        Ok(())
    }
}
