//! An exact divisible multiplicative coefficient group with a transform
//! action, standing in for the multiplicative group of an algebraically
//! closed inversive difference field at desk scale: roots of unity times
//! positive rationals times named transform-transcendental generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactring::{prime_factors, ZPoly};

pub type Rat = BigRational;

/// The transform acts on roots of unity by zeta -> zeta^u with u = +1 or -1;
/// o_m = u mod m then satisfies gcd(o_m, m) = 1 for every m >= 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SigmaFamily {
    Plus,
    Minus,
}

impl SigmaFamily {
    pub fn unit(&self) -> i64 {
        match self {
            SigmaFamily::Plus => 1,
            SigmaFamily::Minus => -1,
        }
    }

    /// o_m = u mod m, reduced to [0, m).
    pub fn o_m(&self, m: &BigInt) -> BigInt {
        BigInt::from(self.unit()).mod_floor(m)
    }

    /// Evaluate p at u (the action of p on the torsion exponent).
    pub fn eval(&self, p: &ZPoly) -> BigInt {
        p.eval(&BigInt::from(self.unit()))
    }
}

impl Default for SigmaFamily {
    fn default() -> Self {
        SigmaFamily::Plus
    }
}

/// A Laurent polynomial in x with rational coefficients; exponent of a
/// transform-transcendental generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentExp {
    /// Lowest exponent; coefficients are little-endian from there.
    pub lo: i64,
    pub coeffs: Vec<Rat>,
}

impl LaurentExp {
    pub fn zero() -> Self {
        LaurentExp {
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn normalized(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let strip = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if strip > 0 {
            self.coeffs.drain(..strip);
            self.lo += strip as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn from_zx(p: &ZPoly) -> Self {
        LaurentExp {
            lo: 0,
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        }
        .normalized()
    }

    pub fn constant(c: Rat) -> Self {
        LaurentExp {
            lo: 0,
            coeffs: vec![c],
        }
        .normalized()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(rhs.lo + rhs.coeffs.len() as i64);
        let mut coeffs = vec![Rat::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.lo - lo) as usize + i] += c;
        }
        LaurentExp { lo, coeffs }.normalized()
    }

    pub fn neg(&self) -> Self {
        LaurentExp {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply by an integer polynomial in x.
    pub fn mul_zx(&self, p: &ZPoly) -> Self {
        if self.is_zero() || p.is_zero() {
            return LaurentExp::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + p.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in p.coeffs().iter().enumerate() {
                coeffs[i + j] += a * Rat::from_integer(b.clone());
            }
        }
        LaurentExp {
            lo: self.lo,
            coeffs,
        }
        .normalized()
    }

    /// Multiply by x^k (k may be negative).
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentExp::zero();
        }
        LaurentExp {
            lo: self.lo + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn div_int(&self, k: u64) -> Self {
        let d = Rat::from_integer(BigInt::from(k));
        LaurentExp {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| c / &d).collect(),
        }
    }
}

/// An element zeta_m^j * prod p^{e_p} * prod g^{L_g(x)} of the coefficient
/// group. The identity is (torsion 0, both maps empty).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffElem {
    /// j/m in Q/Z, reduced to [0, 1): the root-of-unity part zeta_m^j.
    torsion: Rat,
    /// prime -> rational exponent, zero exponents absent.
    rational: BTreeMap<BigInt, Rat>,
    /// generator name -> Laurent exponent in x, zero exponents absent.
    trans: BTreeMap<String, LaurentExp>,
}

fn reduce_mod_one(q: &Rat) -> Rat {
    q - q.floor()
}

impl CoeffElem {
    pub fn one() -> Self {
        CoeffElem {
            torsion: Rat::zero(),
            rational: BTreeMap::new(),
            trans: BTreeMap::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.torsion.is_zero() && self.rational.is_empty() && self.trans.is_empty()
    }

    /// The root of unity zeta_m^j.
    pub fn root_of_unity(j: i64, m: u64) -> Self {
        assert!(m >= 1);
        let mut e = Self::one();
        e.torsion = reduce_mod_one(&Rat::new(BigInt::from(j), BigInt::from(m)));
        e
    }

    pub fn minus_one() -> Self {
        Self::root_of_unity(1, 2)
    }

    /// A nonzero rational as a group element (sign goes to the torsion part).
    pub fn from_rational(q: &Rat) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroInput("coefficient"));
        }
        let mut e = Self::one();
        if q.is_negative() {
            e.torsion = Rat::new(BigInt::one(), BigInt::from(2));
        }
        let num = q.numer().abs();
        let den = q.denom().abs();
        for (p, m) in prime_factors(&num)? {
            *e.rational.entry(p).or_insert_with(Rat::zero) += Rat::from_integer(BigInt::from(m));
        }
        for (p, m) in prime_factors(&den)? {
            *e.rational.entry(p).or_insert_with(Rat::zero) -= Rat::from_integer(BigInt::from(m));
        }
        e.rational.retain(|_, v| !v.is_zero());
        Ok(e)
    }

    pub fn from_integer(n: i64) -> Result<Self> {
        Self::from_rational(&Rat::from_integer(BigInt::from(n)))
    }

    /// A named transform-transcendental generator raised to a Z[x] power.
    pub fn generator(name: &str, exponent: &ZPoly) -> Self {
        let mut e = Self::one();
        let le = LaurentExp::from_zx(exponent);
        if !le.is_zero() {
            e.trans.insert(name.to_string(), le);
        }
        e
    }

    pub fn parts(&self) -> (&Rat, &BTreeMap<BigInt, Rat>, &BTreeMap<String, LaurentExp>) {
        (&self.torsion, &self.rational, &self.trans)
    }

    pub fn from_parts(
        torsion: Rat,
        rational: BTreeMap<BigInt, Rat>,
        trans: BTreeMap<String, LaurentExp>,
    ) -> Self {
        let mut e = CoeffElem {
            torsion: reduce_mod_one(&torsion),
            rational,
            trans,
        };
        e.rational.retain(|_, v| !v.is_zero());
        e.trans.retain(|_, v| !v.is_zero());
        e
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.torsion = reduce_mod_one(&(&out.torsion + &rhs.torsion));
        for (p, e) in &rhs.rational {
            *out.rational.entry(p.clone()).or_insert_with(Rat::zero) += e;
        }
        out.rational.retain(|_, v| !v.is_zero());
        for (g, e) in &rhs.trans {
            let cur = out.trans.entry(g.clone()).or_insert_with(LaurentExp::zero);
            *cur = cur.add(e);
        }
        out.trans.retain(|_, v| !v.is_zero());
        out
    }

    pub fn inv(&self) -> Self {
        CoeffElem {
            torsion: reduce_mod_one(&-&self.torsion),
            rational: self
                .rational
                .iter()
                .map(|(p, e)| (p.clone(), -e))
                .collect(),
            trans: self.trans.iter().map(|(g, e)| (g.clone(), e.neg())).collect(),
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    /// c^p for p in Z[x]: the transform acts as multiplication by x on
    /// exponents. Torsion scales by p(u), rationals by p(1), transcendental
    /// exponents by p(x).
    pub fn pow_by(&self, p: &ZPoly, family: SigmaFamily) -> Self {
        if p.is_zero() {
            return Self::one();
        }
        let pu = Rat::from_integer(family.eval(p));
        let p1 = Rat::from_integer(p.eval(&BigInt::one()));
        let mut out = Self::one();
        out.torsion = reduce_mod_one(&(&self.torsion * &pu));
        out.rational = self
            .rational
            .iter()
            .map(|(q, e)| (q.clone(), e * &p1))
            .collect();
        out.rational.retain(|_, v| !v.is_zero());
        out.trans = self
            .trans
            .iter()
            .map(|(g, e)| (g.clone(), e.mul_zx(p)))
            .collect();
        out.trans.retain(|_, v| !v.is_zero());
        out
    }

    /// Integer power (p constant).
    pub fn pow_int(&self, k: i64, family: SigmaFamily) -> Self {
        self.pow_by(&ZPoly::from_ints(&[k]), family)
    }

    /// sigma^k with k possibly negative: torsion multiplies by u^k, the
    /// rational part is fixed, transcendental exponents shift by x^k.
    pub fn sigma_shift(&self, k: i64, family: SigmaFamily) -> Self {
        let uk = if k.rem_euclid(2) == 0 { 1 } else { family.unit() };
        let mut out = Self::one();
        out.torsion = reduce_mod_one(&(&self.torsion * Rat::from_integer(BigInt::from(uk))));
        out.rational = self.rational.clone();
        out.trans = self
            .trans
            .iter()
            .map(|(g, e)| (g.clone(), e.shift(k)))
            .collect();
        out
    }

    /// Exactly k distinct elements r with r^k = self.
    pub fn kth_roots(&self, k: u64) -> Vec<Self> {
        assert!(k >= 1);
        let kq = Rat::from_integer(BigInt::from(k));
        let base_torsion = &self.torsion / &kq;
        let rational: BTreeMap<BigInt, Rat> = self
            .rational
            .iter()
            .map(|(p, e)| (p.clone(), e / &kq))
            .collect();
        let trans: BTreeMap<String, LaurentExp> = self
            .trans
            .iter()
            .map(|(g, e)| (g.clone(), e.div_int(k)))
            .collect();
        (0..k)
            .map(|l| {
                let t = &base_torsion + Rat::new(BigInt::from(l), BigInt::from(k));
                CoeffElem {
                    torsion: reduce_mod_one(&t),
                    rational: rational.clone(),
                    trans: trans.clone(),
                }
            })
            .collect()
    }

    /// Torsion as a reduced fraction j/m in [0, 1).
    pub fn torsion(&self) -> &Rat {
        &self.torsion
    }

    /// The value as an exact rational, when the element is one (trivial
    /// torsion apart from sign) and all exponents are integers.
    pub fn as_rational(&self) -> Option<Rat> {
        if !self.trans.is_empty() {
            return None;
        }
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let sign = if self.torsion.is_zero() {
            Rat::one()
        } else if self.torsion == half {
            -Rat::one()
        } else {
            return None;
        };
        let mut acc = Rat::one();
        for (p, e) in &self.rational {
            if !e.denom().is_one() {
                return None;
            }
            let exp = e.numer();
            let mag = num_traits::pow::pow(
                Rat::from_integer(p.clone()),
                exp.abs().try_into().ok()?,
            );
            if exp.is_negative() {
                acc /= mag;
            } else {
                acc *= mag;
            }
        }
        Some(sign * acc)
    }
}

impl std::fmt::Display for CoeffElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        if !self.torsion.is_zero() {
            parts.push(format!("zeta({})", self.torsion));
        }
        for (p, e) in &self.rational {
            parts.push(format!("{}^({})", p, e));
        }
        for (g, e) in &self.trans {
            parts.push(format!("{}^({:?})", g, e));
        }
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::from_ints(c)
    }

    #[test]
    fn minus_one_squares_to_one() {
        let m = CoeffElem::minus_one();
        assert!(m.mul(&m).is_one());
    }

    #[test]
    fn rational_parts_multiply() {
        let four = CoeffElem::from_integer(4).unwrap();
        let half = CoeffElem::from_rational(&Rat::new(BigInt::one(), BigInt::from(2))).unwrap();
        let two = CoeffElem::from_integer(2).unwrap();
        assert_eq!(four.mul(&half), two);
    }

    #[test]
    fn inverse_negates_exponents() {
        let lam = CoeffElem::generator("lambda", &zp(&[0, 1]));
        let inv = lam.inv();
        assert!(lam.mul(&inv).is_one());
    }

    #[test]
    fn pow_by_on_roots_of_unity() {
        let zeta4 = CoeffElem::root_of_unity(1, 4);
        // under u = +1: zeta^(x-1) = 1
        assert!(zeta4.pow_by(&zp(&[-1, 1]), SigmaFamily::Plus).is_one());
        // under u = -1: zeta^(x-1) = zeta^{-2} = -1
        assert_eq!(
            zeta4.pow_by(&zp(&[-1, 1]), SigmaFamily::Minus),
            CoeffElem::minus_one()
        );
    }

    #[test]
    fn pow_by_on_generator() {
        let lam = CoeffElem::generator("lambda", &zp(&[1]));
        let got = lam.pow_by(&zp(&[1, 0, 1]), SigmaFamily::Plus);
        assert_eq!(got, CoeffElem::generator("lambda", &zp(&[1, 0, 1])));
    }

    #[test]
    fn sigma_shift_examples() {
        let lam_x = CoeffElem::generator("lambda", &zp(&[0, 1]));
        let lam = CoeffElem::generator("lambda", &zp(&[1]));
        assert_eq!(lam_x.sigma_shift(-1, SigmaFamily::Plus), lam);
        let m = CoeffElem::minus_one();
        assert_eq!(m.sigma_shift(-3, SigmaFamily::Plus), m);
        let two = CoeffElem::from_integer(2).unwrap();
        assert_eq!(two.sigma_shift(5, SigmaFamily::Plus), two);
        // inversivity
        let e = CoeffElem::root_of_unity(1, 3)
            .mul(&CoeffElem::generator("lambda", &zp(&[2, 1])));
        for fam in [SigmaFamily::Plus, SigmaFamily::Minus] {
            assert_eq!(e.sigma_shift(2, fam).sigma_shift(-2, fam), e);
        }
    }

    #[test]
    fn kth_roots_examples() {
        let one = CoeffElem::one();
        let roots = one.kth_roots(2);
        assert_eq!(roots, vec![CoeffElem::one(), CoeffElem::minus_one()]);

        let m = CoeffElem::minus_one();
        let roots = m.kth_roots(2);
        assert_eq!(
            roots,
            vec![CoeffElem::root_of_unity(1, 4), CoeffElem::root_of_unity(3, 4)]
        );

        let four = CoeffElem::from_integer(4).unwrap();
        let roots = four.kth_roots(2);
        let two = CoeffElem::from_integer(2).unwrap();
        let minus_two = CoeffElem::from_integer(-2).unwrap();
        assert_eq!(roots, vec![two, minus_two]);

        // every root recovers the base under pow k
        for r in &four.kth_roots(3) {
            assert_eq!(r.pow_int(3, SigmaFamily::Plus), four);
        }
    }

    #[test]
    fn module_action_laws() {
        let e = CoeffElem::root_of_unity(1, 6)
            .mul(&CoeffElem::from_integer(3).unwrap())
            .mul(&CoeffElem::generator("lambda", &zp(&[1, 2])));
        let p = zp(&[2, -1, 3]);
        let q = zp(&[-1, 1]);
        for fam in [SigmaFamily::Plus, SigmaFamily::Minus] {
            let sum = e.pow_by(&p.add_ref(&q), fam);
            let prod = e.pow_by(&p, fam).mul(&e.pow_by(&q, fam));
            assert_eq!(sum, prod);
            let nested = e.pow_by(&p, fam).pow_by(&q, fam);
            let direct = e.pow_by(&p.mul_ref(&q), fam);
            assert_eq!(nested, direct);
        }
    }

    #[test]
    fn as_rational_round_trip() {
        for v in [1i64, -1, 2, -6, 12] {
            let e = CoeffElem::from_integer(v).unwrap();
            assert_eq!(e.as_rational(), Some(Rat::from_integer(BigInt::from(v))));
        }
        assert_eq!(CoeffElem::root_of_unity(1, 4).as_rational(), None);
    }
}
