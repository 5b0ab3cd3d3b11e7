//! Vectors in Z[x]^n and the monomial order.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

use crate::exactring::ZPoly;

/// An element of Z[x]^n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZxVector {
    entries: Vec<ZPoly>,
}

impl std::fmt::Debug for ZxVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// A monomial a*x^k*e_pos of Z[x]^n. Positions are 0-based.
///
/// The order: a*x^k*e_i > b*x^l*e_j iff i > j, or i = j and k > l, or
/// i = j, k = l, and |a| > |b|.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeMonomial {
    pub coeff: BigInt,
    pub exp: usize,
    pub pos: usize,
}

impl LatticeMonomial {
    pub fn cmp_order(&self, other: &Self) -> Ordering {
        self.pos
            .cmp(&other.pos)
            .then_with(|| self.exp.cmp(&other.exp))
            .then_with(|| self.coeff.abs().cmp(&other.coeff.abs()))
    }

    /// Is `other` = (c x^d) * self for some integer c and d >= 0?
    pub fn divides(&self, other: &Self) -> bool {
        self.pos == other.pos
            && self.exp <= other.exp
            && (&other.coeff % &self.coeff).is_zero()
    }
}

impl ZxVector {
    pub fn new(entries: Vec<ZPoly>) -> Self {
        ZxVector { entries }
    }

    pub fn zero(n: usize) -> Self {
        ZxVector {
            entries: vec![ZPoly::zero(); n],
        }
    }

    /// Standard basis vector e_pos (0-based).
    pub fn unit(n: usize, pos: usize) -> Self {
        let mut v = Self::zero(n);
        v.entries[pos] = ZPoly::one();
        v
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[ZPoly] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &ZPoly {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.n(), rhs.n());
        ZxVector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.n(), rhs.n());
        ZxVector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn neg_ref(&self) -> Self {
        ZxVector {
            entries: self.entries.iter().map(|e| e.neg_ref()).collect(),
        }
    }

    /// Multiply every entry by a Z[x] scalar.
    pub fn scale_poly(&self, p: &ZPoly) -> Self {
        ZxVector {
            entries: self.entries.iter().map(|e| e.mul_ref(p)).collect(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        ZxVector {
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn mul_xk(&self, k: usize) -> Self {
        ZxVector {
            entries: self.entries.iter().map(|e| e.mul_xk(k)).collect(),
        }
    }

    /// Exact division of every entry by x^k.
    pub fn div_xk(&self, k: usize) -> Option<Self> {
        let entries: Option<Vec<ZPoly>> = self.entries.iter().map(|e| e.div_xk(k)).collect();
        entries.map(|entries| ZxVector { entries })
    }

    /// Largest k with x^k dividing every entry; 0 for the zero vector.
    pub fn x_valuation(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| !e.is_zero())
            .map(|e| e.x_valuation())
            .min()
            .unwrap_or(0)
    }

    /// Exact division of every entry by a polynomial.
    pub fn div_poly_exact(&self, p: &ZPoly) -> Option<Self> {
        let entries: Option<Vec<ZPoly>> = self.entries.iter().map(|e| e.div_exact(p)).collect();
        entries.map(|entries| ZxVector { entries })
    }

    /// Exact division of every entry by an integer.
    pub fn div_int(&self, c: &BigInt) -> Option<Self> {
        let mut entries = Vec::with_capacity(self.n());
        for e in &self.entries {
            let mut coeffs = Vec::with_capacity(e.len());
            for a in e.coeffs() {
                let (q, r) = num_integer::Integer::div_rem(a, c);
                if !r.is_zero() {
                    return None;
                }
                coeffs.push(q);
            }
            entries.push(ZPoly::from_ints(&coeffs));
        }
        Some(ZxVector { entries })
    }

    /// Entry-wise evaluation at x = 0.
    pub fn at_zero(&self) -> Vec<BigInt> {
        self.entries.iter().map(|e| e.at_zero()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.entries
            .iter()
            .filter_map(|e| e.degree())
            .max()
            .unwrap_or(0)
    }

    /// The maximal monomial under the order, None for the zero vector.
    pub fn leading_term(&self) -> Option<LatticeMonomial> {
        for pos in (0..self.n()).rev() {
            let e = &self.entries[pos];
            if let Some(d) = e.degree() {
                return Some(LatticeMonomial {
                    coeff: e.lc().unwrap().clone(),
                    exp: d,
                    pos,
                });
            }
        }
        None
    }

    /// Normal: the leading coefficient of the highest nonzero entry is
    /// positive.
    pub fn is_normal(&self) -> bool {
        self.leading_term()
            .map_or(false, |m| m.coeff.is_positive())
    }

    /// Sign-normalized copy (the zero vector stays zero).
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            Some(m) if m.coeff.is_negative() => self.neg_ref(),
            _ => self.clone(),
        }
    }

    /// Coefficient of the monomial x^exp * e_pos.
    pub fn monomial_coeff(&self, pos: usize, exp: usize) -> BigInt {
        self.entries[pos].coeff(exp)
    }

    /// All nonzero monomials, largest first.
    pub fn monomials_desc(&self) -> Vec<LatticeMonomial> {
        let mut out = Vec::new();
        for pos in (0..self.n()).rev() {
            let e = &self.entries[pos];
            if e.is_zero() {
                continue;
            }
            for exp in (0..e.len()).rev() {
                let c = e.coeff(exp);
                if !c.is_zero() {
                    out.push(LatticeMonomial {
                        coeff: c,
                        exp,
                        pos,
                    });
                }
            }
        }
        out
    }

    /// Order comparison via leading terms, with a lexicographic tie-break so
    /// sorting is strict and deterministic.
    pub fn cmp_order(&self, other: &Self) -> Ordering {
        match (self.leading_term(), other.leading_term()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp_order(&b).then_with(|| {
                for i in (0..self.n()).rev() {
                    let x = self.entries[i].coeffs();
                    let y = other.entries[i].coeffs();
                    let ord = x.len().cmp(&y.len()).then_with(|| x.cmp(y));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Build from integer coefficient rows: entry i is given little-endian.
pub fn zxvec(entries: &[&[i64]]) -> ZxVector {
    ZxVector::new(entries.iter().map(|c| ZPoly::from_ints(c)).collect())
}
