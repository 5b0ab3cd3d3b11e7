//! Brute-force membership oracle, independent of the Gröbner machinery.
//!
//! Solves f = sum q_i g_i with bounded-degree q_i by integer linear algebra,
//! and certifies non-membership through Q[x] and Z_p[x] module membership.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactring::{
    hnf, zpoly_mod_p, zpoly_to_q, EuclideanRing, FpField, IntRing, Mat, Poly, PolyRing, RatField,
    ZPoly,
};

use super::vector::ZxVector;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleAnswer {
    True,
    False,
    Unknown,
}

/// Default cap: deg(f) + sum of generator degrees + 8.
pub fn default_degree_cap(gens: &[ZxVector], f: &ZxVector) -> usize {
    let gd: usize = gens.iter().map(|g| g.max_degree()).sum();
    f.max_degree() + gd + 8
}

/// Decide membership of f in the lattice generated by gens, trying
/// coefficient degrees up to `degree_cap`.
pub fn member_oracle(n: usize, gens: &[ZxVector], f: &ZxVector, degree_cap: usize) -> OracleAnswer {
    assert_eq!(f.n(), n);
    if f.is_zero() {
        return OracleAnswer::True;
    }
    let gens: Vec<&ZxVector> = gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return OracleAnswer::False;
    }

    // certificates of non-membership over Q[x] and over Z_p[x]
    if !member_qx(n, &gens, f) {
        return OracleAnswer::False;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if !member_fpx(n, &gens, f, p) {
            return OracleAnswer::False;
        }
    }

    // brute-force search for an exact integer solution
    for cap in [4usize, 8, 16, degree_cap] {
        let cap = cap.min(degree_cap);
        if solve_at_degree(n, &gens, f, cap) {
            return OracleAnswer::True;
        }
        if cap == degree_cap {
            break;
        }
    }
    OracleAnswer::Unknown
}

/// Is there an integer solution of f = sum q_i g_i with deg q_i <= d?
fn solve_at_degree(n: usize, gens: &[&ZxVector], f: &ZxVector, d: usize) -> bool {
    let maxdeg = f
        .max_degree()
        .max(gens.iter().map(|g| g.max_degree() + d).max().unwrap_or(0));
    let height = n * (maxdeg + 1);
    let flat = |v: &ZxVector| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); height];
        for (row, e) in v.entries().iter().enumerate() {
            for (k, c) in e.coeffs().iter().enumerate() {
                out[row * (maxdeg + 1) + k] = c.clone();
            }
        }
        out
    };
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for g in gens {
        for j in 0..=d {
            cols.push(flat(&g.mul_xk(j)));
        }
    }
    let a = Mat::from_columns(height, cols);
    let b = flat(f);
    solve_integer(&a, &b)
}

/// Does A y = b have an integer solution? Decided via the column Hermite
/// form: pivots give a forced back-substitution.
fn solve_integer(a: &Mat<BigInt>, b: &[BigInt]) -> bool {
    let ring = IntRing;
    let res = hnf(&ring, a);
    let mut r: Vec<BigInt> = b.to_vec();
    for &(prow, pcol) in &res.pivots {
        if r[prow].is_zero() {
            continue;
        }
        let piv = res.h.at(prow, pcol);
        let (q, rem) = num_integer::Integer::div_rem(&r[prow], piv);
        if !rem.is_zero() {
            return false;
        }
        for row in 0..res.h.rows {
            r[row] -= &q * res.h.at(row, pcol);
        }
    }
    r.iter().all(|c| c.is_zero())
}

/// Membership of f in the Q[x] module spanned by gens (exact).
fn member_qx(n: usize, gens: &[&ZxVector], f: &ZxVector) -> bool {
    let qx = PolyRing::new(RatField);
    let cols: Vec<Vec<Poly<_>>> = gens
        .iter()
        .map(|g| g.entries().iter().map(zpoly_to_q).collect())
        .collect();
    let target: Vec<Poly<_>> = f.entries().iter().map(zpoly_to_q).collect();
    member_pid(&qx, n, cols, target)
}

/// Membership of f mod p in the Z_p[x] module spanned by gens mod p.
fn member_fpx(n: usize, gens: &[&ZxVector], f: &ZxVector, p: u64) -> bool {
    let fp = FpField::new(p);
    let ring = PolyRing::new(fp);
    let reduce = |g: &ZPoly| zpoly_mod_p(g, &fp);
    let cols: Vec<Vec<Poly<u64>>> = gens
        .iter()
        .map(|g| g.entries().iter().map(reduce).collect())
        .collect();
    let target: Vec<Poly<u64>> = f.entries().iter().map(reduce).collect();
    member_pid(&ring, n, cols, target)
}

/// Membership in a module over a PID via the column Hermite form.
fn member_pid<R: EuclideanRing>(
    ring: &R,
    n: usize,
    cols: Vec<Vec<R::Elem>>,
    target: Vec<R::Elem>,
) -> bool {
    if cols.is_empty() {
        return target.iter().all(|e| ring.is_zero(e));
    }
    let a = Mat::from_columns(n, cols);
    let res = hnf(ring, &a);
    let (r, _) = crate::exactring::mat::reduce_by_hnf(ring, &res, &target);
    r.iter().all(|e| ring.is_zero(e))
}
