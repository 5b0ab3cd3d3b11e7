//! Factorization of integer polynomials over Q: squarefree split,
//! Berlekamp mod a small prime, Hensel lifting, subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::mat::{kernel, Mat};
use super::poly::{fppoly_lift, zpoly_mod_p, Poly, ZPoly};
use super::primes::small_primes;
use super::ring::{EuclideanRing, Field, FpField, PolyRing, Ring};

pub const DEFAULT_DEGREE_CAP: usize = 64;

/// f = content * prod factor_i^mult_i with irreducible primitive factors of
/// positive leading coefficient, sorted by (degree, coefficients).
pub fn factor_over_q(f: &ZPoly) -> Result<(BigInt, Vec<(ZPoly, u32)>)> {
    factor_over_q_capped(f, DEFAULT_DEGREE_CAP)
}

pub fn factor_over_q_capped(f: &ZPoly, cap: usize) -> Result<(BigInt, Vec<(ZPoly, u32)>)> {
    if f.is_zero() {
        return Err(Error::ZeroInput("factor_over_q"));
    }
    let deg = f.degree().unwrap();
    if deg > cap {
        return Err(Error::DegreeCap { cap, deg });
    }
    let mut content = f.content();
    if f.lc().unwrap().is_negative() {
        content = -content;
    }
    let pp = f.primitive_part();
    let mut out: Vec<(ZPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&pp) {
        if part.degree() == Some(0) {
            continue;
        }
        for g in factor_squarefree(&part)? {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    debug_assert_eq!(
        {
            let mut acc = ZPoly::constant(content.clone());
            for (g, m) in &out {
                for _ in 0..*m {
                    acc = acc.mul_ref(g);
                }
            }
            acc
        },
        *f
    );
    Ok((content, out))
}

fn cmp_poly(a: &ZPoly, b: &ZPoly) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Yun's algorithm on a primitive polynomial with positive leading
/// coefficient; returns pairwise coprime squarefree parts with multiplicity.
pub fn squarefree_decomposition(f: &ZPoly) -> Vec<(ZPoly, u32)> {
    if f.degree().map_or(true, |d| d == 0) {
        return vec![(f.clone(), 1)];
    }
    let df = f.derivative();
    let g = f.gcd_z(&df);
    let mut w = f.div_exact(&g).expect("gcd divides");
    let mut y = df.div_exact(&g).expect("gcd divides derivative");
    let mut out = Vec::new();
    let mut i = 1u32;
    loop {
        let z = y.sub_ref(&w.derivative());
        if z.is_zero() {
            if w.degree().map_or(false, |d| d > 0) {
                out.push((w, i));
            }
            break;
        }
        let u = w.gcd_z(&z);
        if u.degree().map_or(false, |d| d > 0) {
            out.push((u.clone(), i));
        }
        w = w.div_exact(&u).expect("gcd divides w");
        y = z.div_exact(&u).expect("gcd divides z");
        i += 1;
    }
    out
}

/// Factor a primitive squarefree polynomial of positive leading coefficient.
fn factor_squarefree(f: &ZPoly) -> Result<Vec<ZPoly>> {
    let n = f.degree().unwrap();
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let lc = f.lc().unwrap().clone();
    // pick a prime where f stays squarefree with full degree
    let mut chosen = None;
    for p in small_primes().take(64) {
        if lc.is_multiple_of(&BigInt::from(p)) {
            continue;
        }
        let fp = FpField::new(p);
        let ring = PolyRing::new(fp);
        let fbar = zpoly_mod_p(f, &fp);
        if fbar.degree() != Some(n) {
            continue;
        }
        let dbar = derivative_fp(&ring, &fbar);
        let (g, _, _) = ring.gcd_bezout(&fbar, &dbar);
        if g.degree() == Some(0) {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.ok_or_else(|| Error::Invalid("no good prime found for factorization".into()))?;
    let fp = FpField::new(p);
    let ring = PolyRing::new(fp);
    let fbar_monic = make_monic(&ring, &zpoly_mod_p(f, &fp));
    let modular = berlekamp(&fp, &fbar_monic);
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }

    // Hensel lift to p^K > 2 * bound on candidate coefficients
    let bound: BigInt = lc.abs()
        * BigInt::from(2u32).pow(n as u32 + 1)
        * BigInt::from(n as u64 + 1)
        * f.max_abs_coeff();
    let mut pk = BigInt::from(p);
    let mut k = 1u32;
    while pk <= BigInt::from(2) * &bound {
        pk *= BigInt::from(p);
        k += 1;
    }
    let lifted = hensel_lift_list(f, p, k, &modular);

    // subset recombination
    let mut rest = f.clone();
    let mut pool: Vec<ZPoly> = lifted;
    let mut found: Vec<ZPoly> = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= pool.len() {
        let idxs: Vec<usize> = (0..pool.len()).collect();
        for subset in subsets(&idxs, size) {
            let mut cand = ZPoly::constant(rest.lc().unwrap().clone());
            for &i in &subset {
                cand = mulmod_pk(&cand, &pool[i], &pk);
            }
            let cand = symmetric_lift(&cand, &pk).primitive_part();
            if cand.degree().map_or(true, |d| d == 0) {
                continue;
            }
            if let Some(q) = rest.div_exact(&cand) {
                found.push(cand);
                rest = q;
                let mut keep = Vec::new();
                for (i, g) in pool.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(g);
                    }
                }
                pool = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if rest.degree().map_or(false, |d| d > 0) {
        found.push(rest.primitive_part());
    }
    found.sort_by(cmp_poly);
    Ok(found)
}

fn derivative_fp(ring: &PolyRing<FpField>, f: &Poly<u64>) -> Poly<u64> {
    let coeffs: Vec<u64> = f
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| ring.base.mul(c, &ring.base.from_i64(i as i64)))
        .collect();
    ring.from_coeffs(coeffs)
}

fn make_monic(ring: &PolyRing<FpField>, f: &Poly<u64>) -> Poly<u64> {
    let inv = ring.base.inv(f.lc().unwrap());
    ring.scale(f, &inv)
}

/// Berlekamp factorization of a monic squarefree polynomial over F_p.
/// Deterministic; intended for small p.
fn berlekamp(fp: &FpField, f: &Poly<u64>) -> Vec<Poly<u64>> {
    let ring = PolyRing::new(*fp);
    let n = f.degree().unwrap();
    if n == 1 {
        return vec![f.clone()];
    }
    // columns of Q: x^{ip} mod f
    let xp = powmod_poly(&ring, &ring.monomial(1, 1), fp.p, f);
    let mut power = ring.one();
    let mut qcols: Vec<Vec<u64>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut col: Vec<u64> = (0..n)
            .map(|r| power.coeff_ref(r).copied().unwrap_or(0))
            .collect();
        // subtract identity for Q - I
        col[i] = fp.sub(&col[i], &1);
        qcols.push(col);
        power = ring.divrem(&ring.mul(&power, &xp), f).1;
    }
    let m = Mat::from_columns(n, qcols);
    // nullspace of (Q - I) acting on coefficient vectors: solve (Q - I) v = 0
    let null = kernel(fp, &m);
    let r = null.len();
    if r <= 1 {
        return vec![f.clone()];
    }
    let mut factors = vec![f.clone()];
    for v in null {
        if factors.len() >= r {
            break;
        }
        let vpoly = ring.from_coeffs(v);
        if vpoly.degree().map_or(true, |d| d == 0) {
            continue; // constants split nothing
        }
        let prev = std::mem::take(&mut factors);
        for g in prev {
            if g.degree() == Some(1) {
                factors.push(g);
                continue;
            }
            let mut remaining = g;
            for c in 0..fp.p {
                if remaining.degree().map_or(true, |d| d <= 1) {
                    break;
                }
                let shifted = ring.sub(&vpoly, &ring.constant(c));
                let (h, _, _) = ring.gcd_bezout(&remaining, &shifted);
                if h.degree().map_or(false, |d| d >= 1) && h.degree() < remaining.degree() {
                    remaining = make_monic(&ring, &ring.divrem(&remaining, &h).0);
                    factors.push(h);
                }
            }
            if remaining.degree().map_or(false, |d| d >= 1) {
                factors.push(remaining);
            }
        }
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.coeffs().cmp(b.coeffs())));
    factors
}

fn powmod_poly(
    ring: &PolyRing<FpField>,
    base: &Poly<u64>,
    mut e: u64,
    modulus: &Poly<u64>,
) -> Poly<u64> {
    let mut acc = ring.one();
    let mut b = ring.divrem(base, modulus).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = ring.divrem(&ring.mul(&acc, &b), modulus).1;
        }
        b = ring.divrem(&ring.mul(&b, &b), modulus).1;
        e >>= 1;
    }
    acc
}

fn mod_pk(f: &ZPoly, pk: &BigInt) -> ZPoly {
    Poly::new(
        f.coeffs().iter().map(|c| c.mod_floor(pk)).collect(),
        |c: &BigInt| c.is_zero(),
    )
}

fn mulmod_pk(a: &ZPoly, b: &ZPoly, pk: &BigInt) -> ZPoly {
    mod_pk(&a.mul_ref(b), pk)
}

/// Lift coefficients to the symmetric range (-pk/2, pk/2].
fn symmetric_lift(f: &ZPoly, pk: &BigInt) -> ZPoly {
    let half = pk / BigInt::from(2);
    Poly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(pk);
                if r > half {
                    r - pk
                } else {
                    r
                }
            })
            .collect(),
        |c: &BigInt| c.is_zero(),
    )
}

/// Lift f === lc(f) * prod(monic g_i) (mod p) to the same congruence mod p^k.
/// Returns the lifted monic factors.
fn hensel_lift_list(f: &ZPoly, p: u64, k: u32, gs: &[Poly<u64>]) -> Vec<ZPoly> {
    let pk = BigInt::from(p).pow(k);
    if gs.len() == 1 {
        // monic image of f mod p^k
        let fp = mod_pk(f, &pk);
        let scaled = scale_to_monic_mod(&fp, &pk);
        return vec![scaled];
    }
    let fp_ring = PolyRing::new(FpField::new(p));
    let mid = gs.len() / 2;
    let (left, right) = gs.split_at(mid);
    // G monic = prod(left) mod p; H carries the leading coefficient
    let mut gprod = fp_ring.one();
    for g in left {
        gprod = fp_ring.mul(&gprod, g);
    }
    let mut hprod = fp_ring.constant(FpField::new(p).reduce_int(f.lc().unwrap()));
    for g in right {
        hprod = fp_ring.mul(&hprod, g);
    }
    let (gl, hl) = hensel_lift_pair(f, p, k, &fppoly_lift(&gprod), &fppoly_lift(&hprod));
    let mut out = hensel_lift_list(&gl, p, k, left);
    out.extend(hensel_lift_list(&hl, p, k, right));
    out
}

fn scale_to_monic_mod(f: &ZPoly, pk: &BigInt) -> ZPoly {
    let lc = f.lc().expect("nonzero");
    let inv = modinv(lc, pk);
    mod_pk(&f.scale(&inv), pk)
}

fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "element not invertible in lift");
    e.x.mod_floor(m)
}

/// Lift f === g*h (mod p), g monic, to f === g'*h' (mod p^k), g' monic.
fn hensel_lift_pair(f: &ZPoly, p: u64, k: u32, g0: &ZPoly, h0: &ZPoly) -> (ZPoly, ZPoly) {
    let fp = FpField::new(p);
    let ring = PolyRing::new(fp);
    let gbar = zpoly_mod_p(g0, &fp);
    let hbar = zpoly_mod_p(h0, &fp);
    let (one, s, t) = ring.gcd_bezout(&gbar, &hbar);
    assert!(one.degree() == Some(0), "modular factors are not coprime");
    let inv = fp.inv(one.lc().unwrap());
    let s = ring.scale(&s, &inv);
    let t = ring.scale(&t, &inv);

    let mut g = g0.clone();
    let mut h = h0.clone();
    let mut modulus = BigInt::from(p);
    for _ in 1..k {
        let next = &modulus * BigInt::from(p);
        // e = (f - g h) / modulus mod p
        let diff = f.sub_ref(&g.mul_ref(&h));
        let e: Vec<BigInt> = diff.coeffs().iter().map(|c| c / &modulus).collect();
        let ebar = zpoly_mod_p(&Poly::new(e, |c: &BigInt| c.is_zero()), &fp);
        if ebar.is_zero() {
            modulus = next;
            continue;
        }
        // solve a*h + b*g === e (mod p), deg a < deg g
        let te = ring.mul(&t, &ebar);
        let (q, a) = ring.divrem(&te, &gbar);
        let b_num = ring.add(&ring.mul(&s, &ebar), &ring.mul(&q, &hbar));
        let g_new = g.add_ref(&fppoly_lift(&a).scale(&modulus));
        let h_new = h.add_ref(&fppoly_lift(&b_num).scale(&modulus));
        g = mod_pk_monic(&g_new, &next);
        h = mod_pk(&h_new, &next);
        modulus = next;
    }
    (g, h)
}

fn mod_pk_monic(f: &ZPoly, pk: &BigInt) -> ZPoly {
    // g stays monic through the lift; reduce lower coefficients only
    let d = f.degree().expect("nonzero");
    let coeffs: Vec<BigInt> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i == d { c.clone() } else { c.mod_floor(pk) })
        .collect();
    Poly::new(coeffs, |c: &BigInt| c.is_zero())
}

/// All size-k subsets of the given index slice, in lexicographic order.
fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, items: &[usize], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(i + 1, items, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, items, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::from_ints(c)
    }

    #[test]
    fn factors_paper_example() {
        // 4x^2 + 2 = 2 * (2x^2 + 1)
        let (c, f) = factor_over_q(&zp(&[2, 0, 4])).unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(f, vec![(zp(&[1, 0, 2]), 1)]);
    }

    #[test]
    fn factors_difference_of_squares() {
        let (c, f) = factor_over_q(&zp(&[-1, 0, 1])).unwrap();
        assert_eq!(c, BigInt::one());
        assert_eq!(f, vec![(zp(&[-1, 1]), 1), (zp(&[1, 1]), 1)]);
    }

    #[test]
    fn factors_with_multiplicity() {
        // x^3 + x^2 = x^2 (x+1)
        let (c, f) = factor_over_q(&zp(&[0, 0, 1, 1])).unwrap();
        assert_eq!(c, BigInt::one());
        assert_eq!(f, vec![(zp(&[0, 1]), 2), (zp(&[1, 1]), 1)]);
    }

    #[test]
    fn factors_cyclotomic_product() {
        // x^6 - 1 = (x-1)(x+1)(x^2-x+1)(x^2+x+1)
        let (_, f) = factor_over_q(&zp(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        let degs: Vec<usize> = f.iter().map(|(g, _)| g.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        let mut acc = zp(&[1]);
        for (g, m) in &f {
            for _ in 0..*m {
                acc = acc.mul_ref(g);
            }
        }
        assert_eq!(acc, zp(&[-1, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn factors_negative_leading() {
        let (c, f) = factor_over_q(&zp(&[0, -3, -3])).unwrap();
        // -3x^2 - 3x = -3 * x * (x+1)
        assert_eq!(c, BigInt::from(-3));
        assert_eq!(f, vec![(zp(&[0, 1]), 1), (zp(&[1, 1]), 1)]);
    }

    #[test]
    fn irreducible_quadratic() {
        let (c, f) = factor_over_q(&zp(&[1, 1, 1])).unwrap();
        assert_eq!(c, BigInt::one());
        assert_eq!(f, vec![(zp(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn squarefree_parts() {
        // (x+1)^2 (x-2) = x^3 - 3x - 2
        let f = zp(&[-2, -3, 0, 1]);
        let parts = squarefree_decomposition(&f);
        assert_eq!(parts, vec![(zp(&[-2, 1]), 1), (zp(&[1, 1]), 2)]);
    }
}
