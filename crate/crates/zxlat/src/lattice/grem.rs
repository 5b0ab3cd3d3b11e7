//! G-reduction of vectors modulo a set of generators.

use num_traits::Zero;

use crate::exactring::ZPoly;

use super::vector::{LatticeMonomial, ZxVector};

/// The normal form of f modulo G: no monomial of the result is a Z[x]
/// multiple of the leading term of any element of G. Canonical when G is a
/// Gröbner basis.
pub fn grem(f: &ZxVector, basis: &[ZxVector]) -> ZxVector {
    grem_with_transform(f, basis).0
}

/// As `grem`, also returning quotients q with f = r + sum q_i g_i.
pub fn grem_with_transform(f: &ZxVector, basis: &[ZxVector]) -> (ZxVector, Vec<ZPoly>) {
    let mut r = f.clone();
    let mut q = vec![ZPoly::zero(); basis.len()];
    let lts: Vec<Option<LatticeMonomial>> = basis.iter().map(|g| g.leading_term()).collect();
    'outer: loop {
        // largest reducible monomial of r
        for m in r.monomials_desc() {
            for (gi, lt) in lts.iter().enumerate() {
                let Some(lt) = lt else { continue };
                if lt.divides(&m) {
                    let c = &m.coeff / &lt.coeff;
                    let shift = m.exp - lt.exp;
                    let mono = ZPoly::monomial(c, shift);
                    r = r.sub_ref(&basis[gi].scale_poly(&mono));
                    q[gi] = q[gi].add_ref(&mono);
                    continue 'outer;
                }
            }
        }
        break;
    }
    debug_assert!(check_transform(f, basis, &r, &q));
    (r, q)
}

fn check_transform(f: &ZxVector, basis: &[ZxVector], r: &ZxVector, q: &[ZPoly]) -> bool {
    let mut acc = r.clone();
    for (g, qi) in basis.iter().zip(q) {
        acc = acc.add_ref(&g.scale_poly(qi));
    }
    acc == *f
}

/// Is any monomial of f a Z[x] multiple of the leading term of some g in G?
pub fn is_reducible(f: &ZxVector, basis: &[ZxVector]) -> bool {
    let lts: Vec<Option<LatticeMonomial>> = basis.iter().map(|g| g.leading_term()).collect();
    f.monomials_desc().iter().any(|m| {
        lts.iter()
            .any(|lt| lt.as_ref().map_or(false, |lt| lt.divides(m)))
    })
}

/// The S-vector of f and g, zero when the leading positions differ.
pub fn s_vector(f: &ZxVector, g: &ZxVector) -> ZxVector {
    match s_vector_parts(f, g) {
        None => ZxVector::zero(f.n()),
        Some((qf, qg)) => f.scale_poly(&qf).sub_ref(&g.scale_poly(&qg)),
    }
}

/// Multipliers (qf, qg) with S(f, g) = qf*f - qg*g; None when the leading
/// positions differ (the S-vector is zero).
pub fn s_vector_parts(f: &ZxVector, g: &ZxVector) -> Option<(ZPoly, ZPoly)> {
    let a = f.leading_term().expect("S-vector of zero vector");
    let b = g.leading_term().expect("S-vector of zero vector");
    if a.pos != b.pos {
        return None;
    }
    let l = num_integer::lcm(a.coeff.clone(), b.coeff.clone());
    let e = a.exp.max(b.exp);
    let qf = ZPoly::monomial(&l / &a.coeff, e - a.exp);
    let qg = ZPoly::monomial(&l / &b.coeff, e - b.exp);
    Some((qf, qg))
}

/// A combination reaching gcd of the leading coefficients: for f, g with the
/// same leading position and leading coefficients a, b, returns
/// (s*x^(e-da), t*x^(e-db)) such that s*x^..*f + t*x^..*g has leading
/// monomial gcd(a,b)*x^e. Only useful when neither of a, b divides the other.
pub fn gcd_combination_parts(f: &ZxVector, g: &ZxVector) -> Option<(ZPoly, ZPoly)> {
    let a = f.leading_term().expect("gcd combination of zero vector");
    let b = g.leading_term().expect("gcd combination of zero vector");
    if a.pos != b.pos {
        return None;
    }
    if (&a.coeff % &b.coeff).is_zero() || (&b.coeff % &a.coeff).is_zero() {
        return None;
    }
    let e = num_integer::Integer::extended_gcd(&a.coeff, &b.coeff);
    let top = a.exp.max(b.exp);
    let qf = ZPoly::monomial(e.x.clone(), top - a.exp);
    let qg = ZPoly::monomial(e.y.clone(), top - b.exp);
    debug_assert!(!(&e.x * &a.coeff + &e.y * &b.coeff).is_zero());
    Some((qf, qg))
}
