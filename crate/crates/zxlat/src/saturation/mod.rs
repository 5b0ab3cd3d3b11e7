//! Saturation of Z[x] lattices: the x-, Z-, and Z[x]-saturations with their
//! witness-producing factor steps, and the P-saturation test and closure.

mod witness;
mod xsat;
mod zsat;
mod zxsat;

pub use witness::{Multiplier, SaturationWitness};
pub use xsat::{sat_x, xfactor};
pub use zsat::{sat_z, sat_z_traced, zfactor};
pub use zxsat::{sat_zx, zxfactor};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::coeffgroup::SigmaFamily;
use crate::error::{Error, Result};
use crate::exactring::ZPoly;
use crate::lattice::{groebner, GhnfBasis, ZxVector};

/// The full saturation: x-saturation followed by Z-saturation (the two
/// compositions agree).
pub fn full_sat(n: usize, gens: &[ZxVector]) -> GhnfBasis {
    let b = sat_x(n, gens);
    sat_z(n, b.columns())
}

/// One certificate of the effective P-saturation test: a generator of the
/// Z-saturation, its minimal integer order into the lattice, and the
/// witness (x - o_m) g that must belong to the lattice.
#[derive(Clone, Debug)]
pub struct PSatCertificate {
    pub generator: ZxVector,
    pub order: BigInt,
    pub o_m: BigInt,
    pub witness: ZxVector,
    pub passed: bool,
}

/// Effective P-saturation test of an x-saturated lattice: compute
/// sat_Z(L) = (g_1, ..., g_s), the minimal m_i with m_i g_i in L, and check
/// (x - o_{m_i}) g_i in L for every i.
pub fn p_saturation_check(
    basis: &GhnfBasis,
    family: SigmaFamily,
) -> Result<(bool, Vec<PSatCertificate>)> {
    if !xfactor(basis)?.is_empty() {
        return Err(Error::NotXSaturated);
    }
    let (satz, annihilator) = sat_z_traced(basis.n(), basis.columns());
    let mut certs = Vec::new();
    for g in satz.columns() {
        let m = minimal_order(basis, g, &annihilator);
        let o = family.o_m(&m);
        let x_minus_o = ZPoly::new(vec![-o.clone(), BigInt::one()], |c: &BigInt| {
            num_traits::Zero::is_zero(c)
        });
        let witness = g.scale_poly(&x_minus_o);
        let passed = basis.contains(&witness);
        certs.push(PSatCertificate {
            generator: g.clone(),
            order: m,
            o_m: o,
            witness,
            passed,
        });
    }
    Ok((certs.iter().all(|c| c.passed), certs))
}

/// The smallest m >= 1 with m*g in the lattice; `annihilator` is a known
/// multiple of every such order (the product of the Z-factor primes).
fn minimal_order(basis: &GhnfBasis, g: &ZxVector, annihilator: &BigInt) -> BigInt {
    if basis.contains(g) {
        return BigInt::one();
    }
    let mut divisors = divisors_of(annihilator);
    divisors.sort();
    for d in divisors {
        if d.is_one() {
            continue;
        }
        if basis.contains(&g.scale_int(&d)) {
            return d;
        }
    }
    panic!("annihilator does not annihilate: {} * g not in lattice", annihilator);
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    let factors = crate::exactring::prime_factors(n).expect("positive annihilator");
    let mut out = vec![BigInt::one()];
    for (p, m) in factors {
        let mut next = Vec::new();
        for d in &out {
            let mut pw = BigInt::one();
            for _ in 0..=m {
                next.push(d * &pw);
                pw *= &p;
            }
        }
        out = next;
    }
    out
}

/// The smallest x-saturated lattice containing `gens` that is closed under
/// m f in L => (x - o_m) f in L. Rank-preserving.
pub fn p_saturation(n: usize, gens: &[ZxVector], family: SigmaFamily) -> GhnfBasis {
    let mut current: Vec<ZxVector> = gens.to_vec();
    loop {
        let basis = sat_x(n, &current);
        let (ok, certs) = p_saturation_check(&basis, family).expect("basis is x-saturated");
        if ok {
            return basis;
        }
        current = basis.columns().to_vec();
        for c in certs.into_iter().filter(|c| !c.passed) {
            current.push(c.witness);
        }
    }
}

/// Adjoin witness elements and recompute the normal form.
pub(crate) fn adjoin(basis: &GhnfBasis, extra: impl IntoIterator<Item = ZxVector>) -> GhnfBasis {
    let mut gens: Vec<ZxVector> = basis.columns().to_vec();
    gens.extend(extra);
    groebner(basis.n(), &gens).0
}

/// gcd helper shared by the witness constructions.
pub(crate) fn vector_content(v: &ZxVector) -> BigInt {
    let mut g = BigInt::from(0);
    for e in v.entries() {
        g = g.gcd(&e.content());
    }
    g
}
