//! Z[x]-saturation: divide lattice elements by arbitrary nonzero
//! polynomials. A lattice closed under this is toric.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::Result;
use crate::exactring::{factor_over_q, kernel, zpoly_to_q, Mat, QuotField, Rat, Ring, ZPoly};
use crate::lattice::{groebner, GhnfBasis, ZxVector};

use super::witness::{sort_witnesses, Multiplier, SaturationWitness};

/// Witnesses that the lattice is not Z[x]-saturated. Integer-prime
/// witnesses are found first; once the lattice is Z-saturated, each
/// non-constant irreducible factor p(x) of the first pivot entries is
/// tested through a kernel over Q[x]/(p(x)). Empty iff L is toric.
pub fn zxfactor(basis: &GhnfBasis) -> Result<Vec<SaturationWitness>> {
    basis
        .validate()
        .map_err(|v| crate::error::Error::NotGhnf(v.to_string()))?;
    zxfactor_unchecked(basis)
}

pub(crate) fn zxfactor_unchecked(basis: &GhnfBasis) -> Result<Vec<SaturationWitness>> {
    let zw = super::zsat::zfactor_unchecked(basis);
    if !zw.is_empty() {
        return Ok(zw);
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let n = basis.n();

    // non-constant irreducible factors of the product of first pivot entries
    let mut prod = ZPoly::one();
    for b in basis.blocks() {
        prod = prod.mul_ref(basis.pivot_poly(b, 0));
    }
    let (_, factors) = factor_over_q(&prod)?;
    let first_cols: Vec<&ZxVector> = basis
        .blocks()
        .iter()
        .map(|b| &basis.columns()[b.start])
        .collect();

    for (p, _) in factors.iter().filter(|(p, _)| p.degree() != Some(0)) {
        let quot = QuotField::new(zpoly_to_q(p));
        let m = Mat::from_columns(
            n,
            first_cols
                .iter()
                .map(|c| {
                    c.entries()
                        .iter()
                        .map(|e| quot.reduce(&zpoly_to_q(e)))
                        .collect()
                })
                .collect(),
        );
        let kern = kernel(&quot, &m);
        if kern.is_empty() {
            continue;
        }
        let mut out = Vec::new();
        for bv in kern {
            // clear denominators across all entries
            let mut denom = BigInt::one();
            for entry in &bv {
                for c in entry.coeffs() {
                    denom = denom.lcm(c.denom());
                }
            }
            let dq = Rat::from_integer(denom);
            let mut v = ZxVector::zero(n);
            for (c, entry) in first_cols.iter().zip(&bv) {
                let int_coeffs: Vec<BigInt> = entry
                    .coeffs()
                    .iter()
                    .map(|q| {
                        let scaled = q * &dq;
                        debug_assert!(scaled.denom().is_one());
                        scaled.numer().clone()
                    })
                    .collect();
                let zp = ZPoly::from_ints(&int_coeffs);
                v = v.add_ref(&c.scale_poly(&zp));
            }
            let g = v
                .div_poly_exact(p)
                .expect("kernel combination divisible by p(x)");
            let content = super::vector_content(&g);
            let h = g
                .div_int(&content)
                .expect("content divides")
                .normalized();
            out.push(SaturationWitness::checked(
                basis,
                h,
                Multiplier::PolyFactor(p.clone()),
            ));
        }
        sort_witnesses(&mut out);
        return Ok(out);
    }
    Ok(Vec::new())
}

/// The Z[x]-saturation (toric closure) of the lattice generated by `gens`.
/// Rank-preserving.
pub fn sat_zx(n: usize, gens: &[ZxVector]) -> Result<GhnfBasis> {
    let mut basis = groebner(n, gens).0;
    loop {
        let ws = zxfactor_unchecked(&basis)?;
        if ws.is_empty() {
            return Ok(basis);
        }
        basis = super::adjoin(&basis, ws.into_iter().map(|w| w.element));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::zxvec;

    fn example_7_3() -> Vec<ZxVector> {
        // columns (x, 2x^2+1, 0), (x^2+1, 0, 4x^2+2)
        vec![
            zxvec(&[&[0, 1], &[1, 0, 2], &[0]]),
            zxvec(&[&[1, 0, 1], &[0], &[2, 0, 4]]),
        ]
    }

    #[test]
    fn zxfactor_worked_example() {
        let (basis, _) = groebner(3, &example_7_3());
        let ws = zxfactor(&basis).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].element, zxvec(&[&[0, 1], &[-1], &[0, 4]]));
        assert_eq!(
            ws[0].multiplier,
            Multiplier::PolyFactor(ZPoly::from_ints(&[1, 0, 2]))
        );
    }

    #[test]
    fn zxfactor_difference_pair() {
        // ((1-x, x-1)) has witness (1,-1) with factor x-1
        let (basis, _) = groebner(2, &[zxvec(&[&[1, -1], &[-1, 1]])]);
        let ws = zxfactor(&basis).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].element, zxvec(&[&[1], &[-1]]).normalized());
        assert_eq!(
            ws[0].multiplier,
            Multiplier::PolyFactor(ZPoly::from_ints(&[-1, 1]))
        );
    }

    #[test]
    fn zxfactor_full_lattice_empty() {
        let (basis, _) = groebner(2, &[zxvec(&[&[1], &[0]]), zxvec(&[&[0], &[1]])]);
        assert!(zxfactor(&basis).unwrap().is_empty());
    }

    #[test]
    fn sat_zx_worked_example() {
        let basis = sat_zx(3, &example_7_3()).unwrap();
        let expect = vec![
            zxvec(&[&[0, 1], &[1, 0, 2], &[0]]),
            zxvec(&[&[1], &[0, 1], &[2]]),
        ];
        let (egb, _) = groebner(3, &expect);
        assert!(
            basis.same_lattice(&egb),
            "got {:?}, expected {:?}",
            basis.columns(),
            egb.columns()
        );
        // fixed point
        assert!(zxfactor(&basis).unwrap().is_empty());
    }

    #[test]
    fn sat_zx_difference_pair() {
        let basis = sat_zx(2, &[zxvec(&[&[1, -1], &[-1, 1]])]).unwrap();
        assert_eq!(basis.columns(), &[zxvec(&[&[-1], &[1]])]);
    }

    #[test]
    fn sat_zx_toric_fixed() {
        let gens = vec![zxvec(&[&[-1], &[1]])];
        let basis = sat_zx(2, &gens).unwrap();
        let (egb, _) = groebner(2, &gens);
        assert!(basis.same_lattice(&egb));
    }
}
