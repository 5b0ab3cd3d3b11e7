//! Z-saturation: divide lattice elements by prime integers.
//!
//! A lattice fails to be p-saturated exactly when its extension is linearly
//! dependent over Z_p. The dependence is found in three stages: a Z_p[x]
//! kernel of the final block columns, a zero reduction of the extension
//! prefix against their Hermite form, or a Z_p dependence among the reduced
//! residues. Witness combinations are assembled from exact preimages inside
//! the lattice, so every returned element provably satisfies p*h in L.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::Result;
use crate::exactring::{
    distinct_primes, fppoly_lift, hnf, kernel, reduce_by_hnf, zpoly_mod_p, FpField, Mat, Poly,
    PolyRing, Ring, ZPoly,
};
use crate::lattice::{groebner, GhnfBasis, ZxVector};

use super::witness::{sort_witnesses, Multiplier, SaturationWitness};

/// Witnesses that the lattice is not Z-saturated: elements h not in L with
/// p*h in L for a prime p. Empty iff L is Z-saturated.
pub fn zfactor(basis: &GhnfBasis) -> Result<Vec<SaturationWitness>> {
    basis
        .validate()
        .map_err(|v| crate::error::Error::NotGhnf(v.to_string()))?;
    Ok(zfactor_unchecked(basis))
}

pub(crate) fn zfactor_unchecked(basis: &GhnfBasis) -> Vec<SaturationWitness> {
    if basis.is_empty() {
        return Vec::new();
    }
    let n = basis.n();
    // product of the leading coefficients of the first pivot entries
    let mut q = BigInt::one();
    for b in basis.blocks() {
        q *= basis.pivot_poly(b, 0).lc().unwrap();
    }
    let primes = distinct_primes(&q).expect("positive leading product");

    for p in primes {
        let fp = FpField::new(p.to_u64().expect("prime fits in u64"));
        let ring = PolyRing::new(fp);

        // final column of each block
        let last_cols: Vec<&ZxVector> = basis
            .blocks()
            .iter()
            .map(|b| &basis.columns()[b.start + b.len - 1])
            .collect();
        let fbar = Mat::from_columns(
            n,
            last_cols
                .iter()
                .map(|c| c.entries().iter().map(|e| zpoly_mod_p(e, &fp)).collect())
                .collect(),
        );

        // stage one: Z_p[x] kernel of the final columns
        let kern = kernel(&ring, &fbar);
        if !kern.is_empty() {
            let mut out = Vec::new();
            for gv in kern {
                let mut w = ZxVector::zero(n);
                for (c, gi) in last_cols.iter().zip(&gv) {
                    w = w.add_ref(&c.scale_poly(&fppoly_lift(gi)));
                }
                let h = w.div_int(&p).expect("kernel combination divisible by p");
                out.push(SaturationWitness::checked(
                    basis,
                    h,
                    Multiplier::Prime(p.clone()),
                ));
            }
            sort_witnesses(&mut out);
            return out;
        }

        // Hermite form of the final columns over Z_p[x], with exact
        // preimages of its columns inside the lattice
        let hres = hnf(&ring, &fbar);
        let t = last_cols.len();
        debug_assert_eq!(hres.zero_cols, 0);
        let bhat: Vec<ZxVector> = (0..t)
            .map(|k| {
                let mut acc = ZxVector::zero(n);
                for (i, c) in last_cols.iter().enumerate() {
                    acc = acc.add_ref(&c.scale_poly(&fppoly_lift(hres.u.at(i, k))));
                }
                acc
            })
            .collect();

        // stage two: reduce the extension prefix; a zero residue lifts to a
        // lattice element divisible by p
        let cminus = basis.extension_prefix();
        let mut residues: Vec<(Vec<Poly<u64>>, ZxVector)> = Vec::new();
        let mut out = Vec::new();
        for f in &cminus {
            let target: Vec<Poly<u64>> =
                f.entries().iter().map(|e| zpoly_mod_p(e, &fp)).collect();
            let (rbar, quots) = reduce_by_hnf(&ring, &hres, &target);
            let mut exact = f.clone();
            for (k, qk) in quots.iter().enumerate() {
                if qk.is_zero() {
                    continue;
                }
                exact = exact.sub_ref(&bhat[k].scale_poly(&fppoly_lift(qk)));
            }
            if rbar.iter().all(|e| e.is_zero()) {
                let h = exact.div_int(&p).expect("zero residue divisible by p");
                out.push(SaturationWitness::checked(
                    basis,
                    h,
                    Multiplier::Prime(p.clone()),
                ));
            } else {
                residues.push((rbar, exact));
            }
        }
        if !out.is_empty() {
            sort_witnesses(&mut out);
            return out;
        }

        // stage three: Z_p dependence among the residues
        if !residues.is_empty() {
            let maxdeg = residues
                .iter()
                .flat_map(|(r, _)| r.iter().filter_map(|e| e.degree()))
                .max()
                .unwrap_or(0);
            let height = n * (maxdeg + 1);
            let cols: Vec<Vec<u64>> = residues
                .iter()
                .map(|(r, _)| {
                    let mut col = vec![0u64; height];
                    for (row, e) in r.iter().enumerate() {
                        for (k, c) in e.coeffs().iter().enumerate() {
                            col[row * (maxdeg + 1) + k] = *c;
                        }
                    }
                    col
                })
                .collect();
            let e = Mat::from_columns(height, cols);
            let kern = kernel(&fp, &e);
            if !kern.is_empty() {
                let mut out = Vec::new();
                for bv in kern {
                    let mut v = ZxVector::zero(n);
                    for ((_, exact), bi) in residues.iter().zip(&bv) {
                        v = v.add_ref(&exact.scale_int(&BigInt::from(*bi)));
                    }
                    let h = v.div_int(&p).expect("dependent residues divisible by p");
                    out.push(SaturationWitness::checked(
                        basis,
                        h,
                        Multiplier::Prime(p.clone()),
                    ));
                }
                sort_witnesses(&mut out);
                return out;
            }
        }
    }
    Vec::new()
}

/// The Z-saturation of the lattice generated by `gens`. Rank-preserving.
pub fn sat_z(n: usize, gens: &[ZxVector]) -> GhnfBasis {
    sat_z_traced(n, gens).0
}

/// As `sat_z`, also returning the product of all witness primes adjoined
/// along the way: an annihilator of sat_Z(L)/L.
pub fn sat_z_traced(n: usize, gens: &[ZxVector]) -> (GhnfBasis, BigInt) {
    let mut basis = groebner(n, gens).0;
    let mut annihilator = BigInt::one();
    loop {
        let ws = zfactor_unchecked(&basis);
        if ws.is_empty() {
            return (basis, annihilator);
        }
        for w in &ws {
            if let Multiplier::Prime(p) = &w.multiplier {
                annihilator *= p;
            }
        }
        basis = super::adjoin(&basis, ws.into_iter().map(|w| w.element));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::zxvec;

    fn example_7_2() -> Vec<ZxVector> {
        // columns (x^2+2x-2, 0), (x+2, 4), (1, 2x)
        vec![
            zxvec(&[&[-2, 2, 1], &[0]]),
            zxvec(&[&[2, 1], &[4]]),
            zxvec(&[&[1], &[0, 2]]),
        ]
    }

    #[test]
    fn zfactor_first_pass_witness() {
        let (basis, _) = groebner(2, &example_7_2());
        let ws = zfactor(&basis).unwrap();
        let target = zxvec(&[&[1, -1], &[0, 0, 0, 1]]);
        assert!(
            ws.iter().any(|w| w.element == target
                && w.multiplier == Multiplier::Prime(BigInt::from(2))),
            "expected witness (1-x, x^3), got {:?}",
            ws.iter().map(|w| &w.element).collect::<Vec<_>>()
        );
    }

    #[test]
    fn zfactor_single_even_column() {
        let (basis, _) = groebner(1, &[zxvec(&[&[2]])]);
        let ws = zfactor(&basis).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].element, zxvec(&[&[1]]));
        assert_eq!(ws[0].multiplier, Multiplier::Prime(BigInt::from(2)));
    }

    #[test]
    fn zfactor_trivial_on_full_lattice() {
        let (basis, _) = groebner(2, &[zxvec(&[&[1], &[0]]), zxvec(&[&[0], &[1]])]);
        assert!(zfactor(&basis).unwrap().is_empty());
    }

    #[test]
    fn sat_z_worked_example() {
        let basis = sat_z(2, &example_7_2());
        let expect = vec![
            zxvec(&[&[-2, 2, 1], &[0]]),
            zxvec(&[&[2, 1], &[4]]),
            zxvec(&[&[1], &[0, 2]]),
            zxvec(&[&[1, 1], &[2, 0, 1]]),
        ];
        let (egb, _) = groebner(2, &expect);
        assert!(
            basis.same_lattice(&egb),
            "got {:?}, expected {:?}",
            basis.columns(),
            egb.columns()
        );
    }

    #[test]
    fn sat_z_single_generator() {
        let basis = sat_z(2, &[zxvec(&[&[2], &[0]])]);
        assert_eq!(basis.columns(), &[zxvec(&[&[1], &[0]])]);
    }

    #[test]
    fn sat_z_idempotent_and_rank_preserving() {
        let gens = example_7_2();
        let once = sat_z(2, &gens);
        let twice = sat_z(2, once.columns());
        assert!(once.same_lattice(&twice));
        assert_eq!(once.rank(), groebner(2, &gens).0.rank());
    }
}
