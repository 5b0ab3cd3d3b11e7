//! x-saturation: divide lattice elements by powers of x.

use crate::error::Result;
use crate::exactring::{kernel, IntRing, Mat};
use crate::lattice::{groebner, GhnfBasis, ZxVector};

use super::witness::{sort_witnesses, Multiplier, SaturationWitness};

/// Witnesses that the lattice is not x-saturated: elements h with h not in
/// L but x^k h in L. Empty iff L is x-saturated.
///
/// Each integer kernel vector g of the constant-term matrix gives a
/// combination sum g_i c_i divisible by x; stripping the full power of x
/// leaves a candidate h with nonzero constant part.
pub fn xfactor(basis: &GhnfBasis) -> Result<Vec<SaturationWitness>> {
    basis
        .validate()
        .map_err(|v| crate::error::Error::NotGhnf(v.to_string()))?;
    Ok(xfactor_unchecked(basis))
}

pub(crate) fn xfactor_unchecked(basis: &GhnfBasis) -> Vec<SaturationWitness> {
    let n = basis.n();
    if basis.is_empty() {
        return Vec::new();
    }
    let ring = IntRing;
    let f0 = Mat::from_columns(n, basis.columns().iter().map(|c| c.at_zero()).collect());
    let mut out = Vec::new();
    for g in kernel(&ring, &f0) {
        let mut w = ZxVector::zero(n);
        for (c, gi) in basis.columns().iter().zip(&g) {
            w = w.add_ref(&c.scale_int(gi));
        }
        if w.is_zero() {
            continue; // the integer relation is already a Z[x] syzygy
        }
        let k = w.x_valuation();
        debug_assert!(k >= 1, "kernel combination must vanish at x = 0");
        let h = w.div_xk(k).expect("valuation divides");
        if basis.contains(&h) {
            continue;
        }
        out.push(SaturationWitness::checked(
            basis,
            h,
            Multiplier::PowerOfX(k),
        ));
    }
    sort_witnesses(&mut out);
    out
}

/// The x-saturation of the lattice generated by `gens`: the fixed point of
/// adjoining all x-factor witnesses. Rank-preserving.
pub fn sat_x(n: usize, gens: &[ZxVector]) -> GhnfBasis {
    let mut basis = groebner(n, gens).0;
    loop {
        let ws = xfactor_unchecked(&basis);
        if ws.is_empty() {
            return basis;
        }
        basis = super::adjoin(&basis, ws.into_iter().map(|w| w.element));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::zxvec;

    fn example_7_1() -> Vec<ZxVector> {
        // columns (-x+2, 3x+2, 0), (1, 1, 2x), (1, 2x+1, x^2)
        vec![
            zxvec(&[&[2, -1], &[2, 3], &[0]]),
            zxvec(&[&[1], &[1], &[0, 2]]),
            zxvec(&[&[1], &[1, 2], &[0, 0, 1]]),
        ]
    }

    #[test]
    fn xfactor_worked_example() {
        let (basis, _) = groebner(3, &example_7_1());
        let ws = xfactor(&basis).unwrap();
        // the witness (0, 2, x-2) with multiplier x comes from the kernel
        // vector (0, -1, 1); a second witness comes from (1, -2, 0)
        assert!(!ws.is_empty());
        let target = zxvec(&[&[0], &[2], &[-2, 1]]);
        assert!(
            ws.iter().any(|w| w.element == target
                && w.multiplier == Multiplier::PowerOfX(1)),
            "expected witness (0,2,x-2), got {:?}",
            ws.iter().map(|w| &w.element).collect::<Vec<_>>()
        );
    }

    #[test]
    fn xfactor_m1_and_identity() {
        let m1 = vec![
            zxvec(&[&[0, 1], &[0]]),
            zxvec(&[&[2], &[2]]),
            zxvec(&[&[0], &[0, 1]]),
        ];
        let (basis, _) = groebner(2, &m1);
        let ws = xfactor(&basis).unwrap();
        let elems: Vec<&ZxVector> = ws.iter().map(|w| &w.element).collect();
        let e1 = zxvec(&[&[1], &[0]]);
        assert!(elems.contains(&&e1));

        let id = vec![zxvec(&[&[1], &[0]]), zxvec(&[&[0], &[1]])];
        let (basis, _) = groebner(2, &id);
        assert!(xfactor(&basis).unwrap().is_empty());
    }

    #[test]
    fn sat_x_worked_example() {
        let basis = sat_x(3, &example_7_1());
        // the paper's C1 for this input
        let expect = vec![
            zxvec(&[&[2, -1], &[2, 3], &[0]]),
            zxvec(&[&[1], &[-3], &[4]]),
            zxvec(&[&[0], &[2], &[-2, 1]]),
        ];
        let (egb, _) = groebner(3, &expect);
        assert!(basis.same_lattice(&egb), "got {:?}", basis.columns());
    }

    #[test]
    fn sat_x_m1_fills_ambient() {
        let m1 = vec![
            zxvec(&[&[0, 1], &[0]]),
            zxvec(&[&[2], &[2]]),
            zxvec(&[&[0], &[0, 1]]),
        ];
        let basis = sat_x(2, &m1);
        assert_eq!(
            basis.columns(),
            &[zxvec(&[&[1], &[0]]), zxvec(&[&[0], &[1]])]
        );
    }

    #[test]
    fn sat_x_idempotent() {
        let gens = example_7_1();
        let once = sat_x(3, &gens);
        let twice = sat_x(3, once.columns());
        assert!(once.same_lattice(&twice));
        assert_eq!(once.rank(), groebner(3, &gens).0.rank());
    }
}
