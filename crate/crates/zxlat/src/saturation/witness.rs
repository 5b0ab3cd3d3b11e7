//! Saturation witnesses: elements outside the lattice that a multiplier
//! sends inside.

use num_bigint::BigInt;

use crate::exactring::ZPoly;
use crate::lattice::{GhnfBasis, ZxVector};

/// What multiplies the new element into the current lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Multiplier {
    /// x^k with k >= 1.
    PowerOfX(usize),
    /// A prime integer.
    Prime(BigInt),
    /// A non-constant irreducible primitive polynomial.
    PolyFactor(ZPoly),
}

impl Multiplier {
    pub fn as_poly(&self) -> ZPoly {
        match self {
            Multiplier::PowerOfX(k) => ZPoly::monomial(BigInt::from(1), *k),
            Multiplier::Prime(p) => ZPoly::constant(p.clone()),
            Multiplier::PolyFactor(p) => p.clone(),
        }
    }

    /// Deterministic ordering key: by kind, then by value.
    fn sort_key(&self) -> (u8, Vec<BigInt>) {
        match self {
            Multiplier::PowerOfX(k) => (0, vec![BigInt::from(*k as u64)]),
            Multiplier::Prime(p) => (1, vec![p.clone()]),
            Multiplier::PolyFactor(p) => (2, p.coeffs().to_vec()),
        }
    }
}

/// h together with the proof data: multiplier * h lies in the lattice and is
/// expressed there by `combination` over the basis columns.
#[derive(Clone, Debug)]
pub struct SaturationWitness {
    pub element: ZxVector,
    pub multiplier: Multiplier,
    pub combination: Vec<ZPoly>,
}

impl SaturationWitness {
    /// Build a witness, storing the canonical coset representative of the
    /// element, computing the combination by reduction, and checking both
    /// witness properties exactly.
    pub(crate) fn checked(basis: &GhnfBasis, element: ZxVector, multiplier: Multiplier) -> Self {
        let element = basis.reduce(&element);
        assert!(
            !element.is_zero(),
            "witness element already lies in the lattice"
        );
        let scaled = element.scale_poly(&multiplier.as_poly());
        let (rem, combination) = basis.reduce_with_transform(&scaled);
        assert!(
            rem.is_zero(),
            "multiplier * witness must lie in the lattice"
        );
        SaturationWitness {
            element,
            multiplier,
            combination,
        }
    }
}

/// Deterministic witness order: by multiplier, then by element.
pub(crate) fn sort_witnesses(ws: &mut [SaturationWitness]) {
    ws.sort_by(|a, b| {
        a.multiplier
            .sort_key()
            .cmp(&b.multiplier.sort_key())
            .then_with(|| a.element.cmp_order(&b.element))
    });
}
