//! Free kernel bases (syzygies) of matrices over Z[x], and orthogonal
//! complements of lattices.

use crate::exactring::ZPoly;

use super::ghnf::GhnfBasis;
use super::groebner::groebner;
use super::grem::s_vector_parts;
use super::vector::ZxVector;

/// A free basis of ker(M) for the matrix M with the given columns in
/// Z[x]^n; the result lives in Z[x]^s for s columns.
///
/// The kernel is a Z[x]-saturated lattice, so its reduced Gröbner basis has
/// one column per pivot row and is a free basis. For a generalized Hermite
/// normal form input, the basis has s - rank(M) elements.
pub fn kernel_syzygy(n: usize, columns: &[ZxVector]) -> Vec<ZxVector> {
    let s = columns.len();
    if s == 0 {
        return Vec::new();
    }
    let (gb, log) = groebner(n, columns);
    let h = gb.columns();
    let r = h.len();

    let mut gens: Vec<ZxVector> = Vec::new();

    // syzygies of the Gröbner basis: adjacent in-block S-pairs reduce to
    // zero; their syzygy vectors generate ker of the basis matrix
    for b in gb.blocks() {
        for k in 1..b.len {
            let (i1, i2) = (b.start + k - 1, b.start + k);
            let (qf, qg) = s_vector_parts(&h[i1], &h[i2]).expect("same pivot row");
            let s_vec = h[i1].scale_poly(&qf).sub_ref(&h[i2].scale_poly(&qg));
            let (rem, q) = gb.reduce_with_transform(&s_vec);
            assert!(rem.is_zero(), "S-vector of a Gröbner basis must reduce to zero");
            // qf e_{i1} - qg e_{i2} - q expresses a syzygy of h
            let mut entries = vec![ZPoly::zero(); r];
            entries[i1] = entries[i1].add_ref(&qf);
            entries[i2] = entries[i2].sub_ref(&qg);
            for (idx, qi) in q.iter().enumerate() {
                entries[idx] = entries[idx].sub_ref(qi);
            }
            gens.push(pull_back(&ZxVector::new(entries), &log, s));
        }
    }

    // columns of I - A*B: A = transform (h over columns), B = division of
    // each original column by the basis
    for (i, c) in columns.iter().enumerate() {
        let (rem, q) = gb.reduce_with_transform(c);
        assert!(rem.is_zero(), "generator must lie in its own lattice");
        let mut acc = ZxVector::unit(s, i);
        for (k, qk) in q.iter().enumerate() {
            if qk.is_zero() {
                continue;
            }
            let ak = ZxVector::new(log.coeffs[k].clone());
            acc = acc.sub_ref(&ak.scale_poly(qk));
        }
        if !acc.is_zero() {
            gens.push(acc);
        }
    }

    let (kernel_gb, _) = groebner(s, &gens);
    let basis: Vec<ZxVector> = kernel_gb.columns().to_vec();
    debug_assert!(
        kernel_gb.blocks().iter().all(|b| b.len == 1),
        "kernel lattice must be free"
    );
    debug_assert!(basis.iter().all(|u| {
        let mut acc = ZxVector::zero(n);
        for (c, ui) in columns.iter().zip(u.entries()) {
            acc = acc.add_ref(&c.scale_poly(ui));
        }
        acc.is_zero()
    }));
    basis
}

fn pull_back(u: &ZxVector, log: &super::groebner::TransformLog, s: usize) -> ZxVector {
    // u is a syzygy of the basis columns; map through the transform to a
    // syzygy of the original generators
    let mut acc = ZxVector::zero(s);
    for (k, uk) in u.entries().iter().enumerate() {
        if uk.is_zero() {
            continue;
        }
        let ak = ZxVector::new(log.coeffs[k].clone());
        acc = acc.add_ref(&ak.scale_poly(uk));
    }
    acc
}

/// Free basis of the orthogonal complement L^C = ker(A^t) for the lattice
/// with representation matrix A (basis columns).
pub fn orth_complement(basis: &GhnfBasis) -> Vec<ZxVector> {
    let n = basis.n();
    let s = basis.columns().len();
    if s == 0 {
        // complement of the zero lattice is everything
        return (0..n).map(|i| ZxVector::unit(n, i)).collect();
    }
    // columns of A^t are the rows of A
    let rows: Vec<ZxVector> = (0..n)
        .map(|i| {
            ZxVector::new(
                basis
                    .columns()
                    .iter()
                    .map(|c| c.entry(i).clone())
                    .collect(),
            )
        })
        .collect();
    kernel_syzygy(s, &rows)
}
