//! Buchberger completion over Z[x] with transform tracking.

use crate::exactring::ZPoly;

use super::ghnf::GhnfBasis;
use super::grem::{gcd_combination_parts, grem_with_transform, s_vector_parts};
use super::vector::ZxVector;

/// For each output column, its expression as a Z[x] combination of the
/// original generators.
#[derive(Clone, Debug)]
pub struct TransformLog {
    /// coeffs[k][i] is the coefficient of input generator i in output k.
    pub coeffs: Vec<Vec<ZPoly>>,
}

impl TransformLog {
    /// Reconstruct output column k from the input generators.
    pub fn apply(&self, gens: &[ZxVector], k: usize, n: usize) -> ZxVector {
        let mut acc = ZxVector::zero(n);
        for (g, c) in gens.iter().zip(&self.coeffs[k]) {
            acc = acc.add_ref(&g.scale_poly(c));
        }
        acc
    }
}

struct Tracked {
    vec: ZxVector,
    log: Vec<ZPoly>,
}

impl Tracked {
    fn normalize(&mut self) {
        if !self.vec.is_normal() && !self.vec.is_zero() {
            self.vec = self.vec.neg_ref();
            for c in &mut self.log {
                *c = c.neg_ref();
            }
        }
    }
}

fn combine(a: &Tracked, qa: &ZPoly, b: &Tracked, qb_neg: &ZPoly) -> Tracked {
    // qa * a - qb_neg * b, with logs
    let vec = a.vec.scale_poly(qa).sub_ref(&b.vec.scale_poly(qb_neg));
    let log = a
        .log
        .iter()
        .zip(&b.log)
        .map(|(x, y)| x.mul_ref(qa).sub_ref(&y.mul_ref(qb_neg)))
        .collect();
    Tracked { vec, log }
}

fn reduce_tracked(t: &Tracked, basis: &[Tracked]) -> Tracked {
    let vecs: Vec<ZxVector> = basis.iter().map(|b| b.vec.clone()).collect();
    let (r, q) = grem_with_transform(&t.vec, &vecs);
    let mut log = t.log.clone();
    for (b, qi) in basis.iter().zip(&q) {
        if qi.is_zero() {
            continue;
        }
        for (l, bl) in log.iter_mut().zip(&b.log) {
            *l = l.sub_ref(&bl.mul_ref(qi));
        }
    }
    let mut out = Tracked { vec: r, log };
    out.normalize();
    out
}

/// Reduced Gröbner basis of the lattice generated by `gens` in Z[x]^n, in
/// generalized Hermite normal form column order, with the transform
/// expressing every output column over the input generators.
pub fn groebner(n: usize, gens: &[ZxVector]) -> (GhnfBasis, TransformLog) {
    let s = gens.len();
    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        assert_eq!(g.n(), n, "mixed ambient dimensions");
        if g.is_zero() {
            continue;
        }
        let mut log = vec![ZPoly::zero(); s];
        log[i] = ZPoly::one();
        let mut t = Tracked {
            vec: g.clone(),
            log,
        };
        t.normalize();
        basis.push(t);
    }

    let mut rounds = 0usize;
    loop {
        rounds += 1;
        assert!(rounds < 10_000, "Buchberger loop failed to stabilize");
        basis.sort_by(|a, b| a.vec.cmp_order(&b.vec));
        basis.dedup_by(|a, b| a.vec == b.vec);

        // pair closure: S-vectors and gcd combinations
        let mut additions: Vec<Tracked> = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let mut candidates: Vec<Tracked> = Vec::new();
                if let Some((qf, qg)) = s_vector_parts(&basis[i].vec, &basis[j].vec) {
                    candidates.push(combine(&basis[i], &qf, &basis[j], &qg));
                }
                if let Some((qf, qg)) = gcd_combination_parts(&basis[i].vec, &basis[j].vec) {
                    candidates.push(combine(&basis[i], &qf, &basis[j], &qg.neg_ref()));
                }
                for cand in candidates {
                    let red = reduce_tracked(&cand, &basis);
                    if !red.vec.is_zero() {
                        additions.push(red);
                    }
                }
            }
        }
        if !additions.is_empty() {
            // reduce additions against each other as they join
            for a in additions {
                let red = reduce_tracked(&a, &basis);
                if !red.vec.is_zero() {
                    basis.push(red);
                }
            }
            continue;
        }

        // interreduce: each element must be G-reduced w.r.t. the others
        let mut changed = false;
        for k in 0..basis.len() {
            let rest: Vec<Tracked> = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, t)| Tracked {
                    vec: t.vec.clone(),
                    log: t.log.clone(),
                })
                .collect();
            let red = reduce_tracked(&basis[k], &rest);
            if red.vec != basis[k].vec {
                changed = true;
                basis[k] = red;
                break;
            }
        }
        if changed {
            basis.retain(|t| !t.vec.is_zero());
            continue;
        }
        break;
    }

    basis.sort_by(|a, b| a.vec.cmp_order(&b.vec));
    let columns: Vec<ZxVector> = basis.iter().map(|t| t.vec.clone()).collect();
    let log = TransformLog {
        coeffs: basis.iter().map(|t| t.log.clone()).collect(),
    };
    debug_assert!({
        (0..columns.len()).all(|k| log.apply(gens, k, n) == columns[k])
    });
    let ghnf = GhnfBasis::from_reduced_columns(n, columns);
    debug_assert!(ghnf.validate().is_ok(), "groebner output failed GHNF check");
    (ghnf, log)
}
