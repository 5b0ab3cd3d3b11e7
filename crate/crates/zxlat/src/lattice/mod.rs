//! Z[x] lattices in Z[x]^n: the monomial order, G-reduction, Buchberger
//! completion to a reduced Gröbner basis in generalized Hermite normal
//! form, free kernel (syzygy) bases, membership, extensions, and orthogonal
//! complements.

pub mod ghnf;
pub mod grem;
pub mod groebner;
pub mod oracle;
pub mod syzygy;
pub mod vector;

pub use ghnf::{extension_prefix_of, is_ghnf, Block, GhnfBasis, GhnfViolation};
pub use grem::{grem, grem_with_transform, s_vector, s_vector_parts};
pub use groebner::{groebner, TransformLog};
pub use oracle::{default_degree_cap, member_oracle, OracleAnswer};
pub use syzygy::{kernel_syzygy, orth_complement};
pub use vector::{zxvec, LatticeMonomial, ZxVector};

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    // Columns of the worked matrices
    fn m1() -> Vec<ZxVector> {
        vec![
            zxvec(&[&[0, 1], &[0]]),
            zxvec(&[&[2], &[2]]),
            zxvec(&[&[0], &[0, 1]]),
        ]
    }

    fn m2() -> Vec<ZxVector> {
        vec![
            zxvec(&[&[2], &[0]]),
            zxvec(&[&[-1, 1], &[0]]),
            zxvec(&[&[0], &[2]]),
            zxvec(&[&[0], &[-1, 1]]),
        ]
    }

    fn m3() -> Vec<ZxVector> {
        vec![
            zxvec(&[&[0, -1], &[2], &[0]]),
            zxvec(&[&[-1], &[0], &[2]]),
            zxvec(&[&[0], &[-1], &[0, 1]]),
        ]
    }

    #[test]
    fn leading_terms() {
        let f = zxvec(&[&[0, 1], &[1, 0, 2], &[0]]);
        let lt = f.leading_term().unwrap();
        assert_eq!((lt.pos, lt.exp, lt.coeff.clone()), (1, 2, BigInt::from(2)));

        let g = ZxVector::new(vec![
            crate::exactring::ZPoly::zero(),
            crate::exactring::ZPoly::from_ints(&[5]),
        ]);
        let lt = g.leading_term().unwrap();
        assert_eq!((lt.pos, lt.exp, lt.coeff.clone()), (1, 0, BigInt::from(5)));

        let h = zxvec(&[&[-2, 2, 1], &[0]]);
        let lt = h.leading_term().unwrap();
        assert_eq!((lt.pos, lt.exp, lt.coeff.clone()), (0, 2, BigInt::from(1)));
    }

    #[test]
    fn grem_examples() {
        // S(f2,f3) = (2x, 0) reduces to zero modulo M1
        let f = zxvec(&[&[0, 2], &[0]]);
        assert!(grem(&f, &m1()).is_zero());
        // empty basis leaves f unchanged
        assert_eq!(grem(&f, &[]), f);
        // 1 is not an integer multiple of 2
        let one = zxvec(&[&[1], &[0]]);
        let two = zxvec(&[&[2], &[0]]);
        assert_eq!(grem(&one, &[two]), one);
    }

    #[test]
    fn s_vector_examples() {
        // S((2,2), (0,x)) = x(2,2) - 2(0,x) = (2x, 0)
        let f2 = zxvec(&[&[2], &[2]]);
        let f3 = zxvec(&[&[0], &[0, 1]]);
        assert_eq!(s_vector(&f2, &f3), zxvec(&[&[0, 2], &[0]]));
        // distinct leading positions give zero
        let a = zxvec(&[&[1], &[0]]);
        let b = zxvec(&[&[0], &[1]]);
        assert!(s_vector(&a, &b).is_zero());
        // S(2, x-1) in Z[x]^1: lcm(2x^0, x) -> x*2 - 2*(x-1) = 2
        let c = zxvec(&[&[2]]);
        let d = zxvec(&[&[-1, 1]]);
        assert_eq!(s_vector(&c, &d), zxvec(&[&[2]]));
    }

    #[test]
    fn worked_matrices_are_ghnf() {
        assert!(is_ghnf(2, &m1()).is_ok());
        assert!(is_ghnf(2, &m2()).is_ok());
        assert!(is_ghnf(3, &m3()).is_ok());
    }

    #[test]
    fn one_row_violation() {
        // columns 2 and 4 in Z[x]^1: 4 is not G-reduced by 2
        let cols = vec![zxvec(&[&[2]]), zxvec(&[&[4]])];
        assert!(is_ghnf(1, &cols).is_err());
        assert!(is_ghnf(1, &[]).is_ok());
    }

    #[test]
    fn groebner_fixes_worked_matrices() {
        for (n, cols) in [(2, m1()), (2, m2()), (3, m3())] {
            let (gb, _) = groebner(n, &cols);
            assert_eq!(gb.columns(), &cols[..], "matrix changed under groebner");
        }
    }

    #[test]
    fn groebner_fixes_rank_one_sets() {
        let sets: Vec<Vec<ZxVector>> = vec![
            vec![zxvec(&[&[2]]), zxvec(&[&[0, 1]])],
            vec![
                zxvec(&[&[12]]),
                zxvec(&[&[6, 6]]),
                zxvec(&[&[0, 3, 3]]),
                zxvec(&[&[0, 0, 1, 1]]),
            ],
            vec![zxvec(&[&[3, 9]]), zxvec(&[&[1, 4, 3]])],
            vec![zxvec(&[&[2], &[0]]), zxvec(&[&[-1, 1], &[0]])],
        ];
        for cols in sets {
            let n = cols[0].n();
            let (gb, _) = groebner(n, &cols);
            assert_eq!(gb.columns(), &cols[..]);
        }
    }

    #[test]
    fn groebner_sign_normalizes() {
        let (gb, _) = groebner(2, &[zxvec(&[&[0], &[-3]])]);
        assert_eq!(gb.columns(), &[zxvec(&[&[0], &[3]])]);
    }

    #[test]
    fn groebner_empty_and_zero() {
        let (gb, _) = groebner(2, &[]);
        assert!(gb.is_empty());
        let (gb, _) = groebner(2, &[ZxVector::zero(2)]);
        assert!(gb.is_empty());
        assert_eq!(gb.rank(), 0);
    }

    #[test]
    fn transform_log_reproduces_columns() {
        let gens = vec![
            zxvec(&[&[2, 4], &[0, 2]]),
            zxvec(&[&[3], &[1, 1]]),
            zxvec(&[&[0, 0, 5], &[-2]]),
        ];
        let (gb, log) = groebner(2, &gens);
        for (k, col) in gb.columns().iter().enumerate() {
            assert_eq!(&log.apply(&gens, k, 2), col);
        }
    }

    #[test]
    fn rank_of_worked_matrices() {
        let (gb, _) = groebner(2, &m2());
        assert_eq!(gb.rank(), 2);
        // M3 is singular (its two right columns share pivot row 3), so the
        // lattice has two pivot rows; see the two-generator form of (M3)
        let (gb, _) = groebner(3, &m3());
        assert_eq!(gb.rank(), 2);
    }

    #[test]
    fn contains_examples() {
        let (gb, _) = groebner(2, &m1());
        assert!(gb.contains(&zxvec(&[&[0, 2], &[0]])));
        assert!(!gb.contains(&zxvec(&[&[1], &[0]])));
        assert!(gb.contains(&ZxVector::zero(2)));
    }

    #[test]
    fn kernel_syzygy_m1() {
        // ker(M1) is generated by (-2, x, -2), up to sign
        let basis = kernel_syzygy(2, &m1());
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        let expect = zxvec(&[&[-2], &[0, 1], &[-2]]);
        assert!(v == &expect || v == &expect.neg_ref());
    }

    #[test]
    fn kernel_syzygy_free_rank_one() {
        // (x-1) f1 - 2 f2 = 0 for f1 = (2,0), f2 = (x-1,0)
        let cols = vec![zxvec(&[&[2], &[0]]), zxvec(&[&[-1, 1], &[0]])];
        let basis = kernel_syzygy(2, &cols);
        assert_eq!(basis.len(), 1);
        let v = basis[0].normalized();
        // normalized leading entry positive: (x-1, -2) has leading pos 1
        let expect = zxvec(&[&[-1, 1], &[-2]]);
        assert!(v == expect || v == expect.neg_ref());
    }

    #[test]
    fn kernel_syzygy_identity_trivial() {
        let cols = vec![
            zxvec(&[&[1], &[0]]),
            zxvec(&[&[0], &[1]]),
        ];
        assert!(kernel_syzygy(2, &cols).is_empty());
    }

    #[test]
    fn member_oracle_agrees() {
        let gens = m1();
        let f = zxvec(&[&[0, 2], &[0]]);
        assert_eq!(member_oracle(2, &gens, &f, 4), OracleAnswer::True);
        let g = zxvec(&[&[1], &[0]]);
        assert_eq!(
            member_oracle(2, &[zxvec(&[&[2], &[0]])], &g, 8),
            OracleAnswer::False
        );
        assert_eq!(
            member_oracle(2, &gens, &ZxVector::zero(2), 4),
            OracleAnswer::True
        );
    }

    #[test]
    fn extension_prefix_worked_example() {
        // C = [[6,3x,0,3,2x],[0,0,6,3x,x^3+x]]
        let cols = vec![
            zxvec(&[&[6], &[0]]),
            zxvec(&[&[0, 3], &[0]]),
            zxvec(&[&[0], &[6]]),
            zxvec(&[&[3], &[0, 3]]),
            zxvec(&[&[0, 2], &[0, 1, 0, 1]]),
        ];
        let ext = extension_prefix_of(&cols);
        let expect = vec![
            zxvec(&[&[6], &[0]]),
            zxvec(&[&[0], &[6]]),
            zxvec(&[&[3], &[0, 3]]),
            zxvec(&[&[0, 3], &[0, 0, 3]]),
        ];
        assert_eq!(ext, expect);
    }

    #[test]
    fn extension_prefix_singleton_blocks_empty() {
        let gb = GhnfBasis::try_new(2, m2()[..0].to_vec()).unwrap();
        assert!(gb.extension_prefix().is_empty());
        let (gb, _) = groebner(2, &[zxvec(&[&[1], &[0]]), zxvec(&[&[0], &[1]])]);
        assert!(gb.extension_prefix().is_empty());
    }

    #[test]
    fn extension_prefix_one_row() {
        // [[2, x-1]]: gap deg(x-1) - deg(2) = 1, so just {2}
        let gb = GhnfBasis::try_new(1, vec![zxvec(&[&[2]]), zxvec(&[&[-1, 1]])]).unwrap();
        assert_eq!(gb.extension_prefix(), vec![zxvec(&[&[2]])]);
    }

    #[test]
    fn orth_complement_examples() {
        // L = ((1,-1)): complement is ((1,1))
        let (gb, _) = groebner(2, &[zxvec(&[&[-1], &[1]])]);
        let comp = orth_complement(&gb);
        assert_eq!(comp.len(), 1);
        let v = comp[0].normalized();
        assert_eq!(v, zxvec(&[&[1], &[1]]));

        // L = Z[x]^2: complement is empty
        let (gb, _) = groebner(2, &[zxvec(&[&[1], &[0]]), zxvec(&[&[0], &[1]])]);
        assert!(orth_complement(&gb).is_empty());
    }

    #[test]
    fn orth_complement_toric_pair() {
        // L = ((1-x,2,0,0),(0,0,1-x,2)): complement spanned by rows of M2
        let cols = vec![
            zxvec(&[&[1, -1], &[2], &[0], &[0]]),
            zxvec(&[&[0], &[0], &[1, -1], &[2]]),
        ];
        let (gb, _) = groebner(4, &cols);
        let comp = orth_complement(&gb);
        assert_eq!(comp.len(), 2);
        // each complement vector is orthogonal to both generators
        for v in &comp {
            for c in gb.columns() {
                let mut dot = crate::exactring::ZPoly::zero();
                for (a, b) in v.entries().iter().zip(c.entries()) {
                    dot = dot.add_ref(&a.mul_ref(b));
                }
                assert!(dot.is_zero());
            }
        }
        // and the complement lattice equals the one generated by M2^t rows
        let m2t = vec![
            zxvec(&[&[2], &[-1, 1], &[0], &[0]]),
            zxvec(&[&[0], &[0], &[2], &[-1, 1]]),
        ];
        let (a, _) = groebner(4, &comp);
        let (b, _) = groebner(4, &m2t);
        assert!(a.same_lattice(&b));
    }
}
