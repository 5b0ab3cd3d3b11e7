//! Exact univariate polynomial arithmetic over Z, Q, Z_p, and Q[x]/(p(x)),
//! column Hermite normal forms and kernels over these domains, and integer
//! and polynomial factorization. This is the PID/field substrate the
//! lattice algorithms call into.

pub mod factor;
pub mod mat;
pub mod poly;
pub mod primes;
pub mod ring;

pub use factor::{factor_over_q, factor_over_q_capped, squarefree_decomposition};
pub use mat::{hnf, kernel, rank, reduce_by_hnf, Hnf, Mat};
pub use poly::{fppoly_lift, qpoly_clear_denominators, zpoly_mod_p, zpoly_to_q, Poly, ZPoly};
pub use primes::{distinct_primes, is_prime_u64, prime_factors};
pub use ring::{EuclideanRing, Field, FpField, IntRing, PolyRing, QuotField, Rat, RatField, Ring};

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::from_ints(c)
    }

    #[test]
    fn poly_mul_difference_of_squares() {
        let f = zp(&[1, 1]).mul_ref(&zp(&[-1, 1]));
        assert_eq!(f, zp(&[-1, 0, 1]));
    }

    #[test]
    fn primitive_part_removes_content() {
        assert_eq!(zp(&[0, 3, 3]).primitive_part(), zp(&[0, 1, 1]));
    }

    #[test]
    fn gcd_mod_two() {
        // 2x^2+1 reduces to 1 mod 2, so gcd(2x^2+1, x) = 1 over Z_2[x]
        let fp = FpField::new(2);
        let ring = PolyRing::new(fp);
        let a = zpoly_mod_p(&zp(&[1, 0, 2]), &fp);
        let b = zpoly_mod_p(&zp(&[0, 1]), &fp);
        let (g, _, _) = ring.gcd_bezout(&a, &b);
        assert_eq!(g, ring.one());
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let ring = IntRing;
        let id = Mat::identity(&ring, 3);
        let res = hnf(&ring, &id);
        assert_eq!(res.h, id);
        assert_eq!(res.u, id);
        assert_eq!(res.zero_cols, 0);
    }

    #[test]
    fn hnf_collapses_duplicate_columns() {
        let ring = IntRing;
        let two = BigInt::from(2);
        let z = BigInt::from(0);
        let a = Mat::from_columns(
            2,
            vec![
                vec![two.clone(), two.clone()],
                vec![two.clone(), two.clone()],
                vec![z.clone(), z.clone()],
            ],
        );
        let res = hnf(&ring, &a);
        assert_eq!(res.zero_cols, 2);
        assert_eq!(res.h.col(2), &[two.clone(), two]);
        // h = a * u exactly
        assert_eq!(a.mat_mul(&ring, &res.u), res.h);
    }

    #[test]
    fn hnf_unit_pivot_over_qx() {
        // columns {x+1, 1} over Q[x]: the unit absorbs everything
        let qx = PolyRing::new(RatField);
        let a = Mat::from_columns(
            1,
            vec![vec![zpoly_to_q(&zp(&[1, 1]))], vec![zpoly_to_q(&zp(&[1]))]],
        );
        let res = hnf(&qx, &a);
        assert_eq!(res.zero_cols, 1);
        assert_eq!(res.h.col(1)[0], zpoly_to_q(&zp(&[1])));
    }

    #[test]
    fn kernel_paper_integer_example() {
        // kernel of [[2,1,1],[2,1,1],[0,0,0]] over Z is generated by
        // (0,-1,1) and (1,-2,0)
        let ring = IntRing;
        let col = |v: [i64; 3]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let a = Mat::from_columns(3, vec![col([2, 2, 0]), col([1, 1, 0]), col([1, 1, 0])]);
        let mut basis = kernel(&ring, &a);
        basis.sort();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(a.mul_vec(&ring, v).iter().all(|e| e == &BigInt::from(0)));
        }
        // the basis spans (0,-1,1): check by solving small combinations
        let target = col([0, -1, 1]);
        let found = (-3i64..=3).any(|s| {
            (-3i64..=3).any(|t| {
                let mut acc = vec![BigInt::from(0); 3];
                for i in 0..3 {
                    acc[i] = &basis[0][i] * BigInt::from(s) + &basis[1][i] * BigInt::from(t);
                }
                acc == target
            })
        });
        assert!(found);
    }

    #[test]
    fn kernel_over_quotient_field() {
        // [[x, x^2+1],[2x^2+1, 0],[0, 4x^2+2]] over Q[x]/(2x^2+1)
        // has kernel spanned by (-1, 2x)
        let quot = QuotField::new(zpoly_to_q(&zp(&[1, 0, 2])));
        let red = |p: &[i64]| quot.reduce(&zpoly_to_q(&zp(p)));
        let a = Mat::from_columns(
            3,
            vec![
                vec![red(&[0, 1]), red(&[1, 0, 2]), red(&[0])],
                vec![red(&[1, 0, 1]), red(&[0]), red(&[2, 0, 4])],
            ],
        );
        let basis = kernel(&quot, &a);
        assert_eq!(basis.len(), 1);
        // normalize: scale so the first entry is -1
        let v = &basis[0];
        let scale = quot.mul(&quot.neg(&quot.one()), &quot.inv(&v[0]));
        let v0 = quot.mul(&v[0], &scale);
        let v1 = quot.mul(&v[1], &scale);
        assert_eq!(v0, red(&[-1]));
        assert_eq!(v1, red(&[0, 2]));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let ring = IntRing;
        let id = Mat::identity(&ring, 4);
        assert!(kernel(&ring, &id).is_empty());
    }

    #[test]
    fn exact_division_over_z() {
        let f = zp(&[-1, 0, 1]);
        assert_eq!(f.div_exact(&zp(&[1, 1])), Some(zp(&[-1, 1])));
        assert_eq!(f.div_exact(&zp(&[2, 1])), None);
    }
}
