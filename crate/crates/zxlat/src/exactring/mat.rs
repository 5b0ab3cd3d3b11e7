//! Matrices over an exact ring, column Hermite normal form, kernels.

use num_bigint::BigUint;

use super::ring::{EuclideanRing, Ring};

/// Column-major rectangular matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<E> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn from_columns(rows: usize, columns: Vec<Vec<E>>) -> Self {
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for c in &columns {
            assert_eq!(c.len(), rows, "ragged column");
            data.extend(c.iter().cloned());
        }
        Mat { rows, cols, data }
    }

    pub fn fill(rows: usize, cols: usize, e: E) -> Self {
        Mat {
            rows,
            cols,
            data: vec![e; rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &E {
        &self.data[c * self.rows + r]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut E {
        &mut self.data[c * self.rows + r]
    }

    pub fn col(&self, c: usize) -> &[E] {
        &self.data[c * self.rows..(c + 1) * self.rows]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[E]> {
        (0..self.cols).map(move |c| self.col(c))
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(a * self.rows + r, b * self.rows + r);
        }
    }

    /// Transpose (rows become columns).
    pub fn transpose(&self) -> Mat<E> {
        let mut cols = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            cols.push((0..self.cols).map(|c| self.at(r, c).clone()).collect());
        }
        Mat::from_columns(self.cols, cols)
    }
}

impl<E: Clone> Mat<E> {
    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut m = Mat::fill(n, n, ring.zero());
        for i in 0..n {
            *m.at_mut(i, i) = ring.one();
        }
        m
    }

    /// col_a += q * col_b
    fn col_addmul<R: Ring<Elem = E>>(&mut self, ring: &R, a: usize, q: &E, b: usize) {
        for r in 0..self.rows {
            let t = ring.mul(q, self.at(r, b));
            *self.at_mut(r, a) = ring.add(self.at(r, a), &t);
        }
    }

    fn col_scale<R: Ring<Elem = E>>(&mut self, ring: &R, a: usize, u: &E) {
        for r in 0..self.rows {
            *self.at_mut(r, a) = ring.mul(u, self.at(r, a));
        }
    }

    pub fn mat_mul<R: Ring<Elem = E>>(&self, ring: &R, rhs: &Mat<E>) -> Mat<E> {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::fill(self.rows, rhs.cols, ring.zero());
        for c in 0..rhs.cols {
            for k in 0..self.cols {
                if ring.is_zero(rhs.at(k, c)) {
                    continue;
                }
                for r in 0..self.rows {
                    let t = ring.mul(self.at(r, k), rhs.at(k, c));
                    *out.at_mut(r, c) = ring.add(out.at(r, c), &t);
                }
            }
        }
        out
    }

    pub fn mul_vec<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![ring.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if ring.is_zero(x) {
                continue;
            }
            for r in 0..self.rows {
                let t = ring.mul(self.at(r, k), x);
                out[r] = ring.add(&out[r], &t);
            }
        }
        out
    }
}

/// Result of a column Hermite reduction: `h = a * u` with `u` invertible.
pub struct Hnf<E> {
    pub h: Mat<E>,
    pub u: Mat<E>,
    /// Number of leading zero columns of `h`.
    pub zero_cols: usize,
    /// (row, col) of each pivot, in placement order.
    pub pivots: Vec<(usize, usize)>,
}

/// Column Hermite normal form over a Euclidean ring.
///
/// Pivot entries are canonical (positive / monic), entries in the pivot row
/// of columns right of the pivot are reduced, and zero columns come first.
pub fn hnf<R: EuclideanRing>(ring: &R, a: &Mat<R::Elem>) -> Hnf<R::Elem> {
    let mut h = a.clone();
    let mut u = Mat::identity(ring, a.cols);
    let mut cursor = a.cols; // columns at index >= cursor hold placed pivots
    let mut pivots = Vec::new();

    for row in 0..a.rows {
        if cursor == 0 {
            break;
        }
        // Euclid among columns 0..cursor on this row until one nonzero remains.
        loop {
            let mut best: Option<(usize, BigUint)> = None;
            let mut live = 0usize;
            for c in 0..cursor {
                let e = h.at(row, c);
                if ring.is_zero(e) {
                    continue;
                }
                live += 1;
                let n = ring.norm(e);
                if best.as_ref().map_or(true, |(_, bn)| n < *bn) {
                    best = Some((c, n));
                }
            }
            let Some((pc, _)) = best else { break };
            if live == 1 {
                // place pivot at cursor-1
                cursor -= 1;
                h.swap_cols(pc, cursor);
                u.swap_cols(pc, cursor);
                let unit = ring.normalizing_unit(h.at(row, cursor));
                if unit != ring.one() {
                    h.col_scale(ring, cursor, &unit);
                    u.col_scale(ring, cursor, &unit);
                }
                // reduce this row in previously placed pivot columns
                let pv = h.at(row, cursor).clone();
                for c in cursor + 1..a.cols {
                    if ring.is_zero(h.at(row, c)) {
                        continue;
                    }
                    let (q, _) = ring.divrem(h.at(row, c), &pv);
                    if !ring.is_zero(&q) {
                        let nq = ring.neg(&q);
                        h.col_addmul(ring, c, &nq, cursor);
                        u.col_addmul(ring, c, &nq, cursor);
                    }
                }
                pivots.push((row, cursor));
                break;
            }
            // eliminate all other live columns against the smallest
            let pe = h.at(row, pc).clone();
            for c in 0..cursor {
                if c == pc || ring.is_zero(h.at(row, c)) {
                    continue;
                }
                let (q, _) = ring.divrem(h.at(row, c), &pe);
                if !ring.is_zero(&q) {
                    let nq = ring.neg(&q);
                    h.col_addmul(ring, c, &nq, pc);
                    u.col_addmul(ring, c, &nq, pc);
                }
            }
        }
    }

    // Pivots were placed right to left; reverse the pivot block so pivot
    // rows ascend with column index (identity maps to identity).
    let k = a.cols - cursor;
    for i in 0..k / 2 {
        let (l, r) = (cursor + i, a.cols - 1 - i);
        h.swap_cols(l, r);
        u.swap_cols(l, r);
    }
    for (_, c) in pivots.iter_mut() {
        *c = cursor + (a.cols - 1 - *c);
    }
    pivots.sort();

    Hnf {
        h,
        u,
        zero_cols: cursor,
        pivots,
    }
}

/// Reduce a vector modulo the column span of a Hermite form: at each pivot
/// the target entry is replaced by its remainder. Returns the residue and
/// the quotient per column of `h`. The residue is zero iff the target lies
/// in the module.
pub fn reduce_by_hnf<R: EuclideanRing>(
    ring: &R,
    res: &Hnf<R::Elem>,
    target: &[R::Elem],
) -> (Vec<R::Elem>, Vec<R::Elem>) {
    let mut r = target.to_vec();
    let mut q = vec![ring.zero(); res.h.cols];
    for &(prow, pcol) in &res.pivots {
        if ring.is_zero(&r[prow]) {
            continue;
        }
        let (qq, _) = ring.divrem(&r[prow], res.h.at(prow, pcol));
        if ring.is_zero(&qq) {
            continue;
        }
        for row in 0..res.h.rows {
            let t = ring.mul(&qq, res.h.at(row, pcol));
            r[row] = ring.sub(&r[row], &t);
        }
        q[pcol] = qq;
    }
    (r, q)
}

/// Basis of `{ x | a x = 0 }` over the ring, one vector per returned entry.
///
/// Over Z this is a lattice basis; over a field the vectors are linearly
/// independent and span the nullspace.
pub fn kernel<R: EuclideanRing>(ring: &R, a: &Mat<R::Elem>) -> Vec<Vec<R::Elem>> {
    let res = hnf(ring, a);
    (0..res.zero_cols).map(|c| res.u.col(c).to_vec()).collect()
}

/// Rank over the fraction field (number of pivots of the Hermite form).
pub fn rank<R: EuclideanRing>(ring: &R, a: &Mat<R::Elem>) -> usize {
    hnf(ring, a).pivots.len()
}
