//! Generalized Hermite normal forms: the block shape of a reduced Gröbner
//! basis of a Z[x] lattice.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactring::ZPoly;

use super::grem::{grem, s_vector};
use super::vector::ZxVector;

/// One block of a generalized Hermite normal form: the consecutive columns
/// sharing a pivot row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// 0-based pivot row.
    pub pivot_row: usize,
    /// Index of the first column of the block.
    pub start: usize,
    /// Number of columns in the block.
    pub len: usize,
}

/// An ordered reduced Gröbner basis of a Z[x] lattice, with its block
/// structure. Columns ascend strictly in the monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct GhnfBasis {
    n: usize,
    columns: Vec<ZxVector>,
    blocks: Vec<Block>,
}

impl std::fmt::Debug for GhnfBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GhnfBasis{:?}", self.columns)
    }
}

/// Why a matrix fails to be a generalized Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GhnfViolation {
    /// Zero column, non-normal column, or columns out of ascending order.
    Shape(String),
    /// Pivot degrees within a block not strictly increasing.
    Cond1 { block: usize },
    /// Leading coefficients within a block not a divisibility chain.
    Cond2 { block: usize },
    /// An in-block S-vector does not reduce to zero.
    Cond3 { block: usize, pair: (usize, usize) },
    /// A column is not G-reduced with respect to the others.
    Cond4 { column: usize },
}

impl std::fmt::Display for GhnfViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GhnfViolation::Shape(s) => write!(f, "shape: {}", s),
            GhnfViolation::Cond1 { block } => {
                write!(f, "condition 1 fails in block {}", block + 1)
            }
            GhnfViolation::Cond2 { block } => {
                write!(f, "condition 2 fails in block {}", block + 1)
            }
            GhnfViolation::Cond3 { block, pair } => write!(
                f,
                "condition 3 fails in block {} for columns {} and {}",
                block + 1,
                pair.0 + 1,
                pair.1 + 1
            ),
            GhnfViolation::Cond4 { column } => {
                write!(f, "condition 4 fails at column {}", column + 1)
            }
        }
    }
}

/// Check the four conditions; Ok(()) means the columns form a generalized
/// Hermite normal form (equivalently, a reduced Gröbner basis).
pub fn is_ghnf(n: usize, columns: &[ZxVector]) -> Result<(), GhnfViolation> {
    for (i, c) in columns.iter().enumerate() {
        if c.n() != n {
            return Err(GhnfViolation::Shape(format!(
                "column {} has {} rows, expected {}",
                i + 1,
                c.n(),
                n
            )));
        }
        if c.is_zero() {
            return Err(GhnfViolation::Shape(format!("column {} is zero", i + 1)));
        }
        if !c.is_normal() {
            return Err(GhnfViolation::Shape(format!(
                "column {} is not a normal vector",
                i + 1
            )));
        }
    }
    for w in columns.windows(2) {
        if w[0].cmp_order(&w[1]) != std::cmp::Ordering::Less {
            return Err(GhnfViolation::Shape(
                "columns are not strictly ascending".into(),
            ));
        }
    }
    let blocks = compute_blocks(columns);
    for (bi, b) in blocks.iter().enumerate() {
        let cols = &columns[b.start..b.start + b.len];
        let degs: Vec<usize> = cols
            .iter()
            .map(|c| c.entry(b.pivot_row).degree().unwrap())
            .collect();
        if degs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GhnfViolation::Cond1 { block: bi });
        }
        let lcs: Vec<BigInt> = cols
            .iter()
            .map(|c| c.entry(b.pivot_row).lc().unwrap().clone())
            .collect();
        for w in lcs.windows(2) {
            if !(&w[0] % &w[1]).is_zero() {
                return Err(GhnfViolation::Cond2 { block: bi });
            }
        }
        for j1 in 0..b.len {
            for j2 in j1 + 1..b.len {
                let s = s_vector(&cols[j1], &cols[j2]);
                if !grem(&s, columns).is_zero() {
                    return Err(GhnfViolation::Cond3 {
                        block: bi,
                        pair: (b.start + j1, b.start + j2),
                    });
                }
            }
        }
    }
    for k in 0..columns.len() {
        let others: Vec<ZxVector> = columns
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, c)| c.clone())
            .collect();
        if super::grem::is_reducible(&columns[k], &others) {
            return Err(GhnfViolation::Cond4 { column: k });
        }
    }
    Ok(())
}

/// The finite lower part of the extension of any block-shaped column set;
/// see `GhnfBasis::extension_prefix`.
pub fn extension_prefix_of(columns: &[ZxVector]) -> Vec<ZxVector> {
    let mut out = Vec::new();
    for b in &compute_blocks(columns) {
        for k in 0..b.len.saturating_sub(1) {
            let cur = &columns[b.start + k];
            let d_cur = cur.entry(b.pivot_row).degree().unwrap();
            let d_next = columns[b.start + k + 1]
                .entry(b.pivot_row)
                .degree()
                .unwrap();
            for j in 0..d_next - d_cur {
                out.push(cur.mul_xk(j));
            }
        }
    }
    out
}

fn compute_blocks(columns: &[ZxVector]) -> Vec<Block> {
    let mut blocks: Vec<Block> = Vec::new();
    for (i, c) in columns.iter().enumerate() {
        let pos = c.leading_term().expect("nonzero column").pos;
        match blocks.last_mut() {
            Some(b) if b.pivot_row == pos => b.len += 1,
            _ => blocks.push(Block {
                pivot_row: pos,
                start: i,
                len: 1,
            }),
        }
    }
    blocks
}

impl GhnfBasis {
    /// Wrap columns already known to be a reduced Gröbner basis in
    /// ascending order (the output of `groebner`).
    pub(crate) fn from_reduced_columns(n: usize, columns: Vec<ZxVector>) -> Self {
        let blocks = compute_blocks(&columns);
        GhnfBasis { n, columns, blocks }
    }

    /// Validate external columns and build the basis.
    pub fn try_new(n: usize, columns: Vec<ZxVector>) -> Result<Self, GhnfViolation> {
        is_ghnf(n, &columns)?;
        Ok(Self::from_reduced_columns(n, columns))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[ZxVector] {
        &self.columns
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Number of distinct pivot rows.
    pub fn rank(&self) -> usize {
        self.blocks.len()
    }

    pub fn validate(&self) -> Result<(), GhnfViolation> {
        is_ghnf(self.n, &self.columns)
    }

    /// Membership test: f is in the lattice iff its normal form is zero.
    pub fn contains(&self, f: &ZxVector) -> bool {
        grem(f, &self.columns).is_zero()
    }

    pub fn reduce(&self, f: &ZxVector) -> ZxVector {
        grem(f, &self.columns)
    }

    /// Reduction with the quotients over the basis columns.
    pub fn reduce_with_transform(&self, f: &ZxVector) -> (ZxVector, Vec<ZPoly>) {
        super::grem::grem_with_transform(f, &self.columns)
    }

    /// The finite lower part of the extension: for each block and each
    /// non-final column, the shifts x^j * c for j up to the gap between
    /// consecutive pivot degrees.
    pub fn extension_prefix(&self) -> Vec<ZxVector> {
        extension_prefix_of(&self.columns)
    }

    /// Pivot entry (at the pivot row) of column j of block b.
    pub fn pivot_poly(&self, b: &Block, k: usize) -> &ZPoly {
        self.columns[b.start + k].entry(b.pivot_row)
    }

    /// Equality as lattices (columns are canonical).
    pub fn same_lattice(&self, other: &GhnfBasis) -> bool {
        self.n == other.n && self.columns == other.columns
    }
}
