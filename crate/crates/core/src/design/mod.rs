//! Block designs: validation of `(v,b,r,k,λ)` and `(r,λ)` designs, incidence
//! matrices, and the replication and Steiner-triple-system generators.

pub(crate) mod io;
mod sts;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::binary::BinaryMatrix;
use crate::linalg::IntMatrix;

pub use io::{parse_block_list, parse_columns, parse_incidence};
pub use sts::sts;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DesignError {
    #[error("a design needs at least one point")]
    NoPoints,
    #[error("block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("block {block} contains point {point}, outside 1..={v}")]
    PointOutOfRange { block: usize, point: u32, v: usize },
    #[error("block {block} repeats point {point}")]
    DuplicatePoint { block: usize, point: u32 },
    #[error("block {block} has {size} points, expected {expected}")]
    NonUniformBlockSize { block: usize, size: usize, expected: usize },
    #[error("points {e} and {f} lie together in {count} blocks, expected {expected}")]
    UnbalancedPair { e: u32, f: u32, count: usize, expected: usize },
    #[error("point {point} lies in {count} blocks, expected {expected}")]
    NonConstantReplication { point: u32, count: usize, expected: usize },
    #[error("pairs of points are covered zero times (λ = 0)")]
    LambdaZero,
    #[error("Gram matrix entry ({i},{j}) disagrees with λJ + (r−λ)I")]
    GramMismatch { i: usize, j: usize },
    #[error("design is trivial (k = v)")]
    TrivialDesign,
    #[error("no Steiner triple system on {0} points (needs v ≡ 1, 3 mod 6)")]
    NoStsExists(usize),
    #[error("v = {0} is too small for this construction")]
    TooSmall(usize),
    #[error("expected λ = 1, found λ = {0}")]
    NotLambdaOne(u64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A block: strictly increasing 1-based point indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block(Vec<u32>);

impl Block {
    pub fn points(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, point: u32) -> bool {
        self.0.binary_search(&point).is_ok()
    }

    /// Size of the intersection with another block (both are sorted).
    pub fn meet(&self, other: &Block) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A multiset of blocks over the points `1..=v`, in input order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Design {
    v: usize,
    blocks: Vec<Block>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DesignParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.v, self.b, self.r, self.k, self.lambda)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RlParams {
    pub r: u64,
    pub lambda: u64,
}

impl fmt::Display for RlParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.lambda)
    }
}

/// Anything carrying a replication number and a pair index.
pub trait PairIndex {
    fn replication(&self) -> u64;
    fn pair_index(&self) -> u64;
}

impl PairIndex for DesignParams {
    fn replication(&self) -> u64 {
        self.r
    }
    fn pair_index(&self) -> u64 {
        self.lambda
    }
}

impl PairIndex for RlParams {
    fn replication(&self) -> u64 {
        self.r
    }
    fn pair_index(&self) -> u64 {
        self.lambda
    }
}

impl From<DesignParams> for RlParams {
    fn from(p: DesignParams) -> Self {
        RlParams {
            r: p.r,
            lambda: p.lambda,
        }
    }
}

/// The incidence matrix is `v × b`, with `(i, j)` set iff point `i+1` lies in block `j`.
pub type IncidenceMatrix = BinaryMatrix;

impl Design {
    /// Builds a design, sorting each block and rejecting malformed input.
    pub fn new(v: usize, blocks: Vec<Vec<u32>>) -> Result<Self, DesignError> {
        if v == 0 {
            return Err(DesignError::NoPoints);
        }
        let mut out = Vec::with_capacity(blocks.len());
        for (idx, mut pts) in blocks.into_iter().enumerate() {
            if pts.is_empty() {
                return Err(DesignError::EmptyBlock { block: idx + 1 });
            }
            pts.sort_unstable();
            if let Some(w) = pts.windows(2).find(|w| w[0] == w[1]) {
                return Err(DesignError::DuplicatePoint {
                    block: idx + 1,
                    point: w[0],
                });
            }
            if let Some(&p) = pts.iter().find(|&&p| p == 0 || p as usize > v) {
                return Err(DesignError::PointOutOfRange {
                    block: idx + 1,
                    point: p,
                    v,
                });
            }
            out.push(Block(pts));
        }
        Ok(Design { v, blocks: out })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    fn replication_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.v];
        for blk in &self.blocks {
            for &p in blk.points() {
                counts[p as usize - 1] += 1;
            }
        }
        counts
    }

    /// Pair coverage counts, upper triangle `e < f` (0-based), row-major.
    fn pair_counts(&self) -> Vec<usize> {
        let v = self.v;
        let mut counts = vec![0usize; v * v];
        for blk in &self.blocks {
            let pts = blk.points();
            for (i, &e) in pts.iter().enumerate() {
                for &f in &pts[i + 1..] {
                    counts[(e as usize - 1) * v + (f as usize - 1)] += 1;
                }
            }
        }
        counts
    }

    /// The common pair coverage, or the first pair that breaks it.
    fn check_pairs(&self) -> Result<u64, DesignError> {
        let v = self.v;
        if v < 2 {
            return Err(DesignError::LambdaZero);
        }
        let counts = self.pair_counts();
        let expected = counts[1];
        for e in 0..v {
            for f in e + 1..v {
                let c = counts[e * v + f];
                if c != expected {
                    return Err(DesignError::UnbalancedPair {
                        e: e as u32 + 1,
                        f: f as u32 + 1,
                        count: c,
                        expected,
                    });
                }
            }
        }
        if expected == 0 {
            return Err(DesignError::LambdaZero);
        }
        Ok(expected as u64)
    }

    fn check_replication(&self) -> Result<u64, DesignError> {
        let counts = self.replication_counts();
        let expected = counts[0];
        if let Some((i, &c)) = counts.iter().enumerate().find(|(_, &c)| c != expected) {
            return Err(DesignError::NonConstantReplication {
                point: i as u32 + 1,
                count: c,
                expected,
            });
        }
        Ok(expected as u64)
    }

    /// Validates a `(v,b,r,k,λ)`-design.
    pub fn validate_uniform(&self) -> Result<DesignParams, DesignError> {
        let k = self.blocks.first().map_or(0, Block::len);
        if let Some((i, blk)) = self.blocks.iter().enumerate().find(|(_, b)| b.len() != k) {
            return Err(DesignError::NonUniformBlockSize {
                block: i + 1,
                size: blk.len(),
                expected: k,
            });
        }
        let lambda = self.check_pairs()?;
        let r = self.check_replication()?;
        let params = DesignParams {
            v: self.v as u64,
            b: self.b() as u64,
            r,
            k: k as u64,
            lambda,
        };
        debug_assert_eq!(params.r * (params.k - 1), params.lambda * (params.v - 1));
        debug_assert_eq!(params.b * params.k, params.v * params.r);
        Ok(params)
    }

    /// Validates an `(r,λ)`-design: constant pair coverage and constant replication,
    /// with block sizes free.
    pub fn validate_rl(&self) -> Result<RlParams, DesignError> {
        let lambda = self.check_pairs()?;
        let r = self.check_replication()?;
        Ok(RlParams { r, lambda })
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut m = BinaryMatrix::zeros(self.v, self.b());
        for (j, blk) in self.blocks.iter().enumerate() {
            for &p in blk.points() {
                m.set(p as usize - 1, j, true);
            }
        }
        m
    }

    /// Computes `B Bᵀ` and checks it equals `λJ + (r−λ)I` for the validated `(r,λ)`.
    pub fn gram_check(&self) -> Result<RlParams, DesignError> {
        let params = self.validate_rl()?;
        let gram: IntMatrix = self.incidence_matrix().gram();
        for i in 0..self.v {
            for j in 0..self.v {
                let expected = if i == j { params.r } else { params.lambda };
                if gram.get(i, j) != &expected.into() {
                    return Err(DesignError::GramMismatch { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(params)
    }

    /// `{ |B_i ∩ B_j| : i < j }`; empty when there are fewer than two blocks.
    pub fn block_intersection_profile(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                out.insert(a.meet(b));
            }
        }
        out
    }

    /// First pair of disjoint blocks (1-based indices), if any.
    pub fn disjoint_pair(&self) -> Option<(usize, usize)> {
        for (i, a) in self.blocks.iter().enumerate() {
            for (j, b) in self.blocks.iter().enumerate().skip(i + 1) {
                if a.meet(b) == 0 {
                    return Some((i + 1, j + 1));
                }
            }
        }
        None
    }

    pub fn has_disjoint_blocks(&self) -> bool {
        self.disjoint_pair().is_some()
    }

    /// Every block repeated `m` times, copies adjacent.
    pub fn replicate(&self, m: usize) -> Design {
        assert!(m >= 1, "replication factor must be positive");
        let blocks = self
            .blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.clone(), m))
            .collect();
        Design { v: self.v, blocks }
    }

    /// Number of times a given point set occurs as a block.
    pub fn block_multiplicity(&self, points: &[u32]) -> usize {
        let mut key = points.to_vec();
        key.sort_unstable();
        self.blocks.iter().filter(|b| b.0 == key).count()
    }

    pub fn has_repeated_blocks(&self) -> bool {
        let mut seen = BTreeSet::new();
        !self.blocks.iter().all(|b| seen.insert(b))
    }

    /// Block-list text with a `v=` header.
    pub fn to_block_list(&self) -> String {
        let mut s = format!("v={}\n", self.v);
        for b in &self.blocks {
            let pts: Vec<String> = b.points().iter().map(u32::to_string).collect();
            s.push_str(&pts.join(" "));
            s.push('\n');
        }
        s
    }
}

pub fn is_symmetric(params: &DesignParams) -> bool {
    params.b == params.v
}

/// Fisher's inequality `b ≥ v`; only meaningful for non-trivial designs.
pub fn fisher_check(params: &DesignParams) -> Result<bool, DesignError> {
    if params.k >= params.v {
        return Err(DesignError::TrivialDesign);
    }
    Ok(params.b >= params.v)
}

/// `r = λ²`.
pub fn rl_check_square_condition<P: PairIndex>(params: &P) -> bool {
    params.replication() == params.pair_index() * params.pair_index()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fano() -> Design {
        Design::new(
            7,
            vec![
                vec![1, 2, 3],
                vec![1, 4, 5],
                vec![1, 6, 7],
                vec![2, 4, 6],
                vec![2, 5, 7],
                vec![3, 4, 7],
                vec![3, 5, 6],
            ],
        )
        .unwrap()
    }

    fn rl42() -> Design {
        Design::new(
            4,
            vec![
                vec![1, 2, 3, 4],
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4],
            ],
        )
        .unwrap()
    }

    #[test]
    fn constructor_rejects_malformed_blocks() {
        assert_eq!(Design::new(0, vec![]), Err(DesignError::NoPoints));
        assert_eq!(
            Design::new(3, vec![vec![1, 2], vec![]]),
            Err(DesignError::EmptyBlock { block: 2 })
        );
        assert_eq!(
            Design::new(3, vec![vec![1, 4]]),
            Err(DesignError::PointOutOfRange { block: 1, point: 4, v: 3 })
        );
        assert_eq!(
            Design::new(3, vec![vec![2, 1, 2]]),
            Err(DesignError::DuplicatePoint { block: 1, point: 2 })
        );
        assert_eq!(Design::new(3, vec![vec![3, 1]]).unwrap().blocks()[0].points(), &[1, 3]);
    }

    #[test]
    fn fano_parameters() {
        let p = fano().validate_uniform().unwrap();
        assert_eq!(p, DesignParams { v: 7, b: 7, r: 3, k: 3, lambda: 1 });
        assert!(is_symmetric(&p));
        assert_eq!(fisher_check(&p), Ok(true));
        assert!(!rl_check_square_condition(&p));
        assert_eq!(fano().validate_rl().unwrap(), RlParams { r: 3, lambda: 1 });
    }

    #[test]
    fn single_full_block() {
        let d = Design::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        let p = d.validate_uniform().unwrap();
        assert_eq!(p, DesignParams { v: 4, b: 1, r: 1, k: 4, lambda: 1 });
        assert_eq!(fisher_check(&p), Err(DesignError::TrivialDesign));
        let g = d.incidence_matrix().gram();
        assert_eq!(g, IntMatrix::ones(4, 4));
        assert_eq!(d.gram_check().unwrap(), RlParams { r: 1, lambda: 1 });
    }

    #[test]
    fn rl_design_from_the_non_bidegreed_example() {
        let d = rl42();
        assert_eq!(d.validate_rl().unwrap(), RlParams { r: 4, lambda: 2 });
        assert!(rl_check_square_condition(&d.validate_rl().unwrap()));
        assert!(matches!(
            d.validate_uniform(),
            Err(DesignError::NonUniformBlockSize { block: 2, size: 2, expected: 4 })
        ));
        let inc = d.incidence_matrix();
        assert_eq!(inc.col_sums(), vec![4, 2, 2, 2, 2, 2, 2]);
        assert_eq!(inc.row_sums(), vec![4; 4]);
        // BB^T = 2J + 2I
        let expect = IntMatrix::ones(4, 4)
            .scale(&2.into())
            .add(&IntMatrix::scalar(4, 2.into()));
        assert_eq!(inc.gram(), expect);
        assert_eq!(d.gram_check().unwrap(), RlParams { r: 4, lambda: 2 });
    }

    #[test]
    fn fano_incidence_and_gram() {
        let inc = fano().incidence_matrix();
        assert_eq!(inc.row_sums(), vec![3; 7]);
        assert_eq!(inc.col_sums(), vec![3; 7]);
        let expect = IntMatrix::ones(7, 7).add(&IntMatrix::scalar(7, 2.into()));
        assert_eq!(inc.gram(), expect);
    }

    #[test]
    fn unbalanced_and_unreplicated_inputs() {
        let d = Design::new(3, vec![vec![1, 2], vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(
            d.validate_uniform(),
            Err(DesignError::UnbalancedPair { e: 1, f: 3, count: 1, expected: 2 })
        );
        // Pair-balanced but replication 2, 1, 1: {1,2,3}, {1}
        let d = Design::new(3, vec![vec![1, 2, 3], vec![1]]).unwrap();
        assert_eq!(
            d.validate_rl(),
            Err(DesignError::NonConstantReplication { point: 2, count: 1, expected: 2 })
        );
        let d = Design::new(3, vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(d.validate_rl(), Err(DesignError::LambdaZero));
        let d = Design::new(1, vec![vec![1]]).unwrap();
        assert_eq!(d.validate_uniform(), Err(DesignError::LambdaZero));
    }

    #[test]
    fn intersection_profiles() {
        assert_eq!(fano().block_intersection_profile(), BTreeSet::from([1]));
        assert!(!fano().has_disjoint_blocks());
        assert!(Design::new(3, vec![vec![1]]).unwrap().block_intersection_profile().is_empty());
    }

    #[test]
    fn replication_scales_parameters() {
        let d = fano().replicate(3);
        assert_eq!(
            d.validate_uniform().unwrap(),
            DesignParams { v: 7, b: 21, r: 9, k: 3, lambda: 3 }
        );
        assert_eq!(fano().replicate(1), fano());
        assert_eq!(d.block_multiplicity(&[3, 2, 1]), 3);
        assert!(d.has_repeated_blocks());
        assert!(!fano().has_repeated_blocks());
    }
}
