use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{classify_bidegreed, Classification, ClassifyError};
use crate::binary::BinaryMatrix;
use crate::graph::{parse_split, SplitGraph};

/// Largest `c_max · s_max` accepted by [`enumerate_small`].
pub const ENUMERATION_CELL_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub c: usize,
    pub s: usize,
    /// Rows of the canonical biadjacency matrix.
    pub rows: Vec<String>,
    pub degrees: String,
    pub t: usize,
    pub bidegreed: bool,
    pub classification: Classification,
}

impl CensusEntry {
    pub fn graph(&self) -> SplitGraph {
        let mut text = format!("split c={} s={}\n", self.c, self.s);
        for r in &self.rows {
            text.push_str(r);
            text.push('\n');
        }
        parse_split(&text).expect("census rows are well formed")
    }

    pub fn three_extremal(&self) -> bool {
        self.classification.diameter == Some(3) && self.classification.delta == 4
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub c_max: usize,
    pub s_max: usize,
    pub matrices_scanned: u64,
    pub classes: usize,
    /// Connected graphs, one per equivalence class, ordered by `(c, s, B)`.
    pub entries: Vec<CensusEntry>,
}

impl Census {
    pub fn extremal(&self) -> impl Iterator<Item = &CensusEntry> {
        self.entries.iter().filter(|e| e.three_extremal())
    }

    /// Largest number of distinct degrees among diameter-3, δ = 4 graphs.
    pub fn max_extremal_t(&self) -> Option<usize> {
        self.extremal().map(|e| e.t).max()
    }

    pub fn count_verdict(&self, label: &str) -> usize {
        self.entries
            .iter()
            .filter(|e| e.classification.verdict.label() == label)
            .count()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least matrix over all row permutations, each followed by sorting the columns.
fn canonical_rows_first(b: &BinaryMatrix, perms: &[Vec<usize>]) -> BinaryMatrix {
    let (rows, cols) = (b.rows(), b.cols());
    perms
        .iter()
        .map(|p| {
            let mut columns: Vec<Vec<bool>> = (0..cols).map(|j| p.iter().map(|&i| b.get(i, j)).collect()).collect();
            columns.sort_unstable();
            BinaryMatrix::from_fn(rows, cols, |i, j| columns[j][i])
        })
        .min()
        .expect("at least the identity permutation")
}

/// Canonical representative under independent row and column permutations.
/// The smaller side is permuted exhaustively and the larger side sorted.
pub fn canonical_form(b: &BinaryMatrix) -> BinaryMatrix {
    if b.rows() <= b.cols() {
        canonical_rows_first(b, &permutations(b.rows()))
    } else {
        canonical_rows_first(&b.transpose(), &permutations(b.cols())).transpose()
    }
}

fn canonical_classes(c: usize, s: usize, perms: &[Vec<usize>]) -> BTreeSet<BinaryMatrix> {
    let total = 1u64 << (c * s);
    let canon = |mask: u64| {
        let b = BinaryMatrix::from_mask(c, s, mask);
        if c <= s {
            canonical_rows_first(&b, perms)
        } else {
            canonical_rows_first(&b.transpose(), perms).transpose()
        }
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..total).into_par_iter().map(canon).collect::<Vec<_>>().into_iter().collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..total).map(canon).collect()
    }
}

fn classify_all(reps: Vec<(usize, usize, BinaryMatrix)>) -> Result<Vec<CensusEntry>, ClassifyError> {
    let run = |(c, s, b): &(usize, usize, BinaryMatrix)| -> Result<Option<CensusEntry>, ClassifyError> {
        let g = SplitGraph::new(b.clone());
        if !g.is_connected() {
            return Ok(None);
        }
        let ds = g.degree_summary();
        Ok(Some(CensusEntry {
            c: *c,
            s: *s,
            rows: b.to_lines(),
            degrees: ds.sequence(),
            t: ds.t(),
            bidegreed: ds.bidegreed,
            classification: classify_bidegreed(&g)?,
        }))
    };
    #[cfg(feature = "parallel")]
    let results: Vec<_> = {
        use rayon::prelude::*;
        reps.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = reps.iter().map(run).collect();
    results.into_iter().filter_map(Result::transpose).collect()
}

fn run_census(c_max: usize, s_max: usize) -> Result<Census, ClassifyError> {
    let mut reps = Vec::new();
    let mut scanned = 0u64;
    for c in 1..=c_max {
        for s in 0..=s_max {
            let perms = permutations(c.min(s));
            scanned += 1u64 << (c * s);
            reps.extend(canonical_classes(c, s, &perms).into_iter().map(|b| (c, s, b)));
        }
    }
    let classes = reps.len();
    Ok(Census {
        c_max,
        s_max,
        matrices_scanned: scanned,
        classes,
        entries: classify_all(reps)?,
    })
}

/// Every connected split graph with `1 ≤ c ≤ c_max` and `0 ≤ s ≤ s_max`, one per
/// row-and-column permutation class of `B`, classified. The result does not
/// depend on `jobs`.
pub fn enumerate_small(c_max: usize, s_max: usize, jobs: Option<usize>) -> Result<Census, ClassifyError> {
    if c_max * s_max > ENUMERATION_CELL_LIMIT {
        return Err(ClassifyError::TooLarge(c_max * s_max));
    }
    #[cfg(feature = "parallel")]
    if let Some(n) = jobs {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool");
        return pool.install(|| run_census(c_max, s_max));
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
    run_census(c_max, s_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Verdict;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        let set: BTreeSet<_> = permutations(3).into_iter().collect();
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let b = BinaryMatrix::from_fn(3, 4, |i, j| (i + 2 * j) % 3 == 0);
        let shuffled = BinaryMatrix::from_fn(3, 4, |i, j| b.get((i + 1) % 3, 3 - j));
        assert_eq!(canonical_form(&b), canonical_form(&shuffled));
        let tall = b.transpose();
        let tall_shuffled = shuffled.transpose();
        assert_eq!(canonical_form(&tall), canonical_form(&tall_shuffled));
    }

    #[test]
    fn two_by_two_census_has_only_the_path() {
        let census = enumerate_small(2, 2, None).unwrap();
        let extremal: Vec<_> = census.extremal().collect();
        assert_eq!(extremal.len(), 1);
        assert_eq!(extremal[0].classification.verdict, Verdict::CoronaBranch { c: 2 });
        assert_eq!(
            canonical_form(extremal[0].graph().biadjacency()),
            canonical_form(SplitGraph::corona_clique(2).biadjacency())
        );
    }

    #[test]
    fn single_clique_vertex_never_reaches_diameter_three() {
        let census = enumerate_small(1, 4, None).unwrap();
        assert!(census.entries.iter().all(|e| e.classification.diameter <= Some(2)));
        assert_eq!(enumerate_small(5, 5, None), Err(ClassifyError::TooLarge(25)));
    }
}
