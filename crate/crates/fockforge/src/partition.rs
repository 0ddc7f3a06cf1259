//! Partitions, Young-diagram cells, hook lengths, colorings, and the abacus
//! machinery for k-cores and k-quotients.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("cell ({0}, {1}) is not a cell of the partition")]
    CellOutside(usize, usize),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

/// A partition: a weakly decreasing sequence of positive integers.
/// The empty sequence is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// A cell (i, j) of a Young diagram, in matrix coordinates: row i, column j.
/// A cell may lie outside a given partition; arm and leg lengths are still
/// defined there (and may be negative).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from parts, which must be positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::NotDecreasing(parts))
        }
    }

    /// Build from arbitrary non-negative entries: sorts descending, drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part, 0 for rows past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        (c.col as u32) < self.part(c.row)
    }

    /// Iterate over the cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| Cell::new(i, j)))
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// arm = lambda_i - j - 1; may be negative for cells outside the diagram.
    pub fn arm(&self, c: Cell) -> i64 {
        self.part(c.row) as i64 - c.col as i64 - 1
    }

    /// leg = lambda'_j - i - 1; may be negative for cells outside the diagram.
    pub fn leg(&self, c: Cell) -> i64 {
        let col_len = self.parts.iter().take_while(|&&p| p as usize > c.col).count() as i64;
        col_len - c.row as i64 - 1
    }

    /// hook = arm + leg + 1; at least 1 for cells inside the diagram.
    pub fn hook(&self, c: Cell) -> i64 {
        self.arm(c) + self.leg(c) + 1
    }

    /// Beta numbers lambda_j + m - 1 - j for j = 0..m; requires m >= len.
    pub fn beta_numbers(&self, m: usize) -> Vec<u64> {
        assert!(m >= self.len(), "need at least len(lambda) beta numbers");
        (0..m)
            .map(|j| self.part(j) as u64 + (m - 1 - j) as u64)
            .collect()
    }

    /// Recover a partition from a set of distinct beta numbers.
    pub fn from_beta_numbers(mut betas: Vec<u64>) -> Partition {
        betas.sort_unstable_by(|a, b| b.cmp(a));
        let m = betas.len();
        let parts = betas
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (m - 1 - j) as u64) as u32)
            .collect();
        Partition::from_unsorted(parts)
    }
}

/// Residue (j - i + offset) mod k of a cell, in {0, ..., k-1}.
pub fn cell_color(c: Cell, k: u32, offset: i64) -> u32 {
    let v = c.col as i64 - c.row as i64 + offset;
    v.rem_euclid(k as i64) as u32
}

/// True iff all k colors occur with equal multiplicity in the diagram
/// (offset 0). Equivalent to having empty k-core.
pub fn is_k_regular(lambda: &Partition, k: u32) -> bool {
    let mut counts = vec![0u64; k as usize];
    for c in lambda.cells() {
        counts[cell_color(c, k, 0) as usize] += 1;
    }
    counts.windows(2).all(|w| w[0] == w[1])
}

/// Relative hook of a cell of `lam_a`: arm in `lam_a` plus leg in `lam_b`
/// plus 1. May be non-positive when the two partitions differ.
pub fn relative_hook(lam_a: &Partition, lam_b: &Partition, c: Cell) -> Result<i64, PartitionError> {
    if !lam_a.contains_cell(c) {
        return Err(PartitionError::CellOutside(c.row, c.col));
    }
    Ok(lam_a.arm(c) + lam_b.leg(c) + 1)
}

/// An ordered r-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    pub fn empty(r: usize) -> Self {
        Multipartition {
            components: vec![Partition::empty(); r],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn total_size(&self) -> u32 {
        self.components.iter().map(|p| p.size()).sum()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// An ordered r-tuple of integer charges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChargeVector {
    entries: Vec<i64>,
}

impl ChargeVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ChargeVector { entries }
    }

    pub fn zeros(r: usize) -> Self {
        ChargeVector {
            entries: vec![0; r],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }
}

/// The abacus sign of a partition with empty k-core: the sign of the
/// permutation regrouping its beta numbers (listed in decreasing order)
/// runner by runner, normalized so the empty partition has sign +1. The
/// normalization makes the value independent of the bead count used.
pub fn quotient_sign(lambda: &Partition, k: u32) -> i64 {
    fn inversions(betas: &[u64], k: u32) -> usize {
        // betas are in decreasing order; count pairs whose runner order
        // disagrees with the value order
        let mut inv = 0;
        for a in 0..betas.len() {
            for b in a + 1..betas.len() {
                if betas[a] % k as u64 > betas[b] % k as u64 {
                    inv += 1;
                }
            }
        }
        inv
    }
    let m = bead_count_multiple(lambda.len(), k);
    let inv = inversions(&lambda.beta_numbers(m), k);
    let base = inversions(&Partition::empty().beta_numbers(m), k);
    if (inv + base) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn bead_count_multiple(len: usize, k: u32) -> usize {
    let k = k as usize;
    let t = len.div_ceil(k).max(1);
    t * k
}

/// Distribute the beta numbers over k runners. Returns, per residue class,
/// the sorted bead positions (beta - residue)/k.
fn runners(lambda: &Partition, k: u32, m: usize) -> Vec<Vec<u64>> {
    let mut runner = vec![Vec::new(); k as usize];
    for b in lambda.beta_numbers(m) {
        runner[(b % k as u64) as usize].push(b / k as u64);
    }
    for r in &mut runner {
        r.sort_unstable();
    }
    runner
}

/// The k-core: push all abacus beads down on their runners.
pub fn k_core(lambda: &Partition, k: u32) -> Partition {
    let m = bead_count_multiple(lambda.len(), k);
    let mut betas = Vec::with_capacity(m);
    for (res, beads) in runners(lambda, k, m).into_iter().enumerate() {
        for p in 0..beads.len() as u64 {
            betas.push(res as u64 + k as u64 * p);
        }
    }
    Partition::from_beta_numbers(betas)
}

/// The k-quotient: runner m of the abacus read as a partition.
/// The bead count is normalized to a multiple of k, which fixes the runner
/// labeling.
pub fn k_quotient(lambda: &Partition, k: u32) -> Multipartition {
    let m = bead_count_multiple(lambda.len(), k);
    let components = runners(lambda, k, m)
        .into_iter()
        .map(|beads| {
            let parts = beads
                .iter()
                .enumerate()
                .map(|(i, &p)| (p - i as u64) as u32)
                .collect();
            Partition::from_unsorted(parts)
        })
        .collect();
    Multipartition::new(components)
}

/// Inverse of (k_core, k_quotient).
pub fn from_core_quotient(
    core: &Partition,
    quotient: &Multipartition,
    k: u32,
) -> Result<Partition, PartitionError> {
    if quotient.arity() != k as usize {
        return Err(PartitionError::ArityMismatch {
            expected: k as usize,
            got: quotient.arity(),
        });
    }
    let max_q = quotient
        .components()
        .iter()
        .map(|p| p.len())
        .max()
        .unwrap_or(0);
    let m = bead_count_multiple(core.len() + k as usize * max_q, k);
    let core_runners = runners(core, k, m);
    let mut betas = Vec::with_capacity(m);
    for (res, beads) in core_runners.into_iter().enumerate() {
        // core runners are gapless: beads at 0..c-1
        let c = beads.len();
        debug_assert!(beads.iter().enumerate().all(|(i, &p)| p == i as u64));
        let comp = &quotient.components()[res];
        assert!(c >= comp.len(), "bead window too small");
        for i in 0..c {
            let pos = comp.part(c - 1 - i) as u64 + i as u64;
            betas.push(res as u64 + k as u64 * pos);
        }
    }
    Ok(Partition::from_beta_numbers(betas))
}

/// All partitions of n, in lexicographically decreasing order of part lists.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let mut p = remaining.min(max_part);
        while p >= 1 {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
            p -= 1;
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// All r-tuples of partitions of total size n.
pub fn multipartitions_of(n: u32, r: usize) -> Vec<Multipartition> {
    if r == 0 {
        return if n == 0 {
            vec![Multipartition::new(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for lam in partitions_of(first) {
            for rest in multipartitions_of(n - first, r - 1) {
                let mut comps = Vec::with_capacity(r);
                comps.push(lam.clone());
                comps.extend(rest.components().iter().cloned());
                out.push(Multipartition::new(comps));
            }
        }
    }
    out
}

/// Parse the CLI partition syntax `[a,b,c]`.
pub fn parse_partition(s: &str) -> Result<Partition, PartitionError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| PartitionError::NotDecreasing(Vec::new()))?;
    let mut parts = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let v: u32 = tok
            .parse()
            .map_err(|_| PartitionError::NotDecreasing(Vec::new()))?;
        parts.push(v);
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn hook_examples() {
        assert_eq!(p(&[1]).hook(Cell::new(0, 0)), 1);
        assert_eq!(p(&[2, 1]).hook(Cell::new(0, 0)), 3);
        assert_eq!(Partition::empty().leg(Cell::new(0, 0)), -1);
    }

    #[test]
    fn hooks_positive_inside() {
        for lam in partitions_of(7) {
            for c in lam.cells() {
                assert!(lam.hook(c) >= 1);
            }
        }
    }

    #[test]
    fn relative_hook_examples() {
        // alpha = beta reduces to the ordinary hook
        for lam in partitions_of(6) {
            for c in lam.cells() {
                assert_eq!(relative_hook(&lam, &lam, c).unwrap(), lam.hook(c));
            }
        }
        assert_eq!(relative_hook(&p(&[1]), &Partition::empty(), Cell::new(0, 0)).unwrap(), 0);
        assert_eq!(relative_hook(&p(&[2, 1]), &p(&[1, 1]), Cell::new(0, 0)).unwrap(), 3);
        assert!(relative_hook(&p(&[1]), &p(&[1]), Cell::new(1, 1)).is_err());
    }

    #[test]
    fn cell_color_examples() {
        assert_eq!(cell_color(Cell::new(0, 0), 3, 0), 0);
        assert_eq!(cell_color(Cell::new(1, 0), 3, 0), 2);
        assert_eq!(cell_color(Cell::new(0, 0), 3, 2), 2);
    }

    #[test]
    fn k_regular_examples() {
        for k in 1..=4 {
            assert!(is_k_regular(&Partition::empty(), k));
        }
        assert!(is_k_regular(&p(&[2]), 2));
        assert!(!is_k_regular(&p(&[1]), 2));
    }

    /// Independent core computation by removing border strips of length k in
    /// every possible order.
    fn core_by_strip_removal(lambda: &Partition, k: u32) -> std::collections::BTreeSet<Partition> {
        fn strips(lambda: &Partition, k: u32) -> Vec<Partition> {
            // border strips of length k correspond to beta numbers b with
            // b >= k and b - k not a beta number
            let m = lambda.len() + 1;
            let betas = lambda.beta_numbers(m);
            let set: std::collections::BTreeSet<u64> = betas.iter().copied().collect();
            let mut out = Vec::new();
            for &b in &betas {
                if b >= k as u64 && !set.contains(&(b - k as u64)) {
                    let mut nb: Vec<u64> = betas.iter().copied().filter(|&x| x != b).collect();
                    nb.push(b - k as u64);
                    out.push(Partition::from_beta_numbers(nb));
                }
            }
            out
        }
        let mut cores = std::collections::BTreeSet::new();
        let next = strips(lambda, k);
        if next.is_empty() {
            cores.insert(lambda.clone());
        } else {
            for mu in next {
                cores.extend(core_by_strip_removal(&mu, k));
            }
        }
        cores
    }

    #[test]
    fn core_matches_strip_removal_oracle() {
        for k in [2u32, 3, 4] {
            for n in 0..=9 {
                for lam in partitions_of(n) {
                    let cores = core_by_strip_removal(&lam, k);
                    assert_eq!(cores.len(), 1, "core must be order-independent");
                    assert_eq!(k_core(&lam, k), cores.into_iter().next().unwrap());
                }
            }
        }
    }

    #[test]
    fn empty_core_iff_k_regular() {
        for k in [2u32, 3, 4] {
            for n in 0..=12 {
                for lam in partitions_of(n) {
                    assert_eq!(k_core(&lam, k).is_empty(), is_k_regular(&lam, k), "{lam} k={k}");
                }
            }
        }
    }

    #[test]
    fn quotient_of_empty() {
        for k in 1..=4 {
            assert_eq!(k_quotient(&Partition::empty(), k), Multipartition::empty(k as usize));
        }
    }

    #[test]
    fn core_quotient_roundtrip_and_size() {
        for k in [2u32, 3, 4] {
            for n in 0..=12 {
                for lam in partitions_of(n) {
                    let core = k_core(&lam, k);
                    let quot = k_quotient(&lam, k);
                    assert_eq!(
                        lam.size(),
                        core.size() + k * quot.total_size(),
                        "size identity for {lam}, k={k}"
                    );
                    let back = from_core_quotient(&core, &quot, k).unwrap();
                    assert_eq!(back, lam);
                }
            }
        }
    }

    /// Classical partition-count recurrence (pentagonal numbers).
    fn partition_count_oracle(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > m && g2 as usize > m {
                    break;
                }
                let sign = if k % 2 == 0 { -1 } else { 1 };
                if g1 as usize <= m {
                    total += sign * p[m - g1 as usize];
                }
                if g2 as usize <= m {
                    total += sign * p[m - g2 as usize];
                }
                k += 1;
            }
            p[m] = total;
        }
        p
    }

    #[test]
    fn partition_enumeration_counts() {
        let oracle = partition_count_oracle(12);
        for n in 0..=12u32 {
            let all = partitions_of(n);
            let distinct: std::collections::BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(all.len(), distinct.len(), "no duplicates");
            assert_eq!(all.len() as i64, oracle[n as usize]);
        }
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(multipartitions_of(2, 2).len(), 5);
        assert_eq!(multipartitions_of(0, 3).len(), 1);
    }

    #[test]
    fn parse_partition_syntax() {
        assert_eq!(parse_partition("[3,1]").unwrap(), p(&[3, 1]));
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
        assert!(parse_partition("[1,3]").is_err());
        assert!(parse_partition("3,1").is_err());
    }
}
