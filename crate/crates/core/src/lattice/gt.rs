//! Gelfand-Tsetlin patterns and the Tokuyama sum.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::Partition;
use crate::poly::{GaussianRational, Polynomial, VarSpace};

/// A triangular array, top row first; row `k` (0-based) has `n − k` entries
/// and consecutive rows interleave: `a_1 ≥ b_1 ≥ a_2 ≥ … ≥ b_{m−1} ≥ a_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GtPattern {
    rows: Vec<Vec<u32>>,
}

impl GtPattern {
    /// Checks shape and interleaving (and strictness when asked).
    pub fn new(rows: Vec<Vec<u32>>, strict: bool) -> Result<Self, String> {
        let n = rows.len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n - k {
                return Err(format!("row {k} has {} entries, expected {}", row.len(), n - k));
            }
            if strict && row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(format!("row {k} is not strictly decreasing: {row:?}"));
            }
        }
        for k in 1..n {
            let (a, b) = (&rows[k - 1], &rows[k]);
            if (0..b.len()).any(|i| !(a[i] >= b[i] && b[i] >= a[i + 1])) {
                return Err(format!("rows {a:?} and {b:?} do not interleave"));
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn top(&self) -> &[u32] {
        self.rows.first().map(Vec::as_slice).unwrap_or(&[])
    }

    /// How each entry below the top row leans, tagged with its row index.
    fn classify(&self) -> impl Iterator<Item = (usize, Lean)> + '_ {
        self.rows.iter().enumerate().skip(1).flat_map(move |(k, row)| {
            let above = &self.rows[k - 1];
            row.iter().enumerate().map(move |(j, &x)| {
                let lean = if x == above[j] {
                    Lean::Left
                } else if x == above[j + 1] {
                    Lean::Right
                } else {
                    Lean::Special
                };
                (k, lean)
            })
        })
    }

    /// Number of left-leaning entries (equal to the upper-left neighbour).
    pub fn left_leaning(&self) -> usize {
        self.classify().filter(|(_, l)| *l == Lean::Left).count()
    }

    /// Number of entries equal to neither upper neighbour.
    pub fn special(&self) -> usize {
        self.classify().filter(|(_, l)| *l == Lean::Special).count()
    }

    /// `∏ z_k^{μ_k}` with `μ = gt_row_sums(self)`.
    pub fn z_monomial(&self, space: VarSpace) -> Polynomial {
        let mu = gt_row_sums(self);
        Polynomial::monomial(space, &mu, &vec![0; space.rank()])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Lean {
    Left,
    Right,
    Special,
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// All rows `b` that interleave below `a`, in lexicographic order.
fn children(a: &[u32], strict: bool) -> Vec<Vec<u32>> {
    fn go(a: &[u32], strict: bool, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = prefix.len();
        if i + 1 == a.len() {
            out.push(prefix.clone());
            return;
        }
        for x in a[i + 1]..=a[i] {
            if strict && prefix.last().is_some_and(|&p| p <= x) {
                continue;
            }
            prefix.push(x);
            go(a, strict, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if !a.is_empty() {
        go(a, strict, &mut Vec::new(), &mut out);
    }
    out
}

/// Lazy depth-first enumeration of GT patterns with a fixed top row, in
/// lexicographic order row by row.
pub struct GtPatterns {
    strict: bool,
    n: usize,
    rows: Vec<Vec<u32>>,
    // pending[k] holds the unused candidates for rows[k + 1]
    pending: Vec<std::vec::IntoIter<Vec<u32>>>,
    started: bool,
}

impl GtPatterns {
    pub fn new(top: Vec<u32>, strict: bool) -> Self {
        let n = top.len();
        Self {
            strict,
            n,
            rows: if n == 0 { Vec::new() } else { vec![top] },
            pending: Vec::new(),
            started: false,
        }
    }

    /// Strict patterns with top row `λ + ρ`.
    pub fn strict(lambda: &Partition) -> Self {
        Self::new(lambda.shifted(), true)
    }

    /// All patterns with top row `λ`.
    pub fn weak(lambda: &Partition) -> Self {
        Self::new(lambda.parts().to_vec(), false)
    }

    fn descend(&mut self) -> bool {
        while self.rows.len() < self.n {
            let mut it = children(self.rows.last().expect("nonempty"), self.strict).into_iter();
            let first = it.next();
            self.pending.push(it);
            match first {
                Some(row) => self.rows.push(row),
                None => return false,
            }
        }
        true
    }

    fn current(&self) -> GtPattern {
        GtPattern {
            rows: self.rows.clone(),
        }
    }
}

impl Iterator for GtPatterns {
    type Item = GtPattern;

    fn next(&mut self) -> Option<GtPattern> {
        if !self.started {
            self.started = true;
            if self.descend() {
                return Some(self.current());
            }
        }
        loop {
            let level = self.pending.len();
            let it = self.pending.last_mut()?;
            match it.next() {
                Some(row) => {
                    self.rows.truncate(level);
                    self.rows.push(row);
                    if self.descend() {
                        return Some(self.current());
                    }
                }
                None => {
                    self.pending.pop();
                }
            }
        }
    }
}

/// `μ_k = d_k − d_{k+1}` where `d_k` is the sum of row `k` and `d_{n+1} = 0`.
pub fn gt_row_sums(g: &GtPattern) -> Vec<u32> {
    let d: Vec<u32> = g.rows.iter().map(|r| r.iter().sum()).collect();
    (0..d.len())
        .map(|k| d[k] - d.get(k + 1).copied().unwrap_or(0))
        .collect()
}

// z-exponents, then counts of `t` and of `t + 1` factors per variable.
type TermClass = (Vec<u32>, Vec<u32>, Vec<u32>);

/// `Σ_𝔗 z^{μ(𝔗)} · (t-factors)` over strict patterns with top row `λ + ρ`.
///
/// An entry in row `k` (0-based, `k ≥ 1`) contributes `t` when it equals its
/// upper-left neighbour and `t + 1` when it equals neither neighbour. With
/// `per_row_t` the variable is `t_k`; otherwise a single `t`, represented by
/// `t_1`.
pub fn tokuyama_sum(lambda: &Partition, per_row_t: bool) -> Polynomial {
    let n = lambda.rank();
    let sp = VarSpace::new(n);
    // Patterns sharing z-exponents and per-variable factor counts contribute
    // identical terms, so count them first and expand each class once.
    let mut classes: BTreeMap<TermClass, i64> = BTreeMap::new();
    for g in GtPatterns::strict(lambda) {
        let (mut left, mut special) = (vec![0; n], vec![0; n]);
        for (k, lean) in g.classify() {
            let var = if per_row_t { k } else { 1 };
            match lean {
                Lean::Left => left[var - 1] += 1,
                Lean::Special => special[var - 1] += 1,
                Lean::Right => {}
            }
        }
        *classes.entry((gt_row_sums(&g), left, special)).or_insert(0) += 1;
    }
    let one = Polynomial::one(sp);
    let mut total = Polynomial::zero(sp);
    for ((mu, left, special), count) in classes {
        let mut term = Polynomial::monomial(sp, &mu, &left);
        for (k, &e) in special.iter().enumerate() {
            if e > 0 {
                term = &term * &(&Polynomial::t(sp, k + 1) + &one).pow(e);
            }
        }
        total += &term.scale(&GaussianRational::from(count));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn worked_pattern_row_sums() {
        let g = GtPattern::new(vec![vec![5, 2, 0], vec![3, 0], vec![3]], true).unwrap();
        assert_eq!(gt_row_sums(&g), vec![4, 0, 3]);
    }

    #[test]
    fn single_row() {
        let g = GtPattern::new(vec![vec![7]], true).unwrap();
        assert_eq!(gt_row_sums(&g), vec![7]);
    }

    #[test]
    fn constant_pattern_weight_is_shifted_partition() {
        // each row drops its first entry: row k is (λ+ρ)_{k+1}..(λ+ρ)_n
        let top = part(&[2, 1, 0]).shifted();
        let rows: Vec<Vec<u32>> = (0..3).map(|k| top[k..].to_vec()).collect();
        let g = GtPattern::new(rows, true).unwrap();
        assert_eq!(gt_row_sums(&g), top);
    }

    #[test]
    fn rejects_bad_patterns() {
        assert!(GtPattern::new(vec![vec![3, 1], vec![4]], false).is_err());
        assert!(GtPattern::new(vec![vec![3, 3], vec![3]], true).is_err());
        assert!(GtPattern::new(vec![vec![3, 1], vec![2, 1]], false).is_err());
    }

    #[test]
    fn strict_counts() {
        assert_eq!(GtPatterns::strict(&part(&[0, 0])).count(), 2);
        assert_eq!(GtPatterns::strict(&part(&[4])).count(), 1);
        assert_eq!(GtPatterns::strict(&part(&[])).count(), 1);
    }

    #[test]
    fn weak_count_is_schur_dimension() {
        // dim of the GL_3 irreducible with highest weight (3,1,0)
        assert_eq!(GtPatterns::weak(&part(&[3, 1, 0])).count(), 15);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let pats: Vec<GtPattern> = GtPatterns::strict(&part(&[2, 1, 0])).collect();
        assert!(pats.windows(2).all(|w| w[0] < w[1]));
        for g in &pats {
            assert!(GtPattern::new(g.rows().to_vec(), true).is_ok());
        }
    }

    #[test]
    fn leaning_counts() {
        let g = GtPattern::new(vec![vec![5, 2, 0], vec![3, 0], vec![3]], true).unwrap();
        // row 1: 3 is special, 0 leans right; row 2: 3 leans left
        assert_eq!(g.left_leaning(), 1);
        assert_eq!(g.special(), 1);
    }

    #[test]
    fn tokuyama_rank_two_empty_partition() {
        let sp = VarSpace::new(2);
        // patterns {1 0 / 1} (left-leaning) and {1 0 / 0} (right-leaning)
        let expected = &(&Polynomial::t(sp, 1) * &Polynomial::z(sp, 2)) + &Polynomial::z(sp, 1);
        assert_eq!(tokuyama_sum(&part(&[0, 0]), false), expected);
    }
}
