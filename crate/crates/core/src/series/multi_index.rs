use std::cmp::Ordering;

/// Summation index `(m_1, ..., m_r)` of one series term.
///
/// Ordered by total degree first, then lexicographically, so that maps keyed
/// by `MultiIndex` iterate shell by shell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    entries: Vec<u32>,
    total: u32,
}

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        let total = entries.iter().sum();
        MultiIndex { entries, total }
    }

    pub fn zero(arity: usize) -> Self {
        MultiIndex::new(vec![0; arity])
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn get(&self, j: usize) -> u32 {
        self.entries[j]
    }

    /// Sum of the entries selected by `vars`.
    pub fn partial_total(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&j| self.entries[j]).sum()
    }

    pub fn bumped(&self, j: usize) -> Self {
        let mut e = self.entries.clone();
        e[j] += 1;
        MultiIndex { entries: e, total: self.total + 1 }
    }

    /// `self - other` if every entry stays non-negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        let e: Option<Vec<u32>> =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.checked_sub(*b)).collect();
        e.map(MultiIndex::new)
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        MultiIndex::new(perm.iter().map(|&p| self.entries[p]).collect())
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total.cmp(&other.total).then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All indices of the given arity with total degree exactly `s`, in
/// lexicographic order.
pub fn shell(arity: usize, s: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; arity];
    fill(&mut cur, 0, s, &mut out);
    out
}

fn fill(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(MultiIndex::new(cur.clone()));
        return;
    }
    if cur.is_empty() {
        if left == 0 {
            out.push(MultiIndex::new(Vec::new()));
        }
        return;
    }
    for v in 0..=left {
        cur[pos] = v;
        fill(cur, pos + 1, left - v, out);
    }
}

/// All indices with total degree at most `cap`, shell by shell.
pub fn up_to(arity: usize, cap: u32) -> Vec<MultiIndex> {
    (0..=cap).flat_map(|s| shell(arity, s)).collect()
}

/// Number of indices of total `s`, i.e. `C(s + r - 1, r - 1)`.
pub fn shell_size(arity: usize, s: u32) -> u64 {
    if arity == 0 {
        return u64::from(s == 0);
    }
    let k = (arity - 1) as u64;
    let n = s as u64 + k;
    (1..=k).fold(1u64, |acc, i| acc * (n - k + i) / i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shells_have_binomial_sizes() {
        for r in 1..5 {
            for s in 0..8 {
                let sh = shell(r, s);
                assert_eq!(sh.len() as u64, shell_size(r, s));
                assert!(sh.iter().all(|m| m.total() == s && m.arity() == r));
                assert!(sh.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn ordering_is_by_total_first() {
        let a = MultiIndex::new(vec![3, 0]);
        let b = MultiIndex::new(vec![0, 4]);
        assert!(a < b);
        assert_eq!(a.bumped(1).total(), 4);
        assert_eq!(b.partial_total(&[1]), 4);
    }

    #[test]
    fn checked_sub_rejects_negative() {
        let a = MultiIndex::new(vec![2, 1]);
        assert_eq!(a.checked_sub(&MultiIndex::new(vec![1, 1])), Some(MultiIndex::new(vec![1, 0])));
        assert_eq!(a.checked_sub(&MultiIndex::new(vec![0, 2])), None);
    }
}
