use std::fmt;

/// Strictly increasing tuple of variable indices; the basis label of a
/// component of an alternating tensor (`dx_{i1} ^ ... ^ dx_{iq}` or
/// `d/dx_{i1} ^ ... ^ d/dx_{iq}`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn empty() -> Self {
        IndexTuple(Vec::new())
    }

    /// Build from a strictly increasing slice.
    pub fn new(indices: &[usize]) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        IndexTuple(indices.to_vec())
    }

    /// Sort arbitrary indices, tracking the permutation sign.
    /// `None` when an index repeats (the component is zero).
    pub fn normalize(indices: &[usize]) -> Option<(IndexTuple, bool)> {
        let mut v = indices.to_vec();
        let mut negative = false;
        // insertion sort counting swaps; tuples are tiny
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                negative = !negative;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((IndexTuple(v), negative))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.0.binary_search(&idx).is_ok()
    }

    pub fn position(&self, idx: usize) -> Option<usize> {
        self.0.binary_search(&idx).ok()
    }

    /// Tuple with the entry at `pos` removed.
    pub fn without_position(&self, pos: usize) -> IndexTuple {
        let mut v = self.0.clone();
        v.remove(pos);
        IndexTuple(v)
    }

    /// Disjoint merge of two increasing tuples with the shuffle sign.
    /// `None` when they share an index.
    pub fn merge(&self, other: &IndexTuple) -> Option<(IndexTuple, bool)> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut negative = false;
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] == other.0[j] {
                return None;
            }
            if self.0[i] < other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                // other.0[j] jumps over the remaining entries of self
                if (self.0.len() - i) % 2 == 1 {
                    negative = !negative;
                }
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Some((IndexTuple(out), negative))
    }

    /// Insert one index, returning the new tuple and the shuffle sign.
    pub fn insert(&self, idx: usize) -> Option<(IndexTuple, bool)> {
        self.merge(&IndexTuple(vec![idx]))
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All strictly increasing `k`-tuples over `0..n`, in lexicographic order.
pub fn tuples(n: usize, k: usize) -> Vec<IndexTuple> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(IndexTuple(cur.clone()));
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Binomial coefficient, sized for rank computations of small free modules.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: usize = 1;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_signs() {
        let (t, neg) = IndexTuple::normalize(&[2, 0]).unwrap();
        assert_eq!(t.indices(), &[0, 2]);
        assert!(neg);
        let (t, neg) = IndexTuple::normalize(&[0, 1, 2]).unwrap();
        assert_eq!(t.indices(), &[0, 1, 2]);
        assert!(!neg);
        assert_eq!(IndexTuple::normalize(&[1, 1]), None);
        // odd permutation (0,1,2) -> (2,0,1) is even: two transpositions
        let (_, neg) = IndexTuple::normalize(&[2, 0, 1]).unwrap();
        assert!(!neg);
    }

    #[test]
    fn merge_signs() {
        let a = IndexTuple::new(&[1]);
        let b = IndexTuple::new(&[0]);
        let (t, neg) = a.merge(&b).unwrap();
        assert_eq!(t.indices(), &[0, 1]);
        assert!(neg);
        assert_eq!(a.merge(&a), None);
        let c = IndexTuple::new(&[0, 3]);
        let d = IndexTuple::new(&[1, 2]);
        // 1 and 2 each jump over {3}: sign (+1)^2... each crossing flips once
        let (t, neg) = c.merge(&d).unwrap();
        assert_eq!(t.indices(), &[0, 1, 2, 3]);
        assert!(!neg);
    }

    #[test]
    fn tuple_enumeration() {
        let ts = tuples(4, 2);
        assert_eq!(ts.len(), 6);
        assert_eq!(ts[0].indices(), &[0, 1]);
        assert_eq!(ts[5].indices(), &[2, 3]);
        assert_eq!(tuples(3, 0), vec![IndexTuple::empty()]);
        assert!(tuples(2, 3).is_empty());
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
    }
}
