//! Indices (finite sequences of positive integers), their 0/1-word encoding,
//! and the Hoffman dual.

use std::fmt;
use std::str::FromStr;

/// A nonempty sequence of positive integers `(k_1, ..., k_m)`.
///
/// `weight` is the sum of the entries, `depth` their number. Values are
/// immutable; every operator returns a fresh index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    parts: Vec<u32>,
}

impl Index {
    /// Builds an index from its entries. Panics if `parts` is empty or
    /// contains a zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "index must be nonempty");
        assert!(parts.iter().all(|&k| k >= 1), "index entries must be >= 1");
        Index { parts }
    }

    /// The repeated index `{k}^m` (`m` copies of `k`).
    pub fn repeat(k: u32, m: usize) -> Self {
        assert!(m >= 1, "repetition count must be >= 1");
        Index::new(vec![k; m])
    }

    /// Depth-1 index `(k)`.
    pub fn single(k: u32) -> Self {
        Index::new(vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// The reversed index `(k_m, ..., k_1)`.
    pub fn reverse(&self) -> Index {
        let mut parts = self.parts.clone();
        parts.reverse();
        Index { parts }
    }

    /// Concatenation `(k_1, ..., k_m, k'_1, ..., k'_{m'})`.
    pub fn concat(&self, other: &Index) -> Index {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Index { parts }
    }

    /// Componentwise sum of two indices of equal depth.
    ///
    /// Panics on mismatched depths.
    pub fn oplus(&self, other: &Index) -> Index {
        self.oplus_parts(&other.parts)
    }

    /// Componentwise sum with a nonnegative delta vector of equal depth.
    /// This is how the unit vectors `e_i` (which carry zero entries and are
    /// therefore not themselves indices) enter: `k.oplus_parts(&unit_parts(i, m))`.
    pub fn oplus_parts(&self, deltas: &[u32]) -> Index {
        assert_eq!(
            self.depth(),
            deltas.len(),
            "componentwise sum requires equal depth"
        );
        Index {
            parts: self
                .parts
                .iter()
                .zip(deltas)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// `k ⊕ e_i`: adds 1 to the i-th entry (1-based).
    pub fn bump(&self, i: usize) -> Index {
        assert!(1 <= i && i <= self.depth());
        let mut parts = self.parts.clone();
        parts[i - 1] += 1;
        Index { parts }
    }

    /// Prepends an entry.
    pub fn prepend(&self, k: u32) -> Index {
        Index::single(k).concat(self)
    }

    /// Prefix `(k_1, ..., k_j)`; `j >= 1`.
    pub fn prefix(&self, j: usize) -> Index {
        assert!(1 <= j && j <= self.depth());
        Index::new(self.parts[..j].to_vec())
    }

    /// Suffix `(k_{j+1}, ..., k_m)` reversed, i.e. `(k_m, ..., k_{j+1})`.
    pub fn reversed_suffix(&self, j: usize) -> Index {
        assert!(j < self.depth());
        let mut parts = self.parts[j..].to_vec();
        parts.reverse();
        Index { parts }
    }

    /// Partial sums `l_i = k_1 + ... + k_i` for `i = 1..m`.
    pub fn partial_sums(&self) -> Vec<u32> {
        let mut acc = 0;
        self.parts
            .iter()
            .map(|&k| {
                acc += k;
                acc
            })
            .collect()
    }

    /// The 0/1-word `0^{k_1-1} 1 0^{k_2-1} 1 ... 0^{k_m-1} 1`.
    pub fn to_word(&self) -> Word {
        let mut w = Word::with_capacity(self.weight() as usize);
        for &k in &self.parts {
            for _ in 0..k - 1 {
                w.push(false);
            }
            w.push(true);
        }
        w
    }

    /// The Hoffman dual: strip the final 1 of the word, swap 0 and 1, append 1.
    pub fn hoffman_dual(&self) -> Index {
        let w = self.to_word();
        let mut d = Word::with_capacity(w.len());
        for i in 0..w.len() - 1 {
            d.push(!w.get(i));
        }
        d.push(true);
        Index::from_word(&d).expect("dual word ends in 1 by construction")
    }

    /// The Hoffman dual through the power-set route: map the index to its set
    /// of proper partial sums inside `{1, ..., w-1}`, complement, map back.
    /// Agrees with [`Index::hoffman_dual`] on every input.
    pub fn hoffman_dual_powerset(&self) -> Index {
        let w = self.weight();
        let sums = self.partial_sums();
        let chosen: Vec<bool> = (1..w).map(|v| sums.binary_search(&v).is_ok()).collect();
        // complement in {1, ..., w-1}, then read off gaps as entries
        let mut parts = Vec::new();
        let mut prev = 0u32;
        for (pos, &in_psi) in chosen.iter().enumerate() {
            let v = pos as u32 + 1;
            if !in_psi {
                parts.push(v - prev);
                prev = v;
            }
        }
        parts.push(w - prev);
        Index::new(parts)
    }

    /// Parses a word back into an index; the word must end in 1.
    pub fn from_word(w: &Word) -> Result<Index, IndexParseError> {
        if w.is_empty() || !w.get(w.len() - 1) {
            return Err(IndexParseError::WordMustEndInOne);
        }
        let mut parts = Vec::new();
        let mut run = 0u32;
        for i in 0..w.len() {
            if w.get(i) {
                parts.push(run + 1);
                run = 0;
            } else {
                run += 1;
            }
        }
        Ok(Index::new(parts))
    }
}

/// `e_i` of depth `m` as a delta vector (1-based `i`).
pub fn unit_parts(i: usize, m: usize) -> Vec<u32> {
    assert!(1 <= i && i <= m);
    let mut v = vec![0; m];
    v[i - 1] = 1;
    v
}

impl fmt::Debug for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Index({})", self)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &k in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", k)?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IndexParseError {
    #[error("word must end in the letter 1")]
    WordMustEndInOne,
    #[error("empty index literal")]
    Empty,
    #[error("bad index token `{0}` (expected e.g. `3` or `{{1}}^4`)")]
    BadToken(String),
}

/// CLI literal syntax: comma-separated positive integers with `{k}^m`
/// shorthand, e.g. `2,1,1` or `{1}^4` or `2,{1}^3`.
impl FromStr for Index {
    type Err = IndexParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(IndexParseError::Empty);
            }
            if let Some(rest) = tok.strip_prefix('{') {
                let (k, m) = rest
                    .split_once("}^")
                    .ok_or_else(|| IndexParseError::BadToken(tok.into()))?;
                let k: u32 = k
                    .trim()
                    .parse()
                    .map_err(|_| IndexParseError::BadToken(tok.into()))?;
                let m: usize = m
                    .trim()
                    .parse()
                    .map_err(|_| IndexParseError::BadToken(tok.into()))?;
                if k == 0 || m == 0 {
                    return Err(IndexParseError::BadToken(tok.into()));
                }
                parts.extend(std::iter::repeat_n(k, m));
            } else {
                let k: u32 = tok
                    .parse()
                    .map_err(|_| IndexParseError::BadToken(tok.into()))?;
                if k == 0 {
                    return Err(IndexParseError::BadToken(tok.into()));
                }
                parts.push(k);
            }
        }
        if parts.is_empty() {
            return Err(IndexParseError::Empty);
        }
        Ok(Index::new(parts))
    }
}

/// A 0/1-word, packed into 64-bit blocks. The encoding of an index always
/// ends in 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    len: usize,
    bits: Vec<u64>,
}

impl Word {
    pub fn with_capacity(n: usize) -> Self {
        Word {
            len: 0,
            bits: Vec::with_capacity(n / 64 + 1),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push(&mut self, bit: bool) {
        let block = self.len / 64;
        if block == self.bits.len() {
            self.bits.push(0);
        }
        if bit {
            self.bits[block] |= 1 << (self.len % 64);
        }
        self.len += 1;
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

/// All indices of the given weight, in lexicographic order of compositions.
pub fn indices_of_weight(w: u32) -> Vec<Index> {
    assert!(w >= 1);
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn go(rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Index>) {
        if rem == 0 {
            out.push(Index::new(cur.clone()));
            return;
        }
        for k in 1..=rem {
            cur.push(k);
            go(rem - k, cur, out);
            cur.pop();
        }
    }
    go(w, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec())
    }

    #[test]
    fn weight_and_depth() {
        assert_eq!(idx(&[2, 1]).weight(), 3);
        assert_eq!(idx(&[2, 1]).depth(), 2);
        assert_eq!(idx(&[1]).weight(), 1);
        assert_eq!(Index::repeat(1, 5).weight(), 5);
        assert_eq!(Index::repeat(2, 3).depth(), 3);
    }

    #[test]
    fn word_roundtrip() {
        assert_eq!(idx(&[2, 1]).to_word().to_string(), "011");
        assert_eq!(idx(&[1]).to_word().to_string(), "1");
        // blocks 001|1 read back as (3,1)
        let mut w = Word::with_capacity(4);
        for b in [false, false, true, true] {
            w.push(b);
        }
        assert_eq!(Index::from_word(&w).unwrap(), idx(&[3, 1]));
        assert_eq!(idx(&[3, 1]).to_word().to_string(), "0011");
    }

    #[test]
    fn malformed_word_rejected() {
        let mut w = Word::with_capacity(2);
        w.push(true);
        w.push(false);
        assert_eq!(Index::from_word(&w), Err(IndexParseError::WordMustEndInOne));
    }

    #[test]
    fn hoffman_dual_examples() {
        assert_eq!(idx(&[2]).hoffman_dual(), idx(&[1, 1]));
        assert_eq!(idx(&[1, 2]).hoffman_dual(), idx(&[2, 1]));
        assert_eq!(idx(&[1]).hoffman_dual(), idx(&[1]));
        // (k) -> {1}^k, (k1,k2) -> ({1}^{k1-1}, 2, {1}^{k2-1})
        assert_eq!(idx(&[4]).hoffman_dual(), Index::repeat(1, 4));
        assert_eq!(idx(&[3, 2]).hoffman_dual(), idx(&[1, 1, 2, 1]));
        // (k1, {1}^{k2-1}) -> ({1}^{k1-1}, k2) for k2 >= 2
        assert_eq!(idx(&[3, 1, 1]).hoffman_dual(), idx(&[1, 1, 3]));
    }

    #[test]
    fn dual_involution_and_weight_exhaustive() {
        for w in 1..=12 {
            for k in indices_of_weight(w) {
                let d = k.hoffman_dual();
                assert_eq!(d.weight(), k.weight());
                assert_eq!(
                    d.depth() as u32 + k.depth() as u32,
                    k.weight() + 1,
                    "depth complement failed for {k}"
                );
                assert_eq!(d.hoffman_dual(), k, "involution failed for {k}");
                assert_eq!(
                    k.hoffman_dual_powerset(),
                    d,
                    "power-set dual disagrees for {k}"
                );
            }
        }
    }

    #[test]
    fn dual_induction_lemma_exhaustive() {
        // (k ⊕ e_1)^dual = (1) ⊔ k^dual and ((1) ⊔ k)^dual = k^dual ⊕ e_1
        for w in 1..=10 {
            for k in indices_of_weight(w) {
                let d = k.hoffman_dual();
                assert_eq!(k.bump(1).hoffman_dual(), d.prepend(1));
                assert_eq!(k.prepend(1).hoffman_dual(), d.bump(1));
            }
        }
    }

    #[test]
    fn dual_commutes_with_reverse() {
        for w in 1..=10 {
            for k in indices_of_weight(w) {
                assert_eq!(
                    k.reverse().hoffman_dual(),
                    k.hoffman_dual().reverse(),
                    "failed for {k}"
                );
            }
        }
    }

    #[test]
    fn operators() {
        assert_eq!(idx(&[2, 1]).reverse(), idx(&[1, 2]));
        assert_eq!(idx(&[1, 1]).oplus_parts(&unit_parts(1, 2)), idx(&[2, 1]));
        assert_eq!(idx(&[1]).concat(&idx(&[2, 1])), idx(&[1, 2, 1]));
        assert_eq!(idx(&[1, 1]).oplus(&idx(&[2, 3])), idx(&[3, 4]));
        assert_eq!(idx(&[1, 2, 3]).bump(2), idx(&[1, 3, 3]));
    }

    #[test]
    #[should_panic]
    fn oplus_depth_mismatch_panics() {
        let _ = idx(&[1, 1]).oplus(&idx(&[1]));
    }

    #[test]
    fn literal_syntax() {
        assert_eq!("2,1,1".parse::<Index>().unwrap(), idx(&[2, 1, 1]));
        assert_eq!("{1}^4".parse::<Index>().unwrap(), Index::repeat(1, 4));
        assert_eq!("2,{1}^3,4".parse::<Index>().unwrap(), idx(&[2, 1, 1, 1, 4]));
        assert!("".parse::<Index>().is_err());
        assert!("0".parse::<Index>().is_err());
        assert!("{2}^0".parse::<Index>().is_err());
        assert!("x".parse::<Index>().is_err());
    }

    proptest! {
        #[test]
        fn word_roundtrip_prop(parts in proptest::collection::vec(1u32..7, 1..8)) {
            let k = Index::new(parts);
            let back = Index::from_word(&k.to_word()).unwrap();
            prop_assert_eq!(back, k);
        }

        #[test]
        fn dual_involution_prop(parts in proptest::collection::vec(1u32..6, 1..9)) {
            let k = Index::new(parts);
            prop_assert_eq!(k.hoffman_dual().hoffman_dual(), k.clone());
            prop_assert_eq!(k.hoffman_dual_powerset(), k.hoffman_dual());
        }
    }
}
