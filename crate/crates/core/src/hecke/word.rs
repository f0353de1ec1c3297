use std::collections::{BTreeMap, VecDeque};

use super::apply_ti;
use crate::error::{Error, Result};
use crate::poly::XPolynomial;

/// A reduced decomposition `w = s_{i_1} … s_{i_p}` with letters in `1..n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

/// One-line notation of `s_{i_1} … s_{i_p}`.
fn permutation_of(n: usize, letters: &[usize]) -> Vec<usize> {
    let mut w: Vec<usize> = (1..=n).collect();
    for &i in letters {
        w.swap(i - 1, i);
    }
    w
}

fn inversions(w: &[usize]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

impl ReducedWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::IndexOutOfRange { op: "ReducedWord", index: bad, n });
        }
        if inversions(&permutation_of(n, &letters)) != letters.len() {
            return Err(Error::NotReduced(letters));
        }
        Ok(ReducedWord { n, letters })
    }

    /// Skip the reducedness check outside debug builds.
    pub fn new_trusted(n: usize, letters: Vec<usize>) -> Self {
        debug_assert_eq!(inversions(&permutation_of(n, &letters)), letters.len(), "word {letters:?} is not reduced");
        ReducedWord { n, letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn permutation(&self) -> Vec<usize> {
        permutation_of(self.n, &self.letters)
    }
}

/// One reduced word per element of `S_n`, found breadth first in the weak
/// order with letters tried in increasing order. Sorted by length, then
/// by word.
pub fn all_reduced_words(n: usize) -> Vec<ReducedWord> {
    let id: Vec<usize> = (1..=n).collect();
    let mut seen: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    seen.insert(id.clone(), Vec::new());
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let word = seen[&w].clone();
        for i in 1..n {
            if w[i - 1] < w[i] {
                let mut v = w.clone();
                v.swap(i - 1, i);
                if !seen.contains_key(&v) {
                    let mut next = word.clone();
                    next.push(i);
                    seen.insert(v.clone(), next);
                    queue.push_back(v);
                }
            }
        }
    }
    let mut words: Vec<ReducedWord> = seen.into_values().map(|letters| ReducedWord { n, letters }).collect();
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.letters.cmp(&b.letters)));
    words
}

/// `T_w f = T_{i_1}(… T_{i_p}(f))`.
pub fn apply_tw(f: &XPolynomial, w: &ReducedWord) -> Result<XPolynomial> {
    let mut g = f.clone();
    for &i in w.letters.iter().rev() {
        g = apply_ti(&g, i)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::QtScalar;

    #[test]
    fn enumerates_the_symmetric_group() {
        assert_eq!(all_reduced_words(3).len(), 6);
        assert_eq!(all_reduced_words(4).len(), 24);
        let total: usize = all_reduced_words(4).iter().map(|w| w.len()).sum();
        assert_eq!(total, 72);
    }

    #[test]
    fn reducedness() {
        assert!(ReducedWord::new(3, vec![1, 2, 1]).is_ok());
        assert_eq!(ReducedWord::new(3, vec![1, 1]), Err(Error::NotReduced(vec![1, 1])));
        assert!(ReducedWord::new(3, vec![3]).is_err());
    }

    #[test]
    fn braid_words_agree() {
        let f = &XPolynomial::var(3, 1) * &XPolynomial::var(3, 1).mul_var(3).unwrap();
        let a = apply_tw(&f, &ReducedWord::new(3, vec![1, 2, 1]).unwrap()).unwrap();
        let b = apply_tw(&f, &ReducedWord::new(3, vec![2, 1, 2]).unwrap()).unwrap();
        assert_eq!(a, b);
        let one = XPolynomial::one(3);
        assert_eq!(apply_tw(&one, &ReducedWord::new(3, vec![]).unwrap()).unwrap(), one);
        assert_eq!(apply_tw(&one, &ReducedWord::new(3, vec![1]).unwrap()).unwrap(), one.scale(&QtScalar::t()));
    }
}
