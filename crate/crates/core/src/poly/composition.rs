use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Dense exponent vector; also the storage of a [`Composition`].
pub type Exponent = SmallVec<[u32; 8]>;

/// An `n`-tuple of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Exponent);

impl Composition {
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        Composition(parts.into_iter().collect())
    }

    pub fn zero(n: usize) -> Self {
        Composition(SmallVec::from_elem(0, n))
    }

    pub fn from_exponent(e: Exponent) -> Self {
        Composition(e)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self) -> &Exponent {
        &self.0
    }

    pub fn into_exponent(self) -> Exponent {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// The decreasing rearrangement `η⁺`.
    pub fn partition(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition(v)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Swap entries `i` and `i+1` (1-based).
    pub fn swapped(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Composition(v)
    }

    /// Number of pairs `i < j` with `η_i < η_j`.
    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] < p[j]).count()).sum()
    }

    /// All compositions of length `n` and weight `w`, lexicographically
    /// decreasing (so the partition-shaped ones come first).
    pub fn all_of_weight(n: usize, w: u32) -> Vec<Composition> {
        fn rec(n: usize, w: u32, cur: &mut Exponent, out: &mut Vec<Composition>) {
            if cur.len() + 1 == n {
                cur.push(w);
                out.push(Composition(cur.clone()));
                cur.pop();
                return;
            }
            for first in (0..=w).rev() {
                cur.push(first);
                rec(n, w - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if w == 0 {
                out.push(Composition(SmallVec::new()));
            }
            return out;
        }
        rec(n, w, &mut SmallVec::new(), &mut out);
        out
    }

    /// All compositions of length `n` with weight at most `max`, by weight
    /// and then lexicographically.
    pub fn all_up_to(n: usize, max: u32) -> Vec<Composition> {
        (0..=max)
            .flat_map(|w| {
                let mut v = Self::all_of_weight(n, w);
                v.reverse();
                v
            })
            .collect()
    }

    /// Partitions with at most `n` parts and weight `w`, padded to length `n`.
    pub fn partitions_of(n: usize, w: u32) -> Vec<Composition> {
        let mut v: Vec<_> = Self::all_of_weight(n, w).into_iter().filter(|c| c.is_partition()).collect();
        v.reverse();
        v
    }

    /// Distinct rearrangements, in increasing lexicographic order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut v = self.0.clone();
        v.sort_unstable();
        let mut out = vec![Composition(v.clone())];
        while next_permutation(&mut v) {
            out.push(Composition(v.clone()));
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_comparable(nu: &Composition, eta: &Composition) -> Result<()> {
    if nu.len() != eta.len() {
        return Err(Error::LengthMismatch { expected: eta.len(), found: nu.len() });
    }
    if nu.weight() != eta.weight() {
        return Err(Error::WeightMismatch { left: nu.weight(), right: eta.weight() });
    }
    Ok(())
}

fn dominated(nu: &[u32], eta: &[u32]) -> bool {
    let mut acc: i64 = 0;
    for (a, b) in eta.iter().zip(nu) {
        acc += i64::from(*a) - i64::from(*b);
        if acc < 0 {
            return false;
        }
    }
    true
}

/// Strict dominance `ν < η`.
pub fn dominance_less(nu: &Composition, eta: &Composition) -> Result<bool> {
    check_comparable(nu, eta)?;
    Ok(nu != eta && dominated(&nu.0, &eta.0))
}

/// The order `ν ≺ η`: compare partitions first, then the compositions.
pub fn prec_order(nu: &Composition, eta: &Composition) -> Result<bool> {
    check_comparable(nu, eta)?;
    let (np, ep) = (nu.partition(), eta.partition());
    if np != ep {
        return Ok(dominated(&np.0, &ep.0));
    }
    Ok(nu != eta && dominated(&nu.0, &eta.0))
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(Error::Parse("empty composition".into()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad composition entry {p:?}"))))
            .collect::<Result<Exponent>>()
            .map(Composition)
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition(v.into())
    }
}

impl From<&[u32]> for Composition {
    fn from(v: &[u32]) -> Self {
        Composition(v.into())
    }
}

impl<const N: usize> From<[u32; N]> for Composition {
    fn from(v: [u32; N]) -> Self {
        Composition(v.iter().copied().collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
