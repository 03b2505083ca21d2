//! Partitions with at most `r` parts, their orders and box moves, and the
//! monomial-symmetric basis.

mod sympoly;

pub use sympoly::{elementary_e, power_sum_p1, SymPoly, SymPolyRepr, SymTermRepr};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing tuple of nonnegative integers, zero-padded to length `r`.
///
/// Ordered graded-lexicographically: by weight, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Partition {
    /// Accepts exactly `r` parts that are weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.is_empty() {
            return Err(Error::InvalidInput("a partition needs r >= 1 slots".into()));
        }
        Ok(Partition(parts))
    }

    /// Pads `parts` with zeros to length `r`.
    pub fn padded(parts: &[u32], r: usize) -> Result<Self> {
        if parts.len() > r {
            return Err(Error::InvalidInput(format!(
                "partition longer than r: {} parts for r = {r}",
                parts.len()
            )));
        }
        let mut v = parts.to_vec();
        v.resize(r, 0);
        Self::new(v)
    }

    /// Parses the comma list literal `"2,1,0"`; trailing zeros are optional.
    pub fn parse(s: &str, r: usize) -> Result<Self> {
        let s = s.trim();
        let parts = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidInput(format!("bad partition literal {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::padded(&parts, r)
    }

    pub fn zero(r: usize) -> Self {
        Partition(vec![0; r])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// Number of distinct rearrangements of the parts.
    pub fn orbit_size(&self) -> u64 {
        let mut size: u64 = (1..=self.0.len() as u64).product();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            size /= (1..=(j - i) as u64).product::<u64>();
            i = j;
        }
        size
    }

    /// All distinct rearrangements of the parts.
    pub fn orbit(&self) -> Vec<Vec<u32>> {
        let mut cur: Vec<u32> = self.0.iter().rev().copied().collect();
        let mut out = vec![cur.clone()];
        while next_permutation(&mut cur) {
            out.push(cur.clone());
        }
        out
    }

    fn check_arity(&self, other: &Partition) -> Result<()> {
        if self.r() != other.r() {
            return Err(Error::ArityMismatch {
                left: self.r(),
                right: other.r(),
            });
        }
        Ok(())
    }

    /// Dominance order `self <= other`; false across different weights.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        self.check_arity(other)?;
        if self.weight() != other.weight() {
            return Ok(false);
        }
        let (mut a, mut b) = (0u32, 0u32);
        for (x, y) in self.0.iter().zip(&other.0) {
            a += x;
            b += y;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Inclusion order `self ⊆ other`.
    pub fn includes_in(&self, other: &Partition) -> Result<bool> {
        self.check_arity(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// The integer vector `self ± ε_J` (indices in `subset` are 0-based).
    pub fn shifted(&self, subset: &[usize], sign: Sign) -> Vec<i64> {
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        for &j in subset {
            v[j] += sign.as_i64();
        }
        v
    }

    /// `self ± ε_J` when it is again a partition.
    pub fn add_boxes(&self, subset: &[usize], sign: Sign) -> Option<Partition> {
        Self::from_vector(&self.shifted(subset, sign))
    }

    /// Interprets an integer vector as a partition if it is one.
    pub fn from_vector(v: &[i64]) -> Option<Partition> {
        if v.iter().any(|&x| x < 0) || v.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition(v.iter().map(|&x| x as u32).collect()))
    }

    pub fn as_vector(&self) -> Vec<i64> {
        self.0.iter().map(|&p| p as i64).collect()
    }
}

/// `a ⊆ b` as a free function.
pub fn includes(a: &Partition, b: &Partition) -> Result<bool> {
    a.includes_in(b)
}

pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    a.dominance_leq(b)
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// `(r-1, r-2, …, 1, 0)`.
pub fn staircase(r: usize) -> Partition {
    Partition((0..r as u32).rev().collect())
}

/// Partitions of `n` with at most `r` parts, lexicographically descending.
pub fn enumerate_partitions(n: u32, r: usize) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Partition(cur.clone()));
            }
            return;
        }
        // the remaining slots can hold at most slots*max
        if remaining > max.saturating_mul(slots as u32) {
            return;
        }
        for p in (0..=max.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    rec(n, n, r, &mut Vec::with_capacity(r), &mut out);
    out
}

/// All partitions of weight at most `n`, by weight and then descending.
pub fn partitions_up_to(n: u32, r: usize) -> Vec<Partition> {
    (0..=n).flat_map(|w| enumerate_partitions(w, r)).collect()
}

/// All partitions with largest part at most `height`.
pub fn partitions_in_box(height: u32, r: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=height * r as u32)
        .flat_map(|w| enumerate_partitions(w, r))
        .filter(|p| p.parts()[0] <= height)
        .collect();
    out.sort();
    out
}

/// All `k`-element subsets of `0..r`, lexicographic.
pub fn subsets_of_size(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            if r - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= r {
        rec(0, r, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All subsets of `0..r`, by size.
pub fn all_subsets(r: usize) -> Vec<Vec<usize>> {
    (0..=r).flat_map(|k| subsets_of_size(r, k)).collect()
}

pub fn complement(subset: &[usize], r: usize) -> Vec<usize> {
    (0..r).filter(|i| !subset.contains(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 1, 1]).dominance_leq(&p(&[3, 1, 0])).unwrap());
        assert!(p(&[2, 1]).dominance_leq(&p(&[2, 1])).unwrap());
        assert!(!p(&[1, 1]).dominance_leq(&p(&[2, 1])).unwrap());
        assert!(matches!(
            p(&[1, 0]).dominance_leq(&p(&[1, 0, 0])),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn inclusion_examples() {
        assert!(p(&[1, 1]).includes_in(&p(&[2, 1])).unwrap());
        assert!(!p(&[2, 0]).includes_in(&p(&[1, 1])).unwrap());
        assert!(Partition::zero(3).includes_in(&p(&[4, 2, 0])).unwrap());
    }

    #[test]
    fn box_moves() {
        assert_eq!(
            p(&[2, 2, 1]).add_boxes(&[0, 2], Sign::Plus),
            Some(p(&[3, 2, 2]))
        );
        assert_eq!(p(&[1, 1]).add_boxes(&[1], Sign::Plus), None);
        assert_eq!(p(&[1, 0]).add_boxes(&[0], Sign::Minus), Some(p(&[0, 0])));
        assert_eq!(p(&[1, 0]).add_boxes(&[1], Sign::Minus), None);
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(1), p(&[0]));
        assert_eq!(staircase(2), p(&[1, 0]));
        assert_eq!(staircase(3), p(&[2, 1, 0]));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(2, 2), vec![p(&[2, 0]), p(&[1, 1])]);
        assert_eq!(enumerate_partitions(0, 3), vec![Partition::zero(3)]);
        assert_eq!(
            enumerate_partitions(3, 3),
            vec![p(&[3, 0, 0]), p(&[2, 1, 0]), p(&[1, 1, 1])]
        );
        // p(7) restricted to 3 parts
        assert_eq!(enumerate_partitions(7, 3).len(), 8);
    }

    #[test]
    fn box_enumeration_counts() {
        // partitions in an h x r box: C(h+r, r)
        assert_eq!(partitions_in_box(3, 2).len(), 10);
        assert_eq!(partitions_in_box(4, 3).len(), 35);
    }

    #[test]
    fn orbits() {
        assert_eq!(p(&[2, 1, 1]).orbit_size(), 3);
        assert_eq!(p(&[2, 1, 1]).orbit().len(), 3);
        assert_eq!(p(&[3, 2, 1]).orbit().len(), 6);
        assert_eq!(Partition::zero(4).orbit(), vec![vec![0; 4]]);
    }

    #[test]
    fn parsing() {
        assert_eq!(Partition::parse("2,1", 3).unwrap(), p(&[2, 1, 0]));
        assert!(Partition::parse("1,0,0", 2).is_err());
        assert!(Partition::parse("1,2", 2).is_err());
        assert_eq!(Partition::parse("", 2).unwrap(), Partition::zero(2));
    }

    #[test]
    fn subsets() {
        assert_eq!(
            subsets_of_size(3, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(all_subsets(3).len(), 8);
        assert_eq!(subsets_of_size(2, 3), Vec::<Vec<usize>>::new());
    }
}
