//! Partitions, beta-sets, cores and quotients.
//!
//! A partition is stored as its weakly decreasing list of positive parts.
//! Most of the calculus goes through beta-sets: `part_j + (s - j)` for a
//! chosen size `s`. Quotients are always read from a beta-set of odd
//! cardinality, with runner 0 holding the even entries and runner 1 the odd
//! ones.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parameter(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Beta-set of the given size.
    pub fn beta_set(&self, size: usize) -> Result<BetaSet> {
        beta_set(self, size)
    }

    /// Beta-set of the smallest odd size that fits the partition.
    pub fn odd_beta_set(&self) -> BetaSet {
        let size = if self.len() % 2 == 1 {
            self.len()
        } else {
            self.len() + 1
        };
        beta_set(self, size).expect("size covers all parts")
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

/// Number of partitions of each integer `0..=n`.
pub fn partition_counts(n: usize) -> Vec<u128> {
    let mut counts = vec![0u128; n + 1];
    counts[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            counts[total] = counts[total].saturating_add(counts[total - part]);
        }
    }
    counts
}

/// Number of bipartitions of each integer `0..=n`.
pub fn bipartition_counts(n: usize) -> Vec<u128> {
    let p = partition_counts(n);
    (0..=n)
        .map(|m| {
            (0..=m).fold(0u128, |acc, k| {
                acc.saturating_add(p[k].saturating_mul(p[m - k]))
            })
        })
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let value = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == value).count();
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{value}^{run}")?;
            } else {
                write!(f, "{value}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Grammar: comma separated parts, each optionally followed by `^k`;
    /// `-` (or nothing) is the empty partition. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() || text == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for item in text.split(',') {
            let (value, mult) = match item.split_once('^') {
                Some((v, m)) => (v, m),
                None => (item, "1"),
            };
            let value: usize = value
                .parse()
                .map_err(|_| Error::parse("partition", s, format!("bad part {item:?}")))?;
            let mult: usize = mult.parse().map_err(|_| {
                Error::parse("partition", s, format!("bad multiplicity in {item:?}"))
            })?;
            if value == 0 {
                return Err(Error::parse("partition", s, "parts must be positive"));
            }
            parts.extend(std::iter::repeat_n(value, mult));
        }
        Partition::new(parts)
            .map_err(|_| Error::parse("partition", s, "parts must be weakly decreasing"))
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Parses a partition; see [`Partition::from_str`] for the grammar.
pub fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}

pub fn format_partition(p: &Partition) -> String {
    p.to_string()
}

/// Strictly decreasing list of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    /// Accepts entries in any order; rejects repeats.
    pub fn new(mut entries: Vec<usize>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parameter(format!(
                "beta-set {entries:?} has repeated entries"
            )));
        }
        Ok(BetaSet { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.entries.binary_search_by(|probe| x.cmp(probe)).is_ok()
    }

    pub fn partition(&self) -> Partition {
        partition_of_beta_set(self)
    }
}

pub fn beta_set(p: &Partition, size: usize) -> Result<BetaSet> {
    if size < p.len() {
        return Err(Error::BetaSetTooSmall {
            size,
            parts: p.len(),
        });
    }
    let entries = (0..size).map(|j| p.part(j) + (size - 1 - j)).collect();
    Ok(BetaSet { entries })
}

/// Each entry contributes the number of holes below it.
pub fn partition_of_beta_set(b: &BetaSet) -> Partition {
    let k = b.entries.len();
    let parts = b
        .entries
        .iter()
        .enumerate()
        .map(|(j, &x)| x - (k - 1 - j))
        .collect();
    Partition::new(parts).expect("strictly decreasing entries give a partition")
}

/// Slides the beads of every residue class mod `e` as far down as they go.
pub fn e_core(p: &Partition, e: usize) -> Partition {
    assert!(e >= 1, "e must be positive");
    let beta = p.odd_beta_set();
    let mut per_runner = vec![0usize; e];
    for &x in beta.entries() {
        per_runner[x % e] += 1;
    }
    let mut entries = Vec::with_capacity(beta.len());
    for (r, &count) in per_runner.iter().enumerate() {
        entries.extend((0..count).map(|k| r + k * e));
    }
    BetaSet::new(entries)
        .expect("slid beads are distinct")
        .partition()
}

pub fn e_weight(p: &Partition, e: usize) -> usize {
    (p.size() - e_core(p, e).size()) / e
}

/// The triangular partition `(t, t-1, ..., 1)`.
pub fn delta(t: usize) -> Partition {
    Partition {
        parts: (1..=t).rev().collect(),
    }
}

/// If `p` is a triangular partition, returns its side length.
pub fn triangular_side(p: &Partition) -> Option<usize> {
    let t = p.len();
    (p.parts.iter().enumerate().all(|(i, &x)| x == t - i)).then_some(t)
}

/// An ordered pair of partitions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn rank(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty() && self.second.is_empty()
    }

    pub fn component(&self, j: usize) -> &Partition {
        match j {
            1 => &self.first,
            2 => &self.second,
            _ => panic!("bipartition component index {j} out of range"),
        }
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// All bipartitions of `n`.
    pub fn all(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            let firsts = Partition::all(k);
            let seconds = Partition::all(n - k);
            for a in &firsts {
                for b in &seconds {
                    out.push(Bipartition::new(a.clone(), b.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.first, self.second)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bipartition({self})")
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// `<partition>.<partition>`, e.g. `1^2.1` or `-.-`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('.')
            .ok_or_else(|| Error::parse("bipartition", s, "expected '<partition>.<partition>'"))?;
        if b.contains('.') {
            return Err(Error::parse("bipartition", s, "more than one '.'"));
        }
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

impl From<Bipartition> for String {
    fn from(b: Bipartition) -> String {
        b.to_string()
    }
}

impl TryFrom<String> for Bipartition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Splits an odd beta-set into its even (runner 0) and odd (runner 1) parts.
fn runners(beta: &BetaSet) -> (BetaSet, BetaSet) {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for &x in beta.entries() {
        if x % 2 == 0 {
            even.push(x / 2);
        } else {
            odd.push(x / 2);
        }
    }
    (BetaSet { entries: even }, BetaSet { entries: odd })
}

/// The 2-quotient, read from an odd-size beta-set as (runner 0, runner 1).
pub fn two_quotient(p: &Partition) -> Bipartition {
    let (even, odd) = runners(&p.odd_beta_set());
    Bipartition::new(even.partition(), odd.partition())
}

/// Returns `t` with 2-core `Delta_t` and the 2-quotient, components swapped
/// when `t` is odd.
pub fn bar_two_quotient(p: &Partition) -> (usize, Bipartition) {
    let (even, odd) = runners(&p.odd_beta_set());
    let diff = even.len() as i64 - odd.len() as i64;
    let quotient = Bipartition::new(even.partition(), odd.partition());
    if diff > 0 {
        ((diff - 1) as usize, quotient)
    } else {
        ((-diff) as usize, quotient.swapped())
    }
}

/// The unique partition with 2-core `Delta_t` whose barred 2-quotient is `b`.
pub fn phi(t: usize, b: &Bipartition) -> Partition {
    // Runner sizes for an odd beta-set: even - odd = t + 1 (t even), -t (t odd).
    let (on_even, on_odd, n_even, n_odd) = if t.is_multiple_of(2) {
        let n_odd = b.second.len().max(b.first.len().saturating_sub(t + 1));
        (&b.first, &b.second, n_odd + t + 1, n_odd)
    } else {
        let n_odd = b.first.len().max(b.second.len() + t);
        (&b.second, &b.first, n_odd - t, n_odd)
    };
    let even = beta_set(on_even, n_even).expect("runner size covers parts");
    let odd = beta_set(on_odd, n_odd).expect("runner size covers parts");
    let entries = even
        .entries()
        .iter()
        .map(|&x| 2 * x)
        .chain(odd.entries().iter().map(|&x| 2 * x + 1))
        .collect();
    BetaSet::new(entries)
        .expect("runners are disjoint")
        .partition()
}

/// Replace `beta_entry` by `beta_entry - length` in a fixed beta-set of a
/// partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookSpec {
    pub beta_entry: usize,
    pub length: usize,
    /// Size of the beta-set the entry refers to; `None` means the smallest
    /// odd size.
    pub beta_size: Option<usize>,
}

impl HookSpec {
    pub fn new(beta_entry: usize, length: usize) -> Self {
        HookSpec {
            beta_entry,
            length,
            beta_size: None,
        }
    }

    pub fn with_beta_size(mut self, size: usize) -> Self {
        self.beta_size = Some(size);
        self
    }
}

pub fn remove_e_hook(p: &Partition, h: HookSpec) -> Result<Partition> {
    if h.length == 0 {
        return Err(Error::InvalidHook("hook length must be positive".into()));
    }
    let beta = match h.beta_size {
        Some(size) => p.beta_set(size)?,
        None => p.odd_beta_set(),
    };
    if !beta.contains(h.beta_entry) {
        return Err(Error::InvalidHook(format!(
            "{} is not in the beta-set {:?}",
            h.beta_entry,
            beta.entries()
        )));
    }
    let target = h.beta_entry.checked_sub(h.length).ok_or_else(|| {
        Error::InvalidHook(format!("{} - {} is negative", h.beta_entry, h.length))
    })?;
    if beta.contains(target) {
        return Err(Error::InvalidHook(format!("{target} is already a bead")));
    }
    let entries = beta
        .entries()
        .iter()
        .map(|&x| if x == h.beta_entry { target } else { x })
        .collect();
    Ok(BetaSet::new(entries)?.partition())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn beta_set_examples() {
        let lambda = p("15,14,13,10^3,1");
        let b = beta_set(&lambda, 9).unwrap();
        assert_eq!(b.entries(), &[23, 21, 19, 15, 14, 13, 3, 1, 0]);
        assert_eq!(
            beta_set(&Partition::empty(), 3).unwrap().entries(),
            &[2, 1, 0]
        );
        assert_eq!(beta_set(&p("2,1"), 3).unwrap().entries(), &[4, 2, 0]);
        assert_eq!(
            beta_set(&p("2,1"), 1),
            Err(Error::BetaSetTooSmall { size: 1, parts: 2 })
        );
    }

    #[test]
    fn partition_of_beta_set_examples() {
        let b = BetaSet::new(vec![0, 1, 3, 13, 14, 15, 19, 21, 23]).unwrap();
        assert_eq!(b.partition(), p("15,14,13,10^3,1"));
        assert_eq!(
            BetaSet::new(vec![2, 1, 0]).unwrap().partition(),
            Partition::empty()
        );
        assert_eq!(BetaSet::new(vec![4, 2, 0]).unwrap().partition(), p("2,1"));
        assert!(BetaSet::new(vec![1, 1]).is_err());
    }

    #[test]
    fn cores_and_weights() {
        assert_eq!(e_core(&p("15,14,13,10^3,1"), 2), p("5,4,3,2,1"));
        assert_eq!(e_core(&p("2,1"), 2), p("2,1"));
        assert_eq!(e_core(&p("1^3"), 3), Partition::empty());
        assert_eq!(e_weight(&p("1^3"), 3), 1);
        assert_eq!(e_weight(&Partition::empty(), 3), 0);
        assert_eq!(e_core(&p("15,14,13,10^3,1"), 3), p("1"));
        assert_eq!(e_weight(&p("15,14,13,10^3,1"), 3), 24);
    }

    #[test]
    fn quotients() {
        let q = two_quotient(&p("1^3"));
        assert_eq!(q, Bipartition::new(p("1"), Partition::empty()));
        assert_eq!(two_quotient(&Partition::empty()), Bipartition::empty());
        let q = two_quotient(&p("15,14,13,10^3,1"));
        assert_eq!(q, Bipartition::new(p("6"), p("5^3,4^2")));

        let (t, b) = bar_two_quotient(&p("15,14,13,10^3,1"));
        assert_eq!((t, b), (5, "5^3,4^2.6".parse().unwrap()));
        assert_eq!(bar_two_quotient(&p("1^4")), (0, "-.1^2".parse().unwrap()));
        for t in 0..8 {
            assert_eq!(bar_two_quotient(&delta(t)), (t, Bipartition::empty()));
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(5, &"5^3,4^2.6".parse().unwrap()), p("15,14,13,10^3,1"));
        assert_eq!(phi(3, &"5^2,4^2.8,6".parse().unwrap()), p("13^3,10^3,1"));
        for t in 0..8 {
            assert_eq!(phi(t, &Bipartition::empty()), delta(t));
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(0), Partition::empty());
        assert_eq!(delta(2), p("2,1"));
        assert_eq!(delta(5), p("5,4,3,2,1"));
        assert_eq!(triangular_side(&p("3,2,1")), Some(3));
        assert_eq!(triangular_side(&Partition::empty()), Some(0));
        assert_eq!(triangular_side(&p("2,2")), None);
    }

    #[test]
    fn hook_removal() {
        let lambda = p("15,14,13,10^3,1");
        let hook = HookSpec::new(23, 3).with_beta_size(9);
        assert_eq!(remove_e_hook(&lambda, hook).unwrap(), p("13^3,10^3,1"));
        assert_eq!(
            remove_e_hook(&p("1^3"), HookSpec::new(3, 3)).unwrap(),
            Partition::empty()
        );
        // (2,1) has odd beta-set {4,2,0} and no 2-hooks.
        for x in [0, 2, 4, 7] {
            assert!(matches!(
                remove_e_hook(&p("2,1"), HookSpec::new(x, 2)),
                Err(Error::InvalidHook(_))
            ));
        }
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(p("15,14,13,10^3,1").parts(), &[15, 14, 13, 10, 10, 10, 1]);
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("1^7").parts(), &[1; 7]);
        assert_eq!(p(" 3 , 1^2 ").to_string(), "3,1^2");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("2^x".parse::<Partition>().is_err());
        let b: Bipartition = "1^2.1".parse().unwrap();
        assert_eq!(b.to_string(), "1^2.1");
        assert!("1".parse::<Bipartition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts = partition_counts(10);
        for (n, &count) in counts.iter().enumerate() {
            assert_eq!(Partition::all(n).len() as u128, count);
        }
        let bcounts = bipartition_counts(6);
        assert_eq!(bcounts, vec![1, 2, 5, 10, 20, 36, 65]);
        for (n, &count) in bcounts.iter().enumerate() {
            assert_eq!(Bipartition::all(n).len() as u128, count);
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=9 {
            for lambda in Partition::all(n) {
                assert_eq!(lambda.conjugate().conjugate(), lambda);
            }
        }
    }
}
