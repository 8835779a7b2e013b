//! Transcribed published graphs, embedded at compile time.
//!
//! Format: `#` comments, `rank <n>: <label> <label> ...` lines and
//! `edge <from> -> <to>` lines.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Partition};

pub const BRANCHING_T1_E3: &str = include_str!("../fixtures/branching_t1_e3.txt");
pub const BRANCHING_T2_E3: &str = include_str!("../fixtures/branching_t2_e3.txt");
pub const CRYSTAL_00_E3: &str = include_str!("../fixtures/crystal_00_e3.txt");

#[derive(Clone, Debug)]
pub struct FixtureGraph<T> {
    pub layers: Vec<(usize, Vec<T>)>,
    pub edges: Vec<(T, T)>,
}

impl<T: Clone + Eq + Hash + Ord> FixtureGraph<T> {
    pub fn vertices(&self) -> Vec<T> {
        self.layers
            .iter()
            .flat_map(|(_, v)| v.iter().cloned())
            .collect()
    }

    pub fn layer(&self, rank: usize) -> BTreeSet<T> {
        self.layers
            .iter()
            .filter(|(r, _)| *r == rank)
            .flat_map(|(_, v)| v.iter().cloned())
            .collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(T, T)> {
        self.edges.iter().cloned().collect()
    }

    /// Vertices with outgoing edges only.
    pub fn sources(&self) -> BTreeSet<T> {
        let targets: HashSet<&T> = self.edges.iter().map(|(_, b)| b).collect();
        let starts: HashSet<&T> = self.edges.iter().map(|(a, _)| a).collect();
        self.vertices()
            .into_iter()
            .filter(|v| !targets.contains(v) && starts.contains(v))
            .collect()
    }

    /// Vertices with no incoming edges, isolated ones included.
    pub fn roots(&self) -> BTreeSet<T> {
        let targets: HashSet<&T> = self.edges.iter().map(|(_, b)| b).collect();
        self.vertices()
            .into_iter()
            .filter(|v| !targets.contains(v))
            .collect()
    }

    pub fn reachable_from(&self, root: &T) -> BTreeSet<T> {
        let mut out: HashMap<&T, Vec<&T>> = HashMap::new();
        for (a, b) in &self.edges {
            out.entry(a).or_default().push(b);
        }
        let mut seen = BTreeSet::from([root.clone()]);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in out.get(v).map(Vec::as_slice).unwrap_or(&[]) {
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }
}

pub fn parse_fixture<T>(text: &str) -> Result<FixtureGraph<T>>
where
    T: FromStr<Err = Error>,
{
    let mut layers = Vec::new();
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad =
            |reason: &str| Error::parse("fixture line", raw, format!("line {}: {reason}", k + 1));
        if let Some(rest) = line.strip_prefix("rank ") {
            let (rank, labels) = rest.split_once(':').ok_or_else(|| bad("missing ':'"))?;
            let rank = rank.trim().parse().map_err(|_| bad("bad rank"))?;
            let labels = labels
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<Vec<T>>>()?;
            layers.push((rank, labels));
        } else if let Some(rest) = line.strip_prefix("edge ") {
            let (a, b) = rest.split_once("->").ok_or_else(|| bad("missing '->'"))?;
            edges.push((a.trim().parse()?, b.trim().parse()?));
        } else {
            return Err(bad("expected 'rank' or 'edge'"));
        }
    }
    Ok(FixtureGraph { layers, edges })
}

pub fn branching_t1_e3() -> FixtureGraph<Partition> {
    parse_fixture(BRANCHING_T1_E3).expect("embedded fixture parses")
}

pub fn branching_t2_e3() -> FixtureGraph<Partition> {
    parse_fixture(BRANCHING_T2_E3).expect("embedded fixture parses")
}

pub fn crystal_00_e3() -> FixtureGraph<Bipartition> {
    parse_fixture(CRYSTAL_00_E3).expect("embedded fixture parses")
}
