//! One-runner abaci, two-row symbols of charged bipartitions, the fused
//! abacus, elementary operations and e-periods.
//!
//! An abacus is a set of integers containing every sufficiently small integer
//! and no sufficiently large one. It is stored canonically as
//! `(charge, partition)`: the `j`-th largest bead is `part_j - j + charge + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Partition};

/// A one-runner abacus stored as `(charge, partition)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ChargedAbacus {
    charge: i64,
    partition: Partition,
}

impl ChargedAbacus {
    pub fn new(charge: i64, partition: Partition) -> Self {
        ChargedAbacus { charge, partition }
    }

    /// Builds the abacus whose beads are `beads` together with every integer
    /// below `floor`. Beads below `floor` are ignored.
    pub fn from_beads(floor: i64, beads: impl IntoIterator<Item = i64>) -> Self {
        let mut beads: Vec<i64> = beads.into_iter().filter(|&b| b >= floor).collect();
        beads.sort_unstable_by(|a, b| b.cmp(a));
        beads.dedup();
        let k = beads.len() as i64;
        let parts = beads
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - floor - (k - 1 - j as i64)) as usize)
            .collect();
        ChargedAbacus {
            charge: floor + k - 1,
            partition: Partition::new(parts).expect("distinct beads give a partition"),
        }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn partition_and_charge(&self) -> (Partition, i64) {
        (self.partition.clone(), self.charge)
    }

    /// The `j`-th largest bead, `j >= 1`.
    pub fn entry(&self, j: usize) -> i64 {
        assert!(j >= 1, "abacus entries are indexed from 1");
        self.partition.part(j - 1) as i64 - j as i64 + self.charge + 1
    }

    /// Every integer at or below this value is a bead.
    pub fn tail_top(&self) -> i64 {
        self.charge - self.partition.len() as i64
    }

    pub fn max(&self) -> i64 {
        self.entry(1)
    }

    /// Position (from 1) of `x` among the beads in decreasing order.
    pub fn index_of(&self, x: i64) -> Option<usize> {
        if x <= self.tail_top() {
            return Some((self.charge + 1 - x) as usize);
        }
        let len = self.partition.len();
        let (mut lo, mut hi) = (1usize, len);
        while lo <= hi {
            let mid = (lo + hi) / 2;
            let v = self.entry(mid);
            if v == x {
                return Some(mid);
            } else if v > x {
                lo = mid + 1;
            } else {
                if mid == 1 {
                    break;
                }
                hi = mid - 1;
            }
        }
        None
    }

    pub fn contains(&self, x: i64) -> bool {
        self.index_of(x).is_some()
    }

    /// Beads `>= floor` in decreasing order.
    pub fn beads_from(&self, floor: i64) -> Vec<i64> {
        (1..)
            .map(|j| self.entry(j))
            .take_while(|&b| b >= floor)
            .collect()
    }

    pub fn insert(&self, x: i64) -> Result<Self> {
        if self.contains(x) {
            return Err(Error::IllegalOperation(format!("{x} is already a bead")));
        }
        let floor = self.tail_top() + 1;
        let mut beads = self.beads_from(floor);
        beads.push(x);
        Ok(ChargedAbacus::from_beads(floor, beads))
    }

    pub fn remove(&self, x: i64) -> Result<Self> {
        if !self.contains(x) {
            return Err(Error::IllegalOperation(format!("{x} is not a bead")));
        }
        let floor = x.min(self.tail_top() + 1);
        let beads = self.beads_from(floor).into_iter().filter(|&b| b != x);
        Ok(ChargedAbacus::from_beads(floor, beads))
    }

    /// Ruler and bead line over `[from, to]`.
    pub fn render_window(&self, from: i64, to: i64) -> String {
        let width = [from, to]
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            + 1;
        let mut ruler = String::new();
        let mut beads = String::new();
        for x in from..=to {
            ruler.push_str(&format!("{x:>width$}"));
            let mark = if self.contains(x) { "●" } else { "·" };
            beads.push_str(&format!("{}{mark}", " ".repeat(width - 1)));
        }
        format!("{}\n{}", ruler.trim_end(), beads.trim_end())
    }

    /// Picture from one below the filled tail up to the largest bead.
    pub fn render(&self) -> String {
        let from = self.tail_top() - 1;
        let to = self.max().max(from);
        self.render_window(from, to)
    }
}

/// A pair of abaci; `row1` and `row2` are the first and second rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Symbol {
    pub row1: ChargedAbacus,
    pub row2: ChargedAbacus,
}

impl Symbol {
    pub fn new(row1: ChargedAbacus, row2: ChargedAbacus) -> Self {
        Symbol { row1, row2 }
    }

    pub fn row(&self, k: u8) -> &ChargedAbacus {
        match k {
            1 => &self.row1,
            2 => &self.row2,
            _ => panic!("symbol row {k} out of range"),
        }
    }

    pub fn bipartition(&self) -> Bipartition {
        Bipartition::new(self.row1.partition.clone(), self.row2.partition.clone())
    }

    pub fn charge(&self) -> (i64, i64) {
        (self.row1.charge, self.row2.charge)
    }

    pub fn max(&self) -> i64 {
        self.row1.max().max(self.row2.max())
    }

    /// Both rows contiguous: the symbol of an empty bipartition.
    pub fn is_empty_bipartition(&self) -> bool {
        self.row1.partition.is_empty() && self.row2.partition.is_empty()
    }

    /// Rows printed with row 2 on top, starting one below the lower of the
    /// two filled tails.
    pub fn render(&self) -> String {
        let from = self.row1.tail_top().min(self.row2.tail_top()) - 1;
        let line = |row: &ChargedAbacus| {
            let mut beads = row.beads_from(from);
            beads.reverse();
            let values: Vec<String> = beads.iter().map(|b| b.to_string()).collect();
            format!("⋯ {}", values.join(" "))
        };
        format!("{}\n{}", line(&self.row2), line(&self.row1))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Row `i` has entries `mu^i_j - j + c_i + 1`.
pub fn symbol_of(b: &Bipartition, charge: (i64, i64)) -> Symbol {
    Symbol::new(
        ChargedAbacus::new(charge.0, b.first.clone()),
        ChargedAbacus::new(charge.1, b.second.clone()),
    )
}

fn check_odd(e: usize) -> Result<()> {
    if e < 3 || e.is_multiple_of(2) {
        return Err(Error::Parameter(format!(
            "e must be odd and at least 3, got {e}"
        )));
    }
    Ok(())
}

/// The abacus `{2j + e : j in row 1} ∪ {2j : j in row 2}`.
pub fn fused_abacus(s: &Symbol, e: usize) -> Result<ChargedAbacus> {
    check_odd(e)?;
    let e = e as i64;
    let floor = (2 * s.row1.tail_top() + e + 1).min(2 * s.row2.tail_top() + 1);
    let odd = s
        .row1
        .beads_from((floor - e).div_euclid(2))
        .into_iter()
        .map(|j| 2 * j + e);
    let even = s
        .row2
        .beads_from(floor.div_euclid(2))
        .into_iter()
        .map(|j| 2 * j);
    Ok(ChargedAbacus::from_beads(floor, odd.chain(even)))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum OpKind {
    /// Move `j` from row 1 to row 2.
    A,
    /// Replace `j` in row 2 by `j - e` in row 1.
    B,
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpKind::A => "a",
            OpKind::B => "b",
        })
    }
}

pub fn elementary_op(s: &Symbol, kind: OpKind, j: i64, e: usize) -> Result<Symbol> {
    match kind {
        OpKind::A => {
            if !s.row1.contains(j) || s.row2.contains(j) {
                return Err(Error::IllegalOperation(format!(
                    "(a) needs {j} in row 1 and not in row 2"
                )));
            }
            Ok(Symbol::new(s.row1.remove(j)?, s.row2.insert(j)?))
        }
        OpKind::B => {
            let target = j - e as i64;
            if !s.row2.contains(j) || s.row1.contains(target) {
                return Err(Error::IllegalOperation(format!(
                    "(b) needs {j} in row 2 and {target} not in row 1"
                )));
            }
            Ok(Symbol::new(s.row1.insert(target)?, s.row2.remove(j)?))
        }
    }
}

/// Every `j` at which an operation of the given kind applies, largest first.
pub fn legal_positions(s: &Symbol, kind: OpKind, e: usize) -> Vec<i64> {
    match kind {
        OpKind::A => {
            let floor = s.row2.tail_top() + 1;
            s.row1
                .beads_from(floor)
                .into_iter()
                .filter(|&j| !s.row2.contains(j))
                .collect()
        }
        OpKind::B => {
            let floor = s.row1.tail_top() + 1 + e as i64;
            s.row2
                .beads_from(floor)
                .into_iter()
                .filter(|&j| !s.row1.contains(j - e as i64))
                .collect()
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementaryStep {
    pub symbol: Symbol,
    pub kind: OpKind,
    pub j: i64,
}

/// (a') on the largest eligible `j`; otherwise, when row 1 lies inside row 2,
/// (b') on the largest eligible `j`.
pub fn canonical_elementary_op(s: &Symbol, e: usize) -> Option<ElementaryStep> {
    if let Some(&j) = legal_positions(s, OpKind::A, e).first() {
        let symbol = elementary_op(s, OpKind::A, j, e).expect("position is legal");
        return Some(ElementaryStep {
            symbol,
            kind: OpKind::A,
            j,
        });
    }
    let j = *legal_positions(s, OpKind::B, e).first()?;
    let symbol = elementary_op(s, OpKind::B, j, e).expect("position is legal");
    Some(ElementaryStep {
        symbol,
        kind: OpKind::B,
        j,
    })
}

/// Applies canonical operations until none is left.
pub fn reduce_canonically(s: &Symbol, e: usize) -> (Symbol, Vec<ElementaryStep>) {
    let mut current = s.clone();
    let mut steps = Vec::new();
    while let Some(step) = canonical_elementary_op(&current, e) {
        current = step.symbol.clone();
        steps.push(step);
    }
    (current, steps)
}

/// New `t` after an operation, and whether the bipartition components must
/// be exchanged to read off the new barred quotient.
pub fn op_effect_on_t(t: usize, kind: OpKind) -> (usize, bool) {
    let next = match kind {
        OpKind::B => t + 2,
        OpKind::A => match t {
            0 => 1,
            1 => 0,
            _ => t - 2,
        },
    };
    (next, next % 2 != t % 2)
}

/// Cells `(part index, row)` holding `top, top - 1, ..., top - e + 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EPeriod {
    pub cells: Vec<(usize, u8)>,
    pub top: i64,
}

impl EPeriod {
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.cells.len() as i64).map(move |l| self.top - l)
    }
}

/// The e-period starting at the largest entry of the symbol, if any.
///
/// Values go down from the maximum; a value present in row 1 must be taken
/// from row 1, and once row 1 has been used the rest must come from row 1.
pub fn find_e_period(s: &Symbol, e: usize) -> Option<EPeriod> {
    let top = s.max();
    let mut cells = Vec::with_capacity(e);
    let mut row = 2u8;
    for l in 0..e as i64 {
        let v = top - l;
        if let Some(i) = s.row1.index_of(v) {
            row = 1;
            cells.push((i, 1));
        } else if row == 2 {
            cells.push((s.row2.index_of(v)?, 2));
        } else {
            return None;
        }
    }
    Some(EPeriod { cells, top })
}

pub fn remove_period(s: &Symbol, period: &EPeriod) -> Symbol {
    let mut row1 = s.row1.clone();
    let mut row2 = s.row2.clone();
    for (v, &(_, k)) in period.values().zip(&period.cells) {
        let row = if k == 1 { &mut row1 } else { &mut row2 };
        *row = row.remove(v).expect("period values are beads");
    }
    Symbol::new(row1, row2)
}

/// Peels periods until the bipartition is empty (true) or none exists.
pub fn is_totally_periodic(s: &Symbol, e: usize) -> bool {
    let mut current = s.clone();
    loop {
        if current.is_empty_bipartition() {
            return true;
        }
        match find_e_period(&current, e) {
            Some(period) => current = remove_period(&current, &period),
            None => return false,
        }
    }
}
