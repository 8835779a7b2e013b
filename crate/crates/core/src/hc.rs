//! Predicted weak Harish-Chandra series of unipotent modules of finite
//! unitary groups, read off from crystal components.
//!
//! Everything here is a prediction: cuspidality is conjectural on the group
//! side and only the crystal combinatorics is computed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystal::{e_tilde, is_highest_weight, ChargedBipartition};
use crate::error::{Error, Result};
use crate::partitions::{
    bar_two_quotient, delta, e_core, e_weight, phi, triangular_side, Bipartition, Partition,
};
use crate::symbols::{is_totally_periodic, symbol_of};

fn check_odd(e: usize) -> Result<()> {
    if e < 3 || e.is_multiple_of(2) {
        return Err(Error::Parameter(format!(
            "e must be odd and at least 3, got {e}"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HcContext {
    pub e: usize,
    pub n: usize,
    pub iota: usize,
}

impl HcContext {
    pub fn new(e: usize, n: usize) -> Result<Self> {
        check_odd(e)?;
        Ok(HcContext { e, n, iota: n % 2 })
    }

    /// Values of `t` whose 2-core fits into `n` with the right parity.
    pub fn admissible_t(&self) -> Vec<usize> {
        (0..)
            .map(|t| (t, t * (t + 1) / 2))
            .take_while(|&(_, r)| r <= self.n)
            .filter(|&(_, r)| (self.n - r).is_multiple_of(2))
            .map(|(t, _)| t)
            .collect()
    }
}

/// `(t + (1 - e)/2, 0)`.
pub fn hc_charge(t: usize, e: usize) -> Result<(i64, i64)> {
    check_odd(e)?;
    Ok((t as i64 - (e as i64 - 1) / 2, 0))
}

/// The crystal vertex labelling `lambda`, with its 2-core exponent `t`.
pub fn crystal_vertex(lambda: &Partition, e: usize) -> Result<(usize, ChargedBipartition)> {
    let (t, mu) = bar_two_quotient(lambda);
    Ok((t, ChargedBipartition::new(mu, hc_charge(t, e)?)))
}

pub fn predict_weakly_cuspidal(lambda: &Partition, e: usize) -> Result<bool> {
    let (_, v) = crystal_vertex(lambda, e)?;
    Ok(is_highest_weight(&v, e))
}

/// Follows `e_tilde` edges back to the source of the component.
pub fn highest_weight_ancestor(v: &ChargedBipartition, e: usize) -> ChargedBipartition {
    let mut current = v.clone();
    while let Some(parent) = (0..e).find_map(|i| e_tilde(&current, e, i)) {
        current = parent;
    }
    current
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeriesPrediction {
    pub cuspidal_label: Partition,
    pub members: Vec<Partition>,
    pub t: usize,
    /// The `s` with e-core of the cuspidal label equal to the staircase of side `s`.
    pub s: Option<usize>,
    /// Failed invariants, empty when everything checks out.
    pub violations: Vec<String>,
}

impl SeriesPrediction {
    /// `Q = q^(2s+1)`.
    pub fn hecke_exponent(&self) -> Option<usize> {
        self.s.map(|s| 2 * s + 1)
    }
}

fn series_for_t(n: usize, t: usize, e: usize) -> Result<Vec<SeriesPrediction>> {
    let charge = hc_charge(t, e)?;
    let m = (n - t * (t + 1) / 2) / 2;
    let mut groups: BTreeMap<(usize, String), (Bipartition, Vec<Partition>)> = BTreeMap::new();
    for mu in Bipartition::all(m) {
        let lambda = phi(t, &mu);
        let hw = highest_weight_ancestor(&ChargedBipartition::new(mu, charge), e);
        let key = (hw.rank(), hw.bipartition.to_string());
        groups
            .entry(key)
            .or_insert_with(|| (hw.bipartition.clone(), Vec::new()))
            .1
            .push(lambda);
    }
    let core = delta(t);
    Ok(groups
        .into_values()
        .map(|(hw, mut members)| {
            members.sort_by(|a, b| b.cmp(a));
            let cuspidal_label = phi(t, &hw);
            let mut violations = Vec::new();
            for lambda in &members {
                if crate::partitions::e_core(lambda, 2) != core {
                    violations.push(format!("{lambda} does not have 2-core {core}"));
                }
            }
            let s = triangular_side(&e_core(&cuspidal_label, e));
            if s.is_none() {
                violations.push(format!("{e}-core of {cuspidal_label} is not a 2-core"));
            }
            SeriesPrediction {
                cuspidal_label,
                members,
                t,
                s,
                violations,
            }
        })
        .collect())
}

/// Splits the partitions of `n` into predicted series, one per crystal
/// component meeting rank `n`.
pub fn predict_series(n: usize, e: usize) -> Result<Vec<SeriesPrediction>> {
    let ctx = HcContext::new(e, n)?;
    let per_t: Vec<Vec<SeriesPrediction>> = ctx
        .admissible_t()
        .into_par_iter()
        .map(|t| series_for_t(n, t, e))
        .collect::<Result<_>>()?;
    Ok(per_t.into_iter().flatten().collect())
}

/// Whether the e-core of a predicted cuspidal label is a staircase, and its side.
pub fn cuspidal_ecore_check(lambda: &Partition, e: usize) -> Result<(bool, Option<usize>)> {
    if !predict_weakly_cuspidal(lambda, e)? {
        return Err(Error::Domain(format!(
            "{lambda} is not predicted weakly cuspidal for e = {e}"
        )));
    }
    let s = triangular_side(&e_core(lambda, e));
    Ok((s.is_some(), s))
}

/// The `s` in `Q = q^(2s+1)`.
pub fn hecke_parameter_exponent(lambda: &Partition, e: usize) -> Result<usize> {
    match cuspidal_ecore_check(lambda, e)? {
        (true, Some(s)) => Ok(s),
        _ => Err(Error::ConjectureViolation(format!(
            "{e}-core {} of cuspidal label {lambda} is not a 2-core",
            e_core(lambda, e)
        ))),
    }
}

fn staircase_with_ones(top: usize, ones: usize) -> Partition {
    let mut parts: Vec<usize> = (2..=top).rev().collect();
    parts.extend(std::iter::repeat_n(1, ones));
    Partition::new(parts).expect("staircase with a tail of ones")
}

/// The two cuspidal labels of e-weight one with 2-core exponent `t`.
pub fn weight_one_cuspidals(t: usize, e: usize) -> Result<Vec<Partition>> {
    check_odd(e)?;
    let top = (e - 1) / 2;
    if t > top {
        return Err(Error::Parameter(format!(
            "t = {t} exceeds {top} for e = {e}"
        )));
    }
    let mu = staircase_with_ones(t, if t == 0 { e } else { e + 1 });
    let mut out = vec![mu.clone()];
    if t < top {
        out.push(staircase_with_ones(t + 2, e - 2 * t - 2));
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

pub fn steinberg_cuspidal(n: usize, e: usize) -> Result<bool> {
    check_odd(e)?;
    Ok(n.is_multiple_of(e) || (n >= 1 && (n - 1).is_multiple_of(e)))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SteinbergCheck {
    pub by_operators: bool,
    pub by_periods: bool,
    pub by_divisibility: bool,
}

impl SteinbergCheck {
    pub fn agree(&self) -> bool {
        self.by_operators == self.by_divisibility && self.by_periods == self.by_divisibility
    }
}

/// Highest weight test for `(-, 1^m)` at charge `(t + (1-e)/2, 0)` three ways.
pub fn steinberg_crystal_check(m: usize, t: usize, e: usize) -> Result<SteinbergCheck> {
    if t > 1 {
        return Err(Error::Parameter(format!("t must be 0 or 1, got {t}")));
    }
    let charge = hc_charge(t, e)?;
    let mu = Bipartition::new(Partition::empty(), Partition::new(vec![1; m])?);
    let v = ChargedBipartition::new(mu.clone(), charge);
    let k = 2 * m + t;
    Ok(SteinbergCheck {
        by_operators: is_highest_weight(&v, e),
        by_periods: is_totally_periodic(&symbol_of(&mu, charge), e),
        by_divisibility: k.is_multiple_of(e) || (k >= 1 && (k - 1).is_multiple_of(e)),
    })
}

/// Weight-one labels of size `t(t+1)/2 + e` that are predicted cuspidal.
pub fn predicted_weight_one_cuspidals(t: usize, e: usize) -> Result<Vec<Partition>> {
    check_odd(e)?;
    let n = t * (t + 1) / 2 + e;
    let mut out = Vec::new();
    for lambda in Partition::all(n) {
        if e_weight(&lambda, e) == 1 && predict_weakly_cuspidal(&lambda, e)? {
            out.push(lambda);
        }
    }
    Ok(out)
}

pub fn series_table(n: usize, e: usize, series: &[SeriesPrediction]) -> String {
    let mut s = format!("predicted series of unipotent labels, n = {n}, e = {e}\n");
    let new: Vec<String> = series
        .iter()
        .filter(|p| p.cuspidal_label.size() == n)
        .map(|p| p.cuspidal_label.to_string())
        .collect();
    if new.is_empty() {
        s.push_str("predicted cuspidal at this rank: none\n");
    } else {
        let _ = writeln!(s, "predicted cuspidal at this rank: {}", new.join(" "));
    }
    for p in series {
        let q = p
            .hecke_exponent()
            .map_or_else(|| "?".to_string(), |k| format!("q^{k}"));
        let s_text = p.s.map_or_else(|| "-".to_string(), |v| v.to_string());
        let members: Vec<String> = p.members.iter().map(|m| m.to_string()).collect();
        let _ = writeln!(
            s,
            "series of {} (n = {}, t = {}, s = {}, Q = {}): {}",
            p.cuspidal_label,
            p.cuspidal_label.size(),
            p.t,
            s_text,
            q,
            members.join(" ")
        );
        for v in &p.violations {
            let _ = writeln!(s, "  violation: {v}");
        }
    }
    let total: usize = series.iter().map(|p| p.members.len()).sum();
    let _ = writeln!(s, "labels assigned: {total}");
    s
}

pub fn series_json(n: usize, e: usize, series: &[SeriesPrediction]) -> String {
    let value = serde_json::json!({ "n": n, "e": e, "series": series });
    let mut s = serde_json::to_string_pretty(&value).expect("series serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn charges() {
        assert_eq!(hc_charge(0, 3).unwrap(), (-1, 0));
        assert_eq!(hc_charge(1, 3).unwrap(), (0, 0));
        assert_eq!(hc_charge(5, 3).unwrap(), (4, 0));
        assert!(hc_charge(0, 4).is_err());
    }

    #[test]
    fn cuspidality() {
        assert!(predict_weakly_cuspidal(&p("1^4"), 3).unwrap());
        assert!(predict_weakly_cuspidal(&p("2,1"), 3).unwrap());
        assert!(!predict_weakly_cuspidal(&p("3"), 3).unwrap());
    }

    #[test]
    fn series_small() {
        let series = predict_series(3, 3).unwrap();
        let cusp: Vec<String> = series
            .iter()
            .filter(|s| s.cuspidal_label.size() == 3)
            .map(|s| s.cuspidal_label.to_string())
            .collect();
        assert_eq!(cusp.len(), 2);
        assert!(cusp.contains(&"1^3".to_string()) && cusp.contains(&"2,1".to_string()));
        let of_one = series.iter().find(|s| s.cuspidal_label == p("1")).unwrap();
        assert!(of_one.members.contains(&p("3")));

        let zero = predict_series(0, 5).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].members, vec![Partition::empty()]);
    }

    #[test]
    fn ecore_checks() {
        assert_eq!(cuspidal_ecore_check(&p("1^4"), 3).unwrap(), (true, Some(1)));
        // the hook at (1,1) has length 3
        assert_eq!(cuspidal_ecore_check(&p("2,1"), 3).unwrap(), (true, Some(0)));
        assert_eq!(cuspidal_ecore_check(&p("1^3"), 3).unwrap(), (true, Some(0)));
        assert!(cuspidal_ecore_check(&p("3"), 3).is_err());
        assert_eq!(hecke_parameter_exponent(&p("1^4"), 3).unwrap(), 1);
        assert_eq!(hecke_parameter_exponent(&p("2,1"), 3).unwrap(), 0);
        assert_eq!(hecke_parameter_exponent(&p("2,1"), 5).unwrap(), 2);
        assert_eq!(hecke_parameter_exponent(&p("3,2,1"), 7).unwrap(), 3);
    }

    #[test]
    fn weight_one() {
        assert_eq!(
            weight_one_cuspidals(0, 3).unwrap(),
            vec![p("2,1"), p("1^3")]
        );
        assert_eq!(weight_one_cuspidals(1, 3).unwrap(), vec![p("1^4")]);
        assert_eq!(
            weight_one_cuspidals(0, 5).unwrap(),
            vec![p("2,1^3"), p("1^5")]
        );
        assert_eq!(weight_one_cuspidals(2, 5).unwrap(), vec![p("2,1^6")]);
        assert!(weight_one_cuspidals(2, 3).is_err());
    }

    #[test]
    fn steinberg() {
        assert!(steinberg_cuspidal(4, 3).unwrap());
        assert!(steinberg_cuspidal(6, 3).unwrap());
        assert!(steinberg_cuspidal(7, 3).unwrap());
        assert!(!steinberg_cuspidal(5, 3).unwrap());
        let c = steinberg_crystal_check(2, 0, 3).unwrap();
        assert!(c.agree() && c.by_operators);
        let c = steinberg_crystal_check(1, 0, 3).unwrap();
        assert!(c.agree() && !c.by_operators);
        assert!(steinberg_crystal_check(0, 0, 9).unwrap().by_operators);
    }
}
