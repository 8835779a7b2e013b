//! Sweeps checking proved statements about the crystal against independent
//! computations, plus comparisons with the transcribed published graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::crystal::{
    build_graph, children, component_to_depth, e_tilde, f_tilde, is_highest_weight,
    iso_up_to_shift, reduced_words, weight, ChargedBipartition, CrystalGraph,
};
use crate::error::{Error, Result};
use crate::fixtures::{branching_t1_e3, branching_t2_e3, crystal_00_e3, FixtureGraph};
use crate::hc::{
    hc_charge, predict_weakly_cuspidal, predicted_weight_one_cuspidals, steinberg_crystal_check,
    steinberg_cuspidal, weight_one_cuspidals,
};
use crate::partitions::{
    bar_two_quotient, beta_set, bipartition_counts, delta, e_core, phi, triangular_side,
    Bipartition, Partition,
};
use crate::symbols::{
    canonical_elementary_op, elementary_op, fused_abacus, is_totally_periodic, legal_positions,
    reduce_canonically, symbol_of, OpKind, Symbol,
};

/// Failures kept per report; the count is always exact.
const KEPT_FAILURES: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Records one case.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn eq<T: PartialEq + fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        self.check(ok, || format!("{what}: got {got:?}, expected {want:?}"));
    }

    fn finish(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} cases, {} failed ({:.2?})",
            self.name, self.cases, self.failed, self.elapsed
        )?;
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        for failure in &self.failures {
            write!(f, "\n  counterexample: {failure}")?;
        }
        Ok(())
    }
}

fn names<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

/// The worked example: a charged bipartition at `(4,0)` with `e = 3` and
/// one canonical operation.
pub fn worked_example() -> CheckReport {
    let start = Instant::now();
    let mut r = CheckReport::new("worked-example");
    let p = |s: &str| -> Partition { s.parse().expect("literal partition") };
    let b = |s: &str| -> Bipartition { s.parse().expect("literal bipartition") };

    let mu = b("5^3,4^2.6");
    let symbol = symbol_of(&mu, (4, 0));
    r.eq(
        "row 1",
        symbol.row1.beads_from(-2),
        vec![9, 8, 7, 5, 4, -1, -2],
    );
    r.eq("row 2", symbol.row2.beads_from(-2), vec![6, -1, -2]);

    let fused = fused_abacus(&symbol, 3).expect("e = 3 is odd");
    let mut beads = fused.beads_from(-2);
    beads.reverse();
    r.eq(
        "fused beads",
        beads,
        vec![-2, -1, 1, 11, 12, 13, 17, 19, 21],
    );

    let lambda = p("15,14,13,10^3,1");
    r.eq("fused partition", fused.partition().clone(), lambda.clone());
    let beta = beta_set(&lambda, 9).expect("9 >= 7 parts");
    let mut entries = beta.entries().to_vec();
    entries.sort_unstable();
    r.eq("beta-set", entries, vec![0, 1, 3, 13, 14, 15, 19, 21, 23]);
    r.eq("phi_5", phi(5, &mu), lambda.clone());
    r.eq(
        "barred quotient",
        bar_two_quotient(&lambda),
        (5, mu.clone()),
    );

    match canonical_elementary_op(&symbol, 3) {
        Some(step) => {
            r.eq("operation kind", step.kind, OpKind::A);
            r.eq("operation position", step.j, 9);
            let mu2 = b("5^2,4^2.8,6");
            r.eq("new bipartition", step.symbol.bipartition(), mu2.clone());
            r.eq("new charge", step.symbol.charge(), (3, 1));
            let lambda2 = p("13^3,10^3,1");
            let fused2 = fused_abacus(&step.symbol, 3).expect("e = 3 is odd");
            r.eq(
                "new fused partition",
                fused2.partition().clone(),
                lambda2.clone(),
            );
            let mut entries2 = beta_set(&lambda2, 9)
                .expect("9 >= 7 parts")
                .entries()
                .to_vec();
            entries2.sort_unstable();
            r.eq(
                "new beta-set",
                entries2,
                vec![0, 1, 3, 13, 14, 15, 19, 20, 21],
            );
            r.eq(
                "one hook removed",
                (e_core(&lambda2, 3), lambda.size() - lambda2.size()),
                (e_core(&lambda, 3), 3),
            );
            r.eq("new t", bar_two_quotient(&lambda2), (3, mu2.clone()));
            r.eq("phi_3", phi(3, &mu2), lambda2);
        }
        None => r.check(false, || "no canonical operation applies".into()),
    }
    r.finish(start)
}

/// `(-, 1^m)` at charge `(t + (1-e)/2, 0)` is highest weight exactly when
/// `e` divides `2m + t` or `2m + t - 1`, by operators and by periods; and
/// the Steinberg criterion agrees with the predictor.
pub fn steinberg(es: &[usize], max_m: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("steinberg");
    for &e in es {
        for t in 0..=1 {
            for m in 0..=max_m {
                let c = steinberg_crystal_check(m, t, e)?;
                r.check(c.agree(), || format!("e={e} t={t} m={m}: {c:?}"));
            }
        }
        for n in 0..=2 * max_m + 1 {
            let ones = Partition::new(vec![1; n])?;
            let crystal = predict_weakly_cuspidal(&ones, e)?;
            let formula = steinberg_cuspidal(n, e)?;
            r.check(crystal == formula, || {
                format!("e={e} n={n}: crystal says {crystal}, divisibility says {formula}")
            });
        }
    }
    Ok(r.finish(start))
}

/// A highest weight vertex at the charge attached to `t`.
#[derive(Clone, Debug)]
pub struct HwVertex {
    pub e: usize,
    pub t: usize,
    pub vertex: ChargedBipartition,
    pub s: Option<usize>,
}

/// Highest weight vertices of rank at most `max_rank` for every `(e, t)`.
pub fn highest_weight_vertices(
    es: &[usize],
    ts: &[usize],
    max_rank: usize,
) -> Result<Vec<HwVertex>> {
    let mut out = Vec::new();
    for &e in es {
        for &t in ts {
            let charge = hc_charge(t, e)?;
            let g = build_graph(charge, e, max_rank)?;
            for k in g.highest_weight_vertices() {
                let vertex = g.charged(k);
                let s = triangular_side(&e_core(&phi(t, &vertex.bipartition), e));
                out.push(HwVertex { e, t, vertex, s });
            }
        }
    }
    Ok(out)
}

/// For highest weight vertices the e-core of `phi_t` is a staircase, and the
/// canonical reduction of the symbol ends at that core.
pub fn ecore(es: &[usize], ts: &[usize], max_rank: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("ecore");
    let hws = highest_weight_vertices(es, ts, max_rank)?;
    for hw in &hws {
        let (e, t) = (hw.e, hw.t);
        let mu = &hw.vertex.bipartition;
        let core = e_core(&phi(t, mu), e);
        r.check(hw.s.is_some(), || {
            format!("e={e} t={t} {mu}: {e}-core {core} is not a 2-core")
        });
        let (terminal, _) = reduce_canonically(&symbol_of(mu, hw.vertex.charge), e);
        let reduced = fused_abacus(&terminal, e)?.partition().clone();
        r.check(reduced == core, || {
            format!("e={e} t={t} {mu}: terminal fused partition {reduced}, {e}-core {core}")
        });
        r.check(terminal.is_empty_bipartition(), || {
            format!(
                "e={e} t={t} {mu}: terminal symbol is {}",
                terminal.bipartition()
            )
        });
    }
    r.notes
        .push(format!("{} highest weight vertices", hws.len()));
    Ok(r.finish(start))
}

/// The component of each highest weight vertex is, up to a color shift, the
/// component of the empty bipartition at charge `(s + (1-e)/2, 0)`.
pub fn iso(es: &[usize], ts: &[usize], max_rank: usize, depth: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("iso");
    let hws = highest_weight_vertices(es, ts, max_rank)?;
    let mut reference: BTreeMap<(usize, usize), CrystalGraph> = BTreeMap::new();
    for hw in &hws {
        let Some(s) = hw.s else {
            r.check(false, || {
                format!("e={} t={} {}: no staircase core", hw.e, hw.t, hw.vertex)
            });
            continue;
        };
        if let std::collections::btree_map::Entry::Vacant(e) = reference.entry((hw.e, s)) {
            let empty = ChargedBipartition::new(Bipartition::empty(), hc_charge(s, hw.e)?);
            e.insert(component_to_depth(&empty, hw.e, depth)?);
        }
        let target = &reference[&(hw.e, s)];
        let g = component_to_depth(&hw.vertex, hw.e, depth)?;
        let shift = iso_up_to_shift(&g, target);
        r.check(shift.is_some(), || {
            format!(
                "e={} t={} {}: component ({} vertices) not isomorphic to that of -.- at s={s} ({} vertices)",
                hw.e,
                hw.t,
                hw.vertex,
                g.len(),
                target.len()
            )
        });
    }
    r.notes.push(format!(
        "{} components compared at depth {depth}",
        hws.len()
    ));
    Ok(r.finish(start))
}

/// Children along distinct colors have `phi_t` images with distinct e-cores.
pub fn distinct_cores(es: &[usize], ts: &[usize], max_rank: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("distinct-cores");
    for &e in es {
        for &t in ts {
            let charge = hc_charge(t, e)?;
            for m in 0..=max_rank {
                for mu in Bipartition::all(m) {
                    let v = ChargedBipartition::new(mu, charge);
                    let cores: Vec<(usize, Partition)> = children(&v, e)
                        .into_iter()
                        .enumerate()
                        .filter_map(|(i, c)| c.map(|c| (i, e_core(&phi(t, &c), e))))
                        .collect();
                    for (a, (i, ci)) in cores.iter().enumerate() {
                        for (j, cj) in &cores[a + 1..] {
                            r.check(ci != cj, || {
                                format!(
                                    "e={e} t={t} {}: colors {i} and {j} share {e}-core {ci}",
                                    v.bipartition
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(r.finish(start))
}

fn word_counts(v: &ChargedBipartition, e: usize) -> Vec<(usize, usize)> {
    reduced_words(v, e)
        .iter()
        .map(|w| (w.alpha, w.beta))
        .collect()
}

fn as_vertex(s: &Symbol) -> ChargedBipartition {
    ChargedBipartition::new(s.bipartition(), s.charge())
}

fn for_each_periodic(
    es: &[usize],
    ts: &[usize],
    max_rank: usize,
    r: &mut CheckReport,
    mut visit: impl FnMut(&mut CheckReport, usize, usize, &Bipartition, &Symbol) -> Result<()>,
) -> Result<()> {
    let mut periodic = 0;
    for &e in es {
        for &t in ts {
            let charge = hc_charge(t, e)?;
            for m in 0..=max_rank {
                for mu in Bipartition::all(m) {
                    let symbol = symbol_of(&mu, charge);
                    let tp = is_totally_periodic(&symbol, e);
                    let hw = is_highest_weight(&ChargedBipartition::new(mu.clone(), charge), e);
                    r.check(tp == hw, || {
                        format!("e={e} t={t} {mu}: totally periodic {tp}, highest weight {hw}")
                    });
                    if tp {
                        periodic += 1;
                        visit(r, e, t, &mu, &symbol)?;
                    }
                }
            }
        }
    }
    r.notes.push(format!("{periodic} totally periodic symbols"));
    Ok(())
}

/// Canonical operations keep totally periodic symbols totally periodic and
/// keep every reduced-word count.
pub fn periodic_ops(es: &[usize], ts: &[usize], max_rank: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("periodic-ops");
    for_each_periodic(es, ts, max_rank, &mut r, |r, e, t, mu, symbol| {
        if let Some(step) = canonical_elementary_op(symbol, e) {
            r.check(is_totally_periodic(&step.symbol, e), || {
                format!(
                    "e={e} t={t} {mu}: canonical ({}) at {} gives {}, not totally periodic",
                    step.kind,
                    step.j,
                    step.symbol.bipartition()
                )
            });
            let before = word_counts(&as_vertex(symbol), e);
            let after = word_counts(&as_vertex(&step.symbol), e);
            r.check(before == after, || {
                format!(
                    "e={e} t={t} {mu}: canonical ({}) at {} changes reduced words {before:?} -> {after:?}",
                    step.kind, step.j
                )
            });
        }
        Ok(())
    })?;
    Ok(r.finish(start))
}

/// Every legal elementary operation, canonical or not, applied to totally
/// periodic symbols.
pub fn all_ops(es: &[usize], ts: &[usize], max_rank: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("all-ops");
    for_each_periodic(es, ts, max_rank, &mut r, |r, e, t, mu, symbol| {
        for kind in [OpKind::A, OpKind::B] {
            for j in legal_positions(symbol, kind, e) {
                let next = elementary_op(symbol, kind, j, e)?;
                r.check(is_totally_periodic(&next, e), || {
                    format!(
                        "e={e} t={t} {mu}: ({kind}) at {j} gives {} at {:?}, not totally periodic",
                        next.bipartition(),
                        next.charge()
                    )
                });
            }
        }
        Ok(())
    })?;
    Ok(r.finish(start))
}

/// Random samples: the fused abacus partition equals `phi_t`.
pub fn fused_abacus_samples(
    samples: usize,
    seed: u64,
    max_rank: usize,
    max_t: usize,
    es: &[usize],
) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("fused-abacus");
    if es.is_empty() {
        return Err(Error::Parameter("no values of e given".into()));
    }
    let pools: Vec<Vec<Bipartition>> = (0..=max_rank).map(Bipartition::all).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let m = rng.gen_range(0..=max_rank);
        let mu = &pools[m][rng.gen_range(0..pools[m].len())];
        let t = rng.gen_range(0..=max_t);
        let e = es[rng.gen_range(0..es.len())];
        let fused = fused_abacus(&symbol_of(mu, hc_charge(t, e)?), e)?;
        let direct = phi(t, mu);
        r.check(fused.partition() == &direct, || {
            format!(
                "e={e} t={t} {mu}: fused {}, phi {direct}",
                fused.partition()
            )
        });
    }
    Ok(r.finish(start))
}

/// Kashiwara operators are mutually inverse, edges are unique per color in
/// both directions, layers are complete and weights drop by simple roots.
pub fn structure(es: &[usize], charges: &[(i64, i64)], max_rank: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("structure");
    let counts = bipartition_counts(max_rank);
    for &e in es {
        for &c in charges {
            let g = build_graph(c, e, max_rank)?;
            for (m, &want) in counts.iter().enumerate() {
                let size = g.layer(m).len() as u128;
                r.check(size == want, || {
                    format!("e={e} c={c:?}: rank {m} has {size} vertices, expected {want}")
                });
            }
            let mut incoming = vec![vec![0usize; e]; g.len()];
            for edge in g.edges() {
                incoming[edge.to][edge.residue] += 1;
                r.check(
                    g.vertex(edge.to).rank() == g.vertex(edge.from).rank() + 1,
                    || format!("e={e} c={c:?}: edge {edge:?} does not raise rank by one"),
                );
            }
            for (k, colors) in incoming.iter().enumerate() {
                let v = g.charged(k);
                let wt = weight(&v, e);
                for (i, &count) in colors.iter().enumerate() {
                    r.check(count <= 1, || {
                        format!(
                            "e={e} c={c:?} {}: {count} incoming edges of color {i}",
                            v.bipartition
                        )
                    });
                    if let Some(w) = f_tilde(&v, e, i) {
                        r.eq("e~ f~", e_tilde(&w, e, i), Some(v.clone()));
                        r.check(weight(&w, e) == wt.lowered(i), || {
                            format!(
                                "e={e} c={c:?} {}: weight after color {i} is {}",
                                v.bipartition,
                                weight(&w, e)
                            )
                        });
                    }
                    if let Some(u) = e_tilde(&v, e, i) {
                        r.eq("f~ e~", f_tilde(&u, e, i), Some(v.clone()));
                    }
                }
            }
        }
    }
    Ok(r.finish(start))
}

/// Weight-one labels predicted cuspidal agree with the closed formula.
pub fn weight_one(es: &[usize]) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("weight-one");
    for &e in es {
        for t in 0..=(e - 1) / 2 {
            let predicted = names(predicted_weight_one_cuspidals(t, e)?);
            let formula = names(weight_one_cuspidals(t, e)?);
            r.eq(&format!("e={e} t={t}"), predicted, formula);
        }
    }
    Ok(r.finish(start))
}

/// The image under `phi_t` of the crystal at charge `(t + (1-e)/2, 0)`,
/// labels of size up to `max_n`.
pub fn predicted_branching(t: usize, e: usize, max_n: usize) -> Result<FixtureGraph<Partition>> {
    let r = t * (t + 1) / 2;
    let max_rank = max_n.saturating_sub(r) / 2;
    let g = build_graph(hc_charge(t, e)?, e, max_rank)?;
    let mut layers: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
    for b in g.vertices() {
        layers.entry(r + 2 * b.rank()).or_default().push(phi(t, b));
    }
    let edges = g
        .edges()
        .iter()
        .map(|edge| (phi(t, g.vertex(edge.from)), phi(t, g.vertex(edge.to))))
        .collect();
    Ok(FixtureGraph {
        layers: layers.into_iter().collect(),
        edges,
    })
}

fn compare_graphs<T>(r: &mut CheckReport, what: &str, got: &FixtureGraph<T>, want: &FixtureGraph<T>)
where
    T: Clone + Eq + std::hash::Hash + Ord + fmt::Display + fmt::Debug,
{
    let ranks: BTreeSet<usize> = want.layers.iter().map(|(k, _)| *k).collect();
    for rank in ranks {
        r.eq(
            &format!("{what} rank {rank}"),
            names(got.layer(rank)),
            names(want.layer(rank)),
        );
    }
    let got_edges: Vec<String> = got
        .edge_set()
        .iter()
        .map(|(a, b)| format!("{a} -> {b}"))
        .collect();
    let want_edges: Vec<String> = want
        .edge_set()
        .iter()
        .map(|(a, b)| format!("{a} -> {b}"))
        .collect();
    r.eq(&format!("{what} edges"), got_edges, want_edges);
    r.eq(
        &format!("{what} sources"),
        names(got.sources()),
        names(want.sources()),
    );
}

/// The three transcribed graphs against computed ones.
pub fn tables() -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = CheckReport::new("tables");

    let g = build_graph((0, 0), 3, 3)?;
    let computed = FixtureGraph {
        layers: (0..=3)
            .map(|m| {
                (
                    m,
                    g.layer(m)
                        .into_iter()
                        .map(|k| g.vertex(k).clone())
                        .collect(),
                )
            })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|edge| (g.vertex(edge.from).clone(), g.vertex(edge.to).clone()))
            .collect(),
    };
    compare_graphs(&mut r, "crystal (0,0)", &computed, &crystal_00_e3());
    r.eq(
        "crystal (0,0) sources",
        names(g.sources().into_iter().map(|k| g.vertex(k).clone())),
        vec!["-.-".to_string(), "-.1".to_string()],
    );

    for (t, fixture) in [(1, branching_t1_e3()), (2, branching_t2_e3())] {
        let predicted = predicted_branching(t, 3, 7)?;
        compare_graphs(&mut r, &format!("branching t={t}"), &predicted, &fixture);
        for root in fixture.roots() {
            r.eq(
                &format!("t={t} series of {root}"),
                names(predicted.reachable_from(&root)),
                names(fixture.reachable_from(&root)),
            );
            r.check(predict_weakly_cuspidal(&root, 3)?, || {
                format!("root {root} of the t={t} graph is not predicted cuspidal")
            });
        }
    }
    let core = |t| delta(t);
    r.notes.push(format!(
        "labels with 2-cores {} and {} at odd n <= 7",
        core(1),
        core(2)
    ));
    Ok(r.finish(start))
}

pub const CHECK_NAMES: [&str; 11] = [
    "worked-example",
    "steinberg",
    "ecore",
    "periodic-ops",
    "all-ops",
    "iso",
    "distinct-cores",
    "fused-abacus",
    "structure",
    "tables",
    "weight-one",
];

/// Parameters for [`run_check`]; `None` picks each check's default.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub es: Option<Vec<usize>>,
    pub ts: Option<Vec<usize>>,
    pub max_m: Option<usize>,
    pub max_rank: Option<usize>,
    pub depth: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
}

pub const STRUCTURE_CHARGES: [(i64, i64); 5] = [(0, 0), (-1, 0), (1, 0), (2, -1), (-3, 2)];

pub fn run_check(name: &str, o: &VerifyOptions) -> Result<CheckReport> {
    let es = |default: &[usize]| o.es.clone().unwrap_or_else(|| default.to_vec());
    let ts = |default: &[usize]| o.ts.clone().unwrap_or_else(|| default.to_vec());
    match name {
        "worked-example" => Ok(worked_example()),
        "steinberg" => steinberg(&es(&[3, 5, 7, 9]), o.max_m.unwrap_or(25)),
        "ecore" => ecore(&es(&[3, 5]), &ts(&[0, 1, 2, 3]), o.max_rank.unwrap_or(6)),
        "periodic-ops" => periodic_ops(&es(&[3]), &ts(&[0, 1, 2, 3]), o.max_rank.unwrap_or(5)),
        "all-ops" => all_ops(&es(&[3]), &ts(&[0, 1, 2, 3]), o.max_rank.unwrap_or(5)),
        "iso" => iso(
            &es(&[3, 5]),
            &ts(&[0, 1, 2, 3]),
            o.max_rank.unwrap_or(6),
            o.depth.unwrap_or(4),
        ),
        "distinct-cores" => distinct_cores(&es(&[3]), &ts(&[0, 1, 2, 3]), o.max_rank.unwrap_or(6)),
        "fused-abacus" => fused_abacus_samples(
            o.samples.unwrap_or(300),
            o.seed.unwrap_or(7),
            o.max_rank.unwrap_or(12),
            o.ts.as_ref()
                .and_then(|t| t.iter().max().copied())
                .unwrap_or(6),
            &es(&[3, 5, 7]),
        ),
        "structure" => structure(&es(&[3, 5]), &STRUCTURE_CHARGES, o.max_rank.unwrap_or(6)),
        "tables" => tables(),
        "weight-one" => weight_one(&es(&[3, 5])),
        other => Err(Error::Parameter(format!(
            "unknown check {other:?}; known: {}",
            CHECK_NAMES.join(", ")
        ))),
    }
}
