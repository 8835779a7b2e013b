//! Acceptance criteria 1 to 11, one line each. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hccrystal::crystal::{build_graph_with, component_with, ChargedBipartition, GraphOptions};
use hccrystal::fixtures::{branching_t1_e3, branching_t2_e3};
use hccrystal::hc::predict_series;
use hccrystal::verify::{
    all_ops, distinct_cores, ecore, fused_abacus_samples, iso, periodic_ops, predicted_branching,
    steinberg, structure, tables, worked_example, CheckReport, STRUCTURE_CHARGES,
};

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: &[CheckReport]) -> Outcome {
    let passed = reports.iter().all(CheckReport::passed);
    let detail = reports
        .iter()
        .map(|r| format!("{}: {}/{} ok", r.name, r.cases - r.failed, r.cases))
        .collect::<Vec<_>>()
        .join(", ");
    let failures: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.to_string())
        .collect();
    Outcome {
        passed,
        detail: if failures.is_empty() {
            detail
        } else {
            format!("{detail}\n{}", failures.join("\n"))
        },
    }
}

fn criterion1() -> Outcome {
    from_reports(&[worked_example()])
}

fn criterion2() -> Outcome {
    from_reports(&[tables().expect("tables check runs")])
}

fn criterion3() -> Outcome {
    let mut r_ok = true;
    let mut notes = Vec::new();
    let mut sources = BTreeSet::new();
    for (t, fixture) in [(1, branching_t1_e3()), (2, branching_t2_e3())] {
        let predicted = predicted_branching(t, 3, 7).expect("graph builds");
        sources.extend(predicted.sources().into_iter().map(|p| p.to_string()));
        for root in fixture.roots() {
            let same = predicted.reachable_from(&root) == fixture.reachable_from(&root);
            r_ok &= same;
            if !same {
                notes.push(format!("series of {root} differs for t={t}"));
            }
        }
        r_ok &= predicted.edge_set() == fixture.edge_set();
    }
    let want: BTreeSet<String> = ["1", "1^3", "2,1"].iter().map(|s| s.to_string()).collect();
    r_ok &= sources == want;
    for n in [1usize, 3] {
        let new: BTreeSet<String> = predict_series(n, 3)
            .expect("series")
            .into_iter()
            .filter(|s| s.cuspidal_label.size() == n)
            .map(|s| s.cuspidal_label.to_string())
            .collect();
        let expected: BTreeSet<String> = if n == 1 {
            ["1"].iter().map(|s| s.to_string()).collect()
        } else {
            ["1^3", "2,1"].iter().map(|s| s.to_string()).collect()
        };
        r_ok &= new == expected;
    }
    let top: Vec<String> = predict_series(7, 3)
        .expect("series")
        .into_iter()
        .filter(|s| s.cuspidal_label.size() == 7)
        .map(|s| s.cuspidal_label.to_string())
        .collect();
    notes.push(format!(
        "sources {:?}; highest weight at the top rank n = 7 (no outgoing edges shown): {:?}",
        sources, top
    ));
    Outcome {
        passed: r_ok,
        detail: notes.join("; "),
    }
}

fn criterion4() -> Outcome {
    from_reports(&[steinberg(&[3, 5, 7, 9], 25).expect("steinberg runs")])
}

fn criterion5() -> Outcome {
    from_reports(&[ecore(&[3, 5], &[0, 1, 2, 3], 6).expect("ecore runs")])
}

fn criterion6() -> Outcome {
    from_reports(&[iso(&[3, 5], &[0, 1, 2, 3], 6, 4).expect("iso runs")])
}

fn criterion7() -> Outcome {
    from_reports(&[distinct_cores(&[3], &[0, 1, 2, 3], 6).expect("distinct cores runs")])
}

fn criterion8() -> Outcome {
    from_reports(&[fused_abacus_samples(300, 7, 12, 6, &[3, 5, 7]).expect("samples run")])
}

fn criterion9() -> Outcome {
    from_reports(&[
        all_ops(&[3], &[0, 1, 2, 3], 5).expect("all ops run"),
        periodic_ops(&[3], &[0, 1, 2, 3], 5).expect("canonical ops run"),
    ])
}

fn criterion10() -> Outcome {
    from_reports(&[structure(&[3, 5], &STRUCTURE_CHARGES, 6).expect("structure runs")])
}

fn criterion11() -> Outcome {
    let mut outputs = Vec::new();
    for threads in [Some(1), Some(4), None, Some(1)] {
        let options = GraphOptions {
            threads,
            ..GraphOptions::default()
        };
        let g = build_graph_with((-1, 0), 3, 6, &options).expect("graph builds");
        let root = ChargedBipartition::new("-.1".parse().expect("literal"), (0, 0));
        let c = component_with(&root, 3, 7, &options).expect("component builds");
        outputs.push((g.to_dot(), g.to_json(), c.to_dot(), c.to_json()));
    }
    let passed = outputs.windows(2).all(|w| w[0] == w[1]);
    Outcome {
        passed,
        detail: format!("{} runs compared (1, 4, default, 1 workers)", outputs.len()),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "worked example", Duration::from_millis(100), criterion1),
        (
            2,
            "crystal graph (0,0), e=3, rank <= 3",
            Duration::from_secs(1),
            criterion2,
        ),
        (
            3,
            "branching graphs via prediction",
            Duration::from_secs(5),
            criterion3,
        ),
        (
            4,
            "Steinberg highest weight",
            Duration::from_secs(10),
            criterion4,
        ),
        (
            5,
            "e-core of highest weight vertices",
            Duration::from_secs(20),
            criterion5,
        ),
        (
            6,
            "component isomorphism",
            Duration::from_secs(20),
            criterion6,
        ),
        (
            7,
            "distinct child cores",
            Duration::from_secs(10),
            criterion7,
        ),
        (
            8,
            "fused abacus vs phi_t",
            Duration::from_secs(5),
            criterion8,
        ),
        (
            9,
            "elementary operations on periodic symbols",
            Duration::from_secs(10),
            criterion9,
        ),
        (
            10,
            "Kashiwara inverse and structure",
            Duration::from_secs(10),
            criterion10,
        ),
        (11, "determinism", Duration::from_secs(60), criterion11),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let total = Instant::now();
    let mut failed = 0;
    for (n, name, bound, run) in criteria {
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| name.contains(f.as_str()) || *f == n.to_string())
        {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= bound;
        let ok = outcome.passed && in_time;
        if !ok {
            failed += 1;
        }
        let timing = if in_time {
            format!("{elapsed:.2?} <= {bound:?}")
        } else {
            format!("{elapsed:.2?} EXCEEDS {bound:?}")
        };
        println!(
            "criterion {n:>2} {}: {name} ({timing}) {}",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    let total = total.elapsed();
    let total_ok = total <= Duration::from_secs(60);
    println!(
        "acceptance: {} failed, total {total:.2?} ({})",
        failed,
        if total_ok { "within 60 s" } else { "over 60 s" }
    );
    if failed == 0 && total_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
