//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;
use stabdim::graph::generate;
use stabdim::oracle::{self, CoefficientVector};
use stabdim::stabilizer::{self, Mode};
use stabdim::{config, theorem, Family, Graph, SlotPair, Strategy};

const BIN: &str = env!("CARGO_BIN_EXE_stabdim");

struct Entry {
    name: String,
    g: Graph,
}

/// 200 seeded connected G(n, p) plus the named families with 2 <= n <= 12.
fn corpus() -> Vec<Entry> {
    let mut out = Vec::new();
    for i in 0..200u64 {
        let n = 3 + (i % 10) as usize;
        let p = [0.2, 0.5, 0.8][(i / 10 % 3) as usize];
        let (seed, g) = (i * 1000..)
            .map(|s| (s, generate(Family::Gnp, n, p, s).unwrap()))
            .find(|(_, g)| g.is_connected())
            .unwrap();
        out.push(Entry { name: format!("gnp n={n} p={p} seed={seed}"), g });
    }
    for f in [Family::Path, Family::Cycle, Family::Star, Family::Complete, Family::Tree] {
        for n in f.min_order().max(2)..=12 {
            out.push(Entry { name: format!("{f} n={n}"), g: generate(f, n, 0.0, n as u64).unwrap() });
        }
    }
    out
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok: impl Into<String>) -> Outcome {
    match failures.first() {
        None => Outcome { pass: true, detail: ok.into() },
        Some(first) => Outcome { pass: false, detail: format!("{} failure(s), first: {first}", failures.len()) },
    }
}

fn within(limit: Duration, elapsed: Duration, mut o: Outcome) -> Outcome {
    if elapsed > limit {
        o.pass = false;
    }
    o.detail = format!("{}; {:.2?} (limit {:?})", o.detail, elapsed, limit);
    o
}

fn par_failures<F>(corpus: &[Entry], check: F) -> Vec<String>
where
    F: Fn(&Entry) -> Option<String> + Sync + Send,
{
    let idx: Vec<usize> = (0..corpus.len()).collect();
    Strategy::default().map(idx, |i| check(&corpus[i])).into_iter().flatten().collect()
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(BIN).args(args).output().expect("spawn stabdim");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (code, stdout) = run_cli(&["analyze", "--graph6", "A_", "--format", "json"]);
    let elapsed = start.elapsed();
    let mut fails = Vec::new();
    let v: Value = serde_json::from_slice(&stdout).expect("json report");
    if code != 0 {
        fails.push(format!("exit {code}"));
    }
    if v["dimension"] != 3 {
        fails.push(format!("dimension {}", v["dimension"]));
    }
    let reported: Vec<CoefficientVector> = v["configurations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| CoefficientVector::from_slot_pair(&c["generator"].as_str().unwrap().parse::<SlotPair>().unwrap(), 2))
        .collect();
    let expected: Vec<CoefficientVector> = ["X0-Z1", "X1-Z0", "Y0-Y1"]
        .iter()
        .map(|s| CoefficientVector::from_slot_pair(&s.parse().unwrap(), 2))
        .collect();
    let joint: Vec<_> = reported.iter().chain(&expected).cloned().collect();
    let (r, e, j) = (oracle::coefficient_rank(&reported), oracle::coefficient_rank(&expected), oracle::coefficient_rank(&joint));
    if !(r == 3 && e == 3 && j == 3) {
        fails.push(format!("span ranks reported {r}, expected {e}, joint {j}"));
    }
    within(Duration::from_secs(1), elapsed, outcome(fails, "dimension 3, generators span {X0-Z1, X1-Z0, Y0-Y1}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut fails = Vec::new();
    for n in 2..=12 {
        let g = generate(Family::Star, n, 0.0, 0).unwrap();
        let d = config::stabilizer_dimension(&g).unwrap();
        if n <= 10 && d != n - 1 {
            fails.push(format!("star n={n}: dimension {d}, expected {}", n - 1));
        }
        let k = oracle::local_algebra_nullity(&g).unwrap();
        if k != n - 1 {
            fails.push(format!("star n={n}: oracle nullity {k}, expected {}", n - 1));
        }
    }
    within(Duration::from_secs(60), start.elapsed(), outcome(fails, "dimension n-1 for n = 2..10, oracle agrees to n = 12"))
}

fn criterion_3(corpus: &[Entry]) -> Outcome {
    let start = Instant::now();
    let fails = par_failures(corpus, |e| {
        let d = config::stabilizer_dimension(&e.g).unwrap();
        let k = oracle::local_algebra_nullity(&e.g).unwrap();
        (d != k).then(|| format!("{}: dimension {d}, oracle {k}", e.name))
    });
    let ok = format!("{} graphs, dimension = oracle nullity", corpus.len());
    within(Duration::from_secs(600), start.elapsed(), outcome(fails, ok))
}

fn criterion_4(corpus: &[Entry]) -> Outcome {
    let mut fails = par_failures(corpus, |e| {
        if e.g.order() < 3 {
            return None;
        }
        let d = config::stabilizer_dimension(&e.g).unwrap();
        let elems = stabilizer::low_weight_elements(&e.g, Mode::Brute).unwrap();
        let g2 = stabilizer::g2_rank(elems.iter().map(|x| &x.exponents));
        (d != g2).then(|| format!("{}: dimension {d}, g2 {g2}", e.name))
    });
    let k2 = theorem::check_equivalence(&Graph::parse_graph6("A_").unwrap(), true).unwrap();
    if (k2.dimension, k2.g2) != (3, 2) {
        fails.push(format!("K2: ({}, {}), expected (3, 2)", k2.dimension, k2.g2));
    }
    outcome(fails, "dimension = g2 for every n >= 3 graph; K2 gives (3, 2)")
}

fn criterion_5(corpus: &[Entry]) -> Outcome {
    let fails = par_failures(corpus, |e| {
        if !theorem::check_support_pairs(&e.g).unwrap() {
            return Some(format!("{}: support pair outside the configurations", e.name));
        }
        // The overlap argument needs a vertex outside the pair; K2 is exempt.
        if e.g.order() >= 3 && !theorem::check_pairwise_overlap(&e.g).unwrap() {
            return Some(format!("{}: overlapping supports disagree", e.name));
        }
        None
    });
    outcome(fails, "support pairs on all graphs, pairwise overlap on n >= 3")
}

fn criterion_6(corpus: &[Entry]) -> Outcome {
    let fails = par_failures(corpus, |e| {
        let basis = oracle::nullspace_basis(&e.g).unwrap();
        basis.iter().any(|b| !b.theta_is_zero()).then(|| format!("{}: nonzero theta", e.name))
    });
    outcome(fails, "theta = 0 in every nullspace basis vector")
}

fn criterion_7(corpus: &[Entry]) -> Outcome {
    let fails = par_failures(corpus, |e| {
        if e.g.order() > 16 {
            return None;
        }
        let brute = stabilizer::low_weight_elements(&e.g, Mode::Brute).unwrap();
        let fast = stabilizer::low_weight_elements(&e.g, Mode::Fast).unwrap();
        if brute != fast {
            return Some(format!("{}: brute {} elements, fast {}", e.name, brute.len(), fast.len()));
        }
        let v = oracle::build_statevector(&e.g).unwrap();
        brute
            .iter()
            .find(|x| x.pauli.sign_exp() != 0 || !oracle::is_stabilized(&x.pauli, &v))
            .map(|x| format!("{}: element {} not a +1 stabilizer", e.name, x.pauli))
    });
    outcome(fails, "brute = fast; all elements +1 stabilizers")
}

fn criterion_8() -> Outcome {
    let dim = |f, n| config::stabilizer_dimension(&generate(f, n, 0.0, 0).unwrap()).unwrap();
    let mut fails = Vec::new();
    let mut expect = |label: String, got: usize, want: usize| {
        if got != want {
            fails.push(format!("{label}: {got}, expected {want}"));
        }
    };
    for n in 5..=12 {
        expect(format!("C{n}"), dim(Family::Cycle, n), 0);
    }
    expect("C3".into(), dim(Family::Cycle, 3), 2);
    expect("C4".into(), dim(Family::Cycle, 4), 2);
    for n in 2..=10 {
        expect(format!("K{n}"), dim(Family::Complete, n), n - 1);
    }
    for n in 4..=20 {
        expect(format!("P{n}"), dim(Family::Path, n), 2);
    }
    outcome(fails, "cycles, complete graphs and paths match")
}

fn criterion_9() -> Outcome {
    let mut fails = Vec::new();
    for seed in 0..500u64 {
        let n = 1 + (seed % 20) as usize;
        let g = generate(Family::Gnp, n, [0.15, 0.4, 0.7][(seed % 3) as usize], seed).unwrap();
        if Graph::parse_graph6(&g.to_graph6()).ok() != Some(g.clone()) {
            fails.push(format!("graph6 seed {seed}"));
        }
        if Graph::parse_edge_list(&g.to_edge_list()).ok() != Some(g) {
            fails.push(format!("edge list seed {seed}"));
        }
    }
    let invocations: [&[&str]; 4] = [
        &["analyze", "--graph6", "A_", "--format", "json"],
        &["analyze", "--family", "gnp", "--n", "12", "--p", "0.4", "--seed", "9", "--format", "json"],
        &["verify", "--family", "tree", "--n", "10", "--seed", "3", "--format", "json"],
        &["enumerate", "--family", "star", "--n", "9", "--format", "json"],
    ];
    for args in invocations {
        let runs: Vec<_> = (0..3).map(|_| run_cli(args)).collect();
        if runs.iter().any(|r| r != &runs[0]) || runs[0].0 != 0 {
            fails.push(format!("unstable or failing output for {}", args.join(" ")));
        }
        let mut buf = Vec::new();
        let code = stabdim_cli::run(std::iter::once("stabdim").chain(args.iter().copied()), &mut buf, &mut Vec::new());
        if (code, buf) != runs[0] {
            fails.push(format!("in-process run differs for {}", args.join(" ")));
        }
    }
    outcome(fails, "500 round trips of each format; reports byte-stable")
}

fn main() {
    let corpus = corpus();
    let results: Vec<(u32, Outcome)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3(&corpus)),
        (4, criterion_4(&corpus)),
        (5, criterion_5(&corpus)),
        (6, criterion_6(&corpus)),
        (7, criterion_7(&corpus)),
        (8, criterion_8()),
        (9, criterion_9()),
    ];
    let mut failed = 0;
    for (k, o) in &results {
        println!("{} criterion {k}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
