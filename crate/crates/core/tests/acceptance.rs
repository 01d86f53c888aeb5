//! The thirteen acceptance criteria, each at exact equality. Prints one line per criterion.

use std::time::Instant;

use steep::verify::{self as v, Check};
use steep::vertex;

const SEED: u64 = 20240611;

type Criterion = (&'static str, fn() -> Vec<Check>);

fn criteria() -> Vec<Criterion> {
    vec![
        ("pure product vs transfer matrix", (|| vec![v::pure_vs_oracle(6, 10)])),
        ("refined pure product vs transfer matrix", (|| vec![v::pure_multi_vs_oracle(4, 6)])),
        ("Aztec diamond counts", (|| vec![v::aztec_counts(5, 6)])),
        ("pyramid stabilization", (|| vec![v::pyramid_stabilization(8)])),
        ("mixed and free boundaries", (|| vec![v::mixed_vs_oracle(4, 8), v::free_vs_oracle(4, 8)])),
        ("cylindric tilings", (|| vec![v::cylindric_vs_oracle(4, 8, 6)])),
        ("extended model enumeration", (|| vec![v::extended_vs_enumeration(4, 8)])),
        (
            "operator identities",
            (|| {
                let mut c = vertex::check_all_commutations(8);
                c.extend(vertex::check_reflection(8));
                c.extend(vertex::check_even_reflection(8));
                c
            }),
        ),
        ("flip metric", (|| vec![v::steep_flip_graph(4, 5)])),
        (
            "bijection round trips",
            (|| {
                vec![
                    v::tiling_fixture(),
                    v::matching_fixture(),
                    v::tiling_round_trips(200, SEED, 8),
                    v::matching_round_trips(200, SEED, 8),
                ]
            }),
        ),
        ("hook formula", (|| vec![v::hook_vs_pure(8, 12), v::strip_invariance(8, 12)])),
        (
            "Littlewood and super-Schur products",
            (|| vec![v::superlittlewood_vs_oracle(3, 8), v::hook_content_vs_prescribed(8)]),
        ),
        ("contraction to steep tilings", (|| vec![v::contraction(6, 8, 3)])),
    ]
}

fn main() {
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria().into_iter().enumerate() {
        let start = Instant::now();
        let checks = run();
        let cases: usize = checks.iter().map(|c| c.cases).sum();
        let bad: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {name} ({cases} cases, {:.1?})", i + 1, start.elapsed());
        for c in &bad {
            println!("     {}: {}", c.name, c.counterexample.as_deref().unwrap_or(""));
        }
        if !bad.is_empty() {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
