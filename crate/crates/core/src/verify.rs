//! Verification suites: every closed form against its independent oracle, the operator
//! identities, the flip graphs and the bijections, as pass/fail reports.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::chain::{self, Candidates, End};
use crate::closed_forms as cf;
use crate::error::{Error, Result};
use crate::extended::{self as ext, DiamondWord, ExtendedSeq};
use crate::partition::{Partition, StripRelation};
use crate::series::VarSpace;
use crate::steep::{
    height_function, minimal_tiling, pure_sequences, pyramid_word, seq_to_tiling, sufficient_half_width, BoundaryMode,
    Domino, FlipDir, InterlacedSeq, SignWord, TilingWindow,
};
use crate::vertex::{self, run_chain, ChainWeights, IdentityReport, StateVector};
use crate::{Integer, MultiSeries, UniSeries};

/// One named check: how many cases ran and the first failure, if any.
pub type Check = IdentityReport;

fn check<T>(
    name: impl Into<String>,
    items: impl IntoIterator<Item = T>,
    mut f: impl FnMut(&T) -> Option<String>,
) -> Check {
    let mut cases = 0;
    for item in items {
        cases += 1;
        if let Some(why) = f(&item) {
            return Check { name: name.into(), cases, counterexample: Some(why) };
        }
    }
    Check { name: name.into(), cases, counterexample: None }
}

fn differ<T: PartialEq + fmt::Debug>(what: impl fmt::Display, a: &T, b: &T) -> Option<String> {
    (a != b).then(|| format!("{what}: {a:?} != {b:?}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Commutation,
    Reflection,
    Formulas,
    Flips,
    Bijection,
    Extended,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Commutation, Suite::Reflection, Suite::Formulas, Suite::Flips, Suite::Bijection, Suite::Extended];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Commutation => "commutation",
            Suite::Reflection => "reflection",
            Suite::Formulas => "formulas",
            Suite::Flips => "flips",
            Suite::Bijection => "bijection",
            Suite::Extended => "extended",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Bounds of a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Longest word; the boundary, cylindric and extended checks cap it at 4.
    pub max_len: usize,
    pub trunc: usize,
    /// Largest `Σ|λ|` explored by flip searches and random instances.
    pub max_size: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds { max_len: 4, trunc: 8, max_size: 4, samples: 200, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "cases": c.cases,
                "passed": c.passed(),
                "counterexample": c.counterexample,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status} {} ({} cases)", c.name, c.cases)?;
            if let Some(why) = &c.counterexample {
                write!(f, ": {why}")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}: {}", self.suite.name(), if self.passed() { "pass" } else { "fail" })
    }
}

pub fn run(suite: Suite, b: &Bounds) -> SuiteReport {
    let checks = match suite {
        Suite::Commutation => vertex::check_all_commutations(b.trunc),
        Suite::Reflection => {
            let mut v = vertex::check_reflection(b.trunc);
            v.extend(vertex::check_even_reflection(b.trunc));
            v
        }
        Suite::Formulas => {
            let small = b.max_len.min(4);
            let n = b.trunc.min(8);
            vec![
                pure_vs_oracle(b.max_len, b.trunc),
                pure_multi_vs_oracle(small, b.trunc.min(6)),
                hook_vs_pure(b.max_len, b.trunc),
                strip_invariance(b.max_len, b.trunc),
                aztec_counts(5, 6),
                pyramid_stabilization(n),
                mixed_vs_oracle(small, n),
                free_vs_oracle(small, n),
                cylindric_vs_oracle(small, n, n.min(6)),
                superlittlewood_vs_oracle(3, n),
                hook_content_vs_prescribed(n),
            ]
        }
        Suite::Flips => vec![steep_flip_graph(b.max_len, b.max_size)],
        Suite::Bijection => vec![
            tiling_fixture(),
            matching_fixture(),
            tiling_round_trips(b.samples, b.seed, b.max_size.max(8)),
            matching_round_trips(b.samples, b.seed, b.max_size.max(6)),
        ],
        Suite::Extended => vec![
            extended_vs_enumeration(b.max_len.min(4), b.trunc.min(8)),
            extended_flip_graphs(b.max_len.min(3), b.max_size),
            contraction(b.max_len.min(6), b.trunc.min(8), b.max_size.min(3)),
        ],
    };
    SuiteReport { suite, checks }
}

fn q(n: usize) -> UniSeries {
    UniSeries::monomial(1, Integer::from(1), n)
}

fn uniform(w: &SignWord, n: usize) -> ChainWeights<UniSeries> {
    ChainWeights::uniform(w.len(), &q(n))
}

/// Energies `x_1, …, x_{count}` on the inner partitions of a chain of `k` steps, `1` elsewhere.
fn graded(sp: &std::sync::Arc<VarSpace>, k: usize, count: usize, n: usize) -> ChainWeights<MultiSeries> {
    let one = MultiSeries::one(sp, n);
    let mut energies = vec![one.clone()];
    energies.extend((0..count).map(|i| MultiSeries::var(sp, i, n)));
    energies.resize(k + 1, one.clone());
    ChainWeights { energies, op_weights: vec![one; k] }
}

fn counts_to_series(counts: &[u64], n: usize) -> UniSeries {
    UniSeries::from_coeffs(counts.iter().map(|&c| Integer::from(c)).collect(), n)
}

/// The transfer-matrix value of the generating function for `mode`, in `q`.
pub fn oracle_q(mode: BoundaryMode, w: &SignWord, n: usize) -> Result<UniSeries> {
    cf::check_model(mode, w)?;
    let cw = uniform(w, n);
    let one = UniSeries::one(n);
    Ok(match mode {
        BoundaryMode::Pure => vertex::pure_fn(w, &cw, n),
        BoundaryMode::Mixed => vertex::mixed_fn(w, &cw, &one, n),
        BoundaryMode::Free => vertex::free_fn(w, &cw, &one, &one, n),
        BoundaryMode::Periodic => vertex::cylindric_fn(w, &cw, n),
    })
}

/// The transfer-matrix value of the refined generating function, in the variables of
/// `closed_forms::formula_multi`.
pub fn oracle_multi(mode: BoundaryMode, w: &SignWord, n: usize) -> Result<MultiSeries> {
    cf::check_model(mode, w)?;
    let k = w.len();
    Ok(match mode {
        BoundaryMode::Pure => vertex::pure_fn(w, &graded(&cf::diagonal_space(w), k, k - 1, n), n),
        BoundaryMode::Mixed | BoundaryMode::Free => {
            let sp = if mode == BoundaryMode::Mixed { cf::mixed_space() } else { cf::free_space() };
            let cw = ChainWeights::uniform(k, &MultiSeries::var(&sp, 0, n));
            let v = MultiSeries::var(&sp, sp.len() - 1, n);
            if mode == BoundaryMode::Mixed {
                vertex::mixed_fn(w, &cw, &v, n)
            } else {
                vertex::free_fn(w, &cw, &MultiSeries::var(&sp, 1, n), &v, n)
            }
        }
        BoundaryMode::Periodic => {
            let sp = cf::cyl_space(w);
            let mut cw = graded(&sp, k, k, n);
            cw.energies[0] = MultiSeries::one(&sp, n);
            vertex::cylindric_fn(w, &cw, n)
        }
    })
}

/// `Σ q^{Σ_i |λ^(i)|}` over chains with the given ends, by enumeration.
fn enumerate(rels: &[StripRelation], first: &End, last: &End, n: usize) -> UniSeries {
    let mut counts = vec![0u64; n + 1];
    chain::for_each_chain(rels, first, last, n, Candidates::Strips, |c| {
        counts[c.iter().map(Partition::size).sum::<usize>()] += 1;
    });
    counts_to_series(&counts, n)
}

pub fn pure_vs_oracle(max_len: usize, n: usize) -> Check {
    check(format!("pure product = transfer matrix, |w| ≤ {max_len}, q^{n}"), SignWord::all_up_to(max_len), |w| {
        differ(w, &cf::pure_q(w, n), &oracle_q(BoundaryMode::Pure, w, n).expect("any word"))
    })
}

pub fn pure_multi_vs_oracle(max_len: usize, n: usize) -> Check {
    check(
        format!("refined pure product = transfer matrix, |w| ≤ {max_len}, degree {n}"),
        SignWord::all_up_to(max_len),
        |w| differ(w, &cf::pure_multi(w, n), &oracle_multi(BoundaryMode::Pure, w, n).expect("any word")),
    )
}

pub fn hook_vs_pure(len: usize, n: usize) -> Check {
    check(format!("hook product = pure product, |w| = {len}, q^{n}"), SignWord::all(len), |w| {
        differ(w, &cf::hook_q(w, n), &cf::pure_q(w, n))
    })
}

pub fn strip_invariance(max_len: usize, n: usize) -> Check {
    check(
        format!("pure product ignores leading − and trailing +, |w| ≤ {max_len}"),
        SignWord::all_up_to(max_len),
        |w| {
            let core = cf::strip_inert(w).expect("nonempty core");
            differ(format!("{w} vs {core}"), &cf::pure_q(w, n), &cf::pure_q(&core, n))
        },
    )
}

pub fn aztec_counts(max_poly: usize, max_value: usize) -> Check {
    check(
        format!("Aztec polynomial, ℓ ≤ {max_poly}; 2^(ℓ(ℓ+1)/2) tilings, ℓ ≤ {max_value}"),
        1..=max_value,
        |&l| {
            let poly = cf::aztec_poly(l);
            let d = cf::aztec_degree(l);
            if l <= max_poly {
                let w = SignWord::aztec(l).expect("ℓ ≥ 1");
                let padded = UniSeries::from_coeffs(poly.coeffs().to_vec(), d + 2);
                if let Some(why) = differ(format!("ℓ = {l}"), &padded, &cf::pure_q(&w, d + 2)) {
                    return Some(why);
                }
            }
            let expected = Integer::from(1u8) << (l * (l + 1) / 2);
            differ(format!("value at 1, ℓ = {l}"), &cf::value_at_one(&poly), &expected)
        },
    )
}

pub fn pyramid_stabilization(n: usize) -> Check {
    check(format!("pyramid words, q^{n}"), 1..=n + 2, |&l| {
        let w = pyramid_word(l).expect("ℓ ≥ 1");
        let p = cf::pure_q(&w, n);
        let target = if l <= n { cf::pyramid_q(l, n) } else { cf::pyramid_limit(n) };
        differ(format!("ℓ = {l}"), &p, &target)
            .or_else(|| (l >= n).then(|| differ(format!("limit, ℓ = {l}"), &p, &cf::pyramid_limit(n))).flatten())
    })
}

pub fn mixed_vs_oracle(max_len: usize, n: usize) -> Check {
    check(format!("mixed product = oracle sums, |w| ≤ {max_len}, q^{n}"), SignWord::all_up_to(max_len), |w| {
        let f = cf::mixed_q(w, n);
        differ(format!("{w} vs transfer matrix"), &f, &oracle_q(BoundaryMode::Mixed, w, n).expect("any word"))
            .or_else(|| {
                let brute = enumerate(&w.relations(), &End::Fixed(Partition::empty()), &End::Free, n);
                differ(format!("{w} vs enumeration"), &f, &brute)
            })
            .or_else(|| {
                let oracle = oracle_multi(BoundaryMode::Mixed, w, n).expect("any word");
                differ(format!("{w} refined"), &cf::mixed_multi(w, n), &oracle)
            })
    })
}

pub fn free_vs_oracle(max_len: usize, n: usize) -> Check {
    check(format!("free product = oracle sums, |w| ≤ {max_len}, q^{n}"), SignWord::all_up_to(max_len), |w| {
        let f = cf::free_q(w, n);
        differ(format!("{w} vs transfer matrix"), &f, &oracle_q(BoundaryMode::Free, w, n).expect("any word"))
            .or_else(|| {
                differ(format!("{w} vs enumeration"), &f, &enumerate(&w.relations(), &End::Free, &End::Free, n))
            })
            .or_else(|| {
                let oracle = oracle_multi(BoundaryMode::Free, w, n).expect("any word");
                differ(format!("{w} refined"), &cf::free_multi(w, n), &oracle)
            })
    })
}

pub fn cylindric_vs_oracle(max_len: usize, n: usize, n_multi: usize) -> Check {
    let words: Vec<SignWord> = SignWord::all_up_to(max_len).into_iter().filter(SignWord::has_both_signs).collect();
    check(format!("cylindric products = trace, |w| ≤ {max_len}, q^{n}, degree {n_multi}"), words, |w| {
        let oracle = oracle_q(BoundaryMode::Periodic, w, n).expect("both signs");
        differ(w, &cf::cyl_q(w, n), &oracle).or_else(|| {
            let oracle = oracle_multi(BoundaryMode::Periodic, w, n_multi).expect("both signs");
            differ(format!("{w} refined"), &cf::cyl_multi(w, n_multi), &oracle)
        })
    })
}

pub fn superlittlewood_vs_oracle(max_l: usize, n: usize) -> Check {
    check(format!("super-Littlewood product = mixed oracle on +^2ℓ, ℓ ≤ {max_l}, q^{n}"), 1..=max_l, |&l| {
        let w = SignWord::blocks(2 * l, 0).expect("ℓ ≥ 1");
        let sp = cf::mixed_space();
        let ys: Vec<MultiSeries> = (1..=2 * l)
            .map(|i| MultiSeries::monomial(&sp, vec![(2 * l + 1 - i) as u32, 0], Integer::from(1), n))
            .collect();
        let v = MultiSeries::var(&sp, 1, n);
        let oracle = vertex::mixed_fn(&w, &ChainWeights::uniform(2 * l, &MultiSeries::var(&sp, 0, n)), &v, n);
        let prod = cf::superlittlewood(&ys, &v).expect("positive degrees");
        differ(format!("ℓ = {l}"), &prod, &oracle).or_else(|| {
            // Littlewood: only unprimed operators, y_{2i} = 0
            let mut names: Vec<String> = (1..=l).map(|i| format!("y{i}")).collect();
            names.push("v".into());
            let mut weights = vec![1; l];
            weights.push(0);
            let sp = VarSpace::new(names, weights);
            let zero = MultiSeries::zero(&sp, n);
            let ys: Vec<MultiSeries> =
                (0..2 * l).map(|i| if i % 2 == 0 { MultiSeries::var(&sp, i / 2, n) } else { zero.clone() }).collect();
            let v = MultiSeries::var(&sp, l, n);
            let oracle = vertex::mixed_fn(&w, &ChainWeights::literal(ys.clone()), &v, n);
            differ(format!("Littlewood, ℓ = {l}"), &cf::superlittlewood(&ys, &v).expect("positive degrees"), &oracle)
        })
    })
}

pub fn hook_content_vs_prescribed(n: usize) -> Check {
    let shapes: Vec<Partition> =
        [&[1][..], &[2], &[1, 1], &[2, 1]].iter().map(|p| Partition::new(p.to_vec()).expect("partition")).collect();
    let l = n;
    let sp = cf::super_space();
    let ys: Vec<MultiSeries> = (1..=l)
        .flat_map(|i| {
            [
                MultiSeries::monomial(&sp, vec![2 * i as u32, 1, 0], Integer::from(1), n),
                MultiSeries::monomial(&sp, vec![2 * i as u32 - 1, 0, 1], Integer::from(1), n),
            ]
        })
        .collect();
    let w = SignWord::blocks(2 * l, 0).expect("ℓ ≥ 1");
    check(format!("hook-content product = ⟨∅|…|λ⟩ on +^2ℓ, ℓ = {l}, q^{n}"), shapes, |lambda| {
        let oracle = vertex::prescribed_fn(&w, &Partition::empty(), lambda, &ChainWeights::literal(ys.clone()), n);
        differ(lambda, &cf::hook_content_super(lambda, n), &oracle)
    })
}

/// `⟨∅| ◊ |∅⟩` with energy `q` on every partition.
pub fn extended_oracle_q(d: &DiamondWord, n: usize) -> UniSeries {
    let cw = ChainWeights::uniform(d.len(), &q(n));
    run_chain(d.symbols(), &cw, &StateVector::vacuum(&q(n), n)).amplitude(&Partition::empty())
}

/// `⟨∅| ◊ |∅⟩` with `x_i` grading `|λ^(i)|`, in `extended_space`.
pub fn extended_oracle_multi(d: &DiamondWord, n: usize) -> MultiSeries {
    let sp = cf::extended_space(d.symbols());
    let cw = graded(&sp, d.len(), d.len() - 1, n);
    run_chain(d.symbols(), &cw, &StateVector::vacuum(&cw.energies[0], n)).amplitude(&Partition::empty())
}

pub fn extended_vs_enumeration(max_len: usize, n: usize) -> Check {
    check(
        format!("extended product = enumeration of pure sequences, |◊| ≤ {max_len}, q^{n}"),
        DiamondWord::all_up_to(max_len),
        |d| {
            let counts = counts_to_series(&ext::pure_extended_counts(d, n), n);
            let f = cf::extended_q(d.symbols(), n);
            differ(d, &f, &counts).or_else(|| differ(format!("{d} vs transfer matrix"), &f, &extended_oracle_q(d, n)))
        },
    )
}

pub fn extended_flip_graphs(max_len: usize, max_size: usize) -> Check {
    check(
        format!("matching flip graphs, |◊| ≤ {max_len}, Σ|λ| ≤ {max_size}"),
        DiamondWord::all_up_to(max_len),
        |d| ext::check_flip_graph(d, max_size).counterexample,
    )
}

/// Alternating diamond words against steep tilings: generating functions, refined gradings and
/// flips one instance at a time.
pub fn contraction(max_len: usize, n: usize, budget: usize) -> Check {
    check(format!("contraction to steep tilings, |◊| ≤ {max_len}"), ext::alternating_words(max_len), |d| {
        let w = ext::contract_to_steep(d).expect("alternating");
        if let Some(why) = differ(format!("{d} vs {w}"), &cf::extended_q(d.symbols(), n), &cf::pure_q(&w, n)) {
            return Some(why);
        }
        let nm = n.min(6);
        if let Some(why) = differ(format!("{d} refined"), &cf::extended_multi(d.symbols(), nm), &cf::pure_multi(&w, nm))
            .or_else(|| {
                differ(
                    format!("{d} refined vs transfer matrix"),
                    &cf::extended_multi(d.symbols(), nm),
                    &extended_oracle_multi(d, nm),
                )
            })
        {
            return Some(why);
        }
        for s in pure_sequences(&w, budget) {
            let e = ext::steep_to_ext(&s);
            let m = match ext::psi_inverse(&e, ext::search_half_height(d, budget + 1)) {
                Ok(m) => m,
                Err(e) => return Some(format!("{d} at {:?}: {e}", s.lambdas())),
            };
            let from_matching: BTreeSet<(usize, bool, Vec<Partition>)> = ext::flip_effects(&m)
                .into_iter()
                .map(|(j, dir, t)| (j, dir == FlipDir::Up, t.lambdas().to_vec()))
                .collect();
            let t = match seq_to_tiling(&s, sufficient_half_width(&s) + 2) {
                Ok(t) => t,
                Err(e) => return Some(format!("{s:?}: {e}")),
            };
            let from_tiling: BTreeSet<(usize, bool, Vec<Partition>)> = match t.flips(BoundaryMode::Pure) {
                Ok(fs) => fs
                    .into_iter()
                    .filter_map(|f| f.result.to_seq().ok().map(|r| (f.diagonal, f.ascendent, r.lambdas().to_vec())))
                    .collect(),
                Err(e) => return Some(e.to_string()),
            };
            if from_matching != from_tiling {
                return Some(format!(
                    "{d} at {:?}: matching flips {from_matching:?}, tiling flips {from_tiling:?}",
                    s.lambdas()
                ));
            }
        }
        None
    })
}

fn tiling_key(t: &TilingWindow) -> Vec<Domino> {
    let mut ds = t.dominos().to_vec();
    ds.sort();
    ds
}

/// Breadth-first search over pure tilings with `Σ|λ| ≤ max_size`: distances, per-diagonal counts
/// on every shortest path, and the height-function recomputation.
pub fn steep_flip_graph(max_len: usize, max_size: usize) -> Check {
    check(format!("steep flip graphs, |w| ≤ {max_len}, Σ|λ| ≤ {max_size}"), SignWord::all_up_to(max_len), |w| {
        let a = (max_size + w.len()) as i64 + 2;
        let start = match minimal_tiling(w, a) {
            Ok(t) => t,
            Err(e) => return Some(format!("{w}: {e}")),
        };
        let mut seen: HashMap<Vec<Domino>, (usize, Vec<usize>)> = HashMap::new();
        seen.insert(tiling_key(&start), (0, vec![0; w.len() + 1]));
        let mut queue = VecDeque::from([start]);
        let mut reached = BTreeSet::new();
        while let Some(t) = queue.pop_front() {
            let (d, counts) = seen[&tiling_key(&t)].clone();
            let s = match t.to_seq() {
                Ok(s) => s,
                Err(e) => return Some(format!("{w}: {e}")),
            };
            if s.flip_distance() != d || s.per_diagonal_flips() != counts {
                return Some(format!("{w} at {:?}: distance {d}, counts {counts:?}", s.lambdas()));
            }
            let h = match height_function(&t) {
                Ok(h) => h,
                Err(e) => return Some(format!("{w}: {e}")),
            };
            if h.flip_distance() != d || h.per_diagonal_excess() != counts {
                return Some(format!("{w} at {:?}: height sums disagree", s.lambdas()));
            }
            reached.insert(s.lambdas().to_vec());
            let flips = match t.flips(BoundaryMode::Pure) {
                Ok(f) => f,
                Err(e) => return Some(e.to_string()),
            };
            for f in flips {
                let size = if f.ascendent { d + 1 } else { d - 1 };
                if size > max_size {
                    continue;
                }
                let mut c = counts.clone();
                if f.ascendent {
                    c[f.diagonal] += 1;
                }
                let key = tiling_key(&f.result);
                match seen.get(&key) {
                    None => {
                        seen.insert(key, (d + 1, c));
                        queue.push_back(f.result);
                    }
                    Some((d2, c2)) if *d2 == d + 1 && *c2 != c => {
                        return Some(format!("{w}: shortest paths disagree"));
                    }
                    _ => {}
                }
            }
        }
        let expected: BTreeSet<Vec<Partition>> =
            pure_sequences(w, max_size).into_iter().map(|s| s.lambdas().to_vec()).collect();
        (expected != reached).then(|| format!("{w}: reached {} tilings, expected {}", reached.len(), expected.len()))
    })
}

/// The sequence of the worked example with data `+++++−−−++`.
pub fn example_seq() -> InterlacedSeq {
    let w: SignWord = "+++++---++".parse().expect("word");
    let p = |v: &[u32]| Partition::new(v.to_vec()).expect("partition");
    let mut lambdas = vec![p(&[1, 1]); 6];
    lambdas.extend([p(&[]), p(&[]), p(&[]), p(&[1]), p(&[2, 1])]);
    InterlacedSeq::new(w, lambdas).expect("interlaced")
}

/// The matching example with `◊ = ≺≺≺′≻′≻′≻`.
pub fn matching_example_seq() -> ExtendedSeq {
    let p = |v: &[u32]| Partition::new(v.to_vec()).expect("partition");
    let lambdas = vec![p(&[]), p(&[2]), p(&[2]), p(&[3, 1]), p(&[2, 1]), p(&[1]), p(&[])];
    ExtendedSeq::new("h+,h+,v+,v-,v-,h-".parse().expect("word"), lambdas).expect("interlaced")
}

fn tiling_round_trip(s: &InterlacedSeq) -> Option<String> {
    let t = match seq_to_tiling(s, sufficient_half_width(s)) {
        Ok(t) => t,
        Err(e) => return Some(format!("{:?}: {e}", s.lambdas())),
    };
    let back: TilingWindow = match serde_json::to_string(&t).and_then(|j| serde_json::from_str(&j)) {
        Ok(b) => b,
        Err(e) => return Some(format!("{:?}: {e}", s.lambdas())),
    };
    match back.to_seq() {
        Ok(r) if r == *s => match seq_to_tiling(&r, t.half_width()) {
            Ok(t2) if t2 == t => None,
            _ => Some(format!("{:?}: tiling does not come back", s.lambdas())),
        },
        Ok(r) => Some(format!("{:?} came back as {:?}", s.lambdas(), r.lambdas())),
        Err(e) => Some(format!("{:?}: {e}", s.lambdas())),
    }
}

fn matching_round_trip(s: &ExtendedSeq) -> Option<String> {
    let m = match ext::psi_inverse(s, ext::sufficient_half_height(s)) {
        Ok(m) => m,
        Err(e) => return Some(format!("{:?}: {e}", s.lambdas())),
    };
    let back: ext::MatchingWindow = match serde_json::to_string(&m).and_then(|j| serde_json::from_str(&j)) {
        Ok(b) => b,
        Err(e) => return Some(format!("{:?}: {e}", s.lambdas())),
    };
    let again = ext::MatchingWindow::from_edges(s.diamond(), back.half_height(), back.edges().clone());
    match (m.psi(), again) {
        (Ok(r), Ok(m2)) if r == *s && m2 == m => None,
        (Ok(r), _) if r != *s => Some(format!("{:?} came back as {:?}", s.lambdas(), r.lambdas())),
        (Err(e), _) | (_, Err(e)) => Some(format!("{:?}: {e}", s.lambdas())),
        _ => Some(format!("{:?}: matching does not come back", s.lambdas())),
    }
}

pub fn tiling_fixture() -> Check {
    check("worked example: sequence → tiling → sequence", [example_seq()], tiling_round_trip)
}

pub fn matching_fixture() -> Check {
    check("matching example: sequence → matching → sequence", [matching_example_seq()], matching_round_trip)
}

/// A random walk of ascendent flips from the empty sequence, stopping at `target` or when stuck.
fn random_seq(rng: &mut ChaCha8Rng, max_size: usize) -> InterlacedSeq {
    let len = 2 * rng.gen_range(1..=3);
    let signs = (0..len)
        .map(|_| if rng.gen_bool(0.5) { crate::steep::Sign::Plus } else { crate::steep::Sign::Minus })
        .collect();
    let w = SignWord::new(signs).expect("even length");
    let mode = if rng.gen_bool(0.5) { BoundaryMode::Pure } else { BoundaryMode::Free };
    let target = rng.gen_range(0..=max_size);
    let mut s = InterlacedSeq::empty(&w);
    while s.flip_distance() < target {
        let ups: Vec<InterlacedSeq> =
            s.neighbors(mode).into_iter().filter(|(f, _)| f.dir == FlipDir::Up).map(|(_, t)| t).collect();
        match ups.choose(rng) {
            Some(t) => s = t.clone(),
            None => break,
        }
    }
    s
}

pub fn tiling_round_trips(samples: usize, seed: u64, max_size: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seqs: Vec<InterlacedSeq> = (0..samples).map(|_| random_seq(&mut rng, max_size)).collect();
    check(format!("sequence ↔ tiling on {samples} random instances, Σ|λ| ≤ {max_size}"), seqs, tiling_round_trip)
}

pub fn matching_round_trips(samples: usize, seed: u64, max_size: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut pools: HashMap<DiamondWord, Vec<ExtendedSeq>> = HashMap::new();
    let seqs: Vec<ExtendedSeq> = (0..samples)
        .map(|_| {
            let k = rng.gen_range(1..=5);
            let d = DiamondWord::new((0..k).map(|_| *StripRelation::ALL.choose(&mut rng).expect("nonempty")).collect())
                .expect("nonempty");
            let pool = pools.entry(d.clone()).or_insert_with(|| ext::pure_extended_sequences(&d, max_size));
            pool.choose(&mut rng).expect("the empty sequence").clone()
        })
        .collect();
    check(format!("sequence ↔ matching on {samples} random instances, Σ|λ| ≤ {max_size}"), seqs, matching_round_trip)
}
