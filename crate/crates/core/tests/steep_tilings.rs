use std::collections::BTreeSet;

use steep::chain::{chains, Candidates, End};
use steep::steep::*;
use steep::Partition;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn example() -> InterlacedSeq {
    let w: SignWord = "+++++---++".parse().unwrap();
    let mut lambdas = vec![p(&[1, 1]); 6];
    lambdas.extend([p(&[]), p(&[]), p(&[]), p(&[1]), p(&[2, 1])]);
    InterlacedSeq::new(w, lambdas).unwrap()
}

fn all_sequences(w: &SignWord, budget: usize, pure: bool) -> Vec<InterlacedSeq> {
    let end = if pure { End::Fixed(Partition::empty()) } else { End::Free };
    chains(&w.relations(), &end, &end, budget, Candidates::Strips)
        .into_iter()
        .map(|ls| InterlacedSeq::new(w.clone(), ls).unwrap())
        .collect()
}

#[test]
fn example_tiling_reads_back() {
    let s = example();
    let a = sufficient_half_width(&s);
    let t = seq_to_tiling(&s, a).unwrap();
    assert_eq!(t.to_seq().unwrap(), s);
    assert_eq!(t.asymptotic_data().unwrap().to_string(), "+++++---++");
    let hf = height_function(&t).unwrap();
    assert_eq!(hf.flip_distance(), 16);
    assert_eq!(hf.per_diagonal_excess(), vec![2, 2, 2, 2, 2, 2, 0, 0, 0, 1, 3]);
}

#[test]
fn tiling_json_roundtrip() {
    let s = example();
    let t = seq_to_tiling(&s, sufficient_half_width(&s)).unwrap();
    let j = serde_json::to_string(&t).unwrap();
    assert!(j.contains(r#""orient":"h""#) || j.contains(r#""orient":"v""#));
    let back: TilingWindow = serde_json::from_str(&j).unwrap();
    assert_eq!(back, t);
    let mut v: serde_json::Value = serde_json::from_str(&j).unwrap();
    v["dominos"].as_array_mut().unwrap().pop();
    assert!(serde_json::from_value::<TilingWindow>(v).is_err());
}

#[test]
fn bijection_round_trip_all_small() {
    for len in [2, 4, 6] {
        let budget = if len == 6 { 5 } else { 8 };
        for w in SignWord::all(len) {
            for s in all_sequences(&w, budget, false) {
                let a = sufficient_half_width(&s);
                let t = seq_to_tiling(&s, a).unwrap();
                assert_eq!(t.to_seq().unwrap(), s);
                assert_eq!(t.asymptotic_data().unwrap(), w);
            }
        }
    }
}

#[test]
fn height_sum_matches_sizes() {
    for len in [2, 4] {
        for w in SignWord::all(len) {
            for s in all_sequences(&w, 5, false) {
                let t = seq_to_tiling(&s, sufficient_half_width(&s)).unwrap();
                let hf = height_function(&t).unwrap();
                assert_eq!(hf.per_diagonal_excess(), s.per_diagonal_flips(), "{s:?}");
            }
        }
    }
}

#[test]
fn height_gap_across_sites() {
    let s = example();
    let t = seq_to_tiling(&s, sufficient_half_width(&s)).unwrap();
    let hf = height_function(&t).unwrap();
    let two_l = s.word().len() as i64;
    let mut seen = 0;
    for (&(x, y), &h) in hf.values() {
        let m = x - y;
        if m < 1 || m >= two_l {
            continue;
        }
        if let Some(h2) = hf.get(x + 1, y + 1) {
            let occupied = t.is_occupied((x, y)).unwrap();
            assert_eq!(h2 - h, if occupied { -2 } else { 2 });
            seen += 1;
        }
    }
    assert!(seen > 50);
}

#[test]
fn single_flip_changes_one_vertex_by_four() {
    let w: SignWord = "+-+-".parse().unwrap();
    let a = 6;
    let min = minimal_tiling(&w, a).unwrap();
    let h0 = height_function(&min).unwrap();
    for f in min.flips(BoundaryMode::Free).unwrap() {
        assert!(f.ascendent);
        let h1 = height_function(&f.result).unwrap();
        let diffs: Vec<i64> = h0.values().iter().map(|(k, v)| h1.values()[k] - v).filter(|d| *d != 0).collect();
        assert_eq!(diffs, vec![4]);
    }
}

fn flip_signature(from: &InterlacedSeq, to: &InterlacedSeq) -> (usize, bool) {
    let a = from.per_diagonal_flips();
    let b = to.per_diagonal_flips();
    let m = (0..a.len()).find(|&i| a[i] != b[i]).unwrap();
    (m, b[m] > a[m])
}

#[test]
fn tiling_flips_match_sequence_flips() {
    for mode in [BoundaryMode::Pure, BoundaryMode::Mixed, BoundaryMode::Free] {
        for len in [2, 4] {
            for w in SignWord::all(len) {
                for s in all_sequences(&w, 4, mode == BoundaryMode::Pure) {
                    if mode == BoundaryMode::Mixed && !s.lambda(0).is_empty() {
                        continue;
                    }
                    let t = seq_to_tiling(&s, sufficient_half_width(&s) + 1).unwrap();
                    let from_tiling: BTreeSet<(InterlacedSeq, usize, bool)> = t
                        .flips(mode)
                        .unwrap()
                        .into_iter()
                        .map(|f| (f.result.to_seq().unwrap(), f.diagonal, f.ascendent))
                        .collect();
                    let from_seq: BTreeSet<(InterlacedSeq, usize, bool)> = s
                        .neighbors(mode)
                        .into_iter()
                        .map(|(f, n)| {
                            assert_eq!(flip_signature(&s, &n), (f.m, f.dir == FlipDir::Up));
                            (n, f.m, f.dir == FlipDir::Up)
                        })
                        .collect();
                    assert_eq!(from_tiling, from_seq, "{mode:?} {s:?}");
                }
            }
        }
    }
}

#[test]
fn minimal_tiling_frontier_path() {
    for w in SignWord::all_up_to(6) {
        let a = w.charges().iter().map(|c| c.abs()).max().unwrap() + 1;
        let t = minimal_tiling(&w, a).unwrap();
        for m in 0..=w.len() {
            let (x, y) = frontier_point(&w, m);
            // the frontier separates occupied sites (left) from empty ones (right) on diagonal m
            assert!(t.is_occupied((x - 1, y - 1)).unwrap());
            assert!(!t.is_occupied((x, y)).unwrap());
        }
    }
}

#[test]
fn aztec_confinement() {
    for l in 1..=3 {
        let w = SignWord::aztec(l).unwrap();
        let max_degree: usize = (1..=l).map(|i| (l + 1 - i) * (2 * i - 1)).sum();
        let seqs = pure_sequences(&w, max_degree + 2);
        assert_eq!(seqs.len(), 1 << (l * (l + 1) / 2));
        for s in &seqs {
            assert!(aztec_check(l, s).unwrap().confined());
        }
    }
    let seqs = pure_sequences(&SignWord::aztec(4).unwrap(), 40);
    assert_eq!(seqs.len(), 1024);
}

#[test]
fn pyramid_sequences_follow_the_chain() {
    for l in 1..=4 {
        let rels = pyramid_relations(l);
        for s in pure_sequences(&pyramid_word(l).unwrap(), 6) {
            for (i, r) in rels.iter().enumerate() {
                assert!(steep::interlaced(s.lambda(i), s.lambda(i + 1), *r));
            }
        }
    }
}

#[test]
fn overpartition_round_trip() {
    for l in 1..=3 {
        let w = SignWord::new(vec![Sign::Plus; 2 * l]).unwrap();
        let start = End::Fixed(Partition::empty());
        for ls in chains(&w.relations(), &start, &End::Free, 7, Candidates::Strips) {
            let s = InterlacedSeq::new(w.clone(), ls).unwrap();
            let o = seq_to_overpartition(&s).unwrap();
            assert_eq!(overpartition_to_seq(&o, l).unwrap(), s);
        }
    }
}
