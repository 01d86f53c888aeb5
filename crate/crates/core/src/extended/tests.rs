use super::*;
use crate::half::Half;
use crate::partition::Partition;
use crate::steep::FlipDir;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn d(s: &str) -> DiamondWord {
    s.parse().unwrap()
}

fn six_step_example() -> ExtendedSeq {
    let lambdas = vec![p(&[]), p(&[2]), p(&[2]), p(&[3, 1]), p(&[2, 1]), p(&[1]), p(&[])];
    ExtendedSeq::new(d("h+,h+,v+,v-,v-,h-"), lambdas).unwrap()
}

#[test]
fn six_step_matching_round_trip() {
    let s = six_step_example();
    let m = psi_inverse(&s, sufficient_half_height(&s)).unwrap();
    assert_eq!(m.psi().unwrap(), s);
    let again = MatchingWindow::from_edges(s.diamond(), m.half_height(), m.edges().clone()).unwrap();
    assert_eq!(again, m);
    assert!(psi_inverse(&s, 1).is_err());
}

#[test]
fn minimal_matching_is_split_by_y() {
    let w = d("h+,h+,v+,v-,v-,h-");
    let m = minimal_matching(&w, 6).unwrap();
    let g = m.geometry();
    for j in 0..=w.len() {
        for y in g.ordinates(2 * j, Half::int(-6), Half::int(6)) {
            assert_eq!(m.left_matched(Vertex::new(2 * j, y)), y < g.y_zero(j), "V_{j} at {y}");
        }
    }
}

#[test]
fn first_flip_of_two_letter_word() {
    let m = minimal_matching(&d("h+,h-"), 5).unwrap();
    let flips = m.flips();
    assert_eq!(flips.len(), 1);
    let (f, next) = &flips[0];
    assert_eq!(f.dir, FlipDir::Up);
    assert_eq!(f.abscissa(), Half::from_twice(3));
    assert_eq!(next.psi().unwrap().lambdas(), &[p(&[]), p(&[1]), p(&[])]);
    let (back_flip, back) = next.flip(f.face).unwrap();
    assert_eq!(back_flip.dir, FlipDir::Down);
    assert_eq!(back, m);
}

#[test]
fn non_admissible_edges_rejected() {
    let m = minimal_matching(&d("h+,h-"), 5).unwrap();
    let mut edges = m.edges().clone();
    let first = *edges.iter().next().unwrap();
    edges.remove(&first);
    assert!(MatchingWindow::from_edges(&d("h+,h-"), 5, edges).is_err());
}

#[test]
fn flip_graph_small_words() {
    for w in DiamondWord::all_up_to(3) {
        let r = check_flip_graph(&w, 4);
        assert!(r.passed(), "{w}: {r:?}");
    }
}

#[test]
fn plane_partition_slices() {
    let array = vec![vec![4, 4, 2], vec![3, 2], vec![1]];
    let s = plane_partition_adapter(3, &array).unwrap();
    let expected = [p(&[]), p(&[1]), p(&[3]), p(&[4, 2]), p(&[4]), p(&[2]), p(&[])];
    assert_eq!(s.lambdas(), &expected[..]);
    assert_eq!(plane_partition_array(&s).unwrap(), array);
    assert!(plane_partition_adapter(3, &[vec![1, 2]]).is_err());
    assert!(plane_partition_adapter(1, &[vec![1, 1]]).is_err());
    let empty = plane_partition_adapter(2, &[]).unwrap();
    assert_eq!(empty, ExtendedSeq::empty(&plane_partition_word(2).unwrap()));
}

#[test]
fn json_shape() {
    let s = six_step_example();
    let j = serde_json::to_value(&s).unwrap();
    assert_eq!(j["diamond"], "h+,h+,v+,v-,v-,h-");
    assert_eq!(j["partitions"][3], serde_json::json!([3, 1]));
    let back: ExtendedSeq = serde_json::from_value(j).unwrap();
    assert_eq!(back, s);
    let bad = serde_json::json!({"diamond": "h+,h-", "partitions": [[], [1, 1], []]});
    assert!(serde_json::from_value::<ExtendedSeq>(bad).is_err());
}
