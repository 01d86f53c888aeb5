use proptest::prelude::*;
use proptest::sample::Index;

use steep::closed_forms as cf;
use steep::extended::{self as ext, DiamondWord};
use steep::steep::{
    height_function, pure_sequences, seq_to_tiling, sufficient_half_width, BoundaryMode, Sign, SignWord,
};
use steep::{interlaced, strip_extensions, Half, Integer, MayaDiagram, Partition, StripRelation, UniSeries};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..6, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_padded(v).unwrap()
    })
}

fn word(max_half: usize) -> impl Strategy<Value = SignWord> {
    prop::collection::vec(any::<bool>(), 1..=max_half).prop_flat_map(|h| {
        prop::collection::vec(any::<bool>(), 2 * h.len()).prop_map(|signs| {
            SignWord::new(signs.into_iter().map(|p| if p { Sign::Plus } else { Sign::Minus }).collect()).unwrap()
        })
    })
}

fn diamond(max_len: usize) -> impl Strategy<Value = DiamondWord> {
    prop::collection::vec(0usize..4, 1..=max_len)
        .prop_map(|v| DiamondWord::new(v.into_iter().map(|i| StripRelation::ALL[i]).collect()).unwrap())
}

fn series(n: usize) -> impl Strategy<Value = UniSeries> {
    prop::collection::vec(-5i64..6, n + 1)
        .prop_map(move |c| UniSeries::from_coeffs(c.into_iter().map(Integer::from).collect(), n))
}

fn relation() -> impl Strategy<Value = StripRelation> {
    (0usize..4).prop_map(|i| StripRelation::ALL[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn strips_conjugate_and_reverse(mu in partition(), lambda in partition()) {
        let h = interlaced(&mu, &lambda, StripRelation::HPlus);
        prop_assert_eq!(h, interlaced(&mu.conjugate(), &lambda.conjugate(), StripRelation::VPlus));
        prop_assert_eq!(h, interlaced(&lambda, &mu, StripRelation::HMinus));
    }

    #[test]
    fn strip_extensions_are_interlaced(lambda in partition(), rel in relation()) {
        let cap = lambda.size() + 4;
        for mu in strip_extensions(&lambda, rel, cap) {
            prop_assert!(interlaced(&mu, &lambda, rel), "{} {} {}", mu, rel, lambda);
            prop_assert!(mu.size() <= cap);
        }
    }

    #[test]
    fn maya_diagram_reads_back(p in partition(), twice in -6i64..6) {
        let charge = Half::from_twice(2 * twice);
        let m = MayaDiagram::new(p, charge);
        let back = MayaDiagram::from_sites(charge + Half::HALF, m.bottom(), m.top(), |x| m.is_occupied(x)).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn series_ring_laws(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn units_invert(a in series(7)) {
        let unit = &UniSeries::one(7) + &(&a * &UniSeries::monomial(1, Integer::from(1), 7));
        prop_assert_eq!(&unit * &unit.inverse().unwrap(), UniSeries::one(7));
    }

    #[test]
    fn hook_product_is_the_pure_product(w in word(6)) {
        prop_assert_eq!(cf::hook_q(&w, 10), cf::pure_q(&w, 10));
        prop_assert_eq!(cf::pure_q(&cf::strip_inert(&w).unwrap(), 10), cf::pure_q(&w, 10));
    }

    #[test]
    fn refined_products_specialize(w in word(2)) {
        for mode in [BoundaryMode::Pure, BoundaryMode::Mixed, BoundaryMode::Free, BoundaryMode::Periodic] {
            if let Ok(m) = cf::formula_multi(mode, &w, 7) {
                prop_assert_eq!(m.principal(), cf::formula_q(mode, &w, 7).unwrap(), "{:?} {}", mode, w);
            }
        }
    }

    #[test]
    fn refined_extended_product_specializes(d in diamond(5)) {
        prop_assert_eq!(cf::extended_multi(d.symbols(), 7).principal(), cf::extended_q(d.symbols(), 7));
    }

    #[test]
    fn sequences_and_tilings_correspond(w in word(3), pick in any::<Index>()) {
        let seqs = pure_sequences(&w, 5);
        let s = pick.get(&seqs);
        let t = seq_to_tiling(s, sufficient_half_width(s)).unwrap();
        prop_assert_eq!(&t.to_seq().unwrap(), s);
        let h = height_function(&t).unwrap();
        prop_assert_eq!(h.flip_distance(), s.flip_distance());
        let sizes: Vec<usize> = s.lambdas().iter().map(Partition::size).collect();
        prop_assert_eq!(h.per_diagonal_excess(), sizes);
    }

    #[test]
    fn flips_are_reversible(w in word(3), pick in any::<Index>()) {
        let seqs = pure_sequences(&w, 4);
        let s = pick.get(&seqs);
        for (_, t) in s.neighbors(BoundaryMode::Pure) {
            prop_assert!(t.neighbors(BoundaryMode::Pure).iter().any(|(_, u)| u == s));
            prop_assert_eq!(t.flip_distance().abs_diff(s.flip_distance()), 1);
        }
    }

    #[test]
    fn sequences_and_matchings_correspond(d in diamond(5), pick in any::<Index>()) {
        let seqs = ext::pure_extended_sequences(&d, 5);
        let s = pick.get(&seqs);
        let m = ext::psi_inverse(s, ext::sufficient_half_height(s)).unwrap();
        prop_assert_eq!(&m.psi().unwrap(), s);
        for (_, flipped) in m.flips() {
            let back = flipped.psi().unwrap();
            prop_assert_eq!(back.size().abs_diff(s.size()), 1);
        }
    }
}
