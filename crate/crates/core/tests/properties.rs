//! Property tests over permutations, groups and small solutions.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use ybe::enumerate::enumerate_square_free;
use ybe::json::{read_solution, write_solution};
use ybe::retract::{multipermutation_level, ret_rho, strong_level};
use ybe::structure::{eval_word, project_word, Letter, Word};
use ybe::twisted::find_gtu_decomposition;
use ybe::{Perm, PermGroup, Solution};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn sized_perm() -> impl Strategy<Value = Perm> {
    (1usize..10).prop_flat_map(perm)
}

fn universe() -> &'static Vec<Solution> {
    static ALL: OnceLock<Vec<Solution>> = OnceLock::new();
    ALL.get_or_init(|| {
        (1..=5)
            .flat_map(|n| enumerate_square_free(n, false).unwrap())
            .collect()
    })
}

/// A random square-free solution on at most 5 points and a relabeling.
fn solution_and_relabeling() -> impl Strategy<Value = (Solution, Perm)> {
    (0..universe().len()).prop_flat_map(|k| {
        let s = universe()[k].clone();
        let n = s.n();
        (Just(s), perm(n))
    })
}

fn word(n: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, any::<bool>()), 0..8).prop_map(|letters| {
        Word::new(
            letters
                .into_iter()
                .map(|(generator, inverse)| Letter { generator, inverse })
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn images_are_a_permutation(p in sized_perm()) {
        let mut images = p.images().to_vec();
        images.sort_unstable();
        prop_assert_eq!(images, (0..p.degree()).collect::<Vec<_>>());
    }

    #[test]
    fn cycles_round_trip(p in sized_perm()) {
        prop_assert_eq!(&Perm::from_cycles(p.degree(), &p.cycles()).unwrap(), &p);
        prop_assert_eq!(&Perm::parse_cycles(p.degree(), &p.to_string()).unwrap(), &p);
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(&serde_json::from_str::<Perm>(&text).unwrap(), &p);
    }

    #[test]
    fn inverse_and_composition(p in perm(6), q in perm(6), r in perm(6)) {
        prop_assert!((&p * &p.inverse()).is_identity());
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!((&p * &q).inverse(), &q.inverse() * &p.inverse());
        prop_assert_eq!(p.conjugate_by(&q).cycle_type(), p.cycle_type());
    }

    #[test]
    fn closure_is_idempotent(gens in prop::collection::vec(perm(5), 1..4)) {
        let g = PermGroup::new(gens).unwrap().closure().unwrap();
        let elements = g.elements().unwrap().to_vec();
        let again = PermGroup::new(elements.clone()).unwrap().closure().unwrap();
        prop_assert_eq!(again.elements().unwrap(), elements.as_slice());
        prop_assert_eq!(again.orbits(), g.orbits());
        prop_assert_eq!(120 % elements.len(), 0);
    }

    #[test]
    fn abelian_generators_commute(gens in prop::collection::vec(perm(5), 1..4)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let commute = gens.iter().all(|a| gens.iter().all(|b| a * b == b * a));
        prop_assert_eq!(g.is_abelian(), commute);
    }

    #[test]
    fn canonical_form_is_a_relabeling_invariant((s, p) in solution_and_relabeling()) {
        let t = s.relabel(&p);
        prop_assert!(t.validate().is_solution());
        let c = s.canonical_form().unwrap();
        prop_assert_eq!(&t.canonical_form().unwrap(), &c);
        prop_assert_eq!(&c.canonical_form().unwrap(), &c);
        let found = s.is_isomorphic(&t).expect("relabeling is an isomorphism");
        prop_assert_eq!(s.relabel(&found), t);
    }

    #[test]
    fn canonical_form_stays_in_class((s, _p) in solution_and_relabeling()) {
        let c = s.canonical_form().unwrap();
        let oracle = common::lex_min_form(&common::sigmas_of(&s));
        prop_assert_eq!(common::lex_min_form(&common::sigmas_of(&c)), oracle);
    }

    #[test]
    fn invariants_survive_relabeling((s, p) in solution_and_relabeling()) {
        let t = s.relabel(&p);
        prop_assert_eq!(multipermutation_level(&s).unwrap(), multipermutation_level(&t).unwrap());
        prop_assert_eq!(strong_level(&s).unwrap(), strong_level(&t).unwrap());
        prop_assert_eq!(s.orbits().num_classes(), t.orbits().num_classes());
        prop_assert_eq!(
            find_gtu_decomposition(&s).unwrap().is_some(),
            find_gtu_decomposition(&t).unwrap().is_some()
        );
        prop_assert!(ret_rho(&s).is_ok());
    }

    #[test]
    fn r_is_an_involution((s, _p) in solution_and_relabeling()) {
        for i in 0..s.n() {
            for j in 0..s.n() {
                let (k, l) = s.r(i, j);
                prop_assert_eq!(s.r(k, l), (i, j));
            }
        }
    }

    #[test]
    fn documents_round_trip((s, _p) in solution_and_relabeling()) {
        let text = write_solution(&s);
        let back = read_solution(&text).unwrap();
        prop_assert_eq!(write_solution(&back), text);
        prop_assert_eq!(back, s);
    }

    #[test]
    fn structure_product_is_associative(
        (s, a, b, c) in (0..universe().len()).prop_flat_map(|k| {
            let s = universe()[k].clone();
            let n = s.n();
            (Just(s), word(n), word(n), word(n))
        })
    ) {
        let (x, y, z) = (eval_word(&s, &a).unwrap(), eval_word(&s, &b).unwrap(), eval_word(&s, &c).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(eval_word(&s, &a.concat(&b)).unwrap(), x.mul(&y).unwrap());
        prop_assert_eq!(&x.perm, &project_word(&s, &a).unwrap());
        prop_assert!(x.mul(&x.inv().unwrap()).unwrap().is_identity());
        prop_assert!(s.iyb_group().contains(&x.perm).unwrap());
    }

    #[test]
    fn word_text_round_trips(w in word(9)) {
        prop_assert_eq!(&w.to_string().parse::<Word>().unwrap(), &w);
    }
}
