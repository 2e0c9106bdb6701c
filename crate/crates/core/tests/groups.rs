mod support;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

use dihedral_core::dihedral::{evaluate_word, examine_character};
use dihedral_core::{
    decide, find_psi, reidemeister_schreier, tau_action, DInfElement, Letter, Presentation, Verdict, Word,
    DEFAULT_CAP,
};

// D as affine maps x ↦ s·x + t, multiplied as 2×2 matrices; a is x ↦ -x and
// b is x ↦ 1 - x.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Affine {
    s: i64,
    t: i64,
}

impl Affine {
    const ID: Affine = Affine { s: 1, t: 0 };
    const A: Affine = Affine { s: -1, t: 0 };
    const B: Affine = Affine { s: -1, t: 1 };

    fn then(self, o: Affine) -> Affine {
        // matrix product self · o
        Affine {
            s: self.s * o.s,
            t: self.s * o.t + self.t,
        }
    }

    fn inverse(self) -> Affine {
        Affine {
            s: self.s,
            t: -self.s * self.t,
        }
    }

    fn pow(self, k: i64) -> Affine {
        let base = if k < 0 { self.inverse() } else { self };
        (0..k.unsigned_abs()).fold(Affine::ID, |acc, _| acc.then(base))
    }
}

fn affine(e: &DInfElement) -> Affine {
    let flip = if e.flip { Affine::A } else { Affine::ID };
    flip.then(Affine::A.then(Affine::B).pow(e.shift.to_i64().unwrap()))
}

fn affine_word(images: &[Affine], w: &Word) -> Affine {
    w.letters().iter().fold(Affine::ID, |acc, l| {
        let x = images[l.generator];
        acc.then(if l.inverse { x.inverse() } else { x })
    })
}

fn word(generators: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..generators, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::new(ls.into_iter().map(|(g, i)| Letter::new(g, i)).collect()))
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(word(n, 6), 0..=3).prop_map(move |relators| {
            let names = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
            Presentation::new(names, relators).unwrap()
        })
    })
}

fn dinf() -> impl Strategy<Value = DInfElement> {
    (any::<bool>(), -20i64..=20).prop_map(|(f, s)| DInfElement::new(f, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normalisation_is_idempotent(w in word(3, 12)) {
        let n = w.normalize();
        prop_assert!(n.is_reduced());
        prop_assert_eq!(n.normalize(), n.clone());
        prop_assert!(w.mul(&w.inverse()).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.inverse().normalize(), n.inverse());
    }

    #[test]
    fn dinf_is_associative_and_matches_the_affine_model(x in dinf(), y in dinf(), z in dinf()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(affine(&(&x * &y)), affine(&x).then(affine(&y)));
        prop_assert!((&x * &x.inverse()).is_identity());
        prop_assert_eq!(affine(&x.inverse()), affine(&x).inverse());
    }

    #[test]
    fn rewriting_is_a_homomorphism(p in presentation(), u in word(3, 8), v in word(3, 8)) {
        let n = p.generator_count();
        let clamp = |w: &Word| Word::new(w.letters().iter().map(|l| Letter::new(l.generator % n, l.inverse)).collect());
        for chi in p.enumerate_characters(DEFAULT_CAP).unwrap() {
            let k = reidemeister_schreier(&p, &chi).unwrap();
            let g = Word::generator(k.transversal());
            let into_k = |w: Word| if chi.evaluate(&w) { w.mul(&g) } else { w.normalize() };
            let (u, v) = (into_k(clamp(&u)), into_k(clamp(&v)));
            let lhs = k.rewrite(&u.mul(&v)).unwrap();
            let rhs = k.rewrite(&u).unwrap().mul(&k.rewrite(&v).unwrap());
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(k.generators().len(), 2 * n - 1);
            prop_assert!(k.b1() >= p.b1());
        }
    }

    #[test]
    fn construction_agrees_with_betti_comparison(p in presentation()) {
        let b1 = p.b1();
        let characters = p.enumerate_characters(DEFAULT_CAP).unwrap();
        prop_assert_eq!(characters.len(), (1usize << p.mod2_dimension()) - 1);
        let mut any_realizable = false;
        for chi in &characters {
            let k = reidemeister_schreier(&p, chi).unwrap();
            let tau = tau_action(&k).unwrap();
            let psi = find_psi(&tau, b1).unwrap();
            let verdict = examine_character(&p, chi, b1).unwrap();
            prop_assert_eq!(psi.is_some(), k.b1() > b1);
            prop_assert_eq!(verdict.realizable(), k.b1() > b1);
            any_realizable |= verdict.realizable();

            if let Some(s) = verdict.surjection {
                let images: Vec<Affine> = s.images().iter().map(affine).collect();
                for r in p.relators() {
                    prop_assert_eq!(affine_word(&images, r), Affine::ID);
                    prop_assert!(evaluate_word(s.images(), r).is_identity());
                }
                for (x, image) in s.images().iter().enumerate() {
                    prop_assert_eq!(image.flip, chi.get(x));
                }
                let negated: Vec<BigInt> = s.psi().iter().map(|x| -x).collect();
                prop_assert_eq!(s.action().left_mul_vec(s.psi()), negated);
                let g2 = Word::generator(s.transversal()).pow(2);
                prop_assert!(tau.evaluate(s.psi(), &g2).unwrap().is_zero());
            }
        }
        prop_assert_eq!(decide(&p, DEFAULT_CAP).unwrap().is_yes(), any_realizable);
    }

    #[test]
    fn decide_is_invariant_under_conjugating_a_relator(p in presentation(), w in word(3, 3), which in 0usize..3) {
        prop_assume!(!p.relators().is_empty());
        let n = p.generator_count();
        let w = Word::new(w.letters().iter().map(|l| Letter::new(l.generator % n, l.inverse)).collect());
        let mut relators = p.relators().to_vec();
        let i = which % relators.len();
        relators[i] = relators[i].conjugate_by(&w);
        let q = p.with_relators(relators).unwrap();
        let (a, b) = (decide(&p, DEFAULT_CAP).unwrap(), decide(&q, DEFAULT_CAP).unwrap());
        prop_assert_eq!(a.is_yes(), b.is_yes());
        prop_assert_eq!(a.evidence(), b.evidence());
    }
}

#[test]
fn free_groups_have_the_schreier_rank() {
    for n in 1..=4 {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let p = Presentation::free(&names).unwrap();
        for chi in p.enumerate_characters(DEFAULT_CAP).unwrap() {
            let k = reidemeister_schreier(&p, &chi).unwrap();
            assert_eq!(k.generators().len(), 2 * n - 1);
            assert!(k.presentation().relators().is_empty());
            assert_eq!(k.b1(), 2 * n - 1);
        }
    }
}

#[test]
fn decide_no_lists_every_character() {
    let p = support::group("<x, y | x y x = y x y>");
    match decide(&p, DEFAULT_CAP).unwrap() {
        Verdict::No { evidence } => {
            assert_eq!(evidence.len(), 1);
            assert!(evidence.iter().all(|e| e.b1_subgroup == e.b1_parent));
        }
        v => panic!("trefoil group should not surject: {v:?}"),
    }
}

#[test]
fn dinf_generators_in_the_affine_model() {
    assert_eq!(affine(&DInfElement::a()), Affine::A);
    assert_eq!(affine(&DInfElement::b()), Affine::B);
    assert_eq!(Affine::A.then(Affine::A), Affine::ID);
    assert_eq!(Affine::B.then(Affine::B), Affine::ID);
    assert!(BigInt::one() == DInfElement::new(false, 1).shift);
}
