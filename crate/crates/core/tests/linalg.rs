mod support;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use dihedral_core::intlinalg::{content_and_primitive, rank_and_betti, smith_normal_form, Mod2Matrix};
use dihedral_core::IntMatrix;
use support::{bareiss_abs_det, bareiss_rank, big_rows};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    let cols = rows[0].len();
    IntMatrix::from_rows(cols, big_rows(rows))
}

fn rows_of(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalisation(rows in matrix()) {
        let a = to_matrix(&rows);
        let snf = smith_normal_form(&a);
        prop_assert_eq!(snf.u().mul(&a).mul(snf.v()), snf.d().clone());
        prop_assert!(snf.v().mul(snf.v_inv()).is_identity());
        prop_assert_eq!(bareiss_abs_det(&rows_of(snf.u())), BigInt::one());
        prop_assert_eq!(bareiss_abs_det(&rows_of(snf.v())), BigInt::one());

        let d = snf.d();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    prop_assert!(d.get(i, j).is_zero());
                }
            }
        }
        let factors = snf.invariant_factors();
        prop_assert!(factors.iter().all(|f| f.is_positive()));
        for w in factors.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]), "{} does not divide {}", w[0], w[1]);
        }
    }

    #[test]
    fn rank_matches_fraction_free_elimination(rows in matrix()) {
        let a = to_matrix(&rows);
        let expected = bareiss_rank(&big_rows(&rows));
        prop_assert_eq!(smith_normal_form(&a).rank(), expected);
        let (rank, betti) = rank_and_betti(&a, rows[0].len());
        prop_assert_eq!(rank, expected);
        prop_assert_eq!(betti, rows[0].len() - expected);
    }

    #[test]
    fn product_of_invariant_factors_is_the_determinant(
        rows in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
    ) {
        let a = to_matrix(&rows);
        let snf = smith_normal_form(&a);
        let det = bareiss_abs_det(&big_rows(&rows));
        let product: BigInt = if snf.rank() == rows.len() {
            snf.invariant_factors().iter().product()
        } else {
            BigInt::zero()
        };
        prop_assert_eq!(&product, &det);
        prop_assert_eq!(a.abs_determinant(), det);
    }

    #[test]
    fn mod2_rank_is_at_most_integer_rank(rows in matrix()) {
        let a = to_matrix(&rows);
        prop_assert!(Mod2Matrix::reduce(&a).rank() <= smith_normal_form(&a).rank());
    }

    #[test]
    fn primitive_part_has_unit_content(v in prop::collection::vec(-50i64..=50, 1..6)) {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        match content_and_primitive(&big) {
            Ok((content, primitive)) => {
                prop_assert!(content.is_positive());
                let g = primitive.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                prop_assert!(g.is_one());
                let first = primitive.iter().find(|x| !x.is_zero()).unwrap();
                prop_assert!(first.is_positive());
                let scale = if big.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
                    -&content
                } else {
                    content.clone()
                };
                for (x, p) in big.iter().zip(&primitive) {
                    prop_assert_eq!(x, &(p * &scale));
                }
            }
            Err(_) => prop_assert!(v.iter().all(|&x| x == 0)),
        }
    }
}

#[test]
fn smith_form_of_the_empty_relator_matrix() {
    let snf = smith_normal_form(&IntMatrix::zeros(0, 3));
    assert_eq!(snf.rank(), 0);
    assert!(snf.v().is_identity());
}

#[test]
fn divisibility_is_forced_on_coprime_diagonals() {
    let snf = smith_normal_form(&IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]));
    assert_eq!(snf.invariant_factors(), &[BigInt::from(1), BigInt::from(6)]);
}
