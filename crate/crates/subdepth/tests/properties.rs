//! Randomized laws of the depth computation, over small matrices with no
//! zero row or column.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subdepth::bratteli::build_graph;
use subdepth::intmatrix::{
    check_tensor_bound, check_transpose_theorem, IrredundantMatrix, ZeroPattern,
};

fn irredundant() -> impl Strategy<Value = IrredundantMatrix> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, s)| {
            proptest::collection::vec(proptest::collection::vec(0u64..=3, s), r)
        })
        .prop_filter_map("zero row or column", |rows| {
            IrredundantMatrix::from_u64_rows(&rows).ok()
        })
}

proptest! {
    #[test]
    fn least_depth_is_between_one_and_twice_rows_minus_one(m in irredundant()) {
        let report = m.depth();
        let least = report.least_depth();
        let bound = 2 * m.rows() - 1;
        prop_assert!(least >= 1);
        prop_assert!(report.depth >= 2);
        prop_assert!(least <= bound);
    }

    #[test]
    fn minimal_q_works_and_nothing_smaller_does(m in irredundant()) {
        let report = m.depth();
        let n = report.depth;
        let high = m.alt_power(n + 1).value;
        let low = m.alt_power(n - 1).value;
        prop_assert!(high.le_times(&report.minimal_q, &low));
        if report.minimal_q > BigUint::one() {
            let smaller = &report.minimal_q - BigUint::one();
            prop_assert!(!high.le_times(&smaller, &low));
        }
    }

    #[test]
    fn transposing_shifts_least_depth_by_at_most_one(m in irredundant()) {
        prop_assert!(check_transpose_theorem(&m).is_ok());
    }

    #[test]
    fn tensor_least_depth_never_exceeds_the_larger_factor(
        a in irredundant(),
        b in irredundant(),
    ) {
        prop_assert!(check_tensor_bound(&a, &b).is_ok());
    }

    #[test]
    fn graph_depth_equals_matrix_depth(m in irredundant()) {
        let graph = build_graph(&m).graph_depth();
        prop_assert!(graph.is_ok());
        let graph = graph.unwrap();
        prop_assert_eq!(graph.depth, m.depth().depth);
        // Clamped at two: an odd depth of one records the depth-one case,
        // while the combined depth follows the matrix convention.
        prop_assert_eq!(graph.depth, graph.odd_depth.min(graph.even_depth).max(2));
    }

    #[test]
    fn depth_is_invariant_under_row_and_column_relabelling(
        m in irredundant(),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut row_perm: Vec<usize> = (0..m.rows()).collect();
        let mut col_perm: Vec<usize> = (0..m.cols()).collect();
        row_perm.shuffle(&mut rng);
        col_perm.shuffle(&mut rng);
        let before = m.depth();
        let after = m.permuted(&row_perm, &col_perm).depth();
        prop_assert_eq!(before.depth, after.depth);
        prop_assert_eq!(before.depth_one, after.depth_one);
        prop_assert_eq!(before.minimal_q, after.minimal_q);
    }

    #[test]
    fn alternating_power_supports_grow_until_they_stabilize(m in irredundant()) {
        let n = m.depth().depth;
        // Supports along the alternating powers only ever gain entries,
        // and from depth onward the pattern of same-parity powers is fixed.
        for k in 1..=n + 2 {
            let low = ZeroPattern::of(&m.alt_power(k).value);
            let high = ZeroPattern::of(&m.alt_power(k + 2).value);
            prop_assert!(high.zeros_subset_of(&low), "support shrank at exponent {}", k);
            if k >= n - 1 {
                prop_assert_eq!(&low, &high, "pattern still moving at exponent {}", k);
            }
        }
    }

    #[test]
    fn depth_one_means_block_diagonal_square(m in irredundant()) {
        let report = m.depth();
        let s = m.square();
        let off_diagonal_zero = (0..s.rows())
            .all(|i| (0..s.cols()).all(|j| i == j || s.get(i, j).is_zero()));
        prop_assert_eq!(report.depth_one, off_diagonal_zero);
    }
}
