//! Character tables and matrices compiled into the library.
//!
//! Tables whose label appears in [`GENERATED_LABELS`] are byte-identical to
//! the output of [`table_generate`](super::generate::table_generate); a test
//! below keeps them from drifting. The remaining tables (the Klein four-group
//! and the alternating series) were entered by hand and are only checked for
//! orthogonality here, with their restriction arithmetic exercised elsewhere.

/// `(label, file contents)` for every bundled character table. The order is
/// the trial order used when a group arrives without an explicit table: an
/// entry is only accepted if its class data lines up with the group, so all
/// that matters for correctness is that the list is deterministic.
pub const TABLES: &[(&str, &str)] = &[
    ("A4", include_str!("../../assets/tables/A4.tab")),
    ("A5", include_str!("../../assets/tables/A5.tab")),
    ("A6", include_str!("../../assets/tables/A6.tab")),
    ("C2", include_str!("../../assets/tables/C2.tab")),
    ("C3", include_str!("../../assets/tables/C3.tab")),
    ("C4", include_str!("../../assets/tables/C4.tab")),
    ("C5", include_str!("../../assets/tables/C5.tab")),
    ("C6", include_str!("../../assets/tables/C6.tab")),
    ("D8", include_str!("../../assets/tables/D8.tab")),
    ("D10", include_str!("../../assets/tables/D10.tab")),
    ("D12", include_str!("../../assets/tables/D12.tab")),
    ("S2", include_str!("../../assets/tables/S2.tab")),
    ("S3", include_str!("../../assets/tables/S3.tab")),
    ("S4", include_str!("../../assets/tables/S4.tab")),
    ("S5", include_str!("../../assets/tables/S5.tab")),
    ("S6", include_str!("../../assets/tables/S6.tab")),
    ("V4", include_str!("../../assets/tables/V4.tab")),
];

/// Labels reproducible by `table_generate`, with the kind and size to pass.
pub const GENERATED_LABELS: &[(&str, &str, usize)] = &[
    ("C2", "cyclic", 2),
    ("C3", "cyclic", 3),
    ("C4", "cyclic", 4),
    ("C5", "cyclic", 5),
    ("C6", "cyclic", 6),
    ("D8", "dihedral", 8),
    ("D10", "dihedral", 10),
    ("D12", "dihedral", 12),
    ("S2", "symmetric", 2),
    ("S3", "symmetric", 3),
    ("S4", "symmetric", 4),
    ("S5", "symmetric", 5),
    ("S6", "symmetric", 6),
];

/// `(name, file contents)` for the two induction-restriction matrices kept
/// as fixtures: the dihedral pairs inside S4 and S5.
pub const MATRICES: &[(&str, &str)] = &[
    ("d8_s4.mat", include_str!("../../assets/matrices/d8_s4.mat")),
    (
        "d10_s5.mat",
        include_str!("../../assets/matrices/d10_s5.mat"),
    ),
];

pub fn table_source(label: &str) -> Option<&'static str> {
    TABLES
        .iter()
        .find(|(name, _)| *name == label)
        .map(|(_, text)| *text)
}

pub fn matrix_source(name: &str) -> Option<&'static str> {
    MATRICES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::generate::{table_generate, TableKind};
    use crate::chartab::ops::{inclusion_matrix, t_operator};
    use crate::chartab::{CharacterTable, GroupWithTable};
    use crate::intmatrix::{parse_matrix, permutation_equivalent, Matrix};
    use crate::perm::{parse_generators, PermGroup, DEFAULT_ENUMERATION_CAP};
    use crate::young;
    use num_bigint::BigUint;

    fn group_on(degree: usize, generators: &str) -> PermGroup {
        let gens = parse_generators(generators, degree).unwrap();
        PermGroup::generate(degree, gens, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn every_bundled_table_parses_and_is_orthogonal() {
        for (label, text) in TABLES {
            let table = CharacterTable::parse(text).unwrap_or_else(|e| panic!("{label}: {e}"));
            assert_eq!(table.group, *label);
            let report = table.validate().unwrap_or_else(|e| panic!("{label}: {e}"));
            assert!(
                report.residual() < 1e-8,
                "{label}: residual {}",
                report.residual()
            );
            assert!(table.reps.is_some(), "{label} is missing representatives");
        }
    }

    #[test]
    fn the_symmetric_group_on_four_points_is_orthogonal_to_ten_digits() {
        let table = CharacterTable::parse(table_source("S4").unwrap()).unwrap();
        let report = table.validate().unwrap();
        assert!(report.residual() < 1e-10);
        assert_eq!(table.degrees(), vec![1, 3, 2, 3, 1]);
    }

    #[test]
    fn generated_tables_match_their_bundled_copies_byte_for_byte() {
        for (label, kind, n) in GENERATED_LABELS {
            let kind = TableKind::parse(kind).unwrap();
            let fresh = table_generate(kind, *n).unwrap().to_file_string();
            assert_eq!(
                fresh,
                table_source(label).unwrap(),
                "{label} drifted from the generator output"
            );
        }
    }

    #[test]
    fn bundled_matrices_parse_with_the_recorded_depths() {
        let d8 = parse_matrix(matrix_source("d8_s4.mat").unwrap()).unwrap();
        assert_eq!((d8.rows(), d8.cols()), (5, 5));
        assert_eq!(d8.depth().depth, 4);

        let d10 = parse_matrix(matrix_source("d10_s5.mat").unwrap()).unwrap();
        assert_eq!((d10.rows(), d10.cols()), (4, 7));
        assert_eq!(d10.depth().depth, 5);
    }

    fn aligned(label: &str, group: PermGroup) -> GroupWithTable {
        let table = CharacterTable::parse(table_source(label).unwrap()).unwrap();
        GroupWithTable::align(group, table).unwrap_or_else(|e| panic!("{label}: {e}"))
    }

    #[test]
    fn the_alternating_tables_align_with_their_permutation_groups() {
        let a4 = aligned("A4", PermGroup::alternating(4));
        assert_eq!(a4.table.degrees(), vec![1, 1, 1, 3]);
        let a5 = aligned("A5", PermGroup::alternating(5));
        assert_eq!(a5.table.degrees(), vec![1, 3, 3, 4, 5]);
        let a6 = aligned("A6", PermGroup::alternating(6));
        assert_eq!(a6.table.degrees(), vec![1, 5, 5, 8, 8, 9, 10]);
    }

    #[test]
    fn restricting_from_the_alternating_group_on_five_points_gives_the_known_matrix() {
        let g = aligned("A5", PermGroup::alternating(5));
        let h = aligned("A4", group_on(5, "(1,2,3), (2,3,4)"));
        let m = inclusion_matrix(&g, &h).unwrap();
        let expected = Matrix::from_u64_rows(&[
            vec![1, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 1],
            vec![0, 1, 1, 1, 1],
        ]);
        assert_eq!(m.matrix(), &expected);
        assert_eq!(m.depth().depth, 5);
        assert!(permutation_equivalent(&m, &young::alt_inclusion_matrix(4)));
    }

    #[test]
    fn restricting_from_the_alternating_group_on_six_points_gives_the_known_matrix() {
        let g = aligned("A6", PermGroup::alternating(6));
        let h = aligned("A5", group_on(6, "(1,2,3), (2,3,4), (3,4,5)"));
        let m = inclusion_matrix(&g, &h).unwrap();
        let expected = Matrix::from_u64_rows(&[
            vec![1, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 1],
            vec![0, 0, 0, 0, 1, 0, 1],
            vec![0, 1, 0, 0, 0, 1, 1],
            vec![0, 0, 1, 1, 1, 1, 0],
        ]);
        assert_eq!(m.matrix(), &expected);
        assert_eq!(m.depth().depth, 5);
        assert!(permutation_equivalent(&m, &young::alt_inclusion_matrix(5)));
    }

    #[test]
    fn the_squared_matrix_for_the_tetrahedral_pair_has_the_expected_minimal_polynomial() {
        let g = aligned("A5", PermGroup::alternating(5));
        let h = aligned("A4", group_on(5, "(1,2,3), (2,3,4)"));
        let t = t_operator(&g, &h).unwrap();
        assert_eq!(
            t,
            Matrix::from_u64_rows(&[
                vec![2, 0, 0, 1],
                vec![0, 1, 1, 1],
                vec![0, 1, 1, 1],
                vec![1, 1, 1, 4],
            ])
        );

        // X (X-1) (X-2) (X-5) annihilates T, and no proper divisor does, so
        // the spectrum is exactly {0, 1, 2, 5}.
        let eval = |roots: &[i64]| -> bool {
            let k = t.rows();
            let mut acc: Vec<Vec<i64>> = (0..k)
                .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
                .collect();
            let t_i64: Vec<Vec<i64>> = (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| {
                            let v: BigUint = t.get(i, j).clone();
                            i64::try_from(v).unwrap()
                        })
                        .collect()
                })
                .collect();
            for &r in roots {
                let mut next = vec![vec![0i64; k]; k];
                for i in 0..k {
                    for j in 0..k {
                        for l in 0..k {
                            next[i][j] += acc[i][l] * (t_i64[l][j] - r * i64::from(l == j));
                        }
                    }
                }
                acc = next;
            }
            acc.iter().all(|row| row.iter().all(|&v| v == 0))
        };
        assert!(eval(&[0, 1, 2, 5]));
        for dropped in 0..4 {
            let mut roots = vec![0, 1, 2, 5];
            roots.remove(dropped);
            assert!(!eval(&roots), "degree-three divisor already annihilates T");
        }
    }
}
