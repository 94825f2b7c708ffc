//! End-to-end pipeline from a pair of permutation groups to a depth report.
//!
//! Table resolution tries, in order: files in an explicit directory, the
//! bundled tables, and structural construction (cyclic, dihedral, natural
//! symmetric). A table is accepted once it aligns with the group's own
//! conjugacy class data, so a wrong table of coincidentally matching shape
//! is rejected rather than silently misused.

use std::fs;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::bratteli::build_graph;
use crate::chartab::generate::{cyclic_table_for, dihedral_table_for, symmetric_table_for};
use crate::chartab::ops::inclusion_matrix;
use crate::chartab::{assets, CharacterTable, ChartabError, GroupWithTable};
use crate::intmatrix::{IrredundantMatrix, MatrixError};
use crate::perm::{
    self, parse_generators, BoundsReport, PermError, PermGroup, DEFAULT_CONJUGATE_SEARCH_LIMIT,
    DEFAULT_ENUMERATION_CAP,
};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// A theorem the pipeline re-verifies failed to hold. Always a bug.
    #[error("internal cross-check failed: {0}")]
    Internal(String),
}

impl From<PermError> for AnalysisError {
    fn from(e: PermError) -> Self {
        AnalysisError::Chartab(ChartabError::Perm(e))
    }
}

impl AnalysisError {
    /// Distinguishes bugs (violated theorems) from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, AnalysisError::Internal(_))
    }
}

/// Everything the pipeline knows about one inclusion. Group-specific data
/// is absent when the input was a bare matrix.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub description: String,
    pub rows: usize,
    pub cols: usize,
    pub inclusion: Vec<Vec<String>>,
    pub depth: usize,
    pub least_depth: usize,
    pub depth_one: bool,
    pub minimal_q: String,
    pub odd_depth: usize,
    pub even_depth: usize,
    pub graph_depth: usize,
    pub components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSection>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSection {
    pub degree: usize,
    pub group_table: String,
    pub subgroup_table: String,
    /// Orbits of the group conjugating the core; always equals `components`.
    pub core_orbits: usize,
    pub bounds: BoundsReport,
}

/// Depth data for a matrix with no group attached. The graph route is run
/// alongside the algebraic one and any disagreement is an internal error.
pub fn analyze_matrix(
    description: &str,
    matrix: &IrredundantMatrix,
) -> Result<AnalysisReport, AnalysisError> {
    let report = matrix.depth();
    let graph = build_graph(matrix)
        .graph_depth()
        .map_err(|e| AnalysisError::Internal(e.to_string()))?;
    let inclusion = (0..matrix.rows())
        .map(|i| {
            (0..matrix.cols())
                .map(|j| matrix.get(i, j).to_string())
                .collect()
        })
        .collect();
    Ok(AnalysisReport {
        description: description.to_string(),
        rows: matrix.rows(),
        cols: matrix.cols(),
        inclusion,
        depth: report.depth,
        least_depth: report.least_depth(),
        depth_one: report.depth_one,
        minimal_q: report.minimal_q.to_string(),
        odd_depth: graph.odd_depth,
        even_depth: graph.even_depth,
        graph_depth: graph.depth,
        components: graph.components,
        group: None,
    })
}

/// Where a resolved character table came from.
fn origin_label(table: &CharacterTable, origin: &str) -> String {
    format!("{} [{origin}]", table.group)
}

/// Finds a character table for the group: directory files first (sorted by
/// name), then the bundled set, then structural construction.
pub fn resolve_table(
    group: &PermGroup,
    dir: Option<&Path>,
) -> Result<(GroupWithTable, String), AnalysisError> {
    let k = group.conjugacy_classes().len();

    if let Some(dir) = dir {
        let mut names: Vec<_> = fs::read_dir(dir)
            .map_err(|e| AnalysisError::Io {
                path: dir.display().to_string(),
                source: e,
            })?
            .filter_map(|entry| entry.ok())
            .map(|entry| entry.path())
            .filter(|p| p.extension().is_some_and(|ext| ext == "tab"))
            .collect();
        names.sort();
        for path in names {
            let Ok(text) = fs::read_to_string(&path) else {
                continue;
            };
            let Ok(table) = CharacterTable::parse(&text) else {
                continue;
            };
            let origin = origin_label(
                &table,
                &format!(
                    "file {}",
                    path.file_name()
                        .map(|n| n.to_string_lossy())
                        .unwrap_or_default()
                ),
            );
            if let Ok(with_table) = GroupWithTable::align(group.clone(), table) {
                return Ok((with_table, origin));
            }
        }
    }

    for (label, text) in assets::TABLES {
        let table = CharacterTable::parse(text).expect("bundled tables parse");
        if table.order != group.order() || table.class_count() != k {
            continue;
        }
        if let Ok(with_table) = GroupWithTable::align(group.clone(), table) {
            return Ok((with_table, format!("{label} [bundled]")));
        }
    }

    for builder in [cyclic_table_for, dihedral_table_for, symmetric_table_for] {
        if let Some(table) = builder(group) {
            let origin = origin_label(&table, "structural");
            let with_table = GroupWithTable::align(group.clone(), table).map_err(|e| {
                AnalysisError::Internal(format!("structural table misaligned: {e}"))
            })?;
            return Ok((with_table, origin));
        }
    }

    Err(ChartabError::TablesUnavailable {
        missing: format!(
            "group of order {} with {k} conjugacy classes on {} points",
            group.order(),
            group.degree()
        ),
    }
    .into())
}

/// Full pipeline for a subgroup pair: resolve tables, build the inclusion
/// matrix, compute depth both ways, and verify every group-theoretic bound
/// against the computed depth.
pub fn analyze_pair(
    description: &str,
    g: &PermGroup,
    h: &PermGroup,
    tables: Option<&Path>,
) -> Result<AnalysisReport, AnalysisError> {
    if !h.is_subgroup_of(g) {
        return Err(PermError::NotASubgroup.into());
    }
    let (g_with, g_origin) = resolve_table(g, tables)?;
    let (h_with, h_origin) = resolve_table(h, tables)?;
    let matrix = inclusion_matrix(&g_with, &h_with)?;
    let mut report = analyze_matrix(description, &matrix)?;

    let bounds = perm::depth_bounds(g, h, DEFAULT_CONJUGATE_SEARCH_LIMIT)?;
    let core = perm::core(g, h)?;
    let core_orbits = perm::conjugation_orbit_count(g, &core)?;
    if core_orbits != report.components {
        return Err(AnalysisError::Internal(format!(
            "graph has {} components but the core has {core_orbits} conjugation orbits",
            report.components
        )));
    }

    let least = report.least_depth;
    let mut checks: Vec<(&str, usize)> = vec![
        ("conjugate intersection bound", bounds.core_bound),
        ("eigenvalue bound", bounds.eigen.eigen_bound),
    ];
    let normalizer = usize::try_from(bounds.normalizer_bound).unwrap_or(usize::MAX);
    checks.push(("normalizer bound", normalizer));
    for (name, bound) in checks {
        if least > bound {
            return Err(AnalysisError::Internal(format!(
                "{name} {bound} is below the computed depth {least}"
            )));
        }
    }
    if bounds.is_normal != (least <= 2) {
        return Err(AnalysisError::Internal(format!(
            "normality ({}) disagrees with least depth {least}",
            bounds.is_normal
        )));
    }

    report.group = Some(GroupSection {
        degree: g.degree(),
        group_table: g_origin,
        subgroup_table: h_origin,
        core_orbits,
        bounds,
    });
    Ok(report)
}

/// A subgroup pair given by generator words, as used by the bundled
/// examples and the verification suite.
#[derive(Clone, Copy, Debug)]
pub struct PairSpec {
    pub name: &'static str,
    pub degree: usize,
    pub group: &'static str,
    pub subgroup: &'static str,
    pub depth: usize,
}

impl PairSpec {
    pub fn groups(&self) -> (PermGroup, PermGroup) {
        let build = |gens: &str| {
            let parsed = parse_generators(gens, self.degree).expect("bundled generators parse");
            PermGroup::generate(self.degree, parsed, DEFAULT_ENUMERATION_CAP)
                .expect("bundled pairs stay under the cap")
        };
        (build(self.group), build(self.subgroup))
    }
}

/// The worked examples: every pair here resolves against bundled or
/// structural tables, and `depth` is the established value the pipeline
/// must reproduce.
pub const BUNDLED_PAIRS: &[PairSpec] = &[
    PairSpec {
        name: "S2<S3",
        degree: 3,
        group: "(1,2), (1,2,3)",
        subgroup: "(1,2)",
        depth: 3,
    },
    PairSpec {
        name: "A3<S3",
        degree: 3,
        group: "(1,2), (1,2,3)",
        subgroup: "(1,2,3)",
        depth: 2,
    },
    PairSpec {
        name: "A3<A4",
        degree: 4,
        group: "(1,2,3), (2,3,4)",
        subgroup: "(1,2,3)",
        depth: 3,
    },
    PairSpec {
        name: "S3<S4",
        degree: 4,
        group: "(1,2), (1,2,3,4)",
        subgroup: "(1,2), (1,2,3)",
        depth: 5,
    },
    PairSpec {
        name: "D8<S4",
        degree: 4,
        group: "(1,2), (1,2,3,4)",
        subgroup: "(1,2,3,4), (1,3)",
        depth: 4,
    },
    PairSpec {
        name: "V4<S4",
        degree: 4,
        group: "(1,2), (1,2,3,4)",
        subgroup: "(1,2)(3,4), (1,3)(2,4)",
        depth: 2,
    },
    PairSpec {
        name: "S4<S5",
        degree: 5,
        group: "(1,2), (1,2,3,4,5)",
        subgroup: "(1,2), (1,2,3,4)",
        depth: 7,
    },
    PairSpec {
        name: "D10<S5",
        degree: 5,
        group: "(1,2), (1,2,3,4,5)",
        subgroup: "(1,2,3,4,5), (2,5)(3,4)",
        depth: 5,
    },
    PairSpec {
        name: "A4<A5",
        degree: 5,
        group: "(1,2,3), (2,3,4), (3,4,5)",
        subgroup: "(1,2,3), (2,3,4)",
        depth: 5,
    },
    PairSpec {
        name: "A5<A6",
        degree: 6,
        group: "(1,2,3), (2,3,4), (3,4,5), (4,5,6)",
        subgroup: "(1,2,3), (2,3,4), (3,4,5)",
        depth: 5,
    },
    PairSpec {
        name: "D12<S6",
        degree: 6,
        group: "(1,2), (1,2,3,4,5,6)",
        subgroup: "(1,2,3,4,5,6), (2,6)(3,5)",
        depth: 3,
    },
];

pub fn bundled_pair(name: &str) -> Option<&'static PairSpec> {
    BUNDLED_PAIRS.iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;

    #[test]
    fn every_bundled_pair_reproduces_its_recorded_depth() {
        for pair in BUNDLED_PAIRS {
            let (g, h) = pair.groups();
            let report = analyze_pair(pair.name, &g, &h, None)
                .unwrap_or_else(|e| panic!("{}: {e}", pair.name));
            assert_eq!(report.depth, pair.depth, "{}", pair.name);
            assert_eq!(report.graph_depth, pair.depth, "{}", pair.name);
            let section = report.group.unwrap();
            assert_eq!(section.core_orbits, report.components, "{}", pair.name);
        }
    }

    #[test]
    fn the_dihedral_pair_in_s4_reports_its_known_invariants() {
        let (g, h) = bundled_pair("D8<S4").unwrap().groups();
        let report = analyze_pair("D8<S4", &g, &h, None).unwrap();
        assert_eq!(report.depth, 4);
        assert_eq!(report.components, 2);
        let section = report.group.unwrap();
        assert_eq!(section.bounds.core_order, 4);
        assert!(!section.bounds.core_is_central);
        assert_eq!(section.bounds.min_conjugates.m(), 2);
        assert_eq!(section.bounds.core_bound, 4);
        assert!(section.bounds.min_conjugates.is_exact());
        assert_eq!(section.group_table, "S4 [bundled]");
        assert_eq!(section.subgroup_table, "D8 [bundled]");
    }

    #[test]
    fn structural_tables_cover_groups_without_bundled_files() {
        // C7 in its regular action: no bundled table, cyclic construction.
        let c7 = PermGroup::generate(
            7,
            vec![crate::perm::parse_perm("(1,2,3,4,5,6,7)", 7).unwrap()],
            DEFAULT_ENUMERATION_CAP,
        )
        .unwrap();
        let (with_table, origin) = resolve_table(&c7, None).unwrap();
        assert_eq!(origin, "C7 [structural]");
        assert_eq!(with_table.table.class_count(), 7);
    }

    #[test]
    fn unresolvable_groups_report_what_is_missing() {
        let a7 = PermGroup::alternating(7);
        let err = resolve_table(&a7, None).unwrap_err();
        match err {
            AnalysisError::Chartab(ChartabError::TablesUnavailable { missing }) => {
                assert!(missing.contains("order 2520"), "{missing}");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn directory_tables_take_precedence_over_bundled_ones() {
        let dir = std::env::temp_dir().join(format!("subdepth-tables-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        // A renamed copy of the S3 table: resolution must pick it up by
        // content, not by its label or file name.
        let text = assets::table_source("S3")
            .unwrap()
            .replace("group S3", "group CustomS3");
        let path = dir.join("custom.tab");
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(text.as_bytes()).unwrap();

        let s3 = PermGroup::symmetric(3);
        let (_, origin) = resolve_table(&s3, Some(&dir)).unwrap();
        assert_eq!(origin, "CustomS3 [file custom.tab]");

        // Without the directory the bundled table wins.
        let (_, origin) = resolve_table(&s3, None).unwrap();
        assert_eq!(origin, "S3 [bundled]");
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn subgroup_containment_is_checked_before_any_table_work() {
        let g = PermGroup::alternating(4);
        let h = PermGroup::generate(
            4,
            vec![crate::perm::parse_perm("(1,2)", 4).unwrap()],
            DEFAULT_ENUMERATION_CAP,
        )
        .unwrap();
        let err = analyze_pair("bad", &g, &h, None).unwrap_err();
        assert!(matches!(
            err,
            AnalysisError::Chartab(ChartabError::Perm(PermError::NotASubgroup))
        ));
    }

    #[test]
    fn reports_serialize_the_same_way_every_time() {
        let (g, h) = bundled_pair("S2<S3").unwrap().groups();
        let a = serde_json::to_string(&analyze_pair("S2<S3", &g, &h, None).unwrap()).unwrap();
        let b = serde_json::to_string(&analyze_pair("S2<S3", &g, &h, None).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"depth\":3"));
        assert!(a.contains("\"minimal_q\""));
    }
}
