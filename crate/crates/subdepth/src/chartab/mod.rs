//! Character tables over double-precision complex numbers, class
//! functions, and the bridge that aligns a table's columns with the
//! conjugacy classes of a concrete permutation group.
//!
//! Every consumer of a table goes through [`GroupWithTable::align`], which
//! reorders columns into the group's own class order. After that point
//! class indices in perm and chartab agree and fusion maps can be applied
//! directly.

pub mod assets;
pub mod generate;
pub mod ops;

use std::fmt::Write as _;

use num_complex::Complex64;
use thiserror::Error;

use crate::perm::{parse_perm, PermError, PermGroup, Permutation};

/// Multiplicities and other integers recovered from inner products must be
/// this close to an integer.
pub const INTEGER_TOLERANCE: f64 = 1e-6;
/// Orthogonality residual ceiling for tables accepted from files.
pub const PARSE_TOLERANCE: f64 = 1e-6;
/// Residual ceiling for tables we construct ourselves.
pub const INTERNAL_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum ChartabError {
    #[error("malformed table: {0}")]
    MalformedFile(String),
    #[error("no {kind} table for n = {n}")]
    UnsupportedSize { kind: &'static str, n: usize },
    #[error("orthogonality residual {residual:e} exceeds tolerance")]
    OrthogonalityFailure { residual: f64 },
    #[error("inner product {value} does not round to a nonnegative integer")]
    NonIntegerMultiplicity { value: f64 },
    #[error("inclusion matrix has a zero row or column")]
    RedundantResult,
    #[error("operator entry {value} does not round to a nonnegative integer")]
    NonIntegerEntry { value: f64 },
    #[error("class function is not a character")]
    NotACharacter,
    #[error("no character table available: {missing}")]
    TablesUnavailable { missing: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Character table: class sizes, optional class representatives, and one
/// row of complex values per irreducible. Class 0 is the identity class.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    pub group: String,
    pub order: u64,
    pub sizes: Vec<u64>,
    pub reps: Option<Vec<Permutation>>,
    pub chars: Vec<Vec<Complex64>>,
}

/// Worst row and column orthogonality residuals, both normalized to O(1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValidationReport {
    pub max_row_residual: f64,
    pub max_col_residual: f64,
}

impl ValidationReport {
    pub fn residual(&self) -> f64 {
        self.max_row_residual.max(self.max_col_residual)
    }
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.chars[row][0].re.round() as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.chars.len()).map(|i| self.degree(i)).collect()
    }

    pub fn irr(&self, row: usize) -> ClassFunction {
        ClassFunction {
            values: self.chars[row].clone(),
        }
    }

    pub fn trivial(&self) -> ClassFunction {
        ClassFunction {
            values: vec![Complex64::new(1.0, 0.0); self.class_count()],
        }
    }

    pub fn regular(&self) -> ClassFunction {
        let mut values = vec![Complex64::new(0.0, 0.0); self.class_count()];
        values[0] = Complex64::new(self.order as f64, 0.0);
        ClassFunction { values }
    }

    /// Indicator of a single class.
    pub fn class_indicator(&self, class: usize) -> ClassFunction {
        let mut values = vec![Complex64::new(0.0, 0.0); self.class_count()];
        values[class] = Complex64::new(1.0, 0.0);
        ClassFunction { values }
    }

    /// Structural checks plus both orthogonality relations.
    pub fn validate(&self) -> Result<ValidationReport, ChartabError> {
        let k = self.class_count();
        if k == 0 {
            return Err(ChartabError::MalformedFile("no classes".into()));
        }
        if self.sizes.contains(&0) {
            return Err(ChartabError::MalformedFile("zero class size".into()));
        }
        if self.sizes.iter().sum::<u64>() != self.order {
            return Err(ChartabError::MalformedFile(
                "class sizes do not sum to the group order".into(),
            ));
        }
        if self.sizes[0] != 1 {
            return Err(ChartabError::MalformedFile(
                "the identity class must come first with size 1".into(),
            ));
        }
        if self.chars.len() != k {
            return Err(ChartabError::MalformedFile(format!(
                "expected {k} characters, found {}",
                self.chars.len()
            )));
        }
        if let Some(row) = self.chars.iter().find(|row| row.len() != k) {
            return Err(ChartabError::MalformedFile(format!(
                "character row of length {} in a {k}-class table",
                row.len()
            )));
        }
        if let Some(reps) = &self.reps {
            if reps.len() != k {
                return Err(ChartabError::MalformedFile(
                    "representative count differs from class count".into(),
                ));
            }
            if !reps[0].is_identity() {
                return Err(ChartabError::MalformedFile(
                    "first representative is not the identity".into(),
                ));
            }
        }
        for row in &self.chars {
            let degree = row[0];
            if degree.im.abs() > INTERNAL_TOLERANCE
                || degree.re < 0.5
                || (degree.re - degree.re.round()).abs() > INTERNAL_TOLERANCE
            {
                return Err(ChartabError::MalformedFile(format!(
                    "character degree {degree} is not a positive integer"
                )));
            }
        }

        let order = self.order as f64;
        let mut max_row = 0.0f64;
        for (i, chi) in self.chars.iter().enumerate() {
            for (j, psi) in self.chars.iter().enumerate() {
                let mut sum = Complex64::new(0.0, 0.0);
                for c in 0..k {
                    sum += self.sizes[c] as f64 * chi[c] * psi[c].conj();
                }
                let expected = if i == j { 1.0 } else { 0.0 };
                max_row = max_row.max((sum / order - expected).norm());
            }
        }
        let mut max_col = 0.0f64;
        for c in 0..k {
            for d in 0..k {
                let mut sum = Complex64::new(0.0, 0.0);
                for chi in &self.chars {
                    sum += chi[c] * chi[d].conj();
                }
                // Scaled by |C|/|G| so a perfect table scores 0 or 1.
                let scaled = sum * (self.sizes[c] as f64 / order);
                let expected = if c == d { 1.0 } else { 0.0 };
                max_col = max_col.max((scaled - expected).norm());
            }
        }
        Ok(ValidationReport {
            max_row_residual: max_row,
            max_col_residual: max_col,
        })
    }

    /// Parses the text table format and enforces orthogonality.
    pub fn parse(text: &str) -> Result<Self, ChartabError> {
        let mut group = None;
        let mut order = None;
        let mut classes = None;
        let mut sizes: Option<Vec<u64>> = None;
        let mut rep_words: Option<Vec<String>> = None;
        let mut chars: Vec<Vec<Complex64>> = Vec::new();

        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| ChartabError::MalformedFile(format!("incomplete line {line:?}")))?;
            let rest = rest.trim();
            match key {
                "group" => group = Some(rest.to_string()),
                "order" => {
                    order =
                        Some(rest.parse::<u64>().map_err(|_| {
                            ChartabError::MalformedFile(format!("bad order {rest:?}"))
                        })?)
                }
                "classes" => {
                    classes = Some(rest.parse::<usize>().map_err(|_| {
                        ChartabError::MalformedFile(format!("bad class count {rest:?}"))
                    })?)
                }
                "sizes" => {
                    let parsed: Result<Vec<u64>, _> =
                        rest.split_whitespace().map(str::parse).collect();
                    sizes = Some(parsed.map_err(|_| {
                        ChartabError::MalformedFile(format!("bad sizes line {rest:?}"))
                    })?);
                }
                "reps" => rep_words = Some(rest.split_whitespace().map(str::to_string).collect()),
                "chi" => {
                    let row: Result<Vec<Complex64>, ChartabError> =
                        rest.split_whitespace().map(parse_value).collect();
                    chars.push(row?);
                }
                other => {
                    return Err(ChartabError::MalformedFile(format!(
                        "unknown key {other:?}"
                    )))
                }
            }
        }

        let group = group.ok_or_else(|| ChartabError::MalformedFile("missing group".into()))?;
        let order = order.ok_or_else(|| ChartabError::MalformedFile("missing order".into()))?;
        let k = classes.ok_or_else(|| ChartabError::MalformedFile("missing classes".into()))?;
        let sizes = sizes.ok_or_else(|| ChartabError::MalformedFile("missing sizes".into()))?;
        if sizes.len() != k {
            return Err(ChartabError::MalformedFile(format!(
                "classes says {k} but sizes has {} entries",
                sizes.len()
            )));
        }
        let reps = match rep_words {
            None => None,
            Some(words) => {
                // Cycle words only constrain the points they move; parse at
                // the largest moved point.
                let degree = words
                    .iter()
                    .flat_map(|w| w.split(['(', ')', ',']))
                    .filter_map(|t| t.parse::<usize>().ok())
                    .max()
                    .unwrap_or(1);
                let parsed: Result<Vec<Permutation>, PermError> =
                    words.iter().map(|w| parse_perm(w, degree)).collect();
                Some(parsed?)
            }
        };
        let table = CharacterTable {
            group,
            order,
            sizes,
            reps,
            chars,
        };
        let report = table.validate()?;
        if report.residual() > PARSE_TOLERANCE {
            return Err(ChartabError::OrthogonalityFailure {
                residual: report.residual(),
            });
        }
        Ok(table)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "group {}", self.group).unwrap();
        writeln!(out, "order {}", self.order).unwrap();
        writeln!(out, "classes {}", self.class_count()).unwrap();
        let sizes: Vec<String> = self.sizes.iter().map(u64::to_string).collect();
        writeln!(out, "sizes {}", sizes.join(" ")).unwrap();
        if let Some(reps) = &self.reps {
            let words: Vec<String> = reps.iter().map(Permutation::to_string).collect();
            writeln!(out, "reps {}", words.join(" ")).unwrap();
        }
        for row in &self.chars {
            let values: Vec<String> = row.iter().map(format_value).collect();
            writeln!(out, "chi {}", values.join(" ")).unwrap();
        }
        out
    }
}

fn format_component(v: f64) -> String {
    let rounded = (v * 1e12).round() / 1e12;
    let v = if rounded == 0.0 { 0.0 } else { v };
    format!("{v:.12}")
}

fn format_value(z: &Complex64) -> String {
    let im = (z.im * 1e12).round() / 1e12;
    if im == 0.0 {
        format_component(z.re)
    } else if im < 0.0 {
        format!("{}-{}i", format_component(z.re), format_component(-z.im))
    } else {
        format!("{}+{}i", format_component(z.re), format_component(z.im))
    }
}

fn parse_value(token: &str) -> Result<Complex64, ChartabError> {
    let bad = || ChartabError::MalformedFile(format!("bad value {token:?}"));
    if let Some(body) = token.strip_suffix('i') {
        // Split real and imaginary at the last sign not following an
        // exponent marker.
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| {
                (bytes[i] == b'+' || bytes[i] == b'-')
                    && bytes[i - 1] != b'e'
                    && bytes[i - 1] != b'E'
            })
            .ok_or_else(bad)?;
        let re: f64 = body[..split].parse().map_err(|_| bad())?;
        let im: f64 = body[split..].parse().map_err(|_| bad())?;
        Ok(Complex64::new(re, im))
    } else {
        let re: f64 = token.parse().map_err(|_| bad())?;
        Ok(Complex64::new(re, 0.0))
    }
}

/// Complex-valued function on the classes of a fixed table.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn pointwise_mul(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.values.len(), other.values.len());
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn pointwise_pow(&self, exponent: usize) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .map(|v| v.powu(exponent as u32))
                .collect(),
        }
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.values.len(), other.values.len());
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: f64) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn max_distance(&self, other: &ClassFunction) -> f64 {
        assert_eq!(self.values.len(), other.values.len());
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Hermitian inner product (1/|G|) sum |C| f(C) conj(g(C)).
pub fn inner_product(table: &CharacterTable, f: &ClassFunction, g: &ClassFunction) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for c in 0..table.class_count() {
        sum += table.sizes[c] as f64 * f.values[c] * g.values[c].conj();
    }
    sum / table.order as f64
}

/// Expands f in the irreducible basis, requiring nonnegative integer
/// coefficients.
pub fn multiplicities(table: &CharacterTable, f: &ClassFunction) -> Result<Vec<u64>, ChartabError> {
    table
        .chars
        .iter()
        .map(|chi| {
            let ip = inner_product(
                table,
                f,
                &ClassFunction {
                    values: chi.clone(),
                },
            );
            round_nonneg(ip).ok_or(ChartabError::NonIntegerMultiplicity { value: ip.re })
        })
        .collect()
}

pub(crate) fn round_nonneg(z: Complex64) -> Option<u64> {
    let rounded = z.re.round();
    if z.im.abs() > INTEGER_TOLERANCE
        || (z.re - rounded).abs() > INTEGER_TOLERANCE
        || rounded < -0.5
    {
        None
    } else {
        Some(rounded as u64)
    }
}

/// A permutation group together with a table whose columns have been
/// permuted into the group's own conjugacy class order.
#[derive(Clone, Debug)]
pub struct GroupWithTable {
    pub group: PermGroup,
    pub table: CharacterTable,
}

impl GroupWithTable {
    /// Matches table columns to group classes through the representatives
    /// and reorders. Representatives of lower degree are extended by fixed
    /// points.
    pub fn align(group: PermGroup, table: CharacterTable) -> Result<Self, ChartabError> {
        if table.order != group.order() {
            return Err(ChartabError::MalformedFile(format!(
                "table order {} but group order {}",
                table.order,
                group.order()
            )));
        }
        let classes = group.conjugacy_classes();
        if table.class_count() != classes.len() {
            return Err(ChartabError::MalformedFile(format!(
                "table has {} classes but the group has {}",
                table.class_count(),
                classes.len()
            )));
        }
        let k = classes.len();
        let reps = match &table.reps {
            Some(reps) => reps,
            None if k == 1 => {
                return Ok(GroupWithTable {
                    group,
                    table: CharacterTable {
                        reps: Some(vec![Permutation::identity(1)]),
                        ..table
                    },
                })
            }
            None => {
                return Err(ChartabError::MalformedFile(
                    "table without representatives cannot be aligned".into(),
                ))
            }
        };

        // column_for_class[c] = table column landing on group class c.
        let mut column_for_class = vec![usize::MAX; k];
        for (col, rep) in reps.iter().enumerate() {
            if rep.degree() > group.degree() {
                return Err(ChartabError::MalformedFile(format!(
                    "representative {rep} exceeds group degree {}",
                    group.degree()
                )));
            }
            let embedded = rep.extended(group.degree());
            let class = group.class_index_of(&embedded).ok_or_else(|| {
                ChartabError::MalformedFile(format!("representative {rep} is not in the group"))
            })?;
            if column_for_class[class] != usize::MAX {
                return Err(ChartabError::MalformedFile(format!(
                    "two representatives land in the class of {rep}"
                )));
            }
            if table.sizes[col] != classes[class].size() {
                return Err(ChartabError::MalformedFile(format!(
                    "class size mismatch at representative {rep}"
                )));
            }
            column_for_class[class] = col;
        }

        let sizes = (0..k).map(|c| table.sizes[column_for_class[c]]).collect();
        let reps = Some(
            classes
                .iter()
                .map(|class| class.representative.clone())
                .collect(),
        );
        let chars = table
            .chars
            .iter()
            .map(|row| (0..k).map(|c| row[column_for_class[c]]).collect())
            .collect();
        Ok(GroupWithTable {
            group,
            table: CharacterTable {
                group: table.group,
                order: table.order,
                sizes,
                reps,
                chars,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::DEFAULT_ENUMERATION_CAP;

    const V4_TABLE: &str = "\
group V4
order 4
classes 4
sizes 1 1 1 1
reps () (1,2)(3,4) (1,3)(2,4) (1,4)(2,3)
chi 1 1 1 1
chi 1 1 -1 -1
chi 1 -1 1 -1
chi 1 -1 -1 1
";

    #[test]
    fn parse_validate_and_round_trip() {
        let table = CharacterTable::parse(V4_TABLE).unwrap();
        assert_eq!(table.group, "V4");
        assert_eq!(table.class_count(), 4);
        assert_eq!(table.degrees(), vec![1, 1, 1, 1]);
        let report = table.validate().unwrap();
        assert!(report.residual() < 1e-12);
        let reparsed = CharacterTable::parse(&table.to_file_string()).unwrap();
        assert_eq!(reparsed, table);
    }

    #[test]
    fn perturbed_value_fails_orthogonality() {
        let broken = V4_TABLE.replace("chi 1 -1 -1 1", "chi 1 -1 -1 1.001");
        assert!(matches!(
            CharacterTable::parse(&broken),
            Err(ChartabError::OrthogonalityFailure { residual }) if residual > 1e-6
        ));
    }

    #[test]
    fn structural_problems_are_malformed() {
        let missing = V4_TABLE.replace("order 4\n", "");
        assert!(matches!(
            CharacterTable::parse(&missing),
            Err(ChartabError::MalformedFile(_))
        ));
        let short = V4_TABLE.replace("sizes 1 1 1 1", "sizes 1 1 1");
        assert!(matches!(
            CharacterTable::parse(&short),
            Err(ChartabError::MalformedFile(_))
        ));
        let bad_value = V4_TABLE.replace("chi 1 1 1 1", "chi 1 1 1 one");
        assert!(matches!(
            CharacterTable::parse(&bad_value),
            Err(ChartabError::MalformedFile(_))
        ));
    }

    #[test]
    fn complex_values_round_trip_through_the_format() {
        for text in ["-0.5+0.866025403784i", "-0.5-0.866025403784i", "2.25"] {
            let z = parse_value(text).unwrap();
            let reparsed = parse_value(&format_value(&z)).unwrap();
            assert!((z - reparsed).norm() < 1e-12);
        }
        assert_eq!(
            format_value(&Complex64::new(-0.5, 0.866025403784)),
            "-0.500000000000+0.866025403784i"
        );
        let z = parse_value("1.5e-3+2e-4i").unwrap();
        assert!((z.re - 0.0015).abs() < 1e-15 && (z.im - 0.0002).abs() < 1e-15);
        assert!(parse_value("i").is_err());
        assert!(parse_value("1+2j").is_err());
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(format_component(-1e-15), "0.000000000000");
        assert_eq!(format_value(&Complex64::new(1.0, -1e-15)), "1.000000000000");
    }

    #[test]
    fn alignment_reorders_columns_to_group_class_order() {
        let table = CharacterTable::parse(V4_TABLE).unwrap();
        // Swap two non-identity columns; alignment must undo the swap.
        let mut rotated = table.clone();
        rotated.sizes.swap(1, 2);
        rotated.reps.as_mut().unwrap().swap(1, 2);
        for row in &mut rotated.chars {
            row.swap(1, 2);
        }
        rotated.validate().unwrap();
        assert_ne!(rotated, table);

        let group = PermGroup::generate(
            4,
            crate::perm::parse_generators("(1,2)(3,4),(1,3)(2,4)", 4).unwrap(),
            DEFAULT_ENUMERATION_CAP,
        )
        .unwrap();
        let aligned = GroupWithTable::align(group.clone(), rotated).unwrap();
        let direct = GroupWithTable::align(group, table).unwrap();
        assert_eq!(aligned.table, direct.table);
    }

    #[test]
    fn alignment_rejects_mismatched_groups() {
        let table = CharacterTable::parse(V4_TABLE).unwrap();
        let s4 = PermGroup::symmetric(4);
        assert!(matches!(
            GroupWithTable::align(s4, table),
            Err(ChartabError::MalformedFile(_))
        ));
    }

    #[test]
    fn class_function_arithmetic() {
        let table = CharacterTable::parse(V4_TABLE).unwrap();
        let f = table.irr(1);
        let g = table.irr(2);
        let product = f.pointwise_mul(&g);
        assert_eq!(product, table.irr(3));
        assert_eq!(f.pointwise_pow(2), table.trivial());
        let ip = inner_product(&table, &f, &g);
        assert!(ip.norm() < 1e-12);
        let reg = table.regular();
        assert_eq!(multiplicities(&table, &reg).unwrap(), vec![1, 1, 1, 1]);
        assert!(matches!(
            multiplicities(&table, &f.scale(0.5)),
            Err(ChartabError::NonIntegerMultiplicity { .. })
        ));
    }
}
