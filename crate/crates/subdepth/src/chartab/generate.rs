//! Table construction for the three supported families.
//!
//! Cyclic and dihedral tables are built structurally from any permutation
//! copy of the group, so the columns always line up with the copy's own
//! conjugacy classes. Symmetric tables come from the Murnaghan-Nakayama
//! recursion on beta-sets. `table_generate` runs these on standard copies
//! and is the source of the bundled table assets.

use std::collections::HashMap;
use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::chartab::{CharacterTable, ChartabError, INTERNAL_TOLERANCE};
use crate::perm::{parse_perm, PermGroup, Permutation, DEFAULT_ENUMERATION_CAP};
use crate::young::{partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Cyclic,
    Dihedral,
    Symmetric,
}

impl TableKind {
    pub fn parse(name: &str) -> Option<TableKind> {
        match name {
            "cyclic" => Some(TableKind::Cyclic),
            "dihedral" => Some(TableKind::Dihedral),
            "symmetric" => Some(TableKind::Symmetric),
            _ => None,
        }
    }
}

/// Standard-copy table: Cn on the n-cycle, Dn (n = group order) on the
/// n/2-gon, Sn in its natural action. Every produced table is validated
/// to internal tolerance before it leaves.
pub fn table_generate(kind: TableKind, n: usize) -> Result<CharacterTable, ChartabError> {
    let table = match kind {
        TableKind::Cyclic => {
            if !(1..=100).contains(&n) {
                return Err(ChartabError::UnsupportedSize { kind: "cyclic", n });
            }
            let group = standard_cyclic(n);
            cyclic_table_for(&group).expect("standard cycle is cyclic")
        }
        TableKind::Dihedral => {
            if n % 2 != 0 || !(6..=200).contains(&n) {
                return Err(ChartabError::UnsupportedSize {
                    kind: "dihedral",
                    n,
                });
            }
            let group = standard_dihedral(n / 2);
            dihedral_table_for(&group).expect("standard polygon symmetries are dihedral")
        }
        TableKind::Symmetric => {
            if !(1..=8).contains(&n) {
                return Err(ChartabError::UnsupportedSize {
                    kind: "symmetric",
                    n,
                });
            }
            symmetric_table_for(&PermGroup::symmetric(n)).expect("the natural copy is symmetric")
        }
    };
    let report = table.validate()?;
    if report.residual() > INTERNAL_TOLERANCE {
        return Err(ChartabError::OrthogonalityFailure {
            residual: report.residual(),
        });
    }
    Ok(table)
}

pub fn standard_cyclic(n: usize) -> PermGroup {
    let generators = if n >= 2 {
        let word: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        vec![parse_perm(&format!("({})", word.join(",")), n).unwrap()]
    } else {
        Vec::new()
    };
    PermGroup::generate(n.max(1), generators, DEFAULT_ENUMERATION_CAP).unwrap()
}

/// Symmetries of the m-gon on m points: the m-cycle and the reversal.
pub fn standard_dihedral(m: usize) -> PermGroup {
    assert!(m >= 3);
    let word: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
    let a = parse_perm(&format!("({})", word.join(",")), m).unwrap();
    let mut pairs = String::new();
    for i in 1..=m / 2 {
        if m + 1 - i > i {
            pairs.push_str(&format!("({},{})", i, m + 1 - i));
        }
    }
    let b = parse_perm(&pairs, m).unwrap();
    PermGroup::generate(m, vec![a, b], DEFAULT_ENUMERATION_CAP).unwrap()
}

fn reps_of(group: &PermGroup) -> Vec<Permutation> {
    group
        .conjugacy_classes()
        .iter()
        .map(|c| c.representative.clone())
        .collect()
}

fn sizes_of(group: &PermGroup) -> Vec<u64> {
    group.conjugacy_classes().iter().map(|c| c.size()).collect()
}

/// Table for any cyclic permutation group, columns in the group's class
/// order. None if the group is not cyclic.
pub fn cyclic_table_for(group: &PermGroup) -> Option<CharacterTable> {
    let n = group.order() as usize;
    let generator = group.elements().iter().find(|e| e.order() == n as u64)?;
    let mut exponent: HashMap<Permutation, usize> = HashMap::new();
    let mut power = Permutation::identity(group.degree());
    for k in 0..n {
        exponent.insert(power.clone(), k);
        power = power.compose(generator);
    }
    let column_exponents: Vec<usize> = group
        .conjugacy_classes()
        .iter()
        .map(|c| exponent[&c.representative])
        .collect();
    let chars = (0..n)
        .map(|t| {
            column_exponents
                .iter()
                .map(|&k| Complex64::from_polar(1.0, TAU * (t * k % n) as f64 / n as f64))
                .collect()
        })
        .collect();
    Some(CharacterTable {
        group: format!("C{n}"),
        order: n as u64,
        sizes: sizes_of(group),
        reps: Some(reps_of(group)),
        chars,
    })
}

/// Table for any dihedral permutation group of order 2m, m >= 3, columns
/// in the group's class order. None if the group is not dihedral.
pub fn dihedral_table_for(group: &PermGroup) -> Option<CharacterTable> {
    let order = group.order();
    if order % 2 != 0 || order < 6 {
        return None;
    }
    let m = (order / 2) as usize;
    let a = group.elements().iter().find(|e| e.order() == m as u64)?;
    let mut rotation_exponent: HashMap<Permutation, usize> = HashMap::new();
    let mut power = Permutation::identity(group.degree());
    for k in 0..m {
        rotation_exponent.insert(power.clone(), k);
        power = power.compose(a);
    }
    let b = group
        .elements()
        .iter()
        .find(|e| !rotation_exponent.contains_key(e))?;
    if b.order() != 2 || a.conjugated_by(b) != a.inverse() {
        return None;
    }
    if group
        .elements()
        .iter()
        .any(|e| !rotation_exponent.contains_key(e) && e.order() != 2)
    {
        return None;
    }

    // Column c: Ok(k) for the rotation a^k, Err(parity of k) for the
    // reflection b a^k.
    let columns: Vec<Result<usize, usize>> = group
        .conjugacy_classes()
        .iter()
        .map(|class| {
            let rep = &class.representative;
            match rotation_exponent.get(rep) {
                Some(&k) => Ok(k),
                None => Err(rotation_exponent[&b.compose(rep)] % 2),
            }
        })
        .collect();

    let mut chars: Vec<Vec<Complex64>> = Vec::new();
    let linear = |on_rotation: fn(usize) -> f64, on_reflection: fn(usize) -> f64| {
        columns
            .iter()
            .map(|col| {
                let v = match col {
                    Ok(k) => on_rotation(*k),
                    Err(parity) => on_reflection(*parity),
                };
                Complex64::new(v, 0.0)
            })
            .collect::<Vec<_>>()
    };
    chars.push(linear(|_| 1.0, |_| 1.0));
    chars.push(linear(|_| 1.0, |_| -1.0));
    if m % 2 == 0 {
        let sign = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
        chars.push(linear(sign, sign));
        chars.push(linear(sign, |p| if p == 0 { -1.0 } else { 1.0 }));
    }
    let two_dim_count = if m % 2 == 0 { m / 2 - 1 } else { (m - 1) / 2 };
    for j in 1..=two_dim_count {
        chars.push(
            columns
                .iter()
                .map(|col| match col {
                    Ok(k) => Complex64::new(2.0 * (TAU * (j * k) as f64 / m as f64).cos(), 0.0),
                    Err(_) => Complex64::new(0.0, 0.0),
                })
                .collect(),
        );
    }

    Some(CharacterTable {
        group: format!("D{order}"),
        order,
        sizes: sizes_of(group),
        reps: Some(reps_of(group)),
        chars,
    })
}

/// Cycle type of a permutation as a partition of the degree, fixed points
/// included.
pub fn cycle_type(p: &Permutation) -> Partition {
    let mut seen = vec![false; p.degree()];
    let mut lengths = Vec::new();
    for start in 0..p.degree() {
        if seen[start] {
            continue;
        }
        let mut len = 1;
        seen[start] = true;
        let mut x = p.apply(start);
        while x != start {
            seen[x] = true;
            len += 1;
            x = p.apply(x);
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lengths)
}

/// Beta-set of the partition padded to the given number of rows.
fn beta_set(lambda: &Partition, rows: usize) -> Vec<usize> {
    assert!(rows >= lambda.len());
    let mut beta: Vec<usize> = (0..rows)
        .map(|i| lambda.parts().get(i).copied().unwrap_or(0) + (rows - 1 - i))
        .collect();
    beta.sort_unstable();
    beta
}

/// Murnaghan-Nakayama sum over border strip removals, expressed on
/// beta-sets: removing a strip of size k replaces some b by b-k, with sign
/// from the number of beads strictly between them.
fn mn_value(beta: &[usize], parts: &[usize]) -> i64 {
    let Some((&k, rest)) = parts.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (pos, &b) in beta.iter().enumerate() {
        if b < k || beta.binary_search(&(b - k)).is_ok() {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.to_vec();
        next.remove(pos);
        let insert_at = next.binary_search(&target).unwrap_err();
        next.insert(insert_at, target);
        let term = mn_value(&next, rest);
        total += if height % 2 == 0 { term } else { -term };
    }
    total
}

/// Irreducible symmetric group character indexed by lambda, evaluated on
/// the class of cycle type mu.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.weight(), mu.weight(), "weights must match");
    let n = lambda.weight();
    mn_value(&beta_set(lambda, n), mu.parts())
}

fn class_size_for_type(mu: &Partition) -> u64 {
    let n = mu.weight();
    let factorial = |k: usize| (1..=k as u64).product::<u64>();
    let mut centralizer = 1u64;
    let mut run = 0usize;
    let parts = mu.parts();
    for (i, &part) in parts.iter().enumerate() {
        centralizer *= part as u64;
        run += 1;
        if i + 1 == parts.len() || parts[i + 1] != part {
            centralizer *= factorial(run);
            run = 0;
        }
    }
    factorial(n) / centralizer
}

/// Table for the natural symmetric group copy of its degree. Rows follow
/// the partition enumeration order, so the trivial character (full row
/// partition) comes first and the sign character last. None if the group
/// is not the full symmetric group on its points.
pub fn symmetric_table_for(group: &PermGroup) -> Option<CharacterTable> {
    let n = group.degree();
    if group != &PermGroup::symmetric(n) {
        return None;
    }
    let lambdas = partitions(n);
    let classes = group.conjugacy_classes();
    let column_types: Vec<Partition> = classes
        .iter()
        .map(|c| cycle_type(&c.representative))
        .collect();
    for (class, mu) in classes.iter().zip(&column_types) {
        assert_eq!(class.size(), class_size_for_type(mu));
    }
    let chars = lambdas
        .iter()
        .map(|lambda| {
            column_types
                .iter()
                .map(|mu| Complex64::new(mn_character(lambda, mu) as f64, 0.0))
                .collect()
        })
        .collect();
    Some(CharacterTable {
        group: format!("S{n}"),
        order: group.order(),
        sizes: sizes_of(group),
        reps: Some(reps_of(group)),
        chars,
    })
}
