//! Induction, restriction, inclusion matrices, the operators T and U,
//! character kernels, and transport of a table to a quotient group.
//!
//! All class indices here are group class indices: both tables must have
//! been aligned to their groups first, and fusion maps come from perm, not
//! from character values.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::chartab::{
    inner_product, multiplicities, round_nonneg, CharacterTable, ChartabError, ClassFunction,
    GroupWithTable, INTEGER_TOLERANCE, INTERNAL_TOLERANCE,
};
use crate::intmatrix::{IrredundantMatrix, Matrix, MatrixError};
use crate::perm::{class_fusion, coset_action, FusionMap, PermGroup, Permutation};

/// Restriction along the fusion map: a class function on G becomes one on
/// H by reading the value of the containing G-class.
pub fn restrict(fusion: &FusionMap, f: &ClassFunction) -> ClassFunction {
    ClassFunction {
        values: fusion.map.iter().map(|&c| f.values[c]).collect(),
    }
}

/// Induction of a class function from H to G:
/// f induced at C is [G:H] (1/|C|) sum over H-classes D inside C of |D| f(D).
pub fn induce(
    g: &GroupWithTable,
    h: &GroupWithTable,
    fusion: &FusionMap,
    f: &ClassFunction,
) -> ClassFunction {
    let index = g.group.order() as f64 / h.group.order() as f64;
    let mut values = vec![Complex64::new(0.0, 0.0); g.table.class_count()];
    for (d, &c) in fusion.map.iter().enumerate() {
        values[c] += h.table.sizes[d] as f64 * f.values[d];
    }
    for (c, value) in values.iter_mut().enumerate() {
        *value *= index / g.table.sizes[c] as f64;
    }
    ClassFunction { values }
}

/// Induction-restriction table: entry (i, j) is the multiplicity of the
/// i-th irreducible of H in the restriction of the j-th irreducible of G.
pub fn inclusion_matrix(
    g: &GroupWithTable,
    h: &GroupWithTable,
) -> Result<IrredundantMatrix, ChartabError> {
    let fusion = class_fusion(&g.group, &h.group)?;
    let r = h.table.chars.len();
    let s = g.table.chars.len();
    let mut rows = vec![vec![0u64; s]; r];
    for j in 0..s {
        let restricted = restrict(&fusion, &g.table.irr(j));
        for (i, row) in rows.iter_mut().enumerate() {
            let ip = inner_product(&h.table, &restricted, &h.table.irr(i));
            row[j] =
                round_nonneg(ip).ok_or(ChartabError::NonIntegerMultiplicity { value: ip.re })?;
        }
    }
    IrredundantMatrix::from_u64_rows(&rows).map_err(|e| match e {
        MatrixError::ZeroRowOrColumn { .. } => ChartabError::RedundantResult,
        other => ChartabError::MalformedFile(other.to_string()),
    })
}

fn operator_matrix(
    table: &CharacterTable,
    images: &[ClassFunction],
) -> Result<Matrix, ChartabError> {
    let k = table.chars.len();
    let mut out = Matrix::zeros(k, k);
    for (j, image) in images.iter().enumerate() {
        for i in 0..k {
            let ip = inner_product(table, image, &table.irr(i));
            let entry = round_nonneg(ip).ok_or(ChartabError::NonIntegerEntry { value: ip.re })?;
            out.set(i, j, entry.into());
        }
    }
    Ok(out)
}

/// Matrix of T: alpha maps to alpha induced then restricted, on the basis
/// Irr(H). Cross-checked against M M^t of the inclusion matrix.
pub fn t_operator(g: &GroupWithTable, h: &GroupWithTable) -> Result<Matrix, ChartabError> {
    let fusion = class_fusion(&g.group, &h.group)?;
    let images: Vec<ClassFunction> = (0..h.table.chars.len())
        .map(|i| restrict(&fusion, &induce(g, h, &fusion, &h.table.irr(i))))
        .collect();
    let t = operator_matrix(&h.table, &images)?;
    let m = inclusion_matrix(g, h)?;
    let square = m.matrix().mul(&m.matrix().transpose());
    assert_eq!(
        t, square,
        "T differs from the square of the inclusion matrix"
    );
    Ok(t)
}

/// Matrix of U: chi maps to chi restricted then induced, on the basis
/// Irr(G). Cross-checked against M^t M of the inclusion matrix.
pub fn u_operator(g: &GroupWithTable, h: &GroupWithTable) -> Result<Matrix, ChartabError> {
    let fusion = class_fusion(&g.group, &h.group)?;
    let images: Vec<ClassFunction> = (0..g.table.chars.len())
        .map(|j| induce(g, h, &fusion, &restrict(&fusion, &g.table.irr(j))))
        .collect();
    let u = operator_matrix(&g.table, &images)?;
    let m = inclusion_matrix(g, h)?;
    let product = m.matrix().transpose().mul(m.matrix());
    assert_eq!(u, product, "U differs from M^t M of the inclusion matrix");
    Ok(u)
}

/// Classes where the character takes its degree value. Rejects class
/// functions that are not characters.
pub fn char_kernel(table: &CharacterTable, f: &ClassFunction) -> Result<Vec<usize>, ChartabError> {
    let coefficients = multiplicities(table, f).map_err(|_| ChartabError::NotACharacter)?;
    if coefficients.iter().all(|&c| c == 0) {
        return Err(ChartabError::NotACharacter);
    }
    let degree = f.values[0];
    let tolerance = INTERNAL_TOLERANCE * degree.norm().max(1.0);
    Ok((0..table.class_count())
        .filter(|&c| (f.values[c] - degree).norm() <= tolerance)
        .collect())
}

/// Table for the quotient of g by a normal subgroup, realized on the coset
/// action. Rows are the characters of g containing n in their kernel;
/// columns follow the quotient's own class order, so the result is aligned.
pub fn quotient_table(g: &GroupWithTable, n: &PermGroup) -> Result<GroupWithTable, ChartabError> {
    let action = coset_action(&g.group, n)?;
    let quotient = action.image_of(&g.group);
    assert_eq!(quotient.order(), g.group.order() / n.order());

    // First preimage in element order for every quotient element.
    let mut preimages: Vec<Option<&Permutation>> = Vec::new();
    let mut quotient_index = std::collections::HashMap::new();
    for (i, q) in quotient.elements().iter().enumerate() {
        quotient_index.insert(q.clone(), i);
        preimages.push(None);
    }
    for e in g.group.elements() {
        let idx = quotient_index[&action.act(e)];
        if preimages[idx].is_none() {
            preimages[idx] = Some(e);
        }
    }

    // G-classes meeting n; a character descends iff it is constant at its
    // degree on all of them.
    let covered: BTreeSet<usize> = n
        .elements()
        .iter()
        .map(|e| g.group.class_index_of(e).expect("n lies inside g"))
        .collect();
    let descending: Vec<usize> = (0..g.table.chars.len())
        .filter(|&i| {
            let row = &g.table.chars[i];
            let tolerance = INTEGER_TOLERANCE * row[0].norm().max(1.0);
            covered
                .iter()
                .all(|&c| (row[c] - row[0]).norm() <= tolerance)
        })
        .collect();

    let q_classes = quotient.conjugacy_classes();
    assert_eq!(
        descending.len(),
        q_classes.len(),
        "character count of the quotient must match its class count"
    );
    let class_preimages: Vec<usize> = q_classes
        .iter()
        .map(|class| {
            let lift = preimages[quotient_index[&class.representative]]
                .expect("every quotient element has a preimage");
            g.group.class_index_of(lift).expect("lift stays in g")
        })
        .collect();

    let chars = descending
        .iter()
        .map(|&i| {
            class_preimages
                .iter()
                .map(|&c| g.table.chars[i][c])
                .collect()
        })
        .collect();
    let table = CharacterTable {
        group: format!("{}/N{}", g.table.group, n.order()),
        order: quotient.order(),
        sizes: q_classes.iter().map(|c| c.size()).collect(),
        reps: Some(q_classes.iter().map(|c| c.representative.clone()).collect()),
        chars,
    };
    let report = table.validate()?;
    if report.residual() > INTERNAL_TOLERANCE {
        return Err(ChartabError::OrthogonalityFailure {
            residual: report.residual(),
        });
    }
    Ok(GroupWithTable {
        group: quotient,
        table,
    })
}
