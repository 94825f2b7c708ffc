//! Permutations, finite permutation groups by full enumeration, and the
//! group-theoretic depth bounds.
//!
//! Groups are stored as their complete, lexicographically sorted element
//! lists, which keeps every derived object (conjugacy classes, cores,
//! quotients) deterministic. Enumeration is capped rather than clever: the
//! bundled pairs stay in the hundreds of elements and a cap guards against
//! runaway inputs.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub const DEFAULT_ENUMERATION_CAP: usize = 500_000;
pub const DEFAULT_CONJUGATE_SEARCH_LIMIT: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("bad cycle syntax: {0}")]
    BadCycleSyntax(String),
    #[error("point {point} repeated in cycle word")]
    RepeatedPoint { point: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("the claimed subgroup is not contained in the group")]
    NotASubgroup,
    #[error("the claimed normal subgroup is not normal")]
    NotNormal,
}

/// Permutation of {1..degree}, stored 0-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            if img >= degree {
                return Err(PermError::PointOutOfRange {
                    point: img + 1,
                    degree,
                });
            }
            if seen[img] {
                return Err(PermError::RepeatedPoint { point: img + 1 });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// self after other: x -> self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// g self g^{-1}.
    pub fn conjugated_by(&self, g: &Permutation) -> Permutation {
        assert_eq!(self.degree(), g.degree());
        let mut images = vec![0; self.degree()];
        for x in 0..self.degree() {
            images[g.images[x]] = g.images[self.images[x]];
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, num_integer::lcm)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Pads with fixed points up to the requested degree.
    pub fn extended(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree()..degree);
        Permutation { images }
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle word with 1-based points; the identity prints as "()".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, &p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses a product of disjoint cycles in 1-based notation, e.g.
/// "(1,2,3)(4,5)". "()" is the identity. Points must be distinct across the
/// whole word.
pub fn parse_perm(text: &str, degree: usize) -> Result<Permutation, PermError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PermError::BadCycleSyntax("empty cycle word".into()));
    }
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(PermError::BadCycleSyntax(format!(
                "expected '(' at {rest:?}"
            )));
        };
        let Some(close) = stripped.find(')') else {
            return Err(PermError::BadCycleSyntax("unclosed cycle".into()));
        };
        let body = &stripped[..close];
        rest = &stripped[close + 1..];
        if body.is_empty() {
            continue;
        }
        let mut points = Vec::new();
        for token in body.split(',') {
            let point: usize = token
                .parse()
                .map_err(|_| PermError::BadCycleSyntax(format!("bad point {token:?}")))?;
            if point == 0 || point > degree {
                return Err(PermError::PointOutOfRange { point, degree });
            }
            if used[point - 1] {
                return Err(PermError::RepeatedPoint { point });
            }
            used[point - 1] = true;
            points.push(point - 1);
        }
        for (i, &p) in points.iter().enumerate() {
            images[p] = points[(i + 1) % points.len()];
        }
    }
    Ok(Permutation { images })
}

/// Splits a comma-separated generator list at parenthesis depth zero and
/// parses each word: "(1,2),(1,2,3,4)" yields two generators.
pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Permutation>, PermError> {
    let mut words = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| PermError::BadCycleSyntax("unbalanced ')'".into()))?;
                current.push(c);
            }
            ',' if depth == 0 => {
                words.push(std::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    if depth != 0 {
        return Err(PermError::BadCycleSyntax("unclosed cycle".into()));
    }
    words.push(current);
    words.iter().map(|w| parse_perm(w, degree)).collect()
}

/// Conjugacy class: sorted element list with the minimal element as
/// representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjClass {
    pub representative: Permutation,
    pub elements: Vec<Permutation>,
}

impl ConjClass {
    pub fn size(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Finite permutation group held as its full sorted element list.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    classes: OnceLock<Vec<ConjClass>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            classes: OnceLock::new(),
        }
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Breadth-first closure of the generators, failing once the cap is
    /// passed.
    pub fn generate(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, PermError> {
        for g in &generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(e) = queue.pop_front() {
            for g in &generators {
                let next = e.compose(g);
                if seen.contains(&next) {
                    continue;
                }
                if seen.len() >= cap {
                    return Err(PermError::CapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            degree,
            generators,
            elements,
            classes: OnceLock::new(),
        })
    }

    /// Wraps an explicit closed element set, deriving a small generating
    /// set greedily.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        assert!(
            elements.first().is_some_and(Permutation::is_identity),
            "element sets must contain the identity"
        );
        let mut generators: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for e in &elements {
            if span.contains(e) {
                continue;
            }
            generators.push(e.clone());
            let mut queue: VecDeque<Permutation> = span.iter().cloned().collect();
            while let Some(x) = queue.pop_front() {
                for g in &generators {
                    let next = x.compose(g);
                    if span.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        assert_eq!(span.len(), elements.len(), "element set is not closed");
        PermGroup {
            degree,
            generators,
            elements,
            classes: OnceLock::new(),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut generators = Vec::new();
        if n >= 2 {
            generators.push(parse_perm("(1,2)", n).unwrap());
        }
        if n >= 3 {
            let word: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            generators.push(parse_perm(&format!("({})", word.join(",")), n).unwrap());
        }
        PermGroup::generate(n, generators, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let mut generators = Vec::new();
        for i in 1..=n.saturating_sub(2) {
            generators.push(parse_perm(&format!("({},{},{})", i, i + 1, i + 2), n).unwrap());
        }
        PermGroup::generate(n.max(1), generators, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.generators.iter().all(|x| g.contains(x))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Conjugacy classes ordered by their minimal element; the identity
    /// class always comes first.
    pub fn conjugacy_classes(&self) -> &[ConjClass] {
        self.classes.get_or_init(|| {
            let mut assigned = vec![false; self.elements.len()];
            let mut classes = Vec::new();
            for (idx, rep) in self.elements.iter().enumerate() {
                if assigned[idx] {
                    continue;
                }
                let mut members: Vec<Permutation> =
                    self.elements.iter().map(|g| rep.conjugated_by(g)).collect();
                members.sort();
                members.dedup();
                for m in &members {
                    assigned[self.elements.binary_search(m).unwrap()] = true;
                }
                classes.push(ConjClass {
                    representative: members[0].clone(),
                    elements: members,
                });
            }
            classes
        })
    }

    pub fn class_index_of(&self, p: &Permutation) -> Option<usize> {
        self.conjugacy_classes().iter().position(|c| c.contains(p))
    }
}

fn bitset_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bitset_count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn group_from_bitset(parent: &PermGroup, bits: &[u64]) -> PermGroup {
    let elements: Vec<Permutation> = parent
        .elements
        .iter()
        .enumerate()
        .filter(|(i, _)| bits[i / 64] >> (i % 64) & 1 == 1)
        .map(|(_, e)| e.clone())
        .collect();
    PermGroup::from_elements(parent.degree, elements)
}

/// For each class of h, the index of the class of g containing it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FusionMap {
    pub map: Vec<usize>,
}

impl FusionMap {
    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::new();
        self.map.iter().all(|&c| seen.insert(c))
    }
}

pub fn class_fusion(g: &PermGroup, h: &PermGroup) -> Result<FusionMap, PermError> {
    if !h.is_subgroup_of(g) {
        return Err(PermError::NotASubgroup);
    }
    let map = h
        .conjugacy_classes()
        .iter()
        .map(|d| {
            g.class_index_of(&d.representative)
                .expect("subgroup elements lie in some class of the group")
        })
        .collect();
    Ok(FusionMap { map })
}

/// The distinct conjugates of h in g, ordered by first appearance along the
/// sorted element list; the first entry is h itself. Returned with one
/// witnessing conjugator per conjugate.
fn distinct_conjugates(g: &PermGroup, h: &PermGroup) -> (Vec<Vec<u64>>, Vec<Permutation>) {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut conjugates = Vec::new();
    let mut witnesses = Vec::new();
    for x in g.elements() {
        let words = g.elements().len().div_ceil(64);
        let mut bits = vec![0u64; words];
        for e in h.elements() {
            let idx = g
                .element_index(&e.conjugated_by(x))
                .expect("conjugates of subgroup elements stay in the group");
            bits[idx / 64] |= 1 << (idx % 64);
        }
        if seen.insert(bits.clone()) {
            conjugates.push(bits);
            witnesses.push(x.clone());
        }
    }
    (conjugates, witnesses)
}

/// Largest normal subgroup of g inside h: the intersection of all
/// conjugates of h.
pub fn core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup, PermError> {
    if !h.is_subgroup_of(g) {
        return Err(PermError::NotASubgroup);
    }
    let (conjugates, _) = distinct_conjugates(g, h);
    let mut bits = conjugates[0].clone();
    for c in &conjugates[1..] {
        bits = bitset_and(&bits, c);
    }
    Ok(group_from_bitset(g, &bits))
}

pub fn is_normal(g: &PermGroup, h: &PermGroup) -> Result<bool, PermError> {
    if !h.is_subgroup_of(g) {
        return Err(PermError::NotASubgroup);
    }
    Ok(g.elements().iter().all(|x| {
        h.generators()
            .iter()
            .all(|gen| h.contains(&gen.conjugated_by(x)))
    }))
}

/// Order of the normalizer of h in g and its index.
pub fn normalizer_index(g: &PermGroup, h: &PermGroup) -> Result<(u64, u64), PermError> {
    if !h.is_subgroup_of(g) {
        return Err(PermError::NotASubgroup);
    }
    let normalizer_order = g
        .elements()
        .iter()
        .filter(|x| {
            h.generators()
                .iter()
                .all(|gen| h.contains(&gen.conjugated_by(x)))
        })
        .count() as u64;
    Ok((normalizer_order, g.order() / normalizer_order))
}

/// True iff every element of n commutes with every generator of g.
pub fn is_central_in(g: &PermGroup, n: &PermGroup) -> bool {
    n.elements()
        .iter()
        .all(|e| g.generators().iter().all(|x| e.compose(x) == x.compose(e)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MinConjugates {
    /// Minimum over all subsets of distinct conjugates.
    Exact {
        m: usize,
        witnesses: Vec<Permutation>,
    },
    /// Greedy bound used when there are more distinct conjugates than the
    /// exhaustive search limit.
    UpperBound {
        m: usize,
        witnesses: Vec<Permutation>,
    },
}

impl MinConjugates {
    pub fn m(&self) -> usize {
        match self {
            MinConjugates::Exact { m, .. } | MinConjugates::UpperBound { m, .. } => *m,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, MinConjugates::Exact { .. })
    }
}

/// Least number of conjugates of h whose intersection is the core. The
/// search fixes h as first member (valid up to conjugating the whole
/// subset) and is exhaustive while the distinct conjugates fit the limit;
/// beyond that a greedy descent gives an upper bound.
pub fn min_conjugate_intersections(
    g: &PermGroup,
    h: &PermGroup,
    limit: usize,
) -> Result<MinConjugates, PermError> {
    if !h.is_subgroup_of(g) {
        return Err(PermError::NotASubgroup);
    }
    let (conjugates, witnesses) = distinct_conjugates(g, h);
    let mut core_bits = conjugates[0].clone();
    for c in &conjugates[1..] {
        core_bits = bitset_and(&core_bits, c);
    }
    let count = conjugates.len();

    if count <= limit {
        for m in 1..=count {
            // Subsets of size m containing index 0.
            let mut chosen: Vec<usize> = (0..m).collect();
            loop {
                let mut bits = conjugates[0].clone();
                for &i in &chosen[1..] {
                    bits = bitset_and(&bits, &conjugates[i]);
                }
                if bits == core_bits {
                    let ws = chosen.iter().map(|&i| witnesses[i].clone()).collect();
                    return Ok(MinConjugates::Exact { m, witnesses: ws });
                }
                // Advance chosen[1..] through combinations of {1..count-1}.
                let mut pos = m;
                loop {
                    if pos == 1 {
                        pos = 0;
                        break;
                    }
                    pos -= 1;
                    if chosen[pos] < count - (m - pos) {
                        chosen[pos] += 1;
                        for later in pos + 1..m {
                            chosen[later] = chosen[later - 1] + 1;
                        }
                        break;
                    }
                }
                if pos == 0 {
                    break;
                }
            }
        }
        unreachable!("the full conjugate set always intersects in the core");
    }

    let mut bits = conjugates[0].clone();
    let mut chosen = vec![0usize];
    while bits != core_bits {
        let best = (1..count)
            .filter(|i| !chosen.contains(i))
            .min_by_key(|&i| bitset_count(&bitset_and(&bits, &conjugates[i])))
            .expect("core is reached before conjugates run out");
        bits = bitset_and(&bits, &conjugates[best]);
        chosen.push(best);
    }
    let ws = chosen.iter().map(|&i| witnesses[i].clone()).collect();
    Ok(MinConjugates::UpperBound {
        m: chosen.len(),
        witnesses: ws,
    })
}

fn ratio_string<S: Serializer>(values: &[Ratio<u64>], s: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<String> = values.iter().map(|r| r.to_string()).collect();
    strings.serialize(s)
}

/// Spectrum of S = M M^t read off from class data: one eigenvalue
/// |G|/|H| * |C meet H| / |C| per class C of g meeting h, plus zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenReport {
    #[serde(serialize_with = "ratio_string")]
    pub eigenvalues: Vec<Ratio<u64>>,
    pub zero_multiplicity: usize,
    pub distinct_nonzero: usize,
    pub fusion_injective: bool,
    pub eigen_bound: usize,
}

pub fn eigenvalue_report(g: &PermGroup, h: &PermGroup) -> Result<EigenReport, PermError> {
    let fusion = class_fusion(g, h)?;
    let g_classes = g.conjugacy_classes();
    let h_classes = h.conjugacy_classes();

    let mut meet_sizes: HashMap<usize, u64> = HashMap::new();
    for (d, &c) in h_classes.iter().zip(&fusion.map) {
        *meet_sizes.entry(c).or_insert(0) += d.size();
    }
    // The fusion route and a direct count must agree.
    for (&c, &size) in &meet_sizes {
        let direct = g_classes[c]
            .elements
            .iter()
            .filter(|e| h.contains(e))
            .count() as u64;
        assert_eq!(direct, size, "fusion sizes disagree with direct counts");
    }

    let index = Ratio::new(g.order(), h.order());
    let mut eigenvalues: Vec<Ratio<u64>> = Vec::new();
    for (c, class) in g_classes.iter().enumerate() {
        if let Some(&meet) = meet_sizes.get(&c) {
            eigenvalues.push(index * Ratio::new(meet, class.size()));
        }
    }
    eigenvalues.sort_by(|a, b| b.cmp(a));

    let mut distinct: Vec<Ratio<u64>> = eigenvalues.clone();
    distinct.dedup();
    let t = distinct.len();
    let fusion_injective = fusion.is_injective();
    let eigen_bound = if fusion_injective {
        2 * t - 1
    } else {
        2 * t + 1
    };
    Ok(EigenReport {
        zero_multiplicity: h_classes.len() - eigenvalues.len(),
        eigenvalues,
        distinct_nonzero: t,
        fusion_injective,
        eigen_bound,
    })
}

/// The group-theoretic depth bounds for a subgroup pair, with the data each
/// bound came from.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub group_order: u64,
    pub subgroup_order: u64,
    pub is_normal: bool,
    pub core_order: u64,
    pub core_is_central: bool,
    pub min_conjugates: MinConjugates,
    pub core_bound: usize,
    pub normalizer_index: u64,
    pub normalizer_bound: u64,
    pub eigen: EigenReport,
}

pub fn depth_bounds(g: &PermGroup, h: &PermGroup, limit: usize) -> Result<BoundsReport, PermError> {
    let normal = is_normal(g, h)?;
    let core_group = core(g, h)?;
    let core_is_central = is_central_in(g, &core_group);
    let min_conjugates = min_conjugate_intersections(g, h, limit)?;
    let m = min_conjugates.m();
    let core_bound = if core_is_central { 2 * m - 1 } else { 2 * m };
    let (_, normalizer_idx) = normalizer_index(g, h)?;
    let eigen = eigenvalue_report(g, h)?;
    Ok(BoundsReport {
        group_order: g.order(),
        subgroup_order: h.order(),
        is_normal: normal,
        core_order: core_group.order(),
        core_is_central,
        min_conjugates,
        core_bound,
        normalizer_index: normalizer_idx,
        normalizer_bound: 2 * normalizer_idx,
        eigen,
    })
}

/// Number of orbits of g acting on the elements of a normal subgroup n by
/// conjugation. For abelian n this equals the number of orbits of g on the
/// irreducible characters of n.
pub fn conjugation_orbit_count(g: &PermGroup, n: &PermGroup) -> Result<usize, PermError> {
    if !is_normal(g, n)? {
        return Err(PermError::NotNormal);
    }
    let mut assigned = vec![false; n.elements().len()];
    let mut orbits = 0;
    for (idx, e) in n.elements().iter().enumerate() {
        if assigned[idx] {
            continue;
        }
        orbits += 1;
        for x in g.elements() {
            let conjugate = e.conjugated_by(x);
            assigned[n
                .element_index(&conjugate)
                .expect("normal subgroups are closed under conjugation")] = true;
        }
    }
    Ok(orbits)
}

/// Left-multiplication action of g on the cosets of a normal subgroup n,
/// with cosets ordered by minimal member (the coset of the identity first).
pub struct CosetAction {
    cosets: Vec<Vec<Permutation>>,
    coset_of: Vec<usize>,
    parent: PermGroup,
}

impl CosetAction {
    pub fn coset_count(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &[Vec<Permutation>] {
        &self.cosets
    }

    /// Image of g on coset indices.
    pub fn act(&self, g: &Permutation) -> Permutation {
        let images = self
            .cosets
            .iter()
            .map(|coset| {
                let moved = g.compose(&coset[0]);
                self.coset_of[self
                    .parent
                    .element_index(&moved)
                    .expect("products stay in the group")]
            })
            .collect();
        Permutation { images }
    }

    /// Image of a subgroup of the parent under the action.
    pub fn image_of(&self, h: &PermGroup) -> PermGroup {
        let elements: Vec<Permutation> = h.elements().iter().map(|e| self.act(e)).collect();
        PermGroup::from_elements(self.coset_count(), elements)
    }
}

pub fn coset_action(g: &PermGroup, n: &PermGroup) -> Result<CosetAction, PermError> {
    if !is_normal(g, n)? {
        return Err(PermError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.elements().len()];
    let mut cosets: Vec<Vec<Permutation>> = Vec::new();
    for (idx, e) in g.elements().iter().enumerate() {
        if coset_of[idx] != usize::MAX {
            continue;
        }
        let coset_index = cosets.len();
        let mut members: Vec<Permutation> = n.elements().iter().map(|x| e.compose(x)).collect();
        members.sort();
        for m in &members {
            coset_of[g.element_index(m).expect("coset members stay in the group")] = coset_index;
        }
        cosets.push(members);
    }
    Ok(CosetAction {
        cosets,
        coset_of,
        parent: g.clone(),
    })
}

/// The quotient of g by a normal subgroup, realized on the cosets. The
/// kernel of the action is exactly n, so the image has order [g : n].
pub fn quotient_action(g: &PermGroup, n: &PermGroup) -> Result<PermGroup, PermError> {
    let action = coset_action(g, n)?;
    let quotient = action.image_of(g);
    assert_eq!(quotient.order(), g.order() / n.order());
    Ok(quotient)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        PermGroup::symmetric(4)
    }

    fn d8_in_s4() -> PermGroup {
        let gens = parse_generators("(1,2,3,4),(1,4)(2,3)", 4).unwrap();
        PermGroup::generate(4, gens, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    fn v4_in_s4() -> PermGroup {
        let gens = parse_generators("(1,2)(3,4),(1,3)(2,4)", 4).unwrap();
        PermGroup::generate(4, gens, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn cycle_parsing_round_trips_and_rejects_garbage() {
        let p = parse_perm("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(parse_perm("()", 4).unwrap(), Permutation::identity(4));
        assert_eq!(parse_perm("( 1 , 3 )", 3).unwrap().to_string(), "(1,3)");
        assert!(matches!(
            parse_perm("(1,2", 4),
            Err(PermError::BadCycleSyntax(_))
        ));
        assert!(matches!(
            parse_perm("1,2)", 4),
            Err(PermError::BadCycleSyntax(_))
        ));
        assert_eq!(
            parse_perm("(1,2)(2,3)", 4),
            Err(PermError::RepeatedPoint { point: 2 })
        );
        assert_eq!(
            parse_perm("(1,7)", 6),
            Err(PermError::PointOutOfRange {
                point: 7,
                degree: 6
            })
        );
        assert_eq!(
            parse_perm("(0,1)", 3),
            Err(PermError::PointOutOfRange {
                point: 0,
                degree: 3
            })
        );
    }

    #[test]
    fn generator_lists_split_at_top_level_commas() {
        let gens = parse_generators("(1,2),(1,2,3,4)", 4).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[1].to_string(), "(1,2,3,4)");
        let gens = parse_generators("(1,6)(2,5)(3,4)", 6).unwrap();
        assert_eq!(gens.len(), 1);
    }

    #[test]
    fn enumeration_orders_and_caps() {
        assert_eq!(s4().order(), 24);
        assert_eq!(PermGroup::symmetric(6).order(), 720);
        assert_eq!(PermGroup::alternating(5).order(), 60);
        assert_eq!(PermGroup::alternating(6).order(), 360);
        assert_eq!(d8_in_s4().order(), 8);
        let err = PermGroup::generate(5, parse_generators("(1,2),(1,2,3,4,5)", 5).unwrap(), 30)
            .unwrap_err();
        assert_eq!(err, PermError::CapExceeded { cap: 30 });
    }

    #[test]
    fn conjugacy_classes_are_deterministic_with_identity_first() {
        let g = s4();
        let classes = g.conjugacy_classes();
        let sizes: Vec<u64> = classes.iter().map(ConjClass::size).collect();
        assert_eq!(sizes, vec![1, 6, 8, 3, 6]);
        assert!(classes[0].representative.is_identity());
        assert_eq!(classes[1].representative.to_string(), "(3,4)");
        assert_eq!(classes[2].representative.to_string(), "(2,3,4)");
        assert_eq!(classes[3].representative.to_string(), "(1,2)(3,4)");
        assert_eq!(classes[4].representative.to_string(), "(1,2,3,4)");
    }

    #[test]
    fn five_cycles_split_in_the_alternating_group() {
        let a5 = PermGroup::alternating(5);
        let sizes: Vec<u64> = a5.conjugacy_classes().iter().map(ConjClass::size).collect();
        assert_eq!(sizes, vec![1, 20, 15, 12, 12]);
        let c1 = a5.class_index_of(&parse_perm("(1,2,3,4,5)", 5).unwrap());
        let c2 = a5.class_index_of(&parse_perm("(1,3,5,2,4)", 5).unwrap());
        assert!(c1.is_some() && c2.is_some() && c1 != c2);
    }

    #[test]
    fn fusion_merges_subgroup_classes() {
        let g = s4();
        let h = d8_in_s4();
        assert_eq!(h.conjugacy_classes().len(), 5);
        let fusion = class_fusion(&g, &h).unwrap();
        assert_eq!(fusion.map.len(), 5);
        assert!(!fusion.is_injective());
        let h =
            PermGroup::generate(4, parse_generators("(1,2),(1,2,3)", 4).unwrap(), 1000).unwrap();
        let fusion = class_fusion(&g, &h).unwrap();
        assert_eq!(fusion.map, vec![0, 1, 2]);
        assert!(fusion.is_injective());
    }

    #[test]
    fn core_of_the_dihedral_subgroup_is_the_klein_four_group() {
        let core_group = core(&s4(), &d8_in_s4()).unwrap();
        assert_eq!(core_group, v4_in_s4());
        assert!(is_normal(&s4(), &v4_in_s4()).unwrap());
        assert!(!is_normal(&s4(), &d8_in_s4()).unwrap());
        assert!(!is_central_in(&s4(), &v4_in_s4()));
    }

    #[test]
    fn trivial_core_for_the_natural_point_stabilizer() {
        let g = s4();
        let h =
            PermGroup::generate(4, parse_generators("(1,2),(1,2,3)", 4).unwrap(), 1000).unwrap();
        let c = core(&g, &h).unwrap();
        assert_eq!(c.order(), 1);
        assert!(is_central_in(&g, &c));
    }

    #[test]
    fn minimal_conjugate_counts() {
        let two = min_conjugate_intersections(&s4(), &d8_in_s4(), 8).unwrap();
        assert!(two.is_exact());
        assert_eq!(two.m(), 2);

        let h =
            PermGroup::generate(4, parse_generators("(1,2),(1,2,3)", 4).unwrap(), 1000).unwrap();
        let three = min_conjugate_intersections(&s4(), &h, 8).unwrap();
        assert!(three.is_exact());
        assert_eq!(three.m(), 3);

        let normal = min_conjugate_intersections(&s4(), &v4_in_s4(), 8).unwrap();
        assert_eq!(normal.m(), 1);
    }

    #[test]
    fn exhaustive_and_greedy_agree_on_small_pairs() {
        let g = s4();
        let h = d8_in_s4();
        let exact = min_conjugate_intersections(&g, &h, 8).unwrap();
        let greedy = min_conjugate_intersections(&g, &h, 1).unwrap();
        assert!(!greedy.is_exact());
        assert!(greedy.m() >= exact.m());
    }

    #[test]
    fn eigenvalues_for_the_point_stabilizer_in_s4() {
        let g = s4();
        let h =
            PermGroup::generate(4, parse_generators("(1,2),(1,2,3)", 4).unwrap(), 1000).unwrap();
        let report = eigenvalue_report(&g, &h).unwrap();
        let values: Vec<String> = report.eigenvalues.iter().map(|r| r.to_string()).collect();
        assert_eq!(values, vec!["4", "2", "1"]);
        assert_eq!(report.zero_multiplicity, 0);
        assert_eq!(report.distinct_nonzero, 3);
        assert!(report.fusion_injective);
        assert_eq!(report.eigen_bound, 5);
    }

    #[test]
    fn eigenvalues_for_the_alternating_pair() {
        let g = PermGroup::alternating(5);
        let h =
            PermGroup::generate(5, parse_generators("(1,2,3),(2,3,4)", 5).unwrap(), 1000).unwrap();
        assert_eq!(h.order(), 12);
        let report = eigenvalue_report(&g, &h).unwrap();
        let values: Vec<String> = report.eigenvalues.iter().map(|r| r.to_string()).collect();
        assert_eq!(values, vec!["5", "2", "1"]);
        assert_eq!(report.zero_multiplicity, 1);
        assert!(!report.fusion_injective);
        assert_eq!(report.eigen_bound, 7);
    }

    #[test]
    fn trivial_inclusion_has_eigenvalue_one() {
        let g = s4();
        let report = eigenvalue_report(&g, &g).unwrap();
        assert!(report.eigenvalues.iter().all(|r| *r == Ratio::new(1, 1)));
        assert_eq!(report.distinct_nonzero, 1);
        assert!(report.fusion_injective);
        assert_eq!(report.eigen_bound, 1);
    }

    #[test]
    fn bounds_for_the_dihedral_pair() {
        let report = depth_bounds(&s4(), &d8_in_s4(), 8).unwrap();
        assert!(!report.is_normal);
        assert_eq!(report.core_order, 4);
        assert!(!report.core_is_central);
        assert_eq!(report.min_conjugates.m(), 2);
        assert_eq!(report.core_bound, 4);
        assert_eq!(report.normalizer_index, 3);
        assert_eq!(report.normalizer_bound, 6);
        assert_eq!(report.eigen.eigen_bound, 5);
    }

    #[test]
    fn point_stabilizer_bounds_use_the_central_trivial_core() {
        let h =
            PermGroup::generate(4, parse_generators("(1,2),(1,2,3)", 4).unwrap(), 1000).unwrap();
        let report = depth_bounds(&s4(), &h, 8).unwrap();
        assert_eq!(report.min_conjugates.m(), 3);
        assert!(report.core_is_central);
        assert_eq!(report.core_bound, 5);
    }

    #[test]
    fn quotient_by_the_klein_four_group_is_the_symmetric_group_on_three_letters() {
        let g = s4();
        let n = v4_in_s4();
        let q = quotient_action(&g, &n).unwrap();
        assert_eq!(q.degree(), 6);
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        let action = coset_action(&g, &n).unwrap();
        let image = action.image_of(&d8_in_s4());
        assert_eq!(image.order(), 2);
        assert!(image.is_subgroup_of(&q));
        assert_eq!(
            quotient_action(&g, &d8_in_s4()).unwrap_err(),
            PermError::NotNormal
        );
    }

    #[test]
    fn conjugation_orbits_on_normal_subgroups() {
        // The three involutions of the Klein four group are permuted
        // transitively, leaving two orbits.
        assert_eq!(conjugation_orbit_count(&s4(), &v4_in_s4()).unwrap(), 2);
        let a3 = PermGroup::generate(3, parse_generators("(1,2,3)", 3).unwrap(), 10).unwrap();
        assert_eq!(
            conjugation_orbit_count(&PermGroup::symmetric(3), &a3).unwrap(),
            2
        );
        let trivial = PermGroup::generate(4, vec![], 10).unwrap();
        assert_eq!(conjugation_orbit_count(&s4(), &trivial).unwrap(), 1);
        assert_eq!(
            conjugation_orbit_count(&s4(), &d8_in_s4()),
            Err(PermError::NotNormal)
        );
    }

    #[test]
    fn subgroup_membership_requires_matching_degree() {
        let s3_natural = PermGroup::symmetric(3);
        assert!(!s3_natural.is_subgroup_of(&s4()));
        assert_eq!(
            class_fusion(&s4(), &s3_natural),
            Err(PermError::NotASubgroup)
        );
    }
}
