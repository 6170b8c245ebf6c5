//! Quivers, paths, relations and potentials.
//!
//! Paths are stored target-first: `(a_k, ..., a_1)` means `a_1` is traversed
//! first. The two built-in quivers are the nine-vertex quiver of the cubic
//! surface collection and its rolled-up version with one extra arrow per
//! relation.
//!
//! Vertex `(i, j)` has index `i + 3j`. Arrow `x_{i,j,k}` runs from `(i, j)` to
//! `(i + k, j + 1)` (first coordinate mod 3) and has index `9j + 3i + k`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::IntMatrix;
use crate::rational::{format_rat, parse_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_lookup: HashMap<String, usize>,
    arrow_lookup: HashMap<String, usize>,
}

impl QuiverPresentation {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut vertex_lookup = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_lookup.insert(v.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate vertex label {v}")));
            }
        }
        let mut arrow_lookup = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            for end in [a.source, a.target] {
                if end >= vertices.len() {
                    return Err(Error::UnknownVertex(end.to_string()));
                }
            }
            if arrow_lookup.insert(a.label.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate arrow label {}", a.label)));
            }
        }
        Ok(QuiverPresentation {
            vertices,
            arrows,
            vertex_lookup,
            arrow_lookup,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertex_lookup
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow(&self, label: &str) -> Result<usize> {
        self.arrow_lookup
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.target == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == v).count()
    }

    /// A copy without the arrow at `index`.
    pub fn without_arrow(&self, index: usize) -> Result<Self> {
        if index >= self.arrows.len() {
            return Err(Error::UnknownArrow(index.to_string()));
        }
        let mut arrows = self.arrows.clone();
        arrows.remove(index);
        Self::new(self.vertices.clone(), arrows)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    /// All paths of the given length, in lexicographic order of their
    /// (target-first) arrow sequences.
    pub fn enumerate_paths(&self, from: usize, to: usize, length: usize) -> Result<Vec<Path>> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        if length == 0 {
            return Ok(if from == to {
                vec![Path::trivial(from)]
            } else {
                Vec::new()
            });
        }
        // build backwards from the target so the output is already sorted
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::with_capacity(length);
        self.extend_paths(to, from, length, &mut stack, &mut out);
        Ok(out)
    }

    fn extend_paths(
        &self,
        head: usize,
        from: usize,
        remaining: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Path>,
    ) {
        if remaining == 0 {
            if head == from {
                out.push(Path {
                    arrows: stack.clone(),
                    source: from,
                    target: self.arrows[stack[0]].target,
                });
            }
            return;
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.target == head {
                stack.push(i);
                self.extend_paths(a.source, from, remaining - 1, stack, out);
                stack.pop();
            }
        }
    }

    /// Builds a path from a target-first arrow sequence, checking composability.
    pub fn path(&self, arrows: Vec<usize>) -> Result<Path> {
        let Some(&last) = arrows.last() else {
            return Err(Error::Parse("empty arrow sequence".into()));
        };
        for &a in &arrows {
            if a >= self.arrows.len() {
                return Err(Error::UnknownArrow(a.to_string()));
            }
        }
        for w in arrows.windows(2) {
            // w[0] is traversed after w[1]
            if self.arrows[w[0]].source != self.arrows[w[1]].target {
                return Err(Error::Parse(format!(
                    "arrows {} and {} are not composable",
                    self.arrows[w[1]].label, self.arrows[w[0]].label
                )));
            }
        }
        Ok(Path {
            source: self.arrows[last].source,
            target: self.arrows[arrows[0]].target,
            arrows,
        })
    }

    pub fn path_labels(&self, p: &Path) -> Vec<String> {
        p.arrows
            .iter()
            .map(|&a| self.arrows[a].label.clone())
            .collect()
    }

    /// Signed incidence rows: one row per arrow, -1 at its source and +1 at
    /// its target.
    pub fn incidence_weight_rows(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.arrows.len(), self.vertices.len());
        for (r, a) in self.arrows.iter().enumerate() {
            m[(r, a.source)] -= BigInt::one();
            m[(r, a.target)] += BigInt::one();
        }
        m
    }

    /// Canonical representatives of all cyclic paths of the given length.
    pub fn cyclic_paths(&self, length: usize) -> Vec<Vec<usize>> {
        let mut seen = std::collections::BTreeSet::new();
        for v in 0..self.vertices.len() {
            for p in self.enumerate_paths(v, v, length).unwrap_or_default() {
                seen.insert(canonical_rotation(&p.arrows));
            }
        }
        seen.into_iter().collect()
    }

    fn is_cyclic_word(&self, word: &[usize]) -> bool {
        !word.is_empty()
            && self.path(word.to_vec()).is_ok()
            && self.arrows[*word.last().unwrap()].source == self.arrows[word[0]].target
    }
}

/// Sequence of arrows `(a_k, ..., a_1)` with `s(a_{i+1}) = t(a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            arrows: Vec::new(),
            source: v,
            target: v,
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self · other`: traverse `other` first. `None` if `s(self) != t(other)`.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            arrows,
            source: other.source,
            target: self.target,
        })
    }
}

/// Lexicographically smallest rotation of a cyclic word.
pub fn canonical_rotation(word: &[usize]) -> Vec<usize> {
    (0..word.len().max(1))
        .map(|r| {
            let mut w = word.to_vec();
            w.rotate_left(r % word.len().max(1));
            w
        })
        .min()
        .unwrap_or_default()
}

/// Finite linear combination of paths with exact coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathCombination {
    terms: BTreeMap<Path, Rat>,
}

impl PathCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, path: Path, coeff: Rat) {
        let entry = self.terms.entry(path.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&path);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, path: &Path) -> Rat {
        self.terms.get(path).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        let mut out = Self::new();
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }

    /// The scalar `c` with `self = c · other`, if the two are proportional.
    pub fn ratio_to(&self, other: &PathCombination) -> Option<Rat> {
        let (p, x) = other.terms.iter().next()?;
        let c = self.coefficient(p) / x;
        (!c.is_zero() && self.scaled(&Rat::one()) == other.scaled(&c)).then_some(c)
    }
}

/// Identifies one relation in a [`RelationSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationKey {
    pub source: usize,
    pub target: usize,
    pub index: usize,
}

/// Relations grouped by (source, target) vertex pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    relations: BTreeMap<(usize, usize), Vec<PathCombination>>,
}

impl RelationSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a relation; every term must run from `source` to `target` and all
    /// terms must have equal length.
    pub fn push(&mut self, source: usize, target: usize, rel: PathCombination) -> Result<RelationKey> {
        let mut len = None;
        for (p, _) in rel.terms() {
            if p.source != source || p.target != target {
                return Err(Error::Parse(format!(
                    "relation term does not run from vertex {source} to vertex {target}"
                )));
            }
            if *len.get_or_insert(p.len()) != p.len() {
                return Err(Error::Parse("relation mixes path lengths".into()));
            }
        }
        let v = self.relations.entry((source, target)).or_default();
        v.push(rel);
        Ok(RelationKey {
            source,
            target,
            index: v.len() - 1,
        })
    }

    pub fn get(&self, key: RelationKey) -> Option<&PathCombination> {
        self.relations
            .get(&(key.source, key.target))
            .and_then(|v| v.get(key.index))
    }

    pub fn iter(&self) -> impl Iterator<Item = (RelationKey, &PathCombination)> {
        self.relations.iter().flat_map(|(&(s, t), v)| {
            v.iter().enumerate().map(move |(index, r)| {
                (
                    RelationKey {
                        source: s,
                        target: t,
                        index,
                    },
                    r,
                )
            })
        })
    }

    pub fn len(&self) -> usize {
        self.relations.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True if both sets have the same keys and each pair of relations agrees
    /// up to a nonzero scalar.
    pub fn projectively_equal(&self, other: &RelationSet) -> bool {
        self.len() == other.len()
            && self.iter().all(|(k, r)| {
                other
                    .get(k)
                    .is_some_and(|o| if r.is_zero() { o.is_zero() } else { r.ratio_to(o).is_some() })
            })
    }
}

/// Formal sum of cyclic words, each stored as its canonical rotation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Potential {
    terms: BTreeMap<Vec<usize>, Rat>,
}

impl Potential {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff · [word]`; `word` is a target-first cyclic arrow sequence.
    pub fn add_cycle(&mut self, q: &QuiverPresentation, word: &[usize], coeff: Rat) -> Result<()> {
        if !q.is_cyclic_word(word) {
            return Err(Error::Parse(format!("{word:?} is not a cyclic path")));
        }
        let key = canonical_rotation(word);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &[usize]) -> Rat {
        self.terms
            .get(&canonical_rotation(word))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }
}

/// Cyclic derivative along `arrow`: each occurrence of the arrow in a cyclic
/// word is removed and the word is read off starting just after it.
pub fn cyclic_derivative(q: &QuiverPresentation, phi: &Potential, arrow: usize) -> Result<PathCombination> {
    if arrow >= q.arrow_count() {
        return Err(Error::UnknownArrow(arrow.to_string()));
    }
    let mut out = PathCombination::new();
    for (word, c) in phi.terms() {
        for (idx, &a) in word.iter().enumerate() {
            if a != arrow {
                continue;
            }
            let mut rest = word[idx + 1..].to_vec();
            rest.extend_from_slice(&word[..idx]);
            let path = if rest.is_empty() {
                Path::trivial(q.arrows()[a].target)
            } else {
                q.path(rest)?
            };
            out.add_term(path, c.clone());
        }
    }
    Ok(out)
}

/// `Φ = Σ_b [b · r(b)]` over the given pairing of arrows with relations.
pub fn potential_from_relations(
    q: &QuiverPresentation,
    rel: &RelationSet,
    pairing: &[(usize, RelationKey)],
) -> Result<Potential> {
    let mut phi = Potential::new();
    for &(b, key) in pairing {
        if b >= q.arrow_count() {
            return Err(Error::UnknownArrow(b.to_string()));
        }
        let arrow = &q.arrows()[b];
        let incompatible = || Error::IncompatiblePairing {
            arrow: arrow.label.clone(),
            source_vertex: q.vertices()[key.source].clone(),
            target_vertex: q.vertices()[key.target].clone(),
        };
        if arrow.source != key.target || arrow.target != key.source {
            return Err(incompatible());
        }
        let r = rel.get(key).ok_or_else(incompatible)?;
        for (p, c) in r.terms() {
            let mut word = vec![b];
            word.extend_from_slice(&p.arrows);
            phi.add_cycle(q, &word, c.clone())?;
        }
    }
    Ok(phi)
}

/// Relations `∂Φ/∂b` for each closing arrow `b`; keyed by `(t(b), s(b))`.
pub fn relations_from_potential(
    q: &QuiverPresentation,
    phi: &Potential,
    closing_arrows: &[usize],
) -> Result<RelationSet> {
    let mut out = RelationSet::new();
    for &b in closing_arrows {
        let d = cyclic_derivative(q, phi, b)?;
        if d.is_zero() {
            return Err(Error::DegeneratePotential(q.arrows()[b].label.clone()));
        }
        let a = &q.arrows()[b];
        out.push(a.target, a.source, d)?;
    }
    Ok(out)
}

// ---- the cubic-surface quivers ----

pub const VERTICES: usize = 9;
pub const Q_ARROWS: usize = 18;
pub const QTILDE_ARROWS: usize = 27;
pub const CYCLES: usize = 27;

fn m3(x: i64) -> usize {
    x.rem_euclid(3) as usize
}

/// Index of vertex `(i, j)`.
pub fn vertex_index(i: usize, j: usize) -> usize {
    i % 3 + 3 * j
}

/// Index of arrow `x_{i,j,k}`; `j = 2` gives the closing arrows of the rolled-up quiver.
pub fn arrow_index(i: usize, j: usize, k: usize) -> usize {
    9 * j + 3 * (i % 3) + k % 3
}

/// `(i, j, k)` of the arrow with the given index.
pub fn arrow_coords(index: usize) -> (usize, usize, usize) {
    ((index % 9) / 3, index / 9, index % 3)
}

/// Index of the cyclic path `x_{i+j+k,2,-j-k} x_{i+j,1,k} x_{i,0,j}`.
pub fn cycle_index(i: usize, j: usize, k: usize) -> usize {
    9 * i + 3 * j + k
}

/// Target-first arrows of cyclic path `(i, j, k)`: closing arrow, then the
/// arrow out of row 1, then the arrow out of row 0.
pub fn cycle_arrows(i: usize, j: usize, k: usize) -> [usize; 3] {
    let (i, j, k) = (i as i64, j as i64, k as i64);
    [
        arrow_index(m3(i + j + k), 2, m3(-j - k)),
        arrow_index(m3(i + j), 1, m3(k)),
        arrow_index(m3(i), 0, m3(j)),
    ]
}

/// The length-2 path from `(source, 0)` to `(target, 2)` through `(middle, 1)`.
pub fn middle_path(source: usize, middle: usize, target: usize) -> [usize; 2] {
    let (s, m, t) = (source as i64, middle as i64, target as i64);
    [
        arrow_index(m3(m), 1, m3(t - m)),
        arrow_index(m3(s), 0, m3(m - s)),
    ]
}

/// Cyclic path index for the relation `(source, 0) -> (target, 2)` through `(middle, 1)`.
pub fn cycle_for(source: usize, middle: usize, target: usize) -> usize {
    let (s, m, t) = (source as i64, middle as i64, target as i64);
    cycle_index(m3(s), m3(m - s), m3(t - m))
}

fn cubic_vertices() -> Vec<String> {
    (0..3)
        .flat_map(|j| (0..3).map(move |i| format!("{i},{j}")))
        .collect()
}

fn cubic_arrows(levels: usize) -> Vec<Arrow> {
    let mut arrows = Vec::new();
    for j in 0..levels {
        for i in 0..3 {
            for k in 0..3 {
                arrows.push(Arrow {
                    label: format!("x_{i}_{j}_{k}"),
                    source: vertex_index(i, j),
                    target: vertex_index(i + k, (j + 1) % 3),
                });
            }
        }
    }
    arrows
}

/// The 9-vertex, 18-arrow quiver of the three-block collection.
pub fn canonical_q() -> QuiverPresentation {
    QuiverPresentation::new(cubic_vertices(), cubic_arrows(2)).expect("valid built-in quiver")
}

/// The rolled-up quiver: `Q` plus the closing arrows `x_{i,2,k}: (i,2) -> (i+k,0)`.
pub fn canonical_qtilde() -> QuiverPresentation {
    QuiverPresentation::new(cubic_vertices(), cubic_arrows(3)).expect("valid built-in quiver")
}

/// Indices of the closing arrows of the rolled-up quiver.
pub fn closing_arrows() -> Vec<usize> {
    (Q_ARROWS..QTILDE_ARROWS).collect()
}

/// Pairs each closing arrow `x_{j,2,k}` with the relation from `(j+k,0)` to `(j,2)`.
pub fn cubic_pairing() -> Vec<(usize, RelationKey)> {
    let mut out = Vec::new();
    for j in 0..3 {
        for k in 0..3 {
            out.push((
                arrow_index(j, 2, k),
                RelationKey {
                    source: vertex_index(j + k, 0),
                    target: vertex_index(j, 2),
                    index: 0,
                },
            ));
        }
    }
    out
}

/// Relation set with one relation per pair `(i,0) -> (j,2)`; `coeffs[i][j][m]`
/// multiplies the path through `(m,1)`. Zero coefficients drop their term.
pub fn cubic_relations(q: &QuiverPresentation, coeffs: &[[[Rat; 3]; 3]; 3]) -> Result<RelationSet> {
    let mut rel = RelationSet::new();
    for (i, row) in coeffs.iter().enumerate() {
        for (j, triple) in row.iter().enumerate() {
            let mut r = PathCombination::new();
            for (m, c) in triple.iter().enumerate() {
                r.add_term(q.path(middle_path(i, m, j).to_vec())?, c.clone());
            }
            rel.push(vertex_index(i, 0), vertex_index(j, 2), r)?;
        }
    }
    Ok(rel)
}

/// Monomial relations `I_0`: for each pair one length-2 path with coefficient 1.
pub fn toric_relations(q: &QuiverPresentation) -> RelationSet {
    let mut coeffs: [[[Rat; 3]; 3]; 3] = Default::default();
    for (src, mid, tgt) in TORIC_MIDDLES {
        coeffs[src][tgt][mid] = Rat::one();
    }
    cubic_relations(q, &coeffs).expect("built-in relations")
}

/// `(source row, middle row, target row)` of the nine monomials generating `I_0`.
pub const TORIC_MIDDLES: [(usize, usize, usize); 9] = [
    (0, 0, 0),
    (0, 1, 1),
    (0, 2, 2),
    (1, 1, 0),
    (1, 2, 1),
    (1, 0, 2),
    (2, 2, 0),
    (2, 0, 1),
    (2, 1, 2),
];

/// Cyclic path rows against rolled-up arrow columns: entry 1 iff the arrow
/// lies on the cycle. This is the weight matrix of the torus action on
/// potentials.
pub fn rho_weight_matrix() -> IntMatrix {
    let mut m = IntMatrix::zeros(CYCLES, QTILDE_ARROWS);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for a in cycle_arrows(i, j, k) {
                    m[(cycle_index(i, j, k), a)] += BigInt::one();
                }
            }
        }
    }
    m
}

// ---- JSON ----

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    label: String,
    src: String,
    tgt: String,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<String>,
    arrows: Vec<ArrowJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    path: Vec<String>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    source: String,
    target: String,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct PotentialJson {
    terms: Vec<TermJson>,
}

impl QuiverPresentation {
    pub fn to_json(&self) -> serde_json::Value {
        let j = QuiverJson {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    label: a.label.clone(),
                    src: self.vertices[a.source].clone(),
                    tgt: self.vertices[a.target].clone(),
                })
                .collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: QuiverJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let lookup: HashMap<&str, usize> = j
            .vertices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let find = |s: &str| {
            lookup
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(s.to_string()))
        };
        let arrows = j
            .arrows
            .iter()
            .map(|a| {
                Ok(Arrow {
                    label: a.label.clone(),
                    source: find(&a.src)?,
                    target: find(&a.tgt)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(j.vertices, arrows)
    }

    fn parse_word(&self, labels: &[String]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.arrow(l)).collect()
    }
}

impl RelationSet {
    pub fn to_json(&self, q: &QuiverPresentation) -> serde_json::Value {
        let rels: Vec<RelationJson> = self
            .iter()
            .map(|(k, r)| RelationJson {
                source: q.vertices()[k.source].clone(),
                target: q.vertices()[k.target].clone(),
                terms: r
                    .terms()
                    .map(|(p, c)| TermJson {
                        path: q.path_labels(p),
                        coeff: format_rat(c),
                    })
                    .collect(),
            })
            .collect();
        serde_json::json!({ "relations": rels })
    }

    pub fn from_json(q: &QuiverPresentation, v: &serde_json::Value) -> Result<Self> {
        let rels: Vec<RelationJson> = serde_json::from_value(
            v.get("relations")
                .cloned()
                .ok_or_else(|| Error::Parse("missing \"relations\"".into()))?,
        )
        .map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = RelationSet::new();
        for r in rels {
            let mut comb = PathCombination::new();
            for t in &r.terms {
                comb.add_term(q.path(q.parse_word(&t.path)?)?, parse_rat(&t.coeff)?);
            }
            out.push(q.vertex(&r.source)?, q.vertex(&r.target)?, comb)?;
        }
        Ok(out)
    }
}

impl Potential {
    pub fn to_json(&self, q: &QuiverPresentation) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(w, c)| TermJson {
                path: w.iter().map(|&a| q.arrows()[a].label.clone()).collect(),
                coeff: format_rat(c),
            })
            .collect();
        serde_json::to_value(PotentialJson { terms }).expect("serializable")
    }

    pub fn from_json(q: &QuiverPresentation, v: &serde_json::Value) -> Result<Self> {
        let j: PotentialJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut phi = Potential::new();
        for t in &j.terms {
            phi.add_cycle(q, &q.parse_word(&t.path)?, parse_rat(&t.coeff)?)?;
        }
        Ok(phi)
    }
}
