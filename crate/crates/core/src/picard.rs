//! Numerical K-theory of a cubic surface.
//!
//! `Pic` has basis `e_0` (pullback of a line) and `e_1..e_6` (exceptional
//! curves) with `e_0² = 1`, `e_i² = -1`. The anticanonical class is
//! `δ = 3e_0 - e_1 - ... - e_6`. A class is recorded as `(rank, c1, χ)` where
//! `χ` is the holomorphic Euler characteristic; this keeps everything integral.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const PIC_RANK: usize = 7;

pub type Divisor = [i64; PIC_RANK];

pub const DELTA: Divisor = [3, -1, -1, -1, -1, -1, -1];

/// Intersection form.
pub fn dot(a: &Divisor, b: &Divisor) -> i64 {
    a[0] * b[0] - (1..PIC_RANK).map(|i| a[i] * b[i]).sum::<i64>()
}

pub fn e(i: usize) -> Divisor {
    let mut d = [0; PIC_RANK];
    d[i] = 1;
    d
}

fn add(a: &Divisor, b: &Divisor) -> Divisor {
    std::array::from_fn(|i| a[i] + b[i])
}

fn scale(k: i64, a: &Divisor) -> Divisor {
    a.map(|x| k * x)
}

/// Numerical class `(rank, c1, χ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KClass {
    pub rank: i64,
    pub c1: Divisor,
    pub chi: i64,
}

impl KClass {
    /// `O(D)`, with `χ = 1 + D·(D + δ)/2`.
    pub fn line_bundle(d: Divisor) -> Self {
        let twice = dot(&d, &d) + dot(&d, &DELTA);
        KClass {
            rank: 1,
            c1: d,
            chi: 1 + twice / 2,
        }
    }

    /// `O_{l_i}(-1)`, the degree -1 line bundle on the exceptional curve `l_i`.
    pub fn exceptional_curve(i: usize) -> Self {
        KClass {
            rank: 0,
            c1: e(i),
            chi: 0,
        }
    }

    pub fn neg(&self) -> Self {
        KClass {
            rank: -self.rank,
            c1: scale(-1, &self.c1),
            chi: -self.chi,
        }
    }

    pub fn plus(&self, other: &KClass) -> Self {
        KClass {
            rank: self.rank + other.rank,
            c1: add(&self.c1, &other.c1),
            chi: self.chi + other.chi,
        }
    }

    pub fn times(&self, k: i64) -> Self {
        KClass {
            rank: k * self.rank,
            c1: scale(k, &self.c1),
            chi: k * self.chi,
        }
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c1: Vec<String> = self.c1.iter().map(ToString::to_string).collect();
        write!(f, "({}; {}; {})", self.rank, c1.join(","), self.chi)
    }
}

/// `χ(E, F) = Σ (-1)^i dim Ext^i(E, F)`.
pub fn euler_pairing(e: &KClass, f: &KClass) -> i64 {
    e.rank * f.chi + f.rank * e.chi - e.rank * f.rank - dot(&e.c1, &f.c1) - f.rank * dot(&e.c1, &DELTA)
}

/// `E ⊗ ω`.
pub fn tensor_canonical(e: &KClass) -> KClass {
    KClass {
        rank: e.rank,
        c1: add(&e.c1, &scale(-e.rank, &DELTA)),
        chi: e.chi - dot(&e.c1, &DELTA),
    }
}

/// `[L_E F] = [F] - χ(E,F)[E]`.
pub fn left_mutate_class(e: &KClass, f: &KClass) -> KClass {
    f.plus(&e.times(-euler_pairing(e, f)))
}

/// `[R_F E] = χ(E,F)[F] - [E]`.
pub fn right_mutate_class(e: &KClass, f: &KClass) -> KClass {
    f.times(euler_pairing(e, f)).plus(&e.neg())
}

/// The nine line bundles `E_{i,j}`, indexed by `i + 3j`.
pub fn collection_classes() -> Vec<KClass> {
    let sum_all: Divisor = [-2, 1, 1, 1, 1, 1, 1];
    let sum_three: Divisor = [-1, 1, 1, 1, 0, 0, 0];
    let minus = |a: usize, b: usize| add(&e(a), &scale(-1, &e(b)));
    [
        [0; PIC_RANK],
        sum_all,
        sum_three,
        e(1),
        e(2),
        e(3),
        minus(0, 4),
        minus(0, 5),
        minus(0, 6),
    ]
    .into_iter()
    .map(KClass::line_bundle)
    .collect()
}

fn block(v: usize) -> usize {
    v / 3
}

/// Euler form value predicted by the quiver: 1 on the diagonal, 1 from one
/// block to the next, 2 from block 0 to block 2, 0 otherwise.
pub fn expected_gram_entry(v: usize, w: usize) -> i64 {
    if v == w {
        return 1;
    }
    match block(w) as i64 - block(v) as i64 {
        1 => 1,
        2 => 2,
        _ => 0,
    }
}

pub fn gram_matrix(classes: &[KClass]) -> Vec<Vec<i64>> {
    classes
        .iter()
        .map(|a| classes.iter().map(|b| euler_pairing(a, b)).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GramReport {
    pub matrix: Vec<Vec<i64>>,
    pub expected: Vec<Vec<i64>>,
    pub matches: bool,
}

/// Gram matrix of the collection in the order given by `order` (vertex indices).
pub fn gram_report_in_order(order: &[usize]) -> GramReport {
    let all = collection_classes();
    let classes: Vec<KClass> = order.iter().map(|&v| all[v]).collect();
    let matrix = gram_matrix(&classes);
    let expected: Vec<Vec<i64>> = order
        .iter()
        .map(|&v| order.iter().map(|&w| expected_gram_entry(v, w)).collect())
        .collect();
    GramReport {
        matches: matrix == expected,
        matrix,
        expected,
    }
}

pub fn gram_report() -> GramReport {
    gram_report_in_order(&(0..9).collect::<Vec<_>>())
}

pub fn verify_gram_matrix() -> bool {
    gram_report().matches
}

/// Simple roots `e_1-e_2, ..., e_5-e_6, e_0-e_1-e_2-e_3`.
pub fn e6_basis() -> [Divisor; 6] {
    let mut b = [[0; PIC_RANK]; 6];
    for (i, r) in b.iter_mut().enumerate().take(5) {
        r[i + 1] = 1;
        r[i + 2] = -1;
    }
    b[5] = [1, -1, -1, -1, 0, 0, 0];
    b
}

/// Cartan matrix of E6: chain 1-2-3-4-5 with node 6 attached to node 3.
pub fn e6_cartan() -> [[i64; 6]; 6] {
    let mut c = [[0; 6]; 6];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)] {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    c
}

/// All `r` with `r·δ = 0`, `r² = -2` and coefficients bounded by `bound`.
pub fn roots_in_box(bound: i64) -> Vec<Divisor> {
    let side = (2 * bound + 1) as usize;
    let total = side.pow(PIC_RANK as u32);
    (0..total)
        .filter_map(|mut n| {
            let mut r = [0i64; PIC_RANK];
            for x in r.iter_mut() {
                *x = (n % side) as i64 - bound;
                n /= side;
            }
            (dot(&r, &DELTA) == 0 && dot(&r, &r) == -2).then_some(r)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RootReport {
    pub root_count: usize,
    pub root_count_enlarged_box: usize,
    pub all_orthogonal_to_delta: bool,
    pub basis_gram: Vec<Vec<i64>>,
    pub gram_is_negative_cartan: bool,
    pub delta_squared: i64,
}

pub fn root_system_check() -> RootReport {
    let roots = roots_in_box(3);
    let enlarged = roots_in_box(4);
    let basis = e6_basis();
    let gram: Vec<Vec<i64>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| dot(a, b)).collect())
        .collect();
    let cartan = e6_cartan();
    let negative = (0..6).all(|i| (0..6).all(|j| gram[i][j] == -cartan[i][j]));
    RootReport {
        root_count: roots.len(),
        root_count_enlarged_box: enlarged.len(),
        all_orthogonal_to_delta: roots.iter().all(|r| dot(r, &DELTA) == 0),
        basis_gram: gram,
        gram_is_negative_cartan: negative,
        delta_squared: dot(&DELTA, &DELTA),
    }
}

/// A mutation at positions `i, i+1` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// `(.., E_i, E_{i+1}, ..) -> (.., L_{E_i} E_{i+1}, E_i, ..)`
    Left(usize),
    /// `(.., E_i, E_{i+1}, ..) -> (.., E_{i+1}, R_{E_{i+1}} E_i, ..)`
    Right(usize),
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mutation::Left(i) => write!(f, "L{i}"),
            Mutation::Right(i) => write!(f, "R{i}"),
        }
    }
}

pub fn apply_mutation(collection: &mut [KClass], m: Mutation) -> Result<()> {
    let i = match m {
        Mutation::Left(i) | Mutation::Right(i) => i,
    };
    if i == 0 || i >= collection.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            range: "mutation position",
        });
    }
    let (a, b) = (collection[i - 1], collection[i]);
    let (x, y) = match m {
        Mutation::Left(_) => (left_mutate_class(&a, &b), a),
        Mutation::Right(_) => (b, right_mutate_class(&a, &b)),
    };
    collection[i - 1] = x;
    collection[i] = y;
    Ok(())
}

/// One step of a chain: a composite `M_1 ∘ ... ∘ M_k` (applied right to left)
/// and the collection it should produce.
#[derive(Clone, Debug)]
pub struct ChainStage {
    pub name: String,
    pub composite: Vec<Mutation>,
    pub expected: Vec<KClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StageTranscript {
    pub stage: String,
    pub composite: String,
    pub classes: Vec<String>,
    /// 1-based positions where the computed class is minus the listed one,
    /// i.e. the object is the listed one up to an odd shift.
    pub odd_shift_positions: Vec<usize>,
}

fn lb(d: Divisor) -> KClass {
    KClass::line_bundle(d)
}

/// The starting collection `(O_{l_1}(-1), ..., O_{l_6}(-1), O(-2l), O(-l), O)`.
pub fn orlov_collection() -> Vec<KClass> {
    let mut c: Vec<KClass> = (1..=6).map(KClass::exceptional_curve).collect();
    c.push(lb([-2, 0, 0, 0, 0, 0, 0]));
    c.push(lb([-1, 0, 0, 0, 0, 0, 0]));
    c.push(lb([0; PIC_RANK]));
    c
}

/// The six stages leading from the Orlov-type collection to the three-block one.
pub fn standard_chain() -> Vec<ChainStage> {
    use Mutation::{Left as L, Right as R};
    let o = |d: Divisor| lb(d);
    let curve = KClass::exceptional_curve;
    let minus_2l_all = o([-2, 1, 1, 1, 1, 1, 1]);
    let minus_l_123 = o([-1, 1, 1, 1, 0, 0, 0]);
    let l_minus = |i: usize| o(add(&e(0), &scale(-1, &e(i))));
    let minus_l_plus = |i: usize| o(add(&scale(-1, &e(0)), &e(i)));
    let zero = o([0; PIC_RANK]);
    let minus_l = o([-1, 0, 0, 0, 0, 0, 0]);

    let tau2 = vec![
        minus_2l_all,
        curve(1),
        curve(2),
        curve(3),
        curve(4),
        curve(5),
        curve(6),
        minus_l,
        zero,
    ];
    let tau3 = vec![
        minus_2l_all,
        curve(1),
        curve(2),
        curve(3),
        minus_l,
        minus_l_plus(4),
        minus_l_plus(5),
        minus_l_plus(6),
        zero,
    ];
    let tau4 = vec![
        minus_2l_all,
        curve(1),
        curve(2),
        curve(3),
        minus_l,
        zero,
        l_minus(4),
        l_minus(5),
        l_minus(6),
    ];
    let tau5 = vec![
        minus_2l_all,
        minus_l_123,
        curve(1),
        curve(2),
        curve(3),
        zero,
        l_minus(4),
        l_minus(5),
        l_minus(6),
    ];
    let tau6 = vec![
        minus_2l_all,
        minus_l_123,
        zero,
        o(e(1)),
        o(e(2)),
        o(e(3)),
        l_minus(4),
        l_minus(5),
        l_minus(6),
    ];
    let tau7 = vec![
        zero,
        minus_2l_all,
        minus_l_123,
        o(e(1)),
        o(e(2)),
        o(e(3)),
        l_minus(4),
        l_minus(5),
        l_minus(6),
    ];
    let stage = |name: &str, composite: Vec<Mutation>, expected: Vec<KClass>| ChainStage {
        name: name.to_string(),
        composite,
        expected,
    };
    vec![
        stage("tau2", vec![L(1), L(2), L(3), L(4), L(5), L(6)], tau2),
        stage("tau3", vec![R(5), R(6), R(7)], tau3),
        stage("tau4", vec![R(6), R(7), R(8)], tau4),
        stage("tau5", vec![L(2), L(3), L(4)], tau5),
        stage("tau6", vec![R(3), R(4), R(5)], tau6),
        stage("tau7", vec![L(1), L(2)], tau7),
    ]
}

/// Runs the stages from `start`, comparing with each listed collection up to
/// sign. Fails at the first position that differs by more than a sign.
pub fn verify_chain(start: &[KClass], stages: &[ChainStage]) -> Result<Vec<StageTranscript>> {
    let mut current = start.to_vec();
    let mut out = Vec::new();
    for st in stages {
        for &m in st.composite.iter().rev() {
            apply_mutation(&mut current, m)?;
        }
        if st.expected.len() != current.len() {
            return Err(Error::ChainMismatch {
                stage: st.name.clone(),
                position: current.len().min(st.expected.len()) + 1,
                detail: format!("{} classes listed, {} computed", st.expected.len(), current.len()),
            });
        }
        let mut odd = Vec::new();
        for (k, (got, want)) in current.iter().zip(&st.expected).enumerate() {
            if got == want {
                continue;
            }
            if got.neg() == *want {
                odd.push(k + 1);
                continue;
            }
            return Err(Error::ChainMismatch {
                stage: st.name.clone(),
                position: k + 1,
                detail: format!("computed {got}, listed {want}"),
            });
        }
        out.push(StageTranscript {
            stage: st.name.clone(),
            composite: st.composite.iter().map(ToString::to_string).collect::<Vec<_>>().join("∘"),
            classes: current.iter().map(ToString::to_string).collect(),
            odd_shift_positions: odd,
        });
    }
    Ok(out)
}

pub fn verify_mutation_chain() -> Result<Vec<StageTranscript>> {
    verify_chain(&orlov_collection(), &standard_chain())
}
