//! Torus actions on affine space and their GIT data.
//!
//! A [`WeightAction`] has one weight per coordinate. The semistable locus for
//! a character `χ` is decided by the Hilbert–Mumford cone test on the support
//! of a point; for quiver representations the same verdict is reached by
//! King's submodule criterion.
//!
//! Submodule supports are the vertex sets `S` closed under the supported
//! arrows in the forward direction: `s(a) ∈ S ⇒ t(a) ∈ S`. With the weight
//! `e_t - e_s` on an arrow this is the convention under which the two
//! criteria coincide.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{
    self, integer_kernel_basis, rank_int, smith_normal_form, solve_unique, IntMatrix, IntVector,
    Matrix, RatVector,
};
use crate::monomial::SquarefreeIdeal;
use crate::quiver::{self, QuiverPresentation};
use crate::rational::{rat_from_json, Rat};

/// Largest vertex count for which submodule enumeration is attempted.
const MAX_SUBSET_VERTICES: usize = 24;
/// Largest coordinate count for the exhaustive irrelevant-ideal search.
const MAX_EXHAUSTIVE_COORDS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAction {
    weights: IntMatrix,
    ambient_rank: usize,
    rows: Vec<RatVector>,
}

impl WeightAction {
    pub fn new(weights: IntMatrix) -> Self {
        let ambient_rank = rank_int(&weights);
        let rows = weights.to_rat().row_vecs();
        WeightAction {
            weights,
            ambient_rank,
            rows,
        }
    }

    /// Arrow weights `e_{t(a)} - e_{s(a)}` of the gauge action on representations.
    pub fn for_quiver(q: &QuiverPresentation) -> Self {
        Self::new(q.incidence_weight_rows())
    }

    /// The torus of arrow rescalings acting on the coefficients of cyclic paths.
    pub fn potentials() -> Self {
        Self::new(quiver::rho_weight_matrix())
    }

    pub fn weights(&self) -> &IntMatrix {
        &self.weights
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn coordinate_count(&self) -> usize {
        self.weights.rows()
    }

    pub fn character_dim(&self) -> usize {
        self.weights.cols()
    }

    fn rows_at(&self, idx: &[usize]) -> Vec<RatVector> {
        idx.iter().map(|&i| self.rows[i].clone()).collect()
    }

    /// The same action with coordinates listed in a different order:
    /// new coordinate `k` is old coordinate `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::new(self.weights.select_rows(perm))
    }

    /// Parses `{"weights": [[..],..], "theta": [..]}`.
    pub fn from_json(v: &serde_json::Value) -> Result<(Self, StabilityCharacter)> {
        let rows = v
            .get("weights")
            .and_then(|w| w.as_array())
            .ok_or_else(|| Error::Parse("missing \"weights\" array".into()))?;
        let theta = v
            .get("theta")
            .and_then(|w| w.as_array())
            .ok_or_else(|| Error::Parse("missing \"theta\" array".into()))?;
        let int = |x: &serde_json::Value| -> Result<BigInt> {
            let r = rat_from_json(x)?;
            if !r.is_integer() {
                return Err(Error::Parse(format!("weight {x} is not an integer")));
            }
            Ok(r.to_integer())
        };
        let theta: Vec<BigInt> = theta.iter().map(int).collect::<Result<_>>()?;
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Parse("weight row is not an array".into()))?
                    .iter()
                    .map(int)
                    .collect()
            })
            .collect::<Result<_>>()?;
        let weights = Matrix::from_rows(rows, theta.len())?;
        Ok((Self::new(weights), StabilityCharacter::from_big(theta)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCharacter {
    pub theta: IntVector,
}

impl StabilityCharacter {
    pub fn new(theta: &[i64]) -> Self {
        StabilityCharacter {
            theta: theta.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn from_big(theta: IntVector) -> Self {
        StabilityCharacter { theta }
    }

    /// `(-11,-11,-11,3,3,6,7,7,7)` on the vertices of the cubic-surface quiver.
    pub fn special() -> Self {
        Self::new(&[-11, -11, -11, 3, 3, 6, 7, 7, 7])
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn sums_to_zero(&self) -> bool {
        self.theta.iter().sum::<BigInt>().is_zero()
    }

    pub fn to_rat(&self) -> RatVector {
        self.theta.iter().map(|x| Rat::from_integer(x.clone())).collect()
    }

    fn subset_sum(&self, mask: u64) -> BigInt {
        self.theta
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, x)| x)
            .sum()
    }
}

/// A point of affine space, recorded by which coordinates are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinatePoint {
    len: usize,
    support: Vec<usize>,
    values: Option<Vec<Rat>>,
}

impl CoordinatePoint {
    pub fn from_support(len: usize, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let support: Vec<usize> = support
            .into_iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        if let Some(&i) = support.last() {
            if i >= len {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    range: "coordinate",
                });
            }
        }
        Ok(CoordinatePoint {
            len,
            support,
            values: None,
        })
    }

    pub fn from_values(values: Vec<Rat>) -> Self {
        let support = (0..values.len()).filter(|&i| !values[i].is_zero()).collect();
        CoordinatePoint {
            len: values.len(),
            support,
            values: Some(values),
        }
    }

    pub fn full(len: usize) -> Self {
        CoordinatePoint {
            len,
            support: (0..len).collect(),
            values: None,
        }
    }

    /// Each coordinate is zero with probability 1/3, otherwise a random
    /// nonzero rational with numerator and denominator below 50.
    pub fn random<R: Rng>(rng: &mut R, len: usize) -> Self {
        let values = (0..len)
            .map(|_| {
                if rng.gen_ratio(1, 3) {
                    Rat::zero()
                } else {
                    let mut n: i64 = rng.gen_range(1..50);
                    if rng.gen_bool(0.5) {
                        n = -n;
                    }
                    Rat::new(n.into(), rng.gen_range(1i64..50).into())
                }
            })
            .collect();
        Self::from_values(values)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn values(&self) -> Option<&[Rat]> {
        self.values.as_deref()
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `χ` lies in the cone spanned by the weights of the nonzero coordinates.
pub fn hm_semistable(w: &WeightAction, chi: &StabilityCharacter, p: &CoordinatePoint) -> Result<bool> {
    check_len(w.character_dim(), chi.len())?;
    check_len(w.coordinate_count(), p.len())?;
    Ok(exactlin::conic_feasible(&w.rows_at(p.support()), &chi.to_rat())?.is_some())
}

/// `χ` lies in the relative interior of that cone, and the cone spans the
/// whole weight space of the action.
pub fn hm_stable(w: &WeightAction, chi: &StabilityCharacter, p: &CoordinatePoint) -> Result<bool> {
    check_len(w.character_dim(), chi.len())?;
    check_len(w.coordinate_count(), p.len())?;
    exactlin::strictly_conic_feasible_in(&w.rows_at(p.support()), &chi.to_rat(), w.ambient_rank())
}

/// Bitmasks of vertex sets closed under the supported arrows
/// (`s(a) ∈ S ⇒ t(a) ∈ S`), including the empty and full sets.
pub fn closed_subsets(q: &QuiverPresentation, p: &CoordinatePoint) -> Result<Vec<u64>> {
    check_len(q.arrow_count(), p.len())?;
    let n = q.vertex_count();
    if n > MAX_SUBSET_VERTICES {
        return Err(Error::IndexOutOfRange {
            index: n,
            range: "vertex count for subset enumeration",
        });
    }
    let edges: Vec<(usize, usize)> = p
        .support()
        .iter()
        .map(|&a| (q.arrows()[a].source, q.arrows()[a].target))
        .collect();
    Ok((0u64..1 << n)
        .filter(|&m| edges.iter().all(|&(s, t)| m >> s & 1 == 0 || m >> t & 1 == 1))
        .collect())
}

fn king(q: &QuiverPresentation, theta: &StabilityCharacter, p: &CoordinatePoint, strict: bool) -> Result<bool> {
    check_len(q.vertex_count(), theta.len())?;
    let full = (1u64 << q.vertex_count()) - 1;
    Ok(closed_subsets(q, p)?
        .into_iter()
        .filter(|&m| m != 0 && m != full)
        .all(|m| {
            let s = theta.subset_sum(m);
            if strict {
                s.is_positive()
            } else {
                !s.is_negative()
            }
        }))
}

/// `θ(S) > 0` for every nonempty proper submodule support `S`.
pub fn king_stable(q: &QuiverPresentation, theta: &StabilityCharacter, p: &CoordinatePoint) -> Result<bool> {
    king(q, theta, p, true)
}

/// `θ(S) >= 0` for every submodule support `S`.
pub fn king_semistable(q: &QuiverPresentation, theta: &StabilityCharacter, p: &CoordinatePoint) -> Result<bool> {
    king(q, theta, p, false)
}

/// Every nonempty proper vertex subset has nonzero `θ`-sum.
pub fn theta_generic_quiver(q: &QuiverPresentation, theta: &StabilityCharacter) -> bool {
    let n = q.vertex_count();
    theta.len() == n && n <= MAX_SUBSET_VERTICES && theta_degeneracy_witness(q, theta).is_none()
}

/// `χ` lies in the span of no `ambient_rank - 1` weights.
pub fn caratheodory_genericity(w: &WeightAction, chi: &StabilityCharacter) -> bool {
    chi.len() == w.character_dim() && caratheodory_witness(w, chi).is_none()
}

/// Some `ambient_rank - 1` coordinates whose weights span `χ`, if any.
pub fn caratheodory_witness(w: &WeightAction, chi: &StabilityCharacter) -> Option<Vec<usize>> {
    let r = w.ambient_rank();
    if r == 0 {
        return chi.theta.iter().all(Zero::is_zero).then(Vec::new);
    }
    let subsets: Vec<Vec<usize>> = (0..w.coordinate_count()).combinations(r - 1).collect();
    subsets
        .into_par_iter()
        .find_first(|idx| {
            let mut rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| w.weights.row(i).to_vec()).collect();
            let base = rank_int(&Matrix::from_rows(rows.clone(), chi.len()).expect("consistent widths"));
            rows.push(chi.theta.clone());
            let with = rank_int(&Matrix::from_rows(rows, chi.len()).expect("consistent widths"));
            with == base
        })
}

/// A nonempty proper vertex subset with zero `θ`-sum, if any.
pub fn theta_degeneracy_witness(q: &QuiverPresentation, theta: &StabilityCharacter) -> Option<Vec<usize>> {
    let n = q.vertex_count();
    let full = (1u64 << n) - 1;
    (1..full)
        .find(|&m| theta.subset_sum(m).is_zero())
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

/// Coefficients of `χ` in the basis given by the selected weights, when they
/// are linearly independent of full ambient rank.
fn simplicial_coefficients(w: &WeightAction, chi: &RatVector, idx: &[usize]) -> Option<RatVector> {
    let cols = Matrix::from_fn(chi.len(), idx.len(), |r, c| w.rows[idx[c]][r].clone());
    solve_unique(&cols, chi).ok().flatten()
}

/// Supports of the monomials generating the irrelevant ideal: the
/// `ambient_rank`-subsets of coordinates whose weights are independent and
/// whose cone contains `χ`.
pub fn irrelevant_ideal_generators(w: &WeightAction, chi: &StabilityCharacter) -> Result<SquarefreeIdeal> {
    check_len(w.character_dim(), chi.len())?;
    if let Some(witness) = caratheodory_witness(w, chi) {
        return Err(Error::NonGenericCharacter(witness));
    }
    let target = chi.to_rat();
    let subsets: Vec<Vec<usize>> = (0..w.coordinate_count())
        .combinations(w.ambient_rank())
        .collect();
    let gens: Vec<Vec<usize>> = subsets
        .into_par_iter()
        .filter(|idx| {
            simplicial_coefficients(w, &target, idx)
                .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
        })
        .collect();
    SquarefreeIdeal::new(w.coordinate_count(), gens)
}

/// Exhaustive variant for any character: minimal coordinate subsets whose
/// cone contains `χ`. Exponential in the number of coordinates.
pub fn irrelevant_ideal_exhaustive(w: &WeightAction, chi: &StabilityCharacter) -> Result<SquarefreeIdeal> {
    check_len(w.character_dim(), chi.len())?;
    let n = w.coordinate_count();
    if n > MAX_EXHAUSTIVE_COORDS {
        return Err(Error::IndexOutOfRange {
            index: n,
            range: "coordinate count for exhaustive search",
        });
    }
    let target = chi.to_rat();
    let mut found: Vec<Vec<usize>> = Vec::new();
    for size in 0..=n {
        let candidates: Vec<Vec<usize>> = (0..n)
            .combinations(size)
            .filter(|s| !found.iter().any(|f| f.iter().all(|x| s.contains(x))))
            .collect();
        let hits: Vec<Vec<usize>> = candidates
            .into_par_iter()
            .filter(|s| {
                exactlin::conic_feasible(&w.rows_at(s), &target)
                    .ok()
                    .flatten()
                    .is_some()
            })
            .collect();
        found.extend(hits);
    }
    SquarefreeIdeal::new(n, found)
}

/// `χ` is a strictly positive combination of all weights spanning the full
/// weight space, i.e. lies in the interior of the effective cone.
pub fn effective_cone_interior_test(w: &WeightAction, chi: &StabilityCharacter) -> Result<bool> {
    check_len(w.character_dim(), chi.len())?;
    exactlin::strictly_conic_feasible_in(&w.rows, &chi.to_rat(), w.ambient_rank())
}

/// Pairings of the all-ones arrow cocharacter, pushed through `rho`, with
/// each cyclic path: entry `c` is the number of arrows on `c`.
pub fn strong_convexity_pairings(rho: &IntMatrix) -> Vec<BigInt> {
    let ones = vec![BigInt::one(); rho.cols()];
    rho.mul_vec(&ones).expect("matching widths")
}

/// All 27 pairings for the rolled-up quiver equal 3.
pub fn strong_convexity_check() -> bool {
    strong_convexity_check_with(&quiver::rho_weight_matrix())
}

pub fn strong_convexity_check_with(rho: &IntMatrix) -> bool {
    let p = strong_convexity_pairings(rho);
    !p.is_empty() && p.iter().all(|x| *x == BigInt::from(3))
}

/// `-Σ_a (e_{t(a)} - e_{s(a)}) + Σ_{i,j} (e_{j,2} - e_{i,0})` on the nine
/// vertices `(i, j)`.
pub fn canonical_triviality_vector(q: &QuiverPresentation) -> Result<IntVector> {
    check_len(quiver::VERTICES, q.vertex_count())?;
    let mut v = vec![BigInt::zero(); quiver::VERTICES];
    for a in q.arrows() {
        v[a.target] -= 1;
        v[a.source] += 1;
    }
    for i in 0..3 {
        for j in 0..3 {
            v[quiver::vertex_index(j, 2)] += 1;
            v[quiver::vertex_index(i, 0)] -= 1;
        }
    }
    Ok(v)
}

pub fn canonical_triviality_check(q: &QuiverPresentation) -> bool {
    canonical_triviality_vector(q).is_ok_and(|v| v.iter().all(Zero::is_zero))
}

/// Ranks in the exact sequences attached to a quiver and, for the rolled-up
/// quiver, to its torus of potentials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LatticeReport {
    pub vertex_count: usize,
    pub arrow_count: usize,
    /// characters of the gauge group: `θ` with `Σ θ_v = 0`
    pub rank_l: usize,
    /// image of the gauge group in the arrow torus
    pub rank_sfk: usize,
    /// arrow torus modulo gauge
    pub rank_sft: usize,
    pub sft_torsion: Vec<String>,
    /// gauge-invariant arrow characters
    pub rank_sfm: usize,
    pub potentials: Option<PotentialLattices>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PotentialLattices {
    pub cycle_count: usize,
    /// torus acting on the coefficients of cyclic paths
    pub rank_k: usize,
    pub k_torsion: Vec<String>,
    /// dense torus of the quotient, its cocharacters and characters
    pub rank_t: usize,
    pub rank_n: usize,
    pub rank_m: usize,
    pub m_basis: Vec<Vec<String>>,
    /// the kernel of `ρ` on arrow vectors is exactly the gauge image
    pub sequence_exact: bool,
}

pub fn lattice_report(q: &QuiverPresentation) -> LatticeReport {
    let inc = q.incidence_weight_rows();
    let rank_sfk = rank_int(&inc);
    let smith = smith_normal_form(&inc);
    let sfm = integer_kernel_basis(&inc.transpose());
    let potentials = (q.arrow_count() == quiver::QTILDE_ARROWS && q.vertex_count() == quiver::VERTICES)
        .then(|| potential_lattices(&inc, &smith.torsion()));
    LatticeReport {
        vertex_count: q.vertex_count(),
        arrow_count: q.arrow_count(),
        rank_l: q.vertex_count().saturating_sub(1),
        rank_sfk,
        rank_sft: q.arrow_count() - rank_sfk,
        sft_torsion: smith.torsion().iter().map(ToString::to_string).collect(),
        rank_sfm: sfm.len(),
        potentials,
    }
}

fn potential_lattices(inc: &IntMatrix, inc_torsion: &[BigInt]) -> PotentialLattices {
    let rho = quiver::rho_weight_matrix();
    let rank_rho = rank_int(&rho);
    let m_basis = integer_kernel_basis(&rho.transpose());
    let rho_kernel = integer_kernel_basis(&rho);
    let gauge_killed = rho.mul(inc).map(|m| m.is_zero()).unwrap_or(false);
    let rank_t = rho.rows() - rank_rho;
    PotentialLattices {
        cycle_count: rho.rows(),
        rank_k: inc.rows() - rank_int(inc),
        k_torsion: inc_torsion.iter().map(ToString::to_string).collect(),
        rank_t,
        rank_n: rank_t,
        rank_m: m_basis.len(),
        m_basis: m_basis
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect(),
        sequence_exact: gauge_killed && rho_kernel.len() == rank_int(inc) && inc_torsion.is_empty(),
    }
}

/// Integer basis of the gauge-invariant characters of the potential torus,
/// vectors indexed by cyclic paths.
pub fn invariant_character_basis() -> Vec<IntVector> {
    integer_kernel_basis(&quiver::rho_weight_matrix().transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{canonical_q, canonical_qtilde, vertex_index};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w_q() -> WeightAction {
        WeightAction::for_quiver(&canonical_q())
    }

    #[test]
    fn actions_have_expected_shape() {
        let w = w_q();
        assert_eq!((w.coordinate_count(), w.character_dim(), w.ambient_rank()), (18, 9, 8));
        let p = WeightAction::potentials();
        assert_eq!((p.coordinate_count(), p.character_dim(), p.ambient_rank()), (27, 27, 19));
    }

    #[test]
    fn hm_examples() {
        let w = w_q();
        let th = StabilityCharacter::special();
        assert!(th.sums_to_zero());
        assert!(hm_semistable(&w, &th, &CoordinatePoint::full(18)).unwrap());
        assert!(hm_stable(&w, &th, &CoordinatePoint::full(18)).unwrap());
        let empty = CoordinatePoint::from_support(18, []).unwrap();
        assert!(!hm_semistable(&w, &th, &empty).unwrap());
        let one = CoordinatePoint::from_support(18, [4]).unwrap();
        assert!(!hm_semistable(&w, &th, &one).unwrap());
        // drop all arrows into (0,1): the remaining weights span rank 7
        let low: Vec<usize> = (0..18).filter(|&a| canonical_q().arrows()[a].target != 3).collect();
        let p = CoordinatePoint::from_support(18, low).unwrap();
        assert!(!hm_stable(&w, &th, &p).unwrap());
        assert!(matches!(
            hm_semistable(&w, &th, &CoordinatePoint::full(17)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn king_examples() {
        let q = canonical_q();
        let th = StabilityCharacter::special();
        assert!(king_stable(&q, &th, &CoordinatePoint::full(18)).unwrap());
        let zero = CoordinatePoint::from_support(18, []).unwrap();
        assert!(!king_stable(&q, &th, &zero).unwrap());
        assert!(!king_semistable(&q, &th, &zero).unwrap());
        // only the arrows out of row 0
        let p = CoordinatePoint::from_support(18, 0..9).unwrap();
        let brute = (1u64..511).all(|m| {
            let closed = (0..9).all(|a| {
                let arr = &q.arrows()[a];
                m >> arr.source & 1 == 0 || m >> arr.target & 1 == 1
            });
            !closed || th.subset_sum(m).is_positive()
        });
        assert_eq!(king_stable(&q, &th, &p).unwrap(), brute);
        assert!(!brute);
    }

    #[test]
    fn genericity_examples() {
        let q = canonical_q();
        assert!(theta_generic_quiver(&q, &StabilityCharacter::special()));
        assert!(!theta_generic_quiver(&q, &StabilityCharacter::new(&[0; 9])));
        assert!(!theta_generic_quiver(&q, &StabilityCharacter::new(&[-1, 1, 0, 0, 0, 0, 0, 0, 0])));

        let toy = WeightAction::new(IntMatrix::from_i64_rows(&[&[1, 0], &[0, 1]]));
        assert!(!caratheodory_genericity(&toy, &StabilityCharacter::new(&[1, 0])));
        assert!(caratheodory_genericity(&toy, &StabilityCharacter::new(&[1, 1])));
        assert!(!caratheodory_genericity(&w_q(), &StabilityCharacter::new(&[0; 9])));
    }

    #[test]
    fn irrelevant_toy() {
        let toy = WeightAction::new(IntMatrix::from_i64_rows(&[&[1, 0], &[0, 1]]));
        let i = irrelevant_ideal_generators(&toy, &StabilityCharacter::new(&[1, 1])).unwrap();
        assert_eq!(i.generators(), &[vec![0, 1]]);
        let out = irrelevant_ideal_generators(&toy, &StabilityCharacter::new(&[-1, -1])).unwrap();
        assert!(out.is_zero());
        assert!(matches!(
            irrelevant_ideal_generators(&toy, &StabilityCharacter::new(&[1, 0])),
            Err(Error::NonGenericCharacter(_))
        ));
        // the exhaustive search also handles the non-generic character
        let ex = irrelevant_ideal_exhaustive(&toy, &StabilityCharacter::new(&[1, 0])).unwrap();
        assert_eq!(ex.generators(), &[vec![0]]);
    }

    #[test]
    fn exhaustive_agrees_with_simplicial_on_a_small_quiver() {
        // A_3 with a doubled arrow: vertices 0 -> 1 -> 2, two arrows 0 -> 1
        let v: Vec<String> = (0..3).map(|i| i.to_string()).collect();
        let arrows = [(0, 1), (0, 1), (1, 2), (0, 2)]
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| quiver::Arrow { label: format!("a{k}"), source: s, target: t })
            .collect();
        let q = QuiverPresentation::new(v, arrows).unwrap();
        let w = WeightAction::for_quiver(&q);
        let th = StabilityCharacter::new(&[-3, 1, 2]);
        assert!(caratheodory_genericity(&w, &th));
        assert_eq!(
            irrelevant_ideal_generators(&w, &th).unwrap(),
            irrelevant_ideal_exhaustive(&w, &th).unwrap()
        );
    }

    #[test]
    fn canonical_irrelevant_ideal() {
        let w = w_q();
        let th = StabilityCharacter::special();
        let irr = irrelevant_ideal_generators(&w, &th).unwrap();
        assert!(!irr.is_zero());
        assert!(irr.generators().iter().all(|g| g.len() == 8));
        // independent recount with the general cone test
        let target = th.to_rat();
        let recount: Vec<Vec<usize>> = (0..18)
            .combinations(8)
            .collect::<Vec<_>>()
            .into_par_iter()
            .filter(|s| {
                let rows = w.rows_at(s);
                exactlin::rank(&Matrix::from_rows(rows.clone(), 9).unwrap()) == 8
                    && exactlin::conic_feasible(&rows, &target).unwrap().is_some()
            })
            .collect();
        assert_eq!(recount.len(), irr.generators().len());
        assert_eq!(SquarefreeIdeal::new(18, recount).unwrap(), irr);
    }

    #[test]
    fn irrelevant_ideal_is_permutation_invariant() {
        let w = w_q();
        let th = StabilityCharacter::special();
        let base = irrelevant_ideal_generators(&w, &th).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2 {
            let mut perm: Vec<usize> = (0..18).collect();
            use rand::seq::SliceRandom;
            perm.shuffle(&mut rng);
            let irr = irrelevant_ideal_generators(&w.permuted(&perm), &th).unwrap();
            let mapped = irr
                .generators()
                .iter()
                .map(|g| g.iter().map(|&k| perm[k]).collect::<Vec<_>>());
            assert_eq!(SquarefreeIdeal::new(18, mapped).unwrap(), base);
        }
    }

    #[test]
    fn effective_cone_examples() {
        let w = WeightAction::potentials();
        let all: Vec<BigInt> = (0..27)
            .map(|c| (0..27).map(|r| w.weights()[(r, c)].clone()).sum())
            .collect();
        assert!(effective_cone_interior_test(&w, &StabilityCharacter::from_big(all)).unwrap());
        assert!(!effective_cone_interior_test(&w, &StabilityCharacter::new(&[0; 27])).unwrap());
        let ray = StabilityCharacter::from_big(w.weights().row(0).to_vec());
        assert!(!effective_cone_interior_test(&w, &ray).unwrap());
    }

    #[test]
    fn strong_convexity() {
        assert!(strong_convexity_check());
        let pairings = strong_convexity_pairings(&quiver::rho_weight_matrix());
        assert_eq!(pairings.len(), 27);
        assert!(!strong_convexity_check_with(&IntMatrix::zeros(27, 27)));
    }

    #[test]
    fn canonical_triviality() {
        let q = canonical_q();
        assert!(canonical_triviality_check(&q));
        assert!(!canonical_triviality_check(&q.without_arrow(5).unwrap()));
        for j in 0..3 {
            for i in 0..3 {
                let v = vertex_index(i, j);
                let net = q.in_degree(v) as i64 - q.out_degree(v) as i64;
                assert_eq!(net, [-3, 0, 3][j]);
            }
        }
    }

    #[test]
    fn lattice_ranks() {
        let r = lattice_report(&canonical_q());
        assert_eq!((r.rank_l, r.rank_sfk, r.rank_sft, r.rank_sfm), (8, 8, 10, 10));
        assert_eq!(r.arrow_count - r.vertex_count + 1, r.rank_sft);
        assert!(r.potentials.is_none());

        let r = lattice_report(&canonical_qtilde());
        let p = r.potentials.unwrap();
        assert_eq!((p.rank_k, p.rank_t, p.rank_n, p.rank_m), (19, 8, 8, 8));
        assert_eq!(r.arrow_count, p.rank_k + p.rank_m);
        assert!(p.k_torsion.is_empty());
        assert!(p.sequence_exact);
        let rho = quiver::rho_weight_matrix();
        for m in invariant_character_basis() {
            assert!(rho.transpose().mul_vec(&m).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn stability_tests_agree_on_random_points() {
        let q = canonical_q();
        let w = w_q();
        let th = StabilityCharacter::special();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let p = CoordinatePoint::random(&mut rng, 18);
            let (hs, ks) = (hm_stable(&w, &th, &p).unwrap(), king_stable(&q, &th, &p).unwrap());
            let (hss, kss) = (hm_semistable(&w, &th, &p).unwrap(), king_semistable(&q, &th, &p).unwrap());
            assert_eq!(hs, ks, "{:?}", p.support());
            assert_eq!(hss, kss, "{:?}", p.support());
            assert!(!hs || hss);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn enlarging_support_keeps_semistability(
            base in prop::collection::btree_set(0usize..18, 0..18),
            extra in prop::collection::btree_set(0usize..18, 0..6),
        ) {
            let w = w_q();
            let th = StabilityCharacter::special();
            let p = CoordinatePoint::from_support(18, base.iter().copied()).unwrap();
            let bigger = CoordinatePoint::from_support(18, base.iter().chain(&extra).copied()).unwrap();
            if hm_semistable(&w, &th, &p).unwrap() {
                prop_assert!(hm_semistable(&w, &th, &bigger).unwrap());
            }
        }

        #[test]
        fn king_matches_cone_on_any_support(support in prop::collection::btree_set(0usize..18, 0..=18)) {
            let q = canonical_q();
            let w = w_q();
            let th = StabilityCharacter::special();
            let p = CoordinatePoint::from_support(18, support).unwrap();
            prop_assert_eq!(hm_stable(&w, &th, &p).unwrap(), king_stable(&q, &th, &p).unwrap());
            prop_assert_eq!(hm_semistable(&w, &th, &p).unwrap(), king_semistable(&q, &th, &p).unwrap());
        }
    }
}
