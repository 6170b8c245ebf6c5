//! Quiver relations of a marked cubic surface.
//!
//! The surface is the blow-up of six points `p_1..p_6` in the plane; after a
//! projective change of coordinates they are the columns of
//!
//! ```text
//!     1 1 1 1 0 0
//!     a c 1 0 1 0
//!     b d 1 0 0 1
//! ```
//!
//! The relation from vertex `(i,0)` to `(j,2)` is a linear dependence
//! `c_0 f_0 + c_1 f_1 + c_2 f_2 = 0` among three forms, one per middle vertex
//! `(m,1)`:
//!
//! | source | `f_m`                          | `c_m`                              |
//! |--------|--------------------------------|------------------------------------|
//! | 0      | `ℓ_{m+1,j+4}`                  | `|p_{m+2} p_{j+4} p_{m+3}|`        |
//! | 1      | `ℓ_{m+1,j+4} q_{m+1}`          | `p_{j+1,m+1}` (row `j+1` of `p`)   |
//! | 2      | `ℓ_{m+1,j+4} ℓ_{m+2,m+3}`      | `1`                                |
//!
//! with point indices reduced into `{1,2,3}`. Here `ℓ_{ik} = |p_i p_k (x,y,z)|`
//! is the line through two points and `q_i` the conic through the five points
//! other than `p_i`.

use num_traits::{One, Pow, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{determinant, rational_kernel_basis, IntVector, Matrix, RatMatrix};
use crate::multipoly::TriPoly;
use crate::quiver::{self, QuiverPresentation, RelationSet};
use crate::rational::{format_rat, rat_from_json, Rat};

/// Reduces an index into `{1, 2, 3}` modulo 3.
pub fn wrap123(k: i64) -> usize {
    ((k - 1).rem_euclid(3) + 1) as usize
}

/// Reduces an index into `{4, 5, 6}` modulo 3.
pub fn wrap456(k: i64) -> usize {
    wrap123(k) + 3
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl PointConfiguration {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<Self> {
        for (name, v) in [("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
            if v.is_zero() {
                return Err(Error::DegenerateConfiguration(format!("parameter {name} is zero")));
            }
        }
        Ok(PointConfiguration { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let r = |x: i64| Rat::from_integer(x.into());
        Self::new(r(a), r(b), r(c), r(d))
    }

    /// Random parameters with small numerators and denominators, redrawn
    /// until the six points are in general position.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        loop {
            let mut draw = || {
                let mut n: i64 = rng.gen_range(1..40);
                if rng.gen_bool(0.5) {
                    n = -n;
                }
                Rat::new(n.into(), rng.gen_range(1i64..12).into())
            };
            let cfg = PointConfiguration {
                a: draw(),
                b: draw(),
                c: draw(),
                d: draw(),
            };
            if general_position_check(&cfg) {
                return cfg;
            }
        }
    }

    /// Entry `p_{row,col}` with 1-based indices.
    pub fn entry(&self, row: usize, col: usize) -> Rat {
        self.point(col).expect("column index in 1..=6")[row - 1].clone()
    }

    /// Homogeneous coordinates of point `k` in `1..=6`.
    pub fn point(&self, k: usize) -> Result<[Rat; 3]> {
        let (o, z) = (Rat::one(), Rat::zero());
        Ok(match k {
            1 => [o, self.a.clone(), self.b.clone()],
            2 => [o, self.c.clone(), self.d.clone()],
            3 => [o.clone(), o.clone(), o],
            4 => [o, z.clone(), z],
            5 => [z.clone(), o, z],
            6 => [z.clone(), z, o],
            _ => {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    range: "point index 1..=6",
                })
            }
        })
    }

    fn points(&self) -> [[Rat; 3]; 6] {
        [1, 2, 3, 4, 5, 6].map(|k| self.point(k).expect("valid index"))
    }

    /// Parses `{"a": "p/q", "b": .., "c": .., "d": ..}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let get = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Parse(format!("missing parameter {k:?}")))
                .and_then(rat_from_json)
        };
        Self::new(get("a")?, get("b")?, get("c")?, get("d")?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": format_rat(&self.a),
            "b": format_rat(&self.b),
            "c": format_rat(&self.c),
            "d": format_rat(&self.d),
        })
    }
}

fn det3(u: &[Rat; 3], v: &[Rat; 3], w: &[Rat; 3]) -> Rat {
    &u[0] * (&v[1] * &w[2] - &v[2] * &w[1]) - &v[0] * (&u[1] * &w[2] - &u[2] * &w[1])
        + &w[0] * (&u[1] * &v[2] - &u[2] * &v[1])
}

/// `|p_i p_j p_k|` with 1-based indices.
pub fn bracket(cfg: &PointConfiguration, i: usize, j: usize, k: usize) -> Result<Rat> {
    Ok(det3(&cfg.point(i)?, &cfg.point(j)?, &cfg.point(k)?))
}

/// Which general-position conditions fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralPositionReport {
    /// Triples `i < j < k` (1-based) of collinear points.
    pub collinear: Vec<[usize; 3]>,
    /// Determinant of the six points evaluated on `x², y², z², xy, yz, zx`.
    pub conic_determinant: Rat,
}

impl GeneralPositionReport {
    pub fn is_general(&self) -> bool {
        self.collinear.is_empty() && !self.conic_determinant.is_zero()
    }
}

pub fn general_position_report(cfg: &PointConfiguration) -> GeneralPositionReport {
    let pts = cfg.points();
    let mut collinear = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                if det3(&pts[i], &pts[j], &pts[k]).is_zero() {
                    collinear.push([i + 1, j + 1, k + 1]);
                }
            }
        }
    }
    let conic: RatMatrix = Matrix::from_fn(6, 6, |r, c| {
        let [x, y, z] = &pts[r];
        match c {
            0 => x * x,
            1 => y * y,
            2 => z * z,
            3 => x * y,
            4 => y * z,
            _ => z * x,
        }
    });
    GeneralPositionReport {
        collinear,
        conic_determinant: determinant(&conic),
    }
}

/// No three points collinear and the six not on a conic.
pub fn general_position_check(cfg: &PointConfiguration) -> bool {
    general_position_report(cfg).is_general()
}

/// `ℓ_{ij} = |p_i p_j (x,y,z)|`.
pub fn line_form(cfg: &PointConfiguration, i: usize, j: usize) -> Result<TriPoly> {
    if i == j {
        return Err(Error::IndexOutOfRange {
            index: j,
            range: "second point index distinct from the first",
        });
    }
    let (u, v) = (cfg.point(i)?, cfg.point(j)?);
    Ok(TriPoly::linear([
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]))
}

/// The conic through the five points other than `p_i`, for `i` in `1..=3`.
pub fn conic_form(cfg: &PointConfiguration, i: usize) -> Result<TriPoly> {
    if !(1..=3).contains(&i) {
        return Err(Error::IndexOutOfRange {
            index: i,
            range: "conic index 1..=3",
        });
    }
    let (i1, i2) = (wrap123(i as i64 + 1), wrap123(i as i64 + 2));
    let p = |r: usize, c: usize| cfg.entry(r, c);
    let minor = |r1: usize, r2: usize| p(r1, i1) * p(r2, i2) - p(r1, i2) * p(r2, i1);
    let mut q = TriPoly::zero();
    q.add_term([1, 1, 0], p(3, i1) * p(3, i2) * minor(2, 1));
    q.add_term([0, 1, 1], p(1, i1) * p(1, i2) * minor(3, 2));
    q.add_term([1, 0, 1], p(2, i1) * p(2, i2) * minor(1, 3));
    Ok(q)
}

fn check_pair(source: usize, target: usize) -> Result<()> {
    for (v, name) in [(source, "source row 0..=2"), (target, "target row 0..=2")] {
        if v > 2 {
            return Err(Error::IndexOutOfRange { index: v, range: name });
        }
    }
    Ok(())
}

/// The three forms `f_0, f_1, f_2` of the relation `(source,0) -> (target,2)`,
/// indexed by the middle vertex.
pub fn relation_forms(cfg: &PointConfiguration, source: usize, target: usize) -> Result<[TriPoly; 3]> {
    check_pair(source, target)?;
    let t = wrap456(target as i64 + 4);
    let mut out: [TriPoly; 3] = Default::default();
    for (m, slot) in out.iter_mut().enumerate() {
        let k = m as i64 + 1;
        let line = line_form(cfg, wrap123(k), t)?;
        *slot = match source {
            0 => line,
            1 => &line * &conic_form(cfg, wrap123(k))?,
            _ => &line * &line_form(cfg, wrap123(k + 1), wrap123(k + 2))?,
        };
    }
    Ok(out)
}

/// The coefficient triple of the relation `(source,0) -> (target,2)` by middle vertex.
pub fn closed_form_triple(cfg: &PointConfiguration, source: usize, target: usize) -> Result<[Rat; 3]> {
    check_pair(source, target)?;
    let t = wrap456(target as i64 + 4);
    let mut out: [Rat; 3] = Default::default();
    for (m, slot) in out.iter_mut().enumerate() {
        let k = m as i64 + 1;
        *slot = match source {
            0 => bracket(cfg, wrap123(k + 1), t, wrap123(k + 2))?,
            1 => cfg.entry(target + 1, m + 1),
            _ => Rat::one(),
        };
    }
    Ok(out)
}

/// `Σ c_m f_m`.
pub fn combine(forms: &[TriPoly; 3], triple: &[Rat; 3]) -> TriPoly {
    forms
        .iter()
        .zip(triple)
        .fold(TriPoly::zero(), |acc, (f, c)| &acc + &f.scale(c))
}

/// The linear dependence among the three forms found by direct linear
/// algebra on their coefficients, scaled so that the last nonzero entry is 1.
/// `None` unless the dependence is unique up to scale.
pub fn kernel_triple(cfg: &PointConfiguration, source: usize, target: usize) -> Result<Option<[Rat; 3]>> {
    let forms = relation_forms(cfg, source, target)?;
    let mut monomials: Vec<[u32; 3]> = forms.iter().flat_map(|f| f.terms().map(|(e, _)| *e)).collect();
    monomials.sort_unstable();
    monomials.dedup();
    let m = Matrix::from_fn(monomials.len(), 3, |r, c| forms[c].coefficient(monomials[r]));
    let ker = rational_kernel_basis(&m);
    if ker.len() != 1 {
        return Ok(None);
    }
    let v = &ker[0];
    let last = v.iter().rev().find(|x| !x.is_zero()).cloned().unwrap_or_else(Rat::one);
    Ok(Some([0, 1, 2].map(|i| &v[i] / &last)))
}

/// The triple read off the printed coefficient rule by term position, before
/// any re-indexing: for source 1 the column `p_{·,j+4}`; for source 0 the
/// brackets `|p_1 p_{j+4} p_2|, |p_2 p_{j+4} p_3|, |p_3 p_{j+4} p_1|`.
pub fn literal_triple(cfg: &PointConfiguration, source: usize, target: usize) -> Result<[Rat; 3]> {
    check_pair(source, target)?;
    let t = wrap456(target as i64 + 4);
    Ok(match source {
        0 => [
            bracket(cfg, 1, t, 2)?,
            bracket(cfg, 2, t, 3)?,
            bracket(cfg, 3, t, 1)?,
        ],
        1 => [cfg.entry(1, t), cfg.entry(2, t), cfg.entry(3, t)],
        _ => [Rat::one(), Rat::one(), Rat::one()],
    })
}

/// Nine coefficient triples, `triples[source][target][middle]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCoefficients {
    pub triples: [[[Rat; 3]; 3]; 3],
}

impl RelationCoefficients {
    /// The 27 coefficients in cyclic-path order.
    pub fn vector27(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); quiver::CYCLES];
        for (i, row) in self.triples.iter().enumerate() {
            for (j, t) in row.iter().enumerate() {
                for (m, c) in t.iter().enumerate() {
                    v[quiver::cycle_for(i, m, j)] = c.clone();
                }
            }
        }
        v
    }

    pub fn from_vector27(v: &[Rat]) -> Result<Self> {
        if v.len() != quiver::CYCLES {
            return Err(Error::DimensionMismatch {
                expected: quiver::CYCLES,
                found: v.len(),
            });
        }
        let mut triples: [[[Rat; 3]; 3]; 3] = Default::default();
        for (i, row) in triples.iter_mut().enumerate() {
            for (j, t) in row.iter_mut().enumerate() {
                for (m, c) in t.iter_mut().enumerate() {
                    *c = v[quiver::cycle_for(i, m, j)].clone();
                }
            }
        }
        Ok(RelationCoefficients { triples })
    }

    pub fn to_relation_set(&self, q: &QuiverPresentation) -> Result<RelationSet> {
        quiver::cubic_relations(q, &self.triples)
    }

    pub fn triples_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.triples
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|t| serde_json::json!(t.iter().map(format_rat).collect::<Vec<_>>()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

/// All nine triples, each checked to annihilate its forms exactly and to have
/// no zero entry.
pub fn relation_coefficients(cfg: &PointConfiguration) -> Result<RelationCoefficients> {
    let gp = general_position_report(cfg);
    if !gp.is_general() {
        return Err(Error::DegenerateConfiguration(if gp.collinear.is_empty() {
            "the six points lie on a conic".into()
        } else {
            format!("collinear points {:?}", gp.collinear)
        }));
    }
    let mut triples: [[[Rat; 3]; 3]; 3] = Default::default();
    for (i, row) in triples.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let t = closed_form_triple(cfg, i, j)?;
            if t.iter().any(Zero::is_zero) {
                return Err(Error::DegenerateConfiguration(format!(
                    "relation ({i},0) -> ({j},2) has a zero coefficient"
                )));
            }
            let residue = combine(&relation_forms(cfg, i, j)?, &t);
            if !residue.is_zero() {
                return Err(Error::DegenerateConfiguration(format!(
                    "relation ({i},0) -> ({j},2) leaves {residue}"
                )));
            }
            *slot = t;
        }
    }
    Ok(RelationCoefficients { triples })
}

/// One line of the coefficient-convention comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TranscriptEntry {
    pub source: usize,
    pub target: usize,
    pub triple: Vec<String>,
    pub kernel: Option<Vec<String>>,
    pub kernel_agrees: bool,
    pub literal: Vec<String>,
    pub literal_vanishes: bool,
}

fn proportional(u: &[Rat; 3], v: &[Rat; 3]) -> bool {
    (0..3).all(|i| (0..3).all(|j| &u[i] * &v[j] == &u[j] * &v[i]))
}

/// Compares, for each relation, the closed-form triple with the kernel of
/// its forms and with the literal by-position reading.
pub fn convention_transcript(cfg: &PointConfiguration) -> Result<Vec<TranscriptEntry>> {
    let strs = |t: &[Rat; 3]| t.iter().map(format_rat).collect::<Vec<_>>();
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let forms = relation_forms(cfg, i, j)?;
            let triple = closed_form_triple(cfg, i, j)?;
            let kernel = kernel_triple(cfg, i, j)?;
            let literal = literal_triple(cfg, i, j)?;
            out.push(TranscriptEntry {
                source: i,
                target: j,
                triple: strs(&triple),
                kernel_agrees: kernel.as_ref().is_some_and(|k| proportional(k, &triple)),
                kernel: kernel.as_ref().map(strs),
                literal: strs(&literal),
                literal_vanishes: combine(&forms, &literal).is_zero(),
            });
        }
    }
    Ok(out)
}

/// Values of the invariant characters on the 27 coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusPoint(pub Vec<Rat>);

impl TorusPoint {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.0.iter().map(format_rat).collect::<Vec<_>>())
    }
}

/// `Π_c coeff_c^{m_c}` for each basis character `m`.
pub fn to_moduli_point(rc: &RelationCoefficients, m_basis: &[IntVector]) -> Result<TorusPoint> {
    let v = rc.vector27();
    if let Some(k) = v.iter().position(Zero::is_zero) {
        return Err(Error::ZeroCoefficient(k));
    }
    let mut coords = Vec::with_capacity(m_basis.len());
    for m in m_basis {
        if m.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                found: m.len(),
            });
        }
        let mut x = Rat::one();
        for (c, e) in v.iter().zip(m) {
            if e.is_zero() {
                continue;
            }
            let e = i32::try_from(e).map_err(|_| Error::Parse(format!("exponent {e} too large")))?;
            x *= Pow::pow(c, e);
        }
        coords.push(x);
    }
    Ok(TorusPoint(coords))
}

/// Rescales arrow `a` by `alpha[a]`; the coefficient of each cyclic path is
/// multiplied by the product over its three arrows.
pub fn gauge_rescale(rc: &RelationCoefficients, alpha: &[Rat]) -> Result<RelationCoefficients> {
    if alpha.len() != quiver::QTILDE_ARROWS {
        return Err(Error::DimensionMismatch {
            expected: quiver::QTILDE_ARROWS,
            found: alpha.len(),
        });
    }
    let mut v = rc.vector27();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let c = quiver::cycle_index(i, j, k);
                for a in quiver::cycle_arrows(i, j, k) {
                    v[c] *= &alpha[a];
                }
            }
        }
    }
    RelationCoefficients::from_vector27(&v)
}

/// Invariant character basis as used by [`to_moduli_point`].
pub fn default_m_basis() -> Vec<IntVector> {
    crate::toricgit::invariant_character_basis()
}

/// Convenience: exponent vectors as `i64` for display.
pub fn basis_as_i64(m_basis: &[IntVector]) -> Vec<Vec<i64>> {
    m_basis
        .iter()
        .map(|m| m.iter().map(|e| i64::try_from(e).unwrap_or(i64::MAX)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{canonical_qtilde, closing_arrows, cubic_pairing, potential_from_relations, relations_from_potential};
    use crate::rational::{rat, ratio};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sample() -> PointConfiguration {
        PointConfiguration::from_i64(2, 3, 5, 7).unwrap()
    }

    #[test]
    fn index_wrapping() {
        let expected123 = [(-2, 1), (-1, 2), (0, 3), (1, 1), (2, 2), (3, 3), (4, 1), (5, 2), (6, 3), (7, 1)];
        for (k, w) in expected123 {
            assert_eq!(wrap123(k), w, "{k}");
        }
        let expected456 = [(1, 4), (2, 5), (3, 6), (4, 4), (5, 5), (6, 6), (7, 4), (8, 5), (0, 6)];
        for (k, w) in expected456 {
            assert_eq!(wrap456(k), w, "{k}");
        }
    }

    #[test]
    fn general_position_examples() {
        assert!(general_position_check(&sample()));
        let same = PointConfiguration::from_i64(2, 3, 2, 3).unwrap();
        assert!(!general_position_check(&same));
        let on_diag = PointConfiguration::from_i64(1, 1, 5, 7).unwrap();
        assert!(!general_position_check(&on_diag));
        assert!(PointConfiguration::from_i64(0, 1, 2, 3).is_err());
    }

    #[test]
    fn collinear_triple_is_reported_exactly() {
        // p_1 = (1, 4, 1) lies on the line z = x through p_3 and p_5
        let cfg = PointConfiguration::from_i64(4, 1, 5, 7).unwrap();
        let gp = general_position_report(&cfg);
        assert_eq!(gp.collinear, vec![[1, 3, 5]]);
    }

    #[test]
    fn line_forms() {
        let cfg = sample();
        assert_eq!(line_form(&cfg, 4, 5).unwrap(), TriPoly::z());
        assert_eq!(line_form(&cfg, 5, 6).unwrap(), TriPoly::x());
        assert_eq!(line_form(&cfg, 5, 6).unwrap().eval_at(&cfg.point(4).unwrap()), rat(1));
        for i in 1..=6 {
            for j in 1..=6 {
                if i == j {
                    assert!(line_form(&cfg, i, j).is_err());
                    continue;
                }
                let l = line_form(&cfg, i, j).unwrap();
                assert!(l.eval_at(&cfg.point(i).unwrap()).is_zero());
                assert!(l.eval_at(&cfg.point(j).unwrap()).is_zero());
            }
        }
        assert!(line_form(&cfg, 0, 2).is_err());
        assert!(line_form(&cfg, 2, 7).is_err());
    }

    #[test]
    fn conic_forms() {
        let cfg = sample();
        for i in 1..=3 {
            let q = conic_form(&cfg, i).unwrap();
            for k in 1..=6 {
                let v = q.eval_at(&cfg.point(k).unwrap());
                assert_eq!(v.is_zero(), k != i, "q_{i} at p_{k}");
            }
            for e in [[2, 0, 0], [0, 2, 0], [0, 0, 2]] {
                assert!(q.coefficient(e).is_zero());
            }
            assert_eq!(q.degree(), Some(2));
        }
        assert!(conic_form(&cfg, 4).is_err());
    }

    #[test]
    fn closed_forms_agree_with_kernel() {
        let cfg = sample();
        for i in 0..3 {
            for j in 0..3 {
                let t = closed_form_triple(&cfg, i, j).unwrap();
                let k = kernel_triple(&cfg, i, j).unwrap().expect("one-dimensional kernel");
                assert!(proportional(&t, &k), "({i},{j})");
            }
        }
        let rc = relation_coefficients(&cfg).unwrap();
        for j in 0..3 {
            assert_eq!(rc.triples[2][j], [rat(1), rat(1), rat(1)]);
        }
        assert_eq!(rc.triples[1][0], [rat(1), rat(1), rat(1)]);
        assert_eq!(rc.triples[1][1], [rat(2), rat(5), rat(1)]);
        assert_eq!(rc.triples[1][2], [rat(3), rat(7), rat(1)]);
    }

    #[test]
    fn literal_readings() {
        let cfg = sample();
        let tr = convention_transcript(&cfg).unwrap();
        for e in &tr {
            assert!(e.kernel_agrees);
            match e.source {
                // the column reading has zero entries and fails to annihilate
                1 => assert!(!e.literal_vanishes),
                // printed by term order ℓ_3, ℓ_1, ℓ_2, not by middle vertex
                0 => assert!(!e.literal_vanishes),
                _ => assert!(e.literal_vanishes),
            }
        }
        assert_eq!(literal_triple(&cfg, 1, 0).unwrap(), [rat(1), rat(0), rat(0)]);
        // the same brackets placed by the line they multiply do vanish
        for j in 0..3 {
            let lit = literal_triple(&cfg, 0, j).unwrap();
            let by_line = [lit[1].clone(), lit[2].clone(), lit[0].clone()];
            assert!(combine(&relation_forms(&cfg, 0, j).unwrap(), &by_line).is_zero());
        }
    }

    #[test]
    fn random_configurations_give_nonzero_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let cfg = PointConfiguration::random(&mut rng);
            let rc = relation_coefficients(&cfg).unwrap();
            assert!(rc.vector27().iter().all(|c| !c.is_zero()));
        }
    }

    #[test]
    fn degenerate_configuration_is_an_error() {
        let cfg = PointConfiguration::from_i64(2, 3, 2, 3).unwrap();
        assert!(matches!(relation_coefficients(&cfg), Err(Error::DegenerateConfiguration(_))));
    }

    #[test]
    fn vector27_matches_potential() {
        let qt = canonical_qtilde();
        let rc = relation_coefficients(&sample()).unwrap();
        let rel = rc.to_relation_set(&qt).unwrap();
        let phi = potential_from_relations(&qt, &rel, &cubic_pairing()).unwrap();
        let v = rc.vector27();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(phi.coefficient(&quiver::cycle_arrows(i, j, k)), v[quiver::cycle_index(i, j, k)]);
                }
            }
        }
        let back = relations_from_potential(&qt, &phi, &closing_arrows()).unwrap();
        assert!(back.projectively_equal(&rel));
        assert_eq!(RelationCoefficients::from_vector27(&v).unwrap(), rc);
    }

    #[test]
    fn torus_point_invariance() {
        let basis = default_m_basis();
        assert_eq!(basis.len(), 8);
        let ones = RelationCoefficients::from_vector27(&vec![rat(1); 27]).unwrap();
        assert_eq!(to_moduli_point(&ones, &basis).unwrap(), TorusPoint(vec![rat(1); 8]));

        let rc = relation_coefficients(&sample()).unwrap();
        let base = to_moduli_point(&rc, &basis).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut draw = || ratio(rng.gen_range(1..20) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..9));
        let alpha: Vec<Rat> = (0..27).map(|_| draw()).collect();
        let beta: Vec<Rat> = (0..27).map(|_| draw()).collect();
        let moved = gauge_rescale(&rc, &alpha).unwrap();
        assert_ne!(moved, rc);
        assert_eq!(to_moduli_point(&moved, &basis).unwrap(), base);
        let ab: Vec<Rat> = alpha.iter().zip(&beta).map(|(a, b)| a * b).collect();
        assert_eq!(gauge_rescale(&moved, &beta).unwrap(), gauge_rescale(&rc, &ab).unwrap());
        assert_eq!(gauge_rescale(&rc, &vec![rat(1); 27]).unwrap(), rc);

        let mut zero = rc.vector27();
        zero[4] = rat(0);
        let zero = RelationCoefficients::from_vector27(&zero).unwrap();
        assert!(matches!(to_moduli_point(&zero, &basis), Err(Error::ZeroCoefficient(4))));
    }

    #[test]
    fn distinct_configurations_are_separated() {
        let basis = default_m_basis();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let (c1, c2) = (PointConfiguration::random(&mut rng), PointConfiguration::random(&mut rng));
            if c1 == c2 {
                continue;
            }
            let t1 = to_moduli_point(&relation_coefficients(&c1).unwrap(), &basis).unwrap();
            let t2 = to_moduli_point(&relation_coefficients(&c2).unwrap(), &basis).unwrap();
            assert_ne!(t1, t2);
        }
    }

    #[test]
    fn json_roundtrip() {
        let cfg = PointConfiguration::new(ratio(1, 2), rat(3), ratio(-5, 7), rat(7)).unwrap();
        assert_eq!(PointConfiguration::from_json(&cfg.to_json()).unwrap(), cfg);
        assert!(PointConfiguration::from_json(&serde_json::json!({"a": 1.5, "b": 1, "c": 2, "d": 3})).is_err());
    }
}
