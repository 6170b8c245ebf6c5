//! Polynomials in `x, y, z` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{format_rat, Rat};

/// Sparse polynomial keyed by exponent triples. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TriPoly {
    terms: BTreeMap<[u32; 3], Rat>,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn monomial(exps: [u32; 3], c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial([1, 0, 0], Rat::one())
    }

    pub fn y() -> Self {
        Self::monomial([0, 1, 0], Rat::one())
    }

    pub fn z() -> Self {
        Self::monomial([0, 0, 1], Rat::one())
    }

    /// `c0 x + c1 y + c2 z`.
    pub fn linear(c: [Rat; 3]) -> Self {
        let [a, b, d] = c;
        let mut p = Self::zero();
        p.add_term([1, 0, 0], a);
        p.add_term([0, 1, 0], b);
        p.add_term([0, 0, 1], d);
        p
    }

    pub fn add_term(&mut self, exps: [u32; 3], c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: [u32; 3]) -> Rat {
        self.terms.get(&exps).cloned().unwrap_or_else(Rat::zero)
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

    /// Largest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TriPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn eval_at(&self, p: &[Rat; 3]) -> Rat {
        self.terms.iter().fold(Rat::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (x, &k) in p.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc + t
        })
    }

    /// Restricts to the line `base + t · dir` and tests vanishing at
    /// `degree + 1` parameter values, which decides vanishing on that line.
    pub fn vanishes_on_line(&self, base: &[Rat; 3], dir: &[Rat; 3]) -> bool {
        let d = self.degree().unwrap_or(0);
        (0..=d as i64).all(|t| {
            let t = Rat::from_integer(t.into());
            let pt = [0, 1, 2].map(|i| &base[i] + &t * &dir[i]);
            self.eval_at(&pt).is_zero()
        })
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, other: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_op {
    ($tr:ident, $f:ident) => {
        impl $tr for TriPoly {
            type Output = TriPoly;
            fn $f(self, other: TriPoly) -> TriPoly {
                (&self).$f(&other)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rat(c))?;
            for (name, &k) in ["x", "y", "z"].iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn basic_arithmetic() {
        let (x, y) = (TriPoly::x(), TriPoly::y());
        assert_eq!(&x * &y, TriPoly::monomial([1, 1, 0], rat(1)));
        assert!((&x + &x.scale(&rat(-1))).is_zero());
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coefficient([1, 1, 0]), rat(2));
        assert_eq!(sq.coefficient([2, 0, 0]), rat(1));
        assert!(sq.is_homogeneous());
        assert_eq!(sq.degree(), Some(2));
        assert!((&x - &x).is_zero());
        assert_eq!(TriPoly::zero().degree(), None);
    }

    #[test]
    fn evaluation() {
        let pt = [rat(1), rat(2), rat(3)];
        assert_eq!(TriPoly::x().eval_at(&pt), rat(1));
        let p = &(&TriPoly::x() * &TriPoly::y()) + &TriPoly::z().scale(&ratio(1, 2));
        assert_eq!(p.eval_at(&pt), ratio(7, 2));
        assert!(p.eval_at(&[rat(0), rat(0), rat(0)]).is_zero());
        assert!(!(&p * &p).is_homogeneous());
    }

    fn poly_strategy() -> impl Strategy<Value = TriPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..=5, 1i64..4), 0..5).prop_map(|ts| {
            let mut p = TriPoly::zero();
            for ((a, b, c), n, d) in ts {
                p.add_term([a, b, c], ratio(n, d));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&p + &(-&p)).is_zero());
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn evaluation_is_a_ring_map(p in poly_strategy(), q in poly_strategy(), a in -4i64..4, b in -4i64..4, c in -4i64..4) {
            let pt = [rat(a), rat(b), rat(c)];
            prop_assert_eq!((&p * &q).eval_at(&pt), p.eval_at(&pt) * q.eval_at(&pt));
            prop_assert_eq!((&p + &q).eval_at(&pt), p.eval_at(&pt) + q.eval_at(&pt));
        }

        #[test]
        fn homogeneous_products(d1 in 0u32..3, d2 in 0u32..3, n in 1i64..5) {
            let p = &TriPoly::monomial([d1, 0, 0], rat(n)) + &TriPoly::monomial([0, d1, 0], rat(1));
            let q = &TriPoly::monomial([0, 0, d2], rat(n)) + &TriPoly::monomial([d2, 0, 0], rat(1));
            let pq = &p * &q;
            prop_assert!(pq.is_homogeneous());
            prop_assert_eq!(pq.degree(), Some(d1 + d2));
        }
    }

    fn random_homogeneous(rng: &mut ChaCha8Rng, d: u32) -> TriPoly {
        let mut p = TriPoly::zero();
        for i in 0..=d {
            for j in 0..=d - i {
                if rng.gen_bool(0.4) {
                    p.add_term([i, j, d - i - j], rat(rng.gen_range(-6..=6)));
                }
            }
        }
        p
    }

    #[test]
    fn random_line_zero_test_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rpt = |rng: &mut ChaCha8Rng| [0; 3].map(|_| ratio(rng.gen_range(-30..=30), rng.gen_range(1..7)));
        for trial in 0..1000 {
            let d = rng.gen_range(1..=3);
            let p = random_homogeneous(&mut rng, d);
            // every other trial is built to cancel exactly
            let p = if trial % 2 == 0 {
                let q = random_homogeneous(&mut rng, 1);
                &(&p * &q) - &(&q * &p)
            } else {
                p
            };
            let (base, dir) = (rpt(&mut rng), rpt(&mut rng));
            assert_eq!(p.vanishes_on_line(&base, &dir), p.is_zero(), "{p}");
        }
    }
}
