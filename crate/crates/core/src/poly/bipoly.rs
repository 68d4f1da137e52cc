use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{UniPoly, Var};
use crate::rational::Rat;

/// Sparse polynomial in `x` and `y` over the rationals.
///
/// Keys are `(xexp, yexp)`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

/// Right-hand side of a variable substitution `var -> sign * target + shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub target: Var,
    pub sign: i8,
    pub shift: Rat,
}

impl Affine {
    pub fn new(target: Var, sign: i8, shift: Rat) -> Affine {
        assert!(sign == 1 || sign == -1, "affine image sign must be +-1");
        Affine {
            target,
            sign,
            shift,
        }
    }

    /// `var -> -var`
    pub fn negate(var: Var) -> Affine {
        Affine::new(var, -1, Rat::zero())
    }
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> BiPoly {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn x() -> BiPoly {
        BiPoly::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> BiPoly {
        BiPoly::monomial(Rat::one(), 0, 1)
    }

    pub fn var(v: Var) -> BiPoly {
        match v {
            Var::X => BiPoly::x(),
            Var::Y => BiPoly::y(),
        }
    }

    pub fn monomial(c: Rat, xexp: u32, yexp: u32) -> BiPoly {
        let mut p = BiPoly::zero();
        p.add_term(xexp, yexp, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rat)>>(terms: I) -> BiPoly {
        let mut p = BiPoly::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, &c);
        }
        p
    }

    /// Adds `c * x^xexp * y^yexp` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, xexp: u32, yexp: u32, c: &Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((xexp, yexp)) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
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

    pub fn coeff(&self, xexp: u32, yexp: u32) -> Rat {
        self.terms.get(&(xexp, yexp)).cloned().unwrap_or_default()
    }

    /// Terms in ascending `(xexp, yexp)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), &Rat)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    /// Terms in canonical (descending x, then descending y) order.
    pub fn canonical_terms(&self) -> impl Iterator<Item = ((u32, u32), &Rat)> + '_ {
        self.terms().rev()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(a, b)| match v {
                Var::X => a,
                Var::Y => b,
            })
            .max()
    }

    /// Sum of the terms of maximal total degree.
    pub fn leading_form(&self) -> BiPoly {
        match self.total_degree() {
            None => BiPoly::zero(),
            Some(d) => BiPoly {
                terms: self
                    .terms
                    .iter()
                    .filter(|((a, b), _)| a + b == d)
                    .map(|(k, v)| (*k, v.clone()))
                    .collect(),
            },
        }
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        (0..e).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    /// Exchanges `x` and `y`.
    pub fn swap(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((b, a), v.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x0: &Rat, y0: &Rat) -> Rat {
        let mut xp = PowerCache::new(x0.clone());
        let mut yp = PowerCache::new(y0.clone());
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * xp.get(a) * yp.get(b))
            .sum()
    }

    /// Replaces `var` by `image`, producing another bivariate polynomial.
    pub fn substitute(&self, var: Var, image: &Affine) -> BiPoly {
        let img = &BiPoly::var(image.target).scale(&Rat::int(image.sign))
            + &BiPoly::constant(image.shift.clone());
        let mut powers: Vec<BiPoly> = vec![BiPoly::one()];
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            let (e, keep) = match var {
                Var::X => (a, b),
                Var::Y => (b, a),
            };
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * &img;
                powers.push(next);
            }
            for (&(pa, pb), pc) in &powers[e as usize].terms {
                let coeff = c * pc;
                match var {
                    Var::X => out.add_term(pa, pb + keep, &coeff),
                    Var::Y => out.add_term(pa + keep, pb, &coeff),
                }
            }
        }
        out
    }

    /// Replaces `var` by the constant `c`; the result is univariate in the other variable.
    pub fn substitute_const(&self, var: Var, c: &Rat) -> UniPoly {
        let mut powers = PowerCache::new(c.clone());
        let mut out = UniPoly::zero();
        for (&(a, b), coeff) in &self.terms {
            let (e, keep) = match var {
                Var::X => (a, b),
                Var::Y => (b, a),
            };
            out.add_term(keep, &(coeff * powers.get(e)));
        }
        out
    }

    /// The polynomial as univariate in `v`, if it does not involve the other variable.
    pub fn to_uni(&self, v: Var) -> Option<UniPoly> {
        let mut out = UniPoly::zero();
        for (&(a, b), c) in &self.terms {
            let (e, other) = match v {
                Var::X => (a, b),
                Var::Y => (b, a),
            };
            if other != 0 {
                return None;
            }
            out.add_term(e, c);
        }
        Some(out)
    }

    /// Coefficients of `v^d` as polynomials in the other variable, indexed by `d`.
    pub(crate) fn coefficients_in(&self, v: Var) -> Vec<UniPoly> {
        let n = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![UniPoly::zero(); n];
        for (&(a, b), c) in &self.terms {
            let (d, e) = match v {
                Var::X => (a, b),
                Var::Y => (b, a),
            };
            out[d as usize].add_term(e, c);
        }
        out
    }
}

struct PowerCache {
    base: Rat,
    powers: Vec<Rat>,
}

impl PowerCache {
    fn new(base: Rat) -> PowerCache {
        PowerCache {
            base,
            powers: vec![Rat::one()],
        }
    }

    fn get(&mut self, e: u32) -> &Rat {
        while self.powers.len() <= e as usize {
            let next = self.powers.last().unwrap() * &self.base;
            self.powers.push(next);
        }
        &self.powers[e as usize]
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self)
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c);
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, &-c);
        }
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    #[test]
    fn arithmetic() {
        let x = BiPoly::x();
        let y = BiPoly::y();
        let one = BiPoly::one();
        assert_eq!(
            &x + &y,
            BiPoly::from_terms([((1, 0), Rat::one()), ((0, 1), Rat::one())])
        );
        let p = &(&x + &one) * &(&x - &one);
        assert_eq!(p, &x.pow(2) - &one);
        assert!(x.pow(2).scale(&Rat::zero()).is_zero());
        assert_eq!(-&x + x.clone(), BiPoly::zero());
    }

    #[test]
    fn swap_examples() {
        let x = BiPoly::x();
        let y = BiPoly::y();
        assert_eq!((&x.pow(2) * &y).swap(), &x * &y.pow(2));
        assert_eq!((&x + &y).swap(), &x + &y);
        assert_eq!((&x.pow(3) - &y).swap(), &y.pow(3) - &x);
    }

    #[test]
    fn eval_examples() {
        let x = BiPoly::x();
        let y = BiPoly::y();
        assert_eq!((&x + &y).eval(&Rat::int(1), &Rat::int(2)), Rat::int(3));
        assert_eq!(
            (&x.pow(2) - &y.pow(2)).eval(&Rat::int(3), &Rat::int(3)),
            Rat::zero()
        );
        assert_eq!((&x * &y).eval(&r(1, 2), &Rat::int(4)), Rat::int(2));
    }

    #[test]
    fn substitution_examples() {
        let x = BiPoly::x();
        let y = BiPoly::y();
        let p = &x + &y;
        assert!(p
            .substitute(Var::Y, &Affine::new(Var::X, -1, Rat::zero()))
            .is_zero());

        let p = &x.pow(2) - &y.pow(2);
        let got = p.substitute(Var::Y, &Affine::new(Var::X, -1, Rat::int(-1)));
        assert_eq!(got, &x.scale(&Rat::int(-2)) - &BiPoly::one());

        let p = &x.pow(2) * &y;
        let got = p.substitute_const(Var::X, &r(-1, 2));
        assert_eq!(got, UniPoly::monomial(r(1, 4), 1));
    }

    #[test]
    fn substitute_same_variable() {
        let x = BiPoly::x();
        let y = BiPoly::y();
        let p = &x.pow(3) + &(&x * &y.pow(2));
        assert_eq!(p.substitute(Var::X, &Affine::negate(Var::X)), -&p);
        assert_eq!(p.substitute(Var::Y, &Affine::negate(Var::Y)), p);
    }

    #[test]
    fn leading_form_and_degree() {
        let x = BiPoly::x();
        let y = BiPoly::y();
        let p = &(&x.pow(3) * &y) + &(&x - &y.pow(4));
        assert_eq!(p.total_degree(), Some(4));
        assert_eq!(p.leading_form(), &(&x.pow(3) * &y) - &y.pow(4));
        assert_eq!(BiPoly::zero().total_degree(), None);
    }
}
