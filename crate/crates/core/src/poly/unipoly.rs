use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{BiPoly, Var};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// Sparse univariate polynomial over the rationals. The variable is implicit;
/// callers decide whether it stands for `x`, `y` or an auxiliary `z`.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct UniPoly {
    terms: BTreeMap<u32, Rat>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly::default()
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> UniPoly {
        UniPoly::monomial(c, 0)
    }

    /// The variable itself.
    pub fn var() -> UniPoly {
        UniPoly::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, e: u32) -> UniPoly {
        let mut p = UniPoly::zero();
        p.add_term(e, &c);
        p
    }

    /// `var + c`
    pub fn linear(c: Rat) -> UniPoly {
        &UniPoly::var() + &UniPoly::constant(c)
    }

    pub fn add_term(&mut self, e: u32, c: &Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, e: u32) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.terms.values().next_back().cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rat)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        // Horner from the top degree down
        let Some(deg) = self.degree() else {
            return Rat::zero();
        };
        let mut acc = Rat::zero();
        for e in (0..=deg).rev() {
            acc *= at;
            if let Some(c) = self.terms.get(&e) {
                acc += c;
            }
        }
        acc
    }

    /// Euclidean division over the rationals: `self = q * d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let Some(dd) = d.degree() else {
            return Err(Error::ZeroDenominator);
        };
        let lead = d.leading_coeff();
        let mut rem = self.clone();
        let mut quot = UniPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff() / &lead;
            let shift = rd - dd;
            quot.add_term(shift, &c);
            for (e, dc) in d.terms() {
                rem.add_term(e + shift, &-(dc * &c));
            }
        }
        Ok((quot, rem))
    }

    /// Quotient of an exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &UniPoly) -> Result<Option<UniPoly>> {
        let (q, r) = self.div_rem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Returns `lambda` with `self == lambda * d`.
    pub fn constant_cofactor(&self, d: &UniPoly) -> Result<Rat> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() || q.degree().unwrap_or(0) > 0 {
            return Err(Error::NotConstantMultiple);
        }
        Ok(q.coeff(0))
    }

    /// The same polynomial as a bivariate one in `v`.
    pub fn embed(&self, v: Var) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|(&e, c)| {
            let key = match v {
                Var::X => (e, 0),
                Var::Y => (0, e),
            };
            (key, c.clone())
        }))
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::one(), |acc, _| &acc * self)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly(")?;
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*t^{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, &-c);
        }
        out
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(&-Rat::one())
    }
}

macro_rules! owned_binop {
    ($T:ty, $Trait:ident, $method:ident) => {
        impl $Trait for $T {
            type Output = $T;
            fn $method(self, rhs: $T) -> $T {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(UniPoly, Add, add);
owned_binop!(UniPoly, Sub, sub);
owned_binop!(UniPoly, Mul, mul);

/// Quotient of univariate polynomials, kept unreduced.
///
/// Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct UniRatFunc {
    numer: UniPoly,
    denom: UniPoly,
}

impl UniRatFunc {
    pub fn new(numer: UniPoly, denom: UniPoly) -> Result<UniRatFunc> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(UniRatFunc { numer, denom })
    }

    pub fn zero() -> UniRatFunc {
        UniRatFunc::from_poly(UniPoly::zero())
    }

    pub fn one() -> UniRatFunc {
        UniRatFunc::from_poly(UniPoly::one())
    }

    pub fn constant(c: Rat) -> UniRatFunc {
        UniRatFunc::from_poly(UniPoly::constant(c))
    }

    pub fn from_poly(p: UniPoly) -> UniRatFunc {
        UniRatFunc {
            numer: p,
            denom: UniPoly::one(),
        }
    }

    pub fn numer(&self) -> &UniPoly {
        &self.numer
    }

    pub fn denom(&self) -> &UniPoly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> UniRatFunc {
        UniRatFunc {
            numer: self.numer.scale(c),
            denom: self.denom.clone(),
        }
    }

    pub fn mul_poly(&self, p: &UniPoly) -> UniRatFunc {
        UniRatFunc {
            numer: &self.numer * p,
            denom: self.denom.clone(),
        }
    }

    pub fn recip(&self) -> Result<UniRatFunc> {
        UniRatFunc::new(self.denom.clone(), self.numer.clone())
    }

    /// The polynomial this function equals, if the division is exact.
    pub fn to_poly(&self) -> Option<UniPoly> {
        self.numer
            .exact_div(&self.denom)
            .expect("nonzero denominator")
    }

    /// `numer_1 * denom_2 - numer_2 * denom_1`; zero iff the two are equal.
    pub fn cross_difference(&self, other: &UniRatFunc) -> UniPoly {
        &(&self.numer * &other.denom) - &(&other.numer * &self.denom)
    }

    pub fn eval(&self, at: &Rat) -> Result<Rat> {
        self.numer.eval(at).checked_div(&self.denom.eval(at))
    }
}

impl PartialEq for UniRatFunc {
    fn eq(&self, other: &UniRatFunc) -> bool {
        self.cross_difference(other).is_zero()
    }
}

impl Eq for UniRatFunc {}

impl fmt::Debug for UniRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.numer, self.denom)
    }
}

impl From<UniPoly> for UniRatFunc {
    fn from(p: UniPoly) -> UniRatFunc {
        UniRatFunc::from_poly(p)
    }
}

impl Add<&UniRatFunc> for &UniRatFunc {
    type Output = UniRatFunc;
    fn add(self, rhs: &UniRatFunc) -> UniRatFunc {
        if self.denom == rhs.denom {
            return UniRatFunc {
                numer: &self.numer + &rhs.numer,
                denom: self.denom.clone(),
            };
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        UniRatFunc {
            numer: &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom),
            denom: &self.denom * &rhs.denom,
        }
    }
}

impl Neg for &UniRatFunc {
    type Output = UniRatFunc;
    fn neg(self) -> UniRatFunc {
        UniRatFunc {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Sub<&UniRatFunc> for &UniRatFunc {
    type Output = UniRatFunc;
    fn sub(self, rhs: &UniRatFunc) -> UniRatFunc {
        self + &(-rhs)
    }
}

impl Mul<&UniRatFunc> for &UniRatFunc {
    type Output = UniRatFunc;
    fn mul(self, rhs: &UniRatFunc) -> UniRatFunc {
        UniRatFunc {
            numer: &self.numer * &rhs.numer,
            denom: &self.denom * &rhs.denom,
        }
    }
}

owned_binop!(UniRatFunc, Add, add);
owned_binop!(UniRatFunc, Sub, sub);
owned_binop!(UniRatFunc, Mul, mul);

impl std::iter::Sum for UniRatFunc {
    fn sum<I: Iterator<Item = UniRatFunc>>(iter: I) -> UniRatFunc {
        iter.fold(UniRatFunc::zero(), |acc, f| &acc + &f)
    }
}
