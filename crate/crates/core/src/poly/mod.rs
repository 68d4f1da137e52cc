//! Exact polynomial arithmetic in one and two variables.
//!
//! Besides plain ring operations this module knows about the linear forms
//! `a x + b y + c` (with `a, b` in `{-1, 0, 1}`) that cut out hyperplanes,
//! and about falling-factorial products of such forms. Divisibility by a
//! product of distinct shifted forms is decided factor by factor: each form
//! is coprime to the others, so it is enough that substituting every root
//! kills the polynomial.

mod bipoly;
mod text;
mod unipoly;

use std::fmt;

pub use bipoly::{Affine, BiPoly};
pub use text::{bp_from_json, bp_from_text, bp_to_json, bp_to_text, JsonPoly, JsonTerm};
pub use unipoly::{UniPoly, UniRatFunc};

use crate::error::{Error, Result};
use crate::rational::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::X => "x",
            Var::Y => "y",
        })
    }
}

/// `a x + b y + c` with unit or zero coefficients on the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    a: i8,
    b: i8,
    c: Rat,
}

/// Where the eliminated variable of a [`LinearForm`] goes when the form vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Root {
    Affine(Affine),
    Const(Rat),
}

impl LinearForm {
    pub fn new(a: i8, b: i8, c: Rat) -> Result<LinearForm> {
        if !(-1..=1).contains(&a) || !(-1..=1).contains(&b) {
            return Err(Error::InvalidLinearForm(format!(
                "coefficients ({a}, {b}) outside {{-1, 0, 1}}"
            )));
        }
        if a == 0 && b == 0 {
            return Err(Error::InvalidLinearForm("constant form".into()));
        }
        Ok(LinearForm { a, b, c })
    }

    pub fn x() -> LinearForm {
        LinearForm::new(1, 0, Rat::zero()).unwrap()
    }

    pub fn y() -> LinearForm {
        LinearForm::new(0, 1, Rat::zero()).unwrap()
    }

    pub fn var(v: Var) -> LinearForm {
        match v {
            Var::X => LinearForm::x(),
            Var::Y => LinearForm::y(),
        }
    }

    pub fn x_plus_y() -> LinearForm {
        LinearForm::new(1, 1, Rat::zero()).unwrap()
    }

    pub fn x_minus_y() -> LinearForm {
        LinearForm::new(1, -1, Rat::zero()).unwrap()
    }

    pub fn coefficients(&self) -> (i8, i8, &Rat) {
        (self.a, self.b, &self.c)
    }

    /// The form plus a constant.
    pub fn shifted(&self, s: &Rat) -> LinearForm {
        LinearForm {
            a: self.a,
            b: self.b,
            c: &self.c + s,
        }
    }

    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_terms([
            ((1, 0), Rat::int(self.a)),
            ((0, 1), Rat::int(self.b)),
            ((0, 0), self.c.clone()),
        ])
    }

    /// `x` when it occurs, otherwise `y`.
    pub fn eliminated_var(&self) -> Var {
        if self.a != 0 {
            Var::X
        } else {
            Var::Y
        }
    }

    /// Value of the eliminated variable on the zero set of the form.
    pub fn root(&self) -> Root {
        if self.a != 0 {
            // x = -a (b y + c), using a^2 = 1
            let shift = -(&self.c * Rat::int(self.a));
            if self.b == 0 {
                Root::Const(shift)
            } else {
                Root::Affine(Affine::new(Var::Y, -self.a * self.b, shift))
            }
        } else {
            Root::Const(-(&self.c * Rat::int(self.b)))
        }
    }

    /// The root as a polynomial in the remaining variable.
    fn root_poly(&self) -> UniPoly {
        match self.root() {
            Root::Const(c) => UniPoly::constant(c),
            Root::Affine(img) => {
                &UniPoly::monomial(Rat::int(img.sign), 1) + &UniPoly::constant(img.shift)
            }
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", bp_to_text(&self.to_bipoly()))
    }
}

/// Restriction of `p` to the zero set of `form`, as a polynomial in the
/// non-eliminated variable.
pub fn restrict_to(p: &BiPoly, form: &LinearForm) -> UniPoly {
    let v = form.eliminated_var();
    match form.root() {
        Root::Const(c) => p.substitute_const(v, &c),
        Root::Affine(img) => p
            .substitute(v, &img)
            .to_uni(v.other())
            .expect("eliminated variable is gone after substitution"),
    }
}

/// `prod_{j<k} (form + shift - j)`.
pub fn ff_linear_poly(form: &LinearForm, shift: &Rat, k: u32) -> BiPoly {
    let base = form.shifted(shift).to_bipoly();
    let mut acc = BiPoly::one();
    for j in 0..k {
        let factor = &base - &BiPoly::constant(Rat::from(i64::from(j)));
        acc = &acc * &factor;
    }
    acc
}

/// `(var + shift)_k` as a bivariate polynomial.
pub fn ff_poly(var: Var, shift: &Rat, k: u32) -> BiPoly {
    ff_linear_poly(&LinearForm::var(var), shift, k)
}

/// `(t + shift)_k` in the implicit univariate variable `t`.
pub fn uni_ff_poly(shift: &Rat, k: u32) -> UniPoly {
    let mut acc = UniPoly::one();
    for j in 0..k {
        acc = &acc * &UniPoly::linear(shift - Rat::from(i64::from(j)));
    }
    acc
}

/// `(t + shift)_k` for any integer `k`; negative lengths go to the denominator
/// as `1 / (t + shift + n)_n`.
pub fn uni_ff(shift: &Rat, k: i64) -> UniRatFunc {
    if k >= 0 {
        UniRatFunc::from_poly(uni_ff_poly(shift, k as u32))
    } else {
        let n = -k;
        let denom = uni_ff_poly(&(shift + Rat::int(n)), n as u32);
        UniRatFunc::new(UniPoly::one(), denom).expect("monic denominator")
    }
}

/// Result of dividing by a linear form: `p = quotient * form + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivRem {
    pub quotient: BiPoly,
    pub remainder: UniPoly,
    /// Variable the remainder is written in.
    pub remainder_var: Var,
}

/// Divides `p` by `form`, eliminating `form.eliminated_var()`.
pub fn divrem_linear(p: &BiPoly, form: &LinearForm) -> DivRem {
    let v = form.eliminated_var();
    let w = v.other();
    // form = unit * (v - root)
    let unit = Rat::int(if v == Var::X { form.a } else { form.b });
    let root = form.root_poly();

    let coeffs = p.coefficients_in(v);
    if coeffs.is_empty() {
        return DivRem {
            quotient: BiPoly::zero(),
            remainder: UniPoly::zero(),
            remainder_var: w,
        };
    }
    // synthetic division by (v - root), highest power first
    let n = coeffs.len() - 1;
    let mut q_coeffs = vec![UniPoly::zero(); n];
    let mut carry = UniPoly::zero();
    for d in (1..=n).rev() {
        carry = &coeffs[d] + &(&root * &carry);
        q_coeffs[d - 1] = carry.clone();
    }
    let remainder = &coeffs[0] + &(&root * &carry);

    let mut quotient = BiPoly::zero();
    for (d, qc) in q_coeffs.iter().enumerate() {
        for (e, c) in qc.terms() {
            let c = c * &unit;
            match v {
                Var::X => quotient.add_term(d as u32, e, &c),
                Var::Y => quotient.add_term(e, d as u32, &c),
            }
        }
    }
    DivRem {
        quotient,
        remainder,
        remainder_var: w,
    }
}

/// Whether `p` is divisible by `prod_{j<k} (form + shift - j)`.
pub fn is_divisible_by_ff(p: &BiPoly, form: &LinearForm, shift: &Rat, k: u32) -> bool {
    first_nonvanishing_factor(p, form, shift, k).is_none()
}

/// The first shifted factor `form + shift - j` that does not divide `p`,
/// together with the restriction of `p` to its zero set.
pub fn first_nonvanishing_factor(
    p: &BiPoly,
    form: &LinearForm,
    shift: &Rat,
    k: u32,
) -> Option<(u32, UniPoly)> {
    (0..k).find_map(|j| {
        let factor = form.shifted(&(shift - Rat::from(i64::from(j))));
        let r = restrict_to(p, &factor);
        (!r.is_zero()).then_some((j, r))
    })
}

/// `lambda` with `p = lambda * d`.
pub fn extract_constant_cofactor(p: &UniPoly, d: &UniPoly) -> Result<Rat> {
    p.constant_cofactor(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    fn x() -> BiPoly {
        BiPoly::x()
    }

    fn y() -> BiPoly {
        BiPoly::y()
    }

    fn c(v: Rat) -> BiPoly {
        BiPoly::constant(v)
    }

    #[test]
    fn linear_form_validation() {
        assert!(LinearForm::new(0, 0, Rat::one()).is_err());
        assert!(LinearForm::new(2, 0, Rat::one()).is_err());
        assert!(LinearForm::new(-1, 1, Rat::one()).is_ok());
    }

    #[test]
    fn ff_poly_examples() {
        assert_eq!(ff_poly(Var::X, &Rat::zero(), 1), x());
        assert_eq!(ff_poly(Var::X, &Rat::one(), 3), &x().pow(3) - &x());
        assert_eq!(
            ff_poly(Var::Y, &r(-1, 2), 2),
            &(&y().pow(2) - &y().scale(&Rat::int(2))) + &c(r(3, 4))
        );
        assert_eq!(ff_poly(Var::Y, &r(5, 2), 0), BiPoly::one());
    }

    #[test]
    fn ff_linear_poly_examples() {
        let s = &x() + &y();
        assert_eq!(ff_linear_poly(&LinearForm::x_plus_y(), &Rat::zero(), 1), s);
        let want = &(&(&s + &BiPoly::one()) * &s) * &(&s - &BiPoly::one());
        assert_eq!(
            ff_linear_poly(&LinearForm::x_plus_y(), &Rat::one(), 3),
            want
        );
        assert_eq!(
            ff_linear_poly(&LinearForm::x_minus_y(), &Rat::zero(), 1),
            &x() - &y()
        );
    }

    #[test]
    fn uni_ff_negative_length() {
        // (t - 3/2)_{-2} = 1/((t + 1/2)(t - 1/2))
        let f = uni_ff(&r(-3, 2), -2);
        let want = UniRatFunc::new(
            UniPoly::one(),
            &UniPoly::linear(r(1, 2)) * &UniPoly::linear(r(-1, 2)),
        )
        .unwrap();
        assert_eq!(f, want);
        assert_eq!(f.eval(&Rat::int(1)).unwrap(), r(4, 3));
    }

    #[test]
    fn divrem_examples() {
        let p = &x().pow(2) - &y().pow(2);
        let d = divrem_linear(&p, &LinearForm::x_plus_y());
        assert_eq!(d.quotient, &x() - &y());
        assert!(d.remainder.is_zero());

        let d = divrem_linear(&x(), &LinearForm::x_plus_y());
        assert_eq!(d.quotient, BiPoly::one());
        assert_eq!(d.remainder, UniPoly::monomial(-Rat::one(), 1));
        assert_eq!(d.remainder_var, Var::Y);

        let form = LinearForm::new(0, 1, -Rat::one()).unwrap();
        let d = divrem_linear(&(&x() * &y()), &form);
        assert_eq!(d.quotient, x());
        assert_eq!(d.remainder, UniPoly::var());
        assert_eq!(d.remainder_var, Var::X);
    }

    #[test]
    fn divisibility_examples() {
        let p = &x().pow(2) - &y().pow(2);
        assert!(is_divisible_by_ff(
            &p,
            &LinearForm::x_plus_y(),
            &Rat::zero(),
            1
        ));
        let p = &(&x() + &y()) + &BiPoly::one();
        assert!(!is_divisible_by_ff(
            &p,
            &LinearForm::x_plus_y(),
            &Rat::zero(),
            1
        ));
        let p = ff_linear_poly(&LinearForm::x_plus_y(), &Rat::one(), 3);
        assert!(is_divisible_by_ff(
            &p,
            &LinearForm::x_plus_y(),
            &Rat::one(),
            3
        ));
        assert!(!is_divisible_by_ff(
            &p,
            &LinearForm::x_plus_y(),
            &Rat::int(2),
            3
        ));
        assert!(is_divisible_by_ff(
            &BiPoly::zero(),
            &LinearForm::x(),
            &Rat::one(),
            4
        ));
    }

    #[test]
    fn constant_cofactor_via_module() {
        let t = UniPoly::var();
        let d = &t * &(&t - &UniPoly::one());
        assert_eq!(
            extract_constant_cofactor(&d.scale(&Rat::int(2)), &d).unwrap(),
            Rat::int(2)
        );
    }
}
