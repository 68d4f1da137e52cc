//! The integral polynomials `f_i^m`, their falling-factorial deformations,
//! the summands `F_{i,m,u}` and the arrangement polynomial `phi`.

use crate::error::{Error, Result};
use crate::poly::{ff_linear_poly, ff_poly, BiPoly, LinearForm, Var};
use crate::rational::{beta_half, binomial, FamilyIndex, Rat};

/// Shift of the coefficient `c_{m,i,k}` by `delta`, used to probe that the
/// checks actually detect a wrong coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perturbation {
    pub index: FamilyIndex,
    pub k: u32,
    pub delta: Rat,
}

/// Source of the coefficients `c_{m,i,k}` and everything built from them.
///
/// [`Model::exact`] is the real construction. A perturbed model differs in
/// exactly one coefficient; the independent oracles (`f_integral`, `f_term`,
/// `g_term`, ...) never go through a model.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Model {
    perturbation: Option<Perturbation>,
}

impl Model {
    pub fn exact() -> Model {
        Model::default()
    }

    pub fn perturbed(p: Perturbation) -> Model {
        Model {
            perturbation: Some(p),
        }
    }

    pub fn perturbation(&self) -> Option<&Perturbation> {
        self.perturbation.as_ref()
    }

    /// `c_{m,i,k}`, the coefficient of `x^{2p-2k+1} y^{2k}` in `f_i^m`.
    pub fn c_coeff(&self, idx: FamilyIndex, k: u32) -> Result<Rat> {
        let m = idx.m;
        if k > m {
            return Err(Error::IndexOutOfRange {
                name: "k",
                value: i64::from(k),
                range: format!("[0, {m}]"),
            });
        }
        let u = m - k;
        let base = Rat::frac(1, 2)
            * Rat::int(binomial(i64::from(m), i64::from(u))?)
            * Rat::sign_pow(i64::from(u))
            * beta_half(u, idx.i, m);
        match &self.perturbation {
            Some(p) if p.index == idx && p.k == k => Ok(base + &p.delta),
            _ => Ok(base),
        }
    }

    /// `sum_k c_{m,i,k} x^{2p-2k+1} y^{2k}`.
    pub fn f_from_coeffs(&self, idx: FamilyIndex) -> BiPoly {
        let p = idx.p();
        BiPoly::from_terms((0..=idx.m).map(|k| {
            let c = self.c_coeff(idx, k).expect("k in range");
            ((2 * p - 2 * k + 1, 2 * k), c)
        }))
    }

    /// The deformation `f~_i^m`:
    /// `sum_k c_{m,i,k} (x+p-k)_{2p-2k+1} (y+p-m)_k (y+m-p+k-1)_k`.
    pub fn f_tilde(&self, idx: FamilyIndex) -> BiPoly {
        let p = i64::from(idx.p());
        let m = i64::from(idx.m);
        (0..=idx.m)
            .map(|k| {
                let c = self.c_coeff(idx, k).expect("k in range");
                let kk = i64::from(k);
                let xs = ff_poly(Var::X, &Rat::int(p - kk), (2 * (p - kk) + 1) as u32);
                let y1 = ff_poly(Var::Y, &Rat::int(p - m), k);
                let y2 = ff_poly(Var::Y, &Rat::int(m - p + kk - 1), k);
                (&(&xs * &y1) * &y2).scale(&c)
            })
            .sum()
    }

    /// `V_{i,m} = f~_i^m(x, y) + f~_i^m(y, x)`.
    pub fn v_poly(&self, idx: FamilyIndex) -> BiPoly {
        let f = self.f_tilde(idx);
        &f + &f.swap()
    }

    /// `eta~_i^m = f~(x, y) d/dx + f~(y, x) d/dy`.
    pub fn eta_tilde(&self, idx: FamilyIndex) -> Derivation {
        Derivation::symmetric(self.f_tilde(idx))
    }
}

/// `f_i^m(x, y) = int_0^x t^{2i} (t^2 - x^2)^m (t^2 - y^2)^m dt`, computed by
/// expanding both binomials in `t^2` and integrating term by term.
pub fn f_integral(idx: FamilyIndex) -> BiPoly {
    let (i, m) = (idx.i, idx.m);
    let mut out = BiPoly::zero();
    for a in 0..=m {
        for b in 0..=m {
            let j = i + a + b;
            let coeff = Rat::int(binomial(i64::from(m), i64::from(a)).unwrap())
                * Rat::int(binomial(i64::from(m), i64::from(b)).unwrap())
                * Rat::sign_pow(i64::from(2 * m - a - b))
                / Rat::int(2 * i64::from(j) + 1);
            out.add_term(2 * (m - a) + 2 * j + 1, 2 * (m - b), &coeff);
        }
    }
    out
}

/// The summand `F_{i,m,u}`, so that `2 f~_i^m = sum_u F_{i,m,u}`.
pub fn f_term(i: u32, m: u32, u: u32) -> Result<BiPoly> {
    if u > m {
        return Err(Error::IndexOutOfRange {
            name: "u",
            value: i64::from(u),
            range: format!("[0, {m}]"),
        });
    }
    let (ii, mm, uu) = (i64::from(i), i64::from(m), i64::from(u));
    let scalar = Rat::int(binomial(mm, uu)?) * Rat::sign_pow(uu) * beta_half(u, i, m);
    let xs = ff_poly(Var::X, &Rat::int(mm + ii + uu), 2 * (m + i + u) + 1);
    let y1 = ff_poly(Var::Y, &Rat::int(mm + ii), m - u);
    let y2 = ff_poly(Var::Y, &Rat::int(-ii - uu - 1), m - u);
    Ok((&(&xs * &y1) * &y2).scale(&scalar))
}

/// Tail sum `S_{i,m,l} = sum_{l <= u <= m} F_{i,m,u}`, for `0 <= l <= m + 1`.
pub fn s_partial(i: u32, m: u32, l: u32) -> Result<BiPoly> {
    if l > m + 1 {
        return Err(Error::IndexOutOfRange {
            name: "l",
            value: i64::from(l),
            range: format!("[0, {}]", m + 1),
        });
    }
    (l..=m).map(|u| f_term(i, m, u)).sum()
}

/// Defining polynomial of `Cat(B2, m)`:
/// `(x+m)_{2m+1} (y+m)_{2m+1} (x+y+m)_{2m+1} (x-y+m)_{2m+1}`.
pub fn phi(m: u32) -> BiPoly {
    let shift = Rat::from(i64::from(m));
    let len = 2 * m + 1;
    hyperplane_families()
        .iter()
        .map(|form| ff_linear_poly(form, &shift, len))
        .fold(BiPoly::one(), |acc, f| &acc * &f)
}

/// Directions of the four hyperplane families: `x`, `y`, `x + y`, `x - y`.
pub fn hyperplane_families() -> [LinearForm; 4] {
    [
        LinearForm::x(),
        LinearForm::y(),
        LinearForm::x_plus_y(),
        LinearForm::x_minus_y(),
    ]
}

/// A polynomial vector field `coeff_x d/dx + coeff_y d/dy`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub coeff_x: BiPoly,
    pub coeff_y: BiPoly,
}

impl Derivation {
    pub fn new(coeff_x: BiPoly, coeff_y: BiPoly) -> Derivation {
        Derivation { coeff_x, coeff_y }
    }

    /// `f(x, y) d/dx + f(y, x) d/dy`.
    pub fn symmetric(f: BiPoly) -> Derivation {
        let swapped = f.swap();
        Derivation::new(f, swapped)
    }

    /// The derivation applied to a linear form: `a coeff_x + b coeff_y`.
    pub fn apply(&self, form: &LinearForm) -> BiPoly {
        let (a, b, _) = form.coefficients();
        &self.coeff_x.scale(&Rat::int(a)) + &self.coeff_y.scale(&Rat::int(b))
    }

    /// Determinant of the coefficient matrix of two derivations.
    pub fn saito_determinant(&self, other: &Derivation) -> BiPoly {
        &(&self.coeff_x * &other.coeff_y) - &(&self.coeff_y * &other.coeff_x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::bp_from_text;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    fn fi(i: u32, m: u32) -> FamilyIndex {
        FamilyIndex::new(i, m)
    }

    fn bp(s: &str) -> BiPoly {
        bp_from_text(s).unwrap()
    }

    #[test]
    fn c_coeff_examples() {
        let model = Model::exact();
        for i in 0..5 {
            assert_eq!(model.c_coeff(fi(i, 0), 0).unwrap(), r(1, 2 * i as i64 + 1));
        }
        assert_eq!(model.c_coeff(fi(0, 1), 0).unwrap(), r(-2, 15));
        assert_eq!(model.c_coeff(fi(0, 1), 1).unwrap(), r(2, 3));
        assert_eq!(model.c_coeff(fi(1, 1), 0).unwrap(), r(-2, 35));
        assert_eq!(model.c_coeff(fi(1, 1), 1).unwrap(), r(2, 15));
        assert!(model.c_coeff(fi(0, 1), 2).is_err());
    }

    #[test]
    fn perturbation_hits_one_coefficient() {
        let model = Model::perturbed(Perturbation {
            index: fi(0, 1),
            k: 1,
            delta: Rat::one(),
        });
        assert_eq!(model.c_coeff(fi(0, 1), 1).unwrap(), r(5, 3));
        assert_eq!(model.c_coeff(fi(0, 1), 0).unwrap(), r(-2, 15));
        assert_eq!(model.c_coeff(fi(1, 1), 1).unwrap(), r(2, 15));
    }

    #[test]
    fn integral_examples() {
        assert_eq!(f_integral(fi(0, 0)), BiPoly::x());
        assert_eq!(f_integral(fi(1, 0)), bp("1/3 * x^3"));
        assert_eq!(f_integral(fi(0, 1)), bp("-2/15 * x^5 + 2/3 * x^3 * y^2"));
    }

    #[test]
    fn from_coeffs_examples() {
        let model = Model::exact();
        assert_eq!(model.f_from_coeffs(fi(0, 0)), BiPoly::x());
        assert_eq!(
            model.f_from_coeffs(fi(0, 1)),
            bp("-2/15 * x^5 + 2/3 * x^3 * y^2")
        );
        assert_eq!(
            model.f_from_coeffs(fi(1, 1)),
            bp("-2/35 * x^7 + 2/15 * x^5 * y^2")
        );
    }

    #[test]
    fn f_tilde_examples() {
        let model = Model::exact();
        assert_eq!(model.f_tilde(fi(0, 0)), BiPoly::x());
        assert_eq!(model.f_tilde(fi(1, 0)), bp("1/3 * x^3 + -1/3 * x^1"));
        // p = 2: -(2/15)(x+2)_5 + (2/3)(x+1)_3 (y+1)(y-1)
        let want = &ff_poly(Var::X, &Rat::int(2), 5).scale(&r(-2, 15))
            + &(&(&ff_poly(Var::X, &Rat::one(), 3) * &ff_poly(Var::Y, &Rat::one(), 1))
                * &ff_poly(Var::Y, &Rat::int(-1), 1))
                .scale(&r(2, 3));
        assert_eq!(model.f_tilde(fi(0, 1)), want);
    }

    #[test]
    fn f_term_examples() {
        assert_eq!(f_term(0, 0, 0).unwrap(), BiPoly::x().scale(&Rat::int(2)));
        for i in 0..4u32 {
            let want = ff_poly(Var::X, &Rat::from(i64::from(i)), 2 * i + 1)
                .scale(&Rat::half_plus(i64::from(i)).recip().unwrap());
            assert_eq!(f_term(i, 0, 0).unwrap(), want, "i={i}");
        }
        let sum: BiPoly = (0..=1).map(|u| f_term(0, 1, u).unwrap()).sum();
        assert_eq!(sum, Model::exact().f_tilde(fi(0, 1)).scale(&Rat::int(2)));
        assert!(f_term(0, 1, 2).is_err());
    }

    #[test]
    fn s_partial_examples() {
        for (i, m) in [(0, 0), (1, 2), (3, 1)] {
            assert!(s_partial(i, m, m + 1).unwrap().is_zero());
        }
        assert_eq!(s_partial(0, 0, 0).unwrap(), BiPoly::x().scale(&Rat::int(2)));
        assert_eq!(s_partial(0, 1, 1).unwrap(), f_term(0, 1, 1).unwrap());
        assert!(s_partial(0, 1, 3).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(0), bp("1 * x^3 * y^1 + -1 * x^1 * y^3"));
        assert_eq!(phi(1).total_degree(), Some(12));
        for m in 0..=3 {
            let p = phi(m);
            for form in hyperplane_families() {
                assert!(crate::poly::is_divisible_by_ff(&p, &form, &Rat::zero(), 1));
            }
        }
    }

    #[test]
    fn derivation_application() {
        let eta = Model::exact().eta_tilde(fi(0, 0));
        // Euler derivation x d/dx + y d/dy
        assert_eq!(eta.coeff_x, BiPoly::x());
        assert_eq!(eta.coeff_y, BiPoly::y());
        assert_eq!(
            eta.apply(&LinearForm::x_minus_y()),
            &BiPoly::x() - &BiPoly::y()
        );
        assert_eq!(
            eta.apply(&LinearForm::x_plus_y().shifted(&Rat::int(7))),
            &BiPoly::x() + &BiPoly::y()
        );
    }
}
