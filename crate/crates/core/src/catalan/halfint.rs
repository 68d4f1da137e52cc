//! Values of the deformed polynomials on the lines `x = -1/2 - k`.
//!
//! Everything here is univariate in `y` (or in the auxiliary `z` for the
//! summation identity). Lengths of falling factorials can go negative once
//! `k > m`, so intermediate values are [`UniRatFunc`]s compared by
//! cross-multiplication.

use super::family::Model;
use super::report::{params, CheckReport};
use crate::error::{Error, Result};
use crate::poly::{bp_to_text, uni_ff, uni_ff_poly, UniPoly, UniRatFunc, Var};
use crate::rational::{falling_factorial, FamilyIndex, Rat};

fn ff(alpha: Rat, k: i64) -> Result<Rat> {
    falling_factorial(&alpha, k)
}

fn half(n: i64) -> Rat {
    Rat::half_plus(n)
}

fn uni_witness(p: &UniPoly, v: Var) -> String {
    bp_to_text(&p.embed(v))
}

/// Summation identity in `z`, for `a, b >= 0`:
/// `sum_{t>=a} (b+t)_{2t} / (z+t)_{2t+2} = (b+a)_{2a} / ((z+b)(z+a-1)_{2a}(z-b-1))`.
///
/// Terms with `t > b` vanish, so the sum stops at `b`. Both sides are compared
/// twice: as rational functions, and as polynomials after multiplying through
/// by `(z+b)_{2b+2}`. A failure witness is rendered with `z` written as `x`.
pub fn lemma2_check(a: u32, b: u32) -> CheckReport {
    let (aa, bb) = (i64::from(a), i64::from(b));
    let p = params(&[("a", aa), ("b", bb)]);
    let coeff = |t: i64| ff(Rat::int(bb + t), 2 * t).expect("nonnegative length");

    let rhs_num = coeff(aa);
    let rhs_den = &(&UniPoly::linear(Rat::int(bb)) * &uni_ff_poly(&Rat::int(aa - 1), 2 * a))
        * &UniPoly::linear(Rat::int(-bb - 1));

    let lhs_rf: UniRatFunc = (aa..=bb)
        .map(|t| {
            UniRatFunc::new(
                UniPoly::constant(coeff(t)),
                uni_ff_poly(&Rat::int(t), 2 * t as u32 + 2),
            )
            .expect("monic denominator")
        })
        .sum();
    let rhs_rf = UniRatFunc::new(UniPoly::constant(rhs_num.clone()), rhs_den.clone())
        .expect("monic denominator");
    let rf_diff = lhs_rf.cross_difference(&rhs_rf);
    if !rf_diff.is_zero() {
        return CheckReport::fail("lemma2", p, uni_witness(&rf_diff, Var::X));
    }

    if a > b {
        // empty sum; (b+a)_{2a} contains the factor 0
        return if rhs_num.is_zero() {
            CheckReport::pass("lemma2", p)
        } else {
            CheckReport::fail("lemma2", p, rhs_num.to_string())
        };
    }

    let cleared = uni_ff_poly(&Rat::int(bb), 2 * b + 2);
    let mut lhs = UniPoly::zero();
    for t in aa..=bb {
        let cofactor = cleared
            .exact_div(&uni_ff_poly(&Rat::int(t), 2 * t as u32 + 2))
            .expect("nonzero divisor")
            .expect("(z+t)_{2t+2} divides (z+b)_{2b+2} for t <= b");
        lhs = &lhs + &cofactor.scale(&coeff(t));
    }
    let rhs = cleared
        .exact_div(&rhs_den)
        .expect("nonzero divisor")
        .expect("right-hand denominator divides (z+b)_{2b+2} for a <= b")
        .scale(&rhs_num);
    let diff = &lhs - &rhs;
    if diff.is_zero() {
        CheckReport::pass("lemma2", p)
    } else {
        CheckReport::fail("lemma2", p, uni_witness(&diff, Var::X))
    }
}

fn out_of_range(name: &'static str, value: u32, hi: u32) -> Error {
    Error::IndexOutOfRange {
        name,
        value: i64::from(value),
        range: format!("[0, {hi}]"),
    }
}

/// The summand `G_{i,m,k,t}` as a rational function of `y`, for `t <= k`:
///
/// `-(i-1/2)_{2i+m-k} (y+m-k-1/2)_{2m-2k} (m+t)_m (k+t)_{2t} (i+2m+t+1/2)_t
///  (i+m+k+1/2)_{k-t} (y+m+k+1/2)_{k-t} (y-m-t-3/2)_{k-t}`.
pub fn g_term(i: u32, m: u32, k: u32, t: u32) -> Result<UniRatFunc> {
    if t > k {
        return Err(out_of_range("t", t, k));
    }
    let (i, m, k, t) = (i64::from(i), i64::from(m), i64::from(k), i64::from(t));
    let scalar = -ff(half(i - 1), 2 * i + m - k)?
        * ff(Rat::int(m + t), m)?
        * ff(Rat::int(k + t), 2 * t)?
        * ff(half(i + 2 * m + t), t)?
        * ff(half(i + m + k), k - t)?;
    if scalar.is_zero() {
        return Ok(UniRatFunc::zero());
    }
    let poly = &uni_ff_poly(&half(m + k), (k - t) as u32)
        * &uni_ff_poly(&-half(m + t + 1), (k - t) as u32);
    Ok(uni_ff(&half(m - k - 1), 2 * m - 2 * k)
        .mul_poly(&poly)
        .scale(&scalar))
}

/// `U_{i,m,k,l} = sum_{t=l}^{k} G_{i,m,k,t}`, for `0 <= l <= k + 1`.
pub fn u_partial(i: u32, m: u32, k: u32, l: u32) -> Result<UniRatFunc> {
    if l > k + 1 {
        return Err(out_of_range("l", l, k + 1));
    }
    (l..=k).map(|t| g_term(i, m, k, t)).sum()
}

/// `(k+1/2)^2 + y^2 - (i+m+1)^2 - i^2`
fn shifted_radial(i: u32, m: u32, k: u32) -> UniPoly {
    let (i, m) = (i64::from(i), i64::from(m));
    let c = half(i64::from(k)).pow(2) - Rat::int((i + m + 1).pow(2) + i * i);
    &UniPoly::monomial(Rat::one(), 2) + &UniPoly::constant(c)
}

/// `N_{i,m,k,l} = -2 U_{i+1,m,k,l} + {(k+1/2)^2 + y^2 - (i+m+1)^2 - i^2} U_{i,m,k,l}
///  - (2i-1)/(2m+2) U_{i-1,m+1,k,l}`, for `i >= 1`.
pub fn n_combo(i: u32, m: u32, k: u32, l: u32) -> Result<UniRatFunc> {
    if i == 0 {
        return Err(Error::IndexUndefined);
    }
    let lowering = Rat::int(2 * i64::from(i) - 1) / Rat::int(2 * i64::from(m) + 2);
    let a = u_partial(i + 1, m, k, l)?.scale(&Rat::int(-2));
    let b = u_partial(i, m, k, l)?.mul_poly(&shifted_radial(i, m, k));
    let c = u_partial(i - 1, m + 1, k, l)?.scale(&lowering);
    Ok(&(&a + &b) - &c)
}

/// Closed form of `N_{i,m,k,l}`:
///
/// `(m+l)_{m+1}/(m+1) (k+l)_{2l} (i-1/2)_{2i+m-k} (i+m+k+1/2)_{k-l} (i+2m+l+1/2)_{l-1}
///  (y+m+k+1/2)_{k-l} (y+m-k-1/2)_{2m-2k} (y-m-l-3/2)_{k-l}
///  {(y^2-i^2)(i+3m+l+5/2) + (i+m+l+1/2)(i+m-k+1/2)(i+m+k+3/2)}`.
pub fn n_closed(i: u32, m: u32, k: u32, l: u32) -> Result<UniRatFunc> {
    if l > k + 1 {
        return Err(out_of_range("l", l, k + 1));
    }
    let (i, m, k, l) = (i64::from(i), i64::from(m), i64::from(k), i64::from(l));
    let scalar = ff(Rat::int(m + l), m + 1)? / Rat::int(m + 1)
        * ff(Rat::int(k + l), 2 * l)?
        * ff(half(i - 1), 2 * i + m - k)?
        * ff(half(i + m + k), k - l)?
        * ff(half(i + 2 * m + l), l - 1)?;
    if scalar.is_zero() {
        return Ok(UniRatFunc::zero());
    }
    let y2_minus_i2 = &UniPoly::monomial(Rat::one(), 2) + &UniPoly::constant(-Rat::int(i * i));
    let brace = &y2_minus_i2.scale(&half(i + 3 * m + l + 2))
        + &UniPoly::constant(half(i + m + l) * half(i + m - k) * half(i + m + k + 1));
    let factors = uni_ff(&half(m + k), k - l)
        * uni_ff(&half(m - k - 1), 2 * m - 2 * k)
        * uni_ff(&-half(m + l + 1), k - l);
    Ok(factors.mul_poly(&brace).scale(&scalar))
}

/// `N_combo(i, m, k, l) == N_closed(i, m, k, l)` as rational functions of `y`.
pub fn lemma3_check(i: u32, m: u32, k: u32, l: u32) -> Result<CheckReport> {
    let lhs = n_combo(i, m, k, l)?;
    let rhs = n_closed(i, m, k, l)?;
    let p = params(&[
        ("i", i.into()),
        ("m", m.into()),
        ("k", k.into()),
        ("l", l.into()),
    ]);
    let diff = lhs.cross_difference(&rhs);
    Ok(if diff.is_zero() {
        CheckReport::pass("lemma3", p)
    } else {
        CheckReport::fail("lemma3", p, uni_witness(&diff, Var::Y))
    })
}

impl Model {
    /// `T_{i,m,k} = 2 f~_i^m(-1/2 - k, y)`.
    pub fn t_value(&self, i: u32, m: u32, k: u32) -> UniPoly {
        self.f_tilde(FamilyIndex::new(i, m))
            .substitute_const(Var::X, &-half(i64::from(k)))
            .scale(&Rat::int(2))
    }

    /// `T_{i,m,k} == U_{i,m,k,0}`.
    pub fn prop2_check(&self, i: u32, m: u32, k: u32) -> Result<CheckReport> {
        let lhs = UniRatFunc::from_poly(self.t_value(i, m, k));
        let rhs = u_partial(i, m, k, 0)?;
        let p = params(&[("i", i.into()), ("m", m.into()), ("k", k.into())]);
        let diff = lhs.cross_difference(&rhs);
        Ok(if diff.is_zero() {
            CheckReport::pass("prop2", p)
        } else {
            CheckReport::fail("prop2", p, uni_witness(&diff, Var::Y))
        })
    }
}

pub fn prop2_check(i: u32, m: u32, k: u32) -> Result<CheckReport> {
    Model::exact().prop2_check(i, m, k)
}
