//! Three-term recurrence in `i` for the deformed polynomials, its tail-sum
//! form `M_{i,m,l}`, and the symmetrized recurrence for `V_{i,m}`.

use super::family::{s_partial, Model};
use super::report::{params, CheckReport};
use crate::error::{Error, Result};
use crate::poly::{ff_poly, BiPoly, Var};
use crate::rational::{beta_half, binomial, FamilyIndex, Rat};

/// `x^2 + y^2 - c`
fn radial_minus(c: Rat) -> BiPoly {
    BiPoly::from_terms([((2, 0), Rat::one()), ((0, 2), Rat::one()), ((0, 0), -c)])
}

/// `(2i - 1) / (2m + 2)`
fn lowering_factor(i: u32, m: u32) -> Rat {
    Rat::int(2 * i64::from(i) - 1) / Rat::int(2 * i64::from(m) + 2)
}

fn check_l(m: u32, l: u32) -> Result<()> {
    if l > m + 1 {
        return Err(Error::IndexOutOfRange {
            name: "l",
            value: i64::from(l),
            range: format!("[0, {}]", m + 1),
        });
    }
    Ok(())
}

/// `M_{i,m,l} = -2 S_{i+1,m,l} + (x^2 + y^2 - (i+m+1)^2 - i^2) S_{i,m,l}
///  - (2i-1)/(2m+2) S_{i-1,m+1,l+1}`.
pub fn m_combo(i: u32, m: u32, l: u32) -> Result<BiPoly> {
    if i == 0 {
        return Err(Error::IndexUndefined);
    }
    check_l(m, l)?;
    let (ii, mm) = (i64::from(i), i64::from(m));
    let q = radial_minus(Rat::int((ii + mm + 1).pow(2) + ii.pow(2)));
    let a = s_partial(i + 1, m, l)?.scale(&Rat::int(-2));
    let b = &q * &s_partial(i, m, l)?;
    let c = s_partial(i - 1, m + 1, l + 1)?.scale(&lowering_factor(i, m));
    Ok(&(&a + &b) - &c)
}

/// Closed form of `M_{i,m,l}`:
/// `C(m,l) (-1)^l m!/(m+i+l+1/2)_{m+1} {y^2 + l(2m+2i+l+2) - i^2}
///  (x+m+i+l)_{2m+2i+2l+1} (y+m+i)_{m-l} (y-i-l-1)_{m-l}`.
pub fn m_closed(i: u32, m: u32, l: u32) -> Result<BiPoly> {
    check_l(m, l)?;
    if l == m + 1 {
        // binomial(m, m+1) = 0
        return Ok(BiPoly::zero());
    }
    let (ii, mm, ll) = (i64::from(i), i64::from(m), i64::from(l));
    let scalar = Rat::int(binomial(mm, ll)?) * Rat::sign_pow(ll) * beta_half(l, i, m);
    let bracket = BiPoly::from_terms([
        ((0, 2), Rat::one()),
        ((0, 0), Rat::int(ll * (2 * mm + 2 * ii + ll + 2) - ii * ii)),
    ]);
    let xs = ff_poly(Var::X, &Rat::int(mm + ii + ll), 2 * (m + i + l) + 1);
    let y1 = ff_poly(Var::Y, &Rat::int(mm + ii), m - l);
    let y2 = ff_poly(Var::Y, &Rat::int(-ii - ll - 1), m - l);
    Ok((&(&(&bracket * &xs) * &y1) * &y2).scale(&scalar))
}

/// `M_combo(i, m, l) == M_closed(i, m, l)`.
pub fn lemma1_check(i: u32, m: u32, l: u32) -> Result<CheckReport> {
    let lhs = m_combo(i, m, l)?;
    let rhs = m_closed(i, m, l)?;
    Ok(CheckReport::compare(
        "lemma1",
        params(&[("i", i.into()), ("m", m.into()), ("l", l.into())]),
        &lhs,
        &rhs,
    ))
}

impl Model {
    /// `(2i-1)/(2m+2) f~_{i-1}^{m+1} = (x^2+y^2-(i+m+1)^2-i^2) f~_i^m - 2 f~_{i+1}^m`.
    pub fn recurrence_check(&self, i: u32, m: u32) -> Result<CheckReport> {
        if i == 0 {
            return Err(Error::IndexUndefined);
        }
        let (ii, mm) = (i64::from(i), i64::from(m));
        let lhs = self
            .f_tilde(FamilyIndex::new(i - 1, m + 1))
            .scale(&lowering_factor(i, m));
        let q = radial_minus(Rat::int((ii + mm + 1).pow(2) + ii.pow(2)));
        let rhs = &(&q * &self.f_tilde(FamilyIndex::new(i, m)))
            - &self.f_tilde(FamilyIndex::new(i + 1, m)).scale(&Rat::int(2));
        Ok(CheckReport::compare(
            "prop1",
            params(&[("i", ii), ("m", mm)]),
            &lhs,
            &rhs,
        ))
    }

    /// `(2i+1)/(2m) V_{i,m} = (x^2+y^2-(i+m+1)^2-(i+1)^2) V_{i+1,m-1} - 2 V_{i+2,m-1}`.
    pub fn theorem_v_recurrence_check(&self, i: u32, m: u32) -> Result<CheckReport> {
        if m == 0 {
            return Err(Error::IndexOutOfRange {
                name: "m",
                value: 0,
                range: "[1, inf)".into(),
            });
        }
        let (ii, mm) = (i64::from(i), i64::from(m));
        let factor = Rat::int(2 * ii + 1) / Rat::int(2 * mm);
        let lhs = self.v_poly(FamilyIndex::new(i, m)).scale(&factor);
        let q = radial_minus(Rat::int((ii + mm + 1).pow(2) + (ii + 1).pow(2)));
        let rhs = &(&q * &self.v_poly(FamilyIndex::new(i + 1, m - 1)))
            - &self
                .v_poly(FamilyIndex::new(i + 2, m - 1))
                .scale(&Rat::int(2));
        Ok(CheckReport::compare(
            "v-recurrence",
            params(&[("i", ii), ("m", mm)]),
            &lhs,
            &rhs,
        ))
    }
}

pub fn recurrence_check(i: u32, m: u32) -> Result<CheckReport> {
    Model::exact().recurrence_check(i, m)
}

pub fn theorem_v_recurrence_check(i: u32, m: u32) -> Result<CheckReport> {
    Model::exact().theorem_v_recurrence_check(i, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::family::{f_term, Perturbation};

    #[test]
    fn m_vanishes_past_the_last_summand() {
        assert!(m_combo(1, 0, 1).unwrap().is_zero());
        for (i, m) in [(0, 0), (1, 2), (3, 3)] {
            assert!(m_closed(i, m, m + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn m_combo_matches_closed_form() {
        assert_eq!(m_combo(1, 0, 0).unwrap(), m_closed(1, 0, 0).unwrap());
        assert_eq!(m_combo(2, 1, 1).unwrap(), m_closed(2, 1, 1).unwrap());
    }

    #[test]
    fn m_at_l_zero_equals_lowered_summand() {
        // M_{i,m,0} = (2i-1)/(2m+2) F_{i-1,m+1,0}
        for i in 1..=3 {
            for m in 0..=2 {
                let want = f_term(i - 1, m + 1, 0)
                    .unwrap()
                    .scale(&lowering_factor(i, m));
                assert_eq!(m_closed(i, m, 0).unwrap(), want, "i={i} m={m}");
            }
        }
    }

    #[test]
    fn m_closed_l_zero_has_y_squared_factor_for_i_zero() {
        // {y^2 + 0 - 0} = y^2
        let p = m_closed(0, 1, 0).unwrap();
        let d = crate::poly::divrem_linear(&p, &crate::poly::LinearForm::y());
        assert!(d.remainder.is_zero());
        let d2 = crate::poly::divrem_linear(&d.quotient, &crate::poly::LinearForm::y());
        assert!(d2.remainder.is_zero());
    }

    #[test]
    fn index_errors() {
        assert_eq!(m_combo(0, 1, 0), Err(Error::IndexUndefined));
        assert!(m_combo(1, 1, 3).is_err());
        assert!(m_closed(1, 1, 3).is_err());
        assert_eq!(recurrence_check(0, 1), Err(Error::IndexUndefined));
        assert!(theorem_v_recurrence_check(0, 0).is_err());
    }

    #[test]
    fn recurrence_examples() {
        assert!(recurrence_check(1, 0).unwrap().passed);
        assert!(recurrence_check(2, 1).unwrap().passed);
        for (i, m) in [(0, 1), (1, 1), (0, 2)] {
            assert!(
                theorem_v_recurrence_check(i, m).unwrap().passed,
                "i={i} m={m}"
            );
        }
    }

    #[test]
    fn recurrence_detects_perturbed_coefficient() {
        let model = Model::perturbed(Perturbation {
            index: FamilyIndex::new(1, 0),
            k: 0,
            delta: Rat::one(),
        });
        let rep = model.recurrence_check(1, 0).unwrap();
        assert!(!rep.passed);
        let w = rep.witness.unwrap();
        assert!(!crate::poly::bp_from_text(&w).unwrap().is_zero());
    }
}
