//! Sparse bivariate polynomials: arithmetic, substitution along a line,
//! division by linear forms, and the text and JSON formats.

use catb2::poly::{
    bp_from_json, bp_from_text, bp_to_json, bp_to_text, divrem_linear, ff_linear_poly,
    is_divisible_by_ff, restrict_to,
};
use catb2::{BiPoly, LinearForm, Rat, Var};

fn main() -> catb2::Result<()> {
    let x = BiPoly::x();
    let y = BiPoly::y();
    let p = &(&x * &x) - &(&y * &y);
    println!("p = {p}");
    println!("p(3, 1) = {}", p.eval(&Rat::int(3), &Rat::int(1)));
    println!(
        "swap(x^3 y) = {}",
        BiPoly::monomial(Rat::one(), 3, 1).swap()
    );

    // p = (x - y)(x + y)
    let d = divrem_linear(&p, &LinearForm::x_minus_y());
    println!(
        "p / (x - y) = {}, remainder {}",
        d.quotient,
        d.remainder.embed(d.remainder_var)
    );
    println!(
        "p restricted to x = y: {}",
        restrict_to(&p, &LinearForm::x_minus_y()).embed(Var::Y)
    );

    // (x+y+1)_3 = (x+y+1)(x+y)(x+y-1)
    let ff = ff_linear_poly(&LinearForm::x_plus_y(), &Rat::one(), 3);
    println!("(x+y+1)_3 = {ff}");
    let q = &ff * &(&x + &BiPoly::constant(Rat::frac(1, 2)));
    println!(
        "divisible by (x+y+1)_3: {}, by (x+y+2)_4: {}",
        is_divisible_by_ff(&q, &LinearForm::x_plus_y(), &Rat::one(), 3),
        is_divisible_by_ff(&q, &LinearForm::x_plus_y(), &Rat::int(2), 4)
    );

    let text = bp_to_text(&q);
    let json = bp_to_json(&q);
    println!("text: {text}");
    println!("json: {json}");
    assert_eq!(bp_from_text(&text)?, q);
    assert_eq!(bp_from_json(&json)?, q);

    match bp_from_text("1 * x^2 + oops") {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse error: {e}"),
    }
    Ok(())
}
