//! Exact rationals, falling factorials with negative index, and the
//! half-integer Beta values used throughout the construction.

use catb2::rational::{beta_half, binomial, factorial, falling_factorial};
use catb2::Rat;

fn main() -> catb2::Result<()> {
    let a = Rat::frac(1, 2);
    let b: Rat = "-7/3".parse()?;
    println!("{a} + {b} = {}", &a + &b);
    println!("{a} * {b} = {}", &a * &b);
    println!("1/({b}) = {}", b.recip()?);

    // (alpha)_k for positive and negative k
    let alpha = Rat::half_plus(2);
    for k in -3..=3 {
        println!("({alpha})_{k} = {}", falling_factorial(&alpha, k)?);
    }
    // (alpha)_{-n} has poles at alpha = -1, ..., -n
    match falling_factorial(&Rat::int(-2), -2) {
        Ok(v) => println!("(-2)_(-2) = {v}"),
        Err(e) => println!("(-2)_(-2): {e}"),
    }

    println!("C(6,2) = {}, 10! = {}", binomial(6, 2)?, factorial(10));

    // m! / (m+i+u+1/2)_{m+1}
    for m in 0..=3 {
        let row: Vec<String> = (0..=3).map(|i| beta_half(0, i, m).to_string()).collect();
        println!("beta_half(0, i=0..3, m={m}) = [{}]", row.join(", "));
    }
    Ok(())
}
