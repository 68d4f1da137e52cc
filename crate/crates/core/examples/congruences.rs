//! Half-integer evaluations and the congruences modulo the hyperplane
//! products, with the constants A and B extracted from each cell.

use catb2::catalan::{
    lemma2_check, lemma3_check, n_closed, prop2_check, prop3_check, theorem_check,
};
use catb2::Var;

fn main() -> catb2::Result<()> {
    let lemma2_ok = (0..=4).all(|a| (0..=4).all(|b| lemma2_check(a, b).passed));
    println!("half-integer Beta sums (a, b <= 4): {lemma2_ok}");

    let n = n_closed(1, 1, 1, 1)?;
    println!(
        "N_(1,1,1,1) = ({}) / ({})",
        n.numer().embed(Var::X),
        n.denom().embed(Var::X)
    );
    let mut n3 = 0;
    for k in 0..=3 {
        for l in 0..=k + 1 {
            n3 += usize::from(lemma3_check(1, 1, k, l)?.passed);
        }
    }
    println!("tail-sum identities at i=1 m=1 passing: {n3}/14");

    for m in 0..=2 {
        let ks: Vec<bool> = (0..=2 * m + 2)
            .map(|k| prop2_check(1, m, k).map(|r| r.passed))
            .collect::<catb2::Result<_>>()?;
        println!("factorization at i=1 m={m}, k=0..{}: {ks:?}", 2 * m + 2);
    }

    println!("{:>3} {:>3} {:>12} {:>12} theorem", "i", "m", "A", "B");
    for m in 0..=3 {
        for i in 0..=3 {
            let r = prop3_check(i, m);
            let show = |k| r.value(k).map_or("-".to_string(), |v| v.to_string());
            println!(
                "{i:>3} {m:>3} {:>12} {:>12} {}",
                show("A"),
                show("B"),
                theorem_check(i, m).passed
            );
        }
    }
    Ok(())
}
