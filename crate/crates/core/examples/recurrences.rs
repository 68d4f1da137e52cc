//! The three-term recurrence in i, its closed-form tail sums, and the
//! symmetrized recurrence for V_{i,m}.

use catb2::catalan::{lemma1_check, m_closed, recurrence_check, theorem_v_recurrence_check};

fn main() -> catb2::Result<()> {
    println!("M_(1,1,0) = {}", m_closed(1, 1, 0)?);

    for i in 1..=3 {
        for m in 0..=2 {
            let ls: Vec<bool> = (0..=m + 1)
                .map(|l| lemma1_check(i, m, l).map(|r| r.passed))
                .collect::<catb2::Result<_>>()?;
            let p1 = recurrence_check(i, m)?;
            println!("i={i} m={m}: tail sums {ls:?}, recurrence {}", p1.passed);
        }
    }

    for (i, m) in [(0, 1), (1, 1), (0, 2), (2, 3)] {
        let r = theorem_v_recurrence_check(i, m)?;
        println!("V recurrence i={i} m={m}: {}", r.passed);
    }

    // i = 0 lies outside the recurrence
    if let Err(e) = recurrence_check(0, 1) {
        println!("recurrence at i=0: {e}");
    }
    Ok(())
}
