//! Perturbs a single coefficient c_{m,i,k} and shows which checks notice,
//! along with the nonzero witness each failing check reports.

use catb2::catalan::{Model, Perturbation};
use catb2::sweep::{render, run_verify, Format, IndexRange, Outcome, SweepConfig};
use catb2::{FamilyIndex, Rat};

fn main() -> catb2::Result<()> {
    let perturbation = Perturbation {
        index: FamilyIndex::new(1, 1),
        k: 1,
        delta: Rat::frac(1, 7),
    };
    let cfg = SweepConfig {
        i_range: IndexRange::new(0, 2)?,
        m_range: IndexRange::new(0, 2)?,
        model: Model::perturbed(perturbation),
        ..SweepConfig::default()
    };
    let outcomes = run_verify(&cfg)?;
    let failed: Vec<Outcome> = outcomes.into_iter().filter(Outcome::failed).collect();
    println!(
        "{} failing cells after perturbing c_(1,1,1) by 1/7:",
        failed.len()
    );
    print!("{}", render(&failed, Format::Text));
    assert!(!failed.is_empty());
    Ok(())
}
