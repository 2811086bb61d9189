//! Minimal Levi subsets and their uniqueness for every basic class.

use adlvkit::appendixb::{certify_all, Mode};
use adlvkit::rootdata::DatumSpec;

fn main() -> adlvkit::Result<()> {
    for label in ["A5", "C4", "D6", "D5:sigma=2", "E6", "E7"] {
        let spec: DatumSpec = label.parse()?;
        for c in certify_all(&spec, Mode::Pruned)? {
            println!(
                "{label:<11} J={:?} expected={:?} candidates={} verdict={}",
                c.j, c.expected_j, c.report.candidates, c.verdict
            );
        }
    }
    Ok(())
}
