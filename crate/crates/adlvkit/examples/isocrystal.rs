//! Newton and Kottwitz invariants, defect, and the best integral approximation.

use adlvkit::affine::BasicElement;
use adlvkit::isocrystal::{adlv_dim, defect, kottwitz, newton, ul_best};
use adlvkit::rootdata::{fmt_vec, DatumSpec, RootDatum};

fn main() -> adlvkit::Result<()> {
    for (label, b, mu) in [("A3:gl", "2", vec![1, 1, 0, 0]), ("A3:sigma=2", "id", vec![0, 1, 0]), ("C2", "w2", vec![0, 1])] {
        let spec: DatumSpec = label.parse()?;
        let d = RootDatum::build(&spec)?;
        let b = BasicElement::parse(&d, b)?;
        let ul = ul_best(&d, &b)?;
        println!(
            "{label:<11} nu={} kappa={:?} defect={} ul={} dim X_mu(b)={}",
            fmt_vec(&newton(&d, &b.b)),
            kottwitz(&d, &b.b),
            defect(&d, &b),
            fmt_vec(&ul.rep),
            adlv_dim(&d, &mu, &b)?
        );
    }
    Ok(())
}
