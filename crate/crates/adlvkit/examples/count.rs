//! Count orbits of top strata and compare with a crystal weight multiplicity.

use adlvkit::adlv::Context;
use adlvkit::affine::BasicElement;
use adlvkit::crystal::{crystal_generate, DEFAULT_CAP};
use adlvkit::isocrystal::ul_best;
use adlvkit::rootdata::{fmt_vec, DatumSpec, RootDatum};

fn main() -> adlvkit::Result<()> {
    for (label, b, mu) in [
        ("A1:gl", "w1", vec![1, 0]),
        ("A2:gl:d=2", "3", vec![1, 0, 0, 1, 1, 0]),
        ("A3:sigma=2", "id", vec![0, 1, 0]),
        ("D4", "w1", vec![1, 0, 0, 0]),
    ] {
        let spec: DatumSpec = label.parse()?;
        let d = RootDatum::build(&spec)?;
        let b = BasicElement::parse(&d, b)?;
        let ctx = Context::new(&d, &mu, b.clone())?;
        let cp = ctx.count_top_classes(None)?;
        let ul = ul_best(&d, &b)?;
        let crystal = crystal_generate(&d, &mu, DEFAULT_CAP)?.weight_mult_class(&d, &ul.rep);
        println!(
            "{label:<11} mu={:<16} classes={} crystal={} window counts {:?}",
            fmt_vec(&mu),
            cp.classes,
            crystal,
            cp.window_counts
        );
    }
    Ok(())
}
