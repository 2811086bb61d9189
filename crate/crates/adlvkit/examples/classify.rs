//! Stratum data for every top coweight of a small twisted case.

use adlvkit::adlv::Context;
use adlvkit::affine::BasicElement;
use adlvkit::rootdata::{fmt_vec, DatumSpec, RootDatum};

fn main() -> adlvkit::Result<()> {
    let spec: DatumSpec = "A3:sigma=2".parse()?;
    let d = RootDatum::build(&spec)?;
    let b = BasicElement::parse(&d, "id")?;
    let ctx = Context::new(&d, &[0, 1, 0], b)?;
    println!("{} mu=(0,1,0) dim={:?}", d.label, ctx.dim);
    for lam in ctx.window_nodes(3) {
        let r = ctx.classify(&lam)?;
        println!(
            "  {:<12} natural={:<12} |R|={} small={:?} flat={}",
            fmt_vec(&r.lambda),
            fmt_vec(&r.natural),
            r.r_set.len(),
            r.is_small,
            r.flat.as_deref().map(fmt_vec).unwrap_or_default()
        );
    }
    Ok(())
}
