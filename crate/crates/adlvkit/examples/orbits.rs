//! Twisted root orbits and their longest elements.

use adlvkit::affine::BasicElement;
use adlvkit::rootdata::{DatumSpec, RootDatum};

fn main() -> adlvkit::Result<()> {
    let spec: DatumSpec = "A3:gl".parse()?;
    let d = RootDatum::build(&spec)?;
    let b = BasicElement::parse(&d, "2")?;
    for a in d.roots() {
        let od = b.orbit_data(&d, a);
        if od.seed != *od.root_orbit.iter().min().unwrap() {
            continue;
        }
        let coeffs: Vec<_> = od.root_orbit.iter().map(|&x| d.coeffs(x).to_vec()).collect();
        let longest = od.longest.as_ref().map(|x| x.display(&d).to_string()).unwrap_or_else(|| "-".into());
        println!("{coeffs:?} finite={} {:?} longest={longest}", od.finite, od.case);
    }
    Ok(())
}
