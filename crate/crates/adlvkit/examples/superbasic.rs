//! Superbasic tables for a product of two copies of GL_3.

use adlvkit::adlv::superbasic::{lambda_mn, Superbasic};
use adlvkit::rootdata::fmt_vec;

fn main() -> adlvkit::Result<()> {
    let sb = Superbasic::new(3, 2, 2)?;
    let mu = [1, 0, 0, 1, 0, 0];
    println!("n=3 d=2 m=2, lambda_(2,3) = {}", fmt_vec(&lambda_mn(2, 3)));
    let ctx = sb.context(&mu)?;
    for lam in sb.enumerate(&mu) {
        let t = sb.table_in(&ctx, &lam)?;
        if !t.is_top {
            continue;
        }
        let rows: Vec<String> = t.lambda.iter().map(|r| fmt_vec(r)).collect();
        let flat: Vec<String> = t.flat.iter().map(|r| fmt_vec(r)).collect();
        println!("  lambda {} flat {} lengths {:?} dim {}", rows.join(" "), flat.join(" "), t.lengths, t.dim_value);
    }
    Ok(())
}
