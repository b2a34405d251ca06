//! Cohomology of homogeneous bundles on Gr(2,4) and on its hyperplane section X.

use grassolve::bott::{cohomology_gr, cohomology_x, Bundle};
use grassolve::partitions::Partition;

fn main() -> Result<(), grassolve::error::Error> {
    let one = Partition::new(vec![1])?;
    let o = Bundle::trivial(2, 4)?;
    let s = Bundle::schur_s(2, 4, &one)?;
    let perp = Bundle::schur_perp(2, 4, &one)?;
    let cases = [
        ("O", o.clone()),
        ("O(-1)", o.twist(-1)),
        ("O(-2)", o.twist(-2)),
        ("O(1)", o.twist(1)),
        ("S", s.clone()),
        ("S*", s.dual()),
        ("S ⊗ S*", s.tensor(&s.dual())?),
        ("S^⊥", perp),
    ];
    println!("{:<8} | {:<24} | on X", "bundle", "on Gr(2,4)");
    for (name, b) in &cases {
        println!(
            "{name:<8} | {:<24} | {}",
            cohomology_gr(b)?.to_string(),
            cohomology_x(b)?
        );
    }
    Ok(())
}
