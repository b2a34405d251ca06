//! Lascoux complexes at the cycle t: realized exact range versus the promised one.

use grassolve::fiber::LascouxReport;

fn main() -> Result<(), grassolve::error::Error> {
    for n in [4, 6, 8] {
        for j in 0..=n - 2 {
            let r = LascouxReport::compute(n, j, 0)?;
            println!(
                "N={n} j={j}: dims {:?}, homology {:?}, promised exact {:?}",
                r.dims, r.homology, r.promised
            );
            assert!(r.holds());
        }
    }
    Ok(())
}
