//! Homology of D, B and Q restricted to a point of the diagonal, and the split of Q.

use grassolve::fiber::{split_blocks, ComponentFiber, Which};

fn main() -> Result<(), grassolve::error::Error> {
    for n in [4, 6, 8] {
        let top = 2 * n - 5;
        let fiber = ComponentFiber::new(n, top + 1)?;
        println!("N = {n}");
        for which in [Which::D, Which::B, Which::Q] {
            println!(
                "  H({which:?}) in degrees 0..={top}: {:?}",
                fiber.homology(which, 0..=top)?
            );
        }
        for block in split_blocks(n)? {
            let label = block
                .label
                .map_or_else(|| "mixed".to_string(), |l| l.to_string());
            println!("  block {label}: dims {:?}", block.dims);
        }
    }
    Ok(())
}
