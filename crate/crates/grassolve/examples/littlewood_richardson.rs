//! Tensor products of Schur functors and their dimensions.

use grassolve::partitions::{lr_tensor, schur_dim, Partition};

fn main() -> Result<(), grassolve::error::Error> {
    let a = Partition::new(vec![2, 1])?;
    let b = Partition::new(vec![1, 1])?;
    for m in [2, 3, 4] {
        let product = lr_tensor(&a, &b, m);
        let terms: Vec<String> = product.iter().map(|(nu, c)| format!("{c}·{nu}")).collect();
        let total: u64 = product.iter().map(|(nu, c)| c * schur_dim(nu, m)).sum();
        println!(
            "GL_{m}: {a} ⊗ {b} = {}   (dim {} · {} = {total})",
            terms.join(" + "),
            schur_dim(&a, m),
            schur_dim(&b, m)
        );
    }
    Ok(())
}
