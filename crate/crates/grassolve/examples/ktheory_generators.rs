//! K-theory generators of Gr(2,4) and SpGr(2,4) with their pairing matrices, and the
//! Euler identity of the resolutions by Schur functors.

use grassolve::bott::Bundle;
use grassolve::ktheory::{
    euler_characteristic_sum, ext_table_spgr4, pairing_matrix_gr, resolution_coeffs,
};
use grassolve::partitions::Partition;

fn main() -> Result<(), grassolve::error::Error> {
    let m = pairing_matrix_gr(2, 4)?;
    print!("{m}");
    println!("unitriangular: {}\n", m.is_unitriangular());
    let t = ext_table_spgr4()?;
    print!("{}", t.hom_matrix());
    println!("exceptional: {}\n", t.is_exceptional());
    for parts in [vec![], vec![1], vec![1, 1], vec![2, 2]] {
        let gamma = Partition::new(parts)?;
        let f = Bundle::schur_s_dual(2, 4, &gamma)?;
        match resolution_coeffs(&f) {
            Ok(r) => println!(
                "Σ^{gamma}S*: coefficients {:?}, rank {}",
                r.coeffs, r.euler_rank
            ),
            Err(e) => println!(
                "Σ^{gamma}S*: {e}; χ-sum gives rank {}",
                euler_characteristic_sum(&f)?
            ),
        }
    }
    Ok(())
}
