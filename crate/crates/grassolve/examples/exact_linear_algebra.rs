//! Exact rational matrices and the homology of a small complex.

use grassolve::exactlin::{MatrixComplex, RatMatrix};

fn main() -> Result<(), grassolve::error::Error> {
    // the Koszul complex of two variables at the point (1, 0): 0 → K → K² → K → 0
    let d2 = RatMatrix::from_i64_rows(&[vec![0], vec![1]])?;
    let d1 = RatMatrix::from_i64_rows(&[vec![1, 0]])?;
    let c = MatrixComplex::new(0, vec![1, 2, 1], vec![d1, d2])?;
    println!(
        "dims {:?}, ranks {:?}, homology {:?}",
        c.dims(),
        c.ranks(),
        c.homology_dims()
    );
    let a = RatMatrix::from_i64_rows(&[vec![2, 1], vec![1, 1]])?;
    let inv = a.inverse().expect("invertible");
    println!("inverse of {:?} is {:?}", a.to_strings(), inv.to_strings());
    Ok(())
}
