//! The Koszul resolution of the diagonal of Gr(2,5) and its rank identity.

use grassolve::complex::{binomial, koszul_gr};

fn main() -> Result<(), grassolve::error::Error> {
    let c = koszul_gr(2, 5)?;
    print!("{}", c.render_ascii());
    for i in 0..=c.top_degree() {
        assert_eq!(c.rank(i), binomial(6, i));
    }
    println!("ranks are C(6, i) in every degree");
    Ok(())
}
