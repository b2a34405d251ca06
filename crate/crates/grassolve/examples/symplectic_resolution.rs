//! Terms of the Tate resolution on SpGr(2,N), its subcomplex B and the quotient Q.

use grassolve::complex::{kernel_rank_b, quotient_q, resolution_spgr4, subcomplex_b, tate_spgr};

fn main() -> Result<(), grassolve::error::Error> {
    println!("resolution of the diagonal of SpGr(2,4):");
    print!("{}", resolution_spgr4()?.render_ascii());
    for n in [6, 8] {
        println!("\nB for N = {n} (kernel rank {}):", kernel_rank_b(n)?);
        print!("{}", subcomplex_b(n)?.render_ascii());
    }
    println!("\nD for N = 6 through degree 8:");
    print!("{}", tate_spgr(6, 8)?.render_ascii());
    println!("\nQ for N = 6 through degree 8:");
    print!("{}", quotient_q(6, 8)?.render_ascii());
    Ok(())
}
