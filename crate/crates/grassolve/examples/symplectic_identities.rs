//! Symplectic group computations: random elements, isotropy families and their limits,
//! the parabolic action on η, and the two-form identity on SpGr(2,4).

use grassolve::fiber::theta_identity_check;
use grassolve::symplectic::{
    limit_check, parabolic_eta_check, random_symplectic, z_invariance, IsotropyCase,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), grassolve::error::Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let m = random_symplectic(3, 6, &mut rng)?;
    println!(
        "random element of Sp(6) preserves z: {}",
        z_invariance(&m, 6)?
    );
    for case in IsotropyCase::ALL {
        let n = case.min_n().max(3);
        let r = limit_check(case, n)?;
        println!(
            "family {case} at n = {n}: symplectic {}, fixes q at λ = 1 {}, limit is p {}",
            r.symplectic, r.fixes_q_at_one, r.limit_is_p
        );
    }
    println!("parabolic action on η: {}", parabolic_eta_check(3, 50, 2)?);
    println!(
        "two-form identity on 100 pairs: {}",
        theta_identity_check(100, 3)
    );
    Ok(())
}
