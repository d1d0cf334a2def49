//! Exhaustive minimum distance of small codes: valid twists are MRD,
//! twists with the forbidden norm are not.

use rankcode::gf::GaloisField;
use rankcode::oracle::{min_distance_witness, OracleBudget};
use rankcode::twisted::{forbidden_norm, TwistedCode};

fn main() -> rankcode::Result<()> {
    let (q, n, k, r) = (3, 4, 2, 3);
    let f = GaloisField::new(q, n)?;
    let budget = OracleBudget::default();
    let bad = forbidden_norm(q, n, k);
    for norm in 1..q {
        let eta = f.elements()?.find(|&a| !a.is_zero() && f.norm_residue(a) == norm).unwrap();
        let code = TwistedCode::new_unvalidated(f.clone(), k, eta, r, None)?;
        let (d, witness) = min_distance_witness(&code, &budget)?;
        let tag = if norm == bad { "forbidden" } else { "allowed" };
        println!("N(eta) = {norm} ({tag}): min distance {d}, bound {}", n - k + 1);
        if d < n - k + 1 {
            let digits: Vec<_> = witness.iter().map(|&a| f.digits(a)).collect();
            println!("  lightest message {digits:?}");
        }
    }
    Ok(())
}
