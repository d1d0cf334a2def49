//! Arithmetic in F_9 and F_81: digits, Frobenius, norm.

use rankcode::gf::GaloisField;

fn main() -> rankcode::Result<()> {
    let f9 = GaloisField::new(3, 2)?;
    println!("F_9 modulus (low to high): {:?}", f9.modulus());
    let beta = f9.generator();
    let a = f9.add(beta, f9.one());
    println!("beta^2        = {:?}", f9.digits(f9.mul(beta, beta)));
    println!("(1+beta)^-1   = {:?}", f9.digits(f9.inv(a)?));
    println!("(1+beta)^3    = {:?}", f9.digits(f9.frobenius(a, 1)));
    println!("N(1+beta)     = {}", f9.norm_residue(a));

    let f81 = GaloisField::new(3, 4)?;
    let mut by_norm = [0usize; 3];
    for x in f81.elements()?.filter(|x| !x.is_zero()) {
        by_norm[f81.norm_residue(x) as usize] += 1;
    }
    println!("F_81: {} nonzero elements of norm 1, {} of norm 2", by_norm[1], by_norm[2]);
    Ok(())
}
