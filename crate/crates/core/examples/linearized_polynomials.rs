//! Composition, division, root spaces and subspace polynomials.

use rankcode::gf::GaloisField;
use rankcode::linpoly::{annihilator, fq_rank, monic_annihilator, LinPoly};

fn main() -> rankcode::Result<()> {
    let f = GaloisField::new(2, 4)?;
    let b = f.generator();
    let g = LinPoly::from_coeffs(vec![b, f.one()]);
    let h = LinPoly::from_coeffs(vec![f.one(), b, f.mul(b, b)]);

    let gh = g.compose(&f, &h);
    println!("qdeg(g o h) = {:?}", gh.qdeg());
    let (quot, rem) = gh.divide_left(&f, &g)?;
    println!("(g o h) / g on the left: quotient == h: {}, remainder zero: {}", quot == h, rem.is_zero());
    let (quot, rem) = gh.divide_right(&f, &h)?;
    println!("(g o h) / h on the right: quotient == g: {}, remainder zero: {}", quot == g, rem.is_zero());

    let basis = vec![f.one(), b];
    let ann = annihilator(&f, &basis)?;
    let monic = monic_annihilator(&f, &basis)?;
    println!("annihilator of <1, beta>: qdeg {:?}", ann.qdeg());
    for x in [f.one(), b, f.add(f.one(), b)] {
        assert!(ann.eval(&f, x).is_zero() && monic.eval(&f, x).is_zero());
    }
    let roots = ann.kernel(&f)?;
    println!("root space has F_2-dimension {}", fq_rank(&f, &roots));
    Ok(())
}
