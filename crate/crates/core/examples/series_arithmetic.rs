// Truncated q-series over the rationals and over Laurent polynomials in p^(1/2).

use abelcount::arith::rat;
use abelcount::series::{product_form, PLaurent, ProductFactor, QSeries};

fn main() {
    // 1/(1-q) through q^6, and its inverse
    let geom = QSeries::from_integers(&[1, 1, 1, 1, 1, 1, 1]);
    let inv = geom.invert().unwrap();
    println!("1/(1-q)          = {:?}", geom.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("its inverse      = {:?}", inv.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());

    // prod (1-q^m)^-1: the partition numbers
    let parts = product_form(&ProductFactor::family(rat(1), 0, -1, 10), &PLaurent::one(), 10, None).unwrap();
    let p: Vec<String> = parts.coeffs().iter().map(|c| c.coeff(0).unwrap().to_string()).collect();
    println!("partitions       = {p:?}");

    // Laurent coefficients: exponents are stored in w = p^(1/2)
    let a = QSeries::new(vec![PLaurent::from_pairs(&[(1, 1), (-1, -1)]), PLaurent::from_pairs(&[(3, 2)])]);
    let sq = a.mul(&a).unwrap();
    for (d, c) in sq.coeffs().iter().enumerate() {
        println!("(w - 1/w + 2w^3 q)^2 at q^{d}: {c}");
    }

    // a windowed coefficient: trusted only for |e| <= 6
    let win = PLaurent::windowed((0..=3).map(|k| (2 * k, rat(k + 1))), 6).unwrap();
    println!("windowed value: {win}");
}
