// Composition and reversion of u-series: u = 2 arcsin(r/2).

use abelcount::series::USeries;
use abelcount::surface::arcsin_substitution;

fn main() {
    let u = arcsin_substitution(9).unwrap();
    println!("2 arcsin(r/2) = {:?}", u.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let s = USeries::two_sin_half(1, 9);
    println!("round trip is the identity: {}", s.compose(&u).unwrap() == USeries::variable(9));
    let f = USeries::from_integers(&[0, 1, 0, -1, 0, 2]);
    println!("Lagrange and fixed-point reversion agree: {}", f.revert_lagrange().unwrap() == f.revert_odd().unwrap());
}
