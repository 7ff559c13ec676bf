// Curve counts on abelian surfaces: fixed linear system, quotient, multiple covers.

use abelcount::surface::{fls_point_series, gs_stable_pairs_series, multiple_cover_surface, n_fls, n_quotient, SurfaceClassType};

fn main() {
    for (d1, d2) in [(1, 1), (1, 2), (2, 2), (2, 4), (3, 3)] {
        let t = SurfaceClassType::new(d1, d2).unwrap();
        let row: Vec<String> = (2..=5).map(|g| n_quotient(g, t).unwrap().to_string()).collect();
        println!("N^Q_g,({d1},{d2}) for g=2..5: {}", row.join(", "));
        assert_eq!(multiple_cover_surface(4, t).unwrap(), n_quotient(4, t).unwrap());
    }
    println!("N^FLS_2,(1,2) = {}", n_fls(2, SurfaceClassType::new(1, 2).unwrap()).unwrap());

    let pts = fls_point_series(0, 4, 6).unwrap();
    println!("point series u^2 coefficients: {:?}",
        pts.coeffs().iter().map(|c| c.coeff(2).unwrap().to_string()).collect::<Vec<_>>());
    let gs = gs_stable_pairs_series(3);
    println!("stable pairs at q^2: {}", gs.coeffs()[2]);
}
