// Recognise truncated q-series as polynomials in E2, E4, E6.

use abelcount::arith::frac;
use abelcount::modular::{eisenstein, qmod_fit};
use abelcount::surface::hyp_h_series;

fn main() {
    let target = eisenstein(2, 6).unwrap().scale(&frac(-1, 12));
    println!("-E2/12 = {}", qmod_fit(&target, 2).unwrap().to_json());

    let e4 = eisenstein(4, 14).unwrap();
    let e2sq = eisenstein(2, 14).unwrap().pow(2).unwrap();
    println!("E2^2 - E4 = {}", qmod_fit(&e2sq.sub(&e4), 8).unwrap().to_json());

    // u^(2m) coefficients of (q d/dq)^2 K^4 / 4 have pure weight 2m
    let h = hyp_h_series(13, 8).unwrap();
    for m in [2u32, 3, 4] {
        let fit = qmod_fit(&h.u_coefficient(2 * m as usize).unwrap(), 8).unwrap();
        println!("u^{}: weight {:?}, {}", 2 * m, fit.pure_weight(), fit.to_json());
    }
}
