use belyi::cover::solve_cover_239;
use belyi::coordring::CoordRingElem;
use belyi::algebra::poly::Poly;
use belyi::algebra::ring::Rationals;
use belyi::algebra::factor::factor_over_q;
use num_traits::{Zero, One};

fn main() {
    let sol = solve_cover_239().unwrap();
    let curve = sol.curve.clone();
    let x = CoordRingElem::x(curve.clone());
    let yt = CoordRingElem::new(
        curve.clone(),
        Poly::from_rat(vec![sol.a3.clone(), sol.a1.clone()]),
        Poly::one(Rationals),
    );
    let inner = x
        .scale(&sol.a3)
        .sub(&yt.scale(&sol.a3))
        .sub(&x.mul(&x).scale(&sol.f_coeff));
    let big = sol
        .g
        .pow(3)
        .mul(&x.pow(6))
        .sub(&yt.mul(&inner.pow(3)).scale(&sol.a3));
    let mut norm = big.norm_x();
    println!("norm degree: {:?}", norm.degree());
    while norm.coeff(0).is_zero() && norm.degree().map_or(false, |d| d > 0) {
        norm = norm.div_exact(&Poly::x(Rationals)).unwrap();
    }
    println!("after strip: {:?}", norm.degree());
    let (_, factors) = factor_over_q(&norm.primitive().1);
    for (f, m) in &factors {
        println!("factor deg {:?} mult {}: {}", f.degree(), m, f);
    }
}
