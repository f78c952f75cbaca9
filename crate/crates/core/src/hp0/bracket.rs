use num_traits::Zero;

use crate::exact::{GaussianRational, MatrixGQ};

use super::poly::Poly;

/// Constant Poisson bivector `pi = omega^-1`, so that
/// `{f, g} = sum_{a,b} pi_ab (d_a f)(d_b g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonStructure {
    pub bivector: MatrixGQ,
}

impl PoissonStructure {
    /// Panics if `omega` is singular or not antisymmetric.
    pub fn from_form(omega: &MatrixGQ) -> Self {
        assert_eq!(omega.transpose(), -omega, "form must be antisymmetric");
        let bivector = omega.inverse().expect("symplectic form is nondegenerate");
        Self { bivector }
    }

    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        poisson_bracket(f, g, self)
    }
}

pub fn poisson_bracket(f: &Poly, g: &Poly, pi: &PoissonStructure) -> Poly {
    let n = f.nvars();
    let df: Vec<Poly> = (0..n).map(|a| f.derivative(a)).collect();
    let mut out = Poly::zero(n);
    for b in 0..n {
        let dg = g.derivative(b);
        if dg.is_zero() {
            continue;
        }
        // sum_a pi_ab d_a f
        let mut weighted = Poly::zero(n);
        for (a, d) in df.iter().enumerate() {
            let p: &GaussianRational = pi.bivector.get(a, b);
            if !p.is_zero() {
                weighted.add_scaled(d, p);
            }
        }
        out.add_scaled(&weighted.mul(&dg), &GaussianRational::from_int(1));
    }
    out
}
