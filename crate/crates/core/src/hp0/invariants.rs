use rayon::prelude::*;

use crate::exact::GaussianRational;
use crate::group::FiniteMatrixGroup;

use super::molien::molien_dims;
use super::poly::{monomials_of_degree, Poly};
use super::sparse::SparseEchelon;
use super::Hp0Error;

/// `g . f = f o g^-1`.
pub fn act(group: &FiniteMatrixGroup, g: usize, f: &Poly) -> Poly {
    f.substitute(group.matrix(group.inv(g)))
}

/// `(1/|G|) sum_g g . f`.
pub fn reynolds(group: &FiniteMatrixGroup, f: &Poly) -> Poly {
    let mut sum = Poly::zero(f.nvars());
    for g in group.elements() {
        sum.add_scaled(&f.substitute(&g.matrix), &GaussianRational::from_int(1));
    }
    sum.scale(&(GaussianRational::from_int(1) / GaussianRational::from_int(group.order() as i64)))
}

pub fn is_invariant(group: &FiniteMatrixGroup, f: &Poly) -> bool {
    (0..group.order()).all(|g| act(group, g, f) == *f)
}

/// Reduced echelon basis of the span of the Reynolds images of all
/// degree-`d` monomials. Runs on the current rayon pool.
pub fn reynolds_basis(group: &FiniteMatrixGroup, d: usize) -> Vec<Poly> {
    let nvars = group.dimension();
    let degree = u16::try_from(d).expect("degree fits in u16");
    let images: Vec<Poly> = monomials_of_degree(nvars, degree)
        .into_par_iter()
        .map(|m| reynolds(group, &Poly::monomial(nvars, m)))
        .collect();
    let mut echelon = SparseEchelon::new();
    for p in images.iter().filter(|p| !p.is_zero()) {
        echelon.insert(p);
    }
    echelon.into_reduced_basis()
}

/// Basis of the degree-`d` invariants, checked against the Molien series.
pub fn invariant_basis(group: &FiniteMatrixGroup, d: usize) -> Result<Vec<Poly>, Hp0Error> {
    let expected = molien_dims(group, d)?[d];
    let basis = reynolds_basis(group, d);
    if basis.len() as u64 != expected {
        return Err(Hp0Error::MolienMismatch {
            degree: d,
            molien: expected,
            reynolds: basis.len() as u64,
        });
    }
    Ok(basis)
}
