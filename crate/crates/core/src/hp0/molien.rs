use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{GaussianRational, MatrixGQ};
use crate::group::FiniteMatrixGroup;

use super::Hp0Error;

/// Coefficients of `det(Id - t M)`, constant term first (Faddeev-LeVerrier).
pub fn reversed_char_poly(m: &MatrixGQ) -> Vec<GaussianRational> {
    let n = m.rows();
    let identity = MatrixGQ::identity(n);
    // c[k] is the coefficient of t^k in det(t Id - M).
    let mut c = vec![GaussianRational::zero(); n + 1];
    c[n] = GaussianRational::one();
    let mut aux = MatrixGQ::zeros(n, n);
    for k in 1..=n {
        aux = &(m * &aux) + &identity.scale(&c[n - k + 1]);
        let product = m * &aux;
        let trace = (0..n).fold(GaussianRational::zero(), |acc, i| acc + product.get(i, i));
        c[n - k] = -trace / GaussianRational::from_int(k as i64);
    }
    c.reverse();
    c
}

/// Power series of `1 / p(t)` for `p(0) = 1`, truncated at degree `max_d`.
fn invert_series(p: &[GaussianRational], max_d: usize) -> Vec<GaussianRational> {
    assert!(p[0].is_one(), "series must have constant term 1");
    let mut out = vec![GaussianRational::one()];
    for k in 1..=max_d {
        let s = (1..=k.min(p.len() - 1)).fold(GaussianRational::zero(), |acc, j| {
            acc + &(p[j].clone() * &out[k - j])
        });
        out.push(-s);
    }
    out
}

/// Dimensions of the degree-`d` invariants for `d = 0..=max_d`, read off
/// `(1/|G|) sum_g 1/det(Id - t g)`.
pub fn molien_dims(group: &FiniteMatrixGroup, max_d: usize) -> Result<Vec<u64>, Hp0Error> {
    let mut total = vec![GaussianRational::zero(); max_d + 1];
    for g in group.elements() {
        let series = invert_series(&reversed_char_poly(&g.matrix), max_d);
        for (acc, x) in total.iter_mut().zip(series) {
            *acc = std::mem::take(acc) + x;
        }
    }
    let order = GaussianRational::from_int(group.order() as i64);
    total
        .into_iter()
        .enumerate()
        .map(|(degree, x)| {
            let x = x / &order;
            let bad = Hp0Error::NonIntegerMolien { degree };
            if !x.im.is_zero() || !x.re.is_integer() || x.re.is_negative() {
                return Err(bad);
            }
            x.re.to_integer().to_u64().ok_or(bad)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_paper_group, close_group, rotation_rho};

    #[test]
    fn char_poly_of_rotation() {
        // det(Id - t rho) = 1 + t^2
        let p = reversed_char_poly(&rotation_rho());
        let expected: Vec<GaussianRational> = [1, 0, 1]
            .into_iter()
            .map(GaussianRational::from_int)
            .collect();
        assert_eq!(p, expected);
    }

    #[test]
    fn low_degrees_for_g() {
        let pg = build_paper_group();
        let dims = molien_dims(&pg.group, 8).unwrap();
        assert_eq!(&dims[..3], &[1, 0, 0]);
    }

    #[test]
    fn cyclic_four_in_sl2() {
        // C[x, y]^{Z/4} for rho: invariants of degree 2 and 4 are spanned by
        // x^2 + y^2 and {x^4, x^2 y^2, y^4, x^3 y - x y^3}.
        let c4 = close_group(&[rotation_rho()], 10).unwrap();
        let dims = molien_dims(&c4, 4).unwrap();
        assert_eq!(dims, vec![1, 0, 1, 0, 3]);
    }
}
