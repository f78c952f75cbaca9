//! Sparse row elimination keyed by monomial.
//!
//! [`SparseRank`] works over the Gaussian integers without division: rows
//! are cleared of denominators on entry, combined as `a*row - b*pivot`, and
//! divided by the integer content of their coefficients after every step.
//! [`SparseEchelon`] works over the field and produces a reduced echelon
//! basis, used for invariant bases.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::GaussianRational;

use super::poly::{Monomial, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

type IntRow = Vec<(Monomial, GaussInt)>;

/// Scales `p` by the lcm of its denominators.
fn integer_row(p: &Poly) -> IntRow {
    let lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| {
        acc.lcm(c.re.denom()).lcm(c.im.denom())
    });
    p.terms()
        .map(|(m, c)| {
            let scale = |x: &crate::exact::Rational| x.numer() * (&lcm / x.denom());
            (
                *m,
                GaussInt {
                    re: scale(&c.re),
                    im: scale(&c.im),
                },
            )
        })
        .collect()
}

fn remove_content(row: &mut IntRow) {
    let g = row
        .iter()
        .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(&c.re).gcd(&c.im));
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, c) in row.iter_mut() {
        c.re /= &g;
        c.im /= &g;
    }
}

/// `a*row - b*pivot` for sorted rows.
fn combine(row: &IntRow, a: &GaussInt, pivot: &IntRow, b: &GaussInt) -> IntRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (m, c) = if take_row {
            i += 1;
            (row[i - 1].0, a.mul(&row[i - 1].1))
        } else if take_pivot {
            j += 1;
            let t = b.mul(&pivot[j - 1].1);
            (
                pivot[j - 1].0,
                GaussInt {
                    re: -t.re,
                    im: -t.im,
                },
            )
        } else {
            i += 1;
            j += 1;
            (
                row[i - 1].0,
                a.mul(&row[i - 1].1).sub(&b.mul(&pivot[j - 1].1)),
            )
        };
        if !c.is_zero() {
            out.push((m, c));
        }
    }
    out
}

/// Incremental rank of a set of sparse rows.
#[derive(Debug, Default)]
pub struct SparseRank {
    pivots: BTreeMap<Monomial, IntRow>,
}

impl SparseRank {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, p: &Poly) -> bool {
        let mut row = integer_row(p);
        remove_content(&mut row);
        while let Some((lead, coeff)) = row.first().cloned() {
            let Some(pivot) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return true;
            };
            let pivot_lead = &pivot[0].1;
            row = combine(&row, pivot_lead, pivot, &coeff);
            remove_content(&mut row);
        }
        false
    }
}

/// Reduced row echelon basis over the Gaussian rationals. Pivots are the
/// smallest monomial of each row, normalized to coefficient 1.
#[derive(Debug, Default)]
pub struct SparseEchelon {
    pivots: BTreeMap<Monomial, Poly>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn insert(&mut self, p: &Poly) -> bool {
        let mut row = p.clone();
        while let Some((lead, coeff)) = row.leading().map(|(m, c)| (*m, c.clone())) {
            match self.pivots.get(&lead) {
                Some(pivot) => row.add_scaled(pivot, &-coeff),
                None => {
                    let inv = GaussianRational::one() / coeff;
                    self.pivots.insert(lead, row.scale(&inv));
                    return true;
                }
            }
        }
        false
    }

    /// The unique reduced basis of the span, ordered by pivot monomial.
    pub fn into_reduced_basis(self) -> Vec<Poly> {
        let mut pivots: Vec<(Monomial, Poly)> = self.pivots.into_iter().collect();
        // Clear every pivot column from the other rows, last pivot first.
        for k in (0..pivots.len()).rev() {
            let (pm, prow) = pivots[k].clone();
            for (_, other) in pivots.iter_mut().take(k) {
                let c = other.coeff(&pm);
                if !c.is_zero() {
                    other.add_scaled(&prow, &-c);
                }
            }
        }
        pivots.into_iter().map(|(_, p)| p).collect()
    }
}
