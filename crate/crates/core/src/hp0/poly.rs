use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{GaussianRational, MatrixGQ};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 4;

/// Exponent vector; unused trailing slots stay zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([u16; MAX_VARS]);

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Self(e)
    }

    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Self(e)
    }
}

/// All monomials of degree `d` in `nvars` variables, in ascending order.
pub fn monomials_of_degree(nvars: usize, d: u16) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u16>, left: u16, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(left);
            out.push(Monomial::new(prefix));
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            fill(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    assert!(
        (1..=MAX_VARS).contains(&nvars),
        "unsupported variable count"
    );
    let mut out = Vec::new();
    fill(&mut Vec::new(), d, nvars, &mut out);
    out
}

/// Sparse polynomial with Gaussian-rational coefficients; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&nvars),
            "unsupported variable count"
        );
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        Self::term(nvars, Monomial::default(), c)
    }

    pub fn term(nvars: usize, m: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn monomial(nvars: usize, m: Monomial) -> Self {
        Self::term(nvars, m, GaussianRational::one())
    }

    /// The coordinate function `x_a`.
    pub fn variable(nvars: usize, a: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[a] = 1;
        Self::monomial(nvars, Monomial(e))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = std::mem::take(o.get_mut()) + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, factor: &GaussianRational) {
        if factor.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(*m, c * factor);
        }
    }

    pub fn scale(&self, factor: &GaussianRational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        out.add_scaled(self, factor);
        out
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &GaussianRational::one());
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &-GaussianRational::one());
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }

    /// `d/dx_a`.
    pub fn derivative(&self, a: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[a];
            if e > 0 {
                let mut dm = m.0;
                dm[a] -= 1;
                out.add_term(Monomial(dm), c * GaussianRational::from_int(i64::from(e)));
            }
        }
        out
    }

    /// `x -> f(M x)`, i.e. substitutes `x_a = sum_b M[a][b] x_b`.
    pub fn substitute(&self, m: &MatrixGQ) -> Poly {
        assert_eq!(m.rows(), self.nvars, "substitution matrix has wrong size");
        let linear: Vec<Poly> = (0..self.nvars)
            .map(|a| {
                let mut l = Poly::zero(self.nvars);
                for b in 0..self.nvars {
                    let mut e = [0; MAX_VARS];
                    e[b] = 1;
                    l.add_term(Monomial(e), m.get(a, b).clone());
                }
                l
            })
            .collect();
        let mut powers: Vec<Vec<Poly>> = linear
            .iter()
            .map(|l| {
                vec![
                    Poly::constant(self.nvars, GaussianRational::one()),
                    l.clone(),
                ]
            })
            .collect();
        let mut out = Poly::zero(self.nvars);
        for (mono, c) in &self.terms {
            let mut acc = Poly::constant(self.nvars, c.clone());
            for a in 0..self.nvars {
                let e = usize::from(mono.0[a]);
                while powers[a].len() <= e {
                    let next = powers[a].last().unwrap().mul(&linear[a]);
                    powers[a].push(next);
                }
                acc = acc.mul(&powers[a][e]);
            }
            out.add_scaled(&acc, &GaussianRational::one());
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (a, &e) in m.0[..self.nvars].iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{a}")?,
                    _ => write!(f, "*x{a}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
