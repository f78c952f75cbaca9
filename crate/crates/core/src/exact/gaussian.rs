use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use super::ParseScalarError;

/// A complex number `re + im*i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(value: i64) -> Self {
        Self::real(Rational::from_integer(value.into()))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Total order used for canonical element orderings: compares
    /// `(re.num, re.den, im.num, im.den)` lexicographically.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.re
            .numer()
            .cmp(other.re.numer())
            .then_with(|| self.re.denom().cmp(other.re.denom()))
            .then_with(|| self.im.numer().cmp(other.im.numer()))
            .then_with(|| self.im.denom().cmp(other.im.denom()))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(&self.re * &rhs.re);
        }
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero Gaussian rational");
        if rhs.im.is_zero() {
            return Self {
                re: &self.re / &rhs.re,
                im: &self.im / &rhs.re,
            };
        }
        let norm = rhs.norm_sqr();
        let num = self.mul_ref(&rhs.conj());
        Self {
            re: num.re / &norm,
            im: num.im / norm,
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$imp(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                self.$imp(rhs)
            }
        }
        impl<'a> $trait<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$imp(&rhs)
            }
        }
        impl<'a, 'b> $trait<&'b GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                self.$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl From<i64> for GaussianRational {
    fn from(value: i64) -> Self {
        Self::from_int(value)
    }
}

/// `a+b*i` with zero parts elided; `0` for zero.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => f.write_str(&format_rational(&self.re)),
            (true, false) => write!(f, "{}*i", format_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{}{}{}*i",
                    format_rational(&self.re),
                    sign,
                    format_rational(&self.im.abs())
                )
            }
        }
    }
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    fn from_str(literal: &str) -> Result<Self, Self::Err> {
        let text = literal.trim();
        let Some(body) = text.strip_suffix("*i") else {
            return Ok(Self::real(parse_rational(text)?));
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(idx, _)| idx)
            .last();
        match split {
            Some(idx) => {
                let re = parse_rational(&body[..idx])?;
                let im = parse_rational(&body[idx..])?;
                Ok(Self { re, im })
            }
            None => Ok(Self {
                re: Rational::zero(),
                im: parse_rational(body)?,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    fn gq(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::new(rational(re.0, re.1), rational(im.0, im.1))
    }

    #[test]
    fn display_elides_zero_parts() {
        assert_eq!(GaussianRational::zero().to_string(), "0");
        assert_eq!(GaussianRational::from_int(-3).to_string(), "-3");
        assert_eq!(GaussianRational::i().to_string(), "1*i");
        assert_eq!((-GaussianRational::i()).to_string(), "-1*i");
        assert_eq!(gq((1, 2), (-3, 4)).to_string(), "1/2-3/4*i");
        assert_eq!(gq((5, 1), (2, 1)).to_string(), "5+2*i");
    }

    #[test]
    fn parse_accepts_display_forms() {
        for s in ["0", "-3", "1*i", "-1*i", "1/2-3/4*i", "5+2*i", "-5/3+2/7*i"] {
            let z: GaussianRational = s.parse().unwrap();
            assert_eq!(z.to_string(), s);
        }
        assert!("1+*i".parse::<GaussianRational>().is_err());
        assert!("0.5".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
        assert_eq!(GaussianRational::one() / &i, -i.clone());
        assert_eq!(i.norm_sqr(), rational(1, 1));
    }

    #[test]
    fn canonical_order_uses_numerator_then_denominator() {
        // 1/3 sorts after 1/2 because denominators are compared directly.
        let a = GaussianRational::real(rational(1, 2));
        let b = GaussianRational::real(rational(1, 3));
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        let c = GaussianRational::from_int(-1);
        assert_eq!(c.canonical_cmp(&GaussianRational::zero()), Ordering::Less);
        assert_eq!(
            GaussianRational::zero().canonical_cmp(&GaussianRational::i()),
            Ordering::Less
        );
    }
}
