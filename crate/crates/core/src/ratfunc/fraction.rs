use super::laurent::LaurentPoly;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Rational function in q, stored as a reduced fraction of Laurent
/// polynomials.
///
/// # Invariants
/// - numerator and denominator share no polynomial factor
/// - the denominator has lowest q-exponent zero, integer coprime
///   coefficients, and positive leading coefficient
/// - zero is 0/1
///
/// The representation is therefore unique and equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut f = RatFunc { num, den };
        f.reduce();
        f
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        let shift = self.den.min_exp().unwrap();
        self.num = self.num.shifted(-shift);
        self.den = self.den.shifted(-shift);
        let content = self.den.content();
        if !content.is_one() {
            let inv = content.recip();
            self.num = self.num.scaled(&inv);
            self.den = self.den.scaled(&inv);
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_laurent(LaurentPoly::one())
    }

    pub fn int(n: i64) -> Self {
        RatFunc::from_laurent(LaurentPoly::int(n))
    }

    pub fn from_big(r: BigRational) -> Self {
        RatFunc::from_laurent(LaurentPoly::term(0, r))
    }

    pub fn q_pow(e: i64) -> Self {
        RatFunc::from_laurent(LaurentPoly::q_pow(e))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn powi(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut out = RatFunc::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Split self = s^2 * r with square factors extracted from numerator and
    /// denominator; r is the canonical radicand left under a square root.
    pub fn square_split(&self) -> (RatFunc, RatFunc) {
        let (ns, nr) = self.num.square_split();
        let (ds, dr) = self.den.square_split();
        (
            RatFunc::new(ns, ds),
            RatFunc::new(nr, dr),
        )
    }
}

/// Quantum integer [n] = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial.
pub fn qint(n: i64) -> LaurentPoly {
    assert!(n >= 0, "qint: negative argument {n}");
    LaurentPoly::from_coeffs((0..n).map(|j| (n - 1 - 2 * j, BigRational::one())))
}

/// Quantum factorial [n]! = [1][2]...[n].
pub fn qfact(n: i64) -> LaurentPoly {
    assert!(n >= 0, "qfact: negative argument {n}");
    let mut out = LaurentPoly::one();
    for k in 1..=n {
        out = &out * &qint(k);
    }
    out
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel first: keeps the final gcd calls near-trivial.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).unwrap();
        let d = rhs.den.exact_div(&g1).unwrap();
        let c = rhs.num.exact_div(&g2).unwrap();
        let b = self.den.exact_div(&g2).unwrap();
        RatFunc::new(&a * &c, &b * &d)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv()
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
owned_ops!(RatFunc);

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        &self / &rhs
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RatFunc {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_ratfunc(s)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::int(n)
    }
}

impl From<BigInt> for RatFunc {
    fn from(n: BigInt) -> Self {
        RatFunc::from_big(BigRational::from_integer(n))
    }
}
