use super::fraction::RatFunc;
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dense polynomial in an auxiliary variable t with RatFunc coefficients.
///
/// # Invariants
/// - no trailing zero coefficients (zero is the empty vector)
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    c: Vec<RatFunc>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(RatFunc::one())
    }

    pub fn var() -> Self {
        Poly::from_vec(vec![RatFunc::zero(), RatFunc::one()])
    }

    pub fn constant(r: RatFunc) -> Self {
        Poly::from_vec(vec![r])
    }

    pub fn from_vec(c: Vec<RatFunc>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.c.last().map(RatFunc::is_zero).unwrap_or(false) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn leading(&self) -> RatFunc {
        self.c.last().cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.c
    }

    pub fn eval(&self, at: &RatFunc) -> RatFunc {
        let mut out = RatFunc::zero();
        for c in self.c.iter().rev() {
            out = &(&out * at) + c;
        }
        out
    }

    pub fn scaled(&self, s: &RatFunc) -> Poly {
        Poly::from_vec(self.c.iter().map(|c| c * s).collect())
    }

    /// Substitute t -> s*t.
    pub fn subst_scale(&self, s: &RatFunc) -> Poly {
        let mut pow = RatFunc::one();
        let mut out = Vec::with_capacity(self.c.len());
        for c in &self.c {
            out.push(c * &pow);
            pow = &pow * s;
        }
        Poly::from_vec(out)
    }

    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        let lead_inv = d.leading().inv();
        let mut rem = self.clone();
        if rem.c.len() <= dd {
            return (Poly::zero(), rem);
        }
        let mut quot = vec![RatFunc::zero(); rem.c.len() - dd];
        while rem.c.len() > dd {
            let dr = rem.c.len() - 1;
            let f = &rem.c[dr] * &lead_inv;
            for (i, dc) in d.c.iter().enumerate() {
                let idx = dr - dd + i;
                rem.c[idx] = &rem.c[idx] - &(&f * dc);
            }
            quot[dr - dd] = f;
            rem.trim();
            if rem.is_zero() {
                break;
            }
        }
        (Poly::from_vec(quot), rem)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scaled(&self.leading().inv())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::from_vec(
            (0..n)
                .map(|i| {
                    let a = self.c.get(i).cloned().unwrap_or_else(RatFunc::zero);
                    let b = rhs.c.get(i).cloned().unwrap_or_else(RatFunc::zero);
                    &a + &b
                })
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_vec(self.c.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![RatFunc::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_vec(out)
    }
}

/// Rational function of t over the rational-function field in q, kept
/// reduced with a monic denominator. Used for one variable at a time:
/// spectral-parameter dependence and removable-singularity limits.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtRatFunc {
    num: Poly,
    den: Poly,
}

impl ExtRatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "extension element with zero denominator");
        let mut f = ExtRatFunc { num, den };
        f.reduce();
        f
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.deg() != Some(0) {
            let (n, rn) = self.num.divmod(&g);
            let (d, rd) = self.den.divmod(&g);
            debug_assert!(rn.is_zero() && rd.is_zero());
            self.num = n;
            self.den = d;
        }
        let lead_inv = self.den.leading().inv();
        self.num = self.num.scaled(&lead_inv);
        self.den = self.den.scaled(&lead_inv);
    }

    pub fn zero() -> Self {
        ExtRatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        ExtRatFunc::from_ratfunc(RatFunc::one())
    }

    pub fn var() -> Self {
        ExtRatFunc::from_poly(Poly::var())
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        ExtRatFunc {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        ExtRatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// a + b*t as an extension element.
    pub fn linear(a: RatFunc, b: RatFunc) -> Self {
        ExtRatFunc::from_poly(Poly::from_vec(vec![a, b]))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero extension element");
        ExtRatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Evaluate at t = point. The stored form is reduced, so a vanishing
    /// denominator means the singularity is not removable.
    pub fn rat_limit(&self, at: &RatFunc) -> Result<RatFunc> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::SingularLimit { at: at.to_string() });
        }
        Ok(&self.num.eval(at) / &d)
    }

    /// Substitute t -> s*t for a nonzero scalar s.
    pub fn subst_scale(&self, s: &RatFunc) -> Self {
        ExtRatFunc::new(self.num.subst_scale(s), self.den.subst_scale(s))
    }

    /// Substitute t -> 1/t.
    pub fn subst_inv(&self) -> Self {
        let d = self.num.deg().unwrap_or(0).max(self.den.deg().unwrap_or(0));
        let rev = |p: &Poly| {
            let mut v = vec![RatFunc::zero(); d + 1];
            for (i, c) in p.coeffs().iter().enumerate() {
                v[d - i] = c.clone();
            }
            Poly::from_vec(v)
        };
        if self.is_zero() {
            return ExtRatFunc::zero();
        }
        ExtRatFunc::new(rev(&self.num), rev(&self.den))
    }
}

impl Add for &ExtRatFunc {
    type Output = ExtRatFunc;
    fn add(self, rhs: &ExtRatFunc) -> ExtRatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        ExtRatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &ExtRatFunc {
    type Output = ExtRatFunc;
    fn sub(self, rhs: &ExtRatFunc) -> ExtRatFunc {
        self + &(-rhs)
    }
}

impl Neg for &ExtRatFunc {
    type Output = ExtRatFunc;
    fn neg(self) -> ExtRatFunc {
        ExtRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &ExtRatFunc {
    type Output = ExtRatFunc;
    fn mul(self, rhs: &ExtRatFunc) -> ExtRatFunc {
        if self.is_zero() || rhs.is_zero() {
            return ExtRatFunc::zero();
        }
        ExtRatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &ExtRatFunc {
    type Output = ExtRatFunc;
    fn div(self, rhs: &ExtRatFunc) -> ExtRatFunc {
        self * &rhs.inv()
    }
}

impl fmt::Display for ExtRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |p: &Poly| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| match i {
                    0 => format!("{c}"),
                    1 => format!("{c}*t"),
                    _ => format!("{c}*t^{i}"),
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.den == Poly::one() {
            write!(f, "{}", side(&self.num))
        } else {
            write!(f, "[{}] / [{}]", side(&self.num), side(&self.den))
        }
    }
}

impl fmt::Debug for ExtRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
