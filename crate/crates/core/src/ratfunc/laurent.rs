use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in q over the rationals.
///
/// # Invariants
/// - no zero coefficients are stored, so structural equality is value equality
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::term(0, BigRational::one())
    }

    pub fn q() -> Self {
        LaurentPoly::q_pow(1)
    }

    pub fn q_pow(exp: i64) -> Self {
        LaurentPoly::term(exp, BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        LaurentPoly::term(0, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn term(exp: i64, coeff: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_coeffs<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (exp, coeff) in iter {
            p.add_term(exp, coeff);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
            && self
                .coeffs
                .get(&0)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> BigRational {
        match self.max_exp() {
            Some(e) => self.coeff(e),
            None => BigRational::zero(),
        }
    }

    /// Multiply by q^k.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// (min exponent, ascending dense coefficients). Zero maps to (0, []).
    fn to_dense(&self) -> (i64, Vec<BigRational>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.coeffs {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    fn from_dense(min: i64, v: Vec<BigRational>) -> Self {
        LaurentPoly::from_coeffs(
            v.into_iter()
                .enumerate()
                .map(|(i, c)| (min + i as i64, c)),
        )
    }

    /// Exact division; None if the divisor does not divide self.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division of Laurent polynomial by zero");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (ea, a) = self.to_dense();
        let (eb, b) = d.to_dense();
        let (quot, rem) = ddivmod(&a, &b);
        if !rem.is_empty() {
            return None;
        }
        Some(LaurentPoly::from_dense(ea - eb, quot))
    }

    /// Canonical gcd: min exponent zero, integer coprime coefficients,
    /// positive leading coefficient. gcd(0, 0) = 0.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() && other.is_zero() {
            return LaurentPoly::zero();
        }
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        let g = dgcd(&a, &b);
        LaurentPoly::from_dense(0, g).primitive_part()
    }

    /// Signed content: the primitive part has integer coprime coefficients
    /// and positive leading coefficient. content(0) = 0.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.coeffs.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        content
    }

    pub fn primitive_part(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        self.scaled(&self.content().recip())
    }

    /// Split self = s^2 * r with the polynomial square part fully extracted
    /// (Yun's squarefree decomposition) and perfect-square rational content
    /// folded into s. Deterministic, so equal inputs split identically.
    pub fn square_split(&self) -> (LaurentPoly, LaurentPoly) {
        if self.is_zero() {
            return (LaurentPoly::one(), LaurentPoly::zero());
        }
        let e = self.min_exp().unwrap();
        let (half, parity) = (e.div_euclid(2), e.rem_euclid(2));
        let prim = self.shifted(-e).primitive_part();
        let content = self.shifted(-e).content();
        let (_, f) = prim.to_dense();

        let mut square = vec![BigRational::one()];
        let mut rest = vec![BigRational::one()];
        for (a, mult) in yun_squarefree(&f) {
            for _ in 0..mult / 2 {
                square = dmul(&square, &a);
            }
            if mult % 2 == 1 {
                rest = dmul(&rest, &a);
            }
        }
        // Monic factors can differ from f by a constant; recover it exactly.
        let recomposed = dmul(&dmul(&square, &square), &rest);
        let (scale, remainder) = ddivmod(&f, &recomposed);
        debug_assert!(remainder.is_empty() && scale.len() == 1);
        let total_content = &content * &scale[0];

        let (c_sqrt, c_rest) = rational_square_split(&total_content);
        let s = LaurentPoly::from_dense(0, square)
            .scaled(&c_sqrt)
            .shifted(half);
        let r = LaurentPoly::from_dense(0, rest)
            .scaled(&c_rest)
            .shifted(parity);
        debug_assert_eq!(*self, &(&s * &s) * &r);
        (s, r)
    }

    pub fn is_perfect_square(&self) -> bool {
        self.square_split().1.is_one()
    }
}

/// (sqrt, rest) with c = sqrt^2 * rest; extracts only full perfect squares.
fn rational_square_split(c: &BigRational) -> (BigRational, BigRational) {
    if c.is_positive() {
        let ns = c.numer().sqrt();
        let ds = c.denom().sqrt();
        if &(&ns * &ns) == c.numer() && &(&ds * &ds) == c.denom() {
            return (BigRational::new(ns, ds), BigRational::one());
        }
    }
    (BigRational::one(), c.clone())
}

fn dnorm(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn dmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    dnorm(out)
}

fn ddivmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem: Vec<BigRational> = a.to_vec();
    if a.len() <= db {
        return (Vec::new(), dnorm(rem));
    }
    let mut quot = vec![BigRational::zero(); a.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / lead;
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            rem[idx] = &rem[idx] - &(&c * bc);
        }
        quot[dr - db] = c;
        rem = dnorm(rem);
        if rem.is_empty() {
            break;
        }
    }
    (dnorm(quot), rem)
}

/// Monic gcd over Q; gcd with zero returns the other argument monicized.
fn dprimitive(mut v: Vec<BigRational>) -> Vec<BigRational> {
    if v.is_empty() {
        return v;
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in &v {
        num_gcd = num_gcd.gcd(&c.numer().abs());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let inv = BigRational::new(den_lcm, num_gcd);
    for c in &mut v {
        *c = &*c * &inv;
    }
    v
}

fn dgcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    // Primitive remainder sequence: rescaling every remainder to a primitive
    // integer polynomial keeps coefficient growth polynomial, where the plain
    // rational Euclid sequence explodes.
    let mut a = dprimitive(dnorm(a.to_vec()));
    let mut b = dprimitive(dnorm(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = ddivmod(&a, &b);
        a = b;
        b = dprimitive(r);
    }
    dmonic(a)
}

fn dmonic(a: Vec<BigRational>) -> Vec<BigRational> {
    match a.last() {
        None => a,
        Some(lead) => {
            let inv = lead.recip();
            a.iter().map(|c| c * &inv).collect()
        }
    }
}

fn dderiv(a: &[BigRational]) -> Vec<BigRational> {
    if a.len() <= 1 {
        return Vec::new();
    }
    dnorm(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// Yun's squarefree decomposition: f (up to a constant) = prod a_i^i with
/// each returned a_i monic squarefree; pairs are (a_i, i).
fn yun_squarefree(f: &[BigRational]) -> Vec<(Vec<BigRational>, usize)> {
    let f = dnorm(f.to_vec());
    if f.len() <= 1 {
        return Vec::new();
    }
    let fp = dderiv(&f);
    let g = dgcd(&f, &fp);
    if g.len() == 1 {
        return vec![(dmonic(f), 1)];
    }
    let mut out = Vec::new();
    let (mut w, _) = ddivmod(&f, &g);
    let (y, _) = ddivmod(&fp, &g);
    let mut z = dsub(&y, &dderiv(&w));
    let mut i = 1usize;
    while w.len() > 1 {
        let a = dgcd(&w, &z);
        if a.len() > 1 {
            out.push((a.clone(), i));
        }
        let (w_next, _) = ddivmod(&w, &a);
        let (y_next, _) = ddivmod(&z, &a);
        w = w_next;
        z = dsub(&y_next, &dderiv(&w));
        i += 1;
    }
    out
}

fn dsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    dnorm(
        (0..n)
            .map(|k| {
                let av = a.get(k).cloned().unwrap_or_else(BigRational::zero);
                let bv = b.get(k).cloned().unwrap_or_else(BigRational::zero);
                av - bv
            })
            .collect(),
    )
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

fn fmt_coeff_abs(c: &BigRational) -> String {
    let a = c.abs();
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.coeffs.iter().rev().enumerate() {
            let sign = if coeff.is_negative() { "-" } else { "+" };
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let mag = fmt_coeff_abs(coeff);
            match (*exp, mag.as_str()) {
                (0, _) => write!(f, "{mag}")?,
                (1, "1") => write!(f, "q")?,
                (1, _) => write!(f, "{mag}*q")?,
                (e, "1") => write!(f, "q^{e}")?,
                (e, _) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
