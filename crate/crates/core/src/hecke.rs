//! The Iwahori-Hecke algebra of the symmetric group over the field of
//! rational functions in q, in its standard basis {T_sigma}.
//!
//! Conventions: generators satisfy (T_i - q)(T_i + q^-1) = 0 together with
//! the braid relations, so T_i is invertible with T_i^-1 = T_i - (q - q^-1).
//! Multiplication reduces products through the length-based rules
//!   T_i T_rho = T_{s_i rho}                       if length grows,
//!   T_i T_rho = T_{s_i rho} + (q - q^-1) T_rho    otherwise,
//! and their right-handed mirrors.

use crate::ratfunc::RatFunc;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Permutation of 1..=m in one-line notation. Ordered lexicographically by
/// the one-line word, so the identity sorts first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(m: u32) -> Self {
        Permutation {
            images: (1..=m as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            assert!(
                v >= 1 && (v as usize) <= m && !seen[(v - 1) as usize],
                "not a permutation: {images:?}"
            );
            seen[(v - 1) as usize] = true;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn image(&self, i: u32) -> u32 {
        self.images[(i - 1) as usize] as u32
    }

    pub fn one_line(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// (self . rhs)(i) = self(rhs(i)).
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: (1..=self.degree())
                .map(|i| self.image(rhs.image(i)) as u8)
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// The adjacent transposition s_i = (i, i+1).
    pub fn adjacent(m: u32, i: u32) -> Permutation {
        assert!(i >= 1 && i < m);
        Permutation::transposition(m, i, i + 1)
    }

    pub fn transposition(m: u32, a: u32, b: u32) -> Permutation {
        assert!(a >= 1 && b >= 1 && a <= m && b <= m && a != b);
        let mut images: Vec<u8> = (1..=m as u8).collect();
        images.swap((a - 1) as usize, (b - 1) as usize);
        Permutation { images }
    }

    /// Number of inversions.
    pub fn length(&self) -> u32 {
        let mut l = 0;
        for i in 0..self.images.len() {
            for j in (i + 1)..self.images.len() {
                if self.images[i] > self.images[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// A reduced word i1..il with self = s_{i1} s_{i2} ... s_{il}, found by
    /// repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self) -> Vec<u32> {
        let m = self.degree();
        let mut sigma = self.clone();
        let mut word = Vec::new();
        loop {
            let inv = sigma.inverse();
            let descent = (1..m).find(|&i| inv.image(i) > inv.image(i + 1));
            match descent {
                Some(i) => {
                    word.push(i);
                    sigma = Permutation::adjacent(m, i).compose(&sigma);
                }
                None => break,
            }
        }
        word
    }

    /// All permutations of 1..=m, lexicographic by one-line word.
    pub fn all(m: u32) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(m)];
        let mut current = Permutation::identity(m).images;
        // Standard next-permutation loop keeps the output lexicographic.
        loop {
            let n = current.len();
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
            out.push(Permutation {
                images: current.clone(),
            });
        }
        out
    }

    /// The longest element, reversing 1..=m.
    pub fn longest(m: u32) -> Permutation {
        Permutation {
            images: (1..=m as u8).rev().collect(),
        }
    }

    /// The same permutation inside Sym_{m_new}, fixing the new points.
    pub fn extended(&self, m_new: u32) -> Permutation {
        assert!(m_new >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u8 + 1..=m_new as u8);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// q - q^-1, the recurring structure constant.
pub fn q_minus_qinv() -> RatFunc {
    &RatFunc::q_pow(1) - &RatFunc::q_pow(-1)
}

/// Element of the Hecke algebra H_m: a finite combination of basis vectors
/// T_sigma with rational-function coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    m: u32,
    terms: BTreeMap<Permutation, RatFunc>,
}

impl HeckeElement {
    pub fn zero(m: u32) -> Self {
        HeckeElement {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: u32) -> Self {
        HeckeElement::basis(Permutation::identity(m))
    }

    /// The basis element T_sigma.
    pub fn basis(sigma: Permutation) -> Self {
        let m = sigma.degree();
        let mut terms = BTreeMap::new();
        terms.insert(sigma, RatFunc::one());
        HeckeElement { m, terms }
    }

    /// The generator T_i in H_m.
    pub fn generator(m: u32, i: u32) -> Self {
        HeckeElement::basis(Permutation::adjacent(m, i))
    }

    pub fn scalar(m: u32, c: &RatFunc) -> Self {
        let mut e = HeckeElement::zero(m);
        e.add_term(Permutation::identity(m), c.clone());
        e
    }

    pub fn rank(&self) -> u32 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &RatFunc)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, sigma: Permutation, c: RatFunc) {
        assert_eq!(sigma.degree(), self.m, "rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(sigma) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &HeckeElement, c: &RatFunc) {
        assert_eq!(self.m, other.m, "rank mismatch");
        for (sigma, coeff) in &other.terms {
            self.add_term(sigma.clone(), coeff * c);
        }
    }

    pub fn coefficient(&self, sigma: &Permutation) -> RatFunc {
        self.terms.get(sigma).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn scaled(&self, c: &RatFunc) -> HeckeElement {
        if c.is_zero() {
            return HeckeElement::zero(self.m);
        }
        HeckeElement {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(s, v)| (s.clone(), v * c))
                .collect(),
        }
    }

    /// Left multiplication by the generator T_i.
    pub fn gen_mul_left(&self, i: u32) -> HeckeElement {
        let mut out = HeckeElement::zero(self.m);
        let xi = q_minus_qinv();
        for (rho, c) in &self.terms {
            let target = Permutation::adjacent(self.m, i).compose(rho);
            let inv = rho.inverse();
            if inv.image(i) < inv.image(i + 1) {
                out.add_term(target, c.clone());
            } else {
                out.add_term(target, c.clone());
                out.add_term(rho.clone(), &xi * c);
            }
        }
        out
    }

    /// Right multiplication by the generator T_j.
    pub fn gen_mul_right(&self, j: u32) -> HeckeElement {
        let mut out = HeckeElement::zero(self.m);
        let xi = q_minus_qinv();
        for (rho, c) in &self.terms {
            let target = rho.compose(&Permutation::adjacent(self.m, j));
            if rho.image(j) < rho.image(j + 1) {
                out.add_term(target, c.clone());
            } else {
                out.add_term(target, c.clone());
                out.add_term(rho.clone(), &xi * c);
            }
        }
        out
    }

    /// The involutive anti-automorphism fixing each generator:
    /// T_sigma maps to T_{sigma^-1}.
    pub fn star(&self) -> HeckeElement {
        let mut out = HeckeElement::zero(self.m);
        for (sigma, c) in &self.terms {
            out.add_term(sigma.inverse(), c.clone());
        }
        out
    }

    /// Coefficient of the identity basis vector: the symmetrizing trace.
    pub fn tau(&self) -> RatFunc {
        self.coefficient(&Permutation::identity(self.m))
    }

    /// The same element under the inclusion H_m into H_{m_new}.
    pub fn embedded(&self, m_new: u32) -> HeckeElement {
        let mut out = HeckeElement::zero(m_new);
        for (sigma, c) in &self.terms {
            out.add_term(sigma.extended(m_new), c.clone());
        }
        out
    }

    /// Jucys-Murphy element y_k = 1 + (q - q^-1) sum_{j<k} T_{(j,k)};
    /// y_1 = 1.
    pub fn jucys_murphy(m: u32, k: u32) -> HeckeElement {
        assert!(k >= 1 && k <= m);
        let mut e = HeckeElement::one(m);
        let xi = q_minus_qinv();
        for j in 1..k {
            e.add_term(Permutation::transposition(m, j, k), xi.clone());
        }
        e
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::one());
        out
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::int(-1));
        out
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        self.scaled(&RatFunc::int(-1))
    }
}

impl Mul for &HeckeElement {
    type Output = HeckeElement;
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.m, rhs.m, "rank mismatch");
        let mut out = HeckeElement::zero(self.m);
        for (sigma, c) in &rhs.terms {
            let mut acc = self.clone();
            for i in sigma.reduced_word() {
                acc = acc.gen_mul_right(i);
            }
            out.add_scaled(&acc, c);
        }
        out
    }
}

impl Add for HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: HeckeElement) -> HeckeElement {
        &self + &rhs
    }
}

impl Sub for HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: HeckeElement) -> HeckeElement {
        &self - &rhs
    }
}

impl Mul for HeckeElement {
    type Output = HeckeElement;
    fn mul(self, rhs: HeckeElement) -> HeckeElement {
        &self * &rhs
    }
}

impl Neg for HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        -&self
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (sigma, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (sigma.is_identity(), c.is_one()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "({c})")?,
                (false, true) => write!(f, "T{sigma}")?,
                (false, false) => write!(f, "({c})*T{sigma}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(m: u32, i: u32) -> HeckeElement {
        HeckeElement::generator(m, i)
    }

    #[test]
    fn permutation_basics() {
        let s1 = Permutation::adjacent(3, 1);
        let s2 = Permutation::adjacent(3, 2);
        let w = s1.compose(&s2); // s1 . s2 sends 1->2,2->... check one-line
        assert_eq!(w.one_line(), &[2, 3, 1]);
        assert_eq!(w.inverse().one_line(), &[3, 1, 2]);
        assert_eq!(w.length(), 2);
        assert_eq!(Permutation::longest(4).length(), 6);
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Permutation::identity(3));
    }

    #[test]
    fn reduced_words_reconstruct_basis_elements() {
        for m in 1..=5 {
            for sigma in Permutation::all(m) {
                let word = sigma.reduced_word();
                assert_eq!(word.len() as u32, sigma.length(), "word not reduced");
                let mut prod = HeckeElement::one(m);
                for i in &word {
                    prod = prod.gen_mul_right(*i);
                }
                assert_eq!(prod, HeckeElement::basis(sigma));
            }
        }
    }

    #[test]
    fn quadratic_relation() {
        let m = 4;
        for i in 1..m {
            let ti = t(m, i);
            let lhs = &(&ti - &HeckeElement::scalar(m, &RatFunc::q_pow(1)))
                * &(&ti + &HeckeElement::scalar(m, &RatFunc::q_pow(-1)));
            assert!(lhs.is_zero(), "generator {i} fails the quadratic relation");
            // Equivalent form used by the multiplication rules.
            let expect = &HeckeElement::one(m) + &ti.scaled(&q_minus_qinv());
            assert_eq!(&ti * &ti, expect);
        }
    }

    #[test]
    fn braid_relations() {
        for m in 2..=5u32 {
            for i in 1..m.saturating_sub(1) {
                let a = &(&t(m, i) * &t(m, i + 1)) * &t(m, i);
                let b = &(&t(m, i + 1) * &t(m, i)) * &t(m, i + 1);
                assert_eq!(a, b, "braid at i={i}, m={m}");
            }
            for i in 1..m {
                for j in 1..m {
                    if (i as i64 - j as i64).abs() >= 2 {
                        assert_eq!(&t(m, i) * &t(m, j), &t(m, j) * &t(m, i));
                    }
                }
            }
        }
    }

    #[test]
    fn left_and_right_generator_actions_agree_with_mul() {
        let m = 4;
        for sigma in Permutation::all(m) {
            let e = HeckeElement::basis(sigma);
            for i in 1..m {
                assert_eq!(e.gen_mul_right(i), &e * &t(m, i));
                assert_eq!(e.gen_mul_left(i), &t(m, i) * &e);
            }
        }
    }

    #[test]
    fn star_is_an_anti_automorphism() {
        let m = 3;
        for sigma in Permutation::all(m) {
            assert_eq!(
                HeckeElement::basis(sigma.clone()).star(),
                HeckeElement::basis(sigma.inverse())
            );
            for rho in Permutation::all(m) {
                let x = HeckeElement::basis(sigma.clone());
                let y = HeckeElement::basis(rho);
                assert_eq!((&x * &y).star(), &y.star() * &x.star());
            }
        }
    }

    #[test]
    fn dual_bases_under_tau() {
        for m in 1..=4u32 {
            for sigma in Permutation::all(m) {
                for rho in Permutation::all(m) {
                    let prod = &HeckeElement::basis(sigma.clone())
                        * &HeckeElement::basis(rho.inverse());
                    let expected = if sigma == rho {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    };
                    assert_eq!(prod.tau(), expected, "sigma={sigma}, rho={rho}");
                }
            }
        }
    }

    #[test]
    fn tau_is_a_trace() {
        let m = 3;
        for sigma in Permutation::all(m) {
            for rho in Permutation::all(m) {
                let x = HeckeElement::basis(sigma.clone());
                let y = HeckeElement::basis(rho.clone());
                assert_eq!((&x * &y).tau(), (&y * &x).tau());
            }
        }
    }

    #[test]
    fn jucys_murphy_relations() {
        let m = 4;
        let y: Vec<HeckeElement> = (1..=m).map(|k| HeckeElement::jucys_murphy(m, k)).collect();
        assert_eq!(y[0], HeckeElement::one(m));
        // y_{k+1} = T_k y_k T_k.
        for k in 1..m {
            let lhs = &(&t(m, k) * &y[(k - 1) as usize]) * &t(m, k);
            assert_eq!(lhs, y[k as usize], "k={k}");
        }
        // Pairwise commuting.
        for a in 0..m as usize {
            for b in 0..m as usize {
                assert_eq!(&y[a] * &y[b], &y[b] * &y[a]);
            }
        }
        // T_i commutes with y_k except at i = k-1, k.
        for k in 1..=m {
            for i in 1..m {
                if i != k - 1 && i != k {
                    let yk = &y[(k - 1) as usize];
                    assert_eq!(&t(m, i) * yk, yk * &t(m, i), "i={i}, k={k}");
                }
            }
        }
    }

    #[test]
    fn display_is_readable() {
        let m = 2;
        let e = &HeckeElement::one(m) + &t(m, 1).scaled(&q_minus_qinv());
        assert_eq!(e.to_string(), "1 + (q - q^-1)*T[2,1]");
    }
}
