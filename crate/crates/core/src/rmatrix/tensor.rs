//! Sparse operators on (C^n)^(tensor m) over an exact coefficient field.
//!
//! Multi-indices are packed row-major: site 1 is the most significant digit.
//! The coefficient type is generic so the same operator algebra serves both
//! rational functions in q and rational functions in one spectral variable.

use crate::error::Result;
use crate::ratfunc::{ExtRatFunc, RatFunc};
use std::collections::BTreeMap;

/// Exact coefficient field for tensor operators.
pub trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(a: &Self, b: &Self) -> Self;
    fn mul(a: &Self, b: &Self) -> Self;
    fn neg(a: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn add(a: &Self, b: &Self) -> Self {
        a + b
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn neg(a: &Self) -> Self {
        -a
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl Scalar for ExtRatFunc {
    fn zero() -> Self {
        ExtRatFunc::zero()
    }
    fn one() -> Self {
        ExtRatFunc::one()
    }
    fn add(a: &Self, b: &Self) -> Self {
        a + b
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn neg(a: &Self) -> Self {
        -a
    }
    fn is_zero(&self) -> bool {
        ExtRatFunc::is_zero(self)
    }
}

/// Sparse square operator on (C^n)^(tensor sites). No zero entries stored.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorOp<C: Scalar> {
    n: u32,
    sites: u32,
    entries: BTreeMap<(u64, u64), C>,
}

impl<C: Scalar> TensorOp<C> {
    pub fn zero(n: u32, sites: u32) -> Self {
        assert!(n >= 1);
        TensorOp {
            n,
            sites,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: u32, sites: u32) -> Self {
        Self::scalar_op(n, sites, C::one())
    }

    pub fn scalar_op(n: u32, sites: u32, c: C) -> Self {
        let mut op = Self::zero(n, sites);
        if !c.is_zero() {
            for i in 0..op.dim() {
                op.entries.insert((i, i), c.clone());
            }
        }
        op
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn sites(&self) -> u32 {
        self.sites
    }

    pub fn dim(&self) -> u64 {
        (self.n as u64).pow(self.sites)
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: u64, col: u64) -> Option<&C> {
        self.entries.get(&(row, col))
    }

    pub fn value(&self, row: u64, col: u64) -> C {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn set(&mut self, row: u64, col: u64, v: C) {
        debug_assert!(row < self.dim() && col < self.dim());
        if v.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), v);
        }
    }

    pub fn add_to(&mut self, row: u64, col: u64, v: C) {
        if v.is_zero() {
            return;
        }
        let sum = match self.entries.get(&(row, col)) {
            Some(old) => C::add(old, &v),
            None => v,
        };
        self.set(row, col, sum);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u64, u64), &C)> {
        self.entries.iter()
    }

    /// Matrix product self . rhs (self applied after rhs).
    pub fn compose(&self, rhs: &TensorOp<C>) -> TensorOp<C> {
        assert!(self.n == rhs.n && self.sites == rhs.sites, "shape mismatch");
        let mut out = TensorOp::zero(self.n, self.sites);
        for (&(r, k), a) in &self.entries {
            for (&(_, c), b) in rhs.entries.range((k, 0)..=(k, u64::MAX)) {
                out.add_to(r, c, C::mul(a, b));
            }
        }
        out
    }

    pub fn add(&self, rhs: &TensorOp<C>) -> TensorOp<C> {
        assert!(self.n == rhs.n && self.sites == rhs.sites, "shape mismatch");
        let mut out = self.clone();
        for (&(r, c), v) in &rhs.entries {
            out.add_to(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &TensorOp<C>) -> TensorOp<C> {
        self.add(&rhs.scaled(&C::neg(&C::one())))
    }

    pub fn scaled(&self, c: &C) -> TensorOp<C> {
        let mut out = TensorOp::zero(self.n, self.sites);
        if c.is_zero() {
            return out;
        }
        for (&(r, col), v) in &self.entries {
            out.set(r, col, C::mul(v, c));
        }
        out
    }

    pub fn trace(&self) -> C {
        let mut t = C::zero();
        for i in 0..self.dim() {
            if let Some(v) = self.entries.get(&(i, i)) {
                t = C::add(&t, v);
            }
        }
        t
    }

    fn site_weight(&self, site: u32) -> u64 {
        assert!(site >= 1 && site <= self.sites, "site out of range");
        (self.n as u64).pow(self.sites - site)
    }

    /// Digit of the packed index at a 1-based site.
    pub fn digit(&self, index: u64, site: u32) -> u64 {
        (index / self.site_weight(site)) % self.n as u64
    }

    fn with_digit(&self, index: u64, site: u32, d: u64) -> u64 {
        let w = self.site_weight(site);
        index - self.digit(index, site) * w + d * w
    }

    /// Partial transposition at one site: the row and column digits at that
    /// site are exchanged in every entry.
    pub fn partial_transpose(&self, site: u32) -> TensorOp<C> {
        let mut out = TensorOp::zero(self.n, self.sites);
        for (&(r, c), v) in &self.entries {
            let (dr, dc) = (self.digit(r, site), self.digit(c, site));
            out.set(
                self.with_digit(r, site, dc),
                self.with_digit(c, site, dr),
                v.clone(),
            );
        }
        out
    }

    /// Embed a two-site operator into `sites` factors, its first slot acting
    /// at site a and its second at site b.
    pub fn embed_two_site(&self, sites: u32, a: u32, b: u32) -> TensorOp<C> {
        assert_eq!(self.sites, 2, "embed_two_site needs a two-site operator");
        assert!(a != b && a >= 1 && b >= 1 && a <= sites && b <= sites);
        let n = self.n as u64;
        let mut out = TensorOp::zero(self.n, sites);
        // Enumerate configurations of the untouched sites once.
        let rest: Vec<u32> = (1..=sites).filter(|&s| s != a && s != b).collect();
        let rest_count = (n).pow(rest.len() as u32);
        for (&(r2, c2), v) in &self.entries {
            let (ra, rb) = (r2 / n, r2 % n);
            let (ca, cb) = (c2 / n, c2 % n);
            for conf in 0..rest_count {
                let mut row = 0u64;
                let mut col = 0u64;
                let mut rem = conf;
                for &s in &rest {
                    let d = rem % n;
                    rem /= n;
                    let w = out.site_weight(s);
                    row += d * w;
                    col += d * w;
                }
                row += ra * out.site_weight(a) + rb * out.site_weight(b);
                col += ca * out.site_weight(a) + cb * out.site_weight(b);
                out.set(row, col, v.clone());
            }
        }
        out
    }

    /// Tensor an identity factor in front (new leading sites).
    pub fn with_leading_identity(&self, extra: u32) -> TensorOp<C> {
        let block = self.dim();
        let mut out = TensorOp::zero(self.n, self.sites + extra);
        for d in 0..(self.n as u64).pow(extra) {
            for (&(r, c), v) in &self.entries {
                out.set(d * block + r, d * block + c, v.clone());
            }
        }
        out
    }

    /// Sorted (row, col, coefficient) triples for serialization, with the
    /// coefficients rendered through Display.
    pub fn triples(&self) -> Vec<(u64, u64, String)>
    where
        C: std::fmt::Display,
    {
        self.entries
            .iter()
            .map(|(&(r, c), v)| (r, c, v.to_string()))
            .collect()
    }

    /// JSON document with the factor dimension, site count, and the sparse
    /// triple list.
    pub fn to_json(&self) -> serde_json::Value
    where
        C: std::fmt::Display,
    {
        let entries: Vec<serde_json::Value> = self
            .triples()
            .into_iter()
            .map(|(r, c, v)| serde_json::json!([r, c, v]))
            .collect();
        serde_json::json!({
            "n": self.n,
            "sites": self.sites,
            "entries": entries,
        })
    }
}

impl TensorOp<RatFunc> {
    /// View over the spectral coefficient field (constants in the variable).
    pub fn lift(&self) -> TensorOp<ExtRatFunc> {
        let mut out = TensorOp::zero(self.n, self.sites);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, ExtRatFunc::from_ratfunc(v.clone()));
        }
        out
    }
}

impl TensorOp<ExtRatFunc> {
    /// Entrywise limit of the spectral variable; fails on a genuine pole.
    pub fn rat_limit(&self, at: &RatFunc) -> Result<TensorOp<RatFunc>> {
        let mut out = TensorOp::zero(self.n, self.sites);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v.rat_limit(at)?);
        }
        Ok(out)
    }

    /// Substitute variable -> s * variable in every entry.
    pub fn subst_scale(&self, s: &RatFunc) -> TensorOp<ExtRatFunc> {
        let mut out = TensorOp::zero(self.n, self.sites);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v.subst_scale(s));
        }
        out
    }

    /// Substitute variable -> 1/variable in every entry.
    pub fn subst_inv(&self) -> TensorOp<ExtRatFunc> {
        let mut out = TensorOp::zero(self.n, self.sites);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v.subst_inv());
        }
        out
    }
}
