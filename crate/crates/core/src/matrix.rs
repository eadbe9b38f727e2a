//! Small dense square matrices over the rational-function field. Sizes stay
//! tiny (bounded by numbers of standard tableaux), so the plain O(n^3)
//! product is the right tool.

use crate::ratfunc::RatFunc;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    n: usize,
    data: Vec<RatFunc>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![RatFunc::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        assert!(i < self.n && j < self.n, "index out of range");
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        assert!(i < self.n && j < self.n, "index out of range");
        self.data[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RatFunc::is_zero)
    }

    pub fn trace(&self) -> RatFunc {
        let mut t = RatFunc::zero();
        for i in 0..self.n {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn scaled(&self, c: &RatFunc) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// Some(c) when self == c * identity.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        let c = self.get(0, 0).clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let expect = if i == j { &c } else { &RatFunc::zero() } as &RatFunc;
                if self.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(c)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "size mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "size mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "size mismatch");
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_scalar_detection() {
        let mut a = Matrix::zero(2);
        a.set(0, 0, RatFunc::q_pow(1));
        a.set(0, 1, RatFunc::one());
        a.set(1, 1, RatFunc::q_pow(-1));
        let id = Matrix::identity(2);
        assert_eq!(&a * &id, a);
        assert_eq!(&id * &a, a);
        assert_eq!((&a - &a).trace(), RatFunc::zero());
        assert_eq!(a.trace().to_string(), "q + q^-1");
        assert!(a.as_scalar().is_none());
        assert_eq!(id.scaled(&RatFunc::int(3)).as_scalar(), Some(RatFunc::int(3)));
    }
}
