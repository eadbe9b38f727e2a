//! Tensor-space realization of the Hecke algebra and its spectral identities.
//!
//! The generator T_k acts on (C^n)^(tensor m) as a braided swap at adjacent
//! factors. Around that action live the spectral-parameter operators: the
//! normalized two-site operator `rbar`, its baxterized relatives, fused
//! projectors obtained from matrix idempotents by consecutive evaluation of
//! spectral variables, the crossing symmetry with its scalar series, and the
//! sandwich/exchange identities the projectors satisfy.

pub mod tensor;

pub use tensor::{Scalar, TensorOp};

use crate::error::Result;
use crate::hecke::{q_minus_qinv, HeckeElement, Permutation};
use crate::ratfunc::{ExtRatFunc, Poly, RatFunc};
use crate::young::StandardTableau;

/// Constant two-site operator: q on matching diagonal pairs, 1 on mixed
/// diagonal pairs, q - q^-1 above the antidiagonal swap positions.
pub fn r_const(n: u32) -> TensorOp<RatFunc> {
    let q = RatFunc::q_pow(1);
    let xi = q_minus_qinv();
    let nn = n as u64;
    let mut op = TensorOp::zero(n, 2);
    for a in 0..nn {
        for b in 0..nn {
            let c = if a == b { q.clone() } else { RatFunc::one() };
            op.set(a * nn + b, a * nn + b, c);
        }
    }
    for i in 0..nn {
        for j in 0..nn {
            if i < j {
                // e_ij (x) e_ji maps v_j (x) v_i to v_i (x) v_j.
                op.add_to(i * nn + j, j * nn + i, xi.clone());
            }
        }
    }
    op
}

/// Flip of the two tensor factors.
pub fn p_op(n: u32) -> TensorOp<RatFunc> {
    let nn = n as u64;
    let mut op = TensorOp::zero(n, 2);
    for a in 0..nn {
        for b in 0..nn {
            op.set(b * nn + a, a * nn + b, RatFunc::one());
        }
    }
    op
}

/// Braided swap P.R: satisfies the braid relation and
/// (rcheck - q)(rcheck + q^-1) = 0, so T_k may act by it.
pub fn rcheck(n: u32) -> TensorOp<RatFunc> {
    p_op(n).compose(&r_const(n))
}

/// The braided swap acting at factors (k, k+1) of `sites` tensor factors.
pub fn rcheck_k(n: u32, sites: u32, k: u32) -> TensorOp<RatFunc> {
    rcheck(n).embed_two_site(sites, k, k + 1)
}

/// 1 - c*t as a polynomial in the spectral variable.
fn one_minus(c: RatFunc) -> Poly {
    Poly::from_vec(vec![RatFunc::one(), -&c])
}

/// Normalized two-site operator, a rational family in one spectral variable:
/// identity on matching diagonal pairs, (1-x)/(q - q^-1 x) on mixed ones,
/// and antidiagonal terms (q - q^-1)x/(q - q^-1 x) below resp.
/// (q - q^-1)/(q - q^-1 x) above. Unitary: rbar(x) rbar_inv(x) = 1.
pub fn rbar(n: u32) -> TensorOp<ExtRatFunc> {
    let xi = q_minus_qinv();
    // q - q^-1 x
    let den = Poly::from_vec(vec![RatFunc::q_pow(1), -&RatFunc::q_pow(-1)]);
    let diag = ExtRatFunc::new(one_minus(RatFunc::one()), den.clone());
    let lower = ExtRatFunc::new(
        Poly::from_vec(vec![RatFunc::zero(), xi.clone()]),
        den.clone(),
    );
    let upper = ExtRatFunc::new(Poly::from_vec(vec![xi.clone()]), den);
    let nn = n as u64;
    let mut op = TensorOp::zero(n, 2);
    for a in 0..nn {
        for b in 0..nn {
            let c = if a == b { ExtRatFunc::one() } else { diag.clone() };
            op.set(a * nn + b, a * nn + b, c);
        }
    }
    for i in 0..nn {
        for j in 0..nn {
            if i != j {
                let c = if i > j { lower.clone() } else { upper.clone() };
                op.add_to(i * nn + j, j * nn + i, c);
            }
        }
    }
    op
}

/// Pointwise inverse of `rbar`, computed by conjugating the substitution
/// x -> 1/x with the factor flip.
pub fn rbar_inv(n: u32) -> TensorOp<ExtRatFunc> {
    let p = p_op(n).lift();
    p.compose(&rbar(n).subst_inv()).compose(&p)
}

/// `rbar` evaluated at a rational point of the spectral variable.
pub fn rbar_at(n: u32, x: &RatFunc) -> Result<TensorOp<RatFunc>> {
    rbar(n).rat_limit(x)
}

/// Baxterized generator at a point: rcheck_k + (q - q^-1)/(z^-1 - 1).
/// The argument must avoid z = 0, 1.
pub fn rcheck_spectral(n: u32, sites: u32, k: u32, z: &RatFunc) -> TensorOp<RatFunc> {
    assert!(!z.is_zero() && z != &RatFunc::one(), "spectral point must avoid 0 and 1");
    let shift = &q_minus_qinv() * &(&z.inv() - &RatFunc::one()).inv();
    rcheck_k(n, sites, k).add(&TensorOp::scalar_op(n, sites, shift))
}

/// Two-parameter baxterized generator rcheck_k + (q - q^-1)/(x^-1 y - 1),
/// the image of the baxterized Hecke generator. Requires x != y, y != 0.
pub fn rcheck_xy(n: u32, sites: u32, k: u32, x: &RatFunc, y: &RatFunc) -> TensorOp<RatFunc> {
    let ratio = &(&x.inv() * y) - &RatFunc::one();
    assert!(!ratio.is_zero(), "baxterized generator needs x != y");
    let shift = &q_minus_qinv() * &ratio.inv();
    rcheck_k(n, sites, k).add(&TensorOp::scalar_op(n, sites, shift))
}

/// Image of a Hecke element under T_k -> rcheck_k on rank-many factors.
pub fn hecke_action(x: &HeckeElement, n: u32) -> TensorOp<RatFunc> {
    let m = x.rank();
    let gens: Vec<TensorOp<RatFunc>> = (1..m).map(|k| rcheck_k(n, m, k)).collect();
    let mut out = TensorOp::zero(n, m);
    for (sigma, c) in x.iter() {
        let mut term = TensorOp::scalar_op(n, m, c.clone());
        for i in sigma.reduced_word() {
            term = term.compose(&gens[(i - 1) as usize]);
        }
        out = out.add(&term);
    }
    out
}

/// Inverse of the image of the longest basis element: the product of
/// (rcheck_k - (q - q^-1)) along the reversed reduced word.
pub fn rcheck_longest_inverse(n: u32, m: u32) -> TensorOp<RatFunc> {
    let neg_xi = -&q_minus_qinv();
    let mut out = TensorOp::identity(n, m);
    for &i in Permutation::longest(m).reduced_word().iter().rev() {
        let g = rcheck_k(n, m, i).add(&TensorOp::scalar_op(n, m, neg_xi.clone()));
        out = out.compose(&g);
    }
    out
}

/// Fused projector for a standard tableau, built by consecutive evaluation.
///
/// For j = 2..m the block C_j(t) is the ordered product over i = 1..j-1 of
/// rcheck_{j-i} + (q - q^-1)/(q^{2(c_j - c_i)} t - 1), where c_i is the
/// content of the cell holding i. The running product is evaluated at t = 1
/// after each block (every factor still carrying a later variable is regular
/// there, so the one-variable-at-a-time limits reproduce the joint
/// evaluation). The result, normalized by the Schur element of the conjugate
/// shape and multiplied by the inverse longest-word image, equals the action
/// of the diagonal matrix unit of the tableau.
pub fn fused_idempotent(t: &StandardTableau, n: u32) -> Result<TensorOp<RatFunc>> {
    assert!(t.shape().is_straight(), "fused projector needs a straight shape");
    let m = t.size();
    let contents = t.content_seq();
    let xi = q_minus_qinv();
    let one = RatFunc::one();
    let mut g = TensorOp::<RatFunc>::identity(n, m);
    for j in 2..=m {
        let mut acc = g.lift();
        for i in 1..j {
            let a = RatFunc::q_pow(2 * (contents[(j - 1) as usize] - contents[(i - 1) as usize]));
            // (q - q^-1) / (a t - 1)
            let shift = ExtRatFunc::new(
                Poly::from_vec(vec![xi.clone()]),
                Poly::from_vec(vec![-&one, a]),
            );
            let factor = rcheck_k(n, m, j - i)
                .lift()
                .add(&TensorOp::scalar_op(n, m, shift));
            acc = acc.compose(&factor);
        }
        g = acc.rat_limit(&one)?;
    }
    let norm = t.shape().outer().conjugate().schur_element().inv();
    Ok(g.compose(&rcheck_longest_inverse(n, m)).scaled(&norm))
}

/// Diagonal weights q^{n-1}, q^{n-3}, ..., q^{1-n} of one factor.
pub fn charge_diag(n: u32) -> Vec<RatFunc> {
    (1..=n as i64).map(|i| RatFunc::q_pow(n as i64 - 2 * i + 1)).collect()
}

/// The charge diagonal acting at one site of `sites` factors.
pub fn charge_site(n: u32, sites: u32, site: u32) -> TensorOp<RatFunc> {
    let d = charge_diag(n);
    let mut op = TensorOp::zero(n, sites);
    for idx in 0..op.dim() {
        let w = d[op.digit(idx, site) as usize].clone();
        op.set(idx, idx, w);
    }
    op
}

/// Product of the charge diagonals over all sites.
pub fn charge_all(n: u32, sites: u32) -> TensorOp<RatFunc> {
    let d = charge_diag(n);
    let mut op = TensorOp::zero(n, sites);
    for idx in 0..op.dim() {
        let mut w = RatFunc::one();
        for s in 1..=sites {
            w = &w * &d[op.digit(idx, s) as usize];
        }
        op.set(idx, idx, w);
    }
    op
}

/// Scalar factor of the crossing symmetry:
/// (1 - x q^2)(1 - x q^{2n-2}) / ((1 - x)(1 - x q^{2n})).
pub fn crossing_scalar(n: u32) -> ExtRatFunc {
    let two_n = 2 * n as i64;
    let num = &one_minus(RatFunc::q_pow(2)) * &one_minus(RatFunc::q_pow(two_n - 2));
    let den = &one_minus(RatFunc::one()) * &one_minus(RatFunc::q_pow(two_n));
    ExtRatFunc::new(num, den)
}

/// Both crossing identities as identities of rational families:
/// s(x) (rbar(x)^-1)^{t2} D_2 rbar(x q^{2n})^{t2} = D_2 and
/// s(x) rbar(x q^{2n})^{t1} D_1 (rbar(x)^-1)^{t1} = D_1.
pub fn verify_crossing(n: u32) -> bool {
    let shift = RatFunc::q_pow(2 * n as i64);
    let rb_inv = rbar_inv(n);
    let rb_sh = rbar(n).subst_scale(&shift);
    let s = crossing_scalar(n);
    let d1 = charge_site(n, 2, 1).lift();
    let d2 = charge_site(n, 2, 2).lift();
    let lhs2 = rb_inv
        .partial_transpose(2)
        .compose(&d2)
        .compose(&rb_sh.partial_transpose(2))
        .scaled(&s);
    let lhs1 = rb_sh
        .partial_transpose(1)
        .compose(&d1)
        .compose(&rb_inv.partial_transpose(1))
        .scaled(&s);
    lhs2 == d2 && lhs1 == d1
}

/// The crossing identities evaluated at one rational point (which must avoid
/// the finitely many poles; a pole is reported as an error).
pub fn verify_crossing_at(n: u32, x: &RatFunc) -> Result<bool> {
    let shift = RatFunc::q_pow(2 * n as i64);
    let rb_inv = rbar_inv(n).rat_limit(x)?;
    let rb_sh = rbar(n).rat_limit(&(x * &shift))?;
    let s = crossing_scalar(n).rat_limit(x)?;
    let d1 = charge_site(n, 2, 1);
    let d2 = charge_site(n, 2, 2);
    let lhs2 = rb_inv
        .partial_transpose(2)
        .compose(&d2)
        .compose(&rb_sh.partial_transpose(2))
        .scaled(&s);
    let lhs1 = rb_sh
        .partial_transpose(1)
        .compose(&d1)
        .compose(&rb_inv.partial_transpose(1))
        .scaled(&s);
    Ok(lhs2 == d2 && lhs1 == d1)
}

/// Coefficients f_0..f_k of the scalar series fixed by the crossing
/// functional equation f(x q^{2n}) = f(x) (1-xq^2)(1-xq^{2n-2}) /
/// ((1-x)(1-xq^{2n})) with f(0) = 1. For n = 1 the series is constant.
pub fn f_series(n: u32, k_max: usize) -> Vec<RatFunc> {
    let two_n = 2 * n as i64;
    let mut f: Vec<RatFunc> = Vec::with_capacity(k_max + 1);
    f.push(RatFunc::one());
    for k in 1..=k_max as i64 {
        let lead = &RatFunc::q_pow(two_n * k) - &RatFunc::one();
        let a = &RatFunc::q_pow(two_n * (k - 1))
            * &(&RatFunc::one() + &RatFunc::q_pow(two_n));
        let b = &RatFunc::q_pow(2) + &RatFunc::q_pow(two_n - 2);
        let mut rhs = &f[(k - 1) as usize] * &(&a - &b);
        if k >= 2 {
            let c = &RatFunc::q_pow(two_n)
                * &(&RatFunc::q_pow(two_n * (k - 2)) - &RatFunc::one());
            rhs = &rhs - &(&f[(k - 2) as usize] * &c);
        }
        f.push(&rhs * &lead.inv());
    }
    f
}

/// Truncated product of power series given by coefficient slices.
fn trunc_mul(a: &[RatFunc], b: &[RatFunc], k_max: usize) -> Vec<RatFunc> {
    let mut out = vec![RatFunc::zero(); k_max + 1];
    for (i, ai) in a.iter().enumerate().take(k_max + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(k_max + 1 - i) {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// Re-substitute the computed series into the cross-multiplied functional
/// equation f(x q^{2n})(1-x)(1-x q^{2n}) = f(x)(1-x q^2)(1-x q^{2n-2}) and
/// compare coefficients through order k_max.
pub fn f_series_residual_ok(n: u32, k_max: usize) -> bool {
    let two_n = 2 * n as i64;
    let f = f_series(n, k_max);
    let shifted: Vec<RatFunc> = f
        .iter()
        .enumerate()
        .map(|(k, c)| c * &RatFunc::q_pow(two_n * k as i64))
        .collect();
    let pair = |c: i64| vec![RatFunc::one(), -&RatFunc::q_pow(c)];
    let lhs = trunc_mul(&trunc_mul(&shifted, &pair(0), k_max), &pair(two_n), k_max);
    let rhs = trunc_mul(&trunc_mul(&f, &pair(2), k_max), &pair(two_n - 2), k_max);
    lhs == rhs
}

/// Sandwich identities for a fused projector with one auxiliary factor in
/// front (site 1; the projector acts on sites 2..=m+1). With E' the extended
/// projector and c_k the contents of the tableau:
///   E' A E' = A E'  for A = rbar_{0m}(t q^{2n+2c_m}) ... rbar_{01}(t q^{2n+2c_1}),
///   E' B E' = B E'  for B = rbar_{01}(t q^{2c_1})^-1 ... rbar_{0m}(t q^{2c_m})^-1,
/// as identities of rational families in t.
pub fn verify_sandwich(t: &StandardTableau, n: u32) -> bool {
    let m = t.size();
    let sites = m + 1;
    let contents = t.content_seq();
    let e_ext = hecke_action(&crate::seminormal::matrix_unit_diag(t), n)
        .with_leading_identity(1)
        .lift();
    let two_n = 2 * n as i64;

    let mut a = TensorOp::<ExtRatFunc>::identity(n, sites);
    for k in (1..=m).rev() {
        let arg = RatFunc::q_pow(two_n + 2 * contents[(k - 1) as usize]);
        let f = rbar(n).subst_scale(&arg).embed_two_site(sites, 1, k + 1);
        a = a.compose(&f);
    }
    if e_ext.compose(&a).compose(&e_ext) != a.compose(&e_ext) {
        return false;
    }

    let mut b = TensorOp::<ExtRatFunc>::identity(n, sites);
    for k in 1..=m {
        let arg = RatFunc::q_pow(2 * contents[(k - 1) as usize]);
        let f = rbar_inv(n).subst_scale(&arg).embed_two_site(sites, 1, k + 1);
        b = b.compose(&f);
    }
    e_ext.compose(&b).compose(&e_ext) == b.compose(&e_ext)
}

/// Exchange identity between neighbouring fused projectors: with d = d_k the
/// axial distance and both tableaux standard,
///   rcheck_k(q^{-2d}) E_{swapped} = E_t rcheck_k(q^{2d}).
pub fn verify_exchange(t: &StandardTableau, k: u32, n: u32) -> bool {
    let swapped = t
        .swap_entries(k)
        .expect("exchange identity needs a standard swap");
    let d = t.axial_distance(k);
    let m = t.size();
    let e_t = hecke_action(&crate::seminormal::matrix_unit_diag(t), n);
    let e_sw = hecke_action(&crate::seminormal::matrix_unit_diag(&swapped), n);
    let lhs = rcheck_spectral(n, m, k, &RatFunc::q_pow(-2 * d)).compose(&e_sw);
    let rhs = e_t.compose(&rcheck_spectral(n, m, k, &RatFunc::q_pow(2 * d)));
    lhs == rhs
}
