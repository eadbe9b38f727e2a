//! Acceptance gate: ten end-to-end checks of the identities this library
//! exists to compute, each exact (no tolerances — all arithmetic is exact
//! rational). Every check prints a single PASS/FAIL line with its elapsed
//! time; run with `--nocapture` to see the lines as they complete.

use hecke_fusion::hecke::{q_minus_qinv, Permutation};
use hecke_fusion::matrix::Matrix;
use hecke_fusion::qchar::{
    central_idempotent_norm, expected_symmetrizer_norm, filling_character_sum, formal_qcharacter,
    hc_image, parabolic_symmetrizer, skew_symmetrizer_character, x_series, Series,
};
use hecke_fusion::ratfunc::RatFunc;
use hecke_fusion::rmatrix::{
    f_series_residual_ok, fused_idempotent, hecke_action, rcheck_k, verify_crossing,
    verify_exchange, verify_sandwich, TensorOp,
};
use hecke_fusion::seminormal::{matrix_unit_diag, schur_average, SeminormalRep};
use hecke_fusion::young::{
    partitions_of, ssyt_count, standard_tableaux_of, weak_fillings, Partition, SkewShape,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::UnwindSafe;
use std::time::Instant;

fn criterion(name: &str, body: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(body);
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(()) => println!("PASS {name} ({secs:.1}s)"),
        Err(payload) => {
            println!("FAIL {name} ({secs:.1}s)");
            std::panic::resume_unwind(payload);
        }
    }
}

#[test]
fn tensor_action_satisfies_hecke_relations() {
    criterion("Hecke relations for the tensor R-action (m<=4, n<=3)", || {
        let xi = q_minus_qinv();
        for n in 1..=3u32 {
            for m in 2..=4u32 {
                let id_op = TensorOp::identity(n, m);
                let gens: Vec<_> = (1..m).map(|k| rcheck_k(n, m, k)).collect();
                for (k, r) in gens.iter().enumerate() {
                    let quad = r.compose(r).sub(&r.scaled(&xi)).sub(&id_op);
                    assert!(quad.is_zero(), "quadratic fails: n={n} m={m} k={}", k + 1);
                }
                for k in 0..gens.len().saturating_sub(1) {
                    let (a, b) = (&gens[k], &gens[k + 1]);
                    assert_eq!(
                        a.compose(b).compose(a),
                        b.compose(a).compose(b),
                        "braid fails: n={n} m={m} k={}",
                        k + 1
                    );
                }
                for k in 0..gens.len() {
                    for l in k + 2..gens.len() {
                        assert_eq!(
                            gens[k].compose(&gens[l]),
                            gens[l].compose(&gens[k]),
                            "distant commutation fails: n={n} m={m} ({}, {})",
                            k + 1,
                            l + 1
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn fused_projectors_match_the_matrix_unit_route() {
    criterion("fused projectors equal matrix-unit images (m<=4, n<=3)", || {
        for n in 1..=3u32 {
            for m in 1..=4u32 {
                for lam in partitions_of(m) {
                    for t in standard_tableaux_of(&lam) {
                        let fused = fused_idempotent(&t, n)
                            .unwrap_or_else(|e| panic!("fusion failed for {t}: {e}"));
                        let direct = hecke_action(&matrix_unit_diag(&t), n);
                        assert_eq!(fused, direct, "routes disagree: n={n} tableau {t}");
                    }
                }
            }
        }
    });
}

#[test]
fn trace_decomposes_and_characters_are_orthogonal() {
    criterion("trace decomposition and character orthogonality (m<=4)", || {
        for m in 1..=4u32 {
            let shapes = partitions_of(m);
            let data: Vec<_> = shapes
                .iter()
                .map(|lam| {
                    let rep = SeminormalRep::straight(lam);
                    (
                        lam.schur_element(),
                        RatFunc::int(lam.num_standard() as i64),
                        rep.character_table(),
                    )
                })
                .collect();
            let perms = Permutation::all(m);
            for sigma in &perms {
                let mut sum = RatFunc::zero();
                for (c, _, table) in &data {
                    sum = &sum + &(&table[sigma] * &c.inv());
                }
                let expected = if sigma.length() == 0 {
                    RatFunc::one()
                } else {
                    RatFunc::zero()
                };
                assert_eq!(sum, expected, "trace decomposition fails at {sigma}");
            }
            for (a, (c_a, f_a, tab_a)) in data.iter().enumerate() {
                for (b, (_, _, tab_b)) in data.iter().enumerate() {
                    let mut sum = RatFunc::zero();
                    for sigma in &perms {
                        sum = &sum + &(&tab_a[sigma] * &tab_b[&sigma.inverse()]);
                    }
                    let expected = if a == b { c_a * f_a } else { RatFunc::zero() };
                    assert_eq!(
                        sum, expected,
                        "orthogonality fails for ({}, {})",
                        shapes[a], shapes[b]
                    );
                }
            }
        }
    });
}

#[test]
fn schur_averaging_is_the_scalar_trace() {
    criterion("Schur averaging of random elements (m<=4, 20 trials)", || {
        for m in 1..=4u32 {
            for (index, lam) in partitions_of(m).into_iter().enumerate() {
                let rep = SeminormalRep::straight(&lam);
                let c = lam.schur_element();
                let dim = rep.dim();
                let mut rng = ChaCha8Rng::seed_from_u64(0x5EED + m as u64 * 64 + index as u64);
                for trial in 0..20 {
                    let mut u = Matrix::zero(dim);
                    for i in 0..dim {
                        for j in 0..dim {
                            let k: i64 = rng.gen_range(-3..=3);
                            let e: i64 = rng.gen_range(-2..=2);
                            u.set(i, j, &RatFunc::int(k) * &RatFunc::q_pow(e));
                        }
                    }
                    let avg = schur_average(&rep, &u);
                    let expected = Matrix::identity(dim).scaled(&(&c * &u.trace()));
                    assert_eq!(avg, expected, "averaging fails: {lam} trial {trial}");
                }
            }
        }
    });
}

#[test]
fn crossing_symmetry_holds_symbolically() {
    criterion("crossing symmetry in the spectral variable (n<=3)", || {
        for n in 1..=3u32 {
            assert!(verify_crossing(n), "crossing fails at n={n}");
        }
    });
}

#[test]
fn sandwich_and_exchange_identities_hold() {
    criterion("sandwich and exchange identities (m<=3, n=2)", || {
        let n = 2u32;
        for m in 1..=3u32 {
            for lam in partitions_of(m) {
                for t in standard_tableaux_of(&lam) {
                    if lam.rows() <= n {
                        assert!(verify_sandwich(&t, n), "sandwich fails for {t}");
                    }
                    for k in 1..m {
                        if t.swap_entries(k).is_some() {
                            assert!(verify_exchange(&t, k, n), "exchange fails for {t} at k={k}");
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn filling_character_sums_detect_semistandardness() {
    criterion("filling character sums (m<=4, n<=3, every filling)", || {
        for n in 1..=3u32 {
            for m in 1..=4u32 {
                for lam in partitions_of(m) {
                    let expected =
                        &lam.schur_element() * &RatFunc::int(lam.num_standard() as i64);
                    for filling in weak_fillings(&lam, n) {
                        let got = filling_character_sum(&filling);
                        let want = if filling.is_semistandard() {
                            expected.clone()
                        } else {
                            RatFunc::zero()
                        };
                        assert_eq!(got, want, "character sum wrong for {filling}");
                    }
                }
            }
        }
    });
}

fn compositions(m: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        for mut rest in compositions(m - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn skew_characters_and_symmetrizer_norms_match() {
    criterion("skew characters and symmetrizer norms (m<=4)", || {
        for m in 1..=4u32 {
            for outer in partitions_of(m) {
                for inner_size in 0..m {
                    for inner in partitions_of(inner_size) {
                        if !outer.contains(&inner) {
                            continue;
                        }
                        let shape = SkewShape::new(outer.clone(), inner);
                        let k = shape.size();
                        let got = skew_symmetrizer_character(&shape);
                        let want = if shape.is_horizontal_strip() {
                            expected_symmetrizer_norm(&vec![1; k as usize])
                        } else {
                            RatFunc::zero()
                        };
                        assert_eq!(got, want, "skew value wrong for {shape}");
                    }
                }
            }
            for comp in compositions(m) {
                let mut tuple = Vec::new();
                for (value, &count) in comp.iter().enumerate() {
                    for _ in 0..count {
                        tuple.push(value as u32 + 1);
                    }
                }
                let expected = expected_symmetrizer_norm(&tuple);
                assert_eq!(
                    central_idempotent_norm(&tuple),
                    expected,
                    "norm wrong for composition {comp:?}"
                );
                let s = parabolic_symmetrizer(&tuple);
                for lam in partitions_of(m) {
                    let rep = SeminormalRep::straight(&lam);
                    let img = rep.phi(&s);
                    assert_eq!(
                        &img * &img,
                        img.scaled(&expected),
                        "symmetrizer square wrong for {comp:?} in block {lam}"
                    );
                }
            }
        }
    });
}

#[test]
fn series_images_and_formal_characters_are_consistent() {
    criterion("series images and formal characters (m<=5, n<=4)", || {
        // The identity is structural in the window, so the window narrows as
        // the rank grows: symbolic series inversion cost explodes in (n, K).
        for (n, trunc) in [(1u32, 6u32), (2, 4), (3, 3), (4, 2)] {
            let lhs = hc_image(&Partition::new(vec![1]), n, trunc);
            let mut rhs = Series::zero();
            for i in 1..=n {
                rhs = rhs.add(&x_series(i, 0, n, trunc).unwrap());
            }
            assert_eq!(lhs, rhs, "single-box image differs at n={n}");
        }
        for m in 1..=5u32 {
            for lam in partitions_of(m) {
                for n in 1..=4u32 {
                    assert_eq!(
                        formal_qcharacter(&lam, n).monomial_count(),
                        ssyt_count(&lam, n),
                        "formal character miscounts {lam} at n={n}"
                    );
                }
            }
        }
    });
}

#[test]
fn f_series_solutions_satisfy_their_relation() {
    criterion("f-series functional equation (n=2,3, order 8)", || {
        for n in [2u32, 3] {
            assert!(f_series_residual_ok(n, 8), "residual fails at n={n}");
        }
    });
}
