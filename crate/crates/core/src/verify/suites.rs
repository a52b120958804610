use std::collections::HashSet;

use num_bigint::BigInt;
use rand::Rng;

use super::{run_trials, Counterexample, Fault, Suite, Tally, VerifyConfig};
use crate::dickson::{
    carlitz_e2_zero, carlitz_power_sum, chebyshev_t, dickson_eval_fast, dickson_first,
    dickson_kind_k_closed, dickson_kind_k_eval_fast, dickson_sequence, dickson_values,
    kind_k_functional_rhs, kind_k_generating_function, kind_k_sequence,
    multivariate_dickson_sequence, multivariate_generating_function, multivariate_oracle,
    waring_power_sum, SymmetricData,
};
use crate::exec::Strategy;
use crate::linalg::{
    char_data, mat_mul, mat_pow, trace_power_formula, trace_sequence_3x3, CharData, CharData3,
    SmallMatrix,
};
use crate::numtheory::{
    brewer_sum, is_monomial_permutation, is_permutation, legendre, BrewerQuery,
};
use crate::poly::{self, Polynomial};
use crate::rings::{
    is_prime, ExtField, Field, FiniteField, Integers, PolyRing, PrimeField, Rationals, Ring,
    Sample, Style,
};

pub(super) fn run(suite: Suite, cfg: &VerifyConfig) -> Tally {
    match suite {
        Suite::Trace => trace(cfg),
        Suite::Waring2 => waring2(cfg),
        Suite::WaringN => waring_n(cfg),
        Suite::Carlitz => carlitz(cfg),
        Suite::Functional => functional(cfg),
        Suite::Composition => composition(cfg),
        Suite::Ode => ode(cfg),
        Suite::Genfun => genfun(cfg),
        Suite::Chebyshev => chebyshev(cfg),
        Suite::KindK => kindk(cfg),
        Suite::Multivar => multivar(cfg),
        Suite::Brewer => brewer(cfg),
        Suite::Permcheck => permcheck(cfg),
        Suite::Historical => historical(cfg),
    }
}

fn f101() -> PrimeField {
    PrimeField::new(101).expect("101 is prime")
}

/// `Z[a]`, the home of symbolic parameters.
fn za(var: &str) -> PolyRing<Integers> {
    PolyRing::new(Integers, var)
}

fn show<R: Ring>(ring: &R, e: &R::Elem) -> String {
    ring.render(e, Style::Human)
}

fn show_poly<R: Ring>(ring: &R, p: &Polynomial<R::Elem>) -> String {
    poly::render(ring, p, "x", Style::Human)
}

fn show_list<R: Ring>(ring: &R, es: &[R::Elem]) -> String {
    let parts: Vec<String> = es.iter().map(|e| show(ring, e)).collect();
    format!("[{}]", parts.join(", "))
}

/// Closed form, passed through the fault hook.
fn closed<R: Ring>(
    cfg: &VerifyConfig,
    ring: &R,
    n: u64,
    k: u64,
    a: &R::Elem,
) -> Polynomial<R::Elem> {
    let p = dickson_kind_k_closed(ring, n, k, a).expect("degree and kind within bounds");
    match cfg.fault {
        Some(Fault::CorruptClosedForm) => {
            poly::add(ring, &p, &Polynomial::constant(ring, ring.one()))
        }
        None => p,
    }
}

fn merge_all(parts: impl IntoIterator<Item = Tally>) -> Tally {
    let mut total = Tally::default();
    for part in parts {
        total.merge(part);
    }
    total
}

fn odd_primes_up_to(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&p| is_prime(p)).collect()
}

// ---------------------------------------------------------------- trace

fn trace(cfg: &VerifyConfig) -> Tally {
    merge_all([
        trace_2x2(cfg),
        trace_3x3_roots(cfg),
        trace_3x3(cfg),
        mat_pow_additive(cfg),
        trace_inductive_step(cfg),
        three_path(cfg, &Rationals, "three-path-q"),
        three_path(cfg, &f101(), "three-path-f101"),
    ])
}

/// `tr(M^n)` by repeated multiplication against the binomial trace formula.
fn trace_2x2(cfg: &VerifyConfig) -> Tally {
    let ring = Integers;
    run_trials(cfg, "trace-2x2", cfg.samples(100), |rng, _| {
        let entries = (0..4)
            .map(|_| BigInt::from(rng.random_range(-5i64..=5)))
            .collect();
        let m = SmallMatrix::new(2, entries).expect("2x2");
        let CharData::Two(cd) = char_data(&ring, &m) else {
            unreachable!("2x2 input")
        };
        let mut tally = Tally::default();
        let mut power = SmallMatrix::identity(&ring, 2).expect("2x2");
        for n in 0..=30u64 {
            let lhs = power.trace(&ring);
            let rhs = trace_power_formula(&ring, &cd.t, &cd.d, n);
            tally.check(lhs == rhs, || {
                Counterexample::new(
                    "tr(M^n) = sum n/(n-k) C(n-k,k) (-d)^k t^(n-2k)",
                    &[
                        ("matrix", show_list(&ring, m.entries())),
                        ("n", n.to_string()),
                    ],
                    show(&ring, &lhs),
                    show(&ring, &rhs),
                )
            });
            power = mat_mul(&ring, &power, &m).expect("same dimension");
        }
        tally
    })
}

/// Newton's recurrence on `e(x, y, z)` against `x^n + y^n + z^n`.
fn trace_3x3_roots(cfg: &VerifyConfig) -> Tally {
    let ring = Rationals;
    run_trials(cfg, "trace-3x3-roots", cfg.samples(100), |rng, _| {
        let roots = [ring.sample(rng), ring.sample(rng), ring.sample(rng)];
        let e = CharData3::from_roots(&ring, &roots[0], &roots[1], &roots[2]);
        let newton = trace_sequence_3x3(&ring, &e, 30);
        let mut tally = Tally::default();
        let mut powers = [ring.one(), ring.one(), ring.one()];
        for (n, lhs) in newton.iter().enumerate() {
            let rhs = crate::rings::sum(&ring, powers.iter().cloned());
            tally.check(*lhs == rhs, || {
                Counterexample::new(
                    "p_n(e(x, y, z)) = x^n + y^n + z^n",
                    &[("roots", show_list(&ring, &roots)), ("n", n.to_string())],
                    show(&ring, lhs),
                    show(&ring, &rhs),
                )
            });
            for (p, r) in powers.iter_mut().zip(&roots) {
                *p = ring.mul(p, r);
            }
        }
        tally
    })
}

/// Newton's recurrence on the invariants of a matrix against traces of its
/// explicit powers.
fn trace_3x3(cfg: &VerifyConfig) -> Tally {
    let ring = Rationals;
    run_trials(cfg, "trace-3x3", cfg.samples(30), |rng, _| {
        let m = SmallMatrix::new(3, (0..9).map(|_| ring.sample(rng)).collect()).expect("3x3");
        let CharData::Three(e) = char_data(&ring, &m) else {
            unreachable!("3x3 input")
        };
        let newton = trace_sequence_3x3(&ring, &e, 30);
        let mut tally = Tally::default();
        let mut power = SmallMatrix::identity(&ring, 3).expect("3x3");
        for (n, rhs) in newton.iter().enumerate() {
            let lhs = power.trace(&ring);
            tally.check(lhs == *rhs, || {
                Counterexample::new(
                    "tr(M^n) = p_n(e1, e2, e3)",
                    &[
                        ("matrix", show_list(&ring, m.entries())),
                        ("n", n.to_string()),
                    ],
                    show(&ring, &lhs),
                    show(&ring, rhs),
                )
            });
            power = mat_mul(&ring, &power, &m).expect("same dimension");
        }
        tally
    })
}

fn mat_pow_additive(cfg: &VerifyConfig) -> Tally {
    let ring = Rationals;
    run_trials(cfg, "mat-pow-additive", cfg.samples(20), |rng, i| {
        let dim = 2 + (i % 2) as usize;
        let m = SmallMatrix::new(dim, (0..dim * dim).map(|_| ring.sample(rng)).collect())
            .expect("small dimension");
        let mut tally = Tally::default();
        for _ in 0..4 {
            let (j, k) = (rng.random_range(0..=16u64), rng.random_range(0..=16u64));
            let lhs = mat_pow(&ring, &m, j + k);
            let rhs = mat_mul(&ring, &mat_pow(&ring, &m, j), &mat_pow(&ring, &m, k))
                .expect("same dimension");
            tally.check(lhs == rhs, || {
                Counterexample::new(
                    "M^(m+n) = M^m M^n",
                    &[
                        ("matrix", show_list(&ring, m.entries())),
                        ("m", j.to_string()),
                        ("n", k.to_string()),
                    ],
                    show_list(&ring, lhs.entries()),
                    show_list(&ring, rhs.entries()),
                )
            });
        }
        tally
    })
}

/// The closed trace formula obeys `p_n = t p_{n-1} - d p_{n-2}`.
fn trace_inductive_step(cfg: &VerifyConfig) -> Tally {
    let ring = Rationals;
    run_trials(cfg, "trace-inductive", cfg.samples(20), |rng, _| {
        let (t, d) = (ring.sample(rng), ring.sample(rng));
        let p: Vec<_> = (0..=40)
            .map(|n| trace_power_formula(&ring, &t, &d, n))
            .collect();
        let mut tally = Tally::default();
        for n in 2..=40usize {
            let rhs = ring.sub(&ring.mul(&t, &p[n - 1]), &ring.mul(&d, &p[n - 2]));
            tally.check(p[n] == rhs, || {
                Counterexample::new(
                    "p_n = t p_(n-1) - d p_(n-2)",
                    &[
                        ("t", show(&ring, &t)),
                        ("d", show(&ring, &d)),
                        ("n", n.to_string()),
                    ],
                    show(&ring, &p[n]),
                    show(&ring, &rhs),
                )
            });
        }
        tally
    })
}

/// Recurrence, closed form and matrix trace agree for `n ≤ 200`: the
/// recurrence and closed-form polynomials coincide coefficientwise, and the
/// closed form at `x` matches both the numeric recurrence and the trace of
/// the companion power.
fn three_path<R: Ring + Sample>(cfg: &VerifyConfig, ring: &R, tag: &str) -> Tally {
    const N_MAX: u64 = 200;
    run_trials(cfg, tag, cfg.samples(20), |rng, _| {
        let (x, a) = (ring.sample(rng), ring.sample(rng));
        let seq = dickson_sequence(ring, N_MAX, &a).expect("degree within cap");
        let values = dickson_values(ring, N_MAX as usize, &x, &a);
        let mut tally = Tally::default();
        for (n, rec_poly) in seq.iter().enumerate() {
            let clo_poly = closed(cfg, ring, n as u64, 0, &a);
            let clo = poly::eval(ring, &clo_poly, &x);
            let mat = dickson_eval_fast(ring, n as u64, &x, &a).expect("index within bound");
            let inputs = || {
                [
                    ("ring", ring.describe()),
                    ("n", n.to_string()),
                    ("x", show(ring, &x)),
                    ("a", show(ring, &a)),
                ]
            };
            tally.check(*rec_poly == clo_poly, || {
                Counterexample::new(
                    "recurrence polynomial = closed-form polynomial",
                    &inputs(),
                    show_poly(ring, rec_poly),
                    show_poly(ring, &clo_poly),
                )
            });
            tally.check(values[n] == clo && clo == mat, || {
                Counterexample::new(
                    "recurrence = closed form = matrix trace at x",
                    &inputs(),
                    show(ring, &values[n]),
                    show(ring, if values[n] != clo { &clo } else { &mat }),
                )
            });
        }
        tally
    })
}

// ---------------------------------------------------------------- power sums

fn waring2(cfg: &VerifyConfig) -> Tally {
    merge_all([
        waring2_over(cfg, &Rationals, "waring2-q"),
        waring2_over(cfg, &f101(), "waring2-f101"),
    ])
}

/// `x^n + y^n` from `x + y` and `xy`.
fn waring2_over<R: Ring + Sample>(cfg: &VerifyConfig, ring: &R, tag: &str) -> Tally {
    run_trials(cfg, tag, cfg.samples(50), |rng, _| {
        let (x, y) = (ring.sample(rng), ring.sample(rng));
        let (s, p) = (ring.add(&x, &y), ring.mul(&x, &y));
        let mut tally = Tally::default();
        for n in 0..=60u64 {
            let lhs = ring.add(&ring.pow(&x, n), &ring.pow(&y, n));
            let rhs = trace_power_formula(ring, &s, &p, n);
            tally.check(lhs == rhs, || {
                Counterexample::new(
                    "x^n + y^n = sum n/(n-k) C(n-k,k) (-xy)^k (x+y)^(n-2k)",
                    &[
                        ("ring", ring.describe()),
                        ("n", n.to_string()),
                        ("x", show(ring, &x)),
                        ("y", show(ring, &y)),
                    ],
                    show(ring, &lhs),
                    show(ring, &rhs),
                )
            });
        }
        tally
    })
}

/// Waring's formula for up to six roots against direct power sums.
fn waring_n(cfg: &VerifyConfig) -> Tally {
    let ring = Rationals;
    run_trials(cfg, "waring-n", cfg.samples(50), |rng, _| {
        let count = rng.random_range(1..=6usize);
        let roots: Vec<_> = (0..count).map(|_| ring.sample(rng)).collect();
        let e = crate::dickson::elementary_symmetric(&ring, &roots);
        // x^n + v_1 x^{n-1} + ... has v_i = (-1)^i e_i
        let v: Vec<_> = (1..=count)
            .map(|i| {
                if i % 2 == 1 {
                    ring.neg(&e[i])
                } else {
                    e[i].clone()
                }
            })
            .collect();
        let mut tally = Tally::default();
        for kk in 0..=12u64 {
            let lhs = crate::rings::sum(&ring, roots.iter().map(|r| ring.pow(r, kk)));
            let rhs = waring_power_sum(&ring, kk, &v);
            tally.check(lhs == rhs, || {
                Counterexample::new(
                    "sum of root powers = Waring expansion",
                    &[("roots", show_list(&ring, &roots)), ("k", kk.to_string())],
                    show(&ring, &lhs),
                    show(&ring, &rhs),
                )
            });
        }
        tally
    })
}

fn carlitz(cfg: &VerifyConfig) -> Tally {
    let ring = Rationals;
    let general = run_trials(cfg, "carlitz-general", cfg.samples(50), |rng, _| {
        let e = CharData3 {
            e1: ring.sample(rng),
            e2: ring.sample(rng),
            e3: ring.sample(rng),
        };
        carlitz_against_newton(&ring, &e)
    });
    let e3_one = run_trials(cfg, "carlitz-e3-one", cfg.samples(20), |rng, _| {
        let e = CharData3 {
            e1: ring.sample(rng),
            e2: ring.sample(rng),
            e3: ring.one(),
        };
        carlitz_against_newton(&ring, &e)
    });
    let e2_zero = run_trials(cfg, "carlitz-e2-zero", cfg.samples(20), |rng, _| {
        let (e1, e3) = (ring.sample(rng), ring.sample(rng));
        let e = CharData3 {
            e1: e1.clone(),
            e2: ring.zero(),
            e3: e3.clone(),
        };
        let newton = trace_sequence_3x3(&ring, &e, 30);
        let mut tally = Tally::default();
        for (n, rhs) in newton.iter().enumerate() {
            let lhs = carlitz_e2_zero(&ring, n as u64, &e1, &e3);
            tally.check(lhs == *rhs, || {
                Counterexample::new(
                    "e2 = 0 slice = Newton recurrence",
                    &[
                        ("e1", show(&ring, &e1)),
                        ("e3", show(&ring, &e3)),
                        ("n", n.to_string()),
                    ],
                    show(&ring, &lhs),
                    show(&ring, rhs),
                )
            });
        }
        tally
    });
    let from_roots = run_trials(cfg, "carlitz-roots", cfg.samples(20), |rng, _| {
        let (x, y, z) = (ring.sample(rng), ring.sample(rng), ring.sample(rng));
        let e = CharData3::from_roots(&ring, &x, &y, &z);
        let mut tally = Tally::default();
        for n in 0..=30u64 {
            let lhs = ring.add(
                &ring.add(&ring.pow(&x, n), &ring.pow(&y, n)),
                &ring.pow(&z, n),
            );
            let rhs = carlitz_power_sum(&ring, n, &e);
            tally.check(lhs == rhs, || {
                Counterexample::new(
                    "x^n + y^n + z^n = Carlitz expansion",
                    &[
                        (
                            "roots",
                            show_list(&ring, &[x.clone(), y.clone(), z.clone()]),
                        ),
                        ("n", n.to_string()),
                    ],
                    show(&ring, &lhs),
                    show(&ring, &rhs),
                )
            });
        }
        tally
    });
    // The worked instance: roots 1, 2, -2/3 have e2 = 0 and cube sum 235/27.
    let mut worked = Tally::default();
    let q = |n: i64, d: i64| {
        ring.try_from_rational(&num_rational::BigRational::new(n.into(), d.into()))
            .expect("rational")
    };
    let e = CharData3::from_roots(&ring, &q(1, 1), &q(2, 1), &q(-2, 3));
    let expected = q(235, 27);
    for (route, value) in [
        ("general", carlitz_power_sum(&ring, 3, &e)),
        ("e2 = 0 slice", carlitz_e2_zero(&ring, 3, &e.e1, &e.e3)),
    ] {
        worked.check(value == expected && ring.is_zero(&e.e2), || {
            Counterexample::new(
                "1 + 8 - 8/27 = 235/27",
                &[("route", route.to_string())],
                show(&ring, &value),
                show(&ring, &expected),
            )
        });
    }
    merge_all([general, e3_one, e2_zero, from_roots, worked])
}

fn carlitz_against_newton(ring: &Rationals, e: &CharData3<<Rationals as Ring>::Elem>) -> Tally {
    let newton = trace_sequence_3x3(ring, e, 30);
    let mut tally = Tally::default();
    for (n, rhs) in newton.iter().enumerate() {
        let lhs = carlitz_power_sum(ring, n as u64, e);
        tally.check(lhs == *rhs, || {
            Counterexample::new(
                "Carlitz expansion = Newton recurrence",
                &[
                    (
                        "e",
                        show_list(ring, &[e.e1.clone(), e.e2.clone(), e.e3.clone()]),
                    ),
                    ("n", n.to_string()),
                ],
                show(ring, &lhs),
                show(ring, rhs),
            )
        });
    }
    tally
}

// ---------------------------------------------------------------- identities

fn functional(cfg: &VerifyConfig) -> Tally {
    merge_all([
        functional_over(cfg, &Rationals, "functional-q"),
        functional_over(cfg, &f101(), "functional-f101"),
    ])
}

/// `D_n(y + a/y, a) = y^n + a^n / y^n`.
fn functional_over<F: Field + Sample>(cfg: &VerifyConfig, field: &F, tag: &str) -> Tally {
    run_trials(cfg, tag, cfg.samples(100), |rng, _| {
        let y = field.sample_nonzero(rng);
        let a = field.sample(rng);
        let x = field.add(&y, &field.div(&a, &y).expect("y is nonzero"));
        let values = dickson_values(field, 100, &x, &a);
        let mut tally = Tally::default();
        for (n, lhs) in values.iter().enumerate() {
            let n = n as u64;
            let yn = field.pow(&y, n);
            let rhs = field.add(
                &yn,
                &field.div(&field.pow(&a, n), &yn).expect("y is nonzero"),
            );
            tally.check(*lhs == rhs, || {
                Counterexample::new(
                    "D_n(y + a/y, a) = y^n + a^n/y^n",
                    &[
                        ("ring", field.describe()),
                        ("n", n.to_string()),
                        ("y", show(field, &y)),
                        ("a", show(field, &a)),
                    ],
                    show(field, lhs),
                    show(field, &rhs),
                )
            });
        }
        tally
    })
}

/// `D_m(D_n(x, a), a^n) = D_{mn}(x, a)`, symbolically in `a` and at sampled
/// parameters over F_101.
fn composition(cfg: &VerifyConfig) -> Tally {
    let za = za("a");
    let a = za.var();
    let symbolic = composition_grid(cfg, &za, &a, "composition-symbolic");
    let f = f101();
    let sampled = run_trials(cfg, "composition-f101", cfg.samples(4), |rng, _| {
        let a = f.sample(rng);
        composition_check(&f, &a, 12)
    });
    merge_all([symbolic, sampled])
}

/// One trial per outer index `m`.
fn composition_grid<R: Ring>(cfg: &VerifyConfig, ring: &R, a: &R::Elem, tag: &str) -> Tally {
    let seq = dickson_sequence(ring, 144, a).expect("degree within cap");
    run_trials(cfg, tag, 12, |_, i| {
        let m = i + 1;
        let mut tally = Tally::default();
        for n in 1..=12u64 {
            tally.merge(composition_one(ring, a, m, n, &seq));
        }
        tally
    })
}

fn composition_check<R: Ring>(ring: &R, a: &R::Elem, bound: u64) -> Tally {
    let seq = dickson_sequence(ring, bound * bound, a).expect("degree within cap");
    let mut tally = Tally::default();
    for m in 1..=bound {
        for n in 1..=bound {
            tally.merge(composition_one(ring, a, m, n, &seq));
        }
    }
    tally
}

fn composition_one<R: Ring>(
    ring: &R,
    a: &R::Elem,
    m: u64,
    n: u64,
    seq: &[Polynomial<R::Elem>],
) -> Tally {
    let outer = dickson_first(ring, m, &ring.pow(a, n)).expect("degree within cap");
    let lhs = poly::compose(ring, &outer, &seq[n as usize]);
    let rhs = &seq[(m * n) as usize];
    let mut tally = Tally::default();
    tally.check(lhs == *rhs, || {
        Counterexample::new(
            "D_m(D_n(x, a), a^n) = D_mn(x, a)",
            &[
                ("ring", ring.describe()),
                ("m", m.to_string()),
                ("n", n.to_string()),
                ("a", show(ring, a)),
            ],
            show_poly(ring, &lhs),
            show_poly(ring, rhs),
        )
    });
    tally
}

/// `(x^2 - 4a) D'' + x D' - n^2 D = 0`, symbolically and at sampled `a`.
fn ode(cfg: &VerifyConfig) -> Tally {
    let za = za("a");
    let symbolic = ode_check(&za, &za.var());
    let ring = Rationals;
    let sampled = run_trials(cfg, "ode-q", cfg.samples(5), |rng, _| {
        ode_check(&ring, &ring.sample(rng))
    });
    merge_all([symbolic, sampled])
}

fn ode_check<R: Ring>(ring: &R, a: &R::Elem) -> Tally {
    let seq = dickson_sequence(ring, 50, a).expect("degree within cap");
    let four_a = ring.mul(&ring.from_i64(4), a);
    let x2_minus_4a =
        Polynomial::from_coeffs(ring, vec![ring.neg(&four_a), ring.zero(), ring.one()]);
    let mut tally = Tally::default();
    for (n, d) in seq.iter().enumerate() {
        let d1 = poly::derivative(ring, d);
        let d2 = poly::derivative(ring, &d1);
        let n2 = ring.from_i64((n * n) as i64);
        let lhs = poly::sub(
            ring,
            &poly::add(
                ring,
                &poly::mul(ring, &x2_minus_4a, &d2),
                &poly::shift(ring, &d1, 1),
            ),
            &poly::scale(ring, d, &n2),
        );
        tally.check(lhs.is_zero(), || {
            Counterexample::new(
                "(x^2 - 4a) D'' + x D' - n^2 D = 0",
                &[
                    ("ring", ring.describe()),
                    ("n", n.to_string()),
                    ("a", show(ring, a)),
                ],
                show_poly(ring, &lhs),
                "0".to_string(),
            )
        });
    }
    tally
}

/// Series of the kind-k generating function against matrix evaluation.
fn genfun(cfg: &VerifyConfig) -> Tally {
    let ring = Rationals;
    run_trials(cfg, "genfun", cfg.samples(10), |rng, _| {
        let (x, a) = (ring.sample(rng), ring.sample(rng));
        let mut tally = Tally::default();
        for k in 0..=3u64 {
            let (num, den) = kind_k_generating_function(&ring, k, &x, &a);
            let series =
                poly::series_from_rational(&ring, &num, &den, 50).expect("denominator starts at 1");
            for (n, lhs) in series.coeffs().iter().enumerate() {
                let rhs = dickson_kind_k_eval_fast(&ring, n as u64, k, &x, &a).expect("valid kind");
                tally.check(*lhs == rhs, || {
                    Counterexample::new(
                        "[z^n] ((2-k) + (k-1)xz)/(1 - xz + az^2) = D_n,k(x, a)",
                        &[
                            ("k", k.to_string()),
                            ("n", n.to_string()),
                            ("x", show(&ring, &x)),
                            ("a", show(&ring, &a)),
                        ],
                        show(&ring, lhs),
                        show(&ring, &rhs),
                    )
                });
            }
            let back = poly::mul_truncated(&ring, den.coeffs(), series.coeffs(), 50);
            let expected: Vec<_> = (0..50).map(|i| num.coeff(&ring, i)).collect();
            tally.check(back == expected, || {
                Counterexample::new(
                    "denominator * series = numerator mod z^50",
                    &[
                        ("k", k.to_string()),
                        ("x", show(&ring, &x)),
                        ("a", show(&ring, &a)),
                    ],
                    show_list(&ring, &back),
                    show_list(&ring, &expected),
                )
            });
        }
        tally
    })
}

fn chebyshev(cfg: &VerifyConfig) -> Tally {
    merge_all([chebyshev_symbolic(), chebyshev_sampled(cfg), lucas(cfg)])
}

/// `D_n(2ax, a^2) = 2 a^n T_n(x)` as polynomials over `Z[a]`, `n ≤ 40`.
fn chebyshev_symbolic() -> Tally {
    let r = za("a");
    let a = r.var();
    let two_a_x = Polynomial::from_coeffs(&r, vec![r.zero(), r.mul(&r.from_i64(2), &a)]);
    let seq = dickson_sequence(&r, 40, &r.mul(&a, &a)).expect("degree within cap");
    let mut tally = Tally::default();
    for (n, d) in seq.iter().enumerate() {
        let lhs = poly::compose(&r, d, &two_a_x);
        let t = chebyshev_t(&r, n as u64).expect("degree within cap");
        let rhs = poly::scale(&r, &t, &r.mul(&r.from_i64(2), &r.pow(&a, n as u64)));
        tally.check(lhs == rhs, || {
            Counterexample::new(
                "D_n(2ax, a^2) = 2 a^n T_n(x)",
                &[("n", n.to_string())],
                show_poly(&r, &lhs),
                show_poly(&r, &rhs),
            )
        });
    }
    tally
}

fn chebyshev_sampled(cfg: &VerifyConfig) -> Tally {
    let ring = Rationals;
    run_trials(cfg, "chebyshev-q", cfg.samples(10), |rng, _| {
        let (a, x) = (ring.sample(rng), ring.sample(rng));
        let two = ring.from_i64(2);
        let lhs = dickson_values(
            &ring,
            100,
            &ring.mul(&ring.mul(&two, &a), &x),
            &ring.mul(&a, &a),
        );
        let mut tally = Tally::default();
        let (mut t_prev, mut t_cur) = (ring.one(), x.clone());
        for (n, l) in lhs.iter().enumerate() {
            let t_n = if n == 0 { ring.one() } else { t_cur.clone() };
            let rhs = ring.mul(&ring.mul(&two, &ring.pow(&a, n as u64)), &t_n);
            tally.check(*l == rhs, || {
                Counterexample::new(
                    "D_n(2ax, a^2) = 2 a^n T_n(x)",
                    &[
                        ("n", n.to_string()),
                        ("a", show(&ring, &a)),
                        ("x", show(&ring, &x)),
                    ],
                    show(&ring, l),
                    show(&ring, &rhs),
                )
            });
            if n >= 1 {
                let next = ring.sub(&ring.mul(&ring.mul(&two, &x), &t_cur), &t_prev);
                t_prev = std::mem::replace(&mut t_cur, next);
            }
        }
        tally
    })
}

/// `D_n(x, -1)` is the Lucas polynomial `L_n(x)`.
fn lucas(cfg: &VerifyConfig) -> Tally {
    let ring = Integers;
    let seq = dickson_sequence(&ring, 30, &ring.from_i64(-1)).expect("degree within cap");
    let known = [2i64, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199];
    let mut tally = Tally::default();
    for (n, &l) in known.iter().enumerate() {
        let v = poly::eval(&ring, &seq[n], &ring.one());
        tally.check(v == BigInt::from(l), || {
            Counterexample::new(
                "D_n(1, -1) = Lucas number",
                &[("n", n.to_string())],
                v.to_string(),
                l.to_string(),
            )
        });
    }
    let sampled = run_trials(cfg, "lucas", cfg.samples(20), |rng, _| {
        let x = BigInt::from(rng.random_range(-10i64..=10));
        let (mut prev, mut cur) = (BigInt::from(2), x.clone());
        let mut tally = Tally::default();
        for (n, d) in seq.iter().enumerate() {
            let lhs = poly::eval(&ring, d, &x);
            let rhs = if n == 0 { prev.clone() } else { cur.clone() };
            tally.check(lhs == rhs, || {
                Counterexample::new(
                    "D_n(x, -1) = L_n(x)",
                    &[("n", n.to_string()), ("x", x.to_string())],
                    lhs.to_string(),
                    rhs.to_string(),
                )
            });
            if n >= 1 {
                let next = &x * &cur + &prev;
                prev = std::mem::replace(&mut cur, next);
            }
        }
        tally
    });
    merge_all([tally, sampled])
}

fn kindk(cfg: &VerifyConfig) -> Tally {
    merge_all([
        kindk_over(cfg, &Rationals, "kindk-q"),
        kindk_over(cfg, &f101(), "kindk-f101"),
    ])
}

/// Recurrence, closed form, matrix route and the functional equation for
/// `k ≤ 3`, `n ≤ 40`.
fn kindk_over<F: Field + Sample>(cfg: &VerifyConfig, field: &F, tag: &str) -> Tally {
    run_trials(cfg, tag, cfg.samples(20), |rng, _| {
        let (y, a) = loop {
            let y = field.sample_nonzero(rng);
            let a = field.sample_nonzero(rng);
            if field.mul(&y, &y) != a {
                break (y, a);
            }
        };
        let x = field.add(&y, &field.div(&a, &y).expect("y is nonzero"));
        let mut tally = Tally::default();
        for k in 0..=3u64 {
            let seq = kind_k_sequence(field, 40, k, &a).expect("valid kind");
            for (n, d) in seq.iter().enumerate() {
                let n = n as u64;
                let rec = poly::eval(field, d, &x);
                let clo = poly::eval(field, &closed(cfg, field, n, k, &a), &x);
                let mat = dickson_kind_k_eval_fast(field, n, k, &x, &a).expect("valid kind");
                let rhs = kind_k_functional_rhs(field, n, k, &y, &a).expect("nondegenerate");
                let ok = rec == clo && clo == mat && mat == rhs;
                tally.check(ok, || {
                    let other = [&clo, &mat, &rhs]
                        .into_iter()
                        .find(|v| **v != rec)
                        .unwrap_or(&rhs);
                    Counterexample::new(
                        "recurrence = closed = matrix = functional right-hand side",
                        &[
                            ("ring", field.describe()),
                            ("k", k.to_string()),
                            ("n", n.to_string()),
                            ("y", show(field, &y)),
                            ("a", show(field, &a)),
                        ],
                        show(field, &rec),
                        show(field, other),
                    )
                });
            }
        }
        tally
    })
}

/// Multivariate recurrence against `s_1(u_1^n, ..., u_{t+1}^n)`, its seed
/// `D_0 = t + 1`, its generating function and the `t = 1` reduction.
fn multivar(cfg: &VerifyConfig) -> Tally {
    let ring = Rationals;
    let main = run_trials(cfg, "multivar", cfg.samples(30), |rng, i| {
        let t = 1 + (i % 4) as usize;
        let u: Vec<_> = (0..=t).map(|_| ring.sample_nonzero(rng)).collect();
        let data = SymmetricData::from_roots(&ring, &u).expect("t + 1 >= 2 roots");
        let seq = multivariate_dickson_sequence(&ring, 29, &data);
        let mut tally = Tally::default();
        tally.check(seq[0] == ring.from_i64(t as i64 + 1), || {
            Counterexample::new(
                "D_0 = t + 1",
                &[("t", t.to_string())],
                show(&ring, &seq[0]),
                (t + 1).to_string(),
            )
        });
        for (n, lhs) in seq.iter().enumerate().take(21) {
            let rhs = multivariate_oracle(&ring, n as u64, &u, 1).expect("t >= 1");
            tally.check(*lhs == rhs, || {
                Counterexample::new(
                    "D_n = s_1(u_1^n, ..., u_(t+1)^n)",
                    &[("u", show_list(&ring, &u)), ("n", n.to_string())],
                    show(&ring, lhs),
                    show(&ring, &rhs),
                )
            });
        }
        let (num, den) = multivariate_generating_function(&ring, &data);
        let series =
            poly::series_from_rational(&ring, &num, &den, 30).expect("denominator starts at 1");
        tally.check(series.coeffs() == &seq[..], || {
            Counterexample::new(
                "generating function series = recurrence, 30 terms",
                &[("u", show_list(&ring, &u))],
                show_list(&ring, series.coeffs()),
                show_list(&ring, &seq),
            )
        });
        tally
    });
    let reduction = run_trials(cfg, "multivar-t1", cfg.samples(10), |rng, _| {
        let (x, a) = (ring.sample(rng), ring.sample(rng));
        let data = SymmetricData::new(vec![x.clone()], a.clone()).expect("t = 1");
        let lhs = multivariate_dickson_sequence(&ring, 20, &data);
        let rhs = dickson_values(&ring, 20, &x, &a);
        let mut tally = Tally::default();
        tally.check(lhs == rhs, || {
            Counterexample::new(
                "t = 1 reduces to D_n(x, a)",
                &[("x", show(&ring, &x)), ("a", show(&ring, &a))],
                show_list(&ring, &lhs),
                show_list(&ring, &rhs),
            )
        });
        tally
    });
    merge_all([main, reduction])
}

// ---------------------------------------------------------------- number theory

fn brewer(cfg: &VerifyConfig) -> Tally {
    let primes = odd_primes_up_to(101);
    let legendre_tally = run_trials(cfg, "legendre", primes.len(), |_, i| {
        let p = primes[i as usize];
        let squares: HashSet<u64> = (1..p).map(|x| x * x % p).collect();
        let mut tally = Tally::default();
        for a in -(p as i64)..2 * p as i64 {
            let r = a.rem_euclid(p as i64) as u64;
            let expected = if r == 0 {
                0
            } else if squares.contains(&r) {
                1
            } else {
                -1
            };
            let got = legendre(&BigInt::from(a), p).expect("odd prime");
            tally.check(got == expected, || {
                Counterexample::new(
                    "Euler's criterion = enumeration of squares",
                    &[("a", a.to_string()), ("p", p.to_string())],
                    got.to_string(),
                    expected.to_string(),
                )
            });
        }
        for a in 0..p.min(32) {
            for b in 0..p.min(32) {
                let lhs = legendre(&BigInt::from(a * b), p).expect("odd prime");
                let rhs =
                    legendre(&BigInt::from(a), p).unwrap() * legendre(&BigInt::from(b), p).unwrap();
                tally.check(lhs == rhs, || {
                    Counterexample::new(
                        "(ab/p) = (a/p)(b/p)",
                        &[
                            ("a", a.to_string()),
                            ("b", b.to_string()),
                            ("p", p.to_string()),
                        ],
                        lhs.to_string(),
                        rhs.to_string(),
                    )
                });
            }
        }
        tally
    });
    let small = odd_primes_up_to(97);
    let lambda0 = run_trials(cfg, "brewer-lambda0", small.len(), |_, i| {
        let p = small[i as usize];
        let mut tally = Tally::default();
        for a in 0..p as i64 {
            let s = brewer_sum(
                &BrewerQuery::new(p, 0, a).expect("odd prime"),
                Strategy::Sequential,
            )
            .expect("valid query");
            tally.check(s == 0, || {
                Counterexample::new(
                    "Lambda_0(a) = 0",
                    &[("p", p.to_string()), ("a", a.to_string())],
                    s.to_string(),
                    "0".to_string(),
                )
            });
        }
        tally
    });
    let mut anchor = Tally::default();
    let s = brewer_sum(
        &BrewerQuery::new(3, 1, 1).expect("odd prime"),
        Strategy::Sequential,
    )
    .expect("valid query");
    anchor.check(s == -1, || {
        Counterexample::new(
            "Lambda_1(1) = -1 at p = 3",
            &[("p", "3".into()), ("n", "1".into()), ("a", "1".into())],
            s.to_string(),
            "-1".to_string(),
        )
    });
    let sampled = run_trials(cfg, "brewer-brute", cfg.samples(40), |rng, _| {
        let p = primes[rng.random_range(0..primes.len())];
        let n = rng.random_range(0..=20u64);
        let a = rng.random_range(0..p);
        let field = PrimeField::new(p).expect("prime");
        let d = dickson_first(&field, n + 1, &a).expect("degree within cap");
        let squares: HashSet<u64> = (1..p).map(|x| x * x % p).collect();
        let brute: i64 = (0..p)
            .map(|x| match poly::eval(&field, &d, &x) {
                0 => 0,
                v if squares.contains(&v) => 1,
                _ => -1,
            })
            .sum();
        let s = brewer_sum(
            &BrewerQuery::new(p, n, a as i64).expect("odd prime"),
            Strategy::Sequential,
        )
        .expect("valid query");
        let mut tally = Tally::default();
        tally.check(s == brute && s.unsigned_abs() <= p, || {
            Counterexample::new(
                "Lambda_n(a) = direct character sum, |Lambda| <= p",
                &[
                    ("p", p.to_string()),
                    ("n", n.to_string()),
                    ("a", a.to_string()),
                ],
                s.to_string(),
                brute.to_string(),
            )
        });
        tally
    });
    merge_all([legendre_tally, lambda0, anchor, sampled])
}

/// Exhaustive permutation verdicts against the gcd criteria.
fn permcheck(cfg: &VerifyConfig) -> Tally {
    let primes = [5u64, 7, 11, 13, 31];
    let prime_fields = run_trials(cfg, "permcheck-prime", primes.len(), |_, i| {
        permcheck_field(&PrimeField::new(primes[i as usize]).expect("prime"))
    });
    let orders = [4u64, 8, 9, 16, 25, 27];
    let ext_fields = run_trials(cfg, "permcheck-ext", orders.len(), |_, i| {
        permcheck_field(&ExtField::of_order(orders[i as usize]).expect("prime power"))
    });
    merge_all([prime_fields, ext_fields])
}

fn permcheck_field<F: FiniteField>(field: &F) -> Tally {
    let mut tally = Tally::default();
    for n in 1..=50u64 {
        let mono = is_monomial_permutation(field, n, Strategy::Sequential).expect("small field");
        tally.check(mono.agreement, || {
            Counterexample::new(
                "x^n permutes F_q iff gcd(n, q - 1) = 1",
                &[("field", field.describe()), ("n", n.to_string())],
                mono.is_permutation.to_string(),
                (mono.gcd_value == 1).to_string(),
            )
        });
        for a in field.elements().skip(1) {
            let v =
                is_permutation(field, n, &a, Strategy::Sequential).expect("small field, a != 0");
            tally.check(v.agreement, || {
                Counterexample::new(
                    "D_n(x, a) permutes F_q iff gcd(n, q^2 - 1) = 1",
                    &[
                        ("field", field.describe()),
                        ("n", n.to_string()),
                        ("a", show(field, &a)),
                    ],
                    v.is_permutation.to_string(),
                    (v.gcd_value == 1).to_string(),
                )
            });
        }
    }
    tally
}

/// The odd-degree expansion of `D_n(x, -b)` with coefficients
/// `n (n-i-1)(n-i-2)...(n-2i+1) / i!`.
fn historical(cfg: &VerifyConfig) -> Tally {
    let r = za("b");
    let b = r.var();
    let minus_b = r.neg(&b);
    let mut tally = Tally::default();
    for n in (1..=15u64).step_by(2) {
        let mut coeffs = vec![r.zero(); n as usize + 1];
        for i in 0..=(n - 1) / 2 {
            let falling: BigInt = ((n - 2 * i + 1)..=(n - i - 1)).map(BigInt::from).product();
            let fact: BigInt = (1..=i).map(BigInt::from).product();
            let c = if i == 0 {
                BigInt::from(1)
            } else {
                BigInt::from(n) * falling / fact
            };
            coeffs[(n - 2 * i) as usize] = r.mul(&r.from_bigint(&c), &r.pow(&b, i));
        }
        let expected = Polynomial::from_coeffs(&r, coeffs);
        for (route, p) in [
            ("closed", closed(cfg, &r, n, 0, &minus_b)),
            (
                "recurrence",
                dickson_first(&r, n, &minus_b).expect("degree within cap"),
            ),
        ] {
            tally.check(p == expected, || {
                Counterexample::new(
                    "D_n(x, -b) = x^n + sum n (n-i-1)...(n-2i+1)/i! b^i x^(n-2i)",
                    &[("n", n.to_string()), ("route", route.to_string())],
                    show_poly(&r, &p),
                    show_poly(&r, &expected),
                )
            });
        }
    }
    tally
}
