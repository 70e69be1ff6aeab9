//! Acceptance suite: the twelve exit criteria of the workbench, each with
//! its tolerance and runtime budget pinned.  One pass/fail line is printed
//! per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};


use twoval::exact::{rat, ratio, MPoly, RatFunc, Var};
use twoval::numeric::{cx, multiset_distance_rel, sample_disk, seeded_rng};
use twoval::{chazy, elliptic, formalgroup, frobenius, gaussmanin, quasimodular, twovalued, yangbaxter};
use twoval::C64;

struct Criterion {
    number: u32,
    description: &'static str,
    budget: Duration,
}

impl Criterion {
    fn new(number: u32, description: &'static str, budget_secs: u64) -> Criterion {
        Criterion {
            number,
            description,
            budget: Duration::from_secs(budget_secs),
        }
    }

    fn run(self, body: impl FnOnce() -> Result<(), String>) {
        let start = Instant::now();
        let result = body();
        let elapsed = start.elapsed();
        let status = if result.is_ok() && elapsed <= self.budget {
            "pass"
        } else {
            "FAIL"
        };
        println!(
            "criterion {:02} {} ({:>7.2?} / budget {:?}) {}",
            self.number, status, elapsed, self.budget, self.description
        );
        if let Err(msg) = result {
            panic!("criterion {:02} failed: {}", self.number, msg);
        }
        assert!(
            elapsed <= self.budget,
            "criterion {:02} exceeded its runtime budget: {:?} > {:?}",
            self.number,
            elapsed,
            self.budget
        );
    }
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

#[test]
fn criterion_01_universal_associativity_theorem() {
    Criterion::new(
        1,
        "associativity defect factors exactly as (4k8 - k4^2 + k2k6) E with E nonzero",
        60,
    )
    .run(|| {
        let (ad, e) = twovalued::certify_universal_associativity()
            .map_err(|err| format!("factorization failed: {}", err))?;
        ensure(!ad.defect.is_zero(), "defect unexpectedly zero")?;
        ensure(!e.is_zero(), "cofactor E is zero")?;
        let value = (&MPoly::var(twovalued::vk(4)).pow(2)
            - &(&MPoly::var(twovalued::vk(2)) * &MPoly::var(twovalued::vk(6))))
            .scale(&ratio(1, 4));
        ensure(
            ad.defect.substitute(twovalued::vk(8), &value).is_zero(),
            "substituting k8 = (k4^2 - k2 k6)/4 does not kill the defect",
        )
    });
}

#[test]
fn criterion_02_ramanujan_and_chazy_for_e2() {
    Criterion::new(2, "Ramanujan identities and the E2 Chazy equation to q-order 64", 5).run(|| {
        ensure(quasimodular::verify_ramanujan(64), "Ramanujan identities failed")?;
        ensure(quasimodular::verify_chazy_e2(64), "Chazy equation for E2 failed")
    });
}

#[test]
fn criterion_03_jet_equivalence() {
    Criterion::new(
        3,
        "4k8 - k4^2 + k2k6 is an exact jet multiple of the Chazy defect of y = -lam k2/4",
        1,
    )
    .run(|| {
        let je = chazy::jet_equivalence();
        ensure(je.holds, "jet identity failed")?;
        ensure(!je.defect.is_zero() && !je.chazy.is_zero(), "degenerate sides")?;
        // The exact ratio is -128/(3 lam^4), pinned by the flow relations
        // themselves; the nearby-looking candidate -32/(3 lam^3) must be
        // rejected.
        ensure(
            chazy::jet_constant_fits(-128, 3, 4),
            "ratio is not -128/(3 lam^4)",
        )?;
        ensure(
            !chazy::jet_constant_fits(-32, 3, 3),
            "the rejected candidate -32/(3 lam^3) unexpectedly fits",
        )
    });
}

#[test]
fn criterion_04_gauss_manin_horizontality() {
    Criterion::new(
        4,
        "unique Ramanujan field, flatness, discriminant tangency and frame determinant",
        5,
    )
    .run(|| {
        let solved = gaussmanin::ramanujan_field();
        let expected = gaussmanin::ramanujan_field_expected();
        ensure(
            (0..3).all(|i| solved.field.f[i] == expected.f[i]),
            "field components differ from (t1^2 - t2/12, 4t1t2 - 6t3, 6t1t3 - t2^2/3)",
        )?;
        ensure(
            solved.system_det == gaussmanin::discriminant().scale(&rat(6)),
            "linear system determinant is not 6 Delta",
        )?;
        ensure(
            solved.back_substituted[0][0].is_zero()
                && solved.back_substituted[0][1] == RatFunc::constant(rat(-1))
                && solved.back_substituted[1][0].is_zero()
                && solved.back_substituted[1][1].is_zero(),
            "A(v) is not [[0,-1],[0,0]]",
        )?;
        ensure(gaussmanin::verify_flatness(), "connection is not flat")?;
        let rep = gaussmanin::verify_tangency_and_frame();
        ensure(
            rep.v_tangent && rep.u_tangent && rep.w_tangent,
            "tangency identities failed",
        )?;
        ensure(rep.frame_det_ok, "frame determinant is not +-(4/3) Delta")?;
        ensure(rep.divisibility_ok, "dDelta(.) not divisible by Delta")
    });
}

#[test]
fn criterion_05_integral_curve() {
    Criterion::new(5, "(E2/12, E4/12, E6/216) is an integral curve to q-order 64", 5).run(|| {
        ensure(
            gaussmanin::verify_integral_curve(64),
            "integral-curve identities failed",
        )?;
        ensure(
            gaussmanin::verify_integral_curve_jet_equivalence(),
            "jet-level equivalence with the Ramanujan identities failed",
        )
    });
}

#[test]
fn criterion_06_frobenius_scan_and_wdvv() {
    Criterion::new(
        6,
        "27 associators vanish iff a^2 - d - bc = 0; WDVV reduces; /96 quartic gives Chazy",
        10,
    )
    .run(|| {
        let alg = frobenius::FrobAlg3::symbolic();
        let scan = frobenius::associator_scan(&alg).map_err(|e| e.to_string())?;
        ensure(
            scan.all_divisible && scan.unit_quotient,
            "associators do not generate exactly (a^2 - d - bc)",
        )?;
        let on_shell = frobenius::FrobAlg3::numeric(rat(1), rat(2), rat(3), rat(-5));
        let scan2 = frobenius::associator_scan(&on_shell).map_err(|e| e.to_string())?;
        ensure(
            scan2
                .associators
                .iter()
                .all(|(_, a)| a.iter().all(|c| c.is_zero())),
            "associators do not vanish on shell",
        )?;
        let wdvv = frobenius::wdvv_reduction(&alg);
        ensure(
            wdvv.normalization && wdvv.reduces_to_relation && wdvv.relation_attained,
            "WDVV reduction failed",
        )?;
        ensure(
            frobenius::quartic_potential_jets(96).relation()
                == frobenius::quartic_reduction_target(96),
            "/96 quartic jets do not reproduce the Chazy form",
        )
    });
}

#[test]
fn criterion_07_qybe_theorem() {
    Criterion::new(
        7,
        "Y = R12 R13 R23 - R23 R13 R12 = (a^2 - d - bc) N exactly, N nonzero; R matches print",
        30,
    )
    .run(|| {
        let (r, convention) = yangbaxter::build_r().map_err(|e| e.to_string())?;
        ensure(
            convention == yangbaxter::Convention::ColumnsAreImages,
            "unexpected matrix convention",
        )?;
        let f = yangbaxter::qybe_defect(&r).map_err(|e| e.to_string())?;
        ensure(f.defect_nonzero, "defect is zero")?;
        ensure(f.cofactor_nonzero, "cofactor N is zero")?;
        let d_val = &(&MPoly::var(Var::new("a")) * &MPoly::var(Var::new("a")))
            - &(&MPoly::var(Var::new("b")) * &MPoly::var(Var::new("c")));
        ensure(
            f.defect.substitute(Var::new("d"), &d_val).is_zero(),
            "d = a^2 - bc does not kill the defect",
        )?;
        ensure(
            yangbaxter::qybe_holds_at(&r, rat(1), rat(2), rat(3), rat(-5)),
            "QYBE fails at an on-shell rational point",
        )?;
        ensure(
            !yangbaxter::qybe_holds_at(&r, rat(1), rat(2), rat(3), rat(-4)),
            "QYBE holds at an off-shell rational point",
        )
    });
}

#[test]
fn criterion_08_formal_group_side() {
    Criterion::new(
        8,
        "genus law axioms + log additivity to order 8; modulus square matches to order 6; log ODE",
        120,
    )
    .run(|| {
        let f = formalgroup::buchstaber_fgl(8);
        let rep = formalgroup::check_fgl(&f, 8);
        ensure(
            rep.unit && rep.commutative && rep.odd && rep.associative,
            "formal group axioms failed at order 8",
        )?;
        ensure(rep.log_additive, "logarithm additivity failed at order 8")?;
        ensure(
            formalgroup::verify_modulus_square_matches_law(6),
            "modulus square does not match the Buchstaber quadratic at order 6",
        )?;
        let tvf = formalgroup::law_quadratic(9);
        let ode = formalgroup::verify_log_ode(&tvf);
        ensure(ode.first_type, "first-type condition failed")?;
        ensure(
            ode.ode && ode.checked_order >= 7,
            "(1/2) phi1 B' + (1/8) phi2 B'' = 1 failed termwise",
        )?;
        ensure(ode.phi2_integral, "phi2 = 8 int phi1 failed")
    });
}

#[test]
fn criterion_09_elliptic_coset_numerics() {
    Criterion::new(
        9,
        "100 random curves: +- values match D-roots within 1e-8; associativity within 1e-7",
        5,
    )
    .run(|| {
        let mut rng = seeded_rng(0, 101);
        let sample_curve = |rng: &mut rand_chacha::ChaCha8Rng| loop {
            let p = elliptic::CurveParams::new(
                sample_disk(rng, 1.0),
                sample_disk(rng, 1.0),
                sample_disk(rng, 1.0),
            );
            if p.delta().norm() >= 1e-6 {
                return p;
            }
        };
        let mut done = 0;
        let mut worst_roots = 0.0f64;
        while done < 100 {
            let params = sample_curve(&mut rng);
            let z1: C64 = sample_disk(&mut rng, 1.5);
            let z2: C64 = sample_disk(&mut rng, 1.5);
            let Some(d) = elliptic::coset_vs_d_roots_trial(&params, z1, z2) else {
                continue;
            };
            worst_roots = worst_roots.max(d);
            done += 1;
        }
        ensure(
            worst_roots < 1e-8,
            &format!("root-matching distance {} >= 1e-8", worst_roots),
        )?;
        let mut done = 0;
        let mut worst_assoc = 0.0f64;
        while done < 100 {
            let params = sample_curve(&mut rng);
            let zs = [
                sample_disk(&mut rng, 1.2),
                sample_disk(&mut rng, 1.2),
                sample_disk(&mut rng, 1.2),
            ];
            let Some(d) = elliptic::coset_associativity_defect(&params, zs, 1e-5) else {
                continue;
            };
            worst_assoc = worst_assoc.max(d);
            done += 1;
        }
        ensure(
            worst_assoc < 1e-7,
            &format!("associativity defect {} >= 1e-7", worst_assoc),
        )
    });
}

#[test]
fn criterion_10_sl2_covariance_and_degenerate_family() {
    Criterion::new(
        10,
        "jet solve pins kappa = -6 uniquely for y''' = 2yy'' - 3y'^2; degenerate family exact",
        5,
    )
    .run(|| {
        let rep = chazy::sl2_covariance(chazy::ChazyForm::Doubled);
        ensure(rep.kappa == -6 && rep.vanishes, "kappa = -6 does not vanish the defect")?;
        ensure(rep.kappa_unique, "kappa = -6 is not unique")?;
        ensure(rep.identity_ok, "identity matrix does not act trivially")?;
        let halved = chazy::sl2_covariance(chazy::ChazyForm::Halved);
        ensure(
            halved.kappa == -12 && halved.vanishes && halved.kappa_unique,
            "halved form does not pin kappa = -12",
        )?;
        let degen = chazy::degenerate_check();
        ensure(degen.family_solves, "degenerate family is not an exact solution")?;
        ensure(degen.constant_solves_halved, "constants fail the halved form")?;
        ensure(degen.closed_under_action, "family is not closed under the action")
    });
}

#[test]
fn criterion_11_frobenius_n_homomorphisms() {
    Criterion::new(
        11,
        "recursion = cycle sum (100 instances per n <= 4); det identity; circulants n <= 8",
        10,
    )
    .run(|| {
        let mut rng = seeded_rng(0, 111);
        use rand::Rng;
        let rand_rat =
            |rng: &mut rand_chacha::ChaCha8Rng| ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        for n in 2..=4usize {
            for i in 0..100 {
                let dim = 2 + (i % 2);
                let tail: Vec<_> = (0..dim).map(|_| rand_rat(&mut rng)).collect();
                let alg = frobenius::FinAlgebra::quotient_algebra(&tail);
                let f: Vec<_> = (0..dim).map(|_| rand_rat(&mut rng)).collect();
                let args: Vec<Vec<_>> = (0..n)
                    .map(|_| (0..dim).map(|_| rand_rat(&mut rng)).collect())
                    .collect();
                let rec = frobenius::phi_recursive(&alg, &f, &args);
                let cyc = frobenius::phi_cycle_sum(&alg, &f, &args).map_err(|e| e.to_string())?;
                ensure(rec == cyc, &format!("recursion != cycle sum, n = {} instance {}", n, i))?;
            }
        }
        for d in [2usize, 3] {
            let alg = frobenius::FinAlgebra::matrix_algebra(d);
            let mut trace = vec![rat(0); d * d];
            for i in 0..d {
                trace[i * d + i] = rat(1);
            }
            for _ in 0..10 {
                let m: Vec<_> = (0..d * d).map(|_| rand_rat(&mut rng)).collect();
                let rows: Vec<Vec<_>> = (0..d).map(|r| m[r * d..(r + 1) * d].to_vec()).collect();
                let want = frobenius::det_rational(&rows);
                let phi =
                    frobenius::phi_cycle_sum(&alg, &trace, &vec![m.clone(); d]).map_err(|e| e.to_string())?;
                ensure(
                    phi / frobenius::factorial(d) == want,
                    &format!("det identity failed for a random {0}x{0} matrix", d),
                )?;
            }
        }
        for n in 2..=8 {
            let rep = frobenius::group_determinant(n);
            ensure(rep.factorization_ok, &format!("circulant factorization failed, n = {}", n))?;
            ensure(
                rep.regular_character_ok,
                &format!("regular-character identity failed, n = {}", n),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_12_flow_integration() {
    Criterion::new(
        12,
        "RK4 invariant drift < 1e-8 at 2048 steps with observed 4th-order convergence",
        5,
    )
    .run(|| {
        let mut rng = seeded_rng(0, 121);
        let init = [
            sample_disk(&mut rng, 0.8),
            sample_disk(&mut rng, 0.8),
            sample_disk(&mut rng, 0.8),
        ];
        let lambda = cx::<f64>(1.0, 0.0) + sample_disk::<f64>(&mut rng, 0.5);
        let drift = |init: [C64; 3], lambda: C64, steps: usize| {
            let traj =
                chazy::integrate_flow(init, lambda, cx(0.0, 0.0), cx(1.0, 0.0), steps).unwrap();
            chazy::flow_residuals(&traj, lambda, cx::<f64>(1.0 / steps as f64, 0.0)).invariant_drift
        };
        let d2048 = drift(init, lambda, 2048);
        ensure(d2048 < 1e-8, &format!("drift {} >= 1e-8 at 2048 steps", d2048))?;
        // Convergence order is measured on a trajectory with O(1) dynamics,
        // where truncation error dominates roundoff at these step counts.
        let ref_init = [cx(0.7, 0.2), cx(-0.4, 0.5), cx(0.3, -0.8)];
        let ref_lambda = cx::<f64>(1.0, 0.5);
        ensure(
            drift(ref_init, ref_lambda, 2048) < 1e-8,
            "reference trajectory drift >= 1e-8 at 2048 steps",
        )?;
        let (d256, d512) = (
            drift(ref_init, ref_lambda, 256),
            drift(ref_init, ref_lambda, 512),
        );
        ensure(
            d512 <= d256 / 8.0,
            &format!("no 4th-order convergence: {} vs {}", d512, d256),
        )
    });
}

/// The two symbolic routes to the numeric multiset-associativity oracle must
/// agree: laws built from curve parameters pass, a perturbed k8 fails.
#[test]
fn multiset_oracle_positive_and_negative() {
    let law: twovalued::NumLaw<f64> =
        twovalued::NumLaw::from_curve(cx(0.4, 0.1), cx(-0.8, 0.3), cx(0.2, -0.5));
    let (x, y, z) = (cx(0.9, 0.1), cx(-0.4, 0.7), cx(0.2, -0.6));
    let good = law.associativity_defect_at(x, y, z, 1e-12).unwrap();
    assert!(good < 1e-9, "defect {}", good);
    let mut bad = law;
    bad.k8 += cx(0.25, 0.0);
    let worse = bad.associativity_defect_at(x, y, z, 1e-12).unwrap();
    assert!(worse > 1e-4, "perturbed defect {}", worse);
    // sanity for the elementary law: 1*1 = {0, 4}
    let elem = twovalued::NumLaw::<f64>::elementary();
    let r = elem.multiply(cx(1.0, 0.0), cx(1.0, 0.0), 1e-12).unwrap();
    assert!(multiset_distance_rel(&r, &[cx::<f64>(0.0, 0.0), cx(4.0, 0.0)]) < 1e-12);
}
