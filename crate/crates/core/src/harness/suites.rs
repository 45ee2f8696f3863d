use std::f64::consts::FRAC_1_SQRT_2;
use std::time::Instant;

use crate::clifford::{check_division_tower, DivisionAlgebra};
use crate::field::{max_abs, FieldMode};
use crate::harness::random::{max_coeff_diff, trial_orientation, trial_rng, RandomElement};
use crate::harness::report::{run_trials, Failure, ReportBuilder, SuiteReport, TrialOutcome};
use crate::kappa::{
    compare_tables, compose_in_cl40, derive_table, epsilon, from_dual_quaternion, norm_b, norm_b_sq, qform,
    split_mul, to_dual_quaternion, ElementJson, KElement, NormError, Orientation, SplitScalar, StructureTable, DIM,
};
use crate::{Field, Rational};

/// `true` on exact equality (rational) or `max |a - b| <= tol` (float);
/// the float residual is returned either way.
fn agree<F: Field>(a: &[F], b: &[F], tol: f64) -> (bool, Option<f64>) {
    match F::MODE {
        FieldMode::Rational => (a == b, None),
        FieldMode::Float => {
            let r = max_coeff_diff(a, b);
            (r <= tol, Some(r))
        }
    }
}

fn is_zero_within<F: Field>(v: &F, tol: f64) -> (bool, Option<f64>) {
    agree(std::slice::from_ref(v), &[F::zero()], tol)
}

fn outcome(ok: bool, residual: Option<f64>, trial: u64, seed: u64, message: impl FnOnce() -> String, inputs: &[ElementJson]) -> TrialOutcome {
    let mut o = TrialOutcome::pass();
    if let Some(r) = residual {
        o = o.with_residual(r);
    }
    if !ok {
        o.failure = Some(Failure {
            trial: Some(trial),
            sub_seed: Some(seed),
            message: message(),
            inputs: inputs.to_vec(),
        });
    }
    o
}

fn json<F: Field>(xs: &[&KElement<F>]) -> Vec<ElementJson> {
    xs.iter().map(|x| ElementJson::from(*x)).collect()
}

/// Derived table against the committed transcription, both orientations.
pub fn suite_table() -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("table", FieldMode::Rational);
    let mut patterns = Vec::new();
    for lambda in Orientation::BOTH {
        let derived = match derive_table(lambda) {
            Ok(t) => t,
            Err(e) => {
                b.fail(Failure::fixed(format!("lambda {lambda}: derivation failed: {e}")));
                continue;
            }
        };
        let cmp = compare_tables(&derived, &StructureTable::transcribed(lambda));
        for r in 0..DIM {
            for c in 0..DIM {
                let mismatch = cmp.mismatches.iter().find(|m| m.row == r && m.col == c);
                b.check(mismatch.is_none(), || {
                    let m = mismatch.expect("mismatch present");
                    format!(
                        "lambda {lambda}: cell ({r},{c}) derived `{}`, transcribed `{}`",
                        m.derived, m.transcribed
                    )
                });
            }
        }
        b.note(format!("lambda {lambda}: {}/{} cells match", cmp.matching, cmp.cells));
        if cmp.transposed {
            b.note(format!("lambda {lambda}: transcription matches the transpose; row/column convention flipped"));
        } else if !cmp.is_match() {
            b.note(format!("lambda {lambda}: derived table is authoritative; mismatches are transcription errata"));
        }
        let spot = derived.get(6, 1).label();
        b.check(spot == "I\u{2083} e_\u{221e}", || format!("lambda {lambda}: spot cell (6,1) is `{spot}`"));
        patterns.push(derived.index_pattern());
    }
    if let [p, n] = patterns.as_slice() {
        b.check(p == n, || "result-index pattern differs between orientations".into());
    }
    b.finish(start.elapsed())
}

/// Even subalgebras of Cl(1,0), Cl(2,0), Cl(3,0) against ℝ, ℂ, ℍ.
pub fn suite_tower() -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("tower", FieldMode::Rational);
    let expected = [DivisionAlgebra::Real, DivisionAlgebra::Complex, DivisionAlgebra::Quaternion];
    for (n, want) in (1..=3).zip(expected) {
        match check_division_tower(n) {
            Ok(report) => {
                b.check(report.matched && report.expected == want, || {
                    format!("Cl({n},0) even part does not match {}: {:?}", want.symbol(), report.mismatches)
                });
                let mut note = format!("Cl({n},0)+ ~ {}", want.symbol());
                if !report.witnesses.is_empty() {
                    note = format!("{note}: {}", report.witnesses.join(", "));
                }
                b.note(note);
            }
            Err(e) => b.fail(Failure::fixed(format!("Cl({n},0): {e}"))),
        }
    }
    b.finish(start.elapsed())
}

/// ε = -λI₃e_∞: ε² = 1, ε† = ε, and ε commutes with every basis element,
/// checked on the Cl(4,0) embedding and on the table product.
pub fn suite_epsilon() -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("epsilon", FieldMode::Rational);
    for lambda in Orientation::BOTH {
        let eps_k = epsilon::<Rational>(lambda);
        let eps = eps_k.embed_to_cl40().expect("dimension 4");
        let one = KElement::<Rational>::one(lambda).embed_to_cl40().expect("dimension 4");
        b.check(eps.geometric_product(&eps).ok().as_ref() == Some(&one), || format!("lambda {lambda}: eps^2 != 1"));
        b.check(eps.reverse() == eps, || format!("lambda {lambda}: reverse(eps) != eps"));
        b.check(eps_k.kproduct(&eps_k).ok() == Some(KElement::one(lambda)), || {
            format!("lambda {lambda}: table eps^2 != 1")
        });
        for i in 0..DIM {
            let e = KElement::<Rational>::basis(lambda, i).embed_to_cl40().expect("dimension 4");
            let left = eps.geometric_product(&e).expect("same dim");
            let right = e.geometric_product(&eps).expect("same dim");
            b.check(left == right, || format!("lambda {lambda}: eps does not commute with basis {i}"));
        }
    }
    b.finish(start.elapsed())
}

/// Zero divisors off the constraint surface: Z± = (1 ± ε)/2 and
/// X = √2 Z₊, Y = √2 Z₋.
pub fn suite_zero_divisor(mode: FieldMode, tol: f64) -> SuiteReport {
    match mode {
        FieldMode::Rational => zero_divisor_exact(),
        FieldMode::Float => zero_divisor_float(tol),
    }
}

fn zero_divisor_exact() -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("zero-divisor", FieldMode::Rational);
    let half = Rational::from_ratio(1, 2);
    let two = Rational::from_i64(2);
    let one = Rational::from_i64(1);
    for lambda in Orientation::BOTH {
        let zp = SplitScalar::new(half.clone(), half.clone()).to_element(lambda);
        let zm = SplitScalar::new(half.clone(), half.neg()).to_element(lambda);
        let prod = |a: &KElement<Rational>, c: &KElement<Rational>| a.kproduct(c).expect("same orientation");
        let zero = KElement::zero(lambda);

        b.check(prod(&zp, &zp) == zp, || format!("lambda {lambda}: Z+^2 != Z+"));
        b.check(prod(&zm, &zm) == zm, || format!("lambda {lambda}: Z-^2 != Z-"));
        b.check(prod(&zp, &zm) == zero, || format!("lambda {lambda}: Z+ Z- != 0"));
        b.check(prod(&zm, &zp) == zero, || format!("lambda {lambda}: Z- Z+ != 0"));

        // X = √2 Z₊ and Y = √2 Z₋ have irrational coefficients. Every quantity
        // below is homogeneous of degree 2 in the coefficients, so it is
        // computed exactly on Z± and scaled by (√2)² = 2.
        let xy = prod(&zp, &zm).scale(&two);
        let norm_x_sq = zp.norm_a_sq().mul(&two);
        let norm_y_sq = zm.norm_a_sq().mul(&two);
        let f_x = zp.constraint_f().mul(&two);
        let f_y = zm.constraint_f().mul(&two);
        b.check(xy.is_zero(), || format!("lambda {lambda}: XY != 0"));
        b.check(xy.norm_a_sq().is_zero(), || format!("lambda {lambda}: ||XY|| != 0"));
        b.check(norm_x_sq == one, || format!("lambda {lambda}: ||X||^2 = {}", norm_x_sq.format_coeff()));
        b.check(norm_y_sq == one, || format!("lambda {lambda}: ||Y||^2 = {}", norm_y_sq.format_coeff()));
        b.check(f_x == half, || format!("lambda {lambda}: f_K(X) = {}", f_x.format_coeff()));
        b.check(f_y == half.neg(), || format!("lambda {lambda}: f_K(Y) = {}", f_y.format_coeff()));

        // X₇ = -1/√2 and Y₇ = +1/√2 fix the signs of f_K above.
        b.check(zp.coeffs[7] == half.neg() && zm.coeffs[7] == half, || {
            format!("lambda {lambda}: unexpected pseudoscalar coefficients")
        });

        let mut residuals = Vec::new();
        for (name, z) in [("X", &zp), ("Y", &zm)] {
            match norm_b_sq(z, 0.0) {
                Err(NormError::Residual(r)) => {
                    let s = r.value.s.mul(&two);
                    let p = r.value.p.mul(&two);
                    residuals.push(format!("{name}{name}\u{2020} = {} + ({}) \u{03b5}", s.format_coeff(), p.format_coeff()));
                    b.check(true, String::new);
                }
                other => b.check(false, || format!("lambda {lambda}: norm_b({name}) should fail, got {other:?}")),
            }
        }
        b.note(format!(
            "lambda {lambda}: f_K(X) = {}, f_K(Y) = {}, ||X|| = ||Y|| = 1, ||XY|| = 0, norm_b undefined: {}; \
             requiring f_K = 0 gives {} = 0 and {} = 0",
            f_x.format_coeff(),
            f_y.format_coeff(),
            residuals.join("; "),
            f_x.format_coeff(),
            f_y.format_coeff()
        ));
    }
    b.finish(start.elapsed())
}

fn zero_divisor_float(tol: f64) -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("zero-divisor", FieldMode::Float);
    b.tolerance(tol);
    for lambda in Orientation::BOTH {
        let x = SplitScalar::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2).to_element(lambda);
        let y = SplitScalar::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2).to_element(lambda);
        let xy = x.kproduct(&y).expect("same orientation");
        let checks = [
            ("||XY||", xy.norm_a(), 0.0),
            ("||X||", x.norm_a(), 1.0),
            ("||Y||", y.norm_a(), 1.0),
            ("f_K(X)", x.constraint_f(), 0.5),
            ("f_K(Y)", y.constraint_f(), -0.5),
        ];
        for (name, got, want) in checks {
            let r = (got - want).abs();
            b.residual(r);
            b.check(r <= tol, || format!("lambda {lambda}: {name} = {got}, expected {want}"));
        }
        for (name, z) in [("X", &x), ("Y", &y)] {
            let errs = matches!(norm_b(z, tol), Err(NormError::Residual(_)));
            b.check(errs, || format!("lambda {lambda}: norm_b({name}) should be undefined"));
        }
    }
    b.finish(start.elapsed())
}

/// Table product against embed → geometric product → project.
pub fn suite_product_oracle<F: RandomElement>(seed: u64, trials: u64, tol: f64) -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("product-oracle", F::MODE);
    b.tolerance(tol);
    run_trials(&mut b, seed, trials, |t, sub| {
        let mut rng = trial_rng(seed, t);
        let lambda = trial_orientation(t);
        let x = F::unconstrained(&mut rng, lambda);
        let y = F::unconstrained(&mut rng, lambda);
        let table = x.kproduct(&y).expect("same orientation");
        let gp = x.embed_to_cl40().and_then(|a| a.geometric_product(&y.embed_to_cl40()?)).expect("dimension 4");
        let via = KElement::from_cl40(&gp, lambda).expect("even closure");
        let (ok, r) = agree(&table.coeffs, &via.coeffs, tol);
        outcome(ok, r, t, sub, || "table product differs from Cl(4,0) product".into(), &json(&[&x, &y]))
    });
    b.finish(start.elapsed())
}

/// `(XY)Z = X(YZ)`; float tolerance `1e-12 · (1 + max|coeff|)`.
pub fn suite_associativity<F: RandomElement>(seed: u64, trials: u64) -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("associativity", F::MODE);
    b.tolerance(1e-12);
    run_trials(&mut b, seed, trials, |t, sub| {
        let mut rng = trial_rng(seed, t);
        let lambda = trial_orientation(t);
        let x = F::unconstrained(&mut rng, lambda);
        let y = F::unconstrained(&mut rng, lambda);
        let z = F::unconstrained(&mut rng, lambda);
        let left = x.kproduct(&y).and_then(|xy| xy.kproduct(&z)).expect("same orientation");
        let right = y.kproduct(&z).and_then(|yz| x.kproduct(&yz)).expect("same orientation");
        let tol = 1e-12 * (1.0 + max_abs(&left.coeffs));
        let (ok, r) = agree(&left.coeffs, &right.coeffs, tol);
        outcome(ok, r, t, sub, || "(XY)Z != X(YZ)".into(), &json(&[&x, &y, &z]))
    });
    b.finish(start.elapsed())
}

/// ε part of `X X†` against `-2X₀X₇ + 2λ(X₁X₆ + X₂X₅ + X₃X₄)`, against
/// `2 f_K(X)`, and against the dual-quaternion route.
pub fn suite_qform_identity<F: RandomElement>(seed: u64, trials: u64, tol: f64) -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("qform-identity", F::MODE);
    b.tolerance(tol);
    run_trials(&mut b, seed, trials, |t, sub| {
        let mut rng = trial_rng(seed, t);
        let lambda = trial_orientation(t);
        let x = F::unconstrained(&mut rng, lambda);
        let inputs = json(&[&x]);
        let v = match qform(&x) {
            Ok(v) => v,
            Err(e) => return outcome(false, None, t, sub, || e.to_string(), &inputs),
        };
        let c = &x.coeffs;
        let two = F::from_i64(2);
        let l = F::from_i64(lambda.value() as i64);
        let expected_p = two
            .mul(&l)
            .mul(&c[1].mul(&c[6]).add(&c[2].mul(&c[5])).add(&c[3].mul(&c[4])))
            .sub(&two.mul(&c[0]).mul(&c[7]));
        let dual = to_dual_quaternion(&x).qform();
        let lhs = [v.p.clone(), v.p.clone(), v.s.clone(), v.p.clone(), v.s.clone()];
        let rhs = [expected_p, x.constraint_f().mul(&two), x.norm_a_sq(), dual.p, dual.s];
        let (ok, r) = agree(&lhs, &rhs, tol);
        outcome(ok, r, t, sub, || format!("qform {:?} disagrees with closed forms {:?}", lhs, rhs), &inputs)
    });
    b.finish(start.elapsed())
}

/// `Q(X) Q(Y) = Q(XY)` as split-complex numbers, no constraint assumed.
pub fn suite_composition<F: RandomElement>(seed: u64, trials: u64, tol: f64) -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("composition", F::MODE);
    b.tolerance(tol);
    run_trials(&mut b, seed, trials, |t, sub| {
        let mut rng = trial_rng(seed, t);
        let lambda = trial_orientation(t);
        let x = F::unconstrained(&mut rng, lambda);
        let y = F::unconstrained(&mut rng, lambda);
        let inputs = json(&[&x, &y]);
        let xy = x.kproduct(&y).expect("same orientation");
        match (qform(&x), qform(&y), qform(&xy)) {
            (Ok(qx), Ok(qy), Ok(qxy)) => {
                let lhs = split_mul(&qx, &qy);
                let (ok, r) = agree(&[lhs.s.clone(), lhs.p.clone()], &[qxy.s.clone(), qxy.p.clone()], tol);
                outcome(ok, r, t, sub, || format!("Q(X)Q(Y) = {lhs:?}, Q(XY) = {qxy:?}"), &inputs)
            }
            (a, c, d) => outcome(false, None, t, sub, || format!("qform failed: {a:?} {c:?} {d:?}"), &inputs),
        }
    });
    b.finish(start.elapsed())
}

/// `‖XY‖ = ‖X‖ ‖Y‖` with the definition-(b) norm on constrained pairs, and
/// `XY ≠ 0` for nonzero factors.
pub fn suite_norm_relation<F: RandomElement>(seed: u64, trials: u64, tol: f64) -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("norm-relation", F::MODE);
    b.tolerance(tol);
    run_trials(&mut b, seed, trials, |t, sub| {
        let mut rng = trial_rng(seed, t);
        let lambda = trial_orientation(t);
        let x = F::constrained(&mut rng, lambda);
        let y = F::constrained(&mut rng, lambda);
        let inputs = json(&[&x, &y]);
        let xy = x.kproduct(&y).expect("same orientation");
        if !x.is_zero() && !y.is_zero() && xy.is_zero() {
            return outcome(false, None, t, sub, || "zero divisor on the constraint surface".into(), &inputs);
        }
        match F::MODE {
            FieldMode::Rational => match (norm_b_sq(&x, 0.0), norm_b_sq(&y, 0.0), norm_b_sq(&xy, 0.0)) {
                (Ok(nx), Ok(ny), Ok(nxy)) => {
                    let ok = nxy == nx.mul(&ny);
                    outcome(ok, None, t, sub, || "||XY||^2 != ||X||^2 ||Y||^2".into(), &inputs)
                }
                (a, c, d) => outcome(false, None, t, sub, || format!("norm_b undefined: {a:?} {c:?} {d:?}"), &inputs),
            },
            FieldMode::Float => match (norm_b(&x, tol), norm_b(&y, tol), norm_b(&xy, tol)) {
                (Ok(nx), Ok(ny), Ok(nxy)) => {
                    let r = (nxy - nx * ny).abs();
                    outcome(r <= tol, Some(r), t, sub, || format!("||XY|| = {nxy}, ||X|| ||Y|| = {}", nx * ny), &inputs)
                }
                (a, c, d) => outcome(false, None, t, sub, || format!("norm_b undefined: {a:?} {c:?} {d:?}"), &inputs),
            },
        }
    });
    b.finish(start.elapsed())
}

/// Norm definitions (a) and (b) coincide on the constraint surface, and (b)
/// is undefined exactly when `f_K ≠ 0`.
pub fn suite_norm_equivalence<F: RandomElement>(seed: u64, trials: u64, tol: f64) -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("norm-equivalence", F::MODE);
    b.tolerance(tol);
    for lambda in Orientation::BOTH {
        for i in 0..DIM {
            let e = KElement::<F>::basis(lambda, i);
            let ok = matches!(norm_b_sq(&e, tol), Ok(ref v) if *v == F::one()) && e.norm_a_sq() == F::one();
            b.check(ok, || format!("lambda {lambda}: basis {i} norms are not both 1"));
        }
    }
    run_trials(&mut b, seed, trials, |t, sub| {
        let mut rng = trial_rng(seed, t);
        let lambda = trial_orientation(t);
        let x = F::constrained(&mut rng, lambda);
        let y = F::unconstrained(&mut rng, lambda);
        let inputs = json(&[&x, &y]);
        let (mut ok, residual) = match norm_b_sq(&x, tol) {
            Ok(nb) => agree(std::slice::from_ref(&nb), &[x.norm_a_sq()], tol),
            Err(_) => (false, None),
        };
        let two_f = y.constraint_f().mul(&F::from_i64(2));
        let undefined = norm_b_sq(&y, tol).is_err();
        ok &= undefined == !two_f.is_negligible(tol);
        outcome(ok, residual, t, sub, || "norm (a)/(b) equivalence violated".into(), &inputs)
    });
    b.finish(start.elapsed())
}

/// `f_K(X) = f_K(Y) = 0 ⟹ f_K(XY) = 0`.
pub fn suite_orthogonality_closure<F: RandomElement>(seed: u64, trials: u64, tol: f64) -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("orthogonality-closure", F::MODE);
    b.tolerance(tol);
    for lambda in Orientation::BOTH {
        for i in 0..DIM {
            for j in 0..DIM {
                let p = KElement::<F>::basis(lambda, i).kproduct(&KElement::basis(lambda, j)).expect("same orientation");
                b.check(p.constraint_f().is_zero(), || format!("lambda {lambda}: f_K(e{i} e{j}) != 0"));
            }
        }
    }
    run_trials(&mut b, seed, trials, |t, sub| {
        let mut rng = trial_rng(seed, t);
        let lambda = trial_orientation(t);
        let x = F::constrained(&mut rng, lambda);
        let y = F::constrained(&mut rng, lambda);
        let f = x.kproduct(&y).expect("same orientation").constraint_f();
        let (ok, r) = is_zero_within(&f, tol);
        outcome(ok, r, t, sub, || format!("f_K(XY) = {}", f.format_coeff()), &json(&[&x, &y]))
    });
    b.finish(start.elapsed())
}

/// `X ↦ (q_r, q_d) ↦ X` round trip, and `q_r + q_d ε` recomputed in Cl(4,0).
pub fn suite_dual_quaternion<F: RandomElement>(seed: u64, trials: u64, tol: f64) -> SuiteReport {
    let start = Instant::now();
    let mut b = ReportBuilder::new("dual-quaternion", F::MODE);
    b.tolerance(tol);
    run_trials(&mut b, seed, trials, |t, sub| {
        let mut rng = trial_rng(seed, t);
        let lambda = trial_orientation(t);
        let x = F::unconstrained(&mut rng, lambda);
        let v = to_dual_quaternion(&x);
        let back = from_dual_quaternion(&v.q_r, &v.q_d, lambda);
        let composed = compose_in_cl40(&v.q_r, &v.q_d, lambda).expect("dimension 4");
        let embedded = x.embed_to_cl40().expect("dimension 4");
        let (ok, r) = agree(composed.coeffs(), embedded.coeffs(), tol);
        outcome(ok && back == x, r, t, sub, || "dual-quaternion view does not reproduce X".into(), &json(&[&x]))
    });
    b.finish(start.elapsed())
}
