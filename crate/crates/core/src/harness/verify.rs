use std::sync::Arc;

use serde_json::json;

use crate::algebra::{JsonScalar, RationalFunction};
use crate::boxball::{
    bbs_step, bbs_step_sequential, cyclic_canonicalize, equal_mod_sigma, eta, eta_sequence, t_lift,
    tropical_step, tropicalize, BoxBallState,
};
use crate::jacobian::{
    add, divisor_d_on, divisor_d_tilde, eigenvector_map_on, equal_mod_cn, neg, scalar_mul, sub,
    to_standard_form, torsion_generator, validate_membership, HyperellipticCurve, JacobianError,
    MumfordDivisor,
};
use crate::toda::{
    cyclic_shift, spectral_curve, spectral_identities, toda_step, toda_step_recursive_check,
    TodaState,
};

use super::json::{
    boxball_to_json, curve_to_json, divisor_to_json, state_to_json, tropical_to_json,
};
use super::{HarnessError, TraceRecord};

/// Unwrap an arithmetic result, recording a failure (or a domain exit) under `id`.
fn attempt<T>(trace: &mut TraceRecord, id: &str, r: Result<T, JacobianError>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(JacobianError::Toda(e)) if e.is_domain_exit() => {
            trace.domain_exit(id, e);
            None
        }
        Err(e) => {
            trace.fail(id, e);
            None
        }
    }
}

fn step_or_exit<F: JsonScalar>(
    trace: &mut TraceRecord,
    id: &str,
    s: &TodaState<F>,
) -> Option<TodaState<F>> {
    match toda_step(s) {
        Ok(next) => Some(next),
        Err(e) => {
            trace.domain_exit(id, e);
            None
        }
    }
}

fn require_sites<F: JsonScalar>(s: &TodaState<F>) -> Result<(), HarnessError> {
    if s.n() < 3 {
        return Err(HarnessError::BadInput(format!(
            "the spectral curve needs n >= 3, got {}",
            s.n()
        )));
    }
    Ok(())
}

fn curve_of<F: JsonScalar>(s: &TodaState<F>) -> Result<Arc<HyperellipticCurve<F>>, HarnessError> {
    let c = spectral_curve(s)?;
    Ok(Arc::new(HyperellipticCurve::from_spectral(&c)?))
}

/// Run the flow, checking the recursive rules and, for `n ≥ 3`, conservation of the curve.
pub fn toda_run<F: JsonScalar>(s: &TodaState<F>, steps: usize) -> TraceRecord {
    let mut trace = TraceRecord::new("toda-run", state_to_json(s));
    let curve = spectral_curve(s).ok();
    let mut snap = json!({"t": 0, "state": state_to_json(s)});
    if let Some(c) = &curve {
        snap["curve"] = curve_to_json(c);
    }
    trace.snapshots.push(snap);
    let mut cur = s.clone();
    for t in 1..=steps {
        let Some(next) = step_or_exit(&mut trace, &format!("flow.step{t}"), &cur) else {
            break;
        };
        trace.check(
            format!("recursive.step{t}"),
            toda_step_recursive_check(&cur, &next).unwrap_or(false),
        );
        if let Some(c) = &curve {
            trace.check(
                format!("curve.step{t}"),
                spectral_curve(&next).ok().as_ref() == Some(c),
            );
        }
        trace
            .snapshots
            .push(json!({"t": t, "state": state_to_json(&next)}));
        cur = next;
    }
    trace
}

/// Run the box-ball system, checking the 10-elimination step against the sequential rule.
pub fn bbs_run(b: &BoxBallState, steps: usize) -> TraceRecord {
    let mut trace = TraceRecord::new("bbs-run", boxball_to_json(b));
    trace
        .snapshots
        .push(json!({"t": 0, "cells": boxball_to_json(b)}));
    let mut cur = b.clone();
    for t in 1..=steps {
        let next = bbs_step(&cur);
        trace.check(
            format!("bbs_oracle.step{t}"),
            next == bbs_step_sequential(&cur),
        );
        trace.check(format!("balls.step{t}"), next.balls() == b.balls());
        trace.check(format!("solitons.step{t}"), next.solitons() == b.solitons());
        trace
            .snapshots
            .push(json!({"t": t, "cells": boxball_to_json(&next)}));
        cur = next;
    }
    trace
}

/// `a ⊞ b` with closure, commutativity and cancellation checks.
pub fn jac_add<F: JsonScalar>(a: &MumfordDivisor<F>, b: &MumfordDivisor<F>) -> TraceRecord {
    let mut trace = TraceRecord::new(
        "jac-add",
        json!({"a": divisor_to_json(a), "b": divisor_to_json(b)}),
    );
    let Some(sum) = attempt(&mut trace, "sum", add(a, b)) else {
        return trace;
    };
    trace.check("membership.sum", validate_membership(&sum).is_ok());
    if let Some(other) = attempt(&mut trace, "commutative", add(b, a)) {
        trace.check("commutative", other == sum);
    }
    if let Some(back) = attempt(&mut trace, "cancel", sub(&sum, b)) {
        trace.check("cancel", back == *a);
    }
    trace.snapshots.push(json!({"sum": divisor_to_json(&sum)}));
    trace
}

/// Check `Ψ(𝔗ᵗ s) = Ψ(s) ⊞ t ⊡ D` for `t = 1..=steps`, on the curve and on its standard form.
pub fn verify_translation<F: JsonScalar>(
    s: &TodaState<F>,
    steps: usize,
) -> Result<TraceRecord, HarnessError> {
    require_sites(s)?;
    let mut trace = TraceRecord::new("verify-theorem1", state_to_json(s));
    let spectral = spectral_curve(s)?;
    let curve = curve_of(s)?;
    let Some(psi) = attempt(&mut trace, "psi.step0", eigenvector_map_on(s, &curve)) else {
        return Ok(trace);
    };
    let Some(d) = attempt(&mut trace, "divisor_d", divisor_d_on(s, &curve)) else {
        return Ok(trace);
    };
    let Some((_, d_tilde)) = attempt(&mut trace, "divisor_d_tilde", divisor_d_tilde(s)) else {
        return Ok(trace);
    };
    let Some(psi_tilde) = attempt(&mut trace, "psi_standard.step0", to_standard_form(&psi)) else {
        return Ok(trace);
    };
    if let Some(moved) = attempt(&mut trace, "divisor_d.standard_form", to_standard_form(&d)) {
        trace.check("divisor_d.standard_form", moved == d_tilde);
    }
    trace.snapshots.push(json!({
        "t": 0,
        "state": state_to_json(s),
        "curve": curve_to_json(&spectral),
        "psi": divisor_to_json(&psi),
        "D": divisor_to_json(&d),
        "D_tilde": divisor_to_json(&d_tilde),
    }));

    let mut cur = s.clone();
    let mut predicted = psi.clone();
    let mut predicted_tilde = psi_tilde;
    for t in 1..=steps {
        let Some(next) = step_or_exit(&mut trace, &format!("flow.step{t}"), &cur) else {
            break;
        };
        trace.check(
            format!("curve.step{t}"),
            spectral_curve(&next).ok() == Some(spectral.clone()),
        );
        let id = format!("translation.step{t}");
        let Some(actual) = attempt(&mut trace, &id, eigenvector_map_on(&next, &curve)) else {
            break;
        };
        let Some(p) = attempt(&mut trace, &id, add(&predicted, &d)) else {
            break;
        };
        predicted = p;
        trace.check_with(
            id,
            actual == predicted,
            json!({"pair_equal": actual.same_pair(&predicted)}),
        );

        let id = format!("translation_standard.step{t}");
        let Some(actual_tilde) = attempt(&mut trace, &id, to_standard_form(&actual)) else {
            break;
        };
        let Some(p) = attempt(&mut trace, &id, add(&predicted_tilde, &d_tilde)) else {
            break;
        };
        predicted_tilde = p;
        trace.check(id, actual_tilde == predicted_tilde);

        trace.snapshots.push(json!({
            "t": t,
            "state": state_to_json(&next),
            "psi": divisor_to_json(&actual),
            "predicted": divisor_to_json(&predicted),
        }));
        cur = next;
    }
    Ok(trace)
}

/// Check `Ψ(σᵏ s) ⊟ Ψ(s) = k ⊡ ([1,0],2)` for `k = 0..=n`, the order of the generator,
/// and the polynomial identities of `s`.
pub fn verify_torsion<F: JsonScalar>(s: &TodaState<F>) -> Result<TraceRecord, HarnessError> {
    require_sites(s)?;
    let mut trace = TraceRecord::new("verify-torsion", state_to_json(s));
    let spectral = spectral_curve(s)?;
    let curve = curve_of(s)?;
    let n = s.n();
    let g = torsion_generator(&curve);
    let zero = MumfordDivisor::zero(Arc::clone(&curve));
    let Some(psi) = attempt(&mut trace, "psi", eigenvector_map_on(s, &curve)) else {
        return Ok(trace);
    };
    trace
        .snapshots
        .push(json!({"k": 0, "psi": divisor_to_json(&psi)}));

    for k in 0..=n {
        let shifted = cyclic_shift(s, k as i64);
        trace.check(
            format!("shift_curve.k{k}"),
            spectral_curve(&shifted).ok() == Some(spectral.clone()),
        );
        let id = format!("shift.k{k}");
        let Some(psi_k) = attempt(&mut trace, &id, eigenvector_map_on(&shifted, &curve)) else {
            continue;
        };
        let diff = sub(&psi_k, &psi).and_then(|diff| Ok((diff, scalar_mul(k as i64, &g)?)));
        if let Some((diff, expected)) = attempt(&mut trace, &id, diff) {
            trace.check_with(
                id,
                diff == expected,
                json!({"pair_equal": diff.same_pair(&expected)}),
            );
        }
        if k > 0 {
            trace
                .snapshots
                .push(json!({"k": k, "psi": divisor_to_json(&psi_k)}));
        }
    }

    if let Some(ng) = attempt(&mut trace, "generator_order", scalar_mul(n as i64, &g)) {
        trace.check("generator_order", ng == zero);
    }
    let proper: Result<Vec<_>, _> = (1..n as i64).map(|k| scalar_mul(k, &g)).collect();
    if let Some(multiples) = attempt(&mut trace, "generator_order_exact", proper) {
        trace.check(
            "generator_order_exact",
            multiples.iter().all(|m| *m != zero),
        );
    }
    let back = eigenvector_map_on(&cyclic_shift(s, -1), &curve).and_then(|p| add(&p, &g));
    if let Some(back) = attempt(&mut trace, "shift_inverse", back) {
        trace.check("shift_inverse", back == psi);
    }
    if let Some(minus) = attempt(&mut trace, "negation", neg(&psi)) {
        trace.check("negation", add(&psi, &minus).ok() == Some(zero.clone()));
    }
    match spectral_identities(s) {
        Ok(checks) => {
            for c in checks {
                trace.check(format!("identity.{}", c.id), c.holds);
            }
        }
        Err(e) => trace.fail("identity", e),
    }
    Ok(trace)
}

/// Check the three commuting squares linking the box-ball system, the min-plus flow, the
/// lifted Toda flow over Q(T) and the Jacobian, for `steps` steps.
pub fn verify_bbs_diagram(b: &BoxBallState, steps: usize) -> Result<TraceRecord, HarnessError> {
    if b.solitons() < 3 {
        return Err(HarnessError::BadInput(format!(
            "need at least 3 solitons, found {}",
            b.solitons()
        )));
    }
    let mut trace = TraceRecord::new("verify-bbs-diagram", boxball_to_json(b));
    let eta0 = eta_sequence(b)?;
    let x0: TodaState<RationalFunction> = t_lift(&eta0)?;
    trace.check(
        "lift.round_trip",
        tropicalize(&x0).ok() == Some(eta0.clone()),
    );
    let spectral = spectral_curve(&x0)?;
    let curve = curve_of(&x0)?;
    let Some(mut psi) = attempt(&mut trace, "psi.step0", eigenvector_map_on(&x0, &curve)) else {
        return Ok(trace);
    };
    trace.snapshots.push(json!({
        "t": 0,
        "cells": boxball_to_json(b),
        "eta": tropical_to_json(&eta0),
        "curve": curve_to_json(&spectral),
        "psi": divisor_to_json(&psi),
    }));

    let mut cells = b.clone();
    let mut x = x0;
    for t in 1..=steps {
        let next_cells = bbs_step(&cells);
        trace.check(
            format!("bbs_oracle.step{t}"),
            next_cells == bbs_step_sequential(&cells),
        );
        let eta_prev = eta_sequence(&cells)?;
        let eta_next = eta_sequence(&next_cells)?;

        // soliton square: η∘𝔅 = 𝔗_trop∘η up to rotation
        let trop_next = tropical_step(&eta_prev);
        trace.check(
            format!("soliton_square.step{t}"),
            eta(&next_cells)? == cyclic_canonicalize(&trop_next),
        );

        // valuation square on the lift of the current soliton data
        let lifted_step = t_lift(&eta_prev)
            .and_then(|l| Ok(toda_step(&l)?))
            .and_then(|l| tropicalize(&l));
        trace.check(
            format!("valuation_square.step{t}"),
            lifted_step.ok() == Some(trop_next),
        );

        // Jacobian square along the lifted orbit
        let id = format!("jacobian_square.step{t}");
        let Some(x_next) = step_or_exit(&mut trace, &id, &x) else {
            break;
        };
        let Ok(val_next) = tropicalize(&x_next) else {
            trace.fail(&id, "lifted state lost its valuations");
            break;
        };
        let Some(k) = equal_mod_sigma(&val_next, &eta_next) else {
            trace.fail(
                &id,
                "lifted orbit does not match the soliton data up to rotation",
            );
            break;
        };
        let y = cyclic_shift(&x_next, k as i64);
        let square = eigenvector_map_on(&y, &curve).and_then(|psi_y| {
            let target = add(&psi, &divisor_d_on(&x, &curve)?)?;
            Ok((psi_y.clone(), equal_mod_cn(&psi_y, &target)?))
        });
        let Some((psi_y, witness)) = attempt(&mut trace, &id, square) else {
            break;
        };
        trace.check_with(
            id,
            witness.is_some(),
            json!({"rotation": k, "witness": witness}),
        );
        trace.snapshots.push(json!({
            "t": t,
            "cells": boxball_to_json(&next_cells),
            "eta": tropical_to_json(&eta_next),
            "psi": divisor_to_json(&psi_y),
        }));
        let Some(p) = attempt(&mut trace, "psi", eigenvector_map_on(&x_next, &curve)) else {
            break;
        };
        psi = p;
        x = x_next;
        cells = next_cells;
    }
    Ok(trace)
}
