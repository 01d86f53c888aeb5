//! Commutation and reflection relations of the vertex operators, checked as truncated
//! operator identities.

use std::sync::Arc;

use crate::partition::{partitions_up_to, StripRelation};
use crate::series::{SeriesRing, VarSpace};
use crate::{Integer, MultiSeries};

use super::state::StateVector;

/// Result of an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn op_name(r: StripRelation) -> &'static str {
    match r {
        StripRelation::HPlus => "Γ+",
        StripRelation::HMinus => "Γ-",
        StripRelation::VPlus => "Γ'+",
        StripRelation::VMinus => "Γ'-",
    }
}

fn space(names: &[&str]) -> Arc<VarSpace> {
    VarSpace::new(names.iter().map(|s| s.to_string()).collect(), vec![1; names.len()])
}

fn one() -> Integer {
    Integer::from(1)
}

/// `(1 + εtu)^ε` for `A_+(t) B_−(u)`: `ε = −1` when both are primed or both unprimed.
fn exchange_factor(plus: StripRelation, minus: StripRelation, tu: &MultiSeries) -> MultiSeries {
    let sp = tu.space().clone();
    let n = tu.trunc();
    let m: Vec<u32> = tu.terms().keys().next().expect("monomial").clone();
    if plus.is_vertical() == minus.is_vertical() {
        MultiSeries::geom_inverse(&sp, &m, n).expect("positive degree")
    } else {
        MultiSeries::one_plus(&sp, &m, n)
    }
}

/// Checks `A(t) B(u) = f(t, u) B(u) A(t)` on every `|λ⟩` with `|λ| ≤ n`, where `f` is the
/// exchange factor (`1` for operators of the same sign).
pub fn check_commutation(a: StripRelation, b: StripRelation, n: usize) -> IdentityReport {
    let sp = space(&["t", "u"]);
    let t = MultiSeries::var(&sp, 0, n);
    let u = MultiSeries::var(&sp, 1, n);
    let tu = MultiSeries::monomial(&sp, vec![1, 1], one(), n);
    let factor = match (a.is_plus(), b.is_plus()) {
        (true, false) => exchange_factor(a, b, &tu),
        (false, true) => exchange_factor(b, a, &tu).inverse().expect("unit constant term"),
        _ => MultiSeries::one(&sp, n),
    };
    let cap = 2 * n;
    let name = format!("{}(t){}(u)", op_name(a), op_name(b));
    let lambdas = partitions_up_to(n);
    for lambda in &lambdas {
        let ket = StateVector::basis(lambda, &t, cap);
        let lhs = ket.apply(b, &u).apply(a, &t);
        let rhs = ket.apply(a, &t).apply(b, &u).scale(&factor);
        if let Some(mu) = lhs.first_difference(&rhs) {
            return IdentityReport {
                name, cases: lambdas.len(), counterexample: Some(format!("⟨{mu}| … |{lambda}⟩"))
            };
        }
    }
    IdentityReport { name, cases: lambdas.len(), counterexample: None }
}

/// All sixteen ordered pairs of operators.
pub fn check_all_commutations(n: usize) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for a in StripRelation::ALL {
        for b in StripRelation::ALL {
            out.push(check_commutation(a, b, n));
        }
    }
    out
}

fn compare(name: &str, lhs: &StateVector<MultiSeries>, rhs: &StateVector<MultiSeries>) -> IdentityReport {
    IdentityReport {
        name: name.to_string(),
        cases: lhs.amplitudes().len().max(rhs.amplitudes().len()),
        counterexample: lhs.first_difference(rhs).map(|mu| format!("coefficient of |{mu}⟩")),
    }
}

/// `⟨u| A(arg)` as a state indexed by `μ`: the coefficient of `μ` is `⟨u| A(arg) |μ⟩`.
fn bra_action(op: StripRelation, arg: &MultiSeries, u: &MultiSeries, n: usize) -> StateVector<MultiSeries> {
    let bra = StateVector::free(u, n);
    let pairs = partitions_up_to(n).into_iter().map(|mu| {
        let v = StateVector::basis(&mu, u, n).apply(op, arg).pair(&bra);
        (mu, v)
    });
    StateVector::from_pairs(u, n, pairs)
}

/// The four reflection relations on the free boundary states, truncated at degree `n`.
pub fn check_reflection(n: usize) -> Vec<IdentityReport> {
    let sp = space(&["t", "v"]);
    let t = MultiSeries::var(&sp, 0, n);
    let v = MultiSeries::var(&sp, 1, n);
    let tv2 = MultiSeries::monomial(&sp, vec![1, 2], one(), n);
    let f = MultiSeries::geom_inverse(&sp, &[1, 1], n).expect("positive degree");
    let ket = StateVector::free(&v, n);
    let mut out = Vec::new();
    for (plus, minus) in [(StripRelation::HPlus, StripRelation::HMinus), (StripRelation::VPlus, StripRelation::VMinus)]
    {
        let lhs = ket.apply(plus, &t);
        let rhs = ket.apply(minus, &tv2).scale(&f);
        out.push(compare(&format!("{}(t)|v⟩", op_name(plus)), &lhs, &rhs));
    }
    // the same relations on the bra side, with v playing the role of u
    for (minus, plus) in [(StripRelation::HMinus, StripRelation::HPlus), (StripRelation::VMinus, StripRelation::VPlus)]
    {
        let lhs = bra_action(minus, &t, &v, n);
        let rhs = bra_action(plus, &tv2, &v, n).scale(&f);
        out.push(compare(&format!("⟨u|{}(t)", op_name(minus)), &lhs, &rhs));
    }
    out
}

/// The even boundary state `Σ_{λ even} v^{|λ|}|λ⟩`: its construction as `Γ_−(−v)|v⟩` and
/// its two modified reflection relations.
pub fn check_even_reflection(n: usize) -> Vec<IdentityReport> {
    let sp = space(&["t", "v"]);
    let t = MultiSeries::var(&sp, 0, n);
    let v = MultiSeries::var(&sp, 1, n);
    let tv2 = MultiSeries::monomial(&sp, vec![1, 2], one(), n);
    let even = StateVector::even_free(&v, n);
    let built = StateVector::free(&v, n).apply(StripRelation::HMinus, &v.neg_ref());
    let mut out = vec![compare("Γ-(-v)|v⟩ = |ṽ⟩", &built, &even)];
    let f = MultiSeries::geom_inverse(&sp, &[2, 2], n).expect("positive degree");
    out.push(compare(
        "Γ+(t)|ṽ⟩",
        &even.apply(StripRelation::HPlus, &t),
        &even.apply(StripRelation::HMinus, &tv2).scale(&f),
    ));
    out.push(compare("Γ'+(t)|ṽ⟩", &even.apply(StripRelation::VPlus, &t), &even.apply(StripRelation::VMinus, &tv2)));
    out
}
