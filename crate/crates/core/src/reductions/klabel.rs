use super::trace::{ReductionKind, ReductionTrace};
use crate::cost::Finite;
use crate::error::{Error, Result};
use crate::instance::{big_m, evaluate, CostTable, EnergyInstance, Labeling};

fn require_binary(i: &EnergyInstance) -> Result<()> {
    match i.label_counts().iter().position(|&k| k != 2) {
        Some(u) => Err(Error::NotBinary(u, i.label_count(u))),
        None => Ok(()),
    }
}

/// Embeds a finite binary instance into `k` labels on the same graph:
/// original entries are kept and every entry touching a label `≥ 2` costs
/// `M = big_m(i)`.
pub fn qpbo_to_klabel(i: &EnergyInstance, k: usize) -> Result<(EnergyInstance, ReductionTrace)> {
    require_binary(i)?;
    if k < 2 {
        return Err(Error::InvalidInstance(format!("cannot embed into {k} labels")));
    }
    let m = big_m(i)?;
    let mut b = EnergyInstance::builder(vec![k; i.num_nodes()]);
    for u in 0..i.num_nodes() {
        let f = i.unary(u);
        b.set_unary(u, (0..k).map(|a| if a < 2 { f[a] } else { Finite(m) }).collect());
    }
    for (e, t) in i.edges() {
        let g = CostTable::from_fn(k, k, |a, c| if a < 2 && c < 2 { t.get(a, c) } else { Finite(m) });
        b.set_pairwise(e.u(), e.v(), g);
    }
    b.set_constant(i.constant());
    let trace = ReductionTrace::new(ReductionKind::QpboToKlabel { k }, i.num_nodes(), m);
    Ok((b.build()?, trace))
}

/// `y` itself when its energy is below `M` and it uses only the original
/// two labels, otherwise the all-zeros labeling.
///
/// The label check matters when costs are negative: a padded label can sit
/// below `M` in total energy, yet the all-zeros fallback still never costs
/// more than such a `y`.
pub fn klabel_sigma(original: &EnergyInstance, trace: &ReductionTrace, y: &Labeling) -> Result<Labeling> {
    let ReductionKind::QpboToKlabel { k } = trace.kind else {
        return Err(Error::TraceMismatch(format!("expected a qpbo-to-klabel trace, got {}", trace.kind.name())));
    };
    let (target, expected) = qpbo_to_klabel(original, k)?;
    if &expected != trace {
        return Err(Error::TraceMismatch("trace was produced from a different instance".into()));
    }
    let energy = evaluate(&target, y)?;
    if energy.cmp_finite(trace.big_m).is_lt() && y.as_slice().iter().all(|&l| l < 2) {
        Ok(y.clone())
    } else {
        Ok(Labeling::zeros(original.num_nodes()))
    }
}
