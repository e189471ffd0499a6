use crate::error::{Error, Result};
use crate::instance::{CostTable, Edge, EnergyInstance};

fn require_uniform_finite(instance: &EnergyInstance) -> Result<()> {
    if instance.has_infinite() {
        return Err(Error::InfiniteEntry);
    }
    if let Some(&k) = instance.label_counts().first() {
        if let Some(u) = instance.label_counts().iter().position(|&c| c != k) {
            return Err(Error::LabelCountMismatch { node: u, expected: k, got: instance.label_count(u) });
        }
    }
    Ok(())
}

fn v(t: &CostTable, a: usize, b: usize) -> i128 {
    t.get(a, b).finite().expect("checked finite") as i128
}

fn table_is_potts(t: &CostTable) -> bool {
    let k = t.rows();
    let mut off = None;
    for a in 0..k {
        for b in 0..k {
            let c = v(t, a, b);
            if a == b {
                if c != 0 {
                    return false;
                }
            } else if *off.get_or_insert(c) != c {
                return false;
            }
        }
    }
    off.is_none_or(|c| c >= 0)
}

fn table_is_metric(t: &CostTable) -> bool {
    let k = t.rows();
    for a in 0..k {
        if v(t, a, a) != 0 {
            return false;
        }
        for b in 0..k {
            if v(t, a, b) < 0 || v(t, a, b) != v(t, b, a) {
                return false;
            }
            for c in 0..k {
                if v(t, a, c) > v(t, a, b) + v(t, b, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every edge table is zero on the diagonal and one constant `c ≥ 0` off it.
pub fn is_potts(instance: &EnergyInstance) -> Result<bool> {
    require_uniform_finite(instance)?;
    Ok(instance.edges().all(|(_, t)| table_is_potts(t)))
}

/// First edge whose table is not a metric (zero diagonal, symmetric,
/// non-negative, triangle inequality).
pub fn metric_violation(instance: &EnergyInstance) -> Result<Option<Edge>> {
    require_uniform_finite(instance)?;
    Ok(instance.edges().find(|(_, t)| !table_is_metric(t)).map(|(e, _)| e))
}

pub fn is_metric(instance: &EnergyInstance) -> Result<bool> {
    Ok(metric_violation(instance)?.is_none())
}
