//! Machine-readable per-step trace of the incremental engine, one JSON
//! object per line.
//!
//! Each line has the fields `step`, `alpha`, `t1_size`, `t2_size`, `kept`,
//! `rejected`, followed by `t1` (the components left untouched) and `t`
//! (the components after the step). Kept and rejected entries name the
//! component `beta`, the 1-based variable `u`, the value `d` of `d(beta,u)`
//! (`null` when undefined) and the candidate `component`. Bounds injected to
//! make the ideal Artinian are shown as `"inf"`.

use serde::Serialize;

use crate::error::Result;
use crate::ideal::ArtinianizedIdeal;
use crate::incremental::StepReport;
use crate::vector::{ExpVector, Exponent};

#[derive(Debug, Serialize)]
pub struct Candidate {
    pub beta: ExpVector,
    pub u: usize,
    pub d: Option<Exponent>,
    pub component: ExpVector,
}

#[derive(Debug, Serialize)]
pub struct TraceRecord {
    pub step: usize,
    pub alpha: ExpVector,
    pub t1_size: usize,
    pub t2_size: usize,
    pub kept: Vec<Candidate>,
    pub rejected: Vec<Candidate>,
    pub t1: Vec<ExpVector>,
    pub t: Vec<ExpVector>,
}

impl TraceRecord {
    pub fn from_step(step: &StepReport, art: &ArtinianizedIdeal) -> Result<Self> {
        let show = |v: &ExpVector| art.restore_infinity(v);
        let mut kept = Vec::new();
        let mut rejected = Vec::new();
        for upd in &step.t2 {
            for u in 0..step.alpha.len() {
                let c = Candidate {
                    beta: show(&upd.beta)?,
                    u: u + 1,
                    d: upd.d[u],
                    component: show(&upd.candidate(&step.alpha, u))?,
                };
                if upd.kept[u] {
                    kept.push(c);
                } else {
                    rejected.push(c);
                }
            }
        }
        Ok(TraceRecord {
            step: step.step,
            alpha: step.alpha.clone(),
            t1_size: step.t1.len(),
            t2_size: step.t2.len(),
            kept,
            rejected,
            t1: step.t1.iter().map(show).collect::<Result<_>>()?,
            t: step.t_after.iter().map(show).collect::<Result<_>>()?,
        })
    }
}

/// Render every step as one JSON line.
pub fn render_trace(steps: &[StepReport], art: &ArtinianizedIdeal) -> Result<String> {
    let mut out = String::new();
    for s in steps {
        let rec = TraceRecord::from_step(s, art)?;
        out.push_str(&serde_json::to_string(&rec).expect("trace records always serialize"));
        out.push('\n');
    }
    Ok(out)
}
