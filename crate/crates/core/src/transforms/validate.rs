use super::spec::{TransformKind, TransformSpec};
use crate::error::{Error, Result};
use crate::graphs::{LabeledGraph, ThresholdGraph};

/// Outcome of checking a spec against a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    /// First violated condition, or `None` when the spec applies.
    pub failure: Option<String>,
    /// `ROW` only: validity when the missing-edge rows are taken as `p-1..p`
    /// instead of `p-l..p`. The two agree for `l = 1`.
    pub narrow_row_reading: Option<bool>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }

    /// The two readings of the `ROW` missing-edge rows give different answers.
    pub fn readings_disagree(&self) -> bool {
        self.narrow_row_reading
            .is_some_and(|narrow| narrow != self.is_valid())
    }
}

/// 1-based view of a stepwise adjacency matrix.
struct Stepwise<'a>(&'a LabeledGraph);

impl Stepwise<'_> {
    fn n(&self) -> usize {
        self.0.n()
    }

    fn a(&self, i: usize, j: usize) -> bool {
        i != j && self.0.has_edge(i - 1, j - 1)
    }

    fn expect(
        &self,
        clause: &str,
        i: usize,
        j: usize,
        want: bool,
    ) -> std::result::Result<(), String> {
        if self.a(i, j) == want {
            Ok(())
        } else {
            Err(format!(
                "clause {clause}: a({i},{j}) should be {}",
                want as u8
            ))
        }
    }
}

type Check = std::result::Result<(), String>;

fn order(clause: &str, ok: bool, what: &str) -> Check {
    if ok {
        Ok(())
    } else {
        Err(format!("clause {clause}: need {what}"))
    }
}

fn check_basic(m: &Stepwise, s: &TransformSpec) -> Check {
    let (p, q, h, k, n) = (s.p, s.q, s.h, s.k, m.n());
    order(
        "(i)",
        2 <= q && q < k && k < h && h < p,
        "2 <= q < k < h < p",
    )?;
    m.expect("(ii)", p, q, false)?;
    for j in 1..q {
        m.expect("(ii)", p, j, true)?;
    }
    for i in q + 1..p {
        m.expect("(ii)", i, q, true)?;
    }
    m.expect("(iii)", h, k, true)?;
    for j in k + 1..=n {
        m.expect("(iii)", h, j, false)?;
    }
    for i in h + 1..=n {
        m.expect("(iii)", i, k, false)?;
    }
    Ok(())
}

/// `first_missing_row` is `p - l` in the general reading and `p - 1` in the
/// narrow one.
fn check_row(m: &Stepwise, s: &TransformSpec, first_missing_row: usize) -> Check {
    let (p, q, h, k, l, n) = (s.p, s.q, s.h, s.k, s.l, m.n());
    order(
        "(i)",
        1 <= q && q < k && k + l < h && h + l < p,
        "q < k <= k+l < h < p-l",
    )?;
    for i in first_missing_row..=p {
        m.expect("(ii)", i, q, false)?;
        for j in 1..q {
            m.expect("(ii)", i, j, true)?;
        }
    }
    for i in q + 1..p - l {
        m.expect("(ii)", i, q, true)?;
    }
    for i in k..=k + l {
        m.expect("(iii)", h, i, true)?;
        if h < n {
            m.expect("(iii)", h + 1, i, false)?;
        }
    }
    for j in k + l + 1..=n {
        m.expect("(iii)", h, j, false)?;
    }
    Ok(())
}

fn check_col(m: &Stepwise, s: &TransformSpec) -> Check {
    let (p, q, h, k, l, n) = (s.p, s.q, s.h, s.k, s.l, m.n());
    order(
        "(i)",
        q >= l + 2 && q < k && k + l < h && h < p,
        "2 <= q-l <= q < k < h-l <= h < p",
    )?;
    for t in q - l..=q {
        m.expect("(ii)", p, t, false)?;
        for i in t + 1..p {
            m.expect("(ii)", i, t, true)?;
        }
    }
    for j in 1..q - l {
        m.expect("(ii)", p, j, true)?;
    }
    for t in h - l..=h {
        m.expect("(iii)", t, k, true)?;
        for j in k + 1..=n {
            m.expect("(iii)", t, j, false)?;
        }
    }
    for i in h + 1..=n {
        m.expect("(iii)", i, k, false)?;
    }
    Ok(())
}

fn check_indices(n: usize, spec: &TransformSpec) -> Result<()> {
    for index in [spec.p, spec.q, spec.h, spec.k] {
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, n });
        }
    }
    Ok(())
}

fn validate_stepwise(m: &Stepwise, spec: &TransformSpec) -> Validation {
    if !m.0.is_connected() {
        return Validation {
            failure: Some("host graph is disconnected".into()),
            narrow_row_reading: None,
        };
    }
    let (check, narrow) = match spec.kind {
        TransformKind::Basic => (check_basic(m, spec), None),
        TransformKind::Row => {
            let general = check_row(m, spec, spec.p.saturating_sub(spec.l));
            let narrow = check_row(m, spec, spec.p.saturating_sub(1));
            (general, Some(narrow.is_ok()))
        }
        TransformKind::Col => (check_col(m, spec), None),
    };
    Validation {
        failure: check.err(),
        narrow_row_reading: narrow,
    }
}

/// Checks every condition of the transformation on the stepwise adjacency
/// matrix of `g`.
pub fn validate(g: &ThresholdGraph, spec: &TransformSpec) -> Result<Validation> {
    check_indices(g.n(), spec)?;
    Ok(validate_stepwise(&Stepwise(&g.to_labeled()), spec))
}

/// The transformed graph, still labeled by the stepwise order of `g`.
pub fn apply_labeled(g: &ThresholdGraph, spec: &TransformSpec) -> Result<LabeledGraph> {
    check_indices(g.n(), spec)?;
    let host = g.to_labeled();
    if let Some(reason) = validate_stepwise(&Stepwise(&host), spec).failure {
        return Err(Error::InvalidTransform(format!("{spec}: {reason}")));
    }
    let (remove, add) = spec.edge_moves();
    let zero_based = |e: Vec<(usize, usize)>| -> Vec<(usize, usize)> {
        e.into_iter().map(|(u, v)| (u - 1, v - 1)).collect()
    };
    host.rewired(&zero_based(remove), &zero_based(add))
}

pub fn apply(g: &ThresholdGraph, spec: &TransformSpec) -> Result<ThresholdGraph> {
    ThresholdGraph::from_labeled(&apply_labeled(g, spec)?)
}

/// Every spec of every kind that is valid on `g`, in sorted order.
pub fn valid_specs(g: &ThresholdGraph) -> Vec<TransformSpec> {
    let host = g.to_labeled();
    let m = Stepwise(&host);
    if !host.is_connected() {
        return Vec::new();
    }
    let n = g.n();
    let mut out = Vec::new();
    for q in 1..=n {
        for k in q + 1..=n {
            for h in k + 1..=n {
                for p in h + 1..=n {
                    out.push(TransformSpec::basic(p, q, h, k));
                    for l in 0..n {
                        if k + l < h && h + l < p {
                            out.push(TransformSpec::row(p, q, h, k, l));
                        }
                        if q >= l + 2 && k + l < h {
                            out.push(TransformSpec::col(p, q, h, k, l));
                        }
                    }
                }
            }
        }
    }
    out.retain(|s| validate_stepwise(&m, s).is_valid());
    out.sort_unstable();
    out
}
