//! Connectedness of the semistable part of a monomial quiver moduli space.
//!
//! The irreducible components of `V(I)` are the coordinate subspaces cut out
//! by the minimal primes of `I`. A component survives in the quotient iff its
//! prime does not contain the irrelevant ideal, and two surviving components
//! meet in the semistable locus iff the sum of their primes does not.

use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{contains_ideal, minimal_primes, sum_prime, MonomialPrime, SquarefreeIdeal};
use crate::quiver::{self, QuiverPresentation};
use crate::toricgit::{
    irrelevant_ideal_generators, theta_degeneracy_witness, theta_generic_quiver, StabilityCharacter,
    WeightAction,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum H0Verdict {
    One,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConnectednessReport {
    pub octuple_count: usize,
    pub relevant_octuple_count: usize,
    pub minimal_prime_count: usize,
    pub component_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    pub h0_verdict: H0Verdict,
}

/// A report together with the data it was computed from.
#[derive(Clone, Debug)]
pub struct ConnectednessRun {
    pub report: ConnectednessReport,
    pub irrelevant: SquarefreeIdeal,
    pub components: Vec<MonomialPrime>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentSummary {
    pub index: usize,
    pub prime: Vec<usize>,
    pub free_coordinates: Vec<usize>,
    pub degree: usize,
}

/// The monomial ideal of the toric relations on the arrows of `Q`: nine
/// disjoint pairs of arrows.
pub fn toric_ideal() -> SquarefreeIdeal {
    let gens = quiver::TORIC_MIDDLES.iter().map(|&(s, m, t)| {
        let [second, first] = quiver::middle_path(s, m, t);
        vec![first, second]
    });
    SquarefreeIdeal::new(quiver::Q_ARROWS, gens).expect("built-in ideal")
}

pub fn run_connectedness(
    q: &QuiverPresentation,
    theta: &StabilityCharacter,
    ideal: &SquarefreeIdeal,
) -> Result<ConnectednessReport> {
    Ok(run_connectedness_detailed(q, theta, ideal, false)?.report)
}

/// Full run. `assume_reduced` lets the caller vouch that `V(ideal)` is
/// reduced; for the toric ideal this is known.
pub fn run_connectedness_detailed(
    q: &QuiverPresentation,
    theta: &StabilityCharacter,
    ideal: &SquarefreeIdeal,
    assume_reduced: bool,
) -> Result<ConnectednessRun> {
    if ideal.num_vars() != q.arrow_count() {
        return Err(Error::DimensionMismatch {
            expected: q.arrow_count(),
            found: ideal.num_vars(),
        });
    }
    if theta.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: q.vertex_count(),
            found: theta.len(),
        });
    }
    if !theta_generic_quiver(q, theta) {
        return Err(Error::NonGenericTheta(
            theta_degeneracy_witness(q, theta).unwrap_or_default(),
        ));
    }
    let w = WeightAction::for_quiver(q);
    let irrelevant = irrelevant_ideal_generators(&w, theta)?;
    let octuples = binomial(w.coordinate_count(), w.ambient_rank());
    let reduced = assume_reduced || (q == &quiver::canonical_q() && ideal == &toric_ideal());
    connectedness_from_irrelevant(ideal, irrelevant, octuples, reduced)
}

/// The graph computation given an irrelevant ideal.
pub fn connectedness_from_irrelevant(
    ideal: &SquarefreeIdeal,
    irrelevant: SquarefreeIdeal,
    octuple_count: usize,
    reduced: bool,
) -> Result<ConnectednessRun> {
    let primes = minimal_primes(ideal);
    let mut components = Vec::new();
    for p in &primes {
        if !contains_ideal(p, &irrelevant)? {
            components.push(p.clone());
        }
    }
    let mut edges = Vec::new();
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            if !contains_ideal(&sum_prime(&components[i], &components[j])?, &irrelevant)? {
                edges.push((i, j));
            }
        }
    }
    let connected = is_connected(components.len(), &edges);
    let report = ConnectednessReport {
        octuple_count,
        relevant_octuple_count: irrelevant.generators().len(),
        minimal_prime_count: primes.len(),
        component_count: components.len(),
        edges,
        connected,
        h0_verdict: if connected && reduced {
            H0Verdict::One
        } else {
            H0Verdict::Unknown
        },
    };
    Ok(ConnectednessRun {
        report,
        irrelevant,
        components,
    })
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Union-find connectivity; the empty graph counts as connected.
pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut classes = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            classes -= 1;
        }
    }
    classes <= 1
}

/// The subgraph keeping, for each node, only edges to its first two
/// neighbours in index order.
pub fn truncated_edges(report: &ConnectednessReport) -> Vec<(usize, usize)> {
    let n = report.component_count;
    let mut nbrs = vec![Vec::new(); n];
    for &(a, b) in &report.edges {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    let mut out: Vec<(usize, usize)> = nbrs
        .iter_mut()
        .enumerate()
        .flat_map(|(i, ns)| {
            ns.sort_unstable();
            ns.iter().take(2).map(move |&j| (i.min(j), i.max(j))).collect::<Vec<_>>()
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn truncated_subgraph_connected(report: &ConnectednessReport) -> bool {
    is_connected(report.component_count, &truncated_edges(report))
}

pub fn component_summaries(report: &ConnectednessReport, components: &[MonomialPrime]) -> Vec<ComponentSummary> {
    let mut degree = vec![0; components.len()];
    for &(a, b) in &report.edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    components
        .iter()
        .enumerate()
        .map(|(index, p)| ComponentSummary {
            index,
            prime: p.vars().to_vec(),
            free_coordinates: p.complement(),
            degree: degree[index],
        })
        .collect()
}
