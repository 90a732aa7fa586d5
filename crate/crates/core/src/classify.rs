//! Exhaustive classification of nonorientable regular embeddings of `H(d,n)`
//! over canonical triples, and the per-cell comparison against the expected
//! census.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{hamming, Graph};
use crate::map::{self, AdmissibleTriple, MapError, MapInvariants, RegularMap};
use crate::perm::{stabilizer_within, GroupClosure, Perm};
use crate::wreath::{self, beta, CanonicalTripleParams, WreathError};

pub const DEFAULT_BUDGET: usize = 100_000;
pub const DEFAULT_WITNESS_LEN: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Wreath(#[from] WreathError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("H({d},{n}) is over budget: group order {group_order}, {candidates} candidates, budget {budget}")]
    OverBudget {
        d: usize,
        n: usize,
        group_order: usize,
        candidates: usize,
        budget: usize,
    },
    #[error("record for H({d},{n}) does not revalidate: {reason}")]
    BadRecord { d: usize, n: usize, reason: String },
}

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    pub max_witness_len: usize,
    /// Upper bound on both the target group order and the candidate count.
    pub budget: usize,
    /// Sweep every admissible `θ` instead of only `β_d`.
    pub full_theta_sweep: bool,
    /// Reject candidates by a Schreier-generator test on the vertex
    /// stabiliser before building their groups. Turning it off leaves the
    /// result unchanged and only moves rejections to the closure step.
    pub stabilizer_precheck: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            max_witness_len: DEFAULT_WITNESS_LEN,
            budget: DEFAULT_BUDGET,
            full_theta_sweep: false,
            stabilizer_precheck: true,
        }
    }
}

/// A classified embedding of `H(d,n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapRecord {
    pub params: CanonicalTripleParams,
    pub invariants: MapInvariants,
    pub witness: Option<Vec<i64>>,
    pub census_note: Option<String>,
}

impl MapRecord {
    pub fn d(&self) -> usize {
        self.params.d
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    /// The triple this record stands for. `H(1,3)` is the one cell whose map
    /// group acts unfaithfully on the graph, so it is carried by the hexagon.
    pub fn triple(&self) -> AdmissibleTriple {
        if (self.d(), self.n()) == (1, 3) {
            map::k3_hexagon()
        } else {
            self.params.triple()
        }
    }

    /// Rebuilds the map and checks that the stored data still holds.
    pub fn revalidate(&self) -> Result<RegularMap, ClassifyError> {
        let (d, n) = (self.d(), self.n());
        let bad = |reason: String| ClassifyError::BadRecord { d, n, reason };
        self.params.validate()?;
        let target = target_order(d, n);
        let map = RegularMap::new(self.triple(), target).map_err(|e| bad(e.to_string()))?;
        let inv = map.invariants()?;
        if inv != self.invariants {
            return Err(bad(format!(
                "stored invariants {:?} but computed {:?}",
                self.invariants, inv
            )));
        }
        if inv.group_order != target {
            return Err(bad(format!("group order {} ≠ {target}", inv.group_order)));
        }
        if let Some(word) = &self.witness {
            let t = map.triple();
            let value = crate::perm::evaluate_word(&t.l(), &t.rotation(), word).map_err(MapError::from)?;
            if &value != t.tau() {
                return Err(bad(format!("witness {word:?} does not evaluate to τ")));
            }
        }
        Ok(map)
    }
}

/// `|G| = 4|E| = 2d(n-1)n^d` for a regular embedding of `H(d,n)`.
pub fn target_order(d: usize, n: usize) -> usize {
    2 * d * (n - 1) * n.pow(d as u32)
}

/// Why a candidate was dropped, or what it became.
#[derive(Debug, Clone)]
enum Outcome {
    NotInvolutions,
    StabilizerPrecheck,
    CapExceeded,
    NotAdmissible,
    WrongOrder,
    StabilizerMismatch,
    Orientable,
    Nonorientable(Box<MapRecord>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub candidates: usize,
    pub not_involutions: usize,
    pub stabilizer_precheck: usize,
    pub cap_exceeded: usize,
    pub not_admissible: usize,
    pub wrong_order: usize,
    pub stabilizer_mismatch: usize,
    pub orientable: usize,
    pub nonorientable: usize,
    pub duplicates: usize,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub d: usize,
    pub n: usize,
    pub records: Vec<MapRecord>,
    pub diagnostics: Diagnostics,
}

fn evaluate(params: &CanonicalTripleParams, vertex_stab: &GroupClosure, opts: &ClassifyOptions) -> Outcome {
    let (d, n) = (params.d, params.n);
    let target = target_order(d, n);
    let triple = params.triple();
    let lt = triple.l();
    if !(triple.lambda().is_involution() && triple.tau().is_involution() && lt.then(&lt).is_identity()) {
        return Outcome::NotInvolutions;
    }
    // Stab(O) = ⟨ρ,τ⟩ and transitivity together force |G| = target; checking
    // Schreier generators first avoids building groups that are too large.
    if opts.stabilizer_precheck {
        match stabilizer_within(&triple.generators(), 0, vertex_stab) {
            Some(orbit) if orbit == n.pow(d as u32) => {}
            _ => return Outcome::StabilizerPrecheck,
        }
    }
    let report = map::validate_admissible(&triple, target);
    if report.group_order.is_none() {
        return Outcome::CapExceeded;
    }
    let map = match RegularMap::from_report(triple, report) {
        Ok(m) => m,
        Err(_) => return Outcome::NotAdmissible,
    };
    if map.group_order() != target {
        return Outcome::WrongOrder;
    }
    let stab: Vec<&Perm> = map.group().elements().iter().filter(|g| g.fixes(0)).collect();
    if stab.len() != vertex_stab.order() || stab.iter().any(|g| !vertex_stab.contains(g)) {
        return Outcome::StabilizerMismatch;
    }
    let invariants = match map.invariants() {
        Ok(inv) => inv,
        Err(_) => return Outcome::NotAdmissible,
    };
    if invariants.orientable {
        return Outcome::Orientable;
    }
    let witness = map.nonorientability_witness(opts.max_witness_len);
    Outcome::Nonorientable(Box::new(MapRecord {
        params: params.clone(),
        census_note: census_note(d, n, &invariants),
        invariants,
        witness,
    }))
}

/// Known census labels for the embeddings found here, keyed by genus and type.
fn census_note(d: usize, n: usize, inv: &MapInvariants) -> Option<String> {
    let t = inv.map_type;
    let label = match (inv.genus, t.p, t.q, t.r) {
        (1, ..) if d == 1 => return Some(format!("K_{n} in the projective plane")),
        (5, 5, 5, 3) => "N5.3",
        (5, 6, 4, 4) => "dual of N5.2",
        (10, 4, 6, 6) => "N10.1",
        (29, 6, 6, 9) => "N29.2",
        (82, 4, 9, 9) => "N82.1",
        (110, 10, 10, 8) => "N110.7",
        (101, 8, 10, 10) => "N101.8",
        _ => return None,
    };
    Some(format!("Conder {label}"))
}

fn k3_record() -> Result<MapRecord, ClassifyError> {
    let params = CanonicalTripleParams::new(
        1,
        3,
        vec![Perm::from_cycles(3, &[&[0, 1]]).expect("transposition")],
        Perm::identity(1),
    )?;
    let map = RegularMap::new(map::k3_hexagon(), target_order(1, 3))?;
    let invariants = map.invariants()?;
    Ok(MapRecord {
        params,
        witness: map.nonorientability_witness(DEFAULT_WITNESS_LEN),
        census_note: Some(
            "antipodal hexagon quotient; K_3 in the projective plane, carried on the 6 hexagon vertices".into(),
        ),
        invariants,
    })
}

/// Every nonorientable regular embedding of `H(d,n)`, `n ≥ 3`, up to
/// isomorphism, sorted by `(p, r, σ)`.
pub fn classify(d: usize, n: usize, opts: &ClassifyOptions) -> Result<Classification, ClassifyError> {
    let thetas = if opts.full_theta_sweep {
        wreath::theta_choices(d.max(1))
    } else {
        vec![beta(d.max(1))]
    };
    if d < 1 || n < 3 {
        return Err(WreathError::BadSize { d, n }.into());
    }
    let target = n
        .checked_pow(d as u32)
        .and_then(|v| v.checked_mul(2 * d * (n - 1)))
        .unwrap_or(usize::MAX);
    let candidates: usize = thetas.iter().map(|t| wreath::candidate_count(d, n, t)).sum();
    if target > opts.budget || candidates > opts.budget {
        return Err(ClassifyError::OverBudget {
            d,
            n,
            group_order: target,
            candidates,
            budget: opts.budget,
        });
    }

    let tau = wreath::canonical_tau(d, n)?;
    let rho = wreath::canonical_rotation(d, n)?.then(&tau);
    let mut diagnostics = Diagnostics {
        candidates,
        ..Diagnostics::default()
    };
    let mut found = Vec::new();

    // τ is trivial only for K_3; ⟨ρ,τ⟩ then has the wrong order and no
    // candidate on the vertex set can succeed.
    if let Ok(vertex_stab) = GroupClosure::generate(&[rho, tau], 2 * d * (n - 1)) {
        let mut params = Vec::with_capacity(candidates);
        for theta in &thetas {
            params.extend(wreath::enumerate_with_theta(d, n, theta)?);
        }
        let outcomes: Vec<Outcome> = params.par_iter().map(|p| evaluate(p, &vertex_stab, opts)).collect();
        for outcome in outcomes {
            match outcome {
                Outcome::NotInvolutions => diagnostics.not_involutions += 1,
                Outcome::StabilizerPrecheck => diagnostics.stabilizer_precheck += 1,
                Outcome::CapExceeded => diagnostics.cap_exceeded += 1,
                Outcome::NotAdmissible => diagnostics.not_admissible += 1,
                Outcome::WrongOrder => diagnostics.wrong_order += 1,
                Outcome::StabilizerMismatch => diagnostics.stabilizer_mismatch += 1,
                Outcome::Orientable => diagnostics.orientable += 1,
                Outcome::Nonorientable(r) => {
                    diagnostics.nonorientable += 1;
                    found.push(*r);
                }
            }
        }
    } else {
        diagnostics.not_involutions = candidates;
    }
    if (d, n) == (1, 3) {
        found.push(k3_record()?);
    }

    // Keep the lexicographically least σ of each isomorphism class.
    found.sort_by(|a, b| a.params.cmp(&b.params));
    let graph = hamming(d, n).map_err(MapError::from)?;
    let mut kept: Vec<MapRecord> = Vec::new();
    for rec in found {
        let duplicate = kept
            .iter()
            .any(|k| k.invariants == rec.invariants && records_isomorphic(k, &rec, &graph));
        if duplicate {
            diagnostics.duplicates += 1;
        } else {
            kept.push(rec);
        }
    }
    kept.sort_by(|a, b| {
        let (ta, tb) = (a.invariants.map_type, b.invariants.map_type);
        (ta.p, ta.r, &a.params).cmp(&(tb.p, tb.r, &b.params))
    });
    Ok(Classification {
        d,
        n,
        records: kept,
        diagnostics,
    })
}

fn records_isomorphic(a: &MapRecord, b: &MapRecord, graph: &Graph) -> bool {
    triples_isomorphic(&a.triple(), &b.triple(), Some(graph))
}

/// True when some vertex bijection, which must be an automorphism of
/// `graph` when one is given, conjugates the first triple to the second.
pub fn triples_isomorphic(t1: &AdmissibleTriple, t2: &AdmissibleTriple, graph: Option<&Graph>) -> bool {
    match map::conjugating_map(t1, t2) {
        None => false,
        Some(phi) => graph.is_none_or(|g| {
            g.n_vertices() == phi.degree() && g.edges().all(|(a, b)| g.has_edge(phi.apply(a), phi.apply(b)))
        }),
    }
}

/// Map isomorphism for two records of the same `H(d,n)`.
pub fn maps_isomorphic(r1: &MapRecord, r2: &MapRecord) -> bool {
    if (r1.d(), r1.n()) != (r2.d(), r2.n()) {
        return false;
    }
    if r1.triple().degree() != r1.params.n.pow(r1.d() as u32) {
        // Carried off the vertex set; only one such map per cell exists.
        return r1.triple() == r2.triple();
    }
    match hamming(r1.d(), r1.n()) {
        Ok(g) => records_isomorphic(r1, r2, &g),
        Err(_) => false,
    }
}

/// A normal subgroup of `G` of order `n^d` acting regularly on the vertices
/// `0..n^d`, found as the normal closure of a single fixed-point-free element
/// of prime order. `None` when no such element generates one.
pub fn regular_normal_subgroup(map: &RegularMap, vertices: usize) -> Option<GroupClosure> {
    let group = map.group();
    let is_prime = |k: usize| k > 1 && (2..k).take_while(|f| f * f <= k).all(|f| !k.is_multiple_of(f));
    group
        .elements()
        .iter()
        .filter(|g| !g.is_identity() && (0..vertices).all(|v| !g.fixes(v)) && is_prime(g.order()))
        .find_map(|g| {
            let n = group.normal_closure(std::slice::from_ref(g), vertices).ok()?;
            let orbit: BTreeSet<usize> = n.elements().iter().map(|x| x.apply(0)).collect();
            (n.order() == vertices && orbit.len() == vertices).then_some(n)
        })
}

/// Number of nonorientable regular embeddings of `H(d,n)` up to isomorphism.
pub fn expected_count(d: usize, n: usize) -> usize {
    match n {
        2 => usize::from(d == 2),
        3 | 4 => 1,
        6 if d <= 2 => 2,
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellReport {
    pub d: usize,
    pub n: usize,
    pub expected: usize,
    pub found: Option<usize>,
    pub status: CellStatus,
    pub types: Vec<String>,
    pub genera: Vec<i64>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub cells: Vec<CellReport>,
    /// False when any cell was skipped for budget.
    pub complete: bool,
    pub all_pass: bool,
}

/// The `(2,2)` cell: the fixed octagon quotient must validate as a
/// nonorientable map on `C_4` with group order 16.
fn h22_cell() -> CellReport {
    let check = || -> Result<MapInvariants, MapError> {
        let map = RegularMap::new(map::h22_octagon(), 16)?;
        let inv = map.invariants()?;
        let graph = map.coset_graph()?.graph;
        let c4 = hamming(2, 2)?;
        let on_c4 = crate::graph::is_isomorphic(&graph, &c4).is_some();
        if inv.orientable || !on_c4 {
            return Err(MapError::NotAdmissible(
                "octagon quotient is not a nonorientable C_4 map".into(),
            ));
        }
        Ok(inv)
    };
    match check() {
        Ok(inv) => CellReport {
            d: 2,
            n: 2,
            expected: 1,
            found: Some(1),
            status: CellStatus::Pass,
            types: vec![inv.map_type.to_string()],
            genera: vec![inv.genus],
            note: Some("fixed h22-octagon construction".into()),
        },
        Err(e) => CellReport {
            d: 2,
            n: 2,
            expected: 1,
            found: Some(0),
            status: CellStatus::Fail,
            types: vec![],
            genera: vec![],
            note: Some(e.to_string()),
        },
    }
}

/// Runs [`classify`] for `1 ≤ d ≤ max_d`, `3 ≤ n ≤ max_n` and compares the
/// counts with [`expected_count`]; cells over budget are reported as skipped.
pub fn verify_theorem(max_d: usize, max_n: usize, opts: &ClassifyOptions) -> TheoremReport {
    let mut cells = Vec::new();
    if max_d >= 2 && max_n >= 2 {
        cells.push(h22_cell());
    }
    let grid: Vec<(usize, usize)> = (1..=max_d).flat_map(|d| (3..=max_n).map(move |n| (d, n))).collect();
    let results: BTreeMap<(usize, usize), Result<Classification, ClassifyError>> =
        grid.iter().map(|&(d, n)| ((d, n), classify(d, n, opts))).collect();
    for ((d, n), result) in results {
        let expected = expected_count(d, n);
        cells.push(match result {
            Ok(c) => CellReport {
                d,
                n,
                expected,
                found: Some(c.records.len()),
                status: if c.records.len() == expected {
                    CellStatus::Pass
                } else {
                    CellStatus::Fail
                },
                types: c.records.iter().map(|r| r.invariants.map_type.to_string()).collect(),
                genera: c.records.iter().map(|r| r.invariants.genus).collect(),
                note: None,
            },
            Err(e) => CellReport {
                d,
                n,
                expected,
                found: None,
                status: if matches!(e, ClassifyError::OverBudget { .. }) {
                    CellStatus::Skipped
                } else {
                    CellStatus::Fail
                },
                types: vec![],
                genera: vec![],
                note: Some(e.to_string()),
            },
        });
    }
    let complete = cells.iter().all(|c| c.status != CellStatus::Skipped);
    let all_pass = cells.iter().all(|c| c.status == CellStatus::Pass);
    TheoremReport {
        cells,
        complete,
        all_pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_table() {
        let table = [
            ((1, 3), 1),
            ((1, 4), 1),
            ((1, 5), 0),
            ((1, 6), 2),
            ((1, 7), 0),
            ((2, 3), 1),
            ((2, 4), 1),
            ((2, 5), 0),
            ((2, 6), 2),
            ((2, 7), 0),
            ((3, 3), 1),
            ((3, 4), 1),
            ((3, 6), 0),
            ((2, 2), 1),
        ];
        for ((d, n), k) in table {
            assert_eq!(expected_count(d, n), k, "H({d},{n})");
        }
    }

    #[test]
    fn target_orders() {
        assert_eq!(target_order(2, 3), 72);
        assert_eq!(target_order(2, 4), 192);
        assert_eq!(target_order(2, 6), 720);
        assert_eq!(target_order(3, 3), 324);
        assert_eq!(target_order(3, 4), 1152);
    }

    #[test]
    fn budget_is_enforced() {
        let opts = ClassifyOptions {
            budget: 100,
            ..ClassifyOptions::default()
        };
        assert!(matches!(classify(2, 6, &opts), Err(ClassifyError::OverBudget { .. })));
        let report = verify_theorem(1, 4, &opts);
        assert!(report.complete);
        let report = verify_theorem(2, 4, &opts);
        assert!(!report.complete);
        assert!(report.cells.iter().any(|c| c.status == CellStatus::Skipped));
    }

    #[test]
    fn small_sizes_are_rejected() {
        assert!(classify(2, 2, &ClassifyOptions::default()).is_err());
        assert!(classify(0, 3, &ClassifyOptions::default()).is_err());
    }

    #[test]
    fn k4_has_one_nonorientable_and_one_orientable_candidate() {
        let c = classify(1, 4, &ClassifyOptions::default()).unwrap();
        assert_eq!(c.records.len(), 1);
        assert_eq!(c.diagnostics.orientable, 1);
        let inv = c.records[0].invariants;
        assert_eq!(inv.map_type.to_string(), "{4,3}_3");
        assert_eq!(inv.genus, 1);
    }
}
