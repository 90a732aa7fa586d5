//! Regular maps given by admissible triples of involutions.
//!
//! A triple `(λ, ρ, τ)` generates the flag-regular group `G`; vertices,
//! edges and faces are the cosets of `⟨ρ,τ⟩`, `⟨λ,τ⟩` and `⟨λ,ρ⟩`. Everything
//! here is computed from the group, never from the carrier domain, so the
//! same code handles quotient constructions whose group acts unfaithfully on
//! the graph vertices.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::perm::{GroupClosure, Perm, PermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not an admissible triple: failed {0}")]
    NotAdmissible(String),
    #[error("R^{power}·τ is not an involution; input is not a canonical Hamming triple")]
    NotCliqueTriple { power: usize },
    #[error("⟨R, L⟩ has index {0} in G; expected 1 or 2")]
    BadOrientationIndex(usize),
    #[error("orientable map with odd Euler characteristic {0}")]
    OddEuler(i64),
    #[error("coset incidence is not a simple graph: {0}")]
    NotSimple(Incidence),
    #[error("triple file: {0}")]
    Parse(String),
}

/// Offending edge coset (by index of its canonical least element) together
/// with the vertex cosets it meets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Incidence {
    Loop {
        edge: usize,
        vertex: usize,
    },
    MultiEdge {
        edge: usize,
        other_edge: usize,
        vertices: (usize, usize),
    },
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Incidence::Loop { edge, vertex } => write!(f, "edge coset {edge} meets only vertex coset {vertex}"),
            Incidence::MultiEdge {
                edge,
                other_edge,
                vertices,
            } => write!(
                f,
                "edge cosets {edge} and {other_edge} both join vertex cosets {} and {}",
                vertices.0, vertices.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleTriple {
    lambda: Perm,
    rho: Perm,
    tau: Perm,
}

impl AdmissibleTriple {
    /// Only the shared degree is checked here; see [`validate_admissible`].
    pub fn new(lambda: Perm, rho: Perm, tau: Perm) -> Result<AdmissibleTriple, MapError> {
        for p in [&rho, &tau] {
            if p.degree() != lambda.degree() {
                return Err(PermError::DegreeMismatch {
                    left: lambda.degree(),
                    right: p.degree(),
                }
                .into());
            }
        }
        Ok(AdmissibleTriple { lambda, rho, tau })
    }

    pub fn lambda(&self) -> &Perm {
        &self.lambda
    }

    pub fn rho(&self) -> &Perm {
        &self.rho
    }

    pub fn tau(&self) -> &Perm {
        &self.tau
    }

    pub fn degree(&self) -> usize {
        self.lambda.degree()
    }

    pub fn generators(&self) -> [Perm; 3] {
        [self.lambda.clone(), self.rho.clone(), self.tau.clone()]
    }

    /// `R = ρτ`, the local rotation at the base vertex.
    pub fn rotation(&self) -> Perm {
        self.rho.then(&self.tau)
    }

    /// `L = λτ`.
    pub fn l(&self) -> Perm {
        self.lambda.then(&self.tau)
    }

    pub fn map_type(&self) -> MapType {
        MapType {
            p: self.lambda.then(&self.rho).order(),
            q: self.rotation().order(),
            r: self.lambda.then(&self.rho).then(&self.tau).order(),
        }
    }

    /// `(λτ, ρ, τ)`.
    pub fn petrie_dual(&self) -> AdmissibleTriple {
        AdmissibleTriple {
            lambda: self.l(),
            rho: self.rho.clone(),
            tau: self.tau.clone(),
        }
    }

    /// Wilson's `H_d` applied at the base vertex: `(λ, R^d·τ, τ)`.
    ///
    /// For a canonical triple of `H(d,n)` the result generates
    /// `⟨R^d, L, τ⟩`, the flag stabiliser of the clique through the base
    /// edge, and is a map on `K_n`.
    pub fn clique_submap(&self, d: usize) -> Result<AdmissibleTriple, MapError> {
        let rho = self.rotation().pow(d as i64).then(&self.tau);
        // τRτ = R⁻¹ makes this an involution for any valid triple; it can
        // still collapse to the identity when R^d = τ.
        if !rho.is_involution() || rho.is_identity() {
            return Err(MapError::NotCliqueTriple { power: d });
        }
        Ok(AdmissibleTriple {
            lambda: self.lambda.clone(),
            rho,
            tau: self.tau.clone(),
        })
    }

    /// Componentwise `φ⁻¹ x φ`.
    pub fn conjugate(&self, phi: &Perm) -> AdmissibleTriple {
        let inv = phi.inverse();
        let conj = |x: &Perm| inv.then(x).then(phi);
        AdmissibleTriple {
            lambda: conj(&self.lambda),
            rho: conj(&self.rho),
            tau: conj(&self.tau),
        }
    }

    /// Parses the triple file format:
    ///
    /// ```text
    /// degree 8
    /// lambda 0 7 6 5 4 3 2 1
    /// rho 1 0 7 6 5 4 3 2
    /// tau 4 5 6 7 0 1 2 3
    /// ```
    ///
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<AdmissibleTriple, MapError> {
        let mut degree = None;
        let mut parts: [Option<Perm>; 3] = [None, None, None];
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let slot = match key {
                "degree" => {
                    let n = rest
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| MapError::Parse(format!("bad degree line `{line}`")))?;
                    degree = Some(n);
                    continue;
                }
                "lambda" => 0,
                "rho" => 1,
                "tau" => 2,
                other => return Err(MapError::Parse(format!("unknown key `{other}`"))),
            };
            if parts[slot].is_some() {
                return Err(MapError::Parse(format!("duplicate `{key}` line")));
            }
            parts[slot] = Some(rest.parse::<Perm>()?);
        }
        let degree = degree.ok_or_else(|| MapError::Parse("missing `degree` line".into()))?;
        let [lambda, rho, tau] = parts;
        let (lambda, rho, tau) = match (lambda, rho, tau) {
            (Some(l), Some(r), Some(t)) => (l, r, t),
            _ => return Err(MapError::Parse("need lambda, rho and tau lines".into())),
        };
        if lambda.degree() != degree {
            return Err(MapError::Parse(format!(
                "declared degree {degree} but permutations have degree {}",
                lambda.degree()
            )));
        }
        AdmissibleTriple::new(lambda, rho, tau)
    }

    pub fn to_text(&self) -> String {
        format!(
            "degree {}\nlambda {}\nrho {}\ntau {}\n",
            self.degree(),
            self.lambda,
            self.rho,
            self.tau
        )
    }
}

/// The antipodal quotient of a regular `2m`-gon on the sphere, carried on the
/// `2m` polygon vertices: with `r = (0 1 … 2m-1)` and `s: k ↦ -k`, the triple
/// is `λ = s`, `ρ = s·r`, `τ = r^m`. The map lies in the projective plane
/// with type `{2m, 2}_k`, `k = 2m / gcd(m+1, 2m)`; its underlying graph is
/// the `m`-cycle.
pub fn antipodal_polygon(m: usize) -> AdmissibleTriple {
    assert!(m >= 2, "polygon quotient needs m >= 2");
    let size = 2 * m;
    let r = Perm::from_images((0..size).map(|k| ((k + 1) % size) as u16)).expect("rotation");
    let s = Perm::from_images((0..size).map(|k| ((size - k) % size) as u16)).expect("reflection");
    AdmissibleTriple {
        lambda: s.clone(),
        rho: s.then(&r),
        tau: r.pow(m as i64),
    }
}

/// Built-in `h22-octagon`: the `H(2,2)` map in the projective plane.
pub fn h22_octagon() -> AdmissibleTriple {
    antipodal_polygon(4)
}

/// Built-in `k3-hexagon`: the `K_3` map in the projective plane. Its group of
/// order 12 acts on `K_3` with a kernel of order 2.
pub fn k3_hexagon() -> AdmissibleTriple {
    antipodal_polygon(3)
}

/// Coxeter–Moser type `{p, q}_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MapType {
    /// Covalency, `order(λρ)`.
    pub p: usize,
    /// Valency, `order(ρτ)`.
    pub q: usize,
    /// Petrie length, `order(λρτ)`.
    pub r: usize,
}

impl fmt::Display for MapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}_{}", self.p, self.q, self.r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapInvariants {
    pub map_type: MapType,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub orientable: bool,
    pub genus: i64,
    pub group_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub group_order: Option<usize>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    group: Option<GroupClosure>,
}

impl ValidationReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn into_group(self) -> Option<GroupClosure> {
        self.group
    }
}

fn dihedral_check(name: &'static str, a: &Perm, b: &Perm, cap: usize) -> Check {
    let rot = a.then(b).order();
    match GroupClosure::generate(&[a.clone(), b.clone()], cap) {
        Ok(g) => Check {
            name,
            passed: g.order() == 2 * rot,
            detail: format!("order {} vs 2·{rot}", g.order()),
        },
        Err(e) => Check {
            name,
            passed: false,
            detail: e.to_string(),
        },
    }
}

/// Runs every admissibility check and reports each one.
pub fn validate_admissible(t: &AdmissibleTriple, cap: usize) -> ValidationReport {
    let mut checks = Vec::with_capacity(6);
    let (l, r, tau) = (&t.lambda, &t.rho, &t.tau);

    let lt = l.then(tau);
    let involutions = l.is_involution() && r.is_involution() && tau.is_involution();
    checks.push(Check {
        name: "involutions",
        passed: involutions && lt.then(&lt).is_identity(),
        detail: format!(
            "λ {}, ρ {}, τ {}, (λτ)² = id {}",
            l.is_involution(),
            r.is_involution(),
            tau.is_involution(),
            lt.then(&lt).is_identity()
        ),
    });

    let group = GroupClosure::generate(&t.generators(), cap);
    checks.push(Check {
        name: "closure",
        passed: group.is_ok(),
        detail: match &group {
            Ok(g) => format!("|G| = {}", g.order()),
            Err(e) => e.to_string(),
        },
    });

    let edge_stab = GroupClosure::generate(&[l.clone(), tau.clone()], cap);
    checks.push(Check {
        name: "edge_stabilizer_klein",
        passed: matches!(&edge_stab, Ok(g) if g.order() == 4),
        detail: match &edge_stab {
            Ok(g) => format!("|⟨λ,τ⟩| = {}", g.order()),
            Err(e) => e.to_string(),
        },
    });
    checks.push(dihedral_check("vertex_stabilizer_dihedral", r, tau, cap));
    checks.push(dihedral_check("face_stabilizer_dihedral", l, r, cap));

    let ty = t.map_type();
    let divisibility = match &group {
        Ok(g) => {
            let o = g.order();
            Check {
                name: "order_divisibility",
                passed: o % 4 == 0 && o % (2 * ty.q) == 0 && o % (2 * ty.p) == 0,
                detail: format!("|G| = {o}, p = {}, q = {}", ty.p, ty.q),
            }
        }
        Err(_) => Check {
            name: "order_divisibility",
            passed: false,
            detail: "no group order".into(),
        },
    };
    checks.push(divisibility);

    let ok = checks.iter().all(|c| c.passed);
    let group = group.ok();
    ValidationReport {
        ok,
        group_order: group.as_ref().map(GroupClosure::order),
        checks,
        group,
    }
}

/// A validated triple together with its group.
#[derive(Debug, Clone)]
pub struct RegularMap {
    triple: AdmissibleTriple,
    group: GroupClosure,
}

impl RegularMap {
    pub fn new(triple: AdmissibleTriple, cap: usize) -> Result<RegularMap, MapError> {
        let report = validate_admissible(&triple, cap);
        RegularMap::from_report(triple, report)
    }

    /// Accepts a report produced by [`validate_admissible`] for `triple`.
    pub fn from_report(triple: AdmissibleTriple, report: ValidationReport) -> Result<RegularMap, MapError> {
        if let Some(failed) = report.first_failure() {
            return Err(MapError::NotAdmissible(format!("{}: {}", failed.name, failed.detail)));
        }
        let group = report.into_group().expect("ok report carries its group");
        Ok(RegularMap { triple, group })
    }

    pub fn triple(&self) -> &AdmissibleTriple {
        &self.triple
    }

    pub fn group(&self) -> &GroupClosure {
        &self.group
    }

    pub fn group_order(&self) -> usize {
        self.group.order()
    }

    /// Orientable iff `⟨R, L⟩` has index 2; nonorientable iff it is all of `G`.
    pub fn is_orientable(&self) -> Result<bool, MapError> {
        match self.group.subgroup_index(&[self.triple.rotation(), self.triple.l()])? {
            1 => Ok(false),
            2 => Ok(true),
            k => Err(MapError::BadOrientationIndex(k)),
        }
    }

    pub fn invariants(&self) -> Result<MapInvariants, MapError> {
        let map_type = self.triple.map_type();
        let order = self.group.order();
        let vertices = order / (2 * map_type.q);
        let edges = order / 4;
        let faces = order / (2 * map_type.p);
        let euler = vertices as i64 - edges as i64 + faces as i64;
        let orientable = self.is_orientable()?;
        let genus = if orientable {
            if euler % 2 != 0 {
                return Err(MapError::OddEuler(euler));
            }
            (2 - euler) / 2
        } else {
            2 - euler
        };
        Ok(MapInvariants {
            map_type,
            vertices,
            edges,
            faces,
            euler,
            orientable,
            genus,
            group_order: order,
        })
    }

    pub fn nonorientability_witness(&self, max_len: usize) -> Option<Vec<i64>> {
        nonorientability_witness(&self.triple, max_len)
    }

    /// Vertices are the right cosets `⟨ρ,τ⟩g`; two are adjacent when a coset
    /// `⟨λ,τ⟩h` meets both.
    pub fn coset_graph(&self) -> Result<CosetGraph, MapError> {
        let elems = self.group.elements();
        let idx = |p: &Perm| self.group.index_of(p).expect("closed under products");
        let t = &self.triple;
        let vstab = GroupClosure::generate(&[t.rho.clone(), t.tau.clone()], self.group.order())?;
        let estab = GroupClosure::generate(&[t.lambda.clone(), t.tau.clone()], self.group.order())?;

        let mut vertex_of = vec![usize::MAX; elems.len()];
        let mut representatives = Vec::new();
        for (i, g) in elems.iter().enumerate() {
            if vertex_of[i] != usize::MAX {
                continue;
            }
            let v = representatives.len();
            representatives.push(g.clone());
            for h in vstab.elements() {
                vertex_of[idx(&h.then(g))] = v;
            }
        }

        let mut seen_edge = vec![false; elems.len()];
        let mut pairs: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, g) in elems.iter().enumerate() {
            if seen_edge[i] {
                continue;
            }
            let mut meets = BTreeSet::new();
            for h in estab.elements() {
                let j = idx(&h.then(g));
                seen_edge[j] = true;
                meets.insert(vertex_of[j]);
            }
            let ends: Vec<usize> = meets.into_iter().collect();
            if ends.len() < 2 {
                return Err(MapError::NotSimple(Incidence::Loop {
                    edge: i,
                    vertex: ends[0],
                }));
            }
            let key = (ends[0], ends[1]);
            if let Some(&other) = pairs.get(&key) {
                return Err(MapError::NotSimple(Incidence::MultiEdge {
                    edge: i,
                    other_edge: other,
                    vertices: key,
                }));
            }
            pairs.insert(key, i);
        }
        let mut edges: Vec<(usize, usize)> = pairs.into_keys().collect();
        edges.sort_unstable();
        let graph = Graph::from_edges(representatives.len(), edges)?;
        Ok(CosetGraph { graph, representatives })
    }
}

#[derive(Debug, Clone)]
pub struct CosetGraph {
    pub graph: Graph,
    /// One group element per vertex coset, in vertex order.
    pub representatives: Vec<Perm>,
}

impl CosetGraph {
    /// Image of `base` under each coset representative. When the carrier is
    /// the vertex set and `base` is the vertex fixed by `⟨ρ,τ⟩`, this is the
    /// carrier label of each coset vertex.
    pub fn point_labels(&self, base: usize) -> Vec<usize> {
        self.representatives.iter().map(|g| g.apply(base)).collect()
    }
}

pub fn invariants(t: &AdmissibleTriple, cap: usize) -> Result<MapInvariants, MapError> {
    RegularMap::new(t.clone(), cap)?.invariants()
}

pub fn is_orientable(t: &AdmissibleTriple, cap: usize) -> Result<bool, MapError> {
    RegularMap::new(t.clone(), cap)?.is_orientable()
}

pub fn coset_graph(t: &AdmissibleTriple, cap: usize) -> Result<CosetGraph, MapError> {
    RegularMap::new(t.clone(), cap)?.coset_graph()
}

/// Shortest, then lexicographically least, word `(m₁,…,m_l)` with
/// `1 ≤ m_i < order(R)` and `L·R^{m₁}⋯L·R^{m_l} = τ`.
///
/// A returned word certifies nonorientability; `None` is inconclusive.
pub fn nonorientability_witness(t: &AdmissibleTriple, max_len: usize) -> Option<Vec<i64>> {
    let rot = t.rotation();
    let order = rot.order();
    let l = t.l();
    // steps[m-1] = L·R^m
    let steps: Vec<Perm> = (1..order).map(|m| l.then(&rot.pow(m as i64))).collect();
    if steps.is_empty() {
        return None;
    }
    let id = Perm::identity(t.degree());
    let mut word = Vec::new();
    (1..=max_len).find_map(|len| {
        word.clear();
        search_words(&id, &steps, &t.tau, len, &mut word).then(|| word.clone())
    })
}

fn search_words(prefix: &Perm, steps: &[Perm], target: &Perm, remaining: usize, word: &mut Vec<i64>) -> bool {
    if remaining == 0 {
        return prefix == target;
    }
    for (k, step) in steps.iter().enumerate() {
        word.push(k as i64 + 1);
        if search_words(&prefix.then(step), steps, target, remaining - 1, word) {
            return true;
        }
        word.pop();
    }
    false
}

/// A bijection `φ` of the carrier with `φ⁻¹xφ = x'` for each pair of
/// corresponding generators, found by fixing `φ(0)` and propagating along
/// generator edges. Assumes the first triple's group is transitive.
pub fn conjugating_map(t1: &AdmissibleTriple, t2: &AdmissibleTriple) -> Option<Perm> {
    let n = t1.degree();
    if t2.degree() != n {
        return None;
    }
    let g1 = t1.generators();
    let g2 = t2.generators();
    'start: for w in 0..n {
        let mut phi = vec![usize::MAX; n];
        phi[0] = w;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (a, b) in g1.iter().zip(&g2) {
                let y = a.apply(x);
                let target = b.apply(phi[x]);
                if phi[y] == usize::MAX {
                    phi[y] = target;
                    queue.push_back(y);
                } else if phi[y] != target {
                    continue 'start;
                }
            }
        }
        if phi.contains(&usize::MAX) {
            return None;
        }
        if let Ok(p) = Perm::from_images(phi) {
            if t1.conjugate(&p) == *t2 {
                return Some(p);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::hamming;

    #[test]
    fn octagon_map_matches_projective_plane() {
        let t = h22_octagon();
        let report = validate_admissible(&t, 1000);
        assert!(report.ok, "{:?}", report.checks);
        assert_eq!(report.group_order, Some(16));
        let map = RegularMap::new(t, 1000).unwrap();
        let inv = map.invariants().unwrap();
        assert_eq!(inv.map_type, MapType { p: 8, q: 2, r: 8 });
        assert_eq!((inv.vertices, inv.edges, inv.faces, inv.euler), (4, 4, 1, 1));
        assert!(!inv.orientable);
        assert_eq!(inv.genus, 1);
        assert_eq!(
            map.group()
                .subgroup_index(&[map.triple().rotation(), map.triple().l()])
                .unwrap(),
            1
        );
        let g = map.coset_graph().unwrap().graph;
        assert!(crate::graph::is_isomorphic(&g, &hamming(2, 2).unwrap()).is_some());
    }

    #[test]
    fn hexagon_map_is_k3_in_projective_plane() {
        let map = RegularMap::new(k3_hexagon(), 100).unwrap();
        let inv = map.invariants().unwrap();
        assert_eq!(inv.map_type, MapType { p: 6, q: 2, r: 3 });
        assert_eq!((inv.vertices, inv.edges, inv.faces, inv.genus), (3, 3, 1, 1));
        assert!(!inv.orientable);
        let g = map.coset_graph().unwrap().graph;
        assert!(g.same_edges(&crate::graph::complete(3).unwrap()));
    }

    #[test]
    fn degenerate_rho_fails_first_check() {
        let t = h22_octagon();
        let bad = AdmissibleTriple::new(t.lambda().clone(), Perm::identity(8), t.tau().clone()).unwrap();
        let report = validate_admissible(&bad, 1000);
        assert!(!report.ok);
        assert_eq!(report.first_failure().unwrap().name, "involutions");
        assert!(RegularMap::new(bad, 1000).is_err());
    }

    #[test]
    fn cap_exceeded_is_a_failed_check() {
        let report = validate_admissible(&h22_octagon(), 15);
        assert!(!report.ok);
        assert_eq!(report.first_failure().unwrap().name, "closure");
        assert_eq!(report.group_order, None);
    }

    #[test]
    fn petrie_dual_is_an_involution_on_triples() {
        let t = h22_octagon();
        assert_eq!(t.petrie_dual().petrie_dual(), t);
        let dual = RegularMap::new(t.petrie_dual(), 100).unwrap().invariants().unwrap();
        assert_eq!(dual.map_type, MapType { p: 8, q: 2, r: 8 });
    }

    #[test]
    fn clique_submap_with_power_one_is_identity() {
        let t = h22_octagon();
        assert_eq!(t.clique_submap(1).unwrap(), t);
    }

    #[test]
    fn triple_text_roundtrip_and_errors() {
        let t = h22_octagon();
        assert_eq!(AdmissibleTriple::parse(&t.to_text()).unwrap(), t);
        assert!(matches!(
            AdmissibleTriple::parse("lambda 1 0\nrho 1 0\ntau 1 0\n"),
            Err(MapError::Parse(_))
        ));
        assert!(AdmissibleTriple::parse("degree 3\nlambda 1 0\nrho 1 0\ntau 1 0\n").is_err());
        assert!(AdmissibleTriple::parse("degree 2\nlambda 1 0\nrho 1 0\n").is_err());
        assert!(AdmissibleTriple::parse("degree 2\nmu 1 0\n").is_err());
    }

    #[test]
    fn conjugating_map_finds_relabelling() {
        let t = h22_octagon();
        let phi = Perm::from_cycles(8, &[&[0, 3, 6], &[1, 5]]).unwrap();
        let c = t.conjugate(&phi);
        let found = conjugating_map(&t, &c).unwrap();
        assert_eq!(t.conjugate(&found), c);
        assert!(conjugating_map(&t, &t.petrie_dual().conjugate(&phi)).is_some());
    }
}
