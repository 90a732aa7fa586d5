//! `F₉ = F₃(i)` with `i² = -1`, projective 2×2 matrices over it, and the
//! two nonorientable `H(2,6)` maps with group `PGL₂(9)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;
use thiserror::Error;

use crate::classify::{classify, ClassifyOptions};
use crate::graph::{hamming, is_isomorphic, verify_isomorphism};
use crate::map::{AdmissibleTriple, Check, MapInvariants, RegularMap};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PglError {
    #[error("zero has no inverse in F9")]
    ZeroInverse,
    #[error("singular matrix")]
    Singular,
}

/// `a + b·i` with `a, b ∈ F₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf9 {
    a: u8,
    b: u8,
}

impl Gf9 {
    pub const ZERO: Gf9 = Gf9 { a: 0, b: 0 };
    pub const ONE: Gf9 = Gf9 { a: 1, b: 0 };
    pub const I: Gf9 = Gf9 { a: 0, b: 1 };

    /// Reduces both coordinates mod 3, so `-1` may be passed as `2` or `-1`.
    pub fn new(a: i64, b: i64) -> Gf9 {
        Gf9 {
            a: a.rem_euclid(3) as u8,
            b: b.rem_euclid(3) as u8,
        }
    }

    pub fn parts(self) -> (u8, u8) {
        (self.a, self.b)
    }

    pub fn all() -> impl Iterator<Item = Gf9> {
        (0..9).map(|k| Gf9::new(k % 3, k / 3))
    }

    pub fn is_zero(self) -> bool {
        self == Gf9::ZERO
    }

    pub fn pow(self, mut e: u32) -> Gf9 {
        let mut base = self;
        let mut acc = Gf9::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// `x⁻¹ = x⁷` since the multiplicative group has order 8.
    pub fn inv(self) -> Result<Gf9, PglError> {
        if self.is_zero() {
            return Err(PglError::ZeroInverse);
        }
        Ok(self.pow(7))
    }

    /// Nonzero squares are the elements of order dividing 4.
    pub fn is_square(self) -> bool {
        self.is_zero() || self.pow(4) == Gf9::ONE
    }
}

impl Add for Gf9 {
    type Output = Gf9;
    fn add(self, o: Gf9) -> Gf9 {
        Gf9 {
            a: (self.a + o.a) % 3,
            b: (self.b + o.b) % 3,
        }
    }
}

impl Neg for Gf9 {
    type Output = Gf9;
    fn neg(self) -> Gf9 {
        Gf9 {
            a: (3 - self.a) % 3,
            b: (3 - self.b) % 3,
        }
    }
}

impl Sub for Gf9 {
    type Output = Gf9;
    fn sub(self, o: Gf9) -> Gf9 {
        self + (-o)
    }
}

impl Mul for Gf9 {
    type Output = Gf9;
    fn mul(self, o: Gf9) -> Gf9 {
        // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        let (a, b, c, d) = (self.a as i64, self.b as i64, o.a as i64, o.b as i64);
        Gf9::new(a * c - b * d, a * d + b * c)
    }
}

impl fmt::Display for Gf9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "i"),
            (0, b) => write!(f, "{b}i"),
            (a, 1) => write!(f, "{a}+i"),
            (a, b) => write!(f, "{a}+{b}i"),
        }
    }
}

/// A 2×2 matrix `[m00, m01, m10, m11]` in row-major order.
pub type Mat2 = [Gf9; 4];

pub fn mat_mul(p: &Mat2, q: &Mat2) -> Mat2 {
    [
        p[0] * q[0] + p[1] * q[2],
        p[0] * q[1] + p[1] * q[3],
        p[2] * q[0] + p[3] * q[2],
        p[2] * q[1] + p[3] * q[3],
    ]
}

pub fn mat_det(p: &Mat2) -> Gf9 {
    p[0] * p[3] - p[1] * p[2]
}

/// Scales so that the first nonzero entry is 1.
pub fn proj_normalize(p: &Mat2) -> Result<ProjMat2, PglError> {
    if mat_det(p).is_zero() {
        return Err(PglError::Singular);
    }
    let lead = p.iter().copied().find(|x| !x.is_zero()).expect("nonsingular");
    let s = lead.inv()?;
    Ok(ProjMat2(p.map(|x| x * s)))
}

/// An element of `PGL₂(9)`, stored as its normalised representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMat2(Mat2);

impl ProjMat2 {
    pub fn new(m: Mat2) -> Result<ProjMat2, PglError> {
        proj_normalize(&m)
    }

    pub fn entries(&self) -> &Mat2 {
        &self.0
    }

    pub fn identity() -> ProjMat2 {
        ProjMat2([Gf9::ONE, Gf9::ZERO, Gf9::ZERO, Gf9::ONE])
    }

    pub fn mul(&self, o: &ProjMat2) -> ProjMat2 {
        proj_normalize(&mat_mul(&self.0, &o.0)).expect("product of invertible matrices")
    }

    /// Determinant of the representative; meaningful up to nonzero squares.
    pub fn det(&self) -> Gf9 {
        mat_det(&self.0)
    }

    pub fn order(&self) -> usize {
        let mut x = *self;
        let mut k = 1;
        while x != ProjMat2::identity() {
            x = x.mul(self);
            k += 1;
        }
        k
    }
}

pub fn m_lambda() -> ProjMat2 {
    ProjMat2::new([Gf9::new(-1, 0), Gf9::ONE, Gf9::ONE, Gf9::ONE]).expect("invertible")
}

pub fn m_rho() -> ProjMat2 {
    ProjMat2::new([Gf9::ZERO, Gf9::new(1, 1), Gf9::new(-1, 0), Gf9::ZERO]).expect("invertible")
}

pub fn m_tau() -> ProjMat2 {
    ProjMat2::new([Gf9::ONE, Gf9::ONE, Gf9::ONE, Gf9::new(-1, 0)]).expect("invertible")
}

/// Elements of a finitely generated subgroup of `PGL₂(9)`, sorted.
#[derive(Debug, Clone)]
pub struct PglGroup {
    elements: Vec<ProjMat2>,
    index: HashMap<ProjMat2, usize>,
}

impl PglGroup {
    pub fn generate(generators: &[ProjMat2]) -> PglGroup {
        let mut seen = HashMap::new();
        seen.insert(ProjMat2::identity(), ());
        let mut queue = VecDeque::from([ProjMat2::identity()]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.mul(g);
                if seen.insert(y, ()).is_none() {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<ProjMat2> = seen.into_keys().collect();
        elements.sort_unstable();
        let index = elements.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        PglGroup { elements, index }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ProjMat2] {
        &self.elements
    }

    pub fn contains(&self, m: &ProjMat2) -> bool {
        self.index.contains_key(m)
    }

    /// `x ↦ x·m` on the element list.
    pub fn right_regular(&self, m: &ProjMat2) -> Perm {
        Perm::from_images(self.elements.iter().map(|x| self.index[&x.mul(m)] as u16))
            .expect("right multiplication is a bijection")
    }
}

/// `⟨M_λ, M_ρ, M_τ⟩`.
pub fn pgl_closure() -> PglGroup {
    PglGroup::generate(&[m_lambda(), m_rho(), m_tau()])
}

/// `(λ, ρ, τ)` realised on the 720 group elements by right multiplication.
pub fn pgl29_triple() -> AdmissibleTriple {
    let group = pgl_closure();
    AdmissibleTriple::new(
        group.right_regular(&m_lambda()),
        group.right_regular(&m_rho()),
        group.right_regular(&m_tau()),
    )
    .expect("shared degree")
}

#[derive(Debug, Clone, Serialize)]
pub struct PglReport {
    pub ok: bool,
    pub checks: Vec<Check>,
    pub map: Option<MapInvariants>,
    pub petrie_dual: Option<MapInvariants>,
}

impl PglReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn check(checks: &mut Vec<Check>, name: &'static str, passed: bool, detail: impl Into<String>) -> bool {
    checks.push(Check {
        name,
        passed,
        detail: detail.into(),
    });
    passed
}

/// Builds both `PGL₂(9)` maps and checks every claimed property, including
/// the graph isomorphism with `H(2,6)` and agreement with the canonical
/// enumeration of `H(2,6)`.
pub fn verify_construction() -> PglReport {
    let mut checks = Vec::new();
    let (ml, mr, mt) = (m_lambda(), m_rho(), m_tau());

    let group = pgl_closure();
    check(
        &mut checks,
        "group_order",
        group.order() == 720,
        format!("|P| = {}", group.order()),
    );

    let d = PglGroup::generate(&[mr, mt]);
    check(
        &mut checks,
        "vertex_stabilizer_order",
        d.order() == 20,
        format!("|⟨ρ,τ⟩| = {}", d.order()),
    );
    check(&mut checks, "lambda_outside_stabilizer", !d.contains(&ml), "λ ∉ ⟨ρ,τ⟩");

    let relations = [ml, mr, mt, ml.mul(&mt)]
        .iter()
        .all(|x| *x != ProjMat2::identity() && x.mul(x) == ProjMat2::identity());
    check(&mut checks, "relations", relations, "λ² = ρ² = τ² = (λτ)² = 1");

    let orders = (ml.mul(&mr).order(), mr.mul(&mt).order(), ml.mul(&mr).mul(&mt).order());
    check(
        &mut checks,
        "generator_orders",
        orders == (10, 10, 8),
        format!("orders of λρ, ρτ, λρτ = {orders:?}"),
    );

    let square_classes: Vec<ProjMat2> = group
        .elements()
        .iter()
        .copied()
        .filter(|m| m.det().is_square())
        .collect();
    let sub = PglGroup::generate(&square_classes);
    check(
        &mut checks,
        "lambda_in_index_two_subgroup",
        ml.det() == Gf9::ONE && sub.order() == 360 && square_classes.len() == 360 && sub.contains(&ml),
        format!(
            "det M_λ = {}, |square-determinant subgroup| = {}",
            ml.det(),
            sub.order()
        ),
    );

    let triple = pgl29_triple();
    let faithful = group
        .elements()
        .iter()
        .filter(|m| group.right_regular(m).is_identity())
        .count()
        == 1;
    let perm_orders = (
        triple.lambda().then(triple.rho()).order(),
        triple.rotation().order(),
        triple.lambda().then(triple.rho()).then(triple.tau()).order(),
    );
    check(
        &mut checks,
        "regular_action",
        faithful && perm_orders == orders,
        format!("faithful {faithful}, permutation orders {perm_orders:?}"),
    );

    let map = match RegularMap::new(triple.clone(), 720) {
        Ok(m) => m,
        Err(e) => {
            check(&mut checks, "triple_validates", false, e.to_string());
            return PglReport {
                ok: false,
                checks,
                map: None,
                petrie_dual: None,
            };
        }
    };
    check(
        &mut checks,
        "triple_validates",
        map.group_order() == 720,
        format!("|G| = {}", map.group_order()),
    );

    let inv_m = map.invariants().ok();
    let dual = RegularMap::new(triple.petrie_dual(), 720).ok();
    let inv_n = dual.as_ref().and_then(|m| m.invariants().ok());
    let describe = |inv: &Option<MapInvariants>| match inv {
        Some(i) => format!(
            "{} F={} χ={} genus {} orientable {}",
            i.map_type, i.faces, i.euler, i.genus, i.orientable
        ),
        None => "unavailable".into(),
    };
    check(
        &mut checks,
        "map_invariants",
        inv_m.is_some_and(|i| {
            i.map_type.to_string() == "{10,10}_8" && i.faces == 36 && i.euler == -108 && i.genus == 110 && !i.orientable
        }),
        describe(&inv_m),
    );
    check(
        &mut checks,
        "petrie_dual_invariants",
        inv_n.is_some_and(|i| {
            i.map_type.to_string() == "{8,10}_10" && i.faces == 45 && i.euler == -99 && i.genus == 101 && !i.orientable
        }),
        describe(&inv_n),
    );

    match map.coset_graph() {
        Ok(cg) => {
            let g = &cg.graph;
            check(
                &mut checks,
                "coset_graph_shape",
                g.n_vertices() == 36 && g.regular_degree() == Some(10),
                format!("{} vertices, degree {:?}", g.n_vertices(), g.regular_degree()),
            );
            let h = hamming(2, 6).expect("small graph");
            let witness = is_isomorphic(g, &h);
            let verified = witness.as_ref().is_some_and(|w| verify_isomorphism(g, &h, w));
            check(
                &mut checks,
                "coset_graph_is_h26",
                verified,
                if verified {
                    "bijection found and verified"
                } else {
                    "no verified bijection"
                },
            );
        }
        Err(e) => {
            check(&mut checks, "coset_graph_shape", false, e.to_string());
        }
    }

    match classify(2, 6, &ClassifyOptions::default()) {
        Ok(c) => {
            let found: Vec<MapInvariants> = c.records.iter().map(|r| r.invariants).collect();
            let matched = found.len() == 2
                && inv_m.is_some_and(|i| found.contains(&i))
                && inv_n.is_some_and(|i| found.contains(&i))
                && inv_m != inv_n;
            check(
                &mut checks,
                "matches_enumeration",
                matched,
                format!(
                    "enumerated types {:?}",
                    found.iter().map(|i| i.map_type.to_string()).collect::<Vec<_>>()
                ),
            );
        }
        Err(e) => {
            check(&mut checks, "matches_enumeration", false, e.to_string());
        }
    }

    PglReport {
        ok: checks.iter().all(|c| c.passed),
        checks,
        map: inv_m,
        petrie_dual: inv_n,
    }
}
