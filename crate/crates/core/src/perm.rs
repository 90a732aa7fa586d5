//! Dense permutations and brute-force group closure.
//!
//! Products follow the right-action convention used throughout the crate:
//! `p.compose(&q)` applies `p` first and then `q`, so `x^(pq) = (x^p)^q`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported degree; points are stored as `u16`.
pub const MAX_DEGREE: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {0} is outside 1..={MAX_DEGREE}")]
    BadDegree(usize),
    #[error("image list is not a permutation of 0..{degree}")]
    NotABijection { degree: usize },
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("group order exceeds cap {cap}")]
    CapExceeded { cap: usize },
    #[error("element is not a member of the ambient group")]
    NotAMember,
}

/// A bijection of `{0, …, degree-1}` stored as its image array.
///
/// Ordering is lexicographic on the image array, which is the canonical
/// element order used by [`GroupClosure`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!((1..=MAX_DEGREE).contains(&degree), "bad degree {degree}");
        Perm {
            images: (0..degree).map(|i| i as u16).collect(),
        }
    }

    pub fn from_images<I, T>(images: I) -> Result<Perm, PermError>
    where
        I: IntoIterator<Item = T>,
        T: TryInto<u16>,
    {
        let mut out = Vec::new();
        for x in images {
            let x = x
                .try_into()
                .map_err(|_| PermError::NotABijection { degree: MAX_DEGREE })?;
            out.push(x);
        }
        let degree = out.len();
        if degree == 0 || degree > MAX_DEGREE {
            return Err(PermError::BadDegree(degree));
        }
        let mut seen = vec![false; degree];
        for &x in &out {
            let x = x as usize;
            if x >= degree || seen[x] {
                return Err(PermError::NotABijection { degree });
            }
            seen[x] = true;
        }
        Ok(Perm { images: out })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1], &[2, 5]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm, PermError> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(PermError::BadDegree(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(PermError::NotABijection { degree });
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked [`Perm::compose`]; panics on a degree mismatch.
    #[inline]
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u16;
        }
        Perm { images: out }
    }

    pub fn pow(&self, exponent: i64) -> Perm {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let e = exponent.unsigned_abs() as usize;
        let mut out = vec![0u16; self.degree()];
        for cycle in base.cycles() {
            let len = cycle.len();
            for (k, &a) in cycle.iter().enumerate() {
                out[a] = cycle[(k + e) % len] as u16;
            }
        }
        Perm { images: out }
    }

    /// All cycles including fixed points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k >= 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, lcm)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity()
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, &x)| self.images[x as usize] as usize == i)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.apply(point) == point
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions.is_multiple_of(2)
    }
}

pub fn compose(p: &Perm, q: &Perm) -> Result<Perm, PermError> {
    p.compose(q)
}

pub fn inverse(p: &Perm) -> Perm {
    p.inverse()
}

pub fn element_order(p: &Perm) -> usize {
    p.order()
}

pub fn is_involution(p: &Perm) -> bool {
    p.is_involution()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    /// Cycle notation, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, a) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("id")?;
        }
        write!(f, "[{}]", self.degree())
    }
}

impl FromStr for Perm {
    type Err = PermError;

    /// Space-separated 0-based image list, e.g. `1 0 2 3`.
    fn from_str(s: &str) -> Result<Perm, PermError> {
        let images = s
            .split_whitespace()
            .map(|tok| tok.parse::<u16>().map_err(|_| PermError::Parse(tok.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Perm::from_images(images)
    }
}

/// The element set of a finitely generated permutation group.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<Perm>,
    degree: usize,
}

impl GroupClosure {
    /// Breadth-first closure; fails as soon as more than `cap` elements exist.
    ///
    /// An empty generator list is not allowed since it carries no degree.
    pub fn generate(generators: &[Perm], cap: usize) -> Result<GroupClosure, PermError> {
        let degree = generators.first().map(Perm::degree).ok_or(PermError::BadDegree(0))?;
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        if seen.len() > cap {
            return Err(PermError::CapExceeded { cap });
        }
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    if seen.len() > cap {
                        return Err(PermError::CapExceeded { cap });
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(GroupClosure {
            elements,
            index,
            generators: generators.to_vec(),
            degree,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Elements in canonical (lexicographic) order; index 0 is the identity.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `[G : ⟨generators⟩]`.
    pub fn subgroup_index(&self, generators: &[Perm]) -> Result<usize, PermError> {
        if generators.iter().any(|g| !self.contains(g)) {
            return Err(PermError::NotAMember);
        }
        let sub = GroupClosure::generate(generators, self.order())?;
        debug_assert_eq!(self.order() % sub.order(), 0);
        Ok(self.order() / sub.order())
    }

    /// The smallest normal subgroup containing `elems`, or `CapExceeded`
    /// once it has more than `cap` elements.
    pub fn normal_closure(&self, elems: &[Perm], cap: usize) -> Result<GroupClosure, PermError> {
        if elems.iter().any(|g| !self.contains(g)) {
            return Err(PermError::NotAMember);
        }
        let mut conjugates: Vec<Perm> = elems
            .iter()
            .flat_map(|g| self.elements.iter().map(move |x| x.inverse().then(g).then(x)))
            .collect();
        conjugates.sort_unstable();
        conjugates.dedup();
        if conjugates.len() > cap {
            return Err(PermError::CapExceeded { cap });
        }
        GroupClosure::generate(&conjugates, cap)
    }
}

pub fn closure(generators: &[Perm], cap: usize) -> Result<GroupClosure, PermError> {
    GroupClosure::generate(generators, cap)
}

pub fn contains(group: &GroupClosure, p: &Perm) -> bool {
    group.contains(p)
}

pub fn subgroup_index(group: &GroupClosure, generators: &[Perm]) -> Result<usize, PermError> {
    group.subgroup_index(generators)
}

/// `L·R^{m₁}·L·R^{m₂}⋯L·R^{m_l}`; the empty word is the identity.
pub fn evaluate_word(l: &Perm, r: &Perm, exponents: &[i64]) -> Result<Perm, PermError> {
    if l.degree() != r.degree() {
        return Err(PermError::DegreeMismatch {
            left: l.degree(),
            right: r.degree(),
        });
    }
    let mut acc = Perm::identity(l.degree());
    for &m in exponents {
        acc = acc.then(l).then(&r.pow(m));
    }
    Ok(acc)
}

/// Orbit of `point` under `⟨generators⟩`, provided every Schreier generator of
/// its stabilizer lies in `subgroup`.
///
/// When `subgroup` fixes `point`, a `Some(orbit_len)` result means the point
/// stabilizer equals `subgroup` exactly and the group order is
/// `orbit_len · |subgroup|`. Returns `None` at the first Schreier generator
/// outside `subgroup`, which lets callers reject candidates without building
/// the full group.
pub fn stabilizer_within(generators: &[Perm], point: usize, subgroup: &GroupClosure) -> Option<usize> {
    let degree = subgroup.degree();
    let mut transversal: Vec<Option<Perm>> = vec![None; degree];
    transversal[point] = Some(Perm::identity(degree));
    let mut queue = VecDeque::from([point]);
    let mut orbit_len = 1;
    while let Some(x) = queue.pop_front() {
        let ux = transversal[x].clone().expect("visited point has a transversal");
        for g in generators {
            let y = g.apply(x);
            let uxg = ux.then(g);
            match &transversal[y] {
                None => {
                    transversal[y] = Some(uxg);
                    orbit_len += 1;
                    queue.push_back(y);
                }
                Some(uy) => {
                    let schreier = uxg.then(&uy.inverse());
                    if !subgroup.contains(&schreier) {
                        return None;
                    }
                }
            }
        }
    }
    Some(orbit_len)
}
