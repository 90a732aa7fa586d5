//! `S_n ≀ S_d` acting on the vertices of `H(d,n)`, and the canonical triple
//! family `(τ, R, L)` parameterised by `(σ₀,…,σ_{d-1}; θ)`.
//!
//! Vertex `(v₀,…,v_{d-1})` has index `Σ v_i·n^i`. A wreath element
//! `(δ₀,…,δ_{d-1})π` first replaces each `v_i` by `v_i^{δ_i}` and then moves
//! the value in coordinate `i` to coordinate `i^π`.

use itertools::Itertools;
use thiserror::Error;

use crate::map::AdmissibleTriple;
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WreathError {
    #[error("need d >= 1 and n >= 3, got d = {d}, n = {n}")]
    BadSize { d: usize, n: usize },
    #[error("expected {expected} base permutations of degree {n}")]
    BaseShape { expected: usize, n: usize },
    #[error("canonical form constraint violated: {0}")]
    Constraint(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElem {
    base: Vec<Perm>,
    top: Perm,
}

impl WreathElem {
    pub fn new(base: Vec<Perm>, top: Perm) -> Result<WreathElem, WreathError> {
        let d = top.degree();
        let n = base.first().map_or(0, Perm::degree);
        if base.len() != d || base.iter().any(|b| b.degree() != n) {
            return Err(WreathError::BaseShape { expected: d, n });
        }
        Ok(WreathElem { base, top })
    }

    pub fn identity(d: usize, n: usize) -> WreathElem {
        WreathElem {
            base: vec![Perm::identity(n); d],
            top: Perm::identity(d),
        }
    }

    pub fn base(&self) -> &[Perm] {
        &self.base
    }

    pub fn top(&self) -> &Perm {
        &self.top
    }

    pub fn d(&self) -> usize {
        self.top.degree()
    }

    pub fn n(&self) -> usize {
        self.base[0].degree()
    }

    /// `self` then `other`.
    pub fn then(&self, other: &WreathElem) -> WreathElem {
        let base = self
            .base
            .iter()
            .enumerate()
            .map(|(i, b)| b.then(&other.base[self.top.apply(i)]))
            .collect();
        WreathElem {
            base,
            top: self.top.then(&other.top),
        }
    }

    pub fn inverse(&self) -> WreathElem {
        let top = self.top.inverse();
        // (δ*π)⁻¹ has base entry i equal to δ_{i^{π⁻¹}}⁻¹.
        let base = (0..self.d()).map(|i| self.base[top.apply(i)].inverse()).collect();
        WreathElem { base, top }
    }

    /// The induced permutation of the `n^d` vertex indices.
    pub fn to_perm(&self) -> Perm {
        let (d, n) = (self.d(), self.n());
        let size = n.pow(d as u32);
        let powers: Vec<usize> = (0..d).map(|i| n.pow(i as u32)).collect();
        let images = (0..size).map(|v| {
            (0..d)
                .map(|i| self.base[i].apply((v / powers[i]) % n) * powers[self.top.apply(i)])
                .sum::<usize>()
        });
        Perm::from_images(images).expect("wreath action is a bijection")
    }
}

pub fn wreath_to_perm(w: &WreathElem) -> Perm {
    w.to_perm()
}

/// `α_d = (0 1 … d-1)`.
pub fn alpha(d: usize) -> Perm {
    Perm::from_images((0..d).map(|i| ((i + 1) % d) as u16)).expect("cycle")
}

/// `β_m: i ↦ -i mod m`, i.e. `(0)(1 m-1)(2 m-2)…`.
pub fn beta(m: usize) -> Perm {
    Perm::from_images((0..m).map(|i| ((m - i) % m) as u16)).expect("reflection")
}

/// `γ_n = (1 2 … n-1)`.
pub fn gamma(n: usize) -> Perm {
    Perm::from_images((0..n).map(|k| match k {
        0 => 0,
        k if k == n - 1 => 1,
        k => (k + 1) as u16,
    }))
    .expect("cycle")
}

/// `(0)(1)(2 n-1)(3 n-2)…`, the coordinate-0 entry of the canonical `τ`.
pub fn tau_zero(n: usize) -> Perm {
    Perm::from_images((0..n).map(|k| if k < 2 { k as u16 } else { (n + 1 - k) as u16 })).expect("reflection")
}

fn check_size(d: usize, n: usize) -> Result<(), WreathError> {
    if d < 1 || n < 3 {
        return Err(WreathError::BadSize { d, n });
    }
    Ok(())
}

/// `τ = ((0)(1)(2 n-1)…, β_n, …, β_n)β_d`.
pub fn canonical_tau_elem(d: usize, n: usize) -> Result<WreathElem, WreathError> {
    check_size(d, n)?;
    let mut base = vec![beta(n); d];
    base[0] = tau_zero(n);
    Ok(WreathElem { base, top: beta(d) })
}

/// `R = (id, …, id, γ_n)α_d`.
pub fn canonical_rotation_elem(d: usize, n: usize) -> Result<WreathElem, WreathError> {
    check_size(d, n)?;
    let mut base = vec![Perm::identity(n); d];
    base[d - 1] = gamma(n);
    Ok(WreathElem { base, top: alpha(d) })
}

pub fn canonical_tau(d: usize, n: usize) -> Result<Perm, WreathError> {
    Ok(canonical_tau_elem(d, n)?.to_perm())
}

pub fn canonical_rotation(d: usize, n: usize) -> Result<Perm, WreathError> {
    Ok(canonical_rotation_elem(d, n)?.to_perm())
}

pub fn canonical_l(params: &CanonicalTripleParams) -> Result<Perm, WreathError> {
    params.validate()?;
    Ok(params.l_elem().to_perm())
}

/// Parameters `(σ₀,…,σ_{d-1}; θ)` of `L = (σ₀,…,σ_{d-1})θ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTripleParams {
    pub d: usize,
    pub n: usize,
    pub sigma: Vec<Perm>,
    pub theta: Perm,
}

impl CanonicalTripleParams {
    pub fn new(d: usize, n: usize, sigma: Vec<Perm>, theta: Perm) -> Result<CanonicalTripleParams, WreathError> {
        let p = CanonicalTripleParams { d, n, sigma, theta };
        p.validate()?;
        Ok(p)
    }

    /// `0^θ = 0`, `θ² = id`, `σ₀` swaps 0 and 1, and for `i ≠ 0`: `σ_i`
    /// fixes 0 and `σ_i·σ_{i^θ} = id`.
    pub fn validate(&self) -> Result<(), WreathError> {
        let (d, n) = (self.d, self.n);
        check_size(d, n)?;
        if self.sigma.len() != d || self.sigma.iter().any(|s| s.degree() != n) {
            return Err(WreathError::BaseShape { expected: d, n });
        }
        let th = &self.theta;
        if th.degree() != d {
            return Err(WreathError::Constraint(format!(
                "θ has degree {}, need {d}",
                th.degree()
            )));
        }
        if !th.fixes(0) || !th.then(th).is_identity() {
            return Err(WreathError::Constraint("θ must fix 0 and square to id".into()));
        }
        let s0 = &self.sigma[0];
        if s0.apply(0) != 1 || s0.apply(1) != 0 {
            return Err(WreathError::Constraint("σ₀ must swap 0 and 1".into()));
        }
        for i in 1..d {
            let si = &self.sigma[i];
            if !si.fixes(0) {
                return Err(WreathError::Constraint(format!("σ_{i} must fix 0")));
            }
            if !si.then(&self.sigma[th.apply(i)]).is_identity() {
                return Err(WreathError::Constraint(format!("σ_{i}·σ_{} ≠ id", th.apply(i))));
            }
        }
        Ok(())
    }

    pub fn l_elem(&self) -> WreathElem {
        WreathElem {
            base: self.sigma.clone(),
            top: self.theta.clone(),
        }
    }

    /// `λ = L·τ`, `ρ = R·τ`, `τ` as permutations of the `n^d` vertices.
    pub fn triple(&self) -> AdmissibleTriple {
        let tau = canonical_tau(self.d, self.n).expect("validated size");
        let rot = canonical_rotation(self.d, self.n).expect("validated size");
        let l = self.l_elem().to_perm();
        AdmissibleTriple::new(l.then(&tau), rot.then(&tau), tau).expect("shared degree")
    }

    /// Images of each `σ_i`, as stored in census records.
    pub fn sigma_images(&self) -> Vec<Vec<u16>> {
        self.sigma.iter().map(|s| s.images().to_vec()).collect()
    }
}

fn symmetric_group(n: usize) -> impl Iterator<Item = Perm> {
    (0..n as u16)
        .permutations(n)
        .map(|v| Perm::from_images(v).expect("permutation"))
}

/// Choices for `σ₀`: involutions of `[n]` swapping 0 and 1, in lexicographic order.
pub fn sigma0_choices(n: usize) -> Vec<Perm> {
    symmetric_group(n)
        .filter(|p| p.apply(0) == 1 && p.apply(1) == 0 && p.then(p).is_identity())
        .collect()
}

/// Permutations fixing 0; with `involutive`, only those with `σ² = id`.
pub fn fixing_zero_choices(n: usize, involutive: bool) -> Vec<Perm> {
    symmetric_group(n)
        .filter(|p| p.fixes(0) && (!involutive || p.then(p).is_identity()))
        .collect()
}

/// Involutions (and the identity) of `[d]` fixing 0: the admissible `θ`.
pub fn theta_choices(d: usize) -> Vec<Perm> {
    symmetric_group(d)
        .filter(|p| p.fixes(0) && p.then(p).is_identity())
        .collect()
}

/// All canonical parameters with the given `θ`, in lexicographic order of
/// `(σ₀, σ₁, …)`.
///
/// Each orbit of `θ` on `[d] ∖ {0}` contributes one free choice: a fixed
/// point `i` takes `σ_i` with `σ_i² = id`, a 2-cycle `{i, j}` with `i < j`
/// takes any `σ_i` fixing 0 and sets `σ_j = σ_i⁻¹`.
pub fn enumerate_with_theta(
    d: usize,
    n: usize,
    theta: &Perm,
) -> Result<impl Iterator<Item = CanonicalTripleParams>, WreathError> {
    check_size(d, n)?;
    if theta.degree() != d || !theta.fixes(0) || !theta.then(theta).is_identity() {
        return Err(WreathError::Constraint(
            "θ must be an involution of [d] fixing 0".into(),
        ));
    }
    let free: Vec<usize> = (1..d).filter(|&i| theta.apply(i) >= i).collect();
    let involutive = fixing_zero_choices(n, true);
    let any = fixing_zero_choices(n, false);
    let mut slots: Vec<Vec<Perm>> = vec![sigma0_choices(n)];
    for &i in &free {
        slots.push(if theta.apply(i) == i {
            involutive.clone()
        } else {
            any.clone()
        });
    }
    let theta = theta.clone();
    let iter = slots.into_iter().multi_cartesian_product().map(move |choice| {
        let mut sigma = vec![Perm::identity(n); d];
        sigma[0] = choice[0].clone();
        for (k, &i) in free.iter().enumerate() {
            let s = &choice[k + 1];
            sigma[i] = s.clone();
            let j = theta.apply(i);
            if j != i {
                sigma[j] = s.inverse();
            }
        }
        CanonicalTripleParams {
            d,
            n,
            sigma,
            theta: theta.clone(),
        }
    });
    Ok(iter)
}

/// The nonorientable search space: `θ = β_d`.
pub fn enumerate_sigma_candidates(
    d: usize,
    n: usize,
) -> Result<impl Iterator<Item = CanonicalTripleParams>, WreathError> {
    enumerate_with_theta(d, n, &beta(d.max(1)))
}

/// Size of [`enumerate_with_theta`] without enumerating it.
pub fn candidate_count(d: usize, n: usize, theta: &Perm) -> usize {
    let sigma0 = sigma0_choices(n).len();
    let involutive = fixing_zero_choices(n, true).len();
    let any: usize = (1..n).product();
    (1..d)
        .filter(|&i| theta.apply(i) >= i)
        .map(|i| if theta.apply(i) == i { involutive } else { any })
        .fold(sigma0, |acc, k| acc.saturating_mul(k))
}
