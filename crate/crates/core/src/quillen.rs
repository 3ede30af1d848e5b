//! Restrictions to maximal elementary abelian 2-subgroups, the Quillen map, and its inverse.
//!
//! A site of `B_n` is a partition of `n` into powers of two; part `2^k` contributes a center
//! variable `x` and the `k` variables of `V_k`. Sites of `D_n` reuse the `B_n` partitions:
//! a run of parts equal to 1 is cut down to the kernel of the sum map, parts equal to 2 are
//! written in the coordinates `z = x + u`, `w = x`, and partitions with no parts 1 or 2 come
//! in a plain and an `s0`-twisted copy.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::gf2::{exp_of, Echelon, Exps, Gf2Poly, MAX_VARS};
use crate::hopf_b::{self, Block, ElementB, Monomial};
use crate::hopf_d::{self, Charge, ChargedMonomial, ElementD};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuillenError {
    #[error("element lives in component {0}, site partitions {1}")]
    ComponentMismatch(u32, u32),
    #[error("family is not the restriction of any class in component {0}, degree {1}")]
    NoSolution(u32, u32),
    #[error("restriction map is not injective in component {0}, degree {1}")]
    NotInjective(u32, u32),
    #[error("family is not homogeneous")]
    Inhomogeneous,
    #[error("component {0} needs more than {MAX_VARS} site variables")]
    TooLarge(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    B,
    D,
}

/// Partition into powers of two, parts in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition2(Vec<u32>);

impl Partition2 {
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.iter().all(|p| p.is_power_of_two()).then_some(Partition2(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Multiplicity of the part `p`.
    pub fn mult(&self, p: u32) -> usize {
        self.0.iter().filter(|&&q| q == p).count()
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn partitions2(n: u32) -> Vec<Partition2> {
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition2>) {
        if left == 0 {
            out.push(Partition2(cur.clone()));
            return;
        }
        let mut p = max;
        while p >= 1 {
            if p <= left {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
            p /= 2;
        }
    }
    let mut out = Vec::new();
    let top = if n == 0 { 1 } else { 1 << (31 - n.leading_zeros()) };
    rec(n, top, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SiteD {
    pub pi: Partition2,
    pub twisted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Site {
    B(Partition2),
    D(SiteD),
}

impl Site {
    pub fn partition(&self) -> &Partition2 {
        match self {
            Site::B(p) => p,
            Site::D(s) => &s.pi,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Site::B(p) => format!("B:{p}"),
            Site::D(s) if s.twisted => format!("D:{}:s0", s.pi),
            Site::D(s) => format!("D:{}", s.pi),
        }
    }
}

pub fn sites_b(n: u32) -> Vec<Site> {
    partitions2(n).into_iter().map(Site::B).collect()
}

/// Partitions with exactly two parts equal to 1 give non-maximal subgroups (contained in the
/// site with those two parts fused) and are left out.
pub fn sites_d(n: u32) -> Vec<Site> {
    let mut out = Vec::new();
    for pi in partitions2(n) {
        let (m1, m2) = (pi.mult(1), pi.mult(2));
        if m1 == 2 {
            continue;
        }
        if m1 == 0 && m2 == 0 {
            out.push(Site::D(SiteD { pi: pi.clone(), twisted: true }));
        }
        out.push(Site::D(SiteD { pi, twisted: false }));
    }
    out.sort();
    out
}

pub fn sites(ring: Ring, n: u32) -> Vec<Site> {
    match ring {
        Ring::B => sites_b(n),
        Ring::D => sites_d(n),
    }
}

fn part_vars(p: u32) -> usize {
    1 + p.trailing_zeros() as usize
}

/// Variable names for a list of parts; `d_coords` renames the variables of parts equal to 2.
fn universe(parts: &[u32], d_coords: bool) -> Arc<[String]> {
    static CACHE: OnceLock<Mutex<HashMap<(Vec<u32>, bool), Arc<[String]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (parts.to_vec(), d_coords);
    if let Some(u) = cache.lock().unwrap().get(&key) {
        return u.clone();
    }
    let mut names = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        let i = i + 1;
        if d_coords && p == 2 {
            names.push(format!("z{i}"));
            names.push(format!("w{i}"));
            continue;
        }
        names.push(format!("x{i}"));
        let k = p.trailing_zeros();
        for j in 1..=k {
            names.push(if k == 1 { format!("u{i}") } else { format!("u{i}.{j}") });
        }
    }
    assert!(names.len() <= MAX_VARS, "too many site variables");
    let u: Arc<[String]> = names.into();
    cache.lock().unwrap().insert(key, u.clone());
    u
}

pub fn site_universe(site: &Site) -> Arc<[String]> {
    universe(site.partition().parts(), matches!(site, Site::D(_)))
}

/// `prod_{v in span(u_1..u_k)} (t + v)` as coefficients of powers of `t`, over `[x, u_1..u_k]`.
fn orbit_product(k: u32) -> Vec<Gf2Poly> {
    let vars = universe(&[1 << k], false);
    let mut coeffs = vec![Gf2Poly::one(vars.clone())];
    for mask in 0u32..(1 << k) {
        let mut v = Gf2Poly::zero(vars.clone());
        for j in 0..k {
            if mask >> j & 1 == 1 {
                v.add_assign(&Gf2Poly::var(vars.clone(), 1 + j as usize));
            }
        }
        // multiply by (t + v)
        let mut next = vec![Gf2Poly::zero(vars.clone()); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1].add_assign(c);
            next[i].add_assign(&c.mul(&v).expect("same universe"));
        }
        coeffs = next;
    }
    coeffs
}

/// Dickson invariant of degree `2^k - 2^j` in the variables of `V_k`, placed in the site
/// universe of the part `2^k` (center variable unused).
pub fn dickson(k: u32, j: u32) -> Gf2Poly {
    assert!(j < k);
    orbit_product(k)[1 << j].clone()
}

/// `f_{2^k} = prod_y (x + y)`, the top Stiefel-Whitney class of the reflection representation.
pub fn f_class(k: u32) -> Gf2Poly {
    let vars = universe(&[1 << k], false);
    let x = Gf2Poly::var(vars.clone(), 0);
    let mut acc = Gf2Poly::zero(vars);
    for (i, c) in orbit_product(k).iter().enumerate() {
        acc.add_assign(&c.mul(&x.pow(i as u32)).expect("same universe"));
    }
    acc
}

/// `sum_{|S| even} prod_{i not in S} (x_i + u_i) prod_{j in S} x_j` over the site `(2)^m`.
pub fn h_class(m: u32) -> Gf2Poly {
    let parts = vec![2; m as usize];
    let vars = universe(&parts, false);
    let x = |i: u32| Gf2Poly::var(vars.clone(), 2 * i as usize);
    let u = |i: u32| Gf2Poly::var(vars.clone(), 2 * i as usize + 1);
    let mut acc = Gf2Poly::zero(vars.clone());
    for s in 0u32..(1 << m) {
        if s.count_ones() % 2 == 1 {
            continue;
        }
        let mut t = Gf2Poly::one(vars.clone());
        for i in 0..m {
            let f = if s >> i & 1 == 1 { x(i) } else { x(i).add(&u(i)).expect("same universe") };
            t = t.mul(&f).expect("same universe");
        }
        acc.add_assign(&t);
    }
    acc
}

fn elementary(i: u32, m: u32) -> Gf2Poly {
    let vars = universe(&vec![1; m as usize], false);
    let terms = (0u32..(1 << m)).filter(|s| s.count_ones() == i).map(|s| {
        (0..m).filter(|j| s >> j & 1 == 1).map(|j| 1u128 << (8 * j)).sum::<Exps>()
    });
    Gf2Poly::from_terms(vars, terms)
}

/// `e_i + e_1 e_{i-1}` for `2 <= i < m`, and `e_1 e_{m-1}` for `i = m`, over the site `(1)^m`.
pub fn ebar(i: u32, m: u32) -> Gf2Poly {
    assert!(2 <= i && i <= m);
    let prod = elementary(1, m).mul(&elementary(i - 1, m)).expect("same universe");
    if i == m {
        prod
    } else {
        elementary(i, m).add(&prod).expect("same universe")
    }
}

/// Restriction of one block of width `2^k` to `A_(2^k)`: `f^{t_0} prod_j d_{2^k - 2^{k-j}}^{t_j}`.
fn block_restriction(b: &Block, k: u32) -> Gf2Poly {
    let vars = universe(&[1 << k], false);
    let mut acc = Gf2Poly::one(vars);
    for (j, &t) in b.profile().iter().enumerate() {
        if t == 0 {
            continue;
        }
        let g = if j == 0 { f_class(k) } else { dickson(k, k - j as u32) };
        acc = acc.mul(&g.pow(t)).expect("same universe");
    }
    acc
}

type RestrictKey = (Monomial, Vec<u32>);

/// Split off the first part through the coproduct; a transitive part sees single blocks only.
fn restrict_monomial_parts(m: &Monomial, parts: &[u32]) -> Gf2Poly {
    static CACHE: OnceLock<Mutex<HashMap<RestrictKey, Gf2Poly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let vars = universe(parts, false);
    if m.component() != parts.iter().sum::<u32>() {
        return Gf2Poly::zero(vars);
    }
    if parts.is_empty() {
        return Gf2Poly::one(vars);
    }
    let key = (m.clone(), parts.to_vec());
    if let Some(p) = cache.lock().unwrap().get(&key) {
        return p.clone();
    }
    let p0 = parts[0];
    let k = p0.trailing_zeros();
    let mut acc = Gf2Poly::zero(vars.clone());
    if parts.len() == 1 {
        if let [b] = m.blocks() {
            acc = block_restriction(b, k);
        }
    } else {
        let rest = &parts[1..];
        for (a, b) in m.coproduct() {
            if a.component() != p0 || a.blocks().len() != 1 {
                continue;
            }
            let tail = restrict_monomial_parts(&b, rest);
            if tail.is_zero() {
                continue;
            }
            let head = block_restriction(&a.blocks()[0], k).shifted(vars.clone(), 0);
            let tail = tail.shifted(vars.clone(), part_vars(p0));
            acc.add_assign(&head.mul(&tail).expect("same universe"));
        }
    }
    cache.lock().unwrap().insert(key, acc.clone());
    acc
}

pub fn restrict_b(x: &ElementB, pi: &Partition2) -> Result<Gf2Poly, QuillenError> {
    let n = pi.total();
    let mut acc = Gf2Poly::zero(universe(pi.parts(), false));
    for m in x.terms() {
        if m.component() != n {
            return Err(QuillenError::ComponentMismatch(m.component(), n));
        }
        acc.add_assign(&restrict_monomial_parts(m, pi.parts()));
    }
    Ok(acc)
}

/// Rewrite a `B`-site polynomial in `D`-site coordinates: cut the parts equal to 1 down to the
/// kernel of the sum map and pass to `z = x + u`, `w = x` on parts equal to 2.
fn to_d_coords(p: &Gf2Poly, pi: &Partition2) -> Gf2Poly {
    let target = universe(pi.parts(), true);
    let var = |i: usize| Gf2Poly::var(target.clone(), i);
    let mut images = Vec::new();
    let mut ones = Vec::new();
    let mut off = 0;
    for &q in pi.parts() {
        match q {
            1 => {
                ones.push(off);
                images.push(var(off));
            }
            2 => {
                images.push(var(off + 1));
                images.push(var(off).add(&var(off + 1)).expect("same universe"));
            }
            _ => images.extend((0..part_vars(q)).map(|j| var(off + j))),
        }
        off += part_vars(q);
    }
    if let Some(&last) = ones.last() {
        let mut s = Gf2Poly::zero(target.clone());
        for &o in &ones[..ones.len() - 1] {
            s.add_assign(&var(o));
        }
        images[last] = s;
    }
    p.substitute(target, &images)
}

/// Sign of a monomial over the parts equal to 2: `Some(true)` when an even number of those
/// factors are negative (`z^a w^b` with `a < b`) and none is balanced.
fn monomial_sign(e: Exps, pi: &Partition2) -> Option<bool> {
    let mut even = true;
    let mut off = 0;
    for &q in pi.parts() {
        if q == 2 {
            let (a, b) = (exp_of(e, off), exp_of(e, off + 1));
            match a.cmp(&b) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => even = !even,
                std::cmp::Ordering::Greater => {}
            }
        }
        off += part_vars(q);
    }
    Some(even)
}

/// Positive part of a polynomial in `D`-site coordinates.
pub fn positive_part(p: &Gf2Poly, pi: &Partition2) -> Gf2Poly {
    let terms = p.terms().iter().copied().filter(|&e| monomial_sign(e, pi) == Some(true));
    Gf2Poly::from_terms(p.vars().clone(), terms)
}

pub fn negative_part(p: &Gf2Poly, pi: &Partition2) -> Gf2Poly {
    let terms = p.terms().iter().copied().filter(|&e| monomial_sign(e, pi) == Some(false));
    Gf2Poly::from_terms(p.vars().clone(), terms)
}

/// Restriction of a charged monomial. Neutral classes restrict as their `B` representative;
/// signed classes vanish when a part 1 is present and otherwise keep the half of the `B`
/// restriction matching their charge (flipped on the twisted copy).
pub fn restrict_charged(m: &ChargedMonomial, site: &SiteD) -> Gf2Poly {
    let pi = &site.pi;
    let b = restrict_monomial_parts(m.base(), pi.parts());
    match m.charge() {
        Charge::Neutral => to_d_coords(&b, pi),
        c => {
            if pi.mult(1) > 0 {
                return Gf2Poly::zero(universe(pi.parts(), true));
            }
            let p = to_d_coords(&b, pi);
            if (c == Charge::Plus) != site.twisted {
                positive_part(&p, pi)
            } else {
                negative_part(&p, pi)
            }
        }
    }
}

/// Restriction of `rho(x)`, computed from the restrictions of `x` to `B_n`.
pub fn restrict_rho(x: &ElementB, site: &SiteD) -> Gf2Poly {
    let mut acc = Gf2Poly::zero(universe(site.pi.parts(), false));
    for m in x.terms() {
        acc.add_assign(&restrict_monomial_parts(m, site.pi.parts()));
    }
    to_d_coords(&acc, &site.pi)
}

pub fn restrict_d(x: &ElementD, site: &SiteD) -> Result<Gf2Poly, QuillenError> {
    let n = site.pi.total();
    let mut acc = Gf2Poly::zero(universe(site.pi.parts(), true));
    for m in x.terms() {
        if m.component() != n {
            return Err(QuillenError::ComponentMismatch(m.component(), n));
        }
        acc.add_assign(&restrict_charged(m, site));
    }
    Ok(acc)
}

/// The image of a class under the Quillen map: one polynomial per site.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionFamily {
    pub ring: Ring,
    pub n: u32,
    pub entries: Vec<(Site, Gf2Poly)>,
}

impl RestrictionFamily {
    pub fn map(&self, f: impl Fn(&Gf2Poly) -> Gf2Poly) -> Self {
        RestrictionFamily { ring: self.ring, n: self.n, entries: self.entries.iter().map(|(s, p)| (s.clone(), f(p))).collect() }
    }

    /// Sitewise product of two families over the same sites.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.ring, self.n), (other.ring, other.n));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|((s, p), (_, q))| (s.clone(), p.mul(q).expect("same site")))
            .collect();
        RestrictionFamily { ring: self.ring, n: self.n, entries }
    }

    /// Common degree of the non-zero entries; `None` for the zero family.
    pub fn degree(&self) -> Result<Option<u32>, QuillenError> {
        let mut deg = None;
        for (_, p) in &self.entries {
            if !p.is_homogeneous() {
                return Err(QuillenError::Inhomogeneous);
            }
            match (deg, p.degree()) {
                (_, None) => {}
                (None, d) => deg = d,
                (Some(a), Some(b)) if a != b => return Err(QuillenError::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }
}

pub fn quillen_map_b(x: &ElementB, n: u32) -> Result<RestrictionFamily, QuillenError> {
    let entries = partitions2(n).into_iter().map(|pi| Ok((Site::B(pi.clone()), restrict_b(x, &pi)?))).collect::<Result<_, _>>()?;
    Ok(RestrictionFamily { ring: Ring::B, n, entries })
}

pub fn quillen_map_d(x: &ElementD, n: u32) -> Result<RestrictionFamily, QuillenError> {
    let mut entries = Vec::new();
    for site in sites_d(n) {
        let Site::D(s) = &site else { unreachable!() };
        let p = restrict_d(x, s)?;
        entries.push((site, p));
    }
    Ok(RestrictionFamily { ring: Ring::D, n, entries })
}

/// Stacked restriction matrix of an additive basis over all sites, eliminated once.
pub struct QuillenSystem {
    pub ring: Ring,
    pub n: u32,
    pub d: u32,
    sites: Vec<Site>,
    rows: HashMap<(usize, Exps), usize>,
    echelon: Echelon,
}

impl QuillenSystem {
    fn build(ring: Ring, n: u32, d: u32) -> Self {
        let sites = sites(ring, n);
        let columns: Vec<Vec<Gf2Poly>> = match ring {
            Ring::B => hopf_b::basis(n, d)
                .iter()
                .map(|m| sites.iter().map(|s| restrict_monomial_parts(m, s.partition().parts())).collect())
                .collect(),
            Ring::D => hopf_d::basis_d(n, d)
                .iter()
                .map(|m| {
                    sites
                        .iter()
                        .map(|s| match s {
                            Site::D(sd) => restrict_charged(m, sd),
                            Site::B(_) => unreachable!(),
                        })
                        .collect()
                })
                .collect(),
        };
        let mut rows = HashMap::new();
        for col in &columns {
            for (si, p) in col.iter().enumerate() {
                for &e in p.terms() {
                    let next = rows.len();
                    rows.entry((si, e)).or_insert(next);
                }
            }
        }
        let mut echelon = Echelon::new(rows.len(), columns.len());
        for col in &columns {
            let ones = col.iter().enumerate().flat_map(|(si, p)| p.terms().iter().map(move |&e| (si, e)));
            let v = echelon.bitvec(ones.map(|k| rows[&k]));
            echelon.insert(v);
        }
        QuillenSystem { ring, n, d, sites, rows, echelon }
    }

    pub fn get(ring: Ring, n: u32, d: u32) -> Arc<QuillenSystem> {
        static CACHE: OnceLock<Mutex<HashMap<(Ring, u32, u32), Arc<QuillenSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(s) = cache.lock().unwrap().get(&(ring, n, d)) {
            return s.clone();
        }
        let s = Arc::new(QuillenSystem::build(ring, n, d));
        cache.lock().unwrap().entry((ring, n, d)).or_insert(s).clone()
    }

    pub fn dimension(&self) -> usize {
        self.echelon.inserted()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.dimension()
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    /// Coefficients over the basis reproducing the family.
    pub fn solve(&self, family: &RestrictionFamily) -> Result<Vec<bool>, QuillenError> {
        let no = QuillenError::NoSolution(self.n, self.d);
        if !self.is_injective() {
            return Err(QuillenError::NotInjective(self.n, self.d));
        }
        let mut ones = Vec::new();
        for (si, site) in self.sites.iter().enumerate() {
            let Some((_, p)) = family.entries.iter().find(|(s, _)| s == site) else {
                return Err(no);
            };
            for &e in p.terms() {
                ones.push(*self.rows.get(&(si, e)).ok_or(no.clone())?);
            }
        }
        self.echelon.express(&self.echelon.bitvec(ones)).ok_or(no)
    }
}

fn family_degree(family: &RestrictionFamily, fallback: u32) -> Result<u32, QuillenError> {
    Ok(family.degree()?.unwrap_or(fallback))
}

/// The unique class in `H^d(B_n)` with the given restrictions.
pub fn quillen_solve_b(family: &RestrictionFamily, d: u32) -> Result<ElementB, QuillenError> {
    let d = family_degree(family, d)?;
    let sys = QuillenSystem::get(Ring::B, family.n, d);
    let coeffs = sys.solve(family)?;
    Ok(ElementB::from_monomials(hopf_b::basis(family.n, d).into_iter().zip(coeffs).filter(|(_, c)| *c).map(|(m, _)| m)))
}

pub fn quillen_solve_d(family: &RestrictionFamily, d: u32) -> Result<ElementD, QuillenError> {
    let d = family_degree(family, d)?;
    let sys = QuillenSystem::get(Ring::D, family.n, d);
    let coeffs = sys.solve(family)?;
    Ok(ElementD::from_monomials(hopf_d::basis_d(family.n, d).into_iter().zip(coeffs).filter(|(_, c)| *c).map(|(m, _)| m)))
}

/// Cup product in a positive component of `A'_D`, read off from the restrictions.
pub fn cup_d_by_restriction(a: &ChargedMonomial, b: &ChargedMonomial) -> Result<ElementD, QuillenError> {
    let n = a.component();
    let fa = quillen_map_d(&ElementD::from(a.clone()), n)?;
    let fb = quillen_map_d(&ElementD::from(b.clone()), n)?;
    quillen_solve_d(&fa.mul(&fb), a.degree() + b.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::universe as names;

    fn poly(vars: &[&str], terms: &[&[u32]]) -> Gf2Poly {
        let u = names(vars);
        Gf2Poly::from_terms(u, terms.iter().map(|t| t.iter().enumerate().map(|(i, &k)| (k as Exps) << (8 * i)).sum::<Exps>()))
    }

    #[test]
    fn partitions_of_small_numbers() {
        assert_eq!(partitions2(4).len(), 4);
        assert_eq!(partitions2(5).len(), 4);
        assert_eq!(partitions2(8).len(), 10);
        assert_eq!(sites_d(4).len(), 4);
        assert_eq!(Site::D(SiteD { pi: Partition2::new(vec![4, 4]).unwrap(), twisted: true }).label(), "D:(4,4):s0");
    }

    #[test]
    fn dickson_in_two_variables() {
        let v = ["x1", "u1.1", "u1.2"];
        assert_eq!(dickson(2, 1), poly(&v, &[&[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]));
        assert_eq!(dickson(2, 0), poly(&v, &[&[0, 2, 1], &[0, 1, 2]]));
        assert_eq!(dickson(1, 0), poly(&["x1", "u1"], &[&[0, 1]]));
    }

    #[test]
    fn dickson_invariants_are_gl_invariant() {
        let vars = universe(&[4], false);
        let v = |i| Gf2Poly::var(vars.clone(), i);
        let swap = [v(0), v(2), v(1)];
        let shear = [v(0), v(1).add(&v(2)).unwrap(), v(2)];
        for j in 0..2 {
            let d = dickson(2, j);
            assert_eq!(d.substitute(vars.clone(), &swap), d);
            assert_eq!(d.substitute(vars.clone(), &shear), d);
        }
    }

    #[test]
    fn f_classes() {
        assert_eq!(f_class(0), poly(&["x1"], &[&[1]]));
        assert_eq!(f_class(1), poly(&["x1", "u1"], &[&[2, 0], &[1, 1]]));
    }

    #[test]
    fn h_class_of_one_pair_is_z() {
        assert_eq!(h_class(1), poly(&["x1", "u1"], &[&[1, 0], &[0, 1]]));
        let pi = Partition2::new(vec![2]).unwrap();
        assert_eq!(to_d_coords(&h_class(1), &pi), poly(&["z1", "w1"], &[&[1, 0]]));
    }

    #[test]
    fn ebar_agrees_with_kernel_restriction_below_the_top() {
        let pi = Partition2::new(vec![1, 1, 1, 1]).unwrap();
        for i in 2..4 {
            assert_eq!(to_d_coords(&ebar(i, 4), &pi), to_d_coords(&elementary(i, 4), &pi));
        }
    }

    #[test]
    fn signs_of_monomials() {
        let pi = Partition2::new(vec![2]).unwrap();
        let z2w = poly(&["z1", "w1"], &[&[2, 1]]);
        let zw2 = poly(&["z1", "w1"], &[&[1, 2]]);
        let zw = poly(&["z1", "w1"], &[&[1, 1]]);
        assert_eq!(positive_part(&z2w, &pi), z2w);
        assert_eq!(negative_part(&zw2, &pi), zw2);
        assert!(positive_part(&zw, &pi).is_zero() && negative_part(&zw, &pi).is_zero());
    }

    #[test]
    fn restriction_examples() {
        let p2 = Partition2::new(vec![2]).unwrap();
        let p11 = Partition2::new(vec![1, 1]).unwrap();
        let g = ElementB::gamma(1, 1);
        assert_eq!(restrict_b(&g, &p2).unwrap(), poly(&["x1", "u1"], &[&[0, 1]]));
        assert!(restrict_b(&g, &p11).unwrap().is_zero());
        assert_eq!(restrict_b(&ElementB::delta(2), &p2).unwrap(), f_class(1));
        let d1u1 = ElementB::delta(1).odot(&ElementB::unit(1));
        assert_eq!(restrict_b(&d1u1, &p11).unwrap(), poly(&["x1", "x2"], &[&[1, 0], &[0, 1]]));
        assert!(restrict_b(&d1u1, &p2).unwrap().is_zero());
    }

    #[test]
    fn solve_recovers_gamma() {
        let fam = quillen_map_b(&ElementB::gamma(1, 1), 2).unwrap();
        assert_eq!(quillen_solve_b(&fam, 1).unwrap(), ElementB::gamma(1, 1));
        let x = ElementB::gamma(1, 1).add(&ElementB::delta(1).odot(&ElementB::unit(1)));
        let fam = quillen_map_b(&x, 2).unwrap();
        assert_eq!(quillen_solve_b(&fam, 1).unwrap(), x);
    }
}
