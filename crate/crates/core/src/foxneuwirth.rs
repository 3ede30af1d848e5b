//! Fox–Neuwirth cochain complexes of `B_n` and `D_n` with the flag boundary formula,
//! Betti numbers, chain-level coproduct and transfer, and generator cochains.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::coxeter::{conjugate_genset, min_coset_reps, CoxType, GenSet};
use crate::gf2::BitMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `FN_{B_n}`, generators `s_i`.
    B,
    /// `FN_{D_n}`, generators `t_i`.
    D,
    /// The `B_n` complex taken modulo `D_n`; cells carry an `s_0`-coset bit.
    Dprime,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FnError {
    #[error("rank {0} exceeds the cap {1} for this complex")]
    RankCap(usize, usize),
    #[error("degree {0} exceeds the cap {1}")]
    DegreeCap(usize, usize),
    #[error("{0} is not defined on this complex")]
    Unsupported(&'static str),
    #[error("invalid generator index")]
    InvalidGenerator,
}

#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub max_rank_b: usize,
    pub max_rank_d: usize,
    pub max_degree: usize,
}

pub const DEFAULT_CAPS: Caps = Caps { max_rank_b: 6, max_rank_d: 5, max_degree: 12 };

fn check_caps(variant: Variant, n: usize, d: usize) -> Result<(), FnError> {
    let cap = match variant {
        Variant::B => DEFAULT_CAPS.max_rank_b,
        Variant::D | Variant::Dprime => DEFAULT_CAPS.max_rank_d,
    };
    if n > cap {
        return Err(FnError::RankCap(n, cap));
    }
    if d > DEFAULT_CAPS.max_degree {
        return Err(FnError::DegreeCap(d, DEFAULT_CAPS.max_degree));
    }
    Ok(())
}

/// Basis cochain `s_0^eps [a_0 : ... : a_{n-1}]`; `eps` stays 0 outside `Dprime`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub a: Vec<u32>,
    pub eps: u8,
}

impl Cell {
    pub fn new(a: Vec<u32>) -> Self {
        Cell { a, eps: 0 }
    }

    pub fn with_eps(a: Vec<u32>, eps: u8) -> Self {
        Cell { a, eps: eps & 1 }
    }

    pub fn degree(&self) -> usize {
        self.a.iter().map(|&x| x as usize).sum()
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        if self.eps == 1 {
            write!(f, "s0")?;
        }
        write!(f, "[{}]", body.join(":"))
    }
}

/// All `n`-tuples of nonnegative integers summing to `d`, in lexicographic order.
pub fn tuples(n: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            if d == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if n == 1 {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=d {
            cur.push(x);
            rec(n - 1, d - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d as u32, &mut Vec::new(), &mut out);
    out
}

pub fn cells(variant: Variant, n: usize, d: usize) -> Vec<Cell> {
    let ts = tuples(n, d);
    match variant {
        Variant::Dprime => ts
            .into_iter()
            .flat_map(|a| [Cell::with_eps(a.clone(), 0), Cell::with_eps(a, 1)])
            .collect(),
        _ => ts.into_iter().map(Cell::new).collect(),
    }
}

/// `Gamma_r = { i : a_i >= r }` for `r = 1..=max a`.
pub fn flag_of(a: &[u32]) -> Vec<GenSet> {
    let m = a.iter().copied().max().unwrap_or(0);
    (1..=m)
        .map(|r| a.iter().enumerate().filter(|(_, &x)| x >= r).fold(0, |s, (i, _)| s | (1 << i)))
        .collect()
}

pub fn tuple_of(flag: &[GenSet], n: usize) -> Vec<u32> {
    (0..n).map(|i| flag.iter().filter(|&&g| g >> i & 1 == 1).count() as u32).collect()
}

fn cox_type(variant: Variant) -> CoxType {
    match variant {
        Variant::D => CoxType::D,
        _ => CoxType::B,
    }
}

/// Terms `(Gamma', coset flip)` of the boundary of the cell with tuple `a`, with multiplicity.
pub fn boundary_terms(variant: Variant, a: &[u32]) -> Vec<(Vec<u32>, u8)> {
    let n = a.len();
    let ty = cox_type(variant);
    let flag = flag_of(a);
    let mut out = Vec::new();
    for i in 0..flag.len() {
        let gi = flag[i];
        let next = flag.get(i + 1).copied().unwrap_or(0);
        for tau in 0..n {
            if gi >> tau & 1 == 0 {
                continue;
            }
            let sub = gi & !(1 << tau);
            let reps = min_coset_reps(gi, sub, ty, n).expect("parabolic within caps");
            for beta in &reps {
                let Some(cn) = conjugate_genset(beta, next, ty) else { continue };
                if cn & !sub != 0 {
                    continue;
                }
                let mut newflag: Vec<GenSet> = flag[..i].to_vec();
                newflag.push(sub);
                for &g in &flag[i + 1..] {
                    newflag.push(conjugate_genset(beta, g, ty).expect("subset of a conjugable set"));
                }
                let flip = (beta.negatives() % 2) as u8;
                out.push((tuple_of(&newflag, n), flip));
            }
        }
    }
    out
}

type MatrixCache = Mutex<HashMap<(Variant, usize, usize), Arc<BitMatrix>>>;

fn matrix_cache() -> &'static MatrixCache {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Seed the coboundary cache, e.g. from matrices saved by an earlier run. The shape must
/// match the cell counts.
pub fn preload_coboundary(variant: Variant, n: usize, d: usize, m: BitMatrix) -> Result<(), FnError> {
    check_caps(variant, n, d + 1)?;
    if m.rows() != cells(variant, n, d).len() || m.cols() != cells(variant, n, d + 1).len() {
        return Err(FnError::Unsupported("matrix shape does not match the complex"));
    }
    matrix_cache().lock().unwrap().insert((variant, n, d), Arc::new(m));
    Ok(())
}

/// Every coboundary computed so far, in key order.
pub fn cached_coboundaries() -> Vec<((Variant, usize, usize), Arc<BitMatrix>)> {
    let mut v: Vec<_> = matrix_cache().lock().unwrap().iter().map(|(k, m)| (*k, m.clone())).collect();
    v.sort_by_key(|(k, _)| *k);
    v
}

/// Coboundary from degree `d` to `d + 1`: rows index the degree-`d` cells, columns the
/// degree-`d+1` cells, in the order of [`cells`].
pub fn coboundary(variant: Variant, n: usize, d: usize) -> Result<Arc<BitMatrix>, FnError> {
    check_caps(variant, n, d + 1)?;
    if variant == Variant::D && n < 2 {
        return Err(FnError::Unsupported("D_n with n < 2"));
    }
    let cache = matrix_cache();
    if let Some(m) = cache.lock().unwrap().get(&(variant, n, d)) {
        return Ok(m.clone());
    }
    let lower = cells(variant, n, d);
    let upper = cells(variant, n, d + 1);
    let index: HashMap<&Cell, usize> = lower.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut entries = Vec::new();
    let mut col = 0;
    while col < upper.len() {
        let a = &upper[col].a;
        let terms = boundary_terms(variant, a);
        let eps_list: &[u8] = if variant == Variant::Dprime { &[0, 1] } else { &[0] };
        for (k, &eps) in eps_list.iter().enumerate() {
            for (t, flip) in &terms {
                let target = Cell::with_eps(t.clone(), if variant == Variant::Dprime { eps ^ flip } else { 0 });
                entries.push((index[&target], col + k));
            }
        }
        col += eps_list.len();
    }
    let m = Arc::new(BitMatrix::from_triplets(lower.len(), upper.len(), entries).expect("indices in range"));
    cache.lock().unwrap().insert((variant, n, d), m.clone());
    Ok(m)
}

/// `dim H^d`: kernel of the outgoing coboundary minus the rank of the incoming one.
pub fn betti(variant: Variant, n: usize, d: usize) -> Result<usize, FnError> {
    let out = coboundary(variant, n, d)?;
    let ker = out.rows() - out.rank();
    let im = if d == 0 { 0 } else { coboundary(variant, n, d - 1)?.rank() };
    Ok(ker - im)
}

/// A homogeneous cochain: a set of basis cells with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub variant: Variant,
    pub n: usize,
    pub cells: BTreeSet<Cell>,
}

impl Cochain {
    pub fn zero(variant: Variant, n: usize) -> Self {
        Cochain { variant, n, cells: BTreeSet::new() }
    }

    pub fn single(variant: Variant, cell: Cell) -> Self {
        let n = cell.n();
        Cochain { variant, n, cells: BTreeSet::from([cell]) }
    }

    pub fn toggle(&mut self, c: Cell) {
        if !self.cells.remove(&c) {
            self.cells.insert(c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for c in &other.cells {
            out.toggle(c.clone());
        }
        out
    }

    pub fn degree(&self) -> Option<usize> {
        self.cells.iter().next().map(|c| c.degree())
    }

    pub fn is_zero(&self) -> bool {
        self.cells.is_empty()
    }

    fn vector(&self, basis: &[Cell]) -> Vec<bool> {
        basis.iter().map(|c| self.cells.contains(c)).collect()
    }
}

pub fn apply_coboundary(x: &Cochain) -> Result<Cochain, FnError> {
    let Some(d) = x.degree() else { return Ok(x.clone()) };
    let m = coboundary(x.variant, x.n, d)?;
    let lower = cells(x.variant, x.n, d);
    let upper = cells(x.variant, x.n, d + 1);
    let v = x.vector(&lower);
    let mut out = Cochain::zero(x.variant, x.n);
    for (r, c) in m.triplets() {
        if v[r] {
            out.toggle(upper[c].clone());
        }
    }
    Ok(out)
}

pub fn is_cocycle(x: &Cochain) -> Result<bool, FnError> {
    Ok(apply_coboundary(x)?.is_zero())
}

/// Whether `x - y` is a coboundary.
pub fn same_class(x: &Cochain, y: &Cochain) -> Result<bool, FnError> {
    let diff = x.add(y);
    let Some(d) = diff.degree() else { return Ok(true) };
    if d == 0 {
        return Ok(false);
    }
    let m = coboundary(diff.variant, diff.n, d - 1)?;
    let v = diff.vector(&cells(diff.variant, diff.n, d));
    Ok(m.transpose().solve(&v).expect("sizes agree").is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KBlock {
    pub start: usize,
    pub end: usize,
    pub k: u32,
    pub principal: bool,
}

/// Maximal runs with every entry `> k` (tuple padded with zeros on both sides). A block is
/// principal when the minimum of the entries before it equals `k`, reading an empty
/// prefix as minimum 0.
pub fn kblocks(a: &[u32], k: u32) -> Vec<KBlock> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < a.len() {
        if a[i] > k {
            let start = i;
            while i < a.len() && a[i] > k {
                i += 1;
            }
            let prefix_min = a[..start].iter().copied().min().unwrap_or(0);
            out.push(KBlock { start, end: i - 1, k, principal: prefix_min == k });
        } else {
            i += 1;
        }
    }
    out
}

pub fn principal_kblocks(a: &[u32], k: u32) -> Vec<KBlock> {
    kblocks(a, k).into_iter().filter(|b| b.principal).collect()
}

/// Chain-level coproduct. A term `a (x) b` of `x` comes from a splitting of the points of
/// `x` into a group `S` inducing `a` and its complement inducing `b`, with the degree
/// preserved, where a point of the second group may precede a point of the first only if
/// it lies strictly deeper towards the origin. On `FN'` the coset bits of the two factors
/// sum to that of `x`.
pub fn delta_chain(variant: Variant, x: &Cell) -> Result<Vec<(Cell, Cell)>, FnError> {
    if variant == Variant::D {
        return Err(FnError::Unsupported("coproduct on FN_D"));
    }
    let c = &x.a;
    let total = c.len();
    let deg = x.degree();
    let depth0: Vec<u32> = (1..=total).map(|p| *c[..p].iter().min().unwrap()).collect();
    let mut out = Vec::new();
    for k in 0..=total {
        for s in combinations(total, k) {
            let comp: Vec<usize> = (1..=total).filter(|p| !s.contains(p)).collect();
            if !comp.iter().all(|&q| s.iter().all(|&p| p < q || depth0[q - 1] > depth0[p - 1])) {
                continue;
            }
            let (a, b) = (induced(c, &s), induced(c, &comp));
            if a.iter().chain(&b).map(|&v| v as usize).sum::<usize>() != deg {
                continue;
            }
            match variant {
                Variant::B => out.push((Cell::new(a), Cell::new(b))),
                _ => {
                    let e = x.eps;
                    out.push((Cell::with_eps(a.clone(), 0), Cell::with_eps(b.clone(), e)));
                    out.push((Cell::with_eps(a, 1), Cell::with_eps(b, e ^ 1)));
                }
            }
        }
    }
    Ok(out)
}

/// The prefix/suffix splittings `a_k <= min(a_0..a_{k-1})` alone: the terms of
/// [`delta_chain`] in which every point of the first factor precedes the second.
pub fn delta_chain_prefix(x: &Cell) -> Vec<(Cell, Cell)> {
    let a = &x.a;
    let n = a.len();
    (0..=n)
        .filter(|&k| k == 0 || k == n || a[k] <= *a[..k].iter().min().unwrap())
        .map(|k| (Cell::new(a[..k].to_vec()), Cell::new(a[k..].to_vec())))
        .collect()
}

/// Agreement depths of the sub-configuration on the points `sel` (1-based, increasing),
/// where `c[0]` is the depth between the origin and point 1 and `c[i]` that between
/// points `i` and `i + 1`.
fn induced(c: &[u32], sel: &[usize]) -> Vec<u32> {
    let mut out = Vec::with_capacity(sel.len());
    let mut prev = 0;
    for &p in sel {
        out.push(*c[prev..p].iter().min().unwrap());
        prev = p;
    }
    out
}

/// Chain-level transfer: the coefficient of `c` counts the ways to split its points into
/// two groups inducing `x` and `y`. Equivalently, principal blocks of `c` are shuffles of
/// those of `x` and `y`, with the cluster at the origin shared between the two factors.
pub fn odot_chain(variant: Variant, x: &Cell, y: &Cell) -> Result<BTreeSet<Cell>, FnError> {
    if variant == Variant::D {
        return Err(FnError::Unsupported("transfer on FN_D"));
    }
    let (n, m) = (x.n(), y.n());
    let total = n + m;
    let deg = x.degree() + y.degree();
    let eps = (x.eps ^ y.eps) & if variant == Variant::Dprime { 1 } else { 0 };
    let subsets = combinations(total, n);
    let mut out = BTreeSet::new();
    for c in tuples(total, deg) {
        let mut count = 0usize;
        for s in &subsets {
            let comp: Vec<usize> = (1..=total).filter(|p| !s.contains(p)).collect();
            if induced(&c, s) == x.a && induced(&c, &comp) == y.a {
                count += 1;
            }
        }
        if count % 2 == 1 {
            out.insert(Cell::with_eps(c, eps));
        }
    }
    Ok(out)
}

fn combinations(total: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, total: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in start..=total {
            cur.push(p);
            rec(p + 1, total, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, total, k, &mut Vec::new(), &mut out);
    out
}

/// Comparison map `FN_{D_n} -> FN'_{D_n}`, split by the order of `a_0` and `a_1`.
pub fn phi(x: &Cell) -> Vec<Cell> {
    let a = &x.a;
    if a.len() < 2 {
        return vec![Cell::with_eps(a.clone(), 0)];
    }
    let mut swapped = a.clone();
    swapped.swap(0, 1);
    match a[0].cmp(&a[1]) {
        std::cmp::Ordering::Less => vec![Cell::with_eps(a.clone(), 0)],
        std::cmp::Ordering::Equal => vec![Cell::with_eps(a.clone(), 0), Cell::with_eps(swapped, 1)],
        std::cmp::Ordering::Greater => vec![Cell::with_eps(swapped, 1)],
    }
}

pub fn phi_cochain(x: &Cochain) -> Cochain {
    let mut out = Cochain::zero(Variant::Dprime, x.n);
    for c in &x.cells {
        for t in phi(c) {
            out.toggle(t);
        }
    }
    out
}

/// Conjugation by `s_0` on `FN_D`: swap `a_0` and `a_1`.
pub fn iota_fn(x: &Cell) -> Cell {
    let mut a = x.a.clone();
    if a.len() >= 2 {
        a.swap(0, 1);
    }
    Cell::new(a)
}

/// Conjugation by `s_0` on `FN'_D`: flip the coset bit.
pub fn iota_prime(x: &Cell) -> Cell {
    Cell::with_eps(x.a.clone(), x.eps ^ 1)
}

/// Restriction `FN_B -> FN'_D`: a cell goes to the sum of its two cosets.
pub fn rho_chain(x: &Cochain) -> Cochain {
    let mut out = Cochain::zero(Variant::Dprime, x.n);
    for c in &x.cells {
        out.toggle(Cell::with_eps(c.a.clone(), 0));
        out.toggle(Cell::with_eps(c.a.clone(), 1));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FnGenerator {
    /// `delta_n = [1 : ... : 1]`.
    Delta(usize),
    /// `gamma_{k,m}`: a leading 0, then `m` runs of `2^k - 1` ones separated by zeros.
    Gamma(u32, usize),
    /// `1_n = [0 : ... : 0]`.
    Unit(usize),
    /// `g^+_{k,m}` in `FN_D`, same pattern as `gamma_{k,m}`.
    GPlus(u32, usize),
    /// `g^-_{k,m}` in `FN_D`: `a_0` and `a_1` of `g^+` swapped.
    GMinus(u32, usize),
}

fn gamma_pattern(k: u32, m: usize) -> Vec<u32> {
    let run = (1usize << k) - 1;
    let mut a = Vec::with_capacity(m << k);
    for j in 0..m {
        a.push(0);
        a.extend(std::iter::repeat(1).take(run));
        let _ = j;
    }
    a
}

pub fn generator_cochain(g: FnGenerator) -> Result<Cochain, FnError> {
    let (variant, a) = match g {
        FnGenerator::Delta(n) => (Variant::B, vec![1; n]),
        FnGenerator::Unit(n) => (Variant::B, vec![0; n]),
        FnGenerator::Gamma(k, m) if k >= 1 => (Variant::B, gamma_pattern(k, m)),
        FnGenerator::GPlus(k, m) if k >= 1 && m >= 1 => (Variant::D, gamma_pattern(k, m)),
        FnGenerator::GMinus(k, m) if k >= 1 && m >= 1 => {
            let mut a = gamma_pattern(k, m);
            a.swap(0, 1);
            (Variant::D, a)
        }
        _ => return Err(FnError::InvalidGenerator),
    };
    Ok(Cochain::single(variant, Cell::new(a)))
}

/// Cochain of the tensor product of two complexes, as a set of cell pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCochain {
    pub variant: Variant,
    pub n1: usize,
    pub n2: usize,
    pub pairs: BTreeSet<(Cell, Cell)>,
}

impl TensorCochain {
    pub fn zero(variant: Variant, n1: usize, n2: usize) -> Self {
        TensorCochain { variant, n1, n2, pairs: BTreeSet::new() }
    }

    pub fn toggle(&mut self, p: (Cell, Cell)) {
        if !self.pairs.remove(&p) {
            self.pairs.insert(p);
        }
    }

    pub fn add_product(&mut self, x: &Cochain, y: &Cochain) {
        for a in &x.cells {
            for b in &y.cells {
                self.toggle((a.clone(), b.clone()));
            }
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.pairs.iter().next().map(|(a, b)| a.degree() + b.degree())
    }
}

fn tensor_basis(variant: Variant, n1: usize, n2: usize, d: usize) -> Vec<(Cell, Cell)> {
    let mut out = Vec::new();
    for d1 in 0..=d {
        for a in cells(variant, n1, d1) {
            for b in cells(variant, n2, d - d1) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

fn cell_coboundary(variant: Variant, c: &Cell) -> Result<Cochain, FnError> {
    if c.n() == 0 {
        return Ok(Cochain::zero(variant, 0));
    }
    apply_coboundary(&Cochain::single(variant, c.clone()))
}

/// Whether two tensor cochains differ by a coboundary of the tensor complex.
pub fn same_class_tensor(x: &TensorCochain, y: &TensorCochain) -> Result<bool, FnError> {
    let mut diff = x.clone();
    for p in &y.pairs {
        diff.toggle(p.clone());
    }
    let Some(d) = diff.degree() else { return Ok(true) };
    if d == 0 {
        return Ok(false);
    }
    let (v, n1, n2) = (diff.variant, diff.n1, diff.n2);
    let lower = tensor_basis(v, n1, n2, d - 1);
    let upper = tensor_basis(v, n1, n2, d);
    let index: HashMap<&(Cell, Cell), usize> = upper.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut entries = Vec::new();
    for (j, (a, b)) in lower.iter().enumerate() {
        for da in cell_coboundary(v, a)?.cells {
            entries.push((index[&(da, b.clone())], j));
        }
        for db in cell_coboundary(v, b)?.cells {
            entries.push((index[&(a.clone(), db)], j));
        }
    }
    let m = BitMatrix::from_triplets(upper.len(), lower.len(), entries).expect("indices in range");
    let rhs: Vec<bool> = upper.iter().map(|p| diff.pairs.contains(p)).collect();
    Ok(m.solve(&rhs).expect("sizes agree").is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_enumeration() {
        let c: Vec<Vec<u32>> = cells(Variant::B, 2, 2).into_iter().map(|c| c.a).collect();
        assert_eq!(c, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(cells(Variant::B, 1, 5).len(), 1);
        assert_eq!(cells(Variant::B, 3, 1).len(), 3);
        assert_eq!(cells(Variant::Dprime, 2, 1).len(), 4);
    }

    #[test]
    fn small_betti_numbers() {
        for d in 0..6 {
            assert!(coboundary(Variant::B, 1, d).unwrap().triplets().is_empty());
            assert_eq!(betti(Variant::B, 1, d).unwrap(), 1);
        }
        let m = coboundary(Variant::B, 2, 0).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!(betti(Variant::B, 2, 0).unwrap(), 1);
        assert_eq!(betti(Variant::B, 2, 1).unwrap(), 2);
        assert_eq!(betti(Variant::B, 2, 2).unwrap(), 3);
        assert_eq!(betti(Variant::Dprime, 2, 0).unwrap(), 1);
        assert_eq!(betti(Variant::Dprime, 2, 1).unwrap(), 2);
        assert_eq!(betti(Variant::Dprime, 3, 1).unwrap(), 1);
    }

    #[test]
    fn coboundary_squares_to_zero() {
        for variant in [Variant::B, Variant::D, Variant::Dprime] {
            for n in 2..=4 {
                for d in 0..5 {
                    let a = coboundary(variant, n, d).unwrap();
                    let b = coboundary(variant, n, d + 1).unwrap();
                    for (r, c) in a.triplets() {
                        let _ = (r, c);
                    }
                    let mut prod = vec![vec![false; b.cols()]; a.rows()];
                    for (r, c) in a.triplets() {
                        for c2 in 0..b.cols() {
                            if b.get(c, c2) {
                                prod[r][c2] ^= true;
                            }
                        }
                    }
                    assert!(prod.iter().flatten().all(|&x| !x), "{variant:?} n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn d_and_dprime_agree() {
        for n in 2..=4 {
            for d in 0..=5 {
                assert_eq!(betti(Variant::D, n, d).unwrap(), betti(Variant::Dprime, n, d).unwrap(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn principal_block_example() {
        let a = [3, 2, 3, 1, 2];
        let all = kblocks(&a, 1);
        assert_eq!(all.len(), 2);
        assert_eq!((all[0].start, all[0].end), (0, 2));
        let p = principal_kblocks(&a, 1);
        assert_eq!(p, vec![KBlock { start: 4, end: 4, k: 1, principal: true }]);
        assert_eq!(principal_kblocks(&[1, 1, 1], 0).len(), 1);
        assert!(principal_kblocks(&[0], 0).is_empty());
    }

    #[test]
    fn coproduct_examples() {
        let show = |t: Vec<(Cell, Cell)>| -> BTreeSet<(Vec<u32>, Vec<u32>)> { t.into_iter().map(|(a, b)| (a.a, b.a)).collect() };
        let x = Cell::new(vec![1, 0, 1]);
        let prefix = BTreeSet::from([(vec![], vec![1, 0, 1]), (vec![1], vec![0, 1]), (vec![1, 0, 1], vec![])]);
        assert_eq!(show(delta_chain_prefix(&x)), prefix);
        let mut full = prefix.clone();
        full.insert((vec![0, 1], vec![1]));
        assert_eq!(show(delta_chain(Variant::B, &x).unwrap()), full);
        assert_eq!(
            show(delta_chain(Variant::B, &Cell::new(vec![1, 0])).unwrap()),
            BTreeSet::from([(vec![], vec![1, 0]), (vec![1], vec![0]), (vec![0], vec![1]), (vec![1, 0], vec![])])
        );
        let t = delta_chain(Variant::B, &Cell::new(vec![4])).unwrap();
        assert_eq!(t.len(), 2);
        let t = delta_chain(Variant::Dprime, &Cell::with_eps(vec![2], 1)).unwrap();
        assert!(t.contains(&(Cell::with_eps(vec![], 0), Cell::with_eps(vec![2], 1))));
        assert!(t.contains(&(Cell::with_eps(vec![], 1), Cell::with_eps(vec![2], 0))));
    }

    #[test]
    fn transfer_examples() {
        let one = |a: Vec<u32>| Cell::new(a);
        assert!(odot_chain(Variant::B, &one(vec![1]), &one(vec![1])).unwrap().is_empty());
        assert_eq!(
            odot_chain(Variant::B, &one(vec![1]), &one(vec![0])).unwrap(),
            BTreeSet::from([one(vec![1, 0])])
        );
        assert!(odot_chain(Variant::B, &one(vec![0]), &one(vec![0])).unwrap().is_empty());
        assert_eq!(
            odot_chain(Variant::B, &one(vec![1]), &one(vec![1, 1])).unwrap(),
            BTreeSet::from([one(vec![1, 1, 1])])
        );
        let s = odot_chain(Variant::Dprime, &Cell::with_eps(vec![0, 1], 1), &Cell::with_eps(vec![0, 1], 1)).unwrap();
        assert!(s.iter().all(|c| c.eps == 0));
    }

    #[test]
    fn phi_and_involutions() {
        assert_eq!(phi(&Cell::new(vec![0, 1, 0])), vec![Cell::with_eps(vec![0, 1, 0], 0)]);
        assert_eq!(phi(&Cell::new(vec![1, 1])), vec![Cell::with_eps(vec![1, 1], 0), Cell::with_eps(vec![1, 1], 1)]);
        for a in tuples(3, 3) {
            let c = Cell::new(a);
            assert_eq!(iota_fn(&iota_fn(&c)), c);
            let lhs: BTreeSet<Cell> = phi(&iota_fn(&c)).into_iter().collect();
            let rhs: BTreeSet<Cell> = phi(&c).iter().map(iota_prime).collect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn generator_patterns() {
        let a = |g| generator_cochain(g).unwrap().cells.into_iter().next().unwrap().a;
        assert_eq!(a(FnGenerator::Delta(3)), vec![1, 1, 1]);
        assert_eq!(a(FnGenerator::Gamma(1, 2)), vec![0, 1, 0, 1]);
        assert_eq!(a(FnGenerator::Gamma(2, 1)), vec![0, 1, 1, 1]);
        assert_eq!(a(FnGenerator::GPlus(1, 1)), vec![0, 1]);
        assert_eq!(a(FnGenerator::GMinus(1, 1)), vec![1, 0]);
        assert_eq!(a(FnGenerator::GMinus(1, 2)), vec![1, 0, 0, 1]);
        assert!(generator_cochain(FnGenerator::Gamma(0, 1)).is_err());
    }
}
