//! Linear algebra over GF(2) and polynomial arithmetic with total Steenrod squares.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("entry ({0}, {1}) outside a {2}x{3} matrix")]
    OutOfRange(usize, usize, usize, usize),
    #[error("rhs has length {0}, matrix has {1} rows")]
    RhsLength(usize, usize),
    #[error("polynomials live over different variable lists")]
    UniverseMismatch,
    #[error("malformed triplet text: {0}")]
    Parse(String),
}

/// Dense, row-packed bit matrix. Build it from sparse triplets, eliminate densely.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Each listed position is toggled, so repeated entries cancel.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(rows, cols);
        for (r, c) in entries {
            if r >= rows || c >= cols {
                return Err(Gf2Error::OutOfRange(r, c, rows, cols));
            }
            m.toggle(r, c);
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.data[r * self.words + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn toggle(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] ^= 1 << (c % 64);
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * w);
            (&lo[src * w..src * w + w], &mut hi[..w])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * w);
            (&hi[..w], &mut lo[dst * w..dst * w + w])
        };
        for (d, s) in b.iter_mut().zip(a) {
            *d ^= *s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    /// Nonzero positions in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for (wi, &word) in self.row(r).iter().enumerate() {
                let mut x = word;
                while x != 0 {
                    let b = x.trailing_zeros() as usize;
                    out.push((r, wi * 64 + b));
                    x &= x - 1;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c) in self.triplets() {
            t.set(c, r, true);
        }
        t
    }

    /// Row echelon form in place; returns the pivot column of each pivot row.
    fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(p, r);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        (0..self.rows)
            .map(|r| {
                let mut acc = false;
                for c in 0..self.cols {
                    if x[c] && self.get(r, c) {
                        acc = !acc;
                    }
                }
                acc
            })
            .collect()
    }

    /// Some `x` with `self * x = rhs`, or `None` when `rhs` is outside the column space.
    pub fn solve(&self, rhs: &[bool]) -> Result<Option<Vec<bool>>, Gf2Error> {
        if rhs.len() != self.rows {
            return Err(Gf2Error::RhsLength(rhs.len(), self.rows));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for (r, c) in self.triplets() {
            aug.set(r, c, true);
        }
        for (r, &b) in rhs.iter().enumerate() {
            aug.set(r, self.cols, b);
        }
        let pivots = aug.eliminate();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![false; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Ok(Some(x))
    }

    /// Plain-text sparse export: a `rows cols` header, then one `row col` line per entry.
    pub fn to_triplet_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for (r, c) in self.triplets() {
            s.push_str(&format!("{r} {c}\n"));
        }
        s
    }

    pub fn from_triplet_text(text: &str) -> Result<Self, Gf2Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let pair = |l: &str| -> Result<(usize, usize), Gf2Error> {
            let mut it = l.split_whitespace().map(|t| t.parse::<usize>());
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
                _ => Err(Gf2Error::Parse(l.to_string())),
            }
        };
        let (rows, cols) = pair(lines.next().ok_or(Gf2Error::Parse("empty".into()))?)?;
        let entries = lines.map(pair).collect::<Result<Vec<_>, _>>()?;
        Self::from_triplets(rows, cols, entries)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols).map(|c| if self.get(r, c) { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Incremental echelon basis over dense bit vectors, remembering how each stored row was
/// combined from the inserted vectors. Lets one elimination serve many right-hand sides.
#[derive(Clone, Debug)]
pub struct Echelon {
    words: usize,
    comb_words: usize,
    inserted: usize,
    rows: Vec<EchelonRow>,
}

#[derive(Clone, Debug)]
struct EchelonRow {
    pivot: usize,
    bits: Vec<u64>,
    comb: Vec<u64>,
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl Echelon {
    /// Vectors of length `len`; at most `capacity` insertions.
    pub fn new(len: usize, capacity: usize) -> Self {
        Echelon { words: len.div_ceil(64).max(1), comb_words: capacity.div_ceil(64).max(1), inserted: 0, rows: Vec::new() }
    }

    pub fn bitvec(&self, ones: impl IntoIterator<Item = usize>) -> Vec<u64> {
        let mut v = vec![0u64; self.words];
        for i in ones {
            v[i / 64] ^= 1 << (i % 64);
        }
        v
    }

    fn reduce(&self, bits: &mut [u64], comb: &mut [u64]) {
        for row in &self.rows {
            if bits[row.pivot / 64] >> (row.pivot % 64) & 1 == 1 {
                for w in row.pivot / 64..self.words {
                    bits[w] ^= row.bits[w];
                }
                for (c, r) in comb.iter_mut().zip(&row.comb) {
                    *c ^= r;
                }
            }
        }
    }

    /// Add the next vector; `false` if it was already in the span.
    pub fn insert(&mut self, mut bits: Vec<u64>) -> bool {
        assert_eq!(bits.len(), self.words);
        let idx = self.inserted;
        assert!(idx < self.comb_words * 64, "echelon capacity exceeded");
        self.inserted += 1;
        let mut comb = vec![0u64; self.comb_words];
        comb[idx / 64] |= 1 << (idx % 64);
        self.reduce(&mut bits, &mut comb);
        match lowest_bit(&bits) {
            None => false,
            Some(pivot) => {
                self.rows.push(EchelonRow { pivot, bits, comb });
                true
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Coefficients over the inserted vectors summing to `target`, if it lies in the span.
    pub fn express(&self, target: &[u64]) -> Option<Vec<bool>> {
        let mut bits = target.to_vec();
        let mut comb = vec![0u64; self.comb_words];
        self.reduce(&mut bits, &mut comb);
        if lowest_bit(&bits).is_some() {
            return None;
        }
        Some((0..self.inserted).map(|i| comb[i / 64] >> (i % 64) & 1 == 1).collect())
    }
}

/// Exponent vector packed one byte per variable; at most 16 variables.
pub type Exps = u128;

pub const MAX_VARS: usize = 16;

#[inline]
pub fn exp_of(e: Exps, var: usize) -> u32 {
    ((e >> (8 * var)) & 0xff) as u32
}

#[inline]
pub fn exp_degree(e: Exps) -> u32 {
    e.to_le_bytes().iter().map(|&b| b as u32).sum()
}

#[inline]
pub fn unit_exp(var: usize) -> Exps {
    1u128 << (8 * var)
}

/// Polynomial over GF(2) in degree-one variables. Terms are kept sorted and distinct.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Poly {
    vars: Arc<[String]>,
    terms: Vec<Exps>,
}

fn normalize(mut v: Vec<Exps>) -> Vec<Exps> {
    v.sort_unstable();
    let mut out = Vec::with_capacity(v.len());
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(v[i]);
        }
        i = j;
    }
    out
}

impl Gf2Poly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        assert!(vars.len() <= MAX_VARS, "too many variables");
        Gf2Poly { vars, terms: Vec::new() }
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        let mut p = Self::zero(vars);
        p.terms.push(0);
        p
    }

    pub fn var(vars: Arc<[String]>, i: usize) -> Self {
        assert!(i < vars.len());
        let mut p = Self::zero(vars);
        p.terms.push(unit_exp(i));
        p
    }

    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = Exps>) -> Self {
        let mut p = Self::zero(vars);
        p.terms = normalize(terms.into_iter().collect());
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> &[Exps] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_universe(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|&e| exp_degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|&e| exp_degree(e));
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Gf2Error> {
        if !self.same_universe(other) {
            return Err(Gf2Error::UniverseMismatch);
        }
        let mut v = self.terms.clone();
        v.extend_from_slice(&other.terms);
        Ok(Gf2Poly { vars: self.vars.clone(), terms: normalize(v) })
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert!(self.same_universe(other), "polynomials over different variables");
        let mut v = std::mem::take(&mut self.terms);
        v.extend_from_slice(&other.terms);
        self.terms = normalize(v);
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Gf2Error> {
        if !self.same_universe(other) {
            return Err(Gf2Error::UniverseMismatch);
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &a in &self.terms {
            for &b in &other.terms {
                v.push(a + b);
            }
        }
        Ok(Gf2Poly { vars: self.vars.clone(), terms: normalize(v) })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        for _ in 0..k {
            acc = acc.mul(self).expect("same universe");
        }
        acc
    }

    /// Frobenius: squaring doubles every exponent.
    pub fn square(&self) -> Self {
        Gf2Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|&e| e << 1).collect() }
    }

    /// The same polynomial with every variable index moved up by `offset`, in a wider universe.
    pub fn shifted(&self, vars: Arc<[String]>, offset: usize) -> Self {
        assert!(offset + self.vars.len() <= vars.len());
        let terms = self.terms.iter().map(|&e| e << (8 * offset)).collect();
        Gf2Poly { vars, terms }
    }

    /// Substitute `images[i]` for variable `i`; images share one target universe.
    pub fn substitute(&self, target: Arc<[String]>, images: &[Gf2Poly]) -> Self {
        assert_eq!(images.len(), self.vars.len());
        let mut acc = Self::zero(target.clone());
        let mut cache: Vec<Vec<Gf2Poly>> = vec![Vec::new(); images.len()];
        for &e in &self.terms {
            let mut m = Self::one(target.clone());
            for (i, img) in images.iter().enumerate() {
                let k = exp_of(e, i) as usize;
                if k == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                if powers.is_empty() {
                    powers.push(Self::one(target.clone()));
                }
                while powers.len() <= k {
                    let next = powers.last().unwrap().mul(img).expect("same universe");
                    powers.push(next);
                }
                m = m.mul(&powers[k]).expect("same universe");
            }
            acc.add_assign(&m);
        }
        acc
    }

    /// Total square: the ring endomorphism `v -> v + v^2` on every variable.
    pub fn total_steenrod(&self) -> Self {
        let mut v = Vec::new();
        for &e in &self.terms {
            let deg = exp_degree(e);
            for i in 0..=deg {
                v.extend(sq_monomial(e, self.vars.len(), i));
            }
        }
        Gf2Poly { vars: self.vars.clone(), terms: normalize(v) }
    }

    /// The part of the total square raising degree by `i`.
    pub fn sq_component(&self, i: u32) -> Self {
        let mut v = Vec::new();
        for &e in &self.terms {
            v.extend(sq_monomial(e, self.vars.len(), i));
        }
        Gf2Poly { vars: self.vars.clone(), terms: normalize(v) }
    }
}

/// Terms of `Sq^i` on one monomial: `prod v^{e_v} (1+v)^{e_v}`, choosing `j_v` extra powers
/// with `sum j_v = i`; the coefficient `prod binom(e_v, j_v)` is odd iff each `j_v` is a
/// binary sub-pattern of `e_v`.
fn sq_monomial(e: Exps, nvars: usize, i: u32) -> Vec<Exps> {
    let mut out = Vec::new();
    let exps: Vec<u32> = (0..nvars).map(|k| exp_of(e, k)).collect();
    fn rec(k: usize, left: u32, exps: &[u32], acc: Exps, out: &mut Vec<Exps>) {
        if k == exps.len() {
            if left == 0 {
                out.push(acc);
            }
            return;
        }
        let ek = exps[k];
        let mut j = 0;
        loop {
            if j > left {
                break;
            }
            if j & !ek == 0 {
                rec(k + 1, left - j, exps, acc + ((j as Exps) << (8 * k)), out);
            }
            if j >= ek {
                break;
            }
            j += 1;
        }
    }
    rec(0, i, &exps, e, &mut out);
    out
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for &e in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors = Vec::new();
            for (i, name) in self.vars.iter().enumerate() {
                match exp_of(e, i) {
                    0 => {}
                    1 => factors.push(name.clone()),
                    k => factors.push(format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                write!(f, "1")?;
            } else {
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

pub fn universe(names: &[&str]) -> Arc<[String]> {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small_cases() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::zeros(4, 7).rank(), 0);
        assert_eq!(BitMatrix::from_rows(&[vec![1, 0], vec![1, 0]]).rank(), 1);
    }

    #[test]
    fn solve_small_cases() {
        let id = BitMatrix::identity(3);
        assert_eq!(id.solve(&[true, false, false]).unwrap(), Some(vec![true, false, false]));
        let z = BitMatrix::zeros(2, 2);
        assert_eq!(z.solve(&[true, false]).unwrap(), None);
        let m = BitMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(m.solve(&[true, false]).unwrap(), Some(vec![true, false]));
        assert!(m.solve(&[true]).is_err());
    }

    #[test]
    fn triplets_cancel_and_roundtrip() {
        let m = BitMatrix::from_triplets(2, 3, [(0, 1), (1, 2), (0, 1), (1, 0)]).unwrap();
        assert_eq!(m.triplets(), vec![(1, 0), (1, 2)]);
        let back = BitMatrix::from_triplet_text(&m.to_triplet_text()).unwrap();
        assert_eq!(back, m);
        assert!(BitMatrix::from_triplets(1, 1, [(1, 0)]).is_err());
    }

    #[test]
    fn poly_products() {
        let u = universe(&["x", "y"]);
        let x = Gf2Poly::var(u.clone(), 0);
        let y = Gf2Poly::var(u.clone(), 1);
        assert_eq!(x.mul(&x).unwrap(), Gf2Poly::from_terms(u.clone(), [2]));
        let s = x.add(&y).unwrap();
        assert_eq!(s.mul(&s).unwrap(), x.square().add(&y.square()).unwrap());
        let other = Gf2Poly::var(universe(&["z"]), 0);
        assert_eq!(x.mul(&other), Err(Gf2Error::UniverseMismatch));
    }

    #[test]
    fn total_square_examples() {
        let u = universe(&["x", "y"]);
        let x = Gf2Poly::var(u.clone(), 0);
        let y = Gf2Poly::var(u.clone(), 1);
        assert_eq!(x.total_steenrod(), x.add(&x.square()).unwrap());
        let xy = x.mul(&y).unwrap();
        let expect = Gf2Poly::from_terms(
            u.clone(),
            [unit_exp(0) + unit_exp(1), 2 * unit_exp(0) + unit_exp(1), unit_exp(0) + 2 * unit_exp(1), 2 * unit_exp(0) + 2 * unit_exp(1)],
        );
        assert_eq!(xy.total_steenrod(), expect);
        let one = Gf2Poly::one(u);
        assert_eq!(one.total_steenrod(), one);
    }

    #[test]
    fn echelon_expresses_combinations() {
        let mut e = Echelon::new(130, 4);
        assert!(e.insert(e.bitvec([0, 129])));
        assert!(e.insert(e.bitvec([129, 64])));
        assert!(!e.insert(e.bitvec([0, 64])));
        assert!(e.insert(e.bitvec([3])));
        assert_eq!(e.rank(), 3);
        assert_eq!(e.express(&e.bitvec([0, 64, 3])), Some(vec![true, true, false, true]));
        assert_eq!(e.express(&e.bitvec([5])), None);
    }
}
