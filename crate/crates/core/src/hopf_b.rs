//! The Hopf ring `A_B`: gathered blocks, Hopf monomials (skyline diagrams), transfer,
//! coproduct and cup product, the additive basis, and skyline rendering.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// `delta_M^{t_0} * prod_k gamma_{k, M/2^k}^{t_k}`; the empty profile is the unit `1_M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    pub width: u32,
    profile: Vec<u32>,
}

impl Block {
    /// `None` when the profile's top index does not divide the width.
    pub fn new(width: u32, mut profile: Vec<u32>) -> Option<Block> {
        while profile.last() == Some(&0) {
            profile.pop();
        }
        let b = Block { width, profile };
        (width > 0 && width % (1 << b.scale()) == 0).then_some(b)
    }

    pub fn unit(width: u32) -> Block {
        Block { width, profile: vec![] }
    }

    pub fn delta(n: u32) -> Block {
        Block { width: n, profile: vec![1] }
    }

    /// `gamma_{k,m}`, of width `m 2^k`.
    pub fn gamma(k: u32, m: u32) -> Block {
        let mut profile = vec![0; k as usize + 1];
        profile[k as usize] = 1;
        Block { width: m << k, profile }
    }

    pub fn profile(&self) -> &[u32] {
        &self.profile
    }

    /// Profile entry `t_k`, zero past the end.
    pub fn t(&self, k: usize) -> u32 {
        self.profile.get(k).copied().unwrap_or(0)
    }

    /// Largest `k` with `t_k != 0` among the gamma indices; 0 for pure-delta and unit blocks.
    pub fn scale(&self) -> u32 {
        self.profile.len().saturating_sub(1) as u32
    }

    pub fn degree(&self) -> u32 {
        let m = self.width;
        self.profile
            .iter()
            .enumerate()
            .map(|(k, &t)| if k == 0 { t * m } else { t * (m - (m >> k)) })
            .sum()
    }

    pub fn is_unit(&self) -> bool {
        self.profile.is_empty()
    }

    pub fn is_pure_delta(&self) -> bool {
        self.profile.len() == 1
    }

    pub fn has_gamma(&self) -> bool {
        self.profile.len() >= 2
    }

    pub fn with_width(&self, width: u32) -> Block {
        Block { width, profile: self.profile.clone() }
    }

    /// Cup product of two blocks of equal width: profiles add.
    pub fn stack(&self, other: &Block) -> Block {
        let len = self.profile.len().max(other.profile.len());
        let profile = (0..len).map(|k| self.t(k) + other.t(k)).collect();
        Block::new(self.width, profile).expect("same width, both divisible")
    }
}

impl Ord for Block {
    fn cmp(&self, other: &Self) -> Ordering {
        other.width.cmp(&self.width).then_with(|| self.profile.cmp(&other.profile))
    }
}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "u{}", self.width);
        }
        let mut parts = Vec::new();
        for (k, &t) in self.profile.iter().enumerate() {
            if t == 0 {
                continue;
            }
            let atom = if k == 0 { format!("d{}", self.width) } else { format!("g{}_{}", k, self.width >> k) };
            parts.push(if t == 1 { atom } else { format!("{atom}^{t}") });
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// Transfer product of blocks with pairwise distinct profiles, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    blocks: Vec<Block>,
}

/// Whether `binom(a + b, a)` is odd.
pub fn binom_odd(a: u32, b: u32) -> bool {
    a & b == 0
}

impl Monomial {
    /// The empty monomial `1_0`, unit for the transfer product.
    pub fn one() -> Monomial {
        Monomial { blocks: vec![] }
    }

    pub fn block(b: Block) -> Monomial {
        Monomial { blocks: vec![b] }
    }

    /// Transfer product of the given blocks, merging equal profiles; `None` if it vanishes.
    pub fn from_blocks(blocks: impl IntoIterator<Item = Block>) -> Option<Monomial> {
        let mut by_profile: BTreeMap<Vec<u32>, Block> = BTreeMap::new();
        for b in blocks {
            match by_profile.remove(&b.profile) {
                None => {
                    by_profile.insert(b.profile.clone(), b);
                }
                Some(prev) => {
                    let merged = merge_blocks(&prev, &b)?;
                    by_profile.insert(merged.profile.clone(), merged);
                }
            }
        }
        let mut blocks: Vec<Block> = by_profile.into_values().collect();
        blocks.sort();
        Some(Monomial { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn component(&self) -> u32 {
        self.blocks.iter().map(|b| b.width).sum()
    }

    pub fn degree(&self) -> u32 {
        self.blocks.iter().map(|b| b.degree()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn odot(&self, other: &Monomial) -> Option<Monomial> {
        Monomial::from_blocks(self.blocks.iter().chain(&other.blocks).cloned())
    }

    /// Coproduct, as a list of pairs with multiplicity already reduced mod 2.
    pub fn coproduct(&self) -> Vec<(Monomial, Monomial)> {
        coproduct_cached(self).as_ref().clone()
    }

    /// Remove one block (by index) and return the rest.
    pub fn without(&self, i: usize) -> Monomial {
        let mut blocks = self.blocks.clone();
        blocks.remove(i);
        Monomial { blocks }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "u0");
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| if b.profile.iter().filter(|&&t| t > 0).count() > 1 { format!("({b})") } else { b.to_string() })
            .collect();
        write!(f, "{}", parts.join(" o "))
    }
}

/// Transfer product of two equal-profile blocks: `binom(m + m', m)` in units of `2^scale`.
pub fn merge_blocks(b: &Block, c: &Block) -> Option<Block> {
    assert_eq!(b.profile, c.profile, "merge of blocks with different profiles");
    let s = b.scale();
    binom_odd(b.width >> s, c.width >> s).then(|| b.with_width(b.width + c.width))
}

/// Block coproduct: all splittings of the width into multiples of `2^scale`.
pub fn block_coproduct(b: &Block) -> Vec<(Monomial, Monomial)> {
    let step = 1u32 << b.scale();
    let piece = |w: u32| if w == 0 { Monomial::one() } else { Monomial::block(b.with_width(w)) };
    (0..=b.width / step).map(|j| (piece(j * step), piece(b.width - j * step))).collect()
}

type PairList = Arc<Vec<(Monomial, Monomial)>>;

fn coproduct_cached(m: &Monomial) -> PairList {
    static CACHE: OnceLock<Mutex<HashMap<Monomial, PairList>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(m) {
        return v.clone();
    }
    let mut acc: BTreeSet<(Monomial, Monomial)> = BTreeSet::from([(Monomial::one(), Monomial::one())]);
    for b in &m.blocks {
        let mut next = BTreeSet::new();
        for (x, y) in &acc {
            for (p, q) in block_coproduct(b) {
                if let (Some(l), Some(r)) = (x.odot(&p), y.odot(&q)) {
                    toggle(&mut next, (l, r));
                }
            }
        }
        acc = next;
    }
    let v: PairList = Arc::new(acc.into_iter().collect());
    cache.lock().unwrap().insert(m.clone(), v.clone());
    v
}

pub(crate) fn toggle<T: Ord>(s: &mut BTreeSet<T>, x: T) {
    if !s.remove(&x) {
        s.insert(x);
    }
}

/// Cup product of two monomials of the same component, by Hopf ring distributivity.
pub fn cup_monomials(x: &Monomial, y: &Monomial) -> ElementB {
    if x.component() != y.component() {
        return ElementB::zero();
    }
    static CACHE: OnceLock<Mutex<HashMap<(Monomial, Monomial), ElementB>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = if x <= y { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) };
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let out = cup_uncached(&key.0, &key.1);
    cache.lock().unwrap().insert(key, out.clone());
    out
}

fn cup_uncached(x: &Monomial, y: &Monomial) -> ElementB {
    if x.is_one() {
        return ElementB::from(y.clone());
    }
    let (x, y) = if x.blocks.len() >= y.blocks.len() { (x, y) } else { (y, x) };
    if x.blocks.len() == 1 {
        return ElementB::from(Monomial::block(x.blocks[0].stack(&y.blocks[0])));
    }
    // x = c (.) rest; y . x = sum (y' . c) (.) (y'' . rest) over the coproduct of y
    let c = Monomial::block(x.blocks[0].clone());
    let rest = x.without(0);
    let w = c.component();
    let mut out = ElementB::zero();
    for (y1, y2) in y.coproduct() {
        if y1.component() != w {
            continue;
        }
        let left = cup_monomials(&y1, &c);
        let right = cup_monomials(&y2, &rest);
        out.add_assign(&left.odot(&right));
    }
    out
}

/// A finite GF(2) combination of Hopf monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElementB {
    terms: BTreeSet<Monomial>,
}

impl From<Monomial> for ElementB {
    fn from(m: Monomial) -> Self {
        ElementB { terms: BTreeSet::from([m]) }
    }
}

impl From<Block> for ElementB {
    fn from(b: Block) -> Self {
        ElementB::from(Monomial::block(b))
    }
}

impl ElementB {
    pub fn zero() -> Self {
        ElementB::default()
    }

    /// The unit `1_0`.
    pub fn one() -> Self {
        ElementB::from(Monomial::one())
    }

    pub fn delta(n: u32) -> Self {
        ElementB::from(Block::delta(n))
    }

    pub fn gamma(k: u32, m: u32) -> Self {
        ElementB::from(Block::gamma(k, m))
    }

    pub fn unit(n: u32) -> Self {
        if n == 0 {
            ElementB::one()
        } else {
            ElementB::from(Block::unit(n))
        }
    }

    pub fn from_monomials(ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut e = ElementB::zero();
        for m in ms {
            e.toggle(m);
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, m: Monomial) {
        toggle(&mut self.terms, m);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    pub fn odot(&self, other: &Self) -> Self {
        let mut out = ElementB::zero();
        for a in &self.terms {
            for b in &other.terms {
                if let Some(m) = a.odot(b) {
                    out.toggle(m);
                }
            }
        }
        out
    }

    pub fn cup(&self, other: &Self) -> Self {
        let mut out = ElementB::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.add_assign(&cup_monomials(a, b));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let comps: BTreeSet<u32> = self.terms.iter().map(|m| m.component()).collect();
        if e == 0 {
            // cup unit of each component present
            let mut out = ElementB::zero();
            for c in comps {
                out.toggle(if c == 0 { Monomial::one() } else { Monomial::block(Block::unit(c)) });
            }
            return out;
        }
        let mut out = self.clone();
        for _ in 1..e {
            out = out.cup(self);
        }
        out
    }

    pub fn coproduct(&self) -> TensorB {
        let mut out = TensorB::zero();
        for m in &self.terms {
            for (a, b) in m.coproduct() {
                out.toggle((a, b));
            }
        }
        out
    }

    /// Homogeneous part of the given component and degree.
    pub fn part(&self, n: u32, d: u32) -> Self {
        ElementB { terms: self.terms.iter().filter(|m| m.component() == n && m.degree() == d).cloned().collect() }
    }

    pub fn component_part(&self, n: u32) -> Self {
        ElementB { terms: self.terms.iter().filter(|m| m.component() == n).cloned().collect() }
    }
}

impl fmt::Display for ElementB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of `A_B (x) A_B`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorB {
    terms: BTreeSet<(Monomial, Monomial)>,
}

impl TensorB {
    pub fn zero() -> Self {
        TensorB::default()
    }

    pub fn toggle(&mut self, p: (Monomial, Monomial)) {
        toggle(&mut self.terms, p);
    }

    pub fn terms(&self) -> impl Iterator<Item = &(Monomial, Monomial)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for p in &other.terms {
            out.toggle(p.clone());
        }
        out
    }

    pub fn from_product(x: &ElementB, y: &ElementB) -> Self {
        let mut out = TensorB::zero();
        for a in x.terms() {
            for b in y.terms() {
                out.toggle((a.clone(), b.clone()));
            }
        }
        out
    }

    /// Apply a bilinear operation factorwise: `(a (x) b) * (c (x) d) = (a * c) (x) (b * d)`.
    pub fn combine(&self, other: &Self, op: impl Fn(&ElementB, &ElementB) -> ElementB) -> Self {
        let mut out = TensorB::zero();
        for (a, b) in &self.terms {
            for (c, d) in &other.terms {
                let l = op(&ElementB::from(a.clone()), &ElementB::from(c.clone()));
                if l.is_zero() {
                    continue;
                }
                let r = op(&ElementB::from(b.clone()), &ElementB::from(d.clone()));
                out = out.add(&TensorB::from_product(&l, &r));
            }
        }
        out
    }

    /// The part with left component `k`.
    pub fn split(&self, k: u32) -> Self {
        TensorB { terms: self.terms.iter().filter(|(a, _)| a.component() == k).cloned().collect() }
    }
}

impl fmt::Display for TensorB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(a, b)| format!("{a} # {b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Every valid block of width `w` and degree at most `dmax`.
pub fn blocks_of_width(w: u32, dmax: u32) -> Vec<Block> {
    let mut out = Vec::new();
    let max_k = w.trailing_zeros();
    // box degrees per index: t_0 -> w, t_k -> w - w/2^k
    let box_deg: Vec<u32> = (0..=max_k).map(|k| if k == 0 { w } else { w - (w >> k) }).collect();
    fn rec(k: usize, box_deg: &[u32], left: u32, cur: &mut Vec<u32>, w: u32, out: &mut Vec<Block>) {
        if k == box_deg.len() {
            out.push(Block::new(w, cur.clone()).expect("scale bounded by trailing zeros"));
            return;
        }
        let mut t = 0;
        loop {
            cur.push(t);
            rec(k + 1, box_deg, left - t * box_deg[k], cur, w, out);
            cur.pop();
            t += 1;
            if box_deg[k] == 0 || t * box_deg[k] > left {
                break;
            }
        }
    }
    rec(0, &box_deg, dmax, &mut Vec::new(), w, &mut out);
    out.sort();
    out.dedup();
    out
}

/// The additive basis: transfer products of blocks with distinct profiles, in canonical order.
pub fn basis(n: u32, d: u32) -> Vec<Monomial> {
    let mut pool: Vec<Block> = (1..=n).flat_map(|w| blocks_of_width(w, d)).collect();
    pool.sort();
    let mut out = Vec::new();
    fn rec(pool: &[Block], start: usize, n: u32, d: u32, cur: &mut Vec<Block>, out: &mut Vec<Monomial>) {
        if n == 0 && d == 0 {
            out.push(Monomial { blocks: cur.clone() });
            return;
        }
        for i in start..pool.len() {
            let b = &pool[i];
            if b.width > n || b.degree() > d || cur.iter().any(|c| c.profile == b.profile) {
                continue;
            }
            cur.push(b.clone());
            rec(pool, i + 1, n - b.width, d - b.degree(), cur, out);
            cur.pop();
        }
    }
    rec(&pool, 0, n, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn poincare(n: u32, d_max: u32) -> Vec<usize> {
    (0..=d_max).map(|d| basis(n, d).len()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Boxes of a block from the ground up: `(height, parts, label)`.
fn layers(b: &Block) -> Vec<(f64, u32, String)> {
    let mut out = Vec::new();
    for (k, &t) in b.profile.iter().enumerate() {
        for _ in 0..t {
            if k == 0 {
                out.push((1.0, b.width, format!("d{}", b.width)));
            } else {
                out.push((1.0 - 0.5f64.powi(k as i32), b.width >> k, format!("g{}_{}", k, b.width >> k)));
            }
        }
    }
    out
}

pub fn render(m: &Monomial, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(m),
        RenderFormat::Svg => render_svg(m),
    }
}

const CELL: usize = 6;

fn render_ascii(m: &Monomial) -> String {
    let cols: Vec<(usize, Vec<(f64, u32, String)>)> =
        m.blocks.iter().map(|b| (b.width as usize * CELL, layers(b))).collect();
    let height = cols.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
    let mut lines = Vec::new();
    for row in (0..height).rev() {
        let mut line = String::new();
        for (w, ls) in &cols {
            let cell = match ls.get(row) {
                None => " ".repeat(*w),
                Some((_, parts, label)) => {
                    let part_w = w / *parts as usize;
                    let mut s: Vec<char> = format!("[{:^width$}]", label, width = w - 2).chars().collect();
                    for p in 1..*parts as usize {
                        s[p * part_w] = ':';
                    }
                    s.into_iter().collect()
                }
            };
            line.push_str(&cell);
            line.push(' ');
        }
        lines.push(line.trim_end().to_string());
    }
    let ground: Vec<String> = cols.iter().map(|(w, _)| "=".repeat(*w)).collect();
    lines.push(if ground.is_empty() { String::from("(empty)") } else { ground.join(" ") });
    lines.join("\n") + "\n"
}

const PX: f64 = 40.0;

fn render_svg(m: &Monomial) -> String {
    let total_w: f64 = m.blocks.iter().map(|b| b.width as f64 * PX).sum::<f64>() + PX * (m.blocks.len().max(1) - 1) as f64 / 4.0;
    let heights: Vec<f64> = m.blocks.iter().map(|b| layers(b).iter().map(|l| l.0).sum()).collect();
    let total_h = heights.iter().cloned().fold(0.0, f64::max) * PX;
    let (w, h) = (total_w + 2.0 * PX / 4.0, total_h + PX / 2.0);
    let ground = h - PX / 4.0;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.1} {h:.1}\">\n"
    );
    let mut x = PX / 4.0;
    for b in &m.blocks {
        let bw = b.width as f64 * PX;
        out += &format!(
            "  <line x1=\"{x:.1}\" y1=\"{ground:.1}\" x2=\"{:.1}\" y2=\"{ground:.1}\" stroke=\"black\" stroke-width=\"2\"/>\n",
            x + bw
        );
        let mut y = ground;
        for (height, parts, label) in layers(b) {
            let hh = height * PX;
            y -= hh;
            out += &format!(
                "  <rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{bw:.1}\" height=\"{hh:.1}\" fill=\"white\" stroke=\"black\"/>\n"
            );
            let pw = bw / parts as f64;
            for p in 1..parts {
                let lx = x + pw * p as f64;
                out += &format!(
                    "  <line x1=\"{lx:.1}\" y1=\"{y:.1}\" x2=\"{lx:.1}\" y2=\"{:.1}\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n",
                    y + hh
                );
            }
            out += &format!(
                "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"10\" text-anchor=\"middle\">{label}</text>\n",
                x + bw / 2.0,
                y + hh / 2.0 + 3.0
            );
        }
        x += bw + PX / 4.0;
    }
    out += "</svg>\n";
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: u32) -> ElementB {
        ElementB::delta(n)
    }
    fn g(k: u32, m: u32) -> ElementB {
        ElementB::gamma(k, m)
    }
    fn u(n: u32) -> ElementB {
        ElementB::unit(n)
    }

    #[test]
    fn block_degrees() {
        assert_eq!(Block::delta(3).degree(), 3);
        assert_eq!(Block::gamma(1, 2).degree(), 2);
        assert_eq!(Block::gamma(2, 1).degree(), 3);
        assert_eq!(Block::unit(5).degree(), 0);
        assert!(Block::new(2, vec![0, 0, 1]).is_none());
        assert_eq!(Block::new(4, vec![1, 1, 0]).unwrap().scale(), 1);
    }

    #[test]
    fn merge_examples() {
        assert!(merge_blocks(&Block::delta(1), &Block::delta(1)).is_none());
        let a = Block::new(4, vec![1, 1]).unwrap();
        let b = Block::new(2, vec![1, 1]).unwrap();
        assert_eq!(merge_blocks(&a, &b), Some(Block::new(6, vec![1, 1]).unwrap()));
        assert_eq!(merge_blocks(&Block::unit(1), &Block::unit(2)), Some(Block::unit(3)));
    }

    #[test]
    fn odot_examples() {
        assert!(g(1, 1).odot(&g(1, 1)).is_zero());
        assert_eq!(g(1, 1).odot(&ElementB::one()), g(1, 1));
        assert_eq!(g(1, 1).odot(&g(1, 2)), g(1, 3));
        assert_eq!(d(2).odot(&d(1)), d(3));
        assert!(d(2).odot(&d(2)).is_zero());
    }

    #[test]
    fn coproduct_examples() {
        let dg = d(4).cup(&g(1, 2));
        let co = dg.coproduct();
        let want = TensorB::from_product(&dg, &ElementB::one())
            .add(&TensorB::from_product(&d(2).cup(&g(1, 1)), &d(2).cup(&g(1, 1))))
            .add(&TensorB::from_product(&ElementB::one(), &dg));
        assert_eq!(co, want);
        let co = u(2).coproduct();
        let want = TensorB::from_product(&u(2), &ElementB::one())
            .add(&TensorB::from_product(&u(1), &u(1)))
            .add(&TensorB::from_product(&ElementB::one(), &u(2)));
        assert_eq!(co, want);
    }

    #[test]
    fn cup_examples() {
        assert_eq!(g(1, 1).cup(&d(2)), ElementB::from(Block::new(2, vec![1, 1]).unwrap()));
        assert_eq!(g(1, 1).cup(&u(2)), g(1, 1));
        assert!(g(1, 1).cup(&d(1)).is_zero());
        // figure, third row
        let lhs = d(2).odot(&u(2)).cup(&d(1).odot(&g(1, 1)).odot(&u(1)));
        let d1sq = d(1).cup(&d(1));
        let want = d1sq.odot(&g(1, 1)).odot(&d(1)).add(&d(1).odot(&d(2).cup(&g(1, 1))).odot(&u(1)));
        assert_eq!(lhs, want);
    }

    #[test]
    fn basis_examples() {
        for dd in 0..5 {
            assert_eq!(basis(1, dd).len(), 1);
        }
        let b22: Vec<String> = basis(2, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(b22.len(), 3);
        assert!(b22.contains(&"d2".to_string()));
        assert!(b22.contains(&"g1_1^2".to_string()));
        assert!(b22.contains(&"u1 o d1^2".to_string()));
        assert_eq!(basis(2, 1).len(), 2);
        assert_eq!(poincare(2, 3), vec![1, 2, 3, 4]);
    }

    #[test]
    fn rendering() {
        let m = Monomial::block(Block::delta(2));
        let a = render(&m, RenderFormat::Ascii);
        assert_eq!(a.lines().count(), 2);
        assert!(a.contains(':'));
        let s = render(&m, RenderFormat::Svg);
        assert!(s.contains("stroke-dasharray"));
        assert!(s.contains("width=\"80.0\""));
        let unit = render(&Monomial::block(Block::unit(2)), RenderFormat::Ascii);
        assert_eq!(unit.trim(), "=".repeat(12));
    }
}
