//! The almost-Hopf ring `A'_D`: charged monomials over the `B` skylines, restriction from and
//! transfer to `A_B`, the involution, both products, and the coproduct.
//!
//! A neutral monomial stands for the restriction of its base; a signed monomial with base
//! `b_1 (.) ... (.) b_r` stands for `b_1^+ (.) ... (.) b_r^{+/-}`, and with empty base for `1^{+/-}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Mutex, OnceLock};
use std::collections::HashMap;

use crate::hopf_b::{self, toggle, Block, ElementB, Monomial};
use crate::quillen;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Charge {
    Neutral,
    Plus,
    Minus,
}

impl Charge {
    fn flip(self) -> Charge {
        match self {
            Charge::Plus => Charge::Minus,
            Charge::Minus => Charge::Plus,
            Charge::Neutral => Charge::Neutral,
        }
    }

    fn from_parity(plus: bool) -> Charge {
        if plus {
            Charge::Plus
        } else {
            Charge::Minus
        }
    }
}

/// How restriction from `B_n` to `D_n` treats a Hopf monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    Zero,
    Neutral,
    Signed,
}

/// Pure-delta columns and units make a monomial neutral, unless the tallest pure-delta
/// column has width 1, which kills it; otherwise it splits into its two charges.
pub fn classify(m: &Monomial) -> Class {
    let tallest = m.blocks().iter().filter(|b| b.is_pure_delta()).max_by_key(|b| b.t(0));
    if let Some(b) = tallest {
        if b.width == 1 {
            return Class::Zero;
        }
    }
    if m.blocks().iter().any(|b| !b.has_gamma()) {
        Class::Neutral
    } else {
        Class::Signed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedMonomial {
    base: Monomial,
    charge: Charge,
}

impl ChargedMonomial {
    pub fn neutral(base: Monomial) -> Option<Self> {
        (classify(&base) == Class::Neutral).then_some(ChargedMonomial { base, charge: Charge::Neutral })
    }

    pub fn signed(base: Monomial, plus: bool) -> Option<Self> {
        (classify(&base) == Class::Signed).then_some(ChargedMonomial { base, charge: Charge::from_parity(plus) })
    }

    pub fn one_plus() -> Self {
        ChargedMonomial { base: Monomial::one(), charge: Charge::Plus }
    }

    pub fn one_minus() -> Self {
        ChargedMonomial { base: Monomial::one(), charge: Charge::Minus }
    }

    pub fn base(&self) -> &Monomial {
        &self.base
    }

    pub fn charge(&self) -> Charge {
        self.charge
    }

    pub fn component(&self) -> u32 {
        self.base.component()
    }

    pub fn degree(&self) -> u32 {
        self.base.degree()
    }

    pub fn iota(&self) -> Self {
        ChargedMonomial { base: self.base.clone(), charge: self.charge.flip() }
    }
}

/// Finite GF(2) combination of charged monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElementD {
    terms: BTreeSet<ChargedMonomial>,
}

impl From<ChargedMonomial> for ElementD {
    fn from(m: ChargedMonomial) -> Self {
        ElementD { terms: BTreeSet::from([m]) }
    }
}

fn signed_block(b: Block, plus: bool) -> ElementD {
    ChargedMonomial::signed(Monomial::block(b), plus).map(ElementD::from).unwrap_or_default()
}

impl ElementD {
    pub fn zero() -> Self {
        ElementD::default()
    }

    /// `1^+`, the unit for the transfer product.
    pub fn one() -> Self {
        ElementD::from(ChargedMonomial::one_plus())
    }

    pub fn one_minus() -> Self {
        ElementD::from(ChargedMonomial::one_minus())
    }

    /// `delta^0_{n:m}`, the restriction of `delta_n (.) 1_m`.
    pub fn delta0(n: u32, m: u32) -> Self {
        rho(&ElementB::delta(n).odot(&ElementB::unit(m)))
    }

    pub fn gamma_plus(k: u32, m: u32) -> Self {
        signed_block(Block::gamma(k, m), true)
    }

    pub fn gamma_minus(k: u32, m: u32) -> Self {
        signed_block(Block::gamma(k, m), false)
    }

    /// Cup unit of the component `n`; for `n = 0` this is `1^+ + 1^-`.
    pub fn unit(n: u32) -> Self {
        rho(&ElementB::unit(n))
    }

    pub fn from_monomials(ms: impl IntoIterator<Item = ChargedMonomial>) -> Self {
        let mut e = ElementD::zero();
        for m in ms {
            e.toggle(m);
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = &ChargedMonomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, m: ChargedMonomial) {
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

    pub fn iota(&self) -> Self {
        ElementD::from_monomials(self.terms.iter().map(|m| m.iota()))
    }

    /// Transfer to `A_B`: signed monomials go to their base, neutral ones to zero.
    pub fn tr(&self) -> ElementB {
        ElementB::from_monomials(self.terms.iter().filter(|m| m.charge != Charge::Neutral).map(|m| m.base.clone()))
    }

    pub fn odot(&self, other: &Self) -> Self {
        let mut out = ElementD::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.add_assign(&odot_monomials(a, b));
            }
        }
        out
    }

    pub fn try_cup(&self, other: &Self) -> Result<Self, quillen::QuillenError> {
        let mut out = ElementD::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.add_assign(&cup_monomials(a, b)?);
            }
        }
        Ok(out)
    }

    /// Cup product; panics if the restriction solve fails, which would be an internal bug.
    pub fn cup(&self, other: &Self) -> Self {
        self.try_cup(other).expect("cup product through restrictions")
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            let comps: BTreeSet<u32> = self.terms.iter().map(|m| m.component()).collect();
            return comps.into_iter().fold(ElementD::zero(), |acc, c| acc.add(&ElementD::unit(c)));
        }
        let mut out = self.clone();
        for _ in 1..e {
            out = out.cup(self);
        }
        out
    }

    pub fn coproduct(&self) -> TensorD {
        let mut out = TensorD::zero();
        for m in &self.terms {
            for p in coproduct_monomial(m) {
                out.toggle(p);
            }
        }
        out
    }

    pub fn part(&self, n: u32, d: u32) -> Self {
        ElementD { terms: self.terms.iter().filter(|m| m.component() == n && m.degree() == d).cloned().collect() }
    }

    pub fn component_part(&self, n: u32) -> Self {
        ElementD { terms: self.terms.iter().filter(|m| m.component() == n).cloned().collect() }
    }
}

/// Restriction along `D_n <= B_n`.
pub fn rho(x: &ElementB) -> ElementD {
    let mut out = ElementD::zero();
    for m in x.terms() {
        match classify(m) {
            Class::Zero => {
                let (gamma, rest): (Vec<&Block>, Vec<&Block>) = m.blocks().iter().partition(|b| b.has_gamma());
                let rest = Monomial::from_blocks(rest.into_iter().cloned()).expect("distinct profiles");
                let g = ElementB::from_monomials(Monomial::from_blocks(gamma.into_iter().cloned()));
                for t in g.odot(&reduce_delta_part(&rest)).terms() {
                    out.toggle(ChargedMonomial { base: t.clone(), charge: Charge::Neutral });
                }
            }
            Class::Neutral => out.toggle(ChargedMonomial { base: m.clone(), charge: Charge::Neutral }),
            Class::Signed => {
                out.toggle(ChargedMonomial { base: m.clone(), charge: Charge::Plus });
                out.toggle(ChargedMonomial { base: m.clone(), charge: Charge::Minus });
            }
        }
    }
    out
}

fn odot_monomials(a: &ChargedMonomial, b: &ChargedMonomial) -> ElementD {
    use Charge::*;
    match (a.charge, b.charge) {
        (Neutral, Neutral) => ElementD::zero(),
        (Neutral, _) => odot_monomials(b, a),
        (_, Neutral) => match a.base.odot(&b.base) {
            Some(m) => rho(&ElementB::from(m)),
            None => ElementD::zero(),
        },
        (ca, cb) => match a.base.odot(&b.base) {
            Some(m) => ElementD::from(ChargedMonomial { base: m, charge: Charge::from_parity(ca == cb) }),
            None => ElementD::zero(),
        },
    }
}

fn cup_monomials(a: &ChargedMonomial, b: &ChargedMonomial) -> Result<ElementD, quillen::QuillenError> {
    use Charge::*;
    if a.component() != b.component() {
        return Ok(ElementD::zero());
    }
    if a.component() == 0 {
        // 1^+ and 1^- are orthogonal idempotents
        return Ok(if a.charge == b.charge { ElementD::from(a.clone()) } else { ElementD::zero() });
    }
    if a.charge == Neutral && b.charge == Neutral {
        return Ok(rho(&hopf_b::cup_monomials(&a.base, &b.base)));
    }
    static CACHE: OnceLock<Mutex<HashMap<(ChargedMonomial, ChargedMonomial), ElementD>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let out = quillen::cup_d_by_restriction(&key.0, &key.1)?;
    cache.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

fn coproduct_monomial(m: &ChargedMonomial) -> Vec<(ChargedMonomial, ChargedMonomial)> {
    let pairs = m.base.coproduct();
    let mut out = BTreeSet::new();
    match m.charge {
        Charge::Neutral => {
            for (a, b) in pairs {
                let (ra, rb) = (rho(&ElementB::from(a)), rho(&ElementB::from(b)));
                for x in ra.terms() {
                    for y in rb.terms() {
                        toggle(&mut out, (x.clone(), y.clone()));
                    }
                }
            }
        }
        c => {
            // each piece of a signed base is signed; both pieces carry charges multiplying to c
            let lift = |x: Monomial, plus: bool| ChargedMonomial { base: x, charge: Charge::from_parity(plus) };
            for (a, b) in pairs {
                for left_plus in [true, false] {
                    let right_plus = left_plus == (c == Charge::Plus);
                    toggle(&mut out, (lift(a.clone(), left_plus), lift(b.clone(), right_plus)));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Terms of the coproduct of a signed monomial whose left factor carries no minus generator.
pub fn coproduct_prime(x: &ElementD) -> TensorD {
    let mut out = TensorD::zero();
    for p in x.coproduct().terms() {
        if p.0.charge != Charge::Minus {
            out.toggle(p.clone());
        }
    }
    out
}

/// Element of `A'_D (x) A'_D`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorD {
    terms: BTreeSet<(ChargedMonomial, ChargedMonomial)>,
}

impl TensorD {
    pub fn zero() -> Self {
        TensorD::default()
    }

    pub fn toggle(&mut self, p: (ChargedMonomial, ChargedMonomial)) {
        toggle(&mut self.terms, p);
    }

    pub fn terms(&self) -> impl Iterator<Item = &(ChargedMonomial, ChargedMonomial)> {
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

    pub fn from_product(x: &ElementD, y: &ElementD) -> Self {
        let mut out = TensorD::zero();
        for a in x.terms() {
            for b in y.terms() {
                out.toggle((a.clone(), b.clone()));
            }
        }
        out
    }

    pub fn combine(&self, other: &Self, op: impl Fn(&ElementD, &ElementD) -> ElementD) -> Self {
        let mut out = TensorD::zero();
        for (a, b) in &self.terms {
            for (c, d) in &other.terms {
                let l = op(&ElementD::from(a.clone()), &ElementD::from(c.clone()));
                if l.is_zero() {
                    continue;
                }
                let r = op(&ElementD::from(b.clone()), &ElementD::from(d.clone()));
                out = out.add(&TensorD::from_product(&l, &r));
            }
        }
        out
    }
}

impl fmt::Display for TensorD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, b)| format!("{} # {}", ElementD::from(a.clone()), ElementD::from(b.clone())))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Additive basis: neutral survivors of the `B` basis once, signed ones with both charges.
pub fn basis_d(n: u32, d: u32) -> Vec<ChargedMonomial> {
    let mut out = Vec::new();
    for m in hopf_b::basis(n, d) {
        match classify(&m) {
            Class::Zero => {}
            Class::Neutral => out.push(ChargedMonomial { base: m, charge: Charge::Neutral }),
            Class::Signed => {
                out.push(ChargedMonomial { base: m.clone(), charge: Charge::Plus });
                out.push(ChargedMonomial { base: m, charge: Charge::Minus });
            }
        }
    }
    out.sort();
    out
}

pub fn poincare_d(n: u32, d_max: u32) -> Vec<usize> {
    (0..=d_max).map(|d| basis_d(n, d).len()).collect()
}

fn generator_product(b: &Block, plus: bool) -> (String, ElementD) {
    let sign = if plus { '+' } else { '-' };
    let mut parts = Vec::new();
    let mut value: Option<ElementD> = None;
    for (k, &t) in b.profile().iter().enumerate() {
        if t == 0 {
            continue;
        }
        let (atom, g) = if k == 0 {
            (format!("D{}_0", b.width), ElementD::delta0(b.width, 0))
        } else if plus {
            (format!("G{sign}{}_{}", k, b.width >> k), ElementD::gamma_plus(k as u32, b.width >> k))
        } else {
            (format!("G{sign}{}_{}", k, b.width >> k), ElementD::gamma_minus(k as u32, b.width >> k))
        };
        parts.push(if t == 1 { atom } else { format!("{atom}^{t}") });
        let g = g.pow(t);
        value = Some(match value {
            None => g,
            Some(v) => v.cup(&g),
        });
    }
    (parts.join(" * "), value.unwrap_or_default())
}

/// A signed block is the cup product of its charged generators up to lower terms; those are
/// printed recursively so that the expression evaluates back to the block.
fn signed_block_expr(b: &Block, plus: bool) -> String {
    static CACHE: OnceLock<Mutex<HashMap<(Block, bool), String>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().unwrap().get(&(b.clone(), plus)) {
        return s.clone();
    }
    let (head, mut value) = generator_product(b, plus);
    let lead = ChargedMonomial::signed(Monomial::block(b.clone()), plus).expect("signed block");
    assert!(value.terms.contains(&lead), "generator product misses its leading block");
    value.toggle(lead);
    let mut sums = BTreeSet::from([head]);
    for m in value.terms() {
        for s in summands(&monomial_expr(m)) {
            if !sums.remove(&s) {
                sums.insert(s);
            }
        }
    }
    let s = sums.into_iter().collect::<Vec<_>>().join(" + ");
    cache.lock().unwrap().insert((b.clone(), plus), s.clone());
    s
}

/// Splits at the `+` signs outside parentheses.
fn summands(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 && s[i..].starts_with("+ ") && s[..i].ends_with(' ') => {
                out.push(s[start..i - 1].to_string());
                start = i + 2;
            }
            _ => {}
        }
    }
    out.push(s[start..].to_string());
    out
}

fn block_operand(b: &Block, plus: bool) -> String {
    let s = signed_block_expr(b, plus);
    if s.contains(' ') {
        format!("({s})")
    } else {
        s
    }
}

fn column_widths(m: &Monomial) -> Vec<u32> {
    let h = m.blocks().iter().map(|b| b.t(0)).max().unwrap_or(0);
    (1..=h).map(|j| m.blocks().iter().filter(|b| b.t(0) >= j).map(|b| b.width).sum()).collect()
}

/// The column product of a pure-delta skyline: leading term the skyline itself, and in the
/// kernel of `rho` when the tallest column has width 1.
fn column_product(m: &Monomial) -> ElementB {
    let n = m.component();
    let mut product = ElementB::unit(n);
    for w in column_widths(m) {
        product = product.cup(&ElementB::delta(w).odot(&ElementB::unit(n - w)));
    }
    assert!(product.terms().any(|t| t == m), "column product misses its leading skyline");
    product
}

/// A combination of neutral pure-delta skylines with the same restriction as `m`.
fn reduce_delta_part(m: &Monomial) -> ElementB {
    static CACHE: OnceLock<Mutex<HashMap<Monomial, ElementB>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if classify(m) != Class::Zero {
        return ElementB::from(m.clone());
    }
    if let Some(v) = cache.lock().unwrap().get(m) {
        return v.clone();
    }
    let mut out = ElementB::zero();
    for t in column_product(m).terms() {
        if t != m {
            out.add_assign(&reduce_delta_part(t));
        }
    }
    cache.lock().unwrap().insert(m.clone(), out.clone());
    out
}

/// `rho` of a monomial built from pure-delta and unit blocks, as a sum of cup products of
/// `delta^0_{N:M}`: the product over its columns reproduces it up to terms that are expanded
/// again.
fn neutral_expansion(m: &Monomial) -> BTreeSet<Vec<u32>> {
    static CACHE: OnceLock<Mutex<HashMap<Monomial, BTreeSet<Vec<u32>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(m) {
        return v.clone();
    }
    let cols = column_widths(m);
    let product = column_product(m);
    let mut out = BTreeSet::new();
    if classify(m) != Class::Zero {
        out.insert(cols);
    }
    for t in product.terms() {
        if t == m {
            continue;
        }
        for key in neutral_expansion(t) {
            toggle(&mut out, key);
        }
    }
    cache.lock().unwrap().insert(m.clone(), out.clone());
    out
}

fn neutral_expr(m: &Monomial) -> String {
    let n = m.component();
    let (gamma, rest): (Vec<&Block>, Vec<&Block>) = m.blocks().iter().partition(|b| b.has_gamma());
    let rest = Monomial::from_blocks(rest.into_iter().cloned()).expect("distinct profiles");
    let rest_n = rest.component();
    let mut sums: Vec<String> = neutral_expansion(&rest)
        .into_iter()
        .map(|cols| {
            if cols.is_empty() {
                return format!("U{rest_n}");
            }
            let mut factors: Vec<(u32, u32)> = Vec::new();
            for w in cols {
                match factors.last_mut() {
                    Some((c, e)) if *c == w => *e += 1,
                    _ => factors.push((w, 1)),
                }
            }
            factors
                .iter()
                .map(|&(w, e)| if e == 1 { format!("D{w}_{}", rest_n - w) } else { format!("D{w}_{}^{e}", rest_n - w) })
                .collect::<Vec<_>>()
                .join(" * ")
        })
        .collect();
    sums.sort();
    let rest_expr = sums.join(" + ");
    if gamma.is_empty() {
        return rest_expr;
    }
    let _ = n;
    let mut parts: Vec<String> = gamma.iter().map(|b| block_operand(b, true)).collect();
    parts.push(if sums.len() > 1 { format!("({rest_expr})") } else { rest_expr });
    parts.join(" o ")
}

fn monomial_expr(m: &ChargedMonomial) -> String {
    match m.charge {
        Charge::Neutral => neutral_expr(&m.base),
        c => {
            let blocks = m.base.blocks();
            if blocks.is_empty() {
                return if c == Charge::Plus { "e+".into() } else { "e-".into() };
            }
            if blocks.len() == 1 {
                return signed_block_expr(&blocks[0], c == Charge::Plus);
            }
            let last = blocks.len() - 1;
            let parts: Vec<String> =
                blocks.iter().enumerate().map(|(i, b)| block_operand(b, i < last || c == Charge::Plus)).collect();
            parts.join(" o ")
        }
    }
}

impl fmt::Display for ChargedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", monomial_expr(self))
    }
}

/// Prints in the expression grammar: parsing the output gives the element back.
impl fmt::Display for ElementD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|m| {
                let s = monomial_expr(m);
                if s.contains(" + ") {
                    format!("({s})")
                } else {
                    s
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Human-readable form naming the charge and the base skyline.
pub fn describe(m: &ChargedMonomial) -> String {
    let tag = match m.charge {
        Charge::Neutral => "0",
        Charge::Plus => "+",
        Charge::Minus => "-",
    };
    format!("[{tag}] {}", m.base)
}

/// Group a family of charged monomials by charge.
pub fn by_charge(ms: &[ChargedMonomial]) -> BTreeMap<Charge, usize> {
    let mut out = BTreeMap::new();
    for m in ms {
        *out.entry(m.charge).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(k: u32, m: u32) -> ElementD {
        ElementD::gamma_plus(k, m)
    }
    fn gm(k: u32, m: u32) -> ElementD {
        ElementD::gamma_minus(k, m)
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&ElementB::gamma(1, 1)), gp(1, 1).add(&gm(1, 1)));
        assert!(rho(&ElementB::delta(1).odot(&ElementB::unit(2))).is_zero());
        let x = rho(&ElementB::gamma(1, 1).odot(&ElementB::unit(1)));
        assert_eq!(x.len(), 1);
        assert_eq!(x.terms().next().unwrap().charge(), Charge::Neutral);
        assert_eq!(gp(1, 1).odot(&ElementD::unit(1)), x);
    }

    #[test]
    fn involution_and_transfer() {
        assert_eq!(gp(2, 1).iota(), gm(2, 1));
        assert_eq!(gp(1, 1).tr(), ElementB::gamma(1, 1));
        assert!(rho(&ElementB::delta(2)).tr().is_zero());
        assert_eq!(ElementD::one_minus().odot(&ElementD::one_minus()), ElementD::one());
        assert_eq!(ElementD::one_minus().odot(&gp(1, 1)), gm(1, 1));
    }

    #[test]
    fn transfer_products() {
        assert_eq!(gp(1, 1).odot(&gp(1, 2)), gp(1, 3));
        assert!(gp(1, 1).odot(&gp(1, 1)).is_zero());
        let d = ElementD::delta0(2, 0);
        assert!(d.odot(&d).is_zero());
    }

    #[test]
    fn cup_relations() {
        assert_eq!(gp(1, 1).cup(&gm(1, 1)), ElementD::delta0(2, 0));
        assert!(gp(2, 1).cup(&gm(2, 1)).is_zero());
        let sq = gp(1, 1).cup(&gp(1, 1));
        assert_eq!(sq, signed_block(Block::gamma(1, 1).stack(&Block::gamma(1, 1)), true));
    }

    #[test]
    fn coproduct_of_gamma_plus() {
        let co = gp(1, 1).coproduct();
        let want = TensorD::from_product(&ElementD::one(), &gp(1, 1))
            .add(&TensorD::from_product(&gp(1, 1), &ElementD::one()))
            .add(&TensorD::from_product(&ElementD::one_minus(), &gm(1, 1)))
            .add(&TensorD::from_product(&gm(1, 1), &ElementD::one_minus()));
        assert_eq!(co, want);
    }

    #[test]
    fn small_bases() {
        assert_eq!(basis_d(2, 1).len(), 2);
        assert_eq!(basis_d(2, 2).len(), 3);
        assert_eq!(basis_d(3, 1).len(), 1);
        assert_eq!(basis_d(3, 2).len(), 2);
        assert_eq!(basis_d(0, 0).len(), 2);
    }
}
