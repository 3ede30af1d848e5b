//! Verification suites shared by the command line and the acceptance tests. Each suite
//! returns a [`Report`] with its failures and informational notes; output is deterministic
//! for fixed inputs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::foxneuwirth::{self as fx, Cell, Cochain, FnGenerator, TensorCochain, Variant};
use crate::hopf_b::{self, Block, ElementB, Monomial, TensorB};
use crate::hopf_d::{self, Charge, ChargedMonomial, ElementD, TensorD};
use crate::quillen::{self, QuillenSystem, Ring};
use crate::steenrod;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: &str) -> Self {
        Report { name: name.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(f, "{}: {} ({} checks, {} failures)", self.name, status, self.checks, self.failures.len())?;
        for x in &self.failures {
            writeln!(f, "  failure: {x}")?;
        }
        for x in &self.notes {
            writeln!(f, "  note: {x}")?;
        }
        Ok(())
    }
}

pub fn betti_b(max_n: u32, max_deg: u32) -> Report {
    let mut r = Report::new("betti B");
    for n in 1..=max_n {
        for d in 0..=max_deg {
            match fx::betti(Variant::B, n as usize, d as usize) {
                Ok(b) => {
                    let got = hopf_b::basis(n, d).len();
                    r.check(got == b, || format!("n={n} d={d}: basis {got}, betti {b}"));
                }
                Err(e) => r.failures.push(format!("n={n} d={d}: {e}")),
            }
        }
    }
    r
}

pub fn betti_d(max_n: u32, max_deg: u32) -> Report {
    let mut r = Report::new("betti D");
    for n in 2..=max_n {
        for d in 0..=max_deg {
            let (bp, bd) = match (fx::betti(Variant::Dprime, n as usize, d as usize), fx::betti(Variant::D, n as usize, d as usize)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    r.failures.push(format!("n={n} d={d}: {e}"));
                    continue;
                }
            };
            let got = hopf_d::basis_d(n, d).len();
            r.check(got == bp, || format!("n={n} d={d}: basis {got}, betti(Dprime) {bp}"));
            r.check(bd == bp, || format!("n={n} d={d}: betti(D) {bd}, betti(Dprime) {bp}"));
        }
    }
    r
}

fn tensor_b(pairs: &[(&ElementB, &ElementB)]) -> TensorB {
    pairs.iter().fold(TensorB::zero(), |acc, (a, b)| acc.add(&TensorB::from_product(a, b)))
}

/// The three skyline computations: a coproduct, a transfer merge and a cup product.
pub fn figure() -> Report {
    let mut r = Report::new("figure");
    let d = ElementB::delta;
    let g = ElementB::gamma;
    let one = ElementB::one();

    let x = d(4).cup(&g(1, 2));
    let y = d(2).cup(&g(1, 1));
    let want = tensor_b(&[(&x, &one), (&y, &y), (&one, &x)]);
    let got = x.coproduct();
    r.check(got == want, || format!("coproduct of {x}: got {got}"));

    let lhs = x.odot(&y).odot(&d(2));
    let rhs = d(6).cup(&g(1, 3)).odot(&d(2));
    r.check(lhs == rhs && !lhs.is_zero(), || format!("transfer merge: got {lhs}, want {rhs}"));

    let a = d(2).odot(&ElementB::unit(2));
    let b = d(1).odot(&g(1, 1)).odot(&ElementB::unit(1));
    let want = d(1).pow(2).odot(&g(1, 1)).odot(&d(1)).add(&d(1).odot(&y).odot(&ElementB::unit(1)));
    let got = a.cup(&b);
    r.check(got == want, || format!("cup product: got {got}, want {want}"));
    r
}

pub fn small_identities(max_n: u32, max_deg: u32) -> Report {
    let mut r = Report::new("small identities");
    let m = ElementD::one_minus();
    r.check(m.odot(&m) == ElementD::one(), || "1^- o 1^- != 1^+".into());
    for n in 0..=max_n {
        for d in 0..=max_deg {
            for x in hopf_d::basis_d(n, d) {
                let e = ElementD::from(x.clone());
                r.check(e.iota().iota() == e, || format!("iota^2 on {e}"));
            }
            for x in hopf_b::basis(n, d) {
                let e = ElementB::from(x);
                r.check(hopf_d::rho(&e).tr().is_zero(), || format!("tr rho({e}) != 0"));
            }
        }
    }
    for k in 0..=max_n {
        let e = ElementD::delta0(1, k);
        r.check(e.is_zero(), || format!("delta0_(1:{k}) = {e}"));
    }
    let got = ElementD::gamma_plus(1, 1).cup(&ElementD::gamma_minus(1, 1));
    r.check(got == ElementD::delta0(2, 0), || format!("G+1_1 * G-1_1 = {got}"));
    r
}

/// Relations of `A'_D` checked on generators up to component `max_n`.
pub fn relations_d(max_n: u32) -> Report {
    let mut r = Report::new("relations D");
    let gp = ElementD::gamma_plus;
    let gm = ElementD::gamma_minus;
    for k in 1..=4u32 {
        for h in 2..=4u32 {
            for n in 1..=(max_n >> k) {
                if (n << k) % (1 << h) != 0 {
                    continue;
                }
                let m = (n << k) >> h;
                let got = gp(k, n).cup(&gm(h, m));
                r.check(got.is_zero(), || format!("G+{k}_{n} * G-{h}_{m} = {got}"));
            }
        }
    }
    for m in 1..=(max_n / 2) {
        let got = gp(1, m).cup(&gm(1, m));
        let sq = if m == 1 { ElementD::one() } else { gp(1, m - 1).pow(2) };
        let want = sq.odot(&ElementD::delta0(2, 0));
        r.check(got == want, || format!("G+1_{m} * G-1_{m} = {got}, want {want}"));
    }
    // delta0_{n:m} * G+k_{(n+m)/2^k} = (delta0_{n:0} * G+k_{n/2^k}) o G+k_{m/2^k}
    let gplus = |k: u32, w: u32| -> ElementD {
        if w % (1 << k) != 0 {
            ElementD::zero()
        } else if w == 0 {
            ElementD::one()
        } else {
            gp(k, w >> k)
        }
    };
    for total in 2..=max_n {
        for n in 1..=total {
            let m = total - n;
            for k in 1..=total.ilog2() {
                if total % (1 << k) != 0 {
                    continue;
                }
                let lhs = ElementD::delta0(n, m).cup(&gplus(k, total));
                let rhs = ElementD::delta0(n, 0).cup(&gplus(k, n)).odot(&gplus(k, m));
                r.check(lhs == rhs, || format!("D{n}_{m} * G+{k}_{}: {lhs} vs {rhs}", total >> k));
            }
        }
    }
    for n in 2..=max_n {
        for m in 0..=(max_n - n) {
            let x = ElementD::delta0(n, m);
            r.check(x.odot(&ElementD::one_minus()) == x, || format!("D{n}_{m} o e- != D{n}_{m}"));
        }
    }
    r
}

/// Transfer and coproduct formulas of `A_B` on generators.
pub fn relations_b(max_n: u32) -> Report {
    let mut r = Report::new("relations B");
    for a in 1..=max_n {
        for b in 1..=max_n {
            let got = ElementB::delta(a).odot(&ElementB::delta(b));
            let want = if hopf_b::binom_odd(a, b) { ElementB::delta(a + b) } else { ElementB::zero() };
            r.check(got == want, || format!("d{a} o d{b} = {got}"));
            for k in 1..=3 {
                let got = ElementB::gamma(k, a).odot(&ElementB::gamma(k, b));
                let want = if hopf_b::binom_odd(a, b) { ElementB::gamma(k, a + b) } else { ElementB::zero() };
                r.check(got == want, || format!("g{k}_{a} o g{k}_{b} = {got}"));
            }
        }
    }
    for n in 1..=max_n {
        let parts = |f: &dyn Fn(u32) -> ElementB| -> TensorB {
            (0..=n).fold(TensorB::zero(), |acc, i| acc.add(&TensorB::from_product(&f(i), &f(n - i))))
        };
        let dl = |i: u32| if i == 0 { ElementB::one() } else { ElementB::delta(i) };
        let got = ElementB::delta(n).coproduct();
        r.check(got == parts(&dl), || format!("coproduct of d{n} = {got}"));
        let gl = |i: u32| if i == 0 { ElementB::one() } else { ElementB::gamma(1, i) };
        let got = ElementB::gamma(1, n).coproduct();
        r.check(got == parts(&gl), || format!("coproduct of g1_{n} = {got}"));
    }
    r
}

pub fn relations(max_n: u32, max_deg: u32) -> Report {
    let mut r = Report::new("relations");
    r.merge(figure());
    r.merge(relations_b(max_n));
    r.merge(relations_d(max_n.min(5)));
    r.merge(small_identities(max_n.min(4), max_deg.min(6)));
    r
}

// ---- random sampling ----

struct Sampler {
    rng: ChaCha8Rng,
    max_n: u32,
    max_deg: u32,
}

impl Sampler {
    fn pick<T: Clone>(&mut self, v: &[T]) -> T {
        v.choose(&mut self.rng).expect("non-empty").clone()
    }

    /// A non-zero homogeneous element of `A_B` in component `n`: one or two basis monomials.
    fn b_in(&mut self, n: u32, max_deg: u32) -> ElementB {
        loop {
            let d = self.rng.gen_range(0..=max_deg);
            let basis = hopf_b::basis(n, d);
            if basis.is_empty() {
                continue;
            }
            let mut e = ElementB::from(self.pick(&basis));
            if basis.len() > 1 && self.rng.gen_bool(0.5) {
                e.add_assign(&ElementB::from(self.pick(&basis)));
            }
            if !e.is_zero() {
                return e;
            }
        }
    }

    fn d_in(&mut self, n: u32, max_deg: u32) -> ElementD {
        loop {
            let d = self.rng.gen_range(0..=max_deg);
            let basis = hopf_d::basis_d(n, d);
            if basis.is_empty() {
                continue;
            }
            let mut e = ElementD::from(self.pick(&basis));
            if basis.len() > 1 && self.rng.gen_bool(0.5) {
                e.add_assign(&ElementD::from(self.pick(&basis)));
            }
            if !e.is_zero() {
                return e;
            }
        }
    }

    fn component(&mut self) -> u32 {
        self.rng.gen_range(1..=self.max_n)
    }

    /// Components `(a, b)` with `a + b <= max_n`, each at least 1.
    fn split(&mut self) -> (u32, u32) {
        let total = self.rng.gen_range(2..=self.max_n.max(2));
        let a = self.rng.gen_range(1..total);
        (a, total - a)
    }

    /// A gathered block of `A'_D` with a gamma factor, with a random charge.
    fn signed_block(&mut self, n: u32) -> Option<ElementD> {
        let blocks: Vec<Block> = hopf_b::blocks_of_width(n, self.max_deg).into_iter().filter(|b| b.has_gamma()).collect();
        if blocks.is_empty() {
            return None;
        }
        let b = self.pick(&blocks);
        let plus = self.rng.gen_bool(0.5);
        ChargedMonomial::signed(Monomial::block(b), plus).map(ElementD::from)
    }
}

type Triple<M> = BTreeSet<(M, M, M)>;

fn toggle3<M: Ord>(s: &mut Triple<M>, t: (M, M, M)) {
    if !s.remove(&t) {
        s.insert(t);
    }
}

fn coassoc_b(x: &ElementB) -> bool {
    let (mut l, mut r) = (Triple::new(), Triple::new());
    for (a, b) in x.coproduct().terms() {
        for (a1, a2) in ElementB::from(a.clone()).coproduct().terms() {
            toggle3(&mut l, (a1.clone(), a2.clone(), b.clone()));
        }
        for (b1, b2) in ElementB::from(b.clone()).coproduct().terms() {
            toggle3(&mut r, (a.clone(), b1.clone(), b2.clone()));
        }
    }
    l == r
}

fn coassoc_d(x: &ElementD) -> bool {
    let (mut l, mut r) = (Triple::new(), Triple::new());
    for (a, b) in x.coproduct().terms() {
        for (a1, a2) in ElementD::from(a.clone()).coproduct().terms() {
            toggle3(&mut l, (a1.clone(), a2.clone(), b.clone()));
        }
        for (b1, b2) in ElementD::from(b.clone()).coproduct().terms() {
            toggle3(&mut r, (a.clone(), b1.clone(), b2.clone()));
        }
    }
    l == r
}

/// `sum (x' * y) o (x'' * z)` over the coproduct of `x`.
fn distribute_b(x: &ElementB, y: &ElementB, z: &ElementB) -> ElementB {
    let mut out = ElementB::zero();
    for (a, b) in x.coproduct().terms() {
        let l = ElementB::from(a.clone()).cup(y);
        if l.is_zero() {
            continue;
        }
        out.add_assign(&l.odot(&ElementB::from(b.clone()).cup(z)));
    }
    out
}

fn distribute_d(x: &ElementD, y: &ElementD, z: &ElementD) -> ElementD {
    let mut out = ElementD::zero();
    for (a, b) in x.coproduct().terms() {
        let l = ElementD::from(a.clone()).cup(y);
        if l.is_zero() {
            continue;
        }
        out.add_assign(&l.odot(&ElementD::from(b.clone()).cup(z)));
    }
    out
}

/// `(o (x) o)(id (x) tau (x) id)(Delta' b (x) Delta x)`, the right side of the transfer law.
pub fn transfer_law_rhs(b: &ElementD, x: &ElementD) -> TensorD {
    hopf_d::coproduct_prime(b).combine(&x.coproduct(), |p, q| p.odot(q))
}

/// A pair on which `(Delta, o)` is not a bialgebra in `A'_D`.
pub fn bialgebra_witness() -> (ElementD, ElementD) {
    (ElementD::gamma_plus(1, 1), ElementD::gamma_plus(2, 1))
}

pub fn witness_report() -> Report {
    let mut r = Report::new("transfer witness");
    let (x, y) = bialgebra_witness();
    let lhs = x.odot(&y).coproduct();
    let naive = x.coproduct().combine(&y.coproduct(), |p, q| p.odot(q));
    r.check(lhs != naive, || format!("({x}) o ({y}) satisfies the bialgebra law"));
    r.check(lhs == transfer_law_rhs(&x, &y), || format!("transfer law fails on ({x}) o ({y})"));
    r.notes.push(format!("Delta(({x}) o ({y})) = {lhs}"));
    r.notes.push(format!("bialgebra prediction = {naive}"));
    r
}

/// Random tests of the (almost-)Hopf ring axioms; `count` samples per law.
pub fn axioms(seed: u64, count: usize, max_n: u32, max_deg: u32) -> Report {
    let mut s = Sampler { rng: ChaCha8Rng::seed_from_u64(seed), max_n: max_n.max(1), max_deg };
    let mut r = Report::new("axioms");
    // products of this degree in A'_D go through restriction systems; keep them small
    let cup_deg = max_deg.min(5);
    for _ in 0..count {
        // A_B
        let (a, b) = s.split();
        let c = s.component();
        let (x, y, z) = (s.b_in(a, max_deg), s.b_in(b, max_deg), s.b_in(c, max_deg));
        r.check(x.odot(&y).odot(&z) == x.odot(&y.odot(&z)), || format!("B transfer assoc: {x} | {y} | {z}"));
        r.check(x.odot(&y) == y.odot(&x), || format!("B transfer comm: {x} | {y}"));
        let lhs = x.odot(&y).coproduct();
        let rhs = x.coproduct().combine(&y.coproduct(), |p, q| p.odot(q));
        r.check(lhs == rhs, || format!("B (coproduct, transfer): {x} | {y}"));
        r.check(coassoc_b(&x.odot(&y)), || format!("B coassoc: ({x}) o ({y})"));

        let n = s.component();
        let (x, y, z) = (s.b_in(n, max_deg), s.b_in(n, max_deg), s.b_in(n, max_deg));
        r.check(x.cup(&y).cup(&z) == x.cup(&y.cup(&z)), || format!("B cup assoc: {x} | {y} | {z}"));
        r.check(x.cup(&y) == y.cup(&x), || format!("B cup comm: {x} | {y}"));
        let lhs = x.cup(&y).coproduct();
        let rhs = x.coproduct().combine(&y.coproduct(), |p, q| p.cup(q));
        r.check(lhs == rhs, || format!("B (coproduct, cup): {x} | {y}"));

        let (a, b) = s.split();
        let (y, z, x) = (s.b_in(a, max_deg), s.b_in(b, max_deg), s.b_in(a + b, max_deg));
        r.check(x.cup(&y.odot(&z)) == distribute_b(&x, &y, &z), || format!("B distributivity: {x} | {y} | {z}"));

        // A'_D
        let (a, b) = s.split();
        let c = s.component();
        let (x, y, z) = (s.d_in(a, max_deg), s.d_in(b, max_deg), s.d_in(c, max_deg));
        r.check(x.odot(&y).odot(&z) == x.odot(&y.odot(&z)), || format!("D transfer assoc: {x} | {y} | {z}"));
        r.check(x.odot(&y) == y.odot(&x), || format!("D transfer comm: {x} | {y}"));
        r.check(coassoc_d(&x.odot(&y)), || format!("D coassoc: ({x}) o ({y})"));

        let n = s.component().max(2);
        let (x, y, z) = (s.d_in(n, cup_deg), s.d_in(n, cup_deg), s.d_in(n, cup_deg));
        r.check(x.cup(&y).cup(&z) == x.cup(&y.cup(&z)), || format!("D cup assoc: {x} | {y} | {z}"));
        r.check(x.cup(&y) == y.cup(&x), || format!("D cup comm: {x} | {y}"));
        let lhs = x.cup(&y).coproduct();
        let rhs = x.coproduct().combine(&y.coproduct(), |p, q| p.cup(q));
        r.check(lhs == rhs, || format!("D (coproduct, cup): {x} | {y}"));

        let (a, b) = s.split();
        let (y, z, x) = (s.d_in(a, cup_deg), s.d_in(b, cup_deg), s.d_in(a + b, cup_deg));
        r.check(x.cup(&y.odot(&z)) == distribute_d(&x, &y, &z), || format!("D distributivity: {x} | {y} | {z}"));

        let (a, b) = s.split();
        if let Some(blk) = s.signed_block(a) {
            let basis: Vec<ChargedMonomial> = (0..=max_deg).flat_map(|d| hopf_d::basis_d(b, d)).collect();
            let x = ElementD::from(s.pick(&basis));
            let lhs = blk.odot(&x).coproduct();
            r.check(lhs == transfer_law_rhs(&blk, &x), || format!("D transfer law: {blk} | {x}"));
        }
    }
    r.merge(witness_report());
    r
}

/// Restriction is multiplicative for cup products on all basis pairs, and injective.
pub fn quillen_oracle(max_n_hom: u32, max_n_inj: u32, max_deg: u32) -> Report {
    let mut r = Report::new("quillen");
    for n in 1..=max_n_hom {
        let sites = quillen::partitions2(n);
        for d1 in 0..=max_deg {
            let left = hopf_b::basis(n, d1);
            for d2 in d1..=max_deg {
                let right = hopf_b::basis(n, d2);
                for a in &left {
                    for b in &right {
                        let (ea, eb) = (ElementB::from(a.clone()), ElementB::from(b.clone()));
                        let prod = ea.cup(&eb);
                        for pi in &sites {
                            let ok = match (quillen::restrict_b(&ea, pi), quillen::restrict_b(&eb, pi), quillen::restrict_b(&prod, pi)) {
                                (Ok(p), Ok(q), Ok(pq)) => p.mul(&q).map(|x| x == pq).unwrap_or(false),
                                _ => false,
                            };
                            r.check(ok, || format!("site B:{pi}: {a} * {b}"));
                        }
                    }
                }
            }
        }
    }
    // restriction to D_n commutes with the detection maps
    for n in 2..=max_n_hom {
        for d in 0..=max_deg {
            for m in hopf_b::basis(n, d) {
                let x = ElementB::from(m.clone());
                let Ok(fam) = quillen::quillen_map_d(&hopf_d::rho(&x), n) else {
                    r.failures.push(format!("no restriction family for rho({m})"));
                    continue;
                };
                for (site, p) in &fam.entries {
                    let quillen::Site::D(sd) = site else { continue };
                    r.check(quillen::restrict_rho(&x, sd) == *p, || format!("rho({m}) at {}", site.label()));
                }
            }
        }
    }
    for ring in [Ring::B, Ring::D] {
        let low = if ring == Ring::B { 1 } else { 2 };
        for n in low..=max_n_inj {
            for d in 0..=max_deg {
                let sys = QuillenSystem::get(ring, n, d);
                r.check(sys.is_injective(), || {
                    format!("{ring:?} n={n} d={d}: rank {} of {}", sys.rank(), sys.dimension())
                });
            }
        }
    }
    r
}

// ---- chain level ----

/// Generator cochain of a block made of at most one generator.
fn block_cochain(b: &Block) -> Option<Cochain> {
    let g = if b.is_unit() {
        FnGenerator::Unit(b.width as usize)
    } else if steenrod::block_height(b) != 1 {
        return None;
    } else if b.t(0) == 1 {
        FnGenerator::Delta(b.width as usize)
    } else {
        let k = b.scale();
        FnGenerator::Gamma(k, (b.width >> k) as usize)
    };
    fx::generator_cochain(g).ok()
}

fn odot_cochains(variant: Variant, x: &Cochain, y: &Cochain) -> Result<Cochain, fx::FnError> {
    let mut out = Cochain::zero(variant, x.n + y.n);
    for a in &x.cells {
        for b in &y.cells {
            for c in fx::odot_chain(variant, a, b)? {
                out.toggle(c);
            }
        }
    }
    Ok(out)
}

fn empty_cochain(variant: Variant, eps: u8) -> Cochain {
    Cochain::single(variant, Cell::with_eps(vec![], eps))
}

/// Representative of a monomial whose blocks are single generators: the chain transfer of
/// their generator cochains.
pub fn monomial_cochain(m: &Monomial) -> Option<Cochain> {
    let mut out = empty_cochain(Variant::B, 0);
    for b in m.blocks() {
        out = odot_cochains(Variant::B, &out, &block_cochain(b)?).ok()?;
    }
    Some(out)
}

fn element_cochain(x: &ElementB, n: usize) -> Option<Cochain> {
    let mut out = Cochain::zero(Variant::B, n);
    for m in x.terms() {
        out = out.add(&monomial_cochain(m)?);
    }
    Some(out)
}

/// Representative on `FN'`: neutral classes are restrictions, signed ones transfers of the
/// charged generator cochains with the charge carried by one factor.
pub fn charged_cochain(m: &ChargedMonomial) -> Option<Cochain> {
    match m.charge() {
        Charge::Neutral => Some(fx::rho_chain(&monomial_cochain(m.base())?)),
        c => {
            let minus = c == Charge::Minus;
            let mut out = empty_cochain(Variant::Dprime, 0);
            let blocks = m.base().blocks();
            if blocks.is_empty() {
                return Some(empty_cochain(Variant::Dprime, minus as u8));
            }
            for (i, b) in blocks.iter().enumerate() {
                if steenrod::block_height(b) != 1 || !b.has_gamma() {
                    return None;
                }
                let (k, w) = (b.scale(), (b.width >> b.scale()) as usize);
                let g = if minus && i == 0 { FnGenerator::GMinus(k, w) } else { FnGenerator::GPlus(k, w) };
                let c = fx::phi_cochain(&fx::generator_cochain(g).ok()?);
                out = odot_cochains(Variant::Dprime, &out, &c).ok()?;
            }
            Some(out)
        }
    }
}

fn element_d_cochain(x: &ElementD, n: usize) -> Option<Cochain> {
    let mut out = Cochain::zero(Variant::Dprime, n);
    for m in x.terms() {
        out = out.add(&charged_cochain(m)?);
    }
    Some(out)
}

fn chain_coproduct(x: &Cochain) -> Result<BTreeMap<usize, TensorCochain>, fx::FnError> {
    let mut out: BTreeMap<usize, TensorCochain> = BTreeMap::new();
    for c in &x.cells {
        for (a, b) in fx::delta_chain(x.variant, c)? {
            let t = out.entry(a.n()).or_insert_with(|| TensorCochain::zero(x.variant, a.n(), b.n()));
            t.toggle((a, b));
        }
    }
    Ok(out)
}

fn compare_coproduct(
    r: &mut Report,
    label: &str,
    chain: &Cochain,
    ring: impl Iterator<Item = (Option<Cochain>, Option<Cochain>)>,
) {
    let n = chain.n;
    let chain_parts = match chain_coproduct(chain) {
        Ok(p) => p,
        Err(e) => {
            r.failures.push(format!("{label}: {e}"));
            return;
        }
    };
    let mut ring_parts: BTreeMap<usize, TensorCochain> = BTreeMap::new();
    for (a, b) in ring {
        let (Some(a), Some(b)) = (a, b) else {
            r.notes.push(format!("{label}: coproduct term without a generator representative"));
            return;
        };
        ring_parts.entry(a.n).or_insert_with(|| TensorCochain::zero(chain.variant, a.n, b.n)).add_product(&a, &b);
    }
    for k in 0..=n {
        let z = TensorCochain::zero(chain.variant, k, n - k);
        let c = chain_parts.get(&k).unwrap_or(&z);
        let g = ring_parts.get(&k).unwrap_or(&z);
        let ok = fx::same_class_tensor(c, g).unwrap_or(false);
        r.check(ok, || format!("{label}: coproduct part ({k}, {}) differs from the chain computation", n - k));
    }
}

fn b_generators(max_n: u32) -> Vec<(String, ElementB, FnGenerator)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("d{n}"), ElementB::delta(n), FnGenerator::Delta(n as usize)));
        out.push((format!("u{n}"), ElementB::unit(n), FnGenerator::Unit(n as usize)));
    }
    for k in 1..=max_n.ilog2() {
        for m in 1..=(max_n >> k) {
            out.push((format!("g{k}_{m}"), ElementB::gamma(k, m), FnGenerator::Gamma(k, m as usize)));
        }
    }
    out
}

fn d_generators(max_n: u32) -> Vec<(String, ElementD)> {
    let mut out = vec![("e+".to_string(), ElementD::one()), ("e-".to_string(), ElementD::one_minus())];
    for k in 1..=max_n.ilog2() {
        for m in 1..=(max_n >> k) {
            out.push((format!("G+{k}_{m}"), ElementD::gamma_plus(k, m)));
            out.push((format!("G-{k}_{m}"), ElementD::gamma_minus(k, m)));
        }
    }
    for n in 2..=max_n {
        for m in 0..=(max_n - n) {
            out.push((format!("D{n}_{m}"), ElementD::delta0(n, m)));
        }
    }
    for n in 1..=max_n {
        out.push((format!("U{n}"), ElementD::unit(n)));
    }
    out
}

fn component_of_d(x: &ElementD) -> u32 {
    x.terms().next().map(|m| m.component()).unwrap_or(0)
}

/// Generator cochains are cocycles, and the ring-level coproduct and transfer of generators
/// agree with the chain-level ones up to coboundaries, on `FN` and on `FN'`.
pub fn chain_oracle(max_n: u32) -> Report {
    let mut r = Report::new("chain level");
    let gens = b_generators(max_n);
    for (label, x, g) in &gens {
        let c = match fx::generator_cochain(*g) {
            Ok(c) => c,
            Err(e) => {
                r.failures.push(format!("{label}: {e}"));
                continue;
            }
        };
        r.check(fx::is_cocycle(&c).unwrap_or(false), || format!("{label} is not a cocycle"));
        let ring = x.coproduct();
        let terms = ring.terms().map(|(a, b)| (monomial_cochain(a), monomial_cochain(b))).collect::<Vec<_>>();
        compare_coproduct(&mut r, label, &c, terms.into_iter());
    }
    for (i, (la, x, ga)) in gens.iter().enumerate() {
        for (lb, y, gb) in &gens[i..] {
            let n = component_b(x) + component_b(y);
            if n > max_n {
                continue;
            }
            let (Ok(cx), Ok(cy)) = (fx::generator_cochain(*ga), fx::generator_cochain(*gb)) else { continue };
            let Ok(chain) = odot_cochains(Variant::B, &cx, &cy) else { continue };
            let prod = x.odot(y);
            match element_cochain(&prod, n as usize) {
                Some(ring) => {
                    let ok = fx::same_class(&chain, &ring).unwrap_or(false);
                    r.check(ok, || format!("{la} o {lb} = {prod} differs from the chain transfer"));
                }
                None => r.notes.push(format!("{la} o {lb}: no representative for {prod}")),
            }
        }
    }

    let dg = d_generators(max_n);
    for (label, x) in &dg {
        let n = component_of_d(x) as usize;
        let Some(c) = element_d_cochain(x, n) else {
            r.notes.push(format!("{label}: no representative"));
            continue;
        };
        r.check(fx::is_cocycle(&c).unwrap_or(false), || format!("{label} is not a cocycle on FN'"));
        if n == 0 {
            continue;
        }
        let ring = x.coproduct();
        let terms = ring.terms().map(|(a, b)| (charged_cochain(a), charged_cochain(b))).collect::<Vec<_>>();
        compare_coproduct(&mut r, label, &c, terms.into_iter());
    }
    for k in 1..=max_n.ilog2() {
        for m in 1..=(max_n >> k) {
            for plus in [true, false] {
                let g = if plus { FnGenerator::GPlus(k, m as usize) } else { FnGenerator::GMinus(k, m as usize) };
                if let Ok(c) = fx::generator_cochain(g) {
                    r.check(fx::is_cocycle(&c).unwrap_or(false), || format!("{g:?} is not a cocycle on FN_D"));
                }
            }
        }
    }
    for (i, (la, x)) in dg.iter().enumerate() {
        for (lb, y) in &dg[i..] {
            let n = (component_of_d(x) + component_of_d(y)) as usize;
            if n > max_n as usize {
                continue;
            }
            let (Some(cx), Some(cy)) = (element_d_cochain(x, component_of_d(x) as usize), element_d_cochain(y, component_of_d(y) as usize)) else {
                continue;
            };
            let Ok(chain) = odot_cochains(Variant::Dprime, &cx, &cy) else { continue };
            let prod = x.odot(y);
            match element_d_cochain(&prod, n) {
                Some(ring) => {
                    let ok = fx::same_class(&chain, &ring).unwrap_or(false);
                    r.check(ok, || format!("{la} o {lb} = {prod} differs from the chain transfer"));
                }
                None => r.notes.push(format!("{la} o {lb}: no representative for {prod}")),
            }
        }
    }
    r
}

fn component_b(x: &ElementB) -> u32 {
    x.terms().next().map(|m| m.component()).unwrap_or(0)
}

pub fn oracle(max_n: u32, max_deg: u32) -> Report {
    let mut r = Report::new("oracle");
    r.merge(quillen_oracle(max_n.min(4), max_n, max_deg));
    r.merge(chain_oracle(max_n.min(4)));
    r
}

// ---- Steenrod squares ----

fn sum_b(xs: impl Iterator<Item = ElementB>) -> ElementB {
    xs.fold(ElementB::zero(), |acc, x| acc.add(&x))
}

fn sq_or_fail(r: &mut Report, i: u32, x: &ElementB) -> Option<ElementB> {
    match steenrod::sq(i, x) {
        Ok(y) => Some(y),
        Err(e) => {
            r.failures.push(format!("Sq^{i}({x}): {e}"));
            None
        }
    }
}

/// Laws of the squares on basis monomials in components up to `max_n`, and the closed forms
/// for the generators of width at most `max_width`.
pub fn steenrod_suite(max_n: u32, max_deg: u32, max_width: u32) -> Report {
    let mut r = Report::new("steenrod");
    for n in 1..=max_n {
        for d in 0..=max_deg {
            for m in hopf_b::basis(n, d) {
                let x = ElementB::from(m.clone());
                if let Some(y) = sq_or_fail(&mut r, 0, &x) {
                    r.check(y == x, || format!("Sq^0({x}) = {y}"));
                }
                if let Some(y) = sq_or_fail(&mut r, d, &x) {
                    r.check(y == x.cup(&x), || format!("Sq^{d}({x}) = {y}"));
                }
                for i in 0..=d {
                    let lhs = steenrod::sq(i, &x).map(|y| hopf_d::rho(&y));
                    let rhs = steenrod::sq_d(i, &hopf_d::rho(&x));
                    r.check(lhs.is_ok() && lhs == rhs, || format!("rho Sq^{i}({x}) != Sq^{i} rho({x})"));
                }
            }
        }
    }
    // Cartan formulas on pairs of basis monomials
    let cartan_deg = max_deg.min(3);
    for n in 1..=max_n {
        let mons: Vec<Monomial> = (0..=cartan_deg).flat_map(|d| hopf_b::basis(n, d)).collect();
        for (i, a) in mons.iter().enumerate() {
            for b in &mons[i..] {
                let (x, y) = (ElementB::from(a.clone()), ElementB::from(b.clone()));
                let xy = x.cup(&y);
                let top = a.degree() + b.degree();
                for s in 0..=top {
                    let Some(lhs) = sq_or_fail(&mut r, s, &xy) else { continue };
                    let rhs = sum_b((0..=s).map(|j| {
                        let p = steenrod::sq(j, &x).unwrap_or_default();
                        let q = steenrod::sq(s - j, &y).unwrap_or_default();
                        p.cup(&q)
                    }));
                    r.check(lhs == rhs, || format!("Cartan (cup) Sq^{s}(({x}) * ({y}))"));
                }
            }
        }
    }
    for n in 2..=max_n {
        for a in 1..n {
            let left: Vec<Monomial> = (0..=cartan_deg).flat_map(|d| hopf_b::basis(a, d)).collect();
            let right: Vec<Monomial> = (0..=cartan_deg).flat_map(|d| hopf_b::basis(n - a, d)).collect();
            for p in &left {
                for q in &right {
                    let (x, y) = (ElementB::from(p.clone()), ElementB::from(q.clone()));
                    let xy = x.odot(&y);
                    for s in 0..=(p.degree() + q.degree()) {
                        let Some(lhs) = sq_or_fail(&mut r, s, &xy) else { continue };
                        let rhs = sum_b((0..=s).map(|j| {
                            let u = steenrod::sq(j, &x).unwrap_or_default();
                            let v = steenrod::sq(s - j, &y).unwrap_or_default();
                            u.odot(&v)
                        }));
                        r.check(lhs == rhs, || format!("Cartan (transfer) Sq^{s}(({x}) o ({y}))"));
                    }
                }
            }
        }
    }
    // closed forms
    match steenrod::gamma_discrepancies(max_width) {
        Ok((count, found)) => {
            r.checks += count;
            for d in found {
                let n = d.generator.rsplit('_').next().and_then(|s| s.parse::<u32>().ok()).unwrap_or(0);
                if n.is_power_of_two() {
                    r.failures.push(format!("closed form: {d}"));
                } else {
                    r.notes.push(format!("closed form outside the stated range gamma_(k,2^n): {d}"));
                }
            }
        }
        Err(e) => r.failures.push(format!("closed forms: {e}")),
    }
    for k in 1..=max_n.ilog2() {
        for m in 1..=(max_n >> k) {
            let deg = Block::gamma(k, m).degree();
            for i in 0..=deg {
                for plus in [true, false] {
                    let g = if plus { ElementD::gamma_plus(k, m) } else { ElementD::gamma_minus(k, m) };
                    let closed = steenrod::sq_d_closed(k, m, i, plus);
                    match steenrod::sq_d(i, &g) {
                        Ok(p) => {
                            let sign = if plus { '+' } else { '-' };
                            r.check(p == closed, || format!("closed form Sq^{i} G{sign}{k}_{m}: pullback {p}, closed form {closed}"))
                        }
                        Err(e) => r.failures.push(format!("Sq^{i} of a charged generator: {e}")),
                    }
                }
            }
        }
    }
    for threshold in [1, 0] {
        match steenrod::delta_discrepancies(max_width, threshold) {
            Ok((count, found)) => {
                r.notes.push(format!(
                    "delta closed form with effective scale >= {threshold}: {} of {count} comparisons disagree",
                    found.len()
                ));
                for d in found.iter().take(2) {
                    r.notes.push(format!("  {d}"));
                }
            }
            Err(e) => r.failures.push(format!("delta closed forms: {e}")),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_passes() {
        assert!(figure().passed(), "{}", figure());
    }

    #[test]
    fn witness_fails_the_bialgebra_law() {
        let r = witness_report();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn representatives_of_simple_monomials() {
        let m = Monomial::block(Block::gamma(1, 1));
        assert_eq!(monomial_cochain(&m).unwrap().cells.len(), 1);
        let sq = Monomial::block(Block::gamma(1, 1).stack(&Block::gamma(1, 1)));
        assert!(monomial_cochain(&sq).is_none());
    }
}
