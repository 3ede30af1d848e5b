//! Steenrod squares, pulled back through the restrictions to elementary abelian subgroups,
//! and the closed-form descriptions of the squares of the generators as basis filters.

use std::fmt;

use crate::hopf_b::{self, Block, ElementB, Monomial};
use crate::hopf_d::{self, Charge, ElementD};
use crate::quillen::{self, QuillenError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialStats {
    /// Largest number of generators cup-multiplied in one block.
    pub height: u32,
    /// Smallest scale among the blocks: a block of scale `s` restricts non-trivially to
    /// `B_{2^l}^{w/2^l}` exactly when `l >= s`.
    pub effective_scale: u32,
    pub full_width: bool,
}

pub fn block_height(b: &Block) -> u32 {
    b.profile().iter().sum()
}

pub fn stats(m: &Monomial) -> MonomialStats {
    MonomialStats {
        height: m.blocks().iter().map(block_height).max().unwrap_or(0),
        effective_scale: m.blocks().iter().map(|b| b.scale()).min().unwrap_or(0),
        full_width: m.blocks().iter().all(|b| !b.is_unit()),
    }
}

/// `Sq^i` on `A_B`, computed sitewise and solved back.
pub fn sq(i: u32, x: &ElementB) -> Result<ElementB, QuillenError> {
    let mut out = ElementB::zero();
    let comps: std::collections::BTreeSet<(u32, u32)> = x.terms().map(|m| (m.component(), m.degree())).collect();
    for (n, d) in comps {
        let part = x.part(n, d);
        if i > d {
            continue;
        }
        if n == 0 {
            if i == 0 {
                out.add_assign(&part);
            }
            continue;
        }
        let fam = quillen::quillen_map_b(&part, n)?.map(|p| p.sq_component(i));
        out.add_assign(&quillen::quillen_solve_b(&fam, d + i)?);
    }
    Ok(out)
}

/// `Sq^i` on `A'_D`; the classes `1^+`, `1^-` of degree zero are fixed by `Sq^0` only.
pub fn sq_d(i: u32, x: &ElementD) -> Result<ElementD, QuillenError> {
    let mut out = ElementD::zero();
    let comps: std::collections::BTreeSet<(u32, u32)> = x.terms().map(|m| (m.component(), m.degree())).collect();
    for (n, d) in comps {
        let part = x.part(n, d);
        if i > d {
            continue;
        }
        if n == 0 || i == 0 {
            out.add_assign(&part);
            continue;
        }
        let fam = quillen::quillen_map_d(&part, n)?.map(|p| p.sq_component(i));
        out.add_assign(&quillen::quillen_solve_d(&fam, d + i)?);
    }
    Ok(out)
}

fn gamma_filter(m: &Monomial, k: u32) -> bool {
    let s = stats(m);
    s.full_width && s.height <= 2 && s.effective_scale >= k && m.blocks().iter().all(|b| b.t(0) == 0)
}

/// Full-width monomials of the right degree with height at most 2, effective scale at least
/// `k` and no delta factor.
pub fn closed_form_sq_gamma(k: u32, n: u32, i: u32) -> ElementB {
    let g = Block::gamma(k, n);
    ElementB::from_monomials(hopf_b::basis(g.width, g.degree() + i).into_iter().filter(|m| gamma_filter(m, k)))
}

/// Full-width monomials of degree `n + i` with height at most 2, effective scale at least
/// `min_scale`, and a delta factor in every block. The printed threshold is 1; pure-delta
/// blocks have scale 0, so only `min_scale = 0` can produce the Wu-formula answer.
pub fn closed_form_sq_delta(n: u32, i: u32, min_scale: u32) -> ElementB {
    ElementB::from_monomials(hopf_b::basis(n, n + i).into_iter().filter(|m| {
        let s = stats(m);
        s.full_width && s.height <= 2 && s.effective_scale >= min_scale && m.blocks().iter().all(|b| b.t(0) > 0)
    }))
}

/// The charged version of the gamma filter over the basis of `A'_D`.
pub fn sq_d_closed(k: u32, n: u32, i: u32, plus: bool) -> ElementD {
    let g = Block::gamma(k, n);
    let want = if plus { Charge::Plus } else { Charge::Minus };
    ElementD::from_monomials(
        hopf_d::basis_d(g.width, g.degree() + i)
            .into_iter()
            .filter(|m| m.charge() == want && gamma_filter(m.base(), k)),
    )
}

/// A closed form that disagrees with the pulled-back square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub generator: String,
    pub i: u32,
    pub closed_form: ElementB,
    pub pullback: ElementB,
    pub only_closed: Vec<Monomial>,
    pub only_pullback: Vec<Monomial>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Monomial]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "Sq^{} {}: closed form has [{}] extra, pullback has [{}] extra",
            self.i,
            self.generator,
            show(&self.only_closed),
            show(&self.only_pullback)
        )
    }
}

fn compare(generator: String, i: u32, closed: ElementB, pullback: ElementB) -> Option<Discrepancy> {
    if closed == pullback {
        return None;
    }
    let only_closed = closed.terms().filter(|m| !pullback.terms().any(|p| p == *m)).cloned().collect();
    let only_pullback = pullback.terms().filter(|m| !closed.terms().any(|p| p == *m)).cloned().collect();
    Some(Discrepancy { generator, i, closed_form: closed, pullback, only_closed, only_pullback })
}

/// Compare the closed forms for every `gamma_{k,n}` with `n 2^k <= max_width` and every
/// `i <= deg`; returns the number of comparisons and the mismatches.
pub fn gamma_discrepancies(max_width: u32) -> Result<(usize, Vec<Discrepancy>), QuillenError> {
    let mut count = 0;
    let mut out = Vec::new();
    for k in 1..=max_width.checked_ilog2().unwrap_or(0) {
        for n in 1..=(max_width >> k) {
            let g = ElementB::gamma(k, n);
            let deg = Block::gamma(k, n).degree();
            for i in 0..=deg {
                count += 1;
                let pulled = sq(i, &g)?;
                out.extend(compare(format!("g{k}_{n}"), i, closed_form_sq_gamma(k, n, i), pulled));
            }
        }
    }
    Ok((count, out))
}

/// The same comparison for `delta_{2^j}` with `2^j <= max_width`.
pub fn delta_discrepancies(max_width: u32, min_scale: u32) -> Result<(usize, Vec<Discrepancy>), QuillenError> {
    let mut count = 0;
    let mut out = Vec::new();
    let mut n = 1;
    while n <= max_width {
        for i in 0..=n {
            count += 1;
            let pulled = sq(i, &ElementB::delta(n))?;
            out.extend(compare(format!("d{n}"), i, closed_form_sq_delta(n, i, min_scale), pulled));
        }
        n *= 2;
    }
    Ok((count, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_of_small_classes() {
        let d1 = ElementB::delta(1);
        assert_eq!(sq(0, &d1).unwrap(), d1);
        assert_eq!(sq(1, &d1).unwrap(), d1.cup(&d1));
        assert!(sq(2, &d1).unwrap().is_zero());
        let d2 = ElementB::delta(2);
        let want = d2.cup(&ElementB::gamma(1, 1)).add(&d1.cup(&d1).odot(&d1));
        assert_eq!(sq(1, &d2).unwrap(), want);
    }

    #[test]
    fn closed_forms_for_gamma_1_1() {
        let g = ElementB::gamma(1, 1);
        assert_eq!(closed_form_sq_gamma(1, 1, 1), g.cup(&g));
        assert_eq!(closed_form_sq_gamma(1, 1, 0), g);
        assert_eq!(closed_form_sq_gamma(2, 1, 0), ElementB::gamma(2, 1));
    }

    #[test]
    fn stats_of_a_block() {
        let m = Monomial::block(Block::new(4, vec![1, 0, 1]).unwrap());
        assert_eq!(stats(&m), MonomialStats { height: 2, effective_scale: 2, full_width: true });
    }

    #[test]
    fn charged_squares_split_the_restricted_square() {
        for i in 0..=1 {
            let p = sq_d(i, &ElementD::gamma_plus(1, 1)).unwrap();
            let m = sq_d(i, &ElementD::gamma_minus(1, 1)).unwrap();
            let r = hopf_d::rho(&sq(i, &ElementB::gamma(1, 1)).unwrap());
            assert_eq!(p.add(&m), r);
            assert_eq!(p, sq_d_closed(1, 1, i, true));
        }
    }
}
