//! Signed permutations: the groups `B_n` and `D_n`, lengths, parabolic subgroups and
//! minimal coset representatives.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxType {
    B,
    D,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("element is not in D_{0}")]
    NotInD(usize),
    #[error("parabolic subgroup exceeds the cap of {0} elements")]
    CapExceeded(usize),
    #[error("generator set is not contained in the ambient one")]
    NotSubset,
    #[error("D_n needs n >= 2, got {0}")]
    RankTooSmall(usize),
}

pub const ELEMENT_CAP: usize = 1 << 20;

/// `images[i]` is the signed image of `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    images: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { images: (1..=n as i8).collect() }
    }

    pub fn from_images(images: Vec<i8>) -> Self {
        let n = images.len() as i8;
        let mut seen: Vec<bool> = vec![false; images.len()];
        for &v in &images {
            assert!(v != 0 && v.abs() <= n, "image out of range");
            assert!(!seen[(v.unsigned_abs() - 1) as usize], "not a permutation");
            seen[(v.unsigned_abs() - 1) as usize] = true;
        }
        SignedPerm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i8] {
        &self.images
    }

    pub fn apply(&self, i: i8) -> i8 {
        let v = self.images[(i.unsigned_abs() - 1) as usize];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        SignedPerm { images: other.images.iter().map(|&i| self.apply(i)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0i8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            let src = (i + 1) as i8;
            inv[(v.unsigned_abs() - 1) as usize] = if v < 0 { -src } else { src };
        }
        SignedPerm { images: inv }
    }

    pub fn negatives(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    pub fn in_d(&self) -> bool {
        self.negatives() % 2 == 0
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i8 + 1)
    }
}

/// Standard generators: `s_0` negates 1 and `s_i` swaps `i, i+1` in type B;
/// type D replaces `s_0` by `t_0 = s_0 s_1 s_0`, sending `(1, 2)` to `(-2, -1)`.
pub fn generator(ty: CoxType, n: usize, i: usize) -> SignedPerm {
    assert!(i < n, "generator index out of range");
    let mut im: Vec<i8> = (1..=n as i8).collect();
    if i == 0 {
        match ty {
            CoxType::B => im[0] = -1,
            CoxType::D => {
                assert!(n >= 2);
                im[0] = -2;
                im[1] = -1;
            }
        }
    } else {
        im.swap(i - 1, i);
    }
    SignedPerm { images: im }
}

pub fn generators(ty: CoxType, n: usize) -> Vec<SignedPerm> {
    (0..n).map(|i| generator(ty, n, i)).collect()
}

/// Subset of generator indices, as a bitmask.
pub type GenSet = u32;

pub fn genset(indices: &[usize]) -> GenSet {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn genset_indices(g: GenSet) -> Vec<usize> {
    (0..32).filter(|i| g >> i & 1 == 1).collect()
}

/// Elements of the parabolic subgroup with their lengths, found by BFS on the Cayley graph.
/// For a parabolic subgroup its own word length agrees with the ambient Coxeter length.
pub fn parabolic_with_lengths(
    ty: CoxType,
    n: usize,
    gens: GenSet,
    cap: usize,
) -> Result<Vec<(SignedPerm, u32)>, CoxeterError> {
    if ty == CoxType::D && n < 2 {
        return Err(CoxeterError::RankTooSmall(n));
    }
    let gs: Vec<SignedPerm> = genset_indices(gens).into_iter().map(|i| generator(ty, n, i)).collect();
    let id = SignedPerm::identity(n);
    let mut dist: HashMap<SignedPerm, u32> = HashMap::new();
    dist.insert(id.clone(), 0);
    let mut order = vec![(id.clone(), 0)];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for s in &gs {
            let ws = w.compose(s);
            if !dist.contains_key(&ws) {
                if dist.len() >= cap {
                    return Err(CoxeterError::CapExceeded(cap));
                }
                dist.insert(ws.clone(), d + 1);
                order.push((ws.clone(), d + 1));
                queue.push_back(ws);
            }
        }
    }
    Ok(order)
}

pub fn parabolic(ty: CoxType, n: usize, gens: GenSet) -> Result<BTreeSet<SignedPerm>, CoxeterError> {
    Ok(parabolic_with_lengths(ty, n, gens, ELEMENT_CAP)?.into_iter().map(|(w, _)| w).collect())
}

type LengthTable = Arc<HashMap<SignedPerm, u32>>;

fn length_table(ty: CoxType, n: usize) -> Result<LengthTable, CoxeterError> {
    static CACHE: OnceLock<Mutex<HashMap<(CoxType, usize), LengthTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(ty, n)) {
        return Ok(t.clone());
    }
    let all = (1u32 << n) - 1;
    let table: LengthTable = Arc::new(parabolic_with_lengths(ty, n, all, ELEMENT_CAP)?.into_iter().collect());
    cache.lock().unwrap().insert((ty, n), table.clone());
    Ok(table)
}

/// Coxeter length, as distance from the identity in the full Cayley graph.
pub fn length(w: &SignedPerm, ty: CoxType) -> Result<u32, CoxeterError> {
    if ty == CoxType::D && !w.in_d() {
        return Err(CoxeterError::NotInD(w.n()));
    }
    let table = length_table(ty, w.n())?;
    Ok(table[w])
}

/// One representative per left coset `w W_{T'}` of `W_{T'}` in `W_T`, the one of minimal
/// `(length, images)`; these are exactly the `w` with `l(ws) > l(w)` for all `s` in `T'`.
pub fn min_coset_reps(
    t: GenSet,
    t_sub: GenSet,
    ty: CoxType,
    n: usize,
) -> Result<Vec<SignedPerm>, CoxeterError> {
    static CACHE: OnceLock<Mutex<HashMap<(CoxType, usize, GenSet, GenSet), Arc<Vec<SignedPerm>>>>> =
        OnceLock::new();
    if t_sub & !t != 0 {
        return Err(CoxeterError::NotSubset);
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(ty, n, t, t_sub)) {
        return Ok((**v).clone());
    }
    let big = parabolic_with_lengths(ty, n, t, ELEMENT_CAP)?;
    let small: Vec<SignedPerm> = parabolic_with_lengths(ty, n, t_sub, ELEMENT_CAP)?.into_iter().map(|(w, _)| w).collect();
    let mut sorted = big;
    sorted.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.images.cmp(&b.0.images)));
    let mut covered: std::collections::HashSet<SignedPerm> = Default::default();
    let mut reps = Vec::new();
    for (w, _) in sorted {
        if covered.contains(&w) {
            continue;
        }
        for u in &small {
            covered.insert(w.compose(u));
        }
        reps.push(w);
    }
    cache.lock().unwrap().insert((ty, n, t, t_sub), Arc::new(reps.clone()));
    Ok(reps)
}

/// `beta^{-1} Gamma beta`, provided every conjugate is again a standard generator.
pub fn conjugate_genset(beta: &SignedPerm, gamma: GenSet, ty: CoxType) -> Option<GenSet> {
    let n = beta.n();
    let inv = beta.inverse();
    let gens = generators(ty, n);
    let mut out = 0;
    for i in genset_indices(gamma) {
        let c = inv.compose(&gens[i]).compose(beta);
        let j = gens.iter().position(|g| *g == c)?;
        out |= 1 << j;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_in_b2() {
        let id = SignedPerm::identity(2);
        assert_eq!(length(&id, CoxType::B).unwrap(), 0);
        assert_eq!(length(&generator(CoxType::B, 2, 1), CoxType::B).unwrap(), 1);
        let longest = SignedPerm::from_images(vec![-1, -2]);
        assert_eq!(length(&longest, CoxType::B).unwrap(), 4);
        assert_eq!(length(&generator(CoxType::B, 2, 0), CoxType::D), Err(CoxeterError::NotInD(2)));
    }

    #[test]
    fn parabolic_sizes() {
        assert_eq!(parabolic(CoxType::B, 3, 0).unwrap().len(), 1);
        assert_eq!(parabolic(CoxType::B, 2, 0b11).unwrap().len(), 8);
        assert_eq!(parabolic(CoxType::B, 3, genset(&[1])).unwrap().len(), 2);
        assert_eq!(parabolic(CoxType::D, 4, 0b1111).unwrap().len(), 192);
        assert_eq!(
            parabolic_with_lengths(CoxType::B, 4, 0b1111, 10),
            Err(CoxeterError::CapExceeded(10))
        );
    }

    #[test]
    fn coset_rep_counts() {
        assert_eq!(min_coset_reps(0b11, 0b11, CoxType::B, 2).unwrap(), vec![SignedPerm::identity(2)]);
        assert_eq!(min_coset_reps(0b11, 0b10, CoxType::B, 2).unwrap().len(), 4);
        assert_eq!(min_coset_reps(0b11, 0, CoxType::B, 2).unwrap().len(), 8);
        assert!(min_coset_reps(0b01, 0b10, CoxType::B, 2).is_err());
    }

    #[test]
    fn conjugation_of_generators() {
        let id = SignedPerm::identity(3);
        assert_eq!(conjugate_genset(&id, 0b101, CoxType::B), Some(0b101));
        let s0 = generator(CoxType::B, 4, 0);
        assert_eq!(conjugate_genset(&s0, genset(&[0]), CoxType::D), Some(genset(&[1])));
        assert_eq!(conjugate_genset(&s0, genset(&[1]), CoxType::D), Some(genset(&[0])));
        assert_eq!(conjugate_genset(&s0, genset(&[2, 3]), CoxType::D), Some(genset(&[2, 3])));
        let s1 = generator(CoxType::B, 3, 1);
        assert_eq!(conjugate_genset(&s1, genset(&[0]), CoxType::B), None);
    }
}
