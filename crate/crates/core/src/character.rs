//! Exact characters: Freudenthal multiplicities, the Weyl dimension formula,
//! character-ring arithmetic, plethysms and decomposition into irreducibles.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::cache::CacheKey;
use crate::error::{Error, Result};
use crate::lie::{Limits, RootSystem, Subsystem, Weight};

/// Finitely supported map from weights to integer multiplicities. Zero
/// multiplicities are never stored. Negative multiplicities are allowed
/// (virtual characters).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    rank: usize,
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn zero(rank: usize) -> Self {
        Character {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The character of the trivial one-dimensional module.
    pub fn trivial(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), 1)
    }

    pub fn monomial(w: Weight, mult: i64) -> Self {
        let mut c = Self::zero(w.rank());
        if mult != 0 {
            c.terms.insert(w, mult);
        }
        c
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Weight, i64)>) -> Result<Self> {
        let mut c = Self::zero(rank);
        for (w, m) in terms {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: w.rank(),
                });
            }
            c.add_term(w, m)?;
        }
        Ok(c)
    }

    fn add_term(&mut self, w: Weight, m: i64) -> Result<()> {
        if m == 0 {
            return Ok(());
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(m);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().checked_add(m).ok_or(Error::Overflow)?;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Terms in ascending lexicographic weight order.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> + '_ {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    /// Sum of all multiplicities (the dimension, for a genuine character).
    pub fn total(&self) -> i128 {
        self.terms.values().map(|&m| m as i128).sum()
    }

    pub fn is_genuine(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    fn check_rank(&self, other: &Character) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Character) -> Result<Character> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, &m) in &other.terms {
            out.add_term(w.clone(), m)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Character) -> Result<Character> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, &m) in &other.terms {
            out.add_term(w.clone(), m.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<Character> {
        if k == 0 {
            return Ok(Self::zero(self.rank));
        }
        let mut out = self.clone();
        for m in out.terms.values_mut() {
            *m = m.checked_mul(k).ok_or(Error::Overflow)?;
        }
        Ok(out)
    }

    /// Convolution product, i.e. the character of the tensor product.
    pub fn checked_mul(&self, other: &Character, max_support: usize) -> Result<Character> {
        self.check_rank(other)?;
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(self.rank);
        for (w1, &m1) in &small.terms {
            for (w2, &m2) in &big.terms {
                out.add_term(w1 + w2, m1.checked_mul(m2).ok_or(Error::Overflow)?)?;
            }
            if out.len() > max_support {
                return Err(Error::GuardrailExceeded { limit: max_support });
            }
        }
        Ok(out)
    }

    /// Multiplies by the one-dimensional character `e^w`.
    pub fn shift(&self, w: &Weight) -> Character {
        Character {
            rank: self.rank,
            terms: self.terms.iter().map(|(v, &m)| (v + w, m)).collect(),
        }
    }

    /// Character of the dual module: every weight negated.
    pub fn dual(&self) -> Character {
        Character {
            rank: self.rank,
            terms: self.terms.iter().map(|(v, &m)| (-v, m)).collect(),
        }
    }

    /// Adams operation `ψ^k`: every weight scaled by `k`. `ψ^0` collapses the
    /// character to its total multiplicity at weight zero.
    pub fn adams(&self, k: u32) -> Result<Character> {
        if k == 0 {
            let total = i64::try_from(self.total()).map_err(|_| Error::Overflow)?;
            return Ok(Self::monomial(Weight::zero(self.rank), total));
        }
        let k = i32::try_from(k).map_err(|_| Error::Overflow)?;
        let mut terms = BTreeMap::new();
        for (w, &m) in &self.terms {
            terms.insert(w.checked_scale(k)?, m);
        }
        Ok(Character { rank: self.rank, terms })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharOp {
    Add,
    Sub,
    Mul,
    /// Multiply every multiplicity of the first operand; the second is ignored.
    Scale(i64),
}

pub fn char_arith(a: &Character, b: &Character, op: CharOp, limits: &Limits) -> Result<Character> {
    let out = match op {
        CharOp::Add => a.checked_add(b)?,
        CharOp::Sub => a.checked_sub(b)?,
        CharOp::Mul => a.checked_mul(b, limits.max_support)?,
        CharOp::Scale(k) => a.scale(k)?,
    };
    if out.len() > limits.max_support {
        return Err(Error::GuardrailExceeded {
            limit: limits.max_support,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PowerKind {
    Wedge,
    Sym,
    Adams,
}

/// Exterior powers, symmetric powers and Adams operations, the first two via
/// the Newton identities
/// `k·e_k = Σ_{i=1..k} (−1)^{i−1} ψ^i · e_{k−i}` and
/// `k·h_k = Σ_{i=1..k} ψ^i · h_{k−i}`.
pub fn power_op(c: &Character, k: u32, kind: PowerKind, limits: &Limits) -> Result<Character> {
    if kind == PowerKind::Adams {
        return c.adams(k);
    }
    if c.terms.values().any(|&m| m < 0) {
        return Err(Error::NotGenuine);
    }
    let adams: Vec<Character> = (1..=k).map(|i| c.adams(i)).collect::<Result<_>>()?;
    let mut powers = vec![Character::trivial(c.rank)];
    for j in 1..=k {
        let mut acc = Character::zero(c.rank);
        for i in 1..=j {
            let term = adams[i as usize - 1].checked_mul(&powers[(j - i) as usize], limits.max_support)?;
            acc = if kind == PowerKind::Wedge && i % 2 == 0 {
                acc.checked_sub(&term)?
            } else {
                acc.checked_add(&term)?
            };
        }
        for m in acc.terms.values_mut() {
            if *m % j as i64 != 0 {
                return Err(Error::NonIntegralPlethysm { k: j });
            }
            *m /= j as i64;
        }
        if acc.len() > limits.max_support {
            return Err(Error::GuardrailExceeded {
                limit: limits.max_support,
            });
        }
        powers.push(acc);
    }
    Ok(powers.pop().unwrap())
}

/// Weyl's product `∏ ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩` over the positive roots of
/// `sub`, for any weight. Signed; zero exactly when `λ+ρ` is singular.
pub fn weyl_polynomial(rs: &RootSystem, sub: &Subsystem, w: &Weight) -> BigInt {
    let d = rs.symmetrizer();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in rs.positive_roots_of(sub) {
        // ⟨μ, α^∨⟩ is proportional to Σ_j c_j d_j μ_j, and the constant
        // cancels between numerator and denominator.
        let mut a = 0i64;
        let mut b = 0i64;
        for (j, &c) in root.coeffs.iter().enumerate() {
            if c != 0 {
                a += c as i64 * d[j] * (w[j] as i64 + 1);
                b += c as i64 * d[j];
            }
        }
        num *= a;
        den *= b;
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Dimension of the irreducible module of `sub` with highest weight `w`.
pub fn weyl_dim(rs: &RootSystem, sub: &Subsystem, w: &Weight) -> Result<BigUint> {
    rs.check_rank(w.rank())?;
    if !rs.is_dominant(sub, w) {
        return Err(Error::NotDominant(w.clone()));
    }
    Ok(weyl_polynomial(rs, sub, w).magnitude().clone())
}

/// Character of the irreducible module of `sub` with highest weight `w`,
/// with weights in ambient coordinates.
pub fn irrep_character(rs: &RootSystem, sub: &Subsystem, w: &Weight) -> Result<Arc<Character>> {
    rs.check_rank(w.rank())?;
    if !rs.is_dominant(sub, w) {
        return Err(Error::NotDominant(w.clone()));
    }
    let key = CacheKey {
        cartan: rs.cartan().entries().clone(),
        sub: sub.clone(),
        highest: w.clone(),
    };
    if let Some(hit) = rs.cache().get(&key) {
        return Ok(hit);
    }
    let chi = Arc::new(freudenthal(rs, sub, w)?);
    rs.cache().insert(key, chi.clone());
    Ok(chi)
}

type Depth = SmallVec<[i32; 8]>;

struct SubRoot {
    /// coefficients on the subsystem's simple roots
    coeffs: Depth,
    /// Σ_t c_t d_t · (coordinate t) gives (μ, α)
    weights: SmallVec<[i64; 8]>,
    norm: i64,
}

/// Freudenthal's recursion over weights `λ − Σ n_t α_t`, generated level by
/// level in the depth `Σ n_t`.
fn freudenthal(rs: &RootSystem, sub: &Subsystem, highest: &Weight) -> Result<Character> {
    let nodes: Vec<usize> = sub.nodes().collect();
    let r = nodes.len();
    let d = rs.symmetrizer();
    let a = rs.cartan();
    let limit = rs.limits().max_support;

    let roots: Vec<SubRoot> = rs
        .positive_roots_of(sub)
        .map(|root| {
            let coeffs: Depth = nodes.iter().map(|&j| root.coeffs[j]).collect();
            let weights: SmallVec<[i64; 8]> = nodes.iter().map(|&j| root.coeffs[j] as i64 * d[j]).collect();
            let norm = nodes
                .iter()
                .enumerate()
                .map(|(t, &j)| weights[t] * root.weight[j] as i64)
                .sum();
            SubRoot { coeffs, weights, norm }
        })
        .collect();

    // (λ+ρ, α_t) and (α_s, α_t)
    let lr: Vec<i64> = nodes.iter().map(|&j| d[j] * (highest[j] as i64 + 1)).collect();
    let gram: Vec<Vec<i64>> = nodes
        .iter()
        .map(|&s| nodes.iter().map(|&t| d[s] * a.get(s, t) as i64).collect())
        .collect();
    let lam: Vec<i64> = nodes.iter().map(|&j| highest[j] as i64).collect();

    let sub_coords = |n: &Depth| -> SmallVec<[i64; 8]> {
        (0..r)
            .map(|t| {
                lam[t]
                    - (0..r)
                        .map(|s| n[s] as i64 * a.get(nodes[t], nodes[s]) as i64)
                        .sum::<i64>()
            })
            .collect()
    };

    let mut mult: BTreeMap<Depth, i64> = BTreeMap::new();
    let origin: Depth = smallvec::smallvec![0; r];
    mult.insert(origin.clone(), 1);
    let mut layer = vec![origin];

    while !layer.is_empty() {
        let candidates: BTreeSet<Depth> = layer
            .iter()
            .flat_map(|n| {
                (0..r).map(move |t| {
                    let mut m = n.clone();
                    m[t] += 1;
                    m
                })
            })
            .collect();
        let mut next = Vec::new();
        for n in candidates {
            let mu = sub_coords(&n);
            let denom: i64 = 2 * (0..r).map(|t| n[t] as i64 * lr[t]).sum::<i64>()
                - (0..r)
                    .flat_map(|s| (0..r).map(move |t| (s, t)))
                    .map(|(s, t)| n[s] as i64 * n[t] as i64 * gram[s][t])
                    .sum::<i64>();
            if denom <= 0 {
                continue;
            }
            let mut numer: i128 = 0;
            for root in &roots {
                let base: i64 = (0..r).map(|t| root.weights[t] * mu[t]).sum();
                let mut k = 1;
                let mut probe = n.clone();
                loop {
                    let mut ok = true;
                    for t in 0..r {
                        probe[t] -= root.coeffs[t];
                        ok &= probe[t] >= 0;
                    }
                    if !ok {
                        break;
                    }
                    if let Some(&m) = mult.get(&probe) {
                        numer += m as i128 * (base + k * root.norm) as i128;
                    }
                    k += 1;
                }
            }
            numer *= 2;
            let denom = denom as i128;
            if numer % denom != 0 {
                return Err(Error::Invalid("Freudenthal recursion produced a non-integer".into()));
            }
            let m = numer / denom;
            if m > 0 {
                mult.insert(n.clone(), i64::try_from(m).map_err(|_| Error::Overflow)?);
                next.push(n);
                if mult.len() > limit {
                    return Err(Error::GuardrailExceeded { limit });
                }
            }
        }
        layer = next;
    }

    let mut terms = BTreeMap::new();
    for (n, m) in mult {
        let mut w = highest.clone();
        for (t, &j) in nodes.iter().enumerate() {
            if n[t] != 0 {
                for (x, y) in w.coords_mut().iter_mut().zip(rs.simple_root(j).coords()) {
                    *x -= n[t] * y;
                }
            }
        }
        terms.insert(w, m);
    }
    Ok(Character { rank: rs.rank(), terms })
}

/// A multiset of irreducibles, listed by highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IrrepSum {
    pub terms: Vec<(Weight, u64)>,
}

impl IrrepSum {
    pub fn single(w: Weight) -> Self {
        IrrepSum { terms: vec![(w, 1)] }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.terms.iter().find(|(v, _)| v == w).map_or(0, |(_, m)| *m)
    }

    /// Sorts by decreasing height, then decreasing lexicographic order.
    pub fn canonicalize(&mut self, rs: &RootSystem) {
        self.terms
            .sort_by(|(a, _), (b, _)| rs.scaled_height(b).cmp(&rs.scaled_height(a)).then_with(|| b.cmp(a)));
    }

    pub fn total_dim(&self, rs: &RootSystem, sub: &Subsystem) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for (w, m) in &self.terms {
            total += weyl_dim(rs, sub, w)? * *m;
        }
        Ok(total)
    }

    pub fn to_character(&self, rs: &RootSystem, sub: &Subsystem) -> Result<Character> {
        let mut out = Character::zero(rs.rank());
        for (w, m) in &self.terms {
            let chi = irrep_character(rs, sub, w)?;
            for (v, k) in chi.iter() {
                let k = k.checked_mul(*m as i64).ok_or(Error::Overflow)?;
                out.add_term(v.clone(), k)?;
            }
        }
        Ok(out)
    }
}

/// Splits a virtual character into irreducibles with signed multiplicities,
/// highest first. Fails if the character is not invariant under the Weyl
/// group of `sub`.
pub fn decompose_virtual(rs: &RootSystem, sub: &Subsystem, c: &Character) -> Result<Vec<(Weight, i64)>> {
    rs.check_rank(c.rank())?;
    let mut remaining: BTreeMap<(i64, Weight), i64> = BTreeMap::new();
    for (w, m) in c.iter() {
        let (_, dom) = rs.make_dominant(sub, w);
        let expected = c.get(&dom);
        if expected != m {
            return Err(Error::NotDecomposable {
                weight: w.clone(),
                mult: m,
            });
        }
        if &dom == w {
            remaining.insert((rs.scaled_height(w), w.clone()), m);
        }
    }
    let mut out = Vec::new();
    while let Some(((_, top), m)) = remaining.pop_last() {
        let chi = irrep_character(rs, sub, &top)?;
        for (v, k) in chi.iter() {
            if v == &top || !rs.is_dominant(sub, v) {
                continue;
            }
            let key = (rs.scaled_height(v), v.clone());
            let delta = k.checked_mul(m).ok_or(Error::Overflow)?;
            let entry = remaining.entry(key).or_insert(0);
            *entry -= delta;
            if *entry == 0 {
                let key = (rs.scaled_height(v), v.clone());
                remaining.remove(&key);
            }
        }
        out.push((top, m));
    }
    Ok(out)
}

/// Decomposes a genuine character into irreducibles of `sub`.
pub fn decompose(rs: &RootSystem, sub: &Subsystem, c: &Character) -> Result<IrrepSum> {
    let parts = decompose_virtual(rs, sub, c)?;
    let mut sum = IrrepSum::default();
    for (w, m) in parts {
        if m < 0 {
            return Err(Error::NotDecomposable { weight: w, mult: m });
        }
        sum.terms.push((w, m as u64));
    }
    sum.canonicalize(rs);
    Ok(sum)
}
