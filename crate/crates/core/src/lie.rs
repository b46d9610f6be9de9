//! Root systems from Cartan matrices, simple reflections, dominance and the
//! dotted action.
//!
//! Everything is expressed in the fundamental-weight basis of the ambient
//! root system: `λ[i] = ⟨λ, α_i^∨⟩`. With the convention
//! `a[i][j] = ⟨α_j, α_i^∨⟩`, the simple root `α_j` has coordinates equal to
//! column `j` of the Cartan matrix. Node indices are 0-based throughout the
//! library.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

use smallvec::SmallVec;

use crate::cache::{CharCache, NoCache};
use crate::error::{Error, Result};

/// Integer coordinates in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(SmallVec<[i32; 8]>);

impl Weight {
    pub fn new(coords: &[i32]) -> Self {
        Weight(SmallVec::from_slice(coords))
    }

    pub fn zero(rank: usize) -> Self {
        Weight(smallvec::smallvec![0; rank])
    }

    /// The fundamental weight `ω_i` (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [i32] {
        &mut self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn checked_scale(&self, k: i32) -> Result<Self> {
        let mut out = self.clone();
        for c in out.0.iter_mut() {
            *c = c.checked_mul(k).ok_or(Error::Overflow)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, k: i32) -> Self {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    /// `self + t·ω_node`.
    pub fn shifted(&self, node: usize, t: i32) -> Self {
        let mut out = self.clone();
        out.0[node] += t;
        out
    }
}

impl Index<usize> for Weight {
    type Output = i32;
    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<i32>> for Weight {
    fn from(v: Vec<i32>) -> Self {
        Weight(SmallVec::from_vec(v))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Square integer matrix with `a[i][j] = ⟨α_j, α_i^∨⟩`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    n: usize,
    entries: Arc<[i32]>,
}

impl fmt::Debug for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl CartanMatrix {
    /// Validates the sign pattern and zero symmetry. Finite type is checked
    /// when the root system is built.
    pub fn new(rows: &[Vec<i32>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        if n > 64 {
            return Err(Error::InvalidCartan(format!("rank {n} exceeds 64")));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        let m = CartanMatrix {
            n,
            entries: entries.into(),
        };
        for i in 0..n {
            if m.get(i, i) != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry ({0},{0}) is not 2",
                    i + 1
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if m.get(i, j) > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({},{}) is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (m.get(i, j) == 0) != (m.get(j, i) == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({0},{1}) and ({1},{0}) disagree on vanishing",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(m)
    }

    /// Simply-laced matrix from an edge list of 0-based node pairs.
    pub fn simply_laced(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![vec![0; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidNode {
                    node: a.max(b),
                    rank: n,
                });
            }
            rows[a][b] = -1;
            rows[b][a] = -1;
        }
        Self::new(&rows)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn entries(&self) -> &Arc<[i32]> {
        &self.entries
    }

    /// Positive integers `d_i` with `d_i a[i][j] = d_j a[j][i]`, so that
    /// `(α_i, α_j) = d_i a[i][j]` is a symmetric form. Normalised so the
    /// entries of each connected component are coprime.
    fn symmetrizer(&self) -> Result<Vec<i64>> {
        let n = self.n;
        let mut d: Vec<Option<Frac>> = vec![None; n];
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(Frac::int(1));
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let di = d[i].unwrap();
                for j in 0..n {
                    if j == i || self.get(i, j) == 0 {
                        continue;
                    }
                    // d_j = d_i a[i][j] / a[j][i]
                    let dj = di.mul(Frac::new(self.get(i, j) as i128, self.get(j, i) as i128));
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            queue.push_back(j);
                        }
                        Some(existing) if existing != dj => {
                            return Err(Error::InvalidCartan("matrix is not symmetrizable".into()))
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let d: Vec<Frac> = d.into_iter().map(Option::unwrap).collect();
        let l = d.iter().fold(1i128, |acc, f| lcm(acc, f.den));
        let ints: Vec<i128> = d.iter().map(|f| f.num * (l / f.den)).collect();
        let g = ints.iter().fold(0i128, |acc, &x| gcd(acc, x));
        ints.iter()
            .map(|&x| i64::try_from(x / g).map_err(|_| Error::Overflow))
            .collect()
    }
}

/// A positive root, stored both in the fundamental-weight basis and as
/// nonnegative coefficients on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub weight: Weight,
    pub coeffs: SmallVec<[i32; 8]>,
}

impl Root {
    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn support_mask(&self) -> u64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }
}

/// A set of simple-root indices spanning a sub-root-system of the ambient
/// lattice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subsystem {
    mask: u64,
    rank: usize,
}

impl Subsystem {
    pub fn full(rank: usize) -> Self {
        let mask = if rank == 64 { u64::MAX } else { (1u64 << rank) - 1 };
        Subsystem { mask, rank }
    }

    pub fn new(rank: usize, nodes: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &i in nodes {
            if i >= rank {
                return Err(Error::InvalidNode { node: i, rank });
            }
            mask |= 1 << i;
        }
        Ok(Subsystem { mask, rank })
    }

    /// All nodes except `crossed`.
    pub fn levi(rank: usize, crossed: usize) -> Result<Self> {
        if crossed >= rank {
            return Err(Error::InvalidNode { node: crossed, rank });
        }
        let mut s = Self::full(rank);
        s.mask &= !(1 << crossed);
        Ok(s)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.mask & (1 << i) != 0
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&i| self.contains(i))
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.rank
    }
}

impl fmt::Debug for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.nodes()).finish()
    }
}

/// Configurable guardrails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of distinct weights in any character.
    pub max_support: usize,
    /// Maximum number of positive roots produced by the closure.
    pub max_roots: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_support: 1_000_000,
            max_roots: 10_000,
        }
    }
}

#[derive(Clone)]
pub struct RootSystem {
    name: Option<String>,
    cartan: CartanMatrix,
    sym: Vec<i64>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    rho: Weight,
    height_coeffs: Vec<i64>,
    limits: Limits,
    cache: Arc<dyn CharCache>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("name", &self.name)
            .field("cartan", &self.cartan)
            .field("positive_roots", &self.positive_roots.len())
            .finish()
    }
}

/// Preset names understood by [`RootSystem::preset`].
pub const PRESETS: &[&str] = &["E6-paper", "E6-bourbaki", "D5", "B4", "B3", "A2", "A1"];

/// Cartan matrix of a named preset.
///
/// `E6-paper` is the labeling used throughout this crate: the chain
/// 1–2–3–5–6 with node 4 attached to node 3 (1-based). Under it `ω_1` and
/// `ω_6` are the 27-dimensional representations and `ω_4` is adjoint.
pub fn preset_cartan(name: &str) -> Result<CartanMatrix> {
    match name {
        "E6-paper" => CartanMatrix::simply_laced(6, &[(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)]),
        "E6-bourbaki" => CartanMatrix::simply_laced(6, &[(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]),
        "D5" => CartanMatrix::simply_laced(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]),
        "B4" => type_b(4),
        "B3" => type_b(3),
        "A2" => CartanMatrix::simply_laced(2, &[(0, 1)]),
        "A1" => CartanMatrix::new(&[vec![2]]),
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Bourbaki labeling, the last node short.
fn type_b(n: usize) -> Result<CartanMatrix> {
    let mut rows = vec![vec![0; n]; n];
    for i in 0..n {
        rows[i][i] = 2;
        if i + 1 < n {
            rows[i][i + 1] = -1;
            rows[i + 1][i] = -1;
        }
    }
    rows[n - 1][n - 2] = -2;
    CartanMatrix::new(&rows)
}

impl RootSystem {
    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        Self::with_limits(cartan, Limits::default())
    }

    pub fn preset(name: &str) -> Result<Self> {
        let mut rs = Self::new(preset_cartan(name)?)?;
        rs.name = Some(name.to_string());
        Ok(rs)
    }

    pub fn with_limits(cartan: CartanMatrix, limits: Limits) -> Result<Self> {
        let n = cartan.rank();
        let sym = cartan.symmetrizer()?;
        check_positive_definite(&cartan, &sym)?;

        let simple_roots: Vec<Weight> = (0..n)
            .map(|j| Weight((0..n).map(|i| cartan.get(i, j)).collect()))
            .collect();
        let positive_roots = root_closure(&cartan, &simple_roots, limits.max_roots)?;
        let height_coeffs = height_functional(&cartan)?;

        Ok(RootSystem {
            name: None,
            rho: Weight(smallvec::smallvec![1; n]),
            cartan,
            sym,
            simple_roots,
            positive_roots,
            height_coeffs,
            limits,
            cache: Arc::new(NoCache),
        })
    }

    /// Installs a memo cache for irreducible characters. Results never
    /// depend on whether a cache is present.
    pub fn with_cache(mut self, cache: Arc<dyn CharCache>) -> Self {
        self.cache = cache;
        self
    }

    pub fn set_limits(&mut self, limits: Limits) {
        self.limits = limits;
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Positive roots lying in the span of `sub`.
    pub fn positive_roots_of<'a>(&'a self, sub: &'a Subsystem) -> impl Iterator<Item = &'a Root> + 'a {
        self.positive_roots
            .iter()
            .filter(move |r| r.support_mask() & !sub.mask() == 0)
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn cache(&self) -> &dyn CharCache {
        &*self.cache
    }

    pub fn full(&self) -> Subsystem {
        Subsystem::full(self.rank())
    }

    pub fn weight(&self, coords: &[i32]) -> Result<Weight> {
        self.check_rank(coords.len())?;
        Ok(Weight::new(coords))
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub(crate) fn check_rank(&self, found: usize) -> Result<()> {
        if found != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found,
            });
        }
        Ok(())
    }

    /// Height of a weight along the simple roots, scaled by a fixed positive
    /// integer so that it stays integral. Every simple root has the same
    /// positive scaled height.
    pub fn scaled_height(&self, w: &Weight) -> i64 {
        self.height_coeffs
            .iter()
            .zip(w.coords())
            .map(|(&h, &c)| h * c as i64)
            .sum()
    }

    /// Simple reflection `s_i(λ) = λ − ⟨λ, α_i^∨⟩ α_i`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let mut out = w.clone();
        self.reflect_in_place(i, &mut out);
        out
    }

    #[inline]
    pub(crate) fn reflect_in_place(&self, i: usize, w: &mut Weight) {
        let c = w.0[i];
        if c != 0 {
            for (x, a) in w.0.iter_mut().zip(self.simple_roots[i].coords()) {
                *x -= c * a;
            }
        }
    }

    pub fn is_dominant(&self, sub: &Subsystem, w: &Weight) -> bool {
        sub.nodes().all(|i| w[i] >= 0)
    }

    /// Reflects at the lowest-index negative coordinate of `sub` until none
    /// remains. Returns the number of reflections and the dominant weight.
    pub fn make_dominant(&self, sub: &Subsystem, w: &Weight) -> (usize, Weight) {
        let mut w = w.clone();
        let mut count = 0;
        while let Some(i) = sub.nodes().find(|&i| w[i] < 0) {
            self.reflect_in_place(i, &mut w);
            count += 1;
        }
        (count, w)
    }

    /// Moves `λ` into the dominant chamber of `sub` under the dotted action
    /// `w·λ = w(λ+ρ) − ρ`, using the ambient `ρ`.
    pub fn dotted_to_dominant(&self, sub: &Subsystem, w: &Weight) -> Dotted {
        let shifted = w + &self.rho;
        let (length, dom) = self.make_dominant(sub, &shifted);
        if sub.nodes().any(|i| dom[i] == 0) {
            Dotted::Singular
        } else {
            Dotted::Regular {
                length,
                weight: &dom - &self.rho,
            }
        }
    }

    /// Highest weight of the dual representation, `−w_0(λ)` for the Weyl
    /// group of `sub`.
    pub fn dual_dominant(&self, sub: &Subsystem, w: &Weight) -> Result<Weight> {
        self.check_rank(w.rank())?;
        if !self.is_dominant(sub, w) {
            return Err(Error::NotDominant(w.clone()));
        }
        Ok(self.make_dominant(sub, &-w).1)
    }
}

/// Outcome of the dotted action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dotted {
    Singular,
    Regular { length: usize, weight: Weight },
}

fn root_closure(cartan: &CartanMatrix, simple: &[Weight], bound: usize) -> Result<Vec<Root>> {
    let n = cartan.rank();
    let mut roots: Vec<Root> = (0..n)
        .map(|j| {
            let mut coeffs: SmallVec<[i32; 8]> = smallvec::smallvec![0; n];
            coeffs[j] = 1;
            Root {
                weight: simple[j].clone(),
                coeffs,
            }
        })
        .collect();
    let mut seen: alloc::collections::BTreeSet<SmallVec<[i32; 8]>> = roots.iter().map(|r| r.coeffs.clone()).collect();
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(idx) = queue.pop_front() {
        for i in 0..n {
            let root = &roots[idx];
            let c = root.weight[i];
            // s_i permutes the positive roots other than α_i.
            if c == 0 || (root.coeffs[i] == 1 && root.height() == 1) {
                continue;
            }
            let mut coeffs = root.coeffs.clone();
            coeffs[i] -= c;
            if coeffs.iter().any(|&x| x < 0) {
                return Err(Error::NotFiniteType("negative root coefficient in closure".into()));
            }
            if seen.contains(&coeffs) {
                continue;
            }
            let mut weight = root.weight.clone();
            for (x, a) in weight.0.iter_mut().zip(simple[i].coords()) {
                *x -= c * a;
            }
            seen.insert(coeffs.clone());
            roots.push(Root { weight, coeffs });
            queue.push_back(roots.len() - 1);
            if roots.len() > bound {
                return Err(Error::NotFiniteType(format!(
                    "root closure exceeded {bound} positive roots"
                )));
            }
        }
    }
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coeffs.cmp(&a.coeffs)));
    Ok(roots)
}

/// Sylvester's criterion on the symmetrized matrix, via fraction-free
/// elimination (the k-th pivot equals the k-th leading principal minor).
fn check_positive_definite(cartan: &CartanMatrix, sym: &[i64]) -> Result<()> {
    let n = cartan.rank();
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| sym[i] as i128 * cartan.get(i, j) as i128).collect())
        .collect();
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] <= 0 {
            return Err(Error::NotFiniteType(format!(
                "symmetrized matrix has non-positive leading minor of order {}",
                k + 1
            )));
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j]
                    .checked_mul(m[k][k])
                    .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                    .ok_or(Error::Overflow)?;
                m[i][j] = v / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(())
}

/// Integer row vector `h` (a positive multiple of `1ᵀ A⁻¹`) such that
/// `h · λ` is the height of `λ` along the simple roots, up to scale.
fn height_functional(cartan: &CartanMatrix) -> Result<Vec<i64>> {
    let n = cartan.rank();
    // Solve Aᵀ x = 1 over the rationals.
    let mut aug: Vec<Vec<Frac>> = (0..n)
        .map(|i| {
            let mut row: Vec<Frac> = (0..n).map(|j| Frac::int(cartan.get(j, i) as i128)).collect();
            row.push(Frac::int(1));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| aug[r][col].num != 0)
            .ok_or_else(|| Error::NotFiniteType("singular Cartan matrix".into()))?;
        aug.swap(col, pivot);
        let p = aug[col][col];
        for x in aug[col].iter_mut() {
            *x = x.div(p);
        }
        for r in 0..n {
            if r != col && aug[r][col].num != 0 {
                let f = aug[r][col];
                for c in 0..=n {
                    let v = aug[col][c].mul(f);
                    aug[r][c] = aug[r][c].sub(v);
                }
            }
        }
    }
    let sol: Vec<Frac> = aug.iter().map(|row| row[n]).collect();
    let l = sol.iter().fold(1i128, |acc, f| lcm(acc, f.den));
    sol.iter()
        .map(|f| i64::try_from(f.num * (l / f.den)).map_err(|_| Error::Overflow))
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}

/// Minimal exact rational for the handful of small linear-algebra steps
/// above; denominators stay tiny for Cartan matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    fn new(num: i128, den: i128) -> Self {
        let g = gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Frac {
            num: s * num / g,
            den: s * den / g,
        }
    }
    fn int(v: i128) -> Self {
        Frac { num: v, den: 1 }
    }
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.num * o.num, self.den * o.den)
    }
    fn div(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den, self.den * o.num)
    }
    fn sub(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
}
