//! Homogeneous bundles on `G/P` for a maximal parabolic `P`.
//!
//! An irreducible homogeneous bundle `E_ω` is labeled by a weight that is
//! dominant on every Levi node; the crossed coordinate is unrestricted.
//! `E_{tω_c}` is the line bundle `O(t)`.

use core::fmt;

use num_bigint::BigUint;

use crate::character::{decompose, irrep_character, weyl_dim, Character, IrrepSum};
use crate::error::{Error, Result};
use crate::lie::{Dotted, RootSystem, Subsystem, Weight};

/// Direct sum of irreducible homogeneous bundles, as a list of
/// `(label, multiplicity)` in canonical order.
pub type GradedBundle = IrrepSum;

#[derive(Clone, Debug)]
pub struct ParabolicSetup {
    rs: RootSystem,
    crossed: usize,
    levi: Subsystem,
    dim_x: usize,
    index: i64,
}

/// A weight that is dominant for the Levi of some [`ParabolicSetup`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BundleWeight(Weight);

impl BundleWeight {
    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn into_weight(self) -> Weight {
        self.0
    }
}

impl fmt::Display for BundleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.0)
    }
}

impl fmt::Debug for BundleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl ParabolicSetup {
    pub fn new(rs: RootSystem, crossed: usize) -> Result<Self> {
        let levi = Subsystem::levi(rs.rank(), crossed)?;
        let levi_count = rs.positive_roots_of(&levi).count();
        let dim_x = rs.positive_roots().len() - levi_count;
        // 2ρ − 2ρ_L is the sum of the unipotent roots and a multiple of ω_c.
        let index = rs
            .positive_roots()
            .iter()
            .filter(|r| r.coeffs[crossed] > 0)
            .map(|r| r.weight[crossed] as i64)
            .sum();
        Ok(ParabolicSetup {
            rs,
            crossed,
            levi,
            dim_x,
            index,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn crossed(&self) -> usize {
        self.crossed
    }

    pub fn levi(&self) -> &Subsystem {
        &self.levi
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Dimension of `G/P`.
    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    /// The canonical bundle is `O(−index)`.
    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn bundle(&self, coords: &[i32]) -> Result<BundleWeight> {
        self.bundle_from(self.rs.weight(coords)?)
    }

    pub fn bundle_from(&self, w: Weight) -> Result<BundleWeight> {
        self.rs.check_rank(w.rank())?;
        if !self.rs.is_dominant(&self.levi, &w) {
            return Err(Error::NotDominant(w));
        }
        Ok(BundleWeight(w))
    }

    /// `O(t)`.
    pub fn line_bundle(&self, t: i32) -> BundleWeight {
        BundleWeight(Weight::zero(self.rank()).shifted(self.crossed, t))
    }

    pub fn twist(&self, b: &BundleWeight, t: i32) -> BundleWeight {
        BundleWeight(b.0.shifted(self.crossed, t))
    }

    pub fn bundle_rank(&self, b: &BundleWeight) -> Result<BigUint> {
        weyl_dim(&self.rs, &self.levi, &b.0)
    }

    /// Label of the dual bundle, `−w_0^L(ω)`.
    pub fn bundle_dual(&self, b: &BundleWeight) -> Result<BundleWeight> {
        self.rs.dual_dominant(&self.levi, &b.0).map(BundleWeight)
    }

    /// Character of the Levi module labelling `b`.
    pub fn character(&self, b: &BundleWeight) -> Result<alloc::sync::Arc<Character>> {
        irrep_character(&self.rs, &self.levi, &b.0)
    }

    /// Degree of `det E` in units of the ample generator: the crossed
    /// coordinate of the sum of all weights of the Levi character.
    pub fn bundle_c1(&self, b: &BundleWeight) -> Result<i64> {
        let chi = self.character(b)?;
        Ok(character_c1(&chi, self.crossed))
    }

    /// Klimyk's formula over the Levi: each weight `ν` of the smaller factor
    /// contributes `±mult(ν)` at the dotted-dominant representative of
    /// `ω + ν`; singular terms drop out.
    pub fn levi_tensor(&self, a: &BundleWeight, b: &BundleWeight) -> Result<GradedBundle> {
        let (small, big) = if self.bundle_rank(a)? <= self.bundle_rank(b)? {
            (a, b)
        } else {
            (b, a)
        };
        let chi = self.character(small)?;
        let mut acc: alloc::collections::BTreeMap<Weight, i64> = alloc::collections::BTreeMap::new();
        for (nu, m) in chi.iter() {
            let shifted = &big.0 + nu;
            if let Dotted::Regular { length, weight } = self.rs.dotted_to_dominant(&self.levi, &shifted) {
                let sign = if length % 2 == 0 { m } else { -m };
                *acc.entry(weight).or_insert(0) += sign;
            }
        }
        let mut out = GradedBundle::default();
        for (w, m) in acc {
            match m {
                0 => {}
                m if m < 0 => return Err(Error::NotDecomposable { weight: w, mult: m }),
                m => out.terms.push((w, m as u64)),
            }
        }
        out.canonicalize(&self.rs);
        if out.terms.iter().map(|(_, m)| *m as usize).sum::<usize>() > self.rs.limits().max_support {
            return Err(Error::GuardrailExceeded {
                limit: self.rs.limits().max_support,
            });
        }
        Ok(out)
    }

    /// Restriction of the `G`-irreducible `V_λ` to the Levi.
    pub fn branch(&self, lambda: &Weight) -> Result<GradedBundle> {
        let full = self.rs.full();
        self.rs.check_rank(lambda.rank())?;
        if !self.rs.is_dominant(&full, lambda) {
            return Err(Error::NotDominant(lambda.clone()));
        }
        let chi = irrep_character(&self.rs, &full, lambda)?;
        decompose(&self.rs, &self.levi, &chi)
    }

    /// `gr(V_λ ⊗ O_X)`: the trivial bundle with fibre `V_λ`. Under the
    /// labeling in which `H^0(E_ω) = V_ω^*`, its irreducible pieces are the
    /// Levi components of `V_λ^*`.
    pub fn gr_trivial_bundle(&self, lambda: &Weight) -> Result<GradedBundle> {
        let dual = self.rs.dual_dominant(&self.rs.full(), lambda)?;
        self.branch(&dual)
    }
}

pub(crate) fn character_c1(chi: &Character, crossed: usize) -> i64 {
    chi.iter().map(|(w, m)| w[crossed] as i64 * m).sum()
}

/// Builds a graded bundle from explicit `(coords, mult)` pairs.
pub fn graded(setup: &ParabolicSetup, terms: &[(&[i32], u64)]) -> Result<GradedBundle> {
    let mut out = GradedBundle::default();
    for (c, m) in terms {
        let b = setup.bundle(c)?;
        out.terms.push((b.into_weight(), *m));
    }
    out.canonicalize(setup.root_system());
    Ok(out)
}

impl GradedBundle {
    pub fn bundles(&self) -> impl Iterator<Item = (BundleWeight, u64)> + '_ {
        self.terms.iter().map(|(w, m)| (BundleWeight(w.clone()), *m))
    }
}

/// Convenience for tests and presets: `E6-paper` with node 1 crossed.
pub fn cayley_plane() -> ParabolicSetup {
    ParabolicSetup::new(RootSystem::preset("E6-paper").expect("preset"), 0).expect("setup")
}
