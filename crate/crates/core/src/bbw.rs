//! Borel–Weil–Bott: cohomology of irreducible and completely reducible
//! homogeneous bundles, and Ext groups between irreducible ones.
//!
//! Convention: `H^k(X, E_ω) ≅ V_g^*` where `g` is the reported weight, so
//! that `H^0(X, E_ω) = V_ω^*` for `G`-dominant `ω`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::character::weyl_dim;
use crate::error::Result;
use crate::lie::{Dotted, Weight};
use crate::parabolic::{BundleWeight, GradedBundle, ParabolicSetup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyResult {
    Zero,
    Nonzero {
        degree: usize,
        weight: Weight,
        dim: BigUint,
    },
}

/// One degree of a cohomology or Ext table.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DegreeEntry {
    pub dim: BigUint,
    /// Contributing `G`-dominant weights with multiplicities, sorted.
    pub weights: Vec<(Weight, u64)>,
}

/// Per-degree dimensions for degrees `0..=dim X`. Zeros are explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub degrees: Vec<DegreeEntry>,
}

impl ExtTable {
    pub fn empty(dim_x: usize) -> Self {
        ExtTable {
            degrees: vec![DegreeEntry::default(); dim_x + 1],
        }
    }

    pub fn dim(&self, degree: usize) -> BigUint {
        self.degrees.get(degree).map_or_else(BigUint::zero, |e| e.dim.clone())
    }

    pub fn nonzero_degrees(&self) -> impl Iterator<Item = (usize, &DegreeEntry)> + '_ {
        self.degrees.iter().enumerate().filter(|(_, e)| !e.dim.is_zero())
    }

    fn add(&mut self, degree: usize, weight: Weight, dim: BigUint, mult: u64) {
        let entry = &mut self.degrees[degree];
        entry.dim += dim * mult;
        match entry.weights.binary_search_by(|(w, _)| w.cmp(&weight)) {
            Ok(pos) => entry.weights[pos].1 += mult,
            Err(pos) => entry.weights.insert(pos, (weight, mult)),
        }
    }

    /// Alternating sum of dimensions.
    pub fn euler_characteristic(&self) -> num_bigint::BigInt {
        let mut chi = num_bigint::BigInt::zero();
        for (k, e) in self.degrees.iter().enumerate() {
            let d = num_bigint::BigInt::from(e.dim.clone());
            if k % 2 == 0 {
                chi += d;
            } else {
                chi -= d;
            }
        }
        chi
    }
}

/// Applies the dotted action of the full Weyl group to `ω`.
pub fn cohomology(setup: &ParabolicSetup, b: &BundleWeight) -> Result<CohomologyResult> {
    let rs = setup.root_system();
    let full = rs.full();
    Ok(match rs.dotted_to_dominant(&full, b.weight()) {
        Dotted::Singular => CohomologyResult::Zero,
        Dotted::Regular { length, weight } => {
            let dim = weyl_dim(rs, &full, &weight)?;
            CohomologyResult::Nonzero {
                degree: length,
                weight,
                dim,
            }
        }
    })
}

/// Cohomology of a direct sum, summand by summand.
pub fn cohomology_graded(setup: &ParabolicSetup, g: &GradedBundle) -> Result<ExtTable> {
    let mut table = ExtTable::empty(setup.dim_x());
    for (b, mult) in g.bundles() {
        let b = setup.bundle_from(b.into_weight())?;
        if let CohomologyResult::Nonzero { degree, weight, dim } = cohomology(setup, &b)? {
            table.add(degree, weight, dim, mult);
        }
    }
    Ok(table)
}

/// `Ext^k(E_a, E_b) = H^k(X, E_a^* ⊗ E_b)`.
pub fn ext_table(setup: &ParabolicSetup, a: &BundleWeight, b: &BundleWeight) -> Result<ExtTable> {
    let hom_bundle = setup.levi_tensor(&setup.bundle_dual(a)?, b)?;
    cohomology_graded(setup, &hom_bundle)
}
