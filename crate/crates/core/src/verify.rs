//! Strong exceptionality checks for ordered collections of irreducible
//! homogeneous bundles.
//!
//! Rules, for an ordered collection `(E_1, …, E_n)`:
//! * `Ext^0(E_i, E_i) = 1` and `Ext^k(E_i, E_i) = 0` for `k > 0`;
//! * `Ext^k(E_i, E_j) = 0` for `i < j` and `k ≥ 1`;
//! * `Ext^k(E_i, E_j) = 0` for `i > j` and every `k`, including 0.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::time::Duration;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bbw::{ext_table, ExtTable};
use crate::error::{Error, Result};
use crate::lie::RootSystem;
use crate::parabolic::{BundleWeight, ParabolicSetup};

#[derive(Clone, Debug)]
pub struct Collection {
    pub name: String,
    pub preset: Option<String>,
    pub setup: ParabolicSetup,
    pub bundles: Vec<BundleWeight>,
}

impl Collection {
    pub fn new(name: impl Into<String>, setup: ParabolicSetup, bundles: Vec<BundleWeight>) -> Result<Self> {
        if bundles.is_empty() {
            return Err(Error::Invalid("collection must be nonempty".into()));
        }
        for b in &bundles {
            setup.bundle_from(b.weight().clone())?;
        }
        Ok(Collection {
            name: name.into(),
            preset: setup.root_system().name().map(ToString::to_string),
            setup,
            bundles,
        })
    }

    pub fn len(&self) -> usize {
        self.bundles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bundles.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut c = self.clone();
        c.bundles.reverse();
        c.name.push_str("-reversed");
        c
    }

    /// Index ranges of consecutive blocks, each closed by a line bundle.
    /// Used only for display.
    pub fn twist_blocks(&self) -> Vec<Range<usize>> {
        let crossed = self.setup.crossed();
        let mut blocks = Vec::new();
        let mut start = 0;
        for (i, b) in self.bundles.iter().enumerate() {
            let is_line = b
                .weight()
                .coords()
                .iter()
                .enumerate()
                .all(|(j, &c)| j == crossed || c == 0);
            if is_line {
                blocks.push(start..i + 1);
                start = i + 1;
            }
        }
        if start < self.bundles.len() {
            blocks.push(start..self.bundles.len());
        }
        blocks
    }
}

/// The 27-bundle Lefschetz collection on `E6/P1`:
/// `⟨A, A(1), A(2), C(3), …, C(11)⟩` with `A = (S_2^*, S^*, O)` and
/// `C = (S^*, O)`.
pub fn cayley27() -> Collection {
    let setup = crate::parabolic::cayley_plane();
    let s2_dual = setup.bundle(&[-2, 0, 0, 0, 0, 2]).expect("L-dominant");
    let s_dual = setup.bundle(&[-1, 0, 0, 0, 0, 1]).expect("L-dominant");
    let mut bundles = Vec::with_capacity(27);
    for t in 0..=11 {
        if t <= 2 {
            bundles.push(setup.twist(&s2_dual, t));
        }
        bundles.push(setup.twist(&s_dual, t));
        bundles.push(setup.line_bundle(t));
    }
    Collection::new("cayley27", setup, bundles).expect("valid collection")
}

/// Label of the spinor bundle `Σ` on the quadric `B4/P1`: rank 8, `c1 = 4`,
/// `H^0(Σ) = V_{ω4}^*`, `Σ^* ≅ Σ(−1)`. With `E_{ω4−ω1}` in its place the
/// collection below fails: `Hom(Σ(6), O(6)) ≠ 0`.
pub const QUADRIC_SPINOR: [i32; 4] = [0, 0, 0, 1];

/// `⟨O(5), O(6), Σ(6), O(7), …, O(11)⟩` on the 7-dimensional quadric.
pub fn kapranov_q7() -> Collection {
    let setup = ParabolicSetup::new(RootSystem::preset("B4").expect("preset"), 0).expect("setup");
    let spinor = setup.bundle(&QUADRIC_SPINOR).expect("L-dominant");
    let mut bundles = alloc::vec![setup.line_bundle(5), setup.line_bundle(6), setup.twist(&spinor, 6)];
    bundles.extend((7..=11).map(|t| setup.line_bundle(t)));
    Collection::new("kapranovQ7", setup, bundles).expect("valid collection")
}

pub fn builtin(name: &str) -> Option<Collection> {
    match name {
        "cayley27" => Some(cayley27()),
        "kapranovQ7" => Some(kapranov_q7()),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// `Ext^0(E_i, E_i) ≠ 1`
    Endomorphisms,
    /// `Ext^k(E_i, E_i) ≠ 0` for some `k > 0`
    SelfExt,
    /// `Ext^k(E_i, E_j) ≠ 0` for `i < j`, `k > 0`
    ForwardExt,
    /// `Ext^k(E_i, E_j) ≠ 0` for `i > j`
    Backward,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Endomorphisms => "endomorphisms",
            Rule::SelfExt => "self-ext",
            Rule::ForwardExt => "forward-ext",
            Rule::Backward => "backward",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// 0-based `(i, j)`.
    pub pair: (usize, usize),
    pub degree: usize,
    pub dim: BigUint,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTable {
    pub i: usize,
    pub j: usize,
    pub table: ExtTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub collection: String,
    pub size: usize,
    pub tables: Vec<PairTable>,
    pub violations: Vec<Violation>,
    pub verdict: Verdict,
    /// Filled in by callers that can measure time.
    pub elapsed: Option<Duration>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn table(&self, i: usize, j: usize) -> Option<&ExtTable> {
        self.tables
            .get(i * self.size + j)
            .filter(|t| t.i == i && t.j == j)
            .map(|t| &t.table)
    }

    /// Entry `(i, j)` is `dim Ext^0(E_i, E_j)`.
    pub fn hom_matrix(&self) -> Vec<Vec<BigUint>> {
        (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| self.table(i, j).map_or_else(BigUint::zero, |t| t.dim(0)))
                    .collect()
            })
            .collect()
    }
}

/// Checks the rules on one table.
pub fn pair_violations(i: usize, j: usize, table: &ExtTable) -> Vec<Violation> {
    let mut out = Vec::new();
    for (degree, entry) in table.degrees.iter().enumerate() {
        let rule = if i == j {
            if degree == 0 {
                if entry.dim.is_one() {
                    continue;
                }
                Rule::Endomorphisms
            } else {
                Rule::SelfExt
            }
        } else if i < j {
            if degree == 0 {
                continue;
            }
            Rule::ForwardExt
        } else {
            Rule::Backward
        };
        if !entry.dim.is_zero() || rule == Rule::Endomorphisms {
            out.push(Violation {
                pair: (i, j),
                degree,
                dim: entry.dim.clone(),
                rule,
            });
        }
    }
    out
}

/// Computes one pair, tagging errors with the pair.
pub fn pair_table(c: &Collection, i: usize, j: usize) -> Result<PairTable> {
    ext_table(&c.setup, &c.bundles[i], &c.bundles[j])
        .map(|table| PairTable { i, j, table })
        .map_err(|e| Error::Pair {
            i,
            j,
            source: alloc::boxed::Box::new(e),
        })
}

/// Builds a report from tables computed in any order. Every violation is
/// collected; nothing fails fast.
pub fn assemble_report(c: &Collection, mut tables: Vec<PairTable>) -> Result<VerificationReport> {
    let n = c.len();
    tables.sort_by_key(|t| (t.i, t.j));
    tables.dedup_by_key(|t| (t.i, t.j));
    if tables.len() != n * n {
        return Err(Error::Invalid(alloc::format!(
            "expected {} pair tables, got {}",
            n * n,
            tables.len()
        )));
    }
    let violations: Vec<Violation> = tables
        .iter()
        .flat_map(|t| pair_violations(t.i, t.j, &t.table))
        .collect();
    let verdict = if violations.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(VerificationReport {
        collection: c.name.clone(),
        size: n,
        tables,
        violations,
        verdict,
        elapsed: None,
    })
}

/// Sequential driver.
pub fn verify_strong_exceptional(c: &Collection) -> Result<VerificationReport> {
    let n = c.len();
    let mut tables = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            tables.push(pair_table(c, i, j)?);
        }
    }
    assemble_report(c, tables)
}

pub fn hom_matrix(c: &Collection) -> Result<Vec<Vec<BigUint>>> {
    let n = c.len();
    (0..n)
        .map(|i| (0..n).map(|j| pair_table(c, i, j).map(|t| t.table.dim(0))).collect())
        .collect()
}
