//! Bundle expressions and character-level identity checking.
//!
//! Every check happens in the representation ring of the Levi: an
//! isomorphism is confirmed as an equality of characters, and an exact
//! sequence as the vanishing of the alternating sum of its terms. Both are
//! necessary conditions only; extension data is invisible to characters.

mod builtin;
mod parse;

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

pub use builtin::{builtin_ledger, BUILTIN};
pub use parse::{parse_expr, split_iso};

use crate::character::{char_arith, decompose_virtual, irrep_character, power_op, CharOp, Character, PowerKind};
use crate::error::{Error, Result};
use crate::lie::Weight;
use crate::parabolic::ParabolicSetup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleExpr {
    /// `E[..]`
    Irr(Weight),
    /// `O`
    Triv,
    /// `e(t)`
    Twist(Box<BundleExpr>, i32),
    Dual(Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    /// At least two summands.
    Oplus(Vec<BundleExpr>),
    Wedge(u32, Box<BundleExpr>),
    Sym(u32, Box<BundleExpr>),
    /// `V[..]`: the trivial bundle with fibre the `G`-module `V_λ`.
    Rep(Weight),
    /// Associated graded; the identity on characters.
    Gr(Box<BundleExpr>),
}

impl BundleExpr {
    pub fn twist(self, t: i32) -> Self {
        BundleExpr::Twist(Box::new(self), t)
    }

    pub fn dual(self) -> Self {
        BundleExpr::Dual(Box::new(self))
    }

    pub fn tensor(self, other: BundleExpr) -> Self {
        BundleExpr::Tensor(Box::new(self), Box::new(other))
    }

    fn is_sum(&self) -> bool {
        matches!(self, BundleExpr::Oplus(_))
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>, paren: bool) -> fmt::Result {
        if paren {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

fn fmt_weight(f: &mut fmt::Formatter<'_>, w: &Weight) -> fmt::Result {
    f.write_str("[")?;
    for (i, c) in w.coords().iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str("]")
}

/// Prints in the surface syntax; `parse_expr` inverts it.
impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Irr(w) => {
                f.write_str("E")?;
                fmt_weight(f, w)
            }
            BundleExpr::Rep(w) => {
                f.write_str("V")?;
                fmt_weight(f, w)
            }
            BundleExpr::Triv => f.write_str("O"),
            BundleExpr::Twist(e, t) => {
                e.fmt_operand(f, matches!(**e, BundleExpr::Oplus(_) | BundleExpr::Tensor(..)))?;
                write!(f, "({t})")
            }
            BundleExpr::Dual(e) => write!(f, "dual({e})"),
            BundleExpr::Gr(e) => write!(f, "gr({e})"),
            BundleExpr::Wedge(k, e) => write!(f, "wedge^{k}({e})"),
            BundleExpr::Sym(k, e) => write!(f, "sym^{k}({e})"),
            BundleExpr::Tensor(a, b) => {
                a.fmt_operand(f, a.is_sum())?;
                f.write_str(" * ")?;
                b.fmt_operand(f, matches!(**b, BundleExpr::Oplus(_) | BundleExpr::Tensor(..)))
            }
            BundleExpr::Oplus(items) => {
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    e.fmt_operand(f, e.is_sum())?;
                }
                Ok(())
            }
        }
    }
}

/// Character of the Levi module underlying `e`, in the ambient weight
/// lattice. `Rep(λ)` contributes the restriction of `V_λ^*`, matching the
/// labeling `H^0(E_ω) = V_ω^*`.
pub fn eval_expr(setup: &ParabolicSetup, e: &BundleExpr) -> Result<Character> {
    let rs = setup.root_system();
    let limits = rs.limits();
    let rank = setup.rank();
    Ok(match e {
        BundleExpr::Irr(w) => {
            let b = setup.bundle_from(w.clone())?;
            (*setup.character(&b)?).clone()
        }
        BundleExpr::Triv => Character::trivial(rank),
        BundleExpr::Twist(e, t) => eval_expr(setup, e)?.shift(&Weight::zero(rank).shifted(setup.crossed(), *t)),
        BundleExpr::Dual(e) => eval_expr(setup, e)?.dual(),
        BundleExpr::Tensor(a, b) => char_arith(&eval_expr(setup, a)?, &eval_expr(setup, b)?, CharOp::Mul, limits)?,
        BundleExpr::Oplus(items) => {
            let mut acc = Character::zero(rank);
            for item in items {
                acc = char_arith(&acc, &eval_expr(setup, item)?, CharOp::Add, limits)?;
            }
            acc
        }
        BundleExpr::Wedge(k, e) => power_op(&eval_expr(setup, e)?, *k, PowerKind::Wedge, limits)?,
        BundleExpr::Sym(k, e) => power_op(&eval_expr(setup, e)?, *k, PowerKind::Sym, limits)?,
        BundleExpr::Rep(w) => {
            rs.check_rank(w.rank())?;
            irrep_character(rs, &rs.full(), w)?.dual()
        }
        BundleExpr::Gr(e) => eval_expr(setup, e)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// Two terms with equal characters.
    Iso,
    /// `0 → t_0 → t_1 → … → 0`: the alternating sum vanishes.
    ExactSeq,
}

impl IdentityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityKind::Iso => "iso",
            IdentityKind::ExactSeq => "exact",
        }
    }
}

impl core::str::FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "iso" => Ok(IdentityKind::Iso),
            "exact" => Ok(IdentityKind::ExactSeq),
            other => Err(Error::Invalid(alloc::format!(
                "identity kind `{other}`, expected `iso` or `exact`"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub kind: IdentityKind,
    /// `[lhs, rhs]` for `Iso`; the full sequence for `ExactSeq`.
    pub terms: Vec<BundleExpr>,
    pub note: String,
}

impl Identity {
    pub fn new(name: impl Into<String>, kind: IdentityKind, terms: Vec<BundleExpr>) -> Result<Self> {
        let name = name.into();
        let ok = match kind {
            IdentityKind::Iso => terms.len() == 2,
            IdentityKind::ExactSeq => terms.len() >= 2,
        };
        if !ok {
            return Err(Error::Invalid(alloc::format!(
                "identity `{name}`: {} needs {} terms, got {}",
                kind.as_str(),
                if kind == IdentityKind::Iso {
                    "exactly 2"
                } else {
                    "at least 2"
                },
                terms.len()
            )));
        }
        Ok(Identity {
            name,
            kind,
            terms,
            note: String::new(),
        })
    }

    pub fn parse(name: impl Into<String>, kind: IdentityKind, terms: &[&str]) -> Result<Self> {
        let parsed = terms.iter().map(|t| parse_expr(t)).collect::<Result<Vec<_>>>()?;
        Self::new(name, kind, parsed)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// `Iso` with the sides exchanged; exact sequences are reversed.
    pub fn swapped(&self) -> Self {
        let mut out = self.clone();
        out.terms.reverse();
        out
    }

    pub fn term_strings(&self) -> Vec<String> {
        self.terms.iter().map(ToString::to_string).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub kind: IdentityKind,
    pub passed: bool,
    /// `rhs − lhs` for `Iso`, `Σ (−1)^i t_i` for `ExactSeq`.
    pub difference: Character,
    /// Decomposition of a nonzero difference into Levi irreducibles with
    /// signed multiplicities.
    pub decomposed: Vec<(Weight, i64)>,
}

pub fn check_identity(setup: &ParabolicSetup, id: &Identity) -> Result<CheckResult> {
    let rs = setup.root_system();
    let limits = rs.limits();
    let mut diff = Character::zero(setup.rank());
    match id.kind {
        IdentityKind::Iso => {
            let [lhs, rhs] = id.terms.as_slice() else {
                return Err(Error::Invalid(alloc::format!(
                    "identity `{}`: iso needs 2 terms",
                    id.name
                )));
            };
            diff = char_arith(&eval_expr(setup, rhs)?, &eval_expr(setup, lhs)?, CharOp::Sub, limits)?;
        }
        IdentityKind::ExactSeq => {
            for (i, t) in id.terms.iter().enumerate() {
                let op = if i % 2 == 0 { CharOp::Add } else { CharOp::Sub };
                diff = char_arith(&diff, &eval_expr(setup, t)?, op, limits)?;
            }
        }
    }
    let passed = diff.is_empty();
    let decomposed = if passed {
        Vec::new()
    } else {
        decompose_virtual(rs, setup.levi(), &diff)?
    };
    Ok(CheckResult {
        name: id.name.clone(),
        kind: id.kind,
        passed,
        difference: diff,
        decomposed,
    })
}
