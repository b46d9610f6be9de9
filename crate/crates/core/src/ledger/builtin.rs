//! Identities on `E6/P1` (preset `E6-paper`, node 1 crossed).
//!
//! Shorthand used in the notes: `S = E_{ω6}` (rank 10), `S^* = S(−1)`,
//! `S_2 = E_{2ω6}`, `S_3 = E_{3ω6}`, `T = E_{ω4}`, `Ω = T^* = E_{ω2−2ω1}`.

use alloc::vec::Vec;

use super::{Identity, IdentityKind};

use IdentityKind::{ExactSeq as X, Iso as I};

const K_BUNDLE: &str =
    "E[0,0,0,0,0,1] + wedge^2(dual(E[0,0,0,1,0,0]))(2) + E[0,0,0,1,0,0](-1) + dual(E[0,0,0,1,0,0])(2)";

/// `(name, kind, terms, note)`.
pub const BUILTIN: &[(&str, IdentityKind, &[&str], &str)] = &[
    (
        "wedge2-S",
        I,
        &["wedge^2(E[0,0,0,0,0,1])", "E[0,0,0,0,1,0]"],
        "second exterior power of S is irreducible",
    ),
    (
        "wedge3-S",
        I,
        &["wedge^3(E[0,0,0,0,0,1])", "E[0,0,1,0,0,0]"],
        "third exterior power of S reaches the triple node",
    ),
    (
        "wedge4-S",
        I,
        &["wedge^4(E[0,0,0,0,0,1])", "E[0,1,0,1,0,0]"],
        "past the triple node",
    ),
    (
        "cotangent-label",
        I,
        &["dual(E[0,0,0,1,0,0])", "E[-2,1,0,0,0,0]"],
        "T = E_{ω4}, Ω = E_{ω2-2ω1}",
    ),
    (
        "cotangent-twist",
        I,
        &["dual(E[0,0,0,1,0,0])(2)", "E[0,1,0,0,0,0]"],
        "E_{ω2} = Ω(2)",
    ),
    ("wedge2-T", I, &["wedge^2(E[0,0,0,1,0,0])", "E[0,0,1,0,0,0]"], ""),
    (
        "wedge2-cotangent",
        I,
        &["wedge^2(dual(E[0,0,0,1,0,0]))(3)", "E[0,0,1,0,0,0]"],
        "Ω²(3) = E_{ω3}",
    ),
    (
        "wedge3-S-vs-cotangent",
        I,
        &["wedge^3(E[0,0,0,0,0,1])", "wedge^2(dual(E[0,0,0,1,0,0]))(3)"],
        "c1 = 180 on both sides",
    ),
    ("wedge3-T", I, &["wedge^3(E[0,0,0,1,0,0])", "E[0,1,0,0,1,0]"], ""),
    (
        "wedge3-cotangent",
        I,
        &["wedge^3(dual(E[0,0,0,1,0,0]))(4)", "E[0,0,0,1,1,0]"],
        "Ω³(4) = E_{ω4+ω5}",
    ),
    (
        "cotangent-complex",
        X,
        &["E[-1,0,0,0,0,1](-1) + E[-2,1,0,0,0,0]", "V[0,0,0,0,0,1] * O(-1)", "O"],
        "Ω as middle cohomology, inserted into the first term",
    ),
    (
        "tangent-complex",
        X,
        &["O + E[0,0,0,1,0,0]", "V[1,0,0,0,0,0] * O(1)", "E[-1,0,0,0,0,1](2)"],
        "T as middle cohomology, inserted into the first term",
    ),
    (
        "adjoint",
        I,
        &[
            "gr(V[0,0,0,1,0,0] * O)",
            "E[0,0,0,1,0,0] + E[-2,1,0,0,0,0] + wedge^2(E[0,0,0,0,0,1])(-1) + O",
        ],
        "restriction of the adjoint representation",
    ),
    (
        "six-term",
        X,
        &[
            "E[-2,0,0,0,0,2]",
            "V[0,0,0,0,0,1] * E[-1,0,0,0,0,1]",
            "(V[1,0,0,0,0,0] + V[0,0,0,0,1,0]) * O",
            "(V[0,0,0,0,0,1] + V[0,1,0,0,0,0]) * O(1)",
            "V[1,0,0,0,0,0] * E[-1,0,0,0,0,1](2)",
            "E[-2,0,0,0,0,2](3)",
        ],
        "resolution of S_2^*(3) by S_2^*",
    ),
    (
        "sym2-dual-S",
        I,
        &["sym^2(dual(E[0,0,0,0,0,1]))", "E[-2,0,0,0,0,2] + O(-1)"],
        "S²S^* = S_2^* + O(-1)",
    ),
    (
        "sym3-S",
        I,
        &["sym^3(E[0,0,0,0,0,1])", "E[0,0,0,0,0,3] + E[0,0,0,0,0,1](1)"],
        "S_3 has highest weight 3ω6",
    ),
    (
        "spin10-relation",
        I,
        &[
            "wedge^2(dual(E[0,0,0,0,0,1])) * dual(E[0,0,0,0,0,1]) + dual(E[0,0,0,0,0,3])",
            "E[-2,0,0,0,0,2] * dual(E[0,0,0,0,0,1]) + wedge^3(dual(E[0,0,0,0,0,1]))",
        ],
        "",
    ),
    (
        "gr-w2-w4",
        I,
        &[
            "gr(E[0,1,0,0,0,0] * E[0,0,0,1,0,0])",
            "E[0,1,0,1,0,0] + wedge^2(E[0,0,0,0,0,1])(1) + O(2)",
        ],
        "",
    ),
    (
        "gr-w4-w5",
        I,
        &[
            "gr(E[0,0,0,1,0,0] * E[0,0,0,0,1,0](-1))",
            "E[0,0,0,1,1,0](-1) + E[0,1,0,0,0,1](-1) + E[0,0,0,1,0,0]",
        ],
        "",
    ),
    (
        "gr-w2-w6",
        I,
        &[
            "gr(E[0,1,0,0,0,0] * E[0,0,0,0,0,1](-1))",
            "E[0,1,0,0,0,1](-1) + E[0,0,0,1,0,0]",
        ],
        "",
    ),
    (
        "dual-S-squared",
        I,
        &[
            "dual(E[0,0,0,0,0,1]) * dual(E[0,0,0,0,0,1])",
            "E[-2,0,0,0,0,2] + wedge^2(dual(E[0,0,0,0,0,1])) + O(-1)",
        ],
        "",
    ),
    (
        "tautological-quotient",
        X,
        &["E[-1,0,0,0,0,1]", "V[0,0,0,0,0,1] * O", "E[-2,1,0,0,0,0](1) + O(1)"],
        "0 -> S^* -> V_{ω6} ⊗ O -> Q -> 0 with Q filtered by Ω(1) and O(1)",
    ),
    ("S-dual", I, &["dual(E[0,0,0,0,0,1])", "E[0,0,0,0,0,1](-1)"], ""),
    ("S2-dual", I, &["dual(E[0,0,0,0,0,2])", "E[0,0,0,0,0,2](-2)"], ""),
    ("S3-dual", I, &["dual(E[0,0,0,0,0,3])", "E[0,0,0,0,0,3](-3)"], ""),
    (
        "wedge2-S-dual",
        I,
        &["wedge^2(E[0,0,0,0,0,1])", "wedge^2(dual(E[0,0,0,0,0,1]))(2)"],
        "",
    ),
    (
        "wedge3-S-dual",
        I,
        &["wedge^3(E[0,0,0,0,0,1])", "wedge^3(dual(E[0,0,0,0,0,1]))(3)"],
        "",
    ),
    (
        "wedge4-S-dual",
        I,
        &["wedge^4(E[0,0,0,0,0,1])", "wedge^4(dual(E[0,0,0,0,0,1]))(4)"],
        "",
    ),
    (
        "sym3-dual-S",
        I,
        &[
            "sym^3(dual(E[0,0,0,0,0,1]))",
            "dual(E[0,0,0,0,0,1])(-1) + dual(E[0,0,0,0,0,3])",
        ],
        "",
    ),
    (
        "cotangent2-twist",
        I,
        &["wedge^2(dual(E[0,0,0,1,0,0]))(2)", "wedge^2(E[0,0,0,1,0,0])(-1)"],
        "Ω²(2) = ∧²T(-1)",
    ),
    (
        "K-self-dual",
        I,
        &[
            K_BUNDLE,
            "dual(E[0,0,0,0,0,1] + wedge^2(dual(E[0,0,0,1,0,0]))(2) + E[0,0,0,1,0,0](-1) + dual(E[0,0,0,1,0,0])(2))(1)",
        ],
        "K = S + Ω²(2) + T(-1) + Ω(2)",
    ),
    (
        "K-half",
        X,
        &[
            "E[-2,0,0,0,0,2]",
            "V[0,0,0,0,0,1] * E[-1,0,0,0,0,1]",
            "(V[0,0,0,0,1,0] + V[1,0,0,0,0,0]) * O",
            K_BUNDLE,
        ],
        "first half of the six-term sequence",
    ),
];

/// Parses [`BUILTIN`]. The entries are fixed, so failures are bugs.
pub fn builtin_ledger() -> Vec<Identity> {
    BUILTIN
        .iter()
        .map(|(name, kind, terms, note)| {
            Identity::parse(*name, *kind, terms)
                .unwrap_or_else(|e| panic!("built-in identity `{name}`: {e}"))
                .with_note(*note)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ledger::{check_identity, eval_expr, parse_expr};
    use crate::parabolic::cayley_plane;
    use alloc::string::ToString;

    #[test]
    fn all_builtins_pass() {
        let x = cayley_plane();
        let ledger = builtin_ledger();
        assert!(ledger.len() >= 17);
        for id in &ledger {
            let r = check_identity(&x, id).unwrap();
            assert!(r.passed, "{}: difference {:?}", id.name, r.decomposed);
        }
    }

    #[test]
    fn exact_terms_are_genuine() {
        let x = cayley_plane();
        for id in builtin_ledger().iter().filter(|i| i.kind == IdentityKind::ExactSeq) {
            for t in &id.terms {
                assert!(eval_expr(&x, t).unwrap().is_genuine(), "{}: {t}", id.name);
            }
        }
    }

    #[test]
    fn round_trips() {
        for id in builtin_ledger() {
            for t in &id.terms {
                assert_eq!(&parse_expr(&t.to_string()).unwrap(), t);
            }
        }
    }
}
