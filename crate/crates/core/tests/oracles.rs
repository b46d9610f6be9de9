//! Independent cross-checks of the engine against slower textbook formulas.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use cayley_core::parabolic::cayley_plane;
use cayley_core::verify::cayley27;
use cayley_core::*;
use num_bigint::BigInt;
use num_traits::Zero;

/// `Σ_{w ∈ W_sub} sign(w) e^{w(μ)}` for regular `μ`, by breadth-first search
/// over simple reflections; BFS depth is the length of `w`.
fn alternant(rs: &RootSystem, sub: &Subsystem, mu: &Weight) -> BTreeMap<Weight, i64> {
    let mut seen: BTreeMap<Weight, i64> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(mu.clone(), 1);
    queue.push_back(mu.clone());
    while let Some(w) = queue.pop_front() {
        let s = seen[&w];
        for i in sub.nodes() {
            let r = rs.reflect(i, &w);
            if !seen.contains_key(&r) {
                seen.insert(r.clone(), -s);
                queue.push_back(r);
            }
        }
    }
    seen
}

fn mul(a: &BTreeMap<Weight, i64>, b: &Character) -> BTreeMap<Weight, i64> {
    let mut out = BTreeMap::new();
    for (x, m) in a {
        for (y, n) in b.iter() {
            *out.entry(x + y).or_insert(0) += m * n;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Weyl's character formula in the form `A_ρ · χ_λ = A_{λ+ρ}`.
fn check_weyl_character(rs: &RootSystem, sub: &Subsystem, lambda: &Weight) {
    let chi = irrep_character(rs, sub, lambda).unwrap();
    let lhs = mul(&alternant(rs, sub, rs.rho()), &chi);
    let rhs = alternant(rs, sub, &(lambda + rs.rho()));
    assert_eq!(lhs, rhs, "Weyl character formula fails for {lambda} on {sub:?}");
}

#[test]
fn freudenthal_matches_weyl_character_formula_small_types() {
    for (preset, weights) in [
        ("A1", vec![vec![0], vec![1], vec![4]]),
        ("A2", vec![vec![1, 0], vec![1, 1], vec![2, 1], vec![0, 3]]),
        (
            "B3",
            vec![
                vec![1, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![1, 0, 1],
                vec![0, 0, 2],
            ],
        ),
        (
            "B4",
            vec![vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 1, 0, 0], vec![1, 0, 0, 1]],
        ),
        (
            "D5",
            vec![
                vec![1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1],
                vec![0, 1, 0, 0, 0],
                vec![1, 0, 0, 1, 0],
            ],
        ),
    ] {
        let rs = RootSystem::preset(preset).unwrap();
        for w in weights {
            check_weyl_character(&rs, &rs.full(), &Weight::new(&w));
        }
    }
}

#[test]
fn freudenthal_matches_weyl_character_formula_e6() {
    let rs = RootSystem::preset("E6-paper").unwrap();
    for i in [0, 5, 3] {
        check_weyl_character(&rs, &rs.full(), &rs.fundamental(i));
    }
}

#[test]
fn freudenthal_matches_weyl_character_formula_on_levi() {
    let x = cayley_plane();
    let rs = x.root_system();
    for c in [
        [0, 0, 0, 0, 0, 1],
        [-2, 0, 0, 0, 0, 2],
        [3, 1, 0, 0, 0, 0],
        [-1, 0, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 0],
        [-4, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 3],
    ] {
        check_weyl_character(rs, x.levi(), &Weight::new(&c));
    }
}

fn expand(c: &Character) -> Vec<Weight> {
    let mut out = Vec::new();
    for (w, m) in c.iter() {
        assert!(m > 0);
        out.extend(std::iter::repeat_n(w.clone(), m as usize));
    }
    out
}

fn brute_power(c: &Character, k: usize, sym: bool) -> Character {
    let ws = expand(c);
    let n = ws.len();
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    let mut idx: Vec<usize> = (0..k).map(|i| if sym { 0 } else { i }).collect();
    if !sym && k > n {
        return Character::zero(c.rank());
    }
    loop {
        let mut s = Weight::zero(c.rank());
        for &i in &idx {
            s = &s + &ws[i];
        }
        *acc.entry(s).or_insert(0) += 1;
        // next combination (with or without repetition)
        let mut pos = k;
        loop {
            if pos == 0 {
                return Character::from_terms(c.rank(), acc).unwrap();
            }
            pos -= 1;
            let max = if sym { n - 1 } else { n - k + pos };
            if idx[pos] < max {
                idx[pos] += 1;
                for q in pos + 1..k {
                    idx[q] = if sym { idx[pos] } else { idx[q - 1] + 1 };
                }
                break;
            }
        }
    }
}

#[test]
fn plethysm_matches_brute_force() {
    let x = cayley_plane();
    let limits = Limits::default();
    let s = x.character(&x.bundle(&[0, 0, 0, 0, 0, 1]).unwrap()).unwrap();
    let t = x.character(&x.bundle(&[0, 0, 0, 1, 0, 0]).unwrap()).unwrap();
    let rs = RootSystem::preset("E6-paper").unwrap();
    let v27 = irrep_character(&rs, &rs.full(), &rs.fundamental(0)).unwrap();
    for (c, kmax) in [(&s, 5), (&t, 3), (&v27, 3)] {
        for k in 0..=kmax {
            assert_eq!(
                power_op(c, k as u32, PowerKind::Wedge, &limits).unwrap(),
                brute_power(c, k, false),
                "wedge^{k}"
            );
            assert_eq!(
                power_op(c, k as u32, PowerKind::Sym, &limits).unwrap(),
                brute_power(c, k, true),
                "sym^{k}"
            );
        }
    }
    // exterior powers vanish past the dimension
    let a2 = RootSystem::preset("A2").unwrap();
    let v3 = irrep_character(&a2, &a2.full(), &a2.fundamental(0)).unwrap();
    assert!(power_op(&v3, 4, PowerKind::Wedge, &limits).unwrap().is_empty());
    assert_eq!(
        power_op(&v3, 3, PowerKind::Wedge, &limits).unwrap(),
        Character::trivial(2)
    );
}

#[test]
fn wedge_powers_of_s() {
    let x = cayley_plane();
    let rs = x.root_system();
    let s = x.character(&x.bundle(&[0, 0, 0, 0, 0, 1]).unwrap()).unwrap();
    for (k, w, rank) in [
        (1, [0, 0, 0, 0, 0, 1], 10u32),
        (2, [0, 0, 0, 0, 1, 0], 45),
        (3, [0, 0, 1, 0, 0, 0], 120),
        (4, [0, 1, 0, 1, 0, 0], 210),
    ] {
        let p = power_op(&s, k, PowerKind::Wedge, rs.limits()).unwrap();
        let d = decompose(rs, x.levi(), &p).unwrap();
        assert_eq!(d.terms, vec![(Weight::new(&w), 1)], "wedge^{k}");
        assert_eq!(d.total_dim(rs, x.levi()).unwrap(), rank.into());
    }
}

/// Euler characteristic of `E_ω` is Weyl's polynomial at `ω`.
fn check_bbw(x: &ParabolicSetup, b: &BundleWeight) {
    let rs = x.root_system();
    let chi = weyl_polynomial(rs, &rs.full(), b.weight());
    match cohomology(x, b).unwrap() {
        CohomologyResult::Zero => assert!(chi.is_zero(), "{b}"),
        CohomologyResult::Nonzero { degree, weight, dim } => {
            assert!(degree <= x.dim_x());
            assert!(rs.is_dominant(&rs.full(), &weight));
            let signed = if degree % 2 == 0 {
                BigInt::from(dim)
            } else {
                -BigInt::from(dim)
            };
            assert_eq!(signed, chi, "{b}");
        }
    }
}

#[test]
fn bbw_single_degree_law_on_collection_summands() {
    let c = cayley27();
    let x = &c.setup;
    let mut seen = BTreeSet::new();
    for a in &c.bundles {
        for b in &c.bundles {
            let g = x.levi_tensor(&x.bundle_dual(a).unwrap(), b).unwrap();
            for (w, _) in g.bundles() {
                seen.insert(w);
            }
        }
    }
    assert!(seen.len() > 50);
    for b in &seen {
        check_bbw(x, b);
    }
}

#[test]
fn bbw_law_on_line_bundles_and_quadric() {
    let x = cayley_plane();
    let rs = x.root_system();
    for t in -30..=30 {
        check_bbw(&x, &x.line_bundle(t));
        if t > 0 {
            let CohomologyResult::Nonzero { degree: 0, dim, .. } = cohomology(&x, &x.line_bundle(t)).unwrap() else {
                panic!("O({t})");
            };
            assert_eq!(dim, weyl_dim(rs, &rs.full(), &Weight::zero(6).shifted(0, t)).unwrap());
        }
    }
    let q = ParabolicSetup::new(RootSystem::preset("B4").unwrap(), 0).unwrap();
    for a in -12..=12 {
        for tail in [[0, 0, 0], [0, 0, 1], [1, 0, 0], [0, 1, 1]] {
            let b = q.bundle(&[a, tail[0], tail[1], tail[2]]).unwrap();
            check_bbw(&q, &b);
        }
    }
}

#[test]
fn klimyk_matches_character_product_on_collection() {
    let c = cayley27();
    let x = &c.setup;
    let rs = x.root_system();
    for a in &c.bundles {
        for b in &c.bundles {
            let da = x.bundle_dual(a).unwrap();
            let klimyk = x.levi_tensor(&da, b).unwrap();
            let prod = char_arith(
                &x.character(&da).unwrap(),
                &x.character(b).unwrap(),
                CharOp::Mul,
                rs.limits(),
            )
            .unwrap();
            assert_eq!(klimyk, decompose(rs, x.levi(), &prod).unwrap(), "{a} ⊗ {b}");
        }
    }
}

#[test]
fn branching_restores_full_character() {
    let x = cayley_plane();
    let rs = x.root_system();
    for i in 0..6 {
        let lambda = rs.fundamental(i);
        let g = x.branch(&lambda).unwrap();
        assert_eq!(
            g.to_character(rs, x.levi()).unwrap(),
            *irrep_character(rs, &rs.full(), &lambda).unwrap()
        );
        assert!(g.multiplicity(&lambda) >= 1);
    }
}

/// `χ(Ext(E, b))` computed term by term over the irreducible pieces of each
/// side of every built-in identity.
#[test]
fn euler_characteristic_invariant_under_character_equal_replacement() {
    let x = cayley_plane();
    let rs = x.root_system();
    let probes = [
        x.line_bundle(3),
        x.bundle(&[2, 0, 0, 0, 0, 1]).unwrap(),
        x.bundle(&[-1, 1, 0, 0, 0, 0]).unwrap(),
    ];
    let chi_of = |e: &ledger::BundleExpr, b: &BundleWeight| -> BigInt {
        let g = decompose(rs, x.levi(), &ledger::eval_expr(&x, e).unwrap()).unwrap();
        g.bundles()
            .map(|(piece, m)| ext_table(&x, &piece, b).unwrap().euler_characteristic() * m)
            .sum()
    };
    for id in ledger::builtin_ledger() {
        for b in &probes {
            let total: BigInt = id
                .terms
                .iter()
                .enumerate()
                .map(|(i, t)| if i % 2 == 0 { chi_of(t, b) } else { -chi_of(t, b) })
                .sum();
            assert!(total.is_zero(), "{}", id.name);
        }
    }
}
