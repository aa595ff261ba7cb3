//! Closed-form expansions of the path, cycle, tadpole and twinned-tadpole
//! families, plus the fork clan formulas.
//!
//! Generators return the elementary basis unless noted otherwise.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, One, Zero};

use crate::error::{guard, Error, Result};
use crate::graphs::{clan, cycle, fork, tadpole, twin, Graph};
use crate::partitions::{partitions_of, Partition};
use crate::rational::{factorial, rat, Rational};
use crate::symfunc::{to_basis, Basis, SymFn};

use super::csf;

pub const MAX_PATH_ORDER: usize = 40;
pub const MAX_CYCLE_ORDER: usize = 12;
pub const MAX_TWINNED_TAIL: usize = 34;
pub const MAX_FORK_CLAN_K: usize = 30;

fn cached(
    cache: &'static OnceLock<Mutex<HashMap<usize, Arc<SymFn>>>>,
    key: usize,
    build: impl FnOnce() -> Result<SymFn>,
) -> Result<SymFn> {
    let map = cache.get_or_init(Default::default);
    if let Some(f) = map.lock().expect("cache poisoned").get(&key) {
        return Ok((**f).clone());
    }
    let f = Arc::new(build()?);
    map.lock().expect("cache poisoned").entry(key).or_insert_with(|| Arc::clone(&f));
    Ok((*f).clone())
}

fn multinomial(counts: &[usize]) -> BigInt {
    let total: usize = counts.iter().sum();
    counts.iter().fold(factorial(total), |acc, &r| acc / factorial(r))
}

/// `Π_j (j-1)^{r_j}` over `j ≥ 1`, with `0^0 = 1`.
fn weight(r: &[usize]) -> BigInt {
    r.iter()
        .enumerate()
        .skip(1)
        .map(|(j, &rj)| num::pow(BigInt::from(j - 1), rj))
        .product()
}

/// Wolfe's coefficient `[e_λ] X_{P_n}`.
pub fn path_coefficient(lambda: &Partition) -> BigInt {
    let mut r = lambda.multiplicities();
    let mut c = multinomial(&r[1..]) * weight(&r);
    for i in 1..r.len() {
        if r[i] == 0 {
            continue;
        }
        r[i] -= 1;
        c += multinomial(&r[1..]) * weight(&r);
        r[i] += 1;
    }
    c
}

/// `X_{P_n}`; `X_{P_0} = 1`.
pub fn path_csf(n: usize) -> Result<SymFn> {
    guard("path", n, "MAX_PATH_ORDER", MAX_PATH_ORDER)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SymFn>>>> = OnceLock::new();
    cached(&CACHE, n, || {
        Ok(SymFn::from_terms(
            Basis::E,
            partitions_of(n).into_iter().map(|lam| {
                let c = path_coefficient(&lam);
                (lam, Rational::from_integer(c))
            }),
        ))
    })
}

/// `X_{C_n}`, with `X_{C_2} = 2e_2`.
pub fn cycle_csf(n: usize) -> Result<SymFn> {
    if n < 2 {
        return Err(Error::BadParameter(format!("cycle needs at least 2 vertices, got {n}")));
    }
    guard("cycle", n, "MAX_CYCLE_ORDER", MAX_CYCLE_ORDER)?;
    if n == 2 {
        return Ok(&SymFn::e(&[2]) * 2);
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SymFn>>>> = OnceLock::new();
    cached(&CACHE, n, || to_basis(&csf(&cycle(n)?)?, Basis::E))
}

/// `X_{T⟨a,b⟩} = (a-1) X_{P_{a+b}} - Σ_{i=2}^{a-1} X_{C_i} X_{P_{a+b-i}}`.
pub fn tadpole_csf(a: usize, b: usize) -> Result<SymFn> {
    if a < 3 || b < 1 {
        return Err(Error::BadParameter(format!("tadpole needs a >= 3 and b >= 1, got ({a}, {b})")));
    }
    guard("tadpole", a + b, "MAX_PATH_ORDER", MAX_PATH_ORDER)?;
    guard("tadpole cycle", a, "MAX_CYCLE_ORDER + 1", MAX_CYCLE_ORDER + 1)?;
    let mut f = &path_csf(a + b)? * (a as i64 - 1);
    for i in 2..a {
        f = &f - &(&cycle_csf(i)? * &path_csf(a + b - i)?);
    }
    Ok(f)
}

/// `X_{P_{m,n}} = X_{P_{m+1}} + e_1 X_{P_m} - X_{P_n} X_{P_{m-n+1}}`.
pub fn path_with_leaf_csf(m: usize, n: usize) -> Result<SymFn> {
    if n < 1 || n > m {
        return Err(Error::BadParameter(format!("path_with_leaf needs 1 <= n <= m, got ({m}, {n})")));
    }
    guard("path with leaf", m, "MAX_PATH_ORDER - 1", MAX_PATH_ORDER - 1)?;
    let e1 = SymFn::e(&[1]);
    let f = &path_csf(m + 1)? + &(&e1 * &path_csf(m)?);
    Ok(&f - &(&path_csf(n)? * &path_csf(m - n + 1)?))
}

/// Small expansions that feed the twinned-tadpole formulas, as stated.
#[derive(Clone, Debug)]
pub struct SmallForms {
    pub p3: SymFn,
    pub p4: SymFn,
    pub c2: SymFn,
    pub c3: SymFn,
    pub c4: SymFn,
    /// The cycle part `S` of the twinned tadpole.
    pub s: SymFn,
}

fn e_combo(terms: &[(i64, &[usize])]) -> SymFn {
    SymFn::from_terms(
        Basis::E,
        terms.iter().map(|&(c, parts)| (Partition::from_unsorted(parts.to_vec()), rat(c))),
    )
}

pub fn small_forms() -> SmallForms {
    SmallForms {
        p3: e_combo(&[(1, &[2, 1]), (3, &[3])]),
        p4: e_combo(&[(2, &[2, 2]), (2, &[3, 1]), (4, &[4])]),
        c2: e_combo(&[(2, &[2])]),
        c3: e_combo(&[(6, &[3])]),
        c4: e_combo(&[(2, &[2, 2]), (12, &[4])]),
        s: e_combo(&[(4, &[3, 2]), (6, &[4, 1]), (50, &[5])]),
    }
}

fn check_tail(b: usize) -> Result<()> {
    if b < 1 {
        return Err(Error::BadParameter("tail length b must be at least 1".into()));
    }
    guard("twinned tadpole tail", b, "MAX_TWINNED_TAIL", MAX_TWINNED_TAIL)
}

/// `X` of the tadpole `T⟨4,b⟩` twinned at its degree-3 vertex, as a
/// combination of path functions.
pub fn twinned_tadpole4_csf(b: usize) -> Result<SymFn> {
    check_tail(b)?;
    let p = |n: usize| path_csf(n);
    let mut f = &p(b + 5)? * 20;
    f = &f + &(&(&SymFn::e(&[1]) * 2) * &p(b + 4)?);
    f = &f - &(&(&SymFn::e(&[2]) * 16) * &p(b + 3)?);
    f = &f - &(&e_combo(&[(2, &[2, 1]), (42, &[3])]) * &p(b + 2)?);
    f = &f - &(&e_combo(&[(56, &[4]), (4, &[2, 2]), (4, &[3, 1])]) * &p(b + 1)?);
    f = &f - &(&e_combo(&[(6, &[4, 1]), (4, &[3, 2]), (50, &[5])]) * &p(b)?);
    Ok(f)
}

/// `X_{H_b}` for `H_b`, the twinned tadpole with the edge `v4'v5` removed.
pub fn hb_csf(b: usize) -> Result<SymFn> {
    check_tail(b)?;
    let SmallForms { p3, p4, c2, c3, c4, .. } = small_forms();
    let e1 = SymFn::e(&[1]);
    let p = |n: usize| path_csf(n);
    let mut f = &p(b + 5)? * 10;
    f = &f + &(&e1 * &p(b + 4)?);
    f = &f - &(&(&c2 * 4) * &p(b + 3)?);
    let k2 = &(&(&c3 * 4) + &(&e1 * &c2)) - &p3;
    f = &f - &(&k2 * &p(b + 2)?);
    let k1 = &(&(&c4 * 3) + &(&e1 * &c3)) - &(&p4 * 2);
    f = &f - &(&k1 * &p(b + 1)?);
    Ok(f)
}

/// `X_{H_b}` assembled from the intermediate tadpoles and leafed paths
/// before simplification into path functions.
pub fn hb_via_intermediates(b: usize) -> Result<SymFn> {
    check_tail(b)?;
    let e1 = SymFn::e(&[1]);
    let mut f = &tadpole_csf(4, b + 1)? * 2;
    f = &f + &(&tadpole_csf(5, b)? * 2);
    f = &f + &(&e1 * &(&tadpole_csf(4, b)? + &path_csf(b + 4)?));
    f = &f - &(&path_csf(b + 1)? * &cycle_csf(4)?);
    f = &f - &(&path_with_leaf_csf(b + 4, 4)? * 2);
    f = &f - &path_with_leaf_csf(b + 4, 3)?;
    Ok(&f - &path_csf(b + 5)?)
}

/// `2 X_{H_b} - X_{P_b} X_S`.
pub fn twinned_via_hb(b: usize) -> Result<SymFn> {
    let hb = hb_csf(b)?;
    Ok(&(&hb * 2) - &(&path_csf(b)? * &small_forms().s))
}

/// `T⟨4,b⟩` twinned at vertex 4; the twin is labeled `b + 5`.
pub fn twinned_tadpole4(b: usize) -> Result<Graph> {
    twin(&tadpole(4, b)?, 4)
}

/// `H_b`: the twinned tadpole minus the edge between the twin and `v5`.
pub fn hb_graph(b: usize) -> Result<Graph> {
    twinned_tadpole4(b)?.without_edges(&[(b + 5, 5)])
}

/// `F_w^{(k)}`, the fork with `w` blown up into a `(k+1)`-clique.
pub fn fork_clan(k: usize) -> Result<Graph> {
    let f = fork();
    let w = f.vertex_named("w").expect("fork has w");
    clan(&f, w, k)
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::BadParameter("k must be at least 1".into()));
    }
    guard("fork clan", k, "MAX_FORK_CLAN_K", MAX_FORK_CLAN_K)
}

/// The six partitions indexing the fork clan transition matrices, in order:
/// `(3,2,1^k), (3,1^{k+2}), (2^3,1^{k-1}), (2^2,1^{k+1}), (2,1^{k+3}), (1^{k+5})`.
pub fn fork_clan_partitions(k: usize) -> Result<[Partition; 6]> {
    check_k(k)?;
    Ok([
        Partition::from_exponents(&[(3, 1), (2, 1), (1, k)]),
        Partition::from_exponents(&[(3, 1), (1, k + 2)]),
        Partition::from_exponents(&[(2, 3), (1, k - 1)]),
        Partition::from_exponents(&[(2, 2), (1, k + 1)]),
        Partition::from_exponents(&[(2, 1), (1, k + 3)]),
        Partition::column(k + 5),
    ])
}

/// Stable-partition counts of `F_w^{(k)}` on its five realizable types, as
/// an augmented-monomial expansion written out in the monomial basis.
pub fn fork_clan_monomial_closed_form(k: usize) -> Result<SymFn> {
    let ps = fork_clan_partitions(k)?;
    let k = k as i64;
    let counts = [(0, k + 1), (1, 2), (3, 3 * k + 5), (4, k + 6), (5, 1)];
    Ok(SymFn::from_terms(
        Basis::M,
        counts.iter().map(|&(i, a)| {
            let lam = &ps[i];
            (lam.clone(), Rational::from_integer(BigInt::from(a) * lam.multiplicity_factorial()))
        }),
    ))
}

/// Schur expansion of `X_{F_w^{(k)}}`.
pub fn fork_clan_schur_closed_form(k: usize) -> Result<SymFn> {
    let ps = fork_clan_partitions(k)?;
    let f = factorial(k + 1);
    let kk = BigInt::from(k);
    let coeffs = [
        f.clone(),
        (&kk + 3) * &f,
        BigInt::from(-2) * &f,
        BigInt::from(5) * (&kk + 1) * &f,
        (&kk * &kk * &kk + 5 * &kk * &kk + 14 * &kk + 14) * &f,
        BigInt::from(2) * num::pow(&kk + 2, 3) * &f,
    ];
    Ok(SymFn::from_terms(
        Basis::S,
        ps.iter().cloned().zip(coeffs.into_iter().map(Rational::from_integer)),
    ))
}

/// Closed-form Kostka entries `K_{λ_i, λ_j}` on the six fork clan partitions.
pub fn fork_clan_kostka_closed_form(k: usize) -> Result<[[BigInt; 6]; 6]> {
    check_k(k)?;
    let k = BigInt::from(k);
    let z = BigInt::zero;
    let o = BigInt::one;
    Ok([
        [
            o(),
            &k + 1,
            BigInt::from(2),
            2 * &k + 2,
            (&k + 3) * (&k + 1),
            (&k + 5) * (&k + 3) * (&k + 1) / 3,
        ],
        [z(), o(), z(), o(), &k + 3, (&k + 4) * (&k + 3) / 2],
        [z(), z(), o(), k.clone(), (&k + 3) * &k / 2, (&k + 5) * (&k + 4) * &k / 6],
        [z(), z(), z(), o(), &k + 2, (&k + 5) * (&k + 2) / 2],
        [z(), z(), z(), z(), o(), &k + 4],
        [z(), z(), z(), z(), z(), o()],
    ])
}

/// Closed-form inverse of [`fork_clan_kostka_closed_form`].
pub fn fork_clan_inverse_kostka_closed_form(k: usize) -> Result<[[BigInt; 6]; 6]> {
    check_k(k)?;
    let k = BigInt::from(k);
    let z = BigInt::zero;
    let o = BigInt::one;
    Ok([
        [
            o(),
            -&k - 1,
            BigInt::from(-2),
            &k - 1,
            2 * &k + 2,
            (&k + 2) * (-&k - 1),
        ],
        [z(), o(), z(), BigInt::from(-1), BigInt::from(-1), &k + 3],
        [z(), z(), o(), -&k, (&k + 1) * &k / 2, (&k + 2) * (&k + 1) * &k / -6],
        [z(), z(), z(), o(), -&k - 2, (&k + 3) * (&k + 2) / 2],
        [z(), z(), z(), z(), o(), -&k - 4],
        [z(), z(), z(), z(), z(), o()],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::path_with_leaf;
    use crate::symfunc::coefficient;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn brute_e(g: &Graph) -> SymFn {
        to_basis(&csf(g).unwrap(), Basis::E).unwrap()
    }

    #[test]
    fn small_paths() {
        let sf = small_forms();
        assert_eq!(path_csf(3).unwrap(), sf.p3);
        assert_eq!(path_csf(4).unwrap(), sf.p4);
        assert_eq!(path_csf(0).unwrap(), SymFn::one());
        assert_eq!(path_csf(1).unwrap(), SymFn::e(&[1]));
        assert!(matches!(path_csf(41), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn small_cycles() {
        let sf = small_forms();
        assert_eq!(cycle_csf(2).unwrap(), sf.c2);
        assert_eq!(cycle_csf(3).unwrap(), sf.c3);
        assert_eq!(cycle_csf(4).unwrap(), sf.c4);
        assert!(cycle_csf(1).is_err());
        assert!(matches!(cycle_csf(13), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn tadpole_three_one() {
        let expect = &(&path_csf(4).unwrap() * 2) - &(&(&SymFn::e(&[2]) * 2) * &path_csf(2).unwrap());
        assert_eq!(tadpole_csf(3, 1).unwrap(), expect);
        assert_eq!(tadpole_csf(3, 1).unwrap(), brute_e(&tadpole(3, 1).unwrap()));
    }

    #[test]
    fn leafed_paths_match_brute_force() {
        assert_eq!(path_with_leaf_csf(2, 1).unwrap(), path_csf(3).unwrap());
        for (m, n) in [(4, 3), (4, 4), (5, 2)] {
            assert_eq!(path_with_leaf_csf(m, n).unwrap(), brute_e(&path_with_leaf(m, n).unwrap()));
        }
        assert!(path_with_leaf_csf(3, 4).is_err());
    }

    #[test]
    fn twinned_tadpole_small_b() {
        let f = twinned_tadpole4_csf(1).unwrap();
        assert_eq!(f, brute_e(&twinned_tadpole4(1).unwrap()));
        assert_eq!(coefficient(&f, Basis::E, &p(&[3, 3])).unwrap(), rat(-6));
        let f3 = twinned_tadpole4_csf(3).unwrap();
        assert_eq!(f3.get(&p(&[3, 3, 2])), rat(-2));
        let f2 = twinned_tadpole4_csf(2).unwrap();
        assert_eq!(f2.get(&p(&[3, 3, 1])), rat(-4));
    }

    #[test]
    fn hb_forms_agree() {
        assert_eq!(hb_csf(1).unwrap(), brute_e(&hb_graph(1).unwrap()));
        for b in 1..=3 {
            assert_eq!(hb_csf(b).unwrap(), hb_via_intermediates(b).unwrap(), "b = {b}");
            assert_eq!(twinned_tadpole4_csf(b).unwrap(), twinned_via_hb(b).unwrap(), "b = {b}");
        }
    }

    #[test]
    fn fork_clan_closed_forms() {
        for k in 1..=2 {
            let g = fork_clan(k).unwrap();
            let x = csf(&g).unwrap();
            assert_eq!(x, fork_clan_monomial_closed_form(k).unwrap());
            assert_eq!(to_basis(&x, Basis::S).unwrap(), fork_clan_schur_closed_form(k).unwrap());
        }
        let s1 = fork_clan_schur_closed_form(1).unwrap();
        assert_eq!(s1.get(&p(&[2, 2, 2])), rat(-4));
        assert!(fork_clan_schur_closed_form(0).is_err());
    }

    #[test]
    fn wolfe_triple_three() {
        // [e_{3^{k+2}}] X_{P_{3k+6}} = 6 * 2^k
        for k in 0..4usize {
            let lam = Partition::from_exponents(&[(3, k + 2)]);
            assert_eq!(path_coefficient(&lam), BigInt::from(6) * num::pow(BigInt::from(2), k));
        }
    }
}
