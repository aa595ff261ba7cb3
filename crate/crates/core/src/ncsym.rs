//! Symmetric functions in noncommuting variables at a fixed degree `d`.
//!
//! Elements are sparse combinations over set partitions of `{1..d}` in either
//! the monomial (`m_π`) or elementary (`e_π`) basis.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, Signed, Zero};

use crate::error::{guard, Error, Result};
use crate::graphs::Graph;
use crate::partitions::Partition;
use crate::rational::{format_rational, Rational};
use crate::symfunc::{Basis, SymFn};

pub const MAX_NCSYM_DEGREE: usize = 8;

/// A set partition of `{1..d}` stored as a restricted growth string: entry
/// `j` is the index of the block holding element `j + 1`, blocks numbered by
/// their minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    rgs: Vec<u8>,
    blocks: usize,
}

impl SetPartition {
    /// Builds a set partition from blocks of 1-based elements.
    pub fn from_blocks(d: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; d];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::BadParameter("set partition blocks must be nonempty".into()));
            }
            for &x in block {
                if x == 0 || x > d {
                    return Err(Error::BadParameter(format!("element {x} is outside 1..={d}")));
                }
                if label[x - 1] != usize::MAX {
                    return Err(Error::BadParameter(format!("element {x} appears in two blocks")));
                }
                label[x - 1] = b;
            }
        }
        if let Some(missing) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::BadParameter(format!("element {} is not covered", missing + 1)));
        }
        Ok(Self::from_labels(&label))
    }

    /// Canonicalizes an arbitrary block labeling of `1..=d`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut renumber: HashMap<usize, u8> = HashMap::new();
        let rgs = labels
            .iter()
            .map(|l| {
                let next = renumber.len() as u8;
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        SetPartition { rgs, blocks: renumber.len() }
    }

    /// All singletons.
    pub fn discrete(d: usize) -> Self {
        Self::from_labels(&(0..d).collect::<Vec<_>>())
    }

    /// A single block.
    pub fn full(d: usize) -> Self {
        Self::from_labels(&vec![0; d])
    }

    pub fn d(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    /// Blocks of 1-based elements, sorted by minimum, elements ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (j, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(j + 1);
        }
        out
    }

    fn block_masks(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.blocks];
        for (j, &b) in self.rgs.iter().enumerate() {
            out[b as usize] |= 1 << j;
        }
        out
    }

    /// `λ(π)`, the block sizes in decreasing order.
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.block_masks().iter().map(|m| m.count_ones() as usize).collect())
    }

    /// Size of the block containing the 1-based element `i`.
    pub fn block_size_of(&self, i: usize) -> usize {
        let b = self.rgs[i - 1];
        self.rgs.iter().filter(|&&x| x == b).count()
    }

    /// `σ ≤ τ` in refinement order: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        let mut image = vec![u8::MAX; self.blocks];
        for (&s, &t) in self.rgs.iter().zip(&other.rgs) {
            let slot = &mut image[s as usize];
            if *slot == u8::MAX {
                *slot = t;
            } else if *slot != t {
                return false;
            }
        }
        true
    }

    /// Whether `self ∧ other` is the discrete partition.
    pub fn meets_trivially(&self, other: &SetPartition) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.rgs.iter().zip(&other.rgs).all(|pair| seen.insert(pair))
    }

    /// Whether every block is a stable set of `g` (vertex `j` is element `j`).
    pub fn is_stable_in(&self, g: &Graph) -> bool {
        self.block_masks()
            .iter()
            .all(|&m| (0..self.d()).all(|j| m >> j & 1 == 0 || g.neighbor_mask(j) & m == 0))
    }
}

impl Ord for SetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.blocks().cmp(&other.blocks()))
    }
}

impl PartialOrd for SetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let items: Vec<String> = block.iter().map(|x| x.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        f.write_str("}")
    }
}

fn for_each_rgs(d: usize, mut visit: impl FnMut(&[u8])) {
    fn rec(rgs: &mut Vec<u8>, d: usize, max: u8, visit: &mut dyn FnMut(&[u8])) {
        if rgs.len() == d {
            visit(rgs);
            return;
        }
        let top = if rgs.is_empty() { 0 } else { max + 1 };
        for b in 0..=top {
            rgs.push(b);
            rec(rgs, d, max.max(b), visit);
            rgs.pop();
        }
    }
    if d == 0 {
        visit(&[]);
    } else {
        rec(&mut Vec::with_capacity(d), d, 0, &mut visit);
    }
}

/// Every set partition of `{1..d}`, in restricted growth order.
pub fn all_set_partitions(d: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    for_each_rgs(d, |rgs| {
        let blocks = rgs.iter().copied().max().map_or(0, |m| m as usize + 1);
        out.push(SetPartition { rgs: rgs.to_vec(), blocks });
    });
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NcBasis {
    M,
    E,
}

impl fmt::Display for NcBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NcBasis::M => "m",
            NcBasis::E => "e",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCSymFn {
    d: usize,
    basis: NcBasis,
    terms: BTreeMap<SetPartition, Rational>,
}

impl NCSymFn {
    pub fn zero(d: usize, basis: NcBasis) -> Self {
        NCSymFn { d, basis, terms: BTreeMap::new() }
    }

    pub fn element(basis: NcBasis, pi: SetPartition) -> Self {
        let mut f = Self::zero(pi.d(), basis);
        f.add_term(pi, Rational::from_integer(1.into()));
        f
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn basis(&self) -> NcBasis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SetPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, pi: &SetPartition) -> Rational {
        self.terms.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c · b_π`.
    ///
    /// # Panics
    /// If `π` is not a partition of `{1..d}`.
    pub fn add_term(&mut self, pi: SetPartition, c: Rational) {
        assert_eq!(pi.d(), self.d, "set partition of the wrong ground set");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(pi) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl fmt::Display for NCSymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (pi, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} {}{}", format_rational(c), self.basis, pi)?;
        }
        Ok(())
    }
}

fn check_degree(d: usize) -> Result<()> {
    guard("NCSym degree", d, "MAX_NCSYM_DEGREE", MAX_NCSYM_DEGREE)
}

/// `Y_G` in the `m_π` basis, reading vertex `j` as position `j`.
pub fn y_graph(g: &Graph) -> Result<NCSymFn> {
    check_degree(g.order())?;
    let mut f = NCSymFn::zero(g.order(), NcBasis::M);
    let one = Rational::from_integer(1.into());
    crate::csf::for_each_stable_partition(g, |blocks| {
        let mut labels = vec![0; g.order()];
        for (b, &mask) in blocks.iter().enumerate() {
            for (j, l) in labels.iter_mut().enumerate() {
                if mask >> j & 1 == 1 {
                    *l = b;
                }
            }
        }
        f.add_term(SetPartition::from_labels(&labels), one.clone());
    });
    Ok(f)
}

/// `e_π = Σ m_σ` over `σ` with `σ ∧ π` discrete.
pub fn e_pi_in_m(pi: &SetPartition) -> Result<NCSymFn> {
    check_degree(pi.d())?;
    let mut f = NCSymFn::zero(pi.d(), NcBasis::M);
    let one = Rational::from_integer(1.into());
    for sigma in all_set_partitions(pi.d()) {
        if sigma.meets_trivially(pi) {
            f.add_term(sigma, one.clone());
        }
    }
    Ok(f)
}

/// Rewrites an `e_π` combination in the `m_π` basis, term by term.
pub fn from_e_basis(f: &NCSymFn) -> Result<NCSymFn> {
    if f.basis == NcBasis::M {
        return Ok(f.clone());
    }
    check_degree(f.d)?;
    let all = all_set_partitions(f.d);
    let mut out = NCSymFn::zero(f.d, NcBasis::M);
    for (pi, c) in &f.terms {
        for sigma in all.iter().filter(|s| s.meets_trivially(pi)) {
            out.add_term(sigma.clone(), c.clone());
        }
    }
    Ok(out)
}

/// `μ(0̂, x)` style products: each group of `k` merged parts contributes
/// `(-1)^{k-1} (k-1)!`.
fn mobius_of_groups(group_sizes: impl Iterator<Item = usize>) -> BigInt {
    group_sizes
        .map(|k| {
            let f = crate::rational::factorial(k - 1);
            if k % 2 == 0 {
                -f
            } else {
                f
            }
        })
        .product()
}

/// Partitions `items` (block bitmasks) into groups, visiting the merged
/// masks and the number of items in each group.
fn for_each_grouping(items: &[u64], mut visit: impl FnMut(&[u64], &[usize])) {
    for_each_rgs(items.len(), |rgs| {
        let n = rgs.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut masks = vec![0u64; n];
        let mut sizes = vec![0usize; n];
        for (item, &g) in items.iter().zip(rgs) {
            masks[g as usize] |= item;
            sizes[g as usize] += 1;
        }
        visit(&masks, &sizes);
    });
}

fn masks_to_partition(d: usize, masks: &[u64]) -> SetPartition {
    let mut labels = vec![0; d];
    for (b, &m) in masks.iter().enumerate() {
        for (j, l) in labels.iter_mut().enumerate() {
            if m >> j & 1 == 1 {
                *l = b;
            }
        }
    }
    SetPartition::from_labels(&labels)
}

fn singleton_masks(mask: u64) -> Vec<u64> {
    (0..64).filter(|j| mask >> j & 1 == 1).map(|j| 1u64 << j).collect()
}

/// Solves `f = Σ_π c_π e_π` for `c`.
///
/// With `[σ ∧ π = 0̂] = Σ_{τ ≤ σ, τ ≤ π} μ(0̂, τ)` the system factors through
/// the lattice: Möbius-invert `f` downward to get `μ(0̂,τ) Σ_{π ≥ τ} c_π`,
/// divide, then Möbius-invert upward.
pub fn to_e_basis(f: &NCSymFn) -> Result<NCSymFn> {
    if f.basis == NcBasis::E {
        return Ok(f.clone());
    }
    let d = f.d;
    check_degree(d)?;
    let all = all_set_partitions(d);

    // g_τ = Σ_{σ ≤ τ} μ(σ, τ) f_σ, then h_τ = g_τ / μ(0̂, τ)
    let mut upper: HashMap<SetPartition, Rational> = HashMap::new();
    for tau in &all {
        let mut g = Rational::zero();
        let parts: Vec<Vec<u64>> = tau.block_masks().into_iter().map(singleton_masks).collect();
        for_each_refinement(d, &parts, |sigma, mu| {
            let c = f.get(sigma);
            if !c.is_zero() {
                g += c * Rational::from_integer(mu.clone());
            }
        });
        if g.is_zero() {
            continue;
        }
        let mu0 = mobius_of_groups(tau.block_masks().iter().map(|m| m.count_ones() as usize));
        upper.insert(tau.clone(), g / Rational::from_integer(mu0));
    }

    // c_π = Σ_{τ ≥ π} μ(π, τ) h_τ
    let mut out = NCSymFn::zero(d, NcBasis::E);
    for pi in &all {
        let mut c = Rational::zero();
        for_each_grouping(&pi.block_masks(), |masks, sizes| {
            let tau = masks_to_partition(d, masks);
            if let Some(h) = upper.get(&tau) {
                c += h * Rational::from_integer(mobius_of_groups(sizes.iter().copied()));
            }
        });
        out.add_term(pi.clone(), c);
    }
    Ok(out)
}

/// Visits every `σ ≤ τ` (given `τ` as per-block lists of singleton masks)
/// with `μ(σ, τ)`.
fn for_each_refinement(d: usize, parts: &[Vec<u64>], mut visit: impl FnMut(&SetPartition, &BigInt)) {
    fn rec(
        d: usize,
        parts: &[Vec<u64>],
        i: usize,
        masks: &mut Vec<u64>,
        mu: BigInt,
        visit: &mut dyn FnMut(&SetPartition, &BigInt),
    ) {
        if i == parts.len() {
            visit(&masks_to_partition(d, masks), &mu);
            return;
        }
        for_each_grouping(&parts[i], |merged, _| {
            let len = masks.len();
            masks.extend_from_slice(merged);
            let k = merged.len();
            let local = mobius_of_groups(std::iter::once(k));
            rec(d, parts, i + 1, masks, &mu * local, visit);
            masks.truncate(len);
        });
    }
    rec(d, parts, 0, &mut Vec::new(), BigInt::from(1), &mut visit);
}

/// The commutative image: `e_π ↦ λ(π)! e_{λ(π)}` and `m_π ↦ r(λ(π))! m_{λ(π)}`.
pub fn commutative_image(f: &NCSymFn) -> SymFn {
    let (basis, weight): (Basis, fn(&Partition) -> BigInt) = match f.basis {
        NcBasis::E => (Basis::E, Partition::part_factorial),
        NcBasis::M => (Basis::M, Partition::multiplicity_factorial),
    };
    SymFn::from_terms(
        basis,
        f.terms.iter().map(|(pi, c)| {
            let lam = pi.shape();
            let w = Rational::from_integer(weight(&lam));
            (lam, c * w)
        }),
    )
}

/// The `≡_i` invariant of a set partition: its type and the size of the
/// block containing `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    pub shape: Partition,
    pub block_size: usize,
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.shape, self.block_size)
    }
}

pub fn congruence_class(pi: &SetPartition, i: usize) -> Result<ClassKey> {
    if i == 0 || i > pi.d() {
        return Err(Error::BadParameter(format!("index {i} is outside 1..={}", pi.d())));
    }
    Ok(ClassKey { shape: pi.shape(), block_size: pi.block_size_of(i) })
}

/// Class sums of an `e_π` expansion under `≡_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub index: usize,
    pub classes: BTreeMap<ClassKey, Rational>,
}

impl ClassReport {
    pub fn is_positive(&self) -> bool {
        self.classes.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (key, c)) in self.classes.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{key} -> {}", format_rational(c))?;
        }
        Ok(())
    }
}

/// Groups the `e_π` coefficients of `f` by `≡_i` class. Classes with no
/// terms are omitted; zero class sums that arise from cancellation are kept.
pub fn e_positive_mod(f: &NCSymFn, i: usize) -> Result<ClassReport> {
    if f.basis != NcBasis::E {
        return Err(Error::BadParameter("class sums need the e basis".into()));
    }
    if i == 0 || i > f.d {
        return Err(Error::BadParameter(format!("index {i} is outside 1..={}", f.d)));
    }
    let mut classes: BTreeMap<ClassKey, Rational> = BTreeMap::new();
    for (pi, c) in &f.terms {
        *classes.entry(congruence_class(pi, i)?).or_insert_with(Rational::zero) += c;
    }
    Ok(ClassReport { index: i, classes })
}

/// `G + K_n`: adds `n - 1` vertices so that `d..=d+n-1` form a clique.
pub fn append_clique(g: &Graph, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("clique size must be at least 1".into()));
    }
    let d = g.order();
    if d == 0 {
        return Err(Error::BadParameter("cannot attach a clique to the empty graph".into()));
    }
    let mut edges = g.edges().to_vec();
    for u in d..d + n {
        for v in u + 1..d + n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(d + n - 1, &edges)
}

/// One stage of a Gebhard–Sagan chain.
#[derive(Clone, Debug)]
pub struct ChainStage {
    pub graph: Graph,
    pub report: ClassReport,
}

/// Runs the chain `C_a`, `C_a + K_2`, ..., `T⟨a,b⟩`, computing each class
/// report modulo the last vertex.
pub fn gs_chain(a: usize, b: usize) -> Result<Vec<ChainStage>> {
    if a < 3 {
        return Err(Error::BadParameter(format!("cycle length must be at least 3, got {a}")));
    }
    check_degree(a + b)?;
    let mut g = crate::graphs::cycle(a)?;
    let mut stages = Vec::with_capacity(b + 1);
    for j in 0..=b {
        if j > 0 {
            g = append_clique(&g, 2)?;
        }
        let y = to_e_basis(&y_graph(&g)?)?;
        let report = e_positive_mod(&y, a + j)?;
        stages.push(ChainStage { graph: g.clone(), report });
    }
    Ok(stages)
}

/// Whether every stage of [`gs_chain`] is (e)-positive modulo its last vertex.
pub fn verify_gs_chain(a: usize, b: usize) -> Result<bool> {
    Ok(gs_chain(a, b)?.iter().all(|s| s.report.is_positive()))
}
