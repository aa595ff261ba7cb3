//! Sparse exact symmetric functions over the monomial, elementary and Schur bases.
//!
//! Every conversion passes through the Schur basis one degree at a time:
//! `s_λ = Σ_μ K_{λμ} m_μ` and `e_μ = Σ_λ K_{λ'μ} s_λ`, with the reverse
//! directions using the cached inverse Kostka matrix.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result, MAX_CONVERSION_DEGREE};
use crate::partitions::{kostka_table, Partition};
use crate::rational::{format_rational, parse_rational, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        match c {
            'm' => Some(Basis::M),
            'e' => Some(Basis::E),
            's' => Some(Basis::S),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A finite linear combination of basis elements; degrees may be mixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFn {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFn {
    pub fn zero(basis: Basis) -> Self {
        SymFn { basis, terms: BTreeMap::new() }
    }

    /// `e_∅ = 1`.
    pub fn one() -> Self {
        Self::element(Basis::E, Partition::empty())
    }

    pub fn element(basis: Basis, lambda: Partition) -> Self {
        Self::from_terms(basis, [(lambda, rat(1))])
    }

    /// `e_λ` for parts given in any order.
    pub fn e(parts: &[usize]) -> Self {
        Self::element(Basis::E, Partition::from_unsorted(parts.to_vec()))
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = SymFn::zero(basis);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in output order: degree descending, then partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Partition::degree).max().unwrap_or(0)
    }

    /// Coefficient of `lambda` in the stored basis.
    pub fn get(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn scale(&self, c: &Rational) -> SymFn {
        if c.is_zero() {
            return SymFn::zero(self.basis);
        }
        SymFn {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Homogeneous component of degree `n`.
    pub fn component(&self, n: usize) -> SymFn {
        SymFn {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.degree() == n)
                .map(|(p, v)| (p.clone(), v.clone()))
                .collect(),
        }
    }

    fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(Partition::degree).collect();
        ds.dedup();
        ds
    }

    /// Parses the term listing produced by `Display`: one `<coeff> <basis>[parts]`
    /// per line, or a single `0`. Blank lines and `#` comments are skipped.
    /// `basis` is used when the listing is the zero function.
    pub fn parse_terms(text: &str, basis: Basis) -> Result<SymFn> {
        let mut found: Option<Basis> = None;
        let mut terms = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |message: String| Error::Parse { line: i + 1, message };
            if line.is_empty() || line.starts_with('#') || line == "0" {
                continue;
            }
            let (coeff, term) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| err(format!("expected `<coeff> <basis>[..]`, got `{line}`")))?;
            let coeff = parse_rational(coeff).ok_or_else(|| err(format!("bad coefficient `{coeff}`")))?;
            let term = term.trim();
            let b = term
                .chars()
                .next()
                .and_then(Basis::from_letter)
                .ok_or_else(|| err(format!("unknown basis in `{term}`")))?;
            if found.is_some_and(|f| f != b) {
                return Err(err("mixed bases in one listing".into()));
            }
            found = Some(b);
            let lambda: Partition = term[1..].parse().map_err(|e: Error| err(e.to_string()))?;
            terms.push((lambda, coeff));
        }
        Ok(SymFn::from_terms(found.unwrap_or(basis), terms))
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (p, c) in &self.terms {
            writeln!(f, "{} {}{}", format_rational(c), self.basis.letter(), p)?;
        }
        Ok(())
    }
}

impl Add for &SymFn {
    type Output = SymFn;

    fn add(self, rhs: &SymFn) -> SymFn {
        assert_eq!(self.basis, rhs.basis, "adding symmetric functions in different bases");
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFn {
    type Output = SymFn;

    fn sub(self, rhs: &SymFn) -> SymFn {
        self + &(-rhs)
    }
}

impl Neg for &SymFn {
    type Output = SymFn;

    fn neg(self) -> SymFn {
        SymFn {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Mul<i64> for &SymFn {
    type Output = SymFn;

    fn mul(self, rhs: i64) -> SymFn {
        self.scale(&rat(rhs))
    }
}

/// Product of two elementary-basis functions. Panics on any other basis;
/// use [`multiply`] for inputs that may need converting.
impl Mul for &SymFn {
    type Output = SymFn;

    fn mul(self, rhs: &SymFn) -> SymFn {
        assert!(
            self.basis == Basis::E && rhs.basis == Basis::E,
            "operator product is defined on the elementary basis only"
        );
        let mut out = SymFn::zero(Basis::E);
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                out.add_term(p.union(q), a * b);
            }
        }
        out
    }
}

fn check_cap(degree: usize) -> Result<()> {
    if degree > MAX_CONVERSION_DEGREE {
        Err(Error::DegreeCapExceeded { degree, cap: MAX_CONVERSION_DEGREE })
    } else {
        Ok(())
    }
}

/// Expresses `f` in `target`, one homogeneous degree at a time.
pub fn to_basis(f: &SymFn, target: Basis) -> Result<SymFn> {
    if f.basis == target {
        return Ok(f.clone());
    }
    let mut out = SymFn::zero(target);
    for n in f.degrees() {
        check_cap(n)?;
        let part = f.component(n);
        let schur = match f.basis {
            Basis::S => part,
            Basis::M => m_to_s(&part, n)?,
            Basis::E => e_to_s(&part, n)?,
        };
        let converted = match target {
            Basis::S => schur,
            Basis::M => s_to_m(&schur, n)?,
            Basis::E => s_to_e(&schur, n)?,
        };
        for (p, c) in converted.terms {
            out.add_term(p, c);
        }
    }
    Ok(out)
}

fn big(k: u64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn s_to_m(f: &SymFn, n: usize) -> Result<SymFn> {
    let table = kostka_table(n)?;
    let mut out = SymFn::zero(Basis::M);
    for (lam, a) in &f.terms {
        let i = table.index_of(lam).expect("degree-n partition");
        for (j, mu) in table.partitions.iter().enumerate() {
            let k = table.forward[i][j];
            if k != 0 {
                out.add_term(mu.clone(), a * big(k));
            }
        }
    }
    Ok(out)
}

fn m_to_s(f: &SymFn, n: usize) -> Result<SymFn> {
    let table = kostka_table(n)?;
    let mut out = SymFn::zero(Basis::S);
    for (mu, b) in &f.terms {
        let i = table.index_of(mu).expect("degree-n partition");
        for (j, lam) in table.partitions.iter().enumerate() {
            let k = &table.inverse[i][j];
            if !k.is_zero() {
                out.add_term(lam.clone(), b * k);
            }
        }
    }
    Ok(out)
}

fn e_to_s(f: &SymFn, n: usize) -> Result<SymFn> {
    let table = kostka_table(n)?;
    let mut out = SymFn::zero(Basis::S);
    for (mu, c) in &f.terms {
        let j = table.index_of(mu).expect("degree-n partition");
        for (i, nu) in table.partitions.iter().enumerate() {
            // [s_{ν'}] e_μ = K_{ν,μ}
            let k = table.forward[i][j];
            if k != 0 {
                out.add_term(nu.conjugate(), c * big(k));
            }
        }
    }
    Ok(out)
}

fn s_to_e(f: &SymFn, n: usize) -> Result<SymFn> {
    let table = kostka_table(n)?;
    let mut out = SymFn::zero(Basis::E);
    for (lam, a) in &f.terms {
        let nu = table.index_of(&lam.conjugate()).expect("degree-n partition");
        for (i, mu) in table.partitions.iter().enumerate() {
            let k = &table.inverse[i][nu];
            if !k.is_zero() {
                out.add_term(mu.clone(), a * k);
            }
        }
    }
    Ok(out)
}

/// Product, computed in the elementary basis by concatenating parts.
pub fn multiply(f: &SymFn, g: &SymFn) -> Result<SymFn> {
    let f = to_basis(f, Basis::E)?;
    let g = to_basis(g, Basis::E)?;
    Ok(&f * &g)
}

/// Sum in the basis of `f`.
pub fn add(f: &SymFn, g: &SymFn) -> Result<SymFn> {
    Ok(f + &to_basis(g, f.basis)?)
}

/// `[u_λ] f` with `u` the requested basis.
pub fn coefficient(f: &SymFn, basis: Basis, lambda: &Partition) -> Result<Rational> {
    if f.basis == basis {
        return Ok(f.get(lambda));
    }
    Ok(to_basis(&f.component(lambda.degree()), basis)?.get(lambda))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub positive: bool,
    /// Most negative term, ties broken by partition order.
    pub witness: Option<(Partition, Rational)>,
    /// The function in the basis that was tested.
    pub expansion: SymFn,
}

pub fn is_positive(f: &SymFn, basis: Basis) -> Result<Positivity> {
    let expansion = to_basis(f, basis)?;
    let mut witness: Option<(Partition, Rational)> = None;
    for (p, c) in expansion.terms() {
        if c.is_negative() && witness.as_ref().is_none_or(|(_, w)| c < w) {
            witness = Some((p.clone(), c.clone()));
        }
    }
    Ok(Positivity { positive: witness.is_none(), witness, expansion })
}

/// `m_λ(1^n) = n! / ((n-ℓ)! Π_j r_j!)`, zero when `ℓ > n`.
pub fn monomial_at_ones(lambda: &Partition, n: usize) -> BigInt {
    let l = lambda.len();
    if l > n {
        return BigInt::zero();
    }
    let falling: BigInt = ((n - l + 1)..=n).map(BigInt::from).product();
    falling / lambda.multiplicity_factorial()
}

/// Evaluates `f` at `x_1 = ... = x_n = 1`, all other variables zero.
pub fn principal_specialization_count(f: &SymFn, n: usize) -> Result<Rational> {
    let f = to_basis(f, Basis::M)?;
    Ok(f.terms()
        .map(|(p, c)| c * Rational::from_integer(monomial_at_ones(p, n)))
        .fold(Rational::zero(), |a, b| a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn e2_is_s11() {
        let s = to_basis(&SymFn::e(&[2]), Basis::S).unwrap();
        assert_eq!(s, SymFn::element(Basis::S, p(&[1, 1])));
    }

    #[test]
    fn e_product_is_union() {
        let prod = multiply(&SymFn::e(&[1]), &SymFn::e(&[2, 1])).unwrap();
        assert_eq!(prod, SymFn::e(&[2, 1, 1]));
        assert_eq!(&SymFn::one() * &SymFn::e(&[3]), SymFn::e(&[3]));
    }

    #[test]
    fn e_power_of_one_in_monomials() {
        // e_1^n = Σ_λ n!/Π λ_i! m_λ
        for n in 1..=5 {
            let f = SymFn::e(&vec![1; n]);
            for lam in crate::partitions::partitions_of(n) {
                let expect = crate::rational::factorial(n) / lam.part_factorial();
                assert_eq!(coefficient(&f, Basis::M, &lam).unwrap(), Rational::from_integer(expect));
            }
        }
    }

    #[test]
    fn zero_is_positive() {
        let pos = is_positive(&SymFn::zero(Basis::E), Basis::S).unwrap();
        assert!(pos.positive);
        assert!(pos.witness.is_none());
    }

    #[test]
    fn witness_tie_break_uses_partition_order() {
        let f = SymFn::from_terms(
            Basis::E,
            [(p(&[2, 1]), rat(-3)), (p(&[3]), rat(-3)), (p(&[1, 1, 1]), rat(-1))],
        );
        let pos = is_positive(&f, Basis::E).unwrap();
        assert_eq!(pos.witness, Some((p(&[3]), rat(-3))));
    }

    #[test]
    fn cap_is_enforced() {
        let f = SymFn::e(&[15]);
        assert_eq!(
            to_basis(&f, Basis::S),
            Err(Error::DegreeCapExceeded { degree: 15, cap: MAX_CONVERSION_DEGREE })
        );
        // No conversion needed, no cap.
        assert!(multiply(&f, &f).is_ok());
    }

    #[test]
    fn listing_round_trip() {
        let f = SymFn::from_terms(
            Basis::E,
            [(p(&[3, 2]), rat(4)), (p(&[4, 1]), rat(6)), (p(&[5]), rat(50)), (p(&[1]), rat(-1))],
        );
        let text = f.to_string();
        assert_eq!(text, "50 e[5]\n6 e[4,1]\n4 e[3,2]\n-1 e[1]\n");
        assert_eq!(SymFn::parse_terms(&text, Basis::M).unwrap(), f);
        assert_eq!(SymFn::zero(Basis::S).to_string(), "0\n");
        assert_eq!(SymFn::parse_terms("0\n", Basis::S).unwrap(), SymFn::zero(Basis::S));
        assert!(SymFn::parse_terms("1 e[1]\n1 s[1]\n", Basis::E).is_err());
        assert!(SymFn::parse_terms("1 q[1]\n", Basis::E).is_err());
    }

    #[test]
    fn specialization_of_e_basis() {
        // e_2(1,1,1) = 3
        assert_eq!(principal_specialization_count(&SymFn::e(&[2]), 3).unwrap(), rat(3));
        assert_eq!(monomial_at_ones(&p(&[1, 1, 1]), 2), BigInt::zero());
    }
}
