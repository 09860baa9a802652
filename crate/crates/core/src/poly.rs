//! Sparse polynomials with big-integer coefficients in formal variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A sparse polynomial. Monomials are sorted variable lists (a multiset),
/// and no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalPolynomial<V: Ord> {
    terms: BTreeMap<Vec<V>, BigInt>,
}

impl<V: Ord + Clone> FormalPolynomial<V> {
    pub fn zero() -> Self {
        FormalPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), BigInt::one())
    }

    pub fn var(v: V) -> Self {
        Self::monomial(vec![v], BigInt::one())
    }

    /// `coeff · Π vars`; the variables may come in any order.
    pub fn monomial(mut vars: Vec<V>, coeff: BigInt) -> Self {
        vars.sort();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(vars, coeff);
        }
        FormalPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<V>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, vars: &[V]) -> BigInt {
        let mut key = vars.to_vec();
        key.sort();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// Adds `coeff · Π vars` in place.
    pub fn add_term(&mut self, mut vars: Vec<V>, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        vars.sort();
        let slot = self.terms.entry(vars).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        FormalPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Every coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| c > &BigInt::zero())
    }
}

impl<V: Ord + Clone> Default for FormalPolynomial<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Ord + Clone> AddAssign<&FormalPolynomial<V>> for FormalPolynomial<V> {
    fn add_assign(&mut self, rhs: &FormalPolynomial<V>) {
        let mut cancelled = false;
        for (m, c) in &rhs.terms {
            let slot = self.terms.entry(m.clone()).or_default();
            *slot += c;
            cancelled |= slot.is_zero();
        }
        if cancelled {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }
}

impl<V: Ord + Clone> Add for FormalPolynomial<V> {
    type Output = FormalPolynomial<V>;

    fn add(mut self, rhs: FormalPolynomial<V>) -> Self::Output {
        self += &rhs;
        self
    }
}

impl<V: Ord + Clone> Mul for &FormalPolynomial<V> {
    type Output = FormalPolynomial<V>;

    fn mul(self, rhs: &FormalPolynomial<V>) -> Self::Output {
        let mut out = FormalPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut vars = ma.clone();
                vars.extend(mb.iter().cloned());
                out.add_term(vars, &(ca * cb));
            }
        }
        out
    }
}

impl<V: Ord + Clone + fmt::Display> fmt::Display for FormalPolynomial<V> {
    /// Canonical text: terms in monomial order, repeated variables as powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (vars, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            let mut j = 0;
            while j < vars.len() {
                let run = vars[j..].iter().take_while(|v| **v == vars[j]).count();
                write!(f, "*{}", vars[j])?;
                if run > 1 {
                    write!(f, "^{run}")?;
                }
                j += run;
            }
        }
        Ok(())
    }
}

impl<V: Ord + Clone + fmt::Display> fmt::Debug for FormalPolynomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
