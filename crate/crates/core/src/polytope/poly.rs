use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{BigInt, BigRat};
use crate::{Error, Result};

/// A limit of integration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Zero,
    One,
    Var(String),
}

impl Bound {
    pub fn var(name: impl Into<String>) -> Self {
        Bound::Var(name.into())
    }
}

/// A polynomial with exact rational coefficients over named variables.
/// Exponent vectors are aligned with `vars`; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigRat>,
}

impl MultiPoly {
    /// The zero polynomial over `vars`.
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(c: BigRat) -> Self {
        let mut p = MultiPoly::zero(Vec::new());
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn var(name: impl Into<String>) -> Self {
        Self::monomial(alloc::vec![name.into()], alloc::vec![1], BigRat::one())
    }

    pub fn monomial(vars: Vec<String>, exps: Vec<u32>, coeff: BigRat) -> Self {
        assert_eq!(vars.len(), exps.len(), "one exponent per variable");
        let mut p = MultiPoly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exps: &[u32]) -> BigRat {
        self.terms.get(exps).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// The value if the polynomial involves no variable.
    pub fn constant_value(&self) -> Option<BigRat> {
        let mut it = self.terms.iter();
        match it.next() {
            None => Some(BigRat::zero()),
            Some((e, c)) if e.iter().all(|&x| x == 0) && it.next().is_none() => Some(c.clone()),
            _ => None,
        }
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Appends any names of `extra` not already present.
    pub fn with_vars<S: AsRef<str>>(mut self, extra: &[S]) -> Self {
        let new: Vec<String> = extra
            .iter()
            .map(|s| String::from(s.as_ref()))
            .filter(|s| !self.vars.contains(s))
            .fold(Vec::new(), |mut acc, s| {
                if !acc.contains(&s) {
                    acc.push(s);
                }
                acc
            });
        if new.is_empty() {
            return self;
        }
        let pad = new.len();
        self.vars.extend(new);
        self.terms = core::mem::take(&mut self.terms)
            .into_iter()
            .map(|(mut e, c)| {
                e.extend(core::iter::repeat_n(0, pad));
                (e, c)
            })
            .collect();
        self
    }

    /// Reorders (and extends) to exactly `vars`; fails if a used variable
    /// would be dropped.
    pub fn aligned(&self, vars: &[String]) -> Result<Self> {
        let map: Vec<Option<usize>> =
            self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        let mut out = MultiPoly::zero(vars.to_vec());
        for (e, c) in &self.terms {
            let mut ne = alloc::vec![0u32; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                match map[i] {
                    Some(j) => ne[j] = x,
                    None if x == 0 => {}
                    None => {
                        return Err(Error::Domain(alloc::format!(
                            "variable {} is not in the target list",
                            self.vars[i]
                        )))
                    }
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let a = self.clone().with_vars(&other.vars);
        let b = other.aligned(&a.vars).expect("union contains every variable");
        (a, b)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        let mut out = MultiPoly::zero(a.vars.clone());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiPoly::one().with_vars(&self.vars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Removes variables that appear in no term.
    pub fn prune(&self) -> Self {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        let vars: Vec<String> = used.iter().map(|&i| self.vars[i].clone()).collect();
        MultiPoly {
            vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (used.iter().map(|&i| e[i]).collect(), c.clone()))
                .collect(),
        }
    }

    /// Replaces `name` by the polynomial `value`.
    pub fn substitute(&self, name: &str, value: &MultiPoly) -> Result<Self> {
        let idx = self.index_of(name).ok_or_else(|| {
            Error::Domain(alloc::format!("variable {name} does not occur"))
        })?;
        let rest: Vec<String> =
            self.vars.iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, v)| v.clone()).collect();
        let mut powers: Vec<MultiPoly> = Vec::new();
        let mut out = MultiPoly::zero(rest.clone());
        for (e, c) in &self.terms {
            let k = e[idx] as usize;
            while powers.len() <= k {
                let next = match powers.last() {
                    None => MultiPoly::one(),
                    Some(p) => p.mul(value),
                };
                powers.push(next);
            }
            let mut re = e.clone();
            re.remove(idx);
            let mono = MultiPoly::monomial(rest.clone(), re, c.clone());
            out = out.add(&mono.mul(&powers[k]));
        }
        Ok(out)
    }

    /// Definite integral in `name` from `lower` to `upper`. The result no
    /// longer contains `name`; bound variables are appended if new.
    pub fn integrate(&self, name: &str, lower: &Bound, upper: &Bound) -> Result<Self> {
        let idx = self.index_of(name).ok_or_else(|| {
            Error::Domain(alloc::format!("variable {name} does not occur"))
        })?;
        for b in [lower, upper] {
            if let Bound::Var(v) = b {
                if v == name {
                    return Err(Error::Domain(alloc::format!("{name} bounds its own integral")));
                }
            }
        }
        let bound_vars: Vec<&str> = [lower, upper]
            .into_iter()
            .filter_map(|b| match b {
                Bound::Var(v) => Some(v.as_str()),
                _ => None,
            })
            .collect();
        let base = self.clone().with_vars(&bound_vars);
        let mut vars = base.vars.clone();
        vars.remove(idx);
        let slot = |b: &Bound| match b {
            Bound::Var(v) => vars.iter().position(|w| w == v),
            _ => None,
        };
        let (lo_slot, hi_slot) = (slot(lower), slot(upper));
        let mut out = MultiPoly::zero(vars.clone());
        for (e, c) in &base.terms {
            let a = e[idx] + 1;
            let coeff = c / BigRat::from_integer(BigInt::from(a));
            let mut rest = e.clone();
            rest.remove(idx);
            for (b, s, positive) in [(upper, hi_slot, true), (lower, lo_slot, false)] {
                let value = if positive { coeff.clone() } else { -coeff.clone() };
                match b {
                    Bound::Zero => {}
                    Bound::One => out.add_term(rest.clone(), value),
                    Bound::Var(_) => {
                        let mut ne = rest.clone();
                        ne[s.expect("bound variable present")] += a;
                        out.add_term(ne, value);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Evaluates at `values`, aligned with [`MultiPoly::vars`].
    pub fn eval(&self, values: &[BigRat]) -> BigRat {
        assert_eq!(values.len(), self.vars.len(), "one value per variable");
        let mut total = BigRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Evaluates at named values; every variable must be given.
    pub fn eval_named(&self, values: &[(&str, BigRat)]) -> Result<BigRat> {
        let aligned: Result<Vec<BigRat>> = self
            .vars
            .iter()
            .map(|v| {
                values
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, x)| x.clone())
                    .ok_or_else(|| Error::Domain(alloc::format!("no value for {v}")))
            })
            .collect();
        Ok(self.eval(&aligned?))
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(a, b);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Renames variables in place of position.
    pub fn renamed(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.vars.len(), "one name per variable");
        self.vars = names;
        self
    }

    pub(crate) fn check_terms(&self, limit: usize) -> Result<()> {
        if self.terms.len() > limit {
            return Err(Error::BudgetExceeded {
                what: "polynomial terms",
                estimate: self.terms.len(),
                limit,
            });
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let mono: Vec<(usize, u32)> =
                e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, &k)| (i, k)).collect();
            if mono.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
                if !mono.is_empty() {
                    f.write_str("*")?;
                }
            }
            for (j, (v, k)) in mono.iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                f.write_str(&self.vars[*v])?;
                if *k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}
