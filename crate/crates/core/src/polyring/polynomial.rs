use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::{Degree, Monomial};
use super::scalar::Scalar;
use super::PolyError;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a map keyed by [`Monomial`] (grevlex order) and no zero
/// coefficient is ever stored, so structural equality is mathematical
/// equality. Arity 0 is permitted: it is the ring of constants, which is what
/// a chart of a one-variable system lives in.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Scalar::one())
    }

    pub fn constant(arity: usize, c: Scalar) -> Self {
        Self::term(Monomial::one(arity), c)
    }

    pub fn var(arity: usize, index: usize) -> Self {
        Self::term(Monomial::var(arity, index, 1), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(m.arity());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated terms, summing duplicates.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(PolyError::ArityMismatch { left: arity, right: m.arity() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Leading term under the canonical grevlex order.
    pub fn grevlex_leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// In place `self -= c · m · g`.
    pub(crate) fn sub_mul_term(&mut self, m: &Monomial, c: &Scalar, g: &Polynomial) {
        for (gm, gc) in &g.terms {
            self.add_term(gm.mul(m), -(c * gc));
        }
    }

    pub(crate) fn remove_term(&mut self, m: &Monomial) -> Option<Scalar> {
        self.terms.remove(m)
    }

    fn check_arity(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.arity != other.arity {
            return Err(PolyError::ArityMismatch { left: self.arity, right: other.arity });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(other)?;
        let mut out = Polynomial::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `c · self · m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        debug_assert_eq!(m.arity(), self.arity);
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.arity), c)
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.arity);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Returns `Some(d)` when every stored monomial has total degree `d`;
    /// the zero polynomial is homogeneous of degree `NegInfinity`.
    pub fn is_homogeneous(&self) -> Option<Degree> {
        let mut degrees = self.terms.keys().map(Monomial::total_degree);
        match degrees.next() {
            None => Some(Degree::NegInfinity),
            Some(d) => degrees.all(|e| e == d).then_some(Degree::Finite(d)),
        }
    }

    /// Sets `X_chart := 1` and renumbers the remaining variables, giving a
    /// polynomial in `arity - 1` chart variables `T_j` (`j != chart`, original
    /// order kept). `chart` is 0-based.
    pub fn dehomogenize_chart(&self, chart: usize) -> Result<Polynomial, PolyError> {
        if chart >= self.arity {
            return Err(PolyError::IndexOutOfRange { index: chart, arity: self.arity });
        }
        let mut out = Polynomial::zero(self.arity - 1);
        for (m, c) in &self.terms {
            let mut e = m.exponents().to_vec();
            e.remove(chart);
            out.add_term(Monomial::new(e), c.clone());
        }
        Ok(out)
    }

    /// Inverse of [`dehomogenize_chart`](Self::dehomogenize_chart): lifts a
    /// chart polynomial back to `arity + 1` variables, padding every term with
    /// a power of `X_chart` so the result is homogeneous of degree `target`.
    pub fn homogenize(&self, chart: usize, target: u32) -> Result<Polynomial, PolyError> {
        if chart > self.arity {
            return Err(PolyError::IndexOutOfRange { index: chart, arity: self.arity + 1 });
        }
        if let Degree::Finite(d) = self.degree() {
            if d > target {
                return Err(PolyError::TargetTooSmall { target, degree: d });
            }
        }
        let mut out = Polynomial::zero(self.arity + 1);
        for (m, c) in &self.terms {
            let mut e = m.exponents().to_vec();
            e.insert(chart, target - m.total_degree());
            out.add_term(Monomial::new(e), c.clone());
        }
        Ok(out)
    }

    /// Embeds into a ring with one extra trailing variable.
    pub fn extend_arity(&self, extra: usize) -> Polynomial {
        Polynomial {
            arity: self.arity + extra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e.resize(self.arity + extra, 0);
                    (Monomial::new(e), c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes `X_i := values[i]`. All values must share one arity,
    /// which becomes the arity of the result.
    pub fn compose(&self, values: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if values.len() != self.arity {
            return Err(PolyError::ArityMismatch { left: self.arity, right: values.len() });
        }
        let Some(target) = values.first().map(Polynomial::arity) else {
            return Ok(self.clone());
        };
        if let Some(v) = values.iter().find(|v| v.arity != target) {
            return Err(PolyError::ArityMismatch { left: target, right: v.arity });
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; self.arity];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &values[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Checks `p(λX_1, …, λX_n) = λ^d p(X)` literally, in the ring extended by
    /// a fresh variable λ.
    pub fn grading_check(&self, d: u32) -> bool {
        let n = self.arity;
        let lambda = Polynomial::var(n + 1, n);
        let scaled: Vec<Polynomial> = (0..n).map(|i| &Polynomial::var(n + 1, i) * &lambda).collect();
        let lhs = if n == 0 {
            self.extend_arity(1)
        } else {
            self.compose(&scaled).expect("arity checked")
        };
        let rhs = &lambda.pow(d) * &self.extend_arity(1);
        lhs == rhs
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        if point.len() != self.arity {
            return Err(PolyError::ArityMismatch { left: self.arity, right: point.len() });
        }
        let mut powers: Vec<Vec<Scalar>> = point.iter().map(|x| vec![Scalar::one(), x.clone()]).collect();
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &point[i];
                    pw.push(next);
                }
                t *= &pw[e as usize];
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.arity).map(|i| format!("x{i}")).collect();
        f.write_str(&crate::parse::format_polynomial(self, &names))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial arity mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
