use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use crate::polyring::{Monomial, Polynomial, Scalar};

use super::{verify_detailed, CertError, FinitenessCertificate, SquareSystem};

/// The monomials with every exponent below `c`; `c^n` of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSet {
    pub c: u32,
    pub arity: usize,
}

impl GeneratorSet {
    pub fn contains(&self, m: &Monomial) -> bool {
        m.arity() == self.arity && m.exponents().iter().all(|&e| e < self.c)
    }

    pub fn len(&self) -> u64 {
        (self.c as u64).pow(self.arity as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Monomial> + '_ {
        let c = self.c as u64;
        (0..self.len()).map(move |mut idx| {
            let mut e = Vec::with_capacity(self.arity);
            for _ in 0..self.arity {
                e.push((idx % c) as u32);
                idx /= c;
            }
            Monomial::new(e)
        })
    }
}

/// `target = Σ_s terms[s](P_1, …, P_n) · s`, each coefficient a polynomial in
/// formal symbols `p_1 … p_n` and each key `s` in the generator set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteResult {
    pub target: Monomial,
    pub terms: BTreeMap<Monomial, Polynomial>,
}

impl RewriteResult {
    /// Substitutes `p_i := P_i` and expands.
    pub fn expand(&self, sys: &SquareSystem) -> Result<Polynomial, CertError> {
        let n = sys.arity();
        let mut acc = Polynomial::zero(n);
        for (s, a) in &self.terms {
            let a = a.compose(sys.polys())?;
            acc = &acc + &a.mul_term(s, &Scalar::one());
        }
        Ok(acc)
    }

    pub fn check(&self, sys: &SquareSystem) -> Result<bool, CertError> {
        Ok(self.expand(sys)? == Polynomial::term(self.target.clone(), Scalar::one()))
    }
}

type Terms = BTreeMap<Monomial, Polynomial>;

/// Rewrites monomials over the generator set, by induction on total degree:
/// a monomial with some `α_k ≥ c` is replaced through `X_k^c = Σ Ũ_i^k P_i`
/// and every resulting monomial has strictly smaller degree.
///
/// Results are memoized across calls on the same rewriter.
pub struct Rewriter<'a> {
    sys: &'a SquareSystem,
    cert: &'a FinitenessCertificate,
    memo: HashMap<Monomial, Terms>,
}

impl<'a> Rewriter<'a> {
    /// Fails with `CertificateInvalid` unless the certificate verifies.
    pub fn new(sys: &'a SquareSystem, cert: &'a FinitenessCertificate) -> Result<Self, CertError> {
        verify_detailed(sys, cert)?;
        Ok(Rewriter { sys, cert, memo: HashMap::new() })
    }

    pub fn generators(&self) -> GeneratorSet {
        GeneratorSet { c: self.cert.c, arity: self.sys.arity() }
    }

    /// Rewrites `alpha` and checks the result by substitution before
    /// returning it.
    pub fn rewrite(&mut self, alpha: &Monomial) -> Result<RewriteResult, CertError> {
        if alpha.arity() != self.sys.arity() {
            return Err(crate::polyring::PolyError::ArityMismatch { left: self.sys.arity(), right: alpha.arity() }.into());
        }
        let terms = self.terms(alpha);
        let result = RewriteResult { target: alpha.clone(), terms };
        if !result.check(self.sys)? {
            return Err(CertError::CertificateInvalid(format!("rewrite of {alpha:?} failed its substitution check")));
        }
        Ok(result)
    }

    fn terms(&mut self, alpha: &Monomial) -> Terms {
        if let Some(t) = self.memo.get(alpha) {
            return t.clone();
        }
        let n = self.sys.arity();
        let c = self.cert.c;
        let out = match alpha.exponents().iter().position(|&e| e >= c) {
            None => Terms::from([(alpha.clone(), Polynomial::one(n))]),
            Some(k) => {
                let mut beta = alpha.exponents().to_vec();
                beta[k] -= c;
                let beta = Monomial::new(beta);
                let mut acc = Terms::new();
                for (i, lift) in self.cert.lifted[k].iter().enumerate() {
                    let p_i = Polynomial::var(n, i);
                    for (gamma, coeff) in lift.terms() {
                        let sub = self.terms(&beta.mul(gamma));
                        for (s, a) in sub {
                            let add = (&a * &p_i).scale(coeff);
                            let entry = acc.entry(s).or_insert_with(|| Polynomial::zero(n));
                            *entry = &*entry + &add;
                        }
                    }
                }
                acc.retain(|_, a| !a.is_zero());
                acc
            }
        };
        self.memo.insert(alpha.clone(), out.clone());
        out
    }
}

pub fn rewrite_monomial(sys: &SquareSystem, cert: &FinitenessCertificate, alpha: &Monomial) -> Result<RewriteResult, CertError> {
    Rewriter::new(sys, cert)?.rewrite(alpha)
}
