//! Buchberger's algorithm with cofactor tracking.
//!
//! Every basis element carries the row of polynomials expressing it as a
//! combination of the input generators, updated through each S-polynomial
//! formation and reduction. When the reduced basis is `{1}` the cofactor row
//! is a Nullstellensatz certificate for the generators.

mod order;

use num_traits::One;
use thiserror::Error;

pub use order::{MonomialOrder, OrderKind};

use crate::polyring::{Monomial, PolyError, Polynomial, Scalar};

/// Default step budget: division steps summed over a whole run.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("no generators given")]
    EmptyInput,
    #[error("step budget of {0} exceeded")]
    ResourceBudgetExceeded(u64),
}

#[derive(Debug, Clone)]
pub struct GroebnerConfig {
    pub order: MonomialOrder,
    /// `None` means unbounded.
    pub budget: Option<u64>,
    pub track_cofactors: bool,
}

impl GroebnerConfig {
    pub fn new(order: MonomialOrder) -> Self {
        GroebnerConfig { order, budget: Some(DEFAULT_BUDGET), track_cofactors: true }
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    pub fn without_cofactors(mut self) -> Self {
        self.track_cofactors = false;
        self
    }
}

struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    fn unbounded() -> Self {
        Budget { limit: None, used: 0 }
    }

    fn tick(&mut self) -> Result<(), GroebnerError> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(GroebnerError::ResourceBudgetExceeded(l)),
            _ => Ok(()),
        }
    }
}

/// Outcome of the division algorithm:
/// `input = Σ quotients[j]·basis[j] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

fn check_same_arity<'a>(arity: usize, polys: impl IntoIterator<Item = &'a Polynomial>) -> Result<(), PolyError> {
    for p in polys {
        if p.arity() != arity {
            return Err(PolyError::ArityMismatch { left: arity, right: p.arity() });
        }
    }
    Ok(())
}

/// Multivariate division of `p` by `basis`. At each step the leading term of
/// the running polynomial is divided by the first basis element whose
/// leading monomial divides it, otherwise moved to the remainder.
pub fn reduce(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<NormalFormResult, GroebnerError> {
    check_same_arity(p.arity(), basis)?;
    if order.arity() != p.arity() {
        return Err(PolyError::ArityMismatch { left: p.arity(), right: order.arity() }.into());
    }
    reduce_bounded(p, basis, order, &mut Budget::unbounded())
}

fn reduce_bounded(
    p: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
    budget: &mut Budget,
) -> Result<NormalFormResult, GroebnerError> {
    let n = p.arity();
    let leads: Vec<Option<(Monomial, Scalar)>> =
        basis.iter().map(|g| order.leading(g).map(|(m, c)| (m.clone(), c.clone()))).collect();
    let mut quotients = vec![Polynomial::zero(n); basis.len()];
    let mut remainder = Polynomial::zero(n);
    let mut rest = p.clone();
    while let Some((lm, lc)) = order.leading(&rest).map(|(m, c)| (m.clone(), c.clone())) {
        budget.tick()?;
        let divisor = leads.iter().enumerate().find_map(|(j, l)| {
            let (gm, gc) = l.as_ref()?;
            gm.div_of(&lm).map(|q| (j, q, &lc / gc))
        });
        match divisor {
            Some((j, qm, qc)) => {
                rest.sub_mul_term(&qm, &qc, &basis[j]);
                quotients[j] = &quotients[j] + &Polynomial::term(qm, qc);
            }
            None => {
                rest.remove_term(&lm);
                remainder = &remainder + &Polynomial::term(lm, lc);
            }
        }
    }
    Ok(NormalFormResult { remainder, quotients })
}

#[derive(Debug, Clone)]
struct Element {
    poly: Polynomial,
    lead: Monomial,
    cofactors: Vec<Polynomial>,
}

impl Element {
    fn make_monic(&mut self, order: &MonomialOrder) {
        let lc = order.leading(&self.poly).expect("nonzero element").1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            self.poly = self.poly.scale(&inv);
            for c in &mut self.cofactors {
                *c = c.scale(&inv);
            }
        }
    }
}

/// A reduced Gröbner basis together with the cofactor matrix expressing
/// each basis element in terms of the input generators.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    order: MonomialOrder,
    cofactors: Option<Vec<Vec<Polynomial>>>,
    steps: u64,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// `cofactors()[j][i]` multiplies `generators()[i]` in `basis()[j]`.
    pub fn cofactors(&self) -> Option<&[Vec<Polynomial>]> {
        self.cofactors.as_deref()
    }

    /// Division steps spent computing the basis.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn arity(&self) -> usize {
        self.generators[0].arity()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| self.order.leading(g).expect("nonzero").0.clone()).collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    /// When the basis is `{1}`, the polynomials `U_i` with
    /// `Σ U_i·generators[i] = 1`. Requires tracked cofactors.
    pub fn contains_one(&self) -> Option<Vec<Polynomial>> {
        if !self.is_unit() {
            return None;
        }
        self.cofactors.as_ref().map(|rows| rows[0].clone())
    }

    /// The standard monomials, when there are finitely many of them; these
    /// form a vector-space basis of the quotient ring.
    pub fn quotient_basis(&self) -> Option<Vec<Monomial>> {
        let n = self.arity();
        if self.is_unit() {
            return Some(Vec::new());
        }
        let leads = self.leading_monomials();
        // each variable needs a pure power among the leading monomials
        let mut bounds = Vec::with_capacity(n);
        for v in 0..n {
            let pure = leads
                .iter()
                .filter(|m| m.exponents().iter().enumerate().all(|(i, &e)| i == v || e == 0))
                .map(|m| m.exponents()[v])
                .min()?;
            bounds.push(pure);
        }
        let mut out = Vec::new();
        let mut e = vec![0u32; n];
        'outer: loop {
            let m = Monomial::new(e.clone());
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            for v in 0..n {
                e[v] += 1;
                if e[v] < bounds[v] {
                    continue 'outer;
                }
                e[v] = 0;
            }
            break;
        }
        out.sort();
        Some(out)
    }

    /// Independent post-hoc check: every S-polynomial of the basis (no pair
    /// criterion applied) reduces to zero.
    pub fn audit_s_polynomials(&self) -> bool {
        let leads: Vec<(Monomial, Scalar)> = self
            .basis
            .iter()
            .map(|g| {
                let (m, c) = self.order.leading(g).expect("nonzero");
                (m.clone(), c.clone())
            })
            .collect();
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &leads[i], &self.basis[j], &leads[j]);
                match reduce(&s, &self.basis, &self.order) {
                    Ok(r) if r.remainder.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Checks `basis[j] = Σ_i cofactors[j][i]·generators[i]` by expansion.
    /// `false` when cofactors were not tracked.
    pub fn audit_cofactors(&self) -> bool {
        let Some(rows) = &self.cofactors else {
            return false;
        };
        rows.len() == self.basis.len()
            && rows.iter().zip(&self.basis).all(|(row, g)| {
                row.len() == self.generators.len() && {
                    let mut acc = Polynomial::zero(self.arity());
                    for (u, p) in row.iter().zip(&self.generators) {
                        acc = &acc + &(u * p);
                    }
                    acc == *g
                }
            })
    }

    /// Monic leading coefficients and no term of any element divisible by
    /// another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.basis.iter().enumerate().all(|(i, g)| {
            self.order.leading(g).is_some_and(|(_, c)| c.is_one())
                && g.terms().all(|(m, _)| leads.iter().enumerate().all(|(j, l)| j == i || !l.divides(m)))
        })
    }
}

fn s_polynomial(f: &Polynomial, lf: &(Monomial, Scalar), g: &Polynomial, lg: &(Monomial, Scalar)) -> Polynomial {
    let lcm = lf.0.lcm(&lg.0);
    let a = lf.0.div_of(&lcm).unwrap();
    let b = lg.0.div_of(&lcm).unwrap();
    &f.mul_term(&a, &lf.1.recip()) - &g.mul_term(&b, &lg.1.recip())
}

/// Reduced Gröbner basis of `gens` under `order` with default budget and
/// cofactor tracking.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(gens, &GroebnerConfig::new(order.clone()))
}

pub fn buchberger_with(gens: &[Polynomial], config: &GroebnerConfig) -> Result<GroebnerBasis, GroebnerError> {
    let Some(first) = gens.first() else {
        return Err(GroebnerError::EmptyInput);
    };
    let n = first.arity();
    check_same_arity(n, gens)?;
    let order = &config.order;
    if order.arity() != n {
        return Err(PolyError::ArityMismatch { left: n, right: order.arity() }.into());
    }
    let m = gens.len();
    let track = config.track_cofactors;
    let mut budget = Budget { limit: config.budget, used: 0 };

    let mut elems: Vec<Element> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let cofactors = if track {
            (0..m).map(|j| if i == j { Polynomial::one(n) } else { Polynomial::zero(n) }).collect()
        } else {
            Vec::new()
        };
        let mut e = Element { poly: g.clone(), lead: order.leading(g).unwrap().0.clone(), cofactors };
        e.make_monic(order);
        elems.push(e);
    }

    let mut unit = elems.iter().position(|e| e.lead.is_one());
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    if unit.is_none() {
        for j in 0..elems.len() {
            for i in 0..j {
                pairs.push((i, j, elems[i].lead.lcm(&elems[j].lead)));
            }
        }
    }

    while unit.is_none() && !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties by index
        let pick = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].2, &pairs[b].2)
                    .then_with(|| (pairs[a].0, pairs[a].1).cmp(&(pairs[b].0, pairs[b].1)))
            })
            .unwrap();
        let (i, j, lcm) = pairs.swap_remove(pick);
        if elems[i].lead.is_coprime(&elems[j].lead) {
            continue;
        }
        budget.tick()?;
        let ai = elems[i].lead.div_of(&lcm).unwrap();
        let aj = elems[j].lead.div_of(&lcm).unwrap();
        let one = Scalar::one();
        let s = &elems[i].poly.mul_term(&ai, &one) - &elems[j].poly.mul_term(&aj, &one);
        let basis: Vec<Polynomial> = elems.iter().map(|e| e.poly.clone()).collect();
        let nf = reduce_bounded(&s, &basis, order, &mut budget)?;
        if nf.remainder.is_zero() {
            continue;
        }
        let cofactors = if track {
            (0..m)
                .map(|g| {
                    let mut c = &elems[i].cofactors[g].mul_term(&ai, &one) - &elems[j].cofactors[g].mul_term(&aj, &one);
                    for (q, e) in nf.quotients.iter().zip(&elems) {
                        if !q.is_zero() {
                            c = &c - &(q * &e.cofactors[g]);
                        }
                    }
                    c
                })
                .collect()
        } else {
            Vec::new()
        };
        let lead = order.leading(&nf.remainder).unwrap().0.clone();
        let mut e = Element { poly: nf.remainder, lead, cofactors };
        e.make_monic(order);
        let new = elems.len();
        if e.lead.is_one() {
            unit = Some(new);
        } else {
            for (k, old) in elems.iter().enumerate() {
                pairs.push((k, new, old.lead.lcm(&e.lead)));
            }
        }
        elems.push(e);
    }

    let elems = match unit {
        Some(u) => vec![elems.swap_remove(u)],
        None => finalize(elems, order, &mut budget)?,
    };
    let (basis, cofactors): (Vec<_>, Vec<_>) = elems.into_iter().map(|e| (e.poly, e.cofactors)).unzip();
    Ok(GroebnerBasis {
        generators: gens.to_vec(),
        basis,
        order: order.clone(),
        cofactors: track.then_some(cofactors),
        steps: budget.used,
    })
}

/// Minimize, inter-reduce and sort descending by leading monomial.
fn finalize(mut elems: Vec<Element>, order: &MonomialOrder, budget: &mut Budget) -> Result<Vec<Element>, GroebnerError> {
    elems.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    let mut kept: Vec<Element> = Vec::new();
    for e in elems {
        if !kept.iter().any(|k| k.lead.divides(&e.lead)) {
            kept.push(e);
        }
    }
    for idx in 0..kept.len() {
        let others: Vec<Polynomial> =
            kept.iter().enumerate().map(|(j, k)| if j == idx { Polynomial::zero(k.poly.arity()) } else { k.poly.clone() }).collect();
        let nf = reduce_bounded(&kept[idx].poly, &others, order, budget)?;
        if nf.quotients.iter().all(Polynomial::is_zero) {
            continue;
        }
        let mut cofs = kept[idx].cofactors.clone();
        for (g, c) in cofs.iter_mut().enumerate() {
            for (q, k) in nf.quotients.iter().zip(&kept) {
                if !q.is_zero() {
                    *c = &*c - &(q * &k.cofactors[g]);
                }
            }
        }
        kept[idx].poly = nf.remainder;
        kept[idx].cofactors = cofs;
    }
    kept.reverse();
    Ok(kept)
}

#[cfg(test)]
mod tests;
