use std::cmp::Ordering;

use crate::polyring::{Monomial, Polynomial, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A monomial order: `kind` applied to the variables in `permutation` order,
/// so `permutation[0]` is the most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    permutation: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(arity: usize) -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, permutation: (0..arity).collect() }
    }

    pub fn lex(arity: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, permutation: (0..arity).collect() }
    }

    pub fn of_kind(kind: OrderKind, arity: usize) -> Self {
        MonomialOrder { kind, permutation: (0..arity).collect() }
    }

    /// `None` unless `permutation` is a permutation of `0..len`.
    pub fn with_permutation(kind: OrderKind, permutation: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; permutation.len()];
        for &v in &permutation {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(MonomialOrder { kind, permutation })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.permutation.len()
    }

    /// Equivalent to the storage order of [`Polynomial`].
    fn is_canonical(&self) -> bool {
        self.kind == OrderKind::Grevlex && self.permutation.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.permutation {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => a.total_degree().cmp(&b.total_degree()).then_with(|| {
                for &v in self.permutation.iter().rev() {
                    if ea[v] != eb[v] {
                        return eb[v].cmp(&ea[v]);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn leading<'a>(&self, p: &'a Polynomial) -> Option<(&'a Monomial, &'a Scalar)> {
        if self.is_canonical() {
            p.grevlex_leading()
        } else {
            p.terms().max_by(|a, b| self.cmp(a.0, b.0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_and_grevlex_differ() {
        let xy2 = Monomial::new(vec![1, 2]);
        let x2 = Monomial::new(vec![2, 0]);
        assert_eq!(MonomialOrder::lex(2).cmp(&xy2, &x2), Ordering::Less);
        assert_eq!(MonomialOrder::grevlex(2).cmp(&xy2, &x2), Ordering::Greater);
        let rev = MonomialOrder::with_permutation(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(rev.cmp(&xy2, &x2), Ordering::Greater);
        assert!(MonomialOrder::with_permutation(OrderKind::Lex, vec![0, 0]).is_none());
    }

    #[test]
    fn canonical_grevlex_matches_storage_order() {
        let ord = MonomialOrder::grevlex(3);
        let ms: Vec<Monomial> = (0..27u32)
            .map(|i| Monomial::new(vec![i % 3, (i / 3) % 3, i / 9]))
            .collect();
        for a in &ms {
            for b in &ms {
                assert_eq!(ord.cmp(a, b), a.cmp(b));
            }
        }
    }
}
