//! Deterministic test systems: power sums, elementary symmetric
//! polynomials, rejection cases, the sl2 determinant demo and seeded random
//! homogeneous systems.


use crate::certifier::{CertError, SquareSystem};
use crate::polyring::{scalar, Monomial, Polynomial, RingContext};
use crate::sysfile::SystemFile;

/// SplitMix64 (Steele, Lea, Flood 2014): state advances by
/// `0x9E3779B97F4A7C15`; output mixes with multipliers
/// `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB` and shifts 30/27/31.
/// Stated here so corpora can be reproduced bit-for-bit elsewhere.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` by plain modulo reduction (bias is irrelevant at
    /// these bounds and keeps the recipe trivial to port).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedStatus {
    Finite,
    PositiveDimensional,
    /// Not a square system; shipped as an illustration only.
    NonSquareDemo,
}

impl ExpectedStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExpectedStatus::Finite => "finite",
            ExpectedStatus::PositiveDimensional => "positive-dimensional",
            ExpectedStatus::NonSquareDemo => "non-square-demo",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: RingContext,
    pub polys: Vec<Polynomial>,
    pub expected: ExpectedStatus,
    pub note: String,
}

impl CorpusEntry {
    fn from_system(name: impl Into<String>, sys: SquareSystem, expected: ExpectedStatus, note: impl Into<String>) -> Self {
        CorpusEntry { name: name.into(), ring: sys.ring().clone(), polys: sys.polys().to_vec(), expected, note: note.into() }
    }

    pub fn system(&self) -> Result<SquareSystem, CertError> {
        SquareSystem::new(self.ring.clone(), self.polys.clone())
    }

    /// The entry in system-file format, with its note as a comment header.
    pub fn to_system_file(&self) -> String {
        let file = SystemFile::new(self.ring.clone(), self.polys.clone());
        format!("# {}: {} (expected {})\n{}", self.name, self.note, self.expected.as_str(), file.to_text())
    }
}

/// `x, y, z` for up to three variables, else `x1 … xn`.
pub fn default_ring(n: usize) -> RingContext {
    let names: Vec<String> = if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    };
    RingContext::new(names).expect("valid names")
}

/// Power sums `p_k = Σ_i x_i^k`, `k = 1..=n`.
///
/// # Panics
/// If `n == 0`.
pub fn newton_system(n: usize) -> SquareSystem {
    assert!(n >= 1);
    let polys = (1..=n as u32)
        .map(|k| (0..n).fold(Polynomial::zero(n), |acc, i| &acc + &Polynomial::var(n, i).pow(k)))
        .collect();
    SquareSystem::new(default_ring(n), polys).expect("power sums are square and homogeneous")
}

/// Elementary symmetric polynomials `e_1 … e_n`.
///
/// # Panics
/// If `n == 0`.
pub fn elementary_symmetric_system(n: usize) -> SquareSystem {
    assert!(n >= 1);
    // e_k(x_1..x_i) = e_k(x_1..x_{i-1}) + x_i e_{k-1}(x_1..x_{i-1})
    let mut e = vec![Polynomial::zero(n); n + 1];
    e[0] = Polynomial::one(n);
    for i in 0..n {
        let xi = Polynomial::var(n, i);
        for k in (1..=i + 1).rev() {
            e[k] = &e[k] + &(&xi * &e[k - 1]);
        }
    }
    SquareSystem::new(default_ring(n), e.split_off(1)).expect("elementary symmetric polynomials are square and homogeneous")
}

fn parsed(ring: &RingContext, exprs: &[&str]) -> SquareSystem {
    let polys = exprs.iter().map(|e| ring.parse(e).expect("corpus expressions parse")).collect();
    SquareSystem::new(ring.clone(), polys).expect("corpus systems are square and homogeneous")
}

/// Systems whose zero fiber is a line through the origin.
pub fn rejection_suite() -> Vec<CorpusEntry> {
    let r = default_ring(2);
    let pd = ExpectedStatus::PositiveDimensional;
    vec![
        CorpusEntry::from_system("reject-x2-xy", parsed(&r, &["x^2", "x*y"]), pd, "common zeros on the line x = 0"),
        CorpusEntry::from_system("reject-diagonal", parsed(&r, &["x^2 - y^2", "x*(x - y)"]), pd, "common zeros on the line x = y"),
        CorpusEntry::from_system("reject-sum-square", parsed(&r, &["x + y", "(x + y)^2"]), pd, "common zeros on the line x + y = 0"),
        CorpusEntry::from_system("reject-repeated", parsed(&r, &["x*y", "x*y"]), pd, "repeated equation, zeros on both axes"),
    ]
}

/// The single sl2 invariant `-a^2 - bc` in coordinates `[[a, b], [c, -a]]`.
/// Its zero set is the nilpotent cone, a surface.
pub fn sl2_det_demo() -> CorpusEntry {
    let ring = RingContext::new(["a", "b", "c"]).expect("valid names");
    let det = ring.parse("-a^2 - b*c").expect("parses");
    CorpusEntry {
        name: "sl2-det".into(),
        ring,
        polys: vec![det],
        expected: ExpectedStatus::NonSquareDemo,
        note: "determinant on sl2; zero fiber is the nilpotent cone".into(),
    }
}

/// All monomials of total degree `d` in `n` variables, ascending grevlex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, d, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

pub const RANDOM_MAX_VARS: usize = 3;
pub const RANDOM_MAX_DEGREE: u32 = 3;

/// Dense homogeneous polynomials of the given degrees. For each polynomial
/// in turn and each monomial in ascending grevlex order the coefficient is
/// `range_i64(-3, 3)` from one [`SplitMix64`] seeded with `seed`; an
/// all-zero draw is redrawn.
pub fn random_system(n: usize, degrees: &[u32], seed: u64) -> Result<SquareSystem, CertError> {
    if n == 0 || n > RANDOM_MAX_VARS || degrees.len() != n {
        return Err(CertError::Malformed(format!(
            "random systems need 1..={RANDOM_MAX_VARS} variables and one degree per variable"
        )));
    }
    if let Some(d) = degrees.iter().find(|&&d| d == 0 || d > RANDOM_MAX_DEGREE) {
        return Err(CertError::Malformed(format!("degree {d} outside 1..={RANDOM_MAX_DEGREE}")));
    }
    let mut rng = SplitMix64::new(seed);
    let polys = degrees
        .iter()
        .map(|&d| {
            let monos = monomials_of_degree(n, d);
            loop {
                let terms = monos.iter().map(|m| (m.clone(), scalar::int(rng.range_i64(-3, 3))));
                let p = Polynomial::from_terms(n, terms.collect::<Vec<_>>()).expect("arity matches");
                if !p.is_zero() {
                    return p;
                }
            }
        })
        .collect();
    SquareSystem::new(default_ring(n), polys)
}

/// Every named entry: Newton and elementary systems for n = 1, 2, 3, the
/// rejection suite and the sl2 demo.
pub fn all_entries() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push(CorpusEntry::from_system(format!("newton-{n}"), newton_system(n), ExpectedStatus::Finite, "power sums"));
    }
    for n in 1..=3 {
        out.push(CorpusEntry::from_system(
            format!("elementary-{n}"),
            elementary_symmetric_system(n),
            ExpectedStatus::Finite,
            "elementary symmetric polynomials",
        ));
    }
    out.extend(rejection_suite());
    out.push(sl2_det_demo());
    out
}

pub fn entry_by_name(name: &str) -> Option<CorpusEntry> {
    all_entries().into_iter().find(|e| e.name == name)
}
