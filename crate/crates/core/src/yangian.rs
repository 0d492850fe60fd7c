//! Formal expressions in the generators `t_ij(x; s)` of `Y_d(Ω)`, evaluated
//! through the projections `A_d(Ω) → U(gl(N, Ω))`.
//!
//! Products of expressions are straightened by evaluation: the product is
//! computed at some `N` with enough room, expanded in the ordered monomials
//! of bounded total word length, and accepted only if the same expansion
//! reproduces the product at `N + 1`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Insert};
use crate::linear::LinComb;
use crate::omega::AlgebraSpec;
use crate::scalar::Scalar;
use crate::ugl::{Limits, Monomial, UAlgebra, UElement};
use crate::words::{all_words, coagulate_word, compositions, necklace_count, Word};

/// A generator `t_ij(x; s)` with `1 <= i, j <= d` and a nonempty basis word.
///
/// Ordered by `(i, j, word length, word letters, s)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TGen {
    i: usize,
    j: usize,
    len: usize,
    word: Word,
    s: Scalar,
}

impl TGen {
    pub fn new(d: usize, i: usize, j: usize, word: Word, s: Scalar) -> Result<Self> {
        if i == 0 || j == 0 || i > d || j > d {
            return Err(Error::IndexOutOfRange(format!("t({i},{j}) with d = {d}")));
        }
        if word.is_empty() {
            return Err(Error::InvalidArgument("t_ij needs a nonempty word".into()));
        }
        Ok(Self {
            i,
            j,
            len: word.len(),
            word,
            s,
        })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn s(&self) -> &Scalar {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn with_s(&self, s: Scalar) -> Self {
        Self { s, ..self.clone() }
    }

    pub fn display<'a>(&'a self, alg: &'a AlgebraSpec) -> impl fmt::Display + 'a {
        TGenDisplay { g: self, alg }
    }
}

struct TGenDisplay<'a> {
    g: &'a TGen,
    alg: &'a AlgebraSpec,
}

impl fmt::Display for TGenDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t{}{}({};{})",
            self.g.i,
            self.g.j,
            self.g.word.display(self.alg),
            self.g.s
        )
    }
}

/// A weakly increasing product of generators sharing one parameter `s`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct OrderedMonomial(Vec<TGen>);

impl OrderedMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn new(gens: Vec<TGen>) -> Result<Self> {
        if gens.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument(
                "monomial factors are not weakly increasing".into(),
            ));
        }
        if gens.windows(2).any(|w| w[0].s != w[1].s) {
            return Err(Error::InvalidArgument(
                "monomial factors use different parameters".into(),
            ));
        }
        Ok(Self(gens))
    }

    pub fn factors(&self) -> &[TGen] {
        &self.0
    }

    /// Sum of the word lengths of the factors.
    pub fn total_len(&self) -> usize {
        self.0.iter().map(|g| g.len).sum()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn s(&self) -> Option<&Scalar> {
        self.0.first().map(|g| &g.s)
    }

    /// Weight under the diagonal of `gl(d, C)`: `t_ij` has weight `e_i − e_j`.
    pub fn weight(&self, d: usize) -> Vec<i64> {
        let mut w = vec![0; d];
        for g in &self.0 {
            w[g.i - 1] += 1;
            w[g.j - 1] -= 1;
        }
        w
    }

    fn shifted(&self, c: &Scalar) -> Self {
        Self(self.0.iter().map(|g| g.with_s(&g.s + c)).collect())
    }

    pub fn display<'a>(&'a self, alg: &'a AlgebraSpec) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|g| g.display(alg).to_string())
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// An element of `Y_d(Ω)` in ordered-monomial coordinates.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct YExpression {
    terms: LinComb<OrderedMonomial>,
}

impl YExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(OrderedMonomial::one())
    }

    pub fn gen(g: TGen) -> Self {
        Self::monomial(OrderedMonomial(vec![g]))
    }

    pub fn monomial(m: OrderedMonomial) -> Self {
        Self {
            terms: LinComb::basis(m),
        }
    }

    pub fn from_terms(terms: LinComb<OrderedMonomial>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &LinComb<OrderedMonomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            terms: &self.terms + &other.terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            terms: &self.terms - &other.terms,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            terms: self.terms.scaled(c),
        }
    }

    /// `Shift_c`: replaces every parameter `s` by `s + c`.
    pub fn shift(&self, c: &Scalar) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.shifted(c), v.clone())).collect(),
        }
    }

    /// Largest total word length of a monomial (0 for constants and zero).
    pub fn total_len(&self) -> usize {
        self.terms.keys().map(|m| m.total_len()).max().unwrap_or(0)
    }

    /// The common parameter of all non-constant monomials.
    pub fn parameter(&self) -> Result<Option<Scalar>> {
        let mut s: Option<&Scalar> = None;
        for m in self.terms.keys() {
            if let Some(ms) = m.s() {
                match s {
                    None => s = Some(ms),
                    Some(prev) if prev != ms => {
                        return Err(Error::Precondition("expression mixes parameters".into()));
                    }
                    _ => {}
                }
            }
        }
        Ok(s.cloned())
    }

    /// Common `gl(d, C)` weight, if homogeneous.
    pub fn weight(&self, d: usize) -> Option<Vec<i64>> {
        let mut w: Option<Vec<i64>> = None;
        for m in self.terms.keys() {
            let mw = m.weight(d);
            match &w {
                None => w = Some(mw),
                Some(x) if *x != mw => return None,
                _ => {}
            }
        }
        w
    }

    pub fn to_text(&self, alg: &AlgebraSpec) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("{c} * {}", m.display(alg)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// All generators with word length `1..=max_len`, in increasing order.
pub fn tgens_up_to(d: usize, dim: usize, max_len: usize, s: &Scalar) -> Vec<TGen> {
    let mut out = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            for m in 1..=max_len {
                for w in all_words(dim, m) {
                    out.push(TGen {
                        i,
                        j,
                        len: m,
                        word: w,
                        s: s.clone(),
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Ordered monomials with total word length `<= max_len` and at most
/// `max_deg` factors, the unit first.
pub fn ordered_monomials(d: usize, dim: usize, max_len: usize, max_deg: usize, s: &Scalar) -> Vec<OrderedMonomial> {
    let gens = tgens_up_to(d, dim, max_len, s);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(
        gens: &[TGen],
        start: usize,
        budget: usize,
        slots: usize,
        stack: &mut Vec<TGen>,
        out: &mut Vec<OrderedMonomial>,
    ) {
        out.push(OrderedMonomial(stack.clone()));
        if slots == 0 {
            return;
        }
        for (k, g) in gens.iter().enumerate().skip(start) {
            if g.len <= budget {
                stack.push(g.clone());
                rec(gens, k, budget - g.len, slots - 1, stack, out);
                stack.pop();
            }
        }
    }
    rec(&gens, 0, max_len, max_deg, &mut stack, &mut out);
    out
}

/// Outcome of an independence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Independence {
    FullRank {
        rank: usize,
    },
    /// Coefficients `c` with `Σ c_k · y_k = 0`, normalized to `−1` on the
    /// first input that is dependent on its predecessors.
    Dependent(Vec<Scalar>),
}

/// Result of [`YangianContext::pbw_suite`].
#[derive(Clone, Debug, Serialize)]
pub struct PbwReport {
    pub d: usize,
    pub max_len: usize,
    pub max_deg: usize,
    pub n: usize,
    pub count: usize,
    pub rank: usize,
    pub witness: Option<Vec<String>>,
}

impl PbwReport {
    pub fn passed(&self) -> bool {
        self.rank == self.count
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitVerdict {
    StabilizedMatch,
    Mismatch,
    NotStabilized,
}

/// Result of [`YangianContext::splitting_probe`].
#[derive(Clone, Debug, Serialize)]
pub struct SplitReport {
    pub d: usize,
    pub deg: usize,
    pub n: usize,
    pub dims: [usize; 2],
    pub expected: u64,
    pub verdict: SplitVerdict,
}

/// Dimension of the part of `S(V)` of weighted degree `<= deg`, where `v[m]`
/// is the dimension of the degree-`m` piece of `V` (`v[0]` is ignored).
pub fn symmetric_dim_up_to(v: &[u64], deg: usize) -> u64 {
    let mut series = vec![0u64; deg + 1];
    series[0] = 1;
    for m in 1..=deg {
        let vm = v.get(m).copied().unwrap_or(0);
        if vm == 0 {
            continue;
        }
        // multiply by (1 − t^m)^{−vm}: repeated prefix sums with stride m
        for _ in 0..vm {
            for k in m..=deg {
                series[k] += series[k - m];
            }
        }
    }
    series.iter().sum()
}

/// Expected dimension of the degree-`<= deg` part of
/// `S(Tc⁺(Ω)) ⊗ S(M_d(T⁺(Ω)))`.
pub fn expected_split_dim(dim: usize, d: usize, deg: usize) -> u64 {
    let q = dim as u64;
    let v: Vec<u64> = (0..=deg)
        .map(|m| {
            if m == 0 {
                0
            } else {
                necklace_count(q, m as u32) + (d * d) as u64 * q.pow(m as u32)
            }
        })
        .collect();
    symmetric_dim_up_to(&v, deg)
}

type BasisKey = (usize, Scalar, usize, Option<Vec<i64>>);

struct CandidateBasis {
    monomials: Vec<OrderedMonomial>,
    echelon: Echelon<Monomial>,
}

/// Evaluation of `Y_d(Ω)` expressions at finite `N`, with caches.
pub struct YangianContext {
    omega: Arc<AlgebraSpec>,
    d: usize,
    limits: Limits,
    max_candidates: usize,
    algebras: RefCell<BTreeMap<usize, Rc<UAlgebra>>>,
    t_cache: RefCell<HashMap<(usize, TGen), UElement>>,
    mono_cache: RefCell<HashMap<(usize, OrderedMonomial), UElement>>,
    bases: RefCell<HashMap<BasisKey, Rc<CandidateBasis>>>,
}

impl YangianContext {
    pub fn new(omega: Arc<AlgebraSpec>, d: usize) -> Self {
        Self {
            omega,
            d,
            limits: Limits::default(),
            max_candidates: 5_000,
            algebras: RefCell::new(BTreeMap::new()),
            t_cache: RefCell::new(HashMap::new()),
            mono_cache: RefCell::new(HashMap::new()),
            bases: RefCell::new(HashMap::new()),
        }
    }

    pub fn with_limits(mut self, limits: Limits, max_candidates: usize) -> Self {
        self.limits = limits;
        self.max_candidates = max_candidates;
        self
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn omega(&self) -> &Arc<AlgebraSpec> {
        &self.omega
    }

    pub fn tgen(&self, i: usize, j: usize, word: Word, s: Scalar) -> Result<TGen> {
        word.check(&self.omega)?;
        TGen::new(self.d, i, j, word, s)
    }

    /// The algebra `U(gl(N, Ω))`, shared across calls.
    pub fn algebra(&self, n: usize) -> Result<Rc<UAlgebra>> {
        if let Some(a) = self.algebras.borrow().get(&n) {
            return Ok(a.clone());
        }
        let a = Rc::new(UAlgebra::new(self.omega.clone(), n)?.with_limits(self.limits));
        self.algebras.borrow_mut().insert(n, a.clone());
        Ok(a)
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n < self.d || n == 0 {
            return Err(Error::Precondition(format!("N = {n} is below d = {}", self.d)));
        }
        Ok(())
    }

    fn eval_tgen(&self, g: &TGen, n: usize) -> Result<UElement> {
        let key = (n, g.clone());
        if let Some(hit) = self.t_cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        if g.i > self.d || g.j > self.d {
            return Err(Error::IndexOutOfRange(format!(
                "t({},{}) with d = {}",
                g.i, g.j, self.d
            )));
        }
        let u = self.algebra(n)?.t_elem(g.i, g.j, &g.word, &g.s)?;
        self.t_cache.borrow_mut().insert(key, u.clone());
        Ok(u)
    }

    /// `π_{∞,N}` of an ordered monomial.
    pub fn evaluate_monomial(&self, m: &OrderedMonomial, n: usize) -> Result<UElement> {
        self.check_n(n)?;
        let alg = self.algebra(n)?;
        match m.0.len() {
            0 => return Ok(alg.one()),
            1 => return self.eval_tgen(&m.0[0], n),
            _ => {}
        }
        let key = (n, m.clone());
        if let Some(hit) = self.mono_cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let (last, prefix) = m.0.split_last().expect("nonempty");
        let head = self.evaluate_monomial(&OrderedMonomial(prefix.to_vec()), n)?;
        let u = alg.multiply(&head, &self.eval_tgen(last, n)?)?;
        self.mono_cache.borrow_mut().insert(key, u.clone());
        Ok(u)
    }

    /// `π_{∞,N}(y)`.
    pub fn evaluate(&self, y: &YExpression, n: usize) -> Result<UElement> {
        self.check_n(n)?;
        let mut out = self.algebra(n)?.zero();
        for (m, c) in &y.terms {
            out.add_scaled(&self.evaluate_monomial(m, n)?, c)?;
        }
        Ok(out)
    }

    /// `t_ij(x; s) = Σ_ν (s′−s)^{ℓ(x)−ℓ(x∗ν)} t_ij(x∗ν; s′)` with coagulated
    /// words expanded into basis words.
    pub fn reexpress(&self, g: &TGen, s2: &Scalar) -> Result<YExpression> {
        let m = g.len;
        let base = s2 - &g.s;
        let mut out = LinComb::new();
        for nu in compositions(m)? {
            let coeff = base.pow((m - nu.length()) as u32);
            if coeff.is_zero() {
                continue;
            }
            for (w, c) in coagulate_word(&self.omega, &g.word, &nu)? {
                let t = TGen {
                    i: g.i,
                    j: g.j,
                    len: w.len(),
                    word: w,
                    s: s2.clone(),
                };
                out.add_term(OrderedMonomial(vec![t]), &coeff * &c);
            }
        }
        Ok(YExpression { terms: out })
    }

    /// Rank test of the evaluations at `N`. Full rank certifies independence
    /// in `Y_d(Ω)`; a dependency is only a finite-`N` observation.
    pub fn independence_check(&self, ys: &[YExpression], n: usize) -> Result<Independence> {
        let mut ech = Echelon::tracked();
        for y in ys {
            if let Insert::Dependent(rel) = ech.insert(self.evaluate(y, n)?.into_terms()) {
                let mut v = vec![Scalar::zero(); ys.len()];
                for (&k, c) in &rel {
                    v[k] = -c;
                }
                return Ok(Independence::Dependent(v));
            }
        }
        Ok(Independence::FullRank { rank: ys.len() })
    }

    /// Independence at `N`, or a dependency vector confirmed unchanged at
    /// `N + 1`.
    pub fn independence_certificate(&self, ys: &[YExpression], n: usize) -> Result<Independence> {
        match self.independence_check(ys, n)? {
            full @ Independence::FullRank { .. } => Ok(full),
            Independence::Dependent(v) => match self.independence_check(ys, n + 1)? {
                full @ Independence::FullRank { .. } => Ok(full),
                Independence::Dependent(w) if w == v => Ok(Independence::Dependent(v)),
                Independence::Dependent(_) => Err(Error::NotStabilized(format!(
                    "dependency vectors differ at N = {n} and N = {}",
                    n + 1
                ))),
            },
        }
    }

    fn candidate_basis(
        &self,
        n: usize,
        s: &Scalar,
        max_len: usize,
        weight: Option<Vec<i64>>,
    ) -> Result<Rc<CandidateBasis>> {
        let key = (n, s.clone(), max_len, weight.clone());
        if let Some(hit) = self.bases.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let mut monomials = ordered_monomials(self.d, self.omega.dim(), max_len, max_len, s);
        if let Some(w) = &weight {
            monomials.retain(|m| m.weight(self.d) == *w);
        }
        if monomials.len() > self.max_candidates {
            return Err(Error::SizeLimit(format!(
                "{} candidate monomials exceed cap {}",
                monomials.len(),
                self.max_candidates
            )));
        }
        let mut echelon = Echelon::tracked();
        for m in &monomials {
            if let Insert::Dependent(_) = echelon.insert(self.evaluate_monomial(m, n)?.into_terms()) {
                return Err(Error::NotStabilized(format!(
                    "ordered monomials of total length <= {max_len} are not separated at N = {n}"
                )));
            }
        }
        let basis = Rc::new(CandidateBasis { monomials, echelon });
        self.bases.borrow_mut().insert(key, basis.clone());
        Ok(basis)
    }

    /// Coordinates of an evaluated element in the ordered monomials at
    /// parameter `s` with total length `<= max_len`; `None` if outside
    /// their span.
    pub fn expand(
        &self,
        u: &UElement,
        s: &Scalar,
        max_len: usize,
        weight: Option<Vec<i64>>,
    ) -> Result<Option<YExpression>> {
        let basis = self.candidate_basis(u.n(), s, max_len, weight)?;
        Ok(basis.echelon.express(u.terms()).map(|coords| YExpression {
            terms: coords
                .iter()
                .map(|(&k, c)| (basis.monomials[k].clone(), c.clone()))
                .collect(),
        }))
    }

    /// The smallest `N` used for straightening products of total length
    /// `len`.
    pub fn default_point(&self, len: usize) -> usize {
        (self.d + len).max(1)
    }

    /// Product in `Y_d(Ω)`: expanded at `N`, certified at `N + 1`.
    pub fn multiply_at(&self, y1: &YExpression, y2: &YExpression, n: usize) -> Result<YExpression> {
        let s = match (y1.parameter()?, y2.parameter()?) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Precondition("factors use different parameters".into()));
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => Scalar::zero(),
        };
        let len = y1.total_len() + y2.total_len();
        let weight = match (y1.weight(self.d), y2.weight(self.d)) {
            (Some(a), Some(b)) => Some(a.iter().zip(&b).map(|(x, y)| x + y).collect()),
            _ => None,
        };
        let alg = self.algebra(n)?;
        let prod = alg.multiply(&self.evaluate(y1, n)?, &self.evaluate(y2, n)?)?;
        let Some(result) = self.expand(&prod, &s, len, weight)? else {
            return Err(Error::NotStabilized(format!(
                "product is outside the span of ordered monomials of length <= {len} at N = {n}"
            )));
        };
        let next = self.algebra(n + 1)?;
        let prod_next = next.multiply(&self.evaluate(y1, n + 1)?, &self.evaluate(y2, n + 1)?)?;
        if self.evaluate(&result, n + 1)? != prod_next {
            return Err(Error::NotStabilized(format!(
                "expansion at N = {n} fails at N = {}",
                n + 1
            )));
        }
        Ok(result)
    }

    /// Product at the default evaluation point.
    pub fn multiply(&self, y1: &YExpression, y2: &YExpression) -> Result<YExpression> {
        self.multiply_at(y1, y2, self.default_point(y1.total_len() + y2.total_len()))
    }

    /// Whether the structure constants of `g·h` are invariant under
    /// `s ↦ s + c`.
    pub fn shift_check(&self, g: &TGen, h: &TGen, c: &Scalar, n: usize) -> Result<bool> {
        let at_s = self.multiply_at(&YExpression::gen(g.clone()), &YExpression::gen(h.clone()), n)?;
        let gs = g.with_s(&g.s + c);
        let hs = h.with_s(&h.s + c);
        let at_shift = self.multiply_at(&YExpression::gen(gs), &YExpression::gen(hs), n)?;
        Ok(at_s.shift(c) == at_shift)
    }

    /// Rank of all ordered monomials with total word length `<= max_len` and
    /// at most `max_deg` factors, evaluated at `N`.
    pub fn pbw_suite(&self, max_len: usize, max_deg: usize, n: usize, s: &Scalar) -> Result<PbwReport> {
        self.check_n(n)?;
        let monomials = ordered_monomials(self.d, self.omega.dim(), max_len, max_deg, s);
        if monomials.len() > self.max_candidates {
            return Err(Error::SizeLimit(format!(
                "{} ordered monomials exceed cap {}",
                monomials.len(),
                self.max_candidates
            )));
        }
        let mut ech = Echelon::tracked();
        let mut witness = None;
        for m in &monomials {
            if let Insert::Dependent(rel) = ech.insert(self.evaluate_monomial(m, n)?.into_terms()) {
                if witness.is_none() {
                    witness = Some(
                        rel.iter()
                            .map(|(&k, c)| format!("{} * {}", -c, monomials[k].display(&self.omega)))
                            .collect(),
                    );
                }
            }
        }
        Ok(PbwReport {
            d: self.d,
            max_len,
            max_deg,
            n,
            count: monomials.len(),
            rank: ech.rank(),
            witness,
        })
    }

    /// Compares `invariant_dim` at `N` and `N + 1` with the dimension of the
    /// split model in degree `<= deg`.
    pub fn splitting_probe(&self, deg: usize, n: usize) -> Result<SplitReport> {
        self.check_n(n)?;
        let a = self.algebra(n)?.invariant_dim(self.d, deg)?;
        let b = self.algebra(n + 1)?.invariant_dim(self.d, deg)?;
        let expected = expected_split_dim(self.omega.dim(), self.d, deg);
        let verdict = if a != b {
            SplitVerdict::NotStabilized
        } else if a as u64 == expected {
            SplitVerdict::StabilizedMatch
        } else {
            SplitVerdict::Mismatch
        };
        Ok(SplitReport {
            d: self.d,
            deg,
            n,
            dims: [a, b],
            expected,
            verdict,
        })
    }

    /// Whether every `gl(N, C)`-invariant of degree `<= deg` commutes with the
    /// evaluated generators of word length `<= max_len` at `N`.
    pub fn commutant_check(&self, deg: usize, max_len: usize, n: usize) -> Result<bool> {
        self.check_n(n)?;
        let alg = self.algebra(n)?;
        let invariants = alg.invariant_basis(0, deg)?;
        for g in tgens_up_to(self.d, self.omega.dim(), max_len, &Scalar::zero()) {
            let t = self.eval_tgen(&g, n)?;
            for z in &invariants {
                if !alg.commutator(z, &t)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
