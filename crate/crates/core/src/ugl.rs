//! The enveloping algebra `U(gl(N, Ω))` in PBW normal form.
//!
//! Generators `E_ij(x_b)` are ordered by the key `(class, i, j, b)` where the
//! class is 0 when `i < N` and `j < N`, 1 when `i = N` and `j < N`, and 2 when
//! `j = N`. With this order every weight-zero PBW monomial that involves the
//! index `N` ends in a generator `E_{kN}`, so it lies in the left ideal
//! `I⁺(N)`; this is what makes the projection `π_{N,N-1}` a deletion.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::linear::LinComb;
use crate::omega::AlgebraSpec;
use crate::scalar::Scalar;
use crate::words::{coagulate_word, compositions, TensorElement, Word};

/// A basis element `E_ij(x_b)` of `gl(N, Ω)`, indices 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gen {
    class: u8,
    i: u8,
    j: u8,
    b: u16,
}

impl Gen {
    fn new(i: usize, j: usize, b: usize, n: usize) -> Self {
        let class = if j == n {
            2
        } else if i == n {
            1
        } else {
            0
        };
        Gen {
            class,
            i: i as u8,
            j: j as u8,
            b: b as u16,
        }
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn b(&self) -> usize {
        self.b as usize
    }

    fn touches(&self, n: usize) -> bool {
        self.i() == n || self.j() == n
    }

    /// Eigenvalue under `[E_aa, -]`.
    fn weight_at(&self, a: usize) -> i64 {
        (self.i() == a) as i64 - (self.j() == a) as i64
    }
}

/// A weakly increasing sequence of generators.
pub type Monomial = Vec<Gen>;

/// An element of `U(gl(N, Ω))` in PBW coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UElement {
    n: usize,
    terms: LinComb<Monomial>,
}

impl UElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: LinComb::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self {
            n,
            terms: LinComb::basis(Vec::new()),
        }
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        Self {
            n,
            terms: LinComb::single(Vec::new(), c),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &LinComb<Monomial> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<Monomial> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Filtration degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.len()).max()
    }

    /// The homogeneous PBW-degree-`g` part (the symbol when `g` is the
    /// filtration degree).
    pub fn part_of_degree(&self, g: usize) -> UElement {
        Self {
            n: self.n,
            terms: self.terms.filter(|m| m.len() == g),
        }
    }

    fn check(&self, other: &UElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ContextMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &UElement) -> Result<UElement> {
        self.check(other)?;
        Ok(Self {
            n: self.n,
            terms: &self.terms + &other.terms,
        })
    }

    pub fn sub(&self, other: &UElement) -> Result<UElement> {
        self.check(other)?;
        Ok(Self {
            n: self.n,
            terms: &self.terms - &other.terms,
        })
    }

    pub fn scale(&self, c: &Scalar) -> UElement {
        Self {
            n: self.n,
            terms: self.terms.scaled(c),
        }
    }

    pub fn add_scaled(&mut self, other: &UElement, c: &Scalar) -> Result<()> {
        self.check(other)?;
        self.terms.add_scaled(&other.terms, c);
        Ok(())
    }

    /// Common `[E_NN, -]` eigenvalue, or `None` if the element mixes weights.
    /// Zero has weight 0.
    pub fn weight(&self) -> Option<i64> {
        let mut w = None;
        for m in self.terms.keys() {
            let mw: i64 = m.iter().map(|g| g.weight_at(self.n)).sum();
            match w {
                None => w = Some(mw),
                Some(x) if x != mw => return None,
                _ => {}
            }
        }
        Some(w.unwrap_or(0))
    }

    /// Canonical text form: one `coeff * E(i,j,label)...` line per monomial,
    /// in monomial order.
    pub fn to_text(&self, alg: &AlgebraSpec) -> String {
        if self.is_zero() {
            return "0\n".into();
        }
        let mut s = String::new();
        for (m, c) in &self.terms {
            s.push_str(&format!("{c} * {}\n", monomial_text(m, alg)));
        }
        s
    }
}

pub fn monomial_text(m: &[Gen], alg: &AlgebraSpec) -> String {
    if m.is_empty() {
        return "1".into();
    }
    m.iter()
        .map(|g| format!("E({},{},{})", g.i, g.j, alg.label(g.b())))
        .collect::<Vec<_>>()
        .join("")
}

/// Size caps for the linear-algebra probes.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest PBW basis a probe may enumerate.
    pub max_basis: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_basis: 50_000 }
    }
}

/// `U(gl(N, Ω))` for a fixed `N` and Ω, with memoized rewriting.
pub struct UAlgebra {
    omega: Arc<AlgebraSpec>,
    n: usize,
    limits: Limits,
    insert_cache: RefCell<HashMap<(Monomial, Gen), LinComb<Monomial>>>,
    e_cache: RefCell<HashMap<(usize, usize, Word), UElement>>,
}

impl fmt::Debug for UAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U(gl({}, {}))", self.n, self.omega.name())
    }
}

impl UAlgebra {
    pub fn new(omega: Arc<AlgebraSpec>, n: usize) -> Result<Self> {
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidArgument(format!("N = {n} out of range")));
        }
        if omega.dim() > u16::MAX as usize {
            return Err(Error::InvalidArgument("algebra dimension too large".into()));
        }
        Ok(Self {
            omega,
            n,
            limits: Limits::default(),
            insert_cache: RefCell::new(HashMap::new()),
            e_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn omega(&self) -> &Arc<AlgebraSpec> {
        &self.omega
    }

    pub fn gen(&self, i: usize, j: usize, b: usize) -> Result<Gen> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange(format!("E({i},{j}) with N = {}", self.n)));
        }
        if b >= self.omega.dim() {
            return Err(Error::IndexOutOfRange(format!(
                "basis index {b} >= dim {}",
                self.omega.dim()
            )));
        }
        Ok(Gen::new(i, j, b, self.n))
    }

    fn gen_unchecked(&self, i: usize, j: usize, b: usize) -> Gen {
        Gen::new(i, j, b, self.n)
    }

    /// All generators in increasing order.
    pub fn generators(&self) -> Vec<Gen> {
        let mut v = Vec::with_capacity(self.n * self.n * self.omega.dim());
        for i in 1..=self.n {
            for j in 1..=self.n {
                for b in 0..self.omega.dim() {
                    v.push(self.gen_unchecked(i, j, b));
                }
            }
        }
        v.sort();
        v
    }

    pub fn element(&self, terms: LinComb<Monomial>) -> UElement {
        UElement { n: self.n, terms }
    }

    pub fn one(&self) -> UElement {
        UElement::one(self.n)
    }

    pub fn zero(&self) -> UElement {
        UElement::zero(self.n)
    }

    /// A single generator as an element.
    pub fn generator(&self, i: usize, j: usize, b: usize) -> Result<UElement> {
        Ok(self.element(LinComb::basis(vec![self.gen(i, j, b)?])))
    }

    fn check(&self, u: &UElement) -> Result<()> {
        if u.n != self.n {
            return Err(Error::ContextMismatch {
                left: self.n,
                right: u.n,
            });
        }
        Ok(())
    }

    /// `[E_ij(x_a), E_kl(x_b)] = δ_kj E_il(x_a x_b) − δ_il E_kj(x_b x_a)`
    fn bracket(&self, g: Gen, h: Gen) -> Vec<(Gen, Scalar)> {
        let mut out = Vec::new();
        if h.i == g.j {
            for (&c, v) in self.omega.product(g.b(), h.b()) {
                out.push((self.gen_unchecked(g.i(), h.j(), c), v.clone()));
            }
        }
        if g.i == h.j {
            for (&c, v) in self.omega.product(h.b(), g.b()) {
                out.push((self.gen_unchecked(h.i(), g.j(), c), -v));
            }
        }
        out
    }

    /// Normal form of `m · g` for a sorted monomial `m`.
    fn mul_mono_gen(&self, m: &[Gen], g: Gen) -> LinComb<Monomial> {
        match m.last() {
            None => return LinComb::basis(vec![g]),
            Some(&last) if last <= g => {
                let mut v = m.to_vec();
                v.push(g);
                return LinComb::basis(v);
            }
            _ => {}
        }
        let key = (m.to_vec(), g);
        if let Some(hit) = self.insert_cache.borrow().get(&key) {
            return hit.clone();
        }
        let (&last, rest) = m.split_last().expect("nonempty");
        // rest · last · g = (rest · g) · last + rest · [last, g]
        let mut out = LinComb::new();
        for (mono, c) in self.mul_mono_gen(rest, g) {
            out.add_scaled(&self.mul_mono_gen(&mono, last), &c);
        }
        for (h, c) in self.bracket(last, g) {
            out.add_scaled(&self.mul_mono_gen(rest, h), &c);
        }
        self.insert_cache.borrow_mut().insert(key, out.clone());
        out
    }

    fn mul_terms_gen(&self, a: &LinComb<Monomial>, g: Gen) -> LinComb<Monomial> {
        let mut out = LinComb::new();
        for (m, c) in a {
            out.add_scaled(&self.mul_mono_gen(m, g), c);
        }
        out
    }

    /// Product of a generator sequence, normal-ordered by right insertion.
    pub fn product_of(&self, seq: &[Gen]) -> UElement {
        let mut acc = LinComb::basis(Vec::new());
        for &g in seq {
            acc = self.mul_terms_gen(&acc, g);
        }
        self.element(acc)
    }

    /// PBW normal form of a generator product, rewriting the leftmost
    /// out-of-order adjacent pair first.
    pub fn normal_form(&self, seq: &[Gen]) -> Result<UElement> {
        self.normal_form_scheduled(seq, |descents| descents[0])
    }

    /// Normal form with a caller-chosen rewriting schedule: `pick` receives the
    /// positions `k` with `seq[k] > seq[k+1]` and returns the one to rewrite.
    pub fn normal_form_scheduled(&self, seq: &[Gen], mut pick: impl FnMut(&[usize]) -> usize) -> Result<UElement> {
        for g in seq {
            if g.i() > self.n || g.j() > self.n || *g != self.gen_unchecked(g.i(), g.j(), g.b()) {
                return Err(Error::ContextMismatch {
                    left: self.n,
                    right: g.i().max(g.j()),
                });
            }
        }
        let mut pending: LinComb<Monomial> = LinComb::basis(seq.to_vec());
        let mut done = LinComb::new();
        while let Some((word, c)) = pending.first().map(|(w, c)| (w.clone(), c.clone())) {
            pending.add_term(word.clone(), -&c);
            let descents: Vec<usize> = (0..word.len().saturating_sub(1))
                .filter(|&k| word[k] > word[k + 1])
                .collect();
            if descents.is_empty() {
                done.add_term(word, c);
                continue;
            }
            let k = pick(&descents);
            debug_assert!(descents.contains(&k));
            let mut swapped = word.clone();
            swapped.swap(k, k + 1);
            pending.add_term(swapped, c.clone());
            for (h, hc) in self.bracket(word[k], word[k + 1]) {
                let mut shorter = Vec::with_capacity(word.len() - 1);
                shorter.extend_from_slice(&word[..k]);
                shorter.push(h);
                shorter.extend_from_slice(&word[k + 2..]);
                pending.add_term(shorter, &c * &hc);
            }
        }
        Ok(self.element(done))
    }

    /// Normal form under a random rewriting schedule.
    pub fn normal_form_random<R: Rng>(&self, seq: &[Gen], rng: &mut R) -> Result<UElement> {
        self.normal_form_scheduled(seq, |d| d[rng.gen_range(0..d.len())])
    }

    pub fn multiply(&self, a: &UElement, b: &UElement) -> Result<UElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = LinComb::new();
        for (mb, cb) in &b.terms {
            let mut acc = a.terms.clone();
            for &g in mb {
                acc = self.mul_terms_gen(&acc, g);
            }
            out.add_scaled(&acc, cb);
        }
        Ok(self.element(out))
    }

    pub fn commutator(&self, a: &UElement, b: &UElement) -> Result<UElement> {
        self.multiply(a, b)?.sub(&self.multiply(b, a)?)
    }

    /// `[E_ij, -]` extended as a derivation.
    pub fn ad_e(&self, i: usize, j: usize, u: &UElement) -> Result<UElement> {
        self.check(u)?;
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange(format!("E({i},{j}) with N = {}", self.n)));
        }
        let mut out = LinComb::new();
        for (m, c) in &u.terms {
            out.add_scaled(&self.ad_e_monomial(i, j, m), c);
        }
        Ok(self.element(out))
    }

    fn ad_e_monomial(&self, i: usize, j: usize, m: &[Gen]) -> LinComb<Monomial> {
        let mut out = LinComb::new();
        for (pos, g) in m.iter().enumerate() {
            // [E_ij, E_kl(y)] = δ_kj E_il(y) − δ_il E_kj(y)
            let mut images = Vec::with_capacity(2);
            if g.i() == j {
                images.push((self.gen_unchecked(i, g.j(), g.b()), Scalar::one()));
            }
            if g.j() == i {
                images.push((self.gen_unchecked(g.i(), j, g.b()), -Scalar::one()));
            }
            for (h, c) in images {
                let mut acc = LinComb::basis(m[..pos].to_vec());
                acc = self.mul_terms_gen(&acc, h);
                for &rest in &m[pos + 1..] {
                    acc = self.mul_terms_gen(&acc, rest);
                }
                out.add_scaled(&acc, &c);
            }
        }
        out
    }

    /// Whether `u` is annihilated by `gl_d(N, C)`, the span of `E_ij` with
    /// `d < i, j <= N`.
    pub fn is_in_centralizer(&self, u: &UElement, d: usize) -> Result<bool> {
        self.check(u)?;
        if d > self.n {
            return Err(Error::InvalidArgument(format!("d = {d} exceeds N = {}", self.n)));
        }
        for i in d + 1..=self.n {
            for j in d + 1..=self.n {
                if !self.ad_e(i, j, u)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_indices(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(Error::IndexOutOfRange(format!("indices ({i},{j}) with N = {}", self.n)));
        }
        Ok(())
    }

    /// `e_ij(w; N) = Σ_{a_1..a_{m-1}} E_{i a_1}(w_1) E_{a_1 a_2}(w_2) ⋯ E_{a_{m-1} j}(w_m)`
    pub fn e_elem(&self, i: usize, j: usize, w: &Word) -> Result<UElement> {
        self.check_indices(i, j)?;
        if w.is_empty() {
            return Err(Error::InvalidArgument("e_ij needs a nonempty word".into()));
        }
        w.check(&self.omega)?;
        let key = (i, j, w.clone());
        if let Some(hit) = self.e_cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let letters = w.letters();
        let m = letters.len();
        let out = if m == 1 {
            LinComb::basis(vec![self.gen_unchecked(i, j, letters[0])])
        } else {
            // partial[a] collects the summands whose running column index is a.
            let mut partial: Vec<LinComb<Monomial>> = (1..=self.n)
                .map(|a| LinComb::basis(vec![self.gen_unchecked(i, a, letters[0])]))
                .collect();
            for &x in &letters[1..m - 1] {
                let mut next = vec![LinComb::new(); self.n];
                for (a, p) in partial.iter().enumerate() {
                    for (a2, slot) in next.iter_mut().enumerate() {
                        let g = self.gen_unchecked(a + 1, a2 + 1, x);
                        slot.add_assign(&self.mul_terms_gen(p, g));
                    }
                }
                partial = next;
            }
            let mut acc = LinComb::new();
            for (a, p) in partial.iter().enumerate() {
                acc.add_assign(&self.mul_terms_gen(p, self.gen_unchecked(a + 1, j, letters[m - 1])));
            }
            acc
        };
        let out = self.element(out);
        self.e_cache.borrow_mut().insert(key, out.clone());
        Ok(out)
    }

    /// `e_ij` extended linearly to tensors of positive degree.
    pub fn e_elem_tensor(&self, i: usize, j: usize, t: &TensorElement) -> Result<UElement> {
        let mut out = self.zero();
        for (w, c) in t {
            out.add_scaled(&self.e_elem(i, j, w)?, c)?;
        }
        Ok(out)
    }

    /// `t_ij(w; N; s) = Σ_{ν ∈ Comp(m)} (−N−s)^{m−ℓ(ν)} e_ij(w∗ν; N)`, with
    /// coagulated tuples expanded into basis words.
    pub fn t_elem(&self, i: usize, j: usize, w: &Word, s: &Scalar) -> Result<UElement> {
        self.check_indices(i, j)?;
        if w.is_empty() {
            return Err(Error::InvalidArgument("t_ij needs a nonempty word".into()));
        }
        let m = w.len();
        let base = -(&Scalar::from(self.n) + s);
        let mut out = self.zero();
        for nu in compositions(m)? {
            let coeff = base.pow((m - nu.length()) as u32);
            if coeff.is_zero() {
                continue;
            }
            let coag = coagulate_word(&self.omega, w, &nu)?;
            out.add_scaled(&self.e_elem_tensor(i, j, &coag)?, &coeff)?;
        }
        Ok(out)
    }

    /// `t_ij` extended linearly to tensors of positive degree.
    pub fn t_elem_tensor(&self, i: usize, j: usize, t: &TensorElement, s: &Scalar) -> Result<UElement> {
        let mut out = self.zero();
        for (w, c) in t {
            out.add_scaled(&self.t_elem(i, j, w, s)?, c)?;
        }
        Ok(out)
    }

    /// Checks `t_ij(w;N;s) = Σ_ν (s′−s)^{m−ℓ(ν)} t_ij(w∗ν;N;s′)` exactly.
    pub fn reparametrize_check(&self, i: usize, j: usize, w: &Word, s: &Scalar, s2: &Scalar) -> Result<bool> {
        let lhs = self.t_elem(i, j, w, s)?;
        let m = w.len();
        let base = s2 - s;
        let mut rhs = self.zero();
        for nu in compositions(m)? {
            let coeff = base.pow((m - nu.length()) as u32);
            if coeff.is_zero() {
                continue;
            }
            let coag = coagulate_word(&self.omega, w, &nu)?;
            rhs.add_scaled(&self.t_elem_tensor(i, j, &coag, s2)?, &coeff)?;
        }
        Ok(lhs == rhs)
    }

    /// The projection `π_{N,N-1}` of an `E_NN`-invariant element into
    /// `U(gl(N-1, Ω))`, represented by `target`.
    pub fn project_down(&self, u: &UElement, target: &UAlgebra) -> Result<UElement> {
        self.check(u)?;
        if self.n < 2 {
            return Err(Error::Precondition("projection needs N >= 2".into()));
        }
        if target.n + 1 != self.n || !Arc::ptr_eq(&self.omega, &target.omega) && *self.omega != *target.omega {
            return Err(Error::Structural(format!(
                "target {target:?} is not U(gl(N-1)) for {self:?}"
            )));
        }
        if u.weight() != Some(0) {
            return Err(Error::Precondition("element is not E_NN-invariant".into()));
        }
        let n = self.n;
        let mut out = target.zero();
        for (m, c) in &u.terms {
            if m.iter().any(|g| g.touches(n)) {
                // weight zero: a class-1 generator forces a class-2 one, which
                // sits rightmost, so the monomial lies in I⁺(N)
                let has_class2 = m.last().is_some_and(|g| g.class == 2);
                if !has_class2 {
                    return Err(Error::Structural(format!(
                        "weight-zero monomial {m:?} involves index N but has no E_kN factor"
                    )));
                }
                continue;
            }
            let regens: Vec<Gen> = m.iter().map(|g| target.gen_unchecked(g.i(), g.j(), g.b())).collect();
            out.add_scaled(&target.product_of(&regens), c)?;
        }
        Ok(out)
    }

    /// All PBW monomials of degree at most `deg`, in increasing degree.
    pub fn pbw_monomials(&self, deg: usize) -> Result<Vec<Monomial>> {
        self.pbw_monomials_filtered(deg, |_| true)
    }

    fn pbw_monomials_filtered(&self, deg: usize, keep: impl Fn(&[Gen]) -> bool) -> Result<Vec<Monomial>> {
        let gens = self.generators();
        let mut out = vec![Vec::new()];
        let mut layer: Vec<(Monomial, usize)> = vec![(Vec::new(), 0)];
        for _ in 0..deg {
            let mut next = Vec::new();
            for (m, start) in &layer {
                for (idx, g) in gens.iter().enumerate().skip(*start) {
                    let mut v = m.clone();
                    v.push(*g);
                    next.push((v, idx));
                }
            }
            if out.len() + next.len() > self.limits.max_basis * 8 {
                return Err(Error::SizeLimit(format!(
                    "PBW basis of degree <= {deg} in gl({}, dim {}) exceeds the enumeration cap",
                    self.n,
                    self.omega.dim()
                )));
            }
            out.extend(next.iter().map(|(m, _)| m.clone()).filter(|m| keep(m)));
            layer = next;
        }
        if out.len() > self.limits.max_basis {
            return Err(Error::SizeLimit(format!(
                "{} basis monomials exceed cap {}",
                out.len(),
                self.limits.max_basis
            )));
        }
        Ok(out)
    }

    /// Basis of the `gl_d(N, C)`-invariants of filtration degree `<= deg`.
    pub fn invariant_basis(&self, d: usize, deg: usize) -> Result<Vec<UElement>> {
        if d > self.n {
            return Err(Error::InvalidArgument(format!("d = {d} exceeds N = {}", self.n)));
        }
        let n = self.n;
        // invariance under the diagonal E_aa (a > d) is a weight condition
        let basis = self.pbw_monomials_filtered(deg, |m| {
            (d + 1..=n).all(|a| m.iter().map(|g| g.weight_at(a)).sum::<i64>() == 0)
        })?;
        // the off-diagonal simple root vectors generate the rest
        let mut ops = Vec::new();
        for a in d + 1..n {
            ops.push((a, a + 1));
            ops.push((a + 1, a));
        }
        let images = basis.iter().map(|m| {
            let mut img = LinComb::new();
            for (k, &(i, j)) in ops.iter().enumerate() {
                for (mono, c) in self.ad_e_monomial(i, j, m) {
                    img.add_term((k, mono), c);
                }
            }
            img
        });
        let kernel = linalg::kernel(images);
        Ok(kernel
            .into_iter()
            .map(|comb| {
                let mut terms = LinComb::new();
                for (&idx, c) in &comb {
                    terms.add_term(basis[idx].clone(), c.clone());
                }
                self.element(terms)
            })
            .collect())
    }

    /// Dimension of the `gl_d(N, C)`-invariants of filtration degree `<= deg`.
    pub fn invariant_dim(&self, d: usize, deg: usize) -> Result<usize> {
        Ok(self.invariant_basis(d, deg)?.len())
    }

    /// Compares `U^{E_NN} ∩ I⁺(N)` with `U^{E_NN} ∩ I⁻(N)` inside filtration
    /// degree `<= maxdeg`, and checks the intersection is stable under
    /// multiplication by weight-zero monomials on both sides.
    pub fn ideal_intersection_check(&self, maxdeg: usize) -> Result<IdealReport> {
        let n = self.n;
        if maxdeg == 0 {
            return Ok(IdealReport {
                plus_dim: 0,
                minus_dim: 0,
                equal: true,
                two_sided: true,
            });
        }
        let lower = self.pbw_monomials(maxdeg - 1)?;
        let weight = |m: &[Gen]| m.iter().map(|g| g.weight_at(n)).sum::<i64>();
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for m in &lower {
            let wm = weight(m);
            for k in 1..=n {
                for b in 0..self.omega.dim() {
                    let right = self.gen_unchecked(k, n, b);
                    if wm + right.weight_at(n) == 0 {
                        plus.push(self.mul_mono_gen(m, right));
                    }
                    let left = self.gen_unchecked(n, k, b);
                    if wm + left.weight_at(n) == 0 {
                        let mut acc = LinComb::basis(vec![left]);
                        for &g in m {
                            acc = self.mul_terms_gen(&acc, g);
                        }
                        minus.push(acc);
                    }
                }
            }
        }
        let mut ep = Echelon::new();
        for v in &plus {
            ep.insert(v.clone());
        }
        let mut em = Echelon::new();
        for v in &minus {
            em.insert(v.clone());
        }
        let equal = ep.rank() == em.rank() && minus.iter().all(|v| ep.contains(v));
        let mut two_sided = true;
        if equal {
            let zero_weight: Vec<Monomial> = self
                .pbw_monomials(maxdeg - 1)?
                .into_iter()
                .filter(|m| !m.is_empty() && weight(m) == 0)
                .collect();
            let basis: Vec<LinComb<Monomial>> = ep.basis().cloned().collect();
            'outer: for v in &basis {
                let dv = v.keys().map(|m| m.len()).max().unwrap_or(0);
                for a in zero_weight.iter().filter(|a| a.len() + dv <= maxdeg) {
                    let ae = self.element(LinComb::basis(a.clone()));
                    let ve = self.element(v.clone());
                    let left = self.multiply(&ae, &ve)?;
                    let right = self.multiply(&ve, &ae)?;
                    if !ep.contains(&left.terms) || !ep.contains(&right.terms) {
                        two_sided = false;
                        break 'outer;
                    }
                }
            }
        }
        Ok(IdealReport {
            plus_dim: ep.rank(),
            minus_dim: em.rank(),
            equal,
            two_sided,
        })
    }
}

/// Outcome of [`UAlgebra::ideal_intersection_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IdealReport {
    pub plus_dim: usize,
    pub minus_dim: usize,
    pub equal: bool,
    pub two_sided: bool,
}

impl IdealReport {
    pub fn passed(&self) -> bool {
        self.equal && self.two_sided
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::builtin;

    fn ua(name: &str, n: usize) -> UAlgebra {
        UAlgebra::new(builtin(name).unwrap(), n).unwrap()
    }

    fn mono(u: &UAlgebra, gens: &[(usize, usize, usize)]) -> Monomial {
        gens.iter().map(|&(i, j, b)| u.gen(i, j, b).unwrap()).collect()
    }

    type Term<'a> = (i64, &'a [(usize, usize, usize)]);

    fn elem(u: &UAlgebra, terms: &[Term]) -> UElement {
        let mut t = LinComb::new();
        for (c, gens) in terms {
            t.add_term(mono(u, gens), Scalar::from(*c));
        }
        u.element(t)
    }

    #[test]
    fn generator_order() {
        let u = ua("C", 2);
        let e11 = u.gen(1, 1, 0).unwrap();
        let e21 = u.gen(2, 1, 0).unwrap();
        let e12 = u.gen(1, 2, 0).unwrap();
        let e22 = u.gen(2, 2, 0).unwrap();
        assert!(e11 < e21 && e21 < e12 && e12 < e22);
    }

    #[test]
    fn single_swap_with_commutator() {
        let u = ua("C", 2);
        let nf = u.normal_form(&mono(&u, &[(1, 2, 0), (2, 1, 0)])).unwrap();
        let expect = elem(
            &u,
            &[(1, &[(2, 1, 0), (1, 2, 0)]), (1, &[(1, 1, 0)]), (-1, &[(2, 2, 0)])],
        );
        assert_eq!(nf, expect);
        assert_eq!(u.product_of(&mono(&u, &[(1, 2, 0), (2, 1, 0)])), expect);
    }

    #[test]
    fn sorted_input_is_fixed() {
        let u = ua("C", 3);
        let m = mono(&u, &[(1, 1, 0), (2, 1, 0), (1, 3, 0)]);
        assert_eq!(u.normal_form(&m).unwrap(), u.element(LinComb::basis(m)));
    }

    #[test]
    fn vanishing_omega_products() {
        let u = ua("direct_sum_C(2)", 2);
        let nf = u.normal_form(&mono(&u, &[(1, 2, 0), (2, 1, 1)])).unwrap();
        assert_eq!(nf, elem(&u, &[(1, &[(2, 1, 1), (1, 2, 0)])]));
    }

    #[test]
    fn multiply_examples() {
        let u = ua("C", 2);
        let e12 = u.generator(1, 2, 0).unwrap();
        let e21 = u.generator(2, 1, 0).unwrap();
        let e11 = u.generator(1, 1, 0).unwrap();
        assert_eq!(u.multiply(&e12, &u.one()).unwrap(), e12);
        assert_eq!(
            u.multiply(&e11, &e11).unwrap(),
            elem(&u, &[(1, &[(1, 1, 0), (1, 1, 0)])])
        );
        let p = u.multiply(&e12, &e21).unwrap();
        assert_eq!(
            p,
            elem(
                &u,
                &[(1, &[(2, 1, 0), (1, 2, 0)]), (1, &[(1, 1, 0)]), (-1, &[(2, 2, 0)])]
            )
        );
        let other = ua("C", 3);
        assert!(matches!(other.multiply(&e12, &e21), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn adjoint_action() {
        let u = ua("C", 2);
        let e12 = u.generator(1, 2, 0).unwrap();
        assert_eq!(u.ad_e(1, 1, &e12).unwrap(), e12);
        let e11 = u.generator(1, 1, 0).unwrap();
        assert!(u.ad_e(2, 2, &e11).unwrap().is_zero());
        let e21 = u.generator(2, 1, 0).unwrap();
        assert_eq!(
            u.ad_e(1, 2, &e21).unwrap(),
            elem(&u, &[(1, &[(1, 1, 0)]), (-1, &[(2, 2, 0)])])
        );
        assert!(u.ad_e(3, 1, &e21).is_err());
    }

    #[test]
    fn centralizer_membership() {
        let u = ua("C", 2);
        assert!(u.is_in_centralizer(&u.one(), 0).unwrap());
        assert!(u.is_in_centralizer(&u.generator(1, 1, 0).unwrap(), 1).unwrap());
        assert!(!u.is_in_centralizer(&u.generator(1, 2, 0).unwrap(), 1).unwrap());
        assert!(u.is_in_centralizer(&u.one(), 3).is_err());
    }

    #[test]
    fn e_elements() {
        let u = ua("C", 2);
        assert_eq!(u.e_elem(1, 1, &Word(vec![0])).unwrap(), u.generator(1, 1, 0).unwrap());
        let e = u.e_elem(1, 1, &Word(vec![0, 0])).unwrap();
        let expect = elem(
            &u,
            &[
                (1, &[(1, 1, 0), (1, 1, 0)]),
                (1, &[(2, 1, 0), (1, 2, 0)]),
                (1, &[(1, 1, 0)]),
                (-1, &[(2, 2, 0)]),
            ],
        );
        assert_eq!(e, expect);
        assert!(u.e_elem(3, 1, &Word(vec![0])).is_err());
        assert!(u.e_elem(1, 1, &Word::empty()).is_err());
    }

    #[test]
    fn e_summand_count() {
        // over a null algebra no reordering term survives, so all N^{m-1}
        // products stay distinct PBW monomials (up to sorting collisions)
        let u = ua("null(1)", 3);
        let e = u.e_elem(1, 1, &Word(vec![0, 0, 0])).unwrap();
        let total: Scalar = e.terms().iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, Scalar::from(9));
    }

    #[test]
    fn t_element_anchor() {
        let u = ua("C", 2);
        let s = Scalar::new(5, 2).unwrap();
        let t = u.t_elem(1, 1, &Word(vec![0, 0]), &s).unwrap();
        let mut expect = elem(
            &u,
            &[
                (1, &[(1, 1, 0), (1, 1, 0)]),
                (1, &[(2, 1, 0), (1, 2, 0)]),
                (1, &[(1, 1, 0)]),
                (-1, &[(2, 2, 0)]),
            ],
        );
        expect
            .add_scaled(&u.generator(1, 1, 0).unwrap(), &-(&Scalar::from(2) + &s))
            .unwrap();
        assert_eq!(t, expect);
        // s = -N reduces to e
        let t = u.t_elem(1, 1, &Word(vec![0, 0]), &Scalar::from(-2)).unwrap();
        assert_eq!(t, u.e_elem(1, 1, &Word(vec![0, 0])).unwrap());
    }

    #[test]
    fn weights() {
        let u = ua("C", 3);
        assert_eq!(u.generator(1, 3, 0).unwrap().weight(), Some(-1));
        assert_eq!(u.generator(3, 1, 0).unwrap().weight(), Some(1));
        let m = u
            .multiply(&u.generator(1, 1, 0).unwrap(), &u.generator(2, 2, 0).unwrap())
            .unwrap();
        assert_eq!(m.weight(), Some(0));
        let mixed = u
            .generator(1, 3, 0)
            .unwrap()
            .add(&u.generator(3, 1, 0).unwrap())
            .unwrap();
        assert_eq!(mixed.weight(), None);
    }

    #[test]
    fn projection_examples() {
        let u2 = ua("C", 2);
        let u1 = UAlgebra::new(u2.omega().clone(), 1).unwrap();
        let s = Scalar::from(1);
        let t2 = u2.t_elem(1, 1, &Word(vec![0, 0]), &s).unwrap();
        let p = u2.project_down(&t2, &u1).unwrap();
        assert_eq!(p, u1.t_elem(1, 1, &Word(vec![0, 0]), &s).unwrap());
        let mut expect = u1
            .multiply(&u1.generator(1, 1, 0).unwrap(), &u1.generator(1, 1, 0).unwrap())
            .unwrap();
        expect
            .add_scaled(&u1.generator(1, 1, 0).unwrap(), &Scalar::from(-2))
            .unwrap();
        assert_eq!(p, expect);

        let e12 = u2.generator(1, 2, 0).unwrap();
        assert!(matches!(u2.project_down(&e12, &u1), Err(Error::Precondition(_))));

        let m2 = UAlgebra::new(builtin("matrix(2)").unwrap(), 2).unwrap();
        let m1 = UAlgebra::new(m2.omega().clone(), 1).unwrap();
        let x = m2.omega().index_of("E12").unwrap();
        let y = m2.omega().index_of("E21").unwrap();
        let prod = m2
            .multiply(&m2.generator(1, 2, x).unwrap(), &m2.generator(2, 1, y).unwrap())
            .unwrap();
        // E12(x)E21(y) -> E11(xy) with xy = E11 in Mat(2)
        let xy = m2.omega().index_of("E11").unwrap();
        assert_eq!(m2.project_down(&prod, &m1).unwrap(), m1.generator(1, 1, xy).unwrap());
    }

    #[test]
    fn reparametrization_examples() {
        let u = ua("C", 2);
        let w = Word(vec![0, 0]);
        assert!(u
            .reparametrize_check(1, 1, &w, &Scalar::zero(), &Scalar::one())
            .unwrap());
        assert!(u
            .reparametrize_check(1, 2, &w, &Scalar::from(3), &Scalar::from(3))
            .unwrap());
        let v = ua("direct_sum_C(2)", 3);
        let w = Word(vec![0, 1]);
        assert!(v
            .reparametrize_check(2, 1, &w, &Scalar::from(-1), &Scalar::new(5, 2).unwrap())
            .unwrap());
    }

    #[test]
    fn ideal_intersections() {
        assert!(ua("C", 2).ideal_intersection_check(2).unwrap().passed());
        assert!(ua("direct_sum_C(2)", 2).ideal_intersection_check(2).unwrap().passed());
        let r = ua("C", 2).ideal_intersection_check(0).unwrap();
        assert!(r.passed() && r.plus_dim == 0);
    }

    #[test]
    fn invariant_dimensions() {
        let u = ua("C", 3);
        assert_eq!(u.invariant_dim(0, 0).unwrap(), 1);
        assert_eq!(u.invariant_dim(0, 1).unwrap(), 2);
        assert_eq!(u.invariant_dim(0, 2).unwrap(), 4);
        assert_eq!(u.invariant_dim(1, 1).unwrap(), 3);
        let v = ua("C", 2);
        let full = v.pbw_monomials(2).unwrap().len();
        assert_eq!(v.invariant_dim(2, 2).unwrap(), full);
    }

    #[test]
    fn text_form() {
        let u = ua("C", 2);
        let t = u.e_elem(1, 1, &Word(vec![0, 0])).unwrap();
        let text = t.to_text(u.omega());
        assert!(text.contains("1 * E(1,1,u1)E(1,1,u1)"));
        assert!(text.contains("-1 * E(2,2,u1)"));
    }
}
