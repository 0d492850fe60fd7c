//! Words over the basis of Ω, the free algebra `T(Ω)`, compositions,
//! coagulation and cyclic coinvariants.

use std::fmt;

use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::omega::{AlgebraSpec, BasisVec, OmegaElement};
use crate::scalar::Scalar;

/// A word `x_{b_1} ⊗ ... ⊗ x_{b_m}` in basis letters; the empty word is the
/// unit of `T(Ω)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(b: usize) -> Self {
        Word(vec![b])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Sub-word on the half-open letter range.
    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn check(&self, alg: &AlgebraSpec) -> Result<()> {
        match self.0.iter().find(|&&b| b >= alg.dim()) {
            Some(b) => Err(Error::IndexOutOfRange(format!("letter {b} >= dim {}", alg.dim()))),
            None => Ok(()),
        }
    }

    /// Renders the word with the algebra's basis labels.
    pub fn display<'a>(&'a self, alg: &'a AlgebraSpec) -> impl fmt::Display + 'a {
        WordDisplay { word: self, alg }
    }

    pub fn labels(&self, alg: &AlgebraSpec) -> Vec<String> {
        self.0.iter().map(|&b| alg.label(b).to_string()).collect()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    alg: &'a AlgebraSpec,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<&str> = self.word.0.iter().map(|&b| self.alg.label(b)).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All words of length `m` over `dim` letters, lexicographically.
pub fn all_words(dim: usize, m: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(out.len() * dim);
        for w in &out {
            for b in 0..dim {
                let mut v = w.0.clone();
                v.push(b);
                next.push(Word(v));
            }
        }
        out = next;
    }
    out
}

/// All words of length `1..=max_len`, shorter first.
pub fn words_up_to(dim: usize, max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|m| all_words(dim, m)).collect()
}

/// Elements of `T(Ω)`.
pub type TensorElement = LinComb<Word>;

/// Free-algebra product: bilinear concatenation.
pub fn concat(a: &TensorElement, b: &TensorElement) -> TensorElement {
    let mut out = TensorElement::new();
    for (u, cu) in a {
        for (v, cv) in b {
            out.add_term(u.concat(v), cu * cv);
        }
    }
    out
}

/// An ordered tuple of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    /// `(1, ..., 1)` with `m` parts.
    pub fn ones(m: usize) -> Self {
        Composition(vec![1; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|ν|`
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(ν)`
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Half-open letter ranges of the blocks.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().scan(0usize, |start, &p| {
            let r = (*start, *start + p);
            *start += p;
            Some(r)
        })
    }
}

/// All compositions of `m`, lexicographic in the part sequence.
pub fn compositions(m: usize) -> Result<Vec<Composition>> {
    if m == 0 {
        return Err(Error::InvalidArgument("compositions require m >= 1".into()));
    }
    fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in 1..=rest {
            prefix.push(p);
            rec(rest - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << (m - 1));
    rec(m, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Coagulation `x ↦ x∗ν` on a tuple of algebra elements.
pub fn coagulate(x: &[OmegaElement], nu: &Composition) -> Result<Vec<OmegaElement>> {
    if nu.size() != x.len() {
        return Err(Error::LengthMismatch {
            expected: nu.size(),
            actual: x.len(),
        });
    }
    nu.blocks()
        .map(|(a, b)| {
            let mut acc = x[a].clone();
            for e in &x[a + 1..b] {
                acc = acc.multiply(e)?;
            }
            Ok(acc)
        })
        .collect()
}

/// Product `x_{w_a} x_{w_{a+1}} ... x_{w_{b-1}}` (left-nested) as a basis vector.
pub fn block_product(alg: &AlgebraSpec, letters: &[usize]) -> BasisVec {
    let mut acc = BasisVec::basis(letters[0]);
    for &l in &letters[1..] {
        acc = alg.mul_vec(&acc, &BasisVec::basis(l));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Tensor product of basis vectors, expanded into words.
pub fn expand_tensor(factors: &[BasisVec]) -> TensorElement {
    let mut out = TensorElement::basis(Word::empty());
    for f in factors {
        let mut next = TensorElement::new();
        for (w, c) in &out {
            for (&b, cb) in f {
                let mut v = w.0.clone();
                v.push(b);
                next.add_term(Word(v), c * cb);
            }
        }
        out = next;
        if out.is_zero() {
            break;
        }
    }
    out
}

/// Coagulation of a basis word, expanded multilinearly into basis words.
pub fn coagulate_word(alg: &AlgebraSpec, w: &Word, nu: &Composition) -> Result<TensorElement> {
    if nu.size() != w.len() {
        return Err(Error::LengthMismatch {
            expected: nu.size(),
            actual: w.len(),
        });
    }
    w.check(alg)?;
    let factors: Vec<BasisVec> = nu.blocks().map(|(a, b)| block_product(alg, &w.0[a..b])).collect();
    Ok(expand_tensor(&factors))
}

/// A rotation class of nonempty words, stored as its least rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CyclicWord(Word);

impl CyclicWord {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Least rotation of a nonempty word.
pub fn cyclic_canonical(w: &Word) -> Result<CyclicWord> {
    if w.is_empty() {
        return Err(Error::InvalidArgument("the empty word has no cyclic class".into()));
    }
    let m = w.len();
    let best = (0..m)
        .map(|r| {
            let mut v = Vec::with_capacity(m);
            v.extend_from_slice(&w.0[r..]);
            v.extend_from_slice(&w.0[..r]);
            v
        })
        .min()
        .expect("nonempty");
    Ok(CyclicWord(Word(best)))
}

/// Image of a tensor in the cyclic coinvariants `Tc⁺(Ω)`.
pub fn project_cyclic(t: &TensorElement) -> Result<LinComb<CyclicWord>> {
    let mut out = LinComb::new();
    for (w, c) in t {
        out.add_term(cyclic_canonical(w)?, c.clone());
    }
    Ok(out)
}

/// Number of rotation classes of words of length `m` over `q` letters.
pub fn necklace_count(q: u64, m: u32) -> u64 {
    fn phi(mut n: u64) -> u64 {
        let mut result = n;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                while n.is_multiple_of(p) {
                    n /= p;
                }
                result -= result / p;
            }
            p += 1;
        }
        if n > 1 {
            result -= result / n;
        }
        result
    }
    let m64 = m as u64;
    let total: u64 = (1..=m64)
        .filter(|d| m64.is_multiple_of(*d))
        .map(|d| phi(d) * q.pow((m64 / d) as u32))
        .sum();
    total / m64
}

/// Scalar multiple of a single word.
pub fn word_term(w: Word, c: Scalar) -> TensorElement {
    TensorElement::single(w, c)
}
