//! The graded algebra `𝔄(Ω)` of shifted tensors with the `⊙` product, the
//! current Lie algebra `gl(d, 𝔄(Ω))`, and the degeneration of `Y_d(Ω)` onto
//! its enveloping algebra.

use crate::double::Verdict;
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::linear::LinComb;
use crate::omega::AlgebraSpec;
use crate::scalar::Scalar;
use crate::words::{all_words, Word};
use crate::yangian::{YExpression, YangianContext};

/// An element of `𝔄(Ω)`; a word of length `n + 1` has grade `n`.
pub type AlElement = LinComb<Word>;

pub fn grade(w: &Word) -> Result<usize> {
    w.len()
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidArgument("𝔄(Ω) has no empty word".into()))
}

/// `x ⊙ y = x_1 ⊗ … ⊗ x_m ⊗ (x_{m+1} y_1) ⊗ y_2 ⊗ … ⊗ y_{n+1}`.
pub fn odot(alg: &AlgebraSpec, x: &Word, y: &Word) -> Result<AlElement> {
    grade(x)?;
    grade(y)?;
    let (xs, ys) = (x.letters(), y.letters());
    let (&last, head) = xs.split_last().expect("nonempty");
    let (&first, tail) = ys.split_first().expect("nonempty");
    let mut out = AlElement::new();
    for (&c, v) in alg.product(last, first) {
        let mut letters = head.to_vec();
        letters.push(c);
        letters.extend_from_slice(tail);
        out.add_term(Word(letters), v.clone());
    }
    Ok(out)
}

/// Bilinear extension of [`odot`].
pub fn odot_elem(alg: &AlgebraSpec, a: &AlElement, b: &AlElement) -> Result<AlElement> {
    let mut out = AlElement::new();
    for (x, cx) in a {
        for (y, cy) in b {
            out.add_scaled(&odot(alg, x, y)?, &(cx * cy));
        }
    }
    Ok(out)
}

/// An element `Σ c · E_ij ⊗ x` of `gl(d, 𝔄(Ω))`.
pub type GlCurrent = LinComb<(usize, usize, Word)>;

fn check_current(d: usize, a: &GlCurrent) -> Result<()> {
    for (i, j, w) in a.keys() {
        if *i == 0 || *j == 0 || *i > d || *j > d {
            return Err(Error::Structural(format!("E({i},{j}) is outside d = {d}")));
        }
        grade(w)?;
    }
    Ok(())
}

/// `[X ⊗ x, Y ⊗ y] = (XY) ⊗ (x ⊙ y) − (YX) ⊗ (y ⊙ x)` on matrix units.
pub fn gl_current_bracket(alg: &AlgebraSpec, d: usize, a: &GlCurrent, b: &GlCurrent) -> Result<GlCurrent> {
    check_current(d, a)?;
    check_current(d, b)?;
    let mut out = GlCurrent::new();
    for ((i, j, x), ca) in a {
        for ((k, l, y), cb) in b {
            let c = ca * cb;
            if j == k {
                for (w, v) in odot(alg, x, y)? {
                    out.add_term((*i, *l, w), &c * &v);
                }
            }
            if l == i {
                for (w, v) in odot(alg, y, x)? {
                    out.add_term((*k, *j, w), -(&c * &v));
                }
            }
        }
    }
    Ok(out)
}

/// Dimension of the grade-`n` component of `gl(d, 𝔄(Ω))`, or `None` when it
/// exceeds `u128`.
pub fn graded_dim(dim: usize, d: usize, n: usize) -> Option<u128> {
    let exp = u32::try_from(n).ok()?.checked_add(1)?;
    (d as u128)
        .checked_mul(d as u128)?
        .checked_mul((dim as u128).checked_pow(exp)?)
}

/// Basis of the grade-`n` component of `gl(d, 𝔄(Ω))`.
pub fn graded_basis(dim: usize, d: usize, n: usize) -> Vec<(usize, usize, Word)> {
    let words = all_words(dim, n + 1);
    let mut out = Vec::with_capacity(d * d * words.len());
    for i in 1..=d {
        for j in 1..=d {
            out.extend(words.iter().map(|w| (i, j, w.clone())));
        }
    }
    out
}

/// A path in the quiver with vertices `1..=L` and one edge `i → j` for every
/// ordered pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Path {
    Vertex(usize),
    Edges(Vec<(usize, usize)>),
}

impl Path {
    fn source(&self) -> usize {
        match self {
            Path::Vertex(v) => *v,
            Path::Edges(e) => e[0].0,
        }
    }

    fn target(&self) -> usize {
        match self {
            Path::Vertex(v) => *v,
            Path::Edges(e) => e[e.len() - 1].1,
        }
    }

    pub fn length(&self) -> usize {
        match self {
            Path::Vertex(_) => 0,
            Path::Edges(e) => e.len(),
        }
    }

    /// Concatenation `self` then `other`, zero unless the endpoints meet.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.target() != other.source() {
            return None;
        }
        Some(match (self, other) {
            (Path::Vertex(_), p) | (p, Path::Vertex(_)) => p.clone(),
            (Path::Edges(a), Path::Edges(b)) => Path::Edges(a.iter().chain(b).copied().collect()),
        })
    }
}

/// All paths with exactly `len` edges in the complete quiver on `l` vertices.
pub fn quiver_paths(l: usize, len: usize) -> Vec<Path> {
    if len == 0 {
        return (1..=l).map(Path::Vertex).collect();
    }
    let mut out: Vec<Vec<(usize, usize)>> = (1..=l).flat_map(|i| (1..=l).map(move |j| vec![(i, j)])).collect();
    for _ in 1..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                let end = p[p.len() - 1].1;
                (1..=l).map(move |j| {
                    let mut q = p.clone();
                    q.push((end, j));
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Path::Edges).collect()
}

/// The vertex path of a basis word of `𝔄(C^{⊕L})`.
pub fn word_to_path(w: &Word) -> Path {
    let v: Vec<usize> = w.letters().iter().map(|b| b + 1).collect();
    if v.len() == 1 {
        Path::Vertex(v[0])
    } else {
        Path::Edges(v.windows(2).map(|e| (e[0], e[1])).collect())
    }
}

/// Checks that basis words of `𝔄(C^{⊕L})` correspond bijectively to quiver
/// paths, grade by grade, and that `⊙` matches path composition up to
/// `max_grade`.
pub fn path_algebra_iso_check(l: usize, max_grade: usize) -> Result<bool> {
    if l == 0 {
        return Err(Error::InvalidArgument("L must be positive".into()));
    }
    let alg = crate::omega::Builtin::DirectSum(l).build()?;
    for n in 0..=max_grade {
        let words = all_words(l, n + 1);
        let mut images: Vec<Path> = words.iter().map(word_to_path).collect();
        images.sort();
        let mut paths = quiver_paths(l, n);
        paths.sort();
        if images != paths {
            return Ok(false);
        }
    }
    for gx in 0..=max_grade {
        for gy in 0..=max_grade - gx {
            for x in all_words(l, gx + 1) {
                for y in all_words(l, gy + 1) {
                    let prod = odot(&alg, &x, &y)?;
                    let expected = word_to_path(&x).compose(&word_to_path(&y));
                    let ok = match expected {
                        None => prod.is_zero(),
                        Some(p) => prod.len() == 1 && prod.iter().all(|(w, c)| c.is_one() && word_to_path(w) == p),
                    };
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Result of [`bimodule_iso_check`] for one grade.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BimoduleGrade {
    pub grade: usize,
    pub quotient_dim: usize,
    pub expected_dim: usize,
    pub image_rank: usize,
    pub relations_vanish: bool,
}

impl BimoduleGrade {
    pub fn passed(&self) -> bool {
        self.relations_vanish && self.quotient_dim == self.expected_dim && self.image_rank == self.expected_dim
    }
}

type MTensor = LinComb<Vec<usize>>;

/// `(x_1⊗y_1) ⊗ … ⊗ (x_n⊗y_n) ↦ x_1 ⊗ (y_1x_2) ⊗ … ⊗ y_n`, with
/// letters stored as `[x_1, y_1, …, x_n, y_n]`.
fn m_to_current(alg: &AlgebraSpec, letters: &[usize]) -> AlElement {
    let n = letters.len() / 2;
    let mut acc = AlElement::basis(Word(vec![letters[0], letters[1]]));
    for k in 1..n {
        let next = Word(vec![letters[2 * k], letters[2 * k + 1]]);
        let mut out = AlElement::new();
        for (w, c) in &acc {
            for (v, d) in odot(alg, w, &next).expect("nonempty words") {
                out.add_term(v, c * &d);
            }
        }
        acc = out;
    }
    acc
}

/// Compares the balanced tensor powers `M ⊗_Ω … ⊗_Ω M` of
/// `M = Ω ⊗ Ω` with the graded pieces of `𝔄(Ω)` for grades `1..=max_grade`.
pub fn bimodule_iso_check(alg: &AlgebraSpec, max_grade: usize) -> Result<Vec<BimoduleGrade>> {
    if alg.detect_unit().is_none() {
        return Err(Error::NotUnital);
    }
    let q = alg.dim();
    let mut out = Vec::new();
    for n in 1..=max_grade {
        let width = 2 * n;
        let total = q.pow(width as u32);
        if total > 100_000 {
            return Err(Error::SizeLimit(format!("(Ω⊗Ω)^{n} has dimension {total}")));
        }
        // balancing relations at each junction k:
        // (.. ⊗ y·a) ⊗ (z ⊗ ..) − (.. ⊗ y) ⊗ (a·z ⊗ ..)
        let mut relations = Vec::new();
        for k in 0..n.saturating_sub(1) {
            let (py, pz) = (2 * k + 1, 2 * k + 2);
            for base in all_words(q, width) {
                for a in 0..q {
                    let mut r = MTensor::new();
                    for (&c, v) in alg.product(base.0[py], a) {
                        let mut w = base.0.clone();
                        w[py] = c;
                        r.add_term(w, v.clone());
                    }
                    for (&c, v) in alg.product(a, base.0[pz]) {
                        let mut w = base.0.clone();
                        w[pz] = c;
                        r.add_term(w, -v);
                    }
                    if !r.is_zero() {
                        relations.push(r);
                    }
                }
            }
        }
        let rel_rank = {
            let mut ech = Echelon::new();
            for r in &relations {
                ech.insert(r.clone());
            }
            ech.rank()
        };
        let phi = |t: &MTensor| -> AlElement {
            let mut img = AlElement::new();
            for (letters, c) in t {
                img.add_scaled(&m_to_current(alg, letters), c);
            }
            img
        };
        let relations_vanish = relations.iter().all(|r| phi(r).is_zero());
        let image_rank = linalg::rank(all_words(q, width).into_iter().map(|w| m_to_current(alg, &w.0)));
        out.push(BimoduleGrade {
            grade: n,
            quotient_dim: total - rel_rank,
            expected_dim: q.pow(n as u32 + 1),
            image_rank,
            relations_vanish,
        });
    }
    Ok(out)
}

/// Whether `𝔄(Ω)` has a unit, tested as: Ω has a unit `e` and `e` acts as
/// the identity under `⊙` on all words of grade `<= max_grade`.
pub fn has_unit(alg: &AlgebraSpec, max_grade: usize) -> Result<bool> {
    let Some(e) = alg.detect_unit() else {
        return Ok(false);
    };
    let unit: AlElement = e.iter().map(|(&b, c)| (Word::letter(b), c.clone())).collect();
    for n in 0..=max_grade {
        for w in all_words(alg.dim(), n + 1) {
            let wl = AlElement::basis(w);
            if odot_elem(alg, &unit, &wl)? != wl || odot_elem(alg, &wl, &unit)? != wl {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A pair of words of grade `<= max_grade` with `x ⊙ y ≠ y ⊙ x`.
pub fn noncommutativity_witness(alg: &AlgebraSpec, max_grade: usize) -> Result<Option<(Word, Word)>> {
    let mut words = Vec::new();
    for n in 0..=max_grade {
        words.extend(all_words(alg.dim(), n + 1));
    }
    for x in &words {
        for y in &words {
            if odot(alg, x, y)? != odot(alg, y, x)? {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// Whether grade-0 words multiply by the table of Ω.
pub fn grade_zero_matches(alg: &AlgebraSpec) -> Result<bool> {
    for a in 0..alg.dim() {
        for b in 0..alg.dim() {
            let expect: AlElement = alg
                .product(a, b)
                .iter()
                .map(|(&c, v)| (Word::letter(c), v.clone()))
                .collect();
            if odot(alg, &Word::letter(a), &Word::letter(b))? != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that `[t_ij(x;s), t_kl(y;s)] − (δ_kj t_il(x⊙y;s) − δ_il t_kj(y⊙x;s))`
/// has shifted degree `<= ℓ(x)+ℓ(y)−3`, where `t(w)` has shifted degree
/// `ℓ(w) − 1`, by expanding it in ordered monomials at `N` and `N + 1`.
pub fn degeneration_check(
    ctx: &YangianContext,
    (i, j, k, l): (usize, usize, usize, usize),
    x: &Word,
    y: &Word,
    s: &Scalar,
    n: usize,
) -> Result<Verdict> {
    let d = ctx.d();
    let alg = ctx.omega().clone();
    let len = x.len() + y.len();
    if n < d + len {
        return Err(Error::Precondition(format!(
            "degeneration check needs N >= {}, got {n}",
            d + len
        )));
    }
    let g = ctx.tgen(i, j, x.clone(), s.clone())?;
    let h = ctx.tgen(k, l, y.clone(), s.clone())?;
    let mut expected = YExpression::zero();
    if k == j {
        for (w, c) in odot(&alg, x, y)? {
            expected = expected.add(&YExpression::gen(ctx.tgen(i, l, w, s.clone())?).scale(&c));
        }
    }
    if i == l {
        for (w, c) in odot(&alg, y, x)? {
            expected = expected.sub(&YExpression::gen(ctx.tgen(k, j, w, s.clone())?).scale(&c));
        }
    }
    let mut weight = vec![0i64; d];
    weight[i - 1] += 1;
    weight[j - 1] -= 1;
    weight[k - 1] += 1;
    weight[l - 1] -= 1;
    let bound = len as i64 - 3;
    let mut expansions = Vec::new();
    for n in [n, n + 1] {
        let u = ctx.algebra(n)?;
        let comm = u.commutator(&u.t_elem(i, j, g.word(), s)?, &u.t_elem(k, l, h.word(), s)?)?;
        let rem = comm.sub(&ctx.evaluate(&expected, n)?)?;
        let Some(expansion) = ctx.expand(&rem, s, len - 1, Some(weight.clone()))? else {
            return Ok(Verdict::NotStabilized);
        };
        let within = expansion
            .terms()
            .keys()
            .all(|m| m.factors().iter().map(|t| t.len() as i64 - 1).sum::<i64>() <= bound);
        expansions.push((within, expansion));
    }
    let (a, b) = (&expansions[0], &expansions[1]);
    Ok(match (a.0, b.0) {
        (true, true) if a.1 == b.1 => Verdict::Match,
        (false, false) if a.1 == b.1 => Verdict::Mismatch,
        _ => Verdict::NotStabilized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::builtin;

    fn w(v: &[usize]) -> Word {
        Word(v.to_vec())
    }

    #[test]
    fn odot_examples() {
        let m = builtin("matrix(2)").unwrap();
        // (E11, E12) ⊙ (E21) = (E11, E12·E21) = (E11, E11)
        assert_eq!(odot(&m, &w(&[0, 1]), &w(&[2])).unwrap(), AlElement::basis(w(&[0, 0])));
        let c = builtin("C").unwrap();
        for r in 0..3 {
            for q in 0..3 {
                let p = odot(&c, &Word(vec![0; r + 1]), &Word(vec![0; q + 1])).unwrap();
                assert_eq!(p, AlElement::basis(Word(vec![0; r + q + 1])));
            }
        }
        let z = builtin("null(1)").unwrap();
        assert!(odot(&z, &w(&[0]), &w(&[0])).unwrap().is_zero());
        assert!(odot(&c, &Word::empty(), &w(&[0])).is_err());
    }

    #[test]
    fn bracket_examples() {
        let c = builtin("C").unwrap();
        let x = GlCurrent::basis((1, 1, w(&[0, 0])));
        assert!(gl_current_bracket(&c, 2, &x, &x).unwrap().is_zero());
        let a = GlCurrent::basis((1, 2, w(&[0])));
        let b = GlCurrent::basis((2, 1, w(&[0, 0])));
        let mut expect = GlCurrent::new();
        expect.add_term((1, 1, w(&[0, 0])), Scalar::one());
        expect.add_term((2, 2, w(&[0, 0])), -Scalar::one());
        assert_eq!(gl_current_bracket(&c, 2, &a, &b).unwrap(), expect);
        assert!(gl_current_bracket(&c, 1, &a, &b).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(graded_dim(1, 1, 5), Some(1));
        assert_eq!(graded_dim(3, 2, 1), Some(36));
        assert_eq!(graded_dim(1000, 1000, 40), None);
        assert_eq!(graded_basis(3, 2, 1).len(), 36);
    }

    #[test]
    fn path_algebra() {
        assert!(path_algebra_iso_check(1, 3).unwrap());
        assert!(path_algebra_iso_check(2, 2).unwrap());
        assert_eq!(quiver_paths(2, 2).len(), 8);
        let c2 = builtin("direct_sum_C(2)").unwrap();
        assert!(odot(&c2, &w(&[0, 1]), &w(&[0, 1])).unwrap().is_zero());
    }

    #[test]
    fn bimodule_examples() {
        for (name, g) in [("C", 3), ("direct_sum_C(2)", 2), ("matrix(2)", 2)] {
            let a = builtin(name).unwrap();
            for r in bimodule_iso_check(&a, g).unwrap() {
                assert!(r.passed(), "{name}: {r:?}");
            }
        }
        let r = bimodule_iso_check(&builtin("direct_sum_C(2)").unwrap(), 1).unwrap();
        assert_eq!(r[0].quotient_dim, 4);
        assert!(matches!(
            bimodule_iso_check(&builtin("null(2)").unwrap(), 1),
            Err(Error::NotUnital)
        ));
    }

    #[test]
    fn remarks() {
        let c2 = builtin("direct_sum_C(2)").unwrap();
        assert!(has_unit(&c2, 2).unwrap());
        assert!(!has_unit(&builtin("null(2)").unwrap(), 2).unwrap());
        assert!(noncommutativity_witness(&c2, 1).unwrap().is_some());
        assert!(noncommutativity_witness(&builtin("C").unwrap(), 2).unwrap().is_none());
        assert!(noncommutativity_witness(&builtin("null(2)").unwrap(), 2)
            .unwrap()
            .is_none());
        assert!(grade_zero_matches(&builtin("matrix(2)").unwrap()).unwrap());
    }

    #[test]
    fn degeneration_examples() {
        let s = Scalar::zero();
        let c1 = YangianContext::new(builtin("C").unwrap(), 1);
        assert_eq!(
            degeneration_check(&c1, (1, 1, 1, 1), &w(&[0]), &w(&[0]), &s, 3).unwrap(),
            Verdict::Match
        );
        let c = YangianContext::new(builtin("C").unwrap(), 2);
        assert_eq!(
            degeneration_check(&c, (1, 2, 2, 1), &w(&[0]), &w(&[0]), &s, 4).unwrap(),
            Verdict::Match
        );
        assert_eq!(
            degeneration_check(&c, (1, 2, 2, 1), &w(&[0, 0]), &w(&[0]), &s, 5).unwrap(),
            Verdict::Match
        );
        let c2 = YangianContext::new(builtin("direct_sum_C(2)").unwrap(), 2);
        assert_eq!(
            degeneration_check(&c2, (1, 2, 2, 1), &w(&[0]), &w(&[1]), &s, 4).unwrap(),
            Verdict::Match
        );
        assert!(degeneration_check(&c2, (1, 2, 2, 1), &w(&[0]), &w(&[1]), &s, 3).is_err());
    }
}
