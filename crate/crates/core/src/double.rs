//! The linear double Poisson bracket on `T(Ω)`, its axioms, and the Poisson
//! brackets it induces on `S(M_d(Ω))` and `S(Tc⁺(Ω))`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::omega::{AlgebraSpec, Associativity, BasisVec, Builtin};
use crate::scalar::Scalar;
use crate::ugl::UElement;
use crate::words::{cyclic_canonical, project_cyclic, words_up_to, CyclicWord, TensorElement, Word};
use crate::yangian::YangianContext;

/// An element of `T(Ω) ⊠ T(Ω)`.
pub type DoubleTensor = LinComb<(Word, Word)>;

/// An element of `T(Ω)^{⊠3}`.
pub type TripleTensor = LinComb<(Word, Word, Word)>;

fn join(parts: &[&[usize]]) -> Vec<usize> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// `⟨⟨x, y⟩⟩` on basis words; zero when either word is empty.
pub fn double_bracket(alg: &AlgebraSpec, x: &Word, y: &Word) -> DoubleTensor {
    let mut out = DoubleTensor::new();
    let (xs, ys) = (x.letters(), y.letters());
    for r in 0..xs.len() {
        for s in 0..ys.len() {
            let (xl, xr) = (&xs[..r], &xs[r + 1..]);
            let (yl, yr) = (&ys[..s], &ys[s + 1..]);
            let left = Word(join(&[yl, xr]));
            for (&c, v) in alg.product(xs[r], ys[s]) {
                out.add_term((left.clone(), Word(join(&[xl, &[c], yr]))), v.clone());
            }
            let right = Word(join(&[xl, yr]));
            for (&c, v) in alg.product(ys[s], xs[r]) {
                out.add_term((Word(join(&[yl, &[c], xr])), right.clone()), -v);
            }
        }
    }
    out
}

/// Bilinear extension of [`double_bracket`].
pub fn double_bracket_tensor(alg: &AlgebraSpec, a: &TensorElement, b: &TensorElement) -> DoubleTensor {
    let mut out = DoubleTensor::new();
    for (x, cx) in a {
        for (y, cy) in b {
            out.add_scaled(&double_bracket(alg, x, y), &(cx * cy));
        }
    }
    out
}

/// Exchanges the two tensor slots.
pub fn flip(t: &DoubleTensor) -> DoubleTensor {
    t.iter()
        .map(|((u, v), c)| ((v.clone(), u.clone()), c.clone()))
        .collect()
}

/// Outer bimodule action `b ∘ (u ⊠ v) ∘ c = (b u) ⊠ (v c)`.
fn outer(b: &Word, t: &DoubleTensor, c: &Word) -> DoubleTensor {
    t.iter()
        .map(|((u, v), k)| ((b.concat(u), v.concat(c)), k.clone()))
        .collect()
}

/// Inner bimodule action `b ⋆ (u ⊠ v) ⋆ c = (u c) ⊠ (b v)`.
fn inner(b: &Word, t: &DoubleTensor, c: &Word) -> DoubleTensor {
    t.iter()
        .map(|((u, v), k)| ((u.concat(c), b.concat(v)), k.clone()))
        .collect()
}

/// `⟨⟨a, b⟩⟩ = −flip ⟨⟨b, a⟩⟩` on all word pairs of length `<= max_len`.
pub fn check_skew(alg: &AlgebraSpec, max_len: usize) -> Option<(Word, Word)> {
    let words = all_words_with_unit(alg.dim(), max_len);
    for x in &words {
        for y in &words {
            let lhs = double_bracket(alg, x, y);
            let rhs = -&flip(&double_bracket(alg, y, x));
            if lhs != rhs {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

/// Both Leibniz rules on all word triples of length `<= max_len`:
/// `⟨⟨a, bc⟩⟩ = ⟨⟨a,b⟩⟩ ∘ c + b ∘ ⟨⟨a,c⟩⟩` and
/// `⟨⟨ab, c⟩⟩ = ⟨⟨a,c⟩⟩ ⋆ b + a ⋆ ⟨⟨b,c⟩⟩`.
pub fn check_leibniz(alg: &AlgebraSpec, max_len: usize) -> Option<(Word, Word, Word)> {
    let words = all_words_with_unit(alg.dim(), max_len);
    let one = Word::empty();
    for a in &words {
        for b in &words {
            for c in &words {
                let lhs = double_bracket(alg, a, &b.concat(c));
                let rhs = &outer(&one, &double_bracket(alg, a, b), c) + &outer(b, &double_bracket(alg, a, c), &one);
                if lhs != rhs {
                    return Some((a.clone(), b.clone(), c.clone()));
                }
                let lhs = double_bracket(alg, &a.concat(b), c);
                let rhs = &inner(&one, &double_bracket(alg, a, c), b) + &inner(a, &double_bracket(alg, b, c), &one);
                if lhs != rhs {
                    return Some((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    None
}

/// `⟨⟨a, u ⊠ v⟩⟩_L = ⟨⟨a, u⟩⟩ ⊠ v`.
fn bracket_left(alg: &AlgebraSpec, a: &Word, t: &DoubleTensor) -> TripleTensor {
    let mut out = TripleTensor::new();
    for ((u, v), c) in t {
        for ((p, q), k) in &double_bracket(alg, a, u) {
            out.add_term((p.clone(), q.clone(), v.clone()), c * k);
        }
    }
    out
}

/// `τ(a₁ ⊠ a₂ ⊠ a₃) = a₃ ⊠ a₁ ⊠ a₂`.
fn rotate(t: &TripleTensor) -> TripleTensor {
    t.iter()
        .map(|((a, b, c), k)| ((c.clone(), a.clone(), b.clone()), k.clone()))
        .collect()
}

/// The double Jacobi sum
/// `⟨⟨a,⟨⟨b,c⟩⟩⟩⟩_L + τ⟨⟨b,⟨⟨c,a⟩⟩⟩⟩_L + τ²⟨⟨c,⟨⟨a,b⟩⟩⟩⟩_L`.
pub fn double_jacobi(alg: &AlgebraSpec, a: &Word, b: &Word, c: &Word) -> TripleTensor {
    let t1 = bracket_left(alg, a, &double_bracket(alg, b, c));
    let t2 = rotate(&bracket_left(alg, b, &double_bracket(alg, c, a)));
    let t3 = rotate(&rotate(&bracket_left(alg, c, &double_bracket(alg, a, b))));
    &(&t1 + &t2) + &t3
}

/// First word triple of length `<= max_len` where the double Jacobi sum is
/// nonzero.
pub fn check_double_jacobi(alg: &AlgebraSpec, max_len: usize) -> Option<(Word, Word, Word)> {
    let words = all_words_with_unit(alg.dim(), max_len);
    for a in &words {
        for b in &words {
            for c in &words {
                if !double_jacobi(alg, a, b, c).is_zero() {
                    return Some((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    None
}

fn all_words_with_unit(dim: usize, max_len: usize) -> Vec<Word> {
    let mut v = vec![Word::empty()];
    v.extend(words_up_to(dim, max_len));
    v
}

/// Verdicts of the associativity test and of the double Jacobi sweep.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub algebra: String,
    pub associative: bool,
    pub jacobi: bool,
    pub jacobi_witness: Option<[String; 3]>,
}

impl EquivalenceReport {
    pub fn agrees(&self) -> bool {
        self.associative == self.jacobi
    }
}

/// Whether `Ω` is associative exactly when the bracket satisfies double
/// Jacobi on words of length `<= max_len`.
pub fn jacobi_associativity_equivalence(alg: &AlgebraSpec, max_len: usize) -> EquivalenceReport {
    let associative = matches!(alg.check_associativity(), Associativity::Pass);
    let witness = check_double_jacobi(alg, max_len);
    EquivalenceReport {
        algebra: alg.name().to_string(),
        associative,
        jacobi: witness.is_none(),
        jacobi_witness: witness.map(|(a, b, c)| {
            [
                a.display(alg).to_string(),
                b.display(alg).to_string(),
                c.display(alg).to_string(),
            ]
        }),
    }
}

fn sv(rows: &[&[i64]]) -> Vec<Vec<BasisVec>> {
    let n = (rows.len() as f64).sqrt() as usize;
    let mut t = vec![vec![BasisVec::new(); n]; n];
    for (idx, r) in rows.iter().enumerate() {
        t[idx / n][idx % n] = r.iter().enumerate().map(|(k, &c)| (k, Scalar::from(c))).collect();
    }
    t
}

/// Associative tables of dimension `<= 3` used to seed the fuzz corpus.
fn associative_seeds() -> Result<Vec<AlgebraSpec>> {
    let labels = |n: usize| (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>();
    // dual numbers C[ε]/ε²: basis 1, ε
    let dual = AlgebraSpec::new("dual_numbers", labels(2), sv(&[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]))?;
    // upper triangular 2x2: basis e11, e12, e22
    let upper = AlgebraSpec::new(
        "upper_triangular(2)",
        labels(3),
        sv(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 0],
            &[0, 0, 0],
            &[0, 0, 0],
            &[0, 1, 0],
            &[0, 0, 0],
            &[0, 0, 0],
            &[0, 0, 1],
        ]),
    )?;
    // C ⊕ C[ε]/ε²
    let mixed = AlgebraSpec::new(
        "C+dual_numbers",
        labels(3),
        sv(&[
            &[1, 0, 0],
            &[0, 0, 0],
            &[0, 0, 0],
            &[0, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[0, 0, 0],
            &[0, 0, 1],
            &[0, 0, 0],
        ]),
    )?;
    // truncated polynomials C[t]/t³ without unit: t, t²
    let nil = AlgebraSpec::new("t*C[t]/t^3", labels(2), sv(&[&[0, 1], &[0, 0], &[0, 0], &[0, 0]]))?;
    let mut out = vec![dual, upper, mixed, nil];
    for b in [
        Builtin::DirectSum(1),
        Builtin::DirectSum(2),
        Builtin::DirectSum(3),
        Builtin::Null(2),
        Builtin::Null(3),
    ] {
        out.push(b.build()?);
    }
    Ok(out)
}

fn random_unitriangular<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|a| {
            (0..n)
                .map(|i| match i.cmp(&a) {
                    std::cmp::Ordering::Equal => Scalar::one(),
                    std::cmp::Ordering::Greater => Scalar::from(rng.gen_range(-2i64..=2)),
                    std::cmp::Ordering::Less => Scalar::zero(),
                })
                .collect()
        })
        .collect()
}

fn random_table<R: Rng>(n: usize, rng: &mut R, name: String) -> Result<AlgebraSpec> {
    let mut t = vec![vec![BasisVec::new(); n]; n];
    for row in t.iter_mut() {
        for cell in row.iter_mut() {
            for k in 0..n {
                if rng.gen_bool(0.35) {
                    cell.add_term(k, Scalar::from(rng.gen_range(-2i64..=2)));
                }
            }
        }
    }
    AlgebraSpec::new(name, (1..=n).map(|i| format!("x{i}")).collect(), t)
}

/// A seeded corpus of `count` tables of dimension `<= 3`: the
/// non-associative witness, associative algebras in random unitriangular
/// bases, random sparse tables, and single-entry perturbations of
/// associative ones.
pub fn fuzz_corpus(seed: u64, count: usize) -> Result<Vec<AlgebraSpec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds = associative_seeds()?;
    let mut out = vec![Builtin::NonassocWitness.build()?];
    let mut k = 0;
    while out.len() < count {
        k += 1;
        let spec = match k % 3 {
            0 => {
                let base = seeds.choose(&mut rng).expect("nonempty");
                let p = random_unitriangular(base.dim(), &mut rng);
                base.change_basis(format!("{}~{k}", base.name()), &p)?
            }
            1 => {
                let n = rng.gen_range(1..=3);
                random_table(n, &mut rng, format!("random{k}"))?
            }
            _ => {
                let base = seeds.choose(&mut rng).expect("nonempty");
                let n = base.dim();
                let mut t: Vec<Vec<BasisVec>> = (0..n)
                    .map(|i| (0..n).map(|j| base.product(i, j).clone()).collect())
                    .collect();
                let (i, j, l) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                t[i][j].add_term(l, Scalar::one());
                AlgebraSpec::new(format!("{}+δ{k}", base.name()), base.labels().to_vec(), t)?
            }
        };
        out.push(spec);
    }
    Ok(out)
}

/// The generator `p_ij(x) = E_ij ⊗ x` of `S(M_d(Ω))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PGen {
    pub i: usize,
    pub j: usize,
    pub word: Word,
}

impl PGen {
    pub fn new(d: usize, i: usize, j: usize, word: Word) -> Result<Self> {
        if i == 0 || j == 0 || i > d || j > d {
            return Err(Error::IndexOutOfRange(format!("p({i},{j}) with d = {d}")));
        }
        if word.is_empty() {
            return Err(Error::InvalidArgument("p_ij needs a nonempty word".into()));
        }
        Ok(Self { i, j, word })
    }
}

/// An element of `S(M_d(Ω))`; monomials are sorted multisets.
pub type SPoly = LinComb<Vec<PGen>>;

/// An element of `S(Tc⁺(Ω))`; monomials are sorted multisets.
pub type NecklacePoly = LinComb<Vec<CyclicWord>>;

fn sym_mul<G: Ord + Clone>(a: &LinComb<Vec<G>>, b: &LinComb<Vec<G>>) -> LinComb<Vec<G>> {
    let mut out = LinComb::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = ma.clone();
            m.extend(mb.iter().cloned());
            m.sort();
            out.add_term(m, ca * cb);
        }
    }
    out
}

/// Extends a bracket on generators to symmetric algebras by the Leibniz rule.
fn leibniz_extend<G: Ord + Clone>(
    f: &LinComb<Vec<G>>,
    g: &LinComb<Vec<G>>,
    mut on_gens: impl FnMut(&G, &G) -> Result<LinComb<Vec<G>>>,
) -> Result<LinComb<Vec<G>>> {
    let mut out = LinComb::new();
    for (mf, cf) in f {
        for (mg, cg) in g {
            for (a, x) in mf.iter().enumerate() {
                for (b, y) in mg.iter().enumerate() {
                    let br = on_gens(x, y)?;
                    if br.is_zero() {
                        continue;
                    }
                    let mut rest: Vec<G> = mf[..a].iter().chain(&mf[a + 1..]).cloned().collect();
                    rest.extend(mg[..b].iter().chain(&mg[b + 1..]).cloned());
                    out.add_scaled(&sym_mul(&LinComb::basis(rest), &br), &(cf * cg));
                }
            }
        }
    }
    Ok(out)
}

/// `p_ab(w)`, with `p_ab(1) = δ_ab`.
fn p_factor(a: usize, b: usize, w: &Word) -> SPoly {
    if w.is_empty() {
        if a == b {
            SPoly::basis(Vec::new())
        } else {
            SPoly::new()
        }
    } else {
        SPoly::basis(vec![PGen {
            i: a,
            j: b,
            word: w.clone(),
        }])
    }
}

/// `{p_ij(x), p_kl(y)} = Σ p_kj(⟨⟨x,y⟩⟩′) p_il(⟨⟨x,y⟩⟩″)`.
pub fn matrix_poisson_gens(alg: &AlgebraSpec, d: usize, p: &PGen, q: &PGen) -> Result<SPoly> {
    for g in [p, q] {
        if g.i > d || g.j > d || g.i == 0 || g.j == 0 {
            return Err(Error::Structural(format!("p({},{}) is outside d = {d}", g.i, g.j)));
        }
    }
    let mut out = SPoly::new();
    for ((u, v), c) in &double_bracket(alg, &p.word, &q.word) {
        out.add_scaled(&sym_mul(&p_factor(q.i, p.j, u), &p_factor(p.i, q.j, v)), c);
    }
    Ok(out)
}

/// `{-,-}_{d,Ω}` on `S(M_d(Ω))`.
pub fn matrix_poisson(alg: &AlgebraSpec, d: usize, f: &SPoly, g: &SPoly) -> Result<SPoly> {
    leibniz_extend(f, g, |p, q| matrix_poisson_gens(alg, d, p, q))
}

/// The Lie bracket on `Tc⁺(Ω)`: multiply the two slots of the double
/// bracket of lifts and take the rotation class.
pub fn trace_bracket(alg: &AlgebraSpec, a: &CyclicWord, b: &CyclicWord) -> Result<LinComb<CyclicWord>> {
    trace_bracket_lifts(alg, a.word(), b.word())
}

/// [`trace_bracket`] computed from arbitrary lifts.
pub fn trace_bracket_lifts(alg: &AlgebraSpec, x: &Word, y: &Word) -> Result<LinComb<CyclicWord>> {
    let mut t = TensorElement::new();
    for ((u, v), c) in &double_bracket(alg, x, y) {
        t.add_term(u.concat(v), c.clone());
    }
    project_cyclic(&t)
}

/// `{-,-}_Ω` on `S(Tc⁺(Ω))`.
pub fn necklace_poisson(alg: &AlgebraSpec, f: &NecklacePoly, g: &NecklacePoly) -> Result<NecklacePoly> {
    leibniz_extend(f, g, |a, b| {
        Ok(trace_bracket(alg, a, b)?
            .into_iter()
            .map(|(w, c)| (vec![w], c))
            .collect())
    })
}

pub fn necklace(w: &Word) -> Result<NecklacePoly> {
    Ok(NecklacePoly::basis(vec![cyclic_canonical(w)?]))
}

/// Outcome of a symbol comparison at `N` and `N + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    NotStabilized,
}

fn verdict(at_n: bool, at_next: bool) -> Verdict {
    match (at_n, at_next) {
        (true, true) => Verdict::Match,
        (false, false) => Verdict::Mismatch,
        _ => Verdict::NotStabilized,
    }
}

fn check_headroom(n: usize, g: usize, d: usize) -> Result<()> {
    if n + 1 < g + d + 1 {
        return Err(Error::Precondition(format!(
            "symbols of degree {g} with d = {d} need N + 1 >= {}, got N = {n}",
            g + d + 1
        )));
    }
    Ok(())
}

/// Compares the degree-`|x|+|y|−1` part of `[t_ij(x;N;s), t_kl(y;N;s)]`
/// with the image of `{p_ij(x), p_kl(y)}` under `p_ab(w) ↦ e_ab(w;N)`, at
/// `N` and `N + 1`.
#[allow(clippy::too_many_arguments)]
pub fn symbol_match_matrix(
    ctx: &YangianContext,
    (i, j, k, l): (usize, usize, usize, usize),
    x: &Word,
    y: &Word,
    s: &Scalar,
    n: usize,
) -> Result<Verdict> {
    let d = ctx.d();
    let alg = ctx.omega();
    let p = PGen::new(d, i, j, x.clone())?;
    let q = PGen::new(d, k, l, y.clone())?;
    let g = x.len() + y.len() - 1;
    check_headroom(n, g, d)?;
    let bracket = matrix_poisson_gens(alg, d, &p, &q)?;
    let mut ok = [false; 2];
    for (slot, n) in [n, n + 1].into_iter().enumerate() {
        let u = ctx.algebra(n)?;
        let comm = u.commutator(&u.t_elem(i, j, x, s)?, &u.t_elem(k, l, y, s)?)?;
        let mut image = u.zero();
        for (mono, c) in &bracket {
            let mut prod = u.one();
            for pg in mono {
                prod = u.multiply(&prod, &u.e_elem(pg.i, pg.j, &pg.word)?)?;
            }
            image.add_scaled(&prod, c)?;
        }
        ok[slot] = top_matches(&comm, &image, g);
    }
    Ok(verdict(ok[0], ok[1]))
}

fn top_matches(comm: &UElement, image: &UElement, g: usize) -> bool {
    comm.degree().is_none_or(|deg| deg <= g) && comm.part_of_degree(g) == image.part_of_degree(g)
}

/// Compares the degree-`|x|+|y|−1` part of the commutator of the trace
/// elements `Σ_a e_aa(x;N)`, `Σ_a e_aa(y;N)` with the image of the trace
/// bracket under `class(w) ↦ Σ_a e_aa(w;N)`, at `N` and `N + 1`.
pub fn symbol_match_trace(ctx: &YangianContext, x: &Word, y: &Word, n: usize) -> Result<Verdict> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::InvalidArgument("trace elements need nonempty words".into()));
    }
    let alg = ctx.omega();
    let g = x.len() + y.len() - 1;
    check_headroom(n, g, 0)?;
    let bracket = trace_bracket_lifts(alg, x, y)?;
    let mut ok = [false; 2];
    for (slot, n) in [n, n + 1].into_iter().enumerate() {
        let u = ctx.algebra(n)?;
        let trace = |w: &Word| -> Result<UElement> {
            let mut out = u.zero();
            for a in 1..=n {
                out.add_scaled(&u.e_elem(a, a, w)?, &Scalar::one())?;
            }
            Ok(out)
        };
        let comm = u.commutator(&trace(x)?, &trace(y)?)?;
        let mut image = u.zero();
        for (cw, c) in &bracket {
            image.add_scaled(&trace(cw.word())?, c)?;
        }
        ok[slot] = top_matches(&comm, &image, g);
    }
    Ok(verdict(ok[0], ok[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::builtin;

    fn w(v: &[usize]) -> Word {
        Word(v.to_vec())
    }

    #[test]
    fn letters_reduce_to_linear_form() {
        let m = builtin("matrix(2)").unwrap();
        for x in 0..4 {
            for y in 0..4 {
                let mut expect = DoubleTensor::new();
                for (&c, v) in m.product(x, y) {
                    expect.add_term((Word::empty(), Word::letter(c)), v.clone());
                }
                for (&c, v) in m.product(y, x) {
                    expect.add_term((Word::letter(c), Word::empty()), -v);
                }
                assert_eq!(double_bracket(&m, &w(&[x]), &w(&[y])), expect);
            }
        }
    }

    #[test]
    fn unit_and_orthogonal_idempotents() {
        let c = builtin("C").unwrap();
        assert!(double_bracket(&c, &Word::empty(), &w(&[0, 0])).is_zero());
        assert!(double_bracket(&c, &w(&[0]), &Word::empty()).is_zero());
        let c2 = builtin("direct_sum_C(2)").unwrap();
        assert!(double_bracket(&c2, &w(&[0]), &w(&[1])).is_zero());
    }

    #[test]
    fn axioms_on_builtins() {
        for (name, len) in [("C", 3), ("direct_sum_C(2)", 2), ("null(2)", 2), ("matrix(2)", 1)] {
            let a = builtin(name).unwrap();
            assert_eq!(check_skew(&a, len), None, "{name}");
            assert_eq!(check_leibniz(&a, len), None, "{name}");
            assert_eq!(check_double_jacobi(&a, len), None, "{name}");
        }
    }

    #[test]
    fn witness_fails_jacobi() {
        let a = builtin("nonassoc_witness").unwrap();
        assert!(!double_jacobi(&a, &w(&[0]), &w(&[0]), &w(&[0])).is_zero());
        let r = jacobi_associativity_equivalence(&a, 1);
        assert!(!r.associative && !r.jacobi && r.agrees());
        let r = jacobi_associativity_equivalence(&builtin("direct_sum_C(3)").unwrap(), 1);
        assert!(r.associative && r.jacobi);
    }

    #[test]
    fn fuzz_corpus_is_deterministic() {
        let a = fuzz_corpus(7, 12).unwrap();
        let b = fuzz_corpus(7, 12).unwrap();
        assert_eq!(a.len(), 12);
        assert_eq!(
            a.iter().map(|s| s.to_json_string()).collect::<Vec<_>>(),
            b.iter().map(|s| s.to_json_string()).collect::<Vec<_>>()
        );
        for spec in associative_seeds().unwrap() {
            assert!(spec.check_associativity().passed(), "{}", spec.name());
        }
    }

    #[test]
    fn matrix_bracket_on_letters() {
        let m = builtin("matrix(2)").unwrap();
        let d = 2;
        for (i, j, k, l) in [(1, 2, 2, 1), (1, 1, 1, 1), (2, 1, 2, 1)] {
            for x in 0..4 {
                for y in 0..4 {
                    let p = PGen::new(d, i, j, w(&[x])).unwrap();
                    let q = PGen::new(d, k, l, w(&[y])).unwrap();
                    let mut expect = SPoly::new();
                    if k == j {
                        for (&c, v) in m.product(x, y) {
                            expect.add_term(vec![PGen { i, j: l, word: w(&[c]) }], v.clone());
                        }
                    }
                    if i == l {
                        for (&c, v) in m.product(y, x) {
                            expect.add_term(vec![PGen { i: k, j, word: w(&[c]) }], -v);
                        }
                    }
                    assert_eq!(matrix_poisson_gens(&m, d, &p, &q).unwrap(), expect);
                }
            }
        }
        let c = builtin("C").unwrap();
        let p = PGen::new(1, 1, 1, w(&[0])).unwrap();
        assert!(matrix_poisson_gens(&c, 1, &p, &p).unwrap().is_zero());
        let big = PGen {
            i: 3,
            j: 1,
            word: w(&[0]),
        };
        assert!(matches!(
            matrix_poisson_gens(&c, 2, &big, &p),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn trace_bracket_examples() {
        let c = builtin("C").unwrap();
        let x = cyclic_canonical(&w(&[0])).unwrap();
        assert!(trace_bracket(&c, &x, &x).unwrap().is_zero());
        let m = builtin("matrix(2)").unwrap();
        let e11 = cyclic_canonical(&w(&[0])).unwrap();
        let e12 = cyclic_canonical(&w(&[1])).unwrap();
        assert_eq!(trace_bracket(&m, &e11, &e12).unwrap(), LinComb::basis(e12.clone()));
        // lifts from different rotations agree
        let a = w(&[0, 1, 3]);
        let b = w(&[2, 1]);
        let ref_val = trace_bracket_lifts(&m, &a, &b).unwrap();
        assert_eq!(trace_bracket_lifts(&m, &w(&[1, 3, 0]), &w(&[1, 2])).unwrap(), ref_val);
    }

    #[test]
    fn necklace_unit_and_degree_one() {
        let m = builtin("matrix(2)").unwrap();
        let f = necklace(&w(&[0, 1])).unwrap();
        let one = NecklacePoly::basis(Vec::new());
        assert!(necklace_poisson(&m, &f, &one).unwrap().is_zero());
        let g = necklace(&w(&[2])).unwrap();
        let expect: NecklacePoly = trace_bracket_lifts(&m, &w(&[0, 1]), &w(&[2]))
            .unwrap()
            .into_iter()
            .map(|(c, v)| (vec![c], v))
            .collect();
        assert_eq!(necklace_poisson(&m, &f, &g).unwrap(), expect);
    }

    #[test]
    fn symbol_examples() {
        let c = builtin("C").unwrap();
        let ctx = YangianContext::new(c.clone(), 1);
        let s = Scalar::zero();
        assert_eq!(
            symbol_match_matrix(&ctx, (1, 1, 1, 1), &w(&[0]), &w(&[0]), &s, 3).unwrap(),
            Verdict::Match
        );
        let ctx2 = YangianContext::new(c, 2);
        assert_eq!(
            symbol_match_matrix(&ctx2, (1, 2, 2, 1), &w(&[0]), &w(&[0]), &s, 3).unwrap(),
            Verdict::Match
        );
        let c2 = YangianContext::new(builtin("direct_sum_C(2)").unwrap(), 2);
        assert_eq!(
            symbol_match_matrix(&c2, (1, 2, 2, 1), &w(&[0, 1]), &w(&[1]), &s, 4).unwrap(),
            Verdict::Match
        );
        assert!(symbol_match_matrix(&c2, (1, 2, 2, 1), &w(&[0, 1]), &w(&[1]), &s, 2).is_err());
        let m = YangianContext::new(builtin("matrix(2)").unwrap(), 0);
        assert_eq!(symbol_match_trace(&m, &w(&[0]), &w(&[1]), 3).unwrap(), Verdict::Match);
        let z = YangianContext::new(builtin("null(2)").unwrap(), 0);
        assert_eq!(
            symbol_match_trace(&z, &w(&[0, 1]), &w(&[1]), 3).unwrap(),
            Verdict::Match
        );
    }
}
