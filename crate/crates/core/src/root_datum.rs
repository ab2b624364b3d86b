//! Based root data stored as explicit vector lists, Weyl machinery, standard
//! Levi subgroups and the algebraic fundamental group.
//!
//! A datum lives on a fixed lattice `X_* = Z^d` with characters in the dual
//! `X^* = Z^d`, paired by the standard dot product (presets choose dual bases
//! so this is always valid). Roots and coroots are matched lists; the base is
//! an index subset of the root list. Products, similitude factors and
//! restriction of scalars then need no special cases.

use crate::error::{Error, Result};
use crate::exact_lattice::{dot, dot_rat, solve_exact, to_rat, AbelianQuotient, Matrix};
use crate::{FinAbGroup, Int, IntMatrix, IntVec, Rat, RatVec};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// Orbit-size guard for Weyl orbit enumeration, overridable through the
/// `ISOKIT_ORBIT_CAP` environment variable.
pub fn orbit_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("ISOKIT_ORBIT_CAP")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(10_000_000)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedRootDatum {
    rank: usize,
    roots: Vec<IntVec>,
    coroots: Vec<IntVec>,
    base: Vec<usize>,
}

impl BasedRootDatum {
    /// Validates all structural invariants:
    /// matched pairings `<a, a^> = 2`, reflections permuting the matched
    /// root/coroot lists, simple roots independent, and every root an
    /// integer combination of the base with coefficients of one sign.
    pub fn new(
        rank: usize,
        roots: Vec<IntVec>,
        coroots: Vec<IntVec>,
        base: Vec<usize>,
    ) -> Result<Self> {
        if roots.len() != coroots.len() {
            return Err(Error::InvalidDatum(
                "root and coroot lists must be matched".into(),
            ));
        }
        for v in roots.iter().chain(coroots.iter()) {
            if v.len() != rank {
                return Err(Error::InvalidDatum("vector length differs from rank".into()));
            }
        }
        let mut seen = BTreeSet::new();
        for r in &roots {
            if r.iter().all(|x| x.is_zero()) {
                return Err(Error::InvalidDatum("zero vector listed as a root".into()));
            }
            if !seen.insert(r.clone()) {
                return Err(Error::InvalidDatum("duplicate root".into()));
            }
        }
        for &i in &base {
            if i >= roots.len() {
                return Err(Error::InvalidDatum("base index out of range".into()));
            }
        }
        let datum = BasedRootDatum { rank, roots, coroots, base };
        datum.validate()?;
        Ok(datum)
    }

    fn validate(&self) -> Result<()> {
        let two = Int::from(2);
        for (r, c) in self.roots.iter().zip(&self.coroots) {
            if dot(r, c) != two {
                return Err(Error::InvalidDatum(
                    "matched pair with <root, coroot> != 2".into(),
                ));
            }
        }
        // reflections permute the matched lists
        for k in 0..self.roots.len() {
            for j in 0..self.roots.len() {
                let rb = self.reflect_root(k, &self.roots[j]);
                let cb = self.reflect_coroot(k, &self.coroots[j]);
                match self.roots.iter().position(|r| *r == rb) {
                    Some(idx) if self.coroots[idx] == cb => {}
                    _ => {
                        return Err(Error::InvalidDatum(
                            "reflection does not permute the matched root list".into(),
                        ))
                    }
                }
            }
        }
        // simple roots linearly independent
        let cols: Vec<RatVec> = self.base.iter().map(|&i| to_rat(&self.roots[i])).collect();
        if crate::exact_lattice::rational_rank(&cols) != cols.len() {
            return Err(Error::InvalidDatum("dependent simple roots".into()));
        }
        // one-sign integral expansion of each root over the base
        for r in &self.roots {
            let coeffs = self.base_expansion(r).ok_or_else(|| {
                Error::InvalidDatum("root outside the rational span of the base".into())
            })?;
            let mut pos = false;
            let mut neg = false;
            for c in &coeffs {
                if !c.is_integer() {
                    return Err(Error::InvalidDatum(
                        "root with non-integral base expansion".into(),
                    ));
                }
                if c.is_positive() {
                    pos = true;
                }
                if c.is_negative() {
                    neg = true;
                }
            }
            if pos && neg {
                return Err(Error::InvalidDatum(
                    "root with mixed-sign base expansion".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[IntVec] {
        &self.roots
    }

    pub fn coroots(&self) -> &[IntVec] {
        &self.coroots
    }

    /// Indices of the simple roots within the root list.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn semisimple_rank(&self) -> usize {
        self.base.len()
    }

    pub fn is_torus(&self) -> bool {
        self.roots.is_empty()
    }

    /// `i`-th simple root (index into the base, not the root list).
    pub fn simple_root(&self, i: usize) -> &IntVec {
        &self.roots[self.base[i]]
    }

    pub fn simple_coroot(&self, i: usize) -> &IntVec {
        &self.coroots[self.base[i]]
    }

    /// Columns are the simple coroots.
    pub fn simple_coroot_matrix(&self) -> IntMatrix {
        let cols: Vec<IntVec> = (0..self.semisimple_rank())
            .map(|i| self.simple_coroot(i).clone())
            .collect();
        Matrix::from_columns(self.rank, &cols)
    }

    fn reflect_root(&self, k: usize, chi: &[Int]) -> IntVec {
        // s_k on X^*: chi - <chi, a_k^> a_k
        let c = dot(chi, &self.coroots[k]);
        chi.iter()
            .zip(&self.roots[k])
            .map(|(x, a)| x.clone() - c.clone() * a.clone())
            .collect()
    }

    fn reflect_coroot(&self, k: usize, v: &[Int]) -> IntVec {
        // s_k on X_*: v - <a_k, v> a_k^
        let c = dot(&self.roots[k], v);
        v.iter()
            .zip(&self.coroots[k])
            .map(|(x, a)| x.clone() - c.clone() * a.clone())
            .collect()
    }

    /// Matrix of the `i`-th simple reflection acting on `X_*`.
    pub fn simple_reflection(&self, i: usize) -> IntMatrix {
        let k = self.base[i];
        let mut m = IntMatrix::identity(self.rank);
        for r in 0..self.rank {
            for c in 0..self.rank {
                let v = m.at(r, c).clone()
                    - self.coroots[k][r].clone() * self.roots[k][c].clone();
                m.set(r, c, v);
            }
        }
        m
    }

    /// Rational expansion of a character in terms of the simple roots.
    fn base_expansion(&self, chi: &[Int]) -> Option<RatVec> {
        let cols: Vec<RatVec> = self.base.iter().map(|&i| to_rat(&self.roots[i])).collect();
        solve_exact(&cols, &to_rat(chi))
    }

    pub fn is_dominant(&self, v: &[Rat]) -> bool {
        (0..self.semisimple_rank()).all(|i| !dot_rat(self.simple_root(i), v).is_negative())
    }

    pub fn is_dominant_int(&self, v: &[Int]) -> bool {
        (0..self.semisimple_rank()).all(|i| !dot(self.simple_root(i), v).is_negative())
    }
}

/// Weyl group element carrying both a word in simple reflections and its
/// matrix on `X_*`. Words are not canonical; equality is matrix equality.
/// `word[0]` is the leftmost factor, i.e. the last reflection applied.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: IntMatrix,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}
impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(rd: &BasedRootDatum) -> Self {
        WeylElement {
            word: Vec::new(),
            matrix: IntMatrix::identity(rd.rank()),
        }
    }

    pub fn from_word(rd: &BasedRootDatum, word: &[usize]) -> Self {
        let mut matrix = IntMatrix::identity(rd.rank());
        for &i in word {
            matrix = matrix.mul(&rd.simple_reflection(i));
        }
        WeylElement {
            word: word.to_vec(),
            matrix,
        }
    }

    pub fn apply(&self, v: &[Int]) -> IntVec {
        self.matrix.mul_vec(v)
    }

    pub fn apply_rat(&self, v: &[Rat]) -> RatVec {
        self.matrix.mul_rat_vec(v)
    }
}

/// Subset of the simple-root indices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LeviSubset {
    indices: Vec<usize>,
}

impl LeviSubset {
    pub fn new(rd: &BasedRootDatum, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        if set.iter().any(|&i| i >= rd.semisimple_rank()) {
            return Err(Error::BadSubset);
        }
        Ok(LeviSubset {
            indices: set.into_iter().collect(),
        })
    }

    pub fn empty() -> Self {
        LeviSubset { indices: Vec::new() }
    }

    pub fn full(rd: &BasedRootDatum) -> Self {
        LeviSubset {
            indices: (0..rd.semisimple_rank()).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_full(&self, rd: &BasedRootDatum) -> bool {
        self.indices.len() == rd.semisimple_rank()
    }

    /// Columns are the coroots of this subset.
    pub fn coroot_matrix(&self, rd: &BasedRootDatum) -> IntMatrix {
        let cols: Vec<IntVec> = self.indices.iter().map(|&i| rd.simple_coroot(i).clone()).collect();
        Matrix::from_columns(rd.rank(), &cols)
    }
}

/// Deterministic dominant representative: repeatedly applies the first
/// simple reflection with negative pairing. Returns the representative and
/// the Weyl element mapping the input to it.
pub fn dominant_representative(rd: &BasedRootDatum, v: &[Rat]) -> (RatVec, WeylElement) {
    assert_eq!(v.len(), rd.rank(), "vector length differs from rank");
    let mut cur = v.to_vec();
    let mut word_applied: Vec<usize> = Vec::new();
    loop {
        let neg = (0..rd.semisimple_rank())
            .find(|&i| dot_rat(rd.simple_root(i), &cur).is_negative());
        match neg {
            None => break,
            Some(i) => {
                cur = rd.simple_reflection(i).mul_rat_vec(&cur);
                word_applied.push(i);
            }
        }
    }
    // last applied reflection is the leftmost factor
    let word: Vec<usize> = word_applied.into_iter().rev().collect();
    let w = WeylElement::from_word(rd, &word);
    debug_assert_eq!(w.apply_rat(v), cur);
    (cur, w)
}

pub fn dominant_representative_int(rd: &BasedRootDatum, v: &[Int]) -> (IntVec, WeylElement) {
    let (r, w) = dominant_representative(rd, &to_rat(v));
    let out = r.into_iter().map(|x| x.to_integer()).collect();
    (out, w)
}

/// Closure of `mu` under the simple reflections, sorted; errors when the
/// orbit would exceed the configured cap.
pub fn weyl_orbit(rd: &BasedRootDatum, mu: &[Int]) -> Result<Vec<IntVec>> {
    weyl_orbit_capped(rd, mu, orbit_cap())
}

pub fn weyl_orbit_capped(rd: &BasedRootDatum, mu: &[Int], cap: usize) -> Result<Vec<IntVec>> {
    assert_eq!(mu.len(), rd.rank(), "vector length differs from rank");
    let reflections: Vec<IntMatrix> = (0..rd.semisimple_rank())
        .map(|i| rd.simple_reflection(i))
        .collect();
    let mut seen: BTreeSet<IntVec> = BTreeSet::new();
    seen.insert(mu.to_vec());
    let mut frontier = vec![mu.to_vec()];
    while let Some(v) = frontier.pop() {
        for s in &reflections {
            let w = s.mul_vec(&v);
            if !seen.contains(&w) {
                if seen.len() >= cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                seen.insert(w.clone());
                frontier.push(w);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Order of the Weyl group, by closing the simple reflections.
pub fn weyl_group_order(rd: &BasedRootDatum, cap: usize) -> Result<usize> {
    let gens: Vec<IntMatrix> = (0..rd.semisimple_rank())
        .map(|i| rd.simple_reflection(i))
        .collect();
    let mut seen: BTreeSet<Vec<Int>> = BTreeSet::new();
    let flat = |m: &IntMatrix| -> Vec<Int> {
        let mut out = Vec::new();
        for r in 0..m.rows() {
            out.extend(m.row(r).iter().cloned());
        }
        out
    };
    let id = IntMatrix::identity(rd.rank());
    seen.insert(flat(&id));
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for g in &gens {
            let n = m.mul(g);
            let key = flat(&n);
            if !seen.contains(&key) {
                if seen.len() >= cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                seen.insert(key);
                frontier.push(n);
            }
        }
    }
    Ok(seen.len())
}

/// `pi_1 = X_* / (span of the simple coroots)` with its projection map.
pub fn fundamental_group(rd: &BasedRootDatum) -> FinAbGroup {
    AbelianQuotient::cokernel(&rd.simple_coroot_matrix())
}

/// Minuscule test: all pairings of the dominant representative against the
/// full root list lie in `{-1, 0, 1}`.
pub fn is_minuscule(rd: &BasedRootDatum, mu: &[Int]) -> bool {
    let (dom, _) = dominant_representative_int(rd, mu);
    let one = Int::from(1);
    rd.roots().iter().all(|alpha| dot(alpha, &dom).abs() <= one)
}

/// Root datum of the standard Levi attached to a subset of the base: same
/// lattice, roots restricted to the span of the subset.
pub fn levi_datum(rd: &BasedRootDatum, levi: &LeviSubset) -> Result<BasedRootDatum> {
    if levi.indices().iter().any(|&i| i >= rd.semisimple_rank()) {
        return Err(Error::BadSubset);
    }
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut base = Vec::new();
    for (k, root) in rd.roots().iter().enumerate() {
        let coeffs = rd
            .base_expansion(root)
            .ok_or_else(|| Error::Internal("root outside base span".into()))?;
        let support_in_levi = coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || levi.contains(i));
        if support_in_levi {
            if rd.base().contains(&k) {
                base.push(roots.len());
            }
            roots.push(root.clone());
            coroots.push(rd.coroots()[k].clone());
        }
    }
    BasedRootDatum::new(rd.rank(), roots, coroots, base)
}

/// The subset `{ i : <alpha_i, nu> = 0 }` of the base; `nu` must be dominant.
pub fn centralizer_levi(rd: &BasedRootDatum, nu: &[Rat]) -> Result<LeviSubset> {
    if !rd.is_dominant(nu) {
        return Err(Error::NotDominant);
    }
    let idx: Vec<usize> = (0..rd.semisimple_rank())
        .filter(|&i| dot_rat(rd.simple_root(i), nu).is_zero())
        .collect();
    LeviSubset::new(rd, idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::{int_vec, rat_vec};

    #[test]
    fn gl3_dominant_representative() {
        let rd = presets::gl(3).unwrap();
        let (dom, w) = dominant_representative(&rd, &rat_vec(&[0, 0, 1]));
        assert_eq!(dom, rat_vec(&[1, 0, 0]));
        assert_eq!(w.apply_rat(&rat_vec(&[0, 0, 1])), dom);
        // dominant input is fixed with the identity word
        let (dom2, w2) = dominant_representative(&rd, &rat_vec(&[1, 0, 0]));
        assert_eq!(dom2, rat_vec(&[1, 0, 0]));
        assert!(w2.word.is_empty());
    }

    #[test]
    fn gl2_single_reflection() {
        let rd = presets::gl(2).unwrap();
        let (dom, w) = dominant_representative(&rd, &rat_vec(&[0, 1]));
        assert_eq!(dom, rat_vec(&[1, 0]));
        assert_eq!(w.word, vec![0]);
    }

    #[test]
    fn orbits_of_gl_presets() {
        let rd3 = presets::gl(3).unwrap();
        assert_eq!(weyl_orbit(&rd3, &int_vec(&[1, 0, 0])).unwrap().len(), 3);
        let rd4 = presets::gl(4).unwrap();
        assert_eq!(weyl_orbit(&rd4, &int_vec(&[1, 1, 0, 0])).unwrap().len(), 6);
        assert_eq!(weyl_orbit(&rd4, &int_vec(&[0, 0, 0, 0])).unwrap().len(), 1);
    }

    #[test]
    fn orbit_cap_triggers() {
        let rd = presets::gl(4).unwrap();
        assert!(matches!(
            weyl_orbit_capped(&rd, &int_vec(&[3, 1, 0, -1]), 5),
            Err(Error::OrbitTooLarge { cap: 5 })
        ));
    }

    #[test]
    fn fundamental_groups_of_presets() {
        for n in 2..=8 {
            let g = fundamental_group(&presets::gl(n).unwrap());
            assert_eq!(g.invariant_factors(), &[Int::from(0)], "GL({n})");
        }
        let sl2 = fundamental_group(&presets::sl(2).unwrap());
        assert!(sl2.is_trivial());
        let pgl2 = fundamental_group(&presets::pgl(2).unwrap());
        assert_eq!(pgl2.invariant_factors(), &[Int::from(2)]);
        let gsp4 = fundamental_group(&presets::gsp(4).unwrap());
        assert_eq!(gsp4.invariant_factors(), &[Int::from(0)]);
    }

    #[test]
    fn minuscule_tests() {
        let rd4 = presets::gl(4).unwrap();
        assert!(is_minuscule(&rd4, &int_vec(&[1, 1, 0, 0])));
        assert!(is_minuscule(&rd4, &int_vec(&[0, 0, 0, 0])));
        let rd2 = presets::gl(2).unwrap();
        assert!(!is_minuscule(&rd2, &int_vec(&[2, 0])));
        // orbit invariance
        for v in weyl_orbit(&rd4, &int_vec(&[1, 1, 0, 0])).unwrap() {
            assert!(is_minuscule(&rd4, &v));
        }
    }

    #[test]
    fn levi_data() {
        let rd = presets::gl(4).unwrap();
        let full = levi_datum(&rd, &LeviSubset::full(&rd)).unwrap();
        assert_eq!(full, rd);
        let torus = levi_datum(&rd, &LeviSubset::empty()).unwrap();
        assert!(torus.is_torus());
        let j = LeviSubset::new(&rd, [0]).unwrap();
        let m = levi_datum(&rd, &j).unwrap();
        // GL_2 x GL_1 x GL_1 block: two roots survive
        assert_eq!(m.roots().len(), 2);
        assert_eq!(m.semisimple_rank(), 1);
    }

    #[test]
    fn centralizer_levis() {
        let rd = presets::gl(4).unwrap();
        let all = centralizer_levi(&rd, &rat_vec(&[0, 0, 0, 0])).unwrap();
        assert!(all.is_full(&rd));
        let j = centralizer_levi(&rd, &rat_vec(&[1, 1, 0, 0])).unwrap();
        assert_eq!(j.indices(), &[0, 2]);
        let rd2 = presets::gl(2).unwrap();
        let none = centralizer_levi(&rd2, &rat_vec(&[1, 0])).unwrap();
        assert!(none.indices().is_empty());
        assert!(matches!(
            centralizer_levi(&rd2, &rat_vec(&[0, 1])),
            Err(Error::NotDominant)
        ));
    }

    #[test]
    fn orbit_size_divides_group_order() {
        for rd in [
            presets::gl(3).unwrap(),
            presets::gl(4).unwrap(),
            presets::sp(4).unwrap(),
            presets::gsp(4).unwrap(),
            presets::sl(4).unwrap(),
        ] {
            let order = weyl_group_order(&rd, 100_000).unwrap();
            for mu in [
                int_vec(&(0..rd.rank() as i64).collect::<Vec<_>>()),
                int_vec(&vec![1; rd.rank()]),
            ] {
                let orbit = weyl_orbit(&rd, &mu).unwrap().len();
                assert_eq!(order % orbit, 0, "orbit {orbit} vs order {order}");
            }
        }
    }

    #[test]
    fn dominant_representative_is_orbit_invariant() {
        let rd = presets::gsp(4).unwrap();
        let mu = int_vec(&[1, 1, 1]);
        let (dom, _) = dominant_representative_int(&rd, &mu);
        for v in weyl_orbit(&rd, &mu).unwrap() {
            let (d, _) = dominant_representative_int(&rd, &v);
            assert_eq!(d, dom);
        }
    }
}
