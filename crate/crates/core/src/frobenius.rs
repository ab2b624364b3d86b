//! Finite-order lattice automorphisms playing the role of Frobenius, their
//! action on root data, orbit averages, norms and Galois coinvariants.
//!
//! Only quasi-split unramified shapes are modeled: the automorphism must be
//! pinned (preserve the simple-root base) wherever a chamber convention
//! matters, which makes the canonical action on dominant cocharacters agree
//! with the plain lattice action.

use crate::error::{Error, Result};
use crate::exact_lattice::{rat_add, rat_scale, to_rat, AbelianQuotient, Matrix};
use crate::root_datum::{dominant_representative_int, BasedRootDatum, LeviSubset};
use crate::{FinAbGroup, Int, IntMatrix, IntVec, Rat, RatVec};

const ORDER_CAP: usize = 10_000;

/// A finite-order automorphism of the cocharacter lattice together with its
/// multiplicative order, which doubles as the default splitting degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusDatum {
    sigma: IntMatrix,
    order: usize,
}

impl FrobeniusDatum {
    /// Wraps a lattice automorphism, computing its order (and thereby
    /// verifying it is finite and invertible).
    pub fn new(sigma: IntMatrix) -> Result<Self> {
        if sigma.rows() != sigma.cols() {
            return Err(Error::InvalidDatum("frobenius matrix must be square".into()));
        }
        let mut power = sigma.clone();
        let mut order = 1;
        while !power.is_identity() {
            order += 1;
            if order > ORDER_CAP {
                return Err(Error::NotFiniteOrder(ORDER_CAP));
            }
            power = power.mul(&sigma);
        }
        Ok(FrobeniusDatum { sigma, order })
    }

    pub fn identity(rank: usize) -> Self {
        FrobeniusDatum {
            sigma: IntMatrix::identity(rank),
            order: 1,
        }
    }

    /// Builds the automorphism permuting lattice coordinates:
    /// `e_i -> e_{perm[i]}`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidDatum("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut m = IntMatrix::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.set(p, i, Int::from(1));
        }
        FrobeniusDatum::new(m)
    }

    pub fn sigma(&self) -> &IntMatrix {
        &self.sigma
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.sigma.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn apply(&self, v: &[Int]) -> IntVec {
        self.sigma.mul_vec(v)
    }

    pub fn apply_rat(&self, v: &[Rat]) -> RatVec {
        self.sigma.mul_rat_vec(v)
    }

    /// The inverse, as `sigma^(order-1)`.
    pub fn inverse_matrix(&self) -> IntMatrix {
        self.sigma.pow(self.order - 1)
    }

    /// Pinned means: the contragredient action permutes the root list, the
    /// lattice action permutes the coroot list with the same matching, and
    /// the base is stable. Pairing preservation is then automatic.
    pub fn is_pinned(&self, rd: &BasedRootDatum) -> bool {
        self.base_permutation(rd).is_ok()
    }

    /// The induced permutation of the simple-root indices; errors when the
    /// automorphism is not pinned for the datum.
    pub fn base_permutation(&self, rd: &BasedRootDatum) -> Result<Vec<usize>> {
        if self.rank() != rd.rank() {
            return Err(Error::DimensionMismatch {
                expected: rd.rank(),
                got: self.rank(),
            });
        }
        // action on characters: inverse transpose
        let on_chars = self.inverse_matrix().transpose();
        let mut root_perm = Vec::with_capacity(rd.roots().len());
        for (k, root) in rd.roots().iter().enumerate() {
            let r2 = on_chars.mul_vec(root);
            let c2 = self.sigma.mul_vec(&rd.coroots()[k]);
            match rd.roots().iter().position(|r| *r == r2) {
                Some(idx) if rd.coroots()[idx] == c2 => root_perm.push(idx),
                _ => return Err(Error::NotPinned),
            }
        }
        let mut base_perm = Vec::with_capacity(rd.semisimple_rank());
        for i in 0..rd.semisimple_rank() {
            let image_root = root_perm[rd.base()[i]];
            match rd.base().iter().position(|&b| b == image_root) {
                Some(j) => base_perm.push(j),
                None => return Err(Error::NotPinned),
            }
        }
        Ok(base_perm)
    }

    pub fn stabilizes_levi(&self, rd: &BasedRootDatum, levi: &LeviSubset) -> Result<bool> {
        let perm = self.base_permutation(rd)?;
        Ok(levi.indices().iter().all(|&i| levi.contains(perm[i])))
    }

    /// Orbits of the induced base permutation restricted to a stable Levi
    /// subset, each orbit listed from its smallest representative.
    pub fn base_orbits(&self, rd: &BasedRootDatum, levi: &LeviSubset) -> Result<Vec<Vec<usize>>> {
        let perm = self.base_permutation(rd)?;
        if !levi.indices().iter().all(|&i| levi.contains(perm[i])) {
            return Err(Error::NotSigmaStable);
        }
        let mut seen = vec![false; rd.semisimple_rank()];
        let mut orbits = Vec::new();
        for &start in levi.indices() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                orbit.push(cur);
                cur = perm[cur];
            }
            orbits.push(orbit);
        }
        Ok(orbits)
    }
}

/// Galois average of the dominant representative:
/// `(1/r) * sum_i sigma^i(mu_dom)`. Requires a pinned frobenius so that the
/// canonical chamber action is the lattice action; the output is then both
/// sigma-invariant and dominant.
pub fn galois_average(fd: &FrobeniusDatum, rd: &BasedRootDatum, mu: &[Int]) -> Result<RatVec> {
    if !fd.is_pinned(rd) {
        return Err(Error::NotPinned);
    }
    let (dom, _) = dominant_representative_int(rd, mu);
    Ok(sigma_average(fd, &to_rat(&dom)))
}

/// `(1/r) * sum_{i<r} sigma^i(v)` for the full order r.
pub fn sigma_average(fd: &FrobeniusDatum, v: &[Rat]) -> RatVec {
    let mut acc = v.to_vec();
    let mut cur = v.to_vec();
    for _ in 1..fd.order() {
        cur = fd.apply_rat(&cur);
        acc = rat_add(&acc, &cur);
    }
    let inv = Rat::new(Int::from(1), Int::from(fd.order() as i64));
    rat_scale(&acc, &inv)
}

/// Partial norm `sum_{i<s} sigma^i(mu)`.
pub fn norm(fd: &FrobeniusDatum, mu: &[Int], s: usize) -> IntVec {
    let mut acc = vec![Int::from(0); mu.len()];
    let mut cur = mu.to_vec();
    for i in 0..s {
        if i > 0 {
            cur = fd.apply(&cur);
        }
        for (a, c) in acc.iter_mut().zip(&cur) {
            *a += c.clone();
        }
    }
    acc
}

/// Coinvariants of `Z^rank` under the group generated by the given
/// automorphisms: the cokernel of the stacked relation blocks `g - 1`.
pub fn coinvariants(generators: &[IntMatrix], rank: usize) -> FinAbGroup {
    let blocks: Vec<IntMatrix> = generators.iter().map(|g| g.minus_identity()).collect();
    let refs: Vec<&IntMatrix> = blocks.iter().collect();
    let stacked = if refs.is_empty() {
        Matrix::zeros(rank, 0)
    } else {
        Matrix::hstack(&refs)
    };
    AbelianQuotient::cokernel(&stacked)
}

/// Galois coinvariants of the fundamental group of a standard Levi:
/// the quotient of `X_*` by the Levi coroots and all `(g - 1)` relations,
/// computed as a single cokernel.
pub fn pi1_coinvariants(
    rd: &BasedRootDatum,
    generators: &[IntMatrix],
    levi: &LeviSubset,
) -> FinAbGroup {
    let coroots = levi.coroot_matrix(rd);
    let blocks: Vec<IntMatrix> = generators.iter().map(|g| g.minus_identity()).collect();
    let mut refs: Vec<&IntMatrix> = vec![&coroots];
    refs.extend(blocks.iter());
    AbelianQuotient::cokernel(&Matrix::hstack(&refs))
}

/// Class of `mu` in the Galois coinvariants of the fundamental group.
pub fn mu_natural(rd: &BasedRootDatum, fd: &FrobeniusDatum, mu: &[Int]) -> IntVec {
    let group = pi1_coinvariants(rd, std::slice::from_ref(fd.sigma()), &LeviSubset::full(rd));
    group.class_of(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::root_datum::weyl_orbit;
    use crate::{int_vec, rat, rat_vec};

    fn swap2() -> FrobeniusDatum {
        FrobeniusDatum::from_permutation(&[1, 0]).unwrap()
    }

    #[test]
    fn order_computation() {
        assert_eq!(swap2().order(), 2);
        assert_eq!(FrobeniusDatum::identity(3).order(), 1);
        let rot3 = FrobeniusDatum::from_permutation(&[1, 2, 0]).unwrap();
        assert_eq!(rot3.order(), 3);
        // a shear is not of finite order
        let shear = IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert!(matches!(
            FrobeniusDatum::new(shear),
            Err(Error::NotFiniteOrder(_))
        ));
    }

    #[test]
    fn galois_average_examples() {
        let rd = presets::torus(2).unwrap();
        let fd = swap2();
        assert_eq!(
            galois_average(&fd, &rd, &int_vec(&[1, 0])).unwrap(),
            vec![rat(1, 2), rat(1, 2)]
        );
        let id = FrobeniusDatum::identity(2);
        let rdgl = presets::gl(2).unwrap();
        assert_eq!(
            galois_average(&id, &rdgl, &int_vec(&[0, 1])).unwrap(),
            rat_vec(&[1, 0])
        );
        assert_eq!(
            galois_average(&fd, &rd, &int_vec(&[0, 0])).unwrap(),
            rat_vec(&[0, 0])
        );
    }

    #[test]
    fn galois_average_is_a_projector() {
        let rd = presets::gl(4).unwrap();
        let (rd_res, fd) = presets::res_split(&presets::gl(2).unwrap(), 2).unwrap();
        for (rd, fd, mu) in [
            (&rd, &FrobeniusDatum::identity(4), int_vec(&[1, 1, 0, 0])),
            (&rd_res, &fd, int_vec(&[1, 0, 0, 0])),
        ] {
            let avg = galois_average(fd, rd, &mu).unwrap();
            assert!(rd.is_dominant(&avg));
            assert_eq!(fd.apply_rat(&avg), avg, "sigma-invariance");
            assert_eq!(sigma_average(fd, &avg), avg, "idempotence");
        }
    }

    #[test]
    fn norm_examples() {
        let fd = swap2();
        assert_eq!(norm(&fd, &int_vec(&[1, 0]), 2), int_vec(&[1, 1]));
        let id = FrobeniusDatum::identity(2);
        assert_eq!(norm(&id, &int_vec(&[1, 0]), 1), int_vec(&[1, 0]));
        assert_eq!(norm(&id, &int_vec(&[2, 3]), 4), int_vec(&[8, 12]));
        assert_eq!(norm(&fd, &int_vec(&[0, 0]), 2), int_vec(&[0, 0]));
        // full norm is sigma-invariant
        let full = norm(&fd, &int_vec(&[2, -1]), 2);
        assert_eq!(fd.apply(&full), full);
    }

    #[test]
    fn coinvariant_examples() {
        let trivial = coinvariants(&[], 3);
        assert_eq!(trivial.invariant_factors(), &int_vec(&[0, 0, 0])[..]);
        let neg = coinvariants(&[IntMatrix::from_i64_rows(&[&[-1]])], 1);
        assert_eq!(neg.invariant_factors(), &[Int::from(2)]);
        let sw = coinvariants(&[swap2().sigma().clone()], 2);
        assert_eq!(sw.invariant_factors(), &[Int::from(0)]);
    }

    #[test]
    fn mu_natural_examples() {
        let rd = presets::gl(3).unwrap();
        let fd = FrobeniusDatum::identity(3);
        // class of (1,0,0) generates the free rank-one quotient
        let c = mu_natural(&rd, &fd, &int_vec(&[1, 0, 0]));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].clone().abs(), Int::from(1));
        // coroots die
        let z = mu_natural(&rd, &fd, &int_vec(&[1, -1, 0]));
        assert_eq!(z, int_vec(&[0]));
        // adjoint rank one: fundamental coweight generates Z/2
        let pgl = presets::pgl(2).unwrap();
        let fd1 = FrobeniusDatum::identity(1);
        assert_eq!(mu_natural(&pgl, &fd1, &int_vec(&[1])), int_vec(&[1]));
        assert_eq!(mu_natural(&pgl, &fd1, &int_vec(&[2])), int_vec(&[0]));
    }

    #[test]
    fn mu_natural_is_orbit_constant() {
        for (rd, fd) in [
            (presets::gl(4).unwrap(), FrobeniusDatum::identity(4)),
            (presets::gl(5).unwrap(), presets::gl_unitary_twist(5).unwrap()),
            (presets::gsp(6).unwrap(), FrobeniusDatum::identity(4)),
        ] {
            let mu = match rd.rank() {
                4 => int_vec(&[1, 1, 0, 0]),
                _ => presets::gsp_siegel_cocharacter(6).unwrap(),
            };
            let mu = if rd.rank() == 5 { int_vec(&[1, 0, 0, 0, 0]) } else { mu };
            let expected = mu_natural(&rd, &fd, &mu);
            for v in weyl_orbit(&rd, &mu).unwrap() {
                assert_eq!(mu_natural(&rd, &fd, &v), expected);
            }
        }
    }

    #[test]
    fn pinned_sigma_preserves_dominance() {
        let rd = presets::gl(4).unwrap();
        let fd = presets::gl_unitary_twist(4).unwrap();
        for mu in [int_vec(&[1, 0, 0, 0]), int_vec(&[3, 2, 1, 0])] {
            assert!(rd.is_dominant_int(&fd.apply(&mu)));
        }
    }

    #[test]
    fn not_pinned_is_detected() {
        let rd = presets::gl(2).unwrap();
        // negation alone maps the base to negative roots
        let neg = FrobeniusDatum::new(IntMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]])).unwrap();
        assert!(!neg.is_pinned(&rd));
        assert!(matches!(
            galois_average(&neg, &rd, &int_vec(&[1, 0])),
            Err(Error::NotPinned)
        ));
    }

    #[test]
    fn base_orbits_of_twists() {
        let rd = presets::gl(4).unwrap();
        let fd = presets::gl_unitary_twist(4).unwrap();
        let orbits = fd
            .base_orbits(&rd, &crate::root_datum::LeviSubset::full(&rd))
            .unwrap();
        // alpha_1 <-> alpha_3, alpha_2 fixed
        assert_eq!(orbits, vec![vec![0, 2], vec![1]]);
    }
}
