use super::matrix::{smith_normal_form, Matrix};
use crate::scalar::IntScalar;



/// Finitely generated abelian group presented as a quotient of an ambient
/// lattice `Z^n`, recorded by invariant factors `d_1 | d_2 | ...` (a zero
/// encodes a free factor, and zeros come last) together with the projection
/// matrix taking an ambient vector to its factor coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianQuotient<T> {
    invariant_factors: Vec<T>,
    projection: Matrix<T>,
}

impl<T: IntScalar> AbelianQuotient<T> {
    /// The cokernel `Z^rows / column-span(m)`.
    pub fn cokernel(m: &Matrix<T>) -> Self {
        let s = smith_normal_form(m);
        let lim = m.rows().min(m.cols());
        let mut factors = Vec::new();
        let mut rows = Vec::new();
        for i in 0..m.rows() {
            let d = if i < lim { s.d.at(i, i).clone() } else { T::zero() };
            if d.is_one() {
                continue;
            }
            factors.push(d);
            rows.push(s.u.row(i).to_vec());
        }
        AbelianQuotient {
            invariant_factors: factors,
            projection: Matrix::from_rows_with_width(&rows, m.rows()),
        }
    }

    /// The free group `Z^n` (cokernel of the empty relation set).
    pub fn free(n: usize) -> Self {
        AbelianQuotient {
            invariant_factors: vec![T::zero(); n],
            projection: Matrix::identity(n),
        }
    }

    pub fn invariant_factors(&self) -> &[T] {
        &self.invariant_factors
    }

    pub fn projection(&self) -> &Matrix<T> {
        &self.projection
    }

    pub fn ambient_rank(&self) -> usize {
        self.projection.cols()
    }

    pub fn num_factors(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Cardinality for finite groups, `None` when a free factor is present.
    pub fn order(&self) -> Option<T> {
        if !self.is_finite() {
            return None;
        }
        let mut acc = T::one();
        for d in &self.invariant_factors {
            acc = acc * d.clone();
        }
        Some(acc)
    }

    /// Canonical coordinates of the class of an ambient vector: each torsion
    /// coordinate reduced into `[0, d)`, free coordinates kept as-is.
    pub fn class_of(&self, v: &[T]) -> Vec<T> {
        self.reduce(self.projection.mul_vec(v))
    }

    pub fn reduce(&self, coords: Vec<T>) -> Vec<T> {
        assert_eq!(coords.len(), self.num_factors());
        coords
            .into_iter()
            .zip(&self.invariant_factors)
            .map(|(c, d)| if d.is_zero() { c } else { c.mod_floor(d) })
            .collect()
    }

    pub fn add(&self, a: &[T], b: &[T]) -> Vec<T> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect())
    }

    pub fn neg(&self, a: &[T]) -> Vec<T> {
        self.reduce(a.iter().map(|x| T::zero() - x.clone()).collect())
    }

    pub fn zero_class(&self) -> Vec<T> {
        vec![T::zero(); self.num_factors()]
    }

    pub fn is_zero_class(&self, coords: &[T]) -> bool {
        coords.iter().all(|c| c.is_zero())
    }

    /// A class is torsion exactly when its free coordinates vanish.
    pub fn is_torsion_class(&self, coords: &[T]) -> bool {
        coords
            .iter()
            .zip(&self.invariant_factors)
            .all(|(c, d)| !d.is_zero() || c.is_zero())
    }

    /// All canonical coordinate tuples; `None` for infinite groups.
    pub fn elements(&self) -> Option<Vec<Vec<T>>> {
        if !self.is_finite() {
            return None;
        }
        let mut out: Vec<Vec<T>> = vec![Vec::new()];
        for d in &self.invariant_factors {
            let mut next = Vec::new();
            for prefix in &out {
                let mut k = T::zero();
                while &k < d {
                    let mut e = prefix.clone();
                    e.push(k.clone());
                    next.push(e);
                    k = k + T::one();
                }
            }
            out = next;
        }
        Some(out)
    }
}

impl<T: IntScalar> Matrix<T> {
    /// `from_rows` that tolerates an empty row list by taking an explicit width.
    pub fn from_rows_with_width(rows: &[Vec<T>], width: usize) -> Self {
        if rows.is_empty() {
            return Matrix::zeros(0, width);
        }
        Matrix::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int_vec, Int, IntMatrix};

    fn factors_of(g: &AbelianQuotient<Int>) -> Vec<i64> {
        g.invariant_factors()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn cokernel_of_swap_minus_one() {
        // (sigma - 1) for the coordinate swap on Z^2: free of rank 1
        let m = IntMatrix::from_i64_rows(&[&[-1, 1], &[1, -1]]);
        let g = AbelianQuotient::cokernel(&m);
        assert_eq!(factors_of(&g), vec![0]);
    }

    #[test]
    fn cokernel_of_negation_on_z() {
        let m = IntMatrix::from_i64_rows(&[&[-2]]);
        let g = AbelianQuotient::cokernel(&m);
        assert_eq!(factors_of(&g), vec![2]);
        assert_eq!(g.order(), Some(Int::from(2)));
    }

    #[test]
    fn cokernel_of_zero_map() {
        let m = IntMatrix::zeros(3, 3);
        let g = AbelianQuotient::cokernel(&m);
        assert_eq!(factors_of(&g), vec![0, 0, 0]);
        assert!(!g.is_finite());
    }

    #[test]
    fn classes_reduce_canonically() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let g = AbelianQuotient::cokernel(&m);
        // Z/2 x Z/3 presented as Z/6 after SNF
        assert_eq!(factors_of(&g), vec![6]);
        let a = g.class_of(&int_vec(&[1, 1]));
        let five = g.class_of(&int_vec(&[-1, -1]));
        assert_eq!(g.add(&a, &five), g.zero_class());
    }

    #[test]
    fn projection_kills_relations() {
        let m = IntMatrix::from_i64_rows(&[&[4, 2], &[0, 6]]);
        let g = AbelianQuotient::cokernel(&m);
        for c in 0..m.cols() {
            let class = g.class_of(&m.column(c));
            assert!(g.is_zero_class(&class), "relation column must map to zero");
        }
    }

    #[test]
    fn cokernel_cardinality_is_abs_det_exhaustive_2x2() {
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for c in -3i64..=3 {
                    for d in -3i64..=3 {
                        let m = IntMatrix::from_i64_rows(&[&[a, b], &[c, d]]);
                        let det = (a * d - b * c).abs();
                        let g = AbelianQuotient::cokernel(&m);
                        if det == 0 {
                            assert!(!g.is_finite());
                        } else {
                            assert_eq!(g.order(), Some(Int::from(det)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn element_enumeration_matches_order() {
        let m = IntMatrix::from_i64_rows(&[&[2, 1], &[0, 4]]);
        let g = AbelianQuotient::cokernel(&m);
        let els = g.elements().unwrap();
        assert_eq!(Int::from(els.len()), g.order().unwrap());
    }
}
