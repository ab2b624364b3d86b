use crate::error::{Error, Result};
use crate::scalar::IntScalar;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub fn to_rat<T: IntScalar>(v: &[T]) -> Vec<Ratio<T>> {
    v.iter().map(|x| Ratio::from_integer(x.clone())).collect()
}

pub fn rat_zero<T: IntScalar>(n: usize) -> Vec<Ratio<T>> {
    vec![Ratio::zero(); n]
}

pub fn rat_add<T: IntScalar>(a: &[Ratio<T>], b: &[Ratio<T>]) -> Vec<Ratio<T>> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn rat_sub<T: IntScalar>(a: &[Ratio<T>], b: &[Ratio<T>]) -> Vec<Ratio<T>> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn rat_neg<T: IntScalar>(a: &[Ratio<T>]) -> Vec<Ratio<T>> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn rat_scale<T: IntScalar>(a: &[Ratio<T>], c: &Ratio<T>) -> Vec<Ratio<T>> {
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

/// Integer pairing of a character with a cocharacter.
pub fn dot<T: IntScalar>(chi: &[T], v: &[T]) -> T {
    assert_eq!(chi.len(), v.len());
    let mut acc = T::zero();
    for (a, b) in chi.iter().zip(v) {
        acc = acc + a.clone() * b.clone();
    }
    acc
}

pub fn dot_rat<T: IntScalar>(chi: &[T], v: &[Ratio<T>]) -> Ratio<T> {
    assert_eq!(chi.len(), v.len());
    let mut acc = Ratio::zero();
    for (a, b) in chi.iter().zip(v) {
        acc += Ratio::from_integer(a.clone()) * b.clone();
    }
    acc
}

/// Rank of a list of rational column vectors.
pub fn rational_rank<T: IntScalar>(columns: &[Vec<Ratio<T>>]) -> usize {
    let Some(first) = columns.first() else {
        return 0;
    };
    let dim = first.len();
    let mut a: Vec<Vec<Ratio<T>>> = (0..dim)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut rank = 0;
    for c in 0..columns.len() {
        let Some(pr) = (rank..dim).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = a[rank][c].clone();
        for x in a[rank].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        for r in 0..dim {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..columns.len() {
                    let v = a[r][j].clone() - f.clone() * a[rank][j].clone();
                    a[r][j] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Unique rational solution of `sum x_i columns[i] = target`, or `None` when
/// the target is outside the column span. The columns must be linearly
/// independent; this is asserted.
pub fn solve_exact<T: IntScalar>(
    columns: &[Vec<Ratio<T>>],
    target: &[Ratio<T>],
) -> Option<Vec<Ratio<T>>> {
    let dim = target.len();
    let k = columns.len();
    for col in columns {
        assert_eq!(col.len(), dim, "generator length mismatch");
    }
    if k == 0 {
        return if target.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // augmented system, rows indexed by ambient coordinates
    let mut a: Vec<Vec<Ratio<T>>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Ratio<T>> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut r0 = 0;
    for c in 0..k {
        let Some(pr) = (r0..dim).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(r0, pr);
        let inv = a[r0][c].clone();
        for x in a[r0].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        for r in 0..dim {
            if r != r0 && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..=k {
                    let v = a[r][j].clone() - f.clone() * a[r0][j].clone();
                    a[r][j] = v;
                }
            }
        }
        pivot_rows.push((r0, c));
        r0 += 1;
    }
    assert_eq!(pivot_rows.len(), k, "generators must be linearly independent");
    // rows without pivots must have zero rhs
    for row in a.iter().skip(r0) {
        if !row[k].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Ratio::zero(); k];
    for (r, c) in pivot_rows {
        sol[c] = a[r][k].clone();
    }
    Some(sol)
}

/// Coefficients expressing `target` as a nonnegative rational combination of
/// linearly independent generators, or `None` when it is outside the cone.
pub fn cone_coefficients<T: IntScalar>(
    target: &[Ratio<T>],
    generators: &[Vec<Ratio<T>>],
) -> Result<Option<Vec<Ratio<T>>>> {
    for g in generators {
        if g.len() != target.len() {
            return Err(Error::DimensionMismatch {
                expected: target.len(),
                got: g.len(),
            });
        }
    }
    match solve_exact(generators, target) {
        None => Ok(None),
        Some(coeffs) => {
            if coeffs.iter().all(|c| !c.is_negative()) {
                Ok(Some(coeffs))
            } else {
                Ok(None)
            }
        }
    }
}
