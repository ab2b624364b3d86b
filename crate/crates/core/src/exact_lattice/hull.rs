use crate::scalar::IntScalar;
use num_rational::Ratio;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// Exact membership of a rational point in the convex hull of integer
/// vertices, decided by phase-one simplex over the rationals with Bland's
/// rule (so termination is unconditional).
pub fn hull_contains<T: IntScalar>(vertices: &[Vec<T>], point: &[Ratio<T>]) -> bool {
    assert!(!vertices.is_empty(), "hull of an empty vertex set");
    let dim = point.len();
    for v in vertices {
        assert_eq!(v.len(), dim, "vertex dimension mismatch");
    }
    // feasibility of: sum l_j v_j = point, sum l_j = 1, l >= 0
    let m = dim + 1;
    let n = vertices.len();
    let mut cols: Vec<Vec<Ratio<T>>> = Vec::with_capacity(n);
    for v in vertices {
        let mut col: Vec<Ratio<T>> = v.iter().map(|x| Ratio::from_integer(x.clone())).collect();
        col.push(Ratio::one());
        cols.push(col);
    }
    let mut rhs: Vec<Ratio<T>> = point.to_vec();
    rhs.push(Ratio::one());
    simplex_feasible(&cols, &mut rhs, m, n)
}

fn simplex_feasible<T: IntScalar>(
    cols: &[Vec<Ratio<T>>],
    rhs: &mut [Ratio<T>],
    m: usize,
    n: usize,
) -> bool {
    // tableau: m constraint rows, one cost row; columns = n originals,
    // m artificials, rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Ratio<T>>> = vec![vec![Ratio::zero(); width]; m + 1];
    for i in 0..m {
        let flip = rhs[i] < Ratio::zero();
        for (j, col) in cols.iter().enumerate() {
            t[i][j] = if flip { -col[i].clone() } else { col[i].clone() };
        }
        t[i][n + i] = Ratio::one();
        t[i][width - 1] = if flip { -rhs[i].clone() } else { rhs[i].clone() };
    }
    // phase-one objective: minimize the sum of artificials
    for j in 0..n {
        let mut s = Ratio::zero();
        for row in t.iter().take(m) {
            s += row[j].clone();
        }
        t[m][j] = -s;
    }
    let mut z = Ratio::zero();
    for row in t.iter().take(m) {
        z += row[width - 1].clone();
    }
    t[m][width - 1] = -z;

    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        // Bland: entering column is the smallest index with negative cost
        let Some(enter) = (0..n + m).find(|&j| t[m][j] < Ratio::zero()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][enter] > Ratio::zero() {
                let ratio = t[i][width - 1].clone() / t[i][enter].clone();
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cur = t[l][width - 1].clone() / t[l][enter].clone();
                        ratio < cur || (ratio == cur && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            // phase-one objective is bounded below by zero
            unreachable!("phase-one simplex cannot be unbounded");
        };
        let piv = t[l][enter].clone();
        for x in t[l].iter_mut() {
            *x = x.clone() / piv.clone();
        }
        for i in 0..=m {
            if i != l && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let v = t[i][j].clone() - f.clone() * t[l][j].clone();
                    t[i][j] = v;
                }
            }
        }
        basis[l] = enter;
    }
    t[m][width - 1].is_zero()
}

/// All integer points of the convex hull of the given integer vertices,
/// enumerated over the bounding box and tested exactly; sorted output.
pub fn lattice_points_in_hull<T: IntScalar>(vertices: &[Vec<T>]) -> Vec<Vec<T>>
where
    T: Ord,
{
    assert!(!vertices.is_empty(), "hull of an empty vertex set");
    let dim = vertices[0].len();
    let vertex_set: BTreeSet<Vec<T>> = vertices.iter().cloned().collect();
    if dim == 0 {
        return vec![Vec::new()];
    }
    let mut lo = vertices[0].clone();
    let mut hi = vertices[0].clone();
    for v in vertices {
        for (i, x) in v.iter().enumerate() {
            if *x < lo[i] {
                lo[i] = x.clone();
            }
            if *x > hi[i] {
                hi[i] = x.clone();
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut cursor = lo.clone();
    'scan: loop {
        let inside = vertex_set.contains(&cursor) || {
            let p: Vec<Ratio<T>> = cursor.iter().map(|x| Ratio::from_integer(x.clone())).collect();
            hull_contains(vertices, &p)
        };
        if inside {
            out.insert(cursor.clone());
        }
        // odometer step over the box
        for i in (0..dim).rev() {
            if cursor[i] < hi[i] {
                cursor[i] = cursor[i].clone() + T::one();
                for (j, c) in cursor.iter_mut().enumerate().skip(i + 1) {
                    *c = lo[j].clone();
                }
                continue 'scan;
            }
        }
        break;
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int_vec, rat_vec, Int};

    fn pts(vs: &[&[i64]]) -> Vec<Vec<Int>> {
        vs.iter().map(|v| int_vec(v)).collect()
    }

    #[test]
    fn segment_without_interior_point() {
        let vs = pts(&[&[1, 0], &[0, 1]]);
        assert_eq!(lattice_points_in_hull(&vs), pts(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn segment_with_midpoint() {
        let vs = pts(&[&[2, 0], &[0, 2]]);
        assert_eq!(
            lattice_points_in_hull(&vs),
            pts(&[&[0, 2], &[1, 1], &[2, 0]])
        );
    }

    #[test]
    fn singleton() {
        let vs = pts(&[&[0, 0]]);
        assert_eq!(lattice_points_in_hull(&vs), pts(&[&[0, 0]]));
    }

    #[test]
    fn triangle_contains_interior() {
        let vs = pts(&[&[0, 0], &[3, 0], &[0, 3]]);
        let got = lattice_points_in_hull(&vs);
        assert_eq!(got.len(), 10);
        assert!(got.contains(&int_vec(&[1, 1])));
        assert!(!got.contains(&int_vec(&[2, 2])));
    }

    #[test]
    fn rational_point_membership() {
        let vs = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        let inside = vec![crate::rat(1, 3), crate::rat(1, 3)];
        let outside = vec![crate::rat(2, 3), crate::rat(2, 3)];
        assert!(hull_contains(&vs, &inside));
        assert!(!hull_contains(&vs, &outside));
        assert!(hull_contains(&vs, &rat_vec(&[0, 0])));
    }

    // Independent oracle: Caratheodory search over all (dim+1)-subsets.
    fn contains_by_caratheodory(vertices: &[Vec<Int>], p: &[Int]) -> bool {
        use crate::exact_lattice::{solve_exact, to_rat};
        use num_traits::One;
        let dim = p.len();
        let k = dim + 1;
        let n = vertices.len();
        let mut idx: Vec<usize> = (0..k.min(n)).collect();
        loop {
            // affine system: sum l_i v_i = p, sum l_i = 1, l free sign, then check >= 0
            let cols: Vec<Vec<crate::Rat>> = idx
                .iter()
                .map(|&i| {
                    let mut c = to_rat(&vertices[i]);
                    c.push(crate::Rat::one());
                    c
                })
                .collect();
            let mut target = to_rat(p);
            target.push(crate::Rat::one());
            // columns of a degenerate simplex are affinely dependent; skipped
            if let Some(sol) = checked_solve(&cols, &target) {
                if sol.iter().all(|c| !num_traits::Signed::is_negative(c)) {
                    return true;
                }
            }
            // next combination
            let mut i = idx.len();
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if idx[i] + (idx.len() - i) <= n - 1 {
                    idx[i] += 1;
                    for j in i + 1..idx.len() {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }

        fn checked_solve(
            cols: &[Vec<crate::Rat>],
            target: &[crate::Rat],
        ) -> Option<Vec<crate::Rat>> {
            // solve_exact asserts independence; emulate a tolerant variant by
            // detecting dependence first via rank computation
            let k = cols.len();
            let dim = target.len();
            let mut a: Vec<Vec<crate::Rat>> = (0..dim)
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                .collect();
            let mut rank = 0;
            for c in 0..k {
                if let Some(pr) = (rank..dim).find(|&r| !a[r][c].is_zero()) {
                    a.swap(rank, pr);
                    let inv = a[rank][c].clone();
                    for x in a[rank].iter_mut() {
                        *x = x.clone() / inv.clone();
                    }
                    for r in 0..dim {
                        if r != rank && !a[r][c].is_zero() {
                            let f = a[r][c].clone();
                            for j in 0..k {
                                let v = a[r][j].clone() - f.clone() * a[rank][j].clone();
                                a[r][j] = v;
                            }
                        }
                    }
                    rank += 1;
                }
            }
            if rank < k {
                return None;
            }
            solve_exact(cols, target)
        }
    }

    #[test]
    fn agrees_with_caratheodory_oracle() {
        use rand::prelude::*;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let dim = rng.gen_range(1..=3usize);
            let nverts = rng.gen_range(1..=6usize);
            let vertices: Vec<Vec<Int>> = (0..nverts)
                .map(|_| (0..dim).map(|_| Int::from(rng.gen_range(-3i64..=3))).collect())
                .collect();
            let fast = lattice_points_in_hull(&vertices);
            // brute force box scan with the oracle
            let mut lo = vec![i64::MAX; dim];
            let mut hi = vec![i64::MIN; dim];
            for v in &vertices {
                for (i, x) in v.iter().enumerate() {
                    let xi = i64::try_from(x).unwrap();
                    lo[i] = lo[i].min(xi);
                    hi[i] = hi[i].max(xi);
                }
            }
            let mut slow = Vec::new();
            let mut counter = lo.clone();
            'outer: loop {
                let p: Vec<Int> = counter.iter().map(|&x| Int::from(x)).collect();
                if contains_by_caratheodory(&vertices, &p) {
                    slow.push(p);
                }
                for i in (0..dim).rev() {
                    if counter[i] < hi[i] {
                        counter[i] += 1;
                        for j in i + 1..dim {
                            counter[j] = lo[j];
                        }
                        continue 'outer;
                    }
                }
                break;
            }
            slow.sort();
            assert_eq!(fast, slow, "vertices {:?}", vertices);
        }
    }
}
