//! Classical-group presets and combinators producing based root data.
//!
//! Conventions, per preset:
//! - `GL(n)`: `X_* = Z^n`, roots `e_i - e_j`, dominant means nonincreasing
//!   coordinates.
//! - `SL(n)`: `X_*` is the coroot lattice in the simple-coroot basis, `X^*`
//!   the weight lattice in the dual basis; root coordinates are Cartan rows.
//! - `PGL(n)`: the dual picture, `X^*` the root lattice in the simple-root
//!   basis, `X_*` the coweight lattice.
//! - `Sp(2g)`: `X_* = Z^g`, type C roots, dominant means nonincreasing and
//!   nonnegative coordinates.
//! - `GSp(2g)`: `X_* = Z^{g+1}` with coordinates `(a_1, ..., a_g, c)`, the
//!   last being the similitude cocharacter; the 2g standard weights are
//!   `a_i` and `c - a_i`. Dominant means `a_1 >= ... >= a_g >= c/2`.
//! - `Torus(d)`: no roots.
//!
//! `res_split` models restriction of scalars along an unramified degree-f
//! extension of a split datum: the f-fold product with the block-rotation
//! frobenius.

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusDatum;
use crate::root_datum::BasedRootDatum;
use crate::{Int, IntMatrix, IntVec};

fn e(rank: usize, i: usize, sign: i64) -> IntVec {
    let mut v = vec![Int::from(0); rank];
    v[i] = Int::from(sign);
    v
}

fn e2(rank: usize, i: usize, si: i64, j: usize, sj: i64) -> IntVec {
    let mut v = vec![Int::from(0); rank];
    v[i] = Int::from(si);
    v[j] = Int::from(sj);
    v
}

/// General linear group of rank `n`.
pub fn gl(n: usize) -> Result<BasedRootDatum> {
    if n == 0 {
        return Err(Error::BadParameter("GL rank must be positive".into()));
    }
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut base = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if j == i + 1 {
                base.push(roots.len());
            }
            roots.push(e2(n, i, 1, j, -1));
            coroots.push(e2(n, i, 1, j, -1));
        }
    }
    BasedRootDatum::new(n, roots, coroots, base)
}

fn a_type_cartan(m: usize) -> Vec<Vec<Int>> {
    let mut c = vec![vec![Int::from(0); m]; m];
    for i in 0..m {
        c[i][i] = Int::from(2);
        if i + 1 < m {
            c[i][i + 1] = Int::from(-1);
            c[i + 1][i] = Int::from(-1);
        }
    }
    c
}

/// Special linear group: cocharacters are the coroot lattice.
pub fn sl(n: usize) -> Result<BasedRootDatum> {
    if n < 2 {
        return Err(Error::BadParameter("SL rank must be at least 2".into()));
    }
    let m = n - 1;
    let cartan = a_type_cartan(m);
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut base = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (lo, hi, sign) = if i < j { (i, j, 1i64) } else { (j, i, -1) };
            let mut root = vec![Int::from(0); m];
            let mut coroot = vec![Int::from(0); m];
            for k in lo..hi {
                for (t, rt) in root.iter_mut().enumerate() {
                    *rt += Int::from(sign) * cartan[k][t].clone();
                }
                coroot[k] += Int::from(sign);
            }
            if i < j && j == i + 1 {
                base.push(roots.len());
            }
            roots.push(root);
            coroots.push(coroot);
        }
    }
    BasedRootDatum::new(m, roots, coroots, base)
}

/// Projective linear group: cocharacters are the coweight lattice.
pub fn pgl(n: usize) -> Result<BasedRootDatum> {
    if n < 2 {
        return Err(Error::BadParameter("PGL rank must be at least 2".into()));
    }
    let m = n - 1;
    let cartan = a_type_cartan(m);
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut base = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (lo, hi, sign) = if i < j { (i, j, 1i64) } else { (j, i, -1) };
            let mut root = vec![Int::from(0); m];
            let mut coroot = vec![Int::from(0); m];
            for k in lo..hi {
                root[k] += Int::from(sign);
                for (t, ct) in coroot.iter_mut().enumerate() {
                    *ct += Int::from(sign) * cartan[k][t].clone();
                }
            }
            if i < j && j == i + 1 {
                base.push(roots.len());
            }
            roots.push(root);
            coroots.push(coroot);
        }
    }
    BasedRootDatum::new(m, roots, coroots, base)
}

/// Symplectic group `Sp_2g` (type C, simply connected), rank `g` lattice.
pub fn sp(two_g: usize) -> Result<BasedRootDatum> {
    if two_g == 0 || two_g % 2 != 0 {
        return Err(Error::BadParameter("Sp parameter must be even and positive".into()));
    }
    let g = two_g / 2;
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut base = Vec::new();
    for i in 0..g {
        for j in 0..g {
            if i == j {
                continue;
            }
            if j == i + 1 {
                base.push(roots.len());
            }
            roots.push(e2(g, i, 1, j, -1));
            coroots.push(e2(g, i, 1, j, -1));
        }
    }
    for i in 0..g {
        for j in i + 1..g {
            roots.push(e2(g, i, 1, j, 1));
            coroots.push(e2(g, i, 1, j, 1));
            roots.push(e2(g, i, -1, j, -1));
            coroots.push(e2(g, i, -1, j, -1));
        }
    }
    for i in 0..g {
        if i == g - 1 {
            base.push(roots.len());
        }
        let mut long = e(g, i, 2);
        roots.push(long.clone());
        coroots.push(e(g, i, 1));
        long[i] = Int::from(-2);
        roots.push(long);
        coroots.push(e(g, i, -1));
    }
    BasedRootDatum::new(g, roots, coroots, base)
}

/// Symplectic similitude group `GSp_2g`, rank `g + 1` lattice.
pub fn gsp(two_g: usize) -> Result<BasedRootDatum> {
    if two_g == 0 || two_g % 2 != 0 {
        return Err(Error::BadParameter("GSp parameter must be even and positive".into()));
    }
    let g = two_g / 2;
    let rank = g + 1;
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut base = Vec::new();
    // short roots chi_i - chi_j
    for i in 0..g {
        for j in 0..g {
            if i == j {
                continue;
            }
            if j == i + 1 {
                base.push(roots.len());
            }
            roots.push(e2(rank, i, 1, j, -1));
            coroots.push(e2(rank, i, 1, j, -1));
        }
    }
    // short roots +-(chi_i + chi_j - eta)
    for i in 0..g {
        for j in i + 1..g {
            let mut r = e2(rank, i, 1, j, 1);
            r[g] = Int::from(-1);
            roots.push(r);
            coroots.push(e2(rank, i, 1, j, 1));
            let mut r = e2(rank, i, -1, j, -1);
            r[g] = Int::from(1);
            roots.push(r);
            coroots.push(e2(rank, i, -1, j, -1));
        }
    }
    // long roots +-(2 chi_i - eta)
    for i in 0..g {
        if i == g - 1 {
            base.push(roots.len());
        }
        let mut r = e(rank, i, 2);
        r[g] = Int::from(-1);
        roots.push(r);
        coroots.push(e(rank, i, 1));
        let mut r = e(rank, i, -2);
        r[g] = Int::from(1);
        roots.push(r);
        coroots.push(e(rank, i, -1));
    }
    BasedRootDatum::new(rank, roots, coroots, base)
}

/// Split torus of the given rank.
pub fn torus(rank: usize) -> Result<BasedRootDatum> {
    BasedRootDatum::new(rank, Vec::new(), Vec::new(), Vec::new())
}

/// The Siegel cocharacter of `GSp_2g`: weights of the standard representation
/// are 0 and 1, each with multiplicity g.
pub fn gsp_siegel_cocharacter(two_g: usize) -> Result<IntVec> {
    if two_g == 0 || two_g % 2 != 0 {
        return Err(Error::BadParameter("GSp parameter must be even and positive".into()));
    }
    let g = two_g / 2;
    Ok(vec![Int::from(1); g + 1])
}

/// The 2g weights of the standard representation of `GSp_2g`, as characters.
pub fn gsp_standard_weights(two_g: usize) -> Result<Vec<IntVec>> {
    if two_g == 0 || two_g % 2 != 0 {
        return Err(Error::BadParameter("GSp parameter must be even and positive".into()));
    }
    let g = two_g / 2;
    let rank = g + 1;
    let mut out = Vec::new();
    for i in 0..g {
        out.push(e(rank, i, 1));
    }
    for i in (0..g).rev() {
        let mut w = e(rank, g, 1);
        w[i] = Int::from(-1);
        out.push(w);
    }
    Ok(out)
}

/// f-fold product of a datum with itself, with roots embedded blockwise.
pub fn product_power(inner: &BasedRootDatum, f: usize) -> Result<BasedRootDatum> {
    if f == 0 {
        return Err(Error::BadParameter("product power must be positive".into()));
    }
    let d = inner.rank();
    let rank = d * f;
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut base = Vec::new();
    let embed = |v: &IntVec, block: usize| -> IntVec {
        let mut out = vec![Int::from(0); rank];
        out[block * d..(block + 1) * d].clone_from_slice(v);
        out
    };
    for block in 0..f {
        for (k, root) in inner.roots().iter().enumerate() {
            if inner.base().contains(&k) {
                base.push(roots.len());
            }
            roots.push(embed(root, block));
            coroots.push(embed(&inner.coroots()[k], block));
        }
    }
    BasedRootDatum::new(rank, roots, coroots, base)
}

/// Restriction of scalars of a split datum along an unramified extension of
/// degree `f`: the f-fold product together with its block-rotation frobenius.
pub fn res_split(inner: &BasedRootDatum, f: usize) -> Result<(BasedRootDatum, FrobeniusDatum)> {
    let rd = product_power(inner, f)?;
    let d = inner.rank();
    let mut sigma = IntMatrix::zeros(d * f, d * f);
    for block in 0..f {
        let next = (block + 1) % f;
        for i in 0..d {
            sigma.set(next * d + i, block * d + i, Int::from(1));
        }
    }
    let fd = FrobeniusDatum::new(sigma)?;
    Ok((rd, fd))
}

/// The order-two pinned twist of `GL(n)` sending `a_i` to `-a_{n+1-i}`
/// (a quasi-split unitary-group shape).
pub fn gl_unitary_twist(n: usize) -> Result<FrobeniusDatum> {
    if n == 0 {
        return Err(Error::BadParameter("GL rank must be positive".into()));
    }
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, n - 1 - i, Int::from(-1));
    }
    FrobeniusDatum::new(m)
}

/// Parse a preset tag such as `GL(3)`, `GSp(4)`, `Torus(2)`.
pub fn by_name(tag: &str) -> Result<BasedRootDatum> {
    let tag = tag.trim();
    let (name, rest) = tag
        .split_once('(')
        .ok_or_else(|| Error::UnknownPreset(tag.to_string()))?;
    let arg = rest
        .strip_suffix(')')
        .ok_or_else(|| Error::UnknownPreset(tag.to_string()))?;
    let n: usize = arg
        .trim()
        .parse()
        .map_err(|_| Error::BadParameter(format!("bad parameter in `{tag}`")))?;
    match name.trim() {
        "GL" => gl(n),
        "SL" => sl(n),
        "PGL" => pgl(n),
        "Sp" => sp(n),
        "GSp" => gsp(n),
        "Torus" => torus(n),
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}
