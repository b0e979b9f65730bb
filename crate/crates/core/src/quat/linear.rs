//! Linear algebra over 2-power cyclotomic fields, used to solve quaternion
//! commutation equations exactly.

use super::cyclotomic::CycNumber;
use super::quaternion::CycQuaternion;

/// Reduced row echelon form in place; returns the pivot columns.
fn row_reduce(rows: &mut [Vec<CycNumber>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<CycNumber>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    row_reduce(&mut rows.to_vec(), ncols).len()
}

/// A basis of the null space `{v : M v = 0}`.
pub fn kernel(rows: &[Vec<CycNumber>], ncols: usize) -> Vec<Vec<CycNumber>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycNumber::zero(); ncols];
            v[f] = CycNumber::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][f];
            }
            v
        })
        .collect()
}

/// Basis (in real coordinates along `1, 𝐢, 𝐣, 𝐤`) of the real quaternions `g`
/// with `g·x = y·g` for every pair `(x, y)`.
///
/// With `y = x` this is the commutant; with `y = f(x)` the solutions are the
/// elements realizing the map `f` by conjugation, up to real scaling.
pub fn intertwiner_space(pairs: &[(CycQuaternion, CycQuaternion)]) -> Vec<[CycNumber; 4]> {
    let basis = [
        CycQuaternion::identity(),
        CycQuaternion::qi(),
        CycQuaternion::qj(),
        CycQuaternion::qk(),
    ];
    let mut rows: Vec<Vec<CycNumber>> = Vec::new();
    for (x, y) in pairs {
        // column e ↦ coordinates of e·x - y·e
        let cols: Vec<[CycNumber; 4]> = basis
            .iter()
            .map(|e| e.mul(x).sub(&y.mul(e)).coords())
            .collect();
        for r in 0..4 {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    if rows.is_empty() {
        return basis.iter().map(|e| e.coords()).collect();
    }
    kernel(&rows, 4)
        .into_iter()
        .map(|v| [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
        .collect()
}

/// Whether `q` lies on the real line spanned by `dir`.
pub fn is_parallel(q: &CycQuaternion, dir: &[CycNumber; 4]) -> bool {
    let c = q.coords();
    (0..4).all(|i| (0..4).all(|j| &c[i] * &dir[j] == &c[j] * &dir[i]))
}

/// The unit quaternion pointing along `dir`, taken with positive first
/// nonzero coordinate; `None` if the length is not expressible.
pub fn unit_on_line(dir: &[CycNumber; 4]) -> Option<CycQuaternion> {
    let lead = dir.iter().find(|c| !c.is_zero())?.inv()?;
    let v: Vec<CycNumber> = dir.iter().map(|c| c * &lead).collect();
    let norm = v.iter().fold(CycNumber::zero(), |acc, c| &acc + &(c * c));
    let scale = norm.sqrt_of_rational()?.inv()?;
    let coords = [&v[0] * &scale, &v[1] * &scale, &v[2] * &scale, &v[3] * &scale];
    Some(CycQuaternion::from_coords(&coords))
}
