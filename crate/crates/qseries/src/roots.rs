//! Simple-root data for five finite root systems, the projection matrices
//! that fold the rank-8 system onto rank-4 and rank-2 subsystems, and exact
//! verification that those maps are idempotent self-adjoint isometries.
//!
//! All vectors are stored by their coordinates in the simple-root basis of
//! the algebra they belong to, and all arithmetic is over `Rational64`, so
//! every check in this module is exact.

use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::series::{exp, Exp, VerificationReport};
use crate::{Error, Result};

/// Static data for one algebra: Cartan matrix `A`, symmetric bilinear form
/// `B` on root coordinates, and the fundamental weights (rows, root basis).
pub struct AlgebraData {
    pub name: &'static str,
    pub cartan: Vec<Vec<i64>>,
    pub inner: Vec<Vec<Exp>>,
    pub weights: Vec<Vec<Exp>>,
}

/// A vector tagged with the algebra whose simple-root basis its coordinates
/// refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub algebra: &'static str,
    pub coords: Vec<Exp>,
}

fn rows_i(rows: &[&[i64]]) -> Vec<Vec<Exp>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Exp::from_integer(x)).collect())
        .collect()
}

fn scaled_rows(rows: &[&[i64]], den: i64) -> Vec<Vec<Exp>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| exp(x, den)).collect())
        .collect()
}

static E8: Lazy<AlgebraData> = Lazy::new(|| {
    let cartan = vec![
        vec![2, -1, 0, 0, 0, 0, 0, 0],
        vec![-1, 2, -1, 0, 0, 0, 0, 0],
        vec![0, -1, 2, -1, 0, 0, 0, 0],
        vec![0, 0, -1, 2, -1, 0, 0, 0],
        vec![0, 0, 0, -1, 2, -1, -1, 0],
        vec![0, 0, 0, 0, -1, 2, 0, 0],
        vec![0, 0, 0, 0, -1, 0, 2, -1],
        vec![0, 0, 0, 0, 0, 0, -1, 2],
    ];
    let inner = cartan
        .iter()
        .map(|r| r.iter().map(|&x| Exp::from_integer(x)).collect())
        .collect();
    AlgebraData {
        name: "E8",
        cartan,
        inner,
        weights: rows_i(&[
            &[2, 3, 4, 5, 6, 3, 4, 2],
            &[3, 6, 8, 10, 12, 6, 8, 4],
            &[4, 8, 12, 15, 18, 9, 12, 6],
            &[5, 10, 15, 20, 24, 12, 16, 8],
            &[6, 12, 18, 24, 30, 15, 20, 10],
            &[3, 6, 9, 12, 15, 8, 10, 5],
            &[4, 8, 12, 16, 20, 10, 14, 7],
            &[2, 4, 6, 8, 10, 5, 7, 4],
        ]),
    }
});

static E6: Lazy<AlgebraData> = Lazy::new(|| {
    let cartan = vec![
        vec![2, -1, 0, 0, 0, 0],
        vec![-1, 2, -1, 0, 0, 0],
        vec![0, -1, 2, -1, -1, 0],
        vec![0, 0, -1, 2, 0, 0],
        vec![0, 0, -1, 0, 2, -1],
        vec![0, 0, 0, 0, -1, 2],
    ];
    let inner = cartan
        .iter()
        .map(|r| r.iter().map(|&x| Exp::from_integer(x)).collect())
        .collect();
    AlgebraData {
        name: "E6",
        cartan,
        inner,
        weights: vec![
            scaled_rows(&[&[4, 5, 6, 3, 4, 2]], 3).remove(0),
            scaled_rows(&[&[5, 10, 12, 6, 8, 4]], 3).remove(0),
            rows_i(&[&[2, 4, 6, 3, 4, 2]]).remove(0),
            rows_i(&[&[1, 2, 3, 2, 2, 1]]).remove(0),
            scaled_rows(&[&[4, 8, 12, 6, 10, 5]], 3).remove(0),
            scaled_rows(&[&[2, 4, 6, 3, 5, 4]], 3).remove(0),
        ],
    }
});

static F4: Lazy<AlgebraData> = Lazy::new(|| AlgebraData {
    name: "F4",
    cartan: vec![
        vec![2, -1, 0, 0],
        vec![-1, 2, -1, 0],
        vec![0, -2, 2, -1],
        vec![0, 0, -1, 2],
    ],
    inner: scaled_rows(
        &[&[4, -2, 0, 0], &[-2, 4, -2, 0], &[0, -2, 2, -1], &[0, 0, -1, 2]],
        2,
    ),
    weights: rows_i(&[&[2, 3, 4, 2], &[3, 6, 8, 4], &[2, 4, 6, 3], &[1, 2, 3, 2]]),
});

static D4: Lazy<AlgebraData> = Lazy::new(|| {
    let cartan = vec![
        vec![2, -1, 0, 0],
        vec![-1, 2, -1, -1],
        vec![0, -1, 2, 0],
        vec![0, -1, 0, 2],
    ];
    let inner = cartan
        .iter()
        .map(|r| r.iter().map(|&x| Exp::from_integer(x)).collect())
        .collect();
    AlgebraData {
        name: "D4",
        cartan,
        inner,
        weights: scaled_rows(
            &[&[2, 2, 1, 1], &[2, 4, 2, 2], &[1, 2, 2, 1], &[1, 2, 1, 2]],
            2,
        ),
    }
});

static G2: Lazy<AlgebraData> = Lazy::new(|| AlgebraData {
    name: "G2",
    cartan: vec![vec![2, -1], vec![-3, 2]],
    inner: scaled_rows(&[&[6, -3], &[-3, 2]], 3),
    weights: rows_i(&[&[2, 3], &[1, 2]]),
});

/// Looks up an algebra by name: E8, E6, F4, D4, or G2.
pub fn algebra(name: &str) -> Result<&'static AlgebraData> {
    match name {
        "E8" => Ok(&E8),
        "E6" => Ok(&E6),
        "F4" => Ok(&F4),
        "D4" => Ok(&D4),
        "G2" => Ok(&G2),
        other => Err(Error::InvalidParameters(format!("unknown algebra {other}"))),
    }
}

impl AlgebraData {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn vector(&self, coords: Vec<Exp>) -> WeightVector {
        assert_eq!(coords.len(), self.rank());
        WeightVector {
            algebra: self.name,
            coords,
        }
    }

    pub fn vector_i(&self, coords: &[i64]) -> WeightVector {
        self.vector(coords.iter().map(|&x| Exp::from_integer(x)).collect())
    }

    /// Simple root `alpha_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> WeightVector {
        assert!(i >= 1 && i <= self.rank());
        let mut coords = vec![Exp::zero(); self.rank()];
        coords[i - 1] = Exp::one();
        self.vector(coords)
    }

    /// Fundamental weight `lambda_i`, 1-based.
    pub fn weight(&self, i: usize) -> WeightVector {
        assert!(i >= 1 && i <= self.rank());
        self.vector(self.weights[i - 1].clone())
    }

    fn claim(&self, v: &WeightVector) -> Result<()> {
        if v.algebra == self.name {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(
                self.name.to_string(),
                v.algebra.to_string(),
            ))
        }
    }

    /// `B(u, v)` with both vectors in this algebra's root coordinates.
    pub fn inner(&self, u: &WeightVector, v: &WeightVector) -> Result<Exp> {
        self.claim(u)?;
        self.claim(v)?;
        let mut acc = Exp::zero();
        for (i, ui) in u.coords.iter().enumerate() {
            for (j, vj) in v.coords.iter().enumerate() {
                acc += *ui * self.inner[i][j] * *vj;
            }
        }
        Ok(acc)
    }

    /// `<v, alpha_j> = 2 B(v, alpha_j) / B(alpha_j, alpha_j)`, 1-based.
    pub fn pairing(&self, v: &WeightVector, j: usize) -> Result<Exp> {
        let aj = self.simple_root(j);
        let num = self.inner(v, &aj)?;
        Ok(num * Exp::from_integer(2) / self.inner[j - 1][j - 1])
    }

    /// Reflection in the hyperplane orthogonal to `root`.
    pub fn reflect_in(&self, root: &WeightVector, v: &WeightVector) -> Result<WeightVector> {
        let c = self.inner(v, root)? * Exp::from_integer(2) / self.inner(root, root)?;
        let coords = v
            .coords
            .iter()
            .zip(root.coords.iter())
            .map(|(vi, ri)| *vi - c * *ri)
            .collect();
        Ok(self.vector(coords))
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn reflect(&self, i: usize, v: &WeightVector) -> Result<WeightVector> {
        self.reflect_in(&self.simple_root(i), v)
    }

    /// Applies a word in the simple reflections right to left, so
    /// `apply_word(&[a, b], v)` computes `s_a(s_b(v))`.
    pub fn apply_word(&self, word: &[usize], v: &WeightVector) -> Result<WeightVector> {
        let mut out = v.clone();
        for &i in word.iter().rev() {
            out = self.reflect(i, &out)?;
        }
        Ok(out)
    }
}

/// A linear map on one algebra's root coordinates, stored row-major.
pub struct Projection {
    pub name: &'static str,
    pub algebra: &'static str,
    matrix: Vec<Vec<Exp>>,
}

impl Projection {
    pub fn apply(&self, v: &WeightVector) -> Result<WeightVector> {
        let alg = algebra(self.algebra)?;
        alg.claim(v)?;
        let coords = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v.coords.iter())
                    .map(|(a, b)| *a * *b)
                    .sum()
            })
            .collect();
        Ok(alg.vector(coords))
    }

    pub fn matrix(&self) -> &[Vec<Exp>] {
        &self.matrix
    }
}

/// Identifies the image of a projection with a smaller algebra: `basis[i]`
/// (domain coordinates) is declared equal to the i-th simple root of the
/// codomain, and `apply` rewrites an image vector in that basis.
pub struct IsoMap {
    pub name: &'static str,
    pub domain: &'static str,
    pub codomain: &'static str,
    basis: Vec<Vec<Exp>>,
}

impl IsoMap {
    /// Solves `v = sum c_i basis_i` exactly; errors with `NotInImage` when
    /// the system is inconsistent.
    pub fn apply(&self, v: &WeightVector) -> Result<WeightVector> {
        let dom = algebra(self.domain)?;
        dom.claim(v)?;
        let cod = algebra(self.codomain)?;
        let coords = solve_exact(&self.basis, &v.coords).ok_or(Error::NotInImage)?;
        Ok(cod.vector(coords))
    }

    pub fn basis_vector(&self, i: usize) -> Result<WeightVector> {
        Ok(algebra(self.domain)?.vector(self.basis[i].clone()))
    }
}

/// Least-squares-free exact solve of `sum c_i columns_i = target` by Gaussian
/// elimination over the rationals; `None` when inconsistent.
fn solve_exact(columns: &[Vec<Exp>], target: &[Exp]) -> Option<Vec<Exp>> {
    let n = target.len();
    let m = columns.len();
    let mut aug: Vec<Vec<Exp>> = (0..n)
        .map(|r| {
            let mut row: Vec<Exp> = columns.iter().map(|c| c[r]).collect();
            row.push(target[r]);
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..m {
        let Some(p) = (row..n).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].recip();
        for x in aug[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col];
                for c in col..=m {
                    let head = aug[row][c];
                    aug[r][c] -= f * head;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero right-hand side; free columns
    // get coefficient zero (the bases used here are linearly independent).
    if aug[row..n].iter().any(|r| !r[m].is_zero()) {
        return None;
    }
    let mut out = vec![Exp::zero(); m];
    for (r, &c) in pivot_cols.iter().enumerate() {
        out[c] = aug[r][m];
    }
    Some(out)
}

fn matrix_rank(m: &[Vec<Exp>]) -> usize {
    let mut a: Vec<Vec<Exp>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        for x in a[rank].iter_mut() {
            *x *= inv;
        }
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..cols {
                    let head = a[rank][c];
                    a[r][c] -= f * head;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn matmul(a: &[Vec<Exp>], b: &[Vec<Exp>]) -> Vec<Vec<Exp>> {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

fn transpose(a: &[Vec<Exp>]) -> Vec<Vec<Exp>> {
    let n = a.len();
    let m = a[0].len();
    (0..m).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

/// One folding: the projection, the identification of its image with the
/// smaller algebra, a basis of its kernel, and its expected rank.
pub struct FoldingMap {
    pub projection: Projection,
    pub iso: IsoMap,
    pub kernel: Vec<Vec<Exp>>,
    pub image_rank: usize,
}

fn identity_matrix(n: usize) -> Vec<Vec<Exp>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Exp::one() } else { Exp::zero() })
                .collect()
        })
        .collect()
}

fn permutation_matrix(n: usize, perm: &dyn Fn(usize) -> usize) -> Vec<Vec<Exp>> {
    // Column c carries the image of basis vector c, 1-based permutation.
    let mut m = vec![vec![Exp::zero(); n]; n];
    for c in 1..=n {
        m[perm(c) - 1][c - 1] = Exp::one();
    }
    m
}

fn matrix_sum_scaled(parts: &[&Vec<Vec<Exp>>], scale: Exp) -> Vec<Vec<Exp>> {
    let n = parts[0].len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| parts.iter().map(|p| p[i][j]).sum::<Exp>() * scale)
                .collect()
        })
        .collect()
}

fn unit(n: usize, i: usize) -> Vec<Exp> {
    let mut v = vec![Exp::zero(); n];
    v[i - 1] = Exp::one();
    v
}

/// Builds one of the four foldings: "p1" (rank 8 onto rank 6), "p2" (rank 8
/// onto rank 4), "t" (rank 6 onto rank 4), "s" (rank 4 onto rank 2).
pub fn folding(name: &str) -> Result<FoldingMap> {
    match name {
        "p1" => {
            let mut matrix = vec![vec![Exp::zero(); 8]; 8];
            let col2 = [0, 0, 4, 5, 6, 3, 4, 2];
            for r in 0..8 {
                matrix[r][1] = exp(-col2[r], 3);
            }
            for c in 2..8 {
                matrix[c][c] = Exp::one();
            }
            Ok(FoldingMap {
                projection: Projection {
                    name: "p1",
                    algebra: "E8",
                    matrix,
                },
                iso: IsoMap {
                    name: "p1",
                    domain: "E8",
                    codomain: "E6",
                    basis: (3..=8).map(|i| unit(8, i)).collect(),
                },
                kernel: vec![unit(8, 1), rows_i(&[&[0, 3, 4, 5, 6, 3, 4, 2]]).remove(0)],
                image_rank: 6,
            })
        }
        "p2" => {
            let rows: Vec<Vec<Exp>> = vec![
                unit(8, 1),
                unit(8, 2),
                rows_i(&[&[0, 0, 1, 0, 0, 0, 0, 0]]).remove(0),
                scaled_rows(&[&[0, 0, 2, 0, 0, 0, 0, 1]], 2).remove(0),
                rows_i(&[&[0, 0, 1, 0, 0, 0, 0, 1]]).remove(0),
                scaled_rows(&[&[0, 0, 1, 0, 0, 0, 0, 1]], 2).remove(0),
                scaled_rows(&[&[0, 0, 1, 0, 0, 0, 0, 2]], 2).remove(0),
                rows_i(&[&[0, 0, 0, 0, 0, 0, 0, 1]]).remove(0),
            ];
            Ok(FoldingMap {
                projection: Projection {
                    name: "p2",
                    algebra: "E8",
                    matrix: rows,
                },
                iso: IsoMap {
                    name: "p2",
                    domain: "E8",
                    codomain: "D4",
                    basis: vec![
                        rows_i(&[&[0, 1, 2, 3, 4, 2, 3, 2]]).remove(0),
                        unit(8, 1),
                        unit(8, 2),
                        rows_i(&[&[0, 1, 2, 2, 2, 1, 1, 0]]).remove(0),
                    ],
                },
                kernel: (4..=7).map(|i| unit(8, i)).collect(),
                image_rank: 4,
            })
        }
        "t" => {
            let tau = |i: usize| match i {
                1 => 6,
                6 => 1,
                2 => 5,
                5 => 2,
                other => other,
            };
            let id = identity_matrix(6);
            let p = permutation_matrix(6, &tau);
            let matrix = matrix_sum_scaled(&[&id, &p], exp(1, 2));
            let half = exp(1, 2);
            let mut b3 = vec![Exp::zero(); 6];
            b3[1] = half;
            b3[4] = half;
            let mut b4 = vec![Exp::zero(); 6];
            b4[0] = half;
            b4[5] = half;
            Ok(FoldingMap {
                projection: Projection {
                    name: "t",
                    algebra: "E6",
                    matrix,
                },
                iso: IsoMap {
                    name: "t",
                    domain: "E6",
                    codomain: "F4",
                    basis: vec![unit(6, 4), unit(6, 3), b3, b4],
                },
                kernel: vec![
                    rows_i(&[&[1, 0, 0, 0, 0, -1]]).remove(0),
                    rows_i(&[&[0, 1, 0, 0, -1, 0]]).remove(0),
                ],
                image_rank: 4,
            })
        }
        "s" => {
            let sigma = |i: usize| match i {
                1 => 3,
                3 => 4,
                4 => 1,
                other => other,
            };
            let sigma2 = |i: usize| sigma(sigma(i));
            let id = identity_matrix(4);
            let p1 = permutation_matrix(4, &sigma);
            let p2 = permutation_matrix(4, &sigma2);
            let matrix = matrix_sum_scaled(&[&id, &p1, &p2], exp(1, 3));
            Ok(FoldingMap {
                projection: Projection {
                    name: "s",
                    algebra: "D4",
                    matrix,
                },
                iso: IsoMap {
                    name: "s",
                    domain: "D4",
                    codomain: "G2",
                    basis: vec![unit(4, 2), scaled_rows(&[&[1, 0, 1, 1]], 3).remove(0)],
                },
                kernel: vec![
                    rows_i(&[&[1, 0, -1, 0]]).remove(0),
                    rows_i(&[&[0, 0, 1, -1]]).remove(0),
                ],
                image_rank: 2,
            })
        }
        other => Err(Error::InvalidParameters(format!("unknown folding {other}"))),
    }
}

/// Gram matrix of the stated index-preserving basis inside the folded
/// algebra's weight lattice: F4 gives a rank-4 even lattice, G2 (after the
/// factor 1/2) the hexagonal plane.
pub fn mstar_gram(name: &str) -> Result<Vec<Vec<Exp>>> {
    match name {
        "F4" => {
            let alg = algebra("F4")?;
            let basis = [
                alg.vector_i(&[1, 0, 0, 0]),
                alg.vector_i(&[0, 1, 0, 0]),
                alg.vector_i(&[-1, -2, -2, -2]),
                alg.vector_i(&[1, 2, 4, 2]),
            ];
            gram_of(alg, &basis)
        }
        "G2" => {
            let alg = algebra("G2")?;
            let basis = [alg.vector_i(&[-2, -3]), alg.vector_i(&[1, 0])];
            let g = gram_of(alg, &basis)?;
            Ok(g.iter()
                .map(|r| r.iter().map(|&x| x * exp(1, 2)).collect())
                .collect())
        }
        other => Err(Error::InvalidParameters(format!(
            "no renormalized lattice for {other}"
        ))),
    }
}

fn gram_of(alg: &AlgebraData, basis: &[WeightVector]) -> Result<Vec<Vec<Exp>>> {
    basis
        .iter()
        .map(|u| basis.iter().map(|v| alg.inner(u, v)).collect())
        .collect()
}

/// Exact checks for one folding, one report per property.
pub fn check_projection(f: &FoldingMap) -> Result<Vec<VerificationReport>> {
    let dom = algebra(f.projection.algebra)?;
    let cod = algebra(f.iso.codomain)?;
    let name = f.projection.name;
    let m = &f.projection.matrix;
    let mut out = Vec::new();

    let mm = matmul(m, m);
    out.push(VerificationReport::structural(
        &format!("{name}.idempotent"),
        mm == *m,
    ));

    let bm = matmul(&dom.inner, m);
    let mtb = matmul(&transpose(m), &dom.inner);
    out.push(VerificationReport::structural(
        &format!("{name}.selfadjoint"),
        bm == mtb,
    ));

    let image_fixed = (0..f.iso.basis.len()).all(|i| {
        let b = dom.vector(f.iso.basis[i].clone());
        f.projection.apply(&b).map(|p| p == b).unwrap_or(false)
    });
    out.push(VerificationReport::structural(
        &format!("{name}.image.fixed"),
        image_fixed,
    ));

    let kernel_killed = f.kernel.iter().all(|k| {
        let v = dom.vector(k.clone());
        f.projection
            .apply(&v)
            .map(|p| p.coords.iter().all(|x| x.is_zero()))
            .unwrap_or(false)
    });
    out.push(VerificationReport::structural(
        &format!("{name}.kernel"),
        kernel_killed,
    ));

    out.push(VerificationReport::structural(
        &format!("{name}.rank"),
        matrix_rank(m) == f.image_rank,
    ));

    let mut isometry = true;
    for i in 0..f.iso.basis.len() {
        for j in 0..f.iso.basis.len() {
            let bi = dom.vector(f.iso.basis[i].clone());
            let bj = dom.vector(f.iso.basis[j].clone());
            let lhs = dom.inner(&bi, &bj)?;
            let rhs = cod.inner(&cod.simple_root(i + 1), &cod.simple_root(j + 1))?;
            isometry &= lhs == rhs;
        }
    }
    out.push(VerificationReport::structural(
        &format!("{name}.isometry"),
        isometry,
    ));
    Ok(out)
}

/// Runs every structural check in this module: Cartan/bilinear consistency
/// and weight duality per algebra, the four foldings, the reflection-group
/// facts used by the lattice aliases, and the rank-2 identification inside
/// the rank-8 weight lattice.
pub fn verify_root_systems() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();

    for name in ["E8", "E6", "F4", "D4", "G2"] {
        let alg = algebra(name)?;
        let n = alg.rank();
        let mut cartan_ok = true;
        for i in 0..n {
            for j in 0..n {
                let expect = Exp::from_integer(2) * alg.inner[i][j] / alg.inner[i][i];
                cartan_ok &= Exp::from_integer(alg.cartan[i][j]) == expect;
            }
        }
        out.push(VerificationReport::structural(
            &format!("roots.{name}.cartan"),
            cartan_ok,
        ));

        let mut dual_ok = true;
        for i in 1..=n {
            let lam = alg.weight(i);
            for j in 1..=n {
                let expect = if i == j { Exp::one() } else { Exp::zero() };
                dual_ok &= alg.pairing(&lam, j)? == expect;
            }
        }
        out.push(VerificationReport::structural(
            &format!("roots.{name}.weights"),
            dual_ok,
        ));
    }

    for name in ["p1", "p2", "t", "s"] {
        out.extend(check_projection(&folding(name)?)?);
    }

    // Reflection-group facts behind the glue-vector aliases.
    let f4 = algebra("F4")?;
    let b34 = f4.vector_i(&[0, 0, 1, 1]);
    let omega4 = f4.weight(4);
    out.push(VerificationReport::structural(
        "weyl.F4.orbit",
        f4.apply_word(&[4, 3, 2, 1, 3, 2], &b34)? == omega4,
    ));
    out.push(VerificationReport::structural(
        "weyl.F4.adjacent",
        f4.reflect(3, &f4.simple_root(4))? == b34,
    ));
    out.push(VerificationReport::structural(
        "weyl.F4.composite",
        f4.apply_word(&[4, 3, 2, 1, 3, 2, 3], &f4.simple_root(4))? == omega4,
    ));

    let g2 = algebra("G2")?;
    let short_sum = g2.vector_i(&[1, 1]);
    out.push(VerificationReport::structural(
        "weyl.G2.reflection",
        g2.reflect_in(&short_sum, &g2.weight(2))? == g2.simple_root(2),
    ));

    // The rank-2 system embeds in the rank-8 weight lattice: zeta1 matches
    // alpha1 and zeta2 matches (lambda1 - 2 alpha1) / 3 isometrically.
    let e8 = algebra("E8")?;
    let a1 = e8.simple_root(1);
    let mut z2 = e8.weight(1);
    z2.coords[0] -= Exp::from_integer(2);
    let z2 = e8.vector(z2.coords.iter().map(|&x| x / Exp::from_integer(3)).collect());
    let zeta1 = g2.simple_root(1);
    let zeta2 = g2.simple_root(2);
    let id_ok = e8.inner(&a1, &a1)? == g2.inner(&zeta1, &zeta1)?
        && e8.inner(&z2, &z2)? == g2.inner(&zeta2, &zeta2)?
        && e8.inner(&a1, &z2)? == g2.inner(&zeta1, &zeta2)?;
    out.push(VerificationReport::structural("identify.zeta", id_ok));

    // Renormalized weight-lattice Grams, pinned to their expected values.
    let f4_gram = mstar_gram("F4")?;
    out.push(VerificationReport::structural(
        "mstar.F4",
        f4_gram
            == rows_i(&[
                &[2, -1, 0, 0],
                &[-1, 2, -1, -1],
                &[0, -1, 2, 0],
                &[0, -1, 0, 2],
            ]),
    ));
    let g2_gram = mstar_gram("G2")?;
    out.push(VerificationReport::structural(
        "mstar.G2",
        g2_gram == scaled_rows(&[&[2, -1], &[-1, 2]], 2),
    ));

    Ok(out)
}
