//! Positive-definite lattices with exact theta-series enumeration.
//!
//! `theta_enum` walks every lattice vector below the truncation order by a
//! depth-first search over the LDL decomposition of the Gram matrix, with
//! all bounds cleared to integers first so the enumeration is exact and
//! never touches floating point except to seed integer square roots. The
//! closed forms in `theta_closed` are built from entirely different
//! ingredients (theta constants and the cubic lattice sums), so agreement
//! between the two is a genuine check.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::functions::{borwein_a, psi_k, theta2, theta3, theta4};
use crate::series::{coeff, exp, Coeff, Exp, PuiseuxSeries};
use crate::{Error, Result};

/// A positive-definite Gram matrix together with its LDL decomposition:
/// `norm(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2`.
pub struct Lattice {
    gram: Vec<Vec<Exp>>,
    d: Vec<Exp>,
    mu: Vec<Vec<Exp>>,
}

impl Lattice {
    /// Validates shape, symmetry, and positive definiteness (all LDL pivots
    /// positive; a nonpositive pivot reports `IndefiniteForm`).
    pub fn new(gram: Vec<Vec<Exp>>) -> Result<Self> {
        let n = gram.len();
        if n == 0 || gram.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameters(
                "Gram matrix must be square and nonempty".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidParameters(
                        "Gram matrix must be symmetric".into(),
                    ));
                }
            }
        }
        let mut a = gram.clone();
        let mut d = Vec::with_capacity(n);
        let mut mu = vec![vec![Exp::zero(); n]; n];
        for i in 0..n {
            let piv = a[i][i];
            if piv <= Exp::zero() {
                return Err(Error::IndefiniteForm);
            }
            d.push(piv);
            for j in (i + 1)..n {
                mu[i][j] = a[i][j] / piv;
            }
            for k in (i + 1)..n {
                for l in (i + 1)..n {
                    let corr = a[i][k] * a[i][l] / piv;
                    a[k][l] -= corr;
                }
            }
        }
        Ok(Lattice { gram, d, mu })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Exp>] {
        &self.gram
    }

    /// `x^T G x` for a rational coordinate vector.
    pub fn norm(&self, x: &[Exp]) -> Exp {
        let mut acc = Exp::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, xj) in x.iter().enumerate() {
                acc += *xi * self.gram[i][j] * *xj;
            }
        }
        acc
    }
}

fn isqrt128(v: i128) -> i128 {
    if v <= 0 {
        return 0;
    }
    let mut r = (v as f64).sqrt() as i128;
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    while r * r > v {
        r -= 1;
    }
    r
}

struct ThetaDfs<'a> {
    d: &'a [i128],
    c: &'a [Vec<i128>],
    uk: &'a [i128],
    u: i128,
    budget: i128,
    xs: Vec<i128>,
    counts: BTreeMap<i128, i64>,
}

impl ThetaDfs<'_> {
    fn go(&mut self, level: isize, acc: i128) {
        if level < 0 {
            *self.counts.entry(acc).or_insert(0) += 1;
            return;
        }
        let i = level as usize;
        let rem = self.budget - acc;
        let di = self.d[i];
        let mut f = isqrt128(rem / di);
        while (f + 1) * (f + 1) * di <= rem {
            f += 1;
        }
        while f > 0 && f * f * di > rem {
            f -= 1;
        }
        let mut ti = self.uk[i];
        for j in (i + 1)..self.xs.len() {
            ti += self.c[i][j] * self.xs[j];
        }
        let lo = Integer::div_ceil(&(-f - ti), &self.u);
        let hi = Integer::div_floor(&(f - ti), &self.u);
        for x in lo..=hi {
            let e = self.u * x + ti;
            self.xs[i] = x;
            self.go(level - 1, acc + di * e * e);
        }
        self.xs[i] = 0;
    }
}

/// Theta series `sum_{x in Z^n} q^(scale * norm(x + shift))` truncated at
/// order `t`, by exact enumeration.
pub fn theta_enum(lat: &Lattice, shift: &[Exp], scale: Exp, t: Exp) -> Result<PuiseuxSeries> {
    let n = lat.rank();
    if shift.len() != n {
        return Err(Error::InvalidParameters(format!(
            "shift has {} coordinates, lattice has rank {n}",
            shift.len()
        )));
    }
    if scale <= Exp::zero() {
        return Err(Error::InvalidParameters("scale must be positive".into()));
    }

    // K_i = shift_i + sum_{j>i} mu_ij shift_j completes the square around
    // the shifted origin.
    let k: Vec<Exp> = (0..n)
        .map(|i| {
            let mut acc = shift[i];
            for j in (i + 1)..n {
                acc += lat.mu[i][j] * shift[j];
            }
            acc
        })
        .collect();

    // Clear denominators: e_i = U x_i + ... is integral, and the norm times
    // M = U^2 R is the integer sum of D_i e_i^2.
    let mut u: i64 = 1;
    for i in 0..n {
        u = u.lcm(k[i].denom());
        for j in (i + 1)..n {
            u = u.lcm(lat.mu[i][j].denom());
        }
    }
    let mut r: i64 = 1;
    for di in &lat.d {
        r = r.lcm(di.denom());
    }
    let m = u * u * r;

    let d_int: Vec<i128> = lat
        .d
        .iter()
        .map(|di| (*di * Exp::from_integer(r)).to_integer() as i128)
        .collect();
    let c_int: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (lat.mu[i][j] * Exp::from_integer(u)).to_integer() as i128)
                .collect()
        })
        .collect();
    let uk: Vec<i128> = k
        .iter()
        .map(|ki| (*ki * Exp::from_integer(u)).to_integer() as i128)
        .collect();

    // Keep every vector with scale * N / M < t, i.e. N <= ceil(t M / scale) - 1.
    let budget = (t * Exp::from_integer(m) / scale).ceil().to_integer() as i128 - 1;
    let mut terms = Vec::new();
    if budget >= 0 {
        let mut dfs = ThetaDfs {
            d: &d_int,
            c: &c_int,
            uk: &uk,
            u: u as i128,
            budget,
            xs: vec![0; n],
            counts: BTreeMap::new(),
        };
        dfs.go(n as isize - 1, 0);
        for (nval, count) in dfs.counts {
            let e = scale * Exp::new(nval as i64, m);
            terms.push((e, Coeff::from_integer(count.into())));
        }
    }
    Ok(PuiseuxSeries::from_exp_terms(terms, t))
}

/// The three lattices under study, each with its labeled coset shifts:
/// "E8" (no shifts), "D4" (three glue classes), and "A2" (the hexagonal
/// plane renormalized to minimal norm 1, two glue classes).
pub fn named_lattice(name: &str) -> Result<(Lattice, Vec<(String, Vec<Exp>)>)> {
    match name {
        "E8" => {
            let gram = crate::roots::algebra("E8")?.inner.clone();
            Ok((Lattice::new(gram)?, Vec::new()))
        }
        "D4" => {
            let gram = vec![
                vec![
                    Exp::from_integer(2),
                    Exp::from_integer(-1),
                    Exp::zero(),
                    Exp::zero(),
                ],
                vec![
                    Exp::from_integer(-1),
                    Exp::from_integer(2),
                    Exp::from_integer(-1),
                    Exp::from_integer(-1),
                ],
                vec![
                    Exp::zero(),
                    Exp::from_integer(-1),
                    Exp::from_integer(2),
                    Exp::zero(),
                ],
                vec![
                    Exp::zero(),
                    Exp::from_integer(-1),
                    Exp::zero(),
                    Exp::from_integer(2),
                ],
            ];
            let shifts = vec![
                (
                    "[1]".to_string(),
                    vec![exp(1, 2), Exp::one(), exp(1, 2), Exp::one()],
                ),
                (
                    "[2]".to_string(),
                    vec![Exp::zero(), Exp::zero(), exp(-1, 2), exp(1, 2)],
                ),
                (
                    "[3]".to_string(),
                    vec![exp(1, 2), Exp::one(), Exp::one(), exp(1, 2)],
                ),
            ];
            Ok((Lattice::new(gram)?, shifts))
        }
        "A2" => {
            let gram = vec![vec![Exp::one(), exp(-1, 2)], vec![exp(-1, 2), Exp::one()]];
            let shifts = vec![
                ("[1]".to_string(), vec![exp(1, 3), exp(2, 3)]),
                ("[2]".to_string(), vec![exp(2, 3), exp(1, 3)]),
            ];
            Ok((Lattice::new(gram)?, shifts))
        }
        other => Err(Error::InvalidParameters(format!("unknown lattice {other}"))),
    }
}

/// Closed forms for the named lattice theta series and their coset classes,
/// built from theta constants and the hexagonal lattice sums.
pub fn theta_closed(name: &str, t: Exp) -> Result<PuiseuxSeries> {
    let half = coeff(1, 2);
    let s = match name {
        "E8" => theta2(t)
            .pow(8)
            .add(&theta3(t).pow(8))
            .add(&theta4(t).pow(8))
            .scale(&half),
        "D4" => theta3(t).pow(4).add(&theta4(t).pow(4)).scale(&half),
        "D4[1]" | "D4[3]" => theta2(t).pow(4).scale(&half),
        "D4[2]" => theta3(t).pow(4).sub(&theta4(t).pow(4)).scale(&half),
        "A2" => borwein_a(t),
        "A2[1]" | "A2[2]" => {
            let three = Exp::from_integer(3);
            theta2(t)
                .mul(&psi_k(6, t / three).substitute(three))
                .add(&theta3(t).mul(&psi_k(3, t / three).substitute(three)))
        }
        other => {
            return Err(Error::InvalidParameters(format!(
                "no closed theta form named {other}"
            )))
        }
    };
    Ok(s)
}

fn isqrt64(v: i64) -> i64 {
    isqrt128(v as i128) as i64
}

fn shell_rec(
    g: &[Vec<i64>],
    bounds: &[i64],
    level: usize,
    qacc: i64,
    p: &mut [i64; 8],
    target: i64,
    count: &mut i64,
) {
    if level == 8 {
        if qacc == target {
            *count += 1;
        }
        return;
    }
    let b = bounds[level];
    for c in -b..=b {
        let q2 = qacc + g[level][level] * c * c + 2 * c * p[level];
        for j in (level + 1)..8 {
            p[j] += g[j][level] * c;
        }
        shell_rec(g, bounds, level + 1, q2, p, target, count);
        for j in (level + 1)..8 {
            p[j] -= g[j][level] * c;
        }
    }
}

/// Independent count of rank-8 lattice vectors of the given norm by a plain
/// box scan: each coordinate is bounded by Cauchy-Schwarz against the
/// corresponding fundamental weight, and every tuple in the box is tested.
/// Deliberately does no pruning so it shares nothing with `theta_enum`.
pub fn e8_shell_count(norm: i64) -> i64 {
    assert!(norm >= 0);
    let g: Vec<Vec<i64>> = crate::roots::algebra("E8")
        .expect("rank-8 algebra is built in")
        .cartan
        .clone();
    // Squared norms of the fundamental weights.
    let weight_norms = [2i64, 6, 12, 20, 30, 8, 14, 4];
    let bounds: Vec<i64> = weight_norms.iter().map(|w| isqrt64(norm * w)).collect();
    let mut count = 0;
    let mut partial = [0i64; 8];
    shell_rec(&g, &bounds, 0, 0, &mut partial, norm, &mut count);
    count
}
