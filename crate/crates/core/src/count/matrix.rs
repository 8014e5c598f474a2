use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{consistency, Error, Result};
use crate::naf::wnaf;
use crate::optgraph::{build_full_graph, restrict_optimal, LabeledGraph};
use crate::ring::{Digit, RingElem, System};

/// Square matrix of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<BigUint>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { n, data: vec![BigUint::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.data[i * n + i] = BigUint::one();
        }
        m
    }

    pub fn from_rows<T: Copy + Into<BigUint>, const N: usize>(rows: &[[T; N]; N]) -> Self {
        Matrix { n: N, data: rows.iter().flat_map(|r| r.iter().map(|&v| v.into())).collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigUint) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigUint] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn pow(&self, k: u32) -> Matrix {
        (0..k).fold(Matrix::identity(self.n), |acc, _| &acc * self)
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[BigUint]) -> Vec<BigUint> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| &v[i] * self.get(i, j)).sum())
            .collect()
    }

    /// Entries as machine integers, for the exhaustive search.
    pub(crate) fn to_u128(&self) -> Vec<Vec<u128>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|v| u128::try_from(v).expect("small entry")).collect())
            .collect()
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// The linear representation `(e, {A_d}, eᵀ)` together with the symmetry
/// permutations `R` (unit) and, for Gauss, `C` (conjugation).
#[derive(Debug, Clone)]
pub struct MatrixFamily {
    sys: System,
    a: Vec<Matrix>,
    r: Matrix,
    c: Option<Matrix>,
}

const GAUSS_A0: [[u8; 9]; 9] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

const GAUSS_A1: [[u8; 9]; 9] = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 0, 1, 1, 0, 0, 1, 0, 0],
    [2, 0, 0, 1, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
];

const EISENSTEIN_A0: [[u8; 7]; 7] = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
];

const EISENSTEIN_A1: [[u8; 7]; 7] = [
    [1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0],
    [2, 0, 0, 1, 1, 1, 0],
    [1, 0, 0, 0, 0, 1, 0],
];

/// The 4×4 blocks of the Gauss permutations: `R = diag(1, P₁, P₁)`,
/// `C = diag(1, P₂, P₃)`.
const P1: [[u8; 4]; 4] = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]];
const P2: [[u8; 4]; 4] = [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]];
const P3: [[u8; 4]; 4] = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]];

fn block_diag(blocks: &[&[[u8; 4]; 4]]) -> Matrix {
    let n = 1 + 4 * blocks.len();
    let mut m = Matrix::zero(n);
    m.set(0, 0, BigUint::one());
    for (k, b) in blocks.iter().enumerate() {
        for i in 0..4 {
            for j in 0..4 {
                m.set(1 + 4 * k + i, 1 + 4 * k + j, b[i][j].into());
            }
        }
    }
    m
}

/// Permutation matrix with `P[v][f(v)] = 1`.
fn vertex_permutation(g: &LabeledGraph, f: impl Fn(&RingElem) -> RingElem) -> Result<Matrix> {
    let mut m = Matrix::zero(g.vertices().len());
    for (i, v) in g.vertices().iter().enumerate() {
        let j = g
            .vertex_index(&f(v))
            .ok_or_else(|| consistency(format!("vertex set not closed under symmetry at {v}")))?;
        m.set(i, j, BigUint::one());
    }
    Ok(m)
}

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(consistency(format!("matrix relation failed: {what}")))
    }
}

/// Builds `{A_d}`, `R`, `C` from G̃ and checks them against the expected
/// fixtures and symmetry relations.
pub fn build_matrices(sys: System) -> Result<MatrixFamily> {
    let g = restrict_optimal(&build_full_graph(sys)?)?;
    let n = g.vertices().len();
    let mut a = vec![Matrix::zero(n); sys.digit_count()];
    for e in g.edges() {
        let m = &mut a[e.output_digit().index()];
        let v = m.get(e.to, e.from) + 1u32;
        m.set(e.to, e.from, v);
    }
    let r = vertex_permutation(&g, |v| v.unit_mul(1))?;
    let c = match sys {
        System::Gauss => Some(vertex_permutation(&g, RingElem::conj)?),
        System::Eisenstein => None,
    };
    let fam = MatrixFamily { sys, a, r, c };
    fam.check_fixtures()?;
    fam.check_relations()?;
    Ok(fam)
}

/// The verified family, built once per system.
pub fn matrices(sys: System) -> &'static MatrixFamily {
    static GAUSS: OnceLock<MatrixFamily> = OnceLock::new();
    static EISENSTEIN: OnceLock<MatrixFamily> = OnceLock::new();
    let cell = match sys {
        System::Gauss => &GAUSS,
        System::Eisenstein => &EISENSTEIN,
    };
    cell.get_or_init(|| build_matrices(sys).expect("matrix fixtures are verified by tests"))
}

impl MatrixFamily {
    pub fn system(&self) -> System {
        self.sys
    }

    pub fn dim(&self) -> usize {
        self.r.dim()
    }

    pub fn a(&self, d: Digit) -> &Matrix {
        &self.a[d.index()]
    }

    pub fn r(&self) -> &Matrix {
        &self.r
    }

    pub fn c(&self) -> Option<&Matrix> {
        self.c.as_ref()
    }

    /// `e = (1, 0, …, 0)`.
    pub fn e(&self) -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); self.dim()];
        v[0] = BigUint::one();
        v
    }

    fn check_fixtures(&self) -> Result<()> {
        let (a0, a1) = match self.sys {
            System::Gauss => (Matrix::from_rows(&GAUSS_A0), Matrix::from_rows(&GAUSS_A1)),
            System::Eisenstein => (Matrix::from_rows(&EISENSTEIN_A0), Matrix::from_rows(&EISENSTEIN_A1)),
        };
        check(self.a(Digit::ZERO) == &a0, "A_0 fixture")?;
        check(self.a(Digit::ONE) == &a1, "A_1 fixture")?;
        if let Some(c) = &self.c {
            check(self.r == block_diag(&[&P1, &P1]), "R fixture")?;
            check(*c == block_diag(&[&P2, &P3]), "C fixture")?;
        }
        Ok(())
    }

    fn check_relations(&self) -> Result<()> {
        let sys = self.sys;
        let n = self.dim();
        let id = Matrix::identity(n);
        let rt = self.r.transpose();
        for d in sys.digits() {
            let rotated = &(&rt * self.a(d)) * &self.r;
            check(&rotated == self.a(sys.digit_unit_mul(d, 1)), "R^T A_d R = A_(ud)")?;
        }
        check(self.r.pow(sys.unit_order()) == id, "R^order = I")?;
        check(&rt * &self.r == id, "R^T R = I")?;
        if let Some(c) = &self.c {
            check(c == &c.transpose(), "C = C^T")?;
            check(c * c == id, "C^2 = I")?;
            check(&self.r * c == c * &rt, "RC = CR^T")?;
            let a0 = self.a(Digit::ZERO);
            check(&(&(c * &self.r) * a0) * c == *a0, "A_0 = C R A_0 C")?;
            for d in sys.nonzero_digits() {
                let conj = &(&(&self.r * c) * self.a(d)) * c;
                check(&conj == self.a(sys.digit_conj(d)), "A_(conj d) = R C A_d C")?;
            }
            let mut e_outer = Matrix::zero(n);
            e_outer.set(0, 0, BigUint::one());
            check(a0 * a0 == e_outer, "A_0^2 = e^T e")?;
            check(self.permutation_group().len() == 8, "|P| = 8")?;
        }
        Ok(())
    }

    /// The group generated by `R` (and `C`), listed as
    /// `I, R, R², …, C, CR, CR², …`.
    pub fn permutation_group(&self) -> Vec<Matrix> {
        let mut gens = vec![Matrix::identity(self.dim())];
        if let Some(c) = &self.c {
            gens.push(c.clone());
        }
        let mut out: Vec<Matrix> = Vec::new();
        for g in &gens {
            for k in 0..self.sys.unit_order() {
                let m = g * &self.r.pow(k);
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        out
    }

    /// `e · A_(d₁) ⋯ A_(dₙ)` for block last-letters `d₁ ⋯ dₙ`.
    pub fn product_row(&self, digits: impl IntoIterator<Item = Digit>) -> Vec<BigUint> {
        digits.into_iter().fold(self.e(), |v, d| self.a(d).left_mul(&v))
    }
}

/// Number of optimal representations of `x`, as `e A_(d₁) ⋯ A_(dₙ) eᵀ`
/// over the blocks of its W-NAF.
pub fn optimal_count(x: &RingElem) -> BigUint {
    let blocks = wnaf(x).block_decompose().expect("wnaf output is a W-NAF");
    let fam = matrices(x.ring());
    fam.product_row(blocks.blocks().iter().map(|b| b.last_digit()))[0].clone()
}

/// The vectors `t_N` that track the extremal counts.
///
/// Gauss (`N ≥ 4`): `t₄ = e A₁ A₋₁ A₋ᵢ A₋ᵢ R³`, `t_(m+1) = t_m A₁ R²`.
/// Eisenstein (`N ≥ 0`): `t₀ = e`, `t_(N+1) = t_N A₁ R` when `3 | N`, else
/// `t_N A₋₁ R`.
pub fn t_vector(sys: System, n: usize) -> Result<Vec<BigUint>> {
    let fam = matrices(sys);
    let d = |x: i64, y: i64| sys.digit_of(&RingElem::new(sys, x, y)).expect("digit");
    match sys {
        System::Gauss => {
            if n < 4 {
                return Err(Error::OutOfRange { what: "N", detail: format!("{n} < 4 for gauss t-vectors") });
            }
            let mut t = fam.product_row([d(1, 0), d(-1, 0), d(0, -1), d(0, -1)]);
            t = fam.r.pow(3).left_mul(&t);
            let step = &fam.r.pow(2);
            for _ in 4..n {
                t = step.left_mul(&fam.a(d(1, 0)).left_mul(&t));
            }
            Ok(t)
        }
        System::Eisenstein => {
            let mut t = fam.e();
            for k in 0..n {
                let digit = if k % 3 == 0 { d(1, 0) } else { d(-1, 0) };
                t = fam.r.left_mul(&fam.a(digit).left_mul(&t));
            }
            Ok(t)
        }
    }
}
