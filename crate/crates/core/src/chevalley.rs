//! Chevalley-basis Lie algebras reduced mod 2.
//!
//! Basis order: `h_1..h_n`, then `e_γ` for the roots in [`RootSystem::roots`]
//! order. All structure constants live in one dense table of XOR masks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::rootdata::{Family, Root, RootSystem, SimpleType};

pub type Element = Gf2Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IsogenyKind {
    #[serde(rename = "SC")]
    SimplyConnected,
    #[serde(rename = "Ad")]
    Adjoint,
    SO,
    HSpin,
}

impl IsogenyKind {
    pub const ALL: [IsogenyKind; 4] = [
        IsogenyKind::SimplyConnected,
        IsogenyKind::Adjoint,
        IsogenyKind::SO,
        IsogenyKind::HSpin,
    ];

    pub fn short(self) -> &'static str {
        match self {
            IsogenyKind::SimplyConnected => "SC",
            IsogenyKind::Adjoint => "Ad",
            IsogenyKind::SO => "SO",
            IsogenyKind::HSpin => "HSpin",
        }
    }

    pub fn supports(self, ty: SimpleType) -> bool {
        match self {
            IsogenyKind::SimplyConnected | IsogenyKind::Adjoint => true,
            IsogenyKind::SO => ty.family() == Family::D,
            IsogenyKind::HSpin => ty.family() == Family::D && ty.rank().is_multiple_of(2),
        }
    }

    /// Isogenies accepted for `ty`, in [`IsogenyKind::ALL`] order.
    pub fn for_type(ty: SimpleType) -> Vec<IsogenyKind> {
        Self::ALL.into_iter().filter(|i| i.supports(ty)).collect()
    }
}

impl fmt::Display for IsogenyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

impl FromStr for IsogenyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sc" | "simplyconnected" | "simply-connected" => Ok(IsogenyKind::SimplyConnected),
            "ad" | "adjoint" => Ok(IsogenyKind::Adjoint),
            "so" => Ok(IsogenyKind::SO),
            "hspin" => Ok(IsogenyKind::HSpin),
            _ => Err(Error::UnknownIsogeny(s.to_string())),
        }
    }
}

pub type IntMatrix = Vec<Vec<i32>>;

fn transpose(m: &IntMatrix) -> IntMatrix {
    (0..m.len()).map(|i| m.iter().map(|r| r[i]).collect()).collect()
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i32).collect())
        .collect()
}

/// The pair `(A, B)` with `C = A·Bᵀ` over ℤ.
pub fn factorization_matrices(ty: SimpleType, iso: IsogenyKind) -> Result<(IntMatrix, IntMatrix)> {
    if !iso.supports(ty) {
        return Err(Error::InvalidIsogeny {
            ty: ty.to_string(),
            isogeny: iso.to_string(),
        });
    }
    let c = crate::rootdata::cartan_matrix(ty);
    let n = ty.rank();
    Ok(match iso {
        IsogenyKind::SimplyConnected => (c, identity(n)),
        // Bᵀ = C keeps `A·Bᵀ = C` for the non-symmetric Cartan matrices too.
        IsogenyKind::Adjoint => (identity(n), transpose(&c)),
        IsogenyKind::SO => {
            let mut a = identity(n);
            a[n - 1][n - 2] = 1;
            a[n - 1][n - 1] = 2;
            let mut b = c.clone();
            b[n - 3][n - 1] = 0;
            b[n - 2][n - 1] = -1;
            b[n - 1][n - 1] = 1;
            (a, b)
        }
        IsogenyKind::HSpin => {
            let mut a = identity(n);
            for j in (0..n - 2).step_by(2) {
                a[n - 2][j] = 1;
            }
            a[n - 2][n - 2] = 2;
            let mut b = c.clone();
            for (i, row) in b.iter_mut().enumerate().take(n - 2) {
                // 1-based index i+1: odd rows get -1, even rows +1
                row[n - 2] += if i % 2 == 0 { -1 } else { 1 };
            }
            b[n - 2][n - 2] = 1;
            (a, b)
        }
    })
}

/// Anything with a GF(2) bilinear bracket on a fixed basis.
pub trait LieBracket {
    fn dim(&self) -> usize;
    fn bracket(&self, x: &Gf2Vector, y: &Gf2Vector) -> Gf2Vector;
}

#[derive(Clone)]
pub struct LieAlgebra {
    rs: RootSystem,
    iso: IsogenyKind,
    a: IntMatrix,
    b: IntMatrix,
    dim: usize,
    wpv: usize,
    /// `(i*dim + j)*wpv ..` holds `[b_i, b_j]`.
    table: Vec<u64>,
    heights: Vec<i32>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({} {}, dim {})", self.rs.simple_type(), self.iso, self.dim)
    }
}

impl LieAlgebra {
    pub fn build(ty: SimpleType, iso: IsogenyKind) -> Result<LieAlgebra> {
        let (a, b) = factorization_matrices(ty, iso)?;
        let rs = RootSystem::build(ty);
        let n = ty.rank();
        let nr = rs.roots().len();
        let dim = n + nr;
        let wpv = dim.div_ceil(64);
        let mut table = vec![0u64; dim * dim * wpv];
        let put = |table: &mut Vec<u64>, i: usize, j: usize, k: usize| {
            let base = (i * dim + j) * wpv;
            table[base + k / 64] ^= 1u64 << (k % 64);
        };

        for (r, gamma) in rs.roots().iter().enumerate() {
            // CB2
            for i in 0..n {
                let w: i32 = (0..n).map(|j| gamma.coeffs()[j] * a[j][i]).sum();
                if w.rem_euclid(2) == 1 {
                    put(&mut table, i, n + r, n + r);
                    put(&mut table, n + r, i, n + r);
                }
            }
            // CB3, with the coefficient of h_i read as Σ_j d_j B_ji so that
            // [[e_γ, e_-γ], e_δ] = ⟨δ, γ∨⟩ e_δ follows from A·Bᵀ = C.
            let neg = rs.negation_of(r);
            let d = rs.coroot_coeffs(gamma)?;
            for i in 0..n {
                let w: i32 = (0..n).map(|j| d[j] * b[j][i]).sum();
                if w.rem_euclid(2) == 1 {
                    put(&mut table, n + r, n + neg, i);
                }
            }
            // CB4
            for (s, beta) in rs.roots().iter().enumerate() {
                if s == r || s == neg {
                    continue;
                }
                let sum = gamma.add(beta);
                if let Some(t) = rs.index_of(&sum) {
                    let p = rs.chain_p(gamma, beta)?;
                    if p % 2 == 0 {
                        put(&mut table, n + r, n + s, n + t);
                    }
                }
            }
        }

        let heights = (0..n)
            .map(|_| 0)
            .chain(rs.roots().iter().map(Root::height))
            .collect();
        Ok(LieAlgebra {
            rs,
            iso,
            a,
            b,
            dim,
            wpv,
            table,
            heights,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn simple_type(&self) -> SimpleType {
        self.rs.simple_type()
    }

    pub fn isogeny(&self) -> IsogenyKind {
        self.iso
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix_a(&self) -> &IntMatrix {
        &self.a
    }

    pub fn matrix_b(&self) -> &IntMatrix {
        &self.b
    }

    pub fn zero(&self) -> Element {
        Gf2Vector::zeros(self.dim)
    }

    pub fn basis(&self, i: usize) -> Element {
        Gf2Vector::unit(self.dim, i)
    }

    /// `h_i` for a 1-based index.
    pub fn h(&self, i: usize) -> Element {
        self.basis(i - 1)
    }

    pub fn root_index(&self, r: &Root) -> Result<usize> {
        self.rs
            .index_of(r)
            .map(|k| self.rank() + k)
            .ok_or_else(|| Error::NotARoot(r.clone()))
    }

    pub fn root_vector(&self, r: &Root) -> Result<Element> {
        Ok(self.basis(self.root_index(r)?))
    }

    /// `Σ_{γ ∈ support} e_γ`.
    pub fn element_from_support(&self, support: &[Root]) -> Result<Element> {
        let mut x = self.zero();
        for r in support {
            x.flip(self.root_index(r)?);
        }
        Ok(x)
    }

    /// The root of basis element `i`, or `None` on the Cartan part.
    pub fn basis_root(&self, i: usize) -> Option<&Root> {
        i.checked_sub(self.rank()).map(|k| &self.rs.roots()[k])
    }

    pub fn basis_label(&self, i: usize) -> String {
        match self.basis_root(i) {
            None => format!("h{}", i + 1),
            Some(r) => format!("e[{r}]"),
        }
    }

    pub fn basis_height(&self, i: usize) -> i32 {
        self.heights[i]
    }

    pub(crate) fn basis_bracket_words(&self, i: usize, j: usize) -> &[u64] {
        let base = (i * self.dim + j) * self.wpv;
        &self.table[base..base + self.wpv]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Element {
        let mut v = self.zero();
        v.xor_words(self.basis_bracket_words(i, j));
        v
    }

    /// Column `j` is `[x, b_j]`.
    pub fn ad_matrix(&self, x: &Element) -> Gf2Matrix {
        let cols: Vec<Element> = (0..self.dim).map(|j| self.bracket_basis(x, j)).collect();
        Gf2Matrix::from_columns(self.dim, &cols)
    }

    /// `[x, b_j]`.
    pub fn bracket_basis(&self, x: &Element, j: usize) -> Element {
        let mut out = self.zero();
        for i in x.ones() {
            out.xor_words(self.basis_bracket_words(i, j));
        }
        out
    }

    pub fn height_component(&self, x: &Element, i: i32) -> Element {
        Gf2Vector::from_indices(self.dim, x.ones().filter(|&k| self.heights[k] == i))
    }

    pub fn is_ad_nilpotent(&self, x: &Element) -> bool {
        self.ad_matrix(x).is_nilpotent()
    }

    /// Basis indices spanning the Cartan subalgebra.
    pub fn cartan_indices(&self) -> std::ops::Range<usize> {
        0..self.rank()
    }

    /// First failing basis triple `(i, j, k)` for Jacobi, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        use rayon::prelude::*;
        let d = self.dim;
        (0..d).into_par_iter().find_map_first(|i| {
            let mut acc = vec![0u64; self.wpv];
            for j in i + 1..d {
                let xy = self.basis_bracket_words(i, j);
                let yx = self.basis_bracket_words(j, i);
                if xy != yx {
                    return Some((i, j, j));
                }
                for k in j + 1..d {
                    acc.iter_mut().for_each(|w| *w = 0);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.basis_bracket_words(a, b);
                        for (wi, &w) in inner.iter().enumerate() {
                            let mut w = w;
                            while w != 0 {
                                let t = wi * 64 + w.trailing_zeros() as usize;
                                w &= w - 1;
                                for (x, y) in acc.iter_mut().zip(self.basis_bracket_words(t, c)) {
                                    *x ^= y;
                                }
                            }
                        }
                    }
                    if acc.iter().any(|&w| w != 0) {
                        return Some((i, j, k));
                    }
                }
            }
            None
        })
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.dim).all(|i| self.basis_bracket_words(i, i).iter().all(|&w| w == 0))
    }
}

impl LieBracket for LieAlgebra {
    fn dim(&self) -> usize {
        self.dim
    }

    fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = self.zero();
        for i in x.ones() {
            for j in y.ones() {
                out.xor_words(self.basis_bracket_words(i, j));
            }
        }
        out
    }
}

/// `A·Bᵀ` over ℤ.
pub fn product_abt(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[j][k]).sum()).collect())
        .collect()
}
