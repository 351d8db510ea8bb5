//! The field with four elements, `GF(2)[x]/(x² + x + 1)`, as a two-bit scalar.
//!
//! Only the small brute-force searches use it. The encoding is `a + b·x` with
//! bit 0 = `a` and bit 1 = `b`.

use std::fmt;
use std::ops::{Add, Mul};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const X: Gf4 = Gf4(2);
    pub const X1: Gf4 = Gf4(3);
    pub const ALL: [Gf4; 4] = [Gf4(0), Gf4(1), Gf4(2), Gf4(3)];

    pub fn new(bits: u8) -> Gf4 {
        Gf4(bits & 3)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            1 => Some(Gf4(1)),
            2 => Some(Gf4(3)),
            _ => Some(Gf4(2)),
        }
    }

    pub fn square(self) -> Gf4 {
        self * self
    }

    /// Frobenius is a bijection, so square roots are unique.
    pub fn sqrt(self) -> Gf4 {
        // x ↦ x² has order 2 on GF(4)
        self.square()
    }

    pub fn from_bool(b: bool) -> Gf4 {
        Gf4(b as u8)
    }
}

// addition in characteristic 2 is xor
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf4 {
    type Output = Gf4;
    fn add(self, o: Gf4) -> Gf4 {
        Gf4(self.0 ^ o.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, o: Gf4) -> Gf4 {
        let (a0, a1) = (self.0 & 1, self.0 >> 1);
        let (b0, b1) = (o.0 & 1, o.0 >> 1);
        // (a0 + a1 x)(b0 + b1 x) with x² = x + 1
        let hi = a1 & b1;
        let c0 = (a0 & b0) ^ hi;
        let c1 = (a0 & b1) ^ (a1 & b0) ^ hi;
        Gf4(c0 | (c1 << 1))
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = ["0", "1", "x", "x+1"][self.0 as usize];
        write!(f, "{s}")
    }
}

/// Solve `M v = b` over GF(4) with free variables zero. `m` is row-major.
pub fn solve(m: &[Vec<Gf4>], b: &[Gf4]) -> Option<Vec<Gf4>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Gf4>> = m
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut r = r.clone();
            r.push(bi);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for x in a[r].iter_mut() {
            *x = *x * inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..=cols {
                    let t = a[r][j];
                    a[i][j] = a[i][j] + f * t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if (r..rows).any(|i| !a[i][cols].is_zero()) {
        return None;
    }
    let mut x = vec![Gf4::ZERO; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][cols];
    }
    Some(x)
}

/// Rank over GF(4) of a list of row vectors.
pub fn rank(m: &[Vec<Gf4>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for i in r + 1..a.len() {
            if !a[i][c].is_zero() {
                let f = a[i][c] * inv;
                for j in 0..cols {
                    let t = a[r][j];
                    a[i][j] = a[i][j] + f * t;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for a in Gf4::ALL {
            assert_eq!(a + a, Gf4::ZERO);
            assert_eq!(a * Gf4::ONE, a);
            if let Some(i) = a.inv() {
                assert_eq!(a * i, Gf4::ONE);
            }
            assert_eq!(a.sqrt().square(), a);
            for b in Gf4::ALL {
                assert_eq!(a * b, b * a);
                for c in Gf4::ALL {
                    assert_eq!(a * (b + c), a * b + a * c);
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
        assert_eq!(Gf4::X * Gf4::X, Gf4::X1);
    }

    #[test]
    fn linear_solve() {
        let m = vec![vec![Gf4::ONE, Gf4::X], vec![Gf4::X, Gf4::ONE]];
        let b = vec![Gf4::ONE, Gf4::ZERO];
        let x = solve(&m, &b).unwrap();
        for (row, bi) in m.iter().zip(&b) {
            let s = row.iter().zip(&x).fold(Gf4::ZERO, |acc, (&a, &v)| acc + a * v);
            assert_eq!(s, *bi);
        }
        // second row is x times the first: rank 1, inconsistent for b = (1, 0)
        let m = vec![vec![Gf4::ONE, Gf4::X], vec![Gf4::X, Gf4::X1]];
        assert_eq!(rank(&m), 1);
        assert!(solve(&m, &b).is_none());
    }
}
