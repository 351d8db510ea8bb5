//! The 3-dimensional simple algebra `s` (`[e,f]=h, [h,e]=e, [h,f]=f`) and its
//! 5-dimensional 2-envelope with basis `E, e, h, f, F`.

use crate::chevalley::{Element, LieBracket};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::gf4::Gf4;

/// A Lie algebra small enough to store every basis bracket.
#[derive(Debug, Clone)]
pub struct SmallAlgebra {
    names: Vec<&'static str>,
    table: Vec<Vec<Gf2Vector>>,
    two_power: Option<Vec<Gf2Vector>>,
}

impl SmallAlgebra {
    fn from_relations(names: &[&'static str], rels: &[(&str, &str, &[&str])]) -> SmallAlgebra {
        let d = names.len();
        let idx = |n: &str| names.iter().position(|&x| x == n).expect("named basis element");
        let mut table = vec![vec![Gf2Vector::zeros(d); d]; d];
        for &(a, b, out) in rels {
            let v = Gf2Vector::from_indices(d, out.iter().map(|n| idx(n)));
            table[idx(a)][idx(b)] = v.clone();
            table[idx(b)][idx(a)] = v;
        }
        SmallAlgebra {
            names: names.to_vec(),
            table,
            two_power: None,
        }
    }

    pub fn names(&self) -> &[&'static str] {
        &self.names
    }

    pub fn element(&self, parts: &[&str]) -> Element {
        let d = self.names.len();
        Gf2Vector::from_indices(
            d,
            parts
                .iter()
                .map(|p| self.names.iter().position(|n| n == p).expect("named basis element")),
        )
    }

    pub fn ad_matrix(&self, x: &Element) -> Gf2Matrix {
        let d = self.dim();
        let cols: Vec<Gf2Vector> = (0..d).map(|j| self.bracket(x, &Gf2Vector::unit(d, j))).collect();
        Gf2Matrix::from_columns(d, &cols)
    }

    /// `x^[2]` from the basis table via `(x+y)^[2] = x^[2] + y^[2] + [x,y]`.
    pub fn power2(&self, x: &Element) -> Option<Element> {
        let tp = self.two_power.as_ref()?;
        let ones: Vec<usize> = x.ones().collect();
        let mut out = Gf2Vector::zeros(self.dim());
        for (a, &i) in ones.iter().enumerate() {
            out.xor_assign(&tp[i]);
            for &j in &ones[a + 1..] {
                out.xor_assign(&self.table[i][j]);
            }
        }
        Some(out)
    }

    pub fn jacobi_holds(&self) -> bool {
        let d = self.dim();
        let b = |i| Gf2Vector::unit(d, i);
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let mut s = self.bracket(&b(i), &self.bracket(&b(j), &b(k)));
                    s.xor_assign(&self.bracket(&b(j), &self.bracket(&b(k), &b(i))));
                    s.xor_assign(&self.bracket(&b(k), &self.bracket(&b(i), &b(j))));
                    s.is_zero()
                })
            })
        })
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.dim()).all(|i| self.table[i][i].is_zero())
    }

    /// Kernel of `x ↦ ([x, b_1], …, [x, b_d])`.
    pub fn center(&self) -> Vec<Element> {
        let d = self.dim();
        let mut stacked = Gf2Matrix::zeros(0, d);
        for j in 0..d {
            // column i of this block is [b_i, b_j]
            let cols: Vec<Gf2Vector> = (0..d).map(|i| self.table[i][j].clone()).collect();
            stacked = stacked.vstack(&Gf2Matrix::from_columns(d, &cols));
        }
        stacked.nullspace()
    }

    pub fn derived_dim(&self) -> usize {
        let all: Vec<Gf2Vector> = self.table.iter().flatten().cloned().collect();
        crate::gf2::span_rank(self.dim(), &all)
    }

    /// Nonzero proper ideals, found by closing every subset of points under span.
    pub fn proper_ideals(&self) -> Vec<Vec<Element>> {
        let d = self.dim();
        assert!(d <= 4, "ideal scan enumerates every subset of points");
        let points: Vec<Gf2Vector> = (0u32..1 << d)
            .map(|m| Gf2Vector::from_indices(d, (0..d).filter(|i| m >> i & 1 == 1)))
            .collect();
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        // subspaces as spans of subsets of generators
        for gens in 1u64..1 << points.len() {
            let gs: Vec<&Gf2Vector> = (0..points.len()).filter(|i| gens >> i & 1 == 1).map(|i| &points[i]).collect();
            let mut span: Vec<u32> = vec![0];
            for g in gs {
                let gb: u32 = g.ones().map(|i| 1 << i).sum();
                if span.contains(&gb) {
                    continue;
                }
                let more: Vec<u32> = span.iter().map(|s| s ^ gb).collect();
                span.extend(more);
            }
            span.sort_unstable();
            if span.len() == 1 || span.len() == 1 << d || !seen.insert(span.clone()) {
                continue;
            }
            let elems: Vec<Gf2Vector> = span
                .iter()
                .map(|&m| Gf2Vector::from_indices(d, (0..d).filter(|i| m >> i & 1 == 1)))
                .collect();
            let closed = elems.iter().all(|x| {
                (0..d).all(|j| {
                    let y = self.bracket(x, &Gf2Vector::unit(d, j));
                    let yb: u32 = y.ones().map(|i| 1 << i).sum();
                    span.binary_search(&yb).is_ok()
                })
            });
            if closed {
                out.push(elems);
            }
        }
        out
    }
}

impl LieBracket for SmallAlgebra {
    fn dim(&self) -> usize {
        self.names.len()
    }

    fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = Gf2Vector::zeros(self.dim());
        for i in x.ones() {
            for j in y.ones() {
                out.xor_assign(&self.table[i][j]);
            }
        }
        out
    }
}

/// Basis order `e, h, f`.
pub fn build_s() -> SmallAlgebra {
    SmallAlgebra::from_relations(
        &["e", "h", "f"],
        &[("e", "f", &["h"]), ("h", "e", &["e"]), ("h", "f", &["f"])],
    )
}

/// Basis order `E, e, h, f, F`.
pub fn build_s_envelope() -> SmallAlgebra {
    let mut a = SmallAlgebra::from_relations(
        &["E", "e", "h", "f", "F"],
        &[
            ("e", "f", &["h"]),
            ("h", "e", &["e"]),
            ("h", "f", &["f"]),
            ("E", "F", &["h"]),
            ("E", "f", &["e"]),
            ("F", "e", &["f"]),
        ],
    );
    let u = |i| Gf2Vector::unit(5, i);
    a.two_power = Some(vec![Gf2Vector::zeros(5), u(0), u(2), u(4), Gf2Vector::zeros(5)]);
    a
}

/// `λE + μe + νh + ρf + σF` is nilpotent iff `χ(t) = t³` for its action on `s`.
pub fn envelope_nilpotent(c: [Gf4; 5]) -> bool {
    let [l, mu, nu, rho, sigma] = c;
    (nu * nu + l * sigma).is_zero() && (l * rho * rho + sigma * mu * mu).is_zero()
}

/// The two displayed equations `λρ = μν`, `μσ = νρ`.
pub fn displayed_cone_equations(c: [Gf4; 5]) -> bool {
    let [l, mu, nu, rho, sigma] = c;
    l * rho == mu * nu && mu * sigma == nu * rho
}

/// Matrix of `ad n` on `s` with basis `e, f, h`, as printed alongside the cone.
pub fn envelope_action_on_s(c: [Gf4; 5]) -> [[Gf4; 3]; 3] {
    let [l, mu, nu, rho, sigma] = c;
    [[nu, mu, l], [rho, Gf4::ZERO, mu], [sigma, rho, nu]]
}

/// Normalise `(e, [e,f], f)` into a triple obeying the defining relations of `s`.
pub fn recognize_s<L: LieBracket>(l: &L, e: &Element, f: &Element) -> Result<(Element, Element, Element)> {
    let h = l.bracket(e, f);
    if l.bracket(e, &h) != *e || e.is_zero() {
        return Err(Error::RecognitionPrecondition);
    }
    let mut r = l.bracket(&h, f);
    r.xor_assign(f);
    let (h2, f2) = if r.is_zero() {
        (h, f.clone())
    } else if r == *e {
        // λ = 1, and √1 = 1
        (h.add(e), f.add(&h))
    } else {
        return Err(Error::NotClosed);
    };
    if !is_s_triple(l, e, &h2, &f2) {
        return Err(Error::NotClosed);
    }
    Ok((e.clone(), h2, f2))
}

pub fn is_s_triple<L: LieBracket>(l: &L, e: &Element, h: &Element, f: &Element) -> bool {
    l.bracket(e, f) == *h && l.bracket(h, e) == *e && l.bracket(h, f) == *f
}

/// Pairs indexing 2-cochains on `s`: `(e,h), (e,f), (h,f)` in basis indices.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// `δ₁ x*` for the dual basis vector `x* = b_i*`, as coordinates on `PAIRS`.
pub fn delta1(s: &SmallAlgebra, i: usize) -> Gf2Vector {
    let d = s.dim();
    Gf2Vector::from_indices(
        PAIRS.len(),
        PAIRS
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| s.bracket(&Gf2Vector::unit(d, a), &Gf2Vector::unit(d, b)).get(i))
            .map(|(k, _)| k),
    )
}

/// `dim H²(s, k)` for the trivial module via the Chevalley–Eilenberg complex.
pub fn h2_trivial_check() -> usize {
    let s = build_s();
    let d = s.dim();
    let img: Vec<Gf2Vector> = (0..d).map(|i| delta1(&s, i)).collect();
    let rank_d1 = crate::gf2::span_rank(PAIRS.len(), &img);
    // δ₂ω(a,b,c) = ω([a,b],c) + ω([b,c],a) + ω([c,a],b) on the single triple (e,h,f)
    let b = |i| Gf2Vector::unit(d, i);
    let omega = |k: usize, x: &Gf2Vector, y: &Gf2Vector| -> bool {
        let (p, q) = PAIRS[k];
        // ω = (b_p ∧ b_q)* evaluated on x ∧ y
        (x.get(p) & y.get(q)) ^ (x.get(q) & y.get(p))
    };
    let row: Vec<u8> = (0..PAIRS.len())
        .map(|k| {
            let (e, h, f) = (b(0), b(1), b(2));
            let v = omega(k, &s.bracket(&e, &h), &f)
                ^ omega(k, &s.bracket(&h, &f), &e)
                ^ omega(k, &s.bracket(&f, &e), &h);
            v as u8
        })
        .collect();
    let d2 = Gf2Matrix::from_rows(&[row]);
    let ker_d2 = PAIRS.len() - d2.rank();
    ker_d2 - rank_d1
}
