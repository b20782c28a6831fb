//! Jones representation of the braid group on walks of the `A_{r-1}`
//! Dynkin diagram (level `k = r - 2`).
//!
//! A basis vector is a walk `1 = z_0, z_1, …, z_n` with `1 ≤ z_j ≤ r - 1`
//! and `|z_j - z_{j-1}| = 1`. The generator `e_i` acts on the vertex
//! `z_i` of walks with `z_{i-1} = z_{i+1} = z` through the 2×2 block
//!
//! ```text
//! 1/λ_z · [ λ_{z-1}            √(λ_{z-1} λ_{z+1}) ]
//!         [ √(λ_{z-1} λ_{z+1})  λ_{z+1}           ]
//! ```
//!
//! with `λ_m = sin(mπ/r)`, and kills every other walk. Then
//! `σ_i ↦ A·I + A⁻¹·e_i` with `A = e^{2πi(r-1)/4r}`, the same convention as
//! the exact bracket.

use std::collections::HashMap;
use std::f64::consts::PI;

use rootjones_core::{BraidWord, Closure, RootOfUnity};

use crate::error::QsimError;
use crate::unitary::{c, Matrix, Unitary, C64};

#[derive(Debug, Clone)]
pub struct PathBasis {
    r: u32,
    strands: usize,
    closure: Closure,
    paths: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl PathBasis {
    /// All walks of length `strands` from vertex 1; for a plat closure only
    /// those that return to 1.
    pub fn new(strands: usize, r: u32, closure: Closure) -> Result<Self, QsimError> {
        RootOfUnity::new(r)?;
        if strands == 0 {
            return Err(rootjones_core::LinkError::NoStrands.into());
        }
        if closure == Closure::Plat && strands % 2 != 0 {
            return Err(rootjones_core::LinkError::OddStrands(strands).into());
        }
        let top = (r - 1) as u8;
        let mut paths = vec![vec![1u8]];
        for _ in 0..strands {
            paths = paths
                .into_iter()
                .flat_map(|p| {
                    let z = *p.last().unwrap();
                    [z.wrapping_sub(1), z + 1]
                        .into_iter()
                        .filter(move |&y| (1..=top).contains(&y))
                        .map(move |y| {
                            let mut q = p.clone();
                            q.push(y);
                            q
                        })
                })
                .collect();
        }
        if closure == Closure::Plat {
            paths.retain(|p| *p.last().unwrap() == 1);
        }
        paths.sort();
        let index = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(Self {
            r,
            strands,
            closure,
            paths,
            index,
        })
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    pub fn paths(&self) -> &[Vec<u8>] {
        &self.paths
    }

    pub fn index_of(&self, path: &[u8]) -> Option<usize> {
        self.index.get(path).copied()
    }

    fn lambda(&self, m: u8) -> f64 {
        (m as f64 * PI / self.r as f64).sin()
    }

    /// `d = 2cos(π/r)`.
    pub fn d(&self) -> f64 {
        2.0 * (PI / self.r as f64).cos()
    }

    /// The Temperley-Lieb generator `e_i`, `1 ≤ i < strands`.
    pub fn tl_generator(&self, i: usize) -> Result<Matrix, QsimError> {
        if i == 0 || i >= self.strands {
            return Err(QsimError::BadGenerator {
                generator: i,
                strands: self.strands,
            });
        }
        let n = self.dim();
        let mut e = Matrix::zeros(n, n);
        for (col, p) in self.paths.iter().enumerate() {
            let z = p[i - 1];
            if p[i + 1] != z {
                continue;
            }
            let lz = self.lambda(z);
            for (row_vertex, weight) in [
                (z.wrapping_sub(1), self.lambda(z.wrapping_sub(1))),
                (z + 1, self.lambda(z + 1)),
            ] {
                if weight <= 0.0 || row_vertex == 0 || row_vertex as u32 >= self.r {
                    continue;
                }
                let mut q = p.clone();
                q[i] = row_vertex;
                let row = self.index[&q];
                let entry = if row_vertex == p[i] {
                    weight / lz
                } else {
                    (self.lambda(p[i]) * weight).sqrt() / lz
                };
                e[(row, col)] = c(entry, 0.0);
            }
        }
        Ok(e)
    }

    fn a(&self) -> C64 {
        C64::from_polar(1.0, 2.0 * PI * (self.r - 1) as f64 / (4 * self.r) as f64)
    }

    /// `ρ(σ_i)` or `ρ(σ_i⁻¹)`.
    pub fn generator(&self, i: usize, positive: bool) -> Result<Unitary, QsimError> {
        let e = self.tl_generator(i)?;
        let a = self.a();
        let (x, y) = if positive { (a, a.inv()) } else { (a.inv(), a) };
        let n = self.dim();
        Unitary::new(Matrix::identity(n, n) * x + e * y)
    }

    /// `ρ(β)`, the first letter applied first.
    pub fn braid_unitary(&self, braid: &BraidWord) -> Result<Unitary, QsimError> {
        if braid.strands() != self.strands {
            return Err(QsimError::DimensionMismatch {
                expected: self.strands,
                got: braid.strands(),
            });
        }
        let mut u = Matrix::identity(self.dim(), self.dim());
        for l in braid.letters() {
            u = self.generator(l.generator, l.positive)?.matrix() * u;
        }
        Unitary::new(u)
    }

    /// Markov-trace weights `λ_{z_n} / (λ_1 dⁿ)`; they sum to 1.
    pub fn markov_weights(&self) -> Vec<f64> {
        let norm = self.lambda(1) * self.d().powi(self.strands as i32);
        self.paths
            .iter()
            .map(|p| self.lambda(*p.last().unwrap()) / norm)
            .collect()
    }

    /// The walk `1, 2, 1, 2, …, 1` that carries the plat closure's cups.
    pub fn plat_state(&self) -> Result<usize, QsimError> {
        if self.closure != Closure::Plat {
            return Err(rootjones_core::LinkError::OddStrands(self.strands).into());
        }
        let walk: Vec<u8> = (0..=self.strands).map(|j| if j % 2 == 0 { 1 } else { 2 }).collect();
        Ok(self.index[&walk])
    }

    /// `⟨trace closure⟩ / dⁿ = Σ_p w_p ⟨p|U|p⟩`.
    pub fn trace_value(&self, u: &Unitary) -> C64 {
        self.markov_weights()
            .iter()
            .enumerate()
            .map(|(i, &w)| u.matrix()[(i, i)] * w)
            .sum()
    }

    /// `⟨plat closure⟩ / d^{n/2} = ⟨α|U|α⟩`.
    pub fn plat_value(&self, u: &Unitary) -> Result<C64, QsimError> {
        let a = self.plat_state()?;
        Ok(u.matrix()[(a, a)])
    }
}

/// `ρ(σ_i^{±1})` on the path basis for the given closure type.
pub fn jones_rep_generator(
    strands: usize,
    generator: usize,
    positive: bool,
    r: u32,
    closure: Closure,
) -> Result<Unitary, QsimError> {
    PathBasis::new(strands, r, closure)?.generator(generator, positive)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        // walks on A_4 from 1: Fibonacci-like growth
        let sizes: Vec<usize> = (1..=6)
            .map(|n| PathBasis::new(n, 5, Closure::Trace).unwrap().dim())
            .collect();
        assert_eq!(sizes, [1, 2, 3, 5, 8, 13]);
        assert_eq!(PathBasis::new(4, 5, Closure::Plat).unwrap().dim(), 2);
        assert!(PathBasis::new(3, 5, Closure::Plat).is_err());
        assert!(PathBasis::new(3, 6, Closure::Trace).is_err());
    }

    #[test]
    fn tl_relations() {
        for r in [5, 7, 8] {
            let b = PathBasis::new(5, r, Closure::Trace).unwrap();
            let d = b.d();
            for i in 1..5 {
                let e = b.tl_generator(i).unwrap();
                assert!((&e * &e - &e * c(d, 0.0)).norm() < 1e-12);
                assert!((&e - e.adjoint()).norm() < 1e-12);
                if i + 1 < 5 {
                    let f = b.tl_generator(i + 1).unwrap();
                    assert!((&e * &f * &e - &e).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn weights_sum_to_one() {
        for r in [5, 7, 8] {
            for n in 1..=6 {
                let w = PathBasis::new(n, r, Closure::Trace).unwrap().markov_weights();
                assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn errors() {
        assert!(jones_rep_generator(3, 3, true, 5, Closure::Trace).is_err());
        assert!(jones_rep_generator(3, 0, true, 5, Closure::Trace).is_err());
        assert!(jones_rep_generator(3, 1, true, 4, Closure::Trace).is_err());
    }
}
