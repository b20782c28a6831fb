//! Circuits over registers of arbitrary dimension, with statevector and
//! density-matrix semantics.
//!
//! Basis states are indexed mixed-radix with register 0 most significant.

use nalgebra::SymmetricEigen;
use serde::{Deserialize, Serialize};

use crate::error::QsimError;
use crate::unitary::{c, Matrix, Unitary, Vector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gate {
    pub unitary: Unitary,
    /// registers the matrix acts on, first one most significant
    pub targets: Vec<usize>,
    /// a dimension-2 register; the gate fires on `|1⟩`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub control: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CircuitDoc")]
pub struct Circuit {
    registers: Vec<usize>,
    gates: Vec<Gate>,
}

#[derive(Deserialize)]
struct CircuitDoc {
    registers: Vec<usize>,
    gates: Vec<Gate>,
}

impl TryFrom<CircuitDoc> for Circuit {
    type Error = QsimError;

    fn try_from(doc: CircuitDoc) -> Result<Self, QsimError> {
        let mut circuit = Circuit::new(doc.registers);
        for g in doc.gates {
            circuit.push_gate(g)?;
        }
        Ok(circuit)
    }
}

impl Circuit {
    pub fn new(registers: Vec<usize>) -> Self {
        Self {
            registers,
            gates: Vec::new(),
        }
    }

    pub fn registers(&self) -> &[usize] {
        &self.registers
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn dimension(&self) -> usize {
        self.registers.iter().product()
    }

    pub fn push(&mut self, unitary: Unitary, targets: &[usize]) -> Result<&mut Self, QsimError> {
        self.push_gate(Gate {
            unitary,
            targets: targets.to_vec(),
            control: None,
        })
    }

    pub fn push_controlled(
        &mut self,
        control: usize,
        unitary: Unitary,
        targets: &[usize],
    ) -> Result<&mut Self, QsimError> {
        self.push_gate(Gate {
            unitary,
            targets: targets.to_vec(),
            control: Some(control),
        })
    }

    pub fn push_gate(&mut self, gate: Gate) -> Result<&mut Self, QsimError> {
        let mut used = vec![false; self.registers.len()];
        for &t in gate.targets.iter().chain(gate.control.iter()) {
            if t >= self.registers.len() {
                return Err(QsimError::NoSuchRegister(t));
            }
            if used[t] {
                return Err(QsimError::RepeatedRegister(t));
            }
            used[t] = true;
        }
        if let Some(ctl) = gate.control {
            if self.registers[ctl] != 2 {
                return Err(QsimError::BadControl {
                    register: ctl,
                    dim: self.registers[ctl],
                });
            }
        }
        let expected: usize = gate.targets.iter().map(|&t| self.registers[t]).product();
        if gate.unitary.dim() != expected {
            return Err(QsimError::DimensionMismatch {
                expected,
                got: gate.unitary.dim(),
            });
        }
        self.gates.push(gate);
        Ok(self)
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.registers.len()];
        for k in (0..self.registers.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.registers[k + 1];
        }
        strides
    }

    fn digit(&self, strides: &[usize], idx: usize, reg: usize) -> usize {
        (idx / strides[reg]) % self.registers[reg]
    }

    fn apply_gate(&self, gate: &Gate, strides: &[usize], v: &mut Vector) {
        let mut offsets = vec![0usize];
        for &t in &gate.targets {
            offsets = offsets
                .iter()
                .flat_map(|&o| (0..self.registers[t]).map(move |d| o + d * strides[t]))
                .collect();
        }
        let m = gate.unitary.matrix();
        let mut x = Vector::zeros(offsets.len());
        for base in 0..v.len() {
            if gate.targets.iter().any(|&t| self.digit(strides, base, t) != 0) {
                continue;
            }
            if let Some(ctl) = gate.control {
                if self.digit(strides, base, ctl) != 1 {
                    continue;
                }
            }
            for (k, &o) in offsets.iter().enumerate() {
                x[k] = v[base + o];
            }
            let y = m * &x;
            for (k, &o) in offsets.iter().enumerate() {
                v[base + o] = y[k];
            }
        }
    }

    fn check_len(&self, len: usize) -> Result<(), QsimError> {
        if len != self.dimension() {
            return Err(QsimError::DimensionMismatch {
                expected: self.dimension(),
                got: len,
            });
        }
        Ok(())
    }

    /// Statevector evolution.
    pub fn run_pure(&self, mut psi: Vector) -> Result<Vector, QsimError> {
        self.check_len(psi.len())?;
        let strides = self.strides();
        for g in &self.gates {
            self.apply_gate(g, &strides, &mut psi);
        }
        Ok(psi)
    }

    /// `ρ ↦ G ρ G†` gate by gate.
    pub fn run_mixed(&self, state: &MixedState) -> Result<MixedState, QsimError> {
        self.check_len(state.dim())?;
        let strides = self.strides();
        let mut rho = state.rho.clone();
        let n = rho.nrows();
        for g in &self.gates {
            for pass in 0..2 {
                for j in 0..n {
                    let mut col = rho.column(j).into_owned();
                    self.apply_gate(g, &strides, &mut col);
                    rho.set_column(j, &col);
                }
                if pass == 0 {
                    rho = rho.adjoint();
                }
            }
            rho = rho.adjoint();
        }
        Ok(MixedState { rho })
    }

    /// The whole circuit as one matrix.
    pub fn unitary(&self) -> Unitary {
        let n = self.dimension();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let mut e = Vector::zeros(n);
            e[j] = c(1.0, 0.0);
            let col = self.run_pure(e).expect("dimension matches");
            m.set_column(j, &col);
        }
        Unitary::new(m).expect("product of unitaries")
    }

    /// Probability that register `reg` reads `value` in a pure state.
    pub fn probability_pure(&self, psi: &Vector, reg: usize, value: usize) -> f64 {
        let strides = self.strides();
        (0..psi.len())
            .filter(|&i| self.digit(&strides, i, reg) == value)
            .map(|i| psi[i].norm_sqr())
            .sum()
    }

    /// Probability that register `reg` reads `value` in a mixed state.
    pub fn probability_mixed(&self, state: &MixedState, reg: usize, value: usize) -> f64 {
        let strides = self.strides();
        (0..state.dim())
            .filter(|&i| self.digit(&strides, i, reg) == value)
            .map(|i| state.rho[(i, i)].re)
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("circuit serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, QsimError> {
        serde_json::from_str(text).map_err(|e| QsimError::Json(e.to_string()))
    }
}

/// A density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedState {
    rho: Matrix,
}

pub const DENSITY_TOL: f64 = 1e-10;

impl MixedState {
    /// Checks Hermiticity, unit trace and positivity.
    pub fn new(rho: Matrix) -> Result<Self, QsimError> {
        if !rho.is_square() {
            return Err(QsimError::NotSquare {
                rows: rho.nrows(),
                cols: rho.ncols(),
            });
        }
        let herm = (&rho - rho.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if herm > DENSITY_TOL {
            return Err(QsimError::BadDensity(format!("not Hermitian ({herm:.3e})")));
        }
        let tr = rho.trace();
        if (tr - c(1.0, 0.0)).norm() > DENSITY_TOL {
            return Err(QsimError::BadDensity(format!("trace {tr}")));
        }
        let min = SymmetricEigen::new(rho.clone()).eigenvalues.min();
        if min < -DENSITY_TOL {
            return Err(QsimError::BadDensity(format!("eigenvalue {min:.3e}")));
        }
        Ok(Self { rho })
    }

    pub fn pure(psi: &Vector) -> Result<Self, QsimError> {
        Self::new(psi * psi.adjoint())
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            rho: Matrix::identity(dim, dim).unscale(dim as f64),
        }
    }

    /// `|0⟩⟨0| ⊗ I/D`.
    pub fn clean_qubit(register_dim: usize) -> Self {
        let mut zero = Matrix::zeros(2, 2);
        zero[(0, 0)] = c(1.0, 0.0);
        Self {
            rho: zero.kronecker(&Self::maximally_mixed(register_dim).rho),
        }
    }

    /// `self ⊗ other`.
    pub fn kron(&self, other: &MixedState) -> Self {
        Self {
            rho: self.rho.kronecker(&other.rho),
        }
    }

    pub fn dim(&self) -> usize {
        self.rho.nrows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.rho
    }
}

/// Basis vector `|index⟩`.
pub fn basis(dim: usize, index: usize) -> Result<Vector, QsimError> {
    if index >= dim {
        return Err(QsimError::BasisOutOfRange { index, dim });
    }
    let mut v = Vector::zeros(dim);
    v[index] = c(1.0, 0.0);
    Ok(v)
}
