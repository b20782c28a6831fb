//! Hadamard tests, the one-clean-qubit probability and the `U′` trace
//! circuit.

use crate::circuit::{basis, Circuit, MixedState};
use crate::error::QsimError;
use crate::unitary::{c, Unitary, Vector};

/// Register input of a Hadamard test.
#[derive(Debug, Clone, PartialEq)]
pub enum StatePrep {
    Basis(usize),
    Pure(Vector),
    MaximallyMixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Real,
    Imaginary,
}

/// Control qubit and a register of `u.dim()`: `H`, optionally `S†`,
/// controlled `U`, `H`.
pub fn hadamard_circuit(u: &Unitary, part: Part) -> Circuit {
    let mut circ = Circuit::new(vec![2, u.dim()]);
    circ.push(Unitary::hadamard(), &[0]).expect("qubit gate");
    if part == Part::Imaginary {
        circ.push(Unitary::s_dagger(), &[0]).expect("qubit gate");
    }
    circ.push_controlled(0, u.clone(), &[1]).expect("register gate");
    circ.push(Unitary::hadamard(), &[0]).expect("qubit gate");
    circ
}

/// Probability of reading `0` on the control qubit, by simulation.
pub fn hadamard_test(u: &Unitary, prep: &StatePrep, part: Part) -> Result<f64, QsimError> {
    let dim = u.dim();
    let circ = hadamard_circuit(u, part);
    let pure = |psi: &Vector| -> Result<f64, QsimError> {
        if psi.len() != dim {
            return Err(QsimError::DimensionMismatch {
                expected: dim,
                got: psi.len(),
            });
        }
        let mut start = Vector::zeros(2 * dim);
        start.rows_mut(0, dim).copy_from(psi);
        let out = circ.run_pure(start)?;
        Ok(circ.probability_pure(&out, 0, 0))
    };
    match prep {
        StatePrep::Basis(i) => pure(&basis(dim, *i)?),
        StatePrep::Pure(psi) => pure(psi),
        StatePrep::MaximallyMixed => {
            let out = circ.run_mixed(&MixedState::clean_qubit(dim))?;
            Ok(circ.probability_mixed(&out, 0, 0))
        }
    }
}

fn clean_split(u: &Unitary) -> Result<usize, QsimError> {
    if u.dim() % 2 != 0 || u.dim() == 0 {
        return Err(QsimError::DimensionMismatch {
            expected: 2 * (u.dim() / 2).max(1),
            got: u.dim(),
        });
    }
    Ok(u.dim() / 2)
}

/// `p₀ = D⁻¹ Tr{(|0⟩⟨0| ⊗ I) U (|0⟩⟨0| ⊗ I) U†}` for `U` on a clean qubit
/// (most significant) and a register of dimension `D`.
pub fn dqc1_prob0(u: &Unitary) -> Result<f64, QsimError> {
    let d = clean_split(u)?;
    let n = u.dim();
    let mut p = crate::unitary::Matrix::zeros(n, n);
    for i in 0..d {
        p[(i, i)] = c(1.0, 0.0);
    }
    let m = u.matrix();
    let t = (&p * m * &p * m.adjoint()).trace();
    Ok(t.re / d as f64)
}

/// The same probability by evolving `|0⟩⟨0| ⊗ I/D` and measuring.
pub fn dqc1_prob0_density(u: &Unitary) -> Result<f64, QsimError> {
    let d = clean_split(u)?;
    let mut circ = Circuit::new(vec![2, d]);
    circ.push(u.clone(), &[0, 1])?;
    let out = circ.run_mixed(&MixedState::clean_qubit(d))?;
    Ok(circ.probability_mixed(&out, 0, 0))
}

/// `U′` on `n + 3` qubits for `U` on `n + 1`: `U†`, CNOT from the clean
/// qubit to the second ancilla, `U`, CNOT to the first ancilla. Qubit 0 is
/// the clean qubit, `1..=n` the register, `n+1` and `n+2` the ancillas, so
/// `Tr U′ / 2^{n+2} = p₀`.
pub fn uprime_construct(u: &Unitary) -> Result<Circuit, QsimError> {
    let dim = u.dim();
    if dim < 2 || !dim.is_power_of_two() {
        return Err(QsimError::NotQubits(dim));
    }
    let q = dim.trailing_zeros() as usize;
    let n = q - 1;
    let system: Vec<usize> = (0..q).collect();
    let mut circ = Circuit::new(vec![2; n + 3]);
    circ.push(u.adjoint(), &system)?;
    circ.push_controlled(0, Unitary::pauli_x(), &[n + 2])?;
    circ.push(u.clone(), &system)?;
    circ.push_controlled(0, Unitary::pauli_x(), &[n + 1])?;
    Ok(circ)
}

/// `Tr U / dim` of the whole circuit.
pub fn normalized_trace(circ: &Circuit) -> crate::unitary::C64 {
    let u = circ.unitary();
    u.trace() / u.dim() as f64
}

/// `Tr U′ / 2^{n+2}` for a circuit on `n + 3` qubits, which equals `p₀`.
pub fn uprime_trace(circ: &Circuit) -> crate::unitary::C64 {
    normalized_trace(circ) * 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_and_sign_flip() {
        let id = Unitary::identity(3);
        assert!((hadamard_test(&id, &StatePrep::Basis(1), Part::Real).unwrap() - 1.0).abs() < 1e-12);
        assert!((hadamard_test(&id, &StatePrep::Basis(1), Part::Imaginary).unwrap() - 0.5).abs() < 1e-12);
        let z = Unitary::diagonal_signs(&[1.0, -1.0]).unwrap();
        assert!(hadamard_test(&z, &StatePrep::Basis(1), Part::Real).unwrap().abs() < 1e-12);
        assert!((hadamard_test(&z, &StatePrep::MaximallyMixed, Part::Real).unwrap() - 0.5).abs() < 1e-12);
        assert!(hadamard_test(&z, &StatePrep::Basis(2), Part::Real).is_err());
    }

    #[test]
    fn phase_gate_imaginary_part() {
        // ⟨1|S|1⟩ = i
        let s = Unitary::phases(&[0.0, std::f64::consts::FRAC_PI_2]);
        assert!((hadamard_test(&s, &StatePrep::Basis(1), Part::Imaginary).unwrap() - 1.0).abs() < 1e-12);
        assert!((hadamard_test(&s, &StatePrep::Basis(1), Part::Real).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn dqc1_simple_cases() {
        assert!((dqc1_prob0(&Unitary::identity(8)).unwrap() - 1.0).abs() < 1e-12);
        let not = Unitary::pauli_x().kron(&Unitary::identity(4));
        assert!(dqc1_prob0(&not).unwrap().abs() < 1e-12);
        assert!(dqc1_prob0_density(&not).unwrap().abs() < 1e-12);
        assert!(dqc1_prob0(&Unitary::identity(3)).is_err());
    }

    #[test]
    fn uprime_trace_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for dim in [2, 4, 8] {
            let u = Unitary::random(&mut rng, dim);
            let circ = uprime_construct(&u).unwrap();
            assert_eq!(circ.dimension(), dim * 4);
            let t = uprime_trace(&circ);
            assert!((t.re - dqc1_prob0(&u).unwrap()).abs() < 1e-10);
            assert!(t.im.abs() < 1e-10);
        }
        let not = Unitary::pauli_x().kron(&Unitary::identity(2));
        assert!(uprime_trace(&uprime_construct(&not).unwrap()).norm() < 1e-12);
        assert!((uprime_trace(&uprime_construct(&Unitary::identity(4)).unwrap()).re - 1.0).abs() < 1e-12);
        assert!(matches!(uprime_construct(&Unitary::identity(6)), Err(QsimError::NotQubits(6))));
    }
}
