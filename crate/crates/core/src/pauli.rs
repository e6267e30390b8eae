//! Pauli operators in binary symplectic form with a phase in Z4.

use std::fmt;

use crate::gf2::BitVec;

/// `i^phase · X^x · Z^z` (all X factors to the left of all Z factors).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliVector {
    pub x: BitVec,
    pub z: BitVec,
    pub phase: u8,
}

impl PauliVector {
    pub fn identity(n: usize) -> Self {
        PauliVector {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase: 0,
        }
    }

    pub fn new(x: BitVec, z: BitVec, phase: u8) -> Self {
        assert_eq!(x.len(), z.len());
        PauliVector {
            x,
            z,
            phase: phase % 4,
        }
    }

    pub fn x_type(x: BitVec) -> Self {
        let n = x.len();
        PauliVector::new(x, BitVec::zeros(n), 0)
    }

    pub fn z_type(z: BitVec) -> Self {
        let n = z.len();
        PauliVector::new(BitVec::zeros(n), z, 0)
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        let mut support = self.x.clone();
        for i in self.z.support() {
            support.set(i, true);
        }
        support.weight()
    }

    /// 1 iff the two operators anticommute.
    pub fn symplectic_product(&self, other: &PauliVector) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    /// Operator product `self · other`.
    pub fn mul(&self, other: &PauliVector) -> PauliVector {
        // X^a Z^b X^c Z^d = (-1)^{b·c} X^{a+c} Z^{b+d}
        let sign = if self.z.dot(&other.x) { 2 } else { 0 };
        PauliVector {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: (self.phase + other.phase + sign) % 4,
        }
    }

    /// Concatenate two blocks into one operator on `2n` qubits.
    pub fn join(a: &PauliVector, b: &PauliVector) -> PauliVector {
        PauliVector::new(a.x.concat(&b.x), a.z.concat(&b.z), a.phase + b.phase)
    }

    /// Split a `2n`-qubit operator into blocks; the phase stays with the first block.
    pub fn split(&self) -> (PauliVector, PauliVector) {
        let n = self.len() / 2;
        let part = |v: &BitVec, off: usize| {
            BitVec::from_indices(
                n,
                v.support()
                    .into_iter()
                    .filter(|&i| (off..off + n).contains(&i))
                    .map(|i| i - off),
            )
        };
        (
            PauliVector::new(part(&self.x, 0), part(&self.z, 0), self.phase),
            PauliVector::new(part(&self.x, n), part(&self.z, n), 0),
        )
    }
}

impl fmt::Debug for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["+", "+i", "-", "-i"][self.phase as usize];
        write!(f, "{prefix}")?;
        for i in 0..self.len() {
            let c = match (self.x.get(i), self.z.get(i)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                // X Z = -i Y
                (true, true) => 'W',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
