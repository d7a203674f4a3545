use crate::Bits;
use serde::{Deserialize, Serialize};

/// Pauli operator without phase, as a pair of supports.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Pauli {
    pub x: Bits,
    pub z: Bits,
}

impl Pauli {
    pub fn identity(n: usize) -> Self {
        Pauli { x: Bits::zeros(n), z: Bits::zeros(n) }
    }

    pub fn x_type(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        Pauli { x: Bits::from_indices(n, idx), z: Bits::zeros(n) }
    }

    pub fn z_type(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        Pauli { x: Bits::zeros(n), z: Bits::from_indices(n, idx) }
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    /// Symplectic product; `true` means the operators anticommute.
    pub fn anticommutes(&self, o: &Pauli) -> bool {
        self.x.dot(&o.z) ^ self.z.dot(&o.x)
    }

    pub fn commutes(&self, o: &Pauli) -> bool {
        !self.anticommutes(o)
    }

    pub fn mul_assign(&mut self, o: &Pauli) {
        self.x.xor_assign(&o.x);
        self.z.xor_assign(&o.z);
    }

    pub fn mul(&self, o: &Pauli) -> Pauli {
        let mut r = self.clone();
        r.mul_assign(o);
        r
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        let mut s = self.x.clone();
        s.or_assign(&self.z);
        s.weight()
    }

    pub fn support(&self) -> Bits {
        let mut s = self.x.clone();
        s.or_assign(&self.z);
        s
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn is_x_type(&self) -> bool {
        self.z.is_zero() && !self.x.is_zero()
    }

    pub fn is_z_type(&self) -> bool {
        self.x.is_zero() && !self.z.is_zero()
    }

    /// Exchange the roles of X and Z.
    pub fn dual(&self) -> Pauli {
        Pauli { x: self.z.clone(), z: self.x.clone() }
    }

    /// `x ‖ z` as a vector of length `2n`.
    pub fn to_symplectic(&self) -> Bits {
        self.x.concat(&self.z)
    }

    pub fn from_symplectic(v: &Bits) -> Pauli {
        let n = v.len() / 2;
        Pauli { x: v.slice(0, n), z: v.slice(n, n) }
    }

    /// The vector `w` with `w·to_symplectic(p) = [self anticommutes with p]`.
    pub fn twisted(&self) -> Bits {
        self.z.concat(&self.x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xz_on_same_qubit_anticommute() {
        let x = Pauli::x_type(3, [1]);
        let z = Pauli::z_type(3, [1]);
        assert!(x.anticommutes(&z));
        let zz = Pauli::z_type(3, [0, 1]);
        let xx = Pauli::x_type(3, [0, 1]);
        assert!(zz.commutes(&xx));
    }

    #[test]
    fn twisted_encodes_commutation() {
        let a = Pauli { x: Bits::from_indices(4, [0, 2]), z: Bits::from_indices(4, [2, 3]) };
        let b = Pauli { x: Bits::from_indices(4, [3]), z: Bits::from_indices(4, [0]) };
        assert_eq!(a.twisted().dot(&b.to_symplectic()), a.anticommutes(&b));
        assert_eq!(Pauli::from_symplectic(&a.to_symplectic()), a);
        assert_eq!(a.weight(), 3);
    }
}
