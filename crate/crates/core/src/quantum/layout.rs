use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Index of the vacuum level in a three-level photon mode.
pub const VAC: usize = 0;

/// Role tag identifying a subsystem within a composite system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// Qubit Bob keeps.
    Home,
    /// Qubit (or photon mode) that travels Bob -> Alice -> Bob.
    Travel,
    /// Eve's ancilla qubit.
    Ancilla,
    /// Eve's auxiliary photon mode x.
    ModeX,
    /// Eve's auxiliary photon mode y.
    ModeY,
    /// Generic tag, mostly for tests.
    Aux(u8),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Home => f.write_str("home"),
            Role::Travel => f.write_str("travel"),
            Role::Ancilla => f.write_str("ancilla"),
            Role::ModeX => f.write_str("x"),
            Role::ModeY => f.write_str("y"),
            Role::Aux(n) => write!(f, "aux{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subsystem {
    pub role: Role,
    pub dim: usize,
}

/// Level holding logical `bit` in a subsystem of dimension `dim`.
///
/// Qubits map `bit` to itself; three-level modes shift past the vacuum.
pub fn qubit_level(dim: usize, bit: usize) -> usize {
    if dim == 3 {
        bit + 1
    } else {
        bit
    }
}

/// Ordered list of subsystems; the first one is the most significant digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    parts: Vec<Subsystem>,
}

/// Factorisation of a layout's basis indices into (target, rest) pairs.
pub(crate) struct Split {
    pub target_dim: usize,
    pub rest_dim: usize,
    /// `pairs[full] = (target index, rest index)`.
    pub pairs: Vec<(usize, usize)>,
    /// `full[target * rest_dim + rest] = full index`.
    pub full: Vec<usize>,
}

impl Layout {
    pub fn new(parts: Vec<Subsystem>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyLabels);
        }
        for (i, p) in parts.iter().enumerate() {
            if p.dim != 2 && p.dim != 3 {
                return Err(Error::UnsupportedDim(p.dim));
            }
            if parts[..i].iter().any(|q| q.role == p.role) {
                return Err(Error::DuplicateLabel(p.role));
            }
        }
        Ok(Self { parts })
    }

    pub fn qubit(role: Role) -> Self {
        Self {
            parts: alloc::vec![Subsystem { role, dim: 2 }],
        }
    }

    /// Single three-level photon mode.
    pub fn mode(role: Role) -> Self {
        Self {
            parts: alloc::vec![Subsystem { role, dim: 3 }],
        }
    }

    pub fn of(parts: &[(Role, usize)]) -> Result<Self> {
        Self::new(
            parts
                .iter()
                .map(|&(role, dim)| Subsystem { role, dim })
                .collect(),
        )
    }

    pub fn parts(&self) -> &[Subsystem] {
        &self.parts
    }

    pub fn roles(&self) -> impl Iterator<Item = Role> + '_ {
        self.parts.iter().map(|p| p.role)
    }

    /// Total Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.parts.iter().map(|p| p.dim).product()
    }

    pub fn position(&self, role: Role) -> Option<usize> {
        self.parts.iter().position(|p| p.role == role)
    }

    pub fn contains(&self, role: Role) -> bool {
        self.position(role).is_some()
    }

    pub fn dim_of(&self, role: Role) -> Option<usize> {
        self.position(role).map(|i| self.parts[i].dim)
    }

    pub fn concat(&self, other: &Layout) -> Result<Layout> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Layout::new(parts)
    }

    /// Layout of `roles`, in the order given.
    pub fn select(&self, roles: &[Role]) -> Result<Layout> {
        let mut parts = Vec::with_capacity(roles.len());
        for &r in roles {
            let i = self.position(r).ok_or(Error::UnknownLabel(r))?;
            parts.push(self.parts[i]);
        }
        Layout::new(parts)
    }

    /// Copy of the layout with `role` replaced by a subsystem of dimension `dim`.
    pub(crate) fn with_dim(&self, role: Role, dim: usize) -> Result<Layout> {
        let i = self.position(role).ok_or(Error::UnknownLabel(role))?;
        let mut parts = self.parts.clone();
        parts[i].dim = dim;
        Layout::new(parts)
    }

    /// Digits of a basis index, one per subsystem.
    pub(crate) fn digits(&self, mut index: usize, out: &mut [usize]) {
        for (k, p) in self.parts.iter().enumerate().rev() {
            out[k] = index % p.dim;
            index /= p.dim;
        }
    }

    pub(crate) fn index_of(&self, digits: &[usize]) -> usize {
        self.parts
            .iter()
            .zip(digits)
            .fold(0, |acc, (p, &d)| acc * p.dim + d)
    }

    /// Splits every basis index into the index over `targets` (in the given
    /// order) and the index over the remaining subsystems (in layout order).
    pub(crate) fn split(&self, targets: &[Role]) -> Result<Split> {
        if targets.is_empty() {
            return Err(Error::EmptyLabels);
        }
        let mut target_pos = Vec::with_capacity(targets.len());
        for (i, &t) in targets.iter().enumerate() {
            if targets[..i].contains(&t) {
                return Err(Error::DuplicateLabel(t));
            }
            target_pos.push(self.position(t).ok_or(Error::UnknownLabel(t))?);
        }
        let rest_pos: Vec<usize> = (0..self.parts.len())
            .filter(|i| !target_pos.contains(i))
            .collect();
        let target_dim: usize = target_pos.iter().map(|&i| self.parts[i].dim).product();
        let rest_dim: usize = rest_pos.iter().map(|&i| self.parts[i].dim).product();

        let n = self.dim();
        let mut digits = alloc::vec![0; self.parts.len()];
        let mut pairs = Vec::with_capacity(n);
        let mut full = alloc::vec![0; n];
        for idx in 0..n {
            self.digits(idx, &mut digits);
            let t = target_pos
                .iter()
                .fold(0, |acc, &i| acc * self.parts[i].dim + digits[i]);
            let r = rest_pos
                .iter()
                .fold(0, |acc, &i| acc * self.parts[i].dim + digits[i]);
            pairs.push((t, r));
            full[t * rest_dim + r] = idx;
        }
        Ok(Split {
            target_dim,
            rest_dim,
            pairs,
            full,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_layouts() {
        assert_eq!(
            Layout::of(&[(Role::Home, 4)]),
            Err(Error::UnsupportedDim(4))
        );
        assert_eq!(
            Layout::of(&[(Role::Home, 2), (Role::Home, 2)]),
            Err(Error::DuplicateLabel(Role::Home))
        );
        assert_eq!(Layout::of(&[]), Err(Error::EmptyLabels));
    }

    #[test]
    fn first_label_is_most_significant() {
        let l = Layout::of(&[(Role::Home, 2), (Role::Travel, 3)]).unwrap();
        assert_eq!(l.dim(), 6);
        let mut d = [0; 2];
        l.digits(4, &mut d);
        assert_eq!(d, [1, 1]);
        assert_eq!(l.index_of(&d), 4);
    }

    #[test]
    fn split_orders_targets_as_given() {
        let l = Layout::of(&[(Role::Home, 2), (Role::Travel, 2), (Role::Ancilla, 2)]).unwrap();
        let s = l.split(&[Role::Ancilla, Role::Home]).unwrap();
        assert_eq!((s.target_dim, s.rest_dim), (4, 2));
        // |h=1, t=0, a=1> is index 5; target index a*2+h = 3, rest = t = 0.
        assert_eq!(s.pairs[5], (3, 0));
        assert_eq!(s.full[3 * 2], 5);
        assert_eq!(
            l.split(&[Role::ModeX]).err(),
            Some(Error::UnknownLabel(Role::ModeX))
        );
    }
}
