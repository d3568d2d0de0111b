//! Seifert matrices and the classical invariants computed from them.

pub mod numeric;
pub mod signature;

use crate::error::{Error, Result};
use crate::poly::laurent::LaurentPoly;
use crate::poly::matrix::{det_poly, det_rat};
use crate::poly::qpoly::{rat, QPoly, Rational};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

pub use signature::{
    rho0, signature_at, signature_at_fraction, signature_profile, JumpPoint, Rho0Value, SignatureArc,
    SignatureProfile,
};

/// A `2g x 2g` integer Seifert matrix with `det(V - V^T) = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
    name: Option<String>,
}

/// Knot file format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct KnotJson {
    pub name: String,
    pub seifert: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSeifert("matrix is not square".into()));
        }
        if n % 2 != 0 {
            return Err(Error::InvalidSeifert(format!("odd dimension {n}")));
        }
        let skew: Vec<Vec<Rational>> =
            (0..n).map(|i| (0..n).map(|j| rat(entries[i][j] - entries[j][i])).collect()).collect();
        let d = det_rat(&skew);
        if d.abs() != rat(1) {
            return Err(Error::InvalidSeifert(format!("det(V - V^T) = {d}, expected ±1")));
        }
        Ok(SeifertMatrix { entries, name: None })
    }

    pub fn named(entries: Vec<Vec<i64>>, name: &str) -> Result<Self> {
        Ok(Self::new(entries)?.with_name(name))
    }

    pub fn unknot() -> Self {
        SeifertMatrix { entries: vec![], name: Some("unknot".into()) }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn genus(&self) -> usize {
        self.dim() / 2
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// `V - t V^T` as a polynomial matrix.
    pub fn presentation(&self) -> Vec<Vec<QPoly>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| QPoly::from_i64(&[self.entries[i][j], -self.entries[j][i]])).collect())
            .collect()
    }

    /// Normalized `det(V - t V^T)`.
    pub fn alexander_poly(&self) -> LaurentPoly {
        LaurentPoly::from_qpoly(det_poly(&self.presentation()), 0).normalize()
    }

    /// Arf invariant: 0 iff `Δ(-1) ≡ ±1 (mod 8)`.
    pub fn arf(&self) -> u8 {
        let v = self.alexander_poly().eval(&rat(-1)).expect("polynomial evaluation");
        let m = v.to_integer().abs().mod_floor(&8.into()).to_u8().unwrap();
        if m == 1 || m == 7 {
            0
        } else {
            1
        }
    }

    /// Block sum, realizing connected sum.
    pub fn connected_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        let (a, b) = (self.dim(), other.dim());
        let mut m = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            m[i][..a].copy_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            m[a + i][a..].copy_from_slice(&other.entries[i]);
        }
        let name = match (&self.name, &other.name) {
            (Some(x), Some(y)) => Some(format!("{x}#{y}")),
            _ => None,
        };
        SeifertMatrix { entries: m, name }
    }

    /// `-V^T`, a Seifert matrix for the mirror image.
    pub fn mirror(&self) -> SeifertMatrix {
        let n = self.dim();
        let entries = (0..n).map(|i| (0..n).map(|j| -self.entries[j][i]).collect()).collect();
        SeifertMatrix { entries, name: self.name.as_ref().map(|s| format!("-{s}")) }
    }

    pub fn to_json(&self) -> KnotJson {
        KnotJson { name: self.name.clone().unwrap_or_default(), seifert: self.entries.clone() }
    }

    pub fn from_json(k: &KnotJson) -> Result<Self> {
        Ok(Self::new(k.seifert.clone())?.with_name(&k.name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SeifertMatrix::new(vec![vec![1, 0], vec![0, 1]]).is_err());
        assert!(SeifertMatrix::new(vec![vec![1]]).is_err());
        assert!(SeifertMatrix::new(vec![vec![1, 2], vec![3]]).is_err());
        assert!(SeifertMatrix::new(vec![]).is_ok());
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(trefoil().alexander_poly(), poly("t^2-t+1"));
        assert_eq!(SeifertMatrix::unknot().alexander_poly(), poly("1"));
        let fig8 = SeifertMatrix::new(vec![vec![1, 1], vec![0, -1]]).unwrap();
        assert_eq!(fig8.alexander_poly(), poly("t^2-3t+1"));
        for k in 1..6 {
            let r = SeifertMatrix::new(vec![vec![0, k + 1], vec![k, 0]]).unwrap();
            assert_eq!(r.alexander_poly(), crate::isogeny::family_member(k));
        }
    }

    #[test]
    fn arf_examples() {
        assert_eq!(SeifertMatrix::unknot().arf(), 0);
        assert_eq!(trefoil().arf(), 1);
        let fig8 = SeifertMatrix::new(vec![vec![1, 1], vec![0, -1]]).unwrap();
        assert_eq!(fig8.arf(), 1);
        assert_eq!(trefoil().connected_sum(&trefoil()).arf(), 0);
    }

    #[test]
    fn sums_and_mirrors() {
        let t = trefoil();
        assert_eq!(t.connected_sum(&SeifertMatrix::unknot()).entries(), t.entries());
        assert_eq!(t.mirror().mirror(), t);
        assert_eq!(t.connected_sum(&t).alexander_poly(), poly("(t^2-t+1)^2"));
    }
}
