//! The dihedral group `D_2n` as explicit permutations of `[n]`.
//!
//! Every element is stored canonically as `x -> offset + x` (a rotation) or
//! `x -> offset - x` (a reflexion), arithmetic modulo `[n]`. The paper-facing
//! names are recovered by [`DihedralElement::kind`]:
//!
//! * `σ^i`: `x -> x + i`, for `0 <= i < n`;
//! * `ρ_i`: `x -> 2i - x`, fixing `i` (and `i + n/2` when `n` is even);
//! * `δ_i` (even `n` only): `x -> 2i - 1 - x`, fixed-point free.
//!
//! For odd `n` the `ρ_i` are indexed by `1..=n`; for even `n` both `ρ_i` and
//! `δ_i` are indexed by `1..=n/2`.

mod action;
mod shifts;

use std::cmp::Ordering;
use std::fmt;

use crate::modn;

pub use action::{act_on_vertex, induced_automorphism, stable_parameters};
pub use shifts::{
    enumerate_shifts, enumerate_shifts_with, is_shift, non_shift_witness, predicted_shifts,
    shift_regime, Provenance, ShiftRegime, ShiftSet, ShiftVerdict,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DihedralError {
    #[error("dihedral group needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error("{what} index {index} out of range for n = {n}")]
    IndexOutOfRange { what: &'static str, index: usize, n: usize },
    #[error("point {x} is not in [1, {n}]")]
    PointOutOfRange { x: usize, n: usize },
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("images ({0}, {1}) of 1 and 2 do not come from a dihedral element of [{2}]")]
    NotDihedral(usize, usize, usize),
    #[error("cannot parse group element {0:?}")]
    Parse(String),
    #[error("graph is not a labelled stable Kneser graph: {0}")]
    NotStableKneser(String),
    #[error("{0} does not induce an automorphism (action defect)")]
    NotAutomorphism(String),
    #[error("no shift characterisation for n = {n} <= ks = {}", .k * .s)]
    NoPrediction { n: usize, k: usize, s: usize },
    #[error("{0} is a predicted shift or the identity; no witness exists")]
    NoWitness(String),
    #[error("constructed witness {witness} for {element} is invalid (defect)")]
    WitnessDefect { element: String, witness: String },
}

/// Paper-facing name of a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementKind {
    Rotation(usize),
    ReflRho(usize),
    ReflDelta(usize),
}

/// An element of `D_2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    n: usize,
    reflect: bool,
    offset: usize,
}

impl DihedralElement {
    fn check_n(n: usize) -> Result<(), DihedralError> {
        if n < 3 {
            Err(DihedralError::TooSmall(n))
        } else {
            Ok(())
        }
    }

    pub fn identity(n: usize) -> Result<Self, DihedralError> {
        Self::rotation(n, 0)
    }

    /// `σ^i`, `0 <= i < n`.
    pub fn rotation(n: usize, i: usize) -> Result<Self, DihedralError> {
        Self::check_n(n)?;
        if i >= n {
            return Err(DihedralError::IndexOutOfRange { what: "rotation", index: i, n });
        }
        Ok(DihedralElement { n, reflect: false, offset: i })
    }

    /// `ρ_i`: `1 <= i <= n` for odd `n`, `1 <= i <= n/2` for even `n`.
    pub fn rho(n: usize, i: usize) -> Result<Self, DihedralError> {
        Self::check_n(n)?;
        let max = if n % 2 == 1 { n } else { n / 2 };
        if i == 0 || i > max {
            return Err(DihedralError::IndexOutOfRange { what: "rho", index: i, n });
        }
        Ok(DihedralElement { n, reflect: true, offset: (2 * i) % n })
    }

    /// `δ_i`, even `n` only, `1 <= i <= n/2`.
    pub fn delta(n: usize, i: usize) -> Result<Self, DihedralError> {
        Self::check_n(n)?;
        if n % 2 == 1 || i == 0 || i > n / 2 {
            return Err(DihedralError::IndexOutOfRange { what: "delta", index: i, n });
        }
        Ok(DihedralElement { n, reflect: true, offset: (2 * i - 1) % n })
    }

    /// All `2n` elements: rotations by index, then `ρ`s, then `δ`s.
    pub fn all(n: usize) -> Result<Vec<Self>, DihedralError> {
        Self::check_n(n)?;
        let mut out: Vec<Self> = (0..n).map(|i| Self::rotation(n, i)).collect::<Result<_, _>>()?;
        if n % 2 == 1 {
            out.extend((1..=n).map(|i| Self::rho(n, i).unwrap()));
        } else {
            out.extend((1..=n / 2).map(|i| Self::rho(n, i).unwrap()));
            out.extend((1..=n / 2).map(|i| Self::delta(n, i).unwrap()));
        }
        Ok(out)
    }

    /// Recovers the element with `1 -> img1` and `2 -> img2`.
    pub fn from_images(n: usize, img1: usize, img2: usize) -> Result<Self, DihedralError> {
        Self::check_n(n)?;
        for x in [img1, img2] {
            if x == 0 || x > n {
                return Err(DihedralError::PointOutOfRange { x, n });
            }
        }
        let r1 = img1 as i64;
        if img2 == modn::wrap(r1 + 1, n) {
            Ok(DihedralElement { n, reflect: false, offset: (r1 - 1).rem_euclid(n as i64) as usize })
        } else if img2 == modn::wrap(r1 - 1, n) {
            Ok(DihedralElement { n, reflect: true, offset: (r1 + 1).rem_euclid(n as i64) as usize })
        } else {
            Err(DihedralError::NotDihedral(img1, img2, n))
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        !self.reflect && self.offset == 0
    }

    pub fn is_rotation(&self) -> bool {
        !self.reflect
    }

    pub fn kind(&self) -> ElementKind {
        let n = self.n;
        if !self.reflect {
            return ElementKind::Rotation(self.offset);
        }
        if n % 2 == 1 {
            // 2i = offset (mod n)  =>  i = offset * (n+1)/2
            ElementKind::ReflRho(modn::wrap((self.offset * n.div_ceil(2)) as i64, n))
        } else if self.offset % 2 == 0 {
            ElementKind::ReflRho(modn::wrap((self.offset / 2) as i64, n / 2))
        } else {
            ElementKind::ReflDelta(modn::wrap(self.offset.div_ceil(2) as i64, n / 2))
        }
    }

    #[inline]
    pub(crate) fn apply_unchecked(&self, x: usize) -> usize {
        let (x, off) = (x as i64, self.offset as i64);
        if self.reflect {
            modn::wrap(off - x, self.n)
        } else {
            modn::wrap(off + x, self.n)
        }
    }

    /// Image of the point `x` of `[n]`.
    pub fn apply(&self, x: usize) -> Result<usize, DihedralError> {
        if x == 0 || x > self.n {
            return Err(DihedralError::PointOutOfRange { x, n: self.n });
        }
        Ok(self.apply_unchecked(x))
    }

    /// The permutation as a list: entry `x-1` is the image of `x`.
    pub fn permutation(&self) -> Vec<usize> {
        (1..=self.n).map(|x| self.apply_unchecked(x)).collect()
    }

    /// `self ∘ other`, i.e. `x -> self(other(x))`, normalised by probing 1 and 2.
    pub fn compose(&self, other: &Self) -> Result<Self, DihedralError> {
        if self.n != other.n {
            return Err(DihedralError::AmbientMismatch(self.n, other.n));
        }
        let img1 = self.apply_unchecked(other.apply_unchecked(1));
        let img2 = self.apply_unchecked(other.apply_unchecked(2));
        Self::from_images(self.n, img1, img2)
    }

    pub fn inverse(&self) -> Self {
        if self.reflect {
            *self
        } else {
            DihedralElement { offset: (self.n - self.offset) % self.n, ..*self }
        }
    }

    /// Parses `r<i>`, `p<i>` or `d<i>` for the group on `[n]`.
    pub fn parse(text: &str, n: usize) -> Result<Self, DihedralError> {
        let t = text.trim();
        let err = || DihedralError::Parse(t.to_string());
        let mut chars = t.chars();
        let tag = chars.next().ok_or_else(err)?;
        let index: usize = chars.as_str().parse().map_err(|_| err())?;
        match tag {
            'r' => Self::rotation(n, index),
            'p' => Self::rho(n, index),
            'd' => Self::delta(n, index),
            _ => Err(err()),
        }
    }
}

impl PartialOrd for DihedralElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DihedralElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.kind()).cmp(&(other.n, other.kind()))
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ElementKind::Rotation(i) => write!(f, "r{i}"),
            ElementKind::ReflRho(i) => write!(f, "p{i}"),
            ElementKind::ReflDelta(i) => write!(f, "d{i}"),
        }
    }
}
