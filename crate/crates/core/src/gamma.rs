//! Whitehead's quadratic functor on a free abelian group with ordered basis,
//! and evaluation of quadratic maps valued in `Z[π∖1]/⟨σ(g) - g⟩`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groupring::RingElement;
use crate::groups::GroupDescription;

/// A quadratic map on `Z^n` given by its diagonal values and the
/// off-diagonal values of its associated pairing, all in reduced form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticData {
    group: Arc<GroupDescription>,
    labels: Vec<String>,
    diagonal: Vec<RingElement>,
    /// Keyed by `(α, β)` with `α > β`.
    off_diagonal: BTreeMap<(usize, usize), RingElement>,
}

impl QuadraticData {
    /// Values are reduced on the way in. Off-diagonal keys must satisfy `α > β`.
    pub fn new(
        group: Arc<GroupDescription>,
        labels: Vec<String>,
        diagonal: Vec<RingElement>,
        off_diagonal: BTreeMap<(usize, usize), RingElement>,
    ) -> Result<Self> {
        if diagonal.len() != labels.len() {
            return Err(Error::Malformed(format!(
                "{} diagonal values for {} labels",
                diagonal.len(),
                labels.len()
            )));
        }
        let reduce = |r: &RingElement| -> Result<RingElement> {
            if r.group() != &*group {
                return Err(Error::GroupMismatch("quadratic value over another group".into()));
            }
            r.reduce_mod_antisymmetric()
        };
        let diagonal = diagonal.iter().map(reduce).collect::<Result<Vec<_>>>()?;
        let mut off = BTreeMap::new();
        for ((a, b), v) in off_diagonal {
            if a <= b || a >= labels.len() {
                return Err(Error::Malformed(format!("off-diagonal key ({a}, {b})")));
            }
            let v = reduce(&v)?;
            if !v.is_zero() {
                off.insert((a, b), v);
            }
        }
        Ok(QuadraticData {
            group,
            labels,
            diagonal,
            off_diagonal: off,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn diagonal(&self, a: usize) -> &RingElement {
        &self.diagonal[a]
    }

    /// Associated pairing on basis vectors, symmetric in the quotient.
    /// On the diagonal it is the reduced norm of the stored value.
    pub fn beta(&self, a: usize, b: usize) -> RingElement {
        if a == b {
            return self.diagonal[a]
                .norm_map()
                .and_then(|n| n.reduce_mod_antisymmetric())
                .expect("diagonal values are reduced");
        }
        let key = if a > b { (a, b) } else { (b, a) };
        self.off_diagonal
            .get(&key)
            .cloned()
            .unwrap_or_else(|| RingElement::zero(self.group.clone()))
    }

    fn check_len(&self, x: &[BigInt]) -> Result<()> {
        if x.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::Malformed(format!(
                "vector of length {} over a basis of size {}",
                x.len(),
                self.rank()
            )))
        }
    }

    /// `q(Σ x_α b_α)` in reduced form.
    pub fn evaluate(&self, x: &[BigInt]) -> Result<RingElement> {
        self.check_len(x)?;
        let mut acc = RingElement::zero(self.group.clone());
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            acc = &acc + &self.diagonal[a].scale(xa);
            let c2: BigInt = xa * (xa - 1) / 2;
            acc = &acc + &self.beta(a, a).scale(&c2);
            for (b, xb) in x.iter().enumerate().take(a) {
                if xb.is_zero() {
                    continue;
                }
                if let Some(v) = self.off_diagonal.get(&(a, b)) {
                    acc = &acc + &v.scale(&(xa * xb));
                }
            }
        }
        acc.reduce_mod_antisymmetric()
    }

    /// Associated bilinear pairing `q(x+y) - q(x) - q(y)`.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> Result<RingElement> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut acc = RingElement::zero(self.group.clone());
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                acc = &acc + &self.beta(a, b).scale(&(xa * yb));
            }
        }
        acc.reduce_mod_antisymmetric()
    }

    /// Nonzero generators of the image of `Γ(q)`: diagonal values first,
    /// then off-diagonal pairings in key order.
    pub fn gamma_image_generators(&self) -> Vec<RingElement> {
        self.diagonal
            .iter()
            .filter(|v| !v.is_zero())
            .cloned()
            .chain(self.off_diagonal.values().cloned())
            .collect()
    }
}

/// Free-function form of [`QuadraticData::evaluate`] for integer vectors.
pub fn evaluate_quadratic(q: &QuadraticData, x: &[i64]) -> Result<RingElement> {
    let x: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
    q.evaluate(&x)
}

pub fn gamma_image_generators(q: &QuadraticData) -> Vec<RingElement> {
    q.gamma_image_generators()
}
