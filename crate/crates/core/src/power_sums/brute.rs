//! Direct summation of the power-sum definitions.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::real::{Precision, Real};

use super::{PowerSumQuery, SumFamily, Theta, Trig};

/// Node values `base(a_ℓ)` and weights for one `(family, node_param, q, θ)`,
/// reusable across powers.
#[derive(Debug, Clone)]
pub struct NodeTable {
    family: SumFamily,
    base: Vec<Real>,
    weight: Vec<Real>,
    prec: Precision,
}

fn apply(t: Trig, x: &Real) -> Real {
    match t {
        Trig::Cos => x.cos(),
        Trig::Sin => x.sin(),
    }
}

impl NodeTable {
    pub fn new(family: SumFamily, node_param: u32, q: u32, theta: &Theta, prec: Precision) -> Self {
        let divisor = family.angle_divisor(node_param) as i64;
        let count = family.node_count(node_param);
        let step = family.node_step();
        let p = family.harmonic_order(q) as i64;
        let pi = Real::pi(prec);
        let mut base = Vec::with_capacity(count as usize);
        let mut weight = Vec::with_capacity(count as usize);
        for l in 0..count as i64 {
            // a = (θ + cπℓ)/N, exact in π-multiples when θ is
            let a = match theta {
                Theta::PiMultiple(t) => {
                    let turn = (t + BigRational::from_integer(BigInt::from(step * l)))
                        / BigRational::from_integer(BigInt::from(divisor));
                    &pi * Real::from_ratio(&turn, prec)
                }
                Theta::Raw(x) => {
                    (x.with_precision(prec) + pi.mul_i64(step * l)).div_i64(divisor)
                }
            };
            base.push(apply(family.base(), &a));
            weight.push(match family.weight() {
                Some(t) => apply(t, &a.mul_i64(p)),
                None => Real::one(prec),
            });
        }
        Self { family, base, weight, prec }
    }

    /// The average at power index `k`.
    pub fn value(&self, k: u32) -> Real {
        let power = self.family.power(k);
        let mut sum = Real::zero(self.prec);
        for (b, w) in self.base.iter().zip(&self.weight) {
            sum = sum + b.powi(power) * w;
        }
        sum.div_i64(self.base.len() as i64)
    }
}

/// Numeric left-hand side of a query.
pub fn brute_force(query: &PowerSumQuery, prec: Precision) -> Result<Real> {
    query.validate()?;
    let table = NodeTable::new(query.family, query.node_param, query.q, &query.theta, prec);
    Ok(table.value(query.k))
}
