use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;

use super::{BinaryIndex, Split};
use crate::error::{Error, Result};

fn walsh(v: &mut [BigRational]) {
    let mut h = 1;
    while h < v.len() {
        for start in (0..v.len()).step_by(2 * h) {
            for i in start..start + h {
                let a = v[i].clone();
                let b = v[i + h].clone();
                v[i + h] = &a - &b;
                v[i] = a + b;
            }
        }
        h *= 2;
    }
}

fn check_len(len: usize) -> Result<u32> {
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::InvalidArgument(format!("vector length {len} is not a power of two")));
    }
    Ok(len.trailing_zeros())
}

/// `f_j = Σ_i (-1)^{i·j} p_i` over indices in value order.
pub fn fourier(p: &[BigRational]) -> Result<Vec<BigRational>> {
    check_len(p.len())?;
    let mut v = p.to_vec();
    walsh(&mut v);
    Ok(v)
}

/// `p_i = 2^{-n} Σ_j (-1)^{i·j} f_j`.
pub fn fourier_inv(f: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = check_len(f.len())?;
    let mut v = f.to_vec();
    walsh(&mut v);
    let scale = BigRational::from_integer(BigInt::from(1u8) << n);
    Ok(v.into_iter().map(|x| x / &scale).collect())
}

/// Fourier coordinates of the one-split model: `f_j` is zero for odd `j`,
/// `u0` when `j` has even weight on the block `C`, and `u1` otherwise.
pub fn split_model_point(s: &Split, u0: &BigRational, u1: &BigRational) -> Vec<BigRational> {
    BinaryIndex::all(s.n())
        .map(|j| {
            if j.parity() == 1 {
                BigRational::zero()
            } else if (j.support() & s.c_mask()).count_ones().is_multiple_of(2) {
                u0.clone()
            } else {
                u1.clone()
            }
        })
        .collect()
}

/// Reads a JSON array whose entries are integers or strings like `"3/8"`.
pub fn parse_rational_vector(v: &Value) -> Result<Vec<BigRational>> {
    let items = v.as_array().ok_or_else(|| Error::InvalidArgument("expected a JSON array".into()))?;
    items
        .iter()
        .map(|x| {
            let s = match x {
                Value::String(s) => s.trim().to_string(),
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                _ => return Err(Error::InvalidArgument(format!("`{x}` is not an exact rational"))),
            };
            BigRational::from_str(&s).map_err(|_| Error::InvalidArgument(format!("`{s}` is not a rational")))
        })
        .collect()
}

pub fn rational_vector_json(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}
