use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{format_rational, rational_json, Poly, Rational};
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by `Φ_d`
/// for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Poly> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![Rational::zero(); n as usize + 1];
    num[0] = -Rational::one();
    num[n as usize] = Rational::one();
    let mut p = Poly::from_coeffs(num);
    for d in (1..n).filter(|d| n % d == 0) {
        let (q, r) = p.div_rem(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    let p = Arc::new(p);
    phi_cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Element of `ℚ(ζ_N)` in the power basis `1, ζ, …, ζ^{φ(N)-1}`.
///
/// The stored conductor is never minimized after arithmetic; equality embeds
/// both sides into the lcm of the two conductors.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Reduces a polynomial in `ζ_N` to canonical form.
    pub fn from_poly_coeffs(conductor: u32, coeffs: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        Cyclotomic {
            conductor,
            coeffs: Poly::rem_monic(coeffs, &phi),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(super::rat(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The same value written in `ℚ(ζ_M)`; `M` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m % self.conductor == 0, "cannot embed ℚ(ζ_{}) into ℚ(ζ_{m})", self.conductor);
        let step = (m / self.conductor) as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Self::from_poly_coeffs(m, coeffs)
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let m = self.conductor.lcm(&other.conductor);
        (self.embed(m), other.embed(m))
    }

    /// The rational value, if every non-constant coefficient vanishes.
    pub fn as_rational(&self) -> Result<Rational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Ok(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// Complex conjugate: `ζ^i ↦ ζ^{-i}`.
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(n - i) % n] += c;
        }
        Self::from_poly_coeffs(self.conductor, coeffs)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_polynomial(self.conductor);
        let a = Poly::from_coeffs(self.coeffs.clone());
        let (g, s, _) = a.ext_gcd(&phi);
        debug_assert_eq!(g, Poly::one());
        Some(Self::from_poly_coeffs(self.conductor, s.into_coeffs()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// `ζ_N^j` written in `ℚ(ζ_N)`.
    pub fn root_of_unity(n: u32, j: i64) -> Self {
        let e = j.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Self::from_poly_coeffs(n, coeffs)
    }

    /// A rational value as a JSON number or `"p/q"` string; otherwise
    /// `{"conductor": N, "coeffs": [...]}` in the power basis of `ζ_N`.
    pub fn to_json(&self) -> serde_json::Value {
        match self.as_rational() {
            Ok(r) => rational_json(&r),
            Err(_) => serde_json::json!({
                "conductor": self.conductor,
                "coeffs": self.coeffs.iter().map(rational_json).collect::<Vec<_>>(),
            }),
        }
    }
}

/// `ζ_k^j` represented inside `ℚ(ζ_N)`; requires `k | N`.
pub fn embed_root(k: u32, j: i64, n: u32) -> Result<Cyclotomic> {
    if k == 0 || n == 0 || n % k != 0 {
        return Err(Error::RootOrder { k, n });
    }
    let e = (j.rem_euclid(k as i64) as u64 * (n / k) as u64) % n as u64;
    Ok(Cyclotomic::root_of_unity(n, e as i64))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lift_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
            };
        }
        let (a, b) = self.lift_pair(rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor != rhs.conductor {
            if self.conductor == 1 {
                return rhs.scale(&self.coeffs[0]);
            }
            if rhs.conductor == 1 {
                return self.scale(&rhs.coeffs[0]);
            }
            let (a, b) = self.lift_pair(rhs);
            return &a * &b;
        }
        if self.conductor == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] * &rhs.coeffs[0]);
        }
        let mut prod = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic::from_poly_coeffs(self.conductor, prod)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::one()
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_rational(c),
                1 => format!("{}*z{}", format_rational(c), self.conductor),
                _ => format!("{}*z{}^{}", format_rational(c), self.conductor, i),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
