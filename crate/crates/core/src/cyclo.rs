//! Exact arithmetic in the cyclotomic field `Q(A)`, `A` a primitive `4r`-th root of unity.
//!
//! Elements are stored as an integer coefficient vector over a common positive
//! denominator, reduced modulo the cyclotomic polynomial `Φ_{4r}` after every
//! operation. Two scalars are equal iff their canonical forms are equal.
//!
//! The quantum parameter is `q = A²`, so `q` is a primitive `2r`-th root of unity.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Rational coefficient; `BigRational` keeps `gcd(num, den) = 1` and `den > 0`.
pub type Rational = BigRational;

/// Largest supported level. Fields are built lazily and cached for the process lifetime.
pub const MAX_LEVEL: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("division by zero in Q(A)")]
    DivisionByZero,
    #[error("unsupported level {0} (must be in 1..={MAX_LEVEL})")]
    InvalidLevel(u32),
    #[error("malformed scalar: {0}")]
    Malformed(String),
}

/// Returns `Φ_m` as integer coefficients, lowest degree first.
///
/// Computed by dividing `x^m - 1` by `Φ_d` for every proper divisor `d` of `m`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Exact division by a monic integer polynomial; panics if the remainder is nonzero.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    assert!(
        rem.iter().all(Zero::is_zero),
        "non-exact cyclotomic division"
    );
    quot
}

/// Euler's totient.
pub fn totient(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
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

/// Per-level data: `Φ_{4r}` and the reduced powers of `A`.
#[derive(Debug)]
struct CycloField {
    degree: usize,
    /// Low coefficients of the monic `Φ_{4r}` (length `degree`).
    phi_low: Vec<BigInt>,
    /// `A^k` for `k in 0..4r`, reduced.
    powers: Vec<Vec<BigInt>>,
}

impl CycloField {
    fn new(level: u32) -> Self {
        let order = 4 * level;
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let phi_low = phi[..degree].to_vec();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by A
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &phi_low[i];
                }
            }
        }
        CycloField {
            degree,
            phi_low,
            powers,
        }
    }

    /// Reduces an integer polynomial of any length modulo `Φ_{4r}`.
    fn reduce(&self, mut poly: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree;
        if poly.len() > d {
            for k in (d..poly.len()).rev() {
                if poly[k].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut poly[k]);
                for i in 0..d {
                    if !self.phi_low[i].is_zero() {
                        let t = &c * &self.phi_low[i];
                        poly[k - d + i] -= t;
                    }
                }
            }
            poly.truncate(d);
        }
        poly.resize(d, BigInt::zero());
        poly
    }
}

static FIELDS: [OnceLock<CycloField>; MAX_LEVEL as usize + 1] =
    [const { OnceLock::new() }; MAX_LEVEL as usize + 1];

fn field(level: u32) -> &'static CycloField {
    assert!(
        (1..=MAX_LEVEL).contains(&level),
        "unsupported level {level}"
    );
    FIELDS[level as usize].get_or_init(|| CycloField::new(level))
}

/// Checks that `level` is usable.
pub fn check_level(level: u32) -> Result<(), CycloError> {
    if (1..=MAX_LEVEL).contains(&level) {
        Ok(())
    } else {
        Err(CycloError::InvalidLevel(level))
    }
}

/// Degree `φ(4r)` of `Q(A)` over `Q`.
pub fn field_degree(level: u32) -> usize {
    field(level).degree
}

/// An element of `Q(A)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    level: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloScalar {
    pub fn zero(level: u32) -> Self {
        let d = field(level).degree;
        CycloScalar {
            level,
            num: vec![BigInt::zero(); d],
            den: BigInt::one(),
        }
    }

    pub fn one(level: u32) -> Self {
        Self::from_integer(level, 1)
    }

    pub fn from_integer(level: u32, n: i64) -> Self {
        let mut s = Self::zero(level);
        s.num[0] = BigInt::from(n);
        s
    }

    pub fn from_rational(level: u32, q: &Rational) -> Self {
        let mut s = Self::zero(level);
        s.num[0] = q.numer().clone();
        s.den = q.denom().clone();
        s.normalize();
        s
    }

    /// Builds a scalar from rational coefficients of `1, A, A², ...` (any length).
    pub fn from_coeffs(level: u32, coeffs: &[Rational]) -> Self {
        let f = field(level);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let poly: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut s = CycloScalar {
            level,
            num: f.reduce(poly),
            den,
        };
        s.normalize();
        s
    }

    /// `A^n`; negative exponents wrap modulo `4r`.
    pub fn a_power(level: u32, n: i64) -> Self {
        let f = field(level);
        let order = 4 * level as i64;
        let k = n.rem_euclid(order) as usize;
        CycloScalar {
            level,
            num: f.powers[k].clone(),
            den: BigInt::one(),
        }
    }

    /// `q^n = A^{2n}`.
    pub fn q_power(level: u32, n: i64) -> Self {
        Self::a_power(level, 2 * n)
    }

    /// Quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`.
    pub fn quantum_int(level: u32, n: i64) -> Self {
        if n == 0 {
            return Self::zero(level);
        }
        if n < 0 {
            return -Self::quantum_int(level, -n);
        }
        // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
        let mut acc = Self::zero(level);
        let mut e = n - 1;
        while e >= 1 - n {
            acc += &Self::q_power(level, e);
            e -= 2;
        }
        acc
    }

    /// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
    pub fn quantum_factorial(level: u32, n: u32) -> Self {
        (1..=n as i64).fold(Self::one(level), |acc, m| {
            &acc * &Self::quantum_int(level, m)
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Rational coefficients of `1, A, ..., A^{φ(4r)-1}`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|n| Rational::new(n.clone(), self.den.clone()))
            .collect()
    }

    /// Returns the rational value if the scalar lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), CycloError> {
        if self.level == other.level {
            Ok(())
        } else {
            Err(CycloError::LevelMismatch(self.level, other.level))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate {
                -other.clone()
            } else {
                other.clone()
            };
        }
        let mut out = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            CycloScalar {
                level: self.level,
                num,
                den: self.den.clone(),
            }
        } else {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect();
            CycloScalar {
                level: self.level,
                num,
                den: &self.den * &other.den,
            }
        };
        out.normalize();
        out
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.level);
        }
        let f = field(self.level);
        let d = f.degree;
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out = CycloScalar {
            level: self.level,
            num: f.reduce(prod),
            den: &self.den * &other.den,
        };
        out.normalize();
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_{4r}`.
    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let f = field(self.level);
        let d = f.degree;
        let mut phi: Vec<Rational> = f
            .phi_low
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        phi.push(Rational::one());
        let a: Vec<Rational> = self
            .num
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // invariant: s_i * a ≡ r_i (mod Φ)
        let (mut r0, mut r1) = (trim(phi), trim(a));
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r1.is_empty() {
            // gcd is nontrivial; impossible for nonzero a since Φ is irreducible
            return Err(CycloError::DivisionByZero);
        }
        let c = r1[0].clone();
        let coeffs: Vec<Rational> = s1.iter().map(|x| x / &c).collect();
        let mut out = Self::from_coeffs(self.level, &coeffs);
        // from_coeffs left the denominator of the original scalar out
        out = out.mul_unchecked(&Self::from_rational(
            self.level,
            &Rational::from_integer(self.den.clone()),
        ));
        debug_assert_eq!(d, out.num.len());
        Ok(out)
    }

    /// `(-1)^n` as a scalar.
    pub fn sign(level: u32, n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Self::one(level)
        } else {
            Self::from_integer(level, -1)
        }
    }

    /// Numeric value at `A = exp(iπ/(2r))`. Display and debugging only.
    pub fn to_complex(&self) -> Complex64 {
        let order = 4.0 * self.level as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        self.num
            .iter()
            .enumerate()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, c)| {
                let angle = 2.0 * std::f64::consts::PI * k as f64 / order;
                acc + Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN) / den, angle)
            })
    }

    pub fn to_repr(&self) -> ScalarRepr {
        self.num
            .iter()
            .map(|n| {
                let q = Rational::new(n.clone(), self.den.clone());
                RationalRepr {
                    num: q.numer().to_string(),
                    den: q.denom().to_string(),
                }
            })
            .collect()
    }

    /// Inverse of [`CycloScalar::to_repr`]; the coefficient count must equal `φ(4r)`.
    pub fn from_repr(level: u32, repr: &[RationalRepr]) -> Result<Self, CycloError> {
        check_level(level)?;
        let d = field(level).degree;
        if repr.len() != d {
            return Err(CycloError::Malformed(format!(
                "expected {d} coefficients, found {}",
                repr.len()
            )));
        }
        let coeffs =
            repr.iter()
                .map(|r| {
                    let n: BigInt = r
                        .num
                        .parse()
                        .map_err(|_| CycloError::Malformed(format!("bad numerator {:?}", r.num)))?;
                    let d: BigInt = r.den.parse().map_err(|_| {
                        CycloError::Malformed(format!("bad denominator {:?}", r.den))
                    })?;
                    if !d.is_positive() {
                        return Err(CycloError::Malformed("denominator must be positive".into()));
                    }
                    Ok(Rational::new(n, d))
                })
                .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(level, &coeffs))
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    let lead = b[db].clone();
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, y) in b.iter().enumerate() {
            rem[k + i] -= &c * y;
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

/// Decimal-string rational as it appears in serialized documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

/// Serialized scalar: coefficient `i` multiplies `A^i`.
pub type ScalarRepr = Vec<RationalRepr>;

impl Serialize for CycloScalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_repr().serialize(serializer)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CycloScalar> for &CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: &CycloScalar) -> CycloScalar {
                assert_eq!(self.level, rhs.level, "level mismatch");
                $body(self, rhs)
            }
        }
        impl $tr<CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: &CycloScalar) -> CycloScalar {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, |a: &CycloScalar, b| a.add_unchecked(b, false));
binop!(Sub, sub, |a: &CycloScalar, b| a.add_unchecked(b, true));
binop!(Mul, mul, |a: &CycloScalar, b| a.mul_unchecked(b));

impl AddAssign<&CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: &CycloScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycloScalar> for CycloScalar {
    fn sub_assign(&mut self, rhs: &CycloScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycloScalar> for CycloScalar {
    fn mul_assign(&mut self, rhs: &CycloScalar) {
        *self = &*self * rhs;
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(mut self) -> CycloScalar {
        for c in &mut self.num {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -self.clone()
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "A")?;
                    } else {
                        write!(f, "A^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[r={}] {}", self.level, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn degrees_match_totient() {
        for r in 1..=16 {
            assert_eq!(field_degree(r), totient(4 * r) as usize);
        }
    }

    #[test]
    fn roots_of_unity() {
        for r in 2..=8u32 {
            assert!(CycloScalar::a_power(r, 4 * r as i64).is_one());
            assert_eq!(CycloScalar::a_power(r, 2 * r as i64), -CycloScalar::one(r));
            let a = CycloScalar::a_power(r, 1);
            assert_eq!(a.inv().unwrap(), CycloScalar::a_power(r, 4 * r as i64 - 1));
            assert_eq!(
                CycloScalar::a_power(r, -3),
                CycloScalar::a_power(r, 4 * r as i64 - 3)
            );
        }
    }

    #[test]
    fn quantum_integers() {
        for r in 2..=8u32 {
            assert!(CycloScalar::quantum_int(r, 0).is_zero());
            assert!(CycloScalar::quantum_int(r, 1).is_one());
            assert!(CycloScalar::quantum_int(r, r as i64).is_zero());
            for n in 1..=2 * r as i64 {
                assert_eq!(
                    CycloScalar::quantum_int(r, -n),
                    -CycloScalar::quantum_int(r, n)
                );
            }
        }
        // [2] = 2cos(π/3) = 1 at r = 3
        assert!(CycloScalar::quantum_int(3, 2).is_one());
        assert!(CycloScalar::quantum_factorial(4, 0).is_one());
    }

    #[test]
    fn quantum_ints_match_numeric_embedding() {
        for r in 2..=8u32 {
            for n in -5..=12i64 {
                let exact = CycloScalar::quantum_int(r, n).to_complex();
                let angle = std::f64::consts::PI / r as f64;
                let expect = (n as f64 * angle).sin() / angle.sin();
                assert!((exact.re - expect).abs() < 1e-9 && exact.im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(CycloScalar::zero(5).inv(), Err(CycloError::DivisionByZero));
    }

    #[test]
    fn level_mismatch_is_an_error() {
        let a = CycloScalar::one(3);
        let b = CycloScalar::one(4);
        assert_eq!(a.try_add(&b), Err(CycloError::LevelMismatch(3, 4)));
        assert_eq!(a.try_mul(&b), Err(CycloError::LevelMismatch(3, 4)));
    }

    #[test]
    fn display_is_readable() {
        let x = CycloScalar::a_power(5, 1) - CycloScalar::from_integer(5, 2);
        assert_eq!(x.to_string(), "-2 + A");
    }

    #[test]
    fn serde_round_trip() {
        let r = 6;
        let x = (CycloScalar::quantum_int(r, 3) * CycloScalar::a_power(r, 5))
            .try_div(&CycloScalar::quantum_int(r, 2))
            .unwrap();
        let json = serde_json::to_string(&x).unwrap();
        let repr: ScalarRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(CycloScalar::from_repr(r, &repr).unwrap(), x);
        assert!(CycloScalar::from_repr(r, &repr[1..]).is_err());
    }
}
