//! Dense univariate polynomials over an exact coefficient ring.
//!
//! `Poly<T>` is generic over the coefficient type; the integer-domain
//! routines (content, pseudo-remainders, subresultant gcd, squarefree
//! decomposition) are available whenever `T` is a signed integer type.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact coefficient ring.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(a: &Self, b: &Self) -> Self;
}

macro_rules! impl_coeff {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            #[inline]
            fn mul_ref(a: &Self, b: &Self) -> Self {
                a * b
            }
        }
    )*};
}

impl_coeff!(i64, i128, BigInt, BigRational, Ratio<i64>);

/// Coefficients indexed by power; the highest stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `z`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Order of vanishing at the origin; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Splits `p = z^m q` with `q(0) != 0`.
    pub fn split_valuation(&self) -> Option<(usize, Poly<T>)> {
        let m = self.valuation()?;
        Some((m, Poly { coeffs: self.coeffs[m..].to_vec() }))
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| T::mul_ref(a, c)).collect())
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation in the coefficient ring.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = T::mul_ref(&acc, x);
            acc += c;
        }
        acc
    }

    /// `p(-z)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `Some` when all nonzero coefficients sit on powers of one parity.
    /// The zero polynomial is reported as even.
    pub fn parity(&self) -> Option<Parity> {
        let even = self.coeffs.iter().step_by(2).any(|c| !c.is_zero());
        let odd = self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero());
        match (even, odd) {
            (_, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            (true, true) => None,
        }
    }

    /// For an even polynomial `p(z) = Q(z^2)`, returns `Q`.
    pub fn even_to_square(&self) -> Result<Self> {
        if self.parity() != Some(Parity::Even) {
            return Err(Error::IndefiniteParity);
        }
        Ok(Self::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// For `p` of definite parity `s = deg mod 2`, writes `p(iy) = i^s q(y)`
    /// and returns the real polynomial `q` together with `s`.
    pub fn on_imaginary_axis(&self) -> Result<(Self, usize)> {
        let parity = self.parity().ok_or(Error::IndefiniteParity)?;
        let s = match parity {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        let q = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if c.is_zero() || ((j - s) / 2) % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                }
            })
            .collect();
        Ok((Self::new(q), s))
    }
}

impl<T: Coeff + FromPrimitive> Poly<T> {
    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| T::mul_ref(c, &T::from_usize(i).expect("index fits coefficient type")))
                .collect(),
        )
    }
}

impl<T: Coeff> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coeff> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<'a, T: Coeff> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Coeff> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Coeff> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &T::mul_ref(a, b);
                }
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// Routines over an integer domain (`BigInt`, `i64`, ...).
impl<T: Coeff + Integer + Signed> Poly<T> {
    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> T {
        let mut g = T::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        self.div_scalar_exact(&g).expect("content divides every coefficient")
    }

    pub fn div_scalar_exact(&self, d: &T) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// Exact quotient `self / d`; fails if `d` does not divide `self` over
    /// the integers.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return Err(Error::InexactDivision);
        }
        let lc = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[i + j] -= &T::mul_ref(&q, c);
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }

    /// Pseudo-remainder `prem(self, d) = lc(d)^(deg self - deg d + 1) self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(n) = self.degree() else {
            return Ok(Self::zero());
        };
        if n < dd {
            return Ok(self.clone());
        }
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut steps = n - dd + 1;
        for top_idx in (dd..=n).rev() {
            let top = rem[top_idx].clone();
            for c in rem.iter_mut().take(top_idx + 1) {
                *c = T::mul_ref(c, &lc);
            }
            if !top.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    rem[top_idx - dd + j] -= &T::mul_ref(&top, c);
                }
            }
            steps -= 1;
            rem.truncate(top_idx);
        }
        debug_assert_eq!(steps, 0);
        Ok(Self::new(rem))
    }

    /// Primitive gcd with positive leading coefficient, computed with the
    /// subresultant remainder sequence. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = T::one();
        let mut h = T::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b).expect("b is nonzero");
            if r.is_zero() {
                return b.primitive_part();
            }
            if r.degree() == Some(0) {
                return Self::one();
            }
            let div = T::mul_ref(&g, &pow(&h, delta));
            a = b;
            b = r.div_scalar_exact(&div).expect("subresultant division is exact");
            g = a.leading().unwrap().clone();
            // h <- g^delta / h^(delta - 1)
            h = if delta == 0 {
                h
            } else {
                let num = pow(&g, delta);
                let den = pow(&h, delta - 1);
                num.div_floor(&den)
            };
        }
    }

    /// Yun's squarefree decomposition of the primitive part: pairs
    /// `(factor, multiplicity)` with nonconstant primitive factors.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)>
    where
        T: FromPrimitive,
    {
        let f = self.primitive_part();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut c = f.div_exact(&g).expect("gcd divides f");
        let mut d = &df.div_exact(&g).expect("gcd divides f'") - &c.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while c.degree().unwrap_or(0) > 0 {
            let a = c.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            c = c.div_exact(&a).expect("a divides c");
            d = &d.div_exact(&a).expect("a divides d") - &c.derivative();
            i += 1;
        }
        out
    }

    /// Primitive squarefree part (product of distinct irreducible factors).
    pub fn squarefree_part(&self) -> Self
    where
        T: FromPrimitive,
    {
        if self.is_zero() {
            return Self::zero();
        }
        let f = self.primitive_part();
        let g = f.gcd(&f.derivative());
        f.div_exact(&g).expect("gcd divides f")
    }

    /// `Some(c)` with `self = c * other` over the rationals.
    pub fn proportionality(&self, other: &Self) -> Option<Ratio<T>> {
        if self.degree() != other.degree() || other.is_zero() {
            return None;
        }
        let num = self.leading()?.clone();
        let den = other.leading()?.clone();
        let ok = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| T::mul_ref(a, &den) == T::mul_ref(b, &num));
        ok.then(|| Ratio::new(num, den))
    }
}

fn pow<T: Coeff>(base: &T, e: usize) -> T {
    let mut acc = T::one();
    for _ in 0..e {
        acc = T::mul_ref(&acc, base);
    }
    acc
}

impl Poly<BigInt> {
    /// Largest coefficient bit length.
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Exact certificate that `self` has no repeated factor of positive
    /// degree: `gcd(f, f')` reduced modulo a prime not dividing the leading
    /// coefficient is a constant. A `false` answer is inconclusive.
    pub fn certainly_squarefree(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return true;
        }
        let df = self.derivative();
        SQUAREFREE_PRIMES.iter().any(|&m| {
            let f = reduce_mod(self, m);
            let g = reduce_mod(&df, m);
            f.len() == n + 1 && g.len() == n && gcd_mod(f, g, m).len() == 1
        })
    }
}

const SQUAREFREE_PRIMES: [u64; 3] = [(1 << 61) - 1, 1_000_000_007, 998_244_353];

fn reduce_mod(p: &Poly<BigInt>, m: u64) -> Vec<u64> {
    let modulus = BigInt::from(m);
    let mut v: Vec<u64> = p
        .coeffs
        .iter()
        .map(|c| {
            let r = c.mod_floor(&modulus);
            u64::try_from(r).expect("reduced below the modulus")
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn inv_mod(a: u64, m: u64) -> u64 {
    // Fermat; m is prime
    let (mut base, mut e, mut acc) = (a, m - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Euclidean gcd over `Z/m`, coefficients low to high; an empty vector is
/// the zero polynomial.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, m: u64) -> Vec<u64> {
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), m);
        while a.len() >= b.len() {
            let q = mul_mod(*a.last().unwrap(), inv, m);
            let shift = a.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                let t = mul_mod(q, bj, m);
                a[j + shift] = (a[j + shift] + m - t) % m;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

impl<T: Coeff + fmt::Display + Signed> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
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
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{mag}z^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl<T: Coeff + fmt::Display> Serialize for Poly<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson { coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }.serialize(s)
    }
}

impl<'de, T: Coeff + std::str::FromStr> Deserialize<'de> for Poly<T>
where
    T::Err: fmt::Display,
{
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<T>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<T>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}
