//! Dense polynomials in `q` with arbitrary-precision integer coefficients,
//! plus truncated power series.
//!
//! Everything here is exact. Coefficients are stored in ascending degree
//! and the zero polynomial is the empty coefficient vector, so structural
//! equality is polynomial equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides every coefficient by `d`, failing unless all divisions are exact.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::NotDivisible);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quo, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            out.push(quo);
        }
        Ok(IntPoly { coeffs: out })
    }

    /// Returns `c` with `divisor * c == self`.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let Some(lead) = divisor.leading() else {
            return Err(Error::NotDivisible);
        };
        let dd = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::NotDivisible);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// `p(q + a)`.
    pub fn taylor_shift(&self, a: &BigInt) -> IntPoly {
        // Horner with the linear polynomial (q + a).
        let lin = IntPoly::from_coeffs(vec![a.clone(), BigInt::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| &(&acc * &lin) + &IntPoly::constant(c.clone()))
    }

    /// The unique polynomial of degree below `points.len()` through the
    /// given points, via Newton divided differences over the rationals.
    pub fn interpolate(points: &[(BigInt, BigInt)]) -> Result<IntPoly> {
        if points.is_empty() {
            return Err(Error::InvalidInput("interpolation needs at least one point".into()));
        }
        for (a, pa) in points.iter().enumerate() {
            if points[a + 1..].iter().any(|pb| pb.0 == pa.0) {
                return Err(Error::InvalidInput(format!("repeated abscissa {}", pa.0)));
            }
        }
        let xs: Vec<BigRational> = points.iter().map(|p| BigRational::from_integer(p.0.clone())).collect();
        let mut table: Vec<BigRational> = points.iter().map(|p| BigRational::from_integer(p.1.clone())).collect();
        let n = points.len();
        // table[k] becomes the k-th divided difference f[x0..xk].
        for level in 1..n {
            for k in (level..n).rev() {
                table[k] = (&table[k] - &table[k - 1]) / (&xs[k] - &xs[k - level]);
            }
        }
        // Expand the Newton form from the innermost term outward.
        let mut acc: Vec<BigRational> = vec![table[n - 1].clone()];
        for k in (0..n - 1).rev() {
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (i, c) in acc.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &xs[k];
            }
            next[0] += &table[k];
            acc = next;
        }
        let mut coeffs = Vec::with_capacity(acc.len());
        for c in acc {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficients);
            }
            coeffs.push(c.to_integer());
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// The n-th cyclotomic polynomial, n >= 1.
    pub fn cyclotomic(n: usize) -> IntPoly {
        assert!(n >= 1, "cyclotomic index starts at 1");
        let mut p = IntPoly::monomial(n) - IntPoly::one();
        for d in 1..n {
            if n.is_multiple_of(d) {
                p = p
                    .exact_div(&IntPoly::cyclotomic(d))
                    .expect("cyclotomic factors divide q^n - 1");
            }
        }
        p
    }
}

impl Ord for IntPoly {
    /// Degree first, then coefficients from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |a, b| a * b)
    }
}

/// Human form with ascending powers: `1 + q - 2*q^3`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// JSON coefficient: a plain number when it fits in 64 bits, a decimal
/// string otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Text(String),
}

impl CoeffRepr {
    fn encode(c: &BigInt) -> Self {
        match c.to_i64() {
            Some(v) => CoeffRepr::Int(v),
            None => CoeffRepr::Text(c.to_string()),
        }
    }

    fn decode(self) -> std::result::Result<BigInt, String> {
        match self {
            CoeffRepr::Int(v) => Ok(BigInt::from(v)),
            CoeffRepr::Text(s) => s.trim().parse().map_err(|_| format!("bad coefficient {s:?}")),
        }
    }
}

pub(crate) fn encode_coeffs(coeffs: &[BigInt]) -> Vec<impl Serialize> {
    coeffs.iter().map(CoeffRepr::encode).collect()
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<CoeffRepr>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            coeffs: self.coeffs.iter().map(CoeffRepr::encode).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .into_iter()
            .map(CoeffRepr::decode)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

/// A power series known up to and including `q^N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(n: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); n + 1],
        }
    }

    pub fn from_poly(p: &IntPoly, n: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=n).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        assert!(!counts.is_empty(), "a truncated series has at least one coefficient");
        TruncatedSeries {
            coeffs: counts.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn truncation_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// Coefficients as machine integers, when they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_poly(&IntPoly::from_coeffs(other.coeffs.clone())))
    }

    /// Product with a polynomial, truncated at the same degree.
    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        let n = self.truncation_degree();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in p.coeffs().iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Divides by `1 - q^k` in place: a running prefix sum with stride `k`.
    pub fn divide_by_one_minus_power(&mut self, k: usize) {
        assert!(k >= 1, "exponent must be positive");
        for d in k..self.coeffs.len() {
            let prev = self.coeffs[d - k].clone();
            self.coeffs[d] += prev;
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::TruncationMismatch(
                self.truncation_degree(),
                other.truncation_degree(),
            ));
        }
        Ok(())
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TruncatedSeries", 2)?;
        st.serialize_field("coeffs", &encode_coeffs(&self.coeffs))?;
        st.serialize_field("truncation_degree", &self.truncation_degree())?;
        st.end()
    }
}

/// Expands `numer / prod_k (1 - q^k)` up to degree `n`.
pub fn series_rational(numer: &IntPoly, denom_exponents: &[usize], n: usize) -> Result<TruncatedSeries> {
    if let Some(bad) = denom_exponents.iter().find(|&&k| k == 0) {
        return Err(Error::InvalidInput(format!(
            "denominator exponent {bad} must be positive"
        )));
    }
    let mut s = TruncatedSeries::from_poly(numer, n);
    for &k in denom_exponents {
        s.divide_by_one_minus_power(k);
    }
    Ok(s)
}

/// `prod_k (1 - q^k)`.
pub fn q_pochhammer_product(exponents: &[usize]) -> IntPoly {
    exponents
        .iter()
        .map(|&k| IntPoly::one() - IntPoly::monomial(k))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn pt(x: i64, y: i64) -> (BigInt, BigInt) {
        (BigInt::from(x), BigInt::from(y))
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[1, 1]) + p(&[1, -1]), p(&[2]));
        assert_eq!(IntPoly::zero() + p(&[3, 0, 4]), p(&[3, 0, 4]));
        assert_eq!(p(&[0, 1, 1]) + p(&[0, 0, 1]), p(&[0, 1, 2]));
        assert_eq!(p(&[0, 1]) - p(&[0, 1]), IntPoly::zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[1, -1]) * p(&[1, 1]), p(&[1, 0, -1]));
        // (1-q)(1+q)(1-q+q^2) = 1 - q + 0 q^2 + ... expanded
        let fifth = p(&[1, -1]) * p(&[1, 1]) * p(&[1, -1, 1]);
        assert_eq!(fifth, p(&[1, -1, 0, 1, -1]));
        assert_eq!(p(&[4, 5]) * IntPoly::zero(), IntPoly::zero());
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p(&[1, 0, -1]).exact_div(&p(&[1, -1])).unwrap(), p(&[1, 1]));
        let x = p(&[3, -2, 0, 7]);
        assert_eq!(x.exact_div(&x).unwrap(), IntPoly::one());
        assert_eq!(p(&[1, 1]).exact_div(&p(&[1, -1])), Err(Error::NotDivisible));
        assert_eq!(p(&[1, 1]).exact_div(&IntPoly::zero()), Err(Error::NotDivisible));
        // leading coefficient not divisible over Z
        assert_eq!(p(&[1, 1]).exact_div(&p(&[1, 2])), Err(Error::NotDivisible));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 1, 1, 1, 1]).eval_i64(2), BigInt::from(31));
        assert_eq!(p(&[7, 3, 9]).eval_i64(0), BigInt::from(7));
        assert_eq!(IntPoly::zero().eval_i64(11), BigInt::zero());
    }

    #[test]
    fn series_rational_examples() {
        // partitions with parts in {1,2}: 1,1,2,2,3
        let s = series_rational(&IntPoly::one(), &[1, 2], 4).unwrap();
        assert_eq!(s, TruncatedSeries::from_counts(&[1, 1, 2, 2, 3]));
        let s = series_rational(&p(&[0, 1, 1]), &[1, 2, 3], 1).unwrap();
        assert_eq!(s, TruncatedSeries::from_counts(&[0, 1]));
        let s = series_rational(&IntPoly::one(), &[], 3).unwrap();
        assert_eq!(s, TruncatedSeries::from_counts(&[1, 0, 0, 0]));
        assert!(series_rational(&IntPoly::one(), &[0], 3).is_err());
    }

    #[test]
    fn partitions_into_one_two_brute_force() {
        // Oracle: count (a, b) with a + 2b = v.
        let brute: Vec<u64> = (0..=4u64).map(|v| (0..=v / 2).count() as u64).collect();
        assert_eq!(brute, vec![1, 1, 2, 2, 3]);
    }

    #[test]
    fn interpolate_examples() {
        let fit = IntPoly::interpolate(&[pt(0, 1), pt(1, 0), pt(2, -3)]).unwrap();
        assert_eq!(fit, p(&[1, 0, -1]));
        assert_eq!(IntPoly::interpolate(&[pt(5, 7)]).unwrap(), p(&[7]));
        assert_eq!(
            IntPoly::interpolate(&[pt(0, 0), pt(2, 1)]),
            Err(Error::NonIntegerCoefficients)
        );
        assert!(IntPoly::interpolate(&[]).is_err());
        assert!(IntPoly::interpolate(&[pt(1, 0), pt(1, 2)]).is_err());
    }

    #[test]
    fn interpolation_with_fractional_divided_differences() {
        // q^2 at 0,1,3: divided differences are fractional on the way.
        let fit = IntPoly::interpolate(&[pt(0, 0), pt(1, 1), pt(3, 9)]).unwrap();
        assert_eq!(fit, p(&[0, 0, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 1, 2]).to_string(), "1 + q + 2*q^2");
        assert_eq!(p(&[1, 0, -1]).to_string(), "1 - q^2");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip_with_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let x = IntPoly::from_coeffs(vec![BigInt::from(-4), BigInt::zero(), big]);
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, r#"{"coeffs":[-4,0,"123456789012345678901234567890"]}"#);
        let back: IntPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
        let trimmed: IntPoly = serde_json::from_str(r#"{"coeffs":[1,0,0]}"#).unwrap();
        assert_eq!(trimmed, IntPoly::one());
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(IntPoly::cyclotomic(1), p(&[-1, 1]));
        assert_eq!(IntPoly::cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(IntPoly::cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(IntPoly::cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let x = p(&[2, -3, 0, 1]);
        let a = BigInt::from(3);
        let shifted = x.taylor_shift(&a);
        for t in -4..5 {
            assert_eq!(shifted.eval_i64(t), x.eval_i64(t + 3));
        }
    }

    #[test]
    fn series_mismatch_is_an_error() {
        let a = TruncatedSeries::zero(3);
        let b = TruncatedSeries::zero(4);
        assert_eq!(a.add(&b), Err(Error::TruncationMismatch(3, 4)));
        assert!(a.mul(&b).is_err());
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-20i64..20, 0..6).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn exact_division_inverts_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&a).unwrap(), b);
        }

        #[test]
        fn interpolation_recovers_polynomial(a in small_poly(), start in -5i64..5) {
            let n = a.degree().map_or(1, |d| d + 1);
            let pts: Vec<_> = (0..n as i64)
                .map(|k| (BigInt::from(start + k), a.eval_i64(start + k)))
                .collect();
            prop_assert_eq!(IntPoly::interpolate(&pts).unwrap(), a);
        }

        #[test]
        fn series_times_denominator_recovers_numerator(
            numer in small_poly(),
            exps in proptest::collection::vec(1usize..5, 0..4),
            n in 0usize..12,
        ) {
            let s = series_rational(&numer, &exps, n).unwrap();
            let back = s.mul_poly(&q_pochhammer_product(&exps));
            prop_assert_eq!(back, TruncatedSeries::from_poly(&numer, n));
        }
    }
}
