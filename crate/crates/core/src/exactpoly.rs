//! Exact polynomial arithmetic over ℤ and ℚ, the characteristic polynomial
//! `χ(x) = det S(1, x)` of a sign matrix, square-free decomposition and
//! certified real roots.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SignMatrix;

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::new(vec![c.into()])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        IntPolynomial::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from(c.clone())
            })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Gcd of the coefficients, always non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(IntPolynomial::constant(1), |acc, _| &acc * self)
    }

    fn to_rational(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().cloned().map(BigRational::from).collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers with explicit signs, e.g. `-2*x^3 - 3*x^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{}", k),
            };
            if k == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

/// Dense polynomial over ℚ, used internally for gcds and Sturm sequences.
#[derive(Debug, Clone, PartialEq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    fn monic(&self) -> QPoly {
        let l = self.lead().clone();
        QPoly(self.0.iter().map(|c| c / &l).collect())
    }

    fn derivative(&self) -> QPoly {
        QPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    fn sub(&self, rhs: &QPoly) -> QPoly {
        let len = self.0.len().max(rhs.0.len());
        let zero = BigRational::zero();
        QPoly::new(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&zero) - rhs.0.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return (QPoly(Vec::new()), self.clone());
        }
        let dl = d.lead().clone();
        let mut quot = vec![BigRational::zero(); rem.len() - d.0.len() + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + d.0.len() - 1] / &dl;
            if !q.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[k + j] -= &q * dc;
                }
            }
            quot[k] = q;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    fn exact_div(&self, d: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Primitive integer polynomial with positive leading coefficient and the
    /// same roots.
    fn to_primitive_int(&self) -> IntPolynomial {
        let l = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPolynomial::new(
            self.0
                .iter()
                .map(|c| (c * BigRational::from(l.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `S(1, x)` at an integer point: unit diagonal, `ε_ij · x` off the diagonal.
fn s_matrix_at(m: &SignMatrix, x: &BigInt) -> Vec<Vec<BigInt>> {
    let n = m.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        x * BigInt::from(m.get(i, j))
                    }
                })
                .collect()
        })
        .collect()
}

/// Newton interpolation through `(x_k, y_k)`; returns monomial coefficients,
/// lowest degree first.
pub fn interpolate(points: &[(BigInt, BigInt)]) -> Vec<BigRational> {
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| x.clone().into()).collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone().into()).collect();
    let n = dd.len();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / (&xs[k] - &xs[k - level]);
        }
    }
    // Horner on the Newton basis.
    let mut coeffs: Vec<BigRational> = Vec::new();
    for k in (0..n).rev() {
        // coeffs := coeffs * (x - xs[k]) + dd[k]
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// `χ(x) = det S(1, x)` where `S(1, x)` has unit diagonal and entries
/// `ε_ij · x` elsewhere.
///
/// Evaluated exactly at `x = 0..=n` and interpolated over ℚ.
pub fn char_poly(m: &SignMatrix) -> IntPolynomial {
    let n = m.n();
    let points: Vec<(BigInt, BigInt)> = (0..=n as i64)
        .map(BigInt::from)
        .map(|x| {
            let d = bareiss_determinant(s_matrix_at(m, &x));
            (x, d)
        })
        .collect();
    let coeffs = interpolate(&points)
        .into_iter()
        .map(|c| {
            assert!(
                c.is_integer(),
                "non-integer coefficient {} in det S(1, x)",
                c
            );
            c.to_integer()
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// `p = unit · ∏ fₖ^eₖ` with square-free, pairwise coprime, primitive `fₖ`
/// of positive leading coefficient, sorted by exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeDecomposition {
    pub unit: BigInt,
    pub factors: Vec<(IntPolynomial, u32)>,
}

impl SquareFreeDecomposition {
    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::constant(self.unit.clone()), |acc, (f, e)| {
                &acc * &f.pow(*e)
            })
    }

    pub fn multiplicity_of(&self, factor: &IntPolynomial) -> Option<u32> {
        self.factors
            .iter()
            .find(|(f, _)| f == factor)
            .map(|&(_, e)| e)
    }
}

impl fmt::Display for SquareFreeDecomposition {
    /// E.g. `-(2*x - 1)*(x + 1)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.unit);
        }
        if self.unit == -BigInt::one() {
            write!(f, "-")?;
        } else if !self.unit.is_one() {
            write!(f, "{}*", self.unit)?;
        }
        for (k, (p, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "({})", p)?;
            if *e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// Yun's square-free decomposition over ℚ, normalized back to ℤ.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<SquareFreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    if p.degree() > Some(0) {
        let f = p.to_rational();
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut b = f.exact_div(&g);
        let mut c = df.exact_div(&g);
        let mut d = c.sub(&b.derivative());
        let mut e = 1u32;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            d = c.sub(&b.derivative());
            if a.degree() > 0 {
                factors.push((a.to_primitive_int(), e));
            }
            e += 1;
        }
    }
    let product = factors
        .iter()
        .fold(IntPolynomial::constant(1), |acc, (f, e)| &acc * &f.pow(*e));
    let (unit, rem) = p.leading().div_rem(&product.leading());
    debug_assert!(rem.is_zero());
    let out = SquareFreeDecomposition { unit, factors };
    debug_assert_eq!(&out.expand(), p);
    Ok(out)
}

/// A real root, exact when rational.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootValue {
    Rational {
        #[serde(with = "rational_string")]
        value: BigRational,
    },
    /// Unique root of `factor` in the open interval `(lower, upper)`.
    Irrational {
        #[serde(with = "rational_string")]
        lower: BigRational,
        #[serde(with = "rational_string")]
        upper: BigRational,
        approx: f64,
    },
}

impl RootValue {
    pub fn approx(&self) -> f64 {
        match self {
            RootValue::Rational { value } => rational_to_f64(value),
            RootValue::Irrational { approx, .. } => *approx,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            RootValue::Rational { value } => Some(value),
            RootValue::Irrational { .. } => None,
        }
    }
}

impl fmt::Display for RootValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootValue::Rational { value } => write!(f, "{}", value),
            RootValue::Irrational { approx, .. } => write!(f, "~{:.12}", approx),
        }
    }
}

/// A real root together with its multiplicity and the square-free factor
/// that vanishes on it.
#[derive(Debug, Clone, PartialEq)]
pub struct RootRecord {
    pub value: RootValue,
    pub multiplicity: u32,
    pub factor: IntPolynomial,
}

impl RootRecord {
    pub fn approx(&self) -> f64 {
        self.value.approx()
    }
}

/// Nearest `f64` to an exact rational.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    })
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub(crate) mod rational_string {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        crate::numbers::parse_rational(&s).map_err(D::Error::custom)
    }
}

struct Sturm {
    seq: Vec<QPoly>,
}

impl Sturm {
    fn new(f: &QPoly) -> Self {
        let mut seq = vec![f.clone(), f.derivative()];
        loop {
            let k = seq.len();
            if seq[k - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[k - 2].div_rem(&seq[k - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(QPoly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        Sturm { seq }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.seq {
            let s = p.eval(x).cmp(&BigRational::zero());
            if s != Ordering::Equal {
                if last != Ordering::Equal && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Real roots of a square-free primitive factor, ascending.
fn isolate_roots(f: &IntPolynomial, width: &BigRational) -> Vec<RootValue> {
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        let value = BigRational::new(-f.coeff(0), f.coeff(1));
        return vec![RootValue::Rational { value }];
    }
    let q = f.to_rational();
    let sturm = Sturm::new(&q);
    let lead = f.leading().abs();
    let bound = f.coeffs()[..deg]
        .iter()
        .map(|c| BigRational::new(c.abs(), lead.clone()))
        .max()
        .unwrap_or_default()
        + BigRational::one();

    let two = BigRational::from_integer(2.into());
    let mut isolated = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        match sturm.count(&a, &b) {
            0 => {}
            1 => isolated.push((a, b)),
            _ => {
                let mid = (&a + &b) / &two;
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    isolated.sort_by(|x, y| x.0.cmp(&y.0));

    let denominators = divisors(&lead);
    let rational_gap = BigRational::new(BigInt::one(), lead.clone());
    isolated
        .into_iter()
        .map(|(mut a, mut b)| {
            if q.eval(&b).is_zero() {
                return RootValue::Rational { value: b };
            }
            // Shrink below 1/lead so that each admissible denominator has at
            // most one candidate numerator inside (a, b).
            while &b - &a > rational_gap {
                let mid = (&a + &b) / &two;
                if q.eval(&mid).is_zero() {
                    return RootValue::Rational { value: mid };
                }
                if sturm.count(&a, &mid) == 1 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            for d in &denominators {
                let lo: BigInt = (&a * BigRational::from(d.clone())).floor().to_integer() + 1;
                let hi: BigInt = (&b * BigRational::from(d.clone())).floor().to_integer();
                let mut p = lo;
                while p <= hi {
                    let cand = BigRational::new(p.clone(), d.clone());
                    if q.eval(&cand).is_zero() {
                        return RootValue::Rational { value: cand };
                    }
                    p += 1;
                }
            }
            let refine = |a: &mut BigRational, b: &mut BigRational, target: &BigRational| {
                while &*b - &*a > *target {
                    let mid = (&*a + &*b) / &two;
                    if sturm.count(a, &mid) == 1 {
                        *b = mid;
                    } else {
                        *a = mid;
                    }
                }
            };
            refine(&mut a, &mut b, width);
            let (lower, upper) = (a.clone(), b.clone());
            // Keep bisecting a copy until both ends round to the same double.
            let tiny = BigRational::new(BigInt::one(), BigInt::one() << 200u32);
            while rational_to_f64(&a) != rational_to_f64(&b) && &b - &a > tiny {
                let target = (&b - &a) / BigRational::from_integer(1024.into());
                refine(&mut a, &mut b, &target);
            }
            RootValue::Irrational {
                lower,
                upper,
                approx: rational_to_f64(&((&a + &b) / &two)),
            }
        })
        .collect()
}

/// Every distinct real root of `p` with its multiplicity, in ascending order.
/// Irrational roots come with an isolating interval of width at most `width`.
pub fn real_roots_with_multiplicity(p: &IntPolynomial, width: f64) -> Result<Vec<RootRecord>> {
    let sqf = squarefree_decomposition(p)?;
    let width = BigRational::from_float(width.max(f64::MIN_POSITIVE))
        .ok_or_else(|| Error::InvalidNumber(width.to_string()))?;
    let mut roots: Vec<RootRecord> = sqf
        .factors
        .iter()
        .flat_map(|(f, e)| {
            isolate_roots(f, &width)
                .into_iter()
                .map(move |value| RootRecord {
                    value,
                    multiplicity: *e,
                    factor: f.clone(),
                })
        })
        .collect();
    roots.sort_by(|a, b| a.approx().total_cmp(&b.approx()));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{epsilon_matrix, Graph};

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn triangle_char_poly() {
        let chi = char_poly(&epsilon_matrix(&Graph::complete(3)));
        assert_eq!(chi, poly(&[1, 0, -3, -2]));
        assert_eq!(chi.to_string(), "-2*x^3 - 3*x^2 + 1");
    }

    #[test]
    fn edgeless_char_poly() {
        // det of I + x(J - I) = (1 - x)^2 (1 + 2x)
        let chi = char_poly(&epsilon_matrix(&Graph::edgeless(3)));
        let expected = &poly(&[1, -1]).pow(2) * &poly(&[1, 2]);
        assert_eq!(chi, expected);
    }

    #[test]
    fn chi_at_zero_is_one() {
        for mask in 0..64 {
            let chi = char_poly(&epsilon_matrix(&Graph::from_mask(4, mask)));
            assert_eq!(chi.coeff(0), BigInt::one());
        }
        let single = char_poly(&epsilon_matrix(&Graph::edgeless(1)));
        assert_eq!(single, poly(&[1]));
    }

    #[test]
    fn bareiss_small() {
        let m = vec![
            vec![2.into(), 0.into(), 1.into()],
            vec![1.into(), 3.into(), 2.into()],
            vec![1.into(), 1.into(), 2.into()],
        ];
        assert_eq!(bareiss_determinant(m), BigInt::from(6));
        let pivot = vec![vec![0.into(), 1.into()], vec![1.into(), 0.into()]];
        assert_eq!(bareiss_determinant(pivot), BigInt::from(-1));
        let singular = vec![vec![1.into(), 2.into()], vec![2.into(), 4.into()]];
        assert_eq!(bareiss_determinant(singular), BigInt::zero());
    }

    #[test]
    fn squarefree_perfect_square() {
        let d = squarefree_decomposition(&poly(&[1, 2, 1])).unwrap();
        assert_eq!(d.unit, BigInt::one());
        assert_eq!(d.factors, vec![(poly(&[1, 1]), 2)]);
    }

    #[test]
    fn squarefree_triangle() {
        let d = squarefree_decomposition(&poly(&[1, 0, -3, -2])).unwrap();
        assert_eq!(d.unit, BigInt::from(-1));
        assert_eq!(d.factors, vec![(poly(&[-1, 2]), 1), (poly(&[1, 1]), 2)]);
        assert_eq!(d.to_string(), "-(2*x - 1)*(x + 1)^2");
    }

    #[test]
    fn squarefree_pentagon_and_content() {
        let chi = poly(&[-1, 0, 5]).pow(2);
        let d = squarefree_decomposition(&chi).unwrap();
        assert_eq!(d.factors, vec![(poly(&[-1, 0, 5]), 2)]);

        let scaled = &IntPolynomial::constant(-6) * &poly(&[1, -1]).pow(3);
        let d = squarefree_decomposition(&scaled).unwrap();
        assert_eq!(d.unit, BigInt::from(6));
        assert_eq!(d.factors, vec![(poly(&[-1, 1]), 3)]);
        assert_eq!(d.expand(), scaled);
    }

    #[test]
    fn squarefree_constants_and_zero() {
        let d = squarefree_decomposition(&poly(&[-7])).unwrap();
        assert_eq!(d.unit, BigInt::from(-7));
        assert!(d.factors.is_empty());
        assert_eq!(
            squarefree_decomposition(&IntPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn triangle_roots() {
        let roots = real_roots_with_multiplicity(&poly(&[1, 0, -3, -2]), 1e-12).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].value.as_rational(), Some(&rat(-1, 1)));
        assert_eq!(roots[0].multiplicity, 2);
        assert_eq!(roots[1].value.as_rational(), Some(&rat(1, 2)));
        assert_eq!(roots[1].multiplicity, 1);
    }

    #[test]
    fn pentagon_roots_are_certified() {
        let roots = real_roots_with_multiplicity(&poly(&[-1, 0, 5]).pow(2), 1e-12).unwrap();
        let r = 5f64.sqrt() / 5.0;
        assert_eq!(roots.len(), 2);
        for (rec, expected) in roots.iter().zip([-r, r]) {
            assert_eq!(rec.multiplicity, 2);
            match &rec.value {
                RootValue::Irrational {
                    lower,
                    upper,
                    approx,
                } => {
                    assert!(upper - lower <= BigRational::from_float(1e-12).unwrap());
                    assert!(
                        rational_to_f64(lower) <= expected && expected <= rational_to_f64(upper)
                    );
                    assert!((approx - expected).abs() < 1e-15);
                }
                other => panic!("expected irrational root, got {:?}", other),
            }
        }
    }

    #[test]
    fn rational_roots_with_nontrivial_denominator() {
        // (3x + 1)(6x - 5)(x^2 - 2)
        let p = &(&poly(&[1, 3]) * &poly(&[-5, 6])) * &poly(&[-2, 0, 1]);
        let roots = real_roots_with_multiplicity(&p, 1e-12).unwrap();
        let values: Vec<Option<BigRational>> = roots
            .iter()
            .map(|r| r.value.as_rational().cloned())
            .collect();
        assert_eq!(values, vec![None, Some(rat(-1, 3)), Some(rat(5, 6)), None]);
    }

    #[test]
    fn no_real_roots() {
        assert!(real_roots_with_multiplicity(&poly(&[1]), 1e-12)
            .unwrap()
            .is_empty());
        assert!(real_roots_with_multiplicity(&poly(&[1, 0, 1]), 1e-12)
            .unwrap()
            .is_empty());
        assert_eq!(
            real_roots_with_multiplicity(&IntPolynomial::zero(), 1e-12),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = poly(&[4, -1, 0, 3]);
        let pts: Vec<(BigInt, BigInt)> = (0..4)
            .map(|x| {
                let x = BigInt::from(x);
                let y = p.eval(&x.clone().into()).to_integer();
                (x, y)
            })
            .collect();
        let c: Vec<BigRational> = interpolate(&pts);
        assert_eq!(
            c,
            p.coeffs()
                .iter()
                .cloned()
                .map(BigRational::from)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[-1]).to_string(), "-1");
        assert_eq!(poly(&[0, 1]).to_string(), "x");
        assert_eq!(poly(&[1, -1, 0, -1]).to_string(), "-x^3 - x + 1");
    }
}
