//! Simple field extensions `Q[x]/(f)` and the irreducibility screening they need.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{unit_vec, zero_vec, Field, Rational, Scalar};

/// Rational polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial(pub Vec<Rational>);

impl Polynomial {
    pub fn from_ints(c: &[i64]) -> Self {
        Polynomial(c.iter().map(|&x| Rational::from_int(x)).collect())
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            let coef = c.to_string();
            terms.push(match (i, coef.as_str()) {
                (0, _) => coef.clone(),
                (_, "1") => mono,
                (_, "-1") => format!("-{mono}"),
                _ => format!("{coef}*{mono}"),
            });
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

/// Parses sums of terms `c`, `c*x`, `c x^n`, `x^n`, e.g. `"x^3 - 2"` or `"x^2 + 1/2*x - 3"`.
impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("polynomial {s:?}: {why}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut coeffs: Vec<Rational> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            rest = tail;
            let (coef, exp) = match term.find('x') {
                None => (term, 0),
                Some(i) => {
                    let exp = match &term[i + 1..] {
                        "" => 1,
                        e => e.strip_prefix('^').and_then(|n| n.parse().ok()).ok_or_else(|| bad("bad exponent"))?,
                    };
                    (term[..i].trim_end_matches('*'), exp)
                }
            };
            let mut c: Rational = match coef {
                "" if exp > 0 || term.contains('x') => Rational::one(),
                "" => return Err(bad("empty term")),
                c => c.parse().map_err(|_| bad("bad coefficient"))?,
            };
            if negative {
                c = c.neg_ref();
            }
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, Rational::zero());
            }
            coeffs[exp] = coeffs[exp].add_ref(&c);
        }
        Ok(Polynomial(coeffs))
    }
}

/// `K = Q[x]/(minpoly)` as a commutative algebra on `1, x, …, x^{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldExtension {
    pub minpoly: Polynomial,
    pub algebra: Algebra,
}

impl FieldExtension {
    pub fn degree(&self) -> usize {
        self.algebra.dim()
    }

    /// The embedding `k → K` is the unit.
    pub fn embedding(&self) -> Vec<Scalar> {
        self.algebra.unit().to_vec()
    }
}

/// Scales `x ↦ y / L` so the monic polynomial gets integer coefficients.
/// Returns the integer coefficients (monic, low to high) and `L`.
fn integer_monic(monic: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = monic.len() - 1;
    let mut l = BigInt::one();
    for c in monic {
        l = l.lcm(&c.denom());
    }
    // L^d f(y / L) = Σ c_i L^{d-i} y^i
    let coeffs = monic
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let scaled = c.numer() * num_traits::pow(l.clone(), d - i) / c.denom();
            scaled
        })
        .collect();
    (coeffs, l)
}

fn eval(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Result<Vec<i64>> {
    let n = n.abs().to_i64().ok_or_else(|| Error::Invalid("constant term too large to screen".into()))?;
    let mut out = Vec::new();
    let mut d = 1i64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    Ok(out.into_iter().flat_map(|d| [d, -d]).collect())
}

fn isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Searches for a linear or (degree 4) quadratic factor of an integer monic polynomial.
fn find_factor(coeffs: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    let d = coeffs.len() - 1;
    if coeffs[0].is_zero() {
        return Ok(Some(vec![BigInt::zero(), BigInt::one()]));
    }
    for r in divisors(&coeffs[0])? {
        let r = BigInt::from(r);
        if eval(coeffs, &r).is_zero() {
            return Ok(Some(vec![-r, BigInt::one()]));
        }
    }
    if d == 4 {
        // (y² + b y + c)(y² + e y + g): cg = a0, b + e = a3, c + g + be = a2, bg + ce = a1
        let (a0, a1, a2, a3) = (&coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3]);
        for c in divisors(a0)? {
            let c = BigInt::from(c);
            let g = a0 / &c;
            let prod = a2 - &c - &g;
            let disc: BigInt = a3 * a3 - BigInt::from(4) * &prod;
            if let Some(s) = isqrt(&disc) {
                for sign in [1, -1] {
                    let num: BigInt = a3 + BigInt::from(sign) * &s;
                    if num.is_odd() {
                        continue;
                    }
                    let b = &num / 2;
                    let e = a3 - &b;
                    if &b * &g + &c * &e == *a1 {
                        return Ok(Some(vec![c, b, BigInt::one()]));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Builds `Q[x]/(minpoly)`. Irreducibility is verified by a rational root search
/// (conclusive through degree 3) plus a quadratic-factor search in degree 4; above
/// that the caller must pass `assume_irreducible`.
pub fn field_extension(minpoly: &Polynomial, assume_irreducible: bool) -> Result<FieldExtension> {
    let d = minpoly.degree().ok_or_else(|| Error::Invalid("zero polynomial".into()))?;
    if d == 0 {
        return Err(Error::Invalid("constant polynomial".into()));
    }
    let lead = minpoly.0[d].clone();
    let monic: Vec<Rational> =
        minpoly.0[..=d].iter().map(|c| Rational::from_big(c.numer() * lead.denom(), c.denom() * lead.numer())).collect();
    let (int_coeffs, l) = integer_monic(&monic);
    let factor = if d > 1 { find_factor(&int_coeffs)? } else { None };
    if let Some(factor) = factor {
        // undo y = L x: y^i has coefficient c_i, so x^i gets c_i L^{i - deg}
        let fd = factor.len() - 1;
        let back: Vec<Rational> = factor
            .iter()
            .enumerate()
            .map(|(i, c)| Rational::from_big(c.clone(), num_traits::pow(l.clone(), fd - i)))
            .collect();
        return Err(Error::Reducible(Polynomial(back).to_string()));
    }
    if d > 4 && !assume_irreducible {
        return Err(Error::Invalid(format!(
            "degree {d} polynomial: irreducibility cannot be screened; assert it explicitly"
        )));
    }
    let field = Field::Rationals;
    // x^n reduced: x^d = -Σ_{i<d} m_i x^i
    let mut powers: Vec<Vec<Scalar>> = (0..d).map(|i| unit_vec(d, i)).collect();
    for _ in d..=2 * d - 2 {
        let prev = powers.last().unwrap();
        let mut next = zero_vec(d);
        for i in 0..d - 1 {
            next[i + 1] = prev[i].clone();
        }
        let top = &prev[d - 1];
        for i in 0..d {
            next[i] -= &(top * &Scalar::Rat(monic[i].clone()));
        }
        powers.push(next);
    }
    let mut mult = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            mult.push(powers[i + j].clone());
        }
    }
    let algebra = Algebra::new(format!("Q[x]/({minpoly})"), field, d, mult, unit_vec(d, 0))?;
    Ok(FieldExtension { minpoly: minpoly.clone(), algebra })
}
