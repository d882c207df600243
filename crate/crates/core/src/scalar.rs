//! Exact scalars: rationals and simple extensions `K = Q[x]/(p(x))`.
//!
//! A [`FieldSpec`] fixes the minimal polynomial (and optionally a field
//! involution); a [`Scalar`] is a coefficient vector of length `deg p`.
//! All arithmetic is exact; multiplication and division reduce modulo the
//! minimal polynomial, division uses the extended Euclidean inverse.
//!
//! Scalars are plain data. Operations that need the modulus (`mul`, `div`,
//! `conj`, ...) are methods on the field, in the style of a computer algebra
//! context object.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number. `num_rational` keeps every value in
/// lowest terms with a positive denominator, which is exactly the canonical
/// form the rest of the crate relies on for equality and hashing.
pub type Rational = num_rational::BigRational;

/// Errors from field construction and scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// The minimal polynomial is not monic.
    NotMonic,
    /// The minimal polynomial has degree zero.
    ZeroDegree,
    /// The minimal polynomial factors over Q.
    ReduciblePolynomial,
    /// The proposed conjugation image is not a root of the minimal polynomial.
    ConjNotRoot,
    /// The induced ring map is not an involution (sigma^2 != id).
    InvolutionNotOrderTwo,
    /// Division by zero.
    DivisionByZero,
    /// Operands come from fields of different degree.
    FieldMismatch,
    /// A coefficient vector has the wrong length for this field.
    BadCoefficientCount { expected: usize, got: usize },
    /// A rational literal failed to parse.
    BadRational(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotMonic => write!(f, "minimal polynomial must be monic"),
            FieldError::ZeroDegree => write!(f, "minimal polynomial must have degree >= 1"),
            FieldError::ReduciblePolynomial => write!(f, "minimal polynomial is reducible over Q"),
            FieldError::ConjNotRoot => {
                write!(
                    f,
                    "conjugation image is not a root of the minimal polynomial"
                )
            }
            FieldError::InvolutionNotOrderTwo => {
                write!(f, "conjugation does not square to the identity")
            }
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::FieldMismatch => write!(f, "scalars belong to different fields"),
            FieldError::BadCoefficientCount { expected, got } => {
                write!(f, "expected {expected} coefficients, got {got}")
            }
            FieldError::BadRational(s) => write!(f, "invalid rational literal `{s}`"),
        }
    }
}

impl core::error::Error for FieldError {}

/// Parse the text encoding of a rational: `a/b` or `a` with an ASCII minus
/// sign. Rejects zero denominators instead of panicking.
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let bad = || FieldError::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Render a rational in the text encoding (`a/b`, or `a` when integral).
pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

/// An element of `K = Q[x]/(p(x))`: coefficients of `1, x, ..., x^{m-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    coeffs: Vec<Rational>,
}

impl Scalar {
    /// The coefficient vector, ascending powers of the generator.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Number of coefficients = degree of the defining polynomial.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The rational part, if the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// ---- dense rational polynomials, internal to this module ----
// Ascending coefficients, no trailing-zero invariant enforced except by trim.

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().map_or(false, Rational::is_zero) {
        p.pop();
    }
}

fn poly_deg(p: &[Rational]) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    let mut r: Vec<Rational> = a.to_vec();
    poly_trim(&mut r);
    let md = poly_deg(m);
    while !r.is_empty() && poly_deg(&r) >= md {
        let shift = poly_deg(&r) - md;
        let lead = r.last().unwrap().clone();
        for (k, mk) in m.iter().enumerate() {
            let t = &lead * mk;
            r[k + shift] -= t;
        }
        poly_trim(&mut r);
    }
    r
}

/// Extended gcd for polynomials over Q: returns (g, s, t) with s a + t b = g,
/// g monic (or zero).
fn poly_xgcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = a.to_vec();
    let mut r1: Vec<Rational> = b.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1: Vec<Rational> = vec![];
    let mut t0: Vec<Rational> = vec![];
    let mut t1 = vec![Rational::one()];
    while !r1.is_empty() {
        // quotient of r0 by r1
        let mut q: Vec<Rational> = vec![];
        let mut r = r0.clone();
        let d1 = poly_deg(&r1);
        let lead1 = r1.last().unwrap().clone();
        while !r.is_empty() && poly_deg(&r) >= d1 {
            let shift = poly_deg(&r) - d1;
            let c = r.last().unwrap() / &lead1;
            if q.len() < shift + 1 {
                q.resize(shift + 1, Rational::zero());
            }
            q[shift] = c.clone();
            for (k, mk) in r1.iter().enumerate() {
                let t = &c * mk;
                r[k + shift] -= t;
            }
            poly_trim(&mut r);
        }
        let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
        let next_t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, next_s);
        t0 = core::mem::replace(&mut t1, next_t);
    }
    if let Some(lead) = r0.last().cloned() {
        for c in r0.iter_mut().chain(s0.iter_mut()).chain(t0.iter_mut()) {
            *c /= lead.clone();
        }
    }
    (r0, s0, t0)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rational::zero());
    }
    for (o, bi) in out.iter_mut().zip(b.iter()) {
        *o -= bi;
    }
    poly_trim(&mut out);
    out
}

// ---- irreducibility over Q ----

/// Divisors of |n|, or None when n does not fit in u64 (too large to factor
/// by trial division at desk scale).
fn divisors(n: &BigInt) -> Option<Vec<BigUint>> {
    let n: u64 = n.magnitude().try_into().ok()?;
    debug_assert!(n != 0);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            small.push(BigUint::from(d));
            if d != n / d {
                large.push(BigUint::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large);
    Some(small)
}

fn eval_poly(p: &[Rational], at: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * at + c;
    }
    acc
}

/// Whether q is the square of a rational (lowest terms: both numerator and
/// denominator are perfect squares, and q >= 0).
fn is_rational_square(q: &Rational) -> bool {
    if q.is_negative() {
        return false;
    }
    let num = q.numer().magnitude();
    let den = q.denom().magnitude();
    num.sqrt().pow(2) == *num && den.sqrt().pow(2) == *den
}

/// Does the polynomial have a rational root? `None` means the coefficient
/// sizes defeated the divisor enumeration.
fn has_rational_root(p: &[Rational]) -> Option<bool> {
    // Clear denominators to an integer polynomial.
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Rational::from(lcm.clone())).to_integer())
        .collect();
    // Strip powers of x: x | p means 0 is a root.
    let low = ints
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    if low > 0 {
        return Some(true);
    }
    let lead = ints.last().unwrap();
    let cons = &ints[0];
    let (num_divs, den_divs) = (divisors(cons)?, divisors(lead)?);
    for n in &num_divs {
        for d in &den_divs {
            for sign in [1i32, -1] {
                let cand = Rational::new(
                    BigInt::from(sign) * BigInt::from(n.clone()),
                    BigInt::from(d.clone()),
                );
                if eval_poly(p, &cand).is_zero() {
                    return Some(true);
                }
            }
        }
    }
    Some(false)
}

/// Irreducibility of a monic rational polynomial, complete through degree 4:
/// rational-root test for linear factors, resolvent cubic for a quadratic
/// split of a quartic. Degree > 4 (or coefficients too large to factor) is
/// not decided; the caller records that with a flag.
fn check_irreducible(p: &[Rational]) -> Result<bool, FieldError> {
    let deg = poly_deg(p);
    if deg == 1 {
        return Ok(true);
    }
    let Some(has_root) = has_rational_root(p) else {
        return Ok(false); // undecided, caller treats as unverified
    };
    if has_root {
        return Err(FieldError::ReduciblePolynomial);
    }
    if deg <= 3 {
        return Ok(true);
    }
    if deg > 4 {
        return Ok(false); // undecided
    }
    // Quartic with no rational root: check for a split into two monic
    // rational quadratics via the depressed form y^4 + P y^2 + Q y + R.
    let (a, b, c, d) = (&p[3], &p[2], &p[1], &p[0]);
    let big_p = b - a * a * Rational::new(3.into(), 8.into());
    let big_q =
        c - a * b / Rational::from(BigInt::from(2)) + a * a * a / Rational::from(BigInt::from(8));
    let big_r = d - a * c / Rational::from(BigInt::from(4))
        + a * a * b / Rational::from(BigInt::from(16))
        - a * a * a * a * Rational::new(3.into(), 256.into());
    // u = 0 split: y^4 + P y^2 + R = (y^2+v)(y^2+w) needs P^2 - 4R square.
    if big_q.is_zero()
        && is_rational_square(&(&big_p * &big_p - Rational::from(BigInt::from(4)) * &big_r))
    {
        return Err(FieldError::ReduciblePolynomial);
    }
    // u != 0 split: z = u^2 is a rational-square root of the resolvent cubic
    // z^3 + 2P z^2 + (P^2 - 4R) z - Q^2.
    let resolvent = vec![
        -(&big_q * &big_q),
        &big_p * &big_p - Rational::from(BigInt::from(4)) * &big_r,
        Rational::from(BigInt::from(2)) * &big_p,
        Rational::one(),
    ];
    let Some(roots) = rational_roots(&resolvent) else {
        return Ok(false); // undecided
    };
    for z in roots {
        if !z.is_zero() && is_rational_square(&z) {
            return Err(FieldError::ReduciblePolynomial);
        }
    }
    Ok(true)
}

/// All rational roots, or None when divisor enumeration is infeasible.
fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Rational::from(lcm.clone())).to_integer())
        .collect();
    let low = ints
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let lead = ints.last().unwrap();
    let cons = &ints[low];
    let (num_divs, den_divs) = (divisors(cons)?, divisors(lead)?);
    for n in &num_divs {
        for d in &den_divs {
            for sign in [1i32, -1] {
                let cand = Rational::new(
                    BigInt::from(sign) * BigInt::from(n.clone()),
                    BigInt::from(d.clone()),
                );
                if eval_poly(p, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

/// A number field `Q[x]/(p(x))` with an optional involution, the arithmetic
/// context for every scalar in the crate.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    min_poly: Vec<Rational>,
    conj_image: Option<Vec<Rational>>,
    /// m x m matrix of sigma in the power basis (identity when no involution).
    conj_matrix: Vec<Vec<Rational>>,
    verified_irreducible: bool,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("min_poly", &self.min_poly)
            .field("conj_image", &self.conj_image)
            .field("verified_irreducible", &self.verified_irreducible)
            .finish()
    }
}

impl FieldSpec {
    /// The rationals, `Q = Q[x]/(x)`.
    pub fn rationals() -> Self {
        FieldSpec::new(vec![Rational::zero(), Rational::one()], None).unwrap()
    }

    /// `Q(omega)` with `omega^2 + omega + 1 = 0` and complex conjugation
    /// `omega -> omega^2 = -1 - omega`. Third roots of unity.
    pub fn cyclotomic3() -> Self {
        FieldSpec::new(
            vec![Rational::one(), Rational::one(), Rational::one()],
            Some(vec![-Rational::one(), -Rational::one()]),
        )
        .unwrap()
    }

    /// `Q(i)` with `i^2 + 1 = 0` and conjugation `i -> -i`.
    pub fn gaussian() -> Self {
        FieldSpec::new(
            vec![Rational::one(), Rational::zero(), Rational::one()],
            Some(vec![Rational::zero(), -Rational::one()]),
        )
        .unwrap()
    }

    /// `Q(zeta_5)` with minimal polynomial `x^4+x^3+x^2+x+1` and conjugation
    /// `zeta -> zeta^4`.
    pub fn cyclotomic5() -> Self {
        let ones = vec![Rational::one(); 5];
        // zeta^4 = -1 - zeta - zeta^2 - zeta^3
        let conj = vec![
            -Rational::one(),
            -Rational::one(),
            -Rational::one(),
            -Rational::one(),
        ];
        FieldSpec::new(ones, Some(conj)).unwrap()
    }

    /// Build a field from a monic minimal polynomial (coefficients ascending,
    /// length degree+1) and an optional image of the generator under the
    /// involution.
    pub fn new(
        min_poly: Vec<Rational>,
        conj_image: Option<Vec<Rational>>,
    ) -> Result<Self, FieldError> {
        let mut p = min_poly;
        poly_trim(&mut p);
        if p.len() < 2 {
            return Err(FieldError::ZeroDegree);
        }
        if !p.last().unwrap().is_one() {
            return Err(FieldError::NotMonic);
        }
        let verified_irreducible = check_irreducible(&p)?;
        let m = p.len() - 1;

        let mut field = FieldSpec {
            min_poly: p,
            conj_image: None,
            conj_matrix: (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| {
                            if i == j {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
            verified_irreducible,
        };

        if let Some(mut img) = conj_image {
            img.resize(m, Rational::zero());
            // sigma must send the generator to another root of p.
            let img_scalar = Scalar {
                coeffs: img.clone(),
            };
            if !field.eval_min_poly(&img_scalar).is_zero() {
                return Err(FieldError::ConjNotRoot);
            }
            // Column j of the sigma matrix is img^j reduced mod p.
            let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(m);
            let mut pow = field.one();
            for _ in 0..m {
                cols.push(pow.coeffs.clone());
                pow = field.mul(&pow, &img_scalar);
            }
            let matrix: Vec<Vec<Rational>> = (0..m)
                .map(|i| (0..m).map(|j| cols[j][i].clone()).collect())
                .collect();
            // Involution: sigma(sigma(x)) = x, i.e. img evaluated at img is x.
            let twice = field.apply_matrix(&matrix, &img_scalar);
            if twice != field.gen() {
                return Err(FieldError::InvolutionNotOrderTwo);
            }
            field.conj_image = Some(img);
            field.conj_matrix = matrix;
        }
        Ok(field)
    }

    fn eval_min_poly(&self, at: &Scalar) -> Scalar {
        let mut acc = self.zero();
        for c in self.min_poly.iter().rev() {
            acc = self.mul(&acc, at);
            acc.coeffs[0] += c;
        }
        acc
    }

    fn apply_matrix(&self, m: &[Vec<Rational>], v: &Scalar) -> Scalar {
        let coeffs = m
            .iter()
            .map(|row| row.iter().zip(&v.coeffs).map(|(a, b)| a * b).sum())
            .collect();
        Scalar { coeffs }
    }

    /// Degree of the extension over Q.
    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    /// Ascending coefficients of the minimal polynomial.
    pub fn min_poly(&self) -> &[Rational] {
        &self.min_poly
    }

    /// The involution's image of the generator, if one was given.
    pub fn conj_image(&self) -> Option<&[Rational]> {
        self.conj_image.as_deref()
    }

    /// Whether irreducibility was actually decided (always true through
    /// degree 4 with modest coefficients; larger inputs are accepted
    /// unverified).
    pub fn verified_irreducible(&self) -> bool {
        self.verified_irreducible
    }

    /// Whether the involution is nontrivial.
    pub fn has_conjugation(&self) -> bool {
        self.conj_image.is_some()
    }

    /// Positive-definiteness of Hermitian forms over this field is decided
    /// exactly only when eigenvalues are guaranteed rational-real: over Q
    /// itself, or over an imaginary quadratic field with its conjugation.
    pub fn positivity_decidable(&self) -> bool {
        match self.degree() {
            1 => true,
            2 => {
                if !self.has_conjugation() || self.conj_matrix_is_identity() {
                    return false;
                }
                // x^2 + bx + c: imaginary quadratic iff b^2 - 4c < 0.
                let b = &self.min_poly[1];
                let c = &self.min_poly[0];
                (b * b - Rational::from(BigInt::from(4)) * c).is_negative()
            }
            _ => false,
        }
    }

    fn conj_matrix_is_identity(&self) -> bool {
        self.conj_matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
        })
    }

    // ---- element constructors ----

    pub fn zero(&self) -> Scalar {
        Scalar {
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = Rational::one();
        s
    }

    /// The class of x, the generator of the extension.
    pub fn gen(&self) -> Scalar {
        if self.degree() == 1 {
            // x = 0 in Q[x]/(x)
            let c = -self.min_poly[0].clone();
            return Scalar { coeffs: vec![c] };
        }
        let mut s = self.zero();
        s.coeffs[1] = Rational::one();
        s
    }

    pub fn from_rational(&self, q: Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = q;
        s
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(Rational::from(BigInt::from(n)))
    }

    /// Validate a raw coefficient vector against this field.
    pub fn scalar_from_coeffs(&self, coeffs: Vec<Rational>) -> Result<Scalar, FieldError> {
        if coeffs.len() != self.degree() {
            return Err(FieldError::BadCoefficientCount {
                expected: self.degree(),
                got: coeffs.len(),
            });
        }
        Ok(Scalar { coeffs })
    }

    fn check_len(&self, a: &Scalar) -> Result<(), FieldError> {
        if a.len() != self.degree() {
            Err(FieldError::FieldMismatch)
        } else {
            Ok(())
        }
    }

    // ---- arithmetic ----

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        debug_assert_eq!(a.len(), b.len());
        Scalar {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        debug_assert_eq!(a.len(), b.len());
        Scalar {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        debug_assert_eq!(a.len(), self.degree());
        debug_assert_eq!(b.len(), self.degree());
        let mut prod = poly_mul(&a.coeffs, &b.coeffs);
        prod = poly_rem(&prod, &self.min_poly);
        prod.resize(self.degree(), Rational::zero());
        Scalar { coeffs: prod }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (g, s, _) = poly_xgcd(&a.coeffs, &self.min_poly);
        // g is the monic gcd; for an irreducible modulus and a != 0 it is 1.
        if poly_deg(&g) != 0 {
            return Err(FieldError::ReduciblePolynomial);
        }
        let mut coeffs = poly_rem(&s, &self.min_poly);
        coeffs.resize(self.degree(), Rational::zero());
        Ok(Scalar { coeffs })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// The involution sigma (identity when the field has none).
    pub fn conj(&self, a: &Scalar) -> Scalar {
        self.apply_matrix(&self.conj_matrix, a)
    }

    /// Checked variants used at API boundaries where operands may come from
    /// different fields.
    pub fn checked_add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_sub(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.sub(a, b))
    }

    pub fn checked_mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        self.check_len(a)?;
        self.check_len(b)?;
        self.div(a, b)
    }
}
