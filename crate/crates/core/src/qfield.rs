//! Exact arithmetic in the real quadratic field Q(√d).
//!
//! Every interval parameter in this crate is a [`QuadExt`], a number
//! a + b√d with rational coordinates and a fixed positive square-free
//! discriminant d. The coordinate pair determines the value uniquely
//! because √d is irrational, so equality, arithmetic and sign are all
//! decided exactly over the rationals. Purely rational parameters are the
//! b = 0 case.
//!
//! Values with different discriminants never mix: a single d is chosen per
//! context (the CLI fixes it per invocation) and combining values from
//! different fields is an error.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, kept in canonical form (reduced, positive
/// denominator) by the underlying representation.
pub type Rational = BigRational;

/// Errors from parsing or combining quadratic-field values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QFieldError {
    /// Input text does not conform to the grammar; position is a byte offset.
    Syntax { position: usize, message: String },
    /// A rational literal had denominator zero.
    ZeroDenominator { position: usize },
    /// The discriminant is not a square-free integer ≥ 2.
    InvalidDiscriminant { d: u64 },
    /// Two values from different quadratic fields were combined.
    DiscriminantMismatch { left: u64, right: u64 },
    DivisionByZero,
}

impl fmt::Display for QFieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QFieldError::Syntax { position, message } => {
                write!(f, "syntax error at byte {position}: {message}")
            }
            QFieldError::ZeroDenominator { position } => {
                write!(f, "zero denominator at byte {position}")
            }
            QFieldError::InvalidDiscriminant { d } => {
                write!(f, "discriminant {d} is not a square-free integer >= 2")
            }
            QFieldError::DiscriminantMismatch { left, right } => {
                write!(f, "discriminant mismatch: {left} vs {right}")
            }
            QFieldError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl std::error::Error for QFieldError {}

/// True iff `d` is admissible as a discriminant: an integer ≥ 2 with no
/// square factor. Square-freeness implies √d is irrational, which is what
/// makes the coordinate representation canonical.
pub fn is_valid_discriminant(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut f: u64 = 2;
    while let Some(sq) = f.checked_mul(f) {
        if sq > d {
            break;
        }
        if d % sq == 0 {
            return false;
        }
        f += 1;
    }
    true
}

/// An element a + b√d of Q(√d), stored as exact rational coordinates.
///
/// The representation is canonical: two values are equal iff their
/// coordinate pairs (and discriminants) are equal. All operations are pure
/// and the type is immutable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadExt {
    /// Builds a + b√d, validating the discriminant.
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self, QFieldError> {
        if !is_valid_discriminant(d) {
            return Err(QFieldError::InvalidDiscriminant { d });
        }
        Ok(QuadExt { a, b, d })
    }

    /// Embeds a rational into Q(√d).
    pub fn from_rational(a: Rational, d: u64) -> Result<Self, QFieldError> {
        Self::new(a, Rational::zero(), d)
    }

    /// Embeds an integer into Q(√d).
    pub fn from_int(n: i64, d: u64) -> Result<Self, QFieldError> {
        Self::from_rational(Rational::from_integer(BigInt::from(n)), d)
    }

    pub fn zero(d: u64) -> Result<Self, QFieldError> {
        Self::from_int(0, d)
    }

    pub fn one(d: u64) -> Result<Self, QFieldError> {
        Self::from_int(1, d)
    }

    /// The generator √d itself.
    pub fn sqrt_d(d: u64) -> Result<Self, QFieldError> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt_coefficient(&self) -> &Rational {
        &self.b
    }

    pub fn disc(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn require_same_field(&self, other: &Self) -> Result<(), QFieldError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(QFieldError::DiscriminantMismatch {
                left: self.d,
                right: other.d,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, QFieldError> {
        self.require_same_field(other)?;
        Ok(QuadExt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, QFieldError> {
        self.require_same_field(other)?;
        Ok(QuadExt {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d,
        })
    }

    /// (a₁ + b₁√d)(a₂ + b₂√d) = (a₁a₂ + b₁b₂d) + (a₁b₂ + b₁a₂)√d.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, QFieldError> {
        self.require_same_field(other)?;
        let d_rat = Rational::from_integer(BigInt::from(self.d));
        Ok(QuadExt {
            a: &self.a * &other.a + &self.b * &other.b * &d_rat,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d,
        })
    }

    /// Division by conjugate rationalization:
    /// (a + b√d)⁻¹ = (a − b√d) / (a² − b²d).
    pub fn checked_div(&self, other: &Self) -> Result<Self, QFieldError> {
        self.require_same_field(other)?;
        if other.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        let d_rat = Rational::from_integer(BigInt::from(self.d));
        // The norm a² − b²d vanishes only at zero because √d is irrational.
        let norm = &other.a * &other.a - &other.b * &other.b * &d_rat;
        debug_assert!(!norm.is_zero());
        let num = self.checked_mul(&QuadExt {
            a: other.a.clone(),
            b: -other.b.clone(),
            d: other.d,
        })?;
        Ok(QuadExt {
            a: num.a / &norm,
            b: num.b / &norm,
            d: self.d,
        })
    }

    /// Multiplies by an integer scalar.
    pub fn mul_int(&self, n: i64) -> Self {
        let n_rat = Rational::from_integer(BigInt::from(n));
        QuadExt {
            a: &self.a * &n_rat,
            b: &self.b * &n_rat,
            d: self.d,
        }
    }

    /// Exact sign of a + b√d in {-1, 0, +1}, by rational case analysis.
    ///
    /// When a and b have opposite signs the comparison reduces to a² vs b²d;
    /// equality there is impossible for nonzero coordinates since √d is
    /// irrational, so the sign is always decided.
    pub fn sign(&self) -> i8 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        let d_rat = Rational::from_integer(BigInt::from(self.d));
        let diff = &self.a * &self.a - &self.b * &self.b * &d_rat;
        let st = rational_sign(&diff);
        debug_assert!(st != 0, "a^2 = b^2 d is impossible for square-free d");
        sa * st
    }

    /// Total order within one field. Panics on a discriminant mismatch,
    /// which cannot arise for values built through one parameter set.
    pub fn cmp_exact(&self, other: &Self) -> std::cmp::Ordering {
        assert_eq!(
            self.d, other.d,
            "cannot compare values from different quadratic fields"
        );
        match self.checked_sub(other).expect("same field").sign() {
            -1 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }

    pub fn lt(&self, other: &Self) -> bool {
        self.cmp_exact(other) == std::cmp::Ordering::Less
    }

    pub fn le(&self, other: &Self) -> bool {
        self.cmp_exact(other) != std::cmp::Ordering::Greater
    }

    /// Parses the grammar `term (('+'|'-') term)*` where
    /// `term := rational | rational '*' 's' | 's'`,
    /// `rational := int | int '/' posint | '(' rational ')'`,
    /// and `s` denotes √d. Whitespace between tokens is ignored.
    pub fn parse(text: &str, d: u64) -> Result<Self, QFieldError> {
        if !is_valid_discriminant(d) {
            return Err(QFieldError::InvalidDiscriminant { d });
        }
        Parser::new(text).parse_expression(d)
    }
}

fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl std::ops::Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.checked_add(rhs).expect("discriminant mismatch in +")
    }
}

impl std::ops::Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.checked_sub(rhs).expect("discriminant mismatch in -")
    }
}

impl std::ops::Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.checked_mul(rhs).expect("discriminant mismatch in *")
    }
}

impl std::ops::Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }
}

/// True iff x and y are linearly independent over Q, decided by the
/// coordinate determinant x.a·y.b − x.b·y.a. For a pair with at least one
/// nonzero member this is exactly Q-linear independence; the all-zero pair
/// is reported dependent.
pub fn linearly_independent_over_q(x: &QuadExt, y: &QuadExt) -> Result<bool, QFieldError> {
    if x.d != y.d {
        return Err(QFieldError::DiscriminantMismatch {
            left: x.d,
            right: y.d,
        });
    }
    let det = &x.a * &y.b - &x.b * &y.a;
    Ok(!det.is_zero())
}

/// Canonical formatting: "p/q+r/t*s" with zero terms suppressed, "*s"
/// marking the √d coefficient, integer rationals printed without "/1".
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&format_rational(&self.a));
        }
        if !self.b.is_zero() {
            if !self.a.is_zero() {
                if self.b.is_negative() {
                    out.push('-');
                    out.push_str(&format_rational(&-self.b.clone()));
                } else {
                    out.push('+');
                    out.push_str(&format_rational(&self.b));
                }
            } else {
                out.push_str(&format_rational(&self.b));
            }
            out.push_str("*s");
        }
        write!(f, "{out}")
    }
}

fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn syntax(&self, message: &str) -> QFieldError {
        QFieldError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn parse_expression(&mut self, d: u64) -> Result<QuadExt, QFieldError> {
        let mut acc = self.parse_term(d)?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.parse_term(d)?;
                    acc = acc.checked_add(&t)?;
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.parse_term(d)?;
                    acc = acc.checked_sub(&t)?;
                }
                Some(_) => return Err(self.syntax("expected '+', '-' or end of input")),
                None => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self, d: u64) -> Result<QuadExt, QFieldError> {
        match self.peek() {
            Some(b's') => {
                self.bump();
                QuadExt::sqrt_d(d)
            }
            Some(_) => {
                let r = self.parse_rational()?;
                if self.peek() == Some(b'*') {
                    self.bump();
                    match self.bump() {
                        Some(b's') => QuadExt::new(Rational::zero(), r, d),
                        _ => Err(QFieldError::Syntax {
                            position: self.pos.saturating_sub(1),
                            message: "expected 's' after '*'".to_string(),
                        }),
                    }
                } else {
                    QuadExt::from_rational(r, d)
                }
            }
            None => Err(self.syntax("expected a term")),
        }
    }

    fn parse_rational(&mut self) -> Result<Rational, QFieldError> {
        if self.peek() == Some(b'(') {
            self.bump();
            let r = self.parse_rational()?;
            if self.bump() != Some(b')') {
                return Err(QFieldError::Syntax {
                    position: self.pos.saturating_sub(1),
                    message: "expected ')'".to_string(),
                });
            }
            return Ok(r);
        }
        let numer = self.parse_int()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let den_pos = {
                self.skip_ws();
                self.pos
            };
            let denom = self.parse_unsigned()?;
            if denom.is_zero() {
                return Err(QFieldError::ZeroDenominator { position: den_pos });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn parse_int(&mut self) -> Result<BigInt, QFieldError> {
        let negative = if self.peek() == Some(b'-') {
            self.bump();
            true
        } else {
            false
        };
        let mag = self.parse_unsigned()?;
        Ok(if negative { -mag } else { mag })
    }

    fn parse_unsigned(&mut self) -> Result<BigInt, QFieldError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(QFieldError::Syntax {
                position: start,
                message: "expected digits".to_string(),
            });
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse::<BigInt>().expect("digits parse as integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Roots;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn qx(an: i64, ad: i64, bn: i64, bd: i64, d: u64) -> QuadExt {
        QuadExt::new(rat(an, ad), rat(bn, bd), d).unwrap()
    }

    #[test]
    fn discriminant_validation() {
        for d in [2u64, 3, 5, 6, 7, 10, 11, 13, 30] {
            assert!(is_valid_discriminant(d), "{d}");
        }
        for d in [0u64, 1, 4, 8, 9, 12, 16, 18, 25, 45, 50] {
            assert!(!is_valid_discriminant(d), "{d}");
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            QuadExt::parse("1/2+1/2*s", 5).unwrap(),
            qx(1, 2, 1, 2, 5)
        );
        assert_eq!(QuadExt::parse("3", 5).unwrap(), qx(3, 1, 0, 1, 5));
        // canonicalization happens on construction
        assert_eq!(
            QuadExt::parse("2/4+2/4*s", 5).unwrap(),
            qx(1, 2, 1, 2, 5)
        );
        // parenthesized rationals, as emitted by shell-quoted CLI args
        assert_eq!(
            QuadExt::parse("(-1/2)+1/2*s", 5).unwrap(),
            qx(-1, 2, 1, 2, 5)
        );
        assert_eq!(
            QuadExt::parse("3/2+(-1/2)*s", 5).unwrap(),
            qx(3, 2, -1, 2, 5)
        );
        assert_eq!(QuadExt::parse("s", 5).unwrap(), qx(0, 1, 1, 1, 5));
        assert_eq!(QuadExt::parse("-3+2*s", 5).unwrap(), qx(-3, 1, 2, 1, 5));
        assert_eq!(QuadExt::parse(" 1 + 2 * s ", 5).unwrap(), qx(1, 1, 2, 1, 5));
    }

    #[test]
    fn parse_errors_report_positions() {
        match QuadExt::parse("1/0", 5) {
            Err(QFieldError::ZeroDenominator { position }) => assert_eq!(position, 2),
            other => panic!("expected zero denominator, got {other:?}"),
        }
        assert!(matches!(
            QuadExt::parse("", 5),
            Err(QFieldError::Syntax { .. })
        ));
        assert!(matches!(
            QuadExt::parse("1+", 5),
            Err(QFieldError::Syntax { .. })
        ));
        assert!(matches!(
            QuadExt::parse("1*2", 5),
            Err(QFieldError::Syntax { .. })
        ));
        assert!(matches!(
            QuadExt::parse("1 2", 5),
            Err(QFieldError::Syntax { .. })
        ));
        assert!(matches!(
            QuadExt::parse("s*2", 5),
            Err(QFieldError::Syntax { .. })
        ));
        assert!(matches!(
            QuadExt::parse("1", 4),
            Err(QFieldError::InvalidDiscriminant { d: 4 })
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let x = qx(1, 1, 1, 1, 5);
        let y = qx(1, 1, -1, 1, 5);
        // difference of squares: a² − b²d
        assert_eq!(x.checked_mul(&y).unwrap(), qx(-4, 1, 0, 1, 5));
        let s = QuadExt::sqrt_d(5).unwrap();
        assert_eq!(s.checked_div(&s).unwrap(), QuadExt::one(5).unwrap());
        let u = qx(1, 2, 1, 2, 5);
        let v = qx(1, 2, -1, 2, 5);
        assert_eq!(u.checked_add(&v).unwrap(), QuadExt::one(5).unwrap());
    }

    #[test]
    fn arithmetic_errors() {
        let x = QuadExt::one(5).unwrap();
        let y = QuadExt::one(2).unwrap();
        assert!(matches!(
            x.checked_add(&y),
            Err(QFieldError::DiscriminantMismatch { left: 5, right: 2 })
        ));
        let z = QuadExt::zero(5).unwrap();
        assert!(matches!(
            x.checked_div(&z),
            Err(QFieldError::DivisionByZero)
        ));
    }

    #[test]
    fn sign_cases() {
        assert_eq!(qx(1, 1, -1, 1, 5).sign(), -1);
        assert_eq!(QuadExt::zero(5).unwrap().sign(), 0);
        // opposed coordinates: compare 9 against 4·5
        assert_eq!(qx(-3, 1, 2, 1, 5).sign(), 1);
        assert_eq!(qx(3, 1, -2, 1, 5).sign(), -1);
        assert_eq!(qx(-5, 2, 1, 1, 5).sign(), -1); // -5/2 + √5 < 0 since 25/4 > 5
        assert_eq!(qx(0, 1, -1, 3, 5).sign(), -1);
    }

    #[test]
    fn independence_examples() {
        let one = QuadExt::one(5).unwrap();
        let s = QuadExt::sqrt_d(5).unwrap();
        assert!(linearly_independent_over_q(&one, &s).unwrap());
        let x = qx(1, 2, 1, 1, 5);
        let y = qx(1, 1, 2, 1, 5);
        assert!(!linearly_independent_over_q(&x, &y).unwrap());
        // determinant 1·(−1/2) − 0·(5/2) = −1/2
        let z = qx(5, 2, -1, 2, 5);
        assert!(linearly_independent_over_q(&one, &z).unwrap());
        let zero = QuadExt::zero(5).unwrap();
        assert!(!linearly_independent_over_q(&zero, &zero).unwrap());
        assert!(matches!(
            linearly_independent_over_q(&one, &QuadExt::one(2).unwrap()),
            Err(QFieldError::DiscriminantMismatch { .. })
        ));
    }

    #[test]
    fn display_canonical_form() {
        assert_eq!(qx(1, 2, 1, 2, 5).to_string(), "1/2+1/2*s");
        assert_eq!(qx(3, 2, -1, 2, 5).to_string(), "3/2-1/2*s");
        assert_eq!(qx(0, 1, 0, 1, 5).to_string(), "0");
        assert_eq!(qx(3, 1, 0, 1, 5).to_string(), "3");
        assert_eq!(qx(0, 1, -2, 3, 5).to_string(), "-2/3*s");
        assert_eq!(qx(-3, 1, 2, 1, 5).to_string(), "-3+2*s");
    }

    /// 100-bit interval bounds on √d: n = ⌊√(d·2^200)⌋ gives
    /// n/2^100 ≤ √d < (n+1)/2^100.
    fn sqrt_bounds(d: u64) -> (Rational, Rational) {
        let scale = BigInt::one() << 100u32;
        let n = (BigInt::from(d) << 200u32).sqrt();
        (
            Rational::new(n.clone(), scale.clone()),
            Rational::new(n + BigInt::one(), scale),
        )
    }

    fn interval_sign(x: &QuadExt) -> Option<i8> {
        let (lo, hi) = sqrt_bounds(x.disc());
        let (xl, xh) = if x.sqrt_coefficient().is_negative() {
            (
                x.rational_part() + x.sqrt_coefficient() * &hi,
                x.rational_part() + x.sqrt_coefficient() * &lo,
            )
        } else {
            (
                x.rational_part() + x.sqrt_coefficient() * &lo,
                x.rational_part() + x.sqrt_coefficient() * &hi,
            )
        };
        if xl.is_positive() {
            Some(1)
        } else if xh.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_quadext(d: u64) -> impl Strategy<Value = QuadExt> {
        (arb_rational(), arb_rational())
            .prop_map(move |(a, b)| QuadExt::new(a, b, d).unwrap())
    }

    proptest! {
        #[test]
        fn parse_format_roundtrip(x in arb_quadext(5)) {
            let reparsed = QuadExt::parse(&x.to_string(), 5).unwrap();
            prop_assert_eq!(reparsed, x);
        }

        #[test]
        fn field_axioms(x in arb_quadext(5), y in arb_quadext(5), z in arb_quadext(5)) {
            let assoc_l = x.checked_add(&y).unwrap().checked_add(&z).unwrap();
            let assoc_r = x.checked_add(&y.checked_add(&z).unwrap()).unwrap();
            prop_assert_eq!(assoc_l, assoc_r);
            let dist_l = x.checked_mul(&y.checked_add(&z).unwrap()).unwrap();
            let dist_r = x
                .checked_mul(&y)
                .unwrap()
                .checked_add(&x.checked_mul(&z).unwrap())
                .unwrap();
            prop_assert_eq!(dist_l, dist_r);
            if !x.is_zero() {
                let inv = QuadExt::one(5).unwrap().checked_div(&x).unwrap();
                prop_assert_eq!(x.checked_mul(&inv).unwrap(), QuadExt::one(5).unwrap());
            }
        }

        #[test]
        fn sign_matches_interval_arithmetic(x in arb_quadext(5)) {
            if let Some(expected) = interval_sign(&x) {
                prop_assert_eq!(x.sign(), expected);
            }
        }

        #[test]
        fn independence_is_symmetric(x in arb_quadext(5), y in arb_quadext(5)) {
            prop_assert_eq!(
                linearly_independent_over_q(&x, &y).unwrap(),
                linearly_independent_over_q(&y, &x).unwrap()
            );
        }
    }
}
