//! Exact scalar arithmetic over ℚ or a prime field F_p (p odd).
//!
//! Every computation in this crate is exact; there are no tolerances.
//! Rationals are arbitrary-precision, gcd-reduced with normalized sign.
//! Prime-field elements are canonical representatives in `[0, p)` with
//! inversion by extended gcd.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Largest admissible prime modulus. Keeps `a * b` for `a, b < p` inside u64.
pub const MAX_PRIME: u64 = 1 << 31;

/// The coefficient field: exact rationals or F_p with p an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarField {
    Rational,
    PrimeField(u64),
}

/// An element of a [`ScalarField`]. Field membership is validated at the
/// container boundaries (`FuncOnS`, `MatrixF`); arithmetic goes through the
/// field object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Fp(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// The modulus is not a prime number.
    NotPrime(u64),
    /// Characteristic 2 is excluded throughout.
    CharacteristicTwo,
    PrimeTooLarge(u64),
    DivisionByZero,
    /// A scalar of the wrong kind (or out of range) for this field.
    WrongField,
    Parse(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::NotPrime(p) => write!(f, "{p} is not prime"),
            ScalarError::CharacteristicTwo => write!(f, "fields of characteristic 2 are excluded"),
            ScalarError::PrimeTooLarge(p) => write!(f, "prime {p} exceeds the supported bound"),
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::WrongField => write!(f, "scalar does not belong to this field"),
            ScalarError::Parse(s) => write!(f, "cannot parse scalar from {s:?}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Extended-gcd inverse of `a` modulo `p`; `None` when `a ≡ 0`.
fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Some(t0.rem_euclid(p as i128) as u64)
}

impl ScalarField {
    /// The field of exact rationals.
    pub fn rational() -> Self {
        ScalarField::Rational
    }

    /// F_p for an odd prime p.
    pub fn prime_field(p: u64) -> Result<Self, ScalarError> {
        if p == 2 {
            return Err(ScalarError::CharacteristicTwo);
        }
        if p > MAX_PRIME {
            return Err(ScalarError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(ScalarField::PrimeField(p))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            ScalarField::Rational => None,
            ScalarField::PrimeField(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            ScalarField::Rational => Scalar::Rational(BigRational::zero()),
            ScalarField::PrimeField(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            ScalarField::Rational => Scalar::Rational(BigRational::one()),
            ScalarField::PrimeField(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, k: i64) -> Scalar {
        match self {
            ScalarField::Rational => Scalar::Rational(BigRational::from(BigInt::from(k))),
            ScalarField::PrimeField(p) => Scalar::Fp((k as i128).rem_euclid(*p as i128) as u64),
        }
    }

    /// Lift a canonical F_p representative; for ℚ this is the integer k.
    pub fn from_u64(&self, k: u64) -> Scalar {
        match self {
            ScalarField::Rational => Scalar::Rational(BigRational::from(BigInt::from(k))),
            ScalarField::PrimeField(p) => Scalar::Fp(k % p),
        }
    }

    /// True when `s` is a canonical element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (ScalarField::Rational, Scalar::Rational(_)) => true,
            (ScalarField::PrimeField(p), Scalar::Fp(v)) => v < p,
            _ => false,
        }
    }

    fn expect_rat<'a>(&self, s: &'a Scalar) -> &'a BigRational {
        match s {
            Scalar::Rational(r) => r,
            Scalar::Fp(_) => panic!("prime-field scalar used in rational arithmetic"),
        }
    }

    fn expect_fp(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Fp(v) => *v,
            Scalar::Rational(_) => panic!("rational scalar used in prime-field arithmetic"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            ScalarField::Rational => Scalar::Rational(self.expect_rat(a) + self.expect_rat(b)),
            ScalarField::PrimeField(p) => Scalar::Fp((self.expect_fp(a) + self.expect_fp(b)) % p),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            ScalarField::Rational => Scalar::Rational(self.expect_rat(a) - self.expect_rat(b)),
            ScalarField::PrimeField(p) => {
                Scalar::Fp((p + self.expect_fp(a) - self.expect_fp(b)) % p)
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            ScalarField::Rational => Scalar::Rational(self.expect_rat(a) * self.expect_rat(b)),
            ScalarField::PrimeField(p) => Scalar::Fp(self.expect_fp(a) * self.expect_fp(b) % p),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            ScalarField::Rational => Scalar::Rational(-self.expect_rat(a)),
            ScalarField::PrimeField(p) => {
                let v = self.expect_fp(a);
                Scalar::Fp(if v == 0 { 0 } else { p - v })
            }
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, ScalarError> {
        match self {
            ScalarField::Rational => {
                let r = self.expect_rat(a);
                if r.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            ScalarField::PrimeField(p) => mod_inverse(self.expect_fp(a), *p)
                .map(Scalar::Fp)
                .ok_or(ScalarError::DivisionByZero),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Fp(v) => *v == 0,
        }
    }

    /// Parse a scalar from a decimal string or an `"a/b"` fraction.
    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        let text = text.trim();
        let bad = || ScalarError::Parse(text.to_string());
        let parse_int = |s: &str| s.trim().parse::<BigInt>().map_err(|_| bad());
        let (numer, denom) = match text.split_once('/') {
            Some((a, b)) => (parse_int(a)?, parse_int(b)?),
            None => (parse_int(text)?, BigInt::one()),
        };
        if denom.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            ScalarField::Rational => Ok(Scalar::Rational(BigRational::new(numer, denom))),
            ScalarField::PrimeField(p) => {
                let p_big = BigInt::from(*p);
                let to_fp = |x: &BigInt| -> u64 {
                    let m = x.mod_floor(&p_big);
                    let digits = m.to_u64_digits().1;
                    digits.first().copied().unwrap_or(0)
                };
                let d = Scalar::Fp(to_fp(&denom));
                let n = Scalar::Fp(to_fp(&numer));
                self.div(&n, &d)
            }
        }
    }

    /// Canonical report form: `"a"`/`"a/b"` for rationals, `"k mod p"` for F_p.
    pub fn render(&self, s: &Scalar) -> String {
        match s {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    format!("{}", r.numer())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(v) => match self {
                ScalarField::PrimeField(p) => format!("{v} mod {p}"),
                ScalarField::Rational => panic!("prime-field scalar rendered against ℚ"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_rejects_char_two_and_composites() {
        assert_eq!(ScalarField::prime_field(2), Err(ScalarError::CharacteristicTwo));
        assert_eq!(ScalarField::prime_field(9), Err(ScalarError::NotPrime(9)));
        assert_eq!(ScalarField::prime_field(1), Err(ScalarError::NotPrime(1)));
        assert!(ScalarField::prime_field(5).is_ok());
        assert!(ScalarField::prime_field(7919).is_ok());
    }

    #[test]
    fn mod_inverse_matches_extended_gcd() {
        for p in [3u64, 5, 7, 11, 101] {
            let field = ScalarField::prime_field(p).unwrap();
            for a in 1..p {
                let inv = field.inv(&Scalar::Fp(a)).unwrap();
                assert_eq!(field.mul(&Scalar::Fp(a), &inv), Scalar::Fp(1));
            }
            assert_eq!(field.inv(&Scalar::Fp(0)), Err(ScalarError::DivisionByZero));
        }
    }

    #[test]
    fn parse_and_render_round_trip() {
        let q = ScalarField::rational();
        assert_eq!(q.render(&q.parse("9/2").unwrap()), "9/2");
        assert_eq!(q.render(&q.parse("-4").unwrap()), "-4");
        assert_eq!(q.render(&q.parse("6/4").unwrap()), "3/2");
        assert_eq!(q.render(&q.parse("3/-6").unwrap()), "-1/2");

        let f5 = ScalarField::prime_field(5).unwrap();
        assert_eq!(f5.parse("7").unwrap(), Scalar::Fp(2));
        assert_eq!(f5.parse("-1").unwrap(), Scalar::Fp(4));
        assert_eq!(f5.parse("1/2").unwrap(), Scalar::Fp(3));
        assert_eq!(f5.render(&Scalar::Fp(3)), "3 mod 5");
        assert!(f5.parse("x").is_err());
        assert_eq!(f5.parse("1/0"), Err(ScalarError::DivisionByZero));
    }

    fn arb_rational() -> impl Strategy<Value = Scalar> {
        (any::<i32>(), 1..1000i32).prop_map(|(n, d)| {
            Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
        })
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            let q = ScalarField::rational();
            prop_assert_eq!(q.add(&q.add(&a, &b), &c), q.add(&a, &q.add(&b, &c)));
            prop_assert_eq!(q.mul(&q.mul(&a, &b), &c), q.mul(&a, &q.mul(&b, &c)));
            prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
            prop_assert_eq!(q.add(&a, &q.neg(&a)), q.zero());
            if !q.is_zero(&a) {
                prop_assert_eq!(q.mul(&a, &q.inv(&a).unwrap()), q.one());
            }
        }

        #[test]
        fn prime_field_axioms(a in 0u64..7, b in 0u64..7, c in 0u64..7) {
            let f = ScalarField::prime_field(7).unwrap();
            let (a, b, c) = (Scalar::Fp(a), Scalar::Fp(b), Scalar::Fp(c));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
            prop_assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
        }
    }
}
