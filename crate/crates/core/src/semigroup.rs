//! Finite semigroups given by Cayley tables, and their involutive
//! anti-automorphisms. Validation is eager: a value of either type cannot
//! exist without its axioms having been checked on the full carrier.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Default bound on carrier order for the builtin constructors.
pub const DEFAULT_ORDER_CAP: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    EmptyCarrier,
    TableShape { expected: usize, row: usize, got: usize },
    IndexOutOfRange { row: usize, col: usize, value: usize },
    /// Associativity fails at the witness triple: `(a·b)·c ≠ a·(b·c)`.
    NonAssociative { a: usize, b: usize, c: usize },
    IdentityInvalid { claimed: usize },
    NotPermutation,
    /// `σ(x·y) ≠ σ(y)·σ(x)` at the witness pair.
    NotAntiHomomorphism { x: usize, y: usize },
    /// `σ(σ(x)) ≠ x` at the witness element.
    NotInvolutive { x: usize },
    TooLarge { order: usize, cap: usize },
    /// The modulus is not an odd prime (characteristic 2 is excluded).
    BadPrime(u64),
    BadParameter(&'static str),
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::EmptyCarrier => write!(f, "carrier must have at least one element"),
            SemigroupError::TableShape { expected, row, got } => {
                write!(f, "table row {row} has {got} entries, expected {expected}")
            }
            SemigroupError::IndexOutOfRange { row, col, value } => {
                write!(f, "table[{row}][{col}] = {value} is out of range")
            }
            SemigroupError::NonAssociative { a, b, c } => {
                write!(f, "not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})")
            }
            SemigroupError::IdentityInvalid { claimed } => {
                write!(f, "element {claimed} is not a two-sided identity")
            }
            SemigroupError::NotPermutation => write!(f, "sigma is not a permutation"),
            SemigroupError::NotAntiHomomorphism { x, y } => {
                write!(f, "sigma({x}·{y}) ≠ sigma({y})·sigma({x})")
            }
            SemigroupError::NotInvolutive { x } => write!(f, "sigma(sigma({x})) ≠ {x}"),
            SemigroupError::TooLarge { order, cap } => {
                write!(f, "carrier order {order} exceeds cap {cap}")
            }
            SemigroupError::BadPrime(p) => write!(f, "{p} is not an odd prime"),
            SemigroupError::BadParameter(what) => write!(f, "bad parameter: {what}"),
        }
    }
}

/// A finite semigroup: carrier `{0, …, n-1}` with an associative Cayley
/// table. Elements are opaque indices; labels are attached only for reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
    identity: Option<usize>,
}

impl FiniteSemigroup {
    /// Validate a Cayley table: shape, range, and associativity on all
    /// `n³` triples. A two-sided identity is detected if present.
    pub fn from_table(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self, SemigroupError> {
        let n = table.len();
        if n == 0 {
            return Err(SemigroupError::EmptyCarrier);
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(SemigroupError::TableShape { expected: n, row, got: r.len() });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(SemigroupError::IndexOutOfRange { row, col, value });
                }
                flat.push(value);
            }
        }
        if let Some(ls) = &labels {
            if ls.len() != n {
                return Err(SemigroupError::TableShape { expected: n, row: 0, got: ls.len() });
            }
        }
        let mul = |a: usize, b: usize| flat[a * n + b];
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(SemigroupError::NonAssociative { a, b, c });
                    }
                }
            }
        }
        let identity =
            (0..n).find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a));
        Ok(FiniteSemigroup { order: n, table: flat, labels, identity })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// The detected two-sided identity, if the semigroup has one.
    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// First pair with `x·y ≠ y·x`, in lexicographic order.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        for x in 0..self.order {
            for y in 0..self.order {
                if self.mul(x, y) != self.mul(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    /// Rename with a declared identity from an external definition; fails if
    /// the claimed element is not actually a two-sided identity.
    pub fn check_declared_identity(&self, claimed: usize) -> Result<(), SemigroupError> {
        if self.identity == Some(claimed) {
            Ok(())
        } else {
            Err(SemigroupError::IdentityInvalid { claimed })
        }
    }
}

/// A validated permutation σ of the carrier with σ(xy) = σ(y)σ(x) and σ² = id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutiveAntiAutomorphism {
    sigma: Vec<usize>,
}

impl InvolutiveAntiAutomorphism {
    /// Check bijectivity, the anti-homomorphism law on all pairs, and
    /// involutivity on all elements, reporting the first witness on failure.
    pub fn validate(
        semigroup: &FiniteSemigroup,
        sigma: &[usize],
    ) -> Result<Self, SemigroupError> {
        let n = semigroup.order();
        if sigma.len() != n {
            return Err(SemigroupError::NotPermutation);
        }
        let mut seen = alloc::vec![false; n];
        for &v in sigma {
            if v >= n || seen[v] {
                return Err(SemigroupError::NotPermutation);
            }
            seen[v] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if sigma[semigroup.mul(x, y)] != semigroup.mul(sigma[y], sigma[x]) {
                    return Err(SemigroupError::NotAntiHomomorphism { x, y });
                }
            }
        }
        for x in 0..n {
            if sigma[sigma[x]] != x {
                return Err(SemigroupError::NotInvolutive { x });
            }
        }
        Ok(InvolutiveAntiAutomorphism { sigma: sigma.to_vec() })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.sigma[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn describe(&self) -> String {
        format!("{:?}", self.sigma)
    }
}
