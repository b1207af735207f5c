//! Right/left translation operators and the conjugation operator on F(S,F),
//! realized as exact 0/1 matrices in the delta-function basis.
//!
//! Each operator is composition with an index map, so its matrix has exactly
//! one 1 per row; it is stored as that row selector and materialized densely
//! on demand. Matrix products and equalities are computed on selectors,
//! which agrees entry-for-entry with the dense forms.

use alloc::vec::Vec;

use crate::linalg::{FuncOnS, MatrixF};
use crate::scalar::ScalarField;
use crate::semigroup::{FiniteSemigroup, InvolutiveAntiAutomorphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpTag {
    /// R(y): (R(y)h)(x) = h(xy)
    RightTranslation(usize),
    /// L(y): (L(y)h)(x) = h(yx)
    LeftTranslation(usize),
    /// J: (Jh)(x) = h(σ(x))
    Conjugation,
    Composite,
}

/// An |S|×|S| 0/1 operator matrix with one 1 per row; row `x` selects
/// coordinate `sel[x]`, i.e. `(M·h)(x) = h(sel[x])`.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    sel: Vec<usize>,
    pub tag: OpTag,
}

impl OperatorMatrix {
    pub fn right_translation(s: &FiniteSemigroup, y: usize) -> Self {
        let sel = (0..s.order()).map(|x| s.mul(x, y)).collect();
        OperatorMatrix { sel, tag: OpTag::RightTranslation(y) }
    }

    pub fn left_translation(s: &FiniteSemigroup, y: usize) -> Self {
        let sel = (0..s.order()).map(|x| s.mul(y, x)).collect();
        OperatorMatrix { sel, tag: OpTag::LeftTranslation(y) }
    }

    pub fn conjugation(sigma: &InvolutiveAntiAutomorphism) -> Self {
        OperatorMatrix { sel: sigma.as_slice().to_vec(), tag: OpTag::Conjugation }
    }

    pub fn dim(&self) -> usize {
        self.sel.len()
    }

    pub fn selector(&self) -> &[usize] {
        &self.sel
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &OperatorMatrix) -> OperatorMatrix {
        // (self·rhs h)(x) = (rhs h)(self.sel[x]) = h(rhs.sel[self.sel[x]]).
        let sel = self.sel.iter().map(|&i| rhs.sel[i]).collect();
        OperatorMatrix { sel, tag: OpTag::Composite }
    }

    /// Exact matrix equality (tags are ignored).
    pub fn matrix_eq(&self, other: &OperatorMatrix) -> bool {
        self.sel == other.sel
    }

    pub fn is_identity(&self) -> bool {
        self.sel.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn apply(&self, h: &FuncOnS) -> FuncOnS {
        h.compose_index_map(|x| self.sel[x])
    }

    /// Materialize the dense 0/1 matrix over the given field.
    pub fn dense(&self, field: ScalarField) -> MatrixF {
        let n = self.sel.len();
        let mut m = MatrixF::zero(field, n, n);
        for (x, &j) in self.sel.iter().enumerate() {
            m.set(x, j, field.one());
        }
        m
    }
}

/// Lazy application paths used in hot loops: no operator is materialized.
pub fn apply_right(s: &FiniteSemigroup, y: usize, h: &FuncOnS) -> FuncOnS {
    h.compose_index_map(|x| s.mul(x, y))
}

pub fn apply_left(s: &FiniteSemigroup, y: usize, h: &FuncOnS) -> FuncOnS {
    h.compose_index_map(|x| s.mul(y, x))
}

pub fn apply_conjugation(sigma: &InvolutiveAntiAutomorphism, h: &FuncOnS) -> FuncOnS {
    h.compose_index_map(|x| sigma.apply(x))
}

/// Outcome of a universally quantified law; `Fails` carries the first
/// counterexample in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// R(y₁)R(y₂) = R(y₁y₂) and L(y₂)L(y₁) = L(y₁y₂) over all pairs.
#[derive(Debug, Clone)]
pub struct RepresentationLawReport {
    pub right_homomorphism: Verdict<(usize, usize)>,
    pub left_anti_homomorphism: Verdict<(usize, usize)>,
}

impl RepresentationLawReport {
    pub fn holds(&self) -> bool {
        self.right_homomorphism.holds() && self.left_anti_homomorphism.holds()
    }
}

pub fn check_representation_laws(s: &FiniteSemigroup) -> RepresentationLawReport {
    let n = s.order();
    let right: Vec<OperatorMatrix> =
        (0..n).map(|y| OperatorMatrix::right_translation(s, y)).collect();
    let left: Vec<OperatorMatrix> =
        (0..n).map(|y| OperatorMatrix::left_translation(s, y)).collect();
    let mut right_verdict = Verdict::Holds;
    let mut left_verdict = Verdict::Holds;
    'outer_r: for y1 in 0..n {
        for y2 in 0..n {
            if !right[y1].compose(&right[y2]).matrix_eq(&right[s.mul(y1, y2)]) {
                right_verdict = Verdict::Fails((y1, y2));
                break 'outer_r;
            }
        }
    }
    'outer_l: for y1 in 0..n {
        for y2 in 0..n {
            if !left[y2].compose(&left[y1]).matrix_eq(&left[s.mul(y1, y2)]) {
                left_verdict = Verdict::Fails((y1, y2));
                break 'outer_l;
            }
        }
    }
    RepresentationLawReport {
        right_homomorphism: right_verdict,
        left_anti_homomorphism: left_verdict,
    }
}

/// J·R(σ(y))·J = L(y) for every y; lists all failing y (there must be none
/// for a validated carrier).
#[derive(Debug, Clone)]
pub struct ConjugationReport {
    pub failing: Vec<usize>,
}

impl ConjugationReport {
    pub fn holds(&self) -> bool {
        self.failing.is_empty()
    }
}

pub fn check_conjugation_identity(
    s: &FiniteSemigroup,
    sigma: &InvolutiveAntiAutomorphism,
) -> ConjugationReport {
    let j = OperatorMatrix::conjugation(sigma);
    let failing = (0..s.order())
        .filter(|&y| {
            let conjugated =
                j.compose(&OperatorMatrix::right_translation(s, sigma.apply(y))).compose(&j);
            !conjugated.matrix_eq(&OperatorMatrix::left_translation(s, y))
        })
        .collect();
    ConjugationReport { failing }
}

/// The order-reversal obstruction: R(σ(y₁))R(σ(y₂)) = R(σ(y₂y₁)) always,
/// and on a non-abelian carrier there is a pair where this differs from
/// R(σ(y₁y₂)), which is why y ↦ R(σ(y)) is not a homomorphism.
#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub reversal_law: Verdict<(usize, usize)>,
    /// First pair (lexicographic) where R(σ(y₁))R(σ(y₂)) ≠ R(σ(y₁y₂)).
    pub order_matters_witness: Option<(usize, usize)>,
}

pub fn check_obstruction(
    s: &FiniteSemigroup,
    sigma: &InvolutiveAntiAutomorphism,
) -> ObstructionReport {
    let n = s.order();
    let r_sigma: Vec<OperatorMatrix> =
        (0..n).map(|y| OperatorMatrix::right_translation(s, sigma.apply(y))).collect();
    let mut reversal = Verdict::Holds;
    let mut witness = None;
    'outer: for y1 in 0..n {
        for y2 in 0..n {
            let product = r_sigma[y1].compose(&r_sigma[y2]);
            if !product.matrix_eq(&r_sigma[s.mul(y2, y1)]) {
                reversal = Verdict::Fails((y1, y2));
                break 'outer;
            }
        }
    }
    'outer2: for y1 in 0..n {
        for y2 in 0..n {
            let product = r_sigma[y1].compose(&r_sigma[y2]);
            if !product.matrix_eq(&r_sigma[s.mul(y1, y2)]) {
                witness = Some((y1, y2));
                break 'outer2;
            }
        }
    }
    ObstructionReport { reversal_law: reversal, order_matters_witness: witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carriers::{
        cyclic_group, make_gl, make_rotation_group_24, make_symmetric_group, sigma_identity,
    };
    use crate::linalg::FuncOnS;
    use crate::scalar::ScalarField;

    #[test]
    fn right_translation_on_z3_moves_delta_functions() {
        let z3 = cyclic_group(3).unwrap();
        let field = ScalarField::prime_field(5).unwrap();
        // (R(1)δ₀)(x) = δ₀(x+1), which is 1 exactly at x = 2.
        let delta0 = FuncOnS::from_i64(field, &[1, 0, 0]);
        let moved = apply_right(&z3, 1, &delta0);
        assert_eq!(moved, FuncOnS::from_i64(field, &[0, 0, 1]));
        let op = OperatorMatrix::right_translation(&z3, 1);
        assert_eq!(op.apply(&delta0), moved);
    }

    #[test]
    fn identity_element_gives_identity_operators() {
        let (s3, _) = make_symmetric_group(3).unwrap();
        let e = s3.identity().unwrap();
        assert!(OperatorMatrix::right_translation(&s3, e).is_identity());
        assert!(OperatorMatrix::left_translation(&s3, e).is_identity());
    }

    #[test]
    fn sigma_id_gives_identity_conjugation() {
        let z4 = cyclic_group(4).unwrap();
        let sigma = sigma_identity(&z4).unwrap();
        assert!(OperatorMatrix::conjugation(&sigma).is_identity());
    }

    #[test]
    fn conjugation_operator_is_involutive() {
        let (s4, sigma) = make_symmetric_group(4).unwrap();
        let j = OperatorMatrix::conjugation(&sigma);
        assert!(j.compose(&j).is_identity());
        let _ = s4;
    }

    #[test]
    fn representation_laws_hold_on_builtin_carriers() {
        let (s3, _) = make_symmetric_group(3).unwrap();
        assert!(check_representation_laws(&s3).holds());
        let z4 = cyclic_group(4).unwrap();
        assert!(check_representation_laws(&z4).holds());
        let (rot, _) = make_rotation_group_24();
        assert!(check_representation_laws(&rot).holds());
    }

    #[test]
    fn abelian_carrier_has_commuting_right_translations() {
        let z4 = cyclic_group(4).unwrap();
        for y1 in 0..4 {
            for y2 in 0..4 {
                let a = OperatorMatrix::right_translation(&z4, y1);
                let b = OperatorMatrix::right_translation(&z4, y2);
                assert!(a.compose(&b).matrix_eq(&b.compose(&a)));
            }
        }
    }

    #[test]
    fn conjugation_identity_on_s4_gl2f3_and_abelian() {
        let (s4, inv) = make_symmetric_group(4).unwrap();
        assert!(check_conjugation_identity(&s4, &inv).holds());

        let (gl, tr) = make_gl(2, 3).unwrap();
        assert!(check_conjugation_identity(&gl, &tr).holds());

        // Abelian with σ = id: the identity reduces to R(y) = L(y).
        let z4 = cyclic_group(4).unwrap();
        let sigma = sigma_identity(&z4).unwrap();
        assert!(check_conjugation_identity(&z4, &sigma).holds());
        for y in 0..4 {
            assert!(OperatorMatrix::right_translation(&z4, y)
                .matrix_eq(&OperatorMatrix::left_translation(&z4, y)));
        }
    }

    #[test]
    fn conjugate_form_swaps_back() {
        // J·L(y)·J = R(σ(y)), obtained from the main identity by
        // multiplying both sides by J.
        let (s3, inv) = make_symmetric_group(3).unwrap();
        let j = OperatorMatrix::conjugation(&inv);
        for y in 0..s3.order() {
            let lhs = j.compose(&OperatorMatrix::left_translation(&s3, y)).compose(&j);
            let rhs = OperatorMatrix::right_translation(&s3, inv.apply(y));
            assert!(lhs.matrix_eq(&rhs));
        }
    }

    #[test]
    fn obstruction_reversal_law_holds_and_order_matters_on_s3() {
        let (s3, inv) = make_symmetric_group(3).unwrap();
        let report = check_obstruction(&s3, &inv);
        assert!(report.reversal_law.holds());
        let (y1, y2) = report.order_matters_witness.expect("S_3 is non-abelian");
        assert_ne!(s3.mul(y1, y2), s3.mul(y2, y1));

        // On an abelian carrier the witness must not exist.
        let z4 = cyclic_group(4).unwrap();
        let sigma = sigma_identity(&z4).unwrap();
        assert!(check_obstruction(&z4, &sigma).order_matters_witness.is_none());
    }

    #[test]
    fn dense_materialization_matches_selector_algebra() {
        let (s3, inv) = make_symmetric_group(3).unwrap();
        let field = ScalarField::prime_field(5).unwrap();
        let j = OperatorMatrix::conjugation(&inv);
        // J² = I as dense matrices.
        let dense_sq = j.dense(field).mul(&j.dense(field)).unwrap();
        assert_eq!(dense_sq, crate::linalg::MatrixF::identity(field, 6));
        // Dense product of R(y₁)R(y₂) equals the dense form of the
        // selector composition.
        for (y1, y2) in [(1, 2), (3, 4), (5, 1)] {
            let a = OperatorMatrix::right_translation(&s3, y1);
            let b = OperatorMatrix::right_translation(&s3, y2);
            // Row convention: (M·h) = dense(M)·h as column vectors, so the
            // product of operators corresponds to dense(a)·dense(b).
            let product = a.dense(field).mul(&b.dense(field)).unwrap();
            assert_eq!(product, a.compose(&b).dense(field));
        }
    }
}
