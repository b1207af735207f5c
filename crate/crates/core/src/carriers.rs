//! Builtin carriers: cyclic groups, symmetric groups with inversion,
//! GL_n(F_p) with transpose, and the 24-element rotation group of the cube
//! with transpose. Every constructor returns fully validated values.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::semigroup::{
    FiniteSemigroup, InvolutiveAntiAutomorphism, SemigroupError, DEFAULT_ORDER_CAP,
};

/// Z_n under addition, identity 0.
pub fn cyclic_group(n: usize) -> Result<FiniteSemigroup, SemigroupError> {
    if n == 0 {
        return Err(SemigroupError::EmptyCarrier);
    }
    if n > DEFAULT_ORDER_CAP {
        return Err(SemigroupError::TooLarge { order: n, cap: DEFAULT_ORDER_CAP });
    }
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let labels = (0..n).map(|k| format!("{k}")).collect();
    FiniteSemigroup::from_table(&table, Some(labels))
}

/// The identity map as σ; valid exactly on abelian carriers.
pub fn sigma_identity(
    s: &FiniteSemigroup,
) -> Result<InvolutiveAntiAutomorphism, SemigroupError> {
    let id: Vec<usize> = (0..s.order()).collect();
    InvolutiveAntiAutomorphism::validate(s, &id)
}

/// x ↦ -x on Z_n (group inversion of the cyclic group).
pub fn sigma_negation(z_n: &FiniteSemigroup) -> Result<InvolutiveAntiAutomorphism, SemigroupError> {
    let n = z_n.order();
    let neg: Vec<usize> = (0..n).map(|x| (n - x) % n).collect();
    InvolutiveAntiAutomorphism::validate(z_n, &neg)
}

/// All permutations of `0..n` in lexicographic order.
pub fn symmetric_group_permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p ∘ q)(j) = p(q(j)): apply q first.
    q.iter().map(|&j| p[j]).collect()
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (j, &v) in p.iter().enumerate() {
        inv[v] = j;
    }
    inv
}

/// Cycle notation on 1-based points; the identity prints as "id".
fn cycle_label(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut j = start;
        loop {
            seen[j] = true;
            if j != start {
                out.push(' ');
            }
            out.push_str(&format!("{}", j + 1));
            j = p[j];
            if j == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("id");
    }
    out
}

/// S_n under composition with σ(π) = π⁻¹. Order n! (n ≤ 6).
pub fn make_symmetric_group(
    n: usize,
) -> Result<(FiniteSemigroup, InvolutiveAntiAutomorphism), SemigroupError> {
    if n == 0 {
        return Err(SemigroupError::EmptyCarrier);
    }
    if n > 6 {
        let order = (1..=n).product();
        return Err(SemigroupError::TooLarge { order, cap: 720 });
    }
    let perms = symmetric_group_permutations(n);
    let index: BTreeMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| perms.iter().map(|b| index[compose(a, b).as_slice()]).collect())
        .collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    let sg = FiniteSemigroup::from_table(&table, Some(labels))?;
    let sigma: Vec<usize> = perms.iter().map(|p| index[invert(p).as_slice()]).collect();
    let inv = InvolutiveAntiAutomorphism::validate(&sg, &sigma)?;
    Ok((sg, inv))
}

fn det_mod_p(m: &[Vec<u64>], p: u64) -> u64 {
    let n = m.len();
    let sub = |a: u64, b: u64| (p + a % p - b % p) % p;
    match n {
        1 => m[0][0] % p,
        2 => sub(m[0][0] * m[1][1] % p, m[0][1] * m[1][0] % p),
        3 => {
            let pos = (m[0][0] * m[1][1] % p * m[2][2]
                + m[0][1] * m[1][2] % p * m[2][0]
                + m[0][2] * m[1][0] % p * m[2][1])
                % p;
            let neg = (m[0][2] * m[1][1] % p * m[2][0]
                + m[0][0] * m[1][2] % p * m[2][1]
                + m[0][1] * m[1][0] % p * m[2][2])
                % p;
            sub(pos, neg)
        }
        _ => unreachable!("determinant supported for n ≤ 3"),
    }
}

fn mat_label(m: &[Vec<u64>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|v| format!("{v}")).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// All invertible n×n matrices over F_p in lexicographic (row-major) order.
pub fn gl_matrices(n: usize, p: u64) -> Result<Vec<Vec<Vec<u64>>>, SemigroupError> {
    if !(1..=3).contains(&n) {
        return Err(SemigroupError::BadParameter("GL_n supported for n in 1..=3"));
    }
    if p == 2 || crate::scalar::ScalarField::prime_field(p).is_err() {
        return Err(SemigroupError::BadPrime(p));
    }
    // |GL_n(F_p)| = Π (pⁿ - pⁱ); enforce the cap before enumerating.
    let pn = (p as u128).pow(n as u32);
    let mut order: u128 = 1;
    for i in 0..n {
        order *= pn - (p as u128).pow(i as u32);
    }
    if order > DEFAULT_ORDER_CAP as u128 {
        return Err(SemigroupError::TooLarge {
            order: order.min(usize::MAX as u128) as usize,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let cells = n * n;
    let total = (p as u128).pow(cells as u32);
    let mut out = Vec::with_capacity(order as usize);
    let mut digits = vec![0u64; cells];
    for _ in 0..total {
        let m: Vec<Vec<u64>> = (0..n).map(|r| digits[r * n..(r + 1) * n].to_vec()).collect();
        if det_mod_p(&m, p) != 0 {
            out.push(m);
        }
        // Row-major odometer; the last cell varies fastest.
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// GL_n(F_p) under matrix multiplication with σ(A) = Aᵀ.
pub fn make_gl(
    n: usize,
    p: u64,
) -> Result<(FiniteSemigroup, InvolutiveAntiAutomorphism), SemigroupError> {
    let mats = gl_matrices(n, p)?;
    let index: BTreeMap<&[Vec<u64>], usize> =
        mats.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mul = |a: &[Vec<u64>], b: &[Vec<u64>]| -> Vec<Vec<u64>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j] % p).sum::<u64>() % p)
                    .collect()
            })
            .collect()
    };
    let table: Vec<Vec<usize>> = mats
        .iter()
        .map(|a| mats.iter().map(|b| index[mul(a, b).as_slice()]).collect())
        .collect();
    let labels = mats.iter().map(|m| mat_label(m)).collect();
    let sg = FiniteSemigroup::from_table(&table, Some(labels))?;
    let transpose = |m: &[Vec<u64>]| -> Vec<Vec<u64>> {
        (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
    };
    let sigma: Vec<usize> = mats.iter().map(|m| index[transpose(m).as_slice()]).collect();
    let tr = InvolutiveAntiAutomorphism::validate(&sg, &sigma)?;
    Ok((sg, tr))
}

/// The 24 signed 3×3 permutation matrices of determinant +1 (the rotation
/// group of the cube), entries exactly in {-1, 0, 1}.
pub fn rotation_matrices_24() -> Vec<[[i64; 3]; 3]> {
    let perms = symmetric_group_permutations(3);
    let perm_sign = |p: &[usize]| -> i64 {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let mut out = Vec::with_capacity(24);
    for p in &perms {
        for bits in 0..8u8 {
            let signs = [
                if bits & 4 == 0 { 1i64 } else { -1 },
                if bits & 2 == 0 { 1 } else { -1 },
                if bits & 1 == 0 { 1 } else { -1 },
            ];
            if perm_sign(p) * signs[0] * signs[1] * signs[2] != 1 {
                continue;
            }
            let mut m = [[0i64; 3]; 3];
            for i in 0..3 {
                m[i][p[i]] = signs[i];
            }
            out.push(m);
        }
    }
    out
}

/// The cube rotation group under matrix multiplication with σ(g) = gᵀ = g⁻¹.
pub fn make_rotation_group_24() -> (FiniteSemigroup, InvolutiveAntiAutomorphism) {
    let mats = rotation_matrices_24();
    let index: BTreeMap<[[i64; 3]; 3], usize> =
        mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mul = |a: &[[i64; 3]; 3], b: &[[i64; 3]; 3]| -> [[i64; 3]; 3] {
        let mut c = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    };
    let table: Vec<Vec<usize>> = mats
        .iter()
        .map(|a| mats.iter().map(|b| index[&mul(a, b)]).collect())
        .collect();
    let labels = mats
        .iter()
        .map(|m| {
            let body: Vec<String> =
                m.iter().map(|r| format!("[{},{},{}]", r[0], r[1], r[2])).collect();
            format!("[{}]", body.join(","))
        })
        .collect();
    let sg = FiniteSemigroup::from_table(&table, Some(labels))
        .expect("signed permutation matrices form a group");
    let transpose = |m: &[[i64; 3]; 3]| -> [[i64; 3]; 3] {
        let mut t = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                t[i][j] = m[j][i];
            }
        }
        t
    };
    let sigma: Vec<usize> = mats.iter().map(|m| index[&transpose(m)]).collect();
    let tr = InvolutiveAntiAutomorphism::validate(&sg, &sigma)
        .expect("transpose inverts rotations");
    (sg, tr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(make_symmetric_group(3).unwrap().0.order(), 6);
        assert_eq!(make_symmetric_group(4).unwrap().0.order(), 24);
        let (s1, sigma) = make_symmetric_group(1).unwrap();
        assert_eq!(s1.order(), 1);
        assert_eq!(sigma.as_slice(), &[0]);
        assert!(matches!(make_symmetric_group(7), Err(SemigroupError::TooLarge { .. })));
    }

    #[test]
    fn symmetric_group_labels_are_cycle_notation() {
        let (s3, _) = make_symmetric_group(3).unwrap();
        let labels = s3.labels().unwrap();
        assert_eq!(labels[0], "id");
        assert!(labels.contains(&"(1 2)".into()));
        assert!(labels.contains(&"(1 2 3)".into()));
    }

    #[test]
    fn gl2_f3_has_order_48() {
        // |GL_2(F_3)| = (9-1)(9-3) = 48; the constructor must agree with
        // the enumeration it performs.
        let (gl, sigma) = make_gl(2, 3).unwrap();
        assert_eq!(gl.order(), 48);
        assert!(gl.identity().is_some());
        // σ is an involution by validation; spot-check it is not the identity.
        assert!((0..48).any(|i| sigma.apply(i) != i));
    }

    #[test]
    fn gl_rejects_char_two_and_oversize() {
        assert_eq!(make_gl(2, 2).err(), Some(SemigroupError::BadPrime(2)));
        assert!(matches!(make_gl(2, 11), Err(SemigroupError::TooLarge { .. })));
        assert!(matches!(make_gl(3, 3), Err(SemigroupError::TooLarge { .. })));
    }

    #[test]
    fn gl1_f3_is_the_unit_group() {
        let (gl, sigma) = make_gl(1, 3).unwrap();
        assert_eq!(gl.order(), 2);
        // Transpose of a 1×1 matrix is the identity map.
        assert_eq!(sigma.as_slice(), &[0, 1]);
    }

    #[test]
    fn rotation_group_is_orthogonal_of_order_24() {
        let mats = rotation_matrices_24();
        assert_eq!(mats.len(), 24);
        let (sg, sigma) = make_rotation_group_24();
        assert_eq!(sg.order(), 24);
        let e = sg.identity().expect("rotation group has an identity");
        // g·gᵀ = I for every element, elementwise over the stored matrices,
        // and σ = transpose equals group inversion.
        for g in 0..24 {
            assert_eq!(sg.mul(g, sigma.apply(g)), e);
            assert_eq!(sg.mul(sigma.apply(g), g), e);
            let m = mats[g];
            for i in 0..3 {
                for j in 0..3 {
                    let dot: i64 = (0..3).map(|k| m[i][k] * m[j][k]).sum();
                    assert_eq!(dot, i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn cyclic_group_and_sigmas() {
        let z4 = cyclic_group(4).unwrap();
        assert_eq!(z4.identity(), Some(0));
        assert!(sigma_identity(&z4).is_ok());
        let neg = sigma_negation(&z4).unwrap();
        assert_eq!(neg.as_slice(), &[0, 3, 2, 1]);
    }
}
