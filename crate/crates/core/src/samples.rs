//! Small categories and group tables used throughout the tests, the
//! acceptance suite and the command-line examples.

use crate::category::{FiniteCategory, Morphism, ObjectId};

/// Morphism ids of [`two_object_groupoid`].
pub mod groupoid_ids {
    pub const ID1: usize = 0;
    pub const ID2: usize = 1;
    /// `u: 2 -> 1`
    pub const U: usize = 2;
    /// `u⁻¹: 1 -> 2`
    pub const U_INV: usize = 3;
}

/// The connected groupoid on two objects with one arrow each way.
///
/// Objects `1, 2` are numbered `0, 1`; morphisms are `Id₁, Id₂, u, u⁻¹`
/// with `u ∈ hom(0, 1)` (an arrow `1 -> 0`) and `u⁻¹ ∈ hom(1, 0)`.
pub fn two_object_groupoid() -> FiniteCategory {
    use groupoid_ids::*;
    let morphisms = vec![
        Morphism { id: ID1, src: 0, tgt: 0 },
        Morphism { id: ID2, src: 1, tgt: 1 },
        Morphism { id: U, src: 1, tgt: 0 },
        Morphism { id: U_INV, src: 0, tgt: 1 },
    ];
    let compose = vec![
        (ID1, ID1, ID1),
        (ID2, ID2, ID2),
        (ID1, U, U),
        (U, ID2, U),
        (ID2, U_INV, U_INV),
        (U_INV, ID1, U_INV),
        (U, U_INV, ID1),
        (U_INV, U, ID2),
    ];
    FiniteCategory::new(2, morphisms, vec![ID1, ID2], compose).expect("groupoid tables")
}

/// The total order `0 ≤ 1 ≤ … ≤ n-1` as a thin category.
pub fn chain(n: usize) -> FiniteCategory {
    let relation: Vec<(ObjectId, ObjectId)> =
        (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
    FiniteCategory::from_preorder(n, &relation).expect("chains are partial orders")
}

/// Every partial order on `{0, …, n-1}` (labelled, not up to isomorphism),
/// as relation lists. There are 1, 3 and 19 of them for n = 1, 2, 3.
pub fn partial_orders(n: usize) -> Vec<Vec<(ObjectId, ObjectId)>> {
    let off_diagonal: Vec<(ObjectId, ObjectId)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << off_diagonal.len()) {
        let mut rel: Vec<(ObjectId, ObjectId)> = (0..n).map(|x| (x, x)).collect();
        rel.extend(
            off_diagonal
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        );
        let has = |p: (ObjectId, ObjectId)| rel.contains(&p);
        let antisymmetric = rel.iter().all(|&(x, y)| x == y || !has((y, x)));
        let transitive = rel
            .iter()
            .all(|&(x, y)| rel.iter().all(|&(y2, z)| y2 != y || has((x, z))));
        if antisymmetric && transitive {
            rel.sort();
            out.push(rel);
        }
    }
    out
}

/// Multiplication table of the cyclic group `Z_n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Multiplication table of the symmetric group on `k` letters. Elements are
/// the permutations of `0..k` in lexicographic order (so 0 is the identity)
/// and `table[p][q] = p ∘ q`, i.e. `q` applied first.
pub fn symmetric_table(k: usize) -> Vec<Vec<usize>> {
    let perms = permutations(k);
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("permutation");
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index(&q.iter().map(|&i| p[i]).collect()))
                .collect()
        })
        .collect()
}

/// Permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in 0..k {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        assert_eq!(partial_orders(1).len(), 1);
        assert_eq!(partial_orders(2).len(), 3);
        assert_eq!(partial_orders(3).len(), 19);
    }

    #[test]
    fn symmetric_group_is_a_group() {
        let s3 = symmetric_table(3);
        assert_eq!(s3.len(), 6);
        let c = FiniteCategory::from_group(&s3, 0).unwrap();
        assert!(c.validate().is_valid());
    }

    #[test]
    fn chain_sizes() {
        assert_eq!(chain(2).num_morphisms(), 3);
        assert_eq!(chain(3).num_morphisms(), 6);
        assert!(two_object_groupoid().validate().is_valid());
    }
}
