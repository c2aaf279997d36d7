//! Signed permutation matrix groups: closure from generators,
//! classification, orbits, stabilizers and the coset tables that drive the
//! generator constructions.

pub mod iso;

pub use iso::{bind_iso, presentation_from_images, GroupFieldIso};

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A permutation of {0..n-1}; `map[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { map: (0..n).collect() }
    }

    pub fn from_map(map: Vec<usize>) -> Result<Perm> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &j in &map {
            if j >= n || seen[j] {
                return Err(Error::Usage("not a permutation".into()));
            }
            seen[j] = true;
        }
        Ok(Perm { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { map: other.map.iter().map(|&j| self.map[j]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Perm { map: inv }
    }
}

/// A signed permutation matrix, stored as the permutation of basis
/// indices together with the sign picked up by each one:
/// `g(e_i) = signs[i] * e_(perm(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermElement {
    perm: Perm,
    signs: Vec<i8>,
}

impl SignedPermElement {
    pub fn identity(n: usize) -> SignedPermElement {
        SignedPermElement { perm: Perm::identity(n), signs: vec![1; n] }
    }

    pub fn new(perm: Perm, signs: Vec<i8>) -> Result<SignedPermElement> {
        if perm.len() != signs.len() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Usage("signs must be +1/-1, one per column".into()));
        }
        Ok(SignedPermElement { perm, signs })
    }

    /// Decodes an integer matrix, rejecting anything that is not a signed
    /// permutation matrix (one entry of +-1 per row and column).
    pub fn from_matrix(matrix: &[Vec<i64>]) -> Result<SignedPermElement> {
        let n = matrix.len();
        let describe = |msg: &str| {
            Error::NotSignedPermutation(format!("{msg} in {matrix:?}"))
        };
        for row in matrix {
            if row.len() != n {
                return Err(describe("non-square matrix"));
            }
        }
        let mut map = vec![usize::MAX; n];
        let mut signs = vec![0i8; n];
        let mut row_used = vec![false; n];
        for col in 0..n {
            let mut hit = None;
            for row in 0..n {
                match matrix[row][col] {
                    0 => {}
                    1 | -1 => {
                        if hit.is_some() {
                            return Err(describe("two nonzero entries in one column"));
                        }
                        hit = Some((row, matrix[row][col] as i8));
                    }
                    _ => return Err(describe("entry outside {-1, 0, 1}")),
                }
            }
            let Some((row, sign)) = hit else {
                return Err(describe("zero column"));
            };
            if row_used[row] {
                return Err(describe("two nonzero entries in one row"));
            }
            row_used[row] = true;
            map[col] = row;
            signs[col] = sign;
        }
        Ok(SignedPermElement { perm: Perm { map }, signs })
    }

    /// Regenerates the integer matrix: column i holds `signs[i]` at row
    /// `perm(i)`.
    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.dimension();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[self.perm.apply(i)][i] = self.signs[i] as i64;
        }
        m
    }

    pub fn dimension(&self) -> usize {
        self.perm.len()
    }

    /// The homomorphism to the symmetric group: drops signs.
    pub fn rho(&self) -> &Perm {
        &self.perm
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.signs.iter().all(|&s| s == 1)
    }

    pub fn all_signs_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// Group law: `(self * other)(e_i) = self(other(e_i))`.
    pub fn mul(&self, other: &SignedPermElement) -> SignedPermElement {
        let n = self.dimension();
        assert_eq!(n, other.dimension(), "dimension mismatch");
        let mut signs = vec![0i8; n];
        for i in 0..n {
            signs[i] = other.signs[i] * self.signs[other.perm.apply(i)];
        }
        SignedPermElement { perm: self.perm.compose(&other.perm), signs }
    }

    pub fn inverse(&self) -> SignedPermElement {
        let inv = self.perm.inverse();
        let n = self.dimension();
        let mut signs = vec![0i8; n];
        for i in 0..n {
            signs[i] = self.signs[inv.apply(i)];
        }
        SignedPermElement { perm: inv, signs }
    }
}

/// Pure permutation groups take the linear coset-sum construction;
/// anything with a sign takes the affine one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    PurePermutation,
    Signed,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::PurePermutation => write!(f, "pure_permutation"),
            Classification::Signed => write!(f, "signed"),
        }
    }
}

/// Above this order the O(|G|^2) multiplication table is skipped and
/// products are recomputed through the element index instead.
const MULT_TABLE_LIMIT: usize = 2048;

/// A finite subgroup of the signed permutation matrices, closed and
/// immutable. Element 0 is the identity; the rest follow in
/// breadth-first discovery order (right-multiplication by the generators
/// in input order).
#[derive(Debug)]
pub struct MatrixGroup {
    n: usize,
    elements: Vec<SignedPermElement>,
    index: HashMap<SignedPermElement, usize>,
    generators: Vec<usize>,
    /// per element: (parent index, generator slot) along the BFS tree;
    /// `None` for the identity
    bfs_parent: Vec<Option<(usize, usize)>>,
    inverse: Vec<usize>,
    mult: Option<Vec<u32>>,
}

/// Breadth-first closure of a generating set inside B_n.
pub fn close_group(
    n: usize,
    generators: &[SignedPermElement],
    cap: usize,
) -> Result<MatrixGroup> {
    for g in generators {
        if g.dimension() != n {
            return Err(Error::Usage(format!(
                "generator of dimension {} in a group of dimension {n}",
                g.dimension()
            )));
        }
    }
    let mut elements = vec![SignedPermElement::identity(n)];
    let mut index = HashMap::new();
    index.insert(elements[0].clone(), 0usize);
    let mut bfs_parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut head = 0;
    while head < elements.len() {
        for (slot, g) in generators.iter().enumerate() {
            let product = elements[head].mul(g);
            if !index.contains_key(&product) {
                if elements.len() >= cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                index.insert(product.clone(), elements.len());
                elements.push(product);
                bfs_parent.push(Some((head, slot)));
            }
        }
        head += 1;
    }
    let inverse = elements
        .iter()
        .map(|g| index[&g.inverse()])
        .collect::<Vec<_>>();
    let mult = if elements.len() <= MULT_TABLE_LIMIT {
        let m = elements.len();
        let mut table = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = index[&elements[i].mul(&elements[j])] as u32;
            }
        }
        Some(table)
    } else {
        None
    };
    let generators = generators.iter().map(|g| index[g]).collect();
    Ok(MatrixGroup { n, elements, index, generators, bfs_parent, inverse, mult })
}

/// Convenience: decode integer matrices, then close.
pub fn close_group_from_matrices(
    n: usize,
    matrices: &[Vec<Vec<i64>>],
    cap: usize,
) -> Result<MatrixGroup> {
    let gens: Result<Vec<SignedPermElement>> =
        matrices.iter().map(|m| SignedPermElement::from_matrix(m)).collect();
    close_group(n, &gens?, cap)
}

impl MatrixGroup {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &SignedPermElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[SignedPermElement] {
        &self.elements
    }

    pub fn index_of(&self, g: &SignedPermElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Indices of the generators in the roster, in input order.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub(crate) fn bfs_parent(&self, i: usize) -> Option<(usize, usize)> {
        self.bfs_parent[i]
    }

    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        match &self.mult {
            Some(table) => table[i * self.elements.len() + j] as usize,
            None => self.index[&self.elements[i].mul(&self.elements[j])],
        }
    }

    pub fn inv_index(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn classify(&self) -> Classification {
        if self.elements.iter().all(SignedPermElement::all_signs_positive) {
            Classification::PurePermutation
        } else {
            Classification::Signed
        }
    }

    /// Orbits of the unsigned index action, blocks sorted by their
    /// smallest member, which is also the chosen representative.
    pub fn orbits(&self) -> Orbits {
        let n = self.n;
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if block_of[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut members = Vec::new();
            let mut stack = vec![start];
            block_of[start] = id;
            while let Some(i) = stack.pop() {
                members.push(i);
                for g in &self.elements {
                    let j = g.rho().apply(i);
                    if block_of[j] == usize::MAX {
                        block_of[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            blocks.push(members);
        }
        let representatives = blocks.iter().map(|b| b[0]).collect();
        Orbits { blocks, representatives, block_of }
    }

    /// Element indices fixing index `i` under the unsigned action, i.e.
    /// G^{+-}_{i,i} in the signed case and G_{i,i} in the pure case.
    /// Closure under the group law is re-verified on every call.
    pub fn stabilizer(&self, i: usize) -> Vec<usize> {
        let members: Vec<usize> = (0..self.order())
            .filter(|&e| self.elements[e].rho().apply(i) == i)
            .collect();
        for &a in &members {
            for &b in &members {
                let product = self.mul_index(a, b);
                assert!(
                    self.elements[product].rho().apply(i) == i,
                    "stabilizer not closed: this cannot happen in a closed group"
                );
            }
        }
        members
    }

    /// Fills all 2n^2 coset lists in one roster scan.
    pub fn coset_table(&self) -> CosetTable {
        let n = self.n;
        let mut plus = vec![Vec::new(); n * n];
        let mut minus = vec![Vec::new(); n * n];
        for (e, g) in self.elements.iter().enumerate() {
            for i in 0..n {
                let j = g.rho().apply(i);
                if g.sign(i) == 1 {
                    plus[i * n + j].push(e);
                } else {
                    minus[i * n + j].push(e);
                }
            }
        }
        CosetTable { n, plus, minus }
    }
}

/// Orbit partition of the basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    pub blocks: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub block_of: Vec<usize>,
}

impl Orbits {
    pub fn is_transitive(&self) -> bool {
        self.blocks.len() == 1
    }
}

/// The sets G^+_{i,j} and G^-_{i,j} as element-index lists in roster
/// order. `g` lies in the (i, j) cell exactly when `rho_g(i) = j`; the
/// sign of the cell is the sign `g` attaches to basis vector i.
#[derive(Clone, Debug)]
pub struct CosetTable {
    n: usize,
    plus: Vec<Vec<usize>>,
    minus: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn plus(&self, i: usize, j: usize) -> &[usize] {
        &self.plus[i * self.n + j]
    }

    pub fn minus(&self, i: usize, j: usize) -> &[usize] {
        &self.minus[i * self.n + j]
    }

    /// The union G_{i,j} = G^+_{i,j} ⊔ G^-_{i,j}, merged in roster order.
    pub fn union(&self, i: usize, j: usize) -> Vec<usize> {
        let (a, b) = (self.plus(i, j), self.minus(i, j));
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() || y < b.len() {
            if y == b.len() || (x < a.len() && a[x] < b[y]) {
                out.push(a[x]);
                x += 1;
            } else {
                out.push(b[y]);
                y += 1;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// r and s generate the dihedral group of order 8 inside S_4.
    pub(crate) fn d8_matrices() -> Vec<Vec<Vec<i64>>> {
        vec![
            vec![
                vec![0, 0, 0, 1],
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
            ],
            vec![
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 0],
            ],
        ]
    }

    /// The order-4 signed generator acting on three indices.
    pub(crate) fn c4_matrix() -> Vec<Vec<i64>> {
        vec![vec![0, -1, 0], vec![1, 0, 0], vec![0, 0, -1]]
    }

    #[test]
    fn decode_and_regenerate_matrices() {
        let sigma = SignedPermElement::from_matrix(&c4_matrix()).unwrap();
        assert_eq!(sigma.rho().apply(0), 1);
        assert_eq!(sigma.rho().apply(1), 0);
        assert_eq!(sigma.rho().apply(2), 2);
        assert_eq!(sigma.sign(0), 1);
        assert_eq!(sigma.sign(1), -1);
        assert_eq!(sigma.sign(2), -1);
        assert_eq!(sigma.to_matrix(), c4_matrix());

        // identity permutation in the kernel of rho
        let diag = SignedPermElement::from_matrix(&[vec![-1, 0], vec![0, -1]]).unwrap();
        assert!(diag.rho().is_identity());
        assert!(!diag.is_identity());
    }

    #[test]
    fn bad_matrices_are_rejected() {
        for m in [
            vec![vec![1, 0], vec![1, 0]],          // two entries in one column... column 0
            vec![vec![2, 0], vec![0, 1]],          // entry 2
            vec![vec![0, 0], vec![0, 1]],          // zero column
            vec![vec![1, 1], vec![0, 1]],          // two in a row/col
        ] {
            assert!(
                matches!(SignedPermElement::from_matrix(&m), Err(Error::NotSignedPermutation(_))),
                "{m:?}"
            );
        }
    }

    #[test]
    fn close_d8_and_c4() {
        let d8 = close_group_from_matrices(4, &d8_matrices(), 20000).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.classify(), Classification::PurePermutation);
        assert!(d8.orbits().is_transitive());

        let c4 = close_group_from_matrices(3, &[c4_matrix()], 20000).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.classify(), Classification::Signed);
        let orbits = c4.orbits();
        assert_eq!(orbits.blocks, vec![vec![0, 1], vec![2]]);

        // empty generator list gives the trivial group
        let trivial = close_group(3, &[], 10).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.classify(), Classification::PurePermutation);
        assert_eq!(trivial.orbits().blocks, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let err = close_group_from_matrices(4, &d8_matrices(), 5);
        assert!(matches!(err, Err(Error::ClosureCapExceeded { cap: 5 })));
    }

    #[test]
    fn rho_is_a_homomorphism_with_diagonal_kernel() {
        let c4 = close_group_from_matrices(3, &[c4_matrix()], 20000).unwrap();
        for a in c4.elements() {
            for b in c4.elements() {
                let lhs = a.mul(b);
                assert_eq!(*lhs.rho(), a.rho().compose(b.rho()));
            }
        }
        let kernel: Vec<usize> = (0..c4.order())
            .filter(|&i| c4.element(i).rho().is_identity())
            .collect();
        for &i in &kernel {
            assert!(c4.element(i).rho().is_identity());
        }
        // identity and sigma^2 = diag(-1,-1,1)
        assert_eq!(kernel.len(), 2);
    }

    #[test]
    fn products_match_matrix_products() {
        let d8 = close_group_from_matrices(4, &d8_matrices(), 20000).unwrap();
        for i in 0..d8.order() {
            for j in 0..d8.order() {
                let product = d8.element(i).mul(d8.element(j));
                assert_eq!(product.to_matrix(), matmul(&d8.element(i).to_matrix(), &d8.element(j).to_matrix()));
                assert_eq!(d8.index_of(&product), Some(d8.mul_index(i, j)));
            }
        }
    }

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        out
    }

    #[test]
    fn orbit_stabilizer_counts() {
        let d8 = close_group_from_matrices(4, &d8_matrices(), 20000).unwrap();
        let orbits = d8.orbits();
        for i in 0..4 {
            let stab = d8.stabilizer(i);
            let orbit_len = orbits.blocks[orbits.block_of[i]].len();
            assert_eq!(orbit_len * stab.len(), d8.order());
            // transitive: |stab| = |G| / n
            assert_eq!(stab.len(), d8.order() / 4);
        }
        // the stabilizer of x_1 is {1, s}
        let stab0 = d8.stabilizer(0);
        assert_eq!(stab0.len(), 2);
        assert!(stab0.contains(&0));
        let s = SignedPermElement::from_matrix(&d8_matrices()[1]).unwrap();
        assert!(stab0.contains(&d8.index_of(&s).unwrap()));
    }

    #[test]
    fn c4_coset_cells_match_hand_computation() {
        let c4 = close_group_from_matrices(3, &[c4_matrix()], 20000).unwrap();
        let sigma = SignedPermElement::from_matrix(&c4_matrix()).unwrap();
        let id = c4.index_of(&SignedPermElement::identity(3)).unwrap();
        let s1 = c4.index_of(&sigma).unwrap();
        let s2 = c4.mul_index(s1, s1);
        let s3 = c4.mul_index(s2, s1);
        let table = c4.coset_table();
        assert_eq!(table.plus(0, 0), &[id]);
        assert_eq!(table.minus(0, 0), &[s2]);
        assert_eq!(table.plus(0, 1), &[s1]);
        assert_eq!(table.minus(0, 1), &[s3]);
        assert_eq!(table.plus(2, 2), &[id, s2]);
        assert_eq!(table.minus(2, 2), &[s1, s3]);
        // empty across orbits
        assert!(table.union(0, 2).is_empty());
        assert_eq!(table.union(0, 0), vec![id, s2]);
    }

    #[test]
    fn coset_lists_partition_the_group() {
        let d8 = close_group_from_matrices(4, &d8_matrices(), 20000).unwrap();
        let table = d8.coset_table();
        for i in 0..4 {
            let mut seen = vec![false; d8.order()];
            for j in 0..4 {
                for &e in table.union(i, j).iter() {
                    assert!(!seen[e], "element {e} in two cells of row {i}");
                    seen[e] = true;
                }
            }
            assert!(seen.iter().all(|&b| b), "row {i} does not cover the group");
        }
    }

    #[test]
    fn trivial_group_cosets() {
        let trivial = close_group(2, &[], 10).unwrap();
        let table = trivial.coset_table();
        assert_eq!(table.plus(0, 0), &[0]);
        assert_eq!(table.plus(1, 1), &[0]);
        assert!(table.plus(0, 1).is_empty());
        assert!(table.minus(0, 0).is_empty());
        assert_eq!(trivial.stabilizer(0), vec![0]);
    }
}
