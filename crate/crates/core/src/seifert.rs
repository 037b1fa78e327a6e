//! Seifert matrices of knots and block Seifert systems of boundary links.
//!
//! An r-component boundary link carries a connected Seifert surface obtained
//! by tubing the r disjoint surfaces together. In a basis of r−1 tube
//! meridians followed by a symplectic family, the Seifert matrix takes the
//! block form
//!
//! ```text
//!     N = | 0_(r-1)  0 |
//!         | 0        V |
//! ```
//!
//! with det(V − Vᵀ) = 1, because tube meridians link themselves and all
//! other curves trivially. Banding the components into a knot K_L keeps V as
//! a Seifert matrix, which is what `internal_band_sum` extracts.

use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::int_det;

/// A Seifert matrix of a knot: even size 2g with unimodular intersection
/// form V − Vᵀ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnotSeifert {
    v: Vec<Vec<i64>>,
    genus: usize,
}

impl KnotSeifert {
    /// Validates a square integer matrix as a knot Seifert matrix.
    pub fn new(v: Vec<Vec<i64>>) -> Result<Self> {
        let n = v.len();
        for (i, row) in v.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        if !n.is_multiple_of(2) {
            return Err(Error::OddSize(n));
        }
        let skew: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| v[i][j] - v[j][i]).collect())
            .collect();
        let d = int_det(&skew);
        if !d.is_one() {
            return Err(Error::NotUnimodularIntersection(d.to_string()));
        }
        Ok(Self { v, genus: n / 2 })
    }

    /// The unknot: empty Seifert matrix of genus 0.
    pub fn unknot() -> Self {
        Self { v: Vec::new(), genus: 0 }
    }

    /// The right-handed trefoil on its genus-1 surface.
    pub fn trefoil() -> Self {
        Self::new(vec![vec![-1, 1], vec![0, -1]]).expect("valid by construction")
    }

    /// The figure-eight knot on its genus-1 surface.
    pub fn figure_eight() -> Self {
        Self::new(vec![vec![1, 1], vec![0, -1]]).expect("valid by construction")
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.v
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn size(&self) -> usize {
        2 * self.genus
    }
}

/// Validates a square integer matrix as a knot Seifert matrix.
pub fn validate_knot_seifert(v: Vec<Vec<i64>>) -> Result<KnotSeifert> {
    KnotSeifert::new(v)
}

/// The block Seifert system of an r-component boundary link: r−1 zero tube
/// rows and columns followed by a knot Seifert block V.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundarySeifertSystem {
    r: usize,
    genus: usize,
    n: Vec<Vec<i64>>,
}

impl BoundarySeifertSystem {
    /// Validates the block pattern and the V block of an r-component
    /// system.
    pub fn new(n: Vec<Vec<i64>>, r: usize) -> Result<Self> {
        if r < 1 {
            return Err(Error::SizeMismatch("component count r must be >= 1".into()));
        }
        let size = n.len();
        for (i, row) in n.iter().enumerate() {
            if row.len() != size {
                return Err(Error::SizeMismatch(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
        }
        if size + 1 < r {
            return Err(Error::SizeMismatch(format!(
                "size {size} is too small for r = {r}"
            )));
        }
        let tubes = r - 1;
        for i in 0..size {
            for j in 0..size {
                if (i < tubes || j < tubes) && n[i][j] != 0 {
                    return Err(Error::BadBlockPattern { row: i, col: j });
                }
            }
        }
        let v: Vec<Vec<i64>> = (tubes..size)
            .map(|i| (tubes..size).map(|j| n[i][j]).collect())
            .collect();
        let knot = KnotSeifert::new(v)?;
        Ok(Self {
            r,
            genus: knot.genus(),
            n,
        })
    }

    /// Assembles the system 0_(r−1) ⊕ V from a knot block.
    pub fn from_knot_block(knot: &KnotSeifert, r: usize) -> Result<Self> {
        if r < 1 {
            return Err(Error::SizeMismatch("component count r must be >= 1".into()));
        }
        let tubes = r - 1;
        let size = tubes + knot.size();
        let mut n = vec![vec![0i64; size]; size];
        for i in 0..knot.size() {
            for j in 0..knot.size() {
                n[tubes + i][tubes + j] = knot.matrix()[i][j];
            }
        }
        Ok(Self {
            r,
            genus: knot.genus(),
            n,
        })
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.n
    }

    pub fn components(&self) -> usize {
        self.r
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn size(&self) -> usize {
        self.r - 1 + 2 * self.genus
    }
}

/// Validates a square integer matrix as an r-component boundary system.
pub fn validate_boundary_system(n: Vec<Vec<i64>>, r: usize) -> Result<BoundarySeifertSystem> {
    BoundarySeifertSystem::new(n, r)
}

/// Bands the link components into a knot K_L: the Seifert matrix of K_L is
/// exactly the V block, so the tube rows are dropped.
pub fn internal_band_sum(system: &BoundarySeifertSystem) -> KnotSeifert {
    let tubes = system.r - 1;
    let size = system.size();
    let v: Vec<Vec<i64>> = (tubes..size)
        .map(|i| (tubes..size).map(|j| system.n[i][j]).collect())
        .collect();
    KnotSeifert::new(v).expect("V block of a valid system is a valid Seifert matrix")
}

fn check_clasp(a: i64) -> Result<i64> {
    if a == 1 || a == -1 {
        Ok(a)
    } else {
        Err(Error::BadClaspSign(a))
    }
}

/// The 2-component Whitehead double with linking number n and clasp signs
/// a₁, a₂: a boundary system whose banded knot has the 4x4 Seifert matrix
///
/// ```text
///     | 0  a1  n  n |
///     | 0  0   n  n |
///     | n  n   0  a2|
///     | n  n   0  0 |
/// ```
pub fn whitehead_double_2(n: i64, a1: i64, a2: i64) -> Result<BoundarySeifertSystem> {
    let a1 = check_clasp(a1)?;
    let a2 = check_clasp(a2)?;
    let v = vec![
        vec![0, a1, n, n],
        vec![0, 0, n, n],
        vec![n, n, 0, a2],
        vec![n, n, 0, 0],
    ];
    BoundarySeifertSystem::from_knot_block(&KnotSeifert::new(v)?, 2)
}

/// The 3-component Whitehead double with pairwise linking numbers
/// n₁ = lk(L₂,L₃), n₂ = lk(L₁,L₃), n₃ = lk(L₁,L₂) and clasp signs aᵢ.
pub fn whitehead_double_3(
    n: [i64; 3],
    a: [i64; 3],
) -> Result<BoundarySeifertSystem> {
    for sign in a {
        check_clasp(sign)?;
    }
    let [n1, n2, n3] = n;
    let [a1, a2, a3] = a;
    let v = vec![
        vec![0, a1, n3, n3, n2, n2],
        vec![0, 0, n3, n3, n2, n2],
        vec![n3, n3, 0, a2, n1, n1],
        vec![n3, n3, 0, 0, n1, n1],
        vec![n2, n2, n1, n1, 0, a3],
        vec![n2, n2, n1, n1, 0, 0],
    ];
    BoundarySeifertSystem::from_knot_block(&KnotSeifert::new(v)?, 3)
}

/// Orientations of the p+n parallel copies: p entries +1 followed by n
/// entries −1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientationVector {
    signs: Vec<i8>,
}

impl OrientationVector {
    pub fn from_counts(p: usize, n: usize) -> Self {
        let mut signs = vec![1i8; p];
        signs.extend(std::iter::repeat_n(-1i8, n));
        Self { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Algebraic winding w = p − n.
    pub fn winding(&self) -> i64 {
        self.signs.iter().map(|&s| i64::from(s)).sum()
    }
}

/// The boundary system of P_{p,n}(K): p+n zero-framed parallel copies of K,
/// p coherently and n reversely oriented.
///
/// Block convention (frozen after passing the unimodularity and cable-
/// formula oracles): ordering the copies along the push-off direction with
/// basis curves oriented by εᵢ, the diagonal block of copy i is V when
/// εᵢ = +1 and Vᵀ otherwise, block (i,j) for i < j is εᵢεⱼV, and block
/// (j,i) is εᵢεⱼVᵀ.
pub fn parallel_link(knot: &KnotSeifert, p: usize, n: usize) -> Result<BoundarySeifertSystem> {
    if p + n == 0 {
        return Err(Error::EmptyLink);
    }
    let orientation = OrientationVector::from_counts(p, n);
    let copies = orientation.len();
    let g2 = knot.size();
    let big = copies * g2;
    let mut v = vec![vec![0i64; big]; big];
    for ci in 0..copies {
        for cj in 0..copies {
            let eps = i64::from(orientation.signs()[ci]) * i64::from(orientation.signs()[cj]);
            for a in 0..g2 {
                for b in 0..g2 {
                    let value = if ci == cj {
                        if orientation.signs()[ci] == 1 {
                            knot.matrix()[a][b]
                        } else {
                            knot.matrix()[b][a]
                        }
                    } else if ci < cj {
                        eps * knot.matrix()[a][b]
                    } else {
                        eps * knot.matrix()[b][a]
                    };
                    v[ci * g2 + a][cj * g2 + b] = value;
                }
            }
        }
    }
    BoundarySeifertSystem::from_knot_block(&KnotSeifert::new(v)?, copies)
}

/// Deterministic random Seifert matrix: V = W + J₋ with W symmetric and J₋
/// the strictly lower triangle of the standard symplectic form, so that
/// V − Vᵀ = J holds by construction.
pub fn random_seifert(g: usize, coeff_bound: i64, seed: u64) -> KnotSeifert {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * g;
    let mut v = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let w = rng.gen_range(-coeff_bound..=coeff_bound);
            v[i][j] = w;
            if j < i {
                v[j][i] = w;
            }
        }
    }
    for b in 0..g {
        v[2 * b + 1][2 * b] -= 1;
    }
    KnotSeifert::new(v).expect("V - V^T is the standard symplectic form")
}

/// Deterministic random boundary system 0_(r−1) ⊕ random_seifert(g).
pub fn random_boundary_system(r: usize, g: usize, coeff_bound: i64, seed: u64) -> BoundarySeifertSystem {
    let knot = random_seifert(g, coeff_bound, seed);
    BoundarySeifertSystem::from_knot_block(&knot, r).expect("r >= 1")
}
