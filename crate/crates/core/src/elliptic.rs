//! Local data of elliptic tropical curves: stratum dimensions, the weights of
//! the relevant moduli space, the ev×j multiplicity of the degenerations a
//! cycle can undergo, and the determinant identity that makes the count
//! independent of the point configuration.

use num::integer::gcd;
use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};
use crate::lattice::{det2, Direction};

/// A stratum of genus-0 or genus-1 curves described by its excess valences
/// and deficiency (2: cycle contracted to a point, 1: flat cycle, 0: other).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombinatorialType {
    degree: u32,
    marked_points: u32,
    genus: u32,
    excess_valences: Vec<u32>,
    deficiency: u32,
}

impl CombinatorialType {
    /// `excess_valences` lists the valences of the vertices that are not
    /// 3-valent; each must be at least 4.
    pub fn new(
        degree: u32,
        marked_points: u32,
        genus: u32,
        mut excess_valences: Vec<u32>,
        deficiency: u32,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidType("degree must be positive".into()));
        }
        if genus > 1 {
            return Err(Error::InvalidType(format!("genus {genus} is not 0 or 1")));
        }
        if deficiency > 2 {
            return Err(Error::InvalidType(format!("deficiency {deficiency} exceeds 2")));
        }
        if deficiency > 0 && genus == 0 {
            return Err(Error::InvalidType("rational curves have deficiency 0".into()));
        }
        if let Some(v) = excess_valences.iter().find(|&&v| v < 4) {
            return Err(Error::InvalidType(format!("excess valence {v} is below 4")));
        }
        excess_valences.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self {
            degree,
            marked_points,
            genus,
            excess_valences,
            deficiency,
        })
    }

    /// All vertices 3-valent.
    pub fn generic(degree: u32, marked_points: u32, genus: u32) -> Result<Self> {
        Self::new(degree, marked_points, genus, Vec::new(), 0)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn marked_points(&self) -> u32 {
        self.marked_points
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn deficiency(&self) -> u32 {
        self.deficiency
    }

    /// Excess valences in decreasing order.
    pub fn excess_valences(&self) -> &[u32] {
        &self.excess_valences
    }

    /// `Σ (val V − 3)`.
    pub fn valence_excess(&self) -> i64 {
        self.excess_valences.iter().map(|&v| v as i64 - 3).sum()
    }
}

/// `3d + n + g − 1 − Σ(val V − 3) + def`. For rational curves this is
/// `3d + n − 1 − Σ(val V − 3)`.
pub fn stratum_dimension(t: &CombinatorialType) -> i64 {
    3 * t.degree as i64 + t.marked_points as i64 + t.genus as i64 - 1 - t.valence_excess() + t.deficiency as i64
}

/// The six kinds of codimension-one strata of elliptic curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Codim1Case {
    /// def 0, one 4-valent vertex.
    A,
    /// def 1, two 4-valent vertices.
    B,
    /// def 1, one 5-valent vertex.
    C,
    /// def 2, three 4-valent vertices.
    D,
    /// def 2, one 5-valent and one 4-valent vertex.
    E,
    /// def 2, one 6-valent vertex.
    F,
    NotCodim1,
}

pub fn codim1_case(t: &CombinatorialType) -> Codim1Case {
    let top = 3 * t.degree as i64 + t.marked_points as i64;
    if t.genus != 1 || stratum_dimension(t) != top - 1 {
        return Codim1Case::NotCodim1;
    }
    match (t.deficiency, t.excess_valences.as_slice()) {
        (0, [4]) => Codim1Case::A,
        (1, [4, 4]) => Codim1Case::B,
        (1, [5]) => Codim1Case::C,
        (2, [4, 4, 4]) => Codim1Case::D,
        (2, [5, 4]) => Codim1Case::E,
        (2, [6]) => Codim1Case::F,
        _ => Codim1Case::NotCodim1,
    }
}

/// A flat cycle: two edges of weights `n` and `m` along the primitive
/// direction `u`, meeting the rest of the curve in direction `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalCycleData {
    u: Direction,
    v: Direction,
    w_n: u32,
    w_m: u32,
    marked_point_on_cycle: bool,
}

impl LocalCycleData {
    pub fn new(u: Direction, v: Direction, w_n: u32, w_m: u32, marked_point_on_cycle: bool) -> Result<Self> {
        if !u.is_primitive() {
            return Err(Error::InvalidCycle(format!("u = ({},{}) is not primitive", u.dx, u.dy)));
        }
        if w_n == 0 || w_m == 0 {
            return Err(Error::InvalidCycle("edge weights must be positive".into()));
        }
        if gcd(w_n, w_m) != 1 {
            return Err(Error::InvalidCycle(format!("weights {w_n} and {w_m} are not coprime")));
        }
        Ok(Self {
            u,
            v,
            w_n,
            w_m,
            marked_point_on_cycle,
        })
    }

    pub fn u(&self) -> Direction {
        self.u
    }

    pub fn v(&self) -> Direction {
        self.v
    }

    pub fn weights(&self) -> (u32, u32) {
        (self.w_n, self.w_m)
    }

    pub fn marked_point_on_cycle(&self) -> bool {
        self.marked_point_on_cycle
    }

    /// Equal weights (necessarily both 1) without a marked point on the
    /// cycle: the two edges are interchangeable.
    fn symmetric(&self) -> bool {
        self.w_n == self.w_m && !self.marked_point_on_cycle
    }
}

fn abs_det(u: Direction, v: Direction) -> BigInt {
    BigInt::from(det2(u, v).abs())
}

fn halve(x: BigInt) -> BigRational {
    BigRational::new(x, BigInt::from(2))
}

/// `|det(u, v)|`, halved when the cycle is symmetric.
pub fn stratum_weight_flat_cycle(c: &LocalCycleData) -> BigRational {
    let d = abs_det(c.u, c.v);
    if c.symmetric() {
        halve(d)
    } else {
        BigRational::from(d)
    }
}

/// `½(|det(u, v)| − 1)`, for a loop contracted at a 5-valent vertex.
pub fn stratum_weight_contracted_loop(u: Direction, v: Direction) -> BigRational {
    halve(abs_det(u, v) - 1)
}

/// `½(mult V − 1) · mult C′`.
pub fn mult_contracted_loop(mult_v: &BigInt, mult_cprime: &BigInt) -> BigRational {
    halve((mult_v - 1) * mult_cprime)
}

/// `|det(u, v)| · mult C′`.
pub fn mult_contracted_edge(u: Direction, v: Direction, mult_cprime: &BigInt) -> BigInt {
    abs_det(u, v) * mult_cprime
}

/// `(m + n)·|det(u, v1)|·mult C′` for distinct weights; `|det(u, v1)|·mult C′`
/// when `n = m = 1`.
pub fn mult_flat_cycle(c: &LocalCycleData, v1: Direction, mult_cprime: &BigInt) -> BigInt {
    let base = abs_det(c.u, v1) * mult_cprime;
    if c.w_n == c.w_m {
        base
    } else {
        base * (c.w_n + c.w_m)
    }
}

/// `|det|` of two adjacent edge directions at a balanced 3-valent vertex,
/// checked to be the same for every pair.
pub fn vertex_multiplicity(e1: Direction, e2: Direction, e3: Direction) -> Result<i64> {
    if !(e1 + e2 + e3).is_zero() {
        return Err(Error::InvalidCycle(
            "edge directions at the vertex are not balanced".into(),
        ));
    }
    let m = det2(e1, e2).abs();
    if det2(e2, e3).abs() != m || det2(e3, e1).abs() != m {
        return Err(Error::Consistency(
            "vertex multiplicity depends on the chosen edges".into(),
        ));
    }
    Ok(m)
}

/// `(|det(v1,v2)| + |det(v1,v3)| + |det(v2,v3)|) · mult C′` for a cycle of
/// three edges with directions `v1, v2, v3` that shrinks to a vertex. The
/// cycle equation `Σ l_i v_i = 0` needs positive lengths, so the directions
/// must positively span the plane; in that case the bracket is the double
/// area of the triangle with vertices `v1, v2, v3`.
pub fn mult_three_edge_cycle(v1: Direction, v2: Direction, v3: Direction, mult_cprime: &BigInt) -> Result<BigInt> {
    let (a, b, c) = (det2(v1, v2), det2(v2, v3), det2(v3, v1));
    let positively_spanning = a != 0 && b != 0 && c != 0 && (a > 0) == (b > 0) && (b > 0) == (c > 0);
    if !positively_spanning {
        return Err(Error::InvalidCycle(format!(
            "({},{}), ({},{}), ({},{}) cannot close up a cycle",
            v1.dx, v1.dy, v2.dx, v2.dy, v3.dx, v3.dy
        )));
    }
    Ok(BigInt::from(a.abs() + b.abs() + c.abs()) * mult_cprime)
}

/// Closed-form determinants of the local blocks of the ev×j matrices of the
/// four types adjacent to a wall (`A1′, A2′, B3′, B4′`) and of the sign
/// matrices `A3′, A4′`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallDeterminants {
    pub a1: BigInt,
    pub a2: BigInt,
    pub b3: BigInt,
    pub b4: BigInt,
    pub a3: BigInt,
    pub a4: BigInt,
}

fn check_weights(n: i64, m: i64) -> Result<()> {
    if n <= 0 || m <= 0 || gcd(n, m) != 1 {
        return Err(Error::InvalidCycle(format!(
            "weights {n}, {m} must be positive and coprime"
        )));
    }
    Ok(())
}

pub fn wall_determinants(u: Direction, v1: Direction, v2: Direction, n: i64, m: i64) -> Result<WallDeterminants> {
    check_weights(n, m)?;
    let a = BigInt::from(det2(u, v1));
    let b = BigInt::from(det2(u, v2));
    let c = BigInt::from(det2(v1, v2));
    let (n, m) = (BigInt::from(n), BigInt::from(m));
    let ab = &a * &b;
    let nm = &n * &m;
    let plus = (&n * &n + &nm) * (&a + &b) + &n * &c;
    let minus = (&m * &m + &nm) * (&a + &b) - &n * &c;
    let a1 = -(&n * (&n + &m) * (&n + &m)) * &ab;
    Ok(WallDeterminants {
        a2: a1.clone(),
        a1,
        b3: -(&ab * &n * &plus),
        b4: &ab * &n * &minus,
        a3: &ab * &n * &n * &plus,
        a4: -(&ab * &n * &n * &minus),
    })
}

/// `det(u,v2)·det A1′ + det(u,v1)·det A2′ − det B3′ + det B4′ = 0`.
pub fn wall_identity_holds(u: Direction, v1: Direction, v2: Direction, n: i64, m: i64) -> Result<bool> {
    let w = wall_determinants(u, v1, v2, n, m)?;
    let lhs = BigInt::from(det2(u, v2)) * &w.a1 + BigInt::from(det2(u, v1)) * &w.a2 - &w.b3 + &w.b4;
    Ok(lhs.is_zero())
}

/// The six local matrices written out entry by entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallMatrices {
    pub a1: Vec<Vec<BigInt>>,
    pub a2: Vec<Vec<BigInt>>,
    pub b3: Vec<Vec<BigInt>>,
    pub b4: Vec<Vec<BigInt>>,
    pub a3: Vec<Vec<BigInt>>,
    pub a4: Vec<Vec<BigInt>>,
}

/// One block column: either the 2×2 identity or a vector in Z².
#[derive(Clone, Copy)]
enum Block {
    Identity,
    Vector(i64, i64),
}

const O: Block = Block::Vector(0, 0);

fn vec_block(d: Direction) -> Block {
    Block::Vector(d.dx, d.dy)
}

/// Stacks block rows (each two matrix rows tall) and a final scalar row.
fn assemble(block_rows: &[Vec<Block>], last: &[i64]) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::new();
    for br in block_rows {
        let (mut top, mut bottom) = (Vec::new(), Vec::new());
        for b in br {
            match *b {
                Block::Identity => {
                    top.extend([1, 0]);
                    bottom.extend([0, 1]);
                }
                Block::Vector(x, y) => {
                    top.push(x);
                    bottom.push(y);
                }
            }
        }
        rows.push(top);
        rows.push(bottom);
    }
    rows.push(last.to_vec());
    rows.into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect()
}

pub fn wall_matrices(u: Direction, v1: Direction, v2: Direction, n: i64, m: i64) -> Result<WallMatrices> {
    check_weights(n, m)?;
    use Block::Identity as E;
    let v = vec_block;
    let nu = v(u.scale(n));
    let nmu = v(u.scale(n * m));
    let sum_u = v(u.scale(n + m));
    let a = det2(u, v1);
    let b = det2(u, v2);
    let c = det2(v1, v2);

    let a1 = assemble(
        &[
            vec![E, O, O, nu, O, sum_u],
            vec![E, v(v1), O, O, O, O],
            vec![E, O, v(v2), O, nmu, sum_u],
        ],
        &[0, 0, 0, 0, 0, n + m, 0],
    );
    let a2 = assemble(
        &[
            vec![E, O, O, nu, O, O],
            vec![E, v(v1), O, O, O, O],
            vec![E, O, v(v2), O, nmu, sum_u],
        ],
        &[0, 0, 0, 0, 0, n + m, 0],
    );

    let mu = v(u.scale(-m));
    let b3 = assemble(
        &[
            vec![E, O, O, nu, O, O, O, O],
            vec![E, v(v1), O, O, O, O, O, O],
            vec![E, O, v(v2), nu, nu, O, O, O],
            vec![O, O, O, O, nu, nu, mu, v(v1 + u.scale(n)), v(-v2 + u.scale(n))],
        ],
        &[0, 0, 0, 0, 1, 1, 1, 1, 1],
    );
    let w1 = v(-v1 + u.scale(-m));
    let w2 = v(v2 + u.scale(-m));
    let b4 = assemble(
        &[
            vec![E, O, O, nu, O, O, w1, O],
            vec![E, v(v1), O, O, O, O, O, O],
            vec![E, O, v(v2), nu, nu, O, w1, w2],
            vec![O, O, O, O, nu, nu, mu, w1, w2],
        ],
        &[0, 0, 0, 0, 1, 1, 1, 1, 1],
    );

    let m1 = -c + n * det2(v1, u) - n * b;
    let m2 = -n * b;
    let m3 = n * a;
    let m1p = -c - m * a - m * b;
    let last3 = (-v1 + u.scale(-n)).scale(-m2) + (v2 + u.scale(-n)).scale(m3);
    let a3 = assemble(
        &[
            vec![E, O, O, nu, O, O],
            vec![E, v(v1), O, O, O, O],
            vec![E, O, v(v2), O, nmu, v(last3)],
        ],
        &[0, 0, 0, 0, 0, n + m, m1 - m2 + m3],
    );
    let a4 = assemble(
        &[
            vec![E, O, O, nu, O, v((-v1 + u.scale(-m)).scale(m2))],
            vec![E, v(v1), O, O, O, O],
            vec![E, O, v(v2), O, nmu, O],
        ],
        &[0, 0, 0, 0, 0, n + m, m1p + m2 - m3],
    );
    Ok(WallMatrices { a1, a2, b3, b4, a3, a4 })
}

/// Exact determinant of a square integer matrix by fraction-free
/// (Bareiss) elimination.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::Contract("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Determinants of the written-out matrices, for comparison with
/// [`wall_determinants`].
pub fn wall_determinants_by_elimination(
    u: Direction,
    v1: Direction,
    v2: Direction,
    n: i64,
    m: i64,
) -> Result<WallDeterminants> {
    let w = wall_matrices(u, v1, v2, n, m)?;
    Ok(WallDeterminants {
        a1: bareiss_determinant(&w.a1)?,
        a2: bareiss_determinant(&w.a2)?,
        b3: bareiss_determinant(&w.b3)?,
        b4: bareiss_determinant(&w.b4)?,
        a3: bareiss_determinant(&w.a3)?,
        a4: bareiss_determinant(&w.a4)?,
    })
}
