use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::steps::StepSequence;

use super::{is_column_step, is_lambda_increasing, LatticePath};

/// Column-by-column description of a path.
///
/// In column `i` the path arrives at height `h(i)` (the start `(0, d)` for
/// column 0), drops vertically by the entries of `drops(i)` in path order, and
/// leaves to column `i + 1` from height `bottom(i) = h(i) − Iα^i`. `α^i` is the
/// multiset of the drops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnProfile {
    degree: u32,
    drops: Vec<Vec<u32>>,
    entry: Vec<u32>,
}

impl ColumnProfile {
    pub fn new(degree: u32, entry: Vec<u32>, drops: Vec<Vec<u32>>) -> Result<Self> {
        let d = degree as usize;
        if entry.len() != d + 1 || drops.len() != d + 1 {
            return Err(Error::InvalidProfile(format!(
                "expected {} columns, got {} heights and {} drop lists",
                d + 1,
                entry.len(),
                drops.len()
            )));
        }
        if entry[0] != degree {
            return Err(Error::InvalidProfile("column 0 must be entered at height d".into()));
        }
        for i in 0..=d {
            if entry[i] as usize > d - i {
                return Err(Error::InvalidProfile(format!("h({i}) = {} leaves Δ_{d}", entry[i])));
            }
            let fall: u64 = drops[i].iter().map(|&k| k as u64).sum();
            if drops[i].contains(&0) || fall > entry[i] as u64 {
                return Err(Error::InvalidProfile(format!(
                    "drops {:?} in column {i} are invalid",
                    drops[i]
                )));
            }
        }
        if entry[d] != 0 {
            return Err(Error::InvalidProfile("last column must be entered at height 0".into()));
        }
        Ok(Self { degree, drops, entry })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `α^i` for `i` in `0..=d`.
    pub fn alpha(&self, i: usize) -> StepSequence {
        StepSequence::from_sizes(self.drops[i].iter().copied())
    }

    pub fn alphas(&self) -> Vec<StepSequence> {
        (0..=self.degree as usize).map(|i| self.alpha(i)).collect()
    }

    /// Drops in column `i`, in the order the path takes them.
    pub fn drops(&self, i: usize) -> &[u32] {
        &self.drops[i]
    }

    /// Height at which the path enters column `i`.
    pub fn h(&self, i: usize) -> u32 {
        self.entry[i]
    }

    pub fn heights(&self) -> &[u32] {
        &self.entry
    }

    /// Height at which the path leaves column `i`.
    pub fn bottom(&self, i: usize) -> u32 {
        self.entry[i] - self.drops[i].iter().sum::<u32>()
    }

    /// `d − i − h(i)`: free length above the path in column `i`.
    pub fn top_gap(&self, i: usize) -> u32 {
        self.degree - i as u32 - self.entry[i]
    }

    pub fn has_big_step(&self) -> bool {
        self.drops.iter().flatten().any(|&k| k >= 2)
    }
}

pub fn column_profile(path: &LatticePath) -> Result<ColumnProfile> {
    if !is_lambda_increasing(path) {
        return Err(Error::InvalidPath(format!("{path} is not λ-increasing")));
    }
    let d = path.degree() as usize;
    let mut entry = vec![0u32; d + 1];
    let mut drops = vec![Vec::new(); d + 1];
    entry[0] = path.degree();
    for (p, q) in path.steps() {
        if !is_column_step(p, q) {
            return Err(Error::InvalidPath(format!("step {p}->{q} skips a column")));
        }
        if q.x == p.x {
            drops[p.x as usize].push((p.y - q.y) as u32);
        } else {
            entry[q.x as usize] = q.y as u32;
        }
    }
    ColumnProfile::new(path.degree(), entry, drops)
}

pub fn profile_to_path(profile: &ColumnProfile) -> LatticePath {
    let d = profile.degree() as usize;
    let mut points = Vec::new();
    for i in 0..=d {
        let mut y = profile.h(i) as i64;
        points.push(LatticePoint::new(i as i64, y));
        for &k in profile.drops(i) {
            y -= k as i64;
            points.push(LatticePoint::new(i as i64, y));
        }
    }
    LatticePath::new(profile.degree(), points)
}
