//! Vertices, subsets and real-valued functions on the discrete cube {0,1}^n,
//! together with edge boundaries, the Dirichlet form and coordinate shifts.

use crate::error::{Error, Result};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Default hard cap on the dimension; 2^n dense arrays must fit in memory.
pub const DEFAULT_MAX_DIM: u32 = 24;

/// Dimension of the ambient cube.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CubeDim {
    n: u32,
}

impl CubeDim {
    pub fn new(n: u32) -> Result<Self> {
        Self::with_cap(n, DEFAULT_MAX_DIM)
    }

    /// Construct with an explicit cap instead of [`DEFAULT_MAX_DIM`].
    pub fn with_cap(n: u32, cap: u32) -> Result<Self> {
        if n < 1 || n > cap {
            return Err(Error::DimensionOutOfRange { n, cap });
        }
        Ok(CubeDim { n })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// 2^n.
    #[inline]
    pub fn vertex_count(&self) -> usize {
        1usize << self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.vertex_count()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { index: v, n: self.n })
        }
    }
}

/// The n neighbors of `v`: one coordinate flip each.
pub fn neighbors(v: usize, dim: CubeDim) -> impl Iterator<Item = usize> {
    (0..dim.n()).map(move |i| v ^ (1usize << i))
}

/// Coordinatewise partial order: x ⪯ y iff x_i ≤ y_i for all i.
#[inline]
pub fn below(x: usize, y: usize) -> bool {
    x | y == y
}

/// A subset of {0,1}^n stored as a bitmask over the 2^n vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    dim: CubeDim,
    words: Vec<u64>,
    len: usize,
}

fn word_count(dim: CubeDim) -> usize {
    dim.vertex_count().div_ceil(64)
}

impl VertexSet {
    pub fn empty(dim: CubeDim) -> Self {
        VertexSet {
            dim,
            words: vec![0; word_count(dim)],
            len: 0,
        }
    }

    pub fn full(dim: CubeDim) -> Self {
        let mut s = Self::empty(dim);
        for v in dim.vertices() {
            s.insert(v);
        }
        s
    }

    pub fn from_indices(dim: CubeDim, indices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(dim);
        for &v in indices {
            dim.check_vertex(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    /// Uniformly random subset of the given cardinality.
    pub fn random(dim: CubeDim, size: usize, seed: u64) -> Result<Self> {
        if size > dim.vertex_count() {
            return Err(Error::Parameter(format!(
                "size {} exceeds 2^{}",
                size,
                dim.n()
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let picks = sample(&mut rng, dim.vertex_count(), size);
        let mut s = Self::empty(dim);
        for v in picks {
            s.insert(v);
        }
        Ok(s)
    }

    #[inline]
    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.len == self.dim.vertex_count()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        (self.words[v >> 6] >> (v & 63)) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let w = &mut self.words[v >> 6];
        let bit = 1u64 << (v & 63);
        if *w & bit == 0 {
            *w |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let w = &mut self.words[v >> 6];
        let bit = 1u64 << (v & 63);
        if *w & bit != 0 {
            *w &= !bit;
            self.len -= 1;
            true
        } else {
            false
        }
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for v in self.dim.vertices() {
            if self.contains(v) {
                s.remove(v);
            } else {
                s.insert(v);
            }
        }
        s
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let dim = self.dim;
        dim.vertices().filter(move |&v| self.contains(v))
    }

    /// The member with the given rank in ascending order.
    pub fn nth(&self, rank: usize) -> Option<usize> {
        if rank >= self.len {
            return None;
        }
        let mut remaining = rank as u32;
        for (wi, &w) in self.words.iter().enumerate() {
            let pop = w.count_ones();
            if remaining < pop {
                // select the `remaining`-th set bit of w
                let mut word = w;
                for _ in 0..remaining {
                    word &= word - 1;
                }
                return Some((wi << 6) + word.trailing_zeros() as usize);
            }
            remaining -= pop;
        }
        None
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Bitmask as a lowercase hex string (vertex i = bit i of the integer).
    pub fn to_hex(&self) -> String {
        let mut out = String::new();
        let mut leading = true;
        for &w in self.words.iter().rev() {
            if leading {
                if w == 0 {
                    continue;
                }
                out.push_str(&format!("{:x}", w));
                leading = false;
            } else {
                out.push_str(&format!("{:016x}", w));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn from_hex(dim: CubeDim, hex: &str) -> Result<Self> {
        let mut s = Self::empty(dim);
        let nbits = dim.vertex_count();
        for (pos, c) in hex.chars().rev().enumerate() {
            let digit = c.to_digit(16).ok_or_else(|| Error::Parse {
                position: hex.len() - 1 - pos,
                message: format!("invalid hex digit '{}'", c),
            })? as usize;
            for b in 0..4 {
                if digit & (1 << b) != 0 {
                    let v = pos * 4 + b;
                    if v >= nbits {
                        return Err(Error::VertexOutOfRange { index: v, n: dim.n() });
                    }
                    s.insert(v);
                }
            }
        }
        Ok(s)
    }

    pub fn indicator(&self) -> CubeFunction {
        let mut values = vec![0.0; self.dim.vertex_count()];
        for v in self.iter() {
            values[v] = 1.0;
        }
        CubeFunction {
            dim: self.dim,
            values,
        }
    }
}

/// Subcube with the given free coordinates; every other coordinate must be
/// assigned a fixed bit.
pub fn make_subcube(dim: CubeDim, free: &[u32], fixed: &[(u32, bool)]) -> Result<VertexSet> {
    let n = dim.n();
    let mut seen = vec![false; n as usize];
    let mut base = 0usize;
    for &(i, b) in fixed {
        if i >= n {
            return Err(Error::BadSubcubeSpec(format!("coordinate {} out of range", i)));
        }
        if seen[i as usize] {
            return Err(Error::BadSubcubeSpec(format!("coordinate {} assigned twice", i)));
        }
        seen[i as usize] = true;
        if b {
            base |= 1usize << i;
        }
    }
    let mut free_bits = Vec::with_capacity(free.len());
    for &i in free {
        if i >= n {
            return Err(Error::BadSubcubeSpec(format!("coordinate {} out of range", i)));
        }
        if seen[i as usize] {
            return Err(Error::BadSubcubeSpec(format!(
                "coordinate {} both free and fixed",
                i
            )));
        }
        seen[i as usize] = true;
        free_bits.push(i);
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::BadSubcubeSpec(format!(
            "coordinate {} neither free nor fixed",
            missing
        )));
    }
    let d = free_bits.len();
    let mut s = VertexSet::empty(dim);
    for pattern in 0..(1usize << d) {
        let mut v = base;
        for (j, &i) in free_bits.iter().enumerate() {
            if pattern & (1 << j) != 0 {
                v |= 1usize << i;
            }
        }
        s.insert(v);
    }
    Ok(s)
}

/// The canonical d-subcube: coordinates 0..d free, the rest fixed to 0.
pub fn low_subcube(dim: CubeDim, d: u32) -> Result<VertexSet> {
    let free: Vec<u32> = (0..d).collect();
    let fixed: Vec<(u32, bool)> = (d..dim.n()).map(|i| (i, false)).collect();
    make_subcube(dim, &free, &fixed)
}

/// Hamming ball of the given radius around `center`.
pub fn make_ball(dim: CubeDim, center: usize, radius: u32) -> Result<VertexSet> {
    dim.check_vertex(center)?;
    if radius > dim.n() {
        return Err(Error::RadiusOutOfRange { radius, n: dim.n() });
    }
    let mut s = VertexSet::empty(dim);
    for v in dim.vertices() {
        if ((v ^ center).count_ones()) <= radius {
            s.insert(v);
        }
    }
    Ok(s)
}

/// Number of cube edges with exactly one endpoint in `a`.
pub fn edge_boundary(a: &VertexSet) -> u64 {
    let dim = a.dim();
    let mut count = 0u64;
    for v in a.iter() {
        for u in neighbors(v, dim) {
            if !a.contains(u) {
                count += 1;
            }
        }
    }
    count
}

/// Degree of `v` within the subgraph induced by `a`.
pub fn internal_degree(a: &VertexSet, v: usize) -> u32 {
    neighbors(v, a.dim()).filter(|&u| a.contains(u)).count() as u32
}

/// A real-valued function on {0,1}^n, stored densely.
#[derive(Clone, PartialEq, Debug)]
pub struct CubeFunction {
    dim: CubeDim,
    values: Vec<f64>,
}

impl CubeFunction {
    pub fn new(dim: CubeDim, values: Vec<f64>) -> Result<Self> {
        if values.len() != dim.vertex_count() {
            return Err(Error::Parameter(format!(
                "function needs {} values, got {}",
                dim.vertex_count(),
                values.len()
            )));
        }
        Ok(CubeFunction { dim, values })
    }

    pub fn zero(dim: CubeDim) -> Self {
        CubeFunction {
            dim,
            values: vec![0.0; dim.vertex_count()],
        }
    }

    #[inline]
    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    #[inline]
    pub fn value(&self, v: usize) -> f64 {
        self.values[v]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.dim);
        for v in self.dim.vertices() {
            if self.values[v] != 0.0 {
                s.insert(v);
            }
        }
        s
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_abs(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// Multiset of values, sorted; useful for shift-invariance checks.
    pub fn sorted_values(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }
}

/// Dirichlet form E(g,g) = E_x sum_{y~x} (g(x)-g(y))^2 under the uniform
/// measure; every ordered adjacent pair contributes once.
pub fn dirichlet_form(g: &CubeFunction) -> f64 {
    let dim = g.dim();
    let mut total = 0.0;
    for x in dim.vertices() {
        let gx = g.value(x);
        for y in neighbors(x, dim) {
            let d = gx - g.value(y);
            total += d * d;
        }
    }
    total / dim.vertex_count() as f64
}

/// Downward shift in direction `i`: on each edge in direction i the larger
/// value moves to the 0-side.
pub fn shift_direction(g: &CubeFunction, i: u32) -> Result<CubeFunction> {
    let dim = g.dim();
    if i >= dim.n() {
        return Err(Error::Parameter(format!(
            "direction {} out of range for n={}",
            i,
            dim.n()
        )));
    }
    let bit = 1usize << i;
    let mut values = g.values().to_vec();
    for x in dim.vertices() {
        if x & bit == 0 {
            let y = x | bit;
            let (a, b) = (values[x], values[y]);
            values[x] = a.max(b);
            values[y] = a.min(b);
        }
    }
    Ok(CubeFunction { dim, values })
}

/// Shift in every direction in ascending order; the result is downward
/// monotone.
pub fn monotonize(g: &CubeFunction) -> CubeFunction {
    let mut out = g.clone();
    for i in 0..g.dim().n() {
        out = shift_direction(&out, i).expect("direction in range");
    }
    out
}

/// True iff g(x) >= g(y) whenever x ⪯ y. Covering pairs suffice.
pub fn is_downward_monotone(g: &CubeFunction) -> bool {
    let dim = g.dim();
    for y in dim.vertices() {
        let gy = g.value(y);
        let mut bits = y;
        while bits != 0 {
            let bit = bits & bits.wrapping_neg();
            if g.value(y ^ bit) < gy {
                return false;
            }
            bits ^= bit;
        }
    }
    true
}
