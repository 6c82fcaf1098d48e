//! The triangular grid `T_k` with hexagonal border, in cubic coordinates.
//!
//! A vertex is a triple `(x, y, z)` with every component in `0..=2k-2` and
//! `x - y + z = k - 1`. Two vertices are adjacent when their coordinates are
//! at L1 distance 2. Vertices are indexed in `(x, y)` lexicographic order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Offsets to the six neighbours of an inner vertex.
pub const NEIGHBOR_OFFSETS: [(i32, i32, i32); 6] =
    [(0, 1, 1), (-1, 0, 1), (-1, -1, 0), (0, -1, -1), (1, 0, -1), (1, 1, 0)];

/// One of the three coordinate axes, numbered 1, 2, 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    One,
    Two,
    Three,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::One, Axis::Two, Axis::Three];

    pub fn from_number(j: u8) -> Option<Axis> {
        match j {
            1 => Some(Axis::One),
            2 => Some(Axis::Two),
            3 => Some(Axis::Three),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Axis::One => 1,
            Axis::Two => 2,
            Axis::Three => 3,
        }
    }

    /// Cyclic successor: 1 -> 2 -> 3 -> 1.
    pub fn next(self) -> Axis {
        match self {
            Axis::One => Axis::Two,
            Axis::Two => Axis::Three,
            Axis::Three => Axis::One,
        }
    }

    fn slot(self) -> usize {
        self.number() as usize - 1
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i32; 3]", into = "[i32; 3]")]
pub struct CubicCoord {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl CubicCoord {
    pub const fn new(x: i32, y: i32, z: i32) -> Self {
        Self { x, y, z }
    }

    pub fn get(&self, axis: Axis) -> i32 {
        match axis {
            Axis::One => self.x,
            Axis::Two => self.y,
            Axis::Three => self.z,
        }
    }

    /// Whether this triple is a vertex of `T_k`.
    pub fn is_valid_for(&self, k: usize) -> bool {
        let max = 2 * k as i32 - 2;
        k >= 1
            && [self.x, self.y, self.z].iter().all(|c| (0..=max).contains(c))
            && self.x - self.y + self.z == k as i32 - 1
    }

    pub fn l1_distance(&self, other: &CubicCoord) -> i32 {
        (self.x - other.x).abs() + (self.y - other.y).abs() + (self.z - other.z).abs()
    }

    pub fn offset(&self, (dx, dy, dz): (i32, i32, i32)) -> CubicCoord {
        CubicCoord::new(self.x + dx, self.y + dy, self.z + dz)
    }

    /// Contribution of this vertex to the global weight of a set: `x + 2y + 2z`.
    pub fn weight(&self) -> u64 {
        (self.x + 2 * self.y + 2 * self.z) as u64
    }
}

impl From<[i32; 3]> for CubicCoord {
    fn from([x, y, z]: [i32; 3]) -> Self {
        CubicCoord::new(x, y, z)
    }
}

impl From<CubicCoord> for [i32; 3] {
    fn from(c: CubicCoord) -> Self {
        [c.x, c.y, c.z]
    }
}

impl fmt::Display for CubicCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// The graph `T_k`, fully materialised.
#[derive(Clone, Debug)]
pub struct TriGrid {
    k: usize,
    vertices: Vec<CubicCoord>,
    // dense (x, y) -> index table, u32::MAX where no vertex exists
    index_table: Vec<u32>,
    adjacency: Vec<Vec<usize>>,
    // lines[axis][value], each sorted by the successor-axis coordinate
    lines: [Vec<Vec<usize>>; 3],
}

impl TriGrid {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSideLength(0));
        }
        let span = 2 * k - 1;
        let mut vertices = Vec::with_capacity(3 * k * k - 3 * k + 1);
        let mut index_table = vec![u32::MAX; span * span];
        for x in 0..span as i32 {
            for y in 0..span as i32 {
                let z = k as i32 - 1 - x + y;
                let c = CubicCoord::new(x, y, z);
                if c.is_valid_for(k) {
                    index_table[x as usize * span + y as usize] = vertices.len() as u32;
                    vertices.push(c);
                }
            }
        }

        let mut grid = TriGrid {
            k,
            vertices,
            index_table,
            adjacency: Vec::new(),
            lines: [Vec::new(), Vec::new(), Vec::new()],
        };

        grid.adjacency = grid
            .vertices
            .iter()
            .map(|c| {
                let mut nbrs: Vec<usize> = NEIGHBOR_OFFSETS
                    .iter()
                    .filter_map(|&o| grid.index_of(&c.offset(o)))
                    .collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();

        for axis in Axis::ALL {
            let mut lines = vec![Vec::new(); span];
            for (v, c) in grid.vertices.iter().enumerate() {
                lines[c.get(axis) as usize].push(v);
            }
            let next = axis.next();
            for line in lines.iter_mut() {
                line.sort_by_key(|&v| grid.vertices[v].get(next));
            }
            grid.lines[axis.slot()] = lines;
        }

        Ok(grid)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Largest coordinate value, `2k - 2`.
    pub fn max_coord(&self) -> i32 {
        2 * self.k as i32 - 2
    }

    pub fn vertices(&self) -> &[CubicCoord] {
        &self.vertices
    }

    pub fn coord(&self, v: usize) -> CubicCoord {
        self.vertices[v]
    }

    pub fn index_of(&self, c: &CubicCoord) -> Option<usize> {
        if !c.is_valid_for(self.k) {
            return None;
        }
        let span = 2 * self.k - 1;
        match self.index_table[c.x as usize * span + c.y as usize] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    pub fn require_index(&self, c: &CubicCoord) -> Result<usize> {
        self.index_of(c)
            .ok_or(Error::NotAVertex(c.x as i64, c.y as i64, c.z as i64))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                len: self.len(),
            })
        }
    }

    /// Neighbours of `v` in ascending index order.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    /// Unchecked neighbour access for hot loops.
    #[inline]
    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.vertices[u].l1_distance(&self.vertices[v]) == 2
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Vertices of the line `l_{v_j = i}`, ordered by the successor-axis coordinate.
    pub fn line_members(&self, axis: Axis, i: i32) -> Result<&[usize]> {
        if i < 0 || i > self.max_coord() {
            return Err(Error::LineOutOfRange {
                axis,
                value: i as i64,
                max: self.max_coord() as i64,
            });
        }
        Ok(&self.lines[axis.slot()][i as usize])
    }

    /// The line `l_{v_j = i}` as a vertex set.
    pub fn line(&self, axis: Axis, i: i32) -> Result<VertexSet> {
        let members = self.line_members(axis, i)?;
        Ok(VertexSet::from_indices(self.len(), members.iter().copied()))
    }

    pub fn lines(&self, axis: Axis) -> &[Vec<usize>] {
        &self.lines[axis.slot()]
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.len())
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn set_from_coords<'a, I>(&self, coords: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = &'a CubicCoord>,
    {
        let mut set = self.empty_set();
        for c in coords {
            set.insert(self.require_index(c)?);
        }
        Ok(set)
    }

    pub fn coords_of(&self, set: &VertexSet) -> Vec<CubicCoord> {
        set.iter().map(|v| self.vertices[v]).collect()
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() == self.len() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                expected: self.len(),
                found: set.universe(),
            })
        }
    }
}

/// `3k^2 - 3k + 1`.
pub fn vertex_count(k: usize) -> usize {
    3 * k * k - 3 * k + 1
}
