//! Quivers and paths.
//!
//! Vertices and arrows are addressed by dense indices in declaration order;
//! names only matter when reading or printing. Every arrow reference carries
//! its own endpoints, so paths can be split and concatenated without going
//! back to the quiver.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// An arrow together with its endpoints.
///
/// Ordering and equality are determined by `index` alone within a quiver, since
/// the endpoints are a function of the index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowRef {
    pub index: u32,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver `(Q0, Q1, s, t)`.
///
/// Declaration order is precedence: vertices come before arrows, and within
/// each group earlier declarations are smaller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(arrow, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Quiver> {
        let mut quiver = Quiver {
            vertices: Vec::with_capacity(vertices.len()),
            arrows: Vec::with_capacity(arrows.len()),
        };
        for v in vertices {
            quiver.add_vertex(v.as_ref())?;
        }
        for (name, src, dst) in arrows {
            let source = quiver.vertex(src.as_ref()).ok_or_else(|| {
                Error::InvalidQuiver(format!("unknown vertex `{}`", src.as_ref()))
            })?;
            let target = quiver.vertex(dst.as_ref()).ok_or_else(|| {
                Error::InvalidQuiver(format!("unknown vertex `{}`", dst.as_ref()))
            })?;
            quiver.add_arrow(name.as_ref(), source, target)?;
        }
        Ok(quiver)
    }

    pub fn empty() -> Quiver {
        Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.name_taken(name) {
            return Err(Error::InvalidQuiver(format!("duplicate name `{name}`")));
        }
        self.vertices.push(name.to_string());
        Ok(VertexId(self.vertices.len() as u32 - 1))
    }

    pub fn add_arrow(
        &mut self,
        name: &str,
        source: VertexId,
        target: VertexId,
    ) -> Result<ArrowRef> {
        if self.name_taken(name) {
            return Err(Error::InvalidQuiver(format!("duplicate name `{name}`")));
        }
        for v in [source, target] {
            if v.0 as usize >= self.vertices.len() {
                return Err(Error::InvalidQuiver(format!(
                    "vertex index {} out of range",
                    v.0
                )));
            }
        }
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        Ok(self.arrow_ref(self.arrows.len() - 1))
    }

    fn name_taken(&self, name: &str) -> bool {
        self.vertices.iter().any(|v| v == name) || self.arrows.iter().any(|a| a.name == name)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn arrows(&self) -> impl Iterator<Item = ArrowRef> + '_ {
        (0..self.arrows.len()).map(|i| self.arrow_ref(i))
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .map(|i| VertexId(i as u32))
    }

    pub fn arrow(&self, name: &str) -> Option<ArrowRef> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .map(|i| self.arrow_ref(i))
    }

    fn arrow_ref(&self, i: usize) -> ArrowRef {
        let a = &self.arrows[i];
        ArrowRef {
            index: i as u32,
            source: a.source,
            target: a.target,
        }
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0 as usize]
    }

    pub fn arrow_name(&self, a: ArrowRef) -> &str {
        &self.arrows[a.index as usize].name
    }

    pub fn trivial(&self, v: VertexId) -> Path {
        Path::trivial(v)
    }

    /// Builds the path through the named arrows, failing on the first
    /// non-composable junction.
    pub fn path_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Path> {
        let arrows = names
            .iter()
            .map(|n| {
                self.arrow(n.as_ref())
                    .ok_or_else(|| Error::ForeignPath(format!("unknown arrow `{}`", n.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        self.path(&arrows)
    }

    /// Builds a path from a nonempty arrow sequence.
    pub fn path(&self, arrows: &[ArrowRef]) -> Result<Path> {
        if arrows.is_empty() {
            return Err(Error::ForeignPath("empty arrow sequence".into()));
        }
        for a in arrows {
            if !self.owns_arrow(*a) {
                return Err(Error::ForeignPath(format!("arrow index {}", a.index)));
            }
        }
        for w in arrows.windows(2) {
            if w[0].target != w[1].source {
                return Err(Error::ForeignPath(format!(
                    "path {}*{} not composable: target({})={}, source({})={}",
                    self.arrow_name(w[0]),
                    self.arrow_name(w[1]),
                    self.arrow_name(w[0]),
                    self.vertex_name(w[0].target),
                    self.arrow_name(w[1]),
                    self.vertex_name(w[1].source),
                )));
            }
        }
        Ok(Path {
            source: arrows[0].source,
            target: arrows[arrows.len() - 1].target,
            arrows: arrows.to_vec(),
        })
    }

    fn owns_arrow(&self, a: ArrowRef) -> bool {
        (a.index as usize) < self.arrows.len() && self.arrow_ref(a.index as usize) == a
    }

    /// True when every arrow of `p` is an arrow of this quiver and the path is
    /// composable.
    pub fn contains(&self, p: &Path) -> bool {
        if (p.source.0 as usize) >= self.vertices.len()
            || (p.target.0 as usize) >= self.vertices.len()
        {
            return false;
        }
        if p.arrows.is_empty() {
            return p.source == p.target;
        }
        p.arrows.iter().all(|a| self.owns_arrow(*a))
            && p.arrows.windows(2).all(|w| w[0].target == w[1].source)
            && p.arrows[0].source == p.source
            && p.arrows[p.arrows.len() - 1].target == p.target
    }

    /// Composition `x∘y`, with `None` standing for the zero outcome.
    pub fn compose(&self, x: &Path, y: &Path) -> Result<Option<Path>> {
        for p in [x, y] {
            if !self.contains(p) {
                return Err(Error::ForeignPath(format!("{p:?}")));
            }
        }
        Ok(x.concat(y))
    }

    /// The source/target pair `(u, v)` with `p = u∘p∘v`.
    pub fn vertex_endpoints(&self, p: &Path) -> (VertexId, VertexId) {
        (p.source, p.target)
    }

    /// True when no path of positive length starts and ends at the same vertex.
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm over the vertex graph; loops count as cycles.
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for a in &self.arrows {
            indegree[a.target.0 as usize] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source.0 as usize == v) {
                let t = a.target.0 as usize;
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    ready.push(t);
                }
            }
        }
        seen == n
    }

    /// All paths of length at most `max_len`, trivial paths first, then by
    /// increasing length.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = self.vertices().map(Path::trivial).collect();
        let mut frontier = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.arrows().filter(|a| a.source == p.target) {
                    next.push(p.extended(a));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// All paths of the quiver; refused when the quiver has a cycle, since the
    /// set is then infinite.
    pub fn all_paths(&self) -> Result<Vec<Path>> {
        if !self.is_acyclic() {
            return Err(Error::UnboundedEnumeration);
        }
        Ok(self.paths_up_to(self.vertices.len()))
    }

    /// Renders a path as `a*b*c`, or `[v]` for a trivial path.
    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("[{}]", self.vertex_name(p.source));
        }
        let names: Vec<&str> = p.arrows.iter().map(|a| self.arrow_name(*a)).collect();
        names.join("*")
    }

    pub fn display_path<'a>(&'a self, p: &'a Path) -> impl fmt::Display + 'a {
        DisplayPath {
            quiver: self,
            path: p,
        }
    }
}

struct DisplayPath<'a> {
    quiver: &'a Quiver,
    path: &'a Path,
}

impl fmt::Display for DisplayPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.quiver.format_path(self.path))
    }
}

/// A path: either trivial at a vertex or a composable nonempty arrow sequence.
///
/// The arrow sequence is empty exactly for trivial paths, in which case
/// `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    arrows: Vec<ArrowRef>,
    source: VertexId,
    target: VertexId,
}

impl Path {
    pub fn trivial(v: VertexId) -> Path {
        Path {
            arrows: Vec::new(),
            source: v,
            target: v,
        }
    }

    pub fn arrow(a: ArrowRef) -> Path {
        Path {
            arrows: vec![a],
            source: a.source,
            target: a.target,
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowRef] {
        &self.arrows
    }

    pub(crate) fn extended(&self, a: ArrowRef) -> Path {
        debug_assert_eq!(self.target, a.source);
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path {
            arrows,
            source: self.source,
            target: a.target,
        }
    }

    /// Concatenation, or `None` when `target(self) != source(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + other.arrows.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            arrows,
            source: self.source,
            target: other.target,
        })
    }

    /// The vertex sitting before arrow `k` (or after the last arrow when
    /// `k == len`).
    pub fn vertex_at(&self, k: usize) -> VertexId {
        debug_assert!(k <= self.arrows.len());
        if k < self.arrows.len() {
            self.arrows[k].source
        } else {
            self.target
        }
    }

    /// The subpath covering arrows `start..end`; trivial when `start == end`.
    pub fn subpath(&self, start: usize, end: usize) -> Path {
        debug_assert!(start <= end && end <= self.arrows.len());
        if start == end {
            return Path::trivial(self.vertex_at(start));
        }
        Path {
            arrows: self.arrows[start..end].to_vec(),
            source: self.arrows[start].source,
            target: self.arrows[end - 1].target,
        }
    }

    /// True when `x` occurs in `self` starting at arrow position `k`.
    pub fn occurs_at(&self, x: &Path, k: usize) -> bool {
        k + x.len() <= self.len()
            && self.vertex_at(k) == x.source
            && self.vertex_at(k + x.len()) == x.target
            && self.arrows[k..k + x.len()] == x.arrows[..]
    }

    pub fn prefix_of(&self, y: &Path) -> bool {
        y.occurs_at(self, 0)
    }

    pub fn suffix_of(&self, y: &Path) -> bool {
        self.len() <= y.len() && y.occurs_at(self, y.len() - self.len())
    }

    /// True when `self` divides `y`, i.e. `y = w∘self∘z` for some paths.
    pub fn divides(&self, y: &Path) -> bool {
        self.first_occurrence(y).is_some()
    }

    /// The left-most position at which `self` occurs in `y`.
    pub fn first_occurrence(&self, y: &Path) -> Option<usize> {
        if self.len() > y.len() {
            return None;
        }
        (0..=y.len() - self.len()).find(|&k| y.occurs_at(self, k))
    }
}

/// `w` with `y = w∘x`, when `x` is a suffix of `y`.
pub fn left_divisor_witness(x: &Path, y: &Path) -> Option<Path> {
    if x.suffix_of(y) {
        Some(y.subpath(0, y.len() - x.len()))
    } else {
        None
    }
}

/// `z` with `y = x∘z`, when `x` is a prefix of `y`.
pub fn right_divisor_witness(x: &Path, y: &Path) -> Option<Path> {
    if x.prefix_of(y) {
        Some(y.subpath(x.len(), y.len()))
    } else {
        None
    }
}

/// Every factorization `y = w∘x∘z`, left-most occurrence first.
pub fn factor_occurrences(x: &Path, y: &Path) -> Vec<(Path, Path)> {
    if x.len() > y.len() {
        return Vec::new();
    }
    (0..=y.len() - x.len())
        .filter(|&k| y.occurs_at(x, k))
        .map(|k| (y.subpath(0, k), y.subpath(k + x.len(), y.len())))
        .collect()
}

/// Distinct vertices appearing as endpoints of `paths`.
pub fn endpoint_vertices<'a>(paths: impl IntoIterator<Item = &'a Path>) -> HashSet<VertexId> {
    let mut set = HashSet::new();
    for p in paths {
        set.insert(p.source);
        set.insert(p.target);
    }
    set
}
