//! Reach sets, back-reach profiles and strong colouring numbers.
//!
//! For an ordering `⪯`, a vertex `v` and a radius `s >= 1`, the reach set
//! `R(G, ⪯, v, s)` holds every `w ⪯ v` joined to `v` by a path of length at
//! most `s` whose internal vertices all lie strictly right of `v`. The
//! `s`-strong colouring number is the minimum over orderings of the largest
//! reach set.
//!
//! Reach sets are computed by a depth-bounded BFS that only expands `v` and
//! vertices right of `v`. Any walk through such vertices shortens to a path
//! with the same property, so the visited set is exact.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::VertexOrdering;

/// Per-vertex reach-set sizes for one ordering at one radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachProfile {
    pub s: usize,
    /// `sizes[v] = |R(G, ⪯, v, s)|`, indexed by vertex.
    pub sizes: Vec<usize>,
    /// Maximum of `sizes`; 0 for the empty graph.
    pub max: usize,
}

/// Reusable BFS state: a stamp array avoids clearing between sources.
pub(crate) struct ReachBfs {
    stamp: Vec<u32>,
    current: u32,
    frontier: Vec<usize>,
    next: Vec<usize>,
}

impl ReachBfs {
    pub(crate) fn new(n: usize) -> Self {
        ReachBfs {
            stamp: vec![0; n],
            current: 0,
            frontier: Vec::new(),
            next: Vec::new(),
        }
    }

    /// Calls `found` for every vertex in the reach set of `v` (including `v`)
    /// where `is_left(w)` decides whether `w` lies strictly left of `v`.
    fn run(
        &mut self,
        g: &Graph,
        v: usize,
        s: usize,
        is_left: impl Fn(usize) -> bool,
        mut found: impl FnMut(usize),
    ) {
        self.current = self.current.wrapping_add(1);
        if self.current == 0 {
            self.stamp.fill(0);
            self.current = 1;
        }
        let cur = self.current;
        self.stamp[v] = cur;
        found(v);
        self.frontier.clear();
        self.frontier.push(v);
        for _ in 0..s {
            if self.frontier.is_empty() {
                break;
            }
            self.next.clear();
            for &x in &self.frontier {
                for &w in g.neighbours(x) {
                    if self.stamp[w] == cur {
                        continue;
                    }
                    self.stamp[w] = cur;
                    if is_left(w) {
                        found(w);
                    } else {
                        self.next.push(w);
                    }
                }
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
    }
}

impl ReachBfs {
    /// Reach set of `v` under `ord`, including `v`.
    pub(crate) fn under(
        &mut self,
        g: &Graph,
        ord: &VertexOrdering,
        v: usize,
        s: usize,
        found: impl FnMut(usize),
    ) {
        let pv = ord.pos(v);
        self.run(g, v, s, |w| ord.pos(w) < pv, found);
    }
}

fn check_radius(s: usize) -> Result<()> {
    if s == 0 {
        Err(Error::InvalidRadius(s))
    } else {
        Ok(())
    }
}

/// `R(G, ⪯, v, s)` as a vertex list sorted ascending.
pub fn reach_set(g: &Graph, ord: &VertexOrdering, v: usize, s: usize) -> Result<Vec<usize>> {
    check_radius(s)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v + 1,
            n: g.n(),
        });
    }
    debug_assert_eq!(ord.len(), g.n());
    let mut out = Vec::new();
    ReachBfs::new(g.n()).under(g, ord, v, s, |w| out.push(w));
    out.sort_unstable();
    Ok(out)
}

/// Reach-set sizes of every vertex under `ord`.
pub fn back_reach_profile(g: &Graph, ord: &VertexOrdering, s: usize) -> Result<ReachProfile> {
    check_radius(s)?;
    if ord.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: ord.len(),
        });
    }
    let mut bfs = ReachBfs::new(g.n());
    let sizes: Vec<usize> = g
        .vertices()
        .map(|v| {
            let mut count = 0;
            bfs.under(g, ord, v, s, |_| count += 1);
            count
        })
        .collect();
    let max = sizes.iter().copied().max().unwrap_or(0);
    Ok(ReachProfile { s, sizes, max })
}

/// Smallest-last ordering: repeatedly delete a minimum-degree vertex (ties to
/// the smallest id) and return the reverse of the deletion sequence together
/// with the degeneracy `d`, the largest degree seen at deletion time.
///
/// Every vertex has at most `d` neighbours to its left, so the radius-1
/// profile of the returned ordering has maximum `d + 1`.
pub fn degeneracy_order(g: &Graph) -> (VertexOrdering, usize) {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = g.vertices().map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut d = 0;
    while let Some((deg, v)) = queue.pop_first() {
        d = d.max(deg);
        removed[v] = true;
        removal.push(v);
        for &w in g.neighbours(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    removal.reverse();
    (
        VertexOrdering::from_seq(removal).expect("removal sequence is a permutation"),
        d,
    )
}

/// Greedy right-to-left heuristic for small radius-2 back-reach.
///
/// With `S` the vertices already placed on the right, the next vertex placed
/// is an unplaced one minimising
/// `|{v} ∪ (N(v) \ S) ∪ {w ∉ S : w ∈ N(u) for some u ∈ S ∩ N(v)}|`,
/// which is exactly its final `|R(G, ⪯, v, 2)|`. Ties go to the smallest id.
pub fn min_backreach_order(g: &Graph) -> VertexOrdering {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut marks = EpochMarks::new(n);
    let mut score: Vec<usize> = (0..n)
        .map(|v| placement_score(g, v, &placed, &mut marks))
        .collect();
    let mut queue: BTreeSet<(usize, usize)> = score.iter().copied().zip(0..n).collect();

    let mut seq = vec![0; n];
    let mut touched = Vec::new();
    let mut touch_mark = vec![false; n];
    for slot in (0..n).rev() {
        let (_, x) = queue.pop_first().expect("one unplaced vertex per slot");
        placed[x] = true;
        seq[slot] = x;

        // Only unplaced vertices within distance two of x can change score.
        touched.clear();
        for &u in g.neighbours(x) {
            if !placed[u] && !touch_mark[u] {
                touch_mark[u] = true;
                touched.push(u);
            }
            for &w in g.neighbours(u) {
                if !placed[w] && !touch_mark[w] {
                    touch_mark[w] = true;
                    touched.push(w);
                }
            }
        }
        for &v in &touched {
            touch_mark[v] = false;
            let fresh = placement_score(g, v, &placed, &mut marks);
            if fresh != score[v] {
                queue.remove(&(score[v], v));
                score[v] = fresh;
                queue.insert((fresh, v));
            }
        }
    }
    VertexOrdering::from_seq(seq).expect("every vertex placed once")
}

struct EpochMarks {
    mark: Vec<u32>,
    epoch: u32,
}

impl EpochMarks {
    fn new(n: usize) -> Self {
        EpochMarks {
            mark: vec![0; n],
            epoch: 0,
        }
    }

    fn reset(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.mark.fill(0);
            self.epoch = 1;
        }
    }

    /// Marks `v`, returning whether it was unmarked in this epoch.
    fn insert(&mut self, v: usize) -> bool {
        let fresh = self.mark[v] != self.epoch;
        self.mark[v] = self.epoch;
        fresh
    }
}

/// `|R(G, ⪯, v, 2)|` for `v` placed immediately left of the `placed` block.
fn placement_score(g: &Graph, v: usize, placed: &[bool], marks: &mut EpochMarks) -> usize {
    marks.reset();
    marks.insert(v);
    let mut count = 1;
    for &u in g.neighbours(v) {
        if placed[u] {
            count += g
                .neighbours(u)
                .iter()
                .filter(|&&w| !placed[w] && marks.insert(w))
                .count();
        } else if marks.insert(u) {
            count += 1;
        }
    }
    count
}

/// Default vertex limit for [`exact_scol`].
pub const DEFAULT_SCOL_LIMIT: usize = 10;

/// Hard cap for the subset table, independent of the caller's limit.
const SUBSET_TABLE_CAP: usize = 24;

/// Exact `s`-strong colouring number and an ordering attaining it.
///
/// The reach set of `v` depends only on which vertices lie left of `v`, so
/// the minimum over all `n!` orderings of the largest reach set is computed
/// by a dynamic program over left-prefix vertex sets:
/// `best(P) = min over v ∈ P of max(best(P \ v), |R(v | left = P \ v)|)`.
pub fn exact_scol(g: &Graph, s: usize, limit: usize) -> Result<(usize, VertexOrdering)> {
    check_radius(s)?;
    let n = g.n();
    if n > limit || n > SUBSET_TABLE_CAP {
        return Err(Error::TooLarge {
            n,
            limit: limit.min(SUBSET_TABLE_CAP),
        });
    }
    if n == 0 {
        return Ok((0, VertexOrdering::identity(0)));
    }
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; full + 1];
    let mut last = vec![0u8; full + 1];
    best[0] = 0;
    let mut bfs = ReachBfs::new(n);
    for prefix in 1..=full {
        let mut members = prefix;
        while members != 0 {
            let v = members.trailing_zeros() as usize;
            members &= members - 1;
            let left = prefix & !(1 << v);
            let below = best[left];
            if below >= best[prefix] {
                continue;
            }
            let mut size = 0;
            bfs.run(g, v, s, |w| left >> w & 1 == 1, |_| size += 1);
            let value = below.max(size);
            if value < best[prefix] {
                best[prefix] = value;
                last[prefix] = v as u8;
            }
        }
    }
    let mut seq = vec![0; n];
    let mut prefix = full;
    for slot in (0..n).rev() {
        let v = last[prefix] as usize;
        seq[slot] = v;
        prefix &= !(1 << v);
    }
    Ok((
        best[full],
        VertexOrdering::from_seq(seq).expect("reconstruction is a permutation"),
    ))
}
