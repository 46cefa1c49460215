//! Compact shortest-path DAG storage.

use alloc::vec;
use alloc::vec::Vec;

/// Edge set of one shortest-path DAG, grouped by tail with heads sorted
/// inside each group.
///
/// The layout is canonical: two `Dag`s over the same vertex count are equal
/// exactly when their edge sets are equal, and successor iteration order is
/// a function of the edge set alone. Dependency accumulation relies on the
/// latter to produce bit-identical scores regardless of how a DAG was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dag {
    offsets: Vec<u32>,
    heads: Vec<u32>,
}

impl Dag {
    pub fn empty(n: usize) -> Self {
        Dag { offsets: vec![0; n + 1], heads: Vec::new() }
    }

    /// Builds the canonical DAG from an arbitrary edge list, dropping
    /// duplicates. Two stable counting-sort passes (by head, then by tail),
    /// so the cost is `O(n + edges.len())`.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        if edges.is_empty() {
            return Dag::empty(n);
        }
        let by_head = counting_sort(n, edges, |e| e.1);
        let sorted = counting_sort(n, &by_head, |e| e.0);

        let mut offsets = vec![0u32; n + 1];
        let mut heads = Vec::with_capacity(sorted.len());
        let mut last = None;
        for &(a, b) in &sorted {
            if last == Some((a, b)) {
                continue;
            }
            last = Some((a, b));
            heads.push(b);
            offsets[a as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        Dag { offsets, heads }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.heads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }

    pub fn successors(&self, a: usize) -> &[u32] {
        &self.heads[self.offsets[a] as usize..self.offsets[a + 1] as usize]
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.successors(a).binary_search(&(b as u32)).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.vertex_count()).flat_map(move |a| {
            self.successors(a).iter().map(move |&b| (a as u32, b))
        })
    }

    /// Topological order of the vertices reachable from `root`, by in-degree
    /// peeling. Returns the order and the number of edges scanned.
    ///
    /// Every edge of a shortest-path DAG lies on a path from its root, so the
    /// order covers every vertex that touches an edge.
    pub fn topological_order(&self, root: usize) -> (Vec<u32>, u64) {
        let n = self.vertex_count();
        let mut indegree = vec![0u32; n];
        for &b in &self.heads {
            indegree[b as usize] += 1;
        }
        let mut order = Vec::with_capacity(n);
        order.push(root as u32);
        let mut next = 0;
        while next < order.len() {
            let a = order[next] as usize;
            next += 1;
            for &b in self.successors(a) {
                let d = &mut indegree[b as usize];
                *d -= 1;
                if *d == 0 {
                    order.push(b);
                }
            }
        }
        (order, 2 * self.heads.len() as u64)
    }
}

fn counting_sort(n: usize, edges: &[(u32, u32)], key: impl Fn(&(u32, u32)) -> u32) -> Vec<(u32, u32)> {
    let mut pos = vec![0usize; n + 1];
    for e in edges {
        pos[key(e) as usize + 1] += 1;
    }
    for i in 0..n {
        pos[i + 1] += pos[i];
    }
    let mut out = vec![(0, 0); edges.len()];
    for e in edges {
        let k = key(e) as usize;
        out[pos[k]] = *e;
        pos[k] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_and_deduplicated() {
        let a = Dag::from_edges(4, &[(2, 3), (0, 2), (0, 1), (1, 3), (0, 1)]);
        let b = Dag::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
        assert_eq!(a.successors(0), &[1, 2]);
        assert!(a.contains(2, 3));
        assert!(!a.contains(3, 2));
        assert_eq!(a.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn topological_order_of_diamond() {
        let d = Dag::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let (order, scanned) = d.topological_order(0);
        assert_eq!(order, vec![0, 1, 2, 3]);
        assert_eq!(scanned, 8);
        let (order, _) = Dag::empty(3).topological_order(1);
        assert_eq!(order, vec![1]);
    }

    proptest! {
        #[test]
        fn order_respects_every_edge(edges in proptest::collection::vec((0u32..12, 0u32..12), 0..60)) {
            // Orient every edge from the smaller to the larger id and hang
            // every vertex off root 0 so the graph is an acyclic rooted DAG.
            let mut list: Vec<(u32, u32)> = edges
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            list.extend((1..12).map(|b| (0, b)));
            let dag = Dag::from_edges(12, &list);
            let (order, _) = dag.topological_order(0);
            prop_assert_eq!(order.len(), 12);
            let mut pos = [0usize; 12];
            for (i, &x) in order.iter().enumerate() {
                pos[x as usize] = i;
            }
            for (a, b) in dag.edges() {
                prop_assert!(pos[a as usize] < pos[b as usize]);
            }
        }
    }
}
