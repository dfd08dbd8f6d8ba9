use crate::{Error, JacoGraph, Result};

/// Undirected simple graph on vertices `1..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    /// `adjacency[v - 1]` holds the sorted neighbours of `v`.
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder);
        }
        Ok(Self {
            adjacency: vec![Vec::new(); order],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Result<Self> {
        let edges = (1..=order).flat_map(|u| (u + 1..=order).map(move |v| (u, v)));
        Self::from_edges(order, edges)
    }

    pub fn edgeless(order: usize) -> Result<Self> {
        Self::new(order)
    }

    pub fn path(order: usize) -> Result<Self> {
        Self::from_edges(order, (1..order).map(|u| (u, u + 1)))
    }

    /// Underlying simple graph of a Jaco graph (arc directions forgotten).
    pub fn from_jaco(g: &JacoGraph) -> Self {
        let n = g.order();
        let mut adjacency = vec![Vec::new(); n];
        for r in g.records() {
            let last = r.reach.min(n as u64) as usize;
            for j in r.index + 1..=last {
                adjacency[r.index - 1].push(j);
                adjacency[j - 1].push(r.index);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self { adjacency }
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let order = self.order();
        for x in [u, v] {
            if x == 0 || x > order {
                return Err(Error::IndexOutOfRange { index: x, order });
            }
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adjacency[a - 1];
            if let Err(pos) = list.binary_search(&b) {
                list.insert(pos, b);
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.order() && self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (i, list) in self.adjacency.iter().enumerate() {
            let u = i + 1;
            edges.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        edges
    }

    /// Interval certificate: if every closed neighbourhood `N[v]` is a
    /// contiguous index range, returns the lowest index of each `N[v]`.
    ///
    /// Such an ordering is an umbrella ordering of a proper interval graph,
    /// so `{lo(v), ..., v}` is a clique for every `v` and the largest of those
    /// is a maximum clique.
    pub fn interval_certificate(&self) -> Option<Vec<usize>> {
        let mut lows = Vec::with_capacity(self.order());
        for (i, list) in self.adjacency.iter().enumerate() {
            let v = i + 1;
            let lo = list.first().map_or(v, |&x| x.min(v));
            let hi = list.last().map_or(v, |&x| x.max(v));
            if hi - lo != list.len() {
                return None;
            }
            lows.push(lo);
        }
        Some(lows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IncidencePolynomial;

    #[test]
    fn edges_are_symmetric_and_deduplicated() {
        let mut g = SimpleGraph::new(4).unwrap();
        g.add_edge(1, 3).unwrap();
        g.add_edge(3, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert_eq!(g.edges(), vec![(1, 3), (2, 3)]);
        assert_eq!(g.neighbours(3), &[1, 2]);
        assert!(g.is_adjacent(3, 1));
        assert!(!g.is_adjacent(1, 2));
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        let mut g = SimpleGraph::new(3).unwrap();
        assert!(matches!(g.add_edge(2, 2), Err(Error::InvalidGraph(_))));
        assert!(matches!(
            g.add_edge(0, 1),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            g.add_edge(1, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert_eq!(SimpleGraph::new(0), Err(Error::InvalidOrder));
    }

    #[test]
    fn jaco_underlying_edges_match_arcs() {
        let j = JacoGraph::build(IncidencePolynomial::square(), 9).unwrap();
        let g = SimpleGraph::from_jaco(&j);
        assert_eq!(g.edges(), j.arcs(1_000).unwrap());
        assert!(g.interval_certificate().is_some());
    }

    #[test]
    fn certificate_detection() {
        assert!(SimpleGraph::complete(5)
            .unwrap()
            .interval_certificate()
            .is_some());
        assert!(SimpleGraph::path(5)
            .unwrap()
            .interval_certificate()
            .is_some());
        // 4-cycle 1-2-3-4-1: N[1] = {1, 2, 4} has a gap
        let c4 = SimpleGraph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(c4.interval_certificate().is_none());
    }
}
