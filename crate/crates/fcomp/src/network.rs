//! The induced network-computation view of a model: a two-layer DAG
//! with parallel source-to-encoder edges and one edge per encoder into
//! the sink, plus cut enumeration and the separated/upstream source sets.

use crate::model::{ConnectivityState, Model};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NetworkError {
    #[error("network has {0} edges, above the enumeration cap of 24")]
    TooLarge(usize),
    #[error("edge index {0} out of range ({1} edges)")]
    EdgeOutOfRange(usize, usize),
}

/// A node of the induced network. Indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Node {
    Source(usize),
    Encoder(usize),
    Sink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub tail: Node,
    pub head: Node,
}

/// Induced network: ell parallel edges per connected (source, encoder)
/// pair and one unit edge from each encoder to the sink.
///
/// Edge order is deterministic: all source-encoder edges first (by source,
/// then encoder, then copy index), then the sink edges e_j by encoder.
#[derive(Debug, Clone)]
pub struct Network {
    s: usize,
    m: usize,
    ell: usize,
    edges: Vec<Edge>,
    /// gamma as bitmasks: encoder set per source.
    gamma_masks: Vec<u32>,
    /// For source i, encoder j: bitmask over edge indices of the parallel
    /// (i, j) edges; 0 if unconnected.
    pair_edges: Vec<u32>,
    /// Index of the first sink edge; sink edge of encoder j is base + j.
    sink_base: usize,
}

/// An edge subset, kept sorted. It is a cut set iff some source is
/// separated from the sink by deleting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSet {
    pub edges: Vec<usize>,
}

impl CutSet {
    pub fn mask(&self) -> u32 {
        self.edges.iter().fold(0, |acc, &e| acc | 1 << e)
    }
}

/// Builds the induced network of a model, with ell = ceil(m / r).
pub fn to_network(model: &Model) -> Network {
    let s = model.s();
    let m = model.m();
    let r = model.r();
    let ell = m.div_ceil(r);
    let mut edges = Vec::new();
    let mut pair_edges = vec![0u32; s * m];
    for i in 0..s {
        for &j in model.omega().gamma(i) {
            for _ in 0..ell {
                pair_edges[i * m + j] |= 1 << edges.len();
                edges.push(Edge { tail: Node::Source(i), head: Node::Encoder(j) });
            }
        }
    }
    let sink_base = edges.len();
    for j in 0..m {
        edges.push(Edge { tail: Node::Encoder(j), head: Node::Sink });
    }
    let gamma_masks = (0..s)
        .map(|i| model.omega().gamma(i).iter().fold(0u32, |acc, &j| acc | 1 << j))
        .collect();
    Network { s, m, ell, edges, gamma_masks, pair_edges, sink_base }
}

impl Network {
    pub fn s(&self) -> usize {
        self.s
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn ell(&self) -> usize {
        self.ell
    }
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
    /// Edge index of the encoder-to-sink edge e_j.
    pub fn sink_edge(&self, j: usize) -> usize {
        self.sink_base + j
    }

    /// Sources separated from the sink after deleting the edges in `mask`.
    /// Returned as a bitmask over source indices.
    ///
    /// Every source-to-sink path is source -> encoder -> sink, so the sink
    /// stays reachable from source i iff some encoder of i keeps both a
    /// surviving parallel edge and a surviving sink edge.
    pub fn i_of_cut_mask(&self, mask: u32) -> u32 {
        let mut separated = 0u32;
        for i in 0..self.s {
            let mut reaches = false;
            let mut g = self.gamma_masks[i];
            while g != 0 {
                let j = g.trailing_zeros() as usize;
                g &= g - 1;
                let pair = self.pair_edges[i * self.m + j];
                if pair & !mask != 0 && mask >> self.sink_edge(j) & 1 == 0 {
                    reaches = true;
                    break;
                }
            }
            if !reaches {
                separated |= 1 << i;
            }
        }
        separated
    }

    /// Sources with a directed path (zero-length allowed) to the tail of
    /// some edge in `mask`, in the original network. Bitmask over sources.
    pub fn k_of_cut_mask(&self, mask: u32) -> u32 {
        let mut upstream = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            match self.edges[e].tail {
                Node::Source(i) => upstream |= 1 << i,
                Node::Encoder(j) => {
                    for i in 0..self.s {
                        if self.gamma_masks[i] >> j & 1 == 1 {
                            upstream |= 1 << i;
                        }
                    }
                }
                Node::Sink => {}
            }
        }
        upstream
    }

    /// 0-based sorted source list separated by the cut.
    pub fn i_of_cut(&self, cut: &CutSet) -> Vec<usize> {
        mask_to_vec(self.i_of_cut_mask(cut.mask()), self.s)
    }

    /// 0-based sorted source list upstream of the cut.
    pub fn k_of_cut(&self, cut: &CutSet) -> Vec<usize> {
        mask_to_vec(self.k_of_cut_mask(cut.mask()), self.s)
    }

    /// Streams all cut sets (nonempty edge subsets separating some source)
    /// in increasing submask order. Errors above 24 edges.
    pub fn cut_sets(&self) -> Result<impl Iterator<Item = CutSet> + '_, NetworkError> {
        let ne = self.edge_count();
        if ne > 24 {
            return Err(NetworkError::TooLarge(ne));
        }
        let total: u32 = 1 << ne;
        Ok((1..total).filter_map(move |mask| {
            if self.i_of_cut_mask(mask) != 0 {
                Some(CutSet { edges: mask_to_vec(mask, ne) })
            } else {
                None
            }
        }))
    }
}

pub(crate) fn mask_to_vec(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Sources whose entire encoder set lies inside the 0-based encoder
/// subset `gamma_sub`.
pub fn i_gamma(omega: &ConnectivityState, gamma_sub: &[usize]) -> Vec<usize> {
    (0..omega.s())
        .filter(|&i| omega.gamma(i).iter().all(|j| gamma_sub.contains(j)))
        .collect()
}
