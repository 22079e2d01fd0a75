//! Exact canonical labelling by individualization and refinement.
//!
//! The search tree is explored completely except for subtrees that an
//! automorphism already discovered (and fixing the current prefix) maps onto an
//! explored sibling. The certificate is the lexicographically largest
//! adjacency string over the remaining leaves, which makes it a complete
//! isomorphism invariant.

use super::Graph;

/// Byte string identifying an isomorphism class: four bytes of order followed
/// by the upper-triangle adjacency bits (graph6 column order) of the canonical
/// relabelling, packed most significant bit first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        u32::from_be_bytes(self.0[..4].try_into().expect("header")) as usize
    }

    /// The canonical representative, labelled `0..n`.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let bits = &self.0[4..];
        let mut g = Graph::with_order(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    g.add_edge(i, j).expect("in range");
                }
                k += 1;
            }
        }
        g
    }
}

fn certificate(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + nbits.div_ceil(8));
    out.extend_from_slice(&(n as u32).to_be_bytes());
    let mut byte = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                byte |= 1 << (7 - k % 8);
            }
            k += 1;
            if k % 8 == 0 {
                out.push(byte);
                byte = 0;
            }
        }
    }
    if k % 8 != 0 {
        out.push(byte);
    }
    out
}

/// Split cells until the ordered partition is equitable. Subcells are ordered
/// by neighbour count into the splitting cell, so the result commutes with
/// relabelling.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.order();
    let mut in_cell = vec![false; n];
    'restart: loop {
        for si in 0..cells.len() {
            in_cell.iter_mut().for_each(|b| *b = false);
            for &v in &cells[si] {
                in_cell[v] = true;
            }
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    cell.iter().map(|&v| (g.neighbors(v).filter(|&u| in_cell[u]).count(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                        start = k;
                    }
                }
                split |= keyed.first().map(|f| f.0) != keyed.last().map(|l| l.0);
            }
            if split {
                *cells = next;
                continue 'restart;
            }
        }
        return;
    }
}

const MAX_GENERATORS: usize = 256;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &order);
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best, best_order)) => match cert.cmp(best) {
                std::cmp::Ordering::Greater => self.best = Some((cert, order)),
                std::cmp::Ordering::Equal => {
                    if self.automorphisms.len() < MAX_GENERATORS {
                        let mut gamma = vec![0; order.len()];
                        for (pos, &v) in order.iter().enumerate() {
                            gamma[v] = best_order[pos];
                        }
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }

    /// Whether `v` lies in the orbit of an explored vertex under the group
    /// generated by known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &gx) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

/// Canonical vertex order: position `i` of the result holds the vertex that
/// receives canonical index `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    search.visit(vec![(0..n).collect()], &mut Vec::new());
    search.best.expect("at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let order = canonical_labeling(g);
    CanonicalForm(certificate(g, &order))
}

/// Maximum certificate over all `n!` orderings. Exponential; intended as a
/// reference for small graphs.
pub fn canonical_form_brute_force(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = certificate(g, &perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let cert = certificate(g, &perm);
            if cert > best {
                best = cert;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    CanonicalForm(best)
}
