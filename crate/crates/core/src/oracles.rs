//! Exhaustive ground truth at desk scale. Every oracle has a hard order cap
//! and fails with [`Error::CapExceeded`] above it. Witnesses are the
//! lexicographically smallest certificates.

use serde::Serialize;
use serde_json::{json, Value};

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::oriented::tournament::{tournament_classes, Tournament};

pub const KERNEL_CAP: usize = 20;
pub const QUASI_KERNEL_CAP: usize = 16;
pub const CHROMATIC_CAP: usize = 12;
pub const ORIENTED_CAP: usize = 14;
pub const ORIENTED_KMAX_CAP: usize = 7;
pub const LONGEST_PATH_CAP: usize = 15;

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

struct Masks {
    out: Vec<u32>,
    inc: Vec<u32>,
}

impl Masks {
    fn new(d: &Digraph) -> Self {
        let mut out = vec![0u32; d.n()];
        let mut inc = vec![0u32; d.n()];
        for (u, v) in d.arcs() {
            out[u] |= 1 << v;
            inc[v] |= 1 << u;
        }
        Masks { out, inc }
    }

    fn adj(&self, v: Vertex) -> u32 {
        self.out[v] | self.inc[v]
    }
}

fn mask_to_set(mut m: u32) -> VertexSet {
    let mut s = VertexSet::new();
    while m != 0 {
        s.insert(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    s
}

/// Calls `visit` on every independent set, in increasing order of the
/// member list read as a word. Returns the number of sets visited.
fn for_each_independent(m: &Masks, n: usize, visit: &mut impl FnMut(u32)) -> u64 {
    fn rec(
        m: &Masks,
        n: usize,
        next: usize,
        set: u32,
        blocked: u32,
        visit: &mut impl FnMut(u32),
        count: &mut u64,
    ) {
        *count += 1;
        visit(set);
        for v in next..n {
            if blocked >> v & 1 == 0 {
                rec(m, n, v + 1, set | 1 << v, blocked | m.adj(v), visit, count);
            }
        }
    }
    let mut count = 0;
    rec(m, n, 0, 0, 0, visit, &mut count);
    count
}

#[derive(Debug, Clone, Serialize)]
pub struct KernelReport {
    pub has_kernel: bool,
    pub witness: Option<VertexSet>,
    pub kernels: Vec<VertexSet>,
    pub search_space_size: u64,
}

/// All kernels of `d`, found by enumerating independent sets.
pub fn kernel_oracle(d: &Digraph) -> Result<KernelReport> {
    let n = d.n();
    check_cap("kernel oracle", n, KERNEL_CAP)?;
    let m = Masks::new(d);
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut kernels = Vec::new();
    let searched = for_each_independent(&m, n, &mut |s| {
        let mut outside = all & !s;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            if m.out[v] & s == 0 {
                return;
            }
        }
        kernels.push(mask_to_set(s));
    });
    kernels.sort();
    Ok(KernelReport {
        has_kernel: !kernels.is_empty(),
        witness: kernels.first().cloned(),
        kernels,
        search_space_size: searched,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiKernelReport {
    pub count: usize,
    pub min_size: Option<usize>,
    pub small_exists: bool,
    /// Smallest quasi-kernel of minimum size.
    pub witness: Option<VertexSet>,
    pub quasi_kernels: Vec<VertexSet>,
    pub search_space_size: u64,
}

fn quasi_absorbs(m: &Masks, all: u32, s: u32) -> bool {
    let mut hit = s;
    for (v, &o) in m.out.iter().enumerate() {
        if o & s != 0 {
            hit |= 1 << v;
        }
    }
    let mut outside = all & !s;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        if m.out[v] & hit == 0 {
            return false;
        }
    }
    true
}

/// All quasi-kernels of `d`.
pub fn quasi_kernel_oracle(d: &Digraph) -> Result<QuasiKernelReport> {
    let n = d.n();
    check_cap("quasi-kernel oracle", n, QUASI_KERNEL_CAP)?;
    let m = Masks::new(d);
    let all = (1u32 << n) - 1;
    let mut found = Vec::new();
    let searched = for_each_independent(&m, n, &mut |s| {
        if quasi_absorbs(&m, all, s) {
            found.push(mask_to_set(s));
        }
    });
    found.sort();
    let min_size = found.iter().map(VertexSet::len).min();
    let witness = min_size.and_then(|k| found.iter().find(|q| q.len() == k).cloned());
    Ok(QuasiKernelReport {
        count: found.len(),
        min_size,
        small_exists: min_size.is_some_and(|k| 2 * k <= n),
        witness,
        quasi_kernels: found,
        search_space_size: searched,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ChromaticReport {
    pub chromatic_number: usize,
    /// Colours `1..=k` per vertex.
    pub chromatic_witness: Vec<usize>,
    pub dichromatic_number: usize,
    pub dichromatic_witness: Vec<usize>,
    pub search_space_size: u64,
}

/// `v` closes a directed cycle inside `class ∪ {v}` when some out-neighbour
/// of `v` in the class reaches an in-neighbour of `v` within the class.
fn closes_cycle(m: &Masks, class: u32, v: Vertex) -> bool {
    let targets = m.inc[v] & class;
    if targets == 0 {
        return false;
    }
    let mut seen = m.out[v] & class;
    let mut frontier = seen;
    while frontier != 0 {
        if frontier & targets != 0 {
            return true;
        }
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= m.out[u] & class;
        }
        frontier = next & !seen;
        seen |= next;
    }
    false
}

/// Finds a partition into `k` classes accepted by `fits`, colouring
/// vertices in order and opening at most one new class per step.
fn partition(
    n: usize,
    k: usize,
    fits: &impl Fn(u32, Vertex) -> bool,
    nodes: &mut u64,
) -> Option<Vec<usize>> {
    fn rec(
        v: usize,
        n: usize,
        k: usize,
        classes: &mut Vec<u32>,
        colour: &mut Vec<usize>,
        fits: &impl Fn(u32, Vertex) -> bool,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if v == n {
            return true;
        }
        let open = classes.len();
        for c in 0..open.min(k) {
            if fits(classes[c], v) {
                classes[c] |= 1 << v;
                colour[v] = c + 1;
                if rec(v + 1, n, k, classes, colour, fits, nodes) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        if open < k {
            classes.push(1 << v);
            colour[v] = open + 1;
            if rec(v + 1, n, k, classes, colour, fits, nodes) {
                return true;
            }
            classes.pop();
        }
        false
    }
    let mut classes = Vec::new();
    let mut colour = vec![0; n];
    rec(0, n, k, &mut classes, &mut colour, fits, nodes).then_some(colour)
}

/// Exact chromatic and dichromatic numbers by ascending `k`.
pub fn chromatic_oracles(d: &Digraph) -> Result<ChromaticReport> {
    let n = d.n();
    check_cap("chromatic oracle", n, CHROMATIC_CAP)?;
    let m = Masks::new(d);
    let mut nodes = 0;
    let independent = |class: u32, v: Vertex| m.adj(v) & class == 0;
    let acyclic = |class: u32, v: Vertex| !closes_cycle(&m, class, v);
    let (chromatic_number, chromatic_witness) = (0..=n)
        .find_map(|k| partition(n, k, &independent, &mut nodes).map(|w| (k, w)))
        .expect("n classes always suffice");
    let (dichromatic_number, dichromatic_witness) = (0..=n)
        .find_map(|k| partition(n, k, &acyclic, &mut nodes).map(|w| (k, w)))
        .expect("n classes always suffice");
    Ok(ChromaticReport {
        chromatic_number,
        chromatic_witness,
        dichromatic_number,
        dichromatic_witness,
        search_space_size: nodes,
    })
}

/// Backtracking search for a homomorphism of `d` into the digraph whose
/// out-neighbourhoods are `target` (bitmasks). Vertices are assigned in
/// breadth-first order of the underlying graph so each new vertex is
/// constrained by an assigned neighbour. The first image found is the
/// lexicographically smallest with respect to that order.
pub fn find_homomorphism(d: &Digraph, target: &[u32]) -> (Option<Vec<Vertex>>, u64) {
    let n = d.n();
    let k = target.len();
    let mut tin = vec![0u32; k];
    for (a, &o) in target.iter().enumerate() {
        for b in 0..k {
            if o >> b & 1 == 1 {
                tin[b] |= 1 << a;
            }
        }
    }
    let adj = d.underlying_adjacency();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in d.vertices() {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &adj[v] {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // arcs to already assigned vertices: (neighbour, vertex is tail)
    let earlier: Vec<Vec<(Vertex, bool)>> = order
        .iter()
        .map(|&v| {
            let mut e: Vec<_> = d
                .out_neighbors(v)
                .iter()
                .filter(|&&w| pos[w] < pos[v])
                .map(|&w| (w, true))
                .collect();
            e.extend(
                d.in_neighbors(v)
                    .iter()
                    .filter(|&&w| pos[w] < pos[v])
                    .map(|&w| (w, false)),
            );
            e
        })
        .collect();
    let all = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
    let mut phi = vec![usize::MAX; n];
    let mut nodes = 0u64;

    fn rec(
        i: usize,
        order: &[Vertex],
        earlier: &[Vec<(Vertex, bool)>],
        target: &[u32],
        tin: &[u32],
        all: u32,
        phi: &mut [usize],
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if i == order.len() {
            return true;
        }
        let mut cand = all;
        for &(w, tail) in &earlier[i] {
            cand &= if tail { tin[phi[w]] } else { target[phi[w]] };
        }
        while cand != 0 {
            let c = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            phi[order[i]] = c;
            if rec(i + 1, order, earlier, target, tin, all, phi, nodes) {
                return true;
            }
        }
        phi[order[i]] = usize::MAX;
        false
    }

    let ok = rec(0, &order, &earlier, target, &tin, all, &mut phi, &mut nodes);
    (ok.then_some(phi), nodes)
}

/// Arc-by-arc homomorphism predicate.
pub fn is_homomorphism(d: &Digraph, target: &Digraph, phi: &[Vertex]) -> bool {
    phi.len() == d.n()
        && phi.iter().all(|&c| c < target.n())
        && d.arcs().all(|(u, v)| target.has_arc(phi[u], phi[v]))
}

#[derive(Debug, Clone, Serialize)]
pub struct OrientedReport {
    /// `None` means the value exceeds `k_max`.
    pub value: Option<usize>,
    pub k_max: usize,
    pub target: Option<Tournament>,
    pub mapping: Option<Vec<Vertex>>,
    pub tournaments_tested: u64,
    pub search_space_size: u64,
}

/// Oriented chromatic number up to `k_max`, testing one tournament per
/// isomorphism class of each order.
pub fn oriented_chromatic_oracle(d: &Digraph, k_max: usize) -> Result<OrientedReport> {
    check_cap("oriented chromatic oracle", d.n(), ORIENTED_CAP)?;
    check_cap("oriented chromatic oracle k_max", k_max, ORIENTED_KMAX_CAP)?;
    d.require_asymmetric()?;
    let mut tested = 0;
    let mut nodes = 0;
    for k in 0..=k_max {
        if k < d.n().min(1) {
            continue;
        }
        for t in tournament_classes(k) {
            tested += 1;
            let (phi, used) = find_homomorphism(d, t.out_masks());
            nodes += used;
            if let Some(phi) = phi {
                return Ok(OrientedReport {
                    value: Some(k),
                    k_max,
                    target: Some(t.clone()),
                    mapping: Some(phi),
                    tournaments_tested: tested,
                    search_space_size: nodes,
                });
            }
        }
    }
    Ok(OrientedReport {
        value: None,
        k_max,
        target: None,
        mapping: None,
        tournaments_tested: tested,
        search_space_size: nodes,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LongestPathReport {
    /// Arc count of a longest path.
    pub max_length: usize,
    /// Every path of that length, sorted.
    pub paths: Vec<Vec<Vertex>>,
    pub search_space_size: u64,
}

/// Longest paths by memoised extension over visited sets, then enumeration
/// of exactly the branches that can still reach the maximum.
pub fn longest_path_oracle(d: &Digraph) -> Result<LongestPathReport> {
    let n = d.n();
    check_cap("longest-path oracle", n, LONGEST_PATH_CAP)?;
    if n == 0 {
        return Ok(LongestPathReport {
            max_length: 0,
            paths: Vec::new(),
            search_space_size: 0,
        });
    }
    let m = Masks::new(d);
    // ext[mask * n + v]: longest extension from endpoint v avoiding mask
    let mut ext = vec![u8::MAX; (1usize << n) * n];
    let mut nodes = 0u64;

    fn extend(m: &Masks, n: usize, mask: u32, v: usize, ext: &mut [u8], nodes: &mut u64) -> u8 {
        let key = mask as usize * n + v;
        if ext[key] != u8::MAX {
            return ext[key];
        }
        *nodes += 1;
        let mut best = 0;
        let mut next = m.out[v] & !mask;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            best = best.max(1 + extend(m, n, mask | 1 << w, w, ext, nodes));
        }
        ext[key] = best;
        best
    }

    let best = (0..n)
        .map(|v| extend(&m, n, 1 << v, v, &mut ext, &mut nodes))
        .max()
        .unwrap_or(0);

    fn collect(
        m: &Masks,
        n: usize,
        target: u8,
        path: &mut Vec<usize>,
        mask: u32,
        ext: &mut [u8],
        nodes: &mut u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        let len = (path.len() - 1) as u8;
        if len == target {
            out.push(path.clone());
            return;
        }
        let v = *path.last().unwrap();
        let mut next = m.out[v] & !mask;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if len + 1 + extend(m, n, mask | 1 << w, w, ext, nodes) == target {
                path.push(w);
                collect(m, n, target, path, mask | 1 << w, ext, nodes, out);
                path.pop();
            }
        }
    }

    let mut paths = Vec::new();
    for v in 0..n {
        if extend(&m, n, 1 << v, v, &mut ext, &mut nodes) == best {
            collect(
                &m,
                n,
                best,
                &mut vec![v],
                1 << v,
                &mut ext,
                &mut nodes,
                &mut paths,
            );
        }
    }
    paths.sort();
    Ok(LongestPathReport {
        max_length: best as usize,
        paths,
        search_space_size: nodes,
    })
}

/// Uniform wrapper used for command-line output.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub quantity: String,
    pub value: Value,
    pub witness: Option<Value>,
    pub search_space_size: u64,
    pub details: Value,
}

impl From<KernelReport> for OracleReport {
    fn from(r: KernelReport) -> Self {
        OracleReport {
            quantity: "has_kernel".into(),
            value: json!(r.has_kernel),
            witness: r.witness.as_ref().map(|w| json!(w)),
            search_space_size: r.search_space_size,
            details: json!({ "kernels": r.kernels }),
        }
    }
}

impl From<QuasiKernelReport> for OracleReport {
    fn from(r: QuasiKernelReport) -> Self {
        OracleReport {
            quantity: "small_quasi_kernel_exists".into(),
            value: json!(r.small_exists),
            witness: r.witness.as_ref().map(|w| json!(w)),
            search_space_size: r.search_space_size,
            details: json!({
                "count": r.count,
                "min_size": r.min_size,
                "quasi_kernels": r.quasi_kernels,
            }),
        }
    }
}

impl From<ChromaticReport> for OracleReport {
    fn from(r: ChromaticReport) -> Self {
        OracleReport {
            quantity: "chromatic_number".into(),
            value: json!(r.chromatic_number),
            witness: Some(json!(r.chromatic_witness)),
            search_space_size: r.search_space_size,
            details: json!({
                "dichromatic_number": r.dichromatic_number,
                "dichromatic_witness": r.dichromatic_witness,
            }),
        }
    }
}

impl From<OrientedReport> for OracleReport {
    fn from(r: OrientedReport) -> Self {
        OracleReport {
            quantity: "oriented_chromatic_number".into(),
            value: match r.value {
                Some(k) => json!(k),
                None => json!(format!("> {}", r.k_max)),
            },
            witness: r
                .mapping
                .as_ref()
                .map(|m| json!({ "assignment": m, "target": r.target })),
            search_space_size: r.search_space_size,
            details: json!({ "k_max": r.k_max, "tournaments_tested": r.tournaments_tested }),
        }
    }
}

impl From<LongestPathReport> for OracleReport {
    fn from(r: LongestPathReport) -> Self {
        OracleReport {
            quantity: "longest_path_length".into(),
            value: json!(r.max_length),
            witness: r.paths.first().map(|p| json!(p)),
            search_space_size: r.search_space_size,
            details: json!({ "paths": r.paths }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn kernels_of_cycles() {
        let c4 = kernel_oracle(&Digraph::cycle(4)).unwrap();
        assert!(c4.has_kernel);
        assert_eq!(c4.witness, Some(set(&[0, 2])));
        assert_eq!(c4.kernels, vec![set(&[0, 2]), set(&[1, 3])]);
        assert!(!kernel_oracle(&Digraph::cycle(3)).unwrap().has_kernel);
        let c5 = kernel_oracle(&Digraph::cycle(5)).unwrap();
        assert!(!c5.has_kernel);
        // empty set, five singletons, five non-adjacent pairs
        assert_eq!(c5.search_space_size, 11);
    }

    #[test]
    fn caps_fail_loudly() {
        assert!(matches!(
            kernel_oracle(&Digraph::cycle(21)),
            Err(Error::CapExceeded { cap: 20, .. })
        ));
        assert!(longest_path_oracle(&Digraph::cycle(16)).is_err());
        assert!(chromatic_oracles(&Digraph::cycle(13)).is_err());
        assert!(oriented_chromatic_oracle(&Digraph::cycle(5), 8).is_err());
    }

    #[test]
    fn quasi_kernels_of_cycles() {
        let c6 = quasi_kernel_oracle(&Digraph::cycle(6)).unwrap();
        assert!(c6.small_exists);
        assert!(c6.quasi_kernels.contains(&set(&[0, 3])));
        let c3 = quasi_kernel_oracle(&Digraph::cycle(3)).unwrap();
        assert_eq!(c3.witness, Some(set(&[0])));
        assert!(c3.small_exists);
        let with_sink = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let r = quasi_kernel_oracle(&with_sink).unwrap();
        assert_eq!(r.quasi_kernels, vec![set(&[0, 2]), set(&[2])]);
        assert_eq!(r.witness, Some(set(&[2])));
    }

    #[test]
    fn chromatic_numbers() {
        let c5 = chromatic_oracles(&Digraph::cycle(5)).unwrap();
        assert_eq!((c5.chromatic_number, c5.dichromatic_number), (3, 2));
        let c4 = chromatic_oracles(&Digraph::cycle(4)).unwrap();
        assert_eq!((c4.chromatic_number, c4.dichromatic_number), (2, 2));
        let k3 = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]).unwrap();
        let r = chromatic_oracles(&k3).unwrap();
        // any two vertices of a class form a digon
        assert_eq!((r.chromatic_number, r.dichromatic_number), (3, 3));
    }

    #[test]
    fn oriented_numbers() {
        let c3 = oriented_chromatic_oracle(&Digraph::cycle(3), 7).unwrap();
        assert_eq!(c3.value, Some(3));
        let c5 = oriented_chromatic_oracle(&Digraph::cycle(5), 7).unwrap();
        assert_eq!(c5.value, Some(5));
        let c4 = oriented_chromatic_oracle(&Digraph::cycle(4), 7).unwrap();
        assert_eq!(c4.value, Some(4));
        let p = oriented_chromatic_oracle(&Digraph::path(3), 7).unwrap();
        assert_eq!(p.value, Some(3));
        let r = oriented_chromatic_oracle(&Digraph::cycle(3), 2).unwrap();
        assert_eq!(r.value, None);
    }

    #[test]
    fn longest_paths_of_small_digraphs() {
        let c5 = longest_path_oracle(&Digraph::cycle(5)).unwrap();
        assert_eq!(c5.max_length, 4);
        assert_eq!(c5.paths.len(), 5);
        let p = longest_path_oracle(&Digraph::path(3)).unwrap();
        assert_eq!((p.max_length, p.paths.clone()), (2, vec![vec![0, 1, 2]]));
        let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 1)]).unwrap();
        let r = longest_path_oracle(&d).unwrap();
        assert_eq!(r.max_length, 4);
        // rotations of the Hamiltonian cycle 0 3 4 1 2
        assert_eq!(r.paths.len(), 5);
        assert_eq!(r.paths[0], vec![0, 3, 4, 1, 2]);
    }

    fn small_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                let arcs = (0..n)
                    .flat_map(|u| (0..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| u != v && bits[u * n + v]);
                Digraph::from_arcs(n, arcs).unwrap()
            })
        })
    }

    fn all_simple_paths(d: &Digraph) -> Vec<Vec<Vertex>> {
        fn go(d: &Digraph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
            out.push(path.clone());
            let v = *path.last().unwrap();
            for &w in d.out_neighbors(v) {
                if !path.contains(&w) {
                    path.push(w);
                    go(d, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for v in d.vertices() {
            go(d, &mut vec![v], &mut out);
        }
        out
    }

    proptest! {
        #[test]
        fn kernels_match_subset_enumeration(d in small_digraph(7)) {
            let r = kernel_oracle(&d).unwrap();
            let brute: Vec<VertexSet> = (0u32..1 << d.n())
                .map(mask_to_set)
                .filter(|s| d.is_kernel(s))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            prop_assert_eq!(r.kernels, brute);
        }

        #[test]
        fn quasi_kernels_match_subset_enumeration(d in small_digraph(7)) {
            let r = quasi_kernel_oracle(&d).unwrap();
            let brute: std::collections::BTreeSet<VertexSet> = (0u32..1 << d.n())
                .map(mask_to_set)
                .filter(|s| d.is_quasi_kernel(s))
                .collect();
            prop_assert!(r.count >= 1);
            prop_assert_eq!(r.quasi_kernels, brute.into_iter().collect::<Vec<_>>());
        }

        #[test]
        fn longest_paths_match_enumeration(d in small_digraph(7)) {
            let r = longest_path_oracle(&d).unwrap();
            let all = all_simple_paths(&d);
            let best = all.iter().map(|p| p.len() - 1).max().unwrap();
            let mut longest: Vec<_> = all.into_iter().filter(|p| p.len() - 1 == best).collect();
            longest.sort();
            prop_assert_eq!(r.max_length, best);
            prop_assert_eq!(r.paths, longest);
        }

        #[test]
        fn chromatic_witnesses_are_valid(d in small_digraph(7)) {
            let r = chromatic_oracles(&d).unwrap();
            for (u, v) in d.arcs() {
                prop_assert_ne!(r.chromatic_witness[u], r.chromatic_witness[v]);
            }
            prop_assert!(r.dichromatic_number <= r.chromatic_number);
            for c in 1..=r.dichromatic_number {
                let class: Vec<Vertex> = d.vertices().filter(|&v| r.dichromatic_witness[v] == c).collect();
                let sub = d.induced(&class);
                // an acyclic digraph has no nontrivial strong component
                let acyclic = (0..sub.n()).all(|v| sub.out_neighbors(v).iter().all(|&w| !sub.reachable_from(w)[v]));
                prop_assert!(acyclic);
            }
            // one class fewer never works
            if r.chromatic_number > 0 {
                let mut nodes = 0;
                let m = Masks::new(&d);
                let independent = |class: u32, v: Vertex| m.adj(v) & class == 0;
                prop_assert!(partition(d.n(), r.chromatic_number - 1, &independent, &mut nodes).is_none());
            }
        }

        #[test]
        fn oriented_mappings_are_homomorphisms(d in small_digraph(6)) {
            prop_assume!(d.is_asymmetric());
            let r = oriented_chromatic_oracle(&d, 6).unwrap();
            let k = r.value.unwrap();
            let t = r.target.unwrap().to_digraph();
            prop_assert!(is_homomorphism(&d, &t, r.mapping.as_ref().unwrap()));
            // no class of a smaller order admits one
            for smaller in 0..k {
                for c in tournament_classes(smaller) {
                    prop_assert!(find_homomorphism(&d, c.out_masks()).0.is_none());
                }
            }
        }
    }
}
