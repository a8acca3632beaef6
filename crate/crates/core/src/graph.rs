//! Attributed graphs: loading, normalization and feature aggregation.
//!
//! The adjacency is stored once as symmetric CSR (both directions of every
//! undirected edge, no self-loops, no duplicates). All downstream modules
//! treat the graph as immutable.

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::sparse::CsrMatrix;
use std::collections::BTreeSet;
use std::collections::HashMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

#[derive(Debug, Clone)]
pub struct AttributedGraph {
    pub n: usize,
    /// CSR row offsets over the symmetric adjacency.
    pub row_offsets: Vec<usize>,
    /// CSR column indices, ascending within each row.
    pub col_indices: Vec<usize>,
    /// Dense n x d feature matrix.
    pub features: DenseMatrix,
    /// Class id per node in `[0, class_count)`, when known.
    pub labels: Option<Vec<usize>>,
    pub class_count: usize,
}

/// The GCN propagation operator `S = (I+D)^(-1/2) (A+I) (I+D)^(-1/2)`.
#[derive(Debug, Clone)]
pub struct NormalizedAdjacency(pub CsrMatrix);

/// `S^L X` together with the hop count that produced it.
#[derive(Debug, Clone)]
pub struct AggregatedFeatures {
    pub matrix: DenseMatrix,
    pub hops: usize,
}

impl AttributedGraph {
    /// Build from an undirected edge list. Self-loops are dropped and
    /// duplicate edges collapse; `(u,v)` and `(v,u)` are the same edge.
    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize)],
        features: DenseMatrix,
        labels: Option<Vec<usize>>,
    ) -> Result<Self> {
        if features.rows != n {
            return Err(Error::Shape(format!(
                "feature matrix has {} rows for {} nodes",
                features.rows, n
            )));
        }
        if let Some(ref l) = labels {
            if l.len() != n {
                return Err(Error::Shape(format!(
                    "{} labels for {} nodes",
                    l.len(),
                    n
                )));
            }
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArg(format!(
                    "edge ({u},{v}) references a node >= {n}"
                )));
            }
            if u == v {
                continue;
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut degree = vec![0usize; n];
        for &(u, v) in &set {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut row_offsets = vec![0usize; n + 1];
        for i in 0..n {
            row_offsets[i + 1] = row_offsets[i] + degree[i];
        }
        let mut col_indices = vec![0usize; 2 * set.len()];
        let mut cursor = row_offsets.clone();
        for &(u, v) in &set {
            col_indices[cursor[u]] = v;
            cursor[u] += 1;
            col_indices[cursor[v]] = u;
            cursor[v] += 1;
        }
        // BTreeSet iteration inserts v-ascending for each u, but the reverse
        // direction arrives out of order; sort each row once.
        for i in 0..n {
            col_indices[row_offsets[i]..row_offsets[i + 1]].sort_unstable();
        }
        let class_count = labels
            .as_ref()
            .map_or(0, |l| l.iter().copied().max().map_or(0, |m| m + 1));
        Ok(AttributedGraph {
            n,
            row_offsets,
            col_indices,
            features,
            labels,
            class_count,
        })
    }

    #[inline]
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.col_indices[self.row_offsets[i]..self.row_offsets[i + 1]]
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.row_offsets[i + 1] - self.row_offsets[i]
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.col_indices.len() / 2
    }

    /// Undirected edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn feature_dim(&self) -> usize {
        self.features.cols
    }

    /// Fraction of undirected edges whose endpoints share a label.
    pub fn homophily_ratio(&self) -> Result<f64> {
        let labels = self.labels.as_ref().ok_or(Error::MissingLabels)?;
        let m = self.edge_count();
        if m == 0 {
            return Err(Error::EmptyEdgeSet);
        }
        let same = self
            .edges()
            .filter(|&(u, v)| labels[u] == labels[v])
            .count();
        Ok(same as f64 / m as f64)
    }

    /// Divide every feature row by its L1 norm; all-zero rows stay zero.
    pub fn row_normalize_features(&mut self) {
        for i in 0..self.n {
            let row = self.features.row_mut(i);
            let sum: f64 = row.iter().map(|v| v.abs()).sum();
            if sum > 0.0 {
                for v in row.iter_mut() {
                    *v /= sum;
                }
            }
        }
    }
}

/// Build `S = (I+D)^(-1/2) (A+I) (I+D)^(-1/2)`.
///
/// Entry `(i,j)` is `1/sqrt((d_i+1)(d_j+1))` for each edge and `1/(d_i+1)`
/// on the diagonal; isolated nodes get the single entry `1.0`.
pub fn normalized_adjacency(g: &AttributedGraph) -> NormalizedAdjacency {
    let n = g.n;
    let inv_sqrt: Vec<f64> = (0..n).map(|i| 1.0 / ((g.degree(i) + 1) as f64).sqrt()).collect();
    let mut triplets = Vec::with_capacity(g.col_indices.len() + n);
    for i in 0..n {
        triplets.push((i, i, inv_sqrt[i] * inv_sqrt[i]));
        for &j in g.neighbors(i) {
            triplets.push((i, j, inv_sqrt[i] * inv_sqrt[j]));
        }
    }
    NormalizedAdjacency(CsrMatrix::from_triplets(n, n, triplets))
}

/// Compute `S^L X` by `L` successive sparse-dense multiplies.
pub fn aggregate_features(
    s: &NormalizedAdjacency,
    x: &DenseMatrix,
    hops: usize,
) -> Result<AggregatedFeatures> {
    if s.0.cols != x.rows {
        return Err(Error::Shape(format!(
            "adjacency is {}x{} but features have {} rows",
            s.0.rows, s.0.cols, x.rows
        )));
    }
    let mut out = x.clone();
    for _ in 0..hops {
        out = s.0.mul_dense(&out);
    }
    Ok(AggregatedFeatures { matrix: out, hops })
}

fn open_lines(path: &Path) -> Result<impl Iterator<Item = std::io::Result<String>>> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    Ok(BufReader::new(file).lines())
}

/// Load a dataset directory holding `edges.tsv`, `features.csv` and
/// `labels.csv`.
pub fn load_generic(dir: &Path) -> Result<AttributedGraph> {
    let feat_path = dir.join("features.csv");
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut dim: Option<usize> = None;
    for (lineno, line) in open_lines(&feat_path)?.enumerate() {
        let line = line.map_err(|e| Error::io(&feat_path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split(',') {
            let v: f64 = tok.trim().parse().map_err(|_| {
                Error::parse(&feat_path, lineno + 1, format!("non-numeric token '{}'", tok.trim()))
            })?;
            row.push(v);
        }
        if let Some(d) = dim {
            if row.len() != d {
                return Err(Error::parse(
                    &feat_path,
                    lineno + 1,
                    format!("ragged row: {} values, expected {}", row.len(), d),
                ));
            }
        } else {
            dim = Some(row.len());
        }
        rows.push(row);
    }
    let n = rows.len();
    let features = DenseMatrix::from_rows(rows);

    let label_path = dir.join("labels.csv");
    let mut labels = Vec::with_capacity(n);
    for (lineno, line) in open_lines(&label_path)?.enumerate() {
        let line = line.map_err(|e| Error::io(&label_path, e))?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let v: usize = t
            .parse()
            .map_err(|_| Error::parse(&label_path, lineno + 1, format!("non-numeric token '{t}'")))?;
        labels.push(v);
    }
    if labels.len() != n {
        return Err(Error::Shape(format!(
            "{} labels for {} feature rows",
            labels.len(),
            n
        )));
    }

    let edge_path = dir.join("edges.tsv");
    let mut edges = Vec::new();
    for (lineno, line) in open_lines(&edge_path)?.enumerate() {
        let line = line.map_err(|e| Error::io(&edge_path, e))?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let mut it = t.split_whitespace();
        let parse_id = |tok: Option<&str>| -> Result<usize> {
            let tok = tok.ok_or_else(|| {
                Error::parse(&edge_path, lineno + 1, "expected two node ids")
            })?;
            tok.parse().map_err(|_| {
                Error::parse(&edge_path, lineno + 1, format!("non-numeric token '{tok}'"))
            })
        };
        let u = parse_id(it.next())?;
        let v = parse_id(it.next())?;
        if u >= n || v >= n {
            return Err(Error::parse(
                &edge_path,
                lineno + 1,
                format!("node id {} out of range (n = {})", u.max(v), n),
            ));
        }
        edges.push((u, v));
    }
    AttributedGraph::from_edges(n, &edges, features, Some(labels))
}

/// Write a graph in the generic directory format, including `meta.json`.
pub fn write_generic(g: &AttributedGraph, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let write = |name: &str, body: String| -> Result<()> {
        let path = dir.join(name);
        let mut f = std::fs::File::create(&path).map_err(|e| Error::io(&path, e))?;
        f.write_all(body.as_bytes()).map_err(|e| Error::io(&path, e))
    };

    let mut edges = String::new();
    for (u, v) in g.edges() {
        edges.push_str(&format!("{u}\t{v}\n"));
    }
    write("edges.tsv", edges)?;

    let mut feats = String::with_capacity(g.n * g.feature_dim() * 2);
    for i in 0..g.n {
        let row = g.features.row(i);
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                feats.push(',');
            }
            // f64 Display round-trips exactly.
            feats.push_str(&format!("{v}"));
        }
        feats.push('\n');
    }
    write("features.csv", feats)?;

    if let Some(labels) = &g.labels {
        let mut body = String::new();
        for l in labels {
            body.push_str(&format!("{l}\n"));
        }
        write("labels.csv", body)?;
    }

    write(
        "meta.json",
        format!(
            "{{\"n\": {}, \"d\": {}, \"classes\": {}}}\n",
            g.n,
            g.feature_dim(),
            g.class_count
        ),
    )
}

/// Outcome of ingesting the raw citation format.
pub struct IngestReport {
    pub graph: AttributedGraph,
    /// Citation lines referencing a paper id absent from the content file.
    pub dangling_edges: usize,
}

/// Parse the raw citation dataset format: a content file with lines
/// `<paper_id> <f_1> ... <f_d> <label>` and a cites file with lines
/// `<cited_id> <citing_id>`. Paper ids and label strings are interned in
/// first-seen order; citations are undirected; lines referencing unknown
/// ids are skipped and counted.
pub fn ingest_cora_content(content_path: &Path, cites_path: &Path) -> Result<IngestReport> {
    let mut id_map: HashMap<String, usize> = HashMap::new();
    let mut label_map: HashMap<String, usize> = HashMap::new();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut labels: Vec<usize> = Vec::new();
    let mut dim: Option<usize> = None;

    for (lineno, line) in open_lines(content_path)?.enumerate() {
        let line = line.map_err(|e| Error::io(content_path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 3 {
            return Err(Error::parse(
                content_path,
                lineno + 1,
                "expected <id> <features...> <label>",
            ));
        }
        let id = toks[0].to_string();
        let label_str = toks[toks.len() - 1];
        let feat_toks = &toks[1..toks.len() - 1];
        if let Some(d) = dim {
            if feat_toks.len() != d {
                return Err(Error::parse(
                    content_path,
                    lineno + 1,
                    format!("ragged row: {} features, expected {}", feat_toks.len(), d),
                ));
            }
        } else {
            dim = Some(feat_toks.len());
        }
        let mut row = Vec::with_capacity(feat_toks.len());
        for tok in feat_toks {
            let v: f64 = tok.parse().map_err(|_| {
                Error::parse(content_path, lineno + 1, format!("non-numeric token '{tok}'"))
            })?;
            row.push(v);
        }
        let next_id = id_map.len();
        if id_map.insert(id, next_id).is_some() {
            return Err(Error::parse(
                content_path,
                lineno + 1,
                "duplicate paper id",
            ));
        }
        let next_label = label_map.len();
        let label = *label_map.entry(label_str.to_string()).or_insert(next_label);
        rows.push(row);
        labels.push(label);
    }
    if rows.is_empty() {
        return Err(Error::parse(content_path, 0, "empty content file"));
    }
    let n = rows.len();
    let features = DenseMatrix::from_rows(rows);

    let mut edges = Vec::new();
    let mut dangling = 0usize;
    for (lineno, line) in open_lines(cites_path)?.enumerate() {
        let line = line.map_err(|e| Error::io(cites_path, e))?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let mut it = t.split_whitespace();
        let (a, b) = match (it.next(), it.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::parse(
                    cites_path,
                    lineno + 1,
                    "expected <cited_id> <citing_id>",
                ))
            }
        };
        match (id_map.get(a), id_map.get(b)) {
            (Some(&u), Some(&v)) => edges.push((u, v)),
            _ => dangling += 1,
        }
    }

    let graph = AttributedGraph::from_edges(n, &edges, features, Some(labels))?;
    Ok(IngestReport {
        graph,
        dangling_edges: dangling,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::l2_dist;
    use std::io::Write as _;

    fn two_node_path() -> AttributedGraph {
        AttributedGraph::from_edges(
            2,
            &[(0, 1)],
            DenseMatrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, 1.0]]),
            Some(vec![0, 1]),
        )
        .unwrap()
    }

    #[test]
    fn smallest_valid_graph() {
        let g = two_node_path();
        assert_eq!(g.n, 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.class_count, 2);
    }

    #[test]
    fn self_loops_and_duplicates_dropped() {
        let g = AttributedGraph::from_edges(
            4,
            &[(0, 1), (1, 0), (3, 3), (2, 3), (2, 3)],
            DenseMatrix::zeros(4, 1),
            None,
        )
        .unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(3), 1);
    }

    #[test]
    fn normalized_adjacency_two_node_path() {
        let g = two_node_path();
        let s = normalized_adjacency(&g).0.to_dense();
        for i in 0..2 {
            for j in 0..2 {
                assert!((s.get(i, j) - 0.5).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn normalized_adjacency_isolated_node() {
        let g = AttributedGraph::from_edges(1, &[], DenseMatrix::zeros(1, 1), None).unwrap();
        let s = normalized_adjacency(&g).0;
        assert_eq!(s.nnz(), 1);
        assert_eq!(s.values[0], 1.0);
    }

    #[test]
    fn normalized_adjacency_is_symmetric() {
        let g = AttributedGraph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)],
            DenseMatrix::zeros(5, 1),
            None,
        )
        .unwrap();
        let s = normalized_adjacency(&g).0.to_dense();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(s.get(i, j), s.get(j, i));
            }
        }
    }

    #[test]
    fn aggregation_zero_hops_is_identity() {
        let g = two_node_path();
        let s = normalized_adjacency(&g);
        let agg = aggregate_features(&s, &g.features, 0).unwrap();
        assert_eq!(agg.matrix, g.features);
    }

    #[test]
    fn aggregation_one_hop_two_node_path() {
        let g = two_node_path();
        let s = normalized_adjacency(&g);
        let agg = aggregate_features(&s, &g.features, 1).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((agg.matrix.get(i, j) - 0.5).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn aggregation_isolated_node_unchanged() {
        let g = AttributedGraph::from_edges(
            1,
            &[],
            DenseMatrix::from_rows(vec![vec![3.0, -1.5]]),
            None,
        )
        .unwrap();
        let s = normalized_adjacency(&g);
        for hops in 0..4 {
            let agg = aggregate_features(&s, &g.features, hops).unwrap();
            assert_eq!(agg.matrix.row(0), &[3.0, -1.5]);
        }
    }

    #[test]
    fn aggregation_composes() {
        let g = AttributedGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)],
            DenseMatrix::from_rows(
                (0..6).map(|i| vec![i as f64, (i * i) as f64]).collect(),
            ),
            None,
        )
        .unwrap();
        let s = normalized_adjacency(&g);
        let once = aggregate_features(&s, &g.features, 3).unwrap();
        let twice = {
            let inner = aggregate_features(&s, &g.features, 2).unwrap();
            aggregate_features(&s, &inner.matrix, 1).unwrap()
        };
        for (a, b) in once.matrix.data.iter().zip(&twice.matrix.data) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn homophily_examples() {
        let tri = AttributedGraph::from_edges(
            3,
            &[(0, 1), (1, 2), (2, 0)],
            DenseMatrix::zeros(3, 1),
            Some(vec![0, 0, 0]),
        )
        .unwrap();
        assert_eq!(tri.homophily_ratio().unwrap(), 1.0);

        let edge = AttributedGraph::from_edges(
            2,
            &[(0, 1)],
            DenseMatrix::zeros(2, 1),
            Some(vec![0, 1]),
        )
        .unwrap();
        assert_eq!(edge.homophily_ratio().unwrap(), 0.0);

        let unlabeled =
            AttributedGraph::from_edges(2, &[(0, 1)], DenseMatrix::zeros(2, 1), None).unwrap();
        assert!(matches!(
            unlabeled.homophily_ratio(),
            Err(Error::MissingLabels)
        ));
    }

    #[test]
    fn ingest_label_interning_and_dangling() {
        let dir = tempfile::tempdir().unwrap();
        let content = dir.path().join("x.content");
        let cites = dir.path().join("x.cites");
        let mut f = std::fs::File::create(&content).unwrap();
        writeln!(f, "p1\t1\t0\tA").unwrap();
        writeln!(f, "p2\t0\t1\tB").unwrap();
        writeln!(f, "p3\t1\t1\tA").unwrap();
        let mut f = std::fs::File::create(&cites).unwrap();
        writeln!(f, "p1\tp2").unwrap();
        writeln!(f, "p2\tp_unknown").unwrap();
        writeln!(f, "p3\tp3").unwrap();

        let report = ingest_cora_content(&content, &cites).unwrap();
        assert_eq!(report.graph.class_count, 2);
        assert_eq!(report.graph.labels.as_ref().unwrap(), &[0, 1, 0]);
        assert_eq!(report.dangling_edges, 1);
        // the p3 self-citation is dropped by construction
        assert_eq!(report.graph.edge_count(), 1);
    }

    #[test]
    fn generic_round_trip_is_identical() {
        let g = AttributedGraph::from_edges(
            4,
            &[(0, 1), (1, 2), (0, 3)],
            DenseMatrix::from_rows(vec![
                vec![0.25, -1.5],
                vec![1e-17, 3.0],
                vec![2.0, 2.0],
                vec![0.1, 0.30000000000000004],
            ]),
            Some(vec![0, 1, 2, 1]),
        )
        .unwrap();
        let dir = tempfile::tempdir().unwrap();
        write_generic(&g, dir.path()).unwrap();
        let g2 = load_generic(dir.path()).unwrap();
        assert_eq!(g.n, g2.n);
        assert_eq!(g.row_offsets, g2.row_offsets);
        assert_eq!(g.col_indices, g2.col_indices);
        assert_eq!(g.features, g2.features);
        assert_eq!(g.labels, g2.labels);

        // and once more: write/load is idempotent
        let dir2 = tempfile::tempdir().unwrap();
        write_generic(&g2, dir2.path()).unwrap();
        let g3 = load_generic(dir2.path()).unwrap();
        assert_eq!(g2.features, g3.features);
        assert_eq!(g2.col_indices, g3.col_indices);
    }

    #[test]
    fn load_errors_carry_file_and_line() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("features.csv"), "1.0,2.0\n3.0\n").unwrap();
        std::fs::write(dir.path().join("labels.csv"), "0\n0\n").unwrap();
        std::fs::write(dir.path().join("edges.tsv"), "0 1\n").unwrap();
        let err = load_generic(dir.path()).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("features.csv"), "{msg}");
        assert!(msg.contains(":2"), "{msg}");

        std::fs::write(dir.path().join("features.csv"), "1.0,2.0\n3.0,4.0\n").unwrap();
        std::fs::write(dir.path().join("edges.tsv"), "0 7\n").unwrap();
        let err = load_generic(dir.path()).unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");
    }

    #[test]
    fn missing_file_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        let err = load_generic(dir.path()).unwrap_err();
        assert!(err.to_string().contains("features.csv"));
    }

    #[test]
    fn row_normalization() {
        let mut g = AttributedGraph::from_edges(
            2,
            &[(0, 1)],
            DenseMatrix::from_rows(vec![vec![2.0, 2.0], vec![0.0, 0.0]]),
            None,
        )
        .unwrap();
        g.row_normalize_features();
        assert_eq!(g.features.row(0), &[0.5, 0.5]);
        assert_eq!(g.features.row(1), &[0.0, 0.0]);
    }

    // Dense oracle: the sparse aggregation pipeline matches explicit dense
    // matrix powers on small random graphs.
    #[test]
    fn aggregation_matches_dense_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..10 {
            let n = 3 + (trial % 5) * 6;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.2) {
                        edges.push((u, v));
                    }
                }
            }
            let feats = DenseMatrix::from_rows(
                (0..n)
                    .map(|_| (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect())
                    .collect(),
            );
            let g = AttributedGraph::from_edges(n, &edges, feats, None).unwrap();
            let s = normalized_adjacency(&g);
            let sparse = aggregate_features(&s, &g.features, 3).unwrap();

            let sd = s.0.to_dense();
            let dense = sd.matmul(&sd.matmul(&sd.matmul(&g.features)));
            let max_err = sparse
                .matrix
                .data
                .iter()
                .zip(&dense.data)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            assert!(max_err < 1e-10, "max err {max_err}");
        }
    }

    #[test]
    fn s_entries_bounded() {
        let g = AttributedGraph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4)],
            DenseMatrix::zeros(5, 1),
            None,
        )
        .unwrap();
        let s = normalized_adjacency(&g).0;
        for &v in &s.values {
            assert!(v > 0.0 && v <= 1.0);
        }
        let _ = l2_dist(&[0.0], &[1.0]);
    }
}
