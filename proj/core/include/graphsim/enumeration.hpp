#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "graphsim/graph.hpp"

namespace graphsim {

/// Byte string identifying an isomorphism class: the graph6 encoding of
/// the canonically relabeled graph.
using CanonicalCertificate = std::string;

/// Canonical certificate for n <= 10 (BudgetError beyond). Two graphs
/// have equal certificates iff they are isomorphic at this scale.
/// Computed by equitable degree-partition refinement followed by
/// individualize-and-refine search minimizing the adjacency bit string.
CanonicalCertificate canonical_certificate(const Graph& g);

/// One representative per isomorphism class of free trees on n vertices
/// (1 <= n <= 12), optionally restricted to maximum degree <= max_degree
/// (cap >= 2). Rooted level sequences are enumerated with the
/// Beyer-Hedetniemi successor rule and reduced to free trees by their
/// center-rooted canonical form. Output is sorted by that canonical form
/// and labeled "t<n>_<i>" ("a<n>_<i>" when capped), i 1-based and
/// zero-padded.
std::vector<Graph> enumerate_trees(int n,
                                   std::optional<int> max_degree = {});

/// One representative per isomorphism class of connected simple graphs
/// on n vertices (1 <= n <= 7; BudgetError beyond). Iterates all
/// 2^C(n,2) labeled graphs, filters connectivity, deduplicates by
/// canonical certificate. Output is sorted by certificate bytes and
/// labeled "n<n>_<i>".
std::vector<Graph> enumerate_connected_graphs(int n);

/// Graphs from a graph6 file, one per line, in file order, labeled
/// "g1", "g2", ... Duplicates are kept. An optional ">>graph6<<" header
/// is skipped; LF and CRLF both accepted; blank lines ignored. A
/// malformed line aborts with a ParseError naming the line.
std::vector<Graph> load_family(const std::filesystem::path& path);

/// One graph6 line per graph, LF endings.
void write_graph6_file(const std::filesystem::path& path,
                       const std::vector<Graph>& family);

} // namespace graphsim
