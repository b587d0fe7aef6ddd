#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "graphsim/graph.hpp"
#include "graphsim/indices.hpp"
#include "graphsim/similarity.hpp"

namespace graphsim {

/// Pair table as CSV text: header `label_a,label_b,d_p,s_p` plus an
/// `s_prime` column when every row carries a rescaled value (mixed
/// presence is an InputError). Doubles in shortest round-trip form,
/// LF line endings.
std::string pair_table_csv(const PairTable& table);

/// Per-graph index table: header `label,<index names>`, one row per
/// family member in family order.
std::string index_table_csv(const std::vector<Graph>& family, IndexSet set);

/// Exact edit distances for every unordered family pair in family
/// order: header `label_a,label_b,ged,s_ged`.
std::string ged_table_csv(const std::vector<Graph>& family);

/// Writes text verbatim (binary stream, no newline translation).
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

} // namespace graphsim
