#include "graphsim/csv.hpp"

#include <fstream>

#include "graphsim/edit_distance.hpp"
#include "graphsim/errors.hpp"
#include "graphsim/format.hpp"

namespace graphsim {

std::string pair_table_csv(const PairTable& table) {
  std::size_t with_rescaled = 0;
  for (const PairRow& row : table.rows) {
    if (row.rescaled) ++with_rescaled;
  }
  if (with_rescaled != 0 && with_rescaled != table.rows.size()) {
    throw InputError("rescaled column present on only some rows");
  }
  const bool rescaled = with_rescaled != 0;

  std::string out = rescaled ? "label_a,label_b,d_p,s_p,s_prime\n"
                             : "label_a,label_b,d_p,s_p\n";
  for (const PairRow& row : table.rows) {
    out += row.label_a;
    out += ',';
    out += row.label_b;
    out += ',';
    out += format_double(row.distance);
    out += ',';
    out += format_double(row.similarity);
    if (rescaled) {
      out += ',';
      out += format_double(*row.rescaled);
    }
    out += '\n';
  }
  return out;
}

std::string index_table_csv(const std::vector<Graph>& family, IndexSet set) {
  std::string out = "label";
  const auto ids = set == IndexSet::Core
                       ? std::vector<IndexId>(kCoreIndices.begin(),
                                              kCoreIndices.end())
                       : std::vector<IndexId>(kExtendedIndices.begin(),
                                              kExtendedIndices.end());
  for (IndexId id : ids) {
    out += ',';
    out += index_name(id);
  }
  out += '\n';
  for (const Graph& g : family) {
    const IndexVector vec = compute_vector(g, set);
    out += g.label();
    for (double v : vec.values) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string ged_table_csv(const std::vector<Graph>& family) {
  std::string out = "label_a,label_b,ged,s_ged\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const EditDistanceResult result = ged(family[i], family[j]);
      out += family[i].label();
      out += ',';
      out += family[j].label();
      out += ',';
      out += std::to_string(result.ged);
      out += ',';
      out += format_double(1.0 / (result.ged + 1));
      out += '\n';
    }
  }
  return out;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot open " + path.string() + " for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw InputError("write failed for " + path.string());
}

} // namespace graphsim
