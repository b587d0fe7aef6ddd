#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphsim/graph.hpp"

namespace graphsim {

/// Fixed-width bit vector with a cached popcount. Width must be a
/// power of two.
class Fingerprint {
public:
  explicit Fingerprint(int width);

  int width() const { return width_; }
  int popcount() const { return popcount_; }

  void set(int bit);
  bool test(int bit) const;

  bool operator==(const Fingerprint& other) const {
    return width_ == other.width_ && words_ == other.words_;
  }

  friend double tanimoto(const Fingerprint& a, const Fingerprint& b);

private:
  int width_ = 0;
  int popcount_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Circular fingerprint of an unlabeled connected graph.
///
/// Vertex identifiers start from the degree and are iterated radius
/// times, each round mixing a vertex's previous identifier with the
/// sorted identifiers of its neighbors (splitmix64 chain, frozen for
/// reproducibility). The identifier of vertex v at round r is emitted
/// as a feature iff r = 0 or the distance-r ball around v is strictly
/// larger than the distance-(r-1) ball, so an environment that stopped
/// growing is recorded once. Features map to bit positions modulo the
/// width. Isomorphic graphs get identical fingerprints.
Fingerprint morgan_fingerprint(const Graph& g, int radius = 2,
                               int bits = 2048);

/// |a AND b| / |a OR b|, in [0,1], 1 iff bitwise equal. Throws
/// InputError on width mismatch or when both fingerprints are empty.
double tanimoto(const Fingerprint& a, const Fingerprint& b);

/// How degenerate a list of scores is.
struct DegeneracyProfile {
  int distinct = 0;         // distinct values after rounding to 12 decimals
  int max_multiplicity = 0; // size of the largest tie group
};

/// Rounds to 12 decimals (absorbing float noise between genuinely
/// equal scores) and counts distinct values and the largest tie.
/// Values must lie in [-1e6, 1e6]; the list must be non-empty.
DegeneracyProfile degeneracy_profile(std::span<const double> values);

} // namespace graphsim
