#pragma once

#include <cstdint>
#include <functional>

#include "zagreb/graph.hpp"
#include "zagreb/sequences.hpp"

namespace zagreb {

inline constexpr int kDefaultOracleCap = 10;
/// Bitmask storage bounds every search to at most this many vertices.
inline constexpr int kMaxSearchOrder = 32;

enum class Labeling {
  /// Every labelled graph on 1..n whose sorted degree sequence is `seq`.
  AllLabelings,
  /// Only graphs in which vertex i has degree seq[i-1].
  FixedDegrees,
};

struct EnumerationOptions {
  bool connected_only = false;
  Labeling labeling = Labeling::AllLabelings;
  int cap = kDefaultOracleCap;
};

/// Calls `visit` once per realization in a deterministic order.
/// Throws CapExceeded when n > cap and DomainError on non-graphic input.
void enumerate_realizations(const DegreeSequence& seq,
                            const EnumerationOptions& options,
                            const std::function<void(const SimpleGraph&)>& visit);

std::uint64_t count_realizations(const DegreeSequence& seq,
                                 const EnumerationOptions& options);

struct OracleOptions {
  int cap = kDefaultOracleCap;
  unsigned workers = 1;
};

struct OracleResult {
  M2Value max_m2 = 0;
  /// Among all maximisers, the one with the smallest canonical edge list.
  SimpleGraph witness;
  /// Connected realizations with vertex i of degree d_i.
  std::uint64_t realization_count = 0;
  double elapsed_ms = 0.0;
};

/// Exact maximum of the second Zagreb index over connected realizations.
/// Vertex i is fixed to degree d_i; every unlabelled realization appears
/// under such a labelling, so the maximum is unaffected. Results other than
/// elapsed_ms do not depend on `workers`.
///
/// Throws CapExceeded, DomainError (non-graphic) or EmptyRealizationSet.
OracleResult oracle_max_m2(const DegreeSequence& seq,
                           const OracleOptions& options = {});

}  // namespace zagreb
