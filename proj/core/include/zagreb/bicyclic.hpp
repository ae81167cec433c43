#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/sequences.hpp"

namespace zagreb {

enum class BicyclicFamily {
  TwoCyclesSharedVertex,   // B(p,q)
  TwoCyclesPath,           // B(p,r,q)
  Theta,                   // B(P_k,P_l,P_m)
  SharedVertexWithPaths,   // B(p,q;p_1,...,p_s)
  BmStar,                  // layered construction with c = 1
};

std::string_view to_string(BicyclicFamily family);

struct BicyclicWitness {
  BicyclicFamily family = BicyclicFamily::BmStar;
  std::vector<int> params;
  SimpleGraph graph;

  /// Short family label such as "B(3,3)" or "B(3,3;2,2)".
  std::string label() const;
};

struct BicyclicMaxResult {
  int case_id = 0;  // 1..5
  M2Value value = 0;
  BicyclicWitness witness;
};

/// Cycles C_p and C_q glued at vertex 1. Order p+q-1.
SimpleGraph build_b_pq(int p, int q);
/// Cycles C_p and C_q joined by a path of length r >= 1. Order p+q+r-1.
SimpleGraph build_b_prq(int p, int r, int q);
/// Three internally disjoint x-y paths of lengths k, l, m with
/// 1 <= m <= min(k,l). Order k+l+m-1; m = 1 is the edge xy.
SimpleGraph build_theta(int k, int l, int m);
/// B(p,q) with pendant paths of the given lengths hung on the shared vertex.
SimpleGraph build_b_pq_paths(int p, int q, std::span<const int> lengths);

/// Exact maximum second Zagreb index over connected bicyclic realizations,
/// with a witness graph attaining it.
BicyclicMaxResult bicyclic_max(const DegreeSequence& seq);

}  // namespace zagreb
