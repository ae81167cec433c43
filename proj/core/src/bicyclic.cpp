#include "zagreb/bicyclic.hpp"

#include <numeric>

#include "zagreb/constructor.hpp"
#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

// Appends a cycle through `anchor` using `length - 1` fresh vertices.
void add_cycle(SimpleGraph& g, int anchor, int length, int& next) {
  int prev = anchor;
  for (int i = 1; i < length; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
  g.add_edge(prev, anchor);
}

// Appends a path of `length` edges from `from` to `to`; to == 0 means the
// path ends in a fresh vertex.
void add_path(SimpleGraph& g, int from, int to, int length, int& next) {
  int prev = from;
  const int fresh = to == 0 ? length : length - 1;
  for (int i = 0; i < fresh; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
  if (to != 0) g.add_edge(prev, to);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

BicyclicWitness witness(BicyclicFamily family, std::vector<int> params,
                        SimpleGraph graph) {
  return {family, std::move(params), std::move(graph)};
}

}  // namespace

std::string_view to_string(BicyclicFamily family) {
  switch (family) {
    case BicyclicFamily::TwoCyclesSharedVertex: return "TwoCyclesSharedVertex";
    case BicyclicFamily::TwoCyclesPath: return "TwoCyclesPath";
    case BicyclicFamily::Theta: return "Theta";
    case BicyclicFamily::SharedVertexWithPaths: return "SharedVertexWithPaths";
    case BicyclicFamily::BmStar: return "BmStar";
  }
  return "BmStar";
}

std::string BicyclicWitness::label() const {
  auto join = [](auto first, auto last) {
    std::string out;
    for (auto it = first; it != last; ++it) {
      if (it != first) out += ',';
      out += std::to_string(*it);
    }
    return out;
  };
  switch (family) {
    case BicyclicFamily::TwoCyclesSharedVertex:
    case BicyclicFamily::TwoCyclesPath:
      return "B(" + join(params.begin(), params.end()) + ")";
    case BicyclicFamily::Theta:
      return "B(P" + std::to_string(params.at(0)) + ",P" +
             std::to_string(params.at(1)) + ",P" + std::to_string(params.at(2)) +
             ")";
    case BicyclicFamily::SharedVertexWithPaths:
      return "B(" + join(params.begin(), params.begin() + 2) + ";" +
             join(params.begin() + 2, params.end()) + ")";
    case BicyclicFamily::BmStar:
      return "B_M*";
  }
  return {};
}

SimpleGraph build_b_pq(int p, int q) {
  require(p >= 3 && q >= 3, "B(p,q) requires p, q >= 3");
  SimpleGraph g(p + q - 1);
  int next = 2;
  add_cycle(g, 1, p, next);
  add_cycle(g, 1, q, next);
  return g;
}

SimpleGraph build_b_prq(int p, int r, int q) {
  require(p >= 3 && q >= 3, "B(p,r,q) requires p, q >= 3");
  require(r >= 1, "B(p,r,q) requires r >= 1");
  SimpleGraph g(p + q + r - 1);
  int next = 3;
  add_cycle(g, 1, p, next);
  add_cycle(g, 2, q, next);
  add_path(g, 1, 2, r, next);
  return g;
}

SimpleGraph build_theta(int k, int l, int m) {
  require(m >= 1 && m <= std::min(k, l),
          "theta graph requires 1 <= m <= min(k,l)");
  require(m > 1 || (k > 1 && l > 1),
          "theta graph with two unit paths has a multi-edge");
  SimpleGraph g(k + l + m - 1);
  int next = 3;
  add_path(g, 1, 2, k, next);
  add_path(g, 1, 2, l, next);
  add_path(g, 1, 2, m, next);
  return g;
}

SimpleGraph build_b_pq_paths(int p, int q, std::span<const int> lengths) {
  require(p >= 3 && q >= 3, "B(p,q;...) requires p, q >= 3");
  require(!lengths.empty(), "B(p,q;...) requires at least one pendant path");
  for (int len : lengths) require(len >= 1, "pendant path lengths must be >= 1");
  const int total = std::accumulate(lengths.begin(), lengths.end(), 0);
  SimpleGraph g(p + q - 1 + total);
  int next = 2;
  add_cycle(g, 1, p, next);
  add_cycle(g, 1, q, next);
  for (int len : lengths) add_path(g, 1, 0, len, next);
  return g;
}

BicyclicMaxResult bicyclic_max(const DegreeSequence& seq) {
  const auto cls = classify(seq);
  if (cls.kind != CycleKind::Bicyclic) {
    throw DomainError("sequence " + seq.to_string() + " is not bicyclic");
  }
  const int n = seq.size();
  const int s = cls.leaf_count;
  const int d1 = seq[0];
  const int d2 = seq[1];

  BicyclicMaxResult out;
  if (seq.back() == 2) {
    if (d2 >= 3) {
      require(d1 == 3 && d2 == 3 && cls.degree2_count == n - 2,
              "bicyclic sequence with d_n = 2 and d2 >= 3 must be (3,3,2,...,2)");
      out.case_id = 1;
      out.value = 4LL * n + 17;
      out.witness = n >= 6
                        ? witness(BicyclicFamily::TwoCyclesPath, {3, 1, n - 3},
                                  build_b_prq(3, 1, n - 3))
                        : witness(BicyclicFamily::Theta, {n - 2, 2, 1},
                                  build_theta(n - 2, 2, 1));
    } else {
      require(d1 == 4, "bicyclic sequence with d2 = 2 and d_n = 2 must be (4,2,...,2)");
      out.case_id = 2;
      out.value = 4LL * n + 20;
      out.witness = witness(BicyclicFamily::TwoCyclesSharedVertex, {3, n - 2},
                            build_b_pq(3, n - 2));
    }
  } else if (d2 == 2) {
    require(d1 == s + 4, "bicyclic sequence with d2 = 2 needs d1 = s + 4");
    std::vector<int> lengths;
    // s <= (n-5)/2, compared without division.
    if (2 * s <= n - 5) {
      out.case_id = 3;
      out.value = 4LL * n + 2LL * s * s + 10LL * s + 20;
      lengths.push_back(n - 5 - 2 * (s - 1));
      lengths.insert(lengths.end(), static_cast<std::size_t>(s - 1), 2);
    } else {
      out.case_id = 4;
      out.value = 1LL * s * n + 6LL * n + s + 10;
      lengths.assign(static_cast<std::size_t>(n - s - 5), 2);
      lengths.insert(lengths.end(), static_cast<std::size_t>(s - (n - s - 5)), 1);
    }
    std::vector<int> params{3, 3};
    params.insert(params.end(), lengths.begin(), lengths.end());
    out.witness = witness(BicyclicFamily::SharedVertexWithPaths, std::move(params),
                          build_b_pq_paths(3, 3, lengths));
  } else {
    auto trace = construct_bm_star(seq);
    out.case_id = 5;
    out.value = second_zagreb(trace.graph);
    out.witness = witness(BicyclicFamily::BmStar, {}, std::move(trace.graph));
  }
  require(degree_sequence_of(out.witness.graph) == seq,
          "witness does not realize " + seq.to_string());
  return out;
}

}  // namespace zagreb
