#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zagreb {

/// Non-increasing sequence of positive vertex degrees.
///
/// Construction sorts the input (recording whether a reorder happened) and
/// rejects entries outside [1, n-1] and odd totals with DomainError.
class DegreeSequence {
 public:
  static DegreeSequence from_degrees(std::vector<int> degrees);

  /// Accepts "4,4,3,3,2,1,1" and run-length terms such as "4^5,1^8".
  static DegreeSequence parse(std::string_view text);

  std::span<const int> degrees() const noexcept { return degrees_; }
  int size() const noexcept { return static_cast<int>(degrees_.size()); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int front() const { return degrees_.front(); }
  int back() const { return degrees_.back(); }
  std::int64_t sum() const noexcept { return sum_; }
  bool was_reordered() const noexcept { return reordered_; }

  /// Comma form, e.g. "4,4,3,3,2,1,1".
  std::string to_string() const;

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.degrees_ == b.degrees_;
  }
  friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
    return a.degrees_ <=> b.degrees_;
  }

 private:
  explicit DegreeSequence(std::vector<int> degrees, bool reordered);

  std::vector<int> degrees_;
  std::int64_t sum_ = 0;
  bool reordered_ = false;
};

enum class CycleKind { Tree, Unicyclic, Bicyclic, Multicyclic };

std::string_view to_string(CycleKind kind);

struct SequenceClass {
  int excess = 0;  // |E| - n for any connected realization
  CycleKind kind = CycleKind::Tree;
  int leaf_count = 0;
  int degree2_count = 0;
};

/// Erdős–Gallai test. Accepts any non-negative entries in any order.
bool is_graphic(std::span<const int> degrees);
bool is_graphic(const DegreeSequence& seq);

bool is_connected_realizable(const DegreeSequence& seq);

/// Throws DomainError when the sequence has no connected realization.
SequenceClass classify(const DegreeSequence& seq);

/// Outcome of checking the four structural conditions under which the
/// layered BFS construction is optimal.
struct TheoremConditions {
  int excess = 0;
  bool sum_condition = false;     // (i)   sum = 2(n+c), c >= -1
  bool head_condition = false;    // (ii)  d1 >= d2 >= c+2
  bool plateau_condition = false; // (iii) d3 >= d4 = ... = d_{c+3} for c >= 1
  bool leaf_condition = false;    // (iv)  d_n = 1

  bool verdict() const noexcept {
    return sum_condition && head_condition && plateau_condition &&
           leaf_condition;
  }
};

TheoremConditions check_theorem_conditions(const DegreeSequence& seq);

enum class MajorizationOrder { Equal, ALessB, BLessA, Incomparable };

std::string_view to_string(MajorizationOrder order);

/// Prefix-sum dominance. Sequences of different length or total are
/// incomparable.
MajorizationOrder majorization_compare(const DegreeSequence& a,
                                       const DegreeSequence& b);

/// Unit-transfer path from `from` up to `to` (inclusive at both ends).
/// Every consecutive pair differs by +1/-1 in exactly two positions.
/// Throws DomainError unless from ⊴ to and both are graphic.
std::vector<DegreeSequence> majorization_chain(const DegreeSequence& from,
                                               const DegreeSequence& to);

/// All connected-realizable sequences of order n with the given excess,
/// in descending lexicographic order.
std::vector<DegreeSequence> connected_sequences(int n, int excess);

}  // namespace zagreb
