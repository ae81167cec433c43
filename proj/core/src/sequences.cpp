#include "zagreb/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

long parse_integer(std::string_view token, std::string_view whole) {
  token = trim(token);
  long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("cannot parse '" + std::string(token) +
                     "' in degree sequence '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::int64_t> prefix_sums(std::span<const int> d) {
  std::vector<std::int64_t> out(d.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc += d[i];
    out[i] = acc;
  }
  return out;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees, bool reordered)
    : degrees_(std::move(degrees)), reordered_(reordered) {
  sum_ = std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

DegreeSequence DegreeSequence::from_degrees(std::vector<int> degrees) {
  if (degrees.empty()) throw DomainError("degree sequence is empty");
  const bool sorted = std::is_sorted(degrees.begin(), degrees.end(),
                                     std::greater<>{});
  if (!sorted) std::sort(degrees.begin(), degrees.end(), std::greater<>{});
  const int n = static_cast<int>(degrees.size());
  if (degrees.back() < 1) {
    throw DomainError("degree sequence contains an entry below 1");
  }
  if (degrees.front() > n - 1) {
    throw DomainError("degree " + std::to_string(degrees.front()) +
                      " exceeds n-1 = " + std::to_string(n - 1));
  }
  DegreeSequence seq(std::move(degrees), !sorted);
  if (seq.sum_ % 2 != 0) {
    throw DomainError("degree sum " + std::to_string(seq.sum_) + " is odd");
  }
  return seq;
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
  const auto whole = trim(text);
  if (whole.empty()) throw ParseError("empty degree sequence");
  std::vector<int> degrees;
  std::size_t pos = 0;
  while (pos <= whole.size()) {
    auto comma = whole.find(',', pos);
    if (comma == std::string_view::npos) comma = whole.size();
    const auto term = whole.substr(pos, comma - pos);
    const auto caret = term.find('^');
    const long degree = parse_integer(term.substr(0, caret), whole);
    long repeat = 1;
    if (caret != std::string_view::npos) {
      repeat = parse_integer(term.substr(caret + 1), whole);
      if (repeat < 1) {
        throw ParseError("repeat count must be positive in '" +
                         std::string(whole) + "'");
      }
    }
    if (degree < 0 || degree > 1'000'000 || repeat > 1'000'000) {
      throw ParseError("value out of range in '" + std::string(whole) + "'");
    }
    degrees.insert(degrees.end(), static_cast<std::size_t>(repeat),
                   static_cast<int>(degree));
    pos = comma + 1;
  }
  return from_degrees(std::move(degrees));
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

std::string_view to_string(CycleKind kind) {
  switch (kind) {
    case CycleKind::Tree: return "tree";
    case CycleKind::Unicyclic: return "unicyclic";
    case CycleKind::Bicyclic: return "bicyclic";
    case CycleKind::Multicyclic: return "multicyclic";
  }
  return "unknown";
}

bool is_graphic(std::span<const int> degrees) {
  std::vector<int> d(degrees.begin(), degrees.end());
  std::sort(d.begin(), d.end(), std::greater<>{});
  if (!d.empty() && d.back() < 0) return false;
  const std::int64_t total = std::accumulate(d.begin(), d.end(), std::int64_t{0});
  if (total % 2 != 0) return false;
  const auto n = static_cast<std::int64_t>(d.size());
  std::int64_t lhs = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    lhs += d[k - 1];
    std::int64_t rhs = k * (k - 1);
    for (std::int64_t i = k; i < n; ++i) rhs += std::min<std::int64_t>(d[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_graphic(const DegreeSequence& seq) { return is_graphic(seq.degrees()); }

bool is_connected_realizable(const DegreeSequence& seq) {
  const std::int64_t n = seq.size();
  return is_graphic(seq) && seq.back() >= 1 && seq.sum() >= 2 * (n - 1);
}

SequenceClass classify(const DegreeSequence& seq) {
  if (!is_connected_realizable(seq)) {
    throw DomainError("sequence " + seq.to_string() +
                      " has no connected realization");
  }
  SequenceClass out;
  out.excess = static_cast<int>(seq.sum() / 2 - seq.size());
  switch (out.excess) {
    case -1: out.kind = CycleKind::Tree; break;
    case 0: out.kind = CycleKind::Unicyclic; break;
    case 1: out.kind = CycleKind::Bicyclic; break;
    default: out.kind = CycleKind::Multicyclic; break;
  }
  for (int d : seq.degrees()) {
    if (d == 1) ++out.leaf_count;
    if (d == 2) ++out.degree2_count;
  }
  return out;
}

TheoremConditions check_theorem_conditions(const DegreeSequence& seq) {
  TheoremConditions out;
  const int n = seq.size();
  const std::int64_t c = seq.sum() / 2 - n;
  out.excess = static_cast<int>(c);
  out.sum_condition = seq.sum() % 2 == 0 && c >= -1;
  out.head_condition = n >= 2 && seq[0] >= seq[1] && seq[1] >= c + 2;
  if (c <= 0) {
    out.plateau_condition = true;
  } else if (c + 3 <= n) {
    // Positions are 1-based in the condition: d3 >= d4 = d5 = ... = d_{c+3}.
    out.plateau_condition = seq[2] >= seq[3];
    for (std::int64_t i = 4; i < c + 3; ++i) {
      out.plateau_condition = out.plateau_condition && seq[i] == seq[3];
    }
  }
  out.leaf_condition = seq.back() == 1;
  return out;
}

std::string_view to_string(MajorizationOrder order) {
  switch (order) {
    case MajorizationOrder::Equal: return "Equal";
    case MajorizationOrder::ALessB: return "ALessB";
    case MajorizationOrder::BLessA: return "BLessA";
    case MajorizationOrder::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

MajorizationOrder majorization_compare(const DegreeSequence& a,
                                       const DegreeSequence& b) {
  if (a.size() != b.size() || a.sum() != b.sum()) {
    return MajorizationOrder::Incomparable;
  }
  if (a == b) return MajorizationOrder::Equal;
  const auto pa = prefix_sums(a.degrees());
  const auto pb = prefix_sums(b.degrees());
  bool a_below = true;
  bool b_below = true;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    a_below = a_below && pa[i] <= pb[i];
    b_below = b_below && pb[i] <= pa[i];
  }
  if (a_below) return MajorizationOrder::ALessB;
  if (b_below) return MajorizationOrder::BLessA;
  return MajorizationOrder::Incomparable;
}

std::vector<DegreeSequence> majorization_chain(const DegreeSequence& from,
                                               const DegreeSequence& to) {
  const auto order = majorization_compare(from, to);
  if (order != MajorizationOrder::Equal && order != MajorizationOrder::ALessB) {
    throw DomainError(from.to_string() + " is not majorized by " +
                      to.to_string());
  }
  if (!is_graphic(from) || !is_graphic(to)) {
    throw DomainError("majorization chain requires graphic endpoints");
  }
  std::vector<DegreeSequence> chain{from};
  std::vector<int> current(from.degrees().begin(), from.degrees().end());
  const auto target = to.degrees();
  const auto n = current.size();
  while (!std::equal(current.begin(), current.end(), target.begin())) {
    // First differing position necessarily has current < target.
    std::size_t p = 0;
    while (current[p] == target[p]) ++p;
    std::size_t q = p + 1;
    while (current[q] <= target[q]) ++q;
    // Decrement the last entry of q's block so the order is preserved.
    while (q + 1 < n && current[q + 1] == current[q]) ++q;
    ++current[p];
    --current[q];
    chain.push_back(DegreeSequence::from_degrees(current));
  }
  return chain;
}

namespace {

void partitions(int slots, int total, int cap, std::vector<int>& current,
                std::vector<DegreeSequence>& out) {
  if (slots == 0) {
    if (total == 0) {
      auto seq = DegreeSequence::from_degrees(current);
      if (is_connected_realizable(seq)) out.push_back(std::move(seq));
    }
    return;
  }
  // Remaining slots each need at least 1.
  for (int d = std::min(cap, total - (slots - 1)); d >= 1; --d) {
    if (static_cast<long>(d) * slots < total) break;
    current.push_back(d);
    partitions(slots - 1, total - d, d, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<DegreeSequence> connected_sequences(int n, int excess) {
  std::vector<DegreeSequence> out;
  const int total = 2 * (n + excess);
  if (n < 2 || excess < -1 || total < n) return out;
  std::vector<int> current;
  partitions(n, total, n - 1, current, out);
  return out;
}

}  // namespace zagreb
