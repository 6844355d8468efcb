#include "weylgray/cayley.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace weylgray {

SignedPerm simple_generator(GroupType type, int k, int n) {
  const int top = type == GroupType::A ? n - 1 : n;
  if (k < 1 || k > top || (type == GroupType::D && n < 2)) {
    throw std::out_of_range("simple generator s_" + std::to_string(k) + " undefined for " +
                            to_char(type) + std::to_string(n));
  }
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) word[static_cast<std::size_t>(p - 1)] = p;
  auto at = [&](int p) -> int& { return word[static_cast<std::size_t>(p - 1)]; };
  if (k < n) {
    std::swap(at(k), at(k + 1));
  } else if (type == GroupType::B) {
    at(n) = -n;
  } else {
    at(n - 1) = -n;
    at(n) = -(n - 1);
  }
  return SignedPerm(std::move(word));
}

ReflectionWord reflection_word(GroupType type, int i, int j, int n) {
  bool ok = i >= 1 && i <= j;
  switch (type) {
    case GroupType::A: ok = ok && j < n; break;
    case GroupType::B: ok = ok && j <= n; break;
    case GroupType::D: ok = ok && (j < n || (j == n && i < n)); break;
  }
  if (!ok) {
    throw std::out_of_range("t_{" + std::to_string(i) + "," + std::to_string(j) +
                            "} undefined for " + to_char(type) + std::to_string(n));
  }
  ReflectionWord r{type, i, j, {}, SignedPerm::identity(n)};
  if (type == GroupType::D && j == n) {
    for (int k = i; k <= n - 2; ++k) r.generators.push_back(k);
    r.generators.push_back(n - 1);
    r.generators.push_back(n);
    for (int k = n - 2; k >= i; --k) r.generators.push_back(k);
  } else {
    for (int k = i; k < j; ++k) r.generators.push_back(k);
    r.generators.push_back(j);
    for (int k = j - 1; k >= i; --k) r.generators.push_back(k);
  }
  for (int k : r.generators) r.element = compose(r.element, simple_generator(type, k, n));
  return r;
}

SignedPerm reflection(GroupType type, int i, int j, int n) {
  return reflection_word(type, i, j, n).element;
}

GeneratorSet::GeneratorSet(GroupType type, int n, RangeReading reading)
    : type_(type), rank_(n), reading_(reading) {
  const bool amended = reading == RangeReading::Amended;
  auto t = [&](int i, int j) { return reflection(type, i, j, n); };
  auto mul = [](const SignedPerm& a, const SignedPerm& b) { return compose(a, b); };

  switch (type) {
    case GroupType::A:
      subsets_.resize(2);
      for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) add(1, t(i, j));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            add(2, mul(t(i, j - 1), t(j, k - 1)));
            add(2, mul(t(j, k - 1), t(i, j - 1)));
          }
      break;

    case GroupType::B:
      subsets_.resize(4);
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) add(1, t(i, j));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j < n || (amended && j == n); ++j) add(2, mul(t(i, n), t(j, n)));
      for (int i = 1; i <= n; ++i)
        for (int j = amended ? i : i + 1; j < n; ++j) add(3, mul(t(i, j), t(j + 1, n)));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) add(4, mul(t(j, k - 1), t(i, j - 1)));
      break;

    case GroupType::D:
      subsets_.resize(4);
      for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) add(1, t(i, j));
      if (amended)
        for (int i = 1; i < n; ++i) add(1, t(i, n));
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) add(2, mul(t(i, n), t(j, n)));
      // t_{j+1,n} and t_{k,n} need j + 1 < n and k < n.
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j + 1 < n; ++j)
          for (int k = j + 2; k < n; ++k) add(3, mul(mul(t(i, j), t(j + 1, n)), t(k, n)));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            const SignedPerm rot = mul(t(j, k - 1), t(i, j - 1));
            add(4, rot);
            if (j < n) add(4, mul(mul(rot, t(i, n)), t(j, n)));
            if (k < n) add(4, mul(mul(rot, t(i, n)), t(k, n)));
          }
      break;
  }
}

void GeneratorSet::add(int label, const SignedPerm& g) {
  if (g.is_identity()) return;
  auto& list = subsets_[static_cast<std::size_t>(label - 1)];
  const std::uint32_t bit = 1u << (label - 1);
  const auto it = members_.find(g);
  if (it == members_.end() || !(it->second & bit)) list.push_back(g);
  members_[g] |= bit;
  members_[inverse(g)] |= bit;
}

const std::vector<SignedPerm>& GeneratorSet::subset(int label) const {
  if (label < 1 || label > subset_count()) throw std::out_of_range("no such subset label");
  return subsets_[static_cast<std::size_t>(label - 1)];
}

std::uint32_t GeneratorSet::labels_of(const SignedPerm& g) const {
  const auto it = members_.find(g);
  return it == members_.end() ? 0u : it->second;
}

bool GeneratorSet::contains(const SignedPerm& g) const { return labels_of(g) != 0; }

bool GeneratorSet::contains_in(const SignedPerm& g, std::initializer_list<int> labels) const {
  const std::uint32_t have = labels_of(g);
  for (int label : labels) {
    if (have & (1u << (label - 1))) return true;
  }
  return false;
}

GeneratorSet generating_set(GroupType type, int n, RangeReading reading) {
  return GeneratorSet(type, n, reading);
}

bool is_edge(const SignedPerm& u, const SignedPerm& v, const GeneratorSet& t) {
  if (u.rank() != v.rank()) throw std::invalid_argument("is_edge: rank mismatch");
  return u != v && t.contains(compose(inverse(u), v));
}

ValidationReport verify_hamilton_cycle(const CodeList& list, const GeneratorSet& t,
                                       std::initializer_list<int> labels,
                                       const EnumerationLimits& limits) {
  ValidationReport report;
  check_coverage(list, report, limits);
  const std::size_t m = list.size();
  if (m < 2) return report;
  for (std::size_t i = 0; i < m; ++i) {
    const SignedPerm& u = list[i];
    const SignedPerm& v = list[(i + 1) % m];
    if (u.rank() != t.rank() || v.rank() != t.rank()) continue;
    ++report.pairs_checked;
    report.max_distance = std::max(report.max_distance, hamming(u, v));
    const SignedPerm q = compose(inverse(u), v);
    const bool ok = u != v && (labels.size() == 0 ? t.contains(q) : t.contains_in(q, labels));
    if (!ok) {
      report.add({ViolationKind::Edge, i, u, v, classify_move(u, v),
                  "quotient " + q.to_string() + " not in the connecting set"});
    }
  }
  return report;
}

}  // namespace weylgray
