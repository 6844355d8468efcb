#include "weylgray/code_list.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace weylgray {

namespace {

SignedPerm widen(const SignedPerm& w, int rank) {
  if (w.rank() == rank) return w;
  std::vector<int> word(w.word().begin(), w.word().end());
  for (int k = w.rank() + 1; k <= rank; ++k) word.push_back(k);
  return SignedPerm(std::move(word));
}

void require_free(const SignedPerm& w, int letter) {
  if (letter <= w.rank() && w.at(letter) != letter) {
    throw std::invalid_argument("letter " + std::to_string(letter) + " already used by " +
                                w.to_string());
  }
}

}  // namespace

CodeList make_code_list(GroupType type, int rank, const std::vector<std::vector<int>>& words) {
  CodeList out{type, rank, {}};
  out.entries.reserve(words.size());
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) != rank) {
      throw std::invalid_argument("word length differs from list rank");
    }
    out.entries.emplace_back(w);
  }
  return out;
}

CodeList relabel_list(const CodeList& list, const Relabeling& f) {
  const int universe = std::max(list.rank, f.max_image());
  CodeList out{list.type, universe, {}};
  out.entries.reserve(list.size());
  for (const SignedPerm& w : list) out.entries.push_back(relabel(w, f, universe));
  return out;
}

CodeList reverse_list(const CodeList& list) {
  CodeList out = list;
  std::reverse(out.entries.begin(), out.entries.end());
  return out;
}

CodeList extend_fixed(const CodeList& list, int k) {
  const int rank = std::max(list.rank, k);
  CodeList out{list.type, rank, {}};
  out.entries.reserve(list.size());
  for (const SignedPerm& w : list) {
    require_free(w, k);
    out.entries.push_back(widen(w, rank));
  }
  return out;
}

CodeList append_transposition(const CodeList& list, int a, int b, bool barred) {
  if (a == b || a < 1 || b < 1) throw std::invalid_argument("append_transposition: bad letters");
  const int rank = std::max({list.rank, a, b});
  CodeList out{list.type, rank, {}};
  out.entries.reserve(list.size());
  const int s = barred ? -1 : 1;
  for (const SignedPerm& w : list) {
    require_free(w, a);
    require_free(w, b);
    const SignedPerm wide = widen(w, rank);
    std::vector<int> word(wide.word().begin(), wide.word().end());
    word[static_cast<std::size_t>(a - 1)] = s * b;
    word[static_cast<std::size_t>(b - 1)] = s * a;
    out.entries.emplace_back(std::move(word));
  }
  return out;
}

CodeList extend_tilde(const CodeList& list, int k) {
  const int rank = std::max(list.rank, k);
  CodeList out{GroupType::D, rank, {}};
  out.entries.reserve(list.size());
  for (const SignedPerm& w : list) {
    require_free(w, k);
    const SignedPerm wide = widen(w, rank);
    std::vector<int> word(wide.word().begin(), wide.word().end());
    if (w.negative_count() % 2 != 0) word[static_cast<std::size_t>(k - 1)] = -k;
    out.entries.emplace_back(std::move(word));
  }
  return out;
}

void append(CodeList& into, const CodeList& block) {
  if (into.rank != block.rank) throw std::invalid_argument("append: rank mismatch");
  into.entries.insert(into.entries.end(), block.entries.begin(), block.entries.end());
}

}  // namespace weylgray
