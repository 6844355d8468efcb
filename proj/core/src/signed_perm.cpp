#include "weylgray/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylgray {

namespace {

int sign_of(int x) { return x < 0 ? -1 : 1; }

void require_same_rank(const SignedPerm& u, const SignedPerm& v, const char* what) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument(std::string(what) + ": rank mismatch (" +
                                std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()) + ")");
  }
}

}  // namespace

char to_char(GroupType type) {
  switch (type) {
    case GroupType::A: return 'A';
    case GroupType::B: return 'B';
    case GroupType::D: return 'D';
  }
  return '?';
}

GroupType parse_group_type(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return GroupType::A;
      case 'B': return GroupType::B;
      case 'D': return GroupType::D;
      default: break;
    }
  }
  throw std::invalid_argument("unknown group type '" + std::string(text) + "'");
}

SignedPerm::SignedPerm(std::vector<int> word) : word_(std::move(word)) {
  const int n = rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : word_) {
    const int a = std::abs(x);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("not a signed permutation word");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPerm::SignedPerm(std::initializer_list<int> word) : SignedPerm(std::vector<int>(word)) {}

SignedPerm SignedPerm::identity(int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  std::vector<int> w(static_cast<std::size_t>(rank));
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(std::move(w), Unchecked{});
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < rank(); ++i) {
    if (word_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

int SignedPerm::negative_count() const {
  return static_cast<int>(std::count_if(word_.begin(), word_.end(), [](int x) { return x < 0; }));
}

SignedPerm SignedPerm::unsigned_part() const {
  std::vector<int> w(word_);
  for (int& x : w) x = std::abs(x);
  return SignedPerm(std::move(w), Unchecked{});
}

std::string SignedPerm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::size_t SignedPermHash::operator()(const SignedPerm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.word()) {
    h ^= static_cast<std::size_t>(x + 64);
    h *= 1099511628211ULL;
  }
  return h;
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& v) {
  require_same_rank(u, v, "compose");
  std::vector<int> w(u.word_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = u(v.word_[i]);
  return SignedPerm(std::move(w), SignedPerm::Unchecked{});
}

SignedPerm inverse(const SignedPerm& u) {
  std::vector<int> w(u.word_.size());
  for (int i = 1; i <= u.rank(); ++i) {
    const int image = u.at(i);
    // u(i) = image  =>  u^{-1}(|image|) = sign(image) * i
    w[static_cast<std::size_t>(std::abs(image) - 1)] = sign_of(image) * i;
  }
  return SignedPerm(std::move(w), SignedPerm::Unchecked{});
}

bool is_involution(const SignedPerm& u) {
  for (int i = 1; i <= u.rank(); ++i) {
    if (u(u.at(i)) != i) return false;
  }
  return true;
}

bool is_member(const SignedPerm& u, GroupType type) {
  switch (type) {
    case GroupType::A: return u.negative_count() == 0;
    case GroupType::B: return true;
    case GroupType::D: return u.negative_count() % 2 == 0;
  }
  return false;
}

int hamming(const SignedPerm& u, const SignedPerm& v) {
  require_same_rank(u, v, "hamming");
  int d = 0;
  for (int i = 1; i <= u.rank(); ++i) d += u.at(i) != v.at(i);
  return d;
}

// ---------------------------------------------------------------------------

int CycleForm::transposition_count() const {
  return static_cast<int>(
      std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return !c.is_fixed(); }));
}

std::string CycleForm::to_string() const {
  std::string out;
  for (const Cycle& c : cycles) {
    out += '(';
    out += std::to_string(c.first);
    if (!c.is_fixed()) {
      out += ' ';
      out += std::to_string(c.second);
    }
    out += ')';
  }
  return out;
}

CycleForm to_cycles(const SignedPerm& u) {
  if (!is_involution(u)) throw std::invalid_argument("to_cycles: not an involution");
  CycleForm form;
  for (int i = 1; i <= u.rank(); ++i) {
    const int image = u.at(i);
    const int a = std::abs(image);
    if (a == i) {
      form.cycles.push_back({image, 0});
    } else if (a > i) {
      const int s = sign_of(image);
      form.cycles.push_back({s * i, s * a});
    }
  }
  return form;
}

SignedPerm from_cycles(const CycleForm& form, int rank) {
  std::vector<int> w(static_cast<std::size_t>(rank), 0);
  auto place = [&](int position, int image) {
    if (position < 1 || position > rank || std::abs(image) > rank) {
      throw std::invalid_argument("from_cycles: letter outside 1.." + std::to_string(rank));
    }
    int& slot = w[static_cast<std::size_t>(position - 1)];
    if (slot != 0) throw std::invalid_argument("from_cycles: overlapping cycles");
    slot = image;
  };
  for (const Cycle& c : form.cycles) {
    if (c.first == 0) throw std::invalid_argument("from_cycles: zero letter");
    if (c.is_fixed()) {
      place(std::abs(c.first), c.first);
      continue;
    }
    if (sign_of(c.first) != sign_of(c.second)) {
      throw std::invalid_argument("from_cycles: mixed signs inside a transposition");
    }
    const int a = std::abs(c.first);
    const int b = std::abs(c.second);
    if (a == b) throw std::invalid_argument("from_cycles: degenerate transposition");
    const int s = sign_of(c.first);
    place(a, s * b);
    place(b, s * a);
  }
  for (int i = 1; i <= rank; ++i) {
    if (w[static_cast<std::size_t>(i - 1)] == 0) w[static_cast<std::size_t>(i - 1)] = i;
  }
  return SignedPerm(std::move(w));
}

SignedPerm parse_cycle_notation(std::string_view text, int rank) {
  CycleForm form;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos) == "id") return SignedPerm::identity(rank);
  while (pos < text.size()) {
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++pos;
    std::vector<int> letters;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      if (text[end] == '-') ++end;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw std::invalid_argument("cycle notation: expected a letter");
      letters.push_back(std::stoi(std::string(text.substr(pos, end - pos))));
      pos = end;
    }
    if (letters.size() == 1) {
      form.cycles.push_back({letters[0], 0});
    } else if (letters.size() == 2) {
      if (std::abs(letters[0]) > std::abs(letters[1])) std::swap(letters[0], letters[1]);
      form.cycles.push_back({letters[0], letters[1]});
    } else {
      throw std::invalid_argument("cycle notation: only 1- and 2-cycles are involutions");
    }
  }
  return from_cycles(form, rank);
}

// ---------------------------------------------------------------------------

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Identity: return "identity";
    case MoveKind::SignChanges: return "sign-changes";
    case MoveKind::Transposition: return "transposition";
    case MoveKind::Rotation3: return "rotation3";
    case MoveKind::Other: return "other";
  }
  return "?";
}

std::string MoveClass::to_string() const {
  std::ostringstream out;
  out << weylgray::to_string(kind);
  auto list = [&](const char* label, const std::vector<int>& xs) {
    out << ' ' << label << "={";
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    out << '}';
  };
  if (!positions.empty()) list("positions", positions);
  list("flipped", flipped);
  return out.str();
}

MoveClass classify_move(const SignedPerm& u, const SignedPerm& v) {
  require_same_rank(u, v, "classify_move");
  const int n = u.rank();
  // where_u[a] = position of letter a (unsigned) in u
  std::vector<int> where_u(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) where_u[static_cast<std::size_t>(std::abs(u.at(i)))] = i;

  MoveClass move;
  for (int i = 1; i <= n; ++i) {
    const int source = where_u[static_cast<std::size_t>(std::abs(v.at(i)))];
    if (source != i) {
      move.positions.push_back(i);
      move.sources.push_back(source);
    }
    if (sign_of(v.at(i)) != sign_of(u.at(source))) move.flipped.push_back(i);
  }

  const int flips = move.sign_changes();
  switch (move.positions.size()) {
    case 0:
      move.kind = flips == 0 ? MoveKind::Identity
                             : (flips <= 2 ? MoveKind::SignChanges : MoveKind::Other);
      break;
    case 2:
      move.kind = flips <= 2 ? MoveKind::Transposition : MoveKind::Other;
      break;
    case 3:
      move.kind = flips <= 2 ? MoveKind::Rotation3 : MoveKind::Other;
      break;
    default:
      move.kind = MoveKind::Other;
      break;
  }
  return move;
}

SignedPerm apply_move(const SignedPerm& u, const MoveClass& move) {
  std::vector<int> w(u.word().begin(), u.word().end());
  for (std::size_t k = 0; k < move.positions.size(); ++k) {
    w[static_cast<std::size_t>(move.positions[k] - 1)] = u.at(move.sources[k]);
  }
  for (int p : move.flipped) w[static_cast<std::size_t>(p - 1)] *= -1;
  return SignedPerm(std::move(w));
}

// ---------------------------------------------------------------------------

Relabeling::Relabeling(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted(images_);
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 1) {
    throw std::invalid_argument("relabeling images must be positive letters");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("relabeling images must be pairwise distinct");
  }
}

Relabeling Relabeling::from_one_line(std::string_view digits) {
  std::vector<int> images;
  for (char c : digits) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("relabeling: expected digits");
    }
    images.push_back(c - '0');
  }
  return Relabeling(std::move(images));
}

int Relabeling::operator()(int letter) const {
  const int a = std::abs(letter);
  if (a < 1 || a > source_rank()) throw std::out_of_range("relabeling: letter outside domain");
  return sign_of(letter) * images_[static_cast<std::size_t>(a - 1)];
}

std::vector<int> Relabeling::alphabet() const {
  std::vector<int> sorted(images_);
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

int Relabeling::max_image() const {
  return images_.empty() ? 0 : *std::max_element(images_.begin(), images_.end());
}

SignedPerm relabel(const SignedPerm& w, const Relabeling& f, int universe) {
  if (w.rank() != f.source_rank()) {
    throw std::invalid_argument("relabel: rank mismatch with relabeling");
  }
  if (universe < f.max_image()) throw std::invalid_argument("relabel: universe too small");
  std::vector<int> out(static_cast<std::size_t>(universe));
  std::iota(out.begin(), out.end(), 1);
  // w(x) = y  becomes  w'(F(x)) = F(y)
  for (int x = 1; x <= w.rank(); ++x) {
    out[static_cast<std::size_t>(f(x) - 1)] = f(w.at(x));
  }
  return SignedPerm(std::move(out));
}

SignedPerm relabel(const SignedPerm& w, const Relabeling& f) {
  return relabel(w, f, f.max_image());
}

std::vector<int> word_over(const SignedPerm& w, std::span<const int> alphabet) {
  std::vector<int> out;
  out.reserve(alphabet.size());
  for (int letter : alphabet) out.push_back(w.at(letter));
  return out;
}

}  // namespace weylgray
