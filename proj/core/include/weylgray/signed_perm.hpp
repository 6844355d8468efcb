#pragma once

// Signed permutations in one-line notation, the common group element for the
// classical Weyl groups of types A, B and D.
//
// A rank-n element is stored as its word w(1) ... w(n); negative entries are
// barred letters, and w(-i) = -w(i) is implied. Composition follows the
// positional convention: (u * v)(i) = u(v(i)), so right-multiplying by the
// adjacent transposition s_i swaps word positions i and i + 1.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylgray {

enum class GroupType { A, B, D };

char to_char(GroupType type);
// Accepts "A", "B", "D" (case-insensitive). Throws std::invalid_argument.
GroupType parse_group_type(std::string_view text);

class SignedPerm {
 public:
  SignedPerm() = default;
  // Throws std::invalid_argument unless |word| is a permutation of 1..n.
  explicit SignedPerm(std::vector<int> word);
  SignedPerm(std::initializer_list<int> word);

  static SignedPerm identity(int rank);

  int rank() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }

  // 1-based word entry.
  int at(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }
  // Image of a signed letter, using w(-i) = -w(i).
  int operator()(int letter) const { return letter > 0 ? at(letter) : -at(-letter); }

  bool is_identity() const;
  int negative_count() const;
  // |w|: the underlying permutation with all bars removed.
  SignedPerm unsigned_part() const;

  // Space separated signed integers, e.g. "-3 2 -1 4".
  std::string to_string() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b) {
    return a.word_ <=> b.word_;
  }

 private:
  struct Unchecked {};
  SignedPerm(std::vector<int> word, Unchecked) : word_(std::move(word)) {}

  std::vector<int> word_;

  friend SignedPerm compose(const SignedPerm&, const SignedPerm&);
  friend SignedPerm inverse(const SignedPerm&);
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& p) const noexcept;
};

// w(i) = u(v(i)). Throws std::invalid_argument on rank mismatch.
SignedPerm compose(const SignedPerm& u, const SignedPerm& v);
SignedPerm inverse(const SignedPerm& u);
bool is_involution(const SignedPerm& u);

// A: no negative entries. B: always. D: an even number of negative entries.
bool is_member(const SignedPerm& u, GroupType type);

// Number of positions where the signed words differ.
int hamming(const SignedPerm& u, const SignedPerm& v);

// ---------------------------------------------------------------------------
// Cycle notation for involutions.

// A fixed letter (second == 0) or a transposition (first second) with
// |first| < |second| and both letters carrying the same sign.
struct Cycle {
  int first = 0;
  int second = 0;

  bool is_fixed() const { return second == 0; }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct CycleForm {
  std::vector<Cycle> cycles;

  int transposition_count() const;
  // "(-1 -3)(2)(4 6)(5)(-7)"
  std::string to_string() const;
  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

// Cycles are listed by increasing smallest absolute letter.
// Throws std::invalid_argument if u is not an involution.
CycleForm to_cycles(const SignedPerm& u);

// Letters absent from the form are fixed and positive. Throws
// std::invalid_argument on overlapping cycles, letters outside 1..rank or
// mixed signs inside a transposition.
SignedPerm from_cycles(const CycleForm& form, int rank);

// Parses "(1 3)(-2)" or "id". Transpositions may be written in either order.
SignedPerm parse_cycle_notation(std::string_view text, int rank);

// ---------------------------------------------------------------------------
// Move classification between two words of equal rank.

enum class MoveKind { Identity, SignChanges, Transposition, Rotation3, Other };

std::string_view to_string(MoveKind kind);

struct MoveClass {
  MoveKind kind = MoveKind::Other;
  // Positions whose unsigned letter changes (sorted, 1-based). Empty for
  // Identity and SignChanges.
  std::vector<int> positions;
  // sources[k] is the position in the first word holding the letter that ends
  // up at positions[k].
  std::vector<int> sources;
  // Positions of the second word whose letter has the opposite sign from the
  // same letter in the first word.
  std::vector<int> flipped;

  int sign_changes() const { return static_cast<int>(flipped.size()); }
  std::string to_string() const;
};

// Unsigned words are compared first: if they agree the move is Identity or
// SignChanges; Transposition and Rotation3 carry 0..2 sign changes. Anything
// else is Other. Throws std::invalid_argument on rank mismatch.
MoveClass classify_move(const SignedPerm& u, const SignedPerm& v);

// Re-applies a classified move; apply_move(u, classify_move(u, v)) == v.
SignedPerm apply_move(const SignedPerm& u, const MoveClass& move);

// ---------------------------------------------------------------------------
// Alphabet change.

// F(i) = images[i - 1]; the images must be pairwise distinct positive letters.
class Relabeling {
 public:
  explicit Relabeling(std::vector<int> images);
  // "412" style one-line notation is accepted for single digit images.
  static Relabeling from_one_line(std::string_view digits);

  int source_rank() const { return static_cast<int>(images_.size()); }
  int operator()(int letter) const;
  std::span<const int> images() const { return images_; }
  // Sorted target alphabet.
  std::vector<int> alphabet() const;
  int max_image() const;

 private:
  std::vector<int> images_;
};

// Conjugates w by F: each cycle (x y) becomes (F(x) F(y)) with signs kept.
// The result is embedded in rank `universe` (>= F.max_image()); letters
// outside the target alphabet are fixed and positive.
SignedPerm relabel(const SignedPerm& w, const Relabeling& f, int universe);
SignedPerm relabel(const SignedPerm& w, const Relabeling& f);

// The entries of w at the given positions, in order (the word of w read over
// a sub-alphabet).
std::vector<int> word_over(const SignedPerm& w, std::span<const int> alphabet);

}  // namespace weylgray
