#pragma once

// Plain-text code files: optional '#' header lines, then one involution per
// line as space-separated signed integers, e.g. "-3 2 -1 4".

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "weylgray/code_list.hpp"

namespace weylgray {

struct CodeFileHeader {
  std::optional<GroupType> type;
  std::optional<int> rank;
  std::string algorithm;
};

struct CodeFile {
  CodeFileHeader header;
  std::vector<SignedPerm> entries;
};

// Throws std::invalid_argument on a malformed word.
SignedPerm parse_word(std::string_view line);

// Reads header keys (type=, n=, algorithm=) from '#' lines and every other
// non-blank line as a word. Throws std::invalid_argument with the 1-based
// line number on malformed input.
CodeFile read_code_file(std::istream& in);

// Interprets a file as a list of the given type and rank; throws if a word
// has the wrong length or the header disagrees.
CodeList to_code_list(const CodeFile& file, GroupType type, int rank);

void write_header(std::ostream& out, GroupType type, int rank, std::string_view algorithm);
void write_word(std::ostream& out, const SignedPerm& w);
void write_code_list(std::ostream& out, const CodeList& list, std::string_view algorithm);

}  // namespace weylgray
