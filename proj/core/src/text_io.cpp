#include "weylgray/text_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace weylgray {

SignedPerm parse_word(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<int> word;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    word.push_back(value);
  }
  return SignedPerm(std::move(word));
}

namespace {

void read_header_line(std::string_view line, CodeFileHeader& header) {
  std::istringstream in{std::string(line.substr(1))};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "type") {
      header.type = parse_group_type(value);
    } else if (key == "n") {
      header.rank = std::stoi(value);
    } else if (key == "algorithm") {
      header.algorithm = value;
    }
  }
}

}  // namespace

CodeFile read_code_file(std::istream& in) {
  CodeFile file;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    try {
      if (line[first] == '#') {
        read_header_line(std::string_view(line).substr(first), file.header);
      } else {
        file.entries.push_back(parse_word(line));
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return file;
}

CodeList to_code_list(const CodeFile& file, GroupType type, int rank) {
  if (file.header.type && *file.header.type != type) {
    throw std::invalid_argument(std::string("file header declares type ") +
                                to_char(*file.header.type));
  }
  if (file.header.rank && *file.header.rank != rank) {
    throw std::invalid_argument("file header declares n=" + std::to_string(*file.header.rank));
  }
  CodeList out{type, rank, {}};
  out.entries.reserve(file.entries.size());
  for (std::size_t i = 0; i < file.entries.size(); ++i) {
    if (file.entries[i].rank() != rank) {
      throw std::invalid_argument("entry " + std::to_string(i + 1) + " has length " +
                                  std::to_string(file.entries[i].rank()));
    }
    out.entries.push_back(file.entries[i]);
  }
  return out;
}

void write_header(std::ostream& out, GroupType type, int rank, std::string_view algorithm) {
  out << "# type=" << to_char(type) << " n=" << rank << " algorithm=" << algorithm << '\n';
}

void write_word(std::ostream& out, const SignedPerm& w) { out << w.to_string() << '\n'; }

void write_code_list(std::ostream& out, const CodeList& list, std::string_view algorithm) {
  write_header(out, list.type, list.rank, algorithm);
  for (const SignedPerm& w : list) write_word(out, w);
}

}  // namespace weylgray
