#pragma once

#include <stdexcept>
#include <string>

#include "nilclean/gf2_matrix.hpp"
#include "nilclean/search.hpp"

namespace nilclean {

/// Raised when a file cannot be opened (distinct from parse failures, which
/// raise std::invalid_argument).
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix text format: a line with the dimension, then that many lines of
/// '0'/'1' characters, one row per line, trailing newline.
std::string write_matrix_text(const Gf2Matrix& a);
Gf2Matrix read_matrix_text(const std::string& text);
Gf2Matrix read_matrix_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string to_string(Strategy s);
std::string to_string(SearchStatus s);
Strategy strategy_from_string(const std::string& s);
SearchStatus status_from_string(const std::string& s);

/// JSON certificate with deterministic (alphabetical) key order: n, k,
/// target / witness matrices as matrix text blocks, status and strategy as
/// strings, space_size, and the tool version.
std::string search_report_to_json(const SearchReport& r);
SearchReport search_report_from_json(const std::string& text);

}  // namespace nilclean
