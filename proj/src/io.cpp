#include "nilclean/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nilclean/version.hpp"

namespace nilclean {

std::string write_matrix_text(const Gf2Matrix& a) {
  std::ostringstream out;
  out << a.dim() << "\n";
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) out << (a.get(i, j) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

Gf2Matrix read_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("matrix text is empty");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line, &used);
    while (used < line.size() && std::isspace(static_cast<unsigned char>(
                                     line[used])))
      ++used;
    if (used != line.size()) throw std::invalid_argument(line);
  } catch (const std::exception&) {
    throw std::invalid_argument("matrix text must start with the dimension");
  }
  if (n < 1 || n > Gf2Matrix::kMaxDim)
    throw std::invalid_argument("matrix dimension out of range");
  std::vector<std::string> rows;
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw std::invalid_argument("matrix text ends before all rows are read");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(line);
  }
  return Gf2Matrix::from_rows(rows);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw FileError("failed to write file: " + path);
}

Gf2Matrix read_matrix_file(const std::string& path) {
  return read_matrix_text(read_text_file(path));
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kBrute:
      return "brute";
    case Strategy::kStratified:
      return "stratified";
    case Strategy::kSat:
      return "sat";
  }
  throw std::logic_error("unknown strategy");
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kExhaustedNone:
      return "exhausted-none";
    case SearchStatus::kExported:
      return "exported";
    case SearchStatus::kUnknown:
      return "unknown";
  }
  throw std::logic_error("unknown status");
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "brute") return Strategy::kBrute;
  if (s == "stratified") return Strategy::kStratified;
  if (s == "sat") return Strategy::kSat;
  throw std::invalid_argument("unknown strategy: " + s);
}

SearchStatus status_from_string(const std::string& s) {
  if (s == "found") return SearchStatus::kFound;
  if (s == "exhausted-none") return SearchStatus::kExhaustedNone;
  if (s == "exported") return SearchStatus::kExported;
  if (s == "unknown") return SearchStatus::kUnknown;
  throw std::invalid_argument("unknown status: " + s);
}

std::string search_report_to_json(const SearchReport& r) {
  nlohmann::json j;
  j["n"] = r.target.dim();
  j["k"] = r.k;
  j["target"] = write_matrix_text(r.target);
  j["status"] = to_string(r.status);
  j["strategy"] = to_string(r.strategy);
  j["space_size"] = r.space_size;
  if (r.witness) {
    j["witness_p"] = write_matrix_text(r.witness->p);
    j["witness_q"] = write_matrix_text(r.witness->q);
  }
  j["tool"] = kToolString;
  return j.dump(2) + "\n";
}

SearchReport search_report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad certificate JSON: ") +
                                e.what());
  }
  SearchReport r;
  try {
    r.target = read_matrix_text(j.at("target").get<std::string>());
    r.k = j.at("k").get<int>();
    r.status = status_from_string(j.at("status").get<std::string>());
    r.strategy = strategy_from_string(j.at("strategy").get<std::string>());
    r.space_size = j.at("space_size").get<std::uint64_t>();
    if (j.at("n").get<int>() != r.target.dim())
      throw std::invalid_argument("certificate n disagrees with target");
    if (j.contains("witness_p") != j.contains("witness_q"))
      throw std::invalid_argument("certificate has half a witness");
    if (j.contains("witness_p")) {
      Decomposition d;
      d.p = read_matrix_text(j.at("witness_p").get<std::string>());
      d.q = read_matrix_text(j.at("witness_q").get<std::string>());
      d.target = r.target;
      d.k = r.k;
      r.witness = std::move(d);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad certificate JSON: ") +
                                e.what());
  }
  return r;
}

}  // namespace nilclean
