#include "edmsphere/matrix_io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "edmsphere/errors.hpp"
#include "edmsphere/tolerances.hpp"

namespace edmsphere {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, int line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') throw ParseError(line, "not a number: '" + tok + "'");
  if (errno == ERANGE) throw ParseError(line, "number out of range: '" + tok + "'");
  return v;
}

Index parse_order(const std::string& tok, int line) {
  char* end = nullptr;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0' || v < 1) {
    throw ParseError(line, "expected a positive integer order, got '" + tok + "'");
  }
  return static_cast<Index>(v);
}

}  // namespace

Eigen::MatrixXd parse_matrix_text(std::string_view text) {
  Index n = -1;
  Index row = 0;
  Eigen::MatrixXd m;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find('\n', pos);
    const auto line = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
    ++line_no;

    const auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 1) throw ParseError(line_no, "first line must contain only the order n");
      n = parse_order(toks[0], line_no);
      m.resize(n, n);
      continue;
    }
    if (row >= n) throw ParseError(line_no, "more than n = " + std::to_string(n) + " rows");
    if (static_cast<Index>(toks.size()) != n) {
      throw ParseError(line_no, "row has " + std::to_string(toks.size()) + " entries, expected " +
                                    std::to_string(n));
    }
    for (Index j = 0; j < n; ++j) m(row, j) = parse_double(toks[j], line_no);
    ++row;
  }
  if (n < 0) throw ParseError(std::max(line_no, 1), "empty matrix file");
  if (row != n) {
    throw ParseError(line_no, "expected " + std::to_string(n) + " rows, got " + std::to_string(row));
  }
  return m;
}

Eigen::MatrixXd parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
    throw ParseError(0, "JSON matrix must be an object with \"n\" and \"rows\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) {
    throw ParseError(0, "\"n\" must be a positive integer");
  }
  const auto n = static_cast<Index>(j["n"].get<long>());
  const auto& rows = j["rows"];
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n) {
    throw ParseError(0, "\"rows\" must be an array of n rows");
  }
  Eigen::MatrixXd m(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    if (!r.is_array() || static_cast<Index>(r.size()) != n) {
      throw ParseError(0, "row " + std::to_string(i + 1) + " must have n entries");
    }
    for (Index k = 0; k < n; ++k) {
      const auto& v = r[static_cast<std::size_t>(k)];
      if (!v.is_number()) {
        throw ParseError(0, "entry (" + std::to_string(i + 1) + ", " + std::to_string(k + 1) +
                                ") is not a number");
      }
      m(i, k) = v.get<double>();
    }
  }
  return m;
}

Eigen::MatrixXd parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_matrix_json(text);
  return parse_matrix_text(text);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_matrix_text(const Eigen::MatrixXd& m) {
  std::string out = std::to_string(m.rows()) + "\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace edmsphere
