#include "cyclemat/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cyclemat {

namespace {

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

std::vector<std::string_view> split_ws(std::string_view s)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long> to_long(std::string_view tok)
{
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    return std::nullopt;
  return v;
}

} // namespace

Matrix parse_matrix_text(std::string_view text)
{
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  std::size_t ln = 0;
  auto next_nonblank = [&]() -> std::optional<std::size_t> {
    while (ln < lines.size() && split_ws(lines[ln]).empty())
      ++ln;
    if (ln == lines.size())
      return std::nullopt;
    return ln++;
  };

  auto header = next_nonblank();
  if (!header)
    throw InputError("empty matrix input");
  auto head = split_ws(lines[*header]);
  auto n_val = head.size() == 1 ? to_long(head[0]) : std::nullopt;
  if (!n_val || *n_val < 1 || *n_val > 65535)
    throw InputError(at_line(*header + 1) + "expected the matrix order as a positive integer");
  std::size_t n = static_cast<std::size_t>(*n_val);

  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto idx = next_nonblank();
    if (!idx)
      throw InputError("expected " + std::to_string(n) + " rows, found " + std::to_string(i));
    auto toks = split_ws(lines[*idx]);
    if (toks.size() != n)
      throw InputError(at_line(*idx + 1) + "expected " + std::to_string(n) + " entries, found " +
                       std::to_string(toks.size()));
    for (std::size_t j = 0; j < n; ++j) {
      auto v = to_long(toks[j]);
      if (!v)
        throw InputError(at_line(*idx + 1) + "column " + std::to_string(j + 1) +
                         ": not an integer: '" + std::string(toks[j]) + "'");
      if (*v < 1 || static_cast<std::size_t>(*v) > n)
        throw InputError(at_line(*idx + 1) + "column " + std::to_string(j + 1) + ": entry " +
                         std::to_string(*v) + " out of range 1.." + std::to_string(n));
      m.at(i, j) = static_cast<Label>(*v - 1);
    }
  }
  if (auto extra = next_nonblank())
    throw InputError(at_line(*extra + 1) + "unexpected content after " + std::to_string(n) +
                     " rows");
  return m;
}

Matrix parse_matrix_json(const nlohmann::json &j)
{
  if (!j.is_object() || !j.contains("n") || !j.contains("rows") || !j["rows"].is_array())
    throw InputError("JSON matrix must be an object with \"n\" and a \"rows\" array");
  const auto &rows = j["rows"];
  std::size_t n = rows.size();
  if (!j["n"].is_number_integer() || j["n"].get<long>() != static_cast<long>(n))
    throw InputError("JSON matrix: \"n\" does not match the number of rows");
  if (n == 0)
    throw InputError("JSON matrix: no rows");
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto &r = rows[i];
    if (!r.is_array() || r.size() != n)
      throw InputError("row " + std::to_string(i + 1) + ": expected " + std::to_string(n) +
                       " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const auto &e = r[c];
      if (!e.is_number_integer())
        throw InputError("row " + std::to_string(i + 1) + ", column " + std::to_string(c + 1) +
                         ": not an integer");
      long v = e.get<long>();
      if (v < 1 || static_cast<std::size_t>(v) > n)
        throw InputError("row " + std::to_string(i + 1) + ", column " + std::to_string(c + 1) +
                         ": entry " + std::to_string(v) + " out of range 1.." +
                         std::to_string(n));
      m.at(i, c) = static_cast<Label>(v - 1);
    }
  }
  return m;
}

Matrix parse_matrix(std::string_view text)
{
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_matrix_json(j);
  }
  return parse_matrix_text(text);
}

Matrix read_matrix_file(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const InputError &e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_matrix(const Matrix &m)
{
  std::string s = std::to_string(m.order()) + "\n";
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j)
        s += ' ';
      s += std::to_string(m.at(i, j) + 1);
    }
    s += '\n';
  }
  return s;
}

nlohmann::json matrix_to_json(const Matrix &m)
{
  return {{"n", m.order()}, {"rows", m.rows()}};
}

Permutation parse_permutation(std::string_view text)
{
  std::vector<int> images;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view tok = text.substr(start, end == std::string_view::npos ? text.npos
                                                                           : end - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
      tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.remove_suffix(1);
    auto v = to_long(tok);
    if (!v)
      throw InputError("permutation entry " + std::to_string(images.size() + 1) +
                       ": not an integer: '" + std::string(tok) + "'");
    images.push_back(static_cast<int>(*v));
    if (end == std::string_view::npos)
      break;
    start = end + 1;
  }
  try {
    return Permutation::from_images(images);
  } catch (const std::invalid_argument &e) {
    throw InputError("bad permutation '" + std::string(text) + "': " + e.what());
  }
}

nlohmann::json permutation_to_json(const Permutation &p) { return p.one_based(); }

Permutation permutation_from_json(const nlohmann::json &j)
{
  if (!j.is_array())
    throw InputError("permutation must be a JSON array of 1-based images");
  std::vector<int> images;
  for (const auto &e : j) {
    if (!e.is_number_integer())
      throw InputError("permutation entries must be integers");
    images.push_back(e.get<int>());
  }
  try {
    return Permutation::from_images(images);
  } catch (const std::invalid_argument &e) {
    throw InputError(std::string("bad permutation: ") + e.what());
  }
}

} // namespace cyclemat
