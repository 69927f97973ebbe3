#include "ldv/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "ldv/errors.hpp"

namespace ldv {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view s, const std::string& what) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw InputError(what + ": expected an integer, got '" + std::string(s) + "'");
  return v;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

ExponentVector parse_vector(std::string_view text, std::size_t n, const std::string& what) {
  text = trim(text);
  if (text.size() >= 2 && (text.front() == '[' || text.front() == '(')) text = text.substr(1, text.size() - 2);
  ExponentVector v;
  for (auto part : split(text, ',')) v.push_back(parse_int(part, what));
  if (v.size() != n) throw InputError(what + " must have " + std::to_string(n) + " entries");
  return v;
}

}  // namespace

IntegerMatrix parse_matrix(std::string_view text, std::size_t cols) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw InputError("Q must be written as [..]");
  text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) return IntegerMatrix(0, cols);
  std::vector<ExponentVector> rows;
  for (auto row : split(text, ';')) {
    ExponentVector v;
    for (auto part : split(row, ',')) v.push_back(parse_int(part, "Q"));
    if (v.size() != cols)
      throw InputError("each Q row must have " + std::to_string(cols) + " entries, got " + std::to_string(v.size()));
    rows.push_back(std::move(v));
  }
  return IntegerMatrix::from_rows(rows);
}

ProblemFile parse_problem(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto body = trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw InputError("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key(trim(body.substr(0, eq)));
    std::string value(trim(body.substr(eq + 1)));
    static const char* const known[] = {"vars", "f", "g", "Q", "order", "spair_cap", "skip_nondeg"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (values.count(key)) throw InputError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    values[key] = {value, lineno};
  }
  for (const char* required : {"vars", "f", "Q"})
    if (!values.count(required)) throw InputError(std::string("missing key '") + required + "'");

  ProblemFile pf;
  auto& p = pf.problem;
  for (auto name : split(values["vars"].first, ',')) {
    if (!valid_name(name)) throw InputError("invalid variable name '" + std::string(name) + "'");
    if (std::find(p.vars.begin(), p.vars.end(), name) != p.vars.end())
      throw InputError("duplicate variable '" + std::string(name) + "'");
    p.vars.emplace_back(name);
  }
  const std::size_t n = p.vars.size();
  auto expression = [&](const std::string& key) {
    try {
      return parse(values[key].first, p.vars);
    } catch (const ParseError& e) {
      throw InputError(key + ": " + e.what());
    }
  };
  p.f = expression("f");
  p.g = values.count("g") ? expression("g") : LaurentPolynomial::constant(n, 1);
  p.q = parse_matrix(values["Q"].first, n);
  if (values.count("order")) p.order = parse_vector(values["order"].first, n, "order");
  if (values.count("spair_cap")) {
    auto cap = parse_int(values["spair_cap"].first, "spair_cap");
    if (cap <= 0) throw InputError("spair_cap must be positive");
    pf.spair_cap = static_cast<std::uint64_t>(cap);
  }
  if (values.count("skip_nondeg")) {
    const auto& v = values["skip_nondeg"].first;
    if (v == "true" || v == "1") {
      pf.skip_nondeg = true;
    } else if (v != "false" && v != "0") {
      throw InputError("skip_nondeg must be true or false");
    }
  }
  p.validate();
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

ExponentVector expansion_order(const DiagonalProblem& problem) {
  auto polytope = newton_polytope(problem.f);
  if (problem.order) {
    if (!polytope.is_vertex(*problem.order))
      throw InputError("order " + to_string(*problem.order) + " is not a vertex of the Newton polytope of f");
    return *problem.order;
  }
  ExponentVector origin(problem.n(), 0);
  if (!polytope.is_vertex(origin))
    throw InputError("no order given and the origin is not a vertex of the Newton polytope of f");
  return origin;
}

}  // namespace ldv
