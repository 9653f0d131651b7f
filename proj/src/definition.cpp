#include "nvs/definition.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "nvs/error.hpp"

namespace nvs {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void syntax(int line, const std::string& what) {
  fail(Errc::syntax_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<int> parse_int_list(const std::string& s, int line) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty() || !std::all_of(item.begin(), item.end(),
                                     [](unsigned char c) { return std::isdigit(c); }))
      syntax(line, "expected a comma-separated list of non-negative integers");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) syntax(line, "empty list");
  return out;
}

ScalarGroupSpec parse_field(const std::string& value, int line) {
  std::string v = trim(value);
  auto open = v.find('(');
  if (open == std::string::npos || v.back() != ')')
    syntax(line, "field must be gf(n), gf(n; modulus=...) or dickson(q)");
  std::string head = trim(v.substr(0, open));
  std::string body = v.substr(open + 1, v.size() - open - 2);

  if (head == "dickson") {
    std::string q = trim(body);
    if (q.empty() || !std::all_of(q.begin(), q.end(),
                                  [](unsigned char c) { return std::isdigit(c); }))
      syntax(line, "dickson takes a single integer");
    return ScalarGroupSpec::dickson(std::stoi(q));
  }
  if (head != "gf") syntax(line, "unknown field constructor '" + head + "'");

  std::string order_part = body;
  std::vector<int> modulus;
  auto semi = body.find(';');
  if (semi != std::string::npos) {
    order_part = trim(body.substr(0, semi));
    std::string rest = trim(body.substr(semi + 1));
    const std::string tag = "modulus=";
    if (rest.rfind(tag, 0) != 0) syntax(line, "expected 'modulus=' after ';'");
    modulus = parse_int_list(rest.substr(tag.size()), line);
  } else {
    order_part = trim(body);
  }
  if (order_part.empty() ||
      !std::all_of(order_part.begin(), order_part.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    syntax(line, "gf takes an integer order");
  int n = std::stoi(order_part);
  if (n < 2) fail(Errc::semantic_error, "field order must be at least 2");

  // Split a prime power into (p, k).
  int p = 0;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) { p = d; break; }
  if (p == 0) p = n;
  int k = 0, m = n;
  while (m % p == 0) { m /= p; ++k; }
  if (m != 1) fail(Errc::not_prime, "gf(" + std::to_string(n) + "): not a prime power");
  if (k == 1) {
    if (!modulus.empty())
      fail(Errc::semantic_error, "prime fields take no modulus");
    return ScalarGroupSpec::prime(p);
  }
  return ScalarGroupSpec::extension(p, k, modulus);
}

}  // namespace

SpaceDefinition parse_definition(const std::string& text) {
  SpaceDefinition def;
  bool have_field = false, have_dim = false, have_exp = false;
  std::vector<unsigned> exps;

  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) syntax(line, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key == "field") {
      def.field = parse_field(value, line);
      have_field = true;
    } else if (key == "dim") {
      std::vector<int> v = parse_int_list(value, line);
      if (v.size() != 1) syntax(line, "dim takes a single integer");
      def.dim = v[0];
      have_dim = true;
    } else if (key == "exponents") {
      for (int e : parse_int_list(value, line)) exps.push_back(unsigned(e));
      have_exp = true;
    } else {
      syntax(line, "unknown key '" + key + "'");
    }
  }
  if (!have_field) fail(Errc::syntax_error, "missing 'field'");
  if (!have_dim) {
    def.dim = have_exp ? int(exps.size()) : 1;
    have_dim = true;
  }
  if (!have_exp) exps.assign(std::size_t(def.dim), 1u);
  if (def.dim < 1) fail(Errc::semantic_error, "dim must be positive");
  if (int(exps.size()) != def.dim)
    fail(Errc::semantic_error, "exponents list does not match dim");
  if (carrier::size(def.field.order(), def.dim) > kMaxCarrier)
    fail(Errc::semantic_error, "carrier exceeds cap of 100000 vectors");
  if (def.field.kind != ScalarGroupSpec::Kind::dickson) {
    unsigned q1 = unsigned(def.field.order() - 1);
    for (unsigned m : exps) {
      if (m == 0 || std::gcd(m, q1) != 1 || (def.field.p != 2 && m % 2 == 0))
        fail(Errc::bad_exponent,
             "exponent " + std::to_string(m) + " is not a valid twist over gf(" +
                 std::to_string(def.field.order()) + ")");
    }
  }
  def.exponents = ActionSpec::exponents(exps);
  return def;
}

SpaceDefinition load_definition(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::syntax_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_definition(ss.str());
}

SpacePtr build_space(const SpaceDefinition& def) {
  ScalarGroupPtr g = build_scalar_group(def.field);
  ActionTable a = build_action(g, def.dim, def.exponents);
  return Space::product(std::move(a));
}

Vector parse_vector_literal(const std::string& text, int order, int dim) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    fail(Errc::syntax_error, "vector literal must look like (1,3)");
  std::vector<int> parts = parse_int_list(s.substr(1, s.size() - 2), 0);
  if (int(parts.size()) != dim)
    fail(Errc::semantic_error, "vector has " + std::to_string(parts.size()) +
                                   " coordinates, expected " + std::to_string(dim));
  Vector v;
  for (int x : parts) {
    if (x >= order) fail(Errc::semantic_error, "label " + std::to_string(x) +
                                                   " out of range for order " +
                                                   std::to_string(order));
    v.push_back(Label(x));
  }
  return v;
}

std::vector<Vector> parse_vector_list(const std::string& text, int order, int dim) {
  std::vector<Vector> out;
  std::size_t pos = 0;
  while (true) {
    auto open = text.find('(', pos);
    if (open == std::string::npos) break;
    auto close = text.find(')', open);
    if (close == std::string::npos) fail(Errc::syntax_error, "unbalanced parenthesis");
    out.push_back(parse_vector_literal(text.substr(open, close - open + 1), order, dim));
    pos = close + 1;
  }
  if (out.empty()) fail(Errc::syntax_error, "no vector literals found");
  return out;
}

}  // namespace nvs
