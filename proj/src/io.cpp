#include "hfg/io.hpp"

#include "hfg/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hfg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

unsigned parse_exponent(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("malformed exponent in '" + std::string(context) + "'");
  const unsigned long v = std::stoul(std::string(s));
  if (v > 0xffff) throw ParseError("exponent too large in '" + std::string(context) + "'");
  return static_cast<unsigned>(v);
}

bool is_number_factor(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || std::isspace(static_cast<unsigned char>(c));
  });
}

Term parse_term(std::string_view text, bool negative, const BlockPtr& block) {
  const std::string_view whole = text;
  Monomial mono(block->size());
  Rational coeff = negative ? -1 : 1;
  while (!text.empty()) {
    const auto star = text.find('*');
    const std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (factor.empty()) throw ParseError("empty factor in '" + std::string(whole) + "'");
    if (is_number_factor(factor)) {
      coeff *= parse_rational(factor);
      continue;
    }
    const auto caret = factor.find('^');
    const std::string_view name = trim(factor.substr(0, caret));
    const auto idx = block->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'");
    const unsigned e = caret == std::string_view::npos ? 1 : parse_exponent(factor.substr(caret + 1), whole);
    mono.set(*idx, mono[*idx] + e);
  }
  return {mono, coeff};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("expected a rational as \"num/den\" string or integer, got " + j.dump());
}

std::vector<unsigned> multiplicities_from_json(const Json& j, const char* key) {
  if (!j.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of positive integers");
  std::vector<unsigned> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<unsigned long long>() == 0 || v.get<unsigned long long>() > 1000)
      throw ParseError(std::string("\"") + key + "\" entries must be positive integers, got " + v.dump());
    out.push_back(static_cast<unsigned>(v.get<unsigned long long>()));
  }
  return out;
}

Json corner_list(const std::vector<Corner>& corners) {
  Json out = Json::array();
  for (const auto& [a, b] : corners) out.push_back({a, b});
  return out;
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const BlockPtr& block) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty polynomial");
  std::vector<Term> terms;
  bool negative = false;
  std::size_t start = 0;
  // Leading sign.
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '+' || text[i] == '-') {
      const std::string_view term = trim(text.substr(start, i - start));
      if (term.empty()) throw ParseError("missing term in '" + std::string(whole) + "'");
      terms.push_back(parse_term(term, negative, block));
      if (i < text.size()) negative = text[i] == '-';
      start = i + 1;
    }
  }
  return Polynomial::from_terms(block, std::move(terms));
}

Polynomial polynomial_from_json(const Json& j, const BlockPtr& block) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), block);
  if (!j.is_array()) throw ParseError("polynomial must be a string or a list of terms, got " + j.dump());
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array() || t[1].size() != block->size())
      throw ParseError("term must be [\"num/den\", [exponents x" + std::to_string(block->size()) + "]], got " +
                       t.dump());
    std::vector<unsigned> exps;
    for (const auto& e : t[1]) {
      if (!e.is_number_unsigned() || e.get<unsigned long long>() > 0xffff)
        throw ParseError("exponent must be a non-negative integer, got " + e.dump());
      exps.push_back(static_cast<unsigned>(e.get<unsigned long long>()));
    }
    terms.push_back({Monomial::from_exponents(exps), rational_from_json(t[0])});
  }
  return Polynomial::from_terms(block, std::move(terms));
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const Term& t : p.terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) exps.push_back(t.monomial[i]);
    out.push_back({to_fraction_string(t.coeff), exps});
  }
  return out;
}

IdealPresentation ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gens")) throw ParseError("ideal must be an object with \"gens\"");
  BlockPtr block = plane_block();
  if (j.contains("vars")) {
    if (!j["vars"].is_array()) throw ParseError("\"vars\" must be a list of names");
    std::vector<std::string> names;
    for (const auto& v : j["vars"]) {
      if (!v.is_string()) throw ParseError("variable names must be strings");
      names.push_back(v.get<std::string>());
    }
    try {
      block = make_block(std::move(names));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    if (same_block(block, plane_block())) block = plane_block();
  }
  if (!j["gens"].is_array()) throw ParseError("\"gens\" must be a list of polynomials");
  std::vector<Polynomial> gens;
  for (const auto& g : j["gens"]) gens.push_back(polynomial_from_json(g, block));
  return IdealPresentation(block, std::move(gens));
}

Json ideal_to_json(const IdealPresentation& ideal) {
  Json gens = Json::array(), text = Json::array();
  for (const auto& g : ideal.groebner_basis()) {
    gens.push_back(polynomial_to_json(g));
    text.push_back(g.to_string());
  }
  return {{"vars", ideal.block()->names()}, {"gens", gens}, {"text", text}};
}

Point point_from_json(const Json& j) {
  if (j.is_string()) return parse_point(j.get<std::string>());
  if (!j.is_array() || j.size() != 3) throw ParseError("point must have three coordinates, got " + j.dump());
  try {
    return Point(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json point_to_json(const Point& p) {
  return Json::array({to_fraction_string(p[0]), to_fraction_string(p[1]), to_fraction_string(p[2])});
}

FatGrid grid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("M") || !j.contains("N"))
    throw ParseError("grid must be an object with \"M\" and \"N\"");
  std::vector<unsigned> m = multiplicities_from_json(j["M"], "M");
  std::vector<unsigned> n = multiplicities_from_json(j["N"], "N");
  const bool has_p = j.contains("P"), has_q = j.contains("Q");
  if (has_p != has_q) throw ParseError("grid must give both \"P\" and \"Q\" or neither");
  if (!has_p) return abstract_grid(std::move(m), std::move(n));
  auto points = [](const Json& list, const char* key) {
    if (!list.is_array()) throw ParseError(std::string("\"") + key + "\" must be a list of points");
    std::vector<Point> out;
    for (const auto& p : list) out.push_back(point_from_json(p));
    return out;
  };
  return build_grid(WeightedPointSet::make(points(j["P"], "P"), std::move(m)),
                    WeightedPointSet::make(points(j["Q"], "Q"), std::move(n)));
}

Json grid_to_json(const FatGrid& grid) {
  Json rows = Json::array(), cols = Json::array(), points = Json::array(), h = Json::array(), v = Json::array();
  for (const auto& p : grid.rows().points) rows.push_back(point_to_json(p));
  for (const auto& q : grid.cols().points) cols.push_back(point_to_json(q));
  for (std::size_t i = 0; i < grid.r(); ++i)
    for (std::size_t j = 0; j < grid.s(); ++j)
      points.push_back({{"row", i}, {"col", j}, {"point", point_to_json(grid.point(i, j))},
                        {"multiplicity", grid.multiplicity(i, j)}});
  for (const auto& l : grid.h_lines()) h.push_back(l.form().to_string());
  for (const auto& l : grid.v_lines()) v.push_back(l.form().to_string());
  return {{"M", grid.m()},           {"N", grid.n()},
          {"P", rows},               {"Q", cols},
          {"points", points},        {"H", h},
          {"V", v},                  {"swapped", grid.swapped()},
          {"total_multiplicity", grid.total_multiplicity()}};
}

std::vector<unsigned> parse_multiplicities(std::string_view text) {
  std::vector<unsigned> out;
  const std::string_view whole = text;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (item.empty() || item.size() > 4 ||
        !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed multiplicity list '" + std::string(whole) + "'");
    const unsigned v = static_cast<unsigned>(std::stoul(std::string(item)));
    if (v == 0) throw ParseError("multiplicities must be positive in '" + std::string(whole) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

Json resolution_to_json(const FatGrid& grid) {
  const AlphaTuple alpha = alpha_tuple(grid);
  const CornerSets cs = corner_sets(alpha);
  const ResolutionShifts shifts = shifts_from_corners(cs);
  return {{"alpha_tuple", alpha.entries},
          {"C", corner_list(cs.C)},
          {"V", corner_list(cs.V)},
          {"generator_twists", shifts.generator_twists},
          {"syzygy_twists", shifts.syzygy_twists}};
}

Json generators_to_json(const FatGrid& grid) {
  Json out = Json::array();
  for (const auto& p : generator_patterns(grid))
    out.push_back({{"k", p.k},
                   {"degree", p.degree()},
                   {"h_exponents", p.h_exponents},
                   {"v_exponents", p.v_exponents},
                   {"polynomial", expand_pattern(grid, p).to_string()}});
  return {{"generators", out}, {"count", out.size()}};
}

Json invariants_to_json(const FatGrid& grid, unsigned t_max) {
  Json out = resolution_to_json(grid);
  out["alpha"] = alpha_degree(grid);
  out["beta"] = beta_degree(grid);
  out["waldschmidt"] = to_fraction_string(waldschmidt(grid));
  const ResurgenceCertificate cert = resurgence_certificate(grid, t_max);
  out["resurgence"] = cert.passed ? Json(1) : Json(nullptr);
  out["resurgence_checked_up_to"] = t_max;
  return out;
}

Json certificate_to_json(const ResurgenceCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps)
    steps.push_back({{"t", s.t},
                     {"matches_scaled_formula", s.matches_scaled_formula},
                     {"factorizations", s.factorizations},
                     {"products_in_symbolic", s.products_in_symbolic},
                     {"pass", s.passed}});
  return {{"steps", steps}, {"pass", cert.passed}, {"resurgence", cert.passed ? Json(1) : Json(nullptr)}};
}

Json report_to_json(const VerificationReport& report) {
  Json instances = Json::array();
  for (const auto& i : report.instances())
    instances.push_back({{"input", i.input},
                         {"expected", i.expected},
                         {"computed", i.computed},
                         {"pass", i.pass},
                         {"flagged", i.flagged}});
  return {{"subject", report.subject()},
          {"instances", instances},
          {"budget_used", report.budget_used()},
          {"pass", report.passed()}};
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
    return out + "]";
  }
  if (j.is_object()) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      out += (first ? "" : ", ") + k + ": " + scalar_text(v);
      first = false;
    }
    return out + "}";
  }
  return j.dump();
}

bool is_record_list(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_object(); });
}

void render_records(std::ostringstream& os, const Json& list, const std::string& indent) {
  std::vector<std::string> keys;
  for (const auto& rec : list)
    for (const auto& [k, v] : rec.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
  for (const auto& rec : list) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      row.push_back(rec.contains(keys[c]) ? scalar_text(rec[keys[c]]) : "");
      width[c] = std::max(width[c], row.back().size());
    }
    cells.push_back(std::move(row));
  }
  auto line = [&](const std::vector<std::string>& row) {
    os << indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  };
  line(keys);
  for (const auto& row : cells) line(row);
}

} // namespace

std::string render_table(const Json& j) {
  std::ostringstream os;
  if (is_record_list(j)) {
    render_records(os, j, "");
    return os.str();
  }
  if (!j.is_object()) return scalar_text(j) + "\n";
  std::size_t width = 0;
  for (const auto& [k, v] : j.items())
    if (!is_record_list(v)) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (is_record_list(v)) continue;
    os << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << "\n";
  }
  for (const auto& [k, v] : j.items()) {
    if (!is_record_list(v)) continue;
    os << "\n" << k << ":\n";
    render_records(os, v, "  ");
  }
  return os.str();
}

} // namespace hfg
