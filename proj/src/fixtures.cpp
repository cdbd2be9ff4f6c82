#include "x0eq/fixtures.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

namespace x0eq {

using nlohmann::json;

std::string Involution::str() const {
  switch (kind) {
    case InvolutionKind::kAtkinLehner:
      return "w" + std::to_string(q);
    case InvolutionKind::kS2:
      return "S2";
    case InvolutionKind::kS2ConjugateFricke:
      return "(S2*wN)^2";
  }
  return "?";
}

const BiellipticDatum* FixtureSet::find(int64_t level) const {
  for (const auto& d : data)
    if (d.level == level) return &d;
  return nullptr;
}

const WeierstrassCurve* FixtureSet::find_curve(const std::string& label) const {
  for (const auto& d : data)
    if (d.curve.label == label) return &d.curve;
  return nullptr;
}

std::vector<int64_t> FixtureSet::levels() const {
  std::vector<int64_t> out;
  for (const auto& d : data) out.push_back(d.level);
  return out;
}

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fixture_error("cannot open fixture file " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw fixture_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// {"scalar": "-3", "factors": [["-2","1"], ...]} -> expanded coefficients
std::vector<Rat> parse_poly(const json& j, const std::string& where) {
  if (j.is_null()) return {};
  Rat scalar(parse_power_int(j.value("scalar", std::string("1"))));
  std::vector<Rat> acc{scalar};
  for (const auto& f : j.at("factors")) {
    std::vector<Rat> fac;
    for (const auto& c : f) fac.emplace_back(parse_power_int(c.get<std::string>()));
    if (fac.empty()) throw fixture_error(where + ": empty polynomial factor");
    acc = poly_mul(acc, fac);
  }
  if (acc.size() == 1 && acc[0] == 0) return {};
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

Involution parse_involution(const json& j, const std::string& where) {
  Involution w;
  std::string type = j.at("type").get<std::string>();
  w.as_printed = j.value("as_printed", "");
  if (type == "AL") {
    w.kind = InvolutionKind::kAtkinLehner;
    w.q = j.at("Q").get<int64_t>();
  } else if (type == "S2") {
    w.kind = InvolutionKind::kS2;
  } else if (type == "S2W64") {
    w.kind = InvolutionKind::kS2ConjugateFricke;
  } else {
    throw fixture_error(where + ": unknown involution type " + type);
  }
  return w;
}

void validate_curve(const WeierstrassCurve& E, const std::string& where) {
  Int disc = E.discriminant();  // throws on singular model
  if (E.conductor < 1) throw fixture_error(where + ": missing conductor");
  auto cond_primes = factorize(E.conductor);
  for (auto [p, e] : cond_primes)
    if (!mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)))
      throw fixture_error(where + ": conductor prime " + std::to_string(p) +
                          " does not divide the discriminant of " + E.label);
  // Models are globally minimal, so the discriminant support cannot exceed
  // the conductor support; a violation means a mistranscribed model.
  Int rest = disc < 0 ? Int(-disc) : disc;
  for (auto [p, e] : cond_primes)
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p)))
      rest /= static_cast<unsigned long>(p);
  if (rest != 1)
    throw fixture_error(where + ": discriminant of " + E.label +
                        " has prime support outside the conductor");
}

}  // namespace

FixtureSet load_fixtures(const std::string& dir) {
  auto path = [&](const std::string& name) { return dir + "/" + name; };
  json t1 = read_json(path("table1.json"));
  json t2 = read_json(path("table2.json"));
  json t3 = read_json(path("table3.json"));
  json t4 = read_json(path("table4.json"));
  json t5 = read_json(path("table5.json"));
  json t6 = read_json(path("table6.json"));

  FixtureSet set;
  auto load_curves = [&](const json& tab, bool new_case) {
    for (const auto& row : tab.at("rows")) {
      BiellipticDatum d;
      d.level = row.at("level").get<int64_t>();
      std::string where = "table" + std::string(new_case ? "1" : "2") +
                          " level " + std::to_string(d.level);
      d.new_case = new_case;
      d.w = parse_involution(row.at("w"), where);
      const auto& cj = row.at("curve");
      const auto& a = cj.at("a");
      d.curve.a1 = a.at(0).get<int64_t>();
      d.curve.a2 = a.at(1).get<int64_t>();
      d.curve.a3 = a.at(2).get<int64_t>();
      d.curve.a4 = a.at(3).get<int64_t>();
      d.curve.a6 = a.at(4).get<int64_t>();
      d.curve.conductor = cj.at("conductor").get<int64_t>();
      d.curve.label = cj.at("label").get<std::string>();
      validate_curve(d.curve, where);
      if (new_case && d.curve.conductor != d.level)
        throw fixture_error(where + ": new-case conductor must equal level");
      if (d.level % d.curve.conductor != 0)
        throw fixture_error(where + ": conductor does not divide level");

      const auto& hj = row.at("h");
      d.h_recipe.base_curve = d.curve;
      d.h_recipe.post_substitution = hj.value("post_substitution", int64_t(1));
      for (const auto& term : hj.at("terms"))
        d.h_recipe.terms.emplace_back(term.at(0).get<int64_t>(),
                                      term.at(1).get<int64_t>());
      d.h_recipe.validate(d.level);
      d.h_printed = hj.value("as_printed", "");
      for (const auto& e : row.value("errata", json::array()))
        d.errata.push_back(e.get<std::string>());
      set.data.push_back(std::move(d));
    }
  };
  load_curves(t1, true);
  load_curves(t2, false);

  auto attach_t = [&](const json& tab, int table_no) {
    for (const auto& row : tab.at("rows")) {
      int64_t level = row.at("level").get<int64_t>();
      std::string where =
          "table" + std::to_string(table_no) + " level " + std::to_string(level);
      auto it = std::find_if(set.data.begin(), set.data.end(),
                             [&](const auto& d) { return d.level == level; });
      if (it == set.data.end())
        throw fixture_error(where + ": level without a curve row");
      it->t_spec.level = level;
      for (const auto& term : row.at("terms"))
        it->t_spec.terms.push_back(TSpecTerm{
            parse_power_int(term.at("coeff").get<std::string>()),
            EtaQuotient::parse(level, term.at("eta").get<std::string>())});
      try {
        it->t_spec.validate();
      } catch (const std::exception& e) {
        throw fixture_error(where + ": " + e.what());
      }
      it->t_printed = row.value("as_printed", "");
      for (const auto& e : row.value("errata", json::array()))
        it->errata.push_back(e.get<std::string>());
    }
  };
  attach_t(t3, 3);
  attach_t(t4, 4);

  auto attach_p = [&](const json& tab, int table_no) {
    for (const auto& row : tab.at("rows")) {
      int64_t level = row.at("level").get<int64_t>();
      std::string where =
          "table" + std::to_string(table_no) + " level " + std::to_string(level);
      auto it = std::find_if(set.data.begin(), set.data.end(),
                             [&](const auto& d) { return d.level == level; });
      if (it == set.data.end())
        throw fixture_error(where + ": level without a curve row");
      it->expected_p.p1 = parse_poly(row.at("p1"), where);
      it->expected_p.p2 = parse_poly(row.value("p2", json()), where);
      if (it->expected_p.deg1() < 0)
        throw fixture_error(where + ": empty P1");
      for (const auto& e : row.value("errata", json::array()))
        it->errata.push_back(e.get<std::string>());
    }
  };
  attach_p(t5, 5);
  attach_p(t6, 6);

  std::sort(set.data.begin(), set.data.end(),
            [](const auto& a, const auto& b) { return a.level < b.level; });
  std::set<int64_t> seen;
  for (const auto& d : set.data) {
    if (!seen.insert(d.level).second)
      throw fixture_error("duplicate level " + std::to_string(d.level));
    if (d.t_spec.terms.empty())
      throw fixture_error("level " + std::to_string(d.level) +
                          " has no t specification");
    if (d.expected_p.deg1() < 0)
      throw fixture_error("level " + std::to_string(d.level) +
                          " has no expected polynomial");
    if (!d.w.is_atkin_lehner() && d.level != 64 && d.level != 72)
      throw fixture_error("level " + std::to_string(d.level) +
                          ": unexpected non-Atkin-Lehner involution");
  }
  if (set.data.size() != 30)
    throw fixture_error("expected 30 levels, found " +
                        std::to_string(set.data.size()));
  return set;
}

std::string locate_fixtures(const std::string& explicit_path) {
  namespace fs = std::filesystem;
  auto ok = [](const std::string& p) {
    return fs::exists(fs::path(p) / "table1.json");
  };
  if (!explicit_path.empty()) {
    if (ok(explicit_path)) return explicit_path;
    throw fixture_error("no fixtures at " + explicit_path);
  }
  if (const char* env = std::getenv("X0EQ_FIXTURES")) {
    if (ok(env)) return env;
    throw fixture_error("X0EQ_FIXTURES points to " + std::string(env) +
                        " but table1.json is not there");
  }
  for (const char* cand : {"fixtures", "../fixtures", "../../fixtures"})
    if (ok(cand)) return cand;
  throw fixture_error(
      "cannot locate the fixture directory; pass --fixtures or set "
      "X0EQ_FIXTURES");
}

}  // namespace x0eq
