#include "qschur/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace qschur {

namespace {

json qtpoly_to_json(const QTPoly& p) {
  json arr = json::array();
  for (const auto& [k, v] : p.terms) arr.push_back({k.first, k.second, v.get_str()});
  return arr;
}

QTPoly qtpoly_from_json(const json& j) {
  QTPoly p;
  for (const auto& term : j) {
    int qe = term.at(0).get<int>(), te = term.at(1).get<int>();
    ZZ c(term.at(2).get<std::string>());
    if (c != 0) p.terms[{qe, te}] = c;
  }
  return p;
}

}  // namespace

json xpoly_to_json(const XPoly& p) {
  json terms = json::array();
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    json t;
    t["x"] = it->first;
    t["num"] = qtpoly_to_json(it->second.num);
    t["den"] = qtpoly_to_json(it->second.den);
    terms.push_back(std::move(t));
  }
  json j;
  j["n"] = p.n;
  j["terms"] = std::move(terms);
  return j;
}

XPoly xpoly_from_json(const json& j) {
  XPoly p(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    std::vector<int> exps = t.at("x").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != p.n)
      throw std::invalid_argument("xpoly_from_json: exponent length mismatch");
    QTRatio c(qtpoly_from_json(t.at("num")), qtpoly_from_json(t.at("den")));
    p.add_term(exps, c);
  }
  return p;
}

json grid_to_json(const Grid& g) {
  json j;
  j["shape"] = g.shape();
  j["rows"] = g.rows;
  return j;
}

Grid grid_from_json(const json& j) {
  Grid g;
  for (const auto& row : j.at("rows")) {
    std::vector<int> r;
    for (const auto& cell : row) {
      if (cell.is_null() || (cell.is_string() && cell.get<std::string>() == "inf"))
        throw std::invalid_argument("grid_from_json: plain grid cannot hold skew cells");
      r.push_back(cell.get<int>());
    }
    g.rows.push_back(std::move(r));
  }
  if (j.contains("shape") && j.at("shape").get<Composition>() != g.shape())
    throw std::invalid_argument("grid_from_json: shape disagrees with rows");
  return g;
}

json skew_to_json(const SkewGrid& s) {
  json rows = json::array();
  for (size_t i = 0; i < s.outer.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < s.inner[i]; ++j) row.push_back(nullptr);
    for (int v : s.rows[i]) row.push_back(v);
    rows.push_back(std::move(row));
  }
  json j;
  j["shape"] = s.outer;
  j["inner"] = s.inner;
  j["rows"] = std::move(rows);
  return j;
}

SkewGrid skew_from_json(const json& j) {
  SkewGrid s;
  for (const auto& row : j.at("rows")) {
    int skew = 0;
    std::vector<int> entries;
    for (const auto& cell : row) {
      if (cell.is_null()) {
        if (!entries.empty())
          throw std::invalid_argument("skew_from_json: skew cells must be a row prefix");
        ++skew;
      } else {
        entries.push_back(cell.get<int>());
      }
    }
    s.inner.push_back(skew);
    s.outer.push_back(skew + static_cast<int>(entries.size()));
    s.rows.push_back(std::move(entries));
  }
  return s;
}

json triarray_to_json(const TriArray& x) {
  json j;
  j["rows"] = x.rows;
  return j;
}

TriArray triarray_from_json(const json& j) {
  TriArray x;
  x.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  return x;
}

json path_to_json(const RationalPath& p) {
  json chain = json::array();
  for (const Perm& tau : p.chain) chain.push_back(tau.one_line());
  json cuts = json::array();
  for (const QQ& a : p.cuts) cuts.push_back(a.get_str());
  json j;
  j["lambda"] = p.lambda;
  j["chain"] = std::move(chain);
  j["cuts"] = std::move(cuts);
  return j;
}

RationalPath path_from_json(const json& j) {
  RationalPath p;
  p.lambda = j.at("lambda").get<Composition>();
  for (const auto& ol : j.at("chain")) p.chain.push_back(Perm(ol.get<std::vector<int>>()));
  for (const auto& c : j.at("cuts")) {
    QQ v(c.get<std::string>());
    v.canonicalize();
    p.cuts.push_back(v);
  }
  return p;
}

json expansion_to_json(const LRExpansion& e) {
  std::vector<Composition> betas;
  for (const auto& [b, c] : e.terms) betas.push_back(b);
  std::sort(betas.begin(), betas.end(),
            [](const Composition& a, const Composition& b) { return lexrev_compare(a, b) > 0; });
  json terms = json::array();
  for (const Composition& b : betas)
    terms.push_back({{"beta", b}, {"coeff", e.terms.at(b)}});
  json j;
  j["alpha"] = e.alpha;
  j["lambda"] = e.lambda;
  j["terms"] = std::move(terms);
  return j;
}

json insertion_to_json(const InsertionResult& r) {
  json j;
  j["tableau"] = grid_to_json(r.tableau);
  j["new_box"] = {r.new_box.first, r.new_box.second};
  json path = json::array();
  for (const auto& [i, c] : r.path) path.push_back({i, c});
  j["path"] = std::move(path);
  return j;
}

}  // namespace qschur
