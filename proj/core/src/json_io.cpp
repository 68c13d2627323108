#include "bax/json_io.hpp"

#include <json.hpp>

namespace bax {

using json = nlohmann::ordered_json;

std::string category_to_json(const CategoryData& cat) {
  json j;
  j["family"] = cat.family;
  j["params"] = cat.params;
  j["labels"] = cat.labels;
  const int n = cat.size();
  if (cat.rules) {
    j["dual"] = cat.rules->dual;
    json N = json::array();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if ((*cat.rules)(a, b, c)) N.push_back({a, b, c});
    j["N"] = N;
  }
  if (cat.dims) j["dims"] = cat.dims->d;
  json delta = json::array();
  for (const auto& d : cat.twists.delta) delta.push_back(d ? json(to_string(*d)) : json(nullptr));
  j["Delta"] = delta;
  json nu = json::array();
  for (const auto& [k, s] : cat.twists.nu) nu.push_back({k[0], k[1], k[2], s});
  j["nu"] = nu;
  if (cat.f) {
    json F = json::array();
    for (const auto& [idx, v] : cat.f->entries()) F.push_back({idx, {v.real(), v.imag()}});
    j["F"] = F;
  }
  if (cat.declared) {
    json d;
    d["rho"] = cat.declared->rho;
    d["channels"] = cat.declared->channels;
    json g = json::object();
    for (const auto& [phi, edges] : cat.declared->graphs) {
      json e = json::array();
      for (const auto& [a, b] : edges) e.push_back({a, b});
      g[std::to_string(phi)] = e;
    }
    d["graphs"] = g;
    j["declared"] = d;
  }
  if (!cat.notes.empty()) j["notes"] = cat.notes;
  return j.dump(1);
}

CategoryData category_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("category JSON: ") + e.what());
  }
  try {
    CategoryData cat;
    cat.family = j.value("family", "custom");
    cat.params = j.value("params", "");
    cat.labels = j.at("labels").get<std::vector<std::string>>();
    const int n = cat.size();
    auto check = [n](int v) {
      if (v < 0 || v >= n) throw DomainError("category JSON: label id out of range");
      return v;
    };
    if (j.contains("N")) {
      FusionRules rules(n);
      for (const auto& t : j.at("N")) rules.set(check(t.at(0)), check(t.at(1)), check(t.at(2)), 1);
      if (j.contains("dual")) rules.dual = j.at("dual").get<std::vector<Label>>();
      cat.rules = rules;
    }
    if (j.contains("dims")) cat.dims = QuantumDims{j.at("dims").get<std::vector<double>>()};
    for (const auto& d : j.at("Delta")) {
      if (d.is_null())
        cat.twists.delta.emplace_back(std::nullopt);
      else
        cat.twists.delta.emplace_back(parse_rational(d.get<std::string>()));
    }
    for (const auto& t : j.at("nu")) cat.twists.nu[{check(t.at(0)), check(t.at(1)), check(t.at(2))}] = t.at(3).get<int>();
    if (j.contains("F")) {
      FSymbolTable F(n);
      for (const auto& e : j.at("F")) {
        const auto& i = e.at(0);
        F.set(check(i.at(0)), check(i.at(1)), check(i.at(2)), check(i.at(3)), check(i.at(4)), check(i.at(5)),
              cplx(e.at(1).at(0).get<double>(), e.at(1).at(1).get<double>()));
      }
      cat.f = F;
    }
    if (j.contains("declared")) {
      const auto& d = j.at("declared");
      DeclaredChannels dc;
      dc.rho = check(d.at("rho"));
      dc.channels = d.at("channels").get<std::vector<Label>>();
      for (const auto& [phi, edges] : d.at("graphs").items()) {
        auto& out = dc.graphs[check(std::stoi(phi))];
        for (const auto& e : edges) out.emplace_back(check(e.at(0)), check(e.at(1)));
      }
      cat.declared = dc;
    }
    if (j.contains("notes")) cat.notes = j.at("notes").get<std::vector<std::string>>();
    return cat;
  } catch (const json::exception& e) {
    throw DomainError(std::string("category JSON: ") + e.what());
  }
}

}  // namespace bax
