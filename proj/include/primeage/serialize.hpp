#pragma once

#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "primeage/ages.hpp"
#include "primeage/catalogue.hpp"
#include "primeage/graph_io.hpp"
#include "primeage/realizers.hpp"
#include "primeage/words.hpp"

namespace primeage {

using json = nlohmann::ordered_json;

// ---- words ------------------------------------------------------------------

inline json to_json(const Word& w) {
  json j;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, word_kind::Explicit>) {
          j["kind"] = "explicit";
          j["bits"] = d.bits;
        } else if constexpr (std::is_same_v<T, word_kind::Periodic>) {
          j["kind"] = "periodic";
          j["pattern"] = d.pattern;
        } else if constexpr (std::is_same_v<T, word_kind::Mechanical>) {
          j["kind"] = "mechanical";
          if (auto* r = std::get_if<Rational>(&d.slope)) {
            j["slope"] = r->str();
          } else {
            const auto& cf = std::get<ContinuedFraction>(d.slope);
            j["slope"] = {{"cf", cf.str()}, {"depth", cf.depth}};
          }
          j["intercept"] = d.characteristic ? std::string("slope") : d.intercept.str();
        } else {
          j["kind"] = "substitution";
          j["rules"] = {{"0", d.image0}, {"1", d.image1}};
          j["seed"] = d.seed;
        }
      },
      w.descriptor());
  if (w.flipped()) j["complement"] = true;
  return j;
}

inline Word word_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    Word w = [&]() -> Word {
      if (kind == "explicit") return Word::bits(j.at("bits").get<std::string>());
      if (kind == "periodic") return Word::periodic(j.at("pattern").get<std::string>());
      if (kind == "fibonacci") return Word::fibonacci();
      if (kind == "substitution")
        return substitution_word(j.at("rules").at("0").get<std::string>(), j.at("rules").at("1").get<std::string>(),
                                 j.value("seed", std::string("0")));
      if (kind == "mechanical") {
        word_kind::Mechanical m;
        const json& s = j.at("slope");
        if (s.is_string()) {
          m.slope = Rational::parse(s.get<std::string>());
        } else {
          m.slope = ContinuedFraction::parse(s.at("cf").get<std::string>(), s.value("depth", std::size_t{48}));
        }
        const std::string icpt = j.value("intercept", std::string("0"));
        if (icpt == "slope")
          m.characteristic = true;
        else
          m.intercept = Rational::parse(icpt);
        return Word(std::move(m));
      }
      throw std::invalid_argument("word descriptor: unknown kind '" + kind + "'");
    }();
    return j.value("complement", false) ? w.complemented() : w;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("word descriptor: ") + e.what());
  }
}

// ---- graphs -----------------------------------------------------------------

/// graph6 body plus the label map as a sidecar.
inline json to_json(const Graph& g) {
  json j;
  j["order"] = g.n();
  j["graph6"] = graph6::encode(g);
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

inline Graph graph_from_json(const json& j) {
  try {
    Graph g = graph6::decode(j.at("graph6").get<std::string>());
    if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<Label>>());
    return g;
  } catch (const json::exception& e) {
    throw FormatError(std::string("graph json: ") + e.what());
  }
}

// ---- ages and bounds ----------------------------------------------------------

inline json to_json(const AgeApprox& age) {
  json j;
  j["source"] = age.source_description;
  j["k_max"] = age.k_max;
  j["levels"] = json::array();
  for (std::size_t k = 0; k < age.levels.size(); ++k) {
    json level;
    level["order"] = k;
    level["count"] = age.levels[k].size();
    level["graph6"] = json::array();
    for (const auto& [key, g] : age.levels[k]) level["graph6"].push_back(graph6::encode(g));
    j["levels"].push_back(std::move(level));
  }
  return j;
}

inline AgeApprox age_from_json(const json& j) {
  AgeApprox age;
  age.source_description = j.at("source").get<std::string>();
  age.k_max = j.at("k_max").get<std::size_t>();
  age.levels.resize(age.k_max + 1);
  for (const auto& level : j.at("levels")) {
    const auto k = level.at("order").get<std::size_t>();
    if (k > age.k_max) throw FormatError("age json: level beyond k_max");
    for (const auto& code : level.at("graph6")) {
      Graph g = graph6::decode(code.get<std::string>());
      age.levels[k].emplace(canonical_key(g), canonical_form(g));
    }
  }
  return age;
}

inline json to_json(const BoundCertificate& c) {
  return json{{"graph6", graph6::encode(c.graph)},
              {"order", c.graph.n()},
              {"edges", c.graph.edge_count()},
              {"checked_deletions", c.checked_deletions},
              {"non_membership_scale", c.scale},
              {"stable", c.stable},
              {"evidence", "finite-scale"}};
}

inline BoundCertificate bound_from_json(const json& j) {
  BoundCertificate c;
  c.graph = graph6::decode(j.at("graph6").get<std::string>());
  c.key = canonical_key(c.graph);
  c.checked_deletions = j.at("checked_deletions").get<std::size_t>();
  c.scale = j.at("non_membership_scale").get<std::size_t>();
  c.stable = j.at("stable").get<bool>();
  return c;
}

inline json to_json(const JonssonReport& r) {
  json j;
  j["k_max"] = r.k_max;
  j["prime_only"] = r.prime_only;
  j["level_counts"] = r.level_counts;
  j["degenerate"] = r.degenerate;
  j["cofinality"] = json::array();
  for (const auto& e : r.cofinality) {
    json row{{"n", e.n}};
    row["m"] = e.m ? json(*e.m) : json(nullptr);
    if (!e.m && e.failure)
      row["failure"] = {graph6::encode(e.failure->first), graph6::encode(e.failure->second)};
    j["cofinality"].push_back(std::move(row));
  }
  j["evidence"] = "finite-scale";
  return j;
}

// ---- realizers ----------------------------------------------------------------

inline json to_json(const Realizer& r) { return json{{"L", r.first}, {"M", r.second}}; }

inline Realizer realizer_from_json(const json& j) {
  return {j.at("L").get<LinearOrder>(), j.at("M").get<LinearOrder>()};
}

inline std::string one_line(const std::vector<std::size_t>& sigma) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < sigma.size(); ++i) out << (i ? " " : "") << sigma[i];
  out << ')';
  return out.str();
}

// ---- census -------------------------------------------------------------------

inline std::string census_csv(const std::vector<std::size_t>& counts) {
  std::string out = "order,count\n";
  for (std::size_t k = 0; k < counts.size(); ++k) out += std::to_string(k) + "," + std::to_string(counts[k]) + "\n";
  return out;
}

inline json census_json(const std::vector<std::size_t>& counts) {
  json j = json::array();
  for (std::size_t k = 0; k < counts.size(); ++k) j.push_back({{"order", k}, {"count", counts[k]}});
  return j;
}

}  // namespace primeage
