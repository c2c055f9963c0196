// primeage: experiment runner for word graphs, prime graphs and their ages.
//
// Exit codes: 0 success, 1 internal invariant violation, 2 user or config error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "primeage/primeage.hpp"

namespace fs = std::filesystem;
using namespace primeage;

namespace {

constexpr const char* kOutDirEnv = "PRIMEAGE_OUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads `--config file.json`. Top-level keys set global options; an object
// named after a subcommand sets that subcommand's options. Values given on
// the command line take precedence.
class JsonConfig : public CLI::Config {
public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return {}; }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config: top level must be an object");
    std::vector<CLI::ConfigItem> items;
    flatten(j, {}, items);
    return items;
  }

private:
  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void flatten(const nlohmann::json& j, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto p = parents;
        p.push_back(key);
        flatten(value, p, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

// ---- shared option groups ------------------------------------------------------

struct WordOptions {
  std::string bits, periodic, sturmian, cf, intercept = "0", subst, subst_seed = "0", word_json;
  bool fib = false, thue_morse = false, complement = false;
  std::size_t depth = 48;

  void attach(CLI::App* app) {
    app->add_option("--bits", bits, "explicit finite word");
    app->add_option("--periodic", periodic, "repeat this pattern");
    app->add_flag("--fib", fib, "Fibonacci word (0->01, 1->0)");
    app->add_flag("--thue-morse", thue_morse, "Thue-Morse word");
    app->add_option("--sturmian", sturmian, "mechanical word with rational slope p/q");
    app->add_option("--cf", cf, "mechanical word with continued-fraction slope, e.g. '0;2,(1)'");
    app->add_option("--depth", depth, "continued-fraction expansion depth")->check(CLI::PositiveNumber);
    app->add_option("--intercept", intercept, "intercept p/q, or 'slope' for the characteristic word");
    app->add_option("--subst", subst, "substitution images 'a,b' for 0->a and 1->b");
    app->add_option("--subst-seed", subst_seed, "seed of the substitution fixed point");
    app->add_option("--word-json", word_json, "word descriptor as JSON (file path or inline)");
    app->add_flag("--complement", complement, "complement every letter");
  }

  Word build() const {
    std::vector<Word> picked;
    if (!bits.empty()) picked.push_back(Word::bits(bits));
    if (!periodic.empty()) picked.push_back(Word::periodic(periodic));
    if (fib) picked.push_back(Word::fibonacci());
    if (thue_morse) picked.push_back(Word::thue_morse());
    if (!sturmian.empty() || !cf.empty()) {
      if (!sturmian.empty() && !cf.empty()) throw UsageError("give either --sturmian or --cf, not both");
      word_kind::Mechanical m;
      if (!sturmian.empty())
        m.slope = Rational::parse(sturmian);
      else
        m.slope = ContinuedFraction::parse(cf, depth);
      if (intercept == "slope")
        m.characteristic = true;
      else
        m.intercept = Rational::parse(intercept);
      picked.push_back(Word(std::move(m)));
    }
    if (!subst.empty()) {
      const auto comma = subst.find(',');
      if (comma == std::string::npos) throw UsageError("--subst expects 'image0,image1'");
      picked.push_back(substitution_word(subst.substr(0, comma), subst.substr(comma + 1), subst_seed));
    }
    if (!word_json.empty()) picked.push_back(word_from_json(load_json(word_json)));
    if (picked.empty()) throw UsageError("no word given (use --bits, --periodic, --fib, --sturmian, --cf, ...)");
    if (picked.size() > 1) throw UsageError("more than one word descriptor given");
    return complement ? picked.front().complemented() : picked.front();
  }

  static nlohmann::json load_json(const std::string& source) {
    try {
      if (!source.empty() && (source.front() == '{' || source.front() == '['))
        return nlohmann::json::parse(source);
      std::ifstream in(source);
      if (!in) throw UsageError("cannot open " + source);
      return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("bad JSON: ") + e.what());
    }
  }
};

struct GraphInput {
  std::string graph6, in;

  void attach(CLI::App* app) {
    app->add_option("--graph6", graph6, "graph6 code");
    app->add_option("--in", in, "file of graph6 lines ('-' for stdin)");
  }

  std::vector<Graph> read() const {
    if (!graph6.empty() && !in.empty()) throw UsageError("give either --graph6 or --in");
    if (!graph6.empty()) return {graph6::decode(graph6)};
    if (in.empty()) throw UsageError("no graph given (use --graph6 or --in)");
    if (in == "-") return graph6::read_all(std::cin);
    std::ifstream file(in);
    if (!file) throw UsageError("cannot open " + in);
    return graph6::read_all(file);
  }
};

struct Output {
  std::string path;
  std::string format = "text";

  void attach(CLI::App* app, std::vector<std::string> formats) {
    app->add_option("--out", path, "output file (relative paths resolve against $" + std::string(kOutDirEnv) + ")");
    app->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
    format = formats.front();
  }

  fs::path resolve(const std::string& p) const {
    fs::path out(p);
    if (out.is_relative())
      if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) out = fs::path(dir) / out;
    return out;
  }

  void write(const std::string& text) const { write_to(path, text); }

  void write_to(const std::string& p, const std::string& text) const {
    if (p.empty()) {
      std::cout << text;
      return;
    }
    const fs::path target = resolve(p);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary);
    if (!out) throw UsageError("cannot write " + target.string());
    out << text;
  }
};

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// Every artifact is re-read and checked before it is written.
void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

std::string labels_sidecar(const Graph& g) { return dump(to_json(g)); }

// ---- commands ------------------------------------------------------------------

struct WordCmd {
  WordOptions word;
  Output out;
  std::size_t length = 40;
  std::optional<std::size_t> n_max;

  void attach(CLI::App* app) {
    word.attach(app);
    out.attach(app, {"text", "json", "csv"});
    app->add_option("--length,-L", length, "prefix length");
    app->add_option("--n-max", n_max, "largest factor length in the tables (default min(12, L/2))");
  }

  void run() const {
    const Word w = word.build();
    const std::string prefix = w.prefix(length);
    const std::size_t top = n_max.value_or(std::min<std::size_t>(12, length / 2));
    const auto complexity = factor_complexity(w, length, top);
    std::vector<std::optional<std::size_t>> recurrence;
    for (std::size_t n = 1; n <= top; ++n) recurrence.push_back(recurrence_bound_of(prefix, n));

    std::ostringstream s;
    if (out.format == "json") {
      nlohmann::ordered_json j;
      j["word"] = to_json(w);
      j["length"] = length;
      j["prefix"] = prefix;
      j["table"] = nlohmann::ordered_json::array();
      for (std::size_t n = 1; n <= top; ++n)
        j["table"].push_back({{"n", n},
                              {"complexity", complexity[n - 1]},
                              {"recurrence", recurrence[n - 1] ? nlohmann::ordered_json(*recurrence[n - 1])
                                                               : nlohmann::ordered_json(nullptr)}});
      s << dump(j);
    } else if (out.format == "csv") {
      s << "n,complexity,recurrence\n";
      for (std::size_t n = 1; n <= top; ++n)
        s << n << ',' << complexity[n - 1] << ',' << (recurrence[n - 1] ? std::to_string(*recurrence[n - 1]) : "")
          << '\n';
    } else {
      s << prefix << '\n';
      if (top > 0) {
        s << "n\tp(n)\tR(n)\n";
        for (std::size_t n = 1; n <= top; ++n)
          s << n << '\t' << complexity[n - 1] << '\t'
            << (recurrence[n - 1] ? std::to_string(*recurrence[n - 1]) : "none") << '\n';
      }
    }
    out.write(s.str());
  }
};

struct GraphCmd {
  WordOptions word;
  Output out;
  std::size_t length = 10;
  bool forward = false, complement_graph = false;

  void attach(CLI::App* app) {
    word.attach(app);
    out.attach(app, {"graph6", "dot", "json"});
    app->add_option("--length,-L", length, "prefix length (the graph has L+1 vertices)");
    app->add_flag("--forward", forward, "forward variant on labels 0..L");
    app->add_flag("--complement-graph", complement_graph, "complement the graph after construction");
  }

  void run() const {
    const Word w = word.build();
    Graph g = forward ? graph_of_word_forward(w, length) : graph_of_word(w, length);
    if (complement_graph) {
      auto labels = g.labels();
      g = complement(g);
      g.set_labels(labels);
    }
    const std::string code = graph6::encode(g);
    require(graph6::decode(code) == strip_labels(g), "graph6 round trip");

    std::string body;
    if (out.format == "graph6")
      body = code + "\n";
    else if (out.format == "dot")
      body = to_dot(g, "G");
    else
      body = labels_sidecar(g);
    out.write(body);
    if (!out.path.empty() && out.format != "json") out.write_to(out.path + ".json", labels_sidecar(g));
  }
};

struct PrimeCmd {
  GraphInput input;
  Output out;

  void attach(CLI::App* app) {
    input.attach(app);
    out.attach(app, {"text", "json"});
  }

  void run() const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::ostringstream s;
    PrimeHeights heights;
    for (const Graph& g : input.read()) {
      nlohmann::ordered_json row;
      row["graph6"] = graph6::encode(g);
      row["order"] = g.n();
      const auto module = find_nontrivial_module(g);
      const bool prime = !module;
      row["prime"] = prime;
      if (module) {
        std::uint64_t mask = 0;
        for (Vertex v : module->subset) mask |= std::uint64_t{1} << v;
        require(is_module(g, mask), "reported module is not a module");
        row["module"] = module->subset;
      }
      if (prime) {
        row["critical"] = is_critically_prime(g);
        if (g.n() >= 7) {
          const auto pair = schmerl_trotter_pair(g);
          if (pair) {
            Graph rest = g;
            const Vertex hi = std::max(pair->first, pair->second), lo = std::min(pair->first, pair->second);
            rest = delete_vertex(delete_vertex(rest, hi), lo);
            require(is_prime(rest), "Schmerl-Trotter pair does not leave a prime graph");
            row["schmerl_trotter"] = {pair->first, pair->second};
          } else {
            row["schmerl_trotter"] = nullptr;
          }
        }
        if (g.n() <= heights.cap()) {
          const auto rec = heights(g);
          row["height"] = rec.height;
          row["order_bounds"] = rec.satisfies_order_bounds();
        }
      }
      if (out.format == "text") {
        s << row["graph6"].get<std::string>() << "\tn=" << g.n() << "\tprime=" << (prime ? "true" : "false");
        if (module) s << "\tmodule=" << row["module"].dump();
        if (prime) s << "\tcritical=" << (row["critical"].get<bool>() ? "true" : "false");
        if (row.contains("schmerl_trotter")) s << "\tpair=" << row["schmerl_trotter"].dump();
        if (row.contains("height")) s << "\theight=" << row["height"].get<std::size_t>();
        s << '\n';
      }
      rows.push_back(std::move(row));
    }
    out.write(out.format == "json" ? dump(rows) : s.str());
  }
};

struct CensusCmd {
  Output out;
  std::size_t n_max = 7;

  void attach(CLI::App* app) {
    out.attach(app, {"text", "csv", "json"});
    app->add_option("--n-max", n_max, "largest order (at most 8)")->check(CLI::Range(0, 8));
  }

  void run() const {
    const auto counts = prime_level_census(n_max);
    if (out.format == "json")
      out.write(dump(census_json(counts)));
    else if (out.format == "csv")
      out.write(census_csv(counts));
    else {
      std::ostringstream s;
      s << "prime graphs by order\n";
      for (std::size_t k = 0; k < counts.size(); ++k) s << k << '\t' << counts[k] << '\n';
      out.write(s.str());
    }
  }
};

struct AgeCmd {
  WordOptions word;
  GraphInput input;
  Output out;
  std::size_t length = 60, k_max = 6;
  unsigned* threads = nullptr;

  void attach(CLI::App* app, unsigned* thread_knob) {
    threads = thread_knob;
    word.attach(app);
    input.attach(app);
    out.attach(app, {"text", "json", "csv"});
    app->add_option("--length,-L", length, "word prefix length");
    app->add_option("--k-max,-k", k_max, "largest member order")->check(CLI::Range(0, 64));
  }

  AgeApprox compute() const {
    if (!input.graph6.empty() || !input.in.empty()) {
      const auto graphs = input.read();
      if (graphs.size() != 1) throw UsageError("age: expected exactly one source graph");
      return age_enumerate(graphs.front(), k_max, graph6::encode(graphs.front()), *threads);
    }
    const Word w = word.build();
    AgeApprox age = age_enumerate(w, length, k_max);
    age.source_description = to_json(w).dump() + " L=" + std::to_string(length);
    return age;
  }

  void run() const {
    const AgeApprox age = compute();
    for (const auto& level : age.levels)
      for (const auto& [key, g] : level)
        for (Vertex v = 0; v < g.n(); ++v)
          require(age.contains(canonical_key(delete_vertex(g, v))), "age approximation is not hereditary");
    if (out.format == "json") {
      const auto j = to_json(age);
      require(age_from_json(j).member_count() == age.member_count(), "age JSON round trip");
      out.write(dump(j));
      return;
    }
    std::ostringstream s;
    if (out.format == "csv") {
      s << "order,members\n";
      for (std::size_t k = 0; k < age.levels.size(); ++k) s << k << ',' << age.levels[k].size() << '\n';
    } else {
      s << "source: " << age.source_description << "\norder\tmembers\n";
      for (std::size_t k = 0; k < age.levels.size(); ++k) s << k << '\t' << age.levels[k].size() << '\n';
      s << "total\t" << age.member_count() << '\n';
    }
    out.write(s.str());
  }
};

struct IncludesCmd {
  std::string a, b;

  void attach(CLI::App* app) {
    app->add_option("a", a, "age JSON written by 'age --format json'")->required();
    app->add_option("b", b, "second age JSON")->required();
  }

  void run() const {
    auto load = [](const std::string& p) {
      try {
        return age_from_json(WordOptions::load_json(p));
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("age json: ") + e.what());
      }
    };
    const AgeApprox x = load(a), y = load(b);
    for (const auto& [label, r] : {std::pair{"a in b", age_includes(x, y)}, std::pair{"b in a", age_includes(y, x)}}) {
      std::cout << label << ": " << (r.included ? "yes at scale" : "no");
      if (r.witness) std::cout << " (witness " << graph6::encode(*r.witness) << ")";
      std::cout << '\n';
    }
  }
};

struct BoundsCmd {
  WordOptions word;
  Output out;
  std::size_t length = 0, k_max = 6;

  void attach(CLI::App* app) {
    word.attach(app);
    out.attach(app, {"text", "json", "graph6", "csv"});
    app->add_option("--length,-L", length, "word prefix length (default 10*k_max)");
    app->add_option("--k-max,-k", k_max, "largest bound order")->check(CLI::Range(1, 64));
  }

  void run() const {
    const Word w = word.build();
    const std::size_t l = length ? length : 10 * k_max;
    const auto certs = bounds_enumerate(w, l, k_max);
    const Graph at_l = graph_of_word(w, l);
    for (const auto& c : certs) require(validate_bound(c, at_l), "bound certificate failed re-validation");

    std::ostringstream s;
    if (out.format == "json") {
      nlohmann::ordered_json j;
      j["word"] = to_json(w);
      j["length"] = l;
      j["k_max"] = k_max;
      j["bounds"] = nlohmann::ordered_json::array();
      for (const auto& c : certs) j["bounds"].push_back(to_json(c));
      s << dump(j);
    } else if (out.format == "graph6") {
      for (const auto& c : certs) s << graph6::encode(c.graph) << '\n';
    } else if (out.format == "csv") {
      std::vector<std::size_t> per(k_max + 1, 0);
      for (const auto& c : certs) ++per[c.graph.n()];
      s << "order,bounds\n";
      for (std::size_t k = 0; k <= k_max; ++k) s << k << ',' << per[k] << '\n';
    } else {
      s << certs.size() << " bounds up to order " << k_max << " at L=" << l << '\n';
      for (const auto& c : certs)
        s << graph6::encode(c.graph) << "\tn=" << c.graph.n() << "\tedges=" << c.graph.edge_count()
          << "\tstable=" << (c.stable ? "yes" : "no") << '\n';
    }
    out.write(s.str());
  }
};

struct JonssonCmd {
  WordOptions word;
  Output out;
  std::size_t length = 60, k_max = 8, n_max = 5;
  bool all_members = false;

  void attach(CLI::App* app) {
    word.attach(app);
    out.attach(app, {"text", "json"});
    app->add_option("--length,-L", length, "word prefix length");
    app->add_option("--k-max,-k", k_max, "largest member order")->check(CLI::Range(1, 64));
    app->add_option("--n-max", n_max, "cofinality is reported for n = 0..n_max");
    app->add_flag("--all-members", all_members, "use every member, not only the prime ones");
  }

  void run() const {
    const Word w = word.build();
    const auto rep = jonsson_desk_check(age_enumerate(w, length, k_max), !all_members, n_max);
    if (out.format == "json") {
      out.write(dump(to_json(rep)));
      return;
    }
    std::ostringstream s;
    s << (all_members ? "members" : "prime members") << " per order:";
    for (auto c : rep.level_counts) s << ' ' << c;
    s << "\nn\tm(n)\n";
    for (const auto& e : rep.cofinality) s << e.n << '\t' << (e.m ? std::to_string(*e.m) : "none") << '\n';
    if (rep.degenerate) s << "degenerate: no members above order 2\n";
    out.write(s.str());
  }
};

struct RealizerCmd {
  std::string bits, check;
  Output out;

  void attach(CLI::App* app) {
    app->add_option("word", bits, "finite 0-1 word")->required();
    app->add_option("--check", check, "validate a realizer JSON file against the word instead");
    out.attach(app, {"json", "text"});
  }

  void run() const {
    const Graph g = graph_of_bits(bits);
    if (!check.empty()) {
      Realizer r;
      try {
        r = realizer_from_json(WordOptions::load_json(check));
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("realizer json: ") + e.what());
      }
      std::cout << "validated=" << (validate_realizer(r, g) ? "true" : "false") << '\n';
      return;
    }
    const Realizer r = build_realizer(bits, [](const Realizer& step, Label newest) {
      if (newest >= 0 && !is_extremal(step, newest)) throw InvariantViolation("newest vertex is not extremal");
    });
    const bool ok = validate_realizer(r, g);
    require(ok, "realizer does not induce the word graph");
    const auto sigma = bichain_to_permutation(r);
    if (out.format == "text") {
      std::ostringstream s;
      s << "L:";
      for (auto v : r.first) s << ' ' << v;
      s << "\nM:";
      for (auto v : r.second) s << ' ' << v;
      s << "\npermutation: " << one_line(sigma) << "\nvalidated=true\n";
      out.write(s.str());
      return;
    }
    auto j = to_json(r);
    j["permutation"] = sigma;
    j["validated"] = ok;
    out.write(dump(j));
  }
};

struct CatalogueCmd {
  std::string family;
  std::size_t n = 3;
  bool complemented = false;
  Output out;

  void attach(CLI::App* app) {
    std::vector<std::string> names;
    for (Family f : kFamilies) names.emplace_back(family_name(f));
    app->add_option("--family", family, "family name")->required()->check(CLI::IsMember(names));
    app->add_option("--n", n, "family parameter")->check(CLI::PositiveNumber);
    app->add_flag("--complemented", complemented, "emit the complement");
    out.attach(app, {"graph6", "dot", "json"});
  }

  void run() const {
    const Family f = parse_family(family);
    Graph g = family_member(f, n);
    if (complemented) g = complement(g);
    nlohmann::ordered_json manifest{{"family", family},   {"n", n},
                                    {"complemented", complemented}, {"order", g.n()},
                                    {"prime", g.n() <= kCoreWidth && is_prime(g)}, {"graph6", graph6::encode(g)}};
    if (out.format == "json")
      out.write(dump(manifest));
    else if (out.format == "dot")
      out.write(to_dot(g, family));
    else
      out.write(graph6::encode(g) + "\n");
    if (!out.path.empty() && out.format != "json") out.write_to(out.path + ".json", dump(manifest));
  }
};

struct DetectCmd {
  GraphInput input;
  std::size_t n = 3;
  Output out;

  void attach(CLI::App* app) {
    input.attach(app);
    app->add_option("--n", n, "family parameter")->check(CLI::PositiveNumber);
    out.attach(app, {"text", "json"});
  }

  void run() const {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    std::ostringstream s;
    for (const Graph& g : input.read()) {
      nlohmann::ordered_json row{{"graph6", graph6::encode(g)}, {"hits", nlohmann::ordered_json::array()}};
      s << graph6::encode(g) << ':';
      for (const auto& hit : detect_unavoidable(g, n)) {
        Graph pattern = family_member(hit.family, n);
        if (hit.complemented) pattern = complement(pattern);
        require(is_induced_embedding(pattern, g, hit.embedding), "detector hit failed re-validation");
        row["hits"].push_back({{"family", family_name(hit.family)}, {"complemented", hit.complemented}});
        s << ' ' << family_name(hit.family) << (hit.complemented ? "(complement)" : "");
      }
      s << '\n';
      all.push_back(std::move(row));
    }
    out.write(out.format == "json" ? dump(all) : s.str());
  }
};

struct VerifyCmd {
  std::uint64_t seed = verify::Config{}.seed;
  bool quiet = false;
  Output out;
  unsigned* threads = nullptr;

  void attach(CLI::App* app, unsigned* thread_knob) {
    threads = thread_knob;
    app->add_option("--seed", seed, "random seed for the sampled checks");
    app->add_flag("--quiet,-q", quiet, "no progress lines on stderr");
    out.attach(app, {"text"});
  }

  int run() const {
    verify::Config cfg;
    cfg.seed = seed;
    cfg.threads = *threads;
    const auto results = verify::run_all(cfg, [&](const verify::CriterionResult& r) {
      if (!quiet) std::cerr << verify::format_line(r) << std::endl;
    });
    out.write(verify::render(cfg, results));
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    return all ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primeage: prime graphs, word graphs and their ages"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file with option values; command-line flags win");
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  WordCmd word;
  GraphCmd graph;
  PrimeCmd prime;
  CensusCmd census;
  AgeCmd age;
  IncludesCmd includes;
  BoundsCmd bounds;
  JonssonCmd jonsson;
  RealizerCmd realizer;
  CatalogueCmd catalogue;
  DetectCmd detect;
  VerifyCmd verify_cmd;

  word.attach(app.add_subcommand("word", "print a word prefix with factor complexity and recurrence"));
  graph.attach(app.add_subcommand("graph", "emit the word graph of a prefix"));
  prime.attach(app.add_subcommand("prime", "primality, modules and heights of graphs"));
  census.attach(app.add_subcommand("census", "count prime graphs by order"));
  age.attach(app.add_subcommand("age", "age approximation of a word graph or an explicit graph"), &threads);
  includes.attach(app.add_subcommand("includes", "compare two saved age approximations"));
  bounds.attach(app.add_subcommand("bounds", "bound certificates of a word graph age"));
  jonsson.attach(app.add_subcommand("jonsson", "level counts and cofinality of prime members"));
  realizer.attach(app.add_subcommand("realizer", "two linear orders realizing a word graph"));
  catalogue.attach(app.add_subcommand("catalogue", "members of the unavoidable prime families"));
  detect.attach(app.add_subcommand("detect", "which unavoidable families embed in a graph"));
  verify_cmd.attach(app.add_subcommand("verify", "run the acceptance checks and print a report"), &threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "word") word.run();
    else if (name == "graph") graph.run();
    else if (name == "prime") prime.run();
    else if (name == "census") census.run();
    else if (name == "age") age.run();
    else if (name == "includes") includes.run();
    else if (name == "bounds") bounds.run();
    else if (name == "jonsson") jonsson.run();
    else if (name == "realizer") realizer.run();
    else if (name == "catalogue") catalogue.run();
    else if (name == "detect") detect.run();
    else if (name == "verify") return verify_cmd.run();
    return 0;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
