#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "primeage/ages.hpp"
#include "primeage/canon.hpp"
#include "primeage/generate.hpp"
#include "primeage/graph_io.hpp"
#include "primeage/oracles.hpp"
#include "primeage/prime.hpp"
#include "primeage/realizers.hpp"
#include "primeage/word_graphs.hpp"
#include "primeage/words.hpp"

namespace primeage::verify {

struct Config {
  std::uint64_t seed = 20241016;
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::string random_bits(std::mt19937_64& rng, std::size_t length) {
  std::string s(length, '0');
  for (auto& c : s) c = (rng() & 1u) ? '1' : '0';
  return s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline std::vector<std::string> all_words(std::size_t max_length) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= max_length; ++len)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i)
        if ((m >> i) & 1u) s[i] = '1';
      out.push_back(std::move(s));
    }
  return out;
}

// Fibonacci slope 1/phi^2 = [0;2,1,1,...] and its neighbour [0;3,1,1,...].
inline Word sturmian_a() { return Word::characteristic(ContinuedFraction::parse("0;2,(1)")); }
inline Word sturmian_b() { return Word::characteristic(ContinuedFraction::parse("0;3,(1)")); }

}  // namespace detail

inline CriterionResult complement_identity(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x01);
  auto words = detail::all_words(8);
  for (int i = 0; i < 200; ++i) words.push_back(detail::random_bits(rng, detail::uniform(rng, 0, 100)));
  std::size_t failures = 0;
  for (const auto& w : words)
    if (graph_of_bits(complement_bits(w)) != complement(graph_of_bits(w))) ++failures;
  std::ostringstream d;
  d << words.size() << " words, " << failures << " mismatches";
  return {1, "complement identity", failures == 0, d.str()};
}

inline CriterionResult reversal_identity(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x02);
  auto words = detail::all_words(8);
  for (int i = 0; i < 100; ++i) words.push_back(detail::random_bits(rng, detail::uniform(rng, 9, 63)));
  std::size_t failures = 0;
  for (const auto& w : words) {
    std::string rev(w.rbegin(), w.rend());
    if (canonical_key(graph_of_bits_forward(rev)) != canonical_key(graph_of_bits(w))) ++failures;
  }
  std::ostringstream d;
  d << words.size() << " words, " << failures << " non-isomorphic pairs";
  return {2, "reversal identity", failures == 0, d.str()};
}

inline CriterionResult primality_oracle(const Config&) {
  const auto levels = graphs_up_to(7);
  std::size_t checked = 0, failures = 0;
  for (const auto& level : levels)
    for (const auto& g : level) {
      ++checked;
      const auto fast = find_nontrivial_module(g);
      const auto slow = oracle::nontrivial_module(g);
      if (fast.has_value() != slow.has_value()) ++failures;
      else if (fast && (!oracle::is_module(g, fast->subset) || fast->subset.size() < 2 || fast->subset.size() >= g.n()))
        ++failures;
    }
  std::ostringstream d;
  d << checked << " classes (" << levels[7].size() << " on 7 vertices), " << failures << " disagreements";
  return {3, "primality oracle equivalence", failures == 0 && levels[7].size() == 1044, d.str()};
}

struct PrimeCensusRun {
  std::vector<std::vector<Graph>> primes;  // by order, up to 8
};

inline CriterionResult schmerl_trotter(const PrimeCensusRun& run) {
  std::size_t checked = 0, failures = 0;
  for (std::size_t n : {7u, 8u})
    for (const auto& g : run.primes[n]) {
      ++checked;
      const auto pair = schmerl_trotter_pair(g);
      if (!pair || pair->first == pair->second) {
        ++failures;
        continue;
      }
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < g.n(); ++v)
        if (v != pair->first && v != pair->second) rest.push_back(v);
      if (!oracle::is_prime(induced_subgraph(g, rest))) ++failures;
    }
  std::ostringstream d;
  d << run.primes[7].size() << " primes on 7, " << run.primes[8].size() << " on 8 vertices; " << failures
    << " without a validated pair";
  return {4, "Schmerl-Trotter pairs (n = 7, 8)", failures == 0 && checked > 0, d.str()};
}

inline CriterionResult height_inequality(const PrimeCensusRun& run) {
  PrimeHeights heights(8);
  std::size_t checked = 0, violations = 0, max_height = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& g : run.primes[n]) {
      ++checked;
      const auto rec = heights(g);
      max_height = std::max(max_height, rec.height);
      if (!rec.satisfies_order_bounds()) ++violations;
    }
  std::ostringstream d;
  d << checked << " primes with 2 <= n <= 8, max height " << max_height << ", " << violations << " violations";
  return {5, "height inequality h <= n <= 2(h-1)", violations == 0 && checked > 0, d.str()};
}

inline CriterionResult realizers(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x06);
  auto words = detail::all_words(12);
  const std::size_t exhaustive = words.size();
  for (int i = 0; i < 10000; ++i) words.push_back(detail::random_bits(rng, detail::uniform(rng, 13, 16)));
  std::size_t failures = 0, step_failures = 0;
  for (const auto& w : words) {
    const auto r = build_realizer(w, [&](const Realizer& partial, Label newest) {
      if (!is_extremal(partial, newest)) ++step_failures;
    });
    if (!validate_realizer(r, graph_of_bits(w))) ++failures;
  }
  std::ostringstream d;
  d << exhaustive << " exhaustive + " << words.size() - exhaustive << " sampled words; " << failures
    << " validation failures, " << step_failures << " extremality failures";
  return {6, "word graphs are permutation graphs", failures == 0 && step_failures == 0, d.str()};
}

inline CriterionResult sturmian(const Config&) {
  const Word fib = Word::fibonacci();
  const auto p = factor_complexity(fib, 10000, 12);
  bool complexity_ok = true;
  for (std::size_t n = 1; n <= 12; ++n) complexity_ok = complexity_ok && p[n - 1] == n + 1;
  bool recurrence_ok = true;
  std::ostringstream d;
  d << "R(n) =";
  for (std::size_t n = 1; n <= 12; ++n) {
    auto m = recurrence_bound(fib, n, 10000);
    recurrence_ok = recurrence_ok && m.has_value();
    d << ' ' << (m ? std::to_string(*m) : "none");
  }
  const bool generators_agree = detail::sturmian_a().prefix(1000) == fib.prefix(1000);
  d << "; p(n)=n+1: " << (complexity_ok ? "yes" : "no") << "; mechanical = substitution on 1000 letters: "
    << (generators_agree ? "yes" : "no");
  return {7, "Sturmian diagnostics", complexity_ok && recurrence_ok && generators_agree, d.str()};
}

inline CriterionResult factor_age_consistency(const Config&) {
  const std::size_t length = 100, k = 5;
  const std::string a = detail::sturmian_a().prefix(length), b = detail::sturmian_b().prefix(length);
  std::optional<std::size_t> differ_at;
  for (std::size_t n = 1; n <= 10 && !differ_at; ++n)
    if (factors_of(a, n).factors != factors_of(b, n).factors) differ_at = n;
  const AgeApprox age_a = word_graph_age(a, k), age_b = word_graph_age(b, k);
  const auto ab = age_includes(age_a, age_b), ba = age_includes(age_b, age_a);
  const Graph ga = graph_of_bits(a), gb = graph_of_bits(b);
  auto witness_ok = [](const InclusionResult& r, const Graph& in, const Graph& out) {
    if (r.included || !r.witness) return false;
    auto emb = find_embedding(*r.witness, in);
    return emb && is_induced_embedding(*r.witness, in, *emb) && !embeds(*r.witness, out);
  };
  const bool ok_ab = witness_ok(ab, ga, gb), ok_ba = witness_ok(ba, gb, ga);
  std::ostringstream d;
  d << "factor sets differ at n=" << (differ_at ? std::to_string(*differ_at) : "none") << "; age(a) not in age(b): "
    << (ok_ab ? "witness " + graph6::encode(*ab.witness) : "no") << "; age(b) not in age(a): "
    << (ok_ba ? "witness " + graph6::encode(*ba.witness) : "no");
  // The verdict is taken at k; the first order where the two ages separate is
  // reported alongside.
  for (std::size_t kk = k + 1; kk <= 7 && !(ok_ab && ok_ba); ++kk) {
    const AgeApprox wa = word_graph_age(a, kk), wb = word_graph_age(b, kk);
    const auto xab = age_includes(wa, wb), xba = age_includes(wb, wa);
    if (witness_ok(xab, ga, gb) && witness_ok(xba, gb, ga)) {
      d << "; ages coincide at k=" << k << " (" << age_a.levels[k].size() << " classes), first separate at k=" << kk
        << " with witnesses " << graph6::encode(*xab.witness) << " and " << graph6::encode(*xba.witness);
      break;
    }
  }
  return {8, "factor/age consistency for two Sturmian slopes", differ_at.has_value() && ok_ab && ok_ba, d.str()};
}

inline CriterionResult bounds(const Config&) {
  std::ostringstream d;
  // Path: triangle and claw are bounds at k_max = 4.
  const Word ones = Word::constant('1');
  const auto path_bounds = bounds_enumerate(ones, 40, 4);
  const Graph path_l = graph_of_word(ones, 40), path_2l = graph_of_word(ones, 80);
  auto has_valid = [&](const Graph& target) {
    const auto key = canonical_key(target);
    return std::any_of(path_bounds.begin(), path_bounds.end(), [&](const BoundCertificate& c) {
      return c.key == key && validate_bound(c, path_l) && validate_bound(c, path_2l);
    });
  };
  const bool triangle = has_valid(make::clique(3)), claw = has_valid(make::star(3));
  d << "path: triangle " << (triangle ? "yes" : "no") << ", claw " << (claw ? "yes" : "no") << "; fibonacci counts";

  const Word fib = Word::fibonacci();
  std::vector<std::size_t> counts;
  std::size_t revalidation_failures = 0;
  for (std::size_t k = 4; k <= 6; ++k) {
    const auto certs = bounds_enumerate(fib, 10 * k, k);
    const Graph at_l = graph_of_word(fib, 10 * k), at_2l = graph_of_word(fib, 20 * k);
    for (const auto& c : certs)
      if (!c.stable || !validate_bound(c, at_l) || !validate_bound(c, at_2l)) ++revalidation_failures;
    counts.push_back(certs.size());
    d << ' ' << certs.size();
  }
  const bool increasing = counts[0] < counts[1] && counts[1] < counts[2];
  d << "; re-validation failures " << revalidation_failures;
  return {9, "bound certificates", triangle && claw && increasing && revalidation_failures == 0, d.str()};
}

/// Prime members up to order 11 are enumerated so that cofinality for small
/// orders can be witnessed by large primes of more than one order.
inline constexpr std::size_t kJonssonOrder = 11;

inline CriterionResult jonsson(const Config&) {
  const AgeApprox age = word_graph_age(Word::fibonacci().prefix(60), kJonssonOrder);
  const JonssonReport rep = jonsson_desk_check(age, true, 5);
  std::ostringstream d;
  d << "prime members per order:";
  for (auto c : rep.level_counts) d << ' ' << c;
  d << "; m(n):";
  for (const auto& e : rep.cofinality) d << ' ' << e.n << "->" << (e.m ? std::to_string(*e.m) : "none");
  const bool finite_levels = rep.level_counts.size() == kJonssonOrder + 1;
  return {10, "Jonsson desk check (Fibonacci, L=60)", finite_levels && !rep.degenerate && rep.cofinal_up_to(5),
          d.str()};
}

using Criterion = std::function<CriterionResult()>;

/// Criteria 1-10 in order; 4 and 5 share one exhaustive prime generation.
inline std::vector<CriterionResult> run_all(const Config& cfg,
                                            const std::function<void(const CriterionResult&)>& progress = {}) {
  std::vector<CriterionResult> out;
  auto emit = [&](CriterionResult r) {
    if (progress) progress(r);
    out.push_back(std::move(r));
  };
  emit(complement_identity(cfg));
  emit(reversal_identity(cfg));
  emit(primality_oracle(cfg));
  PrimeCensusRun run{prime_graphs_up_to(8)};
  emit(schmerl_trotter(run));
  emit(height_inequality(run));
  emit(realizers(cfg));
  emit(sturmian(cfg));
  emit(factor_age_consistency(cfg));
  emit(bounds(cfg));
  emit(jonsson(cfg));
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " :: " << r.detail;
  return out.str();
}

inline std::string render(const Config& cfg, const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  out << "primeage verification report (seed " << cfg.seed << ")\n";
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << format_line(r) << '\n';
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return out.str();
}

}  // namespace primeage::verify
