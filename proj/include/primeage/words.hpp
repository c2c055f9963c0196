#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace primeage {

using BigInt = boost::multiprecision::cpp_int;

/// Exact non-negative rational num/den, den > 0.
struct Rational {
  BigInt num = 0;
  BigInt den = 1;

  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    Rational r;
    try {
      if (slash == std::string_view::npos) {
        r.num = BigInt(std::string(text));
      } else {
        r.num = BigInt(std::string(text.substr(0, slash)));
        r.den = BigInt(std::string(text.substr(slash + 1)));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    }
    if (r.den <= 0 || r.num < 0) throw std::invalid_argument("rational: expected non-negative p/q with q > 0");
    return r;
  }

  std::string str() const { return num.str() + "/" + den.str(); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
};

/// Continued fraction [a0; a1, a2, ...] truncated to `depth` partial
/// quotients after a0. `terms` holds a0 and the leading quotients; `tail`,
/// when non-empty, repeats forever after them.
struct ContinuedFraction {
  std::vector<std::uint64_t> terms{0};
  std::vector<std::uint64_t> tail;
  std::size_t depth = 48;

  std::uint64_t quotient(std::size_t i) const {
    if (i < terms.size()) return terms[i];
    if (tail.empty()) throw std::out_of_range("continued fraction: finite expansion exhausted");
    return tail[(i - terms.size()) % tail.size()];
  }

  std::size_t length() const {
    return tail.empty() ? std::min(terms.size(), depth + 1) : depth + 1;
  }

  /// Convergent p/q after `depth` quotients.
  Rational convergent() const {
    BigInt p_prev = 1, p = quotient(0), q_prev = 0, q = 1;
    for (std::size_t i = 1; i < length(); ++i) {
      BigInt a = quotient(i);
      BigInt p_next = a * p + p_prev, q_next = a * q + q_prev;
      p_prev = p;
      q_prev = q;
      p = p_next;
      q = q_next;
    }
    return {p, q};
  }

  /// Parses "0;2,(1)" = [0;2,1,1,1,...] or "0;2,1,3" (finite).
  static ContinuedFraction parse(std::string_view text, std::size_t depth = 48) {
    ContinuedFraction cf;
    cf.terms.clear();
    cf.depth = depth;
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '[' && c != ']') s.push_back(c);
    auto semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("continued fraction: expected 'a0;a1,a2,...'");
    auto number = [&](std::string_view t) -> std::uint64_t {
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("continued fraction: bad quotient '" + std::string(t) + "'");
      return std::stoull(std::string(t));
    };
    cf.terms.push_back(number(std::string_view(s).substr(0, semi)));
    std::string rest = s.substr(semi + 1);
    auto paren = rest.find('(');
    std::string head = rest.substr(0, paren);
    std::string_view hv = head;
    while (!hv.empty()) {
      auto comma = hv.find(',');
      auto tok = hv.substr(0, comma);
      if (!tok.empty()) {
        auto q = number(tok);
        if (q == 0) throw std::invalid_argument("continued fraction: partial quotients must be positive");
        cf.terms.push_back(q);
      }
      if (comma == std::string_view::npos) break;
      hv.remove_prefix(comma + 1);
    }
    if (paren != std::string::npos) {
      auto close = rest.find(')', paren);
      if (close == std::string::npos) throw std::invalid_argument("continued fraction: unbalanced '('");
      std::string_view tv = std::string_view(rest).substr(paren + 1, close - paren - 1);
      while (!tv.empty()) {
        auto comma = tv.find(',');
        auto q = number(tv.substr(0, comma));
        if (q == 0) throw std::invalid_argument("continued fraction: partial quotients must be positive");
        cf.tail.push_back(q);
        if (comma == std::string_view::npos) break;
        tv.remove_prefix(comma + 1);
      }
      if (cf.tail.empty()) throw std::invalid_argument("continued fraction: empty repeating block");
    }
    return cf;
  }

  std::string str() const {
    std::string out = std::to_string(terms[0]) + ";";
    for (std::size_t i = 1; i < terms.size(); ++i) out += (i > 1 ? "," : "") + std::to_string(terms[i]);
    if (!tail.empty()) {
      out += terms.size() > 1 ? ",(" : "(";
      for (std::size_t i = 0; i < tail.size(); ++i) out += (i ? "," : "") + std::to_string(tail[i]);
      out += ")";
    }
    return out;
  }
};

namespace word_kind {

struct Explicit {
  std::string bits;
};

struct Periodic {
  std::string pattern;
};

/// letter_i = floor((i+1)*slope + intercept) - floor(i*slope + intercept).
/// With `characteristic` set the intercept equals the slope, which yields the
/// characteristic Sturmian word of that slope.
struct Mechanical {
  std::variant<Rational, ContinuedFraction> slope;
  Rational intercept;
  bool characteristic = false;

  Rational slope_value() const {
    if (auto* r = std::get_if<Rational>(&slope)) return *r;
    return std::get<ContinuedFraction>(slope).convergent();
  }
};

/// Fixed point of 0 -> image0, 1 -> image1 grown from `seed`.
struct Substitution {
  std::string image0;
  std::string image1;
  std::string seed = "0";
};

}  // namespace word_kind

using WordDescriptor =
    std::variant<word_kind::Explicit, word_kind::Periodic, word_kind::Mechanical, word_kind::Substitution>;

namespace detail {

inline void require_bits(std::string_view s, const char* what) {
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; }))
    throw std::invalid_argument(std::string(what) + ": letters must be '0' or '1'");
}

inline std::string apply_substitution(const word_kind::Substitution& s, std::string_view w) {
  std::string out;
  for (char c : w) out += c == '0' ? s.image0 : s.image1;
  return out;
}

inline void validate(const WordDescriptor& d) {
  using namespace word_kind;
  if (auto* e = std::get_if<Explicit>(&d)) require_bits(e->bits, "explicit word");
  if (auto* p = std::get_if<Periodic>(&d)) {
    require_bits(p->pattern, "periodic word");
    if (p->pattern.empty()) throw std::invalid_argument("periodic word: empty pattern");
  }
  if (auto* m = std::get_if<Mechanical>(&d)) {
    Rational a = m->slope_value();
    if (a.num <= 0 || a.num >= a.den) throw std::invalid_argument("mechanical word: slope must lie in (0,1)");
    if (!m->characteristic && m->intercept.num >= m->intercept.den)
      throw std::invalid_argument("mechanical word: intercept must lie in [0,1)");
  }
  if (auto* s = std::get_if<Substitution>(&d)) {
    require_bits(s->image0, "substitution rule");
    require_bits(s->image1, "substitution rule");
    require_bits(s->seed, "substitution seed");
    if (s->image0.empty() || s->image1.empty() || s->seed.empty())
      throw std::invalid_argument("substitution: images and seed must be nonempty");
    const std::string once = apply_substitution(*s, s->seed);
    if (once.size() <= s->seed.size() || once.compare(0, s->seed.size(), s->seed) != 0)
      throw std::invalid_argument("substitution: rules do not grow the seed into a fixed point");
  }
}

inline std::string mechanical_prefix(const word_kind::Mechanical& m, std::size_t length) {
  const Rational a = m.slope_value();
  const Rational rho = m.characteristic ? a : m.intercept;
  // x_i = i*a + rho = (i*a.num*rho.den + rho.num*a.den) / (a.den*rho.den)
  const BigInt den = a.den * rho.den;
  const BigInt step = a.num * rho.den;
  BigInt rem = rho.num * a.den;
  rem %= den;
  std::string out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    rem += step;
    if (rem >= den) {
      rem -= den;
      out.push_back('1');
    } else {
      out.push_back('0');
    }
  }
  return out;
}

}  // namespace detail

/// A 0-1 word given by a generator; prefix(n) is deterministic and prefix(n)
/// is a prefix of prefix(m) for n <= m. Generated prefixes are cached and the
/// cache only ever grows (one writer at a time, readers see a consistent copy).
class Word {
public:
  explicit Word(WordDescriptor d, bool flipped = false)
      : descriptor_(std::move(d)), flipped_(flipped), cache_(std::make_shared<Cache>()) {
    detail::validate(descriptor_);
  }

  static Word bits(std::string b) { return Word(word_kind::Explicit{std::move(b)}); }
  static Word periodic(std::string pattern) { return Word(word_kind::Periodic{std::move(pattern)}); }
  static Word constant(char letter) { return periodic(std::string(1, letter)); }
  static Word fibonacci() { return Word(word_kind::Substitution{"01", "0", "0"}); }
  static Word thue_morse() { return Word(word_kind::Substitution{"01", "10", "0"}); }

  static Word mechanical(Rational slope, Rational intercept = {}) {
    return Word(word_kind::Mechanical{std::move(slope), std::move(intercept), false});
  }

  static Word characteristic(ContinuedFraction slope) {
    return Word(word_kind::Mechanical{std::move(slope), {}, true});
  }

  const WordDescriptor& descriptor() const { return descriptor_; }
  bool flipped() const { return flipped_; }

  /// Length of the word if it is finite.
  std::optional<std::size_t> finite_length() const {
    if (auto* e = std::get_if<word_kind::Explicit>(&descriptor_)) return e->bits.size();
    return std::nullopt;
  }

  std::string prefix(std::size_t length) const {
    if (auto fl = finite_length(); fl && length > *fl)
      throw std::out_of_range("word: prefix longer than the finite word");
    std::lock_guard lock(cache_->mutex);
    if (cache_->letters.size() < length) cache_->letters = generate(std::max(length, 2 * cache_->letters.size()));
    return cache_->letters.substr(0, length);
  }

  Word complemented() const {
    Word w(*this);
    w.flipped_ = !flipped_;
    w.cache_ = std::make_shared<Cache>();
    return w;
  }

private:
  struct Cache {
    std::mutex mutex;
    std::string letters;
  };

  std::string generate(std::size_t length) const {
    using namespace word_kind;
    std::string out;
    if (auto* e = std::get_if<Explicit>(&descriptor_)) {
      out = e->bits;
    } else if (auto* p = std::get_if<Periodic>(&descriptor_)) {
      out.reserve(length);
      for (std::size_t i = 0; i < length; ++i) out.push_back(p->pattern[i % p->pattern.size()]);
    } else if (auto* m = std::get_if<Mechanical>(&descriptor_)) {
      out = detail::mechanical_prefix(*m, length);
    } else {
      const auto& s = std::get<Substitution>(descriptor_);
      out = s.seed;
      while (out.size() < length) out = detail::apply_substitution(s, out);
    }
    if (flipped_)
      for (char& c : out) c = c == '0' ? '1' : '0';
    return out;
  }

  WordDescriptor descriptor_;
  bool flipped_ = false;
  std::shared_ptr<Cache> cache_;
};

inline Word mechanical_word(Rational slope, Rational intercept = {}) {
  return Word::mechanical(std::move(slope), std::move(intercept));
}

inline Word substitution_word(std::string image0, std::string image1, std::string seed = "0") {
  return Word(word_kind::Substitution{std::move(image0), std::move(image1), std::move(seed)});
}

inline Word complement_word(const Word& w) { return w.complemented(); }

inline std::string complement_bits(std::string_view bits) {
  std::string out(bits);
  for (char& c : out) c = c == '0' ? '1' : '0';
  return out;
}

/// Letterwise reversal of the length-L prefix, as a finite word.
inline Word reverse_star(const Word& w, std::size_t length) {
  std::string p = w.prefix(length);
  std::reverse(p.begin(), p.end());
  return Word::bits(std::move(p));
}

struct FactorSet {
  std::size_t length = 0;
  std::set<std::string> factors;
};

inline FactorSet factors_of(std::string_view text, std::size_t n) {
  if (n > text.size()) throw std::invalid_argument("factors: factor length exceeds prefix length");
  FactorSet fs{n, {}};
  for (std::size_t i = 0; i + n <= text.size(); ++i) fs.factors.emplace(text.substr(i, n));
  return fs;
}

inline FactorSet factors(const Word& w, std::size_t n, std::size_t length) {
  if (n > length) throw std::invalid_argument("factors: factor length exceeds prefix length");
  return factors_of(w.prefix(length), n);
}

/// Least m such that every length-n factor of the prefix occurs in every
/// length-m window of it. Reported only when at least two disjoint windows
/// of that length fit in the prefix (2m <= L); otherwise the prefix gives no
/// evidence of recurrence and the result is empty.
inline std::optional<std::size_t> recurrence_bound_of(std::string_view text, std::size_t n) {
  const std::size_t length = text.size();
  if (n > length) throw std::invalid_argument("recurrence_bound: factor length exceeds prefix length");
  struct Track {
    std::size_t last;
    std::size_t max_gap;
  };
  std::unordered_map<std::string_view, Track> seen;
  for (std::size_t i = 0; i + n <= length; ++i) {
    auto f = text.substr(i, n);
    auto it = seen.find(f);
    if (it == seen.end()) {
      seen.emplace(f, Track{i, i});  // leading gap: positions 0..i-1
    } else {
      it->second.max_gap = std::max(it->second.max_gap, i - it->second.last - 1);
      it->second.last = i;
    }
  }
  std::size_t m = n;
  for (const auto& [f, t] : seen) m = std::max(m, std::max(t.max_gap, length - n - t.last) + n);
  if (2 * m > length) return std::nullopt;
  return m;
}

inline std::optional<std::size_t> recurrence_bound(const Word& w, std::size_t n, std::size_t length) {
  if (n > length) throw std::invalid_argument("recurrence_bound: factor length exceeds prefix length");
  return recurrence_bound_of(w.prefix(length), n);
}

/// p(n) for n = 1..n_max, counted in the length-L prefix.
inline std::vector<std::size_t> factor_complexity(const Word& w, std::size_t length, std::size_t n_max) {
  if (2 * n_max > length) throw std::invalid_argument("factor_complexity: need n_max <= L/2");
  const std::string p = w.prefix(length);
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(factors_of(p, n).factors.size());
  return out;
}

}  // namespace primeage
