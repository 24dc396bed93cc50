#include "conjposet/group_spec.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

#include "conjposet/errors.hpp"

namespace conjposet {

namespace {

using family::Permutation;

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

std::size_t powmod(std::size_t base, std::size_t exp, std::size_t mod) {
  if (mod == 1) return 0;
  std::uint64_t r = 1;
  std::uint64_t b = base % mod;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::size_t>(r);
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// x of order a, y^b = x^c, y x y^-1 = x^t. Word x^i y^e has index i*b + e.
struct Metacyclic {
  std::size_t a;
  std::size_t b;
  std::size_t c;
  std::size_t t;
};

std::size_t modular_inverse(std::size_t r, std::size_t mod) {
  for (std::size_t s = 1; s < mod; ++s) {
    if (r * s % mod == 1) return s;
  }
  if (mod == 1) return 0;
  throw SpecInvalid("exponent is not a unit modulo " + std::to_string(mod));
}

std::optional<Metacyclic> metacyclic_params(const GroupSpec& spec) {
  using namespace family;
  if (auto* d = std::get_if<Dihedral>(&spec.v)) {
    const std::size_t m = d->order / 2;
    return Metacyclic{m, 2, 0, m - 1};
  }
  if (auto* d = std::get_if<Dicyclic>(&spec.v)) {
    const std::size_t a = 2 * d->k;
    return Metacyclic{a, 2, d->k, a - 1};
  }
  if (auto* m = std::get_if<ModularMaxCyclic>(&spec.v)) {
    const std::size_t a = ipow(m->p, m->n - 1);
    const std::size_t r = ipow(m->p, m->n - 2) + 1;
    // y^-1 x y = x^r  <=>  y x y^-1 = x^(r^-1)
    return Metacyclic{a, m->p, 0, modular_inverse(r % a, a)};
  }
  if (auto* s = std::get_if<Semidihedral>(&spec.v)) {
    const std::size_t a = s->order / 2;
    return Metacyclic{a, 2, 0, a / 2 - 1};
  }
  if (auto* z = std::get_if<ZM>(&spec.v)) {
    return Metacyclic{z->m, z->n, 0, z->r % z->m};
  }
  return std::nullopt;
}

std::string power_label(char gen, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return std::string(1, gen);
  return std::string(1, gen) + "^" + std::to_string(k);
}

GroupTable build_metacyclic(const Metacyclic& mc, std::string spec) {
  const std::size_t n = mc.a * mc.b;
  std::vector<std::size_t> tpow(mc.b);
  for (std::size_t e = 0; e < mc.b; ++e) tpow[e] = powmod(mc.t, e, mc.a);

  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i1 = 0; i1 < mc.a; ++i1) {
    for (std::size_t e1 = 0; e1 < mc.b; ++e1) {
      const std::size_t lhs = i1 * mc.b + e1;
      std::string l = power_label('x', i1) + power_label('y', e1);
      labels[lhs] = l.empty() ? "e" : l;
      for (std::size_t i2 = 0; i2 < mc.a; ++i2) {
        for (std::size_t e2 = 0; e2 < mc.b; ++e2) {
          std::size_t i = i1 + i2 * tpow[e1];
          std::size_t e = e1 + e2;
          if (e >= mc.b) {
            e -= mc.b;
            i += mc.c;
          }
          mul[lhs * n + i2 * mc.b + e2] =
              static_cast<Element>((i % mc.a) * mc.b + e);
        }
      }
    }
  }
  return GroupTable(n, std::move(mul), std::move(labels), std::move(spec));
}

GroupTable build_cyclic(std::size_t n, std::string spec) {
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : power_label('x', i);
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = static_cast<Element>((i + j) % n);
    }
  }
  return GroupTable(n, std::move(mul), std::move(labels), std::move(spec));
}

// Product p*q applies p first, then q.
Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = q[p[k]];
  return r;
}

bool is_even(const Permutation& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

// Elements must be sorted lexicographically, which puts the identity first.
GroupTable build_from_permutations(const std::vector<Permutation>& elems,
                                   std::string spec) {
  const std::size_t n = elems.size();
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i], i);
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = cycle_string(elems[i]);
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = index.at(compose(elems[i], elems[j]));
    }
  }
  return GroupTable(n, std::move(mul), std::move(labels), std::move(spec));
}

std::vector<Permutation> all_permutations(std::size_t degree, bool even_only) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    if (!even_only || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Permutation> close_permutations(const family::PermGenerated& pg,
                                            const Limits& limits) {
  Permutation id(pg.degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::queue<Permutation> frontier;
  frontier.push(id);
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.front());
    frontier.pop();
    for (const auto& gen : pg.generators) {
      Permutation q = compose(p, gen);
      if (seen.insert(q).second) {
        if (seen.size() > limits.max_order) {
          throw OrderCapExceeded("permutation group order exceeds cap " +
                                 std::to_string(limits.max_order));
        }
        frontier.push(std::move(q));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// ---- parsing ----

std::size_t parse_number(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw SpecParseError("expected a number in '" + std::string(whole) +
                         "', got '" + std::string(text) + "'");
  }
  return value;
}

bool consume_prefix(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Splits on 'x' outside parentheses.
std::vector<std::string_view> split_product(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == 'x' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

GroupSpec parse_factor(std::string_view text) {
  using namespace family;
  std::string_view s = text;
  if (consume_prefix(s, "perm:")) {
    auto parts = split(s, ':');
    if (parts.size() != 2) {
      throw SpecParseError("expected perm:<degree>:<cycles>;... in '" +
                           std::string(text) + "'");
    }
    PermGenerated pg{parse_number(parts[0], text), {}};
    if (pg.degree == 0 || pg.degree > 255) {
      throw SpecInvalid("permutation degree must be in 1..255");
    }
    if (!parts[1].empty()) {
      for (auto gen : split(parts[1], ';')) {
        pg.generators.push_back(parse_cycles(gen, pg.degree));
      }
    }
    return {pg};
  }
  if (consume_prefix(s, "ZM(")) {
    if (s.empty() || s.back() != ')') {
      throw SpecParseError("unterminated ZM( in '" + std::string(text) + "'");
    }
    s.remove_suffix(1);
    auto parts = split(s, ',');
    if (parts.size() != 3) {
      throw SpecParseError("ZM takes three arguments: '" + std::string(text) +
                           "'");
    }
    return {ZM{parse_number(parts[0], text), parse_number(parts[1], text),
               parse_number(parts[2], text)}};
  }
  if (consume_prefix(s, "Dic")) return {Dicyclic{parse_number(s, text)}};
  if (consume_prefix(s, "SD")) return {Semidihedral{parse_number(s, text)}};
  if (consume_prefix(s, "M")) {
    auto caret = s.find('^');
    if (caret == std::string_view::npos) {
      throw SpecParseError("expected M<p>^<n> in '" + std::string(text) + "'");
    }
    return {ModularMaxCyclic{parse_number(s.substr(0, caret), text),
                             parse_number(s.substr(caret + 1), text)}};
  }
  if (consume_prefix(s, "Q")) {
    const std::size_t m = parse_number(s, text);
    if (m < 8 || !is_power_of_two(m)) {
      throw SpecInvalid("Q<m> needs m a power of 2 with m >= 8, got " +
                        std::to_string(m));
    }
    return {Dicyclic{m / 4}};
  }
  if (consume_prefix(s, "C")) return {Cyclic{parse_number(s, text)}};
  if (consume_prefix(s, "D")) return {Dihedral{parse_number(s, text)}};
  if (consume_prefix(s, "S")) return {Symmetric{parse_number(s, text)}};
  if (consume_prefix(s, "A")) return {Alternating{parse_number(s, text)}};
  throw SpecParseError("unknown group family in '" + std::string(text) + "'");
}

}  // namespace

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> used(degree, 0);
  std::string_view s = text;
  while (!s.empty()) {
    if (s.front() != '(') {
      throw SpecParseError("expected '(' in cycle list '" + std::string(text) +
                           "'");
    }
    auto close = s.find(')');
    if (close == std::string_view::npos) {
      throw SpecParseError("unterminated cycle in '" + std::string(text) + "'");
    }
    std::string_view body = s.substr(1, close - 1);
    s.remove_prefix(close + 1);
    if (body.empty()) continue;
    std::vector<std::size_t> cycle;
    for (auto tok : split(body, ',')) {
      const std::size_t v = parse_number(tok, text);
      if (v < 1 || v > degree) {
        throw SpecInvalid("point " + std::to_string(v) +
                          " outside 1.." + std::to_string(degree));
      }
      if (used[v - 1]) {
        throw SpecInvalid("point " + std::to_string(v) +
                          " repeated in '" + std::string(text) + "'");
      }
      used[v - 1] = 1;
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    }
  }
  return p;
}

std::string cycle_string(const Permutation& perm) {
  std::string out;
  std::vector<char> done(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == start) continue;
    out += "(";
    std::size_t k = start;
    bool first = true;
    while (!done[k]) {
      done[k] = 1;
      if (!first) out += ",";
      out += std::to_string(k + 1);
      first = false;
      k = perm[k];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupSpec parse_spec(std::string_view text) {
  if (text.empty()) throw SpecParseError("empty group spec");
  auto factors = split_product(text);
  for (auto f : factors) {
    if (f.empty()) {
      throw SpecParseError("empty factor in '" + std::string(text) + "'");
    }
  }
  GroupSpec spec;
  if (factors.size() == 1) {
    spec = parse_factor(factors.front());
  } else {
    family::DirectProduct dp;
    for (auto f : factors) dp.factors.push_back(parse_factor(f));
    spec.v = std::move(dp);
  }
  check_spec(spec);
  return spec;
}

std::string to_string(const GroupSpec& spec) {
  using namespace family;
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          return "C" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, Dihedral>) {
          return "D" + std::to_string(s.order);
        } else if constexpr (std::is_same_v<T, Dicyclic>) {
          if (is_power_of_two(s.k)) return "Q" + std::to_string(4 * s.k);
          return "Dic" + std::to_string(s.k);
        } else if constexpr (std::is_same_v<T, ModularMaxCyclic>) {
          return "M" + std::to_string(s.p) + "^" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, Semidihedral>) {
          return "SD" + std::to_string(s.order);
        } else if constexpr (std::is_same_v<T, Symmetric>) {
          return "S" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, Alternating>) {
          return "A" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, ZM>) {
          return "ZM(" + std::to_string(s.m) + "," + std::to_string(s.n) +
                 "," + std::to_string(s.r) + ")";
        } else if constexpr (std::is_same_v<T, PermGenerated>) {
          std::string out = "perm:" + std::to_string(s.degree) + ":";
          for (std::size_t i = 0; i < s.generators.size(); ++i) {
            if (i > 0) out += ";";
            out += cycle_string(s.generators[i]);
          }
          return out;
        } else {
          std::string out;
          for (std::size_t i = 0; i < s.factors.size(); ++i) {
            if (i > 0) out += "x";
            out += to_string(s.factors[i]);
          }
          return out;
        }
      },
      spec.v);
}

void check_spec(const GroupSpec& spec) {
  using namespace family;
  auto invalid = [&](const std::string& why) {
    throw SpecInvalid(to_string(spec) + ": " + why);
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          if (s.n < 1) invalid("cyclic order must be >= 1");
        } else if constexpr (std::is_same_v<T, Dihedral>) {
          if (s.order < 4 || s.order % 2 != 0) {
            invalid("dihedral order must be even and >= 4");
          }
        } else if constexpr (std::is_same_v<T, Dicyclic>) {
          if (s.k < 2) invalid("dicyclic parameter must be >= 2");
        } else if constexpr (std::is_same_v<T, ModularMaxCyclic>) {
          if (!is_prime(s.p)) invalid("p must be prime");
          if (s.p == 2 ? s.n < 4 : s.n < 3) {
            invalid("needs n >= 3 for odd p and n >= 4 for p = 2");
          }
        } else if constexpr (std::is_same_v<T, Semidihedral>) {
          if (!is_power_of_two(s.order) || s.order < 16) {
            invalid("semidihedral order must be 2^n with n >= 4");
          }
        } else if constexpr (std::is_same_v<T, Symmetric> ||
                             std::is_same_v<T, Alternating>) {
          if (s.n < 1 || s.n > 255) invalid("degree must be in 1..255");
        } else if constexpr (std::is_same_v<T, ZM>) {
          if (s.m < 1 || s.n < 1) invalid("m and n must be >= 1");
          const std::size_t r = s.r % s.m;
          const std::size_t rm1 = (r + s.m - 1) % s.m;
          if (std::gcd(s.m, s.n * rm1) != 1) invalid("gcd(m, n(r-1)) != 1");
          if (powmod(r, s.n, s.m) != 1 % s.m) invalid("r^n != 1 mod m");
        } else if constexpr (std::is_same_v<T, PermGenerated>) {
          if (s.degree < 1 || s.degree > 255) invalid("degree must be in 1..255");
          for (const auto& g : s.generators) {
            if (g.size() != s.degree) invalid("generator has wrong degree");
            Permutation sorted = g;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k < sorted.size(); ++k) {
              if (sorted[k] != k) invalid("generator is not a permutation");
            }
          }
        } else {
          if (s.factors.empty()) invalid("empty direct product");
          for (const auto& f : s.factors) check_spec(f);
        }
      },
      spec.v);
}

std::optional<std::size_t> spec_order(const GroupSpec& spec) {
  using namespace family;
  return std::visit(
      [](const auto& s) -> std::optional<std::size_t> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          return s.n;
        } else if constexpr (std::is_same_v<T, Dihedral> ||
                             std::is_same_v<T, Semidihedral>) {
          return s.order;
        } else if constexpr (std::is_same_v<T, Dicyclic>) {
          return sat_mul(4, s.k);
        } else if constexpr (std::is_same_v<T, ModularMaxCyclic>) {
          return ipow(s.p, s.n);
        } else if constexpr (std::is_same_v<T, Symmetric> ||
                             std::is_same_v<T, Alternating>) {
          std::size_t f = 1;
          for (std::size_t k = 2; k <= s.n; ++k) f = sat_mul(f, k);
          if constexpr (std::is_same_v<T, Alternating>) {
            if (s.n >= 2 && f != kSaturated) f /= 2;
          }
          return f;
        } else if constexpr (std::is_same_v<T, ZM>) {
          return sat_mul(s.m, s.n);
        } else if constexpr (std::is_same_v<T, PermGenerated>) {
          return std::nullopt;
        } else {
          std::size_t total = 1;
          for (const auto& f : s.factors) {
            auto o = spec_order(f);
            if (!o) return std::nullopt;
            total = sat_mul(total, *o);
          }
          return total;
        }
      },
      spec.v);
}

GroupTable build_group(const GroupSpec& spec, const Limits& limits) {
  using namespace family;
  check_spec(spec);
  if (auto o = spec_order(spec); o && *o > limits.max_order) {
    throw OrderCapExceeded(to_string(spec) + " has order " +
                           (*o == kSaturated ? std::string("> 2^64")
                                             : std::to_string(*o)) +
                           ", cap is " + std::to_string(limits.max_order));
  }
  const std::string name = to_string(spec);

  GroupTable g = [&]() -> GroupTable {
    if (auto mc = metacyclic_params(spec)) return build_metacyclic(*mc, name);
    if (auto* c = std::get_if<Cyclic>(&spec.v)) return build_cyclic(c->n, name);
    if (auto* s = std::get_if<Symmetric>(&spec.v)) {
      return build_from_permutations(all_permutations(s->n, false), name);
    }
    if (auto* a = std::get_if<Alternating>(&spec.v)) {
      return build_from_permutations(all_permutations(a->n, true), name);
    }
    if (auto* pg = std::get_if<PermGenerated>(&spec.v)) {
      return build_from_permutations(close_permutations(*pg, limits), name);
    }
    const auto& dp = std::get<DirectProduct>(spec.v);
    GroupTable acc = build_group(dp.factors.front(), limits);
    for (std::size_t i = 1; i < dp.factors.size(); ++i) {
      acc = direct_product(acc, build_group(dp.factors[i], limits), limits);
    }
    return acc;
  }();

  if (auto r = validate_group(g); !r.ok()) {
    throw SpecInvalid(name + " does not define a group: " + r.message);
  }
  return g;
}

GroupTable build_group(std::string_view text, const Limits& limits) {
  return build_group(parse_spec(text), limits);
}

Element word_index(const GroupSpec& spec, std::size_t i, std::size_t e) {
  auto mc = metacyclic_params(spec);
  if (!mc) {
    throw SpecInvalid(to_string(spec) + " is not a two-generator family");
  }
  return static_cast<Element>((i % mc->a) * mc->b + e % mc->b);
}

}  // namespace conjposet
