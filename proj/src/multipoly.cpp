#include "valence/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace valence {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto names = std::make_shared<const std::vector<std::string>>();
  return names;
}

std::uint8_t checked_exponent(unsigned value) {
  if (value > std::numeric_limits<std::uint8_t>::max()) {
    throw std::overflow_error("exponent exceeds 255");
  }
  return static_cast<std::uint8_t>(value);
}

Exponents add_exponents(const Exponents& a, const Exponents& b, std::size_t arity) {
  Exponents r;
  for (std::size_t i = 0; i < arity; ++i) {
    r[i] = checked_exponent(unsigned{a[i]} + unsigned{b[i]});
  }
  return r;
}

std::vector<MultiPoly::Term> collect(std::unordered_map<Exponents, Integer, ExponentsHash>&& acc) {
  std::vector<MultiPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (sgn(c) != 0) {
      out.emplace_back(k, std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.first < b.first; });
  return out;
}

// Graded, then reverse-lexicographic from the last variable: the smaller
// exponent in the last differing variable comes first.
bool text_order(const Exponents& a, const Exponents& b, std::size_t arity) {
  unsigned ta = 0, tb = 0;
  for (std::size_t i = 0; i < arity; ++i) {
    ta += a[i];
    tb += b[i];
  }
  if (ta != tb) return ta > tb;
  for (std::size_t i = arity; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- Universe

Universe::Universe() : names_(empty_names()) {}

Universe::Universe(std::initializer_list<std::string> names)
    : Universe(std::vector<std::string>(names)) {}

Universe::Universe(std::vector<std::string> names) {
  if (names.size() > kMaxVars) {
    throw std::invalid_argument("universe has more than 16 variables");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable " + names[i]);
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Universe::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Universe::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("variable '" + std::string(name) + "' not in universe");
}

bool Universe::operator==(const Universe& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

// ---------------------------------------------------------------- Exponents

unsigned Exponents::total() const {
  unsigned s = 0;
  for (auto v : e) s += v;
  return s;
}

std::size_t ExponentsHash::operator()(const Exponents& x) const noexcept {
  std::uint64_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    lo |= std::uint64_t{x.e[i]} << (8 * i);
    hi |= std::uint64_t{x.e[i + 8]} << (8 * i);
  }
  std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
  h ^= (hi + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(Universe universe, const Integer& c) {
  return monomial(std::move(universe), Exponents{}, c);
}

MultiPoly MultiPoly::variable(Universe universe, std::string_view name) {
  Exponents e;
  e[universe.index(name)] = 1;
  return monomial(std::move(universe), e, 1);
}

MultiPoly MultiPoly::monomial(Universe universe, const Exponents& exps, const Integer& c) {
  for (std::size_t i = universe.size(); i < kMaxVars; ++i) {
    if (exps[i] != 0) throw std::invalid_argument("exponent outside universe arity");
  }
  MultiPoly p(std::move(universe));
  if (sgn(c) != 0) p.terms_.emplace_back(exps, c);
  return p;
}

MultiPoly MultiPoly::from_terms(Universe universe, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  MultiPoly p(std::move(universe));
  for (auto& t : terms) {
    for (std::size_t i = p.universe_.size(); i < kMaxVars; ++i) {
      if (t.first[i] != 0) throw std::invalid_argument("exponent outside universe arity");
    }
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    } else if (sgn(t.second) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Integer MultiPoly::coefficient(const Exponents& exps) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                             [](const Term& t, const Exponents& e) { return t.first < e; });
  if (it != terms_.end() && it->first == exps) return it->second;
  return 0;
}

Integer MultiPoly::coefficient_sum() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.first[var]);
  return d;
}

void MultiPoly::require_same_universe(const MultiPoly& other, const char* op) const {
  if (!(universe_ == other.universe_)) {
    throw std::invalid_argument(std::string("universe mismatch in ") + op);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly& MultiPoly::merge(const MultiPoly& rhs, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Integer(-b->second));
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->second + b->second) : Integer(a->second - b->second);
      if (sgn(c) != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same_universe(rhs, "add");
  return merge(rhs, +1);
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_same_universe(rhs, "sub");
  return merge(rhs, -1);
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.require_same_universe(rhs, "mul");
  const std::size_t arity = lhs.universe_.size();
  MultiPoly r(lhs.universe_);
  if (lhs.is_zero() || rhs.is_zero()) return r;
  if (rhs.size() == 1 || lhs.size() == 1) {
    // Monomial times polynomial keeps the order, no accumulation needed.
    const auto& mono = rhs.size() == 1 ? rhs.terms_.front() : lhs.terms_.front();
    const auto& poly = rhs.size() == 1 ? lhs : rhs;
    r.terms_.reserve(poly.size());
    for (const auto& t : poly.terms_) {
      r.terms_.emplace_back(add_exponents(t.first, mono.first, arity), t.second * mono.second);
    }
    return r;
  }
  std::unordered_map<Exponents, Integer, ExponentsHash> acc;
  acc.reserve(lhs.size() * 2 + rhs.size() * 2);
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      auto& slot = acc[add_exponents(a.first, b.first, arity)];
      mpz_addmul(slot.get_mpz_t(), a.second.get_mpz_t(), b.second.get_mpz_t());
    }
  }
  r.terms_ = collect(std::move(acc));
  return r;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return universe_ == other.universe_ && terms_ == other.terms_;
}

// ---------------------------------------------------------------- free functions

MultiPoly substitute(const MultiPoly& p, const Bindings& bindings, const Universe& target) {
  const Universe& src = p.universe();
  for (const auto& [name, image] : bindings) {
    if (!src.contains(name)) {
      throw std::invalid_argument("binding for unknown variable " + name);
    }
    if (!(image.universe() == target)) {
      throw std::invalid_argument("image of " + name + " is not over the target universe");
    }
  }

  std::vector<std::optional<MultiPoly>> images(src.size());
  bool monomial_images = true;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (auto it = bindings.find(src.name(i)); it != bindings.end()) {
      images[i] = it->second;
    } else if (target.contains(src.name(i))) {
      images[i] = MultiPoly::variable(target, src.name(i));
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    bool used = p.degree_in(i) > 0;
    if (!used) continue;
    if (!images[i]) {
      throw std::invalid_argument("variable " + src.name(i) + " has no image in target universe");
    }
    if (images[i]->size() > 1) monomial_images = false;
  }

  if (monomial_images) {
    std::vector<MultiPoly::Term> out;
    out.reserve(p.size());
    for (const auto& [exps, coeff] : p.terms()) {
      Exponents e;
      Integer c = coeff;
      bool vanished = false;
      for (std::size_t i = 0; i < src.size() && !vanished; ++i) {
        if (exps[i] == 0) continue;
        if (images[i]->is_zero()) {
          vanished = true;
          break;
        }
        const auto& [ie, ic] = images[i]->terms().front();
        for (std::size_t j = 0; j < target.size(); ++j) {
          e[j] = checked_exponent(unsigned{e[j]} + unsigned{exps[i]} * unsigned{ie[j]});
        }
        if (ic != 1) {
          Integer pw;
          mpz_pow_ui(pw.get_mpz_t(), ic.get_mpz_t(), exps[i]);
          c *= pw;
        }
      }
      if (!vanished) out.emplace_back(e, std::move(c));
    }
    return MultiPoly::from_terms(target, std::move(out));
  }

  // General images: expand with cached powers.
  std::vector<std::vector<MultiPoly>> powers(src.size());
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * *images[i]);
    return cache[k];
  };
  MultiPoly result(target);
  for (const auto& [exps, coeff] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, coeff);
    for (std::size_t i = 0; i < src.size() && !term.is_zero(); ++i) {
      if (exps[i] != 0) term *= power(i, exps[i]);
    }
    result += term;
  }
  return result;
}

MultiPoly change_universe(const MultiPoly& p, const Universe& target) {
  return substitute(p, {}, target);
}

MultiPoly divided_difference(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  MultiPoly f = p - q;
  const std::size_t k = f.universe().index(var);
  // Group by the exponent vector with the slot of `var` cleared.
  std::map<Exponents, std::vector<std::pair<unsigned, Integer>>> groups;
  for (const auto& [exps, c] : f.terms()) {
    Exponents rest = exps;
    rest[k] = 0;
    groups[rest].emplace_back(exps[k], c);
  }
  std::vector<MultiPoly::Term> out;
  for (auto& [rest, coeffs] : groups) {
    std::sort(coeffs.begin(), coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // f = sum c_j w^j, f / (w - 1) = sum_i g_i w^i with g_i = -(c_0 + ... + c_i).
    Integer running = 0;
    std::size_t idx = 0;
    const unsigned top = coeffs.back().first;
    for (unsigned i = 0; i < top; ++i) {
      while (idx < coeffs.size() && coeffs[idx].first == i) running += coeffs[idx++].second;
      if (sgn(running) != 0) {
        Exponents e = rest;
        e[k] = static_cast<std::uint8_t>(i);
        out.emplace_back(e, -running);
      }
    }
    while (idx < coeffs.size()) running += coeffs[idx++].second;
    if (sgn(running) != 0) {
      throw std::domain_error("divided difference: numerator does not vanish at " +
                              std::string(var) + "=1");
    }
  }
  return MultiPoly::from_terms(f.universe(), std::move(out));
}

MultiPoly exact_div_var(const MultiPoly& p, std::string_view var) {
  const std::size_t k = p.universe().index(var);
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [exps, c] : p.terms()) {
    if (exps[k] == 0) {
      throw std::domain_error("exact division by " + std::string(var) + " failed");
    }
    Exponents e = exps;
    --e[k];
    out.emplace_back(e, c);
  }
  return MultiPoly::from_terms(p.universe(), std::move(out));
}

MultiPoly permute(const MultiPoly& p, std::span<const std::size_t> perm) {
  const std::size_t arity = p.universe().size();
  if (perm.size() != arity) throw std::invalid_argument("permutation arity mismatch");
  std::vector<bool> seen(arity, false);
  for (auto i : perm) {
    if (i >= arity || seen[i]) throw std::invalid_argument("not a permutation");
    seen[i] = true;
  }
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [exps, c] : p.terms()) {
    Exponents e;
    for (std::size_t i = 0; i < arity; ++i) e[perm[i]] = exps[i];
    out.emplace_back(e, c);
  }
  return MultiPoly::from_terms(p.universe(), std::move(out));
}

bool is_symmetric(const MultiPoly& p, std::span<const std::size_t> perm) {
  return permute(p, perm) == p;
}

std::vector<std::size_t> permutation(const Universe& u,
                                     const std::vector<std::pair<std::string, std::string>>& images) {
  std::vector<std::size_t> perm(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) perm[i] = i;
  for (const auto& [from, to] : images) perm[u.index(from)] = u.index(to);
  std::vector<bool> hit(u.size(), false);
  for (auto i : perm) {
    if (hit[i]) throw std::invalid_argument("variable images do not form a permutation");
    hit[i] = true;
  }
  return perm;
}

std::set<std::vector<unsigned>> support(const MultiPoly& p, std::span<const std::string> vars) {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(p.universe().index(v));
  std::set<std::vector<unsigned>> out;
  for (const auto& [exps, c] : p.terms()) {
    std::vector<unsigned> row;
    for (auto i : idx) row.push_back(exps[i]);
    out.insert(std::move(row));
  }
  return out;
}

std::pair<unsigned, unsigned> degree_range(const MultiPoly& p, std::span<const std::string> vars) {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(p.universe().index(v));
  if (p.is_zero()) return {0, 0};
  unsigned lo = std::numeric_limits<unsigned>::max(), hi = 0;
  for (const auto& [exps, c] : p.terms()) {
    unsigned d = 0;
    for (auto i : idx) d += exps[i];
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  const std::size_t arity = p.universe().size();
  std::vector<const MultiPoly::Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [arity](const auto* a, const auto* b) {
    return text_order(a->first, b->first, arity);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    Integer c = t->second;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < arity; ++i) {
      if (t->first[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += p.universe().name(i);
      if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
    }
    if (mono.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << ' ';
      os << mono;
    }
  }
  return os.str();
}

MultiPoly parse_poly(std::string_view text, const Universe& universe) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '*')) ++pos;
  };
  auto read_digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };

  std::vector<MultiPoly::Term> terms;
  skip();
  if (pos == text.size()) fail("empty input");
  bool expect_term = true;
  int sign = 1;
  while (pos < text.size()) {
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -sign : sign;
      ++pos;
      skip();
      expect_term = true;
      continue;
    }
    if (!expect_term) fail("missing operator between terms");
    Integer coeff = sign;
    Exponents e;
    bool any = false;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff *= Integer(read_digits());
      } else if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
          ++pos;
        }
        const std::size_t var = universe.index(text.substr(start, pos - start));
        unsigned power = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          const std::string digits = read_digits();
          if (digits.empty()) fail("missing exponent");
          power = static_cast<unsigned>(std::stoul(digits));
        }
        e[var] = checked_exponent(unsigned{e[var]} + power);
      } else {
        fail(std::string("unexpected character '") + text[pos] + "'");
      }
      any = true;
      skip();
    }
    if (!any) fail("empty term");
    terms.emplace_back(e, coeff);
    sign = 1;
    expect_term = false;
  }
  if (expect_term) fail("dangling operator");
  return MultiPoly::from_terms(universe, std::move(terms));
}

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [exps, c] : p.terms()) {
    nlohmann::json exp = nlohmann::json::object();
    for (std::size_t i = 0; i < p.universe().size(); ++i) exp[p.universe().name(i)] = exps[i];
    nlohmann::json coeff;
    if (c.fits_slong_p()) {
      coeff = static_cast<std::int64_t>(c.get_si());
    } else {
      coeff = c.get_str();
    }
    out.push_back({{"coeff", coeff}, {"exp", exp}});
  }
  return out;
}

MultiPoly poly_from_json(const nlohmann::json& j, const Universe& universe) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a list");
  std::vector<MultiPoly::Term> terms;
  for (const auto& item : j) {
    Integer c;
    const auto& cj = item.at("coeff");
    if (cj.is_string()) {
      c = Integer(cj.get<std::string>());
    } else {
      c = Integer(std::to_string(cj.get<std::int64_t>()));
    }
    Exponents e;
    for (const auto& [name, value] : item.at("exp").items()) {
      e[universe.index(name)] = checked_exponent(value.get<unsigned>());
    }
    terms.emplace_back(e, std::move(c));
  }
  return MultiPoly::from_terms(universe, std::move(terms));
}

}  // namespace valence
