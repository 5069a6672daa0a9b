#include "valence/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace valence {

UniPoly::UniPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, std::string_view var) {
  const auto idx = p.universe().find(var);
  std::vector<Integer> c;
  for (const auto& [exps, coeff] : p.terms()) {
    for (std::size_t i = 0; i < p.universe().size(); ++i) {
      if (exps[i] != 0 && (!idx || i != *idx)) {
        throw std::invalid_argument("polynomial is not univariate in " + std::string(var));
      }
    }
    const std::size_t d = idx ? exps[*idx] : 0;
    if (c.size() <= d) c.resize(d + 1);
    c[d] += coeff;
  }
  return UniPoly(std::move(c));
}

Integer UniPoly::operator()(const Integer& z) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (sgn(c_[k]) == 0) continue;
    Integer c = c_[k];
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (sgn(c) < 0) c = -c;
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << ' ';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

// ---------------------------------------------------------------- algorithms

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = ::gcd(g, c);
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<Integer> out;
  for (const auto& c : p.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(q));
  }
  return UniPoly(std::move(out));
}

UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by zero");
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Integer lb = abs(b.leading());
  const int sb = sgn(b.leading());
  // r <- |lc(b)| r - sign(lc(b)) lc(r) z^k b, which multiplies the true
  // remainder by a positive constant.
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const Integer lr = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) {
      Integer t = lr * bc[i];
      if (sb > 0) {
        r[i + shift] -= t;
      } else {
        r[i + shift] += t;
      }
    }
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  return UniPoly(std::move(r));
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = r[k + db];
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) r[k + i] -= q[k] * bc[i];
  }
  for (const auto& c : r) {
    if (sgn(c) != 0) throw std::domain_error("inexact polynomial division");
  }
  return UniPoly(std::move(q));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = primitive_part(a);
  UniPoly y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  while (!y.is_zero()) {
    UniPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  return primitive_part(exact_quotient(p, gcd(p, p.derivative())));
}

namespace {

// Divides by the positive content, preserving signs.
UniPoly reduce_content(const UniPoly& p) {
  UniPoly pp = primitive_part(p);
  if (!p.is_zero() && sgn(p.leading()) < 0) pp = UniPoly{} - pp;
  return pp;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(reduce_content(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(reduce_content(d));
  while (true) {
    UniPoly r = pseudo_remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(UniPoly{} - reduce_content(r));
  }
  return seq;
}

std::size_t count_negative_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no finite root count");
  // Strip roots at zero so that 0 is not a root of the working polynomial.
  std::vector<Integer> c = p.coeffs();
  std::size_t k = 0;
  while (sgn(c[k]) == 0) ++k;
  UniPoly q(std::vector<Integer>(c.begin() + static_cast<long>(k), c.end()));
  auto seq = sturm_sequence(squarefree_part(q));
  std::vector<int> at_neg_inf, at_zero;
  for (const auto& s : seq) {
    const int lead = sgn(s.leading());
    at_neg_inf.push_back(s.degree() % 2 == 0 ? lead : -lead);
    at_zero.push_back(sgn(s.coeffs().front()));
  }
  return sign_changes(at_neg_inf) - sign_changes(at_zero);
}

RootReport analyze_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  RootReport r;
  r.degree = p.degree();
  const auto& c = p.coeffs();
  while (sgn(c[r.zero_root_multiplicity]) == 0) ++r.zero_root_multiplicity;
  UniPoly q(std::vector<Integer>(c.begin() + r.zero_root_multiplicity, c.end()));
  UniPoly sq = squarefree_part(q);
  r.distinct_nonzero_roots = sq.degree();
  r.distinct_negative_roots = count_negative_roots(q);
  r.all_real_nonpositive = static_cast<long>(r.distinct_negative_roots) == r.distinct_nonzero_roots;
  r.all_real_negative = r.all_real_nonpositive && r.zero_root_multiplicity == 0;
  return r;
}

bool sturm_all_roots_real_negative(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  for (const auto& c : p.coeffs()) {
    if (sgn(c) <= 0) return false;
  }
  return analyze_roots(p).all_real_negative;
}

}  // namespace valence
