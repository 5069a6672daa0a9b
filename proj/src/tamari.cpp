#include "valence/tamari.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace valence {

namespace {

// One past the end of the subtree whose preorder word starts at `pos`.
std::size_t subtree_end(const std::string& code, std::size_t pos) {
  std::size_t need = 1;
  while (need > 0) {
    if (pos >= code.size()) throw std::invalid_argument("truncated tree word");
    if (code[pos++] == '1') {
      ++need;
    } else {
      --need;
    }
  }
  return pos;
}

void to_text(const std::string& code, std::size_t& pos, std::string& out) {
  if (code[pos++] == '0') {
    out += 'o';
    return;
  }
  out += '(';
  to_text(code, pos, out);
  out += ' ';
  to_text(code, pos, out);
  out += ')';
}

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
}

void parse_text(std::string_view s, std::size_t& pos, std::string& code) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw std::invalid_argument("unexpected end of tree text");
  if (s[pos] == 'o') {
    ++pos;
    code += '0';
    return;
  }
  if (s[pos] != '(') throw std::invalid_argument("expected 'o' or '(' in tree text");
  ++pos;
  code += '1';
  parse_text(s, pos, code);
  parse_text(s, pos, code);
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("expected ')' in tree text");
  ++pos;
}

std::string mirror(const std::string& code, std::size_t pos) {
  if (code[pos] == '0') return "0";
  const std::size_t mid = subtree_end(code, pos + 1);
  return "1" + mirror(code, mid) + mirror(code, pos + 1);
}

const std::vector<std::string>& trees_of_size(std::size_t n,
                                              std::vector<std::vector<std::string>>& memo) {
  if (memo.size() <= n) memo.resize(n + 1);
  auto& slot = memo[n];
  if (!slot.empty()) return slot;
  if (n == 0) {
    slot.push_back("0");
    return slot;
  }
  for (std::size_t i = 0; i < n; ++i) {
    // Copies, since recursion may reallocate memo.
    const auto lefts = trees_of_size(i, memo);
    const auto rights = trees_of_size(n - 1 - i, memo);
    for (const auto& l : lefts) {
      for (const auto& r : rights) memo[n].push_back("1" + l + r);
    }
  }
  return memo[n];
}

}  // namespace

// ---------------------------------------------------------------- trees

PlaneBinaryTree PlaneBinaryTree::node(const PlaneBinaryTree& left, const PlaneBinaryTree& right) {
  return PlaneBinaryTree("1" + left.code_ + right.code_);
}

PlaneBinaryTree PlaneBinaryTree::from_code(std::string code) {
  if (code.empty()) throw std::invalid_argument("empty tree word");
  for (char c : code) {
    if (c != '0' && c != '1') throw std::invalid_argument("tree word must be over {0,1}");
  }
  if (subtree_end(code, 0) != code.size()) throw std::invalid_argument("trailing symbols in tree word");
  return PlaneBinaryTree(std::move(code));
}

PlaneBinaryTree PlaneBinaryTree::parse(std::string_view text) {
  std::string code;
  std::size_t pos = 0;
  parse_text(text, pos, code);
  skip_ws(text, pos);
  if (pos != text.size()) throw std::invalid_argument("trailing characters in tree text");
  return PlaneBinaryTree(std::move(code));
}

PlaneBinaryTree PlaneBinaryTree::right_comb(std::size_t n) {
  std::string code;
  for (std::size_t i = 0; i < n; ++i) code += "10";
  return PlaneBinaryTree(code + "0");
}

PlaneBinaryTree PlaneBinaryTree::left_comb(std::size_t n) {
  return PlaneBinaryTree(std::string(n, '1') + std::string(n + 1, '0'));
}

PlaneBinaryTree PlaneBinaryTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return PlaneBinaryTree(code_.substr(1, subtree_end(code_, 1) - 1));
}

PlaneBinaryTree PlaneBinaryTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return PlaneBinaryTree(code_.substr(subtree_end(code_, 1)));
}

std::string PlaneBinaryTree::to_string() const {
  std::string out;
  std::size_t pos = 0;
  to_text(code_, pos, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const PlaneBinaryTree& t) { return os << t.to_string(); }

std::string to_string(const IntervalCanopyWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += w[i] == DoubleLetter::LL ? "LL" : w[i] == DoubleLetter::LR ? "LR" : "RR";
  }
  return out;
}

std::vector<PlaneBinaryTree> enumerate_trees(std::size_t n) {
  if (n < 1 || n > 12) throw std::invalid_argument("enumerate_trees: n must be in 1..12");
  std::vector<std::vector<std::string>> memo;
  auto codes = trees_of_size(n, memo);
  std::sort(codes.begin(), codes.end());
  std::vector<PlaneBinaryTree> out;
  out.reserve(codes.size());
  for (auto& c : codes) out.push_back(PlaneBinaryTree::from_code(std::move(c)));
  return out;
}

std::vector<PlaneBinaryTree> rotation_covers(const PlaneBinaryTree& t) {
  const std::string& code = t.code();
  std::vector<PlaneBinaryTree> out;
  for (std::size_t p = 0; p < code.size(); ++p) {
    if (code[p] != '1') continue;
    const std::size_t right = subtree_end(code, p + 1);
    if (code[right] != '1') continue;
    // 1 A 1 B C  ->  1 1 A B C
    std::string next = code.substr(0, p + 1) + '1' + code.substr(p + 1, right - p - 1) +
                       code.substr(right + 1);
    out.push_back(PlaneBinaryTree::from_code(std::move(next)));
  }
  return out;
}

Canopy canopy(const PlaneBinaryTree& t) {
  if (t.is_leaf()) throw std::invalid_argument("canopy needs at least one internal node");
  const std::string& code = t.code();
  Canopy out;
  // In preorder a leaf is a left child exactly when it directly follows its
  // parent.
  for (std::size_t p = 1; p < code.size(); ++p) {
    if (code[p] == '0') out += code[p - 1] == '1' ? 'L' : 'R';
  }
  return out;
}

IntervalCanopyWord interval_canopy_word(const PlaneBinaryTree& s, const PlaneBinaryTree& t) {
  if (s.size() != t.size()) throw std::invalid_argument("interval endpoints differ in size");
  const Canopy cs = canopy(s), ct = canopy(t);
  IntervalCanopyWord w;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 'L' && ct[i] == 'L') {
      w.push_back(DoubleLetter::LL);
    } else if (cs[i] == 'L') {
      w.push_back(DoubleLetter::LR);
    } else if (ct[i] == 'R') {
      w.push_back(DoubleLetter::RR);
    } else {
      throw std::invalid_argument("not an interval: canopy letter goes from R to L");
    }
  }
  return w;
}

bool is_synchronous(const PlaneBinaryTree& s, const PlaneBinaryTree& t) {
  const auto w = interval_canopy_word(s, t);
  return std::none_of(w.begin(), w.end(), [](DoubleLetter d) { return d == DoubleLetter::LR; });
}

std::vector<PlaneBinaryTree> left_border_decompose(const PlaneBinaryTree& t) {
  const std::string& code = t.code();
  std::vector<PlaneBinaryTree> factors;
  // Left-border nodes sit at preorder positions 0, 1, 2, ... while they are
  // internal; each one with a leaf in place of its left child is a factor.
  for (std::size_t p = 0; p < code.size() && code[p] == '1'; ++p) {
    const std::size_t right = subtree_end(code, p + 1);
    const std::size_t right_end = subtree_end(code, right);
    factors.push_back(PlaneBinaryTree::from_code("10" + code.substr(right, right_end - right)));
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

PlaneBinaryTree left_border_compose(const std::vector<PlaneBinaryTree>& factors) {
  if (factors.empty()) return PlaneBinaryTree::leaf();
  std::string code = factors.back().code();
  for (std::size_t i = factors.size() - 1; i-- > 0;) {
    const auto leftmost = code.find('0');
    code.replace(leftmost, 1, factors[i].code());
  }
  return PlaneBinaryTree::from_code(std::move(code));
}

Composition composition(const PlaneBinaryTree& t) {
  Composition c;
  for (const auto& f : left_border_decompose(t)) c.push_back(f.size());
  return c;
}

bool is_coarser(const Composition& coarse, const Composition& fine) {
  std::vector<std::size_t> fine_sums;
  std::size_t s = 0;
  for (auto part : fine) fine_sums.push_back(s += part);
  s = 0;
  for (auto part : coarse) {
    s += part;
    if (!std::binary_search(fine_sums.begin(), fine_sums.end(), s)) return false;
  }
  return s == (fine_sums.empty() ? 0 : fine_sums.back());
}

PlaneBinaryTree reverse(const PlaneBinaryTree& t) {
  return PlaneBinaryTree::from_code(mirror(t.code(), 0));
}

// ---------------------------------------------------------------- lattice

std::size_t TamariLattice::index_of(const PlaneBinaryTree& t) const {
  auto it = index_.find(t.code());
  if (it == index_.end()) throw std::invalid_argument("tree " + t.to_string() + " not in lattice");
  return it->second;
}

TamariLattice tamari_lattice(std::size_t n) {
  if (n < 1 || n > 10) throw std::invalid_argument("tamari_lattice: n must be in 1..10");
  TamariLattice lat;
  lat.n = n;
  lat.trees = enumerate_trees(n);
  for (std::size_t i = 0; i < lat.trees.size(); ++i) lat.index_.emplace(lat.trees[i].code(), i);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < lat.trees.size(); ++i) {
    for (const auto& up : rotation_covers(lat.trees[i])) covers.emplace_back(i, lat.index_of(up));
  }
  lat.poset = FinitePoset::build(lat.trees.size(), covers);
  return lat;
}

IntervalCanopyWord interval_canopy_word(const TamariLattice& lattice, IntervalId iv) {
  if (!lattice.poset.leq(iv.lo, iv.hi)) throw std::invalid_argument("not an interval");
  return interval_canopy_word(lattice.trees[iv.lo], lattice.trees[iv.hi]);
}

std::vector<IntervalRecord> interval_statistics(const TamariLattice& lattice,
                                                const StatisticsOptions& options) {
  if (lattice.n > kMaxStatisticsN) throw std::invalid_argument("interval_statistics: n must be <= 9");
  if (options.with_q && lattice.n > kMaxChainN) {
    throw std::invalid_argument("interval_statistics: longest chains need n <= 7");
  }
  const FinitePoset& P = lattice.poset;
  const std::size_t m = P.size();
  std::vector<Canopy> canopies;
  canopies.reserve(m);
  for (const auto& t : lattice.trees) canopies.push_back(canopy(t));

  auto records_from = [&](std::size_t lo, std::vector<IntervalRecord>& out) {
    std::vector<int> dist;
    if (options.with_q) {
      dist.assign(m, -1);
      dist[lo] = 0;
      for (auto a : P.topological_order()) {
        if (dist[a] < 0) continue;
        for (auto b : P.up(a)) dist[b] = std::max(dist[b], dist[a] + 1);
      }
    }
    for (std::size_t hi = 0; hi < m; ++hi) {
      if (!P.leq(lo, hi)) continue;
      IntervalRecord r;
      r.iv = {lo, hi};
      r.deg = classify_interval_edges(P, r.iv);
      if (options.with_q) r.q = static_cast<unsigned>(dist[hi]);
      const Canopy& cs = canopies[lo];
      const Canopy& ct = canopies[hi];
      unsigned ll = 0, rr = 0;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 'L' && ct[i] == 'L') ++ll;
        if (cs[i] == 'R' && ct[i] == 'R') ++rr;
      }
      r.ll = ll - 1;
      r.rr = rr - 1;
      r.sync = cs == ct;
      out.push_back(r);
    }
  };

  std::vector<std::vector<IntervalRecord>> per_lo(m);
  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    for (std::size_t lo = 0; lo < m; ++lo) records_from(lo, per_lo[lo]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t lo = w; lo < m; lo += threads) records_from(lo, per_lo[lo]);
      });
    }
  }
  std::vector<IntervalRecord> all;
  for (auto& v : per_lo) all.insert(all.end(), v.begin(), v.end());
  return all;
}

void write_statistics_csv(std::ostream& os, const TamariLattice& lattice,
                          const std::vector<IntervalRecord>& records) {
  os << "n,lo,hi,dx,dy,dybar,dxbar,q,ll,rr,sync\n";
  for (const auto& r : records) {
    os << lattice.n << ',' << lattice.trees[r.iv.lo] << ',' << lattice.trees[r.iv.hi] << ','
       << r.deg.dx << ',' << r.deg.dy << ',' << r.deg.dybar << ',' << r.deg.dxbar << ',';
    if (r.q) os << *r.q;
    os << ',' << r.ll << ',' << r.rr << ',' << (r.sync ? 1 : 0) << '\n';
  }
}

}  // namespace valence
