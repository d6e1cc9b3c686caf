#include "kirchhoff/multilinear.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace kirchhoff {

MultilinearPoly::MultilinearPoly(std::vector<int> universe) : universe_(std::move(universe)) {
  if (universe_.size() > 64)
    throw std::invalid_argument("MultilinearPoly: universe larger than 64 variables");
  for (size_t i = 1; i < universe_.size(); ++i)
    if (universe_[i - 1] >= universe_[i])
      throw std::invalid_argument("MultilinearPoly: universe not strictly increasing");
}

void MultilinearPoly::add_term(std::uint64_t mask, const Int& coeff) {
  if (universe_.size() < 64 && (mask >> universe_.size()) != 0)
    throw std::out_of_range("add_term: mask outside universe");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultilinearPoly::degree() const {
  int d = -1;
  for (const auto& [mask, coeff] : terms_) d = std::max(d, std::popcount(mask));
  return d;
}

bool MultilinearPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [mask, coeff] : terms_) {
    int p = std::popcount(mask);
    if (d < 0) d = p;
    else if (p != d) return false;
  }
  return true;
}

Rat MultilinearPoly::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != universe_.size())
    throw std::invalid_argument("evaluate: point size != variable count");
  Rat total = 0;
  for (const auto& [mask, coeff] : terms_) {
    Rat prod(coeff);
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
      prod *= point[static_cast<size_t>(std::countr_zero(bits))];
    total += prod;
  }
  return total;
}

std::string MultilinearPoly::serialize() const {
  std::ostringstream os;
  for (const auto& [mask, coeff] : terms_) {
    os << coeff.get_str() << ":";
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
      os << " e_" << universe_[static_cast<size_t>(std::countr_zero(bits))];
    os << "\n";
  }
  return os.str();
}

int MultilinearPoly::position_of(int edge_id) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), edge_id);
  if (it == universe_.end() || *it != edge_id)
    throw std::out_of_range("position_of: edge id not in universe");
  return static_cast<int>(it - universe_.begin());
}

MultilinearPoly kirchhoff_polynomial(const MultiGraph& g, int edge_cap) {
  std::vector<int> universe;
  universe.reserve(g.edges().size());
  for (const Edge& e : g.edges()) universe.push_back(e.id);
  MultilinearPoly p(std::move(universe));
  for (const auto& tree : enumerate_spanning_trees(g, edge_cap)) {
    std::uint64_t mask = 0;
    for (int id : tree) mask |= std::uint64_t(1) << p.position_of(id);
    p.add_term(mask, 1);
  }
  return p;
}

MultilinearPoly apply_operator(const MultilinearPoly& p, const DiffOperator& op) {
  if (op.exponents.size() != p.universe().size())
    throw std::invalid_argument("apply_operator: operator size != variable count");
  MultilinearPoly out(p.universe());
  std::uint64_t support = 0;
  for (size_t i = 0; i < op.exponents.size(); ++i) {
    if (op.exponents[i] < 0) throw std::invalid_argument("apply_operator: negative exponent");
    if (op.exponents[i] >= 2) return out;  // d^2 kills every squarefree term
    if (op.exponents[i] == 1) support |= std::uint64_t(1) << i;
  }
  for (const auto& [mask, coeff] : p.terms())
    if ((mask & support) == support) out.add_term(mask & ~support, coeff);
  return out;
}

ExactMatrix hessian_at(const MultilinearPoly& p, const std::vector<Rat>& point) {
  const int n = p.variable_count();
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("hessian_at: point size != variable count");
  ExactMatrix h(n, n);
  std::vector<int> vars;
  std::vector<Rat> pre, suf;
  for (const auto& [mask, coeff] : p.terms()) {
    vars.clear();
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
      vars.push_back(std::countr_zero(bits));
    const size_t k = vars.size();
    if (k < 2) continue;
    // Prefix/suffix products let each ordered pair drop its two factors.
    pre.assign(k + 1, Rat(1));
    suf.assign(k + 1, Rat(1));
    for (size_t i = 0; i < k; ++i) pre[i + 1] = pre[i] * point[static_cast<size_t>(vars[i])];
    for (size_t i = k; i-- > 0;) suf[i] = suf[i + 1] * point[static_cast<size_t>(vars[i])];
    for (size_t a = 0; a < k; ++a)
      for (size_t b = a + 1; b < k; ++b) {
        // Product of the term's variables except positions a and b.
        Rat rest = pre[a] * suf[b + 1];
        for (size_t t = a + 1; t < b; ++t) rest *= point[static_cast<size_t>(vars[t])];
        Rat val = Rat(coeff) * rest;
        h.at(vars[a], vars[b]) += val;
        h.at(vars[b], vars[a]) += val;
      }
  }
  return h;
}

ExactMatrix graph_hessian_at_ones(const MultiGraph& g) {
  const auto& edges = g.edges();
  const int n = static_cast<int>(edges.size());
  ExactMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // Parallel edges form a cycle, so no tree contains both.
      if (edges[i].u == edges[j].u && edges[i].v == edges[j].v) continue;
      Rat count(trees_containing(g, {edges[i].id, edges[j].id}));
      h.at(i, j) = count;
      h.at(j, i) = count;
    }
  return h;
}

}  // namespace kirchhoff
