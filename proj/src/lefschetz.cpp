#include "kirchhoff/lefschetz.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kirchhoff/linalg.hpp"

namespace kirchhoff {

namespace {

// Squarefree monomials of degree k in n variables as bitmasks, in
// lexicographic order on their sorted index tuples.
std::vector<std::uint64_t> degree_monomials(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t(1) << i;
    out.push_back(mask);
    if (k == 0) break;
    int j = k - 1;
    while (j >= 0 && idx[static_cast<size_t>(j)] == n - k + j) --j;
    if (j < 0) break;
    ++idx[static_cast<size_t>(j)];
    for (int t = j + 1; t < k; ++t) idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
  }
  return out;
}

// Coefficient of F picked out by differentiating with the monomial pair
// (u, v): zero unless u and v are disjoint and u|v is a term of F.
Rat pairing(const MultilinearPoly& f, std::uint64_t u, std::uint64_t v) {
  if ((u & v) != 0) return Rat(0);
  auto it = f.terms().find(u | v);
  return it == f.terms().end() ? Rat(0) : Rat(it->second);
}

// Incremental row-independence tracker over Q (echelon form).
struct Echelon {
  std::vector<std::vector<Rat>> rows;  // reduced rows
  std::vector<int> pivots;             // pivot column per stored row

  // Reduces `row` against the stored rows; if independent, stores it and
  // returns true.
  bool add(std::vector<Rat> row) {
    for (size_t i = 0; i < rows.size(); ++i) {
      const Rat& lead = row[static_cast<size_t>(pivots[i])];
      if (lead == 0) continue;
      Rat f = lead / rows[i][static_cast<size_t>(pivots[i])];
      for (size_t c = 0; c < row.size(); ++c) row[c] -= f * rows[i][c];
    }
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) {
        pivots.push_back(static_cast<int>(c));
        rows.push_back(std::move(row));
        return true;
      }
    }
    return false;
  }
};

}  // namespace

ExactMatrix catalecticant(const MultilinearPoly& f, int k) {
  const int n = f.variable_count();
  const int s = f.degree();
  if (!f.is_homogeneous() || s < 0)
    throw std::invalid_argument("catalecticant: form must be homogeneous and nonzero");
  if (k < 0 || k > s) throw std::invalid_argument("catalecticant: degree out of range");
  auto row_monos = degree_monomials(n, k);
  auto col_monos = degree_monomials(n, s - k);
  ExactMatrix m(static_cast<int>(row_monos.size()), static_cast<int>(col_monos.size()));
  for (size_t r = 0; r < row_monos.size(); ++r)
    for (size_t c = 0; c < col_monos.size(); ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = pairing(f, row_monos[r], col_monos[c]);
  return m;
}

GradedAlgebraModel hilbert_and_bases(const MultilinearPoly& f, BasisOrder order) {
  const int n = f.variable_count();
  const int s = f.degree();
  if (!f.is_homogeneous() || s < 0)
    throw std::invalid_argument("hilbert_and_bases: form must be homogeneous and nonzero");
  GradedAlgebraModel model{f, s, {}, {}};
  model.hilbert.resize(static_cast<size_t>(s) + 1);
  model.bases.resize(static_cast<size_t>(s) + 1);
  for (int k = 0; k <= s; ++k) {
    auto row_monos = degree_monomials(n, k);
    auto col_monos = degree_monomials(n, s - k);
    if (order == BasisOrder::LexReverse) std::reverse(row_monos.begin(), row_monos.end());
    Echelon ech;
    std::vector<std::uint64_t> basis;
    for (std::uint64_t u : row_monos) {
      std::vector<Rat> row(col_monos.size());
      for (size_t c = 0; c < col_monos.size(); ++c) row[c] = pairing(f, u, col_monos[c]);
      if (ech.add(std::move(row))) basis.push_back(u);
    }
    model.hilbert[static_cast<size_t>(k)] = static_cast<int>(basis.size());
    model.bases[static_cast<size_t>(k)] = std::move(basis);
  }
  return model;
}

ExactMatrix kth_hessian_at(const GradedAlgebraModel& model, int k, const std::vector<Rat>& point) {
  if (k < 0 || k > model.socle_degree) throw std::invalid_argument("kth_hessian_at: k out of range");
  if (static_cast<int>(point.size()) != model.f.variable_count())
    throw std::invalid_argument("kth_hessian_at: point size != variable count");
  const auto& basis = model.bases[static_cast<size_t>(k)];
  const int dim = static_cast<int>(basis.size());
  ExactMatrix h(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      std::uint64_t u = basis[static_cast<size_t>(a)], v = basis[static_cast<size_t>(b)];
      Rat val(0);
      if ((u & v) == 0) {
        // (the monomial uv applied to F as a differential operator)(point):
        // sum over terms T containing uv of coeff_T * point^(T minus uv).
        std::uint64_t uv = u | v;
        for (const auto& [mask, coeff] : model.f.terms()) {
          if ((mask & uv) != uv) continue;
          Rat prod(coeff);
          for (std::uint64_t bits = mask & ~uv; bits != 0; bits &= bits - 1)
            prod *= point[static_cast<size_t>(std::countr_zero(bits))];
          val += prod;
        }
      }
      h.at(a, b) = val;
      if (a != b) h.at(b, a) = val;
    }
  return h;
}

SLPReport slp_check(const MultiGraph& g, std::vector<Rat> point, const std::string& descriptor,
                    int edge_cap, BasisOrder order) {
  MultilinearPoly f = kirchhoff_polynomial(g, edge_cap);
  const int s = g.vertex_count() - 1;
  if (f.degree() != s)
    throw std::logic_error("slp_check: spanning-tree polynomial has unexpected degree");
  if (point.empty()) point.assign(static_cast<size_t>(f.variable_count()), Rat(1));
  if (static_cast<int>(point.size()) != f.variable_count())
    throw std::invalid_argument("slp_check: point size != edge count");

  GradedAlgebraModel model = hilbert_and_bases(f, order);
  SLPReport report;
  report.graph = descriptor;
  report.socle_degree = s;
  report.hilbert = model.hilbert;
  report.l_coeffs = point;
  report.verdict = true;
  for (int k = 0; 2 * k <= s; ++k) {
    SLPEntry entry;
    entry.k = k;
    entry.dim = model.hilbert[static_cast<size_t>(k)];
    entry.det = determinant(kth_hessian_at(model, k, point));
    entry.nonzero = (entry.det != 0);
    if (!entry.nonzero) report.verdict = false;
    report.per_k.push_back(std::move(entry));
  }
  return report;
}

}  // namespace kirchhoff
