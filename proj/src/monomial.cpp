#include "lefschetz/monomial.hpp"

#include <numeric>

namespace lefschetz {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool Monomial::divides(const Monomial& m) const {
  if (exps.size() != m.exps.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > m.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (exps.size() != m.exps.size()) throw malformed_input("monomial variable count mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& m) const {
  if (!m.divides(*this)) throw malformed_input("inexact monomial quotient");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= m.exps[i];
  return r;
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps > b.exps;  // descending lex within a degree
}

namespace {

void enumerate(int nvars, int degree, int var, std::vector<int>& cur,
               std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur[var] = degree;
    out.emplace_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[var] = e;
    enumerate(nvars, degree - e, var + 1, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int degree) {
  if (nvars < 1 || degree < 0) throw malformed_input("bad monomial basis parameters");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(binomial(nvars - 1 + degree, degree)));
  std::vector<int> cur(nvars, 0);
  enumerate(nvars, degree, 0, cur, out);
  return out;
}

MonomialIndexer::MonomialIndexer(int nvars, int degree) : list_(monomial_basis(nvars, degree)) {
  for (int i = 0; i < static_cast<int>(list_.size()); ++i) index_[list_[i].exps] = i;
}

int MonomialIndexer::index_of(const Monomial& m) const {
  auto it = index_.find(m.exps);
  if (it == index_.end()) throw malformed_input("monomial outside indexed basis");
  return it->second;
}

}  // namespace lefschetz
