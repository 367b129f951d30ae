#include "radii/lp.hpp"

#include <limits>
#include <stdexcept>

#include "radii/errors.hpp"

namespace radii {

const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

namespace {

constexpr size_t npos = std::numeric_limits<size_t>::max();

// Simplex dictionary over rows  A x ≤ b  with x = x⁺ − x⁻.
//
// Variable ids: x⁺_j = j, x⁻_j = n + j, slack of row i = 2n + i, and one
// artificial variable 2n + m used by phase I. Row i reads
//   basic[i] = rhs[i] − Σ_k t[i][k] · nonbasic[k].
// Objective rows read  z = z0 + Σ_k c[k] · nonbasic[k].
class Dictionary {
 public:
  Dictionary(const std::vector<Vector>& a, const std::vector<Scalar>& b, const Vector& c)
      : n_(c.size()), m_(a.size()), cols_(2 * n_ + 1), art_(2 * n_ + m_) {
    t_.assign(m_, std::vector<mpq_class>(cols_));
    rhs_.resize(m_);
    basic_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      for (size_t j = 0; j < n_; ++j) {
        t_[i][j] = a[i][j].raw();
        t_[i][n_ + j] = -a[i][j].raw();
      }
      t_[i][2 * n_] = -1;
      rhs_[i] = b[i].raw();
      basic_[i] = 2 * n_ + i;
    }
    nonbasic_.resize(cols_);
    for (size_t k = 0; k < 2 * n_; ++k) nonbasic_[k] = k;
    nonbasic_[2 * n_] = art_;

    obj_.assign(cols_, 0);
    for (size_t j = 0; j < n_; ++j) {
      obj_[j] = c[j].raw();
      obj_[n_ + j] = -c[j].raw();
    }
    phase1_.assign(cols_, 0);
    phase1_[2 * n_] = -1;
  }

  LPResult run() {
    if (!phase_one()) return LPResult{LPStatus::infeasible, {}, {}, {}};
    excluded_ = art_;
    if (!optimize(obj_)) return LPResult{LPStatus::unbounded, {}, {}, {}};

    LPResult res;
    res.status = LPStatus::optimal;
    std::vector<mpq_class> value(2 * n_ + m_ + 1);
    for (size_t i = 0; i < m_; ++i) value[basic_[i]] = rhs_[i];
    Vector x(n_);
    for (size_t j = 0; j < n_; ++j) x[j] = Scalar(mpq_class(value[j] - value[n_ + j]));
    res.point = std::move(x);
    res.value = Scalar(obj0_);
    std::vector<Scalar> y(m_);
    for (size_t k = 0; k < cols_; ++k) {
      const size_t v = nonbasic_[k];
      if (v >= 2 * n_ && v < 2 * n_ + m_) y[v - 2 * n_] = Scalar(mpq_class(-obj_[k]));
    }
    res.dual = std::move(y);
    return res;
  }

 private:
  bool phase_one() {
    size_t r = npos;
    for (size_t i = 0; i < m_; ++i) {
      if (rhs_[i] < 0 && (r == npos || rhs_[i] < rhs_[r])) r = i;
    }
    if (r == npos) return true;
    pivot(r, 2 * n_);
    optimize(phase1_);
    if (phase1_0_ < 0) return false;
    // A degenerate artificial left in the basis is pivoted out when its row
    // has any usable entry; otherwise the row is identically zero and the
    // artificial stays pinned at 0.
    for (size_t i = 0; i < m_; ++i) {
      if (basic_[i] != art_) continue;
      size_t best = npos;
      for (size_t k = 0; k < cols_; ++k) {
        if (sgn(t_[i][k]) != 0 && (best == npos || nonbasic_[k] < nonbasic_[best])) best = k;
      }
      if (best != npos) pivot(i, best);
    }
    return true;
  }

  // Bland's rule: smallest-id improving entering variable, smallest-id
  // leaving variable among minimum-ratio rows. Returns false if unbounded.
  bool optimize(const std::vector<mpq_class>& obj) {
    mpq_class ratio, best_ratio;
    for (;;) {
      size_t enter = npos;
      for (size_t k = 0; k < cols_; ++k) {
        if (nonbasic_[k] == excluded_ || sgn(obj[k]) <= 0) continue;
        if (enter == npos || nonbasic_[k] < nonbasic_[enter]) enter = k;
      }
      if (enter == npos) return true;
      size_t leave = npos;
      for (size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        ratio = rhs_[i] / t_[i][enter];
        if (leave == npos || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter);
    }
  }

  void pivot(size_t r, size_t k) {
    const mpq_class p = t_[r][k];
    auto& row = t_[r];
    for (size_t j = 0; j < cols_; ++j) {
      if (j != k) row[j] /= p;
    }
    row[k] = 1 / p;
    rhs_[r] /= p;

    mpq_class f;
    for (size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(t_[i][k]) == 0) continue;
      f = t_[i][k];
      auto& ri = t_[i];
      for (size_t j = 0; j < cols_; ++j) {
        if (j != k && sgn(row[j]) != 0) ri[j] -= f * row[j];
      }
      ri[k] = -f * row[k];
      rhs_[i] -= f * rhs_[r];
    }
    update_objective(obj_, obj0_, r, k);
    update_objective(phase1_, phase1_0_, r, k);
    std::swap(basic_[r], nonbasic_[k]);
  }

  void update_objective(std::vector<mpq_class>& obj, mpq_class& obj0, size_t r, size_t k) {
    if (sgn(obj[k]) == 0) return;
    const mpq_class f = obj[k];
    const auto& row = t_[r];
    obj0 += f * rhs_[r];
    for (size_t j = 0; j < cols_; ++j) {
      if (j != k && sgn(row[j]) != 0) obj[j] -= f * row[j];
    }
    obj[k] = -f * row[k];
  }

  size_t n_, m_, cols_, art_;
  size_t excluded_ = npos;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> rhs_;
  std::vector<size_t> basic_, nonbasic_;
  std::vector<mpq_class> obj_, phase1_;
  mpq_class obj0_, phase1_0_;
};

void check_dims(const LinearProgram& lp) {
  const size_t n = lp.dim();
  for (const auto& c : lp.inequalities) {
    if (c.normal.size() != n) throw InputError("LP constraint has wrong dimension");
  }
  for (const auto& c : lp.equalities) {
    if (c.normal.size() != n) throw InputError("LP equality has wrong dimension");
  }
}

}  // namespace

LPResult lp_solve(const LinearProgram& lp) {
  check_dims(lp);
  std::vector<Vector> a;
  std::vector<Scalar> b;
  a.reserve(lp.inequalities.size() + 2 * lp.equalities.size());
  for (const auto& c : lp.inequalities) {
    a.push_back(c.normal);
    b.push_back(c.bound);
  }
  for (const auto& c : lp.equalities) {
    a.push_back(c.normal);
    b.push_back(c.bound);
    a.push_back(-c.normal);
    b.push_back(-c.bound);
  }
  LPResult res = Dictionary(a, b, lp.objective).run();
  if (res.optimal()) {
    const size_t mi = lp.inequalities.size();
    std::vector<Scalar> y(res.dual->begin(), res.dual->begin() + static_cast<long>(mi));
    for (size_t e = 0; e < lp.equalities.size(); ++e) {
      y.push_back((*res.dual)[mi + 2 * e] - (*res.dual)[mi + 2 * e + 1]);
    }
    res.dual = std::move(y);
    if (!certificate_holds(lp, res)) throw std::logic_error("lp_solve: certificate check failed");
  }
  return res;
}

LPResult lp_lex_optimal(const LinearProgram& lp) {
  LPResult first = lp_solve(lp);
  if (!first.optimal()) return first;
  LinearProgram q = lp;
  q.equalities.push_back({lp.objective, *first.value});
  Vector point = *first.point;
  for (size_t i = 0; i < lp.dim(); ++i) {
    q.objective = -Vector::unit(lp.dim(), i);
    const LPResult r = lp_solve(q);
    if (r.status == LPStatus::unbounded) return LPResult{LPStatus::unbounded, {}, {}, {}};
    point = *r.point;
    q.equalities.push_back({Vector::unit(lp.dim(), i), point[i]});
  }
  first.point = std::move(point);
  return first;
}

bool certificate_holds(const LinearProgram& lp, const LPResult& res) {
  if (!res.optimal() || !res.point || !res.value || !res.dual) return false;
  const Vector& x = *res.point;
  if (dot(lp.objective, x) != *res.value) return false;
  for (const auto& c : lp.inequalities) {
    if (dot(c.normal, x) > c.bound) return false;
  }
  for (const auto& c : lp.equalities) {
    if (dot(c.normal, x) != c.bound) return false;
  }
  const auto& y = *res.dual;
  if (y.size() != lp.inequalities.size() + lp.equalities.size()) return false;
  Vector combo(lp.dim());
  Scalar dual_value = 0;
  for (size_t i = 0; i < y.size(); ++i) {
    const Constraint& c = i < lp.inequalities.size()
                              ? lp.inequalities[i]
                              : lp.equalities[i - lp.inequalities.size()];
    if (i < lp.inequalities.size() && y[i].sign() < 0) return false;
    if (y[i].is_zero()) continue;
    combo += c.normal * y[i];
    dual_value += c.bound * y[i];
  }
  return combo == lp.objective && dual_value == *res.value;
}

}  // namespace radii
