#include "rvl/farkas.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rvl {

namespace {

struct Row {
  std::vector<Rat> c;
  Rat aff;
  bool strict = false;
  std::vector<Rat> mult;
};

/// Scales the row by the positive rational that makes all coefficients
/// integral with gcd 1 (multipliers scale along, so provenance stays
/// exact).
void normalize(Row& r) {
  mpz_class gnum = 0, glcm = 1;
  auto feed = [&](const Rat& q) {
    if (q.is_zero()) return;
    mpz_class n = ::abs(q.num());
    mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(glcm.get_mpz_t(), glcm.get_mpz_t(), q.den().get_mpz_t());
  };
  for (const auto& q : r.c) feed(q);
  feed(r.aff);
  if (gnum == 0) return;
  Rat scale(glcm, gnum);
  if (scale == Rat(1)) return;
  for (auto& q : r.c) q *= scale;
  r.aff *= scale;
  for (auto& q : r.mult) q *= scale;
}

struct RowKey {
  std::vector<Rat> c;
  Rat aff;
  bool strict;
  bool operator<(const RowKey& o) const {
    if (strict != o.strict) return strict < o.strict;
    if (aff != o.aff) return aff < o.aff;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
  }
};

std::vector<Row> dedup(std::vector<Row> rows) {
  std::map<RowKey, std::size_t> seen;
  std::vector<Row> out;
  for (auto& r : rows) {
    RowKey key{r.c, r.aff, r.strict};
    if (seen.emplace(std::move(key), out.size()).second) out.push_back(std::move(r));
  }
  return out;
}

bool trivially_true(const Row& r) {
  for (const auto& q : r.c)
    if (!q.is_zero()) return false;
  return r.strict ? r.aff > Rat(0) : r.aff >= Rat(0);
}

std::vector<Row> eliminate_var(const std::vector<Row>& rows, std::size_t j) {
  std::vector<const Row*> pos, neg;
  std::vector<Row> out;
  for (const auto& r : rows) {
    int s = r.c[j].sign();
    if (s > 0)
      pos.push_back(&r);
    else if (s < 0)
      neg.push_back(&r);
    else if (!trivially_true(r))
      out.push_back(r);
  }
  for (const Row* p : pos) {
    for (const Row* n : neg) {
      Rat a = p->c[j];
      Rat b = n->c[j];  // b < 0
      // (-b) * p + a * n cancels column j; both multipliers positive.
      Row r;
      r.strict = p->strict || n->strict;
      r.c.resize(p->c.size());
      for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = (-b) * p->c[i] + a * n->c[i];
      r.aff = (-b) * p->aff + a * n->aff;
      if (!p->mult.empty()) {
        r.mult.resize(p->mult.size());
        for (std::size_t i = 0; i < r.mult.size(); ++i)
          r.mult[i] = (-b) * p->mult[i] + a * n->mult[i];
      }
      if (trivially_true(r)) continue;
      normalize(r);
      out.push_back(std::move(r));
    }
  }
  return dedup(std::move(out));
}

bool all_coeffs_zero(const Row& r) {
  for (const auto& q : r.c)
    if (!q.is_zero()) return false;
  return true;
}

/// Per-variable back-substitution through the saved elimination stages.
/// Interval policy: midpoint when bounded both sides, bound +- 1 when
/// bounded one side, 0 when free.
std::map<std::string, Rat> extract_witness(const std::vector<std::vector<Row>>& stages,
                                           const std::vector<std::string>& letters) {
  std::size_t k = letters.size();
  std::vector<Rat> x(k, Rat(0));
  for (std::size_t jj = k; jj-- > 0;) {
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : stages[jj]) {
      if (r.c[jj].is_zero()) continue;
      Rat rest = r.aff;
      for (std::size_t i = jj + 1; i < k; ++i) rest += r.c[i] * x[i];
      Rat bound = -rest / r.c[jj];
      if (r.c[jj] > Rat(0)) {
        if (!lo || bound > *lo) {
          lo = bound;
          lo_strict = r.strict;
        } else if (bound == *lo && r.strict) {
          lo_strict = true;
        }
      } else {
        if (!hi || bound < *hi) {
          hi = bound;
          hi_strict = r.strict;
        } else if (bound == *hi && r.strict) {
          hi_strict = true;
        }
      }
    }
    if (lo && hi) {
      if (*lo == *hi) {
        if (lo_strict || hi_strict)
          throw std::logic_error("witness extraction hit an empty interval");
        x[jj] = *lo;
      } else {
        x[jj] = (*lo + *hi) / Rat(2);
      }
    } else if (lo) {
      x[jj] = *lo + Rat(1);
    } else if (hi) {
      x[jj] = *hi - Rat(1);
    } else {
      x[jj] = Rat(0);
    }
  }
  std::map<std::string, Rat> out;
  for (std::size_t i = 0; i < k; ++i) out.emplace(letters[i], x[i]);
  return out;
}

std::vector<Rat> dense(const LinearForm& f, const std::vector<std::string>& letters) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < letters.size(); ++i) index.emplace(letters[i], i);
  std::vector<Rat> out(letters.size(), Rat(0));
  for (const auto& [name, q] : f.coeffs) {
    auto it = index.find(name);
    if (it == index.end())
      throw std::invalid_argument("letter '" + name + "' missing from letter_order");
    out[it->second] = q;
  }
  return out;
}

}  // namespace

LinearVerdict entails_linear(const LinearSystem& sys, const LinearForm& target) {
  const auto& letters = sys.letter_order;
  std::size_t k = letters.size();
  std::size_t n = sys.hypotheses.size();

  std::vector<Row> rows;
  rows.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Row r;
    r.c = dense(sys.hypotheses[i], letters);
    r.aff = sys.hypotheses[i].affine;
    r.strict = false;
    r.mult.assign(n + 1, Rat(0));
    r.mult[i] = Rat(1);
    rows.push_back(std::move(r));
  }
  {
    // Negated target: 0 < -(u . x + s).
    Row r;
    r.c = dense(lf_neg(target), letters);
    r.aff = -target.affine;
    r.strict = true;
    r.mult.assign(n + 1, Rat(0));
    r.mult[n] = Rat(1);
    rows.push_back(std::move(r));
  }

  std::vector<std::vector<Row>> stages;
  stages.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    stages.push_back(rows);
    rows = eliminate_var(rows, j);
  }

  // All variables are gone; look for a violated constant row. A weak
  // violation cannot involve the strict negated-target row, so it is an
  // infeasibility certificate for the hypotheses alone.
  const Row* weak_violation = nullptr;
  const Row* strict_violation = nullptr;
  for (const auto& r : rows) {
    if (!all_coeffs_zero(r)) throw std::logic_error("unexpected surviving variable");
    if (!r.strict && r.aff < Rat(0) && !weak_violation) weak_violation = &r;
    if (r.strict && r.aff <= Rat(0) && !strict_violation) strict_violation = &r;
  }

  LinearVerdict v;
  if (weak_violation) {
    if (!weak_violation->mult[n].is_zero())
      throw std::logic_error("weak violation traced to the strict row");
    v.kind = LinearVerdict::Kind::infeasible;
    v.infeasibility.multipliers.assign(weak_violation->mult.begin(),
                                       weak_violation->mult.end() - 1);
    if (!verify_certificate(sys, v.infeasibility))
      throw std::logic_error("infeasibility certificate failed self-check");
    return v;
  }
  if (strict_violation) {
    const Rat& mu = strict_violation->mult[n];
    if (!(mu > Rat(0))) throw std::logic_error("strict violation without target multiplier");
    v.kind = LinearVerdict::Kind::entailed;
    v.certificate.multipliers.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      v.certificate.multipliers[i] = strict_violation->mult[i] / mu;
    if (!verify_certificate(sys, target, v.certificate))
      throw std::logic_error("Farkas certificate failed self-check");
    return v;
  }

  v.kind = LinearVerdict::Kind::refuted;
  v.witness = extract_witness(stages, letters);
  for (const auto& h : sys.hypotheses)
    if (lf_eval(h, v.witness) < Rat(0))
      throw std::logic_error("witness failed a hypothesis self-check");
  if (lf_eval(target, v.witness) >= Rat(0))
    throw std::logic_error("witness fails to refute the target");
  return v;
}

bool verify_certificate(const LinearSystem& sys, const LinearForm& target,
                        const FarkasCertificate& cert) {
  if (cert.multipliers.size() != sys.hypotheses.size())
    throw std::invalid_argument("multiplier count does not match hypothesis count");
  LinearForm combo;
  Rat aff_sum(0);
  for (std::size_t i = 0; i < cert.multipliers.size(); ++i) {
    if (cert.multipliers[i] < Rat(0)) return false;
    combo = lf_add(combo, lf_scale(cert.multipliers[i], sys.hypotheses[i]));
  }
  aff_sum = combo.affine;
  combo.affine = Rat(0);
  LinearForm u = target;
  Rat s = u.affine;
  u.affine = Rat(0);
  return combo == u && aff_sum <= s;
}

bool verify_certificate(const LinearSystem& sys, const InfeasibilityCertificate& cert) {
  if (cert.multipliers.size() != sys.hypotheses.size())
    throw std::invalid_argument("multiplier count does not match hypothesis count");
  LinearForm combo;
  for (std::size_t i = 0; i < cert.multipliers.size(); ++i) {
    if (cert.multipliers[i] < Rat(0)) return false;
    combo = lf_add(combo, lf_scale(cert.multipliers[i], sys.hypotheses[i]));
  }
  return combo.coeffs.empty() && combo.affine < Rat(0);
}

bool is_feasible(const LinearSystem& sys) {
  std::vector<Row> rows;
  for (const auto& h : sys.hypotheses) {
    Row r;
    r.c = dense(h, sys.letter_order);
    r.aff = h.affine;
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < sys.letter_order.size(); ++j) rows = eliminate_var(rows, j);
  for (const auto& r : rows)
    if (!r.strict && r.aff < Rat(0)) return false;
  return true;
}

std::string print_certificate(const std::vector<Rat>& multipliers) {
  std::string out = "CERT";
  for (const auto& q : multipliers) {
    out += ' ';
    out += q.str();
  }
  return out;
}

std::vector<FmRow> fm_project(std::vector<FmRow> rows, const std::vector<std::size_t>& eliminate) {
  std::vector<Row> work;
  work.reserve(rows.size());
  for (auto& r : rows) {
    Row w;
    w.c = std::move(r.c);
    w.aff = std::move(r.aff);
    w.strict = r.strict;
    work.push_back(std::move(w));
  }
  for (std::size_t j : eliminate) work = eliminate_var(work, j);
  std::vector<FmRow> out;
  out.reserve(work.size());
  for (auto& w : work) out.push_back(FmRow{std::move(w.c), std::move(w.aff), w.strict});
  return out;
}

}  // namespace rvl
