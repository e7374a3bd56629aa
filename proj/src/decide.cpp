#include "rvl/decide.hpp"

#include <algorithm>
#include <stdexcept>

namespace rvl {

namespace {

Formula gap(const Inequality& ineq) { return sugar::sub(ineq.rhs, ineq.lhs); }

std::vector<LinearForm> box_rows(const std::vector<std::string>& letters) {
  std::vector<LinearForm> rows;
  rows.reserve(2 * letters.size());
  for (const auto& name : letters) {
    LinearForm lower;  // 0 <= P + 1
    lower.coeffs.emplace(name, Rat(1));
    lower.affine = Rat(1);
    rows.push_back(std::move(lower));
    LinearForm upper;  // 0 <= 1 - P
    upper.coeffs.emplace(name, Rat(-1));
    upper.affine = Rat(1);
    rows.push_back(std::move(upper));
  }
  return rows;
}

struct JointDecomposition {
  std::vector<std::vector<GuardedPiece>> parts;  // hypotheses first, extras after
  std::vector<std::string> letter_order;
  std::size_t hyp_count = 0;
  Mode mode;

  std::size_t branch_count() const {
    std::size_t total = 1;
    for (const auto& p : parts) {
      if (p.empty()) throw std::logic_error("empty decomposition");
      if (total > (std::size_t{1} << 40) / p.size())
        throw std::runtime_error("too many sign branches");
      total *= p.size();
    }
    return total;
  }

  /// Decodes branch index into piece choices (last part varies fastest, so
  /// enumeration order is lexicographic in the concatenated sign strings).
  std::vector<std::size_t> choices(std::size_t index) const {
    std::vector<std::size_t> out(parts.size());
    for (std::size_t i = parts.size(); i-- > 0;) {
      out[i] = index % parts[i].size();
      index /= parts[i].size();
    }
    return out;
  }

  std::string signs(const std::vector<std::size_t>& choice) const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += parts[i][choice[i]].signs;
    return s;
  }

  /// Branch system: guards of every chosen piece, then the hypothesis
  /// values, then (extended) the unit-box rows per letter.
  LinearSystem system(const std::vector<std::size_t>& choice) const {
    LinearSystem sys;
    sys.letter_order = letter_order;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& g = parts[i][choice[i]].guards;
      sys.hypotheses.insert(sys.hypotheses.end(), g.begin(), g.end());
    }
    for (std::size_t i = 0; i < hyp_count; ++i)
      sys.hypotheses.push_back(parts[i][choice[i]].value);
    if (mode == Mode::extended) {
      auto box = box_rows(letter_order);
      sys.hypotheses.insert(sys.hypotheses.end(), box.begin(), box.end());
    }
    return sys;
  }
};

/// Decomposes the theory's gap formulas plus any extra formulas, sharing
/// one letter order.
JointDecomposition joint_decomposition(const Theory& t, const std::vector<Formula>& extras,
                                       Mode mode, const std::vector<std::string>& letters) {
  JointDecomposition jd;
  jd.mode = mode;
  jd.letter_order = letters;
  jd.hyp_count = t.size();
  for (const auto& ineq : t) {
    require_mode(ineq.lhs, mode);
    require_mode(ineq.rhs, mode);
    jd.parts.push_back(decompose(gap(ineq)).pieces);
  }
  for (const auto& f : extras) {
    require_mode(f, mode);
    jd.parts.push_back(decompose(f).pieces);
  }
  return jd;
}

}  // namespace

Verdict decide(const Theory& t, const Inequality& goal, Mode mode, DecideOptions opts) {
  auto letters = letters_of(t, goal);
  JointDecomposition jd = joint_decomposition(t, {gap(goal)}, mode, letters);
  std::size_t total = jd.branch_count();
  std::size_t goal_part = jd.parts.size() - 1;

  std::vector<BranchOutcome> outcomes(total);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
  for (long long bi = 0; bi < static_cast<long long>(total); ++bi) {
    auto choice = jd.choices(static_cast<std::size_t>(bi));
    BranchOutcome& out = outcomes[static_cast<std::size_t>(bi)];
    out.signs = jd.signs(choice);
    out.system = jd.system(choice);
    out.target = jd.parts[goal_part][choice[goal_part]].value;
    out.verdict = entails_linear(out.system, out.target);
  }

  for (auto& out : outcomes) {
    if (out.verdict.kind == LinearVerdict::Kind::refuted) {
      Verdict v;
      v.kind = Verdict::Kind::refutes;
      v.refuting_signs = out.signs;
      std::map<std::string, Rat> assignment = out.verdict.witness;
      for (const auto& name : letters) assignment.emplace(name, Rat(0));
      v.countermodel.emplace(std::move(assignment), mode);
      return v;
    }
  }
  Verdict v;
  v.kind = Verdict::Kind::entails;
  v.branches = std::move(outcomes);
  return v;
}

ConsistencyReport consistent(const Theory& t, Mode mode) {
  ConsistencyReport report;
  report.mode = mode;
  if (mode == Mode::extended) {
    Inequality absurd{Formula::zero(), Formula::scale(Rat(-1), Formula::one())};
    Verdict v = decide(t, absurd, mode);
    if (v.kind == Verdict::Kind::refutes) {
      report.consistent = true;
      report.witness = v.countermodel;
    } else {
      report.consistent = false;
      report.branches = std::move(v.branches);
    }
    return report;
  }
  report.consistent = true;  // the constant-0 model
  for (const auto& name : letters_of(t)) {
    Formula p = Formula::letter(name);
    bool le = decide(t, Inequality{p, Formula::zero()}, mode).kind == Verdict::Kind::entails;
    bool ge = le && decide(t, Inequality{Formula::zero(), p}, mode).kind == Verdict::Kind::entails;
    report.forced_zero.emplace_back(name, le && ge);
  }
  return report;
}

bool QInterval::contains(const Rat& r) const {
  if (empty) return false;
  if (lo) {
    if (r < *lo) return false;
    if (r == *lo && lo_strict) return false;
  }
  if (hi) {
    if (r > *hi) return false;
    if (r == *hi && hi_strict) return false;
  }
  return true;
}

namespace {

QInterval empty_interval() {
  QInterval i;
  i.empty = true;
  return i;
}

QInterval intersect(const QInterval& a, const QInterval& b) {
  if (a.empty || b.empty) return empty_interval();
  QInterval out;
  if (a.lo && b.lo) {
    if (*a.lo > *b.lo || (*a.lo == *b.lo && a.lo_strict)) {
      out.lo = a.lo;
      out.lo_strict = a.lo_strict || (*a.lo == *b.lo && b.lo_strict);
    } else {
      out.lo = b.lo;
      out.lo_strict = b.lo_strict || (*a.lo == *b.lo && a.lo_strict);
    }
  } else if (a.lo) {
    out.lo = a.lo;
    out.lo_strict = a.lo_strict;
  } else if (b.lo) {
    out.lo = b.lo;
    out.lo_strict = b.lo_strict;
  }
  if (a.hi && b.hi) {
    if (*a.hi < *b.hi || (*a.hi == *b.hi && a.hi_strict)) {
      out.hi = a.hi;
      out.hi_strict = a.hi_strict || (*a.hi == *b.hi && b.hi_strict);
    } else {
      out.hi = b.hi;
      out.hi_strict = b.hi_strict || (*a.hi == *b.hi && a.hi_strict);
    }
  } else if (a.hi) {
    out.hi = a.hi;
    out.hi_strict = a.hi_strict;
  } else if (b.hi) {
    out.hi = b.hi;
    out.hi_strict = b.hi_strict;
  }
  if (out.lo && out.hi) {
    if (*out.lo > *out.hi) return empty_interval();
    if (*out.lo == *out.hi && (out.lo_strict || out.hi_strict)) return empty_interval();
  }
  return out;
}

/// Interval of r satisfying all rows (each 0 <= a*r + aff over the single
/// surviving variable).
QInterval interval_from_rows(const std::vector<FmRow>& rows, std::size_t r_index) {
  QInterval out;
  for (const auto& row : rows) {
    const Rat& a = row.c[r_index];
    if (a.is_zero()) {
      bool ok = row.strict ? row.aff > Rat(0) : row.aff >= Rat(0);
      if (!ok) return empty_interval();
      continue;
    }
    Rat bound = -row.aff / a;
    QInterval piece;
    if (a > Rat(0)) {
      piece.lo = bound;
      piece.lo_strict = row.strict;
    } else {
      piece.hi = bound;
      piece.hi_strict = row.strict;
    }
    out = intersect(out, piece);
    if (out.empty) return out;
  }
  return out;
}

}  // namespace

QInterval parametric_interval(const Theory& t, const Formula& c, const Formula& d, Mode mode) {
  auto letters = letters_of(t);
  for (const auto& name : letters_of(c)) letters.push_back(name);
  for (const auto& name : letters_of(d)) letters.push_back(name);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  JointDecomposition jd = joint_decomposition(t, {c, d}, mode, letters);
  std::size_t total = jd.branch_count();
  std::size_t c_part = jd.parts.size() - 2;
  std::size_t d_part = jd.parts.size() - 1;

  QInterval result;
  for (std::size_t bi = 0; bi < total && !result.empty; ++bi) {
    auto choice = jd.choices(bi);
    LinearSystem sys = jd.system(choice);
    if (!is_feasible(sys)) continue;  // no model in this region: no constraint on r
    const LinearForm& cb = jd.parts[c_part][choice[c_part]].value;
    const LinearForm& db = jd.parts[d_part][choice[d_part]].value;

    // Farkas-dualized membership: r is good iff nonnegative multipliers q
    // over the system rows reproduce the vector of c + r*d with affine
    // slack. Variables are [q_1..q_m, r].
    std::size_t m = sys.hypotheses.size();
    std::size_t rv = m;
    std::vector<FmRow> rows;
    auto blank = [&] {
      FmRow row;
      row.c.assign(m + 1, Rat(0));
      return row;
    };
    for (const auto& name : letters) {
      FmRow pos = blank();
      for (std::size_t j = 0; j < m; ++j) pos.c[j] = sys.hypotheses[j].coeff(name);
      pos.c[rv] = -db.coeff(name);
      pos.aff = -cb.coeff(name);
      FmRow neg = blank();
      for (std::size_t j = 0; j <= m; ++j) neg.c[j] = -pos.c[j];
      neg.aff = -pos.aff;
      rows.push_back(std::move(pos));
      rows.push_back(std::move(neg));
    }
    {
      FmRow aff = blank();  // 0 <= c_aff + r*d_aff - sum q_j s_j
      for (std::size_t j = 0; j < m; ++j) aff.c[j] = -sys.hypotheses[j].affine;
      aff.c[rv] = db.affine;
      aff.aff = cb.affine;
      rows.push_back(std::move(aff));
    }
    for (std::size_t j = 0; j < m; ++j) {
      FmRow nn = blank();
      nn.c[j] = Rat(1);
      rows.push_back(std::move(nn));
    }

    std::vector<std::size_t> eliminate(m);
    for (std::size_t j = 0; j < m; ++j) eliminate[j] = j;
    auto surviving = fm_project(std::move(rows), eliminate);
    result = intersect(result, interval_from_rows(surviving, rv));
  }
  return result;
}

std::optional<Rat> bound_by_unit(const Theory& t, const Formula& phi, const Formula& xi,
                                 Mode mode) {
  // { r : T |= phi <= r*xi } = { r : T |= 0 <= (-phi) + r*xi }.
  QInterval good = parametric_interval(t, sugar::neg(phi), xi, mode);
  QInterval nonneg;
  nonneg.lo = Rat(0);
  good = intersect(good, nonneg);
  if (good.empty) return std::nullopt;
  if (good.lo && !good.lo_strict) return *good.lo;
  if (good.lo && good.hi) return (*good.lo + *good.hi) / Rat(2);
  if (good.lo) return *good.lo + Rat(1);
  return Rat(0);
}

ArchimedeanReport archimedean_pair(const Theory& t, const Formula& phi, const Formula& psi,
                                   Mode mode) {
  // { r : T |= r*phi <= psi } = { r : T |= 0 <= psi + r*(-phi) }.
  QInterval good = parametric_interval(t, psi, sugar::neg(phi), mode);
  ArchimedeanReport report;
  report.r_zero_instance = good.contains(Rat(0));
  report.forall_r = !good.empty && !good.hi && report.r_zero_instance;
  report.neg_phi =
      decide(t, Inequality{Formula::zero(), sugar::neg(phi)}, mode).kind == Verdict::Kind::entails;
  return report;
}

}  // namespace rvl
