#include "rvl/linear.hpp"

namespace rvl {

namespace {

void accumulate(const Formula& f, const Rat& factor, LinearForm& out) {
  if (factor.is_zero()) return;
  switch (f.kind()) {
    case Formula::Kind::zero:
      return;
    case Formula::Kind::one:
      out.affine += factor;
      return;
    case Formula::Kind::letter: {
      auto [it, inserted] = out.coeffs.emplace(f.name(), factor);
      if (!inserted) {
        it->second += factor;
        if (it->second.is_zero()) out.coeffs.erase(it);
      } else if (it->second.is_zero()) {
        out.coeffs.erase(it);
      }
      return;
    }
    case Formula::Kind::add:
      accumulate(f.left(), factor, out);
      accumulate(f.right(), factor, out);
      return;
    case Formula::Kind::meet:
      throw NotLinearError("formula contains a meet node");
    case Formula::Kind::scale:
      accumulate(f.inner(), factor * f.scalar(), out);
      return;
  }
}

}  // namespace

LinearForm linearize(const Formula& f) {
  // A meet under a zero scale still makes the formula non-linear; check
  // before accumulating (accumulate prunes zero factors).
  if (meet_count(f) != 0) throw NotLinearError("formula contains a meet node");
  LinearForm out;
  accumulate(f, Rat(1), out);
  return out;
}

LinearForm lf_add(const LinearForm& a, const LinearForm& b) {
  LinearForm out = a;
  out.affine += b.affine;
  for (const auto& [name, q] : b.coeffs) {
    auto [it, inserted] = out.coeffs.emplace(name, q);
    if (!inserted) {
      it->second += q;
      if (it->second.is_zero()) out.coeffs.erase(it);
    }
  }
  return out;
}

LinearForm lf_sub(const LinearForm& a, const LinearForm& b) { return lf_add(a, lf_neg(b)); }

LinearForm lf_scale(const Rat& q, const LinearForm& a) {
  LinearForm out;
  if (q.is_zero()) return out;
  out.affine = q * a.affine;
  for (const auto& [name, c] : a.coeffs) out.coeffs.emplace(name, q * c);
  return out;
}

LinearForm lf_neg(const LinearForm& a) { return lf_scale(Rat(-1), a); }

Rat lf_eval(const LinearForm& a, const std::map<std::string, Rat>& assignment) {
  Rat v = a.affine;
  for (const auto& [name, c] : a.coeffs) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw std::invalid_argument("lf_eval: unassigned letter '" + name + "'");
    v += c * it->second;
  }
  return v;
}

Formula lf_to_formula(const LinearForm& a, const std::vector<std::string>& letter_order) {
  std::size_t seen = 0;
  Formula sum;
  bool have = false;
  for (const auto& name : letter_order) {
    auto it = a.coeffs.find(name);
    if (it == a.coeffs.end()) continue;
    ++seen;
    Formula term = it->second == Rat(1) ? Formula::letter(name)
                                        : Formula::scale(it->second, Formula::letter(name));
    sum = have ? Formula::add(std::move(sum), std::move(term)) : std::move(term);
    have = true;
  }
  if (seen != a.coeffs.size())
    throw std::invalid_argument("lf_to_formula: letter_order misses a letter of the form");
  if (!a.affine.is_zero()) {
    Formula c = Formula::scale(a.affine, Formula::one());
    sum = have ? Formula::add(std::move(sum), std::move(c)) : std::move(c);
    have = true;
  }
  if (!have) return Formula::zero();
  return sum;
}

Formula lf_to_formula(const LinearForm& a) {
  std::vector<std::string> order;
  order.reserve(a.coeffs.size());
  for (const auto& [name, q] : a.coeffs) order.push_back(name);
  return lf_to_formula(a, order);
}

}  // namespace rvl
