#include <sstream>

#include "rvl/proofs.hpp"

namespace rvl {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError(ParseError::Kind::syntax, SourceSpan{line, 1, 1}, msg);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::size_t parse_index(const std::string& s, int line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(line, "expected a step number, got '" + s + "'");
  return static_cast<std::size_t>(std::stoull(s));
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Substitution parse_bindings(const std::string& body, Mode mode, int line) {
  Substitution subst;
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto semi = body.find(';', pos);
    std::string entry =
        trim(semi == std::string::npos ? body.substr(pos) : body.substr(pos, semi - pos));
    pos = semi == std::string::npos ? body.size() : semi + 1;
    if (entry.empty()) continue;
    auto arrow = entry.find(":=");
    if (arrow == std::string::npos) fail(line, "expected 'name := value' in substitution");
    std::string key = trim(entry.substr(0, arrow));
    std::string value = trim(entry.substr(arrow + 2));
    if (key == "r" || key == "s") {
      if (!subst.scalars.emplace(key, parse_rational(value)).second)
        fail(line, "duplicate binding '" + key + "'");
    } else if (key == "phi" || key == "psi" || key == "xi" || key == "P") {
      if (!subst.formulas.emplace(key, parse_formula(value, mode)).second)
        fail(line, "duplicate binding '" + key + "'");
    } else {
      fail(line, "unknown metavariable '" + key + "'");
    }
  }
  return subst;
}

}  // namespace

Derivation parse_proof_file(const std::string& text) {
  Derivation d;
  bool have_mode = false, have_fragment = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::size_t next_step = 1;

  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto hash = raw.find('#');
    std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;

    if (body.rfind("mode", 0) == 0 && (body.size() == 4 || body[4] == ' ')) {
      std::string m = trim(body.substr(4));
      if (m == "basic")
        d.mode = Mode::basic;
      else if (m == "extended")
        d.mode = Mode::extended;
      else
        fail(line, "mode must be 'basic' or 'extended'");
      have_mode = true;
      continue;
    }
    if (body.rfind("fragment", 0) == 0) {
      std::string f = trim(body.substr(8));
      if (f == "mp")
        d.fragment = Fragment::mp;
      else if (f == "lin")
        d.fragment = Fragment::lin;
      else if (f == "full")
        d.fragment = Fragment::full;
      else
        fail(line, "fragment must be mp, lin or full");
      have_fragment = true;
      continue;
    }
    if (!have_mode || !have_fragment)
      fail(line, "mode and fragment lines must precede hypotheses and steps");

    if (body.rfind("hyp", 0) == 0 && body.find("==>") == std::string::npos) {
      if (!d.steps.empty()) fail(line, "hypotheses must precede proof steps");
      auto colon = body.find(':');
      if (colon == std::string::npos) fail(line, "expected 'hyp <k>: <inequality>'");
      std::size_t k = parse_index(trim(body.substr(3, colon - 3)), line);
      if (k != d.theory.size() + 1) fail(line, "hypothesis numbers must ascend from 1");
      d.theory.push_back(parse_inequality(body.substr(colon + 1), d.mode));
      continue;
    }

    auto colon = body.find(':');
    if (colon == std::string::npos) fail(line, "expected '<n>: <rule> ==> <inequality>'");
    std::size_t n = parse_index(trim(body.substr(0, colon)), line);
    if (n != next_step) fail(line, "step numbers must ascend from 1");
    ++next_step;

    std::string rest = body.substr(colon + 1);
    auto arrow = rest.find("==>");
    if (arrow == std::string::npos) fail(line, "missing '==>' before the conclusion");
    std::string head = trim(rest.substr(0, arrow));
    Inequality conclusion = parse_inequality(rest.substr(arrow + 3), d.mode);

    ProofStep step{HypStep{0}, std::move(conclusion)};
    if (head.rfind("hyp", 0) == 0) {
      std::size_t k = parse_index(trim(head.substr(3)), line);
      if (k == 0 || k > d.theory.size()) fail(line, "hypothesis reference out of range");
      step.rule = HypStep{k - 1};
    } else if (head.rfind("axiom", 0) == 0) {
      std::string spec = trim(head.substr(5));
      auto bracket = spec.find('[');
      std::string name_part = trim(bracket == std::string::npos ? spec : spec.substr(0, bracket));
      std::string bindings;
      if (bracket != std::string::npos) {
        auto close = spec.rfind(']');
        if (close == std::string::npos || close < bracket) fail(line, "unterminated '['");
        bindings = spec.substr(bracket + 1, close - bracket - 1);
      }
      auto dot = name_part.find('.');
      if (dot == std::string::npos) fail(line, "expected axiom id '<name>.<le|ge>'");
      auto name = parse_axiom_name(name_part.substr(0, dot));
      if (!name) fail(line, "unknown axiom '" + name_part.substr(0, dot) + "'");
      std::string dir = name_part.substr(dot + 1);
      if (dir != "le" && dir != "ge") fail(line, "axiom direction must be le or ge");
      AxiomStep ax{AxiomId{*name, dir == "le" ? AxiomDir::le : AxiomDir::ge},
                   parse_bindings(bindings, d.mode, line)};
      step.rule = std::move(ax);
    } else if (head.rfind("r1", 0) == 0) {
      auto words = split_words(head.substr(2));
      if (words.size() != 2) fail(line, "expected 'r1 <i> <j>'");
      std::size_t i = parse_index(words[0], line), j = parse_index(words[1], line);
      if (i == 0 || j == 0 || i >= n || j >= n) fail(line, "r1 references must be earlier steps");
      step.rule = R1Step{i - 1, j - 1};
    } else if (head.rfind("r2", 0) == 0) {
      std::string args = trim(head.substr(2));
      auto rpos = args.find("r=");
      auto xipos = args.find("xi=");
      if (rpos == std::string::npos || xipos == std::string::npos || xipos < rpos)
        fail(line, "expected 'r2 <i> r=<rational> xi=<formula>'");
      std::size_t i = parse_index(trim(args.substr(0, rpos)), line);
      if (i == 0 || i >= n) fail(line, "r2 reference must be an earlier step");
      Rat r = parse_rational(trim(args.substr(rpos + 2, xipos - rpos - 2)));
      Formula xi = parse_formula(args.substr(xipos + 3), d.mode);
      step.rule = R2Step{i - 1, std::move(r), std::move(xi)};
    } else if (head.rfind("r3", 0) == 0) {
      std::size_t i = parse_index(trim(head.substr(2)), line);
      if (i == 0 || i >= n) fail(line, "r3 reference must be an earlier step");
      step.rule = R3Step{i - 1};
    } else {
      fail(line, "unknown step form '" + head + "'");
    }
    d.steps.push_back(std::move(step));
  }
  if (!have_mode || !have_fragment) fail(line, "proof file misses mode or fragment line");
  if (d.steps.empty()) fail(line, "proof file has no steps");
  return d;
}

std::string print_proof_file(const Derivation& d) {
  std::ostringstream out;
  out << "mode " << (d.mode == Mode::extended ? "extended" : "basic") << "\n";
  out << "fragment " << fragment_str(d.fragment) << "\n";
  for (std::size_t i = 0; i < d.theory.size(); ++i)
    out << "hyp " << (i + 1) << ": " << print_inequality(d.theory[i]) << "\n";
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const ProofStep& s = d.steps[i];
    out << (i + 1) << ": ";
    if (std::holds_alternative<HypStep>(s.rule)) {
      out << "hyp " << (std::get<HypStep>(s.rule).index + 1);
    } else if (std::holds_alternative<AxiomStep>(s.rule)) {
      const auto& a = std::get<AxiomStep>(s.rule);
      out << "axiom " << axiom_id_str(a.id) << " [";
      bool first = true;
      for (const auto& [k, f] : a.subst.formulas) {
        if (!first) out << "; ";
        out << k << " := " << print_formula(f);
        first = false;
      }
      for (const auto& [k, q] : a.subst.scalars) {
        if (!first) out << "; ";
        out << k << " := " << q.str();
        first = false;
      }
      out << "]";
    } else if (std::holds_alternative<R1Step>(s.rule)) {
      const auto& r = std::get<R1Step>(s.rule);
      out << "r1 " << (r.i + 1) << " " << (r.j + 1);
    } else if (std::holds_alternative<R2Step>(s.rule)) {
      const auto& r = std::get<R2Step>(s.rule);
      out << "r2 " << (r.i + 1) << " r=" << r.r.str() << " xi=" << print_formula(r.xi);
    } else {
      out << "r3 " << (std::get<R3Step>(s.rule).i + 1);
    }
    out << " ==> " << print_inequality(s.conclusion) << "\n";
  }
  return out.str();
}

}  // namespace rvl
