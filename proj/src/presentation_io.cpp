#include "algebroid/presentation_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace algd {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

struct Section {
  std::vector<std::pair<std::string, std::string>> lines;
  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : lines)
      if (k == key) return &v;
    return nullptr;
  }
};

AlgebraPtr algebra_from_section(const Section& sec, const std::string& fallback_name) {
  std::string name = fallback_name;
  if (const std::string* n = sec.find("name")) name = *n;
  std::vector<std::string> vars;
  if (const std::string* v = sec.find("vars")) vars = split_commas(*v);
  std::vector<std::pair<std::string, std::string>> inv;
  if (const std::string* p = sec.find("inverse_pairs")) {
    for (const std::string& pair : split_commas(*p)) {
      size_t colon = pair.find(':');
      if (colon == std::string::npos)
        throw algebra_error("inverse_pairs entries look like v:vinv");
      inv.emplace_back(trim(pair.substr(0, colon)), trim(pair.substr(colon + 1)));
    }
  }
  std::vector<std::string> rels;
  if (const std::string* r = sec.find("relations")) rels = split_commas(*r);
  return PresentedAlgebra::make_parsed(name, vars, inv, rels);
}

}  // namespace

TensorExpr parse_tensor_expr(const std::string& text, const AlgebraPtr& total) {
  // split into signed top-level summands, then each at its (x) token
  struct Chunk {
    std::string text;
    bool negative;
  };
  std::vector<Chunk> chunks;
  std::string cur;
  bool neg = false;
  int depth = 0;
  size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, 3, "(x)") == 0) {
      cur += "\x01";  // placeholder for the tensor sign
      i += 3;
      continue;
    }
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (!trim(cur).empty()) chunks.push_back({cur, neg});
      cur.clear();
      neg = (c == '-');
      ++i;
      continue;
    }
    cur += c;
    ++i;
  }
  if (!trim(cur).empty()) chunks.push_back({cur, neg});

  TensorExpr out;
  for (const Chunk& ch : chunks) {
    size_t mark = ch.text.find('\x01');
    if (mark == std::string::npos)
      throw algebra_error("tensor expression summand lacks the (x) token: " + ch.text);
    if (ch.text.find('\x01', mark + 1) != std::string::npos)
      throw algebra_error("tensor expression summand has two (x) tokens: " + ch.text);
    RingElement left = parse_element(trim(ch.text.substr(0, mark)), total);
    RingElement right = parse_element(trim(ch.text.substr(mark + 1)), total);
    if (ch.negative) left = -left;
    out.emplace_back(left, right);
  }
  return out;
}

HopfPtr read_presentation(const std::string& text) {
  std::map<std::string, Section> sections;
  std::string current;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      current = t.substr(1, t.size() - 2);
      sections[current];
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos || current.empty())
      throw algebra_error("presentation line is not `name = expr`: " + t);
    sections[current].lines.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  for (const char* required : {"base", "total", "source", "target", "counit", "coproduct"})
    if (!sections.count(required))
      throw algebra_error(std::string("presentation misses section [") + required + "]");

  AlgebraPtr base = algebra_from_section(sections["base"], "A");
  AlgebraPtr total = algebra_from_section(sections["total"], "H");

  auto images_over = [&](const Section& sec, const AlgebraPtr& dom,
                         const AlgebraPtr& cod, const std::string& what) {
    std::vector<RingElement> images(dom->nvars(), RingElement());
    std::vector<bool> seen(dom->nvars(), false);
    for (const auto& [k, v] : sec.lines) {
      int idx = dom->var_index(k);
      if (idx < 0) throw algebra_error(what + ": unknown generator " + k);
      images[idx] = parse_element(v, cod);
      seen[idx] = true;
    }
    for (int i = 0; i < dom->nvars(); ++i)
      if (!seen[i]) throw algebra_error(what + ": no image for " + dom->vars()[i]);
    return images;
  };

  std::vector<RingElement> s_imgs = images_over(sections["source"], base, total, "[source]");
  std::vector<RingElement> t_imgs = images_over(sections["target"], base, total, "[target]");
  std::vector<RingElement> eps = images_over(sections["counit"], total, base, "[counit]");

  std::vector<TensorExpr> cop(total->nvars());
  {
    std::vector<bool> seen(total->nvars(), false);
    for (const auto& [k, v] : sections["coproduct"].lines) {
      int idx = total->var_index(k);
      if (idx < 0) throw algebra_error("[coproduct]: unknown generator " + k);
      cop[idx] = parse_tensor_expr(v, total);
      seen[idx] = true;
    }
    for (int i = 0; i < total->nvars(); ++i)
      if (!seen[i])
        throw algebra_error("[coproduct]: no image for " + total->vars()[i]);
  }
  std::optional<std::vector<RingElement>> antipode;
  if (sections.count("antipode"))
    antipode = images_over(sections["antipode"], total, total, "[antipode]");

  std::string name = "presentation";
  if (const std::string* n = sections["total"].find("name")) name = *n;
  return build_hopf_algebroid(name, base, total, std::move(s_imgs), std::move(t_imgs),
                              std::move(eps), std::move(cop), std::move(antipode));
}

HopfPtr read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw algebra_error("cannot open presentation file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return read_presentation(os.str());
}

std::string write_presentation(const HopfPtr& H) {
  std::ostringstream os;
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ", ";
      s += x;
    }
    return s;
  };
  auto algebra_section = [&](const char* title, const AlgebraPtr& A) {
    os << "[" << title << "]\n";
    os << "name = " << A->name() << "\n";
    if (A->nvars()) os << "vars = " << join(A->vars()) << "\n";
    std::vector<std::string> inv;
    for (auto [a, b] : A->inverse_pairs())
      inv.push_back(A->vars()[a] + ":" + A->vars()[b]);
    if (!inv.empty()) os << "inverse_pairs = " << join(inv) << "\n";
    std::vector<std::string> rels;
    for (const Poly& r : A->relations()) {
      // inverse-pair relations are implied
      bool implied = false;
      for (auto [a, b] : A->inverse_pairs()) {
        Poly rel = Poly::variable(A->nvars(), a) * Poly::variable(A->nvars(), b) -
                   Poly::constant(A->nvars(), Rational(1));
        if (r == rel) implied = true;
      }
      if (!implied) rels.push_back(poly_to_string(r, A->vars()));
    }
    if (!rels.empty()) os << "relations = " << join(rels) << "\n";
  };
  algebra_section("base", H->base);
  algebra_section("total", H->total);
  os << "[source]\n";
  for (int a = 0; a < H->base->nvars(); ++a)
    os << H->base->vars()[a] << " = " << H->src.images()[a].str() << "\n";
  os << "[target]\n";
  for (int a = 0; a < H->base->nvars(); ++a)
    os << H->base->vars()[a] << " = " << H->tgt.images()[a].str() << "\n";
  os << "[counit]\n";
  for (int v = 0; v < H->total->nvars(); ++v)
    os << H->total->vars()[v] << " = " << H->counit.images()[v].str() << "\n";
  os << "[coproduct]\n";
  for (int v = 0; v < H->total->nvars(); ++v)
    os << H->total->vars()[v] << " = " << H->tensor().str(H->delta_var(v)) << "\n";
  if (H->antipode) {
    os << "[antipode]\n";
    for (int v = 0; v < H->total->nvars(); ++v)
      os << H->total->vars()[v] << " = " << H->antipode->images()[v].str() << "\n";
  }
  return os.str();
}

std::string axiom_report_to_json(const AxiomReport& rep, const std::string& subject) {
  nlohmann::json j;
  j["subject"] = subject;
  j["all_pass"] = rep.all_pass();
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks)
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"counterexample", c.counterexample}});
  j["checks"] = checks;
  return j.dump(2);
}

}  // namespace algd
