#include "wm/expr.hpp"

#include <cctype>

#include "wm/lengths.hpp"

namespace wm {

namespace {

struct Atom {
  bool is_gen = false;
  int gen = -1;       // 0-based
  Subset theta = 0;   // for e(...) atoms
};

[[noreturn]] void parse_fail(const std::string& what, size_t pos) {
  fail(Errc::ParseError, what + " at position " + std::to_string(pos));
}

std::vector<Atom> tokenize(const WeylGroup& w, const std::string& text) {
  std::vector<Atom> atoms;
  size_t pos = 0;
  const size_t n = text.size();
  auto skip_ws = [&] {
    while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    size_t start = pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || pos - start > 9) parse_fail("expected an index", start);
    int v = std::stoi(text.substr(start, pos - start));
    if (v < 1 || v > w.rank())
      parse_fail("index " + std::to_string(v) + " out of range", start);
    return v - 1;
  };
  skip_ws();
  while (pos < n) {
    if (text[pos] == 's') {
      ++pos;
      Atom a;
      a.is_gen = true;
      a.gen = read_int();
      atoms.push_back(a);
    } else if (text[pos] == 'e') {
      ++pos;
      if (pos >= n || text[pos] != '(') parse_fail("expected '(' after 'e'", pos);
      ++pos;
      Atom a;
      skip_ws();
      if (pos < n && text[pos] == ')') {
        ++pos;
      } else {
        for (;;) {
          skip_ws();
          a.theta |= subset_bit(read_int());
          skip_ws();
          if (pos < n && text[pos] == ',') { ++pos; continue; }
          if (pos < n && text[pos] == ')') { ++pos; break; }
          parse_fail("expected ',' or ')'", pos);
        }
      }
      atoms.push_back(a);
    } else {
      parse_fail(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    skip_ws();
  }
  if (atoms.empty()) parse_fail("empty expression", 0);
  return atoms;
}

}  // namespace

EvalResult eval_expr(const WeylGroup& w, const std::string& text,
                     const FaceBudget& budget) {
  EvalResult out{unit_element(w, w.identity()), true};
  for (const Atom& a : tokenize(w, text)) {
    MonoidElem factor = a.is_gen ? unit_element(w, w.simple(a.gen))
                                 : idempotent_element(w, a.theta);
    MulResult r = multiply(w, out.elem, factor, budget);
    out.elem = std::move(r.elem);
    out.exact = out.exact && r.exact;
  }
  return out;
}

WeylElem eval_weyl_expr(const WeylGroup& w, const std::string& text) {
  std::vector<int> word;
  for (const Atom& a : tokenize(w, text)) {
    if (!a.is_gen)
      fail(Errc::ParseError, "e(...) atom in a Weyl group expression");
    word.push_back(a.gen);
  }
  return w.from_word(word);
}

std::string weyl_expr(const WeylElem& u) {
  if (u.is_identity()) return "e()";
  std::string out;
  for (int letter : u.word()) {
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(letter + 1);
  }
  return out;
}

namespace {

std::string theta_atom(Subset theta) {
  std::string out = "e(";
  bool first = true;
  for (int i : subset_members(theta)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  out += ")";
  return out;
}

void append_word(std::string& out, const WeylElem& u) {
  for (int letter : u.word()) {
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(letter + 1);
  }
}

}  // namespace

std::string monoid_expr(const WeylGroup& w, const MonoidElem& m) {
  if (m.theta == 0) return weyl_expr(underlying_unit(w, m));
  std::string out;
  append_word(out, m.w1);
  append_word(out, m.w2);
  if (!out.empty()) out += " ";
  out += theta_atom(m.theta);
  append_word(out, m.w3);
  return out;
}

std::string nf3_display(const WeylGroup& w, const MonoidElem& m) {
  (void)w;
  return weyl_expr(m.w1) + " | " + weyl_expr(m.w2) + " | e(" +
         subset_str(m.theta) + ") | " + weyl_expr(m.w3);
}

std::string nf1_display(const WeylGroup& w, const MonoidElem& m) {
  auto [first, second] = nf1_parts(w, m);
  return weyl_expr(first) + " · e(" + subset_str(m.theta) + ") · " +
         weyl_expr(second);
}

std::string nf2_display(const WeylGroup& w, const MonoidElem& m) {
  auto [first, second] = nf2_parts(w, m);
  return weyl_expr(first) + " · e(" + subset_str(m.theta) + ") · " +
         weyl_expr(second);
}

std::string face_display(const WeylGroup& w, const Face& f) {
  (void)w;
  std::string base = "R(" + subset_str(f.theta) + ")";
  if (f.rep.is_identity()) return base;
  return weyl_expr(f.rep) + " · " + base;
}

std::string lengths_display(const LengthTriple& t) {
  return std::to_string(t.pp) + " / " + std::to_string(t.mm) + " / " +
         std::to_string(t.mp);
}

Face parse_face(const WeylGroup& w, const std::string& text) {
  size_t r = text.find("R(");
  if (r == std::string::npos)
    fail(Errc::ParseError, "face must contain R({...}) at position 0");
  size_t close = text.find(')', r);
  size_t open_brace = text.find('{', r);
  size_t close_brace = text.find('}', r);
  if (close == std::string::npos || open_brace == std::string::npos ||
      close_brace == std::string::npos || close_brace > close)
    fail(Errc::ParseError, "malformed face set at position " + std::to_string(r));
  Subset theta = 0;
  std::string inner = text.substr(open_brace + 1, close_brace - open_brace - 1);
  size_t p = 0;
  while (p < inner.size()) {
    while (p < inner.size() &&
           (inner[p] == ',' || std::isspace(static_cast<unsigned char>(inner[p]))))
      ++p;
    if (p >= inner.size()) break;
    size_t start = p;
    while (p < inner.size() && std::isdigit(static_cast<unsigned char>(inner[p])))
      ++p;
    if (p == start || p - start > 9)
      fail(Errc::ParseError, "malformed face index");
    int v = std::stoi(inner.substr(start, p - start));
    if (v < 1 || v > w.rank()) fail(Errc::ParseError, "face index out of range");
    theta |= subset_bit(v - 1);
  }
  WeylElem rep = w.identity();
  std::string head = text.substr(0, r);
  // strip a trailing separator ("." or a UTF-8 middle dot) and whitespace
  for (;;) {
    while (!head.empty() &&
           std::isspace(static_cast<unsigned char>(head.back())))
      head.pop_back();
    if (!head.empty() && head.back() == '.') { head.pop_back(); continue; }
    if (head.size() >= 2 && static_cast<unsigned char>(head.back()) == 0xB7 &&
        static_cast<unsigned char>(head[head.size() - 2]) == 0xC2) {
      head.erase(head.size() - 2);
      continue;
    }
    break;
  }
  if (!head.empty()) rep = eval_weyl_expr(w, head);
  if (!w.gcm().is_special(theta))
    fail(Errc::NotSpecial, "subset " + subset_str(theta) + " is not special");
  Face f;
  f.theta = theta;
  f.rep = w.coset_min(rep, theta | w.gcm().theta_perp(theta), GenSide::Right);
  return f;
}

ConePoint parse_point(const WeylGroup& w, const std::string& text) {
  ConePoint p;
  size_t pos = 0;
  const size_t n = text.size();
  while (pos < n) {
    size_t start = pos;
    while (pos < n && text[pos] != ',') ++pos;
    std::string item = text.substr(start, pos - start);
    size_t slash = item.find('/');
    try {
      if (slash == std::string::npos) {
        p.values.push_back(Rat(std::stoll(item)));
      } else {
        p.values.push_back(Rat(std::stoll(item.substr(0, slash)),
                               std::stoll(item.substr(slash + 1))));
      }
    } catch (const std::exception&) {
      parse_fail("malformed rational", start);
    }
    if (pos < n) ++pos;
  }
  if (static_cast<int>(p.values.size()) != w.rank())
    fail(Errc::ParseError, "point has " + std::to_string(p.values.size()) +
                               " coordinates, expected " +
                               std::to_string(w.rank()));
  return p;
}

}  // namespace wm
