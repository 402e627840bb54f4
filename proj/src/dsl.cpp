#include "hilbfock/dsl.hpp"

#include <cstring>
#include <sstream>

namespace hilbfock {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw DslParseError(std::string("expected '") + c + "'", pos);
  }
  bool accept_word(const char* w) {
    skip_ws();
    size_t n = strlen(w);
    if (s.compare(pos, n, w) == 0) {
      // a word must not continue alphanumerically
      if (pos + n < s.size() && isalnum((unsigned char)s[pos + n]) && isalpha((unsigned char)w[n - 1]))
        return false;
      pos += n;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start || (pos == start + 1 && !isdigit((unsigned char)s[start])))
      throw DslParseError("expected an integer", start);
    return std::stoll(s.substr(start, pos - start));
  }
  Rat rational() {
    long long n = integer();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      long long den = integer();
      return Rat(n, den);
    }
    return Rat(n);
  }
  bool at_rational() {
    skip_ws();
    if (pos >= s.size()) return false;
    if (isdigit((unsigned char)s[pos])) return true;
    if (s[pos] == '-' && pos + 1 < s.size() && isdigit((unsigned char)s[pos + 1])) return true;
    return false;
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (isalnum((unsigned char)s[pos]))) ++pos;
    if (pos == start) throw DslParseError("expected a name", start);
    return s.substr(start, pos - start);
  }
};

SurfClass parse_class(Lexer& lx, const SurfaceDatum& d, char stop) {
  SurfClass acc = d.zero_class();
  Rat sign(1);
  bool first = true;
  while (true) {
    lx.skip_ws();
    if (lx.peek() == stop) break;
    if (!first) {
      if (lx.accept('+'))
        sign = Rat(1);
      else if (lx.accept('-'))
        sign = Rat(-1);
      else
        break;
    }
    first = false;
    Rat coeff = sign;
    if (lx.at_rational()) {
      Rat r = lx.rational();
      lx.skip_ws();
      bool followed = lx.pos < lx.s.size() && (isalpha((unsigned char)lx.s[lx.pos]));
      if (!followed) {
        // a bare rational is a multiple of the unit class
        acc[0] += coeff * r;
        continue;
      }
      coeff = coeff * r;
    }
    std::string name = lx.word();
    SurfClass val;
    if (name == "e")
      val = d.e_class();
    else if (name == "t")
      val = d.t_class();
    else {
      int idx = d.basis_index(name);
      if (idx < 0) throw DslParseError("unknown class symbol '" + name + "'", lx.pos);
      val = d.basis_class(idx);
    }
    for (int i = 0; i < d.dim; ++i) acc[i] += coeff * val[i];
  }
  return acc;
}

std::shared_ptr<DslNode> parse_expr(Lexer& lx, const SurfaceDatum& d);

std::shared_ptr<DslNode> parse_atom(Lexer& lx, const SurfaceDatum& d) {
  auto node = std::make_shared<DslNode>();
  lx.skip_ws();
  if (lx.accept('[')) {
    node->kind = DslNode::Com;
    node->kids.push_back(parse_expr(lx, d));
    lx.expect(',');
    node->kids.push_back(parse_expr(lx, d));
    lx.expect(']');
    return node;
  }
  std::string w = lx.word();
  lx.expect('(');
  if (w == "q") {
    node->kind = DslNode::Q;
    node->a = (int)lx.integer();
    lx.expect(',');
    node->cls = parse_class(lx, d, ')');
  } else if (w == "L") {
    node->kind = DslNode::L;
    node->a = (int)lx.integer();
  } else if (w == "Lehn") {
    node->kind = DslNode::Lehn;
    node->a = (int)lx.integer();
  } else if (w == "J") {
    node->kind = DslNode::J;
    node->a = (int)lx.integer();
    lx.expect(',');
    node->b = (int)lx.integer();
  } else if (w == "G") {
    node->kind = DslNode::G;
    node->a = (int)lx.integer();
    lx.expect(',');
    node->cls = parse_class(lx, d, ')');
  } else if (w == "D") {
    node->kind = DslNode::D;
    node->a = (int)lx.integer();
    lx.expect(',');
    node->b = (int)lx.integer();
  } else {
    throw DslParseError("unknown operator '" + w + "'", lx.pos);
  }
  lx.expect(')');
  return node;
}

std::shared_ptr<DslNode> parse_term(Lexer& lx, const SurfaceDatum& d) {
  auto node = std::make_shared<DslNode>();
  node->kind = DslNode::Prod;
  if (lx.at_rational()) node->coeff = lx.rational();
  while (true) {
    lx.skip_ws();
    char c = lx.peek();
    if (c != '[' && !isalpha((unsigned char)c)) break;
    auto atom = parse_atom(lx, d);
    int power = 1;
    if (lx.accept('^')) power = (int)lx.integer();
    if (power < 0) throw DslParseError("negative powers are not operators", lx.pos);
    for (int i = 0; i < power; ++i) node->kids.push_back(atom);
  }
  if (node->kids.empty()) throw DslParseError("empty operator term", lx.pos);
  return node;
}

std::shared_ptr<DslNode> parse_expr(Lexer& lx, const SurfaceDatum& d) {
  auto node = std::make_shared<DslNode>();
  node->kind = DslNode::Sum;
  bool negate = lx.accept('-');
  auto first = parse_term(lx, d);
  if (negate) first->coeff = -first->coeff;
  node->kids.push_back(first);
  while (true) {
    lx.skip_ws();
    if (lx.accept('+'))
      negate = false;
    else if (lx.accept('-'))
      negate = true;
    else
      break;
    auto term = parse_term(lx, d);
    if (negate) term->coeff = -term->coeff;
    node->kids.push_back(term);
  }
  return node;
}

}  // namespace

std::shared_ptr<DslNode> parse_operator_dsl(const std::string& text, const SurfaceDatum& d) {
  Lexer lx{text};
  auto node = parse_expr(lx, d);
  if (!lx.eof()) throw DslParseError("trailing input", lx.pos);
  // arity check
  dsl_free_legs(*node);
  return node;
}

int dsl_free_legs(const DslNode& n) {
  switch (n.kind) {
    case DslNode::Q:
    case DslNode::L:
    case DslNode::G:
    case DslNode::D:
      return 0;
    case DslNode::Lehn:
    case DslNode::J:
      return 1;
    case DslNode::Prod: {
      int legs = 0;
      for (auto& k : n.kids) legs += dsl_free_legs(*k);
      return legs;
    }
    case DslNode::Com:
      return dsl_free_legs(*n.kids[0]) + dsl_free_legs(*n.kids[1]);
    case DslNode::Sum: {
      int legs = dsl_free_legs(*n.kids[0]);
      for (auto& k : n.kids)
        if (dsl_free_legs(*k) != legs)
          throw std::invalid_argument("sum of operators with different free-leg counts");
      return legs;
    }
  }
  return 0;
}

namespace {

int rad_max_weight(const RadVector& w) {
  int mw = 0;
  for (auto& [r, v] : w.comps) mw = std::max(mw, v.max_weight());
  return mw;
}

RadVector rad_apply_rational(const OperatorExpr& e, const RadVector& w, int in_free,
                             const SurfaceDatum& d) {
  RadVector out;
  for (auto& [r, v] : w.comps) out.add(r, apply_expr(e, v, d, in_free), Rat(1));
  return out;
}

RadVector rad_relabel(const RadVector& w, const std::vector<int>& perm) {
  RadVector out;
  for (auto& [r, v] : w.comps) out.add(r, relabel_free(v, perm), Rat(1));
  return out;
}

RadVector eval_node(const DslNode& n, const RadVector& w, int in_free, const SurfaceDatum& d) {
  int window = rad_max_weight(w);
  switch (n.kind) {
    case DslNode::Q:
      return rad_apply_rational(expr_q(n.a, n.cls, d), w, in_free, d);
    case DslNode::L:
      return rad_apply_rational(op_vir(n.a, window, d), w, in_free, d);
    case DslNode::Lehn:
      return rad_apply_rational(op_lehn(n.a, window, d), w, in_free, d);
    case DslNode::J:
      return rad_apply_rational(op_J(n.a, n.b, window, d), w, in_free, d);
    case DslNode::G: {
      OperatorExpr g = with_class(op_G(n.a, window, d), one_leg(n.cls, d), d);
      return rad_apply_rational(g, w, in_free, d);
    }
    case DslNode::D: {
      RadOp op = D_operator(n.a, n.b, d);
      RadVector out;
      for (auto& [r1, e] : op.comps)
        for (auto& [r2, v] : w.comps) {
          long long g = std::gcd(r1, r2);
          out.add((r1 / g) * (r2 / g), apply_expr(e, v, d, in_free), Rat(g));
        }
      return out;
    }
    case DslNode::Prod: {
      RadVector cur = w;
      int legs = in_free;
      for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it) {
        cur = eval_node(**it, cur, legs, d);
        legs += dsl_free_legs(**it);
      }
      for (auto& [r, v] : cur.comps) v *= n.coeff;
      // drop empties after scaling
      RadVector out;
      for (auto& [r, v] : cur.comps) out.add(r, v, Rat(1));
      return out;
    }
    case DslNode::Com: {
      const DslNode &A = *n.kids[0], &B = *n.kids[1];
      int am = dsl_free_legs(A), bm = dsl_free_legs(B);
      RadVector ab = eval_node(A, eval_node(B, w, in_free, d), in_free + bm, d);
      if (am + bm > 0) {
        std::vector<int> perm(in_free + am + bm);
        for (int f = 0; f < in_free; ++f) perm[f] = f;
        for (int f = 0; f < bm; ++f) perm[in_free + f] = in_free + am + f;
        for (int f = 0; f < am; ++f) perm[in_free + bm + f] = in_free + f;
        ab = rad_relabel(ab, perm);
      }
      RadVector ba = eval_node(B, eval_node(A, w, in_free, d), in_free + am, d);
      for (auto& [r, v] : ba.comps) ab.add(r, v, Rat(-1));
      return ab;
    }
    case DslNode::Sum: {
      RadVector out;
      for (auto& k : n.kids) {
        RadVector t = eval_node(*k, w, in_free, d);
        for (auto& [r, v] : t.comps) out.add(r, v, Rat(1));
      }
      return out;
    }
  }
  return {};
}

}  // namespace

RadVector dsl_eval(const DslNode& n, const RadVector& w, const SurfaceDatum& d) {
  return eval_node(n, w, 0, d);
}

namespace {

// grammar-faithful class rendering: coefficients juxtapose symbols
std::string class_dsl_str(const SurfClass& cls, const SurfaceDatum& d) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < d.dim; ++i) {
    if (cls[i].is_zero()) continue;
    os << (first ? "" : " + ");
    first = false;
    if (i == 0)
      os << cls[i].str();
    else if (cls[i] == Rat(1))
      os << d.basis_name(i);
    else
      os << cls[i].str() << d.basis_name(i);
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string print_operator_dsl(const DslNode& n, const SurfaceDatum& d) {
  std::ostringstream os;
  switch (n.kind) {
    case DslNode::Sum: {
      for (size_t i = 0; i < n.kids.size(); ++i) {
        if (i) os << " + ";
        os << print_operator_dsl(*n.kids[i], d);
      }
      break;
    }
    case DslNode::Prod: {
      bool first = true;
      if (n.coeff != Rat(1)) {
        os << n.coeff.str();
        first = false;
      }
      for (auto& k : n.kids) {
        if (!first) os << " ";
        first = false;
        os << print_operator_dsl(*k, d);
      }
      break;
    }
    case DslNode::Com:
      os << "[" << print_operator_dsl(*n.kids[0], d) << ", " << print_operator_dsl(*n.kids[1], d)
         << "]";
      break;
    case DslNode::Q:
      os << "q(" << n.a << "," << class_dsl_str(n.cls, d) << ")";
      break;
    case DslNode::L:
      os << "L(" << n.a << ")";
      break;
    case DslNode::Lehn:
      os << "Lehn(" << n.a << ")";
      break;
    case DslNode::J:
      os << "J(" << n.a << "," << n.b << ")";
      break;
    case DslNode::G:
      os << "G(" << n.a << "," << class_dsl_str(n.cls, d) << ")";
      break;
    case DslNode::D:
      os << "D(" << n.a << "," << n.b << ")";
      break;
  }
  return os.str();
}

FockVector parse_vector_dsl(const std::string& text, const SurfaceDatum& d) {
  Lexer lx{text};
  FockVector out;
  bool first = true;
  while (!lx.eof()) {
    Rat sign(1);
    if (!first) {
      if (lx.accept('+'))
        sign = Rat(1);
      else if (lx.accept('-'))
        sign = Rat(-1);
      else
        throw DslParseError("expected '+' or '-' between vector terms", lx.pos);
    } else if (lx.accept('-')) {
      sign = Rat(-1);
    }
    first = false;
    Rat coeff = sign;
    if (lx.at_rational()) coeff = coeff * lx.rational();
    std::vector<std::pair<int, int>> creations;
    std::vector<std::pair<int, int>> pairs;
    while (true) {
      lx.skip_ws();
      if (lx.accept_word("v")) break;
      if (lx.accept_word("qq")) {
        lx.expect('(');
        int m = (int)lx.integer();
        lx.expect(',');
        int nn = (int)lx.integer();
        lx.expect(';');
        if (!lx.accept_word("tr")) throw DslParseError("expected 'tr'", lx.pos);
        lx.expect(')');
        int power = 1;
        if (lx.accept('^')) power = (int)lx.integer();
        for (int i = 0; i < power; ++i) pairs.emplace_back(m, nn);
      } else if (lx.accept_word("q")) {
        lx.expect('(');
        int m = (int)lx.integer();
        lx.expect(',');
        std::string name = lx.word();
        int idx = d.basis_index(name);
        if (idx < 0) throw DslParseError("unknown basis symbol '" + name + "'", lx.pos);
        lx.expect(')');
        int power = 1;
        if (lx.accept('^')) power = (int)lx.integer();
        for (int i = 0; i < power; ++i) creations.emplace_back(m, idx);
      } else {
        throw DslParseError("expected q(...), qq(...;tr) or v", lx.pos);
      }
    }
    FockVector t = fock_monomial(creations, pairs, d);
    t *= coeff;
    out += t;
  }
  if (first) throw DslParseError("empty vector expression", 0);
  return out;
}

std::string print_vector_dsl(const FockVector& v, const SurfaceDatum& d) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : v.terms) {
    if (!m.plain())
      // free-leg structure prints through the diagnostic form
      return v.str(d);
    os << (first ? "" : " + ");
    first = false;
    if (c != Rat(1)) os << c.str() << " ";
    for (auto& e : m.cre) os << "q(" << (int)e.first << "," << d.basis_name(e.second) << ") ";
    for (auto& e : m.pairs) os << "qq(" << (int)e.first << "," << (int)e.second << ";tr) ";
    os << "v";
  }
  return os.str();
}

SurfClass parse_class_dsl(const std::string& text, const SurfaceDatum& d) {
  Lexer lx{text};
  SurfClass c = parse_class(lx, d, '\0');
  if (!lx.eof()) throw DslParseError("trailing input", lx.pos);
  return c;
}

}  // namespace hilbfock
