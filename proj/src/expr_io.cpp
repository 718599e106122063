#include "defo/expr_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

namespace defo {

namespace {

std::string xi_suffix(XiMask m) {
  std::string s;
  for (int i : xi_indices(m)) s += std::to_string(i);
  return s;
}

// One printed summand: sign handled by the caller, body is "coef*vars".
std::string term_body(const ExpVec& e, const Scalar& mag, const VarEnv& env,
                      const std::string& tail) {
  std::vector<std::string> pieces;
  if (!mag.is_one()) pieces.push_back(mag.str());
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    std::string p = env.name(static_cast<int>(v));
    if (e[v] > 1) p += "^" + std::to_string(e[v]);
    pieces.push_back(std::move(p));
  }
  if (!tail.empty()) pieces.push_back(tail);
  if (pieces.empty()) return "1";
  std::string out = pieces[0];
  for (std::size_t i = 1; i < pieces.size(); ++i) out += "*" + pieces[i];
  return out;
}

struct SumPrinter {
  std::string out;
  void add(int sign, const std::string& body) {
    if (out.empty()) {
      if (sign < 0) out += "-";
      out += body;
    } else {
      out += sign < 0 ? " - " : " + ";
      out += body;
    }
  }
  std::string str() const { return out.empty() ? "0" : out; }
};

}  // namespace

std::string print_poly(const Poly& p) {
  SumPrinter sp;
  for (const auto& [e, c] : p.terms()) {
    const Scalar mag = c.sign() < 0 ? -c : c;
    sp.add(c.sign(), term_body(e, mag, *p.env(), ""));
  }
  return sp.str();
}

std::string print_field(const VectorField& x) {
  std::string out = "[";
  for (int i = 0; i < x.env()->n(); ++i) {
    if (i > 0) out += ", ";
    out += print_poly(x.component(i));
  }
  return out + "]";
}

std::string print_form(const Form& w) {
  SumPrinter sp;
  for (const auto& [mask, p] : w.terms()) {
    const std::string tail = mask == 0 ? "" : "xi" + xi_suffix(mask);
    for (const auto& [e, c] : p.terms()) {
      const Scalar mag = c.sign() < 0 ? -c : c;
      sp.add(c.sign(), term_body(e, mag, *w.env(), tail));
    }
  }
  return sp.str();
}

std::string print_spatial_monomial(const ExpVec& e, const VarEnv& env) {
  std::vector<std::string> pieces;
  for (int v = 0; v < env.n() && v < static_cast<int>(e.size()); ++v) {
    if (e[static_cast<std::size_t>(v)] == 0) continue;
    std::string p = env.name(v);
    if (e[static_cast<std::size_t>(v)] > 1)
      p += "^" + std::to_string(e[static_cast<std::size_t>(v)]);
    pieces.push_back(std::move(p));
  }
  if (pieces.empty()) return "1";
  std::string out = pieces[0];
  for (std::size_t i = 1; i < pieces.size(); ++i) out += "*" + pieces[i];
  return out;
}

std::string print_opkey(const OpKey& key, const VarEnv& env) {
  std::vector<std::string> pieces;
  if (key.xi != 0) pieces.push_back("xi" + xi_suffix(key.xi));
  for (std::size_t i = 0; i < key.dx.size(); ++i) {
    if (key.dx[i] == 0) continue;
    std::string p = "d" + env.name(static_cast<int>(i));
    if (key.dx[i] > 1) p += "^" + std::to_string(key.dx[i]);
    pieces.push_back(std::move(p));
  }
  if (key.dxi != 0) pieces.push_back("dxi" + xi_suffix(key.dxi));
  if (pieces.empty()) return "1";
  std::string out = pieces[0];
  for (std::size_t i = 1; i < pieces.size(); ++i) out += "*" + pieces[i];
  return out;
}

std::string print_diffop(const DiffOp& op) {
  if (op.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, p] : op.terms()) {
    if (!first) out += " + ";
    first = false;
    const std::string coeff = print_poly(p);
    const std::string keystr = print_opkey(key, *op.env());
    const bool needs_parens = p.terms().size() > 1;
    if (keystr == "1") {
      out += needs_parens ? "(" + coeff + ")" : coeff;
    } else if (coeff == "1") {
      out += keystr;
    } else {
      out += (needs_parens ? "(" + coeff + ")" : coeff) + "*" + keystr;
    }
  }
  return out;
}

namespace {

class Lexer {
 public:
  Lexer(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  bool name_ahead() {
    skip_ws();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }
  bool digit_ahead() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  std::string read_name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }
  std::string read_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

// Terms carry an optional xi factor so the same parser serves polynomials
// (xi forbidden) and forms.
struct ParsedTerm {
  Poly poly;
  XiMask mask = 0;
};

class ExprParser {
 public:
  ExprParser(const std::string& text, VarEnv::Ptr env, bool allow_xi)
      : lex_(text), env_(std::move(env)), allow_xi_(allow_xi) {}

  Form parse_sum_all() {
    Form f = parse_sum();
    if (!lex_.eof()) lex_.fail("unexpected trailing input");
    return f;
  }

  Poly parse_poly_all() {
    Form f = parse_sum();
    if (!lex_.eof()) lex_.fail("unexpected trailing input");
    return poly_of(f);
  }

  Lexer& lexer() { return lex_; }

  Form parse_sum() {
    Form total(env_);
    int sign = lex_.accept('-') ? -1 : 1;
    total += parse_term(sign);
    while (true) {
      if (lex_.accept('+')) {
        total += parse_term(1);
      } else if (lex_.accept('-')) {
        total += parse_term(-1);
      } else {
        break;
      }
    }
    return total;
  }

  Poly poly_of(const Form& f) {
    for (const auto& [mask, p] : f.terms()) {
      (void)p;
      if (mask != 0) lex_.fail("xi factors are not allowed here");
    }
    return f.is_zero() ? Poly::zero(env_) : f.terms().begin()->second;
  }

 private:
  Form parse_term(int sign) {
    ParsedTerm t;
    t.poly = Poly::constant(env_, Scalar(sign));
    parse_factor(t);
    while (lex_.accept('*')) parse_factor(t);
    return Form::monomial(t.mask, t.poly);
  }

  void parse_factor(ParsedTerm& t) {
    if (lex_.accept('(')) {
      Form inner = parse_sum();
      lex_.expect(')');
      // Parenthesized sub-sums must be plain polynomials; xi factors stay
      // at term level.
      t.poly = t.poly * poly_of(inner);
      return;
    }
    if (lex_.digit_ahead()) {
      std::string num = lex_.read_digits();
      Scalar value = Scalar::from_decimal_string(num);
      if (lex_.accept('/')) {
        std::string den = lex_.read_digits();
        Scalar d = Scalar::from_decimal_string(den);
        if (d.is_zero()) lex_.fail("zero denominator");
        value = value / d;
      }
      t.poly = t.poly.scaled(value);
      return;
    }
    if (!lex_.name_ahead()) lex_.fail("expected a factor");
    const std::size_t name_pos = lex_.pos();
    std::string name = lex_.read_name();
    if (allow_xi_ && name.size() > 2 && name.compare(0, 2, "xi") == 0 &&
        std::all_of(name.begin() + 2, name.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      std::vector<int> indices;
      for (std::size_t i = 2; i < name.size(); ++i) {
        int idx = name[i] - '0';
        if (idx < 1 || idx > env_->n())
          throw ParseError("xi index out of range for n=" + std::to_string(env_->n()), name_pos);
        indices.push_back(idx);
      }
      auto sorted = xi_from_indices(indices);
      if (!sorted) {
        t.poly = Poly::zero(env_);
        return;
      }
      auto merged = xi_merge_sign(t.mask, sorted->first);
      if (!merged) {
        t.poly = Poly::zero(env_);
        return;
      }
      if (sorted->second * *merged < 0) t.poly = -t.poly;
      t.mask |= sorted->first;
      return;
    }
    int var = env_->index_of(name);
    if (var < 0) throw ParseError("unknown variable '" + name + "'", name_pos);
    int exp = 1;
    if (lex_.accept('^')) exp = std::stoi(lex_.read_digits());
    t.poly = t.poly * Poly::variable(env_, var).pow(exp);
  }

  Lexer lex_;
  VarEnv::Ptr env_;
  bool allow_xi_;
};

}  // namespace

Poly parse_poly(const std::string& text, const VarEnv::Ptr& env) {
  return ExprParser(text, env, /*allow_xi=*/false).parse_poly_all();
}

Form parse_form(const std::string& text, const VarEnv::Ptr& env) {
  return ExprParser(text, env, /*allow_xi=*/true).parse_sum_all();
}

VectorField parse_field(const std::string& text, const VarEnv::Ptr& env) {
  Lexer lex(text);
  lex.expect('[');
  std::size_t depth = 0;
  // Split on top-level commas, then reuse the polynomial parser.
  std::vector<std::string> parts;
  std::string cur;
  bool closed = false;
  while (!lex.eof()) {
    char c = lex.peek();
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) lex.fail("unbalanced ')'");
      --depth;
    }
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      lex.expect(',');
      continue;
    }
    if (c == ']' && depth == 0) {
      lex.expect(']');
      closed = true;
      break;
    }
    cur += c;
    lex.expect(c);
  }
  if (!closed) lex.fail("expected ']'");
  if (!lex.eof()) lex.fail("unexpected trailing input");
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != env->n())
    throw ParseError("expected " + std::to_string(env->n()) + " components, got " +
                         std::to_string(parts.size()),
                     0);
  std::vector<Poly> comps;
  for (const auto& part : parts) comps.push_back(parse_poly(part, env));
  return VectorField(env, std::move(comps));
}

namespace {

// Collects candidate variable names from a polynomial string.
void collect_names(const std::string& text, std::set<std::string>& names) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      names.insert(text.substr(start, i - start));
    } else {
      ++i;
    }
  }
}

}  // namespace

ParamAssignment parse_param_document(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parameter document is not valid JSON: ") + e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("parameter document needs an integer field 'n'", 0);
  const int n = doc["n"].get<int>();
  if (n < 2) throw ParseError("parameter document: n must be >= 2", 0);

  auto read_array = [&](const char* key, std::size_t arity) {
    if (!doc.contains(key) || !doc[key].is_array())
      throw ParseError(std::string("parameter document needs array '") + key + "'", 0);
    std::vector<std::string> out;
    for (const auto& item : doc[key]) {
      if (!item.is_string())
        throw ParseError(std::string("entries of '") + key + "' must be polynomial strings", 0);
      out.push_back(item.get<std::string>());
    }
    if (out.size() != arity)
      throw ParseError(std::string("'") + key + "' must have " + std::to_string(arity) +
                           " entries for n=" + std::to_string(n) + ", got " +
                           std::to_string(out.size()),
                       0);
    return out;
  };
  const auto t0 = read_array("t0", static_cast<std::size_t>(n + 1));
  const auto t1 = read_array("t1", static_cast<std::size_t>(n));
  const auto t1t = read_array("t1tilde", static_cast<std::size_t>(n));
  const auto t2 = read_array("t2", static_cast<std::size_t>(n - 1));

  std::set<std::string> names;
  for (const auto* arr : {&t0, &t1, &t1t, &t2})
    for (const auto& s : *arr) collect_names(s, names);
  for (int i = 1; i <= n; ++i) names.erase("x" + std::to_string(i));
  VarEnv::Ptr env = VarEnv::make(n, std::vector<std::string>(names.begin(), names.end()));

  auto parse_all = [&](const std::vector<std::string>& strs) {
    std::vector<Poly> out;
    for (const auto& s : strs) out.push_back(parse_poly(s, env));
    return out;
  };
  return ParamAssignment(env, parse_all(t0), parse_all(t1), parse_all(t1t), parse_all(t2));
}

std::string print_param_document(const ParamAssignment& t) {
  nlohmann::ordered_json doc;
  doc["n"] = t.n();
  auto dump = [&](const std::vector<Poly>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(print_poly(p));
    return out;
  };
  doc["t0"] = dump(t.t0);
  doc["t1"] = dump(t.t1);
  doc["t1tilde"] = dump(t.t1_tilde);
  doc["t2"] = dump(t.t2);
  return doc.dump(2);
}

}  // namespace defo
