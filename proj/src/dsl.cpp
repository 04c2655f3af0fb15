#include "cucalc/dsl.hpp"

#include <cctype>
#include <random>
#include <set>
#include <sstream>

#include "cucalc/error.hpp"
#include "cucalc/oracle.hpp"
#include "cucalc/semiring.hpp"
#include "json.hpp"

namespace cucalc {

namespace {

using json = nlohmann::ordered_json;

enum class Tok : std::uint8_t { Ident, Number, Sym, Option, Newline, End };

struct Token {
  Tok type;
  std::string text;
  int line;
  int col;
};

[[noreturn]] void syntax(const Token& t, const std::string& msg) { throw ParseError("syntax error: " + msg, t.line, t.col); }

std::string describe_token(const Token& t) {
  switch (t.type) {
    case Tok::Newline:
      return "end of line";
    case Tok::End:
      return "end of input";
    case Tok::Option:
      return "'--" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  int depth = 0;
  std::size_t i = 0;
  const std::size_t n = src.size();
  auto adv = [&](std::size_t k) {
    for (std::size_t j = 0; j < k && i < n; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0U) != 0x80U) {
        ++col;
      }
    }
  };
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  while (i < n) {
    const char c = src[i];
    const Token here{Tok::Sym, std::string(1, c), line, col};
    if (c == '#') {
      while (i < n && src[i] != '\n') adv(1);
      continue;
    }
    if (c == '\n') {
      if (depth == 0 && !out.empty() && out.back().type != Tok::Newline) out.push_back({Tok::Newline, "", line, col});
      adv(1);
      continue;
    }
    if (static_cast<unsigned char>(c) >= 0x80U) syntax(here, "unexpected non-ASCII character");
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), line, col});
      adv(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < n && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      out.push_back({Tok::Number, src.substr(i, j - i), line, col});
      adv(j - i);
      continue;
    }
    if (c == '-' && i + 2 < n && src[i + 1] == '-' && std::isalpha(static_cast<unsigned char>(src[i + 2]))) {
      std::size_t j = i + 2;
      while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '-')) ++j;
      out.push_back({Tok::Option, src.substr(i + 2, j - i - 2), line, col});
      adv(j - i);
      continue;
    }
    if (i + 1 < n && ((c == '-' && src[i + 1] == '>') || (c == '<' && src[i + 1] == '='))) {
      out.push_back({Tok::Sym, src.substr(i, 2), line, col});
      adv(2);
      continue;
    }
    if (std::string("=:^[](){},|+").find(c) != std::string::npos) {
      if (c == '[' || c == '(' || c == '{') ++depth;
      if (c == ']' || c == ')' || c == '}') {
        if (depth == 0) syntax(here, "unbalanced '" + std::string(1, c) + "'");
        --depth;
      }
      out.push_back(here);
      adv(1);
      continue;
    }
    syntax(here, "unexpected character '" + std::string(1, c) + "'");
  }
  if (depth != 0) throw ParseError("syntax error: unclosed bracket", line, col);
  if (!out.empty() && out.back().type != Tok::Newline) out.push_back({Tok::Newline, "", line, col});
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string token_text(const Token& t) { return t.type == Tok::Option ? "--" + t.text : t.text; }

// Canonical spacing: none inside brackets or before separators.
std::string join(const std::vector<Token>& t, std::size_t a, std::size_t b) {
  std::string s;
  for (std::size_t k = a; k < b; ++k) {
    const std::string cur = token_text(t[k]);
    if (k > a) {
      const Token& p = t[k - 1];
      const bool tight_before = t[k].type == Tok::Sym && (cur == "," || cur == "]" || cur == ")" || cur == "^" || cur == ":");
      const bool tight_after = p.type == Tok::Sym && (p.text == "[" || p.text == "(" || p.text == "^");
      if (!tight_before && !tight_after) s += ' ';
    }
    s += cur;
  }
  return s;
}

const std::set<std::string>& carrier_keywords() {
  static const std::set<std::string> k = {"extnat", "pbar", "m1", "trunc", "trunchom", "z", "finite"};
  return k;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  SpecAst run() {
    SpecAst ast;
    while (peek().type != Tok::End) {
      if (peek().type == Tok::Newline) {
        ++pos_;
        continue;
      }
      const std::size_t start = pos_;
      Statement st = statement();
      if (peek().type != Tok::Newline && peek().type != Tok::End) {
        syntax(peek(), "unexpected " + describe_token(peek()) + " at end of statement");
      }
      st.text = join(t_, start, pos_);
      ast.statements.push_back(std::move(st));
    }
    return ast;
  }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::map<std::string, Carrier> carriers_;
  std::map<std::string, GenMorphism> morphisms_;
  std::map<std::string, PathClass> paths_;
  std::map<std::string, Ideal> ideals_;

  const Token& peek(std::size_t k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
  Token next() { return t_[pos_ < t_.size() - 1 ? pos_++ : pos_]; }
  bool at_sym(const std::string& s, std::size_t k = 0) const {
    return peek(k).type == Tok::Sym && peek(k).text == s;
  }
  bool accept(const std::string& s) {
    if (!at_sym(s)) return false;
    ++pos_;
    return true;
  }
  Token expect(const std::string& s) {
    if (!at_sym(s)) syntax(peek(), "expected '" + s + "' but found " + describe_token(peek()));
    return next();
  }
  Token expect_ident(const std::string& what) {
    if (peek().type != Tok::Ident) syntax(peek(), "expected " + what + " but found " + describe_token(peek()));
    return next();
  }
  void expect_word(const std::string& w) {
    if (peek().type != Tok::Ident || peek().text != w) {
      syntax(peek(), "expected '" + w + "' but found " + describe_token(peek()));
    }
    ++pos_;
  }
  bool at_end() const { return peek().type == Tok::Newline || peek().type == Tok::End; }

  [[noreturn]] static void mismatch(const Token& t, const std::string& msg) {
    throw ParseError("type mismatch: " + msg, t.line, t.col);
  }
  [[noreturn]] static void unresolved(const Token& t, const std::string& what) {
    throw ParseError("unresolved name '" + t.text + "'" + (what.empty() ? "" : ": " + what), t.line, t.col);
  }

  void declare(const Token& name) {
    if (carrier_keywords().count(name.text) != 0) syntax(name, "'" + name.text + "' is a reserved carrier name");
    if (carriers_.count(name.text) || morphisms_.count(name.text) || paths_.count(name.text) ||
        ideals_.count(name.text)) {
      syntax(name, "'" + name.text + "' is already declared");
    }
  }

  Statement make(StatementKind k, const Token& at, std::string name) {
    Statement st{k, {at.line, at.col}, std::move(name), "", {}, {}};
    return st;
  }

  Statement statement() {
    const Token head = expect_ident("a declaration or command");
    const std::string& w = head.text;
    if (w == "carrier") {
      const Token name = expect_ident("a carrier name");
      declare(name);
      expect("=");
      Carrier c = carrier_expr();
      carriers_.emplace(name.text, c);
      Statement st = make(StatementKind::Carrier, head, name.text);
      st.operands.emplace_back(c);
      return st;
    }
    if (w == "morphism") return morphism_decl(head);
    if (w == "path") return path_decl(head);
    if (w == "ideal") return ideal_decl(head);
    return command(head);
  }

  // ---- carriers and literals ----

  Carrier carrier_expr() {
    const Token at = peek();
    if (at_sym("[") && at_sym("[", 1)) {
      next();
      next();
      const Carrier a = carrier_expr();
      expect(",");
      const Carrier b = carrier_expr();
      expect("]");
      expect("]");
      try {
        return ihom_space(a, b)->carrier;
      } catch (const Error& e) {
        mismatch(at, e.what());
      }
    }
    const Token id = expect_ident("a carrier");
    if (id.text == "extnat") {
      if (!accept("^")) return Carrier::extnat();
      const Token k = next();
      if (k.type != Tok::Number || k.text.find('/') != std::string::npos) syntax(k, "expected a dimension after '^'");
      const unsigned long d = std::stoul(k.text);
      if (d == 0 || d > 64) syntax(k, "dimension must be between 1 and 64");
      return Carrier::extnat(d);
    }
    if (id.text == "pbar") return Carrier::pbar();
    if (id.text == "m1") return Carrier::m1();
    if (id.text == "trunc") return Carrier::trunc();
    if (id.text == "trunchom") return Carrier::trunc_hom();
    if (id.text == "z") return Carrier::z();
    if (id.text == "finite") return finite_expr();
    const auto it = carriers_.find(id.text);
    if (it == carriers_.end()) {
      if (morphisms_.count(id.text) || paths_.count(id.text) || ideals_.count(id.text)) {
        mismatch(id, "'" + id.text + "' is not a carrier");
      }
      unresolved(id, "no carrier of that name");
    }
    return it->second;
  }

  std::string element_name() {
    const Token t = next();
    if (t.type != Tok::Ident && t.type != Tok::Number) syntax(t, "expected an element name but found " + describe_token(t));
    return t.text;
  }

  Carrier finite_expr() {
    const Token open = expect("{");
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    auto lookup = [&](const Token& at, const std::string& nm) {
      const auto it = index.find(nm);
      if (it == index.end()) unresolved(Token{Tok::Ident, nm, at.line, at.col}, "not an element of this carrier");
      return it->second;
    };
    do {
      const Token at = peek();
      const std::string nm = element_name();
      if (index.count(nm)) syntax(at, "duplicate element '" + nm + "'");
      index[nm] = names.size();
      names.push_back(nm);
    } while (accept(","));
    const std::size_t n = names.size();
    std::vector<std::size_t> add(n * n, n);
    for (std::size_t i = 0; i < n; ++i) add[i] = add[i * n] = i;
    std::vector<char> le(n * n, 0);
    if (accept("|")) {
      while (!at_sym("|") && !at_sym("}")) {
        const Token at = peek();
        const std::size_t a = lookup(at, element_name());
        expect("+");
        const Token bt = peek();
        const std::size_t b = lookup(bt, element_name());
        expect("=");
        const Token ct = peek();
        const std::size_t c = lookup(ct, element_name());
        const std::size_t prev = add[a * n + b];
        if (prev != n && prev != c) syntax(at, "conflicting sums for " + names[a] + "+" + names[b]);
        add[a * n + b] = add[b * n + a] = c;
        if (!accept(",")) break;
      }
      if (accept("|")) {
        while (!at_sym("}")) {
          const Token at = peek();
          const std::size_t a = lookup(at, element_name());
          expect("<=");
          const Token bt = peek();
          const std::size_t b = lookup(bt, element_name());
          le[a * n + b] = 1;
          if (!accept(",")) break;
        }
      }
    }
    expect("}");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (add[a * n + b] == n) syntax(open, "missing sum " + names[a] + "+" + names[b]);
      }
    }
    // Reflexive, 0 at the bottom, a <= a + b, then the transitive closure.
    for (std::size_t a = 0; a < n; ++a) {
      le[a * n + a] = 1;
      le[a] = 1;
      for (std::size_t b = 0; b < n; ++b) le[a * n + add[a * n + b]] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (le[i * n + k] && le[k * n + j]) le[i * n + j] = 1;
        }
      }
    }
    FiniteTable ft{names, add, le};
    if (const auto v = finite_table_violation(ft)) mismatch(open, "not a positively ordered monoid: " + *v);
    return Carrier::finite(std::move(ft));
  }

  ExtNat extnat_lit() {
    const Token t = next();
    if (t.type == Tok::Ident && t.text == "inf") return ExtNat::infinity();
    if (t.type != Tok::Number || t.text.find('/') != std::string::npos) {
      mismatch(t, "expected a natural number or inf but found " + describe_token(t));
    }
    return ExtNat(std::stoull(t.text));
  }

  QInf qinf_lit() {
    const Token t = next();
    if (t.type == Tok::Ident && t.text == "inf") return QInf::infinity();
    if (t.type != Tok::Number) mismatch(t, "expected p/q or inf but found " + describe_token(t));
    const auto slash = t.text.find('/');
    if (slash == std::string::npos) return QInf(static_cast<std::int64_t>(std::stoll(t.text)));
    const auto den = std::stoll(t.text.substr(slash + 1));
    if (den == 0) mismatch(t, "zero denominator");
    return QInf(static_cast<std::int64_t>(std::stoll(t.text.substr(0, slash))), static_cast<std::int64_t>(den));
  }

  Element literal(const Carrier& c) {
    const Token at = peek();
    Element e = c.zero();
    switch (c.kind()) {
      case CarrierKind::ExtNatPow: {
        if (c.dim() == 1 && !at_sym("(")) {
          e = natvec({extnat_lit()});
          break;
        }
        expect("(");
        std::vector<ExtNat> v;
        do {
          v.push_back(extnat_lit());
        } while (accept(","));
        expect(")");
        if (v.size() != c.dim()) {
          mismatch(at, "expected " + std::to_string(c.dim()) + " coordinates for " + c.name() + " but found " +
                           std::to_string(v.size()));
        }
        e = natvec(std::move(v));
        break;
      }
      case CarrierKind::PBar:
      case CarrierKind::Trunc:
        e = qinf_lit();
        break;
      case CarrierKind::MOne:
      case CarrierKind::Z:
      case CarrierKind::TruncHom: {
        if (peek().type == Tok::Number && peek().text == "0") {
          next();
          break;
        }
        const Token k = expect_ident("'compact' or 'soft'");
        if (k.text != "compact" && k.text != "soft") mismatch(k, "elements of " + c.name() + " are 'compact v' or 'soft v'");
        const QInf v = qinf_lit();
        e = k.text == "compact" ? compact(v) : soft(v);
        break;
      }
      case CarrierKind::Finite: {
        const std::string nm = element_name();
        const auto& names = c.table().names;
        const auto it = std::find(names.begin(), names.end(), nm);
        if (it == names.end()) mismatch(at, "'" + nm + "' is not an element of " + c.name());
        e = FiniteIdx{static_cast<std::size_t>(it - names.begin())};
        break;
      }
    }
    if (!c.contains(e)) mismatch(at, c.format(e) + " is not an element of " + c.name());
    return e;
  }

  // ---- declarations ----

  Statement morphism_decl(const Token& head) {
    const Token name = expect_ident("a morphism name");
    declare(name);
    expect(":");
    const Carrier dom = carrier_expr();
    expect("->");
    const Carrier cod = carrier_expr();
    expect("=");
    const GenMorphism f = morphism_lit(dom, cod);
    morphisms_.emplace(name.text, f);
    Statement st = make(StatementKind::Morphism, head, name.text);
    st.operands.emplace_back(f);
    return st;
  }

  GenMorphism morphism_lit(const Carrier& dom, const Carrier& cod) {
    const Token kind = expect_ident("a morphism literal (matrix, scale, table, identity, zero, multiple)");
    const std::string sig = dom.name() + " -> " + cod.name();
    try {
      if (kind.text == "matrix") {
        expect("[");
        std::vector<std::vector<ExtNat>> rows;
        do {
          expect("[");
          std::vector<ExtNat> r;
          do {
            r.push_back(extnat_lit());
          } while (accept(","));
          expect("]");
          rows.push_back(std::move(r));
        } while (accept(","));
        expect("]");
        for (const auto& r : rows) {
          if (r.size() != rows[0].size()) syntax(kind, "matrix rows have different lengths");
        }
        if (dom.kind() != CarrierKind::ExtNatPow || cod.kind() != CarrierKind::ExtNatPow) {
          mismatch(kind, "matrix literal needs powers of extnat, got " + sig);
        }
        if (rows.size() != cod.dim() || rows[0].size() != dom.dim()) {
          mismatch(kind, "a morphism " + sig + " is a " + std::to_string(cod.dim()) + " x " +
                             std::to_string(dom.dim()) + " matrix, found " + std::to_string(rows.size()) + " x " +
                             std::to_string(rows[0].size()));
        }
        MatrixMor m{rows.size(), rows[0].size(), {}};
        for (const auto& r : rows) m.entries.insert(m.entries.end(), r.begin(), r.end());
        return GenMorphism::matrix(std::move(m));
      }
      if (kind.text == "scale") {
        const QInf t = qinf_lit();
        if (dom.kind() == CarrierKind::PBar && cod.kind() == CarrierKind::PBar) return GenMorphism::scale_pbar(t);
        if (dom.kind() == CarrierKind::Trunc && cod.kind() == CarrierKind::Trunc) return GenMorphism::scale_trunc(t);
        mismatch(kind, "scale needs pbar -> pbar or trunc -> trunc, got " + sig);
      }
      if (kind.text == "table") {
        if (dom.kind() != CarrierKind::Finite || cod.kind() != CarrierKind::Finite) {
          mismatch(kind, "table needs finite carriers, got " + sig);
        }
        expect("{");
        std::vector<std::size_t> img(dom.dim(), cod.dim());
        img[0] = 0;
        while (!at_sym("}")) {
          const Element a = literal(dom);
          expect("->");
          const Element b = literal(cod);
          img[std::get<FiniteIdx>(a).index] = std::get<FiniteIdx>(b).index;
          if (!accept(",")) break;
        }
        expect("}");
        for (std::size_t i = 0; i < img.size(); ++i) {
          if (img[i] == cod.dim()) mismatch(kind, "table has no value for " + dom.table().names[i]);
        }
        return GenMorphism::table(dom, cod, img);
      }
      if (kind.text == "identity") {
        if (!(dom == cod)) mismatch(kind, "identity needs equal domain and codomain, got " + sig);
        return GenMorphism::identity(dom);
      }
      if (kind.text == "zero") return GenMorphism::zero(dom, cod);
      if (kind.text == "multiple") {
        if (!(dom == Carrier::extnat())) mismatch(kind, "multiple needs domain extnat, got " + sig);
        return GenMorphism::nat_multiple(cod, literal(cod));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      mismatch(kind, e.what());
    }
    syntax(kind, "unknown morphism literal '" + kind.text + "'");
  }

  Statement path_decl(const Token& head) {
    const Token name = expect_ident("a path name");
    declare(name);
    expect_word("in");
    const Carrier c = carrier_expr();
    expect("=");
    const Token open = expect("[");
    std::vector<Point> pts;
    do {
      pts.emplace_back(literal(c));
    } while (accept(","));
    expect("]");
    std::optional<LawKind> law = LawKind::Stabilize;
    std::optional<Point> limit;
    if (peek().type == Tok::Ident && peek().text == "law") {
      next();
      expect(":");
      const Token l = expect_ident("a law");
      law = law_from_name(l.text);
      if (!law) syntax(l, "unknown law '" + l.text + "' (arithmetic, geometric, stabilize, explicit)");
      if (*law == LawKind::Explicit) limit = literal(c);
    }
    try {
      PathClass p = make_path(Ambient::carrier(c), std::move(pts), law, limit);
      paths_.emplace(name.text, p);
      Statement st = make(StatementKind::Path, head, name.text);
      st.operands.emplace_back(p);
      return st;
    } catch (const Error& e) {
      mismatch(open, std::string("invalid path: ") + e.what());
    }
  }

  Statement ideal_decl(const Token& head) {
    const Token name = expect_ident("an ideal name");
    declare(name);
    expect_word("in");
    const Carrier c = carrier_expr();
    expect("=");
    const Token k = expect_ident("zero, full or generated");
    std::optional<Ideal> j;
    try {
      if (k.text == "zero") {
        j = ideal_of(c, c.zero());
      } else if (k.text == "full") {
        j = ideal_lattice(c).back();
      } else if (k.text == "generated") {
        j = generated_ideal(c, literal(c));
      } else {
        syntax(k, "expected zero, full or generated");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      mismatch(k, e.what());
    }
    ideals_.emplace(name.text, *j);
    Statement st = make(StatementKind::Ideal, head, name.text);
    st.operands.emplace_back(*j);
    return st;
  }

  // ---- commands ----

  const GenMorphism& morphism_ref() {
    const Token t = expect_ident("a morphism name");
    const auto it = morphisms_.find(t.text);
    if (it == morphisms_.end()) {
      if (carriers_.count(t.text) || paths_.count(t.text)) mismatch(t, "'" + t.text + "' is not a morphism");
      unresolved(t, "no morphism of that name");
    }
    return it->second;
  }

  Statement command(const Token& head) {
    const std::string& v = head.text;
    Statement st = make(StatementKind::Command, head, v);
    auto& ops = st.operands;
    if (v == "axioms" || v == "ideals" || v == "simple") {
      ops.emplace_back(carrier_expr());
    } else if (v == "ihom") {
      ops.emplace_back(carrier_expr());
      ops.emplace_back(carrier_expr());
    } else if (v == "adjoint") {
      for (int i = 0; i < 3; ++i) {
        const Token at = peek();
        const Carrier c = carrier_expr();
        if (c.kind() != CarrierKind::Finite) mismatch(at, "adjoint needs finite carriers, got " + c.name());
        ops.emplace_back(c);
      }
    } else if (v == "compose") {
      const Token gt = peek();
      const GenMorphism g = morphism_ref();
      const GenMorphism f = morphism_ref();
      if (!(f.codomain() == g.domain())) {
        mismatch(gt, "compose " + gt.text + " after a morphism into " + f.codomain().name() + ", but " + gt.text +
                         " starts at " + g.domain().name());
      }
      ops.emplace_back(g);
      ops.emplace_back(f);
    } else if (v == "eval") {
      const Token t = expect_ident("a morphism or path name");
      if (const auto p = paths_.find(t.text); p != paths_.end()) {
        ops.emplace_back(p->second);
      } else if (const auto m = morphisms_.find(t.text); m != morphisms_.end()) {
        ops.emplace_back(m->second);
        ops.emplace_back(literal(m->second.domain()));
      } else {
        unresolved(t, "no morphism or path of that name");
      }
    } else if (v == "tensor") {
      if (peek().type == Tok::Ident && morphisms_.count(peek().text)) {
        ops.emplace_back(morphism_ref());
        ops.emplace_back(morphism_ref());
      } else {
        ops.emplace_back(carrier_expr());
        ops.emplace_back(carrier_expr());
      }
    } else if (v == "solid") {
      const Token at = peek();
      const std::size_t start = pos_;
      while (!at_end()) next();
      std::string name;
      for (std::size_t k = start; k < pos_; ++k) name += t_[k].text;
      if (name.empty()) syntax(at, "expected a semiring name");
      if (!semiring_by_name(name)) {
        unresolved(Token{Tok::Ident, name, at.line, at.col}, "known semirings are extnat, pbar, m1, trunchom, M1..M3");
      }
      ops.emplace_back(name);
    } else if (v == "quotient") {
      const Carrier c = carrier_expr();
      const Token jt = expect_ident("an ideal name");
      const auto it = ideals_.find(jt.text);
      if (it == ideals_.end()) unresolved(jt, "no ideal of that name");
      if (!(it->second.carrier == c)) mismatch(jt, jt.text + " is an ideal of " + it->second.carrier.name() + ", not of " + c.name());
      ops.emplace_back(c);
      ops.emplace_back(it->second);
    } else if (v == "oracle") {
      st.options["max-size"] = "3";
      st.options["check"] = "bijection";
    } else {
      syntax(head, "unknown declaration or command '" + v + "'");
    }
    while (peek().type == Tok::Option) {
      const Token o = next();
      if (v != "oracle" || (o.text != "max-size" && o.text != "check")) syntax(o, "unknown option '--" + o.text + "'");
      const Token val = next();
      if (val.type != Tok::Ident && val.type != Tok::Number) syntax(val, "expected a value for '--" + o.text + "'");
      if (o.text == "max-size" && (val.type != Tok::Number || val.text.find('/') != std::string::npos)) {
        syntax(val, "--max-size takes a natural number");
      }
      if (o.text == "check" && !oracle_check_from_name(val.text)) {
        syntax(val, "--check takes axioms, bijection or tau");
      }
      st.options[o.text] = val.text;
    }
    return st;
  }
};

// ---- execution ----

struct Out {
  CommandResult r;
  json data = json::object();
  void line(const std::string& s) { r.lines.push_back(s); }
  void check(bool ok) { r.status = ok ? "pass" : "fail"; }
};

const Carrier& carrier_of(const Operand& o) { return std::get<Carrier>(o); }

std::string format_point(const Ambient& amb, const Point& p) { return amb.format(p); }

void do_axioms(Out& o, const Carrier& c, const RunOptions& opts) {
  AxiomBudget b;
  b.samples = opts.budget;
  const auto rep = check_axioms(c, b);
  o.r.provenance = c.kind() == CarrierKind::Finite ? "exhaustive" : "sampled";
  json arr = json::array();
  for (const auto& a : rep.results) {
    o.line(a.name + ": " + (a.passed ? "pass" : "FAIL " + a.witness) + " (" + std::to_string(a.checked) + " checked)");
    arr.push_back({{"name", a.name}, {"passed", a.passed}, {"checked", a.checked}, {"witness", a.witness}});
  }
  o.data = {{"carrier", c.name()}, {"axioms", arr}};
  o.check(rep.passed());
}

void do_ihom(Out& o, const Carrier& s, const Carrier& t) {
  const auto d = ihom_describe(s, t);
  o.r.provenance = "closed form";
  o.line("[[" + s.name() + "," + t.name() + "]] = " + d.name);
  o.line("carrier: " + d.carrier.name());
  o.line("order: " + d.order);
  o.line("addition: " + d.addition);
  o.line("way-below: " + d.way_below);
  o.line("source: " + d.provenance);
  o.data = {{"domain", s.name()},         {"codomain", t.name()}, {"name", d.name},
            {"carrier", d.carrier.name()}, {"order", d.order},     {"addition", d.addition},
            {"way_below", d.way_below},    {"source", d.provenance}};
  o.r.status = "ok";
}

void do_compose(Out& o, const GenMorphism& g, const GenMorphism& f, const RunOptions& opts) {
  const GenMorphism gf = compose(g, f);
  o.line("composite: " + format(gf));
  o.data["composite"] = format(gf);
  try {
    const IHomElem c = compose(ihom_of(g), ihom_of(f));
    o.line("class in [[" + f.domain().name() + "," + g.codomain().name() + "]]: " + format(c));
    o.data["class"] = format(c);
  } catch (const UnsupportedError& e) {
    o.line(std::string("class: ") + e.what());
  }
  std::mt19937_64 rng(opts.seed);
  std::size_t bad = 0;
  std::string witness;
  const std::size_t n = std::max<std::size_t>(opts.budget, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Element a = f.domain().random(rng);
    const Element lhs = cucalc::apply(gf, a);
    const Element rhs = cucalc::apply(g, cucalc::apply(f, a));
    if (!(lhs == rhs)) {
      ++bad;
      if (witness.empty()) witness = f.domain().format(a);
    }
  }
  o.line("(g f)(a) = g(f(a)) on " + std::to_string(n) + " seeded samples: " + (bad == 0 ? "pass" : "FAIL at " + witness));
  o.data["samples"] = n;
  o.data["mismatches"] = bad;
  o.r.provenance = "closed form; sampled check";
  o.check(bad == 0);
}

void do_eval(Out& o, const Statement& st) {
  o.r.status = "ok";
  if (const auto* p = std::get_if<PathClass>(&st.operands[0])) {
    const NormalForm nf = normal_form(*p);
    o.line("path: " + format(*p));
    o.line("endpoint: " + format_point(p->ambient(), nf.endpoint) + (nf.compact ? " (compact class)" : ""));
    o.data = {{"path", format(*p)}, {"endpoint", format_point(p->ambient(), nf.endpoint)}, {"compact", nf.compact}};
    o.r.provenance = "closed form";
    return;
  }
  const auto& f = std::get<GenMorphism>(st.operands[0]);
  const auto& a = std::get<Element>(st.operands[1]);
  const Element v = cucalc::apply(f, a);
  o.line(format(f) + " at " + f.domain().format(a) + " = " + f.codomain().format(v));
  o.data = {{"morphism", format(f)}, {"argument", f.domain().format(a)}, {"value", f.codomain().format(v)}};
  o.r.provenance = "closed form";
}

void do_tensor(Out& o, const Statement& st) {
  o.r.status = "ok";
  o.r.provenance = "closed form";
  if (const auto* f = std::get_if<GenMorphism>(&st.operands[0])) {
    const auto& g = std::get<GenMorphism>(st.operands[1]);
    const IHomElem x = ext_tensor(ihom_of(*f), ihom_of(g));
    o.line("external tensor: " + format(x));
    o.data = {{"left", format(*f)}, {"right", format(g)}, {"class", format(x)}};
    try {
      const GenMorphism fg = tensor_morphism(*f, g);
      o.line("tensor morphism: " + format(fg));
      o.data["morphism"] = format(fg);
    } catch (const UnsupportedError& e) {
      o.line(std::string("tensor morphism: ") + e.what());
    }
    return;
  }
  const auto h = tensor_handle(carrier_of(st.operands[0]), carrier_of(st.operands[1]));
  o.line(h.name);
  o.line("source: " + h.provenance);
  o.data = {{"left", h.left.name()}, {"right", h.right.name()}, {"product", h.product.name()}, {"name", h.name}};
}

void do_solid(Out& o, const std::string& name) {
  const auto r = *semiring_by_name(name);
  const SolidReport rep = solid_report(r);
  std::istringstream in(format_table(rep));
  for (std::string l; std::getline(in, l);) o.line(l);
  json conds = json::array();
  for (std::size_t i = 0; i < rep.conditions.size(); ++i) {
    const auto& v = rep.conditions[i];
    conds.push_back({{"condition", i + 1},
                     {"status", verdict_name(v.status)},
                     {"method", v.method},
                     {"basis", v.basis},
                     {"witness", v.witness}});
  }
  const auto viol = rep.implication_violation();
  o.data = {{"semiring", rep.semiring}, {"conditions", conds}, {"implications", viol ? *viol : "consistent"}};
  o.r.provenance = "closed form, grid, implication";
  o.check(!viol.has_value());
}

void do_ideals(Out& o, const Carrier& c, const RunOptions& opts) {
  const auto lat = ideal_lattice(c);
  json arr = json::array();
  for (const auto& j : lat) {
    o.line(j.name);
    arr.push_back(j.name);
  }
  const auto chk = check_lattice_complete(c, opts.budget);
  o.line(std::to_string(lat.size()) + " ideals; lattice check " + (chk.passed ? "pass" : "FAIL"));
  for (const auto& f : chk.failures) o.line("  " + f);
  o.data = {{"carrier", c.name()}, {"ideals", arr}, {"checked", chk.checked}};
  o.r.provenance = c.kind() == CarrierKind::Finite ? "exhaustive" : "closed form; sampled check";
  o.check(chk.passed);
}

void do_simple(Out& o, const Carrier& c) {
  const auto r = is_simple(c);
  o.line(c.name() + (r.simple ? " is simple" : " is not simple"));
  o.line(r.note);
  o.data = {{"carrier", c.name()}, {"simple", r.simple}, {"ideals", r.ideals}, {"note", r.note}};
  if (r.witness) {
    o.line("witness: J = " + r.witness->name);
    o.data["witness"] = r.witness->name;
  }
  o.r.provenance = "closed form";
  o.r.status = "ok";
}

void do_quotient(Out& o, const Carrier& c, const Ideal& j) {
  const Quotient q = quotient(c, j);
  const std::string desc =
      q.carrier.kind() == CarrierKind::Finite ? "finite " + describe_finite(q.carrier.table()) : q.carrier.name();
  o.line(c.name() + " / " + j.name + " = " + desc);
  const bool ok = check_axioms(q.carrier).passed();
  o.line(std::string("axioms of the quotient: ") + (ok ? "pass" : "FAIL"));
  o.data = {{"carrier", c.name()}, {"ideal", j.name}, {"quotient", desc}};
  o.r.provenance = "closed form";
  o.check(ok);
}

void do_oracle(Out& o, const Statement& st) {
  const std::size_t n = std::stoul(st.options.at("max-size"));
  const auto chk = *oracle_check_from_name(st.options.at("check"));
  const OracleRun run = run_oracle(n, chk);
  std::size_t failed = 0;
  json corpus = json::array();
  for (const auto& e : run.entries) {
    if (!e.passed) {
      ++failed;
      o.line("FAIL " + e.instance + ": " + e.detail);
    }
    corpus.push_back({{"instance", e.instance}, {"passed", e.passed}, {"detail", e.detail}});
  }
  o.line(run.check + " check over " + std::to_string(run.carriers) + " carriers with at most " + std::to_string(n) +
         " elements: " + std::to_string(run.entries.size() - failed) + "/" + std::to_string(run.entries.size()) +
         " instances pass");
  o.data = {{"max_size", n}, {"check", run.check}, {"carriers", run.carriers}, {"corpus", corpus}};
  o.r.provenance = "brute force";
  o.check(run.passed);
}

void do_adjoint(Out& o, const Statement& st) {
  const auto& s = carrier_of(st.operands[0]);
  const auto& t = carrier_of(st.operands[1]);
  const auto& p = carrier_of(st.operands[2]);
  const auto r = check_closed_bijection(s, t, p);
  o.line("|Cu(S,[[T,P]])| = " + std::to_string(r.homs) + ", |BiCu(S x T,P)| = " + std::to_string(r.bimorphisms));
  o.line(std::string("explicit transforms mutually inverse order-isomorphisms: ") + (r.passed ? "pass" : "FAIL"));
  for (const auto& f : r.failures) o.line("  " + f);
  o.data = {{"homs", r.homs}, {"bimorphisms", r.bimorphisms}, {"order_iso", r.order_iso}, {"library_agrees", r.library_agrees}};
  o.r.provenance = "brute force";
  o.check(r.passed);
}

}  // namespace

SpecAst parse(const std::string& text) { return Parser(lex(text)).run(); }

std::string print(const SpecAst& ast) {
  std::string s;
  for (const auto& st : ast.statements) s += st.text + "\n";
  return s;
}

RunResult run(const SpecAst& ast, const RunOptions& opts) {
  RunResult res;
  for (const auto& st : ast.statements) {
    if (st.kind != StatementKind::Command) continue;
    Out o;
    o.r.command = st.text;
    o.r.span = st.span;
    try {
      const std::string& v = st.name;
      if (v == "axioms") do_axioms(o, carrier_of(st.operands[0]), opts);
      if (v == "ihom") do_ihom(o, carrier_of(st.operands[0]), carrier_of(st.operands[1]));
      if (v == "compose") do_compose(o, std::get<GenMorphism>(st.operands[0]), std::get<GenMorphism>(st.operands[1]), opts);
      if (v == "eval") do_eval(o, st);
      if (v == "tensor") do_tensor(o, st);
      if (v == "solid") do_solid(o, std::get<std::string>(st.operands[0]));
      if (v == "ideals") do_ideals(o, carrier_of(st.operands[0]), opts);
      if (v == "simple") do_simple(o, carrier_of(st.operands[0]));
      if (v == "quotient") do_quotient(o, carrier_of(st.operands[0]), std::get<Ideal>(st.operands[1]));
      if (v == "oracle") do_oracle(o, st);
      if (v == "adjoint") do_adjoint(o, st);
    } catch (const std::exception& e) {
      o.r.status = "error";
      o.r.provenance.clear();
      o.r.lines.push_back(std::to_string(st.span.line) + ":" + std::to_string(st.span.column) + ": " + e.what());
      o.data = {{"error", e.what()}};
    }
    o.r.data = o.data.dump();
    if (o.r.status == "fail" || o.r.status == "error") res.exit_code = 1;
    res.results.push_back(std::move(o.r));
  }
  return res;
}

RunResult run_source(const std::string& text, const RunOptions& opts) {
  try {
    return run(parse(text), opts);
  } catch (const ParseError& e) {
    RunResult r;
    r.exit_code = 2;
    r.diagnostic = e.what();
    return r;
  }
}

std::string render_text(const RunResult& r) {
  if (!r.diagnostic.empty()) return "error: " + r.diagnostic + "\n";
  std::string s;
  std::size_t bad = 0;
  for (const auto& c : r.results) {
    s += "> " + c.command + "\n";
    for (const auto& l : c.lines) s += "  " + l + "\n";
    s += "  [" + c.status + (c.provenance.empty() ? "" : "; " + c.provenance) + "]\n";
    if (c.status == "fail" || c.status == "error") ++bad;
  }
  s += std::to_string(r.results.size()) + " commands, " + std::to_string(bad) + " failed\n";
  return s;
}

std::string render_json(const RunResult& r, const RunOptions& opts) {
  json j;
  j["schema"] = "cucalc.report.v1";
  j["seed"] = opts.seed;
  j["budget"] = opts.budget;
  j["exit_code"] = r.exit_code;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  json arr = json::array();
  for (const auto& c : r.results) {
    arr.push_back({{"command", c.command},
                   {"line", c.span.line},
                   {"column", c.span.column},
                   {"status", c.status},
                   {"provenance", c.provenance},
                   {"lines", c.lines},
                   {"data", json::parse(c.data)}});
  }
  j["results"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace cucalc
