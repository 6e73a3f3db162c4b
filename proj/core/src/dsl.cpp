// Diagram DSL:
//   strands 4; comps A:1,4 B:2,3; TN[1,4]; (I[3,4])^3; I[1,4]
// '#' starts a comment that runs to the end of the line.

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "braidwire/error.hpp"
#include "braidwire/wiring.hpp"

namespace braidwire {

namespace {

constexpr int kMaxStrands = 4096;
constexpr long long kMaxPower = 100000;
constexpr std::size_t kMaxElements = 5000000;

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  long long value = 0;
  std::size_t line = 1;
  std::size_t col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char ch = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text.push_back(take());
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        t.kind = Tok::Int;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          t.text.push_back(take());
        if (t.text.size() > 9) throw ParseError("integer too large (index overflow)", t.line, t.col);
        t.value = std::stoll(t.text);
      } else if (std::string_view(";,:[]|()^'").find(ch) != std::string_view::npos) {
        t.kind = Tok::Punct;
        t.text.push_back(take());
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", line_, col_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char take() {
    char ch = src_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }

  void skip() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        take();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  WiringDiagram run() {
    WiringDiagram d;
    keyword("strands");
    const Token& nt = integer();
    if (nt.value < 1 || nt.value > kMaxStrands)
      throw ParseError("strand count must be in [1," + std::to_string(kMaxStrands) + "]", nt.line,
                       nt.col);
    d.strands = static_cast<int>(nt.value);
    punct(";");
    keyword("comps");
    d.chart.assign(d.strands, "");
    comps(d);
    if (at_end()) return d;
    punct(";");
    d.elements = elems(d.strands, false);
    if (!at_end()) fail("expected ';' or end of input");
    return d;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }
  const Token& next() { return toks_[std::min(i_++, toks_.size() - 1)]; }

  void keyword(std::string_view kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) fail("expected '" + std::string(kw) + "'");
    next();
  }
  void punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    next();
  }
  const Token& integer() {
    if (peek().kind != Tok::Int) fail("expected integer");
    return next();
  }

  void comps(WiringDiagram& d) {
    bool any = false;
    while (peek().kind == Tok::Ident) {
      const std::string name = next().text;
      punct(":");
      for (;;) {
        const Token& t = integer();
        if (t.value < 1 || t.value > d.strands)
          throw ParseError("strand index " + t.text + " out of range (index overflow)", t.line,
                           t.col);
        auto& slot = d.chart[t.value - 1];
        if (!slot.empty())
          throw ParseError("strand " + t.text + " already belongs to " + slot, t.line, t.col);
        slot = name;
        if (is_punct(",") && peek(1).kind == Tok::Int) {
          next();
          continue;
        }
        break;
      }
      any = true;
      if (is_punct(",") && peek(1).kind == Tok::Ident) next();
    }
    if (!any) fail("expected component declaration NAME:INT,...");
    for (int p = 0; p < d.strands; ++p)
      if (d.chart[p].empty()) fail("strand " + std::to_string(p + 1) + " has no declared component");
  }

  std::vector<Element> elems(int n, bool nested) {
    std::vector<Element> out;
    for (;;) {
      if (at_end() || is_punct(")")) break;
      if (is_punct(";")) {
        next();
        continue;
      }
      auto part = item(n);
      if (out.size() + part.size() > kMaxElements) fail("diagram too large");
      out.insert(out.end(), part.begin(), part.end());
      if (at_end() || (nested && is_punct(")"))) break;
      if (!is_punct(";")) fail("expected ';' between elements");
    }
    return out;
  }

  int index(int n) {
    const Token& t = integer();
    if (t.value < 1 || t.value > n)
      throw ParseError("index " + t.text + " outside [1," + std::to_string(n) + "] (index overflow)",
                       t.line, t.col);
    return static_cast<int>(t.value);
  }

  std::vector<Element> item(int n) {
    if (is_punct("(")) {
      next();
      auto body = elems(n, true);
      punct(")");
      punct("^");
      const Token& p = integer();
      if (p.value > kMaxPower) throw ParseError("power too large", p.line, p.col);
      if (body.size() * static_cast<std::size_t>(p.value) > kMaxElements) fail("diagram too large");
      std::vector<Element> out;
      for (long long r = 0; r < p.value; ++r) out.insert(out.end(), body.begin(), body.end());
      return out;
    }
    if (peek().kind != Tok::Ident) fail("expected element");
    const Token& head = next();
    const std::string& h = head.text;
    if (h == "I") {
      punct("[");
      int i = index(n);
      punct(",");
      int j = index(n);
      punct("]");
      return {Element::I(i, j)};
    }
    if (h == "X") {
      punct("[");
      int i = index(n);
      punct(",");
      int j = index(n);
      punct("|");
      const Token& jt = peek();
      int j1 = index(n);
      if (j1 != j + 1) throw ParseError("grid blocks must be adjacent (expected " + std::to_string(j + 1) + ")", jt.line, jt.col);
      punct(",");
      int k = index(n);
      punct("]");
      return {Element::X(i, j, k)};
    }
    if (h == "T") {
      punct("[");
      int i = index(n);
      punct("]");
      return {Element::T(i)};
    }
    if (h == "TN") {
      punct("[");
      int a = index(n);
      punct(",");
      int b = index(n);
      punct("]");
      return {Element::TN(a, b)};
    }
    if (h.size() >= 2 && h[0] == 's' &&
        std::all_of(h.begin() + 1, h.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      if (h.size() > 10) throw ParseError("generator index too large (index overflow)", head.line, head.col);
      long long g = std::stoll(h.substr(1));
      if (g < 1 || g >= n)
        throw ParseError("generator " + h + " outside [1," + std::to_string(n - 1) + "] (index overflow)",
                         head.line, head.col);
      int sign = 1;
      if (is_punct("'")) {
        next();
        sign = -1;
      }
      return {Element::S(static_cast<int>(g), sign)};
    }
    throw ParseError("unknown element '" + h + "'", head.line, head.col);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

WiringDiagram parse_diagram(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::string print_diagram(const WiringDiagram& d) {
  std::ostringstream os;
  os << "strands " << d.strands << "; comps";
  for (const auto& name : component_names(d)) {
    os << ' ' << name << ':';
    bool first = true;
    for (int p = 0; p < static_cast<int>(d.chart.size()); ++p)
      if (d.chart[p] == name) {
        os << (first ? "" : ",") << p + 1;
        first = false;
      }
  }
  for (const auto& e : d.elements) os << "; " << e.to_string();
  return os.str();
}

}  // namespace braidwire
