#include "pathalg_cli/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "pathalg/error.hpp"

namespace pathalg::cli {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) {
    return false;
  }
  for (char c : s) {
    if (!ident_char(c)) {
      return false;
    }
  }
  return true;
}

enum class Tok {
  ident,
  number,
  slash,
  star,
  plus,
  minus,
  lparen,
  rparen,
  comma,
  semicolon,
  pipe,
  backslash,
  lbrace,
  rbrace,
  end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) {
        ++j;
      }
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        ++j;
      }
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '/': kind = Tok::slash; break;
      case '*': kind = Tok::star; break;
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case ';': kind = Tok::semicolon; break;
      case '|': kind = Tok::pipe; break;
      case '\\': kind = Tok::backslash; break;
      case '{': kind = Tok::lbrace; break;
      case '}': kind = Tok::rbrace; break;
      default:
        throw ParseError(1, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::end, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(const Graph& g, std::string_view text) : g_(g), toks_(lex(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  bool accept(Tok k) {
    if (at(k)) {
      take();
      return true;
    }
    return false;
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) {
      fail(std::string("expected ") + what);
    }
    return take();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(1, peek().column, msg + (at(Tok::end) ? " at end of input" : ""));
  }

  void expect_end() {
    if (!at(Tok::end)) {
      fail("unexpected '" + peek().text + "'");
    }
  }

  Scalar coefficient(const Ring& ring) {
    const Token num = expect(Tok::number, "coefficient");
    mpq_class q(mpz_class(num.text));
    if (accept(Tok::slash)) {
      const Token den = expect(Tok::number, "denominator");
      mpz_class d(den.text);
      if (d == 0) {
        throw ParseError(1, den.column, "zero denominator");
      }
      q = mpq_class(q.get_num(), d);
      q.canonicalize();
    }
    try {
      return Scalar(ring, q);
    } catch (const DomainError& e) {
      throw ParseError(1, num.column, e.what());
    }
  }

  // Comma-separated edge names, or one vertex name.
  Path path() {
    const Token first = expect(Tok::ident, "edge or vertex name");
    if (!at(Tok::comma)) {
      if (auto v = g_.find_vertex(first.text)) {
        return Path::vertex(*v);
      }
    }
    std::vector<EdgeId> edges{edge_named(first)};
    while (accept(Tok::comma)) {
      edges.push_back(edge_named(expect(Tok::ident, "edge name")));
    }
    try {
      return Path::from_edges(g_, std::move(edges));
    } catch (const DomainError& e) {
      throw ParseError(1, first.column, e.what());
    }
  }

  std::vector<EdgeId> edge_list() {
    std::vector<EdgeId> out{edge_named(expect(Tok::ident, "edge name"))};
    while (accept(Tok::comma)) {
      out.push_back(edge_named(expect(Tok::ident, "edge name")));
    }
    return out;
  }

  EdgeId edge_named(const Token& t) const {
    if (auto e = g_.find_edge(t.text)) {
      return *e;
    }
    throw ParseError(1, t.column, "unknown edge " + t.text);
  }

  const Graph& g_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

class LeavittParser : public Parser {
 public:
  LeavittParser(GraphPtr graph, Ring ring, std::string_view text)
      : Parser(*graph, text), graph_(std::move(graph)), ring_(ring) {}

  LeavittElement parse() {
    LeavittElement x = expr();
    expect_end();
    return x;
  }

 private:
  LeavittElement expr() {
    LeavittElement sum(graph_, ring_);
    bool negate = false;
    if (at(Tok::minus) || at(Tok::plus)) {
      negate = take().kind == Tok::minus;
    }
    for (;;) {
      LeavittElement t = term();
      sum = negate ? sum - t : sum + t;
      if (at(Tok::plus) || at(Tok::minus)) {
        negate = take().kind == Tok::minus;
      } else {
        return sum;
      }
    }
  }

  bool factor_start() const { return at(Tok::ident) || at(Tok::lparen); }

  LeavittElement term() {
    std::optional<Scalar> coeff;
    if (at(Tok::number)) {
      coeff = coefficient(ring_);
    }
    if (!factor_start()) {
      if (!coeff) {
        fail("expected term");
      }
      return scale(*coeff, vertex_sum(graph_, ring_, g_.vertices()));
    }
    LeavittElement prod = factor();
    while (factor_start()) {
      prod = prod * factor();
    }
    return coeff ? scale(*coeff, prod) : prod;
  }

  LeavittElement factor() {
    LeavittElement x(graph_, ring_);
    if (accept(Tok::lparen)) {
      x = expr();
      expect(Tok::rparen, "')'");
    } else {
      const Token id = take();
      if (auto v = g_.find_vertex(id.text)) {
        x = LeavittElement::vertex(graph_, ring_, *v);
      } else if (auto e = g_.find_edge(id.text)) {
        x = LeavittElement::edge(graph_, ring_, *e);
      } else {
        throw ParseError(1, id.column, "unknown identifier " + id.text);
      }
    }
    while (accept(Tok::star)) {
      x = involution(x);
    }
    return x;
  }

  GraphPtr graph_;
  Ring ring_;
};

class SteinbergParser : public Parser {
 public:
  SteinbergParser(GraphPtr graph, Ring ring, std::string_view text)
      : Parser(*graph, text), graph_(std::move(graph)), ring_(ring) {}

  SteinbergElement parse() {
    SteinbergElement f(graph_, ring_);
    bool negate = false;
    if (at(Tok::minus) || at(Tok::plus)) {
      negate = take().kind == Tok::minus;
    }
    for (;;) {
      term(f, negate);
      if (at(Tok::plus) || at(Tok::minus)) {
        negate = take().kind == Tok::minus;
      } else {
        break;
      }
    }
    expect_end();
    return f;
  }

 private:
  void term(SteinbergElement& f, bool negate) {
    Scalar coeff = Scalar::one(ring_);
    if (at(Tok::number)) {
      coeff = coefficient(ring_);
      if (!accept(Tok::star)) {
        if (coeff.is_zero()) {
          return;
        }
        fail("expected '*'");
      }
    }
    const Token z = expect(Tok::ident, "atom Z(...)");
    if (z.text != "Z") {
      throw ParseError(1, z.column, "expected atom Z(...)");
    }
    expect(Tok::lparen, "'('");
    const std::size_t col = peek().column;
    Path alpha = path();
    expect(Tok::pipe, "'|'");
    Path beta = path();
    std::vector<EdgeId> excluded;
    if (accept(Tok::backslash)) {
      expect(Tok::lbrace, "'{'");
      excluded = edge_list();
      expect(Tok::rbrace, "'}'");
    }
    expect(Tok::rparen, "')'");
    try {
      BisectionAtom atom = BisectionAtom::make(g_, alpha, beta, excluded);
      f.add_term(negate ? -coeff : coeff, atom);
    } catch (const DomainError& e) {
      throw ParseError(1, col, e.what());
    }
  }

  GraphPtr graph_;
  Ring ring_;
};

std::vector<std::pair<std::string, std::size_t>> split_words(std::string_view line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    out.emplace_back(std::string(line.substr(i, j - i)), i + 1);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto words = split_words(line);
    if (words.empty()) {
      continue;
    }
    const auto& [directive, dcol] = words.front();
    auto arity = [&](std::size_t n) {
      if (words.size() != n + 1) {
        throw ParseError(line_no, dcol,
                         "expected " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
      }
      for (std::size_t k = 1; k < words.size(); ++k) {
        if (!is_identifier(words[k].first)) {
          throw ParseError(line_no, words[k].second, "invalid name " + words[k].first);
        }
      }
    };
    auto vertex = [&](std::size_t k) {
      if (auto v = g.find_vertex(words[k].first)) {
        return *v;
      }
      throw ParseError(line_no, words[k].second, "unknown vertex " + words[k].first);
    };
    try {
      if (directive == "vertex") {
        arity(1);
        g.add_vertex(words[1].first);
      } else if (directive == "edge") {
        arity(3);
        g.add_edge(words[1].first, vertex(2), vertex(3));
      } else if (directive == "singular") {
        arity(1);
        g.declare_singular(vertex(1));
      } else {
        throw ParseError(line_no, dcol, "unknown directive " + directive);
      }
    } catch (const DomainError& e) {
      throw ParseError(line_no, words.size() > 1 ? words[1].second : dcol, e.what());
    }
  }
  return g;
}

std::string render_graph(const Graph& g) {
  std::string out;
  for (VertexId v : g.vertices()) {
    out += "vertex " + g.name(v) + "\n";
  }
  for (EdgeId e : g.edges()) {
    out += "edge " + g.name(e) + " " + g.name(g.source(e)) + " " + g.name(g.range(e)) + "\n";
  }
  for (VertexId v : g.vertices()) {
    if (g.declared_singular(v)) {
      out += "singular " + g.name(v) + "\n";
    }
  }
  return out;
}

Ring parse_ring(std::string_view text) {
  if (text == "int") {
    return Ring::integers();
  }
  if (text == "rat") {
    return Ring::rationals();
  }
  if (text.starts_with("mod:")) {
    std::string_view digits = text.substr(4);
    bool ok = !digits.empty() && digits.size() <= 18;
    for (char c : digits) {
      ok = ok && std::isdigit(static_cast<unsigned char>(c));
    }
    if (ok) {
      const std::uint64_t n = std::stoull(std::string(digits));
      if (n >= 2) {
        return Ring::integers_mod(n);
      }
    }
    throw ParseError(1, 5, "modulus must be an integer >= 2");
  }
  throw ParseError(1, 1, "unknown ring " + std::string(text) + " (expected int, rat or mod:<n>)");
}

LeavittElement parse_leavitt(GraphPtr graph, Ring ring, std::string_view text) {
  return LeavittParser(std::move(graph), ring, text).parse();
}

SteinbergElement parse_steinberg(GraphPtr graph, Ring ring, std::string_view text) {
  return SteinbergParser(std::move(graph), ring, text).parse();
}

Path parse_path(const Graph& g, std::string_view text) {
  Parser p(g, text);
  Path out = p.path();
  p.expect_end();
  return out;
}

BoundaryPath parse_boundary_path(const Graph& g, std::string_view text) {
  Parser p(g, text);
  std::optional<Path> prefix;
  if (!p.at(Tok::semicolon)) {
    prefix = p.path();
  }
  if (!p.accept(Tok::semicolon)) {
    p.expect_end();
    try {
      return BoundaryPath::finite(g, *prefix);
    } catch (const DomainError& e) {
      throw ParseError(1, 1, e.what());
    }
  }
  p.expect(Tok::lparen, "'('");
  const std::size_t col = p.peek().column;
  std::vector<EdgeId> cycle_edges = p.edge_list();
  p.expect(Tok::rparen, "')'");
  p.expect_end();
  try {
    Path cycle = Path::from_edges(g, std::move(cycle_edges));
    if (!prefix) {
      prefix = Path::vertex(cycle.source());
    }
    return BoundaryPath::lasso(g, *prefix, cycle);
  } catch (const DomainError& e) {
    throw ParseError(1, col, e.what());
  }
}

}  // namespace pathalg::cli
