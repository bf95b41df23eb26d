#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "paq/coxeter.hpp"
#include "paq/matrix.hpp"
#include "paq/path_algebra.hpp"

namespace paq {

namespace detail {

inline bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool is_vertex_atom(std::string_view name) {
    if (name.size() < 2 || name[0] != 'v') return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Element expressions:  expr := term (('+'|'-') term)*
//                       term := factor ('*' factor)*
//                       factor := ['-'] atom
//                       atom := rational | 'v'INT | NAME | '~'NAME | '(' expr ')'
// Rationals are `a` or `a/b`; `v<i>` is the length-0 path at vertex i; a bare
// name is an edge in its stored direction, `~name` the reversed one.

class ExprParser {
  public:
    ExprParser(std::string_view text, GraphPtr g) : text_(text), graph_(std::move(g)) {}

    PathAlgebraElement parse() {
        skip_space();
        PathAlgebraElement r = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(0, "column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    PathAlgebraElement expr() {
        PathAlgebraElement r = term();
        while (true) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }

    PathAlgebraElement term() {
        PathAlgebraElement r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }

    PathAlgebraElement factor() {
        if (eat('-')) return Rational(-1) * atom();
        return atom();
    }

    PathAlgebraElement atom() {
        const char c = peek();
        if (c == '(') {
            eat('(');
            PathAlgebraElement r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '~') {
            eat('~');
            const std::string name = read_name();
            return PathAlgebraElement::edge(graph_, DirectedEdge{edge_index(name), false});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number() * unit(graph_);
        if (detail::is_name_start(c)) {
            const std::string name = read_name();
            if (detail::is_vertex_atom(name)) {
                const int i = std::stoi(name.substr(1));
                if (i < 1 || i > graph_->vertex_count()) fail("vertex " + name + " out of range");
                return PathAlgebraElement::vertex(graph_, i);
            }
            return PathAlgebraElement::edge(graph_, DirectedEdge{edge_index(name), true});
        }
        fail("expected a rational, vertex, edge or '('");
    }

    int edge_index(const std::string& name) {
        if (!graph_->has_edge(name)) fail("unknown edge '" + name + "'");
        return graph_->edge_index(name);
    }

    std::string read_name() {
        skip_space();
        if (pos_ >= text_.size() || !detail::is_name_start(text_[pos_])) fail("expected a name");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && detail::is_name_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational parse_number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected digits after '/'");
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        return parse_rational(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    GraphPtr graph_;
    std::size_t pos_ = 0;
};

inline PathAlgebraElement parse_element(const GraphPtr& g, std::string_view text) {
    return ExprParser(text, g).parse();
}

// ---------------------------------------------------------------------------
// Graph files: line-based, '#' comments, order-insensitive apart from edges.
//   vertices <N>
//   root <i>              (optional, default 1)
//   edge <name> <i> <j>
//   poly <name> <c0> <c1> ... <cd>

struct ParsedGraph {
    GraphPtr graph;
    PolyFamily fam;
    int root = 1;
    bool has_polys = false;
};

namespace detail {

inline std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        lines.push_back(std::move(tokens));
    }
    return lines;
}

inline int parse_int(const std::string& tok, int lineno, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineno, "bad " + what + " '" + tok + "'");
    }
}

inline void check_edge_name(const std::string& name, int lineno) {
    if (!is_name_start(name[0])) throw ParseError(lineno, "bad edge name '" + name + "'");
    for (char c : name)
        if (!is_name_char(c)) throw ParseError(lineno, "bad edge name '" + name + "'");
    if (is_vertex_atom(name))
        throw ParseError(lineno, "edge name '" + name + "' is reserved for vertex atoms");
}

}  // namespace detail

inline ParsedGraph parse_graph_file(const std::string& text) {
    const auto lines = detail::tokenize_lines(text);

    int vertex_count = -1;
    std::optional<int> root;
    std::vector<GeometricEdge> edges;
    std::vector<std::pair<int, std::vector<std::string>>> poly_lines;

    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto& toks = lines[k];
        const int lineno = static_cast<int>(k) + 1;
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "vertices") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: vertices <N>");
            if (vertex_count != -1) throw ParseError(lineno, "duplicate vertices line");
            vertex_count = detail::parse_int(toks[1], lineno, "vertex count");
            if (vertex_count < 1) throw ParseError(lineno, "vertex count must be positive");
        } else if (head == "root") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: root <i>");
            if (root) throw ParseError(lineno, "duplicate root line");
            root = detail::parse_int(toks[1], lineno, "root");
        } else if (head == "edge") {
            if (toks.size() != 4) throw ParseError(lineno, "expected: edge <name> <i> <j>");
            detail::check_edge_name(toks[1], lineno);
            edges.push_back({toks[1], detail::parse_int(toks[2], lineno, "vertex"),
                             detail::parse_int(toks[3], lineno, "vertex")});
        } else if (head == "poly") {
            if (toks.size() < 3)
                throw ParseError(lineno, "expected: poly <name> <c0> <c1> ...");
            poly_lines.push_back({lineno, toks});
        } else {
            throw ParseError(lineno, "unknown directive '" + head + "'");
        }
    }
    if (vertex_count == -1) throw ParseError(0, "missing vertices line");

    ParsedGraph out;
    try {
        out.graph = make_graph(vertex_count, std::move(edges));
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
    out.root = root.value_or(1);
    if (out.root < 1 || out.root > vertex_count) throw ParseError(0, "root out of range");

    out.fam = PolyFamily(out.graph);
    std::set<std::string> seen;
    for (const auto& [lineno, toks] : poly_lines) {
        out.has_polys = true;
        if (!out.graph->has_edge(toks[1]))
            throw ParseError(lineno, "poly for unknown edge '" + toks[1] + "'");
        if (!seen.insert(toks[1]).second)
            throw ParseError(lineno, "duplicate poly for edge '" + toks[1] + "'");
        std::vector<Rational> coeffs;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            try {
                coeffs.push_back(parse_rational(toks[i]));
            } catch (const Error&) {
                throw ParseError(lineno, "bad rational '" + toks[i] + "'");
            }
        }
        try {
            out.fam.set(toks[1], Poly(std::move(coeffs)));
        } catch (const PropertyFViolationError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coxeter files:
//   rank <N>
//   m <i> <j> <k|inf>     (i < j; unspecified pairs default to 2)

inline CoxeterMatrix parse_coxeter_file(const std::string& text) {
    const auto lines = detail::tokenize_lines(text);

    int rank = -1;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto& toks = lines[k];
        if (!toks.empty() && toks[0] == "rank") {
            if (toks.size() != 2)
                throw ParseError(static_cast<int>(k) + 1, "expected: rank <N>");
            if (rank != -1) throw ParseError(static_cast<int>(k) + 1, "duplicate rank line");
            rank = detail::parse_int(toks[1], static_cast<int>(k) + 1, "rank");
        }
    }
    if (rank < 1) throw ParseError(0, "missing or bad rank line");

    CoxeterMatrix cm(rank);
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto& toks = lines[k];
        const int lineno = static_cast<int>(k) + 1;
        if (toks.empty() || toks[0] == "rank") continue;
        if (toks[0] != "m") throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        if (toks.size() != 4) throw ParseError(lineno, "expected: m <i> <j> <k|inf>");
        const int i = detail::parse_int(toks[1], lineno, "index");
        const int j = detail::parse_int(toks[2], lineno, "index");
        if (i >= j) throw ParseError(lineno, "entries must have i < j");
        if (!seen.insert({i, j}).second) throw ParseError(lineno, "duplicate entry");
        const int m = toks[3] == "inf" ? kCoxeterInfinity
                                       : detail::parse_int(toks[3], lineno, "entry");
        try {
            cm.set(i, j, m);
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return cm;
}

// ---------------------------------------------------------------------------
// Display-grammar parsers for free product elements and matrices, so printed
// output can be read back. Letters are t[edge]^k, z[edge]^k, w[edge]:xxbar...
// joined by a middle dot (or '*'); terms are joined by '+'/'-'.

class FpElementParser {
  public:
    FpElementParser(std::string_view text, FactorUniversePtr uni)
        : text_(text), uni_(std::move(uni)) {}

    FreeProductElement parse() {
        skip_space();
        FreeProductElement r = FreeProductElement::zero(uni_);
        bool negative = consume_sign();
        while (true) {
            r = r + (negative ? Rational(-1) : Rational(1)) * term();
            skip_space();
            if (pos_ == text_.size()) return r;
            if (eat('+'))
                negative = false;
            else if (eat('-'))
                negative = true;
            else
                fail("expected '+', '-' or end of element");
        }
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(0, "column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool consume_sign() { return eat('-'); }

    // the middle dot U+00B7 (0xC2 0xB7) or '*'
    bool eat_dot() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            return true;
        }
        if (pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xc2 &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0xb7) {
            pos_ += 2;
            return true;
        }
        return false;
    }

    FreeProductElement term() {
        skip_space();
        Rational coef(1);
        bool have_coef = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coef = number();
            have_coef = true;
        }
        std::vector<Letter> letters;
        if (!have_coef || eat_dot()) {
            letters.push_back(letter());
            while (eat_dot()) letters.push_back(letter());
        }
        return FreeProductElement::word(uni_, Word::checked(*uni_, std::move(letters)), coef);
    }

    Rational number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        return parse_rational(std::string(text_.substr(start, pos_ - start)));
    }

    Letter letter() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected a letter");
        const char sym = text_[pos_++];
        if (sym != 't' && sym != 'z' && sym != 'w') fail("expected 't', 'z' or 'w'");
        if (!eat('[')) fail("expected '['");
        std::string edge;
        while (pos_ < text_.size() && text_[pos_] != ']') edge += text_[pos_++];
        if (!eat(']')) fail("expected ']'");
        const int factor = find_factor(sym, edge);
        if (sym == 'w') {
            if (!eat(':')) fail("expected ':'");
            std::string xw;
            while (pos_ < text_.size()) {
                if (text_[pos_] != 'x') break;
                if (text_.substr(pos_, 4) == "xbar") {
                    xw += 'X';
                    pos_ += 4;
                } else {
                    xw += 'x';
                    ++pos_;
                }
            }
            if (xw.empty()) fail("expected x or xbar");
            return xword_letter(factor, std::move(xw));
        }
        if (!eat('^')) fail("expected '^'");
        bool neg = eat('-');
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected an exponent");
        const long long k = std::stoll(std::string(text_.substr(start, pos_ - start)));
        return Letter{factor, neg ? -k : k, {}};
    }

    int find_factor(char sym, const std::string& edge) {
        for (int f = 0; f < uni_->count(); ++f) {
            const Factor& fac = uni_->factor(f);
            if (fac.edge_name != edge) continue;
            if (sym == 't' && fac.kind == FactorKind::PolyQuotient) return f;
            if (sym == 'z' && fac.kind == FactorKind::Laurent) return f;
            if (sym == 'w' && fac.kind == FactorKind::FreeTwoVars) return f;
        }
        fail(std::string("no factor ") + sym + "[" + edge + "]");
    }

    std::string_view text_;
    FactorUniversePtr uni_;
    std::size_t pos_ = 0;
};

inline FreeProductElement parse_fp_element(const FactorUniversePtr& uni,
                                           std::string_view text) {
    return FpElementParser(text, uni).parse();
}

inline MatrixElement parse_matrix(const FactorUniversePtr& uni, const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto open = line.find('[');
        const auto close = line.rfind(']');
        if (open == std::string::npos || close == std::string::npos || close <= open)
            throw ParseError(0, "matrix row must be bracketed");
        std::vector<std::string> entries;
        std::string cell;
        for (char c : line.substr(open + 1, close - open - 1)) {
            if (c == ',') {
                entries.push_back(cell);
                cell.clear();
            } else {
                cell += c;
            }
        }
        entries.push_back(cell);
        rows.push_back(std::move(entries));
    }
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw ParseError(0, "empty matrix");
    MatrixElement m(uni, n);
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != n)
            throw ParseError(0, "matrix is not square");
        for (int j = 1; j <= n; ++j)
            m.at(i, j) =
                parse_fp_element(uni, rows[static_cast<std::size_t>(i - 1)]
                                          [static_cast<std::size_t>(j - 1)]);
    }
    return m;
}

}  // namespace paq
