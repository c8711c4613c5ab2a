#include "nilcomm/tabledsl.hpp"

#include "nilcomm/cohomology.hpp"
#include "nilcomm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace nilcomm {

namespace {

enum class Tok { ident, number, string, sym, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t col;  // 1-based
};

std::vector<Token> lex(const std::string& s, std::size_t line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t col = i + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '-')) {
                // '-' is part of keywords like h2d-basis only when followed by a letter
                if (s[j] == '-' && !(j + 1 < s.size() && std::isalpha(static_cast<unsigned char>(s[j + 1])) &&
                                     out.empty()))
                    break;
                ++j;
            }
            out.push_back({Tok::ident, s.substr(i, j - i), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::number, s.substr(i, j - i), col});
            i = j;
        } else if (c == '"') {
            std::string v;
            std::size_t j = i + 1;
            bool closed = false;
            while (j < s.size()) {
                if (s[j] == '\\' && j + 1 < s.size()) {
                    v += s[j + 1];
                    j += 2;
                } else if (s[j] == '"') {
                    closed = true;
                    ++j;
                    break;
                } else {
                    v += s[j++];
                }
            }
            if (!closed) throw ParseError(line, col, "unterminated string");
            out.push_back({Tok::string, v, col});
            i = j;
        } else if (c == '!' && i + 1 < s.size() && s[i + 1] == '=') {
            out.push_back({Tok::sym, "!=", col});
            i += 2;
        } else if (std::string("+-*/^()[],;:=").find(c) != std::string::npos) {
            out.push_back({Tok::sym, std::string(1, c), col});
            ++i;
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::end, "", s.size() + 1});
    return out;
}

std::optional<std::size_t> basis_index(const std::string& id) {
    static const std::regex re("e([1-9][0-9]*)");
    std::smatch m;
    if (std::regex_match(id, m, re)) return std::stoul(m[1]) - 1;
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> delta_index(const std::string& id) {
    static const std::regex re("D([1-9])([1-9])");
    std::smatch m;
    if (std::regex_match(id, m, re)) return std::make_pair(std::stoul(m[1]) - 1, std::stoul(m[2]) - 1);
    return std::nullopt;
}

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> r{"to", "at", "by", "maps", "spans", "eta", "zeta", "true", "false"};
    return r;
}

class LineParser {
public:
    LineParser(std::vector<Token> toks, std::size_t line, RingPtr ring, std::size_t dim)
        : toks_(std::move(toks)), line_(line), ring_(std::move(ring)), dim_(dim) {}

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool at_end() const { return peek().kind == Tok::end; }
    bool is_sym(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::sym && peek(k).text == s; }
    bool is_word(const char* s) const { return peek().kind == Tok::ident && peek().text == s; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, peek().col, msg); }
    [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { throw ParseError(line_, t.col, msg); }

    void expect_sym(const char* s) {
        if (!is_sym(s)) fail(std::string("expected '") + s + "'");
        next();
    }
    std::string expect_ident(const std::string& what) {
        if (peek().kind != Tok::ident) fail("expected " + what);
        return next().text;
    }
    std::size_t expect_number(const std::string& what) {
        if (peek().kind != Tok::number) fail("expected " + what);
        Token t = next();
        try {
            return std::stoul(t.text);
        } catch (...) {
            fail_at(t, "number out of range");
        }
    }
    void expect_end() {
        if (!at_end()) fail("unexpected '" + peek().text + "'");
    }
    bool parse_bool() {
        if (is_word("true")) {
            next();
            return true;
        }
        if (is_word("false")) {
            next();
            return false;
        }
        fail("expected true or false");
    }

    void set_ring(RingPtr r) { ring_ = std::move(r); }
    void set_dim(std::size_t d) { dim_ = d; }

    // Number of ';' separators ahead, stopping at the keyword 'at'.
    std::size_t count_list_separators() const {
        std::size_t c = 0;
        for (std::size_t k = pos_; k < toks_.size(); ++k) {
            const Token& t = toks_[k];
            if (t.kind == Tok::end || (t.kind == Tok::ident && t.text == "at")) break;
            if (t.kind == Tok::sym && t.text == ";") ++c;
        }
        return c;
    }
    const RingPtr& ring() const { return ring_; }

    Poly parse_expr() {
        bool neg = false;
        if (is_sym("-") || is_sym("+")) neg = next().text == "-";
        Poly acc = parse_term();
        if (neg) acc = -acc;
        while (is_sym("+") || is_sym("-")) {
            bool minus = next().text == "-";
            Poly t = parse_term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    // Products and quotients by constants; stops before a basis or Delta token.
    Poly parse_term() {
        Poly acc = parse_power();
        while (is_sym("*") || is_sym("/")) {
            if (is_sym("*") && peek(1).kind == Tok::ident &&
                (basis_index(peek(1).text) || delta_index(peek(1).text)))
                break;
            bool div = next().text == "/";
            Token at = peek();
            Poly f = parse_power();
            if (div) {
                if (!f.is_constant() || f.is_zero()) fail_at(at, "division only by nonzero constants");
                acc *= f.constant().inverse();
            } else {
                acc *= f;
            }
        }
        return acc;
    }

    Poly parse_power() {
        if (is_sym("-")) {
            next();
            return -parse_power();
        }
        Poly base = parse_primary();
        if (is_sym("^")) {
            next();
            std::size_t e = expect_number("exponent");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly parse_primary() {
        const Token& t = peek();
        if (t.kind == Tok::number) {
            next();
            return Poly(ring_, Rational(t.text));
        }
        if (is_sym("(")) {
            next();
            Poly p = parse_expr();
            expect_sym(")");
            return p;
        }
        if (t.kind == Tok::ident) {
            Token id = next();
            if (id.text == "eta" || id.text == "zeta") {
                expect_sym("(");
                std::size_t k = expect_number("root order");
                expect_sym(")");
                if (k == 0) fail_at(id, "root order must be positive");
                try {
                    if (id.text == "eta") return Poly(ring_, Cyclotomic::eta(static_cast<unsigned>(k), ring_->order));
                    if (ring_->order % k != 0) fail_at(id, "zeta order does not divide the field order");
                    return Poly(ring_, Cyclotomic::zeta(static_cast<unsigned>(k)).embed(ring_->order));
                } catch (const RingMismatch& e) {
                    fail_at(id, e.what());
                }
            }
            if (basis_index(id.text) || delta_index(id.text)) fail_at(id, "basis symbol '" + id.text + "' in coefficient");
            if (id.text == "i") fail_at(id, "'i' is not allowed; write zeta(4)");
            auto idx = ring_->index_of(id.text);
            if (!idx) fail_at(id, "unknown parameter '" + id.text + "'");
            return Poly::var(ring_, *idx);
        }
        fail("expected a coefficient expression");
    }

    // Sum of "[COEFF] e_k" (basis) or "[COEFF] D_ij" (Delta) terms; "0" is the empty sum.
    PolyVec parse_linear(bool delta) {
        std::size_t len = delta ? sym_dim(dim_) : dim_;
        PolyVec out = zero_polyvec(ring_, len);
        if (peek().kind == Tok::number && peek().text == "0" && !is_sym("*", 1) && !is_sym("/", 1) &&
            peek(1).kind != Tok::ident) {
            next();
            return out;
        }
        bool first = true;
        while (true) {
            bool neg = false;
            if (is_sym("+") || is_sym("-")) {
                neg = next().text == "-";
            } else if (!first) {
                break;
            }
            first = false;
            Poly coeff(ring_, 1);
            bool is_basis = peek().kind == Tok::ident &&
                            (delta ? delta_index(peek().text).has_value() : basis_index(peek().text).has_value());
            if (!is_basis) {
                coeff = parse_term();
                if (is_sym("*")) next();
            }
            Token b = peek();
            if (b.kind != Tok::ident) fail(delta ? "expected a Delta symbol like D12" : "expected a basis symbol like e3");
            std::size_t pos;
            if (delta) {
                auto d = delta_index(b.text);
                if (!d) fail(std::string("expected a Delta symbol like D12, got '") + b.text + "'");
                if (d->first >= dim_ || d->second >= dim_) fail("Delta index out of range for dimension " + std::to_string(dim_));
                pos = pair_index(d->first, d->second, dim_);
            } else {
                auto k = basis_index(b.text);
                if (!k) fail(std::string("expected a basis symbol like e3, got '") + b.text + "'");
                if (*k >= dim_) fail("basis index out of range for dimension " + std::to_string(dim_));
                pos = *k;
            }
            next();
            if (neg)
                out[pos] -= coeff;
            else
                out[pos] += coeff;
        }
        return out;
    }

    std::vector<PolyVec> parse_cocycle_list() {
        std::vector<PolyVec> out{parse_linear(true)};
        while (is_sym(";")) {
            next();
            out.push_back(parse_linear(true));
        }
        return out;
    }

    // NAME [ "(" lhs != rhs, ... ")" ] ... up to ':' or the end of the line.
    // Names already in use (entry parameters) may not be declared again.
    std::vector<std::string> scan_decl_names(const std::vector<std::string>& taken = {}) const {
        std::vector<std::string> names;
        int depth = 0;
        for (std::size_t k = pos_; k < toks_.size(); ++k) {
            const Token& t = toks_[k];
            if (t.kind == Tok::end) break;
            if (t.kind == Tok::sym && t.text == "(") ++depth;
            if (t.kind == Tok::sym && t.text == ")") --depth;
            if (depth == 0 && t.kind == Tok::sym && (t.text == ":" || t.text == "[")) break;
            if (depth == 0 && t.kind == Tok::ident) {
                if (std::find(names.begin(), names.end(), t.text) != names.end() ||
                    std::find(taken.begin(), taken.end(), t.text) != taken.end())
                    fail_at(t, "duplicate parameter '" + t.text + "'");
                names.push_back(t.text);
            }
        }
        return names;
    }

    std::vector<ParamDecl> parse_decls() {
        std::vector<ParamDecl> out;
        while (peek().kind == Tok::ident) {
            Token t = next();
            if (reserved_words().count(t.text) || basis_index(t.text) || delta_index(t.text) || t.text == "i")
                fail_at(t, "'" + t.text + "' cannot be used as a parameter name");
            ParamDecl d{t.text, {}};
            if (is_sym("(")) {
                next();
                while (true) {
                    Poly lhs = parse_expr();
                    expect_sym("!=");
                    Poly rhs = parse_expr();
                    if ((lhs - rhs).is_zero()) fail("constraint is identically zero");
                    d.constraints.emplace_back(lhs, rhs);
                    if (is_sym(",")) {
                        next();
                        continue;
                    }
                    expect_sym(")");
                    break;
                }
            }
            out.push_back(std::move(d));
        }
        return out;
    }

    Matrix parse_matrix() {
        expect_sym("[");
        std::vector<std::vector<Poly>> rows(1);
        while (true) {
            rows.back().push_back(parse_expr());
            if (is_sym(",")) {
                next();
            } else if (is_sym(";")) {
                next();
                rows.emplace_back();
            } else {
                expect_sym("]");
                break;
            }
        }
        if (rows.size() != dim_) fail("matrix must have " + std::to_string(dim_) + " rows");
        Matrix m(ring_, dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (rows[i].size() != dim_) fail("matrix row " + std::to_string(i + 1) + " must have " + std::to_string(dim_) + " entries");
            for (std::size_t j = 0; j < dim_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    // NAME=VALUE, NAME=VALUE over the given names; values are constants.
    Assignment parse_assignment(const std::vector<std::string>& allowed) {
        Assignment a;
        while (true) {
            Token name = peek();
            std::string id = expect_ident("a parameter name");
            if (std::find(allowed.begin(), allowed.end(), id) == allowed.end())
                fail_at(name, "'" + id + "' is not a parameter here");
            if (a.count(id)) fail_at(name, "'" + id + "' assigned twice");
            expect_sym("=");
            Token vt = peek();
            Poly v = parse_expr();
            if (!v.is_constant()) fail_at(vt, "assigned value must be a constant");
            a.emplace(id, v.constant());
            if (!is_sym(",")) break;
            next();
        }
        return a;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
    RingPtr ring_;
    std::size_t dim_;
};

struct SourceLine {
    std::size_t number;
    std::string text;
    std::size_t indent = 0;  // characters trimmed from the left
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

unsigned scan_order(const std::vector<SourceLine>& lines) {
    static const std::regex root_re("(?:^|[^A-Za-z0-9_])(eta|zeta)\\s*\\(\\s*([0-9]+)\\s*\\)");
    static const std::regex field_re("^field\\s+([0-9]+)\\s*$");
    unsigned order = 1;
    for (const auto& l : lines) {
        std::smatch fm;
        if (std::regex_match(l.text, fm, field_re)) {
            unsigned m = static_cast<unsigned>(std::stoul(fm[1]));
            if (m == 0) throw ParseError(l.number, 7, "field order must be positive");
            order = lcm_order(order, m);
        }
        for (auto it = std::sregex_iterator(l.text.begin(), l.text.end(), root_re); it != std::sregex_iterator(); ++it) {
            unsigned k = static_cast<unsigned>(std::stoul((*it)[2]));
            if (k == 0) continue;
            order = lcm_order(order, (*it)[1] == "eta" ? 2 * k : k);
        }
    }
    return order;
}

bool starts_with_word(const std::string& s, const std::string& w) {
    return s.rfind(w, 0) == 0 && (s.size() == w.size() || s[w.size()] == ' ' || s[w.size()] == '\t');
}

Presentation parse_entry(const std::vector<SourceLine>& lines) {
    Presentation p;
    const SourceLine& head = lines.front();
    p.line = head.number;
    {
        std::istringstream is(head.text);
        std::string kw, name, dimkw, dimval, extra;
        is >> kw >> name >> dimkw >> dimval;
        if (kw != "algebra") throw ParseError(head.number, 1, "entry must start with 'algebra NAME dim N'");
        if (name.empty()) throw ParseError(head.number, 9, "missing algebra name");
        if (dimkw != "dim") throw ParseError(head.number, head.text.find(name) + name.size() + 2, "expected 'dim'");
        if (dimval.empty() || dimval.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(head.number, head.text.rfind(dimval) + 1, "expected a dimension");
        if (is >> extra) throw ParseError(head.number, head.text.rfind(extra) + 1, "unexpected text after dimension");
        p.name = name;
        p.dim = std::stoul(dimval);
        if (p.dim > 9) throw ParseError(head.number, head.text.rfind(dimval) + 1, "dimension above 9 is not supported");
    }
    unsigned order = scan_order(lines);
    p.ring = make_ring({}, order);

    bool in_expect = false;
    bool seen_params = false;
    bool seen_eq = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const SourceLine& l = lines[li];
        const std::string& s = l.text;
        if (s == "expect") {
            if (in_expect) throw ParseError(l.number, 1, "duplicate expect block");
            in_expect = true;
            p.expect.emplace();
            continue;
        }
        LineParser lp(lex(s, l.number), l.number, p.ring, p.dim);
        std::string kw = lp.peek().kind == Tok::ident ? lp.peek().text : "";
        if (!in_expect) {
            if (kw == "source" || kw == "note") {
                lp.next();
                if (lp.peek().kind != Tok::string) lp.fail("expected a quoted string");
                std::string v = lp.next().text;
                lp.expect_end();
                if (kw == "source") {
                    if (p.source) throw ParseError(l.number, 1, "duplicate source line");
                    p.source = v;
                } else {
                    p.notes.push_back(v);
                }
            } else if (kw == "field") {
                lp.next();
                lp.expect_number("field order");
                lp.expect_end();
            } else if (kw == "params") {
                if (seen_params) throw ParseError(l.number, 1, "duplicate params line");
                if (seen_eq) throw ParseError(l.number, 1, "params must precede the equations");
                seen_params = true;
                lp.next();
                auto names = lp.scan_decl_names();
                p.ring = make_ring(names, order);
                lp.set_ring(p.ring);
                p.params = lp.parse_decls();
                lp.expect_end();
            } else if (basis_index(kw)) {
                seen_eq = true;
                Token lt = lp.next();
                std::size_t i = *basis_index(lt.text);
                lp.expect_sym("*");
                Token rt = lp.peek();
                std::string rid = lp.expect_ident("a basis symbol");
                auto j = basis_index(rid);
                if (!j) lp.fail_at(rt, "expected a basis symbol like e2");
                if (i >= p.dim) lp.fail_at(lt, "basis index out of range for dimension " + std::to_string(p.dim));
                if (*j >= p.dim) lp.fail_at(rt, "basis index out of range for dimension " + std::to_string(p.dim));
                lp.expect_sym("=");
                PolyVec rhs = lp.parse_linear(false);
                lp.expect_end();
                auto key = std::make_pair(std::min(i, *j), std::max(i, *j));
                if (p.equations.count(key))
                    lp.fail_at(lt, "second equation for the pair e" + std::to_string(key.first + 1) + "*e" +
                                       std::to_string(key.second + 1));
                p.equations.emplace(key, std::move(rhs));
            } else {
                lp.fail("unrecognized line");
            }
            continue;
        }

        Expectations& ex = *p.expect;
        if (kw.empty()) lp.fail("expected an expectation keyword");
        lp.next();
        if (kw == "cd") {
            ex.cd = lp.parse_bool();
        } else if (kw == "h2-equal") {
            ex.h2_equal = lp.parse_bool();
        } else if (kw == "ann") {
            ex.ann = lp.expect_number("annihilator dimension");
        } else if (kw == "h2c") {
            ex.h2c = lp.expect_number("dimension");
        } else if (kw == "h2d") {
            ex.h2d = lp.expect_number("dimension");
        } else if (kw == "h2d-basis") {
            ex.h2d_basis = lp.parse_cocycle_list();
        } else if (kw == "h2c-basis") {
            ex.h2c_basis = lp.parse_cocycle_list();
        } else if (kw == "extends") {
            ExtensionClaim c;
            c.base = lp.expect_ident("a base algebra name");
            if (!lp.is_word("by")) lp.fail("expected 'by'");
            lp.next();
            std::size_t s_count = 1 + lp.count_list_separators();
            if (s_count >= p.dim) lp.fail("extension adds at least as many vectors as the entry dimension");
            lp.set_dim(p.dim - s_count);
            c.cocycles = lp.parse_cocycle_list();
            lp.set_dim(p.dim);
            if (lp.is_word("at")) {
                lp.next();
                c.at = lp.parse_assignment(p.param_names());
            }
            ex.extends.push_back(std::move(c));
        } else if (kw == "automorphism") {
            auto names = lp.scan_decl_names(p.param_names());
            RingPtr ring = extend_ring(p.ring, names);
            lp.set_ring(ring);
            auto vars = lp.parse_decls();
            lp.expect_sym(":");
            Matrix m = lp.parse_matrix();
            std::vector<Assignment> samples;
            if (lp.is_word("at")) {
                lp.next();
                samples.push_back(lp.parse_assignment(names));
                while (lp.is_sym(";")) {
                    lp.next();
                    samples.push_back(lp.parse_assignment(names));
                }
            }
            ex.automorphisms.push_back({std::move(vars), ring, std::move(m), std::move(samples)});
        } else if (kw == "witness") {
            WitnessAnnotation w;
            if (lp.is_word("unverifiable")) {
                lp.next();
                if (lp.peek().kind != Tok::string) lp.fail("expected a quoted reason");
                w.unverifiable = lp.next().text;
                w.ring = p.ring;
            } else {
                std::vector<std::string> names;
                if (!lp.is_sym("[")) names = lp.scan_decl_names(p.param_names());
                w.ring = names.empty() ? p.ring : extend_ring(p.ring, names);
                lp.set_ring(w.ring);
                if (!names.empty()) {
                    w.vars = lp.parse_decls();
                    lp.expect_sym(":");
                }
                w.matrix = lp.parse_matrix();
                if (lp.is_word("maps")) {
                    w.span = false;
                } else if (lp.is_word("spans")) {
                    w.span = true;
                } else {
                    lp.fail("expected 'maps' or 'spans'");
                }
                lp.next();
                w.from = lp.parse_cocycle_list();
                if (!lp.is_word("to")) lp.fail("expected 'to'");
                lp.next();
                w.to = lp.parse_cocycle_list();
                if (w.from.size() != w.to.size()) lp.fail("source and target lists differ in length");
            }
            ex.witnesses.push_back(std::move(w));
        } else {
            throw ParseError(l.number, 1, "unknown expectation '" + kw + "'");
        }
        lp.expect_end();
    }
    // drop explicit zero products so that equivalent inputs share one AST
    for (auto it = p.equations.begin(); it != p.equations.end();) {
        if (is_zero(it->second))
            it = p.equations.erase(it);
        else
            ++it;
    }
    return p;
}

// Columns inside parse_entry count from the trimmed text; report them against the raw line.
Presentation parse_located(const std::vector<SourceLine>& lines) {
    try {
        return parse_entry(lines);
    } catch (const ParseError& e) {
        for (const auto& l : lines)
            if (l.number == e.line()) throw ParseError(e.line(), e.column() + l.indent, e.message());
        throw;
    }
}

std::vector<std::vector<SourceLine>> split_entries(std::string_view text, std::size_t first_line) {
    std::vector<std::vector<SourceLine>> entries;
    std::vector<SourceLine> cur;
    std::size_t number = first_line;
    std::size_t start = 0;
    auto flush = [&]() {
        if (!cur.empty()) entries.push_back(std::move(cur));
        cur.clear();
    };
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string raw(text.substr(start, end - start));
        std::string s = trim(raw);
        if (s.empty()) {
            flush();
        } else if (s[0] != '#') {
            if (cur.empty() && !starts_with_word(s, "algebra"))
                throw ParseError(number, 1, "expected 'algebra NAME dim N' to start an entry");
            if (!cur.empty() && starts_with_word(s, "algebra"))
                throw ParseError(number, 1, "entries must be separated by a blank line");
            cur.push_back({number, s, raw.find_first_not_of(" \t\r")});
        }
        ++number;
        if (end == text.size()) break;
        start = end + 1;
    }
    flush();
    return entries;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string decls_to_string(const std::vector<ParamDecl>& decls) {
    std::string out;
    for (const auto& d : decls) {
        if (!out.empty()) out += " ";
        out += d.name;
        if (d.constraints.empty()) continue;
        out += " (";
        for (std::size_t k = 0; k < d.constraints.size(); ++k) {
            if (k) out += ", ";
            out += constraint_label(d.constraints[k].first, d.constraints[k].second);
        }
        out += ")";
    }
    return out;
}

std::string matrix_to_string(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m(i, j).to_string();
        }
    }
    return out + "]";
}

std::string assignment_to_string(const Assignment& a, const std::vector<std::string>& order) {
    std::string out;
    for (const auto& name : order) {
        auto it = a.find(name);
        if (it == a.end()) continue;
        if (!out.empty()) out += ", ";
        out += name + "=" + it->second.to_string();
    }
    return out;
}

std::string cocycles_to_string(const std::vector<PolyVec>& list, std::size_t n) {
    std::string out;
    for (std::size_t k = 0; k < list.size(); ++k) {
        if (k) out += "; ";
        out += cocycle_to_string(list[k], n);
    }
    return out;
}

std::vector<std::string> names_of(const std::vector<ParamDecl>& decls) {
    std::vector<std::string> out;
    for (const auto& d : decls) out.push_back(d.name);
    return out;
}

}  // namespace

std::string constraint_label(const Poly& lhs, const Poly& rhs) { return lhs.to_string() + " != " + rhs.to_string(); }

std::vector<Constraint> decl_constraints(const std::vector<ParamDecl>& decls) {
    std::vector<Constraint> out;
    for (const auto& d : decls)
        for (const auto& [l, r] : d.constraints) out.emplace_back(l - r, constraint_label(l, r));
    return out;
}

std::vector<std::string> Presentation::param_names() const { return names_of(params); }

std::vector<Constraint> Presentation::constraints() const { return decl_constraints(params); }

AlgebraTable Presentation::table() const {
    AlgebraTable t(ring, dim);
    for (const auto& [key, v] : equations) t.set_product(key.first, key.second, v);
    for (auto& c : constraints()) t.add_constraint(std::move(c));
    return t;
}

bool operator==(const Presentation& a, const Presentation& b) {
    return a.name == b.name && a.dim == b.dim && a.source == b.source && a.notes == b.notes &&
           a.ring->same_as(*b.ring) && a.params == b.params && a.equations == b.equations && a.expect == b.expect;
}

Presentation parse(std::string_view text) {
    auto entries = split_entries(text, 1);
    if (entries.size() != 1) throw ParseError(1, 1, "expected exactly one algebra entry, found " + std::to_string(entries.size()));
    return parse_located(entries.front());
}

std::vector<Presentation> parse_catalog(std::string_view text, std::size_t first_line) {
    std::vector<Presentation> out;
    std::set<std::string> names;
    for (const auto& lines : split_entries(text, first_line)) {
        Presentation p;
        try {
            p = parse_located(lines);
        } catch (const ParseError& e) {
            std::string head = lines.front().text;
            throw ParseError(e.line(), e.column(), e.message() + " (in entry starting '" + head + "')");
        }
        if (!names.insert(p.name).second) throw DuplicateName(p.name);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Presentation> load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open catalog file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_catalog(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path + ": " + e.message());
    }
}

std::string serialize(const Presentation& p) {
    std::ostringstream os;
    os << "algebra " << p.name << " dim " << p.dim << "\n";
    if (p.source) os << "source " << quote(*p.source) << "\n";
    for (const auto& n : p.notes) os << "note " << quote(n) << "\n";
    if (p.ring->order > 1) os << "field " << p.ring->order << "\n";
    if (!p.params.empty()) os << "params " << decls_to_string(p.params) << "\n";
    for (const auto& [key, v] : p.equations)
        os << "e" << key.first + 1 << "*e" << key.second + 1 << " = " << element_to_string(v) << "\n";
    if (p.expect) {
        const Expectations& ex = *p.expect;
        std::size_t n = p.dim;
        os << "expect\n";
        if (ex.cd) os << "  cd " << (*ex.cd ? "true" : "false") << "\n";
        if (ex.ann) os << "  ann " << *ex.ann << "\n";
        if (ex.h2c) os << "  h2c " << *ex.h2c << "\n";
        if (ex.h2d) os << "  h2d " << *ex.h2d << "\n";
        if (ex.h2_equal) os << "  h2-equal " << (*ex.h2_equal ? "true" : "false") << "\n";
        if (!ex.h2d_basis.empty()) os << "  h2d-basis " << cocycles_to_string(ex.h2d_basis, n) << "\n";
        if (!ex.h2c_basis.empty()) os << "  h2c-basis " << cocycles_to_string(ex.h2c_basis, n) << "\n";
        for (const auto& c : ex.extends) {
            std::size_t base_dim = c.cocycles.empty() ? n : n - c.cocycles.size();
            os << "  extends " << c.base << " by " << cocycles_to_string(c.cocycles, base_dim);
            if (!c.at.empty()) os << " at " << assignment_to_string(c.at, p.param_names());
            os << "\n";
        }
        for (const auto& a : ex.automorphisms) {
            os << "  automorphism " << decls_to_string(a.vars) << " : " << matrix_to_string(a.matrix);
            if (!a.samples.empty()) {
                os << " at ";
                for (std::size_t k = 0; k < a.samples.size(); ++k) {
                    if (k) os << "; ";
                    os << assignment_to_string(a.samples[k], names_of(a.vars));
                }
            }
            os << "\n";
        }
        for (const auto& w : ex.witnesses) {
            if (w.unverifiable) {
                os << "  witness unverifiable " << quote(*w.unverifiable) << "\n";
                continue;
            }
            os << "  witness ";
            if (!w.vars.empty()) os << decls_to_string(w.vars) << " : ";
            os << matrix_to_string(*w.matrix) << (w.span ? " spans " : " maps ") << cocycles_to_string(w.from, n)
               << " to " << cocycles_to_string(w.to, n) << "\n";
        }
    }
    return os.str();
}

std::string serialize_catalog(const std::vector<Presentation>& entries) {
    std::string out;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k) out += "\n";
        out += serialize(entries[k]);
    }
    return out;
}

}  // namespace nilcomm
