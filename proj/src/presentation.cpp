#include "pbwkit/presentation.hpp"

#include "pbwkit/error.hpp"
#include "pbwkit/linalg.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace pbwkit {

bool operator==(const Presentation& a, const Presentation& b) {
    return a.field == b.field && a.generators == b.generators && a.ambient_relations == b.ambient_relations &&
           a.deformation == b.deformation && a.max_degree == b.max_degree && a.tor_bound == b.tor_bound;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ElementParser {
public:
    ElementParser(std::string_view s, const std::vector<std::string>& gens, const Field& f, int line, int col)
        : s_(s), gens_(gens), field_(f), line_(line), col0_(col) {}

    Element run() {
        skip();
        if (at_end()) fail("empty element");
        Element e = expr();
        skip();
        if (!at_end()) fail(std::string("unexpected '") + s_[i_] + "'");
        return e;
    }

private:
    std::string_view s_;
    const std::vector<std::string>& gens_;
    const Field& field_;
    int line_, col0_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col0_ + int(i_), msg); }
    bool at_end() const { return i_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (!at_end() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Element expr() {
        skip();
        Element out;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Element t = term();
        out += neg ? -t : t;
        for (;;) {
            if (eat('+')) out += term();
            else if (eat('-')) out -= term();
            else break;
        }
        return out;
    }

    Element term() {
        Element out = factor();
        while (eat('*')) out = out * factor();
        return out;
    }

    std::string digits() {
        std::size_t start = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return std::string(s_.substr(start, i_ - start));
    }

    Element factor() {
        skip();
        if (at_end()) fail("expected a coefficient, generator or '('");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Element e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpq_class q{mpz_class(digits())};
            skip();
            if (!at_end() && s_[i_] == '/') {
                ++i_;
                skip();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a denominator");
                std::size_t at = i_;
                mpz_class den(digits());
                if (den == 0) {
                    i_ = at;
                    fail("zero denominator");
                }
                q /= den;
            }
            Scalar v;
            try {
                v = field_.make(q);
            } catch (const Error&) {
                fail("coefficient is not defined in " + field_.name());
            }
            return Element::unit(v);
        }
        if (ident_start(c)) {
            std::size_t start = i_;
            while (!at_end() && ident_char(s_[i_])) ++i_;
            std::string name(s_.substr(start, i_ - start));
            for (std::size_t k = 0; k < gens_.size(); ++k)
                if (gens_[k] == name) return Element::letter(Letter(k), field_.make(1));
            throw Error(ErrorCode::ValidationError, "line " + std::to_string(line_) + ", col " +
                                                        std::to_string(col0_ + int(start)) + ": unknown generator '" +
                                                        name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

struct StringTok {
    std::string text;
    int line, col;
};

class FileParser {
public:
    explicit FileParser(std::string_view t) : t_(t) {}

    Presentation run() {
        Presentation p;
        std::set<std::string> seen;
        std::vector<StringTok> ambient, deformation;
        bool have_gens = false, have_def = false;
        for (;;) {
            skip_blank_lines();
            if (at_end()) break;
            int kl = line_, kc = col_;
            if (!ident_start(peek())) fail("expected a key");
            std::string key;
            while (!at_end() && ident_char(peek())) key += get();
            if (!seen.insert(key).second) fail_at(kl, kc, "duplicate key '" + key + "'");
            skip_inline();
            if (peek() != '=') fail("expected '='");
            get();
            skip_inline();
            if (key == "field") {
                StringTok s = string_tok();
                p.field = parse_field(s);
            } else if (key == "generators") {
                for (auto& s : list()) {
                    if (s.text.empty() || !ident_start(s.text[0]))
                        fail_at(s.line, s.col, "generator names must be identifiers");
                    for (char c : s.text)
                        if (!ident_char(c)) fail_at(s.line, s.col, "generator names must be identifiers");
                    p.generators.push_back(s.text);
                }
                have_gens = true;
            } else if (key == "ambient_relations") {
                ambient = list();
            } else if (key == "deformation") {
                deformation = list();
                have_def = true;
            } else if (key == "max_degree") {
                p.max_degree = integer();
            } else if (key == "tor_bound") {
                p.tor_bound = integer();
            } else {
                fail_at(kl, kc, "unknown key '" + key + "'");
            }
            end_of_entry();
        }
        if (!have_gens) throw Error(ErrorCode::ValidationError, "missing key 'generators'");
        if (!have_def) throw Error(ErrorCode::ValidationError, "missing key 'deformation'");
        std::set<std::string> names(p.generators.begin(), p.generators.end());
        if (names.size() != p.generators.size()) throw Error(ErrorCode::ValidationError, "generator names are not unique");
        if (p.generators.empty()) throw Error(ErrorCode::ValidationError, "at least one generator is required");
        if (p.generators.size() > 64) throw Error(ErrorCode::ValidationError, "at most 64 generators are supported");
        for (auto& s : ambient) p.ambient_relations.push_back(element(s, p));
        for (auto& s : deformation) p.deformation.push_back(element(s, p));
        validate_presentation(p);
        return p;
    }

private:
    std::string_view t_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;

    bool at_end() const { return i_ >= t_.size(); }
    char peek() const { return at_end() ? '\0' : t_[i_]; }
    char get() {
        char c = t_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }
    [[noreturn]] void fail_at(int l, int c, const std::string& msg) const { throw ParseError(l, c, msg); }

    void skip_inline() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
    }
    void skip_comment() {
        if (peek() == '#')
            while (!at_end() && peek() != '\n') get();
    }
    void skip_blank_lines() {
        for (;;) {
            skip_inline();
            skip_comment();
            if (!at_end() && peek() == '\n') {
                get();
                continue;
            }
            return;
        }
    }
    void skip_space_and_newlines() {
        for (;;) {
            skip_inline();
            skip_comment();
            if (!at_end() && peek() == '\n') get();
            else return;
        }
    }
    void end_of_entry() {
        skip_inline();
        skip_comment();
        if (at_end()) return;
        if (peek() != '\n') fail("expected end of line");
        get();
    }

    StringTok string_tok() {
        if (peek() != '"') fail("expected a quoted string");
        get();
        StringTok s{"", line_, col_};
        while (!at_end() && peek() != '"') {
            if (peek() == '\n') fail("unterminated string");
            s.text += get();
        }
        if (at_end()) fail("unterminated string");
        get();
        return s;
    }

    std::vector<StringTok> list() {
        if (peek() != '[') fail("expected '['");
        get();
        std::vector<StringTok> out;
        skip_space_and_newlines();
        if (peek() == ']') {
            get();
            return out;
        }
        for (;;) {
            skip_space_and_newlines();
            out.push_back(string_tok());
            skip_space_and_newlines();
            if (peek() == ',') {
                get();
                skip_space_and_newlines();
                if (peek() == ']') {
                    get();
                    return out;
                }
                continue;
            }
            if (peek() == ']') {
                get();
                return out;
            }
            fail("expected ',' or ']'");
        }
    }

    int integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer");
        long long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > 1000000) fail("integer too large");
        }
        return int(v);
    }

    Field parse_field(const StringTok& s) {
        if (s.text == "Q") return Field::rational();
        std::string body;
        if (s.text.rfind("Fp(", 0) == 0 && s.text.size() > 4 && s.text.back() == ')')
            body = s.text.substr(3, s.text.size() - 4);
        else if (s.text.rfind("Fp:", 0) == 0)
            body = s.text.substr(3);
        else
            fail_at(s.line, s.col, "field must be \"Q\" or \"Fp(p)\"");
        if (body.empty() || body.size() > 19) fail_at(s.line, s.col, "bad characteristic");
        for (char c : body)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail_at(s.line, s.col, "bad characteristic");
        return Field::prime(std::stoull(body));
    }

    Element element(const StringTok& s, const Presentation& p) {
        return ElementParser(s.text, p.generators, p.field, s.line, s.col).run();
    }
};

} // namespace

Element parse_element(std::string_view text, const std::vector<std::string>& generators, const Field& field) {
    return ElementParser(text, generators, field, 1, 1).run();
}

Presentation parse_presentation(std::string_view text) { return FileParser(text).run(); }

Field parse_field(std::string_view text) {
    std::string t(text);
    if (t == "Q") return Field::rational();
    std::string body;
    if (t.rfind("Fp(", 0) == 0 && t.size() > 4 && t.back() == ')')
        body = t.substr(3, t.size() - 4);
    else if (t.rfind("Fp:", 0) == 0)
        body = t.substr(3);
    bool digits = !body.empty() && body.size() <= 19;
    for (char c : body) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    if (!digits) throw Error(ErrorCode::ValidationError, "field must be Q, Fp(p) or Fp:p, got '" + t + "'");
    return Field::prime(std::stoull(body));
}

Presentation change_field(const Presentation& p, const Field& field) {
    if (p.field == field) return p;
    if (!p.field.is_rational())
        throw Error(ErrorCode::FieldMismatch, "cannot move a presentation over " + p.field.name() + " to " + field.name());
    auto reduce = [&](const std::vector<Element>& xs) {
        std::vector<Element> out;
        for (const auto& x : xs) {
            Element y;
            for (const auto& [w, c] : x.terms()) y.add_term(w, field.convert(c));
            out.push_back(std::move(y));
        }
        return out;
    };
    Presentation q = p;
    q.field = field;
    q.ambient_relations = reduce(p.ambient_relations);
    q.deformation = reduce(p.deformation);
    validate_presentation(q);
    return q;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ValidationError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

namespace {

std::string quoted_list(const std::vector<Element>& xs, const std::vector<std::string>& names) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += "\"" + element_to_string(xs[i], names) + "\"";
    }
    return s + "]";
}

} // namespace

std::string print_presentation(const Presentation& p) {
    std::string s = "field = \"" + p.field.name() + "\"\n";
    s += "generators = [";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) s += ", ";
        s += "\"" + p.generators[i] + "\"";
    }
    s += "]\n";
    s += "ambient_relations = " + quoted_list(p.ambient_relations, p.generators) + "\n";
    s += "deformation = " + quoted_list(p.deformation, p.generators) + "\n";
    s += "max_degree = " + std::to_string(p.max_degree) + "\n";
    if (p.tor_bound) s += "tor_bound = " + std::to_string(*p.tor_bound) + "\n";
    return s;
}

void validate_presentation(const Presentation& p) {
    auto bad = [](const std::string& m) { throw Error(ErrorCode::ValidationError, m); };
    if (p.generators.empty()) bad("at least one generator is required");
    if (p.max_degree < 1 || p.max_degree > 10) bad("max_degree must lie in 1..10");
    if (p.tor_bound && (*p.tor_bound < 1 || *p.tor_bound > 10)) bad("tor_bound must lie in 1..10");
    for (const auto& e : p.ambient_relations) {
        if (e.is_zero()) bad("ambient relation is zero");
        if (!e.is_homogeneous()) bad("ambient relation '" + element_to_string(e, p.generators) + "' is not homogeneous");
        if (e.degree() < 2) bad("ambient relations must have degree at least 2");
    }
    int top = 0;
    for (const auto& e : p.deformation) top = std::max(top, e.degree());
    if (top > p.max_degree) bad("deformation element of degree above max_degree");
    // P must meet the scalars trivially: no echelon row of P is a constant.
    FilteredIndex idx(p.g(), top);
    Echelon ech(idx.size());
    for (const auto& e : p.deformation) ech.insert(idx.vector(e));
    Col unit = Col(idx.size() - 1);
    if (ech.is_pivot(unit)) bad("the span of the deformation contains a nonzero constant");
}

} // namespace pbwkit
