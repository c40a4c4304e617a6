#include "bdcase/parser.hpp"

#include <cctype>

namespace bdcase {
namespace {

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_cont(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; }

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) { skip(); }

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    std::size_t offset() const { return pos_; }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            skip();
            return true;
        }
        return false;
    }

    // Multi-char operator; no identifier rules apply.
    bool eat(const std::string& op) {
        if (text_.compare(pos_, op.size(), op) == 0) {
            pos_ += op.size();
            skip();
            return true;
        }
        return false;
    }

    // Identifier or keyword lookahead without consuming.
    std::string peek_ident() const {
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) return {};
        std::size_t end = pos_;
        while (end < text_.size() && ident_cont(text_[end])) ++end;
        return text_.substr(pos_, end - pos_);
    }

    std::string take_ident() {
        std::string id = peek_ident();
        pos_ += id.size();
        skip();
        return id;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string msg = "parse error at offset " + std::to_string(pos_) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += ", ";
            msg += expected[i];
        }
        throw ParseError(pos_, std::move(expected), msg);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

// inner grammar ------------------------------------------------------------

Inner parse_formula(Cursor& cur);

Inner parse_atom(Cursor& cur) {
    if (cur.eat('(')) {
        Inner f = parse_formula(cur);
        if (!cur.eat(')')) cur.fail({")"});
        return f;
    }
    std::string id = cur.peek_ident();
    if (id.empty()) cur.fail({"identifier", "top", "bot", "("});
    if (id == "top") {
        cur.take_ident();
        return make_top();
    }
    if (id == "bot") {
        cur.take_ident();
        return make_bot();
    }
    if (id.size() == 1 && (id == "t" || id == "b" || id == "n" || id == "f")) {
        // probe only when directly applied; a bare t/b/n/f is a variable
        char k = id[0];
        cur.take_ident();
        if (cur.eat('(')) {
            Inner sub = parse_formula(cur);
            if (!cur.eat(')')) cur.fail({")"});
            ProbeKind kind = k == 't'   ? ProbeKind::t
                             : k == 'b' ? ProbeKind::b
                             : k == 'n' ? ProbeKind::n
                                        : ProbeKind::f;
            return make_probe(kind, std::move(sub));
        }
        return Inner::var(id);
    }
    cur.take_ident();
    return Inner::var(id);
}

Inner parse_unary(Cursor& cur) {
    if (cur.eat('!')) return Inner::neg(parse_unary(cur));
    if (cur.eat('@')) return Inner::delta(parse_unary(cur));
    return parse_atom(cur);
}

Inner parse_conj(Cursor& cur) {
    Inner f = parse_unary(cur);
    while (cur.eat('&')) f = Inner::conj(std::move(f), parse_unary(cur));
    return f;
}

Inner parse_disj(Cursor& cur) {
    Inner f = parse_conj(cur);
    while (cur.peek() == '|') {
        cur.eat('|');
        f = Inner::disj(std::move(f), parse_conj(cur));
    }
    return f;
}

Inner parse_formula(Cursor& cur) {
    Inner f = parse_disj(cur);
    if (cur.eat(std::string("=>>"))) {
        Inner chi = parse_disj(cur);
        return make_internal_entailment(f, chi);
    }
    return f;
}

// outer grammar ------------------------------------------------------------

Outer parse_oformula(Cursor& cur);

Outer parse_ounary(Cursor& cur) {
    if (cur.eat('~')) return Outer::gneg(parse_ounary(cur));
    if (cur.eat('@')) return Outer::gdelta(parse_ounary(cur));
    if (cur.eat('(')) {
        Outer a = parse_oformula(cur);
        if (!cur.eat(')')) cur.fail({")"});
        return a;
    }
    if (cur.eat('B')) {
        if (!cur.eat('{')) cur.fail({"{"});
        Inner phi = parse_formula(cur);
        if (!cur.eat('}')) cur.fail({"}"});
        return Outer::atom(std::move(phi));
    }
    cur.fail({"~", "@", "B", "("});
}

Outer parse_oconj(Cursor& cur) {
    Outer a = parse_ounary(cur);
    while (cur.eat('&')) a = Outer::gand(std::move(a), parse_ounary(cur));
    return a;
}

Outer parse_odisj(Cursor& cur) {
    Outer a = parse_oconj(cur);
    while (cur.peek() == '|') {
        cur.eat('|');
        a = Outer::gor(std::move(a), parse_oconj(cur));
    }
    return a;
}

Outer parse_ocoimp(Cursor& cur) {
    Outer a = parse_odisj(cur);
    while (cur.eat(std::string("-<"))) a = Outer::gcoimp(std::move(a), parse_odisj(cur));
    return a;
}

Outer parse_oformula(Cursor& cur) {
    Outer a = parse_ocoimp(cur);
    if (cur.eat(std::string("->"))) return Outer::gimp(std::move(a), parse_oformula(cur));
    return a;
}

} // namespace

Inner parse_inner(const std::string& text) {
    Cursor cur(text);
    Inner f = parse_formula(cur);
    if (!cur.at_end()) cur.fail({"end of input"});
    return f;
}

Outer parse_outer(const std::string& text) {
    Cursor cur(text);
    Outer a = parse_oformula(cur);
    if (!cur.at_end()) cur.fail({"end of input"});
    return a;
}

} // namespace bdcase
