#include "mbd/parser.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "mbd/errors.hpp"

namespace mbd {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;  // 1-based, relative to the line
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' || c == '.';
}

bool is_keyword(const std::string& s) {
    return s == "not" || s == "and" || s == "or" || s == "some" || s == "only" || s == "SubClassOf" ||
           s == "EquivalentTo";
}

std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t col0) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t col = col0 + i;
        if (c == '(') {
            out.push_back({Tok::LParen, "(", col});
            ++i;
        } else if (c == ')') {
            out.push_back({Tok::RParen, ")", col});
            ++i;
        } else if (c == ',') {
            out.push_back({Tok::Comma, ",", col});
            ++i;
        } else if (ident_char(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), col});
            i = j;
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", col0 + text.size()});
    return out;
}

class ConceptParser {
public:
    ConceptParser(const std::vector<Token>& toks, std::size_t begin, std::size_t end, std::size_t line)
        : toks_(toks), pos_(begin), end_(end), line_(line) {}

    ConceptPtr parse_all() {
        ConceptPtr c = parse_or();
        if (pos_ != end_) fail(toks_[pos_], "unexpected '" + toks_[pos_].text + "'");
        return c;
    }

private:
    const Token& peek() const { return pos_ < end_ ? toks_[pos_] : end_token(); }
    const Token& end_token() const { return toks_[end_ < toks_.size() ? end_ : toks_.size() - 1]; }
    bool at_word(const char* w) const { return pos_ < end_ && toks_[pos_].kind == Tok::Ident && toks_[pos_].text == w; }

    [[noreturn]] void fail(const Token& t, const std::string& what) const { throw ParseError(line_, t.column, what); }

    ConceptPtr parse_or() {
        std::vector<ConceptPtr> args{parse_and()};
        while (at_word("or")) {
            ++pos_;
            args.push_back(parse_and());
        }
        return args.size() == 1 ? args[0] : make_or(std::move(args));
    }

    ConceptPtr parse_and() {
        std::vector<ConceptPtr> args{parse_unary()};
        while (at_word("and")) {
            ++pos_;
            args.push_back(parse_unary());
        }
        return args.size() == 1 ? args[0] : make_and(std::move(args));
    }

    std::string parse_name(const char* what) {
        const Token& t = peek();
        if (t.kind != Tok::Ident || is_keyword(t.text)) fail(t, std::string("expected ") + what);
        ++pos_;
        return t.text;
    }

    ConceptPtr parse_unary() {
        const Token& t = peek();
        if (at_word("not")) {
            ++pos_;
            return make_not(parse_unary());
        }
        if (at_word("some") || at_word("only")) {
            bool some = t.text == "some";
            ++pos_;
            std::string role = parse_name("role name");
            ConceptPtr filler = parse_unary();
            return some ? make_some(std::move(role), std::move(filler)) : make_only(std::move(role), std::move(filler));
        }
        if (t.kind == Tok::LParen) {
            ++pos_;
            ConceptPtr inner = parse_or();
            if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
            ++pos_;
            return inner;
        }
        if (pos_ >= end_ || t.kind == Tok::End) fail(t, "expected class expression");
        return make_atom(parse_name("class expression"));
    }

    const std::vector<Token>& toks_;
    std::size_t pos_;
    std::size_t end_;
    std::size_t line_;
};

Sentence parse_sentence_at(std::string_view text, std::size_t line, std::size_t col0) {
    auto toks = tokenize(text, line, col0);
    const std::size_t n = toks.size() - 1;  // without End
    if (n == 0) throw ParseError(line, col0, "empty sentence");

    int depth = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (toks[i].kind == Tok::LParen) ++depth;
        if (toks[i].kind == Tok::RParen) --depth;
        if (depth == 0 && toks[i].kind == Tok::Ident &&
            (toks[i].text == "SubClassOf" || toks[i].text == "EquivalentTo")) {
            if (i == 0) throw ParseError(line, toks[i].column, "missing left-hand class expression");
            if (i + 1 == n) throw ParseError(line, toks[n].column, "missing right-hand class expression");
            ConceptPtr lhs = ConceptParser(toks, 0, i, line).parse_all();
            ConceptPtr rhs = ConceptParser(toks, i + 1, n, line).parse_all();
            return toks[i].text == "SubClassOf" ? Sentence::subsumption(lhs, rhs) : Sentence::equivalence(lhs, rhs);
        }
    }

    // assertion: <prefix>(a) or r(a,b)
    if (toks[n - 1].kind != Tok::RParen) {
        throw ParseError(line, toks[n - 1].column, "expected an axiom or an assertion ending in ')'");
    }
    std::size_t open = n - 1;
    depth = 0;
    for (std::size_t i = n; i-- > 0;) {
        if (toks[i].kind == Tok::RParen) ++depth;
        if (toks[i].kind == Tok::LParen && --depth == 0) {
            open = i;
            break;
        }
    }
    if (depth != 0) throw ParseError(line, toks[n - 1].column, "unbalanced parentheses");
    if (open == 0) throw ParseError(line, toks[0].column, "assertion lacks a class or role");

    std::vector<std::string> args;
    for (std::size_t i = open + 1; i < n - 1; ++i) {
        bool want_name = (i - open - 1) % 2 == 0;
        if (want_name) {
            if (toks[i].kind != Tok::Ident || is_keyword(toks[i].text)) {
                throw ParseError(line, toks[i].column, "expected individual name");
            }
            args.push_back(toks[i].text);
        } else if (toks[i].kind != Tok::Comma) {
            throw ParseError(line, toks[i].column, "expected ',' or ')'");
        }
    }
    if (args.empty() || args.size() > 2 || (n - 1 - open - 1) % 2 == 0) {
        throw ParseError(line, toks[open].column, "assertion takes one or two individuals");
    }
    if (args.size() == 2) {
        if (open != 1 || toks[0].kind != Tok::Ident || is_keyword(toks[0].text)) {
            throw ParseError(line, toks[0].column, "role assertion needs a role name");
        }
        return Sentence::role_assertion(toks[0].text, args[0], args[1]);
    }
    ConceptPtr c = ConceptParser(toks, 0, open, line).parse_all();
    return Sentence::class_assertion(std::move(c), args[0]);
}

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

enum class Section { Ontology, Background, Positive, Negative };

void add_axiom_line(KnowledgeBase& kb, std::string_view body, std::size_t line, std::size_t col0) {
    std::optional<double> confidence;
    if (auto at = body.find('@'); at != std::string_view::npos) {
        std::size_t lead = 0;
        std::string_view num = trim(body.substr(at + 1), &lead);
        double v = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
        if (ec != std::errc() || ptr != num.data() + num.size()) {
            throw ParseError(line, col0 + at + 1 + lead, "malformed confidence value");
        }
        if (!(v > 0.0 && v < 1.0)) throw ParseError(line, col0 + at + 1 + lead, "confidence must lie in (0,1)");
        confidence = v;
        body = body.substr(0, at);
    }
    Sentence s = parse_sentence_at(body, line, col0);
    try {
        kb.add(std::move(s), confidence);
    } catch (const DuplicateAxiom& e) {
        throw ParseError(line, col0, e.what());
    }
}

TestCase parse_test_case(std::string_view body, std::size_t line, std::size_t col0, Polarity pol) {
    TestCase tc;
    tc.polarity = pol;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t semi = body.find(';', start);
        std::size_t stop = semi == std::string_view::npos ? body.size() : semi;
        std::size_t lead = 0;
        std::string_view part = trim(body.substr(start, stop - start), &lead);
        if (!part.empty()) tc.sentences.push_back(parse_sentence_at(part, line, col0 + start + lead));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    if (tc.sentences.empty()) throw ParseError(line, col0, "empty test case");
    return tc;
}

template <typename LineFn>
void for_each_line(std::string_view text, LineFn fn) {
    std::size_t line = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::size_t stop = nl == std::string_view::npos ? text.size() : nl;
        ++line;
        std::string_view raw = text.substr(pos, stop - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::size_t lead = 0;
        std::string_view body = trim(raw, &lead);
        if (!body.empty()) fn(body, line, lead + 1);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace

ConceptPtr parse_concept(std::string_view text) {
    auto toks = tokenize(text, 1, 1);
    return ConceptParser(toks, 0, toks.size() - 1, 1).parse_all();
}

Sentence parse_sentence(std::string_view text) { return parse_sentence_at(text, 1, 1); }

KnowledgeBase parse_knowledge_base(std::string_view text) {
    KnowledgeBase kb;
    for_each_line(text, [&](std::string_view body, std::size_t line, std::size_t col) {
        if (body.front() == '[') throw ParseError(line, col, "section headers are not allowed here");
        add_axiom_line(kb, body, line, col);
    });
    return kb;
}

ProblemText parse_problem(std::string_view text) {
    ProblemText out;
    Section section = Section::Ontology;
    for_each_line(text, [&](std::string_view body, std::size_t line, std::size_t col) {
        if (body.front() == '[') {
            if (body == "[ontology]") section = Section::Ontology;
            else if (body == "[background]") section = Section::Background;
            else if (body == "[positive]") section = Section::Positive;
            else if (body == "[negative]") section = Section::Negative;
            else throw ParseError(line, col, "unknown section " + std::string(body));
            return;
        }
        switch (section) {
        case Section::Ontology:
            add_axiom_line(out.ontology, body, line, col);
            break;
        case Section::Background:
            add_axiom_line(out.background, body, line, col);
            break;
        case Section::Positive:
            out.positive.push_back(parse_test_case(body, line, col, Polarity::Positive));
            break;
        case Section::Negative:
            out.negative.push_back(parse_test_case(body, line, col, Polarity::Negative));
            break;
        }
    });
    return out;
}

namespace {

void print_axioms(std::ostringstream& out, const KnowledgeBase& kb) {
    for (const auto& ax : kb.axioms()) {
        out << to_string(ax.sentence);
        if (ax.confidence) out << " @ " << *ax.confidence;
        out << "\n";
    }
}

void print_tests(std::ostringstream& out, const std::vector<TestCase>& tcs) {
    for (const auto& tc : tcs) {
        for (std::size_t i = 0; i < tc.sentences.size(); ++i) {
            if (i) out << "; ";
            out << to_string(tc.sentences[i]);
        }
        out << "\n";
    }
}

}  // namespace

std::string print_knowledge_base(const KnowledgeBase& kb) {
    std::ostringstream out;
    out.precision(17);
    print_axioms(out, kb);
    return out.str();
}

std::string print_problem(const ProblemText& p) {
    std::ostringstream out;
    out.precision(17);
    out << "[ontology]\n";
    print_axioms(out, p.ontology);
    out << "[background]\n";
    print_axioms(out, p.background);
    out << "[positive]\n";
    print_tests(out, p.positive);
    out << "[negative]\n";
    print_tests(out, p.negative);
    return out.str();
}

}  // namespace mbd
