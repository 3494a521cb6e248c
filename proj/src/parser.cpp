#include "qriemann/parser.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qriemann {

namespace {

struct Parser {
    std::string_view s;
    const Presentation& p;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(i) +
                                    ": " + msg);
    }

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    long long integer() {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return std::stoll(std::string(s.substr(start, i - start)));
    }

    // (numerator, half): plain 'e' gives (e, false), '(e/2)' gives (e, true)
    std::pair<long long, bool> exponent() {
        ws();
        if (eat('(')) {
            bool neg = eat('-');
            long long v = integer();
            if (!eat('/') || !eat('2') || !eat(')'))
                fail("expected (k/2) exponent");
            return {neg ? -v : v, true};
        }
        bool neg = eat('-');
        long long v = integer();
        return {neg ? -v : v, false};
    }

    // second member: generator index, -2 for the scalar q, -1 otherwise
    std::pair<Element, int> primary() {
        ws();
        if (eat('(')) {
            Element e = expr();
            ws();
            if (!eat(')')) fail("expected ')'");
            return {e, -1};
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            return {Element::scalar(QScalar::integer(integer())), -1};
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                s[i] == '\''))
            ++i;
        if (i == start) fail("expected a name, number or '('");
        std::string_view name = s.substr(start, i - start);
        if (name == "q") return {Element::scalar(QScalar::q_power(1)), -2};
        int g = p.gen_index(name);
        if (g < 0) fail("unknown generator '" + std::string(name) + "'");
        return {Element::generator(g, p.gen(g).half_exp ? 2 : 1), g};
    }

    Element factor() {
        auto [e, kind] = primary();
        ws();
        if (!eat('^')) return e;
        auto [num, half] = exponent();
        int n = static_cast<int>(num);
        if (kind == -2)
            return Element::scalar(QScalar::s_power(half ? n : 2 * n));
        if (kind >= 0) {
            const Generator& g = p.gen(kind);
            int stored;
            if (g.half_exp) stored = half ? n : 2 * n;
            else if (half) fail("half exponent on generator " + g.name);
            else stored = n;
            if (stored == 0) return Element::scalar(QScalar::one());
            if (stored < 0 && !g.invertible)
                fail("negative power of non-invertible " + g.name);
            return Element::generator(kind, stored);
        }
        if (half) fail("half exponent on a composite expression");
        if (n >= 0) return e.pow(n);
        return invert(e).pow(-n);
    }

    Element invert(const Element& e) {
        try {
            return e.inv_single(p.gens());
        } catch (const std::domain_error& err) {
            fail(err.what());
        }
    }

    Element term() {
        ws();
        bool neg = eat('-');
        Element e = factor();
        for (;;) {
            ws();
            if (eat('*')) e *= factor();
            else if (eat('/')) e *= invert(factor());
            else break;
        }
        return neg ? -e : e;
    }

    Element expr() {
        Element e = term();
        for (;;) {
            ws();
            if (eat('+')) e += term();
            else if (i < s.size() && s[i] == '-') {
                ++i;
                e -= term();
            } else break;
        }
        return e;
    }
};

} // namespace

Element parse_element(std::string_view text, const Presentation& p) {
    Parser parser{text, p};
    Element e = parser.expr();
    parser.ws();
    if (parser.i != text.size()) parser.fail("unexpected trailing input");
    return e;
}

} // namespace qriemann
