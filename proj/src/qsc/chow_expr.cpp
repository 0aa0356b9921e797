#include "qsc/chow_expr.hpp"

#include <cctype>
#include <stdexcept>

namespace qsc {

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    int n;
    MiddlePairing pairing;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    bool eat_word(const char* w) {
        skip();
        size_t len = std::char_traits<char>::length(w);
        if (s.compare(i, len, w) == 0) {
            i += len;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("chow expression: " + what + " at position " +
                                    std::to_string(i) + " of '" + s + "'");
    }

    int integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (start == i)
            fail("expected integer");
        return std::stoi(s.substr(start, i - start));
    }

    ChowClass expr() {
        bool negate = eat('-');
        ChowClass acc = term();
        if (negate)
            acc = -acc;
        while (true) {
            skip();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    ChowClass term() {
        ChowClass acc = factor();
        while (true) {
            skip();
            if (eat('*')) {
                acc = acc.cup(factor(), pairing);
                continue;
            }
            // Juxtaposition: "2h^3", "L1h".
            if (i < s.size() && (s[i] == 'h' || s[i] == 'L' || s[i] == '(' ||
                                 s.compare(i, 2, "Λ") == 0)) {
                acc = acc.cup(factor(), pairing);
                continue;
            }
            break;
        }
        return acc;
    }

    ChowClass factor() {
        ChowClass base = primary();
        skip();
        if (eat('^')) {
            int e = integer();
            ChowClass acc = ChowClass::unit(n);
            for (int k = 0; k < e; ++k)
                acc = acc.cup(base, pairing);
            return acc;
        }
        return base;
    }

    ChowClass primary() {
        skip();
        if (i >= s.size())
            fail("unexpected end of input");
        if (eat('(')) {
            ChowClass inner = expr();
            if (!eat(')'))
                fail("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            int v = integer();
            return Rational(v) * ChowClass::unit(n);
        }
        if (eat_word("h"))
            return ChowClass::h_power(n, 1);
        if (eat_word("L1") || eat_word("Λ1"))
            return ChowClass::ruling(n, 1);
        if (eat_word("L2") || eat_word("Λ2"))
            return ChowClass::ruling(n, 2);
        if (eat_word("L") || eat_word("Λ"))
            return ChowClass::lambda(n);
        fail("unknown symbol");
    }
};

}  // namespace

ChowClass eval_chow_expr(int n, const std::string& expr, MiddlePairing pairing) {
    Parser p{expr, 0, n, pairing};
    ChowClass out = p.expr();
    p.skip();
    if (p.i != expr.size())
        p.fail("trailing input");
    return out;
}

}  // namespace qsc
