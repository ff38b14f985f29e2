#include "blowup/parser.hpp"

#include <cctype>

#include "blowup/errors.hpp"

namespace blowup {
namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    BiLaurent run() {
        BiLaurent acc;
        skip_ws();
        if (done()) throw ParseError(pos_, "empty polynomial");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (take() == '-') sign = -1;
        }
        acc += parse_term(sign);
        skip_ws();
        while (!done()) {
            char c = take();
            if (c != '+' && c != '-')
                throw ParseError(pos_ - 1, std::string("expected '+' or '-', got '") + c + "'");
            acc += parse_term(c == '-' ? -1 : 1);
            skip_ws();
        }
        return acc;
    }

private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char take() { return s_[pos_++]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // term := coeff ('*' factor)* | factor ('*' factor)*
    BiLaurent parse_term(int sign) {
        skip_ws();
        if (done()) throw ParseError(pos_, "expected a term");
        Rational coeff(sign);
        long ztot = 0, utot = 0;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '+') {
            coeff *= parse_coeff();
            any = true;
        } else {
            parse_factor(ztot, utot);
            any = true;
        }
        skip_ws();
        while (!done() && peek() == '*') {
            take();
            parse_factor(ztot, utot);
            skip_ws();
        }
        if (!any) throw ParseError(pos_, "expected a term");
        return BiLaurent::term({ztot, utot}, coeff);
    }

    void parse_factor(long& ztot, long& utot) {
        skip_ws();
        if (done()) throw ParseError(pos_, "expected 'z' or 'u'");
        char v = take();
        if (v != 'z' && v != 'u')
            throw ParseError(pos_ - 1, std::string("expected 'z' or 'u', got '") + v + "'");
        long e = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            take();
            e = parse_int_long(v == 'u');
        }
        if (v == 'u' && e < 0) throw ParseError(pos_, "negative exponent for u");
        if (v == 'z')
            ztot += e;
        else
            utot += e;
        // Trailing garbage like "z^1.5" surfaces as an unexpected character in
        // the caller's next step; a '.' right here is the common case.
        skip_ws();
        if (!done() && peek() == '.') throw ParseError(pos_, "non-integer exponent");
    }

    // coeff := int ['/' positive-int]
    Rational parse_coeff() {
        mpz_class num = parse_mpz();
        skip_ws();
        if (!done() && peek() == '.') throw ParseError(pos_, "non-integer coefficient; use a/b");
        if (!done() && peek() == '/') {
            take();
            std::size_t dpos = pos_;
            mpz_class den = parse_mpz();
            if (den <= 0) throw ParseError(dpos, "denominator must be positive");
            return Rational(num, den);
        }
        return Rational(num, mpz_class(1));
    }

    mpz_class parse_mpz() {
        skip_ws();
        std::size_t start = pos_;
        if (!done() && (peek() == '-' || peek() == '+')) take();
        std::size_t digits_from = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == digits_from) throw ParseError(pos_, "expected an integer");
        mpz_class z;
        if (z.set_str(s_.substr(start, pos_ - start), 10) != 0)
            throw ParseError(start, "bad integer literal");
        return z;
    }

    long parse_int_long(bool nonneg_context) {
        std::size_t start = pos_;
        mpz_class z = parse_mpz();
        (void)nonneg_context;
        if (!z.fits_slong_p()) throw ParseError(start, "exponent out of range");
        return z.get_si();
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

BiLaurent parse_polynomial(const std::string& text) { return Parser(text).run(); }

}  // namespace blowup
