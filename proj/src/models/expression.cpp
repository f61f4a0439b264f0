#include "fscsynth/models/expression.h"

#include <cctype>

namespace fscsynth {

namespace {

class Parser {
   public:
    Parser(std::string_view text, ParameterTable& params, ExpressionOptions const& options)
        : text_(text), params_(params), options_(options) {}

    RationalFunction parse() {
        RationalFunction result = expression();
        skipSpace();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

   private:
    [[noreturn]] void fail(std::string const& message) const {
        throw ParseError(message, options_.line, options_.column + pos_);
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expression() {
        RationalFunction result = term();
        while (true) {
            if (accept('+')) {
                result = result + term();
            } else if (accept('-')) {
                result = result - term();
            } else {
                return result;
            }
        }
    }

    RationalFunction term() {
        RationalFunction result = unary();
        while (true) {
            if (accept('*')) {
                result = result * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalFunction divisor = unary();
                if (divisor.isZero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                result = result / divisor;
            } else {
                return result;
            }
        }
    }

    RationalFunction unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (!accept('^')) return base;
        skipSpace();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected non-negative integer exponent");
        unsigned long exponent = std::stoul(std::string(text_.substr(start, pos_ - start)));
        RationalFunction result(Polynomial(1));
        for (unsigned long i = 0; i < exponent; ++i) result = result * base;
        return result;
    }

    RationalFunction primary() {
        skipSpace();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    RationalFunction number() {
        std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            std::size_t expStart = pos_;
            digits();
            if (expStart == pos_) pos_ = save;
        }
        try {
            return Polynomial(parseRational(text_.substr(start, pos_ - start)));
        } catch (std::invalid_argument const&) {
            pos_ = start;
            fail("malformed number");
        }
    }

    RationalFunction identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@' || c == '.' || c == '\'') {
                ++pos_;
            } else {
                break;
            }
        }
        std::string name(text_.substr(start, pos_ - start));
        auto id = params_.find(name);
        if (!id) {
            if (!options_.declareParameters) {
                pos_ = start;
                fail("unknown parameter '" + name + "'");
            }
            id = params_.add(name);
        }
        return Polynomial::variable(*id);
    }

    std::string_view text_;
    ParameterTable& params_;
    ExpressionOptions const& options_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parseExpression(std::string_view text, ParameterTable& params, ExpressionOptions const& options) {
    return Parser(text, params, options).parse();
}

Polynomial parsePolynomial(std::string_view text, ParameterTable& params, ExpressionOptions const& options) {
    RationalFunction f = parseExpression(text, params, options);
    f.simplify();
    if (!f.isPolynomial()) throw ParseError("expression is not a polynomial", options.line, options.column);
    return f.numerator();
}

}  // namespace fscsynth
