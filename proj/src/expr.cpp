#include "curveflow/expr.hpp"

#include <cctype>
#include <sstream>

namespace curveflow {

namespace {

constexpr unsigned long long kMaxExponent = 1000000;  // rejects runaway powers/orders

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    DiffPoly run() {
        DiffPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::string detail = pos_ < text_.size()
                                 ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                 : "unexpected end of input";
        detail += ", expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) detail += i + 1 == expected.size() ? " or " : ", ";
            detail += expected[i];
        }
        throw ParseError(pos_ + 1, std::move(expected), detail);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'G' || c == 'k' || c == '(';
    }

    unsigned long long parse_nat(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail({what});
        unsigned long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxExponent) {
                std::string msg = std::string(what) + " <= " + std::to_string(kMaxExponent);
                throw ParseError(pos_ + 1, {msg}, "integer overflow, expected " + msg);
            }
            ++pos_;
        }
        return value;
    }

    Rational parse_rational() {
        // Numerators may be arbitrarily large; only exponents are capped.
        skip_ws();
        boost::multiprecision::cpp_int num = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            num = num * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (!accept('/')) return Rational(num);
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail({"denominator"});
        boost::multiprecision::cpp_int den = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            den = den * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (den == 0) throw ParseError(pos_, {"nonzero denominator"}, "division by zero");
        return Rational(num, den);
    }

    DiffPoly parse_atom() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return DiffPoly(parse_rational());
        if (c == 'G') {
            ++pos_;
            return DiffPoly::g();
        }
        if (c == 'k') {
            ++pos_;
            unsigned order = 0;
            if (pos_ < text_.size() && text_[pos_] == '\'') {
                while (pos_ < text_.size() && text_[pos_] == '\'') ++order, ++pos_;
            } else if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '(') {
                pos_ += 2;
                order = static_cast<unsigned>(parse_nat("derivative order"));
                skip_ws();
                if (!accept(')')) fail({"')'"});
            }
            return DiffPoly::k(order);
        }
        fail({"rational", "'G'", "'k'", "'('"});
    }

    DiffPoly parse_factor() {
        if (accept('-')) return -parse_factor();
        DiffPoly base;
        if (peek() == '(') {
            ++pos_;
            base = parse_expr();
            if (!accept(')')) fail({"')'"});
        } else {
            base = parse_atom();
        }
        if (peek() == '^') {
            ++pos_;
            base = base.pow(static_cast<unsigned>(parse_nat("exponent")));
        }
        return base;
    }

    DiffPoly parse_term() {
        DiffPoly p = parse_factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                p *= parse_factor();
            } else if (starts_atom(c)) {
                p *= parse_factor();  // juxtaposition
            } else {
                return p;
            }
        }
    }

    DiffPoly parse_expr() {
        DiffPoly p = parse_term();  // unary minus is a factor production
        while (true) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                p += parse_term();
            } else if (c == '-') {
                ++pos_;
                p -= parse_term();
            } else {
                return p;
            }
        }
    }
};

void append_factor(std::string& out, unsigned order, unsigned exponent) {
    if (!out.empty()) out += ' ';
    if (order <= 3) {
        out += 'k';
        out.append(order, '\'');
    } else {
        out += "k^(" + std::to_string(order) + ")";
    }
    if (exponent > 1) out += '^' + std::to_string(exponent);
}

}  // namespace

DiffPoly parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string print(const DiffPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        const bool negative = coeff < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? Rational(-coeff) : coeff;
        std::string body;
        if (mag != 1 || mono.is_unit()) body = print(mag);
        if (mono.g_power() > 0) {
            if (!body.empty()) body += ' ';
            body += 'G';
            if (mono.g_power() > 1) body += '^' + std::to_string(mono.g_power());
        }
        for (const auto& [order, exp] : mono.factors()) append_factor(body, order, exp);
        out += body;
    }
    return out;
}

}  // namespace curveflow
