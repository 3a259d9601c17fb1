#include "qew/parser.hpp"

#include <cctype>

namespace qew {

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    BiPoly parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", 0);
        BiPoly result = parse_sum();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // sum := term (('+' | '-') term)*
    BiPoly parse_sum() {
        BiPoly acc = parse_term();
        for (;;) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    // term := unary ('*' unary)*
    BiPoly parse_term() {
        BiPoly acc = parse_unary();
        while (accept('*')) acc = acc * parse_unary();
        return acc;
    }

    // unary := ('-' | '+') unary | power
    BiPoly parse_unary() {
        if (accept('-')) return -parse_unary();
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    // power := atom ('^' nonnegative-integer)?
    BiPoly parse_power() {
        BiPoly base = parse_atom();
        if (!accept('^')) return base;
        skip_ws();
        size_t at = pos_;
        if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+'))
            throw ParseError("negative or non-integer exponent", at);
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("negative or non-integer exponent", at);
        BigInt e = read_integer();
        if (e > 1000000) throw ParseError("exponent too large", at);
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    // atom := integer ('/' integer)? | 'x' | 'q' | '(' sum ')'
    BiPoly parse_atom() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        size_t at = pos_;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = read_integer();
            skip_ws();
            if (!at_end() && text_[pos_] == '/') {
                ++pos_;
                skip_ws();
                size_t dat = pos_;
                if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError("expected integer denominator", dat);
                BigInt den = read_integer();
                if (den == 0) throw ParseError("zero denominator in rational literal", dat);
                return BiPoly::constant(make_rational(num, den));
            }
            return BiPoly::constant(BigRational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "x") return BiPoly::x();
            if (name == "q") return BiPoly::q();
            throw ParseError("unknown variable '" + name + "' (only x and q are allowed)", start);
        }
        if (c == '(') {
            ++pos_;
            BiPoly inner = parse_sum();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", at);
    }

    BigInt read_integer() {
        size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    size_t pos_ = 0;
};

class StepSetParser {
public:
    explicit StepSetParser(std::string_view text) : text_(text) {}

    StepSet parse() {
        skip_ws();
        char open = peek();
        if (open != '[' && open != '{') throw ParseError("expected '[' or '{'", pos_);
        char close = (open == '[') ? ']' : '}';
        ++pos_;
        std::vector<int> steps;
        skip_ws();
        if (peek() == close) {
            ++pos_;
        } else {
            for (;;) {
                steps.push_back(parse_pair());
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (peek() == close) {
                    ++pos_;
                    break;
                }
                throw ParseError("expected ',' or closing bracket", pos_);
            }
        }
        skip_ws();
        if (pos_ < text_.size()) throw ParseError("trailing input after step set", pos_);
        if (steps.empty()) throw ParseError("empty step set", 0);
        return StepSet(std::move(steps));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    int parse_pair() {
        skip_ws();
        char open = peek();
        if (open != '[' && open != '(') throw ParseError("expected '[' or '(' starting a step pair", pos_);
        char close = (open == '[') ? ']' : ')';
        ++pos_;
        size_t wat = pos_;
        long width = parse_int();
        if (width != 1) throw ParseError("only unit-width steps supported", wat);
        skip_ws();
        if (peek() != ',') throw ParseError("expected ',' inside step pair", pos_);
        ++pos_;
        long rise = parse_int();
        skip_ws();
        if (peek() != close) throw ParseError("expected closing bracket of step pair", pos_);
        ++pos_;
        return static_cast<int>(rise);
    }

    long parse_int() {
        skip_ws();
        size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected integer", start);
        std::string tok(text_.substr(start, pos_ - start));
        try {
            return std::stol(tok);
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly_expr(std::string_view text) { return PolyParser(text).parse(); }

StepSet parse_step_set(std::string_view text) { return StepSetParser(text).parse(); }

}  // namespace qew
