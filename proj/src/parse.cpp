#include "formred/errors.hpp"
#include "formred/forms.hpp"

#include <cctype>

namespace formred {

namespace {

bool is_blank(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

std::string strip(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!is_blank(ch)) out += ch;
    return out;
}

Rational parse_rational(const std::string& token) {
    if (token.empty()) throw ParseError("empty coefficient");
    std::size_t pos = 0;
    if (token[0] == '+' || token[0] == '-') pos = 1;
    bool slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t i = pos; i < token.size(); ++i) {
        const char ch = token[i];
        if (ch == '/' && !slash) {
            slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            (slash ? digit_after : digit_before) = true;
        } else {
            throw ParseError("invalid coefficient '" + token + "'");
        }
    }
    if (!digit_before || (slash && !digit_after)) throw ParseError("invalid coefficient '" + token + "'");
    const std::string body = token[0] == '+' ? token.substr(1) : token;
    Rational value;
    if (value.set_str(body, 10) != 0) throw ParseError("invalid coefficient '" + token + "'");
    if (value.get_den() == 0) throw ParseError("zero denominator in '" + token + "'");
    value.canonicalize();
    return value;
}

BinaryForm finish(std::vector<Rational> coeffs) {
    if (coeffs.size() < 3) throw ParseError("binary form needs degree >= 2");
    if (coeffs.front() == 0) throw ParseError("leading coefficient must be nonzero");
    return BinaryForm(std::move(coeffs));
}

BinaryForm parse_coefficient_list(const std::string& text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        coeffs.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return finish(std::move(coeffs));
}

// Sum of monomials c*X^i*Z^j; Z may be omitted for a dehomogenised polynomial.
class PolynomialParser {
public:
    explicit PolynomialParser(std::string text) : s_(std::move(text)) {}

    BinaryForm parse() {
        if (s_.empty()) throw ParseError("empty polynomial");
        while (pos_ < s_.size()) parse_term();
        return assemble();
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    int parse_exponent() {
        if (peek() != '^') return 1;
        ++pos_;
        const std::size_t begin = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (begin == pos_) throw ParseError("missing exponent");
        return std::stoi(s_.substr(begin, pos_ - begin));
    }

    void parse_term() {
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        } else if (!terms_.empty() || pos_ != 0) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(pos_));
        }
        Rational coeff = 1;
        bool have_factor = false;
        int px = 0;
        int pz = 0;
        while (true) {
            const char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                const std::size_t begin = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
                coeff *= parse_rational(s_.substr(begin, pos_ - begin));
            } else if (ch == 'x' || ch == 'X') {
                ++pos_;
                px += parse_exponent();
            } else if (ch == 'z' || ch == 'Z') {
                ++pos_;
                pz += parse_exponent();
                seen_z_ = true;
            } else {
                throw ParseError(std::string("unexpected character '") + ch + "'");
            }
            have_factor = true;
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            const char next = peek();
            if (next == 'x' || next == 'X' || next == 'z' || next == 'Z') continue;
            break;
        }
        if (!have_factor) throw ParseError("empty term");
        terms_.push_back({px, pz, sign * coeff});
    }

    BinaryForm assemble() {
        int degree = 0;
        for (const auto& t : terms_) degree = std::max(degree, t.px + t.pz);
        if (seen_z_) {
            for (const auto& t : terms_)
                if (t.px + t.pz != degree) throw ParseError("polynomial in X and Z is not homogeneous");
        }
        std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
        for (const auto& t : terms_) {
            // Without Z the polynomial is dehomogenised: X^k is X^k Z^(n-k).
            const int z_power = seen_z_ ? t.pz : degree - t.px;
            coeffs[z_power] += t.coeff;
        }
        return finish(std::move(coeffs));
    }

    struct Term {
        int px;
        int pz;
        Rational coeff;
    };

    std::string s_;
    std::size_t pos_ = 0;
    bool seen_z_ = false;
    std::vector<Term> terms_;
};

}  // namespace

BinaryForm parse_form(std::string_view text) {
    const std::string compact = strip(text);
    if (compact.empty()) throw ParseError("empty input");
    const bool has_variable = compact.find_first_of("xXzZ") != std::string::npos;
    if (!has_variable) return parse_coefficient_list(compact);
    return PolynomialParser(compact).parse();
}

}  // namespace formred
