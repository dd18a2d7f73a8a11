#include "ajcable/format.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace ajcable {

namespace {

struct Factor {
    char var;
    std::int64_t exp;
};

void append_term(std::string& out, bool first, const BigInt& c, const std::vector<Factor>& factors) {
    const bool neg = c < 0;
    if (first) {
        if (neg) out += '-';
    } else {
        out += neg ? " - " : " + ";
    }
    const BigInt mag = neg ? BigInt(-c) : c;
    bool any = false;
    for (const auto& f : factors) any = any || f.exp != 0;
    if (!any) {
        out += mag.str();
        return;
    }
    bool need_star = false;
    if (mag != 1) {
        out += mag.str();
        need_star = true;
    }
    for (const auto& f : factors) {
        if (f.exp == 0) continue;
        if (need_star) out += '*';
        out += f.var;
        out += '^';
        out += std::to_string(f.exp);
        need_star = true;
    }
}

}  // namespace

// Display order is descending, so that a Jones polynomial reads from its top degree down.
std::string to_text(const IntLaurent1& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        append_term(out, first, it->second, {{var, it->first}});
        first = false;
    }
    return out;
}

std::string to_text(const IntLaurent2& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        append_term(out, first, it->second, {{'t', it->first.t}, {'M', it->first.m}});
        first = false;
    }
    return out;
}

std::string to_text(const RationalTM& f) {
    if (f.den().is_one()) return to_text(f.num());
    return "(" + to_text(f.num()) + ")/(" + to_text(f.den()) + ")";
}

std::string to_text(const RationalM& f) {
    if (f.den().is_one()) return to_text(f.num(), 'M');
    return "(" + to_text(f.num(), 'M') + ")/(" + to_text(f.den(), 'M') + ")";
}

namespace {

class TermParser {
public:
    explicit TermParser(std::string_view s) : s_(s) {}

    std::vector<IntLaurent2::Term> run() {
        std::vector<IntLaurent2::Term> out;
        skip_ws();
        if (s_.substr(pos_) == "0") return out;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail();
            }
            first = false;
            out.push_back(term(sign));
        }
        if (first) fail();
        return out;
    }

private:
    IntLaurent2::Term term(int sign) {
        BigInt coef = 1;
        Mono e;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = BigInt(digits());
            have_factor = true;
            if (peek() != '*') return {e, sign * coef};
            get();
        }
        while (true) {
            const char v = get();
            if (v != 't' && v != 'M') fail();
            std::int64_t x = 1;
            if (peek() == '^') {
                get();
                bool neg = false;
                if (peek() == '-') {
                    neg = true;
                    get();
                }
                x = std::stoll(digits());
                if (neg) x = -x;
            }
            (v == 't' ? e.t : e.m) += x;
            have_factor = true;
            if (peek() != '*') break;
            get();
        }
        if (!have_factor) fail();
        return {e, sign * coef};
    }

    std::string digits() {
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail();
        return std::string(s_.substr(b, pos_ - b));
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    [[noreturn]] void fail() const { throw std::invalid_argument("malformed polynomial: " + std::string(s_)); }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

IntLaurent2 parse_laurent2(std::string_view text) { return IntLaurent2::from_terms(TermParser(text).run()); }

IntLaurent1 parse_laurent1(std::string_view text, char var) {
    std::string s(text);
    if (var != 't')
        for (auto& ch : s)
            if (ch == var) ch = 't';
    const IntLaurent2 f = parse_laurent2(s);
    if (!f.m_free()) throw std::invalid_argument("unexpected second variable: " + std::string(text));
    return f.substitute_M(0);
}

}  // namespace ajcable
