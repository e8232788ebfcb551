#include "cyclo/parse.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "cyclo/arith.hpp"
#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

struct Term {
    Int coeff;
    std::int64_t n = 1;   // conductor of the root factor (1 for bare integers)
    std::int64_t k = 0;   // exponent of the root factor
};

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& why) {
        throw parse_error(why + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return Int(text_.substr(start, pos_ - start));
    }

    std::int64_t small_integer() {
        Int v = integer();
        if (!v.fits_slong_p()) fail("integer too large");
        return v.get_si();
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

// term := integer ['*'] root | integer | root ;  root := 'w' digits ['^' ['-'] digits]
Term parse_term(Scanner& sc) {
    Term t;
    t.coeff = 1;
    sc.skip_ws();
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        t.coeff = sc.integer();
        saw_coeff = true;
        sc.skip_ws();
        if (!sc.done() && sc.peek() == '*') {
            sc.take();
            sc.skip_ws();
        }
    }
    if (!sc.done() && sc.peek() == 'w') {
        sc.take();
        t.n = sc.small_integer();
        if (t.n < 1) sc.fail("conductor must be positive");
        t.k = 1;
        if (!sc.done() && sc.peek() == '^') {
            sc.take();
            sc.skip_ws();
            bool negative = false;
            if (!sc.done() && sc.peek() == '-') {
                sc.take();
                negative = true;
            }
            t.k = sc.small_integer();
            if (negative) t.k = -t.k;
        }
    } else if (!saw_coeff) {
        sc.fail("expected a term");
    }
    return t;
}

} // namespace

CycInt parse_cyclotomic(const std::string& text) {
    Scanner sc(text);
    std::vector<Term> terms;
    bool first = true;
    while (!sc.done()) {
        Int sign = 1;
        sc.skip_ws();
        if (sc.peek() == '+' || sc.peek() == '-') {
            if (sc.take() == '-') sign = -1;
        } else if (!first) {
            sc.fail("expected '+' or '-' between terms");
        }
        Term t = parse_term(sc);
        t.coeff *= sign;
        terms.push_back(std::move(t));
        first = false;
    }
    if (terms.empty()) throw parse_error("empty expression");

    std::int64_t n = 1;
    for (const auto& t : terms) n = lcm_ll(n, t.n);
    CycInt out = CycInt::integer(0);
    for (const auto& t : terms)
        out = add(out, CycInt::term(n, t.k * (n / t.n), t.coeff));
    return out;
}

std::string to_expression(const CycInt& x) {
    if (x.coeffs().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x.coeffs()) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "w" << x.conductor();
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string to_json_string(const CycInt& x) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [k, c] : x.coeffs()) {
        if (c.fits_slong_p())
            coeffs[std::to_string(k)] = static_cast<std::int64_t>(c.get_si());
        else
            coeffs[std::to_string(k)] = c.get_str();
    }
    nlohmann::ordered_json j{{"n", x.conductor()}, {"coeffs", coeffs}};
    return j.dump();
}

CycInt cyclotomic_from_json(const std::string& json_text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs"))
        throw parse_error("JSON value must be an object with 'n' and 'coeffs'");
    std::int64_t n = j.at("n").get<std::int64_t>();
    if (n < 1) throw parse_error("conductor must be positive");
    CycInt out = CycInt::integer(0);
    for (const auto& [key, value] : j.at("coeffs").items()) {
        std::int64_t k;
        try {
            k = std::stoll(key);
        } catch (const std::exception&) {
            throw parse_error("bad exponent key '" + key + "'");
        }
        if (k < 0 || k >= n) throw parse_error("exponent out of [0, n)");
        Int c = value.is_string() ? Int(value.get<std::string>())
                                  : Int(value.get<std::int64_t>());
        out = add(out, CycInt::term(n, k, c));
    }
    return embed(out, n);
}

} // namespace cyclo
