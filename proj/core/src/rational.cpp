#include "cyclo/rational.hpp"

#include "cyclo/errors.hpp"

namespace cyclo {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw parse_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational: '" + text + "'");
    }
}

} // namespace cyclo
