#include "ovc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ovc {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num) || (slash != std::string_view::npos && !valid_integer(den)))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");

    mpz_class p(std::string(num), 10);
    mpz_class q(1);
    if (slash != std::string_view::npos) {
        q = mpz_class(std::string(den), 10);
        if (q == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rat r(p, q);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rat& r) { return r.get_str(); }

Rat rational_from_double(double x) {
    Rat r(x);
    r.canonicalize();
    return r;
}

}  // namespace ovc
