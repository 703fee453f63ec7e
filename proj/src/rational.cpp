#include "cspace/rational.hpp"

#include <cctype>

namespace cspace {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
            throw std::invalid_argument("malformed rational: " + text);
    try {
        Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    out.canonicalize();
    return out;
}

}  // namespace cspace
