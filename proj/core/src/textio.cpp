#include "sct/textio.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string_view>

namespace sct {

namespace {

std::string unsigned_term(const std::string& body, const Rat& coeff) {
    Rat a = abs(coeff);
    if (a == 1) return body == "1" ? "1" : body;
    std::string c = rat_string(a);
    if (body == "1") return c;
    return is_integer(a) ? c + body : c + "*" + body;
}

} // namespace

std::string format_linear(const std::vector<std::pair<std::string, Rat>>& terms) {
    if (terms.empty()) return "0";
    bool all_negative = terms.size() > 1;
    for (const auto& [body, c] : terms)
        if (sgn(c) >= 0) all_negative = false;
    std::string out;
    bool first = true;
    for (const auto& [body, c] : terms) {
        if (is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg && !all_negative) out += "-";
        } else {
            out += neg && !all_negative ? " - " : " + ";
        }
        out += unsigned_term(body, c);
        first = false;
    }
    if (first) return "0";
    return all_negative ? "-(" + out + ")" : out;
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) &&
            std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            std::string_view da(a.data() + i, i2 - i), db(b.data() + j, j2 - j);
            // strip leading zeros before comparing as numbers
            da.remove_prefix(std::min(da.find_first_not_of('0'), da.size()));
            db.remove_prefix(std::min(db.find_first_not_of('0'), db.size()));
            if (da.size() != db.size()) return da.size() < db.size();
            if (da != db) return da < db;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

} // namespace sct
