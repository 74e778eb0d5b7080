#include "wigner_ur/half_int.hpp"

#include <cctype>

namespace wigner_ur {

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("HalfInt::parse: '" + s + "'"); };
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) bad();
            return from_int(v);
        }
        std::size_t pos = 0;
        int num = std::stoi(s.substr(0, slash), &pos);
        if (pos != slash) bad();
        const std::string den = s.substr(slash + 1);
        if (den == "2") return from_twice(num);
        if (den == "1") return from_int(num);
        bad();
    } catch (const std::invalid_argument&) {
        bad();
    } catch (const std::out_of_range&) {
        bad();
    }
    return HalfInt();  // unreachable
}

}  // namespace wigner_ur
