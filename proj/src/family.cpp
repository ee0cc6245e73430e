#include "oscatom/family.hpp"

#include <stdexcept>

namespace oscatom {

FamilyDescriptor family_params(int m) {
    if (m < 1 || m > 4)
        throw std::invalid_argument("unsupported family: m must be in 1..4, got " +
                                    std::to_string(m));
    const int d = 1 << m;
    const int D = m == 1 ? 2 : (1 << (m - 1)) + 1;
    return FamilyDescriptor{m, d, D};
}

const char* family_name(int m) {
    switch (m) {
        case 1: return "lc";
        case 2: return "ks";
        case 3: return "hurwitz8";
        case 4: return "hurwitz16";
        default: throw std::invalid_argument("unsupported family");
    }
}

FamilyDescriptor family_by_name(std::string_view name) {
    for (int m = 1; m <= 4; ++m)
        if (name == family_name(m)) return family_params(m);
    throw std::invalid_argument("unknown family name '" + std::string(name) +
                                "' (expected lc, ks, hurwitz8 or hurwitz16)");
}

}  // namespace oscatom
