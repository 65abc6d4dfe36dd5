#include "g1/mpoly.hpp"

#include <algorithm>
#include <functional>

namespace g1 {

std::vector<Exponent> monomials(int nvars, int d)
{
    std::vector<Exponent> out;
    Exponent e{};
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars - 1) {
            e[i] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            e[i] = 0;
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = static_cast<std::uint16_t>(k);
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    if (nvars > 0) rec(0, d);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

}  // namespace g1
