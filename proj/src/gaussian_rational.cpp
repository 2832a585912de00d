#include "gkmod/gaussian_rational.hpp"

#include <cmath>

namespace gkmod {

double GaussianRational::abs_upper() const {
    double n2 = to_double_up(norm2());
    double r = std::sqrt(n2);
    return std::nextafter(std::nextafter(r, HUGE_VAL), HUGE_VAL);
}

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out += rational_to_string(re);
    if (im != 0) {
        if (!out.empty() && im > 0) out += "+";
        if (im == 1)
            out += "i";
        else if (im == -1)
            out += "-i";
        else
            out += rational_to_string(im) + "*i";
    }
    return out;
}

}  // namespace gkmod
