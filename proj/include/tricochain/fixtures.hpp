#pragma once

#include "tricochain/algebra.hpp"

namespace tricochain::fixtures {

/// One-dimensional: e ≺ e = e, e ≻ e = e, e · e = −e.
inline TriDendAlgebra tridend_1d() {
    TriDendAlgebra b = TriDendAlgebra::zero(1, "tridend_1d");
    b.prec.at(0, 0, 0) = 1;
    b.succ.at(0, 0, 0) = 1;
    b.dot.at(0, 0, 0) = -1;
    return b;
}

/// Two copies of tridend_1d with all mixed products zero.
inline TriDendAlgebra tridend_2d() {
    TriDendAlgebra b = TriDendAlgebra::zero(2, "tridend_2d");
    for (std::size_t i = 0; i < 2; ++i) {
        b.prec.at(i, i, i) = 1;
        b.succ.at(i, i, i) = 1;
        b.dot.at(i, i, i) = -1;
    }
    return b;
}

}  // namespace tricochain::fixtures
