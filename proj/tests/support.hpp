#pragma once

#include "tricochain/algebra.hpp"
#include "tricochain/exactlin.hpp"
#include "tricochain/io.hpp"

#include <random>
#include <string>

namespace test_support {

inline std::string fixture_path(const std::string& name) { return std::string(TRICOCHAIN_FIXTURE_DIR) + "/" + name; }

inline tricochain::TriDendAlgebra load_fixture(const std::string& name) {
    return tricochain::load_algebra(fixture_path(name + ".json"));
}

/// Rational with numerator in [-5, 5] and denominator in [1, 4].
inline tricochain::Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    return tricochain::Rational(num(rng), den(rng));
}

inline tricochain::BElement random_element(std::size_t dim, std::mt19937_64& rng) {
    tricochain::BElement x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = random_rational(rng);
    return x;
}

inline tricochain::QMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                         int zero_percent = 40) {
    std::uniform_int_distribution<int> pct(0, 99);
    tricochain::QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (pct(rng) >= zero_percent) m(r, c) = random_rational(rng);
    return m;
}

}  // namespace test_support
