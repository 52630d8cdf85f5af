#pragma once

#include "eitrace/harness.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

namespace eitrace::testing {

inline CategoryPtr named(const std::string& name)
{
    for (auto& e : catalog())
        if (e.name == name)
            return e.category;
    throw std::out_of_range("no catalog entry " + name);
}

inline std::string data_file(const std::string& name)
{
    const char* dir = std::getenv("EITRACE_DATA_DIR");
    return std::string(dir ? dir : "data") + "/" + name;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 3)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = d(rng);
    return m;
}

inline Rational q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

} // namespace eitrace::testing
