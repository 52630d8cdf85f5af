#pragma once

#include "eitrace/matrix.hpp"

#include <cstddef>
#include <vector>

namespace eitrace {

/// Bounded chain complex of finite-dimensional rational vector spaces,
/// supported in degrees [low, low + dims.size()).
///
/// differential(n) maps C_n to C_{n-1}; it is the zero map whenever either
/// end lies outside the support. d_{n-1} d_n = 0 is checked on construction.
class ChainComplex {
public:
    ChainComplex() = default;
    /// `differentials[k]` is d_{low+k+1} : C_{low+k+1} -> C_{low+k}; exactly
    /// dims.size() - 1 of them (none for an empty complex).
    ChainComplex(int low, std::vector<std::size_t> dims, std::vector<Matrix> differentials);

    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const noexcept { return dims_.empty(); }
    std::size_t dim(int n) const;
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    Matrix differential(int n) const;

    /// sum (-1)^n dim C_n
    long euler_characteristic() const;

private:
    int low_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> diffs_;
};

/// Degreewise (possibly twisted) endomorphism u_n : C_n (x) S -> C_n (x) T
/// commuting with the differentials.
class ChainEndo {
public:
    ChainEndo() = default;
    ChainEndo(ChainComplex complex, std::size_t dimS, std::size_t dimT, std::vector<Matrix> maps);

    /// The identity of C (x) S.
    static ChainEndo identity(ChainComplex complex, std::size_t dimS = 1);

    const ChainComplex& complex() const noexcept { return complex_; }
    std::size_t dim_s() const noexcept { return dimS_; }
    std::size_t dim_t() const noexcept { return dimT_; }
    const Matrix& map(int n) const;

private:
    ChainComplex complex_;
    std::size_t dimS_ = 1;
    std::size_t dimT_ = 1;
    std::vector<Matrix> maps_;
};

struct HomologyGroup {
    int degree = 0;
    std::size_t dim = 0;
    Matrix cycles;     ///< basis of ker d_n, as columns
    Matrix boundaries; ///< basis of im d_{n+1}, as columns
};

std::vector<HomologyGroup> homology(const ChainComplex& complex);
std::vector<std::size_t> homology_dims(const ChainComplex& complex);

/// H_n(u) : H_n (x) S -> H_n (x) T for each degree of the support.
std::vector<Matrix> induced_on_homology(const ChainEndo& u);

/// sum_n (-1)^n partial_trace(u_n), a dT x dS matrix.
Matrix lefschetz_trace(const ChainEndo& u);

/// The same alternating sum computed on homology.
Matrix homology_lefschetz_trace(const ChainEndo& u);

} // namespace eitrace
