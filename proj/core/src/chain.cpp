#include "eitrace/chain.hpp"

#include "eitrace/errors.hpp"

#include <string>
#include <utility>

namespace eitrace {

ChainComplex::ChainComplex(int low, std::vector<std::size_t> dims, std::vector<Matrix> differentials)
    : low_(low), dims_(std::move(dims)), diffs_(std::move(differentials))
{
    const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
    if (diffs_.size() != expected)
        throw InvalidInput("chain complex needs " + std::to_string(expected) + " differentials, got " +
                           std::to_string(diffs_.size()));
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows() != dims_[k] || diffs_[k].cols() != dims_[k + 1])
            throw ShapeError("differential d_" + std::to_string(low_ + static_cast<int>(k) + 1) +
                             " does not match the degree dimensions");
    }
    for (std::size_t k = 1; k < diffs_.size(); ++k) {
        if (!(diffs_[k - 1] * diffs_[k]).is_zero())
            throw InvalidInput("d o d != 0 at degree " + std::to_string(low_ + static_cast<int>(k) + 1));
    }
}

std::size_t ChainComplex::dim(int n) const
{
    if (dims_.empty() || n < low_ || n > high())
        return 0;
    return dims_[static_cast<std::size_t>(n - low_)];
}

Matrix ChainComplex::differential(int n) const
{
    if (dims_.empty() || n <= low_ || n > high())
        return Matrix(dim(n - 1), dim(n));
    return diffs_[static_cast<std::size_t>(n - low_ - 1)];
}

long ChainComplex::euler_characteristic() const
{
    long chi = 0;
    for (int n = low_; n <= high(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(dim(n));
    return chi;
}

ChainEndo::ChainEndo(ChainComplex complex, std::size_t dimS, std::size_t dimT, std::vector<Matrix> maps)
    : complex_(std::move(complex)), dimS_(dimS), dimT_(dimT), maps_(std::move(maps))
{
    if (maps_.size() != complex_.dims().size())
        throw InvalidInput("chain map needs one matrix per degree");
    for (int n = complex_.low(); n <= complex_.high(); ++n) {
        const Matrix& u = map(n);
        std::size_t d = complex_.dim(n);
        if (u.rows() != d * dimT_ || u.cols() != d * dimS_)
            throw ShapeError("chain map in degree " + std::to_string(n) + " has wrong shape");
    }
    const Matrix idS = Matrix::identity(dimS_);
    const Matrix idT = Matrix::identity(dimT_);
    for (int n = complex_.low() + 1; n <= complex_.high(); ++n) {
        Matrix d = complex_.differential(n);
        if (kron(d, idT) * map(n) != map(n - 1) * kron(d, idS))
            throw InvalidInput("chain map does not commute with d_" + std::to_string(n));
    }
}

ChainEndo ChainEndo::identity(ChainComplex complex, std::size_t dimS)
{
    std::vector<Matrix> maps;
    for (auto d : complex.dims())
        maps.push_back(Matrix::identity(d * dimS));
    return ChainEndo(std::move(complex), dimS, dimS, std::move(maps));
}

const Matrix& ChainEndo::map(int n) const
{
    return maps_.at(static_cast<std::size_t>(n - complex_.low()));
}

std::vector<HomologyGroup> homology(const ChainComplex& complex)
{
    std::vector<HomologyGroup> out;
    if (complex.empty())
        return out;
    for (int n = complex.low(); n <= complex.high(); ++n) {
        HomologyGroup h;
        h.degree = n;
        h.cycles = kernel(complex.differential(n));
        h.boundaries = image(complex.differential(n + 1));
        h.dim = h.cycles.cols() - h.boundaries.cols();
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<std::size_t> homology_dims(const ChainComplex& complex)
{
    std::vector<std::size_t> dims;
    for (const auto& h : homology(complex))
        dims.push_back(h.dim);
    return dims;
}

std::vector<Matrix> induced_on_homology(const ChainEndo& u)
{
    std::vector<Matrix> out;
    for (const auto& h : homology(u.complex()))
        out.push_back(induced_on_subquotient(u.map(h.degree), h.cycles, h.boundaries, u.dim_s(), u.dim_t()));
    return out;
}

Matrix lefschetz_trace(const ChainEndo& u)
{
    const ChainComplex& c = u.complex();
    Matrix total(u.dim_t(), u.dim_s());
    if (c.empty())
        return total;
    for (int n = c.low(); n <= c.high(); ++n) {
        Matrix t = partial_trace(u.map(n), c.dim(n), u.dim_s(), u.dim_t());
        if (n % 2 == 0)
            total += t;
        else
            total -= t;
    }
    return total;
}

Matrix homology_lefschetz_trace(const ChainEndo& u)
{
    Matrix total(u.dim_t(), u.dim_s());
    auto groups = homology(u.complex());
    for (const auto& h : groups) {
        Matrix induced = induced_on_subquotient(u.map(h.degree), h.cycles, h.boundaries, u.dim_s(), u.dim_t());
        Matrix t = partial_trace(induced, h.dim, u.dim_s(), u.dim_t());
        if (h.degree % 2 == 0)
            total += t;
        else
            total -= t;
    }
    return total;
}

} // namespace eitrace
