#ifndef NOVIKOV_CHAIN_COMPLEX_HPP
#define NOVIKOV_CHAIN_COMPLEX_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/group_ring.hpp"
#include "novikov/laurent.hpp"
#include "novikov/presentation.hpp"
#include "novikov/word.hpp"

namespace novikov {

using BettiVector = std::vector<int>;

// Bounded chain complex of free modules over Z/2[t, t^-1], the image of an
// equivariant cellular complex under the infinite cyclic specialization.
// boundary(k) maps degree k to degree k-1 and has shape dims[k-1] x dims[k];
// consecutive boundaries compose to zero (checked at construction).
class ChainComplex {
public:
    ChainComplex(std::vector<int> dims, std::vector<LaurentMatrix> boundaries)
        : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
        if (dims_.empty()) throw input_error("complex needs at least degree 0");
        for (int n : dims_)
            if (n < 0) throw input_error("negative cell count");
        if (boundaries_.size() + 1 != dims_.size())
            throw input_error("expected one boundary per degree 1..top");
        for (std::size_t k = 0; k < boundaries_.size(); ++k) {
            const LaurentMatrix& b = boundaries_[k];
            if (b.vars() != 1)
                throw input_error("chain complex boundaries must be one-variable");
            if (b.rows() != dims_[k] || b.cols() != dims_[k + 1])
                throw input_error("boundary " + std::to_string(k + 1) + " has shape " +
                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                                  ", expected " + std::to_string(dims_[k]) + "x" +
                                  std::to_string(dims_[k + 1]));
        }
        for (std::size_t k = 0; k + 1 < boundaries_.size(); ++k)
            if (!(boundaries_[k] * boundaries_[k + 1]).is_zero())
                throw invariant_error("boundary composition is nonzero in degree " +
                                      std::to_string(k + 2));
    }

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int k) const { return dims_.at(static_cast<std::size_t>(k)); }

    const LaurentMatrix& boundary(int k) const {
        return boundaries_.at(static_cast<std::size_t>(k - 1));
    }

private:
    std::vector<int> dims_;
    std::vector<LaurentMatrix> boundaries_;
};

// The 2-complex of a presentation, specialized along u. One 0-cell, a 1-cell
// per generator, a 2-cell per relator:
//
//   d1 = [ 1 + t^{u(g_i)} ]  (one row),
//   d2 = transpose of the Fox matrix, specialized.
//
// u must kill every relator, which is exactly what makes d1 d2 = 0. The
// homology below degree 2 is that of any space with this fundamental group;
// degree 2 is specific to the presentation complex (for a closed surface
// presentation it is the surface itself). With q = 0 the complex stops in
// degree 1.
inline ChainComplex build_presentation_complex(const Presentation& p, const WeightVector& u) {
    WeightReport rep = validate_weight(p, u);
    if (!rep.valid) {
        std::string msg = "weight vector does not vanish on relators:";
        for (auto [j, w] : rep.failures)
            msg += " r" + std::to_string(j + 1) + " has weight " + std::to_string(w) + ";";
        throw input_error(msg);
    }

    const int pgen = p.rank(), q = p.relator_count();
    LaurentMatrix d1(1, pgen, 1);
    for (int i = 1; i <= pgen; ++i) {
        LaurentPoly e = LaurentPoly::one(1) + LaurentPoly::monomial({u(i)});
        d1.at(0, i - 1) = e;
    }
    if (q == 0) {
        if (pgen == 0) return ChainComplex({1}, {});
        return ChainComplex({1, pgen}, {d1});
    }
    auto fox = fox_matrix(p);
    LaurentMatrix d2(pgen, q, 1);
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < pgen; ++i)
            d2.at(i, j) = specialize(fox[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], u);
    return ChainComplex({1, pgen, q}, {d1, d2});
}

// Equivariant cellular data of a Z^n-cover: n-variable boundary matrices,
// squaring to zero over the n-variable ring.
struct CwComplexData {
    int vars = 1;
    std::vector<int> dims;
    std::vector<LaurentMatrix> boundaries;
};

// Specializes cellular data along integer weights on the deck group,
// yielding a one-variable complex. The input must satisfy boundary^2 = 0
// before specialization; arity mismatches are input errors.
inline ChainComplex build_from_cw(const CwComplexData& data, const std::vector<int>& u) {
    if (static_cast<int>(u.size()) != data.vars)
        throw input_error("weight arity " + std::to_string(u.size()) +
                          " does not match cellular arity " + std::to_string(data.vars));
    if (data.dims.empty()) throw input_error("cellular data needs at least degree 0");
    if (data.boundaries.size() + 1 != data.dims.size())
        throw input_error("expected one boundary matrix per degree 1..top");
    for (std::size_t k = 0; k < data.boundaries.size(); ++k) {
        const LaurentMatrix& b = data.boundaries[k];
        if (b.vars() != data.vars) throw input_error("boundary variable count mismatch");
        if (b.rows() != data.dims[k] || b.cols() != data.dims[k + 1])
            throw input_error("boundary " + std::to_string(k + 1) + " shape mismatch");
    }
    for (std::size_t k = 0; k + 1 < data.boundaries.size(); ++k)
        if (!(data.boundaries[k] * data.boundaries[k + 1]).is_zero())
            throw invariant_error("cellular boundaries do not square to zero in degree " +
                                  std::to_string(k + 2));

    std::vector<LaurentMatrix> specialized;
    specialized.reserve(data.boundaries.size());
    for (const LaurentMatrix& b : data.boundaries) {
        LaurentMatrix s(b.rows(), b.cols(), 1);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) s.at(i, j) = specialize(b.at(i, j), u);
        specialized.push_back(std::move(s));
    }
    return ChainComplex(data.dims, std::move(specialized));
}

// Betti numbers over the Novikov field: b_k = n_k - rank d_k - rank d_{k+1}.
// A negative value cannot happen for correct ranks and aborts loudly instead
// of being clamped.
inline BettiVector novikov_betti(const ChainComplex& c) {
    const int d = c.top_degree();
    std::vector<int> ranks(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 1; k <= d; ++k)
        ranks[static_cast<std::size_t>(k)] = rank_over_fraction_field(c.boundary(k));
    BettiVector b(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        int v = c.dim(k) - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
        if (v < 0)
            throw invariant_error("negative Betti number in degree " + std::to_string(k));
        b[static_cast<std::size_t>(k)] = v;
    }
    return b;
}

// Alternating sum of cell counts; re-derived from the Betti numbers as a
// cross-check, the two always agree by rank-nullity.
inline int euler_characteristic(const ChainComplex& c) {
    int chi = 0;
    for (int k = 0; k <= c.top_degree(); ++k) chi += (k % 2 == 0 ? 1 : -1) * c.dim(k);
    BettiVector b = novikov_betti(c);
    int chi_b = 0;
    for (std::size_t k = 0; k < b.size(); ++k)
        chi_b += (k % 2 == 0 ? 1 : -1) * b[k];
    if (chi != chi_b)
        throw invariant_error("Euler characteristic mismatch: cells give " + std::to_string(chi) +
                              ", homology gives " + std::to_string(chi_b));
    return chi;
}

// Chain complex of Z/2 vector spaces with constant boundary matrices, the
// ordinary-coefficients factor of a product.
class PlainComplex {
public:
    PlainComplex(std::vector<int> dims, std::vector<std::vector<std::uint8_t>> boundaries)
        : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
        if (dims_.empty()) throw input_error("complex needs at least degree 0");
        for (int n : dims_)
            if (n < 0) throw input_error("negative cell count");
        if (boundaries_.size() + 1 != dims_.size())
            throw input_error("expected one boundary per degree 1..top");
        for (std::size_t k = 0; k < boundaries_.size(); ++k)
            if (boundaries_[k].size() !=
                static_cast<std::size_t>(dims_[k]) * static_cast<std::size_t>(dims_[k + 1]))
                throw input_error("plain boundary " + std::to_string(k + 1) + " shape mismatch");
        for (std::size_t k = 0; k + 1 < boundaries_.size(); ++k) {
            // (d_k d_{k+1})[i][j] over GF(2)
            int rows = dims_[k], mid = dims_[k + 1], cols = dims_[k + 2];
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    int s = 0;
                    for (int l = 0; l < mid; ++l)
                        s ^= entry(k, i, l) & entry(k + 1, l, j);
                    if (s)
                        throw invariant_error("plain boundaries do not square to zero in degree " +
                                              std::to_string(k + 2));
                }
        }
    }

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int k) const { return dims_.at(static_cast<std::size_t>(k)); }

    // Entry (i, j) of d_{k+1} : degree k+1 -> degree k.
    std::uint8_t entry(std::size_t k, int i, int j) const {
        return boundaries_[k][static_cast<std::size_t>(i) * static_cast<std::size_t>(dims_[k + 1]) +
                              static_cast<std::size_t>(j)];
    }

private:
    std::vector<int> dims_;
    std::vector<std::vector<std::uint8_t>> boundaries_;
};

namespace detail {

inline int gf2_rank(std::vector<std::vector<std::uint8_t>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && !m[pr][c]) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m[i][c])
                for (std::size_t j = c; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace detail

// Ordinary Z/2 Betti numbers of a plain complex.
inline BettiVector ordinary_betti(const PlainComplex& c) {
    const int d = c.top_degree();
    std::vector<int> ranks(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 1; k <= d; ++k) {
        std::vector<std::vector<std::uint8_t>> m(
            static_cast<std::size_t>(c.dim(k - 1)),
            std::vector<std::uint8_t>(static_cast<std::size_t>(c.dim(k)), 0));
        for (int i = 0; i < c.dim(k - 1); ++i)
            for (int j = 0; j < c.dim(k); ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    c.entry(static_cast<std::size_t>(k - 1), i, j);
        ranks[static_cast<std::size_t>(k)] = detail::gf2_rank(std::move(m));
    }
    BettiVector b(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        int v = c.dim(k) - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
        if (v < 0) throw invariant_error("negative Betti number in plain complex");
        b[static_cast<std::size_t>(k)] = v;
    }
    return b;
}

// Tensor product over Z/2 of a Laurent complex with a plain complex; the
// model of a product covering trivial on the second factor. Degree-m basis
// elements are pairs (a, b) with a in C_i, b in D_j, i + j = m, laid out by
// ascending i, then a, then b. The boundary is d(a x b) = da x b + a x db
// (no signs mod 2).
inline ChainComplex tensor_product(const ChainComplex& c, const PlainComplex& d) {
    const int dc = c.top_degree(), dd = d.top_degree();
    const int top = dc + dd;

    // offset[m][i] = column offset of block (i, m - i) inside degree m
    auto block_dims = [&](int m) {
        std::vector<std::pair<int, int>> blocks; // (i, offset)
        int off = 0;
        for (int i = 0; i <= dc; ++i) {
            int j = m - i;
            if (j < 0 || j > dd) continue;
            blocks.emplace_back(i, off);
            off += c.dim(i) * d.dim(j);
        }
        return std::make_pair(blocks, off);
    };

    std::vector<int> dims;
    std::vector<std::vector<std::pair<int, int>>> layout;
    for (int m = 0; m <= top; ++m) {
        auto [blocks, total] = block_dims(m);
        layout.push_back(blocks);
        dims.push_back(total);
    }

    auto offset_of = [&](int m, int i) {
        for (auto [bi, off] : layout[static_cast<std::size_t>(m)])
            if (bi == i) return off;
        throw invariant_error("missing tensor block");
    };

    std::vector<LaurentMatrix> boundaries;
    for (int m = 1; m <= top; ++m) {
        LaurentMatrix bd(dims[static_cast<std::size_t>(m - 1)], dims[static_cast<std::size_t>(m)], 1);
        for (auto [i, col_off] : layout[static_cast<std::size_t>(m)]) {
            int j = m - i;
            for (int a = 0; a < c.dim(i); ++a)
                for (int b = 0; b < d.dim(j); ++b) {
                    int col = col_off + a * d.dim(j) + b;
                    if (i >= 1) {
                        int row_off = offset_of(m - 1, i - 1);
                        const LaurentMatrix& dc_i = c.boundary(i);
                        for (int a2 = 0; a2 < c.dim(i - 1); ++a2) {
                            const LaurentPoly& e = dc_i.at(a2, a);
                            if (e.is_zero()) continue;
                            int row = row_off + a2 * d.dim(j) + b;
                            bd.at(row, col) = bd.at(row, col) + e;
                        }
                    }
                    if (j >= 1) {
                        int row_off = offset_of(m - 1, i);
                        for (int b2 = 0; b2 < d.dim(j - 1); ++b2) {
                            if (!d.entry(static_cast<std::size_t>(j - 1), b2, b)) continue;
                            int row = row_off + a * d.dim(j - 1) + b2;
                            bd.at(row, col) = bd.at(row, col) + LaurentPoly::one(1);
                        }
                    }
                }
        }
        boundaries.push_back(std::move(bd));
    }
    return ChainComplex(std::move(dims), std::move(boundaries));
}

} // namespace novikov

#endif
