#ifndef NOVIKOV_LAURENT_HPP
#define NOVIKOV_LAURENT_HPP

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/group_ring.hpp"
#include "novikov/word.hpp"

namespace novikov {

// Laurent polynomial over Z/2 in n >= 1 commuting variables: a finite set of
// integer exponent vectors, each with coefficient 1. Addition is symmetric
// difference.
class LaurentPoly {
public:
    LaurentPoly() : vars_(1) {}
    explicit LaurentPoly(int vars) : vars_(vars) {
        if (vars < 1) throw input_error("Laurent polynomial needs at least one variable");
    }

    static LaurentPoly zero(int vars = 1) { return LaurentPoly(vars); }

    static LaurentPoly one(int vars = 1) {
        LaurentPoly p(vars);
        p.toggle(std::vector<int>(static_cast<std::size_t>(vars), 0));
        return p;
    }

    static LaurentPoly monomial(std::vector<int> exps) {
        LaurentPoly p(static_cast<int>(exps.size()));
        p.toggle(std::move(exps));
        return p;
    }

    int vars() const { return vars_; }
    const std::set<std::vector<int>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 &&
               *terms_.begin() == std::vector<int>(static_cast<std::size_t>(vars_), 0);
    }

    void toggle(std::vector<int> exps) {
        if (static_cast<int>(exps.size()) != vars_)
            throw input_error("exponent vector arity mismatch");
        auto [it, inserted] = terms_.insert(std::move(exps));
        if (!inserted) terms_.erase(it);
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_vars(b);
        LaurentPoly r = a;
        for (const auto& t : b.terms_) r.toggle(t);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_vars(b);
        LaurentPoly r(a.vars_);
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                std::vector<int> s(x.size());
                for (std::size_t k = 0; k < x.size(); ++k) s[k] = x[k] + y[k];
                r.toggle(std::move(s));
            }
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void check_vars(const LaurentPoly& o) const {
        if (vars_ != o.vars_)
            throw input_error("variable count mismatch: " + std::to_string(vars_) + " vs " +
                              std::to_string(o.vars_));
    }

    int vars_;
    std::set<std::vector<int>> terms_;
};

namespace detail {

inline int checked_level(long level) {
    if (level > std::numeric_limits<int>::max() || level < std::numeric_limits<int>::min())
        throw input_error("specialized exponent " + std::to_string(level) + " out of range");
    return static_cast<int>(level);
}

} // namespace detail

// Specialization along the infinite cyclic cover of u: each support word w
// maps to t^{u(w)}. A ring homomorphism Z/2[F_p] -> Z/2[t, t^-1].
inline LaurentPoly specialize(const GroupRingElement& x, const WeightVector& u) {
    LaurentPoly p(1);
    for (const Word& w : x.support()) p.toggle({detail::checked_level(u_weight(w, u))});
    return p;
}

// Specialization along the maximal free-abelian cover: w maps to the monomial
// with exponent vector abelianize(w).
inline LaurentPoly specialize_abelian(const GroupRingElement& x, int rank) {
    LaurentPoly p(rank);
    for (const Word& w : x.support()) p.toggle(abelianize(w, rank));
    return p;
}

// Collapses an n-variable polynomial to one variable by v -> t^{u . v}.
inline LaurentPoly specialize(const LaurentPoly& x, const std::vector<int>& u) {
    if (static_cast<int>(u.size()) != x.vars())
        throw input_error("weight arity " + std::to_string(u.size()) +
                          " does not match variable count " + std::to_string(x.vars()));
    LaurentPoly p(1);
    for (const auto& v : x.terms()) {
        long level = 0;
        for (std::size_t k = 0; k < u.size(); ++k) level += static_cast<long>(u[k]) * v[k];
        p.toggle({detail::checked_level(level)});
    }
    return p;
}

// Rectangular matrix of Laurent polynomials, row-major. All entries share the
// same variable count.
class LaurentMatrix {
public:
    LaurentMatrix(int rows, int cols, int vars = 1)
        : rows_(rows), cols_(cols), vars_(vars),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                   LaurentPoly::zero(vars)) {
        if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int vars() const { return vars_; }

    LaurentPoly& at(int r, int c) { return entries_[index(r, c)]; }
    const LaurentPoly& at(int r, int c) const { return entries_[index(r, c)]; }

    bool is_zero() const {
        for (const LaurentPoly& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.cols_ != b.rows_) throw input_error("matrix shape mismatch in product");
        if (a.vars_ != b.vars_) throw input_error("matrix variable count mismatch");
        LaurentMatrix r(a.rows_, b.cols_, a.vars_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw input_error("matrix index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_, cols_, vars_;
    std::vector<LaurentPoly> entries_;
};

namespace detail {

// Dense polynomial over GF(2), bit-packed. Only what elimination needs:
// xor, carryless multiplication, exact division.
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly one() {
        Gf2Poly p;
        p.bits_ = {1};
        return p;
    }

    bool is_zero() const { return bits_.empty(); }

    long degree() const {
        if (bits_.empty()) return -1;
        std::uint64_t top = bits_.back();
        long d = static_cast<long>(bits_.size() - 1) * 64;
        while (top > 1) {
            top >>= 1;
            ++d;
        }
        return d;
    }

    bool bit(long i) const {
        std::size_t w = static_cast<std::size_t>(i / 64);
        if (w >= bits_.size()) return false;
        return (bits_[w] >> (i % 64)) & 1u;
    }

    void set_bit(long i) {
        std::size_t w = static_cast<std::size_t>(i / 64);
        if (w >= bits_.size()) bits_.resize(w + 1, 0);
        bits_[w] ^= std::uint64_t{1} << (i % 64);
        trim();
    }

    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Gf2Poly r;
        r.bits_.assign(a.bits_.size() + b.bits_.size(), 0);
        for (std::size_t i = 0; i < a.bits_.size(); ++i) {
            std::uint64_t w = a.bits_[i];
            while (w) {
                int s = std::countr_zero(w);
                w &= w - 1;
                r.xor_shifted(b, static_cast<long>(i) * 64 + s);
            }
        }
        r.trim();
        return r;
    }

    friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
        Gf2Poly r = a;
        if (r.bits_.size() < b.bits_.size()) r.bits_.resize(b.bits_.size(), 0);
        for (std::size_t i = 0; i < b.bits_.size(); ++i) r.bits_[i] ^= b.bits_[i];
        r.trim();
        return r;
    }

    // Exact quotient a / b; throws if the division leaves a remainder, which
    // would mean the elimination lost exactness.
    static Gf2Poly div_exact(Gf2Poly a, const Gf2Poly& b) {
        if (b.is_zero()) throw invariant_error("division by zero polynomial");
        Gf2Poly q;
        long db = b.degree();
        for (long da = a.degree(); da >= db; da = a.degree()) {
            long shift = da - db;
            q.set_bit(shift);
            a.xor_shifted(b, shift);
            a.trim();
        }
        if (!a.is_zero()) throw invariant_error("inexact polynomial division in elimination");
        return q;
    }

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

private:
    void xor_shifted(const Gf2Poly& b, long shift) {
        std::size_t word = static_cast<std::size_t>(shift / 64);
        int off = static_cast<int>(shift % 64);
        std::size_t need = word + b.bits_.size() + 1;
        if (bits_.size() < need) bits_.resize(need, 0);
        for (std::size_t i = 0; i < b.bits_.size(); ++i) {
            bits_[word + i] ^= b.bits_[i] << off;
            if (off) bits_[word + i + 1] ^= b.bits_[i] >> (64 - off);
        }
    }

    void trim() {
        while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
    }

    std::vector<std::uint64_t> bits_;
};

// Shifts every entry of a row by t^{-min exponent}, turning Laurent entries
// into ordinary polynomials without changing the row space over Z/2(t).
inline std::vector<Gf2Poly> row_to_polys(const LaurentMatrix& m, int r) {
    long min_exp = std::numeric_limits<long>::max();
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& t : m.at(r, c).terms()) min_exp = std::min<long>(min_exp, t[0]);
    if (min_exp == std::numeric_limits<long>::max()) min_exp = 0;
    std::vector<Gf2Poly> row(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& t : m.at(r, c).terms())
            row[static_cast<std::size_t>(c)].set_bit(t[0] - min_exp);
    return row;
}

} // namespace detail

// Rank over the rational function field Z/2(t) of a matrix of one-variable
// Laurent polynomials (equal to the rank over the Novikov field Z/2((t)),
// since extending the field preserves rank). Denominators are cleared per
// row by a monomial shift, then single-step fraction-free elimination
// (Bareiss) runs with exact division by the previous pivot. Pivots are the
// first nonzero entry scanning columns left to right and rows top to bottom.
inline int rank_over_fraction_field(const LaurentMatrix& m) {
    if (m.vars() != 1) throw input_error("rank is defined for one-variable matrices");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const std::size_t rows = static_cast<std::size_t>(m.rows());
    const std::size_t cols = static_cast<std::size_t>(m.cols());
    std::vector<std::vector<detail::Gf2Poly>> g;
    g.reserve(rows);
    for (int r = 0; r < m.rows(); ++r) g.push_back(detail::row_to_polys(m, r));

    detail::Gf2Poly prev = detail::Gf2Poly::one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && g[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(g[r], g[pr]);
        // Every remaining row is rescaled, zero leading entry or not; the
        // one-step minors stay divisible by the previous pivot only then.
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                g[i][j] = detail::Gf2Poly::div_exact(g[r][c] * g[i][j] + g[i][c] * g[r][j], prev);
            g[i][c] = {};
        }
        prev = g[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

// Text form, terms in ascending exponent order: "1 + t^-1 + t^2" in one
// variable, "1 + x1 x2^-1" in several. Zero renders as "0".
inline std::string render(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (t[k] == 0) continue;
            if (!mono.empty()) mono += ' ';
            mono += p.vars() == 1 ? "t" : "x" + std::to_string(k + 1);
            if (t[k] != 1) mono += "^" + std::to_string(t[k]);
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

// Parses the text form above: sum of monomials joined by '+', each monomial
// "1", "0", or whitespace-separated factors t^k / x<i>^k. vars fixes the
// arity ("t" is only legal when vars == 1).
inline LaurentPoly parse_laurent(const std::string& text, int vars) {
    LaurentPoly out(vars);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> int {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected integer", start);
        long v = 0;
        bool neg = text[start] == '-';
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw parse_error("exponent too large", start);
            ++pos;
        }
        return static_cast<int>(neg ? -v : v);
    };

    bool more = true;
    while (more) {
        skip_ws();
        std::vector<int> exps(static_cast<std::size_t>(vars), 0);
        bool constant_one = false;
        bool constant_zero = false;
        bool any_factor = false;
        for (;;) {
            skip_ws();
            if (pos < text.size() && (text[pos] == '1' || text[pos] == '0') && !any_factor &&
                !constant_one && !constant_zero) {
                constant_one = text[pos] == '1';
                constant_zero = text[pos] == '0';
                ++pos;
                continue;
            }
            if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) break;
            if (constant_one || constant_zero)
                throw parse_error("unexpected factor after constant", pos);
            std::size_t var_at = pos;
            int index;
            if (text[pos] == 't') {
                ++pos;
                if (vars != 1) throw parse_error("variable 't' needs a one-variable context", var_at);
                index = 0;
            } else if (text[pos] == 'x') {
                ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw parse_error("expected variable index after 'x'", var_at);
                int idx = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    idx = idx * 10 + (text[pos++] - '0');
                if (idx < 1 || idx > vars)
                    throw parse_error("variable index out of range", var_at);
                index = idx - 1;
            } else {
                throw parse_error("expected variable 't' or 'x<i>'", var_at);
            }
            int exp = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                exp = parse_int();
            }
            exps[static_cast<std::size_t>(index)] += exp;
            any_factor = true;
        }
        if (!any_factor && !constant_one && !constant_zero)
            throw parse_error("expected a monomial", pos);
        if (!constant_zero) out.toggle(std::move(exps));
        skip_ws();
        if (pos < text.size() && text[pos] == '+') {
            ++pos;
        } else {
            more = false;
        }
    }
    skip_ws();
    if (pos != text.size()) throw parse_error("trailing input in polynomial", pos);
    return out;
}

} // namespace novikov

#endif
