#ifndef NOVIKOV_SERIES_HPP
#define NOVIKOV_SERIES_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/laurent.hpp"
#include "novikov/word.hpp"

namespace novikov {

// Truncated element of the Novikov ring over the deck group Z^n completed
// along the weight u: monomials g^v may appear in infinite sums as long as
// their levels u.v tend to +infinity. A value stores every term with level
// <= truncation(); `truncated()` says whether terms above that level were
// cut (so the value is a finite, exact ring element iff it is false).
//
// Arithmetic tracks how far results stay exact. The result truncation is the
// min of the operand truncations; a product against an operand with unknown
// tail additionally loses the partner's minimum level when that is negative.
class NovikovSeries {
public:
    NovikovSeries(WeightVector u, int truncation)
        : u_(std::move(u)), trunc_(truncation) {}

    static NovikovSeries from_laurent(const LaurentPoly& x, const WeightVector& u, int truncation) {
        if (u.rank() != x.vars())
            throw input_error("weight arity " + std::to_string(u.rank()) +
                              " does not match variable count " + std::to_string(x.vars()));
        NovikovSeries s(u, truncation);
        for (const auto& v : x.terms()) {
            if (s.level(v) <= truncation)
                s.terms_.insert(v);
            else
                s.truncated_ = true;
        }
        return s;
    }

    static NovikovSeries one(const WeightVector& u, int truncation) {
        NovikovSeries s(u, truncation);
        if (truncation >= 0)
            s.terms_.insert(std::vector<int>(u.values.size(), 0));
        else
            s.truncated_ = true;
        return s;
    }

    const WeightVector& weight() const { return u_; }
    int vars() const { return u_.rank(); }
    int truncation() const { return trunc_; }
    bool truncated() const { return truncated_; }
    const std::set<std::vector<int>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && *terms_.begin() == std::vector<int>(u_.values.size(), 0);
    }

    long level(const std::vector<int>& v) const {
        long s = 0;
        for (std::size_t k = 0; k < v.size(); ++k)
            s += static_cast<long>(u_.values[k]) * v[k];
        return s;
    }

    // Undefined (nullopt) for the zero series.
    std::optional<long> min_level() const {
        std::optional<long> m;
        for (const auto& v : terms_) {
            long l = level(v);
            if (!m || l < *m) m = l;
        }
        return m;
    }

    friend NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b) {
        a.check_weight(b);
        NovikovSeries r(a.u_, std::min(a.trunc_, b.trunc_));
        r.truncated_ = a.truncated_ || b.truncated_;
        for (const auto& v : a.terms_) r.accumulate(v);
        for (const auto& v : b.terms_) r.accumulate(v);
        return r;
    }

    friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
        a.check_weight(b);
        long cap = std::min(a.trunc_, b.trunc_);
        // The unknown tail of one factor starts above its truncation and
        // multiplies the lowest term of the other, so the product is still
        // exact through trunc + min level of the partner.
        if (a.truncated_) cap = std::min(cap, static_cast<long>(a.trunc_) + b.lowest_possible());
        if (b.truncated_) cap = std::min(cap, static_cast<long>(b.trunc_) + a.lowest_possible());
        cap = std::max(cap, static_cast<long>(std::numeric_limits<int>::min()));
        NovikovSeries r(a.u_, static_cast<int>(cap));
        r.truncated_ = a.truncated_ || b.truncated_;
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                std::vector<int> s(x.size());
                for (std::size_t k = 0; k < x.size(); ++k) s[k] = x[k] + y[k];
                r.accumulate(std::move(s));
            }
        return r;
    }

    friend bool operator==(const NovikovSeries&, const NovikovSeries&) = default;
    friend NovikovSeries series_invert(const NovikovSeries& x);

private:
    void check_weight(const NovikovSeries& o) const {
        if (u_ != o.u_) throw input_error("Novikov series weight mismatch");
    }

    // Smallest level any term (stored or hidden in the tail) can have.
    long lowest_possible() const {
        auto m = min_level();
        long tail = truncated_ ? static_cast<long>(trunc_) + 1
                               : std::numeric_limits<long>::max();
        return m ? std::min(*m, tail) : tail;
    }

    void accumulate(std::vector<int> v) {
        if (level(v) > trunc_) {
            truncated_ = true;
            return;
        }
        auto [it, inserted] = terms_.insert(std::move(v));
        if (!inserted) terms_.erase(it);
    }

    WeightVector u_;
    int trunc_;
    bool truncated_ = false;
    std::set<std::vector<int>> terms_;
};

// Inverse of a unit x = m(1 + y), where m is the unique term of minimal
// level and every term of y sits at strictly positive level: the geometric
// series m^-1 (1 + y + y^2 + ...), kept through the truncation level.
// Rejects zero input and a leading part that is not a single monomial.
inline NovikovSeries series_invert(const NovikovSeries& x) {
    if (x.is_zero())
        throw input_error(x.truncated()
                              ? "cannot invert: no terms at or below the truncation level"
                              : "cannot invert the zero series");
    long lead = *x.min_level();
    std::vector<int> m;
    for (const auto& v : x.terms_)
        if (x.level(v) == lead) {
            if (!m.empty())
                throw input_error("non-unit leading part: minimum level is not a single monomial");
            m = v;
        }

    // y = m^-1 x - 1, all terms at strictly positive level.
    std::set<std::vector<int>> y;
    for (const auto& v : x.terms_) {
        if (v == m) continue;
        std::vector<int> s(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) s[k] = v[k] - m[k];
        y.insert(std::move(s));
    }

    // A truncated input hides tail terms of x; they bleed into the inverse
    // starting two leading-monomial shifts below the input truncation.
    long cap = x.trunc_;
    if (x.truncated_) cap = std::min(cap, static_cast<long>(x.trunc_) - 2 * lead);

    NovikovSeries out(x.u_, static_cast<int>(cap));
    out.truncated_ = x.truncated_ || !y.empty();

    // Accumulate m^-1 y^k term sets mod 2; y^k dies once its minimum level
    // exceeds cap + lead, since y raises levels by at least 1 per factor.
    std::set<std::vector<int>> pw;
    pw.insert(std::vector<int>(m.size(), 0));
    while (!pw.empty()) {
        for (const auto& v : pw) {
            std::vector<int> s(v.size());
            for (std::size_t k = 0; k < v.size(); ++k) s[k] = v[k] - m[k];
            if (out.level(s) <= cap) {
                auto [it, inserted] = out.terms_.insert(std::move(s));
                if (!inserted) out.terms_.erase(it);
            }
        }
        if (y.empty()) break;
        std::set<std::vector<int>> next;
        for (const auto& a : pw)
            for (const auto& b : y) {
                std::vector<int> s(a.size());
                for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
                if (out.level(s) <= cap + lead) {
                    auto [it, inserted] = next.insert(std::move(s));
                    if (!inserted) next.erase(it);
                }
            }
        pw = std::move(next);
    }
    return out;
}

// Level order, then lexicographic; "1 + t + t^2" style, same monomial text
// as Laurent polynomials.
inline std::string render(const NovikovSeries& s) {
    if (s.is_zero()) return "0";
    std::vector<std::pair<long, std::vector<int>>> ordered;
    for (const auto& v : s.terms()) ordered.emplace_back(s.level(v), v);
    std::sort(ordered.begin(), ordered.end());
    std::string out;
    for (const auto& [lvl, v] : ordered) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0) continue;
            if (!mono.empty()) mono += ' ';
            mono += s.vars() == 1 ? "t" : "x" + std::to_string(k + 1);
            if (v[k] != 1) mono += "^" + std::to_string(v[k]);
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

} // namespace novikov

#endif
