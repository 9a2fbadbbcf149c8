#ifndef NOVIKOV_GROUP_RING_HPP
#define NOVIKOV_GROUP_RING_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "novikov/presentation.hpp"
#include "novikov/word.hpp"

namespace novikov {

// Element of the group ring Z/2[F_p]: a finite set of freely reduced words,
// each present with coefficient 1. The empty set is zero. Addition is
// symmetric difference, so x + x = 0.
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(std::set<Word> support) : support_(std::move(support)) {}

    static GroupRingElement one() { return GroupRingElement({Word{}}); }
    static GroupRingElement of(const Word& w) { return GroupRingElement({w}); }

    const std::set<Word>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    void toggle(const Word& w) {
        auto [it, inserted] = support_.insert(w);
        if (!inserted) support_.erase(it);
    }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r = a;
        for (const Word& w : b.support_) r.toggle(w);
        return r;
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r;
        for (const Word& x : a.support_)
            for (const Word& y : b.support_) r.toggle(x * y);
        return r;
    }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    std::set<Word> support_;
};

// Free derivative d/dg_i reduced mod 2, extended from
//
//   d(g_i)/d(g_i) = 1,   d(g_i^-1)/d(g_i) = g_i^-1,
//   d(uv)/d(g_i)  = du/d(g_i) + u dv/d(g_i),
//
// together with d(g_j)/d(g_i) = 0 for j != i and d(1)/d(g_i) = 0, which the
// product rule forces. Walks the word one unit letter at a time, so the cost
// is the reduced word length.
inline GroupRingElement fox_derivative(const Word& r, int gen) {
    if (gen < 1) throw input_error("generator index must be >= 1");
    GroupRingElement result;
    Word prefix;
    for (const Letter& l : r.letters()) {
        int step = l.exp > 0 ? 1 : -1;
        for (int k = 0; k != l.exp; k += step) {
            // d(g)/d(g) contributes the prefix before g; d(g^-1)/d(g)
            // contributes prefix * g^-1, which is the prefix after it.
            if (step > 0) {
                if (l.gen == gen) result.toggle(prefix);
                prefix.push({l.gen, 1});
            } else {
                prefix.push({l.gen, -1});
                if (l.gen == gen) result.toggle(prefix);
            }
        }
    }
    return result;
}

// q x p matrix with entry (j, i) = d(r_j)/d(g_i); the second boundary map of
// the presentation 2-complex in the basis of 2-cells and 1-cells.
inline std::vector<std::vector<GroupRingElement>> fox_matrix(const Presentation& p) {
    std::vector<std::vector<GroupRingElement>> m;
    m.reserve(p.relators().size());
    for (const Word& r : p.relators()) {
        std::vector<GroupRingElement> row;
        row.reserve(static_cast<std::size_t>(p.rank()));
        for (int i = 1; i <= p.rank(); ++i) row.push_back(fox_derivative(r, i));
        m.push_back(std::move(row));
    }
    return m;
}

// Text form: support words joined by " + ", identity rendered as "1",
// zero as "0". Set order makes the output deterministic.
inline std::string render(const GroupRingElement& x, const Presentation& ctx) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const Word& w : x.support()) {
        if (!out.empty()) out += " + ";
        out += w.is_identity() ? "1" : render(w, ctx);
    }
    return out;
}

} // namespace novikov

#endif
