#ifndef NOVIKOV_WORD_HPP
#define NOVIKOV_WORD_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "novikov/errors.hpp"

namespace novikov {

// A single syllable g^e of a free-group word. Generator indices are 1-based
// and exponents are nonzero in any reduced word.
struct Letter {
    int gen;
    int exp;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word in the free group F_p. Adjacent letters never share a
// generator index and no exponent is zero; the empty word is the identity.
// Words never see relations: the quotient group enters only through the
// weight and abelianization maps.
class Word {
public:
    Word() = default;

    // Reduces an arbitrary letter sequence to canonical form.
    explicit Word(std::vector<Letter> raw) {
        for (const Letter& l : raw) push(l);
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    // Number of syllables, not the reduced length in unit letters.
    std::size_t syllables() const { return letters_.size(); }

    std::size_t length() const {
        std::size_t n = 0;
        for (const Letter& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
        return n;
    }

    int max_generator() const {
        int m = 0;
        for (const Letter& l : letters_)
            if (l.gen > m) m = l.gen;
        return m;
    }

    // Appends one letter, cancelling against the current tail.
    void push(Letter l) {
        if (l.gen < 1) throw input_error("generator index must be >= 1");
        if (l.exp == 0) return;
        if (!letters_.empty() && letters_.back().gen == l.gen) {
            letters_.back().exp += l.exp;
            if (letters_.back().exp == 0) letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word r = a;
        for (const Letter& l : b.letters_) r.push(l);
        return r;
    }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

// Canonical form of a raw letter sequence over F_rank; rejects indices
// outside 1..rank. Idempotent on already-reduced input.
inline Word reduce(const std::vector<Letter>& raw, int rank) {
    for (const Letter& l : raw)
        if (l.gen < 1 || l.gen > rank)
            throw input_error("generator index " + std::to_string(l.gen) +
                              " out of range 1.." + std::to_string(rank));
    return Word(raw);
}

inline Word inverse(const Word& w) {
    std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : rev) l.exp = -l.exp;
    return Word(std::move(rev));
}

// Integer weights u(g_i) on the generators, defining a homomorphism from the
// free group to Z. The all-zero vector is legal but flagged by callers as the
// trivial class.
struct WeightVector {
    std::vector<int> values;

    WeightVector() = default;
    explicit WeightVector(std::vector<int> v) : values(std::move(v)) {}

    int rank() const { return static_cast<int>(values.size()); }
    int operator()(int gen) const { return values.at(static_cast<std::size_t>(gen - 1)); }

    bool is_zero() const {
        for (int v : values)
            if (v != 0) return false;
        return true;
    }

    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

// u(w) = sum of exp * u(gen) over the letters; a homomorphism to Z.
inline long u_weight(const Word& w, const WeightVector& u) {
    long s = 0;
    for (const Letter& l : w.letters()) {
        if (l.gen > u.rank())
            throw input_error("word references generator " + std::to_string(l.gen) +
                              " beyond weight vector of rank " + std::to_string(u.rank()));
        s += static_cast<long>(l.exp) * u(l.gen);
    }
    return s;
}

// Exponent-sum vector of length rank; u_weight(w, u) is its dot product
// with u.
inline std::vector<int> abelianize(const Word& w, int rank) {
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    for (const Letter& l : w.letters()) {
        if (l.gen > rank)
            throw input_error("word references generator " + std::to_string(l.gen) +
                              " beyond rank " + std::to_string(rank));
        e[static_cast<std::size_t>(l.gen - 1)] += l.exp;
    }
    return e;
}

} // namespace novikov

#endif
