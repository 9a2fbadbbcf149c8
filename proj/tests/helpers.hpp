#ifndef NOVIKOV_TEST_HELPERS_HPP
#define NOVIKOV_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "novikov/chain_complex.hpp"
#include "novikov/laurent.hpp"
#include "novikov/presentation.hpp"
#include "novikov/word.hpp"

namespace testutil {

using Rng = std::mt19937;

inline novikov::Word random_word(Rng& rng, int rank, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, rank);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<novikov::Letter> letters;
    int n = len(rng);
    for (int i = 0; i < n; ++i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    return novikov::Word(std::move(letters));
}

inline novikov::Word random_nonidentity_word(Rng& rng, int rank, int max_len) {
    for (;;) {
        novikov::Word w = random_word(rng, rank, max_len);
        if (!w.is_identity()) return w;
    }
}

inline std::vector<std::string> generator_names(int p) {
    std::vector<std::string> names;
    for (int i = 0; i < p; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return names;
}

inline novikov::Presentation random_presentation(Rng& rng, int max_p, int max_q, int max_len) {
    std::uniform_int_distribution<int> pd(1, max_p);
    std::uniform_int_distribution<int> qd(1, max_q);
    int p = pd(rng), q = qd(rng);
    std::vector<novikov::Word> rels;
    for (int j = 0; j < q; ++j) rels.push_back(random_nonidentity_word(rng, p, max_len));
    return novikov::Presentation(generator_names(p), std::move(rels));
}

// All integer vectors in [-bound, bound]^rank, lexicographic.
inline std::vector<std::vector<int>> weight_box(int rank, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> u(static_cast<std::size_t>(rank), -bound);
    for (;;) {
        out.push_back(u);
        int i = rank - 1;
        while (i >= 0 && u[static_cast<std::size_t>(i)] == bound) {
            u[static_cast<std::size_t>(i)] = -bound;
            --i;
        }
        if (i < 0) break;
        ++u[static_cast<std::size_t>(i)];
    }
    return out;
}

// Nonzero weights in the box under which every relator has weight zero.
inline std::vector<novikov::WeightVector> valid_nonzero_weights(const novikov::Presentation& p,
                                                                int bound) {
    std::vector<novikov::WeightVector> out;
    for (std::vector<int>& u : weight_box(p.rank(), bound)) {
        novikov::WeightVector w{u};
        if (w.is_zero()) continue;
        if (novikov::validate_weight(p, w).valid) out.push_back(std::move(w));
    }
    return out;
}

// Independent rank oracle: fraction-free elimination by cross-multiplication
// on LaurentPoly entries, no division and no bit packing. Exponential degree
// growth limits it to small matrices, which is all the tests feed it.
inline int naive_rank(novikov::LaurentMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            novikov::LaurentPoly pivot = m.at(r, c), lead = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) = pivot * m.at(i, j) + lead * m.at(r, j);
        }
        ++r;
    }
    return r;
}

inline novikov::LaurentPoly random_laurent(Rng& rng, int max_terms, int exp_range) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> ed(-exp_range, exp_range);
    novikov::LaurentPoly p(1);
    int n = nt(rng);
    for (int i = 0; i < n; ++i) p.toggle({ed(rng)});
    return p;
}

inline novikov::LaurentMatrix random_laurent_matrix(Rng& rng, int rows, int cols, int max_terms,
                                                    int exp_range) {
    novikov::LaurentMatrix m(rows, cols, 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_laurent(rng, max_terms, exp_range);
    return m;
}

// Random plain Z/2 complex with known Betti numbers: a direct sum of sphere
// summands (one free generator) and pair summands (an identity boundary
// between adjacent degrees), shuffled by random elementary basis changes,
// which preserve both the boundary relation and the homology.
struct RandomPlainComplex {
    novikov::PlainComplex complex;
    novikov::BettiVector betti;
};

inline RandomPlainComplex random_plain_complex(Rng& rng, int max_top, int max_summands) {
    std::uniform_int_distribution<int> topd(0, max_top);
    int top = topd(rng);
    std::vector<int> dims(static_cast<std::size_t>(top) + 1, 0);
    novikov::BettiVector betti(static_cast<std::size_t>(top) + 1, 0);

    // dense row-major matrices, entry(k)[i][j] for boundary degree k+1 -> k
    std::vector<std::vector<std::vector<std::uint8_t>>> mat(static_cast<std::size_t>(top));

    std::uniform_int_distribution<int> nsum(1, max_summands);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<int> degd(0, top);
    int summands = nsum(rng);
    struct Pair {
        int low, a, b; // identity boundary from (low+1, index b) to (low, index a)
    };
    std::vector<Pair> pairs;
    for (int s = 0; s < summands; ++s) {
        int deg = degd(rng);
        if (kind(rng) == 0 || top == 0 || deg == top) {
            ++dims[static_cast<std::size_t>(deg)];
            ++betti[static_cast<std::size_t>(deg)];
        } else {
            pairs.push_back({deg, dims[static_cast<std::size_t>(deg)],
                             dims[static_cast<std::size_t>(deg) + 1]});
            ++dims[static_cast<std::size_t>(deg)];
            ++dims[static_cast<std::size_t>(deg) + 1];
        }
    }
    for (int k = 0; k < top; ++k)
        mat[static_cast<std::size_t>(k)].assign(
            static_cast<std::size_t>(dims[static_cast<std::size_t>(k)]),
            std::vector<std::uint8_t>(static_cast<std::size_t>(dims[static_cast<std::size_t>(k) + 1]),
                                      0));
    for (const Pair& pr : pairs)
        mat[static_cast<std::size_t>(pr.low)][static_cast<std::size_t>(pr.a)]
           [static_cast<std::size_t>(pr.b)] = 1;

    // Basis change e_i <- e_i + e_j in degree k: add column j to column i of
    // the boundary out of degree k, and row i to row j of the one into it.
    std::uniform_int_distribution<int> opd(0, 40);
    int ops = opd(rng);
    for (int o = 0; o < ops; ++o) {
        int k = degd(rng);
        int n = dims[static_cast<std::size_t>(k)];
        if (n < 2) continue;
        std::uniform_int_distribution<int> idx(0, n - 1);
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        if (k >= 1) {
            auto& b = mat[static_cast<std::size_t>(k - 1)];
            for (std::size_t row = 0; row < b.size(); ++row)
                b[row][static_cast<std::size_t>(i)] ^= b[row][static_cast<std::size_t>(j)];
        }
        if (k < top) {
            auto& b = mat[static_cast<std::size_t>(k)];
            for (std::size_t col = 0; col < b[0].size(); ++col)
                b[static_cast<std::size_t>(j)][col] ^= b[static_cast<std::size_t>(i)][col];
        }
    }

    std::vector<std::vector<std::uint8_t>> flat;
    for (int k = 0; k < top; ++k) {
        std::vector<std::uint8_t> f;
        for (const auto& row : mat[static_cast<std::size_t>(k)])
            f.insert(f.end(), row.begin(), row.end());
        flat.push_back(std::move(f));
    }
    return {novikov::PlainComplex(dims, std::move(flat)), betti};
}

} // namespace testutil

#endif
