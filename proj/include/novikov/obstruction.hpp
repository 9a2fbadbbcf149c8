#ifndef NOVIKOV_OBSTRUCTION_HPP
#define NOVIKOV_OBSTRUCTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "novikov/chain_complex.hpp"
#include "novikov/errors.hpp"
#include "novikov/presentation.hpp"
#include "novikov/word.hpp"

namespace novikov {

using ordered_json = nlohmann::ordered_json;

// A machine-checkable reason why no closed exact Lagrangian with the given
// invariants embeds into T*M for a closed M of dimension >= 3 fibered over
// the circle. `witness` holds the data a verifier needs to re-check the rule;
// `citation` tags the theorem the rule instantiates.
struct Certificate {
    std::string rule;
    std::string citation;
    ordered_json witness;
    std::string scope;
    std::string caveat; // empty unless the rule carries an exception clause

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline constexpr const char* kFiberedScope =
    "no exact Lagrangian embedding of a closed manifold with these invariants into T*M, "
    "for any closed M of dimension >= 3 fibered over the circle";

// Deficiency rule: a presentation with p - q >= 2 generators over relators.
inline std::optional<Certificate> check_deficiency(const Presentation& p) {
    int def = deficiency(p);
    if (def < 2) return std::nullopt;
    Certificate c;
    c.rule = "deficiency";
    c.citation = "Thm 1.1a";
    c.witness = {{"generators", p.rank()},
                 {"relators", p.relator_count()},
                 {"deficiency", def}};
    c.scope = std::string(kFiberedScope) +
              "; applies to the fundamental group presented here, any presentation of it";
    return c;
}

// Finite permutation images certifying that a presented group is nontrivial:
// every relator must act as the identity and some generator must not.
struct NontrivialityWitness {
    int degree = 0;
    // images[i] is the 1-based permutation image of generator i+1.
    std::vector<std::vector<int>> images;
};

namespace detail {

inline std::vector<int> identity_perm(int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

inline std::vector<int> invert_perm(const std::vector<int>& p) {
    std::vector<int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return q;
}

// r[i] = b[a[i]]: apply a, then b.
inline std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
    return r;
}

} // namespace detail

// Validates the witness shape (throwing on malformed permutations), then
// checks the two witness conditions.
inline bool verify_witness(const Presentation& p, const NontrivialityWitness& w) {
    if (w.degree < 1) throw input_error("witness degree must be >= 1");
    if (static_cast<int>(w.images.size()) != p.rank())
        throw input_error("witness must give one permutation per generator");
    std::vector<std::vector<int>> perms; // 0-based
    for (const std::vector<int>& img : w.images) {
        if (static_cast<int>(img.size()) != w.degree)
            throw input_error("malformed permutation: wrong length");
        std::vector<bool> seen(static_cast<std::size_t>(w.degree), false);
        std::vector<int> perm(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) {
            int v = img[i];
            if (v < 1 || v > w.degree || seen[static_cast<std::size_t>(v - 1)])
                throw input_error("malformed permutation: not a bijection on 1.." +
                                  std::to_string(w.degree));
            seen[static_cast<std::size_t>(v - 1)] = true;
            perm[i] = v - 1;
        }
        perms.push_back(std::move(perm));
    }

    const std::vector<int> id = detail::identity_perm(w.degree);
    auto eval = [&](const Word& word) {
        std::vector<int> acc = id;
        for (const Letter& l : word.letters()) {
            const std::vector<int>& base = perms[static_cast<std::size_t>(l.gen - 1)];
            std::vector<int> factor = l.exp > 0 ? base : detail::invert_perm(base);
            int reps = l.exp > 0 ? l.exp : -l.exp;
            for (int k = 0; k < reps; ++k) acc = detail::compose_perm(acc, factor);
        }
        return acc;
    };

    for (const Word& r : p.relators())
        if (eval(r) != id) return false;
    for (const std::vector<int>& perm : perms)
        if (perm != id) return true;
    return false;
}

namespace detail {

inline ordered_json witness_json(const Presentation& p, const NontrivialityWitness& w) {
    ordered_json images = ordered_json::object();
    for (int i = 1; i <= p.rank(); ++i)
        images[p.generator_name(i)] = w.images[static_cast<std::size_t>(i - 1)];
    return {{"degree", w.degree}, {"images", images}};
}

} // namespace detail

// Free-product rule: pi_1 = G1 * G2 with both factors certified nontrivial.
// The decomposition is an input, never inferred.
inline std::optional<Certificate> check_free_product(const Presentation& p1,
                                                     const NontrivialityWitness& w1,
                                                     const Presentation& p2,
                                                     const NontrivialityWitness& w2) {
    if (!verify_witness(p1, w1) || !verify_witness(p2, w2)) return std::nullopt;
    Certificate c;
    c.rule = "free-product";
    c.citation = "Thm 1.1b";
    c.witness = {{"factor1",
                  {{"presentation", render(p1)}, {"witness", detail::witness_json(p1, w1)}}},
                 {"factor2",
                  {{"presentation", render(p2)}, {"witness", detail::witness_json(p2, w2)}}}};
    c.scope = std::string(kFiberedScope) +
              "; applies when the fundamental group is the free product of the two factors";
    c.caveat =
        "for a connected sum L1 # L2 of dimension >= 4 the fundamental group is this free "
        "product; the rule then applies unless one summand is a simply connected Z/2-homology "
        "sphere (Cor 1.2b)";
    return c;
}

// Euler characteristic rule: chi(L) != 0 rules out embeddings of L x P with
// pi_1(P) finite into T*(Q x S^1).
inline std::optional<Certificate> check_euler(int chi) {
    if (chi == 0) return std::nullopt;
    Certificate c;
    c.rule = "euler";
    c.citation = "Cor 1.2a";
    c.witness = {{"chi", chi}};
    c.scope =
        "no exact Lagrangian embedding of L x P into T*(Q x S^1) for closed Q and closed P "
        "with finite fundamental group, L the closed manifold with this Euler characteristic; "
        "Q x S^1 closed of dimension >= 3, fibered over the circle";
    return c;
}

// Rank rule: a fibered target forces a nonzero class pi_1(L) -> Z through the
// projection epimorphism; none exists when H_1 has rational rank 0.
inline std::optional<Certificate> check_rank(const Presentation& p) {
    int rank = abelianization_rank(p);
    if (rank != 0) return std::nullopt;
    Certificate c;
    c.rule = "rank";
    c.citation = "Thm 1.2";
    c.witness = {{"abelianization_rank", 0},
                 {"generators", p.rank()},
                 {"relators", p.relator_count()}};
    c.scope = std::string(kFiberedScope) +
              "; a fibration of M over the circle would induce a nonzero class pi_1 -> Z, "
              "impossible at abelianization rank 0";
    return c;
}

// One scanned weight class and the Betti number it produced in the scan
// degree.
struct ScanEntry {
    std::vector<int> weights;
    int betti = 0;
};

// Finite sweep of nonzero valid classes with entries in [-bound, bound],
// lexicographic order. Evidence only: the class induced by an actual
// fibration is unknown to the scan, so a nonvanishing sweep never upgrades a
// verdict by itself.
struct ScanResult {
    int bound = 0;
    int degree = 1;
    bool nonvanishing_for_all_scanned = false;
    std::vector<ScanEntry> entries;
};

inline ScanResult vanishing_scan(const Presentation& p, int bound, int degree) {
    if (bound < 1) throw input_error("scan bound must be >= 1");
    if (degree < 0) throw input_error("scan degree must be >= 0");
    ScanResult result;
    result.bound = bound;
    result.degree = degree;
    if (p.rank() == 0) return result;

    std::vector<int> u(static_cast<std::size_t>(p.rank()), -bound);
    bool done = false;
    bool all_nonzero = true;
    while (!done) {
        WeightVector w{u};
        if (!w.is_zero() && validate_weight(p, w).valid) {
            BettiVector b = novikov_betti(build_presentation_complex(p, w));
            int bk = degree < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(degree)] : 0;
            result.entries.push_back({u, bk});
            if (bk == 0) all_nonzero = false;
        }
        // lexicographic odometer over [-bound, bound]^p
        int i = p.rank() - 1;
        for (;; --i) {
            if (i < 0) {
                done = true;
                break;
            }
            if (u[static_cast<std::size_t>(i)] < bound) {
                ++u[static_cast<std::size_t>(i)];
                break;
            }
            u[static_cast<std::size_t>(i)] = -bound;
        }
    }
    result.nonvanishing_for_all_scanned = !result.entries.empty() && all_nonzero;
    return result;
}

struct FreeProductInput {
    Presentation p1, p2;
    NontrivialityWitness w1, w2;
};

struct ScanParams {
    int bound = 2;
    int degree = 1;
};

struct ReportInputs {
    Presentation presentation;
    std::string descriptor;
    std::optional<int> chi;
    std::optional<FreeProductInput> free_product;
    std::optional<ScanParams> scan;
};

// Certificate bundle for one candidate manifold description. The verdict is
// OBSTRUCTED exactly when a certificate is present; scan output is attached
// as evidence and never counts as one.
struct ObstructionReport {
    std::string descriptor;
    std::vector<Certificate> certificates;
    std::optional<ScanResult> evidence;

    std::string verdict() const {
        return certificates.empty() ? "NO-OBSTRUCTION-FOUND" : "OBSTRUCTED";
    }
};

// Runs every applicable check in the fixed order deficiency, free-product,
// euler, rank, then scan evidence. Adding optional inputs can only add
// certificates.
inline ObstructionReport report(const ReportInputs& in) {
    ObstructionReport rep;
    rep.descriptor = in.descriptor.empty() ? render(in.presentation) : in.descriptor;
    if (auto c = check_deficiency(in.presentation)) rep.certificates.push_back(*c);
    if (in.free_product)
        if (auto c = check_free_product(in.free_product->p1, in.free_product->w1,
                                        in.free_product->p2, in.free_product->w2))
            rep.certificates.push_back(*c);
    if (in.chi)
        if (auto c = check_euler(*in.chi)) rep.certificates.push_back(*c);
    if (auto c = check_rank(in.presentation)) rep.certificates.push_back(*c);
    if (in.scan)
        rep.evidence = vanishing_scan(in.presentation, in.scan->bound, in.scan->degree);
    return rep;
}

} // namespace novikov

#endif
