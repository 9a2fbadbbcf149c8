#ifndef NOVIKOV_JSON_IO_HPP
#define NOVIKOV_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "novikov/chain_complex.hpp"
#include "novikov/errors.hpp"
#include "novikov/obstruction.hpp"
#include "novikov/presentation.hpp"
#include "novikov/word.hpp"

// JSON forms of the file formats. All emitters use ordered_json with fixed
// insertion order, so identical inputs serialize to identical bytes.
namespace novikov {

inline ordered_json to_json(const Presentation& p) {
    ordered_json gens = ordered_json::array();
    for (const std::string& g : p.generators()) gens.push_back(g);
    ordered_json rels = ordered_json::array();
    for (const Word& r : p.relators()) {
        ordered_json letters = ordered_json::array();
        for (const Letter& l : r.letters())
            letters.push_back(ordered_json::array({p.generator_name(l.gen), l.exp}));
        rels.push_back(letters);
    }
    return {{"generators", gens}, {"relators", rels}};
}

inline Presentation presentation_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
        throw input_error("presentation JSON needs 'generators' and 'relators'");
    std::vector<std::string> gens;
    for (const auto& g : j.at("generators")) {
        if (!g.is_string()) throw input_error("generator names must be strings");
        gens.push_back(g.get<std::string>());
    }
    Presentation skeleton(gens, {});
    std::vector<Word> rels;
    for (const auto& rel : j.at("relators")) {
        if (!rel.is_array()) throw input_error("each relator must be an array of letters");
        Word w;
        for (const auto& letter : rel) {
            if (!letter.is_array() || letter.size() != 2 || !letter.at(0).is_string() ||
                !letter.at(1).is_number_integer())
                throw input_error("each letter must be a [name, exponent] pair");
            std::string name = letter.at(0).get<std::string>();
            int gen = skeleton.generator_index(name);
            if (gen == 0) throw input_error("unknown generator '" + name + "' in relator");
            w.push({gen, letter.at(1).get<int>()});
        }
        if (w.is_identity()) throw input_error("identity relator rejected");
        rels.push_back(std::move(w));
    }
    return Presentation(std::move(gens), std::move(rels));
}

inline ordered_json to_json(const LaurentPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : p.terms()) terms.push_back(t);
    return terms;
}

inline LaurentPoly laurent_from_json(const ordered_json& j, int vars) {
    if (!j.is_array()) throw input_error("polynomial entry must be an array of exponent vectors");
    LaurentPoly p(vars);
    for (const auto& t : j) {
        if (!t.is_array() || static_cast<int>(t.size()) != vars)
            throw input_error("exponent vector arity must equal the variable count");
        std::vector<int> v;
        for (const auto& e : t) {
            if (!e.is_number_integer()) throw input_error("exponents must be integers");
            v.push_back(e.get<int>());
        }
        p.toggle(std::move(v));
    }
    return p;
}

// {"variables": n, "dims": [n_0, ...], "boundaries": [rows x cols of entries]}
// where each entry is a mod-2 list of exponent vectors.
inline CwComplexData cw_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("dims") ||
        !j.contains("boundaries"))
        throw input_error("cellular JSON needs 'variables', 'dims' and 'boundaries'");
    CwComplexData data;
    data.vars = j.at("variables").get<int>();
    if (data.vars < 1) throw input_error("'variables' must be >= 1");
    for (const auto& d : j.at("dims")) data.dims.push_back(d.get<int>());
    const auto& bnds = j.at("boundaries");
    if (!bnds.is_array()) throw input_error("'boundaries' must be an array of matrices");
    for (std::size_t k = 0; k < bnds.size(); ++k) {
        if (k + 1 >= data.dims.size()) throw input_error("more boundaries than degrees");
        int rows = data.dims[k], cols = data.dims[k + 1];
        LaurentMatrix m(rows, cols, data.vars);
        const auto& mj = bnds.at(k);
        if (!mj.is_array() || static_cast<int>(mj.size()) != rows)
            throw input_error("boundary " + std::to_string(k + 1) + " must have " +
                              std::to_string(rows) + " rows");
        for (int r = 0; r < rows; ++r) {
            const auto& rowj = mj.at(static_cast<std::size_t>(r));
            if (!rowj.is_array() || static_cast<int>(rowj.size()) != cols)
                throw input_error("boundary " + std::to_string(k + 1) + " row " +
                                  std::to_string(r) + " must have " + std::to_string(cols) +
                                  " entries");
            for (int c = 0; c < cols; ++c)
                m.at(r, c) = laurent_from_json(rowj.at(static_cast<std::size_t>(c)), data.vars);
        }
        data.boundaries.push_back(std::move(m));
    }
    if (data.boundaries.size() + 1 != data.dims.size())
        throw input_error("expected one boundary per degree 1..top");
    return data;
}

// {"dims": [...], "boundaries": [rows x cols of 0/1]} and no "variables" key.
inline PlainComplex plain_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("boundaries"))
        throw input_error("plain complex JSON needs 'dims' and 'boundaries'");
    std::vector<int> dims;
    for (const auto& d : j.at("dims")) dims.push_back(d.get<int>());
    std::vector<std::vector<std::uint8_t>> boundaries;
    const auto& bnds = j.at("boundaries");
    if (!bnds.is_array()) throw input_error("'boundaries' must be an array of matrices");
    for (std::size_t k = 0; k < bnds.size(); ++k) {
        if (k + 1 >= dims.size()) throw input_error("more boundaries than degrees");
        int rows = dims[k], cols = dims[k + 1];
        std::vector<std::uint8_t> m;
        const auto& mj = bnds.at(k);
        if (!mj.is_array() || static_cast<int>(mj.size()) != rows)
            throw input_error("plain boundary " + std::to_string(k + 1) + " must have " +
                              std::to_string(rows) + " rows");
        for (const auto& rowj : mj) {
            if (!rowj.is_array() || static_cast<int>(rowj.size()) != cols)
                throw input_error("plain boundary row length mismatch");
            for (const auto& e : rowj) {
                int v = e.get<int>();
                if (v != 0 && v != 1) throw input_error("plain boundary entries must be 0 or 1");
                m.push_back(static_cast<std::uint8_t>(v));
            }
        }
        boundaries.push_back(std::move(m));
    }
    return PlainComplex(std::move(dims), std::move(boundaries));
}

// {"degree": m, "images": {"a": [...], ...}}, images 1-based and covering
// every generator of ctx.
inline NontrivialityWitness witness_from_json(const ordered_json& j, const Presentation& ctx) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("images"))
        throw input_error("witness JSON needs 'degree' and 'images'");
    NontrivialityWitness w;
    w.degree = j.at("degree").get<int>();
    const auto& images = j.at("images");
    if (!images.is_object()) throw input_error("'images' must map generator names to permutations");
    w.images.resize(static_cast<std::size_t>(ctx.rank()));
    std::vector<bool> seen(static_cast<std::size_t>(ctx.rank()), false);
    for (const auto& [name, img] : images.items()) {
        int gen = ctx.generator_index(name);
        if (gen == 0) throw input_error("witness image for unknown generator '" + name + "'");
        std::vector<int> perm;
        for (const auto& e : img) perm.push_back(e.get<int>());
        w.images[static_cast<std::size_t>(gen - 1)] = std::move(perm);
        seen[static_cast<std::size_t>(gen - 1)] = true;
    }
    for (int i = 1; i <= ctx.rank(); ++i)
        if (!seen[static_cast<std::size_t>(i - 1)])
            throw input_error("witness missing image for generator '" + ctx.generator_name(i) + "'");
    return w;
}

inline ordered_json betti_json(const BettiVector& b, int euler, const std::vector<int>& weight) {
    return {{"betti", b}, {"euler", euler}, {"weight", weight}};
}

inline ordered_json to_json(const ScanResult& s) {
    ordered_json entries = ordered_json::array();
    for (const ScanEntry& e : s.entries)
        entries.push_back({{"weight", e.weights}, {"betti", e.betti}});
    return {{"kind", "vanishing-scan"},
            {"bound", s.bound},
            {"degree", s.degree},
            {"note", "heuristic evidence only: the scan is finite and the fibration-induced "
                     "class is not known to the tool"},
            {"nonvanishing_for_all_scanned", s.nonvanishing_for_all_scanned},
            {"entries", entries}};
}

inline ordered_json to_json(const Certificate& c) {
    ordered_json j = {{"rule", c.rule},
                      {"citation", c.citation},
                      {"witness", c.witness},
                      {"scope", c.scope}};
    if (!c.caveat.empty()) j["caveat"] = c.caveat;
    return j;
}

inline ordered_json to_json(const ObstructionReport& r) {
    ordered_json certs = ordered_json::array();
    for (const Certificate& c : r.certificates) certs.push_back(to_json(c));
    ordered_json j = {{"verdict", r.verdict()}, {"input", r.descriptor}, {"certificates", certs}};
    if (r.evidence) j["evidence"] = to_json(*r.evidence);
    return j;
}

} // namespace novikov

#endif
