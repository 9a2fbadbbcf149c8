#ifndef NOVIKOV_PRESENTATION_HPP
#define NOVIKOV_PRESENTATION_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/word.hpp"

namespace novikov {

// Finite group presentation <g_1, ..., g_p | r_1, ..., r_q>. Generator names
// are unique identifiers matching [A-Za-z][A-Za-z0-9_]*; relators are freely
// reduced nonidentity words over the declared generators. Both lists may be
// empty (free groups, the trivial group).
class Presentation {
public:
    Presentation() = default;

    Presentation(std::vector<std::string> generators, std::vector<Word> relators)
        : generators_(std::move(generators)), relators_(std::move(relators)) {
        validate();
    }

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<Word>& relators() const { return relators_; }

    int rank() const { return static_cast<int>(generators_.size()); }
    int relator_count() const { return static_cast<int>(relators_.size()); }

    const std::string& generator_name(int gen) const {
        return generators_.at(static_cast<std::size_t>(gen - 1));
    }

    // 1-based index of a generator name, or 0 when absent.
    int generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < generators_.size(); ++i)
            if (generators_[i] == name) return static_cast<int>(i + 1);
        return 0;
    }

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    void validate() const {
        std::set<std::string> seen;
        for (const std::string& g : generators_) {
            if (!valid_name(g)) throw input_error("invalid generator name '" + g + "'");
            if (!seen.insert(g).second) throw input_error("duplicate generator '" + g + "'");
        }
        for (const Word& r : relators_) {
            if (r.is_identity()) throw input_error("identity relator rejected");
            if (r.max_generator() > rank())
                throw input_error("relator references undeclared generator index " +
                                  std::to_string(r.max_generator()));
        }
    }

    static bool valid_name(const std::string& s) {
        if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0]))))
            return false;
        for (char c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
        return true;
    }

    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

namespace detail {

// Recursive-descent parser for the presentation grammar
//
//   presentation := "<" gen-list "|" relator-list ">"
//   gen-list     := [ name ("," name)* ]
//   relator-list := [ word ("," word)* ]
//   word         := element+
//   element      := letter | "[" word "," word "]"
//   letter       := name ["^" signed-int]
//
// [x,y] is sugar for the commutator x y x^-1 y^-1; x and y may themselves be
// words. Letters are whitespace-separated.
class PresentationParser {
public:
    explicit PresentationParser(std::string text) : text_(std::move(text)) {}

    Presentation parse() {
        expect('<');
        std::vector<std::string> gens = parse_name_list();
        expect('|');
        Presentation skeleton(gens, {});
        std::vector<Word> relators;
        skip_ws();
        if (peek() != '>') {
            relators.push_back(parse_relator(skeleton));
            while (skip_ws(), peek() == ',') {
                ++pos_;
                relators.push_back(parse_relator(skeleton));
            }
        }
        expect('>');
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("trailing input after '>'", pos_);
        return Presentation(std::move(gens), std::move(relators));
    }

    // A standalone word in the letter syntax, resolved against ctx.
    Word parse_word_only(const Presentation& ctx) {
        Word w = parse_word(ctx);
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("trailing input after word", pos_);
        return w;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::vector<std::string> parse_name_list() {
        std::vector<std::string> names;
        skip_ws();
        if (peek() == '|') return names;
        names.push_back(parse_name());
        while (skip_ws(), peek() == ',') {
            ++pos_;
            names.push_back(parse_name());
        }
        return names;
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            throw parse_error("expected generator name", pos_);
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        return text_.substr(start, pos_ - start);
    }

    int parse_signed_int() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected integer exponent", pos_);
        long v = 0;
        bool neg = text_[start] == '-';
        std::size_t digits = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw parse_error("exponent too large", digits);
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    Word parse_relator(const Presentation& ctx) {
        std::size_t start = pos_;
        Word w = parse_word(ctx);
        if (w.is_identity()) throw parse_error("relator reduces to the identity", start);
        return w;
    }

    Word parse_word(const Presentation& ctx) {
        Word w;
        bool any = false;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '[') {
                ++pos_;
                Word x = parse_word(ctx);
                expect(',');
                Word y = parse_word(ctx);
                expect(']');
                w = w * x * y * inverse(x) * inverse(y);
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t at = pos_;
                std::string name = parse_name();
                int gen = ctx.generator_index(name);
                if (gen == 0) throw parse_error("unknown generator '" + name + "'", at);
                int exp = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    exp = parse_signed_int();
                    if (exp == 0) throw parse_error("zero exponent", at);
                }
                w.push({gen, exp});
                any = true;
            } else {
                break;
            }
        }
        if (!any) throw parse_error("expected a word", pos_);
        return w;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Presentation parse_presentation(const std::string& text) {
    return detail::PresentationParser(text).parse();
}

inline Word parse_word(const std::string& text, const Presentation& ctx) {
    return detail::PresentationParser(text).parse_word_only(ctx);
}

inline std::string render(const Word& w, const Presentation& ctx) {
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += ctx.generator_name(l.gen);
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

inline std::string render(const Presentation& p) {
    std::string out = "<";
    for (std::size_t i = 0; i < p.generators().size(); ++i) {
        if (i) out += ", ";
        out += p.generators()[i];
    }
    out += " | ";
    for (std::size_t j = 0; j < p.relators().size(); ++j) {
        if (j) out += ", ";
        out += render(p.relators()[j], p);
    }
    out += ">";
    return out;
}

inline int deficiency(const Presentation& p) { return p.rank() - p.relator_count(); }

namespace detail {

// Disjoint generator names for a two-factor product; clashes get a _1 / _2
// suffix (repeated until unique).
inline std::pair<std::vector<std::string>, std::vector<std::string>>
disjoint_names(const Presentation& p1, const Presentation& p2) {
    std::set<std::string> used1(p1.generators().begin(), p1.generators().end());
    std::set<std::string> used2(p2.generators().begin(), p2.generators().end());
    std::vector<std::string> n1 = p1.generators();
    std::vector<std::string> n2 = p2.generators();
    std::set<std::string> taken;
    auto rename = [&](std::string name, const std::set<std::string>& other,
                      const char* suffix) {
        while (other.count(name) || taken.count(name)) name += suffix;
        taken.insert(name);
        return name;
    };
    for (std::string& n : n1) n = rename(n, used2, "_1");
    for (std::string& n : n2) n = rename(n, used1, "_2");
    return {n1, n2};
}

inline Word shift_word(const Word& w, int offset) {
    std::vector<Letter> ls = w.letters();
    for (Letter& l : ls) l.gen += offset;
    return Word(std::move(ls));
}

} // namespace detail

// <gens(P1) + gens(P2) | relators(P1) + relators(P2)>.
inline Presentation free_product(const Presentation& p1, const Presentation& p2) {
    auto [n1, n2] = detail::disjoint_names(p1, p2);
    std::vector<std::string> gens = n1;
    gens.insert(gens.end(), n2.begin(), n2.end());
    std::vector<Word> rels = p1.relators();
    for (const Word& r : p2.relators()) rels.push_back(detail::shift_word(r, p1.rank()));
    return Presentation(std::move(gens), std::move(rels));
}

// Free product plus all commutators [g_i, h_j] between the two factors.
inline Presentation direct_product(const Presentation& p1, const Presentation& p2) {
    Presentation fp = free_product(p1, p2);
    std::vector<Word> rels = fp.relators();
    for (int i = 1; i <= p1.rank(); ++i)
        for (int j = 1; j <= p2.rank(); ++j) {
            int h = p1.rank() + j;
            rels.push_back(Word({{i, 1}, {h, 1}, {i, -1}, {h, -1}}));
        }
    return Presentation(fp.generators(), std::move(rels));
}

// Standard one-relator surface presentations:
//   orientable genus g:      <a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>
//   non-orientable genus g:  <a1,...,ag | a1^2 ... ag^2>
inline Presentation surface_presentation(int genus, bool orientable) {
    if (genus < 1) throw input_error("genus must be >= 1");
    std::vector<std::string> gens;
    Word relator;
    if (orientable) {
        for (int i = 1; i <= genus; ++i) {
            gens.push_back("a" + std::to_string(i));
            gens.push_back("b" + std::to_string(i));
        }
        for (int i = 0; i < genus; ++i) {
            int a = 2 * i + 1, b = 2 * i + 2;
            relator = relator * Word({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
        }
    } else {
        for (int i = 1; i <= genus; ++i) gens.push_back("a" + std::to_string(i));
        for (int i = 1; i <= genus; ++i) relator = relator * Word({{i, 2}});
    }
    return Presentation(std::move(gens), {relator});
}

// Outcome of checking that integer weights descend to the quotient group:
// u must kill every relator.
struct WeightReport {
    bool valid = false;
    bool trivial_class = false;
    // (relator index, weight) for every relator with nonzero weight.
    std::vector<std::pair<int, long>> failures;
};

inline WeightReport validate_weight(const Presentation& p, const WeightVector& u) {
    if (u.rank() != p.rank())
        throw input_error("weight vector rank " + std::to_string(u.rank()) +
                          " does not match presentation rank " + std::to_string(p.rank()));
    WeightReport rep;
    for (int j = 0; j < p.relator_count(); ++j) {
        long w = u_weight(p.relators()[static_cast<std::size_t>(j)], u);
        if (w != 0) rep.failures.emplace_back(j, w);
    }
    rep.valid = rep.failures.empty();
    rep.trivial_class = u.is_zero();
    return rep;
}

namespace detail {

// Rank over Q of an integer matrix, by fraction-free elimination (Bareiss).
// Row entries stay exact; sizes here are tiny.
inline int integer_matrix_rank(std::vector<std::vector<long long>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    long long prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                __int128 num = static_cast<__int128>(m[r][c]) * m[i][j] -
                               static_cast<__int128>(m[i][c]) * m[r][j];
                m[i][j] = static_cast<long long>(num / prev);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace detail

// rank of H_1 tensor Q: p minus the rational rank of the relator
// abelianization matrix. Positive iff some nonzero class pi_1 -> Z exists.
inline int abelianization_rank(const Presentation& p) {
    std::vector<std::vector<long long>> m;
    for (const Word& r : p.relators()) {
        std::vector<int> row = abelianize(r, p.rank());
        m.emplace_back(row.begin(), row.end());
    }
    return p.rank() - detail::integer_matrix_rank(std::move(m));
}

} // namespace novikov

#endif
