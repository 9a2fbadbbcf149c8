// Command-line front end: exact Novikov homology computations from group
// presentations or equivariant cellular data, and obstruction reports for
// exact Lagrangian embeddings into cotangent bundles of circle-fibered
// manifolds.
//
// Exit codes: 0 computed (including NO-OBSTRUCTION-FOUND), 2 input error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "novikov/chain_complex.hpp"
#include "novikov/errors.hpp"
#include "novikov/group_ring.hpp"
#include "novikov/json_io.hpp"
#include "novikov/laurent.hpp"
#include "novikov/obstruction.hpp"
#include "novikov/presentation.hpp"
#include "novikov/series.hpp"
#include "novikov/word.hpp"

namespace {

using novikov::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw novikov::input_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline text starts with '<' (presentation) or '{' (JSON); anything else is
// a file path whose content is sniffed the same way.
std::string resolve_input(const std::string& arg) {
    for (char c : arg) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '<' || c == '{') return arg;
        break;
    }
    return slurp(arg);
}

char first_glyph(const std::string& text) {
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) return c;
    return '\0';
}

novikov::Presentation load_presentation(const std::string& arg) {
    std::string text = resolve_input(arg);
    if (first_glyph(text) == '{') {
        ordered_json j = ordered_json::parse(text, nullptr, false);
        if (j.is_discarded()) throw novikov::input_error("malformed JSON presentation");
        return novikov::presentation_from_json(j);
    }
    return novikov::parse_presentation(text);
}

ordered_json load_json_file(const std::string& arg) {
    ordered_json j = ordered_json::parse(resolve_input(arg), nullptr, false);
    if (j.is_discarded()) throw novikov::input_error("malformed JSON in '" + arg + "'");
    return j;
}

std::vector<int> parse_weights(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(cur, &used);
            while (used < cur.size() && std::isspace(static_cast<unsigned char>(cur[used]))) ++used;
            if (used != cur.size()) throw std::invalid_argument(cur);
            out.push_back(v);
        } catch (const std::exception&) {
            throw novikov::input_error("bad weight entry '" + cur + "'");
        }
    }
    if (out.empty()) throw novikov::input_error("empty weight vector");
    return out;
}

std::string betti_text(const novikov::BettiVector& b) {
    std::string out = "[";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b[i]);
    }
    return out + "]";
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// Either a presentation (built at u) or cellular data; both betti and euler
// accept the two shapes.
struct ComplexInput {
    std::optional<novikov::Presentation> presentation;
    std::optional<novikov::CwComplexData> cw;
};

ComplexInput load_complex_input(const std::string& arg) {
    std::string text = resolve_input(arg);
    ComplexInput in;
    if (first_glyph(text) == '{') {
        ordered_json j = ordered_json::parse(text, nullptr, false);
        if (j.is_discarded()) throw novikov::input_error("malformed JSON input");
        if (j.contains("variables"))
            in.cw = novikov::cw_from_json(j);
        else
            in.presentation = novikov::presentation_from_json(j);
    } else {
        in.presentation = novikov::parse_presentation(text);
    }
    return in;
}

int run(int argc, char** argv) {
    CLI::App app{"Novikov homology and Lagrangian embedding obstructions"};
    app.require_subcommand(1);
    std::string format = "text";

    // fox
    auto* fox = app.add_subcommand("fox", "Free derivatives of the relators by one generator");
    std::string fox_input, fox_gen;
    fox->add_option("presentation", fox_input, "presentation text or file")->required();
    fox->add_option("--gen", fox_gen, "generator name")->required();
    fox->add_option("--format", format, "text or json");

    // betti
    auto* betti = app.add_subcommand("betti", "Novikov Betti numbers at a weight class");
    std::string betti_input, betti_u;
    betti->add_option("input", betti_input, "presentation or cellular JSON, text or file")->required();
    betti->add_option("-u,--weights", betti_u, "comma-separated integer weights")->required();
    betti->add_option("--format", format, "text or json");

    // euler
    auto* euler = app.add_subcommand("euler", "Euler characteristic with a homology cross-check");
    std::string euler_input;
    euler->add_option("input", euler_input, "presentation or cellular JSON, text or file")->required();
    euler->add_option("--format", format, "text or json");

    // invert
    auto* invert = app.add_subcommand("invert", "Invert a unit of the Novikov ring");
    std::string invert_poly, invert_u;
    int trunc = 32;
    invert->add_option("poly", invert_poly, "Laurent polynomial text")->required();
    invert->add_option("-u,--weights", invert_u, "weights, one per variable")->required();
    invert->add_option("-N,--truncation", trunc, "truncation level (default 32)");
    invert->add_option("--format", format, "text or json");

    // kunneth
    auto* kunneth = app.add_subcommand(
        "kunneth", "Tensor a Laurent complex with a plain Z/2 complex and compare Betti data");
    std::string kun_c1, kun_c2, kun_u;
    kunneth->add_option("complex", kun_c1, "presentation or cellular JSON")->required();
    kunneth->add_option("plain", kun_c2, "plain Z/2 complex JSON")->required();
    kunneth->add_option("-u,--weights", kun_u, "weights for the first factor")->required();
    kunneth->add_option("--format", format, "text or json");

    // obstruct
    auto* obstruct = app.add_subcommand("obstruct", "Obstruction certificates for a candidate L");
    std::string obs_pres;
    std::vector<std::string> obs_fp;
    std::optional<int> obs_chi;
    bool obs_scan = false;
    int obs_bound = 2, obs_scan_degree = 1;
    obstruct->add_option("--presentation", obs_pres, "presentation text or file");
    obstruct
        ->add_option("--free-product", obs_fp,
                     "two PRESENTATION:WITNESS file pairs, one per free factor")
        ->expected(2);
    obstruct->add_option("--chi", obs_chi, "Euler characteristic of L, if known");
    obstruct->add_flag("--scan", obs_scan, "attach vanishing-scan evidence");
    obstruct->add_option("-B,--bound", obs_bound, "scan box bound (default 2)");
    obstruct->add_option("--scan-degree", obs_scan_degree, "scan degree (default 1)");
    obstruct->add_option("--format", format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (format != "text" && format != "json")
        throw novikov::input_error("--format must be 'text' or 'json'");
    const bool json_out = format == "json";

    if (fox->parsed()) {
        novikov::Presentation p = load_presentation(fox_input);
        int gen = p.generator_index(fox_gen);
        if (gen == 0) throw novikov::input_error("unknown generator '" + fox_gen + "'");
        std::vector<std::string> rows;
        for (const novikov::Word& r : p.relators())
            rows.push_back(novikov::render(novikov::fox_derivative(r, gen), p));
        if (json_out) {
            emit({{"generator", fox_gen}, {"derivatives", rows}});
        } else {
            for (const std::string& s : rows) std::cout << s << "\n";
        }
        return 0;
    }

    if (betti->parsed()) {
        ComplexInput in = load_complex_input(betti_input);
        std::vector<int> u = parse_weights(betti_u);
        novikov::BettiVector b;
        if (in.presentation) {
            novikov::WeightVector w{u};
            if (w.is_zero())
                std::cerr << "warning: trivial class u = 0; these are ordinary Z/2 Betti "
                             "numbers of the presentation complex\n";
            b = novikov::novikov_betti(novikov::build_presentation_complex(*in.presentation, w));
        } else {
            bool zero = true;
            for (int v : u) zero = zero && v == 0;
            if (zero) std::cerr << "warning: trivial class u = 0\n";
            b = novikov::novikov_betti(novikov::build_from_cw(*in.cw, u));
        }
        int chi = 0;
        for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * b[k];
        if (json_out)
            emit(novikov::betti_json(b, chi, u));
        else
            std::cout << betti_text(b) << "\n";
        return 0;
    }

    if (euler->parsed()) {
        ComplexInput in = load_complex_input(euler_input);
        novikov::ChainComplex c =
            in.presentation
                ? novikov::build_presentation_complex(
                      *in.presentation,
                      novikov::WeightVector{std::vector<int>(
                          static_cast<std::size_t>(in.presentation->rank()), 0)})
                : novikov::build_from_cw(*in.cw,
                                         std::vector<int>(static_cast<std::size_t>(in.cw->vars), 0));
        int chi = novikov::euler_characteristic(c);
        novikov::BettiVector b = novikov::novikov_betti(c);
        if (json_out) {
            emit({{"euler", chi}, {"betti_at_zero", b}});
        } else {
            std::cout << chi << "\n";
            int alt = 0;
            for (std::size_t k = 0; k < b.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * b[k];
            std::cout << "cross-check: betti at u = 0 is " << betti_text(b)
                      << ", alternating sum " << alt << "\n";
        }
        return 0;
    }

    if (invert->parsed()) {
        std::vector<int> u = parse_weights(invert_u);
        if (trunc < 1) throw novikov::input_error("truncation level must be >= 1");
        novikov::LaurentPoly poly =
            novikov::parse_laurent(invert_poly, static_cast<int>(u.size()));
        novikov::WeightVector w{u};
        novikov::NovikovSeries s = novikov::NovikovSeries::from_laurent(poly, w, trunc);
        if (s.truncated())
            std::cerr << "warning: input has terms above level " << trunc << "; truncated\n";
        novikov::NovikovSeries inv = novikov::series_invert(s);
        if (json_out) {
            emit({{"series", novikov::render(inv)},
                  {"truncation", inv.truncation()},
                  {"truncated", inv.truncated()},
                  {"weight", u}});
        } else {
            std::cout << novikov::render(inv) << "\n";
        }
        return 0;
    }

    if (kunneth->parsed()) {
        ComplexInput in = load_complex_input(kun_c1);
        std::vector<int> u = parse_weights(kun_u);
        novikov::ChainComplex c1 =
            in.presentation
                ? novikov::build_presentation_complex(*in.presentation, novikov::WeightVector{u})
                : novikov::build_from_cw(*in.cw, u);
        novikov::PlainComplex c2 = novikov::plain_from_json(load_json_file(kun_c2));

        novikov::BettiVector tensor = novikov::novikov_betti(novikov::tensor_product(c1, c2));
        novikov::BettiVector b1 = novikov::novikov_betti(c1);
        novikov::BettiVector b2 = novikov::ordinary_betti(c2);
        novikov::BettiVector conv(b1.size() + b2.size() - 1, 0);
        for (std::size_t i = 0; i < b1.size(); ++i)
            for (std::size_t j = 0; j < b2.size(); ++j) conv[i + j] += b1[i] * b2[j];
        bool match = conv == tensor;
        if (json_out) {
            emit({{"tensor_betti", tensor}, {"convolution", conv}, {"match", match}, {"weight", u}});
        } else {
            std::cout << "tensor betti: " << betti_text(tensor) << "\n"
                      << "convolution:  " << betti_text(conv) << "\n"
                      << "match: " << (match ? "true" : "false") << "\n";
        }
        return 0;
    }

    if (obstruct->parsed()) {
        novikov::ReportInputs inputs;
        std::optional<novikov::FreeProductInput> fp;
        if (!obs_fp.empty()) {
            novikov::FreeProductInput f;
            auto load_pair = [&](const std::string& arg, novikov::Presentation& p,
                                 novikov::NontrivialityWitness& w) {
                auto colon = arg.find(':');
                if (colon == std::string::npos)
                    throw novikov::input_error("--free-product arguments must look like "
                                               "PRESENTATION:WITNESS");
                p = load_presentation(arg.substr(0, colon));
                w = novikov::witness_from_json(load_json_file(arg.substr(colon + 1)), p);
            };
            load_pair(obs_fp[0], f.p1, f.w1);
            load_pair(obs_fp[1], f.p2, f.w2);
            fp = std::move(f);
        }
        if (!obs_pres.empty()) {
            inputs.presentation = load_presentation(obs_pres);
        } else if (fp) {
            inputs.presentation = novikov::free_product(fp->p1, fp->p2);
        } else {
            throw novikov::input_error("obstruct needs --presentation or --free-product");
        }
        inputs.descriptor = novikov::render(inputs.presentation);
        inputs.chi = obs_chi;
        inputs.free_product = std::move(fp);
        if (obs_scan) inputs.scan = novikov::ScanParams{obs_bound, obs_scan_degree};

        novikov::ObstructionReport rep = novikov::report(inputs);
        if (json_out) {
            emit(novikov::to_json(rep));
        } else {
            std::cout << "verdict: " << rep.verdict() << "\n";
            for (const novikov::Certificate& c : rep.certificates)
                std::cout << "certificate: " << c.rule << " [" << c.citation << "]\n";
            if (rep.evidence)
                std::cout << "scan evidence: "
                          << (rep.evidence->nonvanishing_for_all_scanned
                                  ? "nonvanishing for all scanned classes"
                                  : "not conclusive")
                          << " (" << rep.evidence->entries.size() << " classes)\n";
        }
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const novikov::invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const novikov::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
