#include "tropcrit/crit.hpp"
#include "tropcrit/errors.hpp"
#include "tropcrit/json_io.hpp"
#include "tropcrit/polytope.hpp"
#include "tropcrit/sections.hpp"
#include "tropcrit/superpot.hpp"
#include "tropcrit/tropsolve.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace tropcrit;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::optional<int> n;
    std::string weight;
    std::string word = "all";
    std::optional<int> K;
    double tol = 1e-9;
    std::string format = "text";
    int bound = 2;
    unsigned threads = 0;
    bool numeric = false;
};

DominantWeight weight_of(const RunConfig& c) {
    if (c.weight.empty()) throw UsageError("--weight is required");
    try {
        return DominantWeight::parse(c.weight, c.n);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--weight: ") + e.what());
    }
}

std::vector<ReducedWord> words_of(const RunConfig& c, int n) {
    if (c.word == "all") return reduced_words(n);
    ReducedWord w;
    try {
        w = parse_word(c.word);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--word: ") + e.what());
    }
    if (!is_reduced_word_of(w, longest_element(n)))
        throw UsageError("--word: " + c.word + " is not a reduced word for w0 in S_" + std::to_string(n));
    return {w};
}

int truncation(const RunConfig& c, int fallback) {
    if (c.K) return *c.K;
    if (const char* env = std::getenv("TROPCRIT_PRECISION")) {
        try {
            std::size_t used = 0;
            int k = std::stoi(env, &used);
            if (used != std::string(env).size() || k < 0) throw std::invalid_argument(env);
            return k;
        } catch (const std::exception&) {
            throw UsageError(std::string("TROPCRIT_PRECISION: not a nonnegative integer: ") + env);
        }
    }
    return fallback;
}

std::string plain(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        std::string s = "(";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + plain(j[i]);
        return s + ")";
    }
    if (j.is_number_float()) {
        std::ostringstream os;
        os << std::setprecision(12) << j.get<double>();
        return os.str();
    }
    return j.dump();
}

// Rows of objects as an aligned table.
void table(std::ostream& os, const Json& rows, const std::vector<std::string>& keys) {
    std::vector<std::size_t> w(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) {
        w[k] = keys[k].size();
        for (const auto& r : rows) w[k] = std::max(w[k], plain(r[keys[k]]).size());
    }
    auto line = [&](auto cell) {
        for (std::size_t k = 0; k < keys.size(); ++k)
            os << std::left << std::setw(static_cast<int>(w[k] + 2)) << cell(k);
        os << "\n";
    };
    line([&](std::size_t k) { return keys[k]; });
    for (const auto& r : rows) line([&](std::size_t k) { return plain(r[keys[k]]); });
}

void emit(const RunConfig& c, const Json& j, const std::function<void(std::ostream&, const Json&)>& text) {
    if (c.format == "json") std::cout << j.dump() << "\n";
    else text(std::cout, j);
}

void text_fields(std::ostream& os, const Json& j) {
    for (auto it = j.begin(); it != j.end(); ++it) os << it.key() << ": " << plain(it.value()) << "\n";
}

void text_filling(std::ostream& os, const Json& j) {
    table(os, j["entries"], {"i", "j", "value"});
    os << "is_integral: " << plain(j["is_integral"]) << "\n";
}

int cmd_tropical(const RunConfig& c) {
    auto lam = weight_of(c);
    auto q = build_quiver(lam.n());
    auto j = tropical_json(q, solve_tropical(q, lam));
    emit(c, j, [](std::ostream& os, const Json& j) {
        table(os, j["arrows"], {"label", "tail", "head", "sigma"});
        os << "\n";
        table(os, j["vertices"], {"name", "delta"});
    });
    return 0;
}

int cmd_filling(const RunConfig& c) {
    emit(c, filling_json(ideal_filling(weight_of(c))), text_filling);
    return 0;
}

int cmd_chain(const RunConfig& c) {
    auto lam = weight_of(c);
    Json j = {{"lambda", to_json(lam)}, {"chain", chain_json(chain_decomposition(lam))}};
    emit(c, j, [](std::ostream& os, const Json& j) {
        os << "lambda: " << plain(j["lambda"]) << "\n";
        table(os, j["chain"], {"I_P", "lambda_P", "coefficient"});
    });
    return 0;
}

int cmd_integral(const RunConfig& c) {
    auto lam = weight_of(c);
    auto f = ideal_filling(lam);
    Json j = {{"lambda", to_json(lam)}, {"is_integral", f.is_integral()}, {"filling", filling_json(f)}};
    emit(c, j, [](std::ostream& os, const Json& j) {
        os << "lambda: " << plain(j["lambda"]) << "\nintegral: " << plain(j["is_integral"]) << "\n";
        table(os, j["filling"]["entries"], {"i", "j", "value"});
    });
    return 0;
}

int cmd_ffl(const RunConfig& c) {
    auto lam = weight_of(c);
    auto f = ideal_filling(lam);
    auto r = ffl_check(lam, f.flat());
    Json j = {{"lambda", to_json(lam)}, {"point", to_json(f.flat())}, {"inside", r.inside}, {"violations", r.violations}};
    emit(c, j, text_fields);
    return 0;
}

int cmd_puiseux(const RunConfig& c) {
    auto lam = weight_of(c);
    auto e = expand_critical_point<double>(lam, truncation(c, 8));
    auto j = expansion_json(e);
    emit(c, j, [](std::ostream& os, const Json& j) {
        os << "K: " << plain(j["K"]) << "  M: " << plain(j["M"]) << "  residual: " << plain(j["residual"]) << "\n";
        table(os, j["arrows"], {"label", "valuation", "series"});
    });
    return 0;
}

int cmd_string_polytope(const RunConfig& c) {
    auto lam = weight_of(c);
    for (const auto& w : words_of(c, lam.n())) {
        auto j = polytope_json(string_polytope(lam, w));
        emit(c, j, [](std::ostream& os, const Json& j) {
            os << "word " << plain(j["word"]) << ", lambda " << plain(j["lambda"]) << "\n";
            for (const auto& f : j["inequalities"]) os << "  " << plain(f) << "\n";
            os << "points (" << j["points"].size() << "):";
            for (const auto& p : j["points"]) os << " " << plain(p);
            os << "\n";
        });
    }
    return 0;
}

int cmd_nu_vee(const RunConfig& c) {
    auto lam = weight_of(c);
    for (const auto& w : words_of(c, lam.n())) {
        Json j = {{"n", lam.n()}, {"lambda", to_json(lam)}, {"word", word_str(w)}};
        if (c.numeric) {
            int K = truncation(c, 8);
            auto r = nu_vee_numeric(lam, w, K, std::max(K, 64));
            j["nu_vee"] = to_json(r.point);
            j["K"] = r.K;
        } else {
            j["nu_vee"] = to_json(nu_vee(lam, w));
        }
        emit(c, j, text_fields);
    }
    return 0;
}

int cmd_nu(const RunConfig& c) {
    auto lam = weight_of(c);
    for (const auto& w : words_of(c, lam.n())) {
        Json j = section_json(omega_inv(lam, w));
        j["lambda"] = to_json(lam);
        emit(c, j, text_fields);
    }
    return 0;
}

int cmd_conjecture(const RunConfig& c) {
    auto lam = weight_of(c);
    bool all_equal = true;
    for (const auto& w : words_of(c, lam.n())) {
        auto r = conjecture_check(lam, w);
        all_equal = all_equal && r.equal;
        emit(c, conjecture_json(r), text_fields);
    }
    return all_equal ? 0 : 1;
}

int cmd_sweep(const RunConfig& c) {
    if (!c.n) throw UsageError("--n is required");
    if (*c.n < 2) throw UsageError("--n must be at least 2");
    if (c.bound < 0) throw UsageError("--bound must be nonnegative");
    auto res = conjecture_sweep(*c.n, c.bound, words_of(c, *c.n), c.threads);
    Json summary = {{"summary", true},        {"n", *c.n},
                    {"bound", c.bound},        {"cases", res.cases.size()},
                    {"equal", res.equal},      {"unequal", res.unequal},
                    {"unsupported", res.unsupported}};
    if (c.format == "json") {
        for (const auto& sc : res.cases) std::cout << sweep_case_json(sc).dump() << "\n";
        std::cout << summary.dump() << "\n";
    } else {
        for (const auto& sc : res.cases) {
            std::cout << plain(to_json(sc.lambda)) << "  " << word_str(sc.word) << "  ";
            if (sc.report)
                std::cout << "nu=" << plain(Json(sc.report->nu)) << " nu_vee=" << plain(to_json(sc.report->nu_vee))
                          << (sc.report->equal ? "  equal" : "  DIFFERENT") << "\n";
            else
                std::cout << "unsupported (" << sc.error_code << "): " << sc.error << "\n";
        }
        std::cout << "cases " << res.cases.size() << ", equal " << res.equal << ", unequal " << res.unequal
                  << ", unsupported " << res.unsupported << "\n";
    }
    return res.unequal == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical critical points, string polytopes and canonical sections for SL_n flag varieties"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* s, bool word) {
        s->add_option("--n", cfg.n, "rank n of SL_n")->check(CLI::Range(2, 12));
        s->add_option("--weight", cfg.weight, "lift \"7,5,0\", fundamental \"2w1+5w2\", \"rho\" or \"0\"");
        if (word) s->add_option("--word", cfg.word, "reduced word for w0 (e.g. 212) or \"all\"");
        s->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    };
    struct Sub {
        const char* name;
        const char* help;
        bool word;
        int (*run)(const RunConfig&);
    };
    const Sub subs[] = {
        {"tropical", "tropical critical point on the quiver", false, cmd_tropical},
        {"filling", "ideal filling of the tropical point", false, cmd_filling},
        {"chain", "parabolic chain decomposition", false, cmd_chain},
        {"integral", "whether the ideal filling is integral", false, cmd_integral},
        {"puiseux", "Puiseux expansion of the critical point", false, cmd_puiseux},
        {"string-polytope", "string polytope and its lattice points", true, cmd_string_polytope},
        {"nu-vee", "valuation of the critical point in a chart", true, cmd_nu_vee},
        {"nu", "canonical section omega^{-1} and its valuation", true, cmd_nu},
        {"conjecture", "compare nu(omega^{-1}) with nu_vee(p_lambda)", true, cmd_conjecture},
        {"ffl", "FFL membership of the ideal filling", false, cmd_ffl},
        {"sweep", "conjecture check over all integral weights up to a bound", true, cmd_sweep},
    };
    int (*chosen)(const RunConfig&) = nullptr;
    for (const auto& s : subs) {
        auto* sc = app.add_subcommand(s.name, s.help);
        common(sc, s.word);
        if (std::string(s.name) == "puiseux" || std::string(s.name) == "nu-vee")
            sc->add_option("--K", cfg.K, "truncation order (default: TROPCRIT_PRECISION or 8)")->check(CLI::NonNegativeNumber);
        if (std::string(s.name) == "nu-vee") sc->add_flag("--numeric", cfg.numeric, "use the Puiseux pipeline");
        if (std::string(s.name) == "sweep") {
            sc->add_option("--bound", cfg.bound, "largest fundamental coefficient");
            sc->add_option("--threads", cfg.threads, "worker count (0: hardware)");
        }
        sc->callback([&chosen, run = s.run] { chosen = run; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return chosen(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cout << error_json(e).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << error_json("InternalError", e.what()).dump() << "\n";
        return 1;
    }
}
