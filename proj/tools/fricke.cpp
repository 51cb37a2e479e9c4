// Command-line workbench: exact bases of modular-form spaces for SL2(Z),
// Gamma0(2) and Gamma0(4), newspace identification, word decompositions,
// and numeric checks of the Fricke sign and the completed-L functional
// equation.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mf/analytic.hpp"
#include "mf/checks.hpp"
#include "mf/errors.hpp"
#include "mf/formspace.hpp"
#include "mf/generators.hpp"
#include "mf/heckeforms.hpp"
#include "mf/json_io.hpp"
#include "mf/report.hpp"
#include "mf/sl2words.hpp"

namespace {

constexpr const char* kCacheVersion = "mf1";

struct Config {
    long precision = 0;  // 0: per-weight default
    long terms = 400;
    double tol = 1e-8;
    std::uint64_t seed = 12345;
    std::string cache_dir;
    bool no_cache = false;
    std::string format = "json";
    bool strict = false;
};

std::vector<long> parse_weights(const std::string& text) {
    std::vector<long> out;
    auto range = text.find("..");
    if (range != std::string::npos) {
        long lo = std::stol(text.substr(0, range));
        long hi = std::stol(text.substr(range + 2));
        for (long k = lo; k <= hi; k += 2) out.push_back(k);
        if (lo % 2 != 0) throw mf::ParseError("weights must be even");
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stol(item));
    }
    return out;
}

void require_even_positive(const std::vector<long>& weights) {
    for (long k : weights)
        if (k <= 0 || k % 2 != 0)
            throw mf::ParseError("weights must be even positive integers (got " +
                                 std::to_string(k) + ")");
}

std::vector<mf::Complex> parse_complex_list(const std::string& text) {
    std::vector<mf::Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(mf::complex_from_string(item));
    }
    return out;
}

void emit_report(const mf::CheckReport& report, const Config& cfg) {
    if (cfg.format == "json") {
        std::cout << report.to_json().dump() << "\n";
    } else {
        std::cout << (report.pass ? "PASS" : "FAIL") << " " << report.check;
        if (report.weight > 0) std::cout << " k=" << report.weight;
        std::cout << "\n";
    }
}

// odd weights are rejected up front: every space here has even weight
void check_weights_supported(const std::vector<long>& weights) {
    require_even_positive(weights);
}

std::string cache_key(const std::string& group, const std::string& character,
                      const std::string& kind, long weight, long precision) {
    return std::string(kCacheVersion) + "_" + group + "_" + character + "_" + kind + "_k" +
           std::to_string(weight) + "_p" + std::to_string(precision) + ".json";
}

int cmd_space(const Config& cfg, const std::string& group_text, long weight,
              const std::string& character_text, const std::string& kind) {
    using namespace mf;
    if (weight < 0 || weight % 2 != 0) {
        std::cerr << "error: weight must be an even nonnegative integer\n";
        return 2;
    }
    GroupLabel group = group_from_string(group_text);
    CharacterLabel character = character_from_string(character_text);

    if (character == CharacterLabel::Chi && (group != GroupLabel::SL2Z || kind != "S")) {
        std::cerr << "error: character chi is only supported for --group sl2z --kind S\n";
        return 2;
    }
    if (kind == "Snew" && group != GroupLabel::Gamma0_4) {
        std::cerr << "error: kind Snew is only supported for --group g0_4\n";
        return 2;
    }

    long precision = cfg.precision;
    if (precision > 0) {
        long need = character == CharacterLabel::Chi ? sturm_twice_exp_chi(weight)
                                                     : sturm_twice_exp(group, weight);
        if (precision < need)
            throw InsufficientPrecision("requested precision " + std::to_string(precision) +
                                        " is below the Sturm requirement " + std::to_string(need));
    }

    std::string key =
        cache_key(group_text, character_text, kind, weight,
                  precision > 0 ? precision
                                : (character == CharacterLabel::Chi ? default_precision_chi(weight)
                                                                    : default_precision(group, weight)));
    std::filesystem::path cache_file;
    bool cache_usable = !cfg.no_cache && !cfg.cache_dir.empty();
    if (cache_usable) {
        cache_file = std::filesystem::path(cfg.cache_dir) / key;
        if (std::filesystem::exists(cache_file)) {
            std::ifstream in(cache_file);
            nlohmann::json j;
            try {
                in >> j;
                FormSpace cached = formspace_from_json(j);  // validate before trusting
                (void)cached;
                std::cout << j.dump() << "\n";
                return 0;
            } catch (const std::exception&) {
                // stale or corrupt entry; fall through and recompute
            }
        }
    }

    FormSpace space;
    if (kind == "M") {
        space = basis_M(group, weight, precision);
    } else if (kind == "S") {
        space = character == CharacterLabel::Chi ? basis_S_chi(weight, precision)
                                                 : basis_S(group, weight, precision);
    } else if (kind == "Snew") {
        space = newspace_level4(weight, precision);
    } else {
        std::cerr << "error: unknown kind '" << kind << "' (expected M, S or Snew)\n";
        return 2;
    }

    nlohmann::json j = formspace_to_json(space);
    if (cache_usable) {
        std::filesystem::create_directories(cfg.cache_dir);
        std::ofstream out(cache_file);
        out << j.dump() << "\n";
    }
    if (cfg.format == "json") {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "space " << group_text << " k=" << weight << " " << character_text << " "
                  << kind << " dim=" << space.dimension() << "\n";
        for (const auto& f : space.basis) std::cout << "  " << f.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const Config& cfg, const std::string& target, const std::string& weights_text) {
    using namespace mf;
    std::vector<CheckReport> reports;

    if (target == "lemma-2-1") {
        reports.push_back(verify_lemma_2_1(cfg.seed));
    } else if (target == "prop-2-2") {
        reports.push_back(verify_prop_2_2(cfg.seed));
    } else {
        std::string defaults;
        if (target == "lemma-3-1" || target == "theorem-1-2")
            defaults = "6..24";
        else if (target == "theorem-1-3")
            defaults = "6,10,12";
        else if (target == "corollary-1-4")
            defaults = "6";
        else {
            std::cerr << "error: unknown verify target '" << target << "'\n";
            return 2;
        }
        std::vector<long> weights = parse_weights(weights_text.empty() ? defaults : weights_text);
        check_weights_supported(weights);
        for (long k : weights) {
            if (target == "lemma-3-1") {
                reports.push_back(verify_lemma_3_1(k, cfg.precision));
            } else if (target == "theorem-1-2") {
                reports.push_back(verify_theorem_1_2(k, cfg.precision));
            } else if (target == "theorem-1-3") {
                reports.push_back(verify_fricke(k, default_fricke_samples(), cfg.terms, cfg.tol));
            } else {
                std::vector<Complex> grid = {Complex(k / 2.0 - 1.0, 0.0), Complex(k / 2.0, 0.0),
                                             Complex(k / 2.0 + 1.0, 0.0), Complex(k / 2.0, 2.0)};
                reports.push_back(verify_corollary_1_4(k, grid, cfg.tol, cfg.terms));
            }
        }
    }

    bool all_pass = true;
    for (const auto& r : reports) {
        emit_report(r, cfg);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_lfunction(const Config& cfg, long weight, const std::string& s_text, int eps) {
    using namespace mf;
    if (weight <= 0 || weight % 2 != 0) {
        std::cerr << "error: weight must be an even positive integer\n";
        return 2;
    }
    long precision = std::max(cfg.precision > 0 ? cfg.precision
                                                : default_precision(GroupLabel::Gamma0_4, weight),
                              2 * cfg.terms + 2);
    FormSpace ns = newspace_level4(weight, precision);
    if (ns.dimension() == 0) {
        std::cerr << "error: newspace at weight " << weight << " is empty\n";
        return 2;
    }
    const QExpansion& g = ns.basis[0];
    std::vector<Complex> points = parse_complex_list(s_text);
    double ik = static_cast<double>(i_pow_even(weight));

    bool all_small = true;
    nlohmann::json rows = nlohmann::json::array();
    for (Complex s : points) {
        NumericValue lhs = lambda_incomplete_gamma(g, weight, s, eps, cfg.terms);
        NumericValue rhs =
            lambda_incomplete_gamma(g, weight, static_cast<double>(weight) - s, eps, cfg.terms);
        double denom = std::max({std::abs(lhs.value), std::abs(rhs.value), 1e-12});
        double residual = std::abs(lhs.value + ik * rhs.value) / denom;
        if (residual > cfg.tol) all_small = false;
        if (cfg.format == "json") {
            rows.push_back({{"s", complex_to_string(s)},
                            {"lambda_s", complex_to_string(lhs.value)},
                            {"lambda_k_minus_s", complex_to_string(rhs.value)},
                            {"residual", residual}});
        } else {
            std::cout << "s=" << complex_to_string(s) << "  Lambda(s)=" << complex_to_string(lhs.value)
                      << "  Lambda(k-s)=" << complex_to_string(rhs.value) << "  residual=" << residual
                      << "\n";
        }
    }
    if (cfg.format == "json") {
        nlohmann::json out = {{"weight", weight}, {"eps", eps}, {"terms", cfg.terms}, {"table", rows}};
        std::cout << out.dump() << "\n";
    }
    if (cfg.strict && !all_small) return 1;
    return 0;
}

int cmd_word(const Config& cfg, const std::string& action, const std::string& matrix_text,
             int chi_a) {
    using namespace mf;
    Mat2 m = mat2_from_string(matrix_text);
    if (m.det() != 1) throw NonUnimodular("matrix has determinant != 1");

    if (action == "decompose") {
        GroupWord w = matrix_to_word(m);
        if (cfg.format == "json")
            std::cout << nlohmann::json{{"word", word_to_string(w)}}.dump() << "\n";
        else
            std::cout << word_to_string(w) << "\n";
        return 0;
    }
    if (action == "eval-char") {
        Character chi{((chi_a % 6) + 6) % 6};
        int e = char_eval(chi, m);
        if (cfg.format == "json")
            std::cout << nlohmann::json{{"exponent_mod_6", e},
                                        {"value", character_value_to_string(e)}}
                             .dump()
                      << "\n";
        else
            std::cout << character_value_to_string(e) << "\n";
        return 0;
    }
    if (action == "gamma04-decompose") {
        Gamma04Word w = decompose_gamma0_4(m);
        if (cfg.format == "json")
            std::cout << nlohmann::json{{"word", gamma04_word_to_string(w)}}.dump() << "\n";
        else
            std::cout << gamma04_word_to_string(w) << "\n";
        return 0;
    }
    std::cerr << "error: unknown word action '" << action << "'\n";
    return 2;
}

int cmd_cache(const Config& cfg, const std::string& action) {
    if (cfg.cache_dir.empty()) {
        std::cerr << "error: no cache directory configured (--cache-dir or FRICKE_CACHE_DIR)\n";
        return 2;
    }
    std::filesystem::path dir(cfg.cache_dir);
    if (action == "list") {
        if (std::filesystem::exists(dir))
            for (const auto& entry : std::filesystem::directory_iterator(dir))
                if (entry.path().filename().string().rfind(kCacheVersion, 0) == 0)
                    std::cout << entry.path().filename().string() << "\n";
        return 0;
    }
    if (action == "clear") {
        long removed = 0;
        if (std::filesystem::exists(dir))
            for (const auto& entry : std::filesystem::directory_iterator(dir))
                if (entry.path().filename().string().rfind(kCacheVersion, 0) == 0) {
                    std::filesystem::remove(entry.path());
                    ++removed;
                }
        std::cout << "removed " << removed << " entries\n";
        return 0;
    }
    std::cerr << "error: unknown cache action '" << action << "'\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular-form spaces of levels 1, 2, 4 and their Fricke/L-function checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    if (const char* env = std::getenv("FRICKE_CACHE_DIR")) cfg.cache_dir = env;

    app.add_option("--precision", cfg.precision, "working precision in twice-exponent units");
    app.add_option("--terms", cfg.terms, "number of q-expansion terms for numerics");
    app.add_option("--tol", cfg.tol, "numeric tolerance");
    app.add_option("--seed", cfg.seed, "RNG seed for sampled checks");
    app.add_option("--cache-dir", cfg.cache_dir, "cache directory for computed spaces");
    app.add_flag("--no-cache", cfg.no_cache, "bypass the cache entirely");
    app.add_option("--format", cfg.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--strict", cfg.strict, "nonzero exit when residuals exceed --tol");

    auto* space = app.add_subcommand("space", "compute and print a space basis");
    std::string group_text = "g0_4", character_text = "trivial", kind = "S";
    long weight = 6;
    space->add_option("--group", group_text, "sl2z | g0_2 | g0_4");
    space->add_option("--weight", weight, "even weight")->required();
    space->add_option("--character", character_text, "trivial | chi");
    space->add_option("--kind", kind, "M | S | Snew");

    auto* verify = app.add_subcommand("verify", "run a named verification");
    std::string target, weights_text;
    verify->add_option("target", target,
                       "lemma-2-1 | prop-2-2 | lemma-3-1 | theorem-1-2 | theorem-1-3 | corollary-1-4")
        ->required();
    verify->add_option("--weights", weights_text, "e.g. 6..24 or 6,10,12");

    auto* lfun = app.add_subcommand("lfunction", "completed-L values and functional-equation residuals");
    long l_weight = 6;
    std::string s_text = "2,3,4";
    int eps = -1;
    lfun->add_option("--weight", l_weight, "even weight with nonempty newspace")->required();
    lfun->add_option("--s", s_text, "comma-separated complex points, e.g. 2,3,4,3+2i");
    lfun->add_option("--eps", eps, "sign used in the two-kernel formula (+1 or -1)")
        ->check(CLI::IsMember({-1, 1}));

    auto* word = app.add_subcommand("word", "matrix word decompositions and character values");
    std::string action, matrix_text;
    int chi_a = 3;
    word->add_option("action", action, "decompose | eval-char | gamma04-decompose")->required();
    word->add_option("matrix", matrix_text, "[[a,b],[c,d]]")->required();
    word->add_option("--chi", chi_a, "character exponent a mod 6 (chi(T) = zeta_6^a)");

    auto* cache = app.add_subcommand("cache", "cache maintenance");
    std::string cache_action;
    cache->add_option("action", cache_action, "list | clear")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cfg.tol <= 0) {
            std::cerr << "error: --tol must be positive\n";
            return 2;
        }
        if (space->parsed()) return cmd_space(cfg, group_text, weight, character_text, kind);
        if (verify->parsed()) return cmd_verify(cfg, target, weights_text);
        if (lfun->parsed()) return cmd_lfunction(cfg, l_weight, s_text, eps);
        if (word->parsed()) return cmd_word(cfg, action, matrix_text, chi_a);
        if (cache->parsed()) return cmd_cache(cfg, cache_action);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const mf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mf::NonUnimodular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mf::NotInGroup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mf::OddWeight& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mf::UnsupportedWeight& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mf::InsufficientPrecision& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const mf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
