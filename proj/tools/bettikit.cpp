// bettikit: exact Betti numbers, Hilbert series and Groebner bases for
// homogeneous ideals, plus the bound checks of the resolution toolkit.

#include "bettikit/bounds.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/hilbert.hpp"
#include "bettikit/io.hpp"
#include "bettikit/lpp.hpp"
#include "bettikit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace bettikit;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1; // the mathematics disagrees
constexpr int kExitUsage = 2;

FieldSpec env_default_field() {
    if (const char* env = std::getenv("BETTIKIT_FIELD")) return parse_field_name(env);
    return default_field();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Ideal load_ideal(const std::string& path) { return parse_ideal(read_input(path)); }

std::vector<int> parse_int_list(const std::string& s, bool allow_inf = false) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (allow_inf && (item == "inf" || item == "oo"))
            out.push_back(PowerVector::kInfinity);
        else
            out.push_back(std::stoi(item));
    }
    return out;
}

int cmd_construct(const std::string& kind, int h, int a, int n, int count, int facet_dim,
                  unsigned long long seed, bool seed_set, const std::string& field_name,
                  const std::string& degrees_csv) {
    FieldSpec field = field_name.empty() ? env_default_field() : parse_field_name(field_name);
    Ideal ideal = [&] {
        if (kind == "gamma") return gamma(h, field).ideal;
        if (kind == "prime") return prime_candidate(h, field).ideal;
        if (kind == "lpp") {
            int vars = n > 0 ? n : 2 * h;
            return construct_L(a, h, vars, field).combined;
        }
        if (kind == "ci") {
            std::vector<int> degrees = parse_int_list(degrees_csv.empty() ? "2,2" : degrees_csv);
            int vars = n > 0 ? n : static_cast<int>(degrees.size());
            return complete_intersection(degrees, vars, field).ideal;
        }
        if (kind == "sr") {
            if (!seed_set) throw Error("construct sr needs --seed for reproducibility");
            PureComplex c = random_pure_complex(n, facet_dim, count, seed);
            return stanley_reisner(c, make_ring(n, "x", field));
        }
        throw Error("unknown construction '" + kind + "'");
    }();
    std::cout << print_ideal(ideal);
    return kExitOk;
}

int cmd_gb(const std::string& path, const std::string& order_name, const std::string& format) {
    Ideal I = load_ideal(path);
    MonomialOrder order =
        order_name == "lex" ? MonomialOrder::Lex : MonomialOrder::DegRevLex;
    GroebnerBasis gb = buchberger(I, order);
    if (format == "json") {
        json out;
        out["order"] = order_name;
        out["elements"] = json::array();
        for (const auto& g : gb.elements) out["elements"].push_back(print_polynomial(g));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& g : gb.elements) std::cout << print_polynomial(g) << "\n";
    }
    return kExitOk;
}

int cmd_betti(const std::string& path, int i_max, int j_max, const std::string& field_name,
              const std::string& format) {
    Ideal I = load_ideal(path);
    if (!field_name.empty()) I = change_field(I, parse_field_name(field_name));
    BettiTable t = betti_table(I, i_max, j_max);
    if (format == "text")
        std::cout << betti_table_text(t);
    else
        std::cout << betti_table_json(t).dump(2) << "\n";
    return kExitOk;
}

int cmd_hilbert(const std::string& path, int d_max) {
    Ideal I = load_ideal(path);
    std::cout << hilbert_json(hilbert_data(I, d_max)).dump(2) << "\n";
    return kExitOk;
}

int cmd_bound_check(const std::string& path, const std::string& attest) {
    Ideal I = load_ideal(path);
    bool attested = attest.find("radical") != std::string::npos &&
                    attest.find("unmixed") != std::string::npos;
    BoundReport rep = check_theorem(I, attested, path.empty() ? "-" : path);
    if (!rep.attested)
        std::cerr << "warning: radical/unmixed not attested; the bound only applies to "
                     "unmixed radical ideals\n";
    std::cout << bound_report_json(rep).dump(2) << "\n";
    return rep.satisfied ? kExitOk : kExitMathFailure;
}

int cmd_murai(const std::string& path, const std::string& powers_csv) {
    Ideal I = load_ideal(path);
    PowerVector powers(parse_int_list(powers_csv, true));
    if (!is_lpp(I, powers)) {
        std::cerr << "input is not an a-LPP ideal for the given powers\n";
        return kExitMathFailure;
    }
    std::vector<Monomial> lex_part;
    for (const auto& g : I.generators()) {
        if (!g.is_monomial()) throw NotMonomial();
        if (!powers.in_ja(g.leading_monomial())) lex_part.push_back(g.leading_monomial());
    }
    LppIdeal L = make_lpp_ideal(I.ring(), powers, std::move(lex_part));
    int D1 = I.max_generator_degree() + 1;
    json entries = json::object();
    for (int i = 0; i <= I.ring()->num_vars; ++i)
        for (int j = 0; j <= D1; ++j) {
            long long b = murai_betti(L, i, j);
            if (b != 0) entries[std::to_string(i) + "," + std::to_string(i + j)] = b;
        }
    json out = {{"ring", {{"vars", I.ring()->var_names}, {"char", I.ring()->field.characteristic}}},
                {"entries", entries},
                {"i_max", I.ring()->num_vars},
                {"j_max", I.ring()->num_vars + D1}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_corpus(int count, int vars, int facet_dim, unsigned long long seed) {
    FieldSpec field = env_default_field();
    RingPtr ring = make_ring(vars, "x", field);
    json reports = json::array();
    bool all_ok = true;
    for (int idx = 0; idx < count; ++idx) {
        std::mt19937_64 gen(seed * 1000003ULL + static_cast<unsigned long long>(idx));
        long long total = 1;
        {
            long long num = 1, den = 1;
            for (int k = 0; k < facet_dim + 1; ++k) {
                num *= vars - k;
                den *= k + 1;
            }
            total = num / den;
        }
        int facets = 2 + static_cast<int>(gen() % static_cast<unsigned long long>(
                                              std::min<long long>(total - 1, 6)));
        PureComplex c = random_pure_complex(vars, facet_dim, facets, gen());
        Ideal I = stanley_reisner(c, ring);
        BoundReport rep = check_theorem(I, true, "sr-" + std::to_string(idx));
        all_ok = all_ok && rep.satisfied;
        reports.push_back(bound_report_json(rep));
    }
    std::cout << json{{"count", count}, {"all_satisfied", all_ok}, {"reports", reports}}.dump(2)
              << "\n";
    return all_ok ? kExitOk : kExitMathFailure;
}

int cmd_verify(const std::string& level_name) {
    VerifyLevel level = level_name == "fast" ? VerifyLevel::Fast : VerifyLevel::Full;
    auto results = run_verification(level, &std::cout);
    for (const auto& r : results)
        if (!r.passed) return kExitMathFailure;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Betti numbers, Hilbert series and Groebner bases for homogeneous ideals"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named ideal as an ideal file");
    std::string kind;
    construct->add_option("kind", kind, "gamma|prime|lpp|ci|sr")->required();
    int h = 2, a = 3, n = 0, count = 3, facet_dim = 1;
    unsigned long long seed = 0;
    std::string field_name, degrees_csv;
    construct->add_option("--h", h, "height parameter");
    construct->add_option("--a", a, "power parameter for lpp");
    construct->add_option("--n", n, "number of variables / vertices");
    construct->add_option("--count", count, "facet count for sr");
    construct->add_option("--facet-dim", facet_dim, "facet dimension for sr");
    auto* seed_opt = construct->add_option("--seed", seed, "seed for sr");
    construct->add_option("--field", field_name, "qq or gf<p> (default: BETTIKIT_FIELD)");
    construct->add_option("--degrees", degrees_csv, "comma list of degrees for ci");

    // gb
    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
    std::string gb_path = "-", gb_order = "degrevlex", gb_format = "text";
    gb_cmd->add_option("file", gb_path, "ideal file ('-' for stdin)");
    gb_cmd->add_option("--order", gb_order, "degrevlex|lex")
        ->check(CLI::IsMember({"degrevlex", "lex"}));
    gb_cmd->add_option("--format", gb_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of S/I");
    std::string betti_path = "-", betti_field, betti_format = "json";
    int i_max = -1, j_max = -1;
    betti_cmd->add_option("file", betti_path, "ideal file ('-' for stdin)");
    betti_cmd->add_option("--imax", i_max, "homological window (default N)");
    betti_cmd->add_option("--jmax", j_max, "internal degree window (default N + max degree)");
    betti_cmd->add_option("--field", betti_field, "recompute over qq or gf<p>");
    betti_cmd->add_option("--format", betti_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // hilbert
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function, numerator, multiplicity");
    std::string hilbert_path = "-";
    int d_max = -1;
    hilbert_cmd->add_option("file", hilbert_path, "ideal file ('-' for stdin)");
    hilbert_cmd->add_option("--dmax", d_max, "interpolation window");

    // bound-check
    auto* bound_cmd = app.add_subcommand("bound-check", "quadratic strand against the height bound");
    std::string bound_path = "-", attest;
    bound_cmd->add_option("file", bound_path, "ideal file ('-' for stdin)");
    bound_cmd->add_option("--attest", attest, "comma list, e.g. radical,unmixed");

    // murai
    auto* murai_cmd = app.add_subcommand("murai", "Murai Betti table of an a-LPP monomial ideal");
    std::string murai_path = "-", powers_csv;
    murai_cmd->add_option("file", murai_path, "ideal file ('-' for stdin)");
    murai_cmd->add_option("--powers", powers_csv, "comma list with inf, e.g. 3,3,inf,inf")
        ->required();

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "bound-check a corpus of Stanley-Reisner ideals");
    int corpus_count = 20, corpus_vars = 6, corpus_fd = 1;
    unsigned long long corpus_seed = 0;
    corpus_cmd->add_option("--count", corpus_count, "number of ideals");
    corpus_cmd->add_option("--vars", corpus_vars, "vertices");
    corpus_cmd->add_option("--facet-dim", corpus_fd, "facet dimension");
    corpus_cmd->add_option("--seed", corpus_seed, "master seed")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the bundled verification suite");
    std::string level = "full";
    verify_cmd->add_option("--level", level, "fast|full")->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(kind, h, a, n, count, facet_dim, seed, seed_opt->count() > 0,
                                 field_name, degrees_csv);
        if (gb_cmd->parsed()) return cmd_gb(gb_path, gb_order, gb_format);
        if (betti_cmd->parsed()) return cmd_betti(betti_path, i_max, j_max, betti_field, betti_format);
        if (hilbert_cmd->parsed()) return cmd_hilbert(hilbert_path, d_max);
        if (bound_cmd->parsed()) return cmd_bound_check(bound_path, attest);
        if (murai_cmd->parsed()) return cmd_murai(murai_path, powers_csv);
        if (corpus_cmd->parsed()) return cmd_corpus(corpus_count, corpus_vars, corpus_fd, corpus_seed);
        if (verify_cmd->parsed()) return cmd_verify(level);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
