// grasscode: exact bounds, constructions, matchings and verifications for
// codes and covering designs in the Grassmannian G_q(n,k).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "grasscode/bounds.hpp"
#include "grasscode/code.hpp"
#include "grasscode/config.hpp"
#include "grasscode/cyclic.hpp"
#include "grasscode/designs.hpp"
#include "grasscode/matcher.hpp"
#include "grasscode/rng.hpp"

using json = nlohmann::ordered_json;
using namespace grasscode;

namespace {

constexpr int kSchemaVersion = 1;

struct Range {
    long long lo = 0, hi = 0;
};

// "a" or "a..b", both ends inclusive
Range parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        long long v = std::stoll(s);
        return {v, v};
    }
    Range r{std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range " + s);
    return r;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
}

void write_json(const std::string& path, const json& j) {
    write_text(path, j.dump(2) + "\n");
}

json ratio_json(const Ratio& r) {
    return json{{"fraction", r.value.get_str()}, {"decimal", r.decimal}};
}

json report_stats(const MatchingResult& res, const IncidenceIndex& idx) {
    json rounds = json::array();
    for (const auto& r : res.rounds)
        rounds.push_back({{"round", r.round},
                          {"proposed", r.proposed},
                          {"accepted", r.accepted},
                          {"live_edges", r.live_edges},
                          {"uncovered_vertices", r.uncovered_vertices}});
    BigRat ref = packing_ratio(idx.field()->q(), idx.n(), idx.k(), idx.delta());
    auto ratio = bound_ratio(BigInt(static_cast<unsigned long>(res.edges.size())), ref);
    return json{{"schema_version", kSchemaVersion},
                {"algorithm", res.algorithm},
                {"rng", Rng::kAlgorithm},
                {"seed", res.seed},
                {"vertices", idx.vertex_count()},
                {"uniformity", idx.uniformity()},
                {"edges", idx.edge_count()},
                {"size", res.edges.size()},
                {"uncovered", res.uncovered},
                {"packing_bound",
                 packing_bound(idx.field()->q(), idx.n(), idx.k(), idx.delta()).get_str()},
                {"ratio_to_packing", ratio_json(ratio)},
                {"rounds", rounds}};
}

// ----------------------------------------------------------------------------
// bounds

struct BoundsArgs {
    std::string q = "2", n, k, delta;
    std::string kind = "table";
    std::string format = "json";
    std::string out;
    // closed-form extras
    long long r = -1, t = -1, v = -1, m = -1;
    std::string achieved;
};

int run_bounds(const BoundsArgs& a) {
    if (a.kind != "table") {
        std::map<std::string, long long> params;
        params["q"] = std::stoll(a.q);
        if (!a.n.empty()) params["n"] = parse_range(a.n).lo;
        if (!a.delta.empty()) params["delta"] = parse_range(a.delta).lo;
        if (a.r >= 0) params["r"] = a.r;
        if (a.t >= 0) params["t"] = a.t;
        if (a.v >= 0) params["v"] = a.v;
        if (a.m >= 0) params["m"] = a.m;
        auto rep = closed_form(a.kind, params);
        json j{{"schema_version", kSchemaVersion},
               {"config", {{"subcommand", "bounds"}, {"kind", a.kind}}},
               {"params", rep.params},
               {"kind", rep.kind},
               {"value", rep.value.get_str()},
               {"exactness", exactness_name(rep.exactness)}};
        if (rep.caveat) j["caveat"] = *rep.caveat;
        if (!a.achieved.empty()) {
            auto ratio = bound_ratio(BigInt(a.achieved), BigRat(rep.value));
            j["ratio"] = ratio_json(ratio);
        }
        write_json(a.out, j);
        return 0;
    }

    if (a.n.empty() || a.k.empty() || a.delta.empty())
        throw std::invalid_argument("bounds tables need --n, --k and --delta");
    Range qr = parse_range(a.q), nr = parse_range(a.n), kr = parse_range(a.k),
          dr = parse_range(a.delta);
    json rows = json::array();
    std::string csv = "q,n,k,delta,packing,iterated_johnson,covering,iterated_schonheim\n";
    for (long long q = qr.lo; q <= qr.hi; ++q)
        for (long long n = nr.lo; n <= nr.hi; ++n)
            for (long long k = kr.lo; k <= kr.hi; ++k)
                for (long long d = dr.lo; d <= dr.hi; ++d) {
                    if (q < 2 || n < 0 || k < 0 || d < 0 || k > n || d > k) {
                        std::cerr << "skipping invalid cell q=" << q << " n=" << n
                                  << " k=" << k << " delta=" << d << "\n";
                        continue;
                    }
                    auto uq = static_cast<std::uint64_t>(q);
                    auto un = static_cast<unsigned>(n), uk = static_cast<unsigned>(k),
                         ud = static_cast<unsigned>(d);
                    std::string packing = packing_bound(uq, un, uk, ud).get_str();
                    std::string johnson = iterated_johnson(uq, un, uk, ud).get_str();
                    std::string covering = covering_bound(uq, un, uk, ud).get_str();
                    std::string schonheim =
                        ud < uk ? iterated_schonheim(uq, un, uk, uk - ud).get_str() : "";
                    rows.push_back({{"q", q},
                                    {"n", n},
                                    {"k", k},
                                    {"delta", d},
                                    {"packing", packing},
                                    {"iterated_johnson", johnson},
                                    {"covering", covering},
                                    {"iterated_schonheim",
                                     schonheim.empty() ? json(nullptr) : json(schonheim)}});
                    csv += std::to_string(q) + "," + std::to_string(n) + "," +
                           std::to_string(k) + "," + std::to_string(d) + "," + packing +
                           "," + johnson + "," + covering + "," + schonheim + "\n";
                }
    if (a.format == "csv") {
        write_text(a.out, csv);
    } else {
        json j{{"schema_version", kSchemaVersion},
               {"config",
                {{"subcommand", "bounds"},
                 {"q", a.q},
                 {"n", a.n},
                 {"k", a.k},
                 {"delta", a.delta}}},
               {"rows", rows}};
        write_json(a.out, j);
    }
    return 0;
}

// ----------------------------------------------------------------------------
// code-emitting subcommands

std::vector<std::string> config_comments(const std::string& line) {
    return {"config: " + line};
}

int run_enumerate(const std::string& qspec, unsigned n, unsigned k, const std::string& out) {
    auto field = parse_field(qspec);
    if (k == 0) throw std::invalid_argument("the code file format needs k >= 1");
    // the stream is already in lexicographic order: write as it produces,
    // never materializing the Grassmannian
    GrassmannStream st(field, n, k);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.empty() && out != "-") {
        file.open(out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open for writing: " + out);
        os = &file;
    }
    *os << "grasscode v1\n"
        << "q=" << field->spec_string() << " n=" << n << " k=" << k << "\n"
        << "# config: enumerate --q " << qspec << " --n " << n << " --k " << k << "\n";
    while (auto s = st.next()) *os << s->line_string() << '\n';
    if (!*os) throw std::runtime_error("write failed");
    return 0;
}

int run_spread(const std::string& qspec, unsigned n, unsigned k, const std::string& out) {
    auto code = spread_construct(parse_field(qspec), n, k);
    write_text(out, code_to_string(code, config_comments("spread --q " + qspec + " --n " +
                                                         std::to_string(n) + " --k " +
                                                         std::to_string(k))));
    return 0;
}

struct MatchArgs {
    std::string q = "2";
    unsigned n = 0, k = 0, delta = 0;
    std::string algo = "greedy";
    std::uint64_t seed = 0;
    double epsilon = 0.05;
    unsigned rounds = 20;
    std::string out, stats;
};

int run_match(const MatchArgs& a) {
    auto field = parse_field(a.q);
    std::string config = "match --q " + a.q + " --n " + std::to_string(a.n) + " --k " +
                         std::to_string(a.k) + " --delta " + std::to_string(a.delta) +
                         " --algo " + a.algo + " --seed " + std::to_string(a.seed);
    if (a.algo == "nibble")
        config += " --epsilon " + std::to_string(a.epsilon) + " --rounds " +
                  std::to_string(a.rounds);

    if (a.delta == 0 || a.delta == a.k) {
        auto code = trivial_optimal_code(field, a.n, a.k, a.delta);
        std::vector<std::string> comments = config_comments(config);
        comments.push_back("trivial optimum for delta=" + std::to_string(a.delta));
        write_text(a.out, code_to_string(code, comments));
        if (!a.stats.empty()) {
            BigRat ref = packing_ratio(field->q(), a.n, a.k, a.delta);
            auto ratio = bound_ratio(BigInt(static_cast<unsigned long>(code.size())), ref);
            write_json(a.stats, json{{"schema_version", kSchemaVersion},
                                     {"algorithm", "trivial"},
                                     {"size", code.size()},
                                     {"ratio_to_packing", ratio_json(ratio)}});
        }
        return 0;
    }

    IncidenceIndex idx(field, a.n, a.k, a.delta);
    MatchingResult res = a.algo == "nibble"
                             ? nibble_matching(idx, a.seed, a.epsilon, a.rounds)
                             : greedy_matching(idx, a.seed);
    auto code = matching_to_code(idx, res);
    std::vector<std::string> comments = config_comments(config);
    comments.push_back(std::string("rng=") + Rng::kAlgorithm +
                       " seed=" + std::to_string(a.seed));
    write_text(a.out, code_to_string(code, comments));
    if (!a.stats.empty()) {
        json j = report_stats(res, idx);
        j["config"] = config;
        write_json(a.stats, j);
    }
    return 0;
}

struct VerifyArgs {
    std::string file;
    long long min_distance = -1, covering_r = -1, turan_k = -1;
    std::string report;
};

int run_verify(const VerifyArgs& a) {
    auto code = parse_code_file(a.file);
    json j{{"schema_version", kSchemaVersion},
           {"config", {{"subcommand", "verify"}, {"file", a.file}}}};
    bool valid = false;
    json witnesses = json::array();
    if (a.min_distance >= 0) {
        auto rep = verify_code(code, static_cast<unsigned>(a.min_distance));
        valid = rep.valid;
        j["kind"] = "min_distance";
        j["stats"] = {{"d", a.min_distance},
                      {"members", code.size()},
                      {"min_observed_distance",
                       rep.min_distance ? json(*rep.min_distance) : json(nullptr)}};
        if (rep.violation) {
            witnesses.push_back(rep.violation->first.line_string());
            witnesses.push_back(rep.violation->second.line_string());
        }
    } else if (a.covering_r >= 0) {
        auto rep = verify_covering(code, static_cast<unsigned>(a.covering_r));
        valid = rep.valid;
        j["kind"] = "covering";
        j["stats"] = {{"r", a.covering_r},
                      {"members", code.size()},
                      {"min_cover", rep.min_cover},
                      {"max_cover", rep.max_cover},
                      {"uncovered", rep.uncovered}};
        if (rep.witness) witnesses.push_back(rep.witness->line_string());
    } else if (a.turan_k >= 0) {
        auto rep = verify_turan(code, static_cast<unsigned>(a.turan_k));
        valid = rep.valid;
        j["kind"] = "turan";
        j["stats"] = {{"k", a.turan_k},
                      {"members", code.size()},
                      {"violations", rep.violations}};
        if (rep.witness) witnesses.push_back(rep.witness->line_string());
    } else {
        throw CLI::ValidationError("verify",
                                   "one of --min-distance, --covering, --turan required");
    }
    j["valid"] = valid;
    j["witnesses"] = witnesses;
    write_json(a.report, j);
    if (!valid) throw VerificationFailure("verification failed for " + a.file);
    return 0;
}

int run_convert(const std::string& file, const std::string& mode, unsigned delta,
                const std::string& out) {
    auto code = parse_code_file(file);
    SubspaceCode result = mode == "code-to-covering" ? code_to_covering(code, delta)
                                                     : covering_to_code(code, delta);
    write_text(out, code_to_string(result, config_comments("convert --file " + file +
                                                           " --mode " + mode + " --delta " +
                                                           std::to_string(delta))));
    return 0;
}

int run_dual(const std::string& file, unsigned d, const std::string& out) {
    auto code = parse_code_file(file);
    auto dual = dual_code(code, d);
    write_text(out, code_to_string(dual, config_comments("dual --file " + file +
                                                         " --min-distance " +
                                                         std::to_string(d))));
    return 0;
}

int run_lift(const std::string& file, unsigned r, const std::string& out) {
    auto code = parse_code_file(file);
    auto lifted = lift_covering(code, r);
    write_text(out, code_to_string(lifted, config_comments("lift --file " + file + " --r " +
                                                           std::to_string(r))));
    return 0;
}

int run_turan_dual(const std::string& file, const std::string& kind, unsigned param,
                   const std::string& out) {
    auto code = parse_code_file(file);
    auto result = turan_dual(code, kind == "covering" ? DesignKind::Covering
                                                      : DesignKind::Turan, param);
    write_text(out, code_to_string(result, config_comments("turan-dual --file " + file +
                                                           " --kind " + kind + " --param " +
                                                           std::to_string(param))));
    return 0;
}

struct CyclicArgs {
    std::string q = "2";
    unsigned n = 0, k = 0, d = 0;
    std::uint64_t seed = 0;
    std::string out, orbits;
};

int run_cyclic_search(const CyclicArgs& a) {
    auto ext = make_ext_field(parse_field(a.q), a.n);
    auto res = cyclic_greedy_search(ext, a.k, a.d, a.seed);
    std::string config = "cyclic-search --q " + a.q + " --n " + std::to_string(a.n) +
                         " --k " + std::to_string(a.k) + " --d " + std::to_string(a.d) +
                         " --seed " + std::to_string(a.seed);
    std::vector<std::string> comments = config_comments(config);
    comments.push_back(std::string("rng=") + Rng::kAlgorithm +
                       " seed=" + std::to_string(a.seed));
    write_text(a.out, code_to_string(res.code, comments));

    json orbits = json::array();
    for (const auto& o : res.accepted)
        orbits.push_back(
            {{"representative", o.representative.line_string()}, {"length", o.length}});
    json j{{"schema_version", kSchemaVersion},
           {"config", config},
           {"rng", Rng::kAlgorithm},
           {"seed", a.seed},
           {"size", res.code.size()},
           {"ratio_to_packing",
            {{"fraction", res.ratio_to_packing.get_str()}, {"decimal", res.ratio_decimal}}},
           {"orbits", orbits}};
    std::string orbit_path = a.orbits.empty() && !a.out.empty() && a.out != "-"
                                 ? a.out + ".orbits.json"
                                 : a.orbits;
    write_json(orbit_path, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes and covering designs in the Grassmannian G_q(n,k)"};
    app.require_subcommand(1);

    std::uint64_t cap = 0;
    if (const char* env = std::getenv("GRASSCODE_CAP"))
        caps().enumeration = std::strtoull(env, nullptr, 10);
    app.add_option("--cap", cap, "override the enumeration cap (also env GRASSCODE_CAP)");

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate exact bounds over a grid");
    bounds_cmd->add_option("--q", bounds_args.q, "field order or range a..b");
    bounds_cmd->add_option("--n", bounds_args.n, "ambient dimension or range");
    bounds_cmd->add_option("--k", bounds_args.k, "codeword dimension or range");
    bounds_cmd->add_option("--delta", bounds_args.delta, "distance parameter or range");
    bounds_cmd->add_option("--kind", bounds_args.kind,
                           "table | spread_even | spread_odd_lb | turan_thm5 | "
                           "covering_cor3 | covering_thm6");
    bounds_cmd->add_option("--format", bounds_args.format, "json | csv");
    bounds_cmd->add_option("--out", bounds_args.out, "output path (default stdout)");
    bounds_cmd->add_option("--r", bounds_args.r, "closed-form parameter r");
    bounds_cmd->add_option("--t", bounds_args.t, "closed-form parameter t");
    bounds_cmd->add_option("--v", bounds_args.v, "closed-form parameter v");
    bounds_cmd->add_option("--m", bounds_args.m, "closed-form parameter m");
    bounds_cmd->add_option("--achieved", bounds_args.achieved,
                           "report the ratio of this size to the bound");

    std::string enum_q = "2", enum_out;
    unsigned enum_n = 0, enum_k = 0;
    auto* enum_cmd = app.add_subcommand("enumerate", "write all of G_q(n,k) as a code file");
    enum_cmd->add_option("--q", enum_q)->required();
    enum_cmd->add_option("--n", enum_n)->required();
    enum_cmd->add_option("--k", enum_k)->required();
    enum_cmd->add_option("--out", enum_out, "output path (default stdout)");

    std::string spread_q = "2", spread_out;
    unsigned spread_n = 0, spread_k = 0;
    auto* spread_cmd = app.add_subcommand("spread", "subfield spread construction (k | n)");
    spread_cmd->add_option("--q", spread_q)->required();
    spread_cmd->add_option("--n", spread_n)->required();
    spread_cmd->add_option("--k", spread_k)->required();
    spread_cmd->add_option("--out", spread_out, "output path (default stdout)");

    MatchArgs match_args;
    auto* match_cmd =
        app.add_subcommand("match", "hypergraph matching: emit a distance-2delta+2 code");
    match_cmd->add_option("--q", match_args.q)->required();
    match_cmd->add_option("--n", match_args.n)->required();
    match_cmd->add_option("--k", match_args.k)->required();
    match_cmd->add_option("--delta", match_args.delta)->required();
    match_cmd->add_option("--algo", match_args.algo, "greedy | nibble");
    match_cmd->add_option("--seed", match_args.seed, "PRNG seed")->required();
    match_cmd->add_option("--epsilon", match_args.epsilon, "nibble bite fraction");
    match_cmd->add_option("--rounds", match_args.rounds, "nibble round limit");
    match_cmd->add_option("--out", match_args.out, "code file path");
    match_cmd->add_option("--stats", match_args.stats, "stats JSON path");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "verify a code file");
    verify_cmd->add_option("--file", verify_args.file)->required();
    verify_cmd->add_option("--min-distance", verify_args.min_distance,
                           "check pairwise subspace distance >= d");
    verify_cmd->add_option("--covering", verify_args.covering_r,
                           "check every r-subspace is covered");
    verify_cmd->add_option("--turan", verify_args.turan_k,
                           "check every k-subspace contains a member");
    verify_cmd->add_option("--report", verify_args.report, "report JSON path");

    std::string conv_file, conv_mode, conv_out;
    unsigned conv_delta = 0;
    auto* conv_cmd = app.add_subcommand("convert", "code <-> covering conversions");
    conv_cmd->add_option("--file", conv_file)->required();
    conv_cmd->add_option("--mode", conv_mode, "code-to-covering | covering-to-code")
        ->required()
        ->check(CLI::IsMember({"code-to-covering", "covering-to-code"}));
    conv_cmd->add_option("--delta", conv_delta)->required();
    conv_cmd->add_option("--out", conv_out, "output path (default stdout)");

    std::string dual_file, dual_out;
    unsigned dual_d = 0;
    auto* dual_cmd = app.add_subcommand("dual", "memberwise orthogonal complement");
    dual_cmd->add_option("--file", dual_file)->required();
    dual_cmd->add_option("--min-distance", dual_d, "distance the code is verified at")
        ->required();
    dual_cmd->add_option("--out", dual_out, "output path (default stdout)");

    std::string lift_file, lift_out;
    unsigned lift_r = 0;
    auto* lift_cmd = app.add_subcommand("lift", "embed a covering one dimension up");
    lift_cmd->add_option("--file", lift_file)->required();
    lift_cmd->add_option("--r", lift_r, "covering parameter")->required();
    lift_cmd->add_option("--out", lift_out, "output path (default stdout)");

    std::string td_file, td_kind, td_out;
    unsigned td_param = 0;
    auto* td_cmd = app.add_subcommand("turan-dual", "covering <-> Turan duality");
    td_cmd->add_option("--file", td_file)->required();
    td_cmd->add_option("--kind", td_kind, "covering | turan")
        ->required()
        ->check(CLI::IsMember({"covering", "turan"}));
    td_cmd->add_option("--param", td_param, "r for coverings, k for Turan designs")
        ->required();
    td_cmd->add_option("--out", td_out, "output path (default stdout)");

    CyclicArgs cyc_args;
    auto* cyc_cmd = app.add_subcommand("cyclic-search", "greedy search for cyclic codes");
    cyc_cmd->add_option("--q", cyc_args.q)->required();
    cyc_cmd->add_option("--n", cyc_args.n)->required();
    cyc_cmd->add_option("--k", cyc_args.k)->required();
    cyc_cmd->add_option("--d", cyc_args.d)->required();
    cyc_cmd->add_option("--seed", cyc_args.seed, "PRNG seed")->required();
    cyc_cmd->add_option("--out", cyc_args.out, "code file path");
    cyc_cmd->add_option("--orbits", cyc_args.orbits,
                        "orbit sidecar JSON (default <out>.orbits.json)");

    // global flags (--cap) remain usable after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (cap) caps().enumeration = cap;
        if (bounds_cmd->parsed()) return run_bounds(bounds_args);
        if (enum_cmd->parsed()) return run_enumerate(enum_q, enum_n, enum_k, enum_out);
        if (spread_cmd->parsed()) return run_spread(spread_q, spread_n, spread_k, spread_out);
        if (match_cmd->parsed()) return run_match(match_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (conv_cmd->parsed()) return run_convert(conv_file, conv_mode, conv_delta, conv_out);
        if (dual_cmd->parsed()) return run_dual(dual_file, dual_d, dual_out);
        if (lift_cmd->parsed()) return run_lift(lift_file, lift_r, lift_out);
        if (td_cmd->parsed()) return run_turan_dual(td_file, td_kind, td_param, td_out);
        if (cyc_cmd->parsed()) return run_cyclic_search(cyc_args);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
