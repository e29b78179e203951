// Batch front end: basis listings, cosimplicial matrices, Whitehead products,
// reduction mod N, verification suites, and rank certificates.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "confspace/config.hpp"
#include "confspace/theta.hpp"
#include "confspace/tower.hpp"
#include "confspace/verify.hpp"
#include "confspace/whitehead.hpp"

using namespace confspace;
using nlohmann::json;

namespace {

// vector expressions: terms separated by top-level +/-, each term an
// optional rational coefficient, '*', and a symbol
SymVec parse_expr(const ManifoldSpec& spec, const std::string& text) {
    SymVec out;
    std::vector<std::pair<int, std::string>> terms;  // sign, body
    std::string cur;
    int sign = 1, depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            if (!cur.empty()) terms.emplace_back(sign, cur);
            sign = (c == '-') ? -1 : 1;
            cur.clear();
            continue;
        }
        cur += c;
    }
    if (!cur.empty()) terms.emplace_back(sign, cur);
    if (terms.empty()) throw ParseError("empty vector expression");
    for (auto& [sg, body] : terms) {
        Rat coeff(sg);
        std::string sym = body;
        if (auto star = body.find('*'); star != std::string::npos && star < body.find('(')) {
            std::string c = body.substr(0, star);
            c.erase(remove_if(c.begin(), c.end(), ::isspace), c.end());
            coeff *= rat_parse(c);
            sym = body.substr(star + 1);
        }
        sym_add(out, symbol_parse(spec, sym), coeff);
    }
    return out;
}

json terms_json(const SymVec& v, const ManifoldSpec& spec) {
    json arr = json::array();
    for (const auto& [s, c] : v)
        arr.push_back({{"coeff", rat_str(c)}, {"symbol", symbol_str(s, spec)}});
    return arr;
}

int emit_certificate(const Certificate& cert, const std::string& out_path) {
    const std::string text = cert.to_json();
    std::cout << text << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 1;
        }
        out << text << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic engine for configuration-space homotopy charts"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "run configuration JSON")->required();

    // basis
    auto* cmd_basis = app.add_subcommand("basis", "print the ordered symbol basis of a chart");
    std::string basis_kind;
    cmd_basis->add_option("--kind", basis_kind, "chart kind, e.g. pi5C3")->required();

    // map
    auto* cmd_map = app.add_subcommand("map", "print a coface or codegeneracy matrix");
    std::string map_kind, map_op = "coface";
    int map_index = 0;
    std::string map_mode = "exact";
    cmd_map->add_option("--kind", map_kind, "source chart kind")->required();
    cmd_map->add_option("--op", map_op, "coface | codegeneracy")
        ->check(CLI::IsMember({"coface", "codegeneracy"}));
    cmd_map->add_option("--index", map_index, "map index i")->required();
    cmd_map->add_option("--mode", map_mode, "exact | mod_n5 (degree-5 cofaces)")
        ->check(CLI::IsMember({"exact", "mod_n5"}));

    // wh
    auto* cmd_wh = app.add_subcommand("wh", "Whitehead product of two symbol expressions");
    std::string wh_left, wh_right, wh_mode = "exact";
    int wh_level = 3;
    cmd_wh->add_option("--left", wh_left, "left vector expression")->required();
    cmd_wh->add_option("--right", wh_right, "right vector expression")->required();
    cmd_wh->add_option("--level", wh_level, "configuration level (2 or 3)");
    cmd_wh->add_option("--mode", wh_mode, "exact | mod_n5")
        ->check(CLI::IsMember({"exact", "mod_n5"}));

    // reduce-mod-n
    auto* cmd_reduce = app.add_subcommand("reduce-mod-n", "reduce a degree-5 vector modulo N");
    std::string reduce_expr;
    cmd_reduce->add_option("--vector", reduce_expr, "vector expression")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a property suite over the window");
    std::string suite = "all";
    cmd_verify->add_option("--suite", suite, "suite name or 'all'");

    // rank
    auto* cmd_rank = app.add_subcommand("rank", "rank certificate for a family of classes");
    std::string classes_path, rank_mode = "quotient", rank_out;
    cmd_rank->add_option("--classes", classes_path, "classes JSON file")->required();
    cmd_rank->add_option("--mode", rank_mode, "quotient | theta | theta-restricted")
        ->check(CLI::IsMember({"quotient", "theta", "theta-restricted"}));
    cmd_rank->add_option("--out", rank_out, "also write the certificate to this file");

    // theta
    auto* cmd_theta = app.add_subcommand("theta", "evaluate theta coordinates of a vector");
    std::string theta_index, theta_expr;
    bool theta_restricted = false;
    cmd_theta->add_option("--index", theta_index, "single coordinate, e.g. composite(1,2)");
    cmd_theta->add_option("--vector", theta_expr, "vector expression")->required();
    cmd_theta->add_flag("--restricted", theta_restricted, "covering-space index constraints");

    CLI11_PARSE(app, argc, argv);

    try {
        const RunConfig rc = load_config(config_path);
        const ManifoldSpec& spec = rc.manifold;

        if (*cmd_basis) {
            auto kind = space_kind_parse(basis_kind);
            if (!kind) throw ParseError("unknown chart kind '" + basis_kind + "'");
            const ModuleSpace sp = build_space(spec, *kind);
            for (std::uint32_t i = 0; i < sp.dim(); ++i)
                std::cout << i << "\t" << symbol_str(sp.symbols[i], spec) << "\n";
            return 0;
        }

        if (*cmd_map) {
            auto kind = space_kind_parse(map_kind);
            if (!kind) throw ParseError("unknown chart kind '" + map_kind + "'");
            const ModuleSpace src = build_space(spec, *kind);
            const int n = space_level(*kind);
            const WhMode mode = map_mode == "exact" ? WhMode::exact : WhMode::mod_n5;
            json cols = json::array();
            for (const BasisSymbol& b : src.symbols) {
                SymVec img;
                if (map_op == "codegeneracy") {
                    img = codegeneracy(n, map_index, sym_single(b));
                } else if (space_degree(*kind) == 5 && n == 2 && b.kind != SymKind::T5) {
                    img = coface5(map_index, sym_single(b), spec, mode);
                } else {
                    img = coface_tw(n, map_index, sym_single(b), spec);
                }
                cols.push_back({{"from", symbol_str(b, spec)}, {"terms", terms_json(img, spec)}});
            }
            json out;
            out["columns"] = cols;
            out["index"] = map_index;
            out["kind"] = map_kind;
            out["op"] = map_op;
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*cmd_wh) {
            const WhMode mode = wh_mode == "exact" ? WhMode::exact : WhMode::mod_n5;
            SymVec prod = whitehead(parse_expr(spec, wh_left), parse_expr(spec, wh_right), wh_level,
                                    mode, spec);
            std::cout << json({{"terms", terms_json(prod, spec)}}).dump() << "\n";
            return 0;
        }

        if (*cmd_reduce) {
            const NSpan n = build_N(spec);
            const QVector q = reduce_mod_N(parse_expr(spec, reduce_expr), n);
            std::cout << json({{"terms", terms_json(unresolve(q, n.space), spec)}}).dump() << "\n";
            return 0;
        }

        if (*cmd_verify) {
            std::vector<std::string> names =
                suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool all_pass = true;
            for (const std::string& name : names) {
                const SuiteReport rep = run_suite(name, spec);
                all_pass = all_pass && rep.pass;
                std::cout << (rep.pass ? "PASS" : "FAIL") << " " << rep.suite << " (" << rep.checks
                          << " checks) " << rep.detail << "\n";
            }
            return all_pass ? 0 : 1;
        }

        if (*cmd_rank) {
            const std::vector<SymVec> classes = load_classes(classes_path, spec);
            if (rank_mode == "quotient") {
                Tower tower(spec);
                auto res = tower.rank_of_family(classes, rc.config_hash);
                return emit_certificate(res.certificate, rank_out);
            }
            // theta modes quotient by the theta image of d1(3,2)
            std::vector<SymVec> relations;
            const ModuleSpace src = build_space(spec, SpaceKind::pi5C2);
            for (const BasisSymbol& b : src.symbols)
                for (int i = 0; i <= 3; ++i) {
                    SymVec img = coface5(i, sym_single(b), spec, WhMode::exact);
                    if (!sym_is_zero(img)) relations.push_back(std::move(img));
                }
            auto res = theta_rank(classes, relations, rank_mode == "theta-restricted", spec.window,
                                  rc.config_hash);
            return emit_certificate(res.certificate, rank_out);
        }

        if (*cmd_theta) {
            const SymVec v = parse_expr(spec, theta_expr);
            if (!theta_index.empty()) {
                const ThetaIndex idx = theta_index_parse(theta_index, theta_restricted);
                std::cout << rat_str(theta(idx, v)) << "\n";
                return 0;
            }
            json out = json::object();
            for (const auto& [idx, c] : theta_vector(v)) {
                if (theta_restricted) {
                    ThetaIndex r = idx;
                    r.kind = idx.is_square() ? ThetaIndex::Kind::restricted_square
                                             : ThetaIndex::Kind::restricted_composite;
                    if (!r.legal()) continue;
                }
                out[idx.str()] = rat_str(c);
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
