// qg: command-line front end for exact Kronecker quiver Grassmannian
// computations. Machine-readable JSON/CSV for tooling, plain text for humans.
//
// Exit codes: 0 success, 1 internal identity violation (a cross-checked
// quantity disagreed), 2 usage error, 3 resource bound exceeded.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kronq/cluster.hpp"
#include "kronq/fq_oracle.hpp"
#include "kronq/hom_basis.hpp"
#include "kronq/invariants.hpp"
#include "kronq/selftest.hpp"
#include "kronq/version.hpp"

namespace {

using json = nlohmann::json;
using namespace kronq;

constexpr int exit_ok = 0;
constexpr int exit_identity = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct Options {
    std::string format = "plain";
    int max_rank = 12;
    int jobs = 1;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DimVector parse_dim_pair(const std::string& text) {
    const size_t comma = text.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= text.size())
        throw usage_error("expected e1,e2 but got '" + text + "'");
    for (size_t i = 0; i < text.size(); ++i)
        if (i != comma && !isdigit(static_cast<unsigned char>(text[i])))
            throw usage_error("expected e1,e2 but got '" + text + "'");
    return DimVector(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
}

RepKind parse_kind(const std::string& t) {
    if (t == "P") return RepKind::Preprojective;
    if (t == "R") return RepKind::Regular;
    if (t == "I") return RepKind::Preinjective;
    throw usage_error("type must be one of P, R, I");
}

Indecomposable make_indec(const std::string& type, int n) {
    return Indecomposable(parse_kind(type), n);
}

void check_rank(const Options& opt, int n) {
    if (n < 0) throw usage_error("rank must be nonnegative");
    if (n > opt.max_rank)
        throw usage_error("rank " + std::to_string(n) + " exceeds --max-rank " +
                          std::to_string(opt.max_rank));
}

void emit_json(const std::string& command, const json& params, const json& result) {
    json envelope;
    envelope["command"] = command;
    envelope["engine_version"] = engine_version;
    envelope["parameters"] = params;
    envelope["result"] = result;
    std::cout << envelope.dump(2) << "\n";
}

json graded_to_json(const GradedPoly& p) {
    json j = json::array();
    for (long long c : p.coefficients()) j.push_back(c);
    return j;
}

json laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["coeff"] = c.str();
        t["exponents"] = e;
        terms.push_back(t);
    }
    json j;
    j["terms"] = terms;
    j["text"] = p.to_string();
    return j;
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string summands_to_string(const std::vector<PlacedSummand>& ss, const char* sep) {
    std::string out;
    for (size_t i = 0; i < ss.size(); ++i) {
        if (i) out += sep;
        out += ss[i].to_string();
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

int cmd_poincare(const Options& opt, const std::string& type, int n, const DimVector& e) {
    check_rank(opt, n);
    const GrassId id(parse_kind(type), n, e);
    const GradedPoly p = poincare(id);
    if (opt.format == "json") {
        json result;
        result["coefficients"] = graded_to_json(p);
        result["euler_characteristic"] = p.eval(1);
        result["empty"] = p.is_zero();
        if (!p.is_zero()) result["dimension"] = p.degree();
        emit_json("poincare",
                  {{"type", type}, {"n", n}, {"e", {e.d1, e.d2}}}, result);
    } else if (opt.format == "csv") {
        std::cout << "i,b_2i\n";
        for (int i = 0; i <= p.degree(); ++i) std::cout << i << "," << p.coeff(i) << "\n";
    } else {
        std::cout << "P(" << id.to_string() << ") = " << p.to_string()
                  << "  chi = " << p.eval(1);
        if (!p.is_zero()) std::cout << "  dim = " << p.degree();
        std::cout << (p.is_zero() ? "  (empty variety)" : "") << "\n";
    }
    return exit_ok;
}

int cmd_euler(const Options& opt, const std::string& type, int n, const std::string& rep,
              bool typed, const DimVector& e) {
    RepDescriptor M;
    std::string label;
    if (!rep.empty()) {
        M = RepDescriptor::parse(rep);
        label = M.to_string();
    } else if (!typed) {
        throw usage_error("euler: give either --rep or both --type and --rank");
    } else {
        M = RepDescriptor{make_indec(type, n)};
        check_rank(opt, n);
        label = M.to_string();
    }
    for (const auto& s : M.summands()) check_rank(opt, s.rank);
    const long long chi = euler_char_sum(M, e);
    if (opt.format == "json") {
        emit_json("euler", {{"rep", label}, {"e", {e.d1, e.d2}}},
                  {{"euler_characteristic", chi}});
    } else if (opt.format == "csv") {
        std::cout << "chi\n" << chi << "\n";
    } else {
        std::cout << "chi(Gr_" << e.to_string() << "(" << label << ")) = " << chi << "\n";
    }
    return exit_ok;
}

int cmd_fixed_points(const Options& opt, const std::string& type, int n,
                     const DimVector& e) {
    check_rank(opt, n);
    const Indecomposable M = make_indec(type, n);
    const auto fps = enumerate_fixed_points(M, e);
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& fp : fps) {
            json summands = json::array();
            for (const auto& s : fp.summands)
                summands.push_back({{"kind", std::string(1, kind_letter(s.shape.kind))},
                                    {"rank", s.shape.rank},
                                    {"position", s.position}});
            rows.push_back({{"s1", fp.s1}, {"s2", fp.s2}, {"summands", summands}});
        }
        emit_json("fixed-points", {{"type", type}, {"n", n}, {"e", {e.d1, e.d2}}},
                  {{"count", fps.size()}, {"fixed_points", rows}});
    } else if (opt.format == "csv") {
        std::cout << "s1,s2,summands\n";
        for (const auto& fp : fps)
            std::cout << join_ints(fp.s1, "|") << "," << join_ints(fp.s2, "|") << ","
                      << summands_to_string(fp.summands, "|") << "\n";
    } else {
        std::cout << fps.size() << " fixed point(s) of Gr_" << e.to_string() << "("
                  << M.to_string() << ")\n";
        for (const auto& fp : fps)
            std::cout << "  S1={" << join_ints(fp.s1, ",") << "} S2={"
                      << join_ints(fp.s2, ",") << "}  " << summands_to_string(fp.summands, " + ")
                      << "\n";
    }
    return exit_ok;
}

int cmd_cells(const Options& opt, int n, const DimVector& e) {
    check_rank(opt, n);
    if (n < 1) throw usage_error("cells: rank must be >= 1");
    const Indecomposable M = R(n);
    const auto fps = enumerate_fixed_points(M, e);
    std::vector<long long> dims(fps.size()), dims_rec(fps.size());
    std::vector<long long> histogram;
    bool agree = true;
    for (size_t i = 0; i < fps.size(); ++i) {
        dims[i] = cell_dimension(M, fps[i]);
        dims_rec[i] = cell_dimension_recursive(n, fps[i].summands);
        if (dims[i] != dims_rec[i]) agree = false;
        if (static_cast<size_t>(dims[i]) >= histogram.size())
            histogram.resize(dims[i] + 1, 0);
        ++histogram[dims[i]];
    }
    const GradedPoly assembled{std::vector<long long>(histogram)};
    const GradedPoly closed = poincare(M, e);
    const bool match = agree && assembled == closed;

    if (opt.format == "json") {
        json rows = json::array();
        for (size_t i = 0; i < fps.size(); ++i) {
            json summands = json::array();
            for (const auto& s : fps[i].summands)
                summands.push_back({{"kind", std::string(1, kind_letter(s.shape.kind))},
                                    {"rank", s.shape.rank},
                                    {"position", s.position}});
            rows.push_back({{"s1", fps[i].s1},
                            {"s2", fps[i].s2},
                            {"summands", summands},
                            {"cell_dim", dims[i]},
                            {"cell_dim_recursive", dims_rec[i]}});
        }
        json result;
        result["cells"] = rows;
        result["poincare_from_cells"] = graded_to_json(assembled);
        result["poincare_closed_form"] = graded_to_json(closed);
        result["match"] = match;
        emit_json("cells", {{"n", n}, {"e", {e.d1, e.d2}}}, result);
    } else if (opt.format == "csv") {
        std::cout << "s1,s2,summands,cell_dim,cell_dim_recursive\n";
        for (size_t i = 0; i < fps.size(); ++i)
            std::cout << join_ints(fps[i].s1, "|") << "," << join_ints(fps[i].s2, "|")
                      << "," << summands_to_string(fps[i].summands, "|") << "," << dims[i]
                      << "," << dims_rec[i] << "\n";
    } else {
        std::cout << "cells of Gr_" << e.to_string() << "(R" << n << ")\n";
        for (size_t i = 0; i < fps.size(); ++i)
            std::cout << "  S1={" << join_ints(fps[i].s1, ",") << "} S2={"
                      << join_ints(fps[i].s2, ",") << "}  "
                      << summands_to_string(fps[i].summands, " + ") << "  dim " << dims[i]
                      << " (recursive " << dims_rec[i] << ")\n";
        std::cout << "Poincare from cells: " << assembled.to_string() << "  closed form: "
                  << closed.to_string() << "  " << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    if (!match) {
        std::cerr << "cells: cell dimensions disagree with the closed formula\n";
        return exit_identity;
    }
    return exit_ok;
}

int cmd_strata(const Options& opt, int n, const DimVector& e) {
    check_rank(opt, n);
    const GrassId id(RepKind::Regular, n, e);
    const auto layers = strata(id);
    long long total = 0;
    json rows = json::array();
    std::vector<std::string> lines;
    for (const auto& [k, sub] : layers) {
        const long long closed = euler_char(sub);
        const long long exact = stratum_euler_exact(id, k);
        total += exact;
        rows.push_back({{"k", k},
                        {"rank", sub.rank},
                        {"e", {sub.e.d1, sub.e.d2}},
                        {"chi_closed", closed},
                        {"chi_stratum", exact}});
        lines.push_back("  X_" + std::to_string(k) + " ~ " + sub.to_string() +
                        "  chi(X_k) = " + std::to_string(closed) +
                        "  chi(X_k \\ X_k+1) = " + std::to_string(exact));
    }
    const bool match = total == euler_char(id);
    if (opt.format == "json") {
        emit_json("strata", {{"n", n}, {"e", {e.d1, e.d2}}},
                  {{"strata", rows}, {"telescoping_match", match}});
    } else if (opt.format == "csv") {
        std::cout << "k,rank,e1,e2,chi_closed,chi_stratum\n";
        for (const auto& row : rows)
            std::cout << row["k"] << "," << row["rank"] << "," << row["e"][0] << ","
                      << row["e"][1] << "," << row["chi_closed"] << ","
                      << row["chi_stratum"] << "\n";
    } else {
        std::cout << "stratification of " << id.to_string() << "\n";
        for (const auto& line : lines) std::cout << line << "\n";
        std::cout << "sum of strata chi = " << total << "  " << (match ? "MATCH" : "MISMATCH")
                  << "\n";
    }
    return match ? exit_ok : exit_identity;
}

int cmd_count_fq(const Options& opt, const std::string& type, int n, const DimVector& e,
                 int q) {
    const Indecomposable M = make_indec(type, n);
    const long long count = count_points(M, e, q, opt.jobs);
    const long long expected = poincare(M, e).eval(q);
    const bool match = count == expected;
    if (opt.format == "json") {
        emit_json("count-fq",
                  {{"type", type}, {"n", n}, {"e", {e.d1, e.d2}}, {"q", q}},
                  {{"count", count}, {"poincare_at_q", expected}, {"match", match}});
    } else if (opt.format == "csv") {
        std::cout << "count,poincare_at_q,match\n"
                  << count << "," << expected << "," << (match ? "true" : "false") << "\n";
    } else {
        std::cout << "#Gr_" << e.to_string() << "(" << M.to_string() << ")(F_" << q
                  << ") = " << count << "  P(" << q << ") = " << expected << "  "
                  << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? exit_ok : exit_identity;
}

int emit_laurent(const Options& opt, const std::string& command, const json& params,
                 const LaurentPoly& value) {
    if (opt.format == "json") {
        emit_json(command, params, laurent_to_json(value));
    } else if (opt.format == "csv") {
        std::cout << "coeff";
        for (int i = 1; i <= value.nvars(); ++i) std::cout << ",exp" << i;
        std::cout << "\n";
        for (const auto& [e, c] : value.terms()) {
            std::cout << c.str();
            for (int x : e) std::cout << "," << x;
            std::cout << "\n";
        }
    } else {
        std::cout << value.to_string() << "\n";
    }
    return exit_ok;
}

int emit_laurent_pair(const Options& opt, const std::string& command, const json& params,
                      const char* first_label, const LaurentPoly& first,
                      const char* second_label, const LaurentPoly& second) {
    const bool equal = first == second;
    if (opt.format == "json") {
        json result;
        result[first_label] = laurent_to_json(first);
        result[second_label] = laurent_to_json(second);
        result["equal"] = equal;
        emit_json(command, params, result);
    } else if (opt.format == "csv") {
        std::cout << "construction,text\n";
        std::cout << first_label << ",\"" << first.to_string() << "\"\n";
        std::cout << second_label << ",\"" << second.to_string() << "\"\n";
        std::cout << "equal," << (equal ? "true" : "false") << "\n";
    } else {
        std::cout << first_label << ":  " << first.to_string() << "\n";
        std::cout << second_label << ":   " << second.to_string() << "\n";
        std::cout << (equal ? "EQUAL" : "UNEQUAL") << "\n";
    }
    if (!equal) {
        std::cerr << command << ": the two constructions disagree\n";
        return exit_identity;
    }
    return exit_ok;
}

int cmd_selftest(const Options& opt) {
    const auto results = run_acceptance();
    bool all = true;
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& r : results) {
            rows.push_back({{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"seconds", r.seconds},
                            {"detail", r.detail}});
            all = all && r.pass;
        }
        emit_json("selftest", json::object(), {{"criteria", rows}, {"all_pass", all}});
    } else if (opt.format == "csv") {
        std::cout << "id,pass,seconds,name\n";
        for (const auto& r : results) {
            std::cout << r.id << "," << (r.pass ? "true" : "false") << "," << r.seconds
                      << ",\"" << r.name << "\"\n";
            all = all && r.pass;
        }
    } else {
        for (const auto& r : results) {
            std::printf("%s %2d  %-58s %6.2fs%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.seconds, r.detail.empty() ? "" : "  ",
                        r.detail.c_str());
            all = all && r.pass;
        }
    }
    return all ? exit_ok : exit_identity;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qg: exact invariants of Kronecker quiver Grassmannians"};
    app.fallthrough();

    Options opt;
    app.add_option("-f,--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "plain", "csv"}))
        ->envname("QG_FORMAT");
    app.add_option("--max-rank", opt.max_rank, "Largest accepted rank")
        ->envname("QG_MAX_RANK");
    app.add_option("-j,--jobs", opt.jobs, "Worker threads for brute-force loops")
        ->envname("QG_JOBS");

    std::string type = "R", e_text = "0,0", rep_text, algebra = "a11";
    int n = 1, q = 2, k_index = 1;

    auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial of Gr_e(M)");
    poincare_cmd->add_option("-t,--type", type, "P, R or I")->required();
    poincare_cmd->add_option("-n,--rank", n, "Rank of the indecomposable")->required();
    poincare_cmd->add_option("-e,--dim", e_text, "Subrepresentation dimensions e1,e2")
        ->required();

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of Gr_e(M)");
    euler_cmd->add_option("-t,--type", type, "P, R or I");
    euler_cmd->add_option("-n,--rank", n, "Rank of the indecomposable");
    euler_cmd->add_option("--rep", rep_text, "Direct-sum descriptor, e.g. 'P0+2*R1'");
    euler_cmd->add_option("-e,--dim", e_text, "Dimensions e1,e2")->required();

    auto* cells_cmd = app.add_subcommand("cells", "Attracting cells of Gr_e(R_n)");
    cells_cmd->add_option("-n,--rank", n)->required();
    cells_cmd->add_option("-e,--dim", e_text)->required();

    auto* fp_cmd = app.add_subcommand("fixed-points", "Torus fixed points of Gr_e(M)");
    fp_cmd->add_option("-t,--type", type)->required();
    fp_cmd->add_option("-n,--rank", n)->required();
    fp_cmd->add_option("-e,--dim", e_text)->required();

    auto* strata_cmd = app.add_subcommand("strata", "Singular stratification of Gr_e(R_n)");
    strata_cmd->add_option("-n,--rank", n)->required();
    strata_cmd->add_option("-e,--dim", e_text)->required();

    auto* fq_cmd = app.add_subcommand("count-fq", "Brute-force point count over F_q");
    fq_cmd->add_option("-t,--type", type)->required();
    fq_cmd->add_option("-n,--rank", n)->required();
    fq_cmd->add_option("-e,--dim", e_text)->required();
    fq_cmd->add_option("-q,--field", q, "Prime field size")->required();

    auto* cluster_cmd = app.add_subcommand("cluster", "Cluster-algebra computations");
    auto* var_cmd = cluster_cmd->add_subcommand("var", "Cluster variable x_k");
    var_cmd->add_option("-k,--index", k_index)->required();
    var_cmd->add_option("--algebra", algebra)->check(CLI::IsMember({"a11", "a21"}));
    auto* z_cmd = cluster_cmd->add_subcommand("z", "Canonical basis element z_n");
    z_cmd->add_option("-n,--index", n)->required();
    auto* u_cmd = cluster_cmd->add_subcommand("u", "Canonical basis element u_n");
    u_cmd->add_option("-n,--index", n)->required();
    auto* s_cmd = cluster_cmd->add_subcommand("s", "Caldero-Chapoton value s_n = CC(R_n)");
    s_cmd->add_option("-n,--index", n)->required();
    auto* cc_cmd = cluster_cmd->add_subcommand("cc", "Caldero-Chapoton map of a representation");
    cc_cmd->add_option("-t,--type", type);
    cc_cmd->add_option("-n,--rank", n);
    cc_cmd->add_option("--rep", rep_text, "Direct-sum descriptor, e.g. 'P0+2*R1'");
    cluster_cmd->require_subcommand(1);

    app.add_subcommand("selftest", "Run the full verification suite");
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (poincare_cmd->parsed())
            return cmd_poincare(opt, type, n, parse_dim_pair(e_text));
        if (euler_cmd->parsed()) {
            const bool typed =
                euler_cmd->count("--type") > 0 && euler_cmd->count("--rank") > 0;
            return cmd_euler(opt, type, n, rep_text, typed, parse_dim_pair(e_text));
        }
        if (cells_cmd->parsed()) return cmd_cells(opt, n, parse_dim_pair(e_text));
        if (fp_cmd->parsed()) return cmd_fixed_points(opt, type, n, parse_dim_pair(e_text));
        if (strata_cmd->parsed()) return cmd_strata(opt, n, parse_dim_pair(e_text));
        if (fq_cmd->parsed())
            return cmd_count_fq(opt, type, n, parse_dim_pair(e_text), q);
        if (cluster_cmd->parsed()) {
            if (var_cmd->parsed()) {
                if (std::abs(k_index) > opt.max_rank + 8)
                    throw usage_error("cluster index exceeds bound");
                const LaurentPoly v = algebra == "a11"
                                          ? cluster_var_a11(k_index, opt.max_rank + 8)
                                          : cluster_var_a21(k_index, opt.max_rank + 8);
                return emit_laurent(opt, "cluster var",
                                    {{"k", k_index}, {"algebra", algebra}}, v);
            }
            if (z_cmd->parsed()) {
                check_rank(opt, n);
                return emit_laurent_pair(opt, "cluster z", {{"n", n}}, "recurrence",
                                         z_n_recurrence(n, opt.max_rank + 8), "geometric",
                                         z_n_geometric(n, opt.max_rank + 8));
            }
            if (u_cmd->parsed()) {
                check_rank(opt, n);
                return emit_laurent_pair(opt, "cluster u", {{"n", n}}, "recurrence",
                                         u_n_recurrence(n, opt.max_rank + 8), "geometric",
                                         u_n_geometric(n, opt.max_rank + 8));
            }
            if (s_cmd->parsed()) {
                check_rank(opt, n);
                return emit_laurent(opt, "cluster s", {{"n", n}},
                                    s_n(n, opt.max_rank + 8));
            }
            if (cc_cmd->parsed()) {
                RepDescriptor M;
                if (!rep_text.empty()) {
                    M = RepDescriptor::parse(rep_text);
                } else if (cc_cmd->count("--type") > 0 && cc_cmd->count("--rank") > 0) {
                    M = RepDescriptor{make_indec(type, n)};
                } else {
                    throw usage_error(
                        "cluster cc: give either --rep or both --type and --rank");
                }
                for (const auto& s : M.summands()) check_rank(opt, s.rank);
                return emit_laurent(opt, "cluster cc", {{"rep", M.to_string()}},
                                    cc_map_a11(M));
            }
        }
        if (app.get_subcommand("selftest")->parsed()) return cmd_selftest(opt);
        std::cerr << "no subcommand given\n";
        return exit_usage;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return exit_resource;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const inexact_division& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return exit_identity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return exit_identity;
    }
}
