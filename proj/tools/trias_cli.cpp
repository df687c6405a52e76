// Command-line front end. Subcommands: trees, check, cohomology, homology,
// uea, deform (check | infinitesimal | obstruct | extend | rigidity).
// Output is a human table by default; --records switches to line-oriented
// key=value records keyed by a hash of the input's canonical form, stable for
// diff-based regression. Exit codes: 0 success, 1 parse or validation
// failure, 2 resource limit.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trias/algebra.hpp"
#include "trias/complexes.hpp"
#include "trias/deformations.hpp"
#include "trias/errors.hpp"
#include "trias/fields.hpp"
#include "trias/format.hpp"
#include "trias/trees.hpp"
#include "trias/uea.hpp"

namespace {

using namespace trias;

struct RunConfig {
    std::string field = "q";
    int n_max = 6;
    std::uint64_t seed = 0;
    std::size_t budget = 4000000;
    bool records = false;
};

std::string hash_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

char op_letter(Op op) {
    switch (op) {
        case Op::Left: return 'l';
        case Op::Right: return 'r';
        default: return 'm';
    }
}

char orient_letter(LeafOrientation o) {
    switch (o) {
        case LeafOrientation::Left: return 'l';
        case LeafOrientation::Right: return 'r';
        default: return 'm';
    }
}

void print_run_header(const RunConfig& cfg, const char* cmd) {
    if (!cfg.records) return;
    std::cout << "run cmd=" << cmd << " field=" << cfg.field << " n-max=" << cfg.n_max
              << " seed=" << cfg.seed << " budget=" << cfg.budget << "\n";
}

int cmd_trees(const RunConfig& cfg, int n) {
    if (n < 0) throw std::invalid_argument("tree degree must be nonnegative");
    if (n > cfg.n_max) throw ResourceLimit("tree degree exceeds n-max");
    const auto& all = enumerate_trees(n);
    print_run_header(cfg, "trees");
    std::size_t width = 4;
    for (const auto& t : all) width = std::max(width, to_string(t).size());
    if (cfg.records)
        std::cout << "trees n=" << n << " count=" << all.size() << "\n";
    else {
        std::cout << "T_" << n << ": " << all.size() << (all.size() == 1 ? " tree" : " trees")
                  << "\n";
        std::printf(" idx  %-*s  orient  circ\n", int(width), "tree");
    }
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        const auto& t = all[idx];
        std::string orient, circ;
        for (int i = 0; i <= n; ++i) orient += orient_letter(leaf_orientation(t, i));
        if (!t.is_leaf())
            for (int i = 0; i <= n; ++i) circ += op_letter(circ_product(t, i));
        else
            circ = "-";
        if (cfg.records)
            std::cout << "tree idx=" << idx << " orient=" << orient << " circ=" << circ
                      << " shape=\"" << to_string(t) << "\"\n";
        else
            std::printf("%4zu  %-*s  %-6s  %s\n", idx, int(width), to_string(t).c_str(),
                        orient.c_str(), circ.c_str());
    }
    return 0;
}

template <class F, class V>
void list_violations(const RunConfig& cfg, const char* scope, const std::string& name,
                     const std::vector<V>& viols) {
    const std::size_t cap = cfg.records ? viols.size() : 10;
    for (std::size_t i = 0; i < viols.size() && i < cap; ++i) {
        const auto& v = viols[i];
        if (cfg.records)
            std::cout << "violation scope=" << scope << (name.empty() ? "" : " name=" + name)
                      << " axiom=" << v.axiom << " x=" << v.triple[0] << " y=" << v.triple[1]
                      << " z=" << v.triple[2] << "\n";
        else
            std::cout << "  axiom " << v.axiom << " fails at (" << v.triple[0] << ", "
                      << v.triple[1] << ", " << v.triple[2] << ")\n";
    }
    if (!cfg.records && viols.size() > cap)
        std::cout << "  ... and " << viols.size() - cap << " more\n";
}

template <class F>
int cmd_check(const F& f, const RunConfig& cfg, const std::string& path) {
    auto doc = load_document(path);
    auto A = realize_algebra(f, doc);
    const auto h = hash_hex(canonical_text(doc));
    print_run_header(cfg, "check");
    std::size_t failures = 0;

    auto axv = check_axioms(A);
    failures += axv.size();
    if (cfg.records)
        std::cout << "check algebra=" << h << " axioms=11 violations=" << axv.size() << "\n";
    else {
        std::vector<bool> bad(12, false);
        for (const auto& v : axv) bad[std::size_t(v.axiom)] = true;
        const int held = 11 - int(std::count(bad.begin(), bad.end(), true));
        std::cout << held << "/11 axioms hold\n";
    }
    list_violations<F>(cfg, "algebra", "", axv);

    for (const auto& blk : doc.reps) {
        auto M = realize_actions(f, doc.dim, blk);
        auto mv = check_representation(A, M);
        failures += mv.size();
        if (cfg.records)
            std::cout << "check-rep name=" << blk.name << " violations=" << mv.size() << "\n";
        else
            std::cout << "rep " << blk.name << ": "
                      << (mv.empty() ? "ok" : std::to_string(mv.size()) + " violations") << "\n";
        list_violations<F>(cfg, "rep", blk.name, mv);
    }
    for (const auto& blk : doc.coreps) {
        auto N = realize_actions(f, doc.dim, blk);
        auto cv = check_corepresentation(A, N);
        failures += cv.size();
        if (cfg.records)
            std::cout << "check-corep name=" << blk.name << " violations=" << cv.size() << "\n";
        else
            std::cout << "corep " << blk.name << ": "
                      << (cv.empty() ? "ok" : std::to_string(cv.size()) + " violations") << "\n";
        list_violations<F>(cfg, "corep", blk.name, cv);
    }
    for (const auto& blk : doc.deformations) {
        auto D = realize_deformation(f, A, blk);
        auto dv = check_order(D, D.order());
        failures += dv.size();
        if (cfg.records) {
            std::cout << "check-deformation name=" << blk.name << " order=" << D.order()
                      << " violations=" << dv.size() << "\n";
            for (const auto& v : dv)
                std::cout << "violation scope=deformation name=" << blk.name
                          << " axiom=" << v.axiom << " order=" << v.order << " x=" << v.x
                          << " y=" << v.y << " z=" << v.z << "\n";
        } else {
            if (dv.empty())
                std::cout << "deformation " << blk.name << ": identities hold through t^"
                          << D.order() << "\n";
            else {
                std::cout << "deformation " << blk.name << ": " << dv.size() << " violations\n";
                for (std::size_t i = 0; i < dv.size() && i < 10; ++i)
                    std::cout << "  axiom " << dv[i].axiom << " fails at t^" << dv[i].order
                              << " on (" << dv[i].x << ", " << dv[i].y << ", " << dv[i].z
                              << ")\n";
                if (dv.size() > 10) std::cout << "  ... and " << dv.size() - 10 << " more\n";
            }
        }
    }
    return failures == 0 ? 0 : 1;
}

// validated algebra or a nonzero exit through an exception-free path
template <class F>
bool algebra_ok(const TriasAlgebra<F>& A, const std::string& path) {
    auto axv = check_axioms(A);
    if (axv.empty()) return true;
    std::cerr << path << ": algebra violates axiom " << axv[0].axiom << " at ("
              << axv[0].triple[0] << ", " << axv[0].triple[1] << ", " << axv[0].triple[2]
              << ")\n";
    return false;
}

template <class F>
int cmd_cohomology(const F& f, const RunConfig& cfg, const std::string& path,
                   const std::string& module, int n) {
    auto doc = load_document(path);
    auto A = realize_algebra(f, doc);
    if (!algebra_ok(A, path)) return 1;
    const auto* blk = doc.find_rep(module);
    if (!blk) {
        std::cerr << path << ": no representation named '" << module << "'\n";
        return 1;
    }
    auto M = realize_actions(f, doc.dim, *blk);
    auto mv = check_representation(A, M);
    if (!mv.empty()) {
        std::cerr << path << ": representation '" << module << "' violates axiom "
                  << mv[0].axiom << "\n";
        return 1;
    }
    if (n > cfg.n_max) throw ResourceLimit("degree exceeds n-max");
    const ComplexBudget budget{cfg.n_max, cfg.budget};
    const auto h = hash_hex(canonical_text(doc));
    print_run_header(cfg, "cohomology");
    if (!cfg.records) std::printf("  n  dim C^n  rank d^n  H^n\n");
    for (int k = 0; k <= n; ++k) {
        auto d_out = coboundary_matrix(A, M, k, budget);
        const std::size_t dim = d_out.cols();
        const std::size_t r_out = rank(f, d_out);
        const std::size_t r_in = k == 0 ? 0 : rank(f, coboundary_matrix(A, M, k - 1, budget));
        const std::size_t hdim = dim - r_out - r_in;
        if (cfg.records)
            std::cout << "cohomology algebra=" << h << " module=" << module << " n=" << k
                      << " dim=" << dim << " rank=" << r_out << " h=" << hdim << "\n";
        else
            std::printf("%3d  %7zu  %8zu  %3zu\n", k, dim, r_out, hdim);
    }
    return 0;
}

template <class F>
int cmd_homology(const F& f, const RunConfig& cfg, const std::string& path,
                 const std::string& module, int n) {
    auto doc = load_document(path);
    auto A = realize_algebra(f, doc);
    if (!algebra_ok(A, path)) return 1;
    const auto* blk = doc.find_corep(module);
    if (!blk) {
        std::cerr << path << ": no corepresentation named '" << module << "'\n";
        return 1;
    }
    auto N = realize_actions(f, doc.dim, *blk);
    auto cv = check_corepresentation(A, N);
    if (!cv.empty()) {
        std::cerr << path << ": corepresentation '" << module << "' violates relation "
                  << cv[0].axiom << "\n";
        return 1;
    }
    if (n > cfg.n_max) throw ResourceLimit("degree exceeds n-max");
    const ComplexBudget budget{cfg.n_max, cfg.budget};
    const auto h = hash_hex(canonical_text(doc));
    print_run_header(cfg, "homology");
    if (!cfg.records) std::printf("  n  dim C_n  rank d_n  H_n\n");
    for (int k = 0; k <= n; ++k) {
        auto d_in = chain_differential_matrix(A, N, k + 1, budget);
        const std::size_t dim = d_in.rows();
        const std::size_t r_out =
            k == 0 ? 0 : rank(f, chain_differential_matrix(A, N, k, budget));
        const std::size_t hdim = dim - r_out - rank(f, d_in);
        if (cfg.records)
            std::cout << "homology algebra=" << h << " module=" << module << " n=" << k
                      << " dim=" << dim << " rank=" << r_out << " h=" << hdim << "\n";
        else
            std::printf("%3d  %7zu  %8zu  %3zu\n", k, dim, r_out, hdim);
    }
    return 0;
}

template <class F>
int cmd_uea(const F& f, const RunConfig& cfg, const std::string& path) {
    auto doc = load_document(path);
    auto A = realize_algebra(f, doc);
    if (!algebra_ok(A, path)) return 1;
    EnvelopingAlgebra<F> ua(A);
    const auto gr = ua.gr_dims();
    const bool cert = ua.certified();
    const bool pbw = pbw_check(ua);
    const std::size_t total = gr[0] + gr[1] + gr[2];
    print_run_header(cfg, "uea");
    if (cfg.records)
        std::cout << "uea algebra=" << hash_hex(canonical_text(doc)) << " gr0=" << gr[0]
                  << " gr1=" << gr[1] << " gr2=" << gr[2] << " total=" << total
                  << " certified=" << (cert ? "true" : "false")
                  << " pbw=" << (pbw ? "true" : "false") << "\n";
    else {
        std::cout << "gr: " << gr[0] << ", " << gr[1] << ", " << gr[2] << "; total " << total
                  << "; pbw: " << (pbw ? "true" : "false") << "\n";
        if (!cert)
            std::cout << "certified: false (operator relations fail on the quadratic cover)\n";
    }
    return 0;
}

template <class F>
int cmd_deform(const F& f, const RunConfig& cfg, const std::string& path,
               const std::string& action, std::string name, int order) {
    auto doc = load_document(path);
    auto A = realize_algebra(f, doc);
    if (!algebra_ok(A, path)) return 1;
    const ComplexBudget budget{cfg.n_max, cfg.budget};
    const auto h = hash_hex(canonical_text(doc));
    print_run_header(cfg, "deform");

    if (action == "rigidity") {
        const int max_order = order < 0 ? 3 : order;
        auto report = rigidity_probe(A, max_order, budget);
        if (cfg.records) {
            std::cout << "deform-rigidity algebra=" << h << " h2=" << report.h2
                      << " rigid=" << (report.rigid ? "true" : "false")
                      << " ladders=" << report.ladders.size() << "\n";
            for (std::size_t i = 0; i < report.ladders.size(); ++i)
                std::cout << "ladder idx=" << i << " reached=" << report.ladders[i].reached
                          << " completed=" << (report.ladders[i].completed ? "true" : "false")
                          << "\n";
        } else {
            std::cout << "dim H^2 = " << report.h2 << "\n";
            std::cout << "rigid: " << (report.rigid ? "yes" : "no") << "\n";
            for (std::size_t i = 0; i < report.ladders.size(); ++i) {
                const auto& lad = report.ladders[i];
                std::cout << "class " << i << ": reached order " << lad.reached << " of "
                          << max_order
                          << (lad.completed ? " (complete)" : " (obstructed at the next order)")
                          << "\n";
            }
        }
        return 0;
    }

    if (name.empty()) {
        if (doc.deformations.size() == 1)
            name = doc.deformations[0].name;
        else {
            std::cerr << path
                      << (doc.deformations.empty()
                              ? ": no deformation block"
                              : ": several deformation blocks, pick one with --name")
                      << "\n";
            return 1;
        }
    }
    const auto* blk = doc.find_deformation(name);
    if (!blk) {
        std::cerr << path << ": no deformation named '" << name << "'\n";
        return 1;
    }
    auto D = realize_deformation(f, A, *blk);

    if (action == "check") {
        const int N = order < 0 ? D.order() : order;
        auto viols = check_order(D, N);
        if (cfg.records) {
            std::cout << "deform-check algebra=" << h << " name=" << name << " order=" << N
                      << " violations=" << viols.size() << "\n";
            for (const auto& v : viols)
                std::cout << "violation scope=deformation name=" << name << " axiom=" << v.axiom
                          << " order=" << v.order << " x=" << v.x << " y=" << v.y << " z=" << v.z
                          << "\n";
        } else if (viols.empty())
            std::cout << "identities hold through t^" << N << "\n";
        else {
            for (std::size_t i = 0; i < viols.size() && i < 10; ++i)
                std::cout << "axiom " << viols[i].axiom << " fails at t^" << viols[i].order
                          << " on (" << viols[i].x << ", " << viols[i].y << ", " << viols[i].z
                          << ")\n";
            if (viols.size() > 10) std::cout << "... and " << viols.size() - 10 << " more\n";
        }
        return viols.empty() ? 0 : 1;
    }

    if (action == "infinitesimal") {
        auto inf = infinitesimal(D);
        if (cfg.records) {
            std::cout << "deform-infinitesimal algebra=" << h << " name=" << name
                      << " order=" << inf.order
                      << " cocycle=" << (inf.cocycle ? "true" : "false") << "\n";
            static const char* kinds[] = {"lambda", "rho", "mu"};
            for (int op = 0; op < 3; ++op)
                for (int i = 0; i < A.dim; ++i)
                    for (int j = 0; j < A.dim; ++j)
                        for (int k = 0; k < A.dim; ++k) {
                            const auto& c = inf.cochain.basis_value(Op(op), i, j)[std::size_t(k)];
                            if (!f.is_zero(c))
                                std::cout << "term kind=" << kinds[op] << " i=" << i
                                          << " j=" << j << " k=" << k << " c=" << f.to_string(c)
                                          << "\n";
                        }
        } else if (inf.order == 0)
            std::cout << "zero tail: the series is the undeformed algebra\n";
        else {
            std::cout << "first nonzero term at t^" << inf.order << "\n";
            std::cout << "two-cocycle: " << (inf.cocycle ? "yes" : "no") << "\n";
            static const char* kinds[] = {"lambda", "rho", "mu"};
            for (int op = 0; op < 3; ++op)
                for (int i = 0; i < A.dim; ++i)
                    for (int j = 0; j < A.dim; ++j)
                        for (int k = 0; k < A.dim; ++k) {
                            const auto& c = inf.cochain.basis_value(Op(op), i, j)[std::size_t(k)];
                            if (!f.is_zero(c))
                                std::cout << "  " << kinds[op] << " " << i << " " << j << " "
                                          << k << " " << f.to_string(c) << "\n";
                        }
        }
        return 0;
    }

    if (action == "obstruct") {
        auto ob = obstruction(D);
        std::size_t nonzero = 0;
        for (const auto& c : ob)
            if (!f.is_zero(c)) ++nonzero;
        const bool solvable =
            solve(f, coboundary_matrix(A, adjoint_representation(A), 2, budget), ob)
                .has_value();
        if (cfg.records)
            std::cout << "deform-obstruct algebra=" << h << " name=" << name << " at="
                      << D.order() + 1 << " nonzero=" << nonzero
                      << " solvable=" << (solvable ? "true" : "false") << "\n";
        else if (nonzero == 0)
            std::cout << "obstruction at t^" << D.order() + 1 << ": zero\n";
        else
            std::cout << "obstruction at t^" << D.order() + 1 << ": " << nonzero
                      << " nonzero coordinates; solvable: " << (solvable ? "yes" : "no") << "\n";
        return 0;
    }

    // extend: solve the obstruction equation and keep the next term if any
    auto delta = coboundary_matrix(A, adjoint_representation(A), 2, budget);
    auto sol = solve(f, delta, obstruction(D));
    bool extended = false;
    if (sol) extended = extend(D, triple_from_cochain(f, A.dim, A.dim, *sol));
    if (cfg.records)
        std::cout << "deform-extend algebra=" << h << " name=" << name << " to=" << D.order() + 1
                  << " extended=" << (extended ? "true" : "false") << "\n";
    else
        std::cout << "extends to order " << D.order() + 1 << ": " << (extended ? "yes" : "no")
                  << "\n";
    return 0;
}

template <class Fn>
int with_field(const RunConfig& cfg, Fn&& fn) {
    if (cfg.field == "q") {
        QField f;
        return fn(f);
    }
    if (cfg.field.rfind("p:", 0) == 0) {
        PField f(std::stoll(cfg.field.substr(2)));
        return fn(f);
    }
    throw std::invalid_argument("--field must be q or p:<prime>");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (co)homology, enveloping algebras and deformations of "
                 "three-product algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--field", cfg.field, "coefficient field: q or p:<prime>")
        ->capture_default_str();
    app.add_option("--n-max", cfg.n_max, "largest degree any computation may touch")
        ->check(CLI::Range(0, 6))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed recorded with the run")->capture_default_str();
    app.add_option("--budget", cfg.budget, "matrix entry budget")->capture_default_str();
    app.add_flag("--records", cfg.records, "line-oriented key=value output");

    int tree_n = 3;
    auto* sc_trees = app.add_subcommand("trees", "list the trees of one degree");
    sc_trees->add_option("n,--n", tree_n, "tree degree")->required();

    std::string file;
    auto* sc_check = app.add_subcommand("check", "validate every block of a file");
    sc_check->add_option("file", file, "algebra file")->required();

    std::string rep_name = "adjoint";
    int coh_n = 2;
    auto* sc_coh = app.add_subcommand("cohomology", "cochain ranks with module coefficients");
    sc_coh->add_option("file", file, "algebra file")->required();
    sc_coh->add_option("module,--module", rep_name, "representation block name")
        ->capture_default_str();
    sc_coh->add_option("--n", coh_n, "highest degree")->capture_default_str();

    std::string corep_name = "trivial";
    int hom_n = 2;
    auto* sc_hom = app.add_subcommand("homology", "chain ranks with comodule coefficients");
    sc_hom->add_option("file", file, "algebra file")->required();
    sc_hom->add_option("module,--module", corep_name, "corepresentation block name")
        ->capture_default_str();
    sc_hom->add_option("--n", hom_n, "highest degree")->capture_default_str();

    auto* sc_uea = app.add_subcommand("uea", "enveloping algebra dimensions and flags");
    sc_uea->add_option("file", file, "algebra file")->required();

    std::string action, def_name;
    int def_order = -1;
    auto* sc_def = app.add_subcommand("deform", "formal deformation reports");
    sc_def->add_option("file", file, "algebra file")->required();
    sc_def->add_option("action", action, "check | infinitesimal | obstruct | extend | rigidity")
        ->required()
        ->check(CLI::IsMember({"check", "infinitesimal", "obstruct", "extend", "rigidity"}));
    sc_def->add_option("--name", def_name, "deformation block name");
    sc_def->add_option("--order", def_order,
                       "order to check or probe (default: the block's own order)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (sc_trees->parsed()) return cmd_trees(cfg, tree_n);
        return with_field(cfg, [&](const auto& f) {
            if (sc_check->parsed()) return cmd_check(f, cfg, file);
            if (sc_coh->parsed()) return cmd_cohomology(f, cfg, file, rep_name, coh_n);
            if (sc_hom->parsed()) return cmd_homology(f, cfg, file, corep_name, hom_n);
            if (sc_uea->parsed()) return cmd_uea(f, cfg, file);
            return cmd_deform(f, cfg, file, action, def_name, def_order);
        });
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
