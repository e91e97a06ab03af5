// edsw: command-line workbench for linear Pfaffian exterior differential
// systems (analysis, catalog, tableau queries) and the minimal-submanifold
// representation formulas (mesh generation and verification).
//
// Exit codes: 0 success, 1 no integral manifolds (or failed verification),
// 2 usage, parse, or analysis errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eds/catalog.hpp"
#include "eds/dsl.hpp"
#include "eds/loop.hpp"
#include "eds/weier.hpp"

namespace {

using namespace eds;

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

PfaffianSystem load_system(const std::string& path) {
    auto res = dsl::parse_system(slurp(path));
    if (!res.ok()) {
        for (const auto& d : res.diagnostics)
            std::cerr << path << ":" << d.line << ":" << d.col << ": " << d.message << "\n";
        throw Error("system document has errors");
    }
    return *res.system;
}

// point file: lines of "name = p/q" (# comments allowed)
PointAssignment load_point(const std::string& path, const CoframePtr& decl) {
    PointAssignment pt;
    std::ifstream is(path);
    if (!is) throw Error("cannot open point file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string name, eq, value;
        if (!(ls >> name)) continue;
        if (!(ls >> eq >> value) || eq != "=")
            throw Error(path + ":" + std::to_string(lineno) + ": expected 'name = rational'");
        auto it = decl->scalar_index.find(name);
        if (it == decl->scalar_index.end())
            throw Error(path + ":" + std::to_string(lineno) + ": unknown variable '" + name + "'");
        auto q = parse_rational(value);
        if (!q) throw Error(path + ":" + std::to_string(lineno) + ": bad rational '" + value + "'");
        pt[it->second] = *q;
    }
    return pt;
}

// inline tableau: matrices separated by ';', e.g. "[[1,0],[0,1]];[[0,1],[-1,0]]"
Tableau parse_tableau(const std::string& text) {
    std::vector<QMatrix> mats;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace((unsigned char)text[pos]) || text[pos] == ';'))
            ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw Error("tableau syntax: expected '" + std::string(1, c) + "' at position " +
                        std::to_string(pos));
        ++pos;
    };
    while (skip(), pos < text.size()) {
        expect('[');
        std::vector<QVector> rows;
        while (true) {
            expect('[');
            QVector row;
            while (true) {
                skip();
                std::size_t start = pos;
                while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
                std::string tok = text.substr(start, pos - start);
                while (!tok.empty() && std::isspace((unsigned char)tok.back())) tok.pop_back();
                auto q = parse_rational(tok);
                if (!q) throw Error("tableau syntax: bad rational '" + tok + "'");
                row.push_back(*q);
                if (text[pos] == ']') {
                    ++pos;
                    break;
                }
                ++pos;  // ','
            }
            rows.push_back(std::move(row));
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(']');
        int s = static_cast<int>(rows.size());
        int n = static_cast<int>(rows[0].size());
        QMatrix m(s, n);
        for (int a = 0; a < s; ++a) {
            if (static_cast<int>(rows[a].size()) != n) throw Error("tableau rows differ in length");
            for (int i = 0; i < n; ++i) m.at(a, i) = rows[a][i];
        }
        mats.push_back(std::move(m));
    }
    if (mats.empty()) throw Error("empty tableau");
    for (const auto& m : mats)
        if (m.rows != mats[0].rows || m.cols != mats[0].cols)
            throw Error("tableau matrices differ in shape");
    return Tableau::from_span(mats[0].cols, mats[0].rows, mats);
}

Tableau tableau_from_args(const std::string& inline_spec, const std::string& file,
                          const std::string& point_file) {
    if (!inline_spec.empty()) return parse_tableau(inline_spec);
    if (file.empty()) throw Error("give a system FILE or --tableau");
    PfaffianSystem sys = load_system(file);
    PointAssignment pt = point_file.empty()
                             ? require_full_point(sys)
                             : require_full_point(sys, load_point(point_file, sys.coframe));
    return extract_tableau_torsion(sys, pt).tableau;
}

void emit(const std::string& text, const std::string& json_path) {
    if (json_path.empty())
        std::cout << text;
    else {
        std::ofstream os(json_path);
        if (!os) throw Error("cannot open '" + json_path + "' for writing");
        os << text;
    }
}

weier::GridSpec parse_grid2(const std::string& spec) {
    weier::GridSpec g;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d,%lf:%lf:%d", &g.re0, &g.re1, &g.nre, &g.im0, &g.im1,
                    &g.nim) != 6)
        throw Error("grid spec must be re0:re1:n,im0:im1:m");
    return g;
}

int run_analyze_report(const AnalysisReport& rep, const std::string& json_path) {
    emit(report_to_json(rep), json_path);
    if (!json_path.empty()) {
        std::cout << "status: " << status_name(rep.status);
        if (rep.generality) std::cout << "; solutions depend on " << rep.generality->phrase();
        std::cout << "\n";
    }
    return rep.status == Status::no_integral_manifolds ? 1 : 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exterior differential systems workbench"};
    app.require_subcommand(1);

    // --- analyze ---
    auto* analyze_cmd = app.add_subcommand("analyze", "run the full analysis on a system file");
    std::string an_file, an_point, an_json;
    std::uint64_t an_seed = 1;
    int an_maxp = 3;
    analyze_cmd->add_option("file", an_file, "system document")->required();
    analyze_cmd->add_option("--point", an_point, "point file (name = p/q per line)");
    analyze_cmd->add_option("--seed", an_seed, "random seed for flags and fiber sampling");
    analyze_cmd->add_option("--max-prolong", an_maxp, "prolongation cap");
    analyze_cmd->add_option("--json", an_json, "write the JSON report to this path");

    // --- catalog ---
    auto* cat_cmd = app.add_subcommand("catalog", "materialize and analyze a catalog system");
    std::string cat_name, cat_params, cat_a, cat_b, cat_curv = "generic", cat_json;
    std::uint64_t cat_seed = 1;
    int cat_maxp = 3;
    bool cat_print = false;
    cat_cmd->add_option("name", cat_name,
                        "frobenius | contact | cauchy-riemann | submanifold | minimal-surface | "
                        "isometric-embedding")
        ->required();
    cat_cmd->add_option("--params", cat_params, "comma-separated integers, e.g. 2,1");
    cat_cmd->add_option("--A", cat_a, "frobenius: A(x,y,u)");
    cat_cmd->add_option("--B", cat_b, "frobenius: B(x,y,u)");
    cat_cmd->add_option("--curvature", cat_curv, "isometric-embedding: flat | generic");
    cat_cmd->add_option("--seed", cat_seed, "random seed");
    cat_cmd->add_option("--max-prolong", cat_maxp, "prolongation cap");
    cat_cmd->add_option("--json", cat_json, "write the JSON report to this path");
    cat_cmd->add_flag("--print", cat_print, "print the system document instead of analyzing");

    // --- tableau queries ---
    std::string tb_spec, tb_file, tb_point;
    std::uint64_t tb_seed = 1;
    int tb_trials = 5;
    auto add_tableau_opts = [&](CLI::App* cmd) {
        cmd->add_option("file", tb_file, "system document");
        cmd->add_option("--tableau", tb_spec, "inline tableau [[..],[..]];[[..],[..]]");
        cmd->add_option("--point", tb_point, "point file");
        cmd->add_option("--seed", tb_seed, "random seed");
        cmd->add_option("--trials", tb_trials, "generic flag trials");
    };
    auto* chars_cmd = app.add_subcommand("characters", "Cartan characters of a tableau");
    add_tableau_opts(chars_cmd);
    auto* prolong_cmd = app.add_subcommand("prolong", "prolongation dimension and Cartan test");
    add_tableau_opts(prolong_cmd);
    auto* msubset_cmd = app.add_subcommand("msubset", "traceless-prolongation criterion");
    add_tableau_opts(msubset_cmd);

    // --- torsion / cauchy ---
    auto* torsion_cmd = app.add_subcommand("torsion", "torsion class of a system at a point");
    std::string to_file, to_point;
    torsion_cmd->add_option("file", to_file, "system document")->required();
    torsion_cmd->add_option("--point", to_point, "point file");
    auto* cauchy_cmd = app.add_subcommand("cauchy", "Cauchy characteristic space at a point");
    std::string ca_file, ca_point;
    cauchy_cmd->add_option("file", ca_file, "system document")->required();
    cauchy_cmd->add_option("--point", ca_point, "point file");

    // --- weierstrass ---
    auto* w_cmd = app.add_subcommand("weierstrass", "representation-formula meshes");
    w_cmd->require_subcommand(1);
    auto* wc = w_cmd->add_subcommand("classical", "f, g surface data in the complex variable w");
    std::string wc_f = "1", wc_g = "w", wc_grid = "-1:1:10,-1:1:10", wc_out, wc_format = "obj";
    std::string wc_w0 = "0,0";
    double wc_verify = 0;
    wc->add_option("--f", wc_f, "holomorphic f(w)");
    wc->add_option("--g", wc_g, "meromorphic g(w)");
    wc->add_option("--w0", wc_w0, "base point re,im");
    wc->add_option("--grid", wc_grid, "re0:re1:n,im0:im1:m");
    wc->add_option("--out", wc_out, "output path");
    wc->add_option("--format", wc_format, "obj | csv");
    wc->add_option("--verify", wc_verify, "verify isothermality and |H| below this tolerance");
    auto* ws = w_cmd->add_subcommand("so3", "orbit threefold from h(z)");
    std::string ws_h = "0", ws_grid = "1:2:3,-1:1:7,-1:1:7", ws_out, ws_format = "csv";
    double ws_verify = 0;
    ws->set_help_flag("--help", "print help");  // frees -h for the h(z) option
    ws->add_option("--h", ws_h, "holomorphic h(z)");
    ws->add_option("--grid", ws_grid, "t0:t1:k,re0:re1:n,im0:im1:m");
    ws->add_option("--out", ws_out, "output path");
    ws->add_option("--format", ws_format, "csv | obj (obj is 3D-only and rejected)");
    ws->add_option("--verify", ws_verify, "verify |trace_g II| below this tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*analyze_cmd) {
        PfaffianSystem sys = load_system(an_file);
        AnalyzeOptions opts;
        opts.seed = an_seed;
        opts.max_prolongations = an_maxp;
        if (!an_point.empty()) opts.point = load_point(an_point, sys.coframe);
        return run_analyze_report(analyze(sys, opts), an_json);
    }

    if (*cat_cmd) {
        catalog::CatalogRequest req;
        req.name = cat_name;
        req.expr_a = cat_a;
        req.expr_b = cat_b;
        req.curvature = cat_curv == "flat" ? "flat" : "generic";
        if (!cat_params.empty()) {
            std::istringstream ps(cat_params);
            std::string tok;
            while (std::getline(ps, tok, ',')) req.params.push_back(std::stol(tok));
        }
        PfaffianSystem sys = catalog::build_from_request(req);
        if (cat_print) {
            std::cout << dsl::print_system(dsl::document_from_system(sys));
            return 0;
        }
        AnalyzeOptions opts;
        opts.seed = cat_seed;
        opts.max_prolongations = cat_maxp;
        return run_analyze_report(analyze(sys, opts), cat_json);
    }

    if (*chars_cmd || *prolong_cmd || *msubset_cmd) {
        Tableau A = tableau_from_args(tb_spec, tb_file, tb_point);
        if (*msubset_cmd) {
            bool ok = msubset_check(A);
            std::cout << "m-subset criterion (traceless prolongation): " << (ok ? "pass" : "fail")
                      << "\n";
            return 0;
        }
        auto res = cartan_test(A, tb_trials, tb_seed);
        std::cout << "dim A = " << res.dim_tableau << "\ncharacters =";
        for (int sj : res.chars.s) std::cout << " " << sj;
        std::cout << "\ncartan bound = " << res.bound << "\ndim A^(1) = " << res.dim_prolongation
                  << "\ninvolutive = " << (res.involutive ? "yes" : "no") << "\n";
        return 0;
    }

    if (*torsion_cmd) {
        PfaffianSystem sys = load_system(to_file);
        PointAssignment pt = to_point.empty()
                                 ? require_full_point(sys)
                                 : require_full_point(sys, load_point(to_point, sys.coframe));
        auto ex = extract_tableau_torsion(sys, pt);
        auto tc = torsion_class(ex);
        std::cout << "torsion class at the point: " << (tc.zero_at_point ? "zero" : "nonzero")
                  << "\n";
        bool any = false;
        for (const auto& q : tc.residuals) {
            if (q.is_zero()) continue;
            std::cout << "residual: " << q.to_string(sys.coframe->scalars) << " = 0\n";
            any = true;
        }
        if (!any) std::cout << "residuals vanish identically\n";
        return 0;
    }

    if (*cauchy_cmd) {
        PfaffianSystem sys = load_system(ca_file);
        PointAssignment pt = ca_point.empty()
                                 ? require_full_point(sys)
                                 : require_full_point(sys, load_point(ca_point, sys.coframe));
        auto cc = cauchy_characteristics(sys, pt);
        std::cout << "cauchy characteristic dimension = " << cc.dimension << "\n";
        for (const auto& v : cc.basis) {
            std::cout << "  dual vector:";
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k] != 0) std::cout << " " << to_string(v[k]) << "*" << sys.coframe->names[k];
            std::cout << "\n";
        }
        return 0;
    }

    if (*wc) {
        auto f = holo::parse_holomorphic(wc_f, "w");
        auto g = holo::parse_holomorphic(wc_g, "w");
        double re, im;
        if (std::sscanf(wc_w0.c_str(), "%lf,%lf", &re, &im) != 2)
            throw Error("--w0 must be re,im");
        weier::GridSpec grid = parse_grid2(wc_grid);
        auto mesh = weier::classical_weierstrass(f, g, {re, im}, grid);
        if (!wc_out.empty()) {
            if (wc_format == "obj")
                weier::export_obj(mesh, wc_out);
            else if (wc_format == "csv")
                weier::export_csv(mesh, wc_out);
            else
                throw Error("format must be obj or csv");
            std::cout << "wrote " << mesh.size() << " vertices to " << wc_out << "\n";
        }
        if (wc_verify > 0) {
            Rng rng(7);
            double worst_dot = 0;
            for (int k = 0; k < 100; ++k) {
                weier::Complex z(grid.re0 + (grid.re1 - grid.re0) * (rng.range(1, 99) / 100.0),
                                 grid.im0 + (grid.im1 - grid.im0) * (rng.range(1, 99) / 100.0));
                auto phi = weier::classical_integrand(f, g, z);
                weier::Complex dot = phi[0] * phi[0] + phi[1] * phi[1] + phi[2] * phi[2];
                double scale =
                    std::max(1.0, std::norm(phi[0]) + std::norm(phi[1]) + std::norm(phi[2]));
                worst_dot = std::max(worst_dot, std::abs(dot) / scale);
            }
            auto param = weier::classical_param(f, g, {re, im});
            double worst_h = 0;
            for (int k = 0; k < 5; ++k) {
                std::vector<double> at = {
                    grid.re0 + (grid.re1 - grid.re0) * (rng.range(20, 80) / 100.0),
                    grid.im0 + (grid.im1 - grid.im0) * (rng.range(20, 80) / 100.0)};
                worst_h = std::max(worst_h, std::abs(weier::mean_curvature_graph(param, at, 1e-4)));
            }
            bool pass = worst_dot < 1e-12 && worst_h < wc_verify;
            std::cout << "verify: max |Phi.Phi| = " << worst_dot << ", max |H| = " << worst_h
                      << " -> " << (pass ? "all-pass" : "FAIL") << "\n";
            return pass ? 0 : 1;
        }
        return 0;
    }

    if (*ws) {
        auto h = holo::parse_holomorphic(ws_h, "z");
        weier::TGrid tg;
        weier::GridSpec zg;
        if (std::sscanf(ws_grid.c_str(), "%lf:%lf:%d,%lf:%lf:%d,%lf:%lf:%d", &tg.t0, &tg.t1,
                        &tg.nt, &zg.re0, &zg.re1, &zg.nre, &zg.im0, &zg.im1, &zg.nim) != 9)
            throw Error("grid spec must be t0:t1:k,re0:re1:n,im0:im1:m");
        auto mesh = weier::so3_orbit_threefold(h, tg, zg);
        if (!ws_out.empty()) {
            if (ws_format == "csv")
                weier::export_csv(mesh, ws_out);
            else if (ws_format == "obj")
                weier::export_obj(mesh, ws_out);  // rejected for 5D meshes
            else
                throw Error("format must be obj or csv");
            std::cout << "wrote " << mesh.size() << " points to " << ws_out << "\n";
        }
        if (ws_verify > 0) {
            auto param = weier::so3_param(h);
            Rng rng(11);
            double worst = 0;
            for (int k = 0; k < 5; ++k) {
                std::vector<double> at = {
                    tg.t0 + (tg.t1 - tg.t0) * (rng.range(20, 80) / 100.0),
                    zg.re0 + (zg.re1 - zg.re0) * (rng.range(20, 80) / 100.0),
                    zg.im0 + (zg.im1 - zg.im0) * (rng.range(20, 80) / 100.0)};
                worst = std::max(worst, weier::trace_II_norm(param, at, 1e-4));
            }
            bool pass = worst < ws_verify;
            std::cout << "verify: max |trace_g II| = " << worst << " -> "
                      << (pass ? "all-pass" : "FAIL") << "\n";
            return pass ? 0 : 1;
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
