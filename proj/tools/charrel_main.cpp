// charrel: exact character relations of symmetric groups on the command line.
//
// Subcommands: table, conn, tpoly, groebner, staircase, octagonal, cover,
// families, verify-all. Exit codes: 0 success, 1 input/domain error,
// 2 resource guard, 3 falsification alarm.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "charrel/char_table.hpp"
#include "charrel/connection.hpp"
#include "charrel/defect_zero.hpp"
#include "charrel/errors.hpp"
#include "charrel/groebner.hpp"
#include "charrel/json_io.hpp"
#include "charrel/tpoly.hpp"
#include "charrel/zero_cover.hpp"

using namespace charrel;

namespace {

// Lists separate partitions by ',' or ';'; parts inside one partition use
// '.' or '^' exponents, so "2^2,4,2.3" is {(2^2), (4), (3,2)}.
std::vector<Partition> parse_partition_list(const std::string& text) {
    std::vector<Partition> out;
    size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        size_t sep = text.find_first_of(",;", pos);
        std::string tok = text.substr(pos, sep == std::string::npos ? sep : sep - pos);
        if (!tok.empty()) out.push_back(Partition::parse(tok));
        if (sep == std::string::npos) break;
        pos = sep + 1;
    }
    return out;
}

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        size_t sep = text.find(',', pos);
        std::string tok = text.substr(pos, sep == std::string::npos ? sep : sep - pos);
        if (!tok.empty()) out.push_back(std::stol(tok));
        if (sep == std::string::npos) break;
        pos = sep + 1;
    }
    return out;
}

struct App {
    Config cfg;
    bool json = false;

    TableStore& store() {
        static TableStore s{cfg};
        return s;
    }
    ConnectionEngine& conn() {
        static ConnectionEngine c{store()};
        return c;
    }
    TPolyBuilder& builder() {
        static TPolyBuilder b{conn()};
        return b;
    }
    DefectZeroEngine& defect() {
        static DefectZeroEngine d{conn()};
        return d;
    }
};

void run_table(App& app, int n, const std::string& shape_text) {
    if (n >= 16) std::cerr << "building/loading the character table of S_" << n << "...\n";
    const CharTable& t = app.store().table(n);
    if (!shape_text.empty()) {
        YoungDiagram shape = YoungDiagram::parse(shape_text);
        int si = t.shape_index(shape);
        if (app.json) {
            json row = json::array();
            for (size_t j = 0; j < t.classes().size(); ++j)
                row.push_back(json::array({t.classes()[j].str(), t.value(si, static_cast<int>(j))}));
            std::cout << json{{"n", n}, {"shape", shape.str()}, {"values", row}}.dump() << "\n";
            return;
        }
        std::cout << "chi_(" << shape.str() << ") of S_" << n << ":\n";
        for (size_t j = 0; j < t.classes().size(); ++j)
            std::cout << "  " << t.classes()[j].str() << " -> " << t.value(si, static_cast<int>(j))
                      << "\n";
        return;
    }
    if (app.json) {
        json shapes = json::array(), classes = json::array(), values = json::array();
        for (auto& s : t.shapes()) shapes.push_back(s.str());
        for (auto& c : t.classes()) classes.push_back(c.str());
        for (size_t i = 0; i < t.shapes().size(); ++i) {
            json row = json::array();
            for (size_t j = 0; j < t.classes().size(); ++j)
                row.push_back(t.value(static_cast<int>(i), static_cast<int>(j)));
            values.push_back(row);
        }
        std::cout << json{{"n", n}, {"shapes", shapes}, {"classes", classes}, {"values", values}}.dump()
                  << "\n";
        return;
    }
    std::cout << "character table of S_" << n << " (" << t.shapes().size() << " irreducibles)\n";
    std::cout << "classes:";
    for (auto& c : t.classes()) std::cout << " " << c.str();
    std::cout << "\n";
    for (size_t i = 0; i < t.shapes().size(); ++i) {
        std::cout << "(" << t.shapes()[i].str() << ")";
        for (size_t j = 0; j < t.classes().size(); ++j)
            std::cout << " " << t.value(static_cast<int>(i), static_cast<int>(j));
        std::cout << "\n";
    }
}

void run_conn(App& app, const std::string& x, const std::string& y, const std::string& target,
              int n, bool poly) {
    Partition px = Partition::parse(x), py = Partition::parse(y), pt = Partition::parse(target);
    if (poly) {
        UniPoly p = app.conn().count_poly(px, py, pt);
        if (app.json)
            std::cout << json{{"x", px.str()}, {"y", py.str()}, {"target", pt.str()},
                              {"poly", to_json(p)}, {"text", p.str()}}
                             .dump()
                      << "\n";
        else
            std::cout << p.str() << "\n";
        return;
    }
    if (n <= 0) throw input_error("conn: give --n or --poly");
    BigInt count;
    if (class_size(px, n) <= to_bigint(app.cfg.enumeration_cap))
        count = app.conn().count_brute(px, py, pt, n);
    else
        count = app.conn().count_char_formula(px, py, pt, n);
    if (app.json)
        std::cout << json{{"x", px.str()}, {"y", py.str()}, {"target", pt.str()}, {"n", n},
                          {"count", count.get_str()}}
                         .dump()
                  << "\n";
    else
        std::cout << count.get_str() << "\n";
}

void run_tpoly(App& app, const std::string& lambda_text, bool verify, int verify_n, int max_norm) {
    if (verify) {
        int checked = 0;
        for (int n = 2; n <= verify_n; ++n) {
            const CharTable& t = app.store().table(n);
            for (auto& lambda : classes_with_norm_at_most(max_norm)) {
                if (lambda.supp() > n) continue;
                const TPolynomial& tp = app.builder().t_poly(lambda);
                for (size_t i = 0; i < t.shapes().size(); ++i) {
                    std::map<Partition, BigRat> assign;
                    for (int r = 2; r <= lambda.norm() + 1; ++r)
                        if (r <= n)
                            assign[Partition({r})] =
                                ratio(t, static_cast<int>(i), t.class_index(Partition({r})));
                        else
                            assign[Partition({r})] = BigRat(0);
                    BigRat got = tp.expr.eval(n, assign);
                    BigRat want = ratio(t, static_cast<int>(i), t.class_index(lambda));
                    if (got != want)
                        throw falsification_alarm("T_" + lambda.str() + " failed at n=" +
                                                  std::to_string(n) + ", shape " +
                                                  t.shapes()[i].str());
                    ++checked;
                }
            }
            std::cerr << "verified n=" << n << "\n";
        }
        std::cout << "tpoly verify: " << checked << " evaluations, all exact\n";
        return;
    }
    Partition lambda = Partition::parse(lambda_text);
    if (lambda.norm() < 1) throw input_error("tpoly: norm must be >= 1");
    if (lambda.is_cycle()) {
        if (app.json) {
            std::cout << json{{"lambda", lambda.str()},
                              {"display", "t_" + lambda.str()},
                              {"poly", to_json(RelationPoly::variable(lambda))}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "T_" << lambda.str() << " = t_" << lambda.str() << "\n";
        }
        return;
    }
    RelationPoly display = app.builder().display_form(lambda);
    if (app.json) {
        std::cout << json{{"lambda", lambda.str()},
                          {"display", display.str()},
                          {"poly", to_json(display)},
                          {"solved", to_json(app.builder().t_poly(lambda).expr)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "T_" << lambda.str() << " = " << display.str() << "\n";
    }
}

void run_groebner(App& app, int cap, const std::string& vanish) {
    std::vector<Partition> C = parse_partition_list(vanish);
    AnalysisReport report = analyze_zero_set(C, cap, app.builder());
    if (app.json) {
        std::cout << to_json(report).dump() << "\n";
        return;
    }
    std::cout << "zero-set ideal, cap " << cap << ", vanishing:";
    for (auto& v : report.vanishing) std::cout << " " << v.str();
    std::cout << "\nreduced basis (" << report.basis.size() << " elements):\n";
    for (auto& g : report.basis) std::cout << "  " << g.str() << "\n";
    for (auto& u : report.univariate) {
        std::cout << "univariate in t_" << u.poly.variable.str() << ": " << u.poly.str() << "\n";
        for (auto& f : u.factors) {
            std::cout << "  factor (mult " << f.multiplicity << "): " << f.factor.str() << " -> ";
            switch (f.kind) {
                case FactorFinding::Kind::forced_zero:
                    std::cout << "forced zero\n";
                    break;
                case FactorFinding::Kind::linear_forcing:
                    std::cout << "linear forcing rho = " << f.value.str()
                              << ", omega = " << f.omega_value.str() << "\n";
                    break;
                case FactorFinding::Kind::square_condition:
                    std::cout << "square condition: omega^2 = " << f.square_quantity.str() << "\n";
                    break;
                case FactorFinding::Kind::curve_model: {
                    std::cout << "curve model in (n, omega): ";
                    for (int e = static_cast<int>(f.curve.size()) - 1; e >= 0; --e) {
                        if (f.curve[static_cast<size_t>(e)].is_zero()) continue;
                        std::cout << "y^" << e << "*[" << f.curve[static_cast<size_t>(e)].str()
                                  << "] ";
                    }
                    std::cout << "\n";
                    break;
                }
            }
        }
    }
}

void run_staircase(App& app, const std::string& lambda_text, int eval_k) {
    Partition lambda = Partition::parse(lambda_text);
    const UniPoly& p = app.defect().staircase_p(lambda);
    if (app.json) {
        json j{{"lambda", lambda.str()}, {"P", to_json(p)}, {"text", p.str("x")}};
        if (eval_k > 0) j["ratio_at_k"] = app.defect().staircase_ratio(eval_k, lambda).get_str();
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "P_" << lambda.str() << " = " << p.str("x") << "\n";
    if (eval_k > 0) {
        long n = static_cast<long>(eval_k) * (eval_k + 1) / 2;
        std::cout << "rho_" << eval_k << lambda.str() << " (n=" << n
                  << ") = " << app.defect().staircase_ratio(eval_k, lambda).get_str() << "\n";
    }
}

void run_octagonal(App& app, const std::string& lambda_text, int eval_n) {
    Partition lambda = Partition::parse(lambda_text);
    const UniPoly& p = app.defect().octagonal_p(lambda);
    if (app.json) {
        json j{{"lambda", lambda.str()}, {"P", to_json(p)}, {"text", p.str("x")}};
        if (eval_n > 0) j["ratio_at_n"] = app.defect().octagonal_ratio(eval_n, lambda).get_str();
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "P~_" << lambda.str() << " = " << p.str("x") << "\n";
    if (eval_n > 0)
        std::cout << "rho_tau(" << eval_n
                  << ") = " << app.defect().octagonal_ratio(eval_n, lambda).get_str() << "\n";
}

void run_cover(App& app, int n, int cap, int limit) {
    if (n >= 16) std::cerr << "building/loading the character table of S_" << n << "...\n";
    const CharTable& t = app.store().table(n);
    CoverResult res = cap > 0 ? z_k(t, cap, limit) : min_cover(t, {}, limit);
    if (app.json)
        std::cout << to_json(res).dump() << "\n";
    else
        std::cout << res.str() << "\n";
}

void run_families(App& app, const std::string& family, const FamilyParams& params,
                  int min_scale) {
    FamilyEval ev = family_ratio(family_from_name(family), params, min_scale);
    if (app.json) {
        std::cout << to_json(ev).dump() << "\n";
        return;
    }
    std::cout << "shape (" << ev.shape.str() << "), n=" << ev.n << ", class " << ev.cls.str()
              << "\n";
    std::cout << "omega closed  = " << ev.closed.get_str() << "\n";
    std::cout << "omega oracle  = " << ev.oracle.get_str() << " (equal)\n";
}

void run_verify_all(App& app, bool quick) {
    int max_n = quick ? 8 : 10;
    auto check = [](const std::string& name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) throw falsification_alarm(name);
    };
    // Tables validate themselves (orthogonality for n <= 10) on build.
    for (int n = 1; n <= max_n; ++n) app.store().table(n);
    check("tables n<=" + std::to_string(max_n) + " built and validated", true);

    int norm_cap = quick ? 3 : 4;
    for (int n = 4; n <= max_n; ++n) {
        const CharTable& t = app.store().table(n);
        for (auto& lambda : classes_with_norm_at_most(norm_cap)) {
            if (lambda.supp() > n) continue;
            const TPolynomial& tp = app.builder().t_poly(lambda);
            for (size_t i = 0; i < t.shapes().size(); ++i) {
                std::map<Partition, BigRat> assign;
                for (int r = 2; r <= lambda.norm() + 1; ++r)
                    assign[Partition({r})] =
                        r <= n ? ratio(t, static_cast<int>(i), t.class_index(Partition({r})))
                               : BigRat(0);
                if (tp.expr.eval(n, assign) != ratio(t, static_cast<int>(i), t.class_index(lambda)))
                    throw falsification_alarm("T soundness failed at n=" + std::to_string(n));
            }
        }
    }
    check("T_lambda soundness, norm<=" + std::to_string(norm_cap) + ", n<=" + std::to_string(max_n),
          true);

    for (int k = 2; k <= (quick ? 3 : 4); ++k) {
        const CharTable& t = app.store().table(k * (k + 1) / 2);
        YoungDiagram shape = DefectZeroEngine::staircase_shape(k);
        for (auto& cls : t.classes()) {
            if (cls.norm() < 1) continue;
            BigRat lhs = app.defect().staircase_ratio(k, cls);
            if (lhs != ratio(t, shape, cls))
                throw falsification_alarm("staircase ratio mismatch at k=" + std::to_string(k));
        }
    }
    check("staircase rationals match the table", true);

    for (int n = 6; n <= max_n; ++n) ratio_lower_bounds(app.store().table(n));
    check("ratio lower bounds, 6<=n<=" + std::to_string(max_n), true);

    for (int n = 4; n <= max_n; ++n) forbidden_set_scan(app.store().table(n));
    check("forbidden-set scan raises no alarm, n<=" + std::to_string(max_n), true);

    CoverResult z4 = min_cover(app.store().table(4), {}, 3);
    check("S_4 has no zero cover", z4.status == CoverResult::Status::no_cover);
    CoverResult z5 = min_cover(app.store().table(5), {}, 3);
    check("Z(5)=3", z5.status == CoverResult::Status::found && z5.value == 3);
    CoverResult z6 = min_cover(app.store().table(6), {}, 3);
    check("Z(6)=3", z6.status == CoverResult::Status::found && z6.value == 3);
    CoverResult z7 = min_cover(app.store().table(7), {}, 3);
    check("S_7 has no zero cover at all", z7.status == CoverResult::Status::no_cover);

    std::cout << "verify-all: all checks passed\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"exact relations between values and zeros of S_n irreducible characters"};
    cli.require_subcommand(1);

    App app;
    const char* env_cache = std::getenv("CHARREL_CACHE");
    app.cfg.cache_dir = env_cache ? env_cache : ".charrel-cache";
    cli.add_option("--cache", app.cfg.cache_dir, "table cache directory ('' disables)");
    cli.add_option("--threads", app.cfg.thread_count, "worker threads (0 = auto)");
    cli.add_option("--max-n", app.cfg.max_table_n, "largest n a table may be built for");
    cli.add_option("--enum-cap", app.cfg.enumeration_cap, "class enumeration cap");
    cli.add_flag("--json", app.json, "machine-readable output");

    auto* t_cmd = cli.add_subcommand("table", "character table or one row of it");
    int t_n = 0;
    std::string t_shape;
    t_cmd->add_option("--n", t_n, "symmetric group degree")->required();
    t_cmd->add_option("--shape", t_shape, "one shape, e.g. 5,2,2");

    auto* c_cmd = cli.add_subcommand("conn", "connection coefficients");
    std::string c_x, c_y, c_target;
    int c_n = 0;
    bool c_poly = false;
    c_cmd->add_option("--x", c_x)->required();
    c_cmd->add_option("--y", c_y)->required();
    c_cmd->add_option("--target", c_target)->required();
    c_cmd->add_option("--n", c_n, "concrete group degree");
    c_cmd->add_flag("--poly", c_poly, "symbolic count polynomial in N");

    auto* tp_cmd = cli.add_subcommand("tpoly", "relation polynomial T_lambda");
    std::string tp_lambda;
    bool tp_verify = false;
    int tp_n = 12, tp_max_norm = 6;
    tp_cmd->add_option("--lambda", tp_lambda, "class, e.g. 2,2 or 3^2");
    tp_cmd->add_flag("--verify", tp_verify, "oracle soundness sweep");
    tp_cmd->add_option("--n", tp_n, "verify: largest n");
    tp_cmd->add_option("--max-norm", tp_max_norm, "verify: largest norm");

    auto* g_cmd = cli.add_subcommand("groebner", "zero-set ideal analysis");
    int g_cap = 4;
    std::string g_vanish;
    g_cmd->add_option("--cap", g_cap, "norm cap of the ring");
    g_cmd->add_option("--vanish", g_vanish, "classes forced to vanish, e.g. \"2^2,4,2^3\"")
        ->required();

    auto* s_cmd = cli.add_subcommand("staircase", "2-defect-zero character polynomial");
    std::string s_lambda;
    int s_eval_k = 0;
    s_cmd->add_option("--lambda", s_lambda)->required();
    s_cmd->add_option("--eval-k", s_eval_k, "also evaluate at n = k(k+1)/2");

    auto* o_cmd = cli.add_subcommand("octagonal", "3-defect-zero character polynomial");
    std::string o_lambda;
    int o_eval_n = 0;
    o_cmd->add_option("--lambda", o_lambda)->required();
    o_cmd->add_option("--eval-n", o_eval_n, "also evaluate at a generalized octagonal n");

    auto* cov_cmd = cli.add_subcommand("cover", "minimal zero covers Z(n), Z_k(n)");
    int cov_n = 0, cov_cap = 0, cov_limit = 3;
    cov_cmd->add_option("--n", cov_n)->required();
    cov_cmd->add_option("--cap", cov_cap, "restrict targets to norm <= cap");
    cov_cmd->add_option("--limit", cov_limit, "largest cover size searched (<= 4)");

    auto* f_cmd = cli.add_subcommand("families", "closed character-value families");
    std::string f_name, f_alist, f_blist, f_clist;
    FamilyParams f_params;
    f_cmd->add_option("--family", f_name, "two_hooks_2|two_hooks_3|two_rows|two_rows_cols")
        ->required();
    f_cmd->add_option("--a", f_params.a);
    f_cmd->add_option("--b", f_params.b);
    f_cmd->add_option("--c", f_params.c);
    f_cmd->add_option("--d", f_params.d);
    f_cmd->add_option("--e", f_params.e);
    f_cmd->add_option("--k", f_params.k);
    int f_min_scale = 10;
    f_cmd->add_option("--min-scale", f_min_scale, "required scale of a (hooks) or k (rows)");
    f_cmd->add_option("--alist", f_alist, "comma list for row families");
    f_cmd->add_option("--blist", f_blist, "comma list for row families");
    f_cmd->add_option("--clist", f_clist, "comma list for two_rows_cols");

    auto* v_cmd = cli.add_subcommand("verify-all", "run the built-in invariant suite");
    bool v_quick = false;
    v_cmd->add_flag("--quick", v_quick, "smaller sweep (n <= 8)");

    CLI11_PARSE(cli, argc, argv);

    try {
        if (*t_cmd) run_table(app, t_n, t_shape);
        if (*c_cmd) run_conn(app, c_x, c_y, c_target, c_n, c_poly);
        if (*tp_cmd) run_tpoly(app, tp_lambda, tp_verify, tp_n, tp_max_norm);
        if (*g_cmd) run_groebner(app, g_cap, g_vanish);
        if (*s_cmd) run_staircase(app, s_lambda, s_eval_k);
        if (*o_cmd) run_octagonal(app, o_lambda, o_eval_n);
        if (*cov_cmd) run_cover(app, cov_n, cov_cap, cov_limit);
        if (*f_cmd) {
            f_params.av = parse_longs(f_alist);
            f_params.bv = parse_longs(f_blist);
            f_params.cv = parse_longs(f_clist);
            run_families(app, f_name, f_params, f_min_scale);
        }
        if (*v_cmd) run_verify_all(app, v_quick);
    } catch (const falsification_alarm& e) {
        std::cerr << "falsification alarm: " << e.what() << "\n";
        return 3;
    } catch (const resource_guard_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
