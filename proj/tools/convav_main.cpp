// convav: verification runs, explicit-formula comparisons, CSV/JSON emission.
//
// Exit codes: 0 all requested checks passed, 1 a check failed or a numeric
// routine gave up, 2 precondition violation (bad arguments, malformed or
// missing files).

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "convav/arith.hpp"
#include "convav/errors.hpp"
#include "convav/explicit_formula.hpp"
#include "convav/identity.hpp"
#include "convav/report.hpp"
#include "convav/series.hpp"
#include "convav/step_conv.hpp"
#include "convav/weight.hpp"
#include "convav/zeros.hpp"

using namespace convav;
using Cplx = std::complex<double>;

namespace {

struct Common {
    std::string zeros_path;
    int K = 100;
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--zeros", c.zeros_path,
                    "zeros file (default: $CONVAV_ZEROS or data/zeros100.txt)");
    cmd->add_option("--K", c.K, "number of zero ordinates to use");
    cmd->add_option("--out", c.out, "output path (default: stdout)");
}

ZeroTable load_zero_table(const Common& c) {
    if (c.K == 0) return ZeroTable{};
    std::string path = c.zeros_path;
    if (path.empty()) {
        if (const char* env = std::getenv("CONVAV_ZEROS")) path = env;
    }
    if (path.empty()) path = "data/zeros100.txt";
    return load_zeros_file(path).truncated(c.K);
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw invalid_argument("cannot open output file: " + c.out);
    f << text;
}

ArithSeq seq_by_name(const std::string& name, std::int64_t N, int ell) {
    if (name == "lambda") return sieve_von_mangoldt(N);
    if (name == "rl" || name == "powers") return seq_perfect_powers(N, ell);
    if (name.rfind("delta", 0) == 0)
        return seq_kronecker(N, std::stoll(name.substr(5)));
    throw invalid_argument("unknown sequence '" + name + "' (use lambda, rl, deltaN)");
}

std::string csv_of_table(const std::vector<double>& v, const char* header) {
    std::string out = header;
    out += '\n';
    char buf[64];
    for (std::size_t n = 1; n < v.size(); ++n) {
        std::snprintf(buf, sizeof(buf), "%zu,%s\n", n, format_double15(v[n]).c_str());
        out += buf;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted-average / Laplace-convolution identities and explicit formulas"};
    app.require_subcommand(1);

    int exit_code = 0;

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a summation identity");
    verify->require_subcommand(1);

    struct {
        Common common;
        std::int64_t N = 10000;
        double lambda = 50.0, a = 0.0, b = 1.0, tol = 1e-8;
        std::string weight = "cesaro:3";
        int d = 3;
    } vf;

    auto* prop22 = verify->add_subcommand("prop22", "two-sequence identity");
    prop22->add_option("--N", vf.N);
    prop22->add_option("--lambda", vf.lambda);
    prop22->add_option("--a", vf.a);
    prop22->add_option("--b", vf.b);
    prop22->add_option("--weight", vf.weight);
    prop22->add_option("--tol", vf.tol);
    add_common(prop22, vf.common);
    prop22->callback([&] {
        const ArithSeq lam = sieve_von_mangoldt(vf.N);
        const VerificationReport r = verify_prop22(lam, lam, parse_weight(vf.weight), vf.lambda,
                                                   vf.a, vf.b, vf.tol);
        emit(vf.common, to_json(r) + "\n");
        if (!r.pass) exit_code = 1;
    });

    auto* cor24 = verify->add_subcommand("cor24", "d-fold identity");
    cor24->add_option("--N", vf.N);
    cor24->add_option("--d", vf.d);
    cor24->add_option("--lambda", vf.lambda);
    cor24->add_option("--b", vf.b);
    cor24->add_option("--weight", vf.weight);
    cor24->add_option("--tol", vf.tol);
    add_common(cor24, vf.common);
    cor24->callback([&] {
        const ArithSeq lam = sieve_von_mangoldt(vf.N);
        std::vector<const ArithSeq*> seqs(static_cast<std::size_t>(vf.d), &lam);
        const VerificationReport r =
            verify_cor24(seqs, parse_weight(vf.weight), vf.lambda, vf.b, vf.tol);
        emit(vf.common, to_json(r) + "\n");
        if (!r.pass) exit_code = 1;
    });

    // ---- explicit --------------------------------------------------------
    auto* expl = app.add_subcommand("explicit", "explicit-formula evaluations");
    expl->require_subcommand(1);

    struct {
        Common common;
        std::int64_t N = 0;  // 0: large enough for the exact side
        double lambda = 100.0, x = 100.0, k = 2.0, k_im = 0.0, w = 2.0, w_im = 0.0, b = 1.0;
        int ell = 2;
        long n_max = 10000;   // point-evaluation series: cheap per term
        long hl_n_max = 100;  // each term costs an oscillatory integral
        std::string weight = "cesaro:3";
    } ex;

    auto* cesaro = expl->add_subcommand("cesaro", "Cesaro-weight terms and residual");
    cesaro->add_option("--lambda", ex.lambda);
    cesaro->add_option("--k", ex.k);
    cesaro->add_option("--k-im", ex.k_im);
    cesaro->add_option("--N", ex.N);
    add_common(cesaro, ex.common);
    cesaro->callback([&] {
        const ZeroTable zeros = load_zero_table(ex.common);
        const std::int64_t N =
            ex.N > 0 ? ex.N : static_cast<std::int64_t>(std::ceil(ex.lambda));
        const ArithSeq lam = sieve_von_mangoldt(N);
        const std::vector<double> R = rep_counts({&lam, &lam});
        emit(ex.common,
             to_json(cesaro_explicit(ex.lambda, Cplx(ex.k, ex.k_im), zeros, &R)) + "\n");
    });

    auto* mg = expl->add_subcommand("mgoldbach", "Goldbach convolution expansion");
    mg->add_option("--x", ex.x);
    mg->add_option("--N", ex.N);
    add_common(mg, ex.common);
    mg->callback([&] {
        const ZeroTable zeros = load_zero_table(ex.common);
        ExplicitTerms t = m_goldbach(ex.x, zeros);
        const std::int64_t N = ex.N > 0 ? ex.N : static_cast<std::int64_t>(std::ceil(ex.x));
        const ArithSeq lam = sieve_von_mangoldt(N);
        const SummatoryTable psi = summatory(lam);
        t.has_exact = true;
        t.exact = laplace_convolve(psi, psi, ex.x);
        t.residual = t.exact - t.combined.real();
        emit(ex.common, to_json(t) + "\n");
    });

    auto* zl = expl->add_subcommand("zlambda", "zero sum Z_lambda(w)");
    zl->add_option("--lambda", ex.lambda);
    zl->add_option("--w", ex.w);
    zl->add_option("--w-im", ex.w_im);
    add_common(zl, ex.common);
    zl->callback([&] {
        const ZeroTable zeros = load_zero_table(ex.common);
        const ZLambdaResult r = z_lambda(ex.lambda, Cplx(ex.w, ex.w_im), zeros);
        std::string out = "{\"formula\":\"zlambda\",\"lambda\":" + format_double15(ex.lambda) +
                          ",\"w\":{\"re\":" + format_double15(ex.w) +
                          ",\"im\":" + format_double15(ex.w_im) +
                          "},\"value\":{\"re\":" + format_double15(r.value.real()) +
                          ",\"im\":" + format_double15(r.value.imag()) +
                          "},\"last_pair\":" + format_double15(r.last_pair_magnitude) +
                          ",\"growth_envelope_ratio\":" +
                          format_double15(r.growth_envelope_ratio) +
                          ",\"K\":" + std::to_string(zeros.count()) + "}\n";
        emit(ex.common, out);
    });

    auto* psirl = expl->add_subcommand("psirl", "psi * R_ell expansion");
    psirl->add_option("--x", ex.x);
    psirl->add_option("--ell", ex.ell);
    psirl->add_option("--n-max", ex.n_max);
    psirl->add_option("--N", ex.N);
    add_common(psirl, ex.common);
    psirl->callback([&] {
        const ZeroTable zeros = load_zero_table(ex.common);
        const std::int64_t N = ex.N > 0 ? ex.N : static_cast<std::int64_t>(std::ceil(ex.x));
        const ArithSeq lam = sieve_von_mangoldt(N);
        const ArithSeq rl = seq_perfect_powers(N, ex.ell);
        const double exact = kernel_build({&lam, &rl}).eval(ex.x);
        emit(ex.common, to_json(psi_rell_terms(ex.x, ex.ell, zeros, ex.n_max, exact)) + "\n");
    });

    auto* hl = expl->add_subcommand("hlgen", "weighted prime/power average");
    hl->add_option("--lambda", ex.lambda);
    hl->add_option("--b", ex.b);
    hl->add_option("--ell", ex.ell);
    hl->add_option("--weight", ex.weight);
    hl->add_option("--n-max", ex.hl_n_max);
    hl->add_option("--N", ex.N);
    add_common(hl, ex.common);
    hl->callback([&] {
        const ZeroTable zeros = load_zero_table(ex.common);
        const std::int64_t N =
            ex.N > 0 ? ex.N : static_cast<std::int64_t>(std::ceil(ex.lambda * ex.b));
        const ArithSeq lam = sieve_von_mangoldt(N);
        const ArithSeq rl = seq_perfect_powers(N, ex.ell);
        emit(ex.common, to_json(hl_corollary_eval(parse_weight(ex.weight), ex.lambda, ex.b,
                                                  ex.ell, zeros, ex.hl_n_max, &lam, &rl)) +
                            "\n");
    });

    // ---- series ----------------------------------------------------------
    auto* series = app.add_subcommand("series", "power / Dirichlet series checks");
    series->require_subcommand(1);

    struct {
        Common common;
        std::int64_t N = 5000, U = 5000;
        double y = 0.01, s = 3.0, s_im = 0.0;
    } se;

    auto* sexp = series->add_subcommand("exp", "exponential power series");
    sexp->add_option("--y", se.y);
    sexp->add_option("--N", se.N);
    add_common(sexp, se.common);
    sexp->callback([&] {
        const ZeroTable zeros = load_zero_table(se.common);
        const ArithSeq lam = sieve_von_mangoldt(se.N);
        const std::vector<double> R = rep_counts({&lam, &lam});
        emit(se.common, to_json(goldbach_exp_series(se.y, R, lam, zeros)) + "\n");
    });

    auto* sdir = series->add_subcommand("dirichlet", "Dirichlet series Phi(s)");
    sdir->add_option("--s", se.s);
    sdir->add_option("--s-im", se.s_im);
    sdir->add_option("--N", se.N);
    sdir->add_option("--U", se.U);
    add_common(sdir, se.common);
    sdir->callback([&] {
        const ZeroTable zeros = load_zero_table(se.common);
        const std::int64_t len = std::max(se.N, se.U);
        const ArithSeq lam = sieve_von_mangoldt(len);
        const std::vector<double> R = rep_counts({&lam, &lam});
        emit(se.common,
             to_json(dirichlet_phi(Cplx(se.s, se.s_im), R, se.N, se.U, zeros)) + "\n");
    });

    // ---- ratio -----------------------------------------------------------
    auto* ratio = app.add_subcommand("ratio", "asymptotic ratio table (CSV)");
    struct {
        Common common;
        double xmax = 10000.0, step = 1000.0;
        std::int64_t N = 0;
    } ra;
    ratio->add_option("--xmax", ra.xmax);
    ratio->add_option("--step", ra.step);
    ratio->add_option("--N", ra.N);
    add_common(ratio, ra.common);
    ratio->callback([&] {
        if (ra.step <= 0.0 || ra.xmax < ra.step)
            throw invalid_argument("ratio: need 0 < step <= xmax");
        const std::int64_t N = ra.N > 0 ? ra.N : static_cast<std::int64_t>(std::ceil(ra.xmax));
        const ArithSeq lam = sieve_von_mangoldt(N);
        const std::vector<double> R = rep_counts({&lam, &lam});
        std::vector<double> grid;
        for (double x = ra.step; x <= ra.xmax + 1e-9; x += ra.step) grid.push_back(x);
        std::string out = "x,ratio_quadratic,ratio_cubic\n";
        for (const RatioRow& row : asymptotic_ratio(R, grid)) {
            out += format_double15(row.x) + "," + format_double15(row.ratio_quadratic) + "," +
                   format_double15(row.ratio_cubic) + "\n";
        }
        emit(ra.common, out);
    });

    // ---- dump ------------------------------------------------------------
    auto* dump = app.add_subcommand("dump", "CSV dumps of tables");
    dump->require_subcommand(1);
    struct {
        Common common;
        std::int64_t N = 1000;
        int ell = 2;
        std::string g = "lambda", g1 = "lambda", g2 = "lambda";
    } du;

    auto* dseq = dump->add_subcommand("seq", "arithmetical sequence values");
    dseq->add_option("--g", du.g);
    dseq->add_option("--N", du.N);
    dseq->add_option("--ell", du.ell);
    add_common(dseq, du.common);
    dseq->callback([&] {
        emit(du.common, csv_of_table(seq_by_name(du.g, du.N, du.ell).values, "n,value"));
    });

    auto* dconv = dump->add_subcommand("conv", "convolution coefficient table");
    dconv->add_option("--g1", du.g1);
    dconv->add_option("--g2", du.g2);
    dconv->add_option("--N", du.N);
    dconv->add_option("--ell", du.ell);
    add_common(dconv, du.common);
    dconv->callback([&] {
        const ArithSeq a = seq_by_name(du.g1, du.N, du.ell);
        const ArithSeq b = seq_by_name(du.g2, du.N, du.ell);
        emit(du.common, csv_of_table(rep_counts({&a, &b}), "n,G_n"));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const out_of_table& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const numeric_failure& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    } catch (const truncation_insufficient& e) {
        std::cerr << "truncation insufficient: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
