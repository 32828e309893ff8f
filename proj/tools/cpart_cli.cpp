// Command-line front end for the weighted prime-partition toolkit.
//
// Exit codes: 0 success, 2 usage error, 3 numeric-contract violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpart/arcs.hpp"
#include "cpart/asymptotics.hpp"
#include "cpart/constants.hpp"
#include "cpart/genfun.hpp"
#include "cpart/ntheory.hpp"
#include "cpart/partitions.hpp"
#include "cpart/ppm.hpp"
#include "cpart/progressions.hpp"

namespace {

using namespace cpart;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << text;
}

WeightKind parse_kind(const std::string& k) {
    if (k == "pr") return WeightKind::PrimeTuple;
    if (k == "lambda") return WeightKind::VonMangoldtPower;
    throw CLI::ValidationError("--kind", "must be 'pr' or 'lambda'");
}

// Weight table long enough for the saddle machinery at target n: retry with a
// longer table whenever the tail-certification rejects the tolerance.
struct SaddleContext {
    WeightTable table;
    std::unique_ptr<PhiSeries> phi;
};

SaddleContext make_context(WeightKind kind, int r, std::size_t n) {
    std::size_t n_max = std::max<std::size_t>(4096, 8 * n);
    for (;;) {
        SaddleContext ctx;
        ctx.table = dirichlet_power(kind, r, n_max);
        ctx.phi = std::make_unique<PhiSeries>(ctx.table);
        try {
            solve_saddle(*ctx.phi, std::max<std::size_t>(n, 2));
            return ctx;
        } catch (const std::runtime_error&) {
            if (n_max > (std::size_t(1) << 26)) throw;
            n_max *= 2;
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"weighted prime-partition asymptotics toolkit"};
    app.require_subcommand(1);

    std::string kind_str = "pr", format = "csv", out_path;
    int r = 1, res = 512;
    std::size_t n = 0, t = 0;
    double X = 0.0, A = 2.0, alpha = 0.0;
    std::uint64_t q = 1;
    std::int64_t a = 1;
    std::uint64_t ell = 0;
    int prime_bound = 50;
    std::uint64_t seed = 1;
    double radius = 0.98;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--kind", kind_str, "weight kind: pr | lambda");
        sub->add_option("--r", r, "convolution order r")->check(CLI::PositiveNumber);
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--format", format, "output format: csv | json");
        sub->add_option("--seed", seed, "seed for deterministic sampling");
    };

    auto* c_sieve = app.add_subcommand("sieve", "multiplicative function tables");
    add_common(c_sieve);
    c_sieve->add_option("--n", n, "table size")->required();

    auto* c_count = app.add_subcommand("count", "weighted partition counts G(n)");
    add_common(c_count);
    c_count->add_option("--n", n, "max n")->required();

    auto* c_predict = app.add_subcommand("predict", "main-term predictor");
    add_common(c_predict);
    c_predict->add_option("--n", n, "target n")->required();

    auto* c_compare = app.add_subcommand("compare", "exact vs saddle vs main term");
    add_common(c_compare);
    std::vector<std::size_t> n_list;
    c_compare->add_option("--n", n_list, "target n values")->required();

    auto* c_saddle = app.add_subcommand("saddle", "saddle-point solve");
    add_common(c_saddle);
    c_saddle->add_option("--n", n, "target n")->required();

    auto* c_estimate = app.add_subcommand("estimate", "saddle-point estimate");
    add_common(c_estimate);
    c_estimate->add_option("--n", n, "target n")->required();

    auto* c_quad = app.add_subcommand("quadrature", "circle quadrature (n <= 500)");
    add_common(c_quad);
    c_quad->add_option("--n", n, "target n")->required();

    auto* c_arcs = app.add_subcommand("arcs", "Farey arc partition");
    add_common(c_arcs);
    c_arcs->add_option("--X", X, "radius parameter")->required();
    c_arcs->add_option("--A", A, "arc exponent");

    auto* c_expsum = app.add_subcommand("expsum", "exponential sum S(alpha, X)");
    add_common(c_expsum);
    c_expsum->add_option("--alpha", alpha, "phase")->required();
    c_expsum->add_option("--X", X, "summation length")->required();

    auto* c_scan = app.add_subcommand("scan-bounds", "exp-sum / bound ratio scan");
    add_common(c_scan);
    std::vector<double> X_list{1000.0, 10000.0};
    c_scan->add_option("--X", X_list, "X values");
    c_scan->add_option("--q", q, "max modulus");

    auto* c_prog = app.add_subcommand("progression", "progression count");
    add_common(c_prog);
    c_prog->add_option("--t", t, "upper limit")->required();
    c_prog->add_option("--q", q, "modulus")->required();
    c_prog->add_option("--ell", ell, "residue class");

    auto* c_usum = app.add_subcommand("usum", "Laplace-type residue sum");
    add_common(c_usum);
    c_usum->add_option("--alpha", alpha, "gamma (real, > 0)")->required();
    c_usum->add_option("--t", t, "table length")->required();
    c_usum->add_option("--q", q, "modulus");
    c_usum->add_option("--ell", ell, "residue class");

    auto* c_const = app.add_subcommand("constants", "constants table as JSON");
    add_common(c_const);

    auto* c_plot = app.add_subcommand("domainplot", "domain-coloring PPM image");
    add_common(c_plot);
    c_plot->add_option("--res", res, "image resolution")->check(CLI::Range(1, 4096));
    c_plot->add_option("--prime-bound", prime_bound, "largest prime in products");
    c_plot->add_option("--alpha", radius, "disc radius in (0,1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    WeightKind kind = parse_kind(kind_str);
    std::ostringstream os;

    if (*c_sieve) {
        MultiplicativeTables tbl = build_tables(n);
        os << "n,is_prime,mobius,totient,mangoldt\n";
        for (std::size_t i = 1; i <= n; ++i)
            os << i << ',' << (tbl.is_prime[i] ? 1 : 0) << ','
               << static_cast<int>(tbl.mobius[i]) << ',' << tbl.totient[i] << ','
               << fmt(tbl.mangoldt[i]) << '\n';
        emit(os.str(), out_path);
    } else if (*c_count) {
        WeightTable w = dirichlet_power(kind, r, n);
        PartitionSeries ps = euler_transform(w, n);
        os << "n,value,log_value\n";
        for (std::size_t i = 0; i <= n; ++i) {
            os << i << ',';
            if (ps.has_exact() && i < ps.coeffs_exact.size())
                os << ps.coeffs_exact[i].get_str();
            os << ',' << fmt(ps.log_coeff(i)) << '\n';
        }
        emit(os.str(), out_path);
    } else if (*c_predict) {
        ConstantsTable c = build_constants();
        Prediction p = predict_log(kind, r, static_cast<double>(n), c);
        os << "n,log_value\n" << n << ',' << fmt(p.log_value) << '\n';
        emit(os.str(), out_path);
    } else if (*c_compare) {
        ConstantsTable c = build_constants();
        os << "n,exact_log,saddle_est,main_term,exact_over_saddle,exact_over_main\n";
        for (std::size_t ni : n_list) {
            SaddleContext ctx = make_context(kind, r, ni);
            WeightTable wexact = dirichlet_power(kind, r, ni);
            PartitionSeries ps = euler_transform(wexact, ni, 0);
            double exact_log = ps.log_coeff(ni);
            double est = saddle_estimate(*ctx.phi, ni).log_value;
            double main = predict_log(kind, r, static_cast<double>(ni), c).log_value;
            os << ni << ',' << fmt(exact_log) << ',' << fmt(est) << ',' << fmt(main)
               << ',' << fmt(exact_log / est) << ',' << fmt(exact_log / main) << '\n';
        }
        emit(os.str(), out_path);
    } else if (*c_saddle) {
        SaddleContext ctx = make_context(kind, r, n);
        SaddleSolution s = solve_saddle(*ctx.phi, n);
        os << "n,X,rho,residual\n"
           << n << ',' << fmt(s.X) << ',' << fmt(s.rho) << ',' << fmt(s.residual)
           << '\n';
        emit(os.str(), out_path);
    } else if (*c_estimate) {
        SaddleContext ctx = make_context(kind, r, n);
        Prediction p = saddle_estimate(*ctx.phi, n);
        os << "n,log_value\n" << n << ',' << fmt(p.log_value) << '\n';
        emit(os.str(), out_path);
    } else if (*c_quad) {
        SaddleContext ctx = make_context(kind, r, std::max<std::size_t>(n, 2));
        Prediction p = circle_quadrature(*ctx.phi, n);
        os << "n,log_value,cancellation\n"
           << n << ',' << fmt(p.log_value) << ',' << (p.cancellation ? 1 : 0) << '\n';
        emit(os.str(), out_path);
    } else if (*c_arcs) {
        ArcPartition part = build_arcs(X, A);
        if (format == "json") {
            os << "{\"X\": " << fmt(part.X) << ", \"A\": " << fmt(part.A)
               << ", \"Q\": " << fmt(part.Q) << ", \"count\": " << part.arcs.size()
               << ", \"overlapping\": " << (part.overlapping ? "true" : "false")
               << "}\n";
        } else {
            os << "q,a,center,half_width\n";
            for (const Arc& arc : part.arcs)
                os << arc.q << ',' << arc.a << ',' << fmt(arc.center) << ','
                   << fmt(arc.half_width) << '\n';
        }
        emit(os.str(), out_path);
    } else if (*c_expsum) {
        std::size_t Xn = static_cast<std::size_t>(X);
        WeightTable w = dirichlet_power(kind, r, Xn);
        std::complex<double> s = exp_sum(w, alpha, Xn);
        os << "alpha,X,re,im\n"
           << fmt(alpha) << ',' << Xn << ',' << fmt(s.real()) << ',' << fmt(s.imag())
           << '\n';
        emit(os.str(), out_path);
    } else if (*c_scan) {
        double x_top = 0.0;
        for (double x : X_list) x_top = std::max(x_top, x);
        WeightTable w = dirichlet_power(kind, r, static_cast<std::size_t>(x_top));
        std::vector<std::uint32_t> q_list;
        for (std::uint32_t qi = 1; qi <= q; ++qi) q_list.push_back(qi);
        ScanReport rep = bound_ratio_scan(w, r, X_list, q_list, kind);
        os << "{\"max_ratio\": " << fmt(rep.max_ratio)
           << ", \"argmax\": {\"X\": " << fmt(rep.argmax_X)
           << ", \"q\": " << rep.argmax_q << ", \"a\": " << rep.argmax_a
           << "}, \"samples\": " << rep.samples << "}\n";
        emit(os.str(), out_path);
    } else if (*c_prog) {
        WeightTable w = dirichlet_power(kind, r, t);
        ProgressionCount pc = count_progression(w, t, static_cast<std::uint32_t>(q),
                                                static_cast<std::uint32_t>(ell));
        os << "r,t,q,ell,count,leading,ratio\n"
           << r << ',' << t << ',' << q << ',' << ell << ',' << fmt(pc.count) << ','
           << fmt(pc.leading) << ',' << fmt(pc.ratio) << '\n';
        emit(os.str(), out_path);
    } else if (*c_usum) {
        WeightTable w = dirichlet_power(kind, r, t);
        USum u = u_sum(w, {alpha, 0.0}, static_cast<std::uint32_t>(q),
                       static_cast<std::uint32_t>(ell));
        os << "gamma,q,ell,re,im,leading_re,leading_im,tail_bound\n"
           << fmt(alpha) << ',' << q << ',' << ell << ',' << fmt(u.value.real()) << ','
           << fmt(u.value.imag()) << ',' << fmt(u.leading.real()) << ','
           << fmt(u.leading.imag()) << ',' << fmt(u.tail_bound) << '\n';
        emit(os.str(), out_path);
    } else if (*c_const) {
        emit(build_constants().to_json() + "\n", out_path);
    } else if (*c_plot) {
        if (out_path.empty()) throw CLI::ValidationError("--out", "required for domainplot");
        DomainGrid grid = domain_grid(r, prime_bound, res, radius);
        render_domain_plot(grid, out_path);
        std::cerr << "wrote " << out_path
                  << " (convert to PNG with e.g. `magick " << out_path << " out.png`)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
