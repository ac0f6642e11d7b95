// latsec: weight enumerators, theta series, and secrecy gains of Construction
// A lattices from binary formally self-dual codes.
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "latsec/catalog.hpp"
#include "latsec/gf2code.hpp"
#include "latsec/gleason.hpp"
#include "latsec/secrecy.hpp"
#include "latsec/tailbiting.hpp"
#include "latsec/theta.hpp"

namespace {

using namespace latsec;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::string fmt(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

BinaryCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_code(in);
}

WeightEnumerator load_enum_file(const std::string& path, int length) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_enumerator(in, length);
}

struct Source {
    std::string code_file;
    std::string enum_file;
    std::string catalog_name;
    int length = -1;  // for enumerator files whose top coefficient is zero
    int k = -1;

    void add_options(CLI::App* cmd, bool with_k = true) {
        auto* a = cmd->add_option("--code", code_file, "generator matrix file");
        auto* b = cmd->add_option("--enum", enum_file, "weight enumerator file");
        auto* c = cmd->add_option("--catalog", catalog_name, "catalog entry name");
        a->excludes(b)->excludes(c);
        b->excludes(c);
        cmd->add_option("--n", length, "code length for --enum (needed when A_n = 0)");
        if (with_k) cmd->add_option("--k", k, "code dimension for --enum (default n/2)");
    }

    // enumerator plus dimension, from whichever source was given
    std::pair<WeightEnumerator, int> resolve() const {
        if (!catalog_name.empty()) {
            const CatalogEntry* e = find_entry(catalog_name);
            if (!e)
                throw std::invalid_argument("unknown catalog entry: " + catalog_name);
            return {e->we, e->k};
        }
        if (!code_file.empty()) {
            const BinaryCode code = load_code_file(code_file);
            return {weight_enumerator(code), code.dimension()};
        }
        if (!enum_file.empty()) {
            WeightEnumerator we = load_enum_file(enum_file, length);
            return {we, k >= 0 ? k : we.n / 2};
        }
        throw ParseError("one of --code, --enum, --catalog is required");
    }
};

void print_gleason_block(std::ostream& out, const WeightEnumerator& we,
                         bool csv = false) {
    const GleasonDecomposition dec = gleason_coefficients(we);
    const Rational cond = symmetry_minimum_condition(dec);
    if (csv) {
        for (std::size_t r = 0; r < dec.coeffs.size(); ++r)
            out << "gleason_a_" << r << ',' << fmt(dec.coeffs[r]) << '\n';
        out << "condition," << fmt(cond) << '\n';
        out << "condition_positive," << (cond > 0 ? "true" : "false") << '\n';
        return;
    }
    out << "gleason a_r =";
    for (const auto& a : dec.coeffs) out << ' ' << fmt(a);
    out << '\n';
    out << "condition sum_r r*a_r*(3/4)^(r-1) = " << fmt(cond) << '\n';
    out << "condition verdict: "
        << (cond > 0 ? "positive (gain attained at tau=1)" : "not positive")
        << '\n';
}

int cmd_enumerate(const std::string& path) {
    const BinaryCode code = load_code_file(path);
    const WeightEnumerator we = weight_enumerator(code);
    write_enumerator(std::cout, we);
    const auto d = min_distance(we);
    std::cerr << "n=" << code.length() << " k=" << code.dimension()
              << " d=" << (d ? std::to_string(*d) : "inf")
              << " class=" << to_string(classify(code)) << '\n';
    return 0;
}

int cmd_macwilliams(const std::string& path, int k, int length) {
    const WeightEnumerator we = load_enum_file(path, length);
    write_enumerator(std::cout, macwilliams(we, k));
    return 0;
}

int cmd_classify(const std::string& path) {
    std::cout << to_string(classify(load_code_file(path))) << '\n';
    return 0;
}

int cmd_secrecy(const Source& src, bool weak_only, double tolerance,
                bool csv) {
    const auto [we, k] = src.resolve();
    const char sep = csv ? ',' : ' ';
    if (csv) std::cout << "field,value\n";
    if (weak_only) {
        const double weak = secrecy_function(we, k, 1.0);
        std::cout << "xi_at_tau1" << sep << fmt(weak) << '\n';
        std::cout << "symmetry_deviation" << sep << fmt(verify_symmetry(we, k))
                  << '\n';
        return 0;
    }
    const SecrecyReport rep = secrecy_gain(we);
    std::cout << "n" << sep << rep.n << '\n'
              << "xi" << sep << fmt(rep.xi) << '\n'
              << "weak_gain" << sep << fmt(rep.weak_gain) << '\n'
              << "t_star" << sep << fmt(rep.t_star) << '\n'
              << "tau_star" << sep << fmt(rep.tau_star) << '\n'
              << "conjecture_verified" << sep
              << (rep.conjecture_verified ? "true" : "false") << '\n'
              << "method" << sep << to_string(rep.method) << '\n';
    const double dev = verify_symmetry(we, k);
    std::cout << "symmetry_deviation" << sep << fmt(dev);
    if (!csv) std::cout << (dev < tolerance ? " (ok)" : " (above tolerance)");
    std::cout << '\n';
    if (we.even_weights_only()) print_gleason_block(std::cout, we, csv);
    return 0;
}

int cmd_gleason(const Source& src) {
    const auto [we, k] = src.resolve();
    print_gleason_block(std::cout, we);
    return 0;
}

int cmd_table() {
    std::cout << "n,kind,d,xi_computed,xi_paper,match\n";
    bool all = true;
    for (const auto& e : load_catalog()) {
        const SecrecyReport rep = secrecy_gain(e.we);
        const bool match = matches_printed(rep.xi, e.printed_gain);
        all = all && match;
        std::cout << e.n << ',' << to_string(e.kind) << ',' << e.d << ','
                  << fmt(rep.xi) << ',' << e.printed_gain << ','
                  << (match ? "true" : "false") << '\n';
    }
    return all ? 0 : 1;
}

int cmd_plot_data(const Source& src, double tau_min, double tau_max, int points) {
    if (!(tau_min >= 1e-3 && tau_min < tau_max && tau_max <= 1e3) || points < 1)
        throw ParseError("tau range must satisfy 1e-3 <= tau_min < tau_max <= 1e3");
    const auto [we, k] = src.resolve();
    std::cout << "tau,t,xi_inverse,xi\n";
    const double l0 = std::log10(tau_min), l1 = std::log10(tau_max);
    for (int i = 0; i < points; ++i) {
        const double tau =
            points == 1 ? tau_min
                        : std::pow(10.0, l0 + (l1 - l0) * i / (points - 1));
        const double xi = secrecy_function(we, k, tau);
        std::cout << fmt(tau) << ',' << fmt(t_of_tau(tau)) << ','
                  << fmt(1.0 / xi) << ',' << fmt(xi) << '\n';
    }
    return 0;
}

int cmd_tailbite(const std::string& conv, int k, double tolerance) {
    const auto comma = conv.find(',');
    if (comma == std::string::npos)
        throw ParseError("--conv expects g1_octal,g2_octal");
    const ConvolutionalSpec spec = ConvolutionalSpec::from_octal(
        conv.substr(0, comma), conv.substr(comma + 1));
    const BinaryCode gen = tailbiting_generator(spec, k);
    std::cout << "generator (" << 2 * k << " columns):\n";
    for (auto row : gen.rows()) {
        for (int j = 0; j < 2 * k; ++j)
            std::cout << ((row >> j) & 1 ? '1' : '0');
        std::cout << '\n';
    }
    const WeightEnumerator we = trellis_enumerator(spec, k);
    std::cout << "enumerator:\n";
    write_enumerator(std::cout, we);
    std::cout << "isodual " << (isodual_check(spec, k) ? "true" : "false")
              << '\n';
    const SecrecyReport rep = secrecy_gain(we);
    std::cout << "xi " << fmt(rep.xi) << '\n'
              << "weak_gain " << fmt(rep.weak_gain) << '\n'
              << "t_star " << fmt(rep.t_star) << '\n'
              << "tau_star " << fmt(rep.tau_star) << '\n'
              << "conjecture_verified "
              << (rep.conjecture_verified ? "true" : "false") << '\n';
    const double dev = verify_symmetry(we, k);
    std::cout << "symmetry_deviation " << fmt(dev)
              << (dev < tolerance ? " (ok)" : " (above tolerance)") << '\n';
    return 0;
}

int cmd_validate_catalog(bool csv) {
    const CatalogValidation report = validate_catalog();
    if (csv) {
        std::cout << "name,sum,macwilliams,distance,kind,ok\n";
        for (const auto& row : report.rows)
            std::cout << row.name << ',' << row.sum_ok << ',' << row.fsd_ok
                      << ',' << row.dist_ok << ',' << row.kind_ok << ','
                      << (row.ok() ? "true" : "false") << '\n';
        return report.all_ok() ? 0 : 1;
    }
    for (const auto& row : report.rows) {
        std::cout << row.name << ' ' << (row.ok() ? "pass" : "FAIL");
        if (!row.ok()) {
            if (!row.sum_ok) std::cout << " sum";
            if (!row.fsd_ok) std::cout << " macwilliams";
            if (!row.dist_ok) std::cout << " distance";
            if (!row.kind_ok) std::cout << " kind";
        }
        std::cout << '\n';
    }
    return report.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "secrecy gains of Construction A lattices from formally self-dual "
        "binary codes"};
    app.require_subcommand(1);
    std::string format = "text";
    double tolerance = 1e-9;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--tolerance", tolerance,
                   "numeric tolerance for reported agreement checks");

    std::string code_path, enum_path, conv;
    int k = -1, length = -1, points = 101;
    double tau_min = 0.1, tau_max = 10.0;
    bool weak_only = false;
    Source secrecy_src, gleason_src, plot_src;

    auto* c_enum = app.add_subcommand("enumerate", "weight enumerator of a code file");
    c_enum->add_option("code_file", code_path)->required();

    auto* c_mw = app.add_subcommand("macwilliams", "dual enumerator via the MacWilliams transform");
    c_mw->add_option("enum_file", enum_path)->required();
    c_mw->add_option("--k", k, "dimension of the primal code")->required();
    c_mw->add_option("--n", length, "code length (needed when A_n = 0)");

    auto* c_cls = app.add_subcommand("classify", "duality class of a code file");
    c_cls->add_option("code_file", code_path)->required();

    auto* c_sec = app.add_subcommand("secrecy", "secrecy gain report");
    secrecy_src.add_options(c_sec);
    c_sec->add_flag("--weak-only", weak_only,
                    "report Xi(1) only (general, possibly non-fsd codes)");

    auto* c_gle = app.add_subcommand("gleason", "Gleason decomposition of an even fsd enumerator");
    gleason_src.add_options(c_gle, false);

    auto* c_tab = app.add_subcommand("table", "recompute the whole catalog as CSV");

    auto* c_plot = app.add_subcommand("plot-data", "secrecy-function curve as CSV");
    plot_src.add_options(c_plot);
    c_plot->add_option("--tau-min", tau_min);
    c_plot->add_option("--tau-max", tau_max);
    c_plot->add_option("--points", points);

    auto* c_tb = app.add_subcommand("tailbite", "tailbiting code from a rate-1/2 spec");
    c_tb->add_option("--conv", conv, "g1_octal,g2_octal")->required();
    c_tb->add_option("--k", k, "number of information bits")->required();

    auto* c_val = app.add_subcommand("validate-catalog", "re-derive catalog invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (c_enum->parsed()) return cmd_enumerate(code_path);
        if (c_mw->parsed()) return cmd_macwilliams(enum_path, k, length);
        if (c_cls->parsed()) return cmd_classify(code_path);
        if (c_sec->parsed()) return cmd_secrecy(secrecy_src, weak_only, tolerance, format == "csv");
        if (c_gle->parsed()) return cmd_gleason(gleason_src);
        if (c_tab->parsed()) return cmd_table();
        if (c_plot->parsed()) return cmd_plot_data(plot_src, tau_min, tau_max, points);
        if (c_tb->parsed()) return cmd_tailbite(conv, k, tolerance);
        if (c_val->parsed()) return cmd_validate_catalog(format == "csv");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
