// schottky-dim: Hausdorff dimension of complex Schottky limit sets.
//
// Subcommands:
//   check      validate a configuration file (isometric-sphere disjointness)
//   dim        dimension estimate for a configuration file
//   sweep      dimension curve of a built-in family over a theta grid (CSV)
//   limit-set  export the word-tree point cloud (CSV)
//
// Exit codes: 0 success, 1 geometric invalidity, 2 usage/parse errors,
// 3 enumeration cap exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "schottky/config_io.hpp"
#include "schottky/spectral.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

std::string g12(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string word_label(const schottky::Word& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += '-';
        s += std::to_string(w[i]);
    }
    return s;
}

// Writes either to --out or to stdout.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw schottky::parse_error("cannot write " + path);
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void print_report(const schottky::ValidityReport& report)
{
    for (const schottky::PairSeparation& p : report.pairs)
        std::cout << "pair (" << p.i << "," << p.j << "): distance = " << g12(p.distance)
                  << ", radius sum = " << g12(p.radius_sum) << ", margin = " << g12(p.margin)
                  << "\n";
    std::cout << "min margin = " << g12(report.min_margin) << "\n";
    std::cout << (report.valid ? "valid" : "invalid") << "\n";
}

int run_check(const std::string& config_path)
{
    const schottky::NamedConfig named = schottky::load_config(config_path);
    const schottky::ValidityReport report = *named.config.validity;
    print_report(report);
    return report.valid ? exit_ok : exit_invalid;
}

int run_dim(const std::string& config_path, int depth, double tol,
    schottky::Convention convention, bool as_json)
{
    const schottky::NamedConfig named = schottky::load_config(config_path);
    if (!named.config.validity->valid) {
        std::cerr << "error: configuration is not a valid Schottky configuration "
                     "(min margin = "
                  << g12(named.config.validity->min_margin) << ")\n";
        return exit_invalid;
    }

    const schottky::TransitionMatrix T = schottky::transition_matrix(named.config, depth, convention);
    const schottky::AlphaSolve solve = schottky::solve_alpha(T, 1.0, tol);
    const char* convention_name = convention == schottky::Convention::det ? "det" : "cygan";
    const double residual = std::abs(solve.rho_at_alpha - 1.0);

    if (as_json) {
        std::cout << "{\n"
                  << "  \"alpha\": " << g12(solve.alpha) << ",\n"
                  << "  \"depth\": " << depth << ",\n"
                  << "  \"convention\": \"" << convention_name << "\",\n"
                  << "  \"matrix_dim\": " << T.dim() << ",\n"
                  << "  \"iterations\": " << solve.iterations << ",\n"
                  << "  \"rho_residual\": " << g12(residual) << ",\n"
                  << "  \"converged\": " << (solve.converged ? "true" : "false") << "\n"
                  << "}\n";
    } else {
        std::cout << "alpha = " << g12(solve.alpha) << "\n"
                  << "depth = " << depth << "\n"
                  << "convention = " << convention_name << "\n"
                  << "matrix_dim = " << T.dim() << "\n"
                  << "iterations = " << solve.iterations << "\n"
                  << "rho_residual = " << g12(residual) << "\n";
    }
    return solve.converged ? exit_ok : exit_invalid;
}

int run_sweep(schottky::Family family, double theta_min, double theta_max, int steps,
    int depth, double tol, schottky::Convention convention, const std::string& out_path)
{
    const auto [lo, hi] = schottky::theta_interval(family);
    if (!(theta_min > lo && theta_max < hi && theta_min < theta_max)) {
        std::cerr << "error: theta range [" << g12(theta_min) << ", " << g12(theta_max)
                  << "] must lie inside the legal interval (" << g12(lo) << ", " << g12(hi)
                  << ") of family '"
                  << (family == schottky::Family::symmetric ? "symmetric" : "rcircle") << "'\n";
        return exit_usage;
    }

    const std::vector<schottky::SweepRow> rows
        = schottky::theta_sweep(family, theta_min, theta_max, steps, depth, tol, convention);

    OutputTarget out(out_path);
    out.stream() << "theta,alpha,residual,matrix_dim,converged\n";
    for (const schottky::SweepRow& row : rows)
        out.stream() << g12(row.theta) << ',' << g12(row.alpha) << ',' << g12(row.residual)
                     << ',' << row.matrix_dim << ',' << (row.converged ? "true" : "false")
                     << "\n";
    return exit_ok;
}

int run_limit_set(const std::string& config_path, int depth, const std::string& out_path)
{
    const schottky::NamedConfig named = schottky::load_config(config_path);
    if (!named.config.validity->valid) {
        std::cerr << "error: configuration is not a valid Schottky configuration\n";
        return exit_invalid;
    }

    const std::vector<schottky::WordNode> nodes = schottky::enumerate_words(named.config, depth);
    OutputTarget out(out_path);
    out.stream() << "word,zeta_re,zeta_im,v\n";
    for (const schottky::WordNode& node : nodes)
        out.stream() << word_label(node.word) << ',' << g12(node.tagpoint.zeta().real()) << ','
                     << g12(node.tagpoint.zeta().imag()) << ',' << g12(node.tagpoint.v())
                     << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "Hausdorff dimension of limit sets of complex Schottky groups" };
    app.require_subcommand(1);

    const std::map<std::string, schottky::Convention> convention_names {
        { "det", schottky::Convention::det }, { "cygan", schottky::Convention::cygan }
    };
    const std::map<std::string, schottky::Family> family_names {
        { "symmetric", schottky::Family::symmetric }, { "rcircle", schottky::Family::rcircle }
    };

    std::string config_path;
    std::string out_path;
    int depth = 4;
    double tol = 1e-8;
    bool as_json = false;
    schottky::Convention convention = schottky::Convention::det;
    schottky::Family family = schottky::Family::symmetric;
    double theta_min = 0.0;
    double theta_max = 0.0;
    int steps = 0;

    CLI::App* check = app.add_subcommand("check", "Validate a configuration file");
    check->add_option("config", config_path, "configuration file (JSON)")->required();

    CLI::App* dim = app.add_subcommand("dim", "Compute the dimension estimate");
    dim->add_option("config", config_path, "configuration file (JSON)")->required();
    dim->add_option("--depth", depth, "refinement depth")->check(CLI::PositiveNumber);
    dim->add_option("--tol", tol, "tolerance on |rho - 1|")->check(CLI::PositiveNumber);
    dim->add_option("--convention", convention, "entry convention")
        ->transform(CLI::CheckedTransformer(convention_names));
    dim->add_flag("--json", as_json, "emit a JSON report");

    CLI::App* sweep = app.add_subcommand("sweep", "Dimension curve of a built-in family (CSV)");
    sweep->add_option("--family", family, "built-in family")
        ->transform(CLI::CheckedTransformer(family_names))
        ->required();
    sweep->add_option("--theta-min", theta_min, "grid start")->required();
    sweep->add_option("--theta-max", theta_max, "grid end")->required();
    sweep->add_option("--steps", steps, "grid size")->check(CLI::Range(2, 1000000))->required();
    sweep->add_option("--depth", depth, "refinement depth")->check(CLI::PositiveNumber);
    sweep->add_option("--tol", tol, "tolerance on |rho - 1|")->check(CLI::PositiveNumber);
    sweep->add_option("--convention", convention, "entry convention")
        ->transform(CLI::CheckedTransformer(convention_names));
    sweep->add_option("--out", out_path, "output CSV path (default: stdout)");

    CLI::App* limit_set = app.add_subcommand("limit-set", "Export the word-tree point cloud (CSV)");
    limit_set->add_option("config", config_path, "configuration file (JSON)")->required();
    limit_set->add_option("--depth", depth, "word length")->check(CLI::PositiveNumber);
    limit_set->add_option("--out", out_path, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (check->parsed())
            return run_check(config_path);
        if (dim->parsed())
            return run_dim(config_path, depth, tol, convention, as_json);
        if (sweep->parsed())
            return run_sweep(family, theta_min, theta_max, steps, depth, tol, convention, out_path);
        if (limit_set->parsed())
            return run_limit_set(config_path, depth, out_path);
    } catch (const schottky::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const schottky::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const schottky::configuration_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_usage;
}
