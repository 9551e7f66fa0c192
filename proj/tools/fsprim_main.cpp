// fsprim command line: dimension tables, Theta, decompositions, filtrations
// and the verification suites.
//
// Exit status: 0 success, 1 a check failed, 2 an output file could not be
// written, 3 an internal error, 4 invalid arguments.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fsprim/finsetcat.hpp"
#include "fsprim/fsfilt.hpp"
#include "fsprim/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace fsprim;

constexpr int kExitFail = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUsage = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Relative output paths are resolved under FSPRIM_OUTPUT_DIR when it is set.
std::filesystem::path output_path(const std::string& path)
{
    std::filesystem::path p(path);
    if (const char* dir = std::getenv("FSPRIM_OUTPUT_DIR"); dir && *dir && p.is_relative()) return std::filesystem::path(dir) / p;
    return p;
}

void write_file(const std::string& path, const std::string& content)
{
    const auto p = output_path(path);
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot open " + p.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw IoError("write to " + p.string() + " failed");
}

std::string matrix_text(const RatMatrix& m)
{
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + m(r, c).to_string();
        s += "\n";
    }
    return s;
}

struct Options {
    int max_size = 6;
    std::string json_path;
    std::string csv_path;
    bool timings = false;
    int a = 0;
    int b = 0;
    std::string flavor = "fs";
    std::string check = "all";
};

void require_sizes(const Options& o)
{
    if (o.a < 0 || o.b < 0) throw std::invalid_argument("sizes must be nonnegative");
}

int run_dims(const Options& o)
{
    const std::string csv = dims_csv(o.max_size);
    std::cout << csv;
    if (!o.csv_path.empty()) write_file(o.csv_path, csv);
    if (!o.json_path.empty()) {
        json rows = json::array();
        for (int b = 0; b <= o.max_size; ++b)
            for (int a = 0; a <= b; ++a) {
                json levels = json::array();
                for (int t = 0; t <= b - a; ++t) levels.push_back(filtration_level(b, a, t).dimension());
                rows.push_back({{"b", b}, {"a", a}, {"dim_fs", hom_dimension(HomClass::surjection, b, a)},
                                {"dim_fi", hom_dimension(HomClass::injection, a, b)}, {"levels", levels}});
            }
        write_file(o.json_path, rows.dump(2) + "\n");
    }
    return 0;
}

int run_theta(const Options& o)
{
    require_sizes(o);
    if (o.a > o.b) throw std::invalid_argument("theta needs a <= b");
    const auto cols = theta_columns(o.a, o.b);
    const auto rows = static_cast<std::size_t>(hom_dimension(HomClass::injection, o.a, o.b));
    const auto ker = theta_kernel(o.a, o.b);
    const BiSchurClass coker = coker_theta_decompose(o.a, o.b);
    std::cout << "Theta_" << o.a << "(" << o.b << "): " << rows << " x " << cols.size() << ", rank " << ker.rank
              << ", kernel dim " << ker.kernel->dimension() << "\n";
    if (rows * cols.size() <= 4096) std::cout << matrix_text(theta_matrix(o.a, o.b));
    std::cout << "coker " << coker.to_string() << "\n";
    if (!o.json_path.empty()) {
        // Column f lists the rows (indices into FI(a, b)) holding a 1.
        json j = {{"a", o.a}, {"b", o.b}, {"rows", rows}, {"cols", cols.size()}, {"rank", ker.rank},
                  {"kernel_dim", ker.kernel->dimension()}, {"coker", to_json(coker)}, {"columns", cols}};
        write_file(o.json_path, j.dump(2) + "\n");
    }
    return 0;
}

int run_decompose(const Options& o)
{
    require_sizes(o);
    BiSchurClass cls;
    std::string label;
    if (o.flavor == "fs") {
        // kFS(b -> a): lambda for S_a, mu for S_b.
        cls = fs_decompose(o.b, o.a);
        label = "kFS(" + std::to_string(o.b) + "," + std::to_string(o.a) + ")";
    } else {
        // kFI(a -> b): lambda for S_b (target), mu for S_a (source).
        const HomModule fi(HomClass::injection, o.a, o.b);
        cls = bidecompose(fi.bimodule());
        label = "kFI(" + std::to_string(o.a) + "," + std::to_string(o.b) + ")";
    }
    std::cout << label << " " << cls.to_string() << "\n";
    if (!o.json_path.empty())
        write_file(o.json_path, json{{"flavor", o.flavor}, {"b", o.b}, {"a", o.a}, {"class", to_json(cls)}}.dump(2) + "\n");
    return 0;
}

int run_filtration(const Options& o)
{
    require_sizes(o);
    json levels = json::array();
    for (int t = -1; t <= std::max(o.b - o.a, 0); ++t) {
        const auto level = filtration_level(o.b, o.a, t);
        json entry = {{"t", t}, {"dim", level.dimension()}};
        std::cout << "t=" << t << " dim " << level.dimension();
        if (t >= 0 && o.a <= o.b) {
            const auto sq = subquotient_decompose(t, o.b, o.a);
            entry["subquotient"] = to_json(sq);
            std::cout << " subquotient " << sq.to_string();
        }
        std::cout << "\n";
        levels.push_back(std::move(entry));
    }
    if (!o.json_path.empty())
        write_file(o.json_path, json{{"b", o.b}, {"a", o.a}, {"levels", levels}}.dump(2) + "\n");
    return 0;
}

int run_verify(const Options& o)
{
    std::vector<CheckReport> reports;
    if (o.check == "all") reports = run_all(o.max_size);
    else reports.push_back(run_check(o.check, o.max_size));
    for (const auto& r : reports) {
        std::cout << to_string(r.status) << " " << r.id << " " << r.params.dump();
        if (o.timings) std::cout << " " << r.elapsed << "s";
        std::cout << "\n";
        if (r.status == Status::fail)
            std::cout << "  expected " << r.expected.dump() << "\n  computed " << r.computed.dump() << "\n";
    }
    if (!o.json_path.empty()) write_file(o.json_path, to_json(reports, o.timings).dump(2) + "\n");
    if (!o.csv_path.empty()) write_file(o.csv_path, dims_csv(o.max_size));
    return any_failed(reports) ? kExitFail : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Primitive filtration of the linearized category of finite sets and surjections"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--max-size", o.max_size, "Largest set size swept")->check(CLI::Range(0, 7));
    app.add_option("--json", o.json_path, "Write JSON output here");
    app.add_option("--csv", o.csv_path, "Write the dimension table here");
    app.add_flag("--timings", o.timings, "Include elapsed times (output is then not reproducible)");

    auto* dims = app.add_subcommand("dims", "Dimensions of kFS(b,a) and its filtration levels");
    auto* theta = app.add_subcommand("theta", "Matrix, kernel and cokernel class of Theta_a(b)");
    theta->add_option("--a", o.a)->required();
    theta->add_option("--b", o.b)->required();
    auto* decomp = app.add_subcommand("decompose", "Bimodule decomposition of kFS(b,a) or kFI(a,b)");
    decomp->add_option("--flavor", o.flavor)->check(CLI::IsMember({"fs", "fi"}));
    decomp->add_option("--b", o.b)->required();
    decomp->add_option("--a", o.a)->required();
    auto* filt = app.add_subcommand("filtration", "Filtration levels and subquotient classes of kFS(b,a)");
    filt->add_option("--b", o.b)->required();
    filt->add_option("--a", o.a)->required();
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> choices = check_ids();
    choices.push_back("all");
    verify->add_option("check", o.check, "Check id or 'all'")->check(CLI::IsMember(choices));

    for (auto* sub : {dims, theta, decomp, filt, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*dims) return run_dims(o);
        if (*theta) return run_theta(o);
        if (*decomp) return run_decompose(o);
        if (*filt) return run_filtration(o);
        return run_verify(o);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
