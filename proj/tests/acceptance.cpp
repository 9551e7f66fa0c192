// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fsprim/verify.hpp"

using namespace fsprim;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<std::vector<CheckReport>()> run;
    double time_limit; // seconds, 0 for none
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "hom-set counts match closed forms, b <= 7", [] { return std::vector{check_dims(7)}; }, 10.0},
        {2, "Theta_a(a) is [alpha] -> [alpha^-1], a <= 6", [] { return std::vector{check_theta_iso(6)}; }, 0},
        {3, "coker Theta_a(b) = sgn_a x S_(b-a,1^a), b <= 6", [] { return std::vector{check_coker_theta(6)}; }, 0},
        {4, "reduced exterior powers are hooks, b <= 7", [] { return std::vector{check_lambda_bar(7)}; }, 0},
        {5, "filtration levels: zero, nested, exhaustive, stable, b <= 6", [] { return std::vector{check_filtration(6)}; }, 0},
        {6, "primitives form a wide subcategory, sizes <= 6", [] { return std::vector{check_closure(6)}; }, 0},
        {7, "no sign isotype in kFS(a,c), c < a <= 6", [] { return std::vector{check_sgn_vanishing(6)}; }, 0},
        {8, "short exact sequence classes, b <= 6", [] { return std::vector{check_ses(6)}; }, 0},
        {9, "de Rham identity n <= 10 and inversion, weight <= 5",
         [] { return std::vector{check_derham(10), check_invert(5)}; }, 0},
        {10, "primitive class formula, b <= 6", [] { return std::vector{primfs_formula(6)}; }, 0},
        {11, "kFS class and subquotient formulas, b <= 5",
         [] { return std::vector{kring_fs_check(5), subquotient_formula(5)}; }, 300.0},
        {12, "Pieri rules vs induction and orthogonality",
         [] { return std::vector{check_pieri_oracle(5, 3), check_orthogonality(7)}; }, 0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        try {
            for (const auto& r : c.run()) {
                if (r.status != Status::pass) {
                    ok = false;
                    detail += " " + r.id + "=" + std::string(to_string(r.status)) + " expected " + r.expected.dump() +
                              " computed " + r.computed.dump();
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail += std::string(" exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && secs >= c.time_limit) {
            ok = false;
            detail += " over time limit";
        }
        failures += ok ? 0 : 1;
        std::printf("%s %2d %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs, detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
