#pragma once

// Verification suites and report output. Every check is exact; a check
// reports `vacuous` when its parameter range is empty.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsprim/repdecomp.hpp"

namespace fsprim {

enum class Status { pass, fail, vacuous };

[[nodiscard]] std::string_view to_string(Status s);

struct CheckReport {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::vacuous;
    nlohmann::json expected; // on failure: the first disagreeing cell
    nlohmann::json computed;
    std::string note;        // findings that do not affect the status
    double elapsed = 0.0;    // seconds; serialized only on request
};

/// Serialized report; `with_timing` adds "elapsed", which breaks byte-for-byte
/// reproducibility and is therefore off by default.
[[nodiscard]] nlohmann::json to_json(const CheckReport& r, bool with_timing = false);
[[nodiscard]] nlohmann::json to_json(const std::vector<CheckReport>& rs, bool with_timing = false);

[[nodiscard]] CheckReport check_dims(int bound);
[[nodiscard]] CheckReport check_orthogonality(int max_degree);
[[nodiscard]] CheckReport check_pieri_oracle(int max_weight, int max_strip);
[[nodiscard]] CheckReport check_derham(int max_n);
[[nodiscard]] CheckReport check_invert(int max_weight);
[[nodiscard]] CheckReport check_theta_iso(int bound);
[[nodiscard]] CheckReport check_theta(int bound);
[[nodiscard]] CheckReport check_coker_theta(int bound);
[[nodiscard]] CheckReport check_lambda_bar(int bound);
[[nodiscard]] CheckReport check_filtration(int bound);
[[nodiscard]] CheckReport check_closure(int bound);
[[nodiscard]] CheckReport check_sgn_vanishing(int bound);
[[nodiscard]] CheckReport check_ses(int bound);
[[nodiscard]] CheckReport primfs_formula(int bound);
[[nodiscard]] CheckReport kring_fs_check(int bound);
[[nodiscard]] CheckReport subquotient_formula(int bound);

/// Check ids in run order.
[[nodiscard]] const std::vector<std::string>& check_ids();
/// Runs one check; sweeps use `bound`, fixed-range checks ignore it.
/// Throws std::invalid_argument for an unknown id.
[[nodiscard]] CheckReport run_check(const std::string& id, int bound);
[[nodiscard]] std::vector<CheckReport> run_all(int bound);
[[nodiscard]] bool any_failed(const std::vector<CheckReport>& reports);

/// One row per a <= b <= bound: b,a,dim_fs,dim_fs0,l0..l<bound>.
[[nodiscard]] std::string dims_csv(int bound);

/// Both sides of the class identities, exposed for tests.
[[nodiscard]] BiSchurClass primfs_lhs(int b, int a);
[[nodiscard]] BiSchurClass primfs_rhs(int b, int a);
[[nodiscard]] BiSchurClass kring_lhs(int b, int a);
[[nodiscard]] BiSchurClass kring_rhs(int b, int a);
[[nodiscard]] BiSchurClass subquotient_rhs(int l, int b, int a);

} // namespace fsprim
