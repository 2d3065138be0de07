#ifndef TANPOLY_VERIFY_HPP
#define TANPOLY_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tanpoly/exact.hpp"
#include "tanpoly/report.hpp"

namespace tanpoly {

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// The 13 evaluation points {0, +-1, +-1/2, +-2, +-1/3, +-3/7, +-7/2}.
const std::vector<Rational>& rational_grid();

/// Rows 1..5 of the two tilde triangles as published.
const std::vector<std::vector<long>>& golden_tilde_R();
const std::vector<std::vector<long>>& golden_tilde_T();

VerifyReport verify_dz_expansion(unsigned max_n);
/// Also includes `quotient_samples` randomized checks of reduce_z . diff == reduced_diff . reduce_z.
VerifyReport verify_hoffman(unsigned max_n, unsigned quotient_samples = 200, unsigned long long seed = 20130617);
VerifyReport verify_quotient(unsigned samples, unsigned long long seed);
VerifyReport verify_theorem2(unsigned max_n);
VerifyReport verify_tables(unsigned max_n);
VerifyReport verify_beeler(unsigned max_n);

/// Runs one named suite; nullopt for an unknown name. "all" is not a suite here.
std::optional<VerifyReport> run_suite(std::string_view name, unsigned max_n);

nlohmann::json to_json(const VerifyReport& report);
std::string render_text(const VerifyReport& report);

}  // namespace tanpoly

#endif
