#pragma once
// Self-verification suites run by `tetra verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tetra/closed_form.hpp"

namespace tetra {

/// Implementation hooks the suites exercise. Tests substitute deliberately
/// broken versions to make sure the suites notice.
struct Implementation {
    std::function<cplx(long, const CharacteristicData&)> t_minus2 = [](long j, const CharacteristicData& cd) {
        return tetra::t_minus2(j, cd);
    };
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    [[nodiscard]] bool all_pass() const noexcept;
};

/// Suites: "lemmata", "closed-form", "oracle", "transport", "all".
/// Throws std::invalid_argument for an unknown suite name.
[[nodiscard]] VerifyReport run_verify(const std::string& suite, std::uint64_t seed, const Implementation& impl = {});

[[nodiscard]] const std::vector<std::string>& verify_suite_names();

}  // namespace tetra
