// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NEP_RECORDS_HPP
#define POLEFIND_NEP_RECORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polefind/numerics/complex_matrix.hpp"

namespace polefind::nep {

enum class RecordStatus { confirmed, spurious, unconverged };

inline const char* to_string(RecordStatus s) {
    switch (s) {
        case RecordStatus::confirmed: return "confirmed";
        case RecordStatus::spurious: return "spurious";
        case RecordStatus::unconverged: return "unconverged";
    }
    return "unknown";
}

inline RecordStatus status_from_string(const std::string& s) {
    if (s == "confirmed") return RecordStatus::confirmed;
    if (s == "spurious") return RecordStatus::spurious;
    return RecordStatus::unconverged;
}

/// One refined pole of the scalarized resolvent. `error_estimate` is the
/// last secant step size; `region_path` records the chain of subdivision
/// child indices that led to the accepting subregion; `out_of_region` marks
/// values that refined to just outside that subregion but within slack.
struct EigenvalueRecord {
    Cplx value;
    double error_estimate = 0.0;
    Cplx residue;
    RecordStatus status = RecordStatus::unconverged;
    std::vector<int> region_path;
    std::uint64_t seed = 0;
    bool out_of_region = false;
    std::vector<double> secant_steps;
    std::vector<CVector> nullvectors;
};

}  // namespace polefind::nep

#endif  // POLEFIND_NEP_RECORDS_HPP
