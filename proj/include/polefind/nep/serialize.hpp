// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_NEP_SERIALIZE_HPP
#define POLEFIND_NEP_SERIALIZE_HPP

// JSON round-trip for eigenvalue records ("schema": 1). Key order is fixed
// so a run with a fixed seed produces byte-identical output.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polefind/nep/records.hpp"

namespace polefind::nep {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const EigenvalueRecord& rec) {
    OrderedJson j;
    j["value_re"] = rec.value.real();
    j["value_im"] = rec.value.imag();
    j["error_estimate"] = rec.error_estimate;
    j["status"] = to_string(rec.status);
    j["residue_re"] = rec.residue.real();
    j["residue_im"] = rec.residue.imag();
    j["region_path"] = rec.region_path;
    j["seed"] = rec.seed;
    j["out_of_region"] = rec.out_of_region;
    j["secant_iterations"] = rec.secant_steps.size();
    if (!rec.nullvectors.empty()) {
        OrderedJson nv = OrderedJson::array();
        for (const CVector& v : rec.nullvectors) {
            OrderedJson comps = OrderedJson::array();
            for (const Cplx& z : v) {
                comps.push_back(z.real());
                comps.push_back(z.imag());
            }
            nv.push_back(comps);
        }
        j["nullvectors"] = nv;
    }
    return j;
}

inline EigenvalueRecord record_from_json(const OrderedJson& j) {
    EigenvalueRecord rec;
    rec.value = Cplx(j.at("value_re").get<double>(), j.at("value_im").get<double>());
    rec.error_estimate = j.at("error_estimate").get<double>();
    rec.status = status_from_string(j.at("status").get<std::string>());
    rec.residue = Cplx(j.at("residue_re").get<double>(), j.at("residue_im").get<double>());
    rec.region_path = j.at("region_path").get<std::vector<int>>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.out_of_region = j.value("out_of_region", false);
    if (j.contains("nullvectors")) {
        for (const auto& nv : j.at("nullvectors")) {
            CVector v;
            for (std::size_t i = 0; i + 1 < nv.size(); i += 2)
                v.emplace_back(nv[i].get<double>(), nv[i + 1].get<double>());
            rec.nullvectors.push_back(std::move(v));
        }
    }
    return rec;
}

inline OrderedJson results_to_json(const std::vector<EigenvalueRecord>& records,
                                   std::uint64_t seed) {
    OrderedJson j;
    j["schema"] = 1;
    j["seed"] = seed;
    OrderedJson arr = OrderedJson::array();
    for (const EigenvalueRecord& rec : records) arr.push_back(to_json(rec));
    j["records"] = arr;
    return j;
}

inline std::vector<EigenvalueRecord> records_from_json(const OrderedJson& j) {
    std::vector<EigenvalueRecord> out;
    for (const auto& rj : j.at("records")) out.push_back(record_from_json(rj));
    return out;
}

}  // namespace polefind::nep

#endif  // POLEFIND_NEP_SERIALIZE_HPP
