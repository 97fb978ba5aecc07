#pragma once

#include <descartes/catalog.hpp>
#include <descartes/prop3.hpp>
#include <descartes/verify.hpp>
#include <descartes/witness.hpp>

#include <json.hpp>

#include <string>

namespace descartes {

inline constexpr const char* kSchema = "descartes-lab/1";

nlohmann::json classification_json(const SignPattern& sp, const AdmissiblePair& ap,
                                   const Classification& cls);

nlohmann::json witness_json(const SignPattern& sp, const AdmissiblePair& ap, const Witness& w);

nlohmann::json case_report_json(const CaseReport& r);

nlohmann::json catalog_json(int degree, const std::vector<CatalogRow>& rows);

/// CSV with witness coefficients flattened into the exact text codec.
std::string catalog_csv(const std::vector<CatalogRow>& rows);

}  // namespace descartes
