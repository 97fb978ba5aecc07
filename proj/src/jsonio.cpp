#include <descartes/jsonio.hpp>

namespace descartes {

using nlohmann::json;

namespace {

json interval_json(const RatInterval& iv) {
  return json::array({rat_codec(iv.lo), rat_codec(iv.hi)});
}

json trace_json(const CriterionTrace& tr) {
  json j = json::object();
  if (tr.L) j["L"] = rat_codec(*tr.L);
  if (tr.kappa) j["kappa"] = rat_codec(*tr.kappa);
  if (tr.qminus) j["qminus"] = interval_json(*tr.qminus);
  if (tr.qplus) j["qplus"] = interval_json(*tr.qplus);
  if (tr.eqE) j["eqE"] = *tr.eqE;
  return j;
}

}  // namespace

json classification_json(const SignPattern& sp, const AdmissiblePair& ap,
                         const Classification& cls) {
  json j;
  j["schema"] = kSchema;
  j["degree"] = sp.degree();
  j["pattern"] = sp.str();
  j["ap"] = json::array({ap.pos, ap.neg});
  j["status"] = status_str(cls.status);
  j["reason"] = reason_str(cls.reason);
  if (cls.witness) {
    j["witness"] = cls.witness->codec();
    if (!cls.construction.empty()) j["construction"] = cls.construction;
  }
  j["trace"] = trace_json(cls.trace);
  return j;
}

json witness_json(const SignPattern& sp, const AdmissiblePair& ap, const Witness& w) {
  json j;
  j["schema"] = kSchema;
  j["pattern"] = sp.str();
  j["ap"] = json::array({ap.pos, ap.neg});
  j["coeffs"] = w.poly.codec();
  j["construction"] = w.construction;
  json params = json::object();
  for (const auto& [k, v] : w.params) params[k] = rat_codec(v);
  j["parameters"] = params;
  return j;
}

json case_report_json(const CaseReport& r) {
  json j;
  j["d"] = r.d;
  j["blocks"] = json::array({r.blocks[0], r.blocks[1], r.blocks[2]});
  j["name"] = r.name;
  j["checks"] = {{"leading_positive", r.leading_positive},
                 {"resultant_certificate", r.resultant_ok},
                 {"sample_ordering", r.ordering_ok},
                 {"b0_reduction", r.b0_reduction_ok}};
  j["pass"] = r.pass;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json catalog_json(int degree, const std::vector<CatalogRow>& rows) {
  json j;
  j["schema"] = kSchema;
  j["degree"] = degree;
  json arr = json::array();
  for (const auto& r : rows) {
    json rj = classification_json(r.pattern, r.ap, r.cls);
    rj.erase("schema");
    arr.push_back(std::move(rj));
  }
  j["rows"] = std::move(arr);
  return j;
}

std::string catalog_csv(const std::vector<CatalogRow>& rows) {
  std::string out = "degree,pattern,pos,neg,status,reason,L,kappa,witness\n";
  for (const auto& r : rows) {
    out += std::to_string(r.pattern.degree()) + "," + r.pattern.str() + "," +
           std::to_string(r.ap.pos) + "," + std::to_string(r.ap.neg) + "," +
           status_str(r.cls.status) + "," + reason_str(r.cls.reason) + ",";
    out += r.cls.trace.L ? rat_codec(*r.cls.trace.L) : "";
    out += ",";
    out += r.cls.trace.kappa ? rat_codec(*r.cls.trace.kappa) : "";
    out += ",";
    if (r.cls.witness) out += "\"" + r.cls.witness->codec() + "\"";
    out += "\n";
  }
  return out;
}

}  // namespace descartes
