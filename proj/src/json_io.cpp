#include "taftyd/json_io.hpp"

namespace taftyd {

Json rat_to_json(const Rat& r) {
  return Json::array(
      {numerator(r).str(), denominator(r).str()});
}

Json cyclo_to_json(const Cyclo& c) {
  Json coeffs = Json::array();
  for (const Rat& r : c.coeffs()) coeffs.push_back(rat_to_json(r));
  Json out = Json::object();
  out["order"] = c.order();
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json hopf_to_json(const HopfElt& h) {
  Json out = Json::array();
  for (const auto& [gx, coef] : h.terms()) {
    out.push_back(Json::array({gx.a, gx.b, cyclo_to_json(coef)}));
  }
  return out;
}

Json matrix_to_json(const CycMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(cyclo_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json comatrix_to_json(const Comatrix& m) {
  Json out = Json::object();
  out["params"] = {{"n", m.context().params().n}, {"t", m.context().params().t}};
  out["i"] = m.context().i();
  out["j"] = m.context().j();
  out["size"] = m.size();
  Json entries = Json::array();
  for (int k = 0; k < m.size(); ++k) {
    for (int l = 0; l <= k; ++l) {
      entries.push_back(Json::array({k, l, hopf_to_json(m.entry(k, l))}));
    }
  }
  out["entries"] = std::move(entries);
  return out;
}

Json module_to_json(const YdModule& m) {
  Json spec = Json::object();
  spec["n"] = m.spec.params.n;
  spec["t"] = m.spec.params.t;
  if (const auto* f = std::get_if<FiniteV>(&m.spec.kind)) {
    spec["kind"] = "finite";
    spec["i1"] = f->i1;
    spec["j"] = f->j;
    spec["lambda"] = cyclo_to_json(f->lambda);
  } else {
    const auto& inf = std::get<InfiniteV>(m.spec.kind);
    spec["kind"] = "infinite";
    spec["i"] = inf.i;
    spec["j"] = inf.j;
    spec["K"] = inf.K;
  }
  Json out = Json::object();
  out["spec"] = std::move(spec);
  out["dim"] = m.dim;
  out["g_weights"] = m.g_weights;
  out["x_matrix"] = matrix_to_json(m.x_matrix);
  Json coaction = Json::array();
  for (int k = 0; k < m.dim; ++k) {
    for (const auto& [h, l] : m.coaction_rows[k]) {
      coaction.push_back(Json::array({k, l, hopf_to_json(h)}));
    }
  }
  out["coaction"] = std::move(coaction);
  out["truncated"] = m.truncated;
  return out;
}

Json verdict_to_json(const NicholsVerdict& v) {
  Json out = Json::object();
  out["finite"] = v.finite;
  out["reason"] = reason_name(v.reason);
  Json tags = Json::array();
  for (const auto& [a, b] : v.tags) tags.push_back(Json::array({a, b}));
  out["tags"] = std::move(tags);
  out["dim_module"] = v.dim_module;
  Json probe = Json::array();
  for (const auto& [deg, dim] : v.probe) probe.push_back(Json::array({deg, dim}));
  out["probe"] = std::move(probe);
  return out;
}

Json stringify_integers(const Json& v) {
  if (v.is_number_integer()) {
    return std::to_string(v.get<long long>());
  }
  if (v.is_array()) {
    Json out = Json::array();
    for (const auto& item : v) out.push_back(stringify_integers(item));
    return out;
  }
  if (v.is_object()) {
    Json out = Json::object();
    for (const auto& [key, value] : v.items()) {
      out[key] = stringify_integers(value);
    }
    return out;
  }
  return v;
}

}  // namespace taftyd
