#include "toyscatter/report_json.hpp"

#include <string>

namespace toyscatter {

namespace {

Json speeds_json(const SpeedList& speeds) {
  Json arr = Json::array();
  for (const auto& s : speeds) arr.push_back(s.fraction());
  return arr;
}

}  // namespace

Json to_json(const MethodReport& r) {
  Json j;
  j["value"] = r.value.value().fraction();
  j["decimal"] = r.value.value().decimal(kDecimalDigits);
  j["method"] = std::string(method_name(r.method));
  Json residues = Json::array();
  for (const auto& res : r.residues) residues.push_back(res.fraction());
  j["residues"] = std::move(residues);
  if (r.epsilon) j["epsilon"] = r.epsilon->fraction();
  return j;
}

Json to_json(const SimReport& r) {
  Json j;
  j["aWins"] = r.a_wins;
  j["bWins"] = r.b_wins();
  j["trials"] = r.trials;
  j["estimate"] = r.estimate;
  j["stdError"] = r.std_error;
  j["seed"] = r.seed;
  j["policy"] = std::string(policy_name(r.policy));
  return j;
}

Json to_json(const VolumeEstimate& v) {
  Json j;
  j["hits"] = v.hits;
  j["samples"] = v.samples;
  j["estimate"] = v.estimate;
  j["stdError"] = v.std_error;
  j["seed"] = v.seed;
  return j;
}

Json to_json(const RelationVerdict& v) {
  Json j;
  j["p"] = v.p.value().fraction();
  j["decimal"] = v.p.value().decimal(kDecimalDigits);
  j["verdict"] = std::string(verdict_name(v.verdict));
  return j;
}

Json to_json(const CycleWitness& w) {
  auto prob = [](const Probability& p) {
    Json j;
    j["p"] = p.value().fraction();
    j["decimal"] = p.value().decimal(kDecimalDigits);
    return j;
  };
  Json j;
  j["P"] = speeds_json(w.p);
  j["Q"] = speeds_json(w.q);
  j["R"] = speeds_json(w.r);
  j["pPQ"] = prob(w.p_pq);
  j["pQR"] = prob(w.p_qr);
  j["pRP"] = prob(w.p_rp);
  j["cycle"] = w.is_cycle();
  return j;
}

Json to_json(const Instance& inst) {
  Json j;
  j["a"] = speeds_json(inst.a());
  j["b"] = speeds_json(inst.b());
  return j;
}

void write_curve_csv(std::ostream& os, std::span<const CurvePoint> points) {
  os << "x,y\n";
  for (const auto& pt : points) os << pt.x.decimal(kDecimalDigits) << ',' << pt.y.decimal(kDecimalDigits) << '\n';
}

}  // namespace toyscatter
