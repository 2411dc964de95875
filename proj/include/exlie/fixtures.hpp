#pragma once

// Loading of the frozen data fixtures shipped under data/.  Everything here is
// plain JSON parsing; the numerical content of the fixtures is validated by
// the consumers (make_labeled_ambient re-checks every fingerprint, the orbit
// and correspondence layers re-check dimensions and degrees).

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "charnames.hpp"
#include "rootsys.hpp"

namespace exlie {

inline std::string default_data_dir() {
#ifdef EXLIE_DATA_DIR
  return EXLIE_DATA_DIR;
#else
  return "data";
#endif
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

// Fingerprint rules for one exceptional type ("G2" or "F4") from alvis.json.
inline std::vector<AlvisRule> load_alvis_rules(const std::string& type,
                                               const std::string& data_dir = default_data_dir()) {
  nlohmann::json j = load_json_file(data_dir + "/alvis.json");
  if (!j.contains(type)) throw std::runtime_error("alvis.json has no entry for type " + type);
  std::vector<AlvisRule> rules;
  for (const auto& e : j.at(type)) {
    AlvisRule r;
    r.label = e.at("label").get<std::string>();
    r.degree = e.at("degree").get<long long>();
    r.b = e.at("b").get<int>();
    r.value_long = e.at("long").get<long long>();
    r.value_short = e.at("short").get<long long>();
    r.mode = e.at("mode").get<std::string>();
    if (e.contains("from")) r.from = e.at("from").get<std::string>();
    if (e.contains("rho")) r.rho = e.at("rho").get<std::string>();
    rules.push_back(std::move(r));
  }
  return rules;
}

// Labeled character theory of the full Weyl group of R.  Exceptional types go
// through the fingerprint fixture; classical types carry intrinsic labels
// (partitions, bipartitions) and need no data file.
inline LabeledGroup labeled_weyl_group(const RootSystem& R,
                                       const std::string& data_dir = default_data_dir()) {
  const CartanType& t = R.type();
  bool exceptional = false;
  for (const auto& f : t.factors)
    if (f.letter == 'G' || f.letter == 'F') exceptional = true;
  if (!exceptional) {
    std::vector<int> simples;
    for (int i = 0; i < R.rank(); ++i) simples.push_back(R.simple(i));
    return make_labeled_subgroup(R, R.recognize(simples));
  }
  if (t.factors.size() != 1)
    throw std::invalid_argument("no labeling for products with an exceptional factor");
  return make_labeled_ambient(R, load_alvis_rules(t.str(), data_dir));
}

}  // namespace exlie
