/*
 * Copyright 2026 The relideal Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "relideal/json_io.hpp"

#include <fstream>
#include <sstream>
#include <sys/stat.h>

#include <json.hpp>

namespace relideal {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

Perm parse_generator(int n, const json& g) {
  if (g.is_string()) return Perm::from_cycles(n, g.get<std::string>());
  if (g.is_array()) {
    std::vector<int> img;
    for (const auto& v : g) img.push_back(v.get<int>());
    if (static_cast<int>(img.size()) != n)
      throw ParseError("generator image list has wrong length");
    return Perm::from_images_1based(img);
  }
  throw ParseError("generator must be a cycle string or an image list");
}

}  // namespace

PermGroup parse_group_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("n")) throw ParseError("group descriptor misses \"n\"");
  int n = j["n"].get<int>();
  if (n < 1 || n > 64) throw ParseError("group degree out of range");
  std::vector<Perm> gens;
  for (const auto& g : j.value("generators", json::array()))
    gens.push_back(parse_generator(n, g));
  return PermGroup::enumerate(n, std::move(gens));
}

std::string group_to_json(const PermGroup& g) {
  json j;
  j["n"] = g.n();
  j["generators"] = json::array();
  for (const Perm& p : g.generators()) j["generators"].push_back(p.cycle_string());
  return j.dump();
}

std::string basis_to_json(const UniPoly& f, const PermGroup& g,
                          const ReconstructedBasis& rb) {
  json j;
  j["format"] = 1;
  j["f"] = f.to_string();
  j["group"] = json::parse(group_to_json(g));
  j["n"] = rb.basis.n;
  j["p"] = rb.p.get_str();
  j["e"] = rb.e;
  j["degree_profile"] = rb.basis.degrees;
  json lab = json::array();
  for (const Int& v : rb.labeling) lab.push_back(Int(v % rb.p).get_str());
  j["labeling_mod_p"] = lab;
  json delta = json::array(), lambda = json::array(), ei = json::array(),
       dens = json::array(), polys = json::array();
  for (const Int& d : rb.delta) delta.push_back(d.get_str());
  for (const Rat& l : rb.lambda) lambda.push_back(l.get_str());
  for (unsigned v : rb.e_i) ei.push_back(v);
  for (const Int& d : rb.observed_denominators) dens.push_back(d.get_str());
  for (const QPoly& q : rb.basis.polys) polys.push_back(to_string(q));
  j["delta"] = delta;
  j["lambda"] = lambda;
  j["e_i"] = ei;
  j["observed_denominators"] = dens;
  j["polys"] = polys;
  return j.dump(1);
}

BasisDocument parse_basis_json(const std::string& text) {
  json j = parse(text);
  if (j.value("format", 0) != 1) throw ParseError("unsupported basis format");
  BasisDocument doc;
  doc.f = UniPoly::parse(j.at("f").get<std::string>());
  doc.n = j.at("n").get<int>();
  for (const auto& g : j.at("group").at("generators"))
    doc.group_generators.push_back(g.get<std::string>());
  doc.p = Int(j.at("p").get<std::string>());
  doc.e = j.at("e").get<unsigned>();
  doc.degree_profile = j.at("degree_profile").get<std::vector<int>>();
  for (const auto& s : j.at("polys"))
    doc.polys.push_back(parse_qpoly(s.get<std::string>(), doc.n));
  for (const auto& s : j.value("labeling_mod_p", json::array()))
    doc.labeling_mod_p.push_back(Int(s.get<std::string>()));
  return doc;
}

std::string basis_to_text(const UniPoly& f, const PermGroup& g,
                          const ReconstructedBasis& rb) {
  std::ostringstream os;
  os << "f = " << f.to_string() << "\n";
  os << "group = " << group_to_json(g) << "\n";
  os << "order = " << g.order() << "\n";
  os << "p = " << rb.p.get_str() << ", e = " << rb.e << "\n";
  os << "degree profile =";
  for (int d : rb.basis.degrees) os << " " << d;
  os << "\n";
  os << "labeling mod p =";
  for (const Int& v : rb.labeling) os << " " << Int(v % rb.p).get_str();
  os << "\n";
  for (int i = 0; i < rb.basis.n; ++i) {
    os << "Delta_" << (i + 1) << " = " << rb.delta[i].get_str()
       << ", lambda_" << (i + 1) << " = " << rb.lambda[i].get_str()
       << ", e_" << (i + 1) << " = " << rb.e_i[i]
       << ", observed denominator = " << rb.observed_denominators[i].get_str()
       << "\n";
  }
  for (int i = 0; i < rb.basis.n; ++i)
    os << "f" << (i + 1) << "^ = " << to_string(rb.basis.polys[i]) << "\n";
  return os.str();
}

PointSetDocument parse_pointset_json(const std::string& text) {
  json j = parse(text);
  PointSetDocument doc;
  doc.n = j.at("n").get<int>();
  const auto& field = j.at("field");
  if (field.is_string() && field.get<std::string>() == "Q") {
    doc.rational = true;
  } else if (field.is_object() && field.contains("p")) {
    doc.rational = false;
    const auto& p = field["p"];
    doc.p = p.is_string() ? Int(p.get<std::string>())
                          : Int(p.get<long>());
  } else {
    throw ParseError("field must be \"Q\" or {\"p\": ...}");
  }
  for (const auto& pt : j.at("points")) {
    std::vector<std::string> coords;
    for (const auto& c : pt)
      coords.push_back(c.is_string() ? c.get<std::string>()
                                     : std::to_string(c.get<long>()));
    if (static_cast<int>(coords.size()) != doc.n)
      throw ParseError("point arity mismatch");
    doc.points.push_back(std::move(coords));
  }
  return doc;
}

std::string read_text_or_file(const std::string& value) {
  struct stat st{};
  if (stat(value.c_str(), &st) == 0 && S_ISREG(st.st_mode)) {
    std::ifstream in(value);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return value;
}

}  // namespace relideal
