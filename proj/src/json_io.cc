// Copyright 2026 The polydecomp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polydecomp/json_io.h"

#include "polydecomp/errors.h"

namespace polydecomp {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(c.to_string());
  Json out;
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const Decomposition& d) {
  Json out;
  out["target"] = to_json(d.target);
  Json factors = Json::array();
  for (const Polynomial& f : d.factors) factors.push_back(to_json(f));
  out["factors"] = std::move(factors);
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw DomainError("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<Rational> coeffs;
  for (const Json& c : j["coeffs"]) {
    if (c.is_string()) {
      coeffs.push_back(Rational::from_string(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw DomainError("coefficient must be a string or an integer");
    }
  }
  return Polynomial(std::move(coeffs));
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array()) {
    throw DomainError("decomposition JSON needs a \"factors\" array");
  }
  Decomposition d;
  for (const Json& f : j["factors"]) d.factors.push_back(polynomial_from_json(f));
  if (d.factors.empty()) throw DomainError("decomposition has no factors");
  d.target = j.contains("target") ? polynomial_from_json(j["target"])
                                  : compose_chain(d.factors);
  if (compose_chain(d.factors) != d.target) {
    throw DomainError("factors do not compose to the target");
  }
  return d;
}

}  // namespace polydecomp
