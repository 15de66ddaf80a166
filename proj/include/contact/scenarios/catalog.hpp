#pragma once

#include <string>
#include <utility>
#include <vector>

#include "contact/scenarios/scenario.hpp"

namespace contact::scenarios {

namespace detail {

inline json e1() {
  return json::parse(R"json({
  "name": "E1_R3_standard",
  "atlas": {"charts": [{"name": "R3", "coords": ["x", "y", "z"], "box": [[-1, 1], [-1, 1], [-1, 1]]}]},
  "one_form": {"R3": ["0", "x", "1"]},
  "checks": ["transitions", "contact_min", "extension_vanishing", "extension_pullback", "dc_convention",
             "spsh_min", "kahler_symmetry", "cr_levi_min", "cr_dim"]
})json");
}

inline json e2() {
  return json::parse(R"json({
  "name": "E2_circle",
  "atlas": {"charts": [{"name": "S1", "coords": ["theta"], "box": ["angle"]}]},
  "one_form": {"S1": ["1"]},
  "group": {"kind": "torus", "params": ["a"]},
  "action": {
    "maps": [{"S1": {"base": ["theta + a"], "tube": ["theta + a", "im_theta"]}}],
    "presentation": {"chart": "S1", "product": {"name": "K", "coords": ["theta"], "box": ["angle"]}, "group_dim": 1, "to_m": ["theta"]}
  },
  "complexification": {"weights": {"S1": "1 + 0.5*cos(theta)"}, "average": true, "quadrature": 64},
  "samples": {"m": 1000, "tube": 20},
  "checks": ["transitions", "contact_min", "invariance_eta", "action_laws", "invariance_rho", "averaging_quadrature",
             "extension_vanishing", "extension_pullback", "dc_convention", "spsh_min", "kahler_symmetry",
             "moment_extension", "moment_equivariance", "hamiltonian", "frame_reconstruction", "product_potential_pullback"]
})json");
}

inline json e3() {
  return json::parse(R"json({
  "name": "E3_T3",
  "atlas": {"charts": [{"name": "T3", "coords": ["x", "y", "z"], "box": ["angle", "angle", "angle"]}]},
  "one_form": {"T3": ["cos(z)", "sin(z)", "0"]},
  "group": {"kind": "torus", "params": ["a"]},
  "action": {"maps": [{"T3": {"base": ["x + a", "y", "z"],
                              "tube": ["x + a", "y", "z", "im_x", "im_y", "im_z"],
                              "imaginary": ["x", "y", "z", "im_x + a", "im_y", "im_z"]}}]},
  "quotient": {
    "base": {"name": "Y", "coords": ["y"], "box": ["angle"]},
    "level_params": {"name": "L", "coords": ["x", "y"], "box": ["angle", "angle"]},
    "level": ["x", "y", "pi/2"],
    "section": ["0", "y", "pi/2"],
    "projection": ["y"],
    "eta_red": ["1"],
    "holomorphic": {
      "reduced": {"name": "Q", "coords": ["y", "z", "im_y", "im_z"], "box": ["angle", "angle", [-0.5, 0.5], [-0.5, 0.5]]},
      "base": {"name": "Y", "coords": ["y"], "box": ["angle"]},
      "slice": ["0", "y", "z", "0", "im_y", "im_z"],
      "projection": ["y", "z", "im_y", "im_z"],
      "embedding": ["y", "pi/2", "0", "0"]
    }
  },
  "checks": ["transitions", "contact_min", "invariance_eta", "action_laws", "invariance_rho",
             "extension_vanishing", "extension_pullback", "dc_convention", "spsh_min", "kahler_symmetry",
             "cr_levi_min", "cr_dim", "moment_extension", "moment_equivariance", "hamiltonian",
             "zero_level", "quotient_section", "quotient_orbit",
             "contact_reduce", "contact_reduce_certificate", "contact_reduce_perturbation_min",
             "kahler_reduce", "kahler_reduce_spsh_min", "compatibility", "compatibility_omega",
             "cr_reduce_contact_min", "cr_reduce_levi_min", "kappa_ker_dmu", "kappa_complement", "kappa_rank"]
})json");
}

inline json e4() {
  return json::parse(R"json({
  "name": "E4_heisenberg_translation",
  "atlas": {"charts": [{"name": "R3", "coords": ["x", "y", "z"], "box": [[-1, 1], [-1, 1], [-1, 1]]}]},
  "one_form": {"R3": ["0", "x", "1"]},
  "group": {"kind": "translation", "params": ["a"]},
  "action": {
    "maps": [{"R3": {"base": ["x", "y + a", "z"],
                     "tube": ["x", "y + a", "z", "im_x", "im_y", "im_z"],
                     "imaginary": ["x", "y", "z", "im_x", "im_y + a", "im_z"]}}],
    "presentation": {"chart": "R3", "product": {"name": "GxS", "coords": ["g", "x", "z"], "box": [[-1, 1], [-1, 1], [-1, 1]]},
                     "group_dim": 1, "to_m": ["x", "g", "z"]}
  },
  "quotient": {
    "base": {"name": "Z", "coords": ["z"], "box": [[-1, 1]]},
    "level_params": {"name": "L", "coords": ["y", "z"], "box": [[-1, 1], [-1, 1]]},
    "level": ["0", "y", "z"],
    "section": ["0", "0", "z"],
    "projection": ["z"],
    "eta_red": ["1"],
    "holomorphic": {
      "reduced": {"name": "Q", "coords": ["x", "z", "im_x", "im_z"], "box": [[-1, 1], [-1, 1], [-0.5, 0.5], [-0.5, 0.5]]},
      "base": {"name": "Z", "coords": ["z"], "box": [[-1, 1]]},
      "slice": ["x", "0", "z", "im_x", "0", "im_z"],
      "projection": ["x", "z", "im_x", "im_z"],
      "embedding": ["0", "z", "0", "0"]
    }
  },
  "checks": ["transitions", "contact_min", "invariance_eta", "action_laws", "invariance_rho",
             "extension_vanishing", "extension_pullback", "dc_convention", "spsh_min", "kahler_symmetry",
             "cr_levi_min", "cr_dim", "moment_extension", "moment_equivariance", "hamiltonian",
             "frame_reconstruction", "product_potential_pullback",
             "zero_level", "quotient_section", "quotient_orbit",
             "contact_reduce", "contact_reduce_certificate", "contact_reduce_perturbation_min",
             "kahler_reduce", "kahler_reduce_spsh_min", "compatibility", "compatibility_omega",
             "cr_reduce_contact_min", "cr_reduce_levi_min", "kappa_ker_dmu", "kappa_complement", "kappa_rank",
             "symplectify_omega", "symplectify_slice", "symplectify_spsh_min"]
})json");
}

inline json e5() {
  return json::parse(R"json({
  "name": "E5_Z2_stratified",
  "atlas": {"charts": [{"name": "R3", "coords": ["x", "y", "z"], "box": [[-2, 2], [-2, 2], [-2, 2]]}]},
  "one_form": {"R3": ["0", "x", "1"]},
  "group": {"kind": "finite", "order": 2},
  "action": {"maps": [
    {"R3": {"base": ["x", "y", "z"], "tube": ["x", "y", "z", "im_x", "im_y", "im_z"]}},
    {"R3": {"base": ["-x", "-y", "z"], "tube": ["-x", "-y", "z", "-im_x", "-im_y", "im_z"]}}
  ]},
  "complexification": {"weights": {"R3": "1 + 0.25*x"}, "average": true},
  "quotient": {"strata": [
    {
      "label": "{0,1}",
      "zero_set": {"R3": "x^2 + y^2"},
      "base": {"name": "Z", "coords": ["z"], "box": [[-2, 2]]},
      "level_params": {"name": "Z", "coords": ["z"], "box": [[-2, 2]]},
      "level": ["0", "0", "z"],
      "section": ["0", "0", "z"],
      "projection": ["z"],
      "holomorphic": {
        "reduced": {"name": "Zc", "coords": ["z", "im_z"], "box": [[-2, 2], [-0.5, 0.5]]},
        "base": {"name": "Z", "coords": ["z"], "box": [[-2, 2]]},
        "slice": ["0", "0", "z", "0", "0", "im_z"],
        "projection": ["z", "im_z"],
        "embedding": ["z", "0"]
      }
    },
    {
      "label": "{0}",
      "base": {"name": "F", "coords": ["x", "y", "z"], "box": [[0.1, 2], [-2, 2], [-2, 2]]},
      "level_params": {"name": "R3", "coords": ["x", "y", "z"], "box": [[-2, 2], [-2, 2], [-2, 2]]},
      "level": ["x", "y", "z"],
      "section": ["x", "y", "z"],
      "projection": ["abs(x)", "y*x/abs(x)", "z"],
      "holomorphic": {
        "reduced": {"name": "Fc", "coords": ["x", "y", "z", "im_x", "im_y", "im_z"],
                    "box": [[0.1, 2], [-2, 2], [-2, 2], [-0.5, 0.5], [-0.5, 0.5], [-0.5, 0.5]]},
        "base": {"name": "F", "coords": ["x", "y", "z"], "box": [[0.1, 2], [-2, 2], [-2, 2]]},
        "slice": ["x", "y", "z", "im_x", "im_y", "im_z"],
        "projection": ["x", "y", "z", "im_x", "im_y", "im_z"],
        "embedding": ["x", "y", "z", "0", "0", "0"]
      }
    }
  ]},
  "samples": {"base": 10, "level": 10},
  "checks": ["transitions", "contact_min", "invariance_eta", "action_laws", "invariance_rho",
             "extension_vanishing", "extension_pullback", "dc_convention", "spsh_min", "kahler_symmetry",
             "isotropy", "strata_contact_min", "strata_totally_real_min", "strata_pullback", "strata_vanishing",
             "strata_certificate", "strata_orbit"]
})json");
}

// S³ ⊂ ℂ² in two stereographic charts related by inversion p = u/|u|².
inline std::vector<std::string> inversion(const std::string& v) {
  const std::string x1 = v + "1", x2 = v + "2", x3 = v + "3", y1 = "im_" + x1, y2 = "im_" + x2, y3 = "im_" + x3;
  const std::string a = "(" + x1 + "^2 + " + x2 + "^2 + " + x3 + "^2 - " + y1 + "^2 - " + y2 + "^2 - " + y3 + "^2)";
  const std::string b = "(2*(" + x1 + "*" + y1 + " + " + x2 + "*" + y2 + " + " + x3 + "*" + y3 + "))";
  const std::string d = "(" + a + "^2 + " + b + "^2)";
  std::vector<std::string> out;
  for (const auto& [x, y] : {std::pair{x1, y1}, {x2, y2}, {x3, y3}}) out.push_back("(" + x + "*" + a + " + " + y + "*" + b + ")/" + d);
  for (const auto& [x, y] : {std::pair{x1, y1}, {x2, y2}, {x3, y3}}) out.push_back("(" + y + "*" + a + " - " + x + "*" + b + ")/" + d);
  return out;
}

// b₁da₁ − a₁db₁ + b₂da₂ − a₂db₂ in stereographic coordinates; sign picks the pole.
inline std::vector<std::string> sphere_eta(const std::string& v, bool north) {
  const std::string x1 = v + "1", x2 = v + "2", x3 = v + "3";
  const std::string d = "(1 + " + x1 + "^2 + " + x2 + "^2 + " + x3 + "^2)^2";
  const std::string sg = north ? "" : "-";
  return {"4*(" + x2 + " + " + sg + x1 + "*" + x3 + ")/" + d, "4*(" + sg + x2 + "*" + x3 + " - " + x1 + ")/" + d,
          "2*(" + sg + "1 - " + sg + "(" + x1 + "^2 + " + x2 + "^2) + " + sg + x3 + "^2)/" + d};
}

inline json rotation(const std::string& v) {
  const std::string x1 = v + "1", x2 = v + "2", x3 = v + "3", y1 = "im_" + x1, y2 = "im_" + x2, y3 = "im_" + x3;
  const std::string ch = "((exp(a) + exp(-a))/2)", sh = "((exp(a) - exp(-a))/2)";
  return {{"base", {x1 + "*cos(a) - " + x2 + "*sin(a)", x1 + "*sin(a) + " + x2 + "*cos(a)", x3}},
          {"tube", {x1 + "*cos(a) - " + x2 + "*sin(a)", x1 + "*sin(a) + " + x2 + "*cos(a)", x3, y1 + "*cos(a) - " + y2 + "*sin(a)",
                    y1 + "*sin(a) + " + y2 + "*cos(a)", y3}},
          {"imaginary", {ch + "*" + x1 + " + " + sh + "*" + y2, ch + "*" + x2 + " - " + sh + "*" + y1, x3, ch + "*" + y1 + " - " + sh + "*" + x2,
                         ch + "*" + y2 + " + " + sh + "*" + x1, y3}}};
}

inline json e6() {
  const json box = json::array({json::array({-4, 4}), json::array({-4, 4}), json::array({-4, 4})});
  const auto transition = [](const std::string& from, const std::string& to, const std::string& v) {
    const std::string r = "(" + v + "1^2 + " + v + "2^2 + " + v + "3^2)";
    return json{{"from", from}, {"to", to}, {"map", {v + "1/" + r, v + "2/" + r, v + "3/" + r}}, {"tube_map", inversion(v)}};
  };
  json j;
  j["name"] = "E6_S1_on_S3";
  j["atlas"] = {{"charts", {{{"name", "N"}, {"coords", {"u1", "u2", "u3"}}, {"box", box}}, {{"name", "S"}, {"coords", {"p1", "p2", "p3"}}, {"box", box}}}},
                {"transitions", {transition("N", "S", "u"), transition("S", "N", "p")}}};
  j["one_form"] = {{"N", sphere_eta("u", true)}, {"S", sphere_eta("p", false)}};
  j["group"] = {{"kind", "torus"}, {"params", {"a"}}};
  j["action"] = {{"maps", json::array({{{"N", rotation("u")}, {"S", rotation("p")}}})}};
  j["complexification"] = {{"partition", "radial"}, {"bump_radius", 4}, {"radius", 0.5}};
  j["quotient"] = {{"strata", json::array({
                                  {{"label", "full"},
                                   {"zero_set", {{"N", "u1^2 + u2^2"}, {"S", "p1^2 + p2^2"}}},
                                   {"chart", "N"},
                                   {"base", {{"name", "C"}, {"coords", {"t"}}, {"box", {{-2, 2}}}}},
                                   {"level_params", {{"name", "C"}, {"coords", {"t"}}, {"box", {{-2, 2}}}}},
                                   {"level", {"0", "0", "t"}},
                                   {"section", {"0", "0", "t"}},
                                   {"projection", {"u3"}},
                                   {"holomorphic",
                                    {{"reduced", {{"name", "Cc"}, {"coords", {"t", "im_t"}}, {"box", {{-2, 2}, {-0.25, 0.25}}}}},
                                     {"base", {{"name", "C"}, {"coords", {"t"}}, {"box", {{-2, 2}}}}},
                                     {"slice", {"0", "0", "t", "0", "0", "im_t"}},
                                     {"projection", {"u3", "im_u3"}},
                                     {"embedding", {"t", "0"}}}}},
                                  {{"label", "trivial"}, {"chart", "N"}, {"level_empty", true}},
                              })}};
  j["samples"] = {{"base", 17}, {"level", 17}};
  j["checks"] = {"transitions",   "contact_min",         "invariance_eta",    "action_laws",     "invariance_rho",  "extension_vanishing",
                 "extension_pullback", "dc_convention",  "spsh_min",          "kahler_symmetry", "moment_extension", "moment_equivariance",
                 "hamiltonian",   "isotropy",            "strata_contact_min", "strata_totally_real_min", "strata_pullback",
                 "strata_vanishing", "strata_certificate", "strata_orbit",    "strata_empty_levels"};
  return j;
}

inline json e7() {
  return json::parse(R"json({
  "name": "E7_symplectification_line",
  "atlas": {"charts": [{"name": "R", "coords": ["u"], "box": [[-1, 1]]}]},
  "one_form": {"R": ["1"]},
  "complexification": {"symplectify": {"t_range": [-1, 1], "lambda": 2}},
  "samples": {"m": 1000, "tube": 20},
  "checks": ["transitions", "contact_min", "extension_vanishing", "extension_pullback", "dc_convention",
             "spsh_min", "kahler_symmetry", "symplectify_omega", "symplectify_slice", "symplectify_spsh_min"]
})json");
}

inline const std::vector<std::pair<std::string, json (*)()>>& builtins() {
  static const std::vector<std::pair<std::string, json (*)()>> b = {
      {"E1_R3_standard", e1},   {"E2_circle", e2},        {"E3_T3", e3},
      {"E4_heisenberg_translation", e4}, {"E5_Z2_stratified", e5}, {"E6_S1_on_S3", e6},
      {"E7_symplectification_line", e7},
  };
  return b;
}

}  // namespace detail

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : detail::builtins()) out.push_back(name);
  return out;
}

/// JSON source of a builtin scenario; throws LoadError on unknown names.
inline json builtin_json(const std::string& name) {
  for (const auto& [n, make] : detail::builtins())
    if (n == name) return make();
  throw LoadError("unknown builtin scenario '" + name + "'");
}

inline Scenario builtin(const std::string& name) { return load_json(builtin_json(name)); }

}  // namespace contact::scenarios
