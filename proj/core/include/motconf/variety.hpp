#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "motconf/measure.hpp"
#include "motconf/polyparse.hpp"

namespace motconf {

// Declarative description of a variety: builtins, polynomial systems over a
// prime field, and the constructors product / disjoint union / complement
// (the scissor relation). Builtins and their constructor combinations carry
// a symbolic class under each measure; affine systems are oracle-only.
struct VarietySpec {
  enum class Kind {
    point,
    affine_space,
    projective_space,
    torus,
    affine_system,
    product,
    disjoint_union,
    complement,  // children[0] minus children[1]
  };

  Kind kind = Kind::point;
  int dim_param = 0;  // builtins: the d in A^d, P^d, G_m^d

  // affine_system only
  int ambient = 0;
  std::vector<IntPolynomial> equations;    // must vanish
  std::vector<IntPolynomial> inequations;  // must not vanish
  std::optional<int> declared_dim;

  std::vector<VarietySpec> children;

  static VarietySpec point() { return {}; }
  static VarietySpec affine(int d);
  static VarietySpec projective(int d);
  static VarietySpec torus(int d);
  static VarietySpec product_of(std::vector<VarietySpec> parts);
  static VarietySpec disjoint_union_of(std::vector<VarietySpec> parts);
  static VarietySpec complement_of(VarietySpec ambient_v, VarietySpec closed);
  static VarietySpec system(int ambient, std::vector<std::string> equations,
                            std::vector<std::string> inequations,
                            std::optional<int> declared_dim = std::nullopt,
                            std::vector<std::string> var_names = {});

  // "point", "affine_space:2", "torus:1", and '*'-joined products such as
  // "projective_space:1*affine_space:1".
  static VarietySpec parse_builtin(const std::string& token);
  static VarietySpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  bool has_symbolic_class() const;
  // Throws std::domain_error when the dimension is not determined
  // (affine systems without a declared dimension).
  int dimension() const;
  std::string display_name() const;
};

// Class of the spec under the measure; throws for affine systems.
template <typename M>
MotiveScalar<M> variety_class(const VarietySpec& spec);

// A class with the hypotheses of the stabilization theorems attached.
template <typename M>
struct VarietyClass {
  MotiveScalar<M> cls;
  int dim = 0;
  std::string name;
  bool smooth_connected = true;  // caller-asserted hypothesis

  static VarietyClass from_spec(const VarietySpec& spec) {
    return VarietyClass{variety_class<M>(spec), spec.dimension(),
                        spec.display_name(), true};
  }
};

extern template MotiveScalar<CountMeasure> variety_class<CountMeasure>(const VarietySpec&);
extern template MotiveScalar<HodgeMeasure> variety_class<HodgeMeasure>(const VarietySpec&);

}  // namespace motconf
