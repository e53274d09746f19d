#include "motconf/variety.hpp"

#include <algorithm>
#include <sstream>

namespace motconf {

VarietySpec VarietySpec::affine(int d) {
  if (d < 0) throw std::invalid_argument("affine_space: negative dimension");
  VarietySpec s;
  s.kind = Kind::affine_space;
  s.dim_param = d;
  return s;
}

VarietySpec VarietySpec::projective(int d) {
  if (d < 0) throw std::invalid_argument("projective_space: negative dimension");
  VarietySpec s;
  s.kind = Kind::projective_space;
  s.dim_param = d;
  return s;
}

VarietySpec VarietySpec::torus(int d) {
  if (d < 1) throw std::invalid_argument("torus: dimension must be >= 1");
  VarietySpec s;
  s.kind = Kind::torus;
  s.dim_param = d;
  return s;
}

VarietySpec VarietySpec::product_of(std::vector<VarietySpec> parts) {
  if (parts.empty()) return point();
  if (parts.size() == 1) return parts[0];
  VarietySpec s;
  s.kind = Kind::product;
  s.children = std::move(parts);
  return s;
}

VarietySpec VarietySpec::disjoint_union_of(std::vector<VarietySpec> parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint_union: empty");
  if (parts.size() == 1) return parts[0];
  VarietySpec s;
  s.kind = Kind::disjoint_union;
  s.children = std::move(parts);
  return s;
}

VarietySpec VarietySpec::complement_of(VarietySpec ambient_v, VarietySpec closed) {
  VarietySpec s;
  s.kind = Kind::complement;
  s.children.push_back(std::move(ambient_v));
  s.children.push_back(std::move(closed));
  return s;
}

VarietySpec VarietySpec::system(int ambient, std::vector<std::string> equations,
                                std::vector<std::string> inequations,
                                std::optional<int> declared_dim,
                                std::vector<std::string> var_names) {
  if (ambient < 1) throw std::invalid_argument("affine_system: ambient must be >= 1");
  if (var_names.empty())
    for (int i = 1; i <= ambient; ++i) var_names.push_back("x" + std::to_string(i));
  if (static_cast<int>(var_names.size()) != ambient)
    throw std::invalid_argument("affine_system: variable list does not match ambient");
  VarietySpec s;
  s.kind = Kind::affine_system;
  s.ambient = ambient;
  s.declared_dim = declared_dim;
  for (const auto& eq : equations)
    s.equations.push_back(parse_int_polynomial(eq, var_names));
  for (const auto& ineq : inequations)
    s.inequations.push_back(parse_int_polynomial(ineq, var_names));
  return s;
}

VarietySpec VarietySpec::parse_builtin(const std::string& token) {
  // '*'-joined product of atoms
  std::vector<VarietySpec> parts;
  size_t start = 0;
  while (start <= token.size()) {
    size_t end = token.find('*', start);
    std::string atom = token.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    // trim
    while (!atom.empty() && std::isspace(static_cast<unsigned char>(atom.front())))
      atom.erase(atom.begin());
    while (!atom.empty() && std::isspace(static_cast<unsigned char>(atom.back())))
      atom.pop_back();
    if (atom.empty()) throw std::invalid_argument("empty builtin token");

    std::string name = atom;
    int d = 1;
    if (auto colon = atom.find(':'); colon != std::string::npos) {
      name = atom.substr(0, colon);
      d = std::stoi(atom.substr(colon + 1));
    }
    if (name == "point")
      parts.push_back(point());
    else if (name == "affine_space")
      parts.push_back(affine(d));
    else if (name == "projective_space")
      parts.push_back(projective(d));
    else if (name == "torus")
      parts.push_back(torus(d));
    else
      throw std::invalid_argument("unknown builtin '" + name + "'");
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return product_of(std::move(parts));
}

VarietySpec VarietySpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("variety spec: expected object");
  if (j.contains("builtin")) {
    std::string name = j.at("builtin").get<std::string>();
    int d = j.value("dim", 1);
    if (name == "point") return point();
    if (name == "affine_space") return affine(d);
    if (name == "projective_space") return projective(d);
    if (name == "torus") return torus(d);
    throw std::invalid_argument("unknown builtin '" + name + "'");
  }
  if (j.contains("affine_system")) {
    const auto& sys = j.at("affine_system");
    std::vector<std::string> eqs, ineqs, vars;
    for (const auto& e : sys.value("equations", nlohmann::json::array()))
      eqs.push_back(e.get<std::string>());
    for (const auto& e : sys.value("inequations", nlohmann::json::array()))
      ineqs.push_back(e.get<std::string>());
    for (const auto& v : sys.value("variables", nlohmann::json::array()))
      vars.push_back(v.get<std::string>());
    std::optional<int> dim;
    if (sys.contains("dim")) dim = sys.at("dim").get<int>();
    return system(sys.at("ambient").get<int>(), eqs, ineqs, dim, vars);
  }
  if (j.contains("product")) {
    std::vector<VarietySpec> parts;
    for (const auto& c : j.at("product")) parts.push_back(from_json(c));
    return product_of(std::move(parts));
  }
  if (j.contains("disjoint_union")) {
    std::vector<VarietySpec> parts;
    for (const auto& c : j.at("disjoint_union")) parts.push_back(from_json(c));
    return disjoint_union_of(std::move(parts));
  }
  if (j.contains("complement")) {
    const auto& c = j.at("complement");
    return complement_of(from_json(c.at("ambient")), from_json(c.at("closed")));
  }
  throw std::invalid_argument("variety spec: unrecognized shape");
}

nlohmann::json VarietySpec::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case Kind::point:
      j["builtin"] = "point";
      break;
    case Kind::affine_space:
      j["builtin"] = "affine_space";
      j["dim"] = dim_param;
      break;
    case Kind::projective_space:
      j["builtin"] = "projective_space";
      j["dim"] = dim_param;
      break;
    case Kind::torus:
      j["builtin"] = "torus";
      j["dim"] = dim_param;
      break;
    case Kind::affine_system: {
      nlohmann::json sys;
      sys["ambient"] = ambient;
      sys["equations"] = nlohmann::json::array();
      for (const auto& e : equations) sys["equations"].push_back(e.source);
      sys["inequations"] = nlohmann::json::array();
      for (const auto& e : inequations) sys["inequations"].push_back(e.source);
      if (declared_dim) sys["dim"] = *declared_dim;
      j["affine_system"] = sys;
      break;
    }
    case Kind::product:
    case Kind::disjoint_union: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : children) arr.push_back(c.to_json());
      j[kind == Kind::product ? "product" : "disjoint_union"] = arr;
      break;
    }
    case Kind::complement:
      j["complement"] = {{"ambient", children[0].to_json()},
                         {"closed", children[1].to_json()}};
      break;
  }
  return j;
}

bool VarietySpec::has_symbolic_class() const {
  switch (kind) {
    case Kind::affine_system:
      return false;
    case Kind::product:
    case Kind::disjoint_union:
    case Kind::complement:
      return std::all_of(children.begin(), children.end(),
                         [](const VarietySpec& c) { return c.has_symbolic_class(); });
    default:
      return true;
  }
}

int VarietySpec::dimension() const {
  switch (kind) {
    case Kind::point:
      return 0;
    case Kind::affine_space:
    case Kind::projective_space:
    case Kind::torus:
      return dim_param;
    case Kind::affine_system:
      if (declared_dim) return *declared_dim;
      throw std::domain_error("dimension: affine system carries no declared dim");
    case Kind::product: {
      int d = 0;
      for (const auto& c : children) d += c.dimension();
      return d;
    }
    case Kind::disjoint_union: {
      int d = 0;
      for (const auto& c : children) d = std::max(d, c.dimension());
      return d;
    }
    case Kind::complement:
      // the open part of the scissor relation keeps the ambient dimension
      return children[0].dimension();
  }
  throw std::logic_error("dimension: bad kind");
}

std::string VarietySpec::display_name() const {
  switch (kind) {
    case Kind::point:
      return "point";
    case Kind::affine_space:
      return "A^" + std::to_string(dim_param);
    case Kind::projective_space:
      return "P^" + std::to_string(dim_param);
    case Kind::torus:
      return dim_param == 1 ? "G_m" : "G_m^" + std::to_string(dim_param);
    case Kind::affine_system:
      return "V(system)";
    case Kind::product: {
      std::string s;
      for (size_t i = 0; i < children.size(); ++i)
        s += (i ? " x " : "") + children[i].display_name();
      return s;
    }
    case Kind::disjoint_union: {
      std::string s;
      for (size_t i = 0; i < children.size(); ++i)
        s += (i ? " + " : "") + children[i].display_name();
      return s;
    }
    case Kind::complement:
      return children[0].display_name() + " \\ " + children[1].display_name();
  }
  return "?";
}

template <typename M>
MotiveScalar<M> variety_class(const VarietySpec& spec) {
  using S = MotiveScalar<M>;
  switch (spec.kind) {
    case VarietySpec::Kind::point:
      return S(1);
    case VarietySpec::Kind::affine_space:
      return S::lefschetz_pow(spec.dim_param);
    case VarietySpec::Kind::projective_space: {
      S acc;
      for (int i = 0; i <= spec.dim_param; ++i) acc = acc + S::lefschetz_pow(i);
      return acc;
    }
    case VarietySpec::Kind::torus: {
      S gm = S::lefschetz() - S(1);
      return gm.pow(static_cast<unsigned>(spec.dim_param));
    }
    case VarietySpec::Kind::product: {
      S acc(1);
      for (const auto& c : spec.children) acc = acc * variety_class<M>(c);
      return acc;
    }
    case VarietySpec::Kind::disjoint_union: {
      S acc;
      for (const auto& c : spec.children) acc = acc + variety_class<M>(c);
      return acc;
    }
    case VarietySpec::Kind::complement:
      return variety_class<M>(spec.children[0]) - variety_class<M>(spec.children[1]);
    case VarietySpec::Kind::affine_system:
      throw std::domain_error(
          "variety_class: affine systems have no symbolic class; "
          "use the finite-field oracle");
  }
  throw std::logic_error("variety_class: bad kind");
}

template MotiveScalar<CountMeasure> variety_class<CountMeasure>(const VarietySpec&);
template MotiveScalar<HodgeMeasure> variety_class<HodgeMeasure>(const VarietySpec&);

}  // namespace motconf
